//! The Harish-Chandra projection onto S(a) and the ghost machinery: the
//! ghost generator v_{k'}, ghost images HC(v_{k'}·z), the ghost-algebra
//! product for interlaced pairs, and the twisted generators of special pairs.
//!
//! Conventions (the single place sign conventions enter):
//! - HC = antipode ∘ projection: project a normal form in the Iwasawa
//!   ordering n < a < k onto its pure-a monomials, then scale every
//!   degree-d monomial by (-1)^d;
//! - the ghost generator is the unique k'-invariant of U(g)/U(g)k whose
//!   expansion over ordered products of the p_1 basis has coefficient 1 on
//!   the full product x_k y_k ··· x_1 y_1; its lower-order terms are solved
//!   for by exact linear algebra (the bare product alone is not invariant);
//! - reported polynomials are normalized monic, with the discarded scalar
//!   carried alongside.

use crate::catalog::PairDescriptor;
use crate::linalg::{self, Matrix};
use crate::matrix::Parity;
use crate::pairs::{realize_pair, SymmetricPair};
use crate::poly::Polynomial;
use crate::scalar::{Gq, Rat};
use crate::uea::{self, Ordering, PBWElement, Section};
use crate::{Error, Result};
use num_traits::{Signed, Zero};
use std::collections::BTreeMap;
use std::sync::Arc;

/// Which even factor of g_0 a factor Casimir lives in.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FactorBlock {
    /// gl(m) or so(m): the even-index matrix block.
    EvenBlock,
    /// gl(n) or sp(2n): the odd-index matrix block.
    OddBlock,
}

/// A k'-invariant class in U(g)/U(g)k with its Harish-Chandra image.
#[derive(Clone)]
pub struct GhostElement {
    pub representative: PBWElement,
    pub hc_image: Polynomial,
    pub invariance_checked: bool,
}

/// Everything needed to compute Harish-Chandra projections for one pair:
/// the realized pair, its Iwasawa PBW ordering, and the linear map from
/// a-letters to the catalog t-coordinates.
pub struct PairContext {
    pub pair: SymmetricPair,
    pub ordering: Arc<Ordering>,
    pub t_names: Vec<String>,
    /// a_in_t[i][j]: the i-th a-letter equals Σ_j a_in_t[i][j]·t_j as a
    /// linear function on a*.
    a_in_t: Vec<Vec<Gq>>,
    a_letter_range: std::ops::Range<usize>,
}

impl PairContext {
    pub fn new(pair: SymmetricPair) -> Result<PairContext> {
        let letters = pair.iwasawa_letters()?;
        let a_start = letters.iter().position(|(_, s, _)| *s == Section::A).unwrap_or(0);
        let a_len = pair.rank();
        let ordering = Ordering::new(&pair.alg, letters)?;
        // Express each a-basis element in the t-basis.
        let t_cols: Vec<Vec<Gq>> = pair
            .desc
            .t_basis
            .iter()
            .map(|t| pair.alg.coords(t))
            .collect::<Result<_>>()?;
        let a_in_t = if a_len == 0 {
            vec![]
        } else {
            let solver = linalg::ColumnSolver::new(&t_cols, pair.alg.dim());
            pair.a_basis
                .iter()
                .map(|a| {
                    let c = pair.alg.coords(a)?;
                    solver.solve(&c).ok_or_else(|| {
                        Error::Internal("a-basis outside the t-basis span".into())
                    })
                })
                .collect::<Result<_>>()?
        };
        Ok(PairContext {
            t_names: pair.desc.t_names.clone(),
            pair,
            ordering,
            a_in_t,
            a_letter_range: a_start..a_start + a_len,
        })
    }

    pub fn from_descriptor(desc: &PairDescriptor) -> Result<PairContext> {
        PairContext::new(realize_pair(desc)?)
    }

    pub fn from_slug(slug: &str) -> Result<PairContext> {
        let desc = crate::catalog::find_descriptor(slug)?;
        PairContext::from_descriptor(&desc)
    }

    pub fn one(&self) -> PBWElement {
        PBWElement::one(self.ordering.clone())
    }

    /// Degree-1 PBW element from algebra coordinates.
    pub fn element_from_alg_coords(&self, v: &[Gq]) -> PBWElement {
        let lc = linalg::mat_vec(&self.ordering.alg_to_letters, v);
        PBWElement::from_letter_coords(self.ordering.clone(), &lc)
    }

    /// Harish-Chandra projection: pure-a part of the normal form, with the
    /// antipode sign (-1)^deg, written in the catalog t-coordinates.
    pub fn hc_project(&self, u: &PBWElement) -> Result<Polynomial> {
        if u.ordering.id != self.ordering.id {
            return Err(Error::OrderingMismatch);
        }
        let pure = u.pure_a_part();
        let mut out = Polynomial::zero(self.t_names.clone());
        for (exp, c) in &pure.terms {
            let mut term = Polynomial::constant(self.t_names.clone(), c.clone());
            let mut degree = 0u32;
            for (pos, &e) in exp.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let a_idx = pos - self.a_letter_range.start;
                let lin = Polynomial::affine(self.t_names.clone(), &self.a_in_t[a_idx], Gq::zero());
                term = term.mul(&lin.pow(e as u32));
                degree += e as u32;
            }
            if degree % 2 == 1 {
                term = term.scale(&-Gq::one());
            }
            out = out.add(&term);
        }
        Ok(out)
    }

    /// The Casimir Ω of g (dual bases with respect to the supertrace form).
    pub fn casimir(&self) -> Result<PBWElement> {
        uea::casimir(&self.ordering, None)
    }

    /// The Casimir Ω_0 of the even part g_0.
    pub fn casimir_even(&self) -> Result<PBWElement> {
        let idx: Vec<u16> = (0..self.ordering.len() as u16)
            .filter(|&i| self.ordering.parity_of(i) == Parity::Even)
            .collect();
        uea::casimir(&self.ordering, Some(&idx))
    }

    /// The Casimir of one even factor (gl(m)/so(m) or gl(n)/sp(2n) block).
    pub fn casimir_factor(&self, block: FactorBlock) -> Result<PBWElement> {
        let m = self.pair.alg.m_even;
        let idx: Vec<u16> = (0..self.ordering.len() as u16)
            .filter(|&i| {
                if self.ordering.parity_of(i) != Parity::Even {
                    return false;
                }
                let mat = &self.ordering.letters[i as usize].matrix;
                let d = mat.dim();
                let mut in_even = false;
                let mut in_odd = false;
                for a in 0..d {
                    for b in 0..d {
                        if !mat[(a, b)].is_zero() {
                            if a < m && b < m {
                                in_even = true;
                            } else {
                                in_odd = true;
                            }
                        }
                    }
                }
                match block {
                    FactorBlock::EvenBlock => in_even && !in_odd,
                    FactorBlock::OddBlock => in_odd && !in_even,
                }
            })
            .collect();
        if idx.is_empty() {
            return Err(Error::SingularGram);
        }
        uea::casimir(&self.ordering, Some(&idx))
    }

    /// The x_i = e_{α_i} - θe_{α_i}, y_i = e_{-α_i} - θe_{-α_i} basis of p_1,
    /// in the product order x_k, y_k, ..., x_1, y_1, together with the orbit
    /// representatives α_i (algebra basis indices).
    pub fn p1_xy_basis(&self) -> Result<(Vec<PBWElement>, Vec<usize>)> {
        let pair = &self.pair;
        let dim = pair.alg.dim();
        // S = positive odd roots with θα ≠ α
        let mut s_roots: Vec<usize> = Vec::new();
        for root in &pair.alg.root_datum.roots {
            if root.parity != Parity::Odd {
                continue;
            }
            let idx = root.space[0];
            let Some(values) = pair.restriction_of(idx) else { continue };
            if !crate::pairs::lex_positive(&values) {
                continue;
            }
            if pair.theta_weight(&root.weight) != root.weight {
                s_roots.push(idx);
            }
        }
        // sort by weight lex descending for determinism
        s_roots.sort_by(|&a, &b| pair.alg.weight[b].cmp(&pair.alg.weight[a]));
        // orbit pairing under α ↦ -θα
        let mut used = vec![false; dim];
        let mut reps: Vec<usize> = Vec::new();
        for &i in &s_roots {
            if used[i] {
                continue;
            }
            used[i] = true;
            let img = pair.theta_weight(&pair.alg.weight[i]);
            let neg: Vec<Rat> = img.iter().map(|x| -x.clone()).collect();
            let j = s_roots
                .iter()
                .copied()
                .find(|&j| pair.alg.weight[j] == neg)
                .ok_or_else(|| Error::Internal("-θ does not preserve S".into()))?;
            if i == j {
                return Err(Error::Internal("-θ has a fixed point on S".into()));
            }
            used[j] = true;
            reps.push(i);
        }
        if 4 * reps.len() != 2 * pair.dim_p1() {
            return Err(Error::Internal(format!(
                "x/y basis count {} does not match dim p_1 = {}",
                2 * reps.len(),
                pair.dim_p1()
            )));
        }
        // x_i, y_i from each representative; product order x_k y_k ... x_1 y_1
        let mut elems = Vec::new();
        for &alpha in reps.iter().rev() {
            for sign in [1i64, -1] {
                // root vector of ±α
                let w: Vec<Rat> = pair.alg.weight[alpha]
                    .iter()
                    .map(|x| if sign > 0 { x.clone() } else { -x.clone() })
                    .collect();
                let ridx = (0..dim)
                    .find(|&k| pair.alg.weight[k] == w && pair.alg.parity[k] == Parity::Odd)
                    .ok_or_else(|| Error::Internal("missing opposite root".into()))?;
                let mut v = vec![Gq::zero(); dim];
                v[ridx] = Gq::one();
                let th = pair.theta_coords(&v);
                let x: Vec<Gq> = v.iter().zip(&th).map(|(a, b)| a - b).collect();
                elems.push(self.element_from_alg_coords(&x));
            }
        }
        Ok((elems, reps.into_iter().rev().collect()))
    }

    /// Solve for the invariant with leading coefficient 1 on the full ordered
    /// product of `gens`, inside the span of ordered subset products,
    /// invariant under left multiplication by every element of `under`.
    fn solve_invariant(&self, gens: &[PBWElement], under: &[PBWElement]) -> Result<PBWElement> {
        let k = gens.len();
        let nmask = 1usize << k;
        // ordered subset products, reduced mod U(g)k
        let mut products: Vec<PBWElement> = Vec::with_capacity(nmask);
        for mask in 0..nmask {
            let mut acc = self.one();
            for (i, g) in gens.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    acc = acc.multiply(g)?;
                }
            }
            products.push(acc.reduce_mod_uk());
        }
        // invariance equations
        let mut row_index: BTreeMap<(usize, Vec<u8>), usize> = BTreeMap::new();
        let mut rows: Matrix = Vec::new();
        for (w_idx, w) in under.iter().enumerate() {
            for (mask, p) in products.iter().enumerate() {
                let image = w.multiply(p)?.reduce_mod_uk();
                for (mono, c) in &image.terms {
                    let key = (w_idx, mono.clone());
                    let row = *row_index.entry(key).or_insert_with(|| {
                        rows.push(vec![Gq::zero(); nmask]);
                        rows.len() - 1
                    });
                    rows[row][mask] = &rows[row][mask] + c;
                }
            }
        }
        let null = linalg::nullspace(&rows, nmask);
        if null.len() != 1 {
            return Err(Error::InvarianceFailure(format!(
                "{}: invariant space has dimension {} (expected 1)",
                self.pair.desc.slug,
                null.len()
            )));
        }
        let v = &null[0];
        let full = nmask - 1;
        if v[full].is_zero() {
            return Err(Error::InvarianceFailure(format!(
                "{}: invariant has no leading product term",
                self.pair.desc.slug
            )));
        }
        let scale = v[full].inv();
        let mut rep = PBWElement::zero(self.ordering.clone());
        for (mask, p) in products.iter().enumerate() {
            if !v[mask].is_zero() {
                rep = rep.add(&p.scale(&(&v[mask] * &scale)))?;
            }
        }
        Ok(rep)
    }

    /// Degree-1 elements of the k'-basis.
    fn k_prime_elements(&self) -> Vec<PBWElement> {
        self.pair
            .k_prime_basis()
            .iter()
            .map(|v| self.element_from_alg_coords(v))
            .collect()
    }

    /// The ghost generator v_{k'}: ordered product of the p_1 basis plus
    /// solved lower-order terms, verified k'-invariant, with its HC image.
    pub fn ghost_generator(&self) -> Result<GhostElement> {
        let (gens, _) = self.p1_xy_basis()?;
        let under = self.k_prime_elements();
        let rep = self.solve_invariant(&gens, &under)?;
        for w in &under {
            if !w.multiply(&rep)?.reduce_mod_uk().is_zero() {
                return Err(Error::InvarianceFailure(format!(
                    "{}: solved ghost generator fails re-check",
                    self.pair.desc.slug
                )));
            }
        }
        let hc_image = self.hc_project(&rep)?;
        Ok(GhostElement { representative: rep, hc_image, invariance_checked: true })
    }

    /// Is the class of z (an even element) k_0-invariant mod U(g)k?
    pub fn check_even_invariant(&self, z: &PBWElement) -> Result<()> {
        let all_even = z.terms.keys().all(|e| {
            e.iter()
                .enumerate()
                .all(|(i, &x)| x == 0 || self.ordering.parity_of(i as u16) == Parity::Even)
        });
        if !all_even {
            return Err(Error::NonHomogeneous("ghost_hc input must be even".into()));
        }
        let zr = z.reduce_mod_uk();
        for v in &self.pair.k_even {
            let w = self.element_from_alg_coords(v);
            if !w.multiply(&zr)?.reduce_mod_uk().is_zero() {
                return Err(Error::InvarianceFailure(
                    "ghost_hc input is not k_0-invariant mod U(g)k".into(),
                ));
            }
        }
        Ok(())
    }

    /// HC(v_{k'}·z) for a k_0-invariant even z, with the representative.
    pub fn ghost_hc(&self, ghost: &GhostElement, z: &PBWElement) -> Result<(PBWElement, Polynomial)> {
        self.check_even_invariant(z)?;
        let rep = ghost.representative.multiply(&z.reduce_mod_uk())?.reduce_mod_uk();
        let hc = self.hc_project(&rep)?;
        Ok((rep, hc))
    }

    /// The interlacing automorphism as a map on letters (column j = image of
    /// letter j), for use with `PBWElement::apply_linear`.
    pub fn interlacing_phi_letters(&self) -> Result<Matrix> {
        let phi = crate::pairs::interlacing_automorphism(&self.pair)?;
        let tmp = linalg::mat_mul(&phi, &self.ordering.letters_to_alg);
        Ok(linalg::mat_mul(&self.ordering.alg_to_letters, &tmp))
    }

    /// Ghost product u1·u2 = φ(u1)·u2 of the interlaced ghost algebra:
    /// representative, HC image, and exact k-invariance of the result.
    pub fn ghost_product(&self, u1: &GhostElement, u2: &GhostElement) -> Result<(PBWElement, Polynomial)> {
        if !crate::pairs::is_interlaced(&self.pair)? {
            return Err(Error::NotInterlaced(self.pair.desc.slug.clone()));
        }
        let phi = self.interlacing_phi_letters()?;
        let twisted = u1.representative.apply_linear(&phi)?;
        let rep = twisted.multiply(&u2.representative)?.reduce_mod_uk();
        let hc = self.hc_project(&rep)?;
        Ok((rep, hc))
    }

    /// Exact k-invariance test of a class representative (membership in the
    /// Z side of the ghost centre).
    pub fn is_k_invariant(&self, rep: &PBWElement) -> Result<bool> {
        let r = rep.reduce_mod_uk();
        for v in self.pair.k_basis() {
            let w = self.element_from_alg_coords(&v);
            if !w.multiply(&r)?.reduce_mod_uk().is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// A Lemma-5.1 style witness that `rep` is not fully k-invariant:
    /// an element of the k_1 ∪ p_0 basis with x·rep ∉ U(g)k.
    pub fn non_z_witness(&self, rep: &PBWElement) -> Result<Option<String>> {
        let r = rep.reduce_mod_uk();
        for (label, v) in self
            .pair
            .k_odd
            .iter()
            .enumerate()
            .map(|(i, v)| (format!("k1[{i}]"), v))
            .chain(self.pair.p_even.iter().enumerate().map(|(i, v)| (format!("p0[{i}]"), v)))
        {
            let w = self.element_from_alg_coords(v);
            if !w.multiply(&r)?.reduce_mod_uk().is_zero() {
                return Ok(Some(label));
            }
        }
        Ok(None)
    }

    /// Same witness restricted to the p_0 basis (the spec's Lemma 5.1 form).
    pub fn p0_witness(&self, rep: &PBWElement) -> Result<Option<String>> {
        let r = rep.reduce_mod_uk();
        for (i, v) in self.pair.p_even.iter().enumerate() {
            let w = self.element_from_alg_coords(v);
            if !w.multiply(&r)?.reduce_mod_uk().is_zero() {
                return Ok(Some(format!("p0[{i}]")));
            }
        }
        Ok(None)
    }

    /// Twisted ghost generator of a special pair for the twist scalar c
    /// (c ∉ {0, ±1}): invariant under φ_c(k), leading term the ordered
    /// product of the twisted odd basis.
    pub fn twisted_ghost_generator(&self, c: &Gq) -> Result<GhostElement> {
        if !self.pair.desc.special {
            return Err(Error::NotSpecial(self.pair.desc.slug.clone()));
        }
        if c.is_zero() || *c == Gq::one() || *c == -Gq::one() {
            return Err(Error::NotSpecial(format!(
                "twist scalar must lie outside {{0, 1, -1}}, got {c}"
            )));
        }
        let twisted = self.pair.twisted_odd_basis(c)?;
        let gens: Vec<PBWElement> = twisted
            .iter()
            .map(|(_, v)| self.element_from_alg_coords(v))
            .collect();
        let mut under: Vec<PBWElement> = self
            .pair
            .k_even
            .iter()
            .map(|v| self.element_from_alg_coords(v))
            .collect();
        under.extend(gens.iter().cloned());
        let rep = self.solve_invariant(&gens, &under)?;
        let hc_image = self.hc_project(&rep)?;
        Ok(GhostElement { representative: rep, hc_image, invariance_checked: true })
    }

    /// Quotient monomials (no k-letters) of filtration degree ≤ max_halves/2,
    /// prefiltered to weight zero under the toral part of k_0 (a necessary
    /// condition for appearing in a k'-invariant).
    fn quotient_monomials(&self, max_halves: i64) -> Vec<Vec<u8>> {
        let nl = self.ordering.len();
        let letters: Vec<(usize, i64)> = (0..nl)
            .filter(|&i| self.ordering.section_of(i as u16) != Section::K)
            .map(|i| {
                let unit = if self.ordering.parity_of(i as u16) == Parity::Even { 2 } else { 1 };
                (i, unit)
            })
            .collect();
        // toral part of k_0: θ-fixed Cartan elements
        let alg = &self.pair.alg;
        let mut t_part: Vec<crate::matrix::SuperMatrix> = Vec::new();
        for &c in &alg.cartan {
            let mut v = vec![Gq::zero(); alg.dim()];
            v[c] = Gq::one();
            let th = self.pair.theta_coords(&v);
            let sum: Vec<Gq> = v.iter().zip(&th).map(|(a, b)| a + b).collect();
            if sum.iter().any(|x| !x.is_zero()) {
                t_part.push(alg.from_coords(&sum));
            }
        }
        let letter_weights: Vec<Vec<Rat>> = letters
            .iter()
            .map(|&(i, _)| {
                let coords = &self.ordering.letters[i].coords;
                // letters are weight-homogeneous combinations; take any support weight
                let idx = coords.iter().position(|c| !c.is_zero()).unwrap();
                alg.weight[idx].clone()
            })
            .collect();
        let mut out = Vec::new();
        let mut current = vec![0u8; nl];
        fn recurse(
            pos: usize,
            halves_left: i64,
            letters: &[(usize, i64)],
            letter_weights: &[Vec<Rat>],
            current: &mut Vec<u8>,
            out: &mut Vec<Vec<u8>>,
            ctx: &PairContext,
            t_part: &[crate::matrix::SuperMatrix],
        ) {
            if pos == letters.len() {
                // weight-zero prefilter under the toral part of k_0
                let nweights = letter_weights.first().map(|w| w.len()).unwrap_or(0);
                let mut total = vec![Rat::zero(); nweights];
                for (k, &(i, _)) in letters.iter().enumerate() {
                    let e = current[i] as i64;
                    if e != 0 {
                        for (t, w) in total.iter_mut().zip(&letter_weights[k]) {
                            *t += w * &Rat::from_integer(e.into());
                        }
                    }
                }
                let ok = t_part
                    .iter()
                    .all(|h| ctx.pair.alg.eval_weight(&total, h).is_zero());
                if ok {
                    out.push(current.clone());
                }
                return;
            }
            let (idx, unit) = letters[pos];
            let max_e = if unit == 1 { 1 } else { halves_left / unit };
            for e in 0..=max_e {
                if e * unit > halves_left {
                    break;
                }
                current[idx] = e as u8;
                recurse(pos + 1, halves_left - e * unit, letters, letter_weights, current, out, ctx, t_part);
            }
            current[idx] = 0;
        }
        recurse(0, max_halves, &letters, &letter_weights, &mut current, &mut out, self, &t_part);
        out
    }

    /// An exact basis of the ghost distributions A = (U(g)/U(g)k)^{k'} up to
    /// filtration degree max_halves/2, by linear algebra over the quotient
    /// monomials.
    pub fn invariant_basis(&self, max_halves: i64) -> Result<Vec<PBWElement>> {
        let monos = self.quotient_monomials(max_halves);
        let under = self.k_prime_elements();
        let elems: Vec<PBWElement> = monos
            .iter()
            .map(|e| {
                let mut el = PBWElement::zero(self.ordering.clone());
                el.terms.insert(e.clone(), Gq::one());
                el
            })
            .collect();
        let mut row_index: BTreeMap<(usize, Vec<u8>), usize> = BTreeMap::new();
        let mut rows: Matrix = Vec::new();
        for (w_idx, w) in under.iter().enumerate() {
            for (col, el) in elems.iter().enumerate() {
                let image = w.multiply(el)?.reduce_mod_uk();
                for (mono, c) in &image.terms {
                    let key = (w_idx, mono.clone());
                    let row = *row_index.entry(key).or_insert_with(|| {
                        rows.push(vec![Gq::zero(); elems.len()]);
                        rows.len() - 1
                    });
                    rows[row][col] = &rows[row][col] + c;
                }
            }
        }
        let null = linalg::nullspace(&rows, elems.len());
        let mut out = Vec::new();
        for v in null {
            let mut el = PBWElement::zero(self.ordering.clone());
            for (col, c) in v.iter().enumerate() {
                if !c.is_zero() {
                    el.terms.insert(monos[col].clone(), c.clone());
                }
            }
            out.push(el);
        }
        Ok(out)
    }

    /// The linear forms λ ↦ λ(h̄_{α_i}) of the leading-term statement,
    /// oriented so that HC(v_{k'}·z) = (-1)^k·h̄_{α_k}···h̄_{α_1}·HC(z) + l.o.t.
    /// holds exactly for the generator normalized with coefficient 1 on the
    /// ordered product x_k y_k ··· x_1 y_1. With x_i = e_{α_i} - θe_{α_i} and
    /// that normalization, each straightening step x_i = 2e_{α_i} - (e_{α_i} +
    /// θe_{α_i}) contributes -(h_α - θh_α), so the matching orientation is
    /// h̄_α = θ[e_α, e_{-α}] - [e_α, e_{-α}].
    pub fn leading_forms(&self) -> Result<Vec<Polynomial>> {
        let (_, reps) = self.p1_xy_basis()?;
        let pair = &self.pair;
        let dim = pair.alg.dim();
        let mut out = Vec::new();
        for &alpha in &reps {
            let w = &pair.alg.weight[alpha];
            let neg: Vec<Rat> = w.iter().map(|x| -x.clone()).collect();
            let nidx = (0..dim)
                .find(|&k| pair.alg.weight[k] == neg && pair.alg.parity[k] == Parity::Odd)
                .ok_or_else(|| Error::Internal("missing opposite root".into()))?;
            let h = pair.alg.bracket(&pair.alg.basis[alpha], &pair.alg.basis[nidx])?;
            let h_coords = pair.alg.coords(&h)?;
            let th = pair.theta_coords(&h_coords);
            let hbar: Vec<Gq> = th.iter().zip(&h_coords).map(|(a, b)| a - b).collect();
            let hbar_mat = pair.alg.from_coords(&hbar);
            // hbar lies in a; express as a linear polynomial in the t-coordinates
            let t_cols: Vec<Vec<Gq>> = pair
                .desc
                .t_basis
                .iter()
                .map(|t| pair.alg.coords(t))
                .collect::<Result<_>>()?;
            let solver = linalg::ColumnSolver::new(&t_cols, dim);
            let coeffs = solver
                .solve(&pair.alg.coords(&hbar_mat)?)
                .ok_or_else(|| Error::Internal("h̄ is not in a".into()))?;
            out.push(Polynomial::affine(self.t_names.clone(), &coeffs, Gq::zero()));
        }
        Ok(out)
    }

    /// ρ̄ as a point of a* in t-coordinates.
    pub fn rho_bar_point(&self) -> Result<Vec<Gq>> {
        let rb = self
            .pair
            .restricted
            .rho_bar
            .clone()
            .ok_or_else(|| Error::NoIwasawa(self.pair.desc.slug.clone()))?;
        Ok(self.a_values_to_t_point(&rb))
    }

    /// Convert a covector on a (values on the a-basis) to t-coordinates.
    pub fn a_values_to_t_point(&self, values: &[Rat]) -> Vec<Gq> {
        // t-coordinates of λ are λ(t_j); we know λ(a_i). Each t_j is a
        // combination of a-basis elements: t_j = Σ_i c_{ji} a_i, so
        // λ(t_j) = Σ_i c_{ji}·λ(a_i).
        let pair = &self.pair;
        let a_cols: Vec<Vec<Gq>> = pair
            .a_basis
            .iter()
            .map(|a| pair.alg.coords(a).expect("a-basis in algebra"))
            .collect();
        let solver = linalg::ColumnSolver::new(&a_cols, pair.alg.dim());
        pair.desc
            .t_basis
            .iter()
            .map(|t| {
                let c = solver
                    .solve(&pair.alg.coords(t).expect("t-basis in algebra"))
                    .expect("t-basis in a-span");
                let mut acc = Gq::zero();
                for (ci, vi) in c.iter().zip(values) {
                    acc += &(ci * &Gq::from_rat(vi.clone()));
                }
                acc
            })
            .collect()
    }

    /// A restricted root as a point of a* in t-coordinates.
    pub fn class_to_t_point(&self, values: &[Rat]) -> Vec<Gq> {
        self.a_values_to_t_point(values)
    }

    /// The induced form on a* in t-coordinates: (λ, μ) = λ_vec·M·μ_vec.
    pub fn a_star_form(&self) -> Result<Matrix> {
        // Gram of the t-basis under the supertrace form, inverted.
        let pair = &self.pair;
        let r = pair.desc.t_basis.len();
        let mut g = vec![vec![Gq::zero(); r]; r];
        for i in 0..r {
            for j in 0..r {
                g[i][j] = pair
                    .alg
                    .supertrace_form(&pair.desc.t_basis[i], &pair.desc.t_basis[j])?;
            }
        }
        linalg::invert(&g).ok_or(Error::SingularGram)
    }

    /// Positive restricted-root classes in lex order (largest first).
    pub fn positive_classes(&self) -> Vec<&crate::pairs::RestrictedRoot> {
        let mut v: Vec<&crate::pairs::RestrictedRoot> = self
            .pair
            .restricted
            .classes
            .iter()
            .filter(|c| crate::pairs::lex_positive(&c.values))
            .collect();
        v.sort_by(|a, b| b.values.cmp(&a.values));
        v
    }
}

/// Scalar version of ρ̄ for rank-one sanity checks in tests.
pub fn rho_bar_scalar(ctx: &PairContext) -> Option<Rat> {
    let p = ctx.rho_bar_point().ok()?;
    if p.len() != 1 {
        return None;
    }
    debug_assert!(p[0].is_real());
    Some(p[0].re.clone())
}

/// True iff the rational is a nonnegative integer (helper for tests).
pub fn is_nonneg_int(r: &Rat) -> bool {
    r.is_integer() && !r.is_negative()
}
