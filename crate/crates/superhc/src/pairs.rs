//! Supersymmetric pairs: involution realization, k/p/k' split, Cartan
//! subspace, restricted roots, Iwasawa test, interlacing automorphisms and
//! the twisted subalgebras of special pairs.

use crate::liealg::{AlgFamily, Superalgebra};
use crate::linalg::{self, Matrix};
use crate::matrix::{Parity, SuperMatrix};
use crate::scalar::{Gq, Rat};
use crate::uea::Section;
use crate::{Error, Result};
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

pub use crate::catalog::{catalog, find_descriptor, FamilyRow, GoldenTarget, PairDescriptor};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub enum InvolutionSpec {
    ConjugationBy(SuperMatrix),
    NegSuperTransposeConjugationBy(SuperMatrix),
}

impl InvolutionSpec {
    pub fn apply(&self, x: &SuperMatrix) -> Result<SuperMatrix> {
        match self {
            InvolutionSpec::ConjugationBy(s) => {
                let s_inv = matrix_inverse(s).ok_or_else(|| {
                    Error::InvolutionInvalid("conjugating matrix is singular".into())
                })?;
                Ok(&(s * x) * &s_inv)
            }
            InvolutionSpec::NegSuperTransposeConjugationBy(s) => {
                let s_inv = matrix_inverse(s).ok_or_else(|| {
                    Error::InvolutionInvalid("conjugating matrix is singular".into())
                })?;
                Ok(-&(&(s * &x.supertranspose()) * &s_inv))
            }
        }
    }
}

pub fn matrix_inverse(s: &SuperMatrix) -> Option<SuperMatrix> {
    let d = s.dim();
    let rows: Matrix = (0..d).map(|i| (0..d).map(|j| s[(i, j)].clone()).collect()).collect();
    let inv = linalg::invert(&rows)?;
    let mut out = SuperMatrix::zero(s.m, s.n);
    for i in 0..d {
        for j in 0..d {
            out[(i, j)] = inv[i][j].clone();
        }
    }
    Some(out)
}

/// One restricted root class ᾱ (a nonzero joint eigenvalue vector of ad(a)).
#[derive(Clone, Debug)]
pub struct RestrictedRoot {
    /// Values of ᾱ on the ordered a-basis.
    pub values: Vec<Rat>,
    pub even_mult: usize,
    pub odd_mult: usize,
    /// ᾱ is the restriction of an even root (membership in Δ̄_ev).
    pub even_class: bool,
    /// Algebra basis indices of the root vectors in the class.
    pub root_indices: Vec<usize>,
}

impl RestrictedRoot {
    /// n_α = ½ dim(g_ᾱ)_1.
    pub fn n_alpha(&self) -> Rat {
        Rat::new((self.odd_mult as i64).into(), 2.into())
    }
}

#[derive(Clone, Debug)]
pub struct RestrictedRootDatum {
    pub classes: Vec<RestrictedRoot>,
    /// ρ̄ = restriction of the Iwasawa Borel's Weyl vector, as values on the
    /// a-basis. Present only when the pair has an Iwasawa decomposition.
    pub rho_bar: Option<Vec<Rat>>,
    /// Number of odd roots restricting to zero (obstruction to interlacing).
    pub zero_restriction_odd: usize,
}

impl RestrictedRootDatum {
    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Representatives of the even-class rays (one per ± pair, positive side).
    pub fn even_ray_reps(&self) -> Vec<Vec<Rat>> {
        let mut seen: Vec<Vec<Rat>> = Vec::new();
        for c in self.classes.iter().filter(|c| c.even_class && lex_positive(&c.values)) {
            let already = seen.iter().any(|v| proportional_rat(v, &c.values));
            if !already {
                seen.push(c.values.clone());
            }
        }
        seen
    }

    /// Σ of odd multiplicities over the ray through `v`, halved: the n_α used
    /// by the reflection condition of the invariance conjecture.
    pub fn ray_n_alpha(&self, v: &[Rat]) -> Rat {
        let mut total = 0usize;
        for c in &self.classes {
            if proportional_rat(&c.values, v) && positively_proportional(&c.values, v) {
                total += c.odd_mult;
            }
        }
        Rat::new((total as i64).into(), 2.into())
    }
}

pub fn lex_positive(v: &[Rat]) -> bool {
    for x in v {
        if !x.is_zero() {
            return x.is_positive();
        }
    }
    false
}

fn proportional_rat(a: &[Rat], b: &[Rat]) -> bool {
    // both nonzero; a = c·b for some rational c ≠ 0
    let Some(i) = b.iter().position(|x| !x.is_zero()) else {
        return false;
    };
    if a[i].is_zero() {
        return false;
    }
    let c = &a[i] / &b[i];
    a.iter().zip(b).all(|(x, y)| *x == y * &c)
}

fn positively_proportional(a: &[Rat], b: &[Rat]) -> bool {
    let Some(i) = b.iter().position(|x| !x.is_zero()) else {
        return false;
    };
    !a[i].is_zero() && (&a[i] / &b[i]).is_positive()
}

/// Iwasawa decomposition g = k ⊕ a ⊕ n, carrying the ordered PBW basis.
#[derive(Clone)]
pub struct IwasawaDecomposition {
    /// Algebra basis indices of the positive restricted root spaces.
    pub n_indices: Vec<usize>,
    /// Borel positive system on Δ: algebra basis indices of positive root vectors.
    pub borel_positive: Vec<usize>,
}

pub struct SymmetricPair {
    pub desc: PairDescriptor,
    pub alg: Superalgebra,
    /// θ as a matrix in algebra basis coordinates (column j = θ(b_j)).
    pub theta: Matrix,
    pub k_even: Vec<Vec<Gq>>,
    pub k_odd: Vec<Vec<Gq>>,
    pub p_even: Vec<Vec<Gq>>,
    pub p_odd: Vec<Vec<Gq>>,
    pub a_basis: Vec<SuperMatrix>,
    pub restricted: RestrictedRootDatum,
    pub iwasawa: Option<IwasawaDecomposition>,
}

impl SymmetricPair {
    pub fn dim_k(&self) -> usize {
        self.k_even.len() + self.k_odd.len()
    }

    pub fn dim_p1(&self) -> usize {
        self.p_odd.len()
    }

    pub fn rank(&self) -> usize {
        self.a_basis.len()
    }

    /// k' = k_0 ⊕ p_1 as coordinate vectors.
    pub fn k_prime_basis(&self) -> Vec<Vec<Gq>> {
        self.k_even.iter().chain(self.p_odd.iter()).cloned().collect()
    }

    pub fn k_basis(&self) -> Vec<Vec<Gq>> {
        self.k_even.iter().chain(self.k_odd.iter()).cloned().collect()
    }

    /// Apply θ to a coordinate vector.
    pub fn theta_coords(&self, v: &[Gq]) -> Vec<Gq> {
        linalg::mat_vec(&self.theta, v)
    }

    /// Restriction of a root (by algebra basis index) to the a-basis,
    /// or None for Cartan elements.
    pub fn restriction_of(&self, basis_idx: usize) -> Option<Vec<Rat>> {
        let w = &self.alg.weight[basis_idx];
        if w.iter().all(Rat::is_zero) {
            return None;
        }
        Some(self.restrict_weight(w))
    }

    pub fn restrict_weight(&self, w: &[Rat]) -> Vec<Rat> {
        self.a_basis
            .iter()
            .map(|a| {
                let v = self.alg.eval_weight(w, a);
                debug_assert!(v.is_real());
                v.re
            })
            .collect()
    }

    /// The ordered Iwasawa PBW letters (n < a < k), as algebra coordinates.
    pub fn iwasawa_letters(&self) -> Result<Vec<(String, Section, Vec<Gq>)>> {
        let iw = self
            .iwasawa
            .as_ref()
            .ok_or_else(|| Error::NoIwasawa(self.desc.slug.clone()))?;
        let dim = self.alg.dim();
        let mut letters = Vec::new();
        for (i, &idx) in iw.n_indices.iter().enumerate() {
            let mut c = vec![Gq::zero(); dim];
            c[idx] = Gq::one();
            letters.push((format!("n{}", i + 1), Section::N, c));
        }
        for (i, a) in self.a_basis.iter().enumerate() {
            letters.push((format!("a{}", i + 1), Section::A, self.alg.coords(a)?));
        }
        for (i, c) in self.k_even.iter().chain(self.k_odd.iter()).enumerate() {
            letters.push((format!("k{}", i + 1), Section::K, c.clone()));
        }
        Ok(letters)
    }

    /// Construct the k'-pair: same algebra and Cartan subspace, involution δ∘θ.
    pub fn k_prime_pair(&self) -> Result<SymmetricPair> {
        let dim = self.alg.dim();
        let mut theta_prime = self.theta.clone();
        for (row, rowv) in theta_prime.iter_mut().enumerate().take(dim) {
            if self.alg.parity[row] == Parity::Odd {
                for x in rowv.iter_mut() {
                    *x = -&*x;
                }
            }
        }
        let mut desc = self.desc.clone();
        desc.slug = format!("{}#kprime", self.desc.slug);
        realize_from_theta(desc, &self.alg_rebuilt()?, theta_prime)
    }

    fn alg_rebuilt(&self) -> Result<Superalgebra> {
        build_algebra(&self.desc)
    }

    /// Z-grading value (sum of ε-coordinates) of a root; the special families
    /// have g_{±1} = odd roots of value ±1.
    pub fn z_grading(&self, basis_idx: usize) -> i64 {
        let w = &self.alg.weight[basis_idx];
        let s: Rat = w.iter().take(self.alg.eps_count).fold(Rat::zero(), |acc, x| acc + x);
        debug_assert!(s.is_integer());
        s.to_integer().try_into().unwrap_or(0)
    }

    /// Basis of the twisted subalgebra φ_c(k) = k_0 ⊕ {e + c²·θe : e ∈ g_{-1}}
    /// of a special pair, as coordinate vectors (even part first).
    pub fn twisted_subalgebra(&self, c: &Gq) -> Result<Vec<Vec<Gq>>> {
        if !self.desc.special {
            return Err(Error::NotSpecial(self.desc.slug.clone()));
        }
        if c.is_zero() {
            return Err(Error::NotSpecial("twist scalar must be nonzero".into()));
        }
        let mut out = self.k_even.clone();
        out.extend(self.twisted_odd_basis(c)?.into_iter().map(|(_, v)| v));
        Ok(out)
    }

    /// The twisted odd basis in the order x_k, y_k, ..., x_1, y_1 of the
    /// injectivity argument, tagged with the defining root index.
    pub fn twisted_odd_basis(&self, c: &Gq) -> Result<Vec<(usize, Vec<Gq>)>> {
        let c2 = c * c;
        let dim = self.alg.dim();
        // -θ orbit representatives on Δ_{-1}
        let mut neg_roots: Vec<usize> = (0..dim)
            .filter(|&i| self.alg.parity[i] == Parity::Odd && self.z_grading(i) == -1)
            .collect();
        neg_roots.sort_by(|&a, &b| self.alg.weight[b].cmp(&self.alg.weight[a]));
        let mut used = vec![false; dim];
        let mut pairs = Vec::new();
        for &i in &neg_roots {
            if used[i] {
                continue;
            }
            used[i] = true;
            // partner: the root -θα, found via θ applied to weights
            let w_img = self.theta_weight(&self.alg.weight[i]);
            let neg_theta: Vec<Rat> = w_img.iter().map(|x| -x.clone()).collect();
            let j = neg_roots
                .iter()
                .copied()
                .find(|&j| self.alg.weight[j] == neg_theta)
                .ok_or_else(|| Error::Internal("-θ orbit not closed on Δ_{-1}".into()))?;
            if j == i {
                return Err(Error::Internal("-θ has a fixed point on Δ_{-1}".into()));
            }
            used[j] = true;
            pairs.push((i, j));
        }
        let mut out = Vec::new();
        for (alpha, beta) in pairs.into_iter().rev() {
            // x = e_α + c²θe_α  with α the orbit representative,
            // y = e_{-θα} + c²θe_{-θα} (the orbit partner).
            for &root in &[alpha, beta] {
                let mut v = vec![Gq::zero(); dim];
                v[root] = Gq::one();
                let th = self.theta_coords(&v);
                let tw: Vec<Gq> = v
                    .iter()
                    .zip(&th)
                    .map(|(x, y)| x + &(&c2 * y))
                    .collect();
                out.push((root, tw));
            }
        }
        // order as x_k, y_k, ..., x_1, y_1
        out.reverse();
        Ok(out)
    }

    /// Image of a weight under the automorphism of h* induced by θ.
    pub fn theta_weight(&self, w: &[Rat]) -> Vec<Rat> {
        // θ permutes root spaces: find θ(e_α)'s weight by applying θ to the
        // root vector and reading off the support.
        // For weights we use: (θw)(h) = w(θ(h)); evaluate on the Cartan basis
        // and solve. Cheaper and equivalent: apply θ to a root vector of
        // weight w. Here we only need it for actual roots.
        let dim = self.alg.dim();
        let idx = (0..dim)
            .find(|&i| &self.alg.weight[i] == w)
            .expect("theta_weight called on a non-root weight");
        let mut v = vec![Gq::zero(); dim];
        v[idx] = Gq::one();
        let img = self.theta_coords(&v);
        let support: Vec<usize> = (0..dim).filter(|&i| !img[i].is_zero()).collect();
        let w0 = self.alg.weight[support[0]].clone();
        debug_assert!(support.iter().all(|&i| self.alg.weight[i] == w0));
        w0
    }
}

pub fn build_algebra(desc: &PairDescriptor) -> Result<Superalgebra> {
    match &desc.family {
        FamilyRow::GlGl { m, n, .. } => crate::liealg::build_gl(*m, *n),
        FamilyRow::GlOsp { m, n } => crate::liealg::build_gl(*m, 2 * n),
        FamilyRow::OspOsp { m, n, .. } => crate::liealg::build_osp(*m, *n),
        FamilyRow::OspGl { m, n } => crate::liealg::build_osp(2 * m, *n),
        FamilyRow::Exceptional { .. } => Err(Error::NotRealizable(desc.slug.clone())),
    }
}

/// Realize a catalog pair: build the algebra, the involution, the eigenspace
/// split, the restricted root datum and (when it exists) the Iwasawa
/// decomposition.
pub fn realize_pair(desc: &PairDescriptor) -> Result<SymmetricPair> {
    if !desc.realizable {
        return Err(Error::NotRealizable(desc.slug.clone()));
    }
    let alg = build_algebra(desc)?;
    let spec = desc
        .involution
        .as_ref()
        .ok_or_else(|| Error::NotRealizable(format!("{}: no involution data", desc.slug)))?;
    let dim = alg.dim();
    let mut theta = vec![vec![Gq::zero(); dim]; dim];
    for j in 0..dim {
        let img = spec.apply(&alg.basis[j])?;
        let coords = alg
            .coords(&img)
            .map_err(|_| Error::InvolutionInvalid(format!("{}: θ leaves the algebra", desc.slug)))?;
        for i in 0..dim {
            theta[i][j] = coords[i].clone();
        }
    }
    realize_from_theta(desc.clone(), &alg, theta)
}

fn realize_from_theta(
    desc: PairDescriptor,
    alg: &Superalgebra,
    theta: Matrix,
) -> Result<SymmetricPair> {
    let dim = alg.dim();
    // θ² = id
    let theta_sq = linalg::mat_mul(&theta, &theta);
    for (i, row) in theta_sq.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            let expect = if i == j { Gq::one() } else { Gq::zero() };
            if *x != expect {
                return Err(Error::InvolutionInvalid(format!("{}: θ² ≠ id", desc.slug)));
            }
        }
    }
    // θ preserves the form: (θ b_i, θ b_j) = (b_i, b_j)
    let img: Vec<SuperMatrix> = (0..dim)
        .map(|j| {
            let col: Vec<Gq> = (0..dim).map(|i| theta[i][j].clone()).collect();
            alg.from_coords(&col)
        })
        .collect();
    for i in 0..dim {
        for j in 0..dim {
            if img[i].supertrace_pairing(&img[j]) != alg.gram[i][j] {
                return Err(Error::InvolutionInvalid(format!(
                    "{}: θ does not preserve the form",
                    desc.slug
                )));
            }
        }
    }

    // Parity-blockwise eigensplit.
    let mut k_even = Vec::new();
    let mut k_odd = Vec::new();
    let mut p_even = Vec::new();
    let mut p_odd = Vec::new();
    for parity in [Parity::Even, Parity::Odd] {
        let idx: Vec<usize> = (0..dim).filter(|&i| alg.parity[i] == parity).collect();
        // restriction of θ to this parity block
        let block: Matrix = idx
            .iter()
            .map(|&i| idx.iter().map(|&j| theta[i][j].clone()).collect())
            .collect();
        for sign in [1i64, -1] {
            let mut m = block.clone();
            for (r, row) in m.iter_mut().enumerate() {
                row[r] -= &Gq::from_int(sign);
            }
            let ns = linalg::nullspace(&m, idx.len());
            for v in ns {
                let mut full = vec![Gq::zero(); dim];
                for (pos, &i) in idx.iter().enumerate() {
                    full[i] = v[pos].clone();
                }
                match (sign, parity) {
                    (1, Parity::Even) => k_even.push(full),
                    (1, Parity::Odd) => k_odd.push(full),
                    (-1, Parity::Even) => p_even.push(full),
                    (-1, Parity::Odd) => p_odd.push(full),
                    _ => unreachable!(),
                }
            }
        }
    }
    if k_even.len() + k_odd.len() + p_even.len() + p_odd.len() != dim {
        return Err(Error::InvolutionInvalid(format!(
            "{}: eigenspaces do not fill the algebra",
            desc.slug
        )));
    }
    // The family's k-dimension formula applies to the primary involution,
    // not to derived pairs like the k'-pair (whose fixed space is k_0 ⊕ p_1).
    if !desc.slug.ends_with("#kprime") {
        if let Some(expected) = desc.expected_k_dim() {
            if k_even.len() + k_odd.len() != expected {
                return Err(Error::InvolutionInvalid(format!(
                    "{}: dim k = {} but the family predicts {expected}",
                    desc.slug,
                    k_even.len() + k_odd.len()
                )));
            }
        }
    }
    if p_odd.len() % 2 != 0 {
        return Err(Error::InvolutionInvalid(format!("{}: dim p_1 is odd", desc.slug)));
    }

    // Validate the Cartan subspace.
    let a_basis = desc.a_basis.clone();
    for a in &a_basis {
        if !a.is_diagonal() {
            return Err(Error::InvolutionInvalid(format!("{}: a-basis not diagonal", desc.slug)));
        }
        let coords = alg.coords(a)?;
        let img = linalg::mat_vec(&theta, &coords);
        let neg: Vec<Gq> = coords.iter().map(|x| -x).collect();
        if img != neg {
            return Err(Error::InvolutionInvalid(format!("{}: a-basis not in p", desc.slug)));
        }
    }
    for x in &a_basis {
        for y in &a_basis {
            if !alg.bracket(x, y)?.is_zero() {
                return Err(Error::InvolutionInvalid(format!("{}: a not abelian", desc.slug)));
            }
        }
    }

    let mut pair = SymmetricPair {
        desc,
        alg: clone_algebra(alg)?,
        theta,
        k_even,
        k_odd,
        p_even,
        p_odd,
        a_basis,
        restricted: RestrictedRootDatum { classes: vec![], rho_bar: None, zero_restriction_odd: 0 },
        iwasawa: None,
    };
    pair.restricted = compute_restricted(&pair)?;
    pair.iwasawa = compute_iwasawa(&pair)?;
    if pair.iwasawa.is_some() {
        pair.restricted.rho_bar = Some(compute_rho_bar(&pair)?);
    }
    Ok(pair)
}

// Superalgebra is deterministic per family; rebuilding is the cheapest
// way to share it across derived pairs without reference plumbing.
fn clone_algebra(alg: &Superalgebra) -> Result<Superalgebra> {
    match alg.family {
        AlgFamily::Gl => crate::liealg::build_gl(alg.m_even, alg.n_odd),
        AlgFamily::Osp => crate::liealg::build_osp(alg.m_even, alg.n_odd / 2),
    }
}

fn compute_restricted(pair: &SymmetricPair) -> Result<RestrictedRootDatum> {
    let mut classes: BTreeMap<Vec<Rat>, RestrictedRoot> = BTreeMap::new();
    let mut zero_odd = 0usize;
    for root in &pair.alg.root_datum.roots {
        let idx = root.space[0];
        let values = pair.restrict_weight(&root.weight);
        if values.iter().all(Rat::is_zero) {
            if root.parity == Parity::Odd {
                zero_odd += 1;
            }
            continue;
        }
        let entry = classes.entry(values.clone()).or_insert_with(|| RestrictedRoot {
            values,
            even_mult: 0,
            odd_mult: 0,
            even_class: false,
            root_indices: vec![],
        });
        match root.parity {
            Parity::Even => {
                entry.even_mult += 1;
                entry.even_class = true;
            }
            Parity::Odd => entry.odd_mult += 1,
        }
        entry.root_indices.push(idx);
    }
    Ok(RestrictedRootDatum {
        classes: classes.into_values().collect(),
        rho_bar: None,
        zero_restriction_odd: zero_odd,
    })
}

fn compute_iwasawa(pair: &SymmetricPair) -> Result<Option<IwasawaDecomposition>> {
    let dim = pair.alg.dim();
    let mut n_indices: Vec<usize> = Vec::new();
    for c in &pair.restricted.classes {
        if lex_positive(&c.values) {
            n_indices.extend(c.root_indices.iter().copied());
        }
    }
    n_indices.sort();
    let n_dim = n_indices.len();
    let a_dim = pair.a_basis.len();
    let k_dim = pair.dim_k();
    if k_dim + a_dim + n_dim != dim {
        return Ok(None);
    }
    // joint independence
    let mut rows: Matrix = Vec::new();
    rows.extend(pair.k_basis());
    for a in &pair.a_basis {
        rows.push(pair.alg.coords(a)?);
    }
    for &i in &n_indices {
        let mut v = vec![Gq::zero(); dim];
        v[i] = Gq::one();
        rows.push(v);
    }
    if linalg::rank(&rows) != dim {
        return Ok(None);
    }
    // Borel positive system: positive restriction, or zero restriction with
    // lex-positive full weight.
    let mut borel_positive = Vec::new();
    for root in &pair.alg.root_datum.roots {
        let idx = root.space[0];
        let values = pair.restrict_weight(&root.weight);
        let positive = if values.iter().all(Rat::is_zero) {
            lex_positive(&root.weight)
        } else {
            lex_positive(&values)
        };
        if positive {
            borel_positive.push(idx);
        }
    }
    Ok(Some(IwasawaDecomposition { n_indices, borel_positive }))
}

fn compute_rho_bar(pair: &SymmetricPair) -> Result<Vec<Rat>> {
    let iw = pair.iwasawa.as_ref().expect("rho_bar needs iwasawa");
    let half = Rat::new(1.into(), 2.into());
    let mut acc = vec![Rat::zero(); pair.rank()];
    for &idx in &iw.borel_positive {
        let values = pair
            .restriction_of(idx)
            .unwrap_or_else(|| vec![Rat::zero(); pair.rank()]);
        let sign = match pair.alg.parity[idx] {
            Parity::Even => half.clone(),
            Parity::Odd => -half.clone(),
        };
        for (a, v) in acc.iter_mut().zip(&values) {
            *a += v * &sign;
        }
    }
    Ok(acc)
}

/// iwasawa() per the spec surface: Some(decomposition) iff g = k ⊕ a ⊕ n.
pub fn iwasawa(pair: &SymmetricPair) -> Option<&IwasawaDecomposition> {
    pair.iwasawa.as_ref()
}

/// Both-sided Iwasawa test of Theorem 4.2 (iii).
pub fn is_interlaced(pair: &SymmetricPair) -> Result<bool> {
    if pair.iwasawa.is_none() {
        return Ok(false);
    }
    let kp = pair.k_prime_pair()?;
    Ok(kp.iwasawa.is_some())
}

/// The interlacing automorphism as a matrix over the algebra basis:
/// diagonal on root vectors with eigenvalues i^{f(ᾱ)}, identity on h,
/// where f is an additive Z/4-valued solution of f(ᾱ) ≡ parity (mod 2).
pub fn interlacing_automorphism(pair: &SymmetricPair) -> Result<Matrix> {
    let dim = pair.alg.dim();
    // Collect (restriction, parity) constraints.
    let mut constraints: Vec<(Vec<Rat>, u8)> = Vec::new();
    for root in &pair.alg.root_datum.roots {
        let values = pair.restrict_weight(&root.weight);
        let par = root.parity.as_u8();
        if values.iter().all(Rat::is_zero) {
            if par == 1 {
                return Err(Error::ConstructionFailed(format!(
                    "{}: an odd root restricts to zero on a",
                    pair.desc.slug
                )));
            }
            continue;
        }
        constraints.push((values, par));
    }
    if constraints.is_empty() {
        return Err(Error::ConstructionFailed(format!(
            "{}: no restricted roots to interlace",
            pair.desc.slug
        )));
    }
    // Scale all restriction vectors to integers.
    let mut denom_lcm: num_bigint::BigInt = 1.into();
    for (v, _) in &constraints {
        for x in v {
            let d = x.denom().clone();
            denom_lcm = num_integer::lcm(denom_lcm.clone(), d);
        }
    }
    let scaled: Vec<Vec<i64>> = constraints
        .iter()
        .map(|(v, _)| {
            v.iter()
                .map(|x| {
                    let y = x * &Rat::from_integer(denom_lcm.clone());
                    let int = y.to_integer();
                    i64::try_from(int).expect("restricted root coordinates overflow")
                })
                .collect()
        })
        .collect();
    // Lattice basis by integer row reduction (Hermite-style).
    let lattice = integer_lattice_basis(&scaled);
    // Express each scaled vector in the lattice basis (integer coordinates).
    let mut gf2_rows: Vec<(Vec<u8>, u8)> = Vec::new();
    let mut int_coords: Vec<Vec<i64>> = Vec::new();
    for (row, (_, par)) in scaled.iter().zip(&constraints) {
        let coords = integer_coordinates(&lattice, row).ok_or_else(|| {
            Error::Internal("restricted root outside its own lattice".into())
        })?;
        gf2_rows.push((coords.iter().map(|&c| (c.rem_euclid(2)) as u8).collect(), *par));
        int_coords.push(coords);
    }
    // Solve the GF(2) system M·φ = parity.
    let phi = solve_gf2(&gf2_rows, lattice.len()).ok_or_else(|| {
        Error::ConstructionFailed(format!(
            "{}: character constraint system over Z/4 has no solution",
            pair.desc.slug
        ))
    })?;
    // f(ᾱ) = Σ coords·φ (integer); eigenvalue i^f.
    let mut f_of_root: BTreeMap<Vec<Rat>, i64> = BTreeMap::new();
    for (coords, (values, _)) in int_coords.iter().zip(&constraints) {
        let f: i64 = coords.iter().zip(&phi).map(|(&c, &p)| c * p as i64).sum();
        f_of_root.insert(values.clone(), f);
    }
    let mut phi_mat = vec![vec![Gq::zero(); dim]; dim];
    for j in 0..dim {
        let w = &pair.alg.weight[j];
        let eig = if w.iter().all(Rat::is_zero) {
            Gq::one()
        } else {
            let values = pair.restrict_weight(w);
            if values.iter().all(Rat::is_zero) {
                Gq::one()
            } else {
                Gq::i_pow(*f_of_root.get(&values).unwrap_or(&0))
            }
        };
        phi_mat[j][j] = eig;
    }
    verify_interlacing(pair, &phi_mat)?;
    Ok(phi_mat)
}

/// Check all four defining identities of an interlacing automorphism exactly:
/// φθ = δθφ, φ² = δ, φ fixes a pointwise, φ(k) = k'.
pub fn verify_interlacing(pair: &SymmetricPair, phi: &Matrix) -> Result<()> {
    let dim = pair.alg.dim();
    let delta: Matrix = (0..dim)
        .map(|i| {
            (0..dim)
                .map(|j| {
                    if i == j {
                        if pair.alg.parity[i] == Parity::Even {
                            Gq::one()
                        } else {
                            -Gq::one()
                        }
                    } else {
                        Gq::zero()
                    }
                })
                .collect()
        })
        .collect();
    let lhs = linalg::mat_mul(phi, &pair.theta);
    let rhs = linalg::mat_mul(&linalg::mat_mul(&delta, &pair.theta), phi);
    if lhs != rhs {
        return Err(Error::ConstructionFailed("φθ ≠ δθφ".into()));
    }
    if linalg::mat_mul(phi, phi) != delta {
        return Err(Error::ConstructionFailed("φ² ≠ δ".into()));
    }
    for a in &pair.a_basis {
        let c = pair.alg.coords(a)?;
        if linalg::mat_vec(phi, &c) != c {
            return Err(Error::ConstructionFailed("φ does not fix a pointwise".into()));
        }
    }
    let k_img: Matrix = pair.k_basis().iter().map(|v| linalg::mat_vec(phi, v)).collect();
    let kp: Matrix = pair.k_prime_basis();
    if !linalg::same_row_span(&k_img, &kp) {
        return Err(Error::ConstructionFailed("φ(k) ≠ k'".into()));
    }
    Ok(())
}

/// Integer row-style lattice basis (Hermite normal form, no column swaps).
fn integer_lattice_basis(rows: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let mut work: Vec<Vec<i64>> = rows.iter().filter(|r| r.iter().any(|&x| x != 0)).cloned().collect();
    if work.is_empty() {
        return vec![];
    }
    let ncols = work[0].len();
    let mut basis: Vec<Vec<i64>> = Vec::new();
    let mut col = 0;
    while col < ncols && !work.is_empty() {
        // gcd-reduce on this column
        loop {
            work.retain(|r| r.iter().any(|&x| x != 0));
            let mut nonzero: Vec<usize> =
                (0..work.len()).filter(|&i| work[i][col] != 0).collect();
            if nonzero.is_empty() {
                break;
            }
            if nonzero.len() == 1 {
                let r = work.remove(nonzero[0]);
                basis.push(r);
                break;
            }
            nonzero.sort_by_key(|&i| work[i][col].abs());
            let (small, big) = (nonzero[0], nonzero[1]);
            let q = work[big][col] / work[small][col];
            for c in 0..ncols {
                work[big][c] -= q * work[small][c];
            }
        }
        col += 1;
    }
    basis
}

/// Integer coordinates of v in the (triangular-ish) lattice basis, if any.
fn integer_coordinates(basis: &[Vec<i64>], v: &[i64]) -> Option<Vec<i64>> {
    // Solve sequentially using each basis row's leading column.
    let mut rem: Vec<i64> = v.to_vec();
    let mut coords = vec![0i64; basis.len()];
    loop {
        let Some(lead) = rem.iter().position(|&x| x != 0) else {
            return Some(coords);
        };
        let row = basis
            .iter()
            .position(|b| b.iter().position(|&x| x != 0) == Some(lead))?;
        let b_lead = basis[row][lead];
        if rem[lead] % b_lead != 0 {
            return None;
        }
        let q = rem[lead] / b_lead;
        coords[row] += q;
        for (r, b) in rem.iter_mut().zip(&basis[row]) {
            *r -= q * b;
        }
    }
}

/// Solve M·x = b over GF(2); returns any solution.
fn solve_gf2(rows: &[(Vec<u8>, u8)], nvars: usize) -> Option<Vec<u8>> {
    let mut mat: Vec<(Vec<u8>, u8)> = rows.to_vec();
    let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
    let mut r = 0;
    for c in 0..nvars {
        let Some(pr) = (r..mat.len()).find(|&i| mat[i].0[c] == 1) else {
            continue;
        };
        mat.swap(r, pr);
        for i in 0..mat.len() {
            if i != r && mat[i].0[c] == 1 {
                let (pivot_row, pivot_b) = (mat[r].0.clone(), mat[r].1);
                for (x, y) in mat[i].0.iter_mut().zip(&pivot_row) {
                    *x ^= *y;
                }
                mat[i].1 ^= pivot_b;
            }
        }
        pivots.push((r, c));
        r += 1;
    }
    // consistency
    for (row, b) in &mat {
        if row.iter().all(|&x| x == 0) && *b == 1 {
            return None;
        }
    }
    let mut x = vec![0u8; nvars];
    for &(row, col) in &pivots {
        x[col] = mat[row].1;
    }
    Some(x)
}
