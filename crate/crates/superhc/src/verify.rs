//! Golden-target and property verification: the rank-one closed forms, the
//! gl product formula, the invariance-conjecture conditions, centre
//! conditions, the reduction trick, the vanishing criterion, Sergeev
//! generator families, and the even-pairs span equality at bounded degree.

use crate::hc::PairContext;
use crate::linalg::{self, Matrix};
use crate::pairs::lex_positive;
use crate::poly::Polynomial;
use crate::scalar::{Gq, Rat};
use crate::{Error, Result};
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;
use std::collections::BTreeSet;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    Skip,
    ExpectedFail,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub check: String,
    #[serde(rename = "pairId")]
    pub pair: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub computed: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scalar: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Report {
    fn new(check: &str, pair: &str, status: Status) -> Report {
        Report {
            check: check.into(),
            pair: pair.into(),
            status,
            expected: None,
            computed: None,
            scalar: None,
            detail: None,
        }
    }

    pub fn line(&self) -> String {
        let tag = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
            Status::ExpectedFail => "EXPECTED-FAIL",
        };
        let mut s = format!("[{tag}] {} {}", self.check, self.pair);
        if let Some(e) = &self.expected {
            s.push_str(&format!("  expected: {e}"));
        }
        if let Some(c) = &self.computed {
            s.push_str(&format!("  computed: {c}"));
        }
        if let Some(sc) = &self.scalar {
            s.push_str(&format!("  scalar: {sc}"));
        }
        if let Some(d) = &self.detail {
            s.push_str(&format!("  ({d})"));
        }
        s
    }

    pub fn is_ok(&self) -> bool {
        !matches!(self.status, Status::Fail)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ConditionReport {
    pub class: String,
    pub kind: String, // "reflection" | "odd-vanishing"
    pub satisfied: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjectureReport {
    pub pair: String,
    pub conditions: Vec<ConditionReport>,
}

impl ConjectureReport {
    pub fn all_satisfied(&self) -> bool {
        self.conditions.iter().all(|c| c.satisfied)
    }

    pub fn reflection_failed(&self) -> bool {
        self.conditions.iter().any(|c| c.kind == "reflection" && !c.satisfied)
    }
}

fn rat_str(values: &[Rat]) -> String {
    let parts: Vec<String> = values.iter().map(crate::scalar::rat_to_string).collect();
    format!("({})", parts.join(","))
}

/// The ρ̄-shifted reflection action (w.p)(λ) = p(w(λ+ρ̄)−ρ̄) for the
/// reflection in the restricted root class `values`.
pub fn shifted_reflection(
    ctx: &PairContext,
    p: &Polynomial,
    values: &[Rat],
) -> Result<Polynomial> {
    let r = ctx.t_names.len();
    let alpha = ctx.class_to_t_point(values);
    let form = ctx.a_star_form()?;
    let m_alpha = linalg::mat_vec(&form, &alpha);
    let mut norm = Gq::zero();
    for (a, b) in alpha.iter().zip(&m_alpha) {
        norm += &(a * b);
    }
    if norm.is_zero() {
        return Err(Error::Internal("reflection in an isotropic class".into()));
    }
    let two_over = &Gq::from_int(2) * &norm.inv();
    // W[i][j] = δ_ij − (2/(α,α))·α_i·(Mα)_j
    let mut w = vec![vec![Gq::zero(); r]; r];
    for i in 0..r {
        for j in 0..r {
            let mut x = if i == j { Gq::one() } else { Gq::zero() };
            x -= &(&(&alpha[i] * &m_alpha[j]) * &two_over);
            w[i][j] = x;
        }
    }
    let rho = ctx.rho_bar_point()?;
    // offset = W·ρ̄ − ρ̄
    let w_rho = linalg::mat_vec(&w, &rho);
    let offset: Vec<Gq> = w_rho.iter().zip(&rho).map(|(a, b)| a - b).collect();
    Ok(p.compose_affine(ctx.t_names.clone(), &w, &offset))
}

/// Condition (ii): p(λ+rα) = sign^r·p(λ−rα) on the hyperplane (λ+ρ̄, α) = 0,
/// for 1 ≤ r ≤ n_α, as an identity of polynomials in a parametrization.
/// `signed` distinguishes the ghost condition (-1)^r from the centre one.
fn odd_condition_holds(
    ctx: &PairContext,
    p: &Polynomial,
    values: &[Rat],
    n_alpha: &Rat,
    signed: bool,
) -> Result<bool> {
    let rank = ctx.t_names.len();
    let alpha = ctx.class_to_t_point(values);
    let rho = ctx.rho_bar_point()?;
    let form = ctx.a_star_form()?;
    let m_alpha = linalg::mat_vec(&form, &alpha);
    // kernel of λ ↦ (λ, α)
    let kernel = linalg::nullspace(&vec![m_alpha.clone()], rank);
    let s_names: Vec<String> = (1..=kernel.len()).map(|i| format!("s{i}")).collect();
    let base: Vec<Gq> = rho.iter().map(|x| -x).collect();
    let nmax = n_alpha.floor().to_integer().to_i64().unwrap_or(0);
    for step in 1..=nmax {
        let r_gq = Gq::from_int(step);
        let mut plus_off = Vec::with_capacity(rank);
        let mut minus_off = Vec::with_capacity(rank);
        let mut lin = vec![vec![Gq::zero(); kernel.len()]; rank];
        for i in 0..rank {
            plus_off.push(&base[i] + &(&r_gq * &alpha[i]));
            minus_off.push(&base[i] - &(&r_gq * &alpha[i]));
            for (j, kv) in kernel.iter().enumerate() {
                lin[i][j] = kv[i].clone();
            }
        }
        let q_plus = p.compose_affine(s_names.clone(), &lin, &plus_off);
        let mut q_minus = p.compose_affine(s_names.clone(), &lin, &minus_off);
        if signed && step % 2 == 1 {
            q_minus = q_minus.scale(&-Gq::one());
        }
        if q_plus != q_minus {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Conjecture conditions (i)+(ii) for a batch of polynomials.
pub fn conjecture_report(ctx: &PairContext, polys: &[Polynomial]) -> Result<ConjectureReport> {
    let mut conditions = Vec::new();
    // (i): reflections in even-class rays, sign (-1)^{n_ray} with n_ray the
    // halved odd multiplicity summed over the ray.
    for ray in ctx.pair.restricted.even_ray_reps() {
        let n_ray = ctx.pair.restricted.ray_n_alpha(&ray);
        let mut satisfied = true;
        let mut witness = None;
        if !n_ray.is_integer() {
            satisfied = false;
            witness = Some(format!("non-integer ray multiplicity {n_ray}"));
        } else {
            let sign_neg = n_ray.to_integer().to_i64().unwrap_or(0) % 2 != 0;
            for p in polys {
                let mut refl = shifted_reflection(ctx, p, &ray)?;
                if sign_neg {
                    refl = refl.scale(&-Gq::one());
                }
                if &refl != p {
                    satisfied = false;
                    witness = Some(format!("p = {p}"));
                    break;
                }
            }
        }
        conditions.push(ConditionReport {
            class: rat_str(&ray),
            kind: "reflection".into(),
            satisfied,
            witness,
        });
    }
    // (ii): odd classes (positive representatives), signed condition.
    for class in ctx.pair.restricted.classes.iter() {
        if class.even_class || !lex_positive(&class.values) {
            continue;
        }
        let n_alpha = class.n_alpha();
        let mut satisfied = true;
        let mut witness = None;
        for p in polys {
            if !odd_condition_holds(ctx, p, &class.values, &n_alpha, true)? {
                satisfied = false;
                witness = Some(format!("p = {p}"));
                break;
            }
        }
        conditions.push(ConditionReport {
            class: rat_str(&class.values),
            kind: "odd-vanishing".into(),
            satisfied,
            witness,
        });
    }
    Ok(ConjectureReport { pair: ctx.pair.desc.slug.clone(), conditions })
}

/// The centre description: W-invariance under the ρ̄-shifted action plus the
/// unsigned odd condition.
pub fn check_center_conditions(ctx: &PairContext, p: &Polynomial) -> Result<bool> {
    for ray in ctx.pair.restricted.even_ray_reps() {
        let refl = shifted_reflection(ctx, p, &ray)?;
        if &refl != p {
            return Ok(false);
        }
    }
    for class in ctx.pair.restricted.classes.iter() {
        if class.even_class || !lex_positive(&class.values) {
            continue;
        }
        if !odd_condition_holds(ctx, p, &class.values, &class.n_alpha(), false)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Golden rank-one comparison: HC(v_{k'}) and HC(Ω) against the catalog
/// closed forms, up to one global nonzero scalar each.
pub fn check_rank_one(slug: &str) -> Result<Vec<Report>> {
    let ctx = PairContext::from_slug(slug)?;
    let golden = ctx
        .pair
        .desc
        .golden
        .clone()
        .ok_or_else(|| Error::Internal(format!("{slug}: no golden target")))?;
    let mut out = Vec::new();

    let ghost = ctx.ghost_generator()?;
    let (monic, scalar) = ghost.hc_image.monic();
    let (expected_monic, _) = golden.closed_form.monic();
    let ok = monic == expected_monic;
    let mut r = Report::new("rank1.ghost", slug, if ok { Status::Pass } else { Status::Fail });
    r.expected = Some(expected_monic.to_string());
    r.computed = Some(monic.to_string());
    r.scalar = Some(scalar.to_string());
    out.push(r);

    if let Some(cas_form) = &golden.casimir_form {
        let omega = ctx.casimir()?;
        let hc = ctx.hc_project(&omega.reduce_mod_uk())?;
        let (monic, scalar) = hc.monic();
        let (expected_monic, _) = cas_form.monic();
        // §9 pins the osp Casimir images exactly; for the gl rows only the
        // coefficient ring k[t(t-n+m-1)] is pinned, so accept an additive
        // constant there (and record it).
        let diff = monic.sub(&expected_monic);
        let exact = diff.is_zero();
        let affine_ok = diff.degree() <= 0;
        let gl_row = matches!(ctx.pair.desc.family, crate::catalog::FamilyRow::GlGl { .. });
        let status = if exact || (gl_row && affine_ok) { Status::Pass } else { Status::Fail };
        let mut r = Report::new("rank1.casimir", slug, status);
        r.expected = Some(expected_monic.to_string());
        r.computed = Some(monic.to_string());
        r.scalar = Some(scalar.to_string());
        if !exact && affine_ok {
            r.detail = Some(format!("matches up to additive constant {diff}"));
        }
        out.push(r);
    }
    Ok(out)
}

/// §9.4 product formula for (gl(2r|n), gl(r|n) x gl(r)).
pub fn check_gl_product_formula(r: usize, n: usize) -> Result<Report> {
    let slug_k = if r == 1 {
        format!("gl1-{n}xgl1")
    } else {
        format!("gl{r}-{n}xgl{r}")
    };
    let slug = format!("gl{}-{n}.{slug_k}", 2 * r);
    let ctx = PairContext::from_slug(&slug)?;
    let ghost = ctx.ghost_generator()?;
    let vars = ctx.t_names.clone();
    let mut expected = Polynomial::one(vars.clone());
    for i in 1..=r {
        for j in 1..=n {
            let c = -(n as i64) + r as i64 - i as i64 + j as i64;
            let ti = Polynomial::var(vars.clone(), i - 1);
            expected = expected.mul(&ti.add(&Polynomial::constant(vars.clone(), Gq::from_int(c))));
        }
    }
    let (monic, scalar) = ghost.hc_image.monic();
    let (em, _) = expected.monic();
    let ok = monic == em;
    let mut rep = Report::new("gl-product", &slug, if ok { Status::Pass } else { Status::Fail });
    rep.expected = Some(em.to_string());
    rep.computed = Some(monic.to_string());
    rep.scalar = Some(scalar.to_string());
    Ok(rep)
}

/// Reduction trick: HC(v_{k'}) of the pair is proportional to that of its
/// catalog reduction.
pub fn check_reduction(slug: &str) -> Result<Report> {
    let ctx = PairContext::from_slug(slug)?;
    let Some(target) = ctx.pair.desc.reduces_to.clone() else {
        let mut r = Report::new("reduction", slug, Status::Skip);
        r.detail = Some("no reduction entry in the catalog".into());
        return Ok(r);
    };
    let big = ctx.ghost_generator()?;
    let small_ctx = PairContext::from_slug(&target)?;
    let small = small_ctx.ghost_generator()?;
    let (mb, _) = big.hc_image.monic();
    let (ms, _) = small.hc_image.monic();
    let ok = mb == ms;
    let mut r = Report::new("reduction", slug, if ok { Status::Pass } else { Status::Fail });
    r.expected = Some(format!("{ms} (from {target})"));
    r.computed = Some(mb.to_string());
    Ok(r)
}

/// Vanishing criterion: for a simple isotropic root α with θα ≠ α and
/// α+θα ∉ Δ, the projection of h_α to a divides HC(v_{k'}).
pub fn check_vanishing(slug: &str) -> Result<Report> {
    let ctx = PairContext::from_slug(slug)?;
    let pair = &ctx.pair;
    let iw = pair
        .iwasawa
        .as_ref()
        .ok_or_else(|| Error::NoIwasawa(slug.to_string()))?;
    // simple positive roots: positives that are not sums of two positives
    let positives: Vec<&Vec<Rat>> =
        iw.borel_positive.iter().map(|&i| &pair.alg.weight[i]).collect();
    let pos_set: BTreeSet<&Vec<Rat>> = positives.iter().copied().collect();
    let is_simple = |w: &Vec<Rat>| {
        !positives.iter().any(|b| {
            let rest: Vec<Rat> = w.iter().zip(b.iter()).map(|(x, y)| x - y).collect();
            rest.iter().any(|x| !x.is_zero()) && pos_set.contains(&rest)
        })
    };
    let mut candidate = None;
    for &idx in &iw.borel_positive {
        let root = pair
            .alg
            .root_datum
            .roots
            .iter()
            .find(|r| r.space[0] == idx)
            .expect("borel positive is a root");
        if root.parity != crate::matrix::Parity::Odd || !root.isotropic {
            continue;
        }
        if !is_simple(&root.weight) {
            continue;
        }
        let theta_w = pair.theta_weight(&root.weight);
        if theta_w == root.weight {
            continue;
        }
        let sum: Vec<Rat> = root.weight.iter().zip(&theta_w).map(|(a, b)| a + b).collect();
        let sum_is_root = pair.alg.root_datum.roots.iter().any(|r| r.weight == sum);
        if sum_is_root {
            continue;
        }
        candidate = Some((idx, root.weight.clone()));
        break;
    }
    let Some((idx, weight)) = candidate else {
        let mut r = Report::new("vanishing", slug, Status::Skip);
        r.detail = Some("hypothesis not met: no simple isotropic α with θα ≠ α, α+θα ∉ Δ".into());
        return Ok(r);
    };
    // h_α = [e_α, e_{-α}], projected to a: (1-θ)/2·h_α
    let dim = pair.alg.dim();
    let neg: Vec<Rat> = weight.iter().map(|x| -x.clone()).collect();
    let nidx = (0..dim)
        .find(|&k| pair.alg.weight[k] == neg)
        .ok_or_else(|| Error::Internal("missing negative root".into()))?;
    let h = pair.alg.bracket(&pair.alg.basis[idx], &pair.alg.basis[nidx])?;
    let hc_coords = pair.alg.coords(&h)?;
    let th = pair.theta_coords(&hc_coords);
    let half = Gq::from_ratio(1, 2);
    let proj: Vec<Gq> = hc_coords
        .iter()
        .zip(&th)
        .map(|(a, b)| &(a - b) * &half)
        .collect();
    let proj_mat = pair.alg.from_coords(&proj);
    // as a linear polynomial in the t-coordinates
    let t_cols: Vec<Vec<Gq>> = pair
        .desc
        .t_basis
        .iter()
        .map(|t| pair.alg.coords(t))
        .collect::<Result<_>>()?;
    let solver = linalg::ColumnSolver::new(&t_cols, dim);
    let coeffs = solver
        .solve(&pair.alg.coords(&proj_mat)?)
        .ok_or_else(|| Error::Internal("h_α projection not in a".into()))?;
    let ell = Polynomial::affine(ctx.t_names.clone(), &coeffs, Gq::zero());
    let ghost = ctx.ghost_generator()?;
    let divisible = ghost.hc_image.divide_by_linear(&ell).is_some();
    let mut r = Report::new(
        "vanishing",
        slug,
        if divisible { Status::Pass } else { Status::Fail },
    );
    r.expected = Some(format!("{ell} divides HC(v)"));
    r.computed = Some(ghost.hc_image.to_string());
    Ok(r)
}

/// Sergeev generator families on h* (cases (i)-(iii) of the invariant
/// description), truncated at `degree_bound`.
pub fn sergeev_generators(
    family: crate::liealg::AlgFamily,
    m: usize,
    n: usize,
    degree_bound: usize,
) -> Result<Vec<Polynomial>> {
    let (p, q) = match family {
        crate::liealg::AlgFamily::Gl => (m, n),
        crate::liealg::AlgFamily::Osp => (m / 2, n / 2),
    };
    let mut vars: Vec<String> = (1..=p).map(|i| format!("e{i}")).collect();
    vars.extend((1..=q).map(|j| format!("d{j}")));
    let power_sum = |k: u32| -> Polynomial {
        let mut acc = Polynomial::zero(vars.clone());
        for i in 0..p {
            acc = acc.add(&Polynomial::var(vars.clone(), i).pow(k));
        }
        for j in 0..q {
            acc = acc.sub(&Polynomial::var(vars.clone(), p + j).pow(k));
        }
        acc
    };
    let mut out = Vec::new();
    match family {
        crate::liealg::AlgFamily::Gl => {
            for k in 1..=degree_bound as u32 {
                out.push(power_sum(k));
            }
        }
        crate::liealg::AlgFamily::Osp => {
            let mut k = 2;
            while k <= degree_bound as u32 {
                out.push(power_sum(k));
                k += 2;
            }
            if m % 2 == 0 {
                // the extra product generator ε_1···ε_p·Π(ε_i² − δ_j²)
                let deg = p + 2 * p * q;
                if deg <= degree_bound {
                    let mut prod = Polynomial::one(vars.clone());
                    for i in 0..p {
                        prod = prod.mul(&Polynomial::var(vars.clone(), i));
                    }
                    for i in 0..p {
                        for j in 0..q {
                            let e2 = Polynomial::var(vars.clone(), i).pow(2);
                            let d2 = Polynomial::var(vars.clone(), p + j).pow(2);
                            prod = prod.mul(&e2.sub(&d2));
                        }
                    }
                    out.push(prod);
                }
            }
        }
    }
    Ok(out)
}

fn poly_span_rows(polys: &[Polynomial]) -> Matrix {
    let mut monomials: BTreeSet<Vec<u32>> = BTreeSet::new();
    for p in polys {
        monomials.extend(p.terms.keys().cloned());
    }
    let cols: Vec<Vec<u32>> = monomials.into_iter().collect();
    polys
        .iter()
        .map(|p| {
            cols.iter()
                .map(|e| p.terms.get(e).cloned().unwrap_or_else(Gq::zero))
                .collect()
        })
        .collect()
}

pub fn same_poly_span(a: &[Polynomial], b: &[Polynomial]) -> bool {
    let mut all: Vec<Polynomial> = a.to_vec();
    all.extend(b.to_vec());
    let rows = poly_span_rows(&all);
    let (ra, rb) = rows.split_at(a.len());
    linalg::same_row_span(&ra.to_vec(), &rb.to_vec())
}

/// HC images of an exact basis of the ghost distributions A up to
/// filtration (and hence polynomial) degree `bound`.
pub fn invariant_hc_images(ctx: &PairContext, bound: usize) -> Result<Vec<Polynomial>> {
    let basis = ctx.invariant_basis(2 * bound as i64)?;
    let mut out = Vec::new();
    for el in &basis {
        let hc = ctx.hc_project(el)?;
        if !hc.is_zero() {
            out.push(hc);
        }
    }
    Ok(out)
}

/// Even-pairs theorem at bounded degree: the span of
/// (ρ̄-shifted little-Weyl invariants)·HC(v_{k'}) equals the span of
/// HC(A), both sides computed independently (the left from the reflection
/// invariants and the golden generator, the right from an exact basis of
/// the invariants of U(g)/U(g)k solved by linear algebra).
pub fn check_even_pairs(slug: &str, bound: usize) -> Result<Report> {
    let ctx = PairContext::from_slug(slug)?;
    if ctx.t_names.len() != 1 {
        let mut r = Report::new("even-pairs", slug, Status::Skip);
        r.detail = Some("bounded-degree span check implemented for rank one".into());
        return Ok(r);
    }
    let ghost = ctx.ghost_generator()?;
    let rho = ctx.rho_bar_point()?;
    // Shifted invariants k[(t+ρ̄)²] in rank one.
    let tvar = Polynomial::var(ctx.t_names.clone(), 0);
    let shifted = tvar.add(&Polynomial::constant(ctx.t_names.clone(), rho[0].clone()));
    let q = shifted.mul(&shifted);
    let dv = ghost.hc_image.degree();
    let mut lhs = Vec::new();
    let mut i = 0u32;
    while dv + 2 * i as i64 <= bound as i64 {
        lhs.push(q.pow(i).mul(&ghost.hc_image));
        i += 1;
    }
    let rhs: Vec<Polynomial> = invariant_hc_images(&ctx, bound)?
        .into_iter()
        .filter(|p| p.degree() <= bound as i64)
        .collect();
    let ok = same_poly_span(&lhs, &rhs);
    let mut r = Report::new("even-pairs", slug, if ok { Status::Pass } else { Status::Fail });
    r.expected = Some(format!("span of {} shifted-invariant multiples", lhs.len()));
    r.computed = Some(format!("span of {} ghost images", rhs.len()));
    r.detail = Some(format!("degree bound {bound}"));
    Ok(r)
}

pub const GOLDEN_RANK_ONE: [&str; 8] = [
    "gl2-1.gl1-1xgl1",
    "gl2-2.gl1-2xgl1",
    "gl3-1.gl2-1xgl1",
    "osp2-2.osp1-2",
    "osp2-4.osp1-4",
    "osp3-2.osp2-2",
    "osp2-4.osp2-2xsp2",
    "osp1-4.osp1-2xsp2",
];

pub const INTERLACED_RANK_ONE: [&str; 6] = [
    "gl2-1.gl1-1xgl1",
    "gl2-2.gl1-2xgl1",
    "osp2-2.osp1-2",
    "osp2-4.osp1-4",
    "osp2-4.osp2-2xsp2",
    "osp1-4.osp1-2xsp2",
];

pub const NON_INTERLACED_RANK_ONE: [&str; 2] = ["gl3-1.gl2-1xgl1", "osp3-2.osp2-2"];

fn report_err(check: &str, slug: &str, e: &Error) -> Report {
    let mut r = Report::new(check, slug, Status::Fail);
    r.detail = Some(e.to_string());
    r
}

pub fn suite_rank_one() -> Vec<Report> {
    let mut jobs: Vec<Box<dyn FnOnce() -> Vec<Report> + Send>> = Vec::new();
    for slug in GOLDEN_RANK_ONE {
        jobs.push(Box::new(move || {
            check_rank_one(slug).unwrap_or_else(|e| vec![report_err("rank1", slug, &e)])
        }));
    }
    for (r, n) in [(1usize, 1usize), (1, 2), (2, 1)] {
        jobs.push(Box::new(move || {
            vec![check_gl_product_formula(r, n)
                .unwrap_or_else(|e| report_err("gl-product", &format!("r={r},n={n}"), &e))]
        }));
    }
    run_jobs(jobs)
}

pub fn suite_conjecture(degree_bound: usize) -> Vec<Report> {
    let mut jobs: Vec<Box<dyn FnOnce() -> Vec<Report> + Send>> = Vec::new();
    for slug in INTERLACED_RANK_ONE {
        jobs.push(Box::new(move || vec![conjecture_pair_report(slug, degree_bound, true)]));
    }
    for slug in NON_INTERLACED_RANK_ONE {
        jobs.push(Box::new(move || vec![conjecture_pair_report(slug, degree_bound, false)]));
    }
    run_jobs(jobs)
}

fn conjecture_pair_report(slug: &str, degree_bound: usize, expect_satisfied: bool) -> Report {
    let inner = || -> Result<Report> {
        let ctx = PairContext::from_slug(slug)?;
        let polys = invariant_hc_images(&ctx, degree_bound)?;
        if polys.is_empty() {
            return Err(Error::Internal(format!("{slug}: no ghost images below the bound")));
        }
        let report = conjecture_report(&ctx, &polys)?;
        let status = if expect_satisfied {
            if report.all_satisfied() {
                Status::Pass
            } else {
                Status::Fail
            }
        } else {
            // non-interlaced: the reflection condition must fail
            if report.reflection_failed() {
                Status::ExpectedFail
            } else {
                Status::Fail
            }
        };
        let mut r = Report::new("conjecture", slug, status);
        r.detail = Some(
            report
                .conditions
                .iter()
                .map(|c| format!("{} {} {}", c.kind, c.class, if c.satisfied { "ok" } else { "violated" }))
                .collect::<Vec<_>>()
                .join("; "),
        );
        Ok(r)
    };
    inner().unwrap_or_else(|e| report_err("conjecture", slug, &e))
}

pub fn suite_reduction() -> Vec<Report> {
    let mut jobs: Vec<Box<dyn FnOnce() -> Vec<Report> + Send>> = Vec::new();
    for slug in ["osp3-2.osp2-2", "gl3-1.gl2-1xgl1"] {
        jobs.push(Box::new(move || {
            vec![check_reduction(slug).unwrap_or_else(|e| report_err("reduction", slug, &e))]
        }));
    }
    for slug in ["gl2-1.gl1-1xgl1", "gl2-2.gl1-2xgl1", "osp2-2.osp1-2"] {
        jobs.push(Box::new(move || {
            vec![check_vanishing(slug).unwrap_or_else(|e| report_err("vanishing", slug, &e))]
        }));
    }
    run_jobs(jobs)
}

pub fn suite_even_pairs(bound: usize) -> Vec<Report> {
    let mut jobs: Vec<Box<dyn FnOnce() -> Vec<Report> + Send>> = Vec::new();
    for slug in ["gl2-1.gl1-1xgl1", "osp3-2.osp2-2"] {
        jobs.push(Box::new(move || {
            vec![check_even_pairs(slug, bound)
                .unwrap_or_else(|e| report_err("even-pairs", slug, &e))]
        }));
    }
    run_jobs(jobs)
}

pub fn suite_all(degree_bound: usize) -> Vec<Report> {
    let mut out = suite_rank_one();
    out.extend(suite_conjecture(degree_bound.max(5)));
    out.extend(suite_reduction());
    out.extend(suite_even_pairs(degree_bound));
    out
}

fn run_jobs(jobs: Vec<Box<dyn FnOnce() -> Vec<Report> + Send>>) -> Vec<Report> {
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        jobs.into_par_iter().flat_map_iter(|j| j()).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        jobs.into_iter().flat_map(|j| j()).collect()
    }
}
