//! Matrix realizations of gl(m|n) and osp(m|2n) over Q(i): supercommutator,
//! supertrace form, root decomposition with respect to the diagonal Cartan.
//!
//! Conventions fixed here and relied on everywhere downstream:
//! - the Cartan subalgebra is the diagonal of the realization;
//! - weights are written in the (ε_1..ε_p, δ_1..δ_q) coordinate basis, where
//!   p = m for gl(m|n) and p = ⌊m/2⌋ for osp(m|2n), q = n;
//! - the osp form matrix J is split: antidiagonal 1s on the even block and
//!   [[0, I_n], [-I_n, 0]] on the odd block, so diagonal matrices form a
//!   Cartan subalgebra;
//! - the ordered basis lists root vectors sorted by weight (lexicographically
//!   descending), Cartan elements last; root vectors are normalized so their
//!   first nonzero entry in row-major order is 1.

use crate::linalg::{ColumnSolver, Matrix};
use crate::matrix::{Parity, SuperMatrix};
use crate::scalar::{Gq, Rat};
use crate::{Error, Result};
use num_traits::Zero;
use std::collections::BTreeMap;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AlgFamily {
    Gl,
    Osp,
}

/// One root α with its (1-dimensional, for these families) root space.
#[derive(Clone, Debug)]
pub struct Root {
    /// Coordinates of α in the (ε, δ) basis.
    pub weight: Vec<Rat>,
    pub parity: Parity,
    pub isotropic: bool,
    /// Indices into `Superalgebra::basis` spanning g_α.
    pub space: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct RootDatum {
    pub roots: Vec<Root>,
    pub eps_count: usize,
    pub delta_count: usize,
}

struct WeightClass {
    positions: Vec<(usize, usize)>,
    members: Vec<usize>,
    solver: ColumnSolver,
}

pub struct Superalgebra {
    pub family: AlgFamily,
    /// Even and odd matrix block sizes (for osp(m|2n) these are m and 2n).
    pub m_even: usize,
    pub n_odd: usize,
    pub eps_count: usize,
    pub delta_count: usize,
    pub basis: Vec<SuperMatrix>,
    pub parity: Vec<Parity>,
    /// Weight of each basis element (zero vector for Cartan elements).
    pub weight: Vec<Vec<Rat>>,
    /// Indices of the Cartan basis elements (a tail segment of `basis`).
    pub cartan: Vec<usize>,
    pub form_matrix: Option<SuperMatrix>,
    pub root_datum: RootDatum,
    /// Gram matrix of the basis under the supertrace form.
    pub gram: Matrix,
    classes: BTreeMap<Vec<Rat>, WeightClass>,
    cartan_gram_inv: Matrix,
}

impl Superalgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn matrix_dim(&self) -> usize {
        self.m_even + self.n_odd
    }

    pub fn name(&self) -> String {
        match self.family {
            AlgFamily::Gl => format!("gl({}|{})", self.m_even, self.n_odd),
            AlgFamily::Osp => format!("osp({}|{})", self.m_even, self.n_odd),
        }
    }

    /// Weight attached to matrix position index i (as an (ε,δ) vector).
    fn position_weight(family: AlgFamily, m: usize, n: usize, i: usize) -> Vec<Rat> {
        let p = match family {
            AlgFamily::Gl => m,
            AlgFamily::Osp => m / 2,
        };
        let q = match family {
            AlgFamily::Gl => n,
            AlgFamily::Osp => n / 2,
        };
        let mut w = vec![Rat::zero(); p + q];
        match family {
            AlgFamily::Gl => {
                if i < m {
                    w[i] = Rat::from_integer(1.into());
                } else {
                    w[p + (i - m)] = Rat::from_integer(1.into());
                }
            }
            AlgFamily::Osp => {
                if i < m {
                    if i < p {
                        w[i] = Rat::from_integer(1.into());
                    } else if m - 1 - i < p {
                        w[m - 1 - i] = Rat::from_integer((-1).into());
                    }
                    // middle position of odd m carries weight 0
                } else {
                    let j = i - m;
                    if j < q {
                        w[p + j] = Rat::from_integer(1.into());
                    } else {
                        w[p + (j - q)] = Rat::from_integer((-1).into());
                    }
                }
            }
        }
        w
    }

    fn entry_weight(family: AlgFamily, m: usize, n: usize, i: usize, j: usize) -> Vec<Rat> {
        let a = Self::position_weight(family, m, n, i);
        let b = Self::position_weight(family, m, n, j);
        a.iter().zip(&b).map(|(x, y)| x - y).collect()
    }

    fn assemble(
        family: AlgFamily,
        m: usize,
        n: usize,
        raw_basis: Vec<(Vec<Rat>, SuperMatrix)>,
        cartan_matrices: Vec<SuperMatrix>,
        form_matrix: Option<SuperMatrix>,
    ) -> Result<Superalgebra> {
        let (eps_count, delta_count) = match family {
            AlgFamily::Gl => (m, n),
            AlgFamily::Osp => (m / 2, n / 2),
        };
        // Root vectors sorted by weight, lexicographically descending; Cartan last.
        let mut roots_sorted = raw_basis;
        roots_sorted.sort_by(|a, b| b.0.cmp(&a.0));

        let mut basis: Vec<SuperMatrix> = Vec::new();
        let mut weight: Vec<Vec<Rat>> = Vec::new();
        for (w, x) in roots_sorted {
            basis.push(x);
            weight.push(w);
        }
        let cartan_start = basis.len();
        let zero_w = vec![Rat::zero(); eps_count + delta_count];
        for h in cartan_matrices {
            basis.push(h);
            weight.push(zero_w.clone());
        }
        let cartan: Vec<usize> = (cartan_start..basis.len()).collect();

        let parity: Vec<Parity> = basis
            .iter()
            .map(|x| {
                x.homogeneous_parity()
                    .ok_or_else(|| Error::NonHomogeneous("basis element mixes parities".into()))
            })
            .collect::<Result<_>>()?;

        // Weight classes: positions and membership.
        let mut class_positions: BTreeMap<Vec<Rat>, Vec<(usize, usize)>> = BTreeMap::new();
        let d = m + n;
        for i in 0..d {
            for j in 0..d {
                class_positions
                    .entry(Self::entry_weight(family, m, n, i, j))
                    .or_default()
                    .push((i, j));
            }
        }
        let mut class_members: BTreeMap<Vec<Rat>, Vec<usize>> = BTreeMap::new();
        for (idx, w) in weight.iter().enumerate() {
            class_members.entry(w.clone()).or_default().push(idx);
        }
        let mut classes = BTreeMap::new();
        for (w, members) in class_members {
            let positions = class_positions
                .get(&w)
                .ok_or_else(|| Error::Internal("weight class without positions".into()))?
                .clone();
            let columns: Vec<Vec<Gq>> = members
                .iter()
                .map(|&b| positions.iter().map(|&(i, j)| basis[b][(i, j)].clone()).collect())
                .collect();
            let solver = ColumnSolver::new(&columns, positions.len());
            classes.insert(w, WeightClass { positions, members, solver });
        }

        // Gram matrix of the supertrace form.
        let dim = basis.len();
        let mut gram = vec![vec![Gq::zero(); dim]; dim];
        for i in 0..dim {
            for j in 0..dim {
                gram[i][j] = basis[i].supertrace_pairing(&basis[j]);
            }
        }

        // Cartan Gram and its inverse (used for (α,β) and isotropy).
        let hn = cartan.len();
        let mut hg = vec![vec![Gq::zero(); hn]; hn];
        for (a, &i) in cartan.iter().enumerate() {
            for (b, &j) in cartan.iter().enumerate() {
                hg[a][b] = gram[i][j].clone();
            }
        }
        let cartan_gram_inv =
            crate::linalg::invert(&hg).ok_or(Error::SingularGram)?;

        let mut alg = Superalgebra {
            family,
            m_even: m,
            n_odd: n,
            eps_count,
            delta_count,
            basis,
            parity,
            weight,
            cartan,
            form_matrix,
            root_datum: RootDatum { roots: vec![], eps_count, delta_count },
            gram,
            classes,
            cartan_gram_inv,
        };
        alg.root_datum = alg.compute_root_datum()?;
        Ok(alg)
    }

    fn compute_root_datum(&self) -> Result<RootDatum> {
        let mut roots = Vec::new();
        for (idx, w) in self.weight.iter().enumerate() {
            if w.iter().all(Rat::is_zero) {
                continue;
            }
            roots.push(Root {
                weight: w.clone(),
                parity: self.parity[idx],
                isotropic: self.weight_form(w, w).is_zero(),
                space: vec![idx],
            });
        }
        Ok(RootDatum { roots, eps_count: self.eps_count, delta_count: self.delta_count })
    }

    pub fn root_decomposition(&self) -> &RootDatum {
        &self.root_datum
    }

    /// Induced form (α,β) on h* from the supertrace form.
    pub fn weight_form(&self, a: &[Rat], b: &[Rat]) -> Gq {
        let av = self.weight_values_on_cartan(a);
        let bv = self.weight_values_on_cartan(b);
        let mut acc = Gq::zero();
        for (i, x) in av.iter().enumerate() {
            for (j, y) in bv.iter().enumerate() {
                if !x.is_zero() && !y.is_zero() && !self.cartan_gram_inv[i][j].is_zero() {
                    acc += &(&(x * y) * &self.cartan_gram_inv[i][j]);
                }
            }
        }
        acc
    }

    /// Values (α(h_1), ..., α(h_r)) of a weight on the Cartan basis.
    pub fn weight_values_on_cartan(&self, w: &[Rat]) -> Vec<Gq> {
        self.cartan
            .iter()
            .map(|&c| self.eval_weight(w, &self.basis[c]))
            .collect()
    }

    /// Evaluate a weight (in ε/δ coordinates) on a diagonal matrix.
    pub fn eval_weight(&self, w: &[Rat], h: &SuperMatrix) -> Gq {
        debug_assert!(h.is_diagonal());
        let mut acc = Gq::zero();
        for (a, c) in w.iter().take(self.eps_count).enumerate() {
            if !c.is_zero() {
                acc += &(&Gq::from_rat(c.clone()) * &h[(a, a)]);
            }
        }
        for (b, c) in w.iter().skip(self.eps_count).enumerate() {
            if !c.is_zero() {
                let pos = self.m_even + b;
                acc += &(&Gq::from_rat(c.clone()) * &h[(pos, pos)]);
            }
        }
        acc
    }

    /// The element h_w of the Cartan with (h_w, h) = w(h) for all h in h,
    /// returned in basis coordinates (full length, Cartan tail populated).
    pub fn weight_coroot(&self, w: &[Rat]) -> Vec<Gq> {
        let vals = self.weight_values_on_cartan(w);
        let coords = crate::linalg::mat_vec(&self.cartan_gram_inv, &vals);
        let mut full = vec![Gq::zero(); self.dim()];
        for (k, &c) in self.cartan.iter().enumerate() {
            full[c] = coords[k].clone();
        }
        full
    }

    /// Supercommutator [x,y] = xy - (-1)^{|x||y|} yx of homogeneous elements.
    pub fn bracket(&self, x: &SuperMatrix, y: &SuperMatrix) -> Result<SuperMatrix> {
        x.check_same_shape(y)?;
        let px = x
            .homogeneous_parity()
            .ok_or_else(|| Error::NonHomogeneous("bracket argument".into()))?;
        let py = y
            .homogeneous_parity()
            .ok_or_else(|| Error::NonHomogeneous("bracket argument".into()))?;
        let xy = x * y;
        let yx = y * x;
        Ok(if px.sign_product(py) < 0 { &xy + &yx } else { &xy - &yx })
    }

    /// str(xy): the invariant supersymmetric form.
    pub fn supertrace_form(&self, x: &SuperMatrix, y: &SuperMatrix) -> Result<Gq> {
        x.check_same_shape(y)?;
        Ok(x.supertrace_pairing(y))
    }

    /// Coordinates of x in the ordered basis; errors if x is not in the span.
    pub fn coords(&self, x: &SuperMatrix) -> Result<Vec<Gq>> {
        let d = self.matrix_dim();
        if x.dim() != d {
            return Err(Error::DimensionMismatch("coords".into()));
        }
        // Split x into weight-homogeneous pieces and solve per class.
        let mut per_class: BTreeMap<Vec<Rat>, Vec<Gq>> = BTreeMap::new();
        for i in 0..d {
            for j in 0..d {
                if x[(i, j)].is_zero() {
                    continue;
                }
                let w = Self::entry_weight(self.family, self.m_even, self.n_odd, i, j);
                let class = self
                    .classes
                    .get(&w)
                    .ok_or_else(|| Error::NotInAlgebra("unsupported weight component".into()))?;
                let v = per_class
                    .entry(w.clone())
                    .or_insert_with(|| vec![Gq::zero(); class.positions.len()]);
                let pos_idx = class
                    .positions
                    .iter()
                    .position(|&p| p == (i, j))
                    .ok_or_else(|| Error::Internal("position not in class".into()))?;
                v[pos_idx] = x[(i, j)].clone();
            }
        }
        let mut out = vec![Gq::zero(); self.dim()];
        for (w, target) in per_class {
            let class = &self.classes[&w];
            let c = class
                .solver
                .solve(&target)
                .ok_or_else(|| Error::NotInAlgebra(format!("component of weight {w:?}")))?;
            for (k, &member) in class.members.iter().enumerate() {
                out[member] = c[k].clone();
            }
        }
        Ok(out)
    }

    /// Realize a coordinate vector as a matrix.
    pub fn from_coords(&self, coords: &[Gq]) -> SuperMatrix {
        let mut acc = SuperMatrix::zero(self.m_even, self.n_odd);
        for (i, c) in coords.iter().enumerate() {
            if !c.is_zero() {
                acc = &acc + &self.basis[i].scale(c);
            }
        }
        acc
    }
}

/// gl(m|n) with the matrix-unit basis.
pub fn build_gl(m: usize, n: usize) -> Result<Superalgebra> {
    if m < 1 {
        return Err(Error::InvalidDims(format!("gl({m}|{n}): need m >= 1")));
    }
    let d = m + n;
    let mut raw = Vec::new();
    for i in 0..d {
        for j in 0..d {
            if i != j {
                let w = Superalgebra::entry_weight(AlgFamily::Gl, m, n, i, j);
                raw.push((w, SuperMatrix::unit(m, n, i, j)));
            }
        }
    }
    let cartan: Vec<SuperMatrix> = (0..d).map(|i| SuperMatrix::unit(m, n, i, i)).collect();
    Superalgebra::assemble(AlgFamily::Gl, m, n, raw, cartan, None)
}

/// The fixed osp form matrix: antidiagonal ones on the even block,
/// [[0, I_n], [-I_n, 0]] on the odd block.
pub fn osp_form_matrix(m: usize, two_n: usize) -> SuperMatrix {
    let n = two_n / 2;
    let mut j = SuperMatrix::zero(m, two_n);
    for i in 0..m {
        j[(i, m - 1 - i)] = Gq::one();
    }
    for k in 0..n {
        j[(m + k, m + n + k)] = Gq::one();
        j[(m + n + k, m + k)] = -Gq::one();
    }
    j
}

/// osp(m|2n) = { x : x^{st} J + J x = 0 } for the split J above.
pub fn build_osp(m: usize, n: usize) -> Result<Superalgebra> {
    if m < 1 || n < 1 {
        return Err(Error::InvalidDims(format!("osp({m}|{}): need m,n >= 1", 2 * n)));
    }
    let two_n = 2 * n;
    let d = m + two_n;
    let j = osp_form_matrix(m, two_n);

    // Group matrix positions by weight, then solve the osp condition per class.
    let mut class_positions: BTreeMap<Vec<Rat>, Vec<(usize, usize)>> = BTreeMap::new();
    for a in 0..d {
        for b in 0..d {
            class_positions
                .entry(Superalgebra::entry_weight(AlgFamily::Osp, m, two_n, a, b))
                .or_default()
                .push((a, b));
        }
    }

    let mut raw: Vec<(Vec<Rat>, SuperMatrix)> = Vec::new();
    let zero_w = vec![Rat::zero(); m / 2 + n];
    for (w, positions) in &class_positions {
        if *w == zero_w {
            continue; // Cartan handled explicitly below
        }
        // Unknowns: entries at `positions`. Condition: x^{st} J + J x = 0.
        let mut cond: Matrix = Vec::new();
        let npos = positions.len();
        for row_a in 0..d {
            for row_b in 0..d {
                let mut row = vec![Gq::zero(); npos];
                let mut nonzero = false;
                for (k, &(i, jj)) in positions.iter().enumerate() {
                    // coefficient of x_{i,jj} in (x^{st} J + J x)_{row_a,row_b}
                    let mut c = Gq::zero();
                    // (J x)_{a,b} = Σ_t J_{a,t} x_{t,b}: needs jj = b
                    if jj == row_b && !j[(row_a, i)].is_zero() {
                        c += &j[(row_a, i)];
                    }
                    // (x^{st} J)_{a,b} = Σ_t (x^{st})_{a,t} J_{t,b} with
                    // (x^{st})_{a,t} = s·x_{t,a}, s = -1 iff t even-block and a odd-block;
                    // the x_{i,jj} term needs t = i, a = jj
                    if row_a == jj && !j[(i, row_b)].is_zero() {
                        let sign = if i < m && jj >= m { -1 } else { 1 };
                        let t = &j[(i, row_b)];
                        if sign > 0 {
                            c += t;
                        } else {
                            c -= t;
                        }
                    }
                    if !c.is_zero() {
                        nonzero = true;
                    }
                    row[k] = c;
                }
                if nonzero {
                    cond.push(row);
                }
            }
        }
        let ns = crate::linalg::nullspace(&cond, npos);
        for v in ns {
            let mut x = SuperMatrix::zero(m, two_n);
            for (k, &(a, b)) in positions.iter().enumerate() {
                x[(a, b)] = v[k].clone();
            }
            // normalize: first nonzero entry in row-major order set to 1
            let mut norm = Gq::zero();
            'outer: for a in 0..d {
                for b in 0..d {
                    if !x[(a, b)].is_zero() {
                        norm = x[(a, b)].clone();
                        break 'outer;
                    }
                }
            }
            let x = x.scale(&norm.inv());
            raw.push((w.clone(), x));
        }
    }

    // Cartan: h_{ε_i} = E_{ii} - E_{m-1-i,m-1-i}, h_{δ_k} = E_{m+k} - E_{m+n+k}.
    let mut cartan = Vec::new();
    for i in 0..m / 2 {
        let mut h = SuperMatrix::zero(m, two_n);
        h[(i, i)] = Gq::one();
        h[(m - 1 - i, m - 1 - i)] = -Gq::one();
        cartan.push(h);
    }
    for k in 0..n {
        let mut h = SuperMatrix::zero(m, two_n);
        h[(m + k, m + k)] = Gq::one();
        h[(m + n + k, m + n + k)] = -Gq::one();
        cartan.push(h);
    }

    let expected_dim = m * (m - 1) / 2 + n * (2 * n + 1) + 2 * m * n;
    let alg = Superalgebra::assemble(AlgFamily::Osp, m, two_n, raw, cartan, Some(j))?;
    if alg.dim() != expected_dim {
        return Err(Error::Internal(format!(
            "osp({m}|{two_n}) dimension {} != expected {expected_dim}",
            alg.dim()
        )));
    }
    Ok(alg)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gl_1_1_counts() {
        let g = build_gl(1, 1).unwrap();
        assert_eq!(g.dim(), 4);
        let evens = g.parity.iter().filter(|p| **p == Parity::Even).count();
        assert_eq!(evens, 2);
    }

    #[test]
    fn gl_2_1_roots() {
        let g = build_gl(2, 1).unwrap();
        assert_eq!(g.dim(), 9);
        let rd = g.root_decomposition();
        assert_eq!(rd.roots.len(), 6);
        let odd = rd.roots.iter().filter(|r| r.parity == Parity::Odd).count();
        assert_eq!(odd, 4);
        // all gl odd roots are isotropic
        assert!(rd.roots.iter().filter(|r| r.parity == Parity::Odd).all(|r| r.isotropic));
        for r in &rd.roots {
            assert_eq!(r.space.len(), 1);
        }
    }

    #[test]
    fn gl_2_2_odd_roots_isotropic() {
        let g = build_gl(2, 2).unwrap();
        let rd = g.root_decomposition();
        let odd: Vec<_> = rd.roots.iter().filter(|r| r.parity == Parity::Odd).collect();
        assert_eq!(odd.len(), 8);
        assert!(odd.iter().all(|r| r.isotropic));
    }

    #[test]
    fn osp_dims() {
        // dim osp(1|2) = 5 with 3 even, 2 odd
        let g = build_osp(1, 1).unwrap();
        assert_eq!(g.dim(), 5);
        assert_eq!(g.parity.iter().filter(|p| **p == Parity::Even).count(), 3);
        // dim osp(3|2) = 3 + 3 + 6 = 12
        let g = build_osp(3, 1).unwrap();
        assert_eq!(g.dim(), 12);
        // osp(2|2): roots ±2δ and ±ε±δ (all four odd roots isotropic)
        let g = build_osp(2, 1).unwrap();
        assert_eq!(g.dim(), 8);
        let rd = g.root_decomposition();
        assert_eq!(rd.roots.len(), 6);
        let odd: Vec<_> = rd.roots.iter().filter(|r| r.parity == Parity::Odd).collect();
        assert_eq!(odd.len(), 4);
        assert!(odd.iter().all(|r| r.isotropic));
    }

    #[test]
    fn osp_members_satisfy_form_condition() {
        let g = build_osp(2, 2).unwrap();
        let j = g.form_matrix.clone().unwrap();
        for x in &g.basis {
            let lhs = &(&x.supertranspose() * &j) + &(&j * x);
            assert!(lhs.is_zero());
        }
    }

    #[test]
    fn gl11_bracket_and_form() {
        let g = build_gl(1, 1).unwrap();
        let e12 = SuperMatrix::unit(1, 1, 0, 1);
        let e21 = SuperMatrix::unit(1, 1, 1, 0);
        let e11 = SuperMatrix::unit(1, 1, 0, 0);
        let e22 = SuperMatrix::unit(1, 1, 1, 1);
        // odd-odd anticommutator
        assert_eq!(g.bracket(&e12, &e21).unwrap(), &e11 + &e22);
        // supertrace values
        assert_eq!(g.supertrace_form(&e11, &e11).unwrap(), Gq::from_int(1));
        assert_eq!(g.supertrace_form(&e22, &e22).unwrap(), Gq::from_int(-1));
        assert_eq!(g.supertrace_form(&e12, &e21).unwrap(), Gq::from_int(1));
        assert_eq!(g.supertrace_form(&e21, &e12).unwrap(), Gq::from_int(-1));
        // odd square: [x,x] = 2x² as matrices
        let b = g.bracket(&e12, &e12).unwrap();
        assert_eq!(b, (&e12 * &e12).scale(&Gq::from_int(2)));
    }

    #[test]
    fn bracket_reproduces_root_values() {
        let g = build_osp(2, 1).unwrap();
        for r in &g.root_datum.roots {
            let x = &g.basis[r.space[0]];
            for &c in &g.cartan {
                let h = &g.basis[c];
                let b = g.bracket(h, x).unwrap();
                let expected = x.scale(&g.eval_weight(&r.weight, h));
                assert_eq!(b, expected);
            }
        }
    }

    #[test]
    fn coords_round_trip() {
        let g = build_osp(2, 2).unwrap();
        // a haphazard combination of basis elements
        let mut x = SuperMatrix::zero(2, 4);
        x = &x + &g.basis[0].scale(&Gq::from_ratio(2, 3));
        x = &x + &g.basis[5].scale(&Gq::i());
        x = &x + &g.basis[g.dim() - 1].scale(&Gq::from_int(-7));
        let c = g.coords(&x).unwrap();
        assert_eq!(g.from_coords(&c), x);
        // a matrix outside the algebra
        let bad = SuperMatrix::unit(2, 4, 0, 0);
        assert!(g.coords(&bad).is_err());
    }
}
