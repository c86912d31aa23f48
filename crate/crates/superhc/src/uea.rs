//! PBW-ordered arithmetic in U(g): normal ordering by supercommutator
//! rewriting, multiplication, Casimir elements, left-ideal membership and
//! the halved filtration degree.
//!
//! An `Ordering` fixes an ordered basis of g split into three sections
//! n < a < k (the Iwasawa ordering used by the Harish-Chandra machinery).
//! Monomials are stored as exponent vectors over that basis, nondecreasing
//! in the order, with odd exponents at most 1. With this ordering,
//!   U(g) = S(a) ⊕ (n·U(g) + U(g)·k)
//! is literally a split of the sorted monomials: a monomial with an n-letter
//! starts with it, one with a k-letter ends with it, and the complement is
//! the pure-a part.

use crate::liealg::Superalgebra;
use crate::linalg::{invert, Matrix};
use crate::matrix::{Parity, SuperMatrix};
use crate::scalar::{Gq, Rat};
use crate::{par_map_reduce, Error, Result};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrd};
use std::sync::Arc;

static NEXT_ORDERING_ID: AtomicU64 = AtomicU64::new(1);

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Section {
    N,
    A,
    K,
}

#[derive(Clone)]
pub struct Letter {
    pub name: String,
    pub parity: Parity,
    pub section: Section,
    /// Coordinates in the parent algebra's basis.
    pub coords: Vec<Gq>,
    pub matrix: SuperMatrix,
}

/// A fixed PBW ordering (n-letters, then a-letters, then k-letters) with the
/// quadratic bracket table of its letters.
pub struct Ordering {
    pub id: u64,
    pub letters: Vec<Letter>,
    /// bracket_table[i*len + j] = PBW coordinates of [x_i, x_j] as letters.
    bracket_table: Vec<Vec<(u16, Gq)>>,
    /// Gram matrix of the letters under the supertrace form.
    pub gram: Matrix,
    /// Column j = algebra coordinates of letter j.
    pub letters_to_alg: Matrix,
    /// Inverse of the above: converts algebra coordinates to letter coordinates.
    pub alg_to_letters: Matrix,
}

impl Ordering {
    /// Builds an ordering from letters given as algebra coordinate vectors.
    pub fn new(alg: &Superalgebra, letters: Vec<(String, Section, Vec<Gq>)>) -> Result<Arc<Ordering>> {
        let nl = letters.len();
        if nl != alg.dim() {
            return Err(Error::DimensionMismatch(format!(
                "ordering has {nl} letters for a dim-{} algebra",
                alg.dim()
            )));
        }
        let mut built = Vec::with_capacity(nl);
        for (name, section, coords) in letters {
            let matrix = alg.from_coords(&coords);
            let parity = matrix
                .homogeneous_parity()
                .ok_or_else(|| Error::NonHomogeneous(format!("letter {name}")))?;
            built.push(Letter { name, parity, section, coords, matrix });
        }
        // Letter coordinates as columns; invert to convert alg coords to letter coords.
        let l_mat: Matrix = (0..alg.dim())
            .map(|row| built.iter().map(|l| l.coords[row].clone()).collect())
            .collect();
        let l_inv = invert(&l_mat)
            .ok_or_else(|| Error::DimensionMismatch("ordering letters are dependent".into()))?;

        let mut bracket_table = Vec::with_capacity(nl * nl);
        for i in 0..nl {
            for j in 0..nl {
                let b = alg.bracket(&built[i].matrix, &built[j].matrix)?;
                let entry = if b.is_zero() {
                    Vec::new()
                } else {
                    let alg_coords = alg.coords(&b)?;
                    let letter_coords = crate::linalg::mat_vec(&l_inv, &alg_coords);
                    letter_coords
                        .into_iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(k, c)| (k as u16, c))
                        .collect()
                };
                bracket_table.push(entry);
            }
        }

        let mut gram = vec![vec![Gq::zero(); nl]; nl];
        for i in 0..nl {
            for j in 0..nl {
                gram[i][j] = built[i].matrix.supertrace_pairing(&built[j].matrix);
            }
        }

        Ok(Arc::new(Ordering {
            id: NEXT_ORDERING_ID.fetch_add(1, AtomicOrd::Relaxed),
            letters: built,
            bracket_table,
            gram,
            letters_to_alg: l_mat,
            alg_to_letters: l_inv,
        }))
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn bracket_of(&self, i: u16, j: u16) -> &[(u16, Gq)] {
        &self.bracket_table[i as usize * self.len() + j as usize]
    }

    pub fn parity_of(&self, i: u16) -> Parity {
        self.letters[i as usize].parity
    }

    pub fn section_of(&self, i: u16) -> Section {
        self.letters[i as usize].section
    }

    pub fn section_indices(&self, s: Section) -> Vec<u16> {
        (0..self.len() as u16).filter(|&i| self.section_of(i) == s).collect()
    }
}

/// An unordered product of letters, before straightening.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Word(pub Vec<u16>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }
}

/// Sparse element of U(g) in PBW normal form.
#[derive(Clone)]
pub struct PBWElement {
    pub ordering: Arc<Ordering>,
    /// exponent vector over the letters -> coefficient
    pub terms: BTreeMap<Vec<u8>, Gq>,
}

fn monomial_to_word(exp: &[u8]) -> Vec<u16> {
    let mut w = Vec::new();
    for (i, &e) in exp.iter().enumerate() {
        for _ in 0..e {
            w.push(i as u16);
        }
    }
    w
}

fn word_to_monomial(nletters: usize, w: &[u16]) -> Vec<u8> {
    let mut exp = vec![0u8; nletters];
    for &l in w {
        exp[l as usize] += 1;
    }
    exp
}

/// First position p where w[p], w[p+1] violate the normal form
/// (descent, or a repeated odd letter).
fn first_defect(ord: &Ordering, w: &[u16]) -> Option<usize> {
    for p in 0..w.len().saturating_sub(1) {
        if w[p] > w[p + 1] {
            return Some(p);
        }
        if w[p] == w[p + 1] && ord.parity_of(w[p]) == Parity::Odd {
            return Some(p);
        }
    }
    None
}

/// Straighten a list of (word, coefficient) pairs into normal form.
/// Terminates because each rewrite strictly decreases (length, inversions).
fn straighten(ord: &Ordering, start: Vec<(Vec<u16>, Gq)>) -> BTreeMap<Vec<u8>, Gq> {
    let mut result: BTreeMap<Vec<u8>, Gq> = BTreeMap::new();
    let mut stack = start;
    while let Some((w, c)) = stack.pop() {
        if c.is_zero() {
            continue;
        }
        match first_defect(ord, &w) {
            None => {
                let exp = word_to_monomial(ord.len(), &w);
                add_to(&mut result, exp, c);
            }
            Some(p) if w[p] == w[p + 1] => {
                // odd square: x·x = ½[x,x]
                let half = Gq::from_ratio(1, 2);
                for (k, ck) in ord.bracket_of(w[p], w[p]) {
                    let mut nw = Vec::with_capacity(w.len() - 1);
                    nw.extend_from_slice(&w[..p]);
                    nw.push(*k);
                    nw.extend_from_slice(&w[p + 2..]);
                    stack.push((nw, &(&c * ck) * &half));
                }
            }
            Some(p) => {
                let sign = ord.parity_of(w[p]).sign_product(ord.parity_of(w[p + 1]));
                let mut swapped = w.clone();
                swapped.swap(p, p + 1);
                let sc = if sign < 0 { -&c } else { c.clone() };
                stack.push((swapped, sc));
                for (k, ck) in ord.bracket_of(w[p], w[p + 1]) {
                    let mut nw = Vec::with_capacity(w.len() - 1);
                    nw.extend_from_slice(&w[..p]);
                    nw.push(*k);
                    nw.extend_from_slice(&w[p + 2..]);
                    stack.push((nw, &c * ck));
                }
            }
        }
    }
    result
}

fn add_to(map: &mut BTreeMap<Vec<u8>, Gq>, exp: Vec<u8>, c: Gq) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(exp) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            let s = &*o.get() + &c;
            if s.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
}

fn merge(mut a: BTreeMap<Vec<u8>, Gq>, b: BTreeMap<Vec<u8>, Gq>) -> BTreeMap<Vec<u8>, Gq> {
    if a.len() < b.len() {
        return merge(b, a);
    }
    for (e, c) in b {
        add_to(&mut a, e, c);
    }
    a
}

/// PBW normal form of a word; the identity of U(g) is the empty word.
pub fn normal_order(ordering: &Arc<Ordering>, word: &Word) -> PBWElement {
    PBWElement {
        ordering: ordering.clone(),
        terms: straighten(ordering, vec![(word.0.clone(), Gq::one())]),
    }
}

impl PBWElement {
    pub fn zero(ordering: Arc<Ordering>) -> Self {
        PBWElement { ordering, terms: BTreeMap::new() }
    }

    pub fn one(ordering: Arc<Ordering>) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![0u8; ordering.len()], Gq::one());
        PBWElement { ordering, terms }
    }

    pub fn scalar(ordering: Arc<Ordering>, c: Gq) -> Self {
        let mut el = Self::zero(ordering);
        if !c.is_zero() {
            let e = vec![0u8; el.ordering.len()];
            el.terms.insert(e, c);
        }
        el
    }

    /// Degree-1 element from letter coordinates.
    pub fn from_letter_coords(ordering: Arc<Ordering>, coords: &[Gq]) -> Self {
        let mut el = Self::zero(ordering);
        for (i, c) in coords.iter().enumerate() {
            if !c.is_zero() {
                let mut e = vec![0u8; el.ordering.len()];
                e[i] = 1;
                el.terms.insert(e, c.clone());
            }
        }
        el
    }

    pub fn letter(ordering: Arc<Ordering>, idx: u16) -> Self {
        let mut e = vec![0u8; ordering.len()];
        e[idx as usize] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(e, Gq::one());
        PBWElement { ordering, terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn check_ordering(&self, other: &PBWElement) -> Result<()> {
        if self.ordering.id != other.ordering.id {
            return Err(Error::OrderingMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &PBWElement) -> Result<PBWElement> {
        self.check_ordering(other)?;
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            add_to(&mut terms, e.clone(), c.clone());
        }
        Ok(PBWElement { ordering: self.ordering.clone(), terms })
    }

    pub fn sub(&self, other: &PBWElement) -> Result<PBWElement> {
        self.add(&other.scale(&-Gq::one()))
    }

    pub fn scale(&self, c: &Gq) -> PBWElement {
        let mut out = PBWElement::zero(self.ordering.clone());
        if c.is_zero() {
            return out;
        }
        for (e, x) in &self.terms {
            out.terms.insert(e.clone(), x * c);
        }
        out
    }

    /// Product in U(g), normal-ordered. Monomial pairs are straightened
    /// independently (in parallel when the `parallel` feature is on).
    pub fn multiply(&self, other: &PBWElement) -> Result<PBWElement> {
        self.check_ordering(other)?;
        let pairs: Vec<(Vec<u16>, Gq)> = self
            .terms
            .iter()
            .flat_map(|(e1, c1)| {
                let w1 = monomial_to_word(e1);
                other.terms.iter().map(move |(e2, c2)| {
                    let mut w = w1.clone();
                    w.extend(monomial_to_word(e2));
                    (w, c1 * c2)
                })
            })
            .collect();
        let ord = self.ordering.clone();
        let terms = par_map_reduce(
            pairs,
            |(w, c)| straighten(&ord, vec![(w, c)]),
            BTreeMap::new,
            merge,
        );
        Ok(PBWElement { ordering: self.ordering.clone(), terms })
    }

    /// Sequential variant of `multiply`, kept for the benchmark comparison.
    pub fn multiply_seq(&self, other: &PBWElement) -> Result<PBWElement> {
        self.check_ordering(other)?;
        let mut terms = BTreeMap::new();
        for (e1, c1) in &self.terms {
            let w1 = monomial_to_word(e1);
            for (e2, c2) in &other.terms {
                let mut w = w1.clone();
                w.extend(monomial_to_word(e2));
                terms = merge(terms, straighten(&self.ordering, vec![(w, c1 * c2)]));
            }
        }
        Ok(PBWElement { ordering: self.ordering.clone(), terms })
    }

    pub fn pow(&self, n: u32) -> Result<PBWElement> {
        let mut acc = PBWElement::one(self.ordering.clone());
        for _ in 0..n {
            acc = acc.multiply(self)?;
        }
        Ok(acc)
    }

    /// Apply a linear map given by its matrix over the letters
    /// (column j = image of letter j in letter coordinates), extended to
    /// U(g) as an algebra map.
    pub fn apply_linear(&self, map: &Matrix) -> Result<PBWElement> {
        let mut out = PBWElement::zero(self.ordering.clone());
        for (e, c) in &self.terms {
            let mut acc = PBWElement::scalar(self.ordering.clone(), c.clone());
            for l in monomial_to_word(e) {
                let img: Vec<Gq> = (0..self.ordering.len())
                    .map(|row| map[row][l as usize].clone())
                    .collect();
                let factor = PBWElement::from_letter_coords(self.ordering.clone(), &img);
                acc = acc.multiply(&factor)?;
            }
            out = out.add(&acc)?;
        }
        Ok(out)
    }

    /// Max over monomials of (#even letters) + ½(#odd letters).
    pub fn filtration_degree(&self) -> Rat {
        let mut best = Rat::new(0.into(), 1.into());
        let mut any = false;
        for e in self.terms.keys() {
            let mut halves: i64 = 0;
            for (i, &x) in e.iter().enumerate() {
                let unit = if self.ordering.parity_of(i as u16) == Parity::Even { 2 } else { 1 };
                halves += unit * x as i64;
            }
            let d = Rat::new(halves.into(), 2.into());
            if !any || d > best {
                best = d;
                any = true;
            }
        }
        best
    }

    /// True iff every monomial contains at least one k-section letter,
    /// i.e. the element lies in the left ideal U(g)·k.
    pub fn in_left_ideal_uk(&self) -> bool {
        self.terms.keys().all(|e| {
            e.iter()
                .enumerate()
                .any(|(i, &x)| x > 0 && self.ordering.section_of(i as u16) == Section::K)
        })
    }

    /// Drop every monomial containing a k-letter: the canonical representative
    /// of the class in U(g)/U(g)k. Valid before left multiplication.
    pub fn reduce_mod_uk(&self) -> PBWElement {
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| {
                !e.iter()
                    .enumerate()
                    .any(|(i, &x)| x > 0 && self.ordering.section_of(i as u16) == Section::K)
            })
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        PBWElement { ordering: self.ordering.clone(), terms }
    }

    /// The pure-a part: monomials using only a-section letters.
    pub fn pure_a_part(&self) -> PBWElement {
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| {
                e.iter()
                    .enumerate()
                    .all(|(i, &x)| x == 0 || self.ordering.section_of(i as u16) == Section::A)
            })
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        PBWElement { ordering: self.ordering.clone(), terms }
    }

    pub fn max_total_degree(&self) -> usize {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as usize).sum())
            .max()
            .unwrap_or(0)
    }
}

impl fmt::Debug for PBWElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            for (i, &x) in e.iter().enumerate() {
                if x > 0 {
                    write!(f, "·{}", self.ordering.letters[i].name)?;
                    if x > 1 {
                        write!(f, "^{x}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// The Casimir Σ_i x_i x^i of the span of `subset` (all letters if None),
/// where {x^i} is the dual basis with (x^i, x_j) = δ_ij. With that
/// convention the element is central; the spec's bracket-centrality
/// check is exercised in the tests.
pub fn casimir(ordering: &Arc<Ordering>, subset: Option<&[u16]>) -> Result<PBWElement> {
    let idx: Vec<u16> = match subset {
        Some(s) => s.to_vec(),
        None => (0..ordering.len() as u16).collect(),
    };
    let k = idx.len();
    let mut gram = vec![vec![Gq::zero(); k]; k];
    for (a, &i) in idx.iter().enumerate() {
        for (b, &j) in idx.iter().enumerate() {
            gram[a][b] = ordering.gram[i as usize][j as usize].clone();
        }
    }
    let inv = invert(&gram).ok_or(Error::SingularGram)?;
    let mut words = Vec::new();
    for (a, &i) in idx.iter().enumerate() {
        for (b, &j) in idx.iter().enumerate() {
            if !inv[a][b].is_zero() {
                words.push((vec![i, j], inv[a][b].clone()));
            }
        }
    }
    Ok(PBWElement { ordering: ordering.clone(), terms: straighten(ordering, words) })
}
