//! Supermatrices: (m+n)×(m+n) matrices over Q(i) with the block Z/2-grading.

use crate::scalar::{Gq, Rat};
use crate::{Error, Result};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    pub fn sign_product(self, other: Parity) -> i8 {
        if self == Parity::Odd && other == Parity::Odd {
            -1
        } else {
            1
        }
    }

    pub fn as_u8(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }
}

/// Element of gl(m|n): even block size `m`, odd block size `n`
/// (for osp(M|2N) realizations, m = M and n = 2N).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SuperMatrix {
    pub m: usize,
    pub n: usize,
    entries: Vec<Gq>, // row-major, (m+n)^2
}

impl SuperMatrix {
    pub fn zero(m: usize, n: usize) -> Self {
        let d = m + n;
        SuperMatrix { m, n, entries: vec![Gq::zero(); d * d] }
    }

    pub fn identity(m: usize, n: usize) -> Self {
        let mut z = Self::zero(m, n);
        for i in 0..m + n {
            z[(i, i)] = Gq::one();
        }
        z
    }

    /// Matrix unit E_{ij} (0-based indices).
    pub fn unit(m: usize, n: usize, i: usize, j: usize) -> Self {
        let mut z = Self::zero(m, n);
        z[(i, j)] = Gq::one();
        z
    }

    pub fn dim(&self) -> usize {
        self.m + self.n
    }

    pub fn index_parity(&self, i: usize) -> Parity {
        if i < self.m {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Parity of the (i,j) block.
    pub fn entry_parity(&self, i: usize, j: usize) -> Parity {
        if self.index_parity(i) == self.index_parity(j) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Gq::is_zero)
    }

    /// Some(parity) if all nonzero entries sit in blocks of one parity;
    /// the zero matrix reports Even.
    pub fn homogeneous_parity(&self) -> Option<Parity> {
        let d = self.dim();
        let mut seen: Option<Parity> = None;
        for i in 0..d {
            for j in 0..d {
                if !self[(i, j)].is_zero() {
                    let p = self.entry_parity(i, j);
                    match seen {
                        None => seen = Some(p),
                        Some(q) if q != p => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(seen.unwrap_or(Parity::Even))
    }

    pub fn scale(&self, c: &Gq) -> Self {
        let mut out = self.clone();
        for e in out.entries.iter_mut() {
            *e = &*e * c;
        }
        out
    }

    /// Supertranspose: for x = [[A,B],[C,D]], x^{st} = [[A^T, C^T],[-B^T, D^T]].
    pub fn supertranspose(&self) -> Self {
        let d = self.dim();
        let mut out = Self::zero(self.m, self.n);
        for i in 0..d {
            for j in 0..d {
                if self[(i, j)].is_zero() {
                    continue;
                }
                let flip_sign =
                    self.index_parity(i) == Parity::Even && self.index_parity(j) == Parity::Odd;
                let v = if flip_sign { -&self[(i, j)] } else { self[(i, j)].clone() };
                out[(j, i)] = v;
            }
        }
        out
    }

    /// str(x) = tr(x_even-block) - tr(x_odd-block).
    pub fn supertrace(&self) -> Gq {
        let mut acc = Gq::zero();
        for i in 0..self.m {
            acc += &self[(i, i)];
        }
        for i in self.m..self.dim() {
            acc -= &self[(i, i)];
        }
        acc
    }

    /// str(xy) without materializing the product.
    pub fn supertrace_pairing(&self, other: &SuperMatrix) -> Gq {
        let d = self.dim();
        let mut acc = Gq::zero();
        for i in 0..d {
            let sign = if i < self.m { 1 } else { -1 };
            for k in 0..d {
                if self[(i, k)].is_zero() || other[(k, i)].is_zero() {
                    continue;
                }
                let t = &self[(i, k)] * &other[(k, i)];
                if sign > 0 {
                    acc += &t;
                } else {
                    acc -= &t;
                }
            }
        }
        acc
    }

    pub fn is_diagonal(&self) -> bool {
        let d = self.dim();
        (0..d).all(|i| (0..d).all(|j| i == j || self[(i, j)].is_zero()))
    }

    pub fn diagonal(&self) -> Vec<Gq> {
        (0..self.dim()).map(|i| self[(i, i)].clone()).collect()
    }

    pub fn flat(&self) -> &[Gq] {
        &self.entries
    }

    pub fn check_same_shape(&self, other: &SuperMatrix) -> Result<()> {
        if self.m != other.m || self.n != other.n {
            return Err(Error::DimensionMismatch(format!(
                "({}|{}) vs ({}|{})",
                self.m, self.n, other.m, other.n
            )));
        }
        Ok(())
    }
}

impl std::ops::Index<(usize, usize)> for SuperMatrix {
    type Output = Gq;
    fn index(&self, (i, j): (usize, usize)) -> &Gq {
        &self.entries[i * self.dim() + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for SuperMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Gq {
        let d = self.dim();
        &mut self.entries[i * d + j]
    }
}

impl Add for &SuperMatrix {
    type Output = SuperMatrix;
    fn add(self, rhs: &SuperMatrix) -> SuperMatrix {
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(&rhs.entries) {
            *a += b;
        }
        out
    }
}

impl Sub for &SuperMatrix {
    type Output = SuperMatrix;
    fn sub(self, rhs: &SuperMatrix) -> SuperMatrix {
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(&rhs.entries) {
            *a -= b;
        }
        out
    }
}

impl Mul for &SuperMatrix {
    type Output = SuperMatrix;
    fn mul(self, rhs: &SuperMatrix) -> SuperMatrix {
        let d = self.dim();
        let mut out = SuperMatrix::zero(self.m, self.n);
        for i in 0..d {
            for k in 0..d {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..d {
                    if rhs[(k, j)].is_zero() {
                        continue;
                    }
                    let t = &self[(i, k)] * &rhs[(k, j)];
                    out[(i, j)] += &t;
                }
            }
        }
        out
    }
}

impl Neg for &SuperMatrix {
    type Output = SuperMatrix;
    fn neg(self) -> SuperMatrix {
        self.scale(&-Gq::one())
    }
}

impl fmt::Debug for SuperMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SuperMatrix({}|{}) [", self.m, self.n)?;
        for i in 0..self.dim() {
            let row: Vec<String> = (0..self.dim()).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// JSON form per the external interface:
/// {"m": m, "n": n, "entries": [["a/b+c/d*i", ...], ...]}.
#[derive(Serialize, Deserialize)]
struct SuperMatrixJson {
    m: usize,
    n: usize,
    entries: Vec<Vec<String>>,
}

impl Serialize for SuperMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let d = self.dim();
        let entries = (0..d)
            .map(|i| (0..d).map(|j| self[(i, j)].to_string()).collect())
            .collect();
        SuperMatrixJson { m: self.m, n: self.n, entries }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SuperMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = SuperMatrixJson::deserialize(d)?;
        let dim = raw.m + raw.n;
        if raw.entries.len() != dim || raw.entries.iter().any(|r| r.len() != dim) {
            return Err(serde::de::Error::custom("entry grid does not match m+n"));
        }
        let mut out = SuperMatrix::zero(raw.m, raw.n);
        for (i, row) in raw.entries.iter().enumerate() {
            for (j, cell) in row.iter().enumerate() {
                out[(i, j)] = Gq::parse(cell).map_err(serde::de::Error::custom)?;
            }
        }
        Ok(out)
    }
}

/// Rational helper used by weight bookkeeping.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

pub fn rat_zero() -> Rat {
    Rat::zero()
}
