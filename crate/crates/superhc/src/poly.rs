//! Sparse multivariate polynomials over Q(i), used for S(a) and for the
//! Sergeev generators on h*. Variables are named; arithmetic requires both
//! operands to carry the same variable list.

use crate::scalar::Gq;
use crate::{Error, Result};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    pub vars: Vec<String>,
    /// exponent vector -> coefficient; zero coefficients are never stored.
    pub terms: BTreeMap<Vec<u32>, Gq>,
}

impl Polynomial {
    pub fn zero(vars: Vec<String>) -> Self {
        Polynomial { vars, terms: BTreeMap::new() }
    }

    pub fn constant(vars: Vec<String>, c: Gq) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            let e = vec![0u32; p.vars.len()];
            p.terms.insert(e, c);
        }
        p
    }

    pub fn one(vars: Vec<String>) -> Self {
        Self::constant(vars, Gq::one())
    }

    pub fn var(vars: Vec<String>, idx: usize) -> Self {
        let mut p = Self::zero(vars);
        let mut e = vec![0u32; p.vars.len()];
        e[idx] = 1;
        p.terms.insert(e, Gq::one());
        p
    }

    /// c_0 + Σ c_i·t_i.
    pub fn affine(vars: Vec<String>, coeffs: &[Gq], constant: Gq) -> Self {
        let mut p = Self::constant(vars, constant);
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                let mut e = vec![0u32; p.vars.len()];
                e[i] = 1;
                p.add_term(e, c.clone());
            }
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn degree(&self) -> i64 {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as i64).sum())
            .max()
            .unwrap_or(-1)
    }

    pub fn add_term(&mut self, exp: Vec<u32>, c: Gq) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = &*o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn check_vars(&self, other: &Polynomial) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::DimensionMismatch(format!(
                "polynomial variables {:?} vs {:?}",
                self.vars, other.vars
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.check_vars(other).expect("variable mismatch");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.scale(&-Gq::one()))
    }

    pub fn scale(&self, c: &Gq) -> Polynomial {
        let mut out = Self::zero(self.vars.clone());
        if c.is_zero() {
            return out;
        }
        for (e, x) in &self.terms {
            out.terms.insert(e.clone(), x * c);
        }
        out
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.check_vars(other).expect("variable mismatch");
        let mut out = Self::zero(self.vars.clone());
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut acc = Self::one(self.vars.clone());
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, point: &[Gq]) -> Gq {
        let mut acc = Gq::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &exp) in e.iter().enumerate() {
                if exp > 0 {
                    t = &t * &point[i].pow(exp);
                }
            }
            acc += &t;
        }
        acc
    }

    /// Top homogeneous component (terms of maximal total degree).
    pub fn top_component(&self) -> Polynomial {
        let d = self.degree();
        let mut out = Self::zero(self.vars.clone());
        for (e, c) in &self.terms {
            if e.iter().map(|&x| x as i64).sum::<i64>() == d {
                out.terms.insert(e.clone(), c.clone());
            }
        }
        out
    }

    /// Leading term: maximal (total degree, exponent vector) in lex order.
    pub fn leading(&self) -> Option<(Vec<u32>, Gq)> {
        self.terms
            .iter()
            .max_by(|(e1, _), (e2, _)| {
                let d1: i64 = e1.iter().map(|&x| x as i64).sum();
                let d2: i64 = e2.iter().map(|&x| x as i64).sum();
                d1.cmp(&d2).then_with(|| e1.cmp(e2))
            })
            .map(|(e, c)| (e.clone(), c.clone()))
    }

    /// Monic normal form; returns (p / lead, lead). Zero stays zero with scalar 1.
    pub fn monic(&self) -> (Polynomial, Gq) {
        match self.leading() {
            None => (self.clone(), Gq::one()),
            Some((_, lead)) => (self.scale(&lead.inv()), lead),
        }
    }

    /// Is `self` a nonzero scalar multiple of `other`? Returns the scalar c
    /// with self = c·other. Zero polynomials are proportional with c = 1.
    pub fn proportional_to(&self, other: &Polynomial) -> Option<Gq> {
        if self.is_zero() && other.is_zero() {
            return Some(Gq::one());
        }
        if self.is_zero() || other.is_zero() {
            return None;
        }
        let (e, c_other) = other.terms.iter().next_back()?;
        let c_self = self.terms.get(e)?;
        let ratio = c_self / c_other;
        if self == &other.scale(&ratio) {
            Some(ratio)
        } else {
            None
        }
    }

    /// Substitute t_i := offset_i + Σ_j lin[i][j]·s_j, producing a polynomial
    /// in the new variables `new_vars`.
    pub fn compose_affine(&self, new_vars: Vec<String>, lin: &[Vec<Gq>], offset: &[Gq]) -> Polynomial {
        let images: Vec<Polynomial> = (0..self.nvars())
            .map(|i| Polynomial::affine(new_vars.clone(), &lin[i], offset[i].clone()))
            .collect();
        let mut out = Polynomial::zero(new_vars.clone());
        for (e, c) in &self.terms {
            let mut t = Polynomial::constant(new_vars.clone(), c.clone());
            for (i, &exp) in e.iter().enumerate() {
                if exp > 0 {
                    t = t.mul(&images[i].pow(exp));
                }
            }
            out = out.add(&t);
        }
        out
    }

    /// Exact division by a linear polynomial ℓ (degree-1, possibly with
    /// constant term). Returns Some(quotient) iff ℓ divides self.
    pub fn divide_by_linear(&self, ell: &Polynomial) -> Option<Polynomial> {
        self.check_vars(ell).ok()?;
        if ell.degree() != 1 {
            return None;
        }
        if self.is_zero() {
            return Some(Polynomial::zero(self.vars.clone()));
        }
        // Pivot variable: any variable with nonzero coefficient in ℓ.
        let (pivot, pivot_coeff) = ell
            .terms
            .iter()
            .filter(|(e, _)| e.iter().sum::<u32>() == 1)
            .map(|(e, c)| (e.iter().position(|&x| x == 1).unwrap(), c.clone()))
            .next()?;
        let mut rem = self.clone();
        let mut quot = Polynomial::zero(self.vars.clone());
        loop {
            // Find a term with positive pivot exponent, of maximal pivot degree.
            let target = rem
                .terms
                .iter()
                .filter(|(e, _)| e[pivot] > 0)
                .max_by_key(|(e, _)| e[pivot])
                .map(|(e, c)| (e.clone(), c.clone()));
            let Some((e, c)) = target else { break };
            // quotient term: (c / pivot_coeff)·x^(e with pivot exponent - 1)
            let mut qe = e.clone();
            qe[pivot] -= 1;
            let qc = &c / &pivot_coeff;
            let mut qterm = Polynomial::zero(self.vars.clone());
            qterm.terms.insert(qe, qc);
            rem = rem.sub(&qterm.mul(ell));
            quot = quot.add(&qterm);
        }
        if rem.is_zero() {
            Some(quot)
        } else {
            None
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // highest degree first, then lex descending
        let mut terms: Vec<(&Vec<u32>, &Gq)> = self.terms.iter().collect();
        terms.sort_by(|(e1, _), (e2, _)| {
            let d1: i64 = e1.iter().map(|&x| x as i64).sum();
            let d2: i64 = e2.iter().map(|&x| x as i64).sum();
            d2.cmp(&d1).then_with(|| e2.cmp(e1))
        });
        let mut first = true;
        for (e, c) in terms {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(i, &x)| {
                    if x == 1 {
                        self.vars[i].clone()
                    } else {
                        format!("{}^{}", self.vars[i], x)
                    }
                })
                .collect();
            let mono = mono.join("*");
            let cs = c.to_string();
            let (sign, mag) = if let Some(stripped) = cs.strip_prefix('-') {
                // only peel the sign for plainly real negative coefficients
                if c.is_real() {
                    ("-", stripped.to_string())
                } else {
                    ("+", format!("({cs})"))
                }
            } else if c.is_real() || c.re.is_zero() {
                ("+", cs)
            } else {
                ("+", format!("({cs})"))
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == "1" {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exp: Vec<u32>,
    re: String,
    im: String,
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    vars: Vec<String>,
    terms: Vec<TermJson>,
}

impl Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| TermJson {
                exp: e.clone(),
                re: crate::scalar::rat_to_string(&c.re),
                im: crate::scalar::rat_to_string(&c.im),
            })
            .collect();
        PolyJson { vars: self.vars.clone(), terms }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = PolyJson::deserialize(d)?;
        let mut p = Polynomial::zero(raw.vars);
        for t in raw.terms {
            if t.exp.len() != p.vars.len() {
                return Err(serde::de::Error::custom("exponent arity mismatch"));
            }
            let re = Gq::parse(&t.re).map_err(serde::de::Error::custom)?;
            let im = Gq::parse(&t.im).map_err(serde::de::Error::custom)?;
            p.add_term(t.exp, Gq::new(re.re, im.re));
        }
        Ok(p)
    }
}

/// Convenience for univariate golden polynomials: p(t) = Π (t - roots_i),
/// times an optional extra factor of t^k.
pub fn univariate_from_roots(var: &str, roots: &[i64]) -> Polynomial {
    let vars = vec![var.to_string()];
    let t = Polynomial::var(vars.clone(), 0);
    let mut p = Polynomial::one(vars.clone());
    for &r in roots {
        p = p.mul(&t.sub(&Polynomial::constant(vars.clone(), Gq::from_int(r))));
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tvars() -> Vec<String> {
        vec!["t".into()]
    }

    #[test]
    fn univariate_basics() {
        let p = univariate_from_roots("t", &[1, 3]); // (t-1)(t-3)
        assert_eq!(p.degree(), 2);
        assert_eq!(p.eval(&[Gq::from_int(1)]), Gq::zero());
        assert_eq!(p.eval(&[Gq::from_int(0)]), Gq::from_int(3));
        let (m, s) = p.scale(&Gq::from_int(-7)).monic();
        assert_eq!(s, Gq::from_int(-7));
        assert_eq!(m, p);
    }

    #[test]
    fn proportionality() {
        let p = univariate_from_roots("t", &[2]);
        let q = p.scale(&Gq::i());
        assert_eq!(q.proportional_to(&p), Some(Gq::i()));
        let r = univariate_from_roots("t", &[5]);
        assert!(r.proportional_to(&p).is_none());
    }

    #[test]
    fn divide_by_linear_works() {
        let p = univariate_from_roots("t", &[0, -1, 4]);
        let t = Polynomial::var(tvars(), 0);
        let q = p.divide_by_linear(&t).unwrap();
        assert_eq!(q, univariate_from_roots("t", &[-1, 4]));
        let ell = t.add(&Polynomial::constant(tvars(), Gq::from_int(2)));
        assert!(p.divide_by_linear(&ell).is_none());
    }

    #[test]
    fn compose_affine_reflection() {
        // p(t) = t(t-2) is symmetric under t -> 2 - t
        let p = univariate_from_roots("t", &[0, 2]);
        let refl = p.compose_affine(tvars(), &[vec![-Gq::one()]], &[Gq::from_int(2)]);
        assert_eq!(refl, p);
    }

    #[test]
    fn json_round_trip() {
        let p = univariate_from_roots("t", &[1]).scale(&Gq::parse("1/2+i").unwrap());
        let s = serde_json::to_string(&p).unwrap();
        let q: Polynomial = serde_json::from_str(&s).unwrap();
        assert_eq!(p, q);
    }
}
