//! Gaussian rationals Q(i): the scalar field of the whole library.
//!
//! Everything downstream (matrices, PBW coefficients, polynomials) is exact;
//! there is no floating point anywhere in the crate.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

pub type Rat = BigRational;

/// An element re + im·i of Q(i).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gq {
    pub re: Rat,
    pub im: Rat,
}

impl Gq {
    pub fn new(re: Rat, im: Rat) -> Self {
        Gq { re, im }
    }

    pub fn zero() -> Self {
        Gq { re: Rat::zero(), im: Rat::zero() }
    }

    pub fn one() -> Self {
        Gq { re: Rat::one(), im: Rat::zero() }
    }

    pub fn i() -> Self {
        Gq { re: Rat::zero(), im: Rat::one() }
    }

    pub fn from_int(n: i64) -> Self {
        Gq { re: Rat::from_integer(BigInt::from(n)), im: Rat::zero() }
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Gq {
            re: Rat::new(BigInt::from(num), BigInt::from(den)),
            im: Rat::zero(),
        }
    }

    pub fn from_rat(r: Rat) -> Self {
        Gq { re: r, im: Rat::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Gq { re: self.re.clone(), im: -self.im.clone() }
    }

    /// Squared absolute value re² + im², a nonnegative rational.
    pub fn norm_sq(&self) -> Rat {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Self {
        let n = self.norm_sq();
        assert!(!n.is_zero(), "division by zero in Q(i)");
        Gq { re: &self.re / &n, im: -(&self.im / &n) }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut acc = Gq::one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// i^k for k mod 4.
    pub fn i_pow(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => Gq::one(),
            1 => Gq::i(),
            2 => -Gq::one(),
            _ => -Gq::i(),
        }
    }

    /// Parse forms like `3`, `-1/2`, `i`, `-i`, `2*i`, `1/2+1/3*i`, `1/2 - 3 i`.
    pub fn parse(s: &str) -> Result<Gq, String> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err("empty scalar".into());
        }
        // Split into at most two signed parts.
        let bytes = compact.as_bytes();
        let mut parts: Vec<String> = Vec::new();
        let mut cur = String::new();
        for (idx, &b) in bytes.iter().enumerate() {
            let c = b as char;
            if (c == '+' || c == '-') && idx > 0 && bytes[idx - 1] != b'+' && bytes[idx - 1] != b'-' && bytes[idx - 1] != b'/' {
                parts.push(cur.clone());
                cur.clear();
            }
            cur.push(c);
        }
        parts.push(cur);
        if parts.len() > 2 {
            return Err(format!("cannot parse scalar `{s}`"));
        }
        let mut re = Rat::zero();
        let mut im = Rat::zero();
        let mut seen_im = false;
        let mut seen_re = false;
        for p in parts {
            if p.ends_with('i') || p.ends_with('I') {
                if seen_im {
                    return Err(format!("two imaginary parts in `{s}`"));
                }
                seen_im = true;
                let body = p[..p.len() - 1].trim_end_matches('*');
                im = match body {
                    "" | "+" => Rat::one(),
                    "-" => -Rat::one(),
                    _ => parse_rat(body)?,
                };
            } else {
                if seen_re {
                    return Err(format!("two real parts in `{s}`"));
                }
                seen_re = true;
                re = parse_rat(&p)?;
            }
        }
        Ok(Gq { re, im })
    }
}

fn parse_rat(s: &str) -> Result<Rat, String> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.parse().map_err(|_| format!("bad rational `{s}`"))?;
        let d: BigInt = d.parse().map_err(|_| format!("bad rational `{s}`"))?;
        if d.is_zero() {
            return Err(format!("zero denominator in `{s}`"));
        }
        Ok(Rat::new(n, d))
    } else {
        let n: BigInt = s.parse().map_err(|_| format!("bad rational `{s}`"))?;
        Ok(Rat::from_integer(n))
    }
}

pub fn rat_to_string(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Gq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", rat_to_string(&self.re));
        }
        let im_str = if self.im.is_one() {
            "i".to_string()
        } else if (-self.im.clone()).is_one() {
            "-i".to_string()
        } else {
            format!("{}*i", rat_to_string(&self.im))
        };
        if self.re.is_zero() {
            write!(f, "{im_str}")
        } else if self.im.is_negative() {
            write!(f, "{}{}", rat_to_string(&self.re), im_str)
        } else {
            write!(f, "{}+{}", rat_to_string(&self.re), im_str)
        }
    }
}

impl fmt::Debug for Gq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Gq {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Gq {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Gq::parse(&s).map_err(serde::de::Error::custom)
    }
}

macro_rules! impl_binop {
    ($trait:ident, $method:ident, $assign_trait:ident, $assign_method:ident) => {
        impl<'a, 'b> $trait<&'b Gq> for &'a Gq {
            type Output = Gq;
            fn $method(self, rhs: &'b Gq) -> Gq {
                let mut out = self.clone();
                out.$assign_method(rhs);
                out
            }
        }
        impl $trait<Gq> for Gq {
            type Output = Gq;
            fn $method(mut self, rhs: Gq) -> Gq {
                self.$assign_method(&rhs);
                self
            }
        }
        impl<'b> $trait<&'b Gq> for Gq {
            type Output = Gq;
            fn $method(mut self, rhs: &'b Gq) -> Gq {
                self.$assign_method(rhs);
                self
            }
        }
    };
}

impl AddAssign<&Gq> for Gq {
    fn add_assign(&mut self, rhs: &Gq) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&Gq> for Gq {
    fn sub_assign(&mut self, rhs: &Gq) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&Gq> for Gq {
    fn mul_assign(&mut self, rhs: &Gq) {
        let re = &self.re * &rhs.re - &self.im * &rhs.im;
        let im = &self.re * &rhs.im + &self.im * &rhs.re;
        self.re = re;
        self.im = im;
    }
}

impl_binop!(Add, add, AddAssign, add_assign);
impl_binop!(Sub, sub, SubAssign, sub_assign);
impl_binop!(Mul, mul, MulAssign, mul_assign);

impl Div<&Gq> for &Gq {
    type Output = Gq;
    fn div(self, rhs: &Gq) -> Gq {
        self * &rhs.inv()
    }
}

impl Neg for Gq {
    type Output = Gq;
    fn neg(self) -> Gq {
        Gq { re: -self.re, im: -self.im }
    }
}

impl Neg for &Gq {
    type Output = Gq;
    fn neg(self) -> Gq {
        Gq { re: -self.re.clone(), im: -self.im.clone() }
    }
}
