//! The CLI expression mini-language: matrix units `E(i,j)`, Cartan elements
//! `H(eps1-del2)`, the Casimirs `Omega` and `Omega0`, the ghost generator
//! `v_kprime`, exact scalars, and `+ - * ^` with parentheses.
//!
//! Parse errors carry the byte position of the offending token.

use crate::hc::PairContext;
use crate::scalar::{Gq, Rat};
use crate::uea::PBWElement;
use crate::{Error, Result};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Scalar(Gq),
    /// 1-based matrix unit E(i,j).
    MatrixUnit(usize, usize),
    /// H(w): the Cartan element dual to the weight w under the form.
    CartanDual(Weight),
    Omega,
    Omega0,
    VKPrime,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

/// A weight written in the ε/δ symbols: Σ c·eps_i + Σ c·del_j.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Weight {
    /// (is_eps, 1-based index, coefficient)
    pub terms: Vec<(bool, usize, Rat)>,
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (is_eps, idx, c) in &self.terms {
            let sym = if *is_eps { "eps" } else { "del" };
            let mag = {
                let abs = c.abs();
                if abs == Rat::from_integer(1.into()) {
                    String::new()
                } else {
                    crate::scalar::rat_to_string(&abs)
                }
            };
            if first {
                if c < &Rat::from_integer(0.into()) {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < &Rat::from_integer(0.into()) {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            write!(f, "{mag}{sym}{idx}")?;
        }
        Ok(())
    }
}

use num_traits::{Signed, Zero};

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Scalar(c) => {
                if c.is_real() || c.re.is_zero() {
                    write!(f, "{c}")
                } else {
                    write!(f, "({c})")
                }
            }
            Expr::MatrixUnit(i, j) => write!(f, "E({i},{j})"),
            Expr::CartanDual(w) => write!(f, "H({w})"),
            Expr::Omega => write!(f, "Omega"),
            Expr::Omega0 => write!(f, "Omega0"),
            Expr::VKPrime => write!(f, "v_kprime"),
            Expr::Neg(x) => {
                if matches!(**x, Expr::Add(..) | Expr::Sub(..)) {
                    write!(f, "-({x})")
                } else {
                    write!(f, "-{x}")
                }
            }
            Expr::Add(a, b) => write!(f, "{a} + {b}"),
            Expr::Sub(a, b) => {
                if matches!(**b, Expr::Add(..) | Expr::Sub(..)) {
                    write!(f, "{a} - ({b})")
                } else {
                    write!(f, "{a} - {b}")
                }
            }
            Expr::Mul(a, b) => {
                let wrap = |e: &Expr| matches!(e, Expr::Add(..) | Expr::Sub(..) | Expr::Neg(..));
                if wrap(a) {
                    write!(f, "({a})")?;
                } else {
                    write!(f, "{a}")?;
                }
                write!(f, "*")?;
                if wrap(b) {
                    write!(f, "({b})")
                } else {
                    write!(f, "{b}")
                }
            }
            Expr::Pow(b, n) => {
                if matches!(**b, Expr::Scalar(_) | Expr::MatrixUnit(..) | Expr::CartanDual(_) | Expr::Omega | Expr::Omega0 | Expr::VKPrime) {
                    write!(f, "{b}^{n}")
                } else {
                    write!(f, "({b})^{n}")
                }
            }
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected `{}`", c as char))
        }
    }

    fn number(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a number");
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| Error::Parse { pos: start, msg: "number too large".into() })
    }

    fn ident(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn rational(&mut self) -> Result<Rat> {
        let n = self.number()?;
        if self.eat(b'/') {
            let d = self.number()?;
            if d == 0 {
                return self.err("zero denominator");
            }
            Ok(Rat::new(n.into(), d.into()))
        } else {
            Ok(Rat::from_integer(n.into()))
        }
    }

    fn weight(&mut self) -> Result<Weight> {
        let mut terms = Vec::new();
        let mut sign = Rat::from_integer(1.into());
        if self.eat(b'-') {
            sign = -sign;
        } else {
            let _ = self.eat(b'+');
        }
        loop {
            let coeff = if self.peek().map(|c| c.is_ascii_digit()).unwrap_or(false) {
                self.rational()?
            } else {
                Rat::from_integer(1.into())
            };
            let _ = self.eat(b'*');
            let id = self.ident();
            let (is_eps, rest) = if let Some(r) = id.strip_prefix("eps") {
                (true, r)
            } else if let Some(r) = id.strip_prefix("del") {
                (false, r)
            } else {
                return self.err(format!("expected eps<i> or del<j>, got `{id}`"));
            };
            let idx: usize = rest
                .parse()
                .map_err(|_| Error::Parse { pos: self.pos, msg: "bad weight index".into() })?;
            terms.push((is_eps, idx, &sign * &coeff));
            if self.eat(b'+') {
                sign = Rat::from_integer(1.into());
            } else if self.eat(b'-') {
                sign = Rat::from_integer((-1).into());
            } else {
                break;
            }
        }
        Ok(Weight { terms })
    }

    fn primary(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(Expr::Neg(Box::new(self.factor()?)))
            }
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let r = self.rational()?;
                Ok(Expr::Scalar(Gq::from_rat(r)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'v' => {
                let save = self.pos;
                let id = self.ident();
                match id.as_str() {
                    "i" => Ok(Expr::Scalar(Gq::i())),
                    "E" => {
                        self.expect(b'(')?;
                        let i = self.number()?;
                        self.expect(b',')?;
                        let j = self.number()?;
                        self.expect(b')')?;
                        if i < 1 || j < 1 {
                            self.pos = save;
                            return self.err("matrix unit indices are 1-based");
                        }
                        Ok(Expr::MatrixUnit(i as usize, j as usize))
                    }
                    "H" => {
                        self.expect(b'(')?;
                        let w = self.weight()?;
                        self.expect(b')')?;
                        Ok(Expr::CartanDual(w))
                    }
                    "Omega" => Ok(Expr::Omega),
                    "Omega0" => Ok(Expr::Omega0),
                    "v_kprime" => Ok(Expr::VKPrime),
                    other => {
                        self.pos = save;
                        self.err(format!("unknown symbol `{other}`"))
                    }
                }
            }
            _ => self.err("expected an expression"),
        }
    }

    fn factor(&mut self) -> Result<Expr> {
        let base = self.primary()?;
        if self.eat(b'^') {
            let n = self.number()?;
            if n < 0 {
                return self.err("negative exponent");
            }
            Ok(Expr::Pow(Box::new(base), n as u32))
        } else {
            Ok(base)
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            let rhs = self.factor()?;
            acc = Expr::Mul(Box::new(acc), Box::new(rhs));
        }
        Ok(acc)
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                let rhs = self.term()?;
                acc = Expr::Add(Box::new(acc), Box::new(rhs));
            } else if self.eat(b'-') {
                let rhs = self.term()?;
                acc = Expr::Sub(Box::new(acc), Box::new(rhs));
            } else {
                break;
            }
        }
        Ok(acc)
    }
}

pub fn parse(src: &str) -> Result<Expr> {
    let mut p = Parser { src: src.as_bytes(), pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(Error::Parse { pos: p.pos, msg: "trailing input".into() });
    }
    Ok(e)
}

/// Evaluate an expression to a PBW element in the pair's Iwasawa ordering.
pub fn eval(expr: &Expr, ctx: &PairContext) -> Result<PBWElement> {
    match expr {
        Expr::Scalar(c) => Ok(PBWElement::scalar(ctx.ordering.clone(), c.clone())),
        Expr::MatrixUnit(i, j) => {
            let alg = &ctx.pair.alg;
            let d = alg.matrix_dim();
            if *i > d || *j > d {
                return Err(Error::InvalidDims(format!(
                    "E({i},{j}) out of range for a {d}x{d} realization"
                )));
            }
            let unit = crate::matrix::SuperMatrix::unit(alg.m_even, alg.n_odd, i - 1, j - 1);
            let coords = alg.coords(&unit)?;
            Ok(ctx.element_from_alg_coords(&coords))
        }
        Expr::CartanDual(w) => {
            let alg = &ctx.pair.alg;
            let mut wv = vec![Rat::from_integer(0.into()); alg.eps_count + alg.delta_count];
            for (is_eps, idx, c) in &w.terms {
                let (limit, off) = if *is_eps { (alg.eps_count, 0) } else { (alg.delta_count, alg.eps_count) };
                if *idx < 1 || *idx > limit {
                    return Err(Error::InvalidDims(format!(
                        "weight symbol index {idx} out of range"
                    )));
                }
                wv[off + idx - 1] += c;
            }
            let coords = alg.weight_coroot(&wv);
            Ok(ctx.element_from_alg_coords(&coords))
        }
        Expr::Omega => ctx.casimir(),
        Expr::Omega0 => ctx.casimir_even(),
        Expr::VKPrime => Ok(ctx.ghost_generator()?.representative),
        Expr::Neg(x) => Ok(eval(x, ctx)?.scale(&-Gq::one())),
        Expr::Add(a, b) => eval(a, ctx)?.add(&eval(b, ctx)?),
        Expr::Sub(a, b) => eval(a, ctx)?.sub(&eval(b, ctx)?),
        Expr::Mul(a, b) => eval(a, ctx)?.multiply(&eval(b, ctx)?),
        Expr::Pow(b, n) => eval(b, ctx)?.pow(*n),
    }
}
