use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::field::Scalar;
use super::monomial::{monomial_basis, Monomial};
use super::Rational;
use crate::error::{Error, Result};

/// Polynomial with rational coefficients; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Poly {
    n_vars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero(n_vars: usize) -> Self {
        Poly {
            n_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n_vars: usize, c: Rational) -> Self {
        Self::monomial(Monomial::one(n_vars), c)
    }

    pub fn var(n_vars: usize, i: usize) -> Self {
        Self::monomial(Monomial::var(n_vars, i), Rational::one())
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let n_vars = m.n_vars();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { n_vars, terms }
    }

    /// Collects terms, summing repeats and dropping zeros.
    pub fn from_terms(n_vars: usize, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Poly::zero(n_vars);
        for (m, c) in terms {
            debug_assert_eq!(m.n_vars(), n_vars);
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Common degree of all terms, if there is one and the polynomial is nonzero.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(Monomial::degree);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.n_vars);
        }
        Poly {
            n_vars: self.n_vars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Poly {
        Poly {
            n_vars: self.n_vars,
            terms: self.terms.iter().map(|(t, v)| (t.mul(m), v.clone())).collect(),
        }
    }

    pub fn derivative(&self, i: usize) -> Poly {
        let terms = self.terms.iter().filter_map(|(m, c)| {
            let e = m.exponents()[i];
            if e == 0 {
                return None;
            }
            let mut ex = m.exponents().to_vec();
            ex[i] -= 1;
            Some((Monomial::new(ex), c * Rational::from_integer(BigInt::from(e))))
        });
        Poly::from_terms(self.n_vars, terms)
    }

    pub fn eval<S: Scalar>(&self, point: &[S]) -> S {
        assert_eq!(point.len(), self.n_vars, "point dimension mismatch");
        let mut acc = S::field_zero();
        for (m, c) in &self.terms {
            let mut t = S::from_rational(c);
            for (x, &e) in point.iter().zip(m.exponents()) {
                for _ in 0..e {
                    t = t.times(x);
                }
            }
            acc = acc.plus(&t);
        }
        acc
    }

    /// Substitutes `x_i := images[i]` (all images in a common ring).
    pub fn substitute(&self, images: &[Poly]) -> Poly {
        assert_eq!(images.len(), self.n_vars);
        let target = images.first().map_or(0, Poly::n_vars);
        let mut out = Poly::zero(target);
        let mut powers: Vec<Vec<Poly>> = images
            .iter()
            .map(|p| vec![Poly::constant(target, Rational::one()), p.clone()])
            .collect();
        for (m, c) in &self.terms {
            let mut t = Poly::constant(target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                let e = e as usize;
                while powers[i].len() <= e {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                if e > 0 {
                    t = &t * &powers[i][e];
                }
            }
            out = &out + &t;
        }
        out
    }

    /// Coordinates in the monomial basis of `S_k`; fails on terms of other degrees.
    pub fn to_vector(&self, k: usize) -> Result<Vec<Rational>> {
        let basis = monomial_basis(self.n_vars, k);
        let mut v = vec![Rational::zero(); basis.len()];
        for (m, c) in &self.terms {
            let i = basis
                .index_of(m)
                .ok_or_else(|| Error::arg(format!("term {m} is not of degree {k}")))?;
            v[i] = c.clone();
        }
        Ok(v)
    }

    pub fn from_vector(n_vars: usize, k: usize, v: &[Rational]) -> Poly {
        let basis = monomial_basis(n_vars, k);
        assert_eq!(v.len(), basis.len());
        Poly::from_terms(
            n_vars,
            v.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (basis.get(i).clone(), c.clone())),
        )
    }

    /// Parses the text format, e.g. `3/2*x0^2*x1 - x2*x3^2`.
    pub fn parse(s: &str, n_vars: usize) -> Result<Poly> {
        let terms = Parser::new(s).parse()?;
        let mut p = Poly::zero(n_vars);
        for (exps, c) in terms {
            let mut e = vec![0u32; n_vars];
            for (i, k) in exps {
                if i >= n_vars {
                    return Err(Error::Parse(format!(
                        "variable x{i} out of range for {n_vars} variables"
                    )));
                }
                e[i] = e[i]
                    .checked_add(k)
                    .ok_or_else(|| Error::Parse("exponent overflow".into()))?;
            }
            p.add_term(Monomial::new(e), c);
        }
        Ok(p)
    }

    /// Parses, taking the number of variables from the largest index that occurs.
    pub fn parse_infer(s: &str) -> Result<Poly> {
        let terms = Parser::new(s).parse()?;
        let n = terms
            .iter()
            .flat_map(|(e, _)| e.iter().map(|(i, _)| i + 1))
            .max()
            .unwrap_or(1);
        Poly::parse(s, n)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-Rational::one())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero(self.n_vars);
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(a.mul(b), ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if idx == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let mag = c.abs();
            let is_const = m.degree() == 0;
            if is_const {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

type RawTerm = (Vec<(usize, u32)>, Rational);

struct Parser<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser {
            src,
            bytes: src.as_bytes(),
            pos: 0,
        }
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at offset {} in {:?}", self.pos, self.src))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| &self.src[start..self.pos])
    }

    fn parse(mut self) -> Result<Vec<RawTerm>> {
        let mut out = Vec::new();
        let mut sign = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -1
            }
            Some(b'+') => {
                self.pos += 1;
                1
            }
            None => return Err(self.err("empty polynomial")),
            _ => 1,
        };
        loop {
            let (exps, c) = self.term()?;
            out.push((exps, if sign < 0 { -c } else { c }));
            match self.peek() {
                None => break,
                Some(b'+') => sign = 1,
                Some(b'-') => sign = -1,
                Some(_) => return Err(self.err("expected '+' or '-'")),
            }
            self.pos += 1;
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<RawTerm> {
        let mut coef = Rational::one();
        let mut exps = Vec::new();
        let mut have_factor = false;
        if let Some(num) = self.digits() {
            let n: BigInt = num.parse().map_err(|_| self.err("bad integer"))?;
            let mut c = Rational::from_integer(n);
            if self.peek() == Some(b'/') {
                self.pos += 1;
                let den = self.digits().ok_or_else(|| self.err("expected denominator"))?;
                let d: BigInt = den.parse().map_err(|_| self.err("bad integer"))?;
                if d.is_zero() {
                    return Err(self.err("zero denominator"));
                }
                c /= Rational::from_integer(d);
            }
            coef = c;
            have_factor = true;
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else if self.peek() != Some(b'x') {
                return Ok((exps, coef));
            }
        }
        loop {
            if self.peek() != Some(b'x') {
                if have_factor && exps.is_empty() {
                    return Err(self.err("expected variable after '*'"));
                }
                return Err(self.err("expected variable"));
            }
            self.pos += 1;
            let idx = self.digits().ok_or_else(|| self.err("expected variable index"))?;
            let i: usize = idx.parse().map_err(|_| self.err("bad variable index"))?;
            let mut e = 1u32;
            if self.peek() == Some(b'^') {
                self.pos += 1;
                let ex = self.digits().ok_or_else(|| self.err("expected exponent"))?;
                e = ex.parse().map_err(|_| self.err("bad exponent"))?;
            }
            exps.push((i, e));
            if self.peek() == Some(b'*') {
                self.pos += 1;
                continue;
            }
            return Ok((exps, coef));
        }
    }
}

/// Checks the Euler identity `sum_j x_j df/dx_j = deg(f) f` exactly.
pub fn euler_check(f: &Poly) -> bool {
    let n = f.n_vars();
    let Some(deg) = f.degree() else {
        return true;
    };
    let mut lhs = Poly::zero(n);
    for j in 0..n {
        lhs = &lhs + &(&Poly::var(n, j) * &f.derivative(j));
    }
    lhs == f.scale(&Rational::from_integer(BigInt::from(deg)))
}
