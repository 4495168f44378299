//! Macaulay expansions and the growth/shadow operators built on them.
//!
//! Every nonnegative integer `C` has a unique greedy representation in base `d`
//!
//! ```text
//! C = binom(d + e_d, d) + binom(d-1 + e_{d-1}, d-1) + ... + binom(1 + e_1, 1)
//! ```
//!
//! with `e_d >= e_{d-1} >= ... >= e_1 >= -1`. The upper growth `C^<d>` bounds the
//! next value of a Hilbert function, the lower shadow `C_{*d}` bounds the previous
//! one. All arithmetic is arbitrary precision.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// `binom(a, b)` with the conventions used throughout: zero when `a < b`,
/// in particular zero for every negative `a`.
pub fn binomial(a: &BigInt, b: usize) -> BigUint {
    if *a < BigInt::from(b) {
        return BigUint::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for j in 0..b {
        num *= a - BigInt::from(j);
        den *= BigInt::from(j + 1);
    }
    (num / den).to_biguint().expect("binomial of a >= b >= 0 is nonnegative")
}

/// Small-argument convenience wrapper around [`binomial`].
pub fn binom_u64(a: i64, b: usize) -> u64 {
    binomial(&BigInt::from(a), b)
        .to_u64()
        .expect("binomial overflowed u64")
}

/// A Macaulay `d`-expansion: coefficients stored as `(e_d, ..., e_1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expansion {
    base: usize,
    coefficients: Vec<BigInt>,
}

impl Expansion {
    pub fn base(&self) -> usize {
        self.base
    }

    /// Coefficients in the order `(e_d, ..., e_1)`.
    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    /// The coefficient `e_i` for `1 <= i <= d`.
    pub fn eps(&self, i: usize) -> &BigInt {
        assert!(i >= 1 && i <= self.base, "index {i} outside 1..={}", self.base);
        &self.coefficients[self.base - i]
    }

    /// Pairs `(i, e_i)` from `i = d` down to `1`.
    pub fn indexed(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        (1..=self.base).rev().zip(self.coefficients.iter())
    }

    /// Reconstructs the expanded integer.
    pub fn value(&self) -> BigUint {
        self.indexed()
            .map(|(i, e)| binomial(&(BigInt::from(i) + e), i))
            .sum()
    }

    /// Human-readable binomial sum, e.g. `binom(4,3) + binom(3,2) + binom(0,1)`.
    pub fn binomial_terms(&self) -> String {
        self.indexed()
            .map(|(i, e)| format!("binom({},{})", BigInt::from(i) + e, i))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Display for Expansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coefficients.iter().map(|e| e.to_string()).collect();
        write!(f, "eps = [{}]", parts.join(", "))
    }
}

fn check_base(d: usize) -> Result<()> {
    if d == 0 {
        return Err(Error::arg("Macaulay base d must be at least 1"));
    }
    Ok(())
}

/// Greedy Macaulay expansion of `c` in base `d`.
pub fn macaulay_expansion(c: &BigUint, d: usize) -> Result<Expansion> {
    check_base(d)?;
    let mut rest = c.clone();
    let mut coefficients = Vec::with_capacity(d);
    for i in (1..=d).rev() {
        let eps = largest_eps(&rest, i);
        let used = binomial(&(BigInt::from(i) + &eps), i);
        rest -= used;
        coefficients.push(eps);
    }
    debug_assert!(rest.is_zero());
    Ok(Expansion {
        base: d,
        coefficients,
    })
}

/// Largest `e >= -1` with `binom(i + e, i) <= c`.
fn largest_eps(c: &BigUint, i: usize) -> BigInt {
    let fits = |e: &BigInt| binomial(&(BigInt::from(i) + e), i) <= *c;
    let mut lo = BigInt::from(-1);
    let mut step = BigInt::one();
    // gallop to an upper bound, then bisect on (lo, hi)
    let mut hi = &lo + &step;
    while fits(&hi) {
        lo = hi.clone();
        step *= 2;
        hi = &lo + &step;
    }
    while &hi - &lo > BigInt::one() {
        let mid: BigInt = (&lo + &hi) / 2;
        if fits(&mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// `C^<d>`: the maximal value of `h(d+1)` given `h(d) = C`.
pub fn upper_growth(c: &BigUint, d: usize) -> Result<BigUint> {
    let exp = macaulay_expansion(c, d)?;
    Ok(exp
        .indexed()
        .map(|(i, e)| binomial(&(BigInt::from(i) + e + 1), i + 1))
        .sum())
}

/// `C_{*d}` together with the strictness flag (`e_1 >= 0`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShadowBound {
    #[serde(serialize_with = "ser_biguint")]
    pub value: BigUint,
    pub strict: bool,
}

/// Lower shadow `C_{*d} = sum_{i=2..d} binom(i + e_i - 1, i - 1)`.
///
/// `h(d-1) >= C_{*d}` whenever `h(d) = C`; when `strict` is set the bound is strict.
pub fn lower_shadow(c: &BigUint, d: usize) -> Result<ShadowBound> {
    if d < 2 {
        return Err(Error::arg("lower shadow needs base d >= 2"));
    }
    let exp = macaulay_expansion(c, d)?;
    let value = exp
        .indexed()
        .filter(|(i, _)| *i >= 2)
        .map(|(i, e)| binomial(&(BigInt::from(i) + e - 1), i - 1))
        .sum();
    let strict = !exp.eps(1).is_negative();
    Ok(ShadowBound { value, strict })
}

pub(crate) fn ser_biguint<S: serde::Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v.to_u64() {
        Some(x) => s.serialize_u64(x),
        None => s.serialize_str(&v.to_string()),
    }
}

/// A finite sequence of Hilbert-function values `h_0, h_1, ...`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct HVector(Vec<u64>);

impl HVector {
    pub fn new(values: Vec<u64>) -> Self {
        HVector(values)
    }

    pub fn values(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Value at degree `k`, zero past the stored range.
    pub fn get(&self, k: usize) -> u64 {
        self.0.get(k).copied().unwrap_or(0)
    }

    /// Largest index with a nonzero entry.
    pub fn socle_degree(&self) -> Option<usize> {
        self.0.iter().rposition(|&v| v != 0)
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().sum()
    }

    /// Drops trailing zeros.
    pub fn trimmed(&self) -> HVector {
        match self.socle_degree() {
            Some(e) => HVector(self.0[..=e].to_vec()),
            None => HVector(Vec::new()),
        }
    }

    /// Parses whitespace- or comma-separated nonnegative integers, optionally
    /// wrapped in parentheses.
    pub fn parse(s: &str) -> Result<HVector> {
        let cleaned = s.replace(['(', ')', '[', ']'], " ");
        let values = cleaned
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<u64>()
                    .map_err(|_| Error::Parse(format!("not a nonnegative integer: {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(HVector(values))
    }
}

impl From<Vec<u64>> for HVector {
    fn from(v: Vec<u64>) -> Self {
        HVector(v)
    }
}

impl fmt::Display for HVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Outcome of the O-sequence test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OSequenceCheck {
    pub ok: bool,
    /// Smallest index at which the sequence fails.
    pub first_violation: Option<usize>,
}

/// Macaulay's criterion: `h_0 = 1` and `h_{k+1} <= h_k^<k>` for all `k >= 1`.
/// No constraint links `h_0` and `h_1`.
pub fn is_o_sequence(h: &HVector) -> OSequenceCheck {
    let signed: Vec<i64> = h.values().iter().map(|&v| v as i64).collect();
    o_sequence_signed(&signed)
}

/// Same test on a signed sequence; a negative entry is a violation at its index.
pub(crate) fn o_sequence_signed(h: &[i64]) -> OSequenceCheck {
    let fail = |k| OSequenceCheck {
        ok: false,
        first_violation: Some(k),
    };
    if h.first() != Some(&1) {
        return fail(0);
    }
    if let Some(k) = h.iter().position(|&v| v < 0) {
        return fail(k);
    }
    for k in 1..h.len().saturating_sub(1) {
        let bound = upper_growth(&BigUint::from(h[k] as u64), k).expect("k >= 1");
        if BigUint::from(h[k + 1] as u64) > bound {
            return fail(k + 1);
        }
    }
    OSequenceCheck {
        ok: true,
        first_violation: None,
    }
}

/// Lower bound for `h(k)`, `0 <= k <= d`, given `h(d) = h <= 2d + 1`.
pub fn lower_bound_profile(h: u64, d: u64, k: u64) -> Result<u64> {
    if d < 2 {
        return Err(Error::arg("profile needs d >= 2"));
    }
    if k > d {
        return Err(Error::arg(format!("k = {k} outside 0..={d}")));
    }
    if h <= d {
        Ok(h.min(k + 1))
    } else if h <= 2 * d {
        Ok((k + (h - d)).min(2 * k + 1))
    } else if h == 2 * d + 1 {
        Ok(2 * k + 1)
    } else {
        Err(Error::arg(format!("h = {h} exceeds 2d+1 = {}", 2 * d + 1)))
    }
}

/// Persistence data attached to a Hilbert value via Gotzmann's theorem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GotzmannData {
    pub expansion: Expansion,
    /// `e_d`; `-1` encodes the empty scheme.
    pub dimension: BigInt,
}

impl GotzmannData {
    /// Evaluates `p(t) = sum_i binom(t + e_i, t)`.
    pub fn eval(&self, t: u64) -> BigUint {
        self.expansion
            .coefficients()
            .iter()
            .map(|e| {
                if e.is_negative() {
                    BigUint::zero()
                } else {
                    binomial(&(BigInt::from(t) + e), t as usize)
                }
            })
            .sum()
    }

    /// Coefficients of `p(t)` in ascending powers of `t`.
    ///
    /// Refuses polynomials of degree above 256; those only arise from
    /// degenerate low bases and have no use here.
    pub fn coefficients(&self) -> Result<Vec<BigRational>> {
        let mut acc: Vec<BigRational> = Vec::new();
        for e in self.expansion.coefficients() {
            if e.is_negative() {
                continue;
            }
            let deg = e
                .to_usize()
                .filter(|&n| n <= 256)
                .ok_or_else(|| Error::arg("persistence polynomial degree too large"))?;
            // binom(t + e, e) = prod_{j=1..e} (t + j) / j
            let mut term = vec![BigRational::one()];
            for j in 1..=deg {
                let jr = BigRational::from_integer(BigInt::from(j));
                let mut next = vec![BigRational::zero(); term.len() + 1];
                for (p, c) in term.iter().enumerate() {
                    next[p + 1] += c / &jr;
                    next[p] += c;
                }
                term = next;
            }
            if acc.len() < term.len() {
                acc.resize(term.len(), BigRational::zero());
            }
            for (p, c) in term.into_iter().enumerate() {
                acc[p] += c;
            }
        }
        while acc.last().is_some_and(|c| c.is_zero()) {
            acc.pop();
        }
        Ok(acc)
    }

    /// Renders `p(t)`, e.g. `t + 1`, `6`, `1/2*t^2 + 3/2*t + 1`.
    pub fn polynomial_string(&self) -> Result<String> {
        let coeffs = self.coefficients()?;
        if coeffs.is_empty() {
            return Ok("0".to_string());
        }
        let mut out = String::new();
        for (p, c) in coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let var = match p {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{p}"),
            };
            if var.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&var);
            } else {
                out.push_str(&format!("{mag}*{var}"));
            }
        }
        Ok(out)
    }
}

/// Expansion of `c` in base `d` read as Gotzmann persistence data. The caller
/// is responsible for the persistence hypothesis `h(d+1) = c^<d>`.
pub fn gotzmann_polynomial(c: &BigUint, d: usize) -> Result<GotzmannData> {
    let expansion = macaulay_expansion(c, d)?;
    let dimension = expansion.eps(d).clone();
    Ok(GotzmannData {
        expansion,
        dimension,
    })
}
