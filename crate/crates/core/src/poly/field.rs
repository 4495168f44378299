//! Scalars for point evaluation: the rationals and the cyclotomic field `Q(z)`, `z^5 = 1`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// Minimal field interface needed to evaluate polynomials at points.
pub trait Scalar: Clone + PartialEq + fmt::Debug {
    fn field_zero() -> Self;
    fn field_one() -> Self;
    fn from_rational(r: &Rational) -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn vanishes(&self) -> bool;
}

impl Scalar for Rational {
    fn field_zero() -> Self {
        Zero::zero()
    }
    fn field_one() -> Self {
        One::one()
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
}

/// An element `c0 + c1 z + c2 z^2 + c3 z^3` of `Q(z)`, `1 + z + z^2 + z^3 + z^4 = 0`.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Cyclo5 {
    c: [Rational; 4],
}

impl Cyclo5 {
    pub fn new(c: [Rational; 4]) -> Self {
        Cyclo5 { c }
    }

    pub fn rational(r: Rational) -> Self {
        Cyclo5 {
            c: [r, Rational::zero(), Rational::zero(), Rational::zero()],
        }
    }

    pub fn from_int(v: i64) -> Self {
        Self::rational(Rational::from_integer(BigInt::from(v)))
    }

    /// The primitive fifth root of unity `z`.
    pub fn zeta() -> Self {
        Self::zeta_pow(1)
    }

    /// `z^k` for any integer `k`.
    pub fn zeta_pow(k: i64) -> Self {
        let k = k.rem_euclid(5) as usize;
        let mut c = [
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
        ];
        if k == 4 {
            for x in c.iter_mut() {
                *x = -Rational::one();
            }
        } else {
            c[k] = Rational::one();
        }
        Cyclo5 { c }
    }

    pub fn coords(&self) -> &[Rational; 4] {
        &self.c
    }

    pub fn is_rational(&self) -> bool {
        self.c[1..].iter().all(Zero::is_zero)
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.c[0])
    }

    /// Matrix of multiplication by `self` on the basis `1, z, z^2, z^3`;
    /// column `j` holds the coordinates of `self * z^j`.
    pub fn companion(&self) -> [[Rational; 4]; 4] {
        let mut m: [[Rational; 4]; 4] = Default::default();
        for j in 0..4 {
            let col = Scalar::times(self, &Cyclo5::zeta_pow(j as i64));
            for i in 0..4 {
                m[i][j] = col.c[i].clone();
            }
        }
        m
    }

    /// Image under the automorphism `z -> z^j`, `j` prime to 5.
    pub fn conjugate(&self, j: i64) -> Cyclo5 {
        let mut out = Cyclo5::from_int(0);
        for (k, c) in self.c.iter().enumerate() {
            let term = Scalar::times(&Cyclo5::rational(c.clone()), &Cyclo5::zeta_pow(j * k as i64));
            out = Scalar::plus(&out, &term);
        }
        out
    }

    /// Complex absolute value under `z = exp(2 pi i / 5)`; only used to pick charts.
    pub fn approx_abs(&self) -> f64 {
        let (mut re, mut im) = (0.0, 0.0);
        for (k, c) in self.c.iter().enumerate() {
            let v = c.to_f64().unwrap_or(f64::MAX);
            let ang = 2.0 * std::f64::consts::PI * k as f64 / 5.0;
            re += v * ang.cos();
            im += v * ang.sin();
        }
        (re * re + im * im).sqrt()
    }

    /// Multiplicative inverse, by solving `companion * x = e_0` exactly.
    pub fn inv(&self) -> Result<Cyclo5> {
        if Scalar::vanishes(self) {
            return Err(Error::arg("division by zero in Q(z5)"));
        }
        let m = self.companion();
        let mut a: Vec<Vec<Rational>> = (0..4)
            .map(|i| {
                let mut row = m[i].to_vec();
                row.push(if i == 0 { Rational::one() } else { Rational::zero() });
                row
            })
            .collect();
        for col in 0..4 {
            let piv = (col..4)
                .find(|&r| !a[r][col].is_zero())
                .expect("nonzero field element has invertible companion matrix");
            a.swap(col, piv);
            let p = a[col][col].clone();
            for x in a[col].iter_mut() {
                *x /= &p;
            }
            for r in 0..4 {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for j in 0..5 {
                        let t = &f * &a[col][j];
                        a[r][j] -= t;
                    }
                }
            }
        }
        Ok(Cyclo5 {
            c: [a[0][4].clone(), a[1][4].clone(), a[2][4].clone(), a[3][4].clone()],
        })
    }
}

impl Scalar for Cyclo5 {
    fn field_zero() -> Self {
        Cyclo5::rational(Zero::zero())
    }
    fn field_one() -> Self {
        Cyclo5::rational(One::one())
    }
    fn from_rational(r: &Rational) -> Self {
        Cyclo5::rational(r.clone())
    }
    fn plus(&self, other: &Self) -> Self {
        Cyclo5 {
            c: std::array::from_fn(|i| &self.c[i] + &other.c[i]),
        }
    }
    fn minus(&self, other: &Self) -> Self {
        Cyclo5 {
            c: std::array::from_fn(|i| &self.c[i] - &other.c[i]),
        }
    }
    fn times(&self, other: &Self) -> Self {
        let mut prod: [Rational; 7] = Default::default();
        for i in 0..4 {
            if self.c[i].is_zero() {
                continue;
            }
            for j in 0..4 {
                if !other.c[j].is_zero() {
                    prod[i + j] += &self.c[i] * &other.c[j];
                }
            }
        }
        // z^5 = 1, z^6 = z, then z^4 = -(1 + z + z^2 + z^3)
        let p5 = std::mem::take(&mut prod[5]);
        prod[0] += p5;
        let p6 = std::mem::take(&mut prod[6]);
        prod[1] += p6;
        let p4 = std::mem::take(&mut prod[4]);
        Cyclo5 {
            c: std::array::from_fn(|i| &prod[i] - &p4),
        }
    }
    fn vanishes(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }
}

impl Add for &Cyclo5 {
    type Output = Cyclo5;
    fn add(self, rhs: &Cyclo5) -> Cyclo5 {
        Scalar::plus(self, rhs)
    }
}

impl Sub for &Cyclo5 {
    type Output = Cyclo5;
    fn sub(self, rhs: &Cyclo5) -> Cyclo5 {
        Scalar::minus(self, rhs)
    }
}

impl Mul for &Cyclo5 {
    type Output = Cyclo5;
    fn mul(self, rhs: &Cyclo5) -> Cyclo5 {
        Scalar::times(self, rhs)
    }
}

impl Neg for &Cyclo5 {
    type Output = Cyclo5;
    fn neg(self) -> Cyclo5 {
        Cyclo5 {
            c: std::array::from_fn(|i| -&self.c[i]),
        }
    }
}

impl fmt::Display for Cyclo5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{r}");
        }
        let mut first = true;
        for (k, c) in self.c.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let z = match k {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{k}"),
            };
            if z.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&z)?;
            } else {
                write!(f, "{mag}*{z}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeta_has_order_five() {
        let z = Cyclo5::zeta();
        let mut p = Cyclo5::field_one();
        for k in 1..=5 {
            p = Scalar::times(&p, &z);
            assert_eq!(p, Cyclo5::zeta_pow(k));
        }
        assert_eq!(p, Cyclo5::field_one());
        // 1 + z + z^2 + z^3 + z^4 = 0
        let s = (0..5).fold(Cyclo5::field_zero(), |acc, k| Scalar::plus(&acc, &Cyclo5::zeta_pow(k)));
        assert!(Scalar::vanishes(&s));
    }

    #[test]
    fn inverse_round_trips() {
        let a = Cyclo5::new([
            Rational::from_integer(2.into()),
            Rational::from_integer((-1).into()),
            Rational::new(3.into(), 2.into()),
            Rational::zero(),
        ]);
        let prod = Scalar::times(&a, &a.inv().unwrap());
        assert_eq!(prod, Cyclo5::field_one());
        assert!(Cyclo5::field_zero().inv().is_err());
    }

    #[test]
    fn roots_of_unity_have_unit_modulus() {
        for k in 0..5 {
            assert!((Cyclo5::zeta_pow(k).approx_abs() - 1.0).abs() < 1e-12);
        }
    }
}
