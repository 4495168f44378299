use num_traits::Zero;

use super::linalg::Echelon;
use super::monomial::monomial_basis;
use super::polynomial::Poly;
use super::Rational;
use crate::error::{Error, Result};
use crate::macaulay::binom_u64;

/// `dim S_k` for `n_vars` variables.
pub fn graded_dim(n_vars: usize, k: usize) -> u64 {
    if n_vars == 0 {
        return u64::from(k == 0);
    }
    binom_u64((k + n_vars - 1) as i64, n_vars - 1)
}

/// A subspace of the degree-`k` forms, kept as an echelon basis in monomial coordinates.
#[derive(Clone, Debug)]
pub struct GradedPiece {
    degree: usize,
    n_vars: usize,
    echelon: Echelon,
}

impl GradedPiece {
    pub fn empty(n_vars: usize, degree: usize) -> Self {
        let dim = monomial_basis(n_vars, degree).len();
        GradedPiece {
            degree,
            n_vars,
            echelon: Echelon::new(dim),
        }
    }

    pub fn full(n_vars: usize, degree: usize) -> Self {
        let mut p = Self::empty(n_vars, degree);
        let dim = p.ambient_dim();
        for i in 0..dim {
            let mut v = vec![Rational::zero(); dim];
            v[i] = Rational::from_integer(1.into());
            p.echelon.insert(&v);
        }
        p
    }

    pub fn from_polys(n_vars: usize, degree: usize, polys: &[Poly]) -> Result<Self> {
        let mut p = Self::empty(n_vars, degree);
        for f in polys {
            p.insert(f)?;
        }
        Ok(p)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn dim(&self) -> usize {
        self.echelon.rank()
    }

    pub fn ambient_dim(&self) -> usize {
        self.echelon.ncols()
    }

    pub fn is_full(&self) -> bool {
        self.echelon.is_full()
    }

    pub fn echelon(&self) -> &Echelon {
        &self.echelon
    }

    fn check(&self, f: &Poly) -> Result<()> {
        if f.n_vars() != self.n_vars {
            return Err(Error::arg("polynomial ring mismatch"));
        }
        if !f.is_zero() && f.homogeneous_degree() != Some(self.degree) {
            return Err(Error::arg(format!("{f} is not a form of degree {}", self.degree)));
        }
        Ok(())
    }

    /// Adds a form; returns whether the dimension grew.
    pub fn insert(&mut self, f: &Poly) -> Result<bool> {
        self.check(f)?;
        if self.is_full() || f.is_zero() {
            return Ok(false);
        }
        Ok(self.echelon.insert(&f.to_vector(self.degree)?))
    }

    pub fn insert_vector(&mut self, v: &[Rational]) -> bool {
        !self.is_full() && self.echelon.insert(v)
    }

    pub fn contains(&self, f: &Poly) -> Result<bool> {
        self.check(f)?;
        if self.is_full() || f.is_zero() {
            return Ok(true);
        }
        Ok(self.echelon.contains(&f.to_vector(self.degree)?))
    }

    /// Canonical representative of `f` modulo this subspace.
    pub fn normal_form(&self, f: &Poly) -> Result<Poly> {
        self.check(f)?;
        if f.is_zero() || self.is_full() {
            return Ok(Poly::zero(self.n_vars));
        }
        let v = self.echelon.normal_form(&f.to_vector(self.degree)?);
        Ok(Poly::from_vector(self.n_vars, self.degree, &v))
    }

    /// Basis polynomials (primitive integer coefficient rows of the echelon form).
    pub fn basis(&self) -> Vec<Poly> {
        self.echelon
            .rows()
            .iter()
            .map(|r| {
                let v: Vec<Rational> = r.iter().map(|x| Rational::from_integer(x.clone())).collect();
                Poly::from_vector(self.n_vars, self.degree, &v)
            })
            .collect()
    }

    /// Forms annihilated by every basis element under the coefficient pairing.
    pub fn orthogonal_complement(&self) -> Vec<Vec<Rational>> {
        self.echelon.kernel()
    }
}

/// Degree-`k` piece of the ideal generated by `gens`.
pub fn multiply_span(gens: &[Poly], k: usize, n_vars: usize) -> Result<GradedPiece> {
    let mut piece = GradedPiece::empty(n_vars, k);
    for g in gens {
        if g.is_zero() {
            continue;
        }
        if g.n_vars() != n_vars {
            return Err(Error::arg("generator ring mismatch"));
        }
        let Some(dg) = g.homogeneous_degree() else {
            return Err(Error::pre(format!("generator {g} is not homogeneous")));
        };
        if dg > k {
            continue;
        }
        for m in monomial_basis(n_vars, k - dg).monomials() {
            if piece.is_full() {
                return Ok(piece);
            }
            piece.insert(&g.mul_monomial(m))?;
        }
    }
    Ok(piece)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly {
        Poly::parse(s, 4).unwrap()
    }

    #[test]
    fn graded_dims() {
        assert_eq!(graded_dim(4, 2), 10);
        assert_eq!(graded_dim(5, 1), 5);
        assert_eq!(graded_dim(4, 7), 120);
        assert_eq!(graded_dim(5, 7), 330);
        assert_eq!(graded_dim(1, 9), 1);
    }

    #[test]
    fn spans() {
        assert_eq!(multiply_span(&[p("x0")], 2, 4).unwrap().dim(), 4);
        assert_eq!(multiply_span(&[p("x0"), p("x1")], 1, 4).unwrap().dim(), 2);
        assert_eq!(multiply_span(&[p("x0^2 - x1*x2")], 3, 4).unwrap().dim(), 4);
        assert!(multiply_span(&[p("x0 + x1^2")], 3, 4).is_err());
    }

    #[test]
    fn normal_forms_reduce_to_zero_on_members() {
        let piece = multiply_span(&[p("x0^2 - x1*x2"), p("x3^2")], 2, 4).unwrap();
        assert!(piece.normal_form(&p("2*x0^2 - 2*x1*x2 + x3^2")).unwrap().is_zero());
        let a = piece.normal_form(&p("x0^2")).unwrap();
        let b = piece.normal_form(&p("x1*x2")).unwrap();
        assert_eq!(a, b);
        assert!(!a.is_zero());
    }
}
