//! Artinian Gorenstein quotients: apolar ideals, socles, h-vector tests and
//! complete intersections.

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideals::{hilbert_function, GradedIdeal};
use crate::macaulay::{o_sequence_signed, HVector};
use crate::poly::{monomial_basis, Echelon, GradedPiece, Monomial, Poly, Rational};
use crate::random::{small_integer, SeededRng};

/// A linear functional on `S_e`, stored by its values on the monomial basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualFunctional {
    n_vars: usize,
    degree: usize,
    values: Vec<Rational>,
}

impl DualFunctional {
    pub fn new(n_vars: usize, degree: usize, values: Vec<Rational>) -> Result<Self> {
        let len = monomial_basis(n_vars, degree).len();
        if values.len() != len {
            return Err(Error::arg(format!(
                "functional on S_{degree} needs {len} values, got {}",
                values.len()
            )));
        }
        if values.iter().all(Zero::is_zero) {
            return Err(Error::arg("functional is identically zero"));
        }
        Ok(DualFunctional {
            n_vars,
            degree,
            values,
        })
    }

    /// Builds from `(exponent vector, value)` pairs; repeated monomials add up.
    pub fn from_entries(n_vars: usize, degree: usize, entries: &[(Vec<u32>, Rational)]) -> Result<Self> {
        let basis = monomial_basis(n_vars, degree);
        let mut values = vec![Rational::zero(); basis.len()];
        for (exps, v) in entries {
            if exps.len() != n_vars {
                return Err(Error::arg(format!("exponent vector {exps:?} has wrong length")));
            }
            let m = Monomial::new(exps.clone());
            let i = basis
                .index_of(&m)
                .ok_or_else(|| Error::arg(format!("monomial {m} is not of degree {degree}")))?;
            values[i] += v;
        }
        Self::new(n_vars, degree, values)
    }

    /// The functional reading off the coefficient of one monomial.
    pub fn dual_to(m: &Monomial) -> Result<Self> {
        Self::from_entries(
            m.n_vars(),
            m.degree(),
            &[(m.exponents().to_vec(), Rational::from_integer(1.into()))],
        )
    }

    pub fn random(rng: &mut SeededRng, n_vars: usize, degree: usize, bound: i64) -> Self {
        let len = monomial_basis(n_vars, degree).len();
        loop {
            let values: Vec<Rational> = (0..len).map(|_| small_integer(rng, bound)).collect();
            if let Ok(f) = Self::new(n_vars, degree, values) {
                return f;
            }
        }
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// Nonzero entries as `(exponents, value)`.
    pub fn entries(&self) -> Vec<(Vec<u32>, Rational)> {
        let basis = monomial_basis(self.n_vars, self.degree);
        self.values
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, v)| (basis.get(i).exponents().to_vec(), v.clone()))
            .collect()
    }

    pub fn eval(&self, f: &Poly) -> Result<Rational> {
        let v = f.to_vector(self.degree)?;
        Ok(v.iter().zip(&self.values).map(|(a, b)| a * b).sum())
    }

    /// `I_k = {g in S_k : lambda(g m) = 0 for all monomials m of degree e - k}`.
    pub fn annihilator_piece(&self, k: usize) -> GradedPiece {
        let n = self.n_vars;
        if k > self.degree {
            return GradedPiece::full(n, k);
        }
        let top = monomial_basis(n, self.degree);
        let cols = monomial_basis(n, k);
        let mut pairing = Echelon::new(cols.len());
        for m in monomial_basis(n, self.degree - k).monomials() {
            let row: Vec<Rational> = cols
                .monomials()
                .iter()
                .map(|a| self.values[top.index_of(&a.mul(m)).expect("degree e monomial")].clone())
                .collect();
            pairing.insert(&row);
            if pairing.is_full() {
                break;
            }
        }
        let mut piece = GradedPiece::empty(n, k);
        for v in pairing.kernel() {
            piece.insert_vector(&v);
        }
        piece
    }
}

#[derive(Debug, Clone)]
pub struct Apolar {
    pub ideal: GradedIdeal,
    pub h: HVector,
}

/// The apolar ideal of `lambda`, stored degree by degree through `e + 1`.
pub fn apolar_ideal(lambda: &DualFunctional) -> Result<Apolar> {
    let n = lambda.n_vars();
    let e = lambda.degree();
    let mut ideal = GradedIdeal::zero(n);
    let mut h = Vec::with_capacity(e + 1);
    for k in 0..=e + 1 {
        let piece = lambda.annihilator_piece(k);
        if k <= e {
            h.push((piece.ambient_dim() - piece.dim()) as u64);
        }
        ideal = ideal.with_complete_piece(piece)?;
    }
    Ok(Apolar {
        ideal,
        h: HVector::new(h),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SocleReport {
    pub is_gorenstein: bool,
    /// `dim soc(S/I)_k` for `k = 0..=N`.
    pub socle_dims: Vec<u64>,
}

/// Socle dimensions of `S/I` in degrees `0..=N`.
pub fn socle_check(ideal: &GradedIdeal, socle_degree: usize) -> Result<SocleReport> {
    if ideal.hilbert_value(socle_degree + 1)? != 0 {
        return Err(Error::pre(format!(
            "S/I does not vanish in degree {}",
            socle_degree + 1
        )));
    }
    let n = ideal.n_vars();
    let mut socle_dims = Vec::with_capacity(socle_degree + 1);
    for k in 0..=socle_degree {
        let here = ideal.piece(k)?;
        let next = ideal.piece(k + 1)?;
        let basis_k = monomial_basis(n, k);
        let basis_next = monomial_basis(n, k + 1);
        let pivots = here.echelon().pivot_columns();
        let standard: Vec<usize> = (0..basis_k.len()).filter(|c| !pivots.contains(c)).collect();
        let width = basis_next.len();
        let mut images = Echelon::new(n * width);
        for &j in &standard {
            let m = basis_k.get(j);
            let mut row = vec![Rational::zero(); n * width];
            for i in 0..n {
                let mut v = vec![Rational::zero(); width];
                v[basis_next.index_of(&m.times_var(i)).expect("shifted monomial")] =
                    Rational::from_integer(1.into());
                let nf = next.echelon().normal_form(&v);
                row[i * width..(i + 1) * width].clone_from_slice(&nf);
            }
            images.insert(&row);
        }
        socle_dims.push((standard.len() - images.rank()) as u64);
    }
    let is_gorenstein = socle_dims
        .iter()
        .enumerate()
        .all(|(k, &s)| if k < socle_degree { s == 0 } else { s == 1 });
    Ok(SocleReport {
        is_gorenstein,
        socle_dims,
    })
}

/// `h_k = h_{e-k}` for the socle degree `e`; false for the zero vector.
pub fn is_symmetric(h: &HVector) -> bool {
    let v = h.trimmed();
    let v = v.values();
    !v.is_empty() && v.iter().eq(v.iter().rev())
}

/// Nondecreasing up to some index and nonincreasing after it.
pub fn is_unimodal(h: &HVector) -> bool {
    let v = h.values();
    let mut i = 0;
    while i + 1 < v.len() && v[i] <= v[i + 1] {
        i += 1;
    }
    while i + 1 < v.len() && v[i] >= v[i + 1] {
        i += 1;
    }
    i + 1 >= v.len()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StanleyVerdict {
    Admissible,
    NotAdmissible,
    /// `h_1 > 3`: outside the range where the criterion characterizes Gorenstein h-vectors.
    Inapplicable,
}

impl StanleyVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            StanleyVerdict::Admissible => "admissible",
            StanleyVerdict::NotAdmissible => "not admissible",
            StanleyVerdict::Inapplicable => "inapplicable",
        }
    }
}

/// Symmetry plus the O-sequence test on the first differences up to `t = floor(e/2)`.
pub fn stanley_admissible(h: &HVector) -> StanleyVerdict {
    let v = h.trimmed();
    let v = v.values();
    if v.get(1).copied().unwrap_or(0) > 3 {
        return StanleyVerdict::Inapplicable;
    }
    if !is_symmetric(h) {
        return StanleyVerdict::NotAdmissible;
    }
    let t = (v.len() - 1) / 2;
    let diffs: Vec<i64> = (0..=t)
        .map(|k| v[k] as i64 - if k == 0 { 0 } else { v[k - 1] as i64 })
        .collect();
    if o_sequence_signed(&diffs).ok {
        StanleyVerdict::Admissible
    } else {
        StanleyVerdict::NotAdmissible
    }
}

/// Coefficients of `prod_i (1 - t^{d_i}) / (1 - t)^{#d}`.
pub fn ci_hilbert_series(degrees: &[usize]) -> Result<HVector> {
    if degrees.contains(&0) {
        return Err(Error::arg("complete intersection degrees must be positive"));
    }
    let mut series = vec![1u64];
    for &d in degrees {
        let mut next = vec![0u64; series.len() + d - 1];
        for (i, &c) in series.iter().enumerate() {
            for slot in &mut next[i..i + d] {
                *slot += c;
            }
        }
        series = next;
    }
    Ok(HVector::new(series))
}

/// `sum_i (d_i - 1)`.
pub fn ci_socle_degree(degrees: &[usize]) -> Result<usize> {
    if degrees.contains(&0) {
        return Err(Error::arg("complete intersection degrees must be positive"));
    }
    Ok(degrees.iter().map(|d| d - 1).sum())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TateReport {
    pub determinant: String,
    pub socle_degree: usize,
    pub determinant_degree: usize,
    pub top_dimension: u64,
    pub determinant_in_ideal: bool,
    pub holds: bool,
}

/// Determinant of a square matrix of polynomials, by cofactor expansion.
pub fn poly_determinant(m: &[Vec<Poly>], n_vars: usize) -> Poly {
    let size = m.len();
    if size == 0 {
        return Poly::constant(n_vars, Rational::from_integer(1.into()));
    }
    let mut total = Poly::zero(n_vars);
    for j in 0..size {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Poly>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, p)| p.clone()).collect())
            .collect();
        let term = &m[0][j] * &poly_determinant(&minor, n_vars);
        total = if j % 2 == 0 { &total + &term } else { &total - &term };
    }
    total
}

/// Checks that the Jacobian determinant of a complete intersection spans the socle.
pub fn tate_socle_check(gens: &[Poly]) -> Result<TateReport> {
    let n = gens.first().map(Poly::n_vars).ok_or_else(|| Error::arg("no generators"))?;
    if gens.len() != n {
        return Err(Error::pre(format!(
            "a complete intersection in {n} variables needs {n} generators, got {}",
            gens.len()
        )));
    }
    let mut degrees = Vec::with_capacity(n);
    for g in gens {
        degrees.push(
            g.homogeneous_degree()
                .ok_or_else(|| Error::pre(format!("generator {g} is not a nonzero form")))?,
        );
    }
    let socle_degree = ci_socle_degree(&degrees)?;
    let ideal = GradedIdeal::new(n, gens.to_vec())?;
    if ideal.hilbert_value(socle_degree + 1)? != 0 {
        return Err(Error::pre("generators do not give an artinian quotient"));
    }
    let jac: Vec<Vec<Poly>> = gens.iter().map(|g| (0..n).map(|j| g.derivative(j)).collect()).collect();
    let det = poly_determinant(&jac, n);
    if det.is_zero() {
        return Err(Error::pre("Jacobian determinant vanishes identically"));
    }
    let determinant_degree = det
        .homogeneous_degree()
        .ok_or_else(|| Error::pre("Jacobian determinant is not homogeneous"))?;
    let top_dimension = ideal.hilbert_value(socle_degree)?;
    let determinant_in_ideal = if determinant_degree == socle_degree {
        ideal.piece(socle_degree)?.contains(&det)?
    } else {
        true
    };
    let holds = determinant_degree == socle_degree && top_dimension == 1 && !determinant_in_ideal;
    Ok(TateReport {
        determinant: det.to_string(),
        socle_degree,
        determinant_degree,
        top_dimension,
        determinant_in_ideal,
        holds,
    })
}

/// Hilbert function of the monomial complete intersection `(x_0^{d_0}, ...)`.
pub fn monomial_ci(degrees: &[usize]) -> Result<GradedIdeal> {
    let n = degrees.len();
    let gens = degrees
        .iter()
        .enumerate()
        .map(|(i, &d)| {
            let mut e = vec![0u32; n];
            e[i] = d as u32;
            Poly::monomial(Monomial::new(e), Rational::from_integer(1.into()))
        })
        .collect();
    GradedIdeal::new(n, gens)
}

/// Compares the series with the monomial CI computed as an ideal.
pub fn ci_matches_ideal(degrees: &[usize]) -> Result<bool> {
    let series = ci_hilbert_series(degrees)?;
    let ideal = monomial_ci(degrees)?;
    let h = hilbert_function(&ideal, series.len())?;
    Ok(h.trimmed() == series.trimmed())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::seeded;

    fn hv(v: &[u64]) -> HVector {
        HVector::new(v.to_vec())
    }

    #[test]
    fn apolar_examples() {
        let a = apolar_ideal(&DualFunctional::dual_to(&Monomial::new(vec![5, 0, 0, 0])).unwrap()).unwrap();
        assert_eq!(a.h.values(), &[1, 1, 1, 1, 1, 1]);
        let a = apolar_ideal(&DualFunctional::dual_to(&Monomial::new(vec![1, 1, 1, 1])).unwrap()).unwrap();
        assert_eq!(a.h.values(), &[1, 4, 6, 4, 1]);
        let sq = GradedIdeal::parse(4, &["x0^2", "x1^2", "x2^2", "x3^2"]).unwrap();
        for k in 0..=5 {
            assert_eq!(a.ideal.hilbert_value(k).unwrap(), sq.hilbert_value(k).unwrap());
        }
        let r = socle_check(&a.ideal, 4).unwrap();
        assert!(r.is_gorenstein);
        assert_eq!(r.socle_dims, vec![0, 0, 0, 0, 1]);
    }

    #[test]
    fn generic_apolar_has_maximal_catalecticants() {
        let mut rng = seeded(7);
        let lambda = DualFunctional::random(&mut rng, 4, 8, 9);
        let a = apolar_ideal(&lambda).unwrap();
        assert_eq!(a.h.values(), &[1, 4, 10, 20, 35, 20, 10, 4, 1]);
    }

    #[test]
    fn socle_examples() {
        let m = GradedIdeal::parse(4, &["x0", "x1", "x2", "x3"]).unwrap();
        let r = socle_check(&m, 0).unwrap();
        assert!(r.is_gorenstein);
        assert_eq!(r.socle_dims, vec![1]);
        let i = GradedIdeal::parse(2, &["x0^2", "x0*x1", "x1^2"]).unwrap();
        let r = socle_check(&i, 1).unwrap();
        assert!(!r.is_gorenstein);
        assert_eq!(r.socle_dims, vec![0, 2]);
    }

    #[test]
    fn vector_tests() {
        assert!(is_symmetric(&hv(&[1, 3, 5, 7, 8, 7, 5, 3, 1])));
        assert!(!is_symmetric(&hv(&[1, 2, 3])));
        assert!(is_symmetric(&hv(&[1])));
        assert!(!is_unimodal(&hv(&[1, 3, 6, 7, 6, 7, 6, 3, 1])));
        assert!(!is_unimodal(&hv(&[1, 3, 7, 6, 6, 6, 7, 3, 1])));
        assert!(is_unimodal(&hv(&[1, 3, 6, 8, 8, 8, 8, 8, 6, 3, 1])));
        assert_eq!(stanley_admissible(&hv(&[1, 3, 6, 6, 7, 6, 6, 3, 1])), StanleyVerdict::NotAdmissible);
        assert_eq!(stanley_admissible(&hv(&[1, 3, 6, 6, 8, 6, 6, 3, 1])), StanleyVerdict::NotAdmissible);
        assert_eq!(stanley_admissible(&hv(&[1, 3, 6, 6, 6, 6, 6, 3, 1])), StanleyVerdict::Admissible);
        assert_eq!(stanley_admissible(&hv(&[1, 4, 6, 4, 1])), StanleyVerdict::Inapplicable);
    }

    #[test]
    fn ci_examples() {
        assert_eq!(ci_hilbert_series(&[1, 2, 4, 5]).unwrap().values(), &[1, 3, 5, 7, 8, 7, 5, 3, 1]);
        assert_eq!(ci_hilbert_series(&[1, 1, 5, 5]).unwrap().values(), &[1, 2, 3, 4, 5, 4, 3, 2, 1]);
        assert_eq!(ci_hilbert_series(&[2, 2]).unwrap().values(), &[1, 2, 1]);
        assert_eq!(ci_socle_degree(&[1, 2, 4, 5]).unwrap(), 8);
        assert_eq!(ci_socle_degree(&[1, 1, 1, 1]).unwrap(), 0);
        assert_eq!(ci_socle_degree(&[3, 3, 3, 3]).unwrap(), 8);
        assert!(ci_matches_ideal(&[1, 2, 4, 5]).unwrap());
    }

    #[test]
    fn tate_examples() {
        let p = |s: &[&str]| s.iter().map(|g| Poly::parse(g, 4).unwrap()).collect::<Vec<_>>();
        let r = tate_socle_check(&p(&["x0^2", "x1^2", "x2^2", "x3^2"])).unwrap();
        assert!(r.holds);
        assert_eq!(r.determinant, "16*x0*x1*x2*x3");
        let r = tate_socle_check(&p(&["x0", "x1", "x2", "x3"])).unwrap();
        assert!(r.holds);
        assert_eq!(r.determinant, "1");
        let r = tate_socle_check(&p(&["x0", "x1^2", "x2^4", "x3^5"])).unwrap();
        assert!(r.holds);
        assert_eq!(r.socle_degree, 8);
        assert_eq!(r.determinant, "40*x1*x2^3*x3^4");
        assert!(tate_socle_check(&p(&["x0", "x1", "x2"])).is_err());
        assert!(tate_socle_check(&p(&["x0", "x0", "x2", "x3"])).is_err());
    }
}
