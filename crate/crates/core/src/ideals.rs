//! Homogeneous ideals handled degree by degree.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::{Arc, RwLock};

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::macaulay::{macaulay_expansion, upper_growth, HVector};
use crate::poly::{graded_dim, monomial_basis, GradedPiece, Monomial, Poly, Rational};

/// Homogeneous ideal given by generators and, optionally, directly stored graded pieces.
///
/// The degree-`k` piece is `S_1 * I_{k-1} + span(generators of degree k) + stored_k`.
#[derive(Debug)]
pub struct GradedIdeal {
    n_vars: usize,
    generators: Vec<Poly>,
    stored: BTreeMap<usize, GradedPiece>,
    /// Degrees whose stored piece is all of `I_k`.
    complete: BTreeSet<usize>,
    cache: RwLock<BTreeMap<usize, Arc<GradedPiece>>>,
}

impl Clone for GradedIdeal {
    fn clone(&self) -> Self {
        GradedIdeal {
            n_vars: self.n_vars,
            generators: self.generators.clone(),
            stored: self.stored.clone(),
            complete: self.complete.clone(),
            cache: RwLock::new(self.cache.read().expect("piece cache poisoned").clone()),
        }
    }
}

impl GradedIdeal {
    pub fn new(n_vars: usize, generators: Vec<Poly>) -> Result<Self> {
        if n_vars == 0 {
            return Err(Error::arg("an ideal needs at least one variable"));
        }
        let mut gens = Vec::new();
        for g in generators {
            if g.n_vars() != n_vars {
                return Err(Error::arg(format!("generator {g} lives in {} variables", g.n_vars())));
            }
            if g.is_zero() {
                continue;
            }
            if g.homogeneous_degree().is_none() {
                return Err(Error::pre(format!("generator {g} is not homogeneous")));
            }
            gens.push(g);
        }
        Ok(GradedIdeal {
            n_vars,
            generators: gens,
            stored: BTreeMap::new(),
            complete: BTreeSet::new(),
            cache: RwLock::new(BTreeMap::new()),
        })
    }

    pub fn zero(n_vars: usize) -> Self {
        Self::new(n_vars, Vec::new()).expect("zero ideal is valid")
    }

    pub fn parse(n_vars: usize, generators: &[&str]) -> Result<Self> {
        let gens = generators
            .iter()
            .map(|s| Poly::parse(s, n_vars))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n_vars, gens)
    }

    /// Adds a directly known subspace of the ideal.
    pub fn with_stored_piece(mut self, piece: GradedPiece) -> Result<Self> {
        if piece.n_vars() != self.n_vars {
            return Err(Error::arg("stored piece ring mismatch"));
        }
        let k = piece.degree();
        match self.stored.get_mut(&k) {
            Some(existing) => {
                for f in piece.basis() {
                    existing.insert(&f)?;
                }
            }
            None => {
                self.stored.insert(k, piece);
            }
        }
        self.cache.write().expect("piece cache poisoned").clear();
        Ok(self)
    }

    /// Stores the whole degree-`k` piece; it must already contain `S_1 I_{k-1}` and
    /// the generators of degree `k`.
    pub fn with_complete_piece(self, piece: GradedPiece) -> Result<Self> {
        let k = piece.degree();
        let mut out = self.with_stored_piece(piece)?;
        out.complete.insert(k);
        Ok(out)
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    pub fn stored_degrees(&self) -> Vec<usize> {
        self.stored.keys().copied().collect()
    }

    /// True when the ideal is given by monomial generators only.
    pub fn is_monomial(&self) -> bool {
        self.stored.is_empty() && self.generators.iter().all(|g| g.terms().len() == 1)
    }

    fn monomial_generators(&self) -> Vec<Monomial> {
        self.generators
            .iter()
            .map(|g| g.terms().keys().next().expect("nonzero generator").clone())
            .collect()
    }

    pub fn max_generator_degree(&self) -> usize {
        self.generators
            .iter()
            .filter_map(Poly::homogeneous_degree)
            .chain(self.stored.keys().copied())
            .max()
            .unwrap_or(0)
    }

    /// The degree-`k` piece `I_k`, computed once and cached.
    pub fn piece(&self, k: usize) -> Result<Arc<GradedPiece>> {
        if let Some(p) = self.cache.read().expect("piece cache poisoned").get(&k) {
            return Ok(Arc::clone(p));
        }
        if self.complete.contains(&k) {
            let piece = Arc::new(self.stored[&k].clone());
            let mut cache = self.cache.write().expect("piece cache poisoned");
            return Ok(Arc::clone(cache.entry(k).or_insert(piece)));
        }
        let prev = if k > 0 { Some(self.piece(k - 1)?) } else { None };
        let piece = match prev.as_deref() {
            Some(p) if p.is_full() => GradedPiece::full(self.n_vars, k),
            _ => {
                let mut piece = self
                    .stored
                    .get(&k)
                    .cloned()
                    .unwrap_or_else(|| GradedPiece::empty(self.n_vars, k));
                for g in &self.generators {
                    if g.homogeneous_degree() == Some(k) {
                        piece.insert(g)?;
                    }
                }
                if let Some(p) = prev.as_deref() {
                    multiply_up_into(p, &mut piece);
                }
                piece
            }
        };
        let piece = Arc::new(piece);
        // a concurrent computation of the same degree yields the same basis
        let mut cache = self.cache.write().expect("piece cache poisoned");
        Ok(Arc::clone(cache.entry(k).or_insert(piece)))
    }

    pub fn dim_piece(&self, k: usize) -> Result<u64> {
        if self.is_monomial() {
            let total = graded_dim(self.n_vars, k);
            return Ok(total - standard_monomial_count(self.n_vars, &self.monomial_generators(), k));
        }
        Ok(self.piece(k)?.dim() as u64)
    }

    /// `h(k) = dim (S/I)_k`.
    pub fn hilbert_value(&self, k: usize) -> Result<u64> {
        Ok(graded_dim(self.n_vars, k) - self.dim_piece(k)?)
    }

    /// Ideal generated by the single graded piece `I_t`.
    pub fn truncation(&self, t: usize) -> Result<GradedIdeal> {
        if self.is_monomial() {
            let gens: Vec<Poly> = self
                .monomial_generators()
                .into_iter()
                .filter(|m| m.degree() <= t)
                .map(|m| Poly::monomial(m, Rational::from_integer(1.into())))
                .collect();
            return GradedIdeal::new(self.n_vars, gens);
        }
        let p = self.piece(t)?;
        GradedIdeal::new(self.n_vars, Vec::new())?.with_stored_piece((*p).clone())
    }
}

fn multiply_up_into(prev: &GradedPiece, target: &mut GradedPiece) {
    let n = prev.n_vars();
    let from = monomial_basis(n, prev.degree());
    let to = monomial_basis(n, prev.degree() + 1);
    let shift: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            from.monomials()
                .iter()
                .map(|m| to.index_of(&m.times_var(i)).expect("shifted monomial in basis"))
                .collect()
        })
        .collect();
    for table in &shift {
        for row in prev.echelon().rows() {
            if target.is_full() {
                return;
            }
            let mut v = vec![Rational::zero(); to.len()];
            for (j, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    v[table[j]] = Rational::from_integer(c.clone());
                }
            }
            target.insert_vector(&v);
        }
    }
}

/// Number of degree-`k` monomials divisible by none of `gens`.
fn standard_monomial_count(n_vars: usize, gens: &[Monomial], k: usize) -> u64 {
    if gens.iter().any(|g| g.degree() == 0) {
        return 0;
    }
    let relevant: Vec<&Monomial> = gens.iter().filter(|g| g.degree() <= k).collect();
    monomial_basis(n_vars, k)
        .monomials()
        .iter()
        .filter(|m| !relevant.iter().any(|g| g.divides(m)))
        .count() as u64
}

/// `h(0), ..., h(k_max)` of `S/I`.
pub fn hilbert_function(ideal: &GradedIdeal, k_max: usize) -> Result<HVector> {
    (0..=k_max)
        .map(|k| ideal.hilbert_value(k))
        .collect::<Result<Vec<_>>>()
        .map(HVector::new)
}

/// Span of the images of coordinate vectors (in the monomial basis of `S_k`)
/// under the substitution `x_i := images[i]`.
pub fn image_piece(n_vars: usize, k: usize, vectors: &[Vec<Rational>], images: &[Poly]) -> GradedPiece {
    let m = images.first().map_or(0, Poly::n_vars);
    let source = monomial_basis(n_vars, k);
    let target = monomial_basis(m, k);
    let mut memo: HashMap<usize, Vec<(usize, Rational)>> = HashMap::new();
    let mut piece = GradedPiece::empty(m, k);
    for v in vectors {
        if piece.is_full() {
            break;
        }
        let mut out = vec![Rational::zero(); target.len()];
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let img = memo.entry(i).or_insert_with(|| {
                let mono = Poly::monomial(source.get(i).clone(), Rational::from_integer(1.into()));
                mono.substitute(images)
                    .terms()
                    .iter()
                    .map(|(t, a)| (target.index_of(t).expect("image is homogeneous"), a.clone()))
                    .collect()
            });
            for (j, a) in img.iter() {
                out[*j] += c * a;
            }
        }
        piece.insert_vector(&out);
    }
    piece
}

/// One degree of the exact-sequence comparison for a hyperplane section.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SectionCheck {
    pub degree: usize,
    pub section_value: u64,
    pub difference: i64,
    pub holds: bool,
}

#[derive(Debug, Clone)]
pub struct HyperplaneSection {
    pub ideal: GradedIdeal,
    /// Index of the variable solved for from `l = 0`.
    pub eliminated: usize,
    pub checks: Vec<SectionCheck>,
}

impl HyperplaneSection {
    pub fn identity_holds(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn first_failure(&self) -> Option<usize> {
        self.checks.iter().find(|c| !c.holds).map(|c| c.degree)
    }
}

/// Substitution `S -> S/(l)` expressed in the remaining variables, in order.
pub fn section_map(l: &Poly) -> Result<(usize, Vec<Poly>)> {
    if l.is_zero() {
        return Err(Error::arg("hyperplane form is zero"));
    }
    if l.homogeneous_degree() != Some(1) {
        return Err(Error::arg(format!("{l} is not a linear form")));
    }
    let n = l.n_vars();
    if n < 2 {
        return Err(Error::arg("a hyperplane section needs at least two variables"));
    }
    let coeff = |i: usize| l.coefficient(&Monomial::var(n, i));
    let j = (0..n).rev().find(|&i| !coeff(i).is_zero()).expect("nonzero linear form");
    let cj = coeff(j);
    let m = n - 1;
    let images = (0..n)
        .map(|i| {
            if i == j {
                let terms = (0..n).filter(|&r| r != j).map(|r| {
                    let target = if r < j { r } else { r - 1 };
                    (Monomial::var(m, target), -coeff(r) / &cj)
                });
                Poly::from_terms(m, terms)
            } else {
                Poly::var(m, if i < j { i } else { i - 1 })
            }
        })
        .collect();
    Ok((j, images))
}

/// Image of `I` in `S/(l)`, plus the comparison `h_{(I,l)}(t)` vs `h_I(t) - h_I(t-1)` for `1 <= t <= k_max`.
pub fn hyperplane_section(ideal: &GradedIdeal, l: &Poly, k_max: usize) -> Result<HyperplaneSection> {
    if l.n_vars() != ideal.n_vars() {
        return Err(Error::arg("hyperplane ring mismatch"));
    }
    let (eliminated, images) = section_map(l)?;
    let m = ideal.n_vars() - 1;
    let gens = ideal
        .generators()
        .iter()
        .map(|g| g.substitute(&images))
        .collect();
    let mut section = GradedIdeal::new(m, gens)?;
    for (&k, piece) in &ideal.stored {
        let rows: Vec<Vec<Rational>> = piece
            .echelon()
            .rows()
            .iter()
            .map(|r| r.iter().map(|x| Rational::from_integer(x.clone())).collect())
            .collect();
        let image = image_piece(ideal.n_vars(), k, &rows, &images);
        section = if ideal.complete.contains(&k) {
            section.with_complete_piece(image)?
        } else {
            section.with_stored_piece(image)?
        };
    }
    let mut checks = Vec::new();
    for t in 1..=k_max {
        let hs = section.hilbert_value(t)?;
        let diff = ideal.hilbert_value(t)? as i64 - ideal.hilbert_value(t - 1)? as i64;
        checks.push(SectionCheck {
            degree: t,
            section_value: hs,
            difference: diff,
            holds: hs as i64 == diff,
        });
    }
    Ok(HyperplaneSection {
        ideal: section,
        eliminated,
        checks,
    })
}

/// How a base-locus dimension was certified.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Certificate {
    /// `h` vanished at some probed degree.
    Vanishing,
    /// Maximal growth `h(s+1) = h(s)^<s>` with the ideal generated in degree `<= s`.
    Gotzmann,
    /// Finite differences stabilized over the tail of the probe window.
    Differences,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BaseLocus {
    pub degree: usize,
    /// `-1` for the empty locus.
    pub dimension: i64,
    pub certificate: Certificate,
    /// `h(t), h(t+1), ...` of the ideal generated by `I_t`, as far as probed.
    pub probed: Vec<u64>,
}

/// Last degree probed when estimating the base locus of `|I_t|`.
pub fn probe_limit(n_vars: usize, t: usize) -> usize {
    t + 2 * (n_vars + t)
}

/// First degree at which stabilized differences are accepted without probing further.
fn early_stop(n_vars: usize, t: usize) -> usize {
    t + n_vars + t
}

/// Dimension of `Bs|I_t|`, read off from the Hilbert polynomial of `S/(I_t)`.
pub fn base_locus_dim(ideal: &GradedIdeal, t: usize) -> Result<i64> {
    Ok(base_locus(ideal, t)?.dimension)
}

pub fn base_locus(ideal: &GradedIdeal, t: usize) -> Result<BaseLocus> {
    if t == 0 {
        return Err(Error::arg("base locus degree must be at least 1"));
    }
    let trunc = ideal.truncation(t)?;
    let n = ideal.n_vars();
    let limit = probe_limit(n, t);
    let mut probed = Vec::new();
    let finish = |dimension: i64, certificate, probed: Vec<u64>| BaseLocus {
        degree: t,
        dimension,
        certificate,
        probed,
    };
    let mut current = trunc.hilbert_value(t)?;
    probed.push(current);
    for s in t..limit {
        if current == 0 {
            return Ok(finish(-1, Certificate::Vanishing, probed));
        }
        let next = trunc.hilbert_value(s + 1)?;
        probed.push(next);
        let cur_big = BigUint::from(current);
        if BigUint::from(next) == upper_growth(&cur_big, s)? {
            let exp = macaulay_expansion(&cur_big, s)?;
            let dim = exp.eps(s).to_i64().expect("small dimension");
            return Ok(finish(dim, Certificate::Gotzmann, probed));
        }
        if s + 1 >= early_stop(n, t) && next > 0 {
            if let Some(d) = stable_degree(&probed, n) {
                return Ok(finish(d, Certificate::Differences, probed));
            }
        }
        current = next;
    }
    if current == 0 {
        return Ok(finish(-1, Certificate::Vanishing, probed));
    }
    match stable_degree(&probed, n) {
        Some(d) => Ok(finish(d, Certificate::Differences, probed)),
        None => Err(Error::Indeterminate(format!(
            "Hilbert function of the degree-{t} base locus did not stabilize by degree {limit}"
        ))),
    }
}

/// Smallest `D` whose `(D+1)`-st differences vanish on the last `D + 4` values.
fn stable_degree(values: &[u64], n_vars: usize) -> Option<i64> {
    let vals: Vec<BigInt> = values.iter().map(|&v| BigInt::from(v)).collect();
    for d in 0..n_vars {
        let window = d + 4;
        if vals.len() < window {
            return None;
        }
        let mut diffs = vals[vals.len() - window..].to_vec();
        for _ in 0..=d {
            diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
        }
        if diffs.iter().all(Zero::is_zero) {
            return Some(d as i64);
        }
    }
    None
}

/// `(d_{n-1}, ..., d_0, d_{-1})` with `d_k = min{t : dim Bs|I_t| <= k}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DkProfile {
    pub d_values: Vec<usize>,
    pub socle_degree: usize,
    pub sum: usize,
    /// `sum >= N + n + 1`.
    pub lemma_check: bool,
}

pub fn dk_profile(ideal: &GradedIdeal, socle_degree: usize) -> Result<DkProfile> {
    let n_vars = ideal.n_vars();
    if ideal.hilbert_value(socle_degree + 1)? != 0 {
        return Err(Error::pre(format!(
            "S/I is nonzero in degree {}; socle degree {socle_degree} is wrong or S/I is not artinian",
            socle_degree + 1
        )));
    }
    let proj_dim = n_vars as i64 - 1;
    // indexed by k + 1 for k = -1..=n-1
    let mut first: Vec<Option<usize>> = vec![None; n_vars + 1];
    for t in 1..=socle_degree + 1 {
        let dim = base_locus_dim(ideal, t)?;
        for k in dim.max(-1)..proj_dim {
            let slot = &mut first[(k + 1) as usize];
            if slot.is_none() {
                *slot = Some(t);
            }
        }
        if dim < 0 {
            break;
        }
    }
    let d_values: Vec<usize> = (-1..proj_dim)
        .rev()
        .map(|k| first[(k + 1) as usize].expect("base locus is empty in degree N+1"))
        .collect();
    let sum = d_values.iter().sum();
    Ok(DkProfile {
        d_values,
        socle_degree,
        sum,
        lemma_check: sum >= socle_degree + n_vars,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(gens: &[&str]) -> GradedIdeal {
        GradedIdeal::parse(4, gens).unwrap()
    }

    #[test]
    fn hilbert_examples() {
        let h = hilbert_function(&ideal(&["x0", "x1", "x2", "x3"]), 3).unwrap();
        assert_eq!(h.values(), &[1, 0, 0, 0]);
        let ci = ideal(&["x0", "x1^2", "x2^4", "x3^5"]);
        assert_eq!(
            hilbert_function(&ci, 10).unwrap().values(),
            &[1, 3, 5, 7, 8, 7, 5, 3, 1, 0, 0]
        );
        assert_eq!(
            hilbert_function(&GradedIdeal::zero(4), 3).unwrap().values(),
            &[1, 4, 10, 20]
        );
    }

    #[test]
    fn generic_path_matches_monomial_path() {
        // same ideal after a unimodular change that keeps it non-monomial
        let a = ideal(&["x0", "x1^2", "x2^4", "x3^5"]);
        let b = ideal(&["x0 + x1", "x1^2", "x2^4", "x3^5"]);
        assert!(!b.is_monomial());
        for k in 0..=9 {
            assert_eq!(a.hilbert_value(k).unwrap(), b.hilbert_value(k).unwrap());
        }
    }

    #[test]
    fn section_examples() {
        let sec = hyperplane_section(&ideal(&["x0"]), &Poly::parse("x0", 4).unwrap(), 3).unwrap();
        assert_eq!(sec.first_failure(), Some(1));
        let z = GradedIdeal::zero(5);
        let sec = hyperplane_section(&z, &Poly::var(5, 4), 3).unwrap();
        assert_eq!(hilbert_function(&sec.ideal, 3).unwrap().values(), &[1, 4, 10, 20]);
        assert!(hyperplane_section(&z, &Poly::zero(5), 3).is_err());
    }

    #[test]
    fn base_locus_examples() {
        assert_eq!(base_locus_dim(&ideal(&["x0", "x1"]), 1).unwrap(), 1);
        assert_eq!(base_locus_dim(&ideal(&["x0", "x1", "x2", "x3"]), 1).unwrap(), -1);
        let ci = ideal(&["x0", "x1^2", "x2^4", "x3^5"]);
        assert_eq!(base_locus_dim(&ci, 2).unwrap(), 1);
        assert_eq!(base_locus_dim(&ci, 4).unwrap(), 0);
        assert_eq!(base_locus_dim(&ci, 5).unwrap(), -1);
    }

    #[test]
    fn dk_examples() {
        let p = dk_profile(&ideal(&["x0", "x1^2", "x2^4", "x3^5"]), 8).unwrap();
        assert_eq!(p.d_values, vec![1, 2, 4, 5]);
        assert_eq!(p.sum, 12);
        assert!(p.lemma_check);
        let p = dk_profile(&ideal(&["x0", "x1", "x2", "x3"]), 0).unwrap();
        assert_eq!(p.d_values, vec![1, 1, 1, 1]);
        let p = dk_profile(&ideal(&["x0", "x1", "x2^5", "x3^5"]), 8).unwrap();
        assert_eq!(p.d_values, vec![1, 1, 5, 5]);
        assert!(dk_profile(&ideal(&["x0", "x1"]), 3).is_err());
    }
}
