//! Nodal hypersurfaces in P^4 given by an explicit list of nodes.

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gorenstein::{apolar_ideal, is_symmetric, socle_check, DualFunctional, SocleReport};
use crate::ideals::{image_piece, section_map, GradedIdeal};
use crate::macaulay::HVector;
use crate::poly::{
    exact_rank, graded_dim, monomial_basis, nullspace, rank_cyclo, Cyclo5, GradedPiece, Monomial, Poly, Rational,
    Scalar,
};
use crate::random::{seeded, small_integer};

/// A projective point with coordinates in `Q(z5)`.
pub type Point = Vec<Cyclo5>;

pub fn rational_point(coords: &[i64]) -> Point {
    coords.iter().map(|&c| Cyclo5::from_int(c)).collect()
}

fn is_origin(p: &[Cyclo5]) -> bool {
    p.iter().all(Scalar::vanishes)
}

fn proportional(p: &[Cyclo5], q: &[Cyclo5]) -> bool {
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            let minor = Scalar::minus(&Scalar::times(&p[i], &q[j]), &Scalar::times(&p[j], &q[i]));
            if !minor.vanishes() {
                return false;
            }
        }
    }
    true
}

/// Rejects the origin, wrong lengths and repeated points.
pub fn check_points(points: &[Point], n_vars: usize) -> Result<()> {
    for (i, p) in points.iter().enumerate() {
        if p.len() != n_vars {
            return Err(Error::arg(format!("point {i} has {} coordinates, expected {n_vars}", p.len())));
        }
        if is_origin(p) {
            return Err(Error::arg(format!("point {i} is the origin")));
        }
    }
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            if proportional(&points[i], &points[j]) {
                return Err(Error::arg(format!("points {i} and {j} coincide")));
            }
        }
    }
    Ok(())
}

/// `(dF/dx_0, ..., dF/dx_{n-1})`.
pub fn jacobian_ideal(f: &Poly) -> Result<GradedIdeal> {
    if f.is_zero() {
        return Err(Error::arg("F is zero"));
    }
    match f.homogeneous_degree() {
        Some(d) if d >= 2 => {}
        Some(d) => return Err(Error::pre(format!("F has degree {d}, need at least 2"))),
        None => return Err(Error::pre("F is not homogeneous")),
    }
    let partials = (0..f.n_vars()).map(|i| f.derivative(i)).collect();
    GradedIdeal::new(f.n_vars(), partials)
}

#[derive(Debug, Clone, Serialize)]
pub struct NodeCheck {
    pub gradient_vanishes: bool,
    /// Coordinate set to 1 for the affine chart.
    pub chart: usize,
    #[serde(serialize_with = "ser_matrix")]
    pub hessian: Vec<Vec<Cyclo5>>,
    pub hessian_rank: usize,
    pub is_node: bool,
}

fn ser_matrix<S: serde::Serializer>(m: &[Vec<Cyclo5>], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(m.len()))?;
    for row in m {
        let r: Vec<String> = row.iter().map(ToString::to_string).collect();
        seq.serialize_element(&r)?;
    }
    seq.end()
}

/// Largest complex absolute value, ties to the lowest index.
pub fn chart_of(p: &[Cyclo5]) -> usize {
    let abs: Vec<f64> = p.iter().map(Cyclo5::approx_abs).collect();
    let max = abs.iter().cloned().fold(0.0, f64::max);
    (0..p.len())
        .find(|&i| !p[i].vanishes() && abs[i] >= max * (1.0 - 1e-9))
        .expect("point is not the origin")
}

pub fn verify_node(f: &Poly, p: &[Cyclo5]) -> Result<NodeCheck> {
    let n = f.n_vars();
    if p.len() != n {
        return Err(Error::arg(format!("point has {} coordinates, F has {n} variables", p.len())));
    }
    if is_origin(p) {
        return Err(Error::arg("the origin is not a projective point"));
    }
    if f.homogeneous_degree().is_none() {
        return Err(Error::pre("F is not homogeneous"));
    }
    let chart = chart_of(p);
    let inv = p[chart].inv()?;
    let q: Vec<Cyclo5> = p.iter().map(|c| Scalar::times(c, &inv)).collect();
    let gradient_vanishes = (0..n).all(|i| f.derivative(i).eval(&q).vanishes());
    let others: Vec<usize> = (0..n).filter(|&i| i != chart).collect();
    let hessian: Vec<Vec<Cyclo5>> = others
        .iter()
        .map(|&i| {
            let fi = f.derivative(i);
            others.iter().map(|&j| fi.derivative(j).eval(&q)).collect()
        })
        .collect();
    let hessian_rank = rank_over_field(&hessian);
    Ok(NodeCheck {
        gradient_vanishes,
        chart,
        is_node: gradient_vanishes && hessian_rank == others.len(),
        hessian,
        hessian_rank,
    })
}

fn rank_over_field(rows: &[Vec<Cyclo5>]) -> usize {
    if rows.iter().flatten().all(Cyclo5::is_rational) {
        let q: Vec<Vec<Rational>> = rows
            .iter()
            .map(|r| r.iter().map(|c| c.coords()[0].clone()).collect())
            .collect();
        exact_rank(&q)
    } else {
        rank_cyclo(rows)
    }
}

/// Values of all degree-`k` monomials at `p`, in basis order.
pub fn evaluation_row(p: &[Cyclo5], k: usize) -> Vec<Cyclo5> {
    let basis = monomial_basis(p.len(), k);
    let powers: Vec<Vec<Cyclo5>> = p
        .iter()
        .map(|c| {
            let mut v = vec![Cyclo5::from_int(1)];
            for e in 1..=k {
                let next = Scalar::times(&v[e - 1], c);
                v.push(next);
            }
            v
        })
        .collect();
    basis
        .monomials()
        .iter()
        .map(|m| {
            m.exponents()
                .iter()
                .enumerate()
                .fold(Cyclo5::from_int(1), |acc, (i, &e)| Scalar::times(&acc, &powers[i][e as usize]))
        })
        .collect()
}

/// `h_J(k)` for the ideal `J` of the points: rank of the evaluation matrix in degree `k`.
pub fn points_hilbert(points: &[Point], k: usize) -> usize {
    let rows: Vec<Vec<Cyclo5>> = points.iter().map(|p| evaluation_row(p, k)).collect();
    rank_over_field(&rows)
}

/// Closed under `z -> z^j` for `j = 2, 3, 4`, as a set of projective points.
pub fn is_galois_stable(points: &[Point]) -> bool {
    points.iter().all(|p| {
        (2..5).all(|j| {
            let c: Point = p.iter().map(|x| x.conjugate(j)).collect();
            points.iter().any(|q| proportional(&c, q))
        })
    })
}

/// Rational forms of degree `k` vanishing at every point; the points must be Galois stable.
pub fn point_ideal_piece(points: &[Point], n_vars: usize, k: usize) -> GradedPiece {
    let mut rows = Vec::with_capacity(points.len() * 4);
    for p in points {
        let row = evaluation_row(p, k);
        for c in 0..4 {
            let r: Vec<Rational> = row.iter().map(|x| x.coords()[c].clone()).collect();
            if r.iter().any(|x| !x.is_zero()) {
                rows.push(r);
            }
        }
    }
    let mut piece = GradedPiece::empty(n_vars, k);
    for v in nullspace(&rows, graded_dim(n_vars, k) as usize) {
        piece.insert_vector(&v);
    }
    piece
}

/// The ideal of a Galois-stable point set, with exact pieces through degree `k_max`.
pub fn points_ideal(points: &[Point], n_vars: usize, k_max: usize) -> Result<GradedIdeal> {
    check_points(points, n_vars)?;
    if !is_galois_stable(points) {
        return Err(Error::pre("point set is not closed under conjugation"));
    }
    let mut ideal = GradedIdeal::zero(n_vars);
    for k in 0..=k_max {
        ideal = ideal.with_complete_piece(point_ideal_piece(points, n_vars, k))?;
    }
    Ok(ideal)
}

/// A hypersurface together with its claimed singular points.
#[derive(Debug, Clone)]
pub struct NodeConfig {
    pub d: usize,
    pub f: Poly,
    pub points: Vec<Point>,
}

impl NodeConfig {
    pub fn new(f: Poly, points: Vec<Point>) -> Result<Self> {
        let d = f
            .homogeneous_degree()
            .ok_or_else(|| Error::pre("F is not a nonzero homogeneous form"))?;
        check_points(&points, f.n_vars())?;
        Ok(NodeConfig { d, f, points })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DefectReport {
    pub d: usize,
    pub n_points: usize,
    /// `2d - 5`.
    pub degree: usize,
    pub h_j: usize,
    pub defect: i64,
    pub verdict: String,
    pub caveat: String,
}

pub const COMPLETENESS_CAVEAT: &str = "assumes the listed points are all singular points of X";

/// `#points - h_J(2d-5)`, after checking every point is a node.
pub fn defect(cfg: &NodeConfig) -> Result<DefectReport> {
    if cfg.d < 3 {
        return Err(Error::pre(format!("2d - 5 < 0 for d = {}", cfg.d)));
    }
    for (i, p) in cfg.points.iter().enumerate() {
        let check = verify_node(&cfg.f, p)?;
        if !check.is_node {
            let why = if check.gradient_vanishes {
                format!("Hessian rank {} in chart x{}", check.hessian_rank, check.chart)
            } else {
                "gradient does not vanish".to_string()
            };
            return Err(Error::pre(format!("point {i} is not a node: {why}")));
        }
    }
    let degree = 2 * cfg.d - 5;
    let h_j = points_hilbert(&cfg.points, degree);
    let defect = cfg.points.len() as i64 - h_j as i64;
    let verdict = if defect == 0 {
        "defect 0: factorial on this certificate".to_string()
    } else {
        format!("defect {defect}: not factorial")
    };
    Ok(DefectReport {
        d: cfg.d,
        n_points: cfg.points.len(),
        degree,
        h_j,
        defect,
        verdict,
        caveat: COMPLETENESS_CAVEAT.to_string(),
    })
}

#[derive(Debug, Clone)]
pub struct GorensteinSection {
    pub socle_degree: usize,
    /// Variable eliminated by the hyperplane.
    pub eliminated: usize,
    /// `h` of the sectioned point ideal in degrees `0..=2d-4`.
    pub h_jbar: HVector,
    pub lambda: DualFunctional,
    pub ideal: GradedIdeal,
    pub h: HVector,
    pub contains_jbar: bool,
    pub symmetric: bool,
    pub socle: SocleReport,
}

impl GorensteinSection {
    pub fn verified(&self) -> bool {
        self.contains_jbar && self.symmetric && self.socle.is_gorenstein && self.h.socle_degree() == Some(self.socle_degree)
    }
}

/// Sections the point ideal by `l`, picks a seeded functional on `S_{2d-4}` killing
/// the image, and returns its apolar ideal.
pub fn gorenstein_section(points: &[Point], d: usize, l: &Poly, seed: u64) -> Result<GorensteinSection> {
    if points.is_empty() {
        return Err(Error::pre("no points"));
    }
    if d < 3 {
        return Err(Error::pre(format!("2d - 5 < 0 for d = {d}")));
    }
    let n = l.n_vars();
    check_points(points, n)?;
    if !is_galois_stable(points) {
        return Err(Error::pre("point set is not closed under conjugation"));
    }
    let (eliminated, images) = section_map(l)?;
    for (i, p) in points.iter().enumerate() {
        if l.eval(p).vanishes() {
            return Err(Error::pre(format!("the hyperplane passes through point {i}")));
        }
    }
    let e = 2 * d - 4;
    let m = n - 1;
    let mut jbar = Vec::with_capacity(e + 1);
    for t in 0..=e {
        let piece = point_ideal_piece(points, n, t);
        let rows: Vec<Vec<Rational>> = piece
            .echelon()
            .rows()
            .iter()
            .map(|r| r.iter().map(|x| Rational::from_integer(x.clone())).collect())
            .collect();
        jbar.push(image_piece(n, t, &rows, &images));
    }
    let h_jbar = HVector::new(jbar.iter().map(|p| (p.ambient_dim() - p.dim()) as u64).collect());
    let top = &jbar[e];
    if top.is_full() {
        return Err(Error::pre(format!(
            "the sectioned ideal fills degree {e}: defect-zero certificate"
        )));
    }
    let complement = top.orthogonal_complement();
    let mut rng = seeded(seed);
    let values = loop {
        let mut v = vec![Rational::zero(); graded_dim(m, e) as usize];
        for w in &complement {
            let c = small_integer(&mut rng, 10);
            for (a, b) in v.iter_mut().zip(w) {
                *a += &c * b;
            }
        }
        if v.iter().any(|x| !x.is_zero()) {
            break v;
        }
    };
    let lambda = DualFunctional::new(m, e, values)?;
    let apolar = apolar_ideal(&lambda)?;
    let mut contains_jbar = true;
    for (t, piece) in jbar.iter().enumerate() {
        let target = apolar.ideal.piece(t)?;
        if piece.dim() > target.dim() {
            contains_jbar = false;
            break;
        }
        for row in piece.echelon().rows() {
            let v: Vec<Rational> = row.iter().map(|x| Rational::from_integer(x.clone())).collect();
            if !target.echelon().contains(&v) {
                contains_jbar = false;
                break;
            }
        }
    }
    let socle = socle_check(&apolar.ideal, e)?;
    Ok(GorensteinSection {
        socle_degree: e,
        eliminated,
        h_jbar,
        symmetric: is_symmetric(&apolar.h),
        lambda,
        ideal: apolar.ideal,
        h: apolar.h,
        contains_jbar,
        socle,
    })
}

/// A linear form with seeded nonzero coefficients avoiding every point.
pub fn general_hyperplane(points: &[Point], n_vars: usize, seed: u64) -> Poly {
    let mut rng = seeded(seed);
    loop {
        let terms: Vec<(Monomial, Rational)> = (0..n_vars)
            .map(|i| (Monomial::var(n_vars, i), small_integer(&mut rng, 20)))
            .collect();
        let l = Poly::from_terms(n_vars, terms);
        if !l.is_zero() && points.iter().all(|p| !l.eval(p).vanishes()) {
            return l;
        }
    }
}

/// The 25 points `x0 = x1 = 0`, `x2^5 = x3^5 = x4^5`.
pub fn sextic_nodes() -> Vec<Point> {
    let mut out = Vec::with_capacity(25);
    for a in 0..5 {
        for b in 0..5 {
            out.push(vec![
                Cyclo5::from_int(0),
                Cyclo5::from_int(0),
                Cyclo5::from_int(1),
                Cyclo5::zeta_pow(a),
                Cyclo5::zeta_pow(b),
            ]);
        }
    }
    out
}

/// Sextic with exactly the 25 nodes of [`sextic_nodes`].
pub const SEXTIC_25: &str = "x0*x2^5 - x0*x3^5 + x1*x3^5 - x1*x4^5 + x0^6 + x1^6";

/// Cubic whose only singular point is `(0,0,0,0,1)`, a node.
pub const CUBIC_ONE_NODE: &str = "x4*x0*x1 - x4*x2*x3 + x0^3 + x1^3 + x2^3 + x3^3 + x0*x2^2 + x1*x3^2";

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly {
        Poly::parse(s, 5).unwrap()
    }

    #[test]
    fn jacobian_of_quadric_is_maximal() {
        let j = jacobian_ideal(&p("x0^2 + x1^2 + x2^2 + x3^2 + x4^2")).unwrap();
        assert_eq!(j.hilbert_value(1).unwrap(), 0);
        assert!(jacobian_ideal(&Poly::zero(5)).is_err());
    }

    #[test]
    fn sextic_partials() {
        let f = p("x0*x2^5 - x0*x3^5 + x1*x3^5 - x1*x4^5");
        let j = jacobian_ideal(&f).unwrap();
        let want = ["x2^5 - x3^5", "x3^5 - x4^5", "5*x0*x2^4", "5*x1*x3^4 - 5*x0*x3^4", "-5*x1*x4^4"];
        for (g, w) in j.generators().iter().zip(want) {
            assert_eq!(*g, p(w));
        }
    }

    #[test]
    fn hessian_at_sample_node() {
        let f = p("x0*x2^5 - x0*x3^5 + x1*x3^5 - x1*x4^5");
        let c = verify_node(&f, &rational_point(&[0, 0, 1, 1, 1])).unwrap();
        assert!(c.is_node);
        assert_eq!(c.chart, 2);
        let want = [[0, 0, -5, 0], [0, 0, 5, -5], [-5, 5, 0, 0], [0, -5, 0, 0]];
        for (row, w) in c.hessian.iter().zip(want) {
            let r: Vec<Cyclo5> = w.iter().map(|&x| Cyclo5::from_int(x)).collect();
            assert_eq!(row, &r);
        }
    }

    #[test]
    fn triple_plane_is_not_nodal() {
        let c = verify_node(&p("x0^3"), &rational_point(&[0, 1, 0, 0, 0])).unwrap();
        assert!(c.gradient_vanishes);
        assert_eq!(c.hessian_rank, 0);
        assert!(!c.is_node);
        assert!(verify_node(&p("x0^3"), &rational_point(&[0, 0, 0, 0, 0])).is_err());
    }

    #[test]
    fn collinear_points() {
        let pts = vec![
            rational_point(&[1, 0, 0, 0, 0]),
            rational_point(&[0, 1, 0, 0, 0]),
            rational_point(&[1, 1, 0, 0, 0]),
        ];
        assert_eq!(points_hilbert(&pts, 1), 2);
        assert_eq!(points_hilbert(&pts[..1], 1), 1);
    }

    #[test]
    fn sextic_defect_is_one() {
        let cfg = NodeConfig::new(p(SEXTIC_25), sextic_nodes()).unwrap();
        let r = defect(&cfg).unwrap();
        assert_eq!((r.n_points, r.h_j, r.defect), (25, 24, 1));
    }

    #[test]
    fn cubic_defect_is_zero() {
        let cfg = NodeConfig::new(p(CUBIC_ONE_NODE), vec![rational_point(&[0, 0, 0, 0, 1])]).unwrap();
        let r = defect(&cfg).unwrap();
        assert_eq!(r.defect, 0);
        assert!(r.verdict.contains("factorial on this certificate"));
    }

    #[test]
    fn non_node_is_named() {
        let cfg = NodeConfig::new(p(CUBIC_ONE_NODE), vec![rational_point(&[1, 0, 0, 0, 0])]).unwrap();
        let err = defect(&cfg).unwrap_err().to_string();
        assert!(err.contains("point 0"), "{err}");
    }

    #[test]
    fn nodes_are_galois_stable() {
        assert!(is_galois_stable(&sextic_nodes()));
        let mut half = sextic_nodes();
        half.truncate(7);
        assert!(!is_galois_stable(&half));
    }

    #[test]
    fn single_point_has_no_section() {
        let pts = vec![rational_point(&[0, 0, 0, 0, 1])];
        let l = general_hyperplane(&pts, 5, 1);
        assert!(gorenstein_section(&pts, 3, &l, 1).is_err());
        assert!(gorenstein_section(&[], 3, &l, 1).is_err());
    }

    #[test]
    fn sextic_section_is_gorenstein() {
        let pts = sextic_nodes();
        let l = general_hyperplane(&pts, 5, 7);
        let g = gorenstein_section(&pts, 6, &l, 3).unwrap();
        assert_eq!(g.h_jbar.values(), &[1, 2, 3, 4, 5, 4, 3, 2, 1]);
        assert!(g.verified(), "{:?}", g.h);
    }
}
