use nodal_core::gorenstein::{
    apolar_ideal, ci_hilbert_series, ci_matches_ideal, ci_socle_degree, is_symmetric, is_unimodal, socle_check,
    stanley_admissible, tate_socle_check, DualFunctional, StanleyVerdict,
};
use nodal_core::ideals::GradedIdeal;
use nodal_core::macaulay::HVector;
use nodal_core::poly::{Monomial, Poly};
use nodal_core::random::seeded;
use proptest::prelude::*;

fn hv(s: &str) -> HVector {
    HVector::parse(s).unwrap()
}

#[test]
fn spec_examples() {
    assert_eq!(ci_hilbert_series(&[1, 2, 4, 5]).unwrap(), hv("1 3 5 7 8 7 5 3 1"));
    assert_eq!(ci_socle_degree(&[1, 2, 4, 5]).unwrap(), 8);
    assert_eq!(ci_hilbert_series(&[2, 2, 2, 2]).unwrap(), hv("1 4 6 4 1"));
    assert!(ci_hilbert_series(&[0, 2]).is_err());
    assert!(is_symmetric(&hv("1 3 6 6 6 6 6 3 1")));
    assert!(!is_unimodal(&hv("1 3 6 7 6 7 6 3 1")));
    assert_eq!(stanley_admissible(&hv("1 3 6 6 7 6 6 3 1")), StanleyVerdict::NotAdmissible);
    assert_eq!(stanley_admissible(&hv("1 3 6 6 6 6 6 3 1")), StanleyVerdict::Admissible);
    assert_eq!(stanley_admissible(&hv("1 4 6 4 1")), StanleyVerdict::Inapplicable);
}

#[test]
fn apolar_of_squarefree_quartic() {
    let lambda = DualFunctional::dual_to(&Monomial::new(vec![1, 1, 1, 1])).unwrap();
    let a = apolar_ideal(&lambda).unwrap();
    assert_eq!(a.h, hv("1 4 6 4 1"));
    let s = socle_check(&a.ideal, 4).unwrap();
    assert!(s.is_gorenstein);
    assert_eq!(s.socle_dims, vec![0, 0, 0, 0, 1]);
}

#[test]
fn socle_of_non_gorenstein_quotient() {
    // S/(x0^2, x0*x1, x1^2) in 2 variables has a 2-dimensional socle in degree 1
    let i = GradedIdeal::parse(2, &["x0^2", "x0*x1", "x1^2"]).unwrap();
    let s = socle_check(&i, 1).unwrap();
    assert!(!s.is_gorenstein);
    assert_eq!(s.socle_dims, vec![0, 2]);
}

#[test]
fn tate_examples() {
    for gens in [vec!["x0", "x1", "x2", "x3"], vec!["x0^2", "x1^2", "x2^2", "x3^2"], vec!["x0", "x1^2", "x2^4", "x3^5"]] {
        let polys: Vec<Poly> = gens.iter().map(|g| Poly::parse(g, 4).unwrap()).collect();
        assert!(tate_socle_check(&polys).unwrap().holds, "{gens:?}");
    }
    let bad: Vec<Poly> = ["x0", "x1"].iter().map(|g| Poly::parse(g, 4).unwrap()).collect();
    assert!(tate_socle_check(&bad).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn ci_invariants(degrees in prop::collection::vec(1usize..=6, 1..=5)) {
        let h = ci_hilbert_series(&degrees).unwrap();
        prop_assert!(is_symmetric(&h));
        prop_assert!(is_unimodal(&h));
        prop_assert_eq!(h.sum(), degrees.iter().map(|&d| d as u64).product::<u64>());
        prop_assert_eq!(h.socle_degree(), Some(ci_socle_degree(&degrees).unwrap()));
        prop_assert!(ci_matches_ideal(&degrees).unwrap());
    }

    #[test]
    fn apolar_quotients_are_gorenstein(seed in 0u64..10_000, n in 2usize..=4, e in 1usize..=5) {
        let lambda = DualFunctional::random(&mut seeded(seed), n, e, 3);
        let a = apolar_ideal(&lambda).unwrap();
        prop_assert!(is_symmetric(&a.h));
        prop_assert!(socle_check(&a.ideal, e).unwrap().is_gorenstein);
    }

    #[test]
    fn stanley_implies_symmetric(v in prop::collection::vec(0u64..=8, 2..=9)) {
        let mut v = v;
        v[0] = 1;
        let h = HVector::new(v);
        if stanley_admissible(&h) == StanleyVerdict::Admissible {
            prop_assert!(is_symmetric(&h));
        }
    }
}
