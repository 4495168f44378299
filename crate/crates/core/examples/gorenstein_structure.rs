//! Apolar ideals, socles, symmetry and complete-intersection series.

use nodal_core::gorenstein::{
    apolar_ideal, ci_hilbert_series, is_symmetric, is_unimodal, socle_check, stanley_admissible, tate_socle_check,
    DualFunctional,
};
use nodal_core::macaulay::HVector;
use nodal_core::poly::{Monomial, Poly};
use nodal_core::random::seeded;

fn main() -> nodal_core::Result<()> {
    let lambda = DualFunctional::dual_to(&Monomial::new(vec![1, 1, 1, 1]))?;
    let a = apolar_ideal(&lambda)?;
    println!("apolar ideal of the dual of x0x1x2x3: h = {}", a.h);
    for g in a.ideal.generators().iter().take(6) {
        println!("  {g}");
    }

    let generic = DualFunctional::random(&mut seeded(7), 3, 6, 5);
    let b = apolar_ideal(&generic)?;
    let socle = socle_check(&b.ideal, 6)?;
    println!("random functional in 3 variables, degree 6: h = {}, socle {:?}", b.h, socle.socle_dims);

    for degrees in [vec![1, 2, 4, 5], vec![2, 2, 3, 3], vec![3, 3, 3]] {
        let h = ci_hilbert_series(&degrees)?;
        println!("CI {degrees:?}: {h}  symmetric {}  unimodal {}", is_symmetric(&h), is_unimodal(&h));
    }

    for h in ["1 3 6 6 6 6 6 3 1", "1 3 6 6 7 6 6 3 1", "1 3 5 5 3 1"] {
        println!("{h}: {:?}", stanley_admissible(&HVector::parse(h)?));
    }

    let ci: Vec<Poly> = ["x0^2", "x1^2 + x0*x2", "x2^3", "x3^2 - x1*x3"]
        .iter()
        .map(|g| Poly::parse(g, 4))
        .collect::<Result<_, _>>()?;
    let t = tate_socle_check(&ci)?;
    println!("Jacobian determinant spans the socle: {}", t.holds);
    Ok(())
}
