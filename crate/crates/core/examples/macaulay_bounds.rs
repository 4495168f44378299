//! Macaulay expansions, growth and shadow bounds, and the profile of small Hilbert values.

use nodal_core::macaulay::{
    gotzmann_polynomial, is_o_sequence, lower_bound_profile, lower_shadow, macaulay_expansion, upper_growth, HVector,
};
use num_bigint::BigUint;

fn main() -> nodal_core::Result<()> {
    for (c, d) in [(7u32, 3usize), (38, 8), (6, 6), (100, 4)] {
        let c = BigUint::from(c);
        let e = macaulay_expansion(&c, d)?;
        let s = lower_shadow(&c, d)?;
        println!(
            "C = {c}, d = {d}: {}  growth {}  shadow {} (strict {})",
            e.binomial_terms(),
            upper_growth(&c, d)?,
            s.value,
            s.strict
        );
    }

    let g = gotzmann_polynomial(&BigUint::from(7u32), 3)?;
    println!("Gotzmann from h(3) = 7: p(t) = {}, dimension {}", g.polynomial_string()?, g.dimension);

    let profile: Vec<u64> = (0..=6).map(|k| lower_bound_profile(11, 6, k)).collect::<Result<_, _>>()?;
    println!("lower profile from h(6) = 11: {profile:?}");

    for h in ["1 3 6 10 15", "1 3 6 7 6 7 6 3 1", "1 2 5"] {
        let r = is_o_sequence(&HVector::parse(h)?);
        println!("{h}: O-sequence {} {:?}", r.ok, r.first_violation);
    }
    Ok(())
}
