//! Seeded generators for "general" choices; every draw is reproducible from the seed.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::poly::{monomial_basis, Poly, Rational};

pub type SeededRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Integer in `[-bound, bound]`.
pub fn small_integer(rng: &mut SeededRng, bound: i64) -> Rational {
    Rational::from_integer(BigInt::from(rng.gen_range(-bound..=bound)))
}

/// Form of degree `k` with independent coefficients in `[-bound, bound]`.
pub fn random_form(rng: &mut SeededRng, n_vars: usize, k: usize, bound: i64) -> Poly {
    let basis = monomial_basis(n_vars, k);
    let coeffs: Vec<Rational> = (0..basis.len()).map(|_| small_integer(rng, bound)).collect();
    Poly::from_vector(n_vars, k, &coeffs)
}

/// Nonzero form of degree `k`.
pub fn random_nonzero_form(rng: &mut SeededRng, n_vars: usize, k: usize, bound: i64) -> Poly {
    loop {
        let f = random_form(rng, n_vars, k, bound);
        if !f.is_zero() {
            return f;
        }
    }
}
