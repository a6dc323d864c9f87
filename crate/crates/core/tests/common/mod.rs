use degen_poly::{BellArgs, BivarPoly, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[allow(dead_code)]
/// A small random polynomial in λ and x: up to three terms of degree at most
/// two in each variable, coefficients `a/b` with `|a| <= 3`, `1 <= b <= 3`.
pub fn random_poly(rng: &mut ChaCha8Rng) -> BivarPoly {
    let terms = rng.random_range(1..=3);
    let p = BivarPoly::from_terms((0..terms).map(|_| {
        let e = (rng.random_range(0..=2u32), rng.random_range(0..=2u32));
        let c = Rational::new(rng.random_range(-3i64..=3), rng.random_range(1i64..=3)).unwrap();
        (e, c)
    }));
    if p.is_zero() {
        BivarPoly::one()
    } else {
        p
    }
}

#[allow(dead_code)]
pub fn random_args(seed: u64, m: usize) -> BellArgs {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..m).map(|_| random_poly(&mut rng)).collect()
}
