//! Lucas–Lehmer test for Mersenne numbers.

use num::{BigUint, One, Zero};

use crate::error::{Error, Result};
use crate::exec::Execution;

fn is_prime_exponent(p: u32) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// `v mod (2^p - 1)` by folding the high bits onto the low ones.
fn reduce_mersenne(mut v: BigUint, p: u32, modulus: &BigUint) -> BigUint {
    while v.bits() > p as u64 {
        let low = &v & modulus;
        v = (v >> p) + low;
    }
    if &v == modulus {
        BigUint::zero()
    } else {
        v
    }
}

/// Whether `M_p = 2^p - 1` is prime.
///
/// Composite `p` gives `false` without iterating; `p = 2` gives `true`.
/// Otherwise runs `s_0 = 4`, `s_{i+1} = s_i^2 - 2 (mod M_p)` and tests
/// `s_{p-2} = 0`.
pub fn lucas_lehmer(p: u32) -> Result<bool> {
    if p < 2 {
        return Err(Error::Usage(format!(
            "exponent must be at least 2, got {p}"
        )));
    }
    if p == 2 {
        return Ok(true);
    }
    if !is_prime_exponent(p) {
        return Ok(false);
    }
    let modulus = (BigUint::one() << p) - 1u32;
    let two = BigUint::from(2u32);
    let mut s = BigUint::from(4u32);
    for _ in 0..p - 2 {
        s = reduce_mersenne(&s * &s, p, &modulus);
        // s >= 0 here; add the modulus before subtracting to stay unsigned
        s = if s >= two {
            s - &two
        } else {
            s + &modulus - &two
        };
    }
    Ok(s.is_zero())
}

/// Every `p` in `2..=up_to` with `M_p` prime, ascending.
pub fn mersenne_prime_exponents(up_to: u32, exec: Execution) -> Vec<u32> {
    let candidates: Vec<u32> = (2..=up_to).collect();
    exec.map(candidates, |p| (p, lucas_lehmer(p).expect("p >= 2")))
        .into_iter()
        .filter_map(|(p, prime)| prime.then_some(p))
        .collect()
}
