//! Stirling numbers of the second kind and Bell polynomials.
//!
//! The incomplete Bell polynomials B_{n,k} take polynomial-valued arguments
//! and are built two ways: by summing over partition profiles and by reading
//! a coefficient of a power of a truncated series. Both must agree exactly.

use num::BigInt;

use crate::combinat::{factorial, factorial_q};
use crate::error::{Error, Result};
use crate::poly::BivarPoly;
use crate::rational::Rational;
use crate::series::TruncSeries;

/// Arguments `x_1, x_2, ..., x_m` of a Bell polynomial, indexed from one.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BellArgs(Vec<BivarPoly>);

impl BellArgs {
    pub fn new(args: Vec<BivarPoly>) -> Self {
        BellArgs(args)
    }

    /// `m` copies of the same value.
    pub fn repeated(value: BivarPoly, m: usize) -> Self {
        BellArgs(vec![value; m])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `x_i`, for `1 <= i <= len`.
    pub fn get(&self, i: usize) -> &BivarPoly {
        &self.0[i - 1]
    }

    pub fn as_slice(&self) -> &[BivarPoly] {
        &self.0
    }

    fn require(&self, needed: usize) -> Result<()> {
        if self.len() < needed {
            return Err(Error::Arity {
                needed,
                given: self.len(),
            });
        }
        Ok(())
    }
}

impl FromIterator<BivarPoly> for BellArgs {
    fn from_iter<I: IntoIterator<Item = BivarPoly>>(iter: I) -> Self {
        BellArgs(iter.into_iter().collect())
    }
}

/// Multiplicities `(l_1, ..., l_{n-k+1})` with `Σ l_i = k` and `Σ i l_i = n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartitionProfile(Vec<u32>);

impl PartitionProfile {
    pub fn multiplicities(&self) -> &[u32] {
        &self.0
    }

    /// Number of parts, `Σ l_i`.
    pub fn parts(&self) -> usize {
        self.0.iter().map(|&l| l as usize).sum()
    }

    /// Total weight, `Σ i l_i`.
    pub fn weight(&self) -> usize {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &l)| (i + 1) * l as usize)
            .sum()
    }
}

/// `S_2(n, k)` from the triangle recurrence.
pub fn stirling2(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    stirling2_triangle(n).swap_remove(n).swap_remove(k)
}

/// Rows `0..=n_max` of the `S_2` triangle; row `n` holds `k = 0..=n`.
pub fn stirling2_triangle(n_max: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n_max + 1);
    rows.push(vec![BigInt::from(1)]);
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let row = (0..=n)
            .map(|k| match k {
                0 => BigInt::from(0),
                k if k == n => BigInt::from(1),
                k => &prev[k] * k + &prev[k - 1],
            })
            .collect();
        rows.push(row);
    }
    rows
}

/// `S_2(n, k)` as `n!/k!` times the `t^n` coefficient of `(e^t - 1)^k`.
pub fn stirling2_via_gf(n: usize, k: usize, order: usize) -> Result<BigInt> {
    if order < n {
        return Err(Error::OutOfRange { index: n, order });
    }
    if k > n {
        return Ok(BigInt::from(0));
    }
    // e^t - 1 through t^order
    let base = TruncSeries::with_order(
        (0..=order)
            .map(|i| match i {
                0 => BivarPoly::zero(),
                i => BivarPoly::constant(factorial_q(i).inv().expect("i! > 0")),
            })
            .collect(),
        order,
    );
    let scale = factorial_q(n) * factorial_q(k).inv().expect("k! > 0");
    let value = base.pow(k as u32).coeff(n)?.scale(&scale);
    Ok(value.as_integer().expect("Stirling numbers are integers"))
}

/// All partition profiles of `n` into `k` parts, in lexicographic order of
/// `(l_1, ..., l_{n-k+1})`. Empty when `k > n`.
pub fn enumerate_partition_profiles(n: usize, k: usize) -> Vec<PartitionProfile> {
    if k > n {
        return Vec::new();
    }
    let m = n - k + 1;
    let mut out = Vec::new();
    let mut current = vec![0u32; m];
    descend(m, k, n, &mut current, &mut out);
    out.sort();
    out
}

// Assigns l_i for i = part, part-1, ..., 1 with `parts` parts and `weight`
// still to place.
fn descend(
    part: usize,
    parts: usize,
    weight: usize,
    current: &mut [u32],
    out: &mut Vec<PartitionProfile>,
) {
    if part == 1 {
        if parts == weight {
            current[0] = parts as u32;
            out.push(PartitionProfile(current.to_vec()));
            current[0] = 0;
        }
        return;
    }
    // Each remaining part weighs at least one, so using l parts of size
    // `part` needs l*part + (parts - l) <= weight.
    let max_l = (weight - parts) / (part - 1);
    for l in 0..=max_l.min(parts) {
        current[part - 1] = l as u32;
        descend(part - 1, parts - l, weight - l * part, current, out);
    }
    current[part - 1] = 0;
}

/// B_{n,k}(x_1, ..., x_{n-k+1}) by summing over partition profiles.
///
/// `B_{n,0} = [n = 0]` and `B_{n,k} = 0` for `k > n`.
pub fn incomplete_bell_partition(n: usize, k: usize, args: &BellArgs) -> Result<BivarPoly> {
    if k > n {
        return Ok(BivarPoly::zero());
    }
    if k == 0 {
        return Ok(if n == 0 {
            BivarPoly::one()
        } else {
            BivarPoly::zero()
        });
    }
    let m = n - k + 1;
    args.require(m)?;

    // powers[i][e] = x_{i+1}^e, grown on demand
    let mut powers: Vec<Vec<BivarPoly>> = (0..m).map(|_| vec![BivarPoly::one()]).collect();
    let n_fact = Rational::from_integer(factorial(n));
    let mut total = BivarPoly::zero();
    for profile in enumerate_partition_profiles(n, k) {
        let mut denom = BigInt::from(1);
        let mut product = BivarPoly::one();
        for (i, &l) in profile.multiplicities().iter().enumerate() {
            if l == 0 {
                continue;
            }
            denom *= factorial(l as usize) * num::pow(factorial(i + 1), l as usize);
            let cache = &mut powers[i];
            while cache.len() <= l as usize {
                let next = cache.last().expect("nonempty") * args.get(i + 1);
                cache.push(next);
            }
            product = product * &cache[l as usize];
        }
        let coeff = n_fact.checked_div(&Rational::from_integer(denom))?;
        total = total + product.scale(&coeff);
    }
    Ok(total)
}

/// B_{n,k} as `n!/k!` times the `t^n` coefficient of `(Σ_i x_i t^i/i!)^k`.
pub fn incomplete_bell_series(
    n: usize,
    k: usize,
    args: &BellArgs,
    order: usize,
) -> Result<BivarPoly> {
    if order < n {
        return Err(Error::OutOfRange { index: n, order });
    }
    if k > n {
        return Ok(BivarPoly::zero());
    }
    if k >= 1 {
        args.require(n - k + 1)?;
    }
    let inner = bell_inner_series(args, order);
    let scale = factorial_q(n).checked_div(&factorial_q(k))?;
    Ok(inner.pow(k as u32).coeff(n)?.scale(&scale))
}

/// `Σ_{i=1}^{m} x_i t^i / i!` through `t^order`.
pub fn bell_inner_series(args: &BellArgs, order: usize) -> TruncSeries {
    let coeffs = (0..=order)
        .map(|i| match i {
            0 => BivarPoly::zero(),
            i if i <= args.len() => args.get(i).scale(&factorial_q(i).inv().expect("i! > 0")),
            _ => BivarPoly::zero(),
        })
        .collect();
    TruncSeries::with_order(coeffs, order)
}

/// Complete Bell polynomial `B_n = Σ_{k=1}^{n} B_{n,k}`, with `B_0 = 1`.
pub fn complete_bell(n: usize, args: &BellArgs) -> Result<BivarPoly> {
    if n == 0 {
        return Ok(BivarPoly::one());
    }
    args.require(n)?;
    (1..=n).map(|k| incomplete_bell_partition(n, k, args)).sum()
}

/// `n!` times the `t^n` coefficient of `exp(Σ x_i t^i/i!)`, with the
/// exponential truncated as `Σ_{k<=n} (·)^k/k!`.
pub fn complete_bell_via_exp(n: usize, args: &BellArgs) -> Result<BivarPoly> {
    if n > 0 {
        args.require(n)?;
    }
    let inner = bell_inner_series(args, n);
    let mut power = TruncSeries::one(n);
    let mut exp = TruncSeries::one(n);
    for k in 1..=n {
        power = power.mul_series(&inner);
        let term = power.scale(&BivarPoly::constant(factorial_q(k).inv()?));
        exp = &exp + &term;
    }
    exp.egf_coeff(n)
}

/// `φ_n(x) = Σ_k S_2(n,k) x^k`.
pub fn bell_polynomial(n: usize) -> BivarPoly {
    let row = stirling2_triangle(n).swap_remove(n);
    BivarPoly::from_terms(
        row.into_iter()
            .enumerate()
            .map(|(k, s)| ((0, k as u32), Rational::from_integer(s))),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xs(m: usize) -> BellArgs {
        // distinct formal-ish arguments x_i = i + λ x^i
        (1..=m)
            .map(|i| {
                BivarPoly::from_int(i as i64) + BivarPoly::monomial(1, i as u32, Rational::one())
            })
            .collect()
    }

    /// Brute-force count of set partitions of {0..n} into k blocks via
    /// restricted growth strings.
    fn count_set_partitions(n: usize, k: usize) -> u64 {
        fn go(i: usize, n: usize, blocks: usize, k: usize) -> u64 {
            if i == n {
                return (blocks == k) as u64;
            }
            let mut total = 0;
            for b in 0..=blocks {
                let next = if b == blocks { blocks + 1 } else { blocks };
                if next <= k {
                    total += go(i + 1, n, next, k);
                }
            }
            total
        }
        go(0, n, 0, k)
    }

    /// Every vector in [0..=k]^m satisfying both constraints.
    fn scan_profiles(n: usize, k: usize) -> Vec<Vec<u32>> {
        let m = n - k + 1;
        let mut out = Vec::new();
        let total = (k + 1).pow(m as u32);
        for code in 0..total {
            let mut c = code;
            let v: Vec<u32> = (0..m)
                .map(|_| {
                    let d = c % (k + 1);
                    c /= k + 1;
                    d as u32
                })
                .collect();
            let parts: usize = v.iter().map(|&l| l as usize).sum();
            let weight: usize = v
                .iter()
                .enumerate()
                .map(|(i, &l)| (i + 1) * l as usize)
                .sum();
            if parts == k && weight == n {
                out.push(v);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn stirling_examples() {
        assert_eq!(stirling2(0, 0), BigInt::from(1));
        assert_eq!(stirling2(3, 2), BigInt::from(count_set_partitions(3, 2)));
        assert_eq!(stirling2(3, 2), BigInt::from(3));
        assert_eq!(stirling2(4, 2), BigInt::from(7));
        assert_eq!(stirling2(2, 5), BigInt::from(0));
        assert_eq!(stirling2(5, 0), BigInt::from(0));
    }

    #[test]
    fn stirling_matches_brute_force() {
        for n in 0..=8 {
            for k in 0..=n {
                assert_eq!(
                    stirling2(n, k),
                    BigInt::from(count_set_partitions(n, k)),
                    "S2({n},{k})"
                );
            }
        }
    }

    #[test]
    fn stirling_gf_examples() {
        for k in 0..=6 {
            assert_eq!(stirling2_via_gf(k, k, 8).unwrap(), BigInt::from(1));
        }
        assert_eq!(stirling2_via_gf(4, 2, 4).unwrap(), BigInt::from(7));
        assert_eq!(stirling2_via_gf(3, 5, 3).unwrap(), BigInt::from(0));
        assert!(matches!(
            stirling2_via_gf(5, 2, 4),
            Err(Error::OutOfRange { .. })
        ));
        for n in 0..=12 {
            for k in 0..=n {
                assert_eq!(stirling2_via_gf(n, k, 12).unwrap(), stirling2(n, k));
            }
        }
    }

    #[test]
    fn profile_examples() {
        let p = enumerate_partition_profiles(3, 2);
        assert_eq!(p.len(), 1);
        assert_eq!(p[0].multiplicities(), &[1, 1]);
        for n in 1..=7 {
            let p = enumerate_partition_profiles(n, n);
            assert_eq!(p.len(), 1);
            assert_eq!(p[0].multiplicities(), &[n as u32]);
        }
        assert_eq!(enumerate_partition_profiles(6, 3).len(), 3);
        assert!(enumerate_partition_profiles(2, 3).is_empty());
    }

    #[test]
    fn profiles_match_exhaustive_scan() {
        for n in 1..=9 {
            for k in 1..=n {
                let got: Vec<Vec<u32>> = enumerate_partition_profiles(n, k)
                    .into_iter()
                    .inspect(|p| {
                        assert_eq!(p.parts(), k);
                        assert_eq!(p.weight(), n);
                    })
                    .map(|p| p.multiplicities().to_vec())
                    .collect();
                assert_eq!(got, scan_profiles(n, k), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn partition_bell_examples() {
        let a = xs(6);
        for n in 1..=6 {
            assert_eq!(
                incomplete_bell_partition(n, 1, &a).unwrap(),
                a.get(n).clone()
            );
            assert_eq!(
                incomplete_bell_partition(n, n, &a).unwrap(),
                a.get(1).pow(n as u32)
            );
        }
        let b32 = incomplete_bell_partition(3, 2, &a).unwrap();
        assert_eq!(b32, (a.get(1) * a.get(2)).scale(&Rational::from(3)));
        assert_eq!(
            incomplete_bell_partition(0, 0, &a).unwrap(),
            BivarPoly::one()
        );
        assert!(incomplete_bell_partition(3, 0, &a).unwrap().is_zero());
        assert!(incomplete_bell_partition(2, 4, &a).unwrap().is_zero());
    }

    #[test]
    fn arity_errors() {
        let a = xs(2);
        assert_eq!(
            incomplete_bell_partition(5, 2, &a),
            Err(Error::Arity {
                needed: 4,
                given: 2
            })
        );
        assert!(matches!(
            incomplete_bell_series(5, 2, &a, 5),
            Err(Error::Arity { .. })
        ));
        assert!(matches!(complete_bell(3, &a), Err(Error::Arity { .. })));
        assert!(matches!(
            incomplete_bell_series(5, 2, &xs(6), 4),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn series_bell_agrees_with_partition_bell() {
        let a = xs(8);
        for n in 1..=8 {
            for k in 1..=n {
                assert_eq!(
                    incomplete_bell_series(n, k, &a, 8).unwrap(),
                    incomplete_bell_partition(n, k, &a).unwrap(),
                    "n={n} k={k}"
                );
            }
            assert!(incomplete_bell_series(n, n + 1, &a, 8).unwrap().is_zero());
        }
    }

    #[test]
    fn complete_bell_examples() {
        let a = xs(4);
        assert_eq!(
            complete_bell(0, &BellArgs::default()).unwrap(),
            BivarPoly::one()
        );
        assert_eq!(complete_bell(2, &a).unwrap(), a.get(1).pow(2) + a.get(2));
        for n in 0..=4 {
            assert_eq!(
                complete_bell(n, &a).unwrap(),
                complete_bell_via_exp(n, &a).unwrap()
            );
        }
    }

    #[test]
    fn phi_examples() {
        assert_eq!(bell_polynomial(0), BivarPoly::one());
        assert_eq!(bell_polynomial(2), BivarPoly::x() + BivarPoly::x().pow(2));
        for n in 0..=7 {
            let args = BellArgs::repeated(BivarPoly::x(), n);
            assert_eq!(complete_bell(n, &args).unwrap(), bell_polynomial(n));
        }
    }

    #[test]
    fn all_ones_give_stirling() {
        for n in 1..=8 {
            let ones = BellArgs::repeated(BivarPoly::one(), n);
            for k in 1..=n {
                let v = incomplete_bell_partition(n, k, &ones).unwrap();
                assert_eq!(v.as_integer(), Some(stirling2(n, k)));
            }
        }
    }
}
