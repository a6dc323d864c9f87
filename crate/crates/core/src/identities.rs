//! Mechanical verification of the identities linking degenerate Bernoulli
//! polynomials, dimorphic Mersenne numbers and incomplete Bell polynomials.
//!
//! Each identity is stated as `left - right` and evaluated exactly for every
//! index in a range. An index passes only when that residual is the zero
//! polynomial; there is no tolerance.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bell::{
    bell_polynomial, complete_bell, complete_bell_via_exp, incomplete_bell_partition,
    stirling2_triangle, BellArgs,
};
use crate::combinat::{binomial_q, factorial_q};
use crate::degenerate::{
    bernoulli_divisor, classical_bernoulli_table, degen_bernoulli_numbers,
    degen_bernoulli_table_by_series, degenerate_exp_series, dimorphic_mersenne_egf,
    dimorphic_mersenne_table, gff, gff_table, mersenne, mersenne_gf_coeffs, mersenne_quotients,
};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::poly::BivarPoly;
use crate::rational::Rational;

/// The checkable identities, in report order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum IdentityId {
    /// Ordinary generating function `z/(1-3z+2z^2)` of `2^n - 1`.
    MersenneGf,
    /// `x^n = Σ_k S_2(n,k) (x)_k`.
    StirlingExpansion,
    /// `B_n = Σ_k B_{n,k}` against the exponential expansion.
    CompleteBellSum,
    /// `e_λ^2(t) - e_λ(t)` generates `M_{n,λ}`.
    DimorphicEgf,
    /// `(x+1)_{n,λ} = Σ_l C(n,l) β_l(x) M_{n-l+1,λ}/(n-l+1)`.
    FactorialConvolution,
    /// `B_{n,1}(β_1(x), ..., β_n(x)) = β_n(x)`.
    BellSingleBlock,
    /// β_n(x) from the dimorphic Mersenne recurrence.
    BernoulliRecurrence,
    /// `M_{n+1,λ}/(n+1)` through Bell polynomials in β_i(x).
    DimorphicBell,
    /// β_n(x) through Bell polynomials in β_i(x).
    BernoulliBell,
    /// Coefficients of `(e_λ(t) - 1)/(t e_λ^x(t))` through Bell polynomials.
    ReciprocalBell,
    /// `B_{n,k}(1, ..., 1) = S_2(n,k)`.
    StirlingSpecialization,
    /// `B_n(x, ..., x) = φ_n(x)`.
    PhiSpecialization,
    /// λ = 0 limits of β_n, `(x)_{n,λ}` and `M_{n,λ}`.
    LambdaZeroLimit,
}

impl IdentityId {
    pub const ALL: [IdentityId; 13] = [
        IdentityId::MersenneGf,
        IdentityId::StirlingExpansion,
        IdentityId::CompleteBellSum,
        IdentityId::DimorphicEgf,
        IdentityId::FactorialConvolution,
        IdentityId::BellSingleBlock,
        IdentityId::BernoulliRecurrence,
        IdentityId::DimorphicBell,
        IdentityId::BernoulliBell,
        IdentityId::ReciprocalBell,
        IdentityId::StirlingSpecialization,
        IdentityId::PhiSpecialization,
        IdentityId::LambdaZeroLimit,
    ];

    /// Command-line spelling, e.g. `bernoulli-recurrence`.
    pub fn cli_name(self) -> &'static str {
        match self {
            IdentityId::MersenneGf => "mersenne-gf",
            IdentityId::StirlingExpansion => "stirling-expansion",
            IdentityId::CompleteBellSum => "complete-bell-sum",
            IdentityId::DimorphicEgf => "dimorphic-egf",
            IdentityId::FactorialConvolution => "factorial-convolution",
            IdentityId::BellSingleBlock => "bell-single-block",
            IdentityId::BernoulliRecurrence => "bernoulli-recurrence",
            IdentityId::DimorphicBell => "dimorphic-bell",
            IdentityId::BernoulliBell => "bernoulli-bell",
            IdentityId::ReciprocalBell => "reciprocal-bell",
            IdentityId::StirlingSpecialization => "stirling-specialization",
            IdentityId::PhiSpecialization => "phi-specialization",
            IdentityId::LambdaZeroLimit => "lambda-zero-limit",
        }
    }

    /// Default index range.
    pub fn default_range(self) -> (usize, usize) {
        match self {
            IdentityId::MersenneGf => (0, 30),
            IdentityId::StirlingExpansion => (0, 12),
            IdentityId::CompleteBellSum => (1, 12),
            IdentityId::DimorphicEgf => (0, 24),
            IdentityId::FactorialConvolution => (0, 12),
            IdentityId::BellSingleBlock => (1, 12),
            IdentityId::BernoulliRecurrence => (0, 12),
            IdentityId::DimorphicBell => (1, 10),
            IdentityId::BernoulliBell => (1, 10),
            IdentityId::ReciprocalBell => (0, 10),
            IdentityId::StirlingSpecialization => (0, 12),
            IdentityId::PhiSpecialization => (0, 12),
            IdentityId::LambdaZeroLimit => (0, 20),
        }
    }

    /// Whether the check reads β_i(x) or Bell polynomials in them.
    fn needs_beta(self) -> bool {
        matches!(
            self,
            IdentityId::CompleteBellSum
                | IdentityId::FactorialConvolution
                | IdentityId::BellSingleBlock
                | IdentityId::BernoulliRecurrence
                | IdentityId::DimorphicBell
                | IdentityId::BernoulliBell
                | IdentityId::ReciprocalBell
        )
    }

    fn needs_bell(self) -> bool {
        matches!(
            self,
            IdentityId::CompleteBellSum
                | IdentityId::BellSingleBlock
                | IdentityId::DimorphicBell
                | IdentityId::BernoulliBell
                | IdentityId::ReciprocalBell
        )
    }

    /// Whether the check reads a truncated series of the configured order.
    pub fn needs_order(self) -> bool {
        matches!(self, IdentityId::DimorphicEgf | IdentityId::ReciprocalBell)
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.cli_name())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.cli_name() == s)
            .ok_or_else(|| Error::Usage(format!("unknown identity `{s}`")))
    }
}

/// One identity over an inclusive, nonempty index range.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdentityCheck {
    pub id: IdentityId,
    pub from: usize,
    pub to: usize,
}

impl IdentityCheck {
    pub fn new(id: IdentityId, from: usize, to: usize) -> Result<Self> {
        if from > to {
            return Err(Error::Usage(format!(
                "empty index range {from}..={to} for {id}"
            )));
        }
        Ok(IdentityCheck { id, from, to })
    }

    pub fn with_default_range(id: IdentityId) -> Self {
        let (from, to) = id.default_range();
        IdentityCheck { id, from, to }
    }

    /// Every identity over its default range.
    pub fn default_suite() -> Vec<IdentityCheck> {
        IdentityId::ALL
            .into_iter()
            .map(IdentityCheck::with_default_range)
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexResult {
    pub n: usize,
    pub pass: bool,
    /// The nonzero residual; `None` on pass.
    pub residual: Option<BivarPoly>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub identity: IdentityId,
    pub results: Vec<IndexResult>,
    #[serde(rename = "allPass")]
    pub all_pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl VerificationReport {
    fn from_residuals(identity: IdentityId, residuals: Vec<(usize, BivarPoly)>) -> Self {
        let results: Vec<IndexResult> = residuals
            .into_iter()
            .map(|(n, r)| IndexResult {
                n,
                pass: r.is_zero(),
                residual: (!r.is_zero()).then_some(r),
            })
            .collect();
        let all_pass = results.iter().all(|r| r.pass);
        VerificationReport {
            identity,
            results,
            all_pass,
            error: None,
        }
    }

    fn failed(identity: IdentityId, err: &Error) -> Self {
        VerificationReport {
            identity,
            results: Vec::new(),
            all_pass: false,
            error: Some(err.to_string()),
        }
    }
}

/// β_k(x), shifted falling factorials and Bell polynomials in the β_k,
/// shared by the identity checks. `x` may be the formal variable or a
/// rational value.
#[derive(Debug, Clone)]
pub struct Tables {
    x: BivarPoly,
    beta: Vec<BivarPoly>,
    shifted: Vec<BivarPoly>,
    quotients: Vec<BivarPoly>,
    bell: Vec<Vec<BivarPoly>>,
}

impl Tables {
    /// Tables for formal x.
    pub fn formal(beta_max: usize, bell_max: usize, exec: Execution) -> Self {
        Tables::build(BivarPoly::x(), beta_max, bell_max, exec)
    }

    /// β_k(x), `(x+1)_{n,λ}` and `M_{n+1,λ}/(n+1)` up to `beta_max`, and
    /// `B_{j,k}(β_1(x), ...)` for `j <= bell_max`.
    pub fn build(x: BivarPoly, beta_max: usize, bell_max: usize, exec: Execution) -> Self {
        let beta_max = beta_max.max(bell_max);
        let beta = degen_bernoulli_table_by_series(&x, beta_max);
        let shifted = gff_table(&(&x + &BivarPoly::one()), beta_max);
        let quotients = mersenne_quotients(beta_max);
        let mut tables = Tables {
            x,
            beta,
            shifted,
            quotients,
            bell: Vec::new(),
        };
        tables.rebuild_bell(bell_max, exec);
        tables
    }

    fn rebuild_bell(&mut self, bell_max: usize, exec: Execution) {
        let args: BellArgs = self.beta[1..].iter().cloned().collect();
        let pairs: Vec<(usize, usize)> = (0..=bell_max)
            .flat_map(|j| (0..=j).map(move |k| (j, k)))
            .collect();
        let values = exec.map(pairs, |(j, k)| {
            incomplete_bell_partition(j, k, &args).expect("table holds enough arguments")
        });
        let mut it = values.into_iter();
        self.bell = (0..=bell_max)
            .map(|j| it.by_ref().take(j + 1).collect())
            .collect();
    }

    /// Adds `delta` to β_index and recomputes the dependent Bell entries.
    /// Meant for fault-injection tests.
    pub fn corrupt_beta(&mut self, index: usize, delta: &BivarPoly) {
        self.beta[index] = &self.beta[index] + delta;
        let bell_max = self.bell.len().saturating_sub(1);
        self.rebuild_bell(bell_max, Execution::Sequential);
    }

    pub fn x(&self) -> &BivarPoly {
        &self.x
    }

    pub fn beta(&self) -> &[BivarPoly] {
        &self.beta
    }

    /// `B_{j,k}(β_1(x), ..., β_{j-k+1}(x))`.
    pub fn bell(&self, j: usize, k: usize) -> &BivarPoly {
        &self.bell[j][k]
    }

    pub fn beta_max(&self) -> usize {
        self.beta.len() - 1
    }

    pub fn bell_max(&self) -> usize {
        self.bell.len().saturating_sub(1)
    }

    /// `Σ_{k=from}^{j} (-1)^k k! B_{j,k}`.
    fn signed_bell_sum(&self, j: usize, from: usize) -> BivarPoly {
        (from..=j)
            .map(|k| {
                let sign = if k % 2 == 0 {
                    Rational::one()
                } else {
                    -Rational::one()
                };
                self.bell[j][k].scale(&(sign * factorial_q(k)))
            })
            .sum()
    }

    /// `Σ_{j=1}^{upto} Σ_{k=1}^{j} C(n,j) (x+1)_{n-j,λ} (-1)^k k! B_{j,k}`.
    fn convolved_bell_sum(&self, n: usize, upto: usize) -> BivarPoly {
        (1..=upto)
            .map(|j| (&self.shifted[n - j] * &self.signed_bell_sum(j, 1)).scale(&binomial_q(n, j)))
            .sum()
    }

    /// `Σ_{l=0}^{upto} C(n,l) β_l(x) M_{n-l+1,λ}/(n-l+1)`.
    fn mersenne_convolution(&self, n: usize, upto: usize) -> BivarPoly {
        (0..=upto)
            .map(|l| (&self.beta[l] * &self.quotients[n - l]).scale(&binomial_q(n, l)))
            .sum()
    }

    /// The Bell-polynomial side of the `M_{n+1,λ}/(n+1)` representation:
    /// `(x+1)_{n,λ} + Σ_{j=1}^{n} Σ_{k=1}^{j} C(n,j) (x+1)_{n-j,λ} (-1)^k k! B_{j,k}`.
    /// Free of x whenever the identity holds.
    pub fn dimorphic_bell_rhs(&self, n: usize) -> BivarPoly {
        &self.shifted[n] + &self.convolved_bell_sum(n, n)
    }

    /// The Bell-polynomial side of the β_n(x) representation.
    pub fn bernoulli_bell_rhs(&self, n: usize) -> BivarPoly {
        &self.shifted[n] - &self.quotients[n]
            + self.signed_bell_sum(n, 2)
            + self.convolved_bell_sum(n, n - 1)
    }

    /// `(x+1)_{n,λ} - Σ_{l<n} C(n,l) β_l(x) M_{n-l+1,λ}/(n-l+1)`.
    pub fn bernoulli_recurrence_rhs(&self, n: usize) -> BivarPoly {
        if n == 0 {
            return self.shifted[0].clone();
        }
        &self.shifted[n] - &self.mersenne_convolution(n, n - 1)
    }
}

/// Settings for [`run_all_with`].
#[derive(Debug, Clone)]
pub struct RunOptions {
    /// Truncation order for the series-based checks.
    pub order: usize,
    pub exec: Execution,
    /// Evaluate the β-dependent checks at this x instead of formally.
    pub x_value: Option<Rational>,
    /// Adds one to β_index before checking (fault injection).
    pub corrupt_beta: Option<usize>,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            order: crate::DEFAULT_ORDER,
            exec: Execution::default(),
            x_value: None,
            corrupt_beta: None,
        }
    }
}

type ResidualFn<'a> = Box<dyn Fn(usize) -> Result<BivarPoly> + Sync + Send + 'a>;

/// Per-identity precomputation; returns the residual evaluator.
fn prepare<'a>(
    check: &IdentityCheck,
    tables: Option<&'a Tables>,
    order: usize,
) -> Result<ResidualFn<'a>> {
    let to = check.to;
    let need_order = || -> Result<()> {
        if order < to {
            return Err(Error::OutOfRange { index: to, order });
        }
        Ok(())
    };
    let tables = || tables.expect("tables built for β-dependent checks");
    Ok(match check.id {
        IdentityId::MersenneGf => {
            let coeffs = mersenne_gf_coeffs(to);
            Box::new(move |n| {
                let diff = &coeffs[n] - mersenne(n as u32);
                Ok(BivarPoly::constant(Rational::from_integer(diff)))
            })
        }
        IdentityId::StirlingExpansion => {
            let rows = stirling2_triangle(to);
            let one = Rational::one();
            let falling: Vec<BivarPoly> = gff_table(&BivarPoly::x(), to)
                .into_iter()
                .map(|p| p.substitute(Some(&one), None))
                .collect();
            Box::new(move |n| {
                let expansion: BivarPoly = (0..=n)
                    .map(|k| falling[k].scale(&Rational::from_integer(rows[n][k].clone())))
                    .sum();
                Ok(BivarPoly::monomial(0, n as u32, Rational::one()) - expansion)
            })
        }
        IdentityId::CompleteBellSum => {
            let t = tables();
            Box::new(move |n| {
                let args: BellArgs = t.beta[1..=n].iter().cloned().collect();
                let by_sum: BivarPoly = if n == 0 {
                    BivarPoly::one()
                } else {
                    (1..=n).map(|k| t.bell(n, k).clone()).sum()
                };
                Ok(by_sum - complete_bell_via_exp(n, &args)?)
            })
        }
        IdentityId::DimorphicEgf => {
            need_order()?;
            let egf = dimorphic_mersenne_egf(order);
            let values = dimorphic_mersenne_table(to);
            Box::new(move |n| Ok(egf.egf_coeff(n)? - &values[n]))
        }
        IdentityId::FactorialConvolution => {
            let t = tables();
            Box::new(move |n| Ok(&t.shifted[n] - &t.mersenne_convolution(n, n)))
        }
        IdentityId::BellSingleBlock => {
            let t = tables();
            Box::new(move |n| {
                if n == 0 {
                    return Ok(BivarPoly::zero());
                }
                Ok(t.bell(n, 1) - &t.beta[n])
            })
        }
        IdentityId::BernoulliRecurrence => {
            let t = tables();
            Box::new(move |n| Ok(&t.beta[n] - &t.bernoulli_recurrence_rhs(n)))
        }
        IdentityId::DimorphicBell => {
            let t = tables();
            Box::new(move |n| Ok(&t.quotients[n] - &t.dimorphic_bell_rhs(n)))
        }
        IdentityId::BernoulliBell => {
            let t = tables();
            Box::new(move |n| {
                if n == 0 {
                    return Err(Error::Usage(
                        "the β_n Bell representation starts at n = 1".into(),
                    ));
                }
                Ok(&t.beta[n] - &t.bernoulli_bell_rhs(n))
            })
        }
        IdentityId::ReciprocalBell => {
            need_order()?;
            let t = tables();
            let reciprocal =
                bernoulli_divisor(order).div_series(&degenerate_exp_series(t.x(), order))?;
            Box::new(move |n| {
                let bell_side = if n == 0 {
                    BivarPoly::one()
                } else {
                    t.signed_bell_sum(n, 1)
                };
                Ok(reciprocal.egf_coeff(n)? - bell_side)
            })
        }
        IdentityId::StirlingSpecialization => {
            let rows = stirling2_triangle(to);
            Box::new(move |n| {
                let ones = BellArgs::repeated(BivarPoly::one(), n);
                // Tag the k-th difference with x^k so no two can cancel.
                let mut residual = BivarPoly::zero();
                for (k, s2) in rows[n].iter().enumerate() {
                    let diff = incomplete_bell_partition(n, k, &ones)?
                        - BivarPoly::constant(Rational::from_integer(s2.clone()));
                    residual = residual + diff * BivarPoly::monomial(0, k as u32, Rational::one());
                }
                Ok(residual)
            })
        }
        IdentityId::PhiSpecialization => Box::new(move |n| {
            let args = BellArgs::repeated(BivarPoly::x(), n);
            Ok(complete_bell(n, &args)? - bell_polynomial(n))
        }),
        IdentityId::LambdaZeroLimit => {
            let zero = Rational::zero();
            let numbers: Vec<BivarPoly> = degen_bernoulli_numbers(to)
                .into_iter()
                .map(|p| p.substitute(Some(&zero), None))
                .collect();
            let classical = classical_bernoulli_table(to);
            let dimorphic = dimorphic_mersenne_table(to);
            Box::new(move |n| {
                let zero = Rational::zero();
                let bernoulli = &numbers[n] - &BivarPoly::constant(classical[n].clone());
                let power = gff(&BivarPoly::x(), n).substitute(Some(&zero), None)
                    - BivarPoly::monomial(0, n as u32, Rational::one());
                let mersenne_diff = dimorphic[n].substitute(Some(&zero), None)
                    - BivarPoly::constant(Rational::from_integer(mersenne(n as u32)));
                // After λ = 0 each difference is λ-free; tag them with
                // distinct powers of λ so they cannot cancel.
                Ok(bernoulli
                    + power * BivarPoly::lambda()
                    + mersenne_diff * BivarPoly::lambda().pow(2))
            })
        }
    })
}

/// Runs every check. Reports are ordered by identity, then index; a check
/// that cannot run yields a report with `error` set instead of aborting
/// the batch.
pub fn run_all(config: &[IdentityCheck]) -> Vec<VerificationReport> {
    run_all_with(config, &RunOptions::default())
}

pub fn run_all_with(config: &[IdentityCheck], opts: &RunOptions) -> Vec<VerificationReport> {
    let mut checks = config.to_vec();
    checks.sort_by_key(|c| c.id);

    let beta_max = checks
        .iter()
        .filter(|c| c.id.needs_beta())
        .map(|c| c.to)
        .max();
    let bell_max = checks
        .iter()
        .filter(|c| c.id.needs_bell())
        .map(|c| c.to)
        .max()
        .unwrap_or(0);
    let tables = beta_max.map(|beta_max| {
        let x = match &opts.x_value {
            Some(v) => BivarPoly::constant(v.clone()),
            None => BivarPoly::x(),
        };
        let mut t = Tables::build(x, beta_max, bell_max, opts.exec);
        if let Some(index) = opts.corrupt_beta.filter(|&i| i <= t.beta_max()) {
            t.corrupt_beta(index, &BivarPoly::one());
        }
        t
    });

    let prepared: Vec<Result<ResidualFn>> = checks
        .iter()
        .map(|c| prepare(c, tables.as_ref(), opts.order))
        .collect();

    let jobs: Vec<(usize, usize)> = checks
        .iter()
        .enumerate()
        .filter(|(i, _)| prepared[*i].is_ok())
        .flat_map(|(i, c)| (c.from..=c.to).map(move |n| (i, n)))
        .collect();
    let outcomes = opts.exec.map(jobs, |(i, n)| {
        let f = prepared[i].as_ref().expect("filtered to prepared checks");
        (i, n, f(n))
    });

    let mut per_check: Vec<Vec<(usize, Result<BivarPoly>)>> = vec![Vec::new(); checks.len()];
    for (i, n, r) in outcomes {
        per_check[i].push((n, r));
    }

    checks
        .iter()
        .zip(prepared.iter().zip(per_check))
        .map(|(check, (prep, results))| {
            if let Err(e) = prep {
                return VerificationReport::failed(check.id, e);
            }
            let mut residuals = Vec::with_capacity(results.len());
            for (n, r) in results {
                match r {
                    Ok(p) => residuals.push((n, p)),
                    Err(e) => return VerificationReport::failed(check.id, &e),
                }
            }
            VerificationReport::from_residuals(check.id, residuals)
        })
        .collect()
}

fn single(id: IdentityId, from: usize, n_max: usize, order: usize) -> Result<VerificationReport> {
    let check = IdentityCheck::new(id, from, n_max)?;
    let opts = RunOptions {
        order,
        ..RunOptions::default()
    };
    let report = run_all_with(&[check], &opts).remove(0);
    match &report.error {
        Some(msg) => Err(Error::Usage(msg.clone())),
        None => Ok(report),
    }
}

/// β_n(x) (generating-function path) against the dimorphic Mersenne
/// recurrence, for `0 <= n <= n_max`.
pub fn verify_bernoulli_recurrence(n_max: usize) -> VerificationReport {
    single(IdentityId::BernoulliRecurrence, 0, n_max, n_max).expect("range starts at 0")
}

/// `M_{n+1,λ}/(n+1)` against its Bell-polynomial representation for
/// `1 <= n <= n_max`, symbolically in λ and x.
pub fn verify_dimorphic_bell(n_max: usize) -> Result<VerificationReport> {
    single(IdentityId::DimorphicBell, 1, n_max, n_max)
}

/// The same check with x fixed to a rational value.
pub fn verify_dimorphic_bell_at(n_max: usize, x: &Rational) -> Result<VerificationReport> {
    let check = IdentityCheck::new(IdentityId::DimorphicBell, 1, n_max)?;
    let opts = RunOptions {
        x_value: Some(x.clone()),
        ..RunOptions::default()
    };
    Ok(run_all_with(&[check], &opts).remove(0))
}

/// β_n(x) against its Bell-polynomial representation for `1 <= n <= n_max`.
pub fn verify_bernoulli_bell(n_max: usize) -> Result<VerificationReport> {
    single(IdentityId::BernoulliBell, 1, n_max, n_max)
}

/// `(x+1)_{n,λ}` against its β/M convolution for `0 <= n <= n_max`.
pub fn verify_factorial_convolution(n_max: usize) -> VerificationReport {
    single(IdentityId::FactorialConvolution, 0, n_max, n_max).expect("range starts at 0")
}

/// Coefficients of `(e_λ(t) - 1)/(t e_λ^x(t))`, truncated at `order`, against
/// signed Bell sums for `0 <= n <= n_max`. Fails when `order < n_max`.
pub fn verify_reciprocal_bell(n_max: usize, order: usize) -> Result<VerificationReport> {
    single(IdentityId::ReciprocalBell, 0, n_max, order)
}
