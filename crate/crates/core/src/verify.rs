//! Property suites shared by the acceptance tests and the `check` command.
//!
//! Each suite enumerates its cases, evaluates them in parallel and reports
//! every failure by name. Randomised inputs come from a seeded ChaCha stream
//! so a report is reproducible from its seed.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::classical::{derivative_rule_check, monic_sequence, Family};
use crate::darboux::{
    chain_eigenfunction, classify_regularity, extended_potential, potential_value, sample_points, surviving_levels,
    ExtendedPotential, PotentialSpec,
};
use crate::eop::{eop_by_route, eop_wronskian, Route};
use crate::error::Result;
use crate::kernel::det::wronskian;
use crate::kernel::rational::{int, q, superfactorial};
use crate::kernel::real::{BigFloat, Real};
use crate::partitions::{
    gap_lengths, indices_to_partition, indices_up_to, is_adler, partition_to_indices, partitions_up_to, Partition,
    SpectralIndices,
};
use crate::schur::{
    alternant, column_schur_binomial, column_schur_derivative, confluent_limit, multivariate_recursion_check,
    recs_check, vandermonde,
};
use crate::{Error, QPoly, Rational};

/// Reports keep at most this many failure descriptions.
const MAX_LISTED_FAILURES: usize = 25;

pub const DEFAULT_SEED: u64 = 0x5eed_2024;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    CrossRoute,
    ConfluentLimit,
    KreinAdler,
    Residual,
    Chain,
    Recursions,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::CrossRoute,
        Suite::ConfluentLimit,
        Suite::KreinAdler,
        Suite::Residual,
        Suite::Chain,
        Suite::Recursions,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::CrossRoute => "cross-route",
            Suite::ConfluentLimit => "theorem1",
            Suite::KreinAdler => "krein-adler",
            Suite::Residual => "residual",
            Suite::Chain => "chain",
            Suite::Recursions => "recursions",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite `{s}`")))
    }
}

/// Size knobs. `None` selects each suite's acceptance-scale default.
///
/// `max_weight` bounds `|λ|` for cross-route and residual, and the largest
/// seed level `n_max` for krein-adler and chain. `max_length` bounds the
/// chain length `m`.
#[derive(Clone, Debug, Default)]
pub struct SuiteConfig {
    pub max_weight: Option<usize>,
    pub max_length: Option<usize>,
    pub seed: Option<u64>,
}

impl SuiteConfig {
    fn weight(&self, default: usize) -> usize {
        self.max_weight.unwrap_or(default)
    }

    fn length(&self, default: usize) -> usize {
        self.max_length.unwrap_or(default)
    }

    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed.unwrap_or(DEFAULT_SEED))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub passed: bool,
    pub cases: usize,
    pub failed: usize,
    /// Largest observed error measure, for the numerical suites.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub worst: Option<f64>,
    pub failures: Vec<String>,
    pub elapsed_ms: u128,
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}: {}/{} cases",
            if self.passed { "PASS" } else { "FAIL" },
            self.suite,
            self.cases - self.failed,
            self.cases
        )?;
        if let Some(w) = self.worst {
            write!(f, ", worst {w:.3e}")?;
        }
        write!(f, " ({} ms)", self.elapsed_ms)
    }
}

/// A case outcome: `Ok(measure)` on success, `Err(description)` otherwise.
type Outcome = std::result::Result<Option<f64>, String>;

fn report(suite: Suite, start: Instant, outcomes: Vec<Outcome>) -> SuiteReport {
    let cases = outcomes.len();
    let mut failures = Vec::new();
    let mut failed = 0;
    let mut worst: Option<f64> = None;
    for o in outcomes {
        match o {
            Ok(Some(m)) => worst = Some(worst.map_or(m, |w| w.max(m))),
            Ok(None) => {}
            Err(msg) => {
                failed += 1;
                if failures.len() < MAX_LISTED_FAILURES {
                    failures.push(msg);
                }
            }
        }
    }
    SuiteReport {
        suite: suite.name(),
        passed: failed == 0,
        cases,
        failed,
        worst,
        failures,
        elapsed_ms: start.elapsed().as_millis(),
    }
}

fn exact(ok: Result<bool>, what: impl FnOnce() -> String) -> Outcome {
    match ok {
        Ok(true) => Ok(None),
        Ok(false) => Err(what()),
        Err(e) => Err(format!("{}: {e}", what())),
    }
}

pub fn run_suite(suite: Suite, config: &SuiteConfig) -> SuiteReport {
    let start = Instant::now();
    let outcomes = match suite {
        Suite::CrossRoute => cross_route(config),
        Suite::ConfluentLimit => confluent_limits(config),
        Suite::KreinAdler => krein_adler(config),
        Suite::Residual => residual(config),
        Suite::Chain => chain(config),
        Suite::Recursions => recursions(config),
    };
    report(suite, start, outcomes)
}

/// Hermite, Laguerre at `α ∈ {1/2, 3/2, 7/3}` and Jacobi at every pair from
/// `{3/4, 3/2, 5/2}`.
pub fn reference_families() -> Vec<Family> {
    let mut out = vec![Family::hermite()];
    for a in [q(1, 2), q(3, 2), q(7, 3)] {
        out.push(Family::laguerre(a).expect("α > -1"));
    }
    let grid = [q(3, 4), q(3, 2), q(5, 2)];
    for a in &grid {
        for b in &grid {
            out.push(Family::jacobi(a.clone(), b.clone()).expect("α, β > -1"));
        }
    }
    out
}

fn cross_route(config: &SuiteConfig) -> Vec<Outcome> {
    let mut partitions = vec![Partition::empty()];
    partitions.extend(partitions_up_to(config.length(4), config.weight(8)));
    let cases: Vec<(Family, Partition)> = reference_families()
        .into_iter()
        .flat_map(|f| partitions.iter().map(move |p| (f.clone(), p.clone())))
        .collect();
    cases
        .par_iter()
        .map(|(family, lambda)| {
            let label = || format!("{family} {lambda}");
            let polys = Route::ALL
                .iter()
                .map(|&r| eop_by_route(family, lambda, r).map(|e| e.as_wronskian()))
                .collect::<Result<Vec<QPoly>>>()
                .map_err(|e| format!("{}: {e}", label()))?;
            match polys.iter().position(|p| *p != polys[0]) {
                None => Ok(None),
                Some(i) => Err(format!("{}: {} differs from {}", label(), Route::ALL[i], Route::ALL[0])),
            }
        })
        .collect()
}

fn random_rational(rng: &mut ChaCha8Rng, bound: i64) -> Rational {
    q(rng.gen_range(-bound..=bound), rng.gen_range(1..=bound))
}

/// A monic polynomial of degree `d` with coefficients `p/q`, `|p|, q <= bound`.
fn random_monic(rng: &mut ChaCha8Rng, d: usize, bound: i64) -> QPoly {
    let mut c: Vec<Rational> = (0..d).map(|_| random_rational(rng, bound)).collect();
    c.push(int(1));
    QPoly::new(c)
}

fn confluent_limits(config: &SuiteConfig) -> Vec<Outcome> {
    let mut rng = config.rng();
    let trials: Vec<Vec<QPoly>> = (0..200)
        .map(|_| {
            let m = rng.gen_range(1..=3);
            (0..m)
                .map(|_| {
                    let d = rng.gen_range(0..=6);
                    random_monic(&mut rng, d, 20)
                })
                .collect()
        })
        .collect();
    trials
        .par_iter()
        .enumerate()
        .map(|(t, fns)| {
            let m = fns.len();
            let ok = confluent_limit(fns, m).and_then(|c| Ok(c.scale(&superfactorial(m)) == wronskian(fns)?));
            exact(ok, || {
                let degrees: Vec<_> = fns.iter().map(|p| p.degree().unwrap_or(0)).collect();
                format!("trial {t}: degrees {degrees:?}")
            })
        })
        .collect()
}

/// `p/d > 1/2` with `d <= 6` and value at most 6.
fn random_parameter(rng: &mut ChaCha8Rng) -> Rational {
    let d = rng.gen_range(1..=6i64);
    q(rng.gen_range(d / 2 + 1..=6 * d), d)
}

/// Three draws per potential: frequencies for the oscillators, `α` (and `β`)
/// for the isotonic and trigonometric cases.
pub fn drawn_potentials(config: &SuiteConfig) -> Vec<PotentialSpec> {
    let mut rng = config.rng();
    let mut out = Vec::new();
    for _ in 0..3 {
        let w = q(rng.gen_range(1..=12), rng.gen_range(1..=4));
        out.push(PotentialSpec::harmonic(w).expect("ω > 0"));
    }
    for _ in 0..3 {
        let w = q(rng.gen_range(1..=12), rng.gen_range(1..=4));
        let a = random_parameter(&mut rng);
        out.push(PotentialSpec::isotonic(w, a).expect("α > 1/2"));
    }
    for _ in 0..3 {
        let a = random_parameter(&mut rng);
        let b = random_parameter(&mut rng);
        out.push(PotentialSpec::trigonometric(a, b).expect("α, β > 1/2"));
    }
    out
}

fn label(spec: &PotentialSpec) -> String {
    let mut s = spec.family().to_string();
    if spec.family().alpha().is_none() || spec.family().beta().is_none() {
        s.push_str(&format!(" ω={}", spec.omega()));
    }
    s
}

fn krein_adler(config: &SuiteConfig) -> Vec<Outcome> {
    let chains = indices_up_to(config.length(4), config.weight(6));
    let cases: Vec<(PotentialSpec, SpectralIndices)> = drawn_potentials(config)
        .into_iter()
        .flat_map(|s| chains.iter().map(move |n| (s.clone(), n.clone())))
        .collect();
    let mut out: Vec<Outcome> = cases
        .par_iter()
        .map(|(spec, n)| {
            let r = classify_regularity(spec, n).map_err(|e| format!("{} N={n}: {e}", label(spec)))?;
            if r.agrees() {
                Ok(None)
            } else {
                Err(format!(
                    "{} N={n}: adler={} but {} interior roots",
                    label(spec),
                    r.predicted,
                    r.interior_roots
                ))
            }
        })
        .collect();
    out.extend(chains.iter().map(|n| {
        if !is_adler(&indices_to_partition(n)) || gap_lengths(n).iter().all(|g| g % 2 == 0) {
            Ok(None)
        } else {
            Err(format!("N={n}: Adler chain with an odd gap"))
        }
    }));
    out
}

fn residual(config: &SuiteConfig) -> Vec<Outcome> {
    let max_weight = config.weight(6);
    let chains: Vec<SpectralIndices> = indices_up_to(config.length(4), 6)
        .into_iter()
        .filter(|n| {
            let l = indices_to_partition(n);
            is_adler(&l) && l.weight() <= max_weight
        })
        .collect();
    let tol = 1e-10;
    let cases: Vec<(PotentialSpec, SpectralIndices, usize)> = drawn_potentials(config)
        .into_iter()
        .flat_map(|s| {
            chains.iter().flat_map(move |n| {
                let s = s.clone();
                surviving_levels(n, 3)
                    .into_iter()
                    .map(move |mu| (s.clone(), n.clone(), mu))
            })
        })
        .collect();
    cases
        .par_iter()
        .map(|(spec, n, mu)| {
            let name = || format!("{} N={n} μ={mu}", label(spec));
            let run = || -> Result<f64> {
                let ext = ExtendedPotential::new(spec, n)?;
                let xs = sample_points(spec.chart(), &ext.wronskian_poly, 50)?;
                let state = ext.state(*mu)?;
                let mut worst = 0.0f64;
                for x in &xs {
                    let r: BigFloat = state.residual(&BigFloat::from_rational(x))?;
                    worst = worst.max(r.to_f64());
                }
                Ok(worst)
            };
            match run() {
                Ok(w) if w < tol => Ok(Some(w)),
                Ok(w) => Err(format!("{}: residual {w:.3e}", name())),
                Err(e) => Err(format!("{}: {e}", name())),
            }
        })
        .collect()
}

/// Samples avoiding the nodes of every prefix Wronskian (the seeds met
/// along the chain) and of the Crum numerator.
fn chain_samples(spec: &PotentialSpec, n: &SpectralIndices, mu: usize, count: usize) -> Result<Vec<Rational>> {
    let mut guard = QPoly::one();
    for k in 1..=n.len() {
        let prefix = SpectralIndices::new(n.as_slice()[..k].to_vec())?;
        guard = &guard * &eop_wronskian(spec.family(), &indices_to_partition(&prefix))?.polynomial;
    }
    guard = &guard * &ExtendedPotential::new(spec, n)?.crum_numerator(mu)?;
    sample_points(spec.chart(), &guard, count)
}

fn chain(config: &SuiteConfig) -> Vec<Outcome> {
    let specs = [
        PotentialSpec::harmonic(int(1)).expect("ω > 0"),
        PotentialSpec::isotonic(int(1), q(3, 2)).expect("α > 1/2"),
        PotentialSpec::trigonometric(q(3, 4), q(3, 2)).expect("α, β > 1/2"),
    ];
    let chains = indices_up_to(config.length(3), config.weight(4));
    let cases: Vec<(PotentialSpec, SpectralIndices, usize)> = specs
        .iter()
        .flat_map(|s| {
            chains.iter().flat_map(move |n| {
                surviving_levels(n, 2)
                    .into_iter()
                    .map(move |mu| (s.clone(), n.clone(), mu))
            })
        })
        .collect();
    let tol = 1e-12;
    cases
        .par_iter()
        .map(|(spec, n, mu)| {
            let name = || format!("{} N={n} μ={mu}", label(spec));
            let run = || -> Result<f64> {
                let ext = ExtendedPotential::new(spec, n)?;
                let xs = chain_samples(spec, n, *mu, 20)?;
                let mut reference: Option<BigFloat> = None;
                let mut worst = 0.0f64;
                for x in &xs {
                    let xr = BigFloat::from_rational(x);
                    let iterated = chain_eigenfunction(spec, n, *mu, &xr)?.value;
                    let crum = ext.eigenfunction(*mu, &xr)?.value;
                    let ratio = iterated / crum;
                    match &reference {
                        None => reference = Some(ratio),
                        Some(r0) => {
                            let dev = ((ratio - r0.clone()) / r0.clone()).abs().to_f64();
                            worst = worst.max(dev);
                        }
                    }
                }
                Ok(worst)
            };
            match run() {
                Ok(w) if w < tol => Ok(Some(w)),
                Ok(w) => Err(format!("{}: deviation {w:.3e}", name())),
                Err(e) => Err(format!("{}: {e}", name())),
            }
        })
        .collect()
}

fn recursions(config: &SuiteConfig) -> Vec<Outcome> {
    let families = reference_families();
    let mut out: Vec<Outcome> = Vec::new();

    out.par_extend(
        families
            .par_iter()
            .flat_map(|f| (1..=30usize).into_par_iter().map(move |n| (f.clone(), n)))
            .map(|(f, n)| exact(derivative_rule_check(&f, n), || format!("derivative rule {f} n={n}"))),
    );

    // monic polynomials of degrees 0..m-1 collapse to the Vandermonde determinant
    let mut rng = config.rng();
    let mut monic_sets: Vec<(String, Vec<QPoly>)> = Vec::new();
    for m in 1..=4usize {
        for f in &families {
            let seq = monic_sequence(f, m - 1).expect("reference families are nondegenerate");
            monic_sets.push((format!("{f}"), seq[..m].to_vec()));
        }
        for t in 0..5 {
            monic_sets.push((
                format!("random set {t}"),
                (0..m).map(|d| random_monic(&mut rng, d, 20)).collect(),
            ));
        }
    }
    out.par_extend(monic_sets.par_iter().map(|(name, fns)| {
        let m = fns.len();
        exact(alternant(fns, m).map(|a| a == vandermonde(m)), || {
            format!("monic collapse {name} m={m}")
        })
    }));

    out.par_extend(
        families
            .par_iter()
            .flat_map(|f| {
                (0..=10i64)
                    .into_par_iter()
                    .flat_map_iter(move |k| (1..=5usize).map(move |l| (f.clone(), k, l)))
            })
            .map(|(f, k, l)| {
                let ok = column_schur_binomial(&f, k, l).and_then(|a| Ok(a == column_schur_derivative(&f, k, l)?));
                exact(ok, || format!("column Schur forms {f} k={k} l={l}"))
            }),
    );

    let mut recs_cases = Vec::new();
    for f in &families {
        for lambda in partitions_up_to(3, 6).into_iter().filter(|l| l.len() >= 2) {
            for i in 0..=lambda.len() - 2 {
                recs_cases.push((f.clone(), lambda.clone(), i));
            }
        }
    }
    out.par_extend(recs_cases.par_iter().map(|(f, lambda, i)| {
        exact(recs_check(f, lambda, *i), || {
            format!("vector recursion {f} λ={lambda} i={i}")
        })
    }));

    let mut multivariate_cases = Vec::new();
    for f in [&families[0], &families[2], &families[7]] {
        for m in 2..=3usize {
            for k in -(m as i64) + 1..=2 {
                for i in 0..m - 1 {
                    multivariate_cases.push((f.clone(), k, i, m));
                }
            }
        }
    }
    out.par_extend(multivariate_cases.par_iter().map(|(f, k, i, m)| {
        exact(multivariate_recursion_check(f, *k, *i, *m).map(|(a, b)| a && b), || {
            format!("multivariate recursions {f} k={k} i={i} m={m}")
        })
    }));

    out.par_extend(indices_up_to(11, 10).into_par_iter().map(|n| {
        let m = n.len();
        let lambda = indices_to_partition(&n);
        let sum: usize = n.as_slice().iter().sum();
        let ok = lambda.weight() + m * (m - 1) / 2 == sum && partition_to_indices(&lambda) == n;
        exact(Ok(ok), || format!("index/partition bijection N={n}"))
    }));

    for w in [int(1), int(2), q(5, 2)] {
        let spec = PotentialSpec::harmonic(w.clone()).expect("ω > 0");
        let zero = SpectralIndices::new(vec![0]).expect("single index");
        let xs = sample_points(spec.chart(), &QPoly::one(), 20).unwrap_or_default();
        out.extend(xs.iter().map(|x| {
            let name = || format!("shift law ω={w} x={x}");
            let xr = BigFloat::from_rational(x);
            let run = || -> Result<f64> {
                let lhs: BigFloat = extended_potential(&spec, &zero, &xr)?;
                let rhs = potential_value(&spec, &xr)? + BigFloat::from_rational(&w);
                Ok(((lhs - rhs.clone()).abs() / (rhs.abs() + BigFloat::one())).to_f64())
            };
            match run() {
                Ok(d) if d < 1e-40 => Ok(Some(d)),
                Ok(d) => Err(format!("{}: deviation {d:.3e}", name())),
                Err(e) => Err(format!("{}: {e}", name())),
            }
        }));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("everything".parse::<Suite>().is_err());
    }

    #[test]
    fn small_suites_pass() {
        let config = SuiteConfig {
            max_weight: Some(3),
            max_length: Some(2),
            seed: Some(7),
        };
        for s in [Suite::CrossRoute, Suite::KreinAdler, Suite::Chain] {
            let r = run_suite(s, &config);
            assert!(r.passed, "{r}: {:?}", r.failures);
            assert!(r.cases > 0);
        }
    }

    #[test]
    fn draws_are_reproducible() {
        let c = SuiteConfig::default();
        assert_eq!(drawn_potentials(&c), drawn_potentials(&c));
        assert_eq!(drawn_potentials(&c).len(), 9);
    }
}
