//! Executable registry of identities with exhaustive or seeded-sample
//! quantification and counterexample reporting.
//!
//! Every identity is a predicate on a tuple of coordinates (character
//! exponents, field elements, or indices into a fixed list). A case outside
//! the identity's side conditions is skipped and not counted. Each identity
//! may carry alternate readings, evaluated on the same tuples and summarized
//! in the report; only the primary reading decides pass or fail.

mod analytic;
mod arithmetic;
mod ctx;
mod exact;
mod id;

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{is_prime, PrimeField};

pub use analytic::{BORWEIN_POINTS, DIAG_DEGREE, KOIKE_SHIGA_POINTS, NUMERIC_TOL, SERIES_TOL};
pub use arithmetic::pointcount_configs;
pub use id::IdentityId;

use ctx::Ctx;

/// Domains up to this many tuples are checked exhaustively under [`Mode::Auto`].
pub const EXHAUSTIVE_LIMIT: u64 = 1_000_000;
/// Sample size used by [`Mode::Auto`] above the limit.
pub const SAMPLE_SIZE: u64 = 100_000;
/// Seed used by [`Mode::Auto`] when it samples.
pub const DEFAULT_SEED: u64 = 0x5eed;
/// Number of counterexamples kept in a report.
pub const FAILURE_CAP: usize = 16;

/// How a domain is quantified.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exhaustive,
    Sampled { seed: u64, count: u64 },
    /// Exhaustive up to [`EXHAUSTIVE_LIMIT`] tuples, otherwise
    /// [`SAMPLE_SIZE`] samples with [`DEFAULT_SEED`].
    Auto,
}

/// The mode actually used, as recorded in a report.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ModeRecord {
    Exhaustive,
    Sampled { seed: u64, count: u64 },
}

/// Options shared by every identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Options {
    pub mode: Mode,
    /// Curve orders `N` used by [`IdentityId::PointCount`].
    pub orders: Vec<u64>,
}

impl Default for Options {
    fn default() -> Self {
        Options { mode: Mode::Auto, orders: vec![2, 3, 4, 6] }
    }
}

impl Options {
    pub fn with_mode(mode: Mode) -> Self {
        Options { mode, ..Options::default() }
    }
}

/// Outcome of an alternate reading over the same tuples.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReadingSummary {
    pub reading: String,
    pub cases: u64,
    pub failure_count: u64,
}

impl ReadingSummary {
    pub fn holds(&self) -> bool {
        self.failure_count == 0
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub identity: IdentityId,
    pub prime: u64,
    pub mode: ModeRecord,
    /// Names of the tuple coordinates, in order.
    pub coordinates: Vec<String>,
    pub cases_checked: u64,
    pub failure_count: u64,
    /// The first failing tuples (smallest index, or earliest sample).
    pub failures: Vec<Vec<u64>>,
    pub readings: Vec<ReadingSummary>,
    pub notes: Vec<String>,
    /// Wall time; not serialized so that output is reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    pub fn reading(&self, name: &str) -> Option<&ReadingSummary> {
        self.readings.iter().find(|r| r.reading == name)
    }
}

/// One entry of a sweep: a report, or the reason a prime was skipped.
#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum SweepEntry {
    Report(VerificationReport),
    Skipped { identity: IdentityId, prime: u64, skipped: String },
}

impl SweepEntry {
    pub fn prime(&self) -> u64 {
        match self {
            SweepEntry::Report(r) => r.prime,
            SweepEntry::Skipped { prime, .. } => *prime,
        }
    }

    pub fn report(&self) -> Option<&VerificationReport> {
        match self {
            SweepEntry::Report(r) => Some(r),
            SweepEntry::Skipped { .. } => None,
        }
    }
}

/// A coordinate of an identity's domain.
pub(crate) struct Coord {
    pub name: &'static str,
    pub size: u64,
}

pub(crate) fn chars(name: &'static str, ctx: &Ctx<'_>) -> Coord {
    Coord { name, size: ctx.field.order() }
}

pub(crate) fn elems(name: &'static str, ctx: &Ctx<'_>) -> Coord {
    Coord { name, size: ctx.field.p() }
}

/// Per-reading outcomes of one tuple; `None` is outside that reading's domain.
pub(crate) type Outcome = Vec<Option<bool>>;

pub(crate) struct Definition {
    pub coords: fn(&Ctx<'_>) -> Vec<Coord>,
    /// Primary reading first.
    pub readings: &'static [&'static str],
    pub case: fn(&Ctx<'_>, &[u64]) -> Outcome,
    /// Optional fast path: outcomes for every tuple sharing the first `k`
    /// coordinates, in mixed-radix order of the rest.
    pub block: Option<(usize, fn(&Ctx<'_>, &[u64]) -> Vec<Outcome>)>,
    pub compatible: fn(u64, &Options) -> std::result::Result<(), String>,
    pub notes: &'static [&'static str],
}

pub(crate) fn any_prime(_: u64, _: &Options) -> std::result::Result<(), String> {
    Ok(())
}

pub(crate) fn cubic_prime(p: u64, _: &Options) -> std::result::Result<(), String> {
    if p % 3 == 1 {
        Ok(())
    } else {
        Err("p is not 1 mod 3, so there is no cubic character".into())
    }
}

fn definition(id: IdentityId) -> Definition {
    exact::definition(id)
        .or_else(|| arithmetic::definition(id))
        .or_else(|| analytic::definition(id))
        .expect("every identity has a definition")
}

/// The identity's requirements on `p`, as an error when unmet.
pub fn check_compatible(id: IdentityId, p: u64, opts: &Options) -> Result<()> {
    if !is_prime(p) || p < 3 {
        return Err(Error::NotAnOddPrime(p));
    }
    (definition(id).compatible)(p, opts).map_err(|reason| Error::IncompatiblePrime { id: id.name().into(), p, reason })
}

#[derive(Clone)]
struct Tally {
    cases: Vec<u64>,
    failures: Vec<u64>,
    examples: Vec<(u64, Vec<u64>)>,
}

impl Tally {
    fn new(readings: usize) -> Tally {
        Tally { cases: vec![0; readings], failures: vec![0; readings], examples: Vec::new() }
    }

    fn record(&mut self, key: u64, outcome: &[Option<bool>], tuple: impl FnOnce() -> Vec<u64>) {
        for (r, o) in outcome.iter().enumerate() {
            if let Some(ok) = o {
                self.cases[r] += 1;
                if !ok {
                    self.failures[r] += 1;
                }
            }
        }
        if outcome.first() == Some(&Some(false))
            && (self.examples.len() < FAILURE_CAP || self.examples.last().is_some_and(|(k, _)| *k > key))
        {
            let pos = self.examples.partition_point(|(k, _)| *k < key);
            self.examples.insert(pos, (key, tuple()));
            self.examples.truncate(FAILURE_CAP);
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        for (a, b) in self.cases.iter_mut().zip(&other.cases) {
            *a += b;
        }
        for (a, b) in self.failures.iter_mut().zip(&other.failures) {
            *a += b;
        }
        self.examples.extend(other.examples);
        self.examples.sort_by_key(|(k, _)| *k);
        self.examples.truncate(FAILURE_CAP);
        self
    }
}

fn decode(mut index: u64, sizes: &[u64]) -> Vec<u64> {
    let mut out = vec![0; sizes.len()];
    for (slot, &s) in out.iter_mut().zip(sizes).rev() {
        *slot = index % s;
        index /= s;
    }
    out
}

fn run(def: &Definition, ctx: &Ctx<'_>, mode: Mode) -> (ModeRecord, Tally) {
    let sizes: Vec<u64> = (def.coords)(ctx).iter().map(|c| c.size).collect();
    let total = sizes.iter().try_fold(1u64, |acc, &s| acc.checked_mul(s)).unwrap_or(u64::MAX);
    let mode = match mode {
        Mode::Auto if total <= EXHAUSTIVE_LIMIT => Mode::Exhaustive,
        Mode::Auto => Mode::Sampled { seed: DEFAULT_SEED, count: SAMPLE_SIZE },
        m => m,
    };
    let readings = def.readings.len();
    match mode {
        Mode::Exhaustive => {
            let tally = match def.block {
                Some((k, block)) => {
                    let outer: u64 = sizes[..k].iter().product();
                    let inner: u64 = sizes[k..].iter().product();
                    (0..outer)
                        .into_par_iter()
                        .fold(
                            || Tally::new(readings),
                            |mut t, b| {
                                let prefix = decode(b, &sizes[..k]);
                                for (j, outcome) in block(ctx, &prefix).iter().enumerate() {
                                    let key = b * inner + j as u64;
                                    t.record(key, outcome, || decode(key, &sizes));
                                }
                                t
                            },
                        )
                        .reduce(|| Tally::new(readings), Tally::merge)
                }
                None => (0..total)
                    .into_par_iter()
                    .fold(
                        || Tally::new(readings),
                        |mut t, i| {
                            let tuple = decode(i, &sizes);
                            let outcome = (def.case)(ctx, &tuple);
                            t.record(i, &outcome, || tuple);
                            t
                        },
                    )
                    .reduce(|| Tally::new(readings), Tally::merge),
            };
            (ModeRecord::Exhaustive, tally)
        }
        Mode::Sampled { seed, count } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let samples: Vec<Vec<u64>> =
                (0..count).map(|_| sizes.iter().map(|&s| rng.random_range(0..s)).collect()).collect();
            let tally = samples
                .into_par_iter()
                .enumerate()
                .fold(
                    || Tally::new(readings),
                    |mut t, (i, tuple)| {
                        let outcome = (def.case)(ctx, &tuple);
                        t.record(i as u64, &outcome, || tuple);
                        t
                    },
                )
                .reduce(|| Tally::new(readings), Tally::merge);
            (ModeRecord::Sampled { seed, count }, tally)
        }
        Mode::Auto => unreachable!("resolved above"),
    }
}

/// Checks one identity over `F_p`.
pub fn verify_identity(id: IdentityId, p: u64, opts: &Options) -> Result<VerificationReport> {
    check_compatible(id, p, opts)?;
    let start = Instant::now();
    let def = definition(id);
    let field = PrimeField::new(p)?;
    let ctx = Ctx::new(&field, opts);
    let coordinates = (def.coords)(&ctx).iter().map(|c| c.name.to_string()).collect();
    let (mode, tally) = run(&def, &ctx, opts.mode);
    let readings = def.readings[1..]
        .iter()
        .enumerate()
        .map(|(i, name)| ReadingSummary {
            reading: name.to_string(),
            cases: tally.cases[i + 1],
            failure_count: tally.failures[i + 1],
        })
        .collect();
    let mut notes: Vec<String> = vec![format!("primary reading: {}", def.readings[0])];
    notes.extend(def.notes.iter().map(|s| s.to_string()));
    Ok(VerificationReport {
        identity: id,
        prime: p,
        mode,
        coordinates,
        cases_checked: tally.cases[0],
        failure_count: tally.failures[0],
        failures: tally.examples.into_iter().map(|(_, t)| t).collect(),
        readings,
        notes,
        elapsed: start.elapsed(),
    })
}

/// Re-evaluates the primary reading on one tuple: `None` when the tuple is
/// outside the identity's domain.
pub fn check_case(id: IdentityId, p: u64, tuple: &[u64], opts: &Options) -> Result<Option<bool>> {
    check_compatible(id, p, opts)?;
    let def = definition(id);
    let field = PrimeField::new(p)?;
    let ctx = Ctx::new(&field, opts);
    let coords = (def.coords)(&ctx);
    if tuple.len() != coords.len() || tuple.iter().zip(&coords).any(|(&v, c)| v >= c.size) {
        return Err(Error::PreconditionViolated(format!(
            "tuple {tuple:?} does not match the coordinates of {id}"
        )));
    }
    Ok((def.case)(&ctx, tuple)[0])
}

/// Names of an identity's readings, primary first.
pub fn readings(id: IdentityId) -> &'static [&'static str] {
    definition(id).readings
}

/// One report per prime in `lo..=hi` (ascending), with a skip record for
/// each prime the identity does not apply to.
pub fn sweep(id: IdentityId, lo: u64, hi: u64, opts: &Options) -> Result<Vec<SweepEntry>> {
    let primes: Vec<u64> = (lo.max(3)..=hi).filter(|&n| is_prime(n)).collect();
    if lo > hi || primes.is_empty() {
        return Err(Error::EmptyRange);
    }
    let mut entries: Vec<SweepEntry> = primes
        .par_iter()
        .map(|&p| match verify_identity(id, p, opts) {
            Ok(r) => Ok(SweepEntry::Report(r)),
            Err(Error::IncompatiblePrime { reason, .. }) => {
                Ok(SweepEntry::Skipped { identity: id, prime: p, skipped: reason })
            }
            Err(e) => Err(e),
        })
        .collect::<Result<_>>()?;
    entries.sort_by_key(SweepEntry::prime);
    Ok(entries)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decode_is_mixed_radix() {
        assert_eq!(decode(0, &[3, 4]), vec![0, 0]);
        assert_eq!(decode(5, &[3, 4]), vec![1, 1]);
        assert_eq!(decode(11, &[3, 4]), vec![2, 3]);
    }

    #[test]
    fn parse_names() {
        assert_eq!("cubic-f1".parse::<IdentityId>().unwrap(), IdentityId::CubicF1);
        assert_eq!("CUBIC_F1".parse::<IdentityId>().unwrap(), IdentityId::CubicF1);
        assert_eq!("PD_REDUCE_3".parse::<IdentityId>().unwrap(), IdentityId::PdReduce3);
        assert!(matches!("nope".parse::<IdentityId>(), Err(Error::UnknownIdentity(_))));
    }

    #[test]
    fn tally_keeps_smallest_failures() {
        let mut a = Tally::new(1);
        for k in (0..40).rev() {
            a.record(k, &[Some(false)], || vec![k]);
        }
        assert_eq!(a.examples.len(), FAILURE_CAP);
        assert_eq!(a.examples[0].0, 0);
        assert_eq!(a.failures[0], 40);
    }
}
