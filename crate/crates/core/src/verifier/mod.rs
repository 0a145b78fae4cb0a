//! Grid construction, parallel comparison of oracle against closed form,
//! and the auxiliary cross-checks (derivatives, hypergeometric relations,
//! mutation sensitivity).
//!
//! Every report is a pure function of its inputs: points are enumerated in
//! canonical order, evaluated on a dedicated rayon pool with an
//! order-preserving collect, and merged serially. The thread count never
//! shows up in the output.

mod calculus;
mod mutations;
mod relations;

pub use calculus::{
    random_fraction_sets, verify_binomial_derivative, verify_derivative_lemma,
    verify_harmonic_derivative, CheckCase, CheckReport, DerivativeWitness, LinearFraction,
};
pub use mutations::{mutation_sensitivity, MutationOutcome};
pub use relations::{verify_proof_relations, Relation};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::closed_forms::{IdentityId, Kind, Mutation, PRange, Params};
use crate::error::{Error, Result};
use crate::rational::Rational;

pub const DEFAULT_N_MAX: u64 = 25;
pub const DEFAULT_P_MAX: u64 = 40;

fn rats(pairs: &[(i64, i64)]) -> Vec<Rational> {
    pairs.iter().map(|&(a, b)| Rational::frac(a, b)).collect()
}

/// The default `x` grid: 33 non-integers mixing both signs, small and
/// coprime denominators, and half-integers on both sides of `0..=8`.
pub fn default_x_grid() -> Vec<Rational> {
    let mut v = rats(&[
        (1, 2), (-1, 2), (1, 3), (-1, 3), (2, 3), (-2, 3), (3, 2), (-3, 2), (5, 2), (-5, 2),
        (5, 3), (-5, 3), (7, 3), (9, 4), (11, 5), (13, 3), (-7, 4), (-8, 3), (17, 2), (23, 5),
        (31, 7), (41, 6),
    ]);
    for k in 3..=8 {
        v.push(Rational::frac(2 * k + 1, 2));
        v.push(Rational::frac(-(2 * k + 1), 2));
    }
    normalize(v)
}

/// The default `y` grid for the lemmas; a subset of the `x` grid, so the
/// `y = x` diagonal is covered.
pub fn default_y_grid() -> Vec<Rational> {
    normalize(rats(&[
        (1, 2), (-1, 2), (1, 3), (-1, 3), (2, 3), (3, 2), (-5, 2), (7, 3), (9, 4), (-7, 4),
        (5, 3), (13, 3),
    ]))
}

fn normalize(mut v: Vec<Rational>) -> Vec<Rational> {
    v.sort();
    v.dedup();
    v
}

/// How corollary `p` values are chosen.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PPolicy {
    /// Only these values, where the corollary's `p` range admits them.
    Fixed { values: Vec<u64> },
    /// Every `p` in the corollary's range, up to `p_max`.
    AllValid { p_max: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridSpec {
    /// Inclusive `[lo, hi]`.
    pub n_range: [u64; 2],
    pub p_policy: PPolicy,
    pub x_grid: Vec<Rational>,
    pub y_grid: Option<Vec<Rational>>,
    pub identities: Vec<IdentityId>,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec::new(0, DEFAULT_N_MAX, PPolicy::AllValid { p_max: DEFAULT_P_MAX }, default_x_grid())
    }
}

impl GridSpec {
    /// A grid over every identity; `x` values are sorted and deduplicated.
    pub fn new(n_lo: u64, n_hi: u64, p_policy: PPolicy, x_grid: Vec<Rational>) -> Self {
        GridSpec {
            n_range: [n_lo, n_hi],
            p_policy,
            x_grid: normalize(x_grid),
            y_grid: None,
            identities: IdentityId::ALL.to_vec(),
        }
    }

    pub fn with_n_max(mut self, n_max: u64) -> Self {
        self.n_range[1] = n_max;
        self
    }

    pub fn with_y_grid(mut self, y: Vec<Rational>) -> Self {
        self.y_grid = Some(normalize(y));
        self
    }

    pub fn with_identities(mut self, ids: impl IntoIterator<Item = IdentityId>) -> Self {
        let mut ids: Vec<_> = ids.into_iter().collect();
        ids.sort();
        ids.dedup();
        self.identities = ids;
        self
    }

    fn y_values(&self) -> Vec<Rational> {
        self.y_grid.clone().unwrap_or_else(default_y_grid)
    }

    fn p_values(&self, range: PRange, n: u64) -> Vec<u64> {
        let p_max = match &self.p_policy {
            PPolicy::AllValid { p_max } => *p_max,
            PPolicy::Fixed { values } => values.iter().copied().max().unwrap_or(0),
        };
        let all: Vec<u64> = match range {
            PRange::Zero => vec![0],
            PRange::Equal => vec![n],
            PRange::Between => (1..=n.min(p_max)).collect(),
            PRange::Above => (n + 1..=p_max).collect(),
        };
        match &self.p_policy {
            PPolicy::AllValid { .. } => all,
            PPolicy::Fixed { values } => all.into_iter().filter(|p| values.contains(p)).collect(),
        }
    }

    /// Every candidate point for `id`, in canonical `(n, p, x, y)` order.
    pub fn points(&self, id: IdentityId) -> Vec<Params> {
        let [lo, hi] = self.n_range;
        let mut out = Vec::new();
        for n in lo..=hi {
            match id.kind() {
                Kind::Theorem(_) | Kind::Degenerate { .. } => {
                    out.extend(self.x_grid.iter().map(|x| Params::nx(n, x.clone())));
                }
                Kind::Lemma { .. } => {
                    let ys = self.y_values();
                    for x in &self.x_grid {
                        out.extend(ys.iter().map(|y| Params::nxy(n, x.clone(), y.clone())));
                    }
                }
                Kind::Corollary { range, .. } => {
                    out.extend(self.p_values(range, n).into_iter().map(|p| Params::np(n, p)));
                }
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Case {
    pub identity: IdentityId,
    pub n: u64,
    pub p: Option<u64>,
    pub x: Option<Rational>,
    pub y: Option<Rational>,
    pub lhs: Rational,
    pub rhs: Rational,
    pub equal: bool,
}

impl Case {
    pub fn params(&self) -> Params {
        Params { n: self.n, p: self.p, x: self.x.clone(), y: self.y.clone() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Skipped {
    pub identity: IdentityId,
    pub n: u64,
    pub p: Option<u64>,
    pub x: Option<Rational>,
    pub y: Option<Rational>,
    pub reason: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub checked: u64,
    pub passed: u64,
    pub failed: u64,
    pub skipped_singular: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityTally {
    pub identity: IdentityId,
    #[serde(flatten)]
    pub tally: Tally,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    #[serde(flatten)]
    pub total: Tally,
    pub per_identity: Vec<IdentityTally>,
}

/// The failing cases of one identity, smallest first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub identity: IdentityId,
    pub minimal: Case,
    pub cases: Vec<Case>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub version: String,
    pub gridspec: GridSpec,
    pub cases: Vec<Case>,
    pub summary: Summary,
    pub failures: Vec<Failure>,
    pub skipped: Vec<Skipped>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.summary.total.failed == 0
    }

    pub fn failure(&self, id: IdentityId) -> Option<&Failure> {
        self.failures.iter().find(|f| f.identity == id)
    }

    pub fn tally(&self, id: IdentityId) -> Option<&Tally> {
        self.summary.per_identity.iter().find(|t| t.identity == id).map(|t| &t.tally)
    }
}

/// The failing case smallest under `(n, p, height of x, height of y)`.
pub fn minimal_counterexample(failing: &[Case]) -> Option<Case> {
    failing.iter().min_by_key(|c| c.params().size_key()).cloned()
}

pub(crate) fn pool(jobs: usize) -> Result<rayon::ThreadPool> {
    if jobs == 0 {
        return Err(Error::DomainError("jobs must be at least 1".into()));
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::DomainError(format!("cannot start {jobs} worker threads: {e}")))
}

enum Outcome {
    Case(Case),
    Skip(Skipped),
}

fn evaluate(id: IdentityId, params: Params, mutation: Option<Mutation>) -> Outcome {
    let skip = |params: Params, reason: String| {
        Outcome::Skip(Skipped { identity: id, n: params.n, p: params.p, x: params.x, y: params.y, reason })
    };
    if let Err(e) = id.check_point(&params) {
        return skip(params, e.to_string());
    }
    let rhs = match mutation {
        Some(m) => id.rhs_mutated(&params, m),
        None => id.rhs(&params),
    };
    match (id.lhs(&params), rhs) {
        (Ok(lhs), Ok(rhs)) => Outcome::Case(Case {
            identity: id,
            n: params.n,
            p: params.p,
            x: params.x,
            y: params.y,
            equal: lhs == rhs,
            lhs,
            rhs,
        }),
        (Err(e), _) => skip(params, format!("lhs: {e}")),
        (_, Err(e)) => skip(params, format!("rhs: {e}")),
    }
}

pub(crate) fn run(grid: &GridSpec, jobs: usize, mutation: Option<Mutation>) -> Result<VerificationReport> {
    let pool = pool(jobs)?;
    let work: Vec<(IdentityId, Params)> = grid
        .identities
        .iter()
        .flat_map(|&id| grid.points(id).into_iter().map(move |p| (id, p)))
        .collect();
    let outcomes: Vec<Outcome> = pool.install(|| {
        work.into_par_iter().map(|(id, p)| evaluate(id, p, mutation)).collect()
    });

    let mut cases = Vec::new();
    let mut skipped = Vec::new();
    for o in outcomes {
        match o {
            Outcome::Case(c) => cases.push(c),
            Outcome::Skip(s) => skipped.push(s),
        }
    }

    let mut per_identity = Vec::new();
    let mut failures = Vec::new();
    let mut total = Tally::default();
    for &id in &grid.identities {
        let mine: Vec<&Case> = cases.iter().filter(|c| c.identity == id).collect();
        let passed = mine.iter().filter(|c| c.equal).count() as u64;
        let tally = Tally {
            checked: mine.len() as u64,
            passed,
            failed: mine.len() as u64 - passed,
            skipped_singular: skipped.iter().filter(|s| s.identity == id).count() as u64,
        };
        total.checked += tally.checked;
        total.passed += tally.passed;
        total.failed += tally.failed;
        total.skipped_singular += tally.skipped_singular;
        per_identity.push(IdentityTally { identity: id, tally });

        let mut bad: Vec<Case> = mine.into_iter().filter(|c| !c.equal).cloned().collect();
        if let Some(minimal) = minimal_counterexample(&bad) {
            bad.sort_by_key(|c| c.params().size_key());
            failures.push(Failure { identity: id, minimal, cases: bad });
        }
    }

    if total.checked == 0 {
        return Err(Error::EmptyGrid);
    }
    Ok(VerificationReport {
        version: env!("CARGO_PKG_VERSION").to_string(),
        gridspec: grid.clone(),
        cases,
        summary: Summary { total, per_identity },
        failures,
        skipped,
    })
}

/// Verifies every identity selected by `grid`, using `jobs` worker threads.
pub fn verify_all(grid: &GridSpec, jobs: usize) -> Result<VerificationReport> {
    run(grid, jobs, None)
}

/// Verifies one identity over `grid` (its identity filter is replaced).
pub fn verify_identity(id: IdentityId, grid: &GridSpec, jobs: usize) -> Result<VerificationReport> {
    run(&grid.clone().with_identities([id]), jobs, None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::frac(n, d)
    }

    #[test]
    fn default_grids() {
        let x = default_x_grid();
        assert_eq!(x.len(), 33);
        assert!(x.iter().all(|v| !v.is_integer()));
        let y = default_y_grid();
        assert_eq!(y.len(), 12);
        assert!(y.iter().all(|v| x.contains(v)));
    }

    #[test]
    fn small_theorem_grid_passes() {
        let grid = GridSpec::new(0, 5, PPolicy::AllValid { p_max: 0 }, vec![q(1, 2), q(-1, 2), q(3, 2), q(7, 3)]);
        let r = verify_identity(IdentityId::ThmH2T0, &grid, 2).unwrap();
        assert_eq!(r.summary.total.checked, 24);
        assert!(r.passed());
    }

    #[test]
    fn cor_f_at_p_one_is_skipped() {
        let grid = GridSpec::new(0, 6, PPolicy::AllValid { p_max: 6 }, vec![]);
        let r = verify_identity(IdentityId::CorF, &grid, 1).unwrap();
        assert!(r.passed());
        let skipped_p1 = r.skipped.iter().filter(|s| s.p == Some(1)).count();
        assert_eq!(skipped_p1, 6);
        assert!(r.skipped.iter().all(|s| s.reason.contains("p >= 2")));
    }

    #[test]
    fn empty_grid_errors() {
        let grid = GridSpec::new(0, 0, PPolicy::AllValid { p_max: 0 }, vec![]);
        assert_eq!(verify_identity(IdentityId::ThmH2T0, &grid, 1), Err(Error::EmptyGrid));
        // COR_K needs n >= 3
        let grid = GridSpec::new(0, 2, PPolicy::AllValid { p_max: 0 }, vec![]);
        assert_eq!(verify_identity(IdentityId::CorK, &grid, 1), Err(Error::EmptyGrid));
    }

    #[test]
    fn fixed_p_policy() {
        let grid = GridSpec::new(3, 3, PPolicy::Fixed { values: vec![1, 5] }, vec![]);
        let pts = grid.points(IdentityId::CorB);
        assert_eq!(pts, vec![Params::np(3, 1)]);
        let pts = grid.points(IdentityId::CorD);
        assert_eq!(pts, vec![Params::np(3, 5)]);
    }

    #[test]
    fn minimal_counterexample_ordering() {
        let case = |n, x: Rational| Case {
            identity: IdentityId::ThmH2T0,
            n,
            p: None,
            x: Some(x),
            y: None,
            lhs: q(0, 1),
            rhs: q(1, 1),
            equal: false,
        };
        let a = case(3, q(1, 2));
        let b = case(2, q(7, 3));
        assert_eq!(minimal_counterexample(std::slice::from_ref(&a)), Some(a.clone()));
        assert_eq!(minimal_counterexample(&[a, b.clone()]), Some(b));
        assert_eq!(minimal_counterexample(&[]), None);
    }

    #[test]
    fn mutated_cor_a_localizes_to_n_one() {
        let grid = GridSpec::new(0, 10, PPolicy::AllValid { p_max: 0 }, vec![])
            .with_identities([IdentityId::CorA]);
        let r = run(&grid, 2, Some(Mutation::CorAOddSign)).unwrap();
        let f = r.failure(IdentityId::CorA).unwrap();
        assert_eq!(f.minimal.n, 1);
        assert_eq!(f.cases.len(), 5);
        // only odd n fail, so the even branch is untouched
        assert!(f.cases.iter().all(|c| c.n % 2 == 1));
    }

    #[test]
    fn report_is_independent_of_thread_count() {
        let grid = GridSpec::default().with_n_max(4);
        let one = verify_all(&grid, 1).unwrap();
        let four = verify_all(&grid, 4).unwrap();
        assert_eq!(one, four);
        assert!(one.passed());
    }
}
