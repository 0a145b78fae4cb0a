//! Jet-based checks of the derivative rules the closed forms are built on:
//! the logarithmic derivative of a product of linear fractions, `D_x` of a
//! generalized harmonic number, and `D_x` of a rational-argument binomial.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{
    gen_binomial, gen_binomial_jet, gen_harmonic, gen_harmonic_jet, harmonic_x,
    hits_negative_range, HarmonicArgs,
};
use crate::error::{Error, Result};
use crate::jet::Jet;
use crate::rational::Rational;

/// One comparison of two exactly computed values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckCase {
    pub params: String,
    pub lhs: Rational,
    pub rhs: Rational,
    pub equal: bool,
}

/// Outcome of one family of cross-checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    pub cases: Vec<CheckCase>,
    pub skipped: u64,
}

impl CheckReport {
    pub(crate) fn new(check: &str) -> Self {
        CheckReport { check: check.to_string(), cases: Vec::new(), skipped: 0 }
    }

    pub(crate) fn push(&mut self, params: String, lhs: Rational, rhs: Rational) {
        let equal = lhs == rhs;
        self.cases.push(CheckCase { params, lhs, rhs, equal });
    }

    pub fn failed(&self) -> usize {
        self.cases.iter().filter(|c| !c.equal).count()
    }

    pub fn passed(&self) -> bool {
        self.failed() == 0
    }
}

/// `x -> (a x + b) / (c x + d)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearFraction {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
}

impl LinearFraction {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        LinearFraction { a, b, c, d }
    }

    fn num_at(&self, x: &Rational) -> Rational {
        &self.a * x + &self.b
    }

    fn den_at(&self, x: &Rational) -> Rational {
        &self.c * x + &self.d
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivativeWitness {
    pub x0: Rational,
    /// `f'(x0)` pushed through jet arithmetic.
    pub jet: Rational,
    /// `f(x0) * sum_j (a_j d_j - b_j c_j) / ((a_j x0 + b_j)(c_j x0 + d_j))`.
    pub formula: Rational,
    pub equal: bool,
}

/// Compares the jet derivative of `f = prod_j (a_j x + b_j)/(c_j x + d_j)`
/// at `x0` with the logarithmic-derivative formula.
pub fn verify_derivative_lemma(factors: &[LinearFraction], x0: &Rational) -> Result<DerivativeWitness> {
    for (j, f) in factors.iter().enumerate() {
        if f.num_at(x0).is_zero() || f.den_at(x0).is_zero() {
            return Err(Error::SingularParameter(format!("factor {j} vanishes at x = {x0}")));
        }
    }

    let x = Jet::var(x0, 1)?;
    let mut prod = Jet::constant(Rational::one(), x0, 1)?;
    for f in factors {
        let num = x.scale(&f.a).add_scalar(&f.b);
        let den = x.scale(&f.c).add_scalar(&f.d);
        prod = prod * num.checked_div(&den)?;
    }
    let jet = prod.derivative(1)?;

    let mut value = Rational::one();
    let mut log_sum = Rational::zero();
    for f in factors {
        let (u, v) = (f.num_at(x0), f.den_at(x0));
        value *= u.checked_div(&v)?;
        let det = &f.a * &f.d - &f.b * &f.c;
        log_sum += det.checked_div(&(u * v))?;
    }
    let formula = value * log_sum;
    Ok(DerivativeWitness { x0: x0.clone(), equal: jet == formula, jet, formula })
}

fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    Rational::frac(rng.gen_range(-9..=9), rng.gen_range(1..=7))
}

/// `count` reproducible random factor lists with `s` factors each, `s`
/// drawn from `s_range`, paired with a basepoint at which no factor
/// vanishes.
pub fn random_fraction_sets(
    seed: u64,
    count: usize,
    s_range: std::ops::RangeInclusive<usize>,
) -> Vec<(Vec<LinearFraction>, Rational)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let s = rng.gen_range(s_range.clone());
        let factors: Vec<LinearFraction> = (0..s)
            .map(|_| {
                LinearFraction::new(
                    small_rational(&mut rng),
                    small_rational(&mut rng),
                    small_rational(&mut rng),
                    small_rational(&mut rng),
                )
            })
            .collect();
        let x0 = small_rational(&mut rng);
        let ok = factors.iter().all(|f| !f.num_at(&x0).is_zero() && !f.den_at(&x0).is_zero());
        if ok {
            out.push((factors, x0));
        }
    }
    out
}

/// `D_x H_n^<l>(x) = -l H_n^<l+1>(x)` for `n <= n_max`, `1 <= l <= ell_max`
/// over `x_grid`; poles are counted as skipped.
pub fn verify_harmonic_derivative(n_max: u64, ell_max: u32, x_grid: &[Rational]) -> CheckReport {
    let mut report = CheckReport::new("harmonic-derivative");
    for n in 0..=n_max {
        for ell in 1..=ell_max {
            for x in x_grid {
                if hits_negative_range(x, n) {
                    report.skipped += 1;
                    continue;
                }
                let jet = gen_harmonic_jet(n, ell, x, 1).and_then(|j| j.derivative(1));
                let next = gen_harmonic(&HarmonicArgs::new(n, ell + 1, x.clone()));
                match (jet, next) {
                    (Ok(d), Ok(h)) => {
                        let rhs = -(h * Rational::from(ell));
                        report.push(format!("n={n} l={ell} x={x}"), d, rhs);
                    }
                    _ => report.skipped += 1,
                }
            }
        }
    }
    report
}

/// `D_x C(x+r, s) = C(x+r, s) (H_r(x) - H_{r-s}(x))` for `0 <= s <= r <= r_max`.
pub fn verify_binomial_derivative(r_max: u64, x_grid: &[Rational]) -> CheckReport {
    let mut report = CheckReport::new("binomial-derivative");
    for r in 0..=r_max {
        for s in 0..=r {
            for x in x_grid {
                if hits_negative_range(x, r) {
                    report.skipped += 1;
                    continue;
                }
                let jet = gen_binomial_jet(x, r as i64, s, 1).and_then(|j| j.derivative(1));
                let rhs = harmonic_x(r, x).and_then(|hr| {
                    let hrs = harmonic_x(r - s, x)?;
                    Ok(gen_binomial(&(x + r as i64), s) * (hr - hrs))
                });
                match (jet, rhs) {
                    (Ok(d), Ok(rhs)) => report.push(format!("r={r} s={s} x={x}"), d, rhs),
                    _ => report.skipped += 1,
                }
            }
        }
    }
    report
}
