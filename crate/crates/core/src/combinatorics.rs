//! Combinatorial atoms: generalized harmonic numbers, shifted factorials and
//! binomial coefficients with rational upper argument.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::jet::Jet;
use crate::rational::Rational;

/// Arguments of `H_n^<ell>(x) = sum_{k=1}^n 1/(x+k)^ell`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HarmonicArgs {
    pub n: u64,
    pub ell: u32,
    pub x: Rational,
}

impl HarmonicArgs {
    pub fn new(n: u64, ell: u32, x: Rational) -> Self {
        HarmonicArgs { n, ell, x }
    }

    /// `x + k = 0` for some `k` in `1..=n`, i.e. `x` is one of `-1, .., -n`.
    pub fn has_pole(&self) -> bool {
        hits_negative_range(&self.x, self.n)
    }
}

/// Whether `v` lies in `{-1, -2, .., -n}`.
pub(crate) fn hits_negative_range(v: &Rational, n: u64) -> bool {
    match v.to_i64() {
        Some(i) => i < 0 && (-i) as u64 <= n,
        None => false,
    }
}

pub fn gen_harmonic(args: &HarmonicArgs) -> Result<Rational> {
    if args.has_pole() {
        return Err(Error::PoleInRange { n: args.n as i64, ell: args.ell, x: args.x.clone() });
    }
    let mut sum = Rational::zero();
    for k in 1..=args.n {
        sum += (&args.x + k as i64).pow(-(args.ell as i32))?;
    }
    Ok(sum)
}

/// `H_n(x)`, first order.
pub fn harmonic_x(n: u64, x: &Rational) -> Result<Rational> {
    gen_harmonic(&HarmonicArgs::new(n, 1, x.clone()))
}

/// `H_n^<2>(x)`.
pub fn harmonic2_x(n: u64, x: &Rational) -> Result<Rational> {
    gen_harmonic(&HarmonicArgs::new(n, 2, x.clone()))
}

/// Classical `H_n^<ell>`; never singular.
pub fn harmonic_ell(n: u64, ell: u32) -> Rational {
    let mut sum = Rational::zero();
    for k in 1..=n {
        sum += Rational::new(1, BigInt::from(k).pow(ell)).unwrap();
    }
    sum
}

/// Classical `H_n`.
pub fn harmonic(n: u64) -> Rational {
    harmonic_ell(n, 1)
}

/// Classical `H_n^<2>`.
pub fn harmonic2(n: u64) -> Rational {
    harmonic_ell(n, 2)
}

/// `H_n^<ell>(x)` for any integer `n`, extended to negative `n` through the
/// recurrence `H_n = H_{n-1} + 1/(x+n)^ell`, which gives
/// `H_{-m}^<ell>(x) = -sum_{j=0}^{m-1} 1/(x-j)^ell`.
pub fn harmonic_signed(n: i64, ell: u32, x: &Rational) -> Result<Rational> {
    if n >= 0 {
        return gen_harmonic(&HarmonicArgs::new(n as u64, ell, x.clone()));
    }
    let pole = || Error::PoleInRange { n, ell, x: x.clone() };
    let mut sum = Rational::zero();
    for j in 0..(-n) {
        let base = x - j;
        if base.is_zero() {
            return Err(pole());
        }
        sum -= base.pow(-(ell as i32))?;
    }
    Ok(sum)
}

/// Jet of `x -> H_n^<ell>(x)` at `x0`.
pub fn gen_harmonic_jet(n: u64, ell: u32, x0: &Rational, order: usize) -> Result<Jet> {
    let args = HarmonicArgs::new(n, ell, x0.clone());
    if args.has_pole() {
        return Err(Error::PoleInRange { n: n as i64, ell, x: x0.clone() });
    }
    let x = Jet::var(x0, order)?;
    let mut sum = Jet::constant(Rational::zero(), x0, order)?;
    for k in 1..=n {
        sum = sum + x.add_scalar(&Rational::from(k)).powi(-(ell as i32))?;
    }
    Ok(sum)
}

/// Pochhammer symbol `(x)_n = x (x+1) ... (x+n-1)`, `(x)_0 = 1`.
pub fn shifted_factorial(x: &Rational, n: u64) -> Rational {
    (0..n).map(|i| x + i as i64).product()
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// `C(x, s) = (x-s+1)_s / s!` for rational `x`.
pub fn gen_binomial(x: &Rational, s: u64) -> Rational {
    let num = shifted_factorial(&(x - s as i64 + 1), s);
    num * Rational::new(1, factorial(s)).unwrap()
}

/// Jet of `x -> C(x + r, s)` at `x0`.
pub fn gen_binomial_jet(x0: &Rational, r: i64, s: u64, order: usize) -> Result<Jet> {
    let x = Jet::var(x0, order)?;
    let mut acc = Jet::constant(Rational::one(), x0, order)?;
    for j in 1..=s as i64 {
        let factor = x.add_scalar(&Rational::from(r - j + 1)).scale(&Rational::frac(1, j));
        acc = acc * factor;
    }
    Ok(acc)
}

/// Classical `C(n, k)`, zero when `k > n`.
pub fn int_binomial(n: u64, k: u64) -> Rational {
    Rational::from(int_binomial_big(n, k))
}

pub(crate) fn int_binomial_big(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}
