//! Brute-force evaluation of every left-hand side.
//!
//! Every sum here is terminating and is evaluated term by term in exact
//! arithmetic, `k` ascending, with a running term updated through the ratio
//! `term_{k+1} / term_k`. Parameters that would put a zero in some
//! denominator are rejected up front, before any term is formed.
//! [`theorem_lhs_termwise`] and [`lemma_lhs_termwise`] rebuild each term from
//! scratch; they exist to cross-check the running-product path.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinatorics::{
    gen_binomial, harmonic, harmonic2, harmonic2_x, harmonic_x, hits_negative_range,
    int_binomial,
};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Which harmonic weight multiplies the summand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Weight {
    /// `H_k^<2>(x)`
    H2,
    /// `H_k(x)^2`
    Hsq,
}

/// A `(weight, t)` pair selecting one of the six series families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Family {
    pub weight: Weight,
    pub t: u8,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family { weight: Weight::H2, t: 0 },
        Family { weight: Weight::H2, t: 1 },
        Family { weight: Weight::H2, t: 2 },
        Family { weight: Weight::Hsq, t: 0 },
        Family { weight: Weight::Hsq, t: 1 },
        Family { weight: Weight::Hsq, t: 2 },
    ];

    pub fn new(weight: Weight, t: u8) -> Result<Self> {
        if t > 2 {
            return Err(Error::DomainError(format!("power t={t} not in 0..=2")));
        }
        Ok(Family { weight, t })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = match self.weight {
            Weight::H2 => "H2",
            Weight::Hsq => "HSQ",
        };
        write!(f, "{w}_T{}", self.t)
    }
}

fn k_pow(k: u64, t: u8) -> Rational {
    Rational::from(k.pow(t as u32))
}

fn singular(msg: String) -> Error {
    Error::SingularParameter(msg)
}

/// `x` in `{-1..-n}` kills `C(x+k, k)` for some `k <= n`, and is also the
/// pole set of `H_k(x)`.
fn check_theorem_params(n: u64, x: &Rational) -> Result<()> {
    if hits_negative_range(x, n) {
        return Err(singular(format!("x = {x} is in {{-1..-{n}}}")));
    }
    Ok(())
}

/// `sum_{k=0}^n (-1)^k C(n,k) C(n+k,k) / C(x+k,k) * k^t * W_k(x)`.
pub fn theorem_lhs(fam: Family, n: u64, x: &Rational) -> Result<Rational> {
    check_theorem_params(n, x)?;
    let mut term = Rational::one();
    let mut h1 = Rational::zero();
    let mut h2 = Rational::zero();
    let mut sum = Rational::zero();
    for k in 0..=n {
        if k > 0 {
            let kk = k as i64;
            let step = (x + kk).recip()?;
            h2 += &step * &step;
            h1 += step;
            // term_k / term_{k-1} = -(n-k+1)(n+k) / (k (x+k))
            let num = Rational::from(-((n - k + 1) as i64) * (n + k) as i64);
            term *= num.checked_div(&((x + kk) * kk))?;
        }
        let weight = match fam.weight {
            Weight::H2 => h2.clone(),
            Weight::Hsq => &h1 * &h1,
        };
        sum += &term * &k_pow(k, fam.t) * weight;
    }
    Ok(sum)
}

/// [`theorem_lhs`] with every term rebuilt from binomials and harmonic sums.
pub fn theorem_lhs_termwise(fam: Family, n: u64, x: &Rational) -> Result<Rational> {
    check_theorem_params(n, x)?;
    let mut sum = Rational::zero();
    for k in 0..=n {
        let coef = Rational::sign_pow(k) * int_binomial(n, k) * int_binomial(n + k, k);
        let coef = coef.checked_div(&gen_binomial(&(x + k as i64), k))?;
        let weight = match fam.weight {
            Weight::H2 => harmonic2_x(k, x)?,
            Weight::Hsq => harmonic_x(k, x)?.pow(2)?,
        };
        sum += coef * k_pow(k, fam.t) * weight;
    }
    Ok(sum)
}

fn check_lemma_params(n: u64, x: &Rational, y: &Rational) -> Result<()> {
    if hits_negative_range(y, n) {
        return Err(singular(format!("y = {y} is in {{-1..-{n}}}")));
    }
    let z = x * 2 - y;
    if hits_negative_range(&z, n) {
        return Err(singular(format!("2x - y = {z} is in {{-1..-{n}}}")));
    }
    Ok(())
}

/// `sum_{k=0}^n (-1)^k k^t C(n,k) C(n+k,k) C(x+k,k) / (C(y+k,k) C(2x-y+k,k))`.
pub fn lemma_lhs(t: u8, n: u64, x: &Rational, y: &Rational) -> Result<Rational> {
    check_lemma_params(n, x, y)?;
    let z = x * 2 - y;
    let mut term = Rational::one();
    let mut sum = Rational::zero();
    for k in 0..=n {
        if k > 0 {
            let kk = k as i64;
            // term_k / term_{k-1} = -(n-k+1)(n+k)(x+k) / (k (y+k) (2x-y+k))
            let num = Rational::from(-((n - k + 1) as i64) * (n + k) as i64) * (x + kk);
            let den = (y + kk) * (&z + kk) * kk;
            term *= num.checked_div(&den)?;
        }
        sum += &term * &k_pow(k, t);
    }
    Ok(sum)
}

pub fn lemma_lhs_termwise(t: u8, n: u64, x: &Rational, y: &Rational) -> Result<Rational> {
    check_lemma_params(n, x, y)?;
    let z = x * 2 - y;
    let mut sum = Rational::zero();
    for k in 0..=n {
        let kk = k as i64;
        let num = Rational::sign_pow(k)
            * int_binomial(n, k)
            * int_binomial(n + k, k)
            * gen_binomial(&(x + kk), k);
        let den = gen_binomial(&(y + kk), k) * gen_binomial(&(&z + kk), k);
        sum += num.checked_div(&den)? * k_pow(k, t);
    }
    Ok(sum)
}

fn corollary_weight(fam: Family, i: u64) -> Rational {
    match fam.weight {
        Weight::H2 => harmonic2(i),
        Weight::Hsq => harmonic(i).pow(2).unwrap(),
    }
}

/// `sum_{k=0}^n (-1)^k C(n+k,k) C(p+n,n-k) k^t W_{p+k}` with classical
/// harmonic numbers.
pub fn corollary_lhs(fam: Family, p: u64, n: u64) -> Rational {
    (0..=n)
        .map(|k| {
            Rational::sign_pow(k)
                * int_binomial(n + k, k)
                * int_binomial(p + n, n - k)
                * k_pow(k, fam.t)
                * corollary_weight(fam, p + k)
        })
        .sum()
}

/// The `p = n` form `sum_{k=0}^n (-1)^k C(n,k) k^t W_{n+k}`; the general sum
/// at `p = n` is `C(2n,n)` times this.
pub fn corollary_lhs_reduced(fam: Family, n: u64) -> Rational {
    (0..=n)
        .map(|k| {
            Rational::sign_pow(k) * int_binomial(n, k) * k_pow(k, fam.t) * corollary_weight(fam, n + k)
        })
        .sum()
}

/// Smallest `j` in `0..n` with `v + j = 0`, if any; such a `v` makes
/// `(v)_k` vanish for every `k > j`.
fn pochhammer_zero_below(v: &Rational, n: u64) -> Option<u64> {
    match v.to_i64() {
        Some(i) if i <= 0 && ((-i) as u64) < n => Some((-i) as u64),
        _ => None,
    }
}

/// `sum_{k=0}^{degree} (a1)_k (a2)_k (a3)_k / (k! (b1)_k (b2)_k)`.
///
/// The lower parameters must keep `(b)_k` nonzero for all `k <= degree`.
/// The upper parameters are unrestricted; with `a1 = -degree` this is the
/// full terminating series.
pub fn terminating_3f2(degree: u64, upper: [&Rational; 3], lower: [&Rational; 2]) -> Result<Rational> {
    for b in lower {
        if let Some(j) = pochhammer_zero_below(b, degree) {
            return Err(singular(format!(
                "lower parameter {b} gives a zero factor at k = {}",
                j + 1
            )));
        }
    }
    let mut term = Rational::one();
    let mut sum = Rational::one();
    for k in 0..degree {
        let kk = k as i64;
        let num = (upper[0] + kk) * (upper[1] + kk) * (upper[2] + kk);
        let den = (lower[0] + kk) * (lower[1] + kk) * (kk + 1);
        term *= num.checked_div(&den)?;
        sum += &term;
    }
    Ok(sum)
}

/// `3F2(-n, u, v; w, z; 1)`, terminating.
pub fn f32_terminating(n: u64, u: &Rational, v: &Rational, w: &Rational, z: &Rational) -> Result<Rational> {
    let minus_n = Rational::from(-(n as i64));
    terminating_3f2(n, [&minus_n, u, v], [w, z])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::frac(n, d)
    }

    const H2T0: Family = Family { weight: Weight::H2, t: 0 };
    const HSQT0: Family = Family { weight: Weight::Hsq, t: 0 };

    #[test]
    fn theorem_lhs_examples() {
        assert_eq!(theorem_lhs(H2T0, 0, &q(5, 7)).unwrap(), q(0, 1));
        // k=1 term: -1 * 1 * 2 / (3/2) * (2/3)^2
        assert_eq!(theorem_lhs(H2T0, 1, &q(1, 2)).unwrap(), q(-16, 27));
        assert_eq!(theorem_lhs(HSQT0, 1, &q(1, 2)).unwrap(), q(-16, 27));
        assert!(matches!(
            theorem_lhs(H2T0, 3, &q(-2, 1)),
            Err(Error::SingularParameter(_))
        ));
        assert!(theorem_lhs(H2T0, 3, &q(-4, 1)).is_ok());
    }

    #[test]
    fn lemma_lhs_examples() {
        assert_eq!(lemma_lhs(0, 0, &q(3, 5), &q(-7, 2)).unwrap(), q(1, 1));
        assert_eq!(lemma_lhs(0, 1, &q(1, 2), &q(1, 2)).unwrap(), q(-1, 3));
        assert_eq!(lemma_lhs(1, 1, &q(1, 2), &q(1, 2)).unwrap(), q(-4, 3));
        assert!(lemma_lhs(0, 2, &q(1, 1), &q(-2, 1)).is_err());
        // 2x - y = -1
        assert!(lemma_lhs(0, 2, &q(1, 2), &q(2, 1)).is_err());
    }

    #[test]
    fn corollary_lhs_examples() {
        assert_eq!(corollary_lhs(H2T0, 2, 1), q(37, 36));
        assert_eq!(corollary_lhs(H2T0, 0, 2), q(3, 2));
        let hsq1 = Family { weight: Weight::Hsq, t: 1 };
        assert_eq!(corollary_lhs_reduced(hsq1, 2), q(47, 24));
        assert_eq!(corollary_lhs(hsq1, 2, 2), q(47, 24) * int_binomial(4, 2));
    }

    #[test]
    fn f32_examples() {
        let one = q(1, 1);
        assert_eq!(f32_terminating(0, &q(3, 1), &q(2, 7), &q(5, 1), &q(1, 9)).unwrap(), one);
        assert_eq!(f32_terminating(1, &one, &one, &one, &one).unwrap(), q(0, 1));
        // Chu-Vandermonde: 2F1(-n, u; w; 1) = (w-u)_n / (w)_n
        let (u, w, v) = (q(1, 2), q(3, 2), q(7, 3));
        let lhs = f32_terminating(2, &u, &v, &w, &v).unwrap();
        let rhs = crate::combinatorics::shifted_factorial(&(&w - &u), 2)
            .checked_div(&crate::combinatorics::shifted_factorial(&w, 2))
            .unwrap();
        assert_eq!(lhs, rhs);
        assert!(f32_terminating(3, &one, &one, &q(-1, 1), &one).is_err());
        // (w)_k vanishes only from k = 3 on, outside a degree-2 sum
        assert!(f32_terminating(2, &one, &one, &q(-2, 1), &one).is_ok());
    }
}
