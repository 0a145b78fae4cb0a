//! Auxiliary expressions shared by several right-hand sides: `U_n(x)`,
//! `V_n(x)`, `W_n(x)` for the `t = 2` theorems and `A..E(p, n)` for the
//! corollaries.

use std::fmt;
use std::str::FromStr;

use super::checked::{fr, h, half, Q};
use super::mutation::{Mutation, Tweak};
use super::singular;
use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Aux {
    U,
    V,
    W,
    A,
    B,
    C,
    D,
    E,
}

impl Aux {
    pub const ALL: [Aux; 8] = [Aux::U, Aux::V, Aux::W, Aux::A, Aux::B, Aux::C, Aux::D, Aux::E];

    /// `U`, `V`, `W` take a rational `x`; the rest take an integer `p`.
    pub fn takes_x(self) -> bool {
        matches!(self, Aux::U | Aux::V | Aux::W)
    }
}

impl fmt::Display for Aux {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(&format!("{self:?}"))
    }
}

impl FromStr for Aux {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Aux::ALL
            .iter()
            .copied()
            .find(|a| a.to_string().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Parse(format!("unknown auxiliary expression `{s}`")))
    }
}

/// Evaluates one auxiliary expression. `arg` is `x` for `U, V, W` and `p`
/// (a nonnegative integer) for `A..E`.
pub fn aux_eval(which: Aux, n: u64, arg: &Rational) -> Result<Rational> {
    let ni = n as i64;
    let v = if which.takes_x() {
        let x = Q::from(arg);
        match which {
            Aux::U => u(ni, &x),
            Aux::V => v(ni, &x),
            _ => w(ni, &x),
        }
    } else {
        let p = arg
            .to_i64()
            .filter(|p| *p >= 0)
            .ok_or_else(|| Error::DomainError(format!("{which}: p = {arg} is not a nonnegative integer")))?;
        match which {
            Aux::E if !(0 < p && p <= ni) => {
                return Err(Error::DomainError(format!("E(p, n) needs 0 < p <= n, got p={p} n={n}")));
            }
            Aux::E => e(p, ni),
            _ if p <= ni => {
                return Err(Error::DomainError(format!("{which}(p, n) needs p > n, got p={p} n={n}")));
            }
            Aux::A => a(p, ni, Tweak::NONE),
            Aux::B => b(p, ni),
            Aux::C => c(p, ni),
            _ => d(p, ni),
        }
    };
    v.into_result().map_err(|e| singular(format!("{which} at n={n}, {arg}"), e))
}

pub(crate) fn u(n: i64, x: &Q) -> Q {
    let m = n + n * n;
    let num = m * (m - x) + (1 - m) * x.sq() + x.pow(3) - x.pow(4);
    2 * num / (m * (m - x) * x)
}

pub(crate) fn v(n: i64, x: &Q) -> Q {
    let m = n + n * n;
    let num = n.pow(3) * (1 + n) * (1 + n + x) - n * n * (2 + n) * x.sq()
        - (1 - 2 * n - n * n) * x.pow(3)
        - (1 + n) * x.pow(4)
        + x.pow(5);
    2 * num / (m * (m - x) * (n - x) * x)
}

pub(crate) fn w(n: i64, x: &Q) -> Q {
    let m = n + n * n;
    let num = 2 * n * n * (1 + n).pow(2) - n * n * (5 + 3 * n) * x
        - 2 * (1 - 3 * n - 2 * n * n) * x.sq()
        - 3 * (1 + n) * x.pow(3)
        + 2 * x.pow(4);
    2 * num / ((1 + n) * (m - x) * (n - x).sq() * x)
}

/// `H_{p+n} - H_{p-n} - H_{(p+n)/2} + H_{(p-n)/2}` with the parity-adjusted
/// halves; the common first factor of `A` and `C`.
fn even_bracket(p: i64, n: i64) -> Q {
    h(p + n) - h(p - n) - h(half(p + n)) + h(half(p - n))
}

fn odd_bracket(p: i64, n: i64) -> Q {
    h(p + n) - h(p - n) - h(half(p + n - 1)) + h(half(p - n - 1))
}

pub(crate) fn a(p: i64, n: i64, tw: Tweak) -> Q {
    if (p - n).rem_euclid(2) == 0 {
        let lo = half(p - n - 2) + tw.shift(Mutation::CorDIndex, 1);
        even_bracket(p, n) * (h(p + n) - h(p - n) - h(half(p + n)) + h(lo))
    } else {
        let base = odd_bracket(p, n);
        &base * (&base + fr(2, p - n))
    }
}

pub(crate) fn b(p: i64, n: i64) -> Q {
    let m = n + n * n;
    if (p - n).rem_euclid(2) == 0 {
        let first = even_bracket(p, n) - fr(3, p - n) - fr(2 * p, m);
        let second = h(p + n) - h(p - n - 1) - h(half(p + n)) + h(half(p - n));
        first * second + Q::int(2 * (p * p + 2 * n + n * n)) / (m * (p - n) * (p - n))
    } else {
        let base = h(p + n) - h(p - n - 1) - h(half(p + n - 1)) + h(half(p - n - 1));
        (&base + fr(2 * p, m)) * &base - fr(2, m)
    }
}

pub(crate) fn c(p: i64, n: i64) -> Q {
    if (p - n).rem_euclid(2) == 0 {
        even_bracket(p, n)
    } else {
        h(p - n) - h(p + n) - h(half(p - n - 1)) + h(half(p + n - 1))
    }
}

pub(crate) fn d(p: i64, n: i64) -> Q {
    let m = n + n * n;
    let num = n * n * (1 + n).pow(2) - n * n * (2 + n) * p - (1 - 2 * n - n * n) * p * p
        - (1 + n) * p.pow(3)
        + p.pow(4);
    Q::int(2 * num) / (m * (m - p) * (n - p))
}

pub(crate) fn e(p: i64, n: i64) -> Q {
    let m = n + n * n;
    let core = p * (1 + p - p * p);
    if (p - n).rem_euclid(2) == 0 {
        h(half(n + p)) - h(half(n - p)) - Q::int(core - (2 + p) * m) / (m * (m - p))
    } else {
        h(half(n + p - 1)) - h(half(n - p - 1)) + Q::int(core + (2 - p) * m) / (m * (m - p))
    }
}
