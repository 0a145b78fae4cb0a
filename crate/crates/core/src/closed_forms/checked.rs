//! A rational that may carry an evaluation error.
//!
//! Closed forms nest a dozen divisions; writing each one as
//! `checked_div(..)?` buries the formula. `Q` poisons on the first zero
//! divisor or harmonic pole and keeps the first error through all further
//! arithmetic, so right-hand sides read like the written expressions.

use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::combinatorics;
use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, Debug)]
pub(crate) struct Q(Result<Rational>);

impl Q {
    pub fn new(v: Rational) -> Q {
        Q(Ok(v))
    }

    pub fn int(v: i64) -> Q {
        Q(Ok(Rational::from(v)))
    }

    pub fn into_result(self) -> Result<Rational> {
        self.0
    }

    pub fn sq(&self) -> Q {
        self * self
    }

    pub fn pow(&self, e: u32) -> Q {
        let mut acc = Q::int(1);
        for _ in 0..e {
            acc = acc * self;
        }
        acc
    }
}

impl From<Rational> for Q {
    fn from(v: Rational) -> Q {
        Q::new(v)
    }
}

impl From<&Rational> for Q {
    fn from(v: &Rational) -> Q {
        Q::new(v.clone())
    }
}

impl From<i64> for Q {
    fn from(v: i64) -> Q {
        Q::int(v)
    }
}

fn lift2(a: &Q, b: &Q, f: impl FnOnce(&Rational, &Rational) -> Result<Rational>) -> Q {
    match (&a.0, &b.0) {
        (Ok(x), Ok(y)) => Q(f(x, y)),
        (Err(e), _) | (_, Err(e)) => Q(Err(e.clone())),
    }
}

macro_rules! q_ops {
    ($Tr:ident, $m:ident, $f:expr) => {
        impl $Tr<&Q> for &Q {
            type Output = Q;
            fn $m(self, rhs: &Q) -> Q {
                lift2(self, rhs, $f)
            }
        }
        impl $Tr<Q> for Q {
            type Output = Q;
            fn $m(self, rhs: Q) -> Q {
                (&self).$m(&rhs)
            }
        }
        impl $Tr<&Q> for Q {
            type Output = Q;
            fn $m(self, rhs: &Q) -> Q {
                (&self).$m(rhs)
            }
        }
        impl $Tr<Q> for &Q {
            type Output = Q;
            fn $m(self, rhs: Q) -> Q {
                self.$m(&rhs)
            }
        }
        impl $Tr<i64> for &Q {
            type Output = Q;
            fn $m(self, rhs: i64) -> Q {
                self.$m(&Q::int(rhs))
            }
        }
        impl $Tr<i64> for Q {
            type Output = Q;
            fn $m(self, rhs: i64) -> Q {
                (&self).$m(&Q::int(rhs))
            }
        }
        impl $Tr<&Q> for i64 {
            type Output = Q;
            fn $m(self, rhs: &Q) -> Q {
                (&Q::int(self)).$m(rhs)
            }
        }
        impl $Tr<Q> for i64 {
            type Output = Q;
            fn $m(self, rhs: Q) -> Q {
                (&Q::int(self)).$m(&rhs)
            }
        }
    };
}

q_ops!(Add, add, |a, b| Ok(a + b));
q_ops!(Sub, sub, |a, b| Ok(a - b));
q_ops!(Mul, mul, |a, b| Ok(a * b));
q_ops!(Div, div, |a, b| a.checked_div(b));

impl Neg for Q {
    type Output = Q;
    fn neg(self) -> Q {
        Q(self.0.map(|v| -v))
    }
}

impl Neg for &Q {
    type Output = Q;
    fn neg(self) -> Q {
        -(self.clone())
    }
}

/// `H_n^<ell>(x)`; `n` may be negative (backward recurrence).
pub(crate) fn hx_ell(n: i64, ell: u32, x: &Q) -> Q {
    match &x.0 {
        Ok(x) => Q(combinatorics::harmonic_signed(n, ell, x)),
        Err(e) => Q(Err(e.clone())),
    }
}

/// `H_n(x)`
pub(crate) fn hx(n: i64, x: &Q) -> Q {
    hx_ell(n, 1, x)
}

/// `H_n^<2>(x)`
pub(crate) fn hx2(n: i64, x: &Q) -> Q {
    hx_ell(n, 2, x)
}

/// `C(x, s)` for rational `x`.
pub(crate) fn binom(x: &Q, s: u64) -> Q {
    match &x.0 {
        Ok(v) => Q::new(combinatorics::gen_binomial(v, s)),
        Err(e) => Q(Err(e.clone())),
    }
}

fn negative_index(i: i64) -> Q {
    Q(Err(Error::SingularParameter(format!("classical harmonic index {i} is negative"))))
}

/// Classical `H_i`; a negative index poisons the value.
pub(crate) fn h(i: i64) -> Q {
    if i < 0 {
        return negative_index(i);
    }
    Q::new(combinatorics::harmonic(i as u64))
}

/// Classical `H_i^<2>`.
pub(crate) fn h2(i: i64) -> Q {
    if i < 0 {
        return negative_index(i);
    }
    Q::new(combinatorics::harmonic2(i as u64))
}

/// `v / 2` for an index that the parity branch guarantees to be even.
pub(crate) fn half(v: i64) -> i64 {
    assert!(v % 2 == 0, "half-integer harmonic index {v}/2 reached");
    v / 2
}

/// `C(n, k)` for nonnegative integers.
pub(crate) fn ibinom(n: i64, k: i64) -> Q {
    if n < 0 || k < 0 {
        return Q(Err(Error::SingularParameter(format!("C({n}, {k}) with negative argument"))));
    }
    Q::new(combinatorics::int_binomial(n as u64, k as u64))
}

/// `a / b` for integers.
pub(crate) fn fr(a: i64, b: i64) -> Q {
    Q::int(a) / b
}

/// `(-1)^e`
pub(crate) fn sgn(e: i64) -> Q {
    Q::int(if e.rem_euclid(2) == 0 { 1 } else { -1 })
}
