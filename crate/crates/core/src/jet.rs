//! Truncated Taylor jets over exact rationals.
//!
//! A [`Jet`] of order `K` stores `c_0..=c_K` with
//! `f(y0 + e) = c_0 + c_1 e + ... + c_K e^K + O(e^{K+1})`. Arithmetic is
//! formal power-series arithmetic truncated past `e^K`, so pushing a seed
//! [`Jet::var`] through an expression yields exact derivatives:
//! `f^(i)(y0) = i! * c_i`.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::rational::Rational;

pub const MAX_ORDER: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Jet {
    coeffs: Vec<Rational>,
    basepoint: Rational,
}

fn check_order(order: usize) -> Result<()> {
    if (1..=MAX_ORDER).contains(&order) {
        Ok(())
    } else {
        Err(Error::InvalidOrder(order))
    }
}

/// Seed jet for the independent variable at `y0`: `[y0, 1, 0, ...]`.
pub fn jet_var(y0: &Rational, order: usize) -> Result<Jet> {
    Jet::var(y0, order)
}

/// The exact `i`-th derivative carried by `jet`.
pub fn jet_derivative(jet: &Jet, i: usize) -> Result<Rational> {
    jet.derivative(i)
}

impl Jet {
    pub fn var(y0: &Rational, order: usize) -> Result<Self> {
        check_order(order)?;
        let mut coeffs = vec![Rational::zero(); order + 1];
        coeffs[0] = y0.clone();
        coeffs[1] = Rational::one();
        Ok(Jet { coeffs, basepoint: y0.clone() })
    }

    pub fn constant(value: Rational, y0: &Rational, order: usize) -> Result<Self> {
        check_order(order)?;
        let mut coeffs = vec![Rational::zero(); order + 1];
        coeffs[0] = value;
        Ok(Jet { coeffs, basepoint: y0.clone() })
    }

    /// Builds a jet from raw Taylor coefficients `[c0, .., cK]`.
    pub fn from_coeffs(coeffs: Vec<Rational>, y0: &Rational) -> Result<Self> {
        check_order(coeffs.len().saturating_sub(1))?;
        Ok(Jet { coeffs, basepoint: y0.clone() })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn basepoint(&self) -> &Rational {
        &self.basepoint
    }

    pub fn value(&self) -> &Rational {
        &self.coeffs[0]
    }

    pub fn derivative(&self, i: usize) -> Result<Rational> {
        if i > self.order() {
            return Err(Error::OrderExceeded { requested: i, order: self.order() });
        }
        let fact: Rational = (1..=i as i64).map(Rational::from).product();
        Ok(&self.coeffs[i] * &fact)
    }

    /// Drops coefficients past `e^order`.
    pub fn truncate(&self, order: usize) -> Result<Jet> {
        check_order(order)?;
        if order > self.order() {
            return Err(Error::OrderExceeded { requested: order, order: self.order() });
        }
        Ok(Jet { coeffs: self.coeffs[..=order].to_vec(), basepoint: self.basepoint.clone() })
    }

    pub fn scale(&self, k: &Rational) -> Jet {
        self.map(|c| c * k)
    }

    pub fn add_scalar(&self, k: &Rational) -> Jet {
        let mut out = self.clone();
        out.coeffs[0] += k;
        out
    }

    pub fn recip(&self) -> Result<Jet> {
        let a0 = &self.coeffs[0];
        let inv0 = a0.recip()?;
        let mut out: Vec<Rational> = Vec::with_capacity(self.coeffs.len());
        out.push(inv0.clone());
        for k in 1..self.coeffs.len() {
            let s: Rational = (1..=k).map(|i| &self.coeffs[i] * &out[k - i]).sum();
            out.push(-(s * &inv0));
        }
        Ok(Jet { coeffs: out, basepoint: self.basepoint.clone() })
    }

    /// Division; the divisor's constant term must be nonzero.
    pub fn checked_div(&self, rhs: &Jet) -> Result<Jet> {
        Ok(self * &rhs.recip()?)
    }

    pub fn powi(&self, exp: i32) -> Result<Jet> {
        if exp < 0 {
            return self.recip()?.powi(-exp);
        }
        let mut acc = Jet::constant(Rational::one(), &self.basepoint, self.order())?;
        for _ in 0..exp {
            acc = &acc * self;
        }
        Ok(acc)
    }

    fn map(&self, f: impl Fn(&Rational) -> Rational) -> Jet {
        Jet { coeffs: self.coeffs.iter().map(f).collect(), basepoint: self.basepoint.clone() }
    }

    fn zip(&self, rhs: &Jet, f: impl Fn(&Rational, &Rational) -> Rational) -> Jet {
        debug_assert_eq!(self.basepoint, rhs.basepoint, "jets at different basepoints");
        let k = self.order().min(rhs.order());
        Jet {
            coeffs: (0..=k).map(|i| f(&self.coeffs[i], &rhs.coeffs[i])).collect(),
            basepoint: self.basepoint.clone(),
        }
    }
}

impl Add<&Jet> for &Jet {
    type Output = Jet;
    fn add(self, rhs: &Jet) -> Jet {
        self.zip(rhs, |a, b| a + b)
    }
}

impl Sub<&Jet> for &Jet {
    type Output = Jet;
    fn sub(self, rhs: &Jet) -> Jet {
        self.zip(rhs, |a, b| a - b)
    }
}

impl Mul<&Jet> for &Jet {
    type Output = Jet;
    fn mul(self, rhs: &Jet) -> Jet {
        debug_assert_eq!(self.basepoint, rhs.basepoint, "jets at different basepoints");
        let k = self.order().min(rhs.order());
        let coeffs = (0..=k)
            .map(|n| (0..=n).map(|i| &self.coeffs[i] * &rhs.coeffs[n - i]).sum())
            .collect();
        Jet { coeffs, basepoint: self.basepoint.clone() }
    }
}

impl Neg for &Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        self.map(|c| -c)
    }
}

macro_rules! owned_ops {
    ($Tr:ident, $m:ident) => {
        impl $Tr<Jet> for Jet {
            type Output = Jet;
            fn $m(self, rhs: Jet) -> Jet {
                (&self).$m(&rhs)
            }
        }
        impl $Tr<&Jet> for Jet {
            type Output = Jet;
            fn $m(self, rhs: &Jet) -> Jet {
                (&self).$m(rhs)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl Neg for Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        -&self
    }
}
