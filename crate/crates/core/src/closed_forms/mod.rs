//! Closed-form right-hand sides for every identity, with the explicit
//! singular-set predicate that decides which points are evaluated at all.
//!
//! A point is *excluded* when any sub-expression of the written form is
//! undefined there, even if the full product would survive by cancellation.
//! [`IdentityId::check_point`] states those sets explicitly; the test suite
//! checks them against actual evaluation in both directions.

mod auxiliary;
mod checked;
mod corollaries;
pub mod near_misses;
mod id;
mod lemmas;
mod mutation;
mod theorems;

pub use auxiliary::{aux_eval, Aux};
pub use id::{IdentityId, Kind, PRange, Params};
pub use mutation::Mutation;

use mutation::Tweak;

use crate::error::{Error, Result};
use crate::oracle::{self, Family};
use crate::rational::Rational;

/// Folds an arithmetic failure inside a closed form into `SingularParameter`.
pub(crate) fn singular(ctx: String, e: Error) -> Error {
    match e {
        Error::DomainError(_) => e,
        Error::SingularParameter(msg) => Error::SingularParameter(format!("{ctx}: {msg}")),
        other => Error::SingularParameter(format!("{ctx}: {other}")),
    }
}

fn int_in(v: &Rational, lo: i64, hi: i64) -> Option<i64> {
    v.to_i64().filter(|i| (lo..=hi).contains(i))
}

impl IdentityId {
    pub fn theorem(fam: Family) -> IdentityId {
        *IdentityId::ALL
            .iter()
            .find(|id| id.kind() == Kind::Theorem(fam))
            .expect("every family has a theorem")
    }

    pub fn lemma(t: u8) -> Result<IdentityId> {
        [IdentityId::LemmaT0, IdentityId::LemmaT1, IdentityId::LemmaT2]
            .get(t as usize)
            .copied()
            .ok_or_else(|| Error::DomainError(format!("power t={t} not in 0..=2")))
    }

    pub fn degenerate(t: u8) -> Result<IdentityId> {
        [IdentityId::DegenT0, IdentityId::DegenT1, IdentityId::DegenT2]
            .get(t as usize)
            .copied()
            .ok_or_else(|| Error::DomainError(format!("power t={t} not in 0..=2")))
    }

    /// Rejects parameters the identity does not take and fills in missing
    /// ones it cannot do without.
    fn validate(self, params: &Params) -> Result<()> {
        let unused = |what: &str| Err(Error::DomainError(format!("{self} does not take {what}")));
        if self.is_corollary() {
            if params.x.is_some() {
                return unused("x");
            }
            if params.y.is_some() {
                return unused("y");
            }
            return Ok(());
        }
        if params.p.is_some() {
            return unused("p");
        }
        if params.y.is_some() && !self.uses_y() {
            return unused("y");
        }
        params.need_x()?;
        if self.uses_y() {
            params.need_y()?;
        }
        Ok(())
    }

    /// Brute-force left-hand side from the series oracle.
    pub fn lhs(self, params: &Params) -> Result<Rational> {
        self.validate(params)?;
        let n = params.n;
        match self.kind() {
            Kind::Theorem(fam) => oracle::theorem_lhs(fam, n, params.need_x()?),
            Kind::Lemma { t } => oracle::lemma_lhs(t, n, params.need_x()?, params.need_y()?),
            Kind::Degenerate { t } => {
                let x = params.need_x()?;
                oracle::lemma_lhs(t, n, x, x)
            }
            Kind::Corollary { .. } => corollary_lhs_for(self, params),
        }
    }

    /// Closed-form right-hand side at a point that passes [`check_point`].
    ///
    /// [`check_point`]: IdentityId::check_point
    pub fn rhs(self, params: &Params) -> Result<Rational> {
        self.check_point(params)?;
        self.eval_rhs(params, Tweak::NONE)
    }

    /// Like [`rhs`](IdentityId::rhs) but with one deliberate fault injected.
    /// Mutations aimed at other identities have no effect.
    pub fn rhs_mutated(self, params: &Params, mutation: Mutation) -> Result<Rational> {
        self.check_point(params)?;
        self.eval_rhs(params, Tweak(Some(mutation)))
    }

    /// Evaluates the written form without consulting the singular-set
    /// predicate. Only the corollary domain table still applies. Used to
    /// show that every excluded point really is singular.
    pub fn force_rhs(self, params: &Params) -> Result<Rational> {
        self.validate(params)?;
        self.eval_rhs(params, Tweak::NONE)
    }

    fn eval_rhs(self, params: &Params, tw: Tweak) -> Result<Rational> {
        self.validate(params)?;
        let n = params.n;
        let value = match self.kind() {
            Kind::Theorem(fam) => theorems::theorem(fam, n, params.need_x()?, tw),
            Kind::Lemma { t } => lemmas::lemma(t, n, params.need_x()?, params.need_y()?, tw),
            Kind::Degenerate { t } => theorems::degenerate(t, n, params.need_x()?, tw),
            Kind::Corollary { .. } => {
                let p = corollaries::check_domain(self, n, params.p)?;
                corollaries::corollary(self, n, p, tw)
            }
        };
        value.into_result().map_err(|e| singular(format!("{self} at {params}"), e))
    }

    /// The explicit exclusion rule: `Ok(())` iff the point is inside the
    /// identity's domain and no written sub-expression is singular there.
    pub fn check_point(self, params: &Params) -> Result<()> {
        self.validate(params)?;
        let n = params.n as i64;
        let bad = |why: String| Err(Error::SingularParameter(format!("{self} at {params}: {why}")));
        match self.kind() {
            Kind::Theorem(fam) => {
                if fam.t >= 1 && n == 0 {
                    return Ok(());
                }
                let Some(x) = params.need_x()?.to_i64() else { return Ok(()) };
                if (-n..=-1).contains(&x) {
                    return bad("x in {-1..-n}".into());
                }
                if (1..=n).contains(&x) {
                    return bad("H_n(-x) has a pole".into());
                }
                if x == 0 || x == n {
                    return bad("x (x - n) is zero".into());
                }
                if x < n && x >= -n && (n - x) % 2 == 0 {
                    return bad("H_n((x-n)/2) has a pole".into());
                }
                if fam.t >= 1 {
                    if x == 1 {
                        return bad("1 - x is zero".into());
                    }
                    if x <= n && x >= -n && (n - x) % 2 == 0 {
                        return bad("H_{n+1}((x-n-2)/2) has a pole".into());
                    }
                }
                if fam.t == 2 && (x == 2 || x == n * n + n) {
                    return bad("(2 - x) (n^2 + n - x) is zero".into());
                }
                Ok(())
            }
            Kind::Lemma { t } => {
                let x = params.need_x()?;
                let y = params.need_y()?;
                if x.is_zero() {
                    return bad("x = 0".into());
                }
                if int_in(y, -n, -1).is_some() {
                    return bad("y in {-1..-n}".into());
                }
                if int_in(&(y - &(x * 2)), -n, n).is_some() {
                    return bad("y - 2x is an integer in [-n, n]".into());
                }
                if t >= 1 && x.is_one() {
                    return bad("x = 1".into());
                }
                if t == 2 && *x == 2 {
                    return bad("x = 2".into());
                }
                Ok(())
            }
            Kind::Degenerate { t } => {
                let x = params.need_x()?;
                if int_in(x, -n, -1).is_some() {
                    return bad("x in {-1..-n}".into());
                }
                if t >= 1 && x.is_one() {
                    return bad("x = 1".into());
                }
                if t == 2 && *x == 2 {
                    return bad("x = 2".into());
                }
                Ok(())
            }
            Kind::Corollary { .. } => {
                use IdentityId::*;
                let p = corollaries::check_domain(self, params.n, params.p)? as i64;
                match self {
                    CorH | CorU if n == 0 => bad("n + n^2 = 0".into()),
                    CorL | CorY if n == 0 => bad("n + n^2 = 0".into()),
                    CorL | CorY if p == n * n + n => bad("p = n^2 + n".into()),
                    _ => Ok(()),
                }
            }
        }
    }

    /// Which parity branch of the written form a point selects: `n mod 2`
    /// for `p = 0` corollaries, `(n - p) mod 2` for `p != n` corollaries,
    /// `None` where the form has no parity split.
    pub fn parity_branch(self, params: &Params) -> Option<u8> {
        let Kind::Corollary { range, .. } = self.kind() else { return None };
        let p = corollaries::resolve_p(self, params.n, params.p).ok()?;
        match range {
            PRange::Zero => Some((params.n % 2) as u8),
            PRange::Equal => None,
            PRange::Between | PRange::Above => Some((params.n.abs_diff(p) % 2) as u8),
        }
    }
}

/// Brute-force left-hand side of a corollary; the `p = n` family uses the
/// reduced sum.
pub fn corollary_lhs_for(id: IdentityId, params: &Params) -> Result<Rational> {
    let Kind::Corollary { family, range } = id.kind() else {
        return Err(Error::DomainError(format!("{id} is not a corollary")));
    };
    let p = corollaries::resolve_p(id, params.n, params.p)?;
    Ok(match range {
        PRange::Equal => oracle::corollary_lhs_reduced(family, params.n),
        _ => oracle::corollary_lhs(family, p, params.n),
    })
}

pub fn theorem_rhs(fam: Family, n: u64, x: &Rational) -> Result<Rational> {
    IdentityId::theorem(fam).rhs(&Params::nx(n, x.clone()))
}

pub fn lemma_rhs(t: u8, n: u64, x: &Rational, y: &Rational) -> Result<Rational> {
    IdentityId::lemma(t)?.rhs(&Params::nxy(n, x.clone(), y.clone()))
}

pub fn degenerate_rhs(t: u8, n: u64, x: &Rational) -> Result<Rational> {
    IdentityId::degenerate(t)?.rhs(&Params::nx(n, x.clone()))
}

/// Corollary right-hand side; `p` may be omitted for the `p = 0` and
/// `p = n` families.
pub fn corollary_rhs(id: IdentityId, n: u64, p: Option<u64>) -> Result<Rational> {
    if !id.is_corollary() {
        return Err(Error::DomainError(format!("{id} is not a corollary")));
    }
    id.rhs(&Params { n, p, x: None, y: None })
}

#[cfg(test)]
mod tests;
