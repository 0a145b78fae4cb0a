//! Two plausible-looking corollary right-hand sides, each one token away
//! from the correct form in [`super::corollary_rhs`]. The tests show that
//! each agrees with the oracle on one parity branch and fails on the other,
//! which is why both branches must be on every grid.
//!
//! * `COR_M`, even `n`: `H_{n/2}^2` in place of `H_{n/2}^<2>`.
//! * `COR_W`, odd `n - p`: inside `E(p, n)`, `+(2+p)(n+n^2)` in place of
//!   `+(2-p)(n+n^2)`.

use super::checked::{h, h2, half, ibinom, sgn, Q};
use super::corollaries::check_domain;
use super::singular;
use super::IdentityId;
use crate::error::Result;
use crate::rational::Rational;

pub fn near_miss_cor_m(n: u64) -> Result<Rational> {
    check_domain(IdentityId::CorM, n, None)?;
    let n = n as i64;
    let last = if n % 2 == 0 { h(half(n)).sq() } else { h2(half(n - 1)) };
    let v = sgn(n) * (4 * h(n).sq() - 2 * h2(n) + last);
    v.into_result().map_err(|e| singular(format!("near-miss COR_M at n={n}"), e))
}

pub fn near_miss_cor_w(n: u64, p: u64) -> Result<Rational> {
    let p = check_domain(IdentityId::CorW, n, Some(p))? as i64;
    let n = n as i64;
    let m = n + n * n;
    let core = p * (1 + p - p * p);
    let e = if (p - n) % 2 == 0 {
        h(half(n + p)) - h(half(n - p)) - Q::int(core - (2 + p) * m) / (m * (m - p))
    } else {
        h(half(n + p - 1)) - h(half(n - p - 1)) + Q::int(core + (2 + p) * m) / (m * (m - p))
    };
    let v = Q::int(m * (m - p)) / (p * (p - 1) * (p - 2)) * sgn(n - p + 1) / ibinom(n, p)
        * (h(n + p) + 3 * h(n - p) - 2 * h(p - 3) + e);
    v.into_result().map_err(|e| singular(format!("near-miss COR_W at n={n} p={p}"), e))
}
