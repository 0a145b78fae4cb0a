//! Right-hand sides of the 24 corollaries in `(n, p)`, all in classical
//! harmonic numbers, with their domain table.

use super::auxiliary::{a, b, c, d, e};
use super::checked::{fr, h, h2, half, ibinom, sgn, Q};
use super::id::{IdentityId, Kind, PRange};
use super::mutation::{Mutation, Tweak};
use crate::error::{Error, Result};

/// The `p` a corollary is evaluated at. `p` may be omitted where the
/// family fixes it (`p = 0`, `p = n`).
pub(crate) fn resolve_p(id: IdentityId, n: u64, p: Option<u64>) -> Result<u64> {
    let Kind::Corollary { range, .. } = id.kind() else {
        unreachable!("{id} is not a corollary")
    };
    let bad = |what: &str| {
        let got = p.map_or("no p".to_string(), |p| format!("p={p}"));
        Error::DomainError(format!("{id} needs {what}, got n={n} {got}"))
    };
    match (range, p) {
        (PRange::Zero, None | Some(0)) => Ok(0),
        (PRange::Zero, _) => Err(bad("p = 0")),
        (PRange::Equal, None) => Ok(n),
        (PRange::Equal, Some(p)) if p == n => Ok(n),
        (PRange::Equal, _) => Err(bad("p = n")),
        (_, None) => Err(bad("an explicit p")),
        (PRange::Between, Some(p)) if 0 < p && p <= n => Ok(p),
        (PRange::Between, _) => Err(bad("0 < p <= n")),
        (PRange::Above, Some(p)) if p > n => Ok(p),
        (PRange::Above, _) => Err(bad("p > n")),
    }
}

/// Domain table beyond the structural range of `p`: lower bounds that keep
/// the written denominators `p(p-1)`, `p(p-1)(p-2)`, `n-1`, `n-2` and the
/// harmonic indices `p-2`, `p-3` meaningful.
pub(crate) fn check_domain(id: IdentityId, n: u64, p: Option<u64>) -> Result<u64> {
    use IdentityId::*;
    let p = resolve_p(id, n, p)?;
    let need = |ok: bool, what: &str| {
        if ok {
            Ok(p)
        } else {
            Err(Error::DomainError(format!("{id} needs {what}, got n={n} p={p}")))
        }
    };
    match id {
        CorE | CorI | CorR | CorV => need(n >= 1, "n >= 1"),
        CorF | CorS => need(p >= 2, "p >= 2"),
        CorJ | CorW => need(p >= 3, "p >= 3"),
        CorC | CorO => need(n >= 1, "n >= 1"),
        CorG | CorT => need(n >= 2, "n >= 2"),
        CorK | CorX => need(n >= 3, "n >= 3"),
        CorL | CorY => need(p != 1 && p != 2, "p not in {1, 2}"),
        _ => Ok(p),
    }
}

fn even(v: i64) -> bool {
    v.rem_euclid(2) == 0
}

/// `H_{n+p} - H_{n-p} - H_{(n+p)/2} + H_{(n-p)/2}` with parity-adjusted halves.
fn k_bracket(p: i64, n: i64) -> Q {
    if even(n - p) {
        h(n + p) - h(n - p) - h(half(n + p)) + h(half(n - p))
    } else {
        h(n + p) - h(n - p) - h(half(n + p - 1)) + h(half(n - p - 1))
    }
}

/// `H_{(n+p)/2} - H_{(n-p)/2}` with parity-adjusted halves.
fn kp_bracket(p: i64, n: i64) -> Q {
    if even(n - p) {
        h(half(n + p)) - h(half(n - p))
    } else {
        h(half(n + p - 1)) - h(half(n - p - 1))
    }
}

/// Evaluates a corollary at an in-domain `(n, p)`.
pub(crate) fn corollary(id: IdentityId, n: u64, p: u64, tw: Tweak) -> Q {
    use IdentityId::*;
    let n = n as i64;
    let p = p as i64;
    let m = n + n * n;
    let par = even(n - p);
    let split = |ev: i64, od: i64| if par { ev } else { od };
    let half_n = if even(n) { half(n) } else { half(n - 1) };

    match id {
        CorA => {
            let lead = if even(n) { 2 } else { 2 * tw.sign(Mutation::CorAOddSign) };
            sgn(n) * (lead * h2(n) - h2(half_n))
        }
        CorB => sgn(n - p + 1) / (p * ibinom(n, p)) * k_bracket(p, n),
        CorC => 1 / (n * ibinom(2 * n, n)) * (h(n) - h(2 * n + tw.shift(Mutation::CorCIndex, 1))),
        CorD => ibinom(p - 1, n) / 2 * (h2(p + n) + h2(p - n) + a(p, n, tw)),

        CorE => {
            let inner = if even(n) {
                2 * h2(n) - h2(half_n)
            } else {
                2 * h2(n) - h2(half_n) - fr(2, m)
            };
            sgn(n) * m * inner
        }
        CorF => {
            fr(m, p * (p - 1)) * sgn(n - p) / ibinom(n, p) * (k_bracket(p, n) + fr(split(-p, p), m))
        }
        CorG => fr(n + 1, n - 1) / ibinom(2 * n, n) * (h(2 * n) - h(n + 1)),
        CorH => fr(m, 2 * (1 - p)) * ibinom(p - 1, n) * (h2(p + n) + h2(p - n - 1) + b(p, n)),

        CorI => {
            let inner = if even(n) {
                2 * h2(n) - h2(half_n) - fr(1, m)
            } else {
                2 * h2(n) - h2(half_n) + fr(2 - 3 * m, m * m)
            };
            sgn(n) * fr(m * m, 2) * inner
        }
        CorJ => {
            let c = fr(p * (1 - m + p - p * p), m * (m - p));
            let c = if par { c } else { -c };
            fr(m * (m - p), p * (p - 1) * (p - 2)) * sgn(n - p + 1) / ibinom(n, p)
                * (k_bracket(p, n) + c)
        }
        CorK => {
            let tail = tw.sign(Mutation::CorKSign) * fr(n - 1, n * n);
            fr(n * n * (n + 1), (n - 1) * (n - 2)) / ibinom(2 * n, n)
                * (h(n + 1) - h(2 * n) + tail)
        }
        CorL => {
            let cc = c(p, n);
            let poly = fr(2 * (1 - 2 * m + (2 + n) * p - p * p), (1 + n) * (m - p) * (n - p));
            fr(m * (m - p), 2 * (p - 1) * (p - 2)) * ibinom(p - 1, n)
                * (h2(p + n) + h2(p - n) + &cc * (&cc + d(p, n)) + poly)
        }

        CorM => sgn(n) * (4 * h(n).sq() - 2 * h2(n) + h2(half_n)),
        CorN => {
            let mid = h(n - p + tw.shift(Mutation::CorNIndex, 1));
            sgn(n - p + 1) / (p * ibinom(n, p))
                * (h(n + p) + 3 * mid - 2 * h(p - 1) + kp_bracket(p, n))
        }
        CorO => 1 / (n * ibinom(2 * n, n)) * (h(n) - h(2 * n) - fr(2, n)),
        CorP => {
            let hp = h(p);
            let s = h(p + n) + h(p - n);
            ibinom(p - 1, n) / 2
                * (h2(p + n) + h2(p - n) - 2 * h2(p) + 2 * hp.sq()
                    - fr(4 * n, p * (p - n)) * &hp
                    - fr(4 * n, p * p * (p - n))
                    + 2 * (&s - 2 * &hp) * (&s - fr(2 * n, p * (p - n)))
                    - a(p, n, tw))
        }

        CorR => {
            let hn = h(n);
            let inner = if even(n) {
                4 * hn.sq() - 4 * &hn - 2 * h2(n) + h2(half(n)) + 2
            } else {
                4 * hn.sq() - 4 * &hn - 2 * h2(n + 1)
                    + h2(half(n + 1))
                    + fr(2 * (n.pow(3) + 2 * n * n + n + 1), n * (n + 1) * (n + 1))
            };
            sgn(n) * m * inner
        }
        CorS => {
            fr(m, p * (p - 1)) * sgn(n - p) / ibinom(n, p)
                * (h(n + p) + 3 * h(n - p) - 2 * h(p - 2) + kp_bracket(p, n) + fr(split(p, -p), m))
        }
        CorT => {
            fr(n + 1, n - 1) / ibinom(2 * n, n)
                * (h(2 * n) - h(n) + fr(5 * n * n + n - 2, n.pow(3) - n))
        }
        CorU => {
            let lo = h(p - n - 1 + tw.shift(Mutation::CorUIndex, 1));
            let sq = (1 - 2 * p + p * (1 - p) * (h(p + n) + lo - h(p))).sq();
            fr(m, 2 * (1 - p)) * ibinom(p - 1, n)
                * (fr(2, p * p * (1 - p) * (1 - p)) * sq + h2(p + n) + h2(p - n - 1)
                    - 2 * h2(p - 2)
                    - b(p, n))
        }

        CorV => {
            let hn = h(n);
            let branch = if even(n) {
                h2(half(n)) + fr(7 * m - 4, 2 * m)
            } else {
                h2(half(n - 1) + tw.shift(Mutation::CorVOddIndex, 1)) + fr(7 * m * m - 4, 2 * m * m)
            };
            sgn(n) * fr(m * m, 2)
                * (4 * hn.sq() - fr(6 * m - 4, m) * &hn - 2 * h2(n) + branch)
        }
        CorW => {
            fr(m * (m - p), p * (p - 1) * (p - 2)) * sgn(n - p + 1) / ibinom(n, p)
                * (h(n + p) + 3 * h(n - p) - 2 * h(p - 3) + e(p, n))
        }
        CorX => {
            fr(n * n * (n + 1), (n - 1) * (n - 2)) / ibinom(2 * n, n)
                * (h(n) - h(2 * n) - tw.sign(Mutation::CorXSign) * fr(3 * n + 1, n * n)
                    - fr(5 * n * n - 5 * n - 4, n.pow(3) - 2 * n * n - n + 2))
        }
        CorY => {
            let cc = c(p, n);
            let q = h(p + n) + h(p - n - 1) - h(p - 3);
            let poly = fr(2 * (1 - 2 * m + (2 + n) * p - p * p), (1 + n) * (m - p) * (n - p));
            fr(m * (m - p), 2 * (p - 1) * (p - 2)) * ibinom(p - 1, n)
                * (h2(p + n) + h2(p - n) - 2 * h2(p - 3) + 2 * (&q + fr(2, m - p)) * &q
                    - &cc * (&cc + d(p, n))
                    - poly
                    - fr(2, (p - n) * (p - n)))
        }
        other => unreachable!("{other} is not a corollary"),
    }
}
