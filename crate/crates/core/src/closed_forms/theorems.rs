//! Right-hand sides of the six `(weight, t)` theorems and of the `y = x`
//! degenerate lemma forms.

use super::auxiliary::{u, v, w};
use super::checked::{binom, hx, hx2, sgn, Q};
use super::mutation::{Mutation, Tweak};
use crate::oracle::{Family, Weight};
use crate::rational::Rational;

/// `(-1)^n C(-x+n, n) / C(x+n, n)`, the ratio every theorem scales by.
fn ratio(n: i64, x: &Q) -> Q {
    sgn(n) * binom(&(n - x), n as u64) / binom(&(x + n), n as u64)
}

pub(crate) fn theorem(fam: Family, n: u64, x: &Rational, tw: Tweak) -> Q {
    let ni = n as i64;
    if fam.t >= 1 && n == 0 {
        return Q::int(0);
    }
    let x = Q::from(x);
    let neg = -&x;
    let r = ratio(ni, &x);
    let a = hx2(ni, &x) - hx2(ni, &neg);
    let d = hx(ni, &x) - hx(ni, &neg);
    let s = hx(ni, &x) + hx(ni, &neg);
    let hh = hx(ni, &((&x - ni) / 2));
    let m = ni + ni * ni;

    match (fam.weight, fam.t) {
        (Weight::H2, 0) => {
            let boundary = tw.sign(Mutation::ThmH2T0BoundarySign) * 4 * ni
                / (&x * (&x - ni).sq());
            let dh = &d - &hh;
            let cross = &dh * (&dh - 2 * (&x + ni) / (&x * (&x - ni)));
            r / 2 * (a + boundary + cross)
        }
        (Weight::Hsq, 0) => {
            let square = tw.sign(Mutation::ThmHsqT0SquareSign) * 2 * s.sq();
            let dh = &d - &hh;
            let cross = &dh * (&dh - 2 * (&x + ni) / (&x * (&x - ni)));
            r / 2 * (a + square - cross - 4 * ni / (&x * (&x - ni).sq()))
        }
        (weight, 1) => {
            let shift = match weight {
                Weight::H2 => tw.shift(Mutation::ThmH2T1ShiftedIndex, -1),
                Weight::Hsq => 0,
            };
            let g = hx(ni + 1 + shift, &((&x - ni - 2) / 2));
            let pre = &r * m / (2 * (1 - &x));
            let dterm = &d
                * (&d - 2 * &g - 2 * (x.sq() - ni - ni * ni) / (&x * ni * (ni + 1)));
            let hterm = &hh
                * (&g
                    + 2 * (x.pow(3) - ni * x.sq() + ni * ni + ni.pow(3))
                        / (&x * (&x - ni) * ni * (ni + 1)));
            let tail =
                4 * (x.sq() - ni * &x + ni + ni * ni) / (&x * (&x - ni).sq() * (ni + 1));
            match weight {
                Weight::H2 => pre * (a + dterm + hterm + tail),
                Weight::Hsq => {
                    let sq = 2 * &s * (&s - 2 / (1 - &x));
                    pre * (a + sq - dterm - hterm + 4 / (1 - &x).sq() - tail)
                }
            }
        }
        (weight, _) => {
            let g = hx(ni + 1, &((&x - ni - 2) / 2));
            let pre = &r * m * (m - &x) / (2 * (1 - &x) * (2 - &x));
            let dterm = (&d - 2 * &g + u(ni, &x)) * &d;
            let hterm = &hh * (&hh - v(ni, &x));
            let wn = w(ni, &x);
            match weight {
                Weight::H2 => pre * (a + dterm + hterm + wn),
                Weight::Hsq => {
                    let q = hx(ni, &x) + hx(ni - 2, &(2 - &x));
                    let qterm = 2 * (&q + 2 / (m - &x)) * &q;
                    let rational = 2 * (2 * x.sq() - 6 * &x + 5)
                        / ((1 - &x).sq() * (2 - &x).sq());
                    pre * (a + qterm - dterm - hterm + rational
                        - tw.sign(Mutation::ThmHsqT2WSign) * wn)
                }
            }
        }
    }
}

pub(crate) fn degenerate(t: u8, n: u64, x: &Rational, tw: Tweak) -> Q {
    let ni = n as i64;
    let x = Q::from(x);
    let r = ratio(ni, &x);
    match t {
        0 => r,
        1 => {
            let lo = if tw.is(Mutation::DegenT1Factor) { ni - 1 } else { ni + 1 };
            r * (ni * lo) / (1 - &x)
        }
        _ => {
            let m = ni + ni * ni;
            r * m * (m - &x) / ((1 - &x) * (2 - &x))
        }
    }
}
