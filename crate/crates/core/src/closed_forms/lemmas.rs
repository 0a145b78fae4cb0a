//! Right-hand sides of the three binomial-ratio lemmas in `(n, x, y)`.

use super::checked::{binom, Q};
use super::mutation::{Mutation, Tweak};
use crate::rational::Rational;

pub(crate) fn lemma(t: u8, n: u64, x: &Rational, y: &Rational, tw: Tweak) -> Q {
    let ni = n as i64;
    let x = Q::from(x);
    let y = Q::from(y);
    let c = |v: Q| binom(&(v + ni), n);

    // The two binomial ratios; they differ only in the half-shift of y.
    let common = c(&y - 2 * &x) / c(y.clone());
    let pr = c((&y - ni - 1) / 2) / c((&y - ni - 1) / 2 - &x) * &common;
    let qr = c((&y - ni) / 2) / c((&y - ni) / 2 - &x) * &common;

    let u = 2 * &x - &y;
    let tail = &u + ni;
    let yn = &y - ni;
    let nn = ni * ni + ni;
    match t {
        0 => {
            let first = &u / (2 * &x) * pr;
            let second = &u * &yn / (2 * &x * &tail) * qr;
            first + tw.sign(Mutation::LemmaT0SecondTermSign) * second
        }
        1 => {
            let den = 2 * &x * (1 - &x);
            let first = &u * (nn + &x * &y - y.sq()) / &den * pr;
            let second = &u * &yn * (nn - 2 * x.sq() + 3 * &x * &y - y.sq()) / (&den * &tail) * qr;
            first + second
        }
        _ => {
            let xy = &x * &y;
            let den = 2 * &x * (&x - 1) * (&x - 2);
            let quad = 1 + &x - 2 * &xy + y.sq();
            let cubic = tw.sign(Mutation::LemmaT2CubicSign) * 2 * ni.pow(3);
            let a = (&y * (&y - &x) * &quad - ni * (&x - 3 * &xy + x.sq() + 2 * y.sq())
                + ni * ni * (1 - &x + 3 * &xy - x.sq() - 2 * y.sq())
                + cubic
                + ni.pow(4))
                / &den;
            let b = ((&x - &y) * &u * &quad - ni * (&x - 5 * &xy + 3 * x.sq() + 2 * y.sq())
                + ni * ni * (1 - &x + 5 * &xy - 3 * x.sq() - 2 * y.sq())
                + 2 * ni.pow(3)
                + ni.pow(4))
                / (&den * &tail);
            a * &u * pr + qr * &u * yn * b
        }
    }
}
