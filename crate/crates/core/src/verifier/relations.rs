//! Exact checks of the terminating `3F2` relations the lemmas rest on: two
//! contiguous relations in Whipple's parameter pattern and Kummer's
//! transformation at `a = -n`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::calculus::CheckReport;
use crate::combinatorics::shifted_factorial;
use crate::error::{Error, Result};
use crate::oracle::{f32_terminating, terminating_3f2};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    /// `F[-n,1+n,1+b; 1+c,1+2b-c] = c/(2b) F[-n,1+n,b; c,1+2b-c]
    ///  + (2b-c)/(2b) F[-n,1+n,b; 1+c,2b-c]`
    ContiguousB,
    /// `F[-n,n,b; c,1+2b-c] = (F[-n,1+n,b; c,1+2b-c] + F[1-n,n,b; c,1+2b-c]) / 2`
    ContiguousN,
    /// `F[-n,b,c; d,e] = (s)_n/(e)_n F[-n,d-b,d-c; d,s]`, `s = d+e-b-c`
    Kummer,
}

impl Relation {
    pub const ALL: [Relation; 3] = [Relation::ContiguousB, Relation::ContiguousN, Relation::Kummer];

    pub fn name(self) -> &'static str {
        match self {
            Relation::ContiguousB => "contiguous-b",
            Relation::ContiguousN => "contiguous-n",
            Relation::Kummer => "kummer",
        }
    }

    /// Both sides at one parameter point; `params` is `[b, c]` for the
    /// contiguous relations and `[b, c, d, e]` for Kummer.
    pub fn sides(self, n: u64, params: &[Rational]) -> Result<(Rational, Rational)> {
        let one = Rational::one();
        let minus_n = Rational::from(-(n as i64));
        let n_q = Rational::from(n);
        match self {
            Relation::ContiguousB => {
                let (b, c) = (&params[0], &params[1]);
                if b.is_zero() {
                    return Err(Error::SingularParameter("b = 0".into()));
                }
                let up = &one + &n_q;
                let e = &(&one + &(b * 2)) - c;
                let lhs = terminating_3f2(n, [&minus_n, &up, &(&one + b)], [&(&one + c), &e])?;
                let f1 = terminating_3f2(n, [&minus_n, &up, b], [c, &e])?;
                let f2 = terminating_3f2(n, [&minus_n, &up, b], [&(&one + c), &(&e - &one)])?;
                let two_b = b * 2;
                let rhs = c.checked_div(&two_b)? * f1 + (&two_b - c).checked_div(&two_b)? * f2;
                Ok((lhs, rhs))
            }
            Relation::ContiguousN => {
                let (b, c) = (&params[0], &params[1]);
                let e = &(&one + &(b * 2)) - c;
                let lhs = terminating_3f2(n, [&minus_n, &n_q, b], [c, &e])?;
                let f1 = terminating_3f2(n, [&minus_n, &(&n_q + 1), b], [c, &e])?;
                let f2 = terminating_3f2(n, [&(&one - &n_q), &n_q, b], [c, &e])?;
                Ok((lhs, (f1 + f2) * Rational::frac(1, 2)))
            }
            Relation::Kummer => {
                let (b, c, d, e) = (&params[0], &params[1], &params[2], &params[3]);
                let s = &(&(d + e) - b) - c;
                let lhs = f32_terminating(n, b, c, d, e)?;
                let pre = shifted_factorial(&s, n).checked_div(&shifted_factorial(e, n))?;
                let rhs = pre * f32_terminating(n, &(d - b), &(d - c), d, &s)?;
                Ok((lhs, rhs))
            }
        }
    }

    fn arity(self) -> usize {
        match self {
            Relation::Kummer => 4,
            _ => 2,
        }
    }
}

fn draw(rng: &mut ChaCha8Rng) -> Rational {
    Rational::frac(rng.gen_range(-15..=15), rng.gen_range(1..=8))
}

/// `trials` random draws per relation, cycling `n` through `0..=n_max`.
/// Draws where some lower parameter meets a zero (or `b = 0`) are redrawn;
/// the number of redraws is reported as `skipped`.
pub fn verify_proof_relations(n_max: u64, trials: usize, seed: u64) -> Vec<CheckReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Relation::ALL
        .iter()
        .map(|&rel| {
            let mut report = CheckReport::new(rel.name());
            for t in 0..trials {
                let n = t as u64 % (n_max + 1);
                loop {
                    let params: Vec<Rational> = (0..rel.arity()).map(|_| draw(&mut rng)).collect();
                    match rel.sides(n, &params) {
                        Ok((lhs, rhs)) => {
                            let label = params.iter().map(|p| p.to_string()).collect::<Vec<_>>();
                            report.push(format!("n={n} params=[{}]", label.join(", ")), lhs, rhs);
                            break;
                        }
                        Err(_) => report.skipped += 1,
                    }
                }
            }
            report
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::frac(n, d)
    }

    #[test]
    fn examples() {
        for rel in Relation::ALL {
            let params = [q(1, 2), q(1, 3), q(4, 3), q(7, 2)];
            let (l, r) = rel.sides(0, &params[..rel.arity()]).unwrap();
            assert_eq!((l, r), (q(1, 1), q(1, 1)), "{}", rel.name());
        }
        let (l, r) = Relation::ContiguousB.sides(3, &[q(1, 2), q(1, 3)]).unwrap();
        assert_eq!(l, r);
        let (l, r) = Relation::ContiguousN.sides(3, &[q(1, 2), q(1, 3)]).unwrap();
        assert_eq!(l, r);
        let (l, r) = Relation::Kummer.sides(2, &[q(1, 2), q(1, 5), q(4, 3), q(7, 2)]).unwrap();
        assert_eq!(l, r);
    }

    #[test]
    fn a_wrong_relation_is_detected() {
        // dropping the (s)_n/(e)_n prefactor breaks Kummer for n >= 1
        let (b, c, d, e) = (q(1, 2), q(1, 5), q(4, 3), q(7, 2));
        let s = &(&(&d + &e) - &b) - &c;
        let lhs = f32_terminating(2, &b, &c, &d, &e).unwrap();
        let bare = f32_terminating(2, &(&d - &b), &(&d - &c), &d, &s).unwrap();
        assert_ne!(lhs, bare);
    }

    #[test]
    fn random_trials_pass() {
        for report in verify_proof_relations(6, 21, 11) {
            assert_eq!(report.cases.len(), 21);
            assert!(report.passed(), "{}", report.check);
        }
    }

    #[test]
    fn singular_draw_is_rejected() {
        // c = -1 makes (c)_2 vanish
        assert!(Relation::ContiguousN.sides(3, &[q(1, 2), q(-1, 1)]).is_err());
        assert!(Relation::ContiguousB.sides(3, &[q(0, 1), q(1, 3)]).is_err());
    }
}
