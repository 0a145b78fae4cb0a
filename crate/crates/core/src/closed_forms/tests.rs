use super::*;
use crate::oracle::Weight;

fn q(n: i64, d: i64) -> Rational {
    Rational::frac(n, d)
}

fn small_x_grid() -> Vec<Rational> {
    [(1, 2), (-1, 2), (1, 3), (-2, 3), (3, 2), (-5, 2), (7, 3), (9, 4), (-7, 4), (17, 2)]
        .iter()
        .map(|&(a, b)| q(a, b))
        .collect()
}

/// Integers and half-integers: every integer singular point of any
/// identity with `n <= 6` lies in here.
fn dense_grid() -> Vec<Rational> {
    let mut v: Vec<Rational> = (-9..=45).map(Rational::from).collect();
    v.extend((-9..=9).map(|k| q(2 * k + 1, 2)));
    v.push(q(1, 3));
    v
}

fn points(id: IdentityId, n_max: u64, p_max: u64, xs: &[Rational]) -> Vec<Params> {
    let mut out = Vec::new();
    for n in 0..=n_max {
        match id.kind() {
            Kind::Theorem(_) | Kind::Degenerate { .. } => {
                out.extend(xs.iter().map(|x| Params::nx(n, x.clone())));
            }
            Kind::Lemma { .. } => {
                for x in xs {
                    for y in xs.iter().step_by(3) {
                        out.push(Params::nxy(n, x.clone(), y.clone()));
                    }
                }
            }
            Kind::Corollary { .. } => {
                out.extend((0..=p_max).map(|p| Params::np(n, p)));
            }
        }
    }
    out
}

#[test]
fn spot_values() {
    let half = q(1, 2);
    let h2 = Family { weight: Weight::H2, t: 0 };
    let hsq = Family { weight: Weight::Hsq, t: 0 };
    assert_eq!(theorem_rhs(h2, 1, &half).unwrap(), q(-16, 27));
    assert_eq!(theorem_rhs(hsq, 1, &half).unwrap(), q(-16, 27));
    assert_eq!(theorem_rhs(h2, 0, &q(5, 7)).unwrap(), q(0, 1));

    use IdentityId::*;
    let cases = [
        (CorA, 2, None, q(3, 2)),
        (CorC, 1, None, q(-1, 4)),
        (CorG, 2, None, q(1, 8)),
        (CorK, 3, None, q(-13, 100)),
        (CorN, 2, Some(1), q(35, 12)),
        (CorT, 2, None, q(47, 24)),
        (CorL, 1, Some(3), q(-205, 72)),
        (CorP, 1, Some(2), q(1, 36)),
        (CorU, 1, Some(2), q(-121, 18)),
    ];
    for (id, n, p, want) in cases {
        assert_eq!(corollary_rhs(id, n, p).unwrap(), want, "{id}");
    }
}

#[test]
fn lemma_and_degenerate_examples() {
    assert_eq!(lemma_rhs(0, 0, &q(3, 5), &q(2, 7)).unwrap(), q(1, 1));
    let lhs = oracle::lemma_lhs(0, 1, &q(1, 1), &q(1, 3)).unwrap();
    assert_eq!(lemma_rhs(0, 1, &q(1, 1), &q(1, 3)).unwrap(), lhs);
    let lhs = oracle::lemma_lhs(2, 1, &q(3, 1), &q(1, 2)).unwrap();
    assert_eq!(lemma_rhs(2, 1, &q(3, 1), &q(1, 2)).unwrap(), lhs);
    assert_eq!(degenerate_rhs(0, 1, &q(1, 2)).unwrap(), q(-1, 3));
    assert_eq!(degenerate_rhs(1, 1, &q(1, 2)).unwrap(), q(-4, 3));
}

#[test]
fn every_identity_matches_its_oracle_on_a_small_grid() {
    let xs = small_x_grid();
    for id in IdentityId::ALL {
        let mut checked = 0;
        for params in points(id, 7, 12, &xs) {
            if id.check_point(&params).is_err() {
                continue;
            }
            let lhs = id.lhs(&params).unwrap();
            let rhs = id.rhs(&params).unwrap();
            assert_eq!(lhs, rhs, "{id} at {params}");
            checked += 1;
        }
        assert!(checked > 0, "{id} checked nothing");
    }
}

/// The explicit predicate agrees with what evaluation actually does:
/// accepted points evaluate on both sides, and every rejected point makes
/// the written form (or the domain table) fail when forced.
#[test]
fn exclusion_is_sound_and_complete() {
    let xs = dense_grid();
    for id in IdentityId::ALL {
        let n_max = if id.uses_y() { 4 } else { 6 };
        for params in points(id, n_max, 45, &xs) {
            match id.check_point(&params) {
                Ok(()) => {
                    assert!(id.lhs(&params).is_ok(), "{id} lhs at {params}");
                    assert!(id.force_rhs(&params).is_ok(), "{id} rhs at {params}");
                }
                Err(e) => {
                    assert!(e.is_skip(), "{id} at {params}: {e}");
                    let forced = id.force_rhs(&params);
                    assert!(forced.is_err(), "{id} excluded at {params} but evaluates: {e}");
                    let forced = forced.unwrap_err();
                    assert!(
                        matches!(forced, Error::SingularParameter(_) | Error::DomainError(_)),
                        "{id} at {params}: {forced:?}"
                    );
                }
            }
        }
    }
}

#[test]
fn domain_table() {
    use IdentityId::*;
    let domain = |id: IdentityId, n, p| {
        matches!(id.check_point(&Params { n, p, x: None, y: None }), Err(Error::DomainError(_)))
    };
    assert!(domain(CorF, 5, Some(1)));
    assert!(!domain(CorF, 5, Some(2)));
    assert!(domain(CorJ, 5, Some(2)));
    assert!(domain(CorW, 5, Some(2)));
    assert!(domain(CorS, 5, Some(1)));
    assert!(domain(CorG, 1, None));
    assert!(domain(CorK, 2, None));
    assert!(domain(CorX, 2, None));
    assert!(domain(CorO, 0, None));
    assert!(domain(CorT, 1, None));
    assert!(domain(CorL, 1, Some(2)));
    assert!(domain(CorE, 0, None));
    assert!(!domain(CorA, 0, None));
    assert!(domain(CorB, 3, Some(4)));
    assert!(domain(CorD, 3, Some(3)));
    assert!(domain(CorC, 3, Some(2)));
    assert!(domain(CorB, 3, None));
    // singular rather than out of domain
    let p = Params::np(0, 1);
    assert!(matches!(CorH.check_point(&p), Err(Error::SingularParameter(_))));
    assert!(matches!(CorL.check_point(&Params::np(2, 6)), Err(Error::SingularParameter(_))));
}

#[test]
fn wrong_parameters_are_rejected() {
    use IdentityId::*;
    assert!(ThmH2T0.rhs(&Params::n(2)).is_err());
    assert!(ThmH2T0.rhs(&Params { p: Some(1), ..Params::nx(2, q(1, 2)) }).is_err());
    assert!(LemmaT0.rhs(&Params::nx(2, q(1, 2))).is_err());
    assert!(CorA.rhs(&Params::nx(2, q(1, 2))).is_err());
    assert!(corollary_rhs(ThmH2T0, 1, None).is_err());
}

#[test]
fn n_zero_convention_for_t_positive() {
    for fam in Family::ALL.iter().filter(|f| f.t >= 1) {
        for x in [q(1, 1), q(0, 1), q(2, 1), q(1, 2)] {
            assert_eq!(theorem_rhs(*fam, 0, &x).unwrap(), Rational::zero());
        }
    }
}

#[test]
fn parity_branches() {
    use IdentityId::*;
    assert_eq!(CorA.parity_branch(&Params::n(3)), Some(1));
    assert_eq!(CorB.parity_branch(&Params::np(5, 2)), Some(1));
    assert_eq!(CorD.parity_branch(&Params::np(2, 6)), Some(0));
    assert_eq!(CorC.parity_branch(&Params::n(3)), None);
    assert_eq!(ThmH2T0.parity_branch(&Params::nx(3, q(1, 2))), None);
}

#[test]
fn every_mutation_is_caught_on_a_small_grid() {
    let xs = small_x_grid();
    for m in Mutation::ALL {
        let id = m.target();
        let caught = points(id, 8, 14, &xs).into_iter().any(|params| {
            id.check_point(&params).is_ok()
                && id.rhs_mutated(&params, m).ok() != Some(id.rhs(&params).unwrap())
        });
        assert!(caught, "{m} survived");
        // mutations are inert outside their target
        let other = if id == IdentityId::CorA { IdentityId::CorB } else { IdentityId::CorA };
        let params = Params::np(4, if other == IdentityId::CorB { 2 } else { 0 });
        assert_eq!(other.rhs_mutated(&params, m).unwrap(), other.rhs(&params).unwrap());
    }
}
