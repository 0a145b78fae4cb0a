use proptest::prelude::*;

use whipple::closed_forms::corollary_lhs_for;
use whipple::combinatorics::{
    factorial, gen_binomial, gen_harmonic, harmonic_signed, shifted_factorial, HarmonicArgs,
};
use whipple::oracle::{self, corollary_lhs, corollary_lhs_reduced};
use whipple::{Error, Family, IdentityId, Jet, Params, Rational};

fn rational() -> impl Strategy<Value = Rational> {
    (-60i64..=60, 1i64..=24).prop_map(|(n, d)| Rational::frac(n, d))
}

fn nonzero() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| !r.is_zero())
}

fn family() -> impl Strategy<Value = Family> {
    (0usize..6).prop_map(|i| Family::ALL[i])
}

fn identity() -> impl Strategy<Value = IdentityId> {
    (0usize..36).prop_map(|i| IdentityId::ALL[i])
}

/// Points on which every identity can be asked something: small `n`,
/// `x` and `y` often integers so singular sets get hit.
fn point() -> impl Strategy<Value = (IdentityId, Params)> {
    let coord = prop_oneof![
        (-8i64..=14).prop_map(Rational::from),
        (-17i64..=17, 1i64..=4).prop_map(|(a, b)| Rational::frac(a, b)),
    ];
    (identity(), 0u64..=6, 0u64..=12, coord.clone(), coord).prop_map(|(id, n, p, x, y)| {
        let params = if id.is_corollary() {
            Params::np(n, p)
        } else if id.uses_y() {
            Params::nxy(n, x, y)
        } else {
            Params::nx(n, x)
        };
        (id, params)
    })
}

proptest! {
    #[test]
    fn field_axioms(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn inverses(a in nonzero()) {
        prop_assert!((&a * &a.recip().unwrap()).is_one());
        prop_assert_eq!(a.checked_div(&a).unwrap(), Rational::one());
        prop_assert_eq!(a.checked_div(&Rational::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn text_round_trip(a in rational()) {
        let s = a.to_string();
        prop_assert_eq!(s.parse::<Rational>().unwrap(), a.clone());
        let j = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<Rational>(&j).unwrap(), a);
    }

    #[test]
    fn jet_truncation_commutes(
        y0 in rational(),
        c in proptest::collection::vec(rational(), 4),
        d in proptest::collection::vec(rational(), 4),
        k in 1usize..=2,
    ) {
        let f = Jet::from_coeffs(c, &y0).unwrap();
        let mut d = d;
        if d[0].is_zero() {
            d[0] = Rational::one();
        }
        let g = Jet::from_coeffs(d, &y0).unwrap();
        let (ft, gt) = (f.truncate(k).unwrap(), g.truncate(k).unwrap());
        prop_assert_eq!((&f * &g).truncate(k).unwrap(), &ft * &gt);
        prop_assert_eq!((&f + &g).truncate(k).unwrap(), &ft + &gt);
        prop_assert_eq!(f.checked_div(&g).unwrap().truncate(k).unwrap(), ft.checked_div(&gt).unwrap());
        prop_assert_eq!(g.powi(-2).unwrap().truncate(k).unwrap(), gt.powi(-2).unwrap());
    }

    #[test]
    fn harmonic_recurrence(n in 1u64..40, ell in 1u32..=3, x in rational()) {
        let here = gen_harmonic(&HarmonicArgs::new(n, ell, x.clone()));
        let prev = gen_harmonic(&HarmonicArgs::new(n - 1, ell, x.clone()));
        match (here, prev) {
            (Ok(h), Ok(p)) => prop_assert_eq!(h, p + (&x + n as i64).pow(-(ell as i32)).unwrap()),
            (Err(_), _) => prop_assert!(x.is_integer() && x < 0 && x >= -(n as i64)),
            (Ok(_), Err(_)) => prop_assert!(false, "pole disappeared"),
        }
        // the signed extension obeys the same recurrence below zero
        let m = -(n as i64);
        if let (Ok(h), Ok(p)) = (harmonic_signed(m, ell, &x), harmonic_signed(m - 1, ell, &x)) {
            prop_assert_eq!(h, p + (&x + m).pow(-(ell as i32)).unwrap());
        }
    }

    #[test]
    fn binomial_times_factorial(x in rational(), s in 0u64..12) {
        let lhs = gen_binomial(&x, s) * Rational::from(factorial(s));
        prop_assert_eq!(lhs, shifted_factorial(&(&x - s as i64 + 1), s));
    }

    #[test]
    fn running_product_matches_termwise(fam in family(), n in 0u64..14, x in rational(), y in rational(), t in 0u8..3) {
        prop_assert_eq!(oracle::theorem_lhs(fam, n, &x), oracle::theorem_lhs_termwise(fam, n, &x));
        prop_assert_eq!(oracle::lemma_lhs(t, n, &x, &y), oracle::lemma_lhs_termwise(t, n, &x, &y));
    }

    #[test]
    fn p_equals_n_factorization(fam in family(), n in 0u64..20) {
        let general = corollary_lhs(fam, n, n);
        let reduced = corollary_lhs_reduced(fam, n);
        prop_assert_eq!(general, reduced * whipple::combinatorics::int_binomial(2 * n, n));
    }

    /// The master property, on random points: wherever the exclusion rule
    /// admits a point, both sides evaluate and agree; wherever it rejects
    /// one, forcing the written form fails.
    #[test]
    fn closed_forms_match_oracle((id, params) in point()) {
        match id.check_point(&params) {
            Ok(()) => {
                let lhs = id.lhs(&params).unwrap();
                let rhs = id.rhs(&params).unwrap();
                prop_assert_eq!(lhs, rhs, "{} at {}", id, params);
            }
            Err(e) => {
                prop_assert!(e.is_skip());
                prop_assert!(id.force_rhs(&params).is_err(), "{} at {} excluded but evaluates", id, params);
            }
        }
    }

    #[test]
    fn corollary_lhs_ignores_missing_p_for_fixed_families(n in 0u64..12) {
        let a = corollary_lhs_for(IdentityId::CorA, &Params::n(n)).unwrap();
        let a0 = corollary_lhs_for(IdentityId::CorA, &Params::np(n, 0)).unwrap();
        prop_assert_eq!(a, a0);
    }
}
