use exact_real::expr::{parse, random_expr, to_real, ExprShape};
use exact_real::{
    compare, member, rat, to_decimal, Budget, Comparison, Interval, Membership, Rational, Real,
};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rational() -> impl Strategy<Value = Rational> {
    (-10_000i64..10_000, 1i64..500).prop_map(|(n, d)| rat(n, d))
}

fn precision() -> impl Strategy<Value = Rational> {
    (1i64..10, 0u32..25).prop_map(|(m, k)| {
        Rational::new(
            BigInt::from(m),
            num_traits::pow(BigInt::from(10), k as usize),
        )
    })
}

fn generated(seed: u64) -> Real {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let e = random_expr(
        &mut rng,
        &ExprShape {
            max_depth: 4,
            ..ExprShape::default()
        },
    );
    to_real(&e, &Budget::default()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn answers_meet_radius_and_pairwise_intersect(
        seed in any::<u64>(),
        eps in prop::collection::vec(precision(), 2..6),
    ) {
        let a = generated(seed);
        let answers: Vec<Interval> = eps.iter().map(|e| a.approx(e).unwrap()).collect();
        for (i, e) in answers.iter().zip(&eps) {
            prop_assert!(i.radius() <= e);
        }
        for i in &answers {
            for j in &answers {
                prop_assert!(i.intersects(j));
            }
        }
    }

    #[test]
    fn compare_is_antisymmetric(x in rational(), y in rational()) {
        let (a, b) = (Real::embed(x.clone()), Real::embed(y.clone()));
        let budget = Budget::decimal(20);
        let ab = compare(&a, &b, &budget).unwrap();
        let ba = compare(&b, &a, &budget).unwrap();
        match x.cmp(&y) {
            std::cmp::Ordering::Less => prop_assert!(ab.is_less() && ba.is_greater()),
            std::cmp::Ordering::Greater => prop_assert!(ab.is_greater() && ba.is_less()),
            std::cmp::Ordering::Equal => {
                let indeterminate = matches!(ab, Comparison::Indeterminate { .. });
                prop_assert!(indeterminate && ba.is_indeterminate());
            }
        }
    }

    #[test]
    fn decimals_are_within_one_unit(x in rational(), digits in 0u32..12) {
        let d = to_decimal(&Real::embed(x.clone()), digits, &Budget::decimal(30)).unwrap();
        let unit = Rational::new(BigInt::from(1), num_traits::pow(BigInt::from(10), digits as usize));
        let err = d.value() - &x;
        prop_assert!(err.clone() < unit.clone() && -err < unit);
    }

    #[test]
    fn membership_never_contradicts_exact_value(x in rational(), q in rational(), eps in precision()) {
        // A computed real with the value of x, not an exact embedding.
        let a = to_real(&parse(&format!("({x}) + 0")).unwrap(), &Budget::default()).unwrap();
        let inside = &q - &eps < x && x < &q + &eps;
        match member(&q, &eps, &a, &Budget::decimal(40)).unwrap() {
            Membership::Yes => prop_assert!(inside),
            Membership::No => prop_assert!(!inside),
            Membership::Unknown => {}
        }
    }
}
