use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use qseries::series::{coeff, int, rat};
use qseries::{Rat, Series};

fn series_strategy(max_len: usize) -> impl Strategy<Value = Series> {
    (
        prop::collection::vec(-20i64..20, 0..max_len),
        1i64..4,
        -3i64..3,
        0i64..6,
    )
        .prop_map(|(cs, d, offset, extra)| {
            let terms = cs
                .iter()
                .enumerate()
                .map(|(i, &c)| (rat(offset * d + i as i64, d), coeff(c)));
            let top = rat(offset * d + cs.len() as i64, d) + int(extra);
            Series::from_terms(terms, top)
        })
}

fn unit_strategy() -> impl Strategy<Value = Series> {
    (
        prop::collection::vec(-9i64..9, 1..20),
        prop_oneof![Just(1i64), Just(-1), Just(2)],
    )
        .prop_map(|(mut cs, lead)| {
            cs[0] = lead;
            let n = cs.len() as i64;
            Series::from_integers(&cs, int(n))
        })
}

proptest! {
    #[test]
    fn addition_is_commutative_and_associative(
        a in series_strategy(12), b in series_strategy(12), c in series_strategy(12)
    ) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn multiplication_is_a_commutative_ring_product(
        a in series_strategy(10), b in series_strategy(10), c in series_strategy(10)
    ) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        let left = a.mul(&b.add(&c));
        let right = a.mul(&b).add(&a.mul(&c));
        let n = left.precision().min(right.precision());
        prop_assert!(left.equals_to_order(&right, n).unwrap().is_equal());
    }

    #[test]
    fn product_ignores_unknown_coefficients(
        a in series_strategy(10), b in series_strategy(10), junk in -50i64..50
    ) {
        // Filling in a coefficient at or above the precision must not
        // change anything the product claims to know.
        let p = a.precision();
        let widened = Series::from_terms(
            a.terms().map(|(e, c)| (e, c.clone())).chain([(p, coeff(junk))]),
            p + int(1),
        );
        let exact = a.mul(&b);
        let other = widened.mul(&b);
        prop_assert!(other.precision() >= exact.precision());
        prop_assert!(exact
            .equals_to_order(&other, exact.precision())
            .unwrap()
            .is_equal());
    }

    #[test]
    fn inverse_is_a_two_sided_inverse(u in unit_strategy(), shift in -4i64..4) {
        let f = u.shift(int(shift));
        let g = f.invert().unwrap();
        let one = f.mul(&g);
        prop_assert_eq!(one.precision(), u.precision());
        prop_assert!(one
            .equals_to_order(&Series::one(one.precision()), one.precision())
            .unwrap()
            .is_equal());
        prop_assert_eq!(g.precision(), f.precision() - f.valuation() * 2);
    }

    #[test]
    fn integer_units_have_integer_inverses(cs in prop::collection::vec(-9i64..9, 1..15)) {
        let mut cs = cs;
        cs[0] = 1;
        let f = Series::from_integers(&cs, int(cs.len() as i64));
        prop_assert!(f.invert().unwrap().is_integral());
    }

    #[test]
    fn power_matches_repeated_product(a in series_strategy(8), k in 0u32..5) {
        let mut expect = Series::one(a.precision().max(int(1)) * 4 + int(8));
        for _ in 0..k {
            expect = expect.mul(&a);
        }
        let got = a.pow(k);
        let n = got.precision().min(expect.precision());
        prop_assert!(got.equals_to_order(&expect, n).unwrap().is_equal());
    }

    #[test]
    fn rescaling_is_invertible(a in series_strategy(12), num in 1i64..6, den in 1i64..6) {
        let k = rat(num, den);
        let b = a.rescale_variable(k).unwrap();
        prop_assert_eq!(b.precision(), a.precision() * k);
        prop_assert_eq!(b.rescale_variable(k.recip()).unwrap(), a.clone());
        let even = a.rescale_variable(int(2 * a.denom())).unwrap();
        prop_assert_eq!(even.negate_variable().unwrap(), even.clone());
        let odd = a.rescale_variable(int(a.denom())).unwrap();
        prop_assert_eq!(odd.negate_variable().unwrap().negate_variable().unwrap(), odd);
    }

    #[test]
    fn t5_is_linear(cs in prop::collection::vec(-20i64..20, 5..60), ds in prop::collection::vec(-20i64..20, 5..60)) {
        let n = cs.len().min(ds.len()) as i64;
        let f = Series::from_integers(&cs, int(n));
        let g = Series::from_integers(&ds, int(n));
        let two = BigRational::from_integer(BigInt::from(2));
        let lhs = f.scale(&two).add(&g).t5().unwrap();
        let rhs = f.t5().unwrap().scale(&two).add(&g.t5().unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn t5_is_u5_plus_rescale(cs in prop::collection::vec(-20i64..20, 5..80)) {
        let n = cs.len() as i64;
        let f = Series::from_integers(&cs, int(n));
        let t = f.t5().unwrap();
        prop_assert_eq!(t.precision(), int(n / 5));
        let u = f.u5().unwrap();
        let r = f.rescale_variable(int(5)).unwrap();
        let sum = u.add(&r);
        prop_assert!(t.equals_to_order(&sum, t.precision()).unwrap().is_equal());
    }

    #[test]
    fn progressions_partition_the_series(cs in prop::collection::vec(-20i64..20, 1..60), m in 1i64..7) {
        let n = cs.len() as i64;
        let f = Series::from_integers(&cs, int(n));
        let mut rebuilt = Series::zero(int(n));
        for r in 0..m {
            let part = f.extract_progression(m, r).unwrap();
            let ceil = (n - r + m - 1).div_euclid(m);
            prop_assert_eq!(part.precision(), int(ceil));
            let back = part.rescale_variable(int(m)).unwrap().shift(int(r));
            rebuilt = rebuilt.add(&back.truncate(int(n)));
        }
        prop_assert_eq!(rebuilt, f);
    }
}

#[test]
fn laurent_arithmetic_keeps_precision_bookkeeping() {
    let f: Series = Series::from_terms([(int(-2), coeff(1)), (int(0), coeff(3))], int(5));
    let g = f.mul(&f);
    assert_eq!(g.valuation(), int(-4));
    assert_eq!(g.precision(), int(3));
    let p: Rat = rat(1, 3);
    let h = Series::monomial(coeff(2), p, int(2)).unwrap();
    assert_eq!(h.pow(3).coefficient_at(int(1)).unwrap(), coeff(8));
}
