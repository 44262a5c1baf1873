mod common;

use knotlat::algebra::{rat, ratio, Gaussian};
use knotlat::seifert::{
    alexander, alexander_circle_singularities, connected_sum, half_angle_alexander, hermitian_form, knot_determinant,
    mirror, sigma, signature_exact, SeifertMatrix,
};
use knotlat::{CirclePoint, GaussianRational, Rational};
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn seifert() -> impl Strategy<Value = SeifertMatrix> {
    (any::<u64>(), 1usize..=3).prop_map(|(seed, g)| common::random_seifert(&mut common::rng(seed), g, 2))
}

fn omega() -> impl Strategy<Value = CirclePoint> {
    prop_oneof![
        (-40i64..=40, 1i64..=9).prop_filter("omega = 1", |(n, _)| *n != 0).prop_map(|(n, d)| CirclePoint::Finite(ratio(n, d))),
        Just(CirclePoint::Infinity),
    ]
}

fn sig(s: &SeifertMatrix, w: &CirclePoint) -> Option<i64> {
    let v = signature_exact(&hermitian_form(s, w));
    (!v.singular).then(|| v.as_integer().unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn alexander_is_symmetric_and_normalized(s in seifert()) {
        let d = alexander(&s);
        prop_assert!(d.is_symmetric());
        prop_assert!(d.all_exponents_even());
        prop_assert_eq!(d.coefficient_sum(), rat(1));
    }

    #[test]
    fn hermitian_determinant_identity(s in seifert(), w in omega()) {
        let g = s.genus() as u32;
        let z = w.value();
        let h = hermitian_form(&s, &w);
        let rows = common::gaussian_rows(&s);
        let n = s.size();
        let ws: Vec<Vec<GaussianRational>> = (0..n)
            .map(|i| (0..n).map(|j| z.clone() * rows[i][j].clone() - rows[j][i].clone()).collect())
            .collect();
        let half_angle = z.inv().unwrap().pow(g) * common::naive_det(ws);
        let expected = z.conj().pow(g) * (GaussianRational::one() - z.clone()).pow(2 * g) * half_angle.clone();
        prop_assert_eq!(h.determinant(), expected);
        prop_assert_eq!(common::naive_det(h.matrix().to_rows()), h.determinant());
        prop_assert_eq!(half_angle_alexander(&s, &w), half_angle.clone());
        prop_assert_eq!(alexander(&s).eval_at_square_root(&z).unwrap(), half_angle);
    }

    #[test]
    fn signature_is_a_congruence_invariant(s in seifert(), w in omega(), seed in any::<u64>()) {
        let rows = s.matrix().to_rows();
        let p = common::random_unimodular(&mut common::rng(seed), rows.len(), 8);
        let t = SeifertMatrix::from_rows(common::congruence(&rows, &p)).unwrap();
        let (a, b) = (signature_exact(&hermitian_form(&s, &w)), signature_exact(&hermitian_form(&t, &w)));
        prop_assert_eq!(a, b);
    }

    #[test]
    fn sigma_is_locally_constant(s in seifert()) {
        let mut ps = alexander_circle_singularities(&s).unwrap().parameters;
        for pair in 0..ps.len().saturating_sub(1) {
            let (l, r) = ps.split_at_mut(pair + 1);
            let (left, right) = (&mut l[pair], &mut r[0]);
            while left.hi() >= right.lo() {
                left.bisect();
                right.bisect();
            }
            let gap = right.lo() - left.hi();
            let a = left.hi() + &gap / rat(3);
            let b = left.hi() + gap * rat(2) / rat(3);
            prop_assume!(!a.is_zero() && !b.is_zero());
            let sa = sigma(&s, &CirclePoint::Finite(a)).unwrap();
            let sb = sigma(&s, &CirclePoint::Finite(b)).unwrap();
            prop_assert!(!sa.singular && !sb.singular);
            prop_assert_eq!(sa.value, sb.value);
        }
    }

    #[test]
    fn additivity_and_mirror(s in seifert(), t in seifert(), w in omega()) {
        let (a, b, m) = (sig(&s, &w), sig(&t, &w), sig(&mirror(&s), &w));
        prop_assume!(a.is_some() && b.is_some());
        prop_assert_eq!(sig(&connected_sum(&s, &t), &w), Some(a.unwrap() + b.unwrap()));
        prop_assert_eq!(m, Some(-a.unwrap()));
        prop_assert_eq!(alexander(&connected_sum(&s, &t)), alexander(&s) * alexander(&t));
        prop_assert_eq!(knot_determinant(&mirror(&s)).unwrap(), knot_determinant(&s).unwrap());
    }

    #[test]
    fn determinant_is_delta_at_i(s in seifert()) {
        let rows = s.matrix().to_rows();
        let n = rows.len();
        let sym: Vec<Vec<Rational>> = (0..n).map(|i| (0..n).map(|j| rat(rows[i][j] + rows[j][i])).collect()).collect();
        let det = common::naive_det(sym).abs();
        let at_i = alexander(&s).eval(&Gaussian::i()).unwrap();
        prop_assert!(at_i.is_real());
        prop_assert_eq!(at_i.re.abs(), det.clone());
        prop_assert_eq!(Rational::from_integer(knot_determinant(&s).unwrap()), det);
    }

    #[test]
    fn signature_at_minus_one_matches_descartes(s in seifert()) {
        let rows = s.matrix().to_rows();
        let n = rows.len();
        let h: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| 2 * (rows[i][j] + rows[j][i])).collect()).collect();
        let (pos, neg, zero) = common::inertia_by_descartes(&h);
        let v = signature_exact(&hermitian_form(&s, &CirclePoint::Infinity));
        prop_assert_eq!(v.value, rat(pos as i64 - neg as i64));
        prop_assert_eq!(v.nullity, zero);
    }
}
