mod common;

use knotlat::lattice::{embed, orthogonal_complement, FormSign, IntegralLattice};
use proptest::prelude::*;

/// Gram matrix of `r` random independent vectors in `ℤᴺ`, so an embedding
/// into `(ℤᴺ, sign·I)` is known to exist.
fn realized() -> impl Strategy<Value = (IntegralLattice, usize, FormSign)> {
    (1usize..=3, 0usize..=2, prop::collection::vec(-2i64..=2, 15), any::<bool>()).prop_filter_map(
        "dependent vectors",
        |(r, extra, pool, positive)| {
            let n = r + extra;
            let vs: Vec<Vec<i64>> = (0..r).map(|i| pool[i * n..(i + 1) * n].to_vec()).collect();
            let sign = if positive { FormSign::Positive } else { FormSign::Negative };
            let gram: Vec<Vec<i64>> = (0..r)
                .map(|i| (0..r).map(|j| sign.value() * vs[i].iter().zip(&vs[j]).map(|(a, b)| a * b).sum::<i64>()).collect())
                .collect();
            let l = IntegralLattice::from_rows(gram).ok()?;
            l.is_definite(sign).then_some((l, n, sign))
        },
    )
}

fn standard_in_disguise() -> impl Strategy<Value = IntegralLattice> {
    (1usize..=6, any::<u64>(), any::<bool>()).prop_map(|(n, seed, positive)| {
        let p = common::random_unimodular(&mut common::rng(seed), n, 3 * n);
        let s = if positive { 1 } else { -1 };
        let id: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| if i == j { s } else { 0 }).collect()).collect();
        IntegralLattice::from_rows(common::congruence(&id, &p)).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn realized_lattices_embed_soundly((l, n, sign) in realized()) {
        let w = embed(&l, n, sign).unwrap();
        prop_assert!(w.is_some());
        let w = w.unwrap();
        prop_assert!(w.verify(&l));
        prop_assert_eq!(embed(&l, n, sign).unwrap(), Some(w));
    }

    #[test]
    fn matches_brute_force(entries in prop::collection::vec(-3i64..=3, 6), n in 2usize..=3, positive in any::<bool>()) {
        let g = vec![
            vec![entries[0], entries[1], entries[2]],
            vec![entries[1], entries[3], entries[4]],
            vec![entries[2], entries[4], entries[5]],
        ];
        let r = if n == 2 { 2 } else { 3 };
        let g: Vec<Vec<i64>> = g[..r].iter().map(|row| row[..r].to_vec()).collect();
        let sign = if positive { FormSign::Positive } else { FormSign::Negative };
        let l = IntegralLattice::from_rows(g.clone()).unwrap();
        let ours = match embed(&l, n + 1, sign) {
            Ok(w) => w.is_some(),
            Err(_) => false,
        };
        prop_assert_eq!(ours, common::brute_force_embeds(&g, n + 1, sign.value()));
    }

    #[test]
    fn standard_lattices_embed_tightly(l in standard_in_disguise()) {
        let sign = l.definite_sign().unwrap();
        prop_assert!(l.is_standard());
        let tight = embed(&l, l.rank(), sign).unwrap();
        let loose = embed(&l, l.rank() + 2, sign).unwrap();
        prop_assert_eq!(tight.is_some(), loose.is_some());
        let w = tight.unwrap();
        prop_assert_eq!(orthogonal_complement(&w).rank(), 0);
        let wide = loose.unwrap();
        let c = orthogonal_complement(&wide);
        prop_assert_eq!(c.rank(), 2);
        prop_assert!(c.is_standard());
    }

    #[test]
    fn direct_sum_is_block_and_determinant_multiplies((a, na, sa) in realized(), (b, nb, _) in realized()) {
        let b = if b.is_definite(sa) { b } else { b.negate() };
        let s = a.direct_sum(&b);
        prop_assert_eq!(s.rank(), a.rank() + b.rank());
        prop_assert_eq!(s.determinant(), a.determinant() * b.determinant());
        let wa = embed(&a, na, sa).unwrap().unwrap();
        let wb = embed(&b, nb, sa).unwrap().unwrap();
        prop_assert!(wa.direct_sum(&wb).unwrap().verify(&s));
    }
}
