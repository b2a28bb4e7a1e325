mod common;

use common::*;
use num_bigint::BigInt;
use proptest::prelude::*;
use schubert_kit::schubert::{coassociative_at, counit_at, parabolic_basis, peterson_coproduct};
use schubert_kit::{GeneralizedCartanMatrix, Integers, SchubertVector, WeylGroup};

fn sample() -> Vec<GeneralizedCartanMatrix> {
    vec![rank_two(1, 1), rank_two(2, 1), rank_two(2, 2), rank_two(2, 3), affine_a2()]
}

fn gcm_and_words(max_len: usize) -> impl Strategy<Value = (usize, Vec<usize>, Vec<usize>)> {
    (0..sample().len()).prop_flat_map(move |g| {
        let n = sample()[g].rank();
        (Just(g), prop::collection::vec(0..n, 0..=max_len), prop::collection::vec(0..n, 0..=max_len))
    })
}

#[test]
fn operator_examples() {
    let g = WeylGroup::new(rank_two(2, 2));
    let x = SchubertVector::basis(&g, &Integers, g.from_word(&[1, 0]).unwrap());
    assert_eq!(x.nil_a(0), SchubertVector::basis(&g, &Integers, g.from_word(&[1]).unwrap()));
    assert!(x.nil_a(1).is_zero());
    let r = SchubertVector::basis(&g, &Integers, g.simple_reflection(1).unwrap());
    assert_eq!(r.nil_a(1), SchubertVector::basis(&g, &Integers, g.identity()));
    assert!(SchubertVector::basis(&g, &Integers, g.identity()).nil_a(0).is_zero());

    let a2 = WeylGroup::new(rank_two(1, 1));
    let w0 = a2.longest_element(&[0, 1]).unwrap();
    let top = SchubertVector::basis(&a2, &Integers, w0.clone());
    assert_eq!(top.nil_aw(&[0, 1, 0]).unwrap(), SchubertVector::basis(&a2, &Integers, a2.identity()));
    for w in a2.enumerate_by_length(3).into_iter().flatten() {
        let x = SchubertVector::basis(&a2, &Integers, w);
        assert_eq!(x.nil_aw(&[0, 1, 0]).unwrap(), x.nil_aw(&[1, 0, 1]).unwrap());
    }
    assert!(top.nil_aw(&[0, 0]).is_err());
    assert_eq!(top.coefficient(&w0), BigInt::from(1));
}

#[test]
fn coproduct_examples() {
    let g = WeylGroup::new(rank_two(2, 2));
    let e = g.identity();
    assert_eq!(peterson_coproduct(&g, &Integers, &e).len(), 1);
    let r1 = g.simple_reflection(0).unwrap();
    let d = peterson_coproduct(&g, &Integers, &r1);
    assert_eq!(d.len(), 2);
    assert_eq!(d.coefficient(&r1, &e), BigInt::from(1));
    assert_eq!(d.coefficient(&e, &r1), BigInt::from(1));
    let w = g.from_word(&[1, 0]).unwrap();
    let d = peterson_coproduct(&g, &Integers, &w);
    assert_eq!(d.len(), 3);
    assert_eq!(d.coefficient(&g.simple_reflection(1).unwrap(), &r1), BigInt::from(1));
}

#[test]
fn parabolic_bases() {
    let g = WeylGroup::new(rank_two(2, 3));
    let basis = parabolic_basis(&g, &[0], 6);
    assert_eq!(basis.len(), 7);
    for w in &basis {
        assert!(w.word().last().is_none_or(|&i| i == 1));
        assert!(SchubertVector::basis(&g, &Integers, w.clone()).nil_a(0).is_zero());
    }
    assert_eq!(parabolic_basis(&g, &[], 3).len(), 7);
}

#[test]
fn relations_on_truncated_modules() {
    for gcm in sample() {
        let group = WeylGroup::new(gcm.clone());
        let n = group.rank();
        let elements: Vec<_> = group.enumerate_by_length(8).into_iter().flatten().collect();
        for v in &elements {
            let x = SchubertVector::basis(&group, &Integers, v.clone());
            for i in 0..n {
                assert!(x.nil_a(i).nil_a(i).is_zero());
                for j in (0..n).filter(|&j| j != i) {
                    let Some(m) = gcm.coxeter_exponent(i, j).unwrap().finite() else { continue };
                    let alt = |s: usize, t: usize| -> Vec<usize> { (0..m as usize).map(|k| if k % 2 == 0 { s } else { t }).collect() };
                    assert_eq!(x.nil_aw(&alt(i, j)).unwrap(), x.nil_aw(&alt(j, i)).unwrap());
                }
            }
        }
    }
}

#[test]
fn nil_aw_closed_form() {
    for gcm in sample() {
        let group = WeylGroup::new(gcm);
        let elements: Vec<_> = group.enumerate_by_length(6).into_iter().flatten().collect();
        for v in &elements {
            let x = SchubertVector::basis(&group, &Integers, v.clone());
            for w in &elements {
                let vw = group.multiply(v, &group.inverse(w));
                let want = if w.length() + vw.length() == v.length() {
                    SchubertVector::basis(&group, &Integers, vw)
                } else {
                    SchubertVector::zero(&group, &Integers)
                };
                assert_eq!(x.nil_aw(w.word()).unwrap(), want);
            }
        }
    }
}

#[test]
fn coalgebra_axioms() {
    for gcm in [rank_two(1, 1), rank_two(2, 3), affine_a2()] {
        let group = WeylGroup::new(gcm);
        for w in group.enumerate_by_length(7).into_iter().flatten() {
            assert!(coassociative_at(&group, &w), "{w}");
            assert!(counit_at(&group, &Integers, &w), "{w}");
            for ((u, v), c) in peterson_coproduct(&group, &Integers, &w).iter() {
                assert_eq!(u.length() + v.length(), w.length());
                assert_eq!(group.multiply(u, v), w);
                assert_eq!(*c, BigInt::from(1));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn coproduct_matches_left_factor_search((g, word, _) in gcm_and_words(7)) {
        let group = WeylGroup::new(sample()[g].clone());
        let w = group.from_word(&word).unwrap();
        let delta = peterson_coproduct(&group, &Integers, &w);
        let factors = group.left_factors(&w);
        prop_assert_eq!(delta.len(), factors.len());
        for u in factors {
            let v = group.multiply(&group.inverse(&u), &w);
            prop_assert_eq!(delta.coefficient(&u, &v), BigInt::from(1));
        }
    }

    #[test]
    fn operators_are_linear((g, u, v) in gcm_and_words(6), i in 0usize..3, c in -4i64..=4) {
        let group = WeylGroup::new(sample()[g].clone());
        let i = i % group.rank();
        let x = SchubertVector::basis(&group, &Integers, group.from_word(&u).unwrap());
        let y = SchubertVector::basis(&group, &Integers, group.from_word(&v).unwrap());
        let c = BigInt::from(c);
        let combo = x.scale(&c).add(&y);
        prop_assert_eq!(combo.nil_a(i), x.nil_a(i).scale(&c).add(&y.nil_a(i)));
        let w = group.from_word(&v).unwrap();
        prop_assert_eq!(combo.coefficient(&w), c * x.coefficient(&w) + BigInt::from(1));
    }
}
