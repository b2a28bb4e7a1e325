mod common;

use common::*;
use num_bigint::BigInt;
use proptest::prelude::*;
use schubert_kit::polyring::GradedPolynomial;
use schubert_kit::{
    CoeffRing, GeneralizedCartanMatrix, Integers, PrimeField, Rationals, SchubertVector, TorusCohomology,
};

fn sample() -> Vec<GeneralizedCartanMatrix> {
    vec![rank_two(1, 1), rank_two(2, 1), rank_two(2, 2), rank_two(2, 3), affine_a2()]
}

type Terms = Vec<(Vec<u32>, i64)>;

fn terms(max_exp: u32) -> impl Strategy<Value = Terms> {
    prop::collection::vec((prop::collection::vec(0..=max_exp, 4), -5i64..=5), 1..5)
}

fn build<R: CoeffRing>(ctx: &TorusCohomology<R>, t: &Terms) -> GradedPolynomial<R> {
    let mut f = ctx.zero();
    for (e, c) in t {
        let e: Vec<u32> = e.iter().copied().take(ctx.nvars()).collect();
        f = f.add(&GradedPolynomial::monomial(ctx.ring(), e, ctx.ring().from_i64(*c)));
    }
    f
}

/// The homogeneous part of degree `d` of `f`, or a power of `x_0` if empty.
fn homogeneous<R: CoeffRing>(ctx: &TorusCohomology<R>, f: &GradedPolynomial<R>, d: usize) -> GradedPolynomial<R> {
    let mut out = ctx.zero();
    for (e, c) in f.terms() {
        if e.iter().sum::<u32>() as usize == d {
            out.add_term(e.clone(), c.clone());
        }
    }
    if out.is_zero() {
        ctx.variable(0).pow(d as u32)
    } else {
        out
    }
}

#[test]
fn reflection_and_divided_difference_examples() {
    for gcm in sample() {
        let ctx = TorusCohomology::new(gcm.clone(), Integers);
        let n = ctx.rank();
        for i in 0..n {
            for j in 0..n {
                let want = if i == j { ctx.h_dual(j).sub(&ctx.alpha(i)) } else { ctx.h_dual(j) };
                assert_eq!(ctx.weyl_act(i, &ctx.h_dual(j)), want);
                let aij = BigInt::from(gcm.entry_i64(i, j));
                assert_eq!(ctx.weyl_act(i, &ctx.alpha(j)), ctx.alpha(j).sub(&ctx.alpha(i).scale(&aij)));
            }
            assert_eq!(ctx.divided_difference(i, &ctx.alpha(i)).unwrap(), ctx.constant(2));
            assert_eq!(ctx.divided_difference(i, &ctx.h_dual(i)).unwrap(), ctx.one());
        }
        assert_eq!(ctx.characteristic_map(&ctx.one()).unwrap(), SchubertVector::basis(ctx.group(), &Integers, ctx.group().identity()));
    }
    for p in [2u64, 3, 5] {
        for gcm in sample() {
            let ctx = TorusCohomology::new(gcm, PrimeField::new(p).unwrap());
            for i in 0..ctx.rank() {
                let lhs = ctx.divided_difference(i, &ctx.h_dual(i).pow(p as u32)).unwrap();
                assert_eq!(lhs, ctx.alpha(i).neg().pow(p as u32 - 1));
                assert!(ctx.steenrod_commutation_check(i, &ctx.h_dual(i)).unwrap());
                assert!(ctx.steenrod_commutation_check(i, &ctx.constant(4)).unwrap());
            }
        }
    }
}

#[test]
fn steenrod_examples() {
    let ctx = TorusCohomology::new(rank_two(2, 3), PrimeField::new(2).unwrap());
    let (t, u) = (ctx.variable(0), ctx.variable(1));
    let total = |f: &GradedPolynomial<PrimeField>| ctx.total_steenrod(f);
    assert_eq!(total(&t), t.add(&t.pow(2)));
    assert_eq!(total(&t.mul(&u)), t.add(&t.pow(2)).mul(&u.add(&u.pow(2))));
    assert_eq!(total(&t.pow(2)), t.pow(2).add(&t.pow(4)));
}

#[test]
fn steenrod_commutation_on_random_polynomials() {
    let mut r = rng(385);
    for p in [2u64, 3, 5] {
        let field = PrimeField::new(p).unwrap();
        for gcm in sample() {
            let ctx = TorusCohomology::new(gcm, field.clone());
            for _ in 0..10 {
                let f = random_poly(&mut r, &field, ctx.nvars(), 3, 4, false);
                for i in 0..ctx.rank() {
                    assert!(ctx.steenrod_commutation_check(i, &f).unwrap(), "p = {p}, f = {f}");
                }
            }
        }
    }
}

#[test]
fn invariant_examples() {
    let q = TorusCohomology::new(rank_two(1, 1), Rationals);
    assert_eq!(q.invariants_dimension(0).unwrap(), 0);
    assert_eq!(q.invariants_dimension(1).unwrap(), 0);
    for (a, b) in [(2u64, 2u64), (2, 3), (1, 4), (3, 3)] {
        let ctx = TorusCohomology::new(rank_two(a, b), Rationals);
        let report = ctx.s_poincare(6).unwrap();
        let dims: Vec<usize> = report.per_degree.iter().map(|r| r.dim_s).collect();
        assert_eq!(dims, [1, 2, 2, 2, 2, 2, 2], "({a},{b})");
    }

    let f3 = TorusCohomology::new(rank_two(2, 2), PrimeField::new(3).unwrap());
    let report = f3.s_poincare(8).unwrap();
    // r = 3 = torus rank of A(2,2)
    assert_eq!(report.factor_degrees, Some(vec![1, 2, 3]));
    assert_eq!(f3.nvars(), 3);

    let f2 = TorusCohomology::new(rank_two(2, 2), PrimeField::new(2).unwrap());
    for d in 1..=2 {
        for lambda in f2.weyl_invariants(d) {
            let square = lambda.pow(2);
            assert!(f2.characteristic_map(&square).unwrap().is_zero(), "{lambda}");
        }
    }
}

#[test]
fn parsing() {
    let ctx = TorusCohomology::new(rank_two(2, 3), Integers);
    let f = ctx.parse("x1^2*x2 - 3*(x1 + a2)").unwrap();
    let (x1, x2) = (ctx.variable(0), ctx.variable(1));
    let want = x1.pow(2).mul(&x2).sub(&x1.add(&ctx.alpha(1)).scale(&BigInt::from(3)));
    assert_eq!(f, want);
    assert!(ctx.parse("x9").is_err());
    assert!(ctx.parse("x1 +").is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn twisted_leibniz(g in 0..5usize, f in terms(2), h in terms(2), i in 0usize..3) {
        let ctx = TorusCohomology::new(sample()[g].clone(), Integers);
        let i = i % ctx.rank();
        let (f, h) = (build(&ctx, &f), build(&ctx, &h));
        let lhs = ctx.divided_difference(i, &f.mul(&h)).unwrap();
        let rhs = ctx.divided_difference(i, &f).unwrap().mul(&ctx.weyl_act(i, &h))
            .add(&f.mul(&ctx.divided_difference(i, &h).unwrap()));
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(ctx.weyl_act(i, &ctx.weyl_act(i, &f)), f);
    }

    #[test]
    fn divided_differences_square_to_zero(g in 0..5usize, f in terms(3), i in 0usize..3) {
        let ctx = TorusCohomology::new(sample()[g].clone(), Integers);
        let i = i % ctx.rank();
        let f = build(&ctx, &f);
        let once = ctx.divided_difference(i, &f).unwrap();
        prop_assert!(ctx.divided_difference(i, &once).unwrap().is_zero());
    }

    #[test]
    fn braid_relations(g in 0..5usize, f in terms(3)) {
        let gcm = sample()[g].clone();
        let ctx = TorusCohomology::new(gcm.clone(), Integers);
        let f = build(&ctx, &f);
        for i in 0..ctx.rank() {
            for j in (0..ctx.rank()).filter(|&j| j != i) {
                let Some(m) = gcm.coxeter_exponent(i, j).unwrap().finite() else { continue };
                let alt = |s: usize, t: usize| -> Vec<usize> { (0..m as usize).map(|k| if k % 2 == 0 { s } else { t }).collect() };
                prop_assert_eq!(
                    ctx.divided_difference_word(&alt(i, j), &f).unwrap(),
                    ctx.divided_difference_word(&alt(j, i), &f).unwrap()
                );
            }
        }
    }

    #[test]
    fn psi_commutes_with_operators(g in 0..5usize, f in terms(2), d in 1usize..=4, i in 0usize..3) {
        let ctx = TorusCohomology::new(sample()[g].clone(), Rationals);
        let i = i % ctx.rank();
        let f = homogeneous(&ctx, &build(&ctx, &f), d);
        let lhs = ctx.characteristic_map(&ctx.divided_difference(i, &f).unwrap()).unwrap();
        prop_assert_eq!(lhs, ctx.characteristic_map(&f).unwrap().nil_a(i));
    }

    #[test]
    fn psi_over_finite_fields(g in 0..5usize, f in terms(2), d in 1usize..=3, p in prop::sample::select(vec![2u64, 3, 5])) {
        let ctx = TorusCohomology::new(sample()[g].clone(), PrimeField::new(p).unwrap());
        let f = homogeneous(&ctx, &build(&ctx, &f), d);
        let psi = ctx.characteristic_map(&f).unwrap();
        for i in 0..ctx.rank() {
            let lhs = ctx.characteristic_map(&ctx.divided_difference(i, &f).unwrap()).unwrap();
            prop_assert_eq!(lhs, psi.nil_a(i));
        }
    }
}
