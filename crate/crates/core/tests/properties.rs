use proptest::prelude::*;

use qcimf::algebra::AlgebraCtx;
use qcimf::amodule::AModule;
use qcimf::factorization::{
    mapping_cone, rank_one_scan, standard_triangle, strip_units, FactMorphism, Factorization,
    Homotopy,
};
use qcimf::field::{ExtScalar, FieldSpec};
use qcimf::random;
use qcimf::reduction::{check_acyclic, image_module, reduce_factorization, AMatrix};

fn contexts() -> Vec<AlgebraCtx> {
    vec![
        AlgebraCtx::rationals(2),
        AlgebraCtx::parse(FieldSpec::Rationals, "-5/3").unwrap(),
        AlgebraCtx::parse(FieldSpec::prime(7).unwrap(), "3").unwrap(),
        AlgebraCtx::parse(FieldSpec::prime(5).unwrap(), "2").unwrap(),
    ]
}

fn ctx_strategy() -> impl Strategy<Value = AlgebraCtx> {
    (0..contexts().len()).prop_map(|i| contexts()[i].clone())
}

/// The free part removed, for comparisons up to projective summands.
fn stable(m: &AModule) -> AModule {
    m.split_free().unwrap().1
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    #[test]
    fn random_objects_satisfy_the_identities(ctx in ctx_strategy(), seed in any::<u64>(), rank in 1usize..=4) {
        let mut rng = random::rng(seed);
        let f = random::unit_free_factorization(&ctx, &mut rng, rank).unwrap();
        prop_assert!(Factorization::new(f.c().clone(), f.d().clone(), &ctx).is_ok());
        prop_assert!(f.component_ranks().unwrap().all_full());
        prop_assert!(check_acyclic(&f).is_acyclic());
    }

    #[test]
    fn suspension_squares_to_inverse_twist(ctx in ctx_strategy(), seed in any::<u64>(), rank in 1usize..=3) {
        let mut rng = random::rng(seed);
        let f = random::unit_free_factorization(&ctx, &mut rng, rank).unwrap();
        let s = f.suspension();
        prop_assert_eq!(s.suspension(), f.twist(-1));
        prop_assert_eq!(s.twist(1).suspension().suspension(), s);
    }

    #[test]
    fn cones_and_triangles(ctx in ctx_strategy(), seed in any::<u64>(), r1 in 1usize..=2, r2 in 1usize..=2) {
        let mut rng = random::rng(seed);
        let a = random::unit_free_factorization(&ctx, &mut rng, r1).unwrap();
        let b = random::unit_free_factorization(&ctx, &mut rng, r2).unwrap();
        let theta = random::morphism(&a, &b, &mut rng);
        let tri = standard_triangle(&theta).unwrap();
        prop_assert_eq!(tri.cone.rank(), r1 + r2);
        prop_assert!(tri.inclusion.then(&tri.projection).unwrap().is_zero());
        prop_assert!(theta.then(&tri.inclusion).unwrap().is_nullhomotopic());
        prop_assert!(tri.projection.then(&theta.suspension_map()).unwrap().is_nullhomotopic());
        let zero_cone = mapping_cone(&FactMorphism::zero(&a, &b)).unwrap();
        prop_assert_eq!(zero_cone, a.suspension().direct_sum(&b).unwrap());
    }

    #[test]
    fn nullhomotopy_is_a_congruence(ctx in ctx_strategy(), seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let a = random::unit_free_factorization(&ctx, &mut rng, 1).unwrap();
        let b = random::unit_free_factorization(&ctx, &mut rng, 2).unwrap();
        let c = random::unit_free_factorization(&ctx, &mut rng, 1).unwrap();
        let f = ctx.field();
        let h = Homotopy {
            s: random::b_matrix(f, &mut rng, 1, 2),
            t: random::b_matrix(f, &mut rng, 1, 2),
        };
        let null = FactMorphism::from_homotopy(&a, &b, &h).unwrap();
        prop_assert!(null.is_nullhomotopic());
        let after = random::morphism(&b, &c, &mut rng);
        let before = random::morphism(&c, &a, &mut rng);
        prop_assert!(null.then(&after).unwrap().is_nullhomotopic());
        prop_assert!(before.then(&null).unwrap().is_nullhomotopic());
    }

    #[test]
    fn reduction_respects_homotopy(ctx in ctx_strategy(), seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let a = random::unit_free_factorization(&ctx, &mut rng, 2).unwrap();
        let b = random::unit_free_factorization(&ctx, &mut rng, 1).unwrap();
        let f = ctx.field();
        let h = Homotopy {
            s: random::b_matrix(f, &mut rng, 2, 1),
            t: random::b_matrix(f, &mut rng, 2, 1),
        };
        let theta = FactMorphism::from_homotopy(&a, &b, &h).unwrap();
        // the reduced witness satisfies the same equations over A
        let (ra, rb) = (reduce_factorization(&a), reduce_factorization(&b));
        let (s, t) = (AMatrix::reduce(&h.s, &ctx), AMatrix::reduce(&h.t, &ctx));
        let p = AMatrix::reduce(theta.p(), &ctx);
        let q = AMatrix::reduce(theta.q(), &ctx);
        let p_rhs = sum(&ra.c.mul(&s, &ctx), &t.nu(&ctx, 1).mul(&rb.d, &ctx));
        let q_rhs = sum(&ra.d.nu(&ctx, -1).mul(&t, &ctx), &s.mul(&rb.c, &ctx));
        prop_assert_eq!(p, p_rhs);
        prop_assert_eq!(q, q_rhs);
    }

    #[test]
    fn unit_stripping(ctx in ctx_strategy(), seed in any::<u64>(), rank in 1usize..=2, trivial in 1usize..=2) {
        let mut rng = random::rng(seed);
        let base = random::unit_free_factorization(&ctx, &mut rng, rank).unwrap();
        let mut padded = base.clone();
        for i in 0..trivial {
            let t = if i % 2 == 0 { Factorization::trivial(&ctx) } else { Factorization::trivial(&ctx).suspension() };
            padded = padded.direct_sum(&t).unwrap();
        }
        let n = padded.rank();
        let f = ctx.field();
        let (g, _) = padded
            .conjugate(&random::invertible_b_matrix(f, &mut rng, n), &random::invertible_b_matrix(f, &mut rng, n))
            .unwrap();
        let s = strip_units(&g).unwrap();
        prop_assert!(s.reduced.is_unit_free());
        prop_assert_eq!(s.reduced.rank(), rank);
        prop_assert!(s.embed.then(&s.project).unwrap() == FactMorphism::identity(&s.reduced));
        let loop_back = s.project.then(&s.embed).unwrap();
        prop_assert!(loop_back.is_homotopic_to(&FactMorphism::identity(&g)).unwrap());
        prop_assert!(stable(&image_module(&g)).is_isomorphic(&stable(&image_module(&s.reduced))));

        // verdicts are unchanged under transport along the elimination maps
        let theta = random::morphism(&s.reduced, &s.reduced, &mut rng);
        let moved = s.project.then(&theta).unwrap().then(&s.embed).unwrap();
        prop_assert_eq!(theta.is_nullhomotopic(), moved.is_nullhomotopic());
    }

    #[test]
    fn image_modules_are_additive_with_full_rank_actions(ctx in ctx_strategy(), seed in any::<u64>(), r1 in 1usize..=2, r2 in 1usize..=2) {
        let mut rng = random::rng(seed);
        let a = random::unit_free_factorization(&ctx, &mut rng, r1).unwrap();
        let b = random::unit_free_factorization(&ctx, &mut rng, r2).unwrap();
        let sum = a.direct_sum(&b).unwrap();
        let img = image_module(&sum);
        prop_assert_eq!(img.x().rank(), r1 + r2);
        prop_assert_eq!(img.y().rank(), r1 + r2);
        prop_assert!(img.is_isomorphic(&image_module(&a).direct_sum(&image_module(&b)).unwrap()));
        prop_assert!(image_module(&a).betti_sequence(4).betti.iter().all(|&g| g == r1));
    }

    #[test]
    fn classification_is_a_complete_invariant(ctx in ctx_strategy(), seed in any::<u64>(), n in 1usize..=4) {
        let mut rng = random::rng(seed);
        let f = ctx.field();
        let lambda = if seed % 5 == 0 { ExtScalar::Infinity } else { ExtScalar::Finite(random::scalar(f, &mut rng, 9)) };
        let m = AModule::family(n, &lambda, &ctx).unwrap();
        prop_assert!(m.classify().unwrap().is_single(n, &lambda));
        let s = random::invertible_matrix(f, &mut rng, 2 * n);
        let moved = m.change_basis(&s).unwrap();
        prop_assert!(moved.is_isomorphic(&m));
        prop_assert!(moved.find_isomorphism(&m).is_some());
        prop_assert!(m.syzygy().syzygy().is_isomorphic(&m.twist(-1)));
    }

    #[test]
    fn rank_one_solutions_only_at_minus_inverse_q(q in prop_oneof![-9i64..=-1, 1i64..=9], num in -20i64..=20, den in 1i64..=6) {
        prop_assume!(num != 0);
        let ctx = AlgebraCtx::rationals(q);
        let alpha = ctx.field().ratio(num, den).unwrap();
        prop_assert_eq!(rank_one_scan(&alpha, &ctx).is_some(), alpha == -ctx.q_inv());
        prop_assert!(rank_one_scan(&-ctx.q_inv(), &ctx).unwrap().satisfies(&-ctx.q_inv(), &ctx));
    }
}

fn sum(a: &AMatrix, b: &AMatrix) -> AMatrix {
    let field = a.entry(0, 0).field();
    AMatrix::from_fn(field, a.rows(), a.cols(), |i, j| {
        a.entry(i, j) + b.entry(i, j)
    })
}
