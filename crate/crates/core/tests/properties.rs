//! Property suites for the structural invariants that do not depend on any
//! reference value: scale invariance, monomial equivalence, duality, and
//! the distance correspondence between codes and their column systems.

use cohyper::checks::{is_intersecting_supports, sufficient_2d_gt_n};
use cohyper::code::LinearCode;
use cohyper::field::{make_field, FieldElem};
use cohyper::geometry::ProjectiveSystem;
use cohyper::matrix::Matrix;
use proptest::prelude::*;

/// Small parameter pool: (p, h, k, n) with q^k well inside the budgets.
fn params() -> impl Strategy<Value = (u64, u32, usize, usize)> {
    prop_oneof![
        (Just(2u64), Just(1u32), 2usize..5, 0usize..4),
        (Just(3u64), Just(1u32), 2usize..4, 0usize..4),
        (Just(2u64), Just(2u32), 2usize..4, 0usize..3),
        (Just(5u64), Just(1u32), 2usize..3, 0usize..4),
    ]
    .prop_map(|(p, h, k, extra)| (p, h, k, k + 1 + extra))
}

fn arb_code() -> impl Strategy<Value = LinearCode> {
    params().prop_flat_map(|(p, h, k, n)| {
        let q = p.pow(h);
        proptest::collection::vec(0..q, k * n).prop_filter_map(
            "full rank and nondegenerate",
            move |entries| {
                let ctx = make_field(p, h).unwrap();
                let rows: Vec<Vec<u64>> =
                    entries.chunks(n).map(|c| c.to_vec()).collect();
                let m = Matrix::from_rows(ctx, &rows).ok()?;
                if (0..n).any(|c| m.is_zero_column(c)) {
                    return None;
                }
                LinearCode::new(m).ok()
            },
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Singleton: d <= n - k + 1 on every generated code.
    #[test]
    fn singleton_bound(code in arb_code()) {
        let d = code.min_distance().unwrap();
        prop_assert!(d <= code.n() - code.k() + 1);
        prop_assert!(d >= 1);
    }

    /// Column permutation and nonzero column scaling never change the
    /// minimum distance or the intersecting verdict.
    #[test]
    fn monomial_equivalence(code in arb_code(), seed in any::<u64>()) {
        use rand::{Rng, SeedableRng};
        let ctx = code.ctx().clone();
        let (n, k) = (code.n(), code.k());
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            perm.swap(i, rng.gen_range(0..=i));
        }
        let mut g = Matrix::zero(ctx.clone(), k, n);
        for (new_c, &old_c) in perm.iter().enumerate() {
            let scale = FieldElem(rng.gen_range(1..ctx.q()));
            for r in 0..k {
                g.set(r, new_c, ctx.mul(scale, code.generator().get(r, old_c)));
            }
        }
        let twisted = LinearCode::new(g).unwrap();
        prop_assert_eq!(
            code.min_distance().unwrap(),
            twisted.min_distance().unwrap()
        );
        prop_assert_eq!(
            is_intersecting_supports(&code).unwrap().verdict,
            is_intersecting_supports(&twisted).unwrap().verdict
        );
    }

    /// The dual of the dual spans the original row space.
    #[test]
    fn dual_involution(code in arb_code()) {
        prop_assume!(code.k() < code.n());
        let dd = code.dual().unwrap().dual().unwrap();
        let (_, a) = code.generator().rank_and_rref();
        let (_, b) = dd.generator().rank_and_rref();
        prop_assert_eq!(a, b);
    }

    /// Distance through the geometry: d = n - max hyperplane cover,
    /// multiplicities counted.
    #[test]
    fn distance_correspondence(code in arb_code()) {
        let system = ProjectiveSystem::from_generator(code.generator()).unwrap();
        prop_assert_eq!(
            code.min_distance().unwrap(),
            system.geometric_min_distance()
        );
    }

    /// Weight-criterion soundness: 2d > n forces the intersecting verdict.
    #[test]
    fn weight_criterion_sound(code in arb_code()) {
        if sufficient_2d_gt_n(&code).unwrap() {
            prop_assert!(is_intersecting_supports(&code).unwrap().verdict);
        }
    }

    /// Support arithmetic: w(x) = |sigma(x)| and w(x) = 0 iff x = 0, on
    /// every enumerated codeword.
    #[test]
    fn support_weight_consistency(code in arb_code()) {
        for w in code.projective_codewords().unwrap() {
            prop_assert_eq!(w.weight(), w.support().len());
            prop_assert!(!w.is_zero());
            let mask = w.support_mask().unwrap();
            prop_assert_eq!(mask.count_ones() as usize, w.weight());
        }
    }

    /// Growing a non-2-cohyperplanar system never makes it coverable.
    #[test]
    fn n2c_is_monotone(code in arb_code(), extra in proptest::collection::vec(any::<u64>(), 1..3)) {
        let system = ProjectiveSystem::from_generator(code.generator()).unwrap();
        let (covered, _) = system.is_t_cohyperplanar(2).unwrap();
        prop_assume!(!covered);
        let ctx = code.ctx().clone();
        let k = code.k();
        let mut pts: Vec<_> =
            system.points().iter().map(|(p, _)| p.clone()).collect();
        for e in extra {
            let coords: Vec<FieldElem> = (0..k)
                .map(|i| FieldElem(((e >> (4 * i)) % ctx.q() as u64) as u32))
                .collect();
            if coords.iter().any(|c| !c.is_zero()) {
                pts.push(cohyper::geometry::ProjectivePoint::new(&ctx, coords).unwrap());
            }
        }
        let grown = ProjectiveSystem::new(ctx, k, pts).unwrap();
        prop_assert!(!grown.is_t_cohyperplanar(2).unwrap().0);
    }
}
