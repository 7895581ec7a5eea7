use igr_core::collections::*;
use igr_core::weights::BlockWeight;

fn applicable(n: usize, k: usize, t: usize) -> Vec<BlockWeight> {
    block(n, k, t, hypothesis_kind(k, t)).unwrap().weights
}

#[test]
fn f_is_a_bundle_in_the_big_block_span() {
    for (n, k) in [(3, 2), (4, 2), (4, 3)] {
        for t in 0..=k {
            for w in applicable(n, k, t) {
                let r = f_class(t, &w.gl, &w.sp, n, k).unwrap();
                assert!(
                    r.concentrated_degree_zero,
                    "n={n} k={k} t={t} {w}: {:?}",
                    r.virtual_class
                );
                assert!(r.in_big_block_span, "n={n} k={k} t={t} {w}");
            }
        }
    }
}

#[test]
fn generic_pushforward_matches_endpoint() {
    // t = k−1: the pushforward recovers Σ^λ U_k.
    for (n, k) in [(3, 2), (4, 3)] {
        let t = k - 1;
        for w in applicable(n, k, t) {
            let direct = dual_generator(n, k, &w).unwrap();
            assert_eq!(phi_hat(t, &w.gl, &w.sp, n, k).unwrap(), direct, "{w}");
        }
    }
}

#[test]
fn dual_characterization_exhaustive_3_2() {
    for t in 0..=2 {
        for w in applicable(3, 2, t) {
            let r = verify_dual_characterization(t, &w.gl, &w.sp, 3, 2).unwrap();
            assert!(r.pass, "{r:?}");
        }
    }
}

#[test]
fn exceptional_blocks() {
    for (n, k) in [(3, 2), (4, 2)] {
        let b = block(n, k, k, BlockKind::Big).unwrap();
        let r = verify_block_exceptionality(&b).unwrap();
        assert!(r.pass() && r.higher_ext_vanish, "{r:?}");
    }
    for (t, kind) in [(0, BlockKind::Small), (1, BlockKind::Big)] {
        let r = verify_block_exceptionality(&block(3, 2, t, kind).unwrap()).unwrap();
        assert!(r.pass(), "{r:?}");
    }
}
