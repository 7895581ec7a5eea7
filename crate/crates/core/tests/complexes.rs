use igr_core::bbw::Space;
use igr_core::complexes::*;
use igr_core::weights::enumerate_bounded;

#[test]
fn secondary_staircase_small_sweep() {
    for n in 2..=4usize {
        for k in 2..=n {
            let w = (2 * n - k) as i64;
            for a1 in 0..=w.min(3) {
                for abar in enumerate_bounded(k - 2, 0, w.min(3)) {
                    let mut alpha = vec![a1];
                    alpha.extend(abar);
                    let h = build_secondary_staircase(&alpha, k, n).unwrap();
                    let r = check_ktheory_exact(&h).unwrap();
                    assert!(
                        r.exact_in_k,
                        "n={n} k={k} α={alpha:?} defect={:?}",
                        r.defect
                    );
                }
            }
        }
    }
}

#[test]
fn k_class_resolutions_agree_and_duality() {
    for n in 2..=3usize {
        for l in 1..=n {
            let space = Space::igr(l, n).unwrap();
            let amb = 2 * n;
            for alpha in enumerate_bounded(l, -2, 3) {
                let kc = k_class(&alpha, &space).unwrap();
                assert!(kc.resolutions_agree(), "{alpha:?} on IGr({l},{n})");
                if alpha[0] >= 0 && alpha[0] - alpha[l - 1] <= (amb - l) as i64 {
                    let lhs = c_class(&alpha, &space).unwrap();
                    let rhs = k_class(&dual_weight(&alpha, amb), &space)
                        .unwrap()
                        .kernels
                        .twisted(1);
                    assert_eq!(lhs, rhs, "{alpha:?} on IGr({l},{n})");
                }
            }
        }
    }
}
