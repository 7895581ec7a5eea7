use igr_core::staircase::*;
use igr_core::weights::{enumerate_bounded, enumerate_diagrams, size};
use proptest::prelude::*;

fn check_invariants(alpha: &[i64]) {
    let s = Staircase::new(alpha).unwrap();
    let v = s.v();
    assert!(v >= 0 && v < alpha.len() as i64);
    assert_eq!(v, s.v_from_definition(), "{alpha:?}");
    for i in -3..=alpha[0] + v + 3 {
        assert!(s.z(i) > s.z(i + 1));
        assert!(s.b(i) < s.b(i + 1));
        assert_eq!(
            s.b(i),
            size(alpha) - size(&s.alpha_i(i)),
            "def:b {alpha:?} i={i}"
        );
        assert_eq!(s.b(i), i - v + s.d(i) as i64 - 1, "b=i-v+d {alpha:?} i={i}");
        assert_eq!(
            s.d(i + 1) as i64 - s.d(i) as i64,
            s.z(i) - s.z(i + 1) - 1,
            "difference {alpha:?} i={i}"
        );
        assert_eq!(s.d(i), s.d_ineq(i), "d-ineq {alpha:?} i={i}");
        assert_eq!(s.alpha_i(i), s.alpha_i_explicit(i));
    }
}

#[test]
fn alpha_3221_fixture() {
    let d = staircase_data(&[3, 2, 2, 1], -1, 5, None).unwrap();
    assert_eq!(d.vset, vec![-2, 0, 1]);
    let z: Vec<i64> = d.rows.iter().map(|r| r.z).collect();
    assert_eq!(z, vec![4, 3, 2, -1, -3, -4, -5]);
    let dd: Vec<usize> = d.rows.iter().map(|r| r.d).collect();
    assert_eq!(dd, vec![1, 1, 1, 3, 4, 4, 4]);
    for zz in [2, 3, 4] {
        assert_eq!(d_of_z(&[2, 2, 1], zz), 1);
    }
    assert_eq!(d_of_z(&[2, 2, 1], -1), 3);
    for zz in [-3, -4, -5] {
        assert_eq!(d_of_z(&[2, 2, 1], zz), 4);
    }
}

#[test]
fn exhaustive_small_invariants() {
    for len in 1..=4usize {
        for abar in enumerate_bounded(len - 1, -2, 3) {
            for a1 in -3..=5 {
                let mut alpha = vec![a1];
                alpha.extend(&abar);
                check_invariants(&alpha);
            }
        }
    }
}

#[test]
fn sequence_depends_only_on_abar() {
    for abar in enumerate_bounded(3, -1, 3) {
        let mut a = vec![0];
        a.extend(&abar);
        let mut b = vec![4];
        b.extend(&abar);
        let (sa, sb) = (Staircase::new(&a).unwrap(), Staircase::new(&b).unwrap());
        let shift = (0..20)
            .find(|&s| sb.alpha_i(s) == sa.alpha_i(0))
            .expect("shift exists");
        for i in -5..10 {
            assert_eq!(sa.alpha_i(i), sb.alpha_i(i + shift));
        }
    }
}

#[test]
fn insertion_roundtrip_is_unique() {
    for t in 1..=4usize {
        for beta in enumerate_diagrams(t, 4) {
            for d in 1..=t {
                for b in d as i64..=d as i64 + 3 {
                    let alpha = ins(&beta, b, d).unwrap();
                    let s = Staircase::new(&alpha).unwrap();
                    let hits: Vec<i64> = (-10..=alpha[0] + 10)
                        .filter(|&i| s.alpha_i(i) == beta[..] && s.b(i) == b && s.d(i) == d)
                        .collect();
                    assert_eq!(hits.len(), 1, "β={beta:?} b={b} d={d}");
                }
            }
        }
    }
}

#[test]
fn varrho_is_the_b_equals_d_case() {
    for t in 1..=4usize {
        for beta in enumerate_diagrams(t, 3) {
            for d in 1..=t {
                let r = varrho(&beta, d).unwrap();
                assert_eq!(r[0], beta[d - 1] + 1);
                assert!(r[0] > 0);
                let s = Staircase::new(&r).unwrap();
                let i = s.i_alpha();
                assert_eq!(s.alpha_i(i), beta[..]);
                assert_eq!(s.b(i), d as i64);
                assert_eq!(s.d(i), d);
            }
        }
    }
}

#[test]
fn dominant_weights_have_no_correction() {
    for alpha in enumerate_bounded(4, -2, 3) {
        let s = Staircase::new(&alpha).unwrap();
        assert_eq!(s.v(), 0);
        assert_eq!(s.z0(), alpha[0]);
        assert_eq!(s.i_alpha(), 1);
    }
}

#[test]
fn young_diagram_bound() {
    for l in 1..=4usize {
        for w in 1..=4i64 {
            for a1 in 0..=w {
                for abar in enumerate_diagrams(l - 1, w) {
                    let mut alpha = vec![a1];
                    alpha.extend(abar.iter());
                    let s = Staircase::new(&alpha).unwrap();
                    for i in 0..=s.delta() {
                        let ai = s.alpha_i(i);
                        assert!(ai.iter().all(|&x| x >= 0) && ai[0] <= w, "{alpha:?} i={i}");
                        if s.b(i) >= 1 {
                            assert!(ai[0] < w, "{alpha:?} i={i}");
                        }
                    }
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn invariants_hold(a1 in -6i64..8, mut abar in proptest::collection::vec(-4i64..7, 0..5)) {
        abar.sort_unstable_by(|x, y| y.cmp(x));
        let mut alpha = vec![a1];
        alpha.extend(abar);
        check_invariants(&alpha);
    }

    #[test]
    fn marked_f_difference(a1 in 0i64..6, mut abar in proptest::collection::vec(0i64..6, 0..4)) {
        abar.sort_unstable_by(|x, y| y.cmp(x));
        let mut alpha = vec![a1];
        alpha.extend(abar);
        let s = Staircase::new(&alpha).unwrap();
        for i in 0..=s.delta() + 2 {
            let lhs = marked_f(&s.alpha_i(i + 1), s.b(i + 1) as usize) - marked_f(&s.alpha_i(i), s.b(i) as usize);
            let rhs = (s.b(i + 1) - s.b(i)) * (1 + 2 * (s.b(i) - s.d(i) as i64));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
