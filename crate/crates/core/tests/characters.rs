use igr_core::characters::*;
use igr_core::weights::{enumerate_bounded, enumerate_diagrams};
use num_bigint::BigInt;
use num_traits::{One, Zero};

#[test]
fn lr_agrees_with_character_products() {
    for len in 1..=3usize {
        let ws = enumerate_bounded(len, 0, 3);
        for a in &ws {
            for b in &ws {
                let chi = irreducible_character(Group::Gl(len), a)
                    .unwrap()
                    .mul(&irreducible_character(Group::Gl(len), b).unwrap());
                let d = decompose(&chi).unwrap();
                let lr = lr_tensor(a, b).unwrap();
                let lr_as: Vec<(Vec<i64>, BigInt)> = lr
                    .iter()
                    .map(|(g, c)| (g.clone(), BigInt::from(*c)))
                    .collect();
                let d_as: Vec<(Vec<i64>, BigInt)> = d.terms.clone().into_iter().collect();
                assert_eq!(lr_as, d_as, "{a:?} ⊗ {b:?}");
            }
        }
    }
}

#[test]
fn lr_with_negative_entries() {
    let a = [1, -1];
    let b = [0, -2];
    let chi = irreducible_character(Group::Gl(2), &a)
        .unwrap()
        .mul(&irreducible_character(Group::Gl(2), &b).unwrap());
    let d = decompose(&chi).unwrap();
    for (g, c) in lr_tensor(&a, &b).unwrap().iter() {
        assert_eq!(d.multiplicity(g), BigInt::from(*c));
    }
    assert_eq!(d.terms.len(), lr_tensor(&a, &b).unwrap().len());
}

#[test]
fn weyl_dimension_matches_character_size() {
    for n in 1..=3 {
        for w in enumerate_bounded(n, 0, 3) {
            for g in [Group::Gl(n), Group::Sp(n)] {
                let chi = irreducible_character(g, &w).unwrap();
                assert_eq!(
                    chi.eval_ones(),
                    weyl_dimension(g, &w).unwrap(),
                    "{g:?} {w:?}"
                );
            }
        }
    }
}

#[test]
fn sp_tensor_dimension() {
    for m in 1..=3 {
        for a in enumerate_diagrams(m, 2) {
            for b in enumerate_diagrams(m, 2) {
                let d = sp_tensor(m, &a, &b).unwrap();
                assert!(d.is_nonnegative());
                let total: BigInt = d
                    .terms
                    .iter()
                    .map(|(w, c)| c * weyl_dimension(Group::Sp(m), w).unwrap())
                    .sum();
                assert_eq!(
                    total,
                    weyl_dimension(Group::Sp(m), &a).unwrap()
                        * weyl_dimension(Group::Sp(m), &b).unwrap()
                );
            }
        }
    }
}

#[test]
fn decompose_rejects_non_invariant() {
    let c = Character::monomial(vec![Group::Gl(2)], vec![0, 1], BigInt::one());
    assert!(decompose(&c).is_err());
}

#[test]
fn branching_conserves_dimension_and_hat_mu_multiplicity_one() {
    for t in 1..=2usize {
        for m in 0..=3usize {
            for a in 0..=2i64 {
                for mu in enumerate_diagrams(m, a) {
                    let mut theta = vec![a; t];
                    theta.extend_from_slice(&mu);
                    let br = branch_sp_to_gl_sp(&theta, t, m).unwrap();
                    let total: BigInt = br
                        .iter()
                        .map(|(g, s, c)| {
                            c * weyl_dimension(Group::Gl(t), g).unwrap()
                                * weyl_dimension(Group::Sp(m), s).unwrap()
                        })
                        .sum();
                    assert_eq!(total, weyl_dimension(Group::Sp(m + t), &theta).unwrap());
                    // Leading term Σ^{a^t}(U_k/U_{k−t}) ⊗ Σ^μ S: weight (−a)^t in the dual convention.
                    let lead = vec![-a; t];
                    let mult: BigInt = br
                        .iter()
                        .filter(|(g, s, _)| *g == lead && s[..] == mu[..])
                        .map(|(_, _, c)| c.clone())
                        .sum();
                    assert!(mult.is_one(), "θ={theta:?} t={t}");
                    for (g, s, c) in br.iter() {
                        assert!(*c > BigInt::zero());
                        // γ = −rev(g) ≤ a entrywise; η ∈ YD^a
                        assert!(g.iter().all(|&x| x >= -a), "{g:?}");
                        assert!(s.iter().all(|&x| (0..=a).contains(&x)), "{s:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn branching_example() {
    let br = branch_sp_to_gl_sp(&[1, 0], 1, 1).unwrap();
    let mut got: Vec<_> = br
        .iter()
        .map(|(g, s, c)| (g.clone(), s.clone(), c.clone()))
        .collect();
    got.sort();
    assert_eq!(
        got,
        vec![
            (vec![-1], vec![0], BigInt::one()),
            (vec![0], vec![1], BigInt::one()),
            (vec![1], vec![0], BigInt::one())
        ]
    );
    assert_eq!(branch_sp_to_gl_sp(&[0, 0], 1, 1).unwrap().len(), 1);
}
