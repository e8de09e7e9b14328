//! Cross-module checks through the public API.

use num_bigint::BigInt;
use proptest::prelude::*;

use schubert_core::exterior::ExteriorElement;
use schubert_core::kp::{kp_integer_check, kp_residue_check, QPolynomial};
use schubert_core::partitions::{enumerate_partitions, Partition};
use schubert_core::pluecker::{
    classical_criterion, exterior_residue_check, perturb, pluecker_ideal, random_decomposable, ring_residue_check,
    Variant, DEFAULT_VARIANT,
};
use schubert_core::symmetric::{phi, phi_inverse, schur_combination, schur_delta, TensorCoefficients};

#[test]
fn ideal_vanishes_on_decomposables() {
    for (r, n) in [(2, 4), (2, 5), (2, 6), (3, 6)] {
        let ideal = pluecker_ideal(r, n).unwrap();
        assert!(!ideal.is_empty());
        for seed in 0..100 {
            let t = random_decomposable(r, n, seed).unwrap();
            for q in &ideal {
                assert_eq!(q.evaluate(&t), BigInt::from(0), "r={r} n={n} seed={seed} {q}");
            }
        }
    }
}

#[test]
fn ideal_detects_perturbations() {
    for (r, n) in [(2, 4), (2, 5), (3, 6)] {
        let ideal = pluecker_ideal(r, n).unwrap();
        for seed in 0..40 {
            let t = perturb(&random_decomposable(r, n, seed).unwrap(), n, seed).unwrap();
            let vanishes = ideal.iter().all(|q| q.evaluate(&t) == BigInt::from(0));
            assert_eq!(vanishes, classical_criterion(&t.to_exterior()).unwrap());
        }
    }
}

#[test]
fn tensor_json_survives_the_predicates() {
    let t = random_decomposable(3, 6, 5).unwrap();
    let back = TensorCoefficients::from_json(&t.to_json()).unwrap();
    assert_eq!(back, t);
    assert!(ring_residue_check(&back).unwrap().decomposable);
}

#[test]
fn exterior_json_roundtrip_keeps_the_verdict() {
    let m = ExteriorElement::monomial(&[0, 1]).add(&ExteriorElement::monomial(&[2, 3]));
    let back = ExteriorElement::from_json(&m.to_json()).unwrap();
    assert_eq!(back, m);
    assert!(!classical_criterion(&back).unwrap());
    assert!(!exterior_residue_check(&back, DEFAULT_VARIANT).unwrap());
    assert_eq!(DEFAULT_VARIANT, Variant::PlusOuter);
}

#[test]
fn schur_taus_pass_both_limits() {
    let w = 6u32;
    for lambda in enumerate_partitions(3, 5).unwrap() {
        let p = schur_delta(&lambda, w as usize);
        assert!(kp_integer_check(&p, w).unwrap().decomposable, "{lambda}");
        assert!(kp_residue_check(&QPolynomial::from_epolynomial(&p, w).unwrap()).unwrap().passes, "{lambda}");
    }
}

fn arb_tensor() -> impl Strategy<Value = TensorCoefficients> {
    let basis = enumerate_partitions(2, 5).unwrap();
    prop::collection::vec((0..basis.len(), -3i64..=3), 1..4).prop_map(move |entries| {
        let mut t = TensorCoefficients::new(2);
        for (i, c) in entries {
            t.add(basis[i].clone(), BigInt::from(c)).unwrap();
        }
        t
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn three_predicates_agree(t in arb_tensor()) {
        let m = t.to_exterior();
        let classical = classical_criterion(&m).unwrap();
        prop_assert_eq!(ring_residue_check(&t).unwrap().decomposable, classical);
        prop_assert_eq!(exterior_residue_check(&m, DEFAULT_VARIANT).unwrap(), classical);
        prop_assert_eq!(m.wedge(&m).is_empty(), classical);
    }

    #[test]
    fn phi_roundtrip(t in arb_tensor()) {
        let p = schur_combination(&t);
        prop_assert_eq!(phi_inverse(&phi(&p, 2).unwrap()), t);
    }
}

#[test]
fn empty_partition_is_the_vacuum() {
    let vac = ExteriorElement::basis(&Partition::empty(), 3).unwrap();
    assert_eq!(vac, ExteriorElement::monomial(&[0, 1, 2]));
}
