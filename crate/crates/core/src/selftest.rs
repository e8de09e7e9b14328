//! The acceptance suite, shared by `schubert selftest` and the
//! `acceptance` test target.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::derivations::{
    apply_component, bar_minus_mirror_holds, bar_plus_mirror_holds, giambelli, integration_by_parts_holds,
    pieri_expand, SchubertKind,
};
use crate::error::Result;
use crate::exterior::ExteriorElement;
use crate::kp::{gamma_boson, gamma_via_h, h_in_x, kp_integer_check, kp_residue_check, QPolynomial};
use crate::laurent::Laurent;
use crate::partitions::{enumerate_partitions, partitions_of_weight, Partition};
use crate::pluecker::{
    classical_criterion, exterior_residue_check, perturb, pluecker_ideal, random_decomposable, ring_residue_check,
    DEFAULT_VARIANT,
};
use crate::symmetric::{
    h, laksov_thorup, phi_inverse, schur_combination, schur_delta, schur_delta_transformed, sigma_minus_poly,
    EPolynomial,
};

#[derive(Clone, Debug)]
pub struct Outcome {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub budget: Option<Duration>,
}

impl Outcome {
    pub fn line(&self) -> String {
        let budget = self.budget.map(|b| format!(" (budget {} s)", b.as_secs())).unwrap_or_default();
        format!(
            "{} criterion {:>2} {}: {} [{:.2} s{}]",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.detail,
            self.elapsed.as_secs_f64(),
            budget
        )
    }
}

type Check = fn() -> Result<(bool, String)>;

pub const CRITERIA: [(u8, &str, Option<u64>, Check); 11] = [
    (1, "Klein quadric", Some(2), klein_quadric),
    (2, "predicate equivalence", Some(60), predicate_equivalence),
    (3, "wedge square for r = 2", None, wedge_square),
    (4, "Schur commutation", Some(30), schur_commutation),
    (5, "Giambelli and Pieri", None, giambelli_pieri),
    (6, "Laksov-Thorup determinant", None, laksov_thorup_random),
    (7, "mirror lemmas", None, mirror_lemmas),
    (8, "worked rank-one values", None, worked_values),
    (9, "KP tau functions", Some(60), kp_taus),
    (10, "bosonization", None, bosonization),
    (11, "integration by parts", None, integration_by_parts),
];

pub fn run(id: u8) -> Option<Outcome> {
    let &(id, name, budget, check) = CRITERIA.iter().find(|c| c.0 == id)?;
    let start = Instant::now();
    let result = check();
    let elapsed = start.elapsed();
    let budget = budget.map(Duration::from_secs);
    let (mut passed, mut detail) = match result {
        Ok(v) => v,
        Err(e) => (false, format!("error: {e}")),
    };
    if let Some(b) = budget {
        if elapsed > b {
            passed = false;
            detail.push_str("; over the time budget");
        }
    }
    Some(Outcome { id, name, passed, detail, elapsed, budget })
}

pub fn run_all() -> Vec<Outcome> {
    CRITERIA.iter().filter_map(|c| run(c.0)).collect()
}

fn verdict(failures: usize, total: usize, what: &str) -> (bool, String) {
    (failures == 0, format!("{total} {what}, {failures} failures"))
}

fn klein_quadric() -> Result<(bool, String)> {
    let ideal = pluecker_ideal(2, 4)?;
    let text: Vec<String> = ideal.iter().map(|q| q.to_string()).collect();
    let ok = text == ["a[1,1]*a[2] - a[1]*a[2,1] + a[]*a[2,2]"];
    Ok((ok, format!("{} quadric(s): {}", ideal.len(), text.join("; "))))
}

fn corpus(r: usize, n: usize) -> Result<Vec<crate::symmetric::TensorCoefficients>> {
    let mut out = Vec::with_capacity(200);
    for seed in 0..100u64 {
        let t = random_decomposable(r, n, seed)?;
        out.push(perturb(&t, n, seed)?);
        out.push(t);
    }
    Ok(out)
}

fn predicate_equivalence() -> Result<(bool, String)> {
    let mut disagreements = 0;
    let mut total = 0;
    let mut decomposable = 0;
    for (r, n) in [(2, 4), (2, 5), (3, 6)] {
        for t in corpus(r, n)? {
            let m = t.to_exterior();
            let classical = classical_criterion(&m)?;
            let second = ring_residue_check(&t)?.decomposable;
            let first = exterior_residue_check(&m, DEFAULT_VARIANT)?;
            total += 1;
            decomposable += classical as usize;
            if classical != second || classical != first {
                disagreements += 1;
            }
        }
    }
    Ok((disagreements == 0, format!("{total} tensors ({decomposable} decomposable), {disagreements} disagreements")))
}

fn wedge_square() -> Result<(bool, String)> {
    let mut failures = 0;
    let mut total = 0;
    for n in [4, 5] {
        for t in corpus(2, n)? {
            let m = t.to_exterior();
            total += 1;
            if classical_criterion(&m)? != m.wedge(&m).is_empty() {
                failures += 1;
            }
        }
    }
    Ok(verdict(failures, total, "tensors"))
}

fn schur_commutation() -> Result<(bool, String)> {
    let mut failures = 0;
    let mut total = 0;
    for r in 1..=4 {
        for lambda in enumerate_partitions(r, r + 4)? {
            let p = schur_delta(&lambda, r);
            for barred in [false, true] {
                total += 1;
                if sigma_minus_poly(&p, r, barred)? != schur_delta_transformed(&lambda, r, barred) {
                    failures += 1;
                }
            }
        }
    }
    Ok(verdict(failures, total, "(λ, operator) cases"))
}

fn giambelli_pieri() -> Result<(bool, String)> {
    let mut failures = 0;
    let mut total = 0;
    for r in 1..=4 {
        for w in 0..=8u32 {
            for lambda in partitions_of_weight(w, r) {
                let basis = ExteriorElement::basis(&lambda, r)?;
                total += 1;
                if giambelli(&lambda, r)? != basis {
                    failures += 1;
                }
                for i in 0..=8 - w {
                    total += 1;
                    if pieri_expand(i, &lambda, r)? != apply_component(SchubertKind::SigmaPlus, i, &basis) {
                        failures += 1;
                    }
                }
            }
        }
    }
    Ok(verdict(failures, total, "cases"))
}

fn laksov_thorup_random() -> Result<(bool, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut failures = 0;
    for _ in 0..50 {
        let r = rng.gen_range(1..=3usize);
        let fs: Vec<Vec<BigInt>> = (0..r)
            .map(|_| {
                let len = rng.gen_range(1..=6usize);
                (0..len).map(|_| BigInt::from(rng.gen_range(-5i32..=5))).collect()
            })
            .collect();
        let direct = fs.iter().fold(ExteriorElement::scalar(1), |acc, f| acc.wedge(&ExteriorElement::vector(f)));
        if laksov_thorup(&fs, r)? != schur_combination(&phi_inverse(&direct)) {
            failures += 1;
        }
    }
    Ok(verdict(failures, 50, "random tuples"))
}

fn mirror_lemmas() -> Result<(bool, String)> {
    let mut plus_failures = 0;
    let mut full_failures = 0;
    let mut short_failures = 0;
    let mut total = 0;
    for r in 1..=4 {
        for lambda in enumerate_partitions(r, 9)? {
            let m = ExteriorElement::basis(&lambda, r)?;
            total += 1;
            if !bar_plus_mirror_holds(&m) {
                plus_failures += 1;
            }
            let holds = bar_minus_mirror_holds(&m);
            if lambda.length() == r && !holds {
                full_failures += 1;
            }
            if lambda.length() < r && !holds {
                short_failures += 1;
            }
        }
    }
    Ok((
        plus_failures == 0 && full_failures == 0 && short_failures > 0,
        format!(
            "{total} wedges; first identity {plus_failures} failures; second identity {full_failures} failures \
             with λ_r > 0, {short_failures} expected failures with λ_r = 0"
        ),
    ))
}

fn worked_values() -> Result<(bool, String)> {
    let lambda = Partition::new(vec![1, 1])?;
    let a = schur_delta(&lambda, 1).is_zero();
    let b = schur_delta_transformed(&lambda, 1, false) == Laurent::monomial(-1, h(1, 1));
    Ok((a && b, format!("Δ_(1,1)(H_1) = 0: {a}; Δ_(1,1)(σ_- H_1) = h_1/z: {b}")))
}

fn kp_taus() -> Result<(bool, String)> {
    let w = 8u32;
    let rank = w as usize;
    let mut failures = 0;
    let mut total = 0;
    for weight in 0..=4 {
        for lambda in partitions_of_weight(weight, 4) {
            let p = schur_delta(&lambda, rank);
            let integer = kp_integer_check(&p, w)?.decomposable;
            let rational = kp_residue_check(&QPolynomial::from_epolynomial(&p, w)?)?.passes;
            total += 1;
            if !integer || !rational {
                failures += 1;
            }
        }
    }
    let klein = EPolynomial::one(rank).add(&schur_delta(&Partition::new(vec![2, 2])?, rank));
    let report = kp_integer_check(&klein, w)?;
    let rational = kp_residue_check(&QPolynomial::from_epolynomial(&klein, w)?)?;
    let klein_ok = !report.decomposable
        && report.first_nonzero.as_ref().is_some_and(|c| !c.2.is_zero())
        && !rational.passes
        && rational.first_nonzero.as_ref().is_some_and(|c| !c.2.is_zero());
    let coeff = report.first_nonzero.map(|c| format!("{:?} ⊗ {:?} ↦ {}", c.0, c.1, c.2)).unwrap_or_default();
    Ok((
        failures == 0 && klein_ok,
        format!("{total} Schur taus pass ({failures} failures); 1 + Δ_(2,2) rejected: {klein_ok}, first coefficient {coeff}"),
    ))
}

fn bosonization() -> Result<(bool, String)> {
    let w = 10;
    let mut failures = 0;
    for n in 0..=5 {
        for star in [false, true] {
            if gamma_boson(&h_in_x(n, w)?, star, -1, 4)? != gamma_via_h(n, star, w)?.restrict(-1, 4) {
                failures += 1;
            }
        }
    }
    Ok(verdict(failures, 12, "cases"))
}

fn random_element(rng: &mut ChaCha8Rng, degree: usize) -> ExteriorElement {
    let mut m = ExteriorElement::zero(degree);
    for _ in 0..rng.gen_range(1..=3) {
        let mut idx: Vec<u32> = (0..=6).collect();
        for i in (1..idx.len()).rev() {
            idx.swap(i, rng.gen_range(0..=i));
        }
        let mono = ExteriorElement::monomial(&idx[..degree]);
        m = m.add(&mono.scale(&BigInt::from(rng.gen_range(-4i32..=4))));
    }
    m
}

fn integration_by_parts() -> Result<(bool, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut failures = 0;
    for _ in 0..100 {
        let d1 = rng.gen_range(0..=3);
        let d2 = rng.gen_range(0..=3);
        let m1 = random_element(&mut rng, d1);
        let m2 = random_element(&mut rng, d2);
        let ok = [
            SchubertKind::SigmaPlus,
            SchubertKind::SigmaBarPlus,
            SchubertKind::SigmaMinus,
            SchubertKind::SigmaBarMinus,
        ]
        .into_iter()
        .all(|d| integration_by_parts_holds(d, &m1, &m2, 8));
        if !ok {
            failures += 1;
        }
    }
    Ok(verdict(failures, 100, "pairs, both operator pairs"))
}
