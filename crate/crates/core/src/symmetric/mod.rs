//! The ring `B_r = Z[e_1, …, e_r]`, its complete homogeneous sequence, Schur
//! determinants, and the isomorphism `φ_r : B_r → ⋀^r M_0` sending
//! `Δ_λ(H_r)` to `[b]^r_λ`.
//!
//! Schur-basis readout always goes through `φ_r`: a polynomial is mapped to
//! the exterior algebra, where the coefficients on basis wedges are the
//! Schur coefficients.

mod epoly;
mod tensor;

use std::collections::HashMap;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::Zero;

pub use epoly::EPolynomial;
pub use tensor::TensorCoefficients;

use crate::derivations::{apply_component, apply_series_exact, SchubertKind};
use crate::determinant::{determinant, CommRing};
use crate::error::{invalid, Result};
use crate::exterior::ExteriorElement;
use crate::laurent::{product_with, Laurent};
use crate::partitions::{partition_from_indices, Partition};

/// Laurent polynomials (or windowed series) over `B_r`.
pub type LaurentRing = Laurent<EPolynomial>;

impl CommRing for LaurentRing {
    fn ring_add(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn ring_mul(&self, other: &Self) -> Self {
        product_with(self, other, EPolynomial::mul)
    }
    fn ring_neg(&self) -> Self {
        self.negated()
    }
    fn ring_is_zero(&self) -> bool {
        self.is_exactly_zero()
    }
}

static MUTATE_H: AtomicBool = AtomicBool::new(false);

type HCache = Mutex<HashMap<(usize, bool), Vec<EPolynomial>>>;

fn h_cache() -> &'static HCache {
    static CACHE: OnceLock<HCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Mutation-testing hook: when set, the `h` recurrence drops its
/// alternating signs. Only meant for checking that the self-test notices.
#[doc(hidden)]
pub fn set_h_recurrence_mutation(on: bool) {
    MUTATE_H.store(on, Ordering::SeqCst);
}

pub(crate) fn h_mutation_active() -> bool {
    MUTATE_H.load(Ordering::SeqCst)
}

/// `h_n` in `B_r`, from `h_n = Σ_{i=1}^{min(n,r)} (-1)^{i+1} e_i h_{n-i}`.
pub fn h(n: i64, r: usize) -> EPolynomial {
    if n < 0 {
        return EPolynomial::zero(r);
    }
    let n = n as usize;
    let mutated = MUTATE_H.load(Ordering::SeqCst);
    let mut cache = h_cache().lock().unwrap_or_else(|e| e.into_inner());
    let seq = cache.entry((r, mutated)).or_insert_with(|| vec![EPolynomial::one(r)]);
    while seq.len() <= n {
        let m = seq.len();
        let mut next = EPolynomial::zero(r);
        for i in 1..=m.min(r) {
            let term = EPolynomial::e(i, r).mul(&seq[m - i]);
            next = if i % 2 == 1 || mutated { next.add(&term) } else { next.sub(&term) };
        }
        seq.push(next);
    }
    seq[n].clone()
}

/// `E_r(z) = 1 - e_1 z + … + (-1)^r e_r z^r`.
pub fn e_series(r: usize) -> LaurentRing {
    let mut terms = vec![(0, EPolynomial::one(r))];
    for i in 1..=r {
        let e = EPolynomial::e(i, r);
        terms.push((i as i64, if i % 2 == 0 { e } else { e.neg() }));
    }
    Laurent::exact(terms)
}

/// `Σ_{n=0}^{hi} h_n z^n`, known up to `hi`.
pub fn h_series(r: usize, hi: i64) -> LaurentRing {
    Laurent::with_window((0..=hi.max(-1)).map(|n| (n, h(n, r))), None, Some(hi))
}

/// `Δ_λ(H_r) = det(h_{λ_j - j + i})`. The determinant is taken at size
/// `ℓ(λ)`, which agrees with the `r × r` one when `ℓ(λ) ≤ r` and also
/// makes sense beyond it.
pub fn schur_delta(lambda: &Partition, r: usize) -> EPolynomial {
    let l = lambda.length();
    let m: Vec<Vec<EPolynomial>> =
        (1..=l).map(|i| (1..=l).map(|j| h(lambda.part(j) as i64 - j as i64 + i as i64, r)).collect()).collect();
    determinant(&m, &EPolynomial::one(r))
}

/// `p · [b]^r_0`, with `e_i` acting as `σ̄_i`.
pub fn phi(p: &EPolynomial, r: usize) -> Result<ExteriorElement> {
    if p.rank() != r {
        return invalid(format!("polynomial of rank {} used at rank {r}", p.rank()));
    }
    let vacuum = ExteriorElement::basis(&Partition::empty(), r)?;
    let mut memo: HashMap<Vec<u32>, ExteriorElement> = HashMap::new();
    let mut out = ExteriorElement::zero(r);
    for (exps, c) in p.terms() {
        let image = monomial_action(exps, &vacuum, &mut memo);
        out = out.add(&image.scale(c));
    }
    Ok(out)
}

fn monomial_action(
    exps: &[u32],
    vacuum: &ExteriorElement,
    memo: &mut HashMap<Vec<u32>, ExteriorElement>,
) -> ExteriorElement {
    if let Some(v) = memo.get(exps) {
        return v.clone();
    }
    let result = match exps.iter().rposition(|&k| k > 0) {
        None => vacuum.clone(),
        Some(i) => {
            let mut lower = exps.to_vec();
            lower[i] -= 1;
            let inner = monomial_action(&lower, vacuum, memo);
            apply_component(SchubertKind::SigmaBarPlus, i as u32 + 1, &inner)
        }
    };
    memo.insert(exps.to_vec(), result.clone());
    result
}

/// Reads `a_λ` off the wedge monomials of `m`.
pub fn phi_inverse(m: &ExteriorElement) -> TensorCoefficients {
    let mut out = TensorCoefficients::new(m.degree());
    for (mono, c) in m.terms() {
        let (lambda, _) = partition_from_indices(mono.indices()).expect("monomials are strictly increasing");
        out.add(lambda, c.clone()).expect("length bounded by degree");
    }
    out
}

/// `Σ a_λ Δ_λ(H_r)`.
pub fn schur_combination(t: &TensorCoefficients) -> EPolynomial {
    let mut out = EPolynomial::zero(t.rank());
    for (lambda, c) in t.coeffs() {
        out = out.add(&schur_delta(lambda, t.rank()).scale(c));
    }
    out
}

/// Schur coefficients of `p`.
pub fn schur_expand(p: &EPolynomial) -> TensorCoefficients {
    phi_inverse(&phi(p, p.rank()).expect("rank matches"))
}

/// `σ_-(z) h_n = Σ_{j=0}^{n} h_{n-j} z^{-j}` or `σ̄_-(z) h_n = h_n - h_{n-1} z^{-1}`.
pub fn sigma_minus_h(n: i64, r: usize, barred: bool) -> LaurentRing {
    if n < 0 {
        return Laurent::zero();
    }
    if barred {
        Laurent::exact([(0, h(n, r)), (-1, h(n - 1, r).neg())])
    } else {
        Laurent::exact((0..=n).map(|j| (-j, h(n - j, r))))
    }
}

/// `Δ_λ(σ_-(z) H_r)` or `Δ_λ(σ̄_-(z) H_r)`, at size `ℓ(λ)`.
pub fn schur_delta_transformed(lambda: &Partition, r: usize, barred: bool) -> LaurentRing {
    let l = lambda.length();
    let m: Vec<Vec<LaurentRing>> = (1..=l)
        .map(|i| (1..=l).map(|j| sigma_minus_h(lambda.part(j) as i64 - j as i64 + i as i64, r, barred)).collect())
        .collect();
    determinant(&m, &laurent_one(r))
}

/// `σ_-(z) p` (or `σ̄_-(z) p`) with the operator defined through the module
/// structure: `(σ_-(z) p) [b]^r_0 = σ_-(z)(p [b]^r_0)`. The e-expansion of
/// `p` is turned into a wedge by `φ_r`, the series acts there, and each
/// coefficient is read back as a polynomial.
pub fn sigma_minus_poly(p: &EPolynomial, r: usize, barred: bool) -> Result<LaurentRing> {
    let kind = if barred { SchubertKind::SigmaBarMinus } else { SchubertKind::SigmaMinus };
    let image = apply_series_exact(kind, &phi(p, r)?)?;
    Ok(image.map(|m| schur_combination(&phi_inverse(m))))
}

/// The multiplicative extension of `e_i ↦ Δ_{(1^i)}(σ_-(z) H_r)` (or the
/// barred version). It agrees with [`sigma_minus_poly`] on elements of
/// weight at most `r`, but is not the same map on all of `B_r`: for `r = 1`, `σ_-(z) e_1^2 = h_2 + h_1 z^{-1} + z^{-2}`
/// while the square of `σ_-(z) e_1` has middle term `2 h_1 z^{-1}`.
pub fn sigma_minus_multiplicative(p: &EPolynomial, r: usize, barred: bool) -> Result<LaurentRing> {
    if p.rank() != r {
        return invalid(format!("polynomial of rank {} used at rank {r}", p.rank()));
    }
    let generators: Vec<LaurentRing> =
        (1..=r).map(|i| schur_delta_transformed(&Partition::column(i), r, barred)).collect();
    let mut powers: HashMap<(usize, u32), LaurentRing> = HashMap::new();
    let one = laurent_one(r);
    let mut out = Laurent::zero();
    for (exps, c) in p.terms() {
        let mut term = one.clone();
        for (i, &k) in exps.iter().enumerate() {
            if k == 0 {
                continue;
            }
            let pw =
                powers.entry((i, k)).or_insert_with(|| (0..k).fold(one.clone(), |acc, _| acc.ring_mul(&generators[i])));
            term = term.ring_mul(pw);
        }
        out = out.add(&term.map(|q| q.scale(c)));
    }
    Ok(out)
}

/// `det(Res(X^{i-1} f_{r-j}(X) / p_r(X)))_{1≤i,j≤r}` with each residue in
/// closed form `Σ_k c_k h_{i+k-r}`, where `c_k` are the coefficients of
/// `f_{r-j}`. Polynomials are given as coefficient lists, constant first.
pub fn laksov_thorup(f_list: &[Vec<BigInt>], r: usize) -> Result<EPolynomial> {
    if f_list.len() != r {
        return invalid(format!("expected {r} polynomials, got {}", f_list.len()));
    }
    let m: Vec<Vec<EPolynomial>> = (1..=r)
        .map(|i| {
            (1..=r)
                .map(|j| {
                    let f = &f_list[r - j];
                    let mut entry = EPolynomial::zero(r);
                    for (k, c) in f.iter().enumerate() {
                        if !c.is_zero() {
                            entry = entry.add(&h(i as i64 + k as i64 - r as i64, r).scale(c));
                        }
                    }
                    entry
                })
                .collect()
        })
        .collect();
    Ok(determinant(&m, &EPolynomial::one(r)))
}

/// Representative of `p + I_{r,n}` with `I_{r,n} = (h_{n-r+1}, …, h_n)`, in
/// the Schur basis over partitions in the `r × (n - r)` box.
pub fn truncated_reduce(p: &EPolynomial, r: usize, n: usize) -> Result<TensorCoefficients> {
    if n < r {
        return invalid(format!("n = {n} must be at least r = {r}"));
    }
    Ok(phi_inverse(&phi(p, r)?.truncate(n as u32)))
}

/// The unit of `B_r` as a Laurent polynomial.
pub fn laurent_one(r: usize) -> LaurentRing {
    Laurent::monomial(0, EPolynomial::one(r))
}
