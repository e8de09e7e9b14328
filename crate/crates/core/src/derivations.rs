//! Schubert derivations: the Hasse–Schmidt derivations of the exterior
//! algebra generated by the index shifts `b_i ↦ b_{i±j}`, together with
//! their Pieri and Giambelli formulas.
//!
//! Series application ([`apply_series`]) is the multiplicative extension of
//! the per-generator action and carries the sign of the barred series
//! `σ̄_±(z) = Σ (-1)^i σ̄_{±i} z^{±i}`. Component extraction
//! ([`apply_component`]) returns the *unsigned* operator `σ_{±i}` or
//! `σ̄_{±i}`, computed combinatorially rather than from the series.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::error::{invalid, Result};
use crate::exterior::{ExteriorElement, LaurentExterior, WedgeMonomial};
use crate::laurent::Laurent;
use crate::partitions::{pieri_interlace, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SchubertKind {
    /// `b_i ↦ Σ_{j≥0} b_{i+j} z^j`
    SigmaPlus,
    /// `b_i ↦ b_i - b_{i+1} z`
    SigmaBarPlus,
    /// `b_i ↦ Σ_{j=0}^{i} b_{i-j} z^{-j}`
    SigmaMinus,
    /// `b_i ↦ b_i - b_{i-1} z^{-1}`, with `b_{-1} = 0`
    SigmaBarMinus,
}

impl SchubertKind {
    pub fn inverse(self) -> Self {
        match self {
            SchubertKind::SigmaPlus => SchubertKind::SigmaBarPlus,
            SchubertKind::SigmaBarPlus => SchubertKind::SigmaPlus,
            SchubertKind::SigmaMinus => SchubertKind::SigmaBarMinus,
            SchubertKind::SigmaBarMinus => SchubertKind::SigmaMinus,
        }
    }

    fn is_plus(self) -> bool {
        matches!(self, SchubertKind::SigmaPlus | SchubertKind::SigmaBarPlus)
    }

    /// `(exponent, index, coefficient)` terms of the image of `b_i`, up to
    /// exponent `hi` for the infinite series.
    fn generator_image(self, i: u32, hi: i64) -> Vec<(i64, u32, i8)> {
        match self {
            SchubertKind::SigmaPlus => (0..=hi.max(-1)).map(|j| (j, i + j as u32, 1)).collect(),
            SchubertKind::SigmaBarPlus => vec![(0, i, 1), (1, i + 1, -1)],
            SchubertKind::SigmaMinus => (0..=i).map(|j| (-(j as i64), i - j, 1)).collect(),
            SchubertKind::SigmaBarMinus => {
                if i == 0 {
                    vec![(0, 0, 1)]
                } else {
                    vec![(0, i, 1), (-1, i - 1, -1)]
                }
            }
        }
    }
}

/// Inserts `j` into a sorted index list; returns the sign of moving it
/// from the end into place, or `None` on a repeat.
fn insert_sorted(idx: &[u32], j: u32) -> Option<(i8, Vec<u32>)> {
    match idx.binary_search(&j) {
        Ok(_) => None,
        Err(pos) => {
            let mut out = Vec::with_capacity(idx.len() + 1);
            out.extend_from_slice(&idx[..pos]);
            out.push(j);
            out.extend_from_slice(&idx[pos..]);
            let moved = idx.len() - pos;
            Some((if moved.is_multiple_of(2) { 1 } else { -1 }, out))
        }
    }
}

/// Image of one wedge monomial under the series, factor by factor, keeping
/// exponents `≤ hi`.
fn series_on_monomial(kind: SchubertKind, m: &WedgeMonomial, hi: i64) -> HashMap<(i64, Vec<u32>), BigInt> {
    let mut state: HashMap<(i64, Vec<u32>), BigInt> = HashMap::new();
    state.insert((0, vec![]), BigInt::from(1));
    for &i in m.indices() {
        let image = kind.generator_image(i, hi);
        let mut next: HashMap<(i64, Vec<u32>), BigInt> = HashMap::with_capacity(state.len() * image.len());
        for ((e, idx), c) in &state {
            for &(de, j, s) in &image {
                let ne = e + de;
                if ne > hi {
                    continue;
                }
                if let Some((sign, nidx)) = insert_sorted(idx, j) {
                    let coeff = if sign * s > 0 { c.clone() } else { -c };
                    let entry = next.entry((ne, nidx)).or_default();
                    *entry += coeff;
                }
            }
        }
        next.retain(|_, c| !num_traits::Zero::is_zero(c));
        state = next;
    }
    state
}

fn series_on_element(kind: SchubertKind, m: &ExteriorElement, hi: i64) -> LaurentExterior {
    let mut by_exp: std::collections::BTreeMap<i64, ExteriorElement> = Default::default();
    for (mono, c) in m.terms() {
        for ((e, idx), d) in series_on_monomial(kind, mono, hi) {
            by_exp
                .entry(e)
                .or_insert_with(|| ExteriorElement::zero(m.degree()))
                .add_term(WedgeMonomial::new(idx).expect("sorted"), c * d);
        }
    }
    let hi_bound = (kind == SchubertKind::SigmaPlus).then_some(hi);
    Laurent::with_window(by_exp, None, hi_bound)
}

/// Applies the series to `m`, computing coefficients on `[lo, hi]`. For
/// every kind but `SigmaPlus` the series is finite and the result is exact
/// before restriction.
pub fn apply_series(kind: SchubertKind, m: &ExteriorElement, lo: i64, hi: i64) -> LaurentExterior {
    series_on_element(kind, m, hi).restrict(lo, hi)
}

/// Exact image under one of the three finite series.
pub fn apply_series_exact(kind: SchubertKind, m: &ExteriorElement) -> Result<LaurentExterior> {
    if kind == SchubertKind::SigmaPlus {
        return invalid("σ_+(z) has infinitely many terms; give a window");
    }
    Ok(series_on_element(kind, m, i64::MAX / 4))
}

/// Applies the series to a Laurent series of exterior elements,
/// `Σ_j z^j D(z) L_j`, known on `[.., hi]` for `SigmaPlus`.
pub fn apply_series_laurent(kind: SchubertKind, series: &LaurentExterior, hi: i64) -> Result<LaurentExterior> {
    let (lo_known, hi_known) = series.known_bounds();
    if kind.is_plus() && lo_known.is_some() {
        return invalid("input must be known down to -∞ for a z-series operator");
    }
    if !kind.is_plus() && hi_known.is_some() {
        return invalid("input must be known up to +∞ for a 1/z-series operator");
    }
    let mut out = Laurent::zero();
    for (j, term) in series.terms() {
        let piece = match kind {
            SchubertKind::SigmaPlus => series_on_element(kind, term, hi - j),
            _ => series_on_element(kind, term, i64::MAX / 4),
        };
        out = out.add(&piece.shift(j));
    }
    if kind == SchubertKind::SigmaPlus {
        out = out.add(&Laurent::with_window([], None, Some(hi)));
    }
    if let Some(h) = hi_known {
        out = out.add(&Laurent::with_window([], None, Some(h)));
    }
    if let Some(l) = lo_known {
        out = out.add(&Laurent::with_window([], Some(l), None));
    }
    Ok(out)
}

/// All ways to add `total` increments to `slots` positions.
fn compositions(total: u32, slots: usize, f: &mut impl FnMut(&[u32])) {
    fn rec(rest: u32, slots: usize, cur: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
        if cur.len() + 1 == slots {
            cur.push(rest);
            f(cur);
            cur.pop();
            return;
        }
        for a in 0..=rest {
            cur.push(a);
            rec(rest - a, slots, cur, f);
            cur.pop();
        }
    }
    if slots == 0 {
        if total == 0 {
            f(&[]);
        }
        return;
    }
    rec(total, slots, &mut Vec::with_capacity(slots), f);
}

/// All `k`-subsets of `0..n` as 0/1 vectors.
fn subsets(n: usize, k: usize, f: &mut impl FnMut(&[u32])) {
    fn rec(n: usize, k: usize, cur: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
        if cur.len() == n {
            if k == 0 {
                f(cur);
            }
            return;
        }
        let left = n - cur.len();
        if k < left {
            cur.push(0);
            rec(n, k, cur, f);
            cur.pop();
        }
        if k > 0 {
            cur.push(1);
            rec(n, k - 1, cur, f);
            cur.pop();
        }
    }
    if k > n {
        return;
    }
    rec(n, k, &mut Vec::with_capacity(n), f);
}

/// The unsigned component `σ_{±i} m` or `σ̄_{±i} m`.
pub fn apply_component(kind: SchubertKind, i: u32, m: &ExteriorElement) -> ExteriorElement {
    let mut out = ExteriorElement::zero(m.degree());
    for (mono, c) in m.terms() {
        let idx = mono.indices();
        let mut push = |shifts: &[u32]| {
            let moved: Option<Vec<u32>> = idx
                .iter()
                .zip(shifts)
                .map(|(&k, &s)| if kind.is_plus() { Some(k + s) } else { k.checked_sub(s) })
                .collect();
            if let Some(moved) = moved {
                out.add_unsorted(moved, c);
            }
        };
        match kind {
            SchubertKind::SigmaPlus | SchubertKind::SigmaMinus => compositions(i, idx.len(), &mut push),
            SchubertKind::SigmaBarPlus | SchubertKind::SigmaBarMinus => subsets(idx.len(), i as usize, &mut push),
        }
    }
    out
}

/// `σ_i [b]^r_λ` by the Pieri rule: the sum of `[b]^r_μ` over `μ`
/// interlacing `λ` with `|μ| = |λ| + i`.
pub fn pieri_expand(i: u32, lambda: &Partition, r: usize) -> Result<ExteriorElement> {
    if lambda.length() > r {
        return invalid(format!("{lambda} has more than {r} parts"));
    }
    let mut out = ExteriorElement::zero(r);
    for mu in interlacing_partitions(lambda, r, i) {
        debug_assert!(pieri_interlace(lambda, &mu, r));
        out = out.add(&ExteriorElement::basis(&mu, r)?);
    }
    Ok(out)
}

fn interlacing_partitions(lambda: &Partition, r: usize, extra: u32) -> Vec<Partition> {
    fn rec(lambda: &Partition, r: usize, k: usize, rest: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if k > r {
            if rest == 0 {
                out.push(Partition::new(cur.clone()).expect("interlacing keeps order"));
            }
            return;
        }
        let low = lambda.part(k);
        let high = if k == 1 { low + rest } else { lambda.part(k - 1) };
        for v in low..=high {
            let add = v - low;
            if add > rest {
                break;
            }
            cur.push(v);
            rec(lambda, r, k + 1, rest - add, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if r == 0 {
        if extra == 0 {
            out.push(Partition::empty());
        }
        return out;
    }
    rec(lambda, r, 1, extra, &mut Vec::new(), &mut out);
    out
}

/// `det(σ_{λ_j - j + i})_{1≤i,j≤r}` applied to `[b]^r_0`, expanded over
/// permutations; each term is a composite of `σ_k` components.
pub fn giambelli(lambda: &Partition, r: usize) -> Result<ExteriorElement> {
    if lambda.length() > r {
        return invalid(format!("{lambda} has more than {r} parts"));
    }
    let base = ExteriorElement::basis(&Partition::empty(), r)?;
    let mut out = ExteriorElement::zero(r);
    for (perm, sign) in crate::determinant::permutations(r) {
        // entry (i, perm[i]) with 0-based i, j: λ_{j+1} - (j+1) + (i+1)
        let orders: Option<Vec<u32>> = perm
            .iter()
            .enumerate()
            .map(|(i, &j)| {
                let v = lambda.part(j + 1) as i64 - j as i64 + i as i64;
                (v >= 0).then_some(v as u32)
            })
            .collect();
        let Some(orders) = orders else { continue };
        let mut term = base.clone();
        for k in orders {
            if k > 0 {
                term = apply_component(SchubertKind::SigmaPlus, k, &term);
            }
            if term.is_empty() {
                break;
            }
        }
        out = if sign > 0 { out.add(&term) } else { out.sub(&term) };
    }
    Ok(out)
}

fn sign_r(r: usize) -> BigInt {
    BigInt::from(if r.is_multiple_of(2) { 1 } else { -1 })
}

/// `σ̄_+(z) m = (-1)^r z^r σ̄_-(z) σ̄_r m` for `m ∈ ⋀^r`.
pub fn bar_plus_mirror_holds(m: &ExteriorElement) -> bool {
    let r = m.degree();
    let lhs = apply_series(SchubertKind::SigmaBarPlus, m, 0, r as i64);
    let up = apply_component(SchubertKind::SigmaBarPlus, r as u32, m);
    let rhs =
        series_on_element(SchubertKind::SigmaBarMinus, &up, i64::MAX / 4).shift(r as i64).map(|c| c.scale(&sign_r(r)));
    // σ̄_+ on ⋀^r has no terms beyond z^r
    apply_series(SchubertKind::SigmaBarPlus, m, r as i64 + 1, r as i64 + 1).is_zero() && lhs.terms().eq(rhs.terms())
}

/// `σ̄_-(z) m = (-1)^r z^{-r} σ̄_+(z) σ̄_{-r} m`; holds when `m` is a
/// combination of `[b]^r_λ` with `λ_r > 0`.
pub fn bar_minus_mirror_holds(m: &ExteriorElement) -> bool {
    let r = m.degree();
    let lhs = series_on_element(SchubertKind::SigmaBarMinus, m, i64::MAX / 4);
    let down = apply_component(SchubertKind::SigmaBarMinus, r as u32, m);
    let rhs =
        apply_series(SchubertKind::SigmaBarPlus, &down, 0, r as i64).shift(-(r as i64)).map(|c| c.scale(&sign_r(r)));
    lhs.terms().eq(rhs.terms())
}

/// `D(z) m_1 ∧ m_2 = D(z)(m_1 ∧ D̄(z) m_2)` on exponents `[0, hi]` for the
/// `z`-series and `[-hi, 0]` for the `1/z`-series.
pub fn integration_by_parts_holds(d: SchubertKind, m1: &ExteriorElement, m2: &ExteriorElement, hi: i64) -> bool {
    let (lo, hi) = if d.is_plus() { (0, hi) } else { (-hi, 0) };
    let top = if d.is_plus() { hi } else { i64::MAX / 4 };
    let lhs = series_on_element(d, m1, top).map(|c| c.wedge(m2)).restrict(lo, hi);
    let inner = series_on_element(d.inverse(), m2, top).map(|c| m1.wedge(c));
    let Ok(rhs) = apply_series_laurent(d, &inner, hi) else { return false };
    let rhs = rhs.restrict(lo, hi);
    (lo..=hi).all(|e| rhs.is_known(e) && lhs.is_known(e)) && lhs.agrees_with(&rhs)
}
