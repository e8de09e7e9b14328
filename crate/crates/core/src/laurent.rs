//! Finitely stored Laurent series in `z` with an explicit record of which
//! exponents are actually known.
//!
//! A value stores its nonzero coefficients plus a *known interval*. Each
//! end of the interval is either a finite bound (coefficients beyond it
//! were never computed) or open (`None`), meaning every coefficient in
//! that direction that is not stored is genuinely zero. Sums and products
//! propagate the interval, so reading a coefficient that was not computed
//! is an error instead of a silent zero.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// Additive structure needed by coefficients of a [`Laurent`].
pub trait Coefficient: Clone + PartialEq {
    fn vanishes(&self) -> bool;
    fn add_assign_ref(&mut self, other: &Self);
    fn negated(&self) -> Self;
}

#[derive(Clone, Debug, PartialEq)]
pub struct Laurent<T> {
    coeffs: BTreeMap<i64, T>,
    lo: Option<i64>,
    hi: Option<i64>,
}

impl<T: Coefficient> Laurent<T> {
    /// The zero series, known everywhere.
    pub fn zero() -> Self {
        Laurent { coeffs: BTreeMap::new(), lo: None, hi: None }
    }

    /// An exact Laurent polynomial.
    pub fn exact(coeffs: impl IntoIterator<Item = (i64, T)>) -> Self {
        let mut out = Self::zero();
        for (e, c) in coeffs {
            out.add_term(e, c);
        }
        out
    }

    /// A series known only on `[lo, hi]`; `lo`/`hi` of `None` mean the
    /// series is known (and zero past the stored terms) in that direction.
    pub fn with_window(coeffs: impl IntoIterator<Item = (i64, T)>, lo: Option<i64>, hi: Option<i64>) -> Self {
        let mut out = Self::zero();
        out.lo = lo;
        out.hi = hi;
        for (e, c) in coeffs {
            if out.is_known(e) {
                out.add_term(e, c);
            }
        }
        out
    }

    pub fn monomial(exponent: i64, c: T) -> Self {
        Self::exact([(exponent, c)])
    }

    pub fn add_term(&mut self, exponent: i64, c: T) {
        if c.vanishes() {
            return;
        }
        match self.coeffs.entry(exponent) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                o.get_mut().add_assign_ref(&c);
                if o.get().vanishes() {
                    o.remove();
                }
            }
        }
    }

    /// Lower and upper ends of the known interval (`None` = unbounded).
    pub fn known_bounds(&self) -> (Option<i64>, Option<i64>) {
        (self.lo, self.hi)
    }

    /// The declared window: the known interval with open ends replaced by
    /// the stored support.
    pub fn window(&self) -> (i64, i64) {
        let lo = self.lo.or_else(|| self.min_exponent()).unwrap_or(0);
        let hi = self.hi.or_else(|| self.max_exponent()).unwrap_or(0);
        (lo, hi)
    }

    pub fn is_exact(&self) -> bool {
        self.lo.is_none() && self.hi.is_none()
    }

    pub fn is_known(&self, exponent: i64) -> bool {
        self.lo.is_none_or(|lo| exponent >= lo) && self.hi.is_none_or(|hi| exponent <= hi)
    }

    /// `Ok(None)` for a known zero coefficient.
    pub fn get(&self, exponent: i64) -> Result<Option<&T>> {
        if !self.is_known(exponent) {
            return Err(Error::OutsideWindow { exponent });
        }
        Ok(self.coeffs.get(&exponent))
    }

    pub fn residue(&self) -> Result<Option<&T>> {
        self.get(-1)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &T)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn into_terms(self) -> impl Iterator<Item = (i64, T)> {
        self.coeffs.into_iter()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True when every coefficient is known and the stored ones vanish.
    pub fn is_exactly_zero(&self) -> bool {
        self.is_exact() && self.coeffs.is_empty()
    }

    /// Forget everything outside `[lo, hi]`.
    pub fn restrict(&self, lo: i64, hi: i64) -> Self {
        let keep_lo = match self.lo {
            Some(l) => Some(l.max(lo)),
            None if self.min_exponent().is_none_or(|m| m >= lo) => None,
            None => Some(lo),
        };
        let keep_hi = match self.hi {
            Some(h) => Some(h.min(hi)),
            None if self.max_exponent().is_none_or(|m| m <= hi) => None,
            None => Some(hi),
        };
        Laurent { coeffs: self.coeffs.range(lo..=hi).map(|(e, c)| (*e, c.clone())).collect(), lo: keep_lo, hi: keep_hi }
    }

    /// Multiply by `z^k`.
    pub fn shift(&self, k: i64) -> Self {
        Laurent {
            coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect(),
            lo: self.lo.map(|l| l + k),
            hi: self.hi.map(|h| h + k),
        }
    }

    pub fn negated(&self) -> Self {
        Laurent { coeffs: self.coeffs.iter().map(|(e, c)| (*e, c.negated())).collect(), lo: self.lo, hi: self.hi }
    }

    /// Sum; known exactly where both summands are known.
    pub fn add(&self, other: &Self) -> Self {
        let lo = match (self.lo, other.lo) {
            (None, x) | (x, None) => x,
            (Some(a), Some(b)) => Some(a.max(b)),
        };
        let hi = match (self.hi, other.hi) {
            (None, x) | (x, None) => x,
            (Some(a), Some(b)) => Some(a.min(b)),
        };
        let mut out = Laurent { coeffs: BTreeMap::new(), lo, hi };
        for (e, c) in self.terms().chain(other.terms()) {
            if out.is_known(e) {
                out.add_term(e, c.clone());
            }
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.negated())
    }

    pub fn map<U: Coefficient>(&self, f: impl Fn(&T) -> U) -> Laurent<U> {
        let mut out = Laurent { coeffs: BTreeMap::new(), lo: self.lo, hi: self.hi };
        for (e, c) in self.terms() {
            out.add_term(e, f(c));
        }
        out
    }

    /// Equality of coefficients on the intersection of the known intervals.
    pub fn agrees_with(&self, other: &Self) -> bool {
        let d = self.sub(other);
        d.is_zero()
    }
}

/// Possibly-nonzero exponent range of a factor, used to propagate the known
/// interval through products.
struct Profile {
    lo: Option<i64>,
    hi: Option<i64>,
    // smallest/largest exponent at which the coefficient may be nonzero
    pmin: Option<i64>,
    pmax: Option<i64>,
    empty: bool,
}

fn profile<T: Coefficient>(a: &Laurent<T>) -> Profile {
    let smin = a.min_exponent();
    let smax = a.max_exponent();
    let pmin = if a.lo.is_some() {
        None
    } else {
        match (smin, a.hi) {
            (Some(s), Some(h)) => Some(s.min(h + 1)),
            (Some(s), None) => Some(s),
            (None, Some(h)) => Some(h + 1),
            (None, None) => None,
        }
    };
    let pmax = if a.hi.is_some() {
        None
    } else {
        match (smax, a.lo) {
            (Some(s), Some(l)) => Some(s.max(l - 1)),
            (Some(s), None) => Some(s),
            (None, Some(l)) => Some(l - 1),
            (None, None) => None,
        }
    };
    Profile { lo: a.lo, hi: a.hi, pmin, pmax, empty: a.is_exactly_zero() }
}

/// Known interval of `a * b`, or `None` when nothing is known (one factor
/// is unknown above while the other is unknown below).
fn product_bounds(a: &Profile, b: &Profile) -> Option<(Option<i64>, Option<i64>)> {
    if a.empty || b.empty {
        return Some((None, None));
    }
    if (a.hi.is_some() && b.lo.is_some()) || (a.lo.is_some() && b.hi.is_some()) {
        return None;
    }
    let hi = if a.hi.is_some() || b.hi.is_some() {
        let mut h = i64::MAX;
        if let Some(ah) = a.hi {
            h = h.min(ah + b.pmin.expect("bounded below"));
        }
        if let Some(bh) = b.hi {
            h = h.min(bh + a.pmin.expect("bounded below"));
        }
        Some(h)
    } else {
        None
    };
    let lo = if a.lo.is_some() || b.lo.is_some() {
        let mut l = i64::MIN;
        if let Some(al) = a.lo {
            l = l.max(al + b.pmax.expect("bounded above"));
        }
        if let Some(bl) = b.lo {
            l = l.max(bl + a.pmax.expect("bounded above"));
        }
        Some(l)
    } else {
        None
    };
    Some((lo, hi))
}

/// Cauchy product with a caller-supplied coefficient multiplication. The
/// result is known exactly on the exponents where every contributing pair
/// of coefficients is known.
pub fn product_with<A, B, C>(a: &Laurent<A>, b: &Laurent<B>, mul: impl Fn(&A, &B) -> C) -> Laurent<C>
where
    A: Coefficient,
    B: Coefficient,
    C: Coefficient,
{
    let (lo, hi) = match product_bounds(&profile(a), &profile(b)) {
        Some(bounds) => bounds,
        None => (Some(1), Some(0)),
    };
    let mut out = Laurent { coeffs: BTreeMap::new(), lo, hi };
    for (i, x) in a.terms() {
        for (j, y) in b.terms() {
            if out.is_known(i + j) {
                out.add_term(i + j, mul(x, y));
            }
        }
    }
    out
}

/// The single coefficient of `z^exponent` in `a * b`, checked for
/// exactness before it is computed.
pub fn product_coefficient<A, B, C>(
    a: &Laurent<A>,
    b: &Laurent<B>,
    exponent: i64,
    mul: impl Fn(&A, &B) -> C,
) -> Result<Option<C>>
where
    A: Coefficient,
    B: Coefficient,
    C: Coefficient,
{
    let known = match product_bounds(&profile(a), &profile(b)) {
        Some((lo, hi)) => lo.is_none_or(|l| exponent >= l) && hi.is_none_or(|h| exponent <= h),
        None => false,
    };
    if !known {
        return Err(Error::OutsideWindow { exponent });
    }
    let mut acc: Option<C> = None;
    for (i, x) in a.terms() {
        if let Some(y) = b.coeffs.get(&(exponent - i)) {
            let term = mul(x, y);
            match acc.as_mut() {
                Some(s) => s.add_assign_ref(&term),
                None => acc = Some(term),
            }
        }
    }
    Ok(acc.filter(|c| !c.vanishes()))
}

/// Residue of a product: the `z^-1` coefficient of `a * b`.
pub fn residue_of_product<A, B, C>(a: &Laurent<A>, b: &Laurent<B>, mul: impl Fn(&A, &B) -> C) -> Result<Option<C>>
where
    A: Coefficient,
    B: Coefficient,
    C: Coefficient,
{
    product_coefficient(a, b, -1, mul)
}

impl Coefficient for num_bigint::BigInt {
    fn vanishes(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn negated(&self) -> Self {
        -self
    }
}

impl Coefficient for num_rational::BigRational {
    fn vanishes(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn negated(&self) -> Self {
        -self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn z(terms: &[(i64, i64)]) -> Laurent<BigInt> {
        Laurent::exact(terms.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    fn mul(a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }

    #[test]
    fn exact_product() {
        // (1 + z)(1 - z) = 1 - z^2
        let p = product_with(&z(&[(0, 1), (1, 1)]), &z(&[(0, 1), (1, -1)]), mul);
        assert!(p.is_exact());
        assert_eq!(p, z(&[(0, 1), (2, -1)]));
    }

    #[test]
    fn windowed_series_times_polynomial() {
        // geometric series known up to z^3, times (z^-2 + z^-1)
        let geo = Laurent::with_window((0..=3).map(|e| (e, BigInt::from(1))), None, Some(3));
        let poly = z(&[(-2, 1), (-1, 1)]);
        let p = product_with(&geo, &poly, mul);
        assert_eq!(p.known_bounds(), (None, Some(1)));
        assert_eq!(p.get(-2).unwrap(), Some(&BigInt::from(1)));
        assert_eq!(p.get(1).unwrap(), Some(&BigInt::from(2)));
        assert!(p.get(2).is_err());
        assert_eq!(residue_of_product(&geo, &poly, mul).unwrap(), Some(BigInt::from(2)));
        assert!(product_coefficient(&geo, &poly, 2, mul).is_err());
    }

    #[test]
    fn opposite_unknown_sides_know_nothing() {
        let up = Laurent::with_window([(0, BigInt::from(1))], None, Some(2));
        let down = Laurent::with_window([(0, BigInt::from(1))], Some(-2), None);
        let p = product_with(&up, &down, mul);
        assert!(p.get(0).is_err());
    }

    #[test]
    fn sum_intersects_known_intervals() {
        let a = Laurent::with_window([(0, BigInt::from(1))], None, Some(2));
        let b = Laurent::with_window([(1, BigInt::from(1))], Some(-1), None);
        let s = a.add(&b);
        assert_eq!(s.known_bounds(), (Some(-1), Some(2)));
    }

    #[test]
    fn restrict_keeps_exactness_when_nothing_is_dropped() {
        let p = z(&[(-1, 1), (2, 3)]);
        assert!(p.restrict(-1, 5).is_exact());
        let r = p.restrict(0, 5);
        assert_eq!(r.known_bounds(), (Some(0), None));
        assert!(r.get(-1).is_err());
    }
}
