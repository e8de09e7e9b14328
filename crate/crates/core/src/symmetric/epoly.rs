use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::determinant::CommRing;
use crate::laurent::Coefficient;

/// A polynomial in `e_1, …, e_r` with integer coefficients. Keys are
/// exponent vectors of length `r`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EPolynomial {
    rank: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl EPolynomial {
    pub fn zero(rank: usize) -> Self {
        EPolynomial { rank, terms: BTreeMap::new() }
    }

    pub fn one(rank: usize) -> Self {
        Self::constant(rank, BigInt::one())
    }

    pub fn constant(rank: usize, c: BigInt) -> Self {
        let mut p = Self::zero(rank);
        p.add_term(vec![0; rank], c);
        p
    }

    /// The generator `e_i`, `1 ≤ i ≤ rank`.
    pub fn e(i: usize, rank: usize) -> Self {
        assert!(1 <= i && i <= rank, "e_{i} is not a generator of rank {rank}");
        let mut exps = vec![0; rank];
        exps[i - 1] = 1;
        let mut p = Self::zero(rank);
        p.add_term(exps, BigInt::one());
        p
    }

    pub fn from_terms(rank: usize, terms: impl IntoIterator<Item = (Vec<u32>, BigInt)>) -> Self {
        let mut p = Self::zero(rank);
        for (k, c) in terms {
            assert_eq!(k.len(), rank, "exponent vector length must match the rank");
            p.add_term(k, c);
        }
        p
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, BigInt> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exps: &[u32]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    /// `Σ i·k_i` for the exponent vector `k`.
    pub fn monomial_weight(exps: &[u32]) -> u32 {
        exps.iter().enumerate().map(|(i, &k)| (i as u32 + 1) * k).sum()
    }

    /// `Some(w)` when every term has weight `w`; zero is homogeneous of
    /// every weight and reports `None`.
    pub fn homogeneous_weight(&self) -> Option<u32> {
        let mut ws = self.terms.keys().map(|k| Self::monomial_weight(k));
        let w = ws.next()?;
        ws.all(|v| v == w).then_some(w)
    }

    pub fn max_weight(&self) -> u32 {
        self.terms.keys().map(|k| Self::monomial_weight(k)).max().unwrap_or(0)
    }

    pub(crate) fn add_term(&mut self, exps: Vec<u32>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_rank(&self, other: &Self) {
        assert_eq!(self.rank, other.rank, "rank mismatch in B_r arithmetic");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_rank(other);
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&BigInt::from(-1))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.rank);
        }
        EPolynomial { rank: self.rank, terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_rank(other);
        let mut out = Self::zero(self.rank);
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                let k = ka.iter().zip(kb).map(|(a, b)| a + b).collect();
                out.add_term(k, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.rank);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Reinterprets the polynomial in a ring with more generators.
    pub fn embed(&self, rank: usize) -> Self {
        assert!(rank >= self.rank, "embedding must not lose generators");
        EPolynomial {
            rank,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| {
                    let mut k = k.clone();
                    k.resize(rank, 0);
                    (k, c.clone())
                })
                .collect(),
        }
    }
}

impl Coefficient for EPolynomial {
    fn vanishes(&self) -> bool {
        self.terms.is_empty()
    }
    fn add_assign_ref(&mut self, other: &Self) {
        if self.terms.is_empty() && self.rank != other.rank {
            self.rank = other.rank;
        }
        if other.terms.is_empty() {
            return;
        }
        self.check_rank(other);
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c.clone());
        }
    }
    fn negated(&self) -> Self {
        self.neg()
    }
}

impl CommRing for EPolynomial {
    fn ring_add(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn ring_neg(&self) -> Self {
        self.neg()
    }
    fn ring_is_zero(&self) -> bool {
        self.is_zero()
    }
}

impl fmt::Display for EPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // highest weight first
        let mut ts: Vec<_> = self.terms.iter().collect();
        ts.sort_by(|a, b| Self::monomial_weight(b.0).cmp(&Self::monomial_weight(a.0)).then(b.0.cmp(a.0)));
        for (n, (k, c)) in ts.into_iter().enumerate() {
            let abs = c.abs();
            match (n, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let vars: Vec<String> = k
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(i, &p)| if p == 1 { format!("e{}", i + 1) } else { format!("e{}^{p}", i + 1) })
                .collect();
            if vars.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{abs}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for EPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} [rank {}]", self.rank)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let e1 = EPolynomial::e(1, 2);
        let e2 = EPolynomial::e(2, 2);
        let p = e1.mul(&e1).sub(&e2);
        assert_eq!(p.to_string(), "e1^2 - e2");
        assert_eq!(p.homogeneous_weight(), Some(2));
        assert!(p.sub(&p).is_zero());
        assert_eq!(e1.pow(3).coefficient(&[3, 0]), BigInt::from(1));
        assert_eq!(EPolynomial::zero(3).homogeneous_weight(), None);
        assert_eq!(e2.embed(4).coefficient(&[0, 1, 0, 0]), BigInt::from(1));
    }
}
