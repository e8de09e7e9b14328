//! The exterior algebra on the free abelian group with basis `b_0, b_1, …`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::laurent::{Coefficient, Laurent};
use crate::partitions::{hook_indices, Partition};

/// `b_{i_1} ∧ … ∧ b_{i_r}` with strictly increasing indices.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct WedgeMonomial(Vec<u32>);

impl WedgeMonomial {
    pub fn new(indices: Vec<u32>) -> Result<Self> {
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return invalid(format!("{indices:?} is not strictly increasing"));
        }
        Ok(WedgeMonomial(indices))
    }

    /// Sorts an arbitrary index list, returning the permutation sign, or
    /// `None` when an index repeats.
    pub fn from_unsorted(mut indices: Vec<u32>) -> Option<(i8, Self)> {
        let mut sign = 1i8;
        // insertion sort, counting transpositions
        for i in 1..indices.len() {
            let mut j = i;
            while j > 0 && indices[j - 1] > indices[j] {
                indices.swap(j - 1, j);
                sign = -sign;
                j -= 1;
            }
            if j > 0 && indices[j - 1] == indices[j] {
                return None;
            }
        }
        Some((sign, WedgeMonomial(indices)))
    }

    pub fn empty() -> Self {
        WedgeMonomial(vec![])
    }

    pub fn indices(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }
}

/// Integer combination of wedge monomials of one fixed degree.
#[derive(Clone, PartialEq, Eq)]
pub struct ExteriorElement {
    degree: usize,
    terms: BTreeMap<WedgeMonomial, BigInt>,
}

impl ExteriorElement {
    pub fn zero(degree: usize) -> Self {
        ExteriorElement { degree, terms: BTreeMap::new() }
    }

    pub fn scalar(c: impl Into<BigInt>) -> Self {
        let mut out = Self::zero(0);
        out.add_term(WedgeMonomial::empty(), c.into());
        out
    }

    /// The single generator `b_i`.
    pub fn generator(i: u32) -> Self {
        Self::monomial(&[i])
    }

    /// `b_{i_1} ∧ … ∧ b_{i_r}` for any index order (zero on repeats).
    pub fn monomial(indices: &[u32]) -> Self {
        let mut out = Self::zero(indices.len());
        if let Some((sign, m)) = WedgeMonomial::from_unsorted(indices.to_vec()) {
            out.add_term(m, BigInt::from(sign));
        }
        out
    }

    /// The basis element attached to `λ` in degree `r`.
    pub fn basis(lambda: &Partition, r: usize) -> Result<Self> {
        let idx = hook_indices(lambda, r)?;
        Ok(Self::monomial(&idx))
    }

    /// `Σ c_k b_k` as a degree-one element.
    pub fn vector(coeffs: &[BigInt]) -> Self {
        let mut out = Self::zero(1);
        for (k, c) in coeffs.iter().enumerate() {
            out.add_term(WedgeMonomial(vec![k as u32]), c.clone());
        }
        out
    }

    pub fn from_terms(degree: usize, terms: impl IntoIterator<Item = (WedgeMonomial, BigInt)>) -> Result<Self> {
        let mut out = Self::zero(degree);
        for (m, c) in terms {
            if m.degree() != degree {
                return invalid(format!("monomial {:?} does not have degree {degree}", m.indices()));
            }
            out.add_term(m, c);
        }
        Ok(out)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> impl Iterator<Item = (&WedgeMonomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &WedgeMonomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn max_index(&self) -> Option<u32> {
        self.terms.keys().filter_map(|m| m.indices().last().copied()).max()
    }

    pub(crate) fn add_term(&mut self, m: WedgeMonomial, c: BigInt) {
        debug_assert_eq!(m.degree(), self.degree);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
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

    /// Adds `c · b_{indices}` for an unsorted index list.
    pub(crate) fn add_unsorted(&mut self, indices: Vec<u32>, c: &BigInt) {
        if let Some((sign, m)) = WedgeMonomial::from_unsorted(indices) {
            let c = if sign < 0 { -c } else { c.clone() };
            self.add_term(m, c);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign_ref(other);
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.negated())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.degree);
        }
        ExteriorElement { degree: self.degree, terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    /// Bilinear wedge product; signs come from sorting the concatenated
    /// index lists.
    pub fn wedge(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.degree + other.degree);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let idx: Vec<u32> = a.0.iter().chain(&b.0).copied().collect();
                out.add_unsorted(idx, &(x * y));
            }
        }
        out
    }

    /// Contraction `β_j ⌟ m`: removes `b_j` from each monomial with sign
    /// `(-1)^(k-1)`, `k` its 1-based position.
    pub fn contract(&self, j: u32) -> Result<Self> {
        if self.degree == 0 {
            return invalid("cannot contract a degree-zero element");
        }
        let mut out = Self::zero(self.degree - 1);
        for (m, c) in &self.terms {
            if let Ok(pos) = m.0.binary_search(&j) {
                let mut idx = m.0.clone();
                idx.remove(pos);
                let c = if pos % 2 == 1 { -c } else { c.clone() };
                out.add_term(WedgeMonomial(idx), c);
            }
        }
        Ok(out)
    }

    /// Drops every monomial containing an index `≥ n`.
    pub fn truncate(&self, n: u32) -> Self {
        ExteriorElement {
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.0.last().is_none_or(|&i| i < n))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// `Σ_j (β_j ⌟ m) z^{-j-1}`, exact.
    pub fn contraction_stream(&self) -> Result<LaurentExterior> {
        if self.degree == 0 {
            return invalid("cannot contract a degree-zero element");
        }
        let mut out = Laurent::zero();
        if let Some(top) = self.max_index() {
            for j in 0..=top {
                out.add_term(-(j as i64) - 1, self.contract(j)?);
            }
        }
        Ok(out)
    }

    /// `Σ_{j=0}^{hi} (b_j ∧ m) z^j`, known on `[0, hi]` and zero below.
    pub fn insertion_stream(&self, hi: u32) -> LaurentExterior {
        let terms = (0..=hi).map(|j| (j as i64, Self::generator(j).wedge(self)));
        Laurent::with_window(terms, None, Some(hi as i64))
    }

    /// The scalar value of a degree-zero element.
    pub fn as_scalar(&self) -> Option<BigInt> {
        (self.degree == 0).then(|| self.coefficient(&WedgeMonomial::empty()))
    }

    pub fn to_json(&self) -> ExteriorJson {
        ExteriorJson {
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| ExteriorTermJson { indices: m.0.clone(), coeff: c.to_string() })
                .collect(),
        }
    }

    pub fn from_json(j: &ExteriorJson) -> Result<Self> {
        let mut out = Self::zero(j.degree);
        for t in &j.terms {
            let m = WedgeMonomial::new(t.indices.clone())?;
            if m.degree() != j.degree {
                return Err(Error::Parse(format!("term {:?} has the wrong degree", t.indices)));
            }
            let c: BigInt = t.coeff.parse().map_err(|_| Error::Parse(format!("bad coefficient {:?}", t.coeff)))?;
            out.add_term(m, c);
        }
        Ok(out)
    }
}

impl Coefficient for ExteriorElement {
    fn vanishes(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_assign_ref(&mut self, other: &Self) {
        // zero elements of a mismatched degree are absorbed
        if self.terms.is_empty() && self.degree != other.degree {
            self.degree = other.degree;
        }
        if other.terms.is_empty() {
            return;
        }
        assert_eq!(self.degree, other.degree, "adding exterior elements of different degree");
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    fn negated(&self) -> Self {
        ExteriorElement { degree: self.degree, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl fmt::Debug for ExteriorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ExteriorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let abs = c.abs();
            match (k, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let body = if m.0.is_empty() {
                "1".to_string()
            } else {
                m.0.iter().map(|i| format!("b{i}")).collect::<Vec<_>>().join("^")
            };
            if abs.is_one() {
                write!(f, "{body}")?;
            } else {
                write!(f, "{abs}*{body}")?;
            }
        }
        Ok(())
    }
}

pub type LaurentExterior = Laurent<ExteriorElement>;

/// Elements of `⋀^{r-1} ⊗ ⋀^{r+1}` (or any pair of degrees), sparse over
/// pairs of wedge monomials.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ExteriorTensor {
    terms: BTreeMap<(WedgeMonomial, WedgeMonomial), BigInt>,
}

impl ExteriorTensor {
    pub fn product(a: &ExteriorElement, b: &ExteriorElement) -> Self {
        let mut out = Self::default();
        for (x, c) in a.terms() {
            for (y, d) in b.terms() {
                out.add_term((x.clone(), y.clone()), c * d);
            }
        }
        out
    }

    fn add_term(&mut self, key: (WedgeMonomial, WedgeMonomial), c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(key).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(WedgeMonomial, WedgeMonomial), &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

impl Coefficient for ExteriorTensor {
    fn vanishes(&self) -> bool {
        self.terms.is_empty()
    }
    fn add_assign_ref(&mut self, other: &Self) {
        for (k, c) in &other.terms {
            let e = self.terms.entry(k.clone()).or_default();
            *e += c;
        }
        self.terms.retain(|_, v| !v.is_zero());
    }
    fn negated(&self) -> Self {
        ExteriorTensor { terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect() }
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct ExteriorJson {
    pub degree: usize,
    pub terms: Vec<ExteriorTermJson>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct ExteriorTermJson {
    pub indices: Vec<u32>,
    pub coeff: String,
}
