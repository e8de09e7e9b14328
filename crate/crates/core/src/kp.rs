//! The limit `r → ∞` over the rationals.
//!
//! `Σ h_n z^n = exp(Σ x_i z^i)` identifies `Q[h_1, h_2, …]` with
//! `Q[x_1, x_2, …]`. Everything here is truncated at a total weight `W`
//! (`x_i` and `h_i` have weight `i`), and verdicts hold up to that weight.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::laurent::{residue_of_product, Coefficient, Laurent};
use crate::pluecker::{ring_residue_check, RingResidueReport};
use crate::symmetric::{h, schur_expand, EPolynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    X,
    H,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::X => "x",
            Family::H => "h",
        })
    }
}

/// Polynomial in `v_1, …, v_W` (`v = x` or `h`) with rational
/// coefficients, every monomial of weight at most `W`. Keys are dense
/// exponent vectors of length `W`.
#[derive(Clone, PartialEq, Eq)]
pub struct QPolynomial {
    family: Family,
    weight_bound: u32,
    terms: BTreeMap<Vec<u32>, BigRational>,
}

pub type LaurentQ = Laurent<QPolynomial>;

fn weight(exps: &[u32]) -> u32 {
    exps.iter().enumerate().map(|(i, &k)| (i as u32 + 1) * k).sum()
}

impl QPolynomial {
    pub fn zero(family: Family, weight_bound: u32) -> Self {
        QPolynomial { family, weight_bound, terms: BTreeMap::new() }
    }

    pub fn constant(family: Family, weight_bound: u32, c: BigRational) -> Self {
        let mut p = Self::zero(family, weight_bound);
        p.add_term(vec![0; weight_bound as usize], c);
        p
    }

    pub fn one(family: Family, weight_bound: u32) -> Self {
        Self::constant(family, weight_bound, BigRational::one())
    }

    /// `v_i`; zero when `i > W`.
    pub fn var(family: Family, i: u32, weight_bound: u32) -> Result<Self> {
        if i == 0 {
            return invalid("variables are indexed from 1");
        }
        let mut p = Self::zero(family, weight_bound);
        if i <= weight_bound {
            let mut k = vec![0; weight_bound as usize];
            k[i as usize - 1] = 1;
            p.add_term(k, BigRational::one());
        }
        Ok(p)
    }

    /// From `(var, power)` lists; monomials above the bound are an error.
    pub fn from_sparse_terms(
        family: Family,
        weight_bound: u32,
        terms: impl IntoIterator<Item = (Vec<(u32, u32)>, BigRational)>,
    ) -> Result<Self> {
        let mut p = Self::zero(family, weight_bound);
        for (vars, c) in terms {
            let mut k = vec![0u32; weight_bound as usize];
            let mut w = 0u64;
            for (v, e) in vars {
                if v == 0 {
                    return invalid("variables are indexed from 1");
                }
                w += v as u64 * e as u64;
                if w > weight_bound as u64 {
                    return invalid(format!("monomial of weight above the bound {weight_bound}"));
                }
                if e > 0 {
                    k[v as usize - 1] += e;
                }
            }
            p.add_term(k, c);
        }
        Ok(p)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn weight_bound(&self) -> u32 {
        self.weight_bound
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, BigRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_weight(&self) -> u32 {
        self.terms.keys().map(|k| weight(k)).max().unwrap_or(0)
    }

    pub fn coefficient(&self, exps: &[u32]) -> BigRational {
        self.terms.get(exps).cloned().unwrap_or_else(BigRational::zero)
    }

    fn add_term(&mut self, k: Vec<u32>, c: BigRational) {
        if c.is_zero() || weight(&k) > self.weight_bound {
            return;
        }
        let slot = self.terms.entry(k.clone()).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&k);
        }
    }

    fn check(&self, other: &Self) {
        assert!(
            self.family == other.family && self.weight_bound == other.weight_bound,
            "mixing polynomials of different families or bounds"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
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
        self.scale(&-BigRational::one())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = Self::zero(self.family, self.weight_bound);
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v * c);
        }
        out
    }

    /// Truncated product.
    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        let mut out = Self::zero(self.family, self.weight_bound);
        for (ka, ca) in &self.terms {
            let wa = weight(ka);
            for (kb, cb) in &other.terms {
                if wa + weight(kb) > self.weight_bound {
                    continue;
                }
                out.add_term(ka.iter().zip(kb).map(|(a, b)| a + b).collect(), ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(self.family, self.weight_bound), |acc, _| acc.mul(self))
    }

    /// `p(v ↦ -v)` on the `x` side: a monomial of degree `d` picks up `(-1)^d`.
    fn negate_variables(&self) -> Self {
        let mut out = self.clone();
        for (k, c) in out.terms.iter_mut() {
            if k.iter().sum::<u32>() % 2 == 1 {
                *c = -c.clone();
            }
        }
        out
    }

    /// Replaces `v_i` by `images[i-1]`, truncating at the bound.
    pub fn substitute(&self, images: &[QPolynomial]) -> Result<QPolynomial> {
        let Some(first) = images.first() else {
            return invalid("no images given");
        };
        if images.len() < self.weight_bound as usize {
            return invalid("need an image for every variable");
        }
        let mut powers: Vec<Vec<QPolynomial>> =
            images.iter().map(|p| vec![QPolynomial::one(p.family, p.weight_bound)]).collect();
        let mut out = QPolynomial::zero(first.family, first.weight_bound);
        for (k, c) in &self.terms {
            let mut term = QPolynomial::constant(first.family, first.weight_bound, c.clone());
            for (i, &e) in k.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().expect("nonempty").mul(&images[i]);
                    powers[i].push(next);
                }
                term = term.mul(&powers[i][e as usize]);
            }
            out = out.add(&term);
        }
        Ok(out)
    }

    /// `∂p/∂x_j`.
    pub fn diff_x(&self, j: u32) -> Result<QPolynomial> {
        if self.family != Family::X {
            return invalid("derivatives are taken in the x variables");
        }
        if j == 0 {
            return invalid("variables are indexed from 1");
        }
        let mut out = Self::zero(self.family, self.weight_bound);
        if j > self.weight_bound {
            return Ok(out);
        }
        let idx = j as usize - 1;
        for (k, c) in &self.terms {
            if k[idx] == 0 {
                continue;
            }
            let mut nk = k.clone();
            nk[idx] -= 1;
            out.add_term(nk, c * BigRational::from_integer(BigInt::from(k[idx])));
        }
        Ok(out)
    }

    /// The same element written in the `x` variables.
    pub fn to_x(&self) -> Result<QPolynomial> {
        match self.family {
            Family::X => Ok(self.clone()),
            Family::H => self.substitute(&h_all_in_x(self.weight_bound)[1..]),
        }
    }

    /// The same element written in the `h` variables.
    pub fn to_h(&self) -> Result<QPolynomial> {
        match self.family {
            Family::H => Ok(self.clone()),
            Family::X => self.substitute(&x_all_in_h(self.weight_bound)),
        }
    }

    /// The element of `Z[h_1, …, h_W] ⊂ B_W` when all coefficients are integers.
    pub fn to_integer_h(&self, rank: usize) -> Result<EPolynomial> {
        let hp = self.to_h()?;
        let mut out = EPolynomial::zero(rank);
        for (k, c) in &hp.terms {
            if !c.is_integer() {
                return invalid(format!("coefficient {c} is not an integer in the h variables"));
            }
            let mut term = EPolynomial::constant(rank, c.to_integer());
            for (i, &e) in k.iter().enumerate() {
                term = term.mul(&h(i as i64 + 1, rank).pow(e));
            }
            out = out.add(&term);
        }
        Ok(out)
    }

    pub fn from_epolynomial(p: &EPolynomial, weight_bound: u32) -> Result<QPolynomial> {
        if p.max_weight() > weight_bound {
            return invalid("polynomial weight exceeds the bound");
        }
        // Σ (-1)^i e_i z^i = exp(-Σ x_i z^i), so e_i = (-1)^i h_i(-x)
        let e_images: Vec<QPolynomial> = h_all_in_x(weight_bound)[1..]
            .iter()
            .enumerate()
            .map(|(i, hi)| if i % 2 == 0 { hi.negate_variables().neg() } else { hi.negate_variables() })
            .collect();
        let as_e = QPolynomial {
            family: Family::X,
            weight_bound,
            terms: p
                .terms()
                .iter()
                .map(|(k, c)| {
                    let mut k = k.clone();
                    k.resize(weight_bound as usize, 0);
                    (k, BigRational::from_integer(c.clone()))
                })
                .collect(),
        };
        let mut images = e_images;
        images.resize(weight_bound as usize, QPolynomial::zero(Family::X, weight_bound));
        as_e.substitute(&images)
    }

    pub fn to_json(&self) -> String {
        let doc = TauJson {
            family: self.family,
            weight_bound: self.weight_bound,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| TermJson {
                    exponents: k.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, &e)| (i as u32 + 1, e)).collect(),
                    coeff: c.to_string(),
                })
                .collect(),
        };
        serde_json::to_string(&doc).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: TauJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if doc.weight_bound == 0 {
            return invalid("weight_bound must be at least 1");
        }
        let mut terms = Vec::with_capacity(doc.terms.len());
        for t in doc.terms {
            let c: BigRational =
                t.coeff.trim().parse().map_err(|_| Error::Parse(format!("bad coefficient {:?}", t.coeff)))?;
            terms.push((t.exponents, c));
        }
        Self::from_sparse_terms(doc.family, doc.weight_bound, terms)
    }

    /// Same polynomial with a different bound; terms above a smaller bound are an error.
    pub fn with_weight_bound(&self, weight_bound: u32) -> Result<Self> {
        if self.max_weight() > weight_bound {
            return invalid(format!("weight {} exceeds the bound {weight_bound}", self.max_weight()));
        }
        let mut out = Self::zero(self.family, weight_bound);
        for (k, c) in &self.terms {
            let mut k = k.clone();
            k.resize(weight_bound as usize, 0);
            out.add_term(k, c.clone());
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
struct TauJson {
    family: Family,
    weight_bound: u32,
    terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exponents: Vec<(u32, u32)>,
    coeff: String,
}

impl Coefficient for QPolynomial {
    fn vanishes(&self) -> bool {
        self.terms.is_empty()
    }
    fn add_assign_ref(&mut self, other: &Self) {
        if self.terms.is_empty() {
            self.family = other.family;
            self.weight_bound = other.weight_bound;
        }
        self.check(other);
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c.clone());
        }
    }
    fn negated(&self) -> Self {
        self.neg()
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut ts: Vec<_> = self.terms.iter().collect();
        ts.sort_by(|a, b| weight(b.0).cmp(&weight(a.0)).then(b.0.cmp(a.0)));
        for (n, (k, c)) in ts.into_iter().enumerate() {
            match (n, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            let vars: Vec<String> =
                k.iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| {
                        if e == 1 {
                            format!("{}{}", self.family, i + 1)
                        } else {
                            format!("{}{}^{e}", self.family, i + 1)
                        }
                    })
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

impl fmt::Debug for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} [W={}]", self.weight_bound)
    }
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `h_0, …, h_W` in the `x` variables, from `n h_n = Σ_i i x_i h_{n-i}`.
fn h_all_in_x(w: u32) -> Vec<QPolynomial> {
    let mut hs = vec![QPolynomial::one(Family::X, w)];
    for n in 1..=w {
        let mut acc = QPolynomial::zero(Family::X, w);
        for i in 1..=n {
            let xi = QPolynomial::var(Family::X, i, w).expect("i ≥ 1");
            acc = acc.add(&xi.mul(&hs[(n - i) as usize]).scale(&rat(i as i64)));
        }
        hs.push(acc.scale(&(BigRational::one() / rat(n as i64))));
    }
    hs
}

/// `x_1, …, x_W` in the `h` variables, inverting the same recurrence.
fn x_all_in_h(w: u32) -> Vec<QPolynomial> {
    let hv = |i: u32| {
        if i == 0 {
            QPolynomial::one(Family::H, w)
        } else {
            QPolynomial::var(Family::H, i, w).expect("i ≥ 1")
        }
    };
    let mut xs: Vec<QPolynomial> = Vec::new();
    for n in 1..=w {
        let mut acc = hv(n).scale(&rat(n as i64));
        for i in 1..n {
            acc = acc.sub(&xs[i as usize - 1].mul(&hv(n - i)).scale(&rat(i as i64)));
        }
        xs.push(acc.scale(&(BigRational::one() / rat(n as i64))));
    }
    xs
}

/// `h_n` as a polynomial in the `x` variables: the `z^n` coefficient of `exp(Σ x_i z^i)`.
pub fn h_in_x(n: u32, w: u32) -> Result<QPolynomial> {
    if n > w {
        return invalid(format!("h_{n} has weight above the bound {w}"));
    }
    Ok(h_all_in_x(w).swap_remove(n as usize))
}

/// `x_i` as a polynomial in the `h` variables: the `z^i` coefficient of `log(Σ h_n z^n)`.
pub fn x_in_h(i: u32, w: u32) -> Result<QPolynomial> {
    if i == 0 || i > w {
        return invalid(format!("x_{i} is not a variable below the bound {w}"));
    }
    Ok(x_all_in_h(w).swap_remove(i as usize - 1))
}

/// `exp(s Σ_{i≥1} z^{-i}/i ∂/∂x_i) p`, `s = ±1`; the series terminates
/// since each step lowers the weight. `s = -1` is `σ̄_-(z)` and `s = 1`
/// is `σ_-(z)` in the limit.
pub fn sigma_minus_boson(p: &QPolynomial, barred: bool) -> Result<LaurentQ> {
    if p.family != Family::X {
        return invalid("vertex operators act on polynomials in x");
    }
    let s = if barred { -BigRational::one() } else { BigRational::one() };
    let mut total: LaurentQ = Laurent::monomial(0, p.clone());
    let mut current: LaurentQ = total.clone();
    let mut k = 1i64;
    while !current.is_zero() {
        let mut next: LaurentQ = Laurent::zero();
        for (e, c) in current.terms() {
            for i in 1..=p.weight_bound {
                let d = c.diff_x(i)?;
                if !d.is_zero() {
                    next.add_term(e - i as i64, d.scale(&(BigRational::one() / rat(i as i64))));
                }
            }
        }
        // divide by k for the k-th power of the operator over k!
        current = next.map(|c| c.scale(&(s.clone() / rat(k))));
        total = total.add(&current);
        k += 1;
    }
    Ok(total)
}

/// `exp(±Σ x_i z^i)` through `z^W`.
fn exp_series(w: u32, negative: bool) -> LaurentQ {
    let hs = h_all_in_x(w);
    Laurent::exact(hs.into_iter().enumerate().map(|(n, p)| (n as i64, if negative { p.negate_variables() } else { p })))
}

/// `Γ(z) p = exp(Σ x_i z^i) exp(-Σ z^{-i}/i ∂_i) p` and, with `star`,
/// `Γ*(z) p = exp(-Σ x_i z^i) exp(Σ z^{-i}/i ∂_i) p`, restricted to `[lo, hi]`.
pub fn gamma_boson(p: &QPolynomial, star: bool, lo: i64, hi: i64) -> Result<LaurentQ> {
    Ok(gamma_boson_full(p, star)?.restrict(lo, hi))
}

/// The whole truncated series; every exponent lies in `[-W, W]`.
pub fn gamma_boson_full(p: &QPolynomial, star: bool) -> Result<LaurentQ> {
    let d = sigma_minus_boson(p, !star)?;
    let pref = exp_series(p.weight_bound, star);
    Ok(crate::laurent::product_with(&pref, &d, QPolynomial::mul))
}

/// `Γ(z) h_n` through the symmetric-function side, written in `x`:
/// `(Σ h_k z^k)(h_n - h_{n-1}/z)`, or with `star`,
/// `(Σ (-1)^k e_k z^k)(Σ_j h_{n-j} z^{-j})`.
pub fn gamma_via_h(n: u32, star: bool, w: u32) -> Result<LaurentQ> {
    if n > w {
        return invalid(format!("h_{n} has weight above the bound {w}"));
    }
    let hx = h_all_in_x(w);
    let inner: LaurentQ = if star {
        Laurent::exact((0..=n).map(|j| (-(j as i64), hx[(n - j) as usize].clone())))
    } else {
        let mut s = Laurent::monomial(0, hx[n as usize].clone());
        if n > 0 {
            s.add_term(-1, hx[n as usize - 1].neg());
        }
        s
    };
    Ok(crate::laurent::product_with(&exp_series(w, star), &inner, QPolynomial::mul))
}

/// `Z[h] ∋ p ↦` the decomposability report at rank `W`, where every
/// partition of weight at most `W` is available.
pub fn kp_integer_check(p: &EPolynomial, w: u32) -> Result<RingResidueReport> {
    if w == 0 {
        return invalid("weight bound must be at least 1");
    }
    if p.max_weight() > w {
        return invalid(format!("polynomial weight {} exceeds the bound {w}", p.max_weight()));
    }
    let p = if p.rank() == w as usize {
        p.clone()
    } else if p.rank() < w as usize {
        p.embed(w as usize)
    } else {
        return invalid("polynomial uses generators beyond the weight bound");
    };
    ring_residue_check(&schur_expand(&p))
}

/// Elements of `Q[x'] ⊗ Q[x'']`, two disjoint alphabets.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct QTensor {
    terms: BTreeMap<(Vec<u32>, Vec<u32>), BigRational>,
}

impl QTensor {
    pub fn product(a: &QPolynomial, b: &QPolynomial) -> Self {
        let mut out = QTensor::default();
        for (ka, ca) in &a.terms {
            for (kb, cb) in &b.terms {
                out.add_term((ka.clone(), kb.clone()), ca * cb);
            }
        }
        out
    }

    fn add_term(&mut self, k: (Vec<u32>, Vec<u32>), c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(k.clone()).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn terms(&self) -> &BTreeMap<(Vec<u32>, Vec<u32>), BigRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl Coefficient for QTensor {
    fn vanishes(&self) -> bool {
        self.terms.is_empty()
    }
    fn add_assign_ref(&mut self, other: &Self) {
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c.clone());
        }
    }
    fn negated(&self) -> Self {
        QTensor { terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KpReport {
    /// The residue vanishes up to the weight bound.
    pub passes: bool,
    /// First nonzero coefficient: `(x'-exponents, x''-exponents, value)`.
    pub first_nonzero: Option<(Vec<u32>, Vec<u32>, BigRational)>,
}

/// `Res_z Γ*(z)τ ⊗ Γ(z)τ` with each factor truncated at the weight bound
/// of `τ`. Both factors are finite, so no window is needed; coefficients
/// of weight at most `W` in each alphabet are exact.
pub fn kp_residue(tau: &QPolynomial) -> Result<QTensor> {
    let tau = tau.to_x()?;
    let star = gamma_boson_full(&tau, true)?;
    let plain = gamma_boson_full(&tau, false)?;
    Ok(residue_of_product(&star, &plain, QTensor::product)?.unwrap_or_default())
}

pub fn kp_residue_check(tau: &QPolynomial) -> Result<KpReport> {
    let res = kp_residue(tau)?;
    let first_nonzero = res.terms.iter().next().map(|((a, b), c)| (a.clone(), b.clone(), c.clone()));
    Ok(KpReport { passes: first_nonzero.is_none(), first_nonzero })
}
