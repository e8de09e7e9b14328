use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::exterior::ExteriorElement;
use crate::partitions::Partition;

/// Coefficients `a_λ` of `Σ a_λ [b]^r_λ`, equivalently of `Σ a_λ Δ_λ(H_r)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorCoefficients {
    rank: usize,
    coeffs: BTreeMap<Partition, BigInt>,
}

#[derive(Serialize, Deserialize)]
struct TensorJson {
    rank: usize,
    coeffs: Vec<EntryJson>,
}

#[derive(Serialize, Deserialize)]
struct EntryJson {
    partition: Partition,
    coeff: String,
}

impl TensorCoefficients {
    pub fn new(rank: usize) -> Self {
        TensorCoefficients { rank, coeffs: BTreeMap::new() }
    }

    pub fn from_pairs(rank: usize, pairs: impl IntoIterator<Item = (Partition, BigInt)>) -> Result<Self> {
        let mut out = Self::new(rank);
        for (p, c) in pairs {
            out.add(p, c)?;
        }
        Ok(out)
    }

    /// Adds `c` to `a_λ`, dropping it when the sum vanishes.
    pub fn add(&mut self, lambda: Partition, c: BigInt) -> Result<()> {
        if lambda.length() > self.rank {
            return invalid(format!("{lambda} has more than {} parts", self.rank));
        }
        let slot = self.coeffs.entry(lambda).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coeffs.retain(|_, v| !v.is_zero());
        }
        Ok(())
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, BigInt> {
        &self.coeffs
    }

    pub fn get(&self, lambda: &Partition) -> BigInt {
        self.coeffs.get(lambda).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Largest `|λ|` in the support, 0 for the zero tensor.
    pub fn max_weight(&self) -> u32 {
        self.coeffs.keys().map(Partition::weight).max().unwrap_or(0)
    }

    /// `Σ a_λ [b]^r_λ`.
    pub fn to_exterior(&self) -> ExteriorElement {
        let mut out = ExteriorElement::zero(self.rank);
        for (lambda, c) in &self.coeffs {
            let b = ExteriorElement::basis(lambda, self.rank).expect("lengths checked on insert");
            out = out.add(&b.scale(c));
        }
        out
    }

    pub fn to_json(&self) -> String {
        let doc = TensorJson {
            rank: self.rank,
            coeffs: self.coeffs.iter().map(|(p, c)| EntryJson { partition: p.clone(), coeff: c.to_string() }).collect(),
        };
        serde_json::to_string(&doc).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: TensorJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let mut out = Self::new(doc.rank);
        for entry in doc.coeffs {
            let c: BigInt =
                entry.coeff.trim().parse().map_err(|_| Error::Parse(format!("bad coefficient {:?}", entry.coeff)))?;
            out.add(entry.partition, c)?;
        }
        Ok(out)
    }
}
