use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{format_rational, parse_rational, ExponentVector, Polynomial, WeightedRing};
use crate::error::{Error, Result};

/// JSON ring descriptor. `n` and `W` are present for symplectic rings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingDescriptor {
    pub variables: Vec<String>,
    pub weights: Vec<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(rename = "W", default, skip_serializing_if = "Option::is_none")]
    pub pairing_weight: Option<u32>,
}

impl RingDescriptor {
    pub fn of(ring: &WeightedRing) -> Self {
        Self {
            variables: ring.names().to_vec(),
            weights: ring.weights().to_vec(),
            n: None,
            pairing_weight: None,
        }
    }

    pub fn build(&self) -> Result<Arc<WeightedRing>> {
        WeightedRing::new(self.variables.clone(), self.weights.clone())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coefficient: String,
    pub exponents: Vec<u16>,
}

/// Terms are listed in descending ring order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialJson {
    pub ring: RingDescriptor,
    pub terms: Vec<TermJson>,
}

pub(super) fn to_json(p: &Polynomial) -> PolynomialJson {
    let n = p.ring().nvars();
    PolynomialJson {
        ring: RingDescriptor::of(p.ring()),
        terms: p
            .terms()
            .iter()
            .map(|(m, c)| TermJson {
                coefficient: format_rational(c),
                exponents: m.as_slice(n).to_vec(),
            })
            .collect(),
    }
}

pub(super) fn from_json(json: &PolynomialJson) -> Result<Polynomial> {
    let ring = json.ring.build()?;
    let mut terms = Vec::with_capacity(json.terms.len());
    for t in &json.terms {
        if t.exponents.len() != ring.nvars() {
            return Err(Error::Malformed(format!(
                "term has {} exponents, ring has {} variables",
                t.exponents.len(),
                ring.nvars()
            )));
        }
        terms.push((
            ExponentVector::from_slice(&t.exponents),
            parse_rational(&t.coefficient)?,
        ));
    }
    Ok(Polynomial::from_terms(&ring, terms))
}
