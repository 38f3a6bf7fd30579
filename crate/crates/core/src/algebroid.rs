//! The conormal module `I/I²` of a lagrangian germ and its Lie algebroid
//! structure: relations, bracket structure constants and anchor.
//!
//! The bracket on `I/I²` is induced by the Poisson bracket,
//! `{f_a, f_b} ≡ Σ_e c_ab^e f_e`, and the anchor sends `f_a` to the derivation
//! `g ↦ {f_a, g}` of `O_L`.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{syzygies_graded, GroebnerBasis, Lifter, ModuleVector};
use crate::polyring::{Polynomial, WeightedDegree, WeightedRing};
use crate::symplectic::SymplecticRing;
use crate::varieties::LagrangianPresentation;

/// `I/I² = O_L^r / ⟨relations⟩`.
#[derive(Debug, Clone)]
pub struct ConormalPresentation {
    ring: Arc<WeightedRing>,
    generators: Vec<Polynomial>,
    degrees: Vec<i64>,
    relations: Vec<ModuleVector>,
    relation_degrees: Vec<i64>,
    base_gb: GroebnerBasis,
}

impl ConormalPresentation {
    pub fn ring(&self) -> &Arc<WeightedRing> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    /// Rows `S_j` with `Σ_a S_ja f_a ∈ I²`, entries reduced mod `I`.
    pub fn relations(&self) -> &[ModuleVector] {
        &self.relations
    }

    /// Degree `s_j` of each relation row: entry `a` has degree `s_j − d_a`.
    pub fn relation_degrees(&self) -> &[i64] {
        &self.relation_degrees
    }

    pub fn base_gb(&self) -> &GroebnerBasis {
        &self.base_gb
    }

    /// Free means no relation survives reduction mod `I`.
    pub fn is_free(&self) -> bool {
        self.relations.is_empty()
    }
}

pub fn conormal_presentation(l: &LagrangianPresentation) -> Result<ConormalPresentation> {
    conormal_presentation_capped(l, None)
}

pub fn conormal_presentation_capped(
    l: &LagrangianPresentation,
    max_pairs: Option<usize>,
) -> Result<ConormalPresentation> {
    let ring = l.ring().clone();
    let gb = l.groebner_basis().clone();
    let gens = l.generators().to_vec();
    let degrees: Vec<i64> = l.generator_degrees().iter().map(|&d| d as i64).collect();
    let vectors: Vec<ModuleVector> = gens
        .iter()
        .map(|g| ModuleVector::new(&ring, vec![g.clone()]))
        .collect::<Result<_>>()?;
    let syz = syzygies_graded(&ring, &vectors, Some(&[0]), max_pairs)?;
    let mut relations: Vec<ModuleVector> = Vec::new();
    let mut relation_degrees = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for s in syz {
        let r = s.reduce_mod(&gb);
        if r.is_zero() {
            continue;
        }
        // normalize the scalar so duplicates collapse
        let lead = r
            .components()
            .iter()
            .find(|c| !c.is_zero())
            .and_then(|c| c.leading_term())
            .map(|(_, c)| c.recip())
            .expect("nonzero row");
        let r = ModuleVector::new(&ring, r.components().iter().map(|c| c.scale(&lead)).collect())?;
        if !seen.insert(r.to_strings()) {
            continue;
        }
        let deg = r
            .graded_degree(&degrees)?
            .expect("nonzero row has a degree");
        relations.push(r);
        relation_degrees.push(deg);
    }
    Ok(ConormalPresentation {
        ring,
        generators: gens,
        degrees,
        relations,
        relation_degrees,
        base_gb: gb,
    })
}

/// Structure constants of the bracket on `I/I²` and the anchor.
#[derive(Debug, Clone)]
pub struct BracketStructure {
    ambient: SymplecticRing,
    rank: usize,
    /// `raw[a][b][e]`: exact ambient identity `{f_a,f_b} = Σ_e raw·f_e`, a < b.
    raw: Vec<Vec<Vec<Polynomial>>>,
    /// Same coefficients reduced mod `I`; antisymmetric in `(a, b)`.
    reduced: Vec<Vec<Vec<Polynomial>>>,
    base_gb: GroebnerBasis,
}

impl BracketStructure {
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `c_ab^e ∈ O_L` in normal form, for any `a, b` (antisymmetric, zero on the diagonal).
    pub fn coefficient(&self, a: usize, b: usize, e: usize) -> &Polynomial {
        &self.reduced[a][b][e]
    }

    /// Ambient-ring coefficients for `a < b`, satisfying the identity exactly.
    pub fn raw_coefficients(&self, a: usize, b: usize) -> &[Polynomial] {
        assert!(a < b, "raw coefficients are stored for a < b");
        &self.raw[a][b]
    }

    /// `g ↦ NF({f_a, g})`.
    pub fn anchor(&self, generator: &Polynomial, g: &Polynomial) -> Polynomial {
        self.base_gb
            .normal_form(&self.ambient.poisson_bracket(generator, g))
    }

    pub fn to_json(&self) -> BracketJson {
        let mut coefficients = Vec::new();
        for a in 0..self.rank {
            for b in a + 1..self.rank {
                coefficients.push(PairJson {
                    a,
                    b,
                    coefficients: self.reduced[a][b].iter().map(|c| c.to_string()).collect(),
                });
            }
        }
        BracketJson { coefficients }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BracketJson {
    pub coefficients: Vec<PairJson>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PairJson {
    pub a: usize,
    pub b: usize,
    pub coefficients: Vec<String>,
}

/// Lifts every `{f_a, f_b}` onto the generators. Fails if the ideal is not
/// closed under the bracket or a coefficient has the wrong degree.
pub fn bracket_structure(l: &LagrangianPresentation) -> Result<BracketStructure> {
    let s = l.ambient().clone();
    let ring = s.ring().clone();
    let gens = l.generators();
    let r = gens.len();
    let gb = l.groebner_basis().clone();
    let degrees = l.generator_degrees();
    let w = l.pairing_weight() as i64;
    let zero = Polynomial::zero(&ring);
    let mut raw = vec![vec![vec![zero.clone(); r]; r]; r];
    let mut reduced = vec![vec![vec![zero.clone(); r]; r]; r];
    let lifter = if r > 1 { Some(Lifter::for_ideal(&ring, gens)?) } else { None };
    for a in 0..r {
        for b in a + 1..r {
            let br = s.poisson_bracket(&gens[a], &gens[b]);
            if br.is_zero() {
                continue;
            }
            let c = lifter
                .as_ref()
                .expect("r > 1")
                .lift_polynomial(&br)
                .ok_or_else(|| Error::NotInvolutive(a, b, gb.normal_form(&br).to_string()))?;
            for (e, ce) in c.iter().enumerate() {
                let want = degrees[a] as i64 + degrees[b] as i64 - w - degrees[e] as i64;
                // the lift of a homogeneous element can be chosen homogeneous
                let ce = if want < 0 {
                    zero.clone()
                } else {
                    ce.homogeneous_part(want as u32)
                };
                match ce.weighted_degree() {
                    WeightedDegree::Bottom => {}
                    WeightedDegree::Homogeneous(d) if d as i64 == want => {}
                    _ => {
                        return Err(Error::NotGraded(format!(
                            "structure constant c_{a}{b}^{e} = {ce} should have degree {want}"
                        )))
                    }
                }
                let nf = gb.normal_form(&ce);
                reduced[b][a][e] = -&nf;
                reduced[a][b][e] = nf;
                raw[a][b][e] = ce;
            }
            let mut check = br.clone();
            for (e, ce) in raw[a][b].iter().enumerate() {
                check = &check - &(ce * &gens[e]);
            }
            if !check.is_zero() {
                return Err(Error::NotGraded(format!(
                    "bracket of generators {a}, {b} does not lift homogeneously"
                )));
            }
        }
    }
    Ok(BracketStructure {
        ambient: s,
        rank: r,
        raw,
        reduced,
        base_gb: gb,
    })
}
