//! Canonical symplectic structure on `ℂ^{2n}` and its Poisson bracket.
//!
//! Sign convention: `{p_i, q_j} = δ_ij`, i.e.
//! `{f, g} = Σ_i ∂f/∂p_i · ∂g/∂q_i − ∂f/∂q_i · ∂g/∂p_i`.
//! Auxiliary variables are Poisson-central.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groebner::{buchberger, GroebnerBasis, MonomialOrder};
use crate::polyring::{same_ring, Polynomial, RingDescriptor, WeightedRing};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymplecticRing {
    ring: Arc<WeightedRing>,
    q_vars: Vec<usize>,
    p_vars: Vec<usize>,
    pairing_weight: u32,
}

impl SymplecticRing {
    /// Variables `q1..qn, p1..pn` with `w(p_i) = W − w(q_i)`.
    pub fn standard(q_weights: &[u32], pairing_weight: u32) -> Result<Self> {
        let n = q_weights.len();
        let q_names: Vec<String> = (1..=n).map(|i| format!("q{i}")).collect();
        let p_names: Vec<String> = (1..=n).map(|i| format!("p{i}")).collect();
        Self::with_names(&q_names, &p_names, q_weights, pairing_weight)
    }

    pub fn with_names(
        q_names: &[String],
        p_names: &[String],
        q_weights: &[u32],
        pairing_weight: u32,
    ) -> Result<Self> {
        let n = q_weights.len();
        if n == 0 || q_names.len() != n || p_names.len() != n {
            return Err(Error::InvalidRing("need n ≥ 1 matching q/p names".into()));
        }
        let mut weights = q_weights.to_vec();
        for (i, &w) in q_weights.iter().enumerate() {
            if w >= pairing_weight {
                return Err(Error::InvalidRing(format!(
                    "w({}) = {w} leaves no positive weight for {} under W = {pairing_weight}",
                    q_names[i], p_names[i]
                )));
            }
            weights.push(pairing_weight - w);
        }
        let names: Vec<String> = q_names.iter().chain(p_names).cloned().collect();
        let ring = WeightedRing::new(names, weights)?;
        Ok(Self {
            ring,
            q_vars: (0..n).collect(),
            p_vars: (n..2 * n).collect(),
            pairing_weight,
        })
    }

    /// Wraps an existing ring whose first `2n` variables are `q1..qn, p1..pn`.
    pub fn from_ring(ring: &Arc<WeightedRing>, n: usize, pairing_weight: u32) -> Result<Self> {
        if n == 0 || ring.nvars() < 2 * n {
            return Err(Error::InvalidRing(format!(
                "ring with {} variables cannot hold n = {n} canonical pairs",
                ring.nvars()
            )));
        }
        for i in 0..n {
            let s = ring.weight(i) + ring.weight(n + i);
            if s != pairing_weight {
                return Err(Error::InvalidRing(format!(
                    "w({}) + w({}) = {s}, expected W = {pairing_weight}",
                    ring.name(i),
                    ring.name(n + i)
                )));
            }
        }
        Ok(Self {
            ring: ring.clone(),
            q_vars: (0..n).collect(),
            p_vars: (n..2 * n).collect(),
            pairing_weight,
        })
    }

    pub fn from_descriptor(d: &RingDescriptor) -> Result<Self> {
        let ring = d.build()?;
        let n = d
            .n
            .ok_or_else(|| Error::Malformed("ring descriptor lacks `n`".into()))?;
        let w = d
            .pairing_weight
            .ok_or_else(|| Error::Malformed("ring descriptor lacks `W`".into()))?;
        Self::from_ring(&ring, n, w)
    }

    pub fn descriptor(&self) -> RingDescriptor {
        let mut d = RingDescriptor::of(&self.ring);
        d.n = Some(self.n());
        d.pairing_weight = Some(self.pairing_weight);
        d
    }

    pub fn ring(&self) -> &Arc<WeightedRing> {
        &self.ring
    }

    pub fn n(&self) -> usize {
        self.q_vars.len()
    }

    pub fn pairing_weight(&self) -> u32 {
        self.pairing_weight
    }

    pub fn q_var(&self, i: usize) -> usize {
        self.q_vars[i]
    }

    pub fn p_var(&self, i: usize) -> usize {
        self.p_vars[i]
    }

    pub fn poisson_bracket(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        poisson_bracket(self, f, g)
    }
}

pub fn poisson_bracket(s: &SymplecticRing, f: &Polynomial, g: &Polynomial) -> Polynomial {
    assert!(
        same_ring(f.ring(), &s.ring) && same_ring(g.ring(), &s.ring),
        "bracket arguments must live in the symplectic ring"
    );
    let mut acc = Polynomial::zero(&s.ring);
    if f.is_constant() || g.is_constant() {
        return acc;
    }
    for (&q, &p) in s.q_vars.iter().zip(&s.p_vars) {
        let fp = f.partial_derivative(p);
        if !fp.is_zero() {
            let gq = g.partial_derivative(q);
            if !gq.is_zero() {
                acc = &acc + &(&fp * &gq);
            }
        }
        let fq = f.partial_derivative(q);
        if !fq.is_zero() {
            let gp = g.partial_derivative(p);
            if !gp.is_zero() {
                acc = &acc - &(&fq * &gp);
            }
        }
    }
    acc
}

/// The derivation `g ↦ {h, g}`.
pub fn hamiltonian_field_apply(s: &SymplecticRing, h: &Polynomial, g: &Polynomial) -> Polynomial {
    poisson_bracket(s, h, g)
}

/// Coefficients of `H_h = {h, ·}` on the ring's coordinate vector fields,
/// in ring variable order.
pub fn hamiltonian_vector_field(s: &SymplecticRing, h: &Polynomial) -> Vec<Polynomial> {
    let mut out = vec![Polynomial::zero(&s.ring); s.ring.nvars()];
    for (&q, &p) in s.q_vars.iter().zip(&s.p_vars) {
        out[q] = h.partial_derivative(p);
        out[p] = -h.partial_derivative(q);
    }
    out
}

#[derive(Debug, Clone)]
pub struct InvolutivityReport {
    pub involutive: bool,
    /// First failing pair `(a, b)` and the normal form of `{f_a, f_b}`.
    pub witness: Option<(usize, usize, Polynomial)>,
}

pub fn check_involutive(s: &SymplecticRing, generators: &[Polynomial]) -> Result<InvolutivityReport> {
    let gb = buchberger(&s.ring, generators, &MonomialOrder::WeightedDegRevLex)?;
    Ok(check_involutive_with(s, generators, &gb))
}

pub fn check_involutive_with(
    s: &SymplecticRing,
    generators: &[Polynomial],
    gb: &GroebnerBasis,
) -> InvolutivityReport {
    for a in 0..generators.len() {
        for b in a + 1..generators.len() {
            let r = gb.normal_form(&poisson_bracket(s, &generators[a], &generators[b]));
            if !r.is_zero() {
                return InvolutivityReport {
                    involutive: false,
                    witness: Some((a, b, r)),
                };
            }
        }
    }
    InvolutivityReport {
        involutive: true,
        witness: None,
    }
}
