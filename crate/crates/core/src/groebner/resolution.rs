//! Minimal graded free resolutions over the ambient polynomial ring.

use std::sync::Arc;


use super::engine::{self, MPoly, ModuleOrdering, TermOrder};
use super::{is_unit, syzygies_graded, vec_to_mpoly, ModuleVector, PresentedModule};
use crate::error::{Error, Result};
use crate::polyring::WeightedRing;

/// `0 ← F_0 ← F_1 ← … ← F_len`, minimal: no differential has a unit entry.
#[derive(Debug, Clone)]
pub struct Resolution {
    pub ring: Arc<WeightedRing>,
    /// Degrees of the basis vectors of `F_0, F_1, …`.
    pub degrees: Vec<Vec<i64>>,
    /// `maps[i]` holds the columns of `d_{i+1}: F_{i+1} → F_i`.
    pub maps: Vec<Vec<ModuleVector>>,
    /// False when the length cap stopped the computation early.
    pub complete: bool,
}

impl Resolution {
    pub fn betti_numbers(&self) -> Vec<usize> {
        self.degrees.iter().map(Vec::len).collect()
    }

    /// Index of the last nonzero free module.
    pub fn length(&self) -> usize {
        self.degrees
            .iter()
            .rposition(|d| !d.is_empty())
            .unwrap_or(0)
    }

    pub fn projective_dimension(&self) -> Option<usize> {
        self.complete.then(|| self.length())
    }
}

pub fn minimal_graded_free_resolution(
    module: &PresentedModule,
    length_cap: usize,
) -> Result<Resolution> {
    minimal_graded_free_resolution_capped(module, length_cap, None)
}

pub fn minimal_graded_free_resolution_capped(
    module: &PresentedModule,
    length_cap: usize,
    max_pairs: Option<usize>,
) -> Result<Resolution> {
    let ring = &module.ring;
    let mut d0 = module.generator_degrees.clone();
    if d0.len() != module.ambient_rank {
        return Err(Error::Shape("generator degrees do not match the rank".into()));
    }
    let mut rels = module.ambient_relations();
    for r in &rels {
        r.graded_degree(&d0)?;
    }
    prune_units(ring, &mut d0, &mut rels);
    let rels = minimal_generators(ring, rels, &d0, max_pairs)?;

    let mut degrees = vec![d0];
    let mut maps: Vec<Vec<ModuleVector>> = Vec::new();
    let mut current = rels;
    loop {
        if current.is_empty() {
            return Ok(Resolution {
                ring: ring.clone(),
                degrees,
                maps,
                complete: true,
            });
        }
        if maps.len() >= length_cap {
            return Ok(Resolution {
                ring: ring.clone(),
                degrees,
                maps,
                complete: false,
            });
        }
        let target = degrees.last().expect("nonempty");
        let src: Vec<i64> = current
            .iter()
            .map(|c| c.graded_degree(target).map(|d| d.unwrap_or(0)))
            .collect::<Result<_>>()?;
        let syz = syzygies_graded(ring, &current, Some(target), max_pairs)?;
        let next = minimal_generators(ring, syz, &src, max_pairs)?;
        degrees.push(src);
        maps.push(current);
        current = next;
    }
}

/// Removes generators that a relation with a constant entry makes redundant.
fn prune_units(ring: &Arc<WeightedRing>, degrees: &mut Vec<i64>, rels: &mut Vec<ModuleVector>) {
    rels.retain(|r| !r.is_zero());
    loop {
        let pivot = rels.iter().enumerate().find_map(|(ri, r)| {
            r.components()
                .iter()
                .position(is_unit)
                .map(|ci| (ri, ci))
        });
        let Some((ri, ci)) = pivot else { break };
        let r = rels.remove(ri);
        let c = r.get(ci).terms()[0].1.clone();
        let mut next = Vec::with_capacity(rels.len());
        for s in rels.drain(..) {
            let si = s.get(ci).clone();
            let s = if si.is_zero() {
                s
            } else {
                let factor = si.scale(&c.recip());
                let scaled = r.scale(&factor);
                ModuleVector::new(
                    ring,
                    s.components()
                        .iter()
                        .zip(scaled.components())
                        .map(|(a, b)| a - b)
                        .collect(),
                )
                .expect("same ring")
            };
            let mut comps = s.into_components();
            comps.remove(ci);
            let v = ModuleVector::new(ring, comps).expect("same ring");
            if !v.is_zero() {
                next.push(v);
            }
        }
        *rels = next;
        degrees.remove(ci);
    }
}

/// A minimal generating set by graded Nakayama: scan in degree order and
/// keep a vector only if it is not in the span of those already kept.
pub(crate) fn minimal_generators(
    ring: &Arc<WeightedRing>,
    mut vectors: Vec<ModuleVector>,
    shifts: &[i64],
    max_pairs: Option<usize>,
) -> Result<Vec<ModuleVector>> {
    vectors.retain(|v| !v.is_zero());
    let mut keyed: Vec<(i64, ModuleVector)> = vectors
        .into_iter()
        .map(|v| Ok((v.graded_degree(shifts)?.unwrap_or(0), v)))
        .collect::<Result<_>>()?;
    keyed.sort_by_key(|(d, _)| *d);
    let order = TermOrder::module(ring.weights(), ModuleOrdering::Top, shifts.to_vec());
    let mut kept: Vec<ModuleVector> = Vec::new();
    let mut basis: Vec<MPoly> = Vec::new();
    for (_, v) in keyed {
        let p = vec_to_mpoly(&order, &v, 0);
        if !basis.is_empty() && engine::reduce(&order, p, &basis).is_zero() {
            continue;
        }
        kept.push(v);
        let input: Vec<MPoly> = kept.iter().map(|k| vec_to_mpoly(&order, k, 0)).collect();
        basis = engine::groebner(&order, input, max_pairs)?;
    }
    Ok(kept)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::Polynomial;

    fn ring(names: &[&str], w: &[u32]) -> Arc<WeightedRing> {
        WeightedRing::new(names.to_vec(), w.to_vec()).unwrap()
    }

    fn p(r: &Arc<WeightedRing>, s: &str) -> Polynomial {
        Polynomial::parse(r, s).unwrap()
    }

    #[test]
    fn hypersurface_has_length_one() {
        let r = ring(&["q", "p"], &[2, 3]);
        let m = PresentedModule::quotient_ring(&r, &[p(&r, "p^2 - q^3")]);
        let res = minimal_graded_free_resolution(&m, 5).unwrap();
        assert_eq!(res.betti_numbers(), vec![1, 1]);
        assert_eq!(res.degrees[1], vec![6]);
        assert_eq!(res.projective_dimension(), Some(1));
    }

    #[test]
    fn koszul_resolution_of_the_origin() {
        let r = ring(&["x", "y"], &[1, 1]);
        let m = PresentedModule::quotient_ring(&r, &[p(&r, "x"), p(&r, "y")]);
        let res = minimal_graded_free_resolution(&m, 5).unwrap();
        assert_eq!(res.betti_numbers(), vec![1, 2, 1]);
        assert_eq!(res.projective_dimension(), Some(2));
        // d1 ∘ d2 = 0
        let d1: Vec<Polynomial> = res.maps[0].iter().map(|c| c.get(0).clone()).collect();
        for col in &res.maps[1] {
            assert!(col.dot(&d1).is_zero());
        }
    }

    #[test]
    fn free_module_has_length_zero() {
        let r = ring(&["x", "y"], &[1, 1]);
        let m = PresentedModule::free(&r, vec![0, 1]);
        let res = minimal_graded_free_resolution(&m, 5).unwrap();
        assert_eq!(res.betti_numbers(), vec![2]);
        assert_eq!(res.projective_dimension(), Some(0));
    }

    #[test]
    fn redundant_presentation_is_minimized() {
        let r = ring(&["x", "y"], &[1, 1]);
        // e1 = x e0 makes e1 redundant; leaves R/(x^2) ... via relation x*e1
        let rels = vec![
            ModuleVector::new(&r, vec![p(&r, "x"), p(&r, "-1")]).unwrap(),
            ModuleVector::new(&r, vec![p(&r, "0"), p(&r, "x")]).unwrap(),
            ModuleVector::new(&r, vec![p(&r, "x^2"), p(&r, "0")]).unwrap(),
        ];
        let m = PresentedModule {
            ring: r.clone(),
            ambient_rank: 2,
            relations: rels,
            generator_degrees: vec![0, 1],
            base: vec![],
            embedding: None,
        };
        let res = minimal_graded_free_resolution(&m, 5).unwrap();
        assert_eq!(res.betti_numbers(), vec![1, 1]);
    }

    #[test]
    fn ungraded_input_is_rejected() {
        let r = ring(&["x", "y"], &[1, 1]);
        let m = PresentedModule::quotient_ring(&r, &[p(&r, "x + y^2")]);
        assert!(matches!(
            minimal_graded_free_resolution(&m, 5),
            Err(Error::NotGraded(_))
        ));
    }
}
