//! Gröbner bases for ideals and submodules of free modules.
//!
//! Everything here is built on one Buchberger engine ([`engine`]) working on
//! module elements. Ideal bases, normal forms, elimination, syzygies,
//! lifts, kernels of module maps and minimal graded free resolutions all
//! reduce to it.

pub(crate) mod engine;
mod resolution;

use std::collections::HashSet;
use std::sync::Arc;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polyring::{same_ring, ExponentVector, Polynomial, Rational, WeightedRing};
use engine::{MPoly, MTerm, ModuleOrdering, TermOrder};

pub use resolution::{minimal_graded_free_resolution, minimal_graded_free_resolution_capped, Resolution};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MonomialOrder {
    /// Weighted degree with the ring's weights, ties broken reverse lexicographically.
    WeightedDegRevLex,
    /// Any monomial involving a block variable ranks above all that do not.
    BlockElimination { first_block: Vec<usize> },
}

impl MonomialOrder {
    pub(crate) fn term_order(&self, ring: &WeightedRing) -> TermOrder {
        match self {
            MonomialOrder::WeightedDegRevLex => TermOrder::ideal(ring.weights(), None),
            MonomialOrder::BlockElimination { first_block } => {
                TermOrder::ideal(ring.weights(), Some(first_block))
            }
        }
    }
}

pub(crate) fn to_mpoly(order: &TermOrder, p: &Polynomial, comp: u32) -> MPoly {
    let terms = p
        .terms()
        .iter()
        .map(|(m, c)| MTerm {
            comp,
            mono: *m,
            coeff: c.clone(),
        })
        .collect();
    if order.block_weights.is_none() && order.module == ModuleOrdering::Pot {
        // ring order and engine order agree inside one component
        MPoly { terms }
    } else {
        MPoly::from_unsorted(order, terms)
    }
}

pub(crate) fn from_mpoly(ring: &Arc<WeightedRing>, order: &TermOrder, p: &MPoly) -> Polynomial {
    let terms = p.terms.iter().map(|t| (t.mono, t.coeff.clone()));
    if order.block_weights.is_none() {
        Polynomial::from_sorted_terms(ring, terms.collect())
    } else {
        Polynomial::from_terms(ring, terms)
    }
}

/// A Gröbner basis of an ideal together with the order it is taken in.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    ring: Arc<WeightedRing>,
    order: MonomialOrder,
    generators: Vec<Polynomial>,
    reduced: bool,
    internal: Vec<MPoly>,
    term_order: TermOrder,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Arc<WeightedRing> {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    /// Basis elements, monic, sorted ascending by leading term.
    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<ExponentVector> {
        self.internal.iter().map(|g| g.lead().mono).collect()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        assert!(same_ring(f.ring(), &self.ring), "polynomial ring mismatch");
        if self.internal.is_empty() || f.is_zero() {
            return f.clone();
        }
        let p = to_mpoly(&self.term_order, f, 0);
        let r = engine::reduce(&self.term_order, p, &self.internal);
        from_mpoly(&self.ring, &self.term_order, &r)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Monomials of the given weighted degree outside the leading-term ideal,
    /// in descending ring order.
    pub fn standard_monomials(&self, degree: u32) -> Vec<ExponentVector> {
        let leads = self.leading_monomials();
        self.ring
            .monomials_of_degree(degree)
            .into_iter()
            .filter(|m| !leads.iter().any(|l| l.divides(m)))
            .collect()
    }

    /// The basis with coefficients reduced mod `2^61 − 1`, or `None` when a
    /// denominator vanishes there. Its normal form is the image of the
    /// rational one.
    pub fn modular(&self) -> Option<ModularBasis> {
        let mut polys = Vec::with_capacity(self.internal.len());
        for g in &self.internal {
            let mut terms = Vec::with_capacity(g.terms.len());
            for t in &g.terms {
                terms.push((t.mono, crate::linalg::rational_mod_p(&t.coeff)?));
            }
            polys.push(terms);
        }
        Some(ModularBasis {
            order: self.term_order.clone(),
            polys,
        })
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.generators.iter().any(|g| g.is_constant() && !g.is_zero())
    }
}

/// Runs `f` so that every Gröbner computation it starts on this thread fails
/// with a resource-cap error once `limit` has elapsed.
pub fn with_time_limit<T>(limit: Option<std::time::Duration>, f: impl FnOnce() -> T) -> T {
    engine::with_deadline(limit.map(|l| std::time::Instant::now() + l), f)
}

/// A monic Gröbner basis over `F_p`, `p = 2^61 − 1`, for fast normal forms.
#[derive(Debug, Clone)]
pub struct ModularBasis {
    order: TermOrder,
    /// Terms in descending order, leading coefficient 1.
    polys: Vec<Vec<(ExponentVector, u64)>>,
}

impl ModularBasis {
    /// Full reduction of `sum c·m`; the result is in descending order.
    pub fn normal_form(&self, mut terms: Vec<(ExponentVector, u64)>) -> Vec<(ExponentVector, u64)> {
        use crate::linalg::{mul_mod, neg_mod, MODULUS};
        use std::cmp::Ordering;
        terms.sort_by(|a, b| self.order.cmp_mono(&b.0, &a.0));
        let mut cur: Vec<(ExponentVector, u64)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match cur.last_mut() {
                Some(last) if last.0 == m => last.1 = (last.1 + c) % MODULUS,
                _ => cur.push((m, c % MODULUS)),
            }
        }
        cur.retain(|t| t.1 != 0);
        let mut rem = Vec::new();
        let mut idx = 0;
        while idx < cur.len() {
            let (m, c) = cur[idx];
            let Some(g) = self.polys.iter().find(|g| g[0].0.divides(&m)) else {
                rem.push(cur[idx]);
                idx += 1;
                continue;
            };
            let q = g[0].0.quotient_of(&m);
            let a = &cur[idx + 1..];
            let b = &g[1..];
            let mut out = Vec::with_capacity(a.len() + b.len());
            let (mut i, mut j) = (0, 0);
            while i < a.len() || j < b.len() {
                if j == b.len() {
                    out.extend_from_slice(&a[i..]);
                    break;
                }
                let bm = b[j].0.mul(&q);
                let ord = if i == a.len() {
                    Ordering::Less
                } else {
                    self.order.cmp_mono(&a[i].0, &bm)
                };
                match ord {
                    Ordering::Greater => {
                        out.push(a[i]);
                        i += 1;
                    }
                    Ordering::Less => {
                        out.push((bm, neg_mod(mul_mod(c, b[j].1))));
                        j += 1;
                    }
                    Ordering::Equal => {
                        let v = (a[i].1 + neg_mod(mul_mod(c, b[j].1))) % MODULUS;
                        if v != 0 {
                            out.push((a[i].0, v));
                        }
                        i += 1;
                        j += 1;
                    }
                }
            }
            cur = out;
            idx = 0;
        }
        rem
    }
}

pub fn buchberger(
    ring: &Arc<WeightedRing>,
    generators: &[Polynomial],
    order: &MonomialOrder,
) -> Result<GroebnerBasis> {
    buchberger_capped(ring, generators, order, None)
}

/// [`buchberger`] with a bound on the number of S-pairs reduced.
pub fn buchberger_capped(
    ring: &Arc<WeightedRing>,
    generators: &[Polynomial],
    order: &MonomialOrder,
    max_pairs: Option<usize>,
) -> Result<GroebnerBasis> {
    if generators.iter().any(|g| !same_ring(g.ring(), ring)) {
        return Err(Error::RingMismatch);
    }
    if let MonomialOrder::BlockElimination { first_block } = order {
        if first_block.iter().any(|&v| v >= ring.nvars()) {
            return Err(Error::InvalidArgument("block variable out of range".into()));
        }
    }
    let term_order = order.term_order(ring);
    let input: Vec<MPoly> = generators
        .iter()
        .map(|g| to_mpoly(&term_order, g, 0))
        .collect();
    let internal = engine::groebner(&term_order, input, max_pairs)?;
    let generators = internal
        .iter()
        .map(|g| from_mpoly(ring, &term_order, g))
        .collect();
    Ok(GroebnerBasis {
        ring: ring.clone(),
        order: order.clone(),
        generators,
        reduced: true,
        internal,
        term_order,
    })
}

pub fn normal_form(f: &Polynomial, basis: &GroebnerBasis) -> Polynomial {
    basis.normal_form(f)
}

pub fn standard_monomials(basis: &GroebnerBasis, degree: u32) -> Vec<ExponentVector> {
    basis.standard_monomials(degree)
}

/// Generators of `I ∩ k[remaining variables]`, returned in the ring on the
/// remaining variables (same names and weights). The output is the reduced
/// Gröbner basis of the elimination ideal for the weighted degrevlex order.
pub fn elimination_ideal(
    generators: &[Polynomial],
    ring: &Arc<WeightedRing>,
    drop: &[usize],
    max_pairs: Option<usize>,
) -> Result<(Arc<WeightedRing>, Vec<Polynomial>)> {
    let keep: Vec<usize> = (0..ring.nvars()).filter(|v| !drop.contains(v)).collect();
    let small = WeightedRing::new(
        keep.iter().map(|&v| ring.name(v).to_string()).collect(),
        keep.iter().map(|&v| ring.weight(v)).collect(),
    )?;
    let order = MonomialOrder::BlockElimination {
        first_block: drop.to_vec(),
    };
    let gb = buchberger_capped(ring, generators, &order, max_pairs)?;
    let mut out = Vec::new();
    for g in gb.generators() {
        if drop.iter().any(|&v| g.uses_var(v)) {
            continue;
        }
        out.push(g.restrict_to_ring(&small)?);
    }
    // already reduced for the induced order; resort by leading term
    out.sort_by(|a, b| {
        small.cmp_monomials(&a.leading_term().unwrap().0, &b.leading_term().unwrap().0)
    });
    Ok((small, out))
}

/// Probes `f ∈ rad(I)` by testing `f^e ∈ I` for `e = 1..=max_power`.
/// Returns the first exponent that works.
pub fn radical_membership(f: &Polynomial, basis: &GroebnerBasis, max_power: u32) -> Option<u32> {
    let mut power = f.clone();
    for e in 1..=max_power {
        if basis.contains(&power) {
            return Some(e);
        }
        power = &power * f;
    }
    None
}

/// Krull dimension of `R/I` read off the leading-term ideal: the size of a
/// largest set of variables containing the support of no leading monomial.
pub fn krull_dimension(basis: &GroebnerBasis) -> usize {
    let n = basis.ring.nvars();
    if basis.is_unit_ideal() {
        return 0;
    }
    let leads: Vec<u32> = basis
        .leading_monomials()
        .iter()
        .map(|m| (0..n).filter(|&v| m.get(v) > 0).fold(0u32, |acc, v| acc | (1 << v)))
        .collect();
    (0u32..(1u32 << n))
        .filter(|set| leads.iter().all(|l| l & !set != 0))
        .map(|set| set.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// A minimal homogeneous generating set of a graded ideal, chosen greedily
/// from `generators` in ascending degree (graded Nakayama).
pub fn minimal_ideal_generators(
    ring: &Arc<WeightedRing>,
    generators: &[Polynomial],
    max_pairs: Option<usize>,
) -> Result<Vec<Polynomial>> {
    let vectors: Vec<ModuleVector> = generators
        .iter()
        .map(|g| ModuleVector::new(ring, vec![g.clone()]))
        .collect::<Result<_>>()?;
    let kept = resolution::minimal_generators(ring, vectors, &[0], max_pairs)?;
    Ok(kept.into_iter().map(|v| v.components[0].clone()).collect())
}

/// An element of a free module `R^r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleVector {
    ring: Arc<WeightedRing>,
    components: Vec<Polynomial>,
}

impl ModuleVector {
    pub fn new(ring: &Arc<WeightedRing>, components: Vec<Polynomial>) -> Result<Self> {
        if components.iter().any(|c| !same_ring(c.ring(), ring)) {
            return Err(Error::RingMismatch);
        }
        Ok(Self {
            ring: ring.clone(),
            components,
        })
    }

    pub fn zero(ring: &Arc<WeightedRing>, rank: usize) -> Self {
        Self {
            ring: ring.clone(),
            components: vec![Polynomial::zero(ring); rank],
        }
    }

    pub fn unit(ring: &Arc<WeightedRing>, rank: usize, i: usize) -> Self {
        let mut v = Self::zero(ring, rank);
        v.components[i] = Polynomial::one(ring);
        v
    }

    pub fn ring(&self) -> &Arc<WeightedRing> {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn into_components(self) -> Vec<Polynomial> {
        self.components
    }

    pub fn get(&self, i: usize) -> &Polynomial {
        &self.components[i]
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Polynomial::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            ring: self.ring.clone(),
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, f: &Polynomial) -> Self {
        Self {
            ring: self.ring.clone(),
            components: self.components.iter().map(|c| c * f).collect(),
        }
    }

    /// `Σ self_i · other_i`.
    pub fn dot(&self, other: &[Polynomial]) -> Polynomial {
        let mut acc = Polynomial::zero(&self.ring);
        for (a, b) in self.components.iter().zip(other) {
            if !a.is_zero() && !b.is_zero() {
                acc = &acc + &(a * b);
            }
        }
        acc
    }

    pub fn reduce_mod(&self, basis: &GroebnerBasis) -> Self {
        Self {
            ring: self.ring.clone(),
            components: self.components.iter().map(|c| basis.normal_form(c)).collect(),
        }
    }

    /// Weighted degree when every entry `i` is homogeneous of degree
    /// `deg - shifts[i]`; `None` for the zero vector.
    pub fn graded_degree(&self, shifts: &[i64]) -> Result<Option<i64>> {
        let mut deg = None;
        for (c, s) in self.components.iter().zip(shifts) {
            match c.weighted_degree() {
                crate::polyring::WeightedDegree::Bottom => {}
                crate::polyring::WeightedDegree::Inhomogeneous => {
                    return Err(Error::NotGraded(format!("entry {c} is not quasihomogeneous")))
                }
                crate::polyring::WeightedDegree::Homogeneous(d) => {
                    let t = d as i64 + s;
                    match deg {
                        None => deg = Some(t),
                        Some(e) if e == t => {}
                        Some(e) => {
                            return Err(Error::NotGraded(format!(
                                "vector mixes degrees {e} and {t}"
                            )))
                        }
                    }
                }
            }
        }
        Ok(deg)
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.components.iter().map(|c| c.to_string()).collect()
    }
}

fn vec_to_mpoly(order: &TermOrder, v: &ModuleVector, offset: u32) -> MPoly {
    let mut terms = Vec::new();
    for (i, c) in v.components.iter().enumerate() {
        for (m, coeff) in c.terms() {
            terms.push(MTerm {
                comp: offset + i as u32,
                mono: *m,
                coeff: coeff.clone(),
            });
        }
    }
    MPoly::from_unsorted(order, terms)
}

fn mpoly_to_vec(ring: &Arc<WeightedRing>, p: &MPoly, from: u32, rank: usize) -> ModuleVector {
    let mut comps: Vec<Vec<(ExponentVector, Rational)>> = vec![Vec::new(); rank];
    for t in &p.terms {
        if t.comp >= from && ((t.comp - from) as usize) < rank {
            comps[(t.comp - from) as usize].push((t.mono, t.coeff.clone()));
        }
    }
    ModuleVector {
        ring: ring.clone(),
        components: comps
            .into_iter()
            .map(|ts| Polynomial::from_terms(ring, ts))
            .collect(),
    }
}

fn vector_degree(order: &TermOrder, v: &MPoly) -> i64 {
    v.max_degree(order)
}

fn check_vectors(ring: &Arc<WeightedRing>, vectors: &[ModuleVector]) -> Result<usize> {
    let rank = vectors.first().map_or(0, |v| v.rank());
    for v in vectors {
        if !same_ring(&v.ring, ring) {
            return Err(Error::RingMismatch);
        }
        if v.rank() != rank {
            return Err(Error::Shape(format!(
                "vectors of rank {} and {} mixed",
                rank,
                v.rank()
            )));
        }
    }
    Ok(rank)
}

/// Gröbner basis of `[v_i | e_i]` in `R^{r+s}` for a position-over-term order
/// putting the original `r` slots first.
struct Augmented {
    order: TermOrder,
    basis: Vec<MPoly>,
    rank: usize,
    count: usize,
}

impl Augmented {
    fn new(
        ring: &Arc<WeightedRing>,
        vectors: &[ModuleVector],
        shifts: Option<&[i64]>,
        max_pairs: Option<usize>,
    ) -> Result<Self> {
        let rank = check_vectors(ring, vectors)?;
        let s = vectors.len();
        let mut all_shifts: Vec<i64> = match shifts {
            Some(sh) => sh.to_vec(),
            None => vec![0; rank],
        };
        let base_order = TermOrder::module(ring.weights(), ModuleOrdering::Pot, all_shifts.clone());
        for v in vectors {
            let p = vec_to_mpoly(&base_order, v, 0);
            all_shifts.push(if p.is_zero() { 0 } else { vector_degree(&base_order, &p) });
        }
        let order = TermOrder::module(ring.weights(), ModuleOrdering::Pot, all_shifts);
        let input: Vec<MPoly> = vectors
            .iter()
            .enumerate()
            .map(|(i, v)| {
                let mut p = vec_to_mpoly(&order, v, 0);
                p.terms.push(MTerm {
                    comp: (rank + i) as u32,
                    mono: ExponentVector::one(),
                    coeff: Rational::one(),
                });
                p
            })
            .collect();
        let basis = engine::groebner(&order, input, max_pairs)?;
        Ok(Self {
            order,
            basis,
            rank,
            count: s,
        })
    }

    fn syzygies(&self, ring: &Arc<WeightedRing>) -> Vec<ModuleVector> {
        self.basis
            .iter()
            .filter(|g| g.lead().comp as usize >= self.rank)
            .map(|g| mpoly_to_vec(ring, g, self.rank as u32, self.count))
            .collect()
    }
}

/// Generators of the module of relations `Σ a_i v_i = 0`.
pub fn syzygies(ring: &Arc<WeightedRing>, vectors: &[ModuleVector]) -> Result<Vec<ModuleVector>> {
    syzygies_graded(ring, vectors, None, None)
}

/// [`syzygies`] with optional component degree shifts (for the selection
/// strategy) and an S-pair cap.
pub fn syzygies_graded(
    ring: &Arc<WeightedRing>,
    vectors: &[ModuleVector],
    shifts: Option<&[i64]>,
    max_pairs: Option<usize>,
) -> Result<Vec<ModuleVector>> {
    if vectors.is_empty() {
        return Ok(Vec::new());
    }
    Ok(Augmented::new(ring, vectors, shifts, max_pairs)?.syzygies(ring))
}

/// Expresses members of a submodule as combinations of its generators.
pub struct Lifter {
    ring: Arc<WeightedRing>,
    aug: Augmented,
}

impl Lifter {
    pub fn new(ring: &Arc<WeightedRing>, generators: &[ModuleVector]) -> Result<Self> {
        Ok(Self {
            ring: ring.clone(),
            aug: Augmented::new(ring, generators, None, None)?,
        })
    }

    pub fn for_ideal(ring: &Arc<WeightedRing>, generators: &[Polynomial]) -> Result<Self> {
        let vs: Vec<ModuleVector> = generators
            .iter()
            .map(|g| ModuleVector::new(ring, vec![g.clone()]))
            .collect::<Result<_>>()?;
        Self::new(ring, &vs)
    }

    /// Coefficients `c` with `Σ c_i g_i = target`, or `None` if the target
    /// is not in the submodule.
    pub fn lift(&self, target: &ModuleVector) -> Option<Vec<Polynomial>> {
        let aug = &self.aug;
        let p = vec_to_mpoly(&aug.order, target, 0);
        let r = engine::reduce(&aug.order, p, &aug.basis);
        if r.terms.iter().any(|t| (t.comp as usize) < aug.rank) {
            return None;
        }
        let v = mpoly_to_vec(&self.ring, &r, aug.rank as u32, aug.count);
        Some(v.components.iter().map(|c| -c).collect())
    }

    pub fn lift_polynomial(&self, target: &Polynomial) -> Option<Vec<Polynomial>> {
        self.lift(&ModuleVector::new(&self.ring, vec![target.clone()]).ok()?)
    }
}

/// A finitely presented module `F / ⟨relations⟩` over `R` or over `R/base`.
#[derive(Debug, Clone)]
pub struct PresentedModule {
    pub ring: Arc<WeightedRing>,
    pub ambient_rank: usize,
    pub relations: Vec<ModuleVector>,
    pub generator_degrees: Vec<i64>,
    /// Generators of the base ideal; empty means the ambient polynomial ring.
    pub base: Vec<Polynomial>,
    /// Images of the generators inside a free module, when the module was
    /// produced as a submodule (e.g. a kernel).
    pub embedding: Option<Vec<ModuleVector>>,
}

impl PresentedModule {
    pub fn free(ring: &Arc<WeightedRing>, degrees: Vec<i64>) -> Self {
        Self {
            ring: ring.clone(),
            ambient_rank: degrees.len(),
            relations: Vec::new(),
            generator_degrees: degrees,
            base: Vec::new(),
            embedding: None,
        }
    }

    /// `R / ⟨generators⟩` as a cyclic module.
    pub fn quotient_ring(ring: &Arc<WeightedRing>, generators: &[Polynomial]) -> Self {
        Self {
            ring: ring.clone(),
            ambient_rank: 1,
            relations: generators
                .iter()
                .map(|g| ModuleVector {
                    ring: ring.clone(),
                    components: vec![g.clone()],
                })
                .collect(),
            generator_degrees: vec![0],
            base: Vec::new(),
            embedding: None,
        }
    }

    /// Relations over the ambient polynomial ring: the stated relations plus
    /// `f · e_i` for every base generator `f` and every slot `i`.
    pub fn ambient_relations(&self) -> Vec<ModuleVector> {
        let mut rels = self.relations.clone();
        for i in 0..self.ambient_rank {
            for f in &self.base {
                let mut v = ModuleVector::zero(&self.ring, self.ambient_rank);
                v.components[i] = f.clone();
                rels.push(v);
            }
        }
        rels
    }

    pub fn is_graded(&self) -> bool {
        self.ambient_relations()
            .iter()
            .all(|r| r.graded_degree(&self.generator_degrees).is_ok())
    }
}

/// `{v : matrix · v ≡ 0 mod base}`. `matrix` is given by rows; each row has
/// one entry per source slot. `source_degrees` grades the source free module.
pub fn kernel_of_module_map(
    ring: &Arc<WeightedRing>,
    matrix: &[ModuleVector],
    ncols: usize,
    base: Option<&GroebnerBasis>,
    source_degrees: Option<&[i64]>,
) -> Result<PresentedModule> {
    kernel_of_module_map_capped(ring, matrix, ncols, base, source_degrees, None)
}

pub fn kernel_of_module_map_capped(
    ring: &Arc<WeightedRing>,
    matrix: &[ModuleVector],
    ncols: usize,
    base: Option<&GroebnerBasis>,
    source_degrees: Option<&[i64]>,
    max_pairs: Option<usize>,
) -> Result<PresentedModule> {
    let nrows = matrix.len();
    for row in matrix {
        if row.rank() != ncols {
            return Err(Error::Shape(format!(
                "row of length {} in a map with {ncols} columns",
                row.rank()
            )));
        }
    }
    let degrees: Vec<i64> = source_degrees.map_or(vec![0; ncols], |d| d.to_vec());
    let base_gens: Vec<Polynomial> = base.map_or(Vec::new(), |b| b.generators().to_vec());

    let generators: Vec<ModuleVector> = if nrows == 0 {
        (0..ncols).map(|j| ModuleVector::unit(ring, ncols, j)).collect()
    } else {
        // columns of the matrix, then f * e_i for the base ideal
        let mut vectors: Vec<ModuleVector> = (0..ncols)
            .map(|j| ModuleVector {
                ring: ring.clone(),
                components: matrix.iter().map(|row| row.components[j].clone()).collect(),
            })
            .collect();
        for i in 0..nrows {
            for f in &base_gens {
                let mut v = ModuleVector::zero(ring, nrows);
                v.components[i] = f.clone();
                vectors.push(v);
            }
        }
        let target_shifts = row_shifts(matrix, &degrees);
        let syz = syzygies_graded(ring, &vectors, target_shifts.as_deref(), max_pairs)?;
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for s in syz {
            let mut v = ModuleVector {
                ring: ring.clone(),
                components: s.components[..ncols].to_vec(),
            };
            if let Some(b) = base {
                v = v.reduce_mod(b);
            }
            if v.is_zero() {
                continue;
            }
            let key = v.to_strings();
            if seen.insert(key) {
                out.push(v);
            }
        }
        out
    };
    submodule_presentation(ring, generators, base, &degrees, max_pairs)
}

/// Target-slot degrees making the map homogeneous, when they can be read off.
fn row_shifts(matrix: &[ModuleVector], source_degrees: &[i64]) -> Option<Vec<i64>> {
    let mut out = Vec::with_capacity(matrix.len());
    for row in matrix {
        let mut deg = None;
        for (c, s) in row.components.iter().zip(source_degrees) {
            if let Some(d) = c.weighted_degree().value() {
                deg = Some(d as i64 + s);
                break;
            }
        }
        out.push(deg.unwrap_or(0));
    }
    Some(out)
}

/// Presents the submodule generated by `generators` inside `(R/base)^n`.
pub fn submodule_presentation(
    ring: &Arc<WeightedRing>,
    generators: Vec<ModuleVector>,
    base: Option<&GroebnerBasis>,
    slot_degrees: &[i64],
    max_pairs: Option<usize>,
) -> Result<PresentedModule> {
    let n = slot_degrees.len();
    let base_gens: Vec<Polynomial> = base.map_or(Vec::new(), |b| b.generators().to_vec());
    let t = generators.len();
    let mut gen_degrees = Vec::with_capacity(t);
    for g in &generators {
        let d = g
            .graded_degree(slot_degrees)
            .ok()
            .flatten()
            .unwrap_or(0);
        gen_degrees.push(d);
    }
    let mut vectors = generators.clone();
    for i in 0..n {
        for f in &base_gens {
            let mut v = ModuleVector::zero(ring, n);
            v.components[i] = f.clone();
            vectors.push(v);
        }
    }
    let relations = if t == 0 {
        Vec::new()
    } else {
        let syz = syzygies_graded(ring, &vectors, Some(slot_degrees), max_pairs)?;
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for s in syz {
            let mut v = ModuleVector {
                ring: ring.clone(),
                components: s.components[..t].to_vec(),
            };
            if let Some(b) = base {
                v = v.reduce_mod(b);
            }
            if !v.is_zero() && seen.insert(v.to_strings()) {
                out.push(v);
            }
        }
        out
    };
    Ok(PresentedModule {
        ring: ring.clone(),
        ambient_rank: t,
        relations,
        generator_degrees: gen_degrees,
        base: base_gens,
        embedding: Some(generators),
    })
}

pub(crate) fn is_unit(p: &Polynomial) -> bool {
    p.len() == 1 && p.terms()[0].0.is_one() && !p.terms()[0].1.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::rat;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn ring(names: &[&str], w: &[u32]) -> Arc<WeightedRing> {
        WeightedRing::new(names.to_vec(), w.to_vec()).unwrap()
    }

    fn p(r: &Arc<WeightedRing>, s: &str) -> Polynomial {
        Polynomial::parse(r, s).unwrap()
    }

    fn random_poly(r: &Arc<WeightedRing>, rng: &mut ChaCha8Rng, max_deg: u32) -> Polynomial {
        let mut terms = Vec::new();
        for _ in 0..rng.gen_range(1..4) {
            let d = rng.gen_range(0..=max_deg);
            let ms = r.monomials_of_degree(d);
            if ms.is_empty() {
                continue;
            }
            let m = ms[rng.gen_range(0..ms.len())];
            terms.push((m, rat(rng.gen_range(-5..=5), rng.gen_range(1..4))));
        }
        Polynomial::from_terms(r, terms)
    }

    #[test]
    fn single_generator_is_its_own_basis() {
        let r = ring(&["x", "y"], &[1, 1]);
        let gb = buchberger(&r, &[p(&r, "x")], &MonomialOrder::WeightedDegRevLex).unwrap();
        assert_eq!(gb.generators(), &[p(&r, "x")]);
        assert!(buchberger(&r, &[], &MonomialOrder::WeightedDegRevLex)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn ideal_membership_of_random_combinations() {
        let r = ring(&["x", "y"], &[1, 1]);
        let gens = [p(&r, "x^2"), p(&r, "x*y - x")];
        let gb = buchberger(&r, &gens, &MonomialOrder::WeightedDegRevLex).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let a = random_poly(&r, &mut rng, 3);
            let b = random_poly(&r, &mut rng, 3);
            let f = &(&a * &gens[0]) + &(&b * &gens[1]);
            assert!(gb.normal_form(&f).is_zero());
        }
        // and the ideal is proper
        assert!(!gb.contains(&p(&r, "x")));
        assert!(!gb.contains(&p(&r, "y")));
    }

    #[test]
    fn normal_form_examples() {
        let r = ring(&["x", "y"], &[1, 1]);
        let gb = buchberger(&r, &[p(&r, "x")], &MonomialOrder::WeightedDegRevLex).unwrap();
        assert!(gb.normal_form(&p(&r, "x^2")).is_zero());
        assert_eq!(gb.normal_form(&p(&r, "y")), p(&r, "y"));

        let s = ring(&["q1", "p1"], &[2, 3]);
        let gb = buchberger(&s, &[p(&s, "9*p1^2 + 16*q1^3")], &MonomialOrder::WeightedDegRevLex)
            .unwrap();
        // q1^3 leads in degrevlex, so p1^2 is already reduced; reduce q1^3 instead
        assert_eq!(gb.normal_form(&p(&s, "q1^3")), p(&s, "-9/16*p1^2"));
        let gb_p = buchberger(
            &s,
            &[p(&s, "9*p1^2 + 16*q1^3")],
            &MonomialOrder::BlockElimination { first_block: vec![1] },
        )
        .unwrap();
        assert_eq!(gb_p.normal_form(&p(&s, "p1^2")), p(&s, "-16/9*q1^3"));
    }

    #[test]
    fn elimination_examples() {
        let r = ring(&["x", "q1", "p1"], &[1, 2, 1]);
        let (small, gens) =
            elimination_ideal(&[p(&r, "x^2 + q1"), p(&r, "p1 - x")], &r, &[0], None).unwrap();
        assert_eq!(small.names(), &["q1", "p1"]);
        assert_eq!(gens, vec![p(&small, "q1 + p1^2")]);

        let (_, gens) = elimination_ideal(&[p(&r, "x")], &r, &[0], None).unwrap();
        assert!(gens.is_empty());
    }

    #[test]
    fn elimination_with_radical_probe() {
        let r = ring(&["x", "q1", "p1"], &[1, 2, 3]);
        let gens = [p(&r, "(x^2 + q1)^2"), p(&r, "p1 - 2/3*x^3 - 2*q1*x")];
        let (small, elim) = elimination_ideal(&gens, &r, &[0], None).unwrap();
        let gb = buchberger(&small, &elim, &MonomialOrder::WeightedDegRevLex).unwrap();
        let target = p(&small, "9*p1^2 + 16*q1^3");
        assert!(radical_membership(&target, &gb, 4).is_some());
        // every eliminated generator lies in the original ideal
        let full = buchberger(&r, &gens, &MonomialOrder::WeightedDegRevLex).unwrap();
        for g in &elim {
            assert!(full.contains(&g.map_to_ring(&r).unwrap()));
        }
    }

    #[test]
    fn syzygy_examples() {
        let r = ring(&["x", "y"], &[1, 1]);
        let v = |s: &str| ModuleVector::new(&r, vec![p(&r, s)]).unwrap();
        assert!(syzygies(&r, &[v("x^2 + y")]).unwrap().is_empty());
        let syz = syzygies(&r, &[v("x"), v("y")]).unwrap();
        assert_eq!(syz.len(), 1);
        assert_eq!(syz[0].components(), &[p(&r, "y"), p(&r, "-x")]);
        let syz = syzygies(&r, &[v("x + y"), v("x + y")]).unwrap();
        assert!(syz
            .iter()
            .any(|s| s.components() == [p(&r, "1"), p(&r, "-1")]));
    }

    #[test]
    fn syzygies_annihilate_inputs() {
        let r = ring(&["x", "y", "z"], &[1, 1, 1]);
        let gens = ["x*y - z^2", "y^2 - x*z", "x^2 - y*z"];
        let vs: Vec<_> = gens
            .iter()
            .map(|s| ModuleVector::new(&r, vec![p(&r, s)]).unwrap())
            .collect();
        let syz = syzygies(&r, &vs).unwrap();
        assert!(!syz.is_empty());
        let polys: Vec<_> = gens.iter().map(|s| p(&r, s)).collect();
        for s in &syz {
            assert!(s.dot(&polys).is_zero());
        }
    }

    #[test]
    fn lifting_recovers_cofactors() {
        let r = ring(&["x", "y"], &[1, 1]);
        let gens = [p(&r, "x^2 - y"), p(&r, "x*y")];
        let lifter = Lifter::for_ideal(&r, &gens).unwrap();
        let target = &(&p(&r, "y + 3") * &gens[0]) + &(&p(&r, "x - 1") * &gens[1]);
        let c = lifter.lift_polynomial(&target).unwrap();
        let back = &(&c[0] * &gens[0]) + &(&c[1] * &gens[1]);
        assert_eq!(back, target);
        assert!(lifter.lift_polynomial(&p(&r, "x")).is_none());
    }

    #[test]
    fn kernel_examples() {
        let r = ring(&["x", "y"], &[1, 1]);
        // (0) over R/<x^2>: everything
        let base = buchberger(&r, &[p(&r, "x^2")], &MonomialOrder::WeightedDegRevLex).unwrap();
        let zero_row = ModuleVector::new(&r, vec![p(&r, "0")]).unwrap();
        let k = kernel_of_module_map(&r, &[zero_row], 1, Some(&base), None).unwrap();
        assert_eq!(k.embedding.as_ref().unwrap(), &vec![ModuleVector::unit(&r, 1, 0)]);
        // (x y) over Q[x,y]
        let row = ModuleVector::new(&r, vec![p(&r, "x"), p(&r, "y")]).unwrap();
        let k = kernel_of_module_map(&r, &[row], 2, None, None).unwrap();
        let gens = k.embedding.unwrap();
        assert_eq!(gens.len(), 1);
        assert_eq!(gens[0].components(), &[p(&r, "y"), p(&r, "-x")]);
        // (1): zero module
        let row = ModuleVector::new(&r, vec![p(&r, "1")]).unwrap();
        let k = kernel_of_module_map(&r, &[row], 1, None, None).unwrap();
        assert_eq!(k.ambient_rank, 0);
    }

    #[test]
    fn standard_monomial_examples() {
        let r = ring(&["q", "p"], &[2, 3]);
        let gb = buchberger(&r, &[p(&r, "p^2 - q^3")], &MonomialOrder::WeightedDegRevLex).unwrap();
        assert_eq!(gb.standard_monomials(0), vec![ExponentVector::one()]);
        // q^3 leads in degrevlex here, so p^2 is the standard monomial of degree 6
        let s6 = gb.standard_monomials(6);
        assert_eq!(s6.len(), 1);
        assert!(gb.standard_monomials(1).is_empty());
    }

    #[test]
    fn determinism() {
        let r = ring(&["x", "y", "z"], &[1, 2, 3]);
        let gens = [p(&r, "x^3*y - z^2"), p(&r, "y^3 - x*z*y"), p(&r, "x^6 - y^3")];
        let a = buchberger(&r, &gens, &MonomialOrder::WeightedDegRevLex).unwrap();
        let b = buchberger(&r, &gens, &MonomialOrder::WeightedDegRevLex).unwrap();
        assert_eq!(a.generators(), b.generators());
    }
}
