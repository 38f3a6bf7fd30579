//! Homological side checks: depth through Auslander–Buchsbaum, the tangent
//! module `Θ_L`, the cokernel of `α: I/I² → Θ_L, f_a ↦ H_{f_a}` and the
//! torsion of `Ω¹_L` for plane curves.
//!
//! Gradings. A vector field `θ = Σ θ_i ∂_i` has degree `t` when every
//! `θ_i` has degree `t + w_i`. A form `ω = Σ ω_i dx_i` has degree `m` when
//! every `ω_i` has degree `m − w_i`. Contraction with the symplectic form
//! identifies degree `t` fields with degree `t + W` forms.

use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use crate::algebroid::conormal_presentation_capped;
use crate::error::{Error, Result};
use crate::groebner::{
    buchberger, krull_dimension, kernel_of_module_map_capped, minimal_graded_free_resolution_capped,
    with_time_limit, GroebnerBasis, ModuleVector, MonomialOrder, PresentedModule,
};
use crate::linalg::{self, SparseVec};
use crate::polyring::{ExponentVector, Polynomial};
use crate::symplectic::hamiltonian_vector_field;
use crate::varieties::LagrangianPresentation;

/// Projective dimension and depth of a graded module over the ambient
/// polynomial ring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DepthCertificate {
    pub module: String,
    pub projective_dimension: usize,
    pub ambient_dimension: usize,
    pub depth: usize,
    /// Ranks of the free modules in the minimal resolution.
    pub betti: Vec<usize>,
}

pub fn depth_via_resolution(tag: &str, module: &PresentedModule) -> Result<DepthCertificate> {
    depth_via_resolution_capped(tag, module, None)
}

/// `max_pairs` bounds every Gröbner computation in the resolution.
pub fn depth_via_resolution_capped(
    tag: &str,
    module: &PresentedModule,
    max_pairs: Option<usize>,
) -> Result<DepthCertificate> {
    if !module.is_graded() {
        return Err(Error::NotGraded(format!("module `{tag}`")));
    }
    let n = module.ring.nvars();
    // Hilbert's syzygy theorem: length n suffices, n + 1 detects a bug
    let res = minimal_graded_free_resolution_capped(module, n + 1, max_pairs)?;
    let betti = res.betti_numbers();
    if betti.first().is_none_or(|&b| b == 0) {
        return Err(Error::InvalidArgument(format!("module `{tag}` is zero")));
    }
    let pd = res
        .projective_dimension()
        .filter(|&pd| pd <= n)
        .ok_or_else(|| Error::ResourceCap(format!("resolution of `{tag}` did not terminate")))?;
    Ok(DepthCertificate {
        module: tag.to_string(),
        projective_dimension: pd,
        ambient_dimension: n,
        depth: n - pd,
        betti,
    })
}

/// `O_L = O / I` as a cyclic module over the ambient ring.
pub fn coordinate_ring(l: &LagrangianPresentation) -> PresentedModule {
    PresentedModule::quotient_ring(l.ring(), l.groebner_basis().generators())
}

/// Depth of `O_L` compared with its dimension.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CohenMacaulayReport {
    pub family: String,
    pub dimension: usize,
    pub certificate: DepthCertificate,
    pub cohen_macaulay: bool,
}

pub fn cohen_macaulay_check(l: &LagrangianPresentation, max_pairs: Option<usize>) -> Result<CohenMacaulayReport> {
    let certificate = depth_via_resolution_capped("coordinate-ring", &coordinate_ring(l), max_pairs)?;
    let dimension = krull_dimension(l.groebner_basis());
    Ok(CohenMacaulayReport {
        family: l.family().to_string(),
        dimension,
        cohen_macaulay: certificate.depth == dimension,
        certificate,
    })
}

/// Depth of the conormal dual `N` under both caps. Nothing is known about
/// the expected value in general; this is an experiment.
pub fn conormal_dual_depth(
    l: &LagrangianPresentation,
    max_pairs: Option<usize>,
    time_limit: Option<std::time::Duration>,
) -> Result<DepthCertificate> {
    with_time_limit(time_limit, || {
        let n = conormal_dual(l, max_pairs)?;
        depth_via_resolution_capped("conormal-dual", &n, max_pairs)
    })
}

/// `N = Hom(I/I², O_L)`, the module of first cochains, presented over `O_L`
/// with the dual basis vector `f_a*` in degree `−d_a`.
pub fn conormal_dual(l: &LagrangianPresentation, max_pairs: Option<usize>) -> Result<PresentedModule> {
    let c = conormal_presentation_capped(l, max_pairs)?;
    let degrees: Vec<i64> = c.degrees().iter().map(|d| -d).collect();
    kernel_of_module_map_capped(
        l.ring(),
        c.relations(),
        c.rank(),
        Some(l.groebner_basis()),
        Some(&degrees),
        max_pairs,
    )
}

/// `Θ_L`: derivations of the ambient ring preserving `I`, modulo `I`.
#[derive(Debug, Clone)]
pub struct TangentModule {
    /// Coefficients of each generator on `∂_{x_i}`, in ring variable order.
    pub generators: Vec<Vec<Polynomial>>,
    /// Degree `t` of each generator.
    pub degrees: Vec<i64>,
    pub module: PresentedModule,
}

impl TangentModule {
    /// No relation survives among the generators.
    pub fn is_free(&self) -> bool {
        self.module.relations.is_empty()
    }
}

pub fn tangent_module(l: &LagrangianPresentation) -> Result<TangentModule> {
    let ring = l.ring();
    let rows: Vec<ModuleVector> = l
        .generators()
        .iter()
        .map(|f| ModuleVector::new(ring, (0..ring.nvars()).map(|i| f.partial_derivative(i)).collect()))
        .collect::<Result<_>>()?;
    let shifts: Vec<i64> = ring.weights().iter().map(|&w| -(w as i64)).collect();
    let module = kernel_of_module_map_capped(ring, &rows, ring.nvars(), Some(l.groebner_basis()), Some(&shifts), None)?;
    let generators = module
        .embedding
        .as_ref()
        .map(|e| e.iter().map(|v| v.components().to_vec()).collect())
        .unwrap_or_default();
    Ok(TangentModule {
        generators,
        degrees: module.generator_degrees.clone(),
        module,
    })
}

/// `(degree, dimension)` pairs.
pub type DegreeTable = Vec<(i64, usize)>;

/// Standard monomials of `O_L` by degree, with coordinates of normal forms.
struct Slices<'a> {
    gb: &'a GroebnerBasis,
    cache: HashMap<i64, Arc<(Vec<ExponentVector>, HashMap<ExponentVector, usize>)>>,
}

impl<'a> Slices<'a> {
    fn new(gb: &'a GroebnerBasis) -> Self {
        Self {
            gb,
            cache: HashMap::new(),
        }
    }

    fn basis(&mut self, degree: i64) -> Arc<(Vec<ExponentVector>, HashMap<ExponentVector, usize>)> {
        let gb = self.gb;
        self.cache
            .entry(degree)
            .or_insert_with(|| {
                let mons = if degree < 0 {
                    Vec::new()
                } else {
                    gb.standard_monomials(degree as u32)
                };
                let index = mons.iter().enumerate().map(|(i, m)| (*m, i)).collect();
                Arc::new((mons, index))
            })
            .clone()
    }

    fn dim(&mut self, degree: i64) -> usize {
        self.basis(degree).0.len()
    }

    /// Coordinates of `NF(f)`, a homogeneous element of `degree`, shifted by `offset`.
    fn coords(&mut self, f: &Polynomial, degree: i64, offset: usize, out: &mut Vec<(usize, crate::polyring::Rational)>) {
        let nf = self.gb.normal_form(f);
        let b = self.basis(degree);
        for (m, c) in nf.terms() {
            out.push((offset + b.1[m], c.clone()));
        }
    }
}

fn sorted(mut v: SparseVec) -> SparseVec {
    v.sort_by_key(|(i, _)| *i);
    v
}

/// Dimension of `{v ∈ ⊕_i (O_L)_{s_i} : Σ_i v_i·row_j,i ≡ 0 ∀j}`, where
/// `rows[j][i]` is homogeneous and every `row_j` lands in degree `targets[j]`.
fn kernel_dim(slices: &mut Slices, source: &[i64], rows: &[Vec<Polynomial>], targets: &[i64]) -> usize {
    let mut t_off = Vec::with_capacity(targets.len());
    let mut acc = 0;
    for &t in targets {
        t_off.push(acc);
        acc += slices.dim(t);
    }
    let mut images = Vec::new();
    for (i, &s) in source.iter().enumerate() {
        let b = slices.basis(s);
        for m in &b.0 {
            let mut v = Vec::new();
            for (j, row) in rows.iter().enumerate() {
                let f = row[i].mul_term(m, &crate::polyring::int(1));
                if !f.is_zero() {
                    slices.coords(&f, targets[j], t_off[j], &mut v);
                }
            }
            images.push(merge(v));
        }
    }
    images.len() - linalg::rank(images)
}

fn merge(v: SparseVec) -> SparseVec {
    let mut out: SparseVec = Vec::with_capacity(v.len());
    for (i, x) in sorted(v) {
        match out.last_mut() {
            Some(last) if last.0 == i => last.1 += x,
            _ => out.push((i, x)),
        }
    }
    out.retain(|(_, x)| *x != crate::polyring::int(0));
    out
}

/// Default top degree for the α and torsion tables.
pub fn default_bound(l: &LagrangianPresentation) -> i64 {
    let max_d = l.generator_degrees().into_iter().max().unwrap_or(0) as i64;
    2 * max_d + l.pairing_weight() as i64 + 10
}

/// `dim Coker(α)_t` for `t` from the lowest possible field degree to
/// `max_degree`. Requires a complete intersection, where `I/I²` is free.
pub fn alpha_map_cokernel(l: &LagrangianPresentation, max_degree: i64) -> Result<DegreeTable> {
    let ring = l.ring();
    let n = l.expected_dimension();
    if l.generators().len() != ring.nvars() - n {
        return Err(Error::NotCompleteIntersection(format!(
            "{} generators for codimension {}",
            l.generators().len(),
            ring.nvars() - n
        )));
    }
    let weights: Vec<i64> = ring.weights().iter().map(|&w| w as i64).collect();
    let degrees: Vec<i64> = l.generator_degrees().iter().map(|&d| d as i64).collect();
    let w = l.pairing_weight() as i64;
    let rows: Vec<Vec<Polynomial>> = l
        .generators()
        .iter()
        .map(|f| (0..ring.nvars()).map(|i| f.partial_derivative(i)).collect())
        .collect();
    let fields: Vec<Vec<Polynomial>> = l
        .generators()
        .iter()
        .map(|f| hamiltonian_vector_field(l.ambient(), f))
        .collect();
    let mut slices = Slices::new(l.groebner_basis());
    let low = -weights.iter().copied().max().unwrap_or(0);
    let mut out = Vec::new();
    for t in low..=max_degree.max(low - 1) {
        let source: Vec<i64> = weights.iter().map(|wi| t + wi).collect();
        let targets: Vec<i64> = degrees.iter().map(|d| t + d).collect();
        let theta = kernel_dim(&mut slices, &source, &rows, &targets);
        let mut offsets = Vec::with_capacity(source.len());
        let mut acc = 0;
        for &s in &source {
            offsets.push(acc);
            acc += slices.dim(s);
        }
        let mut images = Vec::new();
        for (a, field) in fields.iter().enumerate() {
            let g_deg = t - (degrees[a] - w);
            let b = slices.basis(g_deg);
            for m in &b.0 {
                let mut v = Vec::new();
                for (i, c) in field.iter().enumerate() {
                    let f = c.mul_term(m, &crate::polyring::int(1));
                    if !f.is_zero() {
                        slices.coords(&f, source[i], offsets[i], &mut v);
                    }
                }
                images.push(merge(v));
            }
        }
        out.push((t, theta - linalg::rank(images)));
    }
    Ok(out)
}

fn require_reduced_plane_curve(l: &LagrangianPresentation) -> Result<&Polynomial> {
    let ring = l.ring();
    if ring.nvars() != 2 || l.generators().len() != 1 {
        return Err(Error::NotPlaneCurve(format!(
            "{} generators in {} variables",
            l.generators().len(),
            ring.nvars()
        )));
    }
    let f = &l.generators()[0];
    // f is reduced iff its singular locus is a finite set
    let jac = [f.partial_derivative(0), f.partial_derivative(1)];
    let gb = buchberger(ring, &jac, &MonomialOrder::WeightedDegRevLex)?;
    if krull_dimension(&gb) > 0 {
        return Err(Error::NotPlaneCurve(format!("{f} is not reduced")));
    }
    Ok(f)
}

/// `dim Tors(Ω¹_L)_m` for a reduced quasihomogeneous plane curve, as the
/// kernel of `Ω¹ → Ω¹**`. Since `Ω¹* = Θ_L`, a form is torsion exactly when
/// it pairs to zero with every generator of `Θ_L`.
pub fn omega1_torsion(l: &LagrangianPresentation, max_degree: i64) -> Result<DegreeTable> {
    let f = require_reduced_plane_curve(l)?.clone();
    let ring = l.ring();
    let theta = tangent_module(l)?;
    let weights: Vec<i64> = ring.weights().iter().map(|&w| w as i64).collect();
    let d = f.weighted_degree().value().expect("quasihomogeneous") as i64;
    let df: Vec<Polynomial> = (0..2).map(|i| f.partial_derivative(i)).collect();
    let mut slices = Slices::new(l.groebner_basis());
    let low = weights.iter().copied().min().unwrap_or(0);
    let mut out = Vec::new();
    for m in low..=max_degree.max(low - 1) {
        let source: Vec<i64> = weights.iter().map(|wi| m - wi).collect();
        let targets: Vec<i64> = theta.degrees.iter().map(|t| t + m).collect();
        let kernel = kernel_dim(&mut slices, &source, &theta.generators, &targets);
        // the submodule O_L·df
        let mut offsets = Vec::with_capacity(2);
        let mut acc = 0;
        for &s in &source {
            offsets.push(acc);
            acc += slices.dim(s);
        }
        let b = slices.basis(m - d);
        let mut images = Vec::new();
        for g in &b.0 {
            let mut v = Vec::new();
            for i in 0..2 {
                let h = df[i].mul_term(g, &crate::polyring::int(1));
                if !h.is_zero() {
                    slices.coords(&h, source[i], offsets[i], &mut v);
                }
            }
            images.push(merge(v));
        }
        out.push((m, kernel - linalg::rank(images)));
    }
    Ok(out)
}

/// Both tables of a plane curve on a common form grading.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlphaTorsionReport {
    pub family: String,
    pub pairing_weight: i64,
    pub rows: Vec<AlphaTorsionRow>,
    pub matches: bool,
}

/// Dimensions in form degree `m`; the cokernel is read in field degree `m − W`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlphaTorsionRow {
    pub m: i64,
    pub coker_alpha: usize,
    pub torsion: usize,
}

pub fn alpha_torsion_comparison(l: &LagrangianPresentation, max_degree: i64) -> Result<AlphaTorsionReport> {
    let w = l.pairing_weight() as i64;
    let tors: HashMap<i64, usize> = omega1_torsion(l, max_degree)?.into_iter().collect();
    let coker: HashMap<i64, usize> = alpha_map_cokernel(l, max_degree - w)?
        .into_iter()
        .map(|(t, d)| (t + w, d))
        .collect();
    let mut keys: Vec<i64> = tors.keys().chain(coker.keys()).copied().collect();
    keys.sort_unstable();
    keys.dedup();
    let rows: Vec<AlphaTorsionRow> = keys
        .into_iter()
        .map(|m| AlphaTorsionRow {
            m,
            coker_alpha: coker.get(&m).copied().unwrap_or(0),
            torsion: tors.get(&m).copied().unwrap_or(0),
        })
        .collect();
    Ok(AlphaTorsionReport {
        family: l.family().to_string(),
        pairing_weight: w,
        matches: rows.iter().all(|r| r.coker_alpha == r.torsion),
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symplectic::SymplecticRing;
    use crate::varieties::{lag_ideal, plane_curve_from_str, Family};

    fn smooth() -> LagrangianPresentation {
        let s = SymplecticRing::standard(&[1], 2).unwrap();
        let f = Polynomial::parse(s.ring(), "p1").unwrap();
        LagrangianPresentation::new(s, vec![f], Family::Custom { name: "zero-section".into() }).unwrap()
    }

    #[test]
    fn hypersurface_and_free_module_depths() {
        let l = plane_curve_from_str("p^2 - q^3", 2, 3).unwrap();
        let c = depth_via_resolution("cusp", &coordinate_ring(&l)).unwrap();
        assert_eq!((c.projective_dimension, c.depth, c.ambient_dimension), (1, 1, 2));
        assert_eq!(c.betti, vec![1, 1]);
        let free = PresentedModule::free(l.ring(), vec![0, 3]);
        let c = depth_via_resolution("free", &free).unwrap();
        assert_eq!((c.projective_dimension, c.depth), (0, 2));
    }

    #[test]
    fn open_swallowtail_is_cohen_macaulay() {
        let l = lag_ideal(2, 1).unwrap();
        let r = cohen_macaulay_check(&l, None).unwrap();
        assert_eq!(r.dimension, 2);
        assert_eq!(r.certificate.projective_dimension, 2);
        assert!(r.cohen_macaulay);
    }

    #[test]
    fn tangent_module_of_smooth_curve_is_free_of_rank_one() {
        let t = tangent_module(&smooth()).unwrap();
        assert!(t.is_free());
        assert_eq!(t.generators.len(), 1);
    }

    #[test]
    fn cusp_fields_preserve_the_ideal() {
        let l = plane_curve_from_str("p^2 - q^3", 2, 3).unwrap();
        let t = tangent_module(&l).unwrap();
        let f = &l.generators()[0];
        let gb = l.groebner_basis();
        for field in &t.generators {
            let applied = &(&field[0] * &f.partial_derivative(0)) + &(&field[1] * &f.partial_derivative(1));
            assert!(gb.contains(&applied));
        }
        // Euler field (2q, 3p) has degree 0, the Hamiltonian field degree 1
        let mut degs = t.degrees.clone();
        degs.sort_unstable();
        assert_eq!(degs, vec![0, 1]);
        assert!(!t.is_free());
    }

    #[test]
    fn smooth_curve_has_no_cokernel_and_no_torsion() {
        let l = smooth();
        assert!(alpha_map_cokernel(&l, 8).unwrap().iter().all(|(_, d)| *d == 0));
        assert!(omega1_torsion(&l, 8).unwrap().iter().all(|(_, d)| *d == 0));
    }

    #[test]
    fn cusp_torsion_matches_alpha_cokernel() {
        for poly in ["p^2 - q^3", "p^2 - q^5"] {
            let (wq, wp) = if poly.ends_with('3') { (2, 3) } else { (2, 5) };
            let l = plane_curve_from_str(poly, wq, wp).unwrap();
            let r = alpha_torsion_comparison(&l, default_bound(&l)).unwrap();
            assert!(r.matches, "{poly}: {:?}", r.rows);
            assert!(r.rows.iter().any(|row| row.torsion > 0), "{poly}: torsion expected");
        }
    }

    #[test]
    fn non_curves_and_non_reduced_curves_are_rejected() {
        let l = lag_ideal(2, 1).unwrap();
        assert!(matches!(omega1_torsion(&l, 5), Err(Error::NotPlaneCurve(_))));
        assert!(matches!(alpha_map_cokernel(&l, 5), Err(Error::NotCompleteIntersection(_))));
        let s = SymplecticRing::standard(&[1], 2).unwrap();
        let f = Polynomial::parse(s.ring(), "p1^2").unwrap();
        let l = LagrangianPresentation::new(s, vec![f], Family::Custom { name: "double".into() }).unwrap();
        assert!(matches!(omega1_torsion(&l, 5), Err(Error::NotPlaneCurve(_))));
    }

    #[test]
    fn conormal_dual_of_a_principal_ideal_is_free() {
        let l = plane_curve_from_str("p^2 - q^3", 2, 3).unwrap();
        let n = conormal_dual(&l, None).unwrap();
        assert_eq!(n.ambient_rank, 1);
        let c = depth_via_resolution("conormal-dual", &n).unwrap();
        assert_eq!(c.depth, 1);
    }
}
