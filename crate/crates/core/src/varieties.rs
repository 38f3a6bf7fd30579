//! Lagrangian singularities: open swallowtails `Σ_{n,k}` from generating
//! functions, `Lag(F)` for an arbitrary generating function, and plane curves.
//!
//! Generating functions live in the ring `x, q1..qn` with `w(x) = 1` and
//! `w(q_i) = i + 1`. For
//!
//! ```text
//! g_n(x, q)   = x^{n+1} + q1 x^{n-1} + … + qn
//! F_{n,k}(x,q) = ∫_0^x g_n(s, q)^{k+1} ds
//! ```
//!
//! `F_{n,k}` is quasihomogeneous of degree `W = (k+1)(n+1) + 1`, which becomes
//! the pairing weight of the ambient symplectic ring.

use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::{
    buchberger_capped, elimination_ideal, krull_dimension, minimal_ideal_generators, GroebnerBasis, MonomialOrder,
};
use crate::linalg;
use crate::polyring::{rat, same_ring, Polynomial, Rational, RingDescriptor, WeightedDegree, WeightedRing};
use crate::symplectic::{check_involutive_with, SymplecticRing};

/// How the ideal of a swallowtail was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    /// Kernel of the pullback along the normalization: the prime ideal.
    Kernel,
    /// Elimination of `x` from the critical equations. Not reduced for `k ≥ 1`.
    Critical,
}

impl FromStr for Route {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "kernel" => Ok(Route::Kernel),
            "critical" => Ok(Route::Critical),
            _ => Err(Error::InvalidArgument(format!("unknown route `{s}`"))),
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::Kernel => "kernel",
            Route::Critical => "critical",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Family {
    Swallowtail { n: usize, k: usize, route: Route },
    PlaneCurve { polynomial: String },
    GeneratingFunction { function: String, internal: Vec<String> },
    Custom { name: String },
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Swallowtail { n, k, route } => write!(f, "swallowtail({n},{k},{route})"),
            Family::PlaneCurve { polynomial } => write!(f, "plane_curve({polynomial})"),
            Family::GeneratingFunction { function, .. } => write!(f, "lag({function})"),
            Family::Custom { name } => write!(f, "{name}"),
        }
    }
}

/// A quasihomogeneous lagrangian germ `L = V(I) ⊂ ℂ^{2n}`.
#[derive(Debug, Clone)]
pub struct LagrangianPresentation {
    ambient: SymplecticRing,
    generators: Vec<Polynomial>,
    family: Family,
    gb: OnceLock<GroebnerBasis>,
}

impl LagrangianPresentation {
    /// Validates quasihomogeneity, involutivity and dimension `n`.
    pub fn new(ambient: SymplecticRing, generators: Vec<Polynomial>, family: Family) -> Result<Self> {
        Self::new_capped(ambient, generators, family, None)
    }

    pub fn new_capped(
        ambient: SymplecticRing,
        generators: Vec<Polynomial>,
        family: Family,
        max_pairs: Option<usize>,
    ) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::InvalidArgument("no ideal generators".into()));
        }
        for g in &generators {
            if !same_ring(g.ring(), ambient.ring()) {
                return Err(Error::RingMismatch);
            }
            match g.weighted_degree() {
                WeightedDegree::Homogeneous(_) => {}
                WeightedDegree::Bottom => {
                    return Err(Error::InvalidArgument("zero ideal generator".into()))
                }
                WeightedDegree::Inhomogeneous => {
                    return Err(Error::NotQuasihomogeneous(g.to_string()))
                }
            }
        }
        let gb = buchberger_capped(
            ambient.ring(),
            &generators,
            &MonomialOrder::WeightedDegRevLex,
            max_pairs,
        )?;
        let inv = check_involutive_with(&ambient, &generators, &gb);
        if let Some((a, b, r)) = inv.witness {
            return Err(Error::NotInvolutive(a, b, r.to_string()));
        }
        let dim = krull_dimension(&gb);
        if dim != ambient.n() {
            return Err(Error::InvalidArgument(format!(
                "ideal defines a variety of dimension {dim}, expected {}",
                ambient.n()
            )));
        }
        let cell = OnceLock::new();
        let _ = cell.set(gb);
        Ok(Self {
            ambient,
            generators,
            family,
            gb: cell,
        })
    }

    pub fn ambient(&self) -> &SymplecticRing {
        &self.ambient
    }

    pub fn ring(&self) -> &Arc<WeightedRing> {
        self.ambient.ring()
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn expected_dimension(&self) -> usize {
        self.ambient.n()
    }

    pub fn pairing_weight(&self) -> u32 {
        self.ambient.pairing_weight()
    }

    /// Weighted degrees `d_a` of the generators.
    pub fn generator_degrees(&self) -> Vec<u32> {
        self.generators
            .iter()
            .map(|g| g.weighted_degree().value().expect("validated at construction"))
            .collect()
    }

    /// Reduced Gröbner basis of `I` for weighted degrevlex.
    pub fn groebner_basis(&self) -> &GroebnerBasis {
        self.gb.get_or_init(|| {
            crate::groebner::buchberger(
                self.ring(),
                &self.generators,
                &MonomialOrder::WeightedDegRevLex,
            )
            .expect("validated at construction")
        })
    }

    /// Same ideal, generators listed in the order `perm`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let mut sorted = perm.to_vec();
        sorted.sort_unstable();
        if sorted != (0..self.generators.len()).collect::<Vec<_>>() {
            return Err(Error::InvalidArgument("not a permutation of the generators".into()));
        }
        Ok(Self {
            ambient: self.ambient.clone(),
            generators: perm.iter().map(|&i| self.generators[i].clone()).collect(),
            family: self.family.clone(),
            gb: self.gb.clone(),
        })
    }

    pub fn to_file(&self) -> VarietyFile {
        let parametrization = match self.family {
            Family::Swallowtail { n, k, .. } => normalization_map(n, k).ok().map(|m| m.to_json()),
            _ => None,
        };
        VarietyFile {
            format: VARIETY_FORMAT.to_string(),
            family: self.family.clone(),
            ring: self.ambient.descriptor(),
            generators: self.generators.iter().map(|g| g.to_string()).collect(),
            expected_dimension: self.expected_dimension(),
            parametrization,
        }
    }

    pub fn from_file(file: &VarietyFile) -> Result<Self> {
        if file.format != VARIETY_FORMAT {
            return Err(Error::Malformed(format!("unknown variety format `{}`", file.format)));
        }
        let ambient = SymplecticRing::from_descriptor(&file.ring)?;
        if file.expected_dimension != ambient.n() {
            return Err(Error::Malformed(format!(
                "expected_dimension {} differs from n = {}",
                file.expected_dimension,
                ambient.n()
            )));
        }
        let generators = file
            .generators
            .iter()
            .map(|s| Polynomial::parse(ambient.ring(), s))
            .collect::<Result<_>>()?;
        Self::new(ambient, generators, file.family.clone())
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("serializable")
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let file: VarietyFile = serde_json::from_str(text)?;
        Self::from_file(&file)
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::from_json_str(&std::fs::read_to_string(path)?)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_json_string() + "\n")?;
        Ok(())
    }
}

pub const VARIETY_FORMAT: &str = "lagrangian-variety/1";

/// On-disk form of a [`LagrangianPresentation`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VarietyFile {
    pub format: String,
    pub family: Family,
    pub ring: RingDescriptor,
    pub generators: Vec<String>,
    pub expected_dimension: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parametrization: Option<ParametrizationJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParametrizationJson {
    pub source: RingDescriptor,
    /// One polynomial per ambient variable, in ring order.
    pub components: Vec<String>,
}

/// A weighted-homogeneous polynomial map from a source space into the
/// ambient symplectic space.
#[derive(Debug, Clone)]
pub struct ParametrizationMap {
    source: Arc<WeightedRing>,
    target: SymplecticRing,
    components: Vec<Polynomial>,
}

impl ParametrizationMap {
    pub fn new(
        source: &Arc<WeightedRing>,
        target: &SymplecticRing,
        components: Vec<Polynomial>,
    ) -> Result<Self> {
        let tr = target.ring();
        if components.len() != tr.nvars() {
            return Err(Error::Shape(format!(
                "{} components for {} ambient variables",
                components.len(),
                tr.nvars()
            )));
        }
        for (j, c) in components.iter().enumerate() {
            if !same_ring(c.ring(), source) {
                return Err(Error::RingMismatch);
            }
            match c.weighted_degree() {
                WeightedDegree::Bottom => {}
                WeightedDegree::Homogeneous(d) if d == tr.weight(j) => {}
                _ => {
                    return Err(Error::NotQuasihomogeneous(format!(
                        "component {} = {c} should have degree {}",
                        tr.name(j),
                        tr.weight(j)
                    )))
                }
            }
        }
        Ok(Self {
            source: source.clone(),
            target: target.clone(),
            components,
        })
    }

    pub fn source(&self) -> &Arc<WeightedRing> {
        &self.source
    }

    pub fn target(&self) -> &SymplecticRing {
        &self.target
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn pullback(&self, f: &Polynomial) -> Result<Polynomial> {
        if !same_ring(f.ring(), self.target.ring()) {
            return Err(Error::RingMismatch);
        }
        f.substitute(&self.source, &self.components)
    }

    /// Rank of the Jacobian matrix at a rational point of the source.
    pub fn jacobian_rank_at(&self, point: &[Rational]) -> usize {
        let rows = self.components.iter().map(|c| {
            let row: Vec<Rational> = (0..self.source.nvars())
                .map(|s| c.partial_derivative(s).evaluate(point))
                .collect();
            linalg::sparse_from_dense(&row)
        });
        linalg::rank(rows)
    }

    pub fn to_json(&self) -> ParametrizationJson {
        ParametrizationJson {
            source: RingDescriptor::of(&self.source),
            components: self.components.iter().map(|c| c.to_string()).collect(),
        }
    }

    pub fn from_json(json: &ParametrizationJson, target: &SymplecticRing) -> Result<Self> {
        let source = json.source.build()?;
        let comps = json
            .components
            .iter()
            .map(|s| Polynomial::parse(&source, s))
            .collect::<Result<_>>()?;
        Self::new(&source, target, comps)
    }
}

/// `g_n`, `F_{n,k}` and the weight system of the swallowtail family.
#[derive(Debug, Clone)]
pub struct SwallowtailData {
    /// Ring `x, q1..qn`.
    pub ring: Arc<WeightedRing>,
    pub g: Polynomial,
    pub f: Polynomial,
    pub q_weights: Vec<u32>,
    pub pairing_weight: u32,
}

impl SwallowtailData {
    pub fn p_weights(&self) -> Vec<u32> {
        self.q_weights.iter().map(|w| self.pairing_weight - w).collect()
    }

    pub fn symplectic_ring(&self) -> Result<SymplecticRing> {
        SymplecticRing::standard(&self.q_weights, self.pairing_weight)
    }
}

pub fn swallowtail_data(n: usize, k: usize) -> Result<SwallowtailData> {
    if n == 0 {
        return Err(Error::InvalidArgument("swallowtails need n ≥ 1".into()));
    }
    if n >= crate::polyring::MAX_VARS / 2 {
        return Err(Error::InvalidArgument(format!("n = {n} exceeds the variable limit")));
    }
    let names: Vec<String> = std::iter::once("x".to_string())
        .chain((1..=n).map(|i| format!("q{i}")))
        .collect();
    let weights: Vec<u32> = (0..=n as u32).map(|i| i + 1).collect();
    let ring = WeightedRing::new(names, weights)?;
    let x = Polynomial::var(&ring, 0);
    let mut g = x.pow(n as u32 + 1);
    for i in 1..=n {
        g = &g + &(&Polynomial::var(&ring, i) * &x.pow((n - i) as u32));
    }
    let f = g.pow(k as u32 + 1).integrate_from_zero(0);
    let pairing_weight = ((k + 1) * (n + 1) + 1) as u32;
    Ok(SwallowtailData {
        ring,
        g,
        f,
        q_weights: (2..=n as u32 + 1).collect(),
        pairing_weight,
    })
}

/// `(x, q1..q_{n-1}) ↦ (q1..qn, p1..pn)` with `q_n` solving `g_n = 0`:
/// `q_n = −(x^{n+1} + Σ_{i<n} q_i x^{n−i})` and `p_i = ∂_{q_i} F_{n,k}`.
pub fn normalization_map(n: usize, k: usize) -> Result<ParametrizationMap> {
    let data = swallowtail_data(n, k)?;
    let target = data.symplectic_ring()?;
    let source = WeightedRing::new(
        data.ring.names()[..n].to_vec(),
        data.ring.weights()[..n].to_vec(),
    )?;
    let x = Polynomial::var(&source, 0);
    let mut qn = x.pow(n as u32 + 1);
    for i in 1..n {
        qn = &qn + &(&Polynomial::var(&source, i) * &x.pow((n - i) as u32));
    }
    let qn = -qn;
    // images of x, q1..qn
    let mut images: Vec<Polynomial> = (0..n).map(|v| Polynomial::var(&source, v)).collect();
    images.push(qn.clone());
    let mut comps: Vec<Polynomial> = (1..n).map(|v| Polynomial::var(&source, v)).collect();
    comps.push(qn);
    for i in 1..=n {
        comps.push(data.f.partial_derivative(i).substitute(&source, &images)?);
    }
    ParametrizationMap::new(&source, &target, comps)
}

/// Generators of `ker(φ^*)`, the reduced Gröbner basis in the target ring.
pub fn kernel_of_pullback(map: &ParametrizationMap, max_pairs: Option<usize>) -> Result<Vec<Polynomial>> {
    let src = map.source();
    let tr = map.target.ring().clone();
    // a component equal to a bare source variable lets that variable be
    // substituted away instead of eliminated
    let mut solved: Vec<Option<usize>> = vec![None; src.nvars()];
    for (j, c) in map.components.iter().enumerate() {
        if let [(m, coeff)] = c.terms() {
            if num_traits::One::is_one(coeff) && m.as_slice(src.nvars()).iter().sum::<u16>() == 1 {
                let s = (0..src.nvars()).find(|&s| m.get(s) == 1).expect("one variable");
                if solved[s].is_none() && !solved.contains(&Some(j)) {
                    solved[s] = Some(j);
                }
            }
        }
    }
    let free: Vec<usize> = (0..src.nvars()).filter(|&s| solved[s].is_none()).collect();
    let mut names: Vec<String> = Vec::new();
    for &s in &free {
        let mut name = format!("s_{}", src.name(s));
        while tr.var_index(&name).is_ok() || names.contains(&name) {
            name.insert(0, 's');
        }
        names.push(name);
    }
    let mut weights: Vec<u32> = free.iter().map(|&s| src.weight(s)).collect();
    names.extend(tr.names().iter().cloned());
    weights.extend(tr.weights());
    let big = WeightedRing::new(names, weights)?;
    let nf = free.len();
    let images: Vec<Polynomial> = (0..src.nvars())
        .map(|s| match solved[s] {
            Some(j) => Polynomial::var(&big, nf + j),
            None => Polynomial::var(&big, free.iter().position(|&t| t == s).expect("free")),
        })
        .collect();
    let mut gens = Vec::new();
    for (j, c) in map.components.iter().enumerate() {
        if solved.contains(&Some(j)) {
            continue;
        }
        let g = &Polynomial::var(&big, nf + j) - &c.substitute(&big, &images)?;
        if !g.is_zero() {
            gens.push(g);
        }
    }
    let drop: Vec<usize> = (0..nf).collect();
    let (_, elim) = elimination_ideal(&gens, &big, &drop, max_pairs)?;
    let elim: Vec<Polynomial> = elim.iter().map(|g| g.map_to_ring(&tr)).collect::<Result<_>>()?;
    let gb = buchberger_capped(&tr, &elim, &MonomialOrder::WeightedDegRevLex, max_pairs)?;
    Ok(gb.generators().to_vec())
}

/// The prime ideal of `Σ_{n,k}` (kernel route), presented by a minimal set of
/// homogeneous generators drawn from its reduced Gröbner basis and sorted by
/// degree, then leading term.
pub fn lag_ideal(n: usize, k: usize) -> Result<LagrangianPresentation> {
    swallowtail(n, k, Route::Kernel, None)
}

pub fn swallowtail(
    n: usize,
    k: usize,
    route: Route,
    max_pairs: Option<usize>,
) -> Result<LagrangianPresentation> {
    let family = Family::Swallowtail { n, k, route };
    match route {
        Route::Kernel => {
            let map = normalization_map(n, k)?;
            let basis = kernel_of_pullback(&map, max_pairs)?;
            let gens = minimal_ideal_generators(map.target.ring(), &basis, max_pairs)?;
            LagrangianPresentation::new_capped(map.target.clone(), gens, family, max_pairs)
        }
        Route::Critical => {
            let data = swallowtail_data(n, k)?;
            let (s, gb) = lag_ideal_from_generating_function_capped(&data.f, &["x"], max_pairs)?;
            let gens = minimal_ideal_generators(s.ring(), &gb, max_pairs)?;
            LagrangianPresentation::new_capped(s, gens, family, max_pairs)
        }
    }
}

/// `Lag(F)`: eliminates the internal variables from
/// `⟨∂_{x_j} F, p_i − ∂_{q_i} F⟩`. The result is the scheme-theoretic image
/// and need not be reduced.
///
/// Every non-internal variable of `F`'s ring is a base coordinate `q`. Its
/// momentum is named by swapping a leading `q` for `p`, or prefixing `p_`.
pub fn lag_ideal_from_generating_function(
    f: &Polynomial,
    internal: &[&str],
) -> Result<(SymplecticRing, Vec<Polynomial>)> {
    lag_ideal_from_generating_function_capped(f, internal, None)
}

pub fn lag_ideal_from_generating_function_capped(
    f: &Polynomial,
    internal: &[&str],
    max_pairs: Option<usize>,
) -> Result<(SymplecticRing, Vec<Polynomial>)> {
    let fr = f.ring();
    let pairing_weight = match f.weighted_degree() {
        WeightedDegree::Homogeneous(d) => d,
        _ => return Err(Error::NotQuasihomogeneous(f.to_string())),
    };
    let internal_idx: Vec<usize> = internal
        .iter()
        .map(|name| fr.var_index(name))
        .collect::<Result<_>>()?;
    let base: Vec<usize> = (0..fr.nvars()).filter(|v| !internal_idx.contains(v)).collect();
    if base.is_empty() {
        return Err(Error::InvalidArgument("no base variables left".into()));
    }
    let q_names: Vec<String> = base.iter().map(|&v| fr.name(v).to_string()).collect();
    let p_names: Vec<String> = q_names
        .iter()
        .map(|q| match q.strip_prefix('q') {
            Some(rest) if !rest.is_empty() => format!("p{rest}"),
            _ => format!("p_{q}"),
        })
        .collect();
    let q_weights: Vec<u32> = base.iter().map(|&v| fr.weight(v)).collect();
    let s = SymplecticRing::with_names(&q_names, &p_names, &q_weights, pairing_weight)?;

    let mut names: Vec<String> = internal.iter().map(|s| s.to_string()).collect();
    let mut weights: Vec<u32> = internal_idx.iter().map(|&v| fr.weight(v)).collect();
    names.extend(s.ring().names().iter().cloned());
    weights.extend(s.ring().weights());
    let big = WeightedRing::new(names, weights)?;
    let fb = f.map_to_ring(&big)?;
    let mut gens: Vec<Polynomial> = (0..internal.len()).map(|j| fb.partial_derivative(j)).collect();
    let nb = base.len();
    for i in 0..nb {
        let q = internal.len() + i;
        let p = internal.len() + nb + i;
        gens.push(&Polynomial::var(&big, p) - &fb.partial_derivative(q));
    }
    gens.retain(|g| !g.is_zero());
    let drop: Vec<usize> = (0..internal.len()).collect();
    let (_, elim) = elimination_ideal(&gens, &big, &drop, max_pairs)?;
    let elim = elim.iter().map(|g| g.map_to_ring(s.ring())).collect::<Result<_>>()?;
    Ok((s, elim))
}

/// A quasihomogeneous curve `f(q, p) = 0` in `ℂ²`. The first ring variable is
/// `q`, the second `p`, and `W = w(q) + w(p)`.
pub fn plane_curve(f: &Polynomial) -> Result<LagrangianPresentation> {
    let r = f.ring();
    if r.nvars() != 2 {
        return Err(Error::NotPlaneCurve(format!("ring has {} variables", r.nvars())));
    }
    match f.weighted_degree() {
        WeightedDegree::Bottom => return Err(Error::InvalidArgument("zero curve equation".into())),
        WeightedDegree::Inhomogeneous => return Err(Error::NotQuasihomogeneous(f.to_string())),
        WeightedDegree::Homogeneous(_) => {}
    }
    let s = SymplecticRing::from_ring(r, 1, r.weight(0) + r.weight(1))?;
    LagrangianPresentation::new(
        s,
        vec![f.clone()],
        Family::PlaneCurve {
            polynomial: f.to_string(),
        },
    )
}

/// Parses `f` over variables `q, p` with the given weights.
pub fn plane_curve_from_str(poly: &str, q_weight: u32, p_weight: u32) -> Result<LagrangianPresentation> {
    let r = WeightedRing::new(vec!["q", "p"], vec![q_weight, p_weight])?;
    plane_curve(&Polynomial::parse(&r, poly)?)
}

/// Every generator pulls back to zero and the Jacobian has full rank at a
/// random rational point.
pub fn check_parametrization(l: &LagrangianPresentation, map: &ParametrizationMap) -> Result<bool> {
    if !same_ring(l.ring(), map.target.ring()) {
        return Err(Error::RingMismatch);
    }
    for g in l.generators() {
        if !map.pullback(g)?.is_zero() {
            return Ok(false);
        }
    }
    let dim = map.source.nvars();
    // a few seeded points so an unlucky root of a minor cannot fool us
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..3 {
        let point: Vec<Rational> = (0..dim)
            .map(|_| rat(rng.gen_range(-9..=9), rng.gen_range(1..=5)))
            .collect();
        if map.jacobian_rank_at(&point) == dim {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::{buchberger, radical_membership};

    #[test]
    fn swallowtail_data_examples() {
        let d = swallowtail_data(2, 1).unwrap();
        assert_eq!(d.g, Polynomial::parse(&d.ring, "x^3 + q1*x + q2").unwrap());
        assert_eq!(d.g.weighted_degree(), WeightedDegree::Homogeneous(3));
        let d = swallowtail_data(1, 1).unwrap();
        assert_eq!(
            d.f,
            Polynomial::parse(&d.ring, "1/5*x^5 + 2/3*q1*x^3 + q1^2*x").unwrap()
        );
        assert_eq!(d.pairing_weight, 5);
        for n in 1..4 {
            for k in 0..4 {
                let d = swallowtail_data(n, k).unwrap();
                assert_eq!(
                    d.f.weighted_degree(),
                    WeightedDegree::Homogeneous(((k + 1) * (n + 1) + 1) as u32)
                );
            }
        }
    }

    #[test]
    fn normalization_of_the_cusp() {
        let m = normalization_map(1, 1).unwrap();
        let s = m.source();
        assert_eq!(m.components()[0], Polynomial::parse(s, "-x^2").unwrap());
        assert_eq!(m.components()[1], Polynomial::parse(s, "-4/3*x^3").unwrap());
    }

    #[test]
    fn normalization_degrees_match_weights() {
        let m = normalization_map(2, 1).unwrap();
        let degs: Vec<u32> = m
            .components()
            .iter()
            .map(|c| c.weighted_degree().value().unwrap())
            .collect();
        assert_eq!(degs, vec![2, 3, 5, 4]);
    }

    #[test]
    fn cusp_ideal_by_both_routes() {
        let l = lag_ideal(1, 1).unwrap();
        let r = l.ring();
        let expected = Polynomial::parse(r, "9*p1^2 + 16*q1^3").unwrap();
        assert_eq!(l.generators(), &[expected.monic()]);
        let (s, crit) =
            lag_ideal_from_generating_function(&swallowtail_data(1, 1).unwrap().f, &["x"]).unwrap();
        let gb = buchberger(s.ring(), &crit, &MonomialOrder::WeightedDegRevLex).unwrap();
        let e = expected.map_to_ring(s.ring()).unwrap();
        assert!(radical_membership(&e, &gb, 4).is_some());
    }

    #[test]
    fn smooth_member_and_trivial_function() {
        let l = lag_ideal(1, 0).unwrap();
        assert_eq!(
            l.generators(),
            &[Polynomial::parse(l.ring(), "p1^2 + q1").unwrap()]
        );
        let (s, crit) =
            lag_ideal_from_generating_function(&swallowtail_data(1, 0).unwrap().f, &["x"]).unwrap();
        assert_eq!(crit, vec![Polynomial::parse(s.ring(), "p1^2 + q1").unwrap()]);

        let r = WeightedRing::new(vec!["x", "q1"], vec![1, 2]).unwrap();
        let f = Polynomial::parse(&r, "x*q1").unwrap();
        let (s, gens) = lag_ideal_from_generating_function(&f, &["x"]).unwrap();
        assert_eq!(gens, vec![Polynomial::parse(s.ring(), "q1").unwrap()]);
    }

    #[test]
    fn open_swallowtail_is_a_surface() {
        let l = lag_ideal(2, 1).unwrap();
        assert_eq!(l.expected_dimension(), 2);
        assert_eq!(l.generators().len(), 3);
        let m = normalization_map(2, 1).unwrap();
        assert!(check_parametrization(&l, &m).unwrap());
        // kernel route sits inside the radical of the critical route
        let (s, crit) = lag_ideal_from_generating_function(&swallowtail_data(2, 1).unwrap().f, &["x"])
            .unwrap();
        let gb = buchberger(s.ring(), &crit, &MonomialOrder::WeightedDegRevLex).unwrap();
        for g in l.generators() {
            assert!(radical_membership(&g.map_to_ring(s.ring()).unwrap(), &gb, 4).is_some());
        }
    }

    #[test]
    fn zero_map_fails_the_parametrization_check() {
        let l = lag_ideal(1, 1).unwrap();
        let m = normalization_map(1, 1).unwrap();
        let zero = vec![Polynomial::zero(m.source()); 2];
        let z = ParametrizationMap::new(m.source(), m.target(), zero).unwrap();
        assert!(!check_parametrization(&l, &z).unwrap());
        assert!(check_parametrization(&l, &m).unwrap());
    }

    #[test]
    fn plane_curves() {
        assert!(plane_curve_from_str("p^2 - q^3", 2, 3).is_ok());
        assert!(plane_curve_from_str("p^2 - q^5", 2, 5).is_ok());
        assert!(plane_curve_from_str("q", 2, 3).is_ok());
        assert!(plane_curve_from_str("0", 2, 3).is_err());
        assert!(plane_curve_from_str("p + q", 2, 3).is_err());
    }

    #[test]
    fn non_lagrangian_input_is_rejected() {
        let s = SymplecticRing::standard(&[1], 2).unwrap();
        let gens = vec![
            Polynomial::parse(s.ring(), "q1").unwrap(),
            Polynomial::parse(s.ring(), "p1").unwrap(),
        ];
        let e = LagrangianPresentation::new(s, gens, Family::Custom { name: "origin".into() });
        assert!(matches!(e, Err(Error::NotInvolutive(0, 1, _))));
    }

    #[test]
    fn file_round_trip() {
        let l = lag_ideal(2, 1).unwrap();
        let text = l.to_json_string();
        let back = LagrangianPresentation::from_json_str(&text).unwrap();
        assert_eq!(back.generators(), l.generators());
        assert_eq!(back.family(), l.family());
        assert_eq!(back.to_json_string(), text);
    }
}
