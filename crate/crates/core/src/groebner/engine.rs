//! Buchberger's algorithm for submodules of free modules `R^r`.
//!
//! Ideals are the rank-one case. Elements are kept as term vectors sorted
//! descending under a [`TermOrder`]; every basis element is monic.

use std::cell::Cell;
use std::cmp::{Ordering, Reverse};
use std::collections::{BinaryHeap, HashSet};
use std::time::Instant;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::polyring::{ExponentVector, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum ModuleOrdering {
    /// Position over term: lower component index is larger.
    Pot,
    /// Shifted weighted degree, then the monomial order, then position.
    Top,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct TermOrder {
    pub weights: Vec<u32>,
    pub nvars: usize,
    /// Weights restricted to the elimination block (zero outside it).
    pub block_weights: Option<Vec<u32>>,
    pub module: ModuleOrdering,
    /// Degree shift of each free-module basis vector.
    pub shifts: Vec<i64>,
}

impl TermOrder {
    pub fn ideal(weights: &[u32], block: Option<&[usize]>) -> Self {
        let block_weights = block.map(|b| {
            let mut bw = vec![0; weights.len()];
            for &v in b {
                bw[v] = weights[v];
            }
            bw
        });
        Self {
            weights: weights.to_vec(),
            nvars: weights.len(),
            block_weights,
            module: ModuleOrdering::Pot,
            shifts: vec![0],
        }
    }

    pub fn module(weights: &[u32], module: ModuleOrdering, shifts: Vec<i64>) -> Self {
        Self {
            weights: weights.to_vec(),
            nvars: weights.len(),
            block_weights: None,
            module,
            shifts,
        }
    }

    #[inline]
    pub fn degree(&self, m: &ExponentVector) -> u32 {
        m.weighted_degree(&self.weights)
    }

    #[inline]
    pub fn term_degree(&self, comp: u32, m: &ExponentVector) -> i64 {
        self.degree(m) as i64 + self.shifts.get(comp as usize).copied().unwrap_or(0)
    }

    #[inline]
    pub fn cmp_mono(&self, a: &ExponentVector, b: &ExponentVector) -> Ordering {
        if let Some(bw) = &self.block_weights {
            match a.weighted_degree(bw).cmp(&b.weighted_degree(bw)) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        self.degree(a)
            .cmp(&self.degree(b))
            .then_with(|| crate::polyring::monomial_revlex(a, b, self.nvars))
    }

    #[inline]
    pub fn cmp_term(&self, ca: u32, a: &ExponentVector, cb: u32, b: &ExponentVector) -> Ordering {
        match self.module {
            ModuleOrdering::Pot => cb.cmp(&ca).then_with(|| self.cmp_mono(a, b)),
            ModuleOrdering::Top => self
                .term_degree(ca, a)
                .cmp(&self.term_degree(cb, b))
                .then_with(|| self.cmp_mono(a, b))
                .then_with(|| cb.cmp(&ca)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct MTerm {
    pub comp: u32,
    pub mono: ExponentVector,
    pub coeff: Rational,
}

/// A module element: terms sorted descending, no zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub(crate) struct MPoly {
    pub terms: Vec<MTerm>,
}

impl MPoly {
    pub fn from_unsorted(order: &TermOrder, mut terms: Vec<MTerm>) -> Self {
        terms.retain(|t| !t.coeff.is_zero());
        terms.sort_by(|a, b| order.cmp_term(b.comp, &b.mono, a.comp, &a.mono));
        // merge equal keys
        let mut out: Vec<MTerm> = Vec::with_capacity(terms.len());
        for t in terms {
            if let Some(last) = out.last_mut() {
                if last.comp == t.comp && last.mono == t.mono {
                    last.coeff += t.coeff;
                    if last.coeff.is_zero() {
                        out.pop();
                    }
                    continue;
                }
            }
            out.push(t);
        }
        Self { terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> &MTerm {
        &self.terms[0]
    }

    pub fn make_monic(&mut self) {
        if let Some(t) = self.terms.first() {
            if !t.coeff.is_one() {
                let inv = t.coeff.recip();
                for t in &mut self.terms {
                    t.coeff *= &inv;
                }
            }
        }
    }

    /// Largest shifted term degree; the sugar of an input element.
    pub fn max_degree(&self, order: &TermOrder) -> i64 {
        self.terms
            .iter()
            .map(|t| order.term_degree(t.comp, &t.mono))
            .max()
            .unwrap_or(0)
    }

    pub fn mul_term(&self, mono: &ExponentVector, coeff: &Rational) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|t| MTerm {
                    comp: t.comp,
                    mono: t.mono.mul(mono),
                    coeff: &t.coeff * coeff,
                })
                .collect(),
        }
    }
}

/// `a - c * m * b` for sorted term slices.
pub(crate) fn merge_sub(
    order: &TermOrder,
    a: &[MTerm],
    c: &Rational,
    m: &ExponentVector,
    b: &[MTerm],
) -> Vec<MTerm> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let mut bj: Option<MTerm> = b.first().map(|t| shifted(t, c, m));
    while i < a.len() {
        let Some(bt) = &bj else { break };
        match order.cmp_term(a[i].comp, &a[i].mono, bt.comp, &bt.mono) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push(MTerm {
                    comp: bt.comp,
                    mono: bt.mono,
                    coeff: -&bt.coeff,
                });
                j += 1;
                bj = b.get(j).map(|t| shifted(t, c, m));
            }
            Ordering::Equal => {
                let v = &a[i].coeff - &bt.coeff;
                if !v.is_zero() {
                    out.push(MTerm {
                        comp: a[i].comp,
                        mono: a[i].mono,
                        coeff: v,
                    });
                }
                i += 1;
                j += 1;
                bj = b.get(j).map(|t| shifted(t, c, m));
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    if let Some(bt) = bj {
        out.push(MTerm {
            comp: bt.comp,
            mono: bt.mono,
            coeff: -bt.coeff,
        });
        for t in &b[j + 1..] {
            let s = shifted(t, c, m);
            out.push(MTerm {
                comp: s.comp,
                mono: s.mono,
                coeff: -s.coeff,
            });
        }
    }
    out
}

#[inline]
fn shifted(t: &MTerm, c: &Rational, m: &ExponentVector) -> MTerm {
    MTerm {
        comp: t.comp,
        mono: t.mono.mul(m),
        coeff: &t.coeff * c,
    }
}

fn find_reducer<'a>(basis: &'a [MPoly], t: &MTerm) -> Option<&'a MPoly> {
    basis.iter().find(|g| {
        let l = g.lead();
        l.comp == t.comp && l.mono.divides(&t.mono)
    })
}

/// Full reduction of `p` by a monic basis.
pub(crate) fn reduce(order: &TermOrder, p: MPoly, basis: &[MPoly]) -> MPoly {
    let mut cur = p.terms;
    let mut rem: Vec<MTerm> = Vec::new();
    let mut idx = 0;
    while idx < cur.len() {
        match find_reducer(basis, &cur[idx]) {
            Some(g) => {
                let t = &cur[idx];
                let m = g.lead().mono.quotient_of(&t.mono);
                let c = t.coeff.clone();
                cur = merge_sub(order, &cur[idx + 1..], &c, &m, &g.terms[1..]);
                idx = 0;
            }
            None => {
                rem.push(cur[idx].clone());
                idx += 1;
            }
        }
    }
    MPoly { terms: rem }
}

/// Reduces only until the leading term is irreducible.
fn top_reduce(order: &TermOrder, p: MPoly, basis: &[MPoly]) -> MPoly {
    let mut cur = p.terms;
    while let Some(t) = cur.first() {
        match find_reducer(basis, t) {
            Some(g) => {
                let m = g.lead().mono.quotient_of(&t.mono);
                let c = t.coeff.clone();
                cur = merge_sub(order, &cur[1..], &c, &m, &g.terms[1..]);
            }
            None => break,
        }
    }
    MPoly { terms: cur }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct PairKey {
    sugar: i64,
    lcm_degree: i64,
    j: usize,
    i: usize,
}

thread_local! {
    static DEADLINE: Cell<Option<Instant>> = const { Cell::new(None) };
}

/// Runs `f` with every Gröbner computation on this thread failing with
/// [`Error::ResourceCap`] once `deadline` has passed.
pub(crate) fn with_deadline<T>(deadline: Option<Instant>, f: impl FnOnce() -> T) -> T {
    let previous = DEADLINE.with(|d| d.replace(deadline));
    let out = f();
    DEADLINE.with(|d| d.set(previous));
    out
}

fn check_deadline() -> Result<()> {
    match DEADLINE.with(Cell::get) {
        Some(t) if Instant::now() > t => Err(Error::ResourceCap(
            "Gröbner basis computation exceeded its time limit".into(),
        )),
        _ => Ok(()),
    }
}

/// Runs Buchberger with the normal (lowest sugar first) selection strategy,
/// the chain criterion, and (for ideals) the coprime-leading-term criterion.
/// Returns the reduced basis sorted ascending by leading term.
pub(crate) fn groebner(
    order: &TermOrder,
    input: Vec<MPoly>,
    max_pairs: Option<usize>,
) -> Result<Vec<MPoly>> {
    let ideal_case = order.shifts.len() <= 1;
    let mut basis: Vec<MPoly> = Vec::new();
    let mut sugar: Vec<i64> = Vec::new();
    let mut heap: BinaryHeap<Reverse<PairKey>> = BinaryHeap::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    let mut processed = 0usize;

    let mut inputs: Vec<MPoly> = input.into_iter().filter(|p| !p.is_zero()).collect();
    inputs.sort_by(|a, b| {
        let (la, lb) = (a.lead(), b.lead());
        order.cmp_term(la.comp, &la.mono, lb.comp, &lb.mono)
    });

    let add = |p: MPoly,
               s: i64,
               basis: &mut Vec<MPoly>,
               sugar: &mut Vec<i64>,
               heap: &mut BinaryHeap<Reverse<PairKey>>,
               pending: &mut HashSet<(usize, usize)>| {
        let j = basis.len();
        let lj = p.lead().clone();
        for (i, g) in basis.iter().enumerate() {
            let li = g.lead();
            if li.comp != lj.comp {
                continue;
            }
            let lcm = li.mono.lcm(&lj.mono);
            let ldeg = order.term_degree(lj.comp, &lcm);
            let si = sugar[i] + order.degree(&lcm) as i64 - order.degree(&li.mono) as i64;
            let sj = s + order.degree(&lcm) as i64 - order.degree(&lj.mono) as i64;
            heap.push(Reverse(PairKey {
                sugar: si.max(sj),
                lcm_degree: ldeg,
                j,
                i,
            }));
            pending.insert((i, j));
        }
        basis.push(p);
        sugar.push(s);
    };

    for p in inputs {
        check_deadline()?;
        let s = p.max_degree(order);
        let mut r = reduce(order, p, &basis);
        if r.is_zero() {
            continue;
        }
        r.make_monic();
        add(r, s, &mut basis, &mut sugar, &mut heap, &mut pending);
    }

    while let Some(Reverse(key)) = heap.pop() {
        let (i, j) = (key.i, key.j);
        pending.remove(&(i, j));
        let (li, lj) = (basis[i].lead().clone(), basis[j].lead().clone());
        let lcm = li.mono.lcm(&lj.mono);
        if ideal_case && li.mono.is_coprime(&lj.mono) {
            continue;
        }
        let chain = (0..basis.len()).any(|k| {
            if k == i || k == j {
                return false;
            }
            let lk = basis[k].lead();
            lk.comp == li.comp
                && lk.mono.divides(&lcm)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        processed += 1;
        check_deadline()?;
        if let Some(cap) = max_pairs {
            if processed > cap {
                return Err(Error::ResourceCap(format!(
                    "Gröbner basis computation exceeded {cap} S-pairs"
                )));
            }
        }
        let mi = li.mono.quotient_of(&lcm);
        let mj = lj.mono.quotient_of(&lcm);
        let a = basis[i].mul_term(&mi, &Rational::one());
        let spoly = MPoly {
            terms: merge_sub(order, &a.terms[1..], &Rational::one(), &mj, &basis[j].terms[1..]),
        };
        let mut r = top_reduce(order, spoly, &basis);
        if r.is_zero() {
            continue;
        }
        r = reduce(order, r, &basis);
        r.make_monic();
        add(r, key.sugar, &mut basis, &mut sugar, &mut heap, &mut pending);
    }

    Ok(interreduce(order, basis))
}

/// Minimalizes and tail-reduces a Gröbner basis.
pub(crate) fn interreduce(order: &TermOrder, mut basis: Vec<MPoly>) -> Vec<MPoly> {
    basis.sort_by(|a, b| {
        let (la, lb) = (a.lead(), b.lead());
        order.cmp_term(la.comp, &la.mono, lb.comp, &lb.mono)
    });
    let mut kept: Vec<MPoly> = Vec::new();
    for g in basis {
        let l = g.lead();
        if kept
            .iter()
            .any(|k| k.lead().comp == l.comp && k.lead().mono.divides(&l.mono))
        {
            continue;
        }
        kept.push(g);
    }
    let mut out = Vec::with_capacity(kept.len());
    for i in 0..kept.len() {
        let head = MTerm {
            comp: kept[i].lead().comp,
            mono: kept[i].lead().mono,
            coeff: kept[i].lead().coeff.clone(),
        };
        let tail = MPoly {
            terms: kept[i].terms[1..].to_vec(),
        };
        let others: Vec<MPoly> = kept
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let mut t = reduce(order, tail, &others);
        let mut terms = vec![head];
        terms.append(&mut t.terms);
        let mut p = MPoly { terms };
        p.make_monic();
        out.push(p);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn term(comp: u32, e: &[u16], c: i64) -> MTerm {
        MTerm {
            comp,
            mono: ExponentVector::from_slice(e),
            coeff: Rational::from_integer(c.into()),
        }
    }

    #[test]
    fn merge_sub_cancels() {
        let o = TermOrder::ideal(&[1, 1], None);
        let a = MPoly::from_unsorted(&o, vec![term(0, &[2, 0], 1), term(0, &[0, 1], 3)]);
        let b = MPoly::from_unsorted(&o, vec![term(0, &[1, 0], 1)]);
        let r = merge_sub(&o, &a.terms, &Rational::one(), &ExponentVector::from_slice(&[1, 0]), &b.terms);
        assert_eq!(r, vec![term(0, &[0, 1], 3)]);
    }

    #[test]
    fn pot_ranks_components_first() {
        let o = TermOrder::module(&[1, 1], ModuleOrdering::Pot, vec![0, 0]);
        let big = ExponentVector::from_slice(&[5, 5]);
        let one = ExponentVector::one();
        assert_eq!(o.cmp_term(0, &one, 1, &big), Ordering::Greater);
    }

    #[test]
    fn block_order_eliminates() {
        let o = TermOrder::ideal(&[1, 1, 1], Some(&[0]));
        let x = ExponentVector::from_slice(&[1, 0, 0]);
        let yz = ExponentVector::from_slice(&[0, 3, 3]);
        assert_eq!(o.cmp_mono(&x, &yz), Ordering::Greater);
    }
}
