//! Exact sparse linear algebra over ℚ: ranks and kernels by incremental
//! Gaussian elimination.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::polyring::Rational;

/// Sparse vector: `(index, value)` pairs, strictly increasing indices, no zeros.
pub type SparseVec = Vec<(usize, Rational)>;

pub fn sparse_from_dense(v: &[Rational]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

/// `a - c * b`.
pub fn axpy(a: &[(usize, Rational)], c: &Rational, b: &[(usize, Rational)]) -> SparseVec {
    if c.is_zero() {
        return a.to_vec();
    }
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, -(c * &b[j].1)));
            j += 1;
        } else {
            let v = &a[i].1 - &(c * &b[j].1);
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Semi-echelon basis of a growing subspace; each stored row is monic at
/// its pivot (its smallest index).
#[derive(Debug, Default, Clone)]
pub struct Echelon {
    rows: HashMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the stored rows until its leading index is free.
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        while let Some((lead, c)) = v.first() {
            match self.rows.get(lead) {
                Some(row) => {
                    let c = c.clone();
                    v = axpy(&v, &c, row);
                }
                None => break,
            }
        }
        v
    }

    /// Adds `v`; returns true if it was independent of the stored rows.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let v = self.reduce(v);
        match v.first() {
            None => false,
            Some((lead, c)) => {
                let lead = *lead;
                let inv = c.recip();
                let v: SparseVec = if inv.is_one() {
                    v
                } else {
                    v.into_iter().map(|(i, x)| (i, x * &inv)).collect()
                };
                self.rows.insert(lead, v);
                true
            }
        }
    }

    pub fn contains(&self, v: SparseVec) -> bool {
        self.reduce(v).is_empty()
    }
}

pub fn rank(vectors: impl IntoIterator<Item = SparseVec>) -> usize {
    let mut e = Echelon::new();
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}

/// Kernel of the linear map sending basis vector `j` to `images[j]`.
/// Each kernel vector is expressed in source coordinates.
pub fn kernel(images: &[SparseVec]) -> Vec<SparseVec> {
    // pivot -> (reduced image, combination of sources)
    let mut rows: HashMap<usize, (SparseVec, SparseVec)> = HashMap::new();
    let mut out = Vec::new();
    for (j, img) in images.iter().enumerate() {
        let mut v = img.clone();
        let mut comb: SparseVec = vec![(j, Rational::one())];
        while let Some((lead, c)) = v.first() {
            match rows.get(lead) {
                Some((row, rc)) => {
                    let c = c.clone();
                    v = axpy(&v, &c, row);
                    comb = axpy(&comb, &c, rc);
                }
                None => break,
            }
        }
        match v.first() {
            None => out.push(comb),
            Some((lead, c)) => {
                let lead = *lead;
                let inv = c.recip();
                let v = v.into_iter().map(|(i, x)| (i, x * &inv)).collect();
                let comb = comb.into_iter().map(|(i, x)| (i, x * &inv)).collect();
                rows.insert(lead, (v, comb));
            }
        }
    }
    out
}

/// Applies a map given by column images to a source vector.
pub fn apply(images: &[SparseVec], v: &[(usize, Rational)]) -> SparseVec {
    let mut acc: SparseVec = Vec::new();
    for (j, c) in v {
        acc = axpy(&acc, &-c.clone(), &images[*j]);
    }
    acc
}

/// The Mersenne prime `2^61 − 1`.
pub const MODULUS: u64 = (1 << 61) - 1;

pub(crate) fn mul_mod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % MODULUS as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a);
        }
        a = mul_mod(a, a);
        e >>= 1;
    }
    r
}

pub(crate) fn inv_mod(a: u64) -> u64 {
    pow_mod(a, MODULUS - 2)
}

/// Image of a rational in `F_p`, or `None` when `p` divides the denominator.
pub fn rational_mod_p(x: &Rational) -> Option<u64> {
    let p = num_bigint::BigInt::from(MODULUS);
    let reduce = |v: &num_bigint::BigInt| -> u64 {
        let r = ((v % &p) + &p) % &p;
        r.to_u64_digits().1.first().copied().unwrap_or(0)
    };
    let den = reduce(x.denom());
    if den == 0 {
        return None;
    }
    Some(mul_mod(reduce(x.numer()), inv_mod(den)))
}

/// Rank over `F_p` with `p = 2^61 − 1`. This is a lower bound for the rank
/// over ℚ. `None` when some entry is undefined mod `p`.
pub fn rank_mod_p<'a>(vectors: impl IntoIterator<Item = &'a SparseVec>) -> Option<usize> {
    let reduced: Option<Vec<ModVec>> = vectors.into_iter().map(|v| sparse_mod_p(v)).collect();
    Some(rank_mod(reduced?))
}

/// Sparse vector over `F_p`, same conventions as [`SparseVec`].
pub type ModVec = Vec<(usize, u64)>;

pub(crate) fn neg_mod(x: u64) -> u64 {
    if x == 0 {
        0
    } else {
        MODULUS - x
    }
}

/// Entrywise image mod `p`; `None` when a denominator vanishes.
pub fn sparse_mod_p(v: &[(usize, Rational)]) -> Option<ModVec> {
    let mut w = Vec::with_capacity(v.len());
    for (i, x) in v {
        let m = rational_mod_p(x)?;
        if m != 0 {
            w.push((*i, m));
        }
    }
    Some(w)
}

/// Rank of vectors already reduced mod `p`.
pub fn rank_mod(vectors: impl IntoIterator<Item = ModVec>) -> usize {
    let mut rows: HashMap<usize, ModVec> = HashMap::new();
    for mut w in vectors {
        while let Some(&(lead, c)) = w.first() {
            let Some(row) = rows.get(&lead) else {
                let inv = inv_mod(c);
                let w: ModVec = w.into_iter().map(|(i, x)| (i, mul_mod(x, inv))).collect();
                rows.insert(lead, w);
                break;
            };
            w = axpy_mod(&w, c, row);
        }
    }
    rows.len()
}

/// `a − c·b` over `F_p`.
fn axpy_mod(a: &[(usize, u64)], c: u64, b: &[(usize, u64)]) -> Vec<(usize, u64)> {
    if c == 0 {
        return a.to_vec();
    }
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let neg = neg_mod;
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i]);
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, neg(mul_mod(c, b[j].1))));
            j += 1;
        } else {
            let v = (a[i].1 + neg(mul_mod(c, b[j].1))) % MODULUS;
            if v != 0 {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Appends `b`, shifted by `offset`, to `a`.
pub fn concat(a: &[(usize, Rational)], offset: usize, b: &[(usize, Rational)]) -> SparseVec {
    let mut out = a.to_vec();
    out.extend(b.iter().map(|(i, x)| (i + offset, x.clone())));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::int;

    fn sv(d: &[i64]) -> SparseVec {
        sparse_from_dense(&d.iter().map(|&x| int(x)).collect::<Vec<_>>())
    }

    #[test]
    fn rank_of_dependent_rows() {
        assert_eq!(rank(vec![sv(&[1, 2, 3]), sv(&[2, 4, 6]), sv(&[0, 1, 1])]), 2);
        assert_eq!(rank(vec![]), 0);
        assert_eq!(rank(vec![sv(&[0, 0])]), 0);
    }

    #[test]
    fn kernel_vectors_map_to_zero() {
        let images = vec![sv(&[1, 0]), sv(&[0, 1]), sv(&[1, 1]), sv(&[2, 0])];
        let k = kernel(&images);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(apply(&images, v).is_empty());
        }
    }

    #[test]
    fn modular_rank_agrees_on_small_matrices() {
        let vs = vec![sv(&[1, 2, 3]), sv(&[2, 4, 6]), sv(&[0, 1, 1])];
        assert_eq!(rank_mod_p(&vs), Some(2));
        let half = vec![vec![(0, crate::polyring::rat(1, 2))], vec![(0, int(3))]];
        assert_eq!(rank_mod_p(&half), Some(1));
        assert_eq!(rational_mod_p(&crate::polyring::rat(1, 2)).map(|x| x * 2 % MODULUS), Some(1));
        assert_eq!(rational_mod_p(&int(-1)), Some(MODULUS - 1));
    }

    #[test]
    fn axpy_cancels() {
        assert!(axpy(&sv(&[2, 4]), &int(2), &sv(&[1, 2])).is_empty());
    }

    #[test]
    fn zero_scalar_stores_nothing() {
        assert!(axpy(&[], &int(0), &sv(&[1, 2])).is_empty());
        assert!(apply(&[sv(&[1, 2])], &[(0, int(0))]).is_empty());
    }
}
