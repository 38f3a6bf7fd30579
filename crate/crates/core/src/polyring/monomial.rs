use std::cmp::Ordering;

/// Upper bound on the number of ring variables.
pub const MAX_VARS: usize = 16;

/// Exponents of a monomial, one slot per ring variable (unused slots stay zero).
///
/// The derived `Ord` is plain lexicographic on the raw slots and is only
/// meant for keyed containers; ring-aware orders live on the ring and in
/// the Gröbner engine.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ExponentVector {
    exps: [u16; MAX_VARS],
}

impl std::fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let last = self.exps.iter().rposition(|&e| e != 0).map_or(0, |i| i + 1);
        write!(f, "{:?}", &self.exps[..last])
    }
}

impl ExponentVector {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(var: usize, e: u16) -> Self {
        let mut m = Self::default();
        m.exps[var] = e;
        m
    }

    pub fn from_slice(exps: &[u16]) -> Self {
        let mut m = Self::default();
        m.exps[..exps.len()].copy_from_slice(exps);
        m
    }

    pub fn as_slice(&self, nvars: usize) -> &[u16] {
        &self.exps[..nvars]
    }

    #[inline]
    pub fn get(&self, var: usize) -> u16 {
        self.exps[var]
    }

    #[inline]
    pub fn set(&mut self, var: usize, e: u16) {
        self.exps[var] = e;
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    #[inline]
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = *self;
        for (a, b) in out.exps.iter_mut().zip(other.exps.iter()) {
            *a = a.checked_add(*b).expect("exponent overflow");
        }
        out
    }

    #[inline]
    pub fn divides(&self, other: &Self) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    #[inline]
    pub fn quotient_of(&self, other: &Self) -> Self {
        let mut out = *other;
        for (a, b) in out.exps.iter_mut().zip(self.exps.iter()) {
            *a -= *b;
        }
        out
    }

    pub fn lcm(&self, other: &Self) -> Self {
        let mut out = *self;
        for (a, b) in out.exps.iter_mut().zip(other.exps.iter()) {
            *a = (*a).max(*b);
        }
        out
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    #[inline]
    pub fn weighted_degree(&self, weights: &[u32]) -> u32 {
        weights
            .iter()
            .zip(self.exps.iter())
            .map(|(w, e)| w * (*e as u32))
            .sum()
    }
}

/// Reverse lexicographic comparison over the first `nvars` slots: the
/// monomial with the smaller exponent in the last differing variable wins.
#[inline]
pub(crate) fn revlex(a: &ExponentVector, b: &ExponentVector, nvars: usize) -> Ordering {
    for i in (0..nvars).rev() {
        match a.exps[i].cmp(&b.exps[i]) {
            Ordering::Equal => continue,
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}
