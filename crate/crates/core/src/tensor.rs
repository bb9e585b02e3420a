//! Dense `n x n x K` stacks indexed by node pair and length `k` in `1..=K`.
//!
//! Storage is row-major with `k` fastest, which is also the on-disk layout.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor3<T> {
    n: usize,
    k_max: usize,
    data: Vec<T>,
}

/// Random-walk landing probabilities, slice `k` is `(D^-1 A)^k`.
pub type RwTensor = Tensor3<f64>;

/// Output of the count encoding map.
pub type EncodedTensor = Tensor3<f64>;

impl<T: Copy + Default> Tensor3<T> {
    pub fn zeros(n: usize, k_max: usize) -> Self {
        Tensor3 {
            n,
            k_max,
            data: vec![T::default(); n * n * k_max],
        }
    }

    pub fn from_vec(n: usize, k_max: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != n * n * k_max {
            return Err(Error::Shape(format!(
                "{} values for a {n}x{n}x{k_max} tensor",
                data.len()
            )));
        }
        Ok(Tensor3 { n, k_max, data })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k_max(&self) -> usize {
        self.k_max
    }

    #[inline]
    fn offset(&self, i: usize, j: usize, k: usize) -> usize {
        debug_assert!(i < self.n && j < self.n && (1..=self.k_max).contains(&k));
        (i * self.n + j) * self.k_max + (k - 1)
    }

    /// Entry for pair `(i, j)` at length `k` (1-based).
    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize) -> T {
        self.data[self.offset(i, j, k)]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, k: usize, value: T) {
        let o = self.offset(i, j, k);
        self.data[o] = value;
    }

    /// All lengths `1..=K` for the pair `(i, j)`.
    pub fn series(&self, i: usize, j: usize) -> &[T] {
        let start = (i * self.n + j) * self.k_max;
        &self.data[start..start + self.k_max]
    }

    pub fn as_slice(&self) -> &[T] {
        &self.data
    }

    pub fn into_vec(self) -> Vec<T> {
        self.data
    }

    pub fn same_shape<U>(&self, other: &Tensor3<U>) -> bool {
        self.n == other.n && self.k_max == other.k_max
    }

    pub fn map<U: Copy + Default>(&self, f: impl Fn(T) -> U) -> Tensor3<U> {
        Tensor3 {
            n: self.n,
            k_max: self.k_max,
            data: self.data.iter().map(|&x| f(x)).collect(),
        }
    }

    /// Row-major `n x n` copy of slice `k`.
    pub fn slice(&self, k: usize) -> Vec<T> {
        let mut out = Vec::with_capacity(self.n * self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                out.push(self.get(i, j, k));
            }
        }
        out
    }
}

/// Simple-path counts between all node pairs, by length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathCountTensor {
    counts: Tensor3<u64>,
    saturated: bool,
}

impl PathCountTensor {
    pub fn zeros(n: usize, k_max: usize) -> Self {
        PathCountTensor {
            counts: Tensor3::zeros(n, k_max),
            saturated: false,
        }
    }

    pub fn from_counts(counts: Tensor3<u64>, saturated: bool) -> Self {
        PathCountTensor { counts, saturated }
    }

    pub fn n(&self) -> usize {
        self.counts.n
    }

    pub fn k_max(&self) -> usize {
        self.counts.k_max
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize) -> u64 {
        self.counts.get(i, j, k)
    }

    pub fn series(&self, i: usize, j: usize) -> &[u64] {
        self.counts.series(i, j)
    }

    /// True if some count hit `u64::MAX` and was clamped.
    pub fn saturated(&self) -> bool {
        self.saturated
    }

    pub fn counts(&self) -> &Tensor3<u64> {
        &self.counts
    }

    pub(crate) fn counts_mut(&mut self) -> &mut Tensor3<u64> {
        &mut self.counts
    }

    pub(crate) fn mark_saturated(&mut self) {
        self.saturated = true;
    }

    pub fn into_counts(self) -> Tensor3<u64> {
        self.counts
    }

    /// Element-wise maximum with `other`, in place.
    pub fn merge_max(&mut self, other: &PathCountTensor) -> Result<()> {
        if !self.counts.same_shape(&other.counts) {
            return Err(Error::Shape(format!(
                "cannot merge {}x{}x{} with {}x{}x{}",
                self.n(),
                self.n(),
                self.k_max(),
                other.n(),
                other.n(),
                other.k_max()
            )));
        }
        for (a, &b) in self.counts.data.iter_mut().zip(&other.counts.data) {
            *a = (*a).max(b);
        }
        self.saturated |= other.saturated;
        Ok(())
    }

    /// Copy truncated or zero-padded to `k_max` lengths.
    pub fn with_k_max(&self, k_max: usize) -> PathCountTensor {
        let n = self.n();
        let mut out = PathCountTensor::zeros(n, k_max);
        out.saturated = self.saturated;
        let keep = k_max.min(self.k_max());
        for i in 0..n {
            for j in 0..n {
                for k in 1..=keep {
                    out.counts.set(i, j, k, self.get(i, j, k));
                }
            }
        }
        out
    }
}
