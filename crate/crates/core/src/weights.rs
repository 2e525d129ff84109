//! Type `A_m` root and weight data.
//!
//! Weights are written in Dynkin labels (the fundamental-weight basis). A
//! positive root of `A_m` is an interval `alpha_a + ... + alpha_b`, so the
//! coroot pairing with a weight is a contiguous label sum.

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};

/// A dominant integral weight of `A_m` given by its Dynkin labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DominantWeight {
    labels: Vec<u64>,
}

impl DominantWeight {
    pub fn new(labels: Vec<u64>) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::range("rank", "rank must be >= 1"));
        }
        Ok(Self { labels })
    }

    /// Accepts signed labels and rejects the non-dominant ones.
    pub fn from_signed(labels: &[i64]) -> Result<Self> {
        let labels = labels
            .iter()
            .map(|&l| {
                u64::try_from(l).map_err(|_| {
                    Error::Domain(format!("label {l} is negative; weight is not dominant"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(labels)
    }

    pub fn zero(rank: usize) -> Result<Self> {
        Self::new(vec![0; rank])
    }

    /// The fundamental weight `omega_i` (1-based) of `A_rank`.
    pub fn fundamental(rank: usize, i: usize) -> Result<Self> {
        if i == 0 || i > rank {
            return Err(Error::range(
                "i",
                format!("omega_{i} does not exist in rank {rank}"),
            ));
        }
        let mut labels = vec![0; rank];
        labels[i - 1] = 1;
        Self::new(labels)
    }

    /// The highest root `theta = omega_1 + omega_m` (for `m = 1`, `theta = 2 omega_1`).
    pub fn highest_root(rank: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::range("rank", "rank must be >= 1"));
        }
        let mut labels = vec![0; rank];
        labels[0] += 1;
        labels[rank - 1] += 1;
        Self::new(labels)
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    pub fn is_zero(&self) -> bool {
        self.labels.iter().all(|&l| l == 0)
    }

    /// `k * self`.
    pub fn scaled(&self, k: u64) -> Self {
        Self {
            labels: self.labels.iter().map(|&l| l * k).collect(),
        }
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.labels.iter().map(u64::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// The positive root `alpha_a + ... + alpha_b` of `A_m`, `1 <= a <= b <= m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PositiveRoot {
    pub a: usize,
    pub b: usize,
}

impl PositiveRoot {
    pub fn height(&self) -> usize {
        self.b - self.a + 1
    }
}

/// All `m(m+1)/2` positive roots of `A_m`, lexicographic in `(a, b)`.
pub fn positive_roots(rank: usize) -> Result<Vec<PositiveRoot>> {
    if rank == 0 {
        return Err(Error::range("rank", "rank must be >= 1"));
    }
    Ok((1..=rank)
        .flat_map(|a| (a..=rank).map(move |b| PositiveRoot { a, b }))
        .collect())
}

/// `<w + rho, alpha^vee>` when `shift` is set, `<w, alpha^vee>` otherwise.
pub fn pairing(w: &DominantWeight, shift: bool, root: PositiveRoot) -> Result<BigInt> {
    if root.a == 0 || root.a > root.b || root.b > w.rank() {
        return Err(Error::range(
            "root",
            format!(
                "({}, {}) is not a positive root of A_{}",
                root.a,
                root.b,
                w.rank()
            ),
        ));
    }
    let labels = &w.labels[root.a - 1..root.b];
    let sum: BigInt = labels.iter().map(|&l| BigInt::from(l)).sum();
    Ok(if shift {
        sum + BigInt::from(root.height())
    } else {
        sum
    })
}

/// Highest weight of the dual representation; for `A_m` the labels reverse.
pub fn dual_weight(w: &DominantWeight) -> DominantWeight {
    DominantWeight {
        labels: w.labels.iter().rev().copied().collect(),
    }
}

/// Pole order `D` of the Hilbert series of the highest weight variety `X_w`.
///
/// `dim V_{kw}` is a polynomial in `k` whose degree is the number of positive
/// roots not orthogonal to `w`, so `D` is that count plus one.
pub fn pole_order(w: &DominantWeight) -> Result<usize> {
    if w.is_zero() {
        return Err(Error::Domain(
            "the highest weight must be nontrivial".into(),
        ));
    }
    // prefix[i] = labels[0] + ... + labels[i-1]
    let prefix: Vec<u64> = std::iter::once(0)
        .chain(w.labels.iter().scan(0u64, |acc, &l| {
            *acc += l;
            Some(*acc)
        }))
        .collect();
    let m = w.rank();
    let support = (1..=m)
        .flat_map(|a| (a..=m).map(move |b| (a, b)))
        .filter(|&(a, b)| prefix[b] > prefix[a - 1])
        .count();
    Ok(support + 1)
}
