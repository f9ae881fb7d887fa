//! Spectral index tuples, partitions and the Adler criterion.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// Strictly increasing seed levels `n_1 < ... < n_m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SpectralIndices(Vec<usize>);

impl SpectralIndices {
    pub fn new(indices: Vec<usize>) -> Result<Self> {
        if let Some(w) = indices.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::Parse(format!(
                "spectral indices must be strictly increasing, found {} then {}",
                w[0], w[1]
            )));
        }
        Ok(Self(indices))
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, n: usize) -> bool {
        self.0.binary_search(&n).is_ok()
    }

    /// The complete chain `0, 1, ..., m-1`.
    pub fn complete(m: usize) -> Self {
        Self((0..m).collect())
    }
}

/// Non-increasing parts `λ_1 >= ... >= λ_m >= 0`; trailing zeros are part
/// of the value because the length fixes the chain.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if let Some(w) = parts.windows(2).find(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!(
                "partition parts must be non-increasing, found {} then {}",
                w[0], w[1]
            )));
        }
        Ok(Self(parts))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of parts, zeros included.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|λ|`.
    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// `(λ_1 + 1, ..., λ_m + 1)`.
    pub fn incremented(&self) -> Self {
        Self(self.0.iter().map(|p| p + 1).collect())
    }
}

fn parse_list(text: &str) -> Result<Vec<usize>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("`{}` is not a nonnegative integer", t.trim())))
        })
        .collect()
}

fn join(parts: &[usize]) -> String {
    parts.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::new(parse_list(s)?)
    }
}

impl FromStr for SpectralIndices {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::new(parse_list(s)?)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.0))
    }
}

impl fmt::Display for SpectralIndices {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.0))
    }
}

/// `λ_i = n_{m-i+1} - m + i`.
pub fn indices_to_partition(n: &SpectralIndices) -> Partition {
    let m = n.len();
    Partition((1..=m).map(|i| n.0[m - i] + i - m).collect())
}

/// `n_{m-i+1} = λ_i + m - i`.
pub fn partition_to_indices(lambda: &Partition) -> SpectralIndices {
    let m = lambda.len();
    SpectralIndices((1..=m).rev().map(|i| lambda.0[i - 1] + m - i).collect())
}

/// `λ` without its trailing zeros.
pub fn reduced_form(lambda: &Partition) -> Partition {
    let keep = lambda.0.iter().rposition(|&p| p != 0).map_or(0, |i| i + 1);
    Partition(lambda.0[..keep].to_vec())
}

/// Every part repeated twice.
pub fn double_partition(lambda: &Partition) -> Partition {
    Partition(lambda.0.iter().flat_map(|&p| [p, p]).collect())
}

/// Every distinct nonzero part has even multiplicity.
pub fn is_adler(lambda: &Partition) -> bool {
    let reduced = reduced_form(lambda);
    reduced.0.chunk_by(|a, b| a == b).all(|run| run.len() % 2 == 0)
}

/// Lengths of the maximal runs of consecutive deleted levels, ignoring a run
/// that starts at level 0 (deleting a bottom block only shifts the spectrum).
pub fn gap_lengths(n: &SpectralIndices) -> Vec<usize> {
    let mut out = Vec::new();
    let mut runs = n.0.chunk_by(|a, b| b == &(a + 1));
    if let Some(first) = runs.next() {
        if first[0] != 0 {
            out.push(first.len());
        }
    }
    out.extend(runs.map(<[usize]>::len));
    out
}

/// Every partition of length exactly `m` with weight at most `max_weight`,
/// trailing zeros included.
pub fn partitions_of_length(m: usize, max_weight: usize) -> Vec<Partition> {
    fn rec(m: usize, cap: usize, budget: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if cur.len() == m {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (0..=cap.min(budget)).rev() {
            cur.push(p);
            rec(m, p, budget - p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, max_weight, max_weight, &mut Vec::new(), &mut out);
    out
}

/// All partitions with `1 <= length <= max_len` and weight at most
/// `max_weight`.
pub fn partitions_up_to(max_len: usize, max_weight: usize) -> Vec<Partition> {
    (1..=max_len)
        .flat_map(|m| partitions_of_length(m, max_weight))
        .collect()
}

/// All index tuples with `1 <= m <= max_len` and `n_m <= max_index`.
pub fn indices_up_to(max_len: usize, max_index: usize) -> Vec<SpectralIndices> {
    let mut out = Vec::new();
    let universe = max_index + 1;
    for mask in 1u64..(1u64 << universe) {
        let chosen: Vec<usize> = (0..universe).filter(|i| mask & (1 << i) != 0).collect();
        if chosen.len() <= max_len {
            out.push(SpectralIndices(chosen));
        }
    }
    out.sort();
    out
}
