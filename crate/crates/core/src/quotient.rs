//! The `r`-quotient map and its inverse.
//!
//! `phi_r` pads the boundary words of `r` partitions to a common length with
//! a common anchor and interlaces them letter by letter; component `i`
//! (0-based) supplies positions `i, i + r, i + 2r, …` of the merged word,
//! counted from a point where the merged anchor is a multiple of `r`.
//!
//! This labeling differs from the abacus convention by a cyclic shift of the
//! components.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::{
    boundary_sequence, partition_from_boundary, partitions_of, BoundarySequence, Partition,
};

/// An `r`-tuple of partitions; `r` is the arity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RPartitePartition {
    components: Vec<Partition>,
}

impl RPartitePartition {
    pub fn new(components: Vec<Partition>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidArgument(
                "an r-partite partition needs at least one component".into(),
            ));
        }
        Ok(RPartitePartition { components })
    }

    /// `r` empty components.
    pub fn empty(r: usize) -> Self {
        assert!(r > 0, "arity must be positive");
        RPartitePartition {
            components: vec![Partition::empty(); r],
        }
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    pub fn arity(&self) -> usize {
        self.components.len()
    }

    pub fn total_size(&self) -> usize {
        self.components.iter().map(Partition::size).sum()
    }
}

impl fmt::Display for RPartitePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for RPartitePartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .strip_prefix('[')
            .and_then(|rest| rest.strip_suffix(']'))
            .ok_or_else(|| Error::parse(s, "expected `[λ0|λ1|…]`"))?;
        let components = inner
            .split('|')
            .map(str::parse)
            .collect::<Result<Vec<Partition>>>()?;
        RPartitePartition::new(components)
    }
}

impl Serialize for RPartitePartition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for RPartitePartition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Pads the components' boundary words to a common anchor and length
/// (the minimal such padding) and returns them.
pub fn aligned_boundaries(t: &RPartitePartition) -> Vec<BoundarySequence> {
    let words: Vec<BoundarySequence> = t
        .components
        .iter()
        .map(|c| boundary_sequence(c, None).expect("unpadded boundary never fails"))
        .collect();
    let left = words
        .iter()
        .map(BoundarySequence::anchor)
        .max()
        .unwrap_or(0);
    let right = words.iter().map(BoundarySequence::ones).max().unwrap_or(0);
    words
        .iter()
        .map(|w| w.padded(left - w.anchor(), right - w.ones()))
        .collect()
}

/// Interlaces aligned words into one word of length `r·t`.
pub fn interlace(words: &[BoundarySequence]) -> BoundarySequence {
    let len = words.first().map_or(0, BoundarySequence::len);
    debug_assert!(words.iter().all(|w| w.len() == len));
    let bits = (0..len)
        .flat_map(|j| words.iter().map(move |w| w.bits()[j]))
        .collect();
    BoundarySequence::from_bits(bits)
}

pub fn phi_r(t: &RPartitePartition) -> Partition {
    partition_from_boundary(&interlace(&aligned_boundaries(t)))
}

/// Boundary word of `lambda` with leading `0`s and trailing `1`s added so
/// that both the anchor and the length are multiples of `r`.
pub(crate) fn residue_aligned_boundary(lambda: &Partition, r: usize) -> BoundarySequence {
    let word = boundary_sequence(lambda, None).expect("unpadded boundary never fails");
    let lead = (r - word.anchor() % r) % r;
    let trail = (r - (word.len() + lead) % r) % r;
    word.padded(lead, trail)
}

/// Splits `lambda`'s word into its `r` residue classes. Each component's
/// anchor equals `anchor / r` exactly when the `r`-core is empty.
fn deinterlace(lambda: &Partition, r: usize) -> (Vec<BoundarySequence>, usize) {
    let word = residue_aligned_boundary(lambda, r);
    let target = word.anchor() / r;
    let parts = (0..r)
        .map(|i| {
            BoundarySequence::from_bits(word.bits().iter().skip(i).step_by(r).copied().collect())
        })
        .collect();
    (parts, target)
}

pub fn r_quotient(lambda: &Partition, r: usize) -> Result<RPartitePartition> {
    if r == 0 {
        return Err(Error::InvalidArgument("r must be positive".into()));
    }
    let (parts, target) = deinterlace(lambda, r);
    if parts.iter().any(|w| w.anchor() != target) {
        return Err(Error::NonEmptyCore {
            partition: lambda.clone(),
            r,
            core: r_core(lambda, r)?,
        });
    }
    Ok(RPartitePartition {
        components: parts.iter().map(partition_from_boundary).collect(),
    })
}

/// Whether `lambda` reduces to `∅` by `r`-ribbons, read off the anchors of
/// the de-interlaced word without peeling.
pub fn has_empty_core(lambda: &Partition, r: usize) -> bool {
    if r == 0 {
        return false;
    }
    let (parts, target) = deinterlace(lambda, r);
    parts.iter().all(|w| w.anchor() == target)
}

/// Peels length-`r` ribbons, always at the smallest available switch index,
/// until none is left.
pub fn r_core(lambda: &Partition, r: usize) -> Result<Partition> {
    if r == 0 {
        return Err(Error::InvalidArgument("r must be positive".into()));
    }
    let mut bits = boundary_sequence(lambda, None)?.into_bits();
    while let Some(q) = (0..bits.len().saturating_sub(r)).find(|&q| bits[q] && !bits[q + r]) {
        bits.swap(q, q + r);
    }
    Ok(partition_from_boundary(&BoundarySequence::from_bits(bits)))
}

/// All `r`-partite partitions of `n`: component sizes in decreasing
/// lexicographic order, then each component in decreasing lexicographic
/// order. The first entry is `((n), ∅, …, ∅)`.
pub fn rpartite_partitions(r: usize, n: usize) -> Vec<RPartitePartition> {
    assert!(r > 0, "arity must be positive");
    let by_size: Vec<Vec<Partition>> = (0..=n).map(partitions_of).collect();
    let mut out = Vec::new();
    for sizes in weak_compositions(n, r) {
        let mut acc: Vec<Vec<Partition>> = vec![Vec::new()];
        for &s in &sizes {
            acc = acc
                .into_iter()
                .flat_map(|prefix| {
                    by_size[s].iter().map(move |p| {
                        let mut next = prefix.clone();
                        next.push(p.clone());
                        next
                    })
                })
                .collect();
        }
        out.extend(
            acc.into_iter()
                .map(|components| RPartitePartition { components }),
        );
    }
    out
}

/// Sequences of `r` non-negative integers summing to `n`, decreasing lexicographically.
fn weak_compositions(n: usize, r: usize) -> Vec<Vec<usize>> {
    if r == 1 {
        return vec![vec![n]];
    }
    (0..=n)
        .rev()
        .flat_map(|first| {
            weak_compositions(n - first, r - 1)
                .into_iter()
                .map(move |mut rest| {
                    rest.insert(0, first);
                    rest
                })
        })
        .collect()
}

/// Partitions of `r·n` with empty `r`-core, decreasing lexicographically.
pub fn enumerate_par_r(r: usize, n: usize) -> Vec<Partition> {
    let mut out: Vec<Partition> = rpartite_partitions(r, n).iter().map(phi_r).collect();
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}
