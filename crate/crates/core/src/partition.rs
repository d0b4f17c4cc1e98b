//! Partitions, compositions and their 0/1 boundary encoding.
//!
//! A boundary sequence walks the south-east rim of a Young diagram (English
//! convention) from the south-west corner to the north-east corner, writing
//! `1` for an east step and `0` for a north step. Every `1` is a column and
//! every `0` is a row, rows being read bottom to top.
//!
//! Positions in a boundary sequence are **1-based** throughout the public API
//! (switch indices, trace lines, zero positions), matching the way the words
//! are usually written down. Internally the bits live in a `Vec<bool>` and
//! position `p` is element `p - 1`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidArgument(format!(
                "partition parts must be positive: {parts:?}"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!(
                "partition parts must be weakly decreasing: {parts:?}"
            )));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of (positive) parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// The `i`-th part, 1-based, with zero beyond the last part.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|j| self.0.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition(parts)
    }

    /// Hook length of the cell in row `i`, column `j` (both 0-based).
    pub fn hook_length(&self, i: usize, j: usize) -> usize {
        let arm = self.0[i] - j - 1;
        let leg = self.0[i + 1..].iter().take_while(|&&p| p > j).count();
        arm + leg + 1
    }

    pub fn odd_parts(&self) -> usize {
        self.0.iter().filter(|&&p| p % 2 == 1).count()
    }

    /// Cells as 0-based `(row, column)` pairs in reading order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (0..p).map(move |j| (i, j)))
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    if parts.is_empty() {
        return f.write_str("-");
    }
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    Ok(())
}

fn parse_parts(s: &str) -> Result<Vec<usize>> {
    if s == "-" {
        return Ok(Vec::new());
    }
    if s.is_empty() {
        return Err(Error::parse(
            s,
            "empty literal; write `-` for the empty partition",
        ));
    }
    s.split(',')
        .map(|tok| {
            let value: usize = tok
                .parse()
                .map_err(|_| Error::parse(tok, "expected a positive decimal integer"))?;
            if value == 0 {
                return Err(Error::parse(tok, "parts must be positive"));
            }
            Ok(value)
        })
        .collect()
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = parse_parts(s)?;
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::parse(s, "parts must be weakly decreasing"));
        }
        Ok(Partition(parts))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A finite sequence of positive integers in any order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidArgument(format!(
                "composition parts must be positive: {parts:?}"
            )));
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Multiplies every part by `factor`.
    pub fn scaled(&self, factor: usize) -> Composition {
        assert!(factor > 0, "scale factor must be positive");
        Composition(self.0.iter().map(|p| p * factor).collect())
    }

    /// The partition with the same multiset of parts.
    pub fn sorted(&self) -> Partition {
        let mut parts = self.0.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }
}

impl From<Partition> for Composition {
    fn from(p: Partition) -> Self {
        Composition(p.0)
    }
}

impl From<&Partition> for Composition {
    fn from(p: &Partition) -> Self {
        Composition(p.0.clone())
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_parts(s).map(Composition)
    }
}

impl Serialize for Composition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// All partitions of `n`, in decreasing lexicographic order (`(n)` first).
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for p in (1..=remaining.min(max)).rev() {
            prefix.push(p);
            go(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// A 0/1 boundary word. The anchor is not stored: for any word it is the
/// gap with as many `1`s to its left as `0`s to its right, which is always
/// the gap after the first `z` letters, `z` being the number of `0`s.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoundarySequence {
    bits: Vec<bool>,
}

impl BoundarySequence {
    pub fn from_bits(bits: Vec<bool>) -> Self {
        BoundarySequence { bits }
    }

    pub fn empty() -> Self {
        BoundarySequence { bits: Vec::new() }
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn into_bits(self) -> Vec<bool> {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// Bit at 1-based position `pos`.
    pub fn bit(&self, pos: usize) -> Option<bool> {
        pos.checked_sub(1).and_then(|i| self.bits.get(i).copied())
    }

    pub fn ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn zeros(&self) -> usize {
        self.bits.len() - self.ones()
    }

    /// Number of letters to the left of the anchor.
    pub fn anchor(&self) -> usize {
        self.zeros()
    }

    /// Canonical words start with `1` and end with `0` (or are empty).
    pub fn is_canonical(&self) -> bool {
        self.bits.first() != Some(&false) && self.bits.last() != Some(&true)
    }

    /// Strips leading `0`s and trailing `1`s.
    pub fn canonical(&self) -> BoundarySequence {
        let start = self.bits.iter().position(|&b| b).unwrap_or(self.bits.len());
        let end = self.bits.iter().rposition(|&b| !b).map_or(0, |i| i + 1);
        if start >= end {
            return BoundarySequence::empty();
        }
        BoundarySequence {
            bits: self.bits[start..end].to_vec(),
        }
    }

    pub fn padded(&self, leading_zeros: usize, trailing_ones: usize) -> BoundarySequence {
        let mut bits = Vec::with_capacity(self.bits.len() + leading_zeros + trailing_ones);
        bits.extend(std::iter::repeat_n(false, leading_zeros));
        bits.extend_from_slice(&self.bits);
        bits.extend(std::iter::repeat_n(true, trailing_ones));
        BoundarySequence { bits }
    }

    /// The word with a `|` inserted at the anchor, e.g. `11|1010`.
    pub fn display_with_anchor(&self) -> String {
        let mut s = String::with_capacity(self.bits.len() + 1);
        for (i, &b) in self.bits.iter().enumerate() {
            if i == self.anchor() {
                s.push('|');
            }
            s.push(if b { '1' } else { '0' });
        }
        if self.anchor() == self.bits.len() {
            s.push('|');
        }
        s
    }
}

impl fmt::Display for BoundarySequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Parses a 0/1 word. A single `|` is accepted if it sits at the anchor.
impl FromStr for BoundarySequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut bits = Vec::with_capacity(s.len());
        let mut marker = None;
        for c in s.chars() {
            match c {
                '0' => bits.push(false),
                '1' => bits.push(true),
                '|' if marker.is_none() => marker = Some(bits.len()),
                _ => return Err(Error::parse(s, format!("unexpected character `{c}`"))),
            }
        }
        let word = BoundarySequence { bits };
        if let Some(m) = marker {
            if m != word.anchor() {
                return Err(Error::parse(
                    s,
                    format!(
                        "anchor marker at {m}, but the anchor is at {}",
                        word.anchor()
                    ),
                ));
            }
        }
        Ok(word)
    }
}

/// Boundary sequence of `lambda`. With `pad_rows = Some(k)` the word has
/// exactly `k` zeros (leading zeros stand for empty rows) and the zero of row
/// `i` sits at position `ℓ_i + k − i + 1`.
pub fn boundary_sequence(lambda: &Partition, pad_rows: Option<usize>) -> Result<BoundarySequence> {
    let k = pad_rows.unwrap_or(lambda.len());
    if k < lambda.len() {
        return Err(Error::InvalidArgument(format!(
            "pad_rows {k} is smaller than the {} parts of {lambda}",
            lambda.len()
        )));
    }
    let mut bits = Vec::with_capacity(lambda.part(1) + k);
    let mut width = 0;
    for i in (1..=k).rev() {
        let row = lambda.part(i);
        bits.extend(std::iter::repeat_n(true, row - width));
        bits.push(false);
        width = row;
    }
    Ok(BoundarySequence { bits })
}

/// Reads the partition back from any word; leading `0`s give empty rows and
/// trailing `1`s are ignored, so non-canonical words are fine.
pub fn partition_from_boundary(b: &BoundarySequence) -> Partition {
    let mut ones = 0;
    let mut rows = Vec::with_capacity(b.zeros());
    for &bit in b.bits() {
        if bit {
            ones += 1;
        } else if ones > 0 {
            rows.push(ones);
        }
    }
    rows.reverse();
    Partition(rows)
}

/// Index `i` (1-based) such that the anchor lies between letters `i` and `i+1`.
pub fn anchor_position(word: &[bool]) -> Result<usize> {
    let zeros = word.iter().filter(|&&b| !b).count();
    if zeros == 0 || zeros == word.len() {
        return Err(Error::InvalidArgument(
            "anchor position needs a word with at least one 0 and one 1".into(),
        ));
    }
    Ok(zeros)
}

/// `(ℓ_1 + k − 1, ℓ_2 + k − 2, …, ℓ_k)`.
pub fn beta_numbers(lambda: &Partition, k: usize) -> Result<Vec<usize>> {
    if k < lambda.len() {
        return Err(Error::InvalidArgument(format!(
            "k = {k} is smaller than the {} parts of {lambda}",
            lambda.len()
        )));
    }
    Ok((1..=k).map(|i| lambda.part(i) + k - i).collect())
}

/// β-numbers reduced mod `r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct RowColorSequence {
    pub colors: Vec<usize>,
    pub modulus: usize,
}

impl RowColorSequence {
    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }
}

pub fn row_color_sequence(lambda: &Partition, k: usize, r: usize) -> Result<RowColorSequence> {
    if r == 0 {
        return Err(Error::InvalidArgument("r must be positive".into()));
    }
    let colors = beta_numbers(lambda, k)?
        .into_iter()
        .map(|b| b % r)
        .collect();
    Ok(RowColorSequence { colors, modulus: r })
}

/// Degree of `χ^λ` by the hook length formula.
pub fn dimension(lambda: &Partition) -> BigUint {
    let n = lambda.size();
    let mut numerator: BigUint = (1..=n).map(BigUint::from).product();
    let hooks: BigUint = lambda
        .cells()
        .map(|(i, j)| BigUint::from(lambda.hook_length(i, j)))
        .fold(BigUint::one(), |acc, h| acc * h);
    numerator /= hooks;
    numerator
}
