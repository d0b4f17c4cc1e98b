//! Ribbon peeling as letter swaps in boundary words.
//!
//! Removing a ribbon of length `k` from `λ` is the same as exchanging a `1`
//! at position `q` with a `0` at position `q + k` in `∂(λ)`; the ribbon's
//! height is the number of `0`s strictly between them.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{
    boundary_sequence, partition_from_boundary, BoundarySequence, Composition, Partition,
};
use crate::quotient::RPartitePartition;

/// Positions `q` (1-based) with a `1` at `q` and a `0` at `q + length`.
pub fn peel_candidates(b: &BoundarySequence, length: usize) -> Vec<usize> {
    candidates(b.bits(), length).map(|q0| q0 + 1).collect()
}

fn candidates(bits: &[bool], length: usize) -> impl Iterator<Item = usize> + '_ {
    (0..bits.len().saturating_sub(length))
        .filter(move |&q| length > 0 && bits[q] && !bits[q + length])
}

/// Zeros strictly between 0-based `q` and `q + length` whose offset from `q`
/// is a multiple of `modulus`.
fn zeros_between(bits: &[bool], q: usize, length: usize, modulus: usize) -> usize {
    (q + 1..q + length)
        .filter(|&i| (i - q).is_multiple_of(modulus) && !bits[i])
        .count()
}

fn check_switch(b: &BoundarySequence, q: usize, length: usize) -> Result<usize> {
    let q0 = q
        .checked_sub(1)
        .filter(|&q0| length > 0 && q0 + length < b.len() && b.bits()[q0] && !b.bits()[q0 + length])
        .ok_or_else(|| {
            Error::InvalidArgument(format!(
                "no ribbon of length {length} at switch index {q} in {b}"
            ))
        })?;
    Ok(q0)
}

/// Swaps positions `q` and `q + length`; returns the (untrimmed) word and the
/// ribbon height.
pub fn peel(b: &BoundarySequence, q: usize, length: usize) -> Result<(BoundarySequence, usize)> {
    peel_mod(b, q, length, 1)
}

/// Same swap as [`peel`], but the height only counts zeros at positions
/// congruent to `q` mod `r`.
pub fn peel_mod(
    b: &BoundarySequence,
    q: usize,
    length: usize,
    r: usize,
) -> Result<(BoundarySequence, usize)> {
    if r == 0 || !length.is_multiple_of(r) {
        return Err(Error::InvalidArgument(format!(
            "ribbon length {length} is not a multiple of r = {r}"
        )));
    }
    let q0 = check_switch(b, q, length)?;
    let height = zeros_between(b.bits(), q0, length, r);
    let mut bits = b.bits().to_vec();
    bits.swap(q0, q0 + length);
    Ok((BoundarySequence::from_bits(bits), height))
}

/// All partitions obtained from `lambda` by removing one ribbon of the given
/// length, as `(switch index, result, height)`.
pub fn ribbon_peels(lambda: &Partition, length: usize) -> Vec<(usize, Partition, usize)> {
    let word = boundary_sequence(lambda, None).expect("unpadded boundary never fails");
    candidates(word.bits(), length)
        .map(|q0| {
            let (next, height) = peel(&word, q0 + 1, length).expect("candidate is valid");
            (q0 + 1, partition_from_boundary(&next), height)
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct PeelStep {
    /// 1-based position of the switched `1` in the current canonical word.
    pub q: usize,
    pub length: usize,
    pub height: usize,
    /// Component of the `r`-quotient the step removes a ribbon from.
    pub component: usize,
}

/// One complete μ-peeling: steps in the order applied (last part of μ first).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct PeelTrace {
    pub steps: Vec<PeelStep>,
    pub sign: i8,
}

impl PeelTrace {
    pub fn total_height(&self) -> usize {
        self.steps.iter().map(|s| s.height).sum()
    }

    /// `(−1)^{Σ heights}`, recomputed from the steps.
    pub fn recomputed_sign(&self) -> i8 {
        if self.total_height().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for PeelTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            writeln!(f, "q={} len={} ht={}", s.q, s.length, s.height)?;
        }
        write!(f, "sign={}", if self.sign > 0 { "+1" } else { "-1" })
    }
}

/// Every successful run of the peeling algorithm for `λ ∈ Par_r` and the
/// composition `mu`: ribbons of length `r·μ_t, r·μ_{t−1}, …` are peeled in
/// turn, heights counting only zeros congruent to the switch index mod `r`.
/// Candidates are tried in ascending order; dead ends are dropped.
pub fn enumerate_mu_peelings(
    lambda: &Partition,
    mu: &Composition,
    r: usize,
) -> Result<Vec<PeelTrace>> {
    if r == 0 {
        return Err(Error::InvalidArgument("r must be positive".into()));
    }
    if lambda.size() != r * mu.size() {
        return Err(Error::SizeMismatch(format!(
            "|{lambda}| = {} but r·|{mu}| = {}",
            lambda.size(),
            r * mu.size()
        )));
    }
    let mut out = Vec::new();
    let word = boundary_sequence(lambda, None)?;
    walk_peelings(&word, mu.parts(), r, &mut Vec::new(), &mut out);
    Ok(out)
}

fn walk_peelings(
    word: &BoundarySequence,
    remaining: &[usize],
    r: usize,
    steps: &mut Vec<PeelStep>,
    out: &mut Vec<PeelTrace>,
) {
    let Some((&last, rest)) = remaining.split_last() else {
        if word.is_empty() {
            let trace = PeelTrace {
                steps: steps.clone(),
                sign: 1,
            };
            let sign = trace.recomputed_sign();
            out.push(PeelTrace { sign, ..trace });
        }
        return;
    };
    let length = r * last;
    let anchor = word.anchor();
    for q0 in candidates(word.bits(), length).collect::<Vec<_>>() {
        let (next, height) = peel_mod(word, q0 + 1, length, r).expect("candidate is valid");
        steps.push(PeelStep {
            q: q0 + 1,
            length,
            height,
            component: (q0 + r - anchor % r) % r,
        });
        walk_peelings(&next.canonical(), rest, r, steps, out);
        steps.pop();
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct TableauEntry {
    pub component: usize,
    pub length: usize,
    pub height: usize,
    /// Cells of the ribbon as 0-based `(row, column)` in its component.
    pub cells: Vec<(usize, usize)>,
}

/// An `r`-partite ribbon tableau; entry `i` is the `i`-th ribbon added.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct RPartiteRibbonTableau {
    pub entries: Vec<TableauEntry>,
}

impl RPartiteRibbonTableau {
    pub fn sign(&self) -> i8 {
        if self.entries.iter().map(|e| e.height).sum::<usize>() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn components(&self) -> Vec<usize> {
        self.entries.iter().map(|e| e.component).collect()
    }

    pub fn heights(&self) -> Vec<usize> {
        self.entries.iter().map(|e| e.height).collect()
    }
}

/// All `r`-partite ribbon tableaux of shape `shape` whose `i`-th ribbon has
/// length `lengths_i`, found by peeling ribbons off the components directly
/// (no interlacing involved).
pub fn enumerate_rpartite_tableaux(
    shape: &RPartitePartition,
    lengths: &Composition,
) -> Result<Vec<RPartiteRibbonTableau>> {
    if shape.total_size() != lengths.size() {
        return Err(Error::SizeMismatch(format!(
            "|{shape}| = {} but |{lengths}| = {}",
            shape.total_size(),
            lengths.size()
        )));
    }
    let mut out = Vec::new();
    walk_tableaux(
        shape.components().to_vec(),
        lengths.parts(),
        &mut Vec::new(),
        &mut out,
    );
    Ok(out)
}

fn walk_tableaux(
    shape: Vec<Partition>,
    remaining: &[usize],
    peeled: &mut Vec<TableauEntry>,
    out: &mut Vec<RPartiteRibbonTableau>,
) {
    let Some((&last, rest)) = remaining.split_last() else {
        if shape.iter().all(Partition::is_empty) {
            let mut entries = peeled.clone();
            entries.reverse();
            out.push(RPartiteRibbonTableau { entries });
        }
        return;
    };
    for (j, component) in shape.iter().enumerate() {
        for (_, smaller, height) in ribbon_peels(component, last) {
            let cells = component
                .cells()
                .filter(|&(i, c)| c >= smaller.part(i + 1))
                .collect();
            peeled.push(TableauEntry {
                component: j,
                length: last,
                height,
                cells,
            });
            let mut next = shape.clone();
            next[j] = smaller;
            walk_tableaux(next, rest, peeled, out);
            peeled.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> BoundarySequence {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    /// Every ribbon removable from `lambda`, found on the diagram: all
    /// contained partitions whose skew difference is connected, of the right
    /// size, and free of 2×2 squares.
    fn diagram_ribbons(lambda: &Partition, length: usize) -> Vec<(Partition, usize)> {
        let mut out = Vec::new();
        let n = lambda.size();
        if length > n {
            return out;
        }
        for mu in crate::partition::partitions_of(n - length) {
            if !lambda.contains(&mu) {
                continue;
            }
            let cells: Vec<(usize, usize)> = lambda
                .cells()
                .filter(|&(i, j)| j >= mu.part(i + 1))
                .collect();
            let has = |i: usize, j: usize| cells.contains(&(i, j));
            let square = cells
                .iter()
                .any(|&(i, j)| has(i + 1, j) && has(i, j + 1) && has(i + 1, j + 1));
            let mut seen = vec![cells[0]];
            let mut stack = vec![cells[0]];
            while let Some((i, j)) = stack.pop() {
                for nb in [
                    (i + 1, j),
                    (i, j + 1),
                    (i.wrapping_sub(1), j),
                    (i, j.wrapping_sub(1)),
                ] {
                    if has(nb.0, nb.1) && !seen.contains(&nb) {
                        seen.push(nb);
                        stack.push(nb);
                    }
                }
            }
            if !square && seen.len() == cells.len() {
                let rows: std::collections::BTreeSet<usize> =
                    cells.iter().map(|&(i, _)| i).collect();
                out.push((mu, rows.len() - 1));
            }
        }
        out
    }

    #[test]
    fn candidate_examples() {
        assert_eq!(peel_candidates(&w("1100"), 2), vec![1, 2]);
        assert!(peel_candidates(&w("10"), 2).is_empty());
        let lambda = p("4,3");
        let word = boundary_sequence(&lambda, None).unwrap();
        let mut via_word: Vec<(Partition, usize)> = peel_candidates(&word, 3)
            .into_iter()
            .map(|q| {
                let (next, ht) = peel(&word, q, 3).unwrap();
                (partition_from_boundary(&next), ht)
            })
            .collect();
        via_word.sort();
        let mut via_diagram = diagram_ribbons(&lambda, 3);
        via_diagram.sort();
        assert_eq!(via_word.len(), 2);
        assert_eq!(via_word, via_diagram);
    }

    #[test]
    fn peel_examples() {
        let (next, ht) = peel(&w("1100"), 2, 2).unwrap();
        assert_eq!((next.to_string(), ht), ("1001".to_string(), 1));
        assert_eq!(partition_from_boundary(&next), p("1,1"));
        let (next, ht) = peel(&w("1100"), 1, 2).unwrap();
        assert_eq!((next.to_string(), ht), ("0110".to_string(), 0));
        let (next, ht) = peel(&w("10"), 1, 1).unwrap();
        assert_eq!((next.to_string(), ht), ("01".to_string(), 0));
        assert!(peel(&w("1100"), 3, 2).is_err());
        assert!(peel(&w("1100"), 0, 2).is_err());
    }

    #[test]
    fn peel_mod_examples() {
        assert_eq!(peel_mod(&w("1100"), 1, 2, 2).unwrap().1, 0);
        assert!(peel_mod(&w("1100"), 1, 2, 3).is_err());
        for q in peel_candidates(&w("1011101100011110"), 3) {
            assert_eq!(
                peel_mod(&w("1011101100011110"), q, 3, 1).unwrap(),
                peel(&w("1011101100011110"), q, 3).unwrap()
            );
        }
    }

    #[test]
    fn worked_peeling_heights() {
        // λ = (10,6,6,6,4,1), r = 3, ribbons of quotient lengths 2, 4, 2, 3.
        let mut word = w("1011101100011110");
        let switches = [(5, 6), (4, 12), (3, 6), (1, 9)];
        let mut heights = Vec::new();
        for (q, len) in switches {
            let (next, ht) = peel_mod(&word, q, len, 3).unwrap();
            heights.push(ht);
            word = next.canonical();
        }
        assert_eq!(heights, vec![0, 1, 1, 1]);
        assert!(word.is_empty());
    }

    #[test]
    fn worked_trace_is_enumerated() {
        let traces = enumerate_mu_peelings(&p("10,6,6,6,4,1"), &c("3,2,4,2"), 3).unwrap();
        let worked = traces
            .iter()
            .find(|t| t.steps.iter().map(|s| s.q).collect::<Vec<_>>() == [5, 4, 3, 1])
            .expect("worked peeling present");
        assert_eq!(
            worked.steps.iter().map(|s| s.height).collect::<Vec<_>>(),
            [0, 1, 1, 1]
        );
        assert_eq!(
            worked.steps.iter().map(|s| s.component).collect::<Vec<_>>(),
            [1, 0, 2, 0]
        );
        assert_eq!(worked.sign, -1);
        assert_eq!(
            worked.to_string(),
            "q=5 len=6 ht=0\nq=4 len=12 ht=1\nq=3 len=6 ht=1\nq=1 len=9 ht=1\nsign=-1"
        );
    }

    #[test]
    fn trace_edge_cases() {
        let empty = enumerate_mu_peelings(&Partition::empty(), &c("-"), 2).unwrap();
        assert_eq!(empty.len(), 1);
        assert!(empty[0].steps.is_empty());
        assert_eq!(empty[0].sign, 1);
        assert!(enumerate_mu_peelings(&Partition::empty(), &c("1"), 2).is_err());
        let traces = enumerate_mu_peelings(&p("2,2"), &c("1,1"), 2).unwrap();
        assert_eq!(traces.iter().map(|t| t.sign).collect::<Vec<_>>(), [1, 1]);
        let traces = enumerate_mu_peelings(&p("1,1"), &c("1"), 2).unwrap();
        assert_eq!(traces.len(), 1);
        assert_eq!(traces[0].sign, 1);
        assert!(enumerate_mu_peelings(&p("2,1"), &c("1"), 2).is_err());
    }

    #[test]
    fn worked_tableau_is_enumerated() {
        let shape: RPartitePartition = "[4,3|2|1,1]".parse().unwrap();
        let tableaux = enumerate_rpartite_tableaux(&shape, &c("3,2,4,2")).unwrap();
        let t = tableaux
            .iter()
            .find(|t| t.components() == [0, 2, 0, 1])
            .expect("worked tableau present");
        assert_eq!(t.heights(), [1, 1, 1, 0]);
        assert_eq!(t.entries[0].cells, vec![(0, 0), (0, 1), (1, 0)]);
        assert_eq!(t.entries[2].cells, vec![(0, 2), (0, 3), (1, 1), (1, 2)]);
        assert_eq!(t.sign(), -1);
    }

    #[test]
    fn tableau_edge_cases() {
        let shape: RPartitePartition = "[1|1]".parse().unwrap();
        assert_eq!(
            enumerate_rpartite_tableaux(&shape, &c("1,1"))
                .unwrap()
                .len(),
            2
        );
        let empty = enumerate_rpartite_tableaux(&RPartitePartition::empty(3), &c("-")).unwrap();
        assert_eq!(empty.len(), 1);
        assert!(empty[0].entries.is_empty());
        assert!(enumerate_rpartite_tableaux(&shape, &c("1")).is_err());
    }

    #[test]
    fn word_peels_match_diagram_ribbons() {
        for n in 0..=9 {
            for lambda in crate::partition::partitions_of(n) {
                for len in 1..=n {
                    let mut a: Vec<(Partition, usize)> = ribbon_peels(&lambda, len)
                        .into_iter()
                        .map(|(_, p, h)| (p, h))
                        .collect();
                    let mut b = diagram_ribbons(&lambda, len);
                    a.sort();
                    b.sort();
                    assert_eq!(a, b, "{lambda} length {len}");
                }
            }
        }
    }
}
