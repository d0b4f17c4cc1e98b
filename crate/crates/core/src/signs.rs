//! The `r`-sign of a partition with empty `r`-core.
//!
//! Three routes to the same `±1`: the inversion count of the row-color
//! sequence relative to that of `∅`, the parity of the adjacent-transposition
//! distance between the two sequences, and (for `r = 2` only) the number of
//! odd parts.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{row_color_sequence, Partition};
use crate::quotient::{has_empty_core, r_core};

fn require_empty_core(lambda: &Partition, r: usize) -> Result<()> {
    if r == 0 {
        return Err(Error::InvalidArgument("r must be positive".into()));
    }
    if has_empty_core(lambda, r) {
        Ok(())
    } else {
        Err(Error::NonEmptyCore {
            partition: lambda.clone(),
            r,
            core: r_core(lambda, r)?,
        })
    }
}

fn parity(n: usize) -> i8 {
    if n.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn inversions(word: &[usize]) -> usize {
    word.iter()
        .enumerate()
        .map(|(i, a)| word[i + 1..].iter().filter(|b| a > b).count())
        .sum()
}

/// `|{(i, j) : i < j, a_i > a_j}|` for the length-`k` row-color sequence.
pub fn inv_r(lambda: &Partition, k: usize, r: usize) -> Result<usize> {
    Ok(inversions(&row_color_sequence(lambda, k, r)?.colors))
}

fn sign_at(lambda: &Partition, k: usize, r: usize) -> Result<i8> {
    let own = inv_r(lambda, k, r)?;
    let empty = inv_r(&Partition::empty(), k, r)?;
    Ok(parity(own.abs_diff(empty)))
}

fn default_k(lambda: &Partition) -> usize {
    lambda.len().max(1)
}

/// `(−1)^{inv(λ) − inv(∅)}` at `k = ℓ(λ)`, cross-checked at `k + 1`.
pub fn sign_r(lambda: &Partition, r: usize) -> Result<i8> {
    require_empty_core(lambda, r)?;
    let k = default_k(lambda);
    let sign = sign_at(lambda, k, r)?;
    let next = sign_at(lambda, k + 1, r)?;
    assert_eq!(sign, next, "r-sign of {lambda} depends on k");
    Ok(sign)
}

/// Minimal number of adjacent transpositions turning `from` into `to`, or
/// `None` if the words are not rearrangements of each other. Equal letters
/// are matched in order of appearance; the resulting permutation's inversion
/// count is the distance.
pub fn adjacent_swap_distance(from: &[usize], to: &[usize]) -> Option<usize> {
    if from.len() != to.len() {
        return None;
    }
    let alphabet = from.iter().chain(to).copied().max().map_or(0, |m| m + 1);
    let mut slots: Vec<std::collections::VecDeque<usize>> = vec![Default::default(); alphabet];
    for (j, &b) in to.iter().enumerate() {
        slots[b].push_back(j);
    }
    let target: Option<Vec<usize>> = from.iter().map(|&a| slots[a].pop_front()).collect();
    target.map(|perm| inversions(&perm))
}

/// `d_r(λ, ∅)` at `k = ℓ(λ)`.
pub fn d_r_distance(lambda: &Partition, r: usize) -> Result<usize> {
    require_empty_core(lambda, r)?;
    distance_at(lambda, default_k(lambda), r)
}

fn distance_at(lambda: &Partition, k: usize, r: usize) -> Result<usize> {
    let own = row_color_sequence(lambda, k, r)?;
    let empty = row_color_sequence(&Partition::empty(), k, r)?;
    Ok(adjacent_swap_distance(&own.colors, &empty.colors)
        .expect("row colors of a partition with empty core permute those of the empty partition"))
}

/// `(−1)^{odd(λ)/2}` for `λ` with empty 2-core.
pub fn sign2_closed(lambda: &Partition) -> Result<i8> {
    require_empty_core(lambda, 2)?;
    Ok(parity(lambda.odd_parts() / 2))
}

/// Every route to the `r`-sign, side by side.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignReport {
    pub schema: &'static str,
    pub lambda: Partition,
    pub r: usize,
    #[serde(rename = "k")]
    pub k_used: usize,
    #[serde(rename = "inv")]
    pub inv_count: usize,
    #[serde(rename = "inv_empty")]
    pub inv_count_empty: usize,
    #[serde(rename = "d")]
    pub d_r: usize,
    pub sign: i8,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sign2_closed: Option<i8>,
}

impl SignReport {
    /// Whether all routes agree.
    pub fn consistent(&self) -> bool {
        let by_inv = parity(self.inv_count.abs_diff(self.inv_count_empty));
        by_inv == self.sign
            && parity(self.d_r) == self.sign
            && self.sign2_closed.is_none_or(|s| s == self.sign)
    }
}

pub fn sign_report(lambda: &Partition, r: usize) -> Result<SignReport> {
    sign_report_at(lambda, r, default_k(lambda))
}

/// [`sign_report`] with the inversion counts and distance taken at `k` rows.
pub fn sign_report_at(lambda: &Partition, r: usize, k: usize) -> Result<SignReport> {
    let sign = sign_r(lambda, r)?;
    Ok(SignReport {
        schema: "ribbonrep.sign/1",
        lambda: lambda.clone(),
        r,
        k_used: k,
        inv_count: inv_r(lambda, k, r)?,
        inv_count_empty: inv_r(&Partition::empty(), k, r)?,
        d_r: distance_at(lambda, k, r)?,
        sign,
        sign2_closed: if r == 2 {
            Some(sign2_closed(lambda)?)
        } else {
            None
        },
    })
}

#[cfg(test)]
mod tests {
    use std::collections::{HashMap, VecDeque};

    use super::*;
    use crate::quotient::enumerate_par_r;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    /// Breadth-first search over adjacent swaps.
    fn bfs_distance(from: &[usize], to: &[usize]) -> Option<usize> {
        let mut seen = HashMap::from([(from.to_vec(), 0usize)]);
        let mut queue = VecDeque::from([from.to_vec()]);
        while let Some(word) = queue.pop_front() {
            let d = seen[&word];
            if word == to {
                return Some(d);
            }
            for i in 0..word.len().saturating_sub(1) {
                let mut next = word.clone();
                next.swap(i, i + 1);
                if !seen.contains_key(&next) {
                    seen.insert(next.clone(), d + 1);
                    queue.push_back(next);
                }
            }
        }
        None
    }

    #[test]
    fn inversion_examples() {
        assert_eq!(inv_r(&p("5,5,4,3,1"), 5, 3).unwrap(), 3);
        assert_eq!(inv_r(&Partition::empty(), 5, 3).unwrap(), 5);
        assert_eq!(inv_r(&p("4,2,1"), 6, 1).unwrap(), 0);
        assert!(inv_r(&p("1,1"), 1, 2).is_err());
    }

    #[test]
    fn sign_examples() {
        assert_eq!(sign_r(&p("5,5,4,3,1"), 3).unwrap(), 1);
        assert_eq!(sign_r(&Partition::empty(), 4).unwrap(), 1);
        assert_eq!(sign_r(&p("1,1"), 2).unwrap(), -1);
        assert!(matches!(
            sign_r(&p("2,1"), 2),
            Err(Error::NonEmptyCore { .. })
        ));
    }

    #[test]
    fn distance_examples() {
        assert_eq!(d_r_distance(&p("5,5,4,3,1"), 3).unwrap(), 4);
        assert_eq!(d_r_distance(&Partition::empty(), 3).unwrap(), 0);
        assert_eq!(d_r_distance(&p("1,1"), 2).unwrap(), 1);
        assert_eq!(bfs_distance(&[0, 1], &[1, 0]), Some(1));
        assert!(d_r_distance(&p("3"), 2).is_err());
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(sign2_closed(&p("2,2")).unwrap(), 1);
        assert_eq!(sign2_closed(&p("1,1")).unwrap(), -1);
        assert_eq!(sign2_closed(&p("2,1,1")).unwrap(), -1);
        assert_eq!(sign_r(&p("2,1,1"), 2).unwrap(), -1);
        assert!(sign2_closed(&p("1")).is_err());
    }

    #[test]
    fn matching_distance_is_minimal() {
        // every word over {0,1,2} of length ≤ 7 against a sorted and a shuffled rearrangement
        for len in 0..=7usize {
            for code in 0..3usize.pow(len as u32) {
                let word: Vec<usize> = (0..len).map(|i| code / 3usize.pow(i as u32) % 3).collect();
                let mut sorted = word.clone();
                sorted.sort_unstable();
                let mut rotated = word.clone();
                rotated.rotate_left(len / 2);
                rotated.reverse();
                for target in [&sorted, &rotated] {
                    assert_eq!(
                        adjacent_swap_distance(&word, target),
                        bfs_distance(&word, target)
                    );
                }
            }
        }
        assert_eq!(adjacent_swap_distance(&[0, 1], &[1, 1]), None);
    }

    #[test]
    fn report_matches_worked_example() {
        let report = sign_report(&p("5,5,4,3,1"), 3).unwrap();
        assert_eq!(
            (report.k_used, report.inv_count, report.inv_count_empty),
            (5, 3, 5)
        );
        assert_eq!((report.d_r, report.sign, report.sign2_closed), (4, 1, None));
        assert!(report.consistent());
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["d"], 4);
        assert_eq!(json["lambda"], "5,5,4,3,1");
        assert!(json.get("sign2_closed").is_none());
        let wide = sign_report_at(&p("5,5,4,3,1"), 3, 8).unwrap();
        assert_eq!((wide.k_used, wide.sign), (8, 1));
        assert!(wide.consistent());
        assert!(sign_report_at(&p("5,5,4,3,1"), 3, 4).is_err());
    }

    #[test]
    fn reports_are_consistent() {
        for r in 1..=4 {
            for n in 0..=4 {
                for lambda in enumerate_par_r(r, n) {
                    assert!(
                        sign_report(&lambda, r).unwrap().consistent(),
                        "{lambda} r={r}"
                    );
                }
            }
        }
    }
}
