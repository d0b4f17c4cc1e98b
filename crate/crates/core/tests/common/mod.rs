//! Oracles that work on cell diagrams rather than boundary words.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use ribbonrep::{AbelianGroupSpec, CyclotomicInt, Partition, RPartitePartition};

fn cells(lambda: &Partition) -> BTreeSet<(usize, usize)> {
    lambda.cells().collect()
}

/// Sub-diagrams of `lambda` with `count` fewer cells.
fn shrink(lambda: &Partition, count: usize) -> BTreeSet<Partition> {
    let mut level = BTreeSet::from([lambda.clone()]);
    for _ in 0..count {
        let mut next = BTreeSet::new();
        for p in &level {
            let parts = p.parts();
            for i in 0..parts.len() {
                if i + 1 == parts.len() || parts[i] > parts[i + 1] {
                    let mut smaller = parts.to_vec();
                    smaller[i] -= 1;
                    smaller.retain(|&x| x > 0);
                    next.insert(Partition::new(smaller).unwrap());
                }
            }
        }
        level = next;
    }
    level
}

/// Rim hooks of `lambda` with `len` cells: skew shapes that are connected and
/// contain no 2×2 square. Returns the remaining shape and the hook height.
pub fn rim_hooks(lambda: &Partition, len: usize) -> Vec<(Partition, usize)> {
    let outer = cells(lambda);
    shrink(lambda, len)
        .into_iter()
        .filter_map(|nu| {
            let inner = cells(&nu);
            let skew: BTreeSet<(usize, usize)> = outer.difference(&inner).copied().collect();
            let square = skew.iter().any(|&(i, j)| {
                skew.contains(&(i + 1, j))
                    && skew.contains(&(i, j + 1))
                    && skew.contains(&(i + 1, j + 1))
            });
            if square || !connected(&skew) {
                return None;
            }
            let rows: BTreeSet<usize> = skew.iter().map(|&(i, _)| i).collect();
            Some((nu, rows.len() - 1))
        })
        .collect()
}

fn connected(cells: &BTreeSet<(usize, usize)>) -> bool {
    let Some(&start) = cells.iter().next() else {
        return true;
    };
    let mut seen = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some((i, j)) = stack.pop() {
        let mut near = vec![(i + 1, j), (i, j + 1)];
        if i > 0 {
            near.push((i - 1, j));
        }
        if j > 0 {
            near.push((i, j - 1));
        }
        for c in near {
            if cells.contains(&c) && seen.insert(c) {
                stack.push(c);
            }
        }
    }
    seen.len() == cells.len()
}

/// `χ^λ(μ)` by rim-hook removal on diagrams.
pub fn mn_oracle(lambda: &Partition, mu: &[usize]) -> i64 {
    fn go(lambda: &Partition, mu: &[usize], memo: &mut HashMap<(Partition, usize), i64>) -> i64 {
        let Some((&last, rest)) = mu.split_last() else {
            return i64::from(lambda.is_empty());
        };
        let key = (lambda.clone(), mu.len());
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let total = rim_hooks(lambda, last)
            .into_iter()
            .map(|(nu, h)| if h % 2 == 0 { 1 } else { -1 } * go(&nu, rest, memo))
            .sum();
        memo.insert(key, total);
        total
    }
    go(lambda, mu, &mut HashMap::new())
}

/// `ψ^t` of `G ≀ S_n` by the induction formula: sum over assignments of
/// cycles to components, `∏ θ_j(color) · ∏_j χ^{t_j}(cycles sent to j)`.
pub fn wreath_oracle(
    t: &RPartitePartition,
    cycles: &[(usize, usize)],
    group: &AbelianGroupSpec,
) -> CyclotomicInt {
    let r = t.arity();
    let l = group.exponent();
    let mut total = CyclotomicInt::zero(l);
    let mut assignment = vec![0usize; cycles.len()];
    loop {
        let mut sizes = vec![0usize; r];
        for (&(len, _), &j) in cycles.iter().zip(&assignment) {
            sizes[j] += len;
        }
        if sizes
            .iter()
            .zip(t.components())
            .all(|(&s, c)| s == c.size())
        {
            let mut term = CyclotomicInt::one(l);
            for (&(_, color), &j) in cycles.iter().zip(&assignment) {
                term = &term * &group.theta(j, color);
            }
            for (j, c) in t.components().iter().enumerate() {
                let lengths: Vec<usize> = cycles
                    .iter()
                    .zip(&assignment)
                    .filter(|&(_, &a)| a == j)
                    .map(|(&(len, _), _)| len)
                    .collect();
                term =
                    &term * &CyclotomicInt::from_integer(l, BigInt::from(mn_oracle(c, &lengths)));
            }
            total = &total + &term;
        }
        // next assignment in base r
        let mut i = 0;
        loop {
            if i == assignment.len() {
                return total;
            }
            assignment[i] += 1;
            if assignment[i] < r {
                break;
            }
            assignment[i] = 0;
            i += 1;
        }
    }
}
