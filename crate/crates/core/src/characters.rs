//! Murnaghan-Nakayama evaluation for `S_n` and `G ≀ S_n`, `G` finite abelian.
//!
//! Two independent evaluators live here:
//!
//! * [`chi_sn`] and [`psi_zero_colored`] peel ribbons of length `r·μ_i` off
//!   the boundary word of a single partition `λ ∈ Par_r`, counting heights
//!   only at positions congruent to the switch index mod `r` (`r = 1` is the
//!   ordinary rule).
//! * [`psi_wreath`] peels ribbons of length `μ_i` off the components of an
//!   `r`-partite partition and weights each one by `θ_f(z)`, which handles
//!   arbitrary colored classes.
//!
//! Both memoize on (remaining boundary word(s), number of cycles left); the
//! cache lives for one call.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::cyclotomic::CyclotomicInt;
use crate::error::{Error, Result};
use crate::partition::{boundary_sequence, BoundarySequence, Composition, Partition};
use crate::quotient::{has_empty_core, r_core, rpartite_partitions, RPartitePartition};

/// `G ≅ ℤ_{o_1} × … × ℤ_{o_m}`. Elements and irreducible characters are both
/// residue tuples, enumerated lexicographically (last coordinate fastest),
/// identity / trivial character first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelianGroupSpec {
    cyclic_orders: Vec<u32>,
}

impl AbelianGroupSpec {
    /// Factors of order 1 are dropped, so `[]` is the trivial group.
    pub fn new(cyclic_orders: Vec<u32>) -> Result<Self> {
        if cyclic_orders.contains(&0) {
            return Err(Error::InvalidArgument("cyclic factor of order 0".into()));
        }
        Ok(AbelianGroupSpec {
            cyclic_orders: cyclic_orders.into_iter().filter(|&o| o > 1).collect(),
        })
    }

    pub fn cyclic(r: u32) -> Self {
        Self::new(vec![r]).expect("r must be positive")
    }

    pub fn cyclic_orders(&self) -> &[u32] {
        &self.cyclic_orders
    }

    /// `r = |G|`.
    pub fn order(&self) -> usize {
        self.cyclic_orders.iter().map(|&o| o as usize).product()
    }

    /// `L`, the lcm of the factor orders; character values live in `ℤ[ω_L]`.
    pub fn exponent(&self) -> u32 {
        self.cyclic_orders.iter().fold(1, |acc, o| acc.lcm(o))
    }

    /// The residue tuple of element (or character) number `index`.
    pub fn element(&self, index: usize) -> Vec<u32> {
        let mut rest = index;
        let mut out = vec![0; self.cyclic_orders.len()];
        for (slot, &o) in out.iter_mut().zip(&self.cyclic_orders).rev() {
            *slot = (rest % o as usize) as u32;
            rest /= o as usize;
        }
        out
    }

    /// Exponent `e` with `θ_a(g) = ω_L^e`.
    fn pairing_exponent(&self, character: usize, element: usize) -> i64 {
        let l = self.exponent();
        let a = self.element(character);
        let g = self.element(element);
        self.cyclic_orders
            .iter()
            .zip(a.iter().zip(&g))
            .map(|(&o, (&ai, &gi))| i64::from(l / o) * i64::from(ai) * i64::from(gi))
            .sum::<i64>()
            % i64::from(l)
    }

    /// `θ_character(element)` as an `L`-th root of unity.
    pub fn theta(&self, character: usize, element: usize) -> CyclotomicInt {
        CyclotomicInt::root(self.exponent(), self.pairing_exponent(character, element))
    }
}

impl fmt::Display for AbelianGroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cyclic_orders.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.cyclic_orders.iter().map(u32::to_string).collect();
        f.write_str(&parts.join("x"))
    }
}

/// `x`-separated cyclic orders: `"3"` is `ℤ_3`, `"2x2"` is `ℤ_2 × ℤ_2`.
impl FromStr for AbelianGroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let orders = s
            .split('x')
            .map(|tok| match tok.parse::<u32>() {
                Ok(o) if o > 0 => Ok(o),
                _ => Err(Error::parse(tok, "expected a positive cyclic order")),
            })
            .collect::<Result<Vec<u32>>>()?;
        AbelianGroupSpec::new(orders)
    }
}

impl Serialize for AbelianGroupSpec {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Cycle type of an element of `G ≀ S_n`: one partition of cycle lengths per
/// group element (the cycle's accumulated color), in element order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColoredCycleType {
    per_color: Vec<Partition>,
}

impl ColoredCycleType {
    pub fn new(per_color: Vec<Partition>) -> Result<Self> {
        if per_color.is_empty() {
            return Err(Error::InvalidArgument(
                "a colored cycle type needs at least one color".into(),
            ));
        }
        Ok(ColoredCycleType { per_color })
    }

    /// All cycles of color `id_G`.
    pub fn zero_colored(mu: &Partition, r: usize) -> Self {
        assert!(r > 0, "r must be positive");
        let mut per_color = vec![Partition::empty(); r];
        per_color[0] = mu.clone();
        ColoredCycleType { per_color }
    }

    pub fn per_color(&self) -> &[Partition] {
        &self.per_color
    }

    pub fn size(&self) -> usize {
        self.per_color.iter().map(Partition::size).sum()
    }

    pub fn is_zero_colored(&self) -> bool {
        self.per_color.iter().skip(1).all(Partition::is_empty)
    }

    /// `(length, color)` for every cycle, color by color.
    pub fn cycles(&self) -> Vec<(usize, usize)> {
        self.per_color
            .iter()
            .enumerate()
            .flat_map(|(g, p)| p.parts().iter().map(move |&len| (len, g)))
            .collect()
    }
}

impl From<RPartitePartition> for ColoredCycleType {
    fn from(t: RPartitePartition) -> Self {
        ColoredCycleType {
            per_color: t.components().to_vec(),
        }
    }
}

impl fmt::Display for ColoredCycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let as_tuple = RPartitePartition::new(self.per_color.clone()).map_err(|_| fmt::Error)?;
        write!(f, "{as_tuple}")
    }
}

impl FromStr for ColoredCycleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.parse::<RPartitePartition>().map(Into::into)
    }
}

type WordMemo = HashMap<(BoundarySequence, usize), BigInt>;

/// Signed count of ways to peel ribbons of the given lengths (last first)
/// from `word`, heights taken mod `modulus`.
fn peel_sum(
    word: &BoundarySequence,
    lengths: &[usize],
    modulus: usize,
    memo: &mut WordMemo,
) -> BigInt {
    let Some((&last, rest)) = lengths.split_last() else {
        return if word.is_empty() {
            BigInt::one()
        } else {
            BigInt::zero()
        };
    };
    let key = (word.clone(), lengths.len());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let bits = word.bits();
    let mut total = BigInt::zero();
    for q in 0..bits.len().saturating_sub(last) {
        if !bits[q] || bits[q + last] {
            continue;
        }
        let height = (q + 1..q + last)
            .filter(|&i| (i - q) % modulus == 0 && !bits[i])
            .count();
        let mut next = bits.to_vec();
        next.swap(q, q + last);
        let sub = peel_sum(
            &BoundarySequence::from_bits(next).canonical(),
            rest,
            modulus,
            memo,
        );
        if height % 2 == 0 {
            total += sub;
        } else {
            total -= sub;
        }
    }
    memo.insert(key, total.clone());
    total
}

/// `χ^λ` at cycle type `mu` (any ordering of the cycle lengths).
pub fn chi_sn(lambda: &Partition, mu: &Composition) -> Result<BigInt> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(format!(
            "|{lambda}| = {} but |{mu}| = {}",
            lambda.size(),
            mu.size()
        )));
    }
    let word = boundary_sequence(lambda, None)?;
    Ok(peel_sum(&word, mu.parts(), 1, &mut HashMap::new()))
}

/// `ψ^λ` of `ℤ_r ≀ S_n` at the zero-colored class of type `mu`, with the
/// character labeled by `λ ∈ Par_r(r·n)` rather than by its `r`-quotient.
pub fn psi_zero_colored(lambda: &Partition, mu: &Composition, r: usize) -> Result<BigInt> {
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
    if !has_empty_core(lambda, r) {
        return Err(Error::NonEmptyCore {
            partition: lambda.clone(),
            r,
            core: r_core(lambda, r)?,
        });
    }
    let word = boundary_sequence(lambda, None)?;
    let lengths = mu.scaled(r);
    Ok(peel_sum(&word, lengths.parts(), r, &mut HashMap::new()))
}

type TupleMemo = HashMap<(Vec<BoundarySequence>, usize), CyclotomicInt>;

struct WreathEvaluator<'a> {
    group: &'a AbelianGroupSpec,
    cycles: &'a [(usize, usize)],
    memo: TupleMemo,
}

impl WreathEvaluator<'_> {
    fn eval(&mut self, words: &[BoundarySequence], remaining: usize) -> CyclotomicInt {
        let l = self.group.exponent();
        if remaining == 0 {
            let value = i32::from(words.iter().all(BoundarySequence::is_empty));
            return CyclotomicInt::from_integer(l, value);
        }
        let key = (words.to_vec(), remaining);
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let (length, color) = self.cycles[remaining - 1];
        let mut total = CyclotomicInt::zero(l);
        for (j, word) in words.iter().enumerate() {
            let bits = word.bits();
            let mut signed = CyclotomicInt::zero(l);
            for q in 0..bits.len().saturating_sub(length) {
                if !bits[q] || bits[q + length] {
                    continue;
                }
                let height = bits[q + 1..q + length].iter().filter(|&&b| !b).count();
                let mut next_bits = bits.to_vec();
                next_bits.swap(q, q + length);
                let mut next = words.to_vec();
                next[j] = BoundarySequence::from_bits(next_bits).canonical();
                let sub = self.eval(&next, remaining - 1);
                signed = if height % 2 == 0 {
                    &signed + &sub
                } else {
                    &signed - &sub
                };
            }
            if !signed.is_zero() {
                total = &total + &(&self.group.theta(j, color) * &signed);
            }
        }
        self.memo.insert(key, total.clone());
        total
    }
}

/// `ψ^𝛌(π)` for `π` whose cycles, in this order, have the given
/// `(length, color)` pairs; colors are element indices of `group`.
pub fn psi_wreath_cycles(
    shape: &RPartitePartition,
    cycles: &[(usize, usize)],
    group: &AbelianGroupSpec,
) -> Result<CyclotomicInt> {
    let r = group.order();
    if shape.arity() != r {
        return Err(Error::InvalidArgument(format!(
            "{shape} has {} components but |G| = {r}",
            shape.arity()
        )));
    }
    if let Some(&(_, color)) = cycles.iter().find(|&&(_, g)| g >= r) {
        return Err(Error::InvalidArgument(format!(
            "color {color} is not an element of a group of order {r}"
        )));
    }
    let n: usize = cycles.iter().map(|&(len, _)| len).sum();
    if shape.total_size() != n {
        return Err(Error::SizeMismatch(format!(
            "|{shape}| = {} but the cycles cover {n} points",
            shape.total_size()
        )));
    }
    let words: Vec<BoundarySequence> = shape
        .components()
        .iter()
        .map(|p| boundary_sequence(p, None))
        .collect::<Result<_>>()?;
    let mut evaluator = WreathEvaluator {
        group,
        cycles,
        memo: HashMap::new(),
    };
    Ok(evaluator.eval(&words, cycles.len()))
}

/// `ψ^𝛌` of `G ≀ S_n` at the class `class`.
pub fn psi_wreath(
    shape: &RPartitePartition,
    class: &ColoredCycleType,
    group: &AbelianGroupSpec,
) -> Result<CyclotomicInt> {
    if class.per_color().len() != group.order() {
        return Err(Error::InvalidArgument(format!(
            "class {class} has {} colors but |G| = {}",
            class.per_color().len(),
            group.order()
        )));
    }
    psi_wreath_cycles(shape, &class.cycles(), group)
}

fn factorial(n: usize) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

/// `∏ i^{m} · m! · r^{m}` over colors and cycle lengths `i` of multiplicity `m`.
pub fn centralizer_order(class: &ColoredCycleType, group: &AbelianGroupSpec) -> BigUint {
    let r = BigUint::from(group.order());
    let mut acc = BigUint::one();
    for p in class.per_color() {
        let mut counts: HashMap<usize, u32> = HashMap::new();
        for &part in p.parts() {
            *counts.entry(part).or_default() += 1;
        }
        for (part, m) in counts {
            acc *= BigUint::from(part).pow(m) * factorial(m as usize) * r.pow(m);
        }
    }
    acc
}

/// `|G|^n · n! / centralizer`.
pub fn class_size(class: &ColoredCycleType, group: &AbelianGroupSpec) -> BigUint {
    let n = class.size();
    let order = BigUint::from(group.order()).pow(n as u32) * factorial(n);
    order / centralizer_order(class, group)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterTable {
    pub group: AbelianGroupSpec,
    pub n: usize,
    pub labels: Vec<RPartitePartition>,
    pub classes: Vec<ColoredCycleType>,
    pub entries: Vec<Vec<CyclotomicInt>>,
    pub class_sizes: Vec<BigUint>,
}

impl CharacterTable {
    pub fn group_order(&self) -> BigUint {
        BigUint::from(self.group.order()).pow(self.n as u32) * factorial(self.n)
    }

    /// `Σ_c |c| · ψ_i(c) · conj(ψ_j(c))`.
    pub fn row_inner_product(&self, i: usize, j: usize) -> CyclotomicInt {
        let l = self.group.exponent();
        self.entries[i]
            .iter()
            .zip(&self.entries[j])
            .zip(&self.class_sizes)
            .fold(CyclotomicInt::zero(l), |acc, ((a, b), size)| {
                let weight = CyclotomicInt::from_integer(l, BigInt::from(size.clone()));
                &acc + &(&weight * &(a * &b.conj()))
            })
    }

    /// Header row of class labels, a `size` row, then one row per character.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        out.push_str("character");
        for c in &self.classes {
            out.push('\t');
            out.push_str(&c.to_string());
        }
        out.push_str("\nsize");
        for s in &self.class_sizes {
            out.push('\t');
            out.push_str(&s.to_string());
        }
        out.push('\n');
        for (label, row) in self.labels.iter().zip(&self.entries) {
            out.push_str(&label.to_string());
            for v in row {
                out.push('\t');
                out.push_str(&v.to_string());
            }
            out.push('\n');
        }
        out
    }

    /// The `ribbonrep.table/1` document. Integers are decimal strings.
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "schema": "ribbonrep.table/1",
            "group": self.group.to_string(),
            "n": self.n,
            "labels": self.labels.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "classes": self.classes.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "class_sizes": self.class_sizes.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "entries": self.entries.iter()
                .map(|row| row.iter().map(ToString::to_string).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }
}

/// The full table of `G ≀ S_n`; rows and columns both follow
/// [`rpartite_partitions`] order. Rows are evaluated in parallel.
pub fn character_table(group: &AbelianGroupSpec, n: usize) -> CharacterTable {
    let labels = rpartite_partitions(group.order(), n);
    let classes: Vec<ColoredCycleType> = labels.iter().cloned().map(Into::into).collect();
    let entries = labels
        .par_iter()
        .map(|label| {
            classes
                .iter()
                .map(|c| psi_wreath(label, c, group).expect("labels and classes are consistent"))
                .collect()
        })
        .collect();
    let class_sizes = classes.iter().map(|c| class_size(c, group)).collect();
    CharacterTable {
        group: group.clone(),
        n,
        labels,
        classes,
        entries,
        class_sizes,
    }
}
