//! Exhaustive checks of `ψ^λ_{(μ,∅,…,∅)} = sign_r(λ) · χ^λ_{rμ}`.
//!
//! Sweeps are sharded by `λ` and run on rayon; shard results are collected
//! in enumeration order, so report contents never depend on the schedule.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use crate::characters::{
    chi_sn, psi_wreath, psi_wreath_cycles, psi_zero_colored, AbelianGroupSpec, ColoredCycleType,
};
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Composition, Partition};
use crate::quotient::{enumerate_par_r, phi_r, r_quotient, rpartite_partitions};
use crate::signs::sign_r;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Also check every distinct reordering of each `μ`.
    pub compositions: bool,
    /// Worker threads; `None` uses the global rayon pool.
    pub jobs: Option<usize>,
}

/// A pair where the identity fails, with everything needed to reproduce it.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Failure {
    pub lambda: Partition,
    pub mu: Composition,
    pub psi: String,
    pub chi: String,
    pub sign: i8,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub schema: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group: Option<String>,
    /// Set by the degree sweep only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub check: Option<&'static str>,
    pub n: usize,
    pub pairs_checked: usize,
    pub failures: Vec<Failure>,
    /// For abelian sweeps: whether the outcome equals the cyclic sweep of the same order.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matches_cyclic: Option<bool>,
    #[serde(rename = "elapsed_ms", serialize_with = "as_millis")]
    pub elapsed: Duration,
}

fn as_millis<S: Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_u64(d.as_millis() as u64)
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.matches_cyclic != Some(false)
    }

    /// What a sweep found, ignoring timing and how the group was named.
    pub fn outcome(&self) -> (usize, usize, BTreeSet<Failure>) {
        (
            self.n,
            self.pairs_checked,
            self.failures.iter().cloned().collect(),
        )
    }

    fn new(n: usize) -> Self {
        VerificationReport {
            schema: "ribbonrep.verify/1",
            r: None,
            group: None,
            check: None,
            n,
            pairs_checked: 0,
            failures: Vec::new(),
            matches_cyclic: None,
            elapsed: Duration::ZERO,
        }
    }
}

fn run_sharded<T, F>(
    jobs: Option<usize>,
    shards: &[T],
    work: F,
) -> Result<Vec<(usize, Vec<Failure>)>>
where
    T: Sync,
    F: Fn(&T) -> Result<(usize, Vec<Failure>)> + Sync + Send,
{
    use rayon::prelude::*;
    let sweep = || shards.par_iter().map(&work).collect::<Result<Vec<_>>>();
    match jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .map_err(|e| Error::InvalidArgument(format!("cannot start {j} workers: {e}")))?
            .install(sweep),
        None => sweep(),
    }
}

fn merge(report: &mut VerificationReport, shards: Vec<(usize, Vec<Failure>)>) {
    for (pairs, failures) in shards {
        report.pairs_checked += pairs;
        report.failures.extend(failures);
    }
}

/// Distinct orderings of `mu`, the partition itself first.
pub fn orderings(mu: &Partition) -> Vec<Composition> {
    let mut parts: Vec<usize> = mu.parts().to_vec();
    parts.sort_unstable();
    let mut out = Vec::new();
    loop {
        out.push(Composition::new(parts.iter().rev().copied().collect()).expect("positive parts"));
        // next lexicographic permutation of the ascending-sorted parts
        let Some(i) = (1..parts.len()).rev().find(|&i| parts[i - 1] < parts[i]) else {
            break;
        };
        let j = (i..parts.len())
            .rev()
            .find(|&j| parts[j] > parts[i - 1])
            .expect("pivot exists");
        parts.swap(i - 1, j);
        parts[i..].reverse();
    }
    out
}

fn class_representatives(n: usize, opts: &VerifyOptions) -> Vec<Composition> {
    partitions_of(n)
        .iter()
        .flat_map(|mu| {
            if opts.compositions {
                orderings(mu)
            } else {
                vec![Composition::from(mu)]
            }
        })
        .collect()
}

fn integer_failure(
    lambda: &Partition,
    mu: &Composition,
    psi: String,
    chi: &BigInt,
    sign: i8,
) -> Failure {
    Failure {
        lambda: lambda.clone(),
        mu: mu.clone(),
        psi,
        chi: chi.to_string(),
        sign,
    }
}

/// Checks every `λ ∈ Par_r(rn)` against every `μ ⊢ n`, with `ψ` from the
/// boundary peeling algorithm.
pub fn verify_identity(r: usize, n: usize, opts: &VerifyOptions) -> Result<VerificationReport> {
    if r == 0 {
        return Err(Error::InvalidArgument("r must be positive".into()));
    }
    let start = Instant::now();
    let mus = class_representatives(n, opts);
    let lambdas = enumerate_par_r(r, n);
    let shards = run_sharded(opts.jobs, &lambdas, |lambda| {
        let sign = sign_r(lambda, r)?;
        let mut failures = Vec::new();
        for mu in &mus {
            let psi = psi_zero_colored(lambda, mu, r)?;
            let chi = chi_sn(lambda, &mu.scaled(r))?;
            if psi != BigInt::from(sign) * &chi {
                failures.push(integer_failure(lambda, mu, psi.to_string(), &chi, sign));
            }
        }
        Ok((mus.len(), failures))
    })?;
    let mut report = VerificationReport::new(n);
    report.r = Some(r);
    merge(&mut report, shards);
    report.elapsed = start.elapsed();
    Ok(report)
}

/// The same identity for `G ≀ S_n`, `ψ` evaluated by the colored rule on the
/// `r`-partite label and compared through `λ = φ_r(label)`. A pair also fails
/// if `ψ` disagrees with the boundary peeling value for `λ`.
pub fn verify_identity_abelian(
    group: &AbelianGroupSpec,
    n: usize,
    opts: &VerifyOptions,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let r = group.order();
    let mus = class_representatives(n, opts);
    let labels = rpartite_partitions(r, n);
    let shards = run_sharded(opts.jobs, &labels, |label| {
        let lambda = phi_r(label);
        let sign = sign_r(&lambda, r)?;
        let mut failures = Vec::new();
        for mu in &mus {
            let cycles: Vec<(usize, usize)> = mu.parts().iter().map(|&len| (len, 0)).collect();
            let psi = psi_wreath_cycles(label, &cycles, group)?;
            let chi = chi_sn(&lambda, &mu.scaled(r))?;
            let boundary = psi_zero_colored(&lambda, mu, r)?;
            let ok = psi
                .as_integer()
                .is_some_and(|v| v == BigInt::from(sign) * &chi && v == boundary);
            if !ok {
                failures.push(integer_failure(&lambda, mu, psi.to_string(), &chi, sign));
            }
        }
        Ok((mus.len(), failures))
    })?;
    let mut report = VerificationReport::new(n);
    report.group = Some(group.to_string());
    merge(&mut report, shards);
    report.failures.sort();
    let mut cyclic = verify_identity(r, n, opts)?;
    cyclic.failures.sort();
    report.matches_cyclic = Some(report.outcome() == cyclic.outcome());
    report.elapsed = start.elapsed();
    Ok(report)
}

/// For every `λ ∈ Par_2(2n)`: the degree of the `B_n` character equals
/// `sign_2(λ) · χ^λ_{(2^n)}`, and is positive.
pub fn verify_degree_fact(n: usize, opts: &VerifyOptions) -> Result<VerificationReport> {
    let start = Instant::now();
    let z2 = AbelianGroupSpec::cyclic(2);
    let identity = ColoredCycleType::zero_colored(&Partition::new(vec![1; n])?, 2);
    let longest = Composition::new(vec![2; n])?;
    let lambdas = enumerate_par_r(2, n);
    let shards = run_sharded(opts.jobs, &lambdas, |lambda| {
        let label = r_quotient(lambda, 2)?;
        let degree = psi_wreath(&label, &identity, &z2)?;
        let chi = chi_sn(lambda, &longest)?;
        let sign = sign_r(lambda, 2)?;
        let expected = BigInt::from(sign) * &chi;
        let ok = degree
            .as_integer()
            .is_some_and(|d| d > BigInt::from(0) && d == expected);
        let failures = if ok {
            Vec::new()
        } else {
            vec![integer_failure(
                lambda,
                &longest,
                degree.to_string(),
                &chi,
                sign,
            )]
        };
        Ok((1, failures))
    })?;
    let mut report = VerificationReport::new(n);
    report.r = Some(2);
    report.check = Some("degree");
    merge(&mut report, shards);
    report.elapsed = start.elapsed();
    Ok(report)
}
