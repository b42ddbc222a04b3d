//! Desk-scale invariant checks, each against an independent brute-force
//! oracle. Used by the `verify` command.

use std::collections::HashSet;

use crate::calculus::{delta_spectrum, DeltaMode, Op};
use crate::cantor::{pair, unpair, Cell};
use crate::combinadics::{bell, sigma_decode, sigma_encode, stirling2, FinSet};
use crate::elastic::{chain_backward, chain_forward, elastic_apply, elastic_invert, ElasticSpec};
use crate::setcodec::{set_decode, set_encode, CodecMode};
use crate::sorted::{column_height, sorted_prefix, theta_alg1, SortKey, SubsetSumInstance};
use crate::Nat;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn from(name: &'static str, outcome: Result<String, String>) -> Self {
        match outcome {
            Ok(detail) => Check {
                name,
                passed: true,
                detail,
            },
            Err(detail) => Check {
                name,
                passed: false,
                detail,
            },
        }
    }
}

pub fn run_all() -> Vec<Check> {
    vec![
        Check::from("pairing-round-trip", pairing_round_trip()),
        Check::from("counter-diagonals", counter_diagonals()),
        Check::from("sigma-round-trip", sigma_round_trip()),
        Check::from("set-codec-bijection", set_codec_bijection()),
        Check::from("appendix-example", appendix_example()),
        Check::from("partition-counts", partition_counts()),
        Check::from("addition-telescopes", addition_telescopes()),
        Check::from("elastic-constant-bijection", elastic_constant_bijection()),
        Check::from("elastic-linear-gaps", elastic_linear_gaps()),
        Check::from("sorted-theta-agreement", sorted_theta_agreement()),
        Check::from("sum-column-heights", sum_column_heights()),
        Check::from("subset-sum-oracle", subset_sum_oracle()),
    ]
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn pairing_round_trip() -> Result<String, String> {
    for x in 0..200u64 {
        for y in 0..200u64 {
            let c = Cell::new(x, y);
            ensure(unpair(&pair(&c)) == c, || {
                format!("unpair(pair{c}) differs")
            })?;
        }
    }
    for n in 0..50_000u64 {
        ensure(pair(&unpair(&n)) == n, || {
            format!("pair(unpair({n})) differs")
        })?;
    }
    Ok("x, y < 200 and n < 50000".into())
}

fn counter_diagonals() -> Result<String, String> {
    let mut expect = 0u64;
    for w in 0..200u64 {
        for y in 0..=w {
            let code = pair(&Cell::new(w - y, y));
            ensure(code == expect, || {
                format!("cell ({}, {y}) has code {code}, expected {expect}", w - y)
            })?;
            expect += 1;
        }
    }
    Ok("diagonals w < 200 are contiguous".into())
}

fn sigma_round_trip() -> Result<String, String> {
    let mut seen = 0;
    for mask in 1u32..1 << 12 {
        let elems: Vec<u64> = (0..12).filter(|i| mask >> i & 1 == 1).collect();
        let s = FinSet::from_u64s(&elems).map_err(|e| e.to_string())?;
        let code: u64 = sigma_encode(&s).map_err(|e| e.to_string())?;
        let back = sigma_decode(s.len(), &code).map_err(|e| e.to_string())?;
        ensure(back == s, || format!("{s} -> {code} -> {back}"))?;
        seen += 1;
    }
    Ok(format!("{seen} subsets of 0..12"))
}

fn set_codec_bijection() -> Result<String, String> {
    for n in 0..20_000u64 {
        let s = set_decode(&n, CodecMode::Canonical).map_err(|e| e.to_string())?;
        let back = set_encode(&s, CodecMode::Canonical).map_err(|e| e.to_string())?;
        ensure(back == n, || format!("{n} -> {s} -> {back}"))?;
    }
    Ok("canonical codes < 20000".into())
}

fn appendix_example() -> Result<String, String> {
    let s = FinSet::<u64>::from_u64s(&[0, 3, 5, 7, 9, 10]).map_err(|e| e.to_string())?;
    let code = set_encode(&s, CodecMode::Appendix).map_err(|e| e.to_string())?;
    ensure(code == 334_964, || format!("encoded to {code}"))?;
    let back = set_decode(&code, CodecMode::Appendix).map_err(|e| e.to_string())?;
    ensure(back == s, || format!("decoded to {back}"))?;
    Ok(format!("{s} <-> {code}"))
}

/// Set partitions of `0..n` grouped by block count, via restricted growth strings.
fn partitions_by_blocks(n: usize) -> Vec<u64> {
    let mut counts = vec![0u64; n + 1];
    let mut rgs = vec![0usize; n];
    fn walk(i: usize, blocks: usize, rgs: &mut Vec<usize>, counts: &mut Vec<u64>) {
        if i == rgs.len() {
            counts[blocks] += 1;
            return;
        }
        for b in 0..=blocks {
            rgs[i] = b;
            walk(i + 1, blocks.max(b + 1), rgs, counts);
        }
    }
    if n == 0 {
        counts[0] = 1;
    } else {
        walk(0, 0, &mut rgs, &mut counts);
    }
    counts
}

fn partition_counts() -> Result<String, String> {
    for n in 0..=8u64 {
        let brute = partitions_by_blocks(n as usize);
        for (k, want) in brute.iter().enumerate() {
            let got: u64 = stirling2(n, k as u64);
            ensure(got == *want, || {
                format!("S({n}, {k}) = {got}, enumeration gives {want}")
            })?;
        }
        let b: u64 = bell(n);
        ensure(b == brute.iter().sum::<u64>(), || format!("B({n}) = {b}"))?;
    }
    Ok("n <= 8".into())
}

fn addition_telescopes() -> Result<String, String> {
    let leaves = [2u64, 47, 53, 98];
    let s = delta_spectrum(&leaves, Op::Add, DeltaMode::TwoArg).map_err(|e| e.to_string())?;
    let expect = 200f64.log2() - leaves.iter().map(|v| (*v as f64).log2()).sum::<f64>();
    ensure(
        s.lines.len() == 1 && (s.lines[0].total - expect).abs() < 1e-9,
        || format!("{:?}", s.lines),
    )?;
    Ok(format!("{} trees, total {:.6}", s.tree_count, expect))
}

fn elastic_constant_bijection() -> Result<String, String> {
    for c in [2u64, 3, 100] {
        let spec = ElasticSpec::Constant(c);
        for n in 0..5000u64 {
            let back =
                chain_backward(&spec, &chain_forward(&spec, &n)).map_err(|e| e.to_string())?;
            ensure(back == n, || format!("c = {c}: {n} -> {back}"))?;
        }
    }
    Ok("c in {2, 3, 100}, n < 5000".into())
}

fn elastic_linear_gaps() -> Result<String, String> {
    let spec = ElasticSpec::<u64>::linear();
    let mut hit = HashSet::new();
    for x in 0..=32u64 {
        for y in 0..=32u64 {
            hit.insert(elastic_apply(&spec, &Cell::new(x, y)).x);
        }
    }
    for col in 0..=32u64 {
        let inv = elastic_invert(&spec, &Cell::new(col, 0)).is_ok();
        ensure(inv == hit.contains(&col), || {
            format!("column {col}: invert {inv}, forward image {}", !inv)
        })?;
    }
    Ok(format!(
        "{} of 33 columns occupied",
        (0..=32u64).filter(|c| hit.contains(c)).count()
    ))
}

fn sorted_theta_agreement() -> Result<String, String> {
    for key in [SortKey::sum(), SortKey::product()] {
        for e in sorted_prefix::<u64>(&key, 600) {
            let t = theta_alg1(&key, &e.set).map_err(|err| err.to_string())?;
            ensure(t == e.cell.theta, || {
                format!("{key} {}: {t} vs {}", e.set, e.cell.theta)
            })?;
        }
    }
    Ok("sum and product, codes < 600".into())
}

/// Partitions of `n` into distinct positive parts, by 0/1 knapsack.
fn distinct_partitions(n: usize) -> Vec<u64> {
    let mut q = vec![0u64; n + 1];
    q[0] = 1;
    for part in 1..=n {
        for t in (part..=n).rev() {
            q[t] += q[t - part];
        }
    }
    q
}

fn sum_column_heights() -> Result<String, String> {
    let q = distinct_partitions(30);
    for v in 1..=30u64 {
        let h =
            column_height(&SortKey::sum(), &Nat::from(v), 10_000_000).map_err(|e| e.to_string())?;
        ensure(h == Nat::from(2 * q[v as usize]), || {
            format!("height({v}) = {h}, expected {}", 2 * q[v as usize])
        })?;
    }
    Ok("1 <= n <= 30".into())
}

fn subset_sum_oracle() -> Result<String, String> {
    let ground = [3u64, 4, 6, 7, 11, 15, 22, 31];
    let inst = SubsetSumInstance::new(FinSet::from_u64s(&ground).map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    let total: u64 = ground.iter().sum();
    for target in 0..=total + 1 {
        let brute = (1u32..1 << ground.len()).any(|m| {
            ground
                .iter()
                .enumerate()
                .filter(|(i, _)| m >> i & 1 == 1)
                .map(|(_, v)| v)
                .sum::<u64>()
                == target
        });
        ensure(inst.decide(&target) == brute, || format!("target {target}"))?;
    }
    Ok(format!("all targets over {ground:?}"))
}
