//! Sorted injections: each finite set is placed in the column of a key value
//! `zeta(s)` at the row given by its rank among same-key sets in canonical
//! order. Includes the literal counting algorithm, a single-pass bucketed
//! equivalent, column profiling and subset-sum search.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::io::Write;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::cantor::{pair, Cell};
use crate::combinadics::FinSet;
use crate::nat::Natural;
use crate::setcodec::{set_decode, set_encode, CodecMode};
use crate::{Error, Nat};

/// Largest ground set [`SubsetSumInstance`] accepts.
pub const SUBSET_SUM_LIMIT: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Ground {
    #[default]
    WithZero,
    Positive,
}

impl Ground {
    fn name(self) -> &'static str {
        match self {
            Ground::WithZero => "naturals with zero",
            Ground::Positive => "positive naturals",
        }
    }
}

/// Strictly increasing table `f(start), f(start + 1), ...` enumerating an
/// infinite set up to some horizon.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CharFn {
    start: u64,
    values: Vec<Nat>,
}

impl CharFn {
    pub fn new(start: u64, values: Vec<Nat>) -> Result<Self, Error> {
        if values.is_empty() {
            return Err(Error::InvalidArgument(
                "characteristic function table is empty".into(),
            ));
        }
        if values.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidArgument(
                "characteristic function must be strictly increasing".into(),
            ));
        }
        Ok(CharFn { start, values })
    }

    pub fn from_u64s(start: u64, values: &[u64]) -> Result<Self, Error> {
        Self::new(start, values.iter().map(|v| Nat::from(*v)).collect())
    }

    pub fn start(&self) -> u64 {
        self.start
    }

    pub fn values(&self) -> &[Nat] {
        &self.values
    }

    /// `f(i)` when `i` lies inside the table.
    pub fn get<N: Natural>(&self, i: &N) -> Option<&Nat> {
        let off = i.to_u64()?.checked_sub(self.start)?;
        self.values.get(usize::try_from(off).ok()?)
    }

    /// The image of the table as a finite set.
    pub fn image(&self) -> FinSet<Nat> {
        FinSet::new(self.values.clone()).expect("strictly increasing values are distinct")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum KeyKind {
    Cardinality,
    Sum,
    Product,
    /// Sum of `f` over a set of indices into `f`.
    SumUnderF(CharFn),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SortKey {
    kind: KeyKind,
    ground: Ground,
}

impl SortKey {
    /// Product over a ground containing zero is rejected: every set holding
    /// 0 lands in column 0, which would then be infinite.
    pub fn new(kind: KeyKind, ground: Ground) -> Result<Self, Error> {
        if kind == KeyKind::Product && ground == Ground::WithZero {
            return Err(Error::InfiniteColumn(
                "product over a ground containing 0".into(),
            ));
        }
        Ok(SortKey { kind, ground })
    }

    pub fn cardinality() -> Self {
        SortKey {
            kind: KeyKind::Cardinality,
            ground: Ground::WithZero,
        }
    }

    pub fn sum() -> Self {
        SortKey {
            kind: KeyKind::Sum,
            ground: Ground::WithZero,
        }
    }

    pub fn product() -> Self {
        SortKey {
            kind: KeyKind::Product,
            ground: Ground::Positive,
        }
    }

    pub fn sum_under(f: CharFn) -> Self {
        let ground = if f.start == 0 {
            Ground::WithZero
        } else {
            Ground::Positive
        };
        SortKey {
            kind: KeyKind::SumUnderF(f),
            ground,
        }
    }

    pub fn kind(&self) -> &KeyKind {
        &self.kind
    }

    pub fn ground(&self) -> Ground {
        self.ground
    }

    fn ground_name(&self) -> &'static str {
        match self.kind {
            KeyKind::SumUnderF(_) => "domain of f",
            _ => self.ground.name(),
        }
    }

    fn admits<N: Natural>(&self, s: &FinSet<N>) -> bool {
        if self.ground == Ground::Positive && s.min().is_some_and(|m| m.is_zero()) {
            return false;
        }
        match &self.kind {
            KeyKind::SumUnderF(f) => s.iter().all(|i| f.get(i).is_some()),
            _ => true,
        }
    }

    fn check<N: Natural>(&self, s: &FinSet<N>) -> Result<(), Error> {
        if s.is_empty() {
            return Err(Error::EmptySet);
        }
        if !self.admits(s) {
            return Err(Error::GroundViolation {
                set: s.to_string(),
                ground: self.ground_name(),
            });
        }
        Ok(())
    }

    /// Key value on machine words; `None` when it exceeds `u128`.
    fn value_small<N: Natural>(&self, s: &FinSet<N>) -> Option<u128> {
        match &self.kind {
            KeyKind::Cardinality => Some(s.len() as u128),
            KeyKind::Sum => s
                .iter()
                .try_fold(0u128, |acc, v| acc.checked_add(v.to_u128()?)),
            KeyKind::Product => s
                .iter()
                .try_fold(1u128, |acc, v| acc.checked_mul(v.to_u128()?)),
            KeyKind::SumUnderF(f) => s
                .iter()
                .try_fold(0u128, |acc, i| acc.checked_add(f.get(i)?.to_u128()?)),
        }
    }

    fn value_big<N: Natural>(&self, s: &FinSet<N>) -> Nat {
        match &self.kind {
            KeyKind::Cardinality => Nat::from(s.len()),
            KeyKind::Sum => s.iter().map(|v| v.to_big()).sum(),
            KeyKind::Product => s.iter().map(|v| v.to_big()).product(),
            KeyKind::SumUnderF(f) => s
                .iter()
                .map(|i| f.get(i).expect("checked by admits").clone())
                .sum(),
        }
    }

    fn value<N: Natural>(&self, s: &FinSet<N>) -> Nat {
        self.value_small(s)
            .map_or_else(|| self.value_big(s), Nat::from)
    }
}

impl fmt::Display for SortKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            KeyKind::Cardinality => f.write_str("cardinality"),
            KeyKind::Sum => f.write_str("sum"),
            KeyKind::Product => f.write_str("product"),
            KeyKind::SumUnderF(_) => f.write_str("sum-under-f"),
        }
    }
}

/// `cardinality`, `sum` or `product` with their default grounds.
impl FromStr for SortKey {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "cardinality" => Ok(SortKey::cardinality()),
            "sum" => Ok(SortKey::sum()),
            "product" => Ok(SortKey::product()),
            other => Err(Error::Parse(format!("unknown sort key {other:?}"))),
        }
    }
}

/// The key value: `|s|`, `sum s`, `prod s` or `sum f(s_i)`.
pub fn zeta<N: Natural>(key: &SortKey, s: &FinSet<N>) -> Result<Nat, Error> {
    key.check(s)?;
    Ok(key.value(s))
}

/// Column a set is placed in. Equal to [`zeta`] except for cardinality,
/// whose columns start at `|s| - 1` so that the injection coincides with the
/// canonical set code.
pub fn column<N: Natural>(key: &SortKey, s: &FinSet<N>) -> Result<Nat, Error> {
    let z = zeta(key, s)?;
    Ok(match key.kind {
        KeyKind::Cardinality => z - 1u8,
        _ => z,
    })
}

/// Tests membership of a column without allocating for small values.
struct ColumnMatcher<'k> {
    key: &'k SortKey,
    small: Option<u128>,
    big: Nat,
}

impl<'k> ColumnMatcher<'k> {
    fn new(key: &'k SortKey, value: Nat) -> Self {
        ColumnMatcher {
            key,
            small: value.to_u128(),
            big: value,
        }
    }

    fn matches<N: Natural>(&self, s: &FinSet<N>) -> bool {
        if !self.key.admits(s) {
            return false;
        }
        match self.small {
            Some(t) => self.key.value_small(s) == Some(t),
            None => self.key.value_small(s).is_none() && self.key.value_big(s) == self.big,
        }
    }
}

/// Algorithm 1 as written: walk canonical codes `0..=code(s)`, decode each
/// and count the sets sharing the key value of `s`. The count includes `s`.
pub fn theta_alg1_raw<N: Natural>(key: &SortKey, s: &FinSet<N>) -> Result<Nat, Error> {
    let m = ColumnMatcher::new(key, zeta(key, s)?);
    let last = set_encode(s, CodecMode::Canonical)?;
    let mut count = 0u64;
    let mut k = N::zero();
    loop {
        let t = set_decode(&k, CodecMode::Canonical)?;
        if m.matches(&t) {
            count += 1;
        }
        if k == last {
            return Ok(Nat::from(count));
        }
        k = k + N::one();
    }
}

/// Zero-based row of `s` in its column, via [`theta_alg1_raw`].
pub fn theta_alg1<N: Natural>(key: &SortKey, s: &FinSet<N>) -> Result<Nat, Error> {
    Ok(theta_alg1_raw(key, s)? - 1u8)
}

/// Same value as [`theta_alg1`], from one pass of [`SortedStream`].
pub fn theta_bucketed<N: Natural>(key: &SortKey, s: &FinSet<N>) -> Result<Nat, Error> {
    key.check(s)?;
    let code = set_encode(s, CodecMode::Canonical)?;
    SortedStream::<N>::new(key.clone())
        .find(|e| e.index == code)
        .map(|e| e.cell.theta)
        .ok_or_else(|| {
            Error::InvalidArgument(format!("{s} was not reached by the canonical stream"))
        })
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SortedCell {
    pub key: Nat,
    pub theta: Nat,
    pub code: Nat,
}

impl SortedCell {
    fn new(key: Nat, theta: Nat) -> Self {
        let code = pair(&Cell::new(key.clone(), theta.clone()));
        SortedCell { key, theta, code }
    }
}

pub fn phi_sorted<N: Natural>(key: &SortKey, s: &FinSet<N>) -> Result<SortedCell, Error> {
    let col = column(key, s)?;
    Ok(SortedCell::new(col, theta_bucketed(key, s)?))
}

#[derive(Debug, Clone, PartialEq)]
pub struct SortedEntry<N> {
    /// Canonical code of the set.
    pub index: N,
    pub set: FinSet<N>,
    pub cell: SortedCell,
}

/// Canonical enumeration restricted to the key's ground, with rows assigned
/// by counting per column as sets stream past.
#[derive(Debug, Clone)]
pub struct SortedStream<N> {
    key: SortKey,
    next: N,
    rows: HashMap<Nat, u64>,
}

impl<N: Natural> SortedStream<N> {
    pub fn new(key: SortKey) -> Self {
        SortedStream {
            key,
            next: N::zero(),
            rows: HashMap::new(),
        }
    }
}

impl<N: Natural> Iterator for SortedStream<N> {
    type Item = SortedEntry<N>;

    fn next(&mut self) -> Option<SortedEntry<N>> {
        loop {
            let index = self.next.clone();
            self.next = self.next.clone() + N::one();
            let set = set_decode(&index, CodecMode::Canonical).expect("canonical decode is total");
            if !self.key.admits(&set) {
                continue;
            }
            let col = column(&self.key, &set).expect("admitted sets have a column");
            let row = self.rows.entry(col.clone()).or_insert(0);
            let cell = SortedCell::new(col, Nat::from(*row));
            *row += 1;
            return Some(SortedEntry { index, set, cell });
        }
    }
}

/// Entries for the in-ground sets among canonical codes `0..limit`.
pub fn sorted_prefix<N: Natural>(key: &SortKey, limit: u64) -> Vec<SortedEntry<N>> {
    let bound: Nat = limit.into();
    SortedStream::<N>::new(key.clone())
        .take_while(|e| e.index.to_big() < bound)
        .collect()
}

/// Writes `key,theta,code,set` rows; the set field is comma-joined.
pub fn write_grid_csv<N: Natural, W: Write>(
    entries: &[SortedEntry<N>],
    out: W,
) -> std::io::Result<()> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    w.write_record(["key", "theta", "code", "set"])?;
    for e in entries {
        w.write_record([
            e.cell.key.to_string(),
            e.cell.theta.to_string(),
            e.cell.code.to_string(),
            e.set.to_csv_field(),
        ])?;
    }
    w.flush()
}

/// Number of non-empty ground sets with key value `value`, by exhaustive
/// backtracking. `bound` caps the number of search steps.
pub fn column_height(key: &SortKey, value: &Nat, bound: u64) -> Result<Nat, Error> {
    let mut search = Search { steps: 0, bound };
    let count = match &key.kind {
        KeyKind::Cardinality => {
            return Err(Error::InfiniteColumn(format!("cardinality column {value}")));
        }
        KeyKind::Sum => {
            let v = value.to_u64().ok_or(Error::BoundExceeded(bound))?;
            if v == 0 {
                // only {0}
                u64::from(key.ground == Ground::WithZero)
            } else {
                let positive = search.distinct_sum(v, v)?;
                match key.ground {
                    // every positive set may also take 0
                    Ground::WithZero => 2 * positive,
                    Ground::Positive => positive,
                }
            }
        }
        KeyKind::Product => {
            if value.is_zero() {
                0
            } else if value.is_one() {
                1
            } else {
                // distinct factors above 1, with or without the factor 1
                2 * search.distinct_product(value, value)?
            }
        }
        KeyKind::SumUnderF(f) => search.table_sum(f.values(), f.values().len(), value)?,
    };
    Ok(Nat::from(count))
}

struct Search {
    steps: u64,
    bound: u64,
}

impl Search {
    fn step(&mut self) -> Result<(), Error> {
        self.steps += 1;
        if self.steps > self.bound {
            return Err(Error::BoundExceeded(self.bound));
        }
        Ok(())
    }

    /// Sets of distinct integers in `1..=max` summing to `rest`, the empty
    /// set counted when `rest` is 0.
    fn distinct_sum(&mut self, rest: u64, max: u64) -> Result<u64, Error> {
        self.step()?;
        if rest == 0 {
            return Ok(1);
        }
        let max = max.min(rest);
        if max.saturating_mul(max + 1) / 2 < rest {
            return Ok(0);
        }
        let mut total = 0;
        for top in (1..=max).rev() {
            total += self.distinct_sum(rest - top, top - 1)?;
        }
        Ok(total)
    }

    /// Sets of distinct factors in `2..=max` multiplying to `rest`.
    fn distinct_product(&mut self, rest: &Nat, max: &Nat) -> Result<u64, Error> {
        self.step()?;
        if rest.is_one() {
            return Ok(1);
        }
        let mut total = 0;
        let mut d = Nat::from(2u8);
        let top = rest.min(max).clone();
        while d <= top {
            self.step()?;
            if (rest % &d).is_zero() {
                let below = &d - 1u8;
                total += self.distinct_product(&(rest / &d), &below)?;
            }
            d += 1u8;
        }
        Ok(total)
    }

    /// Non-empty subsets of `values[..len]` summing to `rest`.
    fn table_sum(&mut self, values: &[Nat], len: usize, rest: &Nat) -> Result<u64, Error> {
        let mut total = 0;
        for i in (0..len).rev() {
            self.step()?;
            if values[i] <= *rest {
                let left = rest - &values[i];
                if left.is_zero() {
                    total += 1;
                }
                total += self.table_sum(values, i, &left)?;
            }
        }
        Ok(total)
    }
}

/// For each `n` in `0..=survey_limit`, how many codes `<= n` are realized by
/// the in-ground sets among the first `survey_limit` canonical codes.
pub fn density_profile(key: &SortKey, survey_limit: u64) -> Vec<(u64, u64)> {
    let mut hist: BTreeMap<u64, u64> = BTreeMap::new();
    for e in sorted_prefix::<u64>(key, survey_limit) {
        if let Some(code) = e.cell.code.to_u64().filter(|c| *c <= survey_limit) {
            *hist.entry(code).or_insert(0) += 1;
        }
    }
    let mut acc = 0;
    (0..=survey_limit)
        .map(|n| {
            acc += hist.get(&n).copied().unwrap_or(0);
            (n, acc)
        })
        .collect()
}

/// A finite ground set with its non-empty subsets listed in the canonical
/// order of their index sets, grouped by sum.
#[derive(Debug, Clone)]
pub struct SubsetSumInstance<N> {
    ground: FinSet<N>,
    by_sum: HashMap<N, Vec<u32>>,
}

impl<N: Natural> SubsetSumInstance<N> {
    pub fn new(ground: FinSet<N>) -> Result<Self, Error> {
        let m = ground.len();
        if m > SUBSET_SUM_LIMIT {
            return Err(Error::SizeLimit {
                size: m,
                limit: SUBSET_SUM_LIMIT,
            });
        }
        let mut order: Vec<(u64, u32)> = (1..(1u32 << m))
            .map(|mask| {
                let idx: Vec<u64> = (0..m as u64).filter(|i| mask >> i & 1 == 1).collect();
                let code = set_encode(
                    &FinSet::from_u64s(&idx).expect("distinct"),
                    CodecMode::Canonical,
                )
                .expect("non-empty");
                (code, mask)
            })
            .collect();
        order.sort_unstable();
        let mut by_sum: HashMap<N, Vec<u32>> = HashMap::new();
        for (_, mask) in order {
            let sum = ground
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .fold(N::zero(), |acc, (_, v)| crate::nat::add(&acc, v));
            by_sum.entry(sum).or_default().push(mask);
        }
        Ok(SubsetSumInstance { ground, by_sum })
    }

    pub fn ground(&self) -> &FinSet<N> {
        &self.ground
    }

    pub fn decide(&self, target: &N) -> bool {
        self.by_sum.contains_key(target)
    }

    /// Every witness for `target`, in canonical order.
    pub fn witnesses(&self, target: &N) -> Vec<FinSet<N>> {
        self.by_sum
            .get(target)
            .map_or_else(Vec::new, |ms| ms.iter().map(|m| self.subset(*m)).collect())
    }

    /// The `n`-th witness (1-based), `None` when fewer exist.
    pub fn nth(&self, target: &N, n: usize) -> Result<Option<FinSet<N>>, Error> {
        if n == 0 {
            return Err(Error::InvalidArgument("witness rank starts at 1".into()));
        }
        Ok(self
            .by_sum
            .get(target)
            .and_then(|ms| ms.get(n - 1))
            .map(|m| self.subset(*m)))
    }

    fn subset(&self, mask: u32) -> FinSet<N> {
        let picked = self
            .ground
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, v)| v.clone())
            .collect();
        FinSet::new(picked).expect("subset of a set")
    }
}

/// Whether some non-empty subset of `ground` sums to `target`.
pub fn subset_sum_decide<N: Natural>(ground: &FinSet<N>, target: &N) -> Result<bool, Error> {
    Ok(SubsetSumInstance::new(ground.clone())?.decide(target))
}

pub fn nth_subset_with_sum<N: Natural>(
    ground: &FinSet<N>,
    target: &N,
    n: usize,
) -> Result<Option<FinSet<N>>, Error> {
    SubsetSumInstance::new(ground.clone())?.nth(target, n)
}

impl From<&CharFn> for FinSet<BigUint> {
    fn from(f: &CharFn) -> Self {
        f.image()
    }
}
