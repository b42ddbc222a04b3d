//! Binomial coefficients, the combinatorial number system, and the counting
//! functions for bracketings and set partitions.

use std::fmt;

use crate::nat::{add, mul, nat, Natural};
use crate::Error;

/// A finite set of naturals, stored strictly ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FinSet<N> {
    elements: Vec<N>,
}

impl<N: Natural> FinSet<N> {
    /// Sorts the input; duplicates are rejected rather than merged.
    pub fn new(mut elements: Vec<N>) -> Result<Self, Error> {
        elements.sort();
        if let Some(w) = elements.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateElement(w[0].to_string()));
        }
        Ok(FinSet { elements })
    }

    pub fn empty() -> Self {
        FinSet {
            elements: Vec::new(),
        }
    }

    /// `{0, 1, ..., n-1}`.
    pub fn initial_segment(n: u64) -> Self {
        FinSet {
            elements: (0..n).map(nat).collect(),
        }
    }

    pub(crate) fn from_ascending(elements: Vec<N>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        FinSet { elements }
    }

    pub fn from_u64s(values: &[u64]) -> Result<Self, Error> {
        Self::new(values.iter().map(|&v| nat(v)).collect())
    }

    /// Parses `"3,4,6,7"`, tolerating whitespace and surrounding braces.
    pub fn parse(s: &str) -> Result<Self, Error> {
        let inner = s
            .trim()
            .trim_start_matches('{')
            .trim_end_matches('}')
            .trim();
        if inner.is_empty() {
            return Ok(Self::empty());
        }
        let elements = inner
            .split(',')
            .map(crate::nat::parse_nat)
            .collect::<Result<Vec<N>, _>>()?;
        Self::new(elements)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn as_slice(&self) -> &[N] {
        &self.elements
    }

    pub fn iter(&self) -> std::slice::Iter<'_, N> {
        self.elements.iter()
    }

    pub fn contains(&self, v: &N) -> bool {
        self.elements.binary_search(v).is_ok()
    }

    pub fn max(&self) -> Option<&N> {
        self.elements.last()
    }

    pub fn min(&self) -> Option<&N> {
        self.elements.first()
    }

    /// Adds one to every element (the shift from `N` to `N+`).
    pub fn shift_up(&self) -> Self {
        FinSet {
            elements: self.elements.iter().map(|v| add(v, &N::one())).collect(),
        }
    }

    /// Subtracts one from every element; `None` if the set contains zero.
    pub fn shift_down(&self) -> Option<Self> {
        if self.elements.first().is_some_and(|v| v.is_zero()) {
            return None;
        }
        Some(FinSet {
            elements: self.elements.iter().map(|v| v.clone() - N::one()).collect(),
        })
    }

    /// Comma-joined ascending elements, e.g. `0,3,5`.
    pub fn to_csv_field(&self) -> String {
        let parts: Vec<String> = self.elements.iter().map(|v| v.to_string()).collect();
        parts.join(",")
    }
}

impl<N: Natural> fmt::Display for FinSet<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.to_csv_field())
    }
}

impl<'a, N> IntoIterator for &'a FinSet<N> {
    type Item = &'a N;
    type IntoIter = std::slice::Iter<'a, N>;

    fn into_iter(self) -> Self::IntoIter {
        self.elements.iter()
    }
}

/// Exact `C(n, k)`; zero when `n < k`.
pub fn binom<N: Natural>(n: &N, k: &N) -> N {
    binom_capped(n, k, None).expect("uncapped binomial always has a value")
}

/// `C(n, k)` if it does not exceed `cap`, otherwise `None`.
///
/// The multiplicative recurrence runs over `min(k, n-k)` steps, where the
/// partial products `C(n, i)` are non-decreasing, so crossing the cap at
/// any step proves the final value exceeds it. Fixed-width overflow is
/// treated the same way when a cap is given.
fn binom_capped<N: Natural>(n: &N, k: &N, cap: Option<&N>) -> Option<N> {
    if n < k {
        return Some(N::zero());
    }
    let comp = n.clone() - k.clone();
    let steps = if comp < *k { comp } else { k.clone() };
    let mut r = N::one();
    let mut i = N::zero();
    while i < steps {
        let factor = n.clone() - i.clone();
        let i1 = add(&i, &N::one());
        // r * factor is divisible by i1; split the division to keep operands small
        let g = r.gcd(&i1);
        let next = match (r.clone() / g.clone()).checked_mul(&(factor / (i1.clone() / g))) {
            Some(v) => v,
            None if cap.is_some() => return None,
            None => panic!("binomial overflows the scalar type"),
        };
        if cap.is_some_and(|c| next > *c) {
            return None;
        }
        r = next;
        i = i1;
    }
    Some(r)
}

/// Index of `s` in the combinatorial number system of order `|s|`:
/// the sum of `C(s_i, i)` with `s_1 < s_2 < ... < s_k`.
pub fn sigma_encode<N: Natural>(s: &FinSet<N>) -> Result<N, Error> {
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    Ok(sigma_raw(s.as_slice()))
}

pub(crate) fn sigma_raw<N: Natural>(ascending: &[N]) -> N {
    let mut total = N::zero();
    let mut i = N::zero();
    for v in ascending {
        i = add(&i, &N::one());
        total = add(&total, &binom(v, &i));
    }
    total
}

/// The `k`-set whose combinatorial index is `idx`.
///
/// Greedy: for `j = k, k-1, ..., 1` take the largest `m` with
/// `C(m, j) <= remainder` and subtract.
pub fn sigma_decode<N: Natural>(k: usize, idx: &N) -> Result<FinSet<N>, Error> {
    if k == 0 {
        return Err(Error::ZeroCardinality);
    }
    let mut rem = idx.clone();
    let mut out = Vec::with_capacity(k);
    let mut upper: Option<N> = None;
    for j in (1..=k as u64).rev() {
        let jn: N = nat(j);
        let m = largest_within(&jn, &rem, upper.as_ref());
        rem = rem - binom(&m, &jn);
        upper = Some(m.clone());
        out.push(m);
    }
    debug_assert!(rem.is_zero());
    out.reverse();
    Ok(FinSet::from_ascending(out))
}

/// Largest `m` with `C(m, j) <= rem`, with `m < upper` guaranteed by the
/// strict ordering of the decoded elements.
fn largest_within<N: Natural>(j: &N, rem: &N, upper: Option<&N>) -> N {
    let one = N::one();
    if *j == one {
        return rem.clone();
    }
    // C(j-1, j) = 0 is always admissible; walk upward incrementally for a few
    // steps since decoded elements usually sit just above their rank.
    let mut m = j.clone() - one.clone();
    let mut value = N::zero();
    for _ in 0..48 {
        let next_m = add(&m, &one);
        if upper.is_some_and(|u| next_m >= *u) {
            return m;
        }
        // C(m+1, j) = C(m, j) * (m+1) / (m+1-j), seeded by C(j, j) = 1
        let next = if value.is_zero() {
            one.clone()
        } else {
            match value.checked_mul(&next_m) {
                Some(p) => p / (next_m.clone() - j.clone()),
                None => break,
            }
        };
        if next > *rem {
            return m;
        }
        m = next_m;
        value = next;
    }
    // exponential then binary search on the monotone map m -> C(m, j)
    let mut lo = m;
    let mut step = one.clone();
    let mut hi = loop {
        let probe = add(&lo, &step);
        let capped = upper.is_some_and(|u| probe >= *u);
        let probe = if capped {
            upper.unwrap().clone()
        } else {
            probe
        };
        if capped || binom_capped(&probe, j, Some(rem)).is_none() {
            break probe;
        }
        lo = probe;
        step = mul(&step, &nat(2));
    };
    // invariant: C(lo, j) <= rem, and hi is excluded
    while add(&lo, &one) < hi {
        let mid = add(&lo, &((hi.clone() - lo.clone()) / nat(2)));
        if binom_capped(&mid, j, Some(rem)).is_some() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Catalan number `C(2n, n) / (n + 1)`.
pub fn catalan<N: Natural>(n: u64) -> N {
    let nn: N = nat(n);
    binom(&nat(2 * n), &nn) / nat(n + 1)
}

/// Stirling number of the second kind via the recurrence
/// `S(n, k) = k S(n-1, k) + S(n-1, k-1)`.
pub fn stirling2<N: Natural>(n: u64, k: u64) -> N {
    if k > n {
        return N::zero();
    }
    let (n, k) = (n as usize, k as usize);
    let mut row: Vec<N> = vec![N::zero(); k + 1];
    row[0] = N::one();
    for i in 1..=n {
        let top = i.min(k);
        for j in (1..=top).rev() {
            row[j] = add(&mul(&nat(j as u64), &row[j]), &row[j - 1]);
        }
        row[0] = N::zero();
    }
    row[k].clone()
}

/// Stirling number of the second kind by the alternating sum
/// `(1/k!) sum_i (-1)^i C(k, i) (k - i)^n`; positive and negative terms are
/// accumulated apart so the arithmetic stays unsigned.
pub fn stirling2_explicit<N: Natural>(n: u64, k: u64) -> N {
    let kn: N = nat(k);
    let mut pos = N::zero();
    let mut neg = N::zero();
    for i in 0..=k {
        let term = mul(
            &binom(&kn, &nat(i)),
            &num_traits::pow(nat::<N>(k - i), n as usize),
        );
        if i % 2 == 0 {
            pos = add(&pos, &term);
        } else {
            neg = add(&neg, &term);
        }
    }
    let fact = (1..=k).fold(N::one(), |acc, v| mul(&acc, &nat(v)));
    (pos - neg) / fact
}

/// Bell number: total count of partitions of an `n`-set.
pub fn bell<N: Natural>(n: u64) -> N {
    (0..=n).fold(N::zero(), |acc, k| add(&acc, &stirling2(n, k)))
}

/// Structural variants of a binary operator applied to `n` operands.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OperatorLaws {
    /// Every ordering and every bracketing is a distinct computation.
    NonCommNonAssoc,
    /// No closed form is known; reports the Bell-number lower bound only.
    CommNonAssocLowerBound,
    /// All computations coincide.
    CommAssoc,
}

/// Number of distinct computations over `n` operands, `n >= 1`.
pub fn computation_count<N: Natural>(n: u64, laws: OperatorLaws) -> Result<N, Error> {
    if n == 0 {
        return Err(Error::ZeroCardinality);
    }
    Ok(match laws {
        OperatorLaws::NonCommNonAssoc => {
            let fact = (1..=n).fold(N::one(), |acc, v| mul(&acc, &nat(v)));
            mul(&fact, &catalan(n - 1))
        }
        OperatorLaws::CommNonAssocLowerBound => bell(n),
        OperatorLaws::CommAssoc => N::one(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;
    use proptest::prelude::*;

    fn set(v: &[u64]) -> FinSet<u64> {
        FinSet::from_u64s(v).unwrap()
    }

    #[test]
    fn binom_examples() {
        assert_eq!(binom(&11u64, &6), 462);
        assert_eq!(binom(&0u64, &1), 0);
        assert_eq!(binom(&5u64, &0), 1);
        assert_eq!(
            binom(&BigUint::from(100u8), &BigUint::from(50u8)).to_string(),
            "100891344545564193334812497256"
        );
    }

    #[test]
    fn binom_matches_pascal_triangle() {
        let mut row = vec![1u64];
        for n in 0u64..40 {
            for (k, v) in row.iter().enumerate() {
                assert_eq!(binom(&n, &(k as u64)), *v);
            }
            assert_eq!(binom(&n, &(n + 1)), 0);
            let mut next = vec![1u64; row.len() + 1];
            for k in 1..row.len() {
                next[k] = row[k - 1] + row[k];
            }
            row = next;
        }
    }

    #[test]
    fn capped_binom_stops_at_cap() {
        assert_eq!(binom_capped(&10u64, &3, Some(&120)), Some(120));
        assert_eq!(binom_capped(&10u64, &3, Some(&119)), None);
        // would overflow u64 entirely
        assert_eq!(binom_capped(&200u64, &100, Some(&u64::MAX)), None);
    }

    #[test]
    fn sigma_encode_examples() {
        assert_eq!(sigma_encode(&set(&[1, 4, 6, 8, 10, 11])).unwrap(), 811);
        assert_eq!(sigma_encode(&set(&[0, 1])).unwrap(), 0);
        assert_eq!(sigma_encode(&set(&[0, 3])).unwrap(), 3);
        assert_eq!(sigma_encode(&FinSet::<u64>::empty()), Err(Error::EmptySet));
    }

    #[test]
    fn sigma_decode_examples() {
        assert_eq!(
            sigma_decode(6, &811u64).unwrap(),
            set(&[1, 4, 6, 8, 10, 11])
        );
        assert_eq!(sigma_decode(2, &2u64).unwrap(), set(&[1, 2]));
        assert_eq!(sigma_decode(1, &12345u64).unwrap(), set(&[12345]));
        assert_eq!(sigma_decode(0, &0u64), Err(Error::ZeroCardinality));
    }

    #[test]
    fn pairs_in_lexicographic_order() {
        // {1,0}, {2,0}, {2,1}, {3,0}
        let got: Vec<FinSet<u64>> = (0u64..4).map(|i| sigma_decode(2, &i).unwrap()).collect();
        assert_eq!(
            got,
            vec![set(&[0, 1]), set(&[0, 2]), set(&[1, 2]), set(&[0, 3])]
        );
    }

    #[test]
    fn decode_uses_binary_search_for_sparse_sets() {
        let s = FinSet::<u128>::from_u64s(&[3, 1_000_000, 2_000_000_000]).unwrap();
        let idx = sigma_encode(&s).unwrap();
        assert_eq!(sigma_decode(3, &idx).unwrap(), s);
        let big = FinSet::new(vec![
            BigUint::from(7u8),
            BigUint::from(10u8).pow(30),
            BigUint::from(10u8).pow(40) + 3u8,
        ])
        .unwrap();
        let idx = sigma_encode(&big).unwrap();
        assert_eq!(sigma_decode(3, &idx).unwrap(), big);
    }

    #[test]
    fn exhaustive_round_trip_over_small_universe() {
        for mask in 1u32..(1 << 13) {
            if mask.count_ones() > 6 {
                continue;
            }
            let elems: Vec<u64> = (0..13).filter(|b| mask >> b & 1 == 1).collect();
            let s = set(&elems);
            let idx = sigma_encode(&s).unwrap();
            assert_eq!(sigma_decode(s.len(), &idx).unwrap(), s);
        }
    }

    #[test]
    fn encode_is_monotone_in_colex_order() {
        // descending-sorted tuples compared lexicographically
        for k in 1..=4usize {
            let mut sets: Vec<Vec<u64>> = Vec::new();
            for mask in 1u32..(1 << 10) {
                if mask.count_ones() as usize == k {
                    let mut v: Vec<u64> = (0..10).filter(|b| mask >> b & 1 == 1).collect();
                    v.reverse();
                    sets.push(v);
                }
            }
            sets.sort();
            let idx: Vec<u64> = sets
                .iter()
                .map(|d| sigma_encode(&FinSet::from_u64s(d).unwrap()).unwrap())
                .collect();
            assert!(idx.windows(2).all(|w| w[0] < w[1]), "k = {k}");
            assert_eq!(idx[0], 0);
        }
    }

    #[test]
    fn catalan_values() {
        let got: Vec<u64> = (0..10).map(catalan).collect();
        assert_eq!(got, vec![1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862]);
    }

    #[test]
    fn stirling_and_bell_values() {
        assert_eq!(stirling2::<u64>(4, 2), 7);
        assert_eq!(stirling2::<u64>(3, 1), 1);
        assert_eq!(stirling2::<u64>(0, 0), 1);
        assert_eq!(stirling2::<u64>(5, 0), 0);
        assert_eq!(stirling2::<u64>(3, 4), 0);
        for n in 0..12 {
            assert_eq!(stirling2::<u64>(n, n), 1);
        }
        assert_eq!(bell::<u64>(0), 1);
        assert_eq!(bell::<u64>(3), 5);
        assert_eq!(bell::<u64>(5), 52);
    }

    #[test]
    fn stirling_routes_agree() {
        for n in 0..=10 {
            for k in 0..=n {
                assert_eq!(
                    stirling2::<u64>(n, k),
                    stirling2_explicit::<u64>(n, k),
                    "S({n},{k})"
                );
            }
        }
    }

    #[test]
    fn computation_counts() {
        use OperatorLaws::*;
        assert_eq!(computation_count::<u64>(3, NonCommNonAssoc).unwrap(), 12);
        assert_eq!(computation_count::<u64>(4, NonCommNonAssoc).unwrap(), 120);
        assert_eq!(computation_count::<u64>(7, CommAssoc).unwrap(), 1);
        assert_eq!(
            computation_count::<u64>(5, CommNonAssocLowerBound).unwrap(),
            52
        );
        assert!(computation_count::<u64>(0, CommAssoc).is_err());
    }

    #[test]
    fn bell_falls_short_of_powers_of_two_at_four() {
        // B_4 = 15 < 16, so the chain only starts at n = 5
        assert_eq!(bell::<u64>(4), 15);
        assert!(bell::<u64>(4) < 1 << 4);
    }

    #[test]
    fn counting_chain() {
        for n in 5..=8u64 {
            let a: BigUint = computation_count(n, OperatorLaws::NonCommNonAssoc).unwrap();
            let b: BigUint = bell(n);
            let c = BigUint::from(1u8) << n;
            assert!(a > b && b > c && c > BigUint::from(1u8), "n = {n}");
        }
    }

    #[test]
    fn parse_and_display() {
        let s = FinSet::<u64>::parse("{10, 0,3}").unwrap();
        assert_eq!(s.as_slice(), &[0, 3, 10]);
        assert_eq!(s.to_string(), "{0,3,10}");
        assert!(FinSet::<u64>::parse("1,1").is_err());
        assert!(FinSet::<u64>::parse("{}").unwrap().is_empty());
    }

    proptest! {
        #[test]
        fn decode_inverts_encode(k in 1usize..8, idx in 0u64..1_000_000_000) {
            let s = sigma_decode(k, &idx).unwrap();
            prop_assert_eq!(s.len(), k);
            prop_assert_eq!(sigma_encode(&s).unwrap(), idx);
        }
    }
}
