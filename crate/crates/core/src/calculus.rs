//! Information efficiency of arithmetic: per-operation deltas, whole
//! computation trees, and the spectrum of totals over every bracketing of a
//! multiset.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::cantor::info;
use crate::nat::{add, mul, Bits, Natural};
use crate::Error;

/// Largest multiset [`delta_spectrum`] will enumerate exhaustively.
pub const SPECTRUM_LIMIT: usize = 8;

/// Tolerance under which two spectrum totals count as the same value.
pub const SPECTRUM_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Op {
    Add,
    Mul,
}

impl Op {
    pub fn apply<N: Natural>(self, a: &N, b: &N) -> N {
        match self {
            Op::Add => add(a, b),
            Op::Mul => mul(a, b),
        }
    }

    fn symbol(self) -> char {
        match self {
            Op::Add => '+',
            Op::Mul => '*',
        }
    }
}

impl FromStr for Op {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "add" | "+" => Ok(Op::Add),
            "mul" | "*" => Ok(Op::Mul),
            other => Err(Error::Parse(format!("unknown operator {other:?}"))),
        }
    }
}

/// Whether equal operands collapse into a single input.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DeltaMode {
    /// Always `I(out) - I(a) - I(b)`.
    #[default]
    TwoArg,
    /// Equal operands count once: `x + x` yields one bit, `x * x` yields `I(x)`.
    Collapse,
}

impl FromStr for DeltaMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "two-arg" => Ok(DeltaMode::TwoArg),
            "collapse" => Ok(DeltaMode::Collapse),
            other => Err(Error::Parse(format!("unknown delta mode {other:?}"))),
        }
    }
}

pub fn delta_add<N: Natural>(x: &N, y: &N, mode: DeltaMode) -> Bits {
    if mode == DeltaMode::Collapse && x == y {
        return 1.0;
    }
    info(&add(x, y)) - info(x) - info(y)
}

pub fn delta_mul<N: Natural>(x: &N, y: &N, mode: DeltaMode) -> Bits {
    if mode == DeltaMode::Collapse && x == y {
        return info(x);
    }
    info(&mul(x, y)) - info(x) - info(y)
}

pub fn delta_op<N: Natural>(op: Op, x: &N, y: &N, mode: DeltaMode) -> Bits {
    match op {
        Op::Add => delta_add(x, y, mode),
        Op::Mul => delta_mul(x, y, mode),
    }
}

/// A binary computation over natural-number leaves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr<N> {
    Leaf(N),
    Node {
        op: Op,
        left: Box<Expr<N>>,
        right: Box<Expr<N>>,
    },
}

impl<N: Natural> Expr<N> {
    pub fn node(op: Op, left: Expr<N>, right: Expr<N>) -> Self {
        Expr::Node {
            op,
            left: Box::new(left),
            right: Box::new(right),
        }
    }

    pub fn value(&self) -> N {
        match self {
            Expr::Leaf(v) => v.clone(),
            Expr::Node { op, left, right } => op.apply(&left.value(), &right.value()),
        }
    }

    pub fn leaves(&self) -> Vec<N> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<N>) {
        match self {
            Expr::Leaf(v) => out.push(v.clone()),
            Expr::Node { left, right, .. } => {
                left.collect_leaves(out);
                right.collect_leaves(out);
            }
        }
    }

    /// Parses integers, `+`, `*` and parentheses. `*` binds tighter and both
    /// operators associate to the left.
    pub fn parse(src: &str) -> Result<Self, Error> {
        let mut p = Parser {
            src: src.as_bytes(),
            pos: 0,
        };
        let e = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.error("trailing input"));
        }
        Ok(e)
    }

    /// Structural key that is identical for trees equal up to swapping children.
    fn unordered_key(&self) -> String {
        match self {
            Expr::Leaf(v) => v.to_string(),
            Expr::Node { op, left, right } => {
                join_unordered(*op, &left.unordered_key(), &right.unordered_key())
            }
        }
    }
}

fn join_unordered(op: Op, a: &str, b: &str) -> String {
    let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
    format!("({lo}{}{hi})", op.symbol())
}

impl<N: Natural> fmt::Display for Expr<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Leaf(v) => write!(f, "{v}"),
            Expr::Node { op, left, right } => write!(f, "({left}{}{right})", op.symbol()),
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at offset {}", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr<N: Natural>(&mut self) -> Result<Expr<N>, Error> {
        let mut lhs = self.term()?;
        while self.peek() == Some(b'+') {
            self.pos += 1;
            let rhs = self.term()?;
            lhs = Expr::node(Op::Add, lhs, rhs);
        }
        Ok(lhs)
    }

    fn term<N: Natural>(&mut self) -> Result<Expr<N>, Error> {
        let mut lhs = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let rhs = self.factor()?;
            lhs = Expr::node(Op::Mul, lhs, rhs);
        }
        Ok(lhs)
    }

    fn factor<N: Natural>(&mut self) -> Result<Expr<N>, Error> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(b) if b.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let lit = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
                Ok(Expr::Leaf(crate::nat::parse_nat(lit)?))
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

/// A computation tree together with the delta convention used to score it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompTree<N> {
    pub root: Expr<N>,
    pub mode: DeltaMode,
}

impl<N: Natural> CompTree<N> {
    pub fn new(root: Expr<N>, mode: DeltaMode) -> Self {
        CompTree { root, mode }
    }

    pub fn parse(src: &str, mode: DeltaMode) -> Result<Self, Error> {
        Ok(CompTree {
            root: Expr::parse(src)?,
            mode,
        })
    }
}

/// Per-node deltas in post-order, their sum, and the computed value.
#[derive(Debug, Clone, PartialEq)]
pub struct DeltaReport<N> {
    pub per_node: Vec<Bits>,
    pub total: Bits,
    pub result: N,
}

pub fn tree_delta<N: Natural>(t: &CompTree<N>) -> DeltaReport<N> {
    let mut per_node = Vec::new();
    let result = walk(&t.root, t.mode, &mut per_node);
    let total = per_node.iter().sum();
    DeltaReport {
        per_node,
        total,
        result,
    }
}

fn walk<N: Natural>(e: &Expr<N>, mode: DeltaMode, out: &mut Vec<Bits>) -> N {
    match e {
        Expr::Leaf(v) => v.clone(),
        Expr::Node { op, left, right } => {
            let a = walk(left, mode, out);
            let b = walk(right, mode, out);
            out.push(delta_op(*op, &a, &b, mode));
            op.apply(&a, &b)
        }
    }
}

/// Every ordered computation over `values`: all leaf orderings times all
/// bracketings, `n! * Catalan(n-1)` trees for distinct leaves.
pub fn ordered_bracketings<N: Natural>(values: &[N], op: Op) -> Vec<Expr<N>> {
    let mut out = Vec::new();
    let mut perm: Vec<N> = values.to_vec();
    permute(&mut perm, 0, &mut |seq| out.extend(sequence_trees(seq, op)));
    out
}

fn permute<N: Clone>(v: &mut Vec<N>, k: usize, emit: &mut dyn FnMut(&[N])) {
    if k == v.len() {
        emit(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permute(v, k + 1, emit);
        v.swap(k, i);
    }
}

fn sequence_trees<N: Natural>(seq: &[N], op: Op) -> Vec<Expr<N>> {
    if seq.len() == 1 {
        return vec![Expr::Leaf(seq[0].clone())];
    }
    let mut out = Vec::new();
    for split in 1..seq.len() {
        let lefts = sequence_trees(&seq[..split], op);
        let rights = sequence_trees(&seq[split..], op);
        for l in &lefts {
            for r in &rights {
                out.push(Expr::node(op, l.clone(), r.clone()));
            }
        }
    }
    out
}

/// Distinct computations over the multiset `values` for a commutative
/// operator: children are unordered, and trees that coincide after swapping
/// equal leaves are counted once. `(2n-3)!!` trees for distinct leaves.
pub fn unordered_bracketings<N: Natural>(values: &[N], op: Op) -> Vec<Expr<N>> {
    if values.is_empty() {
        return Vec::new();
    }
    let full = (1usize << values.len()) - 1;
    let mut memo: Vec<Option<BTreeMap<String, Expr<N>>>> = vec![None; full + 1];
    unordered_for_mask(values, op, full, &mut memo)
        .values()
        .cloned()
        .collect()
}

fn unordered_for_mask<'m, N: Natural>(
    values: &[N],
    op: Op,
    mask: usize,
    memo: &'m mut Vec<Option<BTreeMap<String, Expr<N>>>>,
) -> &'m BTreeMap<String, Expr<N>> {
    if memo[mask].is_none() {
        let mut trees = BTreeMap::new();
        if mask.count_ones() == 1 {
            let leaf = Expr::Leaf(values[mask.trailing_zeros() as usize].clone());
            trees.insert(leaf.unordered_key(), leaf);
        } else {
            let low = mask & mask.wrapping_neg();
            // left part always holds the lowest index, so each unordered split appears once
            let rest = mask ^ low;
            let mut sub = rest;
            loop {
                let left = low | sub;
                let right = mask ^ left;
                if right != 0 {
                    let ls = unordered_for_mask(values, op, left, memo).clone();
                    let rs = unordered_for_mask(values, op, right, memo).clone();
                    for (lk, l) in &ls {
                        for (rk, r) in &rs {
                            trees
                                .entry(join_unordered(op, lk, rk))
                                .or_insert_with(|| Expr::node(op, l.clone(), r.clone()));
                        }
                    }
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & rest;
            }
        }
        memo[mask] = Some(trees);
    }
    memo[mask].as_ref().expect("filled above")
}

/// One distinct total of the spectrum and how many trees reach it.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumLine {
    pub total: Bits,
    pub multiplicity: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    /// Number of distinct unordered trees enumerated.
    pub tree_count: u64,
    /// Distinct totals, ascending.
    pub lines: Vec<SpectrumLine>,
}

/// Totals of [`tree_delta`] over every distinct commutative bracketing of
/// `values`, grouped into distinct values (within [`SPECTRUM_TOLERANCE`]).
///
/// Works bottom-up over subsets of leaf positions: the delta at a node only
/// depends on the values of its two subtrees, which are fixed per subset.
pub fn delta_spectrum<N: Natural>(
    values: &[N],
    op: Op,
    mode: DeltaMode,
) -> Result<Spectrum, Error> {
    if values.is_empty() {
        return Err(Error::EmptySet);
    }
    if values.len() > SPECTRUM_LIMIT {
        return Err(Error::SizeLimit {
            size: values.len(),
            limit: SPECTRUM_LIMIT,
        });
    }
    let n = values.len();
    let full = (1usize << n) - 1;
    let mut mask_value: Vec<N> = vec![N::zero(); full + 1];
    for mask in 1..=full {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        mask_value[mask] = if rest == 0 {
            values[low].clone()
        } else {
            op.apply(&values[low], &mask_value[rest])
        };
    }
    // per subset: canonical tree key -> total delta
    let mut memo: Vec<BTreeMap<String, Bits>> = vec![BTreeMap::new(); full + 1];
    let mut masks: Vec<usize> = (1..=full).collect();
    masks.sort_by_key(|m| m.count_ones());
    for mask in masks {
        let mut trees = BTreeMap::new();
        if mask.count_ones() == 1 {
            trees.insert(values[mask.trailing_zeros() as usize].to_string(), 0.0);
        } else {
            let low = mask & mask.wrapping_neg();
            let rest = mask ^ low;
            let mut sub = rest;
            loop {
                let left = low | sub;
                let right = mask ^ left;
                if right != 0 {
                    let d = delta_op(op, &mask_value[left], &mask_value[right], mode);
                    for (lk, lt) in &memo[left] {
                        for (rk, rt) in &memo[right] {
                            trees
                                .entry(join_unordered(op, lk, rk))
                                .or_insert(lt + rt + d);
                        }
                    }
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & rest;
            }
        }
        memo[mask] = trees;
    }
    let mut totals: Vec<Bits> = memo[full].values().copied().collect();
    let tree_count = totals.len() as u64;
    totals.sort_by(f64::total_cmp);
    let mut lines: Vec<SpectrumLine> = Vec::new();
    for t in totals {
        match lines.last_mut() {
            Some(last) if (t - last.total).abs() <= SPECTRUM_TOLERANCE => last.multiplicity += 1,
            _ => lines.push(SpectrumLine {
                total: t,
                multiplicity: 1,
            }),
        }
    }
    Ok(Spectrum { tree_count, lines })
}

/// Building blocks of primitive recursion, with the delta each one carries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Primitive<N> {
    /// `s(x) = x + 1`.
    Successor(N),
    /// `z(n) = 0`.
    Constant,
    /// `P_i(x_1, ..., x_n) = x_i`, with a 1-based index.
    Projection { index: usize, args: Vec<N> },
    /// `f(g(x))` observed through its three values.
    Composition { input: N, inner: N, output: N },
    /// Base case `f(x, 0) = g(x)`.
    RecursionBase { x: N, output: N },
    /// Step `f(x, s(y)) = h(x, y, f(x, y))`.
    RecursionStep { x: N, y: N, output: N },
}

pub fn primitive_delta<N: Natural>(kind: &Primitive<N>) -> Result<Bits, Error> {
    Ok(match kind {
        Primitive::Successor(x) => info(&add(x, &N::one())) - info(x),
        Primitive::Constant => 0.0,
        Primitive::Projection { index, args } => {
            if *index == 0 || *index > args.len() {
                return Err(Error::InvalidArgument(format!(
                    "projection index {index} outside 1..={}",
                    args.len()
                )));
            }
            let tuple: Bits = args.iter().map(info).sum();
            info(&args[index - 1]) - (*index as f64).log2() - tuple
        }
        // the two steps telescope: (I(f g x) - I(g x)) + (I(g x) - I(x))
        Primitive::Composition {
            input,
            inner,
            output,
        } => (info(output) - info(inner)) + (info(inner) - info(input)),
        Primitive::RecursionBase { x, output } => info(output) - info(x),
        Primitive::RecursionStep { x, y, output } => info(output) - info(x) - info(y),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinadics::{computation_count, OperatorLaws};
    use DeltaMode::*;

    const LEAVES: [u64; 4] = [2, 47, 53, 98];

    fn approx(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn delta_add_examples() {
        assert!(approx(delta_add(&2u64, &98, TwoArg), -0.97, 0.01));
        assert_eq!(delta_add(&100u64, &100, Collapse), 1.0);
        assert!(approx(delta_add(&47u64, &53, TwoArg), -4.6386, 1e-3));
        // collapse only fires on equal operands
        assert_eq!(
            delta_add(&47u64, &53, Collapse),
            delta_add(&47u64, &53, TwoArg)
        );
    }

    #[test]
    fn delta_mul_examples() {
        assert!(delta_mul(&7u64, &6, TwoArg).abs() < 1e-12);
        assert!(approx(delta_mul(&5u64, &5, Collapse), 5f64.log2(), 1e-12));
        assert_eq!(delta_mul(&1u64, &9, TwoArg), 0.0);
    }

    #[test]
    fn operands_commute() {
        for (x, y) in [(2u64, 98u64), (0, 5), (13, 13), (1000, 3)] {
            for mode in [TwoArg, Collapse] {
                assert_eq!(delta_add(&x, &y, mode), delta_add(&y, &x, mode));
                assert_eq!(delta_mul(&x, &y, mode), delta_mul(&y, &x, mode));
            }
        }
    }

    #[test]
    fn parser_handles_grammar() {
        let e: Expr<u64> = Expr::parse("( (2+98)+(47+53) )").unwrap();
        assert_eq!(e.to_string(), "((2+98)+(47+53))");
        assert_eq!(e.value(), 200);
        let e: Expr<u64> = Expr::parse("1 + 2 * 3 + 4").unwrap();
        assert_eq!(e.to_string(), "((1+(2*3))+4)");
        assert_eq!(e.value(), 11);
        assert_eq!(e.leaves(), vec![1, 2, 3, 4]);
        for bad in ["", "(1+2", "1+", "1-2", "2 3", ")"] {
            assert!(Expr::<u64>::parse(bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn worked_tree_in_collapse_mode() {
        let t = CompTree::<u64>::parse("((2+98)+(47+53))", Collapse).unwrap();
        let r = tree_delta(&t);
        assert_eq!(r.result, 200);
        assert_eq!(r.per_node.len(), 3);
        assert_eq!(r.per_node[2], 1.0);
        assert!(approx(r.total, -4.6094, 1e-3));
        assert!(approx(r.total, r.per_node.iter().sum(), 1e-15));
    }

    #[test]
    fn addition_telescopes_in_two_arg_mode() {
        let expected = 200f64.log2() - LEAVES.iter().map(|v| (*v as f64).log2()).sum::<f64>();
        assert!(approx(expected, -11.2533, 1e-4));
        for e in ordered_bracketings(&LEAVES, Op::Add) {
            let r = tree_delta(&CompTree::new(e, TwoArg));
            assert!(approx(r.total, expected, 1e-9));
        }
    }

    #[test]
    fn per_node_profiles_differ_between_bracketings() {
        let a = tree_delta(&CompTree::<u64>::parse("(2+47)+(53+98)", TwoArg).unwrap());
        let b = tree_delta(&CompTree::<u64>::parse("(2+98)+(47+53)", TwoArg).unwrap());
        let mut pa = a.per_node.clone();
        let mut pb = b.per_node.clone();
        pa.sort_by(f64::total_cmp);
        pb.sort_by(f64::total_cmp);
        assert!(pa.iter().zip(&pb).any(|(x, y)| !approx(*x, *y, 1e-6)));
        assert!(approx(a.total, b.total, 1e-9));
    }

    #[test]
    fn multiplication_nodes_are_neutral() {
        for e in unordered_bracketings(&[2u64, 3, 5, 7, 11], Op::Mul) {
            let r = tree_delta(&CompTree::new(e, TwoArg));
            assert!(r.per_node.iter().all(|d| d.abs() < 1e-9));
        }
    }

    #[test]
    fn bracketing_counts() {
        let distinct = [2u64, 3, 5, 7, 11];
        for n in 1..=5 {
            let ordered = ordered_bracketings(&distinct[..n], Op::Add).len() as u64;
            let expect: u64 = computation_count(n as u64, OperatorLaws::NonCommNonAssoc).unwrap();
            assert_eq!(ordered, expect, "n = {n}");
        }
        let unordered: Vec<usize> = (1..=5)
            .map(|n| unordered_bracketings(&distinct[..n], Op::Add).len())
            .collect();
        assert_eq!(unordered, vec![1, 1, 3, 15, 105]);
        // equal leaves collapse: (a+a)+b, (a+b)+a
        assert_eq!(unordered_bracketings(&[4u64, 4, 9], Op::Add).len(), 2);
    }

    #[test]
    fn spectrum_two_arg_is_single_valued() {
        let s = delta_spectrum(&LEAVES, Op::Add, TwoArg).unwrap();
        assert_eq!(s.tree_count, 15);
        assert_eq!(s.lines.len(), 1);
        assert_eq!(s.lines[0].multiplicity, 15);
        assert!(approx(s.lines[0].total, -11.2533, 1e-3));
    }

    #[test]
    fn spectrum_collapse_splits() {
        let s = delta_spectrum(&LEAVES, Op::Add, Collapse).unwrap();
        assert!(s.lines.len() >= 2);
        assert!(s.lines.iter().any(|l| approx(l.total, -4.6094, 1e-3)));
        assert!(s.lines.iter().any(|l| approx(l.total, -11.2533, 1e-3)));
        assert_eq!(s.lines.iter().map(|l| l.multiplicity).sum::<u64>(), 15);
    }

    #[test]
    fn spectrum_matches_explicit_trees() {
        let vals = [3u64, 3, 8, 21, 5];
        for mode in [TwoArg, Collapse] {
            for op in [Op::Add, Op::Mul] {
                let s = delta_spectrum(&vals, op, mode).unwrap();
                let mut totals: Vec<f64> = unordered_bracketings(&vals, op)
                    .into_iter()
                    .map(|e| tree_delta(&CompTree::new(e, mode)).total)
                    .collect();
                totals.sort_by(f64::total_cmp);
                assert_eq!(s.tree_count as usize, totals.len());
                let mut expanded = Vec::new();
                for l in &s.lines {
                    expanded.extend(std::iter::repeat_n(l.total, l.multiplicity as usize));
                }
                assert!(expanded
                    .iter()
                    .zip(&totals)
                    .all(|(a, b)| approx(*a, *b, 1e-9)));
            }
        }
    }

    #[test]
    fn spectrum_limits() {
        let s = delta_spectrum(&[6u64, 9], Op::Mul, TwoArg).unwrap();
        assert_eq!(
            s.lines,
            vec![SpectrumLine {
                total: 0.0,
                multiplicity: 1
            }]
        );
        let nine: Vec<u64> = (1..=9).collect();
        assert_eq!(
            delta_spectrum(&nine, Op::Add, TwoArg),
            Err(Error::SizeLimit { size: 9, limit: 8 })
        );
        assert_eq!(
            delta_spectrum::<u64>(&[], Op::Add, TwoArg),
            Err(Error::EmptySet)
        );
        let eight: Vec<u64> = (1..=8).collect();
        assert_eq!(
            delta_spectrum(&eight, Op::Add, TwoArg).unwrap().tree_count,
            135_135
        );
    }

    #[test]
    fn primitive_examples() {
        assert_eq!(primitive_delta(&Primitive::Successor(1u64)).unwrap(), 1.0);
        assert_eq!(primitive_delta(&Primitive::Successor(0u64)).unwrap(), 0.0);
        assert_eq!(primitive_delta::<u64>(&Primitive::Constant).unwrap(), 0.0);
        let eps: Vec<f64> = [10u64, 1000, 1_000_000]
            .iter()
            .map(|x| primitive_delta(&Primitive::Successor(*x)).unwrap())
            .collect();
        assert!(eps.iter().all(|e| *e > 0.0));
        assert!(eps.windows(2).all(|w| w[1] < w[0]));
    }

    #[test]
    fn projection_discards() {
        let p = Primitive::Projection {
            index: 2,
            args: vec![5u64, 9, 12],
        };
        let d = primitive_delta(&p).unwrap();
        let expect = 9f64.log2() - 1.0 - (5f64.log2() + 9f64.log2() + 12f64.log2());
        assert!(approx(d, expect, 1e-12));
        assert!(d < 0.0);
        assert!(primitive_delta(&Primitive::Projection {
            index: 4,
            args: vec![1u64, 2, 3]
        })
        .is_err());
    }

    #[test]
    fn composition_is_neutral() {
        // f(g(x)) with g(x) = 3x, f(y) = y + 1
        let d = primitive_delta(&Primitive::Composition {
            input: 7u64,
            inner: 21,
            output: 22,
        })
        .unwrap();
        assert!(approx(d, 22f64.log2() - 7f64.log2(), 1e-12));
        let base = primitive_delta(&Primitive::RecursionBase { x: 4u64, output: 4 }).unwrap();
        assert_eq!(base, 0.0);
        let step = primitive_delta(&Primitive::RecursionStep {
            x: 4u64,
            y: 2,
            output: 7,
        })
        .unwrap();
        assert!(approx(step, 7f64.log2() - 2.0 - 1.0, 1e-12));
    }
}
