//! Brute-force enumerators of the actual objects being counted.
//!
//! Nothing here uses generating functions or Bell-table recurrences: trees
//! are built by recursive set partition of their leaf labels, ultrametrics by
//! exhaustive search over all symmetric maps, unlabeled trees by generating
//! multisets of subtrees and deduplicating canonical codes. These exist to
//! check the formula modules at small sizes.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::ring::{factorial, Ring};
use crate::weight::WeightPoly;

pub const MAX_LABELED_LEAVES: usize = 8;
pub const MAX_LABELED_COLORS: u32 = 4;
pub const MAX_EXPLICIT_LEAVES: usize = 6;
pub const MAX_EXPLICIT_COLORS: u32 = 3;
pub const MAX_ULTRAMETRIC_CANDIDATES: u64 = 60_000;
pub const MAX_UNLABELED_LEAVES: usize = 8;
pub const MAX_COLORED_UNLABELED_LEAVES: usize = 6;
pub const MAX_CHAINS: usize = 7;

fn bound(what: &'static str, ok: bool, detail: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::OutOfBounds {
            what,
            detail: detail(),
        })
    }
}

/// An explicit rooted tree. Children are stored in the order generated; two
/// trees are the same unordered tree when their [`CanonicalCode`]s agree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum TreeNode {
    /// A leaf carrying a label, a color, or nothing.
    Leaf(Option<u32>),
    Inner { color: u32, children: Vec<TreeNode> },
}

impl TreeNode {
    pub fn leaf_count(&self) -> usize {
        match self {
            TreeNode::Leaf(_) => 1,
            TreeNode::Inner { children, .. } => children.iter().map(TreeNode::leaf_count).sum(),
        }
    }

    pub fn inner_count(&self) -> usize {
        match self {
            TreeNode::Leaf(_) => 0,
            TreeNode::Inner { children, .. } => {
                1 + children.iter().map(TreeNode::inner_count).sum::<usize>()
            }
        }
    }

    /// Every inner vertex has at least two children.
    pub fn is_series_reduced(&self) -> bool {
        match self {
            TreeNode::Leaf(_) => true,
            TreeNode::Inner { children, .. } => {
                children.len() >= 2 && children.iter().all(TreeNode::is_series_reduced)
            }
        }
    }

    /// Inner colors lie in `1..=m` and no inner child repeats its parent's
    /// color.
    pub fn is_multipartite(&self, m: u32) -> bool {
        match self {
            TreeNode::Leaf(_) => true,
            TreeNode::Inner { color, children } => {
                (1..=m).contains(color)
                    && children.iter().all(|ch| match ch {
                        TreeNode::Leaf(_) => true,
                        TreeNode::Inner { color: cc, .. } => cc != color && ch.is_multipartite(m),
                    })
            }
        }
    }

    /// Leaf labels in traversal order.
    pub fn labels(&self) -> Vec<u32> {
        let mut out = Vec::new();
        self.collect_labels(&mut out);
        out
    }

    fn collect_labels(&self, out: &mut Vec<u32>) {
        match self {
            TreeNode::Leaf(label) => out.extend(label),
            TreeNode::Inner { children, .. } => {
                children.iter().for_each(|c| c.collect_labels(out));
            }
        }
    }

    /// Product of `x_{color, out-degree}` over inner vertices.
    pub fn weight(&self) -> WeightPoly {
        match self {
            TreeNode::Leaf(_) => WeightPoly::one(),
            TreeNode::Inner { color, children } => children.iter().fold(
                WeightPoly::var(*color, children.len() as u32).expect("series-reduced"),
                |acc, c| acc * c.weight(),
            ),
        }
    }

    pub fn canonical(&self) -> CanonicalCode {
        match self {
            TreeNode::Leaf(tag) => CanonicalCode::Leaf(*tag),
            TreeNode::Inner { color, children } => {
                let mut codes: Vec<CanonicalCode> = children.iter().map(TreeNode::canonical).collect();
                codes.sort();
                CanonicalCode::Inner(Some(*color), codes)
            }
        }
    }
}

/// Isomorphism-invariant encoding of a rooted unordered tree: child codes are
/// kept sorted, so equal codes mean isomorphic trees.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum CanonicalCode {
    Leaf(Option<u32>),
    Inner(Option<u32>, Vec<CanonicalCode>),
}

impl CanonicalCode {
    fn inner(color: Option<u32>, mut children: Vec<CanonicalCode>) -> Self {
        children.sort();
        CanonicalCode::Inner(color, children)
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            CanonicalCode::Leaf(_) => 1,
            CanonicalCode::Inner(_, ch) => ch.iter().map(CanonicalCode::leaf_count).sum(),
        }
    }

    pub fn inner_count(&self) -> usize {
        match self {
            CanonicalCode::Leaf(_) => 0,
            CanonicalCode::Inner(_, ch) => 1 + ch.iter().map(CanonicalCode::inner_count).sum::<usize>(),
        }
    }

    fn root_color(&self) -> Option<u32> {
        match self {
            CanonicalCode::Leaf(c) | CanonicalCode::Inner(c, _) => *c,
        }
    }
}

/// All ways to split the bits of `mask` into unordered nonempty blocks.
pub fn set_partitions(mask: u32) -> Vec<Vec<u32>> {
    if mask == 0 {
        return vec![Vec::new()];
    }
    let low = mask & mask.wrapping_neg();
    let rest = mask ^ low;
    let mut out = Vec::new();
    // the block holding the lowest element is `low` plus any subset of `rest`
    let mut sub = rest;
    loop {
        let block = low | sub;
        for mut tail in set_partitions(rest ^ sub) {
            tail.push(block);
            out.push(tail);
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & rest;
    }
    out
}

fn full_mask(s: usize) -> u32 {
    (1u32 << s) - 1
}

/// Every labeled `m`-partite series-reduced tree with leaves `1..=s`, built
/// explicitly.
pub fn generate_labeled_trees(s: usize, m: u32) -> Result<Vec<TreeNode>> {
    bound("explicit tree generation", (1..=MAX_EXPLICIT_LEAVES).contains(&s) && m <= MAX_EXPLICIT_COLORS, || {
        format!("s = {s}, m = {m}; limits s <= {MAX_EXPLICIT_LEAVES}, m <= {MAX_EXPLICIT_COLORS}")
    })?;
    Ok(generate(full_mask(s), None, m))
}

fn generate(mask: u32, parent: Option<u32>, m: u32) -> Vec<TreeNode> {
    if mask.count_ones() == 1 {
        return vec![TreeNode::Leaf(Some(mask.trailing_zeros() + 1))];
    }
    let mut out = Vec::new();
    for color in (1..=m).filter(|&c| Some(c) != parent) {
        for blocks in set_partitions(mask).into_iter().filter(|b| b.len() >= 2) {
            let mut forests: Vec<Vec<TreeNode>> = vec![Vec::new()];
            for &block in &blocks {
                let options = generate(block, Some(color), m);
                forests = forests
                    .into_iter()
                    .flat_map(|f| {
                        options.iter().map(move |t| {
                            let mut g = f.clone();
                            g.push(t.clone());
                            g
                        })
                    })
                    .collect();
            }
            out.extend(forests.into_iter().map(|children| TreeNode::Inner { color, children }));
        }
    }
    out
}

/// `Σ_T Π_v weight(color(v), outdeg(v))` over labeled `m`-partite
/// series-reduced trees on `s` leaves, by recursion on the root's partition
/// of the label set.
pub fn sum_labeled_trees<R: Ring>(s: usize, m: u32, weight: impl Fn(u32, usize) -> R) -> Result<R> {
    bound("labeled tree enumeration", (1..=MAX_LABELED_LEAVES).contains(&s) && m <= MAX_LABELED_COLORS, || {
        format!("s = {s}, m = {m}; limits s <= {MAX_LABELED_LEAVES}, m <= {MAX_LABELED_COLORS}")
    })?;
    let mut memo = HashMap::new();
    let mut total = R::zero();
    if s == 1 {
        return Ok(R::one());
    }
    for c in 1..=m {
        total = total + &rooted(full_mask(s), c, m, &weight, &mut memo);
    }
    Ok(total)
}

/// Weighted trees on label set `mask` (≥ 2 labels) with root color `color`.
fn rooted<R: Ring>(
    mask: u32,
    color: u32,
    m: u32,
    weight: &impl Fn(u32, usize) -> R,
    memo: &mut HashMap<(u32, u32), R>,
) -> R {
    if let Some(v) = memo.get(&(mask, color)) {
        return v.clone();
    }
    let mut acc = R::zero();
    for blocks in set_partitions(mask).into_iter().filter(|b| b.len() >= 2) {
        let mut term = weight(color, blocks.len());
        for &block in &blocks {
            if block.count_ones() == 1 {
                continue;
            }
            let mut sub = R::zero();
            for c in (1..=m).filter(|&c| c != color) {
                sub = sub + &rooted(block, c, m, weight, memo);
            }
            term = term * &sub;
        }
        acc = acc + &term;
    }
    memo.insert((mask, color), acc.clone());
    acc
}

/// Number of labeled `m`-partite series-reduced trees on `s` leaves and the
/// sum of their weights `Π x_{col(v), d(v)}`.
pub fn enum_labeled_trees(s: usize, m: u32) -> Result<(BigInt, WeightPoly)> {
    let count = sum_labeled_trees(s, m, |_, _| BigInt::from(1))?;
    let weight = sum_labeled_trees(s, m, |c, k| WeightPoly::var(c, k as u32).expect("k >= 2"))?;
    Ok((count, weight))
}

/// Labeled `m`-partite series-reduced mobiles: trees weighted by the number
/// `(d−1)!` of cyclic arrangements of each inner vertex's children.
pub fn enum_mobiles(s: usize, m: u32) -> Result<BigInt> {
    bound("mobile enumeration", s <= MAX_EXPLICIT_LEAVES && m <= MAX_EXPLICIT_COLORS, || {
        format!("s = {s}, m = {m}; limits s <= {MAX_EXPLICIT_LEAVES}, m <= {MAX_EXPLICIT_COLORS}")
    })?;
    sum_labeled_trees(s, m, |_, k| factorial(k - 1))
}

/// A symmetric map on the unordered pairs of distinct points of `{1..s}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UltraMap {
    s: usize,
    values: Vec<u32>,
}

impl UltraMap {
    pub fn new(s: usize, values: Vec<u32>) -> Self {
        assert_eq!(values.len(), s * s.saturating_sub(1) / 2, "one value per pair");
        UltraMap { s, values }
    }

    fn index(&self, x: usize, y: usize) -> usize {
        let (a, b) = if x < y { (x, y) } else { (y, x) };
        // pairs (a, b), a < b, 0-based, in lexicographic order
        a * (2 * self.s - a - 1) / 2 + (b - a - 1)
    }

    /// `D(x, y)` for distinct 0-based points.
    pub fn get(&self, x: usize, y: usize) -> u32 {
        assert_ne!(x, y, "defined on distinct pairs only");
        self.values[self.index(x, y)]
    }

    /// At most two values on every triangle, and no four points with
    /// `D(a,b) = D(b,c) = D(c,d) ≠ D(b,d) = D(d,a) = D(a,c)`.
    pub fn is_symbolic_ultrametric(&self) -> bool {
        let s = self.s;
        for x in 0..s {
            for y in x + 1..s {
                for z in y + 1..s {
                    let t: BTreeSet<u32> = [self.get(x, y), self.get(x, z), self.get(y, z)].into();
                    if t.len() > 2 {
                        return false;
                    }
                }
            }
        }
        for a in 0..s {
            for b in (0..s).filter(|&b| b != a) {
                for c in (0..s).filter(|&c| c != a && c != b) {
                    for d in (0..s).filter(|&d| d != a && d != b && d != c) {
                        let p = self.get(a, b);
                        let q = self.get(b, d);
                        if p == self.get(b, c)
                            && p == self.get(c, d)
                            && q == self.get(d, a)
                            && q == self.get(a, c)
                            && p != q
                        {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

/// Number of symbolic ultrametrics on `{1..s}` with values in `{1..m}`, by
/// testing all `m^{C(s,2)}` symmetric maps.
pub fn enum_ultrametrics(s: usize, m: u32) -> Result<BigInt> {
    let pairs = s * s.saturating_sub(1) / 2;
    let candidates = u64::from(m).checked_pow(pairs as u32);
    bound(
        "ultrametric enumeration",
        s >= 1 && candidates.is_some_and(|c| c <= MAX_ULTRAMETRIC_CANDIDATES),
        || format!("s = {s}, m = {m}; at most {MAX_ULTRAMETRIC_CANDIDATES} candidate maps"),
    )?;
    let candidates = candidates.expect("checked above");
    let mut count = 0u64;
    let mut values = vec![1u32; pairs];
    for mut code in 0..candidates {
        for v in values.iter_mut() {
            *v = (code % u64::from(m)) as u32 + 1;
            code /= u64::from(m);
        }
        if UltraMap::new(s, values.clone()).is_symbolic_ultrametric() {
            count += 1;
        }
    }
    Ok(BigInt::from(count))
}

/// How inner vertices and leaves of unlabeled trees are colored.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Coloring {
    /// No colors, no adjacency restriction.
    None,
    /// Inner vertices get one of `m` colors, adjacent inner vertices differ.
    Inner(u32),
    /// Leaves colored as well, each differing from its parent.
    Full(u32),
}

/// All unlabeled trees with `1..=s` leaves under `coloring`; entry `n − 1`
/// holds the distinct canonical codes with `n` leaves.
pub fn generate_unlabeled_trees(s: usize, coloring: Coloring) -> Result<Vec<Vec<CanonicalCode>>> {
    let (limit, m) = match coloring {
        Coloring::None => (MAX_UNLABELED_LEAVES, 0),
        Coloring::Inner(m) | Coloring::Full(m) => (MAX_COLORED_UNLABELED_LEAVES, m),
    };
    bound("unlabeled enumeration", (1..=limit).contains(&s) && m <= MAX_EXPLICIT_COLORS, || {
        format!("s = {s}, m = {m}; limits s <= {limit}, m <= {MAX_EXPLICIT_COLORS}")
    })?;
    let leaves: Vec<CanonicalCode> = match coloring {
        Coloring::Full(m) => (1..=m).map(|c| CanonicalCode::Leaf(Some(c))).collect(),
        _ => vec![CanonicalCode::Leaf(None)],
    };
    let roots: Vec<Option<u32>> = match coloring {
        Coloring::None => vec![None],
        Coloring::Inner(m) | Coloring::Full(m) => (1..=m).map(Some).collect(),
    };
    let mut by_size: Vec<Vec<CanonicalCode>> = vec![leaves];
    for n in 2..=s {
        let mut found = BTreeSet::new();
        for &root in &roots {
            let allowed: Vec<&CanonicalCode> = by_size
                .iter()
                .flatten()
                .filter(|c| root.is_none() || c.root_color() != root)
                .collect();
            let mut chosen = Vec::new();
            multisets(&allowed, 0, n, &mut chosen, &mut |children| {
                if children.len() >= 2 {
                    found.insert(CanonicalCode::inner(root, children.to_vec()));
                }
            });
        }
        by_size.push(found.into_iter().collect());
    }
    Ok(by_size)
}

/// Calls `emit` on every nondecreasing choice from `pool[start..]` whose
/// leaf counts sum to `remaining`.
fn multisets(
    pool: &[&CanonicalCode],
    start: usize,
    remaining: usize,
    chosen: &mut Vec<CanonicalCode>,
    emit: &mut impl FnMut(&[CanonicalCode]),
) {
    if remaining == 0 {
        emit(chosen);
        return;
    }
    for i in start..pool.len() {
        let size = pool[i].leaf_count();
        if size > remaining {
            continue;
        }
        chosen.push(pool[i].clone());
        multisets(pool, i, remaining - size, chosen, emit);
        chosen.pop();
    }
}

/// Rooted unlabeled series-reduced trees with `s` leaves, bucketed by number
/// of inner vertices.
pub fn enum_unlabeled_trees(s: usize) -> Result<BTreeMap<usize, BigInt>> {
    let trees = generate_unlabeled_trees(s, Coloring::None)?;
    let mut buckets = BTreeMap::new();
    for t in &trees[s - 1] {
        *buckets.entry(t.inner_count()).or_insert_with(|| BigInt::from(0)) += 1;
    }
    Ok(buckets)
}

/// Isomorphism classes of unlabeled `m`-partite series-reduced trees with
/// `s` leaves. For `m ≥ 3` this is smaller than the count in
/// [`crate::unlabeled`], which gives each uncolored shape with `k` inner
/// vertices `m(m−1)^{k−1}` colorings without identifying symmetric ones
/// (36 against 39 at `s = 4, m = 3`).
pub fn enum_multipartite_unlabeled_classes(s: usize, m: u32) -> Result<BigInt> {
    Ok(BigInt::from(generate_unlabeled_trees(s, Coloring::Inner(m))?[s - 1].len()))
}

/// Isomorphism classes of unlabeled trees with every vertex colored,
/// adjacent vertices differing. This is smaller than the fully colored count
/// in [`crate::unlabeled`], which colors each leaf of an inner-colored tree
/// independently (48 against 72 at `s = 3, m = 3`).
pub fn enum_fully_colored_unlabeled_classes(s: usize, m: u32) -> Result<BigInt> {
    Ok(BigInt::from(generate_unlabeled_trees(s, Coloring::Full(m))?[s - 1].len()))
}

/// `m`-colored chain-increasing binary trees with chains labeled `1..=s`.
///
/// A tree on a label set is either a chain vertex carrying one label with at
/// most one subtree below it, all of whose labels must be larger, or a
/// junction of one of `m` colors over an unordered pair of subtrees that
/// split the labels.
pub fn enum_chain_increasing(s: usize, m: u32) -> Result<BigInt> {
    bound("chain-increasing enumeration", (1..=MAX_CHAINS).contains(&s) && m <= MAX_EXPLICIT_COLORS, || {
        format!("s = {s}, m = {m}; limits s <= {MAX_CHAINS}, m <= {MAX_EXPLICIT_COLORS}")
    })?;
    let mut memo = HashMap::new();
    let by_junctions = chain_trees(full_mask(s), &mut memo);
    let m = BigInt::from(m);
    Ok(by_junctions
        .iter()
        .enumerate()
        .map(|(j, n)| n * Ring::pow(&m, j as u32))
        .sum())
}

/// Trees on `mask` counted by number of junctions.
fn chain_trees(mask: u32, memo: &mut HashMap<u32, Vec<BigInt>>) -> Vec<BigInt> {
    if let Some(v) = memo.get(&mask) {
        return v.clone();
    }
    let n = mask.count_ones() as usize;
    let mut out = vec![BigInt::from(0); n];
    // chain root: any label smaller than everything beneath it
    for bit in (0..32).filter(|b| mask >> b & 1 == 1) {
        let below = mask & !(1 << bit);
        if below == 0 {
            out[0] += 1;
        } else if below.trailing_zeros() > bit {
            for (j, c) in chain_trees(below, memo).into_iter().enumerate() {
                out[j] += c;
            }
        }
    }
    // junction root: unordered split, the block with the lowest label first
    let low = mask & mask.wrapping_neg();
    let rest = mask ^ low;
    let mut sub = rest;
    while sub != 0 {
        let first = low | (rest ^ sub);
        let left = chain_trees(first, memo);
        let right = chain_trees(sub, memo);
        for (i, a) in left.iter().enumerate() {
            for (j, b) in right.iter().enumerate() {
                out[i + j + 1] += a * b;
            }
        }
        sub = (sub - 1) & rest;
    }
    memo.insert(mask, out.clone());
    out
}

/// `B_{n,k}(x)` from its definition as a sum over `α` with `Σα_i = k`,
/// `Σ iα_i = n`: `n! Π x_i^{α_i} / (α_i! (i!)^{α_i})`.
pub fn bell_partial_by_partitions<R: Ring>(n: usize, k: usize, x: &[R]) -> R {
    let mut acc = R::zero();
    let mut alpha = vec![0u32; n + 1];
    partitions_into(n, k, n, &mut alpha, &mut |alpha| {
        let mut term = R::from_int(&multinomial(n, alpha));
        for (i, &a) in alpha.iter().enumerate().skip(1).filter(|(_, &a)| a > 0) {
            term = term * &x[i - 1].pow(a);
        }
        acc = acc.clone() + &term;
    });
    acc
}

fn multinomial(n: usize, alpha: &[u32]) -> BigInt {
    let mut denom = BigInt::from(1);
    for (i, &a) in alpha.iter().enumerate().skip(1) {
        denom *= factorial(a as usize) * Ring::pow(&factorial(i), a);
    }
    factorial(n) / denom
}

/// Integer partitions of `n` into exactly `k` parts of size at most `max`,
/// as part multiplicities.
fn partitions_into(n: usize, k: usize, max: usize, alpha: &mut Vec<u32>, emit: &mut impl FnMut(&[u32])) {
    if n == 0 && k == 0 {
        emit(alpha);
        return;
    }
    if n == 0 || k == 0 {
        return;
    }
    for part in (1..=max.min(n)).rev() {
        alpha[part] += 1;
        partitions_into(n - part, k - 1, part, alpha, emit);
        alpha[part] -= 1;
    }
}

/// Permutations of `0..n` counted by cycle type: `result[k]` is the number
/// with exactly `k` cycles and no fixed points.
pub fn derangements_by_cycles(n: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::from(0); n + 1];
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        if perm.iter().enumerate().all(|(i, &p)| i != p) {
            out[cycle_count(&perm)] += 1;
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    out
}

fn cycle_count(perm: &[usize]) -> usize {
    let mut seen = vec![false; perm.len()];
    let mut cycles = 0;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
        }
    }
    cycles
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("p[i] qualifies");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: u64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn set_partition_counts_are_bell_numbers() {
        let bell = [1usize, 1, 2, 5, 15, 52, 203];
        for (n, b) in bell.iter().enumerate() {
            assert_eq!(set_partitions(full_mask(n)).len(), *b);
        }
    }

    #[test]
    fn labeled_examples() {
        let (count, weight) = enum_labeled_trees(3, 2).unwrap();
        assert_eq!(count, big(8));
        assert_eq!(weight, WeightPoly::parse("x_{1,3}+x_{2,3}+6x_{1,2}x_{2,2}").unwrap());
        let (count, weight) = enum_labeled_trees(1, 3).unwrap();
        assert_eq!(count, big(1));
        assert_eq!(weight, WeightPoly::one());
        assert_eq!(enum_labeled_trees(5, 2).unwrap().0, big(472));
        assert!(enum_labeled_trees(9, 2).is_err());
        assert!(enum_labeled_trees(4, 5).is_err());
    }

    #[test]
    fn explicit_trees_agree_with_recursion() {
        for m in 1..=3 {
            for s in 1..=5 {
                let trees = generate_labeled_trees(s, m).unwrap();
                let codes: BTreeSet<_> = trees.iter().map(TreeNode::canonical).collect();
                assert_eq!(codes.len(), trees.len(), "no duplicates");
                let mut total = WeightPoly::zero();
                for t in &trees {
                    assert!(t.is_series_reduced() && t.is_multipartite(m));
                    let mut labels = t.labels();
                    labels.sort();
                    assert_eq!(labels, (1..=s as u32).collect::<Vec<_>>());
                    total = total + t.weight();
                }
                let (count, weight) = enum_labeled_trees(s, m).unwrap();
                assert_eq!(BigInt::from(trees.len()), count);
                assert_eq!(total, weight);
            }
        }
    }

    #[test]
    fn tree_checks_reject_bad_trees() {
        let unary = TreeNode::Inner {
            color: 1,
            children: vec![TreeNode::Leaf(Some(1))],
        };
        assert!(!unary.is_series_reduced());
        let clash = TreeNode::Inner {
            color: 1,
            children: vec![
                TreeNode::Leaf(Some(1)),
                TreeNode::Inner {
                    color: 1,
                    children: vec![TreeNode::Leaf(Some(2)), TreeNode::Leaf(Some(3))],
                },
            ],
        };
        assert!(clash.is_series_reduced());
        assert!(!clash.is_multipartite(2));
        assert_eq!(clash.leaf_count(), 3);
        assert_eq!(clash.inner_count(), 2);
    }

    #[test]
    fn ultrametric_examples() {
        assert_eq!(enum_ultrametrics(3, 2).unwrap(), big(8));
        assert_eq!(enum_ultrametrics(4, 2).unwrap(), big(52));
        for m in 1..=4 {
            assert_eq!(enum_ultrametrics(2, m).unwrap(), big(m.into()));
        }
        assert_eq!(enum_ultrametrics(3, 3).unwrap(), big(21));
        assert!(enum_ultrametrics(6, 3).is_err());
    }

    #[test]
    fn four_point_pattern_is_rejected() {
        // D(a,b) = D(b,c) = D(c,d) = 1, D(b,d) = D(d,a) = D(a,c) = 2
        let (a, b, c, d) = (0, 1, 2, 3);
        let mut values = vec![0; 6];
        let map = UltraMap::new(4, vec![0; 6]);
        for (x, y, v) in [(a, b, 1), (b, c, 1), (c, d, 1), (b, d, 2), (d, a, 2), (a, c, 2)] {
            values[map.index(x, y)] = v;
        }
        let map = UltraMap::new(4, values);
        assert_eq!(map.get(c, b), 1);
        assert!(!map.is_symbolic_ultrametric());
    }

    #[test]
    fn unlabeled_examples() {
        let four = enum_unlabeled_trees(4).unwrap();
        assert_eq!(four, BTreeMap::from([(1, big(1)), (2, big(2)), (3, big(2))]));
        assert_eq!(enum_unlabeled_trees(1).unwrap(), BTreeMap::from([(0, big(1))]));
        let six = enum_unlabeled_trees(6).unwrap();
        assert_eq!(
            six,
            BTreeMap::from([(1, big(1)), (2, big(4)), (3, big(10)), (4, big(12)), (5, big(6))])
        );
        assert_eq!(enum_multipartite_unlabeled_classes(4, 2).unwrap(), big(10));
        // two cherries under one root: 3 root colors times 3 color multisets
        assert_eq!(enum_multipartite_unlabeled_classes(4, 3).unwrap(), big(36));
        // root over three leaves: 3 * 4 leaf-color multisets; root over a
        // leaf and a cherry: 3 * 2 * 2 * 3
        assert_eq!(enum_fully_colored_unlabeled_classes(3, 3).unwrap(), big(48));
        assert_eq!(enum_fully_colored_unlabeled_classes(2, 2).unwrap(), big(2));
        assert_eq!(enum_fully_colored_unlabeled_classes(1, 3).unwrap(), big(3));
        assert_eq!(enum_fully_colored_unlabeled_classes(3, 1).unwrap(), big(0));
    }

    #[test]
    fn chain_examples() {
        assert_eq!(enum_chain_increasing(3, 1).unwrap(), big(8));
        assert_eq!(enum_chain_increasing(1, 3).unwrap(), big(1));
        assert_eq!(enum_chain_increasing(4, 2).unwrap(), big(243));
        assert!(enum_chain_increasing(8, 1).is_err());
    }

    #[test]
    fn mobile_examples() {
        assert_eq!(enum_mobiles(3, 2).unwrap(), big(10));
        assert_eq!(enum_mobiles(1, 2).unwrap(), big(1));
        assert_eq!(enum_mobiles(4, 3).unwrap(), big(318));
    }

    #[test]
    fn partition_sum_examples() {
        let x: Vec<BigInt> = (1..=6).map(BigInt::from).collect();
        // B_{4,2}(x) = 4 x1 x3 + 3 x2^2 = 12 + 12
        assert_eq!(bell_partial_by_partitions(4, 2, &x), big(24));
        let ones = vec![big(1); 8];
        // Stirling numbers of the second kind
        assert_eq!(bell_partial_by_partitions(5, 2, &ones), big(15));
        assert_eq!(bell_partial_by_partitions(6, 3, &ones), big(90));
        assert_eq!(bell_partial_by_partitions(0, 0, &ones), big(1));
    }

    #[test]
    fn derangement_examples() {
        let d4 = derangements_by_cycles(4);
        assert_eq!(d4, vec![big(0), big(6), big(3), big(0), big(0)]);
    }
}
