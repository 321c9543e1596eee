//! Rooted binary trees, forests, and marked forests: exact counting (Catalan
//! numbers, the Catalan triangle, height-bounded marked forests) plus
//! exhaustive enumeration, composition by grafting, and a balanced-parenthesis
//! text form.

use crate::error::{Error, Result};
use num::{BigUint, One, Zero};
use std::fmt;

/// Enumerations refuse to materialize more than this many items.
const ENUMERATION_LIMIT: u64 = 1_000_000;

/// A rooted binary tree: a single leaf, or a caret joining two subtrees.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BinaryTree {
    Leaf,
    Caret(Box<BinaryTree>, Box<BinaryTree>),
}

impl BinaryTree {
    pub fn caret(left: BinaryTree, right: BinaryTree) -> BinaryTree {
        BinaryTree::Caret(Box::new(left), Box::new(right))
    }

    pub fn leaves(&self) -> usize {
        match self {
            BinaryTree::Leaf => 1,
            BinaryTree::Caret(l, r) => l.leaves() + r.leaves(),
        }
    }

    pub fn carets(&self) -> usize {
        self.leaves() - 1
    }

    /// `hgt(leaf) = 0`, `hgt(T1 ^ T2) = max(hgt T1, hgt T2) + 1`.
    pub fn height(&self) -> usize {
        match self {
            BinaryTree::Leaf => 0,
            BinaryTree::Caret(l, r) => l.height().max(r.height()) + 1,
        }
    }
}

/// A nonempty left-to-right sequence of rooted binary trees.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Forest {
    trees: Vec<BinaryTree>,
}

impl Forest {
    pub fn new(trees: Vec<BinaryTree>) -> Result<Forest> {
        if trees.is_empty() {
            return Err(Error::PreconditionViolated(
                "a forest holds at least one tree".into(),
            ));
        }
        Ok(Forest { trees })
    }

    /// The forest of `n` bare leaves: the identity for composition.
    pub fn trivial(n: usize) -> Result<Forest> {
        Forest::new(vec![BinaryTree::Leaf; n])
    }

    pub fn trees(&self) -> &[BinaryTree] {
        &self.trees
    }

    pub fn roots(&self) -> usize {
        self.trees.len()
    }

    pub fn leaves(&self) -> usize {
        self.trees.iter().map(BinaryTree::leaves).sum()
    }

    /// Largest tree height in the forest.
    pub fn height(&self) -> usize {
        self.trees.iter().map(BinaryTree::height).max().unwrap_or(0)
    }
}

/// A forest with one distinguished tree.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MarkedForest {
    forest: Forest,
    mark: usize,
}

impl MarkedForest {
    pub fn new(forest: Forest, mark: usize) -> Result<MarkedForest> {
        if mark >= forest.roots() {
            return Err(Error::PreconditionViolated(format!(
                "mark {mark} out of range for {} trees",
                forest.roots()
            )));
        }
        Ok(MarkedForest { forest, mark })
    }

    pub fn forest(&self) -> &Forest {
        &self.forest
    }

    pub fn mark(&self) -> usize {
        self.mark
    }
}

/// Exact Catalan number `c_n = (2n)! / (n! (n+1)!)`.
pub fn catalan(n: usize) -> BigUint {
    let fact = |k: usize| -> BigUint {
        (1..=k).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
    };
    fact(2 * n) / (fact(n) * fact(n + 1))
}

/// The same numbers by the convolution `c_{n+1} = sum c_i c_{n-i}`; kept as an
/// independent cross-check of the closed form.
pub fn catalan_by_recurrence(n: usize) -> BigUint {
    let mut c = vec![BigUint::one()];
    for m in 1..=n {
        let next = (0..m).map(|i| &c[i] * &c[m - 1 - i]).sum();
        c.push(next);
    }
    c.pop().expect("nonempty")
}

/// Number of trees with `n_carets` carets.
pub fn count_trees(n_carets: usize) -> BigUint {
    catalan(n_carets)
}

fn trees_by_leaves(leaves: usize) -> BigUint {
    if leaves == 0 {
        BigUint::zero()
    } else {
        catalan(leaves - 1)
    }
}

/// Number of forests with `m` roots and `n` leaves (the Catalan triangle).
pub fn count_s(m_roots: usize, n_leaves: usize) -> BigUint {
    // s(j, n) = sum over the first tree's leaf count l of t(l) * s(j-1, n-l)
    let mut row = vec![BigUint::zero(); n_leaves + 1];
    row[0] = BigUint::one();
    for _ in 0..m_roots {
        let mut next = vec![BigUint::zero(); n_leaves + 1];
        for n in 1..=n_leaves {
            for l in 1..=n {
                let t = trees_by_leaves(l);
                if !t.is_zero() {
                    next[n] += t * &row[n - l];
                }
            }
        }
        row = next;
    }
    row[n_leaves].clone()
}

/// Number of forests with `n` leaves and any number of roots.
pub fn count_forests(n_leaves: usize) -> BigUint {
    (1..=n_leaves).map(|m| count_s(m, n_leaves)).sum()
}

/// Trees with exactly `leaves` leaves and height at most `cap`.
fn bounded_tree_table(max_leaves: usize, cap: usize) -> Vec<Vec<BigUint>> {
    // table[k][l] = trees with l leaves, height <= k
    let mut table = vec![vec![BigUint::zero(); max_leaves + 1]; cap + 1];
    for k in 0..=cap {
        if max_leaves >= 1 {
            table[k][1] = BigUint::one();
        }
        if k == 0 {
            continue;
        }
        for l in 2..=max_leaves {
            let mut total = BigUint::zero();
            for a in 1..l {
                total += &table[k - 1][a] * &table[k - 1][l - a];
            }
            table[k][l] = total;
        }
    }
    table
}

/// Number of marked forests with `n_leaves` leaves whose trees all have height
/// at most `height_cap`; each forest is counted once per tree it contains.
pub fn count_bb(n_leaves: usize, height_cap: usize) -> BigUint {
    if n_leaves == 0 {
        return BigUint::zero();
    }
    let trees = bounded_tree_table(n_leaves, height_cap);
    let th = &trees[height_cap];
    // g[j][n] = forests with j trees, n leaves, heights within the cap
    let mut g = vec![vec![BigUint::zero(); n_leaves + 1]; n_leaves + 1];
    g[0][0] = BigUint::one();
    for j in 1..=n_leaves {
        for n in 1..=n_leaves {
            let mut total = BigUint::zero();
            for l in 1..=n {
                total += &th[l] * &g[j - 1][n - l];
            }
            g[j][n] = total;
        }
    }
    (1..=n_leaves)
        .map(|j| BigUint::from(j) * &g[j][n_leaves])
        .sum()
}

fn guard(count: &BigUint, what: &str) -> Result<()> {
    if count > &BigUint::from(ENUMERATION_LIMIT) {
        Err(Error::ResourceLimit(format!(
            "enumerating {what} would produce {count} items (limit {ENUMERATION_LIMIT})"
        )))
    } else {
        Ok(())
    }
}

fn trees_with_carets(n: usize) -> Vec<BinaryTree> {
    if n == 0 {
        return vec![BinaryTree::Leaf];
    }
    let mut out = Vec::new();
    for i in 0..n {
        for left in trees_with_carets(i) {
            for right in trees_with_carets(n - 1 - i) {
                out.push(BinaryTree::caret(left.clone(), right));
            }
        }
    }
    out
}

/// Trees with `height <= cap` and exactly `leaves` leaves.
fn bounded_trees(leaves: usize, cap: usize) -> Vec<BinaryTree> {
    if leaves == 1 {
        return vec![BinaryTree::Leaf];
    }
    if cap == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for a in 1..leaves {
        for left in bounded_trees(a, cap - 1) {
            for right in bounded_trees(leaves - a, cap - 1) {
                out.push(BinaryTree::caret(left.clone(), right));
            }
        }
    }
    out
}

/// All trees with exactly `n_carets` carets, duplicate-free, in a fixed order.
pub fn enumerate_trees(n_carets: usize) -> Result<Vec<BinaryTree>> {
    guard(&count_trees(n_carets), "trees")?;
    Ok(trees_with_carets(n_carets))
}

fn forests_with(m_roots: usize, n_leaves: usize, height_cap: Option<usize>) -> Vec<Forest> {
    fn rec(roots: usize, leaves: usize, cap: Option<usize>) -> Vec<Vec<BinaryTree>> {
        if roots == 0 {
            return if leaves == 0 { vec![Vec::new()] } else { Vec::new() };
        }
        let mut out = Vec::new();
        // the remaining roots need at least one leaf each
        for l in 1..=leaves.saturating_sub(roots - 1) {
            let trees = match cap {
                Some(k) => bounded_trees(l, k),
                None => trees_with_carets(l - 1),
            };
            for tree in trees {
                for rest in rec(roots - 1, leaves - l, cap) {
                    let mut forest = Vec::with_capacity(roots);
                    forest.push(tree.clone());
                    forest.extend(rest);
                    out.push(forest);
                }
            }
        }
        out
    }
    rec(m_roots, n_leaves, height_cap)
        .into_iter()
        .map(|trees| Forest { trees })
        .collect()
}

/// All forests with `m_roots` trees and `n_leaves` leaves.
pub fn enumerate_s(m_roots: usize, n_leaves: usize) -> Result<Vec<Forest>> {
    guard(&count_s(m_roots, n_leaves), "forests")?;
    Ok(forests_with(m_roots, n_leaves, None))
}

/// All forests with `n_leaves` leaves, ordered by root count.
pub fn enumerate_forests(n_leaves: usize) -> Result<Vec<Forest>> {
    guard(&count_forests(n_leaves), "forests")?;
    let mut out = Vec::new();
    for m in 1..=n_leaves {
        out.extend(forests_with(m, n_leaves, None));
    }
    Ok(out)
}

/// All marked forests with `n_leaves` leaves and every tree height at most
/// `height_cap`; each underlying forest appears once per choice of mark.
pub fn enumerate_bb(n_leaves: usize, height_cap: usize) -> Result<Vec<MarkedForest>> {
    guard(&count_bb(n_leaves, height_cap), "marked forests")?;
    let mut out = Vec::new();
    for m in 1..=n_leaves {
        for forest in forests_with(m, n_leaves, Some(height_cap)) {
            for mark in 0..forest.roots() {
                out.push(MarkedForest {
                    forest: forest.clone(),
                    mark,
                });
            }
        }
    }
    Ok(out)
}

fn graft(tree: &BinaryTree, supply: &mut std::slice::Iter<'_, BinaryTree>) -> BinaryTree {
    match tree {
        BinaryTree::Leaf => supply.next().expect("leaf counts agree").clone(),
        BinaryTree::Caret(l, r) => {
            let left = graft(l, supply);
            let right = graft(r, supply);
            BinaryTree::caret(left, right)
        }
    }
}

/// Grafts the trees of `bottom` onto the leaves of `top` in left-to-right
/// order; requires `leaves(top) = roots(bottom)`.
pub fn compose(top: &Forest, bottom: &Forest) -> Result<Forest> {
    if top.leaves() != bottom.roots() {
        return Err(Error::SizeMismatch(format!(
            "cannot graft {} trees onto {} leaves",
            bottom.roots(),
            top.leaves()
        )));
    }
    let mut supply = bottom.trees.iter();
    let trees = top.trees.iter().map(|t| graft(t, &mut supply)).collect();
    Ok(Forest { trees })
}

fn write_tree(tree: &BinaryTree, out: &mut String) {
    out.push('(');
    if let BinaryTree::Caret(l, r) = tree {
        write_tree(l, out);
        write_tree(r, out);
    }
    out.push(')');
}

impl fmt::Display for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        write_tree(self, &mut s);
        f.write_str(&s)
    }
}

impl fmt::Display for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, tree) in self.trees.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{tree}")?;
        }
        Ok(())
    }
}

impl fmt::Display for MarkedForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, tree) in self.forest.trees.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            if i == self.mark {
                f.write_str("*")?;
            }
            write!(f, "{tree}")?;
        }
        Ok(())
    }
}

fn parse_tree_bytes(bytes: &[u8], pos: &mut usize) -> Result<BinaryTree> {
    let syntax = |pos: usize, message: &str| Error::Syntax {
        position: pos,
        message: message.into(),
    };
    if bytes.get(*pos) != Some(&b'(') {
        return Err(syntax(*pos, "expected '('"));
    }
    *pos += 1;
    if bytes.get(*pos) == Some(&b')') {
        *pos += 1;
        return Ok(BinaryTree::Leaf);
    }
    let left = parse_tree_bytes(bytes, pos)?;
    let right = parse_tree_bytes(bytes, pos)?;
    if bytes.get(*pos) != Some(&b')') {
        return Err(syntax(*pos, "expected ')'"));
    }
    *pos += 1;
    Ok(BinaryTree::caret(left, right))
}

/// Parses one balanced-parenthesis tree, e.g. `(()())`.
pub fn parse_tree(text: &str) -> Result<BinaryTree> {
    let bytes = text.trim().as_bytes();
    let mut pos = 0;
    let tree = parse_tree_bytes(bytes, &mut pos)?;
    if pos != bytes.len() {
        return Err(Error::Syntax {
            position: pos,
            message: "trailing input after tree".into(),
        });
    }
    Ok(tree)
}

/// Parses a comma-separated forest with an optional `*`-marked tree.
pub fn parse_marked_forest(text: &str) -> Result<(Forest, Option<usize>)> {
    let mut trees = Vec::new();
    let mut mark = None;
    for (i, part) in text.trim().split(',').enumerate() {
        let part = part.trim();
        let part = if let Some(rest) = part.strip_prefix('*') {
            if mark.replace(i).is_some() {
                return Err(Error::Syntax {
                    position: 0,
                    message: "more than one marked tree".into(),
                });
            }
            rest
        } else {
            part
        };
        trees.push(parse_tree(part)?);
    }
    Ok((Forest::new(trees)?, mark))
}

/// Parses a comma-separated forest; rejects marks.
pub fn parse_forest(text: &str) -> Result<Forest> {
    let (forest, mark) = parse_marked_forest(text)?;
    if mark.is_some() {
        return Err(Error::Syntax {
            position: 0,
            message: "unexpected mark in an unmarked forest".into(),
        });
    }
    Ok(forest)
}
