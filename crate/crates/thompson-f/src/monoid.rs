//! The positive monoid: words in generators `x0, x1, x2, ...` subject to
//! `x_j * x_i = x_i * x_{j+1}` for `i < j`.
//!
//! Every element has a unique normal form whose generator indices are
//! nondecreasing; [`Monomial`] stores exactly that sorted index sequence.

use crate::error::{Error, Result};
use std::cmp::Ordering;

/// A monoid element in normal form: a nondecreasing sequence of generator indices.
/// The empty sequence is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    indices: Vec<u32>,
}

impl Monomial {
    pub fn identity() -> Self {
        Monomial { indices: Vec::new() }
    }

    /// The generator `x_i`.
    pub fn generator(i: u32) -> Self {
        Monomial { indices: vec![i] }
    }

    /// `x_i^k`.
    pub fn power(i: u32, k: usize) -> Self {
        Monomial { indices: vec![i; k] }
    }

    /// Normal form of an arbitrary word (letters read left to right).
    pub fn normalize(word: &[u32]) -> Self {
        let mut out = Monomial::identity();
        for &j in word {
            out.insert_letter(j);
        }
        out
    }

    /// Wraps an already-sorted index sequence. Panics if unsorted.
    pub fn from_sorted(indices: Vec<u32>) -> Self {
        assert!(
            indices.windows(2).all(|w| w[0] <= w[1]),
            "index sequence must be nondecreasing"
        );
        Monomial { indices }
    }

    pub fn indices(&self) -> &[u32] {
        &self.indices
    }

    /// Appends one letter on the right and restores the normal form.
    ///
    /// The incoming letter `j` commutes left past every letter `a > j`,
    /// turning each such `a` into `a + 1` (one application of the defining
    /// relation per passed letter).
    fn insert_letter(&mut self, j: u32) {
        let pos = self.indices.partition_point(|&a| a <= j);
        for a in &mut self.indices[pos..] {
            *a += 1;
        }
        self.indices.insert(pos, j);
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = self.clone();
        for &j in &other.indices {
            out.insert_letter(j);
        }
        out
    }

    /// Word length. The identity has degree 0.
    pub fn degree(&self) -> usize {
        self.indices.len()
    }

    pub fn is_identity(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn min_index(&self) -> Option<u32> {
        self.indices.first().copied()
    }

    pub fn max_index(&self) -> Option<u32> {
        self.indices.last().copied()
    }

    /// True when every letter has index >= i (vacuously true for the identity).
    pub fn in_sub_mi(&self, i: u32) -> bool {
        self.min_index().map_or(true, |m| m >= i)
    }

    /// Adds `s` to every index. The identity is fixed.
    pub fn shift_up(&self, s: u32) -> Monomial {
        Monomial {
            indices: self.indices.iter().map(|&a| a + s).collect(),
        }
    }

    /// Subtracts `s` from every index; fails with `MinIndexZero` if any index
    /// would drop below zero.
    pub fn shift_down(&self, s: u32) -> Result<Monomial> {
        if s == 0 {
            return Ok(self.clone());
        }
        if self.indices.iter().any(|&a| a < s) {
            return Err(Error::MinIndexZero);
        }
        Ok(Monomial {
            indices: self.indices.iter().map(|&a| a - s).collect(),
        })
    }

    /// Signed shift; negative values shift down and may fail.
    pub fn shift(&self, s: i64) -> Result<Monomial> {
        if s >= 0 {
            Ok(self.shift_up(u32::try_from(s).map_err(|_| {
                Error::ResourceLimit(format!("shift amount {s} out of range"))
            })?))
        } else {
            self.shift_down(u32::try_from(-s).map_err(|_| {
                Error::ResourceLimit(format!("shift amount {s} out of range"))
            })?)
        }
    }

    /// Splits off the maximal `x0` prefix: returns `(t, rest)` with
    /// `self = x0^t * rest` and `rest` free of `x0`.
    pub fn x0_split(&self) -> (usize, Monomial) {
        let t = self.indices.partition_point(|&a| a == 0);
        (
            t,
            Monomial {
                indices: self.indices[t..].to_vec(),
            },
        )
    }
}

/// Graded lexicographic order: shorter words first, ties broken by the
/// index sequence. This is a total order compatible with the grading.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.indices.cmp(&other.indices))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All normal forms of the given degree with every index <= max_index,
/// in lexicographic order. Used by search supports and test oracles.
pub fn monomials_of_degree(degree: usize, max_index: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(degree);
    fn rec(cur: &mut Vec<u32>, remaining: usize, lo: u32, hi: u32, out: &mut Vec<Monomial>) {
        if remaining == 0 {
            out.push(Monomial::from_sorted(cur.clone()));
            return;
        }
        for i in lo..=hi {
            cur.push(i);
            rec(cur, remaining - 1, i, hi, out);
            cur.pop();
        }
    }
    rec(&mut cur, degree, 0, max_index, &mut out);
    out
}

/// All normal forms with degree <= max_degree and index <= max_index,
/// in graded lexicographic order.
pub fn monomials_up_to(max_degree: usize, max_index: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for d in 0..=max_degree {
        out.extend(monomials_of_degree(d, max_index));
    }
    out
}
