//! From group relations to equation solutions.
//!
//! A word in `x0^(+-1), x1^(+-1)` that reduces to the identity is telescoped
//! into formal sums `U`, `V` over the group with
//! `(1 - x0) U + (1 - x1) V = 0`; translating their supports into the
//! positive monoid turns the pair into polynomials solving
//! `(1 - x0) u = (1 - x1) v`.

use crate::error::{Error, Result};
use crate::field::{FieldElem, FieldTag};
use crate::group::{gig_translate, reduce_word, GroupElement, Letter};
use crate::monoid::Monomial;
use crate::ring::Polynomial;
use crate::solve::PairSolution;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

/// A finite formal sum of group elements with field coefficients; zero
/// coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalSum {
    terms: BTreeMap<GroupElement, FieldElem>,
    field: FieldTag,
}

impl FormalSum {
    pub fn zero(field: FieldTag) -> Self {
        FormalSum {
            terms: BTreeMap::new(),
            field,
        }
    }

    /// The single element `g` with coefficient 1.
    pub fn element(field: FieldTag, g: GroupElement) -> Self {
        let mut s = FormalSum::zero(field);
        s.add_term(g, FieldElem::one(field));
        s
    }

    pub fn field(&self) -> FieldTag {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GroupElement, &FieldElem)> {
        self.terms.iter()
    }

    /// The group elements carrying nonzero coefficients.
    pub fn support(&self) -> Vec<GroupElement> {
        self.terms.keys().cloned().collect()
    }

    fn add_term(&mut self, g: GroupElement, c: FieldElem) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(g) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = &*e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// `g * self`: every basis element is multiplied by `g` on the left.
    pub fn left_mul(&self, g: &GroupElement) -> FormalSum {
        let mut out = FormalSum::zero(self.field);
        for (e, c) in &self.terms {
            out.add_term(g.mul(e), c.clone());
        }
        out
    }

    /// `self * g`: every basis element is multiplied by `g` on the right.
    pub fn right_mul(&self, g: &GroupElement) -> FormalSum {
        let mut out = FormalSum::zero(self.field);
        for (e, c) in &self.terms {
            out.add_term(e.mul(g), c.clone());
        }
        out
    }

    /// `(1 - x_i) * self`.
    pub fn one_minus_left(&self, i: u32) -> FormalSum {
        self - &self.left_mul(&GroupElement::generator(i))
    }

    /// Reads the sum as a polynomial over the positive monoid; fails if any
    /// basis element has a nontrivial denominator.
    pub fn to_polynomial(&self) -> Result<Polynomial> {
        let mut p = Polynomial::zero(self.field);
        for (e, c) in &self.terms {
            if !e.is_positive() {
                return Err(Error::PreconditionViolated(format!(
                    "formal sum contains the non-positive element {e}"
                )));
            }
            p += &Polynomial::from_terms(self.field, [(e.p().clone(), c.clone())])?;
        }
        Ok(p)
    }
}

impl Add for &FormalSum {
    type Output = FormalSum;
    fn add(self, rhs: &FormalSum) -> FormalSum {
        assert_eq!(self.field, rhs.field, "formal sums over different fields");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &FormalSum {
    type Output = FormalSum;
    fn sub(self, rhs: &FormalSum) -> FormalSum {
        assert_eq!(self.field, rhs.field, "formal sums over different fields");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

impl Neg for &FormalSum {
    type Output = FormalSum;
    fn neg(self) -> FormalSum {
        let mut out = FormalSum::zero(self.field);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

impl fmt::Display for FormalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (pos, (e, c)) in self.terms().enumerate() {
            if pos == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            if e.is_identity() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "({e})")?;
            } else {
                write!(f, "{mag}*({e})")?;
            }
        }
        Ok(())
    }
}

/// Telescopes a word `a_1 ... a_n` over `x0^(+-1), x1^(+-1)` into formal sums
/// `(U, V)` sorted by generator: with `s_t = a_(t+1) ... a_n` the suffix
/// after position t, `U` collects `+s_t` for each letter `x0` and `-s_(t-1)`
/// for each `x0^-1`, and `V` does the same for index 1. The exact identity
/// `(1 - x0) U + (1 - x1) V = 1 - reduce(w)` is re-checked before returning;
/// for a relation word the right side is zero.
pub fn telescope(word: &[Letter], field: FieldTag) -> Result<(FormalSum, FormalSum)> {
    for l in word {
        if l.index > 1 {
            return Err(Error::UnsupportedGenerator(format!(
                "telescoping is defined for x0 and x1 only, found index {}",
                l.index
            )));
        }
    }
    let mut buckets = [FormalSum::zero(field), FormalSum::zero(field)];
    let mut suffix = GroupElement::identity();
    for letter in word.iter().rev() {
        let g = if letter.inverse {
            GroupElement::generator(letter.index).inverse()
        } else {
            GroupElement::generator(letter.index)
        };
        if letter.inverse {
            // s_(t-1) = a_t * s_t, subtracted from the bucket.
            suffix = g.mul(&suffix);
            let term = FormalSum::element(field, suffix.clone());
            buckets[letter.index as usize] = &buckets[letter.index as usize] - &term;
        } else {
            let term = FormalSum::element(field, suffix.clone());
            buckets[letter.index as usize] = &buckets[letter.index as usize] + &term;
            suffix = g.mul(&suffix);
        }
    }
    let [u, v] = buckets;
    let lhs = &u.one_minus_left(0) + &v.one_minus_left(1);
    let mut rhs = FormalSum::element(field, GroupElement::identity());
    rhs = &rhs - &FormalSum::element(field, reduce_word(word));
    if lhs != rhs {
        return Err(Error::AssertionFailure(
            "telescoping identity failed".into(),
        ));
    }
    Ok((u, v))
}

/// Turns a relation word (a word reducing to the identity) into a verified
/// solution of `(1 - x0) u = (1 - x1) v`.
///
/// The telescoped sums satisfy `(1 - x0) U = (1 - x1)(-V)` over the group;
/// one common positive right translate `g` (the least-common-multiple fold
/// over both supports) moves every basis element into the positive monoid,
/// and `(u, v) = (U g, -V g)`.
pub fn relation_to_solution(word: &[Letter], field: FieldTag) -> Result<PairSolution> {
    if !reduce_word(word).is_identity() {
        return Err(Error::NotARelation);
    }
    let (big_u, big_v) = telescope(word, field)?;
    if big_u.is_zero() && big_v.is_zero() {
        return Err(Error::DegenerateRelation);
    }
    let mut support = big_u.support();
    support.extend(big_v.support());
    let (g, _) = gig_translate(&support);
    let shift = GroupElement::from_monomial(g);
    let u = big_u.right_mul(&shift).to_polynomial()?;
    let v = (-&big_v).right_mul(&shift).to_polynomial()?;
    let lhs = &Polynomial::one_minus(field, 0) * &u;
    if lhs != &Polynomial::one_minus(field, 1) * &v {
        return Err(Error::AssertionFailure(
            "translated pair fails the defining identity".into(),
        ));
    }
    Ok(PairSolution { u, v })
}

/// The relation word of `x1^(x0^k) = x1^(w)` for a positive word `w`, i.e.
/// `x0^-k x1 x0^k * w^-1 x1^-1 w`, useful for building test relations.
pub fn conjugation_relation(k: usize, w: &Monomial) -> Vec<Letter> {
    let mut word: Vec<Letter> = Vec::new();
    word.extend(std::iter::repeat(Letter::inv(0)).take(k));
    word.push(Letter::pos(1));
    word.extend(std::iter::repeat(Letter::pos(0)).take(k));
    word.extend(w.indices().iter().rev().map(|&i| Letter::inv(i)));
    word.push(Letter::inv(1));
    word.extend(w.indices().iter().map(|&i| Letter::pos(i)));
    word
}
