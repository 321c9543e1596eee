//! The monoid ring: finite sums of monomials with coefficients in a field.
//!
//! Terms are kept in a BTreeMap keyed by the graded-lex monomial order, so
//! iteration (and hence printing) is canonical, and zero coefficients are
//! never stored.

use crate::error::{Error, Result};
use crate::field::{FieldElem, FieldTag};
use crate::monoid::Monomial;
use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, FieldElem>,
    field: FieldTag,
}

impl Polynomial {
    pub fn zero(field: FieldTag) -> Self {
        Polynomial { terms: BTreeMap::new(), field }
    }

    pub fn one(field: FieldTag) -> Self {
        Polynomial::constant(field, 1)
    }

    pub fn constant(field: FieldTag, n: i64) -> Self {
        let mut p = Polynomial::zero(field);
        p.add_term(Monomial::identity(), FieldElem::integer(field, n));
        p
    }

    pub fn monomial(field: FieldTag, m: Monomial) -> Self {
        let mut p = Polynomial::zero(field);
        p.add_term(m, FieldElem::one(field));
        p
    }

    pub fn generator(field: FieldTag, i: u32) -> Self {
        Polynomial::monomial(field, Monomial::generator(i))
    }

    /// `1 - x_i`, the left factors appearing throughout the equation solvers.
    pub fn one_minus(field: FieldTag, i: u32) -> Self {
        let mut p = Polynomial::one(field);
        p.add_term(Monomial::generator(i), FieldElem::integer(field, -1));
        p
    }

    /// `1 + x0 + ... + x0^(t-1)`; the empty sum for t = 0.
    pub fn x0_geometric(field: FieldTag, t: usize) -> Self {
        let mut p = Polynomial::zero(field);
        for k in 0..t {
            p.add_term(Monomial::power(0, k), FieldElem::one(field));
        }
        p
    }

    pub fn from_terms<I>(field: FieldTag, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, FieldElem)>,
    {
        let mut p = Polynomial::zero(field);
        for (m, c) in terms {
            if c.tag() != field {
                return Err(Error::FieldMismatch(format!(
                    "coefficient in {} cannot enter a polynomial over {}",
                    c.tag(),
                    field
                )));
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn field(&self) -> FieldTag {
        self.field
    }

    /// Transports every coefficient into another field; see
    /// [`FieldElem::map_field`]. Terms whose coefficient reduces to zero
    /// (possible mod p) are dropped.
    pub fn map_field(&self, tag: FieldTag) -> Result<Polynomial> {
        let mut out = Polynomial::zero(tag);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.map_field(tag)?);
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &FieldElem)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> FieldElem {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| FieldElem::zero(self.field))
    }

    fn add_term(&mut self, m: Monomial, c: FieldElem) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
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

    /// Degree of the highest term; the zero polynomial has no degree.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next_back().map(|m| m.degree())
    }

    /// Some(d) when nonzero and every term has degree d.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let d = self.degree()?;
        if self.terms.keys().all(|m| m.degree() == d) {
            Some(d)
        } else {
            None
        }
    }

    /// Smallest and largest generator index occurring in any term, if any
    /// letters occur at all (a nonzero constant has none).
    pub fn letter_range(&self) -> Option<(u32, u32)> {
        let mut range: Option<(u32, u32)> = None;
        for m in self.terms.keys() {
            if let (Some(lo), Some(hi)) = (m.min_index(), m.max_index()) {
                range = Some(match range {
                    None => (lo, hi),
                    Some((a, b)) => (a.min(lo), b.max(hi)),
                });
            }
        }
        range
    }

    /// Width of the occupied index window; 0 when no letters occur.
    pub fn index_span(&self) -> u32 {
        self.letter_range().map_or(0, |(lo, hi)| hi - lo)
    }

    /// True when every monomial uses only generators with index >= i.
    pub fn in_sub_mi(&self, i: u32) -> bool {
        self.terms.keys().all(|m| m.in_sub_mi(i))
    }

    pub fn scale(&self, c: &FieldElem) -> Polynomial {
        assert_eq!(c.tag(), self.field, "scalar from a different field");
        let mut out = Polynomial::zero(self.field);
        if c.is_zero() {
            return out;
        }
        for (m, a) in &self.terms {
            out.add_term(m.clone(), a * c);
        }
        out
    }

    pub fn shift_up(&self, s: u32) -> Polynomial {
        let mut out = Polynomial::zero(self.field);
        for (m, c) in &self.terms {
            out.add_term(m.shift_up(s), c.clone());
        }
        out
    }

    pub fn shift_down(&self, s: u32) -> Result<Polynomial> {
        let mut out = Polynomial::zero(self.field);
        for (m, c) in &self.terms {
            out.add_term(m.shift_down(s)?, c.clone());
        }
        Ok(out)
    }

    /// Applies the index-shift endomorphism `x_i -> x_(i+s)` termwise;
    /// negative shifts fail with `MinIndexZero` when an `x_0` is present.
    pub fn shift(&self, s: i64) -> Result<Polynomial> {
        if s >= 0 {
            Ok(self.shift_up(s as u32))
        } else {
            self.shift_down((-s) as u32)
        }
    }

    /// Homogeneous parts in strictly increasing degree. Rejects zero input.
    pub fn homogeneous_components(&self) -> Result<Vec<Polynomial>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut by_degree: BTreeMap<usize, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            by_degree
                .entry(m.degree())
                .or_insert_with(|| Polynomial::zero(self.field))
                .add_term(m.clone(), c.clone());
        }
        Ok(by_degree.into_values().collect())
    }

    /// The degree-d homogeneous part (possibly zero).
    pub fn homogeneous_part(&self, d: usize) -> Polynomial {
        let mut out = Polynomial::zero(self.field);
        for (m, c) in &self.terms {
            if m.degree() == d {
                out.add_term(m.clone(), c.clone());
            }
        }
        out
    }

    /// Writes `self = sum_t x0^t * parts[t]` with every part free of `x0`.
    /// The zero polynomial yields an empty list.
    pub fn x0_decompose(&self) -> Vec<Polynomial> {
        let mut parts: Vec<Polynomial> = Vec::new();
        for (m, c) in &self.terms {
            let (t, rest) = m.x0_split();
            if parts.len() <= t {
                parts.resize_with(t + 1, || Polynomial::zero(self.field));
            }
            parts[t].add_term(rest, c.clone());
        }
        parts
    }

    /// Inverse of [`x0_decompose`]: `sum_t x0^t * parts[t]`.
    pub fn from_x0_parts(field: FieldTag, parts: &[Polynomial]) -> Polynomial {
        let mut acc = Polynomial::zero(field);
        for (t, part) in parts.iter().enumerate() {
            let pre = Polynomial::monomial(field, Monomial::power(0, t));
            acc += &(&pre * part);
        }
        acc
    }

    fn check_same(&self, other: &Polynomial) {
        assert_eq!(
            self.field, other.field,
            "polynomials over different fields combined; validate tags at the boundary"
        );
    }
}

/// Checks that all inputs share one coefficient field and returns it.
/// This is the fallible face of the panicking operator arithmetic.
pub fn same_field(polys: &[&Polynomial]) -> Result<FieldTag> {
    let first = polys
        .first()
        .ok_or_else(|| Error::EmptySupport("no polynomials given".into()))?
        .field();
    for p in polys {
        if p.field() != first {
            return Err(Error::FieldMismatch(format!(
                "{} vs {}",
                first,
                p.field()
            )));
        }
    }
    Ok(first)
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.check_same(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.check_same(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let mut out = Polynomial::zero(self.field);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.check_same(rhs);
        let mut out = Polynomial::zero(self.field);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        self.check_same(rhs);
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        self.check_same(rhs);
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

/// Solves `(1 - x_i) * Q = P` for Q degree by degree and checks the result
/// exactly; fails with `NotDivisible` when no quotient exists.
pub fn one_minus_left_divide(p: &Polynomial, i: u32) -> Result<Polynomial> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let xi = Polynomial::generator(p.field(), i);
    let n = p.degree().expect("nonzero");
    // Q_d = P_d + x_i * Q_(d-1): the quotient's degree-d part, for d < n.
    let mut q = Polynomial::zero(p.field());
    let mut prev = Polynomial::zero(p.field());
    for d in 0..n {
        let qd = &p.homogeneous_part(d) + &(&xi * &prev);
        q += &qd;
        prev = qd;
    }
    let check = &(&Polynomial::one(p.field()) - &xi) * &q;
    if check == *p {
        Ok(q)
    } else {
        Err(Error::NotDivisible(format!(
            "1 - x{i} does not left-divide the given polynomial"
        )))
    }
}

/// For `v` homogeneous of degree d whose letters all have smaller index than
/// every letter of `w`, the products `w * v` and `v * shift(w, d)` coincide;
/// returns that common value after checking it.
pub fn shift_commute(w: &Polynomial, v: &Polynomial) -> Result<Polynomial> {
    w.check_same(v);
    let d = v.homogeneous_degree().ok_or_else(|| {
        Error::PreconditionViolated("v must be nonzero homogeneous".into())
    })?;
    if let (Some((wlo, _)), Some((_, vhi))) = (w.letter_range(), v.letter_range()) {
        if wlo <= vhi {
            return Err(Error::PreconditionViolated(format!(
                "letters of w (min index {wlo}) must lie strictly above letters of v (max index {vhi})"
            )));
        }
    }
    let lhs = w * v;
    let rhs = v * &w.shift_up(d as u32);
    if lhs != rhs {
        return Err(Error::AssertionFailure(
            "commutation identity failed despite satisfied preconditions".into(),
        ));
    }
    Ok(lhs)
}
