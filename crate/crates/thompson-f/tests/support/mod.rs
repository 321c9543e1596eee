//! Shared helpers for the integration suites: seeded random generators and
//! independent brute-force oracles the library code never touches.
#![allow(dead_code)] // each test binary uses its own subset

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thompson_f::group::GroupElement;
use thompson_f::{FieldElem, FieldTag, Letter, Monomial, Polynomial};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_word_letters(rng: &mut ChaCha8Rng, len: usize, max_index: u32) -> Vec<u32> {
    (0..len).map(|_| rng.gen_range(0..=max_index)).collect()
}

pub fn random_monomial(rng: &mut ChaCha8Rng, max_degree: usize, max_index: u32) -> Monomial {
    let degree = rng.gen_range(0..=max_degree);
    Monomial::normalize(&random_word_letters(rng, degree, max_index))
}

/// A random polynomial with small integer (or reduced modular) coefficients;
/// may collapse to fewer terms, never to zero unless `terms` is 0.
pub fn random_poly(
    rng: &mut ChaCha8Rng,
    tag: FieldTag,
    terms: usize,
    max_degree: usize,
    max_index: u32,
) -> Polynomial {
    let mut p = Polynomial::zero(tag);
    for _ in 0..terms {
        let c = loop {
            let c = rng.gen_range(-4i64..=4);
            if c != 0 {
                break c;
            }
        };
        let m = random_monomial(rng, max_degree, max_index);
        let term = Polynomial::monomial(tag, m).scale(&FieldElem::integer(tag, c));
        p = &p + &term;
    }
    p
}

pub fn random_nonzero_poly(
    rng: &mut ChaCha8Rng,
    tag: FieldTag,
    terms: usize,
    max_degree: usize,
    max_index: u32,
) -> Polynomial {
    loop {
        let p = random_poly(rng, tag, terms.max(1), max_degree, max_index);
        if !p.is_zero() {
            return p;
        }
    }
}

pub fn random_group_word(rng: &mut ChaCha8Rng, len: usize, max_index: u32) -> Vec<Letter> {
    (0..len)
        .map(|_| {
            let index = rng.gen_range(0..=max_index);
            if rng.gen_bool(0.5) {
                Letter::pos(index)
            } else {
                Letter::inv(index)
            }
        })
        .collect()
}

/// Stepwise rewriting oracle: applies the single rule
/// `x_j x_i -> x_i x_(j+1)` (for adjacent letters with j > i) at a randomly
/// chosen violating position until none remains. Confluence means the result
/// is independent of those choices and equal to `Monomial::normalize`.
pub fn normalize_by_random_steps(rng: &mut ChaCha8Rng, word: &[u32]) -> Monomial {
    let mut w = word.to_vec();
    loop {
        let violations: Vec<usize> = (0..w.len().saturating_sub(1))
            .filter(|&k| w[k] > w[k + 1])
            .collect();
        match violations.as_slice() {
            [] => return Monomial::from_sorted(w),
            vs => {
                let k = vs[rng.gen_range(0..vs.len())];
                let (j, i) = (w[k], w[k + 1]);
                w[k] = i;
                w[k + 1] = j + 1;
            }
        }
    }
}

/// Left-divisibility of monomials through group reduction: `a` divides `m`
/// on the left iff `a^-1 m` is positive.
pub fn divides(a: &Monomial, m: &Monomial) -> bool {
    let a_inv = GroupElement::from_monomial(a.clone()).inverse();
    let m_pos = GroupElement::from_monomial(m.clone());
    a_inv.mul(&m_pos).is_positive()
}

/// All common right multiples of `a` and `b` with degree below `below` and
/// all letter indices at most `max_index`, found by enumerating the
/// multipliers of `a` directly.
pub fn common_multiples_below(
    a: &Monomial,
    b: &Monomial,
    below: usize,
    max_index: u32,
) -> Vec<Monomial> {
    let mut found = Vec::new();
    if a.degree() >= below {
        return found;
    }
    for extra in 0..(below - a.degree()) {
        for w in thompson_f::monoid::monomials_of_degree(extra, max_index) {
            let m = a.mul(&w);
            if m.degree() < below && divides(b, &m) {
                found.push(m);
            }
        }
    }
    found
}

/// Inserts `insert` into `host` at position `at`.
pub fn splice(host: &[Letter], at: usize, insert: &[Letter]) -> Vec<Letter> {
    let mut word = host[..at].to_vec();
    word.extend_from_slice(insert);
    word.extend_from_slice(&host[at..]);
    word
}

/// The two shortest defining relators in the letters x0, x1.
pub fn defining_relators() -> Vec<Vec<Letter>> {
    let parse = |text: &str| thompson_f::text::parse_word(text).expect("relator text");
    vec![
        parse("X0*X0*x1*x0*x0*X1*X0*X1*x0*x1"),
        parse("X0*X0*X0*x1*x0*x0*x0*X1*X0*X0*X1*x0*x0*x1"),
    ]
}

/// A conjugate or inverse of a defining relator, still a relator.
pub fn random_relator(rng: &mut ChaCha8Rng) -> Vec<Letter> {
    let relators = defining_relators();
    let mut word = relators[rng.gen_range(0..relators.len())].clone();
    if rng.gen_bool(0.5) {
        word = word.iter().rev().map(|l| l.opposite()).collect();
    }
    let conj_len = rng.gen_range(0..=3);
    let conj = random_group_word(rng, conj_len, 2);
    let mut out: Vec<Letter> = conj.iter().map(|l| l.opposite()).rev().collect();
    out.extend_from_slice(&word);
    out.extend_from_slice(&conj);
    out
}
