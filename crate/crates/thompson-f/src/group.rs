//! The group of fractions of the positive monoid: every element is `p * q^-1`
//! with `p`, `q` positive normal forms, reduced so that whenever an index `i`
//! occurs in both parts, `i + 1` occurs in one of them. Reduced pairs are
//! unique, so equality is structural.

use crate::monoid::Monomial;

/// One letter of a group word: a generator index and an inversion flag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub index: u32,
    pub inverse: bool,
}

impl Letter {
    pub fn pos(index: u32) -> Letter {
        Letter { index, inverse: false }
    }

    pub fn inv(index: u32) -> Letter {
        Letter { index, inverse: true }
    }

    pub fn opposite(self) -> Letter {
        Letter {
            index: self.index,
            inverse: !self.inverse,
        }
    }
}

/// An unreduced word in the group generators.
pub type GroupWord = Vec<Letter>;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    p: Monomial,
    q: Monomial,
}

impl GroupElement {
    pub fn identity() -> Self {
        GroupElement {
            p: Monomial::identity(),
            q: Monomial::identity(),
        }
    }

    /// Embeds a positive element.
    pub fn from_monomial(p: Monomial) -> Self {
        GroupElement { p, q: Monomial::identity() }
    }

    /// The generator `x_n`. For n >= 2 this equals `x0^-(n-1) * x1 * x0^(n-1)`,
    /// which reduces back to the single positive letter.
    pub fn generator(n: u32) -> Self {
        GroupElement::from_monomial(Monomial::generator(n))
    }

    pub fn p(&self) -> &Monomial {
        &self.p
    }

    pub fn q(&self) -> &Monomial {
        &self.q
    }

    pub fn is_identity(&self) -> bool {
        self.p.is_identity() && self.q.is_identity()
    }

    /// Positive elements are exactly those with trivial denominator.
    pub fn is_positive(&self) -> bool {
        self.q.is_identity()
    }

    pub fn to_word(&self) -> GroupWord {
        let mut w: GroupWord = self.p.indices().iter().map(|&i| Letter::pos(i)).collect();
        w.extend(self.q.indices().iter().rev().map(|&i| Letter::inv(i)));
        w
    }

    pub fn inverse(&self) -> GroupElement {
        // the reducedness condition is symmetric in p and q
        GroupElement {
            p: self.q.clone(),
            q: self.p.clone(),
        }
    }

    pub fn mul(&self, other: &GroupElement) -> GroupElement {
        let mut w = self.to_word();
        w.extend(other.to_word());
        reduce_word(&w)
    }

    /// `other^-1 * self * other`.
    pub fn conjugate(&self, other: &GroupElement) -> GroupElement {
        other.inverse().mul(self).mul(other)
    }

    pub fn pow(&self, k: i32) -> GroupElement {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut acc = GroupElement::identity();
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }
}

/// Reduces an arbitrary word to the canonical fraction `p * q^-1`.
///
/// Stage one pushes every inverse letter to the right using
/// `x_a^-1 x_b = x_(b+1) x_a^-1` (a < b), `x_a^-1 x_b = x_b x_(a+1)^-1`
/// (a > b) and `x_a^-1 x_a = 1`. Stage two normalizes both halves and
/// cancels common letters until the pair is reduced.
pub fn reduce_word(word: &[Letter]) -> GroupElement {
    let mut pos: Vec<u32> = Vec::new();
    let mut neg: Vec<u32> = Vec::new(); // pending inverse letters, in word order
    for &letter in word {
        if letter.inverse {
            neg.push(letter.index);
        } else {
            // move the positive letter left across all pending inverses
            let mut b = letter.index;
            let mut survived = true;
            let mut i = neg.len();
            while i > 0 {
                i -= 1;
                let a = neg[i];
                if a == b {
                    neg.remove(i);
                    survived = false;
                    break;
                } else if a < b {
                    b += 1;
                } else {
                    neg[i] = a + 1;
                }
            }
            if survived {
                pos.push(b);
            }
        }
    }
    let p = Monomial::normalize(&pos);
    neg.reverse();
    let q = Monomial::normalize(&neg);
    cancel_pair(p, q)
}

/// Removes every violation of the reducedness condition, smallest index first.
fn cancel_pair(p: Monomial, q: Monomial) -> GroupElement {
    let mut p = p.indices().to_vec();
    let mut q = q.indices().to_vec();
    loop {
        let Some(i) = smallest_violation(&p, &q) else { break };
        remove_and_commute(&mut p, i);
        remove_and_commute(&mut q, i);
    }
    GroupElement {
        p: Monomial::from_sorted(p),
        q: Monomial::from_sorted(q),
    }
}

/// Smallest index present in both halves with `i + 1` present in neither.
fn smallest_violation(p: &[u32], q: &[u32]) -> Option<u32> {
    let mut a = 0usize;
    let mut b = 0usize;
    while a < p.len() && b < q.len() {
        match p[a].cmp(&q[b]) {
            std::cmp::Ordering::Less => a += 1,
            std::cmp::Ordering::Greater => b += 1,
            std::cmp::Ordering::Equal => {
                let i = p[a];
                if !contains(p, i + 1) && !contains(q, i + 1) {
                    return Some(i);
                }
                a += 1;
                b += 1;
            }
        }
    }
    None
}

fn contains(sorted: &[u32], x: u32) -> bool {
    sorted.binary_search(&x).is_ok()
}

/// Commutes the last occurrence of `x_i` to the right end of the word and
/// drops it there. Every passed letter has index >= i + 2 and loses 1.
fn remove_and_commute(word: &mut Vec<u32>, i: u32) {
    let pos = word.partition_point(|&a| a <= i) - 1;
    debug_assert_eq!(word[pos], i);
    word.remove(pos);
    for a in &mut word[pos..] {
        debug_assert!(*a >= i + 2);
        *a -= 1;
    }
}

/// Least common right multiple: reduce `a^-1 b` to `p * q^-1`; then
/// `a * p = b * q` is the lcm.
pub fn lcm(a: &Monomial, b: &Monomial) -> Monomial {
    let frac = GroupElement::from_monomial(a.clone())
        .inverse()
        .mul(&GroupElement::from_monomial(b.clone()));
    let m = a.mul(frac.p());
    assert_eq!(m, b.mul(frac.q()), "common multiple mismatch");
    m
}

/// Finds one positive `g` such that every `gs[t] * g` is positive, namely the
/// left-to-right lcm fold of the denominators; returns `g` together with the
/// positive parts of the translates.
pub fn gig_translate(gs: &[GroupElement]) -> (Monomial, Vec<Monomial>) {
    let mut g = Monomial::identity();
    for e in gs {
        g = lcm(&g, e.q());
    }
    let g_elem = GroupElement::from_monomial(g.clone());
    let translated = gs
        .iter()
        .map(|e| {
            let t = e.mul(&g_elem);
            assert!(t.is_positive(), "translate must be positive");
            t.p().clone()
        })
        .collect();
    (g, translated)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(letters: &[(u32, bool)]) -> GroupWord {
        letters
            .iter()
            .map(|&(i, inv)| Letter { index: i, inverse: inv })
            .collect()
    }

    fn elem(letters: &[(u32, bool)]) -> GroupElement {
        reduce_word(&w(letters))
    }

    #[test]
    fn basic_reductions() {
        let e = elem(&[(0, true), (1, false)]);
        assert_eq!(e.p().indices(), &[2]);
        assert_eq!(e.q().indices(), &[0]);
        assert!(elem(&[(0, false), (0, true)]).is_identity());
        assert!(elem(&[]).is_identity());
    }

    #[test]
    fn reduced_pairs_satisfy_the_index_condition() {
        let samples = [
            elem(&[(0, true), (1, false), (3, false), (2, true)]),
            elem(&[(1, true), (1, true), (0, false), (5, false)]),
            elem(&[(2, false), (0, true), (2, false), (0, true)]),
        ];
        for e in &samples {
            let p = e.p().indices();
            let q = e.q().indices();
            for &i in p {
                if q.binary_search(&i).is_ok() {
                    assert!(
                        p.binary_search(&(i + 1)).is_ok() || q.binary_search(&(i + 1)).is_ok(),
                        "violation at {i} in {e:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn generators_above_one_are_conjugates() {
        for n in 2u32..=6 {
            let k = (n - 1) as i32;
            let x0 = GroupElement::generator(0);
            let x1 = GroupElement::generator(1);
            let conj = x1.conjugate(&x0.pow(k));
            assert_eq!(conj, GroupElement::generator(n), "x{n}");
        }
    }

    #[test]
    fn defining_relators_die() {
        // x1^(x0^2) = x1^(x0 x1) and x1^(x0^3) = x1^(x0^2 x1)
        let x0 = GroupElement::generator(0);
        let x1 = GroupElement::generator(1);
        let lhs = x1.conjugate(&x0.pow(2));
        let rhs = x1.conjugate(&x0.mul(&x1));
        assert_eq!(lhs, rhs);
        assert!(lhs.mul(&rhs.inverse()).is_identity());
        let lhs = x1.conjugate(&x0.pow(3));
        let rhs = x1.conjugate(&x0.pow(2).mul(&x1));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn alpha_beta_presentation_relations() {
        // alpha = x1^-1, beta = x0 * x1^-1: alpha^beta commutes with beta^alpha
        // and with beta^(alpha^2)
        let alpha = GroupElement::generator(1).inverse();
        let beta = GroupElement::generator(0).mul(&GroupElement::generator(1).inverse());
        let ab = alpha.conjugate(&beta);
        let ba = beta.conjugate(&alpha);
        let ba2 = beta.conjugate(&alpha.pow(2));
        assert_eq!(ab.mul(&ba), ba.mul(&ab));
        assert_eq!(ab.mul(&ba2), ba2.mul(&ab));
        assert!(!ab.mul(&beta).eq(&beta.mul(&ab)), "alpha^beta and beta must not commute");
    }

    #[test]
    fn group_axioms_spot_checks() {
        let samples = [
            elem(&[(0, false)]),
            elem(&[(1, true)]),
            elem(&[(0, true), (1, false), (2, false)]),
            elem(&[(3, false), (0, true)]),
            GroupElement::identity(),
        ];
        for a in &samples {
            assert!(a.mul(&a.inverse()).is_identity());
            assert!(a.inverse().mul(a).is_identity());
            assert_eq!(a.inverse().inverse(), *a);
            for b in &samples {
                for c in &samples {
                    assert_eq!(a.mul(b).mul(c), a.mul(&b.mul(c)));
                }
            }
        }
    }

    #[test]
    fn lcm_examples() {
        let x0 = Monomial::generator(0);
        let x1 = Monomial::generator(1);
        assert_eq!(lcm(&x0, &x1), Monomial::normalize(&[0, 2]));
        assert_eq!(lcm(&x1, &x0), Monomial::normalize(&[0, 2]));
        let a = Monomial::normalize(&[0, 2, 2]);
        assert_eq!(lcm(&a, &a), a);
        assert_eq!(lcm(&Monomial::identity(), &a), a);
    }

    #[test]
    fn gig_translation() {
        let gs = vec![elem(&[(2, false), (0, true)]), elem(&[(1, true)])];
        let (g, translated) = gig_translate(&gs);
        assert_eq!(g, Monomial::normalize(&[0, 2]));
        assert_eq!(translated[0], Monomial::normalize(&[2, 2]));
        assert_eq!(translated[1], Monomial::generator(0));
        let (g, translated) = gig_translate(&[]);
        assert!(g.is_identity());
        assert!(translated.is_empty());
    }
}
