//! Linear-algebra search for solutions of one-sided equations over bounded
//! monomial supports.
//!
//! Unknown polynomials are expressed as linear combinations of a fixed,
//! ordered set of monomials ("the support") with free coefficients from the
//! field. Equations such as `(1 - x0) u_0 = (1 - x1) u_1 = ...` then become a
//! homogeneous sparse linear system indexed by product monomials, and a
//! nonzero solution is a nullspace vector, computed by exact Gaussian
//! elimination (no floating point anywhere).

use crate::error::{Error, Result};
use crate::field::{FieldElem, FieldTag};
use crate::monoid::{monomials_up_to, Monomial};
use crate::ring::{same_field, Polynomial};
use crate::solve::{verify_solution, ChainSolution, Limits};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Zero};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

/// A homogeneous linear system over product monomials.
///
/// There is one block of columns per unknown polynomial; column `offsets[j] +
/// p` carries the coefficient of `blocks[j][p]` in the j-th unknown. Each row
/// states that one product monomial's total coefficient in one equation
/// vanishes.
#[derive(Debug, Clone)]
pub struct LinearSystem {
    field: FieldTag,
    blocks: Vec<Vec<Monomial>>,
    offsets: Vec<usize>,
    /// Sparse rows, each sorted by column index.
    rows: Vec<Vec<(usize, FieldElem)>>,
    /// (equation index, product monomial) labels, parallel to `rows`.
    row_keys: Vec<(usize, Monomial)>,
    cols: usize,
}

impl LinearSystem {
    pub fn field(&self) -> FieldTag {
        self.field
    }

    pub fn num_columns(&self) -> usize {
        self.cols
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn blocks(&self) -> &[Vec<Monomial>] {
        &self.blocks
    }

    /// The (equation, product monomial) label of each row.
    pub fn row_keys(&self) -> &[(usize, Monomial)] {
        &self.row_keys
    }

    /// True iff `x` (one coefficient per column) satisfies every row exactly.
    pub fn is_solution(&self, x: &[FieldElem]) -> bool {
        if x.len() != self.cols {
            return false;
        }
        self.rows.iter().all(|row| {
            let mut acc = FieldElem::zero(self.field);
            for (c, a) in row {
                acc += &(a * &x[*c]);
            }
            acc.is_zero()
        })
    }

    /// Reassembles a column vector into one polynomial per block.
    pub fn split_vector(&self, x: &[FieldElem]) -> Result<Vec<Polynomial>> {
        if x.len() != self.cols {
            return Err(Error::SizeMismatch(format!(
                "vector has {} entries, system has {} columns",
                x.len(),
                self.cols
            )));
        }
        let mut out = Vec::with_capacity(self.blocks.len());
        for (j, block) in self.blocks.iter().enumerate() {
            let terms = block
                .iter()
                .enumerate()
                .map(|(p, m)| (m.clone(), x[self.offsets[j] + p].clone()))
                .filter(|(_, c)| !c.is_zero());
            out.push(Polynomial::from_terms(self.field, terms)?);
        }
        Ok(out)
    }

    /// Serializes the matrix in sparse triplet form: one line `row col value`
    /// per nonzero entry, zero-based indices, values printed as `num/den`
    /// fractions (or bare integers when the denominator is 1).
    pub fn to_triplets(&self) -> String {
        let mut out = String::new();
        for (r, row) in self.rows.iter().enumerate() {
            for (c, a) in row {
                out.push_str(&format!("{r} {c} {a}\n"));
            }
        }
        out
    }
}

/// One equation of a system under assembly: a list of (block, coefficient
/// polynomial) pairs whose weighted sum of unknowns must vanish.
type Equation<'a> = Vec<(usize, &'a Polynomial)>;

fn assemble(
    field: FieldTag,
    supports: &[Vec<Monomial>],
    equations: &[Equation<'_>],
) -> Result<LinearSystem> {
    for (j, s) in supports.iter().enumerate() {
        if s.is_empty() {
            return Err(Error::EmptySupport(format!("unknown block {j}")));
        }
    }
    let mut offsets = Vec::with_capacity(supports.len());
    let mut cols = 0usize;
    for s in supports {
        offsets.push(cols);
        cols += s.len();
    }
    // Key rows by (equation, product monomial); accumulate sparse entries.
    let mut acc: BTreeMap<(usize, Monomial), BTreeMap<usize, FieldElem>> = BTreeMap::new();
    for (e, equation) in equations.iter().enumerate() {
        for (j, coeff) in equation {
            for (p, m) in supports[*j].iter().enumerate() {
                let col = offsets[*j] + p;
                for (cm, ca) in coeff.terms() {
                    let product = cm.mul(m);
                    let slot = acc
                        .entry((e, product))
                        .or_default()
                        .entry(col)
                        .or_insert_with(|| FieldElem::zero(field));
                    *slot += ca;
                }
            }
        }
    }
    let mut rows = Vec::new();
    let mut row_keys = Vec::new();
    for ((e, pm), entries) in acc {
        let row: Vec<(usize, FieldElem)> =
            entries.into_iter().filter(|(_, a)| !a.is_zero()).collect();
        if !row.is_empty() {
            rows.push(row);
            row_keys.push((e, pm));
        }
    }
    Ok(LinearSystem {
        field,
        blocks: supports.to_vec(),
        offsets,
        rows,
        row_keys,
        cols,
    })
}

/// Builds the chain system `lefts[j] u_j - lefts[j+1] u_{j+1} = 0` for
/// `0 <= j < len - 1`, with unknown `u_j` running over `supports[j]`.
pub fn build_system(lefts: &[Polynomial], supports: &[Vec<Monomial>]) -> Result<LinearSystem> {
    if lefts.len() != supports.len() {
        return Err(Error::LengthMismatch(format!(
            "{} left factors vs {} supports",
            lefts.len(),
            supports.len()
        )));
    }
    if lefts.len() < 2 {
        return Err(Error::PreconditionViolated(
            "a chain system needs at least two unknowns".into(),
        ));
    }
    let field = same_field(&lefts.iter().collect::<Vec<_>>())?;
    let negated: Vec<Polynomial> = lefts.iter().map(|p| -p).collect();
    let equations: Vec<Equation<'_>> = (0..lefts.len() - 1)
        .map(|j| vec![(j, &lefts[j]), (j + 1, &negated[j + 1])])
        .collect();
    assemble(field, supports, &equations)
}

/// Builds the single-equation system `coeffs[0] u_0 + ... + coeffs[n] u_n = 0`.
pub fn build_sum_system(coeffs: &[Polynomial], supports: &[Vec<Monomial>]) -> Result<LinearSystem> {
    if coeffs.len() != supports.len() {
        return Err(Error::LengthMismatch(format!(
            "{} coefficients vs {} supports",
            coeffs.len(),
            supports.len()
        )));
    }
    if coeffs.is_empty() {
        return Err(Error::PreconditionViolated(
            "a sum system needs at least one unknown".into(),
        ));
    }
    let field = same_field(&coeffs.iter().collect::<Vec<_>>())?;
    let equation: Equation<'_> = coeffs.iter().enumerate().collect();
    assemble(field, supports, &[equation])
}

/// An exact basis of the nullspace of a [`LinearSystem`].
#[derive(Debug, Clone)]
pub struct NullspaceBasis {
    pub field: FieldTag,
    pub cols: usize,
    /// Linearly independent vectors, each satisfying every equation exactly.
    pub vectors: Vec<Vec<FieldElem>>,
}

impl NullspaceBasis {
    pub fn dimension(&self) -> usize {
        self.vectors.len()
    }
}

/// Computes a complete nullspace basis by exact Gauss-Jordan elimination.
///
/// Rows are consumed sparsest-first and pivot columns are fully eliminated
/// from earlier pivot rows, so the surviving rows form a reduced echelon
/// system from which one basis vector per free column is read off. Every
/// basis vector is re-verified against the original rows.
pub fn nullspace(sys: &LinearSystem) -> Result<NullspaceBasis> {
    let field = sys.field;
    // Sparse working rows.
    let mut queue: Vec<BTreeMap<usize, FieldElem>> = sys
        .rows
        .iter()
        .map(|r| r.iter().cloned().collect())
        .collect();
    queue.sort_by_key(|r| std::cmp::Reverse(r.len()));
    // pivot column -> index into `reduced`. Invariant: every row in `reduced`
    // has a 1 at its pivot column and all its other entries at free columns.
    let mut pivot_of: BTreeMap<usize, usize> = BTreeMap::new();
    let mut reduced: Vec<(usize, BTreeMap<usize, FieldElem>)> = Vec::new();
    while let Some(mut row) = queue.pop() {
        // Fully reduce against all existing pivot rows. One sweep suffices
        // because pivot rows carry no other pivot columns, but loop anyway.
        loop {
            let hits: Vec<usize> = row
                .keys()
                .copied()
                .filter(|c| pivot_of.contains_key(c))
                .collect();
            if hits.is_empty() {
                break;
            }
            for c in hits {
                if let Some(factor) = row.get(&c).cloned() {
                    let pi = pivot_of[&c];
                    let pivot_row = reduced[pi].1.clone();
                    eliminate(&mut row, &factor, &pivot_row, field);
                }
            }
        }
        let Some((&c, _)) = row.first_key_value() else {
            continue; // dependent row
        };
        // Normalize so the pivot entry is 1.
        let inv = row
            .get(&c)
            .expect("leading entry")
            .inverse()
            .expect("pivot entry is nonzero");
        for a in row.values_mut() {
            *a = &*a * &inv;
        }
        // Clear the new pivot column from all earlier pivot rows.
        for (_, other) in reduced.iter_mut() {
            if let Some(f) = other.get(&c).cloned() {
                eliminate(other, &f, &row, field);
            }
        }
        pivot_of.insert(c, reduced.len());
        reduced.push((c, row));
    }
    let mut vectors = Vec::new();
    for f in 0..sys.cols {
        if pivot_of.contains_key(&f) {
            continue;
        }
        let mut x = vec![FieldElem::zero(field); sys.cols];
        x[f] = FieldElem::one(field);
        for (c, row) in &reduced {
            if let Some(a) = row.get(&f) {
                x[*c] = -a;
            }
        }
        if !sys.is_solution(&x) {
            return Err(Error::AssertionFailure(
                "nullspace vector fails re-verification".into(),
            ));
        }
        vectors.push(x);
    }
    Ok(NullspaceBasis {
        field,
        cols: sys.cols,
        vectors,
    })
}

/// row -= factor * pivot (pivot's leading entry is 1), dropping zeros.
fn eliminate(
    row: &mut BTreeMap<usize, FieldElem>,
    factor: &FieldElem,
    pivot: &BTreeMap<usize, FieldElem>,
    field: FieldTag,
) {
    for (c, a) in pivot {
        let delta = factor * a;
        let slot = row.entry(*c).or_insert_with(|| FieldElem::zero(field));
        *slot = &*slot - &delta;
        if slot.is_zero() {
            row.remove(c);
        }
    }
}

fn support_size(v: &[FieldElem]) -> usize {
    v.iter().filter(|a| !a.is_zero()).count()
}

/// Greedily re-combines basis vectors to shrink their supports.
///
/// For every ordered pair `(i, j)` the candidate `v_i - λ v_j` is tried for
/// each ratio λ that cancels a common coordinate; the replacement is kept when
/// it strictly shrinks the support. Several restart passes with a seeded
/// shuffle of the pair order are run and the sparsest outcome (by total
/// support) wins. The span is preserved by construction.
pub fn sparsify_basis(basis: &NullspaceBasis, restarts: u32, seed: u64) -> NullspaceBasis {
    if basis.vectors.len() < 2 {
        return basis.clone();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = basis.vectors.clone();
    let mut best_total: usize = best.iter().map(|v| support_size(v)).sum();
    for _ in 0..restarts.max(1) {
        let mut work = basis.vectors.clone();
        let mut pairs: Vec<(usize, usize)> = (0..work.len())
            .flat_map(|i| (0..work.len()).map(move |j| (i, j)))
            .filter(|(i, j)| i != j)
            .collect();
        pairs.shuffle(&mut rng);
        let mut improved = true;
        while improved {
            improved = false;
            for &(i, j) in &pairs {
                let current = support_size(&work[i]);
                // Ratios that cancel some shared coordinate.
                let mut ratios: Vec<FieldElem> = Vec::new();
                for (a, b) in work[i].iter().zip(work[j].iter()) {
                    if !a.is_zero() && !b.is_zero() {
                        let r = a * &b.inverse().expect("nonzero coordinate");
                        if !ratios.contains(&r) {
                            ratios.push(r);
                        }
                    }
                }
                for lam in ratios {
                    let candidate: Vec<FieldElem> = work[i]
                        .iter()
                        .zip(work[j].iter())
                        .map(|(a, b)| a - &(&lam * b))
                        .collect();
                    let size = support_size(&candidate);
                    if size > 0 && size < current {
                        work[i] = candidate;
                        improved = true;
                        break;
                    }
                }
            }
        }
        let total: usize = work.iter().map(|v| support_size(v)).sum();
        if total < best_total {
            best_total = total;
            best = work;
        }
    }
    NullspaceBasis {
        field: basis.field,
        cols: basis.cols,
        vectors: best,
    }
}

/// Rescales polynomials jointly so all rational coefficients become integers
/// with overall content 1 and the leading coefficient of the first nonzero
/// polynomial is positive. Prime-field coefficients are returned unchanged
/// except for the leading normalization.
pub fn integer_clear(polys: &[Polynomial]) -> Vec<Polynomial> {
    let Some(first) = polys.iter().find(|p| !p.is_zero()) else {
        return polys.to_vec();
    };
    let field = first.field();
    let scale = match field {
        FieldTag::Rational => {
            let mut den_lcm = BigInt::one();
            let mut num_gcd = BigInt::zero();
            for p in polys {
                for (_, a) in p.terms() {
                    if let FieldElem::Rational(r) = a {
                        den_lcm = den_lcm.lcm(r.denom());
                        num_gcd = num_gcd.gcd(r.numer());
                    }
                }
            }
            if num_gcd.is_zero() {
                num_gcd = BigInt::one();
            }
            FieldElem::Rational(BigRational::new(den_lcm, num_gcd))
        }
        FieldTag::Prime(_) => FieldElem::one(field),
    };
    let lead = first
        .terms()
        .next()
        .map(|(_, a)| a.clone())
        .expect("nonzero polynomial has a term");
    let lead_scaled = &lead * &scale;
    let sign = if lead_scaled.is_negative() {
        -&scale
    } else {
        scale
    };
    polys.iter().map(|p| p.scale(&sign)).collect()
}

/// Searches the bounded support `{degree <= max_degree, index <= max_index}`
/// for nonzero solutions of `(1 - x0) u_0 = ... = (1 - x_m) u_m`.
///
/// The full nullspace of the chain system is computed exactly, re-combined
/// toward small supports (seeded randomized restarts), and every candidate is
/// re-verified and integer-cleared. Candidates are returned ordered by total
/// support size. An empty nullspace is reported as `NoSolutionInBounds` — a
/// definite finding over this support, not a failure.
pub fn minimal_chain_search(
    m: usize,
    max_degree: usize,
    max_index: u32,
    field: FieldTag,
    seed: u64,
    limits: &Limits,
) -> Result<Vec<ChainSolution>> {
    if m < 1 {
        return Err(Error::PreconditionViolated("chain length m must be >= 1".into()));
    }
    let support = monomials_up_to(max_degree, max_index);
    let cols = support.len() * (m + 1);
    if cols > limits.max_terms {
        return Err(Error::ResourceLimit(format!(
            "chain system would have {cols} columns, more than the {} allowed",
            limits.max_terms
        )));
    }
    let lefts: Vec<Polynomial> = (0..=m as u32)
        .map(|i| Polynomial::one_minus(field, i))
        .collect();
    let supports = vec![support; m + 1];
    let sys = build_system(&lefts, &supports)?;
    let basis = nullspace(&sys)?;
    if basis.dimension() == 0 {
        return Err(Error::NoSolutionInBounds);
    }
    let sparse = sparsify_basis(&basis, 8, seed);
    let mut out = Vec::new();
    for vec in &sparse.vectors {
        let us = integer_clear(&sys.split_vector(vec)?);
        let check = verify_solution(&lefts, &us)?;
        if !check.holds || !check.nonzero {
            return Err(Error::AssertionFailure(
                "search candidate fails exact re-verification".into(),
            ));
        }
        let common = &lefts[0] * &us[0];
        out.push(ChainSolution { us, common });
    }
    out.sort_by_key(|sol| {
        (
            sol.us.iter().map(|u| u.num_terms()).sum::<usize>(),
            sol.common.num_terms(),
        )
    });
    Ok(out)
}

/// Searches for coefficients `v_0..v_n`, supported on monomials of degree at
/// most `max_degree` whose letters stay within `[lo, max_index]` (where `lo`
/// is the smallest letter of `b`, keeping the result inside the same
/// submonoid ring), satisfying `b v_0 + shift(b,1) v_1 + ... + shift(b,n) v_n
/// = 0`. Returns `None` when only the zero solution exists in these bounds.
pub fn bounded_relation_search(
    b: &Polynomial,
    n: usize,
    max_degree: usize,
    max_index: u32,
    limits: &Limits,
) -> Result<Option<Vec<Polynomial>>> {
    if b.is_zero() {
        return Err(Error::PreconditionViolated(
            "relation search needs a nonzero polynomial".into(),
        ));
    }
    let lo = b.letter_range().map(|(l, _)| l).unwrap_or(0);
    if max_index < lo {
        return Ok(None);
    }
    let support: Vec<Monomial> = monomials_up_to(max_degree, max_index - lo)
        .into_iter()
        .map(|m| m.shift_up(lo))
        .collect();
    let cols = support.len() * (n + 1);
    if cols > limits.max_terms {
        return Err(Error::ResourceLimit(format!(
            "relation system would have {cols} columns, more than the {} allowed",
            limits.max_terms
        )));
    }
    let coeffs: Vec<Polynomial> = (0..=n as u32).map(|t| b.shift_up(t)).collect();
    let supports = vec![support; n + 1];
    let sys = build_sum_system(&coeffs, &supports)?;
    let basis = nullspace(&sys)?;
    if basis.dimension() == 0 {
        return Ok(None);
    }
    // Prefer the candidate with the fewest terms overall.
    let sparse = sparsify_basis(&basis, 4, 0);
    let best = sparse
        .vectors
        .iter()
        .min_by_key(|v| support_size(v))
        .expect("nonempty basis");
    let vs = integer_clear(&sys.split_vector(best)?);
    Ok(Some(vs))
}

/// Escalating fallback used when the constructive relation algorithm
/// overflows its term guard: tries bounded relation searches in order of
/// estimated cost until one finds a small valid relation. Returns `None` if
/// the whole schedule is exhausted.
pub fn rescue_relation(b: &Polynomial, limits: &Limits) -> Result<Option<Vec<Polynomial>>> {
    if b.is_zero() {
        return Ok(None);
    }
    let s = b.index_span() as usize;
    let d = b.degree().unwrap_or(0);
    let lo = b.letter_range().map(|(l, _)| l).unwrap_or(0);
    // Assembly and elimination cost grow with both the column count and the
    // number of terms of b (each term of b contributes a row entry per
    // column), so the column budget shrinks as b grows.
    let budget = 6_000usize.min(150_000 / b.num_terms().max(1));
    // Candidate (relation length, degree bound, letter-window width) triples,
    // cheapest systems first. The window width w allows letters lo..lo+w.
    let mut attempts: Vec<(usize, usize, u32, usize)> = Vec::new();
    for n in 1..=s + 2 {
        for dd in 1..=d + 2 {
            for w in (s as u32 + 1)..=(s as u32 + 6) {
                let count = monomials_count(dd, w);
                let cols = count * (n + 1);
                if cols <= budget {
                    attempts.push((n, dd, w, cols));
                }
            }
        }
    }
    attempts.sort_by_key(|&(n, dd, w, cols)| (cols, n, dd, w));
    attempts.dedup();
    for (n, dd, w, _) in attempts {
        if let Some(vs) = bounded_relation_search(b, n, dd, lo + w, limits)? {
            return Ok(Some(vs));
        }
    }
    Ok(None)
}

/// Prime for the modular pass that locates which support a rational solution
/// uses. Any prime works: an unlucky choice can only shrink the modular
/// nullspace or break the exact re-verification, both of which surface as
/// clean errors, never as a wrong answer.
const SUPPORT_PASS_PRIME: u32 = 32003;

/// Letter blocks and degree caps of the layered support family for chains of
/// length `m`: block `k` (for `k = 0..=m`) holds the `m + 1 - k` consecutive
/// letters starting at `k(m + 2) - k(k - 1)/2` and contributes degree at most
/// `m + 1 - k`. Exhaustive low-degree searches for m = 1 and m = 2 find their
/// unique minimal chain solutions exactly on this family (letters {0,1} and
/// {3} for m = 1; {0,1,2}, {4,5} and {7} for m = 2), and the family
/// extrapolates that layout to longer chains.
pub fn layered_blocks(m: usize) -> Vec<(Vec<u32>, usize)> {
    (0..=m)
        .map(|k| {
            // k(m + 2) - k(k - 1)/2, arranged to stay in unsigned range.
            let start = (k * (2 * m + 5 - k) / 2) as u32;
            let width = (m + 1 - k) as u32;
            ((start..start + width).collect(), m + 1 - k)
        })
        .collect()
}

/// Total-degree cap that goes with [`layered_blocks`]: one less than the sum
/// of the per-block caps.
fn layered_total_cap(m: usize) -> usize {
    (m + 1) * (m + 2) / 2 - 1
}

/// Multisets of at most `cap` letters drawn from `letters` (assumed strictly
/// increasing), each returned as a sorted word.
fn block_multisets(letters: &[u32], cap: usize) -> Vec<Vec<u32>> {
    let mut out: Vec<Vec<u32>> = vec![Vec::new()];
    let mut frontier: Vec<Vec<u32>> = vec![Vec::new()];
    for _ in 0..cap {
        let mut next = Vec::new();
        for base in &frontier {
            let floor = base.last().copied().unwrap_or(0);
            for &l in letters.iter().filter(|&&l| l >= floor) {
                let mut ext = base.clone();
                ext.push(l);
                next.push(ext);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// All monomials of the layered support family for chains of length `m`:
/// products of one multiset per block under the per-block and total degree
/// caps, in canonical order.
pub fn layered_support(m: usize) -> Vec<Monomial> {
    let cap_total = layered_total_cap(m);
    let mut acc: Vec<Vec<u32>> = vec![Vec::new()];
    for (letters, cap) in layered_blocks(m) {
        let parts = block_multisets(&letters, cap);
        let mut next = Vec::new();
        for stem in &acc {
            for part in &parts {
                if stem.len() + part.len() <= cap_total {
                    let mut word = stem.clone();
                    word.extend_from_slice(part);
                    next.push(word);
                }
            }
        }
        acc = next;
    }
    let mut monos: Vec<Monomial> = acc.into_iter().map(Monomial::from_sorted).collect();
    monos.sort();
    monos
}

/// Size of [`layered_support`] computed without enumerating it, so oversized
/// requests can be rejected up front.
fn layered_count(m: usize) -> usize {
    let cap_total = layered_total_cap(m);
    // Coefficients of the truncated product of the per-block generating
    // functions, indexed by total degree.
    let mut totals = vec![1usize];
    for (letters, cap) in layered_blocks(m) {
        let l = letters.len();
        // Multisets of exactly d letters from l: C(l - 1 + d, d), built
        // incrementally (the stepwise division is exact).
        let mut by_deg = vec![1usize; cap + 1];
        for d in 1..=cap {
            by_deg[d] = by_deg[d - 1] * (l - 1 + d) / d;
        }
        let top = (totals.len() - 1 + cap).min(cap_total);
        let mut next = vec![0usize; top + 1];
        for (a, ta) in totals.iter().enumerate() {
            for (b, tb) in by_deg.iter().enumerate() {
                if a + b <= cap_total {
                    next[a + b] = next[a + b].saturating_add(ta.saturating_mul(*tb));
                }
            }
        }
        totals = next;
    }
    totals.iter().sum()
}

/// Searches the layered support family for a chain solution of length `m`.
///
/// Over the rationals a prime-field pass first locates the nullspace and the
/// per-block supports a modular solution actually uses; the much smaller
/// restricted system is then re-solved exactly over the rationals. The result
/// is always re-verified by exact multiplication, so the modular shortcut can
/// only cause a clean error, never a wrong answer. Over a prime field the
/// system is solved directly. Returns `NoSolutionInBounds` when the family
/// carries no nonzero solution and `ResourceLimit` when the system would
/// exceed the term guard.
pub fn layered_chain_search(m: usize, field: FieldTag, limits: &Limits) -> Result<ChainSolution> {
    if m < 1 {
        return Err(Error::PreconditionViolated(
            "chain length m must be >= 1".into(),
        ));
    }
    let cols = layered_count(m).saturating_mul(m + 1);
    if cols > limits.max_terms {
        return Err(Error::ResourceLimit(format!(
            "layered chain system would have {cols} columns, more than the {} allowed",
            limits.max_terms
        )));
    }
    let support = layered_support(m);
    let lefts: Vec<Polynomial> = (0..=m as u32)
        .map(|i| Polynomial::one_minus(field, i))
        .collect();
    let supports: Vec<Vec<Monomial>> = match field {
        FieldTag::Prime(_) => vec![support; m + 1],
        FieldTag::Rational => {
            let p = FieldTag::prime(SUPPORT_PASS_PRIME)?;
            let lefts_p: Vec<Polynomial> = (0..=m as u32)
                .map(|i| Polynomial::one_minus(p, i))
                .collect();
            let sys_p = build_system(&lefts_p, &vec![support.clone(); m + 1])?;
            let basis_p = nullspace(&sys_p)?;
            if basis_p.dimension() == 0 {
                return Err(Error::NoSolutionInBounds);
            }
            // Union of the per-block supports over the modular basis.
            let n = support.len();
            (0..=m)
                .map(|j| {
                    support
                        .iter()
                        .enumerate()
                        .filter(|(pos, _)| {
                            basis_p.vectors.iter().any(|v| !v[j * n + pos].is_zero())
                        })
                        .map(|(_, mono)| mono.clone())
                        .collect()
                })
                .collect()
        }
    };
    let sys = build_system(&lefts, &supports)?;
    let basis = nullspace(&sys)?;
    if basis.dimension() == 0 {
        return Err(match field {
            FieldTag::Prime(_) => Error::NoSolutionInBounds,
            FieldTag::Rational => Error::ResourceLimit(
                "modular support pass did not lift to the rationals".into(),
            ),
        });
    }
    let sparse = if basis.dimension() > 1 {
        sparsify_basis(&basis, 4, 0)
    } else {
        basis
    };
    let best = sparse
        .vectors
        .iter()
        .min_by_key(|v| support_size(v))
        .expect("nonempty basis");
    let us = integer_clear(&sys.split_vector(best)?);
    let check = verify_solution(&lefts, &us)?;
    if !check.holds || !check.nonzero {
        return Err(Error::AssertionFailure(
            "layered search candidate fails exact re-verification".into(),
        ));
    }
    let common = &lefts[0] * &us[0];
    Ok(ChainSolution { us, common })
}

/// Number of monomials of degree at most `max_degree` over letters
/// `0..=max_index` (multisets), computed without enumerating them.
fn monomials_count(max_degree: usize, max_index: u32) -> usize {
    let letters = max_index as usize + 1;
    let mut total = 0usize;
    let mut level = 1usize; // C(letters - 1 + d, d) for d = 0
    for dd in 0..=max_degree {
        if dd > 0 {
            level = level * (letters - 1 + dd) / dd;
        }
        total = total.saturating_add(level);
    }
    total
}
