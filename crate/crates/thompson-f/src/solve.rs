//! Solvers for one-sided equations in the monoid ring.
//!
//! The central objects are pairs `(u, v)` with `(1 - x0) u = (1 - x1) v` and,
//! more generally, chains `(1 - x0) u_0 = (1 - x1) u_1 = ... = (1 - x_m) u_m`.
//! Every solver here verifies its output by exact multiplication before
//! returning it; a failed verification is an internal error, never silent.

use crate::error::{Error, Result};
use crate::field::FieldTag;
use crate::ring::Polynomial;

/// Resource guards for operations whose outputs can grow. Defaults: indices
/// and degrees up to 2^16, at most one million terms per intermediate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Limits {
    pub max_index: u32,
    pub max_degree: usize,
    pub max_terms: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_index: 1 << 16,
            max_degree: 1 << 16,
            max_terms: 1_000_000,
        }
    }
}

impl Limits {
    pub fn check(&self, p: &Polynomial, what: &str) -> Result<()> {
        if p.num_terms() > self.max_terms {
            return Err(Error::ResourceLimit(format!(
                "{what}: {} terms exceed the limit of {}",
                p.num_terms(),
                self.max_terms
            )));
        }
        if let Some(d) = p.degree() {
            if d > self.max_degree {
                return Err(Error::ResourceLimit(format!(
                    "{what}: degree {d} exceeds the limit of {}",
                    self.max_degree
                )));
            }
        }
        if let Some((_, hi)) = p.letter_range() {
            if hi > self.max_index {
                return Err(Error::ResourceLimit(format!(
                    "{what}: generator index {hi} exceeds the limit of {}",
                    self.max_index
                )));
            }
        }
        Ok(())
    }
}

/// A verified pair with `(1 - x0) u = b v` for the `b` it was built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairSolution {
    pub u: Polynomial,
    pub v: Polynomial,
}

/// A verified chain: `(1 - x_i) us[i]` equals `common` for every i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainSolution {
    pub us: Vec<Polynomial>,
    pub common: Polynomial,
}

/// Outcome of checking a proposed chain against its left factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolutionCheck {
    /// All products `lefts[i] * us[i]` agree.
    pub holds: bool,
    /// The common value is nonzero (meaningful only when `holds`).
    pub nonzero: bool,
}

/// Produces `v_0, ..., v_n`, not all zero, with
/// `b v_0 + shift(b,1) v_1 + ... + shift(b,n) v_n = 0`.
///
/// For zero input the single coefficient 1 works. For homogeneous `b` of
/// degree d occupying an index window of width s, take m = s + 1: shifting by
/// m moves `b` strictly above its own letters, so
/// `shift(b, m) b = b shift(b, m + d)` and the two-term relation
/// `v_0 = shift(b, m + d)`, `v_m = -b` works. Otherwise the top homogeneous
/// component `h_k` is split off; the defect
/// `c = shift(b, m) h_k - b shift(h_k, m + d)` has fewer homogeneous
/// components than `b`, a relation for `c` is found recursively, and its
/// coefficients are reassembled into one for `b`.
///
/// The recursive construction proves existence but multiplies term counts at
/// every level, so dense inputs can overflow the term guard long before any
/// answer appears. When that happens the guard trips early (products are
/// size-checked before they are formed) and a bounded linear search takes
/// over: small candidate supports are swept in order of cost until a valid
/// relation — often far smaller than the constructive one — is found. Either
/// way the returned coefficients satisfy the exact identity below.
pub fn phi_relation(b: &Polynomial, limits: &Limits) -> Result<Vec<Polynomial>> {
    let vs = match phi_relation_inner(b, limits) {
        Ok(vs) => vs,
        Err(Error::ResourceLimit(msg)) => match crate::search::rescue_relation(b, limits)? {
            Some(vs) => vs,
            None => return Err(Error::ResourceLimit(msg)),
        },
        Err(e) => return Err(e),
    };
    let mut acc = Polynomial::zero(b.field());
    for (t, vt) in vs.iter().enumerate() {
        acc += &(&b.shift_up(t as u32) * vt);
    }
    if !acc.is_zero() {
        return Err(Error::AssertionFailure(
            "shift relation does not vanish".into(),
        ));
    }
    if vs.iter().all(|v| v.is_zero()) {
        return Err(Error::AssertionFailure("shift relation is trivial".into()));
    }
    Ok(vs)
}

/// Multiplies after checking the pessimistic pairwise size bound, so a
/// runaway product trips the guard before the memory is spent. The bound
/// ignores cancellation; a product that would have collapsed can trip it,
/// which at worst diverts the relation construction to its search fallback.
fn guarded_mul(a: &Polynomial, b: &Polynomial, limits: &Limits, what: &str) -> Result<Polynomial> {
    let bound = a.num_terms().saturating_mul(b.num_terms());
    if bound > limits.max_terms {
        return Err(Error::ResourceLimit(format!(
            "{what}: product could reach {bound} terms, more than the {} allowed",
            limits.max_terms
        )));
    }
    let p = a * b;
    limits.check(&p, what)?;
    Ok(p)
}

fn phi_relation_inner(b: &Polynomial, limits: &Limits) -> Result<Vec<Polynomial>> {
    let tag = b.field();
    if b.is_zero() {
        return Ok(vec![Polynomial::one(tag)]);
    }
    let m = b.index_span() as usize + 1;
    if let Some(d) = b.homogeneous_degree() {
        let mut vs = vec![Polynomial::zero(tag); m + 1];
        vs[0] = b.shift_up((m + d) as u32);
        vs[m] = -b;
        return Ok(vs);
    }
    let comps = b.homogeneous_components()?;
    let hk = comps.last().expect("nonzero polynomial has components");
    let d = hk.homogeneous_degree().expect("component is homogeneous");
    let c = &guarded_mul(&b.shift_up(m as u32), hk, limits, "relation defect")?
        - &guarded_mul(b, &hk.shift_up((m + d) as u32), limits, "relation defect")?;
    limits.check(&c, "relation defect")?;
    if c.is_zero() {
        let mut vs = vec![Polynomial::zero(tag); m + 1];
        vs[0] = hk.shift_up((m + d) as u32);
        vs[m] = -hk;
        return Ok(vs);
    }
    let ws = phi_relation_inner(&c, limits)?;
    let n = ws.len() - 1;
    let mut vs = Vec::with_capacity(n + m + 1);
    for j in 0..=(n + m) {
        let mut coeff = Polynomial::zero(tag);
        if j >= m && j - m <= n {
            coeff += &guarded_mul(
                &hk.shift_up((j - m) as u32),
                &ws[j - m],
                limits,
                "relation coefficient",
            )?;
        }
        if j <= n {
            coeff -= &guarded_mul(
                &hk.shift_up((j + m + d) as u32),
                &ws[j],
                limits,
                "relation coefficient",
            )?;
        }
        limits.check(&coeff, "relation coefficient")?;
        vs.push(coeff);
    }
    Ok(vs)
}

/// Solves `(1 - x0) u = b v` with `v` nonzero, for arbitrary `b`.
///
/// Writing `b = sum_t x0^t b_t` with the `b_t` free of `x0`, let
/// `b' = sum_t b_t` and `c = sum_(t>=1) (1 + x0 + ... + x0^(t-1)) b_t`, so
/// that `b = b' - (1 - x0) c`. If `b' = 0` then `(-c, 1)` solves the
/// equation. Otherwise a shift relation `[v_0..v_n]` for `b'` yields
/// `v = sum_t x0^t v_t` and the matching left part.
pub fn solve_x0_b(b: &Polynomial, limits: &Limits) -> Result<PairSolution> {
    let tag = b.field();
    let parts = b.x0_decompose();
    let mut bp = Polynomial::zero(tag);
    let mut c = Polynomial::zero(tag);
    for (t, bt) in parts.iter().enumerate() {
        bp += bt;
        if t >= 1 {
            c += &(&Polynomial::x0_geometric(tag, t) * bt);
        }
    }
    let (u, v) = if bp.is_zero() {
        (-&c, Polynomial::one(tag))
    } else {
        let vs = phi_relation(&bp, limits)?;
        let v = Polynomial::from_x0_parts(tag, &vs);
        let mut up = Polynomial::zero(tag);
        for (t, vt) in vs.iter().enumerate().skip(1) {
            if vt.is_zero() {
                continue;
            }
            let geo = Polynomial::x0_geometric(tag, t);
            up -= &(&(&geo * &bp.shift_up(t as u32)) * vt);
            limits.check(&up, "left part")?;
        }
        (&up - &(&c * &v), v)
    };
    limits.check(&u, "solution u")?;
    limits.check(&v, "solution v")?;
    if v.is_zero() {
        return Err(Error::AssertionFailure("right part vanished".into()));
    }
    let lhs = &Polynomial::one_minus(tag, 0) * &u;
    if lhs != b * &v {
        return Err(Error::AssertionFailure(
            "(1 - x0) u = b v failed exact verification".into(),
        ));
    }
    Ok(PairSolution { u, v })
}

/// The basic verified pair: `u0 = (1 + x0 - x1)(1 - x3)`,
/// `v0 = 1 - x3 - x0^2 + x0 x1`, with `(1 - x0) u0 = (1 - x1) v0`.
pub fn basic_solution(tag: FieldTag) -> PairSolution {
    let one = Polynomial::one(tag);
    let x0 = Polynomial::generator(tag, 0);
    let x1 = Polynomial::generator(tag, 1);
    let u0 = &(&(&one + &x0) - &x1) * &Polynomial::one_minus(tag, 3);
    let v0 = &(&(&one - &Polynomial::generator(tag, 3)) - &(&x0 * &x0)) + &(&x0 * &x1);
    let pair = PairSolution { u: u0, v: v0 };
    debug_assert_eq!(
        &Polynomial::one_minus(tag, 0) * &pair.u,
        &Polynomial::one_minus(tag, 1) * &pair.v
    );
    pair
}

/// The k-th basis element `u_k = (1 - x1) shift(u_(k-1), 1)`, cross-checked
/// against the closed form
/// `(1 - x1) ... (1 - x_k) (1 + x_k - x_(k+1)) (1 - x_(k+3))`.
pub fn basis_u(k: usize, tag: FieldTag, limits: &Limits) -> Result<Polynomial> {
    let mut u = basic_solution(tag).u;
    for _ in 0..k {
        u = &Polynomial::one_minus(tag, 1) * &u.shift_up(1);
        limits.check(&u, "basis element")?;
    }
    let mut closed = Polynomial::one(tag);
    for j in 1..=k {
        closed = &closed * &Polynomial::one_minus(tag, j as u32);
    }
    let kk = k as u32;
    let core = &(&Polynomial::one(tag) + &Polynomial::generator(tag, kk))
        - &Polynomial::generator(tag, kk + 1);
    closed = &(&closed * &core) * &Polynomial::one_minus(tag, kk + 3);
    if u != closed {
        return Err(Error::AssertionFailure(
            "recursive and closed basis forms disagree".into(),
        ));
    }
    Ok(u)
}

/// Remainders of the powers of `x0` modulo the right ideal of `v0`:
/// `x0^k = v0 rho_k + x0 xi_k + eta_k` with `xi_k, eta_k` free of `x0`.
/// Starts at `x0^2 = v0 (-1) + x0 x1 + (1 - x3)`.
struct PowerRemainders {
    rho: Polynomial,
    xi: Polynomial,
    eta: Polynomial,
}

impl PowerRemainders {
    fn base(tag: FieldTag) -> Self {
        PowerRemainders {
            rho: Polynomial::constant(tag, -1),
            xi: Polynomial::generator(tag, 1),
            eta: Polynomial::one_minus(tag, 3),
        }
    }

    /// Advance k -> k + 1 using
    /// `xi' = xi_2 shift(xi,1) + shift(eta,1)`, `eta' = eta_2 shift(xi,1)`,
    /// `rho' = rho x0 - shift(xi, 1)`.
    fn step(&self, tag: FieldTag) -> Self {
        let xi2 = Polynomial::generator(tag, 1);
        let eta2 = Polynomial::one_minus(tag, 3);
        let sx = self.xi.shift_up(1);
        PowerRemainders {
            rho: &(&self.rho * &Polynomial::generator(tag, 0)) - &sx,
            xi: &(&xi2 * &sx) + &self.eta.shift_up(1),
            eta: &eta2 * &sx,
        }
    }
}

/// Division with remainder by `v0` on the left of the `x0`-adic expansion:
/// returns `(w1, w2, w3)` with `v = v0 w1 + x0 w2 + w3`, both `w2` and `w3`
/// free of `x0`, and `deg(x0 w2) <= deg v`, `deg w3 <= deg v`.
pub fn divide_by_v0(v: &Polynomial, limits: &Limits) -> Result<(Polynomial, Polynomial, Polynomial)> {
    let tag = v.field();
    let zero = || Polynomial::zero(tag);
    if v.is_zero() {
        return Ok((zero(), zero(), zero()));
    }
    let parts = v.x0_decompose();
    let mut w1 = zero();
    let mut w2 = parts.get(1).cloned().unwrap_or_else(zero);
    let mut w3 = parts.first().cloned().unwrap_or_else(zero);
    let mut pr = PowerRemainders::base(tag);
    for (t, zt) in parts.iter().enumerate().skip(2) {
        if t > 2 {
            pr = pr.step(tag);
        }
        limits.check(&pr.rho, "power remainder")?;
        if zt.is_zero() {
            continue;
        }
        w1 += &(&pr.rho * zt);
        w2 += &(&pr.xi * zt);
        w3 += &(&pr.eta * zt);
    }
    let v0 = basic_solution(tag).v;
    let recombined = &(&(&v0 * &w1) + &(&Polynomial::generator(tag, 0) * &w2)) + &w3;
    if recombined != *v {
        return Err(Error::AssertionFailure("v0 division failed".into()));
    }
    if !w2.in_sub_mi(1) || !w3.in_sub_mi(1) {
        return Err(Error::AssertionFailure(
            "v0 division remainders must be free of x0".into(),
        ));
    }
    let dv = v.degree().expect("nonzero");
    if w2.degree().is_some_and(|d| d + 1 > dv) || w3.degree().is_some_and(|d| d > dv) {
        return Err(Error::AssertionFailure(
            "v0 division degree bound violated".into(),
        ));
    }
    Ok((w1, w2, w3))
}

/// Builds a larger solution of `(1 - x0) u = (1 - x1) v` from a smaller one
/// and a free multiplier `w`:
/// `u = u0 w + (1 - x1) shift(u', 1)`, `v = v0 w + shift(u', 1) - x0 shift(v', 1)`.
pub fn extend_solution(
    up: &Polynomial,
    vp: &Polynomial,
    w: &Polynomial,
    limits: &Limits,
) -> Result<PairSolution> {
    let tag = up.field();
    if &Polynomial::one_minus(tag, 0) * up != &Polynomial::one_minus(tag, 1) * vp {
        return Err(Error::InvalidSolution(
            "(u', v') must satisfy (1 - x0) u' = (1 - x1) v'".into(),
        ));
    }
    let base = basic_solution(tag);
    let su = up.shift_up(1);
    let u = &(&base.u * w) + &(&Polynomial::one_minus(tag, 1) * &su);
    let v = &(&base.v * w) + &(&su - &(&Polynomial::generator(tag, 0) * &vp.shift_up(1)));
    limits.check(&u, "extended u")?;
    limits.check(&v, "extended v")?;
    if &Polynomial::one_minus(tag, 0) * &u != &Polynomial::one_minus(tag, 1) * &v {
        return Err(Error::AssertionFailure("extension identity failed".into()));
    }
    Ok(PairSolution { u, v })
}

/// Writes a solution of `(1 - x0) u = (1 - x1) v` over the basis:
/// `u = sum_i basis_u(i) r_i` with `r_i` using only generators of index >= i.
/// The decomposition peels `v` by [`divide_by_v0`] and recurses on the
/// remainders, shifted down one index.
pub fn decompose_solution(
    u: &Polynomial,
    v: &Polynomial,
    limits: &Limits,
) -> Result<Vec<Polynomial>> {
    let tag = u.field();
    if &Polynomial::one_minus(tag, 0) * u != &Polynomial::one_minus(tag, 1) * v {
        return Err(Error::NotASolution(
            "(1 - x0) u = (1 - x1) v fails for the input pair".into(),
        ));
    }
    let rs = decompose_inner(u, v, limits)?;
    // exact reconstruction check against the basis
    let mut acc = Polynomial::zero(tag);
    for (i, r) in rs.iter().enumerate() {
        if !r.in_sub_mi(i as u32) {
            return Err(Error::AssertionFailure(format!(
                "coefficient {i} leaves the expected submonoid"
            )));
        }
        acc += &(&basis_u(i, tag, limits)? * r);
    }
    if acc != *u {
        return Err(Error::AssertionFailure(
            "basis reconstruction does not reproduce u".into(),
        ));
    }
    Ok(rs)
}

fn decompose_inner(u: &Polynomial, v: &Polynomial, limits: &Limits) -> Result<Vec<Polynomial>> {
    let tag = u.field();
    if v.is_zero() {
        if !u.is_zero() {
            return Err(Error::AssertionFailure(
                "zero v with nonzero u cannot satisfy the identity".into(),
            ));
        }
        return Ok(Vec::new());
    }
    let (w1, w2, w3) = divide_by_v0(v, limits)?;
    let w = u - &(&basic_solution(tag).u * &w1);
    if !w.in_sub_mi(1) {
        return Err(Error::AssertionFailure(
            "reduced left part must be free of x0".into(),
        ));
    }
    let u_next = w3.shift_down(1)?;
    let v_next = -&w2.shift_down(1)?;
    if &Polynomial::one_minus(tag, 0) * &u_next != &Polynomial::one_minus(tag, 1) * &v_next {
        return Err(Error::AssertionFailure(
            "descent produced a non-solution".into(),
        ));
    }
    let inner = decompose_inner(&u_next, &v_next, limits)?;
    let mut rs = Vec::with_capacity(inner.len() + 1);
    rs.push(w1);
    rs.extend(inner.iter().map(|r| r.shift_up(1)));
    Ok(rs)
}

/// Solves the chain `(1 - x0) u_0 = (1 - x1) u_1 = ... = (1 - x_m) u_m`
/// with a nonzero common value, for m >= 1.
///
/// The case m = 1 is the basic pair. Each extension shifts the previous
/// common value w up by one index and solves `(1 - x0) u = shift(w, 1) v`;
/// right-multiplying the shifted previous chain by `v` keeps all equalities.
///
/// The extension forces the new chain to factor through the previous one,
/// and for some lengths no chain of that nested shape is within reach even
/// though shorter chains exist (the minimal chains need not factor through
/// one another). When the extension step overflows its term guard, a bounded
/// linear search over a structured support family replaces the whole chain
/// for that length; its output passes the same exact verification.
pub fn chain_solve(m: usize, tag: FieldTag, limits: &Limits) -> Result<ChainSolution> {
    if m < 1 {
        return Err(Error::PreconditionViolated(
            "chain length m must be at least 1".into(),
        ));
    }
    let base = basic_solution(tag);
    let mut us = vec![base.u, base.v];
    let mut common = &Polynomial::one_minus(tag, 0) * &us[0];
    for step in 2..=m {
        let b = common.shift_up(1);
        match solve_x0_b(&b, limits) {
            Ok(PairSolution { u, v }) => {
                let mut next = Vec::with_capacity(us.len() + 1);
                next.push(u);
                for prev in &us {
                    let lifted = &prev.shift_up(1) * &v;
                    limits.check(&lifted, "chain element")?;
                    next.push(lifted);
                }
                us = next;
                common = &Polynomial::one_minus(tag, 0) * &us[0];
            }
            Err(Error::ResourceLimit(_)) => {
                let sol = crate::search::layered_chain_search(step, tag, limits).map_err(
                    |e| match e {
                        Error::NoSolutionInBounds => Error::ResourceLimit(
                            "chain extension overflowed and the layered support family \
                             carries no solution of this length"
                                .into(),
                        ),
                        other => other,
                    },
                )?;
                us = sol.us;
                common = sol.common;
            }
            Err(e) => return Err(e),
        }
    }
    let lefts: Vec<Polynomial> = (0..us.len())
        .map(|i| Polynomial::one_minus(tag, i as u32))
        .collect();
    let check = verify_solution(&lefts, &us)?;
    if !check.holds || !check.nonzero {
        return Err(Error::AssertionFailure(
            "chain verification failed".into(),
        ));
    }
    Ok(ChainSolution { us, common })
}

/// Checks `lefts[i] * us[i]` all agree; reports whether the common value is
/// nonzero. Lengths must match and be at least 2.
pub fn verify_solution(lefts: &[Polynomial], us: &[Polynomial]) -> Result<SolutionCheck> {
    if lefts.len() != us.len() {
        return Err(Error::LengthMismatch(format!(
            "{} left factors vs {} unknowns",
            lefts.len(),
            us.len()
        )));
    }
    if lefts.len() < 2 {
        return Err(Error::LengthMismatch(
            "a chain needs at least two equations".into(),
        ));
    }
    let first = &lefts[0] * &us[0];
    let holds = lefts
        .iter()
        .zip(us)
        .skip(1)
        .all(|(l, u)| &(l * u) == &first);
    Ok(SolutionCheck {
        holds,
        nonzero: !first.is_zero(),
    })
}
