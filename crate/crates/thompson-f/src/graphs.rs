//! Finite Cayley subgraph analytics: density, boundaries, set-growth ratios,
//! the y-generator embedding, and exact flow verification.
//!
//! All counts are over directed edges labelled by a generator or its inverse,
//! so every vertex has exactly `2m` out-edges for `m` generators; the density
//! identity `delta + iota = 2m` pins this convention.

use crate::error::{Error, Result};
use crate::group::{GroupElement, Letter};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Signed, Zero};
use std::collections::{BTreeMap, BTreeSet};

/// Which side the group acts on when reading an edge label.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// An edge labelled `a` runs `a*g -> g`: following it cancels `a` on the
    /// left, so the out-neighbor of `v` under label `a` is `a^-1 * v`.
    Left,
    /// An edge labelled `a` runs `g -> g*a`.
    Right,
}

/// A directed edge of the subgraph, labelled by a signed 1-based generator
/// index: label `+i` is `gens[i-1]`, label `-i` its inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub from: GroupElement,
    pub to: GroupElement,
    pub label: i32,
    /// Both endpoints lie in the vertex set.
    pub internal: bool,
}

/// A finite set of vertices of a Cayley graph of F, together with the
/// generating set and the action side that define its edges.
#[derive(Debug, Clone)]
pub struct CayleySubgraph {
    vertices: BTreeSet<GroupElement>,
    gens: Vec<GroupElement>,
    side: Side,
}

/// Exact density statistics of a finite subgraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Metrics {
    /// Number of generators m.
    pub m: usize,
    /// Average vertex degree: internal directed edges / vertices.
    pub delta: BigRational,
    /// Boundary ratio: external directed edges / vertices.
    pub iota: BigRational,
    pub internal_edges: usize,
    pub external_edges: usize,
    /// Vertices with at least one external out-edge.
    pub inner_boundary: usize,
}

impl CayleySubgraph {
    pub fn new(
        vertices: impl IntoIterator<Item = GroupElement>,
        gens: Vec<GroupElement>,
        side: Side,
    ) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::PreconditionViolated(
                "the generating set must be nonempty".into(),
            ));
        }
        Ok(CayleySubgraph {
            vertices: vertices.into_iter().collect(),
            gens,
            side,
        })
    }

    pub fn vertices(&self) -> impl Iterator<Item = &GroupElement> {
        self.vertices.iter()
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn gens(&self) -> &[GroupElement] {
        &self.gens
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        self.vertices.contains(g)
    }

    /// All signed labels `+-1 ..= +-m`.
    pub fn labels(&self) -> Vec<i32> {
        let m = self.gens.len() as i32;
        (1..=m).flat_map(|i| [i, -i]).collect()
    }

    /// The out-neighbor of `v` under a signed label.
    pub fn neighbor(&self, v: &GroupElement, label: i32) -> GroupElement {
        let gen = &self.gens[(label.unsigned_abs() as usize) - 1];
        let step = if label < 0 { gen.inverse() } else { gen.clone() };
        match self.side {
            Side::Right => v.mul(&step),
            Side::Left => step.inverse().mul(v),
        }
    }

    /// The reverse of the edge `(from, label)`: same geometric edge, walked
    /// backwards, which starts at the out-neighbor and carries `-label`.
    pub fn reverse(&self, from: &GroupElement, label: i32) -> (GroupElement, i32) {
        (self.neighbor(from, label), -label)
    }

    /// Every out-edge of every vertex, in deterministic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.vertices.len() * 2 * self.gens.len());
        for v in &self.vertices {
            for label in self.labels() {
                let to = self.neighbor(v, label);
                let internal = self.vertices.contains(&to);
                out.push(Edge {
                    from: v.clone(),
                    to,
                    label,
                    internal,
                });
            }
        }
        out
    }

    /// Density and boundary statistics; checks `delta + iota = 2m` exactly.
    pub fn metrics(&self) -> Result<Metrics> {
        if self.vertices.is_empty() {
            return Err(Error::EmptySet);
        }
        let mut internal = 0usize;
        let mut external = 0usize;
        let mut boundary = 0usize;
        for v in &self.vertices {
            let mut misses = false;
            for label in self.labels() {
                if self.vertices.contains(&self.neighbor(v, label)) {
                    internal += 1;
                } else {
                    external += 1;
                    misses = true;
                }
            }
            if misses {
                boundary += 1;
            }
        }
        let n = BigInt::from(self.vertices.len());
        let delta = BigRational::new(BigInt::from(internal), n.clone());
        let iota = BigRational::new(BigInt::from(external), n);
        let two_m = BigRational::from(BigInt::from(2 * self.gens.len()));
        if &delta + &iota != two_m {
            return Err(Error::AssertionFailure(
                "edge accounting violates delta + iota = 2m".into(),
            ));
        }
        Ok(Metrics {
            m: self.gens.len(),
            delta,
            iota,
            internal_edges: internal,
            external_edges: external,
            inner_boundary: boundary,
        })
    }
}

/// Exact growth ratio `|A Y| / |Y|` under the left action `A Y = {a y}`;
/// `include_identity` adjoins the identity to `A` first.
pub fn ay_ratio(
    gens: &[GroupElement],
    ys: &BTreeSet<GroupElement>,
    include_identity: bool,
) -> Result<BigRational> {
    if ys.is_empty() {
        return Err(Error::EmptySet);
    }
    let mut products: BTreeSet<GroupElement> = BTreeSet::new();
    if include_identity {
        products.extend(ys.iter().cloned());
    }
    for a in gens {
        for y in ys {
            products.insert(a.mul(y));
        }
    }
    Ok(BigRational::new(
        BigInt::from(products.len()),
        BigInt::from(ys.len()),
    ))
}

/// The ball of radius `r`: all products of at most `r` letters drawn from the
/// generators and their inverses.
pub fn ball(gens: &[GroupElement], radius: usize) -> BTreeSet<GroupElement> {
    let mut seen: BTreeSet<GroupElement> = BTreeSet::new();
    seen.insert(GroupElement::identity());
    let mut frontier: Vec<GroupElement> = seen.iter().cloned().collect();
    for _ in 0..radius {
        let mut next = Vec::new();
        for g in &frontier {
            for a in gens {
                for step in [a.clone(), a.inverse()] {
                    let h = g.mul(&step);
                    if seen.insert(h.clone()) {
                        next.push(h);
                    }
                }
            }
        }
        frontier = next;
    }
    seen
}

/// The n-th image generator of the self-embedding `x0 -> y0, x1 -> y1` with
/// `y0 = x0 x2^-1` and `y1 = x1 x2^-1`; for n >= 2,
/// `y_n = y0^-(n-1) y1 y0^(n-1)` (conjugation, mirroring
/// `x_n = x0^-(n-1) x1 x0^(n-1)`).
pub fn y_generator(n: u32) -> GroupElement {
    let y0 = GroupElement::generator(0).mul(&GroupElement::generator(2).inverse());
    let y1 = GroupElement::generator(1).mul(&GroupElement::generator(2).inverse());
    match n {
        0 => y0,
        1 => y1,
        _ => y1.conjugate(&y0.pow((n - 1) as i32)),
    }
}

/// Applies the self-embedding to a word: letters of index 0 and 1 are read as
/// `y0`, `y1` and the product is reduced.
pub fn y_embed(word: &[Letter]) -> Result<GroupElement> {
    let mut acc = GroupElement::identity();
    for l in word {
        if l.index > 1 {
            return Err(Error::UnsupportedGenerator(format!(
                "the embedding substitutes y0 and y1 only, found index {}",
                l.index
            )));
        }
        let y = y_generator(l.index);
        acc = acc.mul(&if l.inverse { y.inverse() } else { y });
    }
    Ok(acc)
}

/// Rational flow values on directed internal edges, keyed by (source vertex,
/// signed label).
#[derive(Debug, Clone, Default)]
pub struct FlowAssignment {
    values: BTreeMap<(GroupElement, i32), BigRational>,
}

impl FlowAssignment {
    pub fn new() -> Self {
        FlowAssignment::default()
    }

    pub fn set(&mut self, from: GroupElement, label: i32, value: BigRational) {
        self.values.insert((from, label), value);
    }

    pub fn get(&self, from: &GroupElement, label: i32) -> Option<&BigRational> {
        self.values.get(&(from.clone(), label))
    }
}

/// Outcome of checking a flow against a subgraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowReport {
    /// Antisymmetric and every vertex's inflow reaches the threshold.
    pub ok: bool,
    pub antisymmetric: bool,
    /// Smallest inflow over all vertices (0 for a vertex with no internal
    /// incoming edges).
    pub min_inflow: BigRational,
    /// Largest |f(e)|: the boundedness witness.
    pub max_abs: BigRational,
}

/// Verifies a flow on the internal edges of `graph`: every internal directed
/// edge must carry a value (`MissingEdgeValue` otherwise), reverse edges must
/// carry opposite values, and every vertex's inflow — the sum over internal
/// edges pointing at it — must be at least `eps`.
pub fn flow_check(
    graph: &CayleySubgraph,
    flow: &FlowAssignment,
    eps: &BigRational,
) -> Result<FlowReport> {
    if graph.num_vertices() == 0 {
        return Err(Error::EmptySet);
    }
    let mut antisymmetric = true;
    let mut max_abs = BigRational::zero();
    let mut inflow: BTreeMap<&GroupElement, BigRational> = graph
        .vertices()
        .map(|v| (v, BigRational::zero()))
        .collect();
    for edge in graph.edges() {
        if !edge.internal {
            continue;
        }
        let value = flow.get(&edge.from, edge.label).ok_or_else(|| {
            Error::MissingEdgeValue(format!(
                "no value for the edge from {} with label {}",
                edge.from, edge.label
            ))
        })?;
        let (rev_from, rev_label) = graph.reverse(&edge.from, edge.label);
        let reverse = flow.get(&rev_from, rev_label).ok_or_else(|| {
            Error::MissingEdgeValue(format!(
                "no value for the reverse edge from {rev_from} with label {rev_label}"
            ))
        })?;
        if &(value + reverse) != &BigRational::zero() {
            antisymmetric = false;
        }
        if value.abs() > max_abs {
            max_abs = value.abs();
        }
        if let Some(acc) = inflow.get_mut(&edge.to) {
            *acc += value;
        }
    }
    let min_inflow = inflow
        .into_values()
        .min()
        .expect("nonempty vertex set");
    let ok = antisymmetric && &min_inflow >= eps;
    Ok(FlowReport {
        ok,
        antisymmetric,
        min_inflow,
        max_abs,
    })
}
