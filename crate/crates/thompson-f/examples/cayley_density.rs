//! Exact density and boundary statistics of finite Cayley subgraphs of F,
//! growth ratios |A Y| / |Y|, the self-embedding x0 -> x0 x2^-1,
//! x1 -> x1 x2^-1, and flow verification.

use num::rational::BigRational;
use num::{BigInt, Zero};
use thompson_f::graphs::{
    ay_ratio, ball, flow_check, y_embed, y_generator, CayleySubgraph, FlowAssignment, Side,
};
use thompson_f::group::reduce_word;
use thompson_f::text::parse_word;
use thompson_f::GroupElement;

fn main() -> thompson_f::Result<()> {
    let gens: Vec<GroupElement> = [0, 1, 2].map(GroupElement::generator).into();

    // Density delta (internal directed edges per vertex) and boundary ratio
    // iota always add up to 2m; dense sets have small iota.
    for radius in 0..=2 {
        let vertices = ball(&gens[..2], radius);
        let graph = CayleySubgraph::new(vertices, gens.clone(), Side::Right)?;
        let m = graph.metrics()?;
        println!(
            "ball of radius {radius} in x0, x1: {} vertices, delta = {}, iota = {}",
            graph.num_vertices(),
            m.delta,
            m.iota
        );
    }

    // Growth under the left action: |A Y| / |Y| for Y a two-element set.
    let ys = [
        GroupElement::identity(),
        GroupElement::generator(0),
    ]
    .into_iter()
    .collect();
    println!("|A Y| / |Y| = {}", ay_ratio(&gens, &ys, false)?);

    // F embeds into itself by x0 -> y0 = x0 x2^-1, x1 -> y1 = x1 x2^-1; the
    // images of the higher generators have compact normal forms.
    for n in 0..=4 {
        println!("y{n} = {}", y_generator(n));
    }
    // The embedding respects the defining relations: the relator below maps
    // to the identity.
    let relator = parse_word("X0*X0*x1*x0*x0*X1*X0*X1*x0*x1")?;
    println!(
        "relator image is identity: {} (the relator itself reduces to {})",
        y_embed(&relator)?.is_identity(),
        reduce_word(&relator)
    );

    // A flow on internal edges with inflow >= eps everywhere and bounded
    // values certifies expansion; here a two-vertex toy graph carries only
    // the zero flow, whose inflow is 0.
    let vertices = [GroupElement::identity(), GroupElement::generator(0)];
    let graph = CayleySubgraph::new(vertices, vec![GroupElement::generator(0)], Side::Right)?;
    let mut flow = FlowAssignment::new();
    for e in graph.edges().into_iter().filter(|e| e.internal) {
        flow.set(e.from.clone(), e.label, BigRational::zero());
    }
    let report = flow_check(&graph, &flow, &BigRational::zero())?;
    println!(
        "zero flow: ok = {}, max |f| = {}",
        report.ok, report.max_abs
    );
    let eps = BigRational::from(BigInt::from(1));
    let report = flow_check(&graph, &flow, &eps)?;
    println!("zero flow with eps = 1: ok = {}", report.ok);
    Ok(())
}
