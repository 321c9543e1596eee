//! Chains of equations (1 - x0) u_0 = (1 - x1) u_1 = ... = (1 - x_m) u_m
//! with one nonzero common value. Solutions exist for every length; their
//! supports grow quickly with m.

use thompson_f::solve::{chain_solve, verify_solution, Limits};
use thompson_f::{FieldTag, Polynomial};

fn main() -> thompson_f::Result<()> {
    let q = FieldTag::Rational;
    let limits = Limits::default();

    // m = 1 is the basic pair.
    let chain = chain_solve(1, q, &limits)?;
    println!("m = 1:");
    for (j, u) in chain.us.iter().enumerate() {
        println!("  u{j} = {u}");
    }
    println!("  common value w = {}", chain.common);

    // m = 2: three unknowns tied by two equalities.
    let chain = chain_solve(2, q, &limits)?;
    println!("m = 2:");
    for (j, u) in chain.us.iter().enumerate() {
        println!("  u{j}: {} terms", u.num_terms());
    }
    println!(
        "  w: {} terms, degree {:?}",
        chain.common.num_terms(),
        chain.common.degree()
    );
    // Re-verify the whole chain independently.
    let lefts: Vec<Polynomial> = (0..=2).map(|i| Polynomial::one_minus(q, i)).collect();
    let check = verify_solution(&lefts, &chain.us)?;
    println!("  verified: {}, nonzero: {}", check.holds, check.nonzero);

    // Over a prime field the supports are the same.
    let f5 = FieldTag::prime(5)?;
    let modular = chain_solve(2, f5, &limits)?;
    println!(
        "m = 2 over F5: w has {} terms",
        modular.common.num_terms()
    );

    // m = 3 also succeeds (it switches to a bounded support search
    // internally and takes around half a minute), so it is not run here:
    //     chain_solve(3, q, &limits)
    println!("m = 3 is reachable too; see the test suite for its run.");
    Ok(())
}
