//! The basic solution of (1 - x0) u = (1 - x1) v in the monoid ring, the seed
//! from which whole families of solutions grow.

use thompson_f::solve::{basic_solution, extend_solution, Limits};
use thompson_f::text::parse_poly;
use thompson_f::{FieldTag, Polynomial};

fn main() -> thompson_f::Result<()> {
    let q = FieldTag::Rational;
    let base = basic_solution(q);
    println!("u0 = {}", base.u);
    println!("v0 = {}", base.v);

    // Verify the identity by explicit exact multiplication.
    let lhs = &Polynomial::one_minus(q, 0) * &base.u;
    let rhs = &Polynomial::one_minus(q, 1) * &base.v;
    println!("(1 - x0) u0 = {lhs}");
    println!("(1 - x1) v0 = {rhs}");
    println!("identity holds: {}", lhs == rhs);

    // u0 factors as (1 + x0 - x1)(1 - x3).
    let factored = &parse_poly("1 + x0 - x1", q)? * &parse_poly("1 - x3", q)?;
    println!("(1 + x0 - x1)(1 - x3) = u0: {}", factored == base.u);

    // Any solution (u', v') and any multiplier w produce a strictly larger
    // solution; iterating from (u0, v0) gives an infinite family.
    let limits = Limits::default();
    let w = parse_poly("1 + 2*x2", q)?;
    let bigger = extend_solution(&base.u, &base.v, &w, &limits)?;
    println!("extended with w = 1 + 2*x2:");
    println!("u = {}", bigger.u);
    println!("v = {}", bigger.v);
    let again = extend_solution(&bigger.u, &bigger.v, &Polynomial::one(q), &limits)?;
    println!(
        "second extension: u has {} terms, v has {} terms",
        again.u.num_terms(),
        again.v.num_terms()
    );

    // The same pair exists over any prime field.
    let f5 = FieldTag::prime(5)?;
    let modular = basic_solution(f5);
    println!("over F5: u0 = {}", modular.u);
    Ok(())
}
