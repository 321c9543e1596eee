//! The structure of ALL solutions of (1 - x0) u = (1 - x1) v: a basis
//! u_0, u_1, u_2, ... such that every solution is a unique combination
//! u = sum_k u_k r_k, recovered here by exact division.

use thompson_f::solve::{
    basic_solution, basis_u, decompose_solution, divide_by_v0, extend_solution, Limits,
};
use thompson_f::text::parse_poly;
use thompson_f::{FieldTag, Polynomial};

fn main() -> thompson_f::Result<()> {
    let q = FieldTag::Rational;
    let limits = Limits::default();

    // The basis elements: u_k is a shifted, index-raised copy of the basic u.
    for k in 0..=3 {
        println!("u_{k} = {}", basis_u(k, q, &limits)?);
    }

    // Division with remainder by the basic v0 underlies the decomposition:
    // v = v0 w1 + x0 w2 + w3 with w2, w3 free of x0.
    let v = parse_poly("x0^2", q)?;
    let (w1, w2, w3) = divide_by_v0(&v, &limits)?;
    println!("dividing v = x0^2 by v0:");
    println!("  w1 = {w1}");
    println!("  w2 = {w2}");
    println!("  w3 = {w3}");
    let v0 = basic_solution(q).v;
    let rebuilt = &(&(&v0 * &w1) + &(&Polynomial::generator(q, 0) * &w2)) + &w3;
    println!("  v0 w1 + x0 w2 + w3 = v: {}", rebuilt == v);

    // Build a random-looking solution by extension, then decompose it.
    let base = basic_solution(q);
    let w = parse_poly("1 - x1 + x3", q)?;
    let sol = extend_solution(&base.u, &base.v, &w, &limits)?;
    let rs = decompose_solution(&sol.u, &sol.v, &limits)?;
    println!("decomposition of an extended solution:");
    for (k, r) in rs.iter().enumerate() {
        if !r.is_zero() {
            println!("  r{k} = {r}");
        }
    }
    // Reassemble u = sum_k u_k r_k and compare.
    let mut rebuilt = Polynomial::zero(q);
    for (k, r) in rs.iter().enumerate() {
        rebuilt = &rebuilt + &(&basis_u(k, q, &limits)? * r);
    }
    println!("  sum_k u_k r_k = u: {}", rebuilt == sol.u);
    Ok(())
}
