//! Solving (1 - x0) u = b v with v nonzero, for arbitrary nonzero b: the
//! equation behind the Ore condition on the monoid ring.

use thompson_f::solve::{solve_x0_b, Limits};
use thompson_f::text::parse_poly;
use thompson_f::{FieldTag, Polynomial};

fn main() -> thompson_f::Result<()> {
    let q = FieldTag::Rational;
    let limits = Limits::default();

    for text in ["1", "1 - x1", "x1 - x0*x1", "x1 + x2", "x0^2*x1 - x2^3"] {
        let b = parse_poly(text, q)?;
        let sol = solve_x0_b(&b, &limits)?;
        let lhs = &Polynomial::one_minus(q, 0) * &sol.u;
        let rhs = &b * &sol.v;
        println!("b = {text}");
        println!("  u = {}", sol.u);
        println!("  v = {}", sol.v);
        println!(
            "  (1 - x0) u = b v holds: {}, v nonzero: {}",
            lhs == rhs,
            !sol.v.is_zero()
        );
    }

    // Over a prime field the same search runs with modular coefficients.
    let f5 = FieldTag::prime(5)?;
    let b = parse_poly("1 + 4*x1 + x2", f5)?;
    let sol = solve_x0_b(&b, &limits)?;
    println!(
        "over F5, b = {b}: u has {} terms, v has {} terms, verified {}",
        sol.u.num_terms(),
        sol.v.num_terms(),
        &Polynomial::one_minus(f5, 0) * &sol.u == &b * &sol.v
    );
    Ok(())
}
