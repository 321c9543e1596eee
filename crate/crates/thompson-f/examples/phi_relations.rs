//! For every nonzero b in the monoid ring, the shifted copies b, phi(b),
//! phi^2(b), ... are right linearly dependent: some sum of right multiples
//! sum_t phi^t(b) v_t vanishes with not all v_t zero. This demonstrates the
//! constructive witness the solver returns.

use thompson_f::solve::{phi_relation, Limits};
use thompson_f::text::parse_poly;
use thompson_f::{FieldTag, Polynomial};

fn check(b: &Polynomial, vs: &[Polynomial]) -> bool {
    let mut total = Polynomial::zero(b.field());
    for (t, v) in vs.iter().enumerate() {
        total = &total + &(&b.shift_up(t as u32) * v);
    }
    total.is_zero() && vs.iter().any(|v| !v.is_zero())
}

fn main() -> thompson_f::Result<()> {
    let q = FieldTag::Rational;
    let limits = Limits::default();

    for text in ["1 - x1", "x0", "x1 + x2", "1 + x0 + x1^2", "2 - 1/3*x0*x2"] {
        let b = parse_poly(text, q)?;
        let vs = phi_relation(&b, &limits)?;
        println!("b = {text}");
        for (t, v) in vs.iter().enumerate() {
            if !v.is_zero() {
                println!("  v{t} = {v}");
            }
        }
        println!(
            "  sum_t phi^t(b) v_t = 0 with {} nonzero v's: {}",
            vs.iter().filter(|v| !v.is_zero()).count(),
            check(&b, &vs)
        );
    }

    // For a homogeneous b the relation closes after one shift:
    // phi^m(b) * b = b * phi^(m+d)(b) for suitable m, so (v_0, ..., v_m)
    // can be read off directly.
    let b = parse_poly("x0*x1 - x1*x2", q)?;
    let vs = phi_relation(&b, &limits)?;
    println!("homogeneous b = {b} gives a relation of length {}", vs.len());

    // The same works over a prime field.
    let f7 = FieldTag::prime(7)?;
    let b = parse_poly("1 + 3*x1", f7)?;
    let vs = phi_relation(&b, &limits)?;
    println!("over F7, b = {b}: verified {}", check(&b, &vs));
    Ok(())
}
