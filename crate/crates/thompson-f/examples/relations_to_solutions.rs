//! From group relations to ring solutions: any word that reduces to the
//! identity in F telescopes into a formal identity
//! (1 - x0) U + (1 - x1) V = 0 over the group, and a common positive
//! translation turns (U, -V) into a solution of (1 - x0) u = (1 - x1) v.

use thompson_f::group::reduce_word;
use thompson_f::relations::{conjugation_relation, relation_to_solution, telescope};
use thompson_f::solve::decompose_solution;
use thompson_f::text::{format_word, parse_word};
use thompson_f::{FieldTag, Monomial, Polynomial};

fn main() -> thompson_f::Result<()> {
    let q = FieldTag::Rational;
    let limits = thompson_f::solve::Limits::default();

    // Telescoping any word w gives (1 - x0) U + (1 - x1) V = 1 - w-bar.
    let word = parse_word("x0*x1*X0")?;
    let (u, v) = telescope(&word, q)?;
    println!("word {}:", format_word(&word));
    println!("  U = {u}");
    println!("  V = {v}");

    // A defining relation of F: x1 conjugated by x0^2 equals x1 conjugated
    // by x0*x1. Its relation word reduces to the identity...
    let relator = parse_word("X0*X0*x1*x0*x0*X1*X0*X1*x0*x1")?;
    println!(
        "relator {} reduces to {}",
        format_word(&relator),
        reduce_word(&relator)
    );

    // ...and becomes a verified nonzero solution pair.
    let sol = relation_to_solution(&relator, q)?;
    println!("  u = {}", sol.u);
    println!("  v = {}", sol.v);
    let holds =
        &Polynomial::one_minus(q, 0) * &sol.u == &Polynomial::one_minus(q, 1) * &sol.v;
    println!("  (1 - x0) u = (1 - x1) v: {holds}");

    // The resulting pair decomposes over the solution basis like any other.
    let rs = decompose_solution(&sol.u, &sol.v, &limits)?;
    let used: Vec<String> = rs
        .iter()
        .enumerate()
        .filter(|(_, r)| !r.is_zero())
        .map(|(k, r)| format!("r{k} = {r}"))
        .collect();
    println!("  basis coordinates: {}", used.join(", "));

    // Build another relation from the conjugation family x1^(x0^k) = x1^(w).
    let word = conjugation_relation(3, &Monomial::normalize(&[0, 0, 1]));
    let sol = relation_to_solution(&word, q)?;
    println!(
        "x1^(x0^3) = x1^(x0^2 x1) gives u with {} terms, v with {} terms",
        sol.u.num_terms(),
        sol.v.num_terms()
    );
    Ok(())
}
