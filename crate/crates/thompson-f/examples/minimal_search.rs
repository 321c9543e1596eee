//! Brute-force discovery of chain solutions by exact linear algebra: assemble
//! the coefficient system over a bounded monomial support, compute its
//! nullspace, and post-process toward small supports.

use thompson_f::monoid::monomials_up_to;
use thompson_f::search::{build_system, minimal_chain_search, nullspace};
use thompson_f::solve::{basic_solution, Limits};
use thompson_f::{FieldTag, Polynomial};

fn main() -> thompson_f::Result<()> {
    let q = FieldTag::Rational;
    let limits = Limits::default();

    // The chain system for m = 1 over all monomials of degree <= 3 and
    // index <= 3: two unknown polynomials, one equation per product monomial.
    let support = monomials_up_to(3, 3);
    let lefts: Vec<Polynomial> = (0..=1).map(|i| Polynomial::one_minus(q, i)).collect();
    let sys = build_system(&lefts, &vec![support.clone(); 2])?;
    println!(
        "system: {} columns ({} monomials per block), {} rows",
        sys.num_columns(),
        support.len(),
        sys.num_rows()
    );
    let basis = nullspace(&sys)?;
    println!("nullspace dimension: {}", basis.dimension());

    // The sparse matrix exports as "row col value" triplets.
    let triplets = sys.to_triplets();
    println!("first triplet lines:");
    for line in triplets.lines().take(3) {
        println!("  {line}");
    }

    // The search returns verified candidates ordered by support size; within
    // these bounds it recovers the basic pair (or something just as small).
    let candidates = minimal_chain_search(1, 3, 3, q, 0, &limits)?;
    println!("candidates found: {}", candidates.len());
    let best = &candidates[0];
    for (j, u) in best.us.iter().enumerate() {
        println!("  u{j} = {u}");
    }
    let base = basic_solution(q);
    println!(
        "matches the basic pair size: {} vs {}",
        best.us.iter().map(|u| u.num_terms()).sum::<usize>(),
        base.u.num_terms() + base.v.num_terms()
    );

    // Shrinking the support below the smallest solution leaves only zero:
    // the search reports that finding rather than inventing an answer.
    match minimal_chain_search(1, 1, 3, q, 0, &limits) {
        Err(e) => println!("degree <= 1: {e}"),
        Ok(_) => unreachable!("no chain solution fits in degree 1"),
    }
    Ok(())
}
