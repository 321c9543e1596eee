//! Binary trees and forests: Catalan counting, exhaustive enumeration,
//! height-bounded marked forests, and composition by grafting.

use thompson_f::forests::{
    catalan, catalan_by_recurrence, compose, count_bb, count_forests, count_s, enumerate_s,
    enumerate_trees, Forest,
};

fn main() -> thompson_f::Result<()> {
    // The closed form (2n)! / (n! (n+1)!) and the convolution recurrence
    // agree; both count binary trees with n carets.
    for n in [0, 1, 2, 3, 5, 10] {
        println!(
            "c_{n} = {} (recurrence: {})",
            catalan(n),
            catalan_by_recurrence(n)
        );
    }
    println!("trees with 3 carets: {:?}", enumerate_trees(3)?.len());

    // Forests with n leaves are also counted by c_n.
    for n in 1..=6 {
        println!("forests with {n} leaves: {}", count_forests(n));
    }

    // Forests with fixed root and leaf counts form the Catalan triangle.
    println!("forests with 2 roots and 4 leaves:");
    for f in enumerate_s(2, 4)? {
        println!("  {f}");
    }
    println!("count S(3, 7) = {}", count_s(3, 7));

    // Marked forests with height-bounded trees; each forest is counted once
    // per tree.
    for (n, k) in [(3, 1), (4, 1), (4, 2), (10, 2)] {
        println!("marked forests, {n} leaves, height <= {k}: {}", count_bb(n, k));
    }

    // Composition grafts the lower forest's trees onto the upper forest's
    // leaves, left to right; leaf and root counts must match.
    let top = &enumerate_s(2, 3)?[0];
    let bottom = &enumerate_s(3, 5)?[1];
    let product = compose(top, bottom)?;
    println!("({top}) o ({bottom}) = {product}");
    println!(
        "roots {} -> {}, leaves {} -> {}",
        top.roots(),
        product.roots(),
        bottom.leaves(),
        product.leaves()
    );
    // The trivial forest of n leaves is the identity.
    let id = Forest::trivial(top.leaves())?;
    println!("composing with the trivial forest: {}", compose(top, &id)? == *top);
    Ok(())
}
