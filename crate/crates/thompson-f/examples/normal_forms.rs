//! Normal forms in the positive monoid `<x0, x1, ... | x_j x_i = x_i x_(j+1), i < j>`.
//!
//! Every word rewrites to a unique word with nondecreasing indices; products,
//! least common right multiples, and index shifts all stay in normal form.

use thompson_f::group::lcm;
use thompson_f::monoid::monomials_up_to;
use thompson_f::Monomial;

fn main() {
    // The defining rule pushes larger indices right, bumping them by one:
    // x1 x0 = x0 x2, x3 x1 = x1 x4, and so on.
    for word in [vec![1, 0], vec![3, 1], vec![2, 2, 0], vec![5, 3, 1, 0]] {
        let m = Monomial::normalize(&word);
        let letters: Vec<String> = word.iter().map(|i| format!("x{i}")).collect();
        println!("{} = {m}", letters.join("*"));
    }

    // Multiplication concatenates and renormalizes.
    let a = Monomial::normalize(&[0, 2]);
    let b = Monomial::normalize(&[1, 1]);
    println!("({a}) * ({b}) = {}", a.mul(&b));

    // Any two monomials have a least common right multiple; x0 and x1 join
    // at x0*x2 because x1*x0 = x0*x2.
    let x0 = Monomial::generator(0);
    let x1 = Monomial::generator(1);
    println!("lcm({x0}, {x1}) = {}", lcm(&x0, &x1));
    let p = Monomial::normalize(&[0, 1]);
    let q = Monomial::normalize(&[1, 3]);
    println!("lcm({p}, {q}) = {}", lcm(&p, &q));

    // The shift endomorphism renames x_i to x_(i+1); it embeds the monoid
    // into the submonoid generated by x1, x2, ...
    let m = Monomial::normalize(&[0, 0, 1, 3]);
    println!("shift({m}) = {}", m.shift_up(1));

    // Counting monomials under degree/index bounds (the supports used by the
    // bounded searches).
    for (d, j) in [(2, 2), (3, 3), (4, 3)] {
        println!(
            "monomials with degree <= {d}, index <= {j}: {}",
            monomials_up_to(d, j).len()
        );
    }
}
