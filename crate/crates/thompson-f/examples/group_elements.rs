//! Group normal forms p * (q)^-1 in Thompson's group F, reduction of
//! arbitrary words, and translation of finite sets into the positive monoid.

use thompson_f::group::{gig_translate, reduce_word};
use thompson_f::text::{format_word, parse_word};
use thompson_f::{GroupElement, Result};

fn main() -> Result<()> {
    // Every element of F is a fraction p * q^-1 of two positive words, and
    // the reduced form is unique. Capital letters denote inverses.
    for text in ["x1*X0", "X1*x0*x1", "x0*x1*X0*X1", "x2*X3*X2*x3"] {
        let word = parse_word(text)?;
        let element = reduce_word(&word);
        println!("{} reduces to {element}", format_word(&word));
    }

    // Words that differ by a defining relation reduce to the same element.
    let a = reduce_word(&parse_word("x3*x1")?);
    let b = reduce_word(&parse_word("x1*x4")?);
    println!("x3*x1 = {a}, x1*x4 = {b}, equal: {}", a == b);

    // A product with its inverse collapses to the identity.
    let w = parse_word("x0*X1*x2^-2*x3")?;
    let e = reduce_word(&w);
    println!("w = {e}, w * w^-1 = {}", e.mul(&e.inverse()));

    // Conjugation in normal form: x1 conjugated by x0^k is x_{k+1}.
    let x0 = GroupElement::generator(0);
    let x1 = GroupElement::generator(1);
    for k in 1..=3 {
        println!("x1^(x0^{k}) = {}", x1.conjugate(&x0.pow(k)));
    }

    // Any finite set of group elements can be pushed into the monoid by one
    // common right multiplier g: each element times g is positive.
    let elements = [
        reduce_word(&parse_word("x1*X0")?),
        reduce_word(&parse_word("X2*x1")?),
        reduce_word(&parse_word("x0*X3")?),
    ];
    let (g, images) = gig_translate(&elements);
    println!("common multiplier g = {g}");
    for (e, m) in elements.iter().zip(&images) {
        println!("  ({e}) * g = {m}");
    }
    Ok(())
}
