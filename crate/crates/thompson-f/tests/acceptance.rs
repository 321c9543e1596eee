//! Acceptance gate: thirteen end-to-end checks, one visible pass/fail line
//! each. The binary runs without the default test harness so the report
//! always prints, in order, inside `cargo test --workspace` output.

mod support;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use num::rational::BigRational;
use num::{BigInt, BigUint};
use rand::Rng;
use support::*;
use thompson_f::forests::{
    catalan, catalan_by_recurrence, compose, count_bb, count_forests, enumerate_bb, enumerate_s,
    enumerate_trees,
};
use thompson_f::graphs::{self, ball, y_embed, y_generator, CayleySubgraph, Side};
use thompson_f::group::{lcm, reduce_word, GroupElement};
use thompson_f::monoid::{monomials_of_degree, monomials_up_to};
use thompson_f::relations::{conjugation_relation, relation_to_solution, telescope, FormalSum};
use thompson_f::ring::one_minus_left_divide;
use thompson_f::search::{build_system, minimal_chain_search, nullspace};
use thompson_f::solve::{
    basic_solution, basis_u, chain_solve, decompose_solution, divide_by_v0, phi_relation,
    solve_x0_b, verify_solution, Limits,
};
use thompson_f::text::{parse_poly, parse_word};
use thompson_f::{Error, FieldElem, FieldTag, Monomial, Polynomial};

const Q: FieldTag = FieldTag::Rational;

fn q(text: &str) -> Polynomial {
    parse_poly(text, Q).unwrap()
}

fn report(n: u32, name: &str, body: impl FnOnce() -> String) -> bool {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(detail) if detail.is_empty() => {
            println!("criterion {n:02} {name}: pass");
            true
        }
        Ok(detail) => {
            println!("criterion {n:02} {name}: pass ({detail})");
            true
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<String>()
                .map(String::as_str)
                .or_else(|| payload.downcast_ref::<&str>().copied())
                .unwrap_or("panicked");
            println!("criterion {n:02} {name}: fail ({msg})");
            false
        }
    }
}

fn main() {
    // keep the report to one line per criterion: stash panic payloads
    // instead of letting the default hook print backtraces between lines
    std::panic::set_hook(Box::new(|_| {}));
    let start = Instant::now();
    let mut ok = true;
    ok &= report(1, "basic solution identity over the rationals", c01);
    ok &= report(2, "relation word to verified, decomposable solution", c02);
    ok &= report(3, "solution basis recursion matches its closed form", c03);
    ok &= report(4, "division by the basic v0 with remainder bounds", c04);
    ok &= report(5, "shift relations verified and structure preserved", c05);
    ok &= report(6, "solve (1 - x0) u = b v on the directed and random suite", c06);
    ok &= report(7, "chain solutions for m = 2 and m = 3", c07);
    ok &= report(8, "y-generator normal forms, ladder, and relator images", c08);
    ok &= report(9, "forest combinatorics: counts, enumeration, composition", c09);
    ok &= report(10, "density identity delta + iota = 2m and growth ratios", c10);
    ok &= report(11, "lcm minimality by bounded brute force", c11);
    ok &= report(12, "nullspace search consistency with the basic pair", c12);
    ok &= report(13, "seeded property suites within the time budget", || {
        c13(start)
    });
    if ok {
        println!("acceptance: all 13 criteria passed");
    } else {
        println!("acceptance: FAILURES above");
        std::process::exit(1);
    }
}

fn c01() -> String {
    let t = Instant::now();
    let lhs = &(&q("1 - x0") * &q("1 + x0 - x1")) * &q("1 - x3");
    let rhs = &q("1 - x1") * &q("1 - x3 - x0^2 + x0*x1");
    assert_eq!(lhs, rhs);
    assert!(!lhs.is_zero());
    // the built-in basic pair is exactly this identity
    let pair = basic_solution(Q);
    assert_eq!(pair.u, &q("1 + x0 - x1") * &q("1 - x3"));
    assert_eq!(pair.v, q("1 - x3 - x0^2 + x0*x1"));
    let secs = t.elapsed().as_secs_f64();
    assert!(secs < 1.0, "took {secs:.3}s, budget 1s");
    format!("{secs:.4}s")
}

fn c02() -> String {
    // the formal identity with both pieces written out in full
    let zero = &(&q("1 - x0") * &q("1 + x0 - x0*x3 - x3 + x1*x3 - x1"))
        + &(&q("1 - x1") * &q("x0^2 + x3 - x0*x1 - 1"));
    assert!(zero.is_zero());

    // the word of x1^(x0^2) (x1^(x0 x1))^-1 becomes a verified solution
    let word = conjugation_relation(2, &Monomial::normalize(&[0, 1]));
    assert!(reduce_word(&word).is_identity());
    let sol = relation_to_solution(&word, Q).unwrap();
    let lefts = [Polynomial::one_minus(Q, 0), Polynomial::one_minus(Q, 1)];
    let check = verify_solution(&lefts, &[sol.u.clone(), sol.v.clone()]).unwrap();
    assert!(check.holds && check.nonzero);

    let limits = Limits::default();
    let rs = decompose_solution(&sol.u, &sol.v, &limits).unwrap();
    let mut rebuilt = Polynomial::zero(Q);
    for (i, r) in rs.iter().enumerate() {
        rebuilt = &rebuilt + &(&basis_u(i, Q, &limits).unwrap() * r);
    }
    assert_eq!(rebuilt, sol.u);
    let plural = if rs.len() == 1 { "" } else { "s" };
    format!("decomposed with {} basis coefficient{plural}", rs.len())
}

fn c03() -> String {
    let limits = Limits::default();
    for k in 0..=6u32 {
        // basis_u cross-checks recursion against the closed form internally;
        // rebuild the closed form here from parsed factors as well
        let uk = basis_u(k as usize, Q, &limits).unwrap();
        let mut closed = Polynomial::one(Q);
        for j in 1..=k {
            closed = &closed * &q(&format!("1 - x{j}"));
        }
        closed = &closed * &q(&format!("1 + x{k} - x{}", k + 1));
        closed = &closed * &q(&format!("1 - x{}", k + 3));
        assert_eq!(uk, closed, "k = {k}");
    }
    assert_eq!(basis_u(0, Q, &limits).unwrap(), basic_solution(Q).u);
    let u1 = basis_u(1, Q, &limits).unwrap();
    let printed = (&(&q("1 - x1") * &q("1 + x1 - x2")) * &q("1 - x4")).to_string();
    assert_eq!(u1.to_string(), printed);
    format!("u1 = {printed}")
}

fn c04() -> String {
    let limits = Limits::default();
    let mut rng = rng(404);
    let v0 = basic_solution(Q).v;
    let x0 = Polynomial::generator(Q, 0);
    for i in 0..200 {
        let v = random_poly(&mut rng, Q, 6, 6, 5);
        let (w1, w2, w3) = divide_by_v0(&v, &limits).unwrap();
        assert_eq!(&(&(&v0 * &w1) + &(&x0 * &w2)) + &w3, v, "iteration {i}");
        assert!(w2.in_sub_mi(1) && w3.in_sub_mi(1), "iteration {i}");
        if let (Some(dv), Some(d2)) = (v.degree(), w2.degree()) {
            assert!(d2 + 1 <= dv, "iteration {i}: deg(x0 w2) > deg v");
        }
        if let (Some(dv), Some(d3)) = (v.degree(), w3.degree()) {
            assert!(d3 <= dv, "iteration {i}: deg w3 > deg v");
        }
    }
    // the plain x0^2 case and its frozen remainder
    let (w1, w2, w3) = divide_by_v0(&q("x0^2"), &limits).unwrap();
    assert_eq!((w1, w2.clone(), w3.clone()), (q("-1"), q("x1"), q("1 - x3")));
    assert_eq!(&(&x0 * &w2) + &w3, q("1 - x3 + x0*x1"));
    String::new()
}

fn c05() -> String {
    let limits = Limits::default();
    let mut rng = rng(505);
    // 200 random inputs, each verified exactly against the defining sum
    for i in 0..200 {
        let b = random_nonzero_poly(&mut rng, Q, 4, 3, 3);
        let vs = phi_relation(&b, &limits).unwrap();
        assert!(vs.iter().any(|v| !v.is_zero()), "iteration {i}");
        let mut acc = Polynomial::zero(Q);
        for (t, vt) in vs.iter().enumerate() {
            acc = &acc + &(&b.shift_up(t as u32) * vt);
        }
        assert!(acc.is_zero(), "iteration {i}");
    }
    // homogeneous inputs take the closed form with m = index span + 1
    for i in 0..30 {
        let d = rng.gen_range(1..=3usize);
        let pool = monomials_of_degree(d, 4);
        let terms = rng.gen_range(1..=3usize);
        let mut b = Polynomial::zero(Q);
        for _ in 0..terms {
            let m = pool[rng.gen_range(0..pool.len())].clone();
            let c = rng.gen_range(1..=4i64);
            b = &b + &Polynomial::monomial(Q, m).scale(&FieldElem::integer(Q, c));
        }
        let m = b.index_span() as usize + 1;
        assert_eq!(
            &b.shift_up(m as u32) * &b,
            &b * &b.shift_up((m + d) as u32),
            "iteration {i}: commutation identity"
        );
        let vs = phi_relation(&b, &limits).unwrap();
        assert_eq!(vs.len(), m + 1, "iteration {i}");
        assert_eq!(vs[0], b.shift_up((m + d) as u32), "iteration {i}");
        assert_eq!(vs[m], -&b, "iteration {i}");
        for v in &vs[1..m] {
            assert!(v.is_zero(), "iteration {i}");
        }
    }
    // coefficients stay inside the shifted subring the input lives in
    for i in 0..30 {
        let b = random_nonzero_poly(&mut rng, Q, 3, 3, 2).shift_up(2);
        assert!(b.in_sub_mi(2));
        let vs = phi_relation(&b, &limits).unwrap();
        assert!(vs.iter().all(|v| v.in_sub_mi(2)), "iteration {i}");
    }
    String::new()
}

fn c06() -> String {
    let limits = Limits::default();
    let mut rng = rng(606);
    let one_minus_x0 = Polynomial::one_minus(Q, 0);
    let mut suite: Vec<Polynomial> = vec![q("1"), q("1 - x1"), q("x1 - x0*x1"), q("x1 + x2")];
    // one random homogeneous cubic
    let pool = monomials_of_degree(3, 3);
    let mut cubic = Polynomial::zero(Q);
    for _ in 0..3 {
        let m = pool[rng.gen_range(0..pool.len())].clone();
        let c = rng.gen_range(1..=4i64);
        cubic = &cubic + &Polynomial::monomial(Q, m).scale(&FieldElem::integer(Q, c));
    }
    suite.push(cubic);
    for _ in 0..100 {
        suite.push(random_nonzero_poly(&mut rng, Q, 3, 2, 3));
    }
    let mut slowest = 0f64;
    for (i, b) in suite.iter().enumerate() {
        let t = Instant::now();
        let sol = solve_x0_b(b, &limits).unwrap();
        let secs = t.elapsed().as_secs_f64();
        slowest = slowest.max(secs);
        assert!(secs < 60.0, "instance {i} took {secs:.1}s, budget 60s");
        assert!(!sol.v.is_zero(), "instance {i}: v = 0");
        assert_eq!(&one_minus_x0 * &sol.u, b * &sol.v, "instance {i}");
    }
    format!("{} instances, slowest {:.3}s", suite.len(), slowest)
}

fn c07() -> String {
    let limits = Limits::default();
    let mut details = Vec::new();
    for m in [2usize, 3] {
        let sol = chain_solve(m, Q, &limits).unwrap();
        let lefts: Vec<Polynomial> = (0..=m as u32)
            .map(|i| Polynomial::one_minus(Q, i))
            .collect();
        let check = verify_solution(&lefts, &sol.us).unwrap();
        assert!(check.holds && check.nonzero, "m = {m}");
        assert!(!sol.common.is_zero(), "m = {m}");
        let support: Vec<String> = sol.common.terms().map(|(mon, _)| mon.to_string()).collect();
        if support.len() <= 12 {
            details.push(format!("supp w, m={m}: {{{}}}", support.join(", ")));
        } else {
            details.push(format!("supp w, m={m}: {} monomials", support.len()));
        }
    }
    details.join("; ")
}

fn c08() -> String {
    // frozen normal-form strings, compared byte for byte
    assert_eq!(y_generator(2).to_string(), "x2^2 * (x2*x3)^-1");
    assert_eq!(y_generator(3).to_string(), "x2*x3^2 * (x2*x3*x4)^-1");
    assert_eq!(y_generator(4).to_string(), "x2*x3*x4^2 * (x2*x3*x4*x5)^-1");
    // conjugation ladder
    assert_eq!(y_generator(2).conjugate(&y_generator(1)), y_generator(3));
    assert_eq!(y_generator(3).conjugate(&y_generator(1)), y_generator(4));
    // both defining relators die under x0 -> y0, x1 -> y1
    for text in [
        "X0*X0*x1*x0*x0*X1*X0*X1*x0*x1",
        "X0*X0*X0*x1*x0*x0*x0*X1*X0*X0*X1*x0*x0*x1",
    ] {
        let w = parse_word(text).unwrap();
        assert!(reduce_word(&w).is_identity(), "{text} reduces to 1");
        assert!(y_embed(&w).unwrap().is_identity(), "image of {text}");
    }
    String::new()
}

fn c09() -> String {
    // closed-form Catalan numbers against recurrence and full enumeration
    for n in 0..=10usize {
        let listed = enumerate_trees(n).unwrap();
        assert_eq!(BigUint::from(listed.len()), catalan(n), "n = {n}");
        assert_eq!(catalan(n), catalan_by_recurrence(n), "n = {n}");
    }
    // forests on n leaves are Catalan-many
    for n in 1..=12usize {
        assert_eq!(count_forests(n), catalan(n), "n = {n}");
    }
    // marked height-bounded forests at the smallest interesting size
    assert_eq!(enumerate_bb(3, 1).unwrap().len(), 7);
    assert_eq!(count_bb(3, 1), BigUint::from(7u32));
    // grafting composes diagram sets exactly: S(m,n) S(n,k) = S(m,k)
    for m in 1..=6usize {
        for n in m..=6 {
            for k in n..=6 {
                let top = enumerate_s(m, n).unwrap();
                let bottom = enumerate_s(n, k).unwrap();
                let mut produced = BTreeSet::new();
                for f in &top {
                    for g in &bottom {
                        let h = compose(f, g).unwrap();
                        assert_eq!((h.roots(), h.leaves()), (m, k));
                        produced.insert(h.to_string());
                    }
                }
                let expected: BTreeSet<String> = enumerate_s(m, k)
                    .unwrap()
                    .iter()
                    .map(|f| f.to_string())
                    .collect();
                assert_eq!(produced, expected, "m={m} n={n} k={k}");
            }
        }
    }
    String::new()
}

fn c10() -> String {
    let mut rng = rng(1010);
    let gens: Vec<GroupElement> = [0u32, 1, 2].map(GroupElement::generator).into();
    let two_m = BigRational::from(BigInt::from(6));
    let universe: Vec<GroupElement> = ball(&gens, 3).into_iter().collect();
    let mut checked = 0;
    while checked < 100 {
        let vertices: Vec<GroupElement> = universe
            .iter()
            .filter(|_| rng.gen_bool(0.25))
            .cloned()
            .collect();
        if vertices.is_empty() {
            continue;
        }
        for side in [Side::Left, Side::Right] {
            let graph = CayleySubgraph::new(vertices.clone(), gens.clone(), side).unwrap();
            let metrics = graph.metrics().unwrap();
            assert_eq!(&metrics.delta + &metrics.iota, two_m);
        }
        checked += 1;
    }
    // growth-ratio spot checks, frozen by hand; the 4/3-witness set itself
    // is far beyond desk scale and is deliberately not attempted
    let one = GroupElement::identity();
    let x0 = GroupElement::generator(0);
    let y_single: BTreeSet<GroupElement> = [one.clone()].into_iter().collect();
    let three = BigRational::from(BigInt::from(3));
    assert_eq!(graphs::ay_ratio(&gens, &y_single, false).unwrap(), three);
    let y_pair: BTreeSet<GroupElement> = [one, x0].into_iter().collect();
    assert_eq!(graphs::ay_ratio(&gens, &y_pair, false).unwrap(), three);
    // adjoining the identity only adds the vertex 1: x0 already lies in A Y
    assert_eq!(
        graphs::ay_ratio(&gens, &y_pair, true).unwrap(),
        BigRational::new(BigInt::from(7), BigInt::from(2))
    );
    format!("100 subsets of a {}-element ball, both sides", universe.len())
}

fn c11() -> String {
    let pool = monomials_up_to(4, 3);
    assert_eq!(pool.len(), 70);
    let mut pairs = 0usize;
    for i in 0..pool.len() {
        for j in i..pool.len() {
            let (a, b) = (&pool[i], &pool[j]);
            let l = lcm(a, b);
            assert!(divides(a, &l) && divides(b, &l), "lcm({a}, {b}) = {l}");
            assert_eq!(lcm(b, a), l, "symmetry for {a}, {b}");
            let max_index =
                a.max_index().unwrap_or(0).max(b.max_index().unwrap_or(0)) + l.degree() as u32;
            assert!(
                common_multiples_below(a, b, l.degree(), max_index).is_empty(),
                "a common multiple smaller than lcm({a}, {b}) = {l}"
            );
            pairs += 1;
        }
    }
    assert_eq!(
        lcm(&Monomial::normalize(&[0]), &Monomial::normalize(&[1])).to_string(),
        "x0*x2"
    );
    format!("{pairs} pairs")
}

fn c12() -> String {
    let limits = Limits::default();
    let supp = monomials_up_to(3, 3);
    assert_eq!(supp.len(), 35);
    let lefts = [Polynomial::one_minus(Q, 0), Polynomial::one_minus(Q, 1)];
    let sys = build_system(&lefts, &[supp.clone(), supp]).unwrap();
    assert_eq!(sys.num_columns(), 70);
    let basis = nullspace(&sys).unwrap();
    assert!(basis.dimension() >= 1, "empty nullspace");
    for vector in &basis.vectors {
        assert!(sys.is_solution(vector));
    }
    // the basic pair, written in system coordinates, is among the solutions
    let pair = basic_solution(Q);
    let polys = [pair.u, pair.v];
    let mut candidate: Vec<FieldElem> = Vec::with_capacity(sys.num_columns());
    for (j, block) in sys.blocks().iter().enumerate() {
        for m in block {
            candidate.push(polys[j].coefficient(m));
        }
    }
    assert!(sys.is_solution(&candidate));
    // a degree-1 support holds no solution at all
    match minimal_chain_search(1, 1, 3, Q, 0, &limits) {
        Err(Error::NoSolutionInBounds) => {}
        Ok(_) => panic!("expected NoSolutionInBounds, found candidates"),
        Err(e) => panic!("expected NoSolutionInBounds, got error {e}"),
    }
    format!("nullspace dimension {}", basis.dimension())
}

fn c13(start: Instant) -> String {
    // rewriting confluence against the random-steps oracle
    {
        let mut r = rng(1301);
        for _ in 0..200 {
            let len = r.gen_range(0..=10);
            let word = random_word_letters(&mut r, len, 6);
            assert_eq!(
                normalize_by_random_steps(&mut r, &word),
                Monomial::normalize(&word)
            );
        }
    }
    // ring axioms on samples
    {
        let mut r = rng(1302);
        for _ in 0..50 {
            let a = random_poly(&mut r, Q, 3, 3, 3);
            let b = random_poly(&mut r, Q, 3, 3, 3);
            let c = random_poly(&mut r, Q, 3, 3, 3);
            assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }
    }
    // no zero divisors among samples
    {
        let mut r = rng(1303);
        for _ in 0..100 {
            let a = random_nonzero_poly(&mut r, Q, 4, 4, 4);
            let b = random_nonzero_poly(&mut r, Q, 4, 4, 4);
            assert!(!(&a * &b).is_zero());
        }
    }
    // left-division round-trips
    {
        let mut r = rng(1304);
        for _ in 0..100 {
            let p = random_poly(&mut r, Q, 4, 4, 4);
            let i = r.gen_range(0..=3);
            let prod = &Polynomial::one_minus(Q, i) * &p;
            assert_eq!(one_minus_left_divide(&prod, i).unwrap(), p);
        }
    }
    // telescoping identity
    {
        let mut r = rng(1305);
        for _ in 0..100 {
            let len = r.gen_range(0..=10);
            let word = random_group_word(&mut r, len, 1);
            let (u, v) = telescope(&word, Q).unwrap();
            let lhs = &u.one_minus_left(0) + &v.one_minus_left(1);
            let rhs = &FormalSum::element(Q, GroupElement::identity())
                - &FormalSum::element(Q, reduce_word(&word));
            assert_eq!(lhs, rhs);
        }
    }
    let total = start.elapsed().as_secs_f64();
    assert!(total < 600.0, "whole gate took {total:.0}s, budget 600s");
    format!("gate total {total:.1}s of the 600s budget")
}
