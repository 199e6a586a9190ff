//! The PGL_2(F_q) action on the Ballico-Hefez curve
//!
//! This example demonstrates:
//! - Lifting g in PGL_2(F_q) to the 3x3 matrix acting on P^2 by the
//!   symmetric-square construction
//! - The equivariance phi o g = lift(g) o phi as a polynomial identity
//! - The exhaustive audit: group order q^3 - q, injectivity,
//!   homomorphism property
//! - A corrupted lift failing the audit
//!
//! Run with: cargo run --example automorphisms

use bhcurve::aut::{
    audit, audit_detects_corruption, lift, lift_commutes, lift_corrupted, pgl2_order, Pgl2,
};
use bhcurve::field::{Field, PrimePower};

fn main() {
    let q = PrimePower::new(3).unwrap();
    let field = Field::of_order(&q);
    println!("=== Automorphisms of B for q = 3 ===\n");
    println!("|PGL_2(F_3)| = q^3 - q = {}\n", pgl2_order(&q));

    // a concrete element and its lift
    let g = Pgl2::from_ints(&field, [[1, 1], [0, 1]]).unwrap();
    println!("g = {}  (the translation t -> t + 1)", g.format(&field));
    let m = lift(&field, &g);
    println!("lift(g) acting on [x0 : x1 : x2]:");
    for row in &m {
        println!(
            "  [ {} {} {} ]",
            field.format(&row[0]),
            field.format(&row[1]),
            field.format(&row[2])
        );
    }
    println!(
        "phi(g(t)) == lift(g) phi(t) as binary forms? {}\n",
        lift_commutes(&q, &field, &g, &m)
    );

    // a second element of order 2
    let h = Pgl2::from_ints(&field, [[0, 1], [1, 0]]).unwrap();
    println!("h = {}  (the involution t -> 1/t)", h.format(&field));
    let mh = lift(&field, &h);
    println!(
        "phi(h(t)) == lift(h) phi(t)? {}\n",
        lift_commutes(&q, &field, &h, &mh)
    );

    // the full audit, exhaustive for small q
    for qv in [2u32, 3, 4, 5, 7] {
        let q = PrimePower::new(qv).unwrap();
        let f = Field::of_order(&q);
        let report = audit(&q, &f, 1, 200).unwrap();
        println!(
            "q = {qv}: order {} (expected {}), equivariant on {} lifts, injective: {}, homomorphism on {} pairs: {}",
            report.group_order,
            report.expected_order,
            report.lifts_checked,
            report.lift_injective,
            report.pairs_checked,
            report.homomorphism_ok
        );
    }

    // sabotage: add 1 to one matrix entry of every lift
    println!();
    let q = PrimePower::new(3).unwrap();
    let g = Pgl2::from_ints(&field, [[1, 1], [0, 1]]).unwrap();
    let bad = lift_corrupted(&field, &g);
    println!(
        "corrupted lift still equivariant? {}",
        lift_commutes(&q, &field, &g, &bad)
    );
    println!(
        "audit detects the corruption for every g? {}",
        audit_detects_corruption(&q, &field).unwrap()
    );
}
