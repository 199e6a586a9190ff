//! Cyclic covers branched along the curve
//!
//! This example demonstrates:
//! - The surface S_d : w^d = F(x0, x1, x2) in the weighted projective
//!   space P((q+1)/d, 1, 1, 1), for each divisor d of q + 1
//! - The rational double point of type A_{d-1} over every node of B
//! - The degree-2q projection: a separable quadratic over the
//!   inseparable q-power map
//!
//! Run with: cargo run --example cyclic_covers

use bhcurve::cover::{cover_surface, node_singularities, projection_quadratic_check};
use bhcurve::field::{Field, PrimePower};

fn main() {
    println!("=== Cyclic covers S_d : w^d = F ===\n");

    for (qv, d) in [(3u32, 2u32), (3, 4), (5, 2), (5, 3), (5, 6)] {
        let q = PrimePower::new(qv).unwrap();
        let field = Field::extension_of(&q, 2);
        let surface = cover_surface(&q, d, &field).unwrap();
        println!("--- q = {qv}, d = {d}: weights ({}, 1, 1, 1) ---\n", surface.weight);
        println!("  0 = {}", surface.form.format(&field, &["w", "x0", "x1", "x2"]));

        let singular = node_singularities(&q, d, &field).unwrap();
        println!("\n  singular points over the {} nodes of B:", singular.len());
        for s in &singular {
            println!(
                "    node {:<22} quadratic part splits into the two branch tangents: {}  => A_{}",
                s.node.image.format(&field),
                s.quad_is_product_of_tangents,
                s.a_index
            );
        }
        println!();
    }

    println!("--- the projection S_d -> P^2 -> P^1, degree 2q ---\n");
    for qv in [2u32, 3, 4, 5] {
        let q = PrimePower::new(qv).unwrap();
        let f = Field::of_order(&q);
        let report = projection_quadratic_check(&q, &f);
        print!(
            "  q = {qv}: t and t^q are the roots of Z^2 - y Z + x: {}",
            report.satisfies_quadratic
        );
        match (report.discriminant_is_square, report.separable_char_two) {
            (Some(sq), _) => println!(", discriminant (t^q - t)^2 a square: {sq}"),
            (_, Some(sep)) => println!(", separable in characteristic 2: {sep}"),
            _ => println!(),
        }
    }
    println!("\n  separable degree 2 x inseparable degree q = total degree 2q.");
}
