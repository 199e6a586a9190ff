//! The three shapes of a tangent line
//!
//! This example demonstrates:
//! - The tangent line l_P with coefficients (t^(2q), 1, -t^q)
//! - The trichotomy of l_P . B by the rationality of the parameter:
//!   full contact q+1 on F_q, node passage (q, 1) on F_{q^2} \ F_q,
//!   and a split second point phi(t^q) everywhere else
//! - An exhaustive census over P^1(F_{q^4})
//!
//! Run with: cargo run --example tangent_trichotomy

use bhcurve::curve::{tangent_line, tangent_trichotomy, TangentClass};
use bhcurve::field::{Field, PrimePower};
use bhcurve::poly::P1Point;

fn main() {
    let q = PrimePower::new(3).unwrap();
    // F_{3^4} contains F_3, F_9 and genuinely quartic elements, so all
    // three classes appear in one field.
    let field = Field::extension_of(&q, 4);
    println!("=== Tangent lines of B for q = 3, over F_{} ===\n", field.order());

    // one representative parameter for each class
    let one = P1Point::Finite(field.one());
    let in_f9 = field
        .subfield_elements(2)
        .unwrap()
        .into_iter()
        .find(|e| !field.in_subfield(e, 1).unwrap())
        .unwrap();
    let quadratic = P1Point::Finite(in_f9);
    let quartic = P1Point::Finite(field.gen());

    for (name, p) in [
        ("t = 1 (rational over F_3)", &one),
        ("t of degree 2 (in F_9 \\ F_3)", &quadratic),
        ("t of degree 4 (generator of F_81)", &quartic),
    ] {
        println!("--- {name} ---\n");
        let line = tangent_line(&q, &field, p);
        println!("  l_P: {}", line.format(&field));
        let report = tangent_trichotomy(&q, &field, p).unwrap();
        let class = match report.class {
            TangentClass::RationalContact => "RationalContact (single contact, order q+1)",
            TangentClass::NodeTangent => "NodeTangent (through a node, orders q and 1)",
            TangentClass::Split => "Split (order q, plus transversal point phi(t^q))",
        };
        println!("  class: {class}");
        for (param, image, order) in &report.contacts {
            println!(
                "    contact at t = {:<10} image {:<22} order {order}",
                param.format(&field),
                image.format(&field)
            );
        }
        println!();
    }

    println!("--- census over all of P^1(F_81) ---\n");
    let mut counts = [0u32; 3];
    for p in P1Point::all(&field) {
        let report = tangent_trichotomy(&q, &field, &p).unwrap();
        counts[match report.class {
            TangentClass::RationalContact => 0,
            TangentClass::NodeTangent => 1,
            TangentClass::Split => 2,
        }] += 1;
    }
    println!("  rational contacts: {:>3} (q + 1 = 4)", counts[0]);
    println!("  node tangents:     {:>3} (q^2 - q = 6, two per node)", counts[1]);
    println!("  split tangents:    {:>3} (the remaining 72 parameters)", counts[2]);
}
