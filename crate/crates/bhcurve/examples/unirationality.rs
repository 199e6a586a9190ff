//! Unirationality of the cyclic covers
//!
//! This example demonstrates the identity chain behind the dominant
//! rational map A^2 -> S_d:
//! - the telescoping identity for D = prod (y - t^(q^j) - t^(q^(j-1)))
//! - the main identity (y - t^q - t)^q (y - t^(q^2) - t^q) = z^d D^(q+1)
//! - the pullback of the defining form along the tangent-line family
//! - the unit u with u^d = c absorbing the pullback constant
//! - a sign flip in the y-formula breaking the chain
//!
//! Run with: cargo run --example unirationality

use bhcurve::cover::unirationality_check;
use bhcurve::field::{Field, PrimePower};

fn main() {
    println!("=== Unirationality certificates for S_d ===\n");

    for (qv, d) in [(2u32, 3u32), (3, 2), (3, 4), (4, 5), (5, 2), (5, 6)] {
        let q = PrimePower::new(qv).unwrap();
        let field = Field::new(q.p, 1).unwrap();
        let report = unirationality_check(&q, d, &field, false).unwrap();

        println!("--- q = {qv}, d = {d} ---\n");
        println!("  telescoping identity:        {}", report.telescoping_ok);
        println!("  main identity:               {}", report.main_identity_ok);
        println!(
            "  pullback F(1, t^q y - t^(2q), y): {} (constant c = {})",
            report.pullback_identity_ok,
            field.format(&report.pullback_constant)
        );
        println!("  composition with y(z, t):    {}", report.composition_ok);
        println!("  d-th power extraction:       {}", report.power_step_ok);
        match (report.unit_extension, &report.unit_root) {
            (Some(1), Some(u)) => {
                let f2 = Field::extension_of(&q, 2);
                println!(
                    "  unit: u = {} in F_{} with u^{d} = c\n",
                    f2.format(u),
                    f2.order()
                );
            }
            (Some(m), _) => println!("  unit: exists over F_(q^(2*{m}))\n"),
            (None, _) => println!("  unit: (none)\n"),
        }
    }

    println!("--- flipping the sign of y breaks the chain ---\n");
    let q = PrimePower::new(3).unwrap();
    let field = Field::new(3, 1).unwrap();
    let broken = unirationality_check(&q, 4, &field, true).unwrap();
    println!("  telescoping identity:        {}", broken.telescoping_ok);
    println!("  main identity:               {}", broken.main_identity_ok);
}
