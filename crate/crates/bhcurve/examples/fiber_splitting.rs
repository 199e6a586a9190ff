//! Splitting the cover over tangent lines
//!
//! This example demonstrates:
//! - For every parameter P in P^1(F_{q^2}), the defining form restricted
//!   to the tangent line l_P is unit * ell^(q+1) for a linear form ell
//! - The preimage of l_P in S_d splits into d components as soon as the
//!   unit is a d-th power; over F_{q^2} this always happens here
//! - The two census cases behind the supersingular K3 surfaces:
//!   40 lines for (q, d) = (3, 4) and 52 lines for (q, d) = (5, 2)
//!
//! Run with: cargo run --example fiber_splitting

use bhcurve::cover::fiber_splitting_all;
use bhcurve::field::{Field, PrimePower};

fn main() {
    println!("=== Fibers of S_d over tangent lines ===\n");

    for (qv, d) in [(3u32, 4u32), (5, 2)] {
        let q = PrimePower::new(qv).unwrap();
        let field = Field::extension_of(&q, 2);
        println!("--- q = {qv}, d = {d}, parameters in P^1(F_{}) ---\n", field.order());

        let reports = fiber_splitting_all(&q, d, &field).unwrap();
        for s in reports.iter().take(6) {
            println!(
                "  P = {:<8} rational: {:<5} unit = {:<6} splits over F_(q^(2m)) with m = {}, {} components",
                s.param.format(&field),
                s.rational,
                field.format(&s.unit),
                s.splitting_extension,
                s.components()
            );
        }
        if reports.len() > 6 {
            println!("  ... ({} parameters in total)", reports.len());
        }

        let full = reports.iter().all(|s| s.full_contact);
        let split_here = reports.iter().all(|s| s.splitting_extension == 1);
        let components: usize = reports.iter().map(|s| s.components()).sum();
        println!("\n  every restriction a (q+1)-st power: {full}");
        println!("  every unit a d-th power over F_{}: {split_here}", field.order());
        println!(
            "  total components: {} x {} lines = {components}\n",
            d,
            reports.len()
        );
    }

    println!("These 40 and 52 rational curves are the raw material for the");
    println!("Neron-Severi lattices of the two supersingular K3 surfaces;");
    println!("see the k3_lattices example.");
}
