//! Nodes of the Ballico-Hefez curve
//!
//! This example demonstrates:
//! - The (q^2 - q)/2 nodes, indexed by conjugate pairs {tau, tau^q} in
//!   F_{q^2} \ F_q
//! - Each node image [1 : tau^(q+1) : tau^q + tau] with its two branch
//!   directions
//! - The certified census: singular images, distinct branches, smooth
//!   elsewhere
//!
//! Run with: cargo run --example nodes

use bhcurve::curve::nodes_verified;
use bhcurve::field::{Field, PrimePower};

fn main() {
    println!("=== Nodes of B: conjugate parameter pairs ===\n");

    for qv in [3u32, 4, 5] {
        let q = PrimePower::new(qv).unwrap();
        let field = Field::extension_of(&q, 2);
        println!(
            "--- q = {qv}, working over F_{} = F_{qv}(a) ---\n",
            field.order()
        );

        let report = nodes_verified(&q, &field).unwrap();
        let expected = (qv * qv - qv) / 2;
        println!(
            "nodes found: {} (expected (q^2 - q)/2 = {expected})",
            report.records.len()
        );

        for node in &report.records {
            println!(
                "  tau = {:<8} tau^q = {:<8} image = {}",
                field.format(&node.tau),
                field.format(&node.tau_conj),
                node.image.format(&field)
            );
            let (u, v) = &node.branch_dirs[0];
            let (w, z) = &node.branch_dirs[1];
            println!(
                "      branch directions ({}, {}) and ({}, {})",
                field.format(u),
                field.format(v),
                field.format(w),
                field.format(z)
            );
        }

        println!("\n  all images singular points of F:   {}", report.images_singular);
        println!("  images pairwise distinct:          {}", report.images_distinct);
        println!("  branch directions distinct:        {}", report.branch_dirs_distinct);
        println!("  every other image point smooth:    {}", report.smooth_elsewhere);
        println!();
    }

    println!("For q = 3 the three images [1:1:0], [1:2:1], [1:2:2] are the");
    println!("singular points of 2*(x0^3 x1 + x0 x1^3) - x2^4 - (x2^2 - x0 x1)^2.");
}
