//! The Ballico-Hefez curve and its defining equation
//!
//! This example demonstrates:
//! - The degree-(q+1) parametrization phi([s:t]) = [s^(q+1) : t^(q+1) : s t^q + s^q t]
//! - The defining form F with F(phi(s, t)) = 0 as an exact polynomial identity
//! - The Coxeter-invariant model (s + t)^(q+1) - s^(q+1) - t^(q+1)
//! - A perturbed form failing the identity
//!
//! Run with: cargo run --example curve_identities

use bhcurve::curve::{
    bh_parametrization, coxeter_model_check, defining_form, form_vanishes_on_curve,
    perturbed_form,
};
use bhcurve::field::{Field, PrimePower};

fn main() {
    println!("=== The Ballico-Hefez curve B in P^2 ===\n");

    for qv in [2u32, 3, 4, 5, 8, 9] {
        show_curve(qv);
    }

    println!("--- A wrong form does not vanish ---\n");
    let q = PrimePower::new(4).unwrap();
    let field = Field::of_order(&q);
    let bad = perturbed_form(&q, &field);
    println!("perturbed form (q = 4): {}", bad.format(&field, &["x0", "x1", "x2"]));
    println!(
        "vanishes on the curve? {}\n",
        form_vanishes_on_curve(&q, &field, &bad)
    );
}

fn show_curve(qv: u32) {
    let q = PrimePower::new(qv).unwrap();
    let field = Field::of_order(&q);
    println!("--- q = {qv} (characteristic {}) ---\n", q.p);

    let phi = bh_parametrization(&q, &field);
    println!("phi_0 = {}", phi.coords[0].format(&field, "s", "t"));
    println!("phi_1 = {}", phi.coords[1].format(&field, "s", "t"));
    println!("phi_2 = {}", phi.coords[2].format(&field, "s", "t"));

    let form = defining_form(&q, &field);
    println!("F = {}", form.format(&field, &["x0", "x1", "x2"]));

    // Composing F with phi and expanding must give the zero binary form.
    let vanishes = form_vanishes_on_curve(&q, &field, &form);
    println!("F(phi(s, t)) == 0 identically? {vanishes}");

    // The third coordinate satisfies a Coxeter-style identity:
    // s t^q + s^q t = (s + t)^(q+1) - s^(q+1) - t^(q+1), since Frobenius
    // kills the middle binomial coefficients.
    println!("Coxeter model agrees? {}\n", coxeter_model_check(&q, &field));
}
