//! Rotors and boosts: closed forms, the double cover, frame transport, and
//! the generator algebra.
//!
//! ```bash
//! cargo run -p cl23 --example lorentz_boosts
//! ```

use cl23::algebra::Multivector;
use cl23::lorentz::{
    boost_generator, metric_preservation_residual, rotation_generator, so31_commutator_residual,
    su2_relations_residual, LorentzOp,
};

fn main() {
    // a boost with tanh(alpha) = 3/5 sends e0 to (5/4) e0 + (3/4) e1
    let alpha = 0.6f64.atanh();
    let boost = LorentzOp::boost(1, alpha).unwrap();
    println!("boost element S = {}", boost.mv());
    println!("S e0 S~ = {}", boost.transform(&Multivector::vector(0).unwrap()));

    // rotors use half angles; a full turn lands on -1 (double cover)
    let quarter = LorentzOp::rotor(3, std::f64::consts::FRAC_PI_2).unwrap();
    println!("\nquarter turn about axis 3: S = {}", quarter.mv());
    println!("S e1 S~ = {}", quarter.transform(&Multivector::vector(1).unwrap()));
    let full = LorentzOp::rotor(3, 2.0 * std::f64::consts::PI).unwrap();
    println!("full turn: S = {}", full.mv());

    // group element invariants
    let composed = boost.compose(&quarter).compose(&LorentzOp::boost(2, -0.4).unwrap());
    println!("\ncomposed element:");
    println!("  reverse(S) S deviation from 1: {:.3e}", composed.unitarity_residual());
    println!("  hermite(S) vs e0 reverse(S) e0: {:.3e}", composed.hermite_residual());
    println!("  metric preservation residual: {:.3e}", metric_preservation_residual(&composed));

    // the pseudoscalar is Lorentz invariant
    let i = Multivector::pseudoscalar();
    println!("  S I S~ - I: {:.3e}", composed.transform(&i).max_abs_diff(&i));

    // generators: rotations J_j, boosts K_j, and their closed algebra
    println!("\nJ_3 = {}", rotation_generator(3).unwrap());
    println!("K_3 = {}", boost_generator(3).unwrap());
    println!("[J_1, J_2] - J_3 = {}", rotation_generator(1)
        .unwrap()
        .commutator(&rotation_generator(2).unwrap())
        .max_abs_diff(&rotation_generator(3).unwrap()));
    println!("so(3,1) commutator residual: {}", so31_commutator_residual());
    println!("split su(2) relations residual: {}", su2_relations_residual());
}
