//! Squaring the coupled Dirac operator: the Klein-Gordon part plus the
//! field-strength bivector, exactly; and the position-momentum commutator
//! expansion over Lorentz generators.
//!
//! ```bash
//! cargo run -p cl23 --example squared_equation
//! ```

use cl23::dirac::HBar;
use cl23::em::{dirac_apply, faraday, squared_residual, xp_commutator_forms, EmPotential};
use cl23::field::FieldExpr;
use cl23::spinor::{embed, Spinor};

fn main() {
    let hbar = HBar::default();
    let psi = FieldExpr::monomial(1.0, [0, 2, 0, 0])
        .add(&FieldExpr::monomial(-0.5, [1, 0, 1, 0]))
        .add(&FieldExpr::scalar(1.0))
        .mul(&FieldExpr::constant(embed(&Spinor::from_reals(0.5, -1.0, 0.25, 0.0))));

    for (label, pot) in [
        ("uniform magnetic field", EmPotential::constant_magnetic([0.0, 0.0, 1.0], 1.0)),
        ("uniform electric field", EmPotential::constant_electric([1.0, 0.0, 0.0], 1.0)),
        ("lightlike plane wave", EmPotential::plane_wave([0.0, 1.0, 0.5, 0.0], [1.0, 0.0, 0.0, 1.0], 1.0)),
    ] {
        let r = squared_residual(&pot, &psi, hbar);
        println!("{label}: squared-equation residual = {}", r.max_coeff_abs());
    }

    // the reported field strengths, and one application of the operator
    let pot = EmPotential::constant_magnetic([0.0, 0.0, 2.0], 1.0);
    let f = faraday(&pot);
    println!("\nsymmetric gauge for B = 2 e_z:");
    println!("  B_3 field  : {}", f.b[2].eval([0.0; 4]));
    println!("  E fields   : {} {} {}",
        f.e[0].max_coeff_abs(), f.e[1].max_coeff_abs(), f.e[2].max_coeff_abs());
    let applied = dirac_apply(&pot, &psi, hbar);
    println!("  P psi term count: {}", applied.term_count());

    // gauge shifts move the potential but not the fields
    let lambda = FieldExpr::monomial(2.0, [1, 0, 1, 0]);
    let shifted = pot.gauge_transformed(&lambda);
    let f2 = faraday(&shifted);
    println!(
        "  gauge-shift field deviation: {}",
        f.b[2].max_abs_diff(&f2.b[2]).max(f.e[0].max_abs_diff(&f2.e[0]))
    );

    // the commutator of position and momentum expands over the boost and
    // rotation generators, exactly, on polynomial fields
    println!("\nposition-momentum commutator forms on t*x1:");
    let g = FieldExpr::monomial(1.0, [1, 1, 0, 0]);
    let (lhs, wedge_form, gen_form) = xp_commutator_forms(&g);
    println!("  lhs vs wedge-form     : {}", lhs.max_abs_diff(&wedge_form));
    println!("  lhs vs generator-form : {}", lhs.max_abs_diff(&gen_form));
    let one = FieldExpr::scalar(1.0);
    let (lhs, _, _) = xp_commutator_forms(&one);
    println!("  constant field gives  : -4 x identity, deviation {}",
        lhs.max_abs_diff(&one.scale(-4.0)));
}
