//! The nonrelativistic limit: Pauli Hamiltonian, exact reduction identity,
//! and the Zeeman splitting that fixes g = 2.
//!
//! ```bash
//! cargo run -p cl23 --example pauli_g_factor
//! ```

use cl23::dirac::HBar;
use cl23::em::{zeeman, EmPotential, Pauli};
use cl23::field::FieldExpr;
use cl23::spinor::{embed, Spinor};

fn main() {
    // uniform field along the third axis in symmetric gauge
    let b = 1.0;
    let z = zeeman(b, 1.0, 1.0, HBar::default()).unwrap();
    println!("uniform B = {b} along axis 3:");
    println!("  spin-up shift   : {:+.12}", z.shift_up);
    println!("  spin-down shift : {:+.12}", z.shift_down);
    println!("  splitting       : {:.12}", z.splitting);
    println!("  g-factor        : {:.6}", z.g_factor);

    // the coefficient scales as hbar e B / m
    for (m, e, hbar) in [(2.0, 1.0, 1.0), (1.0, -1.0, 1.0), (4.0, 0.5, 0.5)] {
        let z = zeeman(b, m, e, HBar(hbar)).unwrap();
        println!(
            "m = {m}, e = {e}, hbar = {hbar}: splitting {:+.6} (expect {:+.6}), g = {:.6}",
            z.splitting,
            hbar * e * b / m,
            z.g_factor
        );
    }

    // the reduction from the coupled first-order system to the Pauli
    // Hamiltonian is an exact operator identity on symbolic fields
    let pot = EmPotential::constant_magnetic([0.0, 0.0, b], 1.0);
    let pauli = Pauli::new(pot, 1.0, HBar::default());
    let phi = FieldExpr::monomial(1.0, [0, 1, 0, 0])
        .add(&FieldExpr::scalar(0.5))
        .mul(&FieldExpr::constant(embed(&Spinor::from_reals(1.0, 0.5, 0.0, 0.0))));
    println!(
        "\nreduction identity residual on a polynomial state: {}",
        pauli.reduction_residual(&phi).max_coeff_abs()
    );
    println!(
        "squared momentum split residual:                   {}",
        pauli.momentum_square_residual(&phi).max_coeff_abs()
    );

    // without the spin term the free Hamiltonian is pure kinetic energy
    let free = Pauli::new(EmPotential::free(1.0), 2.0, HBar::default());
    let wave = FieldExpr::plane_phase([0.0, 0.0, 0.0, 3.0])
        .mul(&FieldExpr::constant(embed(&Spinor::from_reals(1.0, 0.0, 0.0, 0.0))));
    let h = free.hamiltonian(&wave);
    println!(
        "\nfree H on a wave with momentum 3: eigenvalue deviation {}",
        h.max_abs_diff(&wave.scale(9.0 / 4.0))
    );
}
