//! Parity, time reversal, charge conjugation, and CPT on spinors, with the
//! recorded signs and phases.
//!
//! ```bash
//! cargo run -p cl23 --example discrete_symmetries
//! ```

use cl23::bilinear::{bilinear, BilinearKind};
use cl23::dirac::{free_solution, OnShellState, Spin};
use cl23::symmetry::{apply_charge_conj, apply_cpt, apply_parity, apply_time_reversal, lagrangian};
use cl23::spinor::{Cx, Spinor};

fn main() {
    let psi = Spinor::new(Cx::new(0.8, 0.1), Cx::new(-0.3, 0.5), Cx::new(0.2, 0.0), Cx::new(0.0, -0.4));
    println!("psi       = {psi}");
    println!("P psi     = {}", apply_parity(&psi));
    println!("CPT psi   = {}", apply_cpt(&psi));
    for j in 1..=3 {
        println!("T_{j} psi  = {}", apply_time_reversal(&psi, j).unwrap());
        println!("C_{j} psi  = {}", apply_charge_conj(&psi, j).unwrap());
    }

    // squares: P^2 = CPT^2 = C^2 = +1, T^2 = -1 (fermionic)
    println!("\nsquares on a test state:");
    println!("  P^2 - 1   : {}", apply_parity(&apply_parity(&psi)).max_abs_diff(&psi));
    println!("  CPT^2 - 1 : {}", apply_cpt(&apply_cpt(&psi)).max_abs_diff(&psi));
    for j in 1..=3 {
        let tt = apply_time_reversal(&apply_time_reversal(&psi, j).unwrap(), j).unwrap();
        let cc = apply_charge_conj(&apply_charge_conj(&psi, j).unwrap(), j).unwrap();
        println!("  T_{j}^2 + 1 : {}", tt.max_abs_diff(&-psi));
        println!("  C_{j}^2 - 1 : {}", cc.max_abs_diff(&psi));
    }

    // the composition C P T equals the single reflection e5, with no
    // leftover phase, for every axis choice
    for j in 1..=3 {
        let composed =
            apply_charge_conj(&apply_parity(&apply_time_reversal(&psi, j).unwrap()), j).unwrap();
        println!("C_{j} P T_{j} vs CPT: {}", composed.max_abs_diff(&apply_cpt(&psi)));
    }

    // a state and its time reversal never overlap
    for j in 1..=3 {
        let t = apply_time_reversal(&psi, j).unwrap();
        let overlap = bilinear(&psi, &t, BilinearKind::Scalar).unwrap().value;
        println!("psi-bar T_{j}(psi) = {:+.2e} {:+.2e} I", overlap.re, overlap.im);
    }

    // the Lagrangian density vanishes on shell
    let s = OnShellState::with_energy(4.0, 5.0, [0.0, 0.0, 3.0], Spin::Up).unwrap();
    let u = free_solution(&s);
    let l = lagrangian(&u, &s.momentum_vector(), s.mass()).value;
    println!("\non-shell Lagrangian density: {:+.2e} {:+.2e} I", l.re, l.im);
}
