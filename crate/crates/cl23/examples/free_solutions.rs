//! Free-field solutions of the momentum-space Dirac equation, their
//! residuals, and boost covariance.
//!
//! ```bash
//! cargo run -p cl23 --example free_solutions
//! ```

use cl23::algebra::Multivector;
use cl23::dirac::{
    coupled_residuals, dirac_residual, free_solution, normalize, plane_wave, rest_frame_check,
    EnergySign, HBar, OnShellState, Spin,
};
use cl23::lorentz::LorentzOp;
use cl23::spinor::act;

fn show(s: &OnShellState) {
    let u = free_solution(s);
    let (r1, r2) = coupled_residuals(s, &u);
    println!(
        "m = {}, E = {:+.4}, p = {:?}, {:?}:",
        s.mass(),
        s.energy(),
        s.momentum(),
        s.spin()
    );
    println!("  u = {u}");
    println!(
        "  (p - m) u residual {:.2e}; coupled residuals {:.2e}, {:.2e}",
        dirac_residual(s, &u),
        r1.norm(),
        r2.norm()
    );
}

fn main() {
    // the 3-4-5 states and a rest state
    show(&OnShellState::with_energy(4.0, 5.0, [0.0, 0.0, 3.0], Spin::Up).unwrap());
    show(&OnShellState::with_energy(4.0, 5.0, [3.0, 0.0, 0.0], Spin::Down).unwrap());
    show(&OnShellState::new(2.0, [0.0; 3], EnergySign::Positive, Spin::Up).unwrap());
    show(&OnShellState::new(2.0, [1.0, -2.0, 0.5], EnergySign::Negative, Spin::Down).unwrap());

    // the rest-frame equation reduces to a parity projector killing the
    // parity-odd sector
    let rest = OnShellState::new(2.0, [0.0; 3], EnergySign::Positive, Spin::Up).unwrap();
    let report = rest_frame_check(&free_solution(&rest));
    println!(
        "\nrest frame: (e0 - 1) psi residual {:.2e}, odd-sector norm {:.2e}",
        report.residual, report.chi_norm
    );

    // transporting the rest solution with a boost solves the equation at the
    // transported momentum
    let boost = LorentzOp::boost(1, 0.9).unwrap();
    let moved_p = boost.transform(&rest.momentum_vector());
    let moved_u = act(boost.mv(), &free_solution(&rest));
    let dirac = moved_p - Multivector::scalar(rest.mass());
    println!("\nboosted momentum p' = {moved_p}");
    println!("(p' - m) S u residual: {:.2e}", act(&dirac, &moved_u).norm());

    // plane waves only rotate the complex pairs
    let s = OnShellState::with_energy(4.0, 5.0, [0.0, 0.0, 3.0], Spin::Up).unwrap();
    let at = plane_wave(&s, [0.3, 0.0, 0.0, 1.0], HBar::default());
    println!("\nplane wave at (t, x3) = (0.3, 1.0): {at}");
    println!("norm unchanged: {:.2e}", (at.norm() - free_solution(&s).norm()).abs());

    let unit = normalize(&free_solution(&s)).unwrap();
    println!("normalized density: {}", cl23::dirac::density(&unit));
}
