//! The 16 bilinear covariants, their two computation paths, Lorentz
//! behavior, and exact current conservation.
//!
//! ```bash
//! cargo run -p cl23 --example bilinear_table
//! ```

use cl23::bilinear::{
    bilinear, current, current_norm, plane_wave_field, vector_current_divergence, BilinearKind,
};
use cl23::dirac::{free_solution, normalize, HBar, OnShellState, Spin};
use cl23::lorentz::LorentzOp;
use cl23::spinor::{act, Cx, Spinor};

fn print_table(label: &str, psi: &Spinor) {
    println!("bilinears of {label}: {psi}");
    for kind in BilinearKind::all() {
        let v = bilinear(psi, psi, kind).expect("paths agree");
        println!("  {:<14} {:+.6} {:+.6} I", kind.label(), v.value.re, v.value.im);
    }
}

fn main() {
    print_table("the rest spin-up state", &Spinor::from_reals(1.0, 0.0, 0.0, 0.0));
    print_table("a parity-odd state", &Spinor::from_reals(0.0, 0.0, 1.0, 0.0));

    // a moving electron: the flux tracks the group velocity
    let s = OnShellState::with_energy(4.0, 5.0, [0.0, 0.0, 3.0], Spin::Up).unwrap();
    let u = normalize(&free_solution(&s)).unwrap();
    let j = current(&u).unwrap();
    println!("\nmoving state current j = {j:?}");
    println!("flux over density      = {:+.6}", j[3] / j[0]);
    println!("eta norm j.j           = {:+.6}", current_norm(&j));

    // scalar and pseudoscalar are Lorentz invariants; the current only
    // keeps its eta norm
    let op = LorentzOp::boost(2, 0.8).unwrap().compose(&LorentzOp::rotor(1, 0.5).unwrap());
    let moved = act(op.mv(), &u);
    let jm = current(&moved).unwrap();
    let scalar = |p: &Spinor| bilinear(p, p, BilinearKind::Scalar).unwrap().value;
    println!("\nafter a boost-rotor:");
    println!("  scalar before/after: {:?} / {:?}", scalar(&u), scalar(&moved));
    println!("  current after      : {jm:?}");
    println!("  eta norm preserved : {:+.6}", current_norm(&jm));

    // interference of two waves still conserves probability exactly
    let hbar = HBar::default();
    let s2 = OnShellState::with_energy(3.0, 5.0, [4.0, 0.0, 0.0], Spin::Up).unwrap();
    let s1 = OnShellState::with_energy(3.0, 5.0, [0.0, 0.0, 4.0], Spin::Up).unwrap();
    let field = plane_wave_field(&s1, hbar).add(&plane_wave_field(&s2, hbar));
    let div = vector_current_divergence(&field);
    println!("\ntwo-wave current divergence max coefficient: {}", div.max_coeff_abs());

    // orthogonality of spin states at the same momentum
    let down = OnShellState::with_energy(4.0, 5.0, [0.0, 0.0, 3.0], Spin::Down).unwrap();
    let cross = bilinear(&free_solution(&s), &free_solution(&down), BilinearKind::Scalar).unwrap();
    assert_eq!(cross.value, Cx::ZERO);
    println!("up/down scalar pairing at the same momentum: {:?}", cross.value);
}
