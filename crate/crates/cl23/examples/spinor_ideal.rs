//! The Dirac spinor as an ideal element: the reference idempotent, the
//! four complex components, and how blades act on them.
//!
//! ```bash
//! cargo run -p cl23 --example spinor_ideal
//! ```

use cl23::algebra::{Blade, Multivector};
use cl23::spinor::{
    act, action_table, embed, idempotent, parity_split, project, sp_decoupled, spin_split, Cx,
    Spinor,
};

fn print_blade_action(label: &str, blade: Blade) {
    let mat = action_table().blade_matrix(blade);
    println!("action of {label} on the 8 real coordinates:");
    for row in mat {
        let cells: Vec<String> = row.iter().map(|x| format!("{x:+.0}")).collect();
        println!("  [{}]", cells.join(" "));
    }
}

fn main() {
    let p = idempotent();
    println!("idempotent P = {p}");
    println!("P^2 - P  = {}", p.gp(&p).max_abs_diff(&p));
    println!("e0 P - P = {}", Multivector::vector(0).unwrap().gp(&p).max_abs_diff(&p));

    // the embedding of a spinor and its recovery
    let psi = Spinor::new(Cx::new(1.0, 0.5), Cx::new(0.0, -1.0), Cx::new(0.25, 0.0), Cx::ZERO);
    let m = embed(&psi);
    println!("\npsi  = {psi}");
    println!("embedded multivector: {m}");
    println!("recovered: {}", project(&m).unwrap());

    // e0 and sigma_3 act diagonally; e5 swaps the parity sectors; the
    // pseudoscalar is the complex unit
    print_blade_action("e0", Blade::from_labels(&[0]).unwrap());
    let up = Spinor::from_reals(1.0, 0.0, 0.0, 0.0);
    println!("\ne5 . up      = {}", act(&Multivector::vector(5).unwrap(), &up));
    println!("sigma_1 . up = {}", act(&Multivector::sigma(1), &up));
    println!("I . psi      = {}", act(&Multivector::pseudoscalar(), &psi));

    // parity and spin splits
    let (phi, chi) = parity_split(&psi);
    println!("\nparity-even part: {phi}");
    println!("parity-odd part : {chi}");
    let (spin_up, spin_down) = spin_split(&phi);
    println!("spin-up part    : {spin_up}");
    println!("spin-down part  : {spin_down}");

    // a decoupled state traces the rotor circle between up and down
    for theta in [0.0, std::f64::consts::FRAC_PI_2, std::f64::consts::PI] {
        println!("decoupled(1, {theta:.3}) = {}", sp_decoupled(1.0, theta));
    }
}
