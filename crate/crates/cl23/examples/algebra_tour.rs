//! Tour of the Cl(2,3) basics: the metric, the geometric product, the
//! central pseudoscalar, and the conjugation zoo.
//!
//! ```bash
//! cargo run -p cl23 --example algebra_tour
//! ```

use cl23::algebra::{metric, parse_multivector, Blade, Multivector, LABELS};

fn main() {
    println!("generators and their squares:");
    for l in LABELS {
        let e = Multivector::vector(l).unwrap();
        println!("  e{l}^2 = {}   (metric {})", e.gp(&e), metric(l));
    }

    // the symmetric part of a vector product is the metric; the
    // antisymmetric part is the oriented plane element
    let e0 = Multivector::vector(0).unwrap();
    let e1 = Multivector::vector(1).unwrap();
    println!("\ne0 . e1 = {}", e0.sym(&e1));
    println!("e0 ^ e1 = {}", e0.antisym(&e1));
    println!("e0 e1   = {}", e0.gp(&e1));

    // the unit pseudoscalar plays the role of the imaginary unit: it squares
    // to -1 and commutes with everything
    let i = Multivector::pseudoscalar();
    println!("\nI       = {i}");
    println!("I^2     = {}", i.gp(&i));
    println!("I e3 - e3 I = {}", i.commutator(&Multivector::vector(3).unwrap()));

    // polar vectors x_j flip under parity, axial spin vectors sigma_j do not
    let x1 = Multivector::polar(1);
    let s1 = Multivector::sigma(1);
    println!("\nx_1 = {x1},  e0 x_1 e0 = {}", x1.parity_conj());
    println!("sigma_1 = {s1},  e0 sigma_1 e0 = {}", s1.parity_conj());

    // sigma_1 sigma_2 = I sigma_3: the familiar spin algebra, from geometry
    let lhs = Multivector::sigma(1).gp(&Multivector::sigma(2));
    let rhs = i.gp(&Multivector::sigma(3));
    println!("\nsigma_1 sigma_2     = {lhs}");
    println!("I sigma_3           = {rhs}");

    // conjugations: reversal, parity sandwich, hermite
    let m = Multivector::scalar(0.5) + x1 * 2.0 + i * 0.25;
    println!("\nm           = {m}");
    println!("reverse(m)  = {}", m.reverse());
    println!("hermite(m)  = {}", m.hermite());
    println!("K_1(m)      = {}", m.k_conj(1).unwrap());

    // text round trip
    let rendered = m.to_string();
    let back = parse_multivector(&rendered).unwrap();
    println!("\nrendered    = {rendered:?}");
    println!("parse delta = {}", back.max_abs_diff(&m));

    // grade structure
    let blade = Blade::from_labels(&[0, 1, 5]).unwrap();
    println!("\nblade {} has grade {}", blade.name(), blade.grade());
}
