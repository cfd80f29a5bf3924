//! The left-regular representation as an independent referee: products and
//! exponentials recomputed through 32x32 matrices.
//!
//! ```bash
//! cargo run -p cl23 --example regular_rep_oracle
//! ```

use cl23::algebra::{Blade, Multivector};
use cl23::lorentz::{boost_generator, LorentzOp};
use cl23::rep::{left_rep, matrix_exp, oracle_gp, RepMatrix};

fn main() {
    // rep(1) is the identity; rep is a faithful homomorphism
    let one = left_rep(&Multivector::scalar(1.0));
    println!("rep(1) vs identity: {}", one.max_abs_diff(&RepMatrix::identity()));

    let i = left_rep(&Multivector::pseudoscalar());
    println!("rep(I)^2 + 1: {}", i.matmul(&i).max_abs_diff(&RepMatrix::identity().scale(-1.0)));

    // recompute a product through matrices and compare
    let a = Multivector::sigma(1) * 0.5 + Multivector::vector(2).unwrap() * 2.0;
    let b = Multivector::polar(3) - Multivector::pseudoscalar() * 0.25;
    let direct = a.gp(&b);
    let via_matrices = oracle_gp(&a, &b);
    println!("\na b       = {direct}");
    println!("oracle delta: {}", via_matrices.max_abs_diff(&direct));

    // the matrix exponential reproduces the closed-form boost
    let alpha = 0.6f64.atanh();
    let gen = boost_generator(1).unwrap() * alpha;
    let s_matrix = matrix_exp(&left_rep(&gen)).column(Blade::SCALAR.mask() as usize);
    let s_closed = LorentzOp::boost(1, alpha).unwrap();
    println!("\nmatrix-exponential boost delta: {}", s_matrix.max_abs_diff(s_closed.mv()));

    // and the sandwich built from it moves e0 the same way
    let moved = s_matrix.gp(&Multivector::vector(0).unwrap()).gp(&s_matrix.reverse());
    println!("S e0 S~ via the oracle = {moved}");
}
