//! Rotors, boosts, and the Lorentz generator algebra.
//!
//! Rotation generators are `J_j = -I sigma_j / 2` and boost generators are
//! `K_j = x_j / 2`; both are spacetime bivectors free of `e5`. Group elements
//! are built by exponentiation and act on frame vectors by the two-sided
//! sandwich `v -> S v S~`, which fixes the pseudoscalar and preserves the
//! spacetime metric.

use crate::algebra::{eta, Multivector};
use crate::{Error, Result};

fn check_axis(j: usize) -> Result<()> {
    if (1..=3).contains(&j) {
        Ok(())
    } else {
        Err(Error::InvalidAxis(j))
    }
}

/// Rotation generator `J_j = -I sigma_j / 2`.
pub fn rotation_generator(j: usize) -> Result<Multivector> {
    check_axis(j)?;
    Ok(-(Multivector::pseudoscalar().gp(&Multivector::sigma(j))) * 0.5)
}

/// Boost generator `K_j = x_j / 2`.
pub fn boost_generator(j: usize) -> Result<Multivector> {
    check_axis(j)?;
    Ok(Multivector::polar(j) * 0.5)
}

/// One factor in the construction history of a [`LorentzOp`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Factor {
    /// Rotation about spatial axis `axis` by `angle` radians.
    Rotor { axis: usize, angle: f64 },
    /// Boost along spatial axis `axis` with rapidity `alpha`.
    Boost { axis: usize, rapidity: f64 },
}

/// A Lorentz group element together with the parameters it was built from.
///
/// Invariants: `reverse(S) S = 1` and `hermite(S) = e0 reverse(S) e0`.
#[derive(Clone, Debug)]
pub struct LorentzOp {
    s: Multivector,
    factors: Vec<Factor>,
}

impl LorentzOp {
    pub fn identity() -> LorentzOp {
        LorentzOp { s: Multivector::scalar(1.0), factors: Vec::new() }
    }

    /// Rotor `cos(theta/2) - I sigma_j sin(theta/2)`.
    pub fn rotor(axis: usize, angle: f64) -> Result<LorentzOp> {
        check_axis(axis)?;
        let half = angle / 2.0;
        let i_sigma = Multivector::pseudoscalar().gp(&Multivector::sigma(axis));
        Ok(LorentzOp {
            s: Multivector::scalar(half.cos()) - i_sigma * half.sin(),
            factors: vec![Factor::Rotor { axis, angle }],
        })
    }

    /// Boost `cosh(alpha/2) + x_j sinh(alpha/2)`.
    pub fn boost(axis: usize, rapidity: f64) -> Result<LorentzOp> {
        check_axis(axis)?;
        let half = rapidity / 2.0;
        Ok(LorentzOp {
            s: Multivector::scalar(half.cosh()) + Multivector::polar(axis) * half.sinh(),
            factors: vec![Factor::Boost { axis, rapidity }],
        })
    }

    /// Group product: `self` applied after `rhs` (multivector product `S_self S_rhs`).
    pub fn compose(&self, rhs: &LorentzOp) -> LorentzOp {
        let mut factors = rhs.factors.clone();
        factors.extend(self.factors.iter().copied());
        LorentzOp { s: self.s.gp(&rhs.s), factors }
    }

    pub fn mv(&self) -> &Multivector {
        &self.s
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn inverse_mv(&self) -> Multivector {
        self.s.reverse()
    }

    /// Two-sided action on multivectors: `S v S~`.
    pub fn transform(&self, v: &Multivector) -> Multivector {
        self.s.gp(v).gp(&self.s.reverse())
    }

    /// Max deviation of `reverse(S) S` from 1.
    pub fn unitarity_residual(&self) -> f64 {
        self.s.reverse().gp(&self.s).max_abs_diff(&Multivector::scalar(1.0))
    }

    /// Max deviation of `hermite(S)` from `e0 reverse(S) e0`.
    pub fn hermite_residual(&self) -> f64 {
        self.s.hermite().max_abs_diff(&self.s.reverse().parity_conj())
    }
}

/// Max deviation of `sym(S e^mu S~, S e^nu S~)` from `eta^{mu nu}` over all
/// 16 spacetime index pairs.
pub fn metric_preservation_residual(op: &LorentzOp) -> f64 {
    let transformed: Vec<Multivector> = (0..4u8)
        .map(|mu| op.transform(&Multivector::vector(mu).unwrap()))
        .collect();
    let mut worst = 0.0f64;
    for mu in 0..4 {
        for nu in 0..4 {
            let want = if mu == nu { eta(mu) } else { 0.0 };
            let got = transformed[mu].sym(&transformed[nu]);
            worst = worst.max(got.max_abs_diff(&Multivector::scalar(want)));
        }
    }
    worst
}

/// The two commuting su(2) halves `S_(+-)j = J_j (1 +- e5) / 2`.
///
/// Parity swaps them: `e0 S_(+-)j e0 = S_(-+)j`.
pub fn su2_split(j: usize) -> Result<(Multivector, Multivector)> {
    let jj = rotation_generator(j)?;
    let e5 = Multivector::vector(5)?;
    let plus = jj.gp(&(Multivector::scalar(1.0) + e5)) * 0.5;
    let minus = jj.gp(&(Multivector::scalar(1.0) - e5)) * 0.5;
    Ok((plus, minus))
}

fn eps(j: usize, k: usize, l: usize) -> f64 {
    match (j, k, l) {
        (1, 2, 3) | (2, 3, 1) | (3, 1, 2) => 1.0,
        (3, 2, 1) | (2, 1, 3) | (1, 3, 2) => -1.0,
        _ => 0.0,
    }
}

/// Max residual over the 27 so(3,1) commutators
/// `[J_j, J_k] = eps_jkl J_l`, `[J_j, K_k] = eps_jkl K_l`,
/// `[K_j, K_k] = -eps_jkl J_l`.
pub fn so31_commutator_residual() -> f64 {
    let j: Vec<Multivector> = (1..=3).map(|a| rotation_generator(a).unwrap()).collect();
    let k: Vec<Multivector> = (1..=3).map(|a| boost_generator(a).unwrap()).collect();
    let mut worst = 0.0f64;
    for a in 1..=3usize {
        for b in 1..=3usize {
            let mut jj = Multivector::ZERO;
            let mut kk = Multivector::ZERO;
            for l in 1..=3usize {
                jj = jj + j[l - 1] * eps(a, b, l);
                kk = kk + k[l - 1] * eps(a, b, l);
            }
            worst = worst.max(j[a - 1].commutator(&j[b - 1]).max_abs_diff(&jj));
            worst = worst.max(j[a - 1].commutator(&k[b - 1]).max_abs_diff(&kk));
            worst = worst.max(k[a - 1].commutator(&k[b - 1]).max_abs_diff(&-jj));
        }
    }
    worst
}

/// Max residual over the su(2) (+) su(2) relations and their parity swap:
/// `[S_(+)j, S_(+)k] = eps_jkl S_(+)l`, same for (-), `[S_(+), S_(-)] = 0`,
/// and `e0 S_(+-)j e0 = S_(-+)j`.
pub fn su2_relations_residual() -> f64 {
    let splits: Vec<(Multivector, Multivector)> = (1..=3).map(|a| su2_split(a).unwrap()).collect();
    let mut worst = 0.0f64;
    for a in 1..=3usize {
        for b in 1..=3usize {
            let mut want_p = Multivector::ZERO;
            let mut want_m = Multivector::ZERO;
            for l in 1..=3usize {
                want_p = want_p + splits[l - 1].0 * eps(a, b, l);
                want_m = want_m + splits[l - 1].1 * eps(a, b, l);
            }
            let (sp_a, sm_a) = splits[a - 1];
            let (sp_b, sm_b) = splits[b - 1];
            worst = worst.max(sp_a.commutator(&sp_b).max_abs_diff(&want_p));
            worst = worst.max(sm_a.commutator(&sm_b).max_abs_diff(&want_m));
            worst = worst.max(sp_a.commutator(&sm_b).max_abs());
        }
    }
    for a in 1..=3usize {
        let (sp, sm) = splits[a - 1];
        worst = worst.max(sp.parity_conj().max_abs_diff(&sm));
        worst = worst.max(sm.parity_conj().max_abs_diff(&sp));
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::{left_rep, matrix_exp};
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn random_op(rng: &mut ChaCha8Rng) -> LorentzOp {
        let mut op = LorentzOp::identity();
        for _ in 0..3 {
            let axis = rng.gen_range(1..=3);
            let x = rng.gen_range(-1.0..1.0);
            let f = if rng.gen_bool(0.5) {
                LorentzOp::rotor(axis, x).unwrap()
            } else {
                LorentzOp::boost(axis, x).unwrap()
            };
            op = f.compose(&op);
        }
        op
    }

    #[test]
    fn invalid_axes_are_rejected() {
        assert!(LorentzOp::rotor(0, 1.0).is_err());
        assert!(LorentzOp::boost(4, 1.0).is_err());
        assert!(su2_split(7).is_err());
    }

    #[test]
    fn rotor_closed_form_matches_series_and_matrix_exp() {
        for axis in 1..=3 {
            for &theta in &[0.0, 0.3, std::f64::consts::FRAC_PI_2, 2.5] {
                let closed = LorentzOp::rotor(axis, theta).unwrap();
                let gen = rotation_generator(axis).unwrap() * theta;
                assert!(closed.mv().max_abs_diff(&gen.exp()) < 1e-13);
                let viamat = matrix_exp(&left_rep(&gen)).column(0);
                assert!(closed.mv().max_abs_diff(&viamat) < 1e-12);
            }
        }
        assert!(LorentzOp::rotor(2, 0.0).unwrap().mv().max_abs_diff(&Multivector::scalar(1.0)) < 1e-15);
    }

    #[test]
    fn boost_closed_form_matches_series_and_matrix_exp() {
        for axis in 1..=3 {
            for &alpha in &[0.0, 0.25, 0.6f64.atanh(), 1.5] {
                let closed = LorentzOp::boost(axis, alpha).unwrap();
                let gen = boost_generator(axis).unwrap() * alpha;
                assert!(closed.mv().max_abs_diff(&gen.exp()) < 1e-13);
                let viamat = matrix_exp(&left_rep(&gen)).column(0);
                assert!(closed.mv().max_abs_diff(&viamat) < 1e-12);
            }
        }
    }

    #[test]
    fn rotor_double_cover() {
        let full_turn = LorentzOp::rotor(3, 2.0 * std::f64::consts::PI).unwrap();
        assert!(full_turn.mv().max_abs_diff(&Multivector::scalar(-1.0)) < 1e-15);
    }

    #[test]
    fn unitarity_and_hermite_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..30 {
            let op = random_op(&mut rng);
            assert!(op.unitarity_residual() < 1e-13);
            assert_eq!(op.hermite_residual(), 0.0, "hermite = e0 reverse e0 holds per blade");
        }
    }

    #[test]
    fn boost_of_e0_at_rapidity_atanh_three_fifths() {
        let op = LorentzOp::boost(1, 0.6f64.atanh()).unwrap();
        let got = op.transform(&Multivector::vector(0).unwrap());
        let want = Multivector::vector(0).unwrap() * 1.25 + Multivector::vector(1).unwrap() * 0.75;
        assert!(got.max_abs_diff(&want) < 1e-14);
        // orthogonal axis untouched
        let e2 = Multivector::vector(2).unwrap();
        assert!(op.transform(&e2).max_abs_diff(&e2) < 1e-15);
    }

    #[test]
    fn quarter_turn_about_z_sends_e1_to_e2() {
        let op = LorentzOp::rotor(3, std::f64::consts::FRAC_PI_2).unwrap();
        let got = op.transform(&Multivector::vector(1).unwrap());
        let want = Multivector::vector(2).unwrap();
        assert!(got.max_abs_diff(&want) < 1e-15, "frozen orientation fixture");
        // cross-check through the regular-representation exponential
        let gen = rotation_generator(3).unwrap() * std::f64::consts::FRAC_PI_2;
        let s = matrix_exp(&left_rep(&gen)).column(0);
        let via_oracle = s.gp(&Multivector::vector(1).unwrap()).gp(&s.reverse());
        assert!(via_oracle.max_abs_diff(&want) < 1e-13);
    }

    #[test]
    fn pseudoscalar_is_fixed() {
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        let i = Multivector::pseudoscalar();
        for _ in 0..10 {
            let op = random_op(&mut rng);
            assert!(op.transform(&i).max_abs_diff(&i) < 1e-13);
        }
    }

    #[test]
    fn metric_preservation() {
        assert_eq!(metric_preservation_residual(&LorentzOp::identity()), 0.0);
        let s = LorentzOp::boost(1, 0.3).unwrap().compose(&LorentzOp::rotor(2, 0.7).unwrap());
        assert!(metric_preservation_residual(&s) < 1e-14);
        assert!(metric_preservation_residual(&LorentzOp::rotor(1, std::f64::consts::PI).unwrap()) < 1e-14);
        // two boosts along different axes still preserve the metric
        let th = LorentzOp::boost(1, 0.4).unwrap().compose(&LorentzOp::boost(2, 0.9).unwrap());
        assert!(metric_preservation_residual(&th) < 1e-14);
    }

    #[test]
    fn generator_commutators_are_exact() {
        assert_eq!(so31_commutator_residual(), 0.0);
        assert_eq!(su2_relations_residual(), 0.0);
    }

    #[test]
    fn su2_split_examples() {
        let (sp1, _) = su2_split(1).unwrap();
        let (sp2, sm2) = su2_split(2).unwrap();
        let (sp3, sm3) = su2_split(3).unwrap();
        assert_eq!(sp1.commutator(&sp2).max_abs_diff(&sp3), 0.0);
        assert_eq!(sp1.commutator(&sm2).max_abs(), 0.0);
        assert_eq!(sp3.parity_conj().max_abs_diff(&sm3), 0.0);
    }

    #[test]
    fn generators_contain_no_e5() {
        for j in 1..=3 {
            for m in [rotation_generator(j).unwrap(), boost_generator(j).unwrap()] {
                for (b, _) in m.terms() {
                    assert!(!b.contains(5), "generator blade {} has e5", b.name());
                }
            }
        }
    }
}
