//! Dirac conjugate and the 16 bilinear covariants, each computed two ways.
//!
//! The direct path works at the multivector level: the adjoint
//! `psi-bar = hermite(psi) e0` multiplies `Gamma psi` and the trailing
//! idempotent leaves the product in `span{P, I P}`, whose complex value is
//! read off after rescaling by 4 (the scalar part of `P` is 1/4).
//!
//! The expanded path never touches multivectors: it evaluates the component
//! formulas on the four complex pairs, with the spin vectors acting as the
//! usual two-by-two Pauli pattern on `(u, d)` slots. The two paths are
//! independent implementations and [`bilinear`] insists they agree.
//!
//! Index placement for the representatives: vector components pair `e^mu`
//! with the conjugate, while axial components use the lowered spatial form
//! `-e^j e^5` so that the spatial axial values are the spin densities
//! `phi^dag sigma_j phi + chi^dag sigma_j chi` with positive sign.

use crate::algebra::{eta, Multivector};
use crate::dirac::HBar;
use crate::field::FieldExpr;
use crate::spinor::{embed, Cx, Spinor};
use crate::{Error, Result};

/// One of the 16 bilinear covariant kinds. Bivector kinds are stored with
/// `mu < nu`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BilinearKind {
    Scalar,
    Vector(usize),
    Bivector(usize, usize),
    Axial(usize),
    Pseudoscalar,
}

impl BilinearKind {
    /// All 16 kinds: 1 + 4 + 6 + 4 + 1.
    pub fn all() -> Vec<BilinearKind> {
        let mut v = vec![BilinearKind::Scalar];
        for mu in 0..4 {
            v.push(BilinearKind::Vector(mu));
        }
        for mu in 0..4 {
            for nu in (mu + 1)..4 {
                v.push(BilinearKind::Bivector(mu, nu));
            }
        }
        for mu in 0..4 {
            v.push(BilinearKind::Axial(mu));
        }
        v.push(BilinearKind::Pseudoscalar);
        v
    }

    pub fn label(&self) -> String {
        match self {
            BilinearKind::Scalar => "scalar".into(),
            BilinearKind::Vector(mu) => format!("vector[{mu}]"),
            BilinearKind::Bivector(mu, nu) => format!("bivector[{mu}{nu}]"),
            BilinearKind::Axial(mu) => format!("axial[{mu}]"),
            BilinearKind::Pseudoscalar => "pseudoscalar".into(),
        }
    }
}

/// Result of a bilinear pairing: the complex value and the raw multivector
/// it was extracted from.
#[derive(Clone, Debug)]
pub struct BilinearValue {
    pub value: Cx,
    pub raw: Multivector,
}

/// The sandwich element for each kind.
pub fn gamma(kind: BilinearKind) -> Multivector {
    let e = |mu: usize| Multivector::vector(mu as u8).unwrap();
    let e5 = Multivector::vector(5).unwrap();
    match kind {
        BilinearKind::Scalar => Multivector::scalar(1.0),
        BilinearKind::Vector(mu) => e(mu),
        BilinearKind::Bivector(mu, nu) => e(mu).antisym(&e(nu)),
        BilinearKind::Axial(mu) => e(mu).gp(&e5) * eta(mu),
        BilinearKind::Pseudoscalar => e5,
    }
}

/// The Dirac adjoint `psi-bar = hermite(psi) e0` as a reusable left factor.
pub struct DiracAdjoint {
    mv: Multivector,
}

impl DiracAdjoint {
    pub fn new(psi: &Spinor) -> DiracAdjoint {
        DiracAdjoint { mv: embed(psi).hermite().gp(&Multivector::vector(0).unwrap()) }
    }

    pub fn mv(&self) -> &Multivector {
        &self.mv
    }

    /// `psi-bar Gamma chi`, rescaled out of the idempotent corner.
    pub fn pair(&self, gamma_mv: &Multivector, chi: &Spinor) -> BilinearValue {
        let raw = self.mv.gp(gamma_mv).gp(&embed(chi));
        let (a, b) = raw.complex_part();
        BilinearValue { value: Cx::new(4.0 * a, 4.0 * b), raw }
    }

    /// Scalar pairing `psi-bar chi`.
    pub fn apply(&self, chi: &Spinor) -> Cx {
        self.pair(&Multivector::scalar(1.0), chi).value
    }
}

fn cdot2(a: (Cx, Cx), b: (Cx, Cx)) -> Cx {
    a.0.conj() * b.0 + a.1.conj() * b.1
}

/// Pauli action of `sigma_j` on a `(u, d)` pair.
fn pauli(j: usize, p: (Cx, Cx)) -> (Cx, Cx) {
    match j {
        1 => (p.1, p.0),
        2 => (-p.1.times_i(), p.0.times_i()),
        3 => (p.0, -p.1),
        _ => panic!("invalid spin axis {j}"),
    }
}

/// Table-style expanded value on the component pairs, sharing no code with
/// the multivector path.
pub fn expanded_value(psi1: &Spinor, psi2: &Spinor, kind: BilinearKind) -> Cx {
    let phi1 = (psi1.phi_u, psi1.phi_d);
    let chi1 = (psi1.chi_u, psi1.chi_d);
    let phi2 = (psi2.phi_u, psi2.phi_d);
    let chi2 = (psi2.chi_u, psi2.chi_d);
    match kind {
        BilinearKind::Scalar => cdot2(phi1, phi2) - cdot2(chi1, chi2),
        BilinearKind::Vector(0) => cdot2(phi1, phi2) + cdot2(chi1, chi2),
        BilinearKind::Vector(j) => -(cdot2(phi1, pauli(j, chi2)) + cdot2(chi1, pauli(j, phi2))),
        BilinearKind::Bivector(0, k) => cdot2(chi1, pauli(k, phi2)) - cdot2(phi1, pauli(k, chi2)),
        BilinearKind::Bivector(j, k) => {
            // spatial pair: -I eps_jkl (phi^dag sigma_l phi - chi^dag sigma_l chi)
            let (l, sign) = match (j, k) {
                (1, 2) => (3, 1.0),
                (1, 3) => (2, -1.0),
                (2, 3) => (1, 1.0),
                _ => panic!("bivector indices must satisfy mu < nu"),
            };
            let spin = cdot2(phi1, pauli(l, phi2)) - cdot2(chi1, pauli(l, chi2));
            (-spin.times_i()).scale(sign)
        }
        BilinearKind::Axial(0) => cdot2(phi1, chi2) + cdot2(chi1, phi2),
        BilinearKind::Axial(j) => cdot2(phi1, pauli(j, phi2)) + cdot2(chi1, pauli(j, chi2)),
        BilinearKind::Pseudoscalar => cdot2(phi1, chi2) - cdot2(chi1, phi2),
    }
}

/// Bilinear covariant computed along both paths; errors if they disagree.
pub fn bilinear(psi1: &Spinor, psi2: &Spinor, kind: BilinearKind) -> Result<BilinearValue> {
    let direct = DiracAdjoint::new(psi1).pair(&gamma(kind), psi2);
    let expanded = expanded_value(psi1, psi2, kind);
    let scale = direct.value.abs2().sqrt().max(expanded.abs2().sqrt()).max(1.0);
    if direct.value.max_abs_diff(expanded) > 1e-11 * scale {
        return Err(Error::BilinearMismatch {
            direct: (direct.value.re, direct.value.im),
            expanded: (expanded.re, expanded.im),
        });
    }
    Ok(direct)
}

/// The four current components `j^mu = psi-bar e^mu psi`; `j^0 >= 0`.
pub fn current(psi: &Spinor) -> Result<[f64; 4]> {
    let mut out = [0.0; 4];
    for (mu, slot) in out.iter_mut().enumerate() {
        let v = bilinear(psi, psi, BilinearKind::Vector(mu))?.value;
        debug_assert!(v.im.abs() < 1e-12 * v.re.abs().max(1.0));
        *slot = v.re;
    }
    Ok(out)
}

/// Minkowski norm `j.j = (j^0)^2 - sum_j (j^j)^2` of a current array.
pub fn current_norm(j: &[f64; 4]) -> f64 {
    (0..4).map(|mu| eta(mu) * j[mu] * j[mu]).sum()
}

/// Pointwise bilinear field `psi-bar(x) Gamma psi(x)` (raw, un-rescaled).
pub fn bilinear_field(psi_field: &FieldExpr, gamma_mv: &Multivector) -> FieldExpr {
    psi_field
        .hermite()
        .mul_mv_right(&Multivector::vector(0).unwrap())
        .mul_mv_right(gamma_mv)
        .mul(psi_field)
}

/// Divergence of the probability current field, `d_mu (psi-bar e^mu psi)`;
/// identically zero on superpositions of on-shell plane waves with a common
/// energy sign.
pub fn vector_current_divergence(psi_field: &FieldExpr) -> FieldExpr {
    let mut acc = FieldExpr::zero();
    for mu in 0..4 {
        let j_mu = bilinear_field(psi_field, &gamma(BilinearKind::Vector(mu)));
        acc = acc.add(&j_mu.partial(mu));
    }
    acc
}

/// Raised divergence of the axial current field,
/// `eta^{mu mu} d_mu (psi-bar Gamma_axial(mu) psi)`; identically zero on
/// massless on-shell superpositions.
pub fn axial_current_divergence(psi_field: &FieldExpr) -> FieldExpr {
    let mut acc = FieldExpr::zero();
    for mu in 0..4 {
        let j_mu = bilinear_field(psi_field, &gamma(BilinearKind::Axial(mu)));
        acc = acc.add(&j_mu.partial(mu).scale(eta(mu)));
    }
    acc
}

/// Plane-wave spinor field `exp(-I p.x / hbar) u(p, s)` for conservation
/// checks.
pub fn plane_wave_field(s: &crate::dirac::OnShellState, hbar: HBar) -> FieldExpr {
    let w = [
        -s.energy() / hbar.0,
        -s.momentum()[0] / hbar.0,
        -s.momentum()[1] / hbar.0,
        -s.momentum()[2] / hbar.0,
    ];
    FieldExpr::plane_phase(w).mul(&FieldExpr::constant(embed(&crate::dirac::free_solution(s))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dirac::{density, free_solution, EnergySign, OnShellState, Spin};
    use crate::lorentz::LorentzOp;
    use crate::spinor::act;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn random_spinor(rng: &mut ChaCha8Rng) -> Spinor {
        Spinor::from_array(std::array::from_fn(|_| rng.gen_range(-1.0..1.0)))
    }

    fn random_op(rng: &mut ChaCha8Rng) -> LorentzOp {
        let mut op = LorentzOp::identity();
        for _ in 0..2 {
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
    fn scalar_bilinear_signs() {
        let up = Spinor::from_reals(1.0, 0.0, 0.0, 0.0);
        let chi = Spinor::from_reals(0.0, 0.0, 1.0, 0.0);
        assert_eq!(bilinear(&up, &up, BilinearKind::Scalar).unwrap().value, Cx::ONE);
        assert_eq!(bilinear(&chi, &chi, BilinearKind::Scalar).unwrap().value, Cx::new(-1.0, 0.0));
    }

    #[test]
    fn two_paths_agree_on_random_pairs() {
        let mut rng = ChaCha8Rng::seed_from_u64(71);
        for _ in 0..50 {
            let a = random_spinor(&mut rng);
            let b = random_spinor(&mut rng);
            for kind in BilinearKind::all() {
                bilinear(&a, &b, kind).unwrap_or_else(|e| panic!("{}: {e}", kind.label()));
            }
        }
    }

    #[test]
    fn current_of_rest_up_state() {
        let up = Spinor::from_reals(1.0, 0.0, 0.0, 0.0);
        assert_eq!(current(&up).unwrap(), [1.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn current_density_is_positive_and_matches_density() {
        let mut rng = ChaCha8Rng::seed_from_u64(72);
        for _ in 0..50 {
            let psi = random_spinor(&mut rng);
            let j = current(&psi).unwrap();
            assert!(j[0] >= 0.0);
            assert!((j[0] - density(&psi)).abs() < 1e-12);
        }
    }

    #[test]
    fn moving_state_current_fixture() {
        // p_3 = 3 labels the covariant component; the spatial flux is then
        // -p_3 / E of the density
        let s = OnShellState::with_energy(4.0, 5.0, [0.0, 0.0, 3.0], Spin::Up).unwrap();
        let u = crate::dirac::normalize(&free_solution(&s)).unwrap();
        let j = current(&u).unwrap();
        assert!((j[0] - 1.0).abs() < 1e-14);
        assert!(j[1].abs() < 1e-15 && j[2].abs() < 1e-15);
        assert!((j[3] / j[0] + 3.0 / 5.0).abs() < 1e-14);
        assert!(((j[3] / j[0]).abs() - 0.6).abs() < 1e-14);
    }

    #[test]
    fn axial_component_is_spin_density() {
        let up = Spinor::from_reals(1.0, 0.0, 0.0, 0.0);
        let v = bilinear(&up, &up, BilinearKind::Axial(3)).unwrap().value;
        assert_eq!(v, Cx::ONE);
        let down = Spinor::from_reals(0.0, 1.0, 0.0, 0.0);
        let v = bilinear(&down, &down, BilinearKind::Axial(3)).unwrap().value;
        assert_eq!(v, Cx::new(-1.0, 0.0));
    }

    #[test]
    fn pseudoscalar_vanishes_on_pure_parity_sector() {
        let mut rng = ChaCha8Rng::seed_from_u64(73);
        for _ in 0..10 {
            let mut psi = random_spinor(&mut rng);
            psi.chi_u = Cx::ZERO;
            psi.chi_d = Cx::ZERO;
            let v = bilinear(&psi, &psi, BilinearKind::Pseudoscalar).unwrap().value;
            assert!(v.abs2() < 1e-28);
        }
    }

    #[test]
    fn hermiticity_pattern() {
        let mut rng = ChaCha8Rng::seed_from_u64(74);
        for _ in 0..20 {
            let psi = random_spinor(&mut rng);
            let s = bilinear(&psi, &psi, BilinearKind::Scalar).unwrap().value;
            assert!(s.im.abs() < 1e-13, "scalar must be real");
            let p = bilinear(&psi, &psi, BilinearKind::Pseudoscalar).unwrap().value;
            assert!(p.re.abs() < 1e-13, "pseudoscalar must be imaginary");
        }
    }

    #[test]
    fn lorentz_behaviour_of_scalar_pseudoscalar_and_current() {
        let mut rng = ChaCha8Rng::seed_from_u64(75);
        for _ in 0..20 {
            let psi = random_spinor(&mut rng);
            let op = random_op(&mut rng);
            let moved = act(op.mv(), &psi);
            for kind in [BilinearKind::Scalar, BilinearKind::Pseudoscalar] {
                let before = bilinear(&psi, &psi, kind).unwrap().value;
                let after = bilinear(&moved, &moved, kind).unwrap().value;
                assert!(before.max_abs_diff(after) < 1e-12, "{}", kind.label());
            }
            let j0 = current(&psi).unwrap();
            let j1 = current(&moved).unwrap();
            assert!((current_norm(&j0) - current_norm(&j1)).abs() < 1e-11);
        }
    }

    #[test]
    fn spin_up_down_orthogonality_at_same_momentum() {
        let mut rng = ChaCha8Rng::seed_from_u64(76);
        for _ in 0..20 {
            let m = rng.gen_range(0.5..3.0);
            let p = [rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)];
            let s_up = OnShellState::new(m, p, EnergySign::Positive, Spin::Up).unwrap();
            let s_dn = OnShellState::new(m, p, EnergySign::Positive, Spin::Down).unwrap();
            let v = bilinear(&free_solution(&s_up), &free_solution(&s_dn), BilinearKind::Scalar)
                .unwrap()
                .value;
            assert!(v.abs2() < 1e-24);
        }
    }

    #[test]
    fn current_conservation_on_two_wave_superposition() {
        // denominators are powers of two, so the cancellation is exact
        let hbar = HBar::default();
        let s1 = OnShellState::with_energy(3.0, 5.0, [0.0, 0.0, 4.0], Spin::Up).unwrap();
        let s2 = OnShellState::with_energy(3.0, 5.0, [4.0, 0.0, 0.0], Spin::Up).unwrap();
        let f = plane_wave_field(&s1, hbar).add(&plane_wave_field(&s2, hbar));
        let div = vector_current_divergence(&f);
        assert!(div.is_zero(0.0), "divergence {}", div.max_coeff_abs());

        // single wave: constant current
        let single = plane_wave_field(&s1, hbar);
        assert!(vector_current_divergence(&single).is_zero(0.0));
    }

    #[test]
    fn off_shell_control_breaks_conservation() {
        let hbar = HBar::default();
        let s1 = OnShellState::with_energy(3.0, 5.0, [0.0, 0.0, 4.0], Spin::Up).unwrap();
        let s2 = OnShellState::with_energy(3.0, 5.0, [4.0, 0.0, 0.0], Spin::Up).unwrap();
        let _ = s1;
        // deliberately shift one energy off shell in the phase
        let bad_w = [-(5.0 + 0.1), 0.0, 0.0, -4.0];
        let bad = FieldExpr::plane_phase(bad_w)
            .mul(&FieldExpr::constant(embed(&free_solution(&s1))));
        let f = bad.add(&plane_wave_field(&s2, hbar));
        let div = vector_current_divergence(&f);
        assert!(div.max_coeff_abs() > 1e-3, "control must fail, got {}", div.max_coeff_abs());
    }

    #[test]
    fn axial_conservation_for_massless_states() {
        let hbar = HBar::default();
        let s1 = OnShellState::with_energy(0.0, 4.0, [0.0, 0.0, 4.0], Spin::Up).unwrap();
        let s2 = OnShellState::with_energy(0.0, 4.0, [4.0, 0.0, 0.0], Spin::Up).unwrap();
        let f = plane_wave_field(&s1, hbar).add(&plane_wave_field(&s2, hbar));
        let div = axial_current_divergence(&f);
        assert!(div.is_zero(0.0), "massless axial divergence {}", div.max_coeff_abs());

        // massive control: the divergence is 2m times the pseudoscalar field
        let s1 = OnShellState::with_energy(3.0, 5.0, [0.0, 0.0, 4.0], Spin::Up).unwrap();
        let s2 = OnShellState::with_energy(3.0, 5.0, [4.0, 0.0, 0.0], Spin::Up).unwrap();
        let f = plane_wave_field(&s1, hbar).add(&plane_wave_field(&s2, hbar));
        let div = axial_current_divergence(&f);
        assert!(div.max_coeff_abs() > 1e-3);
    }

    #[test]
    fn adjoint_pairing_examples() {
        let up = Spinor::from_reals(1.0, 0.0, 0.0, 0.0);
        let adj = DiracAdjoint::new(&up);
        assert_eq!(adj.apply(&up), Cx::ONE);
        // raw product sits in the idempotent corner
        let raw = adj.pair(&Multivector::scalar(1.0), &up).raw;
        assert!(raw.max_abs_diff(&crate::spinor::idempotent()) < 1e-15);
    }
}
