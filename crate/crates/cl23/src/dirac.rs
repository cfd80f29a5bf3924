//! Momentum-space Dirac equation in Cl(2,3) and its free-field solutions.
//!
//! A free state is labelled by mass, signed energy, the three momentum
//! components `p_j` that pair with the frame vectors in `p = E e0 + p_j e^j`,
//! and a spin label. The same `p_j` drive the coupled two-spinor form
//!
//! ```text
//! (E - m) phi - p chi = 0        p = p_j x_j
//! (E + m) chi - p phi = 0
//! ```
//!
//! whose elimination gives the closed-form solutions implemented here: for
//! `E > 0` the parity-even pair is free and `chi = p phi / (E + m)`; for
//! `E < 0` the parity-odd pair is free and `phi = p chi / (E - m)`, the spin
//! label then naming the sigma_3 eigenvalue of the chi sector.

use crate::algebra::Multivector;
use crate::spinor::{act, parity_split, Cx, Spinor};
use crate::{Error, Result};

/// Reduced Planck constant kept as an explicit parameter (c = 1 units).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HBar(pub f64);

impl Default for HBar {
    fn default() -> Self {
        HBar(1.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Spin {
    Up,
    Down,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnergySign {
    Positive,
    Negative,
}

/// An on-shell free-particle label: `E^2 = m^2 + |p|^2` with `sign(E)` the
/// energy sign and `m >= 0` (massless states need `|p| > 0`).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OnShellState {
    m: f64,
    energy: f64,
    p: [f64; 3],
    spin: Spin,
}

impl OnShellState {
    /// Build a state with the energy derived from `m` and `p`.
    pub fn new(m: f64, p: [f64; 3], sign: EnergySign, spin: Spin) -> Result<OnShellState> {
        if m < 0.0 || m.is_nan() {
            return Err(Error::BadMass(m));
        }
        let p2: f64 = p.iter().map(|x| x * x).sum();
        if m == 0.0 && p2 == 0.0 {
            return Err(Error::OffShell { residual: 0.0 });
        }
        let e = (m * m + p2).sqrt();
        let energy = match sign {
            EnergySign::Positive => e,
            EnergySign::Negative => -e,
        };
        Ok(OnShellState { m, energy, p, spin })
    }

    /// Build from an explicit energy, validating the shell condition.
    pub fn with_energy(m: f64, energy: f64, p: [f64; 3], spin: Spin) -> Result<OnShellState> {
        if m < 0.0 || m.is_nan() {
            return Err(Error::BadMass(m));
        }
        let p2: f64 = p.iter().map(|x| x * x).sum();
        let residual = energy * energy - m * m - p2;
        let scale = (energy * energy).max(m * m).max(p2).max(1.0);
        if residual.abs() > 1e-12 * scale {
            return Err(Error::OffShell { residual });
        }
        Ok(OnShellState { m, energy, p, spin })
    }

    pub fn mass(&self) -> f64 {
        self.m
    }

    pub fn energy(&self) -> f64 {
        self.energy
    }

    pub fn momentum(&self) -> [f64; 3] {
        self.p
    }

    pub fn spin(&self) -> Spin {
        self.spin
    }

    pub fn energy_sign(&self) -> EnergySign {
        if self.energy >= 0.0 {
            EnergySign::Positive
        } else {
            EnergySign::Negative
        }
    }

    /// The 4-momentum vector `p = E e0 + p_j e^j`.
    pub fn momentum_vector(&self) -> Multivector {
        let mut m = Multivector::vector(0).unwrap() * self.energy;
        for j in 1..=3usize {
            m = m + Multivector::vector(j as u8).unwrap() * self.p[j - 1];
        }
        m
    }

    /// The spatial momentum `p = p_j x_j` in the polar-vector basis.
    pub fn spatial_momentum(&self) -> Multivector {
        let mut m = Multivector::ZERO;
        for j in 1..=3usize {
            m = m + Multivector::polar(j) * self.p[j - 1];
        }
        m
    }

    /// Lorentz-invariant phase `p . x = E x0 + p_j x^j` for the plane wave.
    pub fn phase_at(&self, x: [f64; 4]) -> f64 {
        self.energy * x[0] + self.p[0] * x[1] + self.p[1] * x[2] + self.p[2] * x[3]
    }
}

/// Un-normalized free solution `u(p, s)` with `(p - m) u = 0`.
pub fn free_solution(s: &OnShellState) -> Spinor {
    let [p1, p2, p3] = s.p;
    match s.energy_sign() {
        EnergySign::Positive => {
            let d = s.energy + s.m;
            let (phi_u, phi_d) = match s.spin {
                Spin::Up => (Cx::ONE, Cx::ZERO),
                Spin::Down => (Cx::ZERO, Cx::ONE),
            };
            // chi = (p, sigma) phi / (E + m)
            let chi_u = (phi_u.scale(p3) + Cx::new(p1, -p2) * phi_d).scale(1.0 / d);
            let chi_d = (Cx::new(p1, p2) * phi_u - phi_d.scale(p3)).scale(1.0 / d);
            Spinor::new(phi_u, phi_d, chi_u, chi_d)
        }
        EnergySign::Negative => {
            let d = s.energy - s.m; // negative, |d| = -E + m
            let (chi_u, chi_d) = match s.spin {
                Spin::Up => (Cx::ONE, Cx::ZERO),
                Spin::Down => (Cx::ZERO, Cx::ONE),
            };
            // phi = (p, sigma) chi / (E - m)
            let phi_u = (chi_u.scale(p3) + Cx::new(p1, -p2) * chi_d).scale(1.0 / d);
            let phi_d = (Cx::new(p1, p2) * chi_u - chi_d.scale(p3)).scale(1.0 / d);
            Spinor::new(phi_u, phi_d, chi_u, chi_d)
        }
    }
}

/// Norm of the Dirac residual `(p - m) psi`.
pub fn dirac_residual(s: &OnShellState, psi: &Spinor) -> f64 {
    let op = s.momentum_vector() - Multivector::scalar(s.m);
    act(&op, psi).norm()
}

/// Residuals of the coupled two-spinor equations; both vanish on
/// [`free_solution`] output.
pub fn coupled_residuals(s: &OnShellState, psi: &Spinor) -> (Spinor, Spinor) {
    let (phi, chi) = parity_split(psi);
    let p = s.spatial_momentum();
    let r1 = phi.scale(s.energy - s.m) - act(&p, &chi);
    let r2 = chi.scale(s.energy + s.m) - act(&p, &phi);
    (r1, r2)
}

/// Plane-wave value `exp(-I (p.x) / hbar) u(p, s)` at event `x = (t, x1, x2, x3)`.
pub fn plane_wave(s: &OnShellState, x: [f64; 4], hbar: HBar) -> Spinor {
    let theta = s.phase_at(x) / hbar.0;
    free_solution(s).scale_cx(Cx::new(theta.cos(), -theta.sin()))
}

/// Probability density `psi^dagger psi`, the time component of the current.
pub fn density(psi: &Spinor) -> f64 {
    psi.slots().iter().map(|c| c.abs2()).sum()
}

/// Scale to unit probability density.
pub fn normalize(psi: &Spinor) -> Result<Spinor> {
    let d = density(psi);
    if d <= 0.0 || !d.is_finite() {
        return Err(Error::ZeroNorm { density: d });
    }
    Ok(psi.scale(1.0 / d.sqrt()))
}

/// Rest-frame structure report: the Dirac operator at `p = 0` reduces to the
/// parity projector `e0 - 1`, which must annihilate exactly the parity-even
/// sector.
#[derive(Clone, Copy, Debug)]
pub struct RestFrameReport {
    /// Norm of `(e0 - 1) psi`.
    pub residual: f64,
    /// Norm of the parity-odd sector of `psi`.
    pub chi_norm: f64,
}

impl RestFrameReport {
    pub fn passes(&self, tol: f64) -> bool {
        // residual vanishes exactly when the odd sector does
        (self.residual <= tol) == (self.chi_norm <= tol)
            && (self.residual - 2.0 * self.chi_norm).abs() <= tol.max(1e-12)
    }
}

pub fn rest_frame_check(psi: &Spinor) -> RestFrameReport {
    let e0m1 = Multivector::vector(0).unwrap() - Multivector::scalar(1.0);
    let (_, chi) = parity_split(psi);
    RestFrameReport { residual: act(&e0m1, psi).norm(), chi_norm: chi.norm() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lorentz::LorentzOp;
    use crate::spinor::embed;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn fixture_345() -> OnShellState {
        OnShellState::with_energy(4.0, 5.0, [0.0, 0.0, 3.0], Spin::Up).unwrap()
    }

    #[test]
    fn on_shell_validation() {
        assert!(OnShellState::with_energy(4.0, 5.0, [0.0, 0.0, 3.0], Spin::Up).is_ok());
        assert!(matches!(
            OnShellState::with_energy(4.0, 5.1, [0.0, 0.0, 3.0], Spin::Up),
            Err(Error::OffShell { .. })
        ));
        assert!(matches!(OnShellState::new(-1.0, [0.0; 3], EnergySign::Positive, Spin::Up), Err(Error::BadMass(_))));
        // massless states need momentum
        assert!(OnShellState::new(0.0, [0.0; 3], EnergySign::Positive, Spin::Up).is_err());
        assert!(OnShellState::new(0.0, [1.0, 0.0, 0.0], EnergySign::Positive, Spin::Up).is_ok());
    }

    #[test]
    fn momentum_vector_examples() {
        let rest = OnShellState::new(4.0, [0.0; 3], EnergySign::Positive, Spin::Up).unwrap();
        assert!(rest.momentum_vector().max_abs_diff(&(Multivector::vector(0).unwrap() * 4.0)) < 1e-15);

        let s = fixture_345();
        let p = s.momentum_vector();
        // p . p = m^2 through the symmetric product
        assert!((p.sym(&p).scalar_part() - 16.0).abs() < 1e-12);

        let unit = OnShellState::new(1.0, [0.0; 3], EnergySign::Positive, Spin::Up).unwrap();
        assert!(unit.momentum_vector().max_abs_diff(&Multivector::vector(0).unwrap()) < 1e-15);
    }

    #[test]
    fn free_solution_fixture_components() {
        let u = free_solution(&fixture_345());
        let want = Spinor::from_reals(1.0, 0.0, 1.0 / 3.0, 0.0);
        assert!(u.max_abs_diff(&want) < 1e-15);

        // momentum along x1: chi lands in the chi_d slot, real
        let s = OnShellState::with_energy(4.0, 5.0, [3.0, 0.0, 0.0], Spin::Up).unwrap();
        let u = free_solution(&s);
        let want = Spinor::from_reals(1.0, 0.0, 0.0, 1.0 / 3.0);
        assert!(u.max_abs_diff(&want) < 1e-15);

        // rest frame
        let rest = OnShellState::new(2.0, [0.0; 3], EnergySign::Positive, Spin::Up).unwrap();
        assert_eq!(free_solution(&rest), Spinor::from_reals(1.0, 0.0, 0.0, 0.0));
        let rest_down = OnShellState::new(1.0, [0.0; 3], EnergySign::Positive, Spin::Down).unwrap();
        assert_eq!(free_solution(&rest_down), Spinor::from_reals(0.0, 1.0, 0.0, 0.0));
    }

    #[test]
    fn free_solutions_satisfy_the_equation() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for _ in 0..200 {
            let m = rng.gen_range(0.5..4.0);
            let p = [rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0)];
            let sign = if rng.gen_bool(0.5) { EnergySign::Positive } else { EnergySign::Negative };
            let spin = if rng.gen_bool(0.5) { Spin::Up } else { Spin::Down };
            let s = OnShellState::new(m, p, sign, spin).unwrap();
            let u = free_solution(&s);
            assert!(dirac_residual(&s, &u) < 1e-11, "state {s:?}");
            let (r1, r2) = coupled_residuals(&s, &u);
            assert!(r1.norm() < 1e-11 && r2.norm() < 1e-11);
        }
    }

    #[test]
    fn negative_energy_rest_states_are_pure_chi() {
        let s = OnShellState::new(3.0, [0.0; 3], EnergySign::Negative, Spin::Up).unwrap();
        let v = free_solution(&s);
        assert_eq!(v, Spinor::from_reals(0.0, 0.0, 1.0, 0.0));
        assert!(dirac_residual(&s, &v) < 1e-15);
    }

    #[test]
    fn coupled_residuals_detect_off_shell_spinors() {
        let s = OnShellState::new(2.0, [0.0; 3], EnergySign::Positive, Spin::Up).unwrap();
        let psi = Spinor::from_reals(1.0, 0.0, 0.0, 0.0);
        // (E - m) phi - p chi with E = m and p = 0 vanishes
        let (r1, _) = coupled_residuals(&s, &psi);
        assert_eq!(r1.norm(), 0.0);
        // at a different energy the first residual is (E - m) phi
        let moving = OnShellState::new(2.0, [0.0, 0.0, 1.5], EnergySign::Positive, Spin::Up).unwrap();
        let (r1, _) = coupled_residuals(&moving, &psi);
        assert!((r1.norm() - (moving.energy() - 2.0)).abs() < 1e-12);
    }

    #[test]
    fn boosted_rest_solution_solves_boosted_equation() {
        let m = 2.0;
        let rest = OnShellState::new(m, [0.0; 3], EnergySign::Positive, Spin::Up).unwrap();
        let u0 = free_solution(&rest);
        for &(axis, alpha) in &[(1usize, 0.7), (2, -0.4), (3, 1.2)] {
            let op = LorentzOp::boost(axis, alpha).unwrap();
            let boosted_p = op.transform(&rest.momentum_vector());
            let boosted_u = act(op.mv(), &u0);
            let dirac = boosted_p - Multivector::scalar(m);
            assert!(act(&dirac, &boosted_u).norm() < 1e-10, "axis {axis}");
            // the boosted momentum is itself on shell
            assert!((boosted_p.sym(&boosted_p).scalar_part() - m * m).abs() < 1e-12);
        }
    }

    #[test]
    fn plane_wave_examples() {
        let s = fixture_345();
        let hbar = HBar::default();
        assert_eq!(plane_wave(&s, [0.0; 4], hbar), free_solution(&s));

        // rest frame: pure time oscillation exp(-I m t / hbar)
        let rest = OnShellState::new(2.0, [0.0; 3], EnergySign::Positive, Spin::Up).unwrap();
        let t = 0.65;
        let got = plane_wave(&rest, [t, 0.0, 0.0, 0.0], hbar);
        let want = Spinor::new(Cx::new((2.0 * t).cos(), -(2.0 * t).sin()), Cx::ZERO, Cx::ZERO, Cx::ZERO);
        assert!(got.max_abs_diff(&want) < 1e-15);

        // phase multiplication agrees with the multivector exponential
        let x = [0.3, -1.0, 0.25, 2.0];
        let theta = s.phase_at(x);
        let phase_mv = (Multivector::pseudoscalar() * (-theta)).exp();
        let via_exp = crate::spinor::project(&phase_mv.gp(&embed(&free_solution(&s)))).unwrap();
        assert!(plane_wave(&s, x, hbar).max_abs_diff(&via_exp) < 1e-13);

        // norms do not depend on position
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let n0 = free_solution(&s).norm();
        for _ in 0..10 {
            let x = [rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0)];
            assert!((plane_wave(&s, x, hbar).norm() - n0).abs() < 1e-12);
        }
    }

    #[test]
    fn rest_frame_report() {
        let even = Spinor::from_reals(1.0, 0.0, 0.0, 0.0);
        let r = rest_frame_check(&even);
        assert_eq!(r.residual, 0.0);
        assert!(r.passes(1e-12));

        let odd = Spinor::from_reals(0.0, 0.0, 1.0, 0.0);
        let r = rest_frame_check(&odd);
        assert_eq!(r.residual, 2.0);
        assert_eq!(r.chi_norm, 1.0);
        assert!(r.passes(1e-12));

        let mixed = Spinor::from_reals(1.0, 0.0, 1.0, 0.0);
        let r = rest_frame_check(&mixed);
        assert!(r.residual > 1.0 && r.chi_norm == 1.0);
    }

    #[test]
    fn normalization() {
        let s = fixture_345();
        let u = normalize(&free_solution(&s)).unwrap();
        assert!((density(&u) - 1.0).abs() < 1e-15);
        assert!(matches!(normalize(&Spinor::ZERO), Err(Error::ZeroNorm { .. })));
    }

    #[test]
    fn spin_up_and_down_probabilities_sum_to_one() {
        let w = std::f64::consts::FRAC_1_SQRT_2;
        let psi = Spinor::from_reals(w, w, 0.0, 0.0);
        assert!((density(&psi) - 1.0).abs() < 1e-15);
        assert!((psi.phi_u.abs2() + psi.phi_d.abs2() - 1.0).abs() < 1e-15);
    }
}
