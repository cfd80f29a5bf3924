//! Discrete symmetries of the Dirac field: parity, time reversal, charge
//! conjugation, CPT, and the Lagrangian invariance checks.
//!
//! Time reversal and charge conjugation combine a spin vector with a
//! generator sign swap: `T_j psi = sigma_j K_j(psi)` and
//! `C_j psi = K_j(e^j psi) = e05 sigma_j K_j(psi)`, any spatial `j`. The swap
//! `K_3` flips `sigma_3` and therefore carries the reference ideal
//! `Cl(2,3) P` onto the spin-flipped ideal; right multiplication by
//! `sigma_1` is the canonical isomorphism back, and is applied for `j = 3`
//! so all three axis choices act on the same spinor coordinates. With that
//! convention `C_j P T_j = CPT = e5 .` holds exactly, with no leftover
//! phase, for every `j`.

use crate::algebra::Multivector;
use crate::bilinear::{BilinearValue, DiracAdjoint};
use crate::dirac::HBar;
use crate::em::{dirac_apply, EmPotential};
use crate::field::FieldExpr;
use crate::spinor::{act, embed, project, Spinor};
use crate::{Error, Result};

fn check_axis(j: usize) -> Result<()> {
    if (1..=3).contains(&j) {
        Ok(())
    } else {
        Err(Error::InvalidAxis(j))
    }
}

/// Map `X P` back to the reference ideal after a `K_3` swap.
fn fix_ideal(m: Multivector, j: usize) -> Multivector {
    if j == 3 {
        m.gp(&Multivector::sigma(1))
    } else {
        m
    }
}

/// Parity: `psi -> e0 psi`, flipping the parity-odd pair.
pub fn apply_parity(psi: &Spinor) -> Spinor {
    act(&Multivector::vector(0).unwrap(), psi)
}

/// Time reversal about axis `j`: `psi -> sigma_j K_j(psi)`.
pub fn apply_time_reversal(psi: &Spinor, j: usize) -> Result<Spinor> {
    check_axis(j)?;
    let swapped = embed(psi).k_conj(j as u8)?;
    let raw = Multivector::sigma(j).gp(&swapped);
    project(&fix_ideal(raw, j))
}

/// Charge conjugation about axis `j`: both forms `K_j(e^j psi)` and
/// `e05 sigma_j K_j(psi)` are evaluated and must agree.
pub fn apply_charge_conj(psi: &Spinor, j: usize) -> Result<Spinor> {
    check_axis(j)?;
    let m = embed(psi);
    let form_a = Multivector::vector(j as u8).unwrap().gp(&m).k_conj(j as u8)?;
    let e05 = Multivector::basis_product(&[0, 5]).unwrap();
    let form_b = e05.gp(&Multivector::sigma(j)).gp(&m.k_conj(j as u8)?);
    let residual = form_a.max_abs_diff(&form_b);
    if residual > 1e-12 * m.max_abs().max(1.0) {
        return Err(Error::ChargeConjMismatch { residual });
    }
    project(&fix_ideal(form_a, j))
}

/// CPT: `psi -> e5 psi`, swapping the parity sectors.
pub fn apply_cpt(psi: &Spinor) -> Spinor {
    act(&Multivector::vector(5).unwrap(), psi)
}

/// Field-level charge conjugation `psi(x) -> K_j(e^j psi(x))`; the swap also
/// reverses every plane-wave phase.
pub fn charge_conj_field(psi: &FieldExpr, j: usize) -> Result<FieldExpr> {
    check_axis(j)?;
    let moved = psi.mul_mv_left(&Multivector::vector(j as u8).unwrap()).k_conj(j as u8)?;
    Ok(if j == 3 { moved.mul_mv_right(&Multivector::sigma(1)) } else { moved })
}

/// Momentum-space Lagrangian density `psi-bar (p - m) psi`.
pub fn lagrangian(psi: &Spinor, p_slash: &Multivector, m: f64) -> BilinearValue {
    let op = *p_slash - Multivector::scalar(m);
    DiracAdjoint::new(psi).pair(&op, psi)
}

/// The same density written through the CPT-reflected operator,
/// `psi-bar e5 (-p - m) e5 psi`; equals [`lagrangian`] identically.
pub fn lagrangian_cpt(psi: &Spinor, p_slash: &Multivector, m: f64) -> BilinearValue {
    let e5 = Multivector::vector(5).unwrap();
    let op = e5.gp(&(-*p_slash - Multivector::scalar(m))).gp(&e5);
    DiracAdjoint::new(psi).pair(&op, psi)
}

/// Lagrangian density after transforming the field and the whole equation
/// one-sidedly by a Lorentz element `S`; equals [`lagrangian`] identically.
pub fn lagrangian_lorentz(psi: &Spinor, p_slash: &Multivector, m: f64, s: &Multivector) -> BilinearValue {
    let moved = act(s, psi);
    let op = s.gp(&(*p_slash - Multivector::scalar(m)));
    DiracAdjoint::new(&moved).pair(&op, psi)
}

/// Position-space Lagrangian density field `psi-bar (P - m) psi` (raw corner
/// values; rescale by 4 for component normalization).
pub fn lagrangian_field(pot: &EmPotential, psi: &FieldExpr, m: f64, hbar: HBar) -> FieldExpr {
    let applied = dirac_apply(pot, psi, hbar).sub(&psi.scale(m));
    psi.hermite().mul_mv_right(&Multivector::vector(0).unwrap()).mul(&applied)
}
