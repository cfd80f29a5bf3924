//! The Dirac spinor as an element of the minimal left ideal `Cl(2,3) P`.
//!
//! The reference idempotent is `P = (1 + e0)(1 + sigma_3)/4`. Left
//! multiplication by `e0` and `sigma_3` both absorb into `P`, so the ideal is
//! 8-real-dimensional and carries four complex-like components
//! `(phi_u, phi_d, chi_u, chi_d)` on the carrier basis
//! `{1, sigma_1, e5, x_1}` with scalars in `span{1, I}`:
//!
//! ```text
//! psi = [phi_u + sigma_1 phi_d + e5 chi_u + x_1 chi_d] P
//! ```
//!
//! The carriers happen to hit disjoint sets of four blades each, so the 32
//! blades split evenly over the 8 real coordinates and projection onto the
//! ideal is a plain (rescaled) coefficient dot product.
//!
//! Left multiplication by any basis blade maps the ideal to itself and is
//! tabulated once as a signed 8x8 permutation matrix; `act` extends the
//! table linearly to arbitrary multivectors.

use std::fmt;
use std::sync::LazyLock;

use crate::algebra::{Blade, Multivector, DIM};
use crate::{Error, Result};

/// A complex-like pair `re + im * I` with `I` the unit pseudoscalar.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct Cx {
    pub re: f64,
    pub im: f64,
}

impl Cx {
    pub const ZERO: Cx = Cx { re: 0.0, im: 0.0 };
    pub const ONE: Cx = Cx { re: 1.0, im: 0.0 };

    pub fn new(re: f64, im: f64) -> Cx {
        Cx { re, im }
    }

    pub fn conj(self) -> Cx {
        Cx { re: self.re, im: -self.im }
    }

    /// Multiplication by the pseudoscalar: `I (a + b I) = -b + a I`.
    pub fn times_i(self) -> Cx {
        Cx { re: -self.im, im: self.re }
    }

    pub fn scale(self, s: f64) -> Cx {
        Cx { re: self.re * s, im: self.im * s }
    }

    pub fn abs2(self) -> f64 {
        self.re * self.re + self.im * self.im
    }

    pub fn max_abs_diff(self, rhs: Cx) -> f64 {
        (self.re - rhs.re).abs().max((self.im - rhs.im).abs())
    }
}

impl std::ops::Add for Cx {
    type Output = Cx;
    fn add(self, rhs: Cx) -> Cx {
        Cx { re: self.re + rhs.re, im: self.im + rhs.im }
    }
}

impl std::ops::Mul for Cx {
    type Output = Cx;
    fn mul(self, rhs: Cx) -> Cx {
        Cx {
            re: self.re * rhs.re - self.im * rhs.im,
            im: self.re * rhs.im + self.im * rhs.re,
        }
    }
}

impl std::ops::Sub for Cx {
    type Output = Cx;
    fn sub(self, rhs: Cx) -> Cx {
        Cx { re: self.re - rhs.re, im: self.im - rhs.im }
    }
}

impl std::ops::Neg for Cx {
    type Output = Cx;
    fn neg(self) -> Cx {
        Cx { re: -self.re, im: -self.im }
    }
}

/// Dirac spinor coordinates on the ideal: parity-even pair `(phi_u, phi_d)`
/// and parity-odd pair `(chi_u, chi_d)`, each a probability amplitude.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct Spinor {
    pub phi_u: Cx,
    pub phi_d: Cx,
    pub chi_u: Cx,
    pub chi_d: Cx,
}

impl Spinor {
    pub const ZERO: Spinor = Spinor {
        phi_u: Cx::ZERO,
        phi_d: Cx::ZERO,
        chi_u: Cx::ZERO,
        chi_d: Cx::ZERO,
    };

    pub fn new(phi_u: Cx, phi_d: Cx, chi_u: Cx, chi_d: Cx) -> Spinor {
        Spinor { phi_u, phi_d, chi_u, chi_d }
    }

    /// Spinor with real components.
    pub fn from_reals(phi_u: f64, phi_d: f64, chi_u: f64, chi_d: f64) -> Spinor {
        Spinor::new(Cx::new(phi_u, 0.0), Cx::new(phi_d, 0.0), Cx::new(chi_u, 0.0), Cx::new(chi_d, 0.0))
    }

    pub fn slots(&self) -> [Cx; 4] {
        [self.phi_u, self.phi_d, self.chi_u, self.chi_d]
    }

    pub fn to_array(&self) -> [f64; 8] {
        [
            self.phi_u.re, self.phi_u.im, self.phi_d.re, self.phi_d.im,
            self.chi_u.re, self.chi_u.im, self.chi_d.re, self.chi_d.im,
        ]
    }

    pub fn from_array(a: [f64; 8]) -> Spinor {
        Spinor::new(
            Cx::new(a[0], a[1]),
            Cx::new(a[2], a[3]),
            Cx::new(a[4], a[5]),
            Cx::new(a[6], a[7]),
        )
    }

    pub fn scale(&self, s: f64) -> Spinor {
        Spinor::from_array(self.to_array().map(|x| x * s))
    }

    /// Multiply every slot by a complex scalar.
    pub fn scale_cx(&self, z: Cx) -> Spinor {
        Spinor::new(z * self.phi_u, z * self.phi_d, z * self.chi_u, z * self.chi_d)
    }

    /// Plain Euclidean norm of the 8 coordinates.
    pub fn norm(&self) -> f64 {
        self.to_array().iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn max_abs_diff(&self, rhs: &Spinor) -> f64 {
        let a = self.to_array();
        let b = rhs.to_array();
        (0..8).fold(0.0f64, |m, i| m.max((a[i] - b[i]).abs()))
    }
}

impl std::ops::Add for Spinor {
    type Output = Spinor;
    fn add(self, rhs: Spinor) -> Spinor {
        let a = self.to_array();
        let b = rhs.to_array();
        Spinor::from_array(std::array::from_fn(|i| a[i] + b[i]))
    }
}

impl std::ops::Sub for Spinor {
    type Output = Spinor;
    fn sub(self, rhs: Spinor) -> Spinor {
        let a = self.to_array();
        let b = rhs.to_array();
        Spinor::from_array(std::array::from_fn(|i| a[i] - b[i]))
    }
}

impl std::ops::Neg for Spinor {
    type Output = Spinor;
    fn neg(self) -> Spinor {
        Spinor::from_array(self.to_array().map(|x| -x))
    }
}

impl fmt::Display for Spinor {
    /// Literal format `(re,im);(re,im);(re,im);(re,im)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.slots();
        for (i, c) in s.iter().enumerate() {
            if i > 0 {
                write!(f, ";")?;
            }
            write!(f, "({:?},{:?})", c.re, c.im)?;
        }
        Ok(())
    }
}

/// Parse the spinor literal `(re,im);(re,im);(re,im);(re,im)`.
pub fn parse_spinor(s: &str) -> Result<Spinor> {
    let err = |what: &str, pos: usize| Error::Parse { what: what.to_string(), pos };
    let mut slots = [Cx::ZERO; 4];
    let mut offset = 0usize;
    let parts: Vec<&str> = s.split(';').collect();
    if parts.len() != 4 {
        return Err(err(&format!("expected 4 ';'-separated pairs, found {}", parts.len()), 0));
    }
    for (i, part) in parts.iter().enumerate() {
        let t = part.trim();
        let base = offset + (part.len() - part.trim_start().len());
        let inner = t
            .strip_prefix('(')
            .and_then(|x| x.strip_suffix(')'))
            .ok_or_else(|| err("expected (re,im)", base))?;
        let mut nums = inner.split(',');
        let re_s = nums.next().ok_or_else(|| err("missing real part", base + 1))?;
        let im_s = nums.next().ok_or_else(|| err("missing imaginary part", base + 1 + re_s.len()))?;
        if nums.next().is_some() {
            return Err(err("too many components in pair", base));
        }
        let re: f64 = re_s.trim().parse().map_err(|_| err(&format!("bad number {re_s:?}"), base + 1))?;
        let im: f64 = im_s
            .trim()
            .parse()
            .map_err(|_| err(&format!("bad number {im_s:?}"), base + 2 + re_s.len()))?;
        slots[i] = Cx::new(re, im);
        offset += part.len() + 1;
    }
    Ok(Spinor::new(slots[0], slots[1], slots[2], slots[3]))
}

/// The reference idempotent `P = (1 + e0)(1 + sigma_3)/4`.
///
/// `P^2 = P`, `e0 P = P`, `sigma_3 P = P`, and its scalar part is 1/4.
pub fn idempotent() -> Multivector {
    let one = Multivector::scalar(1.0);
    let e0 = Multivector::vector(0).unwrap();
    let s3 = Multivector::sigma(3);
    (one + e0).gp(&(one + s3)) * 0.25
}

struct IdealBasis {
    /// Carrier multivectors in coordinate order:
    /// `{1, I, sigma_1, I sigma_1, e5, I e5, x_1, I x_1} * P`.
    carriers: [Multivector; 8],
}

static IDEAL: LazyLock<IdealBasis> = LazyLock::new(|| {
    let p = idempotent();
    let i = Multivector::pseudoscalar();
    let units = [
        Multivector::scalar(1.0),
        i,
        Multivector::sigma(1),
        i.gp(&Multivector::sigma(1)),
        Multivector::vector(5).unwrap(),
        i.gp(&Multivector::vector(5).unwrap()),
        Multivector::polar(1),
        i.gp(&Multivector::polar(1)),
    ];
    let carriers = units.map(|u| u.gp(&p));
    // Each carrier occupies its own four blades with coefficients +-1/4, so
    // the eight together cover all 32 blades exactly once. Everything below
    // (projection as a dot product, integer action-table entries) rests on
    // this, so check it here.
    let mut seen = [false; DIM];
    for c in &carriers {
        let mut count = 0;
        for (b, x) in c.terms() {
            assert!(!seen[b.mask() as usize], "carrier blades overlap at {}", b.name());
            assert!((x.abs() - 0.25).abs() < 1e-15, "carrier coefficient {x} not +-1/4");
            seen[b.mask() as usize] = true;
            count += 1;
        }
        assert_eq!(count, 4);
    }
    assert!(seen.iter().all(|&s| s));
    IdealBasis { carriers }
});

/// Embed spinor coordinates as the ideal element
/// `[phi_u + sigma_1 phi_d + e5 chi_u + x_1 chi_d] P`.
pub fn embed(psi: &Spinor) -> Multivector {
    let basis = &*IDEAL;
    let a = psi.to_array();
    let mut m = Multivector::ZERO;
    for (i, c) in basis.carriers.iter().enumerate() {
        m = m + *c * a[i];
    }
    m
}

/// Coordinates of an ideal element; errors with the distance to the ideal if
/// `m` does not lie in `Cl(2,3) P`.
pub fn project(m: &Multivector) -> Result<Spinor> {
    let basis = &*IDEAL;
    // carriers are orthogonal with squared coefficient norm 1/4
    let coords: [f64; 8] = std::array::from_fn(|i| 4.0 * basis.carriers[i].coeff_dot(m));
    let psi = Spinor::from_array(coords);
    let recon = embed(&psi);
    let distance = recon.max_abs_diff(m);
    if distance > 1e-10 * m.max_abs().max(1.0) {
        return Err(Error::OutsideIdeal { distance });
    }
    Ok(psi)
}

/// 8x8 signed permutation matrices for left multiplication by each basis
/// blade, in spinor coordinates.
pub struct ActionTable {
    mats: [[[f64; 8]; 8]; DIM],
}

static TABLE: LazyLock<ActionTable> = LazyLock::new(|| {
    let basis = &*IDEAL;
    let mut mats = [[[0.0f64; 8]; 8]; DIM];
    for blade in Blade::all() {
        let bm = Multivector::basis(blade);
        for (col, carrier) in basis.carriers.iter().enumerate() {
            let image = bm.gp(carrier);
            let coords: [f64; 8] = std::array::from_fn(|i| 4.0 * basis.carriers[i].coeff_dot(&image));
            // reduction must be exact: blade * carrier * P stays in the ideal
            let mut recon = Multivector::ZERO;
            for (i, c) in basis.carriers.iter().enumerate() {
                recon = recon + *c * coords[i];
            }
            let residual = recon.max_abs_diff(&image);
            assert!(
                residual < 1e-12,
                "blade {} does not act within the ideal (residual {residual})",
                blade.name()
            );
            for row in 0..8 {
                let x = coords[row];
                assert!(
                    x == 0.0 || (x.abs() - 1.0).abs() < 1e-12,
                    "action entry {x} for blade {} is not in {{0, +-1}}",
                    blade.name()
                );
                mats[blade.mask() as usize][row][col] = x.round();
            }
        }
    }
    ActionTable { mats }
});

/// The memoized action table.
pub fn action_table() -> &'static ActionTable {
    &TABLE
}

impl ActionTable {
    /// The 8x8 matrix for one basis blade.
    pub fn blade_matrix(&self, b: Blade) -> &[[f64; 8]; 8] {
        &self.mats[b.mask() as usize]
    }
}

/// Left action of an arbitrary multivector on a spinor.
pub fn act(a: &Multivector, psi: &Spinor) -> Spinor {
    let table = &*TABLE;
    let v = psi.to_array();
    let mut out = [0.0f64; 8];
    for (b, coeff) in a.terms() {
        let mat = &table.mats[b.mask() as usize];
        for row in 0..8 {
            let mut acc = 0.0;
            for col in 0..8 {
                let e = mat[row][col];
                if e != 0.0 {
                    acc += e * v[col];
                }
            }
            out[row] += coeff * acc;
        }
    }
    Spinor::from_array(out)
}

/// Split into parity-even and parity-odd parts:
/// `phi = (1 + e0) psi / 2`, `chi = (1 - e0) psi / 2`.
pub fn parity_split(psi: &Spinor) -> (Spinor, Spinor) {
    let e0 = Multivector::vector(0).unwrap();
    let p = act(&e0, psi);
    (( *psi + p).scale(0.5), (*psi - p).scale(0.5))
}

/// Split a parity-even spinor into sigma_3 eigenparts:
/// `up = (1 + sigma_3) phi / 2` (eigenvalue +1),
/// `down = (1 - sigma_3) phi / 2` (eigenvalue -1).
pub fn spin_split(phi: &Spinor) -> (Spinor, Spinor) {
    let s3 = Multivector::sigma(3);
    let p = act(&s3, phi);
    ((*phi + p).scale(0.5), (*phi - p).scale(0.5))
}

/// Spin-position decoupled parity-even state `rho R_theta`, i.e.
/// `phi_u = rho cos(theta/2)`, `phi_d = rho sin(theta/2)`.
pub fn sp_decoupled(rho: f64, theta: f64) -> Spinor {
    Spinor::from_reals(rho * (theta / 2.0).cos(), rho * (theta / 2.0).sin(), 0.0, 0.0)
}
