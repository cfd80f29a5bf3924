//! Blade-level arithmetic of the real Clifford algebra Cl(2,3).
//!
//! The algebra is generated by five orthonormal vectors labelled
//! `{0, 1, 2, 3, 5}` with diagonal metric `(+, -, -, -, +)`. Label 4 is
//! unused so that the fifth generator reads `e5` throughout. The 32 basis
//! blades are products of distinct generators in ascending label order.
//!
//! The geometric product of two basis blades is computed once by insertion
//! sorting the concatenated generator sequence (counting transpositions for
//! the sign) and contracting repeated generators with the metric, then
//! memoized into a 32x32 Cayley table.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::LazyLock;

use crate::{Error, Result};

/// Number of basis blades (2^5).
pub const DIM: usize = 32;

/// Generator labels in canonical ascending order. Bit `i` of a blade mask
/// corresponds to `LABELS[i]`.
pub const LABELS: [u8; 5] = [0, 1, 2, 3, 5];

/// Diagonal metric value of a single generator: `(+, -, -, -, +)`.
pub fn metric(label: u8) -> f64 {
    match label {
        0 | 5 => 1.0,
        1..=3 => -1.0,
        _ => panic!("invalid generator label {label}"),
    }
}

/// Spacetime metric `eta` restricted to labels 0..=3: `(+, -, -, -)`.
pub fn eta(mu: usize) -> f64 {
    assert!(mu < 4, "spacetime index out of range: {mu}");
    if mu == 0 {
        1.0
    } else {
        -1.0
    }
}

fn bit_of_label(label: u8) -> Result<u8> {
    match label {
        0..=3 => Ok(label),
        5 => Ok(4),
        _ => Err(Error::InvalidGenerator(label)),
    }
}

/// A basis blade: a 5-bit set of generator labels in ascending order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Blade(u8);

impl Blade {
    pub const SCALAR: Blade = Blade(0);
    /// The unit pseudoscalar blade `e01235`.
    pub const PSEUDO: Blade = Blade(0b11111);

    /// Blade from a raw 5-bit mask.
    pub fn from_mask(mask: u8) -> Option<Blade> {
        (mask < 32).then_some(Blade(mask))
    }

    /// Blade with the given distinct generator labels (any order).
    pub fn from_labels(labels: &[u8]) -> Result<Blade> {
        let mut mask = 0u8;
        for &l in labels {
            let bit = 1 << bit_of_label(l)?;
            if mask & bit != 0 {
                return Err(Error::InvalidGenerator(l));
            }
            mask |= bit;
        }
        Ok(Blade(mask))
    }

    pub fn mask(self) -> u8 {
        self.0
    }

    /// Number of generators in the blade.
    pub fn grade(self) -> u32 {
        self.0.count_ones()
    }

    pub fn contains(self, label: u8) -> bool {
        bit_of_label(label).map(|b| self.0 & (1 << b) != 0).unwrap_or(false)
    }

    /// Generator labels in ascending order.
    pub fn labels(self) -> impl Iterator<Item = u8> {
        (0..5u8).filter(move |i| self.0 & (1 << i) != 0).map(|i| LABELS[i as usize])
    }

    /// All 32 blades in mask order.
    pub fn all() -> impl Iterator<Item = Blade> {
        (0..DIM as u8).map(Blade)
    }

    /// Canonical name, e.g. `e015`; the scalar blade is `1`.
    pub fn name(self) -> String {
        if self.0 == 0 {
            return "1".to_string();
        }
        let mut s = String::from("e");
        for l in self.labels() {
            s.push(char::from_digit(l as u32, 10).unwrap());
        }
        s
    }
}

/// Product of two basis blades from first principles: concatenate the
/// generator sequences, insertion sort with transposition counting, and
/// contract adjacent equal generators with the metric.
fn blade_mul_sorted(a: Blade, b: Blade) -> (f64, Blade) {
    let mut seq: Vec<u8> = a.labels().chain(b.labels()).collect();
    let mut sign = 1.0;
    for i in 1..seq.len() {
        let mut j = i;
        while j > 0 && seq[j - 1] > seq[j] {
            seq.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    let mut out_mask = 0u8;
    let mut i = 0;
    while i < seq.len() {
        if i + 1 < seq.len() && seq[i] == seq[i + 1] {
            sign *= metric(seq[i]);
            i += 2;
        } else {
            out_mask |= 1 << bit_of_label(seq[i]).unwrap();
            i += 1;
        }
    }
    (sign, Blade(out_mask))
}

struct Cayley {
    sign: [[i8; DIM]; DIM],
    result: [[u8; DIM]; DIM],
}

static CAYLEY: LazyLock<Cayley> = LazyLock::new(|| {
    let mut sign = [[0i8; DIM]; DIM];
    let mut result = [[0u8; DIM]; DIM];
    for a in 0..DIM {
        for b in 0..DIM {
            let (s, out) = blade_mul_sorted(Blade(a as u8), Blade(b as u8));
            sign[a][b] = s as i8;
            result[a][b] = out.mask();
        }
    }
    Cayley { sign, result }
});

/// Signed product of two basis blades: `a b = sign * out`.
pub fn blade_mul(a: Blade, b: Blade) -> (f64, Blade) {
    let t = &*CAYLEY;
    let (i, j) = (a.mask() as usize, b.mask() as usize);
    (t.sign[i][j] as f64, Blade(t.result[i][j]))
}

/// A general element of Cl(2,3): 32 real coefficients indexed by blade mask.
#[derive(Clone, Copy, PartialEq)]
pub struct Multivector {
    c: [f64; DIM],
}

impl Multivector {
    pub const ZERO: Multivector = Multivector { c: [0.0; DIM] };

    pub fn zero() -> Multivector {
        Self::ZERO
    }

    pub fn scalar(x: f64) -> Multivector {
        let mut c = [0.0; DIM];
        c[0] = x;
        Multivector { c }
    }

    /// `a + b I` where `I` is the unit pseudoscalar.
    pub fn complex(a: f64, b: f64) -> Multivector {
        let mut c = [0.0; DIM];
        c[0] = a;
        c[Blade::PSEUDO.mask() as usize] = b;
        Multivector { c }
    }

    pub fn basis(b: Blade) -> Multivector {
        let mut c = [0.0; DIM];
        c[b.mask() as usize] = 1.0;
        Multivector { c }
    }

    /// Frame vector `e^label`.
    pub fn vector(label: u8) -> Result<Multivector> {
        Ok(Self::basis(Blade::from_labels(&[label])?))
    }

    /// Signed product of frame vectors in the given order, e.g.
    /// `basis_product(&[1, 0])` is `e1 e0 = -e01`.
    pub fn basis_product(labels: &[u8]) -> Result<Multivector> {
        let mut acc = Multivector::scalar(1.0);
        for &l in labels {
            acc = acc.gp(&Multivector::vector(l)?);
        }
        Ok(acc)
    }

    /// The unit pseudoscalar `I = e01235`; central, squares to -1.
    pub fn pseudoscalar() -> Multivector {
        Self::basis(Blade::PSEUDO)
    }

    /// Polar (boost-direction) vector `x_j = e^j e^0`, `j` in 1..=3.
    pub fn polar(j: usize) -> Multivector {
        assert!((1..=3).contains(&j), "polar axis out of range: {j}");
        Self::basis_product(&[j as u8, 0]).unwrap()
    }

    /// Axial spin vector `sigma_j = e^j e^0 e^5`, `j` in 1..=3.
    pub fn sigma(j: usize) -> Multivector {
        assert!((1..=3).contains(&j), "spin axis out of range: {j}");
        Self::basis_product(&[j as u8, 0, 5]).unwrap()
    }

    pub fn coeff(&self, b: Blade) -> f64 {
        self.c[b.mask() as usize]
    }

    pub fn set_coeff(&mut self, b: Blade, x: f64) {
        self.c[b.mask() as usize] = x;
    }

    /// Nonzero terms as (blade, coefficient) pairs in mask order.
    pub fn terms(&self) -> impl Iterator<Item = (Blade, f64)> + '_ {
        self.c
            .iter()
            .enumerate()
            .filter(|(_, &x)| x != 0.0)
            .map(|(i, &x)| (Blade(i as u8), x))
    }

    /// Geometric product.
    pub fn gp(&self, rhs: &Multivector) -> Multivector {
        let t = &*CAYLEY;
        let mut out = [0.0; DIM];
        for i in 0..DIM {
            let ai = self.c[i];
            if ai == 0.0 {
                continue;
            }
            for j in 0..DIM {
                let bj = rhs.c[j];
                if bj == 0.0 {
                    continue;
                }
                out[t.result[i][j] as usize] += t.sign[i][j] as f64 * ai * bj;
            }
        }
        Multivector { c: out }
    }

    /// Symmetric part `(ab + ba)/2`; the metric scalar product on vectors.
    pub fn sym(&self, rhs: &Multivector) -> Multivector {
        (self.gp(rhs) + rhs.gp(self)) * 0.5
    }

    /// Antisymmetric part `(ab - ba)/2`; the wedge product on vectors.
    pub fn antisym(&self, rhs: &Multivector) -> Multivector {
        (self.gp(rhs) - rhs.gp(self)) * 0.5
    }

    /// Commutator `ab - ba`.
    pub fn commutator(&self, rhs: &Multivector) -> Multivector {
        self.gp(rhs) - rhs.gp(self)
    }

    /// Keep only grade-`k` coefficients.
    pub fn grade_project(&self, k: u32) -> Multivector {
        let mut out = [0.0; DIM];
        for (i, slot) in out.iter_mut().enumerate() {
            if (i as u8).count_ones() == k {
                *slot = self.c[i];
            }
        }
        Multivector { c: out }
    }

    /// Coefficient of the empty blade.
    pub fn scalar_part(&self) -> f64 {
        self.c[0]
    }

    /// Coefficient of the pseudoscalar blade.
    pub fn pseudo_part(&self) -> f64 {
        self.c[Blade::PSEUDO.mask() as usize]
    }

    /// The pair (scalar, pseudoscalar) viewed as a complex number `a + b I`.
    pub fn complex_part(&self) -> (f64, f64) {
        (self.scalar_part(), self.pseudo_part())
    }

    /// Reversal: grade-k blades pick up `(-1)^(k(k-1)/2)`; anti-automorphism.
    pub fn reverse(&self) -> Multivector {
        let mut out = [0.0; DIM];
        for (i, slot) in out.iter_mut().enumerate() {
            let k = (i as u8).count_ones();
            let s = if (k * (k.saturating_sub(1)) / 2).is_multiple_of(2) { 1.0 } else { -1.0 };
            *slot = s * self.c[i];
        }
        Multivector { c: out }
    }

    /// Parity conjugation `e0 a e0`; automorphism and involution.
    pub fn parity_conj(&self) -> Multivector {
        let e0 = Multivector::vector(0).unwrap();
        e0.gp(self).gp(&e0)
    }

    /// Hermite conjugation: reversal, parity sandwich, and a factor -1 per
    /// `e5` in each blade; anti-automorphism and involution.
    pub fn hermite(&self) -> Multivector {
        let mut flipped = *self;
        for i in 0..DIM {
            if Blade(i as u8).contains(5) {
                flipped.c[i] = -flipped.c[i];
            }
        }
        flipped.reverse().parity_conj()
    }

    /// Sign swap of one generator: flips every blade containing `label`.
    pub fn k_conj(&self, label: u8) -> Result<Multivector> {
        let bit = bit_of_label(label)?;
        let mut out = *self;
        for i in 0..DIM {
            if i & (1 << bit) != 0 {
                out.c[i] = -out.c[i];
            }
        }
        Ok(out)
    }

    /// Euclidean 2-norm of the coefficient vector.
    pub fn coeff_norm(&self) -> f64 {
        self.c.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    /// Plain dot product of coefficient vectors.
    pub fn coeff_dot(&self, rhs: &Multivector) -> f64 {
        (0..DIM).map(|i| self.c[i] * rhs.c[i]).sum()
    }

    /// Largest coefficient magnitude.
    pub fn max_abs(&self) -> f64 {
        self.c.iter().fold(0.0f64, |m, x| m.max(x.abs()))
    }

    /// Largest coefficient difference against `rhs`.
    pub fn max_abs_diff(&self, rhs: &Multivector) -> f64 {
        (0..DIM).fold(0.0f64, |m, i| m.max((self.c[i] - rhs.c[i]).abs()))
    }

    pub fn is_zero_tol(&self, tol: f64) -> bool {
        self.max_abs() <= tol
    }

    /// Exponential by truncated power series. The term count adapts until
    /// the crude tail bound `(32 |a|)^n / n!` drops below 1e-15.
    pub fn exp(&self) -> Multivector {
        let bound = 32.0 * self.coeff_norm();
        let mut acc = Multivector::scalar(1.0);
        let mut term = Multivector::scalar(1.0);
        let mut tail = 1.0f64;
        for n in 1..400 {
            term = term.gp(self) * (1.0 / n as f64);
            acc = acc + term;
            tail *= bound / n as f64;
            if tail < 1e-15 && n > 1 {
                break;
            }
        }
        acc
    }
}

impl Add for Multivector {
    type Output = Multivector;
    fn add(self, rhs: Multivector) -> Multivector {
        let mut c = self.c;
        for (x, y) in c.iter_mut().zip(rhs.c.iter()) {
            *x += y;
        }
        Multivector { c }
    }
}

impl Sub for Multivector {
    type Output = Multivector;
    fn sub(self, rhs: Multivector) -> Multivector {
        let mut c = self.c;
        for (x, y) in c.iter_mut().zip(rhs.c.iter()) {
            *x -= y;
        }
        Multivector { c }
    }
}

impl Neg for Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        let mut c = self.c;
        for x in &mut c {
            *x = -*x;
        }
        Multivector { c }
    }
}

impl Mul<f64> for Multivector {
    type Output = Multivector;
    fn mul(self, s: f64) -> Multivector {
        let mut c = self.c;
        for x in &mut c {
            *x *= s;
        }
        Multivector { c }
    }
}

impl Mul for Multivector {
    type Output = Multivector;
    fn mul(self, rhs: Multivector) -> Multivector {
        self.gp(&rhs)
    }
}

impl fmt::Display for Multivector {
    /// Signed sum over blade names, labels ascending: `+1.0 e015 -2.0 e23`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for (b, x) in self.terms() {
            if any {
                write!(f, " ")?;
            }
            let sign = if x >= 0.0 { '+' } else { '-' };
            write!(f, "{}{:?}", sign, x.abs())?;
            if b != Blade::SCALAR {
                write!(f, " {}", b.name())?;
            }
            any = true;
        }
        if !any {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Multivector({self})")
    }
}

/// Parse the `Display` format back into a multivector.
///
/// Grammar: terms separated by whitespace, each `{+|-}COEFF [eLABELS]` with
/// ascending digit labels; `0` alone is the zero multivector.
pub fn parse_multivector(s: &str) -> Result<Multivector> {
    let trimmed = s.trim();
    if trimmed == "0" {
        return Ok(Multivector::ZERO);
    }
    let mut out = Multivector::ZERO;
    let mut pending: Option<f64> = None;
    let flush = |out: &mut Multivector, coeff: f64, blade: Blade| {
        out.set_coeff(blade, out.coeff(blade) + coeff);
    };
    for tok in trimmed.split_whitespace() {
        if let Some(rest) = tok.strip_prefix('e') {
            if rest.chars().all(|c| c.is_ascii_digit()) && !rest.is_empty() {
                let coeff = pending.take().ok_or_else(|| Error::Parse {
                    what: format!("blade {tok} with no preceding coefficient"),
                    pos: 0,
                })?;
                let labels: Vec<u8> = rest.bytes().map(|b| b - b'0').collect();
                flush(&mut out, coeff, Blade::from_labels(&labels)?);
                continue;
            }
        }
        if let Some(c) = pending.take() {
            flush(&mut out, c, Blade::SCALAR);
        }
        let v: f64 = tok.parse().map_err(|_| Error::Parse {
            what: format!("expected coefficient, found {tok:?}"),
            pos: 0,
        })?;
        pending = Some(v);
    }
    if let Some(c) = pending {
        flush(&mut out, c, Blade::SCALAR);
    }
    Ok(out)
}
