//! Exact symbolic fields on spacetime: finite sums of
//! `polynomial(t, x1, x2, x3) * exp(I w.x) * constant multivector`.
//!
//! Partial derivatives follow the power and phase rules exactly, so operator
//! identities checked on these fields hold to machine precision (and exactly,
//! for dyadic-rational inputs) with no discretization error. The pseudoscalar
//! `I` supplies the complex unit in the phase factor; a wave covector `w`
//! means the scalar field `exp(I (w_0 t + w_1 x1 + w_2 x2 + w_3 x3))`.

use std::collections::BTreeMap;

use crate::algebra::Multivector;

/// Monomial exponents for the coordinates `(t, x1, x2, x3)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Monomial(pub [u8; 4]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; 4]);

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&p| p as u32).sum()
    }

    fn eval(&self, x: [f64; 4]) -> f64 {
        x.iter().zip(self.0.iter()).map(|(v, &p)| v.powi(p as i32)).product()
    }

    fn times(&self, rhs: &Monomial) -> Monomial {
        Monomial(std::array::from_fn(|i| self.0[i] + rhs.0[i]))
    }
}

fn wave_key(w: [f64; 4]) -> [u64; 4] {
    // normalize -0.0 so equal phases always merge
    std::array::from_fn(|i| (if w[i] == 0.0 { 0.0f64 } else { w[i] }).to_bits())
}

#[derive(Clone, Debug)]
struct Term {
    wave: [f64; 4],
    mono: Monomial,
    value: Multivector,
}

/// A field: canonical sum of `(phase, monomial, multivector)` terms.
#[derive(Clone, Debug, Default)]
pub struct FieldExpr {
    terms: Vec<Term>,
}

impl FieldExpr {
    pub fn zero() -> FieldExpr {
        FieldExpr { terms: Vec::new() }
    }

    /// Position-independent field.
    pub fn constant(value: Multivector) -> FieldExpr {
        FieldExpr { terms: vec![Term { wave: [0.0; 4], mono: Monomial::ONE, value }] }.canonical()
    }

    pub fn scalar(x: f64) -> FieldExpr {
        Self::constant(Multivector::scalar(x))
    }

    /// The coordinate function `x^mu` as a scalar field.
    pub fn coordinate(mu: usize) -> FieldExpr {
        assert!(mu < 4, "coordinate index out of range: {mu}");
        let mut pow = [0u8; 4];
        pow[mu] = 1;
        FieldExpr {
            terms: vec![Term { wave: [0.0; 4], mono: Monomial(pow), value: Multivector::scalar(1.0) }],
        }
    }

    /// A single monomial term `coeff * t^a x1^b x2^c x3^d`.
    pub fn monomial(coeff: f64, pow: [u8; 4]) -> FieldExpr {
        FieldExpr {
            terms: vec![Term { wave: [0.0; 4], mono: Monomial(pow), value: Multivector::scalar(coeff) }],
        }
        .canonical()
    }

    /// Unit plane-wave phase `exp(I w.x)`.
    pub fn plane_phase(w: [f64; 4]) -> FieldExpr {
        FieldExpr {
            terms: vec![Term { wave: w, mono: Monomial::ONE, value: Multivector::scalar(1.0) }],
        }
    }

    fn canonical(mut self) -> FieldExpr {
        let mut map: BTreeMap<([u64; 4], Monomial), Multivector> = BTreeMap::new();
        for t in self.terms.drain(..) {
            let entry = map.entry((wave_key(t.wave), t.mono)).or_insert(Multivector::ZERO);
            *entry = *entry + t.value;
        }
        let terms = map
            .into_iter()
            .filter(|(_, v)| v.max_abs() != 0.0)
            .map(|((wk, mono), value)| Term {
                wave: std::array::from_fn(|i| f64::from_bits(wk[i])),
                mono,
                value,
            })
            .collect();
        FieldExpr { terms }
    }

    pub fn add(&self, rhs: &FieldExpr) -> FieldExpr {
        let mut terms = self.terms.clone();
        terms.extend(rhs.terms.iter().cloned());
        FieldExpr { terms }.canonical()
    }

    pub fn sub(&self, rhs: &FieldExpr) -> FieldExpr {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> FieldExpr {
        FieldExpr {
            terms: self.terms.iter().map(|t| Term { value: -t.value, ..t.clone() }).collect(),
        }
    }

    pub fn scale(&self, s: f64) -> FieldExpr {
        FieldExpr {
            terms: self.terms.iter().map(|t| Term { value: t.value * s, ..t.clone() }).collect(),
        }
        .canonical()
    }

    /// Left multiplication of every value by a constant multivector.
    pub fn mul_mv_left(&self, m: &Multivector) -> FieldExpr {
        FieldExpr {
            terms: self.terms.iter().map(|t| Term { value: m.gp(&t.value), ..t.clone() }).collect(),
        }
        .canonical()
    }

    /// Right multiplication of every value by a constant multivector.
    pub fn mul_mv_right(&self, m: &Multivector) -> FieldExpr {
        FieldExpr {
            terms: self.terms.iter().map(|t| Term { value: t.value.gp(m), ..t.clone() }).collect(),
        }
        .canonical()
    }

    /// Pointwise geometric product of two fields: phases add, polynomials
    /// multiply, values take the geometric product in order.
    pub fn mul(&self, rhs: &FieldExpr) -> FieldExpr {
        let mut terms = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for a in &self.terms {
            for b in &rhs.terms {
                terms.push(Term {
                    wave: std::array::from_fn(|i| a.wave[i] + b.wave[i]),
                    mono: a.mono.times(&b.mono),
                    value: a.value.gp(&b.value),
                });
            }
        }
        FieldExpr { terms }.canonical()
    }

    /// Exact partial derivative with respect to `x^mu`.
    pub fn partial(&self, mu: usize) -> FieldExpr {
        assert!(mu < 4, "coordinate index out of range: {mu}");
        let i_mv = Multivector::pseudoscalar();
        let mut terms = Vec::new();
        for t in &self.terms {
            // power rule
            if t.mono.0[mu] > 0 {
                let mut pow = t.mono.0;
                pow[mu] -= 1;
                terms.push(Term {
                    wave: t.wave,
                    mono: Monomial(pow),
                    value: t.value * (t.mono.0[mu] as f64),
                });
            }
            // phase rule: d/dx^mu exp(I w.x) = I w_mu exp(I w.x)
            if t.wave[mu] != 0.0 {
                terms.push(Term {
                    wave: t.wave,
                    mono: t.mono,
                    value: i_mv.gp(&t.value) * t.wave[mu],
                });
            }
        }
        FieldExpr { terms }.canonical()
    }

    /// Pointwise Hermite conjugate: values conjugated, phases reversed.
    pub fn hermite(&self) -> FieldExpr {
        FieldExpr {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    wave: std::array::from_fn(|i| -t.wave[i]),
                    mono: t.mono,
                    value: t.value.hermite(),
                })
                .collect(),
        }
        .canonical()
    }

    /// Pointwise sign swap of one generator: flips every value blade
    /// containing `label` and reverses the phases (the pseudoscalar contains
    /// every generator).
    pub fn k_conj(&self, label: u8) -> crate::Result<FieldExpr> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            terms.push(Term {
                wave: std::array::from_fn(|i| -t.wave[i]),
                mono: t.mono,
                value: t.value.k_conj(label)?,
            });
        }
        Ok(FieldExpr { terms }.canonical())
    }

    /// Evaluate at an event.
    pub fn eval(&self, x: [f64; 4]) -> Multivector {
        let mut acc = Multivector::ZERO;
        for t in &self.terms {
            let theta: f64 = (0..4).map(|i| t.wave[i] * x[i]).sum();
            let phase = Multivector::complex(theta.cos(), theta.sin());
            acc = acc + phase.gp(&t.value) * t.mono.eval(x);
        }
        acc
    }

    /// Largest coefficient magnitude over all terms.
    pub fn max_coeff_abs(&self) -> f64 {
        self.terms.iter().fold(0.0f64, |m, t| m.max(t.value.max_abs()))
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        self.max_coeff_abs() <= tol
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Pointwise extraction of one blade coefficient as a scalar field.
    pub fn component(&self, blade: crate::algebra::Blade) -> FieldExpr {
        FieldExpr {
            terms: self
                .terms
                .iter()
                .filter(|t| t.value.coeff(blade) != 0.0)
                .map(|t| Term {
                    wave: t.wave,
                    mono: t.mono,
                    value: Multivector::scalar(t.value.coeff(blade)),
                })
                .collect(),
        }
        .canonical()
    }

    pub fn max_abs_diff(&self, rhs: &FieldExpr) -> f64 {
        self.sub(rhs).max_coeff_abs()
    }
}
