//! Sparse multivectors and the geometric product.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use crate::blade::Blade;
use crate::error::Error;

/// Hard cap on the exponential series before reporting divergence.
const EXP_MAX_TERMS: usize = 128;

/// A sparse multivector of Cl(2,6): map from basis blade to coefficient.
///
/// Terms with coefficient exactly 0 are never stored, so `is_zero` and
/// equality are structural. No epsilon pruning happens inside arithmetic;
/// comparisons apply tolerances instead.
#[derive(Clone, PartialEq, Debug, Default)]
pub struct Multivector {
    terms: BTreeMap<Blade, f64>,
}

impl Multivector {
    pub fn zero() -> Self {
        Multivector::default()
    }

    pub fn scalar(c: f64) -> Self {
        Multivector::term(Blade::SCALAR, c)
    }

    /// Single-term multivector `coeff * blade`.
    pub fn term(blade: Blade, coeff: f64) -> Self {
        let mut terms = BTreeMap::new();
        if coeff != 0.0 {
            terms.insert(blade, coeff);
        }
        Multivector { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, blade: Blade) -> f64 {
        self.terms.get(&blade).copied().unwrap_or(0.0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (Blade, f64)> + '_ {
        self.terms.iter().map(|(b, c)| (*b, *c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn accumulate(map: &mut BTreeMap<Blade, f64>, blade: Blade, coeff: f64) {
        let entry = map.entry(blade).or_insert(0.0);
        *entry += coeff;
        if *entry == 0.0 {
            map.remove(&blade);
        }
    }

    pub fn geometric_product(&self, other: &Multivector) -> Multivector {
        let mut out = BTreeMap::new();
        for (&ba, &ca) in &self.terms {
            for (&bb, &cb) in &other.terms {
                let (blade, sign) = ba.product(bb);
                Self::accumulate(&mut out, blade, sign * ca * cb);
            }
        }
        Multivector { terms: out }
    }

    /// Terms of grade `k`, without range validation.
    pub fn grade_part(&self, k: u8) -> Multivector {
        Multivector {
            terms: self
                .terms
                .iter()
                .filter(|(b, _)| b.grade() == k)
                .map(|(b, c)| (*b, *c))
                .collect(),
        }
    }

    /// Grade projection with the 0..=8 range check.
    pub fn grade_projection(&self, k: u8) -> Result<Multivector, Error> {
        if k > 8 {
            return Err(Error::GradeOutOfRange(k));
        }
        Ok(self.grade_part(k))
    }

    /// Scalar part, the grade-0 coefficient.
    pub fn scalar_part(&self) -> f64 {
        self.coeff(Blade::SCALAR)
    }

    /// Reversion: each grade-k blade picks up (-1)^(k(k-1)/2).
    pub fn reverse(&self) -> Multivector {
        Multivector {
            terms: self
                .terms
                .iter()
                .map(|(b, c)| (*b, c * b.reverse_sign()))
                .collect(),
        }
    }

    /// Exponential by power series.
    ///
    /// A nilpotent argument (`a * a == 0` structurally) returns `1 + a`
    /// exactly; otherwise terms accumulate until the largest coefficient of
    /// the last term drops below `tol`.
    pub fn exp_series(&self, tol: f64) -> Result<Multivector, Error> {
        let square = self.geometric_product(self);
        if square.is_zero() {
            return Ok(&Multivector::scalar(1.0) + self);
        }
        let mut total = Multivector::scalar(1.0);
        let mut term = Multivector::scalar(1.0);
        for k in 1..=EXP_MAX_TERMS {
            term = term.geometric_product(self).scaled(1.0 / k as f64);
            total = &total + &term;
            if term.max_abs_coeff() < tol {
                return Ok(total);
            }
        }
        Err(Error::ExpDivergence(EXP_MAX_TERMS))
    }

    pub fn scaled(&self, factor: f64) -> Multivector {
        if factor == 0.0 {
            return Multivector::zero();
        }
        Multivector {
            terms: self.terms.iter().map(|(b, c)| (*b, c * factor)).collect(),
        }
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.terms.values().fold(0.0, |m, c| m.max(c.abs()))
    }

    /// Largest coefficient-wise difference against `other`.
    pub fn max_abs_diff(&self, other: &Multivector) -> f64 {
        let mut worst = 0.0f64;
        for (blade, coeff) in self.terms() {
            worst = worst.max((coeff - other.coeff(blade)).abs());
        }
        for (blade, coeff) in other.terms() {
            if !self.terms.contains_key(&blade) {
                worst = worst.max(coeff.abs());
            }
        }
        worst
    }
}

impl From<Blade> for Multivector {
    fn from(blade: Blade) -> Self {
        Multivector::term(blade, 1.0)
    }
}

impl Add for &Multivector {
    type Output = Multivector;

    fn add(self, rhs: &Multivector) -> Multivector {
        let mut terms = self.terms.clone();
        for (&blade, &coeff) in &rhs.terms {
            Multivector::accumulate(&mut terms, blade, coeff);
        }
        Multivector { terms }
    }
}

impl Sub for &Multivector {
    type Output = Multivector;

    fn sub(self, rhs: &Multivector) -> Multivector {
        let mut terms = self.terms.clone();
        for (&blade, &coeff) in &rhs.terms {
            Multivector::accumulate(&mut terms, blade, -coeff);
        }
        Multivector { terms }
    }
}

impl Neg for &Multivector {
    type Output = Multivector;

    fn neg(self) -> Multivector {
        self.scaled(-1.0)
    }
}

impl Mul for &Multivector {
    type Output = Multivector;

    fn mul(self, rhs: &Multivector) -> Multivector {
        self.geometric_product(rhs)
    }
}

impl Mul<f64> for &Multivector {
    type Output = Multivector;

    fn mul(self, rhs: f64) -> Multivector {
        self.scaled(rhs)
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Multivector {
            type Output = Multivector;
            fn $method(self, rhs: Multivector) -> Multivector {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Multivector> for Multivector {
            type Output = Multivector;
            fn $method(self, rhs: &Multivector) -> Multivector {
                (&self).$method(rhs)
            }
        }
        impl $trait<Multivector> for &Multivector {
            type Output = Multivector;
            fn $method(self, rhs: Multivector) -> Multivector {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for Multivector {
    type Output = Multivector;

    fn neg(self) -> Multivector {
        self.scaled(-1.0)
    }
}

impl Mul<f64> for Multivector {
    type Output = Multivector;

    fn mul(self, rhs: f64) -> Multivector {
        self.scaled(rhs)
    }
}
