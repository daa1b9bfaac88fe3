//! Exact field elements `p + q*w` of `Q` or `Q(sqrt(-D))` with rational
//! coordinates, and the rigorous exponential of such an element.

use crate::complex::Complex;
use crate::field::{AlphaPoint, Basis, QuadInt};
use crate::real::Real;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

mod serde_ratio {
    use num_rational::BigRational;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BigRational, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// An exact element of the field, in the coordinates of the ring basis.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldElem {
    #[serde(with = "serde_ratio")]
    pub p: BigRational,
    #[serde(with = "serde_ratio")]
    pub q: BigRational,
    pub basis: Basis,
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q.is_zero() {
            write!(f, "{}", self.p)
        } else {
            write!(f, "{} + {}w", self.p, self.q)
        }
    }
}

impl FieldElem {
    pub fn new(p: BigRational, q: BigRational, basis: Basis) -> Self {
        if basis == Basis::Rational {
            assert!(q.is_zero());
        }
        FieldElem { p, q, basis }
    }

    pub fn zero(basis: Basis) -> Self {
        FieldElem::new(BigRational::zero(), BigRational::zero(), basis)
    }

    pub fn one(basis: Basis) -> Self {
        FieldElem::new(BigRational::one(), BigRational::zero(), basis)
    }

    pub fn from_int(v: impl Into<BigInt>, basis: Basis) -> Self {
        FieldElem::new(BigRational::from(v.into()), BigRational::zero(), basis)
    }

    pub fn from_quadint(z: &QuadInt) -> Self {
        FieldElem::new(
            BigRational::from(z.a.clone()),
            BigRational::from(z.b.clone()),
            z.basis,
        )
    }

    pub fn from_alpha(a: &AlphaPoint) -> Self {
        let y = BigRational::from(a.y.clone());
        FieldElem::new(
            BigRational::from(a.x.a.clone()) / y.clone(),
            BigRational::from(a.x.b.clone()) / y,
            a.x.basis,
        )
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    pub fn add(&self, rhs: &FieldElem) -> FieldElem {
        debug_assert_eq!(self.basis, rhs.basis);
        FieldElem::new(&self.p + &rhs.p, &self.q + &rhs.q, self.basis)
    }

    pub fn sub(&self, rhs: &FieldElem) -> FieldElem {
        debug_assert_eq!(self.basis, rhs.basis);
        FieldElem::new(&self.p - &rhs.p, &self.q - &rhs.q, self.basis)
    }

    pub fn neg(&self) -> FieldElem {
        FieldElem::new(-self.p.clone(), -self.q.clone(), self.basis)
    }

    pub fn mul(&self, rhs: &FieldElem) -> FieldElem {
        debug_assert_eq!(self.basis, rhs.basis);
        let (p, q, r, s) = (&self.p, &self.q, &rhs.p, &rhs.q);
        match self.basis {
            Basis::Rational => FieldElem::new(p * r, BigRational::zero(), self.basis),
            Basis::OneAndSqrt { d } => FieldElem::new(
                p * r - BigRational::from(BigInt::from(d)) * q * s,
                p * s + q * r,
                self.basis,
            ),
            Basis::HalfInteger { d } => {
                let qh = BigRational::from(BigInt::from((d + 1) / 4));
                FieldElem::new(p * r - qh * q * s, p * s + q * r + q * s, self.basis)
            }
        }
    }

    pub fn conj(&self) -> FieldElem {
        match self.basis {
            Basis::Rational => self.clone(),
            Basis::OneAndSqrt { .. } => FieldElem::new(self.p.clone(), -self.q.clone(), self.basis),
            Basis::HalfInteger { .. } => {
                FieldElem::new(&self.p + &self.q, -self.q.clone(), self.basis)
            }
        }
    }

    /// `|z|^2` as an exact nonnegative rational.
    pub fn norm(&self) -> BigRational {
        let (p, q) = (&self.p, &self.q);
        match self.basis {
            Basis::Rational => p * p,
            Basis::OneAndSqrt { d } => p * p + BigRational::from(BigInt::from(d)) * q * q,
            Basis::HalfInteger { d } => {
                let qh = BigRational::from(BigInt::from((d + 1) / 4));
                p * p + p * q + qh * q * q
            }
        }
    }

    /// Exact field division; panics on division by zero.
    pub fn div(&self, rhs: &FieldElem) -> FieldElem {
        let n = rhs.norm();
        assert!(!n.is_zero(), "division by zero field element");
        let c = self.mul(&rhs.conj());
        FieldElem::new(c.p / n.clone(), c.q / n, self.basis)
    }

    pub fn scale(&self, k: &BigRational) -> FieldElem {
        FieldElem::new(&self.p * k, &self.q * k, self.basis)
    }

    pub fn scale_int(&self, k: &BigInt) -> FieldElem {
        self.scale(&BigRational::from(k.clone()))
    }

    pub fn div_int(&self, k: &BigInt) -> FieldElem {
        assert!(!k.is_zero());
        self.scale(&BigRational::new(BigInt::one(), k.clone()))
    }

    /// Returns the ring element when both coordinates are integers.
    pub fn to_quadint(&self) -> Option<QuadInt> {
        if self.p.is_integer() && self.q.is_integer() {
            Some(QuadInt::new(self.p.to_integer(), self.q.to_integer(), self.basis))
        } else {
            None
        }
    }

    pub fn is_integral(&self) -> bool {
        self.p.is_integer() && self.q.is_integer()
    }

    /// Rectangular enclosure of the complex embedding (`w` into the upper
    /// half-plane).
    pub fn embed(&self, prec: usize) -> Complex {
        match self.basis {
            Basis::Rational => Complex::from_real(Real::from_ratio(&self.p, prec)),
            Basis::OneAndSqrt { d } => {
                let sd = Real::from_u64(d as u64, prec).sqrt();
                Complex::new(
                    Real::from_ratio(&self.p, prec),
                    Real::from_ratio(&self.q, prec).mul(&sd),
                )
            }
            Basis::HalfInteger { d } => {
                let sd = Real::from_u64(d as u64, prec).sqrt();
                let half = BigRational::new(BigInt::one(), BigInt::from(2));
                let re = &self.p + &self.q * &half;
                let im = &self.q * &half;
                Complex::new(
                    Real::from_ratio(&re, prec),
                    Real::from_ratio(&im, prec).mul(&sd),
                )
            }
        }
    }

    /// Enclosure of `|z|`.
    pub fn abs(&self, prec: usize) -> Real {
        Real::from_ratio(&self.norm(), prec).sqrt()
    }
}

/// Rigorous enclosure of `exp(z)` for an exact field element.
///
/// The series `sum z^n / n!` is summed in exact rational coordinates (no
/// argument reduction), with the tail bounded by the geometric estimate
/// `|z|^{N+1}/(N+1)! * 1/(1 - |z|/(N+2))`, and only then embedded. The
/// absolute tail is driven below `2^-(prec+4) * e^{Re z}` so the result is
/// correct to roughly `2^-prec` relative error.
pub fn exp_enclosure(z: &FieldElem, prec: usize) -> Complex {
    let wp = prec + 16;
    let r = z.abs(wp); // |z| enclosure
    let re_lo = z.embed(wp).re; // for the relative-error target
    let target = Real::from_i64(1, wp)
        .div(&Real::from_i64(2, wp).powi(prec as u64 + 4))
        .mul(&re_lo.exp());

    let mut sum = FieldElem::one(z.basis);
    let mut term = FieldElem::one(z.basis);
    let mut term_mag = Real::one(wp); // upper bound on |z|^n / n!
    let mut n: u64 = 0;
    let tail = loop {
        n += 1;
        term = term.mul(z).div_int(&BigInt::from(n));
        sum = sum.add(&term);
        term_mag = term_mag.mul(&r).div(&Real::from_u64(n, wp));
        // tail after N = n terms: |z|^{n+1}/(n+1)! * 1/(1 - |z|/(n+2))
        let ratio = r.div(&Real::from_u64(n + 2, wp));
        if ratio.lt(&Real::one(wp)).is_true() {
            let head = term_mag.mul(&r).div(&Real::from_u64(n + 1, wp));
            let bound = head.div(&Real::one(wp).sub(&ratio));
            if bound.le(&target).is_true() {
                break bound;
            }
        }
        assert!(n < 100_000, "exp series failed to converge");
    };
    let tail_hi = Real::from_ratio_bounds(&BigRational::zero(), &tail.hi_rational(), wp);
    sum.embed(wp).pad_ball(&tail_hi)
}
