//! Rectangular complex enclosures built from two [`Real`] intervals.

use crate::real::Real;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use std::fmt;

/// A complex enclosure: a rectangle `re x im` certified to contain the value.
#[derive(Clone, Debug)]
pub struct Complex {
    pub re: Real,
    pub im: Real,
}

impl fmt::Display for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {}i)", self.re, self.im)
    }
}

impl Complex {
    pub fn new(re: Real, im: Real) -> Self {
        Complex { re, im }
    }

    pub fn from_real(re: Real) -> Self {
        let prec = re.precision();
        Complex { re, im: Real::zero(prec) }
    }

    pub fn zero(prec: usize) -> Self {
        Complex { re: Real::zero(prec), im: Real::zero(prec) }
    }

    pub fn precision(&self) -> usize {
        self.re.precision().max(self.im.precision())
    }

    pub fn add(&self, rhs: &Complex) -> Complex {
        Complex { re: self.re.add(&rhs.re), im: self.im.add(&rhs.im) }
    }

    pub fn sub(&self, rhs: &Complex) -> Complex {
        Complex { re: self.re.sub(&rhs.re), im: self.im.sub(&rhs.im) }
    }

    pub fn mul(&self, rhs: &Complex) -> Complex {
        let re = self.re.mul(&rhs.re).sub(&self.im.mul(&rhs.im));
        let im = self.re.mul(&rhs.im).add(&self.im.mul(&rhs.re));
        Complex { re, im }
    }

    pub fn scale(&self, s: &Real) -> Complex {
        Complex { re: self.re.mul(s), im: self.im.mul(s) }
    }

    /// Enclosure of the modulus `sqrt(re^2 + im^2)`.
    pub fn abs(&self) -> Real {
        self.re.mul(&self.re).add(&self.im.mul(&self.im)).sqrt()
    }

    /// Adds a centered error ball of radius `r >= 0` to both components.
    pub fn pad_ball(&self, r: &Real) -> Complex {
        let hi = r.hi_rational();
        let sym = Real::from_ratio_bounds(&-hi.clone(), &hi, r.precision());
        Complex { re: self.re.add(&sym), im: self.im.add(&sym) }
    }

    /// Half the width of the widest component, as an upper bound.
    pub fn radius(&self) -> Real {
        self.re.width().max(&self.im.width())
    }

    pub fn contains_zero(&self) -> bool {
        self.re.contains_zero() && self.im.contains_zero()
    }
}

impl Serialize for Complex {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        // Disk form for reports: midpoint plus radius covering both components.
        let mut st = serializer.serialize_struct("Complex", 3)?;
        st.serialize_field("mid_re", &format!("{:e}", self.re.mid_f64()))?;
        st.serialize_field("mid_im", &format!("{:e}", self.im.mid_f64()))?;
        st.serialize_field("rad", &format!("{:e}", self.radius().hi_f64()))?;
        st.end()
    }
}
