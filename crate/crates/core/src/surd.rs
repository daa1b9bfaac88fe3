//! Exact values of the form `r + s*sqrt(n)` with rational `r, s` and a
//! nonnegative integer radicand, with total-order comparison.
//!
//! The size invariants of a point vector (`|x| + y`, `1 + y/|x|`, `|x|/y`)
//! all live in this class, one radicand per point. Comparing them exactly —
//! including the frequent equality cases — avoids ever reporting an
//! indeterminate invariant on touching enclosures.

use crate::real::Real;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

/// `r + s * sqrt(n)`, normalized so that a rational value has `s = 0, n = 0`.
#[derive(Clone, PartialEq, Eq)]
pub struct Surd {
    r: BigRational,
    s: BigRational,
    n: BigInt,
}

impl fmt::Debug for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.s.is_zero() {
            write!(f, "{}", self.r)
        } else {
            write!(f, "{} + {}*sqrt({})", self.r, self.s, self.n)
        }
    }
}

fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}

impl Surd {
    pub fn new(r: BigRational, s: BigRational, n: BigInt) -> Self {
        assert!(!n.is_negative(), "negative radicand");
        let mut v = Surd { r, s, n };
        v.normalize();
        v
    }

    fn normalize(&mut self) {
        if self.s.is_zero() || self.n.is_zero() {
            self.s = BigRational::zero();
            self.n = BigInt::zero();
            return;
        }
        if let Some(root) = exact_sqrt(&self.n) {
            self.r += &self.s * BigRational::from(root);
            self.s = BigRational::zero();
            self.n = BigInt::zero();
        }
    }

    pub fn from_ratio(r: BigRational) -> Self {
        Surd { r, s: BigRational::zero(), n: BigInt::zero() }
    }

    pub fn from_int(v: impl Into<BigInt>) -> Self {
        Surd::from_ratio(BigRational::from(v.into()))
    }

    /// `sqrt(n)` for integer `n >= 0`.
    pub fn sqrt_int(n: BigInt) -> Self {
        Surd::new(BigRational::zero(), BigRational::one(), n)
    }

    /// `sqrt(p/q) = sqrt(p*q)/q` for a nonnegative rational.
    pub fn sqrt_ratio(v: &BigRational) -> Self {
        assert!(!v.is_negative());
        let scaled = v.numer() * v.denom();
        Surd::new(
            BigRational::zero(),
            BigRational::new(BigInt::one(), v.denom().clone()),
            scaled,
        )
    }

    pub fn is_rational(&self) -> bool {
        self.s.is_zero()
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.is_rational() {
            Some(&self.r)
        } else {
            None
        }
    }

    pub fn add_ratio(&self, v: &BigRational) -> Surd {
        Surd { r: &self.r + v, s: self.s.clone(), n: self.n.clone() }
    }

    pub fn scale(&self, v: &BigRational) -> Surd {
        Surd::new(&self.r * v, &self.s * v, self.n.clone())
    }

    /// Product; defined when either factor is rational or radicands agree.
    pub fn mul(&self, o: &Surd) -> Surd {
        if self.is_rational() {
            return o.scale(&self.r);
        }
        if o.is_rational() {
            return self.scale(&o.r);
        }
        assert_eq!(self.n, o.n, "product of surds over different radicands");
        let nn = BigRational::from(self.n.clone());
        Surd::new(
            &self.r * &o.r + &self.s * &o.s * nn,
            &self.r * &o.s + &self.s * &o.r,
            self.n.clone(),
        )
    }

    pub fn add(&self, o: &Surd) -> Surd {
        if self.is_rational() {
            return o.add_ratio(&self.r);
        }
        if o.is_rational() {
            return self.add_ratio(&o.r);
        }
        assert_eq!(self.n, o.n, "sum of surds over different radicands");
        Surd::new(&self.r + &o.r, &self.s + &o.s, self.n.clone())
    }

    pub fn pow(&self, k: u32) -> Surd {
        let mut acc = Surd::from_int(1);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn sign(&self) -> Ordering {
        sign_single(&self.r, &self.s, &self.n)
    }

    pub fn max(self, o: Surd) -> Surd {
        if self.cmp_exact(&o) == Ordering::Less {
            o
        } else {
            self
        }
    }

    /// Exact total-order comparison (two radicands at most).
    pub fn cmp_exact(&self, o: &Surd) -> Ordering {
        sign_combo(&(&self.r - &o.r), &self.s, &self.n, &-o.s.clone(), &o.n)
    }

    /// Enclosure of the value at the given precision.
    pub fn to_real(&self, prec: usize) -> Real {
        let base = Real::from_ratio(&self.r, prec);
        if self.s.is_zero() {
            return base;
        }
        let root = Real::from_bigint(&self.n, prec).sqrt();
        base.add(&Real::from_ratio(&self.s, prec).mul(&root))
    }
}

/// Sign of `a + b*sqrt(n)` (with `n >= 0`).
fn sign_single(a: &BigRational, b: &BigRational, n: &BigInt) -> Ordering {
    if b.is_zero() || n.is_zero() {
        return a.cmp(&BigRational::zero());
    }
    if a.is_zero() {
        return b.cmp(&BigRational::zero());
    }
    match (a.is_positive(), b.is_positive()) {
        (true, true) => Ordering::Greater,
        (false, false) => Ordering::Less,
        (true, false) => {
            // a vs |b| sqrt(n): compare a^2 vs b^2 n
            (a * a).cmp(&(b * b * BigRational::from(n.clone())))
        }
        (false, true) => (b * b * BigRational::from(n.clone())).cmp(&(a * a)),
    }
}

/// Sign of `a + b*sqrt(n) + c*sqrt(m)`.
fn sign_combo(a: &BigRational, b: &BigRational, n: &BigInt, c: &BigRational, m: &BigInt) -> Ordering {
    // collapse vanished radicals
    if b.is_zero() || n.is_zero() {
        return sign_single(a, c, m);
    }
    if c.is_zero() || m.is_zero() {
        return sign_single(a, b, n);
    }
    if n == m {
        return sign_single(a, &(b + c), n);
    }
    match (b.is_positive(), c.is_positive()) {
        (true, true) => {
            if !a.is_negative() {
                Ordering::Greater
            } else {
                // b sqrt(n) + c sqrt(m) vs |a|: square both sides once
                let lhs = b * b * BigRational::from(n.clone())
                    + c * c * BigRational::from(m.clone())
                    - a * a;
                let cross = BigRational::from(2) * b * c;
                sign_single(&lhs, &cross, &(n * m))
            }
        }
        (false, false) => {
            sign_combo(&-a.clone(), &-b.clone(), n, &-c.clone(), m).reverse()
        }
        (true, false) => sign_mixed(a, b, n, &-c.clone(), m),
        (false, true) => sign_mixed(a, c, m, &-b.clone(), n),
    }
}

/// Sign of `a + b*sqrt(n) - c*sqrt(m)` with `b, c > 0` and irrational radicals.
fn sign_mixed(a: &BigRational, b: &BigRational, n: &BigInt, c: &BigRational, m: &BigInt) -> Ordering {
    debug_assert!(b.is_positive() && c.is_positive());
    let p_sign = sign_single(a, b, n); // sign of a + b sqrt(n)
    match p_sign {
        Ordering::Less | Ordering::Equal => Ordering::Less, // minus a strictly positive c*sqrt(m)
        Ordering::Greater => {
            // (a + b sqrt(n))^2 vs c^2 m
            let rational = a * a + b * b * BigRational::from(n.clone())
                - c * c * BigRational::from(m.clone());
            let cross = BigRational::from(2) * a * b;
            sign_single(&rational, &cross, n)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn surd(r: (i64, i64), s: (i64, i64), n: i64) -> Surd {
        Surd::new(q(r.0, r.1), q(s.0, s.1), BigInt::from(n))
    }

    #[test]
    fn perfect_squares_fold_to_rationals() {
        let v = surd((1, 1), (3, 2), 9); // 1 + (3/2)*3 = 11/2
        assert!(v.is_rational());
        assert_eq!(v.as_rational().unwrap(), &q(11, 2));
    }

    #[test]
    fn single_radical_signs() {
        assert_eq!(surd((0, 1), (1, 1), 2).sign(), Ordering::Greater);
        assert_eq!(surd((-2, 1), (1, 1), 2).sign(), Ordering::Less); // sqrt2 < 2
        assert_eq!(surd((-1, 1), (1, 1), 2).sign(), Ordering::Greater); // sqrt2 > 1
        assert_eq!(surd((-3, 1), (1, 1), 9).sign(), Ordering::Equal); // folded
    }

    #[test]
    fn touching_equalities_are_decided() {
        // 1 + sqrt(2) == 1 + sqrt(2) across separately built values
        let a = surd((1, 1), (1, 1), 2);
        let b = surd((1, 1), (2, 2), 2);
        assert_eq!(a.cmp_exact(&b), Ordering::Equal);
        // sqrt(2) + sqrt(3) vs sqrt(10): 5 + 2 sqrt(6) vs 10 -> sqrt(6) vs 5/2 -> 24 < 25
        let lhs = surd((0, 1), (1, 1), 2);
        let rhs = Surd::sqrt_int(BigInt::from(10)).add_ratio(&-q(0, 1));
        let diff = sign_combo(&q(0, 1), &q(1, 1), &BigInt::from(3), &q(-1, 1), &BigInt::from(10));
        // sqrt(3) < sqrt(10) obviously
        assert_eq!(diff, Ordering::Less);
        // full two-radical compare: sqrt(2)+... use cmp via values
        let x = lhs.add_ratio(&q(0, 1));
        assert_eq!(x.cmp_exact(&rhs), Ordering::Less); // sqrt2 < sqrt10
    }

    #[test]
    fn cross_radical_comparisons() {
        // 1 + sqrt(2) vs sqrt(6): 2.4142 vs 2.4495
        let a = surd((1, 1), (1, 1), 2);
        let b = Surd::sqrt_int(BigInt::from(6));
        assert_eq!(a.cmp_exact(&b), Ordering::Less);
        // 2 + sqrt(2) vs sqrt(11): 3.4142 vs 3.3166
        let c = surd((2, 1), (1, 1), 2);
        let d = Surd::sqrt_int(BigInt::from(11));
        assert_eq!(c.cmp_exact(&d), Ordering::Greater);
        // sqrt(2) + sqrt(8) = 3 sqrt(2) = sqrt(18)
        let e = Surd::sqrt_int(BigInt::from(2)).add(&Surd::sqrt_int(BigInt::from(8)));
        assert_eq!(e.cmp_exact(&Surd::sqrt_int(BigInt::from(18))), Ordering::Equal);
    }

    #[test]
    fn products_and_powers() {
        // (1+sqrt(2))^2 = 3 + 2 sqrt(2)
        let v = surd((1, 1), (1, 1), 2).pow(2);
        assert_eq!(v, surd((3, 1), (2, 1), 2));
        // sqrt(1/2) = sqrt(2)/2
        let h = Surd::sqrt_ratio(&q(1, 2));
        assert_eq!(h, surd((0, 1), (1, 2), 2));
    }

    #[test]
    fn enclosure_agrees_with_exact_order() {
        let vals = [
            surd((1, 1), (1, 1), 2),
            surd((0, 1), (2, 1), 3),
            surd((3, 1), (-1, 2), 5),
            surd((7, 3), (0, 1), 0),
        ];
        for a in &vals {
            for b in &vals {
                let ra = a.to_real(96);
                let rb = b.to_real(96);
                match a.cmp_exact(b) {
                    Ordering::Less => assert!(ra.lt(&rb).is_true()),
                    Ordering::Greater => assert!(ra.gt(&rb).is_true()),
                    Ordering::Equal => {
                        assert!(!ra.lt(&rb).is_true() && !ra.gt(&rb).is_true())
                    }
                }
            }
        }
    }
}
