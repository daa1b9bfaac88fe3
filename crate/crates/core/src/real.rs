//! Rigorous real enclosures.
//!
//! A [`Real`] is a closed interval `[lo, hi]` of arbitrary-precision binary
//! floats certified to contain the exact value. Endpoints are computed with
//! directed rounding; transcendental results are additionally padded outward
//! by a few ulps. Every operation takes its working precision from the
//! operands, so a whole computation can be rerun at doubled precision by
//! rebuilding its inputs.

use astro_float::{BigFloat, Consts, RoundingMode, Sign, WORD_BIT_SIZE};
use num_bigint::{BigInt, Sign as IntSign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;

/// Default working precision in bits.
pub const DEFAULT_PRECISION: usize = 128;
/// Hard cap for adaptive precision doubling.
pub const MAX_PRECISION: usize = 4096;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("constants cache"));
}

fn with_consts<T>(f: impl FnOnce(&mut Consts) -> T) -> T {
    CONSTS.with(|c| f(&mut c.borrow_mut()))
}

/// Three-valued truth for comparisons of enclosures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tern {
    True,
    False,
    Unknown,
}

impl Tern {
    pub fn is_true(self) -> bool {
        self == Tern::True
    }
    pub fn is_false(self) -> bool {
        self == Tern::False
    }
    pub fn is_unknown(self) -> bool {
        self == Tern::Unknown
    }
}

/// Runs `check` at doubling precision until it returns a definite answer.
///
/// Returns `None` if the comparison is still undecided at `cap` bits; callers
/// report that as an indeterminate result rather than guessing.
pub fn escalate(start: usize, cap: usize, mut check: impl FnMut(usize) -> Tern) -> Option<bool> {
    let mut p = start.max(32);
    loop {
        match check(p) {
            Tern::True => return Some(true),
            Tern::False => return Some(false),
            Tern::Unknown => {
                if p >= cap {
                    return None;
                }
                p = (p * 2).min(cap);
            }
        }
    }
}

fn bf_cmp(a: &BigFloat, b: &BigFloat) -> Ordering {
    a.partial_cmp(b).expect("NaN in enclosure arithmetic")
}

fn bf_min(a: BigFloat, b: BigFloat) -> BigFloat {
    if bf_cmp(&a, &b) == Ordering::Gt {
        b
    } else {
        a
    }
}

fn bf_max(a: BigFloat, b: BigFloat) -> BigFloat {
    if bf_cmp(&a, &b) == Ordering::Lt {
        b
    } else {
        a
    }
}

/// Exact conversion of a big integer into a binary float (no rounding).
fn bf_from_bigint_exact(v: &BigInt) -> BigFloat {
    if v.is_zero() {
        return BigFloat::from_i8(0, WORD_BIT_SIZE);
    }
    let bits = v.magnitude().bits();
    let (sign, mut words) = v.to_u64_digits();
    let shift = (words.len() as u64 * 64 - bits) as u32;
    if shift > 0 {
        let mut carry = 0u64;
        for w in words.iter_mut() {
            let nv = (*w << shift) | carry;
            carry = *w >> (64 - shift);
            *w = nv;
        }
        debug_assert_eq!(carry, 0);
    }
    let s = if sign == IntSign::Minus { Sign::Neg } else { Sign::Pos };
    BigFloat::from_raw_parts(&words, words.len() * WORD_BIT_SIZE, s, bits as i32, false)
}

/// Exact rational value of a finite binary float.
fn bf_to_rational(x: &BigFloat) -> BigRational {
    if x.is_zero() {
        return BigRational::zero();
    }
    let (m, n, s, e, _) = x.as_raw_parts().expect("finite float");
    let mut mag = BigInt::zero();
    for (i, w) in m.iter().enumerate() {
        mag += BigInt::from(*w) << (64 * i);
    }
    if s == Sign::Neg {
        mag = -mag;
    }
    let shift = e as i64 - n as i64;
    if shift >= 0 {
        BigRational::from(mag << shift)
    } else {
        BigRational::new(mag, BigInt::one() << (-shift))
    }
}

/// `4` ulps of `x` at precision `p`; used to pad transcendental results.
fn ulp4(x: &BigFloat, p: usize) -> BigFloat {
    let e = match x.exponent() {
        Some(ex) if !x.is_zero() => ex as i64 - p as i64 + 3,
        _ => -(2 * p as i64),
    };
    let e = e.clamp(i32::MIN as i64 + 8, i32::MAX as i64 - 8) as i32;
    BigFloat::from_raw_parts(&[1u64 << 63], WORD_BIT_SIZE, Sign::Pos, e, false)
}

fn round_dir(x: &BigFloat, p: usize, rm: RoundingMode) -> BigFloat {
    x.add(&BigFloat::from_i8(0, WORD_BIT_SIZE), p, rm)
}

/// A rigorous interval enclosure of a real number.
#[derive(Clone)]
pub struct Real {
    lo: BigFloat,
    hi: BigFloat,
    prec: usize,
}

impl fmt::Debug for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Real[{}, {}]", self.lo, self.hi)
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lo == self.hi {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "[{}, {}]", self.lo, self.hi)
        }
    }
}

impl Serialize for Real {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Real", 2)?;
        st.serialize_field("lo", &format!("{}", self.lo))?;
        st.serialize_field("hi", &format!("{}", self.hi))?;
        st.end()
    }
}

impl Real {
    fn make(lo: BigFloat, hi: BigFloat, prec: usize) -> Self {
        assert!(!lo.is_nan() && !hi.is_nan(), "NaN endpoint");
        assert!(!lo.is_inf() && !hi.is_inf(), "infinite endpoint (exponent overflow)");
        debug_assert!(bf_cmp(&lo, &hi) != Ordering::Gt, "inverted interval, {lo} > {hi}");
        Real { lo, hi, prec }
    }

    pub fn precision(&self) -> usize {
        self.prec
    }

    pub fn lo_float(&self) -> &BigFloat {
        &self.lo
    }

    pub fn hi_float(&self) -> &BigFloat {
        &self.hi
    }

    /// Exact rational endpoints, for cross-checks against exact arithmetic.
    pub fn lo_rational(&self) -> BigRational {
        bf_to_rational(&self.lo)
    }

    pub fn hi_rational(&self) -> BigRational {
        bf_to_rational(&self.hi)
    }

    pub fn zero(prec: usize) -> Self {
        let z = BigFloat::from_i8(0, WORD_BIT_SIZE);
        Real::make(z.clone(), z, prec)
    }

    pub fn one(prec: usize) -> Self {
        Real::from_i64(1, prec)
    }

    pub fn from_i64(v: i64, prec: usize) -> Self {
        let x = BigFloat::from_i64(v, prec.max(64));
        Real::make(x.clone(), x, prec)
    }

    pub fn from_u64(v: u64, prec: usize) -> Self {
        let x = BigFloat::from_u64(v, prec.max(64));
        Real::make(x.clone(), x, prec)
    }

    /// Exact dyadic `f64` value (not a parsed decimal).
    pub fn from_f64(v: f64, prec: usize) -> Self {
        assert!(v.is_finite());
        let x = BigFloat::from_f64(v, prec.max(64));
        Real::make(x.clone(), x, prec)
    }

    pub fn from_bigint(v: &BigInt, prec: usize) -> Self {
        let exact = bf_from_bigint_exact(v);
        if v.magnitude().bits() as usize <= prec {
            return Real::make(exact.clone(), exact, prec);
        }
        let lo = round_dir(&exact, prec, RoundingMode::Down);
        let hi = round_dir(&exact, prec, RoundingMode::Up);
        Real::make(lo, hi, prec)
    }

    pub fn from_ratio(v: &BigRational, prec: usize) -> Self {
        let n = bf_from_bigint_exact(v.numer());
        let d = bf_from_bigint_exact(v.denom());
        let lo = n.div(&d, prec, RoundingMode::Down);
        let hi = n.div(&d, prec, RoundingMode::Up);
        Real::make(lo, hi, prec)
    }

    /// Interval from exact rational endpoints.
    pub fn from_ratio_bounds(lo: &BigRational, hi: &BigRational, prec: usize) -> Self {
        assert!(lo <= hi);
        let l = Real::from_ratio(lo, prec);
        let h = Real::from_ratio(hi, prec);
        Real::make(l.lo, h.hi, prec)
    }

    /// Decimal string, parsed into a two-sided enclosure.
    pub fn parse_decimal(s: &str, prec: usize) -> crate::Result<Self> {
        let r = parse_decimal_rational(s)
            .ok_or_else(|| crate::Error::Parse(format!("invalid decimal '{s}'")))?;
        Ok(Real::from_ratio(&r, prec))
    }

    pub fn pi(prec: usize) -> Self {
        let lo = with_consts(|cc| cc.pi(prec, RoundingMode::Down));
        let hi = with_consts(|cc| cc.pi(prec, RoundingMode::Up));
        Real::make(lo.sub(&ulp4(&lo, prec), prec, RoundingMode::Down), hi.add(&ulp4(&hi, prec), prec, RoundingMode::Up), prec)
    }

    pub fn euler_e(prec: usize) -> Self {
        let lo = with_consts(|cc| cc.e(prec, RoundingMode::Down));
        let hi = with_consts(|cc| cc.e(prec, RoundingMode::Up));
        Real::make(lo.sub(&ulp4(&lo, prec), prec, RoundingMode::Down), hi.add(&ulp4(&hi, prec), prec, RoundingMode::Up), prec)
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn contains(&self, other: &Real) -> bool {
        bf_cmp(&self.lo, &other.lo) != Ordering::Gt && bf_cmp(&self.hi, &other.hi) != Ordering::Lt
    }

    pub fn contains_ratio(&self, v: &BigRational) -> bool {
        &self.lo_rational() <= v && v <= &self.hi_rational()
    }

    /// Interval hull of the two enclosures.
    pub fn hull(&self, other: &Real) -> Real {
        let p = self.prec.max(other.prec);
        Real::make(
            bf_min(self.lo.clone(), other.lo.clone()),
            bf_max(self.hi.clone(), other.hi.clone()),
            p,
        )
    }

    pub fn width(&self) -> Real {
        let p = self.prec;
        let w = self.hi.sub(&self.lo, p, RoundingMode::Up);
        Real::make(BigFloat::from_i8(0, WORD_BIT_SIZE), w, p)
    }

    pub fn mid_f64(&self) -> f64 {
        let two = BigFloat::from_i8(2, 64);
        let m = self.lo.add(&self.hi, self.prec, RoundingMode::ToEven).div(&two, self.prec, RoundingMode::ToEven);
        bf_to_f64(&m)
    }

    pub fn lo_f64(&self) -> f64 {
        bf_to_f64(&self.lo)
    }

    pub fn hi_f64(&self) -> f64 {
        bf_to_f64(&self.hi)
    }

    pub fn add(&self, rhs: &Real) -> Real {
        let p = self.prec.max(rhs.prec);
        Real::make(
            self.lo.add(&rhs.lo, p, RoundingMode::Down),
            self.hi.add(&rhs.hi, p, RoundingMode::Up),
            p,
        )
    }

    pub fn sub(&self, rhs: &Real) -> Real {
        let p = self.prec.max(rhs.prec);
        Real::make(
            self.lo.sub(&rhs.hi, p, RoundingMode::Down),
            self.hi.sub(&rhs.lo, p, RoundingMode::Up),
            p,
        )
    }

    pub fn neg(&self) -> Real {
        Real::make(self.hi.neg(), self.lo.neg(), self.prec)
    }

    pub fn mul(&self, rhs: &Real) -> Real {
        let p = self.prec.max(rhs.prec);
        let pairs = [
            (&self.lo, &rhs.lo),
            (&self.lo, &rhs.hi),
            (&self.hi, &rhs.lo),
            (&self.hi, &rhs.hi),
        ];
        let mut lo: Option<BigFloat> = None;
        let mut hi: Option<BigFloat> = None;
        for (a, b) in pairs {
            let d = a.mul(b, p, RoundingMode::Down);
            let u = a.mul(b, p, RoundingMode::Up);
            lo = Some(match lo {
                None => d,
                Some(c) => bf_min(c, d),
            });
            hi = Some(match hi {
                None => u,
                Some(c) => bf_max(c, u),
            });
        }
        Real::make(lo.unwrap(), hi.unwrap(), p)
    }

    /// Division; panics if `rhs` straddles zero (always a caller bug here).
    pub fn div(&self, rhs: &Real) -> Real {
        assert!(!rhs.contains_zero(), "division by interval containing zero");
        let p = self.prec.max(rhs.prec);
        let pairs = [
            (&self.lo, &rhs.lo),
            (&self.lo, &rhs.hi),
            (&self.hi, &rhs.lo),
            (&self.hi, &rhs.hi),
        ];
        let mut lo: Option<BigFloat> = None;
        let mut hi: Option<BigFloat> = None;
        for (a, b) in pairs {
            let d = a.div(b, p, RoundingMode::Down);
            let u = a.div(b, p, RoundingMode::Up);
            lo = Some(match lo {
                None => d,
                Some(c) => bf_min(c, d),
            });
            hi = Some(match hi {
                None => u,
                Some(c) => bf_max(c, u),
            });
        }
        Real::make(lo.unwrap(), hi.unwrap(), p)
    }

    pub fn abs(&self) -> Real {
        if !self.lo.is_negative() {
            self.clone()
        } else if !self.hi.is_positive() {
            self.neg()
        } else {
            Real::make(
                BigFloat::from_i8(0, WORD_BIT_SIZE),
                bf_max(self.lo.abs(), self.hi.abs()),
                self.prec,
            )
        }
    }

    pub fn min(&self, rhs: &Real) -> Real {
        let p = self.prec.max(rhs.prec);
        Real::make(
            bf_min(self.lo.clone(), rhs.lo.clone()),
            bf_min(self.hi.clone(), rhs.hi.clone()),
            p,
        )
    }

    pub fn max(&self, rhs: &Real) -> Real {
        let p = self.prec.max(rhs.prec);
        Real::make(
            bf_max(self.lo.clone(), rhs.lo.clone()),
            bf_max(self.hi.clone(), rhs.hi.clone()),
            p,
        )
    }

    /// Integer power with sign handling.
    pub fn powi(&self, n: u64) -> Real {
        if n == 0 {
            return Real::one(self.prec);
        }
        let mut acc = self.clone();
        let mut result: Option<Real> = None;
        let mut k = n;
        while k > 0 {
            if k & 1 == 1 {
                result = Some(match result {
                    None => acc.clone(),
                    Some(r) => r.mul(&acc),
                });
            }
            k >>= 1;
            if k > 0 {
                acc = acc.mul(&acc);
            }
        }
        result.unwrap()
    }

    pub fn sqrt(&self) -> Real {
        assert!(!self.lo.is_negative(), "sqrt of interval with negative endpoint: {self}");
        let p = self.prec;
        let lo = self.lo.sqrt(p, RoundingMode::Down);
        let hi = self.hi.sqrt(p, RoundingMode::Up);
        let lo = bf_max(lo.sub(&ulp4(&lo, p), p, RoundingMode::Down), BigFloat::from_i8(0, WORD_BIT_SIZE));
        let hi = hi.add(&ulp4(&hi, p), p, RoundingMode::Up);
        Real::make(lo, hi, p)
    }

    pub fn ln(&self) -> Real {
        assert!(self.lo.is_positive(), "log of interval not strictly positive: {self}");
        let p = self.prec;
        let lo = with_consts(|cc| self.lo.ln(p, RoundingMode::Down, cc));
        let hi = with_consts(|cc| self.hi.ln(p, RoundingMode::Up, cc));
        Real::make(
            lo.sub(&ulp4(&lo, p), p, RoundingMode::Down),
            hi.add(&ulp4(&hi, p), p, RoundingMode::Up),
            p,
        )
    }

    pub fn exp(&self) -> Real {
        let p = self.prec;
        let lo = with_consts(|cc| self.lo.exp(p, RoundingMode::Down, cc));
        let hi = with_consts(|cc| self.hi.exp(p, RoundingMode::Up, cc));
        Real::make(
            lo.sub(&ulp4(&lo, p), p, RoundingMode::Down),
            hi.add(&ulp4(&hi, p), p, RoundingMode::Up),
            p,
        )
    }

    /// `self^(num/den)` for a strictly positive base, via `exp(q ln x)`.
    pub fn pow_ratio(&self, num: i64, den: u64) -> Real {
        assert!(den > 0);
        let q = Real::from_i64(num, self.prec).div(&Real::from_u64(den, self.prec));
        self.ln().mul(&q).exp()
    }

    pub fn ge(&self, rhs: &Real) -> Tern {
        if bf_cmp(&self.lo, &rhs.hi) != Ordering::Less {
            Tern::True
        } else if bf_cmp(&self.hi, &rhs.lo) == Ordering::Less {
            Tern::False
        } else {
            Tern::Unknown
        }
    }

    pub fn gt(&self, rhs: &Real) -> Tern {
        if bf_cmp(&self.lo, &rhs.hi) == Ordering::Greater {
            Tern::True
        } else if bf_cmp(&self.hi, &rhs.lo) != Ordering::Greater {
            Tern::False
        } else {
            Tern::Unknown
        }
    }

    pub fn le(&self, rhs: &Real) -> Tern {
        rhs.ge(self)
    }

    pub fn lt(&self, rhs: &Real) -> Tern {
        rhs.gt(self)
    }

    /// Floor shared by the whole enclosure, when determined.
    pub fn floor_certain(&self) -> Option<BigInt> {
        let fl = self.lo_rational().floor().to_integer();
        let fh = self.hi_rational().floor().to_integer();
        if fl == fh {
            Some(fl)
        } else {
            None
        }
    }

    /// Enclosure rebuilt at a new working precision (no tightening).
    pub fn with_precision(&self, prec: usize) -> Real {
        Real::make(
            round_dir(&self.lo, prec, RoundingMode::Down),
            round_dir(&self.hi, prec, RoundingMode::Up),
            prec,
        )
    }
}

fn bf_to_f64(x: &BigFloat) -> f64 {
    // astro-float has no direct to_f64 on BigFloat; go through a short string.
    format!("{}", round_dir(x, 64, RoundingMode::ToEven))
        .parse::<f64>()
        .unwrap_or(f64::NAN)
}

/// Parses a plain decimal literal (optional sign, optional fraction, optional
/// exponent) into an exact rational.
pub fn parse_decimal_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let (mant, exp10) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i64>().ok()?),
        None => (s, 0i64),
    };
    let (mant, neg) = match mant.strip_prefix('-') {
        Some(rest) => (rest, true),
        None => (mant.strip_prefix('+').unwrap_or(mant), false),
    };
    let (int_part, frac_part) = match mant.find('.') {
        Some(i) => (&mant[..i], &mant[i + 1..]),
        None => (mant, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.chars().all(|c| c.is_ascii_digit()) || !frac_part.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{int_part}{frac_part}");
    let mut num: BigInt = digits.parse().ok()?;
    if neg {
        num = -num;
    }
    let shift = exp10 - frac_part.len() as i64;
    let ten = BigInt::from(10);
    let mut r = BigRational::from(num);
    if shift >= 0 {
        r *= BigRational::from(ten.pow(shift as u32));
    } else {
        r /= BigRational::from(ten.pow((-shift) as u32));
    }
    Some(r)
}
