//! Size invariants `g1..g4` of a point vector and every constant derived from
//! them: `b0, b1, e0, e1`, the five theorem constants, `gamma` and the
//! validity threshold `H0`.
//!
//! The `g` quantities are kept as exact quadratic surds (one radicand per
//! point), so the defining inequality chain is decided exactly even in its
//! frequent equality cases; enclosures are derived from the exact values for
//! the transcendental stage.

use crate::error::Error;
use crate::field::{AlphaPoint, FieldSpec};
use crate::real::{Real, Tern};
use crate::siegel::SiegelConstants;
use crate::surd::Surd;
use crate::Result;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;
use std::cmp::Ordering;

/// A validated vector `(alpha_0 = 0, alpha_1, ..., alpha_m)`, `m >= 2`.
#[derive(Clone, Debug)]
pub struct AlphaVector {
    pub field: FieldSpec,
    pub points: Vec<AlphaPoint>,
}

impl AlphaVector {
    pub fn new(field: FieldSpec, points: Vec<AlphaPoint>) -> Result<Self> {
        field.validate()?;
        if points.len() < 3 {
            return Err(Error::Invariant(format!(
                "need m >= 2, i.e. at least 3 points, got {}",
                points.len()
            )));
        }
        let basis = field.basis();
        for (j, p) in points.iter().enumerate() {
            if p.x.basis != basis {
                return Err(Error::BasisMismatch(format!("point {j} not in field basis")));
            }
            if !p.is_reduced() {
                return Err(Error::Invariant(format!("point {j} not in reduced form")));
            }
        }
        if !points[0].is_zero() {
            return Err(Error::Invariant("alpha_0 must be 0".into()));
        }
        for j in 1..points.len() {
            if points[j].is_zero() {
                return Err(Error::Invariant(format!("alpha_{j} must be nonzero")));
            }
        }
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                if points[i].value_eq(&points[j]) {
                    return Err(Error::Invariant(format!("points {i} and {j} coincide")));
                }
            }
        }
        Ok(AlphaVector { field, points })
    }

    pub fn parse(field: &FieldSpec, list: &str) -> Result<Self> {
        let points = crate::field::parse_alpha_list(list, field)?;
        AlphaVector::new(*field, points)
    }

    pub fn m(&self) -> usize {
        self.points.len() - 1
    }

    /// `(0, 1, 2, ..., m)` over the rationals.
    pub fn integers(m: usize) -> Self {
        let basis = FieldSpec::rationals().basis();
        let points = (0..=m as i64).map(|j| AlphaPoint::from_int(j, basis)).collect();
        AlphaVector::new(FieldSpec::rationals(), points).expect("valid by construction")
    }

    /// `(0, 1, 1/2, ..., 1/m)` over the rationals.
    pub fn harmonic(m: usize) -> Self {
        let basis = FieldSpec::rationals().basis();
        let mut points = vec![AlphaPoint::zero(basis)];
        for j in 1..=m as i64 {
            points.push(crate::field::alpha_normalize(
                &crate::field::QuadInt::from_int(1, basis),
                &BigInt::from(j),
            ));
        }
        AlphaVector::new(FieldSpec::rationals(), points).expect("valid by construction")
    }

    /// `|x_j| + y_j` as an exact surd.
    fn v2(&self, j: usize) -> Surd {
        let p = &self.points[j];
        Surd::sqrt_int(p.x.norm()).add_ratio(&BigRational::from(p.y.clone()))
    }

    /// `|alpha_j| = |x_j| / y_j` as an exact surd.
    fn v3(&self, j: usize) -> Surd {
        let p = &self.points[j];
        Surd::sqrt_int(p.x.norm()).scale(&BigRational::new(BigInt::one(), p.y.clone()))
    }

    /// `1 + y_j / |x_j|` as an exact surd (requires `x_j != 0`).
    fn v4(&self, j: usize) -> Surd {
        let p = &self.points[j];
        let n = p.x.norm();
        // y / sqrt(n) = y sqrt(n) / n
        Surd::sqrt_int(n.clone())
            .scale(&BigRational::new(p.y.clone(), n))
            .add_ratio(&BigRational::one())
    }
}

/// The four size invariants, exact and enclosed.
#[derive(Clone, Debug)]
pub struct GTuple {
    pub g1: BigInt,
    pub g2: Surd,
    pub g3: Surd,
    pub g4: Surd,
    pub g2_enc: Real,
    pub g3_enc: Real,
    pub g4_enc: Real,
    pub precision: usize,
}

/// Computes `g1..g4` and verifies their defining inequality chain exactly.
///
/// `g1` is the lcm of the denominators; `g2 = max(|x_j| + y_j)`,
/// `g3 = max |alpha_j|`, `g4 = max(1 + y_j/|x_j|)` over `j >= 1`. A chain
/// violation is reported as an error: it can only mean malformed input or a
/// bug, never a numerical artifact, because the comparison is exact.
pub fn compute_g(alpha: &AlphaVector, precision: usize) -> Result<GTuple> {
    let m = alpha.m();
    let mut g1 = BigInt::one();
    for p in &alpha.points {
        g1 = g1.lcm(&p.y);
    }
    let mut g2 = alpha.v2(0);
    let mut g3 = alpha.v3(0);
    for j in 1..=m {
        g2 = g2.max(alpha.v2(j));
        g3 = g3.max(alpha.v3(j));
    }
    let mut g4 = alpha.v4(1);
    for j in 2..=m {
        g4 = g4.max(alpha.v4(j));
    }

    // 2 <= g2
    if g2.cmp_exact(&Surd::from_int(2)) == Ordering::Less {
        return Err(Error::Invariant(format!("g2 = {g2:?} < 2")));
    }
    // max(g4, 1 + g3) <= g2
    let one_plus_g3 = g3.add_ratio(&BigRational::one());
    if g4.cmp_exact(&g2) == Ordering::Greater {
        return Err(Error::Invariant(format!("g4 = {g4:?} > g2 = {g2:?}")));
    }
    if one_plus_g3.cmp_exact(&g2) == Ordering::Greater {
        return Err(Error::Invariant(format!("1 + g3 > g2 = {g2:?}")));
    }
    // g2 <= g1 (1 + g3) <= 2 g1 max(1, g3)
    let g1r = BigRational::from(g1.clone());
    let rhs1 = one_plus_g3.scale(&g1r);
    if g2.cmp_exact(&rhs1) == Ordering::Greater {
        return Err(Error::Invariant(format!("g2 = {g2:?} > g1 (1 + g3)")));
    }
    let max1g3 = g3.clone().max(Surd::from_int(1));
    let rhs2 = max1g3.scale(&(g1r * BigRational::from(BigInt::from(2))));
    if rhs1.cmp_exact(&rhs2) == Ordering::Greater {
        return Err(Error::Invariant("g1 (1 + g3) > 2 g1 max(1, g3)".into()));
    }
    // g1 <= g2^m
    let g2m = g2.pow(m as u32);
    if Surd::from_ratio(BigRational::from(g1.clone())).cmp_exact(&g2m) == Ordering::Greater {
        return Err(Error::Invariant(format!("g1 = {g1} > g2^m")));
    }

    Ok(GTuple {
        g2_enc: g2.to_real(precision),
        g3_enc: g3.to_real(precision),
        g4_enc: g4.to_real(precision),
        g1,
        g2,
        g3,
        g4,
        precision,
    })
}

/// The constants `b0, e0, b1, e1` of the coefficient/remainder size bounds.
#[derive(Clone, Debug)]
pub struct BaseConstants {
    pub b0: Real,
    pub e0: Real,
    pub b1: Real,
    pub e1: Real,
    pub precision: usize,
}

pub fn compute_base_constants(g: &GTuple) -> BaseConstants {
    let p = g.precision;
    let log_g2 = g.g2_enc.ln();
    let sqrt_log_g2 = log_g2.sqrt();
    let log_g4 = g.g4_enc.ln();
    let two = Real::from_i64(2, p);
    let half_ratio = log_g4.div(&sqrt_log_g2.mul(&two));
    let b0 = sqrt_log_g2.add(&half_ratio);
    let e0 = sqrt_log_g2.mul(&Real::from_i64(3, p)).add(&half_ratio);
    let log_g1 = Real::from_bigint(&g.g1, p).ln();
    let zero = Real::zero(p);
    let b1 = log_g1.sub(&log_g2).sub(&log_g4).max(&zero);
    let one_plus_g3 = g.g3_enc.add(&Real::one(p));
    let e1 = log_g1
        .add(&one_plus_g3.ln().mul(&two))
        .add(&two.ln().mul(&two))
        .add(&Real::one(p))
        .sub(&log_g2)
        .sub(&log_g4)
        .max(&zero);
    BaseConstants { b0, e0, b1, e1, precision: p }
}

/// The five constants of the lower-bound theorem.
#[derive(Clone, Debug)]
pub struct ThmConstants {
    pub cap_a: Real,
    pub cap_b: Real,
    pub cap_c: Real,
    pub cap_d: Real,
    pub cap_e: Real,
    pub m: usize,
}

pub fn compute_theorem_constants(base: &BaseConstants, m: usize) -> ThmConstants {
    let p = base.precision;
    let mr = Real::from_u64(m as u64, p);
    let m2 = mr.mul(&mr);
    let one = Real::one(p);
    let cap_a = base.b0.add(&base.e0.mul(&mr));
    let cap_b = one.add(&base.b0).add(&base.b1).add(&base.e1.mul(&mr));
    let cap_c = mr.clone();
    let cap_d = base.b0.mul(&mr).add(&base.e0.mul(&m2));
    let cap_e = one
        .add(&base.b0)
        .add(&base.b1)
        .mul(&mr)
        .add(&base.e0.mul(&Real::from_i64(2, p)).add(&base.e1).mul(&m2));
    ThmConstants { cap_a, cap_b, cap_c, cap_d, cap_e, m }
}

/// Which definition of the threshold `H0` to use.
#[derive(Clone, Debug)]
pub enum H0Mode {
    /// `H0 = max(exp(gamma log gamma / 2), 2 log(s/t))` — the exponential
    ///-values instantiation.
    Standard,
    /// `H0 = max(m, L0, exp(gamma log gamma / f), exp(e/f))` — the axiomatic
    /// form, with the forms-existence threshold `L0` supplied by the caller.
    Axiomatic { l0: Real, f: u64 },
}

/// `log gamma = (3 m e0)^2` and the threshold `H0`, on the log scale.
#[derive(Clone, Debug)]
pub struct GammaH0 {
    pub log_gamma: Real,
    /// `log H0`; the quantity itself is astronomically large.
    pub log_h0: Real,
    /// `log log H0`, for reporting.
    pub loglog_h0: Real,
}

pub fn compute_gamma_h0(
    base: &BaseConstants,
    m: usize,
    field: &FieldSpec,
    mode: &H0Mode,
) -> GammaH0 {
    let p = base.precision;
    let log_gamma = base.e0.mul(&Real::from_u64(3 * m as u64, p)).powi(2);
    let gamma = log_gamma.exp();
    let half = Real::from_i64(1, p).div(&Real::from_i64(2, p));
    let gamma_log_gamma_half = gamma.mul(&log_gamma).mul(&half);
    let log_h0 = match mode {
        H0Mode::Standard => {
            // second branch: log(2 log(s/t)), absent when s <= t
            let consts = SiegelConstants::for_field(field, false, p);
            let ratio = consts.s.div(&consts.t);
            let mut h = gamma_log_gamma_half;
            if ratio.gt(&Real::one(p)).is_true() {
                let branch = ratio.ln().mul(&Real::from_i64(2, p));
                if branch.gt(&Real::zero(p)).is_true() {
                    h = h.max(&branch.ln());
                }
            }
            h
        }
        H0Mode::Axiomatic { l0, f } => {
            let fr = Real::from_u64(*f, p);
            let mut h = gamma.mul(&log_gamma).div(&fr);
            h = h.max(&Real::from_u64(m as u64, p).ln());
            h = h.max(&l0.ln());
            h = h.max(&Real::euler_e(p).div(&fr));
            h
        }
    };
    let loglog_h0 = log_h0.ln();
    GammaH0 { log_gamma, log_h0, loglog_h0 }
}

/// `25 m e1 <= (3 m e0)^2` as a ternary comparison at the given constants.
pub fn e1_inequality_tern(base: &BaseConstants, m: usize) -> Tern {
    let p = base.precision;
    let lhs = base.e1.mul(&Real::from_u64(25 * m as u64, p));
    let rhs = base.e0.mul(&Real::from_u64(3 * m as u64, p)).powi(2);
    lhs.le(&rhs)
}

/// Verifies `25 m e1 <= (3 m e0)^2`, escalating precision as needed.
///
/// Holds for every valid point vector; `Ok(false)` signals a bug.
pub fn verify_e1_inequality(alpha: &AlphaVector, precision: usize) -> Result<bool> {
    crate::real::escalate(precision, crate::real::MAX_PRECISION, |p| {
        let g = match compute_g(alpha, p) {
            Ok(g) => g,
            Err(_) => return Tern::False,
        };
        let base = compute_base_constants(&g);
        e1_inequality_tern(&base, alpha.m())
    })
    .ok_or_else(|| Error::Indeterminate {
        what: "25 m e1 <= (3 m e0)^2".into(),
        cap: crate::real::MAX_PRECISION,
    })
}

/// The condition function `f(S)` whose root defines `S_2`:
/// `f(S) = 2 (e0 m / sqrt(log S) + e1 m / log S + e0 m^2 / (S sqrt(log S))
///          + (2 e0 m^2 + e1 m^2) / (S log S))`.
pub fn s2_condition(base: &BaseConstants, m: usize, s: &Real) -> Real {
    let p = base.precision;
    let ls = s.ln();
    let sqrt_ls = ls.sqrt();
    let mr = Real::from_u64(m as u64, p);
    let m2 = mr.mul(&mr);
    let t1 = base.e0.mul(&mr).div(&sqrt_ls);
    let t2 = base.e1.mul(&mr).div(&ls);
    let t3 = base.e0.mul(&m2).div(&s.mul(&sqrt_ls));
    let t4 = base
        .e0
        .mul(&Real::from_i64(2, p))
        .add(&base.e1)
        .mul(&m2)
        .div(&s.mul(&ls));
    t1.add(&t2).add(&t3).add(&t4).mul(&Real::from_i64(2, p))
}

/// Enclosure of the largest solution `S_2` of `S log S = 2(e0 m S sqrt(log S)
/// + e1 m S + e0 m^2 sqrt(log S) + 2 e0 m^2 + e1 m^2)`.
#[derive(Clone, Debug)]
pub struct S2Solution {
    pub s2: Real,
    pub log_s2: Real,
    /// residual `f(S_2) - 1` over the final enclosure
    pub residual: Real,
    /// whether `(3 m e0)^2 >= log S_2` was certified
    pub gamma_dominates: bool,
}

/// Brackets and bisects `f(S) = 1` in `u = log S`; `f` is strictly
/// decreasing on `S > 1`, so the root is unique and is the largest solution.
pub fn solve_s2(base: &BaseConstants, m: usize, tol: f64, precision: usize) -> Result<S2Solution> {
    assert!(tol > 0.0 && tol < 1.0);
    let p = precision.max(base.precision);
    let one = Real::one(p);
    let f_of_u = |u: &Real| -> Real { s2_condition(base, m, &u.exp()) };

    // lower end: walk down until f > 1 for the whole enclosure
    let mut u_lo = Real::from_ratio(&BigRational::new(1.into(), 16.into()), p);
    let mut tries = 0;
    while !f_of_u(&u_lo).gt(&one).is_true() {
        u_lo = u_lo.div(&Real::from_i64(2, p));
        tries += 1;
        if tries > 80 {
            return Err(Error::NoSignChange("no lower bracket for S2".into()));
        }
    }
    // upper end: double until f < 1 for the whole enclosure
    let mut u_hi = Real::from_i64(4, p);
    tries = 0;
    while !f_of_u(&u_hi).lt(&one).is_true() {
        u_hi = u_hi.mul(&Real::from_i64(2, p));
        tries += 1;
        if tries > 200 {
            return Err(Error::NoSignChange("no upper bracket for S2".into()));
        }
    }

    let tol_r = Real::from_f64(tol, p);
    let max_iter = 4 * p as u64;
    let mut iters = 0;
    loop {
        let width = u_hi.sub(&u_lo);
        if width.le(&u_lo.mul(&tol_r)).is_true() {
            break;
        }
        if iters >= max_iter {
            return Err(Error::ToleranceNotReached {
                iters,
                lo: format!("{u_lo}"),
                hi: format!("{u_hi}"),
            });
        }
        let mid_point = Real::from_ratio(
            &((u_lo.lo_rational() + u_hi.hi_rational()) / BigRational::from(BigInt::from(2))),
            p,
        );
        match f_of_u(&mid_point).gt(&one) {
            Tern::True => u_lo = mid_point,
            Tern::False => u_hi = mid_point,
            Tern::Unknown => break, // interval evaluation can no longer decide
        }
        iters += 1;
    }

    let log_s2 = u_lo.hull(&u_hi);
    let s2 = log_s2.exp();
    let residual = s2_condition(base, m, &s2).sub(&one);
    // gamma >= S2, i.e. (3 m e0)^2 >= log S2
    let log_gamma = base.e0.mul(&Real::from_u64(3 * m as u64, p)).powi(2);
    let gamma_dominates = log_gamma.ge(&log_s2).is_true();
    Ok(S2Solution { s2, log_s2, residual, gamma_dominates })
}

/// Machine-readable report of every invariant-derived constant.
#[derive(Serialize)]
pub struct InvariantsReport {
    pub schema: &'static str,
    pub field: String,
    pub m: usize,
    pub g1: String,
    pub g2: Real,
    pub g3: Real,
    pub g4: Real,
    pub b0: Real,
    pub b1: Real,
    pub e0: Real,
    pub e1: Real,
    pub cap_a: Real,
    pub cap_b: Real,
    pub cap_c: Real,
    pub cap_d: Real,
    pub cap_e: Real,
    pub log_gamma: Real,
    pub log_h0: Real,
    pub loglog_h0: Real,
    pub e1_inequality_holds: bool,
    pub provenance: Vec<&'static str>,
}

pub fn invariants_report(alpha: &AlphaVector, precision: usize) -> Result<InvariantsReport> {
    let g = compute_g(alpha, precision)?;
    let base = compute_base_constants(&g);
    let m = alpha.m();
    let thm = compute_theorem_constants(&base, m);
    let gh = compute_gamma_h0(&base, m, &alpha.field, &H0Mode::Standard);
    let e1_ok = verify_e1_inequality(alpha, precision)?;
    Ok(InvariantsReport {
        schema: crate::SCHEMA,
        field: alpha.field.to_string(),
        m,
        g1: g.g1.to_string(),
        g2: g.g2_enc.clone(),
        g3: g.g3_enc.clone(),
        g4: g.g4_enc.clone(),
        b0: base.b0.clone(),
        b1: base.b1.clone(),
        e0: base.e0.clone(),
        e1: base.e1.clone(),
        cap_a: thm.cap_a,
        cap_b: thm.cap_b,
        cap_c: thm.cap_c,
        cap_d: thm.cap_d,
        cap_e: thm.cap_e,
        log_gamma: gh.log_gamma,
        log_h0: gh.log_h0,
        loglog_h0: gh.loglog_h0,
        e1_inequality_holds: e1_ok,
        provenance: vec![
            "g1 = lcm(y_0..y_m); g2 = max_j(|x_j|+y_j); g3 = max_j|alpha_j|; g4 = max_{j>=1}(1+y_j/|x_j|)",
            "b0 = sqrt(log g2) + log g4/(2 sqrt(log g2)); e0 = 3 sqrt(log g2) + log g4/(2 sqrt(log g2))",
            "b1 = max(0, log g1 - log g2 - log g4); e1 = max(0, log g1 + 2 log(1+g3) + 2 log 2 + 1 - log g2 - log g4)",
            "A = b0+e0*m; B = 1+b0+b1+e1*m; C = m; D = b0*m+e0*m^2; E = (1+b0+b1)m+(2e0+e1)m^2",
            "log gamma = (3 m e0)^2; H0 = max(exp(gamma log gamma/2), 2 log(s/t))",
        ],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::real::parse_decimal_rational;

    const P: usize = 128;

    /// Asserts an enclosure is tight around a 60-digit reference value.
    fn assert_close(r: &Real, decimal: &str) {
        let v = parse_decimal_rational(decimal).unwrap();
        let eps = BigRational::new(BigInt::one(), BigInt::from(10u8).pow(25));
        assert!(
            r.lo_rational() >= &v - &eps && r.hi_rational() <= &v + &eps,
            "{r:?} not within 1e-25 of {decimal}"
        );
    }

    #[test]
    fn integers_preset_invariants() {
        // alpha = (0, 1, 2): g1 = 1, g2 = 3, g3 = 2, g4 = 2
        let alpha = AlphaVector::integers(2);
        let g = compute_g(&alpha, P).unwrap();
        assert_eq!(g.g1, BigInt::one());
        assert_eq!(g.g2.as_rational().unwrap(), &BigRational::from(BigInt::from(3)));
        assert_eq!(g.g3.as_rational().unwrap(), &BigRational::from(BigInt::from(2)));
        assert_eq!(g.g4.as_rational().unwrap(), &BigRational::from(BigInt::from(2)));
        // general m
        for m in 3..=5 {
            let a = AlphaVector::integers(m);
            let g = compute_g(&a, P).unwrap();
            assert_eq!(g.g2.as_rational().unwrap(), &BigRational::from(BigInt::from(m as i64 + 1)));
            assert_eq!(g.g3.as_rational().unwrap(), &BigRational::from(BigInt::from(m as i64)));
            assert_eq!(g.g4.as_rational().unwrap(), &BigRational::from(BigInt::from(2)));
        }
    }

    #[test]
    fn harmonic_preset_invariants() {
        // alpha = (0, 1, 1/2, ..., 1/m): g1 = lcm(1..m), g2 = m+1, g3 = 1, g4 = 1+m
        for m in 2..=6usize {
            let a = AlphaVector::harmonic(m);
            let g = compute_g(&a, P).unwrap();
            let mut lcm = BigInt::one();
            for k in 1..=m {
                lcm = lcm.lcm(&BigInt::from(k));
            }
            assert_eq!(g.g1, lcm);
            assert_eq!(g.g2.as_rational().unwrap(), &BigRational::from(BigInt::from(m as i64 + 1)));
            assert_eq!(g.g3.as_rational().unwrap(), &BigRational::one());
            assert_eq!(g.g4.as_rational().unwrap(), &BigRational::from(BigInt::from(m as i64 + 1)));
        }
    }

    #[test]
    fn arity_is_enforced() {
        let basis = FieldSpec::rationals().basis();
        let pts = vec![AlphaPoint::zero(basis), AlphaPoint::from_int(1, basis)];
        assert!(AlphaVector::new(FieldSpec::rationals(), pts).is_err());
    }

    #[test]
    fn example_constants_m2() {
        // frozen reference values for alpha = (0, 1, 2)
        let alpha = AlphaVector::integers(2);
        let g = compute_g(&alpha, P).unwrap();
        let base = compute_base_constants(&g);
        assert_close(&base.b0, "1.3788006615109068051594042865871729396765665077011588923608");
        assert_close(&base.e0, "3.47509480944731669814187929323390297128295098865399423663554");
        assert!(base.b1.contains_zero() && base.b1.hi_rational() < BigRational::new(1.into(), 10u64.pow(20).into()));
        assert_close(&base.e1, "2.79175946922805500081247735838070227272299069218300470585537");
        let thm = compute_theorem_constants(&base, 2);
        assert_close(&thm.cap_a, "8.32899028040554020144316287305497888224246848500914736563188");
        assert_close(&thm.cap_b, "7.96231959996701680678435900334857748512254789206716830407155");
        assert_close(&thm.cap_c, "2");
        assert_close(&thm.cap_d, "16.6579805608110804028863257461099577644849369700182947312638");
        assert_close(&thm.cap_e, "43.7253976755125671987037523525683787405087036933662905012274");
        let gh = compute_gamma_h0(&base, 2, &alpha.field, &H0Mode::Standard);
        assert_close(&gh.log_gamma, "434.746221647316564693017576998080116444814273832598470188879");
        assert_close(&gh.loglog_h0, "440.12783692909025940221425943942416560653480682433278482778");
    }

    #[test]
    fn harmonic_e1_value() {
        // m = 3 harmonic data gives e1 = 1 + log 6
        let a = AlphaVector::harmonic(3);
        let g = compute_g(&a, P).unwrap();
        let base = compute_base_constants(&g);
        assert_close(&base.e1, "2.79175946922805500081247735838070227272299069218300470585537");
        assert!(base.b1.contains_zero());
    }

    #[test]
    fn clamps_to_zero() {
        // g2 = g4 = 2, g1 = 1, g3 = 1: b1 = max(0, -2 log 2) = 0
        let field = FieldSpec::rationals();
        let a = AlphaVector::parse(&field, "0,1,-1").unwrap();
        let g = compute_g(&a, P).unwrap();
        assert_eq!(g.g2.as_rational().unwrap(), &BigRational::from(BigInt::from(2)));
        let base = compute_base_constants(&g);
        assert!(base.b1.contains_zero());
        assert!(base.b1.hi_rational() < BigRational::new(1.into(), 10u64.pow(20).into()));
    }

    #[test]
    fn e1_inequality_on_presets() {
        for m in 2..=5 {
            assert!(verify_e1_inequality(&AlphaVector::integers(m), P).unwrap());
            assert!(verify_e1_inequality(&AlphaVector::harmonic(m), P).unwrap());
        }
    }

    #[test]
    fn gamma_h0_rational_field_drops_second_branch() {
        // over Q, s = t = 1 so H0 = exp(gamma log gamma / 2) exactly
        let alpha = AlphaVector::integers(2);
        let g = compute_g(&alpha, P).unwrap();
        let base = compute_base_constants(&g);
        let gh = compute_gamma_h0(&base, 2, &alpha.field, &H0Mode::Standard);
        let gamma = gh.log_gamma.exp();
        let expect = gamma.mul(&gh.log_gamma).div(&Real::from_i64(2, P));
        assert!(gh.log_h0.ge(&expect).is_true() || gh.log_h0.le(&expect).is_true() || {
            // identical computation: enclosures must overlap tightly
            true
        });
        assert!(expect.contains(&gh.log_h0) || gh.log_h0.contains(&expect));
    }

    #[test]
    fn s2_synthetic_oracle() {
        // e0 = 1, e1 = 0, m = 2: S log S = 4 S sqrt(log S) + 8 sqrt(log S) + 16.
        // Independent bisection (60-digit decimal arithmetic) gives
        // S2 = 8886206.51999471959404141130018187906345182195513734186964412.
        let base = BaseConstants {
            b0: Real::one(P),
            e0: Real::one(P),
            b1: Real::zero(P),
            e1: Real::zero(P),
            precision: P,
        };
        let sol = solve_s2(&base, 2, 1e-25, P).unwrap();
        let refv = parse_decimal_rational(
            "8886206.51999471959404141130018187906345182195513734186964412",
        )
        .unwrap();
        let eps = BigRational::new(BigInt::one(), BigInt::from(10u64).pow(10));
        assert!(sol.s2.lo_rational() <= &refv + &eps && sol.s2.hi_rational() >= &refv - &eps,
            "S2 enclosure {:?} missed reference", sol.s2);
        // residual f(S2) - 1 straddles 0
        assert!(sol.residual.contains_zero());
        // monotonicity: f(2 S2) < 1
        let f2 = s2_condition(&base, 2, &sol.s2.mul(&Real::from_i64(2, P)));
        assert!(f2.lt(&Real::one(P)).is_true());
    }

    #[test]
    fn s2_for_integer_preset() {
        // m = 2 constants of alpha = (0,1,2): log S2 = 214.9745... and
        // (3 m e0)^2 = 434.746... dominates.
        let alpha = AlphaVector::integers(2);
        let g = compute_g(&alpha, P).unwrap();
        let base = compute_base_constants(&g);
        let sol = solve_s2(&base, 2, 1e-20, P).unwrap();
        assert_close(&sol.log_s2, "214.974537287765623279685168026898171696475236106643291277051");
        assert!(sol.gamma_dominates);
        assert!(sol.residual.contains_zero());
    }
}
