//! Dense exact polynomials over field elements, plus the truncated power
//! series products needed by the approximant construction. No floating point
//! enters any routine here.

use crate::elem::FieldElem;
use crate::field::Basis;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Polynomial with exact field coefficients, lowest degree first.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Poly {
    pub coeffs: Vec<FieldElem>,
    pub basis: Basis,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("({c:?})t^{i}"))
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl Poly {
    pub fn new(mut coeffs: Vec<FieldElem>, basis: Basis) -> Self {
        while coeffs.last().is_some_and(FieldElem::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs, basis }
    }

    pub fn zero(basis: Basis) -> Self {
        Poly { coeffs: Vec::new(), basis }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Order of vanishing at `t = 0`, or `None` for the zero polynomial.
    pub fn ord(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn coeff(&self, i: usize) -> FieldElem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| FieldElem::zero(self.basis))
    }

    pub fn leading(&self) -> Option<&FieldElem> {
        self.coeffs.last()
    }

    pub fn add(&self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i).add(&rhs.coeff(i))).collect();
        Poly::new(coeffs, self.basis)
    }

    pub fn sub(&self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i).sub(&rhs.coeff(i))).collect();
        Poly::new(coeffs, self.basis)
    }

    pub fn neg(&self) -> Poly {
        Poly::new(self.coeffs.iter().map(FieldElem::neg).collect(), self.basis)
    }

    pub fn mul(&self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(self.basis);
        }
        let mut out = vec![FieldElem::zero(self.basis); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Poly::new(out, self.basis)
    }

    pub fn scale(&self, k: &FieldElem) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| c.mul(k)).collect(), self.basis)
    }

    pub fn scale_int(&self, k: &BigInt) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| c.scale_int(k)).collect(), self.basis)
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero(self.basis);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.scale_int(&BigInt::from(i)))
            .collect();
        Poly::new(coeffs, self.basis)
    }

    pub fn eval(&self, x: &FieldElem) -> FieldElem {
        let mut acc = FieldElem::zero(self.basis);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// Value at `t = 1`: the sum of the coefficients.
    pub fn eval_one(&self) -> FieldElem {
        let mut acc = FieldElem::zero(self.basis);
        for c in &self.coeffs {
            acc = acc.add(c);
        }
        acc
    }

    /// Keeps coefficients of `t^0 .. t^upto` inclusive.
    pub fn truncate(&self, upto: usize) -> Poly {
        let coeffs = self.coeffs.iter().take(upto + 1).cloned().collect();
        Poly::new(coeffs, self.basis)
    }

    /// Exact quotient by `t^k`; panics if the order is insufficient.
    pub fn div_tpow(&self, k: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        assert!(self.ord().unwrap() >= k, "order too small for division by t^{k}");
        Poly::new(self.coeffs[k..].to_vec(), self.basis)
    }
}

/// Coefficients of `a(t) * exp(alpha t)` through `t^upto`, exactly.
///
/// The factor `exp(alpha t)` contributes `alpha^n / n!`; everything stays in
/// exact rational coordinates.
pub fn exp_mul_coeffs(a: &Poly, alpha: &FieldElem, upto: usize) -> Vec<FieldElem> {
    let basis = a.basis;
    // powers alpha^n / n! for n = 0..upto
    let mut expc = Vec::with_capacity(upto + 1);
    expc.push(FieldElem::one(basis));
    for n in 1..=upto {
        let prev: &FieldElem = &expc[n - 1];
        expc.push(prev.mul(alpha).div_int(&BigInt::from(n)));
    }
    (0..=upto)
        .map(|n| {
            let mut acc = FieldElem::zero(basis);
            for h in 0..=n.min(a.coeffs.len().saturating_sub(1)) {
                let c = &a.coeffs[h];
                if !c.is_zero() {
                    acc = acc.add(&c.mul(&expc[n - h]));
                }
            }
            acc
        })
        .collect()
}

/// Exact determinant of a small square matrix of field elements, by Gaussian
/// elimination with exact division.
pub fn det_elems(mat: &[Vec<FieldElem>], basis: Basis) -> FieldElem {
    let n = mat.len();
    let mut m: Vec<Vec<FieldElem>> = mat.to_vec();
    let mut det = FieldElem::one(basis);
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero());
        let Some(pr) = pivot else {
            return FieldElem::zero(basis);
        };
        if pr != col {
            m.swap(pr, col);
            det = det.neg();
        }
        let pv = m[col][col].clone();
        det = det.mul(&pv);
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].div(&pv);
            for c in col..n {
                let sub = factor.mul(&m[col][c]);
                m[r][c] = m[r][c].sub(&sub);
            }
        }
    }
    det
}

/// Exact determinant of a small matrix of polynomials, by Laplace expansion.
pub fn det_polys(mat: &[Vec<Poly>], basis: Basis) -> Poly {
    let n = mat.len();
    if n == 0 {
        let one = FieldElem::one(basis);
        return Poly::new(vec![one], basis);
    }
    if n == 1 {
        return mat[0][0].clone();
    }
    let mut acc = Poly::zero(basis);
    for (j, top) in mat[0].iter().enumerate() {
        if top.is_zero() {
            continue;
        }
        let minor: Vec<Vec<Poly>> = mat[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let sub = top.mul(&det_polys(&minor, basis));
        acc = if j % 2 == 0 { acc.add(&sub) } else { acc.sub(&sub) };
    }
    acc
}

/// Incremental exact rank tracker for rows of field elements.
///
/// Rows are reduced against the stored echelon and kept when independent;
/// used by the greedy nonsingular index selection.
pub struct RankTracker {
    basis: Basis,
    echelon: Vec<(usize, Vec<FieldElem>)>, // (pivot column, reduced row)
    width: usize,
}

impl RankTracker {
    pub fn new(width: usize, basis: Basis) -> Self {
        RankTracker { basis, echelon: Vec::new(), width }
    }

    pub fn rank(&self) -> usize {
        self.echelon.len()
    }

    /// Returns true (and absorbs the row) if it increases the rank.
    pub fn try_add(&mut self, row: &[FieldElem]) -> bool {
        assert_eq!(row.len(), self.width);
        let mut r = row.to_vec();
        for (pc, er) in &self.echelon {
            if !r[*pc].is_zero() {
                let factor = r[*pc].div(&er[*pc]);
                for c in 0..self.width {
                    let sub = factor.mul(&er[c]);
                    r[c] = r[c].sub(&sub);
                }
            }
        }
        match r.iter().position(|c| !c.is_zero()) {
            None => false,
            Some(pc) => {
                self.echelon.push((pc, r));
                // keep echelon sorted by pivot for stable elimination
                self.echelon.sort_by_key(|(c, _)| *c);
                true
            }
        }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use num_rational::BigRational;
    use num_traits::{One, Zero};

    fn qp(coeffs: &[i64]) -> Poly {
        Poly::new(
            coeffs.iter().map(|&c| FieldElem::from_int(c, Basis::Rational)).collect(),
            Basis::Rational,
        )
    }

    #[test]
    fn arithmetic_and_degree() {
        let p = qp(&[1, 2, 3]); // 1 + 2t + 3t^2
        let q = qp(&[0, -2, -3]);
        assert_eq!(p.add(&q), qp(&[1]));
        assert_eq!(p.degree(), Some(2));
        assert_eq!(p.mul(&qp(&[0, 1])).ord(), Some(1));
        assert_eq!(p.derivative(), qp(&[2, 6]));
        assert_eq!(
            p.eval(&FieldElem::from_int(2, Basis::Rational)),
            FieldElem::from_int(17, Basis::Rational)
        );
        assert_eq!(p.eval_one(), FieldElem::from_int(6, Basis::Rational));
    }

    #[test]
    fn exp_series_matches_scaled_factorials() {
        // a(t) = 1, alpha = 1: coefficients must be 1/n!
        let one = qp(&[1]);
        let coeffs = exp_mul_coeffs(&one, &FieldElem::one(Basis::Rational), 5);
        let mut fact = BigRational::one();
        for (n, c) in coeffs.iter().enumerate() {
            if n > 0 {
                fact *= BigRational::from(num_bigint::BigInt::from(n));
            }
            assert_eq!(c.p, BigRational::one() / fact.clone());
        }
    }

    #[test]
    fn exp_series_product_rule() {
        // (1 + t) e^{2t}: coefficient of t^n is 2^n/n! + 2^{n-1}/(n-1)!
        let a = qp(&[1, 1]);
        let two = FieldElem::from_int(2, Basis::Rational);
        let coeffs = exp_mul_coeffs(&a, &two, 6);
        let mut fact = BigRational::one();
        let mut pow = BigRational::one();
        let mut prev_term = BigRational::zero();
        for (n, c) in coeffs.iter().enumerate() {
            if n > 0 {
                fact *= BigRational::from(num_bigint::BigInt::from(n));
                pow *= BigRational::from(num_bigint::BigInt::from(2));
            }
            let expect = pow.clone() / fact.clone() + prev_term.clone();
            assert_eq!(c.p, expect, "n={n}");
            prev_term = pow.clone() / fact.clone();
        }
    }

    #[test]
    fn determinants() {
        let basis = Basis::Rational;
        let m = vec![
            vec![FieldElem::from_int(2, basis), FieldElem::from_int(1, basis)],
            vec![FieldElem::from_int(7, basis), FieldElem::from_int(4, basis)],
        ];
        assert_eq!(det_elems(&m, basis), FieldElem::from_int(1, basis));
        // Vandermonde factor for (1, 2): a1*a2*(a2-a1) = 2 via poly det
        let pm = vec![
            vec![qp(&[0, 1]), qp(&[0, 0, 1])],
            vec![qp(&[0, 2]), qp(&[0, 0, 4])],
        ];
        let d = det_polys(&pm, basis);
        assert_eq!(d, qp(&[0, 0, 0, 2]));
    }

    #[test]
    fn det_in_gaussian_basis() {
        let basis = FieldSpec::imaginary_quadratic(1).unwrap().basis();
        let i = FieldElem::new(BigRational::zero(), BigRational::one(), basis);
        let one = FieldElem::one(basis);
        // det [[1, i], [i, 1]] = 1 - i^2 = 2
        let m = vec![vec![one.clone(), i.clone()], vec![i.clone(), one.clone()]];
        assert_eq!(det_elems(&m, basis), FieldElem::from_int(2, basis));
    }

    #[test]
    fn rank_tracker_detects_dependence() {
        let basis = Basis::Rational;
        let mut rt = RankTracker::new(3, basis);
        let r1: Vec<_> = [1, 2, 3].iter().map(|&c| FieldElem::from_int(c, basis)).collect();
        let r2: Vec<_> = [2, 4, 6].iter().map(|&c| FieldElem::from_int(c, basis)).collect();
        let r3: Vec<_> = [0, 1, 1].iter().map(|&c| FieldElem::from_int(c, basis)).collect();
        assert!(rt.try_add(&r1));
        assert!(!rt.try_add(&r2));
        assert!(rt.try_add(&r3));
        assert_eq!(rt.rank(), 2);
    }
}
