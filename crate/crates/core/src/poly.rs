//! Univariate polynomials in the monomial and Bernstein bases, and rational
//! functions built from them.
//!
//! Monomial polynomials are kept trimmed: any leading coefficient whose
//! magnitude is at most [`TRIM_TOL`] is dropped. Rational functions keep a
//! monic denominator.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Absolute threshold below which leading monomial coefficients are dropped.
pub const TRIM_TOL: f64 = 1e-12;

/// Default absolute threshold on `|den(u)|` for reporting a pole.
pub const POLE_TOL: f64 = 1e-12;

/// Binomial coefficient as a float.
pub fn binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    let mut r = 1.0;
    for i in 0..k {
        r = r * (n - i) as f64 / (i + 1) as f64;
    }
    r.round()
}

/// Polynomial in the monomial basis, coefficients in ascending powers of `u`.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct Polynomial {
    coeffs: Vec<f64>,
}

impl Polynomial {
    pub fn new(coeffs: Vec<f64>) -> Self {
        let mut p = Polynomial { coeffs };
        p.trim();
        p
    }

    /// Like [`Polynomial::new`] but rejects non-finite coefficients.
    pub fn try_new(coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.iter().all(|c| c.is_finite()) {
            Ok(Polynomial::new(coeffs))
        } else {
            Err(Error::NonFinite)
        }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: f64) -> Self {
        Polynomial::new(vec![c])
    }

    /// The identity polynomial `u`.
    pub fn identity() -> Self {
        Polynomial::new(vec![0.0, 1.0])
    }

    /// `c0 + c1 * u`
    pub fn linear(c0: f64, c1: f64) -> Self {
        Polynomial::new(vec![c0, c1])
    }

    fn trim(&mut self) {
        while let Some(&last) = self.coeffs.last() {
            if last.abs() <= TRIM_TOL {
                self.coeffs.pop();
            } else {
                break;
            }
        }
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Coefficient of `u^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> f64 {
        self.coeffs.get(k).copied().unwrap_or(0.0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading_coeff(&self) -> f64 {
        self.coeffs.last().copied().unwrap_or(0.0)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn eval(&self, u: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * u + c)
    }

    pub fn derivative(&self) -> Polynomial {
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| k as f64 * c)
                .collect(),
        )
    }

    pub fn scale(&self, s: f64) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn pow(&self, e: usize) -> Polynomial {
        let mut acc = Polynomial::constant(1.0);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `self(q(u))`, by Horner's scheme over polynomial products.
    pub fn compose(&self, q: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero();
        for &c in self.coeffs.iter().rev() {
            acc = &(&acc * q) + &Polynomial::constant(c);
        }
        acc
    }

    /// Coefficients `t_k` with `self(u) = sum t_k (u - a)^k`, returned as the
    /// polynomial `t -> self(t + a)`.
    pub fn taylor_shift(&self, a: f64) -> Polynomial {
        let mut t = self.coeffs.clone();
        let n = t.len();
        // repeated synthetic division by (u - a)
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                t[j] += a * t[j + 1];
            }
        }
        Polynomial::new(t)
    }

    /// Bernstein coefficients of degree `degree`.
    pub fn to_bernstein(&self, degree: usize) -> Result<BernsteinPoly> {
        if !self.is_zero() && self.degree() > degree {
            return Err(Error::DegreeTooLow {
                requested: degree,
                actual: self.degree(),
            });
        }
        let coeffs = (0..=degree)
            .map(|i| {
                (0..=i.min(self.degree()))
                    .map(|j| binomial(i, j) / binomial(degree, j) * self.coeff(j))
                    .sum()
            })
            .collect();
        Ok(BernsteinPoly { coeffs })
    }

    /// Coefficientwise comparison, absolute tolerance.
    pub fn approx_eq(&self, other: &Polynomial, tol: f64) -> bool {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n).all(|k| (self.coeff(k) - other.coeff(k)).abs() <= tol)
    }

    /// Largest coefficient magnitude.
    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, c| m.max(c.abs()))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, o: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(o.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, o: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(o.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) - o.coeff(k)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, o: &Polynomial) -> Polynomial {
        if self.is_zero() || o.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![0.0; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(-1.0)
    }
}

macro_rules! forward_owned_binop {
    ($ty:ty, $tr:ident, $m:ident) => {
        impl $tr for $ty {
            type Output = $ty;
            fn $m(self, o: $ty) -> $ty {
                (&self).$m(&o)
            }
        }
    };
}

forward_owned_binop!(Polynomial, Add, add);
forward_owned_binop!(Polynomial, Sub, sub);
forward_owned_binop!(Polynomial, Mul, mul);

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0.0 {
                continue;
            }
            if !first {
                write!(f, " {} ", if c < 0.0 { '-' } else { '+' })?;
            } else if c < 0.0 {
                write!(f, "-")?;
            }
            first = false;
            let a = c.abs();
            match k {
                0 => write!(f, "{a}")?,
                1 => write!(f, "{a}u")?,
                _ => write!(f, "{a}u^{k}")?,
            }
        }
        Ok(())
    }
}

/// Polynomial in the Bernstein basis of a declared degree; always carries
/// exactly `degree + 1` coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct BernsteinPoly {
    coeffs: Vec<f64>,
}

impl BernsteinPoly {
    pub fn new(coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidArgument(
                "Bernstein polynomial needs at least one coefficient".into(),
            ));
        }
        if !coeffs.iter().all(|c| c.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(BernsteinPoly { coeffs })
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, u: f64) -> f64 {
        let mut b = self.coeffs.clone();
        for r in 1..b.len() {
            for i in 0..b.len() - r {
                b[i] = (1.0 - u) * b[i] + u * b[i + 1];
            }
        }
        b[0]
    }

    pub fn to_monomial(&self) -> Polynomial {
        let n = self.degree();
        let coeffs = (0..=n)
            .map(|j| {
                let s: f64 = (0..=j)
                    .map(|i| {
                        let sign = if (j - i) % 2 == 0 { 1.0 } else { -1.0 };
                        sign * binomial(j, i) * self.coeffs[i]
                    })
                    .sum();
                binomial(n, j) * s
            })
            .collect();
        Polynomial::new(coeffs)
    }

    /// Degree elevation by `m` steps.
    pub fn elevate(&self, m: usize) -> BernsteinPoly {
        let mut b = self.coeffs.clone();
        for _ in 0..m {
            let n = b.len() - 1;
            let np1 = (n + 1) as f64;
            let mut out = Vec::with_capacity(n + 2);
            out.push(b[0]);
            for i in 1..=n {
                let t = i as f64 / np1;
                out.push(t * b[i - 1] + (1.0 - t) * b[i]);
            }
            out.push(b[n]);
            b = out;
        }
        BernsteinPoly { coeffs: b }
    }

    /// Product in the Bernstein basis; the result has degree `p + q`.
    pub fn mul(&self, o: &BernsteinPoly) -> BernsteinPoly {
        let (p, q) = (self.degree(), o.degree());
        let mut out = vec![0.0; p + q + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += binomial(p, i) * binomial(q, j) * a * b;
            }
        }
        for (k, v) in out.iter_mut().enumerate() {
            *v /= binomial(p + q, k);
        }
        BernsteinPoly { coeffs: out }
    }
}

/// Quotient of two monomial polynomials with a monic denominator.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let lead = den.leading_coeff();
        Ok(RationalFunction {
            num: num.scale(1.0 / lead),
            den: den.scale(1.0 / lead),
        })
    }

    pub fn constant(c: f64) -> Self {
        RationalFunction::from_poly(Polynomial::constant(c))
    }

    pub fn from_poly(p: Polynomial) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::constant(1.0),
        }
    }

    pub fn identity() -> Self {
        RationalFunction::from_poly(Polynomial::identity())
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    /// `num(u) / den(u)`, or a pole error when `|den(u)| <= pole_tol`.
    pub fn eval_with_tol(&self, u: f64, pole_tol: f64) -> Result<f64> {
        let d = self.den.eval(u);
        if d.abs() <= pole_tol {
            return Err(Error::Pole { at: u });
        }
        Ok(self.num.eval(u) / d)
    }

    pub fn eval(&self, u: f64) -> Result<f64> {
        self.eval_with_tol(u, POLE_TOL)
    }

    /// The constant value when both numerator and denominator are constants.
    pub fn constant_value(&self) -> Option<f64> {
        if self.num.is_constant() && self.den.is_constant() {
            Some(self.num.coeff(0) / self.den.coeff(0))
        } else {
            None
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn scale(&self, s: f64) -> RationalFunction {
        RationalFunction {
            num: self.num.scale(s),
            den: self.den.clone(),
        }
    }

    pub fn add_poly(&self, p: &Polynomial) -> RationalFunction {
        RationalFunction {
            num: &self.num + &(p * &self.den),
            den: self.den.clone(),
        }
    }

    pub fn mul_poly(&self, p: &Polynomial) -> RationalFunction {
        RationalFunction {
            num: &self.num * p,
            den: self.den.clone(),
        }
    }

    pub fn checked_div(&self, o: &RationalFunction) -> Result<RationalFunction> {
        RationalFunction::new(&self.num * &o.den, &self.den * &o.num)
    }

    /// `self(h(u))` for a polynomial inner function. Fails only when a
    /// constant `h` sits on a root of the denominator.
    pub fn compose(&self, h: &Polynomial) -> Result<RationalFunction> {
        RationalFunction::new(self.num.compose(h), self.den.compose(h))
    }

    pub fn div_poly(&self, p: &Polynomial) -> Result<RationalFunction> {
        RationalFunction::new(self.num.clone(), &self.den * p)
    }

    /// Equality by cross multiplication: `p1 q2 - p2 q1` has every coefficient
    /// within `tol` (relative to the largest coefficient involved, at least 1).
    pub fn approx_eq(&self, o: &RationalFunction, tol: f64) -> bool {
        let lhs = &self.num * &o.den;
        let rhs = &o.num * &self.den;
        let scale = lhs.max_abs_coeff().max(rhs.max_abs_coeff()).max(1.0);
        lhs.approx_eq(&rhs, tol * scale)
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, o: &RationalFunction) -> RationalFunction {
        if self.den == o.den {
            return RationalFunction {
                num: &self.num + &o.num,
                den: self.den.clone(),
            };
        }
        RationalFunction::new(
            &(&self.num * &o.den) + &(&o.num * &self.den),
            &self.den * &o.den,
        )
        .expect("product of nonzero denominators")
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, o: &RationalFunction) -> RationalFunction {
        self + &o.scale(-1.0)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, o: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &o.num, &self.den * &o.den)
            .expect("product of nonzero denominators")
    }
}

forward_owned_binop!(RationalFunction, Add, add);
forward_owned_binop!(RationalFunction, Sub, sub);
forward_owned_binop!(RationalFunction, Mul, mul);

impl From<f64> for RationalFunction {
    fn from(c: f64) -> Self {
        RationalFunction::constant(c)
    }
}

impl From<Polynomial> for RationalFunction {
    fn from(p: Polynomial) -> Self {
        RationalFunction::from_poly(p)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() && self.den.coeff(0) == 1.0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[f64]) -> Polynomial {
        Polynomial::new(c.to_vec())
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(&p(&[1.0, 1.0]) * &p(&[-1.0, 1.0]), p(&[-1.0, 0.0, 1.0]));
    }

    #[test]
    fn product_with_zero_is_zero() {
        let q = &p(&[3.0, -2.0, 5.0]) * &Polynomial::zero();
        assert!(q.is_zero());
        assert_eq!(q.degree(), 0);
    }

    #[test]
    fn compose_square_with_shift() {
        let c = p(&[0.0, 0.0, 1.0]).compose(&p(&[1.0, 1.0]));
        assert!(c.approx_eq(&p(&[1.0, 2.0, 1.0]), 1e-15));
        // sampled-equality oracle
        for k in 0..10 {
            let u = -2.0 + 0.45 * k as f64;
            assert!((c.eval(u) - (u + 1.0) * (u + 1.0)).abs() < 1e-12);
        }
    }

    #[test]
    fn taylor_shift_examples() {
        assert_eq!(p(&[0.0, 0.0, 1.0]).taylor_shift(1.0), p(&[1.0, 2.0, 1.0]));
        let q = p(&[1.5, -2.0, 0.25, 7.0]);
        assert_eq!(q.taylor_shift(0.0), q);
        // u^3 - u about 2; the frozen value was checked by evaluating both forms
        // at u = 0, 1, 3
        let t = p(&[0.0, -1.0, 0.0, 1.0]).taylor_shift(2.0);
        assert_eq!(t, p(&[6.0, 11.0, 6.0, 1.0]));
        for u in [0.0, 1.0, 3.0] {
            let shifted: f64 = t.eval(u - 2.0);
            assert!((shifted - (u * u * u - u)).abs() < 1e-12);
        }
    }

    #[test]
    fn trims_tiny_leading_coefficients() {
        let q = p(&[1.0, 2.0, 1e-13]);
        assert_eq!(q.degree(), 1);
        assert!(p(&[1e-14]).is_zero());
    }

    #[test]
    fn bernstein_conversions() {
        let sq = p(&[0.0, 0.0, 1.0]).to_bernstein(2).unwrap();
        assert_eq!(sq.coeffs(), &[0.0, 0.0, 1.0]);
        let lin = p(&[0.0, 1.0]).to_bernstein(2).unwrap();
        assert_eq!(lin.coeffs(), &[0.0, 0.5, 1.0]);
        let twothirds = p(&[0.0, 2.0 / 3.0]).to_bernstein(2).unwrap();
        for (a, b) in twothirds.coeffs().iter().zip([0.0, 1.0 / 3.0, 2.0 / 3.0]) {
            assert!((a - b).abs() < 1e-15);
        }
    }

    #[test]
    fn linear_precision_for_any_degree() {
        for n in 1..10 {
            let b = Polynomial::identity().to_bernstein(n).unwrap();
            for (i, c) in b.coeffs().iter().enumerate() {
                assert!((c - i as f64 / n as f64).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn bernstein_degree_below_actual_is_an_error() {
        assert_eq!(
            p(&[1.0, 0.0, 0.0, 2.0]).to_bernstein(2),
            Err(Error::DegreeTooLow {
                requested: 2,
                actual: 3
            })
        );
    }

    #[test]
    fn bernstein_product_matches_monomial_product() {
        let a = p(&[1.0, -2.0, 0.5]);
        let b = p(&[0.25, 3.0]);
        let prod = a.to_bernstein(2).unwrap().mul(&b.to_bernstein(1).unwrap());
        assert!(prod.to_monomial().approx_eq(&(&a * &b), 1e-13));
    }

    #[test]
    fn rational_eval_examples() {
        assert_eq!(RationalFunction::constant(2.0).eval(0.3), Ok(2.0));
        let r = RationalFunction::new(p(&[0.0, 0.0, 1.0]), p(&[0.0, 1.0])).unwrap();
        assert!((r.eval(3.0).unwrap() - 3.0).abs() < 1e-15);
        assert_eq!(r.eval(0.0), Err(Error::Pole { at: 0.0 }));
        // (U^2 + 2) / U, a shifted certificate pushed through u = U^2
        let lam0 = p(&[2.0, 1.0]);
        let lam =
            RationalFunction::new(lam0.compose(&p(&[0.0, 0.0, 1.0])), p(&[0.0, 1.0])).unwrap();
        assert!((lam.eval(0.5).unwrap() - 4.5).abs() < 1e-15);
    }

    #[test]
    fn rational_normalizes_denominator() {
        let r = RationalFunction::new(p(&[2.0, 4.0]), p(&[1.0, 2.0])).unwrap();
        assert_eq!(r.den().leading_coeff(), 1.0);
        assert!(r.approx_eq(&RationalFunction::constant(2.0), 1e-15));
        assert_eq!(
            RationalFunction::new(p(&[1.0]), Polynomial::zero()),
            Err(Error::ZeroDenominator)
        );
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10.0);
        assert_eq!(binomial(10, 0), 1.0);
        assert_eq!(binomial(3, 4), 0.0);
        assert_eq!(binomial(20, 10), 184756.0);
    }
}
