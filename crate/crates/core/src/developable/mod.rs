//! Ruled patches `b(u, v) = (1 - v) c(u) + v d(u)` bounded by two Bézier
//! curves of equal degree, and their developability certificates.
//!
//! A certificate is the pair of rational functions `(Lambda, M)` with
//! `c[u^<n-1>, Lambda(u)] = d[u^<n-1>, M(u)]`: the lines through the
//! penultimate de Casteljau points of `c` and of `d` meet, and `Lambda`, `M`
//! are the affine coordinates of the meeting point on each line.

mod certify;
mod classify;
mod edge;

pub use certify::{certify, pointwise_certificate, Certification, PointwiseCertificate};
pub use classify::{classify, SurfaceClass};
pub use edge::{edge_curve, edge_evaluate, edge_parameter, singular_interval};

use crate::bezier::BezierCurve;
use crate::error::{Error, Result};
use crate::geom::{bbox_diagonal, Point3, Vec3};
use crate::poly::{Polynomial, RationalFunction};

/// The functions `(Lambda, M)` coupling the blossoms of the boundary curves.
#[derive(Clone, Debug, PartialEq)]
pub struct Certificate {
    pub lambda_fn: RationalFunction,
    pub m_fn: RationalFunction,
}

impl Certificate {
    pub fn new(lambda_fn: RationalFunction, m_fn: RationalFunction) -> Self {
        Certificate { lambda_fn, m_fn }
    }

    pub fn constant(lambda: f64, m: f64) -> Self {
        Certificate::new(lambda.into(), m.into())
    }

    /// `(Lambda, M)` when both are constants.
    pub fn constants(&self) -> Option<(f64, f64)> {
        Some((
            self.lambda_fn.constant_value()?,
            self.m_fn.constant_value()?,
        ))
    }

    /// True when `Lambda - M` is the zero function (the cylinder case).
    pub fn is_cylinder(&self) -> bool {
        (&self.lambda_fn - &self.m_fn).is_zero()
    }

    pub fn eval(&self, u: f64) -> Result<(f64, f64)> {
        Ok((self.lambda_fn.eval(u)?, self.m_fn.eval(u)?))
    }

    pub fn approx_eq(&self, o: &Certificate, tol: f64) -> bool {
        self.lambda_fn.approx_eq(&o.lambda_fn, tol) && self.m_fn.approx_eq(&o.m_fn, tol)
    }
}

/// Coefficients of `c'(u) = lambda(u) v(u) + mu(u) v'(u)`.
#[derive(Clone, Debug, PartialEq)]
pub struct LambdaMu {
    pub lambda: RationalFunction,
    pub mu: RationalFunction,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DevelopablePatch {
    c: BezierCurve,
    d: BezierCurve,
    certificate: Option<Certificate>,
}

impl DevelopablePatch {
    /// Ruled patch without a certificate; nothing about developability is assumed.
    pub fn new(c: BezierCurve, d: BezierCurve) -> Result<Self> {
        if c.degree() != d.degree() {
            return Err(Error::DegreeMismatch {
                c: c.degree(),
                d: d.degree(),
            });
        }
        if c.degree() == 0 {
            return Err(Error::InvalidArgument(
                "boundary curves must have degree at least 1".into(),
            ));
        }
        Ok(DevelopablePatch {
            c,
            d,
            certificate: None,
        })
    }

    /// Attaches a certificate without checking it; see
    /// [`crate::verify::blossom_coupling_residual`] for the check.
    pub fn with_certificate(mut self, certificate: Option<Certificate>) -> Self {
        self.certificate = certificate;
        self
    }

    pub fn c(&self) -> &BezierCurve {
        &self.c
    }

    pub fn d(&self) -> &BezierCurve {
        &self.d
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        self.certificate.as_ref()
    }

    pub fn degree(&self) -> usize {
        self.c.degree()
    }

    pub fn point(&self, u: f64, v: f64) -> Point3 {
        self.c.point(u).lerp(&self.d.point(u), v)
    }

    /// `b_u = (1 - v) c'(u) + v d'(u)`
    pub fn partial_u(&self, u: f64, v: f64) -> Vec3 {
        self.c.derivative_at(u) * (1.0 - v) + self.d.derivative_at(u) * v
    }

    /// `b_v = d(u) - c(u)`
    pub fn partial_v(&self, u: f64) -> Vec3 {
        self.d.point(u) - self.c.point(u)
    }

    /// Control vectors `d_i - c_i` of the ruling generator.
    pub fn ruling_curve(&self) -> BezierCurve {
        self.c.difference_to(&self.d).expect("equal degrees")
    }

    /// Bounding-box diagonal of both control polygons; the length scale used
    /// to normalize residuals.
    pub fn scale(&self) -> f64 {
        bbox_diagonal(self.c.points().iter().chain(self.d.points()))
    }

    pub fn into_parts(self) -> (BezierCurve, BezierCurve, Option<Certificate>) {
        (self.c, self.d, self.certificate)
    }
}

/// Free-function form of [`DevelopablePatch::new`].
pub fn make_patch(c: BezierCurve, d: BezierCurve) -> Result<DevelopablePatch> {
    DevelopablePatch::new(c, d)
}

/// Builds the developable net with constant `(Lambda, M)` from one full
/// boundary polygon and one free point of the other.
///
/// Every cell satisfies `(1 - Lambda) c_i + Lambda c_{i+1} = (1 - M) d_i + M d_{i+1}`.
/// With `M != 0` the free point is `d_0` and the recurrence runs forward.
/// With `M = 0` the cells fix `d_0..d_{n-1}` directly and `free_point` is
/// taken as `d_n`.
pub fn aumann_construct(
    c: &BezierCurve,
    free_point: Point3,
    lambda: f64,
    m: f64,
) -> Result<DevelopablePatch> {
    if !(lambda.is_finite() && m.is_finite() && free_point.is_finite()) {
        return Err(Error::NonFinite);
    }
    if lambda == m {
        return Err(Error::CylinderCertificate);
    }
    let n = c.degree();
    if n == 0 {
        return Err(Error::InvalidArgument(
            "boundary curve must have degree at least 1".into(),
        ));
    }
    let cp = c.points();
    let cell = |i: usize| cp[i].lerp(&cp[i + 1], lambda);
    let d: Vec<Point3> = if m == 0.0 {
        (0..n)
            .map(cell)
            .chain(std::iter::once(free_point))
            .collect()
    } else {
        let mut d = Vec::with_capacity(n + 1);
        d.push(free_point);
        for i in 0..n {
            let next = (cell(i) - d[i] * (1.0 - m)) / m;
            d.push(next);
        }
        d
    };
    let d = BezierCurve::new(d)?;
    Ok(DevelopablePatch::new(c.clone(), d)?
        .with_certificate(Some(Certificate::constant(lambda, m))))
}

/// `lambda = n / (Lambda - M)`, `mu = (M - u) / (Lambda - M)`.
pub fn lm_to_lambdamu(cert: &Certificate, n: usize) -> Result<LambdaMu> {
    let diff = &cert.lambda_fn - &cert.m_fn;
    if diff.is_zero() {
        return Err(Error::CylinderCertificate);
    }
    let lambda = RationalFunction::constant(n as f64).checked_div(&diff)?;
    let mu = cert
        .m_fn
        .add_poly(&Polynomial::linear(0.0, -1.0))
        .checked_div(&diff)?;
    Ok(LambdaMu { lambda, mu })
}

/// `Lambda = (n (mu + 1) + u lambda) / lambda`, `M = (n mu + u lambda) / lambda`.
pub fn lambdamu_to_lm(lm: &LambdaMu, n: usize) -> Result<Certificate> {
    if lm.lambda.is_zero() {
        return Err(Error::InvalidArgument("lambda is identically zero".into()));
    }
    let nf = n as f64;
    let u_lambda = lm.lambda.mul_poly(&Polynomial::identity());
    let m_num = &lm.mu.scale(nf) + &u_lambda;
    let lambda_num = m_num.add_poly(&Polynomial::constant(nf));
    Ok(Certificate::new(
        lambda_num.checked_div(&lm.lambda)?,
        m_num.checked_div(&lm.lambda)?,
    ))
}
