//! Constructors for the standard developable families. Each returns a patch
//! with its certificate attached; the attached certificates are trusted
//! and the test suite re-verifies them with the oracles in [`crate::verify`].

use crate::bezier::BezierCurve;
use crate::developable::{Certificate, DevelopablePatch};
use crate::error::{Error, Result};
use crate::geom::{Point3, Vec3};
use crate::poly::{Polynomial, RationalFunction};

/// Parameters of one family member; the boundary curve is supplied separately.
#[derive(Clone, Debug, PartialEq)]
pub enum FamilyParams {
    Cylinder {
        f: Polynomial,
        w: Vec3,
    },
    Cone {
        vertex: Point3,
        f: Polynomial,
    },
    Tangent {
        f: Polynomial,
    },
    /// The curve argument is the edge of regression `r`.
    FromEdge {
        b1: f64,
        b2: f64,
    },
    Family4 {
        a: f64,
        b: f64,
        big_a: f64,
        w: Vec3,
    },
}

impl FamilyParams {
    pub fn construct(&self, curve: &BezierCurve) -> Result<DevelopablePatch> {
        match self {
            FamilyParams::Cylinder { f, w } => cylinder(curve, *w, f),
            FamilyParams::Cone { vertex, f } => cone(curve, *vertex, f),
            FamilyParams::Tangent { f } => tangent_patch(curve, f),
            FamilyParams::FromEdge { b1, b2 } => from_edge_of_regression(curve, *b1, *b2),
            FamilyParams::Family4 { a, b, big_a, w } => family4(curve, *a, *b, *big_a, *w),
        }
    }
}

/// Cylinder `d = c + f w` with `deg f <= n`.
///
/// The common certificate function is `Lambda = M = u - n f / f'`; it does not
/// exist for constant `f` (a pure translation), in which case the patch is
/// returned without a certificate.
pub fn cylinder(c: &BezierCurve, w: Vec3, f: &Polynomial) -> Result<DevelopablePatch> {
    let n = c.degree();
    if w.norm() == 0.0 {
        return Err(Error::InvalidArgument(
            "cylinder direction w is zero".into(),
        ));
    }
    if f.is_zero() {
        return Err(Error::InvalidArgument(
            "cylinder factor f is identically zero".into(),
        ));
    }
    if f.degree() > n {
        return Err(Error::DegreeTooLow {
            requested: n,
            actual: f.degree(),
        });
    }
    let fb = f.to_bernstein(n)?;
    let d = BezierCurve::new(
        c.points()
            .iter()
            .zip(fb.coeffs())
            .map(|(p, fi)| *p + w * *fi)
            .collect(),
    )?;
    let cert = if f.is_constant() {
        None
    } else {
        let df = f.derivative();
        let lambda =
            RationalFunction::new(&(&Polynomial::identity() * &df) - &f.scale(n as f64), df)?;
        Some(Certificate::new(lambda.clone(), lambda))
    };
    Ok(DevelopablePatch::new(c.clone(), d)?.with_certificate(cert))
}

/// Cone with vertex `V`: `d = c + (c - V) f`, of degree `N = n + deg f`, with
///
/// ```text
/// Lambda = (f' u - N (f + f^2)) / f'
/// M      = (f' u - N f) / f'
/// ```
pub fn cone(c: &BezierCurve, vertex: Point3, f: &Polynomial) -> Result<DevelopablePatch> {
    if f.is_constant() {
        return Err(Error::InvalidArgument(
            "cone factor f must be non-constant (constant f gives a scaled copy)".into(),
        ));
    }
    let m = f.degree();
    let big_n = (c.degree() + m) as f64;
    let offset = c.translate(-vertex).scale_by(&f.to_bernstein(m)?);
    let c_up = c.elevate(m);
    let d = c_up.add(&offset)?;

    let df = f.derivative();
    let fu = &df * &Polynomial::identity();
    let m_num = &fu - &f.scale(big_n);
    let l_num = &m_num - &(f * f).scale(big_n);
    let cert = Certificate::new(
        RationalFunction::new(l_num, df.clone())?,
        RationalFunction::new(m_num, df)?,
    );
    Ok(DevelopablePatch::new(c_up, d)?.with_certificate(Some(cert)))
}

/// Tangent surface `d = c + f c'` for linear `f`; `Lambda = u + n f`, `M = u`.
/// The curve `c` is its own edge of regression.
pub fn tangent_patch(c: &BezierCurve, f: &Polynomial) -> Result<DevelopablePatch> {
    if f.is_zero() {
        return Err(Error::InvalidArgument(
            "tangent factor f is identically zero".into(),
        ));
    }
    if f.degree() > 1 {
        return Err(Error::InvalidArgument(format!(
            "tangent factor must be linear, got degree {} (use scale_rulings)",
            f.degree()
        )));
    }
    let n = c.degree();
    let d = c.add(&c.hodograph().scale_by(&f.to_bernstein(1)?))?;
    let cert = Certificate::new(
        (&Polynomial::identity() + &f.scale(n as f64)).into(),
        Polynomial::identity().into(),
    );
    Ok(DevelopablePatch::new(c.clone(), d)?.with_certificate(Some(cert)))
}

/// Degree-`n` patch on the tangent surface of a degree-`(n+1)` curve `r`,
/// bounded by `c = r + (b1 - u/(n+1)) r'` and `d = r + (b2 - u/(n+1)) r'`,
/// with constant certificate `Lambda = (n+1) b2`, `M = (n+1) b1`.
///
/// Both boundaries are blossoms of `r`: `c(u) = r[u^<n>, (n+1) b1]`, so
/// `c_i = r[0^<n-i>, 1^<i>, (n+1) b1]`, and likewise for `d`.
pub fn from_edge_of_regression(r: &BezierCurve, b1: f64, b2: f64) -> Result<DevelopablePatch> {
    if b1 == b2 {
        return Err(Error::InvalidArgument(
            "b1 = b2 gives a zero-width patch".into(),
        ));
    }
    let deg_r = r.degree();
    if deg_r < 2 {
        return Err(Error::InvalidArgument(
            "edge of regression must have degree at least 2".into(),
        ));
    }
    let n = deg_r - 1;
    let np1 = (n + 1) as f64;
    let boundary = |t: f64| -> Result<BezierCurve> {
        let pts = (0..=n)
            .map(|i| {
                let mut args = vec![0.0; n - i];
                args.extend(std::iter::repeat_n(1.0, i));
                args.push(t);
                r.blossom(&args)
            })
            .collect::<Result<Vec<_>>>()?;
        BezierCurve::new(pts)
    };
    let c = boundary(np1 * b1)?;
    let d = boundary(np1 * b2)?;
    Ok(DevelopablePatch::new(c, d)?
        .with_certificate(Some(Certificate::constant(np1 * b2, np1 * b1))))
}

/// Developable patch through a curve `c` of degree `n - 1` whose ruling
/// generator solves the developability equation with
/// `lambda = -n A / (u - b)`, `mu = A (u - a) / (u - b)`:
///
/// ```text
/// v(u) = (u - a)^n w + (u - a)^n * integral of (u - b) c'(u) / (A (u - a)^(n+1))
/// ```
///
/// The integral is taken term by term in powers of `(u - a)`; every exponent
/// lies in `[-(n+1), -2]` so no logarithm appears and `v` is a polynomial of
/// degree `n`. The result is `d = c + v` at degree `n`, with
/// `Lambda = a + (b - u) / A`, `M = a`, and a rational edge of regression
/// `r(u) = c(u) - A (u - a) / (u - b) v(u)`.
pub fn family4(c: &BezierCurve, a: f64, b: f64, big_a: f64, w: Vec3) -> Result<DevelopablePatch> {
    if big_a == 0.0 {
        return Err(Error::InvalidArgument("A must be nonzero".into()));
    }
    if a == b {
        return Err(Error::InvalidArgument("a and b must differ".into()));
    }
    let n = c.degree() + 1;
    let mono = c.to_monomial();
    let degenerate = w.norm() == 0.0 && mono.iter().all(|p| p.derivative().is_zero());
    if degenerate {
        return Err(Error::Degenerate(
            "w = 0 and c' = 0 give a zero ruling".into(),
        ));
    }

    let axes: Vec<Polynomial> = (0..3)
        .map(|k| {
            let t = mono[k].derivative().taylor_shift(a);
            // (u - b) c'(u) = sum s_k (u - a)^k,  s_k = t_{k-1} + (a - b) t_k
            let mut shifted = Vec::with_capacity(n + 1);
            for j in 0..n {
                let prev = if j == 0 { 0.0 } else { t.coeff(j - 1) };
                let s = prev + (a - b) * t.coeff(j);
                shifted.push(s / (big_a * (j as f64 - n as f64)));
            }
            shifted.push(w.component(k));
            Polynomial::new(shifted).taylor_shift(-a)
        })
        .collect();
    let v = BezierCurve::from_monomial(&[axes[0].clone(), axes[1].clone(), axes[2].clone()], n)?;
    let c_up = c.elevate(1);
    let d = c_up.add(&v)?;
    let cert = Certificate::new(
        Polynomial::linear(a + b / big_a, -1.0 / big_a).into(),
        RationalFunction::constant(a),
    );
    Ok(DevelopablePatch::new(c_up, d)?.with_certificate(Some(cert)))
}

/// Constructions available for a boundary curve of degree `dc` in a patch of degree `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Construction {
    Aumann,
    /// Aumann after formally raising the curve to degree `n`.
    AumannElevated,
    /// Ruling rescaling by a linear factor of a degree `n - 1` Aumann patch.
    ScaledRulings,
    Family4,
}

pub fn general_solution_info(n: usize, dc: usize) -> Result<Vec<Construction>> {
    if n >= 1 && dc == n {
        Ok(vec![Construction::Aumann])
    } else if n >= 2 && dc + 1 == n {
        Ok(vec![
            Construction::AumannElevated,
            Construction::ScaledRulings,
            Construction::Family4,
        ])
    } else {
        Err(Error::Unsupported(format!(
            "curve degree {dc} in a degree-{n} patch is outside the classified cases"
        )))
    }
}
