use super::{Certificate, DevelopablePatch};
use crate::bezier::BezierCurve;
use crate::error::{Error, Result};
use crate::geom::Point3;
use crate::poly::POLE_TOL;

/// `v = (u - M(u)) / (Lambda(u) - M(u))`, the ruling coordinate of the edge
/// of regression.
pub fn edge_parameter(cert: &Certificate, u: f64) -> Result<f64> {
    let (lambda, m) = cert.eval(u)?;
    let diff = lambda - m;
    if diff.abs() <= POLE_TOL * lambda.abs().max(1.0) {
        return Err(Error::Pole { at: u });
    }
    Ok((u - m) / diff)
}

/// Edge of regression of a constant-certificate patch as a degree `n + 1`
/// curve: `r_0 = c_0 + (-M / (Lambda - M)) (d_0 - c_0)` and
/// `r_{k+1} = r_k + (d_k - c_k) / (Lambda - M)`.
pub fn edge_curve(patch: &DevelopablePatch) -> Result<BezierCurve> {
    let cert = patch.certificate().ok_or(Error::MissingCertificate)?;
    let (lambda, m) = cert.constants().ok_or(Error::NonConstantCertificate)?;
    if lambda == m {
        return Err(Error::CylinderCertificate);
    }
    let diff = lambda - m;
    let (c, d) = (patch.c().points(), patch.d().points());
    let mut r = Vec::with_capacity(c.len() + 1);
    r.push(c[0] + (d[0] - c[0]) * (-m / diff));
    for k in 0..c.len() {
        let next = r[k] + (d[k] - c[k]) / diff;
        r.push(next);
    }
    BezierCurve::new(r)
}

/// Point of the edge of regression on ruling `u`, `b(u, v_edge(u))`.
pub fn edge_evaluate(patch: &DevelopablePatch, u: f64) -> Result<Point3> {
    let cert = patch.certificate().ok_or(Error::MissingCertificate)?;
    let v = edge_parameter(cert, u)?;
    Ok(patch.point(u, v))
}

const SCAN_STEPS: usize = 1024;
const BISECT_TOL: f64 = 1e-10;

/// Maximal subintervals of `u_range` on which the edge parameter lies in
/// `v_range`, i.e. where the edge of regression crosses the patch.
///
/// Found by a uniform scan followed by bisection of every transition to
/// `1e-10`. Poles count as outside.
pub fn singular_interval(
    cert: &Certificate,
    u_range: (f64, f64),
    v_range: (f64, f64),
) -> Vec<(f64, f64)> {
    let (u0, u1) = u_range;
    let (vlo, vhi) = (v_range.0.min(v_range.1), v_range.0.max(v_range.1));
    let inside = |u: f64| match edge_parameter(cert, u) {
        Ok(v) => v >= vlo && v <= vhi,
        Err(_) => false,
    };
    // transition between `a` (state sa) and `b`
    let refine = |mut a: f64, mut b: f64, sa: bool| {
        while (b - a).abs() > BISECT_TOL {
            let mid = 0.5 * (a + b);
            if inside(mid) == sa {
                a = mid;
            } else {
                b = mid;
            }
        }
        (a, b)
    };

    let mut out = Vec::new();
    let mut start: Option<f64> = None;
    let mut prev_u = u0;
    let mut prev_in = inside(u0);
    if prev_in {
        start = Some(u0);
    }
    for k in 1..=SCAN_STEPS {
        let u = if k == SCAN_STEPS {
            u1
        } else {
            u0 + (u1 - u0) * k as f64 / SCAN_STEPS as f64
        };
        let now_in = inside(u);
        if now_in != prev_in {
            let (a, b) = refine(prev_u, u, prev_in);
            if now_in {
                start = Some(b);
            } else if let Some(s) = start.take() {
                out.push((s, a));
            }
        }
        prev_u = u;
        prev_in = now_in;
    }
    if let Some(s) = start {
        out.push((s, u1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::developable::aumann_construct;
    use crate::geom::Vec3;
    use crate::poly::Polynomial;

    fn example() -> DevelopablePatch {
        let c =
            BezierCurve::from_arrays(&[[0.0, 0.0, 0.0], [1.0, 0.0, 0.0], [2.0, 1.0, 0.0]]).unwrap();
        aumann_construct(&c, Vec3::new(0.0, 0.0, 1.0), 2.0, 0.5).unwrap()
    }

    #[test]
    fn edge_parameter_examples() {
        let cert = Certificate::constant(2.0, 0.5);
        assert_eq!(edge_parameter(&cert, 0.5), Ok(0.0));
        assert!((edge_parameter(&cert, 0.0).unwrap() + 1.0 / 3.0).abs() < 1e-15);
        let tangent = Certificate::new(
            Polynomial::linear(3.0, 1.0).into(),
            Polynomial::identity().into(),
        );
        for k in 0..10 {
            assert_eq!(edge_parameter(&tangent, k as f64 / 9.0), Ok(0.0));
        }
        assert!(matches!(
            edge_parameter(&Certificate::constant(1.0, 1.0), 0.2),
            Err(Error::Pole { .. })
        ));
    }

    #[test]
    fn edge_polygon_of_example() {
        let r = edge_curve(&example()).unwrap();
        let expect = [
            Vec3::new(0.0, 0.0, -1.0 / 3.0),
            Vec3::new(0.0, 0.0, 1.0 / 3.0),
            Vec3::new(2.0, 0.0, -1.0 / 3.0),
            Vec3::new(2.0, 2.0, 1.0 / 3.0),
        ];
        for (p, q) in r.points().iter().zip(expect) {
            assert!((*p - q).norm() < 1e-12);
        }
    }

    #[test]
    fn edge_curve_matches_pointwise_evaluation() {
        let p = example();
        let r = edge_curve(&p).unwrap();
        for k in 0..=100 {
            let u = k as f64 / 100.0;
            let q = edge_evaluate(&p, u).unwrap();
            assert!((r.point(u) - q).norm() < 1e-10);
        }
    }

    #[test]
    fn edge_curve_requires_constant_non_cylinder_certificate() {
        let p = example().with_certificate(Some(Certificate::constant(1.0, 1.0)));
        assert_eq!(edge_curve(&p), Err(Error::CylinderCertificate));
        let p = example().with_certificate(None);
        assert_eq!(edge_curve(&p), Err(Error::MissingCertificate));
    }

    #[test]
    fn singular_interval_of_example() {
        let iv = singular_interval(&Certificate::constant(2.0, 0.5), (0.0, 1.0), (0.0, 1.0));
        assert_eq!(iv.len(), 1);
        assert!((iv[0].0 - 0.5).abs() < 1e-9 && (iv[0].1 - 1.0).abs() < 1e-9);
    }

    #[test]
    fn singular_interval_empty_cases() {
        let tangent = Certificate::new(
            Polynomial::linear(2.0, 1.0).into(),
            Polynomial::identity().into(),
        );
        assert!(singular_interval(&tangent, (0.0, 1.0), (0.1, 1.0)).is_empty());
        assert!(
            singular_interval(&Certificate::constant(0.3, 0.3), (0.0, 1.0), (0.0, 1.0)).is_empty()
        );
    }
}
