use nalgebra::{DMatrix, Matrix3, Vector3 as NVec3};

use super::{edge_evaluate, pointwise_certificate, DevelopablePatch, PointwiseCertificate};
use crate::error::{Error, Result};
use crate::geom::{sine_between, Point3, Vec3};
use crate::verify::{developability_residual, open_grid};

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum SurfaceClass {
    Planar,
    /// All rulings parallel.
    Cylinder,
    /// All rulings through one point.
    Cone {
        vertex: Point3,
    },
    /// Rulings tangent to an edge of regression.
    Tangent,
}

impl SurfaceClass {
    pub fn tag(&self) -> &'static str {
        match self {
            SurfaceClass::Planar => "planar",
            SurfaceClass::Cylinder => "cylinder",
            SurfaceClass::Cone { .. } => "cone",
            SurfaceClass::Tangent => "tangent",
        }
    }
}

const SAMPLES: usize = 33;

/// Classifies a developable patch. Tests run in order planar, cylinder,
/// cone, with `tol` as the relative tolerance of each.
pub fn classify(patch: &DevelopablePatch, tol: f64) -> Result<SurfaceClass> {
    let report = developability_residual(patch, SAMPLES);
    if report.max_residual >= tol {
        return Err(Error::NotDevelopable {
            residual: report.max_residual,
        });
    }

    let points: Vec<Vec3> = patch
        .c()
        .points()
        .iter()
        .chain(patch.d().points())
        .copied()
        .collect();
    if is_planar(&points, tol) {
        return Ok(SurfaceClass::Planar);
    }

    let scale = patch.scale();
    let rulings: Vec<Vec3> = patch.ruling_curve().into_points();
    let longest = rulings
        .iter()
        .copied()
        .max_by(|a, b| a.norm().total_cmp(&b.norm()))
        .unwrap_or(Vec3::ZERO);
    if longest.norm() <= 1e-14 * scale {
        return Err(Error::Degenerate("zero-width patch".into()));
    }
    if rulings
        .iter()
        .filter(|r| r.norm() > 1e-14 * scale)
        .all(|r| sine_between(r, &longest) < tol)
    {
        return Ok(SurfaceClass::Cylinder);
    }

    if let Some(vertex) = edge_vertex(patch, tol).or_else(|| concurrent_rulings(patch, tol)) {
        return Ok(SurfaceClass::Cone { vertex });
    }
    Ok(SurfaceClass::Tangent)
}

fn is_planar(points: &[Vec3], tol: f64) -> bool {
    let n = points.len();
    let centroid = points.iter().fold(Vec3::ZERO, |a, p| a + *p) / n as f64;
    let m = DMatrix::from_fn(n, 3, |i, k| (points[i] - centroid).component(k));
    let sv = m.singular_values();
    let max = sv.max();
    max == 0.0 || sv.min() <= tol * max
}

/// Mean of the edge points when they all coincide to within `tol`.
fn edge_vertex(patch: &DevelopablePatch, tol: f64) -> Option<Point3> {
    let pts: Option<Vec<Point3>> = open_grid(SAMPLES)
        .map(|u| match patch.certificate() {
            Some(_) => edge_evaluate(patch, u).ok(),
            None => match pointwise_certificate(patch, u, tol) {
                PointwiseCertificate::Intersection { lambda, m } if lambda != m => {
                    Some(patch.point(u, (u - m) / (lambda - m)))
                }
                _ => None,
            },
        })
        .collect();
    let pts = pts?;
    coincident(&pts, patch.scale(), tol)
}

fn coincident(pts: &[Point3], scale: f64, tol: f64) -> Option<Point3> {
    let mean = pts.iter().fold(Vec3::ZERO, |a, p| a + *p) / pts.len() as f64;
    let spread = pts.iter().map(|p| p.distance(&mean)).fold(0.0, f64::max);
    (spread <= tol * scale.max(mean.norm())).then_some(mean)
}

/// Least-squares common point of the sampled ruling lines, accepted when
/// every line passes within `tol` (relative) of it.
fn concurrent_rulings(patch: &DevelopablePatch, tol: f64) -> Option<Point3> {
    let mut a = Matrix3::<f64>::zeros();
    let mut b = NVec3::<f64>::zeros();
    let mut lines = Vec::new();
    for u in open_grid(SAMPLES) {
        let p = patch.c().point(u);
        let dir = patch.d().point(u) - p;
        let len = dir.norm();
        if len <= 1e-14 * patch.scale() {
            continue;
        }
        let t = dir / len;
        let tv = NVec3::new(t.x, t.y, t.z);
        let proj = Matrix3::identity() - tv * tv.transpose();
        a += proj;
        b += proj * NVec3::new(p.x, p.y, p.z);
        lines.push((p, t));
    }
    if lines.len() < 2 {
        return None;
    }
    let x = a.try_inverse()? * b;
    let x = Vec3::new(x[0], x[1], x[2]);
    let worst = lines
        .iter()
        .map(|(p, t)| (x - *p).cross(t).norm())
        .fold(0.0, f64::max);
    (worst <= tol * patch.scale().max(x.norm())).then_some(x)
}
