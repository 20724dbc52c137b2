use super::{Certificate, DevelopablePatch};
use crate::fit::fit_rational;
use crate::geom::{normalized_triple, sine_between, Vec3};
use crate::verify::open_grid;

/// Outcome of testing one ruling.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum PointwiseCertificate {
    /// The penultimate lines of `c` and `d` meet at affine coordinates
    /// `lambda` on the `c` line and `m` on the `d` line.
    Intersection { lambda: f64, m: f64 },
    /// The penultimate lines are parallel and so are the ruling differences:
    /// a cylinder ruling with `Lambda = M = lambda`, or no finite value when
    /// the two differences coincide (a translation).
    Parallel { lambda: Option<f64> },
    /// Parallel lines with non-parallel differences, or a degenerate line.
    /// No finite `(Lambda, M)` describes the ruling.
    Indeterminate,
    /// The four penultimate points are not coplanar.
    NotCoplanar { residual: f64 },
}

/// Result of inferring a certificate from samples.
#[derive(Clone, Debug, PartialEq)]
pub enum Certification {
    /// A rational certificate reproducing every sample.
    Fitted(Certificate),
    /// Pointwise values `(u, Lambda(u), M(u))` that no low-degree rational fit reproduces.
    Sampled(Vec<(f64, f64, f64)>),
    /// `Lambda == M` at every sample; the common function when one exists.
    Cylinder(Option<crate::poly::RationalFunction>),
    /// Coplanar everywhere but not describable by intersecting penultimate
    /// lines (e.g. a scaled copy about a cone vertex).
    Uncertifiable,
}

impl Certification {
    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            Certification::Fitted(c) => Some(c),
            _ => None,
        }
    }
}

const MAX_FIT_DEGREE: usize = 8;

/// Tests coplanarity of the four penultimate de Casteljau points at `u` and,
/// when coplanar, intersects the two penultimate lines.
pub fn pointwise_certificate(patch: &DevelopablePatch, u: f64, tol: f64) -> PointwiseCertificate {
    let (p0, p1) = patch.c().eval(u).penultimate;
    let (q0, q1) = patch.d().eval(u).penultimate;
    let e = p1 - p0;
    let f = q1 - q0;
    let g = q0 - p0;
    let scale = patch.scale().max(f64::MIN_POSITIVE);

    let residual = normalized_triple(&e, &f, &g);
    if residual >= tol {
        return PointwiseCertificate::NotCoplanar { residual };
    }
    let tiny = 1e-14 * scale;
    if e.norm() <= tiny || f.norm() <= tiny {
        return PointwiseCertificate::Indeterminate;
    }
    let n = e.cross(&f);
    if sine_between(&e, &f) >= tol {
        let nn = n.norm_squared();
        let lambda = g.cross(&f).dot(&n) / nn;
        let m = g.cross(&e).dot(&n) / nn;
        return PointwiseCertificate::Intersection { lambda, m };
    }
    // parallel penultimate lines: the differences d - c must be parallel too
    let v0 = q0 - p0;
    let v1 = q1 - p1;
    if v0.norm() > tiny && v1.norm() > tiny && sine_between(&v0, &v1) >= tol {
        return PointwiseCertificate::Indeterminate;
    }
    let w: Vec3 = v0 - v1;
    if w.norm() <= tiny {
        PointwiseCertificate::Parallel { lambda: None }
    } else {
        PointwiseCertificate::Parallel {
            lambda: Some(v0.dot(&w) / w.norm_squared()),
        }
    }
}

/// Infers `(Lambda, M)` from `samples` rulings on the open grid.
///
/// Returns `None` when some ruling fails the coplanarity test at `tol`.
/// Fitted functions reproduce every pointwise value to `tol` relative.
pub fn certify(patch: &DevelopablePatch, samples: usize, tol: f64) -> Option<Certification> {
    let mut hits = Vec::new();
    let mut parallel = Vec::new();
    let mut parallel_count = 0usize;
    let mut indeterminate = 0usize;
    for u in open_grid(samples) {
        match pointwise_certificate(patch, u, tol) {
            PointwiseCertificate::NotCoplanar { .. } => return None,
            PointwiseCertificate::Intersection { lambda, m } => hits.push((u, lambda, m)),
            PointwiseCertificate::Parallel { lambda } => {
                parallel_count += 1;
                parallel.push((u, lambda));
            }
            PointwiseCertificate::Indeterminate => indeterminate += 1,
        }
    }

    if hits.is_empty() {
        if parallel_count > 0 && indeterminate == 0 {
            let fitted = if parallel.iter().all(|(_, l)| l.is_some()) {
                let us: Vec<f64> = parallel.iter().map(|(u, _)| *u).collect();
                let ls: Vec<f64> = parallel.iter().map(|(_, l)| l.unwrap()).collect();
                fit_rational(&us, &ls, tol, max_degree(us.len()))
            } else {
                None
            };
            return Some(Certification::Cylinder(fitted));
        }
        return Some(Certification::Uncertifiable);
    }

    let us: Vec<f64> = hits.iter().map(|h| h.0).collect();
    let ls: Vec<f64> = hits.iter().map(|h| h.1).collect();
    let ms: Vec<f64> = hits.iter().map(|h| h.2).collect();
    let deg = max_degree(us.len());
    let coincide = hits
        .iter()
        .all(|&(_, l, m)| (l - m).abs() <= tol * l.abs().max(m.abs()).max(1.0));
    if coincide {
        let mid: Vec<f64> = ls.iter().zip(&ms).map(|(l, m)| 0.5 * (l + m)).collect();
        return Some(Certification::Cylinder(fit_rational(&us, &mid, tol, deg)));
    }
    match (
        fit_rational(&us, &ls, tol, deg),
        fit_rational(&us, &ms, tol, deg),
    ) {
        (Some(l), Some(m)) => Some(Certification::Fitted(Certificate::new(l, m))),
        _ => Some(Certification::Sampled(hits)),
    }
}

fn max_degree(samples: usize) -> usize {
    MAX_FIT_DEGREE.min(samples.saturating_sub(2) / 2)
}
