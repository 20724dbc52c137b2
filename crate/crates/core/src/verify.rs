//! Numerical oracles over sampled patches.
//!
//! Every check walks a fixed grid in a fixed order, so reports are
//! bit-for-bit reproducible. Coplanarity residuals are scale-free
//! (determinants divided by the product of the vector norms); surface
//! comparison reports absolute distances.

use serde::{Deserialize, Serialize};

use crate::developable::{edge_parameter, lm_to_lambdamu, Certificate, DevelopablePatch};
use crate::geom::{angle_between, normalized_triple, Vec3, NORM_GUARD};

/// Default pass threshold.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Residual recorded when a sample cannot be evaluated (pole, vanishing normal).
pub const UNEVALUABLE: f64 = f64::MAX;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CheckReport {
    pub name: String,
    pub samples: usize,
    pub max_residual: f64,
    pub argmax_location: (f64, f64),
    pub pass: bool,
    pub tolerance: f64,
}

impl CheckReport {
    /// Re-evaluates the verdict against another threshold.
    pub fn with_tolerance(mut self, tolerance: f64) -> Self {
        self.tolerance = tolerance;
        self.pass = self.max_residual < tolerance;
        self
    }
}

/// Running maximum with its location; first occurrence wins ties.
struct MaxTracker {
    name: &'static str,
    samples: usize,
    max: f64,
    at: (f64, f64),
}

impl MaxTracker {
    fn new(name: &'static str) -> Self {
        MaxTracker {
            name,
            samples: 0,
            max: 0.0,
            at: (f64::NAN, f64::NAN),
        }
    }

    fn record(&mut self, u: f64, v: f64, r: f64) {
        let r = if r.is_nan() { UNEVALUABLE } else { r };
        if self.samples == 0 || r > self.max {
            self.max = r;
            self.at = (u, v);
        }
        self.samples += 1;
    }

    fn finish(self, tol: f64) -> CheckReport {
        CheckReport {
            name: self.name.to_string(),
            samples: self.samples,
            max_residual: self.max,
            argmax_location: self.at,
            pass: self.max < tol,
            tolerance: tol,
        }
    }
}

/// `u_k = (k + 0.5) / n`, avoiding both ends of `[0, 1]`.
pub fn open_grid(n: usize) -> impl Iterator<Item = f64> + Clone {
    (0..n).map(move |k| (k as f64 + 0.5) / n as f64)
}

/// `k / (n - 1)` for `k = 0..n`.
pub fn closed_grid(n: usize) -> impl Iterator<Item = f64> + Clone {
    let denom = n.saturating_sub(1).max(1) as f64;
    (0..n).map(move |k| k as f64 / denom)
}

/// Coplanarity of `c'(u)`, `d'(u)` and `d(u) - c(u)`.
pub fn developability_residual(patch: &DevelopablePatch, nu: usize) -> CheckReport {
    let mut t = MaxTracker::new("developability");
    for u in open_grid(nu) {
        let dc = patch.c().derivative_at(u);
        let dd = patch.d().derivative_at(u);
        let v = patch.partial_v(u);
        t.record(u, 0.0, normalized_triple(&dc, &dd, &v));
    }
    t.finish(DEFAULT_TOL)
}

/// Coplanarity of the four penultimate de Casteljau points.
pub fn penultimate_coplanarity(patch: &DevelopablePatch, nu: usize) -> CheckReport {
    let mut t = MaxTracker::new("penultimate-coplanarity");
    for u in open_grid(nu) {
        let (p0, p1) = patch.c().eval(u).penultimate;
        let (q0, q1) = patch.d().eval(u).penultimate;
        t.record(
            u,
            0.0,
            normalized_triple(&(p1 - p0), &(q0 - p0), &(q1 - p0)),
        );
    }
    t.finish(DEFAULT_TOL)
}

/// Largest angle (radians) between surface normals on the same ruling,
/// over the whole patch.
pub fn normal_constancy(patch: &DevelopablePatch, nu: usize, nv: usize) -> CheckReport {
    normal_constancy_in(patch, (0.0, 1.0), (0.0, 1.0), nu, nv)
}

/// [`normal_constancy`] on a sub-rectangle of the parameter domain.
/// A vanishing normal is recorded as an angle of pi.
pub fn normal_constancy_in(
    patch: &DevelopablePatch,
    u_range: (f64, f64),
    v_range: (f64, f64),
    nu: usize,
    nv: usize,
) -> CheckReport {
    let mut t = MaxTracker::new("normal-constancy");
    let vs: Vec<f64> = closed_grid(nv)
        .map(|s| v_range.0 + (v_range.1 - v_range.0) * s)
        .collect();
    for s in open_grid(nu) {
        let u = u_range.0 + (u_range.1 - u_range.0) * s;
        let bv = patch.partial_v(u);
        let normals: Vec<(f64, Option<Vec3>)> = vs
            .iter()
            .map(|&v| {
                let bu = patch.partial_u(u, v);
                let n = bu.cross(&bv);
                let ok = n.norm() > 1e-14 * (bu.norm() * bv.norm() + NORM_GUARD);
                (v, ok.then_some(n))
            })
            .collect();
        let mut worst = (0.0, vs.first().copied().unwrap_or(0.0));
        for (i, (vi, ni)) in normals.iter().enumerate() {
            let Some(ni) = ni else {
                worst = (std::f64::consts::PI, *vi);
                break;
            };
            for (vj, nj) in &normals[i + 1..] {
                if let Some(nj) = nj {
                    let a = angle_between(ni, nj);
                    if a > worst.0 {
                        worst = (a, *vj);
                    }
                }
            }
        }
        t.record(u, worst.1, worst.0);
    }
    t.finish(1e-8)
}

/// Largest distance between `p1(u, v)` and `p2(correspondence(u, v))` over a
/// closed `nu x nv` grid on `p1`'s domain.
pub fn surfaces_equal(
    p1: &DevelopablePatch,
    p2: &DevelopablePatch,
    correspondence: impl Fn(f64, f64) -> (f64, f64),
    nu: usize,
    nv: usize,
) -> CheckReport {
    let mut t = MaxTracker::new("surfaces-equal");
    for u in closed_grid(nu) {
        for v in closed_grid(nv) {
            let (u2, v2) = correspondence(u, v);
            t.record(u, v, p1.point(u, v).distance(&p2.point(u2, v2)));
        }
    }
    t.finish(DEFAULT_TOL)
}

/// `|c[u^<n-1>, Lambda(u)] - d[u^<n-1>, M(u)]|`, relative to the larger of the
/// two points and the patch size.
pub fn blossom_coupling_residual(
    patch: &DevelopablePatch,
    cert: &Certificate,
    nu: usize,
) -> CheckReport {
    let mut t = MaxTracker::new("blossom-condition");
    let scale = patch.scale();
    for u in open_grid(nu) {
        let r = match cert.eval(u) {
            Ok((lambda, m)) => {
                let p = patch.c().blossom_diagonal_with(u, lambda);
                let q = patch.d().blossom_diagonal_with(u, m);
                let denom = p.norm().max(q.norm()).max(scale).max(NORM_GUARD);
                (p - q).norm() / denom
            }
            Err(_) => UNEVALUABLE,
        };
        t.record(u, 0.0, r);
    }
    t.finish(DEFAULT_TOL)
}

/// `c' - lambda v - mu v'` with `(lambda, mu)` derived from the certificate,
/// relative to the sum of the term magnitudes.
pub fn ode_residual(patch: &DevelopablePatch, cert: &Certificate, nu: usize) -> CheckReport {
    let mut t = MaxTracker::new("ode-consistency");
    let lm = lm_to_lambdamu(cert, patch.degree()).ok();
    let ruling = patch.ruling_curve();
    for u in open_grid(nu) {
        let r = match lm.as_ref().map(|lm| (lm.lambda.eval(u), lm.mu.eval(u))) {
            Some((Ok(l), Ok(m))) => {
                let dc = patch.c().derivative_at(u);
                let v = ruling.point(u);
                let dv = ruling.derivative_at(u);
                let res = dc - v * l - dv * m;
                res.norm() / (dc.norm() + l.abs() * v.norm() + m.abs() * dv.norm() + NORM_GUARD)
            }
            _ => UNEVALUABLE,
        };
        t.record(u, 0.0, r);
    }
    t.finish(DEFAULT_TOL)
}

/// Parallelism of `b_u` and `b_v` along the edge of regression
/// `v = edge_parameter(u)`.
pub fn edge_degeneracy(patch: &DevelopablePatch, cert: &Certificate, nu: usize) -> CheckReport {
    let mut t = MaxTracker::new("edge-degeneracy");
    for u in open_grid(nu) {
        match edge_parameter(cert, u) {
            Ok(v) => {
                let bu = patch.partial_u(u, v);
                let bv = patch.partial_v(u);
                t.record(
                    u,
                    v,
                    bu.cross(&bv).norm() / (bu.norm() * bv.norm() + NORM_GUARD),
                );
            }
            Err(_) => t.record(u, f64::NAN, UNEVALUABLE),
        }
    }
    t.finish(1e-8)
}
