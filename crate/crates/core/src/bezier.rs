//! Bézier curves: de Casteljau evaluation, blossoms, hodographs, degree
//! elevation and affine reparametrization.
//!
//! Curves of vectors (hodographs, ruling generators `d - c`) share the same
//! type; only the interpretation of the control points changes.
//!
//! Evaluation is total: parameters outside `[0, 1]` extrapolate.

use crate::error::{Error, Result};
use crate::geom::{Point3, Vec3};
use crate::poly::{BernsteinPoly, Polynomial};

#[derive(Clone, Debug, PartialEq)]
pub struct BezierCurve {
    points: Vec<Point3>,
}

/// A point on a curve together with the two points of the last-but-one de
/// Casteljau stage.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Evaluation {
    pub point: Point3,
    pub penultimate: (Point3, Point3),
}

impl Evaluation {
    /// `n * (second - first)`, the derivative of a degree-`n` curve.
    pub fn derivative(&self, degree: usize) -> Vec3 {
        (self.penultimate.1 - self.penultimate.0) * degree as f64
    }
}

/// Runs de Casteljau stages, consuming one parameter per stage.
fn casteljau_stages(points: &[Point3], args: impl IntoIterator<Item = f64>) -> Vec<Point3> {
    let mut work = points.to_vec();
    for t in args {
        let len = work.len() - 1;
        for i in 0..len {
            work[i] = work[i].lerp(&work[i + 1], t);
        }
        work.truncate(len);
    }
    work
}

impl BezierCurve {
    /// Curve from its control polygon. A single point gives a degree-0
    /// (constant) curve, which is what the hodograph of a line is.
    pub fn new(points: Vec<Point3>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::InvalidArgument(
                "a Bezier curve needs at least one control point".into(),
            ));
        }
        if !points.iter().all(Vec3::is_finite) {
            return Err(Error::NonFinite);
        }
        Ok(BezierCurve { points })
    }

    pub fn from_arrays(points: &[[f64; 3]]) -> Result<Self> {
        BezierCurve::new(points.iter().copied().map(Vec3::from).collect())
    }

    pub fn degree(&self) -> usize {
        self.points.len() - 1
    }

    pub fn points(&self) -> &[Point3] {
        &self.points
    }

    pub fn into_points(self) -> Vec<Point3> {
        self.points
    }

    /// de Casteljau evaluation, returning the penultimate pair as well.
    pub fn eval(&self, u: f64) -> Evaluation {
        let n = self.degree();
        if n == 0 {
            let p = self.points[0];
            return Evaluation {
                point: p,
                penultimate: (p, p),
            };
        }
        let pen = casteljau_stages(&self.points, std::iter::repeat_n(u, n - 1));
        Evaluation {
            point: pen[0].lerp(&pen[1], u),
            penultimate: (pen[0], pen[1]),
        }
    }

    pub fn point(&self, u: f64) -> Point3 {
        self.eval(u).point
    }

    pub fn derivative_at(&self, u: f64) -> Vec3 {
        self.eval(u).derivative(self.degree())
    }

    /// Polar form `c[u_1, ..., u_n]` by the triangular recursion.
    pub fn blossom(&self, args: &[f64]) -> Result<Point3> {
        if args.len() != self.degree() {
            return Err(Error::WrongArity {
                expected: self.degree(),
                got: args.len(),
            });
        }
        Ok(casteljau_stages(&self.points, args.iter().copied())[0])
    }

    /// `c[u^<n-1>, t]`, affine in `t`; this is the line through the
    /// penultimate de Casteljau points at `u`.
    pub fn blossom_diagonal_with(&self, u: f64, t: f64) -> Point3 {
        let n = self.degree();
        if n == 0 {
            return self.points[0];
        }
        let pen = casteljau_stages(&self.points, std::iter::repeat_n(u, n - 1));
        pen[0].lerp(&pen[1], t)
    }

    /// Derivative curve; control vectors `n (c_{i+1} - c_i)`.
    pub fn hodograph(&self) -> BezierCurve {
        let n = self.degree();
        if n == 0 {
            return BezierCurve {
                points: vec![Vec3::ZERO],
            };
        }
        let s = n as f64;
        BezierCurve {
            points: self.points.windows(2).map(|w| (w[1] - w[0]) * s).collect(),
        }
    }

    /// Degree elevation by `m` single steps.
    pub fn elevate(&self, m: usize) -> BezierCurve {
        let mut pts = self.points.clone();
        for _ in 0..m {
            let n = pts.len() - 1;
            let np1 = (n + 1) as f64;
            let mut out = Vec::with_capacity(n + 2);
            out.push(pts[0]);
            for i in 1..=n {
                let t = i as f64 / np1;
                out.push(pts[i - 1] * t + pts[i] * (1.0 - t));
            }
            out.push(pts[n]);
            pts = out;
        }
        BezierCurve { points: pts }
    }

    /// The same curve on `[a, b]`, reparametrized to `[0, 1]`:
    /// new control points are the blossom values `c[a^<n-i>, b^<i>]`.
    pub fn restrict(&self, a: f64, b: f64) -> Result<BezierCurve> {
        if a == b {
            return Err(Error::DegenerateInterval { a, b });
        }
        let n = self.degree();
        let points = (0..=n)
            .map(|i| {
                let args: Vec<f64> = std::iter::repeat_n(a, n - i)
                    .chain(std::iter::repeat_n(b, i))
                    .collect();
                casteljau_stages(&self.points, args)[0]
            })
            .collect();
        Ok(BezierCurve { points })
    }

    pub fn reversed(&self) -> BezierCurve {
        let mut points = self.points.clone();
        points.reverse();
        BezierCurve { points }
    }

    /// Pointwise affine combination `(1 - t) self + t other` of equal-degree curves.
    pub fn lerp(&self, other: &BezierCurve, t: f64) -> Result<BezierCurve> {
        self.zip_with(other, |p, q| p.lerp(&q, t))
    }

    /// Controlwise `other - self`: the ruling generator when `self = c`, `other = d`.
    pub fn difference_to(&self, other: &BezierCurve) -> Result<BezierCurve> {
        self.zip_with(other, |p, q| q - p)
    }

    pub fn add(&self, other: &BezierCurve) -> Result<BezierCurve> {
        self.zip_with(other, |p, q| p + q)
    }

    fn zip_with(&self, other: &BezierCurve, f: impl Fn(Vec3, Vec3) -> Vec3) -> Result<BezierCurve> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                c: self.degree(),
                d: other.degree(),
            });
        }
        Ok(BezierCurve {
            points: self
                .points
                .iter()
                .zip(&other.points)
                .map(|(p, q)| f(*p, *q))
                .collect(),
        })
    }

    pub fn translate(&self, t: Vec3) -> BezierCurve {
        BezierCurve {
            points: self.points.iter().map(|p| *p + t).collect(),
        }
    }

    /// Product with a scalar Bernstein polynomial; degree adds.
    pub fn scale_by(&self, f: &BernsteinPoly) -> BezierCurve {
        let axes: Vec<BernsteinPoly> = (0..3)
            .map(|k| {
                BernsteinPoly::new(self.points.iter().map(|p| p.component(k)).collect())
                    .expect("finite control points")
                    .mul(f)
            })
            .collect();
        BezierCurve {
            points: (0..=self.degree() + f.degree())
                .map(|i| Vec3::from_fn(|k| axes[k].coeffs()[i]))
                .collect(),
        }
    }

    /// Per-axis monomial polynomials.
    pub fn to_monomial(&self) -> [Polynomial; 3] {
        std::array::from_fn(|k| {
            BernsteinPoly::new(self.points.iter().map(|p| p.component(k)).collect())
                .expect("finite control points")
                .to_monomial()
        })
    }

    /// Curve of the given degree from per-axis monomial polynomials.
    pub fn from_monomial(axes: &[Polynomial; 3], degree: usize) -> Result<BezierCurve> {
        let bern = axes
            .iter()
            .map(|p| p.to_bernstein(degree))
            .collect::<Result<Vec<_>>>()?;
        BezierCurve::new(
            (0..=degree)
                .map(|i| Vec3::from_fn(|k| bern[k].coeffs()[i]))
                .collect(),
        )
    }

    /// `self(h(u))`, a curve of degree `n * deg h`.
    pub fn compose(&self, h: &Polynomial) -> Result<BezierCurve> {
        let axes = self.to_monomial();
        let composed: [Polynomial; 3] = std::array::from_fn(|k| axes[k].compose(h));
        let degree = self.degree() * h.degree();
        BezierCurve::from_monomial(&composed, degree)
    }

    /// Largest coordinate magnitude over the control polygon.
    pub fn max_abs(&self) -> f64 {
        self.points.iter().fold(0.0, |m, p| m.max(p.max_abs()))
    }
}
