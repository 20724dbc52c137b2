//! Bezier developable surface patches.
//!
//! A patch `x(u, v) = (1 - v) c(u) + v d(u)` is spanned by two Bezier curves
//! of equal degree. It is developable exactly when the penultimate de
//! Casteljau lines of `c` and `d` are coplanar at every `u`; constructions in
//! this crate carry a rational certificate `(Lambda, M)` such that the
//! blossoms satisfy `c[u^(n-1), Lambda(u)] = d[u^(n-1), M(u)]`.

pub mod bezier;
pub mod cli;
pub mod developable;
pub mod error;
pub mod families;
pub mod fit;
pub mod geom;
pub mod io;
pub mod obj;
pub mod patch_ops;
pub mod poly;
pub mod verify;

pub use bezier::{BezierCurve, Evaluation};
pub use developable::{
    aumann_construct, certify, classify, edge_curve, edge_evaluate, edge_parameter, make_patch,
    singular_interval, Certificate, Certification, DevelopablePatch, PointwiseCertificate,
    SurfaceClass,
};
pub use error::{Error, Result};
pub use families::FamilyParams;
pub use geom::{Point3, Vec3, Vector3};
pub use poly::{BernsteinPoly, Polynomial, RationalFunction};
pub use verify::CheckReport;
