//! Points and displacements in Euclidean 3-space.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use crate::error::{Error, Result};

/// A triple of coordinates. Used both for positions ([`Point3`]) and for
/// displacements ([`Vector3`]); the affine/linear distinction is carried by
/// how a value is used, not by its type.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Vec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

pub type Point3 = Vec3;
pub type Vector3 = Vec3;

impl Vec3 {
    pub const ZERO: Vec3 = Vec3 {
        x: 0.0,
        y: 0.0,
        z: 0.0,
    };

    #[inline]
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Vec3 { x, y, z }
    }

    /// Checked constructor, rejects NaN and infinities.
    pub fn try_new(x: f64, y: f64, z: f64) -> Result<Self> {
        let v = Vec3 { x, y, z };
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::NonFinite)
        }
    }

    pub fn try_from_slice(s: &[f64]) -> Result<Self> {
        match s {
            [x, y, z] => Vec3::try_new(*x, *y, *z),
            _ => Err(Error::InvalidArgument(format!(
                "expected 3 coordinates, got {}",
                s.len()
            ))),
        }
    }

    #[inline]
    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    #[inline]
    pub fn dot(&self, o: &Vec3) -> f64 {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    #[inline]
    pub fn cross(&self, o: &Vec3) -> Vec3 {
        Vec3::new(
            self.y * o.z - self.z * o.y,
            self.z * o.x - self.x * o.z,
            self.x * o.y - self.y * o.x,
        )
    }

    #[inline]
    pub fn norm(&self) -> f64 {
        self.x.hypot(self.y).hypot(self.z)
    }

    #[inline]
    pub fn norm_squared(&self) -> f64 {
        self.dot(self)
    }

    pub fn distance(&self, o: &Vec3) -> f64 {
        (*self - *o).norm()
    }

    pub fn max_abs(&self) -> f64 {
        self.x.abs().max(self.y.abs()).max(self.z.abs())
    }

    /// `(1 - t) * self + t * o`
    #[inline]
    pub fn lerp(&self, o: &Vec3, t: f64) -> Vec3 {
        *self * (1.0 - t) + *o * t
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn component(&self, axis: usize) -> f64 {
        match axis {
            0 => self.x,
            1 => self.y,
            2 => self.z,
            _ => panic!("axis {axis} out of range"),
        }
    }

    pub fn from_fn(mut f: impl FnMut(usize) -> f64) -> Vec3 {
        Vec3::new(f(0), f(1), f(2))
    }
}

/// `det[a, b, c]`, the scalar triple product.
#[inline]
pub fn triple(a: &Vec3, b: &Vec3, c: &Vec3) -> f64 {
    a.dot(&b.cross(c))
}

/// Triple product divided by the product of the norms; the sine-like
/// measure of how far three vectors are from being coplanar.
pub fn normalized_triple(a: &Vec3, b: &Vec3, c: &Vec3) -> f64 {
    triple(a, b, c).abs() / (a.norm() * b.norm() * c.norm() + NORM_GUARD)
}

/// Guard added to normalizing denominators.
pub const NORM_GUARD: f64 = 1e-30;

/// Sine of the angle between two vectors; zero when either vanishes.
pub fn sine_between(a: &Vec3, b: &Vec3) -> f64 {
    a.cross(b).norm() / (a.norm() * b.norm() + NORM_GUARD)
}

/// Angle in `[0, pi]` between two vectors, stable for nearly (anti)parallel input.
pub fn angle_between(a: &Vec3, b: &Vec3) -> f64 {
    a.cross(b).norm().atan2(a.dot(b))
}

/// Length of the diagonal of the axis-aligned bounding box.
pub fn bbox_diagonal<'a>(points: impl IntoIterator<Item = &'a Vec3>) -> f64 {
    let mut lo = Vec3::new(f64::INFINITY, f64::INFINITY, f64::INFINITY);
    let mut hi = -lo;
    let mut any = false;
    for p in points {
        any = true;
        lo = Vec3::new(lo.x.min(p.x), lo.y.min(p.y), lo.z.min(p.z));
        hi = Vec3::new(hi.x.max(p.x), hi.y.max(p.y), hi.z.max(p.z));
    }
    if any {
        (hi - lo).norm()
    } else {
        0.0
    }
}

impl Add for Vec3 {
    type Output = Vec3;
    #[inline]
    fn add(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for Vec3 {
    type Output = Vec3;
    #[inline]
    fn sub(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Mul<f64> for Vec3 {
    type Output = Vec3;
    #[inline]
    fn mul(self, s: f64) -> Vec3 {
        Vec3::new(self.x * s, self.y * s, self.z * s)
    }
}

impl Mul<Vec3> for f64 {
    type Output = Vec3;
    #[inline]
    fn mul(self, v: Vec3) -> Vec3 {
        v * self
    }
}

impl Div<f64> for Vec3 {
    type Output = Vec3;
    #[inline]
    fn div(self, s: f64) -> Vec3 {
        Vec3::new(self.x / s, self.y / s, self.z / s)
    }
}

impl Neg for Vec3 {
    type Output = Vec3;
    #[inline]
    fn neg(self) -> Vec3 {
        Vec3::new(-self.x, -self.y, -self.z)
    }
}

impl AddAssign for Vec3 {
    fn add_assign(&mut self, o: Vec3) {
        *self = *self + o;
    }
}

impl SubAssign for Vec3 {
    fn sub_assign(&mut self, o: Vec3) {
        *self = *self - o;
    }
}

impl From<[f64; 3]> for Vec3 {
    fn from(a: [f64; 3]) -> Self {
        Vec3::new(a[0], a[1], a[2])
    }
}

impl fmt::Display for Vec3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn try_new_rejects_non_finite() {
        assert!(Vec3::try_new(1.0, f64::NAN, 0.0).is_err());
        assert!(Vec3::try_new(f64::INFINITY, 0.0, 0.0).is_err());
        assert!(Vec3::try_new(1.0, 2.0, 3.0).is_ok());
    }

    #[test]
    fn cross_and_triple() {
        let x = Vec3::new(1.0, 0.0, 0.0);
        let y = Vec3::new(0.0, 1.0, 0.0);
        let z = Vec3::new(0.0, 0.0, 1.0);
        assert_eq!(x.cross(&y), z);
        assert_eq!(triple(&x, &y, &z), 1.0);
        assert_eq!(normalized_triple(&x, &y, &(x + y)), 0.0);
    }

    #[test]
    fn angle_of_opposite_vectors_is_pi() {
        let a = Vec3::new(1.0, 2.0, 3.0);
        assert!((angle_between(&a, &-a) - std::f64::consts::PI).abs() < 1e-15);
        assert_eq!(angle_between(&a, &(a * 2.0)), 0.0);
    }
}
