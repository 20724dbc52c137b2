//! C ABI for `devsurf`.
//!
//! Curves and patches are opaque heap handles created by `ds_*` constructors
//! and released with the matching `*_free` function. Every fallible function
//! returns a [`DsStatus`]; on failure a message is available from
//! [`ds_last_error`] on the same thread until the next failing call.
//! Strings returned through out-parameters are owned by the caller and must
//! be released with [`ds_string_free`]. Panics never cross the boundary.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use devsurf::io::{parse_patch, to_json, Document};
use devsurf::{
    aumann_construct, classify, edge_parameter, families, obj, patch_ops, verify, BezierCurve,
    DevelopablePatch, SurfaceClass, Vec3,
};

/// Opaque Bezier curve.
pub struct DsCurve(BezierCurve);

/// Opaque developable patch (two boundary curves plus optional certificate).
pub struct DsPatch(DevelopablePatch);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Geometry = 3,
    Parse = 4,
    Panic = 5,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DsSurfaceClass {
    Planar = 0,
    Cylinder = 1,
    Cone = 2,
    Tangent = 3,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(DsStatus, String);

impl From<devsurf::Error> for Failure {
    fn from(e: devsurf::Error) -> Self {
        let status = match e {
            devsurf::Error::NonFinite
            | devsurf::Error::WrongArity { .. }
            | devsurf::Error::InvalidArgument(_)
            | devsurf::Error::DegenerateInterval { .. } => DsStatus::InvalidArgument,
            _ => DsStatus::Geometry,
        };
        Failure(status, e.to_string())
    }
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("NUL bytes removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn guard<F: FnOnce() -> Result<(), Failure>>(f: F) -> DsStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => DsStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            DsStatus::Panic
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(DsStatus::NullPointer, format!("{what} is null"))
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn out_ptr<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Failure> {
    p.as_mut().ok_or_else(|| null(what))
}

unsafe fn read_vec3(p: *const f64, what: &str) -> Result<Vec3, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    let s = std::slice::from_raw_parts(p, 3);
    Ok(Vec3::try_new(s[0], s[1], s[2])?)
}

unsafe fn write_vec3(p: *mut f64, v: Vec3) -> Result<(), Failure> {
    if p.is_null() {
        return Err(null("out"));
    }
    std::slice::from_raw_parts_mut(p, 3).copy_from_slice(&v.to_array());
    Ok(())
}

fn into_c_string(s: String) -> Result<*mut c_char, Failure> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| Failure(DsStatus::Geometry, "string contains NUL".into()))
}

fn emit_patch(out: *mut *mut DsPatch, patch: DevelopablePatch) -> Result<(), Failure> {
    let slot = unsafe { out_ptr(out, "out")? };
    *slot = Box::into_raw(Box::new(DsPatch(patch)));
    Ok(())
}

/// Message of the most recent failure on this thread, or null. The pointer
/// stays valid until the next failing call on this thread.
#[no_mangle]
pub extern "C" fn ds_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string obtained from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn ds_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Creates a curve of degree `n_points - 1` from `3 * n_points` packed
/// coordinates.
///
/// # Safety
/// `xyz` must point to `3 * n_points` doubles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ds_curve_new(
    xyz: *const f64,
    n_points: usize,
    out: *mut *mut DsCurve,
) -> DsStatus {
    guard(|| {
        if xyz.is_null() {
            return Err(null("xyz"));
        }
        if n_points == 0 {
            return Err(Failure(
                DsStatus::InvalidArgument,
                "curve needs at least one point".into(),
            ));
        }
        let flat = std::slice::from_raw_parts(xyz, 3 * n_points);
        let pts = flat
            .chunks_exact(3)
            .map(|p| Vec3::try_new(p[0], p[1], p[2]))
            .collect::<Result<Vec<_>, _>>()?;
        let curve = BezierCurve::new(pts)?;
        *out_ptr(out, "out")? = Box::into_raw(Box::new(DsCurve(curve)));
        Ok(())
    })
}

/// # Safety
/// `c` must be null or a live handle from [`ds_curve_new`], freed once.
#[no_mangle]
pub unsafe extern "C" fn ds_curve_free(c: *mut DsCurve) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Degree of the curve, or `usize::MAX` for a null handle.
///
/// # Safety
/// `c` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ds_curve_degree(c: *const DsCurve) -> usize {
    c.as_ref().map_or(usize::MAX, |c| c.0.degree())
}

/// Writes the point at parameter `u` to `out[0..3]`.
///
/// # Safety
/// `c` must be a live handle; `out` must hold three doubles.
#[no_mangle]
pub unsafe extern "C" fn ds_curve_eval(c: *const DsCurve, u: f64, out: *mut f64) -> DsStatus {
    guard(|| {
        let c = deref(c, "curve")?;
        if !u.is_finite() {
            return Err(devsurf::Error::NonFinite.into());
        }
        write_vec3(out, c.0.point(u))
    })
}

/// Constant-certificate developable patch on boundary `c` with free point
/// `d0` (taken as the last point of the second boundary when `m == 0`).
///
/// # Safety
/// `c` must be a live handle, `d0` three doubles, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ds_aumann(
    c: *const DsCurve,
    d0: *const f64,
    lambda: f64,
    m: f64,
    out: *mut *mut DsPatch,
) -> DsStatus {
    guard(|| {
        let c = deref(c, "curve")?;
        let d0 = read_vec3(d0, "d0")?;
        emit_patch(out, aumann_construct(&c.0, d0, lambda, m)?)
    })
}

/// Tangent-surface patch of the degree `n + 1` edge of regression `r`
/// between the rulings at `b1` and `b2`.
///
/// # Safety
/// `r` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ds_from_edge(
    r: *const DsCurve,
    b1: f64,
    b2: f64,
    out: *mut *mut DsPatch,
) -> DsStatus {
    guard(|| {
        let r = deref(r, "curve")?;
        emit_patch(out, families::from_edge_of_regression(&r.0, b1, b2)?)
    })
}

/// Parses a patch JSON document.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ds_patch_from_json(
    json: *const c_char,
    out: *mut *mut DsPatch,
) -> DsStatus {
    guard(|| {
        if json.is_null() {
            return Err(null("json"));
        }
        let text = CStr::from_ptr(json)
            .to_str()
            .map_err(|_| Failure(DsStatus::Parse, "input is not UTF-8".into()))?;
        let patch = parse_patch(text).map_err(|e| Failure(DsStatus::Parse, e.to_string()))?;
        emit_patch(out, patch)
    })
}

/// Serializes a patch; release the string with [`ds_string_free`].
///
/// # Safety
/// `p` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ds_patch_to_json(p: *const DsPatch, out: *mut *mut c_char) -> DsStatus {
    guard(|| {
        let p = deref(p, "patch")?;
        let s = into_c_string(to_json(&Document::Patch(p.0.clone())))?;
        *out_ptr(out, "out")? = s;
        Ok(())
    })
}

/// # Safety
/// `p` must be null or a live patch handle, freed once.
#[no_mangle]
pub unsafe extern "C" fn ds_patch_free(p: *mut DsPatch) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Degree of the boundary curves, or `usize::MAX` for a null handle.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ds_patch_degree(p: *const DsPatch) -> usize {
    p.as_ref().map_or(usize::MAX, |p| p.0.degree())
}

/// Writes `(1 - v) c(u) + v d(u)` to `out[0..3]`.
///
/// # Safety
/// `p` must be a live handle; `out` must hold three doubles.
#[no_mangle]
pub unsafe extern "C" fn ds_patch_eval(
    p: *const DsPatch,
    u: f64,
    v: f64,
    out: *mut f64,
) -> DsStatus {
    guard(|| {
        let p = deref(p, "patch")?;
        if !(u.is_finite() && v.is_finite()) {
            return Err(devsurf::Error::NonFinite.into());
        }
        write_vec3(out, p.0.point(u, v))
    })
}

/// Normalized developability residual over `nu` samples and its verdict
/// against the default tolerance.
///
/// # Safety
/// `p` must be a live handle; `residual` and `pass` writable.
#[no_mangle]
pub unsafe extern "C" fn ds_patch_developability(
    p: *const DsPatch,
    nu: usize,
    residual: *mut f64,
    pass: *mut bool,
) -> DsStatus {
    guard(|| {
        let p = deref(p, "patch")?;
        if nu == 0 {
            return Err(Failure(
                DsStatus::InvalidArgument,
                "nu must be positive".into(),
            ));
        }
        let report = verify::developability_residual(&p.0, nu);
        *out_ptr(residual, "residual")? = report.max_residual;
        *out_ptr(pass, "pass")? = report.pass;
        Ok(())
    })
}

/// Ruling coordinate `v` of the edge of regression at `u`; needs a certificate.
///
/// # Safety
/// `p` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ds_patch_edge_parameter(
    p: *const DsPatch,
    u: f64,
    out: *mut f64,
) -> DsStatus {
    guard(|| {
        let p = deref(p, "patch")?;
        let cert =
            p.0.certificate()
                .ok_or(devsurf::Error::MissingCertificate)?;
        *out_ptr(out, "out")? = edge_parameter(cert, u)?;
        Ok(())
    })
}

/// Degree elevation by `m`.
///
/// # Safety
/// `p` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ds_patch_elevate(
    p: *const DsPatch,
    m: usize,
    out: *mut *mut DsPatch,
) -> DsStatus {
    guard(|| {
        let p = deref(p, "patch")?;
        emit_patch(out, patch_ops::elevate_patch(&p.0, m)?)
    })
}

/// Restriction of the curve parameter to `[a, b]`.
///
/// # Safety
/// `p` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ds_patch_restrict_u(
    p: *const DsPatch,
    a: f64,
    b: f64,
    out: *mut *mut DsPatch,
) -> DsStatus {
    guard(|| {
        let p = deref(p, "patch")?;
        emit_patch(out, patch_ops::restrict_u(&p.0, a, b)?)
    })
}

/// Restriction of the ruling parameter to `[a, b]`.
///
/// # Safety
/// `p` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ds_patch_restrict_v(
    p: *const DsPatch,
    a: f64,
    b: f64,
    out: *mut *mut DsPatch,
) -> DsStatus {
    guard(|| {
        let p = deref(p, "patch")?;
        emit_patch(out, patch_ops::restrict_v(&p.0, a, b)?)
    })
}

/// Classifies the patch; `vertex` (three doubles, may be null) receives the
/// cone vertex when the class is a cone.
///
/// # Safety
/// `p` must be a live handle; `out` writable; `vertex` null or three doubles.
#[no_mangle]
pub unsafe extern "C" fn ds_patch_classify(
    p: *const DsPatch,
    tol: f64,
    out: *mut DsSurfaceClass,
    vertex: *mut f64,
) -> DsStatus {
    guard(|| {
        let p = deref(p, "patch")?;
        if !(tol.is_finite() && tol > 0.0) {
            return Err(Failure(
                DsStatus::InvalidArgument,
                "tol must be positive".into(),
            ));
        }
        let class = match classify(&p.0, tol)? {
            SurfaceClass::Planar => DsSurfaceClass::Planar,
            SurfaceClass::Cylinder => DsSurfaceClass::Cylinder,
            SurfaceClass::Cone { vertex: v } => {
                if !vertex.is_null() {
                    write_vec3(vertex, v)?;
                }
                DsSurfaceClass::Cone
            }
            SurfaceClass::Tangent => DsSurfaceClass::Tangent,
        };
        *out_ptr(out, "out")? = class;
        Ok(())
    })
}

/// Wavefront OBJ tessellation on an `nu` x `nv` grid; release the string with
/// [`ds_string_free`].
///
/// # Safety
/// `p` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ds_patch_mesh_obj(
    p: *const DsPatch,
    nu: usize,
    nv: usize,
    out: *mut *mut c_char,
) -> DsStatus {
    guard(|| {
        let p = deref(p, "patch")?;
        let s = into_c_string(obj::export_obj(&p.0, nu, nv)?)?;
        *out_ptr(out, "out")? = s;
        Ok(())
    })
}
