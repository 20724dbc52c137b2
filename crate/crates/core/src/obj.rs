//! Wavefront OBJ tessellation of a patch on a regular parameter grid.

use std::fmt::Write;

use crate::developable::DevelopablePatch;
use crate::error::{Error, Result};

/// `nu * nv` vertices, u-index fastest, vertex `(i, j)` at
/// `u = i / (nu - 1)`, `v = j / (nv - 1)`; then one quad per grid cell with
/// 1-based indices. Coordinates are printed with 9 significant digits.
pub fn export_obj(patch: &DevelopablePatch, nu: usize, nv: usize) -> Result<String> {
    if nu < 2 || nv < 2 {
        return Err(Error::InvalidArgument(format!(
            "mesh needs at least 2x2 samples, got {nu}x{nv}"
        )));
    }
    let mut out = String::new();
    for j in 0..nv {
        let v = j as f64 / (nv - 1) as f64;
        for i in 0..nu {
            let u = i as f64 / (nu - 1) as f64;
            let p = patch.point(u, v);
            writeln!(
                out,
                "v {} {} {}",
                fmt_sig(p.x, 9),
                fmt_sig(p.y, 9),
                fmt_sig(p.z, 9)
            )
            .expect("write to String");
        }
    }
    let idx = |i: usize, j: usize| j * nu + i + 1;
    for j in 0..nv - 1 {
        for i in 0..nu - 1 {
            writeln!(
                out,
                "f {} {} {} {}",
                idx(i, j),
                idx(i + 1, j),
                idx(i + 1, j + 1),
                idx(i, j + 1)
            )
            .expect("write to String");
        }
    }
    Ok(out)
}

/// `printf("%.{digits}g")`.
pub fn fmt_sig(x: f64, digits: usize) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let p = digits.max(1);
    let sci = format!("{:.*e}", p - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent marker");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= p as i32 {
        let m = trim_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{m}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (p as i32 - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{:.*}", decimals, x)).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}
