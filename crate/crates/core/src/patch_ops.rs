//! Transformations of developable patches. Each one rewrites the control net
//! and carries the `(Lambda, M)` certificate along in closed form.

use nalgebra::DMatrix;

use crate::developable::{Certificate, DevelopablePatch};
use crate::error::{Error, Result};
use crate::poly::{Polynomial, RationalFunction};

/// Restricts the ruling parameter to `[a, b]`:
/// `c~ = (1 - a) c + a d`, `d~ = (1 - b) c + b d`,
/// `Lambda~ = b Lambda + (1 - b) M`, `M~ = a Lambda + (1 - a) M`.
pub fn restrict_v(patch: &DevelopablePatch, a: f64, b: f64) -> Result<DevelopablePatch> {
    if a == b {
        return Err(Error::DegenerateInterval { a, b });
    }
    let c = patch.c().lerp(patch.d(), a)?;
    let d = patch.c().lerp(patch.d(), b)?;
    let cert = patch.certificate().map(|k| {
        Certificate::new(
            &k.lambda_fn.scale(b) + &k.m_fn.scale(1.0 - b),
            &k.lambda_fn.scale(a) + &k.m_fn.scale(1.0 - a),
        )
    });
    Ok(DevelopablePatch::new(c, d)?.with_certificate(cert))
}

/// Restricts the curve parameter to `[a, b]` via `u = (1 - t) a + t b`:
/// `Lambda~(t) = (Lambda(u(t)) - a) / (b - a)` and likewise for `M`.
pub fn restrict_u(patch: &DevelopablePatch, a: f64, b: f64) -> Result<DevelopablePatch> {
    if a == b {
        return Err(Error::DegenerateInterval { a, b });
    }
    let c = patch.c().restrict(a, b)?;
    let d = patch.d().restrict(a, b)?;
    let inner = Polynomial::linear(a, b - a);
    let map = |f: &RationalFunction| -> Result<RationalFunction> {
        Ok(f.compose(&inner)?
            .add_poly(&Polynomial::constant(-a))
            .scale(1.0 / (b - a)))
    };
    let cert = match patch.certificate() {
        Some(k) => Some(Certificate::new(map(&k.lambda_fn)?, map(&k.m_fn)?)),
        None => None,
    };
    Ok(DevelopablePatch::new(c, d)?.with_certificate(cert))
}

/// Formal degree elevation by `m`:
/// `Lambda^m = ((n + m) Lambda - m u) / n`, likewise for `M`.
pub fn elevate_patch(patch: &DevelopablePatch, m: usize) -> Result<DevelopablePatch> {
    let n = patch.degree() as f64;
    let mf = m as f64;
    let map = |f: &RationalFunction| {
        f.scale((n + mf) / n)
            .add_poly(&Polynomial::linear(0.0, -mf / n))
    };
    let cert = patch
        .certificate()
        .map(|k| Certificate::new(map(&k.lambda_fn), map(&k.m_fn)));
    Ok(DevelopablePatch::new(patch.c().elevate(m), patch.d().elevate(m))?.with_certificate(cert))
}

/// Rescales every ruling by the polynomial factor `h(u)`: `d~ = c + h (d - c)`.
/// With `m = deg h` the result has degree `n + m` and
///
/// ```text
/// Lambda~ = u + ((n+m) h^2 (Lambda - M) + (n+m) h (M - u)) / (n h - h' (M - u))
/// M~      = u + (n+m) h (M - u) / (n h - h' (M - u))
/// ```
pub fn scale_rulings(patch: &DevelopablePatch, h: &Polynomial) -> Result<DevelopablePatch> {
    if h.is_zero() {
        return Err(Error::InvalidArgument(
            "ruling factor h is identically zero".into(),
        ));
    }
    let n = patch.degree();
    let m = h.degree();
    let big_n = (n + m) as f64;
    let hb = h.to_bernstein(m)?;
    let d = patch
        .c()
        .elevate(m)
        .add(&patch.ruling_curve().scale_by(&hb))?;
    let c = patch.c().elevate(m);

    let cert = match patch.certificate() {
        None => None,
        Some(k) => {
            let diff = &k.lambda_fn - &k.m_fn;
            let m_minus_u = k.m_fn.add_poly(&Polynomial::linear(0.0, -1.0));
            let den = &RationalFunction::from_poly(h.scale(n as f64))
                - &m_minus_u.mul_poly(&h.derivative());
            if den.is_zero() {
                return Err(Error::Degenerate(
                    "n h - h'(M - u) is identically zero".into(),
                ));
            }
            let u = Polynomial::identity();
            let m_term = m_minus_u.mul_poly(h).scale(big_n);
            let l_num = &diff.mul_poly(&(h * h)).scale(big_n) + &m_term;
            Some(Certificate::new(
                l_num.checked_div(&den)?.add_poly(&u),
                m_term.checked_div(&den)?.add_poly(&u),
            ))
        }
    };
    Ok(DevelopablePatch::new(c, d)?.with_certificate(cert))
}

/// Polynomial change of parameter `u = h(U)`. The curves become
/// `c(h(U))`, `d(h(U))` of degree `n deg h`, and with `m = deg h`
/// `Lambda^(U) = m (Lambda(h(U)) - h(U)) / h'(U) + U`, likewise for `M`.
///
/// `h'` must not vanish inside `(0, 1)`; a zero at an endpoint is allowed and
/// shows up as a boundary pole of the certificate.
pub fn reparametrize(patch: &DevelopablePatch, h: &Polynomial) -> Result<DevelopablePatch> {
    let dh = h.derivative();
    if h.degree() == 0 || dh.is_zero() {
        return Err(Error::InvalidArgument(
            "reparametrization must be non-constant".into(),
        ));
    }
    if let Some(root) = interior_root(&dh) {
        return Err(Error::InvalidArgument(format!(
            "h' vanishes at U = {root} inside (0, 1)"
        )));
    }
    let m = h.degree() as f64;
    let c = patch.c().compose(h)?;
    let d = patch.d().compose(h)?;
    let map = |f: &RationalFunction| -> Result<RationalFunction> {
        Ok(f.compose(h)?
            .add_poly(&h.scale(-1.0))
            .scale(m)
            .div_poly(&dh)?
            .add_poly(&Polynomial::identity()))
    };
    let cert = match patch.certificate() {
        Some(k) => Some(Certificate::new(map(&k.lambda_fn)?, map(&k.m_fn)?)),
        None => None,
    };
    Ok(DevelopablePatch::new(c, d)?.with_certificate(cert))
}

/// A real root of `p` strictly inside `(0, 1)`, from the companion matrix.
fn interior_root(p: &Polynomial) -> Option<f64> {
    let deg = p.degree();
    if deg == 0 {
        return None;
    }
    let lead = p.leading_coeff();
    let mut comp = DMatrix::<f64>::zeros(deg, deg);
    for i in 1..deg {
        comp[(i, i - 1)] = 1.0;
    }
    for i in 0..deg {
        comp[(i, deg - 1)] = -p.coeff(i) / lead;
    }
    comp.complex_eigenvalues()
        .iter()
        .filter(|z| z.im.abs() <= 1e-6)
        .map(|z| z.re)
        .find(|&r| r > 1e-9 && r < 1.0 - 1e-9)
}
