//! Low-degree rational fits of sampled scalar functions.

use nalgebra::{DMatrix, DVector};

use crate::poly::{Polynomial, RationalFunction};

/// Finds the lowest-degree `num / den` (den monic) reproducing `values` at
/// `params` to within `tol * max(1, max |value|)`.
///
/// Candidates are tried by increasing total degree, polynomials first. The
/// fit for a given `(p, q)` is the linearized least-squares problem
/// `num(u_k) - value_k * (den(u_k) - u_k^q) = value_k * u_k^q`.
pub fn fit_rational(
    params: &[f64],
    values: &[f64],
    tol: f64,
    max_total_degree: usize,
) -> Option<RationalFunction> {
    assert_eq!(params.len(), values.len());
    let scale = values.iter().fold(1.0_f64, |m, v| m.max(v.abs()));
    let accept = tol * scale;
    for total in 0..=max_total_degree {
        for q in 0..=total {
            let p = total - q;
            if p + 1 + q + 1 > params.len() {
                continue;
            }
            let Some(r) = fit_fixed(params, values, p, q) else {
                continue;
            };
            let ok = params.iter().zip(values).all(|(&u, &v)| match r.eval(u) {
                Ok(fv) => (fv - v).abs() <= accept,
                Err(_) => false,
            });
            if ok {
                return Some(r);
            }
        }
    }
    None
}

fn fit_fixed(params: &[f64], values: &[f64], p: usize, q: usize) -> Option<RationalFunction> {
    let rows = params.len();
    let cols = p + 1 + q;
    let mut a = DMatrix::<f64>::zeros(rows, cols);
    let mut b = DVector::<f64>::zeros(rows);
    for (k, (&u, &v)) in params.iter().zip(values).enumerate() {
        for i in 0..=p {
            a[(k, i)] = u.powi(i as i32);
        }
        for j in 0..q {
            a[(k, p + 1 + j)] = -v * u.powi(j as i32);
        }
        b[k] = v * u.powi(q as i32);
    }
    let svd = a.svd(true, true);
    let x = svd.solve(&b, 1e-14).ok()?;
    let num = Polynomial::new(x.iter().take(p + 1).copied().collect());
    let mut den: Vec<f64> = x.iter().skip(p + 1).copied().collect();
    den.push(1.0);
    RationalFunction::new(num, Polynomial::new(den)).ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(n: usize) -> Vec<f64> {
        (0..n).map(|k| (k as f64 + 0.5) / n as f64).collect()
    }

    #[test]
    fn recovers_constant() {
        let us = grid(33);
        let vs = vec![2.5; 33];
        let r = fit_rational(&us, &vs, 1e-12, 4).unwrap();
        let k = r.constant_value().unwrap();
        assert!((k - 2.5).abs() < 1e-14, "{k}");
    }

    #[test]
    fn recovers_line_before_anything_else() {
        let us = grid(33);
        let vs: Vec<f64> = us.iter().map(|u| 3.0 - 0.5 * u).collect();
        let r = fit_rational(&us, &vs, 1e-12, 4).unwrap();
        assert_eq!(r.den().degree(), 0);
        assert!(r.approx_eq(&Polynomial::linear(3.0, -0.5).into(), 1e-12));
    }

    #[test]
    fn recovers_reciprocal() {
        let us = grid(33);
        let vs: Vec<f64> = us.iter().map(|u| 2.0 / u).collect();
        let r = fit_rational(&us, &vs, 1e-10, 4).unwrap();
        let expect =
            RationalFunction::new(Polynomial::constant(2.0), Polynomial::identity()).unwrap();
        assert!(r.approx_eq(&expect, 1e-9));
    }

    #[test]
    fn gives_up_on_non_rational_data() {
        let us = grid(33);
        let vs: Vec<f64> = us.iter().map(|u| (5.0 * u).sin().exp()).collect();
        assert!(fit_rational(&us, &vs, 1e-12, 3).is_none());
    }
}
