//! Bracketed scalar root finding (Brent's method).

use crate::{Error, Result};

/// Find a root of `f` in [a, b] with f(a) f(b) <= 0.
///
/// Converges to `x_tol` in the argument; returns the best iterate. `f_tol`
/// is an early-out on the residual.
pub fn brent<F: FnMut(f64) -> Result<f64>>(
    mut f: F,
    a: f64,
    b: f64,
    x_tol: f64,
    f_tol: f64,
    max_iter: usize,
) -> Result<f64> {
    let (mut a, mut b) = (a, b);
    let mut fa = f(a)?;
    let mut fb = f(b)?;
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa * fb > 0.0 {
        return Err(Error::NoSignChange { lo: a, hi: b });
    }
    let mut c = a;
    let mut fc = fa;
    let mut d = b - a;
    let mut e = d;
    for _ in 0..max_iter {
        if fb.abs() > fc.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol1 = 2.0 * f64::EPSILON * b.abs() + 0.5 * x_tol;
        let xm = 0.5 * (c - b);
        if xm.abs() <= tol1 || fb.abs() <= f_tol {
            return Ok(b);
        }
        if e.abs() >= tol1 && fa.abs() > fb.abs() {
            // Inverse quadratic interpolation / secant.
            let s = fb / fa;
            let (mut p, mut q);
            if a == c {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                let q0 = fa / fc;
                let r = fb / fc;
                p = s * (2.0 * xm * q0 * (q0 - r) - (b - a) * (r - 1.0));
                q = (q0 - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if p > 0.0 {
                q = -q;
            }
            p = p.abs();
            if 2.0 * p < (3.0 * xm * q - (tol1 * q).abs()).min((e * q).abs()) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += if d.abs() > tol1 {
            d
        } else if xm > 0.0 {
            tol1
        } else {
            -tol1
        };
        fb = f(b)?;
        if (fb > 0.0) == (fc > 0.0) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
    }
    Err(Error::ToleranceNotMet(format!(
        "brent did not converge in {max_iter} iterations (last x = {b})"
    )))
}

/// Scan [lo, hi] at `n` points for a sign change of `f`, then refine with
/// Brent. Returns the root.
pub fn scan_and_solve<F: FnMut(f64) -> Result<f64>>(
    mut f: F,
    lo: f64,
    hi: f64,
    n: usize,
    x_tol: f64,
    f_tol: f64,
) -> Result<f64> {
    let mut prev_x = lo;
    let mut prev_f = f(prev_x)?;
    if prev_f == 0.0 {
        return Ok(prev_x);
    }
    for i in 1..n {
        let x = lo + (hi - lo) * i as f64 / (n - 1) as f64;
        let fx = f(x)?;
        if fx == 0.0 {
            return Ok(x);
        }
        if prev_f * fx < 0.0 {
            return brent(f, prev_x, x, x_tol, f_tol, 200);
        }
        prev_x = x;
        prev_f = fx;
    }
    Err(Error::NoSignChange { lo, hi })
}
