//! Adaptive complex contour quadrature.
//!
//! Gauss–Kronrod 15(7) panels with recursive bisection, plus helpers for
//! straight legs in the complex plane, square-root substitutions at
//! branch-point endpoints, and rays to infinity.

use crate::{C64, Error, Result};

/// Kronrod abscissae on [0,1] half-interval (symmetric), QUADPACK dqk15.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_2,
    0.949_107_912_342_758_524_5,
    0.864_864_423_359_769_072_8,
    0.741_531_185_599_394_439_9,
    0.586_087_235_467_691_130_3,
    0.405_845_151_377_397_166_9,
    0.207_784_955_007_898_467_6,
    0.0,
];

/// Kronrod weights matching `XGK`.
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_964,
    0.063_092_092_629_978_553_291,
    0.104_790_010_322_250_183_84,
    0.140_653_259_715_525_918_75,
    0.169_004_726_639_267_902_83,
    0.190_350_578_064_785_409_91,
    0.204_432_940_075_298_892_41,
    0.209_482_141_084_727_828_01,
];

/// 7-point Gauss weights (for XGK indices 1, 3, 5, 7).
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_27,
    0.279_705_391_489_276_667_9,
    0.381_830_050_505_118_944_95,
    0.417_959_183_673_469_387_76,
];

/// Quadrature options. `abs_tol` is the global absolute tolerance,
/// `panel_tol` the per-panel target, `max_depth` the bisection cap.
#[derive(Debug, Clone, Copy)]
pub struct QuadOpts {
    pub abs_tol: f64,
    pub panel_tol: f64,
    pub max_depth: u32,
}

impl Default for QuadOpts {
    fn default() -> Self {
        QuadOpts {
            abs_tol: 1e-9,
            panel_tol: 1e-10,
            max_depth: 48,
        }
    }
}

impl QuadOpts {
    pub fn with_tol(abs_tol: f64) -> Self {
        QuadOpts {
            abs_tol,
            panel_tol: abs_tol / 10.0,
            ..Self::default()
        }
    }
}

/// One GK15 panel over [a,b] of a complex-valued function of a real variable.
/// Returns (kronrod estimate, error estimate).
fn gk15<F: Fn(f64) -> C64>(f: &F, a: f64, b: f64) -> (C64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    let mut resabs = fc.norm() * WGK[7];
    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        let sum = f1 + f2;
        kronrod += sum * WGK[j];
        resabs += (f1.norm() + f2.norm()) * WGK[j];
        if j % 2 == 1 {
            gauss += sum * WG[j / 2];
        }
    }
    kronrod *= half;
    gauss *= half;
    resabs *= half.abs();
    let mut err = (kronrod - gauss).norm();
    // QUADPACK-style rescaling keeps the estimate honest on rough panels.
    if err != 0.0 && resabs != 0.0 {
        let scale = (200.0 * err / resabs).powf(1.5);
        if scale < 1.0 {
            err = resabs * scale;
        }
    }
    let round = 50.0 * f64::EPSILON * resabs;
    if round > err {
        err = round;
    }
    (kronrod, err)
}

/// Adaptive integral of `f` over the real interval [a,b].
pub fn integrate<F: Fn(f64) -> C64>(f: F, a: f64, b: f64, opts: &QuadOpts) -> Result<C64> {
    let mut total = C64::new(0.0, 0.0);
    let mut err_total = 0.0;
    adapt(&f, a, b, opts.panel_tol, opts.max_depth, &mut total, &mut err_total)?;
    if err_total > opts.abs_tol {
        return Err(Error::Quadrature {
            requested: opts.abs_tol,
            achieved: err_total,
        });
    }
    Ok(total)
}

fn adapt<F: Fn(f64) -> C64>(
    f: &F,
    a: f64,
    b: f64,
    tol: f64,
    depth: u32,
    total: &mut C64,
    err_total: &mut f64,
) -> Result<()> {
    let (val, err) = gk15(f, a, b);
    if err <= tol || depth == 0 {
        if depth == 0 && err > tol {
            // Signal failure through the accumulated error rather than
            // aborting: the caller checks the global tolerance.
        }
        *total += val;
        *err_total += err;
        return Ok(());
    }
    let mid = 0.5 * (a + b);
    if !(a < mid && mid < b) {
        *total += val;
        *err_total += err;
        return Ok(());
    }
    adapt(f, a, mid, tol * 0.6, depth - 1, total, err_total)?;
    adapt(f, mid, b, tol * 0.6, depth - 1, total, err_total)
}

/// Which substitution to apply at a leg endpoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Endpoint {
    Regular,
    /// Integrand behaves like (k - k0)^(-1/2) (or any half-power) at the
    /// endpoint; removed with k = k0 + s^2 * direction.
    SqrtSingular,
}

/// A straight leg of a contour.
#[derive(Debug, Clone, Copy)]
pub struct Leg {
    pub from: C64,
    pub to: C64,
    pub end_from: Endpoint,
    pub end_to: Endpoint,
}

impl Leg {
    pub fn regular(from: C64, to: C64) -> Self {
        Leg {
            from,
            to,
            end_from: Endpoint::Regular,
            end_to: Endpoint::Regular,
        }
    }

    pub fn singular_from(from: C64, to: C64) -> Self {
        Leg {
            from,
            to,
            end_from: Endpoint::SqrtSingular,
            end_to: Endpoint::Regular,
        }
    }

    pub fn singular_to(from: C64, to: C64) -> Self {
        Leg {
            from,
            to,
            end_from: Endpoint::Regular,
            end_to: Endpoint::SqrtSingular,
        }
    }
}

/// Integrate f(k) dk along one straight leg, applying s^2 substitutions on
/// flagged endpoints. The leg is split at the midpoint so both ends can be
/// singular.
pub fn integrate_leg<F: Fn(C64) -> C64>(f: &F, leg: &Leg, opts: &QuadOpts) -> Result<C64> {
    let dir = leg.to - leg.from;
    if dir.norm() == 0.0 {
        return Ok(C64::new(0.0, 0.0));
    }
    let mid = 0.5 * (leg.from + leg.to);
    let half_a = |t: f64| leg.from + dir * t; // t in [0, 1/2]
    let half_b = |t: f64| leg.to - dir * t; // t in [0, 1/2], reversed

    let part_a = match leg.end_from {
        Endpoint::Regular => integrate(|t| f(half_a(t)) * dir, 0.0, 0.5, opts)?,
        Endpoint::SqrtSingular => {
            // k = from + s^2 dir, dk = 2 s dir ds, s in [0, sqrt(1/2)]
            integrate(
                |s| f(leg.from + dir * (s * s)) * dir * (2.0 * s),
                0.0,
                0.5f64.sqrt(),
                opts,
            )?
        }
    };
    let part_b = match leg.end_to {
        Endpoint::Regular => -integrate(|t| f(half_b(t)) * dir, 0.0, 0.5, opts)?,
        Endpoint::SqrtSingular => {
            // k = to - s^2 dir, dk = -2 s dir ds, but orientation from mid to
            // `to` flips the sign back.
            integrate(
                |s| f(leg.to - dir * (s * s)) * dir * (2.0 * s),
                0.0,
                0.5f64.sqrt(),
                opts,
            )?
        }
    };
    debug_assert!((half_a(0.5) - mid).norm() < 1e-12 * (1.0 + mid.norm()));
    Ok(part_a + part_b)
}

/// Integrate f(k) dk along a polyline path of legs.
pub fn integrate_path<F: Fn(C64) -> C64>(f: &F, legs: &[Leg], opts: &QuadOpts) -> Result<C64> {
    let mut total = C64::new(0.0, 0.0);
    for leg in legs {
        total += integrate_leg(f, leg, opts)?;
    }
    Ok(total)
}

/// Integrate f(k) dk along the ray from `from` in unit direction `dir` to
/// infinity. Requires f = O(1/k^2); uses t = u/(1-u).
pub fn integrate_ray<F: Fn(C64) -> C64>(
    f: &F,
    from: C64,
    dir: C64,
    scale: f64,
    opts: &QuadOpts,
) -> Result<C64> {
    let d = dir / dir.norm();
    integrate(
        |u| {
            let t = scale * u / (1.0 - u);
            let jac = scale / ((1.0 - u) * (1.0 - u));
            f(from + d * t) * d * jac
        },
        0.0,
        1.0 - 1e-12,
        opts,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_exact() {
        let opts = QuadOpts::default();
        let v = integrate(|t| C64::new(t * t, t), 0.0, 1.0, &opts).unwrap();
        assert!((v.re - 1.0 / 3.0).abs() < 1e-14);
        assert!((v.im - 0.5).abs() < 1e-14);
    }

    #[test]
    fn oscillatory() {
        let opts = QuadOpts::default();
        let v = integrate(|t| C64::new((10.0 * t).cos(), 0.0), 0.0, 1.0, &opts).unwrap();
        assert!((v.re - 10.0f64.sin() / 10.0).abs() < 1e-12);
    }

    #[test]
    fn sqrt_singularity_removed() {
        // int_0^1 1/sqrt(t) dt = 2, singular at the left endpoint.
        let opts = QuadOpts::default();
        let leg = Leg::singular_from(C64::new(0.0, 0.0), C64::new(1.0, 0.0));
        let v = integrate_leg(&|k: C64| 1.0 / k.sqrt(), &leg, &opts).unwrap();
        assert!((v.re - 2.0).abs() < 1e-12, "got {v}");
        assert!(v.im.abs() < 1e-13);
    }

    #[test]
    fn complex_leg_log_primitive() {
        // int_a^b dk/k = Log(b) - Log(a) along a path in the right half plane.
        let opts = QuadOpts::default();
        let a = C64::new(1.0, -1.0);
        let b = C64::new(2.0, 3.0);
        let leg = Leg::regular(a, b);
        let v = integrate_leg(&|k: C64| 1.0 / k, &leg, &opts).unwrap();
        let want = b.ln() - a.ln();
        assert!((v - want).norm() < 1e-12);
    }

    #[test]
    fn ray_inverse_square() {
        // int_1^inf dk/k^2 = 1.
        let opts = QuadOpts::default();
        let v = integrate_ray(
            &|k: C64| 1.0 / (k * k),
            C64::new(1.0, 0.0),
            C64::new(1.0, 0.0),
            1.0,
            &opts,
        )
        .unwrap();
        assert!((v.re - 1.0).abs() < 1e-10, "got {v}");
    }

    #[test]
    fn tolerance_failure_reported() {
        let opts = QuadOpts {
            abs_tol: 1e-16,
            panel_tol: 1e-17,
            max_depth: 3,
        };
        let r = integrate(|t| C64::new((200.0 * t).sin(), 0.0), 0.0, 1.0, &opts);
        assert!(matches!(r, Err(Error::Quadrature { .. })));
    }
}
