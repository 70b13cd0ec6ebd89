//! The Whitham-type systems for the phase-function branch points.
//!
//! Genus 0: the real cubic whose roots lambda_- <= lambda <= lambda_+ drive
//! the plane-wave region. Genus 1: the algebraic pair for lambda_-,
//! lambda_+ plus the transcendental Abel condition fixing r = |d|; its
//! unique solvability rests on positivity of a degree-12 polynomial
//! P(x, alpha) which [`certify`] proves on boxes with interval arithmetic.

pub mod certify;

use crate::core_model::{classify_region, RegionLabel, SpectralConstants};
use crate::{C64, Error, Result};
use serde::Serialize;

/// Real roots of the genus-0 cubic at a given xi > xi0.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct Genus0Roots {
    pub lambda_minus: f64,
    pub lambda_mid: f64,
    pub lambda_plus: f64,
    pub xi: f64,
}

/// Solve k^3 - (l/2w) k^2 + l xi^2 k - xi^2/(2w) = 0 for its three real
/// roots, sorted ascending. Valid strictly inside the plane-wave region.
pub fn solve_genus0(xi: f64, c: &SpectralConstants) -> Result<Genus0Roots> {
    match classify_region(xi, c) {
        RegionLabel::PlaneWave => {}
        RegionLabel::Border(_) => {
            return Err(Error::Border {
                xi,
                which: "elliptic/plane",
            });
        }
        _ => {
            return Err(Error::Degenerate(format!(
                "genus-0 roots collide at xi0; xi = {xi} <= xi0 = {}",
                c.xi0
            )));
        }
    }
    let l = c.params.l;
    let w = c.params.omega;
    // Monic coefficients of k^3 + a2 k^2 + a1 k + a0.
    let a2 = -l / (2.0 * w);
    let a1 = l * xi * xi;
    let a0 = -xi * xi / (2.0 * w);
    let mut roots = cubic_three_real(a2, a1, a0)?;
    // Newton polish on the original cubic.
    for r in roots.iter_mut() {
        for _ in 0..2 {
            let f = ((*r + a2) * *r + a1) * *r + a0;
            let df = (3.0 * *r + 2.0 * a2) * *r + a1;
            if df != 0.0 {
                *r -= f / df;
            }
        }
    }
    roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
    Ok(Genus0Roots {
        lambda_minus: roots[0],
        lambda_mid: roots[1],
        lambda_plus: roots[2],
        xi,
    })
}

/// Trigonometric solution of a depressed real cubic with three real roots.
fn cubic_three_real(a2: f64, a1: f64, a0: f64) -> Result<[f64; 3]> {
    let p = a1 - a2 * a2 / 3.0;
    let q = 2.0 * a2.powi(3) / 27.0 - a2 * a1 / 3.0 + a0;
    let disc = -4.0 * p.powi(3) - 27.0 * q * q;
    if disc < 0.0 {
        return Err(Error::Degenerate(format!(
            "cubic discriminant {disc} < 0: complex roots"
        )));
    }
    let m = 2.0 * (-p / 3.0).sqrt();
    let arg = (3.0 * q / (p * m)).clamp(-1.0, 1.0);
    let phi = arg.acos() / 3.0;
    let mut out = [0.0; 3];
    for (j, o) in out.iter_mut().enumerate() {
        *o = m * (phi - 2.0 * std::f64::consts::PI * j as f64 / 3.0).cos() - a2 / 3.0;
    }
    Ok(out)
}

impl Genus0Roots {
    /// Residuals of the three symmetric-function equations, re-evaluated
    /// independently of the solve.
    pub fn vieta_residuals(&self, c: &SpectralConstants) -> [f64; 3] {
        let (l, w, xi) = (c.params.l, c.params.omega, self.xi);
        let (lm, la, lp) = (self.lambda_minus, self.lambda_mid, self.lambda_plus);
        [
            (la + lm + lp - l / (2.0 * w)).abs(),
            (la * (lm + lp) + lm * lp - l * xi * xi).abs(),
            (la * lm * lp - xi * xi / (2.0 * w)).abs(),
        ]
    }
}

// ---------------------------------------------------------------------------
// Normalized variables and closed forms of the solvability analysis
// ---------------------------------------------------------------------------

/// Normalized variables x = 2 omega r, alpha = (2 omega xi)^2, beta = l^2.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct NormalizedVars {
    pub x: f64,
    pub alpha: f64,
    pub beta: f64,
}

impl NormalizedVars {
    pub fn from_physical(r: f64, xi: f64, c: &SpectralConstants) -> Self {
        let tw = 2.0 * c.params.omega;
        NormalizedVars {
            x: tw * r,
            alpha: (tw * xi) * (tw * xi),
            beta: c.params.beta(),
        }
    }
}

/// cos of the angle of d in normalized variables:
/// cos phi = -sqrt(beta) (x^2 + x alpha) / (x^3 + alpha).
pub fn cos_phi(x: f64, alpha: f64, beta: f64) -> Result<f64> {
    let v = -beta.sqrt() * (x * x + x * alpha) / (x * x * x + alpha);
    if v.abs() > 1.0 + 1e-12 {
        return Err(Error::Domain(format!(
            "cos phi = {v} out of range: alpha = {alpha} exceeds the admissible band at x = {x}"
        )));
    }
    Ok(v.clamp(-1.0, 1.0))
}

/// The two real roots of lambda^2 - (E1 - r cos phi) lambda - xi^2/(2 r omega),
/// returned as (lambda_-, lambda_+) with lambda_- < 0 < lambda_+.
pub fn lambda_pm_from(r: f64, cos_phi: f64, xi: f64, c: &SpectralConstants) -> (f64, f64) {
    let s = c.e.re - r * cos_phi;
    let prod = -xi * xi / (2.0 * r * c.params.omega);
    let disc = s * s - 4.0 * prod;
    debug_assert!(disc > 0.0, "discriminant is s^2 + 2 xi^2/(r omega) > 0");
    let root = disc.sqrt();
    // Stable: compute the larger-magnitude root first, the other by Vieta.
    let lp = 0.5 * (s + root);
    let lm = prod / lp;
    (lm, lp)
}

/// Branch points of the genus-1 phase function at a given xi.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct Genus1Params {
    pub lambda_minus: f64,
    pub lambda_plus: f64,
    pub d: C64,
    pub r: f64,
    pub cos_phi: f64,
    pub xi: f64,
}

impl Genus1Params {
    /// Residuals of the three algebraic equations, re-evaluated from the
    /// stored fields alone.
    pub fn algebraic_residuals(&self, c: &SpectralConstants) -> [f64; 3] {
        let (e1, abs_e) = (c.e.re, c.abs_e);
        let (lm, lp, d, xi) = (self.lambda_minus, self.lambda_plus, self.d, self.xi);
        let r = d.norm();
        let r1 = (lm + lp - (e1 - d.re)).abs();
        let r2 = (lm * lp + xi * xi * abs_e / r).abs();
        let r3 = (2.0 * lm * lp * d.re + (lm + lp) * r * r
            + xi * xi * (e1 / abs_e * r + d.re / r * abs_e))
            .abs();
        [r1, r2, r3]
    }
}

/// Assemble the genus-1 candidate for a trial radius r: d from the cos phi
/// closed form (upper half plane), lambda_+- from the quadratic.
pub fn genus1_candidate(r: f64, xi: f64, c: &SpectralConstants) -> Result<Genus1Params> {
    if r <= 0.0 {
        return Err(Error::Domain(format!("radius r = {r} must be positive")));
    }
    let nv = NormalizedVars::from_physical(r, xi, c);
    let cp = cos_phi(nv.x, nv.alpha, nv.beta)?;
    let sp = (1.0 - cp * cp).max(0.0).sqrt();
    let d = C64::new(r * cp, r * sp);
    let (lm, lp) = lambda_pm_from(r, cp, xi, c);
    Ok(Genus1Params {
        lambda_minus: lm,
        lambda_plus: lp,
        d,
        r,
        cos_phi: cp,
        xi,
    })
}

/// The single real moduli condition F(r, xi): imaginary part of the Abel
/// integral along the upper half of the canonical symmetric path. The full
/// integral from E to Ebar equals 2i F by Schwarz symmetry.
pub fn moduli_residual_f(r: f64, xi: f64, c: &SpectralConstants) -> Result<f64> {
    let gp = genus1_candidate(r, xi, c)?;
    crate::gfun::abel_upper_leg(&gp, c, &crate::quad::QuadOpts::default()).map(|v| v.im)
}

/// Margin past x0 |E| used for the root bracket in r.
const BRACKET_UPPER_MARGIN: f64 = 1e-3;
const BRACKET_LOWER_MARGIN: f64 = 1e-9;

/// Solve the genus-1 system at xi strictly inside the elliptic region:
/// bracketed scalar root find of F(r, xi) = 0, then assembly. Uniqueness of
/// the root inside the bracket is backed by the positivity certificate.
pub fn solve_genus1(xi: f64, c: &SpectralConstants) -> Result<Genus1Params> {
    match classify_region(xi, c) {
        RegionLabel::EllipticWave => {}
        RegionLabel::Border(_) => {
            return Err(Error::Border {
                xi,
                which: "elliptic",
            });
        }
        other => {
            return Err(Error::Degenerate(format!(
                "xi = {xi} lies in {other:?}, not the elliptic region"
            )));
        }
    }
    let (_, x0) = alpha0_x0(c.params.beta())?;
    let lo = c.abs_e * (1.0 + BRACKET_LOWER_MARGIN);
    let hi = c.abs_e * x0 * (1.0 + BRACKET_UPPER_MARGIN);
    let r = crate::roots::scan_and_solve(
        |r| moduli_residual_f(r, xi, c),
        lo,
        hi,
        64,
        1e-12 * c.abs_e,
        1e-10,
    )?;
    let gp = genus1_candidate(r, xi, c)?;
    debug_assert!(gp.d.im > 0.0);
    Ok(gp)
}

// ---------------------------------------------------------------------------
// The solvability polynomial and its special points
// ---------------------------------------------------------------------------

/// P(x, alpha) for parameter beta, evaluated by Horner in alpha:
/// alpha^4 + (4x^3 + 2 b x^3 - 6 b x^5) alpha^3
///         + (3 b x^4 + 6 x^6 - 14 b x^6 + 3 b x^8) alpha^2
///         + (-6 b x^7 + 4 x^9 + 2 b x^9) alpha + x^12.
pub fn polynomial_p(x: f64, alpha: f64, beta: f64) -> f64 {
    polynomial_p_with_scale(x, alpha, beta).0
}

/// P together with the magnitude sum of its Horner terms (for relative
/// comparisons near the zero set).
pub fn polynomial_p_with_scale(x: f64, alpha: f64, beta: f64) -> (f64, f64) {
    let (c3, c2, c1, c0) = p_coeffs(x, beta);
    let mut v = alpha;
    let mut s = alpha.abs();
    v += c3;
    s += c3.abs();
    v *= alpha;
    s *= alpha.abs();
    v += c2;
    s += c2.abs();
    v *= alpha;
    s *= alpha.abs();
    v += c1;
    s += c1.abs();
    v *= alpha;
    s *= alpha.abs();
    v += c0;
    s += c0.abs();
    (v, s)
}

fn p_coeffs(x: f64, beta: f64) -> (f64, f64, f64, f64) {
    let x2 = x * x;
    let x3 = x2 * x;
    let x4 = x2 * x2;
    let x5 = x4 * x;
    let x6 = x3 * x3;
    let x7 = x6 * x;
    let x8 = x4 * x4;
    let x9 = x8 * x;
    let x12 = x6 * x6;
    let c3 = (4.0 + 2.0 * beta) * x3 - 6.0 * beta * x5;
    let c2 = 3.0 * beta * x4 + (6.0 - 14.0 * beta) * x6 + 3.0 * beta * x8;
    let c1 = -6.0 * beta * x7 + (4.0 + 2.0 * beta) * x9;
    (c3, c2, c1, x12)
}

/// The quartic in z = alpha / x^3 from the proof's rescaling:
/// z^4 + (4 + 2b - 6b x^2) z^3 + (3b/x^2 + 6 - 14b + 3b x^2) z^2
///     + (-6b/x^2 + 4 + 2b) z + 1, equal to P(x, z x^3) / x^12.
pub fn quartic_in_z(z: f64, x: f64, beta: f64) -> f64 {
    let x2 = x * x;
    let c3 = 4.0 + 2.0 * beta - 6.0 * beta * x2;
    let c2 = 3.0 * beta / x2 + 6.0 - 14.0 * beta + 3.0 * beta * x2;
    let c1 = -6.0 * beta / x2 + 4.0 + 2.0 * beta;
    (((z + c3) * z + c2) * z + c1) * z + 1.0
}

/// Closed forms of the boundary minimum of the admissible band:
/// alpha0 = (27 - 18b - b^2 + (9-b) sqrt((1-b)(9-b))) / (8 b sqrt b),
/// x0 = (3 + b + sqrt((1-b)(9-b))) / (4 sqrt b).
pub fn alpha0_x0(beta: f64) -> Result<(f64, f64)> {
    if !(0.0 < beta && beta < 1.0) {
        return Err(Error::Domain(format!("beta = {beta} must lie in (0, 1)")));
    }
    let s = ((1.0 - beta) * (9.0 - beta)).sqrt();
    let sb = beta.sqrt();
    let alpha0 = (27.0 - 18.0 * beta - beta * beta + (9.0 - beta) * s) / (8.0 * beta * sb);
    let x0 = (3.0 + beta + s) / (4.0 * sb);
    Ok((alpha0, x0))
}

/// Data at the stationarity analysis of the boundary curve.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct StationarityData {
    /// p(w) = (w+2)^2 + 2 beta (w+2) - 18 beta at the stationary w1.
    pub p_lemma: f64,
    pub w1: f64,
    pub w2: f64,
    pub z1_plus: f64,
    pub z1_minus: f64,
    pub z2_plus: f64,
    pub z2_minus: f64,
}

pub fn stationarity_data(beta: f64) -> Result<StationarityData> {
    if !(0.0 < beta && beta < 1.0) {
        return Err(Error::Domain(format!("beta = {beta} must lie in (0, 1)")));
    }
    let w1 = (5.0 - beta) / 2.0;
    let w2 = 2.0 * (13.0 - 2.0 * beta) / 5.0;
    let s1 = ((1.0 - beta) * (9.0 - beta)).sqrt();
    let s2 = ((9.0 - beta) * (4.0 - beta)).sqrt();
    let z1_plus = (5.0 - beta + s1) / 4.0;
    let z1_minus = (5.0 - beta - s1) / 4.0;
    let z2_plus = (13.0 - 2.0 * beta + 2.0 * s2) / 5.0;
    let z2_minus = (13.0 - 2.0 * beta - 2.0 * s2) / 5.0;
    let p_lemma = p_of_w(w1, beta);
    // Verified facts from the stationarity analysis.
    debug_assert!(z2_minus < 0.5);
    debug_assert!(z1_plus > 1.0);
    Ok(StationarityData {
        p_lemma,
        w1,
        w2,
        z1_plus,
        z1_minus,
        z2_plus,
        z2_minus,
    })
}

fn p_of_w(w: f64, beta: f64) -> f64 {
    let u = w + 2.0;
    u * u + 2.0 * beta * u - 18.0 * beta
}

/// Roots x_+-^2 of the biquadratic 3b(1-2z) x^4 + p x^2 + 3b(1 - 2/z),
/// with w = z + 1/z and p = (w+2)^2 + 2b(w+2) - 18b.
pub fn biquadratic_roots_x2(z: f64, beta: f64) -> Result<(f64, f64)> {
    if z <= 0.0 {
        return Err(Error::Domain(format!("z = {z} must be positive")));
    }
    if (z - 0.5).abs() < 1e-14 {
        return Err(Error::Degenerate(
            "z = 1/2 degenerates the biquadratic (leading coefficient vanishes)".into(),
        ));
    }
    let w = z + 1.0 / z;
    let p = p_of_w(w, beta);
    let disc = p * p + 36.0 * beta * beta * (2.0 * w - 5.0);
    debug_assert!(
        disc >= 0.0,
        "discriminant bounded below by 64(1-b)(4-b) > 0"
    );
    let root = disc.max(0.0).sqrt();
    let denom = 6.0 * beta * (2.0 * z - 1.0);
    let x_plus_sq = (p + root) / denom;
    let x_minus_sq = (p - root) / denom;
    // Case trichotomy from the stationarity analysis.
    if z < 0.5 {
        debug_assert!(x_plus_sq < 0.0 && x_minus_sq > 0.0 && x_minus_sq < 1.0);
    } else if z >= 2.0 {
        debug_assert!(x_minus_sq <= 1e-12 && x_plus_sq > 1.0);
    } else {
        debug_assert!(x_plus_sq > x_minus_sq && x_plus_sq > 1.0 && x_minus_sq < 1.0);
    }
    Ok((x_plus_sq, x_minus_sq))
}

pub use certify::{certify_positivity, CertificateStatus, GridSearch, PositivityCertificate};
