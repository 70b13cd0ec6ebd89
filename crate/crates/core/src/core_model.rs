//! Physical constants, spectral functions, the contour of the scattering
//! problem, phase functions and region classification.
//!
//! Branch conventions: the square root X(k) = sqrt((k-E)(k-Ebar)) and the
//! quartic root kappa(k) = ((k-Ebar)/(k-E))^(1/4) are cut along the circle
//! arc through E, Ebar with |k| >= |E| and normalized X ~ k, kappa -> 1 at
//! infinity. Both are realized from the chord-cut branches (cut on the
//! vertical segment joining Ebar and E) with a sign/phase flip inside the
//! lune between arc and chord, which keeps every evaluation a closed form.

use crate::{C64, Error, I, Result};
use serde::Serialize;

/// Guard band half-width around the region borders in xi.
pub const BORDER_GUARD: f64 = 1e-9;

/// Boundary-data constants l, p, omega with p derived from l.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct PhysicalParams {
    pub l: f64,
    pub p: f64,
    pub omega: f64,
}

impl PhysicalParams {
    pub fn new(l: f64, omega: f64) -> Result<Self> {
        if !(-1.0 < l && l < 0.0) {
            return Err(Error::Domain(format!("l = {l} must lie in (-1, 0)")));
        }
        if !(omega > 0.0) || !omega.is_finite() {
            return Err(Error::Domain(format!("omega = {omega} must be positive")));
        }
        let p = (1.0 - l * l).sqrt();
        Ok(PhysicalParams { l, p, omega })
    }

    /// beta = l^2, the normalized parameter of the solvability polynomial.
    pub fn beta(&self) -> f64 {
        self.l * self.l
    }
}

/// Derived spectral constants: the edge point E, |E| = 1/(2 omega), the
/// second critical frequency omega0 and the border value xi0 = 1/(2 omega0).
#[derive(Debug, Clone, Copy, Serialize)]
pub struct SpectralConstants {
    pub params: PhysicalParams,
    pub e: C64,
    pub abs_e: f64,
    pub omega0: f64,
    pub xi0: f64,
    /// arg E.
    pub psi: f64,
    /// Center of the arc circle, |E|^2 / (2 E1) < 0.
    pub circle_center: f64,
    /// Radius of the arc circle, |E|^2 / (2 |E1|).
    pub circle_radius: f64,
}

pub fn derive_spectral_constants(params: PhysicalParams) -> SpectralConstants {
    let PhysicalParams { l, p, omega } = params;
    let e = C64::new(l, p) / (2.0 * omega);
    let abs_e = 1.0 / (2.0 * omega);
    let l2 = l * l;
    let s = ((1.0 - l2) * (9.0 - l2)).sqrt();
    let denom = 27.0 - 18.0 * l2 - l2 * l2 + (9.0 - l2) * s;
    let omega0 = (-8.0 * l.powi(3) * omega * omega / denom).sqrt();
    let xi0 = 1.0 / (2.0 * omega0);
    let circle_center = abs_e * abs_e / (2.0 * e.re);
    SpectralConstants {
        params,
        e,
        abs_e,
        omega0,
        xi0,
        psi: p.atan2(l),
        circle_center,
        circle_radius: -circle_center,
    }
}

impl SpectralConstants {
    pub fn new(l: f64, omega: f64) -> Result<Self> {
        Ok(derive_spectral_constants(PhysicalParams::new(l, omega)?))
    }
}

// ---------------------------------------------------------------------------
// Branch realizations
// ---------------------------------------------------------------------------

impl SpectralConstants {
    /// Chord-cut branch of sqrt((k-E)(k-Ebar)): analytic off the vertical
    /// segment [Ebar, E], behaves like k - E1 at infinity.
    pub fn x_chord(&self, k: C64) -> C64 {
        let e1 = self.e.re;
        let e2 = self.e.im;
        let u = k - e1;
        if u.norm() == 0.0 {
            return C64::new(e2, 0.0);
        }
        if u.re == 0.0 && u.im.abs() < e2 {
            // On the chord the arc-cut branch is continuous and positive.
            return C64::new((e2 * e2 - u.im * u.im).sqrt(), 0.0);
        }
        u * (C64::new(1.0, 0.0) + C64::new(e2 * e2, 0.0) / (u * u)).sqrt()
    }

    /// True when k lies in the lune between the circle arc and the chord,
    /// where the arc-cut branches differ from the chord-cut ones.
    pub fn in_flip_lune(&self, k: C64) -> bool {
        if k.re >= self.e.re {
            return false;
        }
        let dc = k - C64::new(self.circle_center, 0.0);
        dc.norm_sqr() < self.circle_radius * self.circle_radius
    }

    /// Arc-cut branch of X(k) = sqrt((k-E)(k-Ebar)), X ~ k at infinity.
    pub fn big_x(&self, k: C64) -> C64 {
        let x = self.x_chord(k);
        if self.in_flip_lune(k) { -x } else { x }
    }

    /// Chord-cut branch of kappa: exp(Log((k-Ebar)/(k-E)) / 4), -> 1 at
    /// infinity, cut on the vertical segment [Ebar, E].
    pub fn kappa_chord(&self, k: C64) -> C64 {
        let ratio = (k - self.e.conj()) / (k - self.e);
        (ratio.ln() * 0.25).exp()
    }

    /// Arc-cut branch of kappa(k) = ((k-Ebar)/(k-E))^(1/4), -> 1 at infinity.
    pub fn kappa(&self, k: C64) -> C64 {
        let kc = self.kappa_chord(k);
        if self.in_flip_lune(k) { kc * I } else { kc }
    }

    /// Signed distance diagnostics to the branch arc: returns true when k is
    /// within `tol` of the arc (the actual cut).
    pub fn near_arc(&self, k: C64, tol: f64) -> bool {
        if k.re > self.e.re + tol {
            return false;
        }
        let dc = (k - C64::new(self.circle_center, 0.0)).norm();
        (dc - self.circle_radius).abs() <= tol
    }
}

/// One-sided boundary values on the arc cut. `Plus` is the side from the
/// interior of the circle (left of the orientation E -> Ebar through the
/// negative real axis), `Minus` the exterior side.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CutSide {
    Plus,
    Minus,
}

/// Scattering data at a point: kappa, A, B, rho.
#[derive(Debug, Clone, Copy)]
pub struct Scattering {
    pub kappa: C64,
    pub a: C64,
    pub b: C64,
    pub rho: C64,
}

fn scattering_from_kappa(kappa: C64) -> Result<Scattering> {
    let inv = 1.0 / kappa;
    let a = 0.5 * (kappa + inv);
    let b = 0.5 * (kappa - inv);
    if a.norm() < 1e-14 {
        return Err(Error::Pole(format!(
            "A(k) vanishes at kappa = {kappa}; outside the admissible family"
        )));
    }
    Ok(Scattering {
        kappa,
        a,
        b,
        rho: b / a,
    })
}

/// kappa, A, B, rho at a point off the branch arc.
pub fn scattering_functions(k: C64, c: &SpectralConstants) -> Result<Scattering> {
    if c.near_arc(k, 1e-12) {
        return Err(Error::OnCut(format!(
            "k = {k} lies on the branch arc; use scattering_one_sided"
        )));
    }
    scattering_from_kappa(c.kappa(k))
}

/// One-sided scattering data for k on the branch arc. On the arc the
/// chord-cut kappa is the minus-side value and the plus side carries the
/// extra factor i.
pub fn scattering_one_sided(k: C64, side: CutSide, c: &SpectralConstants) -> Result<Scattering> {
    let kc = c.kappa_chord(k);
    let kappa = match side {
        CutSide::Minus => kc,
        CutSide::Plus => kc * I,
    };
    scattering_from_kappa(kappa)
}

/// The jump function f(k) = rho_-(k) - rho_+(k) = i / (A_-(k) A_+(k)) on the
/// arc, continued analytically off it: f = -2i X_chord(k) / E2.
pub fn f_jump(k: C64, c: &SpectralConstants) -> C64 {
    -2.0 * I * c.x_chord(k) / c.e.im
}

/// Omega(k) = (omega / 2k) X(k); the contour Sigma is its real level set.
pub fn big_omega(k: C64, c: &SpectralConstants) -> Result<C64> {
    if k.norm() == 0.0 {
        return Err(Error::Pole("Omega has a pole at k = 0".into()));
    }
    Ok(c.big_x(k) * c.params.omega / (2.0 * k))
}

/// Regularized phase theta(k, xi) = 1/(4k) + k/(4 xi^2).
pub fn theta_phase(k: C64, xi: f64) -> Result<C64> {
    if k.norm() == 0.0 {
        return Err(Error::Pole("theta has a pole at k = 0".into()));
    }
    Ok(0.25 / k + k / (4.0 * xi * xi))
}

/// Unregularized phase theta_hat(x, t; k) = t/(4k) + k x = t theta(k, xi).
pub fn theta_hat(x: f64, t: f64, k: C64) -> Result<C64> {
    if k.norm() == 0.0 {
        return Err(Error::Pole("theta_hat has a pole at k = 0".into()));
    }
    Ok(0.25 * t / k + k * x)
}

/// Slow variable xi = sqrt(t / 4x).
pub fn slow_variable(x: f64, t: f64) -> f64 {
    (t / (4.0 * x)).sqrt()
}

// ---------------------------------------------------------------------------
// Region classification
// ---------------------------------------------------------------------------

/// Which region border a guarded xi sits on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BorderKind {
    /// xi = 1/(2 omega), dispersive / elliptic.
    DispersiveElliptic,
    /// xi = xi0 = 1/(2 omega0), elliptic / plane wave.
    EllipticPlane,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RegionLabel {
    /// xi < 1/(2 omega), i.e. x > omega^2 t.
    Dispersive,
    /// 1/(2 omega) < xi < xi0.
    EllipticWave,
    /// xi > xi0, i.e. 0 < x < omega0^2 t.
    PlaneWave,
    Border(BorderKind),
}

pub fn classify_region(xi: f64, c: &SpectralConstants) -> RegionLabel {
    let b1 = 1.0 / (2.0 * c.params.omega);
    let b2 = c.xi0;
    if (xi - b1).abs() < BORDER_GUARD {
        RegionLabel::Border(BorderKind::DispersiveElliptic)
    } else if (xi - b2).abs() < BORDER_GUARD {
        RegionLabel::Border(BorderKind::EllipticPlane)
    } else if xi < b1 {
        RegionLabel::Dispersive
    } else if xi < b2 {
        RegionLabel::EllipticWave
    } else {
        RegionLabel::PlaneWave
    }
}

// ---------------------------------------------------------------------------
// Contour Sigma
// ---------------------------------------------------------------------------

/// The non-real part of the contour: circle arc from E to Ebar through the
/// point |E|^2 / E1, sampled as a polyline, plus the circle data.
#[derive(Debug, Clone, Serialize)]
pub struct ContourSigma {
    pub center: f64,
    pub radius: f64,
    /// Arc samples ordered from E to Ebar (counterclockwise, through the
    /// negative real axis).
    pub arc: Vec<C64>,
    /// Orientation of the real-line component: -inf to +inf.
    pub real_line_left_to_right: bool,
}

pub fn sigma_contour(c: &SpectralConstants, n: usize) -> Result<ContourSigma> {
    if n < 2 {
        return Err(Error::Domain("need at least 2 arc samples".into()));
    }
    let center = C64::new(c.circle_center, 0.0);
    let a_e = (c.e - center).arg();
    // Arc from angle a_e counterclockwise to 2 pi - a_e.
    let mut arc = Vec::with_capacity(n);
    for j in 0..n {
        let t = j as f64 / (n - 1) as f64;
        let ang = a_e + t * (2.0 * std::f64::consts::PI - 2.0 * a_e);
        arc.push(center + C64::from_polar(c.circle_radius, ang));
    }
    arc[0] = c.e;
    let last = arc.len() - 1;
    arc[last] = c.e.conj();
    Ok(ContourSigma {
        center: c.circle_center,
        radius: c.circle_radius,
        arc,
        real_line_left_to_right: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn default_sc() -> SpectralConstants {
        SpectralConstants::new(-0.5, 0.5).unwrap()
    }

    #[test]
    fn params_invariants() {
        let p = PhysicalParams::new(-0.5, 0.5).unwrap();
        assert!((p.p * p.p + p.l * p.l - 1.0).abs() < 1e-14);
        assert!(PhysicalParams::new(0.2, 0.5).is_err());
        assert!(PhysicalParams::new(-1.0, 0.5).is_err());
        assert!(PhysicalParams::new(-0.5, 0.0).is_err());
    }

    #[test]
    fn spectral_constants_worked_example() {
        let c = default_sc();
        assert!((c.e - C64::new(-0.5, 0.8660254037844386)).norm() < 1e-15);
        assert!((c.abs_e - 1.0).abs() < 1e-15);
        assert!((c.e.norm() - c.abs_e).abs() < 1e-14);
        assert!(c.e.re < 0.0 && c.e.im > 0.0);
        assert!((c.xi0 - 6.697216197834487).abs() < 1e-10);
        assert!((c.omega0 - 0.07465788549004475).abs() < 1e-12);
        assert!((c.psi - 2.0 * std::f64::consts::PI / 3.0).abs() < 1e-14);
    }

    #[test]
    fn xi0_squared_matches_alpha0() {
        // alpha0(beta) = (2 omega xi0)^2 for a sweep of beta.
        for i in 1..21 {
            let beta = 0.05 + 0.9 * (i - 1) as f64 / 19.0;
            let l = -beta.sqrt();
            let c = SpectralConstants::new(l, 0.7).unwrap();
            let (alpha0, _) = crate::whitham::alpha0_x0(beta).unwrap();
            let lhs = (2.0 * c.params.omega * c.xi0).powi(2);
            assert!(
                (lhs - alpha0).abs() <= 1e-12 * alpha0,
                "beta={beta}: {lhs} vs {alpha0}"
            );
        }
    }

    #[test]
    fn kappa_normalization_at_infinity() {
        let c = default_sc();
        let s = scattering_functions(C64::new(10.0, 10.0), &c).unwrap();
        assert!((s.a - C64::new(1.0, 0.0)).norm() < 1e-3);
        assert!(s.b.norm() < 1e-3);
        assert!(s.rho.norm() < 1e-3);
        // X ~ k - E1 for large real k
        let x = c.big_x(C64::new(1e4, 0.0));
        assert!((x.re - (1e4 + 0.5)).abs() < 1e-3);
        assert!(x.im.abs() < 1e-10);
    }

    #[test]
    fn a2_minus_b2_is_one() {
        let c = default_sc();
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut rnd = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 11) as f64 / (1u64 << 53) as f64) * 8.0 - 4.0
        };
        for _ in 0..1000 {
            let k = C64::new(rnd(), rnd());
            if c.near_arc(k, 1e-6) {
                continue;
            }
            let s = scattering_functions(k, &c).unwrap();
            let r = s.a * s.a - s.b * s.b - 1.0;
            assert!(r.norm() < 1e-12, "k={k}: residual {r}");
        }
    }

    #[test]
    fn schwarz_symmetry() {
        // A(conj k) = conj A(k); rho(conj k) = -conj rho(k) for this branch.
        let c = default_sc();
        let pts = [
            C64::new(0.3, 0.7),
            C64::new(-1.2, 0.4),
            C64::new(2.0, -1.0),
            C64::new(-3.0, 2.0),
        ];
        for &k in &pts {
            let s1 = scattering_functions(k, &c).unwrap();
            let s2 = scattering_functions(k.conj(), &c).unwrap();
            assert!((s2.a - s1.a.conj()).norm() < 1e-13);
            assert!((s2.rho + s1.rho.conj()).norm() < 1e-13);
            assert!((c.big_x(k.conj()) - c.big_x(k).conj()).norm() < 1e-13);
        }
    }

    #[test]
    fn kappa_unimodular_on_real_axis_and_eta_sign() {
        let c = default_sc();
        for i in 0..50 {
            let k = -4.0 + 8.2 * i as f64 / 49.0;
            if k.abs() < 1e-3 {
                continue;
            }
            let s = scattering_functions(C64::new(k, 0.0), &c).unwrap();
            assert!((s.kappa.norm() - 1.0).abs() < 1e-12, "k={k}");
            // 1 - rho^2 = 1/A^2 >= 1 on the real axis
            let one_minus_rho2 = (1.0 - s.rho * s.rho).re;
            assert!(one_minus_rho2 >= 1.0 - 1e-12, "k={k}: {one_minus_rho2}");
            let eta = one_minus_rho2.ln() / (2.0 * std::f64::consts::PI);
            assert!(eta >= 0.0);
        }
    }

    #[test]
    fn rho_at_origin_closed_form() {
        // 1 - rho^2(0) = sec^2(psi/2) = 4 for l = -1/2.
        let c = default_sc();
        let s = scattering_functions(C64::new(0.0, 0.0), &c).unwrap();
        let v = (1.0 - s.rho * s.rho).re;
        assert!((v - 4.0).abs() < 1e-12, "got {v}");
        // kappa(0) = (Ebar/E)^(1/4) = exp(-i psi / 2)
        let want = (-I * c.psi / 2.0).exp();
        assert!((s.kappa - want).norm() < 1e-12);
    }

    #[test]
    fn theta_closed_forms() {
        let xi = 0.8;
        // k = i xi: exact cancellation
        let v = theta_phase(C64::new(0.0, xi), xi).unwrap();
        assert!(v.norm() < 1e-15);
        // |k| = xi: real
        let k = C64::from_polar(xi, 0.9);
        assert!(theta_phase(k, xi).unwrap().im.abs() < 1e-15);
        // k = xi = 1 -> 1/2
        let v = theta_phase(C64::new(1.0, 0.0), 1.0).unwrap();
        assert!((v.re - 0.5).abs() < 1e-15 && v.im.abs() < 1e-15);
        assert!(theta_phase(C64::new(0.0, 0.0), 1.0).is_err());
        // theta_hat(x,t;k) = t * theta(k, xi(x,t))
        let (x, t, k) = (3.0, 7.0, C64::new(0.4, 0.3));
        let xi = slow_variable(x, t);
        let lhs = theta_hat(x, t, k).unwrap();
        let rhs = theta_phase(k, xi).unwrap() * t;
        assert!((lhs - rhs).norm() < 1e-12);
    }

    #[test]
    fn theta_sign_structure() {
        // Im theta > 0 for Im k > 0, |k| > xi; flips across |k| = xi on the
        // imaginary axis.
        let xi = 0.7;
        let hi = theta_phase(C64::new(0.0, 2.0 * xi), xi).unwrap();
        let lo = theta_phase(C64::new(0.0, 0.5 * xi), xi).unwrap();
        assert!(hi.im > 0.0 && lo.im < 0.0);
        let k = C64::from_polar(1.7 * xi, 2.4);
        assert!(theta_phase(k, xi).unwrap().im > 0.0);
    }

    #[test]
    fn region_classification() {
        let c = default_sc();
        assert_eq!(classify_region(0.5, &c), RegionLabel::Dispersive);
        assert_eq!(classify_region(3.0, &c), RegionLabel::EllipticWave);
        assert_eq!(classify_region(10.0, &c), RegionLabel::PlaneWave);
        assert_eq!(
            classify_region(1.0 + 1e-12, &c),
            RegionLabel::Border(BorderKind::DispersiveElliptic)
        );
        assert_eq!(
            classify_region(c.xi0 - 1e-11, &c),
            RegionLabel::Border(BorderKind::EllipticPlane)
        );
    }

    #[test]
    fn sigma_contour_circle_and_reality() {
        let c = default_sc();
        // For l = -1/2, omega = 1/2 the circle is (k1+1)^2 + k2^2 = 1.
        assert!((c.circle_center + 1.0).abs() < 1e-14);
        assert!((c.circle_radius - 1.0).abs() < 1e-14);
        let dc = (c.e - C64::new(c.circle_center, 0.0)).norm();
        assert!((dc - c.circle_radius).abs() < 1e-14, "E on the circle");
        let sig = sigma_contour(&c, 101).unwrap();
        assert_eq!(sig.arc[0], c.e);
        assert_eq!(sig.arc[100], c.e.conj());
        for &k in &sig.arc {
            assert!(k.norm() >= c.abs_e - 1e-12);
            let om = big_omega(k, &c).unwrap();
            assert!(om.im.abs() < 1e-10, "k={k}: Im Omega = {}", om.im);
        }
        assert!(sigma_contour(&c, 1).is_err());
    }

    #[test]
    fn omega_pole_order_at_origin() {
        let c = default_sc();
        for r in [1e-3, 1e-4] {
            let k = C64::from_polar(r, 1.1);
            let om = big_omega(k, &c).unwrap();
            let expect = c.params.omega * c.abs_e / (2.0 * r);
            assert!((om.norm() - expect).abs() < 0.02 * expect, "r={r}");
        }
        assert!(big_omega(C64::new(0.0, 0.0), &c).is_err());
    }

    #[test]
    fn one_sided_values_and_jump() {
        let c = default_sc();
        // A point on the arc: angle 140 degrees from the center.
        let k = C64::new(c.circle_center, 0.0) + C64::from_polar(c.circle_radius, 2.4);
        assert!(c.near_arc(k, 1e-9));
        let sp = scattering_one_sided(k, CutSide::Plus, &c).unwrap();
        let sm = scattering_one_sided(k, CutSide::Minus, &c).unwrap();
        // kappa_+ = i kappa_-, hence A_+ = i B_-.
        assert!((sp.kappa - I * sm.kappa).norm() < 1e-14);
        assert!((sp.a - I * sm.b).norm() < 1e-14);
        // f = rho_- - rho_+ = i/(A_- A_+) and the closed form -2i X_chord/E2.
        let f1 = sm.rho - sp.rho;
        let f2 = I / (sm.a * sp.a);
        let f3 = f_jump(k, &c);
        assert!((f1 - f2).norm() < 1e-12);
        assert!((f1 - f3).norm() < 1e-12);
        // Interior evaluation errors out on the cut.
        assert!(scattering_functions(k, &c).is_err());
    }

    #[test]
    fn big_x_negative_left_of_arc_crossing() {
        let c = default_sc();
        // The arc crosses the real axis at |E|^2/E1 = -2; left of it X < 0.
        let x = c.big_x(C64::new(-3.0, 0.0));
        assert!(x.im.abs() < 1e-14);
        assert!(x.re < 0.0);
        let x2 = c.big_x(C64::new(-1.0, 0.0));
        assert!(x2.re > 0.0, "between crossing and origin X > 0, got {x2}");
        // X^2 = (k-E)(k-Ebar) everywhere.
        for &k in &[C64::new(-3.0, 0.4), C64::new(0.5, -2.0), C64::new(-1.5, 0.2)] {
            let x = c.big_x(k);
            let want = (k - c.e) * (k - c.e.conj());
            assert!((x * x - want).norm() < 1e-12 * (1.0 + want.norm()));
        }
    }
}
