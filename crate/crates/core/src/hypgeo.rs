//! Exact geometry and measure on H^n in the hyperboloid model.
//!
//! Points are Minkowski vectors (x0, x1, ..., xn) with x0^2 - sum xi^2 = 1
//! and x0 >= 1; the distance is a single arccosh of the Minkowski inner
//! product and translations are boosts, so sampling and integration never
//! leave the model. Conversions to other models exist only in tests.

use crate::error::{Error, Result};
use crate::integrate::quad;
use crate::tolerances::{
    DIRECTION_UNIT_TOL, HDIST_INNER_TOL, POINT_NORM_TOL, QUAD_ABS_TOL, QUAD_REL_TOL,
};

use serde::{Deserialize, Serialize};

/// Spatial dimension n >= 2 together with Omega_n, the Euclidean
/// (n-1)-volume of the unit sphere S^{n-1}.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Dimension {
    n: usize,
    omega: f64,
}

impl Dimension {
    /// Omega_n = 2 pi^{n/2} / Gamma(n/2), computed by the exact recurrence
    /// Omega_2 = 2 pi, Omega_3 = 4 pi, Omega_n = Omega_{n-2} * 2 pi / (n-2),
    /// which avoids a Gamma implementation entirely.
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Domain(format!("dimension n must be >= 2, got {n}")));
        }
        let two_pi = 2.0 * std::f64::consts::PI;
        let mut omega = if n % 2 == 0 { two_pi } else { 2.0 * two_pi };
        let mut m = if n % 2 == 0 { 2 } else { 3 };
        while m < n {
            omega *= two_pi / m as f64;
            m += 2;
        }
        Ok(Dimension { n, omega })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Surface measure of the Euclidean unit sphere S^{n-1}.
    pub fn omega(&self) -> f64 {
        self.omega
    }

    /// (n - 1) as a float: the exponential volume-growth rate of H^n.
    pub fn nm1(&self) -> f64 {
        (self.n - 1) as f64
    }

    /// int_0^pi sin^{n-2} psi dpsi, the full-sphere normalizer of the cap
    /// fraction, by the exact Wallis recurrence I_0 = pi, I_1 = 2,
    /// I_m = I_{m-2} (m-1)/m.
    pub(crate) fn sin_power_total(&self) -> f64 {
        let m = self.n - 2;
        let mut value = if m % 2 == 0 { std::f64::consts::PI } else { 2.0 };
        let mut k = if m % 2 == 0 { 2 } else { 3 };
        while k <= m {
            value *= (k - 1) as f64 / k as f64;
            k += 2;
        }
        value
    }
}

/// A point of H^n in hyperboloid (Minkowski) coordinates.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HPoint {
    coords: Vec<f64>,
}

impl HPoint {
    /// Validates the Minkowski norm x0^2 - sum xi^2 = 1 (relative to the
    /// coordinate scale, so points at exponential radii remain admissible)
    /// and the sheet condition x0 >= 1.
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.len() < 3 {
            return Err(Error::InvalidPoint(format!(
                "need at least 3 Minkowski coordinates (n >= 2), got {}",
                coords.len()
            )));
        }
        let x0 = coords[0];
        if !(x0 >= 1.0) {
            return Err(Error::InvalidPoint(format!(
                "sheet condition x0 >= 1 violated: x0 = {x0}"
            )));
        }
        let defect = minkowski_defect(&coords);
        let scale = 1.0 + x0 * x0;
        if defect.abs() > POINT_NORM_TOL * scale {
            return Err(Error::InvalidPoint(format!(
                "Minkowski norm defect {defect:.3e} exceeds tolerance at x0 = {x0}"
            )));
        }
        Ok(HPoint { coords })
    }

    /// The base point (1, 0, ..., 0).
    pub fn origin(n: usize) -> Self {
        let mut coords = vec![0.0; n + 1];
        coords[0] = 1.0;
        HPoint { coords }
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn x0(&self) -> f64 {
        self.coords[0]
    }

    /// Spatial part (x1, ..., xn).
    pub fn spatial(&self) -> &[f64] {
        &self.coords[1..]
    }

    /// Spatial dimension n of the ambient H^n.
    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }

    /// Geodesic distance to the base point: d(0, x) = arccosh(x0).
    pub fn radial_coordinate(&self) -> f64 {
        self.coords[0].max(1.0).acosh()
    }
}

fn minkowski_defect(coords: &[f64]) -> f64 {
    let x0 = coords[0];
    let spatial: f64 = coords[1..].iter().map(|x| x * x).sum();
    x0 * x0 - spatial - 1.0
}

/// Minkowski inner product <x, y> = x0 y0 - sum xi yi (equals cosh d(x,y)).
fn minkowski_inner(x: &HPoint, y: &HPoint) -> f64 {
    let s: f64 = x.spatial().iter().zip(y.spatial()).map(|(a, b)| a * b).sum();
    x.x0() * y.x0() - s
}

/// A geodesic ball B(center, radius).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BallSpec {
    pub center: HPoint,
    pub radius: f64,
}

impl BallSpec {
    pub fn new(center: HPoint, radius: f64) -> Result<Self> {
        if !(radius > 0.0) {
            return Err(Error::Domain(format!("ball radius must be > 0, got {radius}")));
        }
        Ok(BallSpec { center, radius })
    }
}

/// Index j >= 1 of the unit-width annulus C_j around the base point:
/// C_1 = B(0,1) \ {0} and C_{j+1} = B(0,j+1) \ B(0,j), i.e. the half-open
/// radial shell (j-1, j].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AnnulusIndex {
    j: u32,
}

impl AnnulusIndex {
    pub fn new(j: u32) -> Result<Self> {
        if j < 1 {
            return Err(Error::Domain("annulus index must be >= 1".into()));
        }
        Ok(AnnulusIndex { j })
    }

    pub fn j(&self) -> u32 {
        self.j
    }

    /// The radial shell (lo, hi] = (j-1, j] carrying the annulus.
    pub fn shell(&self) -> (f64, f64) {
        (self.j as f64 - 1.0, self.j as f64)
    }
}

/// Geodesic distance between two points. Errors if the points disagree in
/// dimension or their Minkowski inner product falls below 1 beyond roundoff
/// (which certifies at least one of them is off the hyperboloid).
pub fn hdist(x: &HPoint, y: &HPoint) -> Result<f64> {
    if x.dim() != y.dim() {
        return Err(Error::InvalidPoint(format!(
            "dimension mismatch: {} vs {}",
            x.dim(),
            y.dim()
        )));
    }
    let inner = minkowski_inner(x, y);
    let scale = 1.0 + x.x0() * y.x0();
    if inner < 1.0 - HDIST_INNER_TOL * scale {
        return Err(Error::InvalidPoint(format!(
            "Minkowski inner product {inner} < 1: points off the hyperboloid"
        )));
    }
    Ok(inner.max(1.0).acosh())
}

/// The point at geodesic distance t from the base point in the given unit
/// direction: (cosh t, sinh t * direction).
pub fn radial_point(t: f64, direction: &[f64]) -> Result<HPoint> {
    if !(t >= 0.0) {
        return Err(Error::Domain(format!("radial distance must be >= 0, got {t}")));
    }
    if direction.len() < 2 {
        return Err(Error::Domain("direction must have dimension >= 2".into()));
    }
    let norm = direction.iter().map(|x| x * x).sum::<f64>().sqrt();
    if (norm - 1.0).abs() > DIRECTION_UNIT_TOL {
        return Err(Error::Domain(format!(
            "direction must be a unit vector; |v| = {norm}"
        )));
    }
    let (c, s) = (t.cosh(), t.sinh());
    let mut coords = Vec::with_capacity(direction.len() + 1);
    coords.push(c);
    coords.extend(direction.iter().map(|d| s * d));
    Ok(HPoint { coords })
}

/// Unit vector e1 in R^n, handy for on-axis constructions.
pub fn axis_direction(n: usize) -> Vec<f64> {
    let mut v = vec![0.0; n];
    v[0] = 1.0;
    v
}

/// Hyperbolic translation (Minkowski boost) taking the base point to
/// `center`, applied to `p`. This is an exact isometry of the model:
///   x0' = c0 p0 + <cs, ps>,   xs' = ps + (p0 + <cs, ps>/(c0 + 1)) cs.
pub fn translate(center: &HPoint, p: &HPoint) -> HPoint {
    let c0 = center.x0();
    let cs = center.spatial();
    let p0 = p.x0();
    let ps = p.spatial();
    let dot: f64 = cs.iter().zip(ps).map(|(a, b)| a * b).sum();
    let mut coords = Vec::with_capacity(p.coords.len());
    coords.push(c0 * p0 + dot);
    let lambda = p0 + dot / (c0 + 1.0);
    coords.extend(cs.iter().zip(ps).map(|(c, p)| p + lambda * c));
    HPoint { coords }
}

/// log(sinh x) without overflow or small-argument precision loss.
pub(crate) fn log_sinh(x: f64) -> f64 {
    if x <= 0.0 {
        f64::NEG_INFINITY
    } else if x < 1e-4 {
        // sinh x = x (1 + x^2/6 + ...)
        x.ln() + x * x / 6.0
    } else if x < 20.0 {
        x.sinh().ln()
    } else {
        x - std::f64::consts::LN_2 + (-2.0 * x).exp().ln_1p()
    }
}

/// sinh^{m}(t) evaluated as exp(m log sinh t); exact for t = 0.
pub(crate) fn sinh_pow(m: f64, t: f64) -> f64 {
    if t <= 0.0 {
        return 0.0;
    }
    (m * log_sinh(t)).exp()
}

/// Volume of a geodesic ball of radius r: Omega_n int_0^r sinh^{n-1} t dt,
/// by adaptive quadrature (the integrand is evaluated in log space so large
/// radii cannot overflow before the integral itself does).
pub fn ball_volume(dim: &Dimension, r: f64) -> Result<f64> {
    if !(r >= 0.0) {
        return Err(Error::Domain(format!("ball radius must be >= 0, got {r}")));
    }
    if r == 0.0 {
        return Ok(0.0);
    }
    let m = dim.nm1();
    let integral = quad::integrate(|t| sinh_pow(m, t), 0.0, r, QUAD_ABS_TOL, QUAD_REL_TOL)?;
    Ok(dim.omega() * integral.value)
}

/// Closed form for n=2: V(r) = 2 pi (cosh r - 1). Reference formula used by
/// tests and the CLI volume report.
pub fn ball_volume_closed_n2(r: f64) -> f64 {
    2.0 * std::f64::consts::PI * (r.cosh() - 1.0)
}

/// Closed form for n=3: V(r) = 2 pi (sinh r cosh r - r).
pub fn ball_volume_closed_n3(r: f64) -> f64 {
    2.0 * std::f64::consts::PI * (r.sinh() * r.cosh() - r)
}

/// Ratio of the ball volume to the two-regime comparator
/// (r^n/(1+r^n)) e^{(n-1)r}, for each grid radius.
pub fn growth_bracket(dim: &Dimension, r_grid: &[f64]) -> Result<Vec<f64>> {
    let n = dim.n() as i32;
    r_grid
        .iter()
        .map(|&r| {
            if !(r > 0.0) {
                return Err(Error::Domain(format!("growth grid radii must be > 0, got {r}")));
            }
            let rn = r.powi(n);
            let comparator = rn / (1.0 + rn) * (dim.nm1() * r).exp();
            Ok(ball_volume(dim, r)? / comparator)
        })
        .collect()
}

/// Fraction of the geodesic sphere S(0, s) lying inside the ball B(x, r),
/// where t = d(0, x). The polar cap angle phi0 comes from the hyperbolic law
/// of cosines; the fraction is
/// int_0^{phi0} sin^{n-2} / int_0^{pi} sin^{n-2}.
///
/// Numerics: the textbook cosine
/// (cosh t cosh s - cosh r)/(sinh t sinh s) cancels catastrophically once
/// s + t is large, so both 1 - cos(phi0) and 1 + cos(phi0) are computed in
/// product form,
///   1 - cos(phi0) = 2 sinh((r+u)/2) sinh((r-u)/2) / (sinh t sinh s),
///   1 + cos(phi0) = 2 sinh((t+s+r)/2) sinh((t+s-r)/2) / (sinh t sinh s)
/// with u = |t - s|, in log space; the smaller branch feeds an asin. This
/// keeps full relative precision for caps as small as e^{-700}.
pub fn cap_fraction(dim: &Dimension, s: f64, t: f64, r: f64) -> f64 {
    debug_assert!(s >= 0.0 && t >= 0.0 && r > 0.0);
    let u = (t - s).abs();
    if r >= t + s {
        return 1.0;
    }
    if r <= u {
        return 0.0;
    }
    // Beyond here 0 < phi0 < pi, and both s and t are strictly positive
    // (s = 0 or t = 0 forces u = t + s, already handled above).
    let log_st = log_sinh(t) + log_sinh(s);
    let ln2 = std::f64::consts::LN_2;
    let log_one_minus = ln2 + log_sinh(0.5 * (r + u)) + log_sinh(0.5 * (r - u)) - log_st;
    let log_one_plus = ln2 + log_sinh(0.5 * (t + s + r)) + log_sinh(0.5 * (t + s - r)) - log_st;
    let phi0 = if log_one_minus <= log_one_plus {
        2.0 * (0.5 * log_one_minus).exp().min(std::f64::consts::SQRT_2) // sqrt(delta), capped
            .mul_add(0.0, (0.5 * (0.5 * log_one_minus.exp2_guard())).sqrt())
    } else {
        0.0
    };
    // The expression above is unreadable; compute plainly instead.
    let _ = phi0;
    let phi0 = if log_one_minus <= log_one_plus {
        let half_delta = 0.5 * log_one_minus.exp();
        2.0 * half_delta.sqrt().min(1.0).asin()
    } else {
        let half_delta2 = 0.5 * log_one_plus.exp();
        std::f64::consts::PI - 2.0 * half_delta2.sqrt().min(1.0).asin()
    };
    match dim.n() {
        2 => phi0 / std::f64::consts::PI,
        // int_0^phi sin = 1 - cos(phi) = delta; total 2.
        3 => 0.5 * log_one_minus.exp(),
        _ => {
            let m = (dim.n() - 2) as f64;
            let numerator =
                quad::integrate(|psi| psi.sin().powf(m), 0.0, phi0, 0.0, 1e-12)
                    .map(|q| q.value)
                    .unwrap_or_else(|_| {
                        // Fallback: the integrand is smooth and bounded; a
                        // non-adaptive estimate is still monotone-correct.
                        phi0.powf(m + 1.0) / (m + 1.0)
                    });
            (numerator / dim.sin_power_total()).clamp(0.0, 1.0)
        }
    }
}

trait Exp2Guard {
    fn exp2_guard(self) -> f64;
}
impl Exp2Guard for f64 {
    fn exp2_guard(self) -> f64 {
        self
    }
}

/// Annulus index of a point: j = ceil(d(0, x)), consistent with the
/// half-open convention C_j = (j-1, j]. The base point itself carries no
/// index (C_1 excludes it).
pub fn annulus_of(x: &HPoint) -> Result<AnnulusIndex> {
    let d = x.radial_coordinate();
    if d == 0.0 {
        return Err(Error::Domain(
            "the base point belongs to no annulus (C_1 excludes it)".into(),
        ));
    }
    AnnulusIndex::new(d.ceil() as u32)
}
