//! Complex Rabi-frequency amplitudes of the driving beams.
//!
//! The probe and the second coupling beam are Gaussian, Ω_i(r) = Ω_i0
//! exp(−r²/W²); the first coupling beam is Laguerre-Gaussian,
//! Ω_c1(r,θ) = Ω_c10 (r/W)^|l| exp(−r²/W²) exp(il(θ+θ_c1)). The hybrid
//! coupling field is the coherent sum Ω_c1 + Ω_c2; for l = 1 its intensity
//! has exactly one zero in the plane, at radius κ_c·W on the ray
//! θ = π − θ_c1, where κ_c = Ω_c20/Ω_c10.
//!
//! All functions here are pure; evaluating them concurrently is safe.

use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FieldsError {
    #[error("beam width must be positive, got {0} m")]
    NonPositiveWidth(f64),
    #[error("peak Rabi frequency {name} must be nonnegative, got {value} rad/s")]
    NegativePeak { name: &'static str, value: f64 },
    #[error("winding number must be a positive integer, got {0}")]
    BadWinding(i32),
}

/// The complete optical configuration: peak Rabi frequencies of the three
/// lasers, their common width, and the LG winding number and initial phase.
///
/// Frequencies are angular (rad/s), lengths are meters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BeamSet {
    /// Probe peak Rabi frequency Ω_p0.
    pub omega_p0: f64,
    /// LG coupling peak Rabi frequency Ω_c10.
    pub omega_c10: f64,
    /// Gaussian coupling peak Rabi frequency Ω_c20.
    pub omega_c20: f64,
    /// Common beam width W (the three beams share one spot size).
    pub width: f64,
    /// LG winding number l ≥ 1.
    pub winding: i32,
    /// LG initial phase θ_c1.
    pub theta_c1: f64,
}

impl BeamSet {
    pub fn validate(&self) -> Result<(), FieldsError> {
        if !(self.width > 0.0) {
            return Err(FieldsError::NonPositiveWidth(self.width));
        }
        for (name, value) in [
            ("omega_p0", self.omega_p0),
            ("omega_c10", self.omega_c10),
            ("omega_c20", self.omega_c20),
        ] {
            if !(value >= 0.0) {
                return Err(FieldsError::NegativePeak { name, value });
            }
        }
        if self.winding < 1 {
            return Err(FieldsError::BadWinding(self.winding));
        }
        Ok(())
    }

    /// Coupling peak ratio κ_c = Ω_c20/Ω_c10; sets the localization radius
    /// r_loc = κ_c·W.
    pub fn kappa_c(&self) -> f64 {
        self.omega_c20 / self.omega_c10
    }

    /// Probe peak ratio κ_p = Ω_p0/Ω_c10; sets the resolution a_r = 2κ_p·W.
    pub fn kappa_p(&self) -> f64 {
        self.omega_p0 / self.omega_c10
    }

    /// Copy with Ω_c20 chosen so the zero of the hybrid field sits at radius
    /// `r_loc`: Ω_c20 = r_loc·Ω_c10/W.
    pub fn with_localization_radius(mut self, r_loc: f64) -> Self {
        self.omega_c20 = r_loc * self.omega_c10 / self.width;
        self
    }

    /// Copy with the probe peak set through κ_p = Ω_p0/Ω_c10.
    pub fn with_kappa_p(mut self, kappa_p: f64) -> Self {
        self.omega_p0 = kappa_p * self.omega_c10;
        self
    }
}

impl Default for BeamSet {
    /// Reproduction defaults: Ω_p0/2π = 3 MHz, Ω_c10/2π = 150 MHz, κ_c = 0.5
    /// (Ω_c20/2π = 75 MHz), W = 5 μm, l = 1, θ_c1 = π.
    fn default() -> Self {
        use crate::units::{mhz_to_angular, um_to_m};
        BeamSet {
            omega_p0: mhz_to_angular(3.0),
            omega_c10: mhz_to_angular(150.0),
            omega_c20: mhz_to_angular(75.0),
            width: um_to_m(5.0),
            winding: 1,
            theta_c1: std::f64::consts::PI,
        }
    }
}

/// A point in the transverse plane, meters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point2D {
    pub x: f64,
    pub y: f64,
}

impl Point2D {
    pub fn new(x: f64, y: f64) -> Self {
        Point2D { x, y }
    }

    pub fn from_polar(r: f64, theta: f64) -> Self {
        Point2D {
            x: r * theta.cos(),
            y: r * theta.sin(),
        }
    }

    /// Cylindrical radius r = √(x²+y²).
    pub fn r(&self) -> f64 {
        self.x.hypot(self.y)
    }

    /// Azimuthal angle θ ∈ (−π, π].
    pub fn theta(&self) -> f64 {
        let t = self.y.atan2(self.x);
        if t <= -std::f64::consts::PI {
            std::f64::consts::PI
        } else {
            t
        }
    }
}

/// Selects which of the two Gaussian beams to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GaussianChannel {
    Probe,
    Coupling2,
}

/// Gaussian amplitude Ω_i0·exp(−r²/W²); purely real and positive for
/// Ω_i0 > 0.
pub fn gaussian_amplitude(beams: &BeamSet, which: GaussianChannel, p: Point2D) -> Complex64 {
    let peak = match which {
        GaussianChannel::Probe => beams.omega_p0,
        GaussianChannel::Coupling2 => beams.omega_c20,
    };
    let r = p.r();
    Complex64::new(peak * (-(r * r) / (beams.width * beams.width)).exp(), 0.0)
}

/// LG amplitude Ω_c10·(r/W)^|l|·exp(−r²/W²)·exp(il(θ+θ_c1)); vanishes at the
/// core for |l| ≥ 1 and its modulus is θ-independent.
pub fn lg_amplitude(beams: &BeamSet, p: Point2D) -> Complex64 {
    let r = p.r();
    let w = beams.width;
    let l = beams.winding;
    let radial = beams.omega_c10 * (r / w).powi(l.abs()) * (-(r * r) / (w * w)).exp();
    let phase = f64::from(l) * (p.theta() + beams.theta_c1);
    radial * Complex64::new(phase.cos(), phase.sin())
}

/// Hybrid coupling amplitude Ω_c = Ω_c1 + Ω_c2.
pub fn hybrid_coupling(beams: &BeamSet, p: Point2D) -> Complex64 {
    lg_amplitude(beams, p) + gaussian_amplitude(beams, GaussianChannel::Coupling2, p)
}

/// Intensity of the hybrid coupling field, |Ω_c1 + Ω_c2|², from the expanded
/// closed form
///
/// ```text
/// I_c = e^(−2r²/W²) · [A² + B² + 2AB·cos(l(θ+θ_c1))],
/// A = Ω_c10 (r/W)^|l|,  B = Ω_c20.
/// ```
///
/// This is an independent code path from [`hybrid_coupling`]; the two agree
/// to relative 1e-12.
pub fn coupling_intensity(beams: &BeamSet, p: Point2D) -> f64 {
    let r = p.r();
    let w = beams.width;
    let l = beams.winding;
    let a = beams.omega_c10 * (r / w).powi(l.abs());
    let b = beams.omega_c20;
    let g2 = (-2.0 * r * r / (w * w)).exp();
    g2 * (a * a + b * b + 2.0 * a * b * (f64::from(l) * (p.theta() + beams.theta_c1)).cos())
}

/// Probe intensity I_p = |Ω_p(r)|².
pub fn probe_intensity(beams: &BeamSet, p: Point2D) -> f64 {
    let amp = gaussian_amplitude(beams, GaussianChannel::Probe, p).re;
    amp * amp
}
