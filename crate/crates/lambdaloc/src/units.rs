//! Unit conversions between configuration units and internal SI units.
//!
//! Internally every Rabi frequency and decay rate is an angular frequency in
//! rad/s and every length is in meters. Configuration files speak the lab
//! dialect: "Ω/2π in MHz" for driven couplings and broad decay rates, plain
//! kHz for the slow ground-state decay, μm for lengths, μK for temperatures
//! and μs for times.

use std::f64::consts::TAU;

/// "Ω/2π = x MHz" → rad/s.
pub fn mhz_to_angular(mhz: f64) -> f64 {
    TAU * mhz * 1e6
}

/// rad/s → "Ω/2π in MHz".
pub fn angular_to_mhz(omega: f64) -> f64 {
    omega / (TAU * 1e6)
}

/// Plain rate in kHz → 1/s.
pub fn khz_rate_to_per_s(khz: f64) -> f64 {
    khz * 1e3
}

/// 1/s → plain rate in kHz.
pub fn per_s_to_khz_rate(rate: f64) -> f64 {
    rate * 1e-3
}

pub fn um_to_m(um: f64) -> f64 {
    um * 1e-6
}

pub fn m_to_um(m: f64) -> f64 {
    m * 1e6
}

pub fn uk_to_k(uk: f64) -> f64 {
    uk * 1e-6
}

pub fn k_to_uk(k: f64) -> f64 {
    k * 1e6
}

pub fn us_to_s(us: f64) -> f64 {
    us * 1e-6
}

pub fn s_to_us(s: f64) -> f64 {
    s * 1e6
}
