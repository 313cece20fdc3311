//! Physical constants (SI units).

/// Boltzmann constant, J/K (exact, 2019 SI).
pub const K_B: f64 = 1.380649e-23;

/// Atomic mass unit, kg (CODATA 2022).
pub const AMU: f64 = 1.66053906892e-27;

/// Mass of a ⁸⁷Rb atom, kg.
pub const RB87_MASS: f64 = 86.909180527 * AMU;
