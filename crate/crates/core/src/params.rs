//! Physical parameters of the solvated molecule and derived constants.
//!
//! All quantities live in the pN/nm/s unit system: mass in pN·s²/nm,
//! friction in pN·s/nm, energies in pN·nm. There is no internal unit
//! conversion; callers supply values already expressed in these units.

use thiserror::Error;

/// Parameter validation failure.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParamError {
    #[error("mass must be positive, got {0}")]
    NonPositiveMass(f64),
    #[error("{name} must be nonnegative, got {value}")]
    Negative { name: &'static str, value: f64 },
    #[error("{name} must be finite, got {value}")]
    NonFinite { name: &'static str, value: f64 },
}

/// Physical parameters of a molecule moving in an implicit solvent.
///
/// `friction` is the velocity drag coefficient η and `thermal_energy`
/// is KT, the solvent temperature expressed as an energy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalParams {
    /// Mass m, pN·s²/nm.
    pub mass: f64,
    /// Friction coefficient η, pN·s/nm.
    pub friction: f64,
    /// Thermal energy KT, pN·nm.
    pub thermal_energy: f64,
    /// Ideal bond length b, nm.
    pub bond_length: f64,
}

impl PhysicalParams {
    /// Validating constructor: mass > 0, everything else ≥ 0 and finite.
    pub fn new(
        mass: f64,
        friction: f64,
        thermal_energy: f64,
        bond_length: f64,
    ) -> Result<Self, ParamError> {
        let p = Self {
            mass,
            friction,
            thermal_energy,
            bond_length,
        };
        p.validate()?;
        Ok(p)
    }

    /// Checks the type invariants without consuming the value.
    pub fn validate(&self) -> Result<(), ParamError> {
        for (name, value) in [
            ("mass", self.mass),
            ("friction", self.friction),
            ("thermal_energy", self.thermal_energy),
            ("bond_length", self.bond_length),
        ] {
            if !value.is_finite() {
                return Err(ParamError::NonFinite { name, value });
            }
        }
        if self.mass <= 0.0 {
            return Err(ParamError::NonPositiveMass(self.mass));
        }
        for (name, value) in [
            ("friction", self.friction),
            ("thermal_energy", self.thermal_energy),
            ("bond_length", self.bond_length),
        ] {
            if value < 0.0 {
                return Err(ParamError::Negative { name, value });
            }
        }
        Ok(())
    }
}

/// Amplitude ε of the random force, fixed by the fluctuation–dissipation
/// relation ε² = 2ηmKT.
///
/// Note the m inside the square root: this convention makes the
/// small-step stationary velocity variance equal KT rather than KT/m.
/// The covariance formulas in [`crate::covariance`] are consistent with
/// this convention only, so it is applied verbatim.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NoiseAmplitude {
    epsilon: f64,
}

impl NoiseAmplitude {
    /// The amplitude ε ≥ 0.
    #[inline]
    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    /// ε² = 2ηmKT.
    #[inline]
    pub fn squared(&self) -> f64 {
        self.epsilon * self.epsilon
    }
}

/// Noise amplitude from the fluctuation–dissipation relation:
/// ε = √(2·η·m·KT).
pub fn noise_amplitude(p: &PhysicalParams) -> NoiseAmplitude {
    NoiseAmplitude {
        epsilon: (2.0 * p.friction * p.mass * p.thermal_energy).sqrt(),
    }
}

/// Stokes' law friction coefficient η = 6πγR for a sphere of radius
/// `radius` (nm) in a fluid of viscosity `viscosity` (pN·s/nm²).
pub fn stokes_friction(viscosity: f64, radius: f64) -> f64 {
    6.0 * std::f64::consts::PI * viscosity * radius
}

/// Reference parameter set: molecular nitrogen in water at room
/// temperature, plus the harmonic bond force constant k_s (pN/nm).
///
/// The bond length is left at zero so the coordinate is the pure
/// fluctuation around equilibrium; override it for an absolute bond
/// coordinate.
pub fn n2_water() -> (PhysicalParams, f64) {
    (
        PhysicalParams {
            mass: 1.16265e-23,
            friction: 2.9229e-9,
            thermal_energy: 4.1,
            bond_length: 0.0,
        },
        2.24e6,
    )
}
