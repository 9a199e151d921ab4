//! Bond-stretching potentials V(x) and the force F(x) = −dV/dx.
//!
//! Three shapes are provided for the bond coordinate x (nm) around the
//! ideal length b:
//!
//! - harmonic:  V = ½ k_s (x−b)²
//! - Morse:     V = D [1 − exp(−β(x−b))]²
//! - cubic:     V = k_s (x−b)² + k_s k_c (x−b)³
//!
//! Energies are returned in pN·nm and forces in pN when the parameters
//! are supplied in the pN/nm unit system. The Morse well depth is kept
//! as a raw energy scalar; keeping it consistent with pN·nm is the
//! caller's responsibility.

use thiserror::Error;

/// Invalid potential parameters.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum PotentialError {
    #[error("{name} must be positive, got {value}")]
    NonPositive { name: &'static str, value: f64 },
    #[error("bond length must be nonnegative, got {0}")]
    NegativeBondLength(f64),
    #[error("{name} must be finite, got {value}")]
    NonFinite { name: &'static str, value: f64 },
}

/// A bond-stretching potential together with its parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Potential {
    /// ½ k_s (x−b)².
    Harmonic {
        /// Force constant k_s, pN/nm.
        spring_constant: f64,
        /// Ideal bond length b, nm.
        bond_length: f64,
    },
    /// D [1 − exp(−β(x−b))]².
    Morse {
        /// Well depth D (energy units consistent with the caller's system).
        well_depth: f64,
        /// Well steepness β, nm⁻¹.
        steepness: f64,
        /// Ideal bond length b, nm.
        bond_length: f64,
    },
    /// k_s (x−b)² + k_s k_c (x−b)³.
    Cubic {
        /// Force constant k_s, pN/nm.
        spring_constant: f64,
        /// Cubic coefficient k_c, nm⁻¹.
        cubic_constant: f64,
        /// Ideal bond length b, nm.
        bond_length: f64,
    },
}

impl Potential {
    /// Validated harmonic potential (k_s > 0, b ≥ 0).
    pub fn harmonic(spring_constant: f64, bond_length: f64) -> Result<Self, PotentialError> {
        require_positive("spring_constant", spring_constant)?;
        require_bond_length(bond_length)?;
        Ok(Self::Harmonic {
            spring_constant,
            bond_length,
        })
    }

    /// Validated Morse potential (D > 0, β > 0, b ≥ 0).
    pub fn morse(well_depth: f64, steepness: f64, bond_length: f64) -> Result<Self, PotentialError> {
        require_positive("well_depth", well_depth)?;
        require_positive("steepness", steepness)?;
        require_bond_length(bond_length)?;
        Ok(Self::Morse {
            well_depth,
            steepness,
            bond_length,
        })
    }

    /// Validated cubic potential (k_s > 0, b ≥ 0; k_c may take any sign).
    pub fn cubic(
        spring_constant: f64,
        cubic_constant: f64,
        bond_length: f64,
    ) -> Result<Self, PotentialError> {
        require_positive("spring_constant", spring_constant)?;
        if !cubic_constant.is_finite() {
            return Err(PotentialError::NonFinite {
                name: "cubic_constant",
                value: cubic_constant,
            });
        }
        require_bond_length(bond_length)?;
        Ok(Self::Cubic {
            spring_constant,
            cubic_constant,
            bond_length,
        })
    }

    /// The ideal bond length b, where every potential has a stationary point.
    pub fn bond_length(&self) -> f64 {
        match *self {
            Self::Harmonic { bond_length, .. }
            | Self::Morse { bond_length, .. }
            | Self::Cubic { bond_length, .. } => bond_length,
        }
    }

    /// Potential energy V(x).
    pub fn energy(&self, x: f64) -> f64 {
        match *self {
            Self::Harmonic {
                spring_constant,
                bond_length,
            } => {
                let d = x - bond_length;
                0.5 * spring_constant * d * d
            }
            Self::Morse {
                well_depth,
                steepness,
                bond_length,
            } => {
                let w = 1.0 - (-steepness * (x - bond_length)).exp();
                well_depth * w * w
            }
            Self::Cubic {
                spring_constant,
                cubic_constant,
                bond_length,
            } => {
                let d = x - bond_length;
                spring_constant * d * d + spring_constant * cubic_constant * d * d * d
            }
        }
    }

    /// Force F(x) = −dV/dx, evaluated from the analytic derivative.
    pub fn force(&self, x: f64) -> f64 {
        match *self {
            Self::Harmonic {
                spring_constant,
                bond_length,
            } => -spring_constant * (x - bond_length),
            Self::Morse {
                well_depth,
                steepness,
                bond_length,
            } => {
                let e = (-steepness * (x - bond_length)).exp();
                -2.0 * well_depth * steepness * e * (1.0 - e)
            }
            Self::Cubic {
                spring_constant,
                cubic_constant,
                bond_length,
            } => {
                let d = x - bond_length;
                -(2.0 * spring_constant * d + 3.0 * spring_constant * cubic_constant * d * d)
            }
        }
    }
}

fn require_positive(name: &'static str, value: f64) -> Result<(), PotentialError> {
    if !value.is_finite() {
        return Err(PotentialError::NonFinite { name, value });
    }
    if value <= 0.0 {
        return Err(PotentialError::NonPositive { name, value });
    }
    Ok(())
}

fn require_bond_length(b: f64) -> Result<(), PotentialError> {
    if !b.is_finite() {
        return Err(PotentialError::NonFinite {
            name: "bond_length",
            value: b,
        });
    }
    if b < 0.0 {
        return Err(PotentialError::NegativeBondLength(b));
    }
    Ok(())
}

/// Central finite difference −[V(x+h) − V(x−h)]/(2h) with
/// h = 1e−7·max(1, |x|); the independent check for [`Potential::force`].
pub fn force_finite_difference(p: &Potential, x: f64) -> f64 {
    let h = 1e-7 * x.abs().max(1.0);
    -(p.energy(x + h) - p.energy(x - h)) / (2.0 * h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_relative_eq, relative_eq};
    use proptest::prelude::*;

    fn samples() -> Vec<Potential> {
        vec![
            Potential::harmonic(2.24e6, 0.11).unwrap(),
            Potential::morse(400.0, 20.0, 0.11).unwrap(),
            Potential::cubic(2.24e6, 10.0, 0.11).unwrap(),
        ]
    }

    #[test]
    fn zero_energy_and_force_at_bond_length() {
        for p in samples() {
            let b = p.bond_length();
            assert_eq!(p.energy(b), 0.0);
            assert_eq!(p.force(b), 0.0);
        }
    }

    #[test]
    fn harmonic_energy_direct_value() {
        let p = Potential::harmonic(2.0, 1.0).unwrap();
        assert_relative_eq!(p.energy(2.0), 1.0, max_relative = 1e-15);
    }

    #[test]
    fn harmonic_force_direct_value() {
        let p = Potential::harmonic(2.24e6, 0.0).unwrap();
        assert_relative_eq!(p.force(1e-3), -2240.0, max_relative = 1e-12);
    }

    #[test]
    fn harmonic_energy_symmetric_about_bond_length() {
        let p = Potential::harmonic(2.24e6, 0.11).unwrap();
        for delta in [1e-6, 1e-4, 1e-2, 0.1] {
            assert_eq!(p.energy(0.11 + delta), p.energy(0.11 - delta));
        }
    }

    #[test]
    fn energy_minimized_at_bond_length() {
        for p in [
            Potential::harmonic(2.24e6, 0.11).unwrap(),
            Potential::morse(400.0, 20.0, 0.11).unwrap(),
        ] {
            let b = p.bond_length();
            for k in 1..=20 {
                let delta = 1e-3 * k as f64;
                assert!(p.energy(b + delta) > p.energy(b));
                assert!(p.energy(b - delta) > p.energy(b));
            }
        }
    }

    #[test]
    fn morse_small_displacement_is_harmonic() {
        // Leading Taylor term of the Morse well is Dβ²δ².
        let (d, beta, b) = (400.0, 20.0, 0.11);
        let p = Potential::morse(d, beta, b).unwrap();
        let delta = 1e-3 / beta;
        for x in [b + delta, b - delta] {
            let quadratic = d * beta * beta * (x - b) * (x - b);
            assert_relative_eq!(p.energy(x), quadratic, max_relative = 1e-2);
        }
    }

    #[test]
    fn morse_force_matches_finite_difference() {
        let p = Potential::morse(400.0, 20.0, 0.11).unwrap();
        for k in -50..=50i32 {
            let x = 0.11 + 1e-3 * k as f64;
            let fd = force_finite_difference(&p, x);
            let f = p.force(x);
            if f.abs() > 1e-9 {
                assert_relative_eq!(f, fd, max_relative = 1e-5);
            }
        }
    }

    #[test]
    fn constructors_reject_bad_parameters() {
        assert!(Potential::harmonic(0.0, 0.1).is_err());
        assert!(Potential::harmonic(-1.0, 0.1).is_err());
        assert!(Potential::harmonic(1.0, -0.1).is_err());
        assert!(Potential::morse(0.0, 1.0, 0.1).is_err());
        assert!(Potential::morse(1.0, 0.0, 0.1).is_err());
        assert!(Potential::cubic(0.0, 1.0, 0.1).is_err());
        assert!(Potential::cubic(1.0, f64::INFINITY, 0.1).is_err());
    }

    proptest! {
        // Analytic force agrees with the central finite difference of the
        // energy in a window around b where the force is not vanishing.
        #[test]
        fn force_matches_finite_difference(
            which in 0usize..3,
            delta in -0.04f64..0.04,
        ) {
            let p = samples()[which];
            let x = p.bond_length() + delta;
            let f = p.force(x);
            let fd = force_finite_difference(&p, x);
            if f.abs() > 1e-6 {
                prop_assert!(relative_eq!(f, fd, max_relative = 1e-5));
            } else {
                prop_assert!((f - fd).abs() < 1e-4);
            }
        }
    }
}
