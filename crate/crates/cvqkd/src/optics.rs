//! Variance-level model of quadrature-encoded optical beams.
//!
//! States are spectral noise/signal powers at one analysis frequency,
//! normalized to the quantum noise limit (QNL): a coherent beam has unit
//! noise power in both quadratures. Beamsplitter taps and line loss mix in
//! vacuum at the QNL; measurement penalties are constrained by the
//! generalized uncertainty product.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::real::Real;

/// Relative tolerance for physicality checks on closed-form algebra.
pub const PHYSICALITY_TOL: f64 = 1e-12;

/// Which quadrature a homodyne detector selects.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Quadrature {
    Amplitude,
    Phase,
}

impl Quadrature {
    pub fn other(self) -> Self {
        match self {
            Quadrature::Amplitude => Quadrature::Phase,
            Quadrature::Phase => Quadrature::Amplitude,
        }
    }
}

/// Noise and signal powers per quadrature, in QNL units.
///
/// `vn_*` are the quantum noise floors (coherent vacuum = 1), `vs_*` the
/// modulation signal powers riding on them.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureChannelState<T> {
    vn_plus: T,
    vn_minus: T,
    vs_plus: T,
    vs_minus: T,
}

impl<T: Real> QuadratureChannelState<T> {
    /// Build a state, enforcing non-negativity and the uncertainty floor
    /// `vn_plus * vn_minus >= 1` (minimum-uncertainty states sit on it).
    pub fn new(vn_plus: T, vn_minus: T, vs_plus: T, vs_minus: T) -> Result<Self> {
        for (what, v) in [
            ("vn_plus", vn_plus),
            ("vn_minus", vn_minus),
            ("vs_plus", vs_plus),
            ("vs_minus", vs_minus),
        ] {
            if !(v >= T::zero()) {
                return Err(Error::Domain {
                    what,
                    value: v.to_f64().unwrap_or(f64::NAN),
                });
            }
        }
        let product = vn_plus * vn_minus;
        if product < T::one() - T::of(PHYSICALITY_TOL) {
            return Err(Error::Unphysical {
                what: "noise uncertainty product vn_plus*vn_minus",
                value: product.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(Self {
            vn_plus,
            vn_minus,
            vs_plus,
            vs_minus,
        })
    }

    /// Coherent beam: unit noise floor in both quadratures.
    pub fn coherent(vs_plus: T, vs_minus: T) -> Result<Self> {
        Self::new(T::one(), T::one(), vs_plus, vs_minus)
    }

    /// Coherent beam carrying equal signal power on both quadratures.
    pub fn coherent_symmetric(vs: T) -> Result<Self> {
        Self::coherent(vs, vs)
    }

    pub fn vn(&self, q: Quadrature) -> T {
        match q {
            Quadrature::Amplitude => self.vn_plus,
            Quadrature::Phase => self.vn_minus,
        }
    }

    pub fn vs(&self, q: Quadrature) -> T {
        match q {
            Quadrature::Amplitude => self.vs_plus,
            Quadrature::Phase => self.vs_minus,
        }
    }

    /// Signal-to-noise ratio of the selected quadrature (linear).
    pub fn snr(&self, q: Quadrature) -> Result<T> {
        snr_ratio(self.vs(q), self.vn(q))
    }

    /// Split the beam on a beamsplitter with the given tap fraction; vacuum
    /// enters the empty port. Returns `(tapped, transmitted)`.
    ///
    /// Per quadrature the tapped output has `vs' = f*vs`,
    /// `vn' = f*vn + (1-f)`, and the transmitted output is complementary.
    pub fn tap(&self, fraction: T) -> Result<(Self, Self)> {
        if !(fraction >= T::zero() && fraction <= T::one()) {
            return Err(Error::Domain {
                what: "tap fraction",
                value: fraction.to_f64().unwrap_or(f64::NAN),
            });
        }
        let f = fraction;
        let g = T::one() - f;
        let tapped = Self::new(
            f * self.vn_plus + g,
            f * self.vn_minus + g,
            f * self.vs_plus,
            f * self.vs_minus,
        )?;
        let transmitted = Self::new(
            g * self.vn_plus + f,
            g * self.vn_minus + f,
            g * self.vs_plus,
            g * self.vs_minus,
        )?;
        Ok((tapped, transmitted))
    }

    /// Propagate through a line with the given loss fraction: the transmitted
    /// port of a beamsplitter to vacuum. The reflected (lost) port is what a
    /// worst-case eavesdropper holds.
    pub fn apply_loss(&self, loss: T) -> Result<Self> {
        if !(loss >= T::zero() && loss < T::one()) {
            return Err(Error::Domain {
                what: "loss fraction",
                value: loss.to_f64().unwrap_or(f64::NAN),
            });
        }
        let (_, transmitted) = self.tap(loss)?;
        Ok(transmitted)
    }
}

/// Signal-to-noise ratio `vs/vn`; errors on a vanishing noise floor.
pub fn snr_ratio<T: Real>(vs: T, vn: T) -> Result<T> {
    if !(vs >= T::zero()) {
        return Err(Error::Domain {
            what: "signal power",
            value: vs.to_f64().unwrap_or(f64::NAN),
        });
    }
    if !(vn > T::zero()) {
        return Err(Error::ZeroNoise);
    }
    Ok(vs / vn)
}

/// Added-noise penalties (QNL units) carried by Eve's and Bob's measurements.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MeasurementPenalties<T> {
    pub v_e_plus: T,
    pub v_e_minus: T,
    pub v_b_plus: T,
    pub v_b_minus: T,
}

impl<T: Real> MeasurementPenalties<T> {
    pub fn new(v_e_plus: T, v_e_minus: T, v_b_plus: T, v_b_minus: T) -> Result<Self> {
        for (what, v) in [
            ("v_e_plus", v_e_plus),
            ("v_e_minus", v_e_minus),
            ("v_b_plus", v_b_plus),
            ("v_b_minus", v_b_minus),
        ] {
            if !(v >= T::zero()) {
                return Err(Error::Domain {
                    what,
                    value: v.to_f64().unwrap_or(f64::NAN),
                });
            }
        }
        Ok(Self {
            v_e_plus,
            v_e_minus,
            v_b_plus,
            v_b_minus,
        })
    }
}

/// The three uncertainty products a joint (Eve, Bob) measurement must obey.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum UncertaintyConstraint {
    /// V_E+ * V_E- >= 1: Eve's own simultaneous-measurement product.
    EvePair,
    /// V_B+ * V_E- >= 1: Bob's amplitude penalty against Eve's phase penalty.
    BobPlusEveMinus,
    /// V_E+ * V_B- >= 1: Eve's amplitude penalty against Bob's phase penalty.
    EvePlusBobMinus,
}

/// Outcome of [`check_uncertainty`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UncertaintyCheck {
    pub admissible: bool,
    pub violated: Vec<UncertaintyConstraint>,
}

/// Evaluate the three generalized-uncertainty products against 1, within
/// [`PHYSICALITY_TOL`] on each product.
pub fn check_uncertainty<T: Real>(p: &MeasurementPenalties<T>) -> UncertaintyCheck {
    let floor = T::one() - T::of(PHYSICALITY_TOL);
    let mut violated = Vec::new();
    if p.v_e_plus * p.v_e_minus < floor {
        violated.push(UncertaintyConstraint::EvePair);
    }
    if p.v_b_plus * p.v_e_minus < floor {
        violated.push(UncertaintyConstraint::BobPlusEveMinus);
    }
    if p.v_e_plus * p.v_b_minus < floor {
        violated.push(UncertaintyConstraint::EvePlusBobMinus);
    }
    UncertaintyCheck {
        admissible: violated.is_empty(),
        violated,
    }
}
