//! Eavesdropper strategies and their quantum-mechanical limits.
//!
//! Strategies are evaluated informationally: each attack yields signal
//! transfer coefficients for Eve and Bob plus the bit error rates a
//! threshold detector would see. Intercept-resend strategies (`Guess`,
//! `MidQuadrature`) are modelled at the bit level rather than as a second
//! physical beam, since only the resulting error rates matter.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::infotheory::{ber_from_snr, ErrorProbability};
use crate::optics::MeasurementPenalties;
use crate::real::Real;

/// Amplitude/phase signal-transfer coefficients for one receiver.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TransferPair<T> {
    pub plus: T,
    pub minus: T,
}

impl<T: Real> TransferPair<T> {
    pub fn new(plus: T, minus: T) -> Result<Self> {
        for v in [plus, minus] {
            if !(v >= T::zero() && v <= T::one()) {
                return Err(Error::Domain {
                    what: "transfer coefficient",
                    value: v.to_f64().unwrap_or(f64::NAN),
                });
            }
        }
        Ok(Self { plus, minus })
    }

    pub fn symmetric(t: T) -> Result<Self> {
        Self::new(t, t)
    }
}

/// Eavesdropper strategy with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum AttackModel<T> {
    /// Eve guesses the quadrature Bob will read, measures it, and resends.
    Guess,
    /// Homodyne detection halfway between the quadratures; 0,1 and 1,0 are
    /// indistinguishable.
    MidQuadrature,
    /// Tap off `fraction` of the beam and detect both quadratures of the tap.
    /// `fraction = 0` is the no-attack channel.
    Beamsplit { fraction: T },
    /// Symmetric attack saturating the transfer sum rule: Eve takes `t_e`
    /// on both quadratures, Bob keeps the complement.
    OptimalSymmetric { t_e: T },
    /// Teleport the intercepted beam and read the classical channel.
    /// `lambda = None` runs the teleporter at the minimum-disturbance gain.
    Teleport { gain: T, lambda: Option<T> },
}

impl<T: Real> AttackModel<T> {
    /// Check the parameter ranges for this strategy.
    pub fn validate(&self) -> Result<()> {
        match *self {
            AttackModel::Guess | AttackModel::MidQuadrature => Ok(()),
            AttackModel::Beamsplit { fraction } => {
                if fraction >= T::zero() && fraction <= T::one() {
                    Ok(())
                } else {
                    Err(Error::Domain {
                        what: "beamsplit fraction",
                        value: fraction.to_f64().unwrap_or(f64::NAN),
                    })
                }
            }
            AttackModel::OptimalSymmetric { t_e } => {
                if t_e > T::zero() && t_e <= T::half() {
                    Ok(())
                } else {
                    Err(Error::Domain {
                        what: "symmetric attack t_e (need 0 < t_e <= 1/2)",
                        value: t_e.to_f64().unwrap_or(f64::NAN),
                    })
                }
            }
            AttackModel::Teleport { gain, lambda } => {
                if !(gain >= T::one()) {
                    return Err(Error::Domain {
                        what: "teleporter parametric gain (need G >= 1)",
                        value: gain.to_f64().unwrap_or(f64::NAN),
                    });
                }
                if let Some(l) = lambda {
                    if !(l > T::zero()) {
                        return Err(Error::Domain {
                            what: "teleporter gain lambda (need > 0)",
                            value: l.to_f64().unwrap_or(f64::NAN),
                        });
                    }
                }
                Ok(())
            }
        }
    }
}

/// Transfers and error rates produced by an attack on a given channel.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AttackOutcome<T> {
    pub t_eve: TransferPair<T>,
    pub t_bob: TransferPair<T>,
    pub ber_eve: ErrorProbability<T>,
    pub ber_bob: ErrorProbability<T>,
}

/// Evaluate an attack on the coherent scheme with a lossless line.
///
/// `snr_in` is the single-quadrature signal-to-noise Bob would see untouched.
pub fn coherent_attack<T: Real>(model: &AttackModel<T>, snr_in: T) -> Result<AttackOutcome<T>> {
    coherent_attack_lossy(model, snr_in, T::zero())
}

/// Evaluate an attack on the coherent scheme with line loss after the attack.
///
/// Loss scales Bob's signal-to-noise by `1 - loss` (coherent floors stay at
/// the QNL); Eve intercepts upstream, so her side is loss-free.
pub fn coherent_attack_lossy<T: Real>(
    model: &AttackModel<T>,
    snr_in: T,
    loss: T,
) -> Result<AttackOutcome<T>> {
    if !(snr_in > T::zero()) {
        return Err(Error::Domain {
            what: "snr_in",
            value: snr_in.to_f64().unwrap_or(f64::NAN),
        });
    }
    if !(loss >= T::zero() && loss < T::one()) {
        return Err(Error::Domain {
            what: "loss fraction",
            value: loss.to_f64().unwrap_or(f64::NAN),
        });
    }
    model.validate()?;
    let bob_leg = (T::one() - loss) * snr_in;
    match *model {
        AttackModel::Guess => {
            // Eve reads one quadrature at full SNR and resends her bits; on
            // the other quadrature both she and Bob get coin flips. Averaged
            // over her guess, each transfer is 1/2 and the error rates are
            // the 25% mixture plus the detection errors of the two legs.
            let b_e = ber_from_snr(snr_in)?.value();
            let b_b = ber_from_snr(bob_leg)?.value();
            let quarter = T::half() * T::half();
            let ber_eve = quarter + T::half() * b_e;
            let relay = b_e + b_b - T::two() * b_e * b_b;
            let ber_bob = quarter + T::half() * relay;
            Ok(AttackOutcome {
                t_eve: TransferPair::symmetric(T::half())?,
                t_bob: TransferPair::symmetric(T::half())?,
                ber_eve: ErrorProbability::new(ber_eve)?,
                ber_bob: ErrorProbability::new(ber_bob)?,
            })
        }
        AttackModel::MidQuadrature => {
            // Eve resolves only whether the two bits agree: when they differ
            // she is wrong on both with probability 1/2, giving 25% outright.
            let b_b = ber_from_snr(bob_leg)?.value();
            let quarter = T::half() * T::half();
            let ber_bob = quarter + T::half() * b_b;
            Ok(AttackOutcome {
                t_eve: TransferPair::symmetric(T::half())?,
                t_bob: TransferPair::symmetric(T::half())?,
                ber_eve: ErrorProbability::new(quarter)?,
                ber_bob: ErrorProbability::new(ber_bob)?,
            })
        }
        AttackModel::Beamsplit { fraction } => {
            // Tapping then splitting for simultaneous detection leaves Eve
            // with half the tapped transfer on each quadrature.
            let t_e = fraction * T::half();
            let t_b = T::one() - fraction;
            Ok(AttackOutcome {
                t_eve: TransferPair::symmetric(t_e)?,
                t_bob: TransferPair::symmetric(t_b)?,
                ber_eve: ber_from_snr(t_e * snr_in)?,
                ber_bob: ber_from_snr(t_b * bob_leg)?,
            })
        }
        AttackModel::OptimalSymmetric { t_e } => {
            let t_b = T::one() - t_e;
            Ok(AttackOutcome {
                t_eve: TransferPair::symmetric(t_e)?,
                t_bob: TransferPair::symmetric(t_b)?,
                ber_eve: ber_from_snr(t_e * snr_in)?,
                ber_bob: ber_from_snr(t_b * bob_leg)?,
            })
        }
        AttackModel::Teleport { gain, lambda } => {
            let lambda = match lambda {
                Some(l) => l,
                None => lambda_opt(gain)?,
            };
            let p = teleport_attack(gain, lambda)?;
            let t_e = (T::one() + p.v_e_plus).recip();
            let t_b = (T::one() + p.v_b_plus).recip();
            Ok(AttackOutcome {
                t_eve: TransferPair::symmetric(t_e)?,
                t_bob: TransferPair::symmetric(t_b)?,
                ber_eve: ber_from_snr(t_e * snr_in)?,
                ber_bob: ber_from_snr(t_b * bob_leg)?,
            })
        }
    }
}

/// Maximum simultaneous signal transfer Eve can reach on the squeezed
/// scheme: `2 vn / (2 vn + 1)`.
pub fn eve_transfer_cap<T: Real>(vn: T) -> Result<T> {
    if !(vn > T::zero() && vn <= T::one()) {
        return Err(Error::Domain {
            what: "squeezed noise floor vn",
            value: vn.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(T::two() * vn / (T::two() * vn + T::one()))
}

/// Largest transfer Bob can retain on the squeezed scheme once Eve takes
/// `t_e`: the joint restriction saturates at
/// `T_E T_B / ((1-T_E)(1-T_B)) = 4 vn`, so `T_B = x/(1+x)` with
/// `x = 4 vn (1-T_E)/T_E`.
pub fn squeezed_bounds<T: Real>(vn: T, t_e: T) -> Result<T> {
    let cap = eve_transfer_cap(vn)?;
    if !(t_e > T::zero() && t_e <= cap + T::of(crate::optics::PHYSICALITY_TOL)) {
        return Err(Error::Domain {
            what: "eve transfer t_e above the squeezed-scheme bound",
            value: t_e.to_f64().unwrap_or(f64::NAN),
        });
    }
    let four = T::two() * T::two();
    let x = four * vn * (T::one() - t_e) / t_e;
    Ok(x / (T::one() + x))
}

/// Eve's maximum signal transfers on the entangled-beam scheme, full form.
///
/// `floors` are the squeezed (signal-bearing) noise floors of beams a and b;
/// `excess` their anti-squeezed partners. Physicality requires
/// `floor * excess >= 1` per beam.
pub fn squeezed_transfer_eve<T: Real>(
    penalties: &MeasurementPenalties<T>,
    floors: (T, T),
    excess: (T, T),
) -> Result<TransferPair<T>> {
    let (vn_a, vn_b) = floors;
    let (anti_a, anti_b) = excess;
    for (what, v) in [("floor vn_a", vn_a), ("floor vn_b", vn_b)] {
        if !(v > T::zero()) {
            return Err(Error::Domain {
                what,
                value: v.to_f64().unwrap_or(f64::NAN),
            });
        }
    }
    let tol = T::of(crate::optics::PHYSICALITY_TOL);
    if vn_a * anti_a < T::one() - tol || vn_b * anti_b < T::one() - tol {
        return Err(Error::Unphysical {
            what: "anti-squeezed excess below the uncertainty floor",
            value: (vn_a * anti_a).min(vn_b * anti_b).to_f64().unwrap_or(f64::NAN),
        });
    }
    let two = T::two();
    let plus = (penalties.v_e_plus + two * anti_b) * vn_a
        / (two * vn_a * anti_b + penalties.v_e_plus * (vn_a + anti_b));
    let minus = (penalties.v_e_minus + two * anti_a) * vn_b
        / (two * vn_b * anti_a + penalties.v_e_minus * (vn_b + anti_a));
    TransferPair::new(plus, minus)
}

/// Large-excess-noise limit of the squeezed transfer: `vn / (vn + V/2)`.
pub fn squeezed_transfer_reduced<T: Real>(penalty: T, vn: T) -> Result<T> {
    if !(vn > T::zero()) {
        return Err(Error::Domain {
            what: "noise floor vn",
            value: vn.to_f64().unwrap_or(f64::NAN),
        });
    }
    if !(penalty >= T::zero()) {
        return Err(Error::Domain {
            what: "measurement penalty",
            value: penalty.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(vn / (vn + T::half() * penalty))
}

/// Measurement penalties of a teleportation attack with squeezer parametric
/// gain `G` and teleporter gain `lambda`.
///
/// Eve reads the classical channel (`V_E = 2G - 1`); Bob receives the
/// reconstructed beam with
/// `V_B = ((l sqrt(G) - sqrt(G-1))^2 + (sqrt(G) - l sqrt(G-1))^2) / l^2`.
pub fn teleport_attack<T: Real>(gain: T, lambda: T) -> Result<MeasurementPenalties<T>> {
    if !(gain >= T::one()) {
        return Err(Error::Domain {
            what: "teleporter parametric gain (need G >= 1)",
            value: gain.to_f64().unwrap_or(f64::NAN),
        });
    }
    if !(lambda > T::zero()) {
        return Err(Error::Domain {
            what: "teleporter gain lambda (need > 0)",
            value: lambda.to_f64().unwrap_or(f64::NAN),
        });
    }
    let v_e = T::two() * gain - T::one();
    let sg = gain.sqrt();
    let sg1 = (gain - T::one()).sqrt();
    let a = lambda * sg - sg1;
    let b = sg - lambda * sg1;
    let v_b = (a * a + b * b) / (lambda * lambda);
    MeasurementPenalties::new(v_e, v_e, v_b, v_b)
}

/// Teleporter gain that saturates the minimum-disturbance bound:
/// `lambda_opt = (1 + V_sq^2) / (1 - V_sq^2)` with
/// `V_sq = (sqrt(G) - sqrt(G-1))^2`. At this gain `V_B = 1/(2G-1)`, so
/// `V_E V_B = 1` exactly.
pub fn lambda_opt<T: Real>(gain: T) -> Result<T> {
    if !(gain > T::one()) {
        return Err(Error::Domain {
            what: "teleporter parametric gain (need G > 1; the G = 1 optimum is the lambda -> infinity limit)",
            value: gain.to_f64().unwrap_or(f64::NAN),
        });
    }
    let v_sq = {
        let d = gain.sqrt() - (gain - T::one()).sqrt();
        d * d
    };
    let v2 = v_sq * v_sq;
    Ok((T::one() + v2) / (T::one() - v2))
}
