//! End-to-end analytic security pipeline: thresholds, eavesdropper bounds,
//! reconciliation accounting, privacy-amplification sizing, and the overall
//! key efficiency, for both the coherent and the squeezed (entangled-pair)
//! schemes.
//!
//! Loss is accounted worst-case: the eavesdropper is credited with an attack
//! reproducing Bob's loss-degraded statistics, so her bound is always
//! computed from the loss-free signal-to-noise.

use serde::{Deserialize, Serialize};

use crate::attacks::{eve_transfer_cap, squeezed_bounds};
use crate::error::{Error, Result};
use crate::infotheory::{
    ber_from_snr, eve_mi_after_pa, min_block_length, snr_for_ber, ErrorProbability,
    MutualInformation,
};
use crate::real::Real;

/// Fraction of sifted data disclosed for the eavesdropping test.
const DISCLOSURE_FACTOR: f64 = 0.5;

/// Modulation scheme the protocol runs on.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Scheme<T> {
    /// Bright coherent beam, both quadratures modulated, unit noise floors.
    Coherent,
    /// Entangled-pair scheme built from two amplitude-squeezed beams with
    /// squeezed noise floor `vn` (QNL units, `0 < vn <= 1`).
    Squeezed { vn: T },
}

impl<T: Real> Scheme<T> {
    pub fn validate(&self) -> Result<()> {
        match *self {
            Scheme::Coherent => Ok(()),
            Scheme::Squeezed { vn } => {
                if vn > T::zero() && vn <= T::one() {
                    Ok(())
                } else {
                    Err(Error::Domain {
                        what: "squeezed noise floor vn",
                        value: vn.to_f64().unwrap_or(f64::NAN),
                    })
                }
            }
        }
    }

    pub fn vn(&self) -> Option<T> {
        match *self {
            Scheme::Coherent => None,
            Scheme::Squeezed { vn } => Some(vn),
        }
    }

    /// Fraction of protocol slots that survive sifting.
    ///
    /// Coherent: Bob announces his quadrature choice and every slot is kept.
    /// Squeezed: Alice also measures a random quadrature, so only the ~50%
    /// coincidences are usable.
    pub fn sift_factor(&self) -> T {
        match self {
            Scheme::Coherent => T::one(),
            Scheme::Squeezed { .. } => T::half(),
        }
    }

    /// Signal-transfer coefficient of a line with the given loss fraction.
    ///
    /// Coherent beams lose signal power linearly while the vacuum keeps the
    /// floor at the QNL: `T = 1 - L`. For the entangled-pair scheme the
    /// receiver rescales Alice's public homodyne record to keep cancelling
    /// the anti-squeezed noise, which amplifies the admixed vacuum:
    /// `T = 2 (1-L) vn / (2 (1-L) vn + L)`.
    pub fn loss_transfer(&self, loss: T) -> Result<T> {
        if !(loss >= T::zero() && loss < T::one()) {
            return Err(Error::Domain {
                what: "loss fraction",
                value: loss.to_f64().unwrap_or(f64::NAN),
            });
        }
        match *self {
            Scheme::Coherent => Ok(T::one() - loss),
            Scheme::Squeezed { vn } => {
                let kept = T::two() * (T::one() - loss) * vn;
                Ok(kept / (kept + loss))
            }
        }
    }
}

/// How the working signal-to-noise is specified.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SnrSpec<T> {
    /// Linear single-quadrature SNR at the sender.
    Linear(T),
    /// Calibrate the SNR so the loss-free bit error rate equals this value.
    CalibratedBaseBer(T),
}

/// Full protocol parameter set.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(bound(deserialize = "T: Real + Deserialize<'de>"))]
pub struct ProtocolConfig<T> {
    pub scheme: Scheme<T>,
    pub snr: SnrSpec<T>,
    /// Line loss fraction in `[0, 1)`.
    pub loss: T,
    /// Worst-case error rate assumed for the security analysis. When absent
    /// it is taken as the base error rate plus `threshold_margin`.
    #[serde(default)]
    pub bob_threshold: Option<T>,
    /// Cautious excess over the base error rate, in absolute probability.
    #[serde(default = "default_margin")]
    pub threshold_margin: T,
    /// Largest tolerable eavesdropper mutual information with the final key.
    pub target_eve_mi: T,
    /// Monte-Carlo slot count for simulation runs driven by this config.
    #[serde(default)]
    pub mc_slots: Option<u64>,
    /// Seed for simulation runs driven by this config.
    #[serde(default)]
    pub seed: Option<u64>,
}

fn default_margin<T: Real>() -> T {
    T::of(0.015)
}

impl<T: Real> ProtocolConfig<T> {
    pub fn validate(&self) -> Result<()> {
        self.scheme.validate()?;
        if !(self.loss >= T::zero() && self.loss < T::one()) {
            return Err(Error::Domain {
                what: "loss fraction",
                value: self.loss.to_f64().unwrap_or(f64::NAN),
            });
        }
        if !(self.target_eve_mi > T::zero() && self.target_eve_mi < T::one()) {
            return Err(Error::Domain {
                what: "target eavesdropper mutual information",
                value: self.target_eve_mi.to_f64().unwrap_or(f64::NAN),
            });
        }
        if !(self.threshold_margin >= T::zero()) {
            return Err(Error::Domain {
                what: "threshold margin",
                value: self.threshold_margin.to_f64().unwrap_or(f64::NAN),
            });
        }
        match self.snr {
            SnrSpec::Linear(s) if !(s > T::zero()) => Err(Error::Domain {
                what: "linear snr",
                value: s.to_f64().unwrap_or(f64::NAN),
            }),
            SnrSpec::CalibratedBaseBer(b) if !(b > T::zero() && b < T::half()) => {
                Err(Error::Domain {
                    what: "calibration base ber",
                    value: b.to_f64().unwrap_or(f64::NAN),
                })
            }
            _ => Ok(()),
        }
    }

    /// Loss-free single-quadrature SNR at the sender.
    pub fn snr_in(&self) -> Result<T> {
        match self.snr {
            SnrSpec::Linear(s) => Ok(s),
            SnrSpec::CalibratedBaseBer(b) => snr_for_ber(ErrorProbability::new(b)?),
        }
    }

    /// Bob's expected error rate at the configured loss, with no attack.
    pub fn base_ber(&self) -> Result<ErrorProbability<T>> {
        let t = self.scheme.loss_transfer(self.loss)?;
        ber_from_snr(t * self.snr_in()?)
    }

    /// The cautious threshold fed to the security analysis.
    pub fn resolved_threshold(&self) -> Result<ErrorProbability<T>> {
        let base = self.base_ber()?;
        let thr = match self.bob_threshold {
            Some(t) => ErrorProbability::new(t)?,
            None => ErrorProbability::new(base.value() + self.threshold_margin)?,
        };
        if thr.value() < base.value() {
            return Err(Error::ThresholdBelowBase {
                threshold: thr.value().to_f64().unwrap_or(f64::NAN),
                base: base.value().to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(thr)
    }
}

/// Factors of the final key-length accounting.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KeyRateReport<T> {
    /// Fraction of slots surviving sifting (reported, not folded into
    /// `efficiency`, matching the usual headline accounting).
    pub sift_factor: T,
    /// Fraction sacrificed to the eavesdropping test (always 1/2 here).
    pub disclosure_factor: T,
    /// Length factor of parity-pair reconciliation, `1 - 2 B_threshold`.
    pub recon_factor: T,
    /// Eve's minimum error rate inferred from the threshold.
    pub eve_ber_bound: ErrorProbability<T>,
    /// Her worst-case error rate after matching Bob's discards.
    pub eve_ber_post_recon: ErrorProbability<T>,
    /// Privacy-amplification block length.
    pub pa_block_n: u32,
    /// disclosure * reconciliation * 1/n.
    pub efficiency: T,
    /// Eve's mutual information with the final key.
    pub eve_mi_final: MutualInformation<T>,
}

/// Transfer Bob must retain for his error rate to stay at `threshold`,
/// relative to the loss-free SNR.
fn bob_transfer_for_threshold<T: Real>(
    snr_in: T,
    threshold: ErrorProbability<T>,
) -> Result<T> {
    let needed = snr_for_ber(threshold)?;
    let t_b = needed / snr_in;
    if t_b > T::one() + T::of(1e-9) {
        return Err(Error::ThresholdBelowBase {
            threshold: threshold.value().to_f64().unwrap_or(f64::NAN),
            base: ber_from_snr(snr_in)?.value().to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(t_b.min(T::one()))
}

/// Eve's minimum error rate on the coherent scheme, given Bob's threshold.
///
/// Bob's threshold fixes his minimum transfer `T_B`; the sum rule hands Eve
/// at most `T_E = 1 - T_B`, evaluated at the loss-free SNR.
pub fn eve_ber_bound<T: Real>(
    snr_in: T,
    bob_threshold: ErrorProbability<T>,
) -> Result<ErrorProbability<T>> {
    let t_b = bob_transfer_for_threshold(snr_in, bob_threshold)?;
    let t_e = T::one() - t_b;
    ber_from_snr(t_e * snr_in)
}

/// Eve's minimum error rate on the squeezed scheme: the joint restriction
/// inverted at Bob's threshold transfer, capped by her own simultaneous
/// bound `2 vn / (2 vn + 1)`.
pub fn squeezed_eve_ber_bound<T: Real>(
    vn: T,
    snr_in: T,
    bob_threshold: ErrorProbability<T>,
) -> Result<ErrorProbability<T>> {
    let t_b = bob_transfer_for_threshold(snr_in, bob_threshold)?;
    let cap = eve_transfer_cap(vn)?;
    let t_e = if t_b >= T::one() - T::of(1e-15) {
        T::zero()
    } else {
        let four = T::two() * T::two();
        let odds_e = four * vn * (T::one() - t_b) / t_b;
        (odds_e / (T::one() + odds_e)).min(cap)
    };
    ber_from_snr(t_e * snr_in)
}

/// Scheme-dispatching eavesdropper bound.
pub fn scheme_eve_ber_bound<T: Real>(
    scheme: &Scheme<T>,
    snr_in: T,
    bob_threshold: ErrorProbability<T>,
) -> Result<ErrorProbability<T>> {
    match *scheme {
        Scheme::Coherent => eve_ber_bound(snr_in, bob_threshold),
        Scheme::Squeezed { vn } => squeezed_eve_ber_bound(vn, snr_in, bob_threshold),
    }
}

/// Worst-case reconciliation accounting.
///
/// Parity-pair reconciliation shrinks the string by `1 - 2 B` and may let
/// Eve remove as many of her own errors as Bob removed, so her floor drops
/// by the threshold. Errors with [`Error::Insecure`] when Eve's bound does
/// not exceed the threshold (no secret key is distillable).
pub fn reconcile_accounting<T: Real>(
    eve_ber: ErrorProbability<T>,
    bob_threshold: ErrorProbability<T>,
) -> Result<(T, ErrorProbability<T>)> {
    if eve_ber.value() <= bob_threshold.value() {
        return Err(Error::Insecure {
            eve_ber: eve_ber.value().to_f64().unwrap_or(f64::NAN),
            bob_threshold: bob_threshold.value().to_f64().unwrap_or(f64::NAN),
        });
    }
    let recon = T::one() - T::two() * bob_threshold.value();
    let post = ErrorProbability::new(eve_ber.value() - bob_threshold.value())?;
    Ok((recon, post))
}

/// Run the complete analytic pipeline for a protocol configuration.
pub fn key_efficiency<T: Real>(config: &ProtocolConfig<T>) -> Result<KeyRateReport<T>> {
    config.validate()?;
    let snr_in = config.snr_in()?;
    let threshold = config.resolved_threshold()?;
    let eve_ber = scheme_eve_ber_bound(&config.scheme, snr_in, threshold)?;
    let (recon_factor, eve_post) = reconcile_accounting(eve_ber, threshold)?;
    let n = min_block_length(eve_post, config.target_eve_mi)?;
    let disclosure = T::of(DISCLOSURE_FACTOR);
    let efficiency = disclosure * recon_factor / T::of(n as f64);
    Ok(KeyRateReport {
        sift_factor: config.scheme.sift_factor(),
        disclosure_factor: disclosure,
        recon_factor,
        eve_ber_bound: eve_ber,
        eve_ber_post_recon: eve_post,
        pa_block_n: n,
        efficiency,
        eve_mi_final: eve_mi_after_pa(eve_post, n)?,
    })
}

/// One point of the Bob-versus-Eve error trade-off curve.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CurvePoint<T> {
    /// Eve's transfer coefficient at this point.
    pub t_e: T,
    /// Bob's minimum error rate when Eve takes `t_e`.
    pub bob_ber: ErrorProbability<T>,
    /// Eve's error rate at `t_e`.
    pub eve_ber: ErrorProbability<T>,
}

/// Minimum error rates of Bob versus Eve over a grid of Eve transfers.
pub fn curve_bob_vs_eve<T: Real>(
    scheme: &Scheme<T>,
    snr_in: T,
    grid: &[T],
) -> Result<Vec<CurvePoint<T>>> {
    scheme.validate()?;
    if !(snr_in > T::zero()) {
        return Err(Error::Domain {
            what: "snr_in",
            value: snr_in.to_f64().unwrap_or(f64::NAN),
        });
    }
    grid.iter()
        .map(|&t_e| {
            let t_b = match *scheme {
                Scheme::Coherent => {
                    if !(t_e > T::zero() && t_e <= T::half()) {
                        return Err(Error::Domain {
                            what: "eve transfer t_e (coherent admissible range is (0, 1/2])",
                            value: t_e.to_f64().unwrap_or(f64::NAN),
                        });
                    }
                    T::one() - t_e
                }
                Scheme::Squeezed { vn } => squeezed_bounds(vn, t_e)?,
            };
            Ok(CurvePoint {
                t_e,
                bob_ber: ber_from_snr(t_b * snr_in)?,
                eve_ber: ber_from_snr(t_e * snr_in)?,
            })
        })
        .collect()
}

/// Evenly spaced admissible Eve-transfer grid for [`curve_bob_vs_eve`].
pub fn default_te_grid<T: Real>(scheme: &Scheme<T>, points: usize) -> Result<Vec<T>> {
    scheme.validate()?;
    let hi = match *scheme {
        Scheme::Coherent => T::half(),
        Scheme::Squeezed { vn } => eve_transfer_cap(vn)?,
    };
    let n = points.max(2);
    let lo = hi * T::of(1e-3);
    let step = (hi - lo) / T::of((n - 1) as f64);
    Ok((0..n).map(|i| lo + step * T::of(i as f64)).collect())
}

/// Eve's residual mutual information as a function of block length,
/// `n = 1 ..= n_max`: the decay table behind the block-length figures.
pub fn eve_mi_decay_table<T: Real>(
    b_eve: ErrorProbability<T>,
    n_max: u32,
) -> Result<Vec<(u32, T)>> {
    (1..=n_max)
        .map(|n| Ok((n, eve_mi_after_pa(b_eve, n)?.value())))
        .collect()
}

/// Smallest loss at which Bob's error rate meets the best error rate of an
/// eavesdropper holding everything the line lost, for the squeezed scheme.
///
/// Bob's side follows the entangled-pair loss transfer; Eve is credited the
/// complement `T_E = 1 - T_B`, mirroring the coherent-scheme loss
/// accounting (where the same rule puts break-even at 50%). Found by
/// bisection on the error-rate difference; the crossing sits where Bob's
/// transfer falls to one half, i.e. at `L = 2 vn / (1 + 2 vn)`.
pub fn squeezed_breakeven_loss<T: Real>(vn: T) -> Result<T> {
    if !(vn > T::zero() && vn < T::one()) {
        return Err(Error::Domain {
            what: "squeezed noise floor vn (need 0 < vn < 1)",
            value: vn.to_f64().unwrap_or(f64::NAN),
        });
    }
    let scheme = Scheme::Squeezed { vn };
    // Reference SNR; the crossing point does not depend on it.
    let snr = T::of(10.0);
    let diff = |loss: T| -> Result<T> {
        let t_b = scheme.loss_transfer(loss)?;
        let t_e = T::one() - t_b;
        let bob = ber_from_snr(t_b * snr)?.value();
        let eve = ber_from_snr(t_e * snr)?.value();
        Ok(eve - bob)
    };
    let mut lo = T::of(1e-12);
    let mut hi = T::one() - T::of(1e-12);
    if diff(lo)? <= T::zero() {
        return Ok(lo);
    }
    for _ in 0..200 {
        let mid = T::half() * (lo + hi);
        if diff(mid)? > T::zero() {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= T::epsilon() {
            break;
        }
    }
    Ok(T::half() * (lo + hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const SNR_1PC: f64 = 21.647577724217364;
    const SNR_5PC: f64 = 10.822173816381658;

    fn ep(b: f64) -> ErrorProbability<f64> {
        ErrorProbability::new(b).unwrap()
    }

    fn coherent_config(base: f64, loss: f64, threshold: f64) -> ProtocolConfig<f64> {
        ProtocolConfig {
            scheme: Scheme::Coherent,
            snr: SnrSpec::CalibratedBaseBer(base),
            loss,
            bob_threshold: Some(threshold),
            threshold_margin: 0.015,
            target_eve_mi: 0.001,
            mc_slots: None,
            seed: None,
        }
    }

    // Expected values below were computed independently with mpmath.

    #[test]
    fn eve_bound_examples() {
        let e = eve_ber_bound(SNR_1PC, ep(0.025)).unwrap().value();
        assert!((e - 0.105071881904035).abs() < 1e-9, "{e}");
        assert!((e - 0.105).abs() < 0.003);

        let e = eve_ber_bound(SNR_5PC, ep(0.065)).unwrap().value();
        assert!((e - 0.260215540839642).abs() < 1e-9, "{e}");
        assert!((e - 0.26).abs() < 0.005);

        let e = eve_ber_bound(SNR_5PC, ep(0.093)).unwrap().value();
        assert!((e - 0.164032153394423).abs() < 1e-9, "{e}");
        assert!((e - 0.163).abs() < 0.005);
    }

    #[test]
    fn eve_bound_rejects_unreachable_threshold() {
        assert!(matches!(
            eve_ber_bound(SNR_5PC, ep(0.01)),
            Err(Error::ThresholdBelowBase { .. })
        ));
        // Threshold exactly at the base rate: Eve gets nothing (coin flips).
        let e = eve_ber_bound(SNR_5PC, ep(0.05)).unwrap().value();
        assert!((e - 0.5).abs() < 1e-6);
    }

    #[test]
    fn reconcile_accounting_examples() {
        let (f, post) = reconcile_accounting(ep(0.105), ep(0.025)).unwrap();
        assert!((f - 0.95).abs() < 1e-12);
        assert!((post.value() - 0.08).abs() < 1e-12);

        let (f, post) = reconcile_accounting(ep(0.26), ep(0.065)).unwrap();
        assert!((f - 0.87).abs() < 1e-12);
        assert!((post.value() - 0.195).abs() < 1e-12);

        let (f, post) = reconcile_accounting(ep(0.163), ep(0.093)).unwrap();
        assert!((f - 0.814).abs() < 1e-12);
        assert!((post.value() - 0.07).abs() < 1e-12);

        assert!(matches!(
            reconcile_accounting(ep(0.05), ep(0.093)),
            Err(Error::Insecure { .. })
        ));
    }

    #[test]
    fn key_efficiency_lossy_worked_example() {
        let report = key_efficiency(&coherent_config(0.05, 0.25, 0.093)).unwrap();
        assert_eq!(report.pa_block_n, 46);
        assert!((report.recon_factor - 0.814).abs() < 1e-12);
        assert!((report.eve_ber_bound.value() - 0.164032153394423).abs() < 1e-9);
        assert!((report.eve_ber_post_recon.value() - 0.071032153394423).abs() < 1e-9);
        assert!((report.efficiency - 0.5 * 0.814 / 46.0).abs() < 1e-12);
        assert!((report.efficiency - 0.0088478).abs() < 1e-6);
        // Within rounding of the headline 0.5 * 0.81 * 0.02 = 0.01.
        assert!((report.efficiency - 0.01).abs() < 0.005);
        assert!(report.eve_mi_final.value() <= 0.001);
        assert_eq!(report.sift_factor, 1.0);
    }

    #[test]
    fn key_efficiency_no_loss_example() {
        let report = key_efficiency(&coherent_config(0.05, 0.0, 0.065)).unwrap();
        assert_eq!(report.pa_block_n, 14);
        assert!((report.efficiency - 0.0310714285714286).abs() < 1e-12);
        // Commonly quoted no-loss reduction is 0.025; stay within 0.01 of it.
        assert!((report.efficiency - 0.025).abs() < 0.01);
    }

    #[test]
    fn key_efficiency_squeezed_example() {
        let cfg = ProtocolConfig {
            scheme: Scheme::Squeezed { vn: 0.1 },
            snr: SnrSpec::CalibratedBaseBer(0.05),
            loss: 0.0,
            bob_threshold: Some(0.065),
            threshold_margin: 0.015,
            target_eve_mi: 0.001,
            mc_slots: None,
            seed: None,
        };
        let report = key_efficiency(&cfg).unwrap();
        assert!((report.eve_ber_bound.value() - 0.334883399966280).abs() < 1e-9);
        assert_eq!(report.pa_block_n, 9);
        assert!((report.efficiency - 0.0483333333333333).abs() < 1e-12);
        assert_eq!(report.sift_factor, 0.5);
    }

    #[test]
    fn key_efficiency_insecure_at_half_loss() {
        let cfg = ProtocolConfig {
            scheme: Scheme::Coherent,
            snr: SnrSpec::CalibratedBaseBer(0.05),
            loss: 0.5,
            bob_threshold: None,
            threshold_margin: 0.015,
            target_eve_mi: 0.001,
            mc_slots: None,
            seed: None,
        };
        assert!(matches!(key_efficiency(&cfg), Err(Error::Insecure { .. })));
    }

    #[test]
    fn report_factors_recompose() {
        let report = key_efficiency(&coherent_config(0.05, 0.25, 0.093)).unwrap();
        let product =
            report.disclosure_factor * report.recon_factor / report.pa_block_n as f64;
        assert!((report.efficiency - product).abs() < 1e-12);
    }

    #[test]
    fn efficiency_monotone_in_loss_and_threshold() {
        let mut last = f64::INFINITY;
        for loss in [0.0, 0.1, 0.2, 0.3] {
            let base = ber_from_snr((1.0 - loss) * SNR_5PC).unwrap().value();
            let cfg = coherent_config(0.05, loss, base + 0.016);
            let eff = key_efficiency(&cfg).unwrap().efficiency;
            assert!(eff <= last + 1e-12, "loss {loss}: {eff} > {last}");
            last = eff;
        }
        let mut last = f64::INFINITY;
        for thr in [0.06, 0.07, 0.08, 0.09] {
            let eff = key_efficiency(&coherent_config(0.05, 0.0, thr))
                .unwrap()
                .efficiency;
            assert!(eff <= last + 1e-12, "thr {thr}: {eff} > {last}");
            last = eff;
        }
    }

    #[test]
    fn curve_endpoints_coherent() {
        let scheme = Scheme::Coherent;
        let pts = curve_bob_vs_eve(&scheme, SNR_1PC, &[1e-6, 0.5]).unwrap();
        // No attack: Bob at base error, Eve at a coin flip.
        assert!((pts[0].bob_ber.value() - 0.01).abs() < 1e-6);
        assert!((pts[0].eve_ber.value() - 0.5).abs() < 1e-3);
        // Symmetric midpoint: equal error rates.
        assert!((pts[1].bob_ber.value() - pts[1].eve_ber.value()).abs() < 1e-15);
        assert!(curve_bob_vs_eve(&scheme, SNR_1PC, &[0.6]).is_err());
    }

    #[test]
    fn curve_monotone_both_schemes() {
        for scheme in [Scheme::Coherent, Scheme::Squeezed { vn: 0.1 }] {
            let grid = default_te_grid(&scheme, 150).unwrap();
            let pts = curve_bob_vs_eve(&scheme, SNR_1PC, &grid).unwrap();
            for w in pts.windows(2) {
                // Larger t_e: Eve improves (her error falls), Bob degrades.
                assert!(w[1].eve_ber.value() <= w[0].eve_ber.value() + 1e-12);
                assert!(w[1].bob_ber.value() >= w[0].bob_ber.value() - 1e-12);
            }
        }
    }

    #[test]
    fn squeezing_hurts_bob_more_at_equal_eve_quality() {
        // At the same Eve error rate (same t_e), the squeezed scheme forces
        // a larger disturbance in Bob's data than the coherent one.
        let t_e = 0.08;
        let coh = curve_bob_vs_eve(&Scheme::Coherent, SNR_1PC, &[t_e]).unwrap()[0];
        let sq =
            curve_bob_vs_eve(&Scheme::Squeezed { vn: 0.1 }, SNR_1PC, &[t_e]).unwrap()[0];
        assert!((coh.eve_ber.value() - sq.eve_ber.value()).abs() < 1e-15);
        assert!(sq.bob_ber.value() > coh.bob_ber.value() + 1e-4);
    }

    #[test]
    fn breakeven_examples() {
        let l = squeezed_breakeven_loss(0.1f64).unwrap();
        assert!((l - 1.0 / 6.0).abs() < 1e-9, "{l}");
        assert!((l - 0.16).abs() < 0.02);
        // Crossing sits where Bob's transfer reaches one half.
        let t_b = Scheme::Squeezed { vn: 0.1 }.loss_transfer(l).unwrap();
        assert!((t_b - 0.5).abs() < 1e-9);
        assert!(squeezed_breakeven_loss(1.0f64).is_err());
        assert!(squeezed_breakeven_loss(0.0f64).is_err());
    }

    #[test]
    fn breakeven_monotone_in_squeezing() {
        let mut last = 0.0;
        for vn in [0.02, 0.05, 0.1, 0.2, 0.35, 0.5, 0.75, 0.95] {
            let l = squeezed_breakeven_loss(vn).unwrap();
            assert!((l - 2.0 * vn / (1.0 + 2.0 * vn)).abs() < 1e-9);
            assert!(l > last, "vn {vn}");
            last = l;
        }
        // Half squeezing matches the coherent 50% tolerance.
        assert!((squeezed_breakeven_loss(0.5f64).unwrap() - 0.5).abs() < 1e-9);
    }

    #[test]
    fn threshold_resolution_from_margin() {
        let cfg = ProtocolConfig::<f64> {
            scheme: Scheme::Coherent,
            snr: SnrSpec::CalibratedBaseBer(0.05),
            loss: 0.25,
            bob_threshold: None,
            threshold_margin: 0.015,
            target_eve_mi: 0.001,
            mc_slots: None,
            seed: None,
        };
        let thr = cfg.resolved_threshold().unwrap().value();
        let base = cfg.base_ber().unwrap().value();
        assert!((base - 0.0771530582692591).abs() < 1e-10);
        assert!((thr - base - 0.015).abs() < 1e-12);
        // Explicit threshold below the lossy base rate is rejected.
        let bad = ProtocolConfig {
            bob_threshold: Some(0.05),
            ..cfg
        };
        assert!(matches!(
            bad.resolved_threshold(),
            Err(Error::ThresholdBelowBase { .. })
        ));
    }

    proptest! {
        #[test]
        fn breakeven_independent_of_reference_snr(vn in 0.02f64..0.98) {
            // The analytic crossing never depends on the signal strength.
            let l = squeezed_breakeven_loss(vn).unwrap();
            prop_assert!((l - 2.0 * vn / (1.0 + 2.0 * vn)).abs() < 1e-9);
        }

        #[test]
        fn maurer_gate_matches_sign(eve in 0.0f64..=0.5, thr in 0.001f64..0.4) {
            let out = reconcile_accounting(ep(eve), ep(thr));
            if eve <= thr {
                prop_assert!(matches!(out, Err(Error::Insecure { .. })));
            } else {
                let (_, post) = out.unwrap();
                prop_assert!(post.value() > 0.0);
            }
        }
    }
}
