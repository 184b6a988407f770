//! Continuous-variable quantum key distribution over quadrature-modulated
//! light: variance-level channel models, eavesdropper bounds, the classical
//! post-processing algebra, an end-to-end key-rate pipeline, and a seedable
//! Monte-Carlo simulator of the bit-level protocol.
//!
//! All numerics are generic over the scalar type via [`Real`] (`f32` or
//! `f64`); the aliases below fix the default `f64` precision.
//!
//! Modules:
//!
//! * [`optics`] — quadrature noise/signal states, beamsplitter taps, line
//!   loss, generalized-uncertainty checks.
//! * [`infotheory`] — BER/SNR conversion, entropies, XOR-block privacy
//!   amplification algebra.
//! * [`attacks`] — eavesdropper strategies and their quantum limits,
//!   including the teleportation realization of the optimum attack.
//! * [`keyrate`] — thresholds, eavesdropper bounds, reconciliation and
//!   privacy-amplification accounting, trade-off curves.
//! * [`sim`] — the bit-level Monte-Carlo protocol engine.

pub mod attacks;
pub mod error;
pub mod infotheory;
pub mod keyrate;
pub mod math;
pub mod optics;
pub mod real;
pub mod sim;

pub use error::{Error, Result};
pub use real::Real;

/// Default-precision channel state.
pub type ChannelState = optics::QuadratureChannelState<f64>;
/// Default-precision measurement penalties.
pub type Penalties = optics::MeasurementPenalties<f64>;
/// Default-precision attack description.
pub type Attack = attacks::AttackModel<f64>;
/// Default-precision protocol configuration.
pub type Config = keyrate::ProtocolConfig<f64>;
/// Default-precision key-rate report.
pub type Report = keyrate::KeyRateReport<f64>;
