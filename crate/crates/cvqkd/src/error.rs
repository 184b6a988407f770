//! Error type shared by all modules.

/// Errors reported by the analytic pipelines and the simulator.
///
/// Numeric payloads are carried as `f64` regardless of the scalar type the
/// computation ran at, so the error type stays object-safe and printable.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// A parameter is outside its legal range.
    #[error("{what} out of range: {value}")]
    Domain { what: &'static str, value: f64 },

    /// A channel state or penalty set violates a physicality constraint.
    #[error("unphysical {what}: {value}")]
    Unphysical { what: &'static str, value: f64 },

    /// Noise variance is zero where a signal-to-noise ratio was requested.
    #[error("zero noise variance: channel has no noise floor")]
    ZeroNoise,

    /// Bob's error threshold is below what the channel can deliver.
    #[error("threshold {threshold} below attainable error rate {base}")]
    ThresholdBelowBase { threshold: f64, base: f64 },

    /// Secret-key distillation impossible: Eve knows at least as much as Bob.
    #[error("insecure: Maurer condition violated (eve_ber {eve_ber} <= bob threshold {bob_threshold})")]
    Insecure { eve_ber: f64, bob_threshold: f64 },

    /// Eve's error probability is zero, so no block length reaches the target.
    #[error("target mutual information unreachable: eavesdropper error probability is zero")]
    UnreachableTarget,

    /// Bit strings that must be aligned have different lengths.
    #[error("bit string length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    /// No disjoint block assignment found under the pairing exclusions.
    #[error("privacy amplification block assignment failed after {attempts} attempts")]
    BlockAssignment { attempts: usize },

    /// Operation not defined for this scheme/attack combination.
    #[error("unsupported: {0}")]
    Unsupported(&'static str),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
