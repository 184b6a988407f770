//! Classical information layer: BER/SNR conversion, binary entropy, mutual
//! information, and the privacy-amplification algebra for XOR block coding.
//!
//! The BER model is binary pulse-code modulation on a bandwidth-limited
//! Gaussian channel: `B = erfc(sqrt(SNR/2)/2) / 2`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::math::erfc;
use crate::real::Real;

/// Bit error probability, in `[0, 1/2]` (1/2 = completely random data).
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ErrorProbability<T>(T);

impl<T: Real> ErrorProbability<T> {
    pub fn new(value: T) -> Result<Self> {
        if value >= T::zero() && value <= T::half() {
            Ok(Self(value))
        } else {
            Err(Error::Domain {
                what: "error probability",
                value: value.to_f64().unwrap_or(f64::NAN),
            })
        }
    }

    pub fn value(self) -> T {
        self.0
    }
}

/// Mutual information between two binary strings, bits per symbol in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MutualInformation<T>(T);

impl<T: Real> MutualInformation<T> {
    pub fn new(value: T) -> Result<Self> {
        if value >= T::zero() && value <= T::one() {
            Ok(Self(value))
        } else {
            Err(Error::Domain {
                what: "mutual information",
                value: value.to_f64().unwrap_or(f64::NAN),
            })
        }
    }

    pub fn value(self) -> T {
        self.0
    }
}

/// Bit error rate of threshold detection at the given linear SNR.
pub fn ber_from_snr<T: Real>(snr: T) -> Result<ErrorProbability<T>> {
    if !(snr >= T::zero()) {
        return Err(Error::Domain {
            what: "snr",
            value: snr.to_f64().unwrap_or(f64::NAN),
        });
    }
    let arg = T::half() * (snr * T::half()).sqrt();
    ErrorProbability::new(T::half() * erfc(arg))
}

/// Linear SNR required for the given bit error rate, by bisection on the
/// monotone BER curve. Inverse of [`ber_from_snr`] to better than 1e-10.
pub fn snr_for_ber<T: Real>(target: ErrorProbability<T>) -> Result<T> {
    let b = target.value();
    if !(b > T::zero() && b < T::half()) {
        return Err(Error::Domain {
            what: "target ber (need 0 < b < 1/2)",
            value: b.to_f64().unwrap_or(f64::NAN),
        });
    }
    let mut lo = T::zero();
    let mut hi = T::one();
    while ber_from_snr(hi)?.value() > b {
        hi = hi * T::two();
        if hi > T::of(1e12) {
            return Err(Error::Domain {
                what: "target ber (too small to invert)",
                value: b.to_f64().unwrap_or(f64::NAN),
            });
        }
    }
    for _ in 0..200 {
        let mid = T::half() * (lo + hi);
        if ber_from_snr(mid)?.value() > b {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= T::epsilon() * hi.max(T::one()) {
            break;
        }
    }
    Ok(T::half() * (lo + hi))
}

/// Binary entropy in bits, with `0*log2(0) = 0`.
pub fn binary_entropy<T: Real>(p: T) -> Result<T> {
    if !(p >= T::zero() && p <= T::one()) {
        return Err(Error::Domain {
            what: "probability",
            value: p.to_f64().unwrap_or(f64::NAN),
        });
    }
    let q = T::one() - p;
    let mut h = T::zero();
    if p > T::zero() {
        h = h - p * p.log2();
    }
    if q > T::zero() {
        h = h - q * q.log2();
    }
    Ok(h)
}

/// Mutual information of two uniformly random binary strings whose error
/// probability is `b`: `1 - H2(b)`.
pub fn mutual_info_from_ber<T: Real>(b: ErrorProbability<T>) -> MutualInformation<T> {
    let h = binary_entropy(b.value()).expect("ber is a valid probability");
    let mi = (T::one() - h).max(T::zero()).min(T::one());
    MutualInformation(mi)
}

/// Error probability of the XOR of an `n`-bit block whose bits are each
/// independently wrong with probability `b`: `(1 - (1-2b)^n) / 2`.
///
/// Equal to the probability of an odd number of bit errors in the block,
/// i.e. the complement of the even-error binomial sum.
pub fn pa_error<T: Real>(b: ErrorProbability<T>, n: u32) -> Result<ErrorProbability<T>> {
    if n == 0 {
        return Err(Error::Domain {
            what: "block length",
            value: 0.0,
        });
    }
    let q = T::one() - T::two() * b.value();
    let pow = q.powi(n as i32);
    ErrorProbability::new((T::half() * (T::one() - pow)).max(T::zero()))
}

/// Eavesdropper mutual information remaining after XOR-block privacy
/// amplification: `(1 - 2 b_eve)^n`.
pub fn eve_mi_after_pa<T: Real>(b_eve: ErrorProbability<T>, n: u32) -> Result<MutualInformation<T>> {
    if n == 0 {
        return Err(Error::Domain {
            what: "block length",
            value: 0.0,
        });
    }
    let q = T::one() - T::two() * b_eve.value();
    MutualInformation::new(q.powi(n as i32).max(T::zero()))
}

/// Smallest block length `n` with `eve_mi_after_pa(b_eve, n) <= target_mi`.
///
/// Errors with [`Error::UnreachableTarget`] when `b_eve` is zero, since an
/// error-free eavesdropper keeps full information at any block length.
pub fn min_block_length<T: Real>(b_eve: ErrorProbability<T>, target_mi: T) -> Result<u32> {
    if !(target_mi > T::zero() && target_mi < T::one()) {
        return Err(Error::Domain {
            what: "target mutual information",
            value: target_mi.to_f64().unwrap_or(f64::NAN),
        });
    }
    if b_eve.value() <= T::zero() {
        return Err(Error::UnreachableTarget);
    }
    let q = T::one() - T::two() * b_eve.value();
    if q <= T::zero() {
        return Ok(1);
    }
    // Closed-form estimate, then nudge to the exact boundary.
    let est = target_mi.ln() / q.ln();
    let mut n = est.ceil().to_f64().unwrap_or(1.0).max(1.0) as u32;
    while n > 1 && eve_mi_after_pa(b_eve, n - 1)?.value() <= target_mi {
        n -= 1;
    }
    while eve_mi_after_pa(b_eve, n)?.value() > target_mi {
        n = n
            .checked_add(1)
            .ok_or(Error::UnreachableTarget)?;
    }
    Ok(n)
}
