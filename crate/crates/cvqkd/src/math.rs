//! Scalar special functions: the error function and its complement.
//!
//! `erfc` drives every bit-error-rate conversion in this crate, so it is
//! implemented here rather than pulled in from a numerics crate. Two regimes
//! are combined:
//!
//! * `|x| < 2`: the confluent power series
//!   `erf(x) = (2x/sqrt(pi)) e^{-x^2} sum_n (2x^2)^n / (2n+1)!!`,
//!   whose terms are all positive (no cancellation).
//! * `x >= 2`: the Laplace continued fraction
//!   `erfc(x) = e^{-x^2}/sqrt(pi) * 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))`
//!   evaluated with the modified Lentz algorithm.
//!
//! Absolute error is a few ulp in `f64`; well inside the 1e-12 budget the
//! rest of the crate assumes.

use crate::real::Real;

/// 2/sqrt(pi)
const TWO_OVER_SQRT_PI: f64 = 1.1283791670955126;
/// 1/sqrt(pi)
const ONE_OVER_SQRT_PI: f64 = 0.5641895835477563;

/// Complementary error function.
pub fn erfc<T: Real>(x: T) -> T {
    if x.is_nan() {
        return x;
    }
    if x < T::zero() {
        return T::two() - erfc(-x);
    }
    if x < T::two() {
        T::one() - erf_series(x)
    } else {
        erfc_cf(x)
    }
}

/// Error function.
pub fn erf<T: Real>(x: T) -> T {
    if x.is_nan() {
        return x;
    }
    if x < T::zero() {
        return -erf(-x);
    }
    if x < T::two() {
        erf_series(x)
    } else {
        T::one() - erfc_cf(x)
    }
}

/// Power-series evaluation for 0 <= x < 2.
fn erf_series<T: Real>(x: T) -> T {
    let x2 = x * x;
    let two_x2 = T::two() * x2;
    let mut term = T::one();
    let mut sum = T::one();
    let mut odd = T::one();
    for _ in 0..200 {
        odd += T::two();
        term = term * two_x2 / odd;
        sum += term;
        if term < sum * T::epsilon() {
            break;
        }
    }
    T::of(TWO_OVER_SQRT_PI) * x * (-x2).exp() * sum
}

/// Continued-fraction evaluation for x >= 2 (modified Lentz).
fn erfc_cf<T: Real>(x: T) -> T {
    let tiny = T::of(1e-290);
    let mut f = x;
    let mut c = x / tiny;
    let mut d = T::zero();
    for k in 1..200 {
        let a = T::of(k as f64) * T::half();
        d = x + a * d;
        if d == T::zero() {
            d = tiny;
        }
        c = x + a / c;
        if c == T::zero() {
            c = tiny;
        }
        d = d.recip();
        let delta = c * d;
        f = f * delta;
        if (delta - T::one()).abs() < T::epsilon() {
            break;
        }
    }
    T::of(ONE_OVER_SQRT_PI) * (-x * x).exp() / f
}
