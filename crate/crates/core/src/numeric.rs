//! Exact-to-float conversions and decimal rendering shared by the reports.

use std::fmt::Display;

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serializer;

pub(crate) fn to_big_int(x: BigUint) -> BigInt {
    BigInt::from_biguint(Sign::Plus, x)
}

/// `ln x` for arbitrarily large `x`; `None` for zero.
pub fn big_ln(x: &BigUint) -> Option<f64> {
    if x.is_zero() {
        return None;
    }
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_f64().map(f64::ln);
    }
    let shift = bits - 64;
    let top = (x >> shift).to_f64()?;
    Some(top.ln() + shift as f64 * std::f64::consts::LN_2)
}

/// The `f64` nearest `ln x` among those whose `exp` lands closest to `x`.
///
/// Adjacent doubles near `ln x` are `x·ulp(ln x)` apart after
/// exponentiation, so the search only removes rounding in `ln` itself.
pub fn ln_round_trip(x: f64) -> f64 {
    let base = x.ln();
    let mut best = base;
    let mut best_err = (best.exp() - x).abs();
    let mut lo = base;
    let mut hi = base;
    for _ in 0..4 {
        lo = lo.next_down();
        hi = hi.next_up();
        for cand in [lo, hi] {
            let err = (cand.exp() - x).abs();
            if err < best_err {
                best = cand;
                best_err = err;
            }
        }
    }
    best
}

/// `ln n!` by direct summation.
pub fn ln_factorial(n: u32) -> f64 {
    (2..=n).map(|k| (k as f64).ln()).sum()
}

/// Nearest `f64` to a rational, also for numerators and denominators
/// outside `f64` range.
pub fn rational_to_f64(q: &BigRational) -> f64 {
    if q.is_zero() {
        return 0.0;
    }
    if let Some(v) = q.to_f64() {
        if v.is_finite() && v != 0.0 {
            return v;
        }
    }
    let num = q.numer().magnitude();
    let den = q.denom().magnitude();
    let ln = big_ln(num).unwrap() - big_ln(den).unwrap();
    let v = ln.exp();
    if q.is_negative() {
        -v
    } else {
        v
    }
}

/// Decimal rendering with 12 significant digits, no exponent for ordinary
/// magnitudes.
pub fn format_decimal(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    // Take the exponent after rounding, so 0.99999999999996 counts as 1.
    let sci = format!("{x:.11e}");
    let magnitude: i32 = sci[sci.find('e').expect("exponent form") + 1..].parse().expect("integer exponent");
    if (-5..15).contains(&magnitude) {
        let decimals = (11 - magnitude).max(0) as usize;
        format!("{x:.decimals$}")
    } else {
        sci
    }
}

/// `p/q (decimal)` rendering used on the command line.
pub fn format_rational(q: &BigRational) -> String {
    format!("{} ({})", format_ratio(q), format_decimal(rational_to_f64(q)))
}

/// `p/q`, with integers printed bare as `p/1`.
pub fn format_ratio(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

pub(crate) fn ser_display<T: Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}
