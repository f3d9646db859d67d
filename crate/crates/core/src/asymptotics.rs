//! Orbit growth: the prime orbit counting function `pi_T(N)` and the
//! Mertens-type sum `M_T(N) = sum_{n <= N} O(n) e^{-h n}`.
//!
//! This is the only module that uses floating point.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::sequences::{Sequence, View};

fn check_horizon(seq: &Sequence, horizon: usize) -> Result<()> {
    if horizon == 0 {
        return Err(Error::NonPositive("N"));
    }
    if horizon > seq.len() {
        return Err(Error::InsufficientLength {
            needed: horizon,
            available: seq.len(),
        });
    }
    Ok(())
}

fn check_rate(h: f64) -> Result<()> {
    if h.is_finite() && h > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "growth rate h must be positive, got {h}"
        )))
    }
}

/// Natural log of a positive big integer.
pub fn big_ln(x: &BigInt) -> f64 {
    debug_assert!(x.is_positive());
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_f64().expect("finite below 2^1000").ln();
    }
    let shift = bits - 64;
    let top = (x >> shift).to_f64().expect("64-bit value");
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// `x e^{-t}`, computed in log space when `x` is too large for a double.
fn scaled(x: &BigInt, t: f64) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    match x.to_f64() {
        Some(v) if v.is_finite() && v < 1e300 => v * (-t).exp(),
        _ => (big_ln(x) - t).exp(),
    }
}

/// Number of closed orbits of length at most `horizon`.
pub fn pi_count(orbits: &Sequence, horizon: usize) -> Result<BigInt> {
    orbits.require_view(View::Orbit)?;
    check_horizon(orbits, horizon)?;
    Ok(orbits.terms()[..horizon].iter().sum())
}

/// `sum_{n <= horizon} O(n) e^{-h n}`, summed left to right.
pub fn mertens_sum(orbits: &Sequence, horizon: usize, h: f64) -> Result<f64> {
    orbits.require_view(View::Orbit)?;
    check_horizon(orbits, horizon)?;
    check_rate(h)?;
    Ok(orbits.terms()[..horizon]
        .iter()
        .enumerate()
        .map(|(i, o)| scaled(o, h * (i + 1) as f64))
        .sum())
}

pub fn harmonic(n: usize) -> f64 {
    (1..=n).map(|k| 1.0 / k as f64).sum()
}

/// `C1 e^{h(N+1)} / (N (e^h - 1))`: the leading behaviour of `pi_T(N)` when
/// `F(n) = C1 e^{hn} + O(e^{h'n})` with `h' < h`.
pub fn predicted_pi(h: f64, c1: f64, horizon: usize) -> f64 {
    let n = horizon as f64;
    c1 * (h * (n + 1.0)).exp() / (n * h.exp_m1())
}

/// `log(F(N)) / N`. For exploration only; never used to check anything.
pub fn entropy_estimate(fix: &Sequence, horizon: usize) -> Result<f64> {
    fix.require_view(View::Fix)?;
    check_horizon(fix, horizon)?;
    let f = &fix.terms()[horizon - 1];
    if !f.is_positive() {
        return Err(Error::InvalidParameter(format!("F({horizon}) is zero")));
    }
    Ok(big_ln(f) / horizon as f64)
}

#[derive(Debug, Clone, PartialEq)]
pub struct GrowthReport {
    pub horizon: usize,
    pub h: f64,
    pub c1: f64,
    pub pi_actual: BigInt,
    pub pi_predicted: f64,
    pub mertens_actual: f64,
    pub mertens_minus_c1_harmonic: f64,
}

impl GrowthReport {
    pub fn pi_ratio(&self) -> f64 {
        scaled(&self.pi_actual, self.pi_predicted.ln())
    }
}

impl fmt::Display for GrowthReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "N {}", self.horizon)?;
        writeln!(f, "h {:.12}", self.h)?;
        writeln!(f, "C1 {:.12}", self.c1)?;
        writeln!(f, "pi_actual {}", self.pi_actual)?;
        writeln!(f, "pi_predicted {:.12e}", self.pi_predicted)?;
        writeln!(f, "pi_ratio {:.12}", self.pi_ratio())?;
        writeln!(f, "mertens_actual {:.12}", self.mertens_actual)?;
        writeln!(
            f,
            "mertens_minus_C1_harmonic {:.12}",
            self.mertens_minus_c1_harmonic
        )
    }
}

pub fn pnt_report(orbits: &Sequence, h: f64, c1: f64, horizon: usize) -> Result<GrowthReport> {
    let pi_actual = pi_count(orbits, horizon)?;
    let mertens_actual = mertens_sum(orbits, horizon, h)?;
    Ok(GrowthReport {
        horizon,
        h,
        c1,
        pi_actual,
        pi_predicted: predicted_pi(h, c1, horizon),
        mertens_actual,
        mertens_minus_c1_harmonic: mertens_actual - c1 * harmonic(horizon),
    })
}
