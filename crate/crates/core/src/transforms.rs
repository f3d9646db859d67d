//! Transforms of a single system's counting data.
//!
//! Periodic points and orbits determine each other through
//! `F(n) = sum_{d | n} d O(d)` and its Möbius inverse. The orbit monoid count
//! `G` is the Euler transform of `O`, computed through the recurrence
//! `n G(n) = F(n) + sum_{k < n} F(k) G(n - k)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::numtheory::{divisors, gcd, mobius};
use crate::sequences::{Sequence, View};

/// `F(n) = sum_{d | n} d O(d)`.
pub fn orbit_to_fix(orbits: &Sequence) -> Result<Sequence> {
    orbits.require_view(View::Orbit)?;
    Sequence::new(View::Fix, divisor_weighted_sums(orbits.terms()))
}

fn divisor_weighted_sums(terms: &[BigInt]) -> Vec<BigInt> {
    (1..=terms.len() as u64)
        .map(|n| {
            divisors(n)
                .expect("index is positive")
                .into_iter()
                .map(|d| &terms[d as usize - 1] * d)
                .sum()
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FailureKind {
    /// `n` does not divide the Möbius sum.
    NonIntegral,
    /// The quotient is negative.
    Negative,
}

/// Outcome of [`realizable_as_fix`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Realizability {
    Realizable,
    Fails { index: usize, kind: FailureKind },
}

impl Realizability {
    pub fn holds(&self) -> bool {
        matches!(self, Realizability::Realizable)
    }
}

fn mobius_inversion(terms: &[BigInt]) -> std::result::Result<Vec<BigInt>, (usize, FailureKind)> {
    let mut out = Vec::with_capacity(terms.len());
    for n in 1..=terms.len() as u64 {
        let mut sum = BigInt::zero();
        for d in divisors(n).expect("index is positive") {
            match mobius(n / d).expect("index is positive") {
                1 => sum += &terms[d as usize - 1],
                -1 => sum -= &terms[d as usize - 1],
                _ => {}
            }
        }
        let (q, r) = sum.div_rem(&BigInt::from(n));
        if !r.is_zero() {
            return Err((n as usize, FailureKind::NonIntegral));
        }
        if q.is_negative() {
            return Err((n as usize, FailureKind::Negative));
        }
        out.push(q);
    }
    Ok(out)
}

/// `O(n) = (1/n) sum_{d | n} mu(n/d) F(d)`, failing at the first index where
/// the result is not a nonnegative integer.
pub fn fix_to_orbit(fix: &Sequence) -> Result<Sequence> {
    fix.require_view(View::Fix)?;
    match mobius_inversion(fix.terms()) {
        Ok(terms) => Sequence::new(View::Orbit, terms),
        Err((n, FailureKind::NonIntegral)) => Err(Error::NonIntegral(n)),
        Err((n, FailureKind::Negative)) => Err(Error::Negative(n)),
    }
}

/// Whether the terms (whatever their view) count the periodic points of some
/// map, reporting the first index where that breaks.
pub fn realizable_as_fix(seq: &Sequence) -> Realizability {
    match mobius_inversion(seq.terms()) {
        Ok(_) => Realizability::Realizable,
        Err((index, kind)) => Realizability::Fails { index, kind },
    }
}

/// Euler transform: orbit counts to monoid counts.
pub fn euler(orbits: &Sequence) -> Result<Sequence> {
    orbits.require_view(View::Orbit)?;
    let fix = divisor_weighted_sums(orbits.terms());
    let mut monoid: Vec<BigInt> = Vec::with_capacity(fix.len());
    for n in 1..=fix.len() {
        let mut acc = fix[n - 1].clone();
        for k in 1..n {
            acc += &fix[k - 1] * &monoid[n - k - 1];
        }
        let (q, r) = acc.div_rem(&BigInt::from(n));
        assert!(r.is_zero(), "Euler recurrence division inexact at n = {n}");
        monoid.push(q);
    }
    Sequence::new(View::Monoid, monoid)
}

/// Inverse Euler transform. Recovers `F` from the recurrence, then inverts the
/// divisor sum; fails if `g` is not the Euler transform of a nonnegative
/// orbit sequence.
pub fn euler_inverse(monoid: &Sequence) -> Result<Sequence> {
    monoid.require_view(View::Monoid)?;
    let g = monoid.terms();
    let mut fix: Vec<BigInt> = Vec::with_capacity(g.len());
    for n in 1..=g.len() {
        let mut acc = &g[n - 1] * n;
        for k in 1..n {
            acc -= &fix[k - 1] * &g[n - k - 1];
        }
        fix.push(acc);
    }
    // A negative recovered F already rules out a valid orbit sequence; the
    // Möbius stage below reports the first failing index either way.
    match mobius_inversion(&fix) {
        Ok(terms) => Sequence::new(View::Orbit, terms),
        Err((n, FailureKind::NonIntegral)) => Err(Error::NonIntegral(n)),
        Err((n, FailureKind::Negative)) => Err(Error::Negative(n)),
    }
}

/// Outcome of [`is_multiplicative`]. Only pairs with `m n <= N` are tested.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Multiplicativity {
    Multiplicative,
    /// Lexicographically smallest coprime `(m, n)` with `s(mn) != s(m)s(n)`;
    /// `(1, 1)` when `s(1) != 1`.
    Fails {
        m: u64,
        n: u64,
    },
}

impl Multiplicativity {
    pub fn holds(&self) -> bool {
        matches!(self, Multiplicativity::Multiplicative)
    }
}

pub fn is_multiplicative(seq: &Sequence) -> Multiplicativity {
    let len = seq.len() as u64;
    if !seq.at(1).is_one() {
        return Multiplicativity::Fails { m: 1, n: 1 };
    }
    for m in 1..=len {
        for n in 1..=len / m {
            if gcd(m, n) == 1 && *seq.at(m * n) != seq.at(m) * seq.at(n) {
                return Multiplicativity::Fails { m, n };
            }
        }
    }
    Multiplicativity::Multiplicative
}
