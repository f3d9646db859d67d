//! The [`Sequence`] container and the catalogue of named example sequences.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

use crate::error::{Error, Result};
use crate::numtheory::{self, big_prime_part, is_prime};

/// How the terms of a sequence are to be read.
///
/// `Orbit`: closed orbits of length n. `Fix`: points fixed by the n-th
/// iterate. `Monoid`: elements of weight n in the free monoid on the orbits.
/// `Plain`: arbitrary integer data with no dynamical reading.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum View {
    Orbit,
    Fix,
    Monoid,
    Plain,
}

impl fmt::Display for View {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            View::Orbit => "orbit",
            View::Fix => "fix",
            View::Monoid => "monoid",
            View::Plain => "plain",
        })
    }
}

impl FromStr for View {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "orbit" => Ok(View::Orbit),
            "fix" => Ok(View::Fix),
            "monoid" => Ok(View::Monoid),
            "plain" => Ok(View::Plain),
            other => Err(Error::InvalidParameter(format!("unknown view `{other}`"))),
        }
    }
}

/// A one-indexed finite sequence of big integers tagged with its [`View`].
///
/// Terms are nonnegative in every view except `Plain`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sequence {
    view: View,
    terms: Vec<BigInt>,
}

impl Sequence {
    pub fn new(view: View, terms: Vec<BigInt>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::Empty);
        }
        if view != View::Plain {
            if let Some(i) = terms.iter().position(|t| t.is_negative()) {
                return Err(Error::NegativeTerm { view, index: i + 1 });
            }
        }
        Ok(Sequence { view, terms })
    }

    pub fn from_i64s(view: View, terms: &[i64]) -> Result<Self> {
        Self::new(view, terms.iter().map(|&t| BigInt::from(t)).collect())
    }

    /// Builds terms `1..=len` from a function of the index.
    pub fn from_fn<F>(view: View, len: usize, mut f: F) -> Result<Self>
    where
        F: FnMut(u64) -> BigInt,
    {
        Self::new(view, (1..=len as u64).map(&mut f).collect())
    }

    pub fn view(&self) -> View {
        self.view
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Always false; kept for clippy's `len_without_is_empty`.
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[BigInt] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<BigInt> {
        self.terms
    }

    /// Term at one-based index `n`.
    ///
    /// Panics when `n` is 0 or beyond the truncation.
    pub fn at(&self, n: u64) -> &BigInt {
        assert!(n >= 1, "sequences are one-indexed");
        &self.terms[n as usize - 1]
    }

    /// Reinterprets the same terms under another view.
    pub fn with_view(self, view: View) -> Result<Self> {
        Sequence::new(view, self.terms)
    }

    pub fn require_view(&self, expected: View) -> Result<()> {
        if self.view == expected {
            Ok(())
        } else {
            Err(Error::WrongView {
                expected,
                found: self.view,
            })
        }
    }

    /// First `m` terms.
    pub fn slice(&self, m: usize) -> Result<Sequence> {
        if m == 0 {
            return Err(Error::NonPositive("slice length"));
        }
        if m > self.len() {
            return Err(Error::InsufficientLength {
                needed: m,
                available: self.len(),
            });
        }
        Ok(Sequence {
            view: self.view,
            terms: self.terms[..m].to_vec(),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PrimeSetMode {
    Finite,
    Cofinite,
}

/// A finite or cofinite set of primes.
///
/// `Finite` means exactly the listed primes; `Cofinite` means every prime
/// except the listed ones.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrimeSet {
    mode: PrimeSetMode,
    listed: BTreeSet<u64>,
}

impl PrimeSet {
    fn build<I: IntoIterator<Item = u64>>(mode: PrimeSetMode, primes: I) -> Result<Self> {
        let listed: BTreeSet<u64> = primes.into_iter().collect();
        if let Some(&bad) = listed.iter().find(|&&p| !is_prime(p)) {
            return Err(Error::InvalidParameter(format!("{bad} is not prime")));
        }
        Ok(PrimeSet { mode, listed })
    }

    pub fn finite<I: IntoIterator<Item = u64>>(primes: I) -> Result<Self> {
        Self::build(PrimeSetMode::Finite, primes)
    }

    /// All primes except those listed.
    pub fn cofinite<I: IntoIterator<Item = u64>>(excluded: I) -> Result<Self> {
        Self::build(PrimeSetMode::Cofinite, excluded)
    }

    pub fn empty() -> Self {
        PrimeSet {
            mode: PrimeSetMode::Finite,
            listed: BTreeSet::new(),
        }
    }

    pub fn all() -> Self {
        PrimeSet {
            mode: PrimeSetMode::Cofinite,
            listed: BTreeSet::new(),
        }
    }

    pub fn mode(&self) -> PrimeSetMode {
        self.mode
    }

    pub fn listed(&self) -> impl Iterator<Item = u64> + '_ {
        self.listed.iter().copied()
    }

    pub fn contains(&self, p: u64) -> bool {
        match self.mode {
            PrimeSetMode::Finite => self.listed.contains(&p),
            PrimeSetMode::Cofinite => is_prime(p) && !self.listed.contains(&p),
        }
    }

    pub fn complement(&self) -> PrimeSet {
        let mode = match self.mode {
            PrimeSetMode::Finite => PrimeSetMode::Cofinite,
            PrimeSetMode::Cofinite => PrimeSetMode::Finite,
        };
        PrimeSet {
            mode,
            listed: self.listed.clone(),
        }
    }

    /// Members of the set up to `bound`, ascending.
    pub fn members_up_to(&self, bound: u64) -> Vec<u64> {
        numtheory::primes_up_to(bound)
            .into_iter()
            .filter(|&p| self.contains(p))
            .collect()
    }
}

impl fmt::Display for PrimeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mode == PrimeSetMode::Cofinite {
            f.write_str("!")?;
        }
        let parts: Vec<String> = self.listed.iter().map(u64::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

/// Parses `2,3` (finite), `!2,3` (all primes but 2 and 3), `!` (all primes)
/// and the empty string (no primes).
impl FromStr for PrimeSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (mode, body) = match s.strip_prefix('!') {
            Some(rest) => (PrimeSetMode::Cofinite, rest),
            None => (PrimeSetMode::Finite, s),
        };
        let primes = body
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<u64>()
                    .map_err(|_| Error::InvalidParameter(format!("bad prime `{t}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::build(mode, primes)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Param {
    Int(i64),
    Primes(PrimeSet),
}

/// A catalogue name plus its parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BuiltinSpec {
    pub name: String,
    pub params: BTreeMap<String, Param>,
}

/// Catalogue names and the parameters each one takes.
pub const CATALOGUE: &[(&str, &[&str])] = &[
    ("zeta", &[]),
    ("delta", &[]),
    ("id_orbits", &[]),
    ("geometric", &["p"]),
    ("s_P", &["P"]),
    ("feigenbaum", &[]),
    ("ternary", &[]),
    ("golden_mean", &[]),
    ("full_shift", &["a"]),
    ("dual_rational", &["a", "b"]),
    ("localized_23", &[]),
    ("s_integer_23", &[]),
    ("s_part_seq", &["S"]),
    ("a_S", &["S"]),
];

/// Whether the named parameter of a builtin is a prime set (as opposed to an
/// integer).
pub fn is_prime_set_param(name: &str) -> bool {
    matches!(name, "P" | "S")
}

impl BuiltinSpec {
    pub fn new(name: impl Into<String>) -> Self {
        BuiltinSpec {
            name: name.into(),
            params: BTreeMap::new(),
        }
    }

    pub fn with_int(mut self, key: &str, value: i64) -> Self {
        self.params.insert(key.to_string(), Param::Int(value));
        self
    }

    pub fn with_primes(mut self, key: &str, value: PrimeSet) -> Self {
        self.params.insert(key.to_string(), Param::Primes(value));
        self
    }

    fn int(&self, key: &str) -> Result<i64> {
        match self.params.get(key) {
            Some(Param::Int(v)) => Ok(*v),
            Some(Param::Primes(_)) => Err(Error::InvalidParameter(format!(
                "{}: parameter `{key}` must be an integer",
                self.name
            ))),
            None => Err(Error::InvalidParameter(format!(
                "{}: missing parameter `{key}`",
                self.name
            ))),
        }
    }

    fn primes(&self, key: &str) -> Result<&PrimeSet> {
        match self.params.get(key) {
            Some(Param::Primes(p)) => Ok(p),
            Some(Param::Int(_)) => Err(Error::InvalidParameter(format!(
                "{}: parameter `{key}` must be a prime set",
                self.name
            ))),
            None => Err(Error::InvalidParameter(format!(
                "{}: missing parameter `{key}`",
                self.name
            ))),
        }
    }

    fn check_params(&self) -> Result<()> {
        let expected = CATALOGUE
            .iter()
            .find(|(name, _)| *name == self.name)
            .map(|(_, params)| *params)
            .ok_or_else(|| Error::UnknownBuiltin(self.name.clone()))?;
        if let Some(extra) = self.params.keys().find(|k| !expected.contains(&k.as_str())) {
            return Err(Error::InvalidParameter(format!(
                "{}: unexpected parameter `{extra}`",
                self.name
            )));
        }
        Ok(())
    }
}

fn indicator(b: bool) -> BigInt {
    if b {
        BigInt::one()
    } else {
        BigInt::zero()
    }
}

fn is_power_of(mut n: u64, base: u64) -> bool {
    while n.is_multiple_of(base) {
        n /= base;
    }
    n == 1
}

fn positive_param(spec: &BuiltinSpec, key: &str, min: i64) -> Result<u64> {
    let v = spec.int(key)?;
    if v < min {
        return Err(Error::InvalidParameter(format!(
            "{}: `{key}` must be at least {min}, got {v}",
            spec.name
        )));
    }
    Ok(v as u64)
}

/// `1` if no prime of `set` divides `n`, else `0`.
pub fn s_p(set: &PrimeSet, n: u64) -> BigInt {
    let f = numtheory::factorize(n).expect("index is positive");
    let coprime = f.primes().all(|p| !set.contains(p));
    indicator(coprime)
}

/// Terms `a_{S,n} = prod_{p in S} ((p + 1) * part_p(n) - 2) / (p - 1)` as
/// exact rationals. Primes of `S` not dividing `n` contribute a factor 1, so
/// only the prime support of `n` is visited.
pub fn a_s_terms(set: &PrimeSet, len: usize) -> Result<Vec<BigRational>> {
    if len == 0 {
        return Err(Error::NonPositive("N"));
    }
    (1..=len as u64)
        .map(|n| {
            let f = numtheory::factorize(n)?;
            Ok(f.factors()
                .iter()
                .filter(|&&(p, _)| set.contains(p))
                .map(|&(p, a)| {
                    let pp = BigInt::from(p);
                    let num = (&pp + 1u32) * Pow::pow(&pp, a) - 2u32;
                    BigRational::new(num, pp - 1u32)
                })
                .fold(BigRational::one(), |acc, x| acc * x))
        })
        .collect()
}

/// Generates the first `len` terms of a catalogue sequence.
pub fn builtin(spec: &BuiltinSpec, len: usize) -> Result<Sequence> {
    if len == 0 {
        return Err(Error::NonPositive("N"));
    }
    spec.check_params()?;
    let from_fn = |view, f: &dyn Fn(u64) -> BigInt| Sequence::from_fn(view, len, f);
    match spec.name.as_str() {
        "zeta" => from_fn(View::Orbit, &|_| BigInt::one()),
        "delta" => from_fn(View::Orbit, &|n| indicator(n == 1)),
        "id_orbits" => from_fn(View::Orbit, &BigInt::from),
        "geometric" => {
            let p = BigInt::from(positive_param(spec, "p", 1)?);
            from_fn(View::Orbit, &|n| Pow::pow(&p, n))
        }
        "s_P" => {
            let set = spec.primes("P")?;
            from_fn(View::Orbit, &|n| s_p(set, n))
        }
        "feigenbaum" => from_fn(View::Orbit, &|n| indicator(is_power_of(n, 2))),
        "ternary" => from_fn(View::Orbit, &|n| indicator(is_power_of(n, 3))),
        "golden_mean" => {
            let mut lucas = vec![BigInt::one(), BigInt::from(3)];
            while lucas.len() < len {
                let next = &lucas[lucas.len() - 1] + &lucas[lucas.len() - 2];
                lucas.push(next);
            }
            lucas.truncate(len);
            Sequence::new(View::Fix, lucas)
        }
        "full_shift" => {
            let a = BigInt::from(positive_param(spec, "a", 2)?);
            from_fn(View::Fix, &|n| Pow::pow(&a, n))
        }
        "dual_rational" => {
            let a = positive_param(spec, "a", 1)?;
            let b = positive_param(spec, "b", 1)?;
            if b <= a || a.gcd(&b) != 1 {
                return Err(Error::InvalidParameter(format!(
                    "dual_rational needs coprime b > a > 0, got a = {a}, b = {b}"
                )));
            }
            let (a, b) = (BigInt::from(a), BigInt::from(b));
            from_fn(View::Fix, &|n| Pow::pow(&b, n) - Pow::pow(&a, n))
        }
        "localized_23" => from_fn(View::Fix, &|n| {
            big_prime_part(&(Pow::pow(BigInt::from(2), n) - 1), 3)
        }),
        "s_integer_23" => from_fn(View::Fix, &|n| {
            let x: BigInt = Pow::pow(BigInt::from(2), n) - 1;
            let part = big_prime_part(&x, 3);
            x / part
        }),
        "s_part_seq" => {
            let set = spec.primes("S")?;
            from_fn(View::Plain, &|n| {
                BigInt::from(numtheory::part(n, set).expect("index is positive"))
            })
        }
        "a_S" => {
            let terms = a_s_terms(spec.primes("S")?, len)?;
            let ints = terms
                .into_iter()
                .enumerate()
                .map(|(i, t)| {
                    if t.is_integer() {
                        Ok(t.to_integer())
                    } else {
                        Err(Error::NotNonnegativeInteger {
                            index: i + 1,
                            value: t.to_string(),
                        })
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            Sequence::new(View::Plain, ints)
        }
        other => Err(Error::UnknownBuiltin(other.to_string())),
    }
}
