//! Brute-force ground truth.
//!
//! An orbit sequence is realized as an explicit disjoint union of cycles,
//! and products and iterates are computed by stepping points around those
//! cycles and tracing where they close up. None of the divisor-sum formulas
//! used in [`crate::operators`] appear here.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::numtheory::{euler_phi, gcd, lcm};
use crate::sequences::{Sequence, View};

/// A map given by its cycles: `cycle length -> number of such cycles`,
/// realized for all lengths up to `realized`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleSystem {
    cycles: BTreeMap<u64, u64>,
    realized: usize,
}

impl CycleSystem {
    pub fn cycles(&self) -> &BTreeMap<u64, u64> {
        &self.cycles
    }

    /// Lengths up to which the cycle counts are complete.
    pub fn realized(&self) -> usize {
        self.realized
    }

    pub fn total_points(&self) -> BigInt {
        self.cycles
            .iter()
            .map(|(&len, &count)| BigInt::from(len) * count)
            .sum()
    }

    fn require_realized(&self, needed: usize) -> Result<()> {
        if needed > self.realized {
            Err(Error::InsufficientLength {
                needed,
                available: self.realized,
            })
        } else {
            Ok(())
        }
    }
}

/// Realizes `o(n)` cycles of each length `n`.
pub fn build(orbits: &Sequence) -> Result<CycleSystem> {
    orbits.require_view(View::Orbit)?;
    let mut cycles = BTreeMap::new();
    for (i, t) in orbits.terms().iter().enumerate() {
        if t.is_zero() {
            continue;
        }
        let count = t.to_u64().ok_or_else(|| {
            Error::InvalidParameter(format!("orbit count at {} too large to realize", i + 1))
        })?;
        cycles.insert(i as u64 + 1, count);
    }
    Ok(CycleSystem {
        cycles,
        realized: orbits.len(),
    })
}

/// Number of points `x` with `T^n(x) = x`, found by stepping every point of
/// one representative cycle of each length.
pub fn count_fixed(sys: &CycleSystem, n: u64) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::NonPositive("n"));
    }
    sys.require_realized(n as usize)?;
    let mut total = BigInt::zero();
    for (&len, &count) in &sys.cycles {
        let fixed = (0..len).filter(|&x| (x + n) % len == x).count() as u64;
        total += BigInt::from(fixed) * count;
    }
    Ok(total)
}

/// Lengths of the cycles of `(x, y) -> (x + 1 mod a, y + 1 mod b)` on an
/// `a x b` grid, found by walking from every unvisited point.
fn trace_product_cycles(a: u64, b: u64) -> Vec<u64> {
    let (a_us, b_us) = (a as usize, b as usize);
    let mut seen = vec![false; a_us * b_us];
    let mut lengths = Vec::new();
    for start in 0..seen.len() {
        if seen[start] {
            continue;
        }
        let (mut x, mut y) = (start / b_us, start % b_us);
        let mut steps = 0;
        loop {
            seen[x * b_us + y] = true;
            x = (x + 1) % a_us;
            y = (y + 1) % b_us;
            steps += 1;
            if x * b_us + y == start {
                break;
            }
        }
        lengths.push(steps);
    }
    lengths
}

/// Lengths of the cycles of `x -> x + k mod len`.
fn trace_iterate_cycles(len: u64, k: u64) -> Vec<u64> {
    let len_us = len as usize;
    let mut seen = vec![false; len_us];
    let mut lengths = Vec::new();
    for start in 0..len_us {
        if seen[start] {
            continue;
        }
        let mut x = start;
        let mut steps = 0;
        loop {
            seen[x] = true;
            x = (x + k as usize) % len_us;
            steps += 1;
            if x == start {
                break;
            }
        }
        lengths.push(steps);
    }
    lengths
}

fn tally(counts: &mut [BigInt], length: u64, multiplicity: BigInt) {
    if (length as usize) <= counts.len() {
        counts[length as usize - 1] += multiplicity;
    }
}

/// Orbit counts of `A x B` up to length `len`.
pub fn simulate_product(a: &CycleSystem, b: &CycleSystem, len: usize) -> Result<Sequence> {
    if len == 0 {
        return Err(Error::NonPositive("N"));
    }
    a.require_realized(len)?;
    b.require_realized(len)?;
    let mut counts = vec![BigInt::zero(); len];
    for (&la, &ca) in a.cycles.range(..=len as u64) {
        for (&lb, &cb) in b.cycles.range(..=len as u64) {
            let pairs = BigInt::from(ca) * cb;
            for cycle in trace_product_cycles(la, lb) {
                tally(&mut counts, cycle, pairs.clone());
            }
        }
    }
    Sequence::new(View::Orbit, counts)
}

/// Orbit counts of `A^k` up to length `len`. Needs `A` realized to `k len`.
pub fn simulate_iterate(a: &CycleSystem, k: u64, len: usize) -> Result<Sequence> {
    if k == 0 {
        return Err(Error::NonPositive("k"));
    }
    if len == 0 {
        return Err(Error::NonPositive("N"));
    }
    let reach = k as usize * len;
    a.require_realized(reach)?;
    let mut counts = vec![BigInt::zero(); len];
    for (&l, &c) in a.cycles.range(..=reach as u64) {
        for cycle in trace_iterate_cycles(l, k) {
            tally(&mut counts, cycle, BigInt::from(c));
        }
    }
    Sequence::new(View::Orbit, counts)
}

/// Cyclic subgroups of `C_n x C_n` (the trivial one included): each cyclic
/// subgroup of order `d` has exactly `phi(d)` generators.
pub fn cyclic_subgroup_count(n: u64) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::NonPositive("n"));
    }
    let mut by_order: BTreeMap<u64, u64> = BTreeMap::new();
    for x in 0..n {
        for y in 0..n {
            let order = lcm(n / gcd(x, n), n / gcd(y, n));
            *by_order.entry(order).or_default() += 1;
        }
    }
    let mut total = BigInt::zero();
    for (order, elements) in by_order {
        let phi = euler_phi(order)?;
        debug_assert_eq!(elements % phi, 0);
        total += elements / phi;
    }
    Ok(total)
}

/// Primitive sublattices of index `n` in `Z^2`, as upper-triangular Hermite
/// forms `[[a, b], [0, c]]` with `a c = n`, `0 <= b < a`, `gcd(a, b, c) = 1`.
pub fn primitive_lattice_count(n: u64) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::NonPositive("n"));
    }
    let mut count = 0u64;
    for a in 1..=n {
        if !n.is_multiple_of(a) {
            continue;
        }
        let c = n / a;
        count += (0..a).filter(|&b| gcd(gcd(a, b), c) == 1).count() as u64;
    }
    Ok(BigInt::from(count))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::{builtin, BuiltinSpec};

    fn orbits(t: &[i64]) -> Sequence {
        Sequence::from_i64s(View::Orbit, t).unwrap()
    }

    fn ints(s: &Sequence) -> Vec<i64> {
        s.terms()
            .iter()
            .map(|t| i64::try_from(t).unwrap())
            .collect()
    }

    fn named(name: &str, len: usize) -> Sequence {
        builtin(&BuiltinSpec::new(name), len).unwrap()
    }

    #[test]
    fn build_examples() {
        let z = build(&named("zeta", 4)).unwrap();
        assert_eq!(
            z.cycles(),
            &BTreeMap::from([(1, 1), (2, 1), (3, 1), (4, 1)])
        );
        let d = build(&named("delta", 4)).unwrap();
        assert_eq!(d.cycles(), &BTreeMap::from([(1, 1)]));
        let t = build(&orbits(&[0, 2, 0])).unwrap();
        assert_eq!(t.cycles(), &BTreeMap::from([(2, 2)]));
        assert_eq!(t.total_points(), BigInt::from(4));
    }

    #[test]
    fn count_fixed_examples() {
        let z = build(&named("zeta", 6)).unwrap();
        assert_eq!(count_fixed(&z, 6).unwrap(), BigInt::from(12));
        let d = build(&named("delta", 9)).unwrap();
        for n in 1..=9 {
            assert_eq!(count_fixed(&d, n).unwrap(), BigInt::from(1));
        }
        let t = build(&orbits(&[0, 2, 0])).unwrap();
        assert_eq!(count_fixed(&t, 2).unwrap(), BigInt::from(4));
        assert!(count_fixed(&t, 4).is_err());
    }

    #[test]
    fn simulate_product_examples() {
        let z = build(&named("zeta", 8)).unwrap();
        assert_eq!(
            ints(&simulate_product(&z, &z, 8).unwrap()),
            vec![1, 4, 5, 10, 7, 20, 9, 22]
        );
        let x = orbits(&[2, 0, 1, 3, 0, 1]);
        let d = build(&named("delta", 6)).unwrap();
        assert_eq!(simulate_product(&build(&x).unwrap(), &d, 6).unwrap(), x);
        let two = build(&orbits(&[0, 1, 0, 0, 0, 0])).unwrap();
        let three = build(&orbits(&[0, 0, 1, 0, 0, 0])).unwrap();
        assert_eq!(
            ints(&simulate_product(&two, &three, 6).unwrap()),
            vec![0, 0, 0, 0, 0, 1]
        );
    }

    #[test]
    fn simulate_iterate_examples() {
        let id = build(&named("id_orbits", 16)).unwrap();
        assert_eq!(
            ints(&simulate_iterate(&id, 2, 8).unwrap()),
            vec![5, 8, 15, 16, 25, 24, 35, 32]
        );
        let x = orbits(&[1, 3, 0, 2]);
        assert_eq!(simulate_iterate(&build(&x).unwrap(), 1, 4).unwrap(), x);
        let six = build(&orbits(&[0, 0, 0, 0, 0, 1])).unwrap();
        assert_eq!(ints(&simulate_iterate(&six, 2, 3).unwrap()), vec![0, 0, 2]);
        assert!(simulate_iterate(&six, 2, 4).is_err());
    }

    #[test]
    fn cyclic_subgroup_examples() {
        assert_eq!(cyclic_subgroup_count(1).unwrap(), BigInt::from(1));
        assert_eq!(cyclic_subgroup_count(2).unwrap(), BigInt::from(4));
        assert_eq!(cyclic_subgroup_count(4).unwrap(), BigInt::from(10));
    }

    #[test]
    fn primitive_lattice_examples() {
        assert_eq!(primitive_lattice_count(1).unwrap(), BigInt::from(1));
        assert_eq!(primitive_lattice_count(2).unwrap(), BigInt::from(3));
        assert_eq!(primitive_lattice_count(4).unwrap(), BigInt::from(6));
    }

    #[test]
    fn prime_power_lattice_sums() {
        for p in [2u64, 3, 5] {
            for r in 0..=4u32 {
                let sum: BigInt = (0..=r)
                    .map(|j| primitive_lattice_count(p.pow(j)).unwrap())
                    .sum();
                let expected = p.pow(r) + 2 * (0..r).map(|j| p.pow(j)).sum::<u64>();
                assert_eq!(sum, BigInt::from(expected), "p = {p}, r = {r}");
            }
        }
    }
}
