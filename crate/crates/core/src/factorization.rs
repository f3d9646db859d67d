//! All ways to write an orbit sequence as the orbit counts of a product of
//! two systems, up to a truncation.
//!
//! At index `n` the product formula splits as
//! `u(n) A + v(n) B + n u(n) v(n) + C = target(n)`, where
//! `A = sum_{d | n, d < n} d v(d)`, `B = sum_{d | n, d < n} d u(d)` and `C`
//! only involves earlier indices. Fixing `u(n)` leaves one linear equation
//! for `v(n)`. Since `u(1) v(1) = target(1) >= 1`, both `A` and `B` are
//! positive for `n >= 2`, which bounds `u(n) <= (target(n) - C) / A`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::numtheory::{divisors, gcd, lcm};
use crate::sequences::{Sequence, View};

pub const DEFAULT_LIMIT: usize = 10_000;

/// Two orbit sequences whose product is the search target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorPair {
    pub left: Sequence,
    pub right: Sequence,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorSearch {
    pub pairs: Vec<FactorPair>,
    /// Set when the search stopped at the limit with more pairs possible.
    pub overflow: bool,
}

struct Search<'a> {
    target: &'a [BigInt],
    len: usize,
    limit: usize,
    divisors: Vec<Vec<u64>>,
    u: Vec<BigInt>,
    v: Vec<BigInt>,
    found: Vec<FactorPair>,
    overflow: bool,
}

impl Search<'_> {
    fn emit(&mut self) {
        if self.found.len() >= self.limit {
            self.overflow = true;
            return;
        }
        let left = Sequence::new(View::Orbit, self.u.clone()).expect("nonnegative");
        let right = Sequence::new(View::Orbit, self.v.clone()).expect("nonnegative");
        self.found.push(FactorPair { left, right });
    }

    fn descend(&mut self, n: usize) {
        if self.overflow {
            return;
        }
        if n > self.len {
            self.emit();
            return;
        }
        let proper: Vec<u64> = self.divisors[n - 1]
            .iter()
            .copied()
            .filter(|&d| d < n as u64)
            .collect();
        let mut a = BigInt::zero();
        let mut b = BigInt::zero();
        for &d in &proper {
            a += &self.v[d as usize - 1] * d;
            b += &self.u[d as usize - 1] * d;
        }
        let mut c = BigInt::zero();
        for &d1 in &proper {
            let x = &self.u[d1 as usize - 1];
            if x.is_zero() {
                continue;
            }
            for &d2 in &proper {
                if lcm(d1, d2) == n as u64 {
                    c += x * &self.v[d2 as usize - 1] * gcd(d1, d2);
                }
            }
        }
        let rem = &self.target[n - 1] - c;
        if rem.is_negative() {
            return;
        }
        let mut x = BigInt::zero();
        while &x * &a <= rem {
            let r = &rem - &x * &a;
            let den = &b + &x * n;
            let (q, m) = r.div_rem(&den);
            if m.is_zero() {
                self.u.push(x.clone());
                self.v.push(q);
                self.descend(n + 1);
                self.u.pop();
                self.v.pop();
                if self.overflow {
                    return;
                }
            }
            x += 1;
        }
    }
}

/// Every ordered pair `(u, v)` of nonnegative sequences of length `len` with
/// `product_orbits(u, v) = target` on `1..=len`, stopping after `limit`.
pub fn factor_search(target: &Sequence, len: usize, limit: usize) -> Result<FactorSearch> {
    target.require_view(View::Orbit)?;
    if len == 0 {
        return Err(Error::NonPositive("N"));
    }
    if target.len() < len {
        return Err(Error::InsufficientLength {
            needed: len,
            available: target.len(),
        });
    }
    let first = target.terms()[0]
        .to_u64()
        .filter(|&t| t >= 1)
        .ok_or_else(|| {
            Error::InvalidParameter("target(1) must be a positive machine integer".into())
        })?;

    let mut search = Search {
        target: &target.terms()[..len],
        len,
        limit,
        divisors: (1..=len as u64)
            .map(|n| divisors(n).expect("positive"))
            .collect(),
        u: Vec::with_capacity(len),
        v: Vec::with_capacity(len),
        found: Vec::new(),
        overflow: false,
    };
    for d in divisors(first)? {
        search.u.push(BigInt::from(d));
        search.v.push(BigInt::from(first / d));
        search.descend(2);
        search.u.pop();
        search.v.pop();
        if search.overflow {
            break;
        }
    }
    Ok(FactorSearch {
        pairs: search.found,
        overflow: search.overflow,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operators::product_orbits;
    use crate::sequences::{builtin, BuiltinSpec, PrimeSet};

    fn named(name: &str, len: usize) -> Sequence {
        builtin(&BuiltinSpec::new(name), len).unwrap()
    }

    fn s_p(set: PrimeSet, len: usize) -> Sequence {
        builtin(&BuiltinSpec::new("s_P").with_primes("P", set), len).unwrap()
    }

    #[test]
    fn zeta_factorizations_are_s_p_pairs() {
        let z = named("zeta", 10);
        let result = factor_search(&z, 10, DEFAULT_LIMIT).unwrap();
        assert!(!result.overflow);
        assert_eq!(result.pairs.len(), 16);
        let small = [2u64, 3, 5, 7];
        for mask in 0..16u32 {
            let chosen: Vec<u64> = small
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &p)| p)
                .collect();
            let p = PrimeSet::finite(chosen).unwrap();
            let pair = FactorPair {
                left: s_p(p.clone(), 10),
                right: s_p(p.complement(), 10),
            };
            assert!(result.pairs.contains(&pair), "missing P = {p}");
        }
    }

    #[test]
    fn delta_factors_only_trivially() {
        let d = named("delta", 5);
        let result = factor_search(&d, 5, DEFAULT_LIMIT).unwrap();
        assert_eq!(
            result.pairs,
            vec![FactorPair {
                left: d.clone(),
                right: d
            }]
        );
    }

    #[test]
    fn three_smooth_indicator_recovers_its_factors() {
        let f = named("feigenbaum", 12);
        let t = named("ternary", 12);
        let target = product_orbits(&f, &t).unwrap();
        let result = factor_search(&target, 12, DEFAULT_LIMIT).unwrap();
        assert!(result.pairs.contains(&FactorPair { left: f, right: t }));
        for pair in &result.pairs {
            assert_eq!(product_orbits(&pair.left, &pair.right).unwrap(), target);
        }
    }

    #[test]
    fn limit_sets_overflow() {
        let z = named("zeta", 10);
        let result = factor_search(&z, 10, 5).unwrap();
        assert_eq!(result.pairs.len(), 5);
        assert!(result.overflow);
    }

    #[test]
    fn preconditions() {
        let z = named("zeta", 4);
        assert!(factor_search(&z, 5, 10).is_err());
        let zero = Sequence::from_i64s(View::Orbit, &[0, 1]).unwrap();
        assert!(factor_search(&zero, 2, 10).is_err());
        assert!(factor_search(&z.clone().with_view(View::Fix).unwrap(), 2, 10).is_err());
    }

    mod props {
        use super::*;
        use proptest::collection::vec;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(32))]

            #[test]
            fn sound_and_symmetric(u in vec(0i64..3, 7), v in vec(0i64..3, 7), a in 1i64..3, b in 1i64..3) {
                let mut u = u;
                let mut v = v;
                u[0] = a;
                v[0] = b;
                let u = Sequence::from_i64s(View::Orbit, &u).unwrap();
                let v = Sequence::from_i64s(View::Orbit, &v).unwrap();
                let target = product_orbits(&u, &v).unwrap();
                let found = factor_search(&target, 7, DEFAULT_LIMIT).unwrap();
                prop_assert!(!found.overflow);
                let original = FactorPair { left: u, right: v };
                prop_assert!(found.pairs.contains(&original));
                for pair in &found.pairs {
                    prop_assert_eq!(&product_orbits(&pair.left, &pair.right).unwrap(), &target);
                    let swapped = FactorPair { left: pair.right.clone(), right: pair.left.clone() };
                    let present = found.pairs.contains(&swapped);
                    prop_assert!(present);
                }
            }
        }
    }
}
