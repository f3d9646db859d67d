//! Truncated ordinary power series for the dynamical zeta function
//! `zeta_T(s) = exp(sum_n F(n) s^n / n) = prod_i (1 - s^i)^{-O(i)}`.
//!
//! Its coefficients are `1, G(1), G(2), ...`, the orbit monoid counts, which
//! gives two routes to `G` that are independent of the Euler recurrence in
//! [`crate::transforms::euler`].

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::sequences::{Sequence, View};

/// Coefficients of `s^0 ..= s^N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<BigRational>,
}

impl PowerSeries {
    pub fn new(coeffs: Vec<BigRational>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Empty);
        }
        Ok(PowerSeries { coeffs })
    }

    pub fn from_integers<I: IntoIterator<Item = BigInt>>(terms: I) -> Result<Self> {
        Self::new(terms.into_iter().map(BigRational::from_integer).collect())
    }

    /// Highest exponent kept.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &BigRational {
        &self.coeffs[k]
    }

    /// Truncated product; the order is the smaller of the two.
    pub fn mul(&self, other: &PowerSeries) -> PowerSeries {
        let order = self.order().min(other.order());
        let mut coeffs = vec![BigRational::zero(); order + 1];
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=order - i].iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        PowerSeries { coeffs }
    }

    /// All coefficients as nonnegative integers, or the first one that is not.
    pub fn to_nonnegative_integers(&self) -> Result<Vec<BigInt>> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                if c.is_integer() && !c.is_negative() {
                    Ok(c.to_integer())
                } else {
                    Err(Error::NotNonnegativeInteger {
                        index: i,
                        value: c.to_string(),
                    })
                }
            })
            .collect()
    }

    /// The monoid counts `G(1..=N)`, i.e. every coefficient after the
    /// constant term, as a sequence.
    pub fn monoid_counts(&self) -> Result<Sequence> {
        let ints = self.to_nonnegative_integers()?;
        Sequence::new(View::Monoid, ints[1..].to_vec())
    }
}

/// Formal exponential of a series with zero constant term, through
/// `n b(n) = sum_{k=1}^{n} k a(k) b(n - k)`.
pub fn exp_series(a: &PowerSeries) -> Result<PowerSeries> {
    if !a.coeffs[0].is_zero() {
        return Err(Error::NonzeroConstantTerm);
    }
    let order = a.order();
    let mut b = Vec::with_capacity(order + 1);
    b.push(BigRational::one());
    for n in 1..=order {
        let mut acc = BigRational::zero();
        for k in 1..=n {
            if !a.coeffs[k].is_zero() {
                acc += &a.coeffs[k] * BigInt::from(k) * &b[n - k];
            }
        }
        b.push(acc / BigInt::from(n));
    }
    Ok(PowerSeries { coeffs: b })
}

/// `zeta_T(s)` to order `N` from `F(1..=N)`. Fails if any coefficient is not
/// a nonnegative integer, which means the input counts no map's periodic
/// points.
pub fn zeta_from_fix(fix: &Sequence) -> Result<PowerSeries> {
    fix.require_view(View::Fix)?;
    let mut log = vec![BigRational::zero()];
    log.extend(
        fix.terms()
            .iter()
            .enumerate()
            .map(|(i, f)| BigRational::new(f.clone(), BigInt::from(i + 1))),
    );
    let z = exp_series(&PowerSeries { coeffs: log })?;
    z.to_nonnegative_integers()?;
    Ok(z)
}

/// Expands `prod_{i=1}^{N} (1 - s^i)^{-O(i)}` to order `N`, one factor at a
/// time.
pub fn product_formula(orbits: &Sequence) -> Result<PowerSeries> {
    orbits.require_view(View::Orbit)?;
    let order = orbits.len();
    let mut acc = vec![BigInt::zero(); order + 1];
    acc[0] = BigInt::one();
    for i in 1..=order {
        let count = &orbits.terms()[i - 1];
        if count.is_zero() {
            continue;
        }
        // (1 - s^i)^{-c} = sum_j C(c + j - 1, j) s^{ij}
        let mut binom = Vec::with_capacity(order / i + 1);
        binom.push(BigInt::one());
        for j in 1..=order / i {
            let next = &binom[j - 1] * (count + BigInt::from(j - 1)) / BigInt::from(j);
            binom.push(next);
        }
        let mut next = vec![BigInt::zero(); order + 1];
        for (m, slot) in next.iter_mut().enumerate() {
            for (j, b) in binom.iter().enumerate().take(m / i + 1) {
                let prev = &acc[m - i * j];
                if !prev.is_zero() {
                    *slot += b * prev;
                }
            }
        }
        acc = next;
    }
    PowerSeries::from_integers(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::{builtin, BuiltinSpec};
    use crate::transforms::{euler, orbit_to_fix};
    use num_traits::Pow;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn ints(p: &PowerSeries) -> Vec<i64> {
        p.to_nonnegative_integers()
            .unwrap()
            .iter()
            .map(|t| i64::try_from(t).unwrap())
            .collect()
    }

    fn shift(a: i64, len: usize) -> Sequence {
        builtin(&BuiltinSpec::new("full_shift").with_int("a", a), len).unwrap()
    }

    #[test]
    fn exp_examples() {
        let zero = PowerSeries::new(vec![BigRational::zero(); 4]).unwrap();
        assert_eq!(ints(&exp_series(&zero).unwrap()), vec![1, 0, 0, 0]);

        let mut log2 = vec![BigRational::zero()];
        log2.extend((1..=4).map(|n| r(1 << n, n)));
        let e = exp_series(&PowerSeries::new(log2).unwrap()).unwrap();
        assert_eq!(ints(&e), vec![1, 2, 4, 8, 16]);

        let s = PowerSeries::new(vec![r(0, 1), r(1, 1), r(0, 1), r(0, 1)]).unwrap();
        assert_eq!(
            exp_series(&s).unwrap().coeffs(),
            &[r(1, 1), r(1, 1), r(1, 2), r(1, 6)]
        );
        let bad = PowerSeries::new(vec![r(1, 1), r(1, 1)]).unwrap();
        assert_eq!(exp_series(&bad), Err(Error::NonzeroConstantTerm));
    }

    #[test]
    fn zeta_from_fix_examples() {
        let lucas = builtin(&BuiltinSpec::new("golden_mean"), 6).unwrap();
        assert_eq!(
            ints(&zeta_from_fix(&lucas).unwrap()),
            vec![1, 1, 2, 3, 5, 8, 13]
        );
        let dual = builtin(
            &BuiltinSpec::new("dual_rational")
                .with_int("a", 2)
                .with_int("b", 3),
            5,
        )
        .unwrap();
        assert_eq!(
            ints(&zeta_from_fix(&dual).unwrap()),
            vec![1, 1, 3, 9, 27, 81]
        );
        // 1 / (1 - 2s): two fixed points already give G(1) = 2.
        assert_eq!(
            ints(&zeta_from_fix(&shift(2, 5)).unwrap()),
            vec![1, 2, 4, 8, 16, 32]
        );
        // (1, 2): s + s^2 has coefficient 1/2 in exp(s + s^2).
        let bad = Sequence::from_i64s(View::Fix, &[1, 2]).unwrap();
        assert!(matches!(
            zeta_from_fix(&bad),
            Err(Error::NotNonnegativeInteger { index: 2, .. })
        ));
    }

    #[test]
    fn product_formula_examples() {
        let zeta = builtin(&BuiltinSpec::new("zeta"), 6).unwrap();
        assert_eq!(
            ints(&product_formula(&zeta).unwrap()),
            vec![1, 1, 2, 3, 5, 7, 11]
        );
        let delta = builtin(&BuiltinSpec::new("delta"), 4).unwrap();
        assert_eq!(ints(&product_formula(&delta).unwrap()), vec![1; 5]);
        let f = builtin(&BuiltinSpec::new("feigenbaum"), 8).unwrap();
        let g = euler(&f).unwrap();
        assert_eq!(product_formula(&f).unwrap().monoid_counts().unwrap(), g);
    }

    #[test]
    fn full_shift_monoid_counts() {
        // zeta_T(s) = 1 / (1 - a s), so G(n) = a^n.
        for a in [2i64, 3, 5] {
            let z = zeta_from_fix(&shift(a, 20)).unwrap();
            for n in 1..=20u32 {
                let expected = BigInt::from(a).pow(n);
                assert_eq!(z.coeff(n as usize), &BigRational::from_integer(expected));
            }
        }
    }

    #[test]
    fn routes_agree_on_builtin_orbits() {
        let len = 30;
        let orbit_builtins = ["zeta", "delta", "id_orbits", "feigenbaum", "ternary"];
        for name in orbit_builtins {
            let o = builtin(&BuiltinSpec::new(name), len).unwrap();
            let by_product = product_formula(&o).unwrap();
            let by_exp = zeta_from_fix(&orbit_to_fix(&o).unwrap()).unwrap();
            assert_eq!(by_product, by_exp, "{name}");
            assert_eq!(
                by_product.monoid_counts().unwrap(),
                euler(&o).unwrap(),
                "{name}"
            );
        }
    }

    #[test]
    fn series_product_truncates() {
        let a = PowerSeries::from_integers([1, 1].map(BigInt::from)).unwrap();
        let b = PowerSeries::from_integers([1, 2, 3].map(BigInt::from)).unwrap();
        assert_eq!(ints(&a.mul(&b)), vec![1, 3]);
    }
}
