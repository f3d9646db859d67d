//! Named identities, runnable from the command line.
//!
//! Each check takes a truncation `N` and compares two independent
//! computations coefficient by coefficient, reporting the first index where
//! they disagree. A few checks (the exhaustive oracle grids, the
//! factorization search) run at a fixed size and ignore `N`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::asymptotics::{harmonic, mertens_sum, pi_count, predicted_pi};
use crate::dirichlet::DirichletPoly;
use crate::error::Result;
use crate::factorization::{factor_search, DEFAULT_LIMIT};
use crate::numtheory::{divisors, factorize, mobius, part, primes_up_to, sigma_k};
use crate::operators::{iterate_fix_to, iterate_orbits_to, product_fix, product_orbits};
use crate::oracle::{
    build, count_fixed, cyclic_subgroup_count, primitive_lattice_count, simulate_iterate,
    simulate_product,
};
use crate::sequences::{builtin, BuiltinSpec, PrimeSet, Sequence, View};
use crate::transforms::{euler, euler_inverse, fix_to_orbit, is_multiplicative, orbit_to_fix};
use crate::zeta_series::{product_formula, zeta_from_fix};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail { index: u64, detail: String },
}

impl Verdict {
    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    fn and(self, next: impl FnOnce() -> Result<Verdict>) -> Result<Verdict> {
        match self {
            Verdict::Pass => next(),
            fail => Ok(fail),
        }
    }
}

type Check = fn(usize) -> Result<Verdict>;

pub struct Identity {
    pub name: &'static str,
    pub summary: &'static str,
    run: Check,
}

impl Identity {
    pub fn run(&self, terms: usize) -> Result<Verdict> {
        (self.run)(terms.max(1))
    }
}

fn fail(index: u64, detail: impl Into<String>) -> Verdict {
    Verdict::Fail {
        index,
        detail: detail.into(),
    }
}

fn compare<T: PartialEq + std::fmt::Display>(label: &str, left: &[T], right: &[T]) -> Verdict {
    match left.iter().zip(right).position(|(a, b)| a != b) {
        Some(i) => fail(
            i as u64 + 1,
            format!("{label}: {} != {}", left[i], right[i]),
        ),
        None if left.len() != right.len() => fail(
            left.len().min(right.len()) as u64 + 1,
            format!("{label}: lengths {} and {}", left.len(), right.len()),
        ),
        None => Verdict::Pass,
    }
}

fn seq_eq(label: &str, left: &Sequence, right: &Sequence) -> Verdict {
    compare(label, left.terms(), right.terms())
}

fn poly_eq(label: &str, left: &DirichletPoly, right: &DirichletPoly) -> Verdict {
    compare(label, left.coeffs(), right.coeffs())
}

fn ints(label: &str, actual: &Sequence, expected: impl Fn(u64) -> BigInt) -> Verdict {
    let want: Vec<BigInt> = (1..=actual.len() as u64).map(expected).collect();
    compare(label, actual.terms(), &want)
}

fn named(name: &str, len: usize) -> Result<Sequence> {
    builtin(&BuiltinSpec::new(name), len)
}

fn with_int(name: &str, key: &str, value: i64, len: usize) -> Result<Sequence> {
    builtin(&BuiltinSpec::new(name).with_int(key, value), len)
}

fn s_p(set: &PrimeSet, len: usize) -> Result<Sequence> {
    builtin(&BuiltinSpec::new("s_P").with_primes("P", set.clone()), len)
}

fn big(x: i64) -> BigInt {
    BigInt::from(x)
}

fn zeta_poly(len: usize) -> Result<DirichletPoly> {
    DirichletPoly::zeta_shift(0, len)
}

/// `prod_p (1 + c p^{-s})`-style products of two-term factors
/// `[(1, 1), (p, coeff(p))]`.
fn euler_factors(primes: &[u64], coeff: impl Fn(u64) -> i64, len: usize) -> Result<DirichletPoly> {
    let factors = primes
        .iter()
        .filter(|&&p| p as usize <= len)
        .map(|&p| DirichletPoly::sparse_int(&[(1, 1), (p, coeff(p))], len))
        .collect::<Result<Vec<_>>>()?;
    DirichletPoly::product(&factors, len)
}

fn small_prime_sets() -> Vec<PrimeSet> {
    [&[][..], &[2], &[3], &[2, 7], &[2, 5]]
        .iter()
        .map(|ps| PrimeSet::finite(ps.iter().copied()).expect("primes"))
        .collect()
}

fn random_orbits(rng: &mut StdRng, max_term: i64, max_len: usize) -> Sequence {
    let len = rng.gen_range(1..=max_len);
    let terms: Vec<i64> = (0..len).map(|_| rng.gen_range(0..=max_term)).collect();
    Sequence::from_i64s(View::Orbit, &terms).expect("nonnegative")
}

fn check_product_series(n: usize) -> Result<Verdict> {
    let z = named("zeta", n)?;
    let lhs = DirichletPoly::from_sequence(&product_orbits(&z, &z)?).mul(&zeta_poly(n)?.dilate(2)?);
    let zp = zeta_poly(n)?;
    let rhs = zp.mul(&zp).mul(&DirichletPoly::zeta_shift(1, n)?);
    Ok(poly_eq("d_{TxT} zeta(2s) vs zeta^2 zeta(s-1)", &lhs, &rhs))
}

fn check_product_divisor_sum(n: usize) -> Result<Verdict> {
    let z = named("zeta", n)?;
    let p = product_orbits(&z, &z)?;
    Ok(ints("O_{TxT} vs sum sigma(d) mu(n/d)^2", &p, |k| {
        divisors(k)
            .expect("positive")
            .into_iter()
            .filter(|&d| mobius(k / d).expect("positive") != 0)
            .map(|d| sigma_k(d, 1).expect("positive"))
            .sum()
    }))
}

fn check_fix_series(n: usize) -> Result<Verdict> {
    for fix in [named("golden_mean", n)?, with_int("full_shift", "a", 2, n)?] {
        let orbits = fix_to_orbit(&fix)?;
        let lhs =
            DirichletPoly::from_sequence(&orbits).mul(&DirichletPoly::zeta_reciprocal_shift(n)?);
        let rhs = DirichletPoly::new(
            fix.terms()
                .iter()
                .enumerate()
                .map(|(i, f)| BigRational::new(f.clone(), big(i as i64 + 1)))
                .collect(),
        )?;
        let v = poly_eq("d_T zeta(s+1) vs sum F(n)/n^{s+1}", &lhs, &rhs);
        if !v.passed() {
            return Ok(v);
        }
    }
    Ok(Verdict::Pass)
}

fn check_iterate_id_square(n: usize) -> Result<Verdict> {
    let id = named("id_orbits", 2 * n)?;
    let lhs = DirichletPoly::from_sequence(&iterate_orbits_to(&id, 2, n)?);
    let len = n.max(2);
    let factor = DirichletPoly::sparse_int(&[(1, 5), (2, -2)], len)?;
    let rhs = factor.mul(&DirichletPoly::zeta_shift(1, n)?);
    Ok(poly_eq("d_{T^2} vs (5 - 2/2^s) zeta(s-1)", &lhs, &rhs))
}

fn check_iterate_id_prime(n: usize) -> Result<Verdict> {
    for p in [2u64, 3, 5] {
        let id = named("id_orbits", p as usize * n)?;
        let it = iterate_orbits_to(&id, p, n)?;
        let v = ints(&format!("O_{{T^{p}}}"), &it, |k| {
            big(if k % p == 0 {
                p * p * k
            } else {
                (p * p + 1) * k
            } as i64)
        });
        if !v.passed() {
            return Ok(v);
        }
        let len = n.max(p as usize);
        let factor = DirichletPoly::sparse_int(&[(1, (p * p + 1) as i64), (p, -(p as i64))], len)?;
        let rhs = factor.mul(&DirichletPoly::zeta_shift(1, n)?);
        let v = poly_eq(
            "d_{T^p} vs (p^2 + 1 - p/p^s) zeta(s-1)",
            &DirichletPoly::from_sequence(&it),
            &rhs,
        );
        if !v.passed() {
            return Ok(v);
        }
    }
    Ok(Verdict::Pass)
}

fn check_iterate_id_fourth(n: usize) -> Result<Verdict> {
    let id = named("id_orbits", 4 * n)?;
    let it = iterate_orbits_to(&id, 4, n)?;
    Ok(ints("O_{T^4}", &it, |k| {
        big(if k % 2 == 0 { 16 } else { 21 } * k as i64)
    }))
}

fn check_feigenbaum_fix(n: usize) -> Result<Verdict> {
    let fix = orbit_to_fix(&named("feigenbaum", n)?)?;
    let two = PrimeSet::finite([2]).expect("prime");
    Ok(ints("F vs 2 part_2(n) - 1", &fix, |k| {
        big(2 * part(k, &two).expect("positive") as i64 - 1)
    }))
}

fn check_feigenbaum_iterates(n: usize) -> Result<Verdict> {
    let f = named("feigenbaum", 24 * n)?;
    for k in 1..=24u64 {
        let two_part = 1i64 << k.trailing_zeros();
        let it = iterate_orbits_to(&f, k, n)?;
        let v = ints(&format!("O_{{T^{k}}}"), &it, |m| {
            let base = i64::from(m.is_power_of_two());
            big(two_part * base + if m == 1 { two_part - 1 } else { 0 })
        });
        if !v.passed() {
            return Ok(v);
        }
    }
    Ok(Verdict::Pass)
}

fn check_feigenbaum_square(n: usize) -> Result<Verdict> {
    let f = named("feigenbaum", 2 * n)?;
    let it = iterate_orbits_to(&f, 2, n)?;
    Ok(ints("O_{T^2}", &it, |k| {
        big(if k == 1 {
            3
        } else if k.is_power_of_two() {
            2
        } else {
            0
        })
    }))
}

fn check_feigenbaum_product(n: usize) -> Result<Verdict> {
    let f = named("feigenbaum", n)?;
    let p = product_orbits(&f, &f)?;
    Ok(ints("O_{TxT}", &p, |k| {
        big(if k.is_power_of_two() {
            3 * k as i64 - 2
        } else {
            0
        })
    }))
}

fn check_three_smooth(n: usize) -> Result<Verdict> {
    let p = product_orbits(&named("feigenbaum", n)?, &named("ternary", n)?)?;
    Ok(ints("3-smooth indicator", &p, |k| {
        big(i64::from(
            factorize(k).expect("positive").primes().all(|q| q <= 3),
        ))
    }))
}

fn check_interpolation(n: usize) -> Result<Verdict> {
    for primes in [vec![2u64], vec![3], vec![2, 3]] {
        let set = PrimeSet::finite(primes.clone())?;
        let parts = builtin(&BuiltinSpec::new("s_part_seq").with_primes("S", set), n)?;
        let lhs =
            DirichletPoly::from_sequence(&parts).mul(&euler_factors(&primes, |p| -(p as i64), n)?);
        let rhs = zeta_poly(n)?.mul(&euler_factors(&primes, |_| -1, n)?);
        let v = poly_eq("S-part series", &lhs, &rhs);
        if !v.passed() {
            return Ok(v);
        }
    }
    Ok(Verdict::Pass)
}

fn check_a_s_series(n: usize) -> Result<Verdict> {
    for primes in [vec![2u64], vec![3], vec![2, 3]] {
        let set = PrimeSet::finite(primes.clone())?;
        let a = DirichletPoly::new(crate::sequences::a_s_terms(&set, n)?)?;
        let lhs = a.mul(&euler_factors(&primes, |p| -(p as i64), n)?);
        let rhs = zeta_poly(n)?.mul(&euler_factors(&primes, |_| 1, n)?);
        let v = poly_eq("a_S series", &lhs, &rhs);
        if !v.passed() {
            return Ok(v);
        }
    }
    Ok(Verdict::Pass)
}

fn check_s_p_times_zeta(n: usize) -> Result<Verdict> {
    for set in small_prime_sets() {
        let prod = product_orbits(&s_p(&set, n)?, &named("zeta", n)?)?;
        let outside = set.complement().members_up_to(n as u64);
        let lhs =
            DirichletPoly::from_sequence(&prod).mul(&euler_factors(&outside, |p| -(p as i64), n)?);
        let rhs = zeta_poly(n)?.mul(&euler_factors(&outside, |_| 1, n)?);
        let v = poly_eq(&format!("s_P x zeta, P = {{{set}}}"), &lhs, &rhs);
        if !v.passed() {
            return Ok(v);
        }
    }
    Ok(Verdict::Pass)
}

fn check_s2_times_zeta_prefix(n: usize) -> Result<Verdict> {
    let len = n.min(9);
    let two = PrimeSet::finite([2])?;
    let p = product_orbits(&s_p(&two, len)?, &named("zeta", len)?)?;
    let expected = [1, 1, 5, 1, 7, 5, 9, 1, 17].map(big);
    Ok(compare("O_{SxT}", p.terms(), &expected[..len]))
}

fn check_ramanujan(n: usize) -> Result<Verdict> {
    for (a, b) in [(0u32, 1u32), (1, 1), (1, 2)] {
        let left = Sequence::from_fn(View::Orbit, n, |k| Pow::pow(BigInt::from(k), a))?;
        let right = Sequence::from_fn(View::Orbit, n, |k| Pow::pow(BigInt::from(k), b))?;
        let prod = DirichletPoly::from_sequence(&product_orbits(&left, &right)?);
        let lhs = prod.mul(&DirichletPoly::zeta_square_shift(a + b, n)?);
        let rhs = DirichletPoly::zeta_shift(a, n)?
            .mul(&DirichletPoly::zeta_shift(b, n)?)
            .mul(&DirichletPoly::zeta_shift(a + b + 1, n)?);
        let v = poly_eq(&format!("Ramanujan a = {a}, b = {b}"), &lhs, &rhs);
        if !v.passed() {
            return Ok(v);
        }
    }
    Ok(Verdict::Pass)
}

fn check_s_p_factorization(n: usize) -> Result<Verdict> {
    let zeta = named("zeta", n)?;
    for set in small_prime_sets() {
        let p = product_orbits(&s_p(&set, n)?, &s_p(&set.complement(), n)?)?;
        let v = seq_eq(&format!("s_P x s_P^c, P = {{{set}}}"), &p, &zeta);
        if !v.passed() {
            return Ok(v);
        }
    }
    Ok(Verdict::Pass)
}

/// Closed form for orbit counts of `T^k` when `O_T = s_P`.
pub fn s_p_iterate_closed_form(set: &PrimeSet, k: u64, n: u64) -> BigInt {
    if factorize(n)
        .expect("positive")
        .primes()
        .any(|p| set.contains(p))
    {
        return BigInt::zero();
    }
    factorize(k)
        .expect("positive")
        .factors()
        .iter()
        .filter(|&&(p, _)| !set.contains(p))
        .map(|&(p, a)| {
            let pa = p.pow(a);
            if n.is_multiple_of(p) {
                BigInt::from(pa)
            } else {
                sigma_k(pa, 1).expect("positive")
            }
        })
        .product()
}

fn check_s_p_iterates(n: usize) -> Result<Verdict> {
    for set in [&[][..], &[2], &[3], &[2, 5]] {
        let set = PrimeSet::finite(set.iter().copied())?;
        let base = s_p(&set, 24 * n)?;
        for k in 1..=24u64 {
            let it = iterate_orbits_to(&base, k, n)?;
            let v = ints(&format!("s_P iterate, P = {{{set}}}, k = {k}"), &it, |m| {
                s_p_iterate_closed_form(&set, k, m)
            });
            if !v.passed() {
                return Ok(v);
            }
        }
    }
    Ok(Verdict::Pass)
}

fn check_partitions(n: usize) -> Result<Verdict> {
    let g = euler(&named("zeta", n)?)?;
    // Partition numbers by the pentagonal number recurrence.
    let mut p = vec![BigInt::one()];
    for m in 1..=n as i64 {
        let mut acc = BigInt::zero();
        for j in 1.. {
            let pents = [j * (3 * j - 1) / 2, j * (3 * j + 1) / 2];
            if pents[0] > m {
                break;
            }
            for q in pents {
                if q <= m {
                    let term = &p[(m - q) as usize];
                    if j % 2 == 1 {
                        acc += term;
                    } else {
                        acc -= term;
                    }
                }
            }
        }
        p.push(acc);
    }
    Ok(compare("G vs partition numbers", g.terms(), &p[1..]))
}

fn check_fibonacci_monoid(n: usize) -> Result<Verdict> {
    let g = euler(&fix_to_orbit(&named("golden_mean", n)?)?)?;
    let mut fib = vec![BigInt::one(), BigInt::one()];
    while fib.len() < n + 1 {
        let next = &fib[fib.len() - 1] + &fib[fib.len() - 2];
        fib.push(next);
    }
    Ok(compare("G vs Fibonacci(n+1)", g.terms(), &fib[1..n + 1]))
}

fn check_full_shift_monoid(n: usize) -> Result<Verdict> {
    for a in [2i64, 3, 5] {
        let z = zeta_from_fix(&with_int("full_shift", "a", a, n)?)?;
        let v = ints(&format!("full shift a = {a}"), &z.monoid_counts()?, |k| {
            Pow::pow(big(a), k)
        });
        if !v.passed() {
            return Ok(v);
        }
    }
    Ok(Verdict::Pass)
}

fn check_dual_rational_monoid(n: usize) -> Result<Verdict> {
    for (a, b) in [(2i64, 3i64), (1, 2), (3, 5)] {
        let fix = builtin(
            &BuiltinSpec::new("dual_rational")
                .with_int("a", a)
                .with_int("b", b),
            n,
        )?;
        let g = zeta_from_fix(&fix)?.monoid_counts()?;
        let v = ints(&format!("dual map a = {a}, b = {b}"), &g, |k| {
            Pow::pow(big(b), k) - big(a) * Pow::pow(big(b), k - 1)
        });
        if !v.passed() {
            return Ok(v);
        }
    }
    Ok(Verdict::Pass)
}

fn three_routes(o: &Sequence) -> Result<Verdict> {
    let by_recurrence = euler(o)?;
    let by_product = product_formula(o)?.monoid_counts()?;
    let by_exp = zeta_from_fix(&orbit_to_fix(o)?)?.monoid_counts()?;
    seq_eq("recurrence vs product", &by_recurrence, &by_product)
        .and(|| Ok(seq_eq("recurrence vs exp", &by_recurrence, &by_exp)))
}

fn check_three_routes(n: usize) -> Result<Verdict> {
    let len = n.min(60);
    let mut builtins = vec![
        named("zeta", len)?,
        named("delta", len)?,
        named("id_orbits", len)?,
        named("feigenbaum", len)?,
        named("ternary", len)?,
        with_int("geometric", "p", 2, len)?,
        s_p(&PrimeSet::finite([2, 3])?, len)?,
    ];
    for fix in [
        named("golden_mean", len)?,
        with_int("full_shift", "a", 3, len)?,
        named("localized_23", len)?,
        named("s_integer_23", len)?,
    ] {
        builtins.push(fix_to_orbit(&fix)?);
    }
    for o in &builtins {
        let v = three_routes(o)?;
        if !v.passed() {
            return Ok(v);
        }
    }
    let mut rng = StdRng::seed_from_u64(0x006f_7262_6974);
    for _ in 0..100 {
        let v = three_routes(&random_orbits(&mut rng, 4, 40))?;
        if !v.passed() {
            return Ok(v);
        }
    }
    Ok(Verdict::Pass)
}

/// Every orbit sequence of length `len` with terms in `0..=max`.
pub fn orbit_grid(max: u32, len: usize) -> Vec<Sequence> {
    let base = max as usize + 1;
    let total = base.pow(len as u32);
    (0..total)
        .map(|mut code| {
            let terms: Vec<i64> = (0..len)
                .map(|_| {
                    let t = (code % base) as i64;
                    code /= base;
                    t
                })
                .collect();
            Sequence::from_i64s(View::Orbit, &terms).expect("nonnegative")
        })
        .collect()
}

fn check_oracle_product(_: usize) -> Result<Verdict> {
    let grid = orbit_grid(1, 6);
    for u in &grid {
        for v in grid.iter().step_by(3) {
            let v = seq_eq(
                "product formula vs simulation",
                &product_orbits(u, v)?,
                &simulate_product(&build(u)?, &build(v)?, 6)?,
            );
            if !v.passed() {
                return Ok(v);
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..100 {
        let u = random_orbits(&mut rng, 3, 12);
        let v = random_orbits(&mut rng, 3, 12);
        let len = u.len().min(v.len());
        let verdict = seq_eq(
            "product formula vs simulation",
            &product_orbits(&u, &v)?,
            &simulate_product(&build(&u)?, &build(&v)?, len)?,
        );
        if !verdict.passed() {
            return Ok(verdict);
        }
    }
    Ok(Verdict::Pass)
}

fn check_oracle_iterate(_: usize) -> Result<Verdict> {
    for o in orbit_grid(3, 6) {
        for k in 1..=6u64 {
            let m = 6 / k as usize;
            let v = seq_eq(
                &format!("iterate formula vs simulation, k = {k}"),
                &iterate_orbits_to(&o, k, m)?,
                &simulate_iterate(&build(&o)?, k, m)?,
            );
            if !v.passed() {
                return Ok(v);
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..100 {
        let o = random_orbits(&mut rng, 3, 12);
        let k = rng.gen_range(1..=6u64);
        let m = o.len() / k as usize;
        if m == 0 {
            continue;
        }
        let v = seq_eq(
            "iterate formula vs simulation",
            &iterate_orbits_to(&o, k, m)?,
            &simulate_iterate(&build(&o)?, k, m)?,
        );
        if !v.passed() {
            return Ok(v);
        }
    }
    Ok(Verdict::Pass)
}

fn check_oracle_fixed(n: usize) -> Result<Verdict> {
    let mut rng = StdRng::seed_from_u64(3);
    for _ in 0..50 {
        let o = random_orbits(&mut rng, 5, n.min(30));
        let sys = build(&o)?;
        let counted = (1..=o.len() as u64)
            .map(|k| count_fixed(&sys, k))
            .collect::<Result<Vec<_>>>()?;
        let v = compare(
            "count_fixed vs divisor sum",
            &counted,
            orbit_to_fix(&o)?.terms(),
        );
        if !v.passed() {
            return Ok(v);
        }
    }
    Ok(Verdict::Pass)
}

fn check_cyclic_subgroups(n: usize) -> Result<Verdict> {
    let z = named("zeta", n)?;
    let counted = (1..=n as u64)
        .map(cyclic_subgroup_count)
        .collect::<Result<Vec<_>>>()?;
    Ok(compare(
        "cyclic subgroups vs O_{TxT}",
        &counted,
        product_orbits(&z, &z)?.terms(),
    ))
}

fn check_primitive_lattices(n: usize) -> Result<Verdict> {
    let z = named("zeta", n)?;
    let summed = (1..=n as u64)
        .map(|k| {
            divisors(k)?
                .into_iter()
                .map(primitive_lattice_count)
                .sum::<Result<BigInt>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(compare(
        "sum of primitive lattices vs O_{TxT}",
        &summed,
        product_orbits(&z, &z)?.terms(),
    ))
}

fn check_localized(n: usize) -> Result<Verdict> {
    let len = 2 * n + 1;
    let o = fix_to_orbit(&named("localized_23", len)?)?;
    let v = ints("orbits of the 3-adic example", &o, |k| {
        let odd_part = k / 2;
        let is_two_three_power = k % 2 == 0 && {
            let mut m = odd_part;
            while m % 3 == 0 {
                m /= 3;
            }
            m == 1
        };
        big(i64::from(k == 1 || is_two_three_power))
    });
    if !v.passed() {
        return Ok(v);
    }
    let g = euler(&o)?;
    for k in 1..=n as u64 {
        if g.at(2 * k) != g.at(2 * k + 1) {
            return Ok(fail(2 * k, format!("G(2n) != G(2n+1) at n = {k}")));
        }
    }
    Ok(Verdict::Pass)
}

fn check_s_integer_monoid(n: usize) -> Result<Verdict> {
    let len = n.min(8);
    let g = euler(&fix_to_orbit(&named("s_integer_23", len)?)?)?;
    let expected = [1, 1, 3, 4, 10, 13, 33, 56].map(big);
    Ok(compare("G prefix", g.terms(), &expected[..len]))
}

fn check_fix_orbit_round_trip(n: usize) -> Result<Verdict> {
    let mut rng = StdRng::seed_from_u64(13);
    for _ in 0..200 {
        let o = random_orbits(&mut rng, 1000, n.min(200));
        let back = fix_to_orbit(&orbit_to_fix(&o)?)?;
        let v = seq_eq("fix_to_orbit(orbit_to_fix(o))", &back, &o);
        if !v.passed() {
            return Ok(v);
        }
    }
    Ok(Verdict::Pass)
}

fn check_euler_round_trip(n: usize) -> Result<Verdict> {
    let mut rng = StdRng::seed_from_u64(17);
    for _ in 0..200 {
        let o = random_orbits(&mut rng, 5, n.min(60));
        let back = euler_inverse(&euler(&o)?)?;
        let v = seq_eq("euler_inverse(euler(o))", &back, &o);
        if !v.passed() {
            return Ok(v);
        }
    }
    Ok(Verdict::Pass)
}

fn check_multiplicative_equivalence(n: usize) -> Result<Verdict> {
    let mut orbit_views = vec![
        named("zeta", n)?,
        named("delta", n)?,
        named("id_orbits", n)?,
        named("feigenbaum", n)?,
        named("ternary", n)?,
        with_int("geometric", "p", 2, n)?,
    ];
    for set in small_prime_sets() {
        orbit_views.push(s_p(&set, n)?);
        orbit_views.push(s_p(&set.complement(), n)?);
    }
    for fix in [
        named("golden_mean", n)?,
        with_int("full_shift", "a", 2, n)?,
        named("localized_23", n)?,
        named("s_integer_23", n)?,
    ] {
        orbit_views.push(fix_to_orbit(&fix)?);
    }
    for (i, o) in orbit_views.iter().enumerate() {
        let from_orbits = is_multiplicative(o).holds();
        let from_fix = is_multiplicative(&orbit_to_fix(o)?).holds();
        if from_orbits != from_fix {
            return Ok(fail(i as u64 + 1, "O and F disagree on multiplicativity"));
        }
    }
    Ok(Verdict::Pass)
}

fn check_product_consistency(n: usize) -> Result<Verdict> {
    let mut rng = StdRng::seed_from_u64(19);
    for _ in 0..50 {
        let u = random_orbits(&mut rng, 6, n.min(60));
        let v = random_orbits(&mut rng, 6, n.min(60));
        let verdict = seq_eq(
            "F of product vs product of F",
            &orbit_to_fix(&product_orbits(&u, &v)?)?,
            &product_fix(&orbit_to_fix(&u)?, &orbit_to_fix(&v)?)?,
        );
        if !verdict.passed() {
            return Ok(verdict);
        }
    }
    Ok(Verdict::Pass)
}

fn check_iterate_consistency(n: usize) -> Result<Verdict> {
    let mut rng = StdRng::seed_from_u64(23);
    for _ in 0..50 {
        let k = rng.gen_range(1..=6u64);
        let m = rng.gen_range(1..=n.min(30));
        let terms: Vec<i64> = (0..k as usize * m).map(|_| rng.gen_range(0..=5)).collect();
        let o = Sequence::from_i64s(View::Orbit, &terms)?;
        let verdict = seq_eq(
            "iterate formula vs fix route",
            &iterate_orbits_to(&o, k, m)?,
            &fix_to_orbit(&iterate_fix_to(&orbit_to_fix(&o)?, k, m)?)?,
        );
        if !verdict.passed() {
            return Ok(verdict);
        }
    }
    Ok(Verdict::Pass)
}

fn check_zeta_factorizations(_: usize) -> Result<Verdict> {
    let len = 10;
    let found = factor_search(&named("zeta", len)?, len, DEFAULT_LIMIT)?;
    if found.pairs.len() != 16 || found.overflow {
        return Ok(fail(
            len as u64,
            format!("{} pairs found", found.pairs.len()),
        ));
    }
    for pair in &found.pairs {
        let set = PrimeSet::finite(
            primes_up_to(len as u64)
                .into_iter()
                .filter(|&p| pair.left.at(p).is_zero()),
        )?;
        if pair.left != s_p(&set, len)? || pair.right != s_p(&set.complement(), len)? {
            return Ok(fail(len as u64, "factor pair not of the form (s_P, s_P^c)"));
        }
    }
    Ok(Verdict::Pass)
}

fn check_prime_orbit_growth(_: usize) -> Result<Verdict> {
    let h = std::f64::consts::LN_2;
    let orbits = fix_to_orbit(&with_int("full_shift", "a", 2, 40)?)?;
    for n in 2..=40u64 {
        let ratio = (orbits.at(n) * n)
            .to_string()
            .parse::<f64>()
            .unwrap_or(f64::NAN)
            / 2f64.powi(n as i32);
        if (ratio - 1.0).abs() > 2.0 * n as f64 * 2f64.powf(-(n as f64) / 2.0) {
            return Ok(fail(n, format!("n O(n) / 2^n = {ratio}")));
        }
    }
    for horizon in [20usize, 25, 30] {
        let pi = pi_count(&orbits, horizon)?
            .to_string()
            .parse::<f64>()
            .unwrap_or(f64::NAN);
        let ratio = pi / predicted_pi(h, 1.0, horizon);
        if (ratio - 1.0).abs() > 5.0 / horizon as f64 {
            return Ok(fail(horizon as u64, format!("pi ratio {ratio}")));
        }
    }
    let drift = (mertens_sum(&orbits, 30, h)? - harmonic(30))
        - (mertens_sum(&orbits, 20, h)? - harmonic(20));
    if drift.abs() >= 1e-3 {
        return Ok(fail(30, format!("Mertens drift {drift}")));
    }
    Ok(Verdict::Pass)
}

fn check_mobius_sums(n: usize) -> Result<Verdict> {
    for k in 1..=n as u64 {
        let s: i64 = divisors(k)?
            .into_iter()
            .map(|d| mobius(d).map(i64::from))
            .sum::<Result<i64>>()?;
        if s != i64::from(k == 1) {
            return Ok(fail(k, format!("sum of mu over divisors is {s}")));
        }
    }
    Ok(Verdict::Pass)
}

/// Every identity `verify` knows about.
pub const IDENTITIES: &[Identity] = &[
    Identity {
        name: "ttimest-series",
        summary: "O_{TxT} for one orbit of each length has series zeta(s)^2 zeta(s-1) / zeta(2s)",
        run: check_product_series,
    },
    Identity {
        name: "ttimest-divisor-sum",
        summary: "O_{TxT}(n) = sum_{d|n} sigma(d) mu(n/d)^2",
        run: check_product_divisor_sum,
    },
    Identity {
        name: "fix-series",
        summary: "d_T(s) zeta(s+1) = sum F(n) / n^{s+1}",
        run: check_fix_series,
    },
    Identity {
        name: "iterate-id-square",
        summary: "O_T(n) = n: d_{T^2} = (5 - 2/2^s) zeta(s-1)",
        run: check_iterate_id_square,
    },
    Identity {
        name: "iterate-id-prime",
        summary: "O_T(n) = n: O_{T^p}(n) = (p^2 + 1) n or p^2 n",
        run: check_iterate_id_prime,
    },
    Identity {
        name: "iterate-id-fourth",
        summary: "O_T(n) = n: O_{T^4}(n) = 16n (n even), 21n (n odd)",
        run: check_iterate_id_fourth,
    },
    Identity {
        name: "feigenbaum-fix",
        summary: "period-doubling orbits: F(n) = 2 part_2(n) - 1",
        run: check_feigenbaum_fix,
    },
    Identity {
        name: "feigenbaum-square",
        summary: "period-doubling orbits: O_{T^2} = 3, 2, 0",
        run: check_feigenbaum_square,
    },
    Identity {
        name: "feigenbaum-iterates",
        summary: "period-doubling orbits: d_{T^k} = part_2(k) - 1 + part_2(k) d_T, k <= 24",
        run: check_feigenbaum_iterates,
    },
    Identity {
        name: "feigenbaum-product",
        summary: "period-doubling orbits: O_{TxT}(2^j) = 3 2^j - 2",
        run: check_feigenbaum_product,
    },
    Identity {
        name: "three-smooth",
        summary: "powers of 2 times powers of 3 gives the 3-smooth indicator",
        run: check_three_smooth,
    },
    Identity {
        name: "s-part-series",
        summary: "sum part_S(n)/n^s = zeta(s) prod (p^s - 1)/(p^s - p)",
        run: check_interpolation,
    },
    Identity {
        name: "a-s-series",
        summary: "sum a_{S,n}/n^s = zeta(s) prod (p^s + 1)/(p^s - p)",
        run: check_a_s_series,
    },
    Identity {
        name: "s-p-times-zeta",
        summary: "d_{s_P x zeta} = zeta prod_{p not in P} (1 + p^-s)/(1 - p^{1-s})",
        run: check_s_p_times_zeta,
    },
    Identity {
        name: "s2-times-zeta-prefix",
        summary: "s_{2} x zeta begins 1, 1, 5, 1, 7, 5, 9, 1, 17",
        run: check_s2_times_zeta_prefix,
    },
    Identity {
        name: "ramanujan",
        summary: "n^a x n^b has series zeta(s-a) zeta(s-b) zeta(s-a-b-1) / zeta(2s-a-b)",
        run: check_ramanujan,
    },
    Identity {
        name: "s-p-factorization",
        summary: "s_P x s_{P^c} = zeta",
        run: check_s_p_factorization,
    },
    Identity {
        name: "s-p-iterates",
        summary: "closed form for iterates of s_P, k <= 24",
        run: check_s_p_iterates,
    },
    Identity {
        name: "partitions",
        summary: "Euler transform of zeta is the partition function",
        run: check_partitions,
    },
    Identity {
        name: "fibonacci-monoid",
        summary: "golden mean shift: G(n) = Fibonacci(n+1)",
        run: check_fibonacci_monoid,
    },
    Identity {
        name: "full-shift-monoid",
        summary: "full shift on a symbols: G(n) = a^n",
        run: check_full_shift_monoid,
    },
    Identity {
        name: "dual-rational-monoid",
        summary: "dual of r -> (a/b) r: G(n) = b^n - a b^{n-1}",
        run: check_dual_rational_monoid,
    },
    Identity {
        name: "three-routes",
        summary: "Euler recurrence, product formula and exp route agree",
        run: check_three_routes,
    },
    Identity {
        name: "oracle-product",
        summary: "product formula matches cycle tracing",
        run: check_oracle_product,
    },
    Identity {
        name: "oracle-iterate",
        summary: "iterate formula matches cycle tracing",
        run: check_oracle_iterate,
    },
    Identity {
        name: "oracle-fixed",
        summary: "counting fixed points on cycles matches F",
        run: check_oracle_fixed,
    },
    Identity {
        name: "cyclic-subgroups",
        summary: "cyclic subgroups of C_n x C_n = O_{TxT}(n)",
        run: check_cyclic_subgroups,
    },
    Identity {
        name: "primitive-lattices",
        summary: "sum_{d|n} primitive lattices of index d = O_{TxT}(n)",
        run: check_primitive_lattices,
    },
    Identity {
        name: "localized-orbits",
        summary: "3-adic example: orbits at 1 and 2 3^k, G(2n) = G(2n+1)",
        run: check_localized,
    },
    Identity {
        name: "s-integer-monoid",
        summary: "S-integer example: G begins 1, 1, 3, 4, 10, 13, 33, 56",
        run: check_s_integer_monoid,
    },
    Identity {
        name: "fix-orbit-round-trip",
        summary: "fix_to_orbit inverts orbit_to_fix",
        run: check_fix_orbit_round_trip,
    },
    Identity {
        name: "euler-round-trip",
        summary: "euler_inverse inverts euler",
        run: check_euler_round_trip,
    },
    Identity {
        name: "multiplicative-equivalence",
        summary: "F multiplicative iff O multiplicative",
        run: check_multiplicative_equivalence,
    },
    Identity {
        name: "product-consistency",
        summary: "F of a product is the pointwise product of F",
        run: check_product_consistency,
    },
    Identity {
        name: "iterate-consistency",
        summary: "iterate formula agrees with F_{T^k}(n) = F_T(kn)",
        run: check_iterate_consistency,
    },
    Identity {
        name: "zeta-factorizations",
        summary: "zeta factors exactly 16 ways to length 10, all (s_P, s_P^c)",
        run: check_zeta_factorizations,
    },
    Identity {
        name: "prime-orbit-growth",
        summary: "2-shift: n O(n) ~ 2^n, pi ratio, Mertens drift (floating point)",
        run: check_prime_orbit_growth,
    },
    Identity {
        name: "mobius-sums",
        summary: "sum_{d|n} mu(d) = [n = 1]",
        run: check_mobius_sums,
    },
];

pub fn find(name: &str) -> Option<&'static Identity> {
    IDENTITIES.iter().find(|i| i.name == name)
}
