//! Integer arithmetic services: factorization with an effort budget,
//! squarefreeness, radicals, and modular exponentiation.
//!
//! Factoring is trial division up to a bound followed by Brent's variant of
//! Pollard's rho with fixed, deterministic parameters, so results are
//! reproducible for a given budget. Primality testing uses the deterministic
//! Miller–Rabin base set valid below 3.3·10²⁴, which covers every value this
//! crate is expected to meet.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Effort limits for [`factor`] and everything built on it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FactorBudget {
    /// Primes up to this bound are removed by trial division.
    pub trial_bound: u64,
    /// Iteration cap for each Brent-rho attempt on a remaining composite.
    pub rho_iterations: u64,
}

impl Default for FactorBudget {
    fn default() -> Self {
        FactorBudget {
            trial_bound: 100_000,
            rho_iterations: 1 << 20,
        }
    }
}

/// Shared lookup table for complete factorizations, keyed by absolute value.
///
/// Implementations must be safe for concurrent use. Only complete
/// factorizations (cofactor 1) are ever stored, so a hit can be trusted
/// regardless of the budget it was computed under.
pub trait FactorCache: Send + Sync {
    fn lookup(&self, n: &BigUint) -> Option<FactoredInt>;
    fn store(&self, n: &BigUint, factored: &FactoredInt);
}

/// Budget plus optional cache, passed to every factoring entry point.
#[derive(Clone, Copy, Default)]
pub struct FactorSettings<'a> {
    pub budget: FactorBudget,
    pub cache: Option<&'a dyn FactorCache>,
}

impl fmt::Debug for FactorSettings<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FactorSettings")
            .field("budget", &self.budget)
            .field("cache", &self.cache.is_some())
            .finish()
    }
}

impl<'a> FactorSettings<'a> {
    pub fn with_budget(budget: FactorBudget) -> Self {
        FactorSettings {
            budget,
            cache: None,
        }
    }
}

/// A (possibly partial) factorization `sign · cofactor · ∏ p^e = value`.
///
/// Every key in `factors` passes the primality test; the cofactor is 1 when
/// the factorization is complete and otherwise a composite with no prime
/// factor below the trial-division bound that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredInt {
    sign: i8,
    factors: BTreeMap<BigUint, u32>,
    cofactor: BigUint,
    value: BigInt,
}

impl FactoredInt {
    fn assemble(sign: i8, factors: BTreeMap<BigUint, u32>, cofactor: BigUint) -> Self {
        let mut magnitude = cofactor.clone();
        for (p, e) in &factors {
            magnitude *= p.pow(*e);
        }
        let mut value = BigInt::from(magnitude);
        if sign < 0 {
            value = -value;
        }
        FactoredInt {
            sign,
            factors,
            cofactor,
            value,
        }
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    /// Prime-to-exponent map of the factored part.
    pub fn factors(&self) -> &BTreeMap<BigUint, u32> {
        &self.factors
    }

    /// Remaining unfactored part; 1 when the factorization is complete.
    pub fn cofactor(&self) -> &BigUint {
        &self.cofactor
    }

    /// The integer this factorization represents.
    pub fn value(&self) -> &BigInt {
        &self.value
    }

    pub fn is_complete(&self) -> bool {
        self.cofactor.is_one()
    }

    /// First prime known to divide the value with exponent at least 2.
    pub fn square_prime(&self) -> Option<&BigUint> {
        self.factors.iter().find(|(_, e)| **e >= 2).map(|(p, _)| p)
    }

    /// Distinct known primes, ascending.
    pub fn primes(&self) -> impl Iterator<Item = &BigUint> {
        self.factors.keys()
    }

    /// Re-multiplies the parts; used by tests to check the invariant.
    pub fn reassemble(&self) -> BigInt {
        let mut magnitude = self.cofactor.clone();
        for (p, e) in &self.factors {
            magnitude *= p.pow(*e);
        }
        let mut v = BigInt::from(magnitude);
        if self.sign < 0 {
            v = -v;
        }
        v
    }
}

impl fmt::Display for FactoredInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign < 0 {
            write!(f, "-")?;
        }
        if self.factors.is_empty() && self.cofactor.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (p, e) in &self.factors {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if *e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        if !self.cofactor.is_one() {
            if !first {
                write!(f, "*")?;
            }
            write!(f, "C{}", self.cofactor)?;
        }
        Ok(())
    }
}

/// Tri-state answer of [`is_squarefree`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SquarefreeStatus {
    Squarefree,
    /// A square divides the value. The witness prime is exhibited whenever
    /// the offending factor could be pinned down; a perfect-power cofactor
    /// whose base resists factoring yields `witness: None`.
    NotSquarefree { witness: Option<BigUint> },
    /// A composite cofactor remains that is neither prime nor a perfect
    /// power, so squarefreeness cannot be decided within the budget.
    Unknown { cofactor: BigUint },
}

/// Deterministic Miller–Rabin. The base set decides primality correctly for
/// all n < 3.3·10²⁴; beyond that it is a strong probable-prime test.
pub fn is_prime(n: &BigUint) -> bool {
    if n < &BigUint::from(2u32) {
        return false;
    }
    for small in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let sp = BigUint::from(small);
        if *n == sp {
            return true;
        }
        if (n % &sp).is_zero() {
            return false;
        }
    }
    let one = BigUint::one();
    let two = BigUint::from(2u32);
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'bases: for a in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let a = BigUint::from(a);
        let mut x = a.modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Ascending primes up to and including `bound`, by sieve of Eratosthenes.
pub fn primes_up_to(bound: u64) -> Vec<u64> {
    if bound < 2 {
        return Vec::new();
    }
    let n = bound as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2usize;
    while i * i <= n {
        if sieve[i] {
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    (2..=n).filter(|&i| sieve[i]).map(|i| i as u64).collect()
}

/// Writes `n = b^e` with the largest possible exponent `e ≥ 2`, if any.
pub fn perfect_power(n: &BigUint) -> Option<(BigUint, u32)> {
    if n < &BigUint::from(4u32) {
        return None;
    }
    let bits = n.bits() as u32;
    // Testing prime exponents suffices: composite exponents decompose.
    for e in primes_up_to(bits as u64) {
        let e = e as u32;
        let root = n.nth_root(e);
        if root.pow(e) == *n {
            // Recurse on the base to maximize the exponent.
            return match perfect_power(&root) {
                Some((b, e2)) => Some((b, e * e2)),
                None => Some((root, e)),
            };
        }
    }
    None
}

/// `base^exp mod modulus`, reduced into `[0, modulus)`. Requires modulus ≥ 2.
pub fn modpow(base: &BigInt, exp: &BigUint, modulus: &BigUint) -> Result<BigUint> {
    if modulus < &BigUint::from(2u32) {
        return Err(Error::ModulusTooSmall);
    }
    let m = BigInt::from(modulus.clone());
    let r = base.modpow(&BigInt::from(exp.clone()), &m);
    // BigInt::modpow floors, so the result is already non-negative.
    Ok(r.to_biguint().expect("modpow result is non-negative"))
}

/// Brent's cycle-finding variant of Pollard's rho with fixed seeds.
///
/// `n` must be odd, composite, and free of factors below the trial bound.
/// Returns a nontrivial divisor, or `None` if every attempt exhausts its
/// iteration cap.
fn brent_rho(n: &BigUint, iteration_cap: u64) -> Option<BigUint> {
    // Fixed sequence of polynomial offsets keeps the search deterministic.
    for c in 1u32..=8 {
        let c = BigUint::from(c);
        let mut y = BigUint::from(2u32);
        let mut r: u64 = 1;
        let mut q = BigUint::one();
        let mut g = BigUint::one();
        let mut x = y.clone();
        let mut ys = y.clone();
        let mut used: u64 = 0;
        'outer: while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = (&y * &y + &c) % n;
            }
            let mut k: u64 = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                let batch = 128.min(r - k);
                for _ in 0..batch {
                    y = (&y * &y + &c) % n;
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = (&q * &diff) % n;
                }
                g = q.gcd(n);
                k += batch;
                used += batch;
                if used >= iteration_cap {
                    break 'outer;
                }
            }
            r *= 2;
        }
        if g == *n {
            // Batched gcd overshot; retry one step at a time from the mark.
            loop {
                ys = (&ys * &ys + &c) % n;
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if !g.is_one() && g != *n {
            return Some(g);
        }
    }
    None
}

/// Factors `n ≠ 0` as far as the budget allows.
///
/// Deterministic for a fixed budget. The result satisfies the
/// [`FactoredInt`] invariants; a nontrivial cofactor signals exhausted
/// effort, never an error.
pub fn factor(n: &BigInt, settings: &FactorSettings) -> Result<FactoredInt> {
    if n.is_zero() {
        return Err(Error::ZeroInput);
    }
    let sign: i8 = if n.is_negative() { -1 } else { 1 };
    let magnitude = n.magnitude().clone();

    if let Some(cache) = settings.cache {
        if let Some(hit) = cache.lookup(&magnitude) {
            debug_assert!(hit.is_complete());
            return Ok(FactoredInt::assemble(
                sign,
                hit.factors.clone(),
                BigUint::one(),
            ));
        }
    }

    let mut factors: BTreeMap<BigUint, u32> = BTreeMap::new();
    let mut rest = magnitude.clone();
    let one = BigUint::one();

    if !rest.is_one() {
        for p in trial_primes(settings.budget.trial_bound) {
            let pb = BigUint::from(p);
            if &pb * &pb > rest {
                break;
            }
            while (&rest % &pb).is_zero() {
                rest /= &pb;
                *factors.entry(pb.clone()).or_insert(0) += 1;
            }
            if rest.is_one() {
                break;
            }
        }
        if !rest.is_one() && is_prime(&rest) {
            *factors.entry(rest.clone()).or_insert(0) += 1;
            rest = one.clone();
        }
    }

    // Work queue of (composite, multiplicity) pieces still to split.
    let mut cofactor = BigUint::one();
    let mut queue: Vec<(BigUint, u32)> = Vec::new();
    if !rest.is_one() {
        queue.push((rest, 1));
    }
    while let Some((m, mult)) = queue.pop() {
        if is_prime(&m) {
            *factors.entry(m).or_insert(0) += mult;
            continue;
        }
        if let Some((base, e)) = perfect_power(&m) {
            queue.push((base, mult * e));
            continue;
        }
        match brent_rho(&m, settings.budget.rho_iterations) {
            Some(d) => {
                let q = &m / &d;
                queue.push((d, mult));
                queue.push((q, mult));
            }
            None => {
                cofactor *= m.pow(mult);
            }
        }
    }

    // Known primes may still divide the cofactor; peeling them off is cheap
    // and tightens squarefreeness answers.
    if !cofactor.is_one() {
        let known: Vec<BigUint> = factors.keys().cloned().collect();
        for p in known {
            while (&cofactor % &p).is_zero() {
                cofactor /= &p;
                *factors.entry(p.clone()).or_insert(0) += 1;
            }
        }
        if !cofactor.is_one() && is_prime(&cofactor) {
            *factors.entry(cofactor.clone()).or_insert(0) += 1;
            cofactor = BigUint::one();
        }
    }

    let result = FactoredInt::assemble(sign, factors, cofactor);
    debug_assert_eq!(result.reassemble(), *n);
    if result.is_complete() {
        if let Some(cache) = settings.cache {
            cache.store(&magnitude, &result);
        }
    }
    Ok(result)
}

/// Iterator over 2, 3, 5 and the 6k±1 pattern up to `bound`.
fn trial_primes(bound: u64) -> impl Iterator<Item = u64> {
    let small = [2u64, 3, 5].into_iter().filter(move |&p| p <= bound);
    let wheel = (1u64..)
        .flat_map(|k| [6 * k + 1, 6 * k + 5])
        .take_while(move |&c| c <= bound);
    small.chain(wheel)
}

/// Decides whether `n ≠ 0` is squarefree, within the budget.
///
/// Units ±1 count as squarefree. A "no" exhibits a witness prime whenever
/// one can be pinned down; "unknown" arises only from a composite cofactor
/// that is neither prime nor a perfect power.
pub fn is_squarefree(n: &BigInt, settings: &FactorSettings) -> Result<SquarefreeStatus> {
    if n.is_zero() {
        return Err(Error::ZeroInput);
    }
    if n.magnitude().is_one() {
        return Ok(SquarefreeStatus::Squarefree);
    }
    let factored = factor(n, settings)?;
    if let Some(p) = factored.square_prime() {
        return Ok(SquarefreeStatus::NotSquarefree {
            witness: Some(p.clone()),
        });
    }
    if factored.is_complete() {
        return Ok(SquarefreeStatus::Squarefree);
    }
    let cofactor = factored.cofactor().clone();
    // The cofactor is composite. A perfect power certifies a square divisor
    // even if its base cannot be split further.
    if let Some((base, _)) = perfect_power(&cofactor) {
        let witness = match factor(&BigInt::from(base.clone()), settings) {
            Ok(fb) if fb.is_complete() => fb.factors().keys().next().cloned(),
            _ => {
                if is_prime(&base) {
                    Some(base)
                } else {
                    None
                }
            }
        };
        return Ok(SquarefreeStatus::NotSquarefree { witness });
    }
    Ok(SquarefreeStatus::Unknown { cofactor })
}

/// Largest squarefree divisor of `n ≠ 0` (always positive), or `None` when
/// the factorization is incomplete.
pub fn radical(n: &BigInt, settings: &FactorSettings) -> Result<Option<BigInt>> {
    if n.is_zero() {
        return Err(Error::ZeroInput);
    }
    let factored = factor(n, settings)?;
    if !factored.is_complete() {
        return Ok(None);
    }
    let mut rad = BigUint::one();
    for p in factored.primes() {
        rad *= p;
    }
    Ok(Some(BigInt::from(rad)))
}
