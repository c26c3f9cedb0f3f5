//! Polynomial arithmetic and factorization modulo a prime, plus the
//! Frobenius defect `(f(x^p) - f(x)^p)/p`.
//!
//! [`ModPoly`] carries its own modulus, which is a prime `p` for the
//! factorization routines and `p²` for the intermediate defect arithmetic.
//! Factorization is the classical chain: squarefree decomposition (with
//! p-th-root extraction when the derivative vanishes), distinct-degree
//! splitting, then equal-degree splitting with a deterministically seeded
//! random search, so the factor list is reproducible across runs. Factors
//! are reported monic, in a fixed order (degree, then coefficient tuple).

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::intfactor::is_prime;
use crate::zpoly::IntPoly;
use crate::{Error, Result};

/// Polynomial with coefficients reduced into `[0, modulus)`.
///
/// The coefficient list is canonically trimmed, so the leading coefficient
/// of a nonzero value is never zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModPoly {
    modulus: BigUint,
    coeffs: Vec<BigUint>,
}

impl ModPoly {
    /// Reduces an integer polynomial modulo `m ≥ 2`.
    pub fn reduce(f: &IntPoly, m: &BigUint) -> Result<ModPoly> {
        if m < &BigUint::from(2u32) {
            return Err(Error::ModulusTooSmall);
        }
        let m_int = BigInt::from(m.clone());
        let coeffs = f
            .coeffs()
            .iter()
            .map(|c| {
                c.mod_floor(&m_int)
                    .to_biguint()
                    .expect("mod_floor is non-negative")
            })
            .collect();
        Ok(ModPoly::from_coeffs(m.clone(), coeffs))
    }

    /// Builds from residues, reducing and trimming as needed.
    pub fn from_coeffs(modulus: BigUint, coeffs: Vec<BigUint>) -> ModPoly {
        let coeffs = coeffs.into_iter().map(|c| c % &modulus).collect();
        let mut p = ModPoly { modulus, coeffs };
        p.trim();
        p
    }

    pub fn zero(modulus: BigUint) -> ModPoly {
        ModPoly {
            modulus,
            coeffs: Vec::new(),
        }
    }

    pub fn one(modulus: BigUint) -> ModPoly {
        ModPoly::from_coeffs(modulus, vec![BigUint::one()])
    }

    pub fn x(modulus: BigUint) -> ModPoly {
        ModPoly::from_coeffs(modulus, vec![BigUint::zero(), BigUint::one()])
    }

    pub fn constant(modulus: BigUint, c: BigUint) -> ModPoly {
        ModPoly::from_coeffs(modulus, vec![c])
    }

    fn trim(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn modulus(&self) -> &BigUint {
        &self.modulus
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigUint {
        self.coeffs.get(i).cloned().unwrap_or_else(BigUint::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&BigUint> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        matches!(self.leading_coeff(), Some(c) if c.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.degree() == Some(0) && self.coeffs[0].is_one()
    }

    /// Lifts to the integer polynomial with coefficients in `[0, modulus)`.
    pub fn lift(&self) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.iter().map(|c| BigInt::from(c.clone())).collect())
    }

    fn assert_same_modulus(&self, other: &ModPoly) {
        assert_eq!(
            self.modulus, other.modulus,
            "mixed moduli in ModPoly arithmetic"
        );
    }

    pub fn add(&self, other: &ModPoly) -> ModPoly {
        self.assert_same_modulus(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let mut c = self.coeff(i) + other.coeff(i);
            if c >= self.modulus {
                c -= &self.modulus;
            }
            coeffs.push(c);
        }
        let mut p = ModPoly {
            modulus: self.modulus.clone(),
            coeffs,
        };
        p.trim();
        p
    }

    pub fn sub(&self, other: &ModPoly) -> ModPoly {
        self.assert_same_modulus(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeff(i);
            let b = other.coeff(i);
            let c = if a >= b { a - b } else { a + &self.modulus - b };
            coeffs.push(c);
        }
        let mut p = ModPoly {
            modulus: self.modulus.clone(),
            coeffs,
        };
        p.trim();
        p
    }

    pub fn mul(&self, other: &ModPoly) -> ModPoly {
        self.assert_same_modulus(other);
        if self.is_zero() || other.is_zero() {
            return ModPoly::zero(self.modulus.clone());
        }
        let mut coeffs = vec![BigUint::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        ModPoly::from_coeffs(self.modulus.clone(), coeffs)
    }

    pub fn mul_scalar(&self, c: &BigUint) -> ModPoly {
        let c = c % &self.modulus;
        ModPoly::from_coeffs(
            self.modulus.clone(),
            self.coeffs.iter().map(|a| a * &c).collect(),
        )
    }

    /// Division with remainder by a monic divisor; valid for any modulus.
    pub fn divrem_monic(&self, g: &ModPoly) -> Result<(ModPoly, ModPoly)> {
        self.assert_same_modulus(g);
        let dg = match g.degree() {
            Some(d) if d >= 1 && g.is_monic() => d,
            _ => return Err(Error::NonMonicDivisor),
        };
        let df = match self.degree() {
            None => {
                return Ok((
                    ModPoly::zero(self.modulus.clone()),
                    ModPoly::zero(self.modulus.clone()),
                ))
            }
            Some(d) if d < dg => return Ok((ModPoly::zero(self.modulus.clone()), self.clone())),
            Some(d) => d,
        };
        let m = &self.modulus;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigUint::zero(); df - dg + 1];
        for i in (dg..=df).rev() {
            let c = std::mem::replace(&mut rem[i], BigUint::zero());
            if c.is_zero() {
                continue;
            }
            for (j, gj) in g.coeffs.iter().enumerate().take(dg) {
                let sub = gj * &c % m;
                let cur = &rem[i - dg + j];
                rem[i - dg + j] = if *cur >= sub {
                    cur - &sub
                } else {
                    cur + m - &sub
                };
            }
            quot[i - dg] = c;
        }
        rem.truncate(dg);
        Ok((
            ModPoly::from_coeffs(m.clone(), quot),
            ModPoly::from_coeffs(m.clone(), rem),
        ))
    }

    /// Multiplicative normalization to a monic polynomial. Requires a prime
    /// modulus so the leading coefficient is invertible.
    pub fn make_monic(&self) -> Result<ModPoly> {
        if self.is_zero() || self.is_monic() {
            return Ok(self.clone());
        }
        let lc = self.leading_coeff().unwrap();
        let inv = mod_inverse_prime(lc, &self.modulus)?;
        Ok(self.mul_scalar(&inv))
    }

    /// `self^e mod g` with `g` monic; square-and-multiply in the quotient.
    pub fn pow_mod(&self, e: &BigUint, g: &ModPoly) -> Result<ModPoly> {
        let mut base = self.divrem_monic(g)?.1;
        let mut result = ModPoly::one(self.modulus.clone());
        let bits = e.bits();
        for i in 0..bits {
            if e.bit(i) {
                result = result.mul(&base).divrem_monic(g)?.1;
            }
            if i + 1 < bits {
                base = base.mul(&base).divrem_monic(g)?.1;
            }
        }
        Ok(result)
    }

    /// Plain polynomial power (no quotient), used for `f(x)^p` mod `p²`.
    pub fn pow(&self, e: u64) -> ModPoly {
        let mut result = ModPoly::one(self.modulus.clone());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    pub fn derivative(&self) -> ModPoly {
        if self.coeffs.len() <= 1 {
            return ModPoly::zero(self.modulus.clone());
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigUint::from(i) % &self.modulus)
            .collect();
        ModPoly::from_coeffs(self.modulus.clone(), coeffs)
    }

    fn require_prime_modulus(&self) -> Result<()> {
        if is_prime(&self.modulus) {
            Ok(())
        } else {
            Err(Error::CompositeModulus(self.modulus.clone()))
        }
    }

    /// Monic gcd in `F_p[x]`. At most one argument may be zero.
    pub fn gcd(&self, other: &ModPoly) -> Result<ModPoly> {
        self.assert_same_modulus(other);
        self.require_prime_modulus()?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdOfZeros);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            if b.degree() == Some(0) {
                return Ok(ModPoly::one(self.modulus.clone()));
            }
            let bm = b.make_monic()?;
            let r = a.divrem_monic(&bm)?.1;
            a = bm;
            b = r;
        }
        a.make_monic()
    }

    /// Complete factorization into monic irreducible powers over `F_p`.
    ///
    /// The product of the returned powers equals the monic normalization of
    /// the input. Output order is deterministic: ascending degree, then the
    /// coefficient tuple.
    pub fn factor(&self) -> Result<Vec<(ModPoly, u32)>> {
        self.require_prime_modulus()?;
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let monic = self.make_monic()?;
        let mut out: Vec<(ModPoly, u32)> = Vec::new();
        if monic.degree() == Some(0) {
            return Ok(out);
        }
        for (part, mult) in squarefree_decomposition(&monic)? {
            for (product, d) in distinct_degree_split(&part)? {
                for irr in equal_degree_split(&product, d)? {
                    out.push((irr, mult));
                }
            }
        }
        out.sort_by(|(a, _), (b, _)| {
            a.degree()
                .cmp(&b.degree())
                .then_with(|| a.coeffs.cmp(&b.coeffs))
        });
        Ok(out)
    }

    /// Rabin's irreducibility test over `F_p`; independent of [`factor`].
    ///
    /// [`factor`]: ModPoly::factor
    pub fn is_irreducible(&self) -> Result<bool> {
        self.require_prime_modulus()?;
        let n = match self.degree() {
            Some(n) if n >= 1 => n,
            _ => return Err(Error::ConstantPolynomial),
        };
        if n == 1 {
            return Ok(true);
        }
        let f = self.make_monic()?;
        let p = &self.modulus;
        let x = ModPoly::x(p.clone());
        // x^(p^j) mod f for j = 1..n, reusing the chain.
        let mut frob = Vec::with_capacity(n + 1);
        frob.push(x.clone());
        for _ in 0..n {
            let prev: &ModPoly = frob.last().unwrap();
            frob.push(prev.pow_mod(p, &f)?);
        }
        if frob[n] != x {
            return Ok(false);
        }
        let mut q = n;
        let mut prime_divs = Vec::new();
        let mut d = 2;
        while d * d <= q {
            if q % d == 0 {
                prime_divs.push(d);
                while q % d == 0 {
                    q /= d;
                }
            }
            d += 1;
        }
        if q > 1 {
            prime_divs.push(q);
        }
        for q in prime_divs {
            let h = frob[n / q].sub(&x);
            if h.is_zero() || f.gcd(&h)?.degree() != Some(0) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Roots in `F_p` with multiplicities, ascending.
    pub fn roots(&self) -> Result<Vec<(BigUint, u32)>> {
        let factors = self.factor()?;
        let mut roots = Vec::new();
        for (g, e) in factors {
            if g.degree() == Some(1) {
                let c0 = g.coeff(0);
                let root = if c0.is_zero() {
                    BigUint::zero()
                } else {
                    &self.modulus - c0
                };
                roots.push((root, e));
            }
        }
        roots.sort();
        Ok(roots)
    }

    /// True when every irreducible factor over `F_p` is linear, equivalently
    /// when the squarefree part divides `x^p − x`.
    pub fn splits_completely(&self) -> Result<bool> {
        Ok(self.factor()?.iter().all(|(g, _)| g.degree() == Some(1)))
    }
}

impl fmt::Display for ModPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.lift(), self.modulus)
    }
}

/// Inverse of `a` modulo a prime `p`, via Fermat.
fn mod_inverse_prime(a: &BigUint, p: &BigUint) -> Result<BigUint> {
    if !is_prime(p) {
        return Err(Error::CompositeModulus(p.clone()));
    }
    let a = a % p;
    if a.is_zero() {
        return Err(Error::ZeroInput);
    }
    Ok(a.modpow(&(p - BigUint::from(2u32)), p))
}

/// Squarefree decomposition in characteristic p: returns pairwise coprime
/// monic squarefree parts with their multiplicities.
fn squarefree_decomposition(f: &ModPoly) -> Result<Vec<(ModPoly, u32)>> {
    let p = f.modulus().clone();
    let mut out = Vec::new();
    let mut stack = vec![(f.clone(), 1u32)];
    while let Some((f, base_mult)) = stack.pop() {
        let deriv = f.derivative();
        if deriv.is_zero() {
            // f = u(x^p); over F_p the p-th root keeps the coefficients.
            let u = pth_root(&f)?;
            let pm: u32 = p
                .clone()
                .try_into()
                .map_err(|_| Error::CompositeModulus(p.clone()))?;
            stack.push((u, base_mult * pm));
            continue;
        }
        let mut c = f.gcd(&deriv)?;
        let mut w = if c.degree() == Some(0) {
            f.clone()
        } else {
            f.divrem_monic(&c)?.0
        };
        let mut i = 1u32;
        while !w.is_one() {
            let y = w.gcd(&c)?;
            let z = if y.degree() == Some(0) {
                w.clone()
            } else {
                w.divrem_monic(&y)?.0
            };
            if z.degree().unwrap_or(0) > 0 {
                out.push((z, i * base_mult));
            }
            w = y;
            if w.degree().unwrap_or(0) >= 1 {
                c = c.divrem_monic(&w)?.0;
            }
            i += 1;
        }
        if c.degree().unwrap_or(0) > 0 {
            let u = pth_root(&c)?;
            let pm: u32 = p
                .clone()
                .try_into()
                .map_err(|_| Error::CompositeModulus(p.clone()))?;
            stack.push((u, base_mult * pm));
        }
    }
    Ok(out)
}

/// p-th root of a polynomial whose derivative vanishes over `F_p`: the
/// coefficients sit at exponents divisible by p and are their own p-th roots.
fn pth_root(f: &ModPoly) -> Result<ModPoly> {
    let p: usize = f
        .modulus()
        .clone()
        .try_into()
        .map_err(|_| Error::CompositeModulus(f.modulus().clone()))?;
    let mut coeffs = Vec::new();
    for (i, c) in f.coeffs().iter().enumerate() {
        if i % p == 0 {
            coeffs.push(c.clone());
        } else {
            debug_assert!(c.is_zero(), "pth_root input has stray coefficients");
        }
    }
    Ok(ModPoly::from_coeffs(f.modulus().clone(), coeffs))
}

/// Distinct-degree splitting of a monic squarefree polynomial: returns
/// products of all irreducible factors of each degree.
fn distinct_degree_split(f: &ModPoly) -> Result<Vec<(ModPoly, usize)>> {
    let p = f.modulus().clone();
    let mut out = Vec::new();
    let mut rest = f.clone();
    let x = ModPoly::x(p.clone());
    let mut h = x.divrem_monic(&rest)?.1;
    let mut d = 0usize;
    while rest.degree().map_or(false, |deg| deg >= 2 * (d + 1)) {
        d += 1;
        h = h.pow_mod(&p, &rest)?;
        let diff = h.sub(&x);
        if diff.is_zero() {
            // Every remaining factor has degree dividing d; since rest is
            // squarefree with factors of degree ≥ d, they all have degree d.
            out.push((rest.clone(), d));
            return Ok(out);
        }
        let g = rest.gcd(&diff)?;
        if g.degree().unwrap_or(0) > 0 {
            out.push((g.clone(), d));
            rest = rest.divrem_monic(&g)?.0;
            if rest.degree() == Some(0) {
                return Ok(out);
            }
            h = h.divrem_monic(&rest)?.1;
        }
    }
    if rest.degree().unwrap_or(0) > 0 {
        let deg = rest.degree().unwrap();
        out.push((rest, deg));
    }
    Ok(out)
}

/// FNV-1a over the structure of a polynomial; seeds the splitting search so
/// results are stable across runs and platforms.
fn structural_seed(f: &ModPoly, d: usize) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    let mut eat = |bytes: &[u8]| {
        for &b in bytes {
            h ^= b as u64;
            h = h.wrapping_mul(0x100000001b3);
        }
    };
    eat(&f.modulus().to_bytes_le());
    for c in f.coeffs() {
        eat(&c.to_bytes_le());
        eat(&[0xff]);
    }
    eat(&d.to_le_bytes());
    h | 1
}

/// Equal-degree splitting (Cantor–Zassenhaus; trace map for p = 2) of a
/// monic squarefree product of irreducibles all of degree `d`.
fn equal_degree_split(f: &ModPoly, d: usize) -> Result<Vec<ModPoly>> {
    let deg = f.degree().unwrap_or(0);
    if deg == d {
        return Ok(vec![f.clone()]);
    }
    let p = f.modulus().clone();
    let two = BigUint::from(2u32);
    let mut rng_state = structural_seed(f, d);
    let mut next = move || {
        rng_state ^= rng_state << 13;
        rng_state ^= rng_state >> 7;
        rng_state ^= rng_state << 17;
        rng_state
    };
    let exponent = if p == two {
        BigUint::zero()
    } else {
        (crate::zpoly::pow_big(&BigInt::from(p.clone()), d as u64)
            .to_biguint()
            .unwrap()
            - BigUint::one())
            / &two
    };
    for _attempt in 0..10_000 {
        // Random polynomial of degree < deg f, not constant.
        let mut coeffs = Vec::with_capacity(deg);
        for _ in 0..deg {
            coeffs.push(BigUint::from(next()) % &p);
        }
        let a = ModPoly::from_coeffs(p.clone(), coeffs);
        if a.degree().unwrap_or(0) < 1 {
            continue;
        }
        let b = if p == two {
            // Additive trace map: a + a² + a⁴ + … with d terms.
            let mut acc = a.clone();
            let mut term = a.clone();
            for _ in 1..d {
                term = term.mul(&term).divrem_monic(f)?.1;
                acc = acc.add(&term);
            }
            acc
        } else {
            let e = a.pow_mod(&exponent, f)?;
            e.sub(&ModPoly::one(p.clone()))
        };
        if b.is_zero() {
            continue;
        }
        let g = f.gcd(&b)?;
        let dg = g.degree().unwrap_or(0);
        if dg > 0 && dg < deg {
            let q = f.divrem_monic(&g)?.0;
            let mut left = equal_degree_split(&g, d)?;
            left.extend(equal_degree_split(&q, d)?);
            return Ok(left);
        }
    }
    unreachable!("equal-degree splitting failed to find a splitter");
}

/// The Frobenius defect `M_p(x) = (f(x^p) - f(x)^p)/p`, reduced modulo p.
///
/// Computed entirely in arithmetic modulo `p²`: `f(x)^p` by binary
/// exponentiation with reduced coefficients, subtracted from `f(x^p)`, then
/// divided by p. The division is exact coefficientwise because
/// `f(x^p) ≡ f(x)^p (mod p)`; a violation would signal an arithmetic bug and
/// panics.
pub fn frobenius_defect(f: &IntPoly, p: u64) -> Result<ModPoly> {
    if !f.is_monic() {
        return Err(Error::NonMonic);
    }
    let p_big = BigUint::from(p);
    if !is_prime(&p_big) {
        return Err(Error::CompositeModulus(p_big));
    }
    let p2 = &p_big * &p_big;
    let f_comp = ModPoly::reduce(&f.compose_power(p)?, &p2)?;
    let f_pow = ModPoly::reduce(f, &p2)?.pow(p);
    let diff = f_comp.sub(&f_pow);
    Ok(exact_div_by_p(&diff, &p_big))
}

/// The Frobenius defect reduced modulo `f` as well: the remainder of
/// `M_p(x)` after division by `f`, over `F_p`.
///
/// Since `f(x)^p ≡ 0 (mod f)`, this is `f(x^p) rem f` computed modulo `p²`
/// and divided by p — the degree stays below `deg f` throughout, which is
/// what makes obstruction scans over thousands of primes affordable. Because
/// `gcd(f̄, M̄_p) = gcd(f̄, M̄_p rem f̄)`, the reduction loses nothing for
/// coprimality decisions.
pub fn frobenius_defect_reduced(f: &IntPoly, p: u64) -> Result<ModPoly> {
    if !f.is_monic() {
        return Err(Error::NonMonic);
    }
    if f.degree().unwrap_or(0) < 1 {
        return Err(Error::ConstantPolynomial);
    }
    let p_big = BigUint::from(p);
    if !is_prime(&p_big) {
        return Err(Error::CompositeModulus(p_big));
    }
    let p2 = &p_big * &p_big;
    let f_mod = ModPoly::reduce(f, &p2)?;
    let t = ModPoly::x(p2.clone()).pow_mod(&p_big, &f_mod)?;
    // Horner evaluation of f at t inside (Z/p²)[x]/(f).
    let mut acc = ModPoly::zero(p2.clone());
    for c in f.coeffs().iter().rev() {
        acc = acc.mul(&t).divrem_monic(&f_mod)?.1;
        let c_mod = ModPoly::reduce(&IntPoly::constant(c.clone()), &p2)?;
        acc = acc.add(&c_mod);
    }
    Ok(exact_div_by_p(&acc, &p_big))
}

/// Divides every coefficient (given modulo p²) by p, landing modulo p.
fn exact_div_by_p(f: &ModPoly, p: &BigUint) -> ModPoly {
    let coeffs = f
        .coeffs()
        .iter()
        .map(|c| {
            let (q, r) = c.div_rem(p);
            assert!(
                r.is_zero(),
                "Frobenius defect arithmetic produced a coefficient not divisible by p"
            );
            q
        })
        .collect();
    ModPoly::from_coeffs(p.clone(), coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::XorShift;

    fn mp(m: u64, coeffs: &[i64]) -> ModPoly {
        ModPoly::reduce(&IntPoly::from_ints(coeffs), &BigUint::from(m)).unwrap()
    }

    #[test]
    fn gcd_examples() {
        // gcd(x² − 1, x − 1) mod 5 = x + 4
        let g = mp(5, &[-1, 0, 1]).gcd(&mp(5, &[-1, 1])).unwrap();
        assert_eq!(g, mp(5, &[4, 1]));
        // gcd(x² − x − 1, 2x − 1) mod 5 = x + 2 (the double root is −2).
        let g = mp(5, &[-1, -1, 1]).gcd(&mp(5, &[-1, 2])).unwrap();
        assert_eq!(g, mp(5, &[2, 1]));
        // gcd(x² + 1, x) mod 3 = 1
        let g = mp(3, &[1, 0, 1]).gcd(&mp(3, &[0, 1])).unwrap();
        assert!(g.is_one());
        // Composite modulus is rejected.
        assert!(matches!(
            mp(6, &[1, 1]).gcd(&mp(6, &[1, 0, 1])),
            Err(Error::CompositeModulus(_))
        ));
        // gcd(f, 0) = monic f.
        let f = mp(7, &[2, 4]);
        let g = f.gcd(&ModPoly::zero(BigUint::from(7u32))).unwrap();
        assert!(g.is_monic());
        assert_eq!(g, mp(7, &[4, 1])); // (4x + 2)/4 = x + 4 over F_7
    }

    #[test]
    fn factor_examples() {
        // x² + 1 mod 2 = (x + 1)²
        let f = mp(2, &[1, 0, 1]);
        assert_eq!(f.factor().unwrap(), vec![(mp(2, &[1, 1]), 2)]);
        // x³ − x mod 3 = x(x+1)(x+2)
        let f = mp(3, &[0, -1, 0, 1]);
        assert_eq!(
            f.factor().unwrap(),
            vec![
                (mp(3, &[0, 1]), 1),
                (mp(3, &[1, 1]), 1),
                (mp(3, &[2, 1]), 1)
            ]
        );
        // x² − x − 1 mod 5 = (x + 2)²  [oracle: exhaustive root scan]
        let f = mp(5, &[-1, -1, 1]);
        let mut roots = Vec::new();
        for r in 0u64..5 {
            let v = IntPoly::from_ints(&[-1, -1, 1])
                .eval_mod(&BigInt::from(r), &BigUint::from(5u32))
                .unwrap();
            if v.is_zero() {
                roots.push(r);
            }
        }
        assert_eq!(roots, vec![3]); // 3 ≡ −2 (mod 5)
        assert_eq!(f.factor().unwrap(), vec![(mp(5, &[2, 1]), 2)]);
    }

    #[test]
    fn factor_reassembles_for_random_inputs() {
        let mut rng = XorShift(0xFEED_5EED);
        let primes = [2u64, 3, 5, 7, 11, 13, 31, 97];
        for trial in 0..500 {
            let p = primes[(rng.next() % primes.len() as u64) as usize];
            let d = (rng.next() % 12 + 1) as usize;
            let f = loop {
                let cand = ModPoly::from_coeffs(
                    BigUint::from(p),
                    (0..=d).map(|_| BigUint::from(rng.next() % p)).collect(),
                );
                if cand.degree().unwrap_or(0) >= 1 {
                    break cand;
                }
            };
            let factors = f.factor().unwrap();
            let mut product = ModPoly::one(BigUint::from(p));
            for (g, e) in &factors {
                assert!(g.is_monic());
                assert!(g.is_irreducible().unwrap(), "trial {trial}: {g} reducible");
                for _ in 0..*e {
                    product = product.mul(g);
                }
            }
            assert_eq!(product, f.make_monic().unwrap(), "trial {trial}");
        }
    }

    #[test]
    fn irreducibility_examples() {
        assert!(mp(2, &[1, 1, 1]).is_irreducible().unwrap());
        assert!(!mp(5, &[1, 0, 1]).is_irreducible().unwrap()); // 2² ≡ −1 (mod 5)
        assert!(mp(2, &[-1, -1, 1]).is_irreducible().unwrap()); // no roots mod 2, degree 2
        assert!(mp(3, &[1, 0, 1]).is_irreducible().unwrap());
        assert!(!mp(3, &[0, 0, 1]).is_irreducible().unwrap()); // x²
        assert!(matches!(
            mp(4, &[1, 1, 1]).is_irreducible(),
            Err(Error::CompositeModulus(_))
        ));
    }

    #[test]
    fn roots_and_splitting() {
        // x² + 1 mod 5: roots 2, 3.
        let r = mp(5, &[1, 0, 1]).roots().unwrap();
        assert_eq!(r, vec![(BigUint::from(2u32), 1), (BigUint::from(3u32), 1)]);
        assert!(mp(5, &[1, 0, 1]).splits_completely().unwrap());

        // x³ − 1 mod 3 = (x − 1)³.
        let r = mp(3, &[-1, 0, 0, 1]).roots().unwrap();
        assert_eq!(r, vec![(BigUint::from(1u32), 3)]);
        assert!(mp(3, &[-1, 0, 0, 1]).splits_completely().unwrap());

        // x² + x + 1 mod 2: no roots, does not split.
        assert!(mp(2, &[1, 1, 1]).roots().unwrap().is_empty());
        assert!(!mp(2, &[1, 1, 1]).splits_completely().unwrap());
    }

    /// Oracle for the defect: full big-integer expansion of
    /// (f(x^p) − f(x)^p)/p, reduced mod p at the very end.
    fn defect_by_expansion(f: &IntPoly, p: u64) -> ModPoly {
        let comp = f.compose_power(p).unwrap();
        let mut power = IntPoly::one();
        for _ in 0..p {
            power = &power * f;
        }
        let diff = &comp - &power;
        let p_int = BigInt::from(p);
        let coeffs: Vec<BigInt> = diff
            .coeffs()
            .iter()
            .map(|c| {
                let (q, r) = num_integer::Integer::div_rem(c, &p_int);
                assert!(r.is_zero());
                q
            })
            .collect();
        ModPoly::reduce(&IntPoly::from_coeffs(coeffs), &BigUint::from(p)).unwrap()
    }

    #[test]
    fn defect_examples() {
        // f = x: defect is 0 for any p.
        for p in [2u64, 3, 5, 7] {
            assert!(frobenius_defect(&IntPoly::x(), p).unwrap().is_zero());
        }
        // f = x − 2, p = 2: constant (2² − 2)/2 = 1 (mod 2).
        let d = frobenius_defect(&IntPoly::from_ints(&[-2, 1]), 2).unwrap();
        assert_eq!(d, mp(2, &[1]));
        // f = x² − x − 1, p = 3: matches the big-integer expansion.
        let f = IntPoly::from_ints(&[-1, -1, 1]);
        assert_eq!(frobenius_defect(&f, 3).unwrap(), defect_by_expansion(&f, 3));
    }

    #[test]
    fn defect_fast_path_matches_expansion() {
        let mut rng = XorShift(0xD1CE_F00D);
        let primes = [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31];
        for _ in 0..100 {
            let d = (rng.next() % 3 + 1) as usize;
            let f = rng.monic_poly(d, 9);
            let p = primes[(rng.next() % primes.len() as u64) as usize];
            assert_eq!(
                frobenius_defect(&f, p).unwrap(),
                defect_by_expansion(&f, p),
                "f = {f}, p = {p}"
            );
        }
    }

    #[test]
    fn defect_reduced_agrees_with_full_defect_mod_f() {
        let mut rng = XorShift(0xBEEF_CAFE);
        let primes = [2u64, 3, 5, 7, 11, 13, 31, 97];
        for _ in 0..200 {
            let d = (rng.next() % 3 + 1) as usize;
            let f = rng.monic_poly(d, 9);
            let p = primes[(rng.next() % primes.len() as u64) as usize];
            let full = frobenius_defect(&f, p).unwrap();
            let reduced = frobenius_defect_reduced(&f, p).unwrap();
            let f_bar = ModPoly::reduce(&f, &BigUint::from(p)).unwrap();
            let expected = if f_bar.degree().unwrap_or(0) >= 1 {
                full.divrem_monic(&f_bar).unwrap().1
            } else {
                ModPoly::zero(BigUint::from(p))
            };
            assert_eq!(reduced, expected, "f = {f}, p = {p}");
        }
    }

    #[test]
    fn frobenius_identity_holds() {
        // f(x^p) ≡ f(x)^p (mod p): the defect construction never panics.
        let mut rng = XorShift(0x1111_2222);
        for p in [2u64, 3, 5, 7, 11] {
            for _ in 0..20 {
                let d = (rng.next() % 4 + 1) as usize;
                let f = rng.monic_poly(d, 9);
                let _ = frobenius_defect(&f, p).unwrap();
            }
        }
    }

    #[test]
    fn factor_ordering_is_deterministic() {
        let f = mp(5, &[0, -1, 0, 0, 0, 1]); // x⁵ − x splits completely
        let factors = f.factor().unwrap();
        let again = f.factor().unwrap();
        assert_eq!(factors, again);
        let degrees: Vec<_> = factors.iter().map(|(g, _)| g.degree().unwrap()).collect();
        let mut sorted = degrees.clone();
        sorted.sort();
        assert_eq!(degrees, sorted);
    }
}
