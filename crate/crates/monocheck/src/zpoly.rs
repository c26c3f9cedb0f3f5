//! Exact univariate polynomials over the integers.
//!
//! [`IntPoly`] is a dense, canonically trimmed coefficient vector (constant
//! term first). On top of the ring operations it provides composition
//! `f(x^k)`, division by monic divisors, resultants through the subresultant
//! polynomial remainder sequence, and discriminants. Values are immutable
//! after construction and every operation is reentrant.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Dense polynomial over arbitrary-precision integers, constant term first.
///
/// The zero polynomial is the empty coefficient list; nonzero polynomials
/// never store trailing zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        IntPoly {
            coeffs: vec![BigInt::zero(), BigInt::one()],
        }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        IntPoly::from_coeffs(vec![c.into()])
    }

    /// Builds from a constant-first coefficient list, trimming trailing zeros.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { coeffs };
        p.trim();
        p
    }

    /// Convenience constructor from machine integers, constant term first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `c · x^degree`.
    pub fn monomial(c: impl Into<BigInt>, degree: usize) -> Self {
        let c = c.into();
        if c.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c;
        IntPoly { coeffs }
    }

    fn trim(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn is_monic(&self) -> bool {
        matches!(self.leading_coeff(), Some(c) if c.is_one())
    }

    pub fn mul_scalar(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> IntPoly {
        let mut result = IntPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// The power compositional polynomial `f(x^k)`; requires `k ≥ 1`.
    pub fn compose_power(&self, k: u64) -> Result<IntPoly> {
        if k == 0 {
            return Err(Error::ZeroExponent);
        }
        if self.is_zero() || k == 1 {
            return Ok(self.clone());
        }
        let k = k as usize;
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        Ok(IntPoly { coeffs })
    }

    /// Formal derivative.
    pub fn derivative(&self) -> IntPoly {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        IntPoly::from_coeffs(coeffs)
    }

    /// Exact division with remainder by a monic divisor of positive degree:
    /// `self = g·q + r` over the integers with `deg r < deg g`.
    pub fn divrem_monic(&self, g: &IntPoly) -> Result<(IntPoly, IntPoly)> {
        let dg = match g.degree() {
            Some(d) if d >= 1 && g.is_monic() => d,
            _ => return Err(Error::NonMonicDivisor),
        };
        let df = match self.degree() {
            None => return Ok((IntPoly::zero(), IntPoly::zero())),
            Some(d) if d < dg => return Ok((IntPoly::zero(), self.clone())),
            Some(d) => d,
        };
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); df - dg + 1];
        for i in (dg..=df).rev() {
            let c = std::mem::replace(&mut rem[i], BigInt::zero());
            if c.is_zero() {
                continue;
            }
            for (j, gj) in g.coeffs.iter().enumerate().take(dg) {
                rem[i - dg + j] -= gj * &c;
            }
            quot[i - dg] = c;
        }
        rem.truncate(dg);
        Ok((IntPoly::from_coeffs(quot), IntPoly::from_coeffs(rem)))
    }

    /// Horner evaluation at an integer point.
    pub fn eval(&self, a: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * a + c;
        }
        acc
    }

    /// Horner evaluation with every step reduced modulo `m ≥ 2`.
    pub fn eval_mod(&self, a: &BigInt, m: &BigUint) -> Result<BigUint> {
        if m < &BigUint::from(2u32) {
            return Err(Error::ModulusTooSmall);
        }
        let m_int = BigInt::from(m.clone());
        let a = a.mod_floor(&m_int);
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = (acc * &a + c).mod_floor(&m_int);
        }
        Ok(acc.to_biguint().expect("mod_floor is non-negative"))
    }

    /// Resultant of two nonzero polynomials, exactly over the integers.
    ///
    /// Uses the subresultant polynomial remainder sequence, which keeps all
    /// intermediate divisions exact and controls coefficient growth.
    pub fn resultant(&self, other: &IntPoly) -> Result<BigInt> {
        resultant(self, other)
    }

    /// Discriminant `(-1)^{n(n-1)/2}·R(f, f')` of a monic polynomial of
    /// degree `n ≥ 1`.
    pub fn discriminant(&self) -> Result<BigInt> {
        if !self.is_monic() {
            return Err(Error::NonMonic);
        }
        let n = self.degree().filter(|&n| n >= 1).ok_or(Error::NonMonic)?;
        let r = resultant(self, &self.derivative())?;
        if (n * (n - 1) / 2) % 2 == 1 {
            Ok(-r)
        } else {
            Ok(r)
        }
    }

    /// Magnitude of the discriminant of `f(x^ℓ)` by the composition law
    /// `|D(f)|^ℓ · ℓ^{dℓ} · |f(0)|^{ℓ-1}` for monic `f` with `f(0) ≠ 0`.
    ///
    /// Only the magnitude is defined here; the sign of `D(f(x^ℓ))` is left
    /// undetermined, and callers needing it must compute the discriminant of
    /// the composition directly.
    pub fn composition_discriminant_magnitude(&self, ell: u64) -> Result<BigInt> {
        if !self.is_monic() {
            return Err(Error::NonMonic);
        }
        if ell == 0 {
            return Err(Error::ZeroExponent);
        }
        if self.constant_term().is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let d = self.degree().filter(|&d| d >= 1).ok_or(Error::NonMonic)? as u64;
        let disc = self.discriminant()?.abs();
        let ell_big = BigInt::from(ell);
        let f0 = self.constant_term().abs();
        let mut out = pow_big(&disc, ell);
        out *= pow_big(&ell_big, d * ell);
        out *= pow_big(&f0, ell - 1);
        Ok(out)
    }

    /// `self · x^k`.
    fn mul_shift(&self, k: usize) -> IntPoly {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }
}

pub(crate) fn pow_big(base: &BigInt, e: u64) -> BigInt {
    let mut result = BigInt::one();
    let mut b = base.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            result *= &b;
        }
        e >>= 1;
        if e > 0 {
            b = &b * &b;
        }
    }
    result
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let mut c = self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero);
            if let Some(d) = rhs.coeffs.get(i) {
                c += d;
            }
            coeffs.push(c);
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let mut c = self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero);
            if let Some(d) = rhs.coeffs.get(i) {
                c -= d;
            }
            coeffs.push(c);
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

fn content(p: &IntPoly) -> BigInt {
    let mut g = BigInt::zero();
    for c in p.coeffs() {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn exact_div(p: &IntPoly, c: &BigInt) -> IntPoly {
    debug_assert!(!c.is_zero());
    IntPoly {
        coeffs: p
            .coeffs()
            .iter()
            .map(|a| {
                let (q, r) = a.div_rem(c);
                debug_assert!(r.is_zero(), "inexact division in subresultant chain");
                q
            })
            .collect(),
    }
}

/// Pseudo-remainder: returns `r` with `lc(b)^{deg a - deg b + 1}·a = q·b + r`.
fn pseudo_rem(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let db = b.degree().expect("pseudo_rem divisor is nonzero");
    let da = a.degree().expect("pseudo_rem dividend is nonzero");
    debug_assert!(da >= db);
    let lc_b = b.leading_coeff().unwrap().clone();
    let full_steps = da - db + 1;
    let mut r = a.clone();
    let mut steps = 0usize;
    while let Some(dr) = r.degree() {
        if dr < db {
            break;
        }
        let lead = r.leading_coeff().unwrap().clone();
        r = &r.mul_scalar(&lc_b) - &b.mul_scalar(&lead).mul_shift(dr - db);
        steps += 1;
    }
    // Normalize to the full lc(b)^(δ+1) scaling even if the loop exited early.
    for _ in steps..full_steps {
        r = r.mul_scalar(&lc_b);
    }
    r
}

/// Resultant of nonzero `f`, `g` by the subresultant PRS.
fn resultant(f: &IntPoly, g: &IntPoly) -> Result<BigInt> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut a = f.clone();
    let mut b = g.clone();
    let mut negate = false;
    let (da, db) = (a.degree().unwrap(), b.degree().unwrap());
    if da < db {
        std::mem::swap(&mut a, &mut b);
        if da % 2 == 1 && db % 2 == 1 {
            negate = !negate;
        }
    }
    let (da, db) = (a.degree().unwrap(), b.degree().unwrap());
    if db == 0 {
        let base = b.constant_term();
        let r = pow_big(&base, da as u64);
        return Ok(if negate { -r } else { r });
    }
    let ca = content(&a);
    let cb = content(&b);
    a = exact_div(&a, &ca);
    b = exact_div(&b, &cb);
    let mut t = pow_big(&ca, db as u64) * pow_big(&cb, da as u64);
    if negate {
        t = -t;
    }
    let mut g_coef = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let da = a.degree().unwrap();
        let db = b.degree().unwrap();
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            t = -t;
        }
        let r = pseudo_rem(&a, &b);
        a = b;
        if r.is_zero() {
            // A common factor of positive degree forces a zero resultant.
            return Ok(BigInt::zero());
        }
        let divisor = &g_coef * pow_big(&h, delta as u64);
        b = exact_div(&r, &divisor);
        g_coef = a.leading_coeff().unwrap().clone();
        h = match delta {
            0 => h,
            1 => g_coef.clone(),
            _ => {
                let num = pow_big(&g_coef, delta as u64);
                let den = pow_big(&h, (delta - 1) as u64);
                let (q, rem) = num.div_rem(&den);
                debug_assert!(rem.is_zero(), "inexact h update in subresultant chain");
                q
            }
        };
        if b.degree().unwrap() == 0 {
            break;
        }
    }
    let da = a.degree().unwrap();
    let lc_b = b.constant_term();
    let num = pow_big(&lc_b, da as u64);
    let den = pow_big(&h, (da - 1) as u64);
    let (hq, hr) = num.div_rem(&den);
    debug_assert!(hr.is_zero(), "inexact final division in subresultant chain");
    Ok(t * hq)
}
