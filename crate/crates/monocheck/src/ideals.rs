//! Membership tests in squares of maximal ideals of `Z[x]`, and the
//! per-prime index-divisibility test they induce.
//!
//! Every maximal ideal of `Z[x]` containing a monic polynomial has the shape
//! `⟨p, g(x)⟩` with `p` prime and `g` monic irreducible modulo p. A prime
//! `p` divides the index of a monic irreducible `f` exactly when `f` lies in
//! the square of such an ideal, and that square decomposes as
//! `⟨p, g⟩² = ⟨p², g⟩ ∩ ⟨p, g²⟩`, so membership reduces to two remainder
//! computations. [`divides_index`] runs that test over the multiple factors
//! of `f` mod p; [`dedekind_criterion`] is an independent formulation through
//! the auxiliary polynomial `M(x) = (f - ∏ gᵢ^{eᵢ})/p`, kept around as a
//! cross-check oracle.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::Zero;

use crate::intfactor::is_prime;
use crate::modpoly::ModPoly;
use crate::zpoly::IntPoly;
use crate::{Error, Result};

/// A maximal ideal `⟨p, g(x)⟩` of `Z[x]`: `p` prime, `g` monic and
/// irreducible modulo p. Validated on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaximalIdealSpec {
    p: BigUint,
    g: IntPoly,
}

impl MaximalIdealSpec {
    pub fn new(p: BigUint, g: IntPoly) -> Result<MaximalIdealSpec> {
        if !is_prime(&p) {
            return Err(Error::InvalidIdealSpec(format!("{p} is not prime")));
        }
        if !g.is_monic() {
            return Err(Error::InvalidIdealSpec(format!("{g} is not monic")));
        }
        let g_bar = ModPoly::reduce(&g, &p)?;
        if g_bar.degree().unwrap_or(0) < 1 || !g_bar.is_irreducible()? {
            return Err(Error::InvalidIdealSpec(format!(
                "{g} is not irreducible modulo {p}"
            )));
        }
        Ok(MaximalIdealSpec { p, g })
    }

    pub fn prime(&self) -> &BigUint {
        &self.p
    }

    pub fn generator(&self) -> &IntPoly {
        &self.g
    }
}

/// `f ∈ ⟨p, g²⟩`: g² divides f modulo p, i.e. ḡ is a multiple factor of f̄.
pub fn in_p_g2(f: &IntPoly, spec: &MaximalIdealSpec) -> Result<bool> {
    let f_bar = ModPoly::reduce(f, &spec.p)?;
    let g_bar = ModPoly::reduce(&spec.g, &spec.p)?;
    let g_sq = g_bar.mul(&g_bar);
    Ok(f_bar.divrem_monic(&g_sq)?.1.is_zero())
}

/// `f ∈ ⟨p², g⟩`: the remainder of f divided by g vanishes modulo p².
pub fn in_p2_g(f: &IntPoly, spec: &MaximalIdealSpec) -> Result<bool> {
    let p2 = &spec.p * &spec.p;
    let f_mod = ModPoly::reduce(f, &p2)?;
    let g_mod = ModPoly::reduce(&spec.g, &p2)?;
    Ok(f_mod.divrem_monic(&g_mod)?.1.is_zero())
}

/// `f ∈ ⟨p, g⟩²`, through the decomposition `⟨p², g⟩ ∩ ⟨p, g²⟩`.
pub fn in_maximal_square(f: &IntPoly, spec: &MaximalIdealSpec) -> Result<bool> {
    Ok(in_p_g2(f, spec)? && in_p2_g(f, spec)?)
}

/// `f ∈ ⟨p, g⟩²` by direct decomposition: write `f = g²·q + g·u + v` with
/// two monic divisions over the integers; membership holds exactly when
/// `u ≡ 0 (mod p)` and `v ≡ 0 (mod p²)`.
///
/// Exists alongside [`in_maximal_square`] so the two routes can be checked
/// against each other.
pub fn in_maximal_square_direct(f: &IntPoly, spec: &MaximalIdealSpec) -> Result<bool> {
    let g_sq = &spec.g * &spec.g;
    let (_, r1) = f.divrem_monic(&g_sq)?;
    let (u, v) = r1.divrem_monic(&spec.g)?;
    let p_int = BigInt::from(spec.p.clone());
    let p2_int = &p_int * &p_int;
    let u_ok = u.coeffs().iter().all(|c| c.mod_floor(&p_int).is_zero());
    let v_ok = v.coeffs().iter().all(|c| c.mod_floor(&p2_int).is_zero());
    Ok(u_ok && v_ok)
}

/// Result of [`divides_index`]: whether `p` divides the index of `f`, with
/// the first multiple factor witnessing it (in the deterministic factor
/// order) when it does.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexDivisibility {
    pub divides: bool,
    pub witness: Option<IntPoly>,
}

/// Decides whether a prime `p` divides the index of the order generated by
/// a root of monic `f`.
///
/// Irreducibility of `f` is the caller's responsibility; the test itself is
/// a statement about polynomial ideal membership and is well-defined for any
/// monic `f`: it holds exactly when some multiple irreducible factor `g` of
/// `f` mod p leaves a remainder divisible by `p²`.
pub fn divides_index(f: &IntPoly, p: &BigUint) -> Result<IndexDivisibility> {
    if !f.is_monic() {
        return Err(Error::NonMonic);
    }
    if !is_prime(p) {
        return Err(Error::CompositeModulus(p.clone()));
    }
    let f_bar = ModPoly::reduce(f, p)?;
    for (g_bar, e) in f_bar.factor()? {
        if e < 2 {
            continue;
        }
        let g = g_bar.lift();
        let spec = MaximalIdealSpec { p: p.clone(), g };
        if in_p2_g(f, &spec)? {
            return Ok(IndexDivisibility {
                divides: true,
                witness: Some(spec.g),
            });
        }
    }
    Ok(IndexDivisibility {
        divides: false,
        witness: None,
    })
}

/// Outcome of [`dedekind_criterion`] with its supporting data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DedekindCheck {
    pub divides: bool,
    /// Monic lifts of the irreducible factors of f mod p with exponents and,
    /// for the multiple ones, whether they are coprime to M̄.
    pub factors: Vec<(IntPoly, u32, bool)>,
    /// The auxiliary polynomial `(f − ∏ gᵢ^{eᵢ})/p` reduced modulo p.
    pub m_bar: ModPoly,
}

/// The classical criterion: lift the factorization of f mod p, form
/// `M(x) = (f − ∏ gᵢ^{eᵢ})/p`, and report that `p` divides the index
/// exactly when some `eᵢ > 1` has `gcd(ḡᵢ, M̄) ≠ 1`.
///
/// This is an independent implementation kept deliberately separate from
/// [`divides_index`]; the two must agree on every input.
pub fn dedekind_criterion(f: &IntPoly, p: &BigUint) -> Result<DedekindCheck> {
    if !f.is_monic() {
        return Err(Error::NonMonic);
    }
    if !is_prime(p) {
        return Err(Error::CompositeModulus(p.clone()));
    }
    let f_bar = ModPoly::reduce(f, p)?;
    let factorization = f_bar.factor()?;
    let mut product = IntPoly::one();
    for (g_bar, e) in &factorization {
        product = &product * &g_bar.lift().pow(*e);
    }
    let diff = f - &product;
    let p_int = BigInt::from(p.clone());
    let m_coeffs: Vec<BigInt> = diff
        .coeffs()
        .iter()
        .map(|c| {
            let (q, r) = c.div_rem(&p_int);
            debug_assert!(r.is_zero(), "lifted factor product must equal f mod p");
            q
        })
        .collect();
    let m = IntPoly::from_coeffs(m_coeffs);
    let m_bar = ModPoly::reduce(&m, p)?;

    let mut divides = false;
    let mut factors = Vec::with_capacity(factorization.len());
    for (g_bar, e) in &factorization {
        let coprime = if *e > 1 {
            let gcd = if m_bar.is_zero() {
                g_bar.clone()
            } else {
                g_bar.gcd(&m_bar)?
            };
            gcd.degree() == Some(0)
        } else {
            true
        };
        if *e > 1 && !coprime {
            divides = true;
        }
        factors.push((g_bar.lift(), *e, coprime));
    }
    Ok(DedekindCheck {
        divides,
        factors,
        m_bar,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::XorShift;
    use num_traits::One;

    fn poly(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_ints(coeffs)
    }

    fn spec(p: u64, g: &[i64]) -> MaximalIdealSpec {
        MaximalIdealSpec::new(BigUint::from(p), poly(g)).unwrap()
    }

    /// Random spec with g monic irreducible mod p, degree 1 or 2.
    fn random_spec(rng: &mut XorShift, primes: &[u64]) -> MaximalIdealSpec {
        loop {
            let p = primes[(rng.next() % primes.len() as u64) as usize];
            let d = (rng.next() % 2 + 1) as usize;
            let g = rng.monic_poly(d, 9);
            if let Ok(spec) = MaximalIdealSpec::new(BigUint::from(p), g) {
                return spec;
            }
        }
    }

    #[test]
    fn spec_validation() {
        assert!(MaximalIdealSpec::new(BigUint::from(4u32), poly(&[1, 1])).is_err());
        assert!(MaximalIdealSpec::new(BigUint::from(5u32), poly(&[1, 2])).is_err());
        // x² + 1 factors mod 5.
        assert!(MaximalIdealSpec::new(BigUint::from(5u32), poly(&[1, 0, 1])).is_err());
        assert!(MaximalIdealSpec::new(BigUint::from(3u32), poly(&[1, 0, 1])).is_ok());
    }

    #[test]
    fn membership_examples() {
        // f = x² − 2, p = 2, g = x: f ≡ x² (mod 2) but remainder −2 with 4 ∤ 2.
        let f = poly(&[-2, 0, 1]);
        let s = spec(2, &[0, 1]);
        assert!(in_p_g2(&f, &s).unwrap());
        assert!(!in_p2_g(&f, &s).unwrap());
        assert!(!in_maximal_square(&f, &s).unwrap());

        // f = x² − x − 1, p = 5, g = x + 2: (x+2)² ≡ f, remainder f(−2) = 5.
        let f = poly(&[-1, -1, 1]);
        let s = spec(5, &[2, 1]);
        assert!(in_p_g2(&f, &s).unwrap());
        assert!(!in_p2_g(&f, &s).unwrap());

        // f = x² − x − 1, p = 3, g = x: f(0) = −1 ≢ 0 (mod 3).
        let s = spec(3, &[0, 1]);
        assert!(!in_p_g2(&poly(&[-1, -1, 1]), &s).unwrap());

        // f = x² + 25, p = 5, g = x: remainder 25 ≡ 0 (mod 25).
        let s = spec(5, &[0, 1]);
        assert!(in_p2_g(&poly(&[25, 0, 1]), &s).unwrap());

        // f = (x−1)² + 9, p = 3, g = x − 1: u = 0, v = 9.
        let f = &(&poly(&[-1, 1]) * &poly(&[-1, 1])) + &poly(&[9]);
        let s = spec(3, &[-1, 1]);
        assert!(in_maximal_square(&f, &s).unwrap());
        assert!(in_maximal_square_direct(&f, &s).unwrap());

        // Explicit element p²·1 + p·g·x + g²·x² of the ideal square.
        let s = spec(7, &[3, 1]);
        let p2 = poly(&[49]);
        let pgx = poly(&[0, 7]);
        let g2x2 = poly(&[0, 0, 1]);
        let f = &(&p2 + &(&pgx * s.generator())) + &(&g2x2 * &(s.generator() * s.generator()));
        assert!(in_maximal_square(&f, &s).unwrap());
        assert!(in_maximal_square_direct(&f, &s).unwrap());
    }

    #[test]
    fn square_decomposition_equivalence() {
        // ⟨p,g⟩² = ⟨p²,g⟩ ∩ ⟨p,g²⟩, conjunction vs direct (u,v) decomposition.
        let mut rng = XorShift(0x5EED_1DEA);
        let primes = [2u64, 3, 5, 7, 11, 13];
        for _ in 0..300 {
            let s = random_spec(&mut rng, &primes);
            let d = (rng.next() % 6) as usize;
            let f =
                IntPoly::from_coeffs((0..=d).map(|_| BigInt::from(rng.signed(40))).collect());
            let via_conjunction = in_maximal_square(&f, &s).unwrap();
            let via_direct = in_maximal_square_direct(&f, &s).unwrap();
            assert_eq!(
                via_conjunction,
                via_direct,
                "f = {f}, p = {}, g = {}",
                s.prime(),
                s.generator()
            );
        }
    }

    #[test]
    fn membership_in_p_g2_forces_resqu_equivalence() {
        // Whenever f ∈ ⟨p, g²⟩: f ∈ ⟨p,g⟩² ⟺ f ∈ ⟨p²,g⟩.
        let mut rng = XorShift(0x0E5_0015_EED);
        let primes = [2u64, 3, 5, 7];
        let mut hits = 0;
        while hits < 200 {
            let s = random_spec(&mut rng, &primes);
            // Construct f guaranteed to lie in ⟨p, g²⟩: f = g²·q + p·r.
            let q = rng.monic_poly((rng.next() % 3) as usize, 9);
            let r = IntPoly::from_coeffs(
                (0..(rng.next() % 4 + 1) as usize)
                    .map(|_| BigInt::from(rng.signed(9)))
                    .collect(),
            );
            let p_int = BigInt::from(s.prime().clone());
            let f = &(&(s.generator() * s.generator()) * &q) + &r.mul_scalar(&p_int);
            if f.is_zero() {
                continue;
            }
            assert!(in_p_g2(&f, &s).unwrap());
            assert_eq!(
                in_maximal_square(&f, &s).unwrap(),
                in_p2_g(&f, &s).unwrap(),
                "f = {f}"
            );
            hits += 1;
        }
    }

    #[test]
    fn divides_index_examples() {
        // Eisenstein at 2: index not divisible by 2.
        let r = divides_index(&poly(&[-2, 0, 1]), &BigUint::from(2u32)).unwrap();
        assert!(!r.divides);

        // f(x³) for f = x² + x + 4: 2² | f(0) forces divisibility.
        let f = poly(&[4, 1, 1]).compose_power(3).unwrap();
        let r = divides_index(&f, &BigUint::from(2u32)).unwrap();
        assert!(r.divides);
        assert_eq!(r.witness, Some(poly(&[0, 1])));

        // x² − x − 1 at 5: double root but remainder 5, 25 ∤ 5.
        let r = divides_index(&poly(&[-1, -1, 1]), &BigUint::from(5u32)).unwrap();
        assert!(!r.divides);
    }

    #[test]
    fn dedekind_criterion_examples() {
        let c = dedekind_criterion(&poly(&[-2, 0, 1]), &BigUint::from(2u32)).unwrap();
        assert!(!c.divides);

        // f = x² + 25, p = 5: f ≡ x² (mod 5), M = 5, M̄ = 0 shares the factor x.
        let c = dedekind_criterion(&poly(&[25, 0, 1]), &BigUint::from(5u32)).unwrap();
        assert!(c.divides);
        assert!(c.m_bar.is_zero());

        // Classic non-monogenic cubic at p = 2.
        let c = dedekind_criterion(&poly(&[-8, -2, -1, 1]), &BigUint::from(2u32)).unwrap();
        assert!(c.divides);
    }

    #[test]
    fn two_formulations_agree() {
        let mut rng = XorShift(0xA6EE_0000_1234);
        let primes = [2u64, 3, 5, 7, 11, 13];
        for trial in 0..500 {
            let p = primes[(rng.next() % primes.len() as u64) as usize];
            let d = (rng.next() % 6 + 1) as usize;
            let f = rng.monic_poly(d, 9);
            let p_big = BigUint::from(p);
            let a = divides_index(&f, &p_big).unwrap();
            let b = dedekind_criterion(&f, &p_big).unwrap();
            assert_eq!(a.divides, b.divides, "trial {trial}: f = {f}, p = {p}");
        }
    }

    #[test]
    fn composition_preserves_index_divisibility() {
        // If p divides the index of f, it divides the index of f(x^ℓ).
        let mut rng = XorShift(0x1DEA_C0DE);
        let primes = [2u64, 3, 5];
        let mut hits = 0;
        while hits < 60 {
            let p = primes[(rng.next() % primes.len() as u64) as usize];
            let d = (rng.next() % 3 + 1) as usize;
            let f = rng.monic_poly(d, 9);
            let p_big = BigUint::from(p);
            if !divides_index(&f, &p_big).unwrap().divides {
                continue;
            }
            let ell = [2u64, 3, 4][(rng.next() % 3) as usize];
            let comp = f.compose_power(ell).unwrap();
            assert!(
                divides_index(&comp, &p_big).unwrap().divides,
                "f = {f}, p = {p}, ell = {ell}"
            );
            hits += 1;
        }
    }

    #[test]
    fn square_constant_term_forces_divisibility() {
        // p² | f(0) makes p divide the index of f(x^ℓ) for ℓ > 1.
        let mut rng = XorShift(0xF0CA_CC1A);
        let primes = [2u64, 3, 5];
        for _ in 0..100 {
            let p = primes[(rng.next() % primes.len() as u64) as usize];
            let p_big = BigUint::from(p);
            let d = (rng.next() % 3 + 1) as usize;
            // Random monic f with constant term a nonzero multiple of p².
            let f = rng.monic_poly(d, 9);
            let mut c0 = BigInt::from((p * p) as i64) * BigInt::from(rng.signed(3));
            if c0.is_zero() {
                c0 = BigInt::from((p * p) as i64);
            }
            let mut coeffs = f.coeffs().to_vec();
            coeffs[0] = c0;
            let f = IntPoly::from_coeffs(coeffs);
            for ell in [2u64, 3] {
                let comp = f.compose_power(ell).unwrap();
                assert!(
                    divides_index(&comp, &p_big).unwrap().divides,
                    "f = {f}, p = {p}, ell = {ell}"
                );
            }
        }
    }

    #[test]
    fn composition_membership_equivalence_under_multiple_factor() {
        // Given f ∈ ⟨p, g²⟩: f ∈ ⟨p,g⟩² ⟺ f(x^p) ∈ ⟨p,g⟩².
        let mut rng = XorShift(0x7347_1111);
        let primes = [2u64, 3, 5];
        let mut done = 0;
        while done < 200 {
            let s = random_spec(&mut rng, &primes);
            let q = rng.monic_poly((rng.next() % 2) as usize, 4);
            let r = IntPoly::from_coeffs(
                (0..(rng.next() % 4 + 1) as usize)
                    .map(|_| BigInt::from(rng.signed(9)))
                    .collect(),
            );
            let p_int = BigInt::from(s.prime().clone());
            let f = &(&(s.generator() * s.generator()) * &q) + &r.mul_scalar(&p_int);
            if f.is_zero() || !f.leading_coeff().map_or(false, |c| c.is_one()) {
                continue;
            }
            let p_u64: u64 = s.prime().clone().try_into().unwrap();
            let comp = f.compose_power(p_u64).unwrap();
            assert_eq!(
                in_maximal_square(&f, &s).unwrap(),
                in_maximal_square(&comp, &s).unwrap(),
                "f = {f}, p = {}, g = {}",
                s.prime(),
                s.generator()
            );
            done += 1;
        }
    }
}
