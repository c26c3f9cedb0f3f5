//! Exact-arithmetic decision procedures for monogenity of power compositional
//! polynomials.
//!
//! A monic irreducible `f` with a root `θ` generates an order `Z[θ]` inside the
//! ring of integers of `Q(θ)`; `f` is *monogenic* when that order is the whole
//! ring. For compositions `f(x^k)` this crate decides monogenity through three
//! cheap conditions — monogenity of `f` itself, a per-prime coprimality test on
//! the Frobenius defect `(f(x^p) - f(x)^p)/p`, and squarefreeness of `f(0)` —
//! and cross-validates them against a direct maximal-ideal (Dedekind) test on
//! the composed polynomial.
//!
//! The crate is organized around the pipeline's layers:
//!
//! * [`intfactor`] — integer factorization with an effort budget,
//!   squarefreeness and radicals, modular exponentiation.
//! * [`zpoly`] — exact polynomials over the integers: resultants through the
//!   subresultant remainder sequence, discriminants, compositions `f(x^k)`.
//! * [`modpoly`] — polynomial arithmetic and complete factorization modulo a
//!   prime, plus the Frobenius defect computed in arithmetic modulo `p²`.
//! * [`ideals`] — membership of `f` in `⟨p, g²⟩`, `⟨p², g⟩` and `⟨p, g⟩²`, and
//!   the per-prime index-divisibility test in two independent formulations.
//! * [`irreducibility`] — irreducibility certificates for `f` and `f(x^k)`.
//! * [`monogenity`] — the decision pipelines and obstruction scans.
//! * [`families`] — specialized verdicts for parametric families with cheaper
//!   criteria than the generic pipeline.
//!
//! All arithmetic is exact; no floating point is used anywhere. Every
//! operation is a pure function of its inputs and safe for concurrent use.

pub mod families;
pub mod ideals;
pub mod intfactor;
pub mod irreducibility;
pub mod modpoly;
pub mod monogenity;
pub mod zpoly;

mod error;

pub use error::Error;

#[cfg(test)]
pub(crate) mod testutil {
    use crate::zpoly::IntPoly;
    use num_bigint::BigInt;

    /// Deterministic xorshift64 generator for reproducible test inputs.
    pub struct XorShift(pub u64);

    impl XorShift {
        pub fn next(&mut self) -> u64 {
            self.0 ^= self.0 << 13;
            self.0 ^= self.0 >> 7;
            self.0 ^= self.0 << 17;
            self.0
        }

        /// Uniform-ish value in `[-bound, bound]`.
        pub fn signed(&mut self, bound: u64) -> i64 {
            (self.next() % (2 * bound + 1)) as i64 - bound as i64
        }

        /// Random polynomial of exactly the given degree, |coeffs| ≤ bound.
        pub fn poly_exact_degree(&mut self, degree: usize, bound: u64) -> IntPoly {
            loop {
                let coeffs: Vec<BigInt> =
                    (0..=degree).map(|_| BigInt::from(self.signed(bound))).collect();
                let p = IntPoly::from_coeffs(coeffs);
                if p.degree() == Some(degree) {
                    return p;
                }
            }
        }

        /// Random monic polynomial of the given degree, |coeffs| ≤ bound.
        pub fn monic_poly(&mut self, degree: usize, bound: u64) -> IntPoly {
            let mut coeffs: Vec<BigInt> =
                (0..degree).map(|_| BigInt::from(self.signed(bound))).collect();
            coeffs.push(BigInt::from(1));
            IntPoly::from_coeffs(coeffs)
        }
    }
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

// The book chapters double as doctests so the narrative guide can never
// drift from the actual API. `cargo test --doc` runs every fenced snippet.
#[cfg(any())]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub struct Introduction;
    #[doc = include_str!("../../../book/src/integers.md")]
    pub struct Integers;
    #[doc = include_str!("../../../book/src/polynomials.md")]
    pub struct Polynomials;
    #[doc = include_str!("../../../book/src/modular.md")]
    pub struct Modular;
    #[doc = include_str!("../../../book/src/ideal-membership.md")]
    pub struct IdealMembership;
    #[doc = include_str!("../../../book/src/deciding-monogenity.md")]
    pub struct DecidingMonogenity;
    #[doc = include_str!("../../../book/src/families.md")]
    pub struct Families;
}
