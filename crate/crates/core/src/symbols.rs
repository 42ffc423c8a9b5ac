//! The quintic power residue symbol and the splitting behaviour of primes of
//! Q(ζ₅) in Kummer extensions Q(ζ₅, ⁵√θ).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::cyclotomic::{self, CycInt};
use crate::error::{Error, Result};
use crate::primes::{self, PrimeElement, PrimeKind};

/// The exponent j with (a/π)₅ = ζʲ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SymbolValue(u8);

impl SymbolValue {
    pub fn new(exponent: u8) -> Self {
        SymbolValue(exponent % 5)
    }

    pub fn exponent(self) -> u8 {
        self.0
    }

    /// (a/π)₅ = 1, i.e. a is a 5th power modulo π.
    pub fn is_trivial(self) -> bool {
        self.0 == 0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DecompositionType {
    Split,
    Inert,
    Ramified,
}

/// (a/π)₅ for a split prime π, via Euler's criterion a^((p−1)/5) in Z/p.
pub fn quintic_symbol(a: &CycInt, pi: &PrimeElement) -> Result<SymbolValue> {
    let (p, r) = match (pi.kind, pi.root) {
        (PrimeKind::Split { p }, Some(r)) => (p, r),
        _ => return Err(Error::NonSplitPrime),
    };
    let abar = primes::residue_field_reduce(a, pi)?;
    if abar == 0 {
        return Err(Error::SymbolUndefined);
    }
    let s = primes::mod_pow(abar, (p - 1) / 5, p);
    let j = (0..5u8)
        .find(|&j| primes::mod_pow(r, j as u64, p) == s)
        .expect("a^((p−1)/5) is a 5th root of unity mod p");
    Ok(SymbolValue(j))
}

/// x^e computed with coordinates reduced modulo the rational integer m.
fn pow_mod_rational(x: &CycInt, mut e: BigInt, m: &BigInt) -> CycInt {
    let reduce = |y: CycInt| CycInt::from_coords(y.coords().clone().map(|c| c.mod_floor(m)));
    let mut base = reduce(x.clone());
    let mut acc = CycInt::one();
    let two = BigInt::from(2);
    while !e.is_zero() {
        if e.is_odd() {
            acc = reduce(&acc * &base);
        }
        e /= &two;
        if !e.is_zero() {
            base = reduce(&base * &base);
        }
    }
    acc
}

/// How the prime `at` of Q(ζ₅) decomposes in Q(ζ₅, ⁵√θ).
///
/// Away from λ: ramified when the valuation of θ is prime to 5, otherwise
/// split exactly when the π-free part of θ is a 5th power modulo π. At λ
/// (which divides 1 − ζ exactly once) the θ must first be made prime to λ;
/// it splits when θ ≡ X⁵ (mod λ⁶) is solvable, is inert when only
/// θ ≡ X⁵ (mod λ⁵) is, and ramifies otherwise.
pub fn decomposition_type(theta: &CycInt, at: &PrimeElement) -> Result<DecompositionType> {
    if theta.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let (v, rest) = primes::valuation(theta, at)?;
    if v % 5 != 0 {
        return Ok(DecompositionType::Ramified);
    }
    match at.kind {
        PrimeKind::Split { .. } => Ok(if quintic_symbol(&rest, at)?.is_trivial() {
            DecompositionType::Split
        } else {
            DecompositionType::Inert
        }),
        PrimeKind::Inert { q } => {
            // residue field F_{q⁴}: rest is a 5th power iff rest^((q⁴−1)/5) ≡ 1 (mod q)
            let qb = BigInt::from(q);
            let e = (qb.pow(4) - BigInt::one()) / BigInt::from(5);
            let s = pow_mod_rational(&rest, e, &qb);
            Ok(if s.is_one() {
                DecompositionType::Split
            } else {
                DecompositionType::Inert
            })
        }
        PrimeKind::Lambda => {
            if cyclotomic::fifth_power_solvable_mod_lambda(&rest, 6)? {
                Ok(DecompositionType::Split)
            } else if cyclotomic::fifth_power_solvable_mod_lambda(&rest, 5)? {
                Ok(DecompositionType::Inert)
            } else {
                Ok(DecompositionType::Ramified)
            }
        }
    }
}
