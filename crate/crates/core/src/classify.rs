//! Sorting a radicand n into one of the three shapes for which Q(⁵√n, ζ₅)
//! can have a 5-class group of type (5,5) made of ambiguous classes:
//!
//! * Case 1: n = pᵉ with p ≡ 1 (mod 25);
//! * Case 2: n = pᵉq with p ≡ 1 (mod 5), p ≢ 1 (mod 25), q ≡ ±2 (mod 5),
//!   q ≢ ±7 (mod 25) and n ≡ ±1, ±7 (mod 25);
//! * Case 3: n = 5ᵉp with p ≡ 1 (mod 5), p ≢ 1 (mod 25).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Trial division stops at this divisor. A cofactor below its square is prime.
pub const TRIAL_DIVISION_BOUND: u64 = 10_000_000;

/// ±1, ±7 modulo 25.
pub const PRIMARY_RESIDUES_MOD_25: [u64; 4] = [1, 7, 18, 24];

pub fn is_primary_mod_25(n: u64) -> bool {
    PRIMARY_RESIDUES_MOD_25.contains(&(n % 25))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RadicandCase {
    Case1,
    Case2,
    Case3,
    NoMatch,
}

impl RadicandCase {
    pub fn name(self) -> &'static str {
        match self {
            RadicandCase::Case1 => "case1",
            RadicandCase::Case2 => "case2",
            RadicandCase::Case3 => "case3",
            RadicandCase::NoMatch => "no_match",
        }
    }

    /// The shape in words, e.g. "n = p^e q".
    pub fn shape(self) -> &'static str {
        match self {
            RadicandCase::Case1 => "n = p^e, p ≡ 1 (mod 25)",
            RadicandCase::Case2 => "n = p^e q ≡ ±1, ±7 (mod 25)",
            RadicandCase::Case3 => "n = 5^e p ≢ ±1, ±7 (mod 25)",
            RadicandCase::NoMatch => "none of the three shapes",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RadicandClass {
    pub n: u64,
    pub case: RadicandCase,
    /// The split prime p ≡ 1 (mod 5).
    pub p: Option<u64>,
    /// The inert prime q of Case 2.
    pub q: Option<u64>,
    /// Exponent of p (Cases 1, 2) or of 5 (Case 3).
    pub e: Option<u32>,
    pub residue_mod_25: u64,
    pub factorization: Vec<(u64, u32)>,
    /// First failed condition, for NoMatch.
    pub reason: Option<String>,
}

impl RadicandClass {
    /// n recomputed from (p, q, e); None for NoMatch.
    pub fn reconstruct(&self) -> Option<u64> {
        let (p, e) = (self.p?, self.e?);
        match self.case {
            RadicandCase::Case1 => p.checked_pow(e),
            RadicandCase::Case2 => p.checked_pow(e)?.checked_mul(self.q?),
            RadicandCase::Case3 => 5u64.checked_pow(e)?.checked_mul(p),
            RadicandCase::NoMatch => None,
        }
    }
}

/// Prime factorization by trial division, in increasing order of primes.
pub fn factorize(n: u64) -> Result<Vec<(u64, u32)>> {
    if n <= 1 {
        return Err(Error::RadicandTooSmall(n));
    }
    let mut out = Vec::new();
    let mut m = n;
    let mut push = |d: u64, m: &mut u64| {
        let mut e = 0;
        while (*m).is_multiple_of(d) {
            *m /= d;
            e += 1;
        }
        if e > 0 {
            out.push((d, e));
        }
    };
    push(2, &mut m);
    push(3, &mut m);
    let mut d = 5u64;
    while d.saturating_mul(d) <= m {
        if d > TRIAL_DIVISION_BOUND {
            return Err(Error::FactorizationBound(n));
        }
        push(d, &mut m);
        push(d + 2, &mut m);
        d += 6;
    }
    if m > 1 {
        out.push((m, 1));
    }
    Ok(out)
}

pub fn classify_radicand(n: u64) -> Result<RadicandClass> {
    let factorization = factorize(n)?;
    if let Some(&(prime, exponent)) = factorization.iter().find(|f| f.1 >= 5) {
        return Err(Error::NotFifthPowerFree { n, prime, exponent });
    }
    let mut class = RadicandClass {
        n,
        case: RadicandCase::NoMatch,
        p: None,
        q: None,
        e: None,
        residue_mod_25: n % 25,
        factorization: factorization.clone(),
        reason: None,
    };
    match decide(n, &factorization) {
        Ok((case, p, q, e)) => {
            class.case = case;
            class.p = Some(p);
            class.q = q;
            class.e = Some(e);
        }
        Err(reason) => class.reason = Some(reason),
    }
    Ok(class)
}

type Decided = (RadicandCase, u64, Option<u64>, u32);

fn decide(n: u64, f: &[(u64, u32)]) -> std::result::Result<Decided, String> {
    let split_not_25 = |p: u64| p % 5 == 1 && p % 25 != 1;
    match f {
        [(p, e)] => {
            if *p % 25 != 1 {
                return Err(format!("prime power of {p} with {p} ≢ 1 (mod 25)"));
            }
            if !is_primary_mod_25(n) {
                return Err(format!("n ≡ {} (mod 25) is not ±1, ±7", n % 25));
            }
            Ok((RadicandCase::Case1, *p, None, *e))
        }
        [(5, e), (p, 1)] | [(p, 1), (5, e)] => {
            if !split_not_25(*p) {
                return Err(format!("{p} is not ≡ 1 (mod 5) with {p} ≢ 1 (mod 25)"));
            }
            Ok((RadicandCase::Case3, *p, None, *e))
        }
        [(a, ea), (b, eb)] => {
            // p^e q in either order
            let (p, e, q) = if *eb == 1 && split_not_25(*a) {
                (*a, *ea, *b)
            } else if *ea == 1 && split_not_25(*b) {
                (*b, *eb, *a)
            } else {
                return Err(
                    "no factor p ≡ 1 (mod 5), p ≢ 1 (mod 25) with a simple cofactor".into(),
                );
            };
            if !matches!(q % 5, 2 | 3) {
                return Err(format!("{q} is not ≡ ±2 (mod 5)"));
            }
            if matches!(q % 25, 7 | 18) {
                return Err(format!("{q} ≡ ±7 (mod 25)"));
            }
            if !is_primary_mod_25(n) {
                return Err(format!("n ≡ {} (mod 25) is not ±1, ±7", n % 25));
            }
            Ok((RadicandCase::Case2, p, Some(q), e))
        }
        _ => Err(format!("{} distinct prime factors", f.len())),
    }
}
