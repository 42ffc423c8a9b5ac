//! Factorization of rational primes in Z[ζ₅] and normalization of associates.
//!
//! A prime p ≡ 1 (mod 5) splits as π₁π₂π₃π₄. The labeling is fixed by taking
//! the smallest root r of Φ₅ modulo p, setting π₁ = gcd(p, ζ − r) and
//! π₁₊ⱼ = τʲ(π₁). With this convention π₃ = τ²(π₁) is the complex conjugate
//! of π₁, and π₄ = τ²(π₂).

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::cyclotomic::{self, CycInt};
use crate::error::{Error, Result};

/// Bound B on |t| in the unit search ±ζᵃ(1+ζ)ᵗ.
pub const UNIT_EXPONENT_BOUND: i32 = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PrimeKind {
    Split { p: u64 },
    Inert { q: u64 },
    Lambda,
}

/// A prime element of Z[ζ₅] with its position in the labeling π₁..π₅, λ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeElement {
    pub value: CycInt,
    pub kind: PrimeKind,
    /// 1..=4 for split factors, 5 for an inert rational prime, 0 for λ.
    pub label: u8,
    /// Image of ζ in the residue field Z/p, for split primes.
    pub root: Option<u64>,
}

impl PrimeElement {
    pub fn rational_below(&self) -> u64 {
        match self.kind {
            PrimeKind::Split { p } => p,
            PrimeKind::Inert { q } => q,
            PrimeKind::Lambda => 5,
        }
    }

    pub fn is_split(&self) -> bool {
        matches!(self.kind, PrimeKind::Split { .. })
    }

    pub fn lambda() -> Self {
        PrimeElement {
            value: CycInt::lambda(),
            kind: PrimeKind::Lambda,
            label: 0,
            root: None,
        }
    }

    /// The same prime ideal with generator `u·self.value` for a unit u.
    pub fn with_generator(&self, value: CycInt) -> Self {
        debug_assert!(value.exact_div(&self.value).is_some_and(|u| u.is_unit()));
        PrimeElement {
            value,
            ..self.clone()
        }
    }

    /// τʲ applied to the generator. For a split prime the stored root moves
    /// with it: x ∈ τʲ(π) iff τ⁻ʲ(x) ∈ π.
    pub fn galois(&self, j: u32) -> Self {
        let root = match (self.kind, self.root) {
            (PrimeKind::Split { p }, Some(r)) => {
                // ζ ↦ r on π means ζ ↦ r^(m⁻¹) on τʲ(π), m = 2ʲ mod 5
                let inv = [1u64, 3, 4, 2][(j % 4) as usize];
                Some(mod_pow(r, inv, p))
            }
            _ => self.root,
        };
        let label = match self.kind {
            PrimeKind::Split { .. } => ((self.label - 1 + j as u8) % 4) + 1,
            _ => self.label,
        };
        PrimeElement {
            value: self.value.galois(j),
            kind: self.kind,
            label,
            root,
        }
    }
}

/// The primes above one rational prime.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplittingData {
    pub factors: Vec<PrimeElement>,
    /// The smallest root r of Φ₅ modulo p (split case only); π₁ reduces ζ ↦ r.
    pub root: Option<u64>,
}

pub fn mod_pow(base: u64, mut exp: u64, m: u64) -> u64 {
    let m128 = m as u128;
    let mut b = (base % m) as u128;
    let mut acc = 1u128 % m128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        exp >>= 1;
    }
    acc as u64
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Distinct prime divisors by trial division (used for p − 1, which is small).
fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn smallest_primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let fs = prime_divisors(p - 1);
    (2..p)
        .find(|&g| fs.iter().all(|&f| mod_pow(g, (p - 1) / f, p) != 1))
        .expect("every prime has a primitive root")
}

/// Factor a rational prime p in Z[ζ₅].
pub fn factor_rational_prime(p: u64) -> Result<SplittingData> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    match p % 5 {
        0 => Ok(SplittingData {
            factors: vec![PrimeElement::lambda()],
            root: None,
        }),
        1 => {
            let g = smallest_primitive_root(p);
            let r0 = mod_pow(g, (p - 1) / 5, p);
            let r = (1..5).map(|i| mod_pow(r0, i, p)).min().expect("four roots");
            let pi = cyclotomic::gcd(
                &CycInt::from_int(p),
                &CycInt::new(-BigInt::from(r), 1, 0, 0),
            )?;
            debug_assert_eq!(pi.norm(), BigInt::from(p));
            let pi1 = PrimeElement {
                value: pi,
                kind: PrimeKind::Split { p },
                label: 1,
                root: Some(r),
            };
            let factors = (0..4).map(|j| pi1.galois(j)).collect();
            Ok(SplittingData {
                factors,
                root: Some(r),
            })
        }
        4 => Err(Error::UnsupportedPrime(p)),
        _ => Ok(SplittingData {
            factors: vec![PrimeElement {
                value: CycInt::from_int(p),
                kind: PrimeKind::Inert { q: p },
                label: 5,
                root: None,
            }],
            root: None,
        }),
    }
}

/// Image of x under Z[ζ] → Z[ζ]/π ≅ Z/p, ζ ↦ r.
pub fn residue_field_reduce(x: &CycInt, pi: &PrimeElement) -> Result<u64> {
    let (p, r) = match (pi.kind, pi.root) {
        (PrimeKind::Split { p }, Some(r)) => (p, r),
        _ => return Err(Error::NonSplitPrime),
    };
    let pb = BigInt::from(p);
    let mut acc = 0u128;
    let mut rpow = 1u128;
    for ci in x.coords() {
        let c = ci.mod_floor(&pb).to_u64().expect("reduced below p") as u128;
        acc = (acc + c * rpow) % p as u128;
        rpow = rpow * r as u128 % p as u128;
    }
    Ok(acc as u64)
}

/// One unit ±ζᵃ(1+ζ)ᵗ of the associate search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnitChoice {
    pub negate: bool,
    pub zeta_exp: u8,
    pub eps_exp: i32,
    pub unit: CycInt,
}

/// Units ±ζᵃ(1+ζ)ᵗ, a ∈ 0..5, |t| ≤ bound, ordered by a, then |t| (t ≥ 0
/// first), then sign.
pub fn unit_candidates(bound: i32) -> Vec<UnitChoice> {
    let eps = CycInt::new(1, 1, 0, 0);
    let eps_inv = eps.unit_inverse().expect("1 + ζ is a unit");
    let mut eps_pows = Vec::with_capacity(2 * bound as usize + 1);
    let mut ts = vec![0i32];
    for m in 1..=bound {
        ts.push(m);
        ts.push(-m);
    }
    for &t in &ts {
        let e = if t >= 0 {
            eps.pow(t as u32)
        } else {
            eps_inv.pow((-t) as u32)
        };
        eps_pows.push((t, e));
    }
    let mut out = Vec::with_capacity(5 * eps_pows.len() * 2);
    for a in 0..5u8 {
        let z = CycInt::zeta_pow(a as i64);
        for (t, e) in &eps_pows {
            let u = &z * e;
            for negate in [false, true] {
                out.push(UnitChoice {
                    negate,
                    zeta_exp: a,
                    eps_exp: *t,
                    unit: if negate { -&u } else { u.clone() },
                });
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalizedAssociate {
    pub unit: UnitChoice,
    pub normalized: CycInt,
}

/// Find a unit u with u·π congruent to one of `targets` modulo λᵏ.
pub fn normalize_associate(
    pi: &PrimeElement,
    k: u32,
    targets: &[CycInt],
) -> Result<NormalizedAssociate> {
    if !pi.is_split() {
        return Err(Error::NonSplitPrime);
    }
    if k == 0 || k > 5 {
        return Err(Error::LambdaPrecision(k));
    }
    for unit in unit_candidates(UNIT_EXPONENT_BOUND) {
        let cand = &unit.unit * &pi.value;
        if targets
            .iter()
            .any(|t| cyclotomic::congruent_mod_lambda_pow(&cand, t, k))
        {
            return Ok(NormalizedAssociate {
                unit,
                normalized: cand,
            });
        }
    }
    Err(Error::AssociateNotFound {
        power: k,
        bound: UNIT_EXPONENT_BOUND,
        impossible: !reachable_by_units(&pi.value, k, targets),
    })
}

/// Representatives of the residues modulo λᵏ of the whole unit group
/// ⟨−1, ζ, 1+ζ⟩, found as the closure of {1} under the three generators.
pub fn unit_group_image(k: u32) -> Vec<CycInt> {
    let gens = [
        CycInt::from_int(-1),
        CycInt::zeta(),
        CycInt::new(1, 1, 0, 0),
    ];
    let mut seen: BTreeMap<Vec<u8>, CycInt> = BTreeMap::new();
    seen.insert(
        CycInt::one().lambda_expand(k).digits().to_vec(),
        CycInt::one(),
    );
    let mut frontier = vec![CycInt::one()];
    while let Some(x) = frontier.pop() {
        for g in &gens {
            let y = (&x * g).lambda_expand(k).reassemble();
            let key = y.lambda_expand(k).digits().to_vec();
            if let std::collections::btree_map::Entry::Vacant(e) = seen.entry(key) {
                e.insert(y.clone());
                frontier.push(y);
            }
        }
    }
    seen.into_values().collect()
}

/// Exhaustive test: is some unit multiple of x congruent to a target mod λᵏ?
pub fn reachable_by_units(x: &CycInt, k: u32, targets: &[CycInt]) -> bool {
    let wanted: BTreeSet<Vec<u8>> = targets
        .iter()
        .map(|t| t.lambda_expand(k).digits().to_vec())
        .collect();
    unit_group_image(k)
        .iter()
        .any(|u| wanted.contains((u * x).lambda_expand(k).digits()))
}

/// Exponent of the prime `pi` in `x`, and the cofactor with that power removed.
pub fn valuation(x: &CycInt, pi: &PrimeElement) -> Result<(u32, CycInt)> {
    if x.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let mut v = 0;
    let mut y = x.clone();
    loop {
        let next = match pi.kind {
            PrimeKind::Lambda => y.div_lambda(),
            _ => y.exact_div(&pi.value),
        };
        match next {
            Some(z) => {
                y = z;
                v += 1;
            }
            None => return Ok((v, y)),
        }
    }
}

/// The residues ±1, ±7 that the genus conditions test modulo λ⁵.
pub fn primary_residues() -> [CycInt; 4] {
    [1, 7, 18, 24].map(CycInt::from_int)
}

/// Whether the rational integer n reduces to zero modulo the prime.
pub fn divides_rational(pi: &PrimeElement, n: &BigInt) -> bool {
    match pi.kind {
        PrimeKind::Split { p } | PrimeKind::Inert { q: p } => {
            n.mod_floor(&BigInt::from(p)).is_zero()
        }
        PrimeKind::Lambda => n.mod_floor(&BigInt::from(5)).is_zero(),
    }
}
