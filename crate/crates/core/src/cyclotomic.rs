//! Exact arithmetic in the ring of integers Z[ζ] of Q(ζ), ζ a primitive 5th root of unity.
//!
//! Elements are stored in the power basis {1, ζ, ζ², ζ³}; the relation
//! ζ⁴ = −1 − ζ − ζ² − ζ³ keeps the representation canonical. The ring is
//! norm-Euclidean, and λ = 1 − ζ generates the unique prime above 5 with
//! residue field F₅, so residues modulo λᵏ have a unique base-λ expansion
//! with digits in 0..5.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest λ-adic precision accepted by [`fifth_power_solvable_mod_lambda`].
pub const MAX_SOLVABILITY_PRECISION: u32 = 8;

/// An element c₀ + c₁ζ + c₂ζ² + c₃ζ³ of Z[ζ₅].
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct CycInt {
    c: [BigInt; 4],
}

impl CycInt {
    pub fn new(
        c0: impl Into<BigInt>,
        c1: impl Into<BigInt>,
        c2: impl Into<BigInt>,
        c3: impl Into<BigInt>,
    ) -> Self {
        CycInt {
            c: [c0.into(), c1.into(), c2.into(), c3.into()],
        }
    }

    pub fn from_coords(c: [BigInt; 4]) -> Self {
        CycInt { c }
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        CycInt::new(n, 0, 0, 0)
    }

    pub fn zero() -> Self {
        CycInt::default()
    }

    pub fn one() -> Self {
        CycInt::from_int(1)
    }

    pub fn zeta() -> Self {
        CycInt::new(0, 1, 0, 0)
    }

    /// λ = 1 − ζ.
    pub fn lambda() -> Self {
        CycInt::new(1, -1, 0, 0)
    }

    /// ζᵏ for any integer k.
    pub fn zeta_pow(k: i64) -> Self {
        let mut e = [0i64; 5];
        e[k.rem_euclid(5) as usize] = 1;
        CycInt::from_cyclic(e.map(BigInt::from))
    }

    pub fn coords(&self) -> &[BigInt; 4] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.c[1..].iter().all(Zero::is_zero)
    }

    /// The rational integer this element equals, if it lies in Z.
    pub fn as_rational(&self) -> Option<&BigInt> {
        self.c[1..].iter().all(Zero::is_zero).then_some(&self.c[0])
    }

    /// Reduce a vector of coefficients of 1, ζ, …, ζ⁴ to the power basis.
    fn from_cyclic(e: [BigInt; 5]) -> Self {
        let [e0, e1, e2, e3, e4] = e;
        CycInt {
            c: [&e0 - &e4, &e1 - &e4, &e2 - &e4, &e3 - &e4],
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        CycInt {
            c: [
                &self.c[0] * k,
                &self.c[1] * k,
                &self.c[2] * k,
                &self.c[3] * k,
            ],
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = CycInt::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// τʲ, the automorphism ζ ↦ ζ^(2ʲ); τ has order 4 and τ² is complex conjugation.
    pub fn galois(&self, j: u32) -> Self {
        let m = [1usize, 2, 4, 3][(j % 4) as usize];
        let mut e: [BigInt; 5] = Default::default();
        for (i, ci) in self.c.iter().enumerate() {
            e[(i * m) % 5] += ci;
        }
        CycInt::from_cyclic(e)
    }

    /// Complex conjugation ζ ↦ ζ⁴ (= τ²).
    pub fn conj(&self) -> Self {
        self.galois(2)
    }

    /// τ(x)·τ²(x)·τ³(x), so that x · cofactor(x) = N(x).
    pub fn norm_cofactor(&self) -> Self {
        let t1 = self.galois(1);
        let t2 = self.galois(2);
        let t3 = self.galois(3);
        &(&t1 * &t2) * &t3
    }

    /// N(x) = Π τʲ(x), a non-negative rational integer.
    pub fn norm(&self) -> BigInt {
        let prod = self * &self.norm_cofactor();
        debug_assert!(prod.c[1..].iter().all(Zero::is_zero));
        prod.c[0].clone()
    }

    pub fn is_unit(&self) -> bool {
        self.norm().abs().is_one()
    }

    /// Inverse of a unit, `None` if `self` is not a unit.
    pub fn unit_inverse(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_one() {
            Some(self.norm_cofactor())
        } else if n == BigInt::from(-1) {
            Some(-self.norm_cofactor())
        } else {
            None
        }
    }

    /// `self / d` when the quotient lies in Z[ζ].
    pub fn exact_div(&self, d: &CycInt) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if let Some(r) = d.as_rational() {
            let mut out: [BigInt; 4] = Default::default();
            for (o, ci) in out.iter_mut().zip(&self.c) {
                let (q, rem) = ci.div_rem(r);
                if !rem.is_zero() {
                    return None;
                }
                *o = q;
            }
            return Some(CycInt { c: out });
        }
        let n = d.norm();
        let num = self * &d.norm_cofactor();
        let mut out: [BigInt; 4] = Default::default();
        for (o, ci) in out.iter_mut().zip(&num.c) {
            let (q, rem) = ci.div_rem(&n);
            if !rem.is_zero() {
                return None;
            }
            *o = q;
        }
        Some(CycInt { c: out })
    }

    pub fn is_divisible_by(&self, d: &CycInt) -> bool {
        self.exact_div(d).is_some()
    }

    /// Euclidean division: `self = q·b + r` with N(r) < N(b).
    ///
    /// The quotient is the coordinatewise rounding of self/b; when that misses,
    /// the 81 neighbours q + (δ₀, δ₁, δ₂, δ₃), δᵢ ∈ {−1, 0, 1}, are searched for
    /// the remainder of least norm (then radius 2, which has never been needed).
    pub fn divmod(&self, b: &CycInt) -> Result<(CycInt, CycInt)> {
        if b.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let nb = b.norm();
        let num = self * &b.norm_cofactor();
        let q = CycInt {
            c: num.c.clone().map(|ci| round_div(&ci, &nb)),
        };
        let r = self - &(&q * b);
        if r.norm() < nb {
            return Ok((q, r));
        }

        for radius in 1..=2i64 {
            let width = 2 * radius + 1;
            let mut best: Option<(BigInt, CycInt, CycInt)> = None;
            for code in 0..width.pow(4) {
                let mut off = [0i64; 4];
                let mut k = code;
                for o in off.iter_mut() {
                    *o = k % width - radius;
                    k /= width;
                }
                let cand = &q + &CycInt::new(off[0], off[1], off[2], off[3]);
                let rem = self - &(&cand * b);
                let nr = rem.norm();
                if best.as_ref().is_none_or(|(bn, _, _)| nr < *bn) {
                    best = Some((nr, cand, rem));
                }
            }
            let (nr, q, r) = best.expect("offset search is non-empty");
            if nr < nb {
                return Ok((q, r));
            }
        }
        unreachable!("Z[ζ₅] is norm-Euclidean; no quotient within distance 2 of the rounding")
    }

    /// Reduction modulo λ: the image in the residue field F₅ (ζ ↦ 1).
    pub fn lambda_residue(&self) -> u8 {
        let s: BigInt = self.c.iter().sum();
        s.mod_floor(&BigInt::from(5)).to_u8().expect("residue < 5")
    }

    /// `self / λ` when λ divides `self`.
    pub fn div_lambda(&self) -> Option<Self> {
        // (1 − ζ)(y₀ + y₁ζ + y₂ζ² + y₃ζ³) has coordinates
        // (y₀ + y₃, y₁ − y₀ + y₃, y₂ − y₁ + y₃, 2y₃ − y₂).
        let s: BigInt = self.c.iter().sum();
        let (y3, rem) = s.div_rem(&BigInt::from(5));
        if !rem.is_zero() {
            return None;
        }
        let y0 = &self.c[0] - &y3;
        let y1 = &self.c[1] + &y0 - &y3;
        let y2 = &self.c[2] + &y1 - &y3;
        Some(CycInt {
            c: [y0, y1, y2, y3],
        })
    }

    /// Exponent of λ in `self`; `None` for zero.
    pub fn lambda_valuation(&self) -> Option<u32> {
        if self.is_zero() {
            return None;
        }
        let mut v = 0;
        let mut x = self.clone();
        while let Some(y) = x.div_lambda() {
            x = y;
            v += 1;
        }
        Some(v)
    }

    /// The expansion x ≡ Σ dᵢλⁱ (mod λᵏ), dᵢ ∈ {0, …, 4}.
    pub fn lambda_expand(&self, k: u32) -> LambdaExpansion {
        let mut digits = Vec::with_capacity(k as usize);
        let mut x = self.clone();
        for _ in 0..k {
            let d = x.lambda_residue();
            digits.push(d);
            x = (&x - &CycInt::from_int(d))
                .div_lambda()
                .expect("λ divides x − (x mod λ)");
        }
        LambdaExpansion { digits }
    }
}

/// Nearest integer to num/den (den > 0), halves rounded up.
fn round_div(num: &BigInt, den: &BigInt) -> BigInt {
    let two = BigInt::from(2);
    (num * &two + den).div_floor(&(den * &two))
}

/// gcd in Z[ζ₅] by the Euclidean algorithm. The result is defined up to a unit.
pub fn gcd(a: &CycInt, b: &CycInt) -> Result<CycInt> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::GcdOfZeros);
    }
    let mut x = a.clone();
    let mut y = b.clone();
    while !y.is_zero() {
        let (_, r) = x.divmod(&y)?;
        x = y;
        y = r;
    }
    Ok(x)
}

/// True iff x ≡ y (mod λᵏ).
pub fn congruent_mod_lambda_pow(x: &CycInt, y: &CycInt, k: u32) -> bool {
    let mut d = x - y;
    for _ in 0..k {
        match d.div_lambda() {
            Some(q) => d = q,
            None => return false,
        }
    }
    true
}

/// Decide whether X⁵ ≡ θ (mod λᵏ) has a solution by enumerating the residues
/// of λ-units modulo λᵏ.
pub fn fifth_power_solvable_mod_lambda(theta: &CycInt, k: u32) -> Result<bool> {
    if k == 0 || k > MAX_SOLVABILITY_PRECISION {
        return Err(Error::LambdaPrecision(k));
    }
    if theta.lambda_residue() == 0 {
        return Err(Error::DivisibleByLambda);
    }
    let lambda = CycInt::lambda();
    let powers: Vec<CycInt> = (0..k).map(|i| lambda.pow(i)).collect();
    let tail = 5u64.pow(k - 1);
    for d0 in 1..5u8 {
        for code in 0..tail {
            let mut x = CycInt::from_int(d0);
            let mut c = code;
            for p in &powers[1..] {
                let d = c % 5;
                c /= 5;
                if d != 0 {
                    x += &p.scale(&BigInt::from(d));
                }
            }
            if congruent_mod_lambda_pow(&x.pow(5), theta, k) {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Base-λ digits of a residue class modulo λᵏ.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LambdaExpansion {
    digits: Vec<u8>,
}

impl LambdaExpansion {
    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// All digits zero, i.e. λᵏ divides the expanded element.
    pub fn is_zero(&self) -> bool {
        self.digits.iter().all(|&d| d == 0)
    }

    /// Σ dᵢλⁱ as an element of Z[ζ].
    pub fn reassemble(&self) -> CycInt {
        let lambda = CycInt::lambda();
        let mut acc = CycInt::zero();
        for &d in self.digits.iter().rev() {
            acc = &(&acc * &lambda) + &CycInt::from_int(d);
        }
        acc
    }
}

impl fmt::Debug for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "CycInt({}, {}, {}, {})",
            self.c[0], self.c[1], self.c[2], self.c[3]
        )
    }
}

impl fmt::Display for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const MONO: [&str; 4] = ["", "ζ", "ζ²", "ζ³"];
        let mut wrote = false;
        for (i, ci) in self.c.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            let mag = ci.abs();
            if wrote {
                f.write_str(if ci.is_negative() { " − " } else { " + " })?;
            } else if ci.is_negative() {
                f.write_str("−")?;
            }
            if i == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            f.write_str(MONO[i])?;
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl Serialize for CycInt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(4))?;
        for ci in &self.c {
            match ci.to_i64() {
                Some(v) => seq.serialize_element(&v)?,
                None => seq.serialize_element(&ci.to_string())?,
            }
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for CycInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Coord {
            Int(i64),
            Text(String),
        }

        struct CoordsVisitor;
        impl<'de> Visitor<'de> for CoordsVisitor {
            type Value = CycInt;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("four integer coordinates")
            }

            fn visit_seq<A: SeqAccess<'de>>(
                self,
                mut seq: A,
            ) -> std::result::Result<CycInt, A::Error> {
                let mut c: [BigInt; 4] = Default::default();
                for (i, slot) in c.iter_mut().enumerate() {
                    let coord: Coord = seq
                        .next_element()?
                        .ok_or_else(|| de::Error::invalid_length(i, &self))?;
                    *slot = match coord {
                        Coord::Int(v) => BigInt::from(v),
                        Coord::Text(t) => t.parse().map_err(de::Error::custom)?,
                    };
                }
                if seq.next_element::<de::IgnoredAny>()?.is_some() {
                    return Err(de::Error::invalid_length(5, &self));
                }
                Ok(CycInt { c })
            }
        }

        d.deserialize_seq(CoordsVisitor)
    }
}

impl Add<&CycInt> for &CycInt {
    type Output = CycInt;
    fn add(self, rhs: &CycInt) -> CycInt {
        CycInt {
            c: [
                &self.c[0] + &rhs.c[0],
                &self.c[1] + &rhs.c[1],
                &self.c[2] + &rhs.c[2],
                &self.c[3] + &rhs.c[3],
            ],
        }
    }
}

impl Sub<&CycInt> for &CycInt {
    type Output = CycInt;
    fn sub(self, rhs: &CycInt) -> CycInt {
        CycInt {
            c: [
                &self.c[0] - &rhs.c[0],
                &self.c[1] - &rhs.c[1],
                &self.c[2] - &rhs.c[2],
                &self.c[3] - &rhs.c[3],
            ],
        }
    }
}

impl Mul<&CycInt> for &CycInt {
    type Output = CycInt;
    fn mul(self, rhs: &CycInt) -> CycInt {
        // Multiply in Z[x]/(x⁵ − 1), then fold ζ⁴ back into the basis.
        let mut e: [BigInt; 5] = Default::default();
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.c.iter().enumerate() {
                if !b.is_zero() {
                    e[(i + j) % 5] += a * b;
                }
            }
        }
        CycInt::from_cyclic(e)
    }
}

impl Neg for &CycInt {
    type Output = CycInt;
    fn neg(self) -> CycInt {
        CycInt {
            c: [-&self.c[0], -&self.c[1], -&self.c[2], -&self.c[3]],
        }
    }
}

impl Neg for CycInt {
    type Output = CycInt;
    fn neg(self) -> CycInt {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident $tra:ident $ma:ident),*) => {$(
        impl $tr<CycInt> for CycInt {
            type Output = CycInt;
            fn $m(self, rhs: CycInt) -> CycInt { (&self).$m(&rhs) }
        }
        impl $tr<&CycInt> for CycInt {
            type Output = CycInt;
            fn $m(self, rhs: &CycInt) -> CycInt { (&self).$m(rhs) }
        }
        impl $tr<CycInt> for &CycInt {
            type Output = CycInt;
            fn $m(self, rhs: CycInt) -> CycInt { self.$m(&rhs) }
        }
        impl $tra<&CycInt> for CycInt {
            fn $ma(&mut self, rhs: &CycInt) { *self = (&*self).$m(rhs); }
        }
        impl $tra<CycInt> for CycInt {
            fn $ma(&mut self, rhs: CycInt) { *self = (&*self).$m(&rhs); }
        }
    )*};
}

forward_owned!(Add add AddAssign add_assign, Sub sub SubAssign sub_assign, Mul mul MulAssign mul_assign);

impl From<i64> for CycInt {
    fn from(n: i64) -> Self {
        CycInt::from_int(n)
    }
}

impl From<BigInt> for CycInt {
    fn from(n: BigInt) -> Self {
        CycInt::from_int(n)
    }
}
