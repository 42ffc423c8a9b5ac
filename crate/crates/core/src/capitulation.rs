//! Unramified quintic extensions of k = Q(⁵√n, ζ₅), the six subgroups of the
//! 5-class group C ≅ (5,5), and the admissible capitulation types.
//!
//! Everything here is linear algebra over F₅ on exponent vectors. A word
//! π₁ᵃπ₃ᵇwᶜ (or the class [P₁ᵃP₃ᵇP_wᶜ]) is stored as (a, b, m) where the
//! exponent of w is m·h₁. Since h₁ is a unit mod 5, every projective
//! statement is independent of its value, so the engine works even when no
//! h₁ is known.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::classify::RadicandCase;
use crate::cyclotomic::{self, CycInt};
use crate::error::{Error, Result};
use crate::primes::{self, PrimeElement, PrimeKind, UnitChoice};
use crate::symbols::SymbolValue;

/// Exponent vector over (π₁, π₃, w^h₁), entries mod 5.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Word {
    pub pi1: u8,
    pub pi3: u8,
    /// Exponent of w in multiples of h₁.
    pub w_h1: u8,
}

impl Word {
    pub const fn new(pi1: u8, pi3: u8, w_h1: u8) -> Self {
        Word {
            pi1: pi1 % 5,
            pi3: pi3 % 5,
            w_h1: w_h1 % 5,
        }
    }

    pub fn is_zero(self) -> bool {
        self == Word::new(0, 0, 0)
    }

    pub fn scale(self, k: u8) -> Self {
        let k = k % 5;
        Word::new(self.pi1 * k, self.pi3 * k, self.w_h1 * k)
    }

    pub fn inverse(self) -> Self {
        self.scale(4)
    }

    /// Same extension k(⁵√x) = k(⁵√y): y is a nonzero multiple of x.
    pub fn projectively_eq(self, other: Word) -> bool {
        !self.is_zero() && (1..5).any(|k| self.scale(k) == other)
    }

    /// Representative of the projective class: τ²-symmetric words and words
    /// free of w get leading exponent 1, the rest get w-exponent h₁.
    pub fn normal_form(self) -> Self {
        if self.is_zero() {
            return self;
        }
        let lead = if self.w_h1 != 0 && self.pi1 != self.pi3 {
            self.w_h1
        } else if self.pi1 != 0 {
            self.pi1
        } else if self.pi3 != 0 {
            self.pi3
        } else {
            self.w_h1
        };
        self.scale(inverse_mod5(lead))
    }

    /// Effect of τ² on exponents: π₁ ↔ π₃, w fixed.
    pub fn swap13(self) -> Self {
        Word::new(self.pi3, self.pi1, self.w_h1)
    }

    /// The actual exponent of w once h₁ is fixed.
    pub fn w_exponent(self, h1: u8) -> u8 {
        (self.w_h1 * h1) % 5
    }

    pub fn render(self, basis: Basis, h1: Option<u8>, kind: Rendering) -> String {
        let (a, b, w) = match kind {
            Rendering::Element => ("π₁", "π₃", basis.element_symbol()),
            Rendering::Class => ("P₁", "P₃", basis.class_symbol()),
        };
        let mut s = String::new();
        for (sym, e) in [(a, self.pi1), (b, self.pi3)] {
            if e != 0 {
                s.push_str(sym);
                s.push_str(superscript(e));
            }
        }
        if self.w_h1 != 0 {
            s.push_str(w);
            match h1 {
                Some(h) => s.push_str(superscript(self.w_exponent(h))),
                None if self.w_h1 == 1 => s.push_str("^h₁"),
                None => s.push_str(&format!("^{}h₁", self.w_h1)),
            }
        }
        if s.is_empty() {
            s.push('1');
        }
        match kind {
            Rendering::Element => s,
            Rendering::Class => format!("[{s}]"),
        }
    }
}

fn superscript(e: u8) -> &'static str {
    ["⁰", "", "²", "³", "⁴"][e as usize]
}

/// Product of words, i.e. the sum of exponent vectors.
impl std::ops::Mul for Word {
    type Output = Word;

    fn mul(self, other: Word) -> Word {
        Word::new(
            self.pi1 + other.pi1,
            self.pi3 + other.pi3,
            self.w_h1 + other.w_h1,
        )
    }
}

pub fn inverse_mod5(a: u8) -> u8 {
    match a % 5 {
        1 => 1,
        2 => 3,
        3 => 2,
        4 => 4,
        _ => panic!("0 has no inverse mod 5"),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rendering {
    Element,
    Class,
}

/// Which third prime plays the role of w.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Basis {
    /// Case 1: only π₁, π₃.
    NoW,
    /// Case 2: w = π₅ = q, with prime ideal P₅ above it.
    Inert { q: u64 },
    /// Case 3: w = λ, with prime ideal I above it.
    Lambda,
}

impl Basis {
    pub fn for_case(case: RadicandCase, q: Option<u64>) -> Self {
        match case {
            RadicandCase::Case2 => Basis::Inert { q: q.unwrap_or(0) },
            RadicandCase::Case3 => Basis::Lambda,
            _ => Basis::NoW,
        }
    }

    pub fn element_symbol(self) -> &'static str {
        match self {
            Basis::Lambda => "λ",
            _ => "π₅",
        }
    }

    pub fn class_symbol(self) -> &'static str {
        match self {
            Basis::Lambda => "I",
            _ => "P₅",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Character {
    /// Fixed by τ².
    Plus,
    /// Inverted by τ².
    Minus,
    Mixed,
}

pub fn character(c: Word) -> Character {
    if c.swap13() == c {
        Character::Plus
    } else if c.swap13() == c.inverse() {
        Character::Minus
    } else {
        Character::Mixed
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupDescriptor {
    /// j in H_j, 1..=6.
    pub label: u8,
    pub generator: Word,
    pub character: Character,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionDescriptor {
    /// j in K_j, 1..=6.
    pub label: u8,
    pub candidates: Vec<Word>,
    pub resolved: bool,
}

/// Which τ²-fixed word is K₆, the extension attached to H₆ = C⁻.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum K6Choice {
    /// K₆ = k(⁵√(π₁π₃⁴)).
    #[default]
    MinusWord,
    /// K₆ = k(⁵√(π₁π₃)) in Case 1, k(⁵√(π₁π₃w^2h₁)) otherwise.
    PlusWord,
}

/// The tuple (i₁, ..., i₆): i_j = 0 when all of C capitulates in K_j,
/// otherwise the capitulation kernel in K_j is H_{i_j}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CapitulationType(pub [u8; 6]);

impl CapitulationType {
    pub fn get(&self, position: usize) -> u8 {
        self.0[position - 1]
    }

    /// Exchange positions a and b (1-based).
    pub fn swap_positions(mut self, a: usize, b: usize) -> Self {
        self.0.swap(a - 1, b - 1);
        self
    }
}

impl fmt::Display for CapitulationType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

fn require_engine_case(case: RadicandCase) -> Result<()> {
    if case == RadicandCase::NoMatch {
        Err(Error::NoMatch(0))
    } else {
        Ok(())
    }
}

/// (x₁, x₂) with k₅⁽¹⁾ = k(⁵√x₁, ⁵√x₂), exponents of w relative to h₁.
pub fn generator_words(case: RadicandCase) -> Result<(Word, Word)> {
    require_engine_case(case)?;
    Ok(match case {
        RadicandCase::Case1 => (Word::new(1, 0, 0), Word::new(0, 1, 0)),
        _ => (Word::new(1, 0, 1), Word::new(1, 4, 0)),
    })
}

/// As [`generator_words`], but insisting on a concrete h₁ where w occurs.
pub fn hilbert_class_field_generators(case: RadicandCase, h1: Option<u8>) -> Result<(Word, Word)> {
    let words = generator_words(case)?;
    if case != RadicandCase::Case1 {
        match h1 {
            None => return Err(Error::MissingH1),
            Some(h) if !(1..=4).contains(&h) => return Err(Error::InvalidH1(h)),
            Some(_) => {}
        }
    }
    Ok(words)
}

/// The six intermediate fields k(⁵√y) of k(⁵√x₁, ⁵√x₂)/k, as
/// x₁, x₂, x₁x₂, x₁x₂², x₁x₂³, x₁x₂⁴ in normal form.
pub fn six_extensions(x1: Word, x2: Word) -> Result<[Word; 6]> {
    if x1.is_zero() || x2.is_zero() || x1.projectively_eq(x2) {
        return Err(Error::DependentGenerators);
    }
    Ok([
        x1,
        x2,
        x1 * x2,
        x1 * x2.scale(2),
        x1 * x2.scale(3),
        x1 * x2.scale(4),
    ]
    .map(Word::normal_form))
}

pub fn tau2_orbit(word: Word) -> Word {
    word.swap13().normal_form()
}

/// Generators A of C⁺ and X of C⁻.
pub fn class_group_generators(case: RadicandCase) -> Result<(Word, Word)> {
    require_engine_case(case)?;
    Ok(match case {
        RadicandCase::Case1 => (Word::new(1, 1, 0), Word::new(1, 4, 0)),
        _ => (Word::new(1, 1, 2), Word::new(1, 4, 0)),
    })
}

/// H₁ = ⟨A⟩, H_j = ⟨AX^(j−1)⟩ for j = 2..5, H₆ = ⟨X⟩.
pub fn subgroup_table(case: RadicandCase) -> Result<[SubgroupDescriptor; 6]> {
    let (a, x) = class_group_generators(case)?;
    let gen = |j: u8| match j {
        6 => x,
        _ => a * x.scale(j - 1),
    };
    Ok([1, 2, 3, 4, 5, 6].map(|j| {
        let g = gen(j).normal_form();
        SubgroupDescriptor {
            label: j,
            generator: g,
            character: character(g),
        }
    }))
}

/// Label j of the subgroup H_j = ⟨c⟩, found by writing c = αA + βX.
pub fn subgroup_index(case: RadicandCase, c: Word) -> Result<u8> {
    let (a, x) = class_group_generators(case)?;
    for alpha in 0..5u8 {
        for beta in 0..5u8 {
            if (alpha, beta) != (0, 0) && a.scale(alpha) * x.scale(beta) == c {
                return Ok(if alpha == 0 {
                    6
                } else {
                    1 + beta * inverse_mod5(alpha) % 5
                });
            }
        }
    }
    Err(Error::NotInClassGroup(format!(
        "({}, {}, {})",
        c.pi1, c.pi3, c.w_h1
    )))
}

/// Candidate fields K₁..K₆ attached to H₁..H₆ by class field theory.
///
/// In Case 1 the value of (π₁/π₃)₅ pins down K₂ and K₅; the remaining pairs
/// stay undecided, as do all pairs in Cases 2 and 3.
pub fn correspondence(
    case: RadicandCase,
    symbol_pi1_pi3: Option<SymbolValue>,
) -> Result<[ExtensionDescriptor; 6]> {
    require_engine_case(case)?;
    let w = |a, b, c| Word::new(a, b, c);
    let pair = |label, x: Word, y: Word| ExtensionDescriptor {
        label,
        candidates: vec![x, y],
        resolved: false,
    };
    let single = |label, x: Word| ExtensionDescriptor {
        label,
        candidates: vec![x],
        resolved: true,
    };
    Ok(match case {
        RadicandCase::Case1 => {
            let trivial = symbol_pi1_pi3.is_none_or(SymbolValue::is_trivial);
            let (k2, k5) = if trivial {
                (w(0, 1, 0), w(1, 0, 0))
            } else {
                (w(1, 0, 0), w(0, 1, 0))
            };
            [
                pair(1, w(1, 1, 0), w(1, 4, 0)),
                single(2, k2),
                pair(3, w(1, 2, 0), w(1, 3, 0)),
                pair(4, w(1, 3, 0), w(1, 2, 0)),
                single(5, k5),
                pair(6, w(1, 4, 0), w(1, 1, 0)),
            ]
        }
        _ => [
            pair(1, w(1, 4, 0), w(1, 1, 2)),
            pair(2, w(1, 0, 1), w(0, 1, 1)),
            pair(3, w(2, 4, 1), w(4, 2, 1)),
            pair(4, w(4, 2, 1), w(2, 4, 1)),
            pair(5, w(0, 1, 1), w(1, 0, 1)),
            pair(6, w(1, 1, 2), w(1, 4, 0)),
        ],
    })
}

/// Fix K₁ and K₆ according to `choice`, marking both resolved.
pub fn apply_k6_choice(descriptors: &mut [ExtensionDescriptor; 6], choice: K6Choice) {
    let minus = Word::new(1, 4, 0);
    let (k6, k1) = {
        let other = descriptors[5]
            .candidates
            .iter()
            .copied()
            .find(|c| *c != minus)
            .unwrap_or(minus);
        match choice {
            K6Choice::MinusWord => (minus, other),
            K6Choice::PlusWord => (other, minus),
        }
    };
    descriptors[0].candidates = vec![k1];
    descriptors[0].resolved = true;
    descriptors[5].candidates = vec![k6];
    descriptors[5].resolved = true;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GuaranteedCapitulation {
    pub extension: Word,
    /// The class that becomes principal there: its ideal's 5th power is
    /// generated by the radicand.
    pub class: Word,
    pub subgroup: u8,
}

/// For each of the six fields k(⁵√y), the class whose ideal becomes the
/// principal ideal (⁵√y) there.
pub fn guaranteed_capitulations(case: RadicandCase) -> Result<[GuaranteedCapitulation; 6]> {
    let (x1, x2) = generator_words(case)?;
    let six = six_extensions(x1, x2)?;
    let mut out = [GuaranteedCapitulation {
        extension: six[0],
        class: six[0],
        subgroup: 0,
    }; 6];
    for (slot, y) in out.iter_mut().zip(six) {
        *slot = GuaranteedCapitulation {
            extension: y,
            class: y,
            subgroup: subgroup_index(case, y)?,
        };
    }
    Ok(out)
}

fn tuples(rows: &[[u8; 6]]) -> Vec<CapitulationType> {
    rows.iter().copied().map(CapitulationType).collect()
}

const CASE1_BASE: [[u8; 6]; 12] = [
    [0, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0],
    [0, 2, 0, 0, 5, 0],
    [1, 2, 0, 0, 5, 0],
    [0, 0, 3, 4, 0, 0],
    [0, 0, 4, 3, 0, 0],
    [1, 0, 3, 4, 0, 0],
    [1, 0, 4, 3, 0, 0],
    [0, 2, 3, 4, 5, 0],
    [0, 2, 4, 3, 5, 0],
    [1, 2, 3, 4, 5, 0],
    [1, 2, 4, 3, 5, 0],
];

const CASE2_BASE: [[u8; 6]; 18] = [
    [0, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0],
    [0, 5, 0, 0, 2, 0],
    [0, 2, 0, 0, 5, 0],
    [1, 5, 0, 0, 2, 0],
    [1, 2, 0, 0, 5, 0],
    [0, 5, 4, 3, 2, 0],
    [0, 2, 4, 3, 5, 0],
    [1, 5, 4, 3, 2, 0],
    [1, 2, 4, 3, 5, 0],
    [0, 5, 3, 4, 2, 0],
    [0, 2, 3, 4, 5, 0],
    [1, 5, 3, 4, 2, 0],
    [1, 2, 3, 4, 5, 0],
    [0, 0, 3, 4, 0, 0],
    [0, 0, 4, 3, 0, 0],
    [1, 0, 3, 4, 0, 0],
    [1, 0, 4, 3, 0, 0],
];

/// The other τ²-fixed field is K₆: a nonzero i₁ becomes 6, and i₆ ranges
/// over {0, 1}.
fn plus_word_variant(list: &[CapitulationType]) -> Vec<CapitulationType> {
    let mut out = Vec::new();
    for t in list {
        for i6 in [0, 1] {
            let mut v = t.0;
            if v[0] != 0 {
                v[0] = 6;
            }
            v[5] = i6;
            out.push(CapitulationType(v));
        }
    }
    out
}

fn dedup_in_order(list: Vec<CapitulationType>) -> Vec<CapitulationType> {
    let mut seen = std::collections::HashSet::new();
    list.into_iter().filter(|t| seen.insert(*t)).collect()
}

/// All capitulation types left open by the structure theory, with each braced
/// alternative listed separately.
pub fn possible_types(
    case: RadicandCase,
    symbol_pi1_pi3: Option<SymbolValue>,
    choice: K6Choice,
) -> Result<Vec<CapitulationType>> {
    require_engine_case(case)?;
    let base = match case {
        RadicandCase::Case1 => tuples(&CASE1_BASE),
        _ => tuples(&CASE2_BASE),
    };
    let mut list = match choice {
        K6Choice::MinusWord => base,
        K6Choice::PlusWord => plus_word_variant(&base),
    };
    if case == RadicandCase::Case1 && !symbol_pi1_pi3.is_none_or(SymbolValue::is_trivial) {
        list = list.into_iter().map(|t| t.swap_positions(2, 5)).collect();
    }
    Ok(dedup_in_order(list))
}

/// Positions 2, 5 and 3, 4 are simultaneously zero or nonzero.
pub fn pair_parity_holds(t: &CapitulationType) -> bool {
    (t.get(2) == 0) == (t.get(5) == 0) && (t.get(3) == 0) == (t.get(4) == 0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub capitulation_type: CapitulationType,
    pub position: u8,
    /// Label of the subgroup generated by the class principalized in K_j.
    pub expected: u8,
}

/// Entries i_j ∉ {0, s} where K_j is resolved to k(⁵√y) and the class word y
/// generates H_s.
pub fn consistency_violations(
    case: RadicandCase,
    symbol_pi1_pi3: Option<SymbolValue>,
    choice: K6Choice,
) -> Result<Vec<Violation>> {
    let mut fields = correspondence(case, symbol_pi1_pi3)?;
    apply_k6_choice(&mut fields, choice);
    let mut resolved = Vec::new();
    for f in &fields {
        if f.resolved {
            resolved.push((f.label, subgroup_index(case, f.candidates[0])?));
        }
    }
    let mut out = Vec::new();
    for t in possible_types(case, symbol_pi1_pi3, choice)? {
        for &(j, s) in &resolved {
            let i = t.get(j as usize);
            if i != 0 && i != s {
                out.push(Violation {
                    capitulation_type: t,
                    position: j,
                    expected: s,
                });
            }
        }
    }
    Ok(out)
}

/// A unit and exponent h₁ with u·π₁·w^h₁ ≡ r (mod λ⁵), r ∈ {±1, ±7}.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct H1Witness {
    pub h1: u8,
    pub unit: UnitChoice,
    pub residue: i64,
    pub value: CycInt,
}

impl H1Witness {
    /// Recheck the congruence from scratch.
    pub fn verify(&self, pi1: &PrimeElement, w: &PrimeElement) -> bool {
        let lhs = &(&self.unit.unit * &pi1.value) * &w.value.pow(self.h1 as u32);
        lhs == self.value
            && [1, 7, 18, 24].contains(&self.residue)
            && cyclotomic::congruent_mod_lambda_pow(&lhs, &CycInt::from_int(self.residue), 5)
    }
}

/// Search h ∈ 1..=4 (outer) and units in the order of
/// [`primes::unit_candidates`] (inner) for u·π₁·wʰ ≡ ±1, ±7 (mod λ⁵).
pub fn find_h1(pi1: &PrimeElement, w: &PrimeElement) -> Result<H1Witness> {
    if !pi1.is_split() {
        return Err(Error::NonSplitPrime);
    }
    if matches!(w.kind, PrimeKind::Split { .. }) {
        return Err(Error::H1NotFound {
            reason: "w must be an inert prime or λ".into(),
        });
    }
    if w.kind == PrimeKind::Lambda {
        return Err(Error::H1NotFound {
            reason: "λ divides u·π₁·λʰ for every h ≥ 1, so no such product is a λ-unit".into(),
        });
    }
    let targets = primes::primary_residues();
    let units = primes::unit_candidates(primes::UNIT_EXPONENT_BOUND);
    for h in 1..=4u8 {
        let base = &pi1.value * &w.value.pow(h as u32);
        for unit in &units {
            let cand = &unit.unit * &base;
            for (r, t) in [1i64, 7, 18, 24].iter().zip(&targets) {
                if cyclotomic::congruent_mod_lambda_pow(&cand, t, 5) {
                    return Ok(H1Witness {
                        h1: h,
                        unit: unit.clone(),
                        residue: *r,
                        value: cand,
                    });
                }
            }
        }
    }
    let proven = (1..=4u32)
        .all(|h| !primes::reachable_by_units(&(&pi1.value * &w.value.pow(h)), 5, &targets));
    Err(Error::H1NotFound {
        reason: if proven {
            "no unit at all works: exhaustive check over the full image of the unit group mod λ⁵"
                .into()
        } else {
            format!(
                "unit search bound |t| ≤ {} exhausted",
                primes::UNIT_EXPONENT_BOUND
            )
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use RadicandCase::*;

    #[test]
    fn case1_six_extensions_are_the_listed_words() {
        let (x1, x2) = generator_words(Case1).unwrap();
        let six = six_extensions(x1, x2).unwrap();
        let b = Basis::NoW;
        let names: Vec<String> = six
            .iter()
            .map(|w| w.render(b, None, Rendering::Element))
            .collect();
        assert_eq!(names, ["π₁", "π₃", "π₁π₃", "π₁π₃²", "π₁π₃³", "π₁π₃⁴"]);
    }

    #[test]
    fn case2_six_extensions_match_closed_forms() {
        let (x1, x2) = generator_words(Case2).unwrap();
        let six = six_extensions(x1, x2).unwrap();
        let b = Basis::Inert { q: 3 };
        let names: Vec<String> = six
            .iter()
            .map(|w| w.render(b, None, Rendering::Element))
            .collect();
        assert_eq!(
            names,
            [
                "π₁π₅^h₁",
                "π₁π₃⁴",
                "π₁²π₃⁴π₅^h₁",
                "π₁π₃π₅^2h₁",
                "π₁⁴π₃²π₅^h₁",
                "π₃π₅^h₁"
            ]
        );
        // concrete rendering with h₁ = 3
        assert_eq!(six[3].render(b, Some(3), Rendering::Element), "π₁π₃π₅");
    }

    #[test]
    fn dependent_generators_rejected() {
        let x = Word::new(1, 2, 0);
        assert_eq!(
            six_extensions(x, x.scale(3)),
            Err(Error::DependentGenerators)
        );
    }

    #[test]
    fn tau2_examples() {
        assert_eq!(tau2_orbit(Word::new(1, 0, 0)), Word::new(0, 1, 0));
        assert_eq!(tau2_orbit(Word::new(1, 1, 0)), Word::new(1, 1, 0));
        assert_eq!(tau2_orbit(Word::new(2, 4, 1)), Word::new(4, 2, 1));
        assert!(tau2_orbit(Word::new(1, 4, 0)).projectively_eq(Word::new(1, 4, 0)));
    }

    #[test]
    fn case1_subgroups() {
        let t = subgroup_table(Case1).unwrap();
        let g: Vec<Word> = t.iter().map(|d| d.generator).collect();
        assert_eq!(
            g,
            [
                Word::new(1, 1, 0),
                Word::new(1, 0, 0),
                Word::new(1, 3, 0),
                Word::new(1, 2, 0),
                Word::new(0, 1, 0),
                Word::new(1, 4, 0)
            ]
        );
        assert_eq!(t[0].character, Character::Plus);
        assert_eq!(t[5].character, Character::Minus);
        assert_eq!(t[1].character, Character::Mixed);
    }

    #[test]
    fn case2_subgroups_follow_ax_powers() {
        let t = subgroup_table(Case2).unwrap();
        assert_eq!(t[0].generator, Word::new(1, 1, 2));
        assert_eq!(t[1].generator, Word::new(1, 0, 1));
        // AX² = [P₁⁴P₃²P₅^h₁]⁴·… lies on the line of P₁⁴P₃²P₅^h₁
        assert_eq!(t[2].generator, Word::new(4, 2, 1));
        assert_eq!(t[3].generator, Word::new(2, 4, 1));
        assert_eq!(t[4].generator, Word::new(0, 1, 1));
        assert_eq!(t[5].generator, Word::new(1, 4, 0));
        for d in &t {
            assert_eq!(subgroup_index(Case2, d.generator).unwrap(), d.label);
        }
    }

    #[test]
    fn subgroup_index_outside_span() {
        // P₅ alone is not in the span of A and X
        assert!(matches!(
            subgroup_index(Case2, Word::new(0, 0, 1)),
            Err(Error::NotInClassGroup(_))
        ));
    }

    #[test]
    fn correspondence_case1() {
        let c = correspondence(Case1, Some(SymbolValue::new(0))).unwrap();
        assert_eq!(c[1].candidates, vec![Word::new(0, 1, 0)]);
        assert!(c[1].resolved);
        let c = correspondence(Case1, Some(SymbolValue::new(2))).unwrap();
        assert_eq!(c[1].candidates, vec![Word::new(1, 0, 0)]);
        assert_eq!(c[4].candidates, vec![Word::new(0, 1, 0)]);
    }

    #[test]
    fn correspondence_case2_unresolved() {
        let c = correspondence(Case2, None).unwrap();
        assert!(c.iter().all(|d| !d.resolved && d.candidates.len() == 2));
        assert_eq!(
            c[0].candidates,
            vec![Word::new(1, 4, 0), Word::new(1, 1, 2)]
        );
    }

    #[test]
    fn guaranteed_examples() {
        let g = guaranteed_capitulations(Case1).unwrap();
        let pi1pi3sq = g
            .iter()
            .find(|c| c.extension == Word::new(1, 2, 0))
            .unwrap();
        assert_eq!(pi1pi3sq.class, Word::new(1, 2, 0));
        assert_eq!(pi1pi3sq.subgroup, 4);
        let g = guaranteed_capitulations(Case2).unwrap();
        let p3w = g
            .iter()
            .find(|c| c.extension == Word::new(0, 1, 1))
            .unwrap();
        assert_eq!(p3w.subgroup, 5);
    }

    #[test]
    fn case1_type_list() {
        let l = possible_types(Case1, Some(SymbolValue::new(0)), K6Choice::MinusWord).unwrap();
        assert_eq!(l.len(), 12);
        assert!(l.contains(&CapitulationType([1, 2, 3, 4, 5, 0])));
        let l2 = possible_types(Case1, Some(SymbolValue::new(0)), K6Choice::PlusWord).unwrap();
        assert!(l2
            .iter()
            .all(|t| [0, 6].contains(&t.get(1)) && [0, 1].contains(&t.get(6))));
        assert_eq!(l2.len(), 24);
        let l3 = possible_types(Case1, Some(SymbolValue::new(1)), K6Choice::MinusWord).unwrap();
        assert!(l3.contains(&CapitulationType([1, 5, 3, 4, 2, 0])));
        assert!(!l3.contains(&CapitulationType([0, 2, 0, 0, 5, 0])));
    }

    #[test]
    fn case2_type_list() {
        let l = possible_types(Case2, None, K6Choice::MinusWord).unwrap();
        assert_eq!(l.len(), 18);
        assert!(l.contains(&CapitulationType([1, 5, 4, 3, 2, 0])));
        assert!(l.contains(&CapitulationType([0, 0, 0, 0, 0, 0])));
        assert_eq!(l, possible_types(Case3, None, K6Choice::MinusWord).unwrap());
        let l = possible_types(Case2, None, K6Choice::PlusWord).unwrap();
        assert!(l.iter().all(|t| [0, 1].contains(&t.get(6))));
    }

    #[test]
    fn consistency_in_case1_fails_exactly_at_positions_2_and_5() {
        let v =
            consistency_violations(Case1, Some(SymbolValue::new(0)), K6Choice::MinusWord).unwrap();
        assert!(!v.is_empty());
        assert!(v.iter().all(|x| x.position == 2 || x.position == 5));
        // K₂ = k(⁵√π₃) principalizes [P₃], which generates H₅
        assert!(v.iter().any(|x| x.position == 2 && x.expected == 5));
        for case in [Case2, Case3] {
            for choice in [K6Choice::MinusWord, K6Choice::PlusWord] {
                assert!(consistency_violations(case, None, choice)
                    .unwrap()
                    .is_empty());
            }
        }
    }

    #[test]
    fn h1_search_for_lambda_is_refused() {
        let pi1 = primes::factor_rational_prime(11).unwrap().factors[0].clone();
        assert!(matches!(
            find_h1(&pi1, &PrimeElement::lambda()),
            Err(Error::H1NotFound { .. })
        ));
    }

    #[test]
    fn h1_witness_for_constructed_pair() {
        // π ≡ 3⁴ (mod λ⁵) makes π·3 ≡ 3⁵ ≡ 18 (mod λ⁵)
        let lambda5 = CycInt::lambda().pow(5);
        let pi0 = (0..20)
            .map(|k| &CycInt::from_int(81) + &(&lambda5 * &CycInt::new(k, 1, 0, 0)))
            .find(|x| u64::try_from(x.norm()).is_ok_and(primes::is_prime))
            .expect("a prime norm among the first candidates");
        let p = u64::try_from(pi0.norm()).unwrap();
        let pi1 = primes::factor_rational_prime(p)
            .unwrap()
            .factors
            .into_iter()
            .find(|f| f.value.is_divisible_by(&pi0))
            .unwrap();
        let w = primes::factor_rational_prime(3).unwrap().factors[0].clone();
        let wit = find_h1(&pi1, &w).unwrap();
        assert!(wit.verify(&pi1, &w));
    }
}
