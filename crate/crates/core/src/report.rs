//! The full pipeline for one radicand: classify, factor, fix associates,
//! search h₁, evaluate (π₁/π₃)₅ and run the capitulation engine.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::capitulation::{
    self as cap, Basis, CapitulationType, Character, K6Choice, Rendering, Word,
};
use crate::classify::{self, RadicandCase, RadicandClass};
use crate::cyclotomic::{self, CycInt};
use crate::error::{Error, Result};
use crate::primes::{self, PrimeElement, PrimeKind, UnitChoice};
use crate::symbols;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ReportOptions {
    /// Use this h₁ instead of (or in addition to) the search result.
    pub h1: Option<u8>,
    pub explain: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub n: u64,
    pub classification: RadicandClass,
    /// Absent for NoMatch.
    pub analysis: Option<Analysis>,
    /// Derivation lines, present with `explain`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub explain: Vec<String>,
}

impl Report {
    pub fn is_match(&self) -> bool {
        self.classification.case != RadicandCase::NoMatch
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Analysis {
    pub basis: Basis,
    /// ζ ↦ root in Z[ζ]/π₁ ≅ F_p.
    pub root: u64,
    pub primes: Vec<PrimeRecord>,
    pub normalization: Option<NormalizationRecord>,
    pub h1: Option<H1Record>,
    /// Exponent j with (π₁/π₃)₅ = ζʲ for the associates listed in `primes`.
    pub symbol_pi1_pi3: u8,
    pub generators: Vec<WordRecord>,
    pub extensions: Vec<ExtensionRecord>,
    pub subgroups: Vec<SubgroupRecord>,
    pub correspondence: Vec<FieldRecord>,
    pub guaranteed_capitulations: Vec<CapitulationRecord>,
    pub possible_types: PossibleTypes,
    pub consistency_violations: Vec<cap::Violation>,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeRecord {
    pub label: String,
    pub kind: PrimeKind,
    pub value: CycInt,
    pub norm: String,
    /// The unit u with value = u·(gcd output), when an associate was chosen.
    pub unit: Option<UnitChoice>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalizationRecord {
    pub target_power: u32,
    pub achieved_power: u32,
    /// The target power is out of reach for every unit, not only within the
    /// search bound.
    pub target_impossible: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum H1Status {
    Found,
    Assumed,
    NotFound,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct H1Record {
    pub status: H1Status,
    pub value: Option<u8>,
    pub witness: Option<cap::H1Witness>,
    pub reason: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordRecord {
    pub exponents: Word,
    pub text: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionRecord {
    pub word: WordRecord,
    /// Index (0-based) of the extension τ² maps this one to.
    pub tau2_image: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupRecord {
    pub label: u8,
    pub generator: WordRecord,
    pub character: Character,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldRecord {
    pub label: u8,
    pub candidates: Vec<WordRecord>,
    pub resolved: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CapitulationRecord {
    pub extension: WordRecord,
    pub class: WordRecord,
    pub subgroup: u8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PossibleTypes {
    /// K₆ = k(⁵√(π₁π₃⁴)).
    pub minus_word: Vec<CapitulationType>,
    /// K₆ the other τ²-fixed field.
    pub plus_word: Vec<CapitulationType>,
}

struct Ctx {
    basis: Basis,
    h1: Option<u8>,
}

impl Ctx {
    fn element(&self, w: Word) -> WordRecord {
        WordRecord {
            exponents: w,
            text: w.render(self.basis, self.h1, Rendering::Element),
        }
    }

    fn class(&self, w: Word) -> WordRecord {
        WordRecord {
            exponents: w,
            text: w.render(self.basis, self.h1, Rendering::Class),
        }
    }
}

pub fn run_report(n: u64, options: &ReportOptions) -> Result<Report> {
    let classification = classify::classify_radicand(n)?;
    if let Some(h) = options.h1 {
        if !(1..=4).contains(&h) {
            return Err(Error::InvalidH1(h));
        }
    }
    let mut explain = Vec::new();
    if options.explain {
        explain.push(classification_line(&classification));
    }
    if classification.case == RadicandCase::NoMatch {
        return Ok(Report {
            n,
            classification,
            analysis: None,
            explain,
        });
    }
    let analysis = analyse(&classification, options, &mut explain)?;
    if !options.explain {
        explain.clear();
    }
    Ok(Report {
        n,
        classification,
        analysis: Some(analysis),
        explain,
    })
}

fn classification_line(c: &RadicandClass) -> String {
    let fact: Vec<String> = c
        .factorization
        .iter()
        .map(|&(p, e)| {
            if e == 1 {
                p.to_string()
            } else {
                format!("{p}^{e}")
            }
        })
        .collect();
    let mut s = format!(
        "classification: n = {} ≡ {} (mod 25); {}",
        fact.join("·"),
        c.residue_mod_25,
        c.case.shape()
    );
    if let Some(r) = &c.reason {
        let _ = write!(s, " ({r})");
    }
    s
}

fn prime_record(label: &str, pi: &PrimeElement, unit: Option<UnitChoice>) -> PrimeRecord {
    PrimeRecord {
        label: label.into(),
        kind: pi.kind,
        value: pi.value.clone(),
        norm: pi.value.norm().to_string(),
        unit,
    }
}

/// Best associate u·π₁ ≡ 1 (mod λᵏ) for the largest reachable k ≤ 5.
fn normalize_case1(
    pi1: &PrimeElement,
) -> Result<(primes::NormalizedAssociate, NormalizationRecord)> {
    let one = [CycInt::one()];
    let mut impossible_at_5 = false;
    for k in (1..=5).rev() {
        match primes::normalize_associate(pi1, k, &one) {
            Ok(found) => {
                return Ok((
                    found,
                    NormalizationRecord {
                        target_power: 5,
                        achieved_power: k,
                        target_impossible: impossible_at_5,
                    },
                ))
            }
            Err(Error::AssociateNotFound { impossible, .. }) => {
                if k == 5 {
                    impossible_at_5 = impossible;
                }
            }
            Err(e) => return Err(e),
        }
    }
    unreachable!("the units cover every nonzero residue mod λ")
}

fn analyse(
    class: &RadicandClass,
    options: &ReportOptions,
    explain: &mut Vec<String>,
) -> Result<Analysis> {
    let case = class.case;
    let p = class.p.expect("matched class has p");
    let split = primes::factor_rational_prime(p)?;
    let root = split.root.expect("split prime has a root");
    let basis = Basis::for_case(case, class.q);
    let mut notes = vec![format!(
        "π₁ = gcd({p}, ζ − {root}) with {root} the smallest root of Φ₅ mod {p}; π₁₊ⱼ = τʲ(π₁)"
    )];
    notes.push("π₃ is listed as τ²(π₁), the complex conjugate of the chosen π₁".into());

    let raw_pi1 = split.factors[0].clone();
    let mut pi1_unit = None;
    let mut normalization = None;
    let mut h1_record = None;
    let mut w_prime = None;

    match case {
        RadicandCase::Case1 => {
            let (found, rec) = normalize_case1(&raw_pi1)?;
            if rec.achieved_power < rec.target_power {
                notes.push(format!(
                    "no associate of π₁ is ≡ 1 (mod λ⁵){}; using u·π₁ ≡ 1 (mod λ{}) instead",
                    if rec.target_impossible {
                        " for any unit"
                    } else {
                        " within the unit search bound"
                    },
                    power(rec.achieved_power)
                ));
            }
            pi1_unit = Some(found.unit);
            normalization = Some(rec);
        }
        _ => {
            let w = match class.q {
                Some(q) => primes::factor_rational_prime(q)?.factors[0].clone(),
                None => PrimeElement::lambda(),
            };
            let searched = cap::find_h1(&raw_pi1, &w);
            let record = match (&searched, options.h1) {
                (Ok(wit), None) => H1Record {
                    status: H1Status::Found,
                    value: Some(wit.h1),
                    witness: Some(wit.clone()),
                    reason: None,
                },
                (Ok(wit), Some(h)) => H1Record {
                    status: H1Status::Assumed,
                    value: Some(h),
                    witness: Some(wit.clone()),
                    reason: Some(format!(
                        "h₁ = {h} given by the caller; search found {}",
                        wit.h1
                    )),
                },
                (Err(Error::H1NotFound { reason }), h) => H1Record {
                    status: if h.is_some() {
                        H1Status::Assumed
                    } else {
                        H1Status::NotFound
                    },
                    value: h,
                    witness: None,
                    reason: Some(reason.clone()),
                },
                (Err(e), _) => return Err(e.clone()),
            };
            if let Ok(wit) = &searched {
                pi1_unit = Some(wit.unit.clone());
            }
            if record.value.is_none() {
                notes.push(
                    "h₁ unknown: exponents of w are shown as multiples of h₁; every structural \
                     conclusion is the same for h₁ = 1, 2, 3, 4"
                        .into(),
                );
            }
            h1_record = Some(record);
            w_prime = Some(w);
        }
    }

    let pi1 = match &pi1_unit {
        Some(u) => raw_pi1.with_generator(&u.unit * &raw_pi1.value),
        None => raw_pi1.clone(),
    };
    let pi3 = split.factors[2].with_generator(pi1.value.conj());
    let symbol = symbols::quintic_symbol(&pi1.value, &pi3)?;
    notes.push(format!(
        "(π₁/π₃)₅ = ζ^{} for the listed associates; other associates may change it",
        symbol.exponent()
    ));

    let mut prime_records = vec![prime_record("π₁", &pi1, pi1_unit.clone())];
    prime_records.push(prime_record("π₂", &split.factors[1], None));
    prime_records.push(prime_record("π₃", &pi3, None));
    prime_records.push(prime_record("π₄", &split.factors[3], None));
    if let Some(w) = &w_prime {
        let label = if w.kind == PrimeKind::Lambda {
            "λ"
        } else {
            "π₅"
        };
        prime_records.push(prime_record(label, w, None));
    }

    let h1 = h1_record.as_ref().and_then(|r| r.value);
    let ctx = Ctx { basis, h1 };
    let (x1, x2) = cap::generator_words(case)?;
    let six = cap::six_extensions(x1, x2)?;
    let extensions = six
        .iter()
        .map(|&y| ExtensionRecord {
            word: ctx.element(y),
            tau2_image: six
                .iter()
                .position(|&z| z == cap::tau2_orbit(y))
                .expect("τ² permutes the six fields"),
        })
        .collect();
    let subgroups = cap::subgroup_table(case)?
        .iter()
        .map(|d| SubgroupRecord {
            label: d.label,
            generator: ctx.class(d.generator),
            character: d.character,
        })
        .collect();
    let symbol_opt = Some(symbol);
    let correspondence = cap::correspondence(case, symbol_opt)?
        .iter()
        .map(|f| FieldRecord {
            label: f.label,
            candidates: f.candidates.iter().map(|&c| ctx.element(c)).collect(),
            resolved: f.resolved,
        })
        .collect();
    let guaranteed = cap::guaranteed_capitulations(case)?
        .iter()
        .map(|g| CapitulationRecord {
            extension: ctx.element(g.extension),
            class: ctx.class(g.class),
            subgroup: g.subgroup,
        })
        .collect();
    let possible_types = PossibleTypes {
        minus_word: cap::possible_types(case, symbol_opt, K6Choice::MinusWord)?,
        plus_word: cap::possible_types(case, symbol_opt, K6Choice::PlusWord)?,
    };
    let mut violations = cap::consistency_violations(case, symbol_opt, K6Choice::MinusWord)?;
    violations.extend(cap::consistency_violations(
        case,
        symbol_opt,
        K6Choice::PlusWord,
    )?);

    if options.explain {
        explain_lines(
            explain,
            case,
            &ctx,
            x1,
            x2,
            symbol.is_trivial(),
            &violations,
        );
    }

    Ok(Analysis {
        basis,
        root,
        primes: prime_records,
        normalization,
        h1: h1_record,
        symbol_pi1_pi3: symbol.exponent(),
        generators: vec![ctx.element(x1), ctx.element(x2)],
        extensions,
        subgroups,
        correspondence,
        guaranteed_capitulations: guaranteed,
        possible_types,
        consistency_violations: violations,
        notes,
    })
}

fn explain_lines(
    out: &mut Vec<String>,
    case: RadicandCase,
    ctx: &Ctx,
    x1: Word,
    x2: Word,
    symbol_trivial: bool,
    violations: &[cap::Violation],
) {
    let e = |w: Word| w.render(ctx.basis, ctx.h1, Rendering::Element);
    let c = |w: Word| w.render(ctx.basis, ctx.h1, Rendering::Class);
    out.push(format!(
        "generators: the Hilbert 5-class field is k(⁵√({}), ⁵√({}))",
        e(x1),
        e(x2)
    ));
    out.push(
        "extensions: its six degree-5 subfields over k are k(⁵√y) for y = x₂ and y = x₁x₂ʲ, \
         j = 0..4, up to 5th powers"
            .into(),
    );
    let (a, x) = cap::class_group_generators(case).expect("matched case");
    out.push(format!(
        "subgroups: C = ⟨A, X⟩ with A = {} spanning the τ²-fixed part H₁ and X = {} the \
         τ²-inverted part H₆; H_j = ⟨AX^(j−1)⟩ for j = 2..5",
        c(a),
        c(x)
    ));
    if case == RadicandCase::Case1 {
        out.push(format!(
            "correspondence: (π₁/π₃)₅ {} 1, so P₁ splits completely in k(⁵√{}) and K₂ = k(⁵√{})",
            if symbol_trivial { "=" } else { "≠" },
            if symbol_trivial { "π₃" } else { "π₁" },
            if symbol_trivial { "π₃" } else { "π₁" },
        ));
    } else {
        out.push(
            "correspondence: K₂/K₅, K₃/K₄ and K₁/K₆ are each one of two τ²-related fields; \
             no symbol decides them"
                .into(),
        );
    }
    out.push(
        "capitulation: in k(⁵√y) the ideal class [y] becomes principal, generated by ⁵√y, \
         since its 5th power is (y)"
            .into(),
    );
    out.push(
        "types: i₆ = 0 when K₆ = k(⁵√(π₁π₃⁴)) because the whole group dies there; the other \
         entries are limited by τ²-symmetry of the pairs (K₂, K₅) and (K₃, K₄)"
            .into(),
    );
    if !violations.is_empty() {
        out.push(format!(
            "warning: {} listed type entries disagree with the class principalized in the \
             resolved field K₂ or K₅",
            violations.len()
        ));
    }
}

/// Plain-text rendering of a report.
pub fn render_text(r: &Report) -> String {
    let mut s = String::new();
    let c = &r.classification;
    let _ = writeln!(s, "n = {}", r.n);
    let _ = writeln!(s, "case: {} ({})", c.case.name(), c.case.shape());
    let _ = writeln!(s, "n mod 25 = {}", c.residue_mod_25);
    if let Some(reason) = &c.reason {
        let _ = writeln!(s, "no match: {reason}");
    }
    if let Some(a) = &r.analysis {
        let _ = writeln!(
            s,
            "p = {}{}{}",
            c.p.unwrap_or(0),
            c.q.map(|q| format!(", q = {q}")).unwrap_or_default(),
            c.e.map(|e| format!(", e = {e}")).unwrap_or_default()
        );
        let _ = writeln!(s, "\nprimes (ζ ↦ {} mod p):", a.root);
        for pr in &a.primes {
            let _ = write!(s, "  {} = {}   norm {}", pr.label, pr.value, pr.norm);
            if let Some(u) = &pr.unit {
                let _ = write!(
                    s,
                    "   unit {}ζ^{}(1+ζ)^{}",
                    if u.negate { "−" } else { "" },
                    u.zeta_exp,
                    u.eps_exp
                );
            }
            s.push('\n');
        }
        if let Some(nr) = &a.normalization {
            let _ = writeln!(
                s,
                "normalization: π₁ ≡ 1 (mod λ{}) (wanted λ{}{})",
                power(nr.achieved_power),
                power(nr.target_power),
                if nr.target_impossible {
                    ", unreachable by any unit"
                } else {
                    ""
                }
            );
        }
        if let Some(h) = &a.h1 {
            let status = match h.status {
                H1Status::Found => "found",
                H1Status::Assumed => "assumed",
                H1Status::NotFound => "not found",
            };
            let _ = write!(s, "h₁: {status}");
            if let Some(v) = h.value {
                let _ = write!(s, ", h₁ = {v}");
            }
            if let Some(w) = &h.witness {
                let _ = write!(s, ", u·π₁·w^{} ≡ {} (mod λ⁵)", w.h1, w.residue);
            }
            if let Some(reason) = &h.reason {
                let _ = write!(s, " ({reason})");
            }
            s.push('\n');
        }
        let _ = writeln!(s, "(π₁/π₃)₅ = ζ^{}", a.symbol_pi1_pi3);
        let _ = writeln!(
            s,
            "\nHilbert 5-class field: k(⁵√({}), ⁵√({}))",
            a.generators[0].text, a.generators[1].text
        );
        let _ = writeln!(s, "\nunramified quintic extensions:");
        for ext in &a.extensions {
            let _ = writeln!(
                s,
                "  k(⁵√({}))   τ² ↦ k(⁵√({}))",
                ext.word.text, a.extensions[ext.tau2_image].word.text
            );
        }
        let _ = writeln!(s, "\nsubgroups:");
        for h in &a.subgroups {
            let _ = writeln!(
                s,
                "  H{} = ⟨{}⟩   {:?}",
                subscript(h.label),
                h.generator.text,
                h.character
            );
        }
        let _ = writeln!(s, "\nclass field correspondence:");
        for f in &a.correspondence {
            let cands: Vec<String> = f
                .candidates
                .iter()
                .map(|w| format!("k(⁵√({}))", w.text))
                .collect();
            let _ = writeln!(
                s,
                "  K{} = {}{}",
                subscript(f.label),
                cands.join(" or "),
                if f.resolved { "" } else { "   (undecided)" }
            );
        }
        let _ = writeln!(s, "\nguaranteed capitulations:");
        for g in &a.guaranteed_capitulations {
            let _ = writeln!(
                s,
                "  {} capitulates in k(⁵√({}))   generates H{}",
                g.class.text,
                g.extension.text,
                subscript(g.subgroup)
            );
        }
        let fmt_list = |l: &[CapitulationType]| {
            l.iter()
                .map(|t| t.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        let _ = writeln!(
            s,
            "\npossible types, K₆ = k(⁵√(π₁π₃⁴)) [{}]:\n  {}",
            a.possible_types.minus_word.len(),
            fmt_list(&a.possible_types.minus_word)
        );
        let _ = writeln!(
            s,
            "possible types, K₆ the other τ²-fixed field [{}]:\n  {}",
            a.possible_types.plus_word.len(),
            fmt_list(&a.possible_types.plus_word)
        );
        if !a.consistency_violations.is_empty() {
            let _ = writeln!(
                s,
                "\nconsistency: {} entries name a subgroup other than the one principalized \
                 in the resolved field",
                a.consistency_violations.len()
            );
        }
        let _ = writeln!(s, "\nnotes:");
        for note in &a.notes {
            let _ = writeln!(s, "  - {note}");
        }
    }
    if !r.explain.is_empty() {
        let _ = writeln!(s, "\nexplanation:");
        for line in &r.explain {
            let _ = writeln!(s, "  {line}");
        }
    }
    s
}

fn power(k: u32) -> &'static str {
    ["⁰", "", "²", "³", "⁴", "⁵"]
        .get(k as usize)
        .copied()
        .unwrap_or("ᵏ")
}

fn subscript(j: u8) -> &'static str {
    ["₀", "₁", "₂", "₃", "₄", "₅", "₆"][j as usize]
}

/// Recheck that every stored witness in the report satisfies its congruence.
pub fn witnesses_hold(r: &Report) -> bool {
    let Some(a) = &r.analysis else { return true };
    let Some(w) = a.h1.as_ref().and_then(|h| h.witness.as_ref()) else {
        return true;
    };
    let w_value = match a.basis {
        Basis::Inert { q } => CycInt::from_int(q),
        _ => CycInt::lambda(),
    };
    let lhs = &a.primes[0].value * &w_value.pow(w.h1 as u32);
    lhs == w.value && cyclotomic::congruent_mod_lambda_pow(&lhs, &CycInt::from_int(w.residue), 5)
}
