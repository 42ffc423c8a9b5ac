//! Acceptance harness. Prints one PASS/FAIL line per criterion.
//!
//! Criteria listed in `KNOWN_UNATTAINABLE` are computed faithfully but are
//! expected to fail; the run is green only when every other criterion passes
//! and every listed one still fails.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use metacyclic_core::capitulation::{self as cap, CapitulationType, K6Choice};
use metacyclic_core::classify::{self, RadicandCase};
use metacyclic_core::cyclotomic::CycInt;
use metacyclic_core::primes::{self, factor_rational_prime, PrimeElement};
use metacyclic_core::symbols::{self, SymbolValue};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_metacyclic");

/// No unit/exponent pair exists for these radicands; see the README.
const KNOWN_UNATTAINABLE: &[&str] = &["h1_witnesses"];

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn fixtures_path() -> PathBuf {
    PathBuf::from(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/../../fixtures/table1.json"
    ))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<Duration, String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {t:?}, limit {limit:?}"))?;
    Ok(t)
}

fn table_corpus() -> Outcome {
    let fx = fixtures_path();
    let start = Instant::now();
    let out = Command::new(BIN)
        .args([
            "verify",
            "--fixtures",
            fx.to_str().unwrap(),
            "--format",
            "json",
        ])
        .output()
        .map_err(|e| e.to_string())?;
    let t = within(start, Duration::from_secs(5))?;
    ensure(out.status.success(), || {
        format!("exit status {}", out.status)
    })?;
    let v: Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    let s = &v["summary"];
    let rows = s["rows"].as_array().ok_or("no rows")?;
    ensure(rows.len() == 26, || format!("{} rows", rows.len()))?;
    let counts = (
        s["pass"].as_u64(),
        s["anomaly"].as_u64(),
        s["fail"].as_u64(),
    );
    ensure(counts == (Some(24), Some(2), Some(0)), || {
        format!("counts {counts:?}")
    })?;
    let anomalies: BTreeSet<u64> = rows
        .iter()
        .filter(|r| r["outcome"] == "known_anomaly")
        .filter_map(|r| r["n"].as_u64())
        .collect();
    ensure(anomalies == BTreeSet::from([2111, 2131 * 2131]), || {
        format!("anomalies {anomalies:?}")
    })?;
    for r in rows.iter().filter(|r| r["outcome"] == "known_anomaly") {
        ensure(r["case"] == "no_match", || format!("{r}"))?;
    }
    Ok(format!("24 matched, anomalies {{2111, 2131²}}, {t:?}"))
}

/// a(r) in Z/p by Horner on the power-basis coordinates.
fn horner(a: &CycInt, r: u64, p: u64) -> u64 {
    let pb = BigInt::from(p);
    a.coords().iter().rev().fold(0u64, |acc, c| {
        let c = ((c % &pb) + &pb) % &pb;
        let c: u64 = c.try_into().unwrap();
        (acc * r + c) % p
    })
}

fn random_cyc(rng: &mut ChaCha8Rng, bound: i64) -> CycInt {
    CycInt::new(
        rng.gen_range(-bound..=bound),
        rng.gen_range(-bound..=bound),
        rng.gen_range(-bound..=bound),
        rng.gen_range(-bound..=bound),
    )
}

fn split_primes(limit: u64) -> Vec<u64> {
    (11..limit)
        .filter(|&p| p % 5 == 1 && primes::is_prime(p))
        .collect()
}

fn symbol_oracle() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(500);
    let mut checked = 0usize;
    for p in split_primes(500) {
        let fifth: BTreeSet<u64> = (1..p).map(|x| primes::mod_pow(x, 5, p)).collect();
        let f = factor_rational_prime(p).map_err(|e| e.to_string())?;
        for pi in &f.factors {
            let r = pi.root.ok_or("split prime without root")?;
            ensure(horner(&pi.value, r, p) == 0, || {
                format!("π does not vanish at {r} mod {p}")
            })?;
            let mut done = 0;
            while done < 50 {
                let a = random_cyc(&mut rng, 1000);
                let abar = horner(&a, r, p);
                if abar == 0 {
                    continue;
                }
                let s = symbols::quintic_symbol(&a, pi).map_err(|e| e.to_string())?;
                ensure(s.is_trivial() == fifth.contains(&abar), || {
                    format!("mismatch at p = {p}, a = {a}")
                })?;
                done += 1;
                checked += 1;
            }
        }
    }
    let t = within(start, Duration::from_secs(10))?;
    Ok(format!("{checked} symbols, 0 mismatches, {t:?}"))
}

fn splitting() -> Outcome {
    let start = Instant::now();
    let ps = split_primes(2000);
    for &p in &ps {
        let f = factor_rational_prime(p).map_err(|e| e.to_string())?.factors;
        ensure(f.len() == 4, || format!("{p}: {} factors", f.len()))?;
        for x in &f {
            let n = x.value.norm();
            ensure(n == BigInt::from(p) || n == -BigInt::from(p), || {
                format!("{p}: norm {n}")
            })?;
        }
        let prod = f.iter().fold(CycInt::one(), |acc, x| &acc * &x.value);
        let u = prod
            .exact_div(&CycInt::from_int(p))
            .ok_or(format!("{p} ∤ product"))?;
        ensure(u.is_unit(), || format!("{p}: cofactor {u} is not a unit"))?;
        let distinct: BTreeSet<String> = f.iter().map(|x| x.value.to_string()).collect();
        ensure(distinct.len() == 4, || format!("{p}: repeated factor"))?;
    }
    let t = within(start, Duration::from_secs(30))?;
    Ok(format!("{} primes, {t:?}", ps.len()))
}

fn divisible_by_lambda_pow(x: &CycInt, k: u32) -> bool {
    let mut y = x.clone();
    for _ in 0..k {
        match y.exact_div(&CycInt::lambda()) {
            Some(z) => y = z,
            None => return false,
        }
    }
    true
}

fn kernel_suite() -> Outcome {
    const CASES: usize = 1000;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for i in 0..CASES {
        let a = random_cyc(&mut rng, 10_000);
        let b = random_cyc(&mut rng, 10_000);
        // norm as the product of the four conjugates
        let conj_norm = |x: &CycInt| {
            let prod = (0..4).fold(CycInt::one(), |acc, j| &acc * &x.galois(j));
            prod.as_rational().cloned()
        };
        let (na, nb, nab) = (conj_norm(&a), conj_norm(&b), conj_norm(&(&a * &b)));
        ensure(na.as_ref() == Some(&a.norm()), || {
            format!("case {i}: norm of {a}")
        })?;
        ensure(
            nab.is_some() && nab == na.zip(nb).map(|(x, y)| x * y),
            || format!("case {i}: N(ab) ≠ N(a)N(b)"),
        )?;
    }
    for i in 0..CASES {
        let a = random_cyc(&mut rng, 10_000);
        let b = random_cyc(&mut rng, 500);
        if b.is_zero() {
            continue;
        }
        let (q, r) = a.divmod(&b).map_err(|e| e.to_string())?;
        ensure(&(&q * &b) + &r == a, || format!("case {i}: a ≠ qb + r"))?;
        ensure(r.norm() < b.norm(), || format!("case {i}: N(r) ≥ N(b)"))?;
    }
    for i in 0..CASES {
        let a = random_cyc(&mut rng, 10_000);
        let b = random_cyc(&mut rng, 10_000);
        for j in 0..4 {
            ensure((&a + &b).galois(j) == &a.galois(j) + &b.galois(j), || {
                format!("case {i}: τ^{j} not additive")
            })?;
            ensure((&a * &b).galois(j) == &a.galois(j) * &b.galois(j), || {
                format!("case {i}: τ^{j} not multiplicative")
            })?;
        }
        ensure(a.galois(1).galois(3) == a, || format!("case {i}: τ⁴ ≠ 1"))?;
    }
    for i in 0..CASES {
        let a = random_cyc(&mut rng, 1_000_000);
        let k = rng.gen_range(1..=12u32);
        let e = a.lambda_expand(k);
        let mut sum = CycInt::zero();
        let mut lp = CycInt::one();
        for &d in e.digits() {
            ensure(d < 5, || format!("case {i}: digit {d}"))?;
            sum = &sum + &lp.scale(&BigInt::from(d));
            lp = &lp * &CycInt::lambda();
        }
        ensure(e.len() == k as usize, || format!("case {i}: length"))?;
        ensure(divisible_by_lambda_pow(&(&a - &sum), k), || {
            format!("case {i}: expansion of {a} to λ^{k} does not round-trip")
        })?;
    }
    Ok(format!("4 × {CASES} cases"))
}

const H1_RADICANDS: [u64; 8] = [55, 93, 382, 943, 1457, 6943, 8507, 12707];

fn w_prime(class: &classify::RadicandClass) -> Result<PrimeElement, String> {
    match class.case {
        RadicandCase::Case2 => {
            let q = class.q.ok_or("case 2 without q")?;
            Ok(factor_rational_prime(q).map_err(|e| e.to_string())?.factors[0].clone())
        }
        RadicandCase::Case3 => Ok(PrimeElement::lambda()),
        c => Err(format!("unexpected case {c:?}")),
    }
}

fn h1_witnesses() -> Outcome {
    let mut missing = Vec::new();
    for n in H1_RADICANDS {
        let class = classify::classify_radicand(n).map_err(|e| e.to_string())?;
        let p = class.p.ok_or(format!("{n}: no split prime"))?;
        let pi1 = factor_rational_prime(p).map_err(|e| e.to_string())?.factors[0].clone();
        let w = w_prime(&class)?;
        match cap::find_h1(&pi1, &w) {
            Ok(wit) => {
                let lhs = &(&wit.unit.unit * &pi1.value) * &w.value.pow(wit.h1 as u32);
                let r = CycInt::from_int(wit.residue);
                ensure(
                    [1, 7, 18, 24].contains(&wit.residue)
                        && divisible_by_lambda_pow(&(&lhs - &r), 5)
                        && wit.verify(&pi1, &w),
                    || format!("{n}: witness does not re-verify"),
                )?;
            }
            Err(_) => missing.push(format!("{n} ({})", class.case.name())),
        }
    }
    ensure(missing.is_empty(), || {
        format!(
            "NotFound for {}: no unit times π₁·w^h is ≡ ±1, ±7 mod λ⁵",
            missing.join(", ")
        )
    })?;
    Ok(format!("{} witnesses re-verified", H1_RADICANDS.len()))
}

fn type_lists() -> Outcome {
    let trivial = Some(SymbolValue::new(0));
    let c1 = cap::possible_types(RadicandCase::Case1, trivial, K6Choice::MinusWord)
        .map_err(|e| e.to_string())?;
    ensure(c1.len() == 12, || {
        format!("case 1 (i) has {} tuples", c1.len())
    })?;
    for t in [[1, 2, 3, 4, 5, 0], [0; 6]] {
        ensure(c1.contains(&CapitulationType(t)), || {
            format!("case 1 (i) lacks {}", CapitulationType(t))
        })?;
    }
    let mut total = 0;
    for sym in [None, Some(SymbolValue::new(0)), Some(SymbolValue::new(2))] {
        for choice in [K6Choice::MinusWord, K6Choice::PlusWord] {
            let c2 =
                cap::possible_types(RadicandCase::Case2, sym, choice).map_err(|e| e.to_string())?;
            let c3 =
                cap::possible_types(RadicandCase::Case3, sym, choice).map_err(|e| e.to_string())?;
            ensure(c2 == c3, || {
                format!("case 3 differs from case 2 for {sym:?}, {choice:?}")
            })?;
            if choice == K6Choice::MinusWord {
                ensure(c2.contains(&CapitulationType([1, 5, 4, 3, 2, 0])), || {
                    "case 2 lacks (1,5,4,3,2,0)".into()
                })?;
            }
            let case1 = sym.map(|s| cap::possible_types(RadicandCase::Case1, Some(s), choice));
            let mut all = c2.clone();
            if let Some(c1) = case1 {
                all.extend(c1.map_err(|e| e.to_string())?);
            }
            for t in &all {
                ensure(cap::pair_parity_holds(t), || {
                    format!("{t} breaks pair parity")
                })?;
            }
            total += all.len();
        }
    }
    Ok(format!(
        "12 tuples in case 1 (i), {total} tuples parity-checked"
    ))
}

fn tau2_structure() -> Outcome {
    let settings = [
        (RadicandCase::Case1, Some(SymbolValue::new(0))),
        (RadicandCase::Case1, Some(SymbolValue::new(1))),
        (RadicandCase::Case2, None),
        (RadicandCase::Case3, None),
    ];
    for (case, sym) in settings {
        let ks = cap::correspondence(case, sym).map_err(|e| e.to_string())?;
        let (x1, x2) = cap::generator_words(case).map_err(|e| e.to_string())?;
        let six = cap::six_extensions(x1, x2).map_err(|e| e.to_string())?;
        for k in &ks {
            for c in &k.candidates {
                ensure(six.iter().any(|w| w.projectively_eq(*c)), || {
                    format!(
                        "{case:?}: candidate {c:?} of K{} is not an extension word",
                        k.label
                    )
                })?;
            }
        }
        let mut perm = [usize::MAX; 6];
        for (i, k) in ks.iter().enumerate() {
            let img: Vec<_> = k.candidates.iter().map(|&w| cap::tau2_orbit(w)).collect();
            let hits: Vec<usize> = (0..6)
                .filter(|&j| {
                    ks[j].candidates.len() == img.len()
                        && ks[j]
                            .candidates
                            .iter()
                            .zip(&img)
                            .all(|(a, b)| a.projectively_eq(*b))
                })
                .collect();
            ensure(hits.len() == 1, || {
                format!("{case:?}: τ²(K{}) matches {hits:?}", i + 1)
            })?;
            perm[i] = hits[0];
        }
        ensure(perm == [0, 4, 3, 2, 1, 5], || {
            format!("{case:?}: permutation {:?}", perm.map(|j| j + 1))
        })?;
    }
    Ok("(K₂ K₅)(K₃ K₄) in all three cases, K₁ and K₆ fixed".into())
}

fn scan_determinism() -> Outcome {
    let run = |jobs: &str| {
        let start = Instant::now();
        let out = Command::new(BIN)
            .args(["scan", "2", "100000", "--jobs", jobs])
            .output()
            .map_err(|e| e.to_string())?;
        ensure(out.status.success(), || {
            format!("--jobs {jobs}: {}", out.status)
        })?;
        Ok::<_, String>((out.stdout, start.elapsed()))
    };
    let (single, t1) = run("1")?;
    let (multi, t8) = run("8")?;
    ensure(t1 < Duration::from_secs(60), || {
        format!("single-threaded scan took {t1:?}")
    })?;
    ensure(single == multi, || "outputs differ".into())?;
    Ok(format!(
        "{} bytes identical, {t1:?} with 1 job, {t8:?} with 8",
        single.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("table_corpus", table_corpus),
        ("symbol_oracle", symbol_oracle),
        ("splitting", splitting),
        ("kernel_suite", kernel_suite),
        ("h1_witnesses", h1_witnesses),
        ("type_lists", type_lists),
        ("tau2_structure", tau2_structure),
        ("scan_determinism", scan_determinism),
    ];
    let mut unexpected = Vec::new();
    for (name, f) in criteria {
        let result = f();
        let known = KNOWN_UNATTAINABLE.contains(&name);
        match &result {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(detail) if known => println!("FAIL {name} (known unattainable): {detail}"),
            Err(detail) => println!("FAIL {name}: {detail}"),
        }
        match (result.is_ok(), known) {
            (false, false) => unexpected.push(format!("{name} failed")),
            (true, true) => {
                unexpected.push(format!("{name} passed; drop it from KNOWN_UNATTAINABLE"))
            }
            _ => {}
        }
    }
    if unexpected.is_empty() {
        println!("acceptance: all criteria as expected");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {}", unexpected.join("; "));
        ExitCode::FAILURE
    }
}
