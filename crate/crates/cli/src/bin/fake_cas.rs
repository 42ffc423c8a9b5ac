//! Stand-in for a CAS adapter: answers from a fixtures file.
//!
//! Usage: fake-cas --fixtures PATH [--mode ok|garbage|sleep|fail]

use std::io::{self, BufRead, Write};
use std::process::ExitCode;

use metacyclic_core::fixtures;

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let opt = |name: &str| {
        args.iter()
            .position(|a| a == name)
            .and_then(|i| args.get(i + 1))
            .cloned()
    };
    let mode = opt("--mode").unwrap_or_else(|| "ok".into());
    let mut line = String::new();
    if io::stdin().lock().read_line(&mut line).is_err() {
        return ExitCode::from(1);
    }
    match mode.as_str() {
        "garbage" => {
            println!("this is not json");
            return ExitCode::SUCCESS;
        }
        "sleep" => {
            std::thread::sleep(std::time::Duration::from_secs(30));
            return ExitCode::SUCCESS;
        }
        "fail" => return ExitCode::from(3),
        _ => {}
    }
    let Some(path) = opt("--fixtures") else {
        eprintln!("--fixtures is required");
        return ExitCode::from(2);
    };
    let n = serde_json::from_str::<serde_json::Value>(&line)
        .ok()
        .and_then(|v| v.get("n").and_then(|n| n.as_u64()));
    let Some(n) = n else {
        eprintln!("bad request: {line}");
        return ExitCode::from(2);
    };
    let entries = match fixtures::load_fixtures(std::path::Path::new(&path)) {
        Ok(e) => e,
        Err(e) => {
            eprintln!("{e}");
            return ExitCode::from(2);
        }
    };
    match entries.iter().find(|e| e.n == n) {
        Some(e) => {
            let resp = serde_json::json!({
                "h_k5": e.h_k5,
                "type": e.group_type,
                "rank_ambiguous": e.rank_ambiguous,
            });
            let mut out = io::stdout().lock();
            let _ = writeln!(out, "{resp}");
            ExitCode::SUCCESS
        }
        None => {
            eprintln!("unknown radicand {n}");
            ExitCode::from(1)
        }
    }
}
