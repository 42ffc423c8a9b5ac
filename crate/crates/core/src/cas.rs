//! Bridge to an external computer algebra system that computes the 5-class
//! group of k. One request line `{"n": N}` goes to the child's stdin, one
//! response line `{"h_k5": H, "type": [A, B], "rank_ambiguous": R}` comes
//! back on stdout.

use std::io::{BufRead, BufReader, Write};
use std::process::{Command, Stdio};
use std::sync::mpsc;
use std::time::Duration;

use serde_json::Value;

use crate::error::{Error, Result};
use crate::fixtures::FixtureEntry;

pub const DEFAULT_TIMEOUT: Duration = Duration::from_secs(600);

/// Run `command` through `sh -c` and ask it about n.
pub fn cas_adapter_check(n: u64, command: &str, timeout: Duration) -> Result<FixtureEntry> {
    let process_err = |reason: String| Error::CasProcess { n, reason };
    let mut child = Command::new("sh")
        .arg("-c")
        .arg(command)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::null())
        .spawn()
        .map_err(|e| process_err(format!("spawn: {e}")))?;

    let mut stdin = child.stdin.take().expect("piped stdin");
    // a child that exits without reading closes the pipe; that shows up below
    let _ = writeln!(stdin, "{{\"n\": {n}}}");
    drop(stdin);

    let stdout = child.stdout.take().expect("piped stdout");
    let (tx, rx) = mpsc::channel();
    std::thread::spawn(move || {
        let mut line = String::new();
        let r = BufReader::new(stdout).read_line(&mut line).map(|_| line);
        let _ = tx.send(r);
    });

    let line = match rx.recv_timeout(timeout) {
        Ok(Ok(line)) => line,
        Ok(Err(e)) => {
            let _ = child.kill();
            let _ = child.wait();
            return Err(process_err(format!("read: {e}")));
        }
        Err(_) => {
            let _ = child.kill();
            let _ = child.wait();
            return Err(Error::CasTimeout {
                n,
                millis: timeout.as_millis() as u64,
            });
        }
    };
    let status = child
        .wait()
        .map_err(|e| process_err(format!("wait: {e}")))?;
    if line.trim().is_empty() {
        return Err(process_err(format!("no response ({status})")));
    }
    if !status.success() {
        return Err(process_err(format!("exited with {status}")));
    }
    parse_response(n, &line)
}

/// Validate the shape of one response line.
pub fn parse_response(n: u64, line: &str) -> Result<FixtureEntry> {
    let protocol = |reason: &str| Error::CasProtocol {
        n,
        reason: reason.to_string(),
    };
    let v: Value = serde_json::from_str(line.trim()).map_err(|e| protocol(&e.to_string()))?;
    let obj = v
        .as_object()
        .ok_or_else(|| protocol("response is not an object"))?;
    let h_k5 = obj
        .get("h_k5")
        .and_then(Value::as_u64)
        .ok_or_else(|| protocol("h_k5 missing or not a non-negative integer"))?;
    let ty = obj
        .get("type")
        .and_then(Value::as_array)
        .filter(|a| a.len() == 2)
        .ok_or_else(|| protocol("type must be an array of two integers"))?;
    let group_type = [
        ty[0]
            .as_u64()
            .ok_or_else(|| protocol("type entries must be integers"))?,
        ty[1]
            .as_u64()
            .ok_or_else(|| protocol("type entries must be integers"))?,
    ];
    let rank = obj
        .get("rank_ambiguous")
        .and_then(Value::as_u64)
        .and_then(|r| u32::try_from(r).ok())
        .ok_or_else(|| protocol("rank_ambiguous missing or not an integer"))?;
    Ok(FixtureEntry {
        n,
        h_k5,
        group_type,
        rank_ambiguous: rank,
        display: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_good_line() {
        let e = parse_response(55, r#"{"h_k5": 25, "type": [5, 5], "rank_ambiguous": 2}"#).unwrap();
        assert_eq!((e.h_k5, e.group_type, e.rank_ambiguous), (25, [5, 5], 2));
    }

    #[test]
    fn rejects_bad_lines() {
        for bad in [
            "garbage",
            "[1,2]",
            r#"{"h_k5": 25, "type": [5], "rank_ambiguous": 2}"#,
            r#"{"h_k5": -1, "type": [5, 5], "rank_ambiguous": 2}"#,
            r#"{"type": [5, 5], "rank_ambiguous": 2}"#,
        ] {
            assert!(matches!(
                parse_response(1, bad),
                Err(Error::CasProtocol { n: 1, .. })
            ));
        }
    }

    #[test]
    fn shell_adapter_round_trip() {
        let cmd = r#"read line; echo '{"h_k5": 25, "type": [5, 5], "rank_ambiguous": 2}'"#;
        let e = cas_adapter_check(93, cmd, Duration::from_secs(20)).unwrap();
        assert_eq!(e.n, 93);
        assert_eq!(e.h_k5, 25);
    }

    #[test]
    fn timeout_and_failure() {
        let r = cas_adapter_check(7, "sleep 5", Duration::from_millis(200));
        assert_eq!(r, Err(Error::CasTimeout { n: 7, millis: 200 }));
        let r = cas_adapter_check(7, "exit 3", Duration::from_secs(20));
        assert!(matches!(r, Err(Error::CasProcess { n: 7, .. })));
    }
}
