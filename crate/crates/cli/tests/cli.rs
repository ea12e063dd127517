use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fflauricella")).args(args).output().unwrap()
}

fn json(args: &[&str]) -> (i32, Value) {
    let out = run(args);
    (out.status.code().unwrap(), serde_json::from_slice(&out.stdout).unwrap())
}

#[test]
fn counts_points_over_f3() {
    for extra in [&[][..], &["--naive"][..]] {
        let mut args = vec!["count", "--p", "3", "--N", "2", "--i", "1", "--j", "1", "--k", "1", "--lambda", "2"];
        args.extend(extra);
        let (code, v) = json(&args);
        assert_eq!(code, 0);
        assert_eq!(v["count"], 4);
    }
}

#[test]
fn picard_genus() {
    let (code, v) = json(&["genus", "--N", "3", "--i", "2", "--j", "1", "--k", "1,1"]);
    assert_eq!(code, 0);
    assert_eq!(v["genus"], 3);
}

#[test]
fn hasse_anchor() {
    let (_, v) = json(&["hasse", "--p", "7", "--s", "1", "--t", "1"]);
    assert_eq!(v["hasse"], 1);
}

#[test]
fn cyclotomic_values_carry_their_level() {
    let (code, v) = json(&["eval-pd", "--p", "7", "--order", "3", "--a", "1", "--b", "1,1", "--c", "0", "--lambda", "3,5"]);
    assert_eq!(code, 0);
    assert_eq!(v["value"]["level"], 3);
    // Exponent sugar: order 3 at p = 7 is exponent 2.
    let (_, w) = json(&["eval-pd", "--p", "7", "--a", "2", "--b", "2,2", "--c", "0", "--lambda", "3,5"]);
    assert_eq!(v["value"], w["value"]);
    let (_, f) = json(&["eval-fd", "--p", "7", "--a", "2", "--b", "2", "--c", "0", "--lambda", "3"]);
    assert!(f["numerator"]["coeffs"].is_array() && f["denominator"]["level"].is_u64());
}

#[test]
fn verify_sweeps_in_prime_order() {
    let (code, v) = json(&["verify", "--id", "cubic-2f1", "--primes", "7..50"]);
    assert_eq!(code, 0);
    let reports: Vec<&Value> = v["reports"].as_array().unwrap().iter().filter(|r| r.get("skipped").is_none()).collect();
    let primes: Vec<u64> = reports.iter().map(|r| r["prime"].as_u64().unwrap()).collect();
    assert_eq!(primes, [7, 13, 19, 31, 37, 43]);
}

#[test]
fn verification_failure_exits_one_with_counterexamples() {
    let (code, v) = json(&["verify", "--id", "cubic-f1", "--primes", "7"]);
    assert_eq!(code, 1);
    assert_eq!(v["status"], "fail");
    assert!(!v["reports"][0]["failures"].as_array().unwrap().is_empty());
}

#[test]
fn sampled_output_is_byte_identical() {
    let args = ["verify", "--id", "pd-reduce-2", "--primes", "13", "--mode", "sample", "--seed", "9", "--count", "500"];
    let (a, b) = (run(&args), run(&args));
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["reports"][0]["mode"]["seed"], 9);
}

#[test]
fn errors_are_structured() {
    for (args, kind) in [
        (&["verify", "--id", "cubic-f1", "--primes", "11"][..], None),
        (&["verify", "--id", "nope", "--primes", "7"][..], Some("UnknownIdentity")),
        (&["verify", "--id", "binom-thm", "--primes", "8..10"][..], Some("EmptyRange")),
        (&["hasse", "--p", "11", "--s", "1", "--t", "1"][..], Some("BadPrime")),
        (&["count", "--p", "9", "--N", "2", "--i", "1", "--j", "1", "--k", "1", "--lambda", "2"][..], Some("NotAnOddPrime")),
        (&["count", "--p", "3"][..], Some("Usage")),
    ] {
        let (code, v) = json(args);
        match kind {
            // A sweep over one incompatible prime is a skip, not an error.
            None => assert_eq!((code, v["reports"][0]["prime"].as_u64()), (0, Some(11))),
            Some(kind) => {
                assert_eq!(code, 2, "{args:?}");
                assert_eq!(v["error"]["kind"], kind, "{args:?}");
            }
        }
    }
}

#[test]
fn csv_output() {
    let out = run(&["genus", "--N", "3", "--i", "2", "--j", "1", "--k", "1,1", "--format", "csv"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "command,status,genus\ngenus,ok,3\n");
    let out = run(&["verify", "--id", "binom-thm", "--primes", "5..7", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 3);
}
