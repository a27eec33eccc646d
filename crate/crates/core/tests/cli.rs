use std::process::{Command, Output};

fn cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_torus-bundles"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = cli(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

/// Signed integers in order of appearance.
fn integers(s: &str) -> Vec<i64> {
    let mut out = Vec::new();
    let b = s.as_bytes();
    let mut i = 0;
    while i < b.len() {
        let neg = b[i] == b'-' && i + 1 < b.len() && b[i + 1].is_ascii_digit();
        let start = if neg { i + 1 } else { i };
        if b[start].is_ascii_digit() {
            let mut j = start;
            while j < b.len() && b[j].is_ascii_digit() {
                j += 1;
            }
            let v: i64 = s[start..j].parse().unwrap();
            out.push(if neg { -v } else { v });
            i = j;
        } else {
            i += 1;
        }
    }
    out
}

const CASES: &[&[&str]] = &[
    &["genus", "-A", "-1,-1;6,5"],
    &["homology", "-A", "-1,-1;6,5"],
    &["power-cover", "-A", "-1,0;3,-1", "-n", "3"],
    &["fiber-covers", "-A", "-1,-2;2,3", "--max-index", "4"],
    &[
        "fiber-covers",
        "-A",
        "-1,-2;2,3",
        "--max-index",
        "4",
        "--lowering-only",
    ],
    &["restrict", "-A", "-1,-2;2,3", "--basis", "2,0;0,1"],
    &["omega", "-m", "2", "-n", "8", "-d", "4", "--i0", "1"],
    &[
        "classify-rep",
        "--sigma",
        "(1,2,3,4)(5,6,7,8)",
        "--tau",
        "(1,5)(2,6)(3,7)(4,8)",
    ],
    &[
        "factor-rep",
        "--sx",
        "(1,2,3)(4,5,6)",
        "--sy",
        "(1,3,2)(4,6,5)",
        "--st",
        "(1,4)(2,6)(3,5)",
    ],
    &["fox-cert", "--alpha", "-4"],
    &["seifert-cover", "--symbol", "Oo,0;1/2,2/5", "-n", "3"],
    &["seifert-genus", "--symbol", "Oo,2;1/3"],
    &["seifert-lower", "--symbol", "Oo,1;5/3"],
];

#[test]
fn text_and_json_carry_the_same_numbers() {
    for case in CASES {
        let text = stdout(case);
        let mut with_json = vec!["--format", "json"];
        with_json.extend_from_slice(case);
        let json = stdout(&with_json);
        let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert!(parsed.is_object(), "{case:?}");
        let (mut a, mut b) = (integers(&text), integers(&json));
        a.sort_unstable();
        b.sort_unstable();
        assert_eq!(a, b, "{case:?}\n{text}\n{json}");
    }
}

#[test]
fn documented_outputs() {
    assert!(stdout(&["genus", "-A", "-1,-1;6,5"]).contains("genus: 2"));
    assert!(stdout(&["genus", "-A", "-1,-2;2,3"]).contains("genus: 3"));
    let omega = stdout(&["omega", "-m", "2", "-n", "8", "-d", "4", "--i0", "1"]);
    assert!(omega.contains("(1,2,3,4,5,6,7,8)(9,10,11,12,13,14,15,16)"));
    assert!(omega.contains("(1,9,3,11,5,13,7,15)(2,10,4,12,6,14,8,16)"));
    let json = stdout(&["--format", "json", "homology", "-A", "-1,-1;6,5"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    let pairs = v["sakuma_pairs"].as_array().unwrap();
    assert!(
        pairs.iter().any(|p| p == "{1,6}") && pairs.iter().any(|p| p == "{2,3}"),
        "{v}"
    );
    let lower = stdout(&["--format", "json", "seifert-lower", "--symbol", "Oo,1;5/3"]);
    assert!(lower.contains("Oo,1;1/3"), "{lower}");
}

#[test]
fn exit_codes() {
    assert_eq!(cli(&["genus", "-A", "1,2;3"]).status.code(), Some(2));
    assert_eq!(cli(&["genus", "-A", "2,0;0,2"]).status.code(), Some(1));
    assert_eq!(
        cli(&["omega", "-m", "3", "-n", "4", "-d", "1"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(cli(&["no-such-command"]).status.code(), Some(2));
    let out = cli(&["genus", "-A", "2,0;0,2"]);
    assert!(!out.stderr.is_empty());
}
