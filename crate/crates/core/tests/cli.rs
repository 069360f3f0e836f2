use std::path::PathBuf;
use std::process::{Command, Output};
use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use quiverrep::{format, quiver, sample};

fn qrep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qrep")).args(args).output().expect("qrep runs")
}

fn scratch(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("qrep-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn classify_exit_codes() {
    let o = qrep(&["classify", "E6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("E6"));

    let f = scratch("four.quiver", &format::render_quiver(&quiver::four_subspace()));
    let o = qrep(&["classify", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1), "{}", stdout(&o));
    assert!(stdout(&o).contains("Euclidean"));

    assert_eq!(qrep(&["classify", "no-such-quiver"]).status.code(), Some(2));
    assert_eq!(qrep(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn decompose_checks_its_witness() {
    let mut g = ChaCha8Rng::seed_from_u64(3);
    let q = Arc::new(quiver::type_d(5));
    let m = sample::random_rep(&q, 2, &mut g);
    let f = scratch("m.rep", &format::render_rep_inline(&m));
    let w = f.with_extension("witness");
    let o = qrep(&["decompose", f.to_str().unwrap(), "--check", "--witness", w.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(w.exists());
}

#[test]
fn knit_writes_dot() {
    let f = std::env::temp_dir().join(format!("qrep-cli-{}-ar.dot", std::process::id()));
    let o = qrep(&["--dot", f.to_str().unwrap(), "knit", "D6", "--hammock", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let dot = std::fs::read_to_string(&f).unwrap();
    assert!(dot.starts_with("digraph"));
    assert!(dot.contains("source") && dot.contains("sink"));
}

#[test]
fn tables_match_the_stored_values() {
    for t in ["E6", "D6"] {
        let o = qrep(&["tables", t]);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
        assert!(!stdout(&o).contains("MISMATCH"));
    }
}

#[test]
fn verify_is_deterministic_under_a_seed() {
    let a = qrep(&["--seed", "5", "verify", "random-d"]);
    let b = qrep(&["--seed", "5", "verify", "random-d"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}
