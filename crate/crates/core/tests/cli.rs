use std::fs;
use std::path::PathBuf;
use std::sync::atomic::{AtomicUsize, Ordering};

use orbit_count::cli::{run, Output, EXIT_FAILURE, EXIT_INPUT, EXIT_OK, EXIT_USAGE};

static COUNTER: AtomicUsize = AtomicUsize::new(0);

struct TempFile(PathBuf);

impl TempFile {
    fn new(contents: &str) -> Self {
        let n = COUNTER.fetch_add(1, Ordering::SeqCst);
        let path = std::env::temp_dir().join(format!("orbitseq-test-{}-{n}.b", std::process::id()));
        fs::write(&path, contents).unwrap();
        TempFile(path)
    }

    fn arg(&self) -> &str {
        self.0.to_str().unwrap()
    }
}

impl Drop for TempFile {
    fn drop(&mut self) {
        let _ = fs::remove_file(&self.0);
    }
}

fn orbitseq(args: &[&str]) -> Output {
    run(std::iter::once("orbitseq").chain(args.iter().copied()))
}

fn values(out: &Output) -> Vec<String> {
    out.stdout
        .lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| l.split(' ').nth(1).unwrap().to_string())
        .collect()
}

#[test]
fn golden_mean_monoid_counts() {
    let out = orbitseq(&["seq", "golden_mean", "--terms", "6", "--view", "monoid"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    assert_eq!(out.stdout, "1 1\n2 2\n3 3\n4 5\n5 8\n6 13\n");
}

#[test]
fn product_of_zeta_files() {
    let zeta = TempFile::new(&orbitseq(&["seq", "zeta", "--terms", "8"]).stdout);
    let out = orbitseq(&[
        "op",
        "product",
        "--in",
        zeta.arg(),
        "--in",
        zeta.arg(),
        "--terms",
        "8",
    ]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    assert_eq!(values(&out), ["1", "4", "5", "10", "7", "20", "9", "22"]);
}

#[test]
fn iterate_and_union() {
    let id = TempFile::new(&orbitseq(&["seq", "id_orbits", "--terms", "16"]).stdout);
    let out = orbitseq(&[
        "op",
        "iterate",
        "--k",
        "2",
        "--in",
        id.arg(),
        "--terms",
        "8",
    ]);
    assert_eq!(values(&out), ["5", "8", "15", "16", "25", "24", "35", "32"]);
    let out = orbitseq(&[
        "op",
        "union",
        "--in",
        id.arg(),
        "--in",
        id.arg(),
        "--terms",
        "3",
    ]);
    assert_eq!(values(&out), ["2", "4", "6"]);
    let out = orbitseq(&[
        "op",
        "iterate",
        "--k",
        "3",
        "--in",
        id.arg(),
        "--terms",
        "8",
    ]);
    assert_eq!(out.code, EXIT_USAGE);
}

#[test]
fn params_and_views() {
    let out = orbitseq(&[
        "seq",
        "full_shift",
        "--param",
        "a=2",
        "--terms",
        "6",
        "--view",
        "orbit",
    ]);
    assert_eq!(values(&out), ["2", "1", "2", "3", "6", "9"]);
    let out = orbitseq(&["seq", "s_P", "--param", "P=!2", "--terms", "4"]);
    assert_eq!(values(&out), ["1", "1", "0", "1"]);
    let out = orbitseq(&["seq", "full_shift", "--param", "a=1", "--terms", "4"]);
    assert_eq!(out.code, EXIT_USAGE);
    let out = orbitseq(&[
        "seq", "a_S", "--param", "S=2", "--terms", "4", "--view", "orbit",
    ]);
    assert_eq!(out.code, EXIT_USAGE);
}

#[test]
fn transforms_round_trip() {
    let fix = TempFile::new(&orbitseq(&["seq", "golden_mean", "--terms", "12"]).stdout);
    let orbits = orbitseq(&["transform", "fix-to-orbit", "--in", fix.arg()]);
    let orbit_file = TempFile::new(&orbits.stdout);
    let back = orbitseq(&["transform", "orbit-to-fix", "--in", orbit_file.arg()]);
    assert_eq!(back.stdout, fs::read_to_string(&fix.0).unwrap());

    let monoid = TempFile::new(&orbitseq(&["transform", "euler", "--in", orbit_file.arg()]).stdout);
    let inverted = orbitseq(&["transform", "euler-inv", "--in", monoid.arg()]);
    assert_eq!(inverted.stdout, orbits.stdout);
}

#[test]
fn failed_inversion_exits_one_with_index() {
    let f = TempFile::new("1 1\n2 2\n");
    let out = orbitseq(&["transform", "fix-to-orbit", "--in", f.arg()]);
    assert_eq!(out.code, EXIT_FAILURE);
    assert!(out.stdout.is_empty());
    assert!(out.stderr.contains("n = 2"), "{}", out.stderr);
}

#[test]
fn malformed_input_exits_three() {
    for text in ["1 1\n3 2\n", "1 x\n", "", "1 -1\n", "0 1\n1 1\n"] {
        let f = TempFile::new(text);
        let out = orbitseq(&["transform", "euler", "--in", f.arg()]);
        assert_eq!(out.code, EXIT_INPUT, "{text:?}: {}", out.stderr);
    }
    let out = orbitseq(&["transform", "euler", "--in", "/nonexistent/orbitseq.b"]);
    assert_eq!(out.code, EXIT_INPUT);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(orbitseq(&[]).code, EXIT_USAGE);
    assert_eq!(orbitseq(&["seq", "zeta"]).code, EXIT_USAGE);
    assert_eq!(orbitseq(&["seq", "nope", "--terms", "3"]).code, EXIT_USAGE);
    assert_eq!(orbitseq(&["seq", "zeta", "--terms", "0"]).code, EXIT_USAGE);
    assert_eq!(
        orbitseq(&["seq", "zeta", "--terms", "3", "--view", "sideways"]).code,
        EXIT_USAGE
    );
    assert_eq!(orbitseq(&["verify", "no-such-identity"]).code, EXIT_USAGE);
    let out = orbitseq(&["transform", "bogus", "--in", "x"]);
    assert_eq!(out.code, EXIT_USAGE);
    assert!(!out.stderr.is_empty());
}

#[test]
fn help_goes_to_stdout() {
    let out = orbitseq(&["--help"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("verify"));
}

#[test]
fn verify_single_and_all() {
    let out = orbitseq(&["verify", "ttimest-series", "--terms", "200"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    assert_eq!(out.stdout, "PASS ttimest-series\n");

    let out = orbitseq(&["verify", "all", "--terms", "30"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    assert!(out.stdout.lines().all(|l| l.starts_with("PASS ")));
    let listed = orbitseq(&["list"]);
    let identities = listed
        .stdout
        .split("# identities\n")
        .nth(1)
        .unwrap()
        .lines()
        .count();
    assert_eq!(out.stdout.lines().count(), identities);
}

#[test]
fn export_import_round_trip() {
    let canonical = orbitseq(&["seq", "feigenbaum", "--terms", "10"]).stdout;
    let internal = TempFile::new(&canonical);
    let exported = orbitseq(&["export", "--offset", "0", "--in", internal.arg()]);
    assert_eq!(exported.code, EXIT_OK);
    assert!(exported.stdout.starts_with("0 1\n1 1\n2 0\n"));
    let external = TempFile::new(&exported.stdout);
    let imported = orbitseq(&["import", "--offset", "0", "--in", external.arg()]);
    assert_eq!(imported.stdout, canonical);

    let wrong = orbitseq(&["import", "--offset", "1", "--in", external.arg()]);
    assert_eq!(wrong.code, EXIT_INPUT);
    let default = orbitseq(&["export", "--in", internal.arg()]);
    assert_eq!(default.stdout, canonical);
}

#[test]
fn comments_are_ignored_on_input() {
    let f = TempFile::new("# zeta\n1 1\n2 1\n\n3 1\n");
    let out = orbitseq(&["transform", "orbit-to-fix", "--in", f.arg()]);
    assert_eq!(out.stdout, "1 1\n2 3\n3 4\n");
}

#[test]
fn factor_lists_pairs() {
    let zeta = TempFile::new(&orbitseq(&["seq", "zeta", "--terms", "10"]).stdout);
    let out = orbitseq(&["factor", "--in", zeta.arg(), "--terms", "10"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.ends_with("# pairs 16\n"));
    assert_eq!(out.stdout.matches("# pair ").count(), 32);
    let limited = orbitseq(&[
        "factor",
        "--in",
        zeta.arg(),
        "--terms",
        "10",
        "--limit",
        "3",
    ]);
    assert!(limited.stdout.contains("limit reached"));
}

#[test]
fn growth_report() {
    let out = orbitseq(&[
        "growth",
        "--name",
        "full_shift",
        "--param",
        "a=2",
        "--h",
        "0.6931471805599453",
        "--c1",
        "1",
        "--terms",
        "30",
    ]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    let ratio: f64 = out
        .stdout
        .lines()
        .find_map(|l| l.strip_prefix("pi_ratio "))
        .unwrap()
        .parse()
        .unwrap();
    assert!((ratio - 1.0).abs() <= 5.0 / 30.0);
    let bad = orbitseq(&[
        "growth", "--name", "zeta", "--h", "-1", "--c1", "1", "--terms", "5",
    ]);
    assert_eq!(bad.code, EXIT_USAGE);
}

#[test]
fn output_is_deterministic() {
    let args = ["seq", "s_integer_23", "--terms", "40", "--view", "monoid"];
    assert_eq!(orbitseq(&args), orbitseq(&args));
    let args = ["verify", "three-routes", "--terms", "30"];
    assert_eq!(orbitseq(&args), orbitseq(&args));
}
