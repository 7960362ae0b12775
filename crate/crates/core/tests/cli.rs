use std::path::PathBuf;
use std::process::{Command, Output};

fn opres(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_opres"))
        .args(args)
        .output()
        .expect("run opres")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("opres-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn check_reports_verdicts() {
    let o = opres(&["check", "fixtures/fig3"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("modular: FAIL at (a, f, e): {0,a,b,e} != {0,a}"), "{out}");
    assert!(out.contains("th1.lower_identity: pass"));
}

#[test]
fn check_json_is_stable() {
    let a = opres(&["check", "fixtures/fig2", "--json"]);
    let b = opres(&["check", "fixtures/fig2", "--json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["verdicts"]["distributive"]["pass"], false);
    assert_eq!(v["verdicts"]["complemented"]["pass"], true);
    assert_eq!(v["verdicts"]["involution"]["pass"], false);
}

#[test]
fn cyclic_file_is_a_usage_error() {
    let path = temp_file("cyclic.poset", "poset cyc\nelements x y\ncover x y\ncover y x\n");
    let o = opres(&["check", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr).to_lowercase();
    assert!(err.contains("cycle"), "{err}");
}

#[test]
fn syntax_errors_and_unknown_files_exit_2() {
    let path = temp_file("bad.poset", "poset bad\nelements x\nfrobnicate x\n");
    assert_eq!(opres(&["check", path.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(opres(&["check", "no/such/file"]).status.code(), Some(2));
    assert_eq!(opres(&["tables", "fixtures/fig6"]).status.code(), Some(2));
    assert_eq!(opres(&["bogus"]).status.code(), Some(2));
}

#[test]
fn tables_render_in_both_formats() {
    let o = opres(&["tables", "fixtures/fig6", "--variant", "rp"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let c_row = out.lines().find(|l| l.starts_with("c\t")).unwrap();
    assert_eq!(c_row, "c\t0\ta\tb\tc\t{a,b}\tc");
    let o = opres(&["tables", "fixtures/fig6", "--variant", "rp", "--format", "markdown"]);
    assert!(stdout(&o).contains("| c | 0 | a | b | c | {a,b} | c |"));
}

#[test]
fn tables_on_fig3_differ_from_print_only_in_listed_errata() {
    let o = opres(&["tables", "fixtures/fig3", "--variant", "th1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let (odot, arrow) = out.split_once("\n\n").unwrap();
    let entry = poset_residuation::fixtures::fixture("fig3").unwrap();
    let d_odot = poset_residuation::io::diff_tables(entry.golden_odot.unwrap(), odot);
    let d_arrow = poset_residuation::io::diff_tables(entry.golden_arrow.unwrap(), arrow);
    assert!(d_odot.is_empty());
    assert_eq!(d_arrow.len(), entry.errata.len());
    assert!(d_arrow.iter().all(|d| d.row == "f" || d.row == "f'"));
}

#[test]
fn adjoint_exit_codes() {
    let o = opres(&["adjoint", "fixtures/fig4", "--variant", "piecewise"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("2744 triples"));
    // premises violated
    assert_eq!(
        opres(&["adjoint", "fixtures/fig4", "--variant", "th1"]).status.code(),
        Some(1)
    );
    // forced through anyway, adjointness breaks
    let o = opres(&["adjoint", "fixtures/fig4", "--variant", "th1", "--no-enforce"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("left adjointness fails at"));
}

#[test]
fn adjoint_on_a_file() {
    let text = "poset b2\nelements 0 1\ncover 0 1\nunary 0 1\nunary 1 0\n";
    let path = temp_file("b2.poset", text);
    let o = opres(&["adjoint", path.to_str().unwrap(), "--variant", "boolean"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn search_is_clean() {
    for premise in ["th1", "th3", "rp"] {
        let o = opres(&["search", "--premise", premise, "--max-size", "4"]);
        assert_eq!(o.status.code(), Some(0), "{premise}");
        assert!(stdout(&o).contains("adjointness failures:     0"));
    }
    let o = opres(&["search", "--premise", "rp", "--max-size", "3", "--labeled"]);
    assert!(stdout(&o).contains("models examined:          23"));
    assert_eq!(
        opres(&["search", "--premise", "rp", "--max-size", "9"]).status.code(),
        Some(2)
    );
}

#[test]
fn fixtures_listing_and_verification() {
    let o = opres(&["fixtures"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 6);
    let o = opres(&["fixtures", "--verify"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("fig3: ok (20 known errata"));
    assert!(out.contains("fig4: ok (13 known errata"));
    assert!(out.contains("fig6: ok"));
}
