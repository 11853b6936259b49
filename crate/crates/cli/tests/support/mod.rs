//! The committed golden cases: arguments, expected exit code, output file.

use std::path::{Path, PathBuf};
use std::process::Command;

pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub code: i32,
}

pub const CASES: &[Case] = &[
    Case { name: "factor_empty_to_point.json", args: &["factor", "--generators", "boundary", "--map", "@empty_to_point.json", "--dim-bound", "0"], code: 0 },
    Case { name: "factor_no_stages.json", args: &["factor", "--map", "@empty_to_point.json", "--dim-bound", "0", "--max-stages", "0"], code: 3 },
    Case { name: "factor_boundary1.txt", args: &["factor", "--map", "@boundary1_to_point.json", "--dim-bound", "1", "--format", "text"], code: 0 },
    Case { name: "cofibrant_boundary1.json", args: &["cofibrant", "--object", "@boundary1.json", "--dim-bound", "1"], code: 0 },
    Case { name: "fibrant_boundary1.txt", args: &["fibrant", "--object", "@boundary1.json", "--dim-bound", "1", "--generators", "inner-horn", "--format", "text"], code: 0 },
    Case { name: "resolve_a.json", args: &["resolve", "--instance", "a", "--levels", "3"], code: 0 },
    Case { name: "resolve_a_corrupt.txt", args: &["resolve", "--instance", "a", "--corrupt-mu", "--format", "text"], code: 1 },
    Case { name: "resolve_b.json", args: &["resolve", "--instance", "b", "--object", "@boundary1.json", "--levels", "2"], code: 0 },
    Case { name: "adjcheck_equal.txt", args: &["adjcheck", "G F eta ∘ eta", "eta G F ∘ eta", "--format", "text"], code: 0 },
    Case { name: "adjcheck_distinct.json", args: &["adjcheck", "eta G F", "G F eta"], code: 1 },
    Case { name: "adjcheck_triangle.txt", args: &["adjcheck", "eps F ∘ F eta", "F", "--format", "text"], code: 0 },
    Case { name: "adjcheck_ill_typed.txt", args: &["adjcheck", "eta ∘ eps", "eta", "--format", "text"], code: 2 },
    Case { name: "complete_a.json", args: &["complete", "--instance", "a", "--x", "2", "--levels", "2"], code: 0 },
    Case { name: "complete_amitsur.json", args: &["complete", "--instance", "amitsur", "--p", "2", "--k", "2", "--levels", "3"], code: 0 },
    Case { name: "complete_amitsur.txt", args: &["complete", "--instance", "amitsur", "--levels", "3", "--format", "text"], code: 0 },
    Case { name: "complete_split.txt", args: &["complete", "--instance", "amitsur", "--module", "free", "--levels", "3", "--format", "text"], code: 0 },
];

pub fn manifest() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn golden(name: &str) -> PathBuf {
    manifest().join("tests/golden").join(name)
}

/// `@file` names a fixture.
pub fn resolve_args(args: &[&str]) -> Vec<String> {
    args.iter()
        .map(|a| match a.strip_prefix('@') {
            Some(f) => manifest().join("tests/fixtures").join(f).to_string_lossy().into_owned(),
            None => a.to_string(),
        })
        .collect()
}

pub fn run(args: &[String]) -> (i32, Vec<u8>, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_homres")).args(args).env_remove("HOMRES_BUDGET").output().expect("the binary runs");
    (out.status.code().expect("exit code"), out.stdout, out.stderr)
}

/// Fixture paths appear in reports only through file contents, so outputs
/// do not depend on where the repository lives.
pub fn run_case(case: &Case) -> (i32, Vec<u8>) {
    let (code, stdout, _) = run(&resolve_args(case.args));
    (code, stdout)
}

pub fn read(path: &Path) -> Vec<u8> {
    std::fs::read(path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}
