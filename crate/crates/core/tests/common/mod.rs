#![allow(dead_code)]

use std::path::PathBuf;

use terwilliger::scheme::{parse_scheme, validate_axioms};
use terwilliger::talg::{build_context, generate_algebra};
use terwilliger::{AlgebraBasis, FieldCtx, SchemeData, TalgContext};

pub fn fixture_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

pub fn load(name: &str) -> SchemeData {
    let text = std::fs::read_to_string(fixture_dir().join(name)).unwrap();
    validate_axioms(&parse_scheme(&text).unwrap()).unwrap()
}

pub fn all() -> Vec<(String, SchemeData)> {
    let mut names: Vec<String> = std::fs::read_dir(fixture_dir())
        .unwrap()
        .map(|e| e.unwrap().file_name().to_string_lossy().into_owned())
        .filter(|n| n.ends_with(".scheme"))
        .collect();
    names.sort();
    names.into_iter().map(|n| (n.clone(), load(&n))).collect()
}

pub fn algebra(s: &SchemeData, p: u64, x: usize) -> (TalgContext, AlgebraBasis) {
    let c = build_context(s, &FieldCtx::new(p).unwrap(), x).unwrap();
    let t = generate_algebra(&c);
    (c, t)
}
