//! Fixture loading shared by the benchmarks.

use std::path::PathBuf;

use terwilliger::scheme::{parse_scheme, validate_axioms};
use terwilliger::SchemeData;

pub fn fixture(name: &str) -> SchemeData {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name);
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    validate_axioms(&parse_scheme(&text).expect("fixture parses")).expect("fixture is a scheme")
}
