use std::path::Path;

use terwilliger::scheme::{parse_scheme, validate_axioms};
use terwilliger::{AnalysisError, FieldCtx, SchemeData};

use crate::{Failure, Status};

pub fn field(p: u64) -> Result<FieldCtx, Failure> {
    FieldCtx::new(p).map_err(|e| Failure::new(Status::Usage, format!("--prime {p}: {e}")))
}

/// Reads and validates a scheme file. Unreadable files are usage errors;
/// malformed tables and axiom violations are validation failures.
pub fn scheme(path: &Path) -> Result<SchemeData, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::new(Status::Usage, format!("{}: {e}", path.display())))?;
    let table = parse_scheme(&text).map_err(|e| Failure::new(Status::Invalid, format!("{}: {e}", path.display())))?;
    validate_axioms(&table).map_err(|e| Failure::new(Status::Invalid, format!("{}: {e}", path.display())))
}

pub fn scheme_id(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

pub fn analysis_failure(id: &str, e: AnalysisError) -> Failure {
    match e {
        AnalysisError::BasePoint { .. } => Failure::new(Status::Usage, format!("{id}: {e}")),
        AnalysisError::Scheme(_) => Failure::new(Status::Invalid, format!("{id}: {e}")),
        AnalysisError::Inconsistent(_) => Failure::new(Status::Inconsistent, format!("{id}: {e}")),
    }
}

/// Pretty JSON with keys in sorted order.
pub fn to_json<T: serde::Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("reports serialize");
    let mut s = serde_json::to_string_pretty(&v).expect("json value");
    s.push('\n');
    s
}

pub fn write_output(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::new(Status::Usage, format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
