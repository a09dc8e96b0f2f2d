use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde_json::{json, Value};
use terwilliger::analyze;

use crate::load;
use crate::{Failure, Status};

#[derive(clap::Args)]
pub struct Args {
    /// Directory of `.scheme` files
    #[arg(long)]
    dir: PathBuf,
    /// Comma-separated primes
    #[arg(long, value_delimiter = ',', required = true)]
    primes: Vec<u64>,
    /// Write the JSON document to a file instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads (default: all cores)
    #[arg(long)]
    jobs: Option<usize>,
}

fn entry(path: &Path, p: u64) -> (Status, Value) {
    let id = load::scheme_id(path);
    let outcome = load::field(p)
        .and_then(|f| load::scheme(path).map(|s| (f, s)))
        .and_then(|(f, s)| analyze(&id, &s, &f, &[0]).map_err(|e| load::analysis_failure(&id, e)));
    match outcome {
        Ok(report) => (
            Status::Ok,
            json!({ "file": id, "prime": p, "status": "ok", "report": report }),
        ),
        Err(fail) => {
            let label = match fail.status {
                Status::Inconsistent => "inconsistent",
                Status::Invalid => "invalid",
                _ => "error",
            };
            (
                fail.status,
                json!({ "file": id, "prime": p, "status": label, "error": fail.message }),
            )
        }
    }
}

pub fn run(a: Args) -> Result<Status, Failure> {
    for &p in &a.primes {
        load::field(p)?;
    }
    let read = std::fs::read_dir(&a.dir).map_err(|e| Failure::new(Status::Usage, format!("{}: {e}", a.dir.display())))?;
    let mut files: Vec<PathBuf> = read
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "scheme"))
        .collect();
    files.sort();
    if files.is_empty() {
        return Err(Failure::new(Status::Usage, format!("no .scheme files in {}", a.dir.display())));
    }
    let tasks: Vec<(&PathBuf, u64)> = files.iter().flat_map(|f| a.primes.iter().map(move |&p| (f, p))).collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(a.jobs.unwrap_or(0))
        .build()
        .map_err(|e| Failure::new(Status::Usage, format!("thread pool: {e}")))?;
    let results: Vec<(Status, Value)> = pool.install(|| tasks.par_iter().map(|&(f, p)| entry(f, p)).collect());

    let mut worst = Status::Ok;
    for ((path, p), (status, value)) in tasks.iter().zip(&results) {
        let detail = match &value["report"] {
            Value::Null => value["error"].as_str().unwrap_or_default().to_string(),
            r => format!(
                "length {} uniserial {} p'-valenced {}",
                r["composition_length"], r["uniserial"], r["strata"]["p_prime_valenced"]
            ),
        };
        eprintln!("{:<24} p={:<3} {:<12} {}", load::scheme_id(path), p, value["status"].as_str().unwrap_or("?"), detail);
        worst = worst.max(*status);
    }
    let doc = json!({
        "schema": terwilliger::analysis::SCHEMA_VERSION,
        "primes": a.primes,
        "entries": results.into_iter().map(|(_, v)| v).collect::<Vec<_>>(),
    });
    load::write_output(a.out.as_deref(), &load::to_json(&doc))?;
    Ok(worst)
}
