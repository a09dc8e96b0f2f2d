use std::fmt::Write as _;
use std::path::PathBuf;

use terwilliger::{analyze, AnalysisReport};

use crate::load;
use crate::{Failure, Status};

#[derive(clap::Args)]
pub struct Args {
    /// Scheme file in the relation-table format
    #[arg(long)]
    scheme: PathBuf,
    /// Characteristic of the prime field
    #[arg(long)]
    prime: u64,
    /// Base point x of T(x)
    #[arg(long, default_value_t = 0, conflicts_with = "all_base_points")]
    base_point: usize,
    /// Analyse every base point
    #[arg(long)]
    all_base_points: bool,
    /// Emit the JSON report instead of a text summary
    #[arg(long)]
    json: bool,
    /// Write the output to a file
    #[arg(long)]
    out: Option<PathBuf>,
}

pub fn summary(r: &AnalysisReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "scheme {} (n = {}, d = {}) over {}", r.scheme_id, r.n, r.d, r.field);
    let _ = writeln!(s, "valencies {:?}", r.valencies);
    let _ = writeln!(s, "strata {:?}, epsilon {}", r.strata.sets, r.strata.epsilon);
    for level in &r.composition.levels {
        let _ = writeln!(s, "Q_{} = {:?}", level.n, level.classes);
    }
    let _ = writeln!(
        s,
        "composition length {}, uniserial {}, self-contragredient W_0 {}",
        r.composition_length, r.uniserial, r.self_contragredient_w0.isomorphic
    );
    let _ = writeln!(s, "dim B0 {}, dim B1 {}", r.dim_b0, r.dim_b1);
    for bp in &r.base_points {
        let c = &bp.characterization;
        let items: Vec<String> = c.computed().iter().map(|(k, v)| format!("{k}={v}")).collect();
        let _ = writeln!(
            s,
            "x = {}: dim T {}, dim Rad {}, dim Ann {}; {}",
            bp.base_point,
            bp.dim_t,
            bp.dim_rad,
            bp.dim_ann,
            items.join(" ")
        );
    }
    for w in &r.warnings {
        let _ = writeln!(s, "warning: {w}");
    }
    s
}

pub fn run(a: Args) -> Result<Status, Failure> {
    let f = load::field(a.prime)?;
    let s = load::scheme(&a.scheme)?;
    let id = load::scheme_id(&a.scheme);
    let points: Vec<usize> = if a.all_base_points { (0..s.n()).collect() } else { vec![a.base_point] };
    let report = analyze(&id, &s, &f, &points).map_err(|e| load::analysis_failure(&id, e))?;
    let text = if a.json { load::to_json(&report) } else { summary(&report) };
    load::write_output(a.out.as_deref(), &text)?;
    Ok(Status::Ok)
}
