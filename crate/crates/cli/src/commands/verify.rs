use std::path::PathBuf;

use terwilliger::oracle::{brute_force_axioms, brute_force_radical, submodule_lattice, word_closure};
use terwilliger::primary::{build_primary, closure_digraph, composition_factors, filtration, uniserial_check};
use terwilliger::scheme::{parse_scheme, strata};
use terwilliger::talg::{build_context, generate_algebra, radical_unchecked, verify_radical};
use terwilliger::{analyze, AlgebraBasis, FieldCtx, GfpMatrix, SchemeData};

use crate::load;
use crate::{Failure, Status};

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum Fault {
    Radical,
}

#[derive(clap::Args)]
pub struct Args {
    /// Scheme file
    #[arg(long)]
    scheme: PathBuf,
    /// Characteristic of the field
    #[arg(long)]
    prime: u64,
    /// Run the oracles at every base point and with larger enumeration limits
    #[arg(long)]
    deep: bool,
    /// Corrupt one fast-path result before it is checked
    #[arg(long, value_enum, hide = true)]
    inject_fault: Option<Fault>,
}

struct Tally {
    failed: bool,
}

impl Tally {
    fn record(&mut self, name: &str, fast: impl std::fmt::Debug, oracle: impl std::fmt::Debug, agree: bool) {
        if agree {
            println!("ok        {name}: {fast:?}");
        } else {
            println!("MISMATCH  {name}: fast {fast:?}, oracle {oracle:?}");
            self.failed = true;
        }
    }

    fn skip(&self, name: &str, why: &str) {
        println!("skipped   {name}: {why}");
    }
}

fn corrupt(r: &AlgebraBasis, n: usize, f: &FieldCtx) -> AlgebraBasis {
    let mut s = r.subspace().clone();
    if s.is_zero() {
        s.insert(GfpMatrix::identity(n).as_slice(), f).expect("n x n");
    } else {
        s = terwilliger::Subspace::span(n * n, &s.basis()[1..], f).expect("n x n");
    }
    AlgebraBasis::from_subspace(n, s, f)
}

fn base_point_oracles(s: &SchemeData, f: &FieldCtx, x: usize, a: &Args, t: &mut Tally) -> Result<(), Failure> {
    let ctx = build_context(s, f, x).map_err(|e| Failure::new(Status::Inconsistent, e.to_string()))?;
    let alg = generate_algebra(&ctx);
    let words = word_closure(&ctx);
    t.record(&format!("closure x={x}"), alg.dim(), words.dim(), &words == alg.subspace());

    let fast = radical_unchecked(&alg, f).map_err(|e| Failure::new(Status::Inconsistent, e.to_string()))?;
    let claimed = if a.inject_fault == Some(Fault::Radical) { corrupt(&fast, s.n(), f) } else { fast };
    let post = verify_radical(&alg, &claimed, f);
    t.record(
        &format!("radical postconditions x={x}"),
        claimed.dim(),
        post.as_ref().map(|c| c.dim).map_err(|e| e.to_string()),
        post.is_ok(),
    );
    let limit = if a.deep { 1 << 16 } else { 1 << 12 };
    match brute_force_radical(&alg, f, limit) {
        Some(brute) => t.record(&format!("radical x={x}"), claimed.dim(), brute.dim(), &brute == claimed.subspace()),
        None => t.skip(&format!("radical x={x}"), "algebra too large to enumerate"),
    }
    Ok(())
}

pub fn run(a: Args) -> Result<Status, Failure> {
    let f = load::field(a.prime)?;
    let text = std::fs::read_to_string(&a.scheme)
        .map_err(|e| Failure::new(Status::Usage, format!("{}: {e}", a.scheme.display())))?;
    let table = parse_scheme(&text).map_err(|e| Failure::new(Status::Invalid, e.to_string()))?;
    let mut t = Tally { failed: false };
    let oracle_ok = brute_force_axioms(&table);
    let s = load::scheme(&a.scheme);
    t.record("axioms", s.is_ok(), oracle_ok, s.is_ok() == oracle_ok);
    let s = match s {
        Ok(s) => s,
        Err(fail) if !t.failed => return Err(fail),
        Err(_) => return Ok(Status::Inconsistent),
    };

    let points: Vec<usize> = if a.deep { (0..s.n()).collect() } else { vec![0] };
    for &x in &points {
        base_point_oracles(&s, &f, x, &a, &mut t)?;
    }

    let ctx = build_context(&s, &f, 0).map_err(|e| Failure::new(Status::Inconsistent, e.to_string()))?;
    let m = build_primary(&ctx).map_err(|e| Failure::new(Status::Inconsistent, e.to_string()))?;
    let max_dim = if a.deep { 6 } else { 5 };
    if s.rank() <= max_dim && (f.p() as u64).pow(s.rank() as u32) <= 4096 {
        let st = strata(&s, &f);
        let w = filtration(&m, &st, &f).map_err(|e| Failure::new(Status::Inconsistent, e.to_string()))?;
        let rep = composition_factors(&m, &st, &closure_digraph(&s, &f), &w, &f)
            .map_err(|e| Failure::new(Status::Inconsistent, e.to_string()))?;
        let alg = generate_algebra(&ctx);
        let rad = radical_unchecked(&alg, &f).map_err(|e| Failure::new(Status::Inconsistent, e.to_string()))?;
        let uni = uniserial_check(&ctx, &m, &rep, &w, &rad).map_err(|e| Failure::new(Status::Inconsistent, e.to_string()))?;
        let lattice = submodule_lattice(&m.action, &f);
        let mut dims = rep.factor_dims();
        dims.sort_unstable();
        t.record("composition length", rep.composition_length, lattice.composition_length, rep.composition_length == lattice.composition_length);
        t.record("factor dimensions", &dims, &lattice.factor_dims, dims == lattice.factor_dims);
        t.record("uniserial", uni, lattice.uniserial, uni == lattice.uniserial);
    } else {
        t.skip("submodule lattice", "module too large to enumerate");
    }

    let id = load::scheme_id(&a.scheme);
    match analyze(&id, &s, &f, &points) {
        Ok(r) => t.record("theorem consistency", r.characterization().consistent, true, true),
        Err(e) => t.record("theorem consistency", e.to_string(), "agreement", false),
    }
    Ok(if t.failed { Status::Inconsistent } else { Status::Ok })
}
