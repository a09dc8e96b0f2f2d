use terwilliger::scheme::generators::{cyclic_group_table, direct_product_table, s3_table};
use terwilliger::scheme::{gen_cyclic, gen_hamming, gen_thin};

use crate::{Failure, Status};

#[derive(Clone, Copy, clap::ValueEnum)]
enum Family {
    Cyclic,
    Hamming,
    Thin,
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum Group {
    /// Z_n, order from --n
    Cyclic,
    /// Z_2 x Z_2
    Klein,
    /// Symmetric group on three letters
    S3,
}

#[derive(clap::Args)]
pub struct Args {
    #[arg(long, value_enum)]
    family: Family,
    /// Point count (cyclic) or group order (thin, cyclic group)
    #[arg(long)]
    n: Option<usize>,
    /// Word length (hamming)
    #[arg(long)]
    len: Option<usize>,
    /// Alphabet size (hamming)
    #[arg(long)]
    q: Option<usize>,
    /// Group for the thin family
    #[arg(long, value_enum, default_value = "cyclic")]
    group: Group,
}

fn need(v: Option<usize>, flag: &str) -> Result<usize, Failure> {
    v.ok_or_else(|| Failure::new(Status::Usage, format!("missing --{flag}")))
}

pub fn run(a: Args) -> Result<Status, Failure> {
    let table = match a.family {
        Family::Cyclic => gen_cyclic(need(a.n, "n")?),
        Family::Hamming => gen_hamming(need(a.len, "len")?, need(a.q, "q")?),
        Family::Thin => {
            let group = match a.group {
                Group::Cyclic => cyclic_group_table(need(a.n, "n")?),
                Group::Klein => direct_product_table(&cyclic_group_table(2), &cyclic_group_table(2)),
                Group::S3 => s3_table(),
            };
            gen_thin(&group)
        }
    }
    .map_err(|e| Failure::new(Status::Usage, e.to_string()))?;
    print!("{}", table.to_text());
    Ok(Status::Ok)
}
