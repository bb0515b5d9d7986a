//! Classify all of F_q^5 and write one JSON line per tuple.
//!
//!     cargo run --release --example classify -- 5 /tmp/q5.jsonl

use std::io::Write;

use pln::planarity::classify_batch;
use pln::report::ClassifyRecord;
use pln::{FieldTower, Method, Pentanomial};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let p: u32 = args.next().map_or(Ok(3), |s| s.parse())?;
    let out = args.next();

    let tower = FieldTower::new(p, 1)?;
    let mid = tower.mid();
    let total = (tower.q() as u64).pow(5);
    let fs = (0..total).map(|i| Pentanomial::from_index(mid, i)).collect::<pln::Result<Vec<_>>>()?;
    let verdicts = classify_batch(&tower, &fs, Method::Dickson)?;
    let planar = verdicts.iter().filter(|v| v.planar).count();
    println!("q = {p}: {planar} of {total} pentanomials are planar");

    if let Some(path) = out {
        let mut w = std::io::BufWriter::new(std::fs::File::create(&path)?);
        for (f, v) in fs.iter().zip(&verdicts) {
            let rec = ClassifyRecord::new(&tower, f, Method::Dickson, v);
            writeln!(w, "{}", serde_json::to_string(&rec)?)?;
        }
        println!("wrote {path}");
    }
    Ok(())
}
