//! Sweeps every labeled graph on up to `max_n` vertices and compares κ and
//! λ at the graph, space, map and group levels, printing the CSV report.
//!
//! ```text
//! cargo run --release --example verify_sweep [max_n]
//! ```

use blt::cli::{run_verify, VerifyConfig};

fn main() -> blt::Result<()> {
    let max_n = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(3);
    let mut cfg = VerifyConfig::new(max_n, 3, 3);
    cfg.random = 5;
    cfg.seed = 11;
    let mut w = csv::Writer::from_writer(std::io::stdout());
    let report = run_verify(&cfg, |row| w.serialize(row).map_err(|e| blt::Error::Io(e.to_string())))?;
    w.flush().map_err(|e| blt::Error::Io(e.to_string()))?;
    let s = &report.summary;
    eprintln!("{} rows, {} pass, {} fail", s.rows, s.pass, s.fail);
    Ok(())
}
