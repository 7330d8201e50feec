//! A fully connected alternating space with κ = n - 1 but small λ, and the
//! same gap in the associated group.
//!
//! ```text
//! cargo run --release --example kappa_gt_lambda [s t q]
//! ```

use blt::cli::counterexample_report;
use blt::Limits;

fn main() -> blt::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (s, t, q) = match args.as_slice() {
        [s, t, q] => (*s, *t, *q as u32),
        _ => (2, 2, 3),
    };
    let r = counterexample_report(s, t, q, q, &Limits::default())?;
    println!("{}", serde_json::to_string_pretty(&r)?);
    println!(
        "space: kappa = {} > lambda = {}; group over F_{}: kappa = {} > lambda = {}",
        r.kappa, r.lambda, r.group.p, r.group.kappa, r.group.lambda
    );
    Ok(())
}
