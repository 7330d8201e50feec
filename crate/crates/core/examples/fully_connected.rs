//! Fully connected matrix spaces from the regular representation of a field
//! extension, checked exhaustively.
//!
//! ```text
//! cargo run --release --example fully_connected
//! ```

use blt::altspace::{field_ext_full_space, full_block_space, is_irreducible};
use blt::gf::{Field, Matrix};

fn main() -> blt::Result<()> {
    for (s, q) in [(2, 3), (3, 3), (2, 5), (2, 7)] {
        let f = Field::new(q)?;
        let ext = field_ext_full_space(s, f)?;
        assert!(is_irreducible(f, &ext.poly));

        // Every nonzero combination of the regular matrices is invertible.
        let total = (q as u64).pow(s as u32);
        let full_rank = (1..total).all(|idx| {
            let mut c = idx;
            let coeffs: Vec<u8> = (0..s)
                .map(|_| {
                    let d = (c % q as u64) as u8;
                    c /= q as u64;
                    d
                })
                .collect();
            Matrix::combination(f, s, s, &coeffs, &ext.regular).rank() == s
        });
        println!(
            "F_{q}[x]/({}): {} nonzero members all of rank {s}: {full_rank}; B fully connected: {}",
            ext.poly_string(),
            total - 1,
            ext.space.is_fully_connected()
        );
    }
    let b = full_block_space(2, 3, Field::new(3)?)?;
    println!(
        "2x3 truncation: dim {}, fully connected: {}",
        b.dim(),
        b.is_fully_connected()
    );
    Ok(())
}
