use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Largest supported modulus. Residues fit in a `u8`.
pub const MAX_Q: u32 = 251;

/// A prime field `F_q` with `q` odd.
///
/// The value is a single byte; all arithmetic goes through the shared
/// inverse table built on first use.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Field {
    q: u8,
}

fn inverse_tables() -> &'static [[u8; 256]] {
    static TABLES: OnceLock<Vec<[u8; 256]>> = OnceLock::new();
    TABLES.get_or_init(|| {
        let mut out = vec![[0u8; 256]; MAX_Q as usize + 1];
        for q in 3..=MAX_Q {
            if !is_prime(q) {
                continue;
            }
            for a in 1..q {
                // a^(q-2)
                let mut r = 1u32;
                let mut b = a;
                let mut e = q - 2;
                while e > 0 {
                    if e & 1 == 1 {
                        r = r * b % q;
                    }
                    b = b * b % q;
                    e >>= 1;
                }
                out[q as usize][a as usize] = r as u8;
            }
        }
        out
    })
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    pub fn new(q: u32) -> Result<Field> {
        if !(3..=MAX_Q).contains(&q) || !is_prime(q) {
            return Err(Error::BadField(q));
        }
        Ok(Field { q: q as u8 })
    }

    #[inline]
    pub fn q(self) -> u32 {
        self.q as u32
    }

    #[inline]
    pub fn add(self, a: u8, b: u8) -> u8 {
        ((a as u16 + b as u16) % self.q as u16) as u8
    }

    #[inline]
    pub fn sub(self, a: u8, b: u8) -> u8 {
        ((a as u16 + self.q as u16 - b as u16) % self.q as u16) as u8
    }

    #[inline]
    pub fn neg(self, a: u8) -> u8 {
        if a == 0 {
            0
        } else {
            self.q - a
        }
    }

    #[inline]
    pub fn mul(self, a: u8, b: u8) -> u8 {
        ((a as u16 * b as u16) % self.q as u16) as u8
    }

    /// `a + b * c`
    #[inline]
    pub fn mul_add(self, a: u8, b: u8, c: u8) -> u8 {
        ((a as u32 + b as u32 * c as u32) % self.q as u32) as u8
    }

    /// Multiplicative inverse. Panics on zero.
    #[inline]
    pub fn inv(self, a: u8) -> u8 {
        assert!(a != 0, "inverse of zero in F_{}", self.q);
        inverse_tables()[self.q as usize][a as usize]
    }

    /// `1/2`, computed as `(q + 1) / 2`.
    #[inline]
    pub fn half(self) -> u8 {
        self.q.div_ceil(2)
    }

    pub fn reduce(self, x: i64) -> u8 {
        x.rem_euclid(self.q as i64) as u8
    }

    /// Signed representative in `(-q/2, q/2]`, handy for display.
    pub fn signed(self, a: u8) -> i64 {
        let a = a as i64;
        let q = self.q as i64;
        if a > q / 2 {
            a - q
        } else {
            a
        }
    }

    pub fn pow(self, a: u8, mut e: u64) -> u8 {
        let mut r = 1u8;
        let mut b = a;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        r
    }

    /// `q^k` as a `u64`, or `None` on overflow.
    pub fn count_pow(self, k: usize) -> Option<u64> {
        (self.q as u64).checked_pow(k as u32)
    }
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.q)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.q)
    }
}
