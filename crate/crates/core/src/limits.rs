//! Size guards for the exhaustive searches.

use crate::error::{Error, Result};

/// Upper bounds on instance sizes that the brute-force solvers accept.
///
/// The defaults keep every search at desk scale; [`Limits::forced`] lifts
/// them all.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Ambient dimension for space/map `κ` and `λ`.
    pub max_n: usize,
    /// Codomain dimension for searches that enumerate subspaces of `F^m`.
    pub max_m: usize,
    /// Largest `e` with `|P| = p^e` for literal group scans.
    pub max_group_exp: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_n: 6,
            max_m: 6,
            max_group_exp: 6,
        }
    }
}

impl Limits {
    pub fn forced() -> Self {
        Limits {
            max_n: usize::MAX,
            max_m: usize::MAX,
            max_group_exp: usize::MAX,
        }
    }

    pub fn check_n(&self, what: &str, n: usize) -> Result<()> {
        if n > self.max_n {
            return Err(Error::GuardExceeded(format!("{what}: n = {n} > {}", self.max_n)));
        }
        Ok(())
    }

    pub fn check_m(&self, what: &str, m: usize) -> Result<()> {
        if m > self.max_m {
            return Err(Error::GuardExceeded(format!("{what}: m = {m} > {}", self.max_m)));
        }
        Ok(())
    }

    pub fn check_group(&self, what: &str, p: u32, exp: usize) -> Result<()> {
        if exp > self.max_group_exp {
            return Err(Error::GuardExceeded(format!(
                "{what}: |P| = {p}^{exp} > {p}^{}",
                self.max_group_exp
            )));
        }
        Ok(())
    }
}
