//! Defaults shared by the command-line front end.

use crate::cayley::DEFAULT_MARGIN;
use crate::dataset::TableFormat;
use crate::error::{Error, Result};
use crate::plength::{Caps, DEFAULT_PRIME_SEARCH_BOUND, DEFAULT_SIEVE_CAP, DEFAULT_TWO_POWER_CAP};
use crate::prime::{DEFAULT_RHO_BUDGET, DEFAULT_STRONG_ROUNDS};

/// Primality below `2^DETERMINISTIC_BITS` is decided exactly.
pub const DETERMINISTIC_BITS: u32 = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Config {
    /// Bit size under which primality answers are exact. Fixed by the
    /// witness set; kept here so output can state it.
    pub deterministic_bits: u32,
    /// Strong probable-prime bases used above the deterministic range.
    pub strong_rounds: u32,
    pub margin: u32,
    /// `J` for single `plength` queries.
    pub two_power_cap: u32,
    /// `J` for `sieve3`.
    pub sieve_cap: u32,
    pub prime_search_bound: u64,
    /// Pollard rho iterations allowed per split.
    pub rho_budget: u64,
    pub format: TableFormat,
    pub threads: usize,
}

impl Default for Config {
    fn default() -> Self {
        Self {
            deterministic_bits: DETERMINISTIC_BITS,
            strong_rounds: DEFAULT_STRONG_ROUNDS,
            margin: DEFAULT_MARGIN,
            two_power_cap: DEFAULT_TWO_POWER_CAP,
            sieve_cap: DEFAULT_SIEVE_CAP,
            prime_search_bound: DEFAULT_PRIME_SEARCH_BOUND,
            rho_budget: DEFAULT_RHO_BUDGET,
            format: TableFormat::Text,
            threads: 1,
        }
    }
}

impl Config {
    pub fn validate(&self) -> Result<()> {
        let bad = |what: &str| Err(Error::InvalidConfig(format!("{what} must be positive")));
        if self.deterministic_bits == 0 || self.deterministic_bits > DETERMINISTIC_BITS {
            return Err(Error::InvalidConfig(format!(
                "deterministic range is fixed at {DETERMINISTIC_BITS} bits"
            )));
        }
        if self.strong_rounds == 0 {
            return bad("strong rounds");
        }
        if self.margin == 0 {
            return bad("margin");
        }
        if self.prime_search_bound == 0 {
            return bad("prime search bound");
        }
        if self.rho_budget == 0 {
            return bad("rho budget");
        }
        if self.threads == 0 {
            return Err(Error::InvalidConfig(
                "thread count must be at least 1".into(),
            ));
        }
        Ok(())
    }

    pub fn caps(&self) -> Caps {
        Caps {
            two_power_cap: self.two_power_cap,
            prime_search_bound: self.prime_search_bound,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_are_valid() {
        let c = Config::default();
        c.validate().unwrap();
        assert_eq!(c.margin, 4);
        assert_eq!(c.caps(), Caps::default());
    }

    #[test]
    fn rejects_zeros() {
        for tweak in [
            (|c: &mut Config| c.threads = 0) as fn(&mut Config),
            |c| c.strong_rounds = 0,
            |c| c.margin = 0,
            |c| c.rho_budget = 0,
            |c| c.deterministic_bits = 65,
        ] {
            let mut c = Config::default();
            tweak(&mut c);
            assert!(c.validate().is_err());
        }
    }
}
