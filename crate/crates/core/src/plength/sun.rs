//! Sun's residue class `x ≡ M (mod N)`, none of whose members is of the
//! form `|p^a ± q^b|`. An element of the class that is not itself a prime
//! power therefore has prime-power length exactly 3.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::prime::{
    factor_with_budget, is_prime_power, is_prime_with_rounds, DEFAULT_RHO_BUDGET,
    DEFAULT_STRONG_ROUNDS,
};

const SUN_M: &str = "47867742232066880047611079";
/// The corrected modulus; an older printing has
/// `66483034025018711639862527490`.
const SUN_N: &str = "66483084961588510124010691590";
const M_PLUS_2N: &str = "133014037665409087128068994259";
const M_PLUS_2N_FACTORS: [&str; 3] = ["23", "299723", "19295212676140402555471"];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SunConstants {
    pub m: BigInt,
    pub n: BigInt,
}

impl SunConstants {
    pub fn published() -> Self {
        Self {
            m: SUN_M.parse().expect("literal"),
            n: SUN_N.parse().expect("literal"),
        }
    }
}

impl Default for SunConstants {
    fn default() -> Self {
        Self::published()
    }
}

/// `x ≡ M (mod N)` for the published constants.
pub fn sun_class_member(x: &BigInt) -> bool {
    sun_class_member_with(x, &SunConstants::published())
}

pub fn sun_class_member_with(x: &BigInt, c: &SunConstants) -> bool {
    (x - &c.m).mod_floor(&c.n).is_zero()
}

/// Constants plus the values the verification compares against.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SunExample {
    pub constants: SunConstants,
    pub expected_m_plus_2n: BigInt,
    /// Prime factors of `M + 2N` with multiplicity, ascending.
    pub expected_factors: Vec<BigInt>,
}

impl Default for SunExample {
    fn default() -> Self {
        Self {
            constants: SunConstants::published(),
            expected_m_plus_2n: M_PLUS_2N.parse().expect("literal"),
            expected_factors: M_PLUS_2N_FACTORS
                .iter()
                .map(|f| f.parse().expect("literal"))
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SunCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SunReport {
    pub checks: Vec<SunCheck>,
}

impl SunReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&SunCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for SunReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            writeln!(f, "[{mark}] {}: {}", c.name, c.detail)?;
        }
        Ok(())
    }
}

/// Runs the four checks on `M`, `M + N` and `M + 2N`, each reported on its
/// own.
pub fn verify_sun_example(example: &SunExample) -> SunReport {
    verify_sun_example_with(example, DEFAULT_STRONG_ROUNDS, DEFAULT_RHO_BUDGET)
}

pub fn verify_sun_example_with(
    example: &SunExample,
    strong_rounds: u32,
    rho_budget: u64,
) -> SunReport {
    let SunConstants { m, n } = &example.constants;
    let m_plus_n = m + n;
    let m_plus_2n = &m_plus_n + n;
    let mut checks = Vec::with_capacity(4);

    let vm = is_prime_with_rounds(m, strong_rounds);
    let vmn = is_prime_with_rounds(&m_plus_n, strong_rounds);
    checks.push(SunCheck {
        name: "primes",
        passed: vm.passes() && vmn.passes(),
        detail: format!("M is {vm}; M + N is {vmn}"),
    });

    checks.push(SunCheck {
        name: "value",
        passed: m_plus_2n == example.expected_m_plus_2n,
        detail: format!(
            "M + 2N = {m_plus_2n}, expected {}",
            example.expected_m_plus_2n
        ),
    });

    let (passed, detail) = match factor_with_budget(&m_plus_2n, rho_budget) {
        Ok(f) => {
            let found: Vec<BigInt> = f
                .iter()
                .flat_map(|(p, e)| std::iter::repeat_n(p.clone(), e as usize))
                .collect();
            let mut expected = example.expected_factors.clone();
            expected.sort();
            (found == expected, format!("M + 2N = {f}"))
        }
        Err(e) => (false, e.to_string()),
    };
    checks.push(SunCheck {
        name: "factorization",
        passed,
        detail,
    });

    let pp = is_prime_power(&m_plus_2n);
    checks.push(SunCheck {
        name: "not-prime-power",
        passed: pp.is_none(),
        detail: match pp {
            None => "M + 2N is not a prime power".to_string(),
            Some(w) => format!("M + 2N = {w}"),
        },
    });

    SunReport { checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn membership() {
        let c = SunConstants::published();
        assert!(sun_class_member(&c.m));
        assert!(sun_class_member(&(&c.m + &c.n * 2u32)));
        assert!(sun_class_member(&(&c.m - &c.n)));
        assert!(!sun_class_member(&(&c.m + 1u32)));
    }

    #[test]
    fn full_run_passes() {
        let report = verify_sun_example(&SunExample::default());
        assert!(report.all_passed(), "{report}");
        assert_eq!(report.checks.len(), 4);
    }

    #[test]
    fn misprinted_modulus_fails_value_check() {
        let mut ex = SunExample::default();
        ex.constants.n = "66483034025018711639862527490".parse().unwrap();
        let report = verify_sun_example(&ex);
        assert!(!report.check("value").unwrap().passed);
        assert!(!report.all_passed());
    }

    #[test]
    fn tampered_factors_fail() {
        let mut ex = SunExample::default();
        ex.expected_factors[1] = BigInt::from(299_729);
        let report = verify_sun_example(&ex);
        assert!(!report.check("factorization").unwrap().passed);
        assert!(report.check("value").unwrap().passed);
        assert!(report.check("not-prime-power").unwrap().passed);
    }
}
