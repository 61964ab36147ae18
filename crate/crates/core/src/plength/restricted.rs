use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use super::{plength_upper, Caps, Term};
use crate::cayley::{shortest_path, GeneratingSet, DEFAULT_MARGIN};
use crate::error::{Error, Result};
use crate::prime::{is_prime_u64, passes_primality, primes_up_to};

/// Values up to this size are rewritten with an exact breadth-first search.
const BFS_SCALE: i64 = 256;

/// Upper bound on the length of `n` when the primes in `excluded` are
/// removed from the generating set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictedLength {
    pub n: BigInt,
    pub excluded: Vec<u64>,
    pub bound: usize,
    pub witness: Vec<Term>,
}

impl RestrictedLength {
    /// Sums to `n`, has `bound` terms, and avoids every excluded prime.
    pub fn is_valid(&self) -> bool {
        self.witness.len() == self.bound
            && self.witness.iter().map(Term::value).sum::<BigInt>() == self.n
            && self
                .witness
                .iter()
                .all(|t| t.is_valid() && allowed_term(t, &self.excluded))
    }
}

fn allowed_term(t: &Term, excluded: &[u64]) -> bool {
    match t.power.base() {
        None => true,
        Some(p) => p.to_u64().is_none_or(|p| !excluded.contains(&p)),
    }
}

fn allowed(v: &BigInt, excluded: &[u64]) -> Option<Term> {
    Term::from_value(v).filter(|t| allowed_term(t, excluded))
}

/// Bounds the length of `n` over all prime powers except those of the
/// primes in `excluded`.
///
/// Starts from the unrestricted witness and rewrites each forbidden term
/// `±p^a` as a short sum of allowed generators: a two-term form if one is
/// found, otherwise three primes avoiding `excluded` (plus `±1` for even
/// values). Small terms are rewritten with a shortest path instead.
pub fn restricted_prime_length(
    n: &BigInt,
    excluded: &[u64],
    caps: &Caps,
) -> Result<RestrictedLength> {
    let base = plength_upper(n, caps)?;
    let mut witness = Vec::new();
    for t in base.witness {
        if allowed_term(&t, excluded) {
            witness.push(t);
        } else {
            witness.extend(decompose_avoiding(&t.value(), excluded, caps)?);
        }
    }
    Ok(RestrictedLength {
        n: n.clone(),
        excluded: excluded.to_vec(),
        bound: witness.len(),
        witness,
    })
}

fn decompose_avoiding(v: &BigInt, excluded: &[u64], caps: &Caps) -> Result<Vec<Term>> {
    if v.is_negative() {
        let pos = decompose_avoiding(&-v, excluded, caps)?;
        return Ok(pos.into_iter().map(Term::negated).collect());
    }
    if let Some(t) = allowed(v, excluded) {
        return Ok(vec![t]);
    }
    if let Some(small) = v.to_i64().filter(|&s| s <= BFS_SCALE) {
        let set = GeneratingSet::AllPrimes {
            excluded: excluded.to_vec(),
        };
        let path = shortest_path(&set, small, DEFAULT_MARGIN)?;
        return Ok(path
            .into_iter()
            .map(|g| Term::from_value(&BigInt::from(g)).expect("generator"))
            .collect());
    }
    if let Some(pair) = two_terms_avoiding(v, excluded, caps) {
        return Ok(pair);
    }
    if v.is_odd() {
        return three_primes_avoiding(v, excluded, caps);
    }
    let mut out = vec![Term::from_value(&BigInt::one()).expect("unit")];
    let rest = v - 1u32;
    match two_terms_avoiding(&rest, excluded, caps) {
        Some(pair) => out.extend(pair),
        None => out.extend(three_primes_avoiding(&rest, excluded, caps)?),
    }
    Ok(out)
}

fn two_terms_avoiding(v: &BigInt, excluded: &[u64], caps: &Caps) -> Option<Vec<Term>> {
    let limit = v
        .to_u64()
        .map_or(caps.prime_search_bound, |s| s.saturating_mul(4))
        .min(caps.prime_search_bound)
        .min(1 << 22);
    let mut gens = vec![1u64];
    for p in primes_up_to(limit) {
        if excluded.contains(&p) {
            continue;
        }
        let mut q = p;
        while q <= limit {
            gens.push(q);
            q = match q.checked_mul(p) {
                Some(next) => next,
                None => break,
            };
        }
    }
    gens.sort_unstable();
    let sums = gens.iter().filter_map(|&a| {
        let a = BigInt::from(a);
        Some(vec![allowed(&a, excluded)?, allowed(&(v - &a), excluded)?])
    });
    let differences = gens.iter().filter_map(|&a| {
        let a = BigInt::from(a);
        Some(vec![
            allowed(&-&a, excluded)?,
            allowed(&(v + &a), excluded)?,
        ])
    });
    sums.chain(differences).next()
}

fn three_primes_avoiding(v: &BigInt, excluded: &[u64], caps: &Caps) -> Result<Vec<Term>> {
    let mut p = 3u64;
    while p <= caps.prime_search_bound {
        if is_prime_u64(p) && !excluded.contains(&p) {
            let rest = v - p;
            if rest >= BigInt::from(4) && rest.is_even() {
                if let Some((q, r)) = pair_avoiding(&rest, excluded, caps.prime_search_bound) {
                    return Ok([BigInt::from(p), q, r]
                        .iter()
                        .map(|x| Term::from_value(x).expect("prime"))
                        .collect());
                }
            }
        }
        p += 2;
    }
    Err(Error::NotFound(v.clone()))
}

fn pair_avoiding(m: &BigInt, excluded: &[u64], bound: u64) -> Option<(BigInt, BigInt)> {
    let mut q = 2u64;
    while q <= bound && BigInt::from(q) * 2u32 <= *m {
        if is_prime_u64(q) && !excluded.contains(&q) {
            let r = m - q;
            let r_ok = r.to_u64().is_none_or(|r| !excluded.contains(&r));
            if r_ok && passes_primality(&r) {
                return Some((BigInt::from(q), r));
            }
        }
        q = if q == 2 { 3 } else { q + 2 };
    }
    None
}
