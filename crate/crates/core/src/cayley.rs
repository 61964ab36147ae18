//! Breadth-first word lengths on Cayley graphs `Γ(ℤ, S)`.
//!
//! The graphs have infinitely many edges at every vertex, so the search is
//! run on the finite piece `[-R, R]` with `R = margin · max(|lo|, |hi|)`,
//! using every generator of magnitude at most `R`. Geodesics that leave
//! `[-R, R]` are missed; callers check stability by rerunning with a larger
//! margin.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::prime::{is_prime_u64, primes_up_to};

/// Largest exploration radius accepted by [`bfs_lengths`].
pub const MAX_RADIUS: u64 = 50_000_000;

pub const DEFAULT_MARGIN: u32 = 4;

/// A symmetric generating set of `ℤ`, described by its positive elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeneratingSet {
    /// `{±g^i : i ≥ 0}`.
    Base(u64),
    /// `⋃_{a ∈ P} {±a^i : i ≥ 0}`.
    Powers(Vec<u64>),
    /// Every `±p^i` for primes `p` outside `excluded`, together with `±1`.
    AllPrimes { excluded: Vec<u64> },
    /// Exactly the listed values and their negatives.
    List(Vec<u64>),
}

impl GeneratingSet {
    pub fn all_primes() -> Self {
        GeneratingSet::AllPrimes {
            excluded: Vec::new(),
        }
    }

    /// Positive generators of magnitude at most `bound`, ascending and
    /// deduplicated.
    pub fn enumerate(&self, bound: u64) -> Result<Vec<u64>> {
        let mut out = Vec::new();
        match self {
            GeneratingSet::Base(g) => push_powers(*g, bound, &mut out)?,
            GeneratingSet::Powers(bases) => {
                if bases.is_empty() {
                    return Err(Error::EmptyGeneratingSet);
                }
                for &a in bases {
                    push_powers(a, bound, &mut out)?;
                }
            }
            GeneratingSet::AllPrimes { excluded } => {
                if bound >= 1 {
                    out.push(1);
                }
                for p in primes_up_to(bound) {
                    if excluded.contains(&p) {
                        continue;
                    }
                    push_powers(p, bound, &mut out)?;
                }
            }
            GeneratingSet::List(values) => {
                if values.is_empty() {
                    return Err(Error::EmptyGeneratingSet);
                }
                if values.contains(&0) {
                    return Err(Error::InvalidDescriptor(self.to_string()));
                }
                out.extend(values.iter().copied().filter(|&v| v <= bound));
            }
        }
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }
}

fn push_powers(a: u64, bound: u64, out: &mut Vec<u64>) -> Result<()> {
    if a == 0 {
        return Err(Error::InvalidBase(0));
    }
    let mut x = 1u64;
    while x <= bound {
        out.push(x);
        if a == 1 {
            break;
        }
        match x.checked_mul(a) {
            Some(next) => x = next,
            None => break,
        }
    }
    Ok(())
}

fn join(values: &[u64]) -> String {
    values
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

impl fmt::Display for GeneratingSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratingSet::Base(g) => write!(f, "g:{g}"),
            GeneratingSet::Powers(bases) => write!(f, "primes:{}", join(bases)),
            GeneratingSet::AllPrimes { excluded } if excluded.is_empty() => {
                f.write_str("primes:all")
            }
            GeneratingSet::AllPrimes { excluded } => write!(f, "primes:all-{}", join(excluded)),
            GeneratingSet::List(values) => write!(f, "list:{}", join(values)),
        }
    }
}

/// Parses `g:5`, `primes:all`, `primes:all-2,7`, `primes:2,3,7` or
/// `list:1,2,9`.
impl FromStr for GeneratingSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidDescriptor(s.to_string());
        let parse_list = |body: &str| -> Result<Vec<u64>> {
            if body.trim().is_empty() {
                return Err(Error::EmptyGeneratingSet);
            }
            body.split(',')
                .map(|t| t.trim().parse::<u64>().map_err(|_| bad()))
                .collect()
        };
        let (kind, body) = s.split_once(':').ok_or_else(bad)?;
        match kind.trim() {
            "g" => {
                let g: u64 = body.trim().parse().map_err(|_| bad())?;
                if g < 2 {
                    return Err(Error::InvalidBase(g));
                }
                Ok(GeneratingSet::Base(g))
            }
            "primes" => {
                let body = body.trim();
                if body == "all" {
                    return Ok(GeneratingSet::all_primes());
                }
                if let Some(rest) = body.strip_prefix("all-") {
                    let excluded = parse_list(rest)?;
                    return Ok(GeneratingSet::AllPrimes { excluded });
                }
                let primes = parse_list(body)?;
                if primes.iter().any(|&p| !is_prime_u64(p)) {
                    return Err(bad());
                }
                Ok(GeneratingSet::Powers(primes))
            }
            "list" => {
                let values = parse_list(body)?;
                if values.contains(&0) {
                    return Err(bad());
                }
                Ok(GeneratingSet::List(values))
            }
            _ => Err(bad()),
        }
    }
}

/// Sorted positive generators of `set` up to `bound`.
pub fn enumerate_generators(set: &GeneratingSet, bound: u64) -> Result<Vec<u64>> {
    set.enumerate(bound)
}

/// Word lengths for every integer of a window, as found by
/// [`bfs_lengths`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LengthTable {
    lo: i64,
    hi: i64,
    margin: u32,
    radius: u64,
    lengths: Vec<u32>,
}

impl LengthTable {
    pub fn window(&self) -> (i64, i64) {
        (self.lo, self.hi)
    }

    pub fn margin(&self) -> u32 {
        self.margin
    }

    /// Half-width of the explored interval.
    pub fn radius(&self) -> u64 {
        self.radius
    }

    pub fn get(&self, n: i64) -> Option<u32> {
        if n < self.lo || n > self.hi {
            return None;
        }
        Some(self.lengths[(n - self.lo) as usize])
    }

    /// `(n, length)` pairs in ascending `n`.
    pub fn iter(&self) -> impl Iterator<Item = (i64, u32)> + '_ {
        (self.lo..=self.hi).zip(self.lengths.iter().copied())
    }

    /// Smallest positive `n` in the window at distance exactly `k`.
    pub fn smallest_with_length(&self, k: u32) -> Option<i64> {
        self.iter()
            .find(|&(n, len)| n > 0 && len == k)
            .map(|(n, _)| n)
    }

    pub fn max_length(&self) -> u32 {
        self.lengths.iter().copied().max().unwrap_or(0)
    }
}

const UNSEEN: u32 = u32::MAX;

/// Breadth-first distances from `0` for every integer of `[lo, hi]`.
///
/// Fails with [`Error::Unreached`] when some window point is not connected
/// to `0` inside the explored interval.
pub fn bfs_lengths(set: &GeneratingSet, lo: i64, hi: i64, margin: u32) -> Result<LengthTable> {
    if lo > 0 || hi < 0 {
        return Err(Error::WindowExcludesZero { lo, hi });
    }
    if margin < 1 {
        return Err(Error::InvalidMargin);
    }
    let extent = lo.unsigned_abs().max(hi.unsigned_abs());
    let radius = extent
        .checked_mul(u64::from(margin))
        .filter(|&r| r <= MAX_RADIUS)
        .ok_or(Error::ExplorationTooLarge {
            radius: extent.saturating_mul(u64::from(margin)),
        })?;
    let gens = set.enumerate(radius)?;
    if gens.is_empty() && radius > 0 {
        return Err(Error::EmptyGeneratingSet);
    }

    let r = radius as i64;
    let size = (2 * radius + 1) as usize;
    let mut dist = vec![UNSEEN; size];
    let index = |x: i64| (x + r) as usize;
    dist[index(0)] = 0;
    let mut frontier = vec![0i64];
    let mut next = Vec::new();
    let mut depth = 0u32;
    while !frontier.is_empty() {
        depth += 1;
        for &x in &frontier {
            for &g in &gens {
                let g = g as i64;
                for y in [x + g, x - g] {
                    if (-r..=r).contains(&y) && dist[index(y)] == UNSEEN {
                        dist[index(y)] = depth;
                        next.push(y);
                    }
                }
            }
        }
        std::mem::swap(&mut frontier, &mut next);
        next.clear();
    }

    let lengths: Vec<u32> = (lo..=hi).map(|n| dist[index(n)]).collect();
    if let Some(pos) = lengths.iter().position(|&d| d == UNSEEN) {
        return Err(Error::Unreached {
            n: lo + pos as i64,
            radius,
            margin,
        });
    }
    Ok(LengthTable {
        lo,
        hi,
        margin,
        radius,
        lengths,
    })
}

/// A shortest word (as a list of signed generators) from `0` to `target`
/// inside the interval `[-R, R]`, `R = margin · |target|`.
pub fn shortest_path(set: &GeneratingSet, target: i64, margin: u32) -> Result<Vec<i64>> {
    if margin < 1 {
        return Err(Error::InvalidMargin);
    }
    let radius = target
        .unsigned_abs()
        .checked_mul(u64::from(margin))
        .filter(|&r| r <= MAX_RADIUS)
        .ok_or(Error::ExplorationTooLarge {
            radius: target.unsigned_abs().saturating_mul(u64::from(margin)),
        })?;
    let gens = set.enumerate(radius)?;
    let r = radius as i64;
    let index = |x: i64| (x + r) as usize;
    // Generator used to first reach each state; 0 marks the origin.
    let mut via: Vec<Option<i64>> = vec![None; (2 * radius + 1) as usize];
    via[index(0)] = Some(0);
    let mut frontier = vec![0i64];
    let mut next = Vec::new();
    while via[index(target)].is_none() && !frontier.is_empty() {
        for &x in &frontier {
            for &g in &gens {
                for step in [g as i64, -(g as i64)] {
                    let y = x + step;
                    if (-r..=r).contains(&y) && via[index(y)].is_none() {
                        via[index(y)] = Some(step);
                        next.push(y);
                    }
                }
            }
        }
        std::mem::swap(&mut frontier, &mut next);
        next.clear();
    }
    if via[index(target)].is_none() {
        return Err(Error::Unreached {
            n: target,
            radius,
            margin,
        });
    }
    let mut path = Vec::new();
    let mut x = target;
    while x != 0 {
        let step = via[index(x)].expect("visited");
        path.push(step);
        x -= step;
    }
    path.reverse();
    Ok(path)
}

/// Smallest `n` in `1..=search_bound` at distance exactly `k`, if any.
pub fn oracle_lambda(
    set: &GeneratingSet,
    k: u32,
    search_bound: u64,
    margin: u32,
) -> Result<Option<u64>> {
    if k < 1 {
        return Err(Error::InvalidLength(0));
    }
    let hi = i64::try_from(search_bound).map_err(|_| Error::ExplorationTooLarge {
        radius: search_bound,
    })?;
    let table = bfs_lengths(set, 0, hi, margin)?;
    Ok(table.smallest_with_length(k).map(|n| n as u64))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_lists() {
        assert_eq!(
            enumerate_generators(&GeneratingSet::Base(2), 10).unwrap(),
            vec![1, 2, 4, 8]
        );
        assert_eq!(
            enumerate_generators(&GeneratingSet::Powers(vec![2, 3]), 10).unwrap(),
            vec![1, 2, 3, 4, 8, 9]
        );
        assert_eq!(
            enumerate_generators(&GeneratingSet::all_primes(), 10).unwrap(),
            vec![1, 2, 3, 4, 5, 7, 8, 9]
        );
        let no_two = GeneratingSet::AllPrimes { excluded: vec![2] };
        assert_eq!(
            enumerate_generators(&no_two, 10).unwrap(),
            vec![1, 3, 5, 7, 9]
        );
        assert_eq!(
            enumerate_generators(&GeneratingSet::List(vec![9, 2, 1, 2]), 5).unwrap(),
            vec![1, 2]
        );
        assert_eq!(
            enumerate_generators(&GeneratingSet::Powers(vec![]), 10),
            Err(Error::EmptyGeneratingSet)
        );
        assert_eq!(
            enumerate_generators(&GeneratingSet::List(vec![]), 10),
            Err(Error::EmptyGeneratingSet)
        );
    }

    #[test]
    fn descriptor_round_trip() {
        for s in [
            "g:5",
            "primes:all",
            "primes:all-2,7",
            "primes:2,3,7",
            "list:1,2,9",
        ] {
            let set: GeneratingSet = s.parse().unwrap();
            assert_eq!(set.to_string(), s);
        }
        assert!("g:1".parse::<GeneratingSet>().is_err());
        assert!("primes:4".parse::<GeneratingSet>().is_err());
        assert!("list:".parse::<GeneratingSet>().is_err());
        assert!("list:0,1".parse::<GeneratingSet>().is_err());
        assert!("cube:3".parse::<GeneratingSet>().is_err());
        assert!("5".parse::<GeneratingSet>().is_err());
    }

    #[test]
    fn base_two_small_window() {
        let t = bfs_lengths(&GeneratingSet::Base(2), -16, 16, 4).unwrap();
        assert_eq!(t.get(3), Some(2));
        assert_eq!(t.get(11), Some(3));
        assert_eq!(t.get(0), Some(0));
        for i in 0..5 {
            assert_eq!(t.get(1 << i), Some(1));
            assert_eq!(t.get(-(1 << i)), Some(1));
        }
        assert_eq!(t.smallest_with_length(3), Some(11));
        assert_eq!(t.radius(), 64);
    }

    #[test]
    fn oracle_lambda_small() {
        assert_eq!(
            oracle_lambda(&GeneratingSet::Base(2), 4, 100, 4).unwrap(),
            Some(43)
        );
        assert_eq!(
            oracle_lambda(&GeneratingSet::Base(3), 3, 100, 4).unwrap(),
            Some(5)
        );
        assert_eq!(
            oracle_lambda(&GeneratingSet::Base(2), 9, 100, 4).unwrap(),
            None
        );
    }

    #[test]
    fn argument_errors() {
        let s = GeneratingSet::Base(2);
        assert_eq!(
            bfs_lengths(&s, 1, 5, 4),
            Err(Error::WindowExcludesZero { lo: 1, hi: 5 })
        );
        assert_eq!(bfs_lengths(&s, -5, 5, 0), Err(Error::InvalidMargin));
        assert!(matches!(
            bfs_lengths(&s, 0, 1 << 40, 4),
            Err(Error::ExplorationTooLarge { .. })
        ));
        // Only even generators: odd points are never reached.
        let evens = GeneratingSet::List(vec![2, 4]);
        assert!(matches!(
            bfs_lengths(&evens, -3, 3, 2),
            Err(Error::Unreached { n: -3, .. })
        ));
    }

    #[test]
    fn paths_are_geodesics() {
        let set = GeneratingSet::Base(2);
        let t = bfs_lengths(&set, -300, 300, 4).unwrap();
        for n in -300..=300 {
            let path = shortest_path(&set, n, 4).unwrap();
            assert_eq!(path.iter().sum::<i64>(), n);
            assert_eq!(path.len() as u32, t.get(n).unwrap(), "{n}");
            assert!(path.iter().all(|g| g.unsigned_abs().is_power_of_two()));
        }
        assert!(shortest_path(&GeneratingSet::List(vec![2]), 3, 4).is_err());
    }

    #[test]
    fn trivial_window() {
        let t = bfs_lengths(&GeneratingSet::Base(3), 0, 0, 1).unwrap();
        assert_eq!(t.get(0), Some(0));
        assert_eq!(t.max_length(), 0);
    }
}
