use super::iroot_u64;

const SEGMENT: u64 = 1 << 18;

fn simple_sieve(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let limit = limit as usize;
    let mut composite = vec![false; limit + 1];
    let mut out = Vec::new();
    for i in 2..=limit {
        if composite[i] {
            continue;
        }
        out.push(i as u64);
        let mut j = i * i;
        while j <= limit {
            composite[j] = true;
            j += i;
        }
    }
    out
}

/// All primes `≤ bound` in ascending order, via a segmented sieve of
/// Eratosthenes.
pub fn primes_up_to(bound: u64) -> Vec<u64> {
    if bound < 2 {
        return Vec::new();
    }
    let base = simple_sieve(iroot_u64(bound, 2));
    let mut out = Vec::new();
    let mut lo = 2u64;
    let mut marks = vec![false; SEGMENT as usize];
    while lo <= bound {
        let hi = bound.min(lo + SEGMENT - 1);
        let len = (hi - lo + 1) as usize;
        marks[..len].fill(false);
        for &p in &base {
            if p * p > hi {
                break;
            }
            let mut m = (p * p).max(lo.div_ceil(p) * p);
            while m <= hi {
                marks[(m - lo) as usize] = true;
                m += p;
            }
        }
        out.extend(
            marks[..len]
                .iter()
                .enumerate()
                .filter(|(_, &c)| !c)
                .map(|(i, _)| lo + i as u64),
        );
        lo = hi + 1;
    }
    out
}

/// Dense membership table for `{1} ∪ {p^k : k ≥ 1}` on `[0, limit]`.
#[derive(Debug, Clone)]
pub struct PrimePowerTable {
    limit: u64,
    bits: Vec<u64>,
}

impl PrimePowerTable {
    pub fn new(limit: u64) -> Self {
        let words = (limit / 64 + 1) as usize;
        let mut bits = vec![0u64; words];
        let mut set = |n: u64| bits[(n / 64) as usize] |= 1 << (n % 64);
        if limit >= 1 {
            set(1);
        }
        for p in primes_up_to(limit) {
            let mut q = p;
            loop {
                set(q);
                match q.checked_mul(p) {
                    Some(next) if next <= limit => q = next,
                    _ => break,
                }
            }
        }
        Self { limit, bits }
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// `None` when `n` lies beyond the table.
    #[inline]
    pub fn contains(&self, n: u64) -> Option<bool> {
        (n <= self.limit).then(|| self.bits[(n / 64) as usize] >> (n % 64) & 1 == 1)
    }
}
