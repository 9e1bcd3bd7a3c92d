use crate::error::{Error, Result};
use crate::text::Symbol;

/// The Mersenne prime 2^61 - 1.
pub const DEFAULT_MODULUS: u64 = (1 << 61) - 1;
pub const DEFAULT_BASE: u64 = 1_000_000_007;

/// Prefix hashes `h(i) = (B^(i-1) * S(i) + h(i-1)) mod P` together with
/// the inverse powers `B^-(i-1)` needed to normalize substring hashes.
#[derive(Debug, Clone)]
pub struct RollingHash {
    base: u64,
    modulus: u64,
    h: Vec<u64>,
    inv_pows: Vec<u64>,
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

impl RollingHash {
    pub fn new(s: &[Symbol]) -> Self {
        Self::with_params(s, DEFAULT_BASE, DEFAULT_MODULUS).expect("default parameters are valid")
    }

    /// `modulus` must be prime and must not divide `base`.
    pub fn with_params(s: &[Symbol], base: u64, modulus: u64) -> Result<Self> {
        if modulus < 3 || base.is_multiple_of(modulus) {
            return Err(Error::InvalidArgument(
                "hash base must be invertible modulo the prime".into(),
            ));
        }
        let base_inv = pow_mod(base, modulus - 2, modulus);
        let n = s.len();
        let mut h = Vec::with_capacity(n + 1);
        let mut inv_pows = Vec::with_capacity(n + 1);
        h.push(0);
        inv_pows.push(1);
        let mut pow = 1u64;
        for (i, &c) in s.iter().enumerate() {
            let term = mul_mod(pow, c as u64 % modulus, modulus);
            h.push((h[i] + term) % modulus);
            pow = mul_mod(pow, base, modulus);
            inv_pows.push(mul_mod(inv_pows[i], base_inv, modulus));
        }
        Ok(RollingHash {
            base,
            modulus,
            h,
            inv_pows,
        })
    }

    pub fn len(&self) -> usize {
        self.h.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn base(&self) -> u64 {
        self.base
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Normalized hash of `S(i..=j)` (1-indexed, inclusive). `i = j + 1`
    /// denotes the empty substring.
    pub fn hash_value(&self, i: usize, j: usize) -> u64 {
        debug_assert!(i >= 1 && j + 1 >= i && j <= self.len());
        let m = self.modulus;
        let diff = (self.h[j] + m - self.h[i - 1]) % m;
        mul_mod(diff, self.inv_pows[i - 1], m)
    }

    /// Binary-searched LCP of the suffixes starting at 1-indexed `a` and `b`.
    pub fn lcp(&self, a: usize, b: usize) -> Result<usize> {
        let n = self.len();
        if a == 0 || b == 0 || a > n || b > n {
            return Err(Error::Bounds(format!(
                "positions must lie in 1..={n}, got {a}, {b}"
            )));
        }
        let (mut lo, mut hi) = (0usize, n - a.max(b) + 1);
        while lo < hi {
            let mid = (lo + hi).div_ceil(2);
            if self.hash_value(a, a + mid - 1) == self.hash_value(b, b + mid - 1) {
                lo = mid;
            } else {
                hi = mid - 1;
            }
        }
        Ok(lo)
    }
}

/// LCP of two suffixes via rolling hashes.
pub fn hash_lcp(h: &RollingHash, a: usize, b: usize) -> Result<usize> {
    h.lcp(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::Text;
    use rand::{Rng, SeedableRng};

    fn direct(s: &[Symbol], a: usize, b: usize) -> usize {
        s[a - 1..]
            .iter()
            .zip(&s[b - 1..])
            .take_while(|(x, y)| x == y)
            .count()
    }

    #[test]
    fn examples() {
        let s = Text::letters("abcabc");
        let h = RollingHash::new(&s);
        assert_eq!(hash_lcp(&h, 1, 4).unwrap(), 3);
        assert_eq!(hash_lcp(&h, 1, 1).unwrap(), 6);
        let h = RollingHash::new(&Text::letters("ab"));
        assert_eq!(hash_lcp(&h, 1, 2).unwrap(), 0);
        assert!(hash_lcp(&h, 0, 1).is_err());
        assert!(hash_lcp(&h, 1, 3).is_err());
    }

    #[test]
    fn equal_substrings_hash_equal() {
        let s = Text::letters("xyzxyzq");
        let h = RollingHash::new(&s);
        assert_eq!(h.hash_value(1, 3), h.hash_value(4, 6));
        assert_ne!(h.hash_value(1, 3), h.hash_value(2, 4));
    }

    #[test]
    fn agrees_with_direct_comparison() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let mut checked = 0;
        while checked < 10_000 {
            let n = rng.gen_range(1..=10_000);
            let m = rng.gen_range(1..=3);
            let s: Vec<Symbol> = (0..n).map(|_| rng.gen_range(1..=m)).collect();
            let h = RollingHash::new(&s);
            for _ in 0..500 {
                let (a, b) = (rng.gen_range(1..=n), rng.gen_range(1..=n));
                assert_eq!(h.lcp(a, b).unwrap(), direct(&s, a, b));
                checked += 1;
            }
        }
    }

    #[test]
    fn rejects_non_invertible_base() {
        assert!(RollingHash::with_params(&[1, 2], 7, 7).is_err());
    }
}
