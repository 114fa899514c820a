//! Deterministic sampler for seeded identity checks.
//!
//! A fixed SplitMix64 keeps every suite replayable byte-for-byte without
//! pulling in an external RNG whose stream could change across versions.

use crate::Rat;
use num_bigint::BigInt;

#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    /// Derive an independent stream for a named sub-task.
    pub fn fork(&self, tag: &str) -> Self {
        let mut h = 0xcbf2_9ce4_8422_2325u64;
        for b in tag.as_bytes() {
            h ^= u64::from(*b);
            h = h.wrapping_mul(0x100_0000_01b3);
        }
        SplitMix64::new(self.state ^ h)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform integer in `[lo, hi]`.
    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        debug_assert!(lo <= hi);
        let span = (hi - lo + 1) as u64;
        lo + (self.next_u64() % span) as i64
    }

    /// Small nonzero rational with numerator in `[-9, 9]` and denominator in `[1, 9]`.
    pub fn rat_nonzero(&mut self) -> Rat {
        loop {
            let n = self.int_in(-9, 9);
            if n == 0 {
                continue;
            }
            let d = self.int_in(1, 9);
            return Rat::new(BigInt::from(n), BigInt::from(d));
        }
    }

    /// Small rational, zero allowed.
    pub fn rat_any(&mut self) -> Rat {
        let n = self.int_in(-9, 9);
        let d = self.int_in(1, 9);
        Rat::new(BigInt::from(n), BigInt::from(d))
    }

    /// Positive rational, suitable as the sample of an exponential atom.
    pub fn rat_positive(&mut self) -> Rat {
        let n = self.int_in(1, 9);
        let d = self.int_in(1, 9);
        Rat::new(BigInt::from(n), BigInt::from(d))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_stream() {
        let mut a = SplitMix64::new(42);
        let mut b = SplitMix64::new(42);
        for _ in 0..100 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
    }

    #[test]
    fn fork_differs_from_parent() {
        let a = SplitMix64::new(7);
        let mut f = a.fork("suite");
        let mut g = a.fork("suite");
        let mut other = a.fork("other");
        let x = f.next_u64();
        assert_eq!(x, g.next_u64());
        assert_ne!(x, other.next_u64());
    }
}
