//! Seeded pseudo-random numbers.
//!
//! Every random choice in the crate goes through [`SplitMix64`] so that runs
//! are reproducible from a single `u64` seed, and so that another
//! implementation can replay them:
//!
//! ```text
//! next():   state = state + 0x9E3779B97F4A7C15            (wrapping)
//!           z = state
//!           z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9       (wrapping)
//!           z = (z ^ (z >> 27)) * 0x94D049BB133111EB       (wrapping)
//!           return z ^ (z >> 31)
//!
//! below(b): limit = b * floor((2^64 - 1) / b)
//!           draw x = next() until x < limit; return x mod b
//! ```

/// SplitMix64 generator (Steele, Lea and Flood).
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform integer in `0..bound` by rejection, so there is no modulo bias.
    ///
    /// Panics if `bound == 0`.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "below() needs a positive bound");
        let limit = bound.wrapping_mul(u64::MAX / bound);
        loop {
            let x = self.next_u64();
            if x < limit {
                return x % bound;
            }
        }
    }

    /// Uniform integer in the inclusive range `lo..=hi`.
    pub fn range_inclusive(&mut self, lo: u64, hi: u64) -> u64 {
        assert!(lo <= hi);
        lo + self.below(hi - lo + 1)
    }

    /// Uniform integer in the inclusive range `lo..=hi`, signed.
    pub fn range_i64(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo <= hi);
        let span = (hi - lo) as u64 + 1;
        lo + self.below(span) as i64
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_reference_stream() {
        // Reference values of SplitMix64 seeded with 0.
        let mut rng = SplitMix64::new(0);
        assert_eq!(rng.next_u64(), 0xE220_A839_7B1D_CDAF);
        assert_eq!(rng.next_u64(), 0x6E78_9E6A_A1B9_65F4);
        assert_eq!(rng.next_u64(), 0x06C4_5D18_8009_454F);
    }

    #[test]
    fn below_stays_in_range() {
        let mut rng = SplitMix64::new(99);
        for b in 1..50u64 {
            for _ in 0..20 {
                assert!(rng.below(b) < b);
            }
        }
        for _ in 0..100 {
            let x = rng.range_i64(-9, 9);
            assert!((-9..=9).contains(&x));
        }
    }
}
