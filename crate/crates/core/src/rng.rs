//! SplitMix64, a small self-contained 64-bit generator.
//!
//! State advances by the golden-ratio increment and each output goes through
//! the standard two-multiply finalizer. Streams are stable for a given seed
//! within this crate; no compatibility with other implementations is implied.

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN_GAMMA);
        mix(self.state)
    }

    /// Uniform in `[0, 1)` with 53 bits of precision.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in `0..bound` by rejection, so there is no modulo bias.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "below() needs a positive bound");
        let zone = u64::MAX - u64::MAX % bound;
        loop {
            let x = self.next_u64();
            if x < zone {
                return x % bound;
            }
        }
    }

    /// Moves `k` uniformly chosen distinct items of `items` to its front
    /// (partial Fisher-Yates) and returns that prefix.
    pub fn choose_prefix<'a, T>(&mut self, items: &'a mut [T], k: usize) -> &'a [T] {
        let len = items.len();
        assert!(k <= len, "cannot choose {k} of {len} items");
        for i in 0..k {
            let j = i + self.below((len - i) as u64) as usize;
            items.swap(i, j);
        }
        &items[..k]
    }
}

/// The SplitMix64 output finalizer. Also used to derive per-instance seeds.
pub fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed for the `index`-th member of a sweep started from `seed`.
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    mix(seed ^ mix(index.wrapping_add(GOLDEN_GAMMA)))
}
