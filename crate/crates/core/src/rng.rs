//! Deterministic counter-based random number generation.
//!
//! Every random draw in the pipeline flows through a [`CounterRng`] obtained
//! from a [`StreamKey`]. Keys are derived by absorbing labels and integers
//! into a 64-bit state, so each (seed, modality, segment) tuple owns an
//! independent stream: adding a modality or reordering draws in one stream
//! never perturbs another.
//!
//! The generator is SplitMix64: output `i` is a finalizer applied to
//! `key + (i+1) * GOLDEN`, making it a pure function of (key, counter).

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

/// SplitMix64 finalizer: invertible 64-bit mixing with good diffusion.
#[inline]
pub const fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Derived key identifying one random stream.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StreamKey(u64);

impl StreamKey {
    /// Root key for a user-supplied seed.
    pub fn root(seed: u64) -> Self {
        StreamKey(mix64(seed ^ GOLDEN))
    }

    /// Derive a child key from a string label.
    pub fn child(&self, label: &str) -> Self {
        let mut state = self.0;
        for chunk in label.as_bytes().chunks(8) {
            let mut word = [0u8; 8];
            word[..chunk.len()].copy_from_slice(chunk);
            state = mix64(state.wrapping_add(u64::from_le_bytes(word)).wrapping_add(GOLDEN));
        }
        // Absorb the length so "ab"+"c" and "a"+"bc" cannot collide.
        StreamKey(mix64(state ^ (label.len() as u64)))
    }

    /// Derive a child key from an integer index.
    pub fn child_u64(&self, index: u64) -> Self {
        StreamKey(mix64(self.0 ^ index.wrapping_mul(GOLDEN)))
    }

    /// Start a generator on this stream.
    pub fn rng(&self) -> CounterRng {
        CounterRng {
            key: self.0,
            counter: 0,
        }
    }
}

/// Counter-based generator: state never mutates beyond the counter, so a
/// stream can be replayed or split without touching its siblings.
#[derive(Debug, Clone)]
pub struct CounterRng {
    key: u64,
    counter: u64,
}

impl CounterRng {
    pub fn next_u64(&mut self) -> u64 {
        self.counter += 1;
        mix64(self.key.wrapping_add(self.counter.wrapping_mul(GOLDEN)))
    }

    /// Uniform in `[0, 1)` with 53 bits of precision.
    pub fn next_f64(&mut self) -> f64 {
        const DEN: f64 = (1u64 << 53) as f64;
        ((self.next_u64() >> 11) as f64) / DEN
    }

    /// Uniform in `[lo, hi)`.
    pub fn uniform_f64(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_f64()
    }

    /// Uniform integer in the inclusive range `[lo, hi]`, via rejection
    /// sampling so every value is exactly equally likely.
    pub fn uniform_inclusive(&mut self, lo: usize, hi: usize) -> usize {
        assert!(lo <= hi, "empty range [{lo}, {hi}]");
        let span = (hi - lo) as u64 + 1;
        if span == 1 {
            return lo;
        }
        // Largest multiple of span that fits in u64; draws above it would
        // bias the low residues.
        let zone = u64::MAX - (u64::MAX % span);
        loop {
            let v = self.next_u64();
            if v < zone {
                return lo + (v % span) as usize;
            }
        }
    }

    /// Standard normal via Box-Muller.
    pub fn next_gaussian(&mut self) -> f64 {
        let u1 = loop {
            let u = self.next_f64();
            if u > 0.0 {
                break u;
            }
        };
        let u2 = self.next_f64();
        (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
    }

    /// Fisher-Yates shuffle.
    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.uniform_inclusive(0, i);
            items.swap(i, j);
        }
    }
}
