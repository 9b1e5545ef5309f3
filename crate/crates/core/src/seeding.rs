//! Counter-based seed derivation.
//!
//! Every stochastic stage derives its RNG from the global seed plus a list
//! of stream labels (county code, date, sample index, ...). Streams are
//! independent of evaluation order and thread count, so parallel runs are
//! bit-identical to sequential ones.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// SplitMix64 finalizer; good avalanche, stable across platforms.
fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

/// FNV-1a over raw bytes; used to fold string labels into stream ids.
pub fn hash_label(label: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in label.as_bytes() {
        h ^= u64::from(*b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

/// Mix a base seed with a list of stream identifiers.
pub fn mix(base: u64, streams: &[u64]) -> u64 {
    let mut state = splitmix64(base ^ 0x6a09_e667_f3bc_c908);
    for s in streams {
        state = splitmix64(state ^ *s);
    }
    state
}

/// Deterministic RNG for the stream identified by `streams` under `base`.
pub fn rng_for(base: u64, streams: &[u64]) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(mix(base, streams))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    #[test]
    fn equal_streams_equal_rngs() {
        let mut a = rng_for(7, &[1, 2, 3]);
        let mut b = rng_for(7, &[1, 2, 3]);
        let xa: [u64; 4] = a.gen();
        let xb: [u64; 4] = b.gen();
        assert_eq!(xa, xb);
    }

    #[test]
    fn different_streams_diverge() {
        let mut a = rng_for(7, &[1, 2, 3]);
        let mut b = rng_for(7, &[1, 2, 4]);
        let xa: u64 = a.gen();
        let xb: u64 = b.gen();
        assert_ne!(xa, xb);
    }

    #[test]
    fn label_hash_is_stable() {
        // Frozen so that stream ids never drift between builds.
        assert_eq!(hash_label(""), 0xcbf2_9ce4_8422_2325);
        assert_ne!(hash_label("CISO"), hash_label("IID"));
    }
}
