//! Deterministic seed derivation.
//!
//! All randomness in the crate flows from a master seed through
//! [`mix_seed`], so independent units of work (regions, epochs, retry
//! attempts) get independent, reproducible streams regardless of the
//! order or parallelism in which they run.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Derive a child seed from `(master, index)`.
///
/// `index` is spread by an odd multiplier (bijective mod 2^64), xor-folded
/// into the master seed (bijective), and passed through the splitmix64
/// finalizer (bijective). For a fixed master seed, distinct indices
/// therefore always map to distinct child seeds.
pub fn mix_seed(master: u64, index: u64) -> u64 {
    let mut z = master ^ index.wrapping_mul(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seeded ChaCha8 stream; fast and portable across platforms.
pub fn rng_from(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn mix_is_deterministic() {
        assert_eq!(mix_seed(7, 3), mix_seed(7, 3));
        assert_ne!(mix_seed(7, 3), mix_seed(7, 4));
        assert_ne!(mix_seed(7, 3), mix_seed(8, 3));
    }

    #[test]
    fn mix_has_no_collisions_over_small_index_range() {
        // Bijectivity for fixed master implies no collisions at all; spot
        // check a contiguous index range as used for region seeds.
        let seeds: HashSet<u64> = (0..10_000).map(|i| mix_seed(42, i)).collect();
        assert_eq!(seeds.len(), 10_000);
    }

    #[test]
    fn rng_streams_reproduce() {
        use rand::RngCore;
        let mut a = rng_from(123);
        let mut b = rng_from(123);
        for _ in 0..16 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
    }
}
