//! Per-trial seed derivation. Every random stream is a function of the run
//! seed, an experiment tag, `p` and the trial index, so parallel schedules
//! produce identical results.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

pub fn derive_seed(seed: u64, tag: &str, p: u64, index: u64) -> u64 {
    let mut h = splitmix(seed);
    for b in tag.bytes() {
        h = splitmix(h ^ b as u64);
    }
    h = splitmix(h ^ p);
    splitmix(h ^ index)
}

pub fn rng_for(seed: u64, tag: &str, p: u64, index: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(derive_seed(seed, tag, p, index))
}
