//! Deterministic seed derivation.
//!
//! A master seed fans out to per-check sub-seeds keyed by the check id, so
//! registering a new check never perturbs the sample streams of existing
//! ones. The digest is a fixed FNV-1a/splitmix64 combination and must stay
//! stable across releases; reports produced with equal (seed, id) pairs are
//! comparable forever.

const FNV_OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
const FNV_PRIME: u64 = 0x0000_0100_0000_01b3;

fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h = FNV_OFFSET;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(FNV_PRIME);
    }
    h
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Sub-seed for a named check under a master seed.
pub fn subseed(master: u64, id: &str) -> u64 {
    splitmix(master ^ fnv1a(id.as_bytes()))
}
