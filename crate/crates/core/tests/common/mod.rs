#![allow(dead_code)]

use colombeau::testing::{random_gennum, random_quaternion, GenConfig};
use colombeau::{GenNumber, GenQuaternion, IndexSet};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Raw constructor data `(m, T, N, ins, outs)`.
pub type RawSet = (u64, Vec<u64>, u64, Vec<u64>, Vec<u64>);

pub fn raw_set() -> impl Strategy<Value = RawSet> {
    (1..=6u64, 0..=8u64)
        .prop_flat_map(|(m, n)| (Just(m), proptest::collection::vec(any::<bool>(), m as usize), Just(n), proptest::collection::vec(0..3u8, n as usize)))
        .prop_map(|(m, bits, n, marks)| {
            let residues = (0..m).filter(|&r| bits[r as usize]).collect();
            let ins = (0..n).filter(|&k| marks[k as usize] == 1).collect();
            let outs = (0..n).filter(|&k| marks[k as usize] == 2).collect();
            (m, residues, n, ins, outs)
        })
}

pub fn index_set() -> impl Strategy<Value = IndexSet> {
    raw_set().prop_map(|(m, t, n, i, o)| IndexSet::make_periodic(m, t, n, i, o).unwrap())
}

pub fn gennum_with(cfg: GenConfig) -> impl Strategy<Value = GenNumber> {
    any::<u64>().prop_map(move |s| random_gennum(&mut rng(s), &cfg))
}

pub fn gennum() -> impl Strategy<Value = GenNumber> {
    gennum_with(GenConfig::default())
}

pub fn complex_gennum() -> impl Strategy<Value = GenNumber> {
    gennum_with(GenConfig { complex: true, ..GenConfig::default() })
}

pub fn real_or_complex() -> impl Strategy<Value = GenNumber> {
    prop_oneof![gennum(), complex_gennum()]
}

/// Quaternions on a lattice small enough for window-16 inversion to stay cheap.
pub fn quaternion() -> impl Strategy<Value = GenQuaternion> {
    let cfg = GenConfig { periods: vec![1, 2, 4], exponent_denominators: vec![1, 2], ..GenConfig::default() };
    any::<u64>().prop_map(move |s| random_quaternion(&mut rng(s), &cfg))
}
