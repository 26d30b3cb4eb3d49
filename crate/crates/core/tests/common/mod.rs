//! Independent oracles. They use only the raw multiplication table.

#![allow(dead_code)]

use cdlat_core::GroupTable;

/// All subgroups by testing every subset that contains the identity for closure
/// under products. A nonempty finite subset closed under products is a subgroup.
/// Sorted by (size, mask).
pub fn brute_force_subgroups(g: &GroupTable) -> Vec<u64> {
    let n = g.order();
    assert!(n <= 16, "subset oracle is exponential");
    let mut out = Vec::new();
    for rest in 0u64..(1 << (n - 1)) {
        let mask = (rest << 1) | 1;
        let closed = (0..n).filter(|&x| mask >> x & 1 == 1).all(|x| {
            (0..n)
                .filter(|&y| mask >> y & 1 == 1)
                .all(|y| mask >> g.mul(x, y) & 1 == 1)
        });
        if closed {
            out.push(mask);
        }
    }
    out.sort_by_key(|m| (m.count_ones(), *m));
    out
}

/// Elements commuting with every element of `mask`, by direct scan.
pub fn brute_centralizer(g: &GroupTable, mask: u64) -> u64 {
    let n = g.order();
    let mut c = 0;
    for x in 0..n {
        if (0..n)
            .filter(|&y| mask >> y & 1 == 1)
            .all(|y| g.mul(x, y) == g.mul(y, x))
        {
            c |= 1 << x;
        }
    }
    c
}

/// A permutation of `0..n` fixing 0, from a seed.
pub fn shuffled_labels(n: usize, seed: u64) -> Vec<usize> {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
    let mut rest: Vec<usize> = (1..n).collect();
    rest.shuffle(&mut rng);
    std::iter::once(0).chain(rest).collect()
}
