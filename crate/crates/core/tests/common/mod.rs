//! Brute-force oracles shared by the integration tests. Nothing here touches
//! the Apéry-table path.

#![allow(dead_code)]

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// `reach[n]` is true iff `n` is a nonnegative combination of `gens`.
pub fn coin_dp(gens: &[u64], limit: usize) -> Vec<bool> {
    let mut reach = vec![false; limit + 1];
    reach[0] = true;
    for n in 1..=limit {
        reach[n] = gens
            .iter()
            .any(|&d| n >= d as usize && reach[n - d as usize]);
    }
    reach
}

/// Window large enough to contain the Frobenius number.
pub fn oracle_limit(gens: &[u64]) -> usize {
    let min = *gens.iter().min().unwrap();
    (gens.iter().sum::<u64>() * min) as usize
}

pub fn frobenius(gens: &[u64]) -> u64 {
    let reach = coin_dp(gens, oracle_limit(gens));
    reach.iter().rposition(|&r| !r).unwrap() as u64
}

pub fn genus(gens: &[u64]) -> u64 {
    let reach = coin_dp(gens, oracle_limit(gens));
    reach.iter().filter(|&&r| !r).count() as u64
}

/// Numerator coefficients by schoolbook multiplication of the truncated
/// indicator series with each binomial, on a window well past `F + sigma`.
pub fn numerator(gens: &[u64]) -> Vec<(u64, i64)> {
    let f = frobenius(gens) as usize;
    let len = f + gens.iter().sum::<u64>() as usize + 1;
    let window = len + 2 * *gens.iter().max().unwrap() as usize;
    let mut poly: Vec<i64> = coin_dp(gens, window).into_iter().map(i64::from).collect();
    for &d in gens {
        let mut binom = vec![0i64; d as usize + 1];
        binom[0] = 1;
        binom[d as usize] = -1;
        let mut next = vec![0i64; window + 1];
        for (i, &p) in poly.iter().enumerate() {
            for (j, &b) in binom.iter().enumerate() {
                if i + j <= window {
                    next[i + j] += p * b;
                }
            }
        }
        poly = next;
    }
    // Coefficients past len would only be truncation artefacts of the window.
    poly[..len]
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(e, &c)| (e as u64, c))
        .collect()
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Deterministic stream of generator sets with `k` in {3, 4, 5}, `d_1 <= 50`,
/// distinct elements and gcd 1.
pub fn random_generator_sets(seed: u64, count: usize) -> Vec<Vec<u64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let k = rng.gen_range(3..=5);
        let d1 = rng.gen_range(2..=50u64);
        let mut gens = vec![d1];
        while gens.len() < k {
            let d = rng.gen_range(d1 + 1..=d1 + 60);
            if !gens.contains(&d) {
                gens.push(d);
            }
        }
        if gens.iter().fold(0, |g, &d| gcd(g, d)) == 1 {
            gens.sort_unstable();
            out.push(gens);
        }
    }
    out
}
