//! Seeded random posets for sizes beyond exhaustive enumeration.

use rand::{Rng, SeedableRng};
use rand::seq::SliceRandom;
use rand_chacha::ChaCha8Rng;

use ptloc_core::topology::{FiniteSpace, Preorder};

/// Transitive closure of a random DAG on `n` points (each edge `i -> j`,
/// `i < j`, present with probability `density`), with points shuffled.
pub fn random_poset<R: Rng>(n: usize, density: f64, rng: &mut R) -> Preorder {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.random_bool(density) {
                pairs.push((order[i], order[j]));
            }
        }
    }
    Preorder::closure_of(n, &pairs).expect("closure of a DAG is a preorder")
}

/// `count` random T0 spaces on `n` points, reproducible from `seed`.
pub fn sample_spaces(n: usize, count: usize, seed: u64) -> Vec<FiniteSpace> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (n as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    (0..count)
        .map(|_| FiniteSpace::from_preorder(&random_poset(n, 0.5, &mut rng)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn samples_are_reproducible_partial_orders() {
        let a = sample_spaces(7, 10, 42);
        assert_eq!(a, sample_spaces(7, 10, 42));
        assert_ne!(a, sample_spaces(7, 10, 43));
        for x in &a {
            assert!(x.is_t0());
            assert_eq!(x.len(), 7);
        }
    }
}
