use std::collections::BTreeSet;

use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::complex::MAX_SIMPLEX_VERTICES;
use super::SimplicialComplex;

/// Generates a face-closed complex on at most `v` vertices whose 1-skeleton
/// degree never exceeds `delta_max`, deterministically from `seed`.
///
/// The generator greedily samples `dim`-simplices with distinct random
/// vertices and keeps each one only if inserting its edges leaves every
/// vertex degree at or below `delta_max`; everything else is rejected. This
/// guarantees termination and the degree cap by construction. The function
/// is total: parameter combinations that admit no simplex at all (for
/// example `dim + 1 > v`, or `delta_max < dim` which makes every candidate
/// violate the cap) yield the empty complex.
pub fn random_complex(delta_max: usize, v: usize, dim: usize, seed: u64) -> SimplicialComplex {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tops: Vec<Vec<usize>> = Vec::new();
    let mut degree = vec![0usize; v];
    let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();

    // Enough attempts to reach interesting density without dominating the
    // runtime of downstream homology computations.
    let attempts = 4 * v.max(1);
    if dim < v && dim < MAX_SIMPLEX_VERTICES {
        for _ in 0..attempts {
            let mut simplex = index::sample(&mut rng, v, dim + 1).into_vec();
            simplex.sort_unstable();

            let mut added = vec![0usize; simplex.len()];
            let mut new_edges = Vec::new();
            for i in 0..simplex.len() {
                for j in i + 1..simplex.len() {
                    let e = (simplex[i], simplex[j]);
                    if !edges.contains(&e) {
                        new_edges.push(e);
                        added[i] += 1;
                        added[j] += 1;
                    }
                }
            }
            let fits = simplex
                .iter()
                .zip(&added)
                .all(|(&u, &extra)| degree[u] + extra <= delta_max);
            if fits {
                for &(a, b) in &new_edges {
                    edges.insert((a, b));
                    degree[a] += 1;
                    degree[b] += 1;
                }
                tops.push(simplex);
            }
        }
    }
    SimplicialComplex::from_top_simplices(v, &tops)
        .expect("sampled simplices are strictly increasing and in range")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_gives_identical_complexes() {
        for seed in [0u64, 1, 7, 12345] {
            let a = random_complex(5, 20, 2, seed);
            let b = random_complex(5, 20, 2, seed);
            assert_eq!(a, b);
        }
    }

    #[test]
    fn dimension_zero_gives_isolated_vertices() {
        let k = random_complex(3, 10, 0, 42);
        assert_eq!(k.dim(), Some(0));
        assert_eq!(k.profile().delta, 0);
        assert!(k.simplex_count(0) >= 1);
    }

    #[test]
    fn degree_cap_holds_across_many_samples() {
        for seed in 0..500u64 {
            let k = random_complex(6, 40, 3, seed);
            assert!(k.profile().delta <= 6, "seed {seed} broke the degree cap");
        }
    }

    #[test]
    fn generated_dimension_never_exceeds_request() {
        for seed in 0..50u64 {
            let k = random_complex(6, 15, 2, seed);
            assert!(k.dim().map_or(0, |d| d) <= 2);
        }
    }

    #[test]
    fn impossible_parameters_give_the_empty_complex() {
        // Too few vertices for even one simplex.
        let k = random_complex(5, 2, 3, 1);
        assert_eq!(k.dim(), None);
        // Degree cap below the dimension rejects every candidate.
        let k = random_complex(1, 10, 2, 1);
        assert_eq!(k.dim(), None);
    }
}
