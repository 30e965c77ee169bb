use num_bigint::BigInt;
use num_traits::One;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::{SimplicialComplex, SimplicialError};
use crate::dd::{ln_big_abs, DoubleDouble};
use crate::exact_linalg::{smith_normal_form, IntMatrix};

/// A finitely generated abelian group `Z^betti + Z/t_1 + ... + Z/t_k` with
/// the torsion orders `t_i > 1` in a divisibility chain (`t_i` divides
/// `t_{i+1}`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyGroup {
    pub betti: usize,
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    /// Natural log of the torsion subgroup order (0 when torsion-free).
    pub fn log_torsion_order(&self) -> f64 {
        let mut acc = DoubleDouble::ZERO;
        for t in &self.torsion {
            acc = acc + ln_big_abs(t).0;
        }
        acc.to_f64()
    }
}

impl Serialize for HomologyGroup {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("HomologyGroup", 2)?;
        s.serialize_field("betti", &self.betti)?;
        let torsion: Vec<String> = self.torsion.iter().map(BigInt::to_string).collect();
        s.serialize_field("torsion", &torsion)?;
        s.end()
    }
}

/// The matrix of the n-th boundary map from n-chains to (n-1)-chains, both
/// in the lexicographic bases of the complex.
///
/// Column j holds the boundary of the j-th n-simplex: omitting the i-th
/// vertex contributes (-1)^i in the row of the resulting facet.
///
/// # Panics
///
/// If `n == 0`; the 0-th boundary map is the zero map to the trivial group
/// and has no matrix here.
pub fn boundary_matrix(k: &SimplicialComplex, n: usize) -> IntMatrix {
    assert!(n >= 1, "boundary map index must be at least 1");
    let mut m = IntMatrix::zeros(k.simplex_count(n - 1), k.simplex_count(n));
    for (j, simplex) in k.simplices(n).iter().enumerate() {
        for omit in 0..simplex.len() {
            let mut facet = simplex.clone();
            facet.remove(omit);
            let i = k
                .simplex_index(&facet)
                .expect("facet of a stored simplex is stored (face closure)");
            let sign = if omit % 2 == 0 { 1 } else { -1 };
            m.set(i, j, BigInt::from(sign));
        }
    }
    m
}

/// The n-th integral homology group of the complex, unreduced.
///
/// The free rank is `#n-simplices - rank(d_n) - rank(d_{n+1})` and the
/// torsion orders are the invariant factors of `d_{n+1}` exceeding 1. Both
/// ranks come from Smith normal forms, so the only failure mode is the
/// elimination exceeding its entry-size budget on adversarial input.
pub fn homology(k: &SimplicialComplex, n: usize) -> Result<HomologyGroup, SimplicialError> {
    let chains = k.simplex_count(n);
    let rank_down = if n == 0 {
        0
    } else {
        smith_normal_form(&boundary_matrix(k, n))?.rank
    };
    let up = smith_normal_form(&boundary_matrix(k, n + 1))?;
    let betti = chains
        .checked_sub(rank_down)
        .and_then(|x| x.checked_sub(up.rank))
        .expect("boundary ranks cannot exceed the chain rank");
    let torsion = up
        .invariant_factors
        .into_iter()
        .filter(|f| !f.is_one())
        .collect();
    Ok(HomologyGroup { betti, torsion })
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::super::{fixtures, random_complex};
    use super::*;
    use crate::exact_linalg::determinantal_divisor;

    fn group(betti: usize, torsion: &[i64]) -> HomologyGroup {
        HomologyGroup {
            betti,
            torsion: torsion.iter().map(|&t| BigInt::from(t)).collect(),
        }
    }

    #[test]
    fn two_points_have_betti_two() {
        let k = fixtures::two_points();
        assert_eq!(homology(&k, 0).unwrap(), group(2, &[]));
        assert_eq!(homology(&k, 1).unwrap(), group(0, &[]));
    }

    #[test]
    fn filled_triangle_boundary_and_homology() {
        let k = fixtures::filled_triangle();
        let d2 = boundary_matrix(&k, 2);
        assert_eq!(d2.rows(), 3);
        assert_eq!(d2.cols(), 1);
        // Rows are the edges [0,1], [0,2], [1,2] in that order.
        let col: Vec<BigInt> = (0..3).map(|i| d2.get(i, 0).clone()).collect();
        assert_eq!(col, vec![BigInt::from(1), BigInt::from(-1), BigInt::from(1)]);
        assert_eq!(homology(&k, 0).unwrap(), group(1, &[]));
        assert_eq!(homology(&k, 1).unwrap(), group(0, &[]));
        assert_eq!(homology(&k, 2).unwrap(), group(0, &[]));
    }

    #[test]
    fn circle_has_one_loop() {
        let k = fixtures::circle();
        assert_eq!(homology(&k, 0).unwrap(), group(1, &[]));
        assert_eq!(homology(&k, 1).unwrap(), group(1, &[]));
    }

    #[test]
    fn sphere_homology() {
        let k = fixtures::sphere();
        assert_eq!(homology(&k, 0).unwrap(), group(1, &[]));
        assert_eq!(homology(&k, 1).unwrap(), group(0, &[]));
        assert_eq!(homology(&k, 2).unwrap(), group(1, &[]));
        assert_eq!(homology(&k, 3).unwrap(), group(0, &[]));
    }

    #[test]
    fn projective_plane_has_two_torsion() {
        let k = fixtures::projective_plane();
        assert_eq!(homology(&k, 0).unwrap(), group(1, &[]));
        assert_eq!(homology(&k, 1).unwrap(), group(0, &[2]));
        assert_eq!(homology(&k, 2).unwrap(), group(0, &[]));
    }

    #[test]
    fn projective_plane_smith_form_cross_checked_by_minors() {
        // The torsion of H_1 shows up two independent ways in d_2: as the
        // last invariant factor of the Smith form, and as the gcd of all
        // maximal minors divided by the previous determinantal divisor.
        let d2 = boundary_matrix(&fixtures::projective_plane(), 2);
        assert_eq!(d2.rows(), 15);
        assert_eq!(d2.cols(), 10);
        let snf = smith_normal_form(&d2).unwrap();
        let mut expected: Vec<BigInt> = vec![BigInt::from(1); 9];
        expected.push(BigInt::from(2));
        assert_eq!(snf.invariant_factors, expected);

        let d9 = determinantal_divisor(&d2, 9).unwrap();
        let d10 = determinantal_divisor(&d2, 10).unwrap();
        assert_eq!(d9, BigInt::from(1));
        assert_eq!(d10, BigInt::from(2));
    }

    #[test]
    fn torus_homology() {
        let k = fixtures::torus();
        assert_eq!(homology(&k, 0).unwrap(), group(1, &[]));
        assert_eq!(homology(&k, 1).unwrap(), group(2, &[]));
        assert_eq!(homology(&k, 2).unwrap(), group(1, &[]));
    }

    #[test]
    fn klein_bottle_homology() {
        let k = fixtures::klein_bottle();
        assert_eq!(homology(&k, 0).unwrap(), group(1, &[]));
        assert_eq!(homology(&k, 1).unwrap(), group(1, &[2]));
        assert_eq!(homology(&k, 2).unwrap(), group(0, &[]));
    }

    #[test]
    fn degrees_beyond_dimension_vanish() {
        let k = fixtures::torus();
        for n in 3..6 {
            assert_eq!(homology(&k, n).unwrap(), group(0, &[]));
        }
    }

    #[test]
    fn log_torsion_order_sums_factor_logs() {
        let g = group(0, &[2, 6]);
        assert!((g.log_torsion_order() - 12f64.ln()).abs() < 1e-14);
        assert_eq!(group(3, &[]).log_torsion_order(), 0.0);
    }

    #[test]
    fn homology_group_serializes_with_string_torsion() {
        let g = group(1, &[2]);
        assert_eq!(
            serde_json::to_string(&g).unwrap(),
            r#"{"betti":1,"torsion":["2"]}"#
        );
    }

    #[test]
    fn boundary_composition_vanishes_on_fixtures() {
        for k in [
            fixtures::sphere(),
            fixtures::projective_plane(),
            fixtures::torus(),
            fixtures::klein_bottle(),
        ] {
            let dim = k.dim().unwrap();
            for n in 1..dim {
                let prod = boundary_matrix(&k, n).mul(&boundary_matrix(&k, n + 1)).unwrap();
                assert!(prod.is_zero(), "d_{n} . d_{} != 0", n + 1);
            }
        }
    }

    #[test]
    fn euler_characteristic_of_fixtures() {
        // Alternating simplex counts equal alternating Betti numbers.
        for (k, chi) in [
            (fixtures::sphere(), 2i64),
            (fixtures::projective_plane(), 1),
            (fixtures::torus(), 0),
            (fixtures::klein_bottle(), 0),
            (fixtures::circle(), 0),
            (fixtures::two_points(), 2),
        ] {
            assert_eq!(euler_from_counts(&k), chi);
            assert_eq!(euler_from_betti(&k), chi);
        }
    }

    fn euler_from_counts(k: &SimplicialComplex) -> i64 {
        let dims = k.dim().map_or(0, |d| d + 1);
        (0..dims)
            .map(|d| {
                let c = k.simplex_count(d) as i64;
                if d % 2 == 0 {
                    c
                } else {
                    -c
                }
            })
            .sum()
    }

    fn euler_from_betti(k: &SimplicialComplex) -> i64 {
        let dims = k.dim().map_or(0, |d| d + 1);
        (0..dims)
            .map(|d| {
                let b = homology(k, d).unwrap().betti as i64;
                if d % 2 == 0 {
                    b
                } else {
                    -b
                }
            })
            .sum()
    }

    /// Shifts every vertex of `b` past those of `a` and merges the two.
    fn disjoint_union(a: &SimplicialComplex, b: &SimplicialComplex) -> SimplicialComplex {
        let shift = a.vertex_count();
        let mut tops = a.maximal_simplices();
        for s in b.maximal_simplices() {
            tops.push(s.iter().map(|&v| v + shift).collect());
        }
        SimplicialComplex::from_top_simplices(shift + b.vertex_count(), &tops).unwrap()
    }

    #[test]
    fn disjoint_union_adds_homology() {
        let a = fixtures::projective_plane();
        let b = fixtures::torus();
        let u = disjoint_union(&a, &b);
        assert_eq!(homology(&u, 0).unwrap(), group(2, &[]));
        assert_eq!(homology(&u, 1).unwrap(), group(2, &[2]));
        assert_eq!(homology(&u, 2).unwrap(), group(1, &[]));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn random_boundary_composition_vanishes(
            seed in 0u64..1_000_000,
            v in 4usize..12,
            dim in 1usize..4,
        ) {
            let k = random_complex(dim + 2, v.max(dim + 1), dim, seed);
            if let Some(d) = k.dim() {
                for n in 1..d {
                    let prod = boundary_matrix(&k, n)
                        .mul(&boundary_matrix(&k, n + 1))
                        .unwrap();
                    prop_assert!(prod.is_zero());
                }
            }
        }

        #[test]
        fn random_euler_characteristic_is_consistent(
            seed in 0u64..1_000_000,
            v in 4usize..10,
            dim in 1usize..3,
        ) {
            let k = random_complex(dim + 2, v.max(dim + 1), dim, seed);
            prop_assert_eq!(euler_from_counts(&k), euler_from_betti(&k));
        }

        #[test]
        fn random_disjoint_union_adds_homology(
            s1 in 0u64..100_000,
            s2 in 0u64..100_000,
        ) {
            let a = random_complex(4, 7, 2, s1);
            let b = random_complex(4, 6, 2, s2);
            let u = disjoint_union(&a, &b);
            for n in 0..4 {
                let ha = homology(&a, n).unwrap();
                let hb = homology(&b, n).unwrap();
                let hu = homology(&u, n).unwrap();
                prop_assert_eq!(hu.betti, ha.betti + hb.betti);
                let mut merged: Vec<BigInt> = ha.torsion;
                merged.extend(hb.torsion);
                merged.sort();
                let mut got = hu.torsion;
                got.sort();
                prop_assert_eq!(got, merged);
            }
        }
    }
}
