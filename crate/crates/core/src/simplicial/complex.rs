use std::collections::BTreeSet;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::SimplicialError;

/// Largest vertex count accepted for a single top simplex. Face closure
/// enumerates all 2^len - 1 nonempty subsets, so this bound keeps closure
/// from exploding on absurd input.
pub(crate) const MAX_SIMPLEX_VERTICES: usize = 16;

/// A finite abstract simplicial complex on vertices `0..vertex_count`.
///
/// The complex is stored face-closed: every nonempty subset of a stored
/// simplex is itself stored. Within each dimension the simplices are kept
/// sorted lexicographically; that order fixes the chain bases used by
/// [`boundary_matrix`](super::boundary_matrix).
///
/// Not every vertex of `0..vertex_count` has to appear in a simplex;
/// isolated labels simply do not contribute chains.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertex_count: usize,
    /// `by_dim[d]` lists the d-simplices in lexicographic order.
    by_dim: Vec<Vec<Vec<usize>>>,
}

/// Size summary of a complex: ambient vertex count, maximum degree of the
/// 1-skeleton, and the number of simplices per dimension.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComplexProfile {
    pub v: usize,
    pub delta: usize,
    pub simplex_counts: Vec<usize>,
}

impl SimplicialComplex {
    /// Builds the face closure of the given simplices.
    ///
    /// Every simplex must list its vertices in strictly increasing order,
    /// with each index below `vertex_count`. The input does not need to be
    /// maximal or closed; closure and deduplication happen here.
    pub fn from_top_simplices(
        vertex_count: usize,
        top_simplices: &[Vec<usize>],
    ) -> Result<Self, SimplicialError> {
        let mut faces: BTreeSet<Vec<usize>> = BTreeSet::new();
        for simplex in top_simplices {
            validate_simplex(simplex, vertex_count)?;
            // Each bit pattern selects a nonempty subset, i.e. one face.
            for mask in 1u32..(1u32 << simplex.len()) {
                let face: Vec<usize> = simplex
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &v)| v)
                    .collect();
                faces.insert(face);
            }
        }

        let max_dim = faces.iter().map(|f| f.len() - 1).max();
        let mut by_dim: Vec<Vec<Vec<usize>>> = match max_dim {
            Some(d) => vec![Vec::new(); d + 1],
            None => Vec::new(),
        };
        for face in faces {
            by_dim[face.len() - 1].push(face);
        }
        // BTreeSet iterates in lexicographic order and shorter prefixes sort
        // first, so each per-dimension list comes out already sorted.
        Ok(SimplicialComplex {
            vertex_count,
            by_dim,
        })
    }

    /// Number of ambient vertex labels (not all need to be used).
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Dimension of the complex, or `None` if it has no simplices at all.
    pub fn dim(&self) -> Option<usize> {
        self.by_dim.len().checked_sub(1)
    }

    /// The d-simplices in lexicographic order. Empty past the dimension.
    pub fn simplices(&self, d: usize) -> &[Vec<usize>] {
        self.by_dim.get(d).map_or(&[], Vec::as_slice)
    }

    /// Number of d-simplices.
    pub fn simplex_count(&self, d: usize) -> usize {
        self.simplices(d).len()
    }

    /// Position of a d-simplex in the lexicographic basis, if present.
    pub fn simplex_index(&self, simplex: &[usize]) -> Option<usize> {
        let d = simplex.len().checked_sub(1)?;
        self.simplices(d)
            .binary_search_by(|s| s.as_slice().cmp(simplex))
            .ok()
    }

    /// The simplices that are not proper faces of any other simplex.
    ///
    /// Feeding these back into [`from_top_simplices`] reproduces the complex;
    /// they are the canonical compact description used by the JSON format.
    pub fn maximal_simplices(&self) -> Vec<Vec<usize>> {
        let mut maximal = Vec::new();
        for d in 0..self.by_dim.len() {
            // A d-simplex is a face of some larger simplex iff it is a facet
            // of a (d+1)-simplex, because the complex is face-closed.
            let facets: BTreeSet<Vec<usize>> = self
                .simplices(d + 1)
                .iter()
                .flat_map(|s| {
                    (0..s.len()).map(|omit| {
                        let mut f = s.clone();
                        f.remove(omit);
                        f
                    })
                })
                .collect();
            for s in self.simplices(d) {
                if !facets.contains(s) {
                    maximal.push(s.clone());
                }
            }
        }
        maximal
    }

    /// Ambient vertex count, 1-skeleton maximum degree, and simplex counts.
    pub fn profile(&self) -> ComplexProfile {
        let mut degree = vec![0usize; self.vertex_count];
        for edge in self.simplices(1) {
            degree[edge[0]] += 1;
            degree[edge[1]] += 1;
        }
        ComplexProfile {
            v: self.vertex_count,
            delta: degree.iter().copied().max().unwrap_or(0),
            simplex_counts: self.by_dim.iter().map(Vec::len).collect(),
        }
    }
}

fn validate_simplex(simplex: &[usize], vertex_count: usize) -> Result<(), SimplicialError> {
    if simplex.is_empty() {
        return Err(SimplicialError::EmptySimplex);
    }
    if simplex.len() > MAX_SIMPLEX_VERTICES {
        return Err(SimplicialError::SimplexTooLarge {
            len: simplex.len(),
            max: MAX_SIMPLEX_VERTICES,
        });
    }
    if !simplex.windows(2).all(|w| w[0] < w[1]) {
        return Err(SimplicialError::NotStrictlyIncreasing {
            simplex: simplex.to_vec(),
        });
    }
    if let Some(&index) = simplex.iter().find(|&&v| v >= vertex_count) {
        return Err(SimplicialError::VertexOutOfRange {
            index,
            vertex_count,
        });
    }
    Ok(())
}

/// Wire format: the ambient vertex count plus a generating set of simplices.
#[derive(Serialize, Deserialize)]
struct ComplexRepr {
    vertices: usize,
    top_simplices: Vec<Vec<usize>>,
}

impl Serialize for SimplicialComplex {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        ComplexRepr {
            vertices: self.vertex_count,
            top_simplices: self.maximal_simplices(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SimplicialComplex {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = ComplexRepr::deserialize(deserializer)?;
        SimplicialComplex::from_top_simplices(repr.vertices, &repr.top_simplices)
            .map_err(D::Error::custom)
    }
}
