//! Standard triangulations with known homology, used as reference data by
//! tests and examples.

use super::{SimplicialComplex, SimplicialError};

/// Boundary of the tetrahedron: the minimal triangulation of the 2-sphere.
pub fn sphere() -> SimplicialComplex {
    build(
        4,
        &[vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]],
    )
}

/// The 6-vertex triangulation of the real projective plane (the quotient of
/// the icosahedron boundary by the antipodal map).
pub fn projective_plane() -> SimplicialComplex {
    build(
        6,
        &[
            vec![0, 1, 4],
            vec![0, 1, 5],
            vec![0, 2, 3],
            vec![0, 2, 5],
            vec![0, 3, 4],
            vec![1, 2, 3],
            vec![1, 2, 4],
            vec![1, 3, 5],
            vec![2, 4, 5],
            vec![3, 4, 5],
        ],
    )
}

/// The 7-vertex (Möbius-Kantor) triangulation of the torus.
pub fn torus() -> SimplicialComplex {
    let mut tris = Vec::new();
    for i in 0..7usize {
        let mut a = vec![i, (i + 1) % 7, (i + 3) % 7];
        a.sort_unstable();
        tris.push(a);
        let mut b = vec![i, (i + 2) % 7, (i + 3) % 7];
        b.sort_unstable();
        tris.push(b);
    }
    build(7, &tris)
}

/// A 16-vertex triangulation of the Klein bottle from a 4x4 grid whose
/// horizontal wrap-around reverses the vertical direction.
pub fn klein_bottle() -> SimplicialComplex {
    const COLS: usize = 4;
    const ROWS: usize = 4;
    // Maps grid coordinates to a vertex, applying the orientation-reversing
    // identification at the right edge and the plain one at the top.
    fn wrap(x: usize, y: usize) -> usize {
        let (x, y) = if x == COLS {
            (0, (ROWS - y % ROWS) % ROWS)
        } else {
            (x, y % ROWS)
        };
        y * COLS + x
    }
    let mut tris = Vec::new();
    for x in 0..COLS {
        for y in 0..ROWS {
            let (a, b) = (wrap(x, y), wrap(x + 1, y));
            let (c, d) = (wrap(x, y + 1), wrap(x + 1, y + 1));
            let mut t1 = vec![a, b, d];
            t1.sort_unstable();
            tris.push(t1);
            let mut t2 = vec![a, d, c];
            t2.sort_unstable();
            tris.push(t2);
        }
    }
    build(COLS * ROWS, &tris)
}

/// A single filled triangle (contractible).
pub fn filled_triangle() -> SimplicialComplex {
    build(3, &[vec![0, 1, 2]])
}

/// The boundary of a triangle: a circle.
pub fn circle() -> SimplicialComplex {
    build(3, &[vec![0, 1], vec![0, 2], vec![1, 2]])
}

/// Two isolated vertices.
pub fn two_points() -> SimplicialComplex {
    build(2, &[vec![0], vec![1]])
}

fn build(vertex_count: usize, tops: &[Vec<usize>]) -> SimplicialComplex {
    SimplicialComplex::from_top_simplices(vertex_count, tops)
        .unwrap_or_else(|e: SimplicialError| unreachable!("fixture is valid: {e}"))
}
