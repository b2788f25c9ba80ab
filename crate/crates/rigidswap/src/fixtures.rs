//! Shared polyhedron fixtures: the small spheres every test and example in
//! this crate is built from, with convex rational coordinates where useful.

use crate::config::{affine, affine_i, Configuration};
use crate::poly::{tower, BlockHolePolyhedron, Face, SphericalPolyhedron, Vertex};
use crate::rat::{rat, Rat};

pub fn octahedron_faces() -> Vec<Vec<Vertex>> {
    vec![
        vec![0, 1, 2],
        vec![1, 3, 2],
        vec![3, 4, 2],
        vec![4, 0, 2],
        vec![1, 0, 5],
        vec![3, 1, 5],
        vec![4, 3, 5],
        vec![0, 4, 5],
    ]
}

pub fn octahedron() -> SphericalPolyhedron {
    SphericalPolyhedron::new(6, octahedron_faces()).unwrap()
}

pub fn tetrahedron() -> SphericalPolyhedron {
    SphericalPolyhedron::new(
        4,
        vec![vec![0, 1, 2], vec![0, 2, 3], vec![0, 3, 1], vec![1, 3, 2]],
    )
    .unwrap()
}

pub fn cube_faces() -> Vec<Vec<Vertex>> {
    let mut faces = vec![vec![0, 1, 2, 3], vec![4, 7, 6, 5]];
    for a in 0..4 {
        faces.push(vec![a, 4 + a, 4 + (a + 1) % 4, (a + 1) % 4]);
    }
    faces
}

pub fn cube() -> SphericalPolyhedron {
    SphericalPolyhedron::new(8, cube_faces()).unwrap()
}

fn oct_bhp(blocks: &[Face], holes: &[Face]) -> BlockHolePolyhedron {
    BlockHolePolyhedron::new(octahedron(), blocks, holes).unwrap()
}

pub fn oct_all_surface() -> BlockHolePolyhedron {
    oct_bhp(&[], &[])
}

/// Octahedron with one block and one hole on vertex-disjoint faces.
pub fn oct_block_hole() -> BlockHolePolyhedron {
    oct_bhp(&[0], &[6])
}

/// Two holes sharing vertex 2, plus a triangle block; not separated.
pub fn oct_two_holes() -> BlockHolePolyhedron {
    oct_bhp(&[5], &[0, 2])
}

/// Two blocks sharing vertex 2, plus a hole; not separated.
pub fn oct_two_blocks() -> BlockHolePolyhedron {
    oct_bhp(&[0, 2], &[7])
}

/// One block and one hole sharing exactly vertex 2: separated but mixed.
pub fn oct_mixed() -> BlockHolePolyhedron {
    oct_bhp(&[0], &[2])
}

/// Three holes forming a closed necklace of shared vertices; the body graph
/// falls apart into the face inside the necklace and everything else.
pub fn oct_disconnected_hinges() -> BlockHolePolyhedron {
    oct_bhp(&[], &[0, 2, 5])
}

pub fn cube_all_surface() -> BlockHolePolyhedron {
    BlockHolePolyhedron::new(cube(), &[], &[]).unwrap()
}

pub fn cube_all_blocks_and_holes() -> BlockHolePolyhedron {
    BlockHolePolyhedron::new(cube(), &[0, 2, 4], &[1, 3, 5]).unwrap()
}

/// Cube with the top square a block and the bottom square a hole.
pub fn cube_block_hole() -> BlockHolePolyhedron {
    BlockHolePolyhedron::new(cube(), &[0], &[1]).unwrap()
}

/// tower(s, t) with one extra hole: the first band triangle, which meets the
/// main hole in exactly one vertex. Not separated.
pub fn tower_with_side_hole(s: usize, t: usize) -> BlockHolePolyhedron {
    let tw = tower(s, t);
    let blocks = tw.blocks();
    let mut holes = tw.holes();
    holes.push(2); // first band triangle (v0, u0, v1)
    BlockHolePolyhedron::new(tw.poly().clone(), &blocks, &holes).unwrap()
}

/// tower(s, t) with one extra block: the first bottom band triangle, which
/// meets the main block in exactly one vertex. Not separated.
pub fn tower_with_side_block(s: usize, t: usize) -> BlockHolePolyhedron {
    let tw = tower(s, t);
    let mut blocks = tw.blocks();
    let holes = tw.holes();
    blocks.push(3); // first bottom band triangle (u0, u1, v1)
    BlockHolePolyhedron::new(tw.poly().clone(), &blocks, &holes).unwrap()
}

pub fn oct_convex_coordinates() -> Configuration {
    Configuration::new(vec![
        affine_i(1, 0, 0),
        affine_i(0, 1, 0),
        affine_i(0, 0, 1),
        affine_i(-1, 0, 0),
        affine_i(0, -1, 0),
        affine_i(0, 0, -1),
    ])
}

pub fn oct_with_convex_coordinates() -> (BlockHolePolyhedron, Configuration) {
    (oct_all_surface(), oct_convex_coordinates())
}

pub fn cube_convex_coordinates() -> Configuration {
    let signs = [(1, 1), (-1, 1), (-1, -1), (1, -1)];
    let mut pts = Vec::new();
    for z in [1i64, -1] {
        for &(x, y) in &signs {
            pts.push(affine_i(x, y, z));
        }
    }
    Configuration::new(pts)
}

/// Icosahedron on a rational approximation of the golden ratio. The faces
/// are derived from the coordinate adjacency (squared edge length near 4)
/// and oriented outward, then validated as a spherical polyhedron.
pub fn icosahedron_with_coordinates() -> (BlockHolePolyhedron, Configuration) {
    let phi = rat(809, 500);
    let one = Rat::from_integer(1.into());
    let zero = Rat::from_integer(0.into());
    let mut pts: Vec<[Rat; 3]> = Vec::new();
    for s1 in [1i64, -1] {
        for s2 in [1i64, -1] {
            let a = one.clone() * Rat::from_integer(s1.into());
            let b = phi.clone() * Rat::from_integer(s2.into());
            pts.push([zero.clone(), a.clone(), b.clone()]);
            pts.push([a.clone(), b.clone(), zero.clone()]);
            pts.push([b, zero.clone(), a]);
        }
    }
    let n = pts.len();
    let d2 = |i: usize, j: usize| -> f64 {
        (0..3)
            .map(|k| {
                let d = crate::rat::rat_to_f64(&pts[i][k]) - crate::rat::rat_to_f64(&pts[j][k]);
                d * d
            })
            .sum()
    };
    let adjacent = |i: usize, j: usize| d2(i, j) < 7.0;
    let mut faces = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                if adjacent(i, j) && adjacent(j, k) && adjacent(i, k) {
                    // orient outward: det of the three position vectors > 0
                    let det = det3(&pts[i], &pts[j], &pts[k]);
                    if det > Rat::from_integer(0.into()) {
                        faces.push(vec![i, j, k]);
                    } else {
                        faces.push(vec![i, k, j]);
                    }
                }
            }
        }
    }
    assert_eq!(faces.len(), 20, "icosahedron face derivation");
    let poly = SphericalPolyhedron::new(n, faces).unwrap();
    let bhp = BlockHolePolyhedron::new(poly, &[], &[]).unwrap();
    let config = Configuration::new(
        pts.into_iter()
            .map(|p| affine(p[0].clone(), p[1].clone(), p[2].clone()))
            .collect(),
    );
    (bhp, config)
}

fn det3(a: &[Rat; 3], b: &[Rat; 3], c: &[Rat; 3]) -> Rat {
    a[0].clone() * (b[1].clone() * c[2].clone() - b[2].clone() * c[1].clone())
        - a[1].clone() * (b[0].clone() * c[2].clone() - b[2].clone() * c[0].clone())
        + a[2].clone() * (b[0].clone() * c[1].clone() - b[1].clone() * c[0].clone())
}

/// The fixture catalog the swap-theorem acceptance criterion runs over.
pub fn swap_catalog() -> Vec<(&'static str, BlockHolePolyhedron)> {
    vec![
        ("tower43", tower(4, 3)),
        ("tower53", tower(5, 3)),
        ("tower44", tower(4, 4)),
        ("tower34", tower(3, 4)),
        ("tower35", tower(3, 5)),
        ("oct_block_hole", oct_block_hole()),
        ("oct_two_holes", oct_two_holes()),
        ("cube_block_hole", cube_block_hole()),
    ]
}

/// Fixtures with contact vertices, for the gusset criteria.
pub fn non_separated_catalog() -> Vec<(&'static str, BlockHolePolyhedron)> {
    vec![
        ("oct_two_holes", oct_two_holes()),
        ("oct_two_blocks", oct_two_blocks()),
        ("tower53_side_hole", tower_with_side_hole(5, 3)),
        ("tower53_side_block", tower_with_side_block(5, 3)),
    ]
}
