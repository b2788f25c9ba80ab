//! Abstract spherical polyhedra with block/hole/surface face labels.
//!
//! Faces are stored as oriented vertex cycles, counterclockwise as seen from
//! outside the sphere, so the face whose cycle traverses the directed edge
//! `i -> j` lies to the left of that edge. All orientation-dependent signs
//! downstream (edge patches, hinge extensors) derive from this one
//! convention.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use thiserror::Error;

pub type Vertex = usize;
pub type Face = usize;
pub type EdgeId = usize;

#[derive(Debug, Error, PartialEq)]
pub enum PolyError {
    #[error("face {face} is invalid: {reason}")]
    BadFaceCycle { face: Face, reason: String },
    #[error("Euler relation violated: V={v} - E={e} + F={f} = {chi}, expected 2")]
    EulerViolation { v: usize, e: usize, f: usize, chi: i64 },
    #[error("edge {{{0}, {1}}} does not lie in exactly two faces")]
    NonManifoldEdge(Vertex, Vertex),
    #[error("directed edge ({0}, {1}) appears in more than one face cycle; orientation inconsistent")]
    OrientationMismatch(Vertex, Vertex),
    #[error("underlying graph is not 3-connected{0}")]
    NotThreeConnected(String),
    #[error("faces {0} and {1} share more than one edge")]
    DuplicateEdgeInFacePair(Face, Face),
    #[error("labels overlap or collide on face {0}")]
    OverlappingLabels(Face),
    #[error("unknown face index {0}")]
    UnknownFace(Face),
    #[error("triangulation chord {{{0}, {1}}} duplicates an existing edge or chord")]
    ChordAlreadyEdge(Vertex, Vertex),
    #[error("rotation system inconsistent at vertex {0}")]
    BrokenUmbrella(Vertex),
}

/// Undirected edge with its two incident faces. `face_fwd` owns the directed
/// edge `ends.0 -> ends.1` (and so lies to its left); `face_rev` owns the
/// reverse.
#[derive(Clone, Debug)]
pub struct Edge {
    pub ends: (Vertex, Vertex),
    pub face_fwd: Face,
    pub face_rev: Face,
}

#[derive(Clone, Debug)]
pub struct SphericalPolyhedron {
    vertex_count: usize,
    faces: Vec<Vec<Vertex>>,
    edges: Vec<Edge>,
    edge_index: HashMap<(Vertex, Vertex), EdgeId>,
}

/// Oriented edge together with its oriented face pair `(i, j; k, m)`:
/// crossing the edge from `face_from` (k) to `face_to` (m) is a left turn
/// relative to the direction `tail -> head`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EdgePatch {
    pub tail: Vertex,
    pub head: Vertex,
    pub face_from: Face,
    pub face_to: Face,
}

impl EdgePatch {
    pub fn reversed(&self) -> EdgePatch {
        EdgePatch {
            tail: self.head,
            head: self.tail,
            face_from: self.face_to,
            face_to: self.face_from,
        }
    }
}

impl SphericalPolyhedron {
    pub fn new(vertex_count: usize, face_cycles: Vec<Vec<Vertex>>) -> Result<Self, PolyError> {
        // per-face sanity
        for (f, cyc) in face_cycles.iter().enumerate() {
            if cyc.len() < 3 {
                return Err(PolyError::BadFaceCycle {
                    face: f,
                    reason: format!("cycle length {} < 3", cyc.len()),
                });
            }
            let mut seen = BTreeSet::new();
            for &v in cyc {
                if v >= vertex_count {
                    return Err(PolyError::BadFaceCycle {
                        face: f,
                        reason: format!("vertex {} out of range", v),
                    });
                }
                if !seen.insert(v) {
                    return Err(PolyError::BadFaceCycle {
                        face: f,
                        reason: format!("vertex {} repeated", v),
                    });
                }
            }
        }

        // directed edge ownership
        let mut directed: HashMap<(Vertex, Vertex), Face> = HashMap::new();
        for (f, cyc) in face_cycles.iter().enumerate() {
            for k in 0..cyc.len() {
                let u = cyc[k];
                let v = cyc[(k + 1) % cyc.len()];
                if directed.insert((u, v), f).is_some() {
                    return Err(PolyError::OrientationMismatch(u, v));
                }
            }
        }

        // pair directed edges into undirected manifold edges
        let mut edges = Vec::new();
        let mut edge_index = HashMap::new();
        for (&(u, v), &f_fwd) in directed.iter() {
            if u > v {
                continue;
            }
            let f_rev = match directed.get(&(v, u)) {
                Some(&f) => f,
                None => return Err(PolyError::NonManifoldEdge(u, v)),
            };
            edge_index.insert((u, v), edges.len());
            edges.push(Edge {
                ends: (u, v),
                face_fwd: f_fwd,
                face_rev: f_rev,
            });
        }
        // a directed edge whose reverse is missing and whose endpoints are
        // in descending order was skipped above; catch it now
        for &(u, v) in directed.keys() {
            let key = (u.min(v), u.max(v));
            if !edge_index.contains_key(&key) {
                return Err(PolyError::NonManifoldEdge(key.0, key.1));
            }
        }
        // deterministic edge order
        edges.sort_by_key(|e| e.ends);
        edge_index.clear();
        for (i, e) in edges.iter().enumerate() {
            edge_index.insert(e.ends, i);
        }

        let poly = SphericalPolyhedron {
            vertex_count,
            faces: face_cycles,
            edges,
            edge_index,
        };

        let chi = vertex_count as i64 - poly.edges.len() as i64 + poly.faces.len() as i64;
        if chi != 2 {
            return Err(PolyError::EulerViolation {
                v: vertex_count,
                e: poly.edges.len(),
                f: poly.faces.len(),
                chi,
            });
        }

        // no two faces share more than one edge
        let mut pair_count: BTreeMap<(Face, Face), usize> = BTreeMap::new();
        for e in &poly.edges {
            let key = (e.face_fwd.min(e.face_rev), e.face_fwd.max(e.face_rev));
            let c = pair_count.entry(key).or_insert(0);
            *c += 1;
            if *c > 1 {
                return Err(PolyError::DuplicateEdgeInFacePair(key.0, key.1));
            }
        }

        poly.check_three_connected()?;

        // single face-edge cycle around every vertex
        for v in 0..vertex_count {
            poly.vertex_rotation(v).ok_or(PolyError::BrokenUmbrella(v))?;
        }

        Ok(poly)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn faces(&self) -> &[Vec<Vertex>] {
        &self.faces
    }

    pub fn face(&self, f: Face) -> &[Vertex] {
        &self.faces[f]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_between(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        self.edge_index.get(&(u.min(v), u.max(v))).copied()
    }

    /// Patch for the directed edge `tail -> head`.
    pub fn patch(&self, tail: Vertex, head: Vertex) -> Option<EdgePatch> {
        let id = self.edge_between(tail, head)?;
        let e = &self.edges[id];
        let (to, from) = if e.ends == (tail, head) {
            (e.face_fwd, e.face_rev)
        } else {
            (e.face_rev, e.face_fwd)
        };
        Some(EdgePatch {
            tail,
            head,
            face_from: from,
            face_to: to,
        })
    }

    /// All 2|E| oriented edge patches.
    pub fn edge_patches(&self) -> Vec<EdgePatch> {
        let mut out = Vec::with_capacity(2 * self.edges.len());
        for e in &self.edges {
            out.push(self.patch(e.ends.0, e.ends.1).unwrap());
            out.push(self.patch(e.ends.1, e.ends.0).unwrap());
        }
        out
    }

    fn neighbors(&self) -> Vec<Vec<Vertex>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for e in &self.edges {
            adj[e.ends.0].push(e.ends.1);
            adj[e.ends.1].push(e.ends.0);
        }
        adj
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.edges
            .iter()
            .filter(|e| e.ends.0 == v || e.ends.1 == v)
            .count()
    }

    fn check_three_connected(&self) -> Result<(), PolyError> {
        let n = self.vertex_count;
        if n < 4 {
            return Err(PolyError::NotThreeConnected(format!(
                " (only {} vertices)",
                n
            )));
        }
        let adj = self.neighbors();
        let connected_without = |removed: &[Vertex]| -> bool {
            let mut visited = vec![false; n];
            for &r in removed {
                visited[r] = true;
            }
            let start = match (0..n).find(|v| !visited[*v]) {
                Some(s) => s,
                None => return true,
            };
            let mut stack = vec![start];
            visited[start] = true;
            let mut count = 1;
            while let Some(v) = stack.pop() {
                for &w in &adj[v] {
                    if !visited[w] {
                        visited[w] = true;
                        count += 1;
                        stack.push(w);
                    }
                }
            }
            count == n - removed.len()
        };
        if !connected_without(&[]) {
            return Err(PolyError::NotThreeConnected(" (disconnected)".into()));
        }
        for a in 0..n {
            if !connected_without(&[a]) {
                return Err(PolyError::NotThreeConnected(format!(
                    " (cut vertex {})",
                    a
                )));
            }
        }
        for a in 0..n {
            for b in (a + 1)..n {
                if !connected_without(&[a, b]) {
                    return Err(PolyError::NotThreeConnected(format!(
                        " (cut pair {{{}, {}}})",
                        a, b
                    )));
                }
            }
        }
        Ok(())
    }

    /// Counterclockwise umbrella at `v`: entries `(w, F)` where `F` owns the
    /// directed edge `v -> w` and sits between `v->w` and the next edge of
    /// the rotation. Returns None if the incident faces do not close into a
    /// single cycle.
    pub fn vertex_rotation(&self, v: Vertex) -> Option<Vec<(Vertex, Face)>> {
        let degree = self.degree(v);
        if degree == 0 {
            return None;
        }
        let start = self
            .edges
            .iter()
            .find_map(|e| {
                if e.ends.0 == v {
                    Some(e.ends.1)
                } else if e.ends.1 == v {
                    Some(e.ends.0)
                } else {
                    None
                }
            })
            .unwrap();
        let mut out = Vec::with_capacity(degree);
        let mut w = start;
        loop {
            let patch = self.patch(v, w)?;
            let face = patch.face_to; // owns v -> w
            out.push((w, face));
            // next CCW edge: predecessor of v in that face's cycle
            let cyc = &self.faces[face];
            let pos = cyc.iter().position(|&x| x == v)?;
            let prev = cyc[(pos + cyc.len() - 1) % cyc.len()];
            w = prev;
            if w == start {
                break;
            }
            if out.len() > degree {
                return None;
            }
        }
        if out.len() == degree {
            Some(out)
        } else {
            None
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum FaceLabel {
    Block,
    Hole,
    Surface,
}

#[derive(Clone, Debug)]
pub struct BlockHolePolyhedron {
    poly: SphericalPolyhedron,
    labels: Vec<FaceLabel>,
}

/// Per-vertex contact information used by the separation analysis.
#[derive(Clone, Debug, serde::Serialize)]
pub struct ContactVertex {
    pub vertex: Vertex,
    pub holes: Vec<Face>,
    pub blocks: Vec<Face>,
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct SeparationReport {
    /// At most one hole and at most one block at every vertex.
    pub separated: bool,
    /// The weaker, hole-only condition.
    pub hole_separated: bool,
    /// Vertices violating the strict condition.
    pub contact_vertices: Vec<ContactVertex>,
    /// Vertices incident to exactly one hole and one block.
    pub mixed_contact: Vec<Vertex>,
}

#[derive(Clone, Debug)]
pub struct HingeCensus {
    pub bodies: Vec<Face>,
    pub hinge_edges: Vec<EdgeId>,
    pub connected: bool,
}

impl BlockHolePolyhedron {
    pub fn new(
        poly: SphericalPolyhedron,
        block_faces: &[Face],
        hole_faces: &[Face],
    ) -> Result<Self, PolyError> {
        let mut labels = vec![FaceLabel::Surface; poly.faces().len()];
        for &f in block_faces {
            if f >= labels.len() {
                return Err(PolyError::UnknownFace(f));
            }
            labels[f] = FaceLabel::Block;
        }
        for &f in hole_faces {
            if f >= labels.len() {
                return Err(PolyError::UnknownFace(f));
            }
            if labels[f] == FaceLabel::Block {
                return Err(PolyError::OverlappingLabels(f));
            }
            labels[f] = FaceLabel::Hole;
        }
        Ok(BlockHolePolyhedron { poly, labels })
    }

    pub fn from_labeled_faces(
        vertex_count: usize,
        faces: Vec<(Vec<Vertex>, FaceLabel)>,
    ) -> Result<Self, PolyError> {
        let labels: Vec<FaceLabel> = faces.iter().map(|(_, l)| *l).collect();
        let cycles: Vec<Vec<Vertex>> = faces.into_iter().map(|(c, _)| c).collect();
        let poly = SphericalPolyhedron::new(vertex_count, cycles)?;
        Ok(BlockHolePolyhedron { poly, labels })
    }

    pub fn poly(&self) -> &SphericalPolyhedron {
        &self.poly
    }

    pub fn label(&self, f: Face) -> FaceLabel {
        self.labels[f]
    }

    pub fn labels(&self) -> &[FaceLabel] {
        &self.labels
    }

    pub fn blocks(&self) -> Vec<Face> {
        self.faces_with(FaceLabel::Block)
    }

    pub fn holes(&self) -> Vec<Face> {
        self.faces_with(FaceLabel::Hole)
    }

    pub fn surfaces(&self) -> Vec<Face> {
        self.faces_with(FaceLabel::Surface)
    }

    fn faces_with(&self, label: FaceLabel) -> Vec<Face> {
        (0..self.labels.len())
            .filter(|&f| self.labels[f] == label)
            .collect()
    }

    /// Blocks and holes interchanged; same underlying polyhedron.
    pub fn swap(&self) -> Self {
        let labels = self
            .labels
            .iter()
            .map(|l| match l {
                FaceLabel::Block => FaceLabel::Hole,
                FaceLabel::Hole => FaceLabel::Block,
                FaceLabel::Surface => FaceLabel::Surface,
            })
            .collect();
        BlockHolePolyhedron {
            poly: self.poly.clone(),
            labels,
        }
    }

    pub fn is_triangulated(&self) -> bool {
        self.labels
            .iter()
            .enumerate()
            .all(|(f, l)| *l != FaceLabel::Surface || self.poly.face(f).len() == 3)
    }

    /// Replace every surface n-gon (n > 3) by a fan of n-2 triangles pivoting
    /// on its minimum-index vertex. Blocks and holes are untouched.
    pub fn triangulate_surfaces(&self) -> Result<Self, PolyError> {
        if self.is_triangulated() {
            return Ok(self.clone());
        }
        let mut existing: BTreeSet<(Vertex, Vertex)> = self
            .poly
            .edges()
            .iter()
            .map(|e| e.ends)
            .collect();
        let mut new_faces: Vec<(Vec<Vertex>, FaceLabel)> = Vec::new();
        for (f, cyc) in self.poly.faces().iter().enumerate() {
            let label = self.labels[f];
            if label != FaceLabel::Surface || cyc.len() == 3 {
                new_faces.push((cyc.clone(), label));
                continue;
            }
            let (tris, chords) = fan_face(cyc);
            for chord in chords {
                if !existing.insert(chord) {
                    return Err(PolyError::ChordAlreadyEdge(chord.0, chord.1));
                }
            }
            for t in tris {
                new_faces.push((t.to_vec(), FaceLabel::Surface));
            }
        }
        BlockHolePolyhedron::from_labeled_faces(self.poly.vertex_count(), new_faces)
    }

    pub fn separation_report(&self) -> SeparationReport {
        let n = self.poly.vertex_count();
        let mut holes_at = vec![Vec::new(); n];
        let mut blocks_at = vec![Vec::new(); n];
        for (f, cyc) in self.poly.faces().iter().enumerate() {
            match self.labels[f] {
                FaceLabel::Hole => {
                    for &v in cyc {
                        holes_at[v].push(f);
                    }
                }
                FaceLabel::Block => {
                    for &v in cyc {
                        blocks_at[v].push(f);
                    }
                }
                FaceLabel::Surface => {}
            }
        }
        let mut contact = Vec::new();
        let mut mixed = Vec::new();
        let mut hole_separated = true;
        for v in 0..n {
            if holes_at[v].len() >= 2 {
                hole_separated = false;
            }
            if holes_at[v].len() >= 2 || blocks_at[v].len() >= 2 {
                contact.push(ContactVertex {
                    vertex: v,
                    holes: holes_at[v].clone(),
                    blocks: blocks_at[v].clone(),
                });
            } else if holes_at[v].len() == 1 && blocks_at[v].len() == 1 {
                mixed.push(v);
            }
        }
        SeparationReport {
            separated: contact.is_empty(),
            hole_separated,
            contact_vertices: contact,
            mixed_contact: mixed,
        }
    }

    /// Bodies (blocks and surface triangles) and the edges between them.
    /// Edges incident to a hole yield no hinge.
    pub fn hinge_census(&self) -> HingeCensus {
        let bodies: Vec<Face> = (0..self.labels.len())
            .filter(|&f| self.labels[f] != FaceLabel::Hole)
            .collect();
        let body_index: HashMap<Face, usize> =
            bodies.iter().enumerate().map(|(i, &f)| (f, i)).collect();
        let mut hinge_edges = Vec::new();
        let mut dsu: Vec<usize> = (0..bodies.len()).collect();
        fn find(dsu: &mut Vec<usize>, x: usize) -> usize {
            if dsu[x] != x {
                let r = find(dsu, dsu[x]);
                dsu[x] = r;
            }
            dsu[x]
        }
        for (id, e) in self.poly.edges().iter().enumerate() {
            if self.labels[e.face_fwd] != FaceLabel::Hole
                && self.labels[e.face_rev] != FaceLabel::Hole
            {
                hinge_edges.push(id);
                let a = find(&mut dsu, body_index[&e.face_fwd]);
                let b = find(&mut dsu, body_index[&e.face_rev]);
                dsu[a] = b;
            }
        }
        let connected = if bodies.is_empty() {
            true
        } else {
            let root = find(&mut dsu, 0);
            (0..bodies.len()).all(|i| find(&mut dsu, i) == root)
        };
        HingeCensus {
            bodies,
            hinge_edges,
            connected,
        }
    }

    /// The closed cycle of faces around vertex `v`, in rotation order.
    /// None when a hole touches `v` (the cycle of bodies is broken there).
    pub fn body_cycle_around_vertex(&self, v: Vertex) -> Option<Vec<Face>> {
        let rot = self.poly.vertex_rotation(v)?;
        let faces: Vec<Face> = rot.iter().map(|&(_, f)| f).collect();
        if faces.iter().any(|&f| self.labels[f] == FaceLabel::Hole) {
            return None;
        }
        Some(faces)
    }

    /// The closed cycle of bodies around the boundary of a hole. None if a
    /// boundary vertex touches another hole.
    pub fn body_cycle_around_hole(&self, hole: Face) -> Option<Vec<Face>> {
        if self.labels[hole] != FaceLabel::Hole {
            return None;
        }
        let cyc = self.poly.face(hole);
        let n = cyc.len();
        let mut out: Vec<Face> = Vec::new();
        for i in 0..n {
            let v = cyc[(i + 1) % n];
            let rot = self.poly.vertex_rotation(v)?;
            // sector of the umbrella at v away from the hole, starting just
            // after the hole face
            let a = rot.iter().position(|&(_, f)| f == hole)?;
            let len = rot.len();
            for k in 1..len {
                let f = rot[(a + k) % len].1;
                if f == hole {
                    return None;
                }
                if self.labels[f] == FaceLabel::Hole {
                    return None; // another hole breaks the cycle
                }
                if out.last() == Some(&f) {
                    continue;
                }
                out.push(f);
            }
            // drop the face that will be re-entered from the next vertex
            out.pop();
        }
        if out.first() == out.last() && out.len() > 1 {
            out.pop();
        }
        Some(out)
    }
}

/// Fan triangulation of one cycle from its minimum-index vertex; returns the
/// triangles and the chord edges they introduce.
pub fn fan_face(cycle: &[Vertex]) -> (Vec<[Vertex; 3]>, Vec<(Vertex, Vertex)>) {
    let n = cycle.len();
    let m = (0..n).min_by_key(|&i| cycle[i]).unwrap();
    let rot: Vec<Vertex> = (0..n).map(|i| cycle[(m + i) % n]).collect();
    let mut tris = Vec::with_capacity(n - 2);
    let mut chords = Vec::new();
    for i in 1..(n - 1) {
        tris.push([rot[0], rot[i], rot[i + 1]]);
        if i + 1 < n - 1 {
            let (a, b) = (rot[0].min(rot[i + 1]), rot[0].max(rot[i + 1]));
            chords.push((a, b));
        }
    }
    (tris, chords)
}

/// A drum with an s-gon block on top (vertices 0..s) and a t-gon hole on the
/// bottom (vertices s..s+t), banded by s+t surface triangles from a two-loop
/// merge that advances the cycle whose consumed fraction is smaller (ties go
/// to the block side).
pub fn tower(s: usize, t: usize) -> BlockHolePolyhedron {
    assert!(s >= 3 && t >= 3, "tower needs s,t >= 3");
    let v = |i: usize| i % s;
    let u = |j: usize| s + (j % t);
    let mut faces: Vec<(Vec<Vertex>, FaceLabel)> = Vec::new();
    faces.push(((0..s).collect(), FaceLabel::Block));
    let mut hole = vec![u(0)];
    for j in (1..t).rev() {
        hole.push(u(j));
    }
    faces.push((hole, FaceLabel::Hole));
    let (mut a, mut b) = (0usize, 0usize);
    while a < s || b < t {
        let advance_top = if a == s {
            false
        } else if b == t {
            true
        } else {
            a * t <= b * s
        };
        if advance_top {
            faces.push((vec![v(a), u(b), v(a + 1)], FaceLabel::Surface));
            a += 1;
        } else {
            faces.push((vec![u(b), u(b + 1), v(a)], FaceLabel::Surface));
            b += 1;
        }
    }
    BlockHolePolyhedron::from_labeled_faces(s + t, faces)
        .expect("tower construction is always valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn octahedron_builds_with_expected_counts() {
        let oct = fixtures::octahedron();
        assert_eq!(oct.vertex_count(), 6);
        assert_eq!(oct.edges().len(), 12);
        assert_eq!(oct.faces().len(), 8);
    }

    #[test]
    fn tetrahedron_builds() {
        let t = fixtures::tetrahedron();
        assert_eq!(t.edges().len(), 6);
        assert_eq!(t.edge_patches().len(), 12);
    }

    #[test]
    fn degenerate_bigon_sphere_rejected() {
        // two triangles glued on all three edges: Euler holds but the map is
        // degenerate
        let r = SphericalPolyhedron::new(3, vec![vec![0, 1, 2], vec![2, 1, 0]]);
        match r {
            Err(PolyError::DuplicateEdgeInFacePair(_, _)) | Err(PolyError::NotThreeConnected(_)) => {}
            other => panic!("expected rejection, got {:?}", other.map(|_| ())),
        }
    }

    #[test]
    fn pinched_sphere_is_not_three_connected() {
        // two quads sharing two opposite vertices x, y, with the two lune
        // regions between them fanned from interior vertices p and q:
        // passes every local check but has the 2-cut {x, y}
        let (x, y, a, b, c, d, p, q) = (0, 1, 2, 3, 4, 5, 6, 7);
        let faces = vec![
            vec![x, a, y, b],
            vec![x, d, y, c],
            vec![a, x, p],
            vec![x, c, p],
            vec![c, y, p],
            vec![y, a, p],
            vec![b, y, q],
            vec![y, d, q],
            vec![d, x, q],
            vec![x, b, q],
        ];
        let r = SphericalPolyhedron::new(8, faces);
        match r {
            Err(PolyError::NotThreeConnected(_)) => {}
            other => panic!("expected NotThreeConnected, got {:?}", other.map(|_| ())),
        }
    }

    #[test]
    fn reversed_face_is_orientation_mismatch() {
        let mut faces = fixtures::octahedron_faces();
        faces[0].reverse();
        let r = SphericalPolyhedron::new(6, faces);
        assert!(matches!(r, Err(PolyError::OrientationMismatch(_, _))));
    }

    #[test]
    fn extra_face_is_non_manifold() {
        let mut faces = fixtures::octahedron_faces();
        let mut dup = faces[0].clone();
        dup.reverse();
        faces.push(dup);
        let r = SphericalPolyhedron::new(6, faces);
        // each edge of face 0 now lies in three faces
        assert!(matches!(
            r,
            Err(PolyError::NonManifoldEdge(_, _)) | Err(PolyError::EulerViolation { .. })
        ));
    }

    #[test]
    fn two_disjoint_tetrahedra_violate_euler() {
        let mut faces = vec![
            vec![0, 1, 2],
            vec![0, 2, 3],
            vec![0, 3, 1],
            vec![1, 3, 2],
        ];
        faces.extend(vec![
            vec![4, 5, 6],
            vec![4, 6, 7],
            vec![4, 7, 5],
            vec![5, 7, 6],
        ]);
        let r = SphericalPolyhedron::new(8, faces);
        assert!(matches!(r, Err(PolyError::EulerViolation { .. })));
    }

    #[test]
    fn patches_reverse_correctly() {
        let oct = fixtures::octahedron();
        for patch in oct.edge_patches() {
            let rev = oct.patch(patch.head, patch.tail).unwrap();
            assert_eq!(rev, patch.reversed());
        }
    }

    #[test]
    fn octahedron_umbrellas_have_length_four() {
        let oct = fixtures::octahedron();
        for v in 0..6 {
            assert_eq!(oct.vertex_rotation(v).unwrap().len(), 4);
        }
    }

    #[test]
    fn labeling_rejects_overlap_and_unknown_faces() {
        let oct = fixtures::octahedron();
        assert!(matches!(
            BlockHolePolyhedron::new(oct.clone(), &[0], &[0]),
            Err(PolyError::OverlappingLabels(0))
        ));
        assert!(matches!(
            BlockHolePolyhedron::new(oct, &[99], &[]),
            Err(PolyError::UnknownFace(99))
        ));
    }

    #[test]
    fn swap_is_an_involution() {
        let bhp = fixtures::oct_block_hole();
        let back = bhp.swap().swap();
        assert_eq!(bhp.labels(), back.labels());
        // all-surface polyhedra are fixed points
        let plain = fixtures::oct_all_surface();
        assert_eq!(plain.swap().labels(), plain.labels());
    }

    #[test]
    fn cube_triangulation_adds_six_chords() {
        let cube = fixtures::cube_all_surface();
        assert_eq!(cube.poly().edges().len(), 12);
        let tri = cube.triangulate_surfaces().unwrap();
        assert_eq!(tri.poly().edges().len(), 18);
        assert_eq!(tri.poly().faces().len(), 12);
        assert!(tri.is_triangulated());
    }

    #[test]
    fn triangulation_is_identity_on_triangulated_input() {
        let oct = fixtures::oct_all_surface();
        let tri = oct.triangulate_surfaces().unwrap();
        assert_eq!(tri.poly().faces(), oct.poly().faces());
        // a cube whose squares are all blocks/holes has no surface to fan
        let cube = fixtures::cube_all_blocks_and_holes();
        let tri = cube.triangulate_surfaces().unwrap();
        assert_eq!(tri.poly().edges().len(), 12);
    }

    #[test]
    fn fan_face_detects_chords() {
        let (tris, chords) = fan_face(&[4, 7, 2, 9]);
        assert_eq!(tris, vec![[2, 9, 4], [2, 4, 7]]);
        assert_eq!(chords, vec![(2, 4)]);
    }

    #[test]
    fn tower_counts() {
        let t44 = tower(4, 4);
        assert_eq!(t44.poly().vertex_count(), 8);
        assert_eq!(t44.poly().edges().len(), 16);
        assert_eq!(t44.poly().faces().len(), 10);
        assert_eq!(t44.surfaces().len(), 8);

        let t43 = tower(4, 3);
        assert_eq!(t43.poly().vertex_count(), 7);
        assert_eq!(t43.surfaces().len(), 7);

        for s in 3..=12 {
            for t in 3..=12 {
                let tw = tower(s, t);
                assert_eq!(tw.poly().vertex_count(), s + t);
                assert_eq!(tw.surfaces().len(), s + t);
            }
        }
    }

    #[test]
    fn tower_3_3_is_octahedron_combinatorially() {
        let t = tower(3, 3);
        assert_eq!(t.poly().vertex_count(), 6);
        assert_eq!(t.poly().edges().len(), 12);
        assert_eq!(t.poly().faces().len(), 8);
        // every vertex has degree 4, like the octahedron
        for v in 0..6 {
            assert_eq!(t.poly().degree(v), 4);
        }
    }

    #[test]
    fn separation_analysis() {
        // two holes sharing vertex 2
        let bhp = fixtures::oct_two_holes();
        let rep = bhp.separation_report();
        assert!(!rep.separated);
        assert!(!rep.hole_separated);
        assert!(rep.contact_vertices.iter().any(|c| c.vertex == 2));

        // one block + one hole sharing a vertex: separated, flagged mixed
        let bhp = fixtures::oct_mixed();
        let rep = bhp.separation_report();
        assert!(rep.separated);
        assert!(rep.hole_separated);
        assert_eq!(rep.mixed_contact, vec![2]);

        // all-surface sphere
        let rep = fixtures::oct_all_surface().separation_report();
        assert!(rep.separated && rep.contact_vertices.is_empty());
    }

    #[test]
    fn hinge_census_counts() {
        let census = fixtures::oct_all_surface().hinge_census();
        assert_eq!(census.bodies.len(), 8);
        assert_eq!(census.hinge_edges.len(), 12);
        assert!(census.connected);

        let t44 = tower(4, 4);
        let census = t44.hinge_census();
        assert_eq!(census.bodies.len(), 9);
        assert_eq!(census.hinge_edges.len(), 12);
        assert!(census.connected);

        // a closed necklace of vertex-sharing holes disconnects the body graph
        let census = fixtures::oct_disconnected_hinges().hinge_census();
        assert!(!census.connected);
    }

    #[test]
    fn body_cycles() {
        let oct = fixtures::oct_all_surface();
        for v in 0..6 {
            let cyc = oct.body_cycle_around_vertex(v).unwrap();
            assert_eq!(cyc.len(), 4);
        }
        let t44 = tower(4, 4);
        let hole = t44.holes()[0];
        let cyc = t44.body_cycle_around_hole(hole).unwrap();
        // each hole vertex contributes its band triangles
        assert!(cyc.len() >= 4);
        // consecutive bodies share an edge
        let n = cyc.len();
        for i in 0..n {
            let (a, b) = (cyc[i], cyc[(i + 1) % n]);
            let shared = t44
                .poly()
                .edges()
                .iter()
                .any(|e| {
                    (e.face_fwd == a && e.face_rev == b) || (e.face_fwd == b && e.face_rev == a)
                });
            assert!(shared, "bodies {} and {} do not share an edge", a, b);
        }
    }
}
