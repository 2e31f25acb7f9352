//! Vertex coloring, the quadrangulation / noncrossing tree bijection, and
//! the associated triangulations `D ↦ T_D` for p = 4 and p = 6.
//!
//! Odd vertices are black and even vertices white, for both values of p.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::polygon::{chords_cross, is_polygon_edge, Dissection, DissectionError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error("vertex coloring needs an even polygon, got a {0}-gon")]
    OddPolygon(usize),
    #[error("vertex {vertex} out of range for a {n}-gon")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("tree edge {{{0}, {1}}} does not join two black vertices")]
    NotBlackEdge(usize, usize),
    #[error("tree edges {0:?} and {1:?} cross")]
    CrossingEdges((usize, usize), (usize, usize)),
    #[error("tree on {vertices} black vertices must have {expected} edges, got {got}")]
    WrongEdgeCount {
        vertices: usize,
        expected: usize,
        got: usize,
    },
    #[error("tree edges do not connect all black vertices")]
    Disconnected,
    #[error("associated triangulations exist only for p = 4 and p = 6, got {0}")]
    UnsupportedP(usize),
    #[error("not a triangulation")]
    NotTriangulation,
    #[error(transparent)]
    Dissection(#[from] DissectionError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Color {
    Black,
    White,
}

pub fn color(v: usize, n: usize) -> Result<Color, BijectionError> {
    if n % 2 == 1 {
        return Err(BijectionError::OddPolygon(n));
    }
    if v >= n {
        return Err(BijectionError::VertexOutOfRange { vertex: v, n });
    }
    Ok(if v % 2 == 1 { Color::Black } else { Color::White })
}

fn is_black(v: usize) -> bool {
    v % 2 == 1
}

/// A spanning noncrossing tree on the black vertices of an even polygon.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawTree")]
pub struct NoncrossingTree {
    host_n: usize,
    edges: Vec<(usize, usize)>,
}

#[derive(Deserialize)]
struct RawTree {
    host_n: usize,
    edges: Vec<(usize, usize)>,
}

impl TryFrom<RawTree> for NoncrossingTree {
    type Error = BijectionError;

    fn try_from(raw: RawTree) -> Result<Self, Self::Error> {
        NoncrossingTree::new(raw.host_n, raw.edges)
    }
}

impl NoncrossingTree {
    pub fn new(host_n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, BijectionError> {
        if host_n % 2 == 1 || host_n < 4 {
            return Err(BijectionError::OddPolygon(host_n));
        }
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            for vertex in [u, v] {
                if vertex >= host_n {
                    return Err(BijectionError::VertexOutOfRange { vertex, n: host_n });
                }
            }
            if u == v || !is_black(u) || !is_black(v) {
                return Err(BijectionError::NotBlackEdge(u, v));
            }
            set.insert((u.min(v), u.max(v)));
        }
        let edges: Vec<_> = set.into_iter().collect();
        for (i, &a) in edges.iter().enumerate() {
            for &b in &edges[i + 1..] {
                if chords_cross(a, b) {
                    return Err(BijectionError::CrossingEdges(a, b));
                }
            }
        }
        let vertices = host_n / 2;
        if edges.len() != vertices - 1 {
            return Err(BijectionError::WrongEdgeCount {
                vertices,
                expected: vertices - 1,
                got: edges.len(),
            });
        }
        // n − 1 edges on n vertices: acyclic iff connected.
        let mut seen = vec![false; host_n];
        let mut stack = vec![1];
        seen[1] = true;
        while let Some(x) = stack.pop() {
            for &(a, b) in &edges {
                let other = if a == x {
                    b
                } else if b == x {
                    a
                } else {
                    continue;
                };
                if !seen[other] {
                    seen[other] = true;
                    stack.push(other);
                }
            }
        }
        if (1..host_n).step_by(2).any(|v| !seen[v]) {
            return Err(BijectionError::Disconnected);
        }
        Ok(NoncrossingTree { host_n, edges })
    }

    pub fn host_n(&self) -> usize {
        self.host_n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }
}

/// Each quadrangle has a unique black-black diagonal; together they form
/// a noncrossing tree.
pub fn quad_to_tree(d: &Dissection) -> Result<NoncrossingTree, BijectionError> {
    if d.n() % 2 == 1 {
        return Err(BijectionError::OddPolygon(d.n()));
    }
    let faces = d.faces();
    if faces.iter().any(|f| f.len() != 4) {
        return Err(DissectionError::NotPAngulation(4).into());
    }
    let edges = faces.iter().map(|f| {
        let black: Vec<usize> = f.vertices().iter().copied().filter(|&v| is_black(v)).collect();
        debug_assert_eq!(black.len(), 2);
        (black[0], black[1])
    });
    NoncrossingTree::new(d.n(), edges)
}

/// All black-white chords that cross no tree edge.
pub fn tree_to_quad(tree: &NoncrossingTree) -> Result<Dissection, BijectionError> {
    let n = tree.host_n;
    let mut diagonals = Vec::new();
    for white in (0..n).step_by(2) {
        for black in (1..n).step_by(2) {
            if is_polygon_edge(n, white, black) {
                continue;
            }
            let chord = (white.min(black), white.max(black));
            if tree.edges.iter().all(|&e| !chords_cross(chord, e)) {
                diagonals.push(chord);
            }
        }
    }
    Ok(Dissection::new(n, diagonals)?)
}

/// A dissection all of whose faces are triangles.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Triangulation(Dissection);

impl Triangulation {
    pub fn new(d: Dissection) -> Result<Self, BijectionError> {
        if d.diagonals().len() + 3 != d.n() || !d.is_p_angulation(3) {
            return Err(BijectionError::NotTriangulation);
        }
        Ok(Triangulation(d))
    }

    pub fn dissection(&self) -> &Dissection {
        &self.0
    }

    pub fn into_dissection(self) -> Dissection {
        self.0
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    /// `t_α`: triangles incident with each vertex; the Conway–Coxeter
    /// quiddity sequence.
    pub fn triangle_counts(&self) -> Vec<usize> {
        self.0.quiddity_counts()
    }
}

impl<'de> Deserialize<'de> for Triangulation {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let d = Dissection::deserialize(deserializer)?;
        Triangulation::new(d).map_err(D::Error::custom)
    }
}

/// `T_D` for a quadrangulation: its diagonals plus its noncrossing tree.
pub fn associated_triangulation_p4(d: &Dissection) -> Result<Triangulation, BijectionError> {
    let tree = quad_to_tree(d)?;
    let diagonals = d.diagonals().iter().chain(tree.edges()).copied();
    Triangulation::new(Dissection::new(d.n(), diagonals)?)
}

/// `T_D` for a hexangulation: its diagonals plus, in every hexagon, the
/// three chords among its black vertices.
pub fn associated_triangulation_p6(d: &Dissection) -> Result<Triangulation, BijectionError> {
    if d.n() % 2 == 1 {
        return Err(BijectionError::OddPolygon(d.n()));
    }
    let faces = d.faces();
    if faces.iter().any(|f| f.len() != 6) {
        return Err(DissectionError::NotPAngulation(6).into());
    }
    let mut diagonals = d.diagonals().to_vec();
    for f in &faces {
        let black: Vec<usize> = f.vertices().iter().copied().filter(|&v| is_black(v)).collect();
        diagonals.extend([(black[0], black[1]), (black[1], black[2]), (black[0], black[2])]);
    }
    Triangulation::new(Dissection::new(d.n(), diagonals)?)
}

/// Adds, inside every face, all chords between vertices of the given
/// parity. With `black_parity = 1` this is `T_D` for both p = 4 and p = 6;
/// with `0` it is the same construction under the swapped coloring.
pub fn same_color_completion(d: &Dissection, p: usize, black_parity: usize) -> Result<Triangulation, BijectionError> {
    if p != 4 && p != 6 {
        return Err(BijectionError::UnsupportedP(p));
    }
    if d.n() % 2 == 1 {
        return Err(BijectionError::OddPolygon(d.n()));
    }
    let faces = d.faces();
    if faces.iter().any(|f| f.len() != p) {
        return Err(DissectionError::NotPAngulation(p).into());
    }
    let mut diagonals = d.diagonals().to_vec();
    for f in &faces {
        let chosen: Vec<usize> = f
            .vertices()
            .iter()
            .copied()
            .filter(|&v| v % 2 == black_parity % 2)
            .collect();
        for (i, &u) in chosen.iter().enumerate() {
            diagonals.extend(chosen[i + 1..].iter().map(|&v| (u, v)));
        }
    }
    Triangulation::new(Dissection::new(d.n(), diagonals)?)
}

pub fn associated_triangulation(d: &Dissection, p: usize) -> Result<Triangulation, BijectionError> {
    match p {
        4 => associated_triangulation_p4(d),
        6 => associated_triangulation_p6(d),
        other => Err(BijectionError::UnsupportedP(other)),
    }
}
