//! Labeled convex polygons and their dissections.
//!
//! Vertices are labeled `0..n` in counterclockwise order. A [`Dissection`]
//! is a set of pairwise noncrossing diagonals; p-angulations and
//! triangulations are the special cases where every face has the same size.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DissectionError {
    #[error("a polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("vertex {vertex} out of range for a {n}-gon")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("degenerate diagonal {{{0}, {0}}}")]
    Loop(usize),
    #[error("{{{0}, {1}}} is a polygon edge, not a diagonal")]
    BoundaryEdge(usize, usize),
    #[error("diagonals {{{}, {}}} and {{{}, {}}} cross", .0.0, .0.1, .1.0, .1.1)]
    Crossing((usize, usize), (usize, usize)),
    #[error("face {0:?} is not an ear of the dissection")]
    NotAnEar(Vec<usize>),
    #[error("dissection is not a {0}-angulation")]
    NotPAngulation(usize),
    #[error("p must be at least 3, got {0}")]
    InvalidP(usize),
    #[error("face count must be at least 1")]
    EmptyFaceCount,
}

/// `{a, b}` with `a < b` and `c < d` cross iff exactly one of `c, d` lies
/// strictly between `a` and `b`. Shared endpoints never cross.
pub fn chords_cross((a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    let (a, b) = (a.min(b), a.max(b));
    let (c, d) = (c.min(d), c.max(d));
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

/// True if `u` and `v` are joined by an edge of the `n`-gon.
pub fn is_polygon_edge(n: usize, u: usize, v: usize) -> bool {
    let d = u.abs_diff(v);
    d == 1 || d == n - 1
}

/// A convex polygon with a noncrossing set of diagonals.
///
/// Diagonals are stored normalized: smaller endpoint first, list sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawDissection")]
pub struct Dissection {
    n: usize,
    diagonals: Vec<(usize, usize)>,
}

#[derive(Deserialize)]
struct RawDissection {
    n: usize,
    diagonals: Vec<(usize, usize)>,
}

impl TryFrom<RawDissection> for Dissection {
    type Error = DissectionError;

    fn try_from(raw: RawDissection) -> Result<Self, Self::Error> {
        Dissection::new(raw.n, raw.diagonals)
    }
}

impl Dissection {
    pub fn new(n: usize, diagonals: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, DissectionError> {
        if n < 3 {
            return Err(DissectionError::TooFewVertices(n));
        }
        let mut set = BTreeSet::new();
        for (u, v) in diagonals {
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(DissectionError::VertexOutOfRange { vertex, n });
                }
            }
            if u == v {
                return Err(DissectionError::Loop(u));
            }
            let pair = (u.min(v), u.max(v));
            if is_polygon_edge(n, u, v) {
                return Err(DissectionError::BoundaryEdge(pair.0, pair.1));
            }
            set.insert(pair);
        }
        let diagonals: Vec<_> = set.into_iter().collect();
        for (i, &d1) in diagonals.iter().enumerate() {
            for &d2 in &diagonals[i + 1..] {
                if chords_cross(d1, d2) {
                    return Err(DissectionError::Crossing(d1, d2));
                }
            }
        }
        Ok(Dissection { n, diagonals })
    }

    /// The polygon with no diagonals.
    pub fn empty(n: usize) -> Result<Self, DissectionError> {
        Dissection::new(n, [])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn diagonals(&self) -> &[(usize, usize)] {
        &self.diagonals
    }

    pub fn has_diagonal(&self, u: usize, v: usize) -> bool {
        self.diagonals.binary_search(&(u.min(v), u.max(v))).is_ok()
    }

    /// Subpolygons, each listed in cyclic (= ascending) vertex order,
    /// sorted lexicographically and hence by minimal vertex.
    pub fn faces(&self) -> Vec<Face> {
        let mut out = Vec::with_capacity(self.diagonals.len() + 1);
        split_faces((0..self.n).collect(), &self.diagonals, &mut out);
        for face in &mut out {
            face.sort_unstable();
        }
        out.sort();
        out.into_iter().map(Face).collect()
    }

    pub fn is_p_angulation(&self, p: usize) -> bool {
        self.faces().iter().all(|f| f.len() == p)
    }

    /// `q_α`: the number of faces incident with each vertex.
    pub fn quiddity_counts(&self) -> Vec<usize> {
        let mut q = vec![1; self.n];
        for &(u, v) in &self.diagonals {
            q[u] += 1;
            q[v] += 1;
        }
        q
    }

    /// Diagonals of `self` that bound `face`.
    pub fn face_diagonals(&self, face: &Face) -> Vec<(usize, usize)> {
        face.sides()
            .filter(|&(u, v)| self.has_diagonal(u, v))
            .map(|(u, v)| (u.min(v), u.max(v)))
            .collect()
    }

    /// Faces bounded by exactly one diagonal.
    pub fn ears(&self) -> Vec<Face> {
        if self.diagonals.is_empty() {
            return Vec::new();
        }
        self.faces()
            .into_iter()
            .filter(|f| self.face_diagonals(f).len() == 1)
            .collect()
    }

    /// Removes an ear: its boundary-only vertices are deleted and the
    /// survivors relabeled order-preservingly to `0..n'`. The ear's diagonal
    /// becomes a polygon edge.
    pub fn cut_ear(&self, ear: &Face) -> Result<Dissection, DissectionError> {
        if !self.ears().contains(ear) {
            return Err(DissectionError::NotAnEar(ear.vertices().to_vec()));
        }
        let cut = self.face_diagonals(ear)[0];
        let removed: BTreeSet<usize> = ear
            .vertices()
            .iter()
            .copied()
            .filter(|&v| v != cut.0 && v != cut.1)
            .collect();
        let mut relabel = vec![usize::MAX; self.n];
        let mut next = 0;
        for (v, slot) in relabel.iter_mut().enumerate() {
            if !removed.contains(&v) {
                *slot = next;
                next += 1;
            }
        }
        let diagonals = self
            .diagonals
            .iter()
            .filter(|&&d| d != cut)
            .map(|&(u, v)| (relabel[u], relabel[v]));
        Dissection::new(next, diagonals)
    }

    pub fn dual_tree(&self) -> DualTree {
        let faces = self.faces();
        let mut edges = Vec::with_capacity(self.diagonals.len());
        for &d in &self.diagonals {
            let incident: Vec<usize> = faces
                .iter()
                .enumerate()
                .filter(|(_, f)| f.has_side(d.0, d.1))
                .map(|(i, _)| i)
                .collect();
            debug_assert_eq!(incident.len(), 2, "diagonal {d:?} must bound two faces");
            edges.push((incident[0], incident[1]));
        }
        edges.sort_unstable();
        DualTree { faces, edges }
    }
}

fn split_faces(vertices: Vec<usize>, diagonals: &[(usize, usize)], out: &mut Vec<Vec<usize>>) {
    let len = vertices.len();
    let position = |x: usize| vertices.iter().position(|&v| v == x);
    for &(u, v) in diagonals {
        let (Some(i), Some(j)) = (position(u), position(v)) else {
            continue;
        };
        let (i, j) = (i.min(j), i.max(j));
        if j - i == 1 || j - i == len - 1 {
            continue;
        }
        let inner = vertices[i..=j].to_vec();
        let outer: Vec<usize> = vertices[j..].iter().chain(&vertices[..=i]).copied().collect();
        split_faces(inner, diagonals, out);
        split_faces(outer, diagonals, out);
        return;
    }
    out.push(vertices);
}

/// One subpolygon of a dissection, vertices in ascending cyclic order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Face(Vec<usize>);

impl Face {
    pub fn new(mut vertices: Vec<usize>) -> Self {
        vertices.sort_unstable();
        Face(vertices)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// Consecutive vertex pairs, including the closing pair.
    pub fn sides(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let k = self.0.len();
        (0..k).map(move |i| (self.0[i], self.0[(i + 1) % k]))
    }

    pub fn has_side(&self, u: usize, v: usize) -> bool {
        self.sides().any(|(a, b)| (a == u && b == v) || (a == v && b == u))
    }
}

/// Faces as nodes, shared diagonals as edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualTree {
    pub faces: Vec<Face>,
    pub edges: Vec<(usize, usize)>,
}

impl DualTree {
    pub fn degree(&self, node: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == node || b == node).count()
    }

    pub fn leaves(&self) -> Vec<&Face> {
        if self.faces.len() < 2 {
            return Vec::new();
        }
        (0..self.faces.len())
            .filter(|&i| self.degree(i) == 1)
            .map(|i| &self.faces[i])
            .collect()
    }

    pub fn is_tree(&self) -> bool {
        if self.edges.len() + 1 != self.faces.len() {
            return false;
        }
        let mut seen = vec![false; self.faces.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(x) = stack.pop() {
            for &(a, b) in &self.edges {
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
        seen.into_iter().all(|s| s)
    }
}

/// Vertex count of a p-angulation with `s` faces: `(p − 2)s + 2`.
pub fn polygon_size(s: usize, p: usize) -> usize {
    (p - 2) * s + 2
}

/// Number of p-angulations with `s` faces: `(1/s)·C((p−1)s, s−1)`.
pub fn fuss_catalan(s: usize, p: usize) -> u128 {
    assert!(s >= 1 && p >= 3);
    let top = ((p - 1) * s) as u128;
    let k = (s - 1) as u128;
    let mut binom: u128 = 1;
    for i in 0..k {
        binom = binom * (top - i) / (i + 1);
    }
    binom / s as u128
}

/// Every p-angulation of the labeled `((p−2)s+2)`-gon, each exactly once,
/// sorted by diagonal list.
pub fn enumerate_p_angulations(s: usize, p: usize) -> Result<Vec<Dissection>, DissectionError> {
    if p < 3 {
        return Err(DissectionError::InvalidP(p));
    }
    if s == 0 {
        return Err(DissectionError::EmptyFaceCount);
    }
    let n = polygon_size(s, p);
    let vertices: Vec<usize> = (0..n).collect();
    let mut out: Vec<Dissection> = sub_angulations(&vertices, p)
        .into_iter()
        .map(|mut diagonals| {
            for d in &mut diagonals {
                *d = (d.0.min(d.1), d.0.max(d.1));
            }
            diagonals.sort_unstable();
            Dissection { n, diagonals }
        })
        .collect();
    out.sort();
    Ok(out)
}

/// All p-angulations of the polygon spanned by `vertices` (in cyclic order),
/// rooted at the side `{first, last}`. The face on that side picks `p − 2`
/// further vertices; every gap between consecutive picks is either a single
/// side or a smaller p-angulable polygon closed by a new diagonal.
fn sub_angulations(vertices: &[usize], p: usize) -> Vec<Vec<(usize, usize)>> {
    let m = vertices.len();
    if m == 2 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    let mut picks = vec![0];
    choose_face(vertices, p, &mut picks, &mut out);
    out
}

fn gap_ok(gap: usize, p: usize) -> bool {
    gap == 1 || (gap > 1 && (gap - 1).is_multiple_of(p - 2))
}

fn choose_face(vertices: &[usize], p: usize, picks: &mut Vec<usize>, out: &mut Vec<Vec<(usize, usize)>>) {
    let m = vertices.len();
    let last = *picks.last().unwrap();
    if picks.len() == p - 1 {
        if !gap_ok(m - 1 - last, p) {
            return;
        }
        picks.push(m - 1);
        let mut partial: Vec<Vec<(usize, usize)>> = vec![Vec::new()];
        for w in picks.windows(2) {
            let (i, j) = (w[0], w[1]);
            if j - i == 1 {
                continue;
            }
            let diagonal = (vertices[i], vertices[j]);
            let inner = sub_angulations(&vertices[i..=j], p);
            let mut next = Vec::with_capacity(partial.len() * inner.len());
            for base in &partial {
                for sub in &inner {
                    let mut combined = base.clone();
                    combined.push(diagonal);
                    combined.extend_from_slice(sub);
                    next.push(combined);
                }
            }
            partial = next;
        }
        out.extend(partial);
        picks.pop();
        return;
    }
    let remaining = p - 1 - picks.len();
    for next in last + 1..m - remaining {
        if !gap_ok(next - last, p) {
            continue;
        }
        picks.push(next);
        choose_face(vertices, p, picks, out);
        picks.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn d0() -> Dissection {
        Dissection::new(10, [(1, 4), (4, 9), (5, 8)]).unwrap()
    }

    fn face(v: &[usize]) -> Face {
        Face::new(v.to_vec())
    }

    #[test]
    fn construction_errors_are_distinct() {
        assert!(Dissection::new(10, [(1, 4), (4, 9), (5, 8)]).is_ok());
        assert_eq!(
            Dissection::new(10, [(1, 4), (2, 6)]),
            Err(DissectionError::Crossing((1, 4), (2, 6)))
        );
        assert_eq!(Dissection::new(4, []).unwrap().faces().len(), 1);
        assert_eq!(
            Dissection::new(5, [(0, 7)]),
            Err(DissectionError::VertexOutOfRange { vertex: 7, n: 5 })
        );
        assert_eq!(Dissection::new(5, [(2, 2)]), Err(DissectionError::Loop(2)));
        assert_eq!(Dissection::new(5, [(4, 0)]), Err(DissectionError::BoundaryEdge(0, 4)));
        assert_eq!(Dissection::new(2, []), Err(DissectionError::TooFewVertices(2)));
    }

    #[test]
    fn diagonals_normalized() {
        let d = Dissection::new(10, [(9, 4), (8, 5), (4, 1), (1, 4)]).unwrap();
        assert_eq!(d.diagonals(), &[(1, 4), (4, 9), (5, 8)]);
        assert_eq!(d, d0());
    }

    #[test]
    fn faces_of_d0() {
        assert_eq!(
            d0().faces(),
            vec![
                face(&[0, 1, 4, 9]),
                face(&[1, 2, 3, 4]),
                face(&[4, 5, 8, 9]),
                face(&[5, 6, 7, 8])
            ]
        );
        assert_eq!(Dissection::empty(4).unwrap().faces(), vec![face(&[0, 1, 2, 3])]);
        assert_eq!(
            Dissection::new(5, [(0, 2)]).unwrap().faces(),
            vec![face(&[0, 1, 2]), face(&[0, 2, 3, 4])]
        );
    }

    #[test]
    fn p_angulation_predicate() {
        assert!(d0().is_p_angulation(4));
        assert!(!d0().is_p_angulation(3));
        let hex = Dissection::new(6, [(0, 2), (2, 4), (4, 0)]).unwrap();
        assert!(hex.is_p_angulation(3));
    }

    #[test]
    fn quiddity_of_d0() {
        assert_eq!(d0().quiddity_counts(), vec![1, 2, 1, 1, 3, 2, 1, 1, 2, 2]);
        assert_eq!(Dissection::empty(4).unwrap().quiddity_counts(), vec![1, 1, 1, 1]);
    }

    #[test]
    fn ears_examples() {
        assert_eq!(d0().ears(), vec![face(&[1, 2, 3, 4]), face(&[5, 6, 7, 8])]);
        let five = Dissection::new(5, [(0, 2)]).unwrap();
        assert_eq!(five.ears(), five.faces());
        assert!(Dissection::empty(4).unwrap().ears().is_empty());
    }

    #[test]
    fn cut_ear_examples() {
        let cut = d0().cut_ear(&face(&[1, 2, 3, 4])).unwrap();
        assert_eq!(cut, Dissection::new(8, [(2, 7), (3, 6)]).unwrap());

        let five = Dissection::new(5, [(0, 2)]).unwrap();
        assert_eq!(five.cut_ear(&face(&[0, 1, 2])).unwrap(), Dissection::empty(4).unwrap());

        assert_eq!(
            d0().cut_ear(&face(&[0, 1, 4, 9])),
            Err(DissectionError::NotAnEar(vec![0, 1, 4, 9]))
        );
    }

    #[test]
    fn cutting_both_ears_commutes() {
        // relabeling after each cut is order-preserving, so the second ear
        // is the image of the original ear under the first relabeling
        let d = d0();
        let a = d.cut_ear(&face(&[1, 2, 3, 4])).unwrap();
        let a_then_b = a.cut_ear(&face(&[3, 4, 5, 6])).unwrap();
        let b = d.cut_ear(&face(&[5, 6, 7, 8])).unwrap();
        let b_then_a = b.cut_ear(&face(&[1, 2, 3, 4])).unwrap();
        assert_eq!(a_then_b, b_then_a);
        assert_eq!(a_then_b, Dissection::new(6, [(2, 5)]).unwrap());
    }

    #[test]
    fn dual_tree_examples() {
        let t = d0().dual_tree();
        assert!(t.is_tree());
        // faces: 0=[0,1,4,9] 1=[1,2,3,4] 2=[4,5,8,9] 3=[5,6,7,8]
        assert_eq!(t.edges, vec![(0, 1), (0, 2), (2, 3)]);
        assert_eq!(t.leaves(), vec![&face(&[1, 2, 3, 4]), &face(&[5, 6, 7, 8])]);

        let single = Dissection::empty(4).unwrap().dual_tree();
        assert_eq!(single.faces.len(), 1);
        assert!(single.edges.is_empty());

        let star = Dissection::new(6, [(0, 2), (2, 4), (0, 4)]).unwrap().dual_tree();
        let center = star.faces.iter().position(|f| f == &face(&[0, 2, 4])).unwrap();
        assert_eq!(star.degree(center), 3);
        assert_eq!(star.leaves().len(), 3);
    }

    #[test]
    fn small_enumerations() {
        let six = enumerate_p_angulations(2, 4).unwrap();
        let expected: Vec<_> = [(0, 3), (1, 4), (2, 5)]
            .into_iter()
            .map(|d| Dissection::new(6, [d]).unwrap())
            .collect();
        assert_eq!(six, expected);
        assert_eq!(
            enumerate_p_angulations(1, 6).unwrap(),
            vec![Dissection::empty(6).unwrap()]
        );
        assert_eq!(enumerate_p_angulations(3, 4).unwrap().len(), 12);
        assert_eq!(enumerate_p_angulations(0, 4), Err(DissectionError::EmptyFaceCount));
        assert_eq!(enumerate_p_angulations(2, 2), Err(DissectionError::InvalidP(2)));
    }

    #[test]
    fn fuss_catalan_values() {
        let p4: Vec<_> = (1..=5).map(|s| fuss_catalan(s, 4)).collect();
        assert_eq!(p4, vec![1, 3, 12, 55, 273]);
        let p6: Vec<_> = (1..=3).map(|s| fuss_catalan(s, 6)).collect();
        assert_eq!(p6, vec![1, 5, 35]);
        let catalan: Vec<_> = (1..=7).map(|s| fuss_catalan(s, 3)).collect();
        assert_eq!(catalan, vec![1, 2, 5, 14, 42, 132, 429]);
    }

    #[test]
    fn enumeration_invariants() {
        for (p, s_max) in [(3, 6), (4, 4), (6, 3)] {
            for s in 1..=s_max {
                let all = enumerate_p_angulations(s, p).unwrap();
                assert_eq!(all.len() as u128, fuss_catalan(s, p));
                for d in &all {
                    let faces = d.faces();
                    assert_eq!(faces.len(), s);
                    assert!(faces.iter().all(|f| f.len() == p));
                    assert_eq!(d.n(), polygon_size(s, p));
                    assert_eq!(d.quiddity_counts().iter().sum::<usize>(), p * s);
                    let tree = d.dual_tree();
                    assert!(tree.is_tree());
                    let leaves: Vec<Face> = tree.leaves().into_iter().cloned().collect();
                    assert_eq!(leaves, d.ears());
                    for ear in d.ears() {
                        let smaller = d.cut_ear(&ear).unwrap();
                        assert!(smaller.is_p_angulation(p));
                        assert_eq!(smaller.faces().len(), s - 1);
                    }
                }
            }
        }
    }

    #[test]
    fn json_form() {
        let d: Dissection = serde_json::from_str(r#"{"n": 10, "diagonals": [[4,1],[9,4],[5,8]]}"#).unwrap();
        assert_eq!(d, d0());
        assert_eq!(
            serde_json::to_string(&d).unwrap(),
            r#"{"n":10,"diagonals":[[1,4],[4,9],[5,8]]}"#
        );
        assert!(serde_json::from_str::<Dissection>(r#"{"n": 10, "diagonals": [[1,4],[2,6]]}"#).is_err());
    }
}
