//! Brute-force reference enumeration, independent of the library's
//! recursive generator and of its face-splitting routine.

#![allow(dead_code)]

use std::collections::BTreeSet;

fn crosses((a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

/// All diagonals `{a, b}` (a < b) of the n-gon.
pub fn all_diagonals(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 2..n {
            if !(a == 0 && b == n - 1) {
                out.push((a, b));
            }
        }
    }
    out
}

/// Face sizes by walking half-edges: the face left of `u → v` continues
/// to the neighbor `w` of `v` with the largest offset `(w − v) mod n`
/// below that of `u`.
pub fn face_sizes(n: usize, diagonals: &[(usize, usize)]) -> Vec<usize> {
    let mut neighbors: Vec<Vec<usize>> = (0..n).map(|v| vec![(v + 1) % n, (v + n - 1) % n]).collect();
    for &(a, b) in diagonals {
        neighbors[a].push(b);
        neighbors[b].push(a);
    }
    let offset = |from: usize, to: usize| (to + n - from) % n;
    // clockwise boundary half-edges belong to the outer face
    let mut used: BTreeSet<(usize, usize)> = (0..n).map(|v| ((v + 1) % n, v)).collect();
    let mut sizes = Vec::new();
    for start in 0..n {
        for &next in &neighbors[start] {
            if used.contains(&(start, next)) {
                continue;
            }
            let (mut u, mut v) = (start, next);
            let mut size = 0;
            loop {
                used.insert((u, v));
                size += 1;
                let back = offset(v, u);
                let w = *neighbors[v]
                    .iter()
                    .filter(|&&w| offset(v, w) < back)
                    .max_by_key(|&&w| offset(v, w))
                    .expect("convex walk always continues");
                u = v;
                v = w;
                if (u, v) == (start, next) {
                    break;
                }
            }
            sizes.push(size);
        }
    }
    sizes
}

/// Every noncrossing subset of `k` diagonals of the n-gon.
pub fn noncrossing_subsets(n: usize, k: usize) -> Vec<Vec<(usize, usize)>> {
    let diagonals = all_diagonals(n);
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    fn rec(
        diagonals: &[(usize, usize)],
        from: usize,
        k: usize,
        chosen: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if chosen.len() == k {
            out.push(chosen.clone());
            return;
        }
        for i in from..diagonals.len() {
            let d = diagonals[i];
            if chosen.iter().all(|&c| !crosses(c, d)) {
                chosen.push(d);
                rec(diagonals, i + 1, k, chosen, out);
                chosen.pop();
            }
        }
    }
    rec(&diagonals, 0, k, &mut chosen, &mut out);
    out
}

/// All p-angulations with `s` faces, as sorted diagonal lists in
/// lexicographic order.
pub fn brute_force_p_angulations(s: usize, p: usize) -> Vec<Vec<(usize, usize)>> {
    let n = (p - 2) * s + 2;
    let mut out: Vec<_> = noncrossing_subsets(n, s - 1)
        .into_iter()
        .filter(|ds| {
            let sizes = face_sizes(n, ds);
            sizes.len() == s && sizes.iter().all(|&x| x == p)
        })
        .collect();
    out.sort();
    out
}
