//! Connected simple graphs up to isomorphism on at most 9 vertices, and a shape-based
//! Euclidean subgraph search used as an oracle for classification.

use std::collections::HashSet;

pub type Adj = Vec<u16>;

fn bit(v: usize) -> u16 {
    1 << v
}

/// Upper-triangle code of the graph under the vertex order `p`.
fn code(adj: &Adj, p: &[usize]) -> u64 {
    let n = p.len();
    let mut c = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            c = c << 1 | ((adj[p[i]] >> p[j]) & 1) as u64;
        }
    }
    c
}

/// Splits cells by neighbor counts into every cell until stable; cell order stays canonical.
fn refine(adj: &Adj, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let masks: Vec<u16> = cells.iter().map(|c| c.iter().fold(0, |m, &v| m | bit(v))).collect();
        let mut next = Vec::with_capacity(cells.len());
        for c in &cells {
            if c.len() == 1 {
                next.push(c.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = c
                .iter()
                .map(|&v| (masks.iter().map(|m| (adj[v] & m).count_ones()).collect(), v))
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|k| k.1).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn twins(adj: &Adj, u: usize, v: usize) -> bool {
    adj[u] & !bit(v) == adj[v] & !bit(u)
}

fn search(adj: &Adj, cells: Vec<Vec<usize>>, best: &mut u64) {
    let Some(k) = cells.iter().position(|c| c.len() > 1) else {
        let p: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        *best = (*best).max(code(adj, &p));
        return;
    };
    let cell = &cells[k];
    let mut tried: Vec<usize> = Vec::new();
    for &v in cell {
        // swapping twin vertices is an automorphism, so one representative suffices
        if tried.iter().any(|&w| twins(adj, v, w)) {
            continue;
        }
        tried.push(v);
        let mut next = cells[..k].to_vec();
        next.push(vec![v]);
        next.push(cell.iter().copied().filter(|&w| w != v).collect());
        next.extend(cells[k + 1..].iter().cloned());
        search(adj, refine(adj, next), best);
    }
}

pub fn canonical_code(adj: &Adj) -> u64 {
    let n = adj.len();
    let mut best = 0;
    search(adj, refine(adj, vec![(0..n).collect()]), &mut best);
    best | (n as u64) << 40
}

/// Connected graphs by vertex count, index n−1 holding the graphs on n vertices. Every
/// connected graph has a vertex whose removal keeps it connected, so each level grows
/// from the previous one by a vertex with a nonempty neighborhood.
pub fn connected_graphs(max_n: usize) -> Vec<Vec<Adj>> {
    let mut levels: Vec<Vec<Adj>> = vec![vec![vec![0]]];
    for n in 2..=max_n {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for g in &levels[n - 2] {
            for s in 1u16..(1 << (n - 1)) {
                let mut h = g.clone();
                for (v, row) in h.iter_mut().enumerate() {
                    if s >> v & 1 == 1 {
                        *row |= bit(n - 1);
                    }
                }
                h.push(s);
                if seen.insert(canonical_code(&h)) {
                    out.push(h);
                }
            }
        }
        levels.push(out);
    }
    levels
}

fn induced(adj: &Adj, s: u16) -> Vec<u16> {
    (0..adj.len()).filter(|&v| s >> v & 1 == 1).map(|v| adj[v] & s).collect()
}

fn is_connected_set(adj: &Adj, s: u16) -> bool {
    if s == 0 {
        return false;
    }
    let mut seen = s & s.wrapping_neg();
    loop {
        let mut grow = seen;
        for v in 0..adj.len() {
            if seen >> v & 1 == 1 {
                grow |= adj[v] & s;
            }
        }
        if grow == seen {
            return seen == s;
        }
        seen = grow;
    }
}

/// Arm lengths (vertices beyond the center) of a tree with a single branch vertex.
fn star_arms(rows: &[u16], center: usize) -> Vec<usize> {
    let mut arms = Vec::new();
    for start in 0..rows.len() {
        if rows[center] >> start & 1 == 0 {
            continue;
        }
        let (mut prev, mut cur, mut len) = (center, start, 1);
        loop {
            let next: Vec<usize> =
                (0..rows.len()).filter(|&w| rows[cur] >> w & 1 == 1 && w != prev).collect();
            match next.as_slice() {
                [w] => {
                    prev = cur;
                    cur = *w;
                    len += 1;
                }
                _ => break,
            }
        }
        arms.push(len);
    }
    arms.sort();
    arms
}

/// Whether a connected simple graph (given by its rows on its own vertices, bit i of a
/// row meaning adjacency with vertex i of the list) is one of Ã_n, D̃_n, Ẽ6, Ẽ7, Ẽ8.
pub fn is_euclidean_shape(vertex_bits: u16, adj: &Adj) -> bool {
    let verts: Vec<usize> = (0..adj.len()).filter(|&v| vertex_bits >> v & 1 == 1).collect();
    let rows: Vec<u16> = induced(adj, vertex_bits)
        .iter()
        .map(|&r| verts.iter().enumerate().fold(0u16, |m, (i, &v)| if r >> v & 1 == 1 { m | bit(i) } else { m }))
        .collect();
    let k = rows.len();
    let deg: Vec<u32> = rows.iter().map(|r| r.count_ones()).collect();
    let edges: u32 = deg.iter().sum::<u32>() / 2;
    if edges as usize == k {
        return k >= 3 && deg.iter().all(|&d| d == 2);
    }
    if edges as usize != k - 1 {
        return false;
    }
    let branch: Vec<usize> = (0..k).filter(|&v| deg[v] >= 3).collect();
    if deg.iter().any(|&d| d > 4) {
        return false;
    }
    match branch.as_slice() {
        [c] if deg[*c] == 4 => k == 5,
        [c] => matches!(star_arms(&rows, *c).as_slice(), [2, 2, 2] | [1, 3, 3] | [1, 2, 5]),
        [a, b] => {
            // D̃_n: two degree-3 vertices each carrying two leaves
            deg[*a] == 3
                && deg[*b] == 3
                && [*a, *b].iter().all(|&c| (0..k).filter(|&w| rows[c] >> w & 1 == 1 && deg[w] == 1).count() == 2)
        }
        _ => false,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleClass {
    Dynkin,
    Euclidean,
    Other,
}

/// Dynkin iff no connected induced subgraph is Euclidean; Euclidean iff the whole graph is.
pub fn oracle_class(adj: &Adj) -> OracleClass {
    let n = adj.len();
    let full = ((1u32 << n) - 1) as u16;
    if is_euclidean_shape(full, adj) {
        return OracleClass::Euclidean;
    }
    let mut subsets: Vec<u16> = (1..full).collect();
    subsets.sort_by_key(|s| s.count_ones());
    for s in subsets {
        if s.count_ones() >= 3 && is_connected_set(adj, s) && is_euclidean_shape(s, adj) {
            return OracleClass::Other;
        }
    }
    OracleClass::Dynkin
}

/// Whether the vertex set is a connected induced Euclidean subgraph.
pub fn is_euclidean_witness(adj: &Adj, vs: &[usize]) -> bool {
    let s = vs.iter().fold(0u16, |m, &v| m | bit(v));
    is_connected_set(adj, s) && is_euclidean_shape(s, adj)
}
