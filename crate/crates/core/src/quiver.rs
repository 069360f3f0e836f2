//! Quivers, Dynkin/Euclidean classification, arms, Euler form and Coxeter matrix.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{rat, Matrix};

/// Integer vector indexed by the vertices of a quiver.
pub type DimVector = Vec<i64>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub id: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    labels: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(labels: Vec<String>, arrows: Vec<Arrow>) -> Result<Quiver> {
        let mut seen = BTreeSet::new();
        for l in &labels {
            if l.is_empty() || l.chars().any(char::is_whitespace) {
                return Err(Error::InvalidQuiver(format!("bad vertex label '{l}'")));
            }
            if !seen.insert(l.as_str()) {
                return Err(Error::InvalidQuiver(format!("duplicate vertex label '{l}'")));
            }
        }
        let mut ids = BTreeSet::new();
        for a in &arrows {
            if a.source >= labels.len() || a.target >= labels.len() {
                return Err(Error::InvalidQuiver(format!("arrow '{}' has a missing endpoint", a.id)));
            }
            if a.id.is_empty() || a.id.chars().any(char::is_whitespace) {
                return Err(Error::InvalidQuiver(format!("bad arrow id '{}'", a.id)));
            }
            if !ids.insert(a.id.as_str()) {
                return Err(Error::InvalidQuiver(format!("duplicate arrow id '{}'", a.id)));
            }
        }
        Ok(Quiver { labels, arrows })
    }

    /// Builds a quiver from labels and (id, source label, target label) triples.
    pub fn from_labels(labels: &[&str], arrows: &[(&str, &str, &str)]) -> Result<Quiver> {
        let labels: Vec<String> = labels.iter().map(|s| s.to_string()).collect();
        let find = |l: &str| {
            labels
                .iter()
                .position(|x| x == l)
                .ok_or_else(|| Error::InvalidQuiver(format!("unknown vertex '{l}'")))
        };
        let mut arr = Vec::new();
        for (id, s, t) in arrows {
            arr.push(Arrow { id: id.to_string(), source: find(s)?, target: find(t)? });
        }
        Quiver::new(labels, arr)
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn vertex(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn vertex_or_err(&self, label: &str) -> Result<usize> {
        self.vertex(label).ok_or_else(|| Error::InvalidQuiver(format!("no vertex '{label}'")))
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, a: usize) -> &Arrow {
        &self.arrows[a]
    }

    pub fn arrow_index(&self, id: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.id == id)
    }

    pub fn out_arrows(&self, v: usize) -> Vec<usize> {
        (0..self.arrows.len()).filter(|&a| self.arrows[a].source == v).collect()
    }

    pub fn in_arrows(&self, v: usize) -> Vec<usize> {
        (0..self.arrows.len()).filter(|&a| self.arrows[a].target == v).collect()
    }

    /// Distinct neighbors in the underlying graph (loops excluded).
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut s = BTreeSet::new();
        for a in &self.arrows {
            if a.source == v && a.target != v {
                s.insert(a.target);
            }
            if a.target == v && a.source != v {
                s.insert(a.source);
            }
        }
        s.into_iter().collect()
    }

    /// Number of edge ends at v (a loop counts twice).
    pub fn degree(&self, v: usize) -> usize {
        self.arrows
            .iter()
            .map(|a| (a.source == v) as usize + (a.target == v) as usize)
            .sum()
    }

    pub fn is_sink(&self, v: usize) -> bool {
        self.arrows.iter().all(|a| a.source != v)
    }

    pub fn is_source(&self, v: usize) -> bool {
        self.arrows.iter().all(|a| a.target != v)
    }

    pub fn has_loops(&self) -> bool {
        self.arrows.iter().any(|a| a.source == a.target)
    }

    /// Vertices in an order where every arrow goes from an earlier to a later vertex.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let n = self.vertex_count();
        let mut indeg = vec![0usize; n];
        for a in &self.arrows {
            indeg[a.target] += 1;
        }
        let mut queue: VecDeque<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for a in &self.arrows {
                if a.source == v {
                    indeg[a.target] -= 1;
                    if indeg[a.target] == 0 {
                        queue.push_back(a.target);
                    }
                }
            }
        }
        (order.len() == n).then_some(order)
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }

    /// Vertices reachable from v along arrows (including v).
    pub fn reachable_from(&self, v: usize) -> Vec<bool> {
        let mut seen = vec![false; self.vertex_count()];
        let mut stack = vec![v];
        seen[v] = true;
        while let Some(u) = stack.pop() {
            for a in &self.arrows {
                if a.source == u && !seen[a.target] {
                    seen[a.target] = true;
                    stack.push(a.target);
                }
            }
        }
        seen
    }

    /// Vertices from which v is reachable (including v).
    pub fn reaching(&self, v: usize) -> Vec<bool> {
        self.opposite().reachable_from(v)
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut i = 0;
            while i < members.len() {
                let u = members[i];
                for w in self.neighbors(u) {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                    }
                }
                i += 1;
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() > 0 && self.components().len() == 1
    }

    /// True when the underlying graph is a forest without multiple edges.
    pub fn is_forest(&self) -> bool {
        if self.has_loops() {
            return false;
        }
        let mut edges = BTreeSet::new();
        for a in &self.arrows {
            if !edges.insert((a.source.min(a.target), a.source.max(a.target))) {
                return false;
            }
        }
        self.arrows.len() + self.components().len() == self.vertex_count()
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.is_forest()
    }

    /// Full subquiver on the given vertices (kept in the given order) and, for each new
    /// arrow, the index of the arrow it came from.
    pub fn full_subquiver(&self, vertices: &[usize]) -> (Quiver, Vec<usize>) {
        let mut pos = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let labels = vertices.iter().map(|&v| self.labels[v].clone()).collect();
        let mut arrows = Vec::new();
        let mut origin = Vec::new();
        for (k, a) in self.arrows.iter().enumerate() {
            if pos[a.source] != usize::MAX && pos[a.target] != usize::MAX {
                arrows.push(Arrow { id: a.id.clone(), source: pos[a.source], target: pos[a.target] });
                origin.push(k);
            }
        }
        (Quiver { labels, arrows }, origin)
    }

    pub fn without_vertices(&self, removed: &[usize]) -> (Quiver, Vec<usize>) {
        let keep: Vec<usize> = (0..self.vertex_count()).filter(|v| !removed.contains(v)).collect();
        let (q, _) = self.full_subquiver(&keep);
        (q, keep)
    }

    pub fn opposite(&self) -> Quiver {
        let arrows = self
            .arrows
            .iter()
            .map(|a| Arrow { id: a.id.clone(), source: a.target, target: a.source })
            .collect();
        Quiver { labels: self.labels.clone(), arrows }
    }

    /// Reverses every arrow incident to v.
    pub fn reflected_at(&self, v: usize) -> Quiver {
        let arrows = self
            .arrows
            .iter()
            .map(|a| {
                if a.source == v || a.target == v {
                    Arrow { id: a.id.clone(), source: a.target, target: a.source }
                } else {
                    a.clone()
                }
            })
            .collect();
        Quiver { labels: self.labels.clone(), arrows }
    }

    /// Reverses the arrows whose flag is set.
    pub fn with_reversed(&self, flags: &[bool]) -> Quiver {
        assert_eq!(flags.len(), self.arrows.len());
        let arrows = self
            .arrows
            .iter()
            .zip(flags)
            .map(|(a, &f)| {
                if f {
                    Arrow { id: a.id.clone(), source: a.target, target: a.source }
                } else {
                    a.clone()
                }
            })
            .collect();
        Quiver { labels: self.labels.clone(), arrows }
    }

    /// For a forest: orients every arrow toward `center` within its component.
    pub fn oriented_toward(&self, center: usize) -> Quiver {
        let dist = self.distances(center);
        let flags: Vec<bool> = self
            .arrows
            .iter()
            .map(|a| {
                let (ds, dt) = (dist[a.source], dist[a.target]);
                ds != usize::MAX && dt != usize::MAX && dt > ds
            })
            .collect();
        self.with_reversed(&flags)
    }

    /// Graph distances from v in the underlying graph (usize::MAX if unreachable).
    pub fn distances(&self, v: usize) -> Vec<usize> {
        let mut d = vec![usize::MAX; self.vertex_count()];
        d[v] = 0;
        let mut q = VecDeque::from([v]);
        while let Some(u) = q.pop_front() {
            for w in self.neighbors(u) {
                if d[w] == usize::MAX {
                    d[w] = d[u] + 1;
                    q.push_back(w);
                }
            }
        }
        d
    }

    /// Adds a vertex with the given label and arrows to or from existing vertices.
    pub fn with_vertex(&self, label: &str, edges: &[(&str, usize, bool)]) -> Result<Quiver> {
        let mut labels = self.labels.clone();
        labels.push(label.to_string());
        let z = labels.len() - 1;
        let mut arrows = self.arrows.clone();
        for &(id, v, outgoing) in edges {
            let (s, t) = if outgoing { (z, v) } else { (v, z) };
            arrows.push(Arrow { id: id.to_string(), source: s, target: t });
        }
        Quiver::new(labels, arrows)
    }

    /// Label-level relabeling helper used by canonical constructors.
    pub fn relabeled(&self, labels: Vec<String>) -> Result<Quiver> {
        assert_eq!(labels.len(), self.vertex_count());
        Quiver::new(labels, self.arrows.clone())
    }

    pub fn all_orientations(&self) -> Vec<Quiver> {
        let m = self.arrows.len();
        assert!(m < 24, "too many arrows to enumerate orientations");
        (0..1u32 << m)
            .map(|mask| {
                let flags: Vec<bool> = (0..m).map(|i| mask >> i & 1 == 1).collect();
                self.with_reversed(&flags)
            })
            .collect()
    }
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::format::render_quiver(self))
    }
}

// ---------------------------------------------------------------------------
// canonical quivers

fn string_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

/// A_n: vertices 1..n, arrows i+1 → i.
pub fn type_a(n: usize) -> Quiver {
    assert!(n >= 1);
    let arrows = (1..n)
        .map(|i| Arrow { id: format!("a{i}"), source: i, target: i - 1 })
        .collect();
    Quiver { labels: string_labels(n), arrows }
}

/// The quiver Q(n) of type D_n: π₁: 3 → 1, π₂: 3 → 2 and i+1 → i for 3 ≤ i < n.
pub fn type_d(n: usize) -> Quiver {
    assert!(n >= 3);
    let mut arrows = vec![
        Arrow { id: "p1".into(), source: 2, target: 0 },
        Arrow { id: "p2".into(), source: 2, target: 1 },
    ];
    for i in 3..n {
        arrows.push(Arrow { id: format!("g{i}"), source: i, target: i - 1 });
    }
    Quiver { labels: string_labels(n), arrows }
}

/// E_m: bottom row 1..m−1, vertex m above the branch vertex 3; arrows i+1 → i and m → 3.
pub fn type_e(m: usize) -> Quiver {
    assert!((6..=8).contains(&m));
    let mut arrows: Vec<Arrow> = (1..m - 1)
        .map(|i| Arrow { id: format!("a{i}"), source: i, target: i - 1 })
        .collect();
    arrows.push(Arrow { id: "t".into(), source: m - 1, target: 2 });
    Quiver { labels: string_labels(m), arrows }
}

/// The cyclic quiver Ã_n on n+1 vertices with arrows i → i+1 and n+1 → 1.
pub fn cyclic(n: usize) -> Quiver {
    assert!(n >= 1);
    let k = n + 1;
    let arrows = (0..k)
        .map(|i| Arrow { id: format!("c{}", i + 1), source: i, target: (i + 1) % k })
        .collect();
    Quiver { labels: string_labels(k), arrows }
}

/// The four-subspace quiver: vertices 0 (center) and 1..4, arrows i → 0.
pub fn four_subspace() -> Quiver {
    let labels = (0..5).map(|i| i.to_string()).collect();
    let arrows = (1..5).map(|i| Arrow { id: format!("s{i}"), source: i, target: 0 }).collect();
    Quiver { labels, arrows }
}

/// Standard quiver by name: "A5", "D6" (the quiver Q(6)), "E8".
pub fn standard(name: &str) -> Option<Quiver> {
    let (t, n) = name.split_at(1.min(name.len()));
    let n: usize = n.parse().ok()?;
    match t {
        "A" if n >= 1 => Some(type_a(n)),
        "D" if n >= 4 => Some(type_d(n)),
        "Q" if n >= 3 => Some(type_d(n)),
        "E" if (6..=8).contains(&n) => Some(type_e(n)),
        _ => None,
    }
}

// ---------------------------------------------------------------------------
// classification

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    D,
    E,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassTag {
    Dynkin(Family, usize),
    /// Euclidean type with its index (the vertex count minus one).
    Euclidean(Family, usize),
    Other,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::D => "D",
            Family::E => "E",
        };
        write!(f, "{s}")
    }
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassTag::Dynkin(t, n) => write!(f, "Dynkin {t}{n}"),
            ClassTag::Euclidean(t, n) => write!(f, "Euclidean ~{t}{n}"),
            ClassTag::Other => write!(f, "Other"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphClass {
    pub tag: ClassTag,
    /// For `Other`: vertices of a Euclidean full subquiver.
    pub witness: Option<Vec<usize>>,
}

impl GraphClass {
    fn of(tag: ClassTag) -> Self {
        GraphClass { tag, witness: None }
    }

    pub fn is_dynkin(&self) -> bool {
        matches!(self.tag, ClassTag::Dynkin(..))
    }

    pub fn is_euclidean(&self) -> bool {
        matches!(self.tag, ClassTag::Euclidean(..))
    }
}

/// Underlying simple graph data: adjacency sets, multi-edge and loop detection.
struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    edges: usize,
}

impl Graph {
    fn of(q: &Quiver) -> Graph {
        let n = q.vertex_count();
        let adj = (0..n).map(|v| q.neighbors(v)).collect();
        Graph { n, adj, edges: q.arrow_count() }
    }

    fn path(&self, from: usize, to: usize) -> Vec<usize> {
        let mut prev = vec![usize::MAX; self.n];
        prev[from] = from;
        let mut q = VecDeque::from([from]);
        while let Some(u) = q.pop_front() {
            if u == to {
                break;
            }
            for &w in &self.adj[u] {
                if prev[w] == usize::MAX {
                    prev[w] = u;
                    q.push_back(w);
                }
            }
        }
        let mut p = vec![to];
        let mut c = to;
        while c != from {
            c = prev[c];
            p.push(c);
        }
        p.reverse();
        p
    }

    /// Vertex set of a shortest cycle (simple graph assumed).
    fn shortest_cycle(&self) -> Option<Vec<usize>> {
        let mut best: Option<Vec<usize>> = None;
        for s in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[s] = 0;
            let mut q = VecDeque::from([s]);
            while let Some(u) = q.pop_front() {
                for &w in &self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        q.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        if best.as_ref().is_none_or(|b| len < b.len()) {
                            let trace = |mut v: usize| {
                                let mut p = vec![v];
                                while v != s {
                                    v = parent[v];
                                    p.push(v);
                                }
                                p
                            };
                            let mut c = trace(u);
                            let mut c2 = trace(w);
                            c2.pop();
                            c.extend(c2);
                            let set: BTreeSet<usize> = c.iter().copied().collect();
                            if set.len() == len {
                                best = Some(set.into_iter().collect());
                            }
                        }
                    }
                }
            }
        }
        best
    }

    /// Arm vertices starting at the neighbor `start` of `center`, moving away.
    fn arm(&self, center: usize, start: usize) -> Vec<usize> {
        let mut arm = vec![start];
        let (mut prev, mut cur) = (center, start);
        loop {
            let next: Vec<usize> = self.adj[cur].iter().copied().filter(|&w| w != prev).collect();
            if next.len() != 1 {
                break;
            }
            prev = cur;
            cur = next[0];
            arm.push(cur);
        }
        arm
    }
}

fn with_witness(q: &Quiver, tag: ClassTag, witness: Vec<usize>) -> GraphClass {
    if witness.len() == q.vertex_count() {
        GraphClass::of(tag)
    } else {
        let mut w = witness;
        w.sort_unstable();
        GraphClass { tag: ClassTag::Other, witness: Some(w) }
    }
}

/// Classifies a connected quiver by its underlying graph.
pub fn classify(q: &Quiver) -> Result<GraphClass> {
    let n = q.vertex_count();
    if n == 0 {
        return Err(Error::EmptyQuiver);
    }
    if !q.is_connected() {
        return Err(Error::InvalidQuiver("classification needs a connected quiver".into()));
    }
    if let Some(a) = q.arrows().iter().find(|a| a.source == a.target) {
        let tag = ClassTag::Euclidean(Family::A, 0);
        if n == 1 && q.arrow_count() == 1 {
            return Ok(GraphClass::of(tag));
        }
        return Ok(GraphClass { tag: ClassTag::Other, witness: Some(vec![a.source]) });
    }
    let mut seen = BTreeSet::new();
    for a in q.arrows() {
        let e = (a.source.min(a.target), a.source.max(a.target));
        if !seen.insert(e) {
            let tag = ClassTag::Euclidean(Family::A, 1);
            if n == 2 && q.arrow_count() == 2 {
                return Ok(GraphClass::of(tag));
            }
            return Ok(GraphClass { tag: ClassTag::Other, witness: Some(vec![e.0, e.1]) });
        }
    }
    let g = Graph::of(q);
    if g.edges >= n {
        let c = g.shortest_cycle().expect("a graph with a cycle");
        let tag = ClassTag::Euclidean(Family::A, c.len() - 1);
        return Ok(with_witness(q, tag, c));
    }
    // a tree from here on
    if let Some(v) = (0..n).find(|&v| g.adj[v].len() >= 4) {
        let mut w = vec![v];
        w.extend(g.adj[v].iter().take(4));
        return Ok(with_witness(q, ClassTag::Euclidean(Family::D, 4), w));
    }
    let branches: Vec<usize> = (0..n).filter(|&v| g.adj[v].len() == 3).collect();
    if branches.len() >= 2 {
        // the closest pair of branch vertices has no branch vertex in between
        let mut best: Option<Vec<usize>> = None;
        for (i, &b1) in branches.iter().enumerate() {
            for &b2 in &branches[i + 1..] {
                let p = g.path(b1, b2);
                if best.as_ref().is_none_or(|b| p.len() < b.len()) {
                    best = Some(p);
                }
            }
        }
        let p = best.unwrap();
        let (b1, b2) = (p[0], p[p.len() - 1]);
        let mut w = p.clone();
        for (b, inner) in [(b1, p[1]), (b2, p[p.len() - 2])] {
            w.extend(g.adj[b].iter().copied().filter(|&u| u != inner));
        }
        let tag = ClassTag::Euclidean(Family::D, w.len() - 1);
        return Ok(with_witness(q, tag, w));
    }
    if let Some(&c) = branches.first() {
        let mut arms: Vec<Vec<usize>> = g.adj[c].iter().map(|&s| g.arm(c, s)).collect();
        arms.sort_by_key(|a| std::cmp::Reverse(a.len()));
        let t: Vec<usize> = arms.iter().map(|a| a.len() + 1).collect();
        let take = |k: [usize; 3]| {
            let mut w = vec![c];
            for i in 0..3 {
                w.extend(arms[i].iter().take(k[i]));
            }
            w
        };
        if t[2] >= 3 {
            return Ok(with_witness(q, ClassTag::Euclidean(Family::E, 6), take([2, 2, 2])));
        }
        if t[1] >= 4 {
            return Ok(with_witness(q, ClassTag::Euclidean(Family::E, 7), take([3, 3, 1])));
        }
        if t[1] == 2 {
            return Ok(GraphClass::of(ClassTag::Dynkin(Family::D, n)));
        }
        if t[0] >= 6 {
            return Ok(with_witness(q, ClassTag::Euclidean(Family::E, 8), take([5, 2, 1])));
        }
        return Ok(GraphClass::of(ClassTag::Dynkin(Family::E, n)));
    }
    Ok(GraphClass::of(ClassTag::Dynkin(Family::A, n)))
}

/// Dynkin type (family, rank) of a connected quiver, or an error.
pub fn dynkin_type(q: &Quiver) -> Result<(Family, usize)> {
    match classify(q)?.tag {
        ClassTag::Dynkin(t, n) => Ok((t, n)),
        other => Err(Error::NotDynkin(other.to_string())),
    }
}

/// Classifies each component; fails if any component is not Dynkin.
pub fn dynkin_components(q: &Quiver) -> Result<Vec<(Family, usize, Vec<usize>)>> {
    let mut out = Vec::new();
    for comp in q.components() {
        let (sub, _) = q.full_subquiver(&comp);
        let (t, n) = dynkin_type(&sub)?;
        out.push((t, n, comp));
    }
    Ok(out)
}

pub fn is_dynkin(q: &Quiver) -> bool {
    q.vertex_count() > 0 && dynkin_components(q).is_ok()
}

// ---------------------------------------------------------------------------
// arms and stars

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arm {
    /// Vertices from the attach vertex outward; `length = vertices.len()`.
    pub vertices: Vec<usize>,
}

impl Arm {
    pub fn attach_vertex(&self) -> usize {
        self.vertices[0]
    }

    pub fn length(&self) -> usize {
        self.vertices.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarType {
    pub center: usize,
    /// Arm lengths counted including the center, weakly decreasing, each ≥ 2.
    pub arm_lengths: Vec<usize>,
    /// The arms themselves (center first), in the order of `arm_lengths`.
    pub arms: Vec<Arm>,
}

/// Maximal arms of a connected simple quiver: for every vertex x of degree ≥ 3 (or
/// any vertex of a path) and every leaf direction, the path x, …, leaf.
pub fn arms(q: &Quiver) -> Vec<Arm> {
    let g = Graph::of(q);
    let mut out = Vec::new();
    if q.arrow_count() == 0 {
        return out;
    }
    for x in 0..g.n {
        if g.adj[x].len() < 3 {
            continue;
        }
        for &s in &g.adj[x] {
            let a = g.arm(x, s);
            let last = *a.last().unwrap();
            if g.adj[last].len() == 1 {
                let mut v = vec![x];
                v.extend(a);
                out.push(Arm { vertices: v });
            }
        }
    }
    if out.is_empty() && q.is_tree() {
        // a path: its two end-to-end arms
        let leaves: Vec<usize> = (0..g.n).filter(|&v| g.adj[v].len() <= 1).collect();
        for &l in &leaves {
            let other = *leaves.iter().find(|&&u| u != l).unwrap_or(&l);
            out.push(Arm { vertices: g.path(l, other) });
        }
    }
    out
}

/// Star structure: a tree with at most one vertex of degree ≥ 3.
pub fn star_structure(q: &Quiver) -> Option<StarType> {
    if !q.is_tree() {
        return None;
    }
    let g = Graph::of(q);
    let branches: Vec<usize> = (0..g.n).filter(|&v| g.adj[v].len() >= 3).collect();
    match branches.len() {
        0 => {
            if g.n == 1 {
                return Some(StarType { center: 0, arm_lengths: vec![], arms: vec![] });
            }
            // a path; take a middle vertex as center
            let leaf = (0..g.n).find(|&v| g.adj[v].len() == 1).unwrap();
            let other = (0..g.n).rev().find(|&v| g.adj[v].len() == 1).unwrap();
            let p = g.path(leaf, other);
            let c = p[(p.len() - 1) / 2];
            Some(star_at(&g, c))
        }
        1 => Some(star_at(&g, branches[0])),
        _ => None,
    }
}

/// Star structure with a prescribed center (every vertex of a path may serve).
pub fn star_with_center(q: &Quiver, center: usize) -> Option<StarType> {
    if !q.is_tree() {
        return None;
    }
    let g = Graph::of(q);
    if (0..g.n).any(|v| v != center && g.adj[v].len() >= 3) {
        return None;
    }
    Some(star_at(&g, center))
}

fn star_at(g: &Graph, c: usize) -> StarType {
    let mut arms: Vec<Arm> = g.adj[c]
        .iter()
        .map(|&s| {
            let mut v = vec![c];
            v.extend(g.arm(c, s));
            Arm { vertices: v }
        })
        .collect();
    arms.sort_by_key(|a| std::cmp::Reverse(a.length()));
    StarType { center: c, arm_lengths: arms.iter().map(|a| a.length()).collect(), arms }
}

/// Attaches a new arm of the given length (counting `at`) at vertex `at`; `outward[i]`
/// orients the i-th new edge away from `at`.
pub fn attach_arm(q: &Quiver, at: usize, length: usize, outward: &[bool]) -> Result<Quiver> {
    if length < 2 {
        return Ok(q.clone());
    }
    if outward.len() != length - 1 {
        return Err(Error::DimensionMismatch("one orientation flag per new edge".into()));
    }
    let mut cur = q.clone();
    let mut prev = at;
    let mut k = 0;
    for &out in outward {
        let (label, id) = loop {
            k += 1;
            let label = format!("{}_{k}", q.label(at));
            let id = format!("arm_{}_{k}", q.label(at));
            if cur.vertex(&label).is_none() && cur.arrow_index(&id).is_none() {
                break (label, id);
            }
        };
        let n = cur.vertex_count();
        cur = cur.with_vertex(&label, &[(&id, prev, !out)])?;
        prev = n;
    }
    Ok(cur)
}

/// Checks whether `arm` is an arm of q in the sense used by conification: a path whose
/// vertices other than the attach vertex have no neighbors outside the path.
pub fn is_arm(q: &Quiver, arm: &Arm) -> bool {
    let v = &arm.vertices;
    if v.is_empty() {
        return false;
    }
    let set: BTreeSet<usize> = v.iter().copied().collect();
    if set.len() != v.len() {
        return false;
    }
    for (i, &u) in v.iter().enumerate() {
        let inside: Vec<usize> = q.neighbors(u).into_iter().filter(|w| set.contains(w)).collect();
        let expected = usize::from(i > 0) + usize::from(i + 1 < v.len());
        if inside.len() != expected {
            return false;
        }
        if i > 0 && q.neighbors(u).len() != inside.len() {
            return false;
        }
        if i + 1 < v.len() {
            let w = v[i + 1];
            let n = q.arrows().iter().filter(|a| {
                (a.source == u && a.target == w) || (a.source == w && a.target == u)
            });
            if n.count() != 1 {
                return false;
            }
        }
    }
    true
}

// ---------------------------------------------------------------------------
// exceptional vertices and derived quivers

/// The ⋆ vertices of a connected Dynkin quiver: both ends of A_n; for D_n the neighbor of
/// the long-arm leaf (the branch vertex for D_4); for E_m the end of the arm of length
/// 2, 3, 5 for m = 6, 7, 8.
pub fn exceptional_vertices(q: &Quiver) -> Result<Vec<usize>> {
    let (t, n) = dynkin_type(q)?;
    let g = Graph::of(q);
    match t {
        Family::A => {
            if n == 1 {
                return Ok(vec![0]);
            }
            Ok((0..n).filter(|&v| g.adj[v].len() == 1).collect())
        }
        _ => {
            let star = star_structure(q).expect("D/E quivers are stars");
            let arm = match (t, n) {
                (Family::D, 4) => return Ok(vec![star.center]),
                (Family::D, _) => &star.arms[0],
                (Family::E, 6) => &star.arms[2],
                (Family::E, 7) => &star.arms[1],
                _ => &star.arms[0],
            };
            let v = &arm.vertices;
            if t == Family::D {
                Ok(vec![v[v.len() - 2]])
            } else {
                Ok(vec![v[v.len() - 1]])
            }
        }
    }
}

/// The unique exceptional vertex of a D/E quiver.
pub fn exceptional_vertex(q: &Quiver) -> Result<usize> {
    let (t, _) = dynkin_type(q)?;
    if t == Family::A {
        return Err(Error::WrongType("type A has two exceptional vertices".into()));
    }
    Ok(exceptional_vertices(q)?[0])
}

/// Δ′ = Δ ∖ {y}, with the map from new to old vertex indices.
pub fn delta_prime(q: &Quiver) -> Result<(Quiver, Vec<usize>)> {
    let y = exceptional_vertex(q)?;
    Ok(q.without_vertices(&[y]))
}

/// Δ″ = Δ ∖ ({y} ∪ neighbors of y).
pub fn delta_double_prime(q: &Quiver) -> Result<(Quiver, Vec<usize>)> {
    let y = exceptional_vertex(q)?;
    let mut removed = q.neighbors(y);
    removed.push(y);
    Ok(q.without_vertices(&removed))
}

/// Adds a vertex z joined to the exceptional vertex (D/E), to both ends (A_n, n ≥ 2),
/// or by two parallel edges (A_1). `toward_z` orients the new edges z ← y.
pub fn euclidean_extension(q: &Quiver, toward_z: bool) -> Result<Quiver> {
    let (t, n) = dynkin_type(q)?;
    let ex = exceptional_vertices(q)?;
    let edges: Vec<(String, usize)> = if t == Family::A && n == 1 {
        vec![("z1".into(), ex[0]), ("z2".into(), ex[0])]
    } else {
        ex.iter().enumerate().map(|(i, &v)| (format!("z{}", i + 1), v)).collect()
    };
    let e: Vec<(&str, usize, bool)> =
        edges.iter().map(|(id, v)| (id.as_str(), *v, !toward_z)).collect();
    q.with_vertex("z", &e)
}

// ---------------------------------------------------------------------------
// Euler form and Coxeter transformation

/// ⟨d, e⟩ = Σ d_x e_x − Σ_α d_{s(α)} e_{t(α)}.
pub fn euler_form(q: &Quiver, d: &[i64], e: &[i64]) -> i64 {
    assert_eq!(d.len(), q.vertex_count());
    assert_eq!(e.len(), q.vertex_count());
    let mut s: i64 = d.iter().zip(e).map(|(a, b)| a * b).sum();
    for a in q.arrows() {
        s -= d[a.source] * e[a.target];
    }
    s
}

/// Matrix C with C_{ab} = ⟨e_a, e_b⟩.
pub fn euler_matrix(q: &Quiver) -> Vec<Vec<i64>> {
    let n = q.vertex_count();
    let mut c = vec![vec![0i64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 1;
    }
    for a in q.arrows() {
        c[a.source][a.target] -= 1;
    }
    c
}

/// Φ = −C⁻¹Cᵀ, so that ⟨d, e⟩ = −⟨e, Φd⟩ and Φ(dim P(x)) = −dim I(x).
pub fn coxeter_matrix(q: &Quiver) -> Result<Vec<Vec<i64>>> {
    if !q.is_acyclic() {
        return Err(Error::InvalidQuiver("Coxeter matrix needs an acyclic quiver".into()));
    }
    let n = q.vertex_count();
    let c = euler_matrix(q);
    let cm = Matrix::from_rows(c.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect(), n)?;
    let inv = cm.inverse().ok_or_else(|| Error::Internal("singular Euler matrix".into()))?;
    let phi = -&(&inv * &cm.transpose());
    let mut out = vec![vec![0i64; n]; n];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, x) in row.iter_mut().enumerate() {
            *x = i64::try_from(phi.get(i, j))
                .map_err(|_| Error::Internal("non-integral Coxeter matrix".into()))?;
        }
    }
    Ok(out)
}

pub fn apply(m: &[Vec<i64>], d: &[i64]) -> Vec<i64> {
    m.iter().map(|row| row.iter().zip(d).map(|(a, b)| a * b).sum()).collect()
}

/// Symmetrized form (d, e) = ⟨d, e⟩ + ⟨e, d⟩.
pub fn symmetric_form(q: &Quiver, d: &[i64], e: &[i64]) -> i64 {
    euler_form(q, d, e) + euler_form(q, e, d)
}

/// Indicator vector of a vertex set.
pub fn indicator(n: usize, set: &[usize]) -> DimVector {
    let mut d = vec![0; n];
    for &v in set {
        d[v] = 1;
    }
    d
}

pub fn unit(n: usize, v: usize) -> DimVector {
    indicator(n, &[v])
}
