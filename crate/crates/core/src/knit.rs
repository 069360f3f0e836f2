//! Knitting on ℤQ: the preprojective component of a Dynkin quiver with dimension
//! vectors, hammock functions, finite posets with antichain and (2,2)-set enumeration,
//! and special vertex sets.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::format::{format_dim_vector, DotGraph};
use crate::quiver::{self, DimVector, Quiver};

/// The vertex (a, i) of ℤQ; it stands for τ^{−i}P(a).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZqVertex {
    pub vertex: usize,
    pub level: i64,
}

impl ZqVertex {
    pub fn new(vertex: usize, level: i64) -> Self {
        ZqVertex { vertex, level }
    }
}

/// Vertices sorted so that every ℤQ arrow inside one level goes from earlier to later:
/// for a → b in Q the arrow is (b, i) → (a, i), so targets come first.
fn sinks_first(q: &Quiver) -> Result<Vec<usize>> {
    let mut order = q
        .topological_order()
        .ok_or_else(|| Error::InvalidQuiver("quiver has an oriented cycle".into()))?;
    order.reverse();
    Ok(order)
}

fn require_dynkin(q: &Quiver) -> Result<()> {
    if !quiver::is_dynkin(q) {
        return Err(Error::NotDynkin(format!("{} is not a union of Dynkin quivers", quiver::classify(q)?.tag)));
    }
    Ok(())
}

/// Direct predecessors of (a, i) in ℤQ: (b, i) for a → b and (c, i−1) for c → a.
pub fn zq_predecessors(q: &Quiver, v: ZqVertex) -> Vec<ZqVertex> {
    let mut out = Vec::new();
    for a in q.arrows() {
        if a.source == v.vertex {
            out.push(ZqVertex::new(a.target, v.level));
        }
        if a.target == v.vertex {
            out.push(ZqVertex::new(a.source, v.level - 1));
        }
    }
    out
}

/// Direct successors of (a, i) in ℤQ: (c, i) for c → a and (b, i+1) for a → b.
pub fn zq_successors(q: &Quiver, v: ZqVertex) -> Vec<ZqVertex> {
    let mut out = Vec::new();
    for a in q.arrows() {
        if a.target == v.vertex {
            out.push(ZqVertex::new(a.source, v.level));
        }
        if a.source == v.vertex {
            out.push(ZqVertex::new(a.target, v.level + 1));
        }
    }
    out
}

// ---------------------------------------------------------------------------
// AR quiver

#[derive(Clone, Debug)]
pub struct ArQuiver {
    quiver: Quiver,
    pub vertices: Vec<ZqVertex>,
    pub dims: Vec<DimVector>,
    pub arrows: Vec<(usize, usize)>,
    index: BTreeMap<ZqVertex, usize>,
}

/// Knits the AR quiver of a Dynkin quiver from the projectives: dim τ⁻c = Σ dim of the
/// direct successors of c minus dim c, stopping each τ-orbit at an injective.
pub fn knit_ar_quiver(q: &Quiver) -> Result<ArQuiver> {
    require_dynkin(q)?;
    let n = q.vertex_count();
    let order = sinks_first(q)?;
    let injective: Vec<DimVector> =
        (0..n).map(|x| q.reaching(x).iter().map(|&b| b as i64).collect()).collect();
    let mut vertices = Vec::new();
    let mut dims: Vec<DimVector> = Vec::new();
    let mut cur: Vec<Option<DimVector>> = vec![None; n];
    for &a in &order {
        let d: DimVector = q.reachable_from(a).iter().map(|&b| b as i64).collect();
        vertices.push(ZqVertex::new(a, 0));
        dims.push(d.clone());
        cur[a] = Some(d);
    }
    let mut level = 0i64;
    loop {
        let mut next: Vec<Option<DimVector>> = vec![None; n];
        for &a in &order {
            let Some(da) = &cur[a] else { continue };
            if injective.contains(da) {
                continue;
            }
            let mut d: DimVector = da.iter().map(|x| -x).collect();
            for s in zq_successors(q, ZqVertex::new(a, level)) {
                let src = if s.level == level { &cur[s.vertex] } else { &next[s.vertex] };
                if let Some(ds) = src {
                    for (x, y) in d.iter_mut().zip(ds) {
                        *x += y;
                    }
                }
            }
            if d.iter().any(|&x| x < 0) || d.iter().all(|&x| x == 0) {
                return Err(Error::Internal(format!("knitting produced {d:?}")));
            }
            next[a] = Some(d);
        }
        if next.iter().all(Option::is_none) {
            break;
        }
        level += 1;
        for &a in &order {
            if let Some(d) = &next[a] {
                vertices.push(ZqVertex::new(a, level));
                dims.push(d.clone());
            }
        }
        cur = next;
        if level > 4 * n as i64 + 4 {
            return Err(Error::Internal("knitting did not terminate".into()));
        }
    }
    let mut ar = ArQuiver { quiver: q.clone(), vertices, dims, arrows: Vec::new(), index: BTreeMap::new() };
    ar.index = ar.vertices.iter().enumerate().map(|(i, v)| (*v, i)).collect();
    let mut arrows = Vec::new();
    for (i, v) in ar.vertices.iter().enumerate() {
        for s in zq_successors(q, *v) {
            if let Some(&j) = ar.index.get(&s) {
                arrows.push((i, j));
            }
        }
    }
    ar.arrows = arrows;
    Ok(ar)
}

impl ArQuiver {
    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn position(&self, v: ZqVertex) -> Option<usize> {
        self.index.get(&v).copied()
    }

    pub fn dim(&self, i: usize) -> &DimVector {
        &self.dims[i]
    }

    pub fn find_dim(&self, d: &[i64]) -> Option<usize> {
        self.dims.iter().position(|x| x == d)
    }

    pub fn projective(&self, x: usize) -> usize {
        self.index[&ZqVertex::new(x, 0)]
    }

    pub fn injective(&self, x: usize) -> usize {
        let d: DimVector = self.quiver.reaching(x).iter().map(|&b| b as i64).collect();
        self.find_dim(&d).expect("injectives are knitted")
    }

    pub fn tau(&self, i: usize) -> Option<usize> {
        let v = self.vertices[i];
        self.position(ZqVertex::new(v.vertex, v.level - 1))
    }

    pub fn tau_inverse(&self, i: usize) -> Option<usize> {
        let v = self.vertices[i];
        self.position(ZqVertex::new(v.vertex, v.level + 1))
    }

    pub fn successors(&self, i: usize) -> Vec<usize> {
        self.arrows.iter().filter(|a| a.0 == i).map(|a| a.1).collect()
    }

    pub fn predecessors(&self, i: usize) -> Vec<usize> {
        self.arrows.iter().filter(|a| a.1 == i).map(|a| a.0).collect()
    }

    /// The τ-orbit of i, ordered from the projective.
    pub fn tau_orbit(&self, i: usize) -> Vec<usize> {
        let a = self.vertices[i].vertex;
        let mut out: Vec<usize> = (0..self.len()).filter(|&j| self.vertices[j].vertex == a).collect();
        out.sort_by_key(|&j| self.vertices[j].level);
        out
    }

    /// r with a = τ^r b, if a and b lie in one τ-orbit.
    pub fn tau_power_relation(&self, a: usize, b: usize) -> Option<i64> {
        let (va, vb) = (self.vertices[a], self.vertices[b]);
        (va.vertex == vb.vertex).then_some(vb.level - va.level)
    }

    /// Checks dim τ⁻c + dim c = Σ dim of the middle terms wherever τ⁻c exists.
    pub fn mesh_relations_hold(&self) -> bool {
        (0..self.len()).all(|i| {
            let Some(t) = self.tau_inverse(i) else { return true };
            let mut lhs: DimVector = self.dims[i].iter().zip(&self.dims[t]).map(|(a, b)| a + b).collect();
            for s in self.successors(i) {
                for (x, y) in lhs.iter_mut().zip(&self.dims[s]) {
                    *x -= y;
                }
            }
            lhs.iter().all(|&x| x == 0)
        })
    }

    pub fn to_dot(&self) -> String {
        let mut g = DotGraph::new("ar-quiver");
        let id = |i: usize| {
            let v = self.vertices[i];
            format!("{}@{}", self.quiver.label(v.vertex), v.level)
        };
        for i in 0..self.len() {
            g.node(&id(i), &format_dim_vector(&self.dims[i]), "shape=box");
        }
        for &(a, b) in &self.arrows {
            g.edge(&id(a), &id(b), "");
        }
        g.render()
    }
}

// ---------------------------------------------------------------------------
// hammocks

#[derive(Clone, Debug)]
pub struct HammockFunction {
    pub quiver: Quiver,
    pub start: usize,
    /// Nonzero values only.
    pub values: BTreeMap<ZqVertex, u64>,
}

/// Knits h with h(x, 0) = 1, h = 0 at vertices with a path to (x, 0), and
/// h(c) = max(0, Σ h(predecessors) − h(τc)) elsewhere.
pub fn hammock_function(q: &Quiver, x: usize) -> Result<HammockFunction> {
    require_dynkin(q)?;
    if x >= q.vertex_count() {
        return Err(Error::Precondition("vertex outside the quiver".into()));
    }
    let n = q.vertex_count();
    let order = sinks_first(q)?;
    let below_x = q.reachable_from(x);
    let mut prev = vec![0i64; n];
    let mut values = BTreeMap::new();
    let mut level = 0i64;
    loop {
        let mut cur = vec![0i64; n];
        for &a in &order {
            let v = if level == 0 && a == x {
                1
            } else if level == 0 && below_x[a] {
                0
            } else {
                let mut s = -prev[a];
                for p in zq_predecessors(q, ZqVertex::new(a, level)) {
                    s += if p.level == level { cur[p.vertex] } else { prev[p.vertex] };
                }
                s.max(0)
            };
            cur[a] = v;
            if v > 0 {
                values.insert(ZqVertex::new(a, level), v as u64);
            }
        }
        if level > 0 && cur.iter().all(|&v| v == 0) {
            break;
        }
        prev = cur;
        level += 1;
        if level > 4 * n as i64 + 4 {
            return Err(Error::Internal("hammock knitting did not terminate".into()));
        }
    }
    Ok(HammockFunction { quiver: q.clone(), start: x, values })
}

impl HammockFunction {
    pub fn support_size(&self) -> usize {
        self.values.len()
    }

    pub fn max_value(&self) -> u64 {
        self.values.values().copied().max().unwrap_or(0)
    }

    pub fn value(&self, v: ZqVertex) -> u64 {
        self.values.get(&v).copied().unwrap_or(0)
    }

    pub fn is_poset(&self) -> bool {
        self.max_value() <= 1
    }

    /// The support ordered by directed paths inside the support.
    pub fn hammock(&self) -> Hammock {
        let vertices: Vec<ZqVertex> = self.values.keys().copied().collect();
        let pos: BTreeMap<ZqVertex, usize> = vertices.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        let mut edges = Vec::new();
        for (i, v) in vertices.iter().enumerate() {
            for s in zq_successors(&self.quiver, *v) {
                if let Some(&j) = pos.get(&s) {
                    edges.push((i, j));
                }
            }
        }
        let labels = vertices.iter().map(|v| format!("{}@{}", self.quiver.label(v.vertex), v.level)).collect();
        let order = Poset::from_cover_edges(labels, &edges).expect("ℤQ is acyclic");
        let values = vertices.iter().map(|v| self.values[v]).collect();
        Hammock { vertices, values, order, start: self.start, quiver: self.quiver.clone() }
    }

    pub fn to_dot(&self) -> String {
        self.hammock().to_dot()
    }
}

#[derive(Clone, Debug)]
pub struct Hammock {
    pub quiver: Quiver,
    pub start: usize,
    pub vertices: Vec<ZqVertex>,
    pub values: Vec<u64>,
    pub order: Poset,
}

impl Hammock {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn to_dot(&self) -> String {
        let mut g = DotGraph::new("hammock");
        let sources = self.order.minimal();
        let sinks = self.order.maximal();
        for (i, l) in self.order.labels.iter().enumerate() {
            let attrs = if sources.contains(&i) {
                "shape=box, xlabel=\"source\""
            } else if sinks.contains(&i) {
                "shape=box, xlabel=\"sink\""
            } else {
                "shape=circle"
            };
            g.node(l, &self.values[i].to_string(), attrs);
        }
        for (a, b) in self.order.cover_relations() {
            g.edge(&self.order.labels[a], &self.order.labels[b], "");
        }
        g.render()
    }
}

/// Knits the hammock of (q, x); the order is path reachability inside the support.
pub fn knit_hammock(q: &Quiver, x: usize) -> Result<(HammockFunction, Hammock)> {
    let h = hammock_function(q, x)?;
    let hm = h.hammock();
    Ok((h, hm))
}

/// The hammock as a poset; fails when some value exceeds 1.
pub fn hammock_poset(h: &HammockFunction) -> Result<Poset> {
    if !h.is_poset() {
        return Err(Error::Precondition(format!("hammock takes the value {}", h.max_value())));
    }
    Ok(h.hammock().order)
}

pub fn hammock_is_poset(h: &HammockFunction) -> bool {
    h.is_poset()
}

// ---------------------------------------------------------------------------
// posets

/// A finite poset stored as its full order relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    pub labels: Vec<String>,
    le: Vec<Vec<bool>>,
}

impl fmt::Display for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (a, b) in self.cover_relations() {
            writeln!(f, "{} < {}", self.labels[a], self.labels[b])?;
        }
        Ok(())
    }
}

impl Poset {
    /// Reflexive-transitive closure of the given relation; fails if it is not antisymmetric.
    pub fn from_cover_edges(labels: Vec<String>, edges: &[(usize, usize)]) -> Result<Poset> {
        let n = labels.len();
        let mut le = vec![vec![false; n]; n];
        for (i, row) in le.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(a, b) in edges {
            le[a][b] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if le[i][k] {
                    for j in 0..n {
                        if le[k][j] {
                            le[i][j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if le[i][j] && le[j][i] {
                    return Err(Error::Precondition("relation is not antisymmetric".into()));
                }
            }
        }
        Ok(Poset { labels, le })
    }

    pub fn chain(n: usize) -> Poset {
        let labels = (0..n).map(|i| i.to_string()).collect();
        let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        Poset::from_cover_edges(labels, &edges).unwrap()
    }

    pub fn antichain(n: usize) -> Poset {
        Poset::from_cover_edges((0..n).map(|i| i.to_string()).collect(), &[]).unwrap()
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn le(&self, a: usize, b: usize) -> bool {
        self.le[a][b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.le[a][b]
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.le[a][b] || self.le[b][a]
    }

    pub fn minimal(&self) -> Vec<usize> {
        (0..self.len()).filter(|&b| (0..self.len()).all(|a| !self.lt(a, b))).collect()
    }

    pub fn maximal(&self) -> Vec<usize> {
        (0..self.len()).filter(|&a| (0..self.len()).all(|b| !self.lt(a, b))).collect()
    }

    pub fn cover_relations(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if self.lt(a, b) && !(0..n).any(|c| self.lt(a, c) && self.lt(c, b)) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn dual(&self) -> Poset {
        let n = self.len();
        let le = (0..n).map(|i| (0..n).map(|j| self.le[j][i]).collect()).collect();
        Poset { labels: self.labels.clone(), le }
    }

    pub fn disjoint_union(parts: &[Poset]) -> Poset {
        let n: usize = parts.iter().map(Poset::len).sum();
        let mut le = vec![vec![false; n]; n];
        let mut labels = Vec::with_capacity(n);
        let mut off = 0;
        for p in parts {
            for i in 0..p.len() {
                for j in 0..p.len() {
                    le[off + i][off + j] = p.le[i][j];
                }
            }
            labels.extend(p.labels.iter().cloned());
            off += p.len();
        }
        Poset { labels, le }
    }

    /// All antichains of the given size, as increasing index lists.
    pub fn antichains(&self, size: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        self.extend_antichains(0, size, &mut cur, &mut out);
        out
    }

    fn extend_antichains(&self, from: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for v in from..self.len() {
            if cur.iter().all(|&u| !self.comparable(u, v)) {
                cur.push(v);
                self.extend_antichains(v + 1, size, cur, out);
                cur.pop();
            }
        }
    }

    pub fn width(&self) -> usize {
        let mut w = 0;
        while !self.antichains(w + 1).is_empty() {
            w += 1;
        }
        w
    }

    /// Full subposets {a < b} ⊔ {c < d} with no relation between the two chains.
    pub fn two_two_sets(&self) -> Vec<[usize; 4]> {
        let n = self.len();
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).filter(|&(a, b)| self.lt(a, b)).collect();
        let mut out = Vec::new();
        for (i, &(a, b)) in pairs.iter().enumerate() {
            for &(c, d) in &pairs[i + 1..] {
                let cross = [(a, c), (a, d), (b, c), (b, d)];
                if cross.iter().all(|&(u, v)| u != v && !self.comparable(u, v)) {
                    out.push([a, b, c, d]);
                }
            }
        }
        out
    }

    /// Is there an order embedding (a ≤ b iff f(a) ≤ f(b)) of self into other?
    pub fn embeds_into(&self, other: &Poset) -> bool {
        let n = self.len();
        let mut order: Vec<usize> = (0..n).collect();
        // place elements in a linear extension so that constraints bite early
        order.sort_by_key(|&a| (0..n).filter(|&b| self.lt(b, a)).count());
        let mut image = vec![usize::MAX; n];
        let mut used = vec![false; other.len()];
        self.embed_step(other, &order, 0, &mut image, &mut used)
    }

    fn embed_step(&self, other: &Poset, order: &[usize], k: usize, image: &mut [usize], used: &mut [bool]) -> bool {
        if k == order.len() {
            return true;
        }
        let a = order[k];
        for t in 0..other.len() {
            if used[t] {
                continue;
            }
            let ok = order[..k].iter().all(|&b| {
                let s = image[b];
                self.le(a, b) == other.le(t, s) && self.le(b, a) == other.le(s, t)
            });
            if ok {
                image[a] = t;
                used[t] = true;
                if self.embed_step(other, order, k + 1, image, used) {
                    return true;
                }
                used[t] = false;
            }
        }
        false
    }

    /// Isomorphism test by mutual embedding of equal-size posets.
    pub fn is_isomorphic(&self, other: &Poset) -> bool {
        self.len() == other.len() && self.embeds_into(other)
    }
}

// ---------------------------------------------------------------------------
// hammock sets and special vertex sets

/// Disjoint union of the hammock posets H(Q(i), x(i)).
pub fn hammock_set(components: &[(Quiver, usize)]) -> Result<Poset> {
    let mut seen = std::collections::BTreeSet::new();
    for (q, _) in components {
        for l in q.labels() {
            if !seen.insert(l.clone()) {
                return Err(Error::Precondition(format!("label '{l}' occurs in two components")));
            }
        }
    }
    let mut parts = Vec::new();
    for (q, x) in components {
        parts.push(hammock_poset(&hammock_function(q, *x)?)?);
    }
    Ok(Poset::disjoint_union(&parts))
}

/// Splits q into connected components, pairing each with the chosen vertex in it.
fn components_with_vertices(q: &Quiver, xs: &[usize]) -> Result<Vec<(Quiver, usize)>> {
    let comps = q.components();
    if comps.len() != xs.len() {
        return Err(Error::Precondition("one chosen vertex per component".into()));
    }
    let mut out = Vec::new();
    for comp in comps {
        let chosen: Vec<usize> = xs.iter().copied().filter(|x| comp.contains(x)).collect();
        if chosen.len() != 1 {
            return Err(Error::Precondition("one chosen vertex per component".into()));
        }
        let (sub, _) = q.full_subquiver(&comp);
        let pos = comp.iter().position(|&v| v == chosen[0]).unwrap();
        out.push((sub, pos));
    }
    Ok(out)
}

/// H(Q, x(1), …, x(t)) for a possibly disconnected Dynkin quiver; None if some hammock
/// takes a value above 1.
pub fn hammock_set_of(q: &Quiver, xs: &[usize]) -> Result<Option<Poset>> {
    let comps = components_with_vertices(q, xs)?;
    let mut parts = Vec::new();
    for (c, x) in &comps {
        let h = hammock_function(c, *x)?;
        if !h.is_poset() {
            return Ok(None);
        }
        parts.push(h.hammock().order);
    }
    Ok(Some(Poset::disjoint_union(&parts)))
}

/// A poset hammock set with exactly one antichain triple.
pub fn is_special_vertex_set(q: &Quiver, xs: &[usize]) -> Result<bool> {
    Ok(match hammock_set_of(q, xs)? {
        Some(p) => p.antichains(3).len() == 1,
        None => false,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpecialCase {
    ThreeA1,
    A1PlusD(usize),
    A5,
    D6,
    E7,
    NotSpecial,
}

impl fmt::Display for SpecialCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecialCase::ThreeA1 => write!(f, "A1+A1+A1"),
            SpecialCase::A1PlusD(m) => write!(f, "A1+D{m}"),
            SpecialCase::A5 => write!(f, "A5"),
            SpecialCase::D6 => write!(f, "D6"),
            SpecialCase::E7 => write!(f, "E7"),
            SpecialCase::NotSpecial => write!(f, "not special"),
        }
    }
}

/// Names the case of a special vertex set by the component types.
pub fn classify_special(q: &Quiver, xs: &[usize]) -> Result<SpecialCase> {
    if !is_special_vertex_set(q, xs)? {
        return Ok(SpecialCase::NotSpecial);
    }
    let mut types: Vec<(quiver::Family, usize)> =
        quiver::dynkin_components(q)?.into_iter().map(|(f, n, _)| (f, n)).collect();
    types.sort();
    use quiver::Family::*;
    Ok(match types.as_slice() {
        [(A, 1), (A, 1), (A, 1)] => SpecialCase::ThreeA1,
        [(A, 1), (A, 3)] => SpecialCase::A1PlusD(3),
        [(A, 1), (D, m)] => SpecialCase::A1PlusD(*m),
        [(A, 5)] => SpecialCase::A5,
        [(D, 6)] => SpecialCase::D6,
        [(E, 7)] => SpecialCase::E7,
        _ => return Err(Error::Internal(format!("unexpected special vertex set on {types:?}"))),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::{type_a, type_d, type_e};

    #[test]
    fn ar_counts() {
        assert_eq!(knit_ar_quiver(&type_a(3)).unwrap().len(), 6);
        assert_eq!(knit_ar_quiver(&type_d(5)).unwrap().len(), 20);
        assert_eq!(knit_ar_quiver(&type_e(6)).unwrap().len(), 36);
        let ar = knit_ar_quiver(&type_a(4).oriented_toward(1)).unwrap();
        assert_eq!(ar.len(), 10);
        assert!(ar.mesh_relations_hold());
    }

    #[test]
    fn a2_orbits() {
        let ar = knit_ar_quiver(&type_a(2)).unwrap();
        let p = ar.projective(0); // vertex 1 is a sink
        assert_eq!(ar.tau_orbit(p).len(), 2);
        let top = ar.tau_orbit(p)[1];
        assert_eq!(ar.tau_power_relation(p, top), Some(1));
    }

    #[test]
    fn leaf_hammock_of_an_is_a_chain() {
        let (h, hm) = knit_hammock(&type_a(5), 0).unwrap();
        assert_eq!(h.support_size(), 5);
        assert!(h.is_poset());
        assert_eq!(hm.order.width(), 1);
    }

    #[test]
    fn d6_hammocks() {
        let q = type_d(6);
        let (h, _) = knit_hammock(&q, 0).unwrap();
        assert_eq!(h.support_size(), 15);
        assert_eq!(h.max_value(), 1);
        let (h, _) = knit_hammock(&q, 2).unwrap();
        assert_eq!(h.max_value(), 2);
        assert!(hammock_poset(&h).is_err());
        let (h, _) = knit_hammock(&q, 5).unwrap();
        assert_eq!(h.support_size(), 10);
    }

    #[test]
    fn a5_middle_is_special() {
        let q = type_a(5);
        let p = hammock_poset(&hammock_function(&q, 2).unwrap()).unwrap();
        assert_eq!(p.len(), 9);
        assert_eq!(p.antichains(3).len(), 1);
        assert_eq!(p.antichains(2).len(), 9);
        assert_eq!(classify_special(&q, &[2]).unwrap(), SpecialCase::A5);
        assert_eq!(classify_special(&type_a(7), &[3]).unwrap(), SpecialCase::NotSpecial);
    }

    #[test]
    fn poset_basics() {
        let c = Poset::chain(4);
        assert!(c.antichains(2).is_empty());
        assert_eq!(c.cover_relations().len(), 3);
        let a = Poset::antichain(3);
        assert_eq!(a.antichains(3).len(), 1);
        let two = Poset::disjoint_union(&[Poset::chain(2), Poset::chain(2)]);
        assert_eq!(two.two_two_sets().len(), 1);
        assert!(Poset::chain(2).embeds_into(&c));
        assert!(!a.embeds_into(&c));
        assert!(two.is_isomorphic(&two.dual()));
    }

    #[test]
    fn rejects_euclidean() {
        assert!(matches!(knit_ar_quiver(&crate::quiver::cyclic(3)), Err(Error::NotDynkin(_))));
    }
}
