//! Decomposition of representations of type-A quivers into thin summands, conification
//! along arms and at the center of star quivers, and two-filtration decompositions.
//!
//! The type-A algorithm is the elementary induction: for n ≤ 3 a basis of the middle
//! space compatible with two subspaces does everything; for n ≥ 4 the representation is
//! split on [1, n−1] and [2, n] by induction, the remaining middle isomorphisms are
//! straightened to identities, and the result is collapsed onto an A_3 quiver.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::{compatible_basis_filtrations, FiltrationPairBasis, Matrix, Subspace, Vector};
use crate::quiver::{self, Arm, ClassTag, Family, Quiver};
use crate::rep::{self, direct_sum, Decomposition, Representation, Summand, SummandKind};

/// A representation of a path 0 - 1 - … - n−1; edge p joins p and p+1 and is forward
/// when it points p → p+1.
#[derive(Clone, Debug)]
struct Line {
    dims: Vec<usize>,
    forward: Vec<bool>,
    maps: Vec<Matrix>,
}

/// Vectors v_s, …, v_t spanning one thin summand M([s, t]).
#[derive(Clone, Debug)]
struct Chain {
    s: usize,
    vecs: Vec<Vector>,
}

impl Chain {
    fn t(&self) -> usize {
        self.s + self.vecs.len() - 1
    }

    fn contains(&self, p: usize) -> bool {
        self.s <= p && p <= self.t()
    }

    fn at(&self, p: usize) -> &Vector {
        &self.vecs[p - self.s]
    }
}

impl Line {
    fn len(&self) -> usize {
        self.dims.len()
    }

    fn restrict(&self, from: usize, to: usize) -> Line {
        Line {
            dims: self.dims[from..to].to_vec(),
            forward: self.forward[from..to - 1].to_vec(),
            maps: self.maps[from..to - 1].to_vec(),
        }
    }

    /// The subrepresentation on invariant subspaces with basis columns `bases[p]`, in
    /// those coordinates.
    fn sub(&self, bases: &[Matrix]) -> Result<Line> {
        let mut maps = Vec::with_capacity(self.maps.len());
        for (p, m) in self.maps.iter().enumerate() {
            let (s, t) = if self.forward[p] { (p, p + 1) } else { (p + 1, p) };
            let img = m * &bases[s];
            let x = bases[t]
                .solve_matrix(&img)?
                .ok_or_else(|| Error::Internal("split summand is not invariant".into()))?;
            maps.push(x);
        }
        Ok(Line { dims: bases.iter().map(Matrix::cols).collect(), forward: self.forward.clone(), maps })
    }
}

fn columns_at(chains: &[Chain], p: usize, dim: usize) -> Matrix {
    let cols: Vec<Vector> = chains.iter().filter(|c| c.contains(p)).map(|c| c.at(p).clone()).collect();
    Matrix::from_columns(dim, &cols)
}

/// Rewrites chains given in the coordinates of `bases` in the ambient coordinates.
fn pull_back(chains: Vec<Chain>, bases: &[Matrix], shift: usize) -> Vec<Chain> {
    chains
        .into_iter()
        .map(|c| {
            let s = c.s + shift;
            let vecs = c.vecs.iter().enumerate().map(|(k, v)| bases[s + k].mul_vec(v)).collect();
            Chain { s, vecs }
        })
        .collect()
}

/// One neighbor of the center in the small cases.
enum Side {
    Absent,
    /// arrow x → c with the map f; `comp` spans a complement of its kernel.
    Into { x: usize, f: Matrix, comp: Matrix },
    /// arrow c → x with the map g.
    Out { x: usize, g: Matrix },
}

impl Side {
    fn new(line: &Line, c: usize, x: Option<usize>, singles: &mut Vec<Chain>) -> (Side, Subspace) {
        let dc = line.dims[c];
        let Some(x) = x else { return (Side::Absent, Subspace::zero(dc)) };
        let e = c.min(x);
        let m = &line.maps[e];
        let into_center = line.forward[e] == (x < c);
        if into_center {
            // split off S(x) for the kernel
            let ker = m.kernel();
            for v in ker.vectors() {
                singles.push(Chain { s: x, vecs: vec![v] });
            }
            let comp = Matrix::from_columns(line.dims[x], &ker.standard_complement());
            let u = (m * &comp).image();
            (Side::Into { x, f: m.clone(), comp }, u)
        } else {
            // split off S(x) for a complement of the image
            let img = m.image();
            for v in img.standard_complement() {
                singles.push(Chain { s: x, vecs: vec![v] });
            }
            (Side::Out { x, g: m.clone() }, m.kernel())
        }
    }

    /// The vector at x continuing b, if the summand through b reaches x.
    fn extend(&self, b: &Vector, in_u: bool) -> Option<Vector> {
        match self {
            Side::Absent => None,
            Side::Into { f, comp, .. } => {
                if !in_u {
                    return None;
                }
                let z = (f * comp).solve(b).ok().flatten().expect("b lies in the image");
                Some(comp.mul_vec(&z))
            }
            Side::Out { g, .. } => (!in_u).then(|| g.mul_vec(b)),
        }
    }

    fn vertex(&self) -> Option<usize> {
        match self {
            Side::Absent => None,
            Side::Into { x, .. } | Side::Out { x, .. } => Some(*x),
        }
    }
}

/// n ≤ 3: split off simples at the ends, then use a basis of the middle space
/// compatible with the two subspaces they determine.
fn decompose_small(line: &Line) -> Result<Vec<Chain>> {
    let n = line.len();
    let (c, left, right) = match n {
        1 => (0, None, None),
        2 => (0, None, Some(1)),
        3 => (1, Some(0), Some(2)),
        _ => unreachable!(),
    };
    let mut chains = Vec::new();
    let (ls, lu) = Side::new(line, c, left, &mut chains);
    let (rs, ru) = Side::new(line, c, right, &mut chains);
    let pair = crate::linalg::compatible_basis_pair(line.dims[c], &lu, &ru)?;
    let groups = [(&pair.both, true, true), (&pair.first_only, true, false), (&pair.second_only, false, true), (&pair.neither, false, false)];
    for (vs, in_l, in_r) in groups {
        for b in vs {
            let lv = ls.extend(b, in_l);
            let rv = rs.extend(b, in_r);
            let mut vecs = Vec::new();
            let s = if let Some(v) = lv {
                vecs.push(v);
                ls.vertex().unwrap()
            } else {
                c
            };
            vecs.push(b.clone());
            if let Some(v) = rv {
                vecs.push(v);
            }
            chains.push(Chain { s, vecs });
        }
    }
    Ok(chains)
}

fn decompose_line(line: &Line) -> Result<Vec<Chain>> {
    let n = line.len();
    if n <= 3 {
        return decompose_small(line);
    }
    let mut done = Vec::new();

    // Step 1: conical on ([1, n−1], n−1); the rest lives on [1, n−2].
    let chains = decompose_line(&line.restrict(0, n - 1))?;
    let (keep, rest): (Vec<Chain>, Vec<Chain>) = chains.into_iter().partition(|c| c.t() == n - 2);
    done.extend(rest);
    let mut b1: Vec<Matrix> = (0..n - 1).map(|p| columns_at(&keep, p, line.dims[p])).collect();
    b1.push(Matrix::identity(line.dims[n - 1]));
    let m1 = line.sub(&b1)?;

    // Step 2: conical on ([2, n], 2); the rest lives on [3, n].
    let chains = decompose_line(&m1.restrict(1, n))?;
    let (keep, rest): (Vec<Chain>, Vec<Chain>) = chains.into_iter().partition(|c| c.s == 0);
    done.extend(pull_back(rest, &b1, 1));
    let mut b2 = vec![Matrix::identity(m1.dims[0])];
    b2.extend((1..n).map(|p| columns_at(&keep, p - 1, m1.dims[p])));
    let m2 = m1.sub(&b2)?;

    // Step 3: the maps inside [2, n−1] are isomorphisms; straighten them to identities.
    let mut f: Vec<Matrix> = vec![Matrix::identity(m2.dims[0]); n];
    f[1] = Matrix::identity(m2.dims[1]);
    for p in 1..n - 2 {
        let g = &m2.maps[p];
        if !g.is_invertible() {
            return Err(Error::Internal(format!("middle map {p} is not invertible after splitting")));
        }
        f[p + 1] = if m2.forward[p] { &f[p] * &g.inverse().unwrap() } else { &f[p] * g };
    }
    f[n - 1] = Matrix::identity(m2.dims[n - 1]);
    let beta = &m2.maps[n - 2];
    let beta3 = if m2.forward[n - 2] { beta * &f[n - 2].inverse().unwrap() } else { &f[n - 2] * beta };

    // Final step: collapse to the A_3 quiver on 1, 2, n.
    let small = Line {
        dims: vec![m2.dims[0], m2.dims[1], m2.dims[n - 1]],
        forward: vec![m2.forward[0], m2.forward[n - 2]],
        maps: vec![m2.maps[0].clone(), beta3],
    };
    let finv: Vec<Matrix> = f.iter().map(|x| x.inverse().expect("straightening maps are invertible")).collect();
    let mut lifted = Vec::new();
    for c in decompose_small(&small)? {
        let positions = |q: usize| -> Vec<usize> {
            match q {
                0 => vec![0],
                1 => (1..n - 1).collect(),
                _ => vec![n - 1],
            }
        };
        let mut vecs = Vec::new();
        let mut s = None;
        for q in c.s..=c.t() {
            for p in positions(q) {
                s.get_or_insert(p);
                vecs.push(finv[p].mul_vec(c.at(q)));
            }
        }
        lifted.push(Chain { s: s.unwrap(), vecs });
    }
    let lifted = pull_back(pull_back(lifted, &b2, 0), &b1, 0);
    done.extend(lifted);
    Ok(done)
}

// ---------------------------------------------------------------------------
// public interface

/// Vertices of a path quiver in order, starting from the lower-indexed end.
pub fn path_order(q: &Quiver) -> Result<Vec<usize>> {
    match quiver::classify(q)?.tag {
        ClassTag::Dynkin(Family::A, _) => {}
        t => return Err(Error::WrongType(format!("expected a quiver of type A, got {t}"))),
    }
    let n = q.vertex_count();
    if n == 1 {
        return Ok(vec![0]);
    }
    let start = (0..n).find(|&v| q.degree(v) == 1).unwrap();
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while order.len() < n {
        let next = q.neighbors(cur).into_iter().find(|&w| w != prev).unwrap();
        order.push(next);
        prev = cur;
        cur = next;
    }
    Ok(order)
}

fn line_on_path(m: &Representation, path: &[usize]) -> Result<Line> {
    let q = m.quiver();
    let mut forward = Vec::new();
    let mut maps = Vec::new();
    for w in path.windows(2) {
        let a = q
            .arrows()
            .iter()
            .position(|a| (a.source == w[0] && a.target == w[1]) || (a.source == w[1] && a.target == w[0]))
            .ok_or_else(|| Error::Precondition("path vertices are not adjacent".into()))?;
        forward.push(q.arrow(a).source == w[0]);
        maps.push(m.map(a).clone());
    }
    Ok(Line { dims: path.iter().map(|&v| m.dim(v)).collect(), forward, maps })
}

/// Thin summands of a type-A representation, listed with their interval supports.
#[derive(Clone, Debug)]
pub struct ThinDecomposition {
    /// path[p] is the vertex at position p (0-based) of the underlying path.
    pub path: Vec<usize>,
    /// (s, t) positions (0-based, inclusive) of each summand, sorted.
    pub intervals: Vec<(usize, usize)>,
    pub decomposition: Decomposition,
}

impl ThinDecomposition {
    /// Multiplicity of each interval [s, t] in 1-based path positions.
    pub fn summands(&self) -> BTreeMap<(usize, usize), usize> {
        let mut out = BTreeMap::new();
        for &(s, t) in &self.intervals {
            *out.entry((s + 1, t + 1)).or_insert(0) += 1;
        }
        out
    }

    pub fn verify(&self, m: &Representation) -> bool {
        self.decomposition.verify(m)
            && self.decomposition.summands.iter().all(|s| s.model.is_thin())
    }

    /// One line per interval: "interval [s,t] x multiplicity" with vertex labels.
    pub fn report(&self, q: &Quiver) -> String {
        let mut out = String::new();
        for ((s, t), k) in self.summands() {
            out.push_str(&format!("interval [{},{}] x {k}\n", q.label(self.path[s - 1]), q.label(self.path[t - 1])));
        }
        out
    }
}

fn chains_to_decomposition(m: &Representation, path: &[usize], mut chains: Vec<Chain>) -> ThinDecomposition {
    chains.sort_by_key(|c| (c.s, c.t()));
    let q = m.quiver_arc();
    let n = q.vertex_count();
    let mut cols: Vec<Vec<Vector>> = vec![Vec::new(); n];
    let mut summands = Vec::new();
    let mut intervals = Vec::new();
    for c in &chains {
        let support: Vec<usize> = (c.s..=c.t()).map(|p| path[p]).collect();
        for p in c.s..=c.t() {
            cols[path[p]].push(c.at(p).clone());
        }
        let mut sorted = support.clone();
        sorted.sort_unstable();
        let model = rep::thin_on(q, &quiver::indicator(n, &support));
        summands.push(Summand { kind: SummandKind::Thin(sorted), model });
        intervals.push((c.s, c.t()));
    }
    let witness = (0..n).map(|v| Matrix::from_columns(m.dim(v), &cols[v])).collect();
    ThinDecomposition { path: path.to_vec(), intervals, decomposition: Decomposition { summands, witness } }
}

pub fn decompose_type_a(m: &Representation) -> Result<ThinDecomposition> {
    let path = path_order(m.quiver())?;
    let line = line_on_path(m, &path)?;
    let chains = decompose_line(&line)?;
    Ok(chains_to_decomposition(m, &path, chains))
}

/// The A_3 case on its own: simples split at the ends and a compatible basis in the middle.
pub fn decompose_a3(m: &Representation) -> Result<ThinDecomposition> {
    if m.quiver().vertex_count() != 3 {
        return Err(Error::WrongType("expected a quiver of type A3".into()));
    }
    decompose_type_a(m)
}

// ---------------------------------------------------------------------------
// conification

#[derive(Clone, Debug)]
pub struct ConicalSplit {
    pub conical_part: Representation,
    pub rest: Representation,
    /// Columns: a basis of the conical part followed by one of the rest, per vertex.
    pub witness: Vec<Matrix>,
}

impl ConicalSplit {
    pub fn verify(&self, m: &Representation) -> bool {
        let Ok(sum) = direct_sum(&[self.conical_part.clone(), self.rest.clone()]) else { return false };
        self.witness.iter().all(Matrix::is_invertible) && rep::is_morphism(&sum, m, &self.witness)
    }

    fn from_bases(m: &Representation, conical: Vec<Matrix>, rest: Vec<Matrix>) -> Result<ConicalSplit> {
        let conical_part = m.subrepresentation(&conical)?;
        let rest_part = m.subrepresentation(&rest)?;
        let witness = conical
            .iter()
            .zip(&rest)
            .enumerate()
            .map(|(v, (a, b))| Matrix::hstack(m.dim(v), &[a, b]))
            .collect();
        Ok(ConicalSplit { conical_part, rest: rest_part, witness })
    }
}

/// Whether m restricted to the arm is injective toward the attach vertex and surjective
/// away from it.
pub fn is_conical_on_arm(m: &Representation, arm: &Arm) -> bool {
    let Ok(line) = line_on_path(m, &arm.vertices) else { return false };
    line.maps.iter().enumerate().all(|(p, map)| {
        // edge p points toward the attach vertex when it goes p+1 → p
        if line.forward[p] {
            map.rank() == line.dims[p + 1]
        } else {
            map.rank() == line.dims[p]
        }
    })
}

/// M = M′ ⊕ M″ with M′ conical on the arm and M″ supported on the arm minus its attach
/// vertex.
pub fn conify_on_arm(m: &Representation, arm: &Arm) -> Result<ConicalSplit> {
    if !quiver::is_arm(m.quiver(), arm) {
        return Err(Error::Precondition("not an arm of the quiver".into()));
    }
    let line = line_on_path(m, &arm.vertices)?;
    let chains = decompose_line(&line)?;
    let (through, off): (Vec<Chain>, Vec<Chain>) = chains.into_iter().partition(|c| c.s == 0);
    let n = m.quiver().vertex_count();
    let mut conical: Vec<Matrix> = (0..n).map(|v| Matrix::identity(m.dim(v))).collect();
    let mut rest: Vec<Matrix> = (0..n).map(|v| Matrix::zeros(m.dim(v), 0)).collect();
    for (p, &v) in arm.vertices.iter().enumerate() {
        conical[v] = columns_at(&through, p, m.dim(v));
        rest[v] = columns_at(&off, p, m.dim(v));
    }
    ConicalSplit::from_bases(m, conical, rest)
}

/// Conifies on every arm of a star quiver in turn; the rest vanishes at the center.
pub fn conical_split_star(m: &Representation, center: usize) -> Result<ConicalSplit> {
    let star = quiver::star_with_center(m.quiver(), center)
        .ok_or_else(|| Error::WrongType("not a star quiver with this center".into()))?;
    let n = m.quiver().vertex_count();
    let mut cur = m.clone();
    let mut basis: Vec<Matrix> = (0..n).map(|v| Matrix::identity(m.dim(v))).collect();
    let mut rest_bases: Vec<Vec<Matrix>> = Vec::new();
    for arm in &star.arms {
        let split = conify_on_arm(&cur, arm)?;
        let k: Vec<usize> = (0..n).map(|v| split.conical_part.dim(v)).collect();
        let mut next = Vec::with_capacity(n);
        let mut rb = Vec::with_capacity(n);
        for v in 0..n {
            let w = &basis[v] * &split.witness[v];
            let total = w.cols();
            next.push(w.select_cols(&(0..k[v]).collect::<Vec<_>>()));
            rb.push(w.select_cols(&(k[v]..total).collect::<Vec<_>>()));
        }
        rest_bases.push(rb);
        basis = next;
        cur = split.conical_part;
    }
    let rest: Vec<Matrix> = (0..n)
        .map(|v| {
            let blocks: Vec<&Matrix> = rest_bases.iter().map(|b| &b[v]).collect();
            if blocks.is_empty() {
                Matrix::zeros(m.dim(v), 0)
            } else {
                Matrix::hstack(m.dim(v), &blocks)
            }
        })
        .collect();
    ConicalSplit::from_bases(m, basis, rest)
}

/// Conical indecomposables of a representation-finite star quiver: the positive roots
/// with nonzero center coordinate, each once.
pub fn conic_census(q: &Quiver, center: usize) -> Result<BTreeMap<quiver::DimVector, usize>> {
    if quiver::star_with_center(q, center).is_none() && q.vertex_count() > 1 {
        return Err(Error::WrongType("not a star quiver with this center".into()));
    }
    let ar = crate::knit::knit_ar_quiver(q)?;
    let mut out = BTreeMap::new();
    for d in &ar.dims {
        if d[center] > 0 {
            *out.entry(d.clone()).or_insert(0) += 1;
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// pairs of filtrations

/// The A_{n+m+1} quiver 1 → … → n → ω ← m′ ← … ← 1′.
pub fn filtration_quiver(n: usize, m: usize) -> Quiver {
    let mut labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    labels.push("w".into());
    labels.extend((1..=m).rev().map(|j| format!("{j}'")));
    let mut arrows = Vec::new();
    for i in 0..n {
        arrows.push(crate::quiver::Arrow { id: format!("u{}", i + 1), source: i, target: i + 1 });
    }
    for j in 0..m {
        // vertex of j′ is at position n + m − j
        let v = n + m - j;
        arrows.push(crate::quiver::Arrow { id: format!("v{}", j + 1), source: v, target: v - 1 });
    }
    Quiver::new(labels, arrows).expect("well-formed")
}

/// The representation formed by the two chains with inclusion maps, in the coordinates
/// of rref bases of the U_i and U′_j.
pub fn filtration_representation(dim: usize, chain1: &[Subspace], chain2: &[Subspace]) -> Result<Representation> {
    let (n, m) = (chain1.len(), chain2.len());
    let q = Arc::new(filtration_quiver(n, m));
    let mut spaces: Vec<&Subspace> = chain1.iter().collect();
    let full = Subspace::full(dim);
    spaces.push(&full);
    spaces.extend(chain2.iter().rev());
    let dims: Vec<usize> = spaces.iter().map(|s| s.dim()).collect();
    let mut maps = Vec::new();
    for a in q.arrows() {
        let (s, t) = (spaces[a.source], spaces[a.target]);
        if !t.contains_subspace(s) {
            return Err(Error::NotNested(format!("chain step at arrow {}", a.id)));
        }
        maps.push(t.basis().solve_matrix(s.basis())?.expect("nested"));
    }
    Representation::new(q, dims, maps)
}

/// Blocks C(i, j) with the thin representation M(i, j) they multiply: M(i, j) is
/// supported from position i to position j′ of the filtration quiver (1-based, with
/// n+1 and m+1 standing for ω).
pub fn decompose_filtration_pair(
    dim: usize,
    chain1: &[Subspace],
    chain2: &[Subspace],
) -> Result<(FiltrationPairBasis, Vec<((usize, usize), Vec<Vector>)>)> {
    let fb = compatible_basis_filtrations(dim, chain1, chain2)?;
    let blocks = fb.blocks.iter().map(|(&(i, j), v)| ((i, j), v.clone())).collect();
    Ok((fb, blocks))
}

/// Reassembles the filtration representation as ⊕ M(i, j) ⊗ C(i, j) with an exact witness.
pub fn filtration_decomposition(dim: usize, chain1: &[Subspace], chain2: &[Subspace]) -> Result<Decomposition> {
    let m = filtration_representation(dim, chain1, chain2)?;
    let (_, blocks) = decompose_filtration_pair(dim, chain1, chain2)?;
    let (n, k) = (chain1.len(), chain2.len());
    let q = m.quiver_arc().clone();
    let mut spaces: Vec<Subspace> = chain1.to_vec();
    spaces.push(Subspace::full(dim));
    spaces.extend(chain2.iter().rev().cloned());
    let nv = q.vertex_count();
    let mut cols: Vec<Vec<Vector>> = vec![Vec::new(); nv];
    let mut summands = Vec::new();
    for ((i, j), vecs) in blocks {
        // positions i−1 ..= n on the left, and n ..= n + m + 1 − j on the right
        let support: Vec<usize> = ((i - 1)..=(n + k + 1 - j)).collect();
        for b in &vecs {
            for &v in &support {
                let coords = spaces[v].basis().solve(b)?.ok_or_else(|| Error::Internal("block vector outside U".into()))?;
                cols[v].push(coords);
            }
            summands.push(Summand {
                kind: SummandKind::Thin(support.clone()),
                model: rep::thin_on(&q, &quiver::indicator(nv, &support)),
            });
        }
    }
    let witness = (0..nv).map(|v| Matrix::from_columns(m.dim(v), &cols[v])).collect();
    Ok(Decomposition { summands, witness })
}
