//! Representations of quivers over the rationals, homomorphisms, and the standard
//! constructions (thin, projective/injective, band, four-subspace embedding, reflections).

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::{rat, Matrix, Rational, Subspace};
use crate::quiver::{self, euler_form, ClassTag, DimVector, Family, Quiver};

#[derive(Clone)]
pub struct Representation {
    quiver: Arc<Quiver>,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

impl PartialEq for Representation {
    fn eq(&self, other: &Self) -> bool {
        self.same_quiver(other) && self.dims == other.dims && self.maps == other.maps
    }
}

impl Eq for Representation {}

impl fmt::Debug for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rep{:?}", self.dims)?;
        for (a, m) in self.quiver.arrows().iter().zip(&self.maps) {
            write!(f, " {}={:?}", a.id, m)?;
        }
        Ok(())
    }
}

/// A morphism f = (f_x): one matrix of shape (dim target_x) × (dim source_x) per vertex.
pub type Morphism = Vec<Matrix>;

impl Representation {
    pub fn new(quiver: Arc<Quiver>, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Self> {
        if dims.len() != quiver.vertex_count() {
            return Err(Error::DimensionMismatch("one dimension per vertex".into()));
        }
        if maps.len() != quiver.arrow_count() {
            return Err(Error::DimensionMismatch("one matrix per arrow".into()));
        }
        for (a, m) in quiver.arrows().iter().zip(&maps) {
            if m.shape() != (dims[a.target], dims[a.source]) {
                return Err(Error::DimensionMismatch(format!(
                    "arrow {} needs a {}x{} matrix, got {}x{}",
                    a.id,
                    dims[a.target],
                    dims[a.source],
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(Representation { quiver, dims, maps })
    }

    pub fn zero(quiver: Arc<Quiver>) -> Self {
        let dims = vec![0; quiver.vertex_count()];
        let maps = vec![Matrix::zeros(0, 0); quiver.arrow_count()];
        Representation { quiver, dims, maps }
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn quiver_arc(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn same_quiver(&self, other: &Representation) -> bool {
        Arc::ptr_eq(&self.quiver, &other.quiver) || *self.quiver == *other.quiver
    }

    pub fn dim(&self, v: usize) -> usize {
        self.dims[v]
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_vector(&self) -> DimVector {
        self.dims.iter().map(|&d| d as i64).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn map(&self, a: usize) -> &Matrix {
        &self.maps[a]
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.dims.len()).filter(|&v| self.dims[v] > 0).collect()
    }

    pub fn is_thin(&self) -> bool {
        self.dims.iter().all(|&d| d <= 1)
    }

    /// The same data on an equal quiver object (used to unify Arc identities).
    pub fn on_quiver(&self, q: Arc<Quiver>) -> Result<Representation> {
        if *q != *self.quiver {
            return Err(Error::QuiverMismatch);
        }
        Ok(Representation { quiver: q, dims: self.dims.clone(), maps: self.maps.clone() })
    }

    /// Change of basis: columns of `bases[x]` form the new basis of M_x. Returns N with
    /// N_α = B_t⁻¹ M_α B_s, so that B is an isomorphism N → M.
    pub fn conjugate(&self, bases: &[Matrix]) -> Result<Representation> {
        let mut inv = Vec::with_capacity(bases.len());
        for (x, b) in bases.iter().enumerate() {
            if b.shape() != (self.dims[x], self.dims[x]) {
                return Err(Error::DimensionMismatch(format!("basis at vertex {x} has wrong shape")));
            }
            inv.push(b.inverse().ok_or_else(|| Error::Precondition(format!("basis at vertex {x} is singular")))?);
        }
        let maps = self
            .quiver
            .arrows()
            .iter()
            .zip(&self.maps)
            .map(|(a, m)| &(&inv[a.target] * m) * &bases[a.source])
            .collect();
        Ok(Representation { quiver: self.quiver.clone(), dims: self.dims.clone(), maps })
    }

    /// Subrepresentation on invariant subspaces given by basis columns `bases[x]`; the
    /// inclusion is then the morphism (bases[x]).
    pub fn subrepresentation(&self, bases: &[Matrix]) -> Result<Representation> {
        let dims: Vec<usize> = bases.iter().map(|b| b.cols()).collect();
        let mut maps = Vec::new();
        for (a, m) in self.quiver.arrows().iter().zip(&self.maps) {
            let img = m * &bases[a.source];
            let sol = bases[a.target]
                .solve_matrix(&img)?
                .ok_or_else(|| Error::Precondition(format!("subspaces not invariant under {}", a.id)))?;
            maps.push(sol);
        }
        Representation::new(self.quiver.clone(), dims, maps)
    }

    /// Quotient by an invariant subspace family `sub[x]`; `complement[x]` spans a
    /// complement. Returns the quotient together with the projection matrices.
    pub fn quotient(&self, sub: &[Matrix]) -> Result<(Representation, Morphism)> {
        let n = self.quiver.vertex_count();
        let mut proj = Vec::with_capacity(n);
        let mut lift = Vec::with_capacity(n);
        for x in 0..n {
            let s = Subspace::from_basis_matrix(&sub[x]);
            let comp = s.standard_complement();
            let full = Matrix::hstack(self.dims[x], &[&sub[x], &Matrix::from_columns(self.dims[x], &comp)]);
            let inv = full
                .inverse()
                .ok_or_else(|| Error::Precondition(format!("dependent basis at vertex {x}")))?;
            let k = sub[x].cols();
            let rows: Vec<usize> = (k..self.dims[x]).collect();
            proj.push(inv.select_rows(&rows));
            lift.push(Matrix::from_columns(self.dims[x], &comp));
        }
        let dims: Vec<usize> = proj.iter().map(|p| p.rows()).collect();
        let maps = self
            .quiver
            .arrows()
            .iter()
            .zip(&self.maps)
            .map(|(a, m)| &(&proj[a.target] * m) * &lift[a.source])
            .collect();
        Ok((Representation::new(self.quiver.clone(), dims, maps)?, proj))
    }
}

// ---------------------------------------------------------------------------
// constructors

/// S(x).
pub fn simple(q: &Arc<Quiver>, x: usize) -> Representation {
    thin_on(q, &quiver::unit(q.vertex_count(), x))
}

/// Thin representation with the given 0/1 dimension vector: identity on arrows inside
/// the support, zero elsewhere (no connectivity check).
pub fn thin_on(q: &Arc<Quiver>, indicator: &[i64]) -> Representation {
    let dims: Vec<usize> = indicator.iter().map(|&d| d as usize).collect();
    let maps = q
        .arrows()
        .iter()
        .map(|a| {
            let (t, s) = (dims[a.target], dims[a.source]);
            if t == 1 && s == 1 {
                Matrix::identity(1)
            } else {
                Matrix::zeros(t, s)
            }
        })
        .collect();
    Representation { quiver: q.clone(), dims, maps }
}

/// M(Q′) for a connected vertex set Q′.
pub fn thin_rep(q: &Arc<Quiver>, set: &[usize]) -> Result<Representation> {
    if set.is_empty() {
        return Err(Error::Precondition("empty support".into()));
    }
    if set.iter().any(|&v| v >= q.vertex_count()) {
        return Err(Error::Precondition("vertex outside the quiver".into()));
    }
    let (sub, _) = q.full_subquiver(set);
    if !sub.is_connected() {
        return Err(Error::Precondition("support is not connected".into()));
    }
    Ok(thin_on(q, &quiver::indicator(q.vertex_count(), set)))
}

pub fn projective(q: &Arc<Quiver>, x: usize) -> Result<Representation> {
    if !q.is_forest() {
        return Err(Error::WrongType("projectives are built for tree quivers".into()));
    }
    let ind: Vec<i64> = q.reachable_from(x).iter().map(|&b| b as i64).collect();
    Ok(thin_on(q, &ind))
}

pub fn injective(q: &Arc<Quiver>, x: usize) -> Result<Representation> {
    if !q.is_forest() {
        return Err(Error::WrongType("injectives are built for tree quivers".into()));
    }
    let ind: Vec<i64> = q.reaching(x).iter().map(|&b| b as i64).collect();
    Ok(thin_on(q, &ind))
}

/// Jordan block J_n(λ).
pub fn jordan_block(n: usize, lambda: &Rational) -> Matrix {
    let mut m = Matrix::scalar(n, lambda.clone());
    for i in 0..n.saturating_sub(1) {
        m.set(i, i + 1, rat(1));
    }
    m
}

/// Band representation M(λ, n) on a quiver with cyclic underlying graph: k^n everywhere,
/// identity maps except J_n(λ) on the arrow `alpha`.
pub fn band_rep(q: &Arc<Quiver>, alpha: usize, lambda: &Rational, n: usize) -> Result<Representation> {
    if *lambda == 0 {
        return Err(Error::Precondition("λ must be nonzero".into()));
    }
    match quiver::classify(q)?.tag {
        ClassTag::Euclidean(Family::A, k) if k >= 1 => {}
        t => return Err(Error::WrongType(format!("band representations need a cycle, got {t}"))),
    }
    let dims = vec![n; q.vertex_count()];
    let maps = (0..q.arrow_count())
        .map(|a| if a == alpha { jordan_block(n, lambda) } else { Matrix::identity(n) })
        .collect();
    Representation::new(q.clone(), dims, maps)
}

/// ζ(V, φ): the four subspaces V×0, 0×V, Γ(1), Γ(φ) of V×V.
pub fn zeta_embedding(phi: &Matrix) -> Result<Representation> {
    if !phi.is_square() {
        return Err(Error::DimensionMismatch("φ must be square".into()));
    }
    let d = phi.rows();
    let q = Arc::new(quiver::four_subspace());
    let id = Matrix::identity(d);
    let zero = Matrix::zeros(d, d);
    let maps = vec![
        Matrix::vstack(d, &[&id, &zero]),
        Matrix::vstack(d, &[&zero, &id]),
        Matrix::vstack(d, &[&id, &id]),
        Matrix::vstack(d, &[&id, phi]),
    ];
    Representation::new(q, vec![2 * d, d, d, d, d], maps)
}

pub fn direct_sum(parts: &[Representation]) -> Result<Representation> {
    let first = parts.first().ok_or_else(|| Error::Precondition("empty direct sum".into()))?;
    if parts.iter().any(|p| !p.same_quiver(first)) {
        return Err(Error::QuiverMismatch);
    }
    let q = first.quiver.clone();
    let n = q.vertex_count();
    let dims: Vec<usize> = (0..n).map(|v| parts.iter().map(|p| p.dims[v]).sum()).collect();
    let maps = (0..q.arrow_count())
        .map(|a| {
            let blocks: Vec<&Matrix> = parts.iter().map(|p| &p.maps[a]).collect();
            Matrix::block_diag(&blocks)
        })
        .collect();
    Ok(Representation { quiver: q, dims, maps })
}

/// Restriction to the full subquiver on `vertices` (in that order).
pub fn restrict(m: &Representation, vertices: &[usize]) -> Representation {
    let (sub, origin) = m.quiver.full_subquiver(vertices);
    let dims = vertices.iter().map(|&v| m.dims[v]).collect();
    let maps = origin.iter().map(|&a| m.maps[a].clone()).collect();
    Representation { quiver: Arc::new(sub), dims, maps }
}

/// Extends a representation of a full subquiver by zero; `vertices[i]` is the vertex of
/// `q` corresponding to vertex i of the subquiver.
pub fn extend_by_zero(m: &Representation, q: &Arc<Quiver>, vertices: &[usize]) -> Result<Representation> {
    let mut dims = vec![0; q.vertex_count()];
    for (i, &v) in vertices.iter().enumerate() {
        dims[v] = m.dims[i];
    }
    let mut maps = Vec::new();
    for a in q.arrows() {
        let sub_arrow = m.quiver.arrow_index(&a.id);
        let in_sub = vertices.contains(&a.source) && vertices.contains(&a.target);
        match (in_sub, sub_arrow) {
            (true, Some(k)) => maps.push(m.maps[k].clone()),
            _ => maps.push(Matrix::zeros(dims[a.target], dims[a.source])),
        }
    }
    Representation::new(q.clone(), dims, maps)
}

// ---------------------------------------------------------------------------
// homomorphisms

#[derive(Clone, Debug)]
pub struct HomBasis {
    pub basis: Vec<Morphism>,
}

impl HomBasis {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

fn hom_layout(m: &Representation, n: &Representation) -> (Vec<usize>, usize) {
    let mut offsets = Vec::with_capacity(m.dims.len());
    let mut total = 0;
    for v in 0..m.dims.len() {
        offsets.push(total);
        total += n.dims[v] * m.dims[v];
    }
    (offsets, total)
}

/// The linear system whose kernel is Hom(m, n); unknowns are the entries of the f_x.
fn hom_system(m: &Representation, n: &Representation) -> (Matrix, Vec<usize>, usize) {
    let (offsets, total) = hom_layout(m, n);
    let q = &m.quiver;
    let rows: usize = q.arrows().iter().map(|a| n.dims[a.target] * m.dims[a.source]).sum();
    let mut sys = Matrix::zeros(rows, total);
    let mut r = 0;
    for (k, a) in q.arrows().iter().enumerate() {
        let (s, t) = (a.source, a.target);
        let (ms, mt, ns, nt) = (m.dims[s], m.dims[t], n.dims[s], n.dims[t]);
        let (ma, na) = (&m.maps[k], &n.maps[k]);
        // (N_α f_s − f_t M_α)[i][j]
        for i in 0..nt {
            for j in 0..ms {
                for l in 0..ns {
                    let c = na.get(i, l);
                    if *c != 0 {
                        let col = offsets[s] + l * ms + j;
                        let v = sys.get(r, col) + c;
                        sys.set(r, col, v);
                    }
                }
                for l in 0..mt {
                    let c = ma.get(l, j);
                    if *c != 0 {
                        let col = offsets[t] + i * mt + l;
                        let v = sys.get(r, col) - c;
                        sys.set(r, col, v);
                    }
                }
                r += 1;
            }
        }
    }
    (sys, offsets, total)
}

fn unpack(m: &Representation, n: &Representation, offsets: &[usize], v: &[Rational]) -> Morphism {
    (0..m.dims.len())
        .map(|x| {
            let (r, c) = (n.dims[x], m.dims[x]);
            Matrix::from_data(r, c, v[offsets[x]..offsets[x] + r * c].to_vec()).unwrap()
        })
        .collect()
}

pub fn hom_basis(m: &Representation, n: &Representation) -> Result<HomBasis> {
    if !m.same_quiver(n) {
        return Err(Error::QuiverMismatch);
    }
    let (sys, offsets, _) = hom_system(m, n);
    let ker = sys.kernel();
    let basis = ker.vectors().iter().map(|v| unpack(m, n, &offsets, v)).collect();
    Ok(HomBasis { basis })
}

pub fn hom_dim(m: &Representation, n: &Representation) -> Result<usize> {
    if !m.same_quiver(n) {
        return Err(Error::QuiverMismatch);
    }
    let (sys, _, total) = hom_system(m, n);
    Ok(total - sys.rank())
}

pub fn is_morphism(m: &Representation, n: &Representation, f: &[Matrix]) -> bool {
    if f.len() != m.dims.len() {
        return false;
    }
    if (0..f.len()).any(|x| f[x].shape() != (n.dims[x], m.dims[x])) {
        return false;
    }
    m.quiver.arrows().iter().enumerate().all(|(k, a)| {
        &n.maps[k] * &f[a.source] == &f[a.target] * &m.maps[k]
    })
}

pub fn compose(g: &[Matrix], f: &[Matrix]) -> Morphism {
    g.iter().zip(f).map(|(a, b)| a * b).collect()
}

pub fn identity_morphism(m: &Representation) -> Morphism {
    m.dims.iter().map(|&d| Matrix::identity(d)).collect()
}

pub fn combine(basis: &[Morphism], coeffs: &[Rational]) -> Morphism {
    let mut out: Morphism = basis[0].iter().map(|b| Matrix::zeros(b.rows(), b.cols())).collect();
    for (f, c) in basis.iter().zip(coeffs) {
        if *c == 0 {
            continue;
        }
        for (o, fx) in out.iter_mut().zip(f) {
            *o = &*o + &fx.scale(c);
        }
    }
    out
}

/// dim Ext¹(m, n) = dim Hom(m, n) − ⟨dim m, dim n⟩ (hereditary path algebras).
pub fn ext1_dim(m: &Representation, n: &Representation) -> Result<usize> {
    if !m.quiver.is_acyclic() {
        return Err(Error::InvalidQuiver("Ext¹ via the Euler form needs an acyclic quiver".into()));
    }
    let h = hom_dim(m, n)? as i64;
    let e = h - euler_form(&m.quiver, &m.dim_vector(), &n.dim_vector());
    if e < 0 {
        return Err(Error::Internal(format!("negative Ext¹ dimension {e}")));
    }
    Ok(e as usize)
}

pub fn is_brick(m: &Representation) -> Result<bool> {
    if m.is_zero() {
        return Err(Error::ZeroRepresentation);
    }
    Ok(hom_dim(m, m)? == 1)
}

/// Suffices for indecomposability: End(m)/rad has dimension 1. The radical is the kernel
/// of the trace form (a, b) ↦ tr_M(ab), which is exact in characteristic zero. A local
/// endomorphism ring whose residue algebra is a proper extension field of the rationals
/// is reported as decomposable.
pub fn is_indecomposable(m: &Representation) -> Result<bool> {
    if m.is_zero() {
        return Err(Error::ZeroRepresentation);
    }
    let end = hom_basis(m, m)?.basis;
    let k = end.len();
    if k == 1 {
        return Ok(true);
    }
    let trace = |f: &Morphism| {
        let mut s = rat(0);
        for fx in f {
            s += fx.trace();
        }
        s
    };
    let mut form = Matrix::zeros(k, k);
    for i in 0..k {
        for j in 0..k {
            form.set(i, j, trace(&compose(&end[i], &end[j])));
        }
    }
    Ok(k - form.kernel().dim() == 1)
}

fn is_iso_morphism(f: &[Matrix]) -> bool {
    f.iter().all(|x| x.is_invertible())
}

/// Searches Hom(m, n) for an isomorphism. Candidates are small integer combinations of
/// a Hom basis followed by seeded random combinations with coefficients in ±10⁴; if an
/// isomorphism exists, a random combination misses it with probability at most
/// (total dimension)/20001 per trial.
pub fn is_isomorphic(m: &Representation, n: &Representation) -> Result<Option<Morphism>> {
    if !m.same_quiver(n) {
        return Err(Error::QuiverMismatch);
    }
    if m.dims != n.dims {
        return Ok(None);
    }
    if m.is_zero() {
        return Ok(Some(identity_morphism(m)));
    }
    if m == n {
        return Ok(Some(identity_morphism(m)));
    }
    let hb = hom_basis(m, n)?.basis;
    let k = hb.len();
    if k == 0 {
        return Ok(None);
    }
    if k == 1 {
        return Ok(is_iso_morphism(&hb[0]).then(|| hb[0].clone()));
    }
    if hom_dim(m, m)? != k || hom_dim(n, n)? != k {
        return Ok(None);
    }
    for f in &hb {
        if is_iso_morphism(f) {
            return Ok(Some(f.clone()));
        }
    }
    // sums of basis elements with coefficients in {1, 2, -1}
    let mut coeffs = vec![rat(1); k];
    let f = combine(&hb, &coeffs);
    if is_iso_morphism(&f) {
        return Ok(Some(f));
    }
    for (i, c) in coeffs.iter_mut().enumerate() {
        *c = rat(if i % 2 == 0 { 2 } else { -1 });
    }
    let f = combine(&hb, &coeffs);
    if is_iso_morphism(&f) {
        return Ok(Some(f));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    for _ in 0..40 {
        let c: Vec<Rational> = (0..k).map(|_| rat(rng.gen_range(-10_000..=10_000))).collect();
        let f = combine(&hb, &c);
        if is_iso_morphism(&f) {
            return Ok(Some(f));
        }
    }
    Ok(None)
}

// ---------------------------------------------------------------------------
// reflection functors

/// C⁺ at a sink or C⁻ at a source; the result lives on the quiver reflected at c.
pub fn reflection(m: &Representation, c: usize) -> Result<Representation> {
    let q = &m.quiver;
    let new_q = Arc::new(q.reflected_at(c));
    if q.is_sink(c) {
        let ins = q.in_arrows(c);
        let blocks: Vec<&Matrix> = ins.iter().map(|&a| &m.maps[a]).collect();
        let total: usize = ins.iter().map(|&a| m.dims[q.arrow(a).source]).sum();
        let big = if blocks.is_empty() { Matrix::zeros(m.dims[c], 0) } else { Matrix::hstack(m.dims[c], &blocks) };
        let ker = big.kernel();
        let kb = ker.basis().clone();
        let mut dims = m.dims.clone();
        dims[c] = kb.cols();
        let mut maps = m.maps.clone();
        let mut off = 0;
        for &a in &ins {
            let s = q.arrow(a).source;
            let rows: Vec<usize> = (off..off + m.dims[s]).collect();
            maps[a] = kb.select_rows(&rows);
            off += m.dims[s];
        }
        debug_assert_eq!(off, total);
        Representation::new(new_q, dims, maps)
    } else if q.is_source(c) {
        let outs = q.out_arrows(c);
        let total: usize = outs.iter().map(|&a| m.dims[q.arrow(a).target]).sum();
        let blocks: Vec<&Matrix> = outs.iter().map(|&a| &m.maps[a]).collect();
        let big = Matrix::vstack(m.dims[c], &blocks);
        let img = big.image();
        let comp = img.standard_complement();
        let full = Matrix::hstack(total, &[img.basis(), &Matrix::from_columns(total, &comp)]);
        let inv = full.inverse().ok_or_else(|| Error::Internal("complement is not independent".into()))?;
        let rows: Vec<usize> = (img.dim()..total).collect();
        let proj = inv.select_rows(&rows);
        let mut dims = m.dims.clone();
        dims[c] = proj.rows();
        let mut maps = m.maps.clone();
        let mut off = 0;
        for &a in &outs {
            let t = q.arrow(a).target;
            let cols: Vec<usize> = (off..off + m.dims[t]).collect();
            maps[a] = proj.select_cols(&cols);
            off += m.dims[t];
        }
        Representation::new(new_q, dims, maps)
    } else {
        Err(Error::NotSinkOrSource(q.label(c).to_string()))
    }
}

/// Simple reflection s_c of a dimension vector.
pub fn reflect_vector(q: &Quiver, d: &[i64], c: usize) -> DimVector {
    let mut e = d.to_vec();
    let mut s = 0;
    for a in q.arrows() {
        if a.source == c && a.target != c {
            s += d[a.target];
        } else if a.target == c && a.source != c {
            s += d[a.source];
        }
    }
    e[c] = s - d[c];
    e
}

/// Indecomposable with dimension vector d over a Dynkin quiver: reflect at the sink of
/// smallest index until d becomes simple, then apply C⁻ back up.
pub fn indec_from_root(q: &Arc<Quiver>, d: &[i64]) -> Result<Representation> {
    if d.len() != q.vertex_count() || d.iter().any(|&x| x < 0) || d.iter().all(|&x| x == 0) {
        return Err(Error::NotARoot(format!("{d:?}")));
    }
    if !quiver::is_dynkin(q) {
        return Err(Error::NotDynkin("root construction needs a Dynkin quiver".into()));
    }
    if euler_form(q, d, d) != 1 {
        return Err(Error::NotARoot(format!("{d:?}")));
    }
    // support must be connected for a root
    let supp: Vec<usize> = (0..d.len()).filter(|&v| d[v] > 0).collect();
    let (sub, _) = q.full_subquiver(&supp);
    if !sub.is_connected() {
        return Err(Error::NotARoot(format!("{d:?}")));
    }
    if !q.is_connected() {
        let comp = q.components().into_iter().find(|c| c.contains(&supp[0])).unwrap();
        let (cq, _) = q.full_subquiver(&comp);
        let cd: Vec<i64> = comp.iter().map(|&v| d[v]).collect();
        let m = indec_from_root(&Arc::new(cq), &cd)?;
        return extend_by_zero(&m, q, &comp);
    }
    let mut path = Vec::new();
    let mut cur_q = (**q).clone();
    let mut cur = d.to_vec();
    let limit = 4 * q.vertex_count() * q.vertex_count() + 8;
    let base = loop {
        if path.len() > limit {
            return Err(Error::NotARoot(format!("{d:?}")));
        }
        let c = (0..cur_q.vertex_count())
            .find(|&v| cur_q.is_sink(v))
            .ok_or_else(|| Error::Internal("acyclic quiver without sink".into()))?;
        if cur[c] > 0 && cur.iter().enumerate().all(|(v, &x)| v == c || x == 0) {
            if cur[c] != 1 {
                return Err(Error::NotARoot(format!("{d:?}")));
            }
            break simple(&Arc::new(cur_q.clone()), c);
        }
        let next = reflect_vector(&cur_q, &cur, c);
        if next.iter().any(|&x| x < 0) {
            return Err(Error::NotARoot(format!("{d:?}")));
        }
        path.push(c);
        cur = next;
        cur_q = cur_q.reflected_at(c);
    };
    let mut rep = base;
    for &c in path.iter().rev() {
        rep = reflection(&rep, c)?;
    }
    rep.on_quiver(q.clone())
}

// ---------------------------------------------------------------------------
// decompositions

/// What a summand is, as far as the producing algorithm knows.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SummandKind {
    /// Thin with the given (sorted, connected) support.
    Thin(Vec<usize>),
    /// r-twin on Q(n): dim 2 at vertices 3..3+r−1 (labels), nonzero up to label `reach`.
    Twin { r: usize, reach: usize },
    /// Identified only by its dimension vector.
    Root(DimVector),
}

impl SummandKind {
    pub fn describe(&self, q: &Quiver) -> String {
        match self {
            SummandKind::Thin(s) => {
                let l: Vec<&str> = s.iter().map(|&v| q.label(v)).collect();
                format!("thin {{{}}}", l.join(","))
            }
            SummandKind::Twin { r, reach } => format!("twin r={r} reach={reach}"),
            SummandKind::Root(d) => {
                let l: Vec<String> = d.iter().map(|x| x.to_string()).collect();
                format!("root ({})", l.join(","))
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct Summand {
    pub kind: SummandKind,
    pub model: Representation,
}

/// A list of indecomposable summands with an isomorphism witness: the columns of
/// `witness[x]` are a basis of M_x, grouped by summand in order, such that
/// M_α W_s = W_t (⊕ models)_α.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub summands: Vec<Summand>,
    pub witness: Vec<Matrix>,
}

impl Decomposition {
    pub fn reassembled(&self, q: &Arc<Quiver>) -> Result<Representation> {
        if self.summands.is_empty() {
            return Ok(Representation::zero(q.clone()));
        }
        let models: Vec<Representation> = self.summands.iter().map(|s| s.model.clone()).collect();
        direct_sum(&models)
    }

    /// Exact check: the witness is invertible and intertwines m with the direct sum.
    pub fn verify(&self, m: &Representation) -> bool {
        let Ok(sum) = self.reassembled(m.quiver_arc()) else { return false };
        if !sum.same_quiver(m) || sum.dims != m.dims {
            return false;
        }
        self.witness.iter().all(|w| w.is_invertible()) && is_morphism(&sum, m, &self.witness)
    }

    pub fn multiset(&self) -> BTreeMap<SummandKind, usize> {
        let mut out = BTreeMap::new();
        for s in &self.summands {
            *out.entry(s.kind.clone()).or_insert(0) += 1;
        }
        out
    }

    /// Sorts summands by kind, permuting witness columns accordingly.
    pub fn canonicalize(&mut self) {
        let n = self.witness.len();
        let mut offsets = vec![vec![0usize; n]];
        for s in &self.summands {
            let last = offsets.last().unwrap().clone();
            offsets.push((0..n).map(|x| last[x] + s.model.dims[x]).collect());
        }
        let mut order: Vec<usize> = (0..self.summands.len()).collect();
        order.sort_by(|&a, &b| self.summands[a].kind.cmp(&self.summands[b].kind));
        let witness = (0..n)
            .map(|x| {
                let cols: Vec<usize> =
                    order.iter().flat_map(|&i| offsets[i][x]..offsets[i + 1][x]).collect();
                self.witness[x].select_cols(&cols)
            })
            .collect();
        self.summands = order.into_iter().map(|i| self.summands[i].clone()).collect();
        self.witness = witness;
    }

    /// Concatenates decompositions of the parts of m = ⊕ parts given by column blocks.
    pub fn join(parts: Vec<(Decomposition, Vec<Matrix>)>, n: usize) -> Decomposition {
        let mut summands = Vec::new();
        let mut cols: Vec<Vec<crate::linalg::Vector>> = vec![Vec::new(); n];
        let mut rows = vec![0usize; n];
        for (d, embed) in parts {
            for x in 0..n {
                rows[x] = embed[x].rows();
                let w = &embed[x] * &d.witness[x];
                cols[x].extend(w.columns());
            }
            summands.extend(d.summands);
        }
        let witness = (0..n).map(|x| Matrix::from_columns(rows[x], &cols[x])).collect();
        Decomposition { summands, witness }
    }
}

/// Kind for an indecomposable: thin if its dimension vector is 0/1, else by dimensions.
pub fn kind_of(m: &Representation) -> SummandKind {
    if m.is_thin() {
        SummandKind::Thin(m.support())
    } else {
        SummandKind::Root(m.dim_vector())
    }
}
