//! Type D: the reduction of Q(n) to Q(n−1), twin representations, subcategory
//! classification on Q(n), and a general splitter for arbitrary Dynkin quivers.
//!
//! Q(n) uses the layout of [`quiver::type_d`]: vertex indices 0, 1 are the short arms
//! (labels 1, 2), index 2 is the branch vertex 3, and the long arm n → … → 4 → 3 occupies
//! indices 2..n.

use std::sync::Arc;

use crate::decompose_a::{self, conify_on_arm};
use crate::error::{Error, Result};
use crate::knit;
use crate::linalg::{rat, Matrix, Rational, Vector};
use crate::quiver::{self, Arm, DimVector, Quiver};
use crate::rep::{
    self, compose, hom_basis, hom_dim, is_brick, Decomposition, Morphism, Representation, Summand,
    SummandKind,
};

/// Returns n when `q` has exactly the arrow layout of Q(n) (labels and ids are free).
pub fn qn_rank(q: &Quiver) -> Result<usize> {
    let n = q.vertex_count();
    if n < 3 {
        return Err(Error::WrongType(format!("Q(n) needs at least 3 vertices, got {n}")));
    }
    let model = quiver::type_d(n);
    let same = q.arrow_count() == model.arrow_count()
        && q.arrows().iter().zip(model.arrows()).all(|(a, b)| a.source == b.source && a.target == b.target);
    if same {
        Ok(n)
    } else {
        Err(Error::WrongType("quiver is not Q(n) in its standard orientation".into()))
    }
}

fn qn(n: usize) -> Arc<Quiver> {
    Arc::new(quiver::type_d(n))
}

/// [π₁; π₂]: M₃ → M₁ ⊕ M₂.
fn pi_stack(m: &Representation, a1: usize, a2: usize) -> Matrix {
    Matrix::vstack(m.dim(2), &[m.map(a1), m.map(a2)])
}

/// The B̌ condition: [π₁; π₂] is bijective.
pub fn in_b_check(m: &Representation) -> Result<bool> {
    qn_rank(m.quiver())?;
    let p = pi_stack(m, 0, 1);
    Ok(p.is_square() && p.is_invertible())
}

fn cols(m: &Matrix, range: std::ops::Range<usize>) -> Matrix {
    m.select_cols(&range.collect::<Vec<_>>())
}

// ---------------------------------------------------------------------------
// splitting into B̌ and thin parts

/// M ≅ b_part ⊕ (thin summands). `b_basis[x]` spans the B̌ part inside M_x, with
/// b_part its restriction; `thin.witness` spans the complement.
#[derive(Clone, Debug)]
pub struct BSplit {
    pub b_part: Representation,
    pub b_basis: Vec<Matrix>,
    pub thin: Decomposition,
}

impl BSplit {
    pub fn witness(&self) -> Vec<Matrix> {
        self.b_basis
            .iter()
            .zip(&self.thin.witness)
            .map(|(b, t)| Matrix::hstack(b.rows(), &[b, t]))
            .collect()
    }

    pub fn verify(&self, m: &Representation) -> bool {
        let mut parts = vec![self.b_part.clone()];
        parts.extend(self.thin.summands.iter().map(|s| s.model.clone()));
        let Ok(sum) = rep::direct_sum(&parts) else { return false };
        let w = self.witness();
        w.iter().all(Matrix::is_invertible) && rep::is_morphism(&sum, m, &w)
    }
}

/// Thin summands of a representation supported on the long arm, with witness columns
/// mapped into M by `basis` (columns in M coordinates per vertex).
fn long_arm_thin(part: &Representation, basis: &[Matrix], q: &Arc<Quiver>) -> Result<Decomposition> {
    let n = q.vertex_count();
    let arm: Vec<usize> = (2..n).collect();
    let line = rep::restrict(part, &arm);
    let d = decompose_a::decompose_type_a(&line)?.decomposition;
    let mut summands = Vec::new();
    for s in d.summands {
        let model = rep::extend_by_zero(&s.model, q, &arm)?;
        summands.push(Summand { kind: rep::kind_of(&model), model });
    }
    let witness = (0..n)
        .map(|x| match arm.iter().position(|&v| v == x) {
            Some(i) => &basis[x] * &d.witness[i],
            None => Matrix::zeros(basis[x].rows(), 0),
        })
        .collect();
    Ok(Decomposition { summands, witness })
}

/// The path a ← 3 ← 4 ← … ← n with M_a = M₁ ⊕ M₂ (or b → 3 ← … with N_b = U₁ ⊕ U₂
/// when `into` is false), as a representation of A_{n−1} together with its arm.
fn branch_line(m: &Representation, a_dim: usize, a_map: Matrix, into: bool) -> Result<(Representation, Arm)> {
    let n = m.quiver().vertex_count();
    let mut q = quiver::type_a(n - 1);
    if !into {
        let mut flags = vec![false; q.arrow_count()];
        flags[0] = true;
        q = q.with_reversed(&flags);
    }
    let mut dims = vec![a_dim];
    dims.extend((2..n).map(|x| m.dim(x)));
    let mut maps = vec![a_map];
    maps.extend((2..n - 1).map(|k| m.map(k).clone()));
    let line = Representation::new(Arc::new(q), dims, maps)?;
    Ok((line, Arm { vertices: (0..n - 1).collect() }))
}

/// Splits M on Q(n), n ≥ 4, as a B̌ part plus thin summands.
pub fn split_b_and_thin(m: &Representation) -> Result<BSplit> {
    let n = qn_rank(m.quiver())?;
    if n < 4 {
        return Err(Error::Precondition("the B̌ splitting needs n ≥ 4".into()));
    }
    let q = m.quiver_arc().clone();
    let mut thin_parts: Vec<Decomposition> = Vec::new();

    // simples at 1 and 2 from the cokernels of π₁, π₂
    let mut sub: Vec<Matrix> = (0..n).map(|x| Matrix::identity(m.dim(x))).collect();
    for i in 0..2 {
        let img = m.map(i).image();
        let comp = img.standard_complement();
        let s = rep::simple(&q, i);
        let mut summands = Vec::new();
        let mut w: Vec<Matrix> = (0..n).map(|x| Matrix::zeros(m.dim(x), 0)).collect();
        for _ in &comp {
            summands.push(Summand { kind: SummandKind::Thin(vec![i]), model: s.clone() });
        }
        w[i] = Matrix::from_columns(m.dim(i), &comp);
        thin_parts.push(Decomposition { summands, witness: w });
        sub[i] = img.basis().clone();
    }
    let m1 = m.subrepresentation(&sub)?;

    // conify a ← 3 ← … ← n at a
    let (d1, d2) = (m1.dim(0), m1.dim(1));
    let (line, arm) = branch_line(&m1, d1 + d2, pi_stack(&m1, 0, 1), true)?;
    let split = conify_on_arm(&line, &arm)?;
    let mut con: Vec<Matrix> = vec![Matrix::identity(d1), Matrix::identity(d2)];
    let mut off: Vec<Matrix> = vec![Matrix::zeros(d1, 0), Matrix::zeros(d2, 0)];
    for x in 2..n {
        let w = &split.witness[x - 1];
        let k = split.conical_part.dim(x - 1);
        con.push(cols(w, 0..k));
        off.push(cols(w, k..w.cols()));
    }
    let rest = m1.subrepresentation(&off)?;
    let rest_basis: Vec<Matrix> = (0..n).map(|x| &sub[x] * &off[x]).collect();
    thin_parts.push(long_arm_thin(&rest, &rest_basis, &q)?);
    let mc = m1.subrepresentation(&con)?;
    let base_c: Vec<Matrix> = (0..n).map(|x| &sub[x] * &con[x]).collect();

    // U_i = ker π_i, then conify b → 3 ← … ← n at b
    let a = mc.map(0).clone();
    let b = mc.map(1).clone();
    let u1 = a.kernel();
    let u2 = b.kernel();
    let d3 = mc.dim(2);
    let ub = Matrix::hstack(d3, &[u1.basis(), u2.basis()]);
    let (line, arm) = branch_line(&mc, ub.cols(), ub, false)?;
    let split = conify_on_arm(&line, &arm)?;
    let mut bcols: Vec<Matrix> = vec![Matrix::zeros(mc.dim(0), 0), Matrix::zeros(mc.dim(1), 0)];
    let mut tcols: Vec<Matrix> = bcols.clone();
    for x in 2..n {
        let w = &split.witness[x - 1];
        let k = split.conical_part.dim(x - 1);
        bcols.push(cols(w, 0..k));
        tcols.push(cols(w, k..w.cols()));
    }
    bcols[0] = &a * u2.basis();
    bcols[1] = &b * u1.basis();

    // the part N″ away from b: chains [3, k], completed by π₁, π₂ at the short arms
    tcols[0] = &a * &tcols[2];
    tcols[1] = &b * &tcols[2];
    let tpart = mc.subrepresentation(&tcols)?;
    let tbasis: Vec<Matrix> = (0..n).map(|x| &base_c[x] * &tcols[x]).collect();
    let arm_dec = long_arm_thin(&tpart, &tbasis, &q)?;
    let mut summands = Vec::new();
    let mut w1 = Vec::new();
    let mut w2 = Vec::new();
    for (s, c3) in arm_dec.summands.iter().zip(arm_dec.witness[2].columns()) {
        let mut support = vec![0, 1];
        support.extend(s.model.support());
        if !s.model.support().contains(&2) {
            return Err(Error::Internal("conical part has a chain missing vertex 3".into()));
        }
        let model = rep::thin_on(&q, &quiver::indicator(n, &support));
        summands.push(Summand { kind: SummandKind::Thin(support), model });
        // c3 is in M coordinates; its images under the original π's
        w1.push(m.map(0).mul_vec(&c3));
        w2.push(m.map(1).mul_vec(&c3));
    }
    let mut twit = arm_dec.witness.clone();
    twit[0] = Matrix::from_columns(m.dim(0), &w1);
    twit[1] = Matrix::from_columns(m.dim(1), &w2);
    thin_parts.push(Decomposition { summands, witness: twit });

    let b_part = mc.subrepresentation(&bcols)?;
    let b_basis: Vec<Matrix> = (0..n).map(|x| &base_c[x] * &bcols[x]).collect();
    let thin = join_columns(thin_parts, m);
    Ok(BSplit { b_part, b_basis, thin })
}

/// Concatenates decompositions whose witnesses are already in M coordinates.
fn join_columns(parts: Vec<Decomposition>, m: &Representation) -> Decomposition {
    let n = m.quiver().vertex_count();
    let ident: Vec<Matrix> = (0..n).map(|x| Matrix::identity(m.dim(x))).collect();
    Decomposition::join(parts.into_iter().map(|d| (d, ident.clone())).collect(), n)
}

// ---------------------------------------------------------------------------
// σ⁺, σ⁻

/// σ⁺: reflection at the sinks 1 and 2; needs π₁, π₂ surjective.
pub fn sigma_plus(m: &Representation) -> Result<Representation> {
    qn_rank(m.quiver())?;
    for i in 0..2 {
        if m.map(i).rank() != m.dim(i) {
            return Err(Error::Precondition(format!("π{} is not surjective; split off S({}) first", i + 1, i + 1)));
        }
    }
    rep::reflection(&rep::reflection(m, 0)?, 1)
}

/// σ⁻: reflection at the sources 1 and 2 of σQ(n); needs μ₁, μ₂ injective.
pub fn sigma_minus(n_rep: &Representation) -> Result<Representation> {
    let q = n_rep.quiver();
    let n = q.vertex_count();
    if n < 3 || !q.is_source(0) || !q.is_source(1) {
        return Err(Error::WrongType("expected σQ(n) with sources 1 and 2".into()));
    }
    for a in q.out_arrows(0).into_iter().chain(q.out_arrows(1)) {
        let s = q.arrow(a).source;
        if n_rep.map(a).rank() != n_rep.dim(s) {
            return Err(Error::Precondition(format!("μ at vertex {} is not injective", s + 1)));
        }
    }
    let r = rep::reflection(&rep::reflection(n_rep, 0)?, 1)?;
    Ok(r)
}

// ---------------------------------------------------------------------------
// η and its inverse

/// η: Rep Q(n−1) → B̌ ⊂ Rep Q(n), putting M₁ ⊕ M₂ at the branch vertex.
pub fn eta(m: &Representation) -> Result<Representation> {
    let k = qn_rank(m.quiver())?;
    let n = k + 1;
    let (d1, d2) = (m.dim(0), m.dim(1));
    let mut dims = vec![d1, d2, d1 + d2];
    dims.extend((2..k).map(|x| m.dim(x)));
    let e1 = Matrix::hstack(d1, &[&Matrix::identity(d1), &Matrix::zeros(d1, d2)]);
    let e2 = Matrix::hstack(d2, &[&Matrix::zeros(d2, d1), &Matrix::identity(d2)]);
    let mut maps = vec![e1, e2, pi_stack(m, 0, 1)];
    maps.extend((2..k - 1).map(|a| m.map(a).clone()));
    Representation::new(qn(n), dims, maps)
}

/// η on morphisms: f ↦ (f₁, f₂, f₁ ⊕ f₂, f₃, …).
pub fn eta_morphism(f: &[Matrix]) -> Morphism {
    let mut out = vec![f[0].clone(), f[1].clone(), Matrix::block_diag(&[&f[0], &f[1]])];
    out.extend(f[2..].iter().cloned());
    out
}

/// η⁻¹: deletes the branch vertex, composing π₁, π₂ with the map 4 → 3.
pub fn eta_inverse(m: &Representation) -> Result<Representation> {
    let n = qn_rank(m.quiver())?;
    if n < 4 {
        return Err(Error::Precondition("η⁻¹ needs n ≥ 4".into()));
    }
    if !in_b_check(m)? {
        return Err(Error::Precondition("[π₁; π₂] is not bijective".into()));
    }
    let mut dims = vec![m.dim(0), m.dim(1)];
    dims.extend((3..n).map(|x| m.dim(x)));
    let gamma = m.map(2);
    let mut maps = vec![m.map(0) * gamma, m.map(1) * gamma];
    maps.extend((3..n - 1).map(|a| m.map(a).clone()));
    Representation::new(qn(n - 1), dims, maps)
}

/// The isomorphism η(η⁻¹(B)) → B: [π₁; π₂]⁻¹ at the branch vertex, identity elsewhere.
pub fn eta_counit(b: &Representation) -> Result<Morphism> {
    let p = pi_stack(b, 0, 1).inverse().ok_or_else(|| Error::Precondition("[π₁; π₂] is not bijective".into()))?;
    Ok((0..b.quiver().vertex_count())
        .map(|x| if x == 2 { p.clone() } else { Matrix::identity(b.dim(x)) })
        .collect())
}

// ---------------------------------------------------------------------------
// decomposition on Q(n)

/// Thin (by support) or Twin{r, reach} with reach the label of the last nonzero vertex.
pub fn d_kind(m: &Representation) -> SummandKind {
    if m.is_thin() {
        return SummandKind::Thin(m.support());
    }
    let d = m.dims();
    if d[0] > 0 && d[1] > 0 {
        let r = d.iter().filter(|&&x| x == 2).count();
        let reach = d.iter().rposition(|&x| x > 0).map_or(0, |i| i + 1);
        return SummandKind::Twin { r, reach };
    }
    SummandKind::Root(m.dim_vector())
}

/// Dimension vector of the r-twin on Q(n) reaching label `reach`.
pub fn twin_dim_vector(n: usize, r: usize, reach: usize) -> DimVector {
    let mut d = vec![0i64; n];
    d[0] = 1;
    d[1] = 1;
    for x in 2..reach {
        d[x] = if x < 2 + r { 2 } else { 1 };
    }
    d
}

/// The r-twin named by the pair (r, reach); needs 1 ≤ r and 3 + r ≤ reach ≤ n.
pub fn twin_rep(n: usize, r: usize, reach: usize) -> Result<Representation> {
    if r == 0 || reach < 3 + r || reach > n {
        return Err(Error::Precondition(format!("no {r}-twin reaching {reach} on Q({n})")));
    }
    let q = qn(n);
    let d = twin_dim_vector(n, r, reach);
    let dims: Vec<usize> = d.iter().map(|&x| x as usize).collect();
    let p1 = Matrix::from_ints(1, 2, &[1, 0]);
    let p2 = Matrix::from_ints(1, 2, &[0, 1]);
    let mut maps = vec![p1, p2];
    for a in 2..n - 1 {
        let (t, s) = (dims[a], dims[a + 1]);
        maps.push(match (t, s) {
            (2, 2) => Matrix::identity(2),
            (2, 1) => Matrix::from_ints(2, 1, &[1, 1]),
            (1, 1) => Matrix::identity(1),
            _ => Matrix::zeros(t, s),
        });
    }
    Representation::new(q, dims, maps)
}

/// Decomposes a representation of Q(n) into thin and twin summands with a witness.
pub fn decompose_type_d(m: &Representation) -> Result<Decomposition> {
    let n = qn_rank(m.quiver())?;
    let q = m.quiver_arc().clone();
    if n == 3 {
        let mut d = decompose_a::decompose_type_a(m)?.decomposition;
        for s in &mut d.summands {
            s.kind = d_kind(&s.model);
        }
        return Ok(d);
    }
    let split = split_b_and_thin(m)?;
    let b = &split.b_part;
    let mut parts = vec![(split.thin.clone(), (0..n).map(|x| Matrix::identity(m.dim(x))).collect::<Vec<_>>())];
    if !b.is_zero() {
        let low = eta_inverse(b)?;
        let dl = decompose_type_d(&low)?;
        let counit = eta_counit(b)?;
        // η of the witness, with the branch vertex ordered summand by summand
        let mut summands = Vec::new();
        let mut branch_cols: Vec<Vector> = Vec::new();
        let (d1, d2) = (low.dim(0), low.dim(1));
        let (mut o1, mut o2) = (0, 0);
        for s in &dl.summands {
            let model = eta(&s.model)?.on_quiver(q.clone())?;
            for c in cols(&dl.witness[0], o1..o1 + s.model.dim(0)).columns() {
                let mut v = c.clone();
                v.extend(std::iter::repeat(rat(0)).take(d2));
                branch_cols.push(v);
            }
            for c in cols(&dl.witness[1], o2..o2 + s.model.dim(1)).columns() {
                let mut v: Vec<Rational> = std::iter::repeat(rat(0)).take(d1).collect();
                v.extend(c.iter().cloned());
                branch_cols.push(v);
            }
            o1 += s.model.dim(0);
            o2 += s.model.dim(1);
            summands.push(Summand { kind: d_kind(&model), model });
        }
        let mut w = vec![dl.witness[0].clone(), dl.witness[1].clone(), Matrix::from_columns(d1 + d2, &branch_cols)];
        w.extend(dl.witness[2..].iter().cloned());
        let embed: Vec<Matrix> = (0..n).map(|x| &split.b_basis[x] * &counit[x]).collect();
        parts.insert(0, (Decomposition { summands, witness: w }, embed));
    }
    Ok(Decomposition::join(parts, n))
}

// ---------------------------------------------------------------------------
// subcategories of Rep Q(n)

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum QClass {
    /// S(1) or S(2).
    V,
    /// 0-twins: thin with both short arms.
    X,
    /// [π₁; π₂] bijective and the long arm injective.
    Y,
    /// thin, zero at 1 and 2, nonzero at 3.
    XPrime,
    /// support in [4, n].
    W,
}

impl std::fmt::Display for QClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            QClass::V => "V",
            QClass::X => "X",
            QClass::Y => "Y",
            QClass::XPrime => "X'",
            QClass::W => "W",
        };
        f.write_str(s)
    }
}

fn require_indecomposable(x: &Representation) -> Result<()> {
    if !is_brick(x)? {
        return Err(Error::Decomposable);
    }
    Ok(())
}

pub fn classify_indec_q(x: &Representation) -> Result<QClass> {
    let n = qn_rank(x.quiver())?;
    require_indecomposable(x)?;
    let d = x.dims();
    let total = x.total_dim();
    if total == 1 && (d[0] == 1 || d[1] == 1) {
        return Ok(QClass::V);
    }
    if x.is_thin() && d[0] == 1 && d[1] == 1 {
        return Ok(QClass::X);
    }
    if x.is_thin() && d[0] == 0 && d[1] == 0 && d[2] == 1 {
        return Ok(QClass::XPrime);
    }
    if d[0] == 0 && d[1] == 0 && d[2] == 0 {
        return Ok(QClass::W);
    }
    let long_injective = (2..n - 1).all(|a| x.map(a).rank() == x.dim(a + 1));
    if in_b_check(x)? && long_injective {
        return Ok(QClass::Y);
    }
    Err(Error::Internal(format!("indecomposable with dimension vector {:?} fits no class", d)))
}

/// Hom(M, X) = 0 = Hom(Z, M) with X the thin representation on all of Q(n) and Z = S(3).
pub fn in_b_perpendicular(m: &Representation) -> Result<bool> {
    let n = qn_rank(m.quiver())?;
    let q = m.quiver_arc();
    let x = rep::thin_on(q, &vec![1; n]);
    let z = rep::simple(q, 2);
    Ok(hom_dim(m, &x)? == 0 && hom_dim(&z, m)? == 0)
}

/// r for a twin (x₁ ≠ 0 ≠ x₂), counting the vertices of dimension 2.
pub fn twin_params(x: &Representation) -> Result<Option<usize>> {
    qn_rank(x.quiver())?;
    require_indecomposable(x)?;
    let d = x.dims();
    if d[0] != 0 && d[1] != 0 {
        Ok(Some(d.iter().filter(|&&v| v == 2).count()))
    } else {
        Ok(None)
    }
}

// ---------------------------------------------------------------------------
// general Dynkin quivers

/// Positive roots of a quiver whose components are Dynkin, from the knitted AR quivers.
pub fn positive_roots(q: &Quiver) -> Result<Vec<DimVector>> {
    let n = q.vertex_count();
    let mut out = Vec::new();
    for comp in q.components() {
        let (sub, _) = q.full_subquiver(&comp);
        let ar = knit::knit_ar_quiver(&sub)?;
        for d in &ar.dims {
            let mut full = vec![0; n];
            for (i, &v) in comp.iter().enumerate() {
                full[v] = d[i];
            }
            out.push(full);
        }
    }
    Ok(out)
}

/// One representative per positive root.
pub fn indecomposables(q: &Arc<Quiver>) -> Result<Vec<Representation>> {
    positive_roots(q)?.iter().map(|d| rep::indec_from_root(q, d)).collect()
}

/// The scalar by which an endomorphism of a brick acts.
fn brick_scalar(x: &Representation, f: &[Matrix]) -> Rational {
    let v = (0..x.quiver().vertex_count()).find(|&v| x.dim(v) > 0).expect("nonzero brick");
    f[v].get(0, 0).clone()
}

/// Krull–Schmidt by splitting off bricks: for each candidate X the composition pairing
/// Hom(X, M) × Hom(M, X) → End(X) = k has rank equal to the multiplicity of X, and a
/// nonsingular minor yields split embeddings X^r → M.
pub fn decompose_by_bricks(
    m: &Representation,
    candidates: &[Representation],
    kind: &dyn Fn(&Representation) -> SummandKind,
) -> Result<Decomposition> {
    let q = m.quiver_arc().clone();
    let n = q.vertex_count();
    let mut cur = m.clone();
    let mut basis: Vec<Matrix> = (0..n).map(|x| Matrix::identity(m.dim(x))).collect();
    let mut summands = Vec::new();
    let mut wcols: Vec<Vec<Vector>> = vec![Vec::new(); n];
    for x in candidates {
        if cur.is_zero() {
            break;
        }
        if !x.same_quiver(m) {
            return Err(Error::QuiverMismatch);
        }
        if (0..n).any(|v| x.dim(v) > cur.dim(v)) {
            continue;
        }
        let f = hom_basis(x, &cur)?.basis;
        if f.is_empty() {
            continue;
        }
        let g = hom_basis(&cur, x)?.basis;
        if g.is_empty() {
            continue;
        }
        let mut pairing = Matrix::zeros(f.len(), g.len());
        for (i, fi) in f.iter().enumerate() {
            for (j, gj) in g.iter().enumerate() {
                pairing.set(i, j, brick_scalar(x, &compose(gj, fi)));
            }
        }
        let r = pairing.rank();
        if r == 0 {
            continue;
        }
        let rows = pivot_columns(&pairing.transpose());
        let sub_rows = pairing.select_rows(&rows);
        let cols_j = pivot_columns(&sub_rows);
        let s = sub_rows.select_cols(&cols_j);
        let t = s.transpose().inverse().ok_or_else(|| Error::Internal("singular pairing minor".into()))?;
        let gsel: Vec<Morphism> = cols_j.iter().map(|&j| g[j].clone()).collect();
        let gprime: Vec<Morphism> = (0..r).map(|b| rep::combine(&gsel, t.row(b))).collect();
        let fprime: Vec<&Morphism> = rows.iter().map(|&i| &f[i]).collect();
        let mut kernel_bases = Vec::with_capacity(n);
        for v in 0..n {
            let gs: Vec<&Matrix> = gprime.iter().map(|gb| &gb[v]).collect();
            let stacked = Matrix::vstack(cur.dim(v), &gs);
            kernel_bases.push(stacked.kernel().basis().clone());
        }
        for fa in &fprime {
            for v in 0..n {
                let w = &basis[v] * &fa[v];
                wcols[v].extend(w.columns());
            }
            summands.push(Summand { kind: kind(x), model: x.clone() });
        }
        cur = cur.subrepresentation(&kernel_bases)?;
        basis = (0..n).map(|v| &basis[v] * &kernel_bases[v]).collect();
    }
    if !cur.is_zero() {
        return Err(Error::Internal("candidates do not exhaust the representation".into()));
    }
    let witness = (0..n).map(|v| Matrix::from_columns(m.dim(v), &wcols[v])).collect();
    Ok(Decomposition { summands, witness })
}

fn pivot_columns(m: &Matrix) -> Vec<usize> {
    let (r, _) = m.rref();
    let mut out = Vec::new();
    for i in 0..r.rows() {
        if let Some(j) = (0..r.cols()).find(|&j| r.get(i, j) != &rat(0)) {
            out.push(j);
        }
    }
    out
}

/// Splits a representation of any quiver whose components are Dynkin.
pub fn decompose_dynkin(m: &Representation) -> Result<Decomposition> {
    let q = m.quiver_arc().clone();
    if m.is_zero() {
        return Ok(Decomposition {
            summands: Vec::new(),
            witness: (0..q.vertex_count()).map(|_| Matrix::zeros(0, 0)).collect(),
        });
    }
    let cands = indecomposables(&q)?;
    decompose_by_bricks(m, &cands, &rep::kind_of)
}

/// Dispatches on the quiver: type A by chains, Q(n) by the η reduction, anything else
/// Dynkin by brick splitting.
pub fn decompose(m: &Representation) -> Result<Decomposition> {
    let q = m.quiver();
    if q.is_connected() && matches!(quiver::dynkin_type(q), Ok((quiver::Family::A, _))) {
        return Ok(decompose_a::decompose_type_a(m)?.decomposition);
    }
    if qn_rank(q).is_ok() {
        return decompose_type_d(m);
    }
    decompose_dynkin(m)
}

/// Ranks of [π₁; π₂] and the short-arm maps, for reporting.
pub fn branch_ranks(m: &Representation) -> Result<(usize, usize, usize)> {
    qn_rank(m.quiver())?;
    Ok((m.map(0).rank(), m.map(1).rank(), pi_stack(m, 0, 1).rank()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_rep(q: &Arc<Quiver>, max_dim: usize, rng: &mut ChaCha8Rng) -> Representation {
        let dims: Vec<usize> = (0..q.vertex_count()).map(|_| rng.gen_range(0..=max_dim)).collect();
        let maps = q
            .arrows()
            .iter()
            .map(|a| {
                let (t, s) = (dims[a.target], dims[a.source]);
                let data: Vec<i64> =
                    (0..t * s).map(|_| if rng.gen_bool(0.4) { 0 } else { rng.gen_range(-2..=2) }).collect();
                Matrix::from_ints(t, s, &data)
            })
            .collect();
        Representation::new(q.clone(), dims, maps).unwrap()
    }

    #[test]
    fn eta_of_simple_one() {
        let q3 = qn(4);
        let s1 = rep::simple(&q3, 0);
        let e = eta(&s1).unwrap();
        assert_eq!(e.dim_vector(), vec![1, 0, 1, 0, 0]);
        assert!(in_b_check(&e).unwrap());
        let back = eta_inverse(&e).unwrap();
        assert_eq!(back, s1);
    }

    #[test]
    fn twins_are_bricks_and_in_y() {
        for n in 4..=7 {
            for r in 1..=n - 3 {
                for reach in 3 + r..=n {
                    let t = twin_rep(n, r, reach).unwrap();
                    assert!(is_brick(&t).unwrap(), "twin {r} {reach} on Q({n})");
                    assert_eq!(classify_indec_q(&t).unwrap(), QClass::Y);
                    assert_eq!(twin_params(&t).unwrap(), Some(r));
                    assert!(in_b_perpendicular(&t).unwrap());
                    assert_eq!(d_kind(&t), SummandKind::Twin { r, reach });
                }
            }
        }
    }

    #[test]
    fn class_sizes_on_q6() {
        let q = qn(6);
        let mut counts = std::collections::BTreeMap::new();
        for x in indecomposables(&q).unwrap() {
            *counts.entry(classify_indec_q(&x).unwrap()).or_insert(0) += 1;
        }
        assert_eq!(counts[&QClass::V], 2);
        assert_eq!(counts[&QClass::X], 4);
        assert_eq!(counts[&QClass::XPrime], 4);
        assert_eq!(counts[&QClass::W], 6);
        assert_eq!(counts[&QClass::Y], 14);
    }

    #[test]
    fn split_simple_pair() {
        let q = qn(5);
        let m = rep::direct_sum(&[rep::simple(&q, 0), rep::simple(&q, 1)]).unwrap();
        let s = split_b_and_thin(&m).unwrap();
        assert!(s.b_part.is_zero());
        assert!(s.verify(&m));
    }

    #[test]
    fn split_random_q5() {
        let q = qn(5);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..30 {
            let m = random_rep(&q, 4, &mut rng);
            let s = split_b_and_thin(&m).unwrap();
            assert!(s.verify(&m));
            assert!(s.b_part.is_zero() || in_b_check(&s.b_part).unwrap());
            assert!(s.thin.summands.iter().all(|t| t.model.is_thin()));
        }
    }

    #[test]
    fn sigma_round_trip() {
        let q = qn(5);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut done = 0;
        while done < 10 {
            let m = random_rep(&q, 3, &mut rng);
            let Ok(n) = sigma_plus(&m) else { continue };
            let back = sigma_minus(&n).unwrap().on_quiver(q.clone()).unwrap();
            assert!(rep::is_isomorphic(&back, &m).unwrap().is_some());
            done += 1;
        }
        assert!(sigma_plus(&rep::simple(&q, 0)).is_err());
    }

    #[test]
    fn maximal_d4_is_one_twin() {
        let q = qn(4);
        let t = twin_rep(4, 1, 4).unwrap();
        assert_eq!(t.dim_vector(), vec![1, 1, 2, 1]);
        let d = decompose_type_d(&t).unwrap();
        assert!(d.verify(&t));
        assert_eq!(d.summands.len(), 1);
        assert_eq!(d.summands[0].kind, SummandKind::Twin { r: 1, reach: 4 });
        let _ = q;
    }

    #[test]
    fn random_q6_matches_brick_splitter() {
        let q = qn(6);
        let cands = indecomposables(&q).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..15 {
            let m = random_rep(&q, 3, &mut rng);
            let d = decompose_type_d(&m).unwrap();
            assert!(d.verify(&m));
            for s in &d.summands {
                assert!(is_brick(&s.model).unwrap());
                assert!(matches!(s.kind, SummandKind::Thin(_) | SummandKind::Twin { .. }));
            }
            let other = decompose_by_bricks(&m, &cands, &d_kind).unwrap();
            assert!(other.verify(&m));
            assert_eq!(d.multiset(), other.multiset());
        }
    }

    #[test]
    fn dynkin_splitter_on_e6() {
        let q = Arc::new(quiver::type_e(6));
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..5 {
            let m = random_rep(&q, 3, &mut rng);
            let d = decompose_dynkin(&m).unwrap();
            assert!(d.verify(&m));
        }
    }
}
