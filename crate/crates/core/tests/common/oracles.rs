//! Independent checks built from plain linear algebra, used against the library routes.

use quiverrep::linalg::{Matrix, Vector};
use quiverrep::quiver::Quiver;
use quiverrep::rep::Representation;

/// Number of interval summands whose support contains the subpath s..=t of A_n (vertex
/// i adjacent to i+1): the rank of the map from the limit to the colimit of M on s..=t.
pub fn lim_colim_rank(m: &Representation, s: usize, t: usize) -> usize {
    let q = m.quiver();
    let mut off = vec![0usize; t + 2];
    for v in s..=t {
        off[v - s + 1] = off[v - s] + m.dim(v);
    }
    let total = off[t - s + 1];
    if total == 0 {
        return 0;
    }
    let inside: Vec<usize> = (0..q.arrow_count())
        .filter(|&a| {
            let ar = q.arrow(a);
            (s..=t).contains(&ar.source) && (s..=t).contains(&ar.target)
        })
        .collect();
    let mut cons_rows: Vec<Vector> = Vec::new();
    let mut rel_cols: Vec<Vector> = Vec::new();
    for &a in &inside {
        let ar = q.arrow(a);
        let (u, w) = (ar.source - s, ar.target - s);
        let f = m.map(a);
        for i in 0..f.rows() {
            let mut row = vec![quiverrep::linalg::rat(0); total];
            for k in 0..f.cols() {
                row[off[u] + k] = f.get(i, k).clone();
            }
            row[off[w] + i] -= quiverrep::linalg::rat(1);
            cons_rows.push(row);
        }
        for k in 0..f.cols() {
            let mut col = vec![quiverrep::linalg::rat(0); total];
            col[off[u] + k] = quiverrep::linalg::rat(1);
            for i in 0..f.rows() {
                col[off[w] + i] -= f.get(i, k).clone();
            }
            rel_cols.push(col);
        }
    }
    let lim = if cons_rows.is_empty() {
        Matrix::identity(total)
    } else {
        Matrix::from_rows(cons_rows, total).unwrap().kernel().basis().clone()
    };
    // each limit element, seen at vertex s only
    let mut at_s: Vec<Vector> = Vec::new();
    for x in lim.columns() {
        let mut v = vec![quiverrep::linalg::rat(0); total];
        v[..m.dim(s)].clone_from_slice(&x[..m.dim(s)]);
        at_s.push(v);
    }
    let r = Matrix::from_columns(total, &rel_cols).rank();
    let mut both = rel_cols.clone();
    both.extend(at_s);
    Matrix::from_columns(total, &both).rank() - r
}

/// dim of {X : X a = b X}, the k[T]-homomorphisms between (k^p, a) and (k^q, b).
pub fn commutant_dim(a: &Matrix, b: &Matrix) -> usize {
    let (p, q) = (a.rows(), b.rows());
    let n = p * q;
    if n == 0 {
        return 0;
    }
    // unknown X[i][j] at index i*p + j; equation (Xa − bX)[i][l] = 0
    let mut rows = Vec::new();
    for i in 0..q {
        for l in 0..p {
            let mut row = vec![quiverrep::linalg::rat(0); n];
            for j in 0..p {
                row[i * p + j] += a.get(j, l).clone();
            }
            for k in 0..q {
                row[k * p + l] -= b.get(i, k).clone();
            }
            rows.push(row);
        }
    }
    n - Matrix::from_rows(rows, n).unwrap().rank()
}

/// dim Ext¹(M, N) as the cokernel of (f_i) ↦ (f_t M_a − N_a f_s) over the arrows.
pub fn ext1_by_cokernel(m: &Representation, n: &Representation) -> usize {
    use quiverrep::linalg::rat;
    let q = m.quiver();
    let nv = q.vertex_count();
    let mut uoff = vec![0usize; nv + 1];
    for v in 0..nv {
        uoff[v + 1] = uoff[v] + n.dim(v) * m.dim(v);
    }
    let mut toff = vec![0usize; q.arrow_count() + 1];
    for a in 0..q.arrow_count() {
        let ar = q.arrow(a);
        toff[a + 1] = toff[a] + n.dim(ar.target) * m.dim(ar.source);
    }
    let (unknowns, targets) = (uoff[nv], toff[q.arrow_count()]);
    if targets == 0 {
        return 0;
    }
    // unknown f_v[r][c] at uoff[v] + r * dim M_v + c
    let mut cols = vec![vec![rat(0); targets]; unknowns];
    for a in 0..q.arrow_count() {
        let ar = q.arrow(a);
        let (s, t) = (ar.source, ar.target);
        let (ma, na) = (m.map(a), n.map(a));
        let ds = m.dim(s);
        for r in 0..n.dim(t) {
            for c in 0..ds {
                let row = toff[a] + r * ds + c;
                for k in 0..m.dim(t) {
                    cols[uoff[t] + r * m.dim(t) + k][row] += ma.get(k, c).clone();
                }
                for k in 0..n.dim(s) {
                    cols[uoff[s] + k * ds + c][row] -= na.get(r, k).clone();
                }
            }
        }
    }
    targets - Matrix::from_columns(targets, &cols).rank()
}

/// Positive integer vectors with entries ≤ bound on which the Tits form is 1.
pub fn tits_roots(q: &Quiver, bound: i64) -> usize {
    let n = q.vertex_count();
    let edges: Vec<(usize, usize)> = q.arrows().iter().map(|a| (a.source, a.target)).collect();
    let mut d = vec![0i64; n];
    let mut count = 0;
    loop {
        let mut k = 0;
        while k < n && d[k] == bound {
            d[k] = 0;
            k += 1;
        }
        if k == n {
            return count;
        }
        d[k] += 1;
        let form: i64 = d.iter().map(|x| x * x).sum::<i64>() - edges.iter().map(|&(a, b)| d[a] * d[b]).sum::<i64>();
        if form == 1 {
            count += 1;
        }
    }
}

/// Column basis of the intersection of two column spaces.
pub fn intersect(a: &Matrix, b: &Matrix) -> Matrix {
    let rows = a.rows();
    if a.cols() == 0 || b.cols() == 0 {
        return Matrix::zeros(rows, 0);
    }
    let nb = -b;
    let k = Matrix::hstack(rows, &[a, &nb]).kernel().basis().clone();
    let coeff = k.select_rows(&(0..a.cols()).collect::<Vec<_>>());
    let prod = a * &coeff;
    let cols = prod.columns();
    let basis = independent(rows, &cols);
    Matrix::from_columns(rows, &basis)
}

pub fn independent(rows: usize, cols: &[Vector]) -> Vec<Vector> {
    let mut out: Vec<Vector> = Vec::new();
    for c in cols {
        let mut t = out.clone();
        t.push(c.clone());
        if Matrix::from_columns(rows, &t).rank() == t.len() {
            out = t;
        }
    }
    out
}

pub fn rank_of(rows: usize, cols: &[Vector]) -> usize {
    if cols.is_empty() {
        0
    } else {
        Matrix::from_columns(rows, cols).rank()
    }
}
