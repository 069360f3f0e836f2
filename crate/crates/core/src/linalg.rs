//! Exact rational matrices, subspaces and compatible bases.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

pub use malachite_q::Rational;

use crate::error::{Error, Result};

pub type Vector = Vec<Rational>;

pub fn rat(n: i64) -> Rational {
    Rational::from(n)
}

pub fn ratio(p: i64, q: i64) -> Rational {
    assert!(q != 0, "zero denominator");
    Rational::from_signeds(p, q)
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    // malachite accepts "p/q" with an unreduced fraction and normalizes it.
    t.parse::<Rational>()
        .map_err(|_| Error::Parse { line: 0, msg: format!("bad rational '{t}'") })
}

pub fn zero_vector(n: usize) -> Vector {
    vec![Rational::from(0); n]
}

pub fn unit_vector(n: usize, i: usize) -> Vector {
    let mut v = zero_vector(n);
    v[i] = Rational::from(1);
    v
}

pub fn is_zero_vector(v: &[Rational]) -> bool {
    v.iter().all(|x| *x == 0)
}

/// Dense row-major matrix over the rationals. Zero rows or columns are allowed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Rational::from(0); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rational::from(1);
        }
        m
    }

    pub fn scalar(n: usize, c: Rational) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = c.clone();
        }
        m
    }

    pub fn from_data(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    /// Builds a matrix from rows; `cols` is needed when there are no rows.
    pub fn from_rows(rows: Vec<Vector>, cols: usize) -> Result<Self> {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            data.extend(row);
        }
        Ok(Matrix { rows: r, cols, data })
    }

    pub fn from_ints(rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols);
        Matrix { rows, cols, data: entries.iter().map(|&x| Rational::from(x)).collect() }
    }

    /// Columns given as vectors of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vector]) -> Self {
        let cols = columns.len();
        let mut m = Self::zeros(rows, cols);
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length mismatch");
            for i in 0..rows {
                m.data[i * cols + j] = c[i].clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| *x == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        *x == 1
                    } else {
                        *x == 0
                    }
                })
            })
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn try_mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if *a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if *b != 0 {
                        let idx = i * other.cols + j;
                        out.data[idx] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vector {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|i| {
                let mut s = Rational::from(0);
                for (a, b) in self.row(i).iter().zip(v) {
                    if *a != 0 && *b != 0 {
                        s += a * b;
                    }
                }
                s
            })
            .collect()
    }

    pub fn scale(&self, c: &Rational) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * c).collect() }
    }

    /// Horizontal concatenation; all blocks must have `rows` rows.
    pub fn hstack(rows: usize, blocks: &[&Matrix]) -> Matrix {
        let cols: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(rows, cols);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.rows, rows, "hstack row mismatch");
            out.set_block(0, off, b);
            off += b.cols;
        }
        out
    }

    /// Vertical concatenation; all blocks must have `cols` columns.
    pub fn vstack(cols: usize, blocks: &[&Matrix]) -> Matrix {
        let rows: usize = blocks.iter().map(|b| b.rows).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for b in blocks {
            assert_eq!(b.cols, cols, "vstack column mismatch");
            data.extend(b.data.iter().cloned());
        }
        Matrix { rows, cols, data }
    }

    pub fn block_diag(blocks: &[&Matrix]) -> Matrix {
        let rows: usize = blocks.iter().map(|b| b.rows).sum();
        let cols: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(rows, cols);
        let (mut r, mut c) = (0, 0);
        for b in blocks {
            out.set_block(r, c, b);
            r += b.rows;
            c += b.cols;
        }
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Matrix) {
        assert!(r0 + b.rows <= self.rows && c0 + b.cols <= self.cols, "block out of range");
        for i in 0..b.rows {
            for j in 0..b.cols {
                self.data[(r0 + i) * self.cols + c0 + j] = b.get(i, j).clone();
            }
        }
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                out.data[a * cols.len() + b] = self.get(i, j).clone();
            }
        }
        out
    }

    pub fn select_cols(&self, cols: &[usize]) -> Matrix {
        let rows: Vec<usize> = (0..self.rows).collect();
        self.submatrix(&rows, cols)
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        let cols: Vec<usize> = (0..self.cols).collect();
        self.submatrix(rows, &cols)
    }

    /// Reduced row-echelon form and the (strictly increasing) pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let (r, c) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..c {
            if row == r {
                break;
            }
            let Some(p) = (row..r).find(|&i| self.data[i * c + col] != 0) else {
                continue;
            };
            if p != row {
                for j in 0..c {
                    self.data.swap(p * c + j, row * c + j);
                }
            }
            let inv = Rational::from(1) / &self.data[row * c + col];
            for j in col..c {
                let idx = row * c + j;
                if self.data[idx] != 0 {
                    self.data[idx] *= &inv;
                }
            }
            let pivot_row: Vec<(usize, Rational)> = (col..c)
                .filter(|&j| self.data[row * c + j] != 0)
                .map(|j| (j, self.data[row * c + j].clone()))
                .collect();
            for i in 0..r {
                if i == row {
                    continue;
                }
                let f = self.data[i * c + col].clone();
                if f == 0 {
                    continue;
                }
                for (j, v) in &pivot_row {
                    let idx = i * c + j;
                    self.data[idx] -= &f * v;
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the null space {x : self * x = 0}.
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref();
        let n = self.cols;
        let mut is_pivot = vec![None; n];
        for (k, &p) in pivots.iter().enumerate() {
            is_pivot[p] = Some(k);
        }
        let mut basis = Vec::new();
        for free in (0..n).filter(|&j| is_pivot[j].is_none()) {
            let mut v = zero_vector(n);
            v[free] = Rational::from(1);
            for (k, &p) in pivots.iter().enumerate() {
                let a = r.get(k, free);
                if *a != 0 {
                    v[p] = -a;
                }
            }
            basis.push(v);
        }
        Subspace::from_independent(n, basis)
    }

    /// Column space.
    pub fn image(&self) -> Subspace {
        Subspace::span(self.rows, &self.columns())
    }

    /// Some x with self * x = b, or None when b is outside the image.
    pub fn solve(&self, b: &[Rational]) -> Result<Option<Vector>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side has length {}, matrix has {} rows",
                b.len(),
                self.rows
            )));
        }
        let bm = Matrix::from_columns(self.rows, &[b.to_vec()]);
        Ok(self.solve_matrix(&bm)?.map(|x| x.col(0)))
    }

    /// Some X with self * X = b, or None.
    pub fn solve_matrix(&self, b: &Matrix) -> Result<Option<Matrix>> {
        if b.rows != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side has {} rows, matrix has {}",
                b.rows, self.rows
            )));
        }
        let aug = Matrix::hstack(self.rows, &[self, b]);
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return Ok(None);
        }
        let mut x = Matrix::zeros(self.cols, b.cols);
        for (k, &p) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(p, j, r.get(k, self.cols + j).clone());
            }
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(Matrix::zeros(0, 0));
        }
        let aug = Matrix::hstack(n, &[self, &Matrix::identity(n)]);
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let cols: Vec<usize> = (n..2 * n).collect();
        let rows: Vec<usize> = (0..n).collect();
        Some(r.submatrix(&rows, &cols))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn trace(&self) -> Rational {
        assert!(self.is_square());
        let mut s = Rational::from(0);
        for i in 0..self.rows {
            s += self.get(i, i);
        }
        s
    }
}

impl Mul<&Matrix> for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.try_mul(rhs).expect("matrix product shape mismatch")
    }
}

impl Add<&Matrix> for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.shape(), rhs.shape(), "matrix sum shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub<&Matrix> for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.shape(), rhs.shape(), "matrix difference shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| -a).collect() }
    }
}

/// A subspace of k^ambient, stored by a canonical basis: the columns are the
/// nonzero rows of the rref of the spanning set, so equal subspaces compare equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
}

impl Subspace {
    pub fn span(ambient: usize, vectors: &[Vector]) -> Subspace {
        let rows = Matrix::from_columns(ambient, vectors).transpose();
        let (r, pivots) = rows.rref();
        let k = pivots.len();
        let idx: Vec<usize> = (0..k).collect();
        let all: Vec<usize> = (0..ambient).collect();
        let basis = r.submatrix(&idx, &all).transpose();
        Subspace { ambient, basis }
    }

    fn from_independent(ambient: usize, vectors: Vec<Vector>) -> Subspace {
        Self::span(ambient, &vectors)
    }

    pub fn from_basis_matrix(m: &Matrix) -> Subspace {
        Self::span(m.rows(), &m.columns())
    }

    pub fn zero(ambient: usize) -> Subspace {
        Subspace { ambient, basis: Matrix::zeros(ambient, 0) }
    }

    pub fn full(ambient: usize) -> Subspace {
        Subspace { ambient, basis: Matrix::identity(ambient) }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn vectors(&self) -> Vec<Vector> {
        self.basis.columns()
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.ambient);
        if is_zero_vector(v) {
            return true;
        }
        matches!(self.basis.solve(v), Ok(Some(_)))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.ambient == self.ambient && self.sum(other).dim() == self.dim()
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch");
        let mut v = self.vectors();
        v.extend(other.vectors());
        Subspace::span(self.ambient, &v)
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch");
        if self.dim() == 0 || other.dim() == 0 {
            return Subspace::zero(self.ambient);
        }
        let stacked = Matrix::hstack(self.ambient, &[&self.basis, &(-&other.basis)]);
        let ker = stacked.kernel();
        let k = self.dim();
        let vecs: Vec<Vector> =
            ker.vectors().iter().map(|c| self.basis.mul_vec(&c[..k])).collect();
        Subspace::span(self.ambient, &vecs)
    }

    /// Vectors from `candidates` that extend `start` (assumed independent) to a basis
    /// of span(start ∪ candidates); greedy in the given order.
    pub fn extend_basis(ambient: usize, start: &[Vector], candidates: &[Vector]) -> Vec<Vector> {
        let mut all = start.to_vec();
        all.extend(candidates.iter().cloned());
        let m = Matrix::from_columns(ambient, &all);
        let (_, pivots) = m.rref();
        pivots
            .into_iter()
            .filter(|&p| p >= start.len())
            .map(|p| all[p].clone())
            .collect()
    }

    /// A complement of `self` inside `larger` (which must contain it).
    pub fn complement_in(&self, larger: &Subspace) -> Vec<Vector> {
        Self::extend_basis(self.ambient, &self.vectors(), &larger.vectors())
    }

    /// A complement in the ambient space made of standard basis vectors.
    pub fn standard_complement(&self) -> Vec<Vector> {
        let units: Vec<Vector> = (0..self.ambient).map(|i| unit_vector(self.ambient, i)).collect();
        Self::extend_basis(self.ambient, &self.vectors(), &units)
    }

    /// Image of the subspace under a linear map.
    pub fn map(&self, m: &Matrix) -> Subspace {
        assert_eq!(m.cols(), self.ambient);
        let img = m * &self.basis;
        Subspace::span(m.rows(), &img.columns())
    }

    /// Preimage {v : m v ∈ self}.
    pub fn preimage(&self, m: &Matrix) -> Subspace {
        assert_eq!(m.rows(), self.ambient);
        let n = m.cols();
        let stacked = Matrix::hstack(self.ambient, &[m, &(-&self.basis)]);
        let ker = stacked.kernel();
        let vecs: Vec<Vector> = ker.vectors().iter().map(|c| c[..n].to_vec()).collect();
        Subspace::span(n, &vecs)
    }
}

/// A basis of V split into the four groups determined by two subspaces U, U'.
#[derive(Clone, Debug)]
pub struct CompatiblePair {
    pub both: Vec<Vector>,
    pub first_only: Vec<Vector>,
    pub second_only: Vec<Vector>,
    pub neither: Vec<Vector>,
}

impl CompatiblePair {
    pub fn sizes(&self) -> (usize, usize, usize, usize) {
        (self.both.len(), self.first_only.len(), self.second_only.len(), self.neither.len())
    }

    pub fn all(&self) -> Vec<Vector> {
        let mut v = self.both.clone();
        v.extend(self.first_only.iter().cloned());
        v.extend(self.second_only.iter().cloned());
        v.extend(self.neither.iter().cloned());
        v
    }
}

pub fn compatible_basis_pair(ambient: usize, u: &Subspace, u2: &Subspace) -> Result<CompatiblePair> {
    if u.ambient_dim() != ambient || u2.ambient_dim() != ambient {
        return Err(Error::DimensionMismatch("subspaces live in different ambient spaces".into()));
    }
    let both = u.intersection(u2).vectors();
    let first_only = Subspace::extend_basis(ambient, &both, &u.vectors());
    let mut so_far = both.clone();
    so_far.extend(first_only.iter().cloned());
    let second_only = Subspace::extend_basis(ambient, &so_far, &u2.vectors());
    so_far.extend(second_only.iter().cloned());
    let units: Vec<Vector> = (0..ambient).map(|i| unit_vector(ambient, i)).collect();
    let neither = Subspace::extend_basis(ambient, &so_far, &units);
    Ok(CompatiblePair { both, first_only, second_only, neither })
}

/// Blocks C(i,j) of a basis compatible with two chains U_1 ⊆ … ⊆ U_p and
/// U'_1 ⊆ … ⊆ U'_q. Indices run from 1; index p+1 (resp. q+1) stands for V.
#[derive(Clone, Debug)]
pub struct FiltrationPairBasis {
    pub ambient: usize,
    pub len1: usize,
    pub len2: usize,
    pub blocks: BTreeMap<(usize, usize), Vec<Vector>>,
}

impl FiltrationPairBasis {
    pub fn block(&self, i: usize, j: usize) -> &[Vector] {
        self.blocks.get(&(i, j)).map(|v| v.as_slice()).unwrap_or(&[])
    }

    pub fn all_vectors(&self) -> Vec<Vector> {
        self.blocks.values().flat_map(|v| v.iter().cloned()).collect()
    }
}

fn check_chain(ambient: usize, chain: &[Subspace]) -> Result<()> {
    for (k, s) in chain.iter().enumerate() {
        if s.ambient_dim() != ambient {
            return Err(Error::DimensionMismatch(format!("chain member {k} has wrong ambient")));
        }
        if k > 0 && !s.contains_subspace(&chain[k - 1]) {
            return Err(Error::NotNested(format!("member {} is not contained in member {}", k, k + 1)));
        }
    }
    Ok(())
}

pub fn compatible_basis_filtrations(
    ambient: usize,
    chain1: &[Subspace],
    chain2: &[Subspace],
) -> Result<FiltrationPairBasis> {
    check_chain(ambient, chain1)?;
    check_chain(ambient, chain2)?;
    // u[0] = 0, u[1..=p] = chain, u[p+1] = V
    let extend = |chain: &[Subspace]| {
        let mut v = vec![Subspace::zero(ambient)];
        v.extend(chain.iter().cloned());
        v.push(Subspace::full(ambient));
        v
    };
    let u = extend(chain1);
    let w = extend(chain2);
    let (p, q) = (chain1.len() + 1, chain2.len() + 1);
    let mut blocks = BTreeMap::new();
    for i in 1..=p {
        for j in 1..=q {
            let cell = u[i].intersection(&w[j]);
            let lower = u[i].intersection(&w[j - 1]).sum(&u[i - 1].intersection(&w[j]));
            let c = lower.complement_in(&cell);
            if !c.is_empty() {
                blocks.insert((i, j), c);
            }
        }
    }
    Ok(FiltrationPairBasis { ambient, len1: p, len2: q, blocks })
}
