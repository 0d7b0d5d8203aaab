//! Dense linear algebra kernel: rank-revealing nullspaces, subspace lattice
//! operations, and the exact rational backend used to cross-check every
//! dimension the other modules report.

use nalgebra::{DMatrix, DVector};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result, DEFAULT_TOL};

/// Dense real matrix, row-major semantics. All entries must be finite.
pub type DenseMap = DMatrix<f64>;

fn check_finite(m: &DenseMap) -> Result<()> {
    if m.iter().all(|x| x.is_finite()) {
        Ok(())
    } else {
        Err(Error::Input("non-finite matrix entry".into()))
    }
}

/// An orthonormal-basis description of a linear subspace of R^ambient.
///
/// Basis vectors are the rows of `basis`; they are pairwise orthonormal
/// within `tol`.
#[derive(Debug, Clone)]
pub struct Subspace {
    ambient: usize,
    basis: DMatrix<f64>,
    tol: f64,
}

impl Subspace {
    /// Span of the given row vectors; dependent rows are dropped by modified
    /// Gram-Schmidt with re-orthogonalization.
    pub fn span(ambient: usize, rows: &[DVector<f64>], tol: f64) -> Self {
        let basis = orthonormalize_rows(ambient, rows, tol);
        Subspace { ambient, basis, tol }
    }

    pub fn from_orthonormal(basis: DMatrix<f64>, tol: f64) -> Self {
        Subspace { ambient: basis.ncols(), basis, tol }
    }

    pub fn zero(ambient: usize, tol: f64) -> Self {
        Subspace { ambient, basis: DMatrix::zeros(0, ambient), tol }
    }

    pub fn full(ambient: usize, tol: f64) -> Self {
        Subspace { ambient, basis: DMatrix::identity(ambient, ambient), tol }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.nrows()
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    /// Orthonormal basis vectors, one per row.
    pub fn basis(&self) -> &DMatrix<f64> {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<DVector<f64>> {
        (0..self.dim()).map(|i| self.basis.row(i).transpose()).collect()
    }

    /// Orthogonal projection of a vector onto the subspace.
    pub fn project_vector(&self, v: &DVector<f64>) -> Result<DVector<f64>> {
        if v.len() != self.ambient {
            return Err(Error::AmbientMismatch(v.len(), self.ambient));
        }
        Ok(self.basis.transpose() * (&self.basis * v))
    }

    /// Whether every basis vector of `other` projects into `self` within tol.
    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        if other.ambient != self.ambient {
            return Err(Error::AmbientMismatch(other.ambient, self.ambient));
        }
        for v in other.basis_vectors() {
            let r = &v - self.project_vector(&v)?;
            if r.norm() > self.tol.max(other.tol) * v.norm().max(1.0) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn contains_vector(&self, v: &DVector<f64>) -> Result<bool> {
        let r = v - self.project_vector(v)?;
        Ok(r.norm() <= self.tol * v.norm().max(1.0))
    }

    /// Intersection of two subspaces of the same ambient space.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        if other.ambient != self.ambient {
            return Err(Error::AmbientMismatch(other.ambient, self.ambient));
        }
        let n = self.ambient;
        // x is in the intersection iff both complement projections kill it
        let pa = DMatrix::identity(n, n) - self.basis.transpose() * &self.basis;
        let pb = DMatrix::identity(n, n) - other.basis.transpose() * &other.basis;
        let mut stacked = DMatrix::zeros(2 * n, n);
        stacked.view_mut((0, 0), (n, n)).copy_from(&pa);
        stacked.view_mut((n, 0), (n, n)).copy_from(&pb);
        let (_, kernel) = rank_nullspace(&stacked, self.tol)?;
        Ok(kernel)
    }

    /// Sum of two subspaces.
    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        if other.ambient != self.ambient {
            return Err(Error::AmbientMismatch(other.ambient, self.ambient));
        }
        let mut rows = self.basis_vectors();
        rows.extend(other.basis_vectors());
        Ok(Subspace::span(self.ambient, &rows, self.tol))
    }

    /// Orthogonal complement in the ambient space.
    pub fn complement(&self) -> Result<Subspace> {
        if self.dim() == 0 {
            return Ok(Subspace::full(self.ambient, self.tol));
        }
        let (_, kernel) = rank_nullspace(&self.basis, self.tol)?;
        Ok(kernel)
    }
}

/// Modified Gram-Schmidt with one re-orthogonalization pass. Rows whose
/// orthogonal residual falls below tol times the largest input norm are
/// discarded; measuring against the global scale (not each row's own norm)
/// keeps near-zero rows from being normalized into noise directions.
pub fn orthonormalize_rows(ambient: usize, rows: &[DVector<f64>], tol: f64) -> DMatrix<f64> {
    let scale = rows.iter().map(|v| v.norm()).fold(0.0f64, f64::max);
    let cut = tol.max(f64::EPSILON * 32.0) * scale;
    let mut basis: Vec<DVector<f64>> = Vec::new();
    for v in rows {
        assert_eq!(v.len(), ambient, "row length mismatch");
        if v.norm() <= cut {
            continue;
        }
        let mut w = v.clone();
        for _ in 0..2 {
            for b in &basis {
                let c = b.dot(&w);
                w -= b * c;
            }
        }
        if w.norm() > cut {
            let nw = w.norm();
            basis.push(w / nw);
        }
    }
    let mut m = DMatrix::zeros(basis.len(), ambient);
    for (i, b) in basis.iter().enumerate() {
        m.row_mut(i).copy_from(&b.transpose());
    }
    m
}

/// Rank and orthonormal kernel basis of a dense map, singular values below
/// `tol` times the largest being treated as zero.
pub fn rank_nullspace(m: &DenseMap, tol: f64) -> Result<(usize, Subspace)> {
    if tol <= 0.0 {
        return Err(Error::Input("tolerance must be positive".into()));
    }
    check_finite(m)?;
    let (rows, cols) = m.shape();
    if rows == 0 || cols == 0 {
        return Ok((0, Subspace::full(cols, tol)));
    }
    // pad to at least square so the SVD carries a full right factor
    let work = if rows < cols {
        let mut w = DMatrix::zeros(cols, cols);
        w.view_mut((0, 0), (rows, cols)).copy_from(m);
        w
    } else {
        m.clone()
    };
    let svd = work.svd(false, true);
    let v_t = svd.v_t.expect("svd requested v_t");
    let smax = svd.singular_values.iter().cloned().fold(0.0f64, f64::max);
    if smax == 0.0 {
        return Ok((0, Subspace::full(cols, tol)));
    }
    let cut = tol * smax;
    let mut kernel_rows: Vec<DVector<f64>> = Vec::new();
    let mut rank = 0usize;
    for i in 0..v_t.nrows() {
        let s = if i < svd.singular_values.len() { svd.singular_values[i] } else { 0.0 };
        if s > cut {
            rank += 1;
        } else {
            kernel_rows.push(v_t.row(i).transpose());
        }
    }
    // v_t rows are already orthonormal
    let mut basis = DMatrix::zeros(kernel_rows.len(), cols);
    for (i, r) in kernel_rows.iter().enumerate() {
        basis.row_mut(i).copy_from(&r.transpose());
    }
    Ok((rank, Subspace::from_orthonormal(basis, tol)))
}

/// Rank with the default tolerance.
pub fn rank(m: &DenseMap) -> usize {
    rank_nullspace(m, DEFAULT_TOL).map(|(r, _)| r).unwrap_or(0)
}

/// Symmetric eigendecomposition by cyclic Jacobi sweeps. Returns
/// (eigenvalues, eigenvectors as columns). Slower than a tridiagonal solver
/// but keeps eigenvector residuals at rounding level even for clustered
/// spectra, which the splitting code depends on.
pub fn jacobi_eigen(s: &DMatrix<f64>) -> (Vec<f64>, DMatrix<f64>) {
    let n = s.nrows();
    assert_eq!(n, s.ncols(), "jacobi_eigen needs a square matrix");
    let mut a = 0.5 * (s + s.transpose());
    let mut v = DMatrix::<f64>::identity(n, n);
    let scale = a.norm().max(1.0);
    for _sweep in 0..100 {
        let mut off = 0.0f64;
        for i in 0..n {
            for j in i + 1..n {
                off += a[(i, j)] * a[(i, j)];
            }
        }
        if off.sqrt() <= 1e-15 * scale {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[(p, q)];
                if apq.abs() <= 1e-18 * scale {
                    continue;
                }
                let theta = (a[(q, q)] - a[(p, p)]) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    -1.0 / (-theta + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let sn = t * c;
                for k in 0..n {
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    a[(k, p)] = c * akp - sn * akq;
                    a[(k, q)] = sn * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[(p, k)];
                    let aqk = a[(q, k)];
                    a[(p, k)] = c * apk - sn * aqk;
                    a[(q, k)] = sn * apk + c * aqk;
                }
                for k in 0..n {
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = c * vkp - sn * vkq;
                    v[(k, q)] = sn * vkp + c * vkq;
                }
            }
        }
    }
    let eigenvalues: Vec<f64> = (0..n).map(|i| a[(i, i)]).collect();
    (eigenvalues, v)
}

// ---------------------------------------------------------------------------
// Exact rational backend
// ---------------------------------------------------------------------------

pub type Rat = BigRational;

pub fn rat(num: i64, den: i64) -> Rat {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(num: i64) -> Rat {
    BigRational::from_integer(BigInt::from(num))
}

/// Dense matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMap {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

impl RationalMap {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMap { rows, cols, entries: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            entries.extend(row);
        }
        RationalMap { rows: r, cols: c, entries }
    }

    pub fn from_i64(rows: usize, cols: usize, data: &[i64]) -> Self {
        assert_eq!(data.len(), rows * cols);
        RationalMap { rows, cols, entries: data.iter().map(|&x| rat_int(x)).collect() }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        let p = a * b;
                        out[(i, j)] += p;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = Rat::zero();
                for j in 0..self.cols {
                    if !self[(i, j)].is_zero() && !v[j].is_zero() {
                        acc += &self[(i, j)] * &v[j];
                    }
                }
                acc
            })
            .collect()
    }

    /// Inverse by Gauss-Jordan; None when singular.
    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let piv = (col..n).find(|&r| !a[(r, col)].is_zero())?;
            if piv != col {
                for j in 0..n {
                    a.entries.swap(piv * n + j, col * n + j);
                    inv.entries.swap(piv * n + j, col * n + j);
                }
            }
            let p = a[(col, col)].clone();
            for j in 0..n {
                a[(col, j)] = &a[(col, j)] / &p;
                inv[(col, j)] = &inv[(col, j)] / &p;
            }
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let f = a[(r, col)].clone();
                for j in 0..n {
                    let x = &a[(col, j)] * &f;
                    a[(r, j)] -= x;
                    let y = &inv[(col, j)] * &f;
                    inv[(r, j)] -= y;
                }
            }
        }
        Some(inv)
    }

    /// Convert to floating point.
    pub fn to_dense(&self) -> DenseMap {
        DMatrix::from_fn(self.rows, self.cols, |i, j| rat_to_f64(&self[(i, j)]))
    }
}

impl std::ops::Index<(usize, usize)> for RationalMap {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RationalMap {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.entries[i * self.cols + j]
    }
}

pub fn rat_to_f64(x: &Rat) -> f64 {
    let num = x.numer();
    let den = x.denom();
    // good enough for catalog-scale rationals
    bigint_to_f64(num) / bigint_to_f64(den)
}

fn bigint_to_f64(x: &BigInt) -> f64 {
    let s = x.to_string();
    s.parse::<f64>().unwrap_or(f64::NAN)
}

/// Exact rank over the rationals by fraction-free (Bareiss) elimination on a
/// denominator-cleared integer copy.
pub fn exact_rank(m: &RationalMap) -> usize {
    let (rows, cols) = (m.rows, m.cols);
    if rows == 0 || cols == 0 {
        return 0;
    }
    // clear denominators row by row; row scaling does not change the rank
    let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(rows);
    for i in 0..rows {
        let mut lcm = BigInt::one();
        for j in 0..cols {
            let d = m[(i, j)].denom();
            lcm = num_integer_lcm(&lcm, d);
        }
        a.push(
            (0..cols)
                .map(|j| m[(i, j)].numer() * (&lcm / m[(i, j)].denom()))
                .collect(),
        );
    }
    let mut prev = BigInt::one();
    let mut r = 0usize;
    for c in 0..cols {
        if r >= rows {
            break;
        }
        let piv = match (r..rows).find(|&i| !a[i][c].is_zero()) {
            Some(p) => p,
            None => continue,
        };
        a.swap(r, piv);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let t = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                debug_assert!((&t % &prev).is_zero(), "Bareiss exact-division violated");
                a[i][j] = t / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

fn num_integer_lcm(a: &BigInt, b: &BigInt) -> BigInt {
    if a.is_zero() || b.is_zero() {
        return BigInt::zero();
    }
    let g = num_integer_gcd(a, b);
    (a / &g * b).abs()
}

fn num_integer_gcd(a: &BigInt, b: &BigInt) -> BigInt {
    let mut a = a.abs();
    let mut b = b.abs();
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

/// Basis of the rational nullspace (right kernel), one kernel vector per row.
pub fn exact_nullspace(m: &RationalMap) -> Vec<Vec<Rat>> {
    let (rows, cols) = (m.rows, m.cols);
    let mut a: Vec<Vec<Rat>> = (0..rows).map(|i| m.row(i).to_vec()).collect();
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut r = 0usize;
    for c in 0..cols {
        if r >= rows {
            break;
        }
        let piv = match (r..rows).find(|&i| !a[i][c].is_zero()) {
            Some(p) => p,
            None => continue,
        };
        a.swap(r, piv);
        let p = a[r][c].clone();
        for j in c..cols {
            a[r][j] = &a[r][j] / &p;
        }
        for i in 0..rows {
            if i == r || a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone();
            for j in c..cols {
                let x = &a[r][j] * &f;
                a[i][j] -= x;
            }
        }
        pivot_cols.push(c);
        r += 1;
    }
    let free_cols: Vec<usize> = (0..cols).filter(|c| !pivot_cols.contains(c)).collect();
    let mut kernel = Vec::with_capacity(free_cols.len());
    for &fc in &free_cols {
        let mut v = vec![Rat::zero(); cols];
        v[fc] = Rat::one();
        for (pi, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = -a[pi][fc].clone();
        }
        kernel.push(v);
    }
    kernel
}

/// Row span basis (reduced row echelon form, zero rows dropped).
pub fn exact_row_basis(m: &RationalMap) -> Vec<Vec<Rat>> {
    let (rows, cols) = (m.rows, m.cols);
    let mut a: Vec<Vec<Rat>> = (0..rows).map(|i| m.row(i).to_vec()).collect();
    let mut r = 0usize;
    for c in 0..cols {
        if r >= rows {
            break;
        }
        let piv = match (r..rows).find(|&i| !a[i][c].is_zero()) {
            Some(p) => p,
            None => continue,
        };
        a.swap(r, piv);
        let p = a[r][c].clone();
        for j in c..cols {
            a[r][j] = &a[r][j] / &p;
        }
        for i in 0..rows {
            if i == r || a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone();
            for j in c..cols {
                let x = &a[r][j] * &f;
                a[i][j] -= x;
            }
        }
        r += 1;
    }
    a.truncate(r);
    a
}

/// Incremental rational span: rows are reduced against the current echelon
/// basis and appended when independent.
#[derive(Debug, Clone, Default)]
pub struct ExactSpan {
    cols: usize,
    // rows in echelon form with recorded pivot columns
    rows: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
}

impl ExactSpan {
    pub fn new(cols: usize) -> Self {
        ExactSpan { cols, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Rat>] {
        &self.rows
    }

    /// Reduce `v` against the span; returns true when it was independent and
    /// has been added.
    pub fn insert(&mut self, v: &[Rat]) -> bool {
        assert_eq!(v.len(), self.cols);
        let mut w = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !w[p].is_zero() {
                let f = w[p].clone();
                for j in 0..self.cols {
                    if !row[j].is_zero() {
                        let x = &row[j] * &f;
                        w[j] -= x;
                    }
                }
            }
        }
        match w.iter().position(|x| !x.is_zero()) {
            None => false,
            Some(p) => {
                let lead = w[p].clone();
                for x in w.iter_mut() {
                    *x = &*x / &lead;
                }
                self.rows.push(w);
                self.pivots.push(p);
                true
            }
        }
    }

    /// Whether `v` lies in the span.
    pub fn contains(&self, v: &[Rat]) -> bool {
        let mut w = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !w[p].is_zero() {
                let f = w[p].clone();
                for j in 0..self.cols {
                    if !row[j].is_zero() {
                        let x = &row[j] * &f;
                        w[j] -= x;
                    }
                }
            }
        }
        w.iter().all(|x| x.is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_has_full_rank_trivial_kernel() {
        let m = DMatrix::<f64>::identity(3, 3);
        let (r, k) = rank_nullspace(&m, 1e-9).unwrap();
        assert_eq!(r, 3);
        assert_eq!(k.dim(), 0);
    }

    #[test]
    fn zero_map_kernel_is_everything() {
        let m = DMatrix::<f64>::zeros(3, 3);
        let (r, k) = rank_nullspace(&m, 1e-9).unwrap();
        assert_eq!(r, 0);
        assert_eq!(k.dim(), 3);
    }

    #[test]
    fn collapsing_map_kernel() {
        // e1 -> e1, e2 -> e1, e3 -> 0
        let m = DMatrix::from_row_slice(3, 3, &[1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
        let (r, k) = rank_nullspace(&m, 1e-9).unwrap();
        assert_eq!(r, 1);
        assert_eq!(k.dim(), 2);
        // kernel contains (1,-1,0)/sqrt(2) and e3 (exact elimination oracle)
        let v1 = DVector::from_vec(vec![1.0 / 2f64.sqrt(), -1.0 / 2f64.sqrt(), 0.0]);
        let v2 = DVector::from_vec(vec![0.0, 0.0, 1.0]);
        assert!(k.contains_vector(&v1).unwrap());
        assert!(k.contains_vector(&v2).unwrap());
    }

    #[test]
    fn non_finite_rejected() {
        let m = DMatrix::from_row_slice(1, 2, &[f64::NAN, 1.0]);
        assert!(rank_nullspace(&m, 1e-9).is_err());
    }

    #[test]
    fn subspace_examples() {
        let tol = 1e-9;
        let e = |i: usize| {
            let mut v = DVector::zeros(3);
            v[i] = 1.0;
            v
        };
        let xy = Subspace::span(3, &[e(0), e(1)], tol);
        let yz = Subspace::span(3, &[e(1), e(2)], tol);
        let cap = xy.intersect(&yz).unwrap();
        assert_eq!(cap.dim(), 1);
        assert!(cap.contains_vector(&e(1)).unwrap());

        let x = Subspace::span(3, &[e(0)], tol);
        let c = x.complement().unwrap();
        assert_eq!(c.dim(), 2);
        assert!(c.contains_vector(&e(1)).unwrap());
        assert!(c.contains_vector(&e(2)).unwrap());
    }

    #[test]
    fn exact_rank_examples() {
        assert_eq!(exact_rank(&RationalMap::identity(4)), 4);
        // rank-1 outer product of (1,2) and (3,4)
        let m = RationalMap::from_i64(2, 2, &[3, 4, 6, 8]);
        assert_eq!(exact_rank(&m), 1);
    }

    #[test]
    fn exact_nullspace_matches_rank() {
        let m = RationalMap::from_i64(2, 4, &[1, 2, 3, 4, 2, 4, 6, 8]);
        assert_eq!(exact_rank(&m), 1);
        let k = exact_nullspace(&m);
        assert_eq!(k.len(), 3);
        for v in &k {
            let mv = m.mul_vec(v);
            assert!(mv.iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn exact_span_insert() {
        let mut s = ExactSpan::new(3);
        assert!(s.insert(&[rat_int(1), rat_int(2), rat_int(0)]));
        assert!(!s.insert(&[rat_int(2), rat_int(4), rat_int(0)]));
        assert!(s.insert(&[rat_int(0), rat_int(0), rat_int(5)]));
        assert_eq!(s.dim(), 2);
        assert!(s.contains(&[rat_int(3), rat_int(6), rat_int(-5)]));
        assert!(!s.contains(&[rat_int(1), rat_int(0), rat_int(0)]));
    }
}
