//! Exact linear algebra: dense rational matrices and the subspace lattice.
//!
//! Subspaces are stored as reduced row-echelon bases, so equality is a plain
//! basis comparison and every operation has a single canonical answer.
//! Dimensions in this crate stay below ~20, hence dense storage throughout.

use crate::rat::{rone, rzero, Rat};
use num::Zero;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("matrix is singular")]
    Singular,
}

/// Dense row-major matrix over the rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rat>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        Matrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix::new(rows, cols, vec![rzero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, rone());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(nrows * ncols);
        for r in rows {
            assert_eq!(r.len(), ncols, "ragged rows");
            entries.extend(r);
        }
        Matrix::new(nrows, ncols, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Rat {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rat>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let mut out = Matrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.at(i, j) + a * other.at(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len(), "vector length must match cols");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(rzero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn vcat(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "column counts must agree");
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Matrix::new(self.rows + other.rows, self.cols, entries)
    }

    /// Unique reduced row-echelon form; the row space is unchanged.
    pub fn rref(&self) -> Matrix {
        let (m, _) = self.rref_with_pivots();
        m
    }

    pub fn rref_with_pivots(&self) -> (Matrix, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..a.cols {
            if r == a.rows {
                break;
            }
            let Some(p) = (r..a.rows).find(|&i| !a.at(i, c).is_zero()) else {
                continue;
            };
            a.swap_rows(r, p);
            let inv = a.at(r, c).recip();
            for j in c..a.cols {
                let v = a.at(r, j) * &inv;
                a.set(r, j, v);
            }
            for i in 0..a.rows {
                if i != r && !a.at(i, c).is_zero() {
                    let f = a.at(i, c).clone();
                    for j in c..a.cols {
                        let v = a.at(i, j) - &f * a.at(r, j);
                        a.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (a, pivots)
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref_with_pivots().1.len()
    }

    /// Right null space `{v : M v = 0}` in canonical form.
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref_with_pivots();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![rzero(); self.cols];
            v[f] = rone();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r.at(row, f).clone();
            }
            basis.push(v);
        }
        Subspace::from_vectors(self.cols, basis)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.at(i, j).clone());
            }
            aug.set(i, n + i, rone());
        }
        let (r, pivots) = aug.rref_with_pivots();
        if pivots != (0..n).collect::<Vec<_>>() {
            return None;
        }
        let mut inv = Matrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.at(i, n + j).clone());
            }
        }
        Some(inv)
    }
}

/// A linear subspace of `Q^ambient`, canonically presented by an RREF basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Rat>>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace::span_of_std(ambient, &(0..ambient).collect::<Vec<_>>())
    }

    /// Span of standard basis vectors at the given coordinates.
    pub fn span_of_std(ambient: usize, coords: &[usize]) -> Self {
        let vecs = coords
            .iter()
            .map(|&c| {
                let mut v = vec![rzero(); ambient];
                v[c] = rone();
                v
            })
            .collect();
        Subspace::from_vectors(ambient, vecs)
    }

    pub fn from_vectors(ambient: usize, vecs: Vec<Vec<Rat>>) -> Self {
        for v in &vecs {
            assert_eq!(v.len(), ambient, "vector length must match ambient dim");
        }
        if vecs.is_empty() {
            return Subspace::zero(ambient);
        }
        let r = Matrix::from_rows(vecs).rref();
        let basis = (0..r.rows())
            .map(|i| r.row(i).to_vec())
            .filter(|row| row.iter().any(|x| !x.is_zero()))
            .collect();
        Subspace { ambient, basis }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rat>] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.basis
            .iter()
            .map(|row| row.iter().position(|x| !x.is_zero()).expect("nonzero row"))
            .collect()
    }

    /// Residual of `v` after eliminating all pivot coordinates of the basis.
    /// Zero residual is exact membership.
    pub fn reduce(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(
            v.len(),
            self.ambient,
            "vector length must match ambient dim"
        );
        let mut out = v.to_vec();
        for (row, &p) in self.basis.iter().zip(self.pivots().iter()) {
            if !out[p].is_zero() {
                let f = out[p].clone();
                for (o, b) in out.iter_mut().zip(row) {
                    *o = &*o - &f * b;
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        self.reduce(v).iter().all(Rat::is_zero)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(other)?;
        let mut vecs = self.basis.clone();
        vecs.extend(other.basis.iter().cloned());
        Ok(Subspace::from_vectors(self.ambient, vecs))
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(other)?;
        // x lies in a row space iff it is orthogonal to the kernel of the
        // basis matrix, so the intersection is cut out by both kernels.
        let ca = self.constraints();
        let cb = other.constraints();
        if ca.rows() == 0 && cb.rows() == 0 {
            return Ok(Subspace::full(self.ambient));
        }
        Ok(ca.vcat(&cb).kernel())
    }

    /// Constraint matrix whose kernel is exactly this subspace.
    fn constraints(&self) -> Matrix {
        if self.basis.is_empty() {
            return Matrix::identity(self.ambient);
        }
        let m = Matrix::from_rows(self.basis.clone());
        let k = m.kernel();
        if k.basis.is_empty() {
            Matrix::zero(0, self.ambient)
        } else {
            Matrix::from_rows(k.basis)
        }
    }

    /// Coordinates not used as pivots, in increasing order; the standard
    /// basis vectors there complete this subspace to the ambient space.
    pub fn complement_coords(&self) -> Vec<usize> {
        let pivots = self.pivots();
        (0..self.ambient).filter(|c| !pivots.contains(c)).collect()
    }

    pub fn extend_complement(&self) -> Vec<Vec<Rat>> {
        self.complement_coords()
            .into_iter()
            .map(|c| {
                let mut v = vec![rzero(); self.ambient];
                v[c] = rone();
                v
            })
            .collect()
    }

    fn check_ambient(&self, other: &Subspace) -> Result<(), LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::AmbientMismatch(self.ambient, other.ambient));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rint};

    fn mat_i64(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rint(x)).collect())
                .collect(),
        )
    }

    fn vec_i64(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| rint(x)).collect()
    }

    #[test]
    fn rref_permutation() {
        let m = mat_i64(&[&[0, 1], &[1, 0]]);
        assert_eq!(m.rref(), Matrix::identity(2));
    }

    #[test]
    fn rref_rank_one() {
        let m = mat_i64(&[&[2, 4], &[1, 2]]);
        assert_eq!(m.rref(), mat_i64(&[&[1, 2], &[0, 0]]));
    }

    /// Independent elimination oracle: Bareiss fraction-free elimination to
    /// echelon form, followed by back-substitution over the rationals. Kept
    /// deliberately separate from `Matrix::rref`.
    fn oracle_rref(rows: &[Vec<i64>]) -> Matrix {
        let m = rows.len();
        let n = rows[0].len();
        let mut a: Vec<Vec<num::BigInt>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| num::BigInt::from(x)).collect())
            .collect();
        let mut prev = num::BigInt::from(1);
        let mut r = 0;
        let mut pivot_cols = Vec::new();
        for c in 0..n {
            if r == m {
                break;
            }
            let Some(p) = (r..m).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(r, p);
            for i in r + 1..m {
                for j in c + 1..n {
                    let v = (&a[r][c] * &a[i][j] - &a[i][c] * &a[r][j]) / &prev;
                    a[i][j] = v;
                }
                a[i][c] = num::BigInt::from(0);
            }
            prev = a[r][c].clone();
            pivot_cols.push(c);
            r += 1;
        }
        // Back-substitute in rational arithmetic.
        let mut q: Vec<Vec<Rat>> = a
            .into_iter()
            .take(r)
            .map(|row| row.into_iter().map(Rat::from_integer).collect())
            .collect();
        for i in (0..r).rev() {
            let p = pivot_cols[i];
            let inv = q[i][p].recip();
            for x in q[i].iter_mut() {
                *x = &*x * &inv;
            }
            for k in 0..i {
                if !q[k][p].is_zero() {
                    let f = q[k][p].clone();
                    for j in 0..n {
                        let v = &q[k][j] - &f * &q[i][j];
                        q[k][j] = v;
                    }
                }
            }
        }
        for _ in r..m {
            q.push(vec![rzero(); n]);
        }
        Matrix::from_rows(q)
    }

    #[test]
    fn rref_matches_fraction_free_oracle() {
        // Deterministic pseudo-random 3x3 integer matrices.
        let mut state: i64 = 9001;
        let mut next = move || {
            state = (state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407))
                % 1000;
            state % 7 - 3
        };
        for _ in 0..50 {
            let rows: Vec<Vec<i64>> = (0..3).map(|_| (0..3).map(|_| next()).collect()).collect();
            let m = Matrix::from_rows(
                rows.iter()
                    .map(|r| r.iter().map(|&x| rint(x)).collect())
                    .collect(),
            );
            assert_eq!(m.rref(), oracle_rref(&rows));
        }
    }

    #[test]
    fn kernel_identity_is_zero() {
        assert_eq!(Matrix::identity(3).kernel(), Subspace::zero(3));
    }

    #[test]
    fn kernel_of_zero_matrix_is_full() {
        assert_eq!(Matrix::zero(2, 3).kernel(), Subspace::full(3));
    }

    #[test]
    fn kernel_multiply_back() {
        let m = mat_i64(&[&[1, 1, 0]]);
        let k = m.kernel();
        assert_eq!(k.dim(), 2);
        for v in k.basis() {
            assert!(m.mul_vec(v).iter().all(Rat::is_zero));
        }
    }

    #[test]
    fn kernel_rank_dimension_count() {
        let m = mat_i64(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(m.kernel().dim() + m.rank(), m.cols());
    }

    #[test]
    fn sum_and_intersect_basics() {
        let e1 = Subspace::span_of_std(3, &[0]);
        let e2 = Subspace::span_of_std(3, &[1]);
        assert_eq!(e1.sum(&e2).unwrap().dim(), 2);

        let a = Subspace::span_of_std(3, &[0, 1]);
        let b = Subspace::span_of_std(3, &[1, 2]);
        assert_eq!(a.intersect(&b).unwrap(), Subspace::span_of_std(3, &[1]));
    }

    #[test]
    fn ambient_mismatch_is_reported() {
        let a = Subspace::span_of_std(3, &[0]);
        let b = Subspace::span_of_std(4, &[0]);
        assert_eq!(a.sum(&b), Err(LinalgError::AmbientMismatch(3, 4)));
        assert_eq!(a.intersect(&b), Err(LinalgError::AmbientMismatch(3, 4)));
    }

    #[test]
    fn contains_basis_vectors() {
        let s = Subspace::from_vectors(3, vec![vec_i64(&[1, 2, 0]), vec_i64(&[0, 1, 1])]);
        for v in s.basis() {
            assert!(s.contains(v));
        }
        assert!(!s.contains(&vec_i64(&[0, 0, 1])));
    }

    #[test]
    fn extend_complement_picks_smallest_free_coords() {
        let s = Subspace::from_vectors(4, vec![vec_i64(&[0, 1, 0, 2])]);
        assert_eq!(s.complement_coords(), vec![0, 2, 3]);
        let ext = s.extend_complement();
        assert_eq!(ext.len(), 3);
        assert_eq!(ext[0], vec_i64(&[1, 0, 0, 0]));
    }

    #[test]
    fn inverse_roundtrip() {
        let m = mat_i64(&[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(2));
        assert!(mat_i64(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn intersect_scaled_lines() {
        let a = Subspace::from_vectors(2, vec![vec![rat(1, 2), rint(1)]]);
        let b = Subspace::from_vectors(2, vec![vec![rint(1), rint(2)]]);
        assert_eq!(a, b);
        assert_eq!(a.intersect(&b).unwrap(), a);
    }
}
