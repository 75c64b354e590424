//! Dense linear algebra over [`Gf`]: matrices, reduced echelon forms and subspaces.

use crate::error::{Error, Result};
use crate::field::{Elem, Gf};

pub type Vector = Vec<Elem>;

pub fn zero_vec(n: usize) -> Vector {
    vec![0; n]
}

pub fn unit_vec(n: usize, i: usize) -> Vector {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

pub fn is_zero(v: &[Elem]) -> bool {
    v.iter().all(|&x| x == 0)
}

pub fn add_vec(f: &Gf, a: &[Elem], b: &[Elem]) -> Vector {
    a.iter().zip(b).map(|(&x, &y)| f.add(x, y)).collect()
}

pub fn sub_vec(f: &Gf, a: &[Elem], b: &[Elem]) -> Vector {
    a.iter().zip(b).map(|(&x, &y)| f.sub(x, y)).collect()
}

pub fn scale_vec(f: &Gf, c: Elem, a: &[Elem]) -> Vector {
    a.iter().map(|&x| f.mul(c, x)).collect()
}

/// `acc += c * a`
pub fn axpy(f: &Gf, acc: &mut [Elem], c: Elem, a: &[Elem]) {
    if c == 0 {
        return;
    }
    for (x, &y) in acc.iter_mut().zip(a) {
        if y != 0 {
            *x = f.add(*x, f.mul(c, y));
        }
    }
}

/// Row-major dense matrix. Acts on column vectors: `(M v)_i = sum_j M[i][j] v_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    field: Gf,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl Matrix {
    pub fn zeros(field: &Gf, rows: usize, cols: usize) -> Self {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: &Gf, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_rows(field: &Gf, rows: &[Vector]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            data.extend_from_slice(r);
        }
        Matrix {
            field: field.clone(),
            rows: rows.len(),
            cols,
            data,
        }
    }

    /// Matrix whose j-th column is `cols[j]`.
    pub fn from_columns(field: &Gf, n_rows: usize, cols: &[Vector]) -> Self {
        let mut m = Self::zeros(field, n_rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for i in 0..n_rows {
                m.data[i * cols.len() + j] = c[i];
            }
        }
        m
    }

    pub fn from_ints(field: &Gf, rows: &[Vec<i64>]) -> Self {
        let rows: Vec<Vector> = rows
            .iter()
            .map(|r| r.iter().map(|&x| field.from_int(x)).collect())
            .collect();
        Self::from_rows(field, &rows)
    }

    pub fn diagonal(field: &Gf, diag: &[Elem]) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(field, n, n);
        for (i, &d) in diag.iter().enumerate() {
            m.data[i * n + i] = d;
        }
        m
    }

    pub fn field(&self) -> &Gf {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Elem {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b != 0 {
                        let idx = i * other.cols + j;
                        out.data[idx] = f.add(out.data[idx], f.mul(a, b));
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Elem]) -> Vector {
        assert_eq!(self.cols, v.len());
        let f = &self.field;
        (0..self.rows)
            .map(|i| {
                self.row(i).iter().zip(v).fold(0, |acc, (&a, &b)| {
                    if a == 0 || b == 0 {
                        acc
                    } else {
                        f.add(acc, f.mul(a, b))
                    }
                })
            })
            .collect()
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        let f = &self.field;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f.sub(a, b))
            .collect();
        Matrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn scale(&self, c: Elem) -> Matrix {
        let f = &self.field;
        let data = self.data.iter().map(|&a| f.mul(c, a)).collect();
        Matrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..self.cols).all(|j| self.get(i, j) == (i == j) as Elem))
    }

    pub fn pow(&self, mut e: u64) -> Matrix {
        let mut result = Matrix::identity(&self.field, self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        result
    }

    /// Reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let f = self.field.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| self.get(i, c) != 0) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, r * self.cols + j);
                }
            }
            let inv = f.inv(self.get(r, c)).unwrap();
            for j in 0..self.cols {
                let v = self.get(r, j);
                self.set(r, j, f.mul(inv, v));
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self.get(i, c);
                if factor == 0 {
                    continue;
                }
                for j in 0..self.cols {
                    let v = f.sub(self.get(i, j), f.mul(factor, self.get(r, j)));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of `{v : M v = 0}`.
    pub fn kernel(&self) -> Vec<Vector> {
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let f = &self.field;
        free.iter()
            .map(|&fc| {
                let mut v = zero_vec(self.cols);
                v[fc] = 1;
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = f.neg(m.get(r, fc));
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(&self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, 1);
        }
        let pivots = aug.rref();
        if n > 0 && (pivots.len() < n || pivots[n - 1] != n - 1) {
            return None;
        }
        let mut inv = Matrix::zeros(&self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, aug.get(i, n + j));
            }
        }
        Some(inv)
    }

    pub fn determinant(&self) -> Elem {
        assert_eq!(self.rows, self.cols);
        let f = self.field.clone();
        let n = self.rows;
        let mut m = self.clone();
        let mut det = 1;
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| m.get(i, c) != 0) else {
                return 0;
            };
            if p != c {
                for j in 0..n {
                    m.data.swap(p * n + j, c * n + j);
                }
                det = f.neg(det);
            }
            let pivot = m.get(c, c);
            det = f.mul(det, pivot);
            let inv = f.inv(pivot).unwrap();
            for i in c + 1..n {
                let factor = f.mul(m.get(i, c), inv);
                if factor == 0 {
                    continue;
                }
                for j in c..n {
                    let v = f.sub(m.get(i, j), f.mul(factor, m.get(c, j)));
                    m.set(i, j, v);
                }
            }
        }
        det
    }

    /// Solve `M x = b` for square invertible `M`.
    pub fn solve(&self, b: &[Elem]) -> Result<Vector> {
        let inv = self.inverse().ok_or(Error::SingularSystem)?;
        Ok(inv.apply(b))
    }

    /// Same entries reinterpreted over a field that contains this one as its prime subfield.
    pub fn embed(&self, field: &Gf) -> Matrix {
        Matrix {
            field: field.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.clone(),
        }
    }
}

/// A subspace of `field^ambient`, stored as the rows of its reduced echelon basis.
/// Two subspaces are equal iff their stored bases are equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    field: Gf,
    ambient: usize,
    basis: Vec<Vector>,
}

impl Subspace {
    pub fn zero(field: &Gf, ambient: usize) -> Self {
        Subspace {
            field: field.clone(),
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(field: &Gf, ambient: usize) -> Self {
        Subspace {
            field: field.clone(),
            ambient,
            basis: (0..ambient).map(|i| unit_vec(ambient, i)).collect(),
        }
    }

    pub fn span<I>(field: &Gf, ambient: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = Vector>,
    {
        let rows: Vec<Vector> = vectors.into_iter().filter(|v| !is_zero(v)).collect();
        if rows.is_empty() {
            return Self::zero(field, ambient);
        }
        let mut m = Matrix::from_rows(field, &rows);
        let rank = m.rref().len();
        let basis = (0..rank).map(|i| m.row(i).to_vec()).collect();
        Subspace {
            field: field.clone(),
            ambient,
            basis,
        }
    }

    pub fn field(&self) -> &Gf {
        &self.field
    }
    pub fn ambient(&self) -> usize {
        self.ambient
    }
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }
    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn contains(&self, v: &[Elem]) -> bool {
        if is_zero(v) {
            return true;
        }
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        Matrix::from_rows(&self.field, &rows).rank() == self.dim()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis.iter().all(|b| other.contains(b))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Subspace::span(
            &self.field,
            self.ambient,
            self.basis.iter().chain(&other.basis).cloned(),
        )
    }

    pub fn sum_all<'a, I>(field: &Gf, ambient: usize, spaces: I) -> Subspace
    where
        I: IntoIterator<Item = &'a Subspace>,
    {
        Subspace::span(
            field,
            ambient,
            spaces.into_iter().flat_map(|s| s.basis.iter().cloned()),
        )
    }

    /// Zassenhaus intersection.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        let n = self.ambient;
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(&self.field, n);
        }
        let mut rows = Vec::new();
        for b in &self.basis {
            let mut r = b.clone();
            r.extend_from_slice(b);
            rows.push(r);
        }
        for b in &other.basis {
            let mut r = b.clone();
            r.extend(std::iter::repeat(0).take(n));
            rows.push(r);
        }
        let mut m = Matrix::from_rows(&self.field, &rows);
        let rank = m.rref().len();
        let vecs = (0..rank)
            .filter(|&i| is_zero(&m.row(i)[..n]))
            .map(|i| m.row(i)[n..].to_vec());
        Subspace::span(&self.field, n, vecs)
    }

    /// Image under a linear map.
    pub fn image(&self, m: &Matrix) -> Subspace {
        Subspace::span(&self.field, m.rows(), self.basis.iter().map(|b| m.apply(b)))
    }

    /// Same subspace over an extension field.
    pub fn embed(&self, field: &Gf) -> Subspace {
        Subspace {
            field: field.clone(),
            ambient: self.ambient,
            basis: self.basis.clone(),
        }
    }
}
