//! Exact linear algebra over the rationals.
//!
//! Matrices are stored densely, but every elimination routine works on sparse
//! rows: the differentials produced by the complex builders are overwhelmingly
//! zero and rows rarely fill in.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Exact rational number, always in lowest terms with a positive denominator.
pub type Scalar = BigRational;

pub fn scalar(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_scalar(s: &str) -> Result<Scalar, LinAlgError> {
    Scalar::from_str(s.trim()).map_err(|_| LinAlgError::BadScalar(s.to_string()))
}

/// Formats as `"p/q"`, or `"p"` when the denominator is one.
pub fn format_scalar(x: &Scalar) -> String {
    x.to_string()
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinAlgError {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("composite of consecutive differentials is not zero")]
    CompositionNotZero,
    #[error("image of source basis vector {column} leaves the target subspace")]
    NotInvariant { column: usize },
    #[error("cannot parse rational {0:?}")]
    BadScalar(String),
}

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(format_scalar).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| scalar(x)).collect())
                .collect(),
        )
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<Scalar>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length");
            for (i, x) in col.iter().enumerate() {
                if !x.is_zero() {
                    m.set(i, j, x.clone());
                }
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

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: Scalar) {
        self.data[r * self.cols + c] = x;
    }

    pub fn add_to(&mut self, r: usize, c: usize, x: &Scalar) {
        self.data[r * self.cols + c] += x;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Scalar>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                let x = self.get(r, c);
                if !x.is_zero() {
                    t.set(c, r, x.clone());
                }
            }
        }
        t
    }

    pub fn neg(&self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub(crate) fn sparse_rows(&self) -> Vec<SparseRow> {
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(c, x)| (c, x.clone()))
                    .collect()
            })
            .collect()
    }

    pub fn try_mul(&self, rhs: &Matrix) -> Result<Matrix, LinAlgError> {
        if self.cols != rhs.rows {
            return Err(LinAlgError::ShapeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let rhs_rows = rhs.sparse_rows();
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for (k, a) in self.row(i).iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (j, b) in &rhs_rows[k] {
                    out.add_to(i, *j, &(a * b));
                }
            }
        }
        Ok(out)
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        self.try_mul(rhs).expect("matrix shapes")
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length");
        let nz: Vec<(usize, &Scalar)> =
            v.iter().enumerate().filter(|(_, x)| !x.is_zero()).collect();
        (0..self.rows)
            .map(|r| {
                let mut acc = Scalar::zero();
                for (c, x) in &nz {
                    let a = self.get(r, *c);
                    if !a.is_zero() {
                        acc += a * *x;
                    }
                }
                acc
            })
            .collect()
    }

    /// Entries in row-major order formatted as `"p/q"` strings.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|r| self.row(r).iter().map(format_scalar).collect())
            .collect()
    }
}

pub(crate) type SparseRow = Vec<(usize, Scalar)>;
type IntRow = Vec<(usize, BigInt)>;

fn primitive(row: &mut IntRow) {
    let mut g = BigInt::zero();
    for (_, x) in row.iter() {
        g = g.gcd(x);
        if g.is_one() {
            break;
        }
    }
    let flip = row.first().is_some_and(|(_, x)| x.is_negative());
    if g.is_zero() {
        return;
    }
    let g = if flip { -g } else { g };
    if !g.is_one() {
        for (_, x) in row.iter_mut() {
            *x = &*x / &g;
        }
    }
}

/// `a*row - b*pivot` merged over sparse supports; zero entries are dropped.
fn int_combine(row: &IntRow, a: &BigInt, pivot: &IntRow, b: &BigInt) -> IntRow {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let (c, v) = match (row.get(i), pivot.get(j)) {
            (Some((ci, x)), Some((cj, y))) if ci == cj => {
                i += 1;
                j += 1;
                (*ci, a * x - b * y)
            }
            (Some((ci, x)), Some((cj, _))) if ci < cj => {
                i += 1;
                (*ci, a * x)
            }
            (Some((ci, x)), None) => {
                i += 1;
                (*ci, a * x)
            }
            (_, Some((cj, y))) => {
                j += 1;
                (*cj, -(b * y))
            }
            (None, None) => unreachable!(),
        };
        if !v.is_zero() {
            out.push((c, v));
        }
    }
    out
}

fn to_int_row(row: &SparseRow) -> IntRow {
    let mut den = BigInt::one();
    for (_, x) in row {
        den = den.lcm(x.denom());
    }
    let mut out: IntRow = row
        .iter()
        .map(|(c, x)| (*c, x.numer() * (&den / x.denom())))
        .collect();
    primitive(&mut out);
    out
}

/// Exact rank by fraction-free elimination: every row is kept as a primitive
/// integer vector and reduced against pivots by cross multiplication.
pub fn rank(m: &Matrix) -> usize {
    rank_of_rows(m.sparse_rows())
}

pub(crate) fn rank_of_rows(rows: Vec<SparseRow>) -> usize {
    let mut pivots: BTreeMap<usize, IntRow> = BTreeMap::new();
    for row in rows {
        let mut row = to_int_row(&row);
        while let Some((lead, x)) = row.first().cloned() {
            match pivots.get(&lead) {
                Some(p) => {
                    let y = &p[0].1;
                    let g = x.gcd(y);
                    row = int_combine(&row, &(y / &g), p, &(&x / &g));
                    primitive(&mut row);
                }
                None => {
                    pivots.insert(lead, row);
                    break;
                }
            }
        }
    }
    pivots.len()
}

fn rat_axpy(row: &SparseRow, s: &Scalar, pivot: &SparseRow) -> SparseRow {
    // row - s * pivot
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let (c, v) = match (row.get(i), pivot.get(j)) {
            (Some((ci, x)), Some((cj, y))) if ci == cj => {
                i += 1;
                j += 1;
                (*ci, x - s * y)
            }
            (Some((ci, x)), Some((cj, _))) if ci < cj => {
                i += 1;
                (*ci, x.clone())
            }
            (Some((ci, x)), None) => {
                i += 1;
                (*ci, x.clone())
            }
            (_, Some((cj, y))) => {
                j += 1;
                (*cj, -(s * y))
            }
            (None, None) => unreachable!(),
        };
        if !v.is_zero() {
            out.push((c, v));
        }
    }
    out
}

/// Reduced row echelon form of the span of `rows`: returns the nonzero rows
/// keyed by pivot column, each with a leading one and zeros in every other
/// pivot column.
pub(crate) fn rref_rows(rows: Vec<SparseRow>) -> BTreeMap<usize, SparseRow> {
    let mut pivots: BTreeMap<usize, SparseRow> = BTreeMap::new();
    for mut row in rows {
        while let Some((lead, x)) = row.first().cloned() {
            match pivots.get(&lead) {
                Some(p) => row = rat_axpy(&row, &x, p),
                None => {
                    let inv = x.recip();
                    for (_, v) in row.iter_mut() {
                        *v = &*v * &inv;
                    }
                    pivots.insert(lead, row);
                    break;
                }
            }
        }
    }
    // back substitution, highest pivot first
    let cols: Vec<usize> = pivots.keys().rev().copied().collect();
    for &c in &cols {
        let p = pivots[&c].clone();
        for (_, row) in pivots.range_mut(..c) {
            if let Some(pos) = row.iter().position(|(k, _)| *k == c) {
                let s = row[pos].1.clone();
                *row = rat_axpy(row, &s, &p);
            }
        }
    }
    pivots
}

fn dense(row: &SparseRow, n: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    for (c, x) in row {
        v[*c] = x.clone();
    }
    v
}

/// A linear subspace of `k^n`, stored by a basis in reduced column echelon
/// form: basis vector `i` has a one at `pivots[i]` and every other basis
/// vector vanishes there.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::zeros(ambient_dim, 0),
            pivots: vec![],
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::identity(ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Span of arbitrary (possibly dependent) vectors.
    pub fn span<I>(ambient_dim: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = Vec<Scalar>>,
    {
        let rows: Vec<SparseRow> = vectors
            .into_iter()
            .map(|v| {
                assert_eq!(v.len(), ambient_dim, "vector length");
                v.into_iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .collect()
            })
            .collect();
        Self::from_rref(ambient_dim, rref_rows(rows))
    }

    fn from_rref(ambient_dim: usize, rref: BTreeMap<usize, SparseRow>) -> Self {
        let pivots: Vec<usize> = rref.keys().copied().collect();
        let cols: Vec<Vec<Scalar>> = rref.values().map(|r| dense(r, ambient_dim)).collect();
        Subspace {
            ambient_dim,
            basis: Matrix::from_columns(ambient_dim, &cols),
            pivots,
        }
    }

    /// Column space of `m`.
    pub fn image(m: &Matrix) -> Self {
        Self::span(m.rows(), m.columns())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        self.basis.column(i)
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates not used as pivots; the corresponding unit vectors span a
    /// complement of this subspace.
    pub fn complement_coordinates(&self) -> Vec<usize> {
        (0..self.ambient_dim)
            .filter(|i| !self.pivots.contains(i))
            .collect()
    }

    /// Coordinates of `v` in this basis, or `None` when `v` is outside.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(v.len(), self.ambient_dim, "vector length");
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut residual = v.to_vec();
        for (i, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for r in 0..self.ambient_dim {
                let b = self.basis.get(r, i);
                if !b.is_zero() {
                    residual[r] -= c * b;
                }
            }
        }
        residual.iter().all(Zero::is_zero).then_some(coords)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        (0..other.dim()).all(|i| self.contains(&other.basis_vector(i)))
    }

    /// Matrix of the quotient map `k^n -> k^n / self` in the coordinates of
    /// [`Self::complement_coordinates`].
    pub fn quotient_projection(&self) -> Matrix {
        let comp = self.complement_coordinates();
        let mut p = Matrix::zeros(comp.len(), self.ambient_dim);
        for (row, &c) in comp.iter().enumerate() {
            p.set(row, c, Scalar::one());
        }
        // a pivot unit vector is congruent to minus the rest of its basis vector
        for (i, &piv) in self.pivots.iter().enumerate() {
            for (row, &c) in comp.iter().enumerate() {
                let b = self.basis.get(c, i);
                if !b.is_zero() {
                    p.set(row, piv, -b);
                }
            }
        }
        p
    }
}

pub fn kernel_basis(m: &Matrix) -> Subspace {
    let n = m.cols();
    let rref = rref_rows(m.sparse_rows());
    let pivot_cols: Vec<usize> = rref.keys().copied().collect();
    let free: Vec<usize> = (0..n).filter(|c| !rref.contains_key(c)).collect();
    let vectors = free.iter().map(|&f| {
        let mut v = vec![Scalar::zero(); n];
        v[f] = Scalar::one();
        for &p in &pivot_cols {
            if let Some((_, x)) = rref[&p].iter().find(|(c, _)| *c == f) {
                v[p] = -x.clone();
            }
        }
        v
    });
    Subspace::span(n, vectors.collect::<Vec<_>>())
}

/// `dim ker(d_out) - rank(d_in)` after checking shapes and `d_out * d_in = 0`.
pub fn homology_dimension(d_out: &Matrix, d_in: &Matrix) -> Result<usize, LinAlgError> {
    if d_out.cols() != d_in.rows() {
        return Err(LinAlgError::ShapeMismatch(format!(
            "outgoing map has {} columns but incoming map has {} rows",
            d_out.cols(),
            d_in.rows()
        )));
    }
    if !d_out.mul(d_in).is_zero() {
        return Err(LinAlgError::CompositionNotZero);
    }
    Ok(d_out.cols() - rank(d_out) - rank(d_in))
}

/// Matrix of `f` restricted to `source` and corestricted to `target`, both in
/// their own bases.
pub fn restrict_map(
    f: &Matrix,
    source: &Subspace,
    target: &Subspace,
) -> Result<Matrix, LinAlgError> {
    if f.cols() != source.ambient_dim() || f.rows() != target.ambient_dim() {
        return Err(LinAlgError::ShapeMismatch(format!(
            "map is {}x{} but subspaces live in k^{} and k^{}",
            f.rows(),
            f.cols(),
            source.ambient_dim(),
            target.ambient_dim()
        )));
    }
    let image = f.mul(source.basis());
    let mut columns = Vec::with_capacity(source.dim());
    for j in 0..source.dim() {
        let coords = target
            .coordinates(&image.column(j))
            .ok_or(LinAlgError::NotInvariant { column: j })?;
        columns.push(coords);
    }
    Ok(Matrix::from_columns(target.dim(), &columns))
}

/// A 3-index array `t[i][j][k]`, stored with `k` fastest so that the output
/// vector of a basis product is a contiguous slice.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tensor3 {
    dims: [usize; 3],
    data: Vec<Scalar>,
}

impl Tensor3 {
    pub fn zeros(a: usize, b: usize, c: usize) -> Self {
        Tensor3 {
            dims: [a, b, c],
            data: vec![Scalar::zero(); a * b * c],
        }
    }

    pub fn dims(&self) -> [usize; 3] {
        self.dims
    }

    fn offset(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < self.dims[0] && j < self.dims[1]);
        (i * self.dims[1] + j) * self.dims[2]
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.data[self.offset(i, j) + k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, x: Scalar) {
        let o = self.offset(i, j);
        self.data[o + k] = x;
    }

    pub fn set_vec(&mut self, i: usize, j: usize, v: &[Scalar]) {
        assert_eq!(v.len(), self.dims[2]);
        let o = self.offset(i, j);
        self.data[o..o + v.len()].clone_from_slice(v);
    }

    pub fn vec(&self, i: usize, j: usize) -> &[Scalar] {
        let o = self.offset(i, j);
        &self.data[o..o + self.dims[2]]
    }

    /// Bilinear extension: `sum_ij u_i v_j t[i][j][.]`.
    pub fn apply(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dims[2]];
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (o, x) in out.iter_mut().zip(self.vec(i, j)) {
                    if !x.is_zero() {
                        *o += &ab * x;
                    }
                }
            }
        }
        out
    }

    /// Swaps the first two indices.
    pub fn transpose12(&self) -> Tensor3 {
        let [a, b, c] = self.dims;
        let mut t = Tensor3::zeros(b, a, c);
        for i in 0..a {
            for j in 0..b {
                t.set_vec(j, i, self.vec(i, j));
            }
        }
        t
    }

    /// The matrix of `v -> t(i, v)` for fixed first index.
    pub fn left_matrix(&self, i: usize) -> Matrix {
        let [_, b, c] = self.dims;
        let mut m = Matrix::zeros(c, b);
        for j in 0..b {
            for (k, x) in self.vec(i, j).iter().enumerate() {
                if !x.is_zero() {
                    m.set(k, j, x.clone());
                }
            }
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn neg(&self) -> Tensor3 {
        Tensor3 {
            dims: self.dims,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }
}

pub fn unit(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn add_scaled(acc: &mut [Scalar], s: &Scalar, v: &[Scalar]) {
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += s * x;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_i64(rows)
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&Matrix::identity(3)), 3);
        assert_eq!(rank(&Matrix::zeros(2, 5)), 0);
        assert_eq!(rank(&m(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(&Matrix::zeros(0, 4)), 0);
    }

    #[test]
    fn rank_with_fractions() {
        let a = Matrix::from_rows(vec![
            vec![ratio(1, 2), ratio(1, 3)],
            vec![ratio(3, 2), scalar(1)],
            vec![ratio(-1, 7), ratio(2, 5)],
        ]);
        assert_eq!(rank(&a), 2);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel_basis(&Matrix::identity(2)).dim(), 0);
        let k = kernel_basis(&Matrix::zeros(1, 3));
        assert_eq!((k.dim(), k.ambient_dim()), (3, 3));
        let k = kernel_basis(&m(&[&[1, 1]]));
        assert_eq!(k.dim(), 1);
        assert!(k.contains(&[scalar(1), scalar(-1)]));
        assert!(!k.contains(&[scalar(1), scalar(1)]));
    }

    #[test]
    fn homology_dimension_examples() {
        let z = Matrix::zeros(1, 1);
        assert_eq!(homology_dimension(&z, &z).unwrap(), 1);
        assert_eq!(
            homology_dimension(&Matrix::identity(2), &Matrix::zeros(2, 2)).unwrap(),
            0
        );
        // weight-2 degree-1 block of the Loday complex of [x,x] = y:
        // C_2 = span{xx, xy, yx, yy}, d_2(ab) = [b,a]
        let d2 = m(&[&[0, 0, 0, 0], &[1, 0, 0, 0]]);
        assert_eq!(homology_dimension(&Matrix::zeros(1, 2), &d2).unwrap(), 1);
    }

    #[test]
    fn homology_dimension_errors() {
        let e = homology_dimension(&Matrix::identity(2), &Matrix::identity(2));
        assert_eq!(e, Err(LinAlgError::CompositionNotZero));
        let e = homology_dimension(&Matrix::identity(2), &Matrix::zeros(3, 1));
        assert!(matches!(e, Err(LinAlgError::ShapeMismatch(_))));
    }

    #[test]
    fn restrict_examples() {
        let s = Subspace::span(
            3,
            vec![
                vec![scalar(1), scalar(1), scalar(0)],
                vec![scalar(0), scalar(1), scalar(1)],
            ],
        );
        assert_eq!(
            restrict_map(&Matrix::identity(3), &s, &s).unwrap(),
            Matrix::identity(2)
        );
        assert_eq!(
            restrict_map(&Matrix::zeros(3, 3), &s, &s).unwrap(),
            Matrix::zeros(2, 2)
        );
        // swapping the first and third coordinate does not preserve s
        let swap = m(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]);
        let line = Subspace::span(3, vec![vec![scalar(1), scalar(0), scalar(0)]]);
        assert_eq!(
            restrict_map(&swap, &line, &line),
            Err(LinAlgError::NotInvariant { column: 0 })
        );
    }

    #[test]
    fn quotient_projection_kills_subspace() {
        let s = Subspace::span(3, vec![vec![scalar(2), scalar(4), scalar(0)]]);
        let p = s.quotient_projection();
        assert_eq!(p.rows(), 2);
        assert!(p.mul(s.basis()).is_zero());
        assert_eq!(rank(&p), 2);
    }

    #[test]
    fn scalar_strings() {
        assert_eq!(format_scalar(&ratio(6, -4)), "-3/2");
        assert_eq!(format_scalar(&scalar(5)), "5");
        assert_eq!(parse_scalar("-3/2").unwrap(), ratio(-3, 2));
        assert_eq!(parse_scalar(" 7 ").unwrap(), scalar(7));
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("x").is_err());
    }
}
