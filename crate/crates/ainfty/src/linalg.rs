//! Dense exact linear algebra: reduced row echelon form, kernels, solving,
//! and echelonized subspaces. Everything is deterministic: pivots are chosen
//! left to right, kernels use the canonical echelon parametrization.

use crate::error::{Error, Result};
use crate::scalar::{FieldSpec, Scalar};

/// Dense matrix over one exact field, row major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub field: FieldSpec,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize, field: FieldSpec) -> Matrix {
        Matrix {
            rows,
            cols,
            field,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(n: usize, field: FieldSpec) -> Matrix {
        let mut m = Matrix::zero(n, n, field);
        for i in 0..n {
            *m.at_mut(i, i) = field.one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>, cols: usize, field: FieldSpec) -> Matrix {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "row length mismatch");
            for s in &r {
                assert_eq!(s.field(), field, "entry field mismatch");
            }
            data.extend(r);
        }
        Matrix {
            rows: n,
            cols,
            field,
            data,
        }
    }

    pub fn at(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Scalar {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vec(&self, r: usize) -> Vec<Scalar> {
        self.row(r).to_vec()
    }

    /// Matrix-vector product, x as a column.
    pub fn apply(&self, x: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(x.len(), self.cols, "apply: dimension mismatch");
        let mut out = vec![self.field.zero(); self.rows];
        for r in 0..self.rows {
            let mut acc = self.field.zero();
            for c in 0..self.cols {
                let e = self.at(r, c);
                if !e.is_zero() && !x[c].is_zero() {
                    acc = acc.add(&e.mul(&x[c]));
                }
            }
            out[r] = acc;
        }
        out
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "mul: dimension mismatch");
        let mut out = Matrix::zero(self.rows, other.cols, self.field);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.at(k, c);
                    if !b.is_zero() {
                        let v = out.at(r, c).add(&a.mul(b));
                        *out.at_mut(r, c) = v;
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zero(self.cols, self.rows, self.field);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *out.at_mut(c, r) = self.at(r, c).clone();
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|s| s.is_zero())
    }

    /// Reduced row echelon form plus the strictly increasing pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            // find a pivot in column c at or below row r
            let pivot_row = (r..m.rows).find(|&i| !m.at(i, c).is_zero());
            let Some(pr) = pivot_row else { continue };
            m.swap_rows(r, pr);
            let inv = m.at(r, c).inv();
            for cc in c..m.cols {
                let v = m.at(r, cc).mul(&inv);
                *m.at_mut(r, cc) = v;
            }
            for i in 0..m.rows {
                if i != r && !m.at(i, c).is_zero() {
                    let f = m.at(i, c).clone();
                    for cc in c..m.cols {
                        let v = m.at(i, cc).sub(&f.mul(m.at(r, cc)));
                        *m.at_mut(i, cc) = v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Canonical basis of the right null space: one vector per free column,
    /// with a 1 in the free coordinate and pivot entries read off the rref.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![self.field.zero(); self.cols];
            v[free] = self.field.one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = r.at(row, free).neg();
            }
            basis.push(v);
        }
        basis
    }

    /// Solve m x = b exactly; `None` when inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if b.len() != self.rows {
            return Err(Error::ShapeMismatch(format!(
                "solve: {} rows vs rhs of length {}",
                self.rows,
                b.len()
            )));
        }
        let mut aug = Matrix::zero(self.rows, self.cols + 1, self.field);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *aug.at_mut(r, c) = self.at(r, c).clone();
            }
            *aug.at_mut(r, self.cols) = b[r].clone();
        }
        let (red, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = red.at(row, self.cols).clone();
        }
        Ok(Some(x))
    }
}

/// A subspace of k^n stored as the unique reduced row echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    pub ambient: usize,
    pub field: FieldSpec,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize, field: FieldSpec) -> Subspace {
        Subspace {
            ambient,
            field,
            basis: Matrix::zero(0, ambient, field),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize, field: FieldSpec) -> Subspace {
        Subspace::from_spanning(
            (0..ambient)
                .map(|i| {
                    let mut v = vec![field.zero(); ambient];
                    v[i] = field.one();
                    v
                })
                .collect(),
            ambient,
            field,
        )
    }

    pub fn from_spanning(vectors: Vec<Vec<Scalar>>, ambient: usize, field: FieldSpec) -> Subspace {
        if vectors.is_empty() {
            return Subspace::zero(ambient, field);
        }
        let m = Matrix::from_rows(vectors, ambient, field);
        let (red, pivots) = m.rref();
        let dim = pivots.len();
        let rows: Vec<Vec<Scalar>> = (0..dim).map(|r| red.row_vec(r)).collect();
        Subspace {
            ambient,
            field,
            basis: Matrix::from_rows(rows, ambient, field),
            pivots,
        }
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Scalar>> {
        (0..self.dim()).map(|r| self.basis.row_vec(r)).collect()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Canonical residue of v modulo the subspace (zero iff v is a member).
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient);
        let mut w = v.to_vec();
        for (row, &p) in self.pivots.iter().enumerate() {
            if !w[p].is_zero() {
                let f = w[p].clone();
                for c in 0..self.ambient {
                    let b = self.basis.at(row, c);
                    if !b.is_zero() {
                        w[c] = w[c].sub(&f.mul(b));
                    }
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(|s| s.is_zero())
    }

    pub fn contains_space(&self, other: &Subspace) -> bool {
        other.basis_vectors().iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let mut vs = self.basis_vectors();
        vs.extend(other.basis_vectors());
        Subspace::from_spanning(vs, self.ambient, self.field)
    }

    /// Coordinates of a member vector in the echelon basis.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let mut w = v.to_vec();
        let mut coords = vec![self.field.zero(); self.dim()];
        for (row, &p) in self.pivots.iter().enumerate() {
            if !w[p].is_zero() {
                let f = w[p].clone();
                coords[row] = f.clone();
                for c in 0..self.ambient {
                    let b = self.basis.at(row, c);
                    if !b.is_zero() {
                        w[c] = w[c].sub(&f.mul(b));
                    }
                }
            }
        }
        if w.iter().all(|s| s.is_zero()) {
            Some(coords)
        } else {
            None
        }
    }

    /// Intersection computed by constraining membership in both spaces.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        // rows of self parametrize candidates; ask which combos lie in other
        let d = self.dim();
        if d == 0 || other.dim() == 0 {
            return Subspace::zero(self.ambient, self.field);
        }
        // constraint matrix: residues of our basis vectors mod `other`
        let mut rows = Vec::new();
        for v in self.basis_vectors() {
            rows.push(other.reduce(&v));
        }
        let m = Matrix::from_rows(rows, self.ambient, self.field).transpose();
        let combos = m.kernel_basis();
        let vectors = combos
            .iter()
            .map(|c| {
                let mut v = vec![self.field.zero(); self.ambient];
                for (i, coef) in c.iter().enumerate() {
                    if !coef.is_zero() {
                        for a in 0..self.ambient {
                            let b = self.basis.at(i, a);
                            if !b.is_zero() {
                                v[a] = v[a].add(&coef.mul(b));
                            }
                        }
                    }
                }
                v
            })
            .collect();
        Subspace::from_spanning(vectors, self.ambient, self.field)
    }
}

pub fn add_vec(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x.add(y)).collect()
}

pub fn sub_vec(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x.sub(y)).collect()
}

pub fn scale_vec(c: &Scalar, a: &[Scalar]) -> Vec<Scalar> {
    a.iter().map(|x| c.mul(x)).collect()
}

pub fn neg_vec(a: &[Scalar]) -> Vec<Scalar> {
    a.iter().map(|x| x.neg()).collect()
}

pub fn is_zero_vec(a: &[Scalar]) -> bool {
    a.iter().all(|x| x.is_zero())
}

pub fn zero_vec(n: usize, field: FieldSpec) -> Vec<Scalar> {
    vec![field.zero(); n]
}

pub fn unit_vec(n: usize, i: usize, field: FieldSpec) -> Vec<Scalar> {
    let mut v = zero_vec(n, field);
    v[i] = field.one();
    v
}

/// v += c * w in place.
pub fn axpy(v: &mut [Scalar], c: &Scalar, w: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (x, y) in v.iter_mut().zip(w) {
        if !y.is_zero() {
            *x = x.add(&c.mul(y));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rational
    }

    fn mat(rows: &[&[i64]], field: FieldSpec) -> Matrix {
        let cols = rows[0].len();
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&n| field.from_i64(n)).collect())
                .collect(),
            cols,
            field,
        )
    }

    #[test]
    fn rref_identity() {
        let m = Matrix::identity(2, q());
        let (r, p) = m.rref();
        assert_eq!(r, Matrix::identity(2, q()));
        assert_eq!(p, vec![0, 1]);
    }

    #[test]
    fn rref_rank_one() {
        let m = mat(&[&[1, 2], &[2, 4]], q());
        let (r, p) = m.rref();
        assert_eq!(p, vec![0]);
        assert_eq!(r.row(0)[1], q().from_i64(2));
        assert!(r.row(1).iter().all(|s| s.is_zero()));
    }

    #[test]
    fn rref_idempotent() {
        let m = mat(&[&[3, 1, 4], &[1, 5, 9], &[2, 6, 5]], q());
        let (r1, _) = m.rref();
        let (r2, _) = r1.rref();
        assert_eq!(r1, r2);
    }

    #[test]
    fn kernel_identity_empty_and_zero_full() {
        assert!(Matrix::identity(3, q()).kernel_basis().is_empty());
        let z = Matrix::zero(3, 3, q());
        let k = z.kernel_basis();
        assert_eq!(k.len(), 3);
        for (i, v) in k.iter().enumerate() {
            assert_eq!(v[i], q().one());
        }
    }

    #[test]
    fn kernel_vector_annihilates() {
        let m = mat(&[&[1, 2], &[2, 4]], q());
        let k = m.kernel_basis();
        assert_eq!(k.len(), 1);
        assert!(!is_zero_vec(&k[0]));
        assert!(is_zero_vec(&m.apply(&k[0])));
    }

    #[test]
    fn rank_nullity() {
        let m = mat(&[&[1, 2, 3], &[4, 5, 6]], q());
        assert_eq!(m.rank() + m.kernel_basis().len(), m.cols);
    }

    #[test]
    fn solve_cases() {
        let id = Matrix::identity(2, q());
        let b = vec![q().from_i64(3), q().from_i64(-1)];
        assert_eq!(id.solve(&b).unwrap().unwrap(), b);

        let m = mat(&[&[1, 1]], q());
        let x = m.solve(&[q().from_i64(2)]).unwrap().unwrap();
        assert_eq!(x[0].add(&x[1]), q().from_i64(2));

        let m = mat(&[&[1], &[1]], q());
        assert!(m
            .solve(&[q().from_i64(0), q().from_i64(1)])
            .unwrap()
            .is_none());

        assert!(m.solve(&[q().zero()]).is_err());
    }

    /// Independent rank oracle: largest size of a nonvanishing minor.
    fn minor_rank(m: &Matrix) -> usize {
        fn det(m: &Matrix, rows: &[usize], cols: &[usize]) -> Scalar {
            let n = rows.len();
            if n == 0 {
                return m.field.one();
            }
            let mut acc = m.field.zero();
            for (j, &c) in cols.iter().enumerate() {
                let e = m.at(rows[0], c);
                if e.is_zero() {
                    continue;
                }
                let sub_rows: Vec<usize> = rows[1..].to_vec();
                let sub_cols: Vec<usize> = cols
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| *k != j)
                    .map(|(_, &c)| c)
                    .collect();
                let term = e.mul(&det(m, &sub_rows, &sub_cols));
                acc = if j % 2 == 0 {
                    acc.add(&term)
                } else {
                    acc.sub(&term)
                };
            }
            acc
        }
        fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for first in 0..n {
                for mut rest in subsets(n, k - 1) {
                    if rest.iter().all(|&x| x > first) {
                        let mut s = vec![first];
                        s.append(&mut rest);
                        out.push(s);
                    }
                }
            }
            out
        }
        for size in (1..=m.rows.min(m.cols)).rev() {
            for rows in subsets(m.rows, size) {
                for cols in subsets(m.cols, size) {
                    if !det(m, &rows, &cols).is_zero() {
                        return size;
                    }
                }
            }
        }
        0
    }

    #[test]
    fn rank_matches_minor_oracle_over_f7() {
        // fixed deterministic 5x7 sample over F_7
        let f = FieldSpec::Fp(7);
        let vals: [[i64; 7]; 5] = [
            [3, 1, 4, 1, 5, 0, 2],
            [6, 5, 3, 5, 1, 4, 1],
            [2, 6, 0, 6, 5, 4, 3],
            [5, 0, 4, 6, 2, 6, 4],
            [1, 1, 1, 0, 3, 3, 0],
        ];
        let m = mat(&vals.iter().map(|r| &r[..]).collect::<Vec<_>>(), f);
        assert_eq!(m.rank(), minor_rank(&m));
    }

    #[test]
    fn subspace_sum_and_membership() {
        let f = q();
        let s1 = Subspace::from_spanning(vec![vec![f.one(), f.zero(), f.one()]], 3, f);
        let s2 = Subspace::from_spanning(vec![vec![f.zero(), f.one(), f.one()]], 3, f);
        let s = s1.sum(&s2);
        assert_eq!(s.dim(), 2);
        assert!(s.contains(&[f.one(), f.one(), f.from_i64(2)]));
        assert!(!s.contains(&[f.one(), f.zero(), f.zero()]));
    }

    #[test]
    fn subspace_intersection() {
        let f = q();
        let s1 = Subspace::from_spanning(
            vec![
                vec![f.one(), f.zero(), f.zero()],
                vec![f.zero(), f.one(), f.zero()],
            ],
            3,
            f,
        );
        let s2 = Subspace::from_spanning(
            vec![
                vec![f.zero(), f.one(), f.zero()],
                vec![f.zero(), f.zero(), f.one()],
            ],
            3,
            f,
        );
        let i = s1.intersect(&s2);
        assert_eq!(i.dim(), 1);
        assert!(i.contains(&[f.zero(), f.one(), f.zero()]));
    }
}
