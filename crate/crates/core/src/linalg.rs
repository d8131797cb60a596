//! Dense matrices over a [`Field`] and the subspace bookkeeping used by the
//! spinning algorithm.

use crate::field::Field;
use crate::poly::Poly;

#[derive(Clone, Debug)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> PartialEq for Matrix<F> {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.data == other.data
    }
}

impl<F: Field> Eq for Matrix<F> {}

impl<F: Field> Matrix<F> {
    pub fn zero(field: &F, rows: usize, cols: usize) -> Self {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn scalar(field: &F, n: usize, c: F::Elem) -> Self {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, c);
        }
        m
    }

    pub fn diagonal(field: &F, d: &[F::Elem]) -> Self {
        let mut m = Matrix::zero(field, d.len(), d.len());
        for (i, &x) in d.iter().enumerate() {
            m.set(i, i, x);
        }
        m
    }

    pub fn from_rows(field: &F, rows: Vec<Vec<F::Elem>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Matrix {
            field: field.clone(),
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> F::Elem {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: F::Elem) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[F::Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<F::Elem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn map<G: Field>(&self, target: &G, f: impl Fn(F::Elem) -> G::Elem) -> Matrix<G> {
        Matrix {
            field: target.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| f(x)).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Matrix::zero(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = &self.field;
        Matrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| f.add(a, b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = &self.field;
        Matrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| f.sub(a, b))
                .collect(),
        }
    }

    pub fn scale(&self, c: F::Elem) -> Self {
        let f = &self.field;
        Matrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| f.mul(a, c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let f = &self.field;
        let mut out = Matrix::zero(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                let orow = other.row(k);
                let base = i * out.cols;
                for (j, &b) in orow.iter().enumerate() {
                    out.data[base + j] = f.add(out.data[base + j], f.mul(a, b));
                }
            }
        }
        out
    }

    /// `M v` for a column vector `v`.
    pub fn mul_vec(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(f.zero(), |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
            })
            .collect()
    }

    pub fn pow(&self, mut k: u64) -> Self {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Matrix::identity(&self.field, self.rows);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        *self == Matrix::identity(&self.field, self.rows)
    }

    /// Returns `Some(c)` when `self = c·I`.
    pub fn as_scalar(&self) -> Option<F::Elem> {
        if !self.is_square() || self.rows == 0 {
            return None;
        }
        let c = self.get(0, 0);
        (*self == Matrix::scalar(&self.field, self.rows, c)).then_some(c)
    }

    /// Reduced row echelon form; returns the pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(piv) = (r..self.rows).find(|&i| !f.is_zero(self.get(i, c))) else {
                continue;
            };
            if piv != r {
                for j in 0..self.cols {
                    self.data.swap(piv * self.cols + j, r * self.cols + j);
                }
            }
            let inv = f.inv(self.get(r, c)).expect("nonzero pivot");
            for j in 0..self.cols {
                let x = self.get(r, j);
                self.set(r, j, f.mul(x, inv));
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self.get(i, c);
                if f.is_zero(factor) {
                    continue;
                }
                for j in 0..self.cols {
                    let x = f.sub(self.get(i, j), f.mul(factor, self.get(r, j)));
                    self.set(i, j, x);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref_in_place().len()
    }

    /// Basis of `{v : M v = 0}`, in reduced form.
    pub fn nullspace(&self) -> Vec<Vec<F::Elem>> {
        let f = &self.field;
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![f.zero(); self.cols];
                v[fc] = f.one();
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = f.neg(m.get(r, fc));
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let f = &self.field;
        let mut aug = Matrix::zero(f, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, f.one());
        }
        let pivots = aug.rref_in_place();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zero(f, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, aug.get(i, n + j));
            }
        }
        Some(inv)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// A matrix `L` with `L·self = I` when `self` has full column rank.
    pub fn left_inverse(&self) -> Option<Self> {
        let f = &self.field;
        let (r, c) = (self.rows, self.cols);
        // rows of [self^T | I_c]... solve via rref of [self | I_r]
        let mut aug = Matrix::zero(f, r, c + r);
        for i in 0..r {
            for j in 0..c {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, c + i, f.one());
        }
        let pivots = aug.rref_in_place();
        if pivots.len() < c || pivots[..c].iter().enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        let mut l = Matrix::zero(f, c, r);
        for i in 0..c {
            for j in 0..r {
                l.set(i, j, aug.get(i, c + j));
            }
        }
        Some(l)
    }

    /// Characteristic polynomial `det(xI − M)` via Hessenberg reduction.
    pub fn charpoly(&self) -> Poly<F> {
        assert!(self.is_square());
        let f = &self.field;
        let n = self.rows;
        let mut h = self.clone();
        for j in 0..n.saturating_sub(2) {
            let Some(piv) = (j + 1..n).find(|&i| !f.is_zero(h.get(i, j))) else {
                continue;
            };
            if piv != j + 1 {
                // similarity by the transposition (piv, j+1)
                for c in 0..n {
                    let (a, b) = (h.get(piv, c), h.get(j + 1, c));
                    h.set(piv, c, b);
                    h.set(j + 1, c, a);
                }
                for r in 0..n {
                    let (a, b) = (h.get(r, piv), h.get(r, j + 1));
                    h.set(r, piv, b);
                    h.set(r, j + 1, a);
                }
            }
            let inv = f.inv(h.get(j + 1, j)).expect("pivot");
            for i in j + 2..n {
                let u = f.mul(h.get(i, j), inv);
                if f.is_zero(u) {
                    continue;
                }
                // row_i -= u row_{j+1}; col_{j+1} += u col_i
                for c in 0..n {
                    let x = f.sub(h.get(i, c), f.mul(u, h.get(j + 1, c)));
                    h.set(i, c, x);
                }
                for r in 0..n {
                    let x = f.add(h.get(r, j + 1), f.mul(u, h.get(r, i)));
                    h.set(r, j + 1, x);
                }
            }
        }
        // p_k = (x − h_kk) p_{k−1} − Σ_{i<k} h_ik (Π_{l=i+1}^{k} h_{l,l−1}) p_{i−1}
        let mut polys: Vec<Poly<F>> = vec![Poly::one(f)];
        for k in 0..n {
            let lin = Poly::new(f, vec![f.neg(h.get(k, k)), f.one()]);
            let mut pk = lin.mul(&polys[k]);
            let mut prod = f.one();
            for i in (0..k).rev() {
                prod = f.mul(prod, h.get(i + 1, i));
                let coef = f.mul(h.get(i, k), prod);
                if !f.is_zero(coef) {
                    pk = pk.sub(&polys[i].scale(coef));
                }
            }
            polys.push(pk);
        }
        polys.pop().expect("nonempty")
    }

    /// `g(M)` for a polynomial `g`.
    pub fn eval_poly(&self, g: &Poly<F>) -> Self {
        let f = &self.field;
        let n = self.rows;
        let mut acc = Matrix::zero(f, n, n);
        for &c in g.coeffs().iter().rev() {
            acc = acc.mul(self).add(&Matrix::scalar(f, n, c));
        }
        acc
    }
}

/// A subspace kept as a reduced row-echelon basis; the basis is canonical,
/// so equality of subspaces is equality of bases.
#[derive(Clone, Debug)]
pub struct Subspace<F: Field> {
    field: F,
    dim_ambient: usize,
    rows: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn new(field: &F, dim_ambient: usize) -> Self {
        Subspace {
            field: field.clone(),
            dim_ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn spanned_by(field: &F, dim_ambient: usize, vecs: &[Vec<F::Elem>]) -> Self {
        let mut s = Subspace::new(field, dim_ambient);
        for v in vecs {
            s.insert(v.clone());
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.dim_ambient
    }

    pub fn basis(&self) -> &[Vec<F::Elem>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` against the basis in place; returns true if the
    /// remainder is zero.
    pub fn reduce(&self, v: &mut [F::Elem]) -> bool {
        let f = &self.field;
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let c = v[pc];
            if f.is_zero(c) {
                continue;
            }
            for (x, &r) in v.iter_mut().zip(row) {
                *x = f.sub(*x, f.mul(c, r));
            }
        }
        v.iter().all(|&x| f.is_zero(x))
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w)
    }

    /// Adds `v`; returns the normalised new basis row if the dimension grew.
    pub fn insert(&mut self, mut v: Vec<F::Elem>) -> Option<Vec<F::Elem>> {
        if self.reduce(&mut v) {
            return None;
        }
        let f = self.field.clone();
        let pc = v.iter().position(|&x| !f.is_zero(x)).expect("nonzero");
        let inv = f.inv(v[pc]).expect("unit");
        for x in v.iter_mut() {
            *x = f.mul(*x, inv);
        }
        for row in self.rows.iter_mut() {
            let c = row[pc];
            if f.is_zero(c) {
                continue;
            }
            for (x, &r) in row.iter_mut().zip(&v) {
                *x = f.sub(*x, f.mul(c, r));
            }
        }
        let pos = self.pivots.partition_point(|&p| p < pc);
        self.pivots.insert(pos, pc);
        self.rows.insert(pos, v.clone());
        Some(v)
    }

    /// Coordinates of `v` (assumed inside) with respect to the basis.
    pub fn coordinates(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        self.pivots.iter().map(|&pc| v[pc]).collect()
    }

    /// Canonical key for set semantics.
    pub fn key(&self) -> Vec<u64> {
        self.rows
            .iter()
            .flat_map(|r| r.iter().map(|&x| self.field.index(x)))
            .collect()
    }
}

impl<F: Field> PartialEq for Subspace<F> {
    fn eq(&self, other: &Self) -> bool {
        self.dim_ambient == other.dim_ambient && self.rows == other.rows
    }
}

impl<F: Field> Eq for Subspace<F> {}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    fn m3(rows: &[[u32; 3]]) -> Matrix<PrimeField> {
        Matrix::from_rows(&PrimeField::new(5), rows.iter().map(|r| r.to_vec()).collect())
    }

    #[test]
    fn inverse_roundtrip() {
        let a = m3(&[[1, 2, 0], [0, 1, 3], [1, 0, 1]]);
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).is_identity());
        let sing = m3(&[[1, 2, 3], [2, 4, 6], [0, 0, 1]]);
        assert!(sing.inverse().is_none());
        assert_eq!(sing.rank(), 2);
        let ns = sing.nullspace();
        assert_eq!(ns.len(), 1);
        assert!(sing.mul_vec(&ns[0]).iter().all(|&x| x == 0));
    }

    #[test]
    fn charpoly_cayley_hamilton() {
        let a = m3(&[[0, 1, 2], [3, 4, 0], [1, 1, 1]]);
        let cp = a.charpoly();
        assert_eq!(cp.deg(), 3);
        assert!(a.eval_poly(&cp).as_scalar() == Some(0));
        // companion matrix of x^3 + 2x + 3 over F_5
        let c = m3(&[[0, 0, 2], [1, 0, 3], [0, 1, 0]]);
        assert_eq!(c.charpoly().coeffs(), &[3, 2, 0, 1]);
    }

    #[test]
    fn subspace_canonical() {
        let f = PrimeField::new(3);
        let a = Subspace::spanned_by(&f, 3, &[vec![1, 1, 0], vec![0, 1, 1]]);
        let b = Subspace::spanned_by(&f, 3, &[vec![1, 2, 1], vec![1, 0, 2]]);
        assert_eq!(a, b);
        assert!(a.contains(&[1, 2, 1]));
        assert!(!a.contains(&[1, 0, 0]));
    }
}
