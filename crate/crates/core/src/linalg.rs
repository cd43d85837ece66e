//! Dense matrices over GF(p), p < 2^31.

use crate::algebra::arith::inv_mod;
use crate::algebra::poly::{self, Poly};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat {
    pub p: u64,
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<u64>,
}

impl Mat {
    pub fn zeros(p: u64, rows: usize, cols: usize) -> Self {
        Mat { p, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(p: u64, n: usize) -> Self {
        let mut m = Mat::zeros(p, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1 % p;
        }
        m
    }

    pub fn from_rows(p: u64, rows: &[Vec<u64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = Mat::zeros(p, r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged matrix rows");
            for (j, &v) in row.iter().enumerate() {
                m.data[i * c + j] = v % p;
            }
        }
        m
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_cols(p: u64, cols: &[Vec<u64>]) -> Self {
        Mat::from_rows(p, cols).transpose()
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v % self.p;
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<u64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_identity(&self) -> bool {
        *self == Mat::identity(self.p, self.rows)
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.p, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j);
            }
        }
        t
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let p = self.p;
        let mut out = Mat::zeros(p, self.rows, other.cols);
        for i in 0..self.rows {
            let orow = &mut out.data[i * other.cols..(i + 1) * other.cols];
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == 0 {
                    continue;
                }
                let brow = &other.data[k * other.cols..(k + 1) * other.cols];
                for (o, &b) in orow.iter_mut().zip(brow) {
                    *o = (*o + a * b) % p;
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Mat) -> Mat {
        let p = self.p;
        Mat {
            p,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| (a + b) % p).collect(),
        }
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        let p = self.p;
        Mat {
            p,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| (a + p - b) % p).collect(),
        }
    }

    pub fn scale(&self, c: u64) -> Mat {
        let p = self.p;
        let c = c % p;
        Mat { p, rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * c % p).collect() }
    }

    /// A * v for a column vector v.
    pub fn mul_vec(&self, v: &[u64]) -> Vec<u64> {
        let p = self.p;
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).fold(0u64, |acc, (a, b)| (acc + a * b) % p))
            .collect()
    }

    /// v * A for a row vector v.
    pub fn vec_mul(&self, v: &[u64]) -> Vec<u64> {
        let p = self.p;
        let mut out = vec![0u64; self.cols];
        for (i, &a) in v.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (o, &b) in out.iter_mut().zip(self.row(i)) {
                *o = (*o + a * b) % p;
            }
        }
        out
    }

    pub fn pow(&self, mut e: u64) -> Mat {
        let mut base = self.clone();
        let mut acc = Mat::identity(self.p, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let p = self.p;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(piv) = (r..m.rows).find(|&i| m.get(i, c) != 0) else { continue };
            if piv != r {
                for j in 0..m.cols {
                    m.data.swap(piv * m.cols + j, r * m.cols + j);
                }
            }
            let inv = inv_mod(m.get(r, c), p).expect("nonzero pivot is a unit");
            for j in 0..m.cols {
                m.data[r * m.cols + j] = m.data[r * m.cols + j] * inv % p;
            }
            for i in 0..m.rows {
                if i != r {
                    let f = m.get(i, c);
                    if f != 0 {
                        for j in 0..m.cols {
                            let v = m.data[r * m.cols + j];
                            m.data[i * m.cols + j] = (m.data[i * m.cols + j] + p - f * v % p) % p;
                        }
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of {x : A x = 0}.
    pub fn nullspace(&self) -> Vec<Vec<u64>> {
        let p = self.p;
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![0u64; self.cols];
                v[f] = 1;
                for (i, &pc) in pivots.iter().enumerate() {
                    v[pc] = (p - r.get(i, f)) % p;
                }
                v
            })
            .collect()
    }

    /// Basis of {x : x A = 0}.
    pub fn left_nullspace(&self) -> Vec<Vec<u64>> {
        self.transpose().nullspace()
    }

    pub fn inverse(&self) -> Option<Mat> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Mat::zeros(self.p, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.data[i * 2 * n + j] = self.get(i, j);
            }
            aug.data[i * 2 * n + n + i] = 1 % self.p;
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Mat::zeros(self.p, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.data[i * n + j] = r.get(i, n + j);
            }
        }
        Some(inv)
    }

    pub fn det(&self) -> u64 {
        assert!(self.is_square());
        let p = self.p;
        let mut m = self.clone();
        let n = m.rows;
        let mut det = 1u64;
        for c in 0..n {
            let Some(piv) = (c..n).find(|&i| m.get(i, c) != 0) else { return 0 };
            if piv != c {
                for j in 0..n {
                    m.data.swap(piv * n + j, c * n + j);
                }
                det = (p - det) % p;
            }
            let d = m.get(c, c);
            det = det * d % p;
            let inv = inv_mod(d, p).expect("unit pivot");
            for i in c + 1..n {
                let f = m.get(i, c) * inv % p;
                if f != 0 {
                    for j in c..n {
                        let v = m.data[c * n + j];
                        m.data[i * n + j] = (m.data[i * n + j] + p - f * v % p) % p;
                    }
                }
            }
        }
        det
    }

    /// Kronecker product.
    pub fn kron(&self, other: &Mat) -> Mat {
        let p = self.p;
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = Mat::zeros(p, r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a == 0 {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out.data[(i * other.rows + k) * c + j * other.cols + l] = a * other.get(k, l) % p;
                    }
                }
            }
        }
        out
    }

    /// Action on the exterior square, basis e_i ^ e_j (i < j) in lexicographic order.
    pub fn exterior_square(&self) -> Mat {
        assert!(self.is_square());
        let p = self.p;
        let n = self.rows;
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let mut out = Mat::zeros(p, pairs.len(), pairs.len());
        for (col, &(i, j)) in pairs.iter().enumerate() {
            for (row, &(k, l)) in pairs.iter().enumerate() {
                let v = (self.get(k, i) * self.get(l, j) % p + p - self.get(l, i) * self.get(k, j) % p) % p;
                out.data[row * pairs.len() + col] = v;
            }
        }
        out
    }

    /// f(A) by Horner's rule.
    pub fn eval_poly(&self, f: &[u64]) -> Mat {
        let n = self.rows;
        let mut acc = Mat::zeros(self.p, n, n);
        for &c in f.iter().rev() {
            acc = acc.mul(self);
            for i in 0..n {
                acc.data[i * n + i] = (acc.data[i * n + i] + c) % self.p;
            }
        }
        acc
    }

    /// Characteristic polynomial det(xI - A) via Hessenberg reduction.
    pub fn charpoly(&self) -> Poly {
        assert!(self.is_square());
        let p = self.p;
        let n = self.rows;
        let mut h = self.clone();
        for m in 1..n.saturating_sub(1) {
            let Some(i) = (m..n).find(|&i| h.get(i, m - 1) != 0) else { continue };
            if i != m {
                for j in 0..n {
                    h.data.swap(i * n + j, m * n + j);
                }
                for j in 0..n {
                    h.data.swap(j * n + i, j * n + m);
                }
            }
            let inv = inv_mod(h.get(m, m - 1), p).expect("unit");
            for i in m + 1..n {
                let u = h.get(i, m - 1) * inv % p;
                if u == 0 {
                    continue;
                }
                for j in 0..n {
                    let v = h.data[m * n + j];
                    h.data[i * n + j] = (h.data[i * n + j] + p - u * v % p) % p;
                }
                for j in 0..n {
                    let v = h.data[j * n + i];
                    h.data[j * n + m] = (h.data[j * n + m] + u * v) % p;
                }
            }
        }
        let mut polys: Vec<Poly> = vec![vec![1]];
        for m in 1..=n {
            let mut pm = poly::mul(&[(p - h.get(m - 1, m - 1)) % p, 1], &polys[m - 1], p);
            let mut t = 1u64;
            for i in 1..m {
                t = t * h.get(m - i, m - i - 1) % p;
                let coef = t * h.get(m - i - 1, m - 1) % p;
                if coef != 0 {
                    pm = poly::sub(&pm, &poly::scale(&polys[m - i - 1], coef, p), p);
                }
            }
            polys.push(pm);
        }
        polys.pop().unwrap_or_else(|| vec![1])
    }

    /// Minimal polynomial via Krylov sequences of the standard basis vectors.
    pub fn minpoly(&self) -> Poly {
        let p = self.p;
        let n = self.rows;
        let mut acc: Poly = vec![1];
        for e in 0..n {
            let mut v = vec![0u64; n];
            v[e] = 1;
            // Reduce v by acc(A) first, then find the minimal relation of the residual.
            let w = self.eval_poly(&acc).mul_vec(&v);
            if w.iter().all(|&x| x == 0) {
                continue;
            }
            let rel = krylov_relation(self, &w);
            acc = poly::mul(&acc, &rel, p);
        }
        poly::monic(&acc, p)
    }
}

/// Minimal monic polynomial f with f(A) w = 0.
fn krylov_relation(a: &Mat, w: &[u64]) -> Poly {
    let p = a.p;
    let n = a.rows;
    let mut basis: Vec<Vec<u64>> = Vec::new();
    let mut cur = w.to_vec();
    loop {
        basis.push(cur.clone());
        let m = Mat::from_cols(p, &basis);
        if m.rank() < basis.len() {
            // Solve sum c_i A^i w = 0 with c_last = 1.
            let ns = m.nullspace();
            let v = ns.into_iter().find(|v| v[basis.len() - 1] != 0).expect("dependency involves newest vector");
            return poly::monic(&v, p);
        }
        cur = a.mul_vec(&cur);
        if basis.len() > n + 1 {
            unreachable!("Krylov sequence longer than dimension");
        }
    }
}

/// Row-reduced basis of the span of the given vectors.
pub fn span_basis(p: u64, vectors: &[Vec<u64>], dim: usize) -> Vec<Vec<u64>> {
    if vectors.is_empty() {
        return vec![];
    }
    let m = Mat::from_rows(p, vectors);
    let (r, piv) = m.rref();
    let _ = dim;
    (0..piv.len()).map(|i| r.row(i).to_vec()).collect()
}

/// Submodule spanned by the orbit of `v` under the matrices (acting on column vectors).
pub fn spin(p: u64, v: &[u64], gens: &[Mat]) -> Vec<Vec<u64>> {
    let dim = v.len();
    let mut basis: Vec<Vec<u64>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    let mut queue = vec![v.to_vec()];
    while let Some(w) = queue.pop() {
        if let Some(red) = reduce_against(p, &basis, &pivots, &w) {
            let piv = red.iter().position(|&x| x != 0).expect("nonzero");
            let inv = inv_mod(red[piv], p).expect("unit");
            let red: Vec<u64> = red.iter().map(|x| x * inv % p).collect();
            // Keep basis fully reduced at pivot columns.
            for b in basis.iter_mut() {
                let f = b[piv];
                if f != 0 {
                    for (bj, rj) in b.iter_mut().zip(&red) {
                        *bj = (*bj + p - f * rj % p) % p;
                    }
                }
            }
            for g in gens {
                queue.push(g.mul_vec(&red));
            }
            basis.push(red);
            pivots.push(piv);
            if basis.len() == dim {
                break;
            }
        }
    }
    basis
}

/// Residual of `w` after reduction by an echelon basis with given pivots; `None` if in span.
pub fn reduce_against(p: u64, basis: &[Vec<u64>], pivots: &[usize], w: &[u64]) -> Option<Vec<u64>> {
    let mut r = w.to_vec();
    for (b, &pc) in basis.iter().zip(pivots) {
        let f = r[pc];
        if f != 0 {
            for (rj, bj) in r.iter_mut().zip(b) {
                *rj = (*rj + p - f * bj % p) % p;
            }
        }
    }
    if r.iter().all(|&x| x == 0) {
        None
    } else {
        Some(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_and_det() {
        let a = Mat::from_rows(7, &[vec![1, 2], vec![3, 4]]);
        assert_eq!(a.det(), (4 + 7 * 7 - 6) % 7);
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).is_identity());
        let s = Mat::from_rows(5, &[vec![1, 2], vec![2, 4]]);
        assert!(s.inverse().is_none());
        assert_eq!(s.nullspace().len(), 1);
    }

    #[test]
    fn charpoly_matches_companion() {
        // Companion matrix of x^3 + 2x + 1 over GF(5).
        let c = Mat::from_rows(5, &[vec![0, 0, 4], vec![1, 0, 3], vec![0, 1, 0]]);
        assert_eq!(c.charpoly(), vec![1, 2, 0, 1]);
        assert_eq!(c.minpoly(), vec![1, 2, 0, 1]);
        assert!(c.eval_poly(&c.charpoly()).data.iter().all(|&x| x == 0));
        let i = Mat::identity(3, 3);
        assert_eq!(i.minpoly(), vec![2, 1]);
    }

    #[test]
    fn exterior_square_det() {
        let a = Mat::from_rows(11, &[vec![2, 3], vec![5, 7]]);
        let w = a.exterior_square();
        assert_eq!(w.rows, 1);
        assert_eq!(w.get(0, 0), a.det());
    }

    #[test]
    fn spinning() {
        let a = Mat::from_rows(2, &[vec![0, 1], vec![1, 1]]);
        assert_eq!(spin(2, &[1, 0], std::slice::from_ref(&a)).len(), 2);
        let d = Mat::from_rows(3, &[vec![1, 0], vec![0, 2]]);
        assert_eq!(spin(3, &[1, 0], &[d]).len(), 1);
    }
}
