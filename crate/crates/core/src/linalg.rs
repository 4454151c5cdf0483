//! Dense exact linear algebra over the scalar tower.
//!
//! Field scalars (rationals, Gaussian rationals) get full Gaussian
//! elimination: rank, solve, kernel, inverse, determinant. Ring scalars
//! (trig and coordinate polynomials) get division-free determinants via a
//! column-subset dynamic program.

use crate::symbolic::{CoordPoly, GaussRational, Rational, TrigPoly};

pub trait Scalar: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
}

pub trait FieldScalar: Scalar {
    /// `None` only for zero.
    fn inv(&self) -> Option<Self>;
}

impl Scalar for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl FieldScalar for Rational {
    fn inv(&self) -> Option<Self> {
        if Rational::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl Scalar for GaussRational {
    fn zero() -> Self {
        GaussRational::zero()
    }
    fn one() -> Self {
        GaussRational::one()
    }
    fn is_zero(&self) -> bool {
        GaussRational::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl FieldScalar for GaussRational {
    fn inv(&self) -> Option<Self> {
        if GaussRational::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl Scalar for TrigPoly {
    fn zero() -> Self {
        TrigPoly::zero()
    }
    fn one() -> Self {
        TrigPoly::one()
    }
    fn is_zero(&self) -> bool {
        TrigPoly::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
}

// Scalar for CoordPoly carries the variable count through zero/one via a
// thread-local default; instead we avoid that trap: CoordPoly matrices are
// only consumed by `det_ring_with`, which takes explicit zero/one values.

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Mat<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Mat<U> {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&o.data)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&o.data)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.map(|a| a.neg())
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|a| a.mul(c))
    }

    pub fn matmul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "matmul dimension mismatch");
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = &o[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    out[(i, j)] = out[(i, j)].add(&a.mul(b));
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = T::zero();
                for j in 0..self.cols {
                    if !self[(i, j)].is_zero() && !v[j].is_zero() {
                        acc = acc.add(&self[(i, j)].mul(&v[j]));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn trace(&self) -> T {
        assert_eq!(self.rows, self.cols);
        let mut acc = T::zero();
        for i in 0..self.rows {
            acc = acc.add(&self[(i, i)]);
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|a| a.is_zero())
    }

    /// Division-free determinant (works over any commutative ring).
    ///
    /// Dynamic program over column subsets: after processing row `r`, the
    /// state holds the signed minors of the first `r+1` rows for each column
    /// subset of size `r+1`. Exponential in `n`, fine for `n ≤ 10`.
    pub fn det_ring(&self) -> T {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return T::one();
        }
        let mut dp = vec![None::<T>; 1usize << n];
        dp[0] = Some(T::one());
        for r in 0..n {
            let mut next = vec![None::<T>; 1usize << n];
            for (mask, val) in dp.iter().enumerate() {
                let Some(v) = val else { continue };
                if (mask as u32).count_ones() as usize != r {
                    continue;
                }
                if v.is_zero() {
                    continue;
                }
                let mut sign_flips = 0usize;
                for c in (0..n).rev() {
                    if mask & (1 << c) != 0 {
                        sign_flips += 1;
                        continue;
                    }
                    let a = &self[(r, c)];
                    if a.is_zero() {
                        continue;
                    }
                    // parity: number of already-used columns greater than c
                    let term = if sign_flips % 2 == 0 {
                        v.mul(a)
                    } else {
                        v.mul(a).neg()
                    };
                    let slot = &mut next[mask | (1 << c)];
                    *slot = Some(match slot.take() {
                        Some(x) => x.add(&term),
                        None => term,
                    });
                }
            }
            dp = next;
        }
        dp[(1usize << n) - 1].take().unwrap_or_else(T::zero)
    }
}

impl<T> std::ops::Index<(usize, usize)> for Mat<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Mat<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Scalar + FieldScalar> Mat<T> {
    /// Reduced row echelon form; returns `(rank, pivot columns)` and leaves
    /// the echelon matrix in place.
    pub fn rref_in_place(&mut self) -> (usize, Vec<usize>) {
        let mut rank = 0;
        let mut pivots = Vec::new();
        for c in 0..self.cols {
            let Some(p) = (rank..self.rows).find(|&r| !self[(r, c)].is_zero()) else {
                continue;
            };
            if p != rank {
                for j in 0..self.cols {
                    let tmp = self[(p, j)].clone();
                    self[(p, j)] = self[(rank, j)].clone();
                    self[(rank, j)] = tmp;
                }
            }
            let inv = self[(rank, c)].inv().expect("nonzero pivot inverts");
            for j in 0..self.cols {
                self[(rank, j)] = self[(rank, j)].mul(&inv);
            }
            for r in 0..self.rows {
                if r == rank || self[(r, c)].is_zero() {
                    continue;
                }
                let f = self[(r, c)].clone();
                for j in 0..self.cols {
                    let d = self[(rank, j)].mul(&f);
                    self[(r, j)] = self[(r, j)].sub(&d);
                }
            }
            pivots.push(c);
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        (rank, pivots)
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref_in_place().0
    }

    /// One solution of `A·x = b`, if consistent.
    pub fn solve(&self, b: &[T]) -> Option<Vec<T>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Mat::<T>::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let (_, pivots) = aug.rref_in_place();
        if pivots.contains(&self.cols) {
            return None; // inconsistent
        }
        let mut x = vec![T::zero(); self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = aug[(r, self.cols)].clone();
        }
        Some(x)
    }

    /// Basis of the null space.
    pub fn kernel(&self) -> Vec<Vec<T>> {
        let mut m = self.clone();
        let (_, pivots) = m.rref_in_place();
        let mut basis = Vec::new();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![T::zero(); self.cols];
            v[free] = T::one();
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = m[(r, free)].neg();
            }
            basis.push(v);
        }
        basis
    }

    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Mat::<T>::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = T::one();
        }
        let (rank, _) = aug.rref_in_place();
        if rank < n {
            return None;
        }
        let mut out = Mat::<T>::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                out[(i, j)] = aug[(i, n + j)].clone();
            }
        }
        Some(out)
    }

    pub fn det(&self) -> T {
        assert_eq!(self.rows, self.cols);
        let mut m = self.clone();
        let n = self.rows;
        let mut det = T::one();
        let mut rank = 0;
        for c in 0..n {
            let Some(p) = (rank..n).find(|&r| !m[(r, c)].is_zero()) else {
                return T::zero();
            };
            if p != rank {
                for j in 0..n {
                    let tmp = m[(p, j)].clone();
                    m[(p, j)] = m[(rank, j)].clone();
                    m[(rank, j)] = tmp;
                }
                det = det.neg();
            }
            det = det.mul(&m[(rank, c)]);
            let inv = m[(rank, c)].inv().unwrap();
            for j in 0..n {
                m[(rank, j)] = m[(rank, j)].mul(&inv);
            }
            for r in (rank + 1)..n {
                if m[(r, c)].is_zero() {
                    continue;
                }
                let f = m[(r, c)].clone();
                for j in 0..n {
                    let d = m[(rank, j)].mul(&f);
                    m[(r, j)] = m[(r, j)].sub(&d);
                }
            }
            rank += 1;
        }
        det
    }
}

/// Reduced echelon basis of the row span (canonical subspace representation).
pub fn echelon_basis<T: FieldScalar>(vectors: &[Vec<T>]) -> Vec<Vec<T>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let mut m = Mat::from_rows(vectors.to_vec());
    let (rank, _) = m.rref_in_place();
    (0..rank).map(|i| m.row(i).to_vec()).collect()
}

/// Division-free determinant of a square `CoordPoly` matrix.
///
/// `CoordPoly` does not implement `Scalar` (its zero needs a variable count),
/// so this runs the same subset DP with explicit ring constants.
pub fn det_coordpoly(m: &[Vec<CoordPoly>], nvars: usize) -> CoordPoly {
    let n = m.len();
    if n == 0 {
        return CoordPoly::one(nvars);
    }
    assert!(m.iter().all(|r| r.len() == n));
    let mut dp: Vec<Option<CoordPoly>> = vec![None; 1usize << n];
    dp[0] = Some(CoordPoly::one(nvars));
    for row in m.iter() {
        let mut next: Vec<Option<CoordPoly>> = vec![None; 1usize << n];
        for (mask, val) in dp.iter().enumerate() {
            let Some(v) = val else { continue };
            if v.is_zero() {
                continue;
            }
            let mut used_above = 0usize;
            for c in (0..n).rev() {
                if mask & (1 << c) != 0 {
                    used_above += 1;
                    continue;
                }
                if row[c].is_zero() {
                    continue;
                }
                let mut term = v * &row[c];
                if used_above % 2 == 1 {
                    term = -term;
                }
                let slot = &mut next[mask | (1 << c)];
                *slot = Some(match slot.take() {
                    Some(x) => &x + &term,
                    None => term,
                });
            }
        }
        dp = next;
    }
    dp[(1usize << n) - 1]
        .take()
        .unwrap_or_else(|| CoordPoly::zero(nvars))
}

pub(crate) fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Exact generic rank of a polynomial matrix: a lower bound from
/// deterministic pseudo-random evaluations, certified upward by identical
/// vanishing of all minors one size larger.
pub(crate) fn generic_rank(m: &[Vec<CoordPoly>], nvars: usize) -> usize {
    let n = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut r = 0usize;
    let mut seed = 0x9e3779b97f4a7c15u64;
    for _ in 0..6 {
        let point: Vec<Rational> = (0..nvars)
            .map(|_| {
                seed = seed
                    .wrapping_mul(6364136223846793005)
                    .wrapping_add(1442695040888963407);
                Rational::int(((seed >> 33) % 13) as i64 - 6)
            })
            .collect();
        let conc = Mat::from_fn(n, cols, |i, j| m[i][j].eval(&point));
        r = r.max(conc.rank());
    }
    while r < n.min(cols) && !all_minors_vanish(m, r + 1, nvars) {
        r += 1;
    }
    r
}

pub(crate) fn all_minors_vanish(m: &[Vec<CoordPoly>], size: usize, nvars: usize) -> bool {
    let n = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    if size > n || size > cols {
        return true;
    }
    for rows in subsets(n, size) {
        for cs in subsets(cols, size) {
            let sub: Vec<Vec<CoordPoly>> = rows
                .iter()
                .map(|&i| cs.iter().map(|&j| m[i][j].clone()).collect())
                .collect();
            if !det_coordpoly(&sub, nvars).is_zero() {
                return false;
            }
        }
    }
    true
}

/// All `(rank+1)`-minors of `[M | col]` that use the extra column vanish
/// identically.
pub(crate) fn augmented_rank_preserved(
    m: &[Vec<CoordPoly>],
    col: &[CoordPoly],
    rank: usize,
    nvars: usize,
) -> bool {
    let n = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let size = rank + 1;
    if size > n {
        return true;
    }
    for rows in subsets(n, size) {
        for cs in subsets(cols, size - 1) {
            let sub: Vec<Vec<CoordPoly>> = rows
                .iter()
                .map(|&i| {
                    let mut row: Vec<CoordPoly> = cs.iter().map(|&j| m[i][j].clone()).collect();
                    row.push(col[i].clone());
                    row
                })
                .collect();
            if !det_coordpoly(&sub, nvars).is_zero() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn rmat(rows: &[&[i64]]) -> Mat<Rational> {
        Mat::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&x| Rational::int(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn solve_and_kernel() {
        let a = rmat(&[&[1, 2], &[3, 4]]);
        let x = a.solve(&[Rational::int(5), Rational::int(11)]).unwrap();
        assert_eq!(x, vec![Rational::int(1), Rational::int(2)]);
        assert!(a.kernel().is_empty());

        let b = rmat(&[&[1, 2, 3], &[2, 4, 6]]);
        let k = b.kernel();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(b.mul_vec(v).iter().all(|t| t.is_zero()));
        }
        assert!(b.solve(&[Rational::int(1), Rational::int(3)]).is_none());
    }

    #[test]
    fn inverse_and_det() {
        let a = rmat(&[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.matmul(&inv), Mat::identity(2));
        assert_eq!(a.det(), Rational::int(1));
        assert_eq!(rmat(&[&[1, 2], &[2, 4]]).det(), Rational::zero());
        assert_eq!(rmat(&[&[0, 1], &[1, 0]]).det(), Rational::int(-1));
    }

    #[test]
    fn ring_det_matches_field_det() {
        let a = rmat(&[&[3, 1, 4], &[1, 5, 9], &[2, 6, 5]]);
        assert_eq!(a.det_ring(), a.det());
        let b = rmat(&[&[2, 0], &[0, 3]]);
        assert_eq!(b.det_ring(), Rational::int(6));
    }

    #[test]
    fn det_ring_over_trigpoly() {
        // rotation block: det = cos² + sin² = 1
        let c = TrigPoly::cos(1);
        let s = TrigPoly::sin(1);
        let m = Mat::from_rows(vec![vec![c.clone(), s.neg()], vec![s, c]]);
        assert_eq!(m.det_ring(), TrigPoly::one());
    }

    #[test]
    fn echelon_canonicalizes() {
        let v1 = vec![r(2, 1), r(0, 1), r(2, 1)];
        let v2 = vec![r(1, 1), r(0, 1), r(1, 1)];
        let b = echelon_basis(&[v1, v2.clone()]);
        assert_eq!(b, vec![v2]);
    }

    #[test]
    fn coordpoly_det() {
        // [[x, 1], [1, x]] -> x² − 1
        let x = CoordPoly::var(1, 0);
        let one = CoordPoly::one(1);
        let d = det_coordpoly(
            &[vec![x.clone(), one.clone()], vec![one.clone(), x.clone()]],
            1,
        );
        let want = &(&x * &x) - &one;
        assert_eq!(d, want);
    }
}
