//! Invariant 1- and 2-forms and the derivation calculus on a Lie algebra:
//! wedge, exterior derivative, the pullback action `D*ω`, exactness, and the
//! derivation taxonomy (derivation / skew / inner / almost inner).

use thiserror::Error;

use crate::algebra::{basis_vector, LieAlgebra};
use crate::linalg::{augmented_rank_preserved, generic_rank, Mat};
use crate::symbolic::{CoordPoly, Rational};

#[derive(Debug, Error, PartialEq)]
pub enum FormsError {
    #[error("expected length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("matrix does not satisfy the Leibniz identity at basis pair ({0}, {1})")]
    NotADerivation(usize, usize),
}

/// Element of the dual space in dual-basis coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Covector {
    pub coords: Vec<Rational>,
}

impl Covector {
    pub fn new(coords: Vec<Rational>) -> Self {
        Covector { coords }
    }

    pub fn zero(dim: usize) -> Self {
        Covector {
            coords: vec![Rational::zero(); dim],
        }
    }

    /// Dual basis covector `e_i^*`.
    pub fn dual_basis(dim: usize, i: usize) -> Self {
        Covector {
            coords: basis_vector(dim, i),
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn apply(&self, v: &[Rational]) -> Rational {
        assert_eq!(v.len(), self.coords.len());
        let mut acc = Rational::zero();
        for (c, x) in self.coords.iter().zip(v) {
            if !c.is_zero() && !x.is_zero() {
                acc += &(c * x);
            }
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Covector {
            coords: self.coords.iter().map(|x| x * c).collect(),
        }
    }

    pub fn add(&self, o: &Covector) -> Self {
        Covector {
            coords: self
                .coords
                .iter()
                .zip(&o.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

/// Antisymmetric bilinear form, `matrix[i][j] = ω(E_i, E_j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoForm {
    mat: Mat<Rational>,
}

impl TwoForm {
    pub fn zero(dim: usize) -> Self {
        TwoForm {
            mat: Mat::zeros(dim, dim),
        }
    }

    /// Builds from upper-triangle entries `(i, j, value)`, `i < j`.
    pub fn from_entries(dim: usize, entries: &[(usize, usize, Rational)]) -> Self {
        let mut mat = Mat::zeros(dim, dim);
        for (i, j, v) in entries {
            mat[(*i, *j)] = v.clone();
            mat[(*j, *i)] = -v.clone();
        }
        TwoForm { mat }
    }

    pub fn from_matrix(mat: Mat<Rational>) -> Self {
        assert_eq!(mat.nrows(), mat.ncols());
        debug_assert!(mat == mat.transpose().neg(), "two-form must be antisymmetric");
        TwoForm { mat }
    }

    pub fn dim(&self) -> usize {
        self.mat.nrows()
    }

    pub fn matrix(&self) -> &Mat<Rational> {
        &self.mat
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        &self.mat[(i, j)]
    }

    pub fn apply(&self, x: &[Rational], y: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for i in 0..self.dim() {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim() {
                if !y[j].is_zero() && !self.mat[(i, j)].is_zero() {
                    acc += &(&(&x[i] * &y[j]) * &self.mat[(i, j)]);
                }
            }
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.mat.is_zero()
    }

    pub fn add(&self, o: &TwoForm) -> Self {
        TwoForm {
            mat: self.mat.add(&o.mat),
        }
    }

    pub fn neg(&self) -> Self {
        TwoForm {
            mat: self.mat.neg(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TwoForm {
            mat: self.mat.scale(c),
        }
    }

    pub fn rank(&self) -> usize {
        self.mat.rank()
    }
}

/// Endomorphism whose Leibniz identity has been verified against a host
/// algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Derivation {
    mat: Mat<Rational>,
}

impl Derivation {
    /// Checked constructor: enforces `D[X,Y] = [DX,Y] + [X,DY]` on basis
    /// pairs.
    pub fn new(g: &LieAlgebra, mat: Mat<Rational>) -> Result<Self, FormsError> {
        if mat.nrows() != g.dim() || mat.ncols() != g.dim() {
            return Err(FormsError::DimensionMismatch {
                expected: g.dim(),
                got: mat.nrows(),
            });
        }
        if let Some((i, j)) = leibniz_violation(g, &mat) {
            return Err(FormsError::NotADerivation(i, j));
        }
        Ok(Derivation { mat })
    }

    /// Unchecked constructor for raw endomorphisms (the check is deferred to
    /// the caller).
    pub fn raw(mat: Mat<Rational>) -> Self {
        Derivation { mat }
    }

    pub fn matrix(&self) -> &Mat<Rational> {
        &self.mat
    }

    pub fn dim(&self) -> usize {
        self.mat.nrows()
    }

    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        self.mat.mul_vec(v)
    }
}

/// First basis pair where the Leibniz identity fails, if any.
pub fn leibniz_violation(g: &LieAlgebra, d: &Mat<Rational>) -> Option<(usize, usize)> {
    let n = g.dim();
    for i in 0..n {
        for j in (i + 1)..n {
            let lhs = d.mul_vec(&g.basis_bracket(i, j));
            let di = d.col(i);
            let dj = d.col(j);
            let r1 = g.bracket(&di, &basis_vector(n, j)).unwrap();
            let r2 = g.bracket(&basis_vector(n, i), &dj).unwrap();
            for k in 0..n {
                if lhs[k] != &r1[k] + &r2[k] {
                    return Some((i, j));
                }
            }
        }
    }
    None
}

/// `(a∧b)(X,Y) = a(X)b(Y) − a(Y)b(X)`.
pub fn wedge(a: &Covector, b: &Covector) -> TwoForm {
    assert_eq!(a.dim(), b.dim(), "wedge of covectors on different hosts");
    let n = a.dim();
    let mat = Mat::from_fn(n, n, |i, j| {
        &(&a.coords[i] * &b.coords[j]) - &(&a.coords[j] * &b.coords[i])
    });
    TwoForm { mat }
}

/// Exterior derivative of an invariant 1-form: `dη(X,Y) = −η([X,Y])`.
pub fn d_oneform(g: &LieAlgebra, eta: &Covector) -> TwoForm {
    let n = g.dim();
    let mat = Mat::from_fn(n, n, |i, j| -eta.apply(&g.basis_bracket(i, j)));
    TwoForm { mat }
}

/// `D*ω(X,Y) = ω(DX,Y) + ω(X,DY)`; as matrices `Dᵀ·W + W·D`.
pub fn dstar(d: &Mat<Rational>, omega: &TwoForm) -> TwoForm {
    assert_eq!(d.nrows(), omega.dim(), "dstar host mismatch");
    let w = omega.matrix();
    TwoForm {
        mat: d.transpose().matmul(w).add(&w.matmul(d)),
    }
}

/// `dω = 0` as the basis-triple identity
/// `ω([X,Y],Z) + ω([Y,Z],X) + ω([Z,X],Y) = 0`.
pub fn is_closed(g: &LieAlgebra, omega: &TwoForm) -> bool {
    let n = g.dim();
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                let t = &(&omega.apply(&g.basis_bracket(i, j), &basis_vector(n, k))
                    + &omega.apply(&g.basis_bracket(j, k), &basis_vector(n, i)))
                    + &omega.apply(&g.basis_bracket(k, i), &basis_vector(n, j));
                if !t.is_zero() {
                    return false;
                }
            }
        }
    }
    true
}

pub fn is_nondegenerate(omega: &TwoForm) -> bool {
    !omega.matrix().det().is_zero()
}

/// Solves `dη = σ`. The solution is unique modulo covectors killing `[g,g]`;
/// the returned representative is the one orthogonal to that kernel in the
/// dual metric, which makes the output deterministic.
pub fn is_exact(g: &LieAlgebra, sigma: &TwoForm) -> Option<Covector> {
    let n = g.dim();
    // unknown η: equations over pairs i<j: −η([E_i,E_j]) = σ(E_i,E_j)
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let br = g.basis_bracket(i, j);
            rows.push(br.iter().map(|c| -c.clone()).collect::<Vec<_>>());
            rhs.push(sigma.entry(i, j).clone());
        }
    }
    let a = Mat::from_rows(rows);
    let eta0 = a.solve(&rhs)?;
    // kernel of d = annihilator of [g,g]
    let kernel = a.kernel();
    if kernel.is_empty() {
        return Some(Covector::new(eta0));
    }
    // subtract the dual-metric-orthogonal projection onto the kernel
    let ginv = g
        .metric()
        .inverse()
        .expect("metric is positive definite");
    let ip = |x: &[Rational], y: &[Rational]| {
        let gy = ginv.mul_vec(y);
        let mut acc = Rational::zero();
        for (a, b) in x.iter().zip(&gy) {
            acc += &(a * b);
        }
        acc
    };
    let q = kernel.len();
    let gram = Mat::from_fn(q, q, |i, j| ip(&kernel[i], &kernel[j]));
    let b: Vec<Rational> = (0..q).map(|i| ip(&kernel[i], &eta0)).collect();
    let coeffs = gram.solve(&b).expect("Gram matrix invertible");
    let mut eta = eta0;
    for (c, k) in coeffs.iter().zip(&kernel) {
        for (e, kv) in eta.iter_mut().zip(k) {
            *e -= &(c * kv);
        }
    }
    Some(Covector::new(eta))
}

/// Classification of an endomorphism against the derivation taxonomy.
#[derive(Debug, Clone)]
pub struct DerivationClass {
    pub is_derivation: bool,
    /// `⟨DX,Y⟩ + ⟨X,DY⟩ = 0` on basis pairs.
    pub is_skew: bool,
    /// `Y` with `D = ad(Y)` when the linear system is solvable.
    pub inner_witness: Option<Vec<Rational>>,
    pub is_almost_inner: bool,
}

impl DerivationClass {
    pub fn is_inner(&self) -> bool {
        self.inner_witness.is_some()
    }
}

/// Decides derivation / skew / inner / almost-inner for `d`.
///
/// Almost-inner quantifies over every `X`: `D(X) ∈ {[Y,X] : Y}`. This is
/// decided by (a) requiring `D` to annihilate the center (forced, since
/// `[Y,X] = 0` for central `X`), and (b) checking that augmenting the generic
/// matrix `X ↦ [·,X]` with the column `D(X)` never raises its generic rank —
/// every rank-raising minor must vanish identically as a polynomial in the
/// coordinates of `X`.
pub fn classify_derivation(g: &LieAlgebra, d: &Mat<Rational>) -> DerivationClass {
    let n = g.dim();
    let is_derivation = leibniz_violation(g, d).is_none();

    // skew: Dᵀ·G + G·D = 0
    let gm = g.metric();
    let is_skew = d.transpose().matmul(gm).add(&gm.matmul(d)).is_zero();

    // inner: solve ad(Y) = D, i.e. for all (i,j): Σ_a y_a c(a,j,i) = D[i][j]
    let mut rows = Vec::with_capacity(n * n);
    let mut rhs = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            rows.push((0..n).map(|a| g.c(a, j, i).clone()).collect::<Vec<_>>());
            rhs.push(d[(i, j)].clone());
        }
    }
    let inner_witness = Mat::from_rows(rows).solve(&rhs);

    let is_almost_inner = almost_inner(g, d);

    DerivationClass {
        is_derivation,
        is_skew,
        inner_witness,
        is_almost_inner,
    }
}

fn almost_inner(g: &LieAlgebra, d: &Mat<Rational>) -> bool {
    let n = g.dim();
    // D must kill the center
    for z in g.center().basis() {
        if d.mul_vec(z).iter().any(|c| !c.is_zero()) {
            return false;
        }
    }
    // generic matrix B(x): columns [E_j, X]; entry (i,j) = Σ_a x_a c(j,a,i)
    let mut b = vec![vec![CoordPoly::zero(n); n]; n];
    for i in 0..n {
        for j in 0..n {
            for a in 0..n {
                let c = g.c(j, a, i);
                if !c.is_zero() {
                    let t = CoordPoly::var(n, a).scale(c);
                    b[i][j] = &b[i][j] + &t;
                }
            }
        }
    }
    // augmented column D·x
    let dx: Vec<CoordPoly> = (0..n)
        .map(|i| {
            let mut acc = CoordPoly::zero(n);
            for j in 0..n {
                if !d[(i, j)].is_zero() {
                    acc = &acc + &CoordPoly::var(n, j).scale(&d[(i, j)]);
                }
            }
            acc
        })
        .collect();

    let r = generic_rank(&b, n);
    augmented_rank_preserved(&b, &dx, r, n)
}

/// Basis of the skew-symmetric derivations (the Lie algebra of the
/// orthogonal automorphisms), as matrices.
pub fn skew_derivation_basis(g: &LieAlgebra) -> Vec<Mat<Rational>> {
    let n = g.dim();
    // unknowns: the n² entries of D (row-major). Conditions: Leibniz on basis
    // pairs and Dᵀ·G + G·D = 0 entrywise.
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    // Leibniz: for pair (i,j), component k:
    //   Σ_l D[k][l] c(i,j,l) − Σ_l c(l,j,k) D[l][i] − Σ_l c(i,l,k) D[l][j] = 0
    for i in 0..n {
        for j in (i + 1)..n {
            for k in 0..n {
                let mut row = vec![Rational::zero(); n * n];
                for l in 0..n {
                    row[k * n + l] += &g.c(i, j, l).clone();
                    row[l * n + i] -= &g.c(l, j, k).clone();
                    row[l * n + j] -= &g.c(i, l, k).clone();
                }
                rows.push(row);
            }
        }
    }
    // skewness: for (a,b): Σ_k D[k][a] G[k][b] + Σ_k G[a][k] D[k][b] = 0
    let gm = g.metric();
    for a in 0..n {
        for b in a..n {
            let mut row = vec![Rational::zero(); n * n];
            for k in 0..n {
                row[k * n + a] += &gm[(k, b)].clone();
                row[k * n + b] += &gm[(a, k)].clone();
            }
            rows.push(row);
        }
    }
    Mat::from_rows(rows)
        .kernel()
        .into_iter()
        .map(|v| Mat::from_fn(n, n, |i, j| v[i * n + j].clone()))
        .collect()
}

/// Orthogonal projection of `d` onto the span of the skew derivations with
/// respect to the trace form `⟨P,Q⟩ = tr(PᵀQ)`.
pub fn project_to_skew_derivations(g: &LieAlgebra, d: &Mat<Rational>) -> Mat<Rational> {
    let basis = skew_derivation_basis(g);
    let n = g.dim();
    if basis.is_empty() {
        return Mat::zeros(n, n);
    }
    let tr = |p: &Mat<Rational>, q: &Mat<Rational>| p.transpose().matmul(q).trace();
    let q = basis.len();
    let gram = Mat::from_fn(q, q, |i, j| tr(&basis[i], &basis[j]));
    let b: Vec<Rational> = (0..q).map(|i| tr(&basis[i], d)).collect();
    let coeffs = gram.solve(&b).expect("trace Gram invertible on a basis");
    let mut out = Mat::zeros(n, n);
    for (c, m) in coeffs.iter().zip(&basis) {
        out = out.add(&m.scale(c));
    }
    out
}
