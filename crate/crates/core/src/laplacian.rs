//! Levi-Civita connection for a left-invariant metric, codifferential and
//! Hodge Laplacian on invariant 1-forms, the character-twisted matrices
//! `E_τ`, their characteristic polynomials, and the constancy analysis of
//! the coefficients along a deformation.

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;
use thiserror::Error;

use crate::algebra::{basis_vector, LieAlgebra};
use crate::deformation::{exp_derivation, trig_inverse, ExpError};
use crate::forms::{d_oneform, Covector, TwoForm};
use crate::lattice::pull_character_with_inverse;
use crate::linalg::Mat;
use crate::symbolic::{GaussRational, PiPoly, Rational, TrigKey, TrigPoly};

#[derive(Debug, Error)]
pub enum LaplacianError {
    #[error("covector does not vanish on the derived subalgebra; not a character")]
    NotACharacter,
    #[error("matrix is not Hermitian after evaluation (max asymmetry {0:.3e})")]
    NotHermitian(f64),
    #[error("eigenvalue residual {0:.3e} exceeds tolerance")]
    ResidualTooLarge(f64),
    #[error(transparent)]
    Exp(#[from] ExpError),
}

/// Connection coefficients `∇_{E_i}E_j` in basis coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct ConnectionTable {
    coeffs: Vec<Vec<Vec<Rational>>>,
}

impl ConnectionTable {
    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn nabla(&self, i: usize, j: usize) -> &[Rational] {
        &self.coeffs[i][j]
    }

    /// `∇_U V` for arbitrary coordinate vectors.
    pub fn nabla_vec(&self, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
        let n = self.dim();
        let mut out = vec![Rational::zero(); n];
        for i in 0..n {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if v[j].is_zero() {
                    continue;
                }
                let f = &u[i] * &v[j];
                for k in 0..n {
                    if !self.coeffs[i][j][k].is_zero() {
                        out[k] += &(&f * &self.coeffs[i][j][k]);
                    }
                }
            }
        }
        out
    }
}

/// Levi-Civita connection of the left-invariant metric:
/// `2⟨∇_XY,Z⟩ = ⟨[X,Y],Z⟩ − ⟨[Y,Z],X⟩ + ⟨[Z,X],Y⟩` on basis triples,
/// torsion-free and metric-compatible by construction.
pub fn koszul(g: &LieAlgebra) -> ConnectionTable {
    let n = g.dim();
    let ginv = g.metric().inverse().expect("metric is positive definite");
    let mut coeffs = vec![vec![vec![Rational::zero(); n]; n]; n];
    for i in 0..n {
        let ei = basis_vector(n, i);
        for j in 0..n {
            let ej = basis_vector(n, j);
            // rhs_k = ½(⟨[E_i,E_j],E_k⟩ − ⟨[E_j,E_k],E_i⟩ + ⟨[E_k,E_i],E_j⟩)
            let bij = g.basis_bracket(i, j);
            let rhs: Vec<Rational> = (0..n)
                .map(|k| {
                    let ek = basis_vector(n, k);
                    let t = &(&g.inner_product(&bij, &ek)
                        - &g.inner_product(&g.basis_bracket(j, k), &ei))
                        + &g.inner_product(&g.basis_bracket(k, i), &ej);
                    &t * &Rational::half()
                })
                .collect();
            coeffs[i][j] = ginv.mul_vec(&rhs);
        }
    }
    ConnectionTable { coeffs }
}

/// Dual connection action on invariant 1-forms:
/// `(∇_{E_i}μ)(V) = −μ(∇_{E_i}V)`.
pub fn nabla_oneform(table: &ConnectionTable, i: usize, mu: &Covector) -> Covector {
    let n = table.dim();
    Covector::new(
        (0..n)
            .map(|v| -mu.apply(table.nabla(i, v)))
            .collect(),
    )
}

/// Codifferential of an invariant 1-form (a constant function on the group):
/// `δμ = −Σ_{ij} G^{ij}(∇_{E_i}μ)(E_j)`.
pub fn delta_oneform(g: &LieAlgebra, table: &ConnectionTable, mu: &Covector) -> Rational {
    let n = g.dim();
    let ginv = g.metric().inverse().expect("metric is positive definite");
    let mut acc = Rational::zero();
    for i in 0..n {
        let nm = nabla_oneform(table, i, mu);
        for j in 0..n {
            if !ginv[(i, j)].is_zero() {
                acc -= &(&ginv[(i, j)] * &nm.coords[j]);
            }
        }
    }
    acc
}

/// Codifferential of an invariant 2-form:
/// `(δσ)(X) = −Σ_{ij} G^{ij}(∇_{E_i}σ)(E_j, X)` with
/// `(∇_Uσ)(X,Y) = −σ(∇_UX,Y) − σ(X,∇_UY)`.
pub fn delta_twoform(g: &LieAlgebra, table: &ConnectionTable, sigma: &TwoForm) -> Covector {
    let n = g.dim();
    let ginv = g.metric().inverse().expect("metric is positive definite");
    let mut out = vec![Rational::zero(); n];
    for (x, slot) in out.iter_mut().enumerate() {
        let ex = basis_vector(n, x);
        let mut acc = Rational::zero();
        for i in 0..n {
            for j in 0..n {
                if ginv[(i, j)].is_zero() {
                    continue;
                }
                let ej = basis_vector(n, j);
                // (∇_{E_i}σ)(E_j, E_x)
                let t = &(-sigma.apply(table.nabla(i, j), &ex))
                    - &sigma.apply(&ej, table.nabla(i, x));
                acc -= &(&ginv[(i, j)] * &t);
            }
        }
        *slot = acc;
    }
    Covector::new(out)
}

/// Matrix of the Hodge Laplacian on invariant 1-forms in row-as-input
/// convention: row `l` lists the coefficients of `Δμ_l`.
#[derive(Debug, Clone, PartialEq)]
pub struct InvariantFormLaplacian {
    pub mat: Mat<Rational>,
}

/// `Δ = dδ + δd` on invariant 1-forms. For an invariant 1-form `δμ` is a
/// constant function, so the `dδ` term vanishes and the matrix is assembled
/// from `δ∘d` alone.
pub fn hodge_laplacian_invariant(g: &LieAlgebra) -> InvariantFormLaplacian {
    let table = koszul(g);
    let n = g.dim();
    let rows: Vec<Vec<Rational>> = (0..n)
        .map(|l| {
            let mu = Covector::dual_basis(n, l);
            let dmu = d_oneform(g, &mu);
            delta_twoform(g, &table, &dmu).coords
        })
        .collect();
    InvariantFormLaplacian {
        mat: Mat::from_rows(rows),
    }
}

/// A covector vanishing on the derived subalgebra.
#[derive(Debug, Clone, PartialEq)]
pub struct Character {
    pub coords: Vec<Rational>,
}

impl Character {
    pub fn new(g: &LieAlgebra, coords: Vec<Rational>) -> Result<Self, LaplacianError> {
        let derived = &g.lower_central_series().map_err(|_| LaplacianError::NotACharacter)?[0];
        let cov = Covector::new(coords.clone());
        for v in derived.basis() {
            if !cov.apply(v).is_zero() {
                return Err(LaplacianError::NotACharacter);
            }
        }
        Ok(Character { coords })
    }
}

/// Eigenvalue of the Laplacian on the character's one-dimensional function
/// family: `p²·‖τ‖²` in the dual metric.
pub fn function_eigenvalue(g: &LieAlgebra, tau: &Character) -> PiPoly {
    let ginv = g.metric().inverse().expect("metric is positive definite");
    let mut norm2 = Rational::zero();
    for i in 0..g.dim() {
        for j in 0..g.dim() {
            if !tau.coords[i].is_zero() && !tau.coords[j].is_zero() {
                norm2 += &(&(&tau.coords[i] * &tau.coords[j]) * &ginv[(i, j)]);
            }
        }
    }
    PiPoly::term(2, GaussRational::real(norm2))
}

/// Builds the character-twisted matrix
/// `E_τ = p²‖τ‖²·I + M_Δ − 2p·i·Σ_j w_j·C_j`, row-as-input, where `M_Δ` is
/// the invariant-form Laplacian, `C_j` the dual-connection matrix of
/// direction `j`, and `w` the gradient coefficients `G⁻¹τ`. The character
/// coordinates may depend on the deformation parameter.
pub fn e_tau(g: &LieAlgebra, tau: &[TrigPoly]) -> Result<Mat<TrigPoly>, LaplacianError> {
    let n = g.dim();
    assert_eq!(tau.len(), n);
    // characters must kill the derived subalgebra, identically in s
    let derived = &g
        .lower_central_series()
        .map_err(|_| LaplacianError::NotACharacter)?[0];
    for v in derived.basis() {
        let mut acc = TrigPoly::zero();
        for (t, c) in tau.iter().zip(v) {
            if !c.is_zero() {
                acc += &t.scale_rational(c);
            }
        }
        if !acc.is_zero() {
            return Err(LaplacianError::NotACharacter);
        }
    }

    let ginv = g.metric().inverse().expect("metric is positive definite");
    let ginv_t = ginv.map(|c| TrigPoly::rational(c.clone()));
    // ‖τ‖² in the dual metric
    let mut norm2 = TrigPoly::zero();
    for i in 0..n {
        for j in 0..n {
            if ginv[(i, j)].is_zero() {
                continue;
            }
            norm2 += &(&tau[i] * &tau[j]).scale_rational(&ginv[(i, j)]);
        }
    }
    let p2 = TrigPoly::constant(PiPoly::term(2, GaussRational::one()));
    let laplacian = hodge_laplacian_invariant(g);
    let table = koszul(g);

    let mut e = Mat::<TrigPoly>::zeros(n, n);
    let diag = &p2 * &norm2;
    for i in 0..n {
        e[(i, i)] = diag.clone();
        for j in 0..n {
            if !laplacian.mat[(i, j)].is_zero() {
                e[(i, j)] = &e[(i, j)] + &TrigPoly::rational(laplacian.mat[(i, j)].clone());
            }
        }
    }
    // gradient coefficients w = G⁻¹τ
    let w: Vec<TrigPoly> = (0..n)
        .map(|j| {
            let mut acc = TrigPoly::zero();
            for i in 0..n {
                if !ginv_t[(j, i)].is_zero() {
                    acc += &(&ginv_t[(j, i)] * &tau[i]);
                }
            }
            acc
        })
        .collect();
    // −2p·i
    let minus_2pi = TrigPoly::constant(PiPoly::term(
        1,
        GaussRational::new(Rational::zero(), Rational::int(-2)),
    ));
    for j in 0..n {
        if w[j].is_zero() {
            continue;
        }
        let factor = &minus_2pi * &w[j];
        for l in 0..n {
            let row = nabla_oneform(&table, j, &Covector::dual_basis(n, l));
            for k in 0..n {
                if !row.coords[k].is_zero() {
                    let t = factor.scale_rational(&row.coords[k]);
                    e[(l, k)] = &e[(l, k)] + &t;
                }
            }
        }
    }
    Ok(e)
}

/// Hermitian conjugate as an exact identity: transpose and conjugate the
/// Gaussian coefficients.
pub fn is_hermitian_exact(e: &Mat<TrigPoly>) -> bool {
    let n = e.nrows();
    for i in 0..n {
        for j in 0..n {
            if e[(i, j)].conj() != e[(j, i)] {
                return false;
            }
        }
    }
    true
}

/// Characteristic polynomial over the quasi-trigonometric coefficient ring
/// by Faddeev–LeVerrier (the ring is a ℚ-algebra, so the integer divisions
/// are exact). Coefficients are returned highest-degree first, monic.
pub fn char_poly(e: &Mat<TrigPoly>) -> Vec<TrigPoly> {
    let n = e.nrows();
    let mut coeffs = vec![TrigPoly::one()];
    // invariant: `am` holds A·M_{k−1}; M_k = A·M_{k−1} + c_{k−1}·I
    let mut am = Mat::<TrigPoly>::zeros(n, n);
    for k in 1..=n {
        let mut mk = am;
        let c = coeffs[k - 1].clone();
        for i in 0..n {
            mk[(i, i)] = &mk[(i, i)] + &c;
        }
        am = e.matmul(&mk);
        let t = am.trace();
        coeffs.push((-t).scale_rational(&Rational::new(1, k as i64)));
    }
    coeffs
}

/// Constancy analysis of the characteristic polynomial of `E_{τ_s}` for one
/// integer character tuple.
#[derive(Debug, Clone)]
pub struct ConstancyReport {
    pub tuple: [i64; 4],
    pub constant: bool,
    /// Offending `(coefficient index, term)` pairs; index `i` is the
    /// coefficient of `x^(dim−i)`.
    pub witnesses: Vec<(usize, TrigKey)>,
    /// The full coefficient list, highest degree first.
    pub coefficients: Vec<TrigPoly>,
}

/// Runs the full pipeline for one tuple: pull the character through the
/// inverse flow, assemble `E_{τ_s}`, take the characteristic polynomial, and
/// test every coefficient for constancy in `s`.
///
/// The bundled-example shape is assumed: characters live on the first four
/// dual directions.
pub fn constancy_report(
    g: &LieAlgebra,
    deriv: &Mat<Rational>,
    a: &[i64; 4],
) -> Result<ConstancyReport, LaplacianError> {
    let phi = exp_derivation(deriv)?;
    let phi_inv = trig_inverse(&phi).map_err(ExpError::Internal)?;
    constancy_report_with_inverse(g, &phi_inv, a)
}

/// Same as [`constancy_report`] with the inverse flow supplied, so sweeps
/// can invert once.
pub fn constancy_report_with_inverse(
    g: &LieAlgebra,
    phi_inv: &Mat<TrigPoly>,
    a: &[i64; 4],
) -> Result<ConstancyReport, LaplacianError> {
    let n = g.dim();
    let mut tau = vec![Rational::zero(); n];
    for (i, &ai) in a.iter().enumerate() {
        tau[i] = Rational::int(ai);
    }
    let tau_s = pull_character_with_inverse(&tau, phi_inv);
    let e = e_tau(g, &tau_s)?;
    let coefficients = char_poly(&e);
    let mut witnesses = Vec::new();
    for (idx, c) in coefficients.iter().enumerate() {
        if let Err(term) = c.is_constant() {
            witnesses.push((idx, term));
        }
    }
    Ok(ConstancyReport {
        tuple: *a,
        constant: witnesses.is_empty(),
        witnesses,
        coefficients,
    })
}

/// Numeric eigenvalues of the evaluated Hermitian matrix, sorted ascending.
///
/// The complex Hermitian matrix `X + iY` is embedded as the real symmetric
/// `[[X, −Y], [Y, X]]`, whose spectrum doubles every eigenvalue; the doubled
/// list is de-duplicated pairwise. Residuals are checked per retained pair.
pub fn eigenvalues_numeric(e: &Mat<TrigPoly>, s: f64) -> Result<Vec<f64>, LaplacianError> {
    let n = e.nrows();
    let pi = std::f64::consts::PI;
    let h: Vec<Vec<Complex64>> = (0..n)
        .map(|i| (0..n).map(|j| e[(i, j)].eval(s, pi)).collect())
        .collect();
    let mut asym = 0f64;
    for i in 0..n {
        for j in 0..n {
            asym = asym.max((h[i][j] - h[j][i].conj()).norm());
        }
    }
    if asym > 1e-9 {
        return Err(LaplacianError::NotHermitian(asym));
    }
    let m = DMatrix::from_fn(2 * n, 2 * n, |r, c| {
        let (i, j) = (r % n, c % n);
        match (r < n, c < n) {
            (true, true) | (false, false) => h[i][j].re,
            (true, false) => -h[i][j].im,
            (false, true) => h[i][j].im,
        }
    });
    let eig = SymmetricEigen::new(m.clone());
    let mut order: Vec<usize> = (0..2 * n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let mut out = Vec::with_capacity(n);
    for pair in 0..n {
        let idx = order[2 * pair];
        let lambda = eig.eigenvalues[idx];
        let v = eig.eigenvectors.column(idx);
        let residual = (&m * v - v * lambda).norm();
        if residual > 1e-9 {
            return Err(LaplacianError::ResidualTooLarge(residual));
        }
        out.push(lambda);
    }
    Ok(out)
}
