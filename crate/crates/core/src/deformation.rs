//! One-parameter automorphism families `exp(s·D)` as exact matrices of
//! quasi-trigonometric polynomials, their verification, and the
//! orthogonal-times-unipotent factoring that exposes the deformed
//! orthonormal basis.

use nalgebra::DMatrix;
use thiserror::Error;

use crate::algebra::LieAlgebra;
use crate::linalg::Mat;
use crate::symbolic::{GaussRational, PiPoly, Rational, TrigPoly};

/// Matrix of quasi-trigonometric polynomials; columns are images of basis
/// vectors, so `m[(i, j)]` is the `E_i`-coefficient of the image of `E_j`.
pub type TrigMatrix = Mat<TrigPoly>;

#[derive(Debug, Error)]
pub enum ExpError {
    #[error("matrix must be square")]
    NotSquare,
    #[error(
        "spectrum is not of the form i·k with integer k; \
         remaining characteristic factor of degree {0} — use the numeric exponential"
    )]
    SpectrumNotSupported(usize),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

/// Exact closed-form exponential `s ↦ exp(s·D)` for derivations whose
/// rational characteristic polynomial splits as `x^m·∏(x²+k²)` with integer
/// `k` (purely imaginary integer spectrum), possibly with a nilpotent part.
///
/// The matrix is split `D = Dss + Dn` (Jordan–Chevalley over the rationals),
/// the semisimple factor is exponentiated through Lagrange spectral
/// projections over the Gaussian rationals, and the nilpotent factor
/// contributes the finite series `Σ sᵐ·Dnᵐ/m!`.
pub fn exp_derivation(d: &Mat<Rational>) -> Result<TrigMatrix, ExpError> {
    let n = d.nrows();
    if d.ncols() != n {
        return Err(ExpError::NotSquare);
    }
    if n == 0 {
        return Ok(Mat::identity(0));
    }
    let char_poly = rational_char_poly(d);
    let (zero_mult, freqs) = factor_integer_imaginary(&char_poly)?;

    // squarefree part of the characteristic polynomial
    let mut squarefree = vec![Rational::one()];
    if zero_mult > 0 {
        squarefree = poly_mul(&squarefree, &[Rational::one(), Rational::zero()]);
    }
    for (k, _) in &freqs {
        squarefree = poly_mul(
            &squarefree,
            &[Rational::one(), Rational::zero(), Rational::int((k * k) as i64)],
        );
    }

    let dss = jordan_chevalley_semisimple(d, &squarefree)?;
    let dn = d.sub(&dss);
    if !dss.matmul(&dn).sub(&dn.matmul(&dss)).is_zero() {
        return Err(ExpError::Internal(
            "semisimple and nilpotent parts do not commute".into(),
        ));
    }

    // exp(s·Dss) via Lagrange idempotents at the eigenvalues {0} ∪ {±ik}
    let mut eigenvalues: Vec<GaussRational> = Vec::new();
    if zero_mult > 0 {
        eigenvalues.push(GaussRational::zero());
    }
    for (k, _) in &freqs {
        let k = Rational::int(*k as i64);
        eigenvalues.push(GaussRational::new(Rational::zero(), k.clone()));
        eigenvalues.push(GaussRational::new(Rational::zero(), -k));
    }
    let dss_g = dss.map(|c| GaussRational::real(c.clone()));
    let mut exp_ss: TrigMatrix = Mat::zeros(n, n);
    for lambda in &eigenvalues {
        let mut proj: Mat<GaussRational> = Mat::identity(n);
        for mu in &eigenvalues {
            if mu == lambda {
                continue;
            }
            let shifted = dss_g.sub(&Mat::identity(n).scale(mu));
            let denom = (lambda - mu).recip();
            proj = proj.matmul(&shifted.scale(&denom));
        }
        // e^{λs} with λ = ik: cos(ks) + i·sin(ks)
        let phase = match (&lambda.im.is_zero(), lambda.im.is_negative()) {
            (true, _) => TrigPoly::one(),
            (false, false) => {
                let k = rational_to_u32(&lambda.im)?;
                &TrigPoly::cos(k)
                    + &TrigPoly::sin(k).scale(&PiPoly::constant(GaussRational::i()))
            }
            (false, true) => {
                let k = rational_to_u32(&(-lambda.im.clone()))?;
                &TrigPoly::cos(k)
                    - &TrigPoly::sin(k).scale(&PiPoly::constant(GaussRational::i()))
            }
        };
        for i in 0..n {
            for j in 0..n {
                if proj[(i, j)].is_zero() {
                    continue;
                }
                let term = phase.scale(&PiPoly::constant(proj[(i, j)].clone()));
                exp_ss[(i, j)] = &exp_ss[(i, j)] + &term;
            }
        }
    }

    // exp(s·Dn) = Σ sᵐ Dnᵐ / m!
    let mut exp_n: TrigMatrix = Mat::identity(n);
    let mut power = Mat::<Rational>::identity(n);
    let mut factorial = Rational::one();
    for m in 1..=n {
        power = power.matmul(&dn);
        if power.is_zero() {
            break;
        }
        factorial *= &Rational::int(m as i64);
        let coeff = factorial.recip();
        for i in 0..n {
            for j in 0..n {
                if power[(i, j)].is_zero() {
                    continue;
                }
                let term = TrigPoly::s_pow(m as u32)
                    .scale(&PiPoly::rational(&power[(i, j)] * &coeff));
                exp_n[(i, j)] = &exp_n[(i, j)] + &term;
            }
        }
    }
    if !power.matmul(&dn).is_zero() && !dn.is_zero() {
        // Dn^{n+1} ≠ 0 would contradict nilpotency
        let p = power.matmul(&dn);
        if !p.is_zero() {
            return Err(ExpError::Internal("nilpotent part is not nilpotent".into()));
        }
    }

    let result = exp_ss.matmul(&exp_n);
    for i in 0..n {
        for j in 0..n {
            if !result[(i, j)].is_real() {
                return Err(ExpError::Internal(format!(
                    "complex residue in entry ({i}, {j}): {}",
                    result[(i, j)]
                )));
            }
        }
    }
    debug_assert!(evaluates_to_identity_at_zero(&result));
    Ok(result)
}

fn rational_to_u32(r: &Rational) -> Result<u32, ExpError> {
    r.as_small()
        .filter(|(_, d)| *d == 1)
        .and_then(|(n, _)| u32::try_from(n).ok())
        .ok_or_else(|| ExpError::Internal(format!("eigenvalue frequency {r} is not a small integer")))
}

fn evaluates_to_identity_at_zero(m: &TrigMatrix) -> bool {
    let n = m.nrows();
    for i in 0..n {
        for j in 0..n {
            let v = m[(i, j)].eval_at_zero();
            let want = if i == j { PiPoly::one() } else { PiPoly::zero() };
            if v != want {
                return false;
            }
        }
    }
    true
}

/// Characteristic polynomial over the rationals, coefficients highest-degree
/// first (monic). Faddeev–LeVerrier; the integer divisions are exact.
pub fn rational_char_poly(a: &Mat<Rational>) -> Vec<Rational> {
    let n = a.nrows();
    let mut coeffs = vec![Rational::one()];
    // invariant: `am` holds A·M_{k−1}; M_k = A·M_{k−1} + c_{k−1}·I
    let mut am = Mat::<Rational>::zeros(n, n);
    for k in 1..=n {
        let mut mk = am;
        let c = coeffs[k - 1].clone();
        for i in 0..n {
            mk[(i, i)] += &c;
        }
        am = a.matmul(&mk);
        let t = am.trace();
        coeffs.push(&(-t) / &Rational::int(k as i64));
    }
    coeffs
}

/// Splits a monic rational polynomial as `x^m · ∏_k (x²+k²)^{m_k}`;
/// errors out if a nontrivial factor remains.
fn factor_integer_imaginary(poly: &[Rational]) -> Result<(usize, Vec<(u32, usize)>), ExpError> {
    let mut p = poly.to_vec();
    // strip x factors (trailing zero coefficients)
    let mut zero_mult = 0usize;
    while p.len() > 1 && p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
        zero_mult += 1;
    }
    let mut freqs = Vec::new();
    let mut k = 1u32;
    while p.len() > 1 {
        let c0 = p.last().unwrap().abs();
        if c0 < Rational::int((k as i64) * (k as i64)) {
            return Err(ExpError::SpectrumNotSupported(p.len() - 1));
        }
        let divisor = [
            Rational::one(),
            Rational::zero(),
            Rational::int((k as i64) * (k as i64)),
        ];
        let mut mult = 0usize;
        while let Some(q) = poly_div_exact(&p, &divisor) {
            p = q;
            mult += 1;
        }
        if mult > 0 {
            freqs.push((k, mult));
        }
        k += 1;
    }
    Ok((zero_mult, freqs))
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += &(x * y);
        }
    }
    out
}

/// Exact division of monic polynomials (coefficients highest-first);
/// `None` when the remainder is nonzero.
fn poly_div_exact(num: &[Rational], den: &[Rational]) -> Option<Vec<Rational>> {
    if num.len() < den.len() {
        return None;
    }
    let mut rem = num.to_vec();
    let qlen = num.len() - den.len() + 1;
    let mut q = vec![Rational::zero(); qlen];
    for i in 0..qlen {
        let lead = rem[i].clone();
        q[i] = lead.clone();
        if lead.is_zero() {
            continue;
        }
        for (j, d) in den.iter().enumerate() {
            rem[i + j] -= &(&lead * d);
        }
    }
    if rem.iter().all(|c| c.is_zero()) {
        Some(q)
    } else {
        None
    }
}

fn poly_derivative(p: &[Rational]) -> Vec<Rational> {
    let deg = p.len() - 1;
    (0..deg)
        .map(|i| &p[i] * &Rational::int((deg - i) as i64))
        .collect()
}

fn poly_at_matrix(p: &[Rational], a: &Mat<Rational>) -> Mat<Rational> {
    let n = a.nrows();
    let mut out = Mat::<Rational>::zeros(n, n);
    for c in p {
        out = out.matmul(a);
        for i in 0..n {
            out[(i, i)] += c;
        }
    }
    out
}

/// Semisimple part of `d` by the Newton iteration
/// `A ← A − f(A)·f'(A)⁻¹` on the squarefree characteristic factor `f`.
fn jordan_chevalley_semisimple(
    d: &Mat<Rational>,
    squarefree: &[Rational],
) -> Result<Mat<Rational>, ExpError> {
    let mut a = d.clone();
    for _ in 0..8 {
        let fa = poly_at_matrix(squarefree, &a);
        if fa.is_zero() {
            return Ok(a);
        }
        let dfa = poly_at_matrix(&poly_derivative(squarefree), &a);
        let inv = dfa
            .inverse()
            .ok_or_else(|| ExpError::Internal("derivative factor not invertible".into()))?;
        a = a.sub(&fa.matmul(&inv));
    }
    Err(ExpError::Internal(
        "Jordan–Chevalley iteration did not converge".into(),
    ))
}

/// Numeric matrix exponential `exp(s·D)` by scaling-and-squaring with a
/// Taylor kernel; accurate to well below 1e-12 for `‖sD‖ ≤ 10`.
pub fn exp_numeric(d: &Mat<Rational>, s: f64) -> DMatrix<f64> {
    let n = d.nrows();
    let a = DMatrix::from_fn(n, n, |i, j| d[(i, j)].to_f64() * s);
    let norm = a.amax() * n as f64;
    let k = if norm > 0.5 {
        (norm / 0.5).log2().ceil() as i32
    } else {
        0
    };
    let scaled = &a / 2f64.powi(k);
    let mut term = DMatrix::<f64>::identity(n, n);
    let mut sum = DMatrix::<f64>::identity(n, n);
    for m in 1..=24 {
        term = (&term * &scaled) / m as f64;
        sum += &term;
    }
    let mut out = sum;
    for _ in 0..k {
        out = &out * &out;
    }
    out
}

/// Evaluates a trig matrix at a parameter value; entries must be real.
pub fn eval_matrix(m: &TrigMatrix, s: f64) -> DMatrix<f64> {
    let pi = std::f64::consts::PI;
    DMatrix::from_fn(m.nrows(), m.ncols(), |i, j| {
        let v = m[(i, j)].eval(s, pi);
        debug_assert!(v.im.abs() < 1e-9, "entry ({i},{j}) has imaginary part");
        v.re
    })
}

/// Certifies `Φ(0) = I` and `d/ds Φ = D·Φ` as exact canonical identities,
/// which pins `Φ = exp(s·D)` without trusting the exponential.
pub fn verify_flow(phi: &TrigMatrix, d: &Mat<Rational>) -> bool {
    let n = phi.nrows();
    if phi.ncols() != n || d.nrows() != n || d.ncols() != n {
        return false;
    }
    if !evaluates_to_identity_at_zero(phi) {
        return false;
    }
    let derivative = phi.map(|e| e.derivative());
    let d_trig = d.map(|c| TrigPoly::rational(c.clone()));
    derivative == d_trig.matmul(phi)
}

/// `Φ[Eᵢ,Eⱼ] = [ΦEᵢ, ΦEⱼ]` for all basis pairs, as exact identities.
pub fn is_automorphism_family(g: &LieAlgebra, phi: &TrigMatrix) -> bool {
    let n = g.dim();
    if phi.nrows() != n || phi.ncols() != n {
        return false;
    }
    for i in 0..n {
        for j in (i + 1)..n {
            // Φ[E_i, E_j]
            let cij = g.basis_bracket(i, j);
            let lhs: Vec<TrigPoly> = (0..n)
                .map(|k| {
                    let mut acc = TrigPoly::zero();
                    for l in 0..n {
                        if !cij[l].is_zero() {
                            acc += &phi[(k, l)].scale_rational(&cij[l]);
                        }
                    }
                    acc
                })
                .collect();
            // [ΦE_i, ΦE_j] = Σ_{a,b} Φ[a][i]Φ[b][j]·[E_a, E_b]
            let mut rhs = vec![TrigPoly::zero(); n];
            for a in 0..n {
                if phi[(a, i)].is_zero() {
                    continue;
                }
                for b in 0..n {
                    if phi[(b, j)].is_zero() {
                        continue;
                    }
                    let cab = g.basis_bracket(a, b);
                    if cab.iter().all(|c| c.is_zero()) {
                        continue;
                    }
                    let f = &phi[(a, i)] * &phi[(b, j)];
                    for k in 0..n {
                        if !cab[k].is_zero() {
                            rhs[k] += &f.scale_rational(&cab[k]);
                        }
                    }
                }
            }
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

#[derive(Debug, Error)]
pub enum FactorError {
    #[error("the lower central series is not aligned with coordinate blocks")]
    FlagNotCoordinate,
    #[error("family is not block-triangular along the flag (entry ({0}, {1}) nonzero)")]
    NotBlockTriangular(usize, usize),
    #[error("diagonal block at level {0} is not orthogonal for the metric; no orthogonal factor of the declared shape exists")]
    BlockNotOrthogonal(usize),
    #[error("central block is not the identity")]
    CentralBlockNotIdentity,
    #[error(transparent)]
    Algebra(#[from] crate::algebra::AlgebraError),
}

/// Factors a flow as `Φ = Υ̂ ∘ Ψ̂`: `Υ̂` orthogonal for the metric (block
/// rotations along the descending central flag, identity on the center) and
/// `Ψ̂` unipotent triangular. The metric deformed by `Φ` is carried by the
/// orthonormal frame `Ψ̂⁻¹`(basis).
pub fn factor_orthogonal(
    g: &LieAlgebra,
    phi: &TrigMatrix,
) -> Result<(TrigMatrix, TrigMatrix), FactorError> {
    let n = g.dim();
    let levels = coordinate_flag_levels(g)?;
    let nlevels = levels.iter().max().copied().unwrap_or(0) + 1;

    // block-triangular along the flag: no entries from deeper levels back up
    for i in 0..n {
        for j in 0..n {
            if levels[i] < levels[j] && !phi[(i, j)].is_zero() {
                return Err(FactorError::NotBlockTriangular(i, j));
            }
        }
    }

    // assemble the orthogonal factor from the diagonal blocks
    let mut upsilon: TrigMatrix = Mat::zeros(n, n);
    for level in 0..nlevels {
        let idx: Vec<usize> = (0..n).filter(|&i| levels[i] == level).collect();
        let block = Mat::from_fn(idx.len(), idx.len(), |a, b| {
            phi[(idx[a], idx[b])].clone()
        });
        if level + 1 == nlevels {
            // center: must already be the identity
            if block != Mat::identity(idx.len()) {
                return Err(FactorError::CentralBlockNotIdentity);
            }
        } else {
            // BᵀGB = G as an exact identity
            let gm = Mat::from_fn(idx.len(), idx.len(), |a, b| {
                TrigPoly::rational(g.metric()[(idx[a], idx[b])].clone())
            });
            if block.transpose().matmul(&gm).matmul(&block) != gm {
                return Err(FactorError::BlockNotOrthogonal(level));
            }
        }
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                upsilon[(i, j)] = block[(a, b)].clone();
            }
        }
    }

    // Υ̂⁻¹ = G⁻¹ Υ̂ᵀ G by orthogonality
    let ginv = g
        .metric()
        .inverse()
        .expect("metric is positive definite")
        .map(|c| TrigPoly::rational(c.clone()));
    let gmat = g.metric().map(|c| TrigPoly::rational(c.clone()));
    let upsilon_inv = ginv.matmul(&upsilon.transpose()).matmul(&gmat);
    let psi = upsilon_inv.matmul(phi);
    debug_assert_eq!(upsilon.matmul(&psi), *phi);
    Ok((upsilon, psi))
}

/// Inverse of a unipotent flag-triangular matrix via the finite Neumann
/// series `I − N + N² − …`.
pub fn unipotent_inverse(psi: &TrigMatrix) -> TrigMatrix {
    let n = psi.nrows();
    let nilpotent = psi.sub(&Mat::identity(n));
    let mut out: TrigMatrix = Mat::identity(n);
    let mut power: TrigMatrix = Mat::identity(n);
    let mut sign = false;
    loop {
        power = power.matmul(&nilpotent);
        if power.is_zero() {
            break;
        }
        sign = !sign;
        out = if sign { out.sub(&power) } else { out.add(&power) };
    }
    out
}

/// Inverse of a trig matrix with constant unit determinant, by the adjugate.
pub fn trig_inverse(m: &TrigMatrix) -> Result<TrigMatrix, String> {
    let n = m.nrows();
    let det = m.det_ring();
    let Some(c) = det.as_scalar() else {
        return Err(format!("determinant {det} is not a unit"));
    };
    if c.is_zero() {
        return Err("determinant is zero".into());
    }
    let cinv = PiPoly::constant(c.recip());
    let mut adj: TrigMatrix = Mat::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            // cofactor expansion: adj[i][j] = (−1)^{i+j}·minor(j, i)
            let sub = Mat::from_fn(n - 1, n - 1, |a, b| {
                let r = if a < j { a } else { a + 1 };
                let c = if b < i { b } else { b + 1 };
                m[(r, c)].clone()
            });
            let minor = sub.det_ring();
            adj[(i, j)] = if (i + j) % 2 == 0 {
                minor.scale(&cinv)
            } else {
                (-minor).scale(&cinv)
            };
        }
    }
    Ok(adj)
}

/// Levels of the descending flag cut out by the lower central series,
/// provided each term is spanned by coordinate directions.
fn coordinate_flag_levels(g: &LieAlgebra) -> Result<Vec<usize>, FactorError> {
    let series = g.lower_central_series()?;
    let n = g.dim();
    let mut levels = vec![0usize; n];
    for (depth, sub) in series.iter().enumerate() {
        if sub.is_zero() {
            break;
        }
        // subspace must be coordinate-spanned
        let mut members = vec![false; n];
        for b in sub.basis() {
            let nonzero: Vec<usize> = (0..n).filter(|&i| !b[i].is_zero()).collect();
            if nonzero.len() != 1 {
                return Err(FactorError::FlagNotCoordinate);
            }
            members[nonzero[0]] = true;
        }
        if members.iter().filter(|&&m| m).count() != sub.dim() {
            return Err(FactorError::FlagNotCoordinate);
        }
        for i in 0..n {
            if members[i] {
                levels[i] = depth + 1;
            }
        }
    }
    Ok(levels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bundled::{
        deformed_basis_display, extended_algebra, extended_generator, flow_display, ExampleId,
        ALL_EXAMPLES,
    };

    #[test]
    fn exp_zero_is_identity() {
        let z = Mat::<Rational>::zeros(3, 3);
        assert_eq!(exp_derivation(&z).unwrap(), Mat::identity(3));
    }

    #[test]
    fn exp_rotation_block() {
        // [[0, -2], [2, 0]] → [[cos 2s, −sin 2s], [sin 2s, cos 2s]]
        let mut d = Mat::<Rational>::zeros(2, 2);
        d[(0, 1)] = Rational::int(-2);
        d[(1, 0)] = Rational::int(2);
        let e = exp_derivation(&d).unwrap();
        assert_eq!(e[(0, 0)], TrigPoly::cos(2));
        assert_eq!(e[(0, 1)], -TrigPoly::sin(2));
        assert_eq!(e[(1, 0)], TrigPoly::sin(2));
        assert_eq!(e[(1, 1)], TrigPoly::cos(2));
    }

    #[test]
    fn exp_nilpotent_block() {
        // strictly upper 3×3 single Jordan block: exp has s and s²/2
        let mut d = Mat::<Rational>::zeros(3, 3);
        d[(0, 1)] = Rational::one();
        d[(1, 2)] = Rational::one();
        let e = exp_derivation(&d).unwrap();
        assert_eq!(e[(0, 1)], TrigPoly::s_pow(1));
        assert_eq!(
            e[(0, 2)],
            TrigPoly::s_pow(2).scale_rational(&Rational::half())
        );
        assert!(verify_flow(&e, &d));
    }

    #[test]
    fn exp_unsupported_spectrum() {
        // [[1]] has eigenvalue 1, not purely imaginary
        let mut d = Mat::<Rational>::zeros(1, 1);
        d[(0, 0)] = Rational::one();
        assert!(matches!(
            exp_derivation(&d),
            Err(ExpError::SpectrumNotSupported(_))
        ));
    }

    #[test]
    fn flows_match_displays() {
        for id in ALL_EXAMPLES {
            let d = extended_generator(id);
            let phi = exp_derivation(&d).unwrap();
            assert_eq!(phi, flow_display(id), "example {id}");
        }
    }

    #[test]
    fn flow_verification_and_automorphism() {
        for id in ALL_EXAMPLES {
            let gh = extended_algebra(id);
            let d = extended_generator(id);
            let phi = flow_display(id);
            assert!(verify_flow(&phi, &d), "example {id}");
            assert!(is_automorphism_family(&gh, &phi), "example {id}");
        }
        // identity family is a flow of the zero derivation
        let id7: TrigMatrix = Mat::identity(7);
        assert!(verify_flow(&id7, &Mat::zeros(7, 7)));
        assert!(is_automorphism_family(
            &extended_algebra(ExampleId::One),
            &id7
        ));
    }

    #[test]
    fn tampered_display_fails_verification() {
        // flipping the sign of the (W, Z1) entry breaks d/ds Φ = D·Φ
        let mut phi = flow_display(ExampleId::One);
        phi[(6, 4)] = -phi[(6, 4)].clone();
        assert!(!verify_flow(&phi, &extended_generator(ExampleId::One)));
    }

    #[test]
    fn numeric_exponential_agrees_with_symbolic() {
        // independent oracle: plain 40-term Taylor series, no scaling
        let taylor = |d: &Mat<Rational>, s: f64| {
            let n = d.nrows();
            let a = DMatrix::from_fn(n, n, |i, j| d[(i, j)].to_f64() * s);
            let mut sum = DMatrix::<f64>::identity(n, n);
            let mut term = DMatrix::<f64>::identity(n, n);
            for m in 1..=40 {
                term = (&term * &a) / m as f64;
                sum += &term;
            }
            sum
        };
        for id in ALL_EXAMPLES {
            let d = extended_generator(id);
            let phi = exp_derivation(&d).unwrap();
            for s in [0.0, 0.7, 1.3] {
                let sym = eval_matrix(&phi, s);
                let num = exp_numeric(&d, s);
                let orc = taylor(&d, s);
                assert!((&sym - &num).amax() < 1e-12, "example {id}, s={s}");
                assert!((&num - &orc).amax() < 1e-12, "example {id}, s={s}");
            }
        }
    }

    #[test]
    fn determinant_of_flows_is_one() {
        for id in ALL_EXAMPLES {
            let phi = flow_display(id);
            assert_eq!(phi.det_ring(), TrigPoly::one(), "example {id}");
        }
    }

    #[test]
    fn group_law_numeric() {
        let d = extended_generator(ExampleId::Two);
        let phi = exp_derivation(&d).unwrap();
        let mut seed = 0x12345678u64;
        let mut rnd = move || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1);
            ((seed >> 33) as f64 / (1u64 << 31) as f64) * 4.0 - 2.0
        };
        for _ in 0..10 {
            let (s, t) = (rnd(), rnd());
            let lhs = eval_matrix(&phi, s) * eval_matrix(&phi, t);
            let rhs = eval_matrix(&phi, s + t);
            assert!((lhs - rhs).amax() < 1e-12);
        }
    }

    #[test]
    fn factoring_examples() {
        for id in ALL_EXAMPLES {
            let gh = extended_algebra(id);
            let phi = flow_display(id);
            let (upsilon, psi) = factor_orthogonal(&gh, &phi).unwrap();
            assert_eq!(upsilon.matmul(&psi), phi);
            // unit diagonal on the unipotent factor
            for i in 0..7 {
                assert_eq!(psi[(i, i)], TrigPoly::one());
            }
            // deformed basis = Ψ⁻¹ applied to the standard basis
            let deformed = unipotent_inverse(&psi);
            assert_eq!(deformed, deformed_basis_display(id), "example {id}");
            // the unipotent factor is not an automorphism (the deformation
            // is not orthogonal ∘ almost-inner at the extended level)
            assert!(!is_automorphism_family(&gh, &psi), "example {id}");
        }
    }

    #[test]
    fn factoring_identity_family() {
        let gh = extended_algebra(ExampleId::One);
        let id7: TrigMatrix = Mat::identity(7);
        let (u, p) = factor_orthogonal(&gh, &id7).unwrap();
        assert_eq!(u, Mat::identity(7));
        assert_eq!(p, Mat::identity(7));
    }

    #[test]
    fn trig_inverse_of_flow() {
        let d = extended_generator(ExampleId::One);
        let phi = exp_derivation(&d).unwrap();
        let inv = trig_inverse(&phi).unwrap();
        assert_eq!(phi.matmul(&inv), Mat::identity(7));
        // agrees with exp(−sD)
        let neg = exp_derivation(&d.neg()).unwrap();
        assert_eq!(inv, neg);
    }
}
