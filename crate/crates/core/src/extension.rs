//! Central extension of a metric Lie algebra along a closed nondegenerate
//! two-form, extension of derivations, and classification of the deformation
//! generator (trivial / orthogonal-times-almost-inner / beyond).

use thiserror::Error;

use crate::algebra::{AlgebraError, LieAlgebra};
use crate::forms::{
    classify_derivation, dstar, is_closed, is_exact, leibniz_violation, project_to_skew_derivations,
    Covector, TwoForm,
};
use crate::linalg::Mat;
use crate::symbolic::Rational;

#[derive(Debug, Error)]
pub enum ExtensionError {
    #[error("two-form is not closed; witness triple ({0}, {1}, {2})")]
    NotClosed(usize, usize, usize),
    #[error("two-form is degenerate; kernel vector {0:?}")]
    Degenerate(Vec<Rational>),
    #[error("endomorphism is not a derivation (fails Leibniz at pair ({0}, {1}))")]
    NotADerivation(usize, usize),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Result of extending `(g, ω)` to the algebra one dimension up.
#[derive(Debug, Clone)]
pub struct ExtensionResult {
    pub extended: LieAlgebra,
    /// Index of the new central direction in the extended basis.
    pub central_index: usize,
}

impl ExtensionResult {
    /// Embeds a vector of the base algebra into the extension.
    pub fn embed(&self, v: &[Rational]) -> Vec<Rational> {
        let mut out = v.to_vec();
        out.push(Rational::zero());
        out
    }
}

/// Builds the extension `g ⊕ ℝ·W` with bracket
/// `[(X,·),(X',·)] = ([X,X'], ω(X,X')·W)`, metric extended so the new
/// direction is a unit vector orthogonal to `g`.
pub fn extend_algebra(g: &LieAlgebra, omega: &TwoForm) -> Result<ExtensionResult, ExtensionError> {
    let n = g.dim();
    // closedness is the Jacobi condition for the extension
    if !is_closed(g, omega) {
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    let t = &(&omega.apply(&g.basis_bracket(i, j), &crate::algebra::basis_vector(n, k))
                        + &omega.apply(&g.basis_bracket(j, k), &crate::algebra::basis_vector(n, i)))
                        + &omega.apply(&g.basis_bracket(k, i), &crate::algebra::basis_vector(n, j));
                    if !t.is_zero() {
                        return Err(ExtensionError::NotClosed(i, j, k));
                    }
                }
            }
        }
        unreachable!("is_closed reported a violation but none was found");
    }
    // nondegeneracy is the strict-nonsingularity condition
    let kernel = omega.matrix().kernel();
    if let Some(v) = kernel.into_iter().next() {
        return Err(ExtensionError::Degenerate(v));
    }

    let mut brackets = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let mut v = g.basis_bracket(i, j);
            v.push(omega.entry(i, j).clone());
            if v.iter().any(|c| !c.is_zero()) {
                brackets.push((i, j, v));
            }
        }
    }
    let mut names: Vec<String> = g.names().to_vec();
    names.push("W".to_string());
    let metric = Mat::from_fn(n + 1, n + 1, |i, j| {
        if i < n && j < n {
            g.metric()[(i, j)].clone()
        } else if i == j {
            Rational::one()
        } else {
            Rational::zero()
        }
    });
    let extended = LieAlgebra::new(n + 1, names, &brackets, Some(metric))?;
    debug_assert!(extended.validate().is_valid());
    Ok(ExtensionResult {
        extended,
        central_index: n,
    })
}

/// Extends a derivation `D` of `g` to the central extension, when possible.
///
/// `D` extends iff `D*ω` is exact, say `D*ω = dη`; the extension acts by
/// `(X, ·) ↦ (D(X), −η(X)·W)` and kills the new central direction. Returns
/// `None` when `D*ω` is not exact.
pub fn extend_derivation(
    g: &LieAlgebra,
    omega: &TwoForm,
    d: &Mat<Rational>,
) -> Result<Option<ExtendedDerivation>, ExtensionError> {
    if let Some((i, j)) = leibniz_violation(g, d) {
        return Err(ExtensionError::NotADerivation(i, j));
    }
    let pulled = dstar(d, omega);
    let Some(eta) = is_exact(g, &pulled) else {
        return Ok(None);
    };
    let n = g.dim();
    let mat = Mat::from_fn(n + 1, n + 1, |i, j| {
        if i < n && j < n {
            d[(i, j)].clone()
        } else if i == n && j < n {
            -eta.coords[j].clone()
        } else {
            Rational::zero()
        }
    });
    Ok(Some(ExtendedDerivation { mat, eta }))
}

#[derive(Debug, Clone)]
pub struct ExtendedDerivation {
    /// Matrix on the extended algebra (last row carries `−η`).
    pub mat: Mat<Rational>,
    /// The primitive with `D*ω = dη` used for the extension.
    pub eta: Covector,
}

/// Classification of the one-parameter family generated by a derivation
/// `D = S + A` (skew part plus almost-inner part).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeformationClass {
    /// `S*ω = 0` and `A` inner: the family moves nothing.
    Trivial,
    /// `S*ω = 0`: orthogonal ∘ almost-inner at every level.
    GordonWilson,
    /// `S*ω ≠ 0`: the family leaves the orthogonal ∘ almost-inner class.
    Beyond,
}

#[derive(Debug, Error)]
pub enum ClassifyError {
    #[error("decomposition remainder is not almost inner; hypotheses unmet")]
    RemainderNotAlmostInner,
    #[error(transparent)]
    Extension(#[from] ExtensionError),
}

/// Classifies the deformation generator. The decomposition `D = S + A` may
/// be supplied; otherwise `S` is the trace-form projection of `D` onto the
/// skew derivations and `A` the remainder (which must classify as almost
/// inner).
pub fn classify_deformation_generator(
    g: &LieAlgebra,
    omega: &TwoForm,
    d: &Mat<Rational>,
    decomposition: Option<(&Mat<Rational>, &Mat<Rational>)>,
) -> Result<DeformationClass, ClassifyError> {
    if let Some((i, j)) = leibniz_violation(g, d) {
        return Err(ClassifyError::Extension(ExtensionError::NotADerivation(
            i, j,
        )));
    }
    let (s, a) = match decomposition {
        Some((s, a)) => (s.clone(), a.clone()),
        None => {
            let s = project_to_skew_derivations(g, d);
            let a = d.sub(&s);
            (s, a)
        }
    };
    let a_class = classify_derivation(g, &a);
    if !a_class.is_almost_inner {
        return Err(ClassifyError::RemainderNotAlmostInner);
    }
    let sw = dstar(&s, omega);
    if sw.is_zero() {
        if a_class.is_inner() {
            Ok(DeformationClass::Trivial)
        } else {
            Ok(DeformationClass::GordonWilson)
        }
    } else {
        Ok(DeformationClass::Beyond)
    }
}
