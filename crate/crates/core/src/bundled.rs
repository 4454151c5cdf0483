//! Bundled data for the two seven-dimensional examples: the six-dimensional
//! two-step base algebra, the extension two-forms, the deformation
//! generators, and the golden tables (flows, deformed bases, dual-connection
//! tables, invariant-form Laplacians, character-twisted matrices) that the
//! computational pipeline is required to reproduce exactly.
//!
//! Basis order everywhere: `X1 X2 X3 X4 Z1 Z2` for the base algebra, plus
//! the central direction `W` (index 6) after extension. Dual-basis indices
//! follow the same order.

use std::fmt;
use std::str::FromStr;

use crate::algebra::LieAlgebra;
use crate::forms::{Covector, TwoForm};
use crate::linalg::Mat;
use crate::symbolic::{GaussRational, PiPoly, Rational, TrigPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExampleId {
    One,
    Two,
}

impl fmt::Display for ExampleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExampleId::One => write!(f, "I"),
            ExampleId::Two => write!(f, "II"),
        }
    }
}

impl FromStr for ExampleId {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "I" | "i" | "1" => Ok(ExampleId::One),
            "II" | "ii" | "2" => Ok(ExampleId::Two),
            other => Err(format!("unknown example `{other}` (expected I or II)")),
        }
    }
}

pub const ALL_EXAMPLES: [ExampleId; 2] = [ExampleId::One, ExampleId::Two];

fn r(n: i64) -> Rational {
    Rational::int(n)
}

fn v7(entries: &[(usize, i64)]) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); 7];
    for (i, c) in entries {
        v[*i] = r(*c);
    }
    v
}

fn v6(entries: &[(usize, i64)]) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); 6];
    for (i, c) in entries {
        v[*i] = r(*c);
    }
    v
}

/// The strictly nonsingular two-step base algebra with brackets
/// `[X1,X2] = [X3,X4] = Z1` and `[X1,X3] = [X4,X2] = Z2`.
pub fn base_algebra() -> LieAlgebra {
    LieAlgebra::new(
        6,
        ["X1", "X2", "X3", "X4", "Z1", "Z2"]
            .map(str::to_string)
            .to_vec(),
        &[
            (0, 1, v6(&[(4, 1)])),
            (2, 3, v6(&[(4, 1)])),
            (0, 2, v6(&[(5, 1)])),
            (3, 1, v6(&[(5, 1)])),
        ],
        None,
    )
    .expect("base algebra data is well-formed")
}

/// The extension two-form of the selected example.
pub fn omega(id: ExampleId) -> TwoForm {
    match id {
        // α₁∧α₂ + α₂∧α₃ + α₃∧α₄ + α₁∧ζ₁ − α₄∧ζ₂
        ExampleId::One => TwoForm::from_entries(
            6,
            &[
                (0, 1, r(1)),
                (1, 2, r(1)),
                (2, 3, r(1)),
                (0, 4, r(1)),
                (3, 5, r(-1)),
            ],
        ),
        // α₂∧α₃ + α₂∧α₄ + α₁∧ζ₁ − α₄∧ζ₂
        ExampleId::Two => TwoForm::from_entries(
            6,
            &[(1, 2, r(1)), (1, 3, r(1)), (0, 4, r(1)), (3, 5, r(-1))],
        ),
    }
}

/// The skew derivation `S` of the base algebra (shared by both examples):
/// `X1→−X4, X2→2X3, X3→−2X2, X4→X1, Z1→Z2, Z2→−Z1`.
pub fn s_derivation() -> Mat<Rational> {
    let mut m = Mat::zeros(6, 6);
    m[(3, 0)] = r(-1);
    m[(2, 1)] = r(2);
    m[(1, 2)] = r(-2);
    m[(0, 3)] = r(1);
    m[(5, 4)] = r(1);
    m[(4, 5)] = r(-1);
    m
}

/// The almost-inner derivation `A` used by the second example:
/// `X2→−Z1, X3→2Z2`, everything else to zero.
pub fn a_derivation() -> Mat<Rational> {
    let mut m = Mat::zeros(6, 6);
    m[(4, 1)] = r(-1);
    m[(5, 2)] = r(2);
    m
}

/// The deformation generator on the base algebra: `S` for the first example,
/// `S + A` for the second.
pub fn generator(id: ExampleId) -> Mat<Rational> {
    match id {
        ExampleId::One => s_derivation(),
        ExampleId::Two => s_derivation().add(&a_derivation()),
    }
}

/// The extended seven-dimensional algebra, embedded from its bracket table.
pub fn extended_algebra(id: ExampleId) -> LieAlgebra {
    let brackets: Vec<(usize, usize, Vec<Rational>)> = match id {
        ExampleId::One => vec![
            (0, 1, v7(&[(4, 1), (6, 1)])),
            (2, 3, v7(&[(4, 1), (6, 1)])),
            (0, 2, v7(&[(5, 1)])),
            (3, 1, v7(&[(5, 1)])),
            (1, 2, v7(&[(6, 1)])),
            (0, 4, v7(&[(6, 1)])),
            (5, 3, v7(&[(6, 1)])),
        ],
        ExampleId::Two => vec![
            (0, 1, v7(&[(4, 1)])),
            (2, 3, v7(&[(4, 1)])),
            (0, 2, v7(&[(5, 1)])),
            (3, 1, v7(&[(5, 1), (6, -1)])),
            (1, 2, v7(&[(6, 1)])),
            (0, 4, v7(&[(6, 1)])),
            (5, 3, v7(&[(6, 1)])),
        ],
    };
    LieAlgebra::new(
        7,
        ["X1", "X2", "X3", "X4", "Z1", "Z2", "W"]
            .map(str::to_string)
            .to_vec(),
        &brackets,
        None,
    )
    .expect("extended algebra data is well-formed")
}

/// The extended derivation on the seven-dimensional algebra (the generator
/// completed by the `−η` row on the central direction).
pub fn extended_generator(id: ExampleId) -> Mat<Rational> {
    let base = generator(id);
    let mut m = Mat::zeros(7, 7);
    for i in 0..6 {
        for j in 0..6 {
            m[(i, j)] = base[(i, j)].clone();
        }
    }
    if id == ExampleId::One {
        // η = ζ₂: the central row kills everything except Z2
        m[(6, 5)] = r(-1);
    }
    m
}

fn cos(k: u32) -> TrigPoly {
    TrigPoly::cos(k)
}

fn sin(k: u32) -> TrigPoly {
    TrigPoly::sin(k)
}

fn tneg(t: TrigPoly) -> TrigPoly {
    -t
}

/// The displayed one-parameter automorphism family `exp(s·D̂)`, columns are
/// images of the basis vectors.
pub fn flow_display(id: ExampleId) -> Mat<TrigPoly> {
    let mut m = Mat::<TrigPoly>::zeros(7, 7);
    // shared rotation blocks
    m[(0, 0)] = cos(1);
    m[(3, 0)] = tneg(sin(1));
    m[(0, 3)] = sin(1);
    m[(3, 3)] = cos(1);
    m[(1, 1)] = cos(2);
    m[(2, 1)] = sin(2);
    m[(1, 2)] = tneg(sin(2));
    m[(2, 2)] = cos(2);
    m[(4, 4)] = cos(1);
    m[(5, 4)] = sin(1);
    m[(4, 5)] = tneg(sin(1));
    m[(5, 5)] = cos(1);
    m[(6, 6)] = TrigPoly::one();
    match id {
        ExampleId::One => {
            // Z1 ↦ … − (1−cos s)·W ; Z2 ↦ … − sin s·W
            m[(6, 4)] = &cos(1) - &TrigPoly::one();
            m[(6, 5)] = tneg(sin(1));
        }
        ExampleId::Two => {
            // X2 ↦ … − sin s·Z1 + (cos s − cos 2s)·Z2 ; X3 ↦ … + sin 2s·Z2
            m[(4, 1)] = tneg(sin(1));
            m[(5, 1)] = &cos(1) - &cos(2);
            m[(5, 2)] = sin(2);
        }
    }
    m
}

/// The displayed deformed orthonormal basis after factoring out the
/// orthogonal part; columns are the basis vectors.
pub fn deformed_basis_display(id: ExampleId) -> Mat<TrigPoly> {
    let mut m = Mat::<TrigPoly>::identity(7);
    match id {
        ExampleId::One => {
            // Z1 + (1−cos s)·W and Z2 + sin s·W
            m[(6, 4)] = &TrigPoly::one() - &cos(1);
            m[(6, 5)] = sin(1);
        }
        ExampleId::Two => {
            // X2 + sin s cos 2s·Z1 − (1 − cos s cos 2s)·Z2
            m[(4, 1)] = &sin(1) * &cos(2);
            m[(5, 1)] = &(&cos(1) * &cos(2)) - &TrigPoly::one();
            // X3 − sin s sin 2s·Z1 − cos s sin 2s·Z2
            m[(4, 2)] = tneg(&sin(1) * &sin(2));
            m[(5, 2)] = tneg(&cos(1) * &sin(2));
        }
    }
    m
}

fn half_cov(entries: &[(usize, i64)]) -> Covector {
    let mut coords = vec![Rational::zero(); 7];
    for (i, sign) in entries {
        coords[*i] = Rational::new(*sign, 2);
    }
    Covector::new(coords)
}

/// The displayed dual-connection table: `table[i][l]` is the covector
/// `∇_{X_{i+1}} μ_l` for the first four basis directions against every dual
/// basis element. All entries are half-integer combinations.
pub fn nabla_dual_golden(id: ExampleId) -> Vec<Vec<Covector>> {
    let t: &[&[&[(usize, i64)]]] = match id {
        ExampleId::One => &[
            &[
                &[],
                &[(4, 1), (6, 1)],
                &[(5, 1)],
                &[],
                &[(1, -1), (6, 1)],
                &[(2, -1)],
                &[(1, -1), (4, -1)],
            ],
            &[
                &[(4, -1), (6, -1)],
                &[],
                &[(6, 1)],
                &[(5, -1)],
                &[(0, 1)],
                &[(3, 1)],
                &[(0, 1), (2, -1)],
            ],
            &[
                &[(5, -1)],
                &[(6, -1)],
                &[],
                &[(4, 1), (6, 1)],
                &[(3, -1)],
                &[(0, 1)],
                &[(1, 1), (3, -1)],
            ],
            &[
                &[],
                &[(5, 1)],
                &[(4, -1), (6, -1)],
                &[],
                &[(2, 1)],
                &[(1, -1), (6, -1)],
                &[(2, 1), (5, 1)],
            ],
        ],
        ExampleId::Two => &[
            &[
                &[],
                &[(4, 1)],
                &[(5, 1)],
                &[],
                &[(1, -1), (6, 1)],
                &[(2, -1)],
                &[(4, -1)],
            ],
            &[
                &[(4, -1)],
                &[],
                &[(6, 1)],
                &[(5, -1), (6, 1)],
                &[(0, 1)],
                &[(3, 1)],
                &[(2, -1), (3, -1)],
            ],
            &[
                &[(5, -1)],
                &[(6, -1)],
                &[],
                &[(4, 1)],
                &[(3, -1)],
                &[(0, 1)],
                &[(1, 1)],
            ],
            &[
                &[],
                &[(5, 1), (6, -1)],
                &[(4, -1)],
                &[],
                &[(2, 1)],
                &[(1, -1), (6, -1)],
                &[(1, 1), (5, 1)],
            ],
        ],
    };
    t.iter()
        .map(|row| row.iter().map(|e| half_cov(e)).collect())
        .collect()
}

/// The displayed action of the Laplacian on invariant 1-forms, in
/// row-as-input convention (row l lists the coefficients of Δμ_l).
///
/// For the second example the (ξ, ·) row carries `−ζ₂ + 4ξ`: the displayed
/// matrix of the character-twisted operator and self-adjointness both pin
/// the ζ₂ column, so the bundled table keeps the operator symmetric.
pub fn delta_golden(id: ExampleId) -> Mat<Rational> {
    let mut m = Mat::zeros(7, 7);
    match id {
        ExampleId::One => {
            m[(4, 4)] = r(2);
            m[(4, 6)] = r(2);
            m[(5, 5)] = r(2);
            m[(6, 4)] = r(2);
            m[(6, 6)] = r(5);
        }
        ExampleId::Two => {
            m[(4, 4)] = r(2);
            m[(5, 5)] = r(2);
            m[(5, 6)] = r(-1);
            m[(6, 5)] = r(-1);
            m[(6, 6)] = r(4);
        }
    }
    m
}

/// `2πi·x` as a constant quasi-trigonometric polynomial (`p` carries the 2π).
fn tpi(x: Rational) -> TrigPoly {
    TrigPoly::constant(PiPoly::term(1, GaussRational::new(Rational::zero(), x)))
}

/// The displayed character-twisted 7×7 matrix for `τ = Σ aᵢαᵢ` with rational
/// coefficients, row-as-input convention.
pub fn e_tau_golden(id: ExampleId, a: &[Rational; 4]) -> Mat<TrigPoly> {
    let norm2: Rational = a.iter().map(|x| x * x).fold(Rational::zero(), |s, t| &s + &t);
    let n2 = TrigPoly::constant(PiPoly::term(2, GaussRational::real(norm2)));
    let c = |x: i64| TrigPoly::int(x);
    let (a1, a2, a3, a4) = (a[0].clone(), a[1].clone(), a[2].clone(), a[3].clone());
    let rows: Vec<Vec<TrigPoly>> = match id {
        ExampleId::One => vec![
            vec![
                n2.clone(),
                c(0),
                c(0),
                c(0),
                tpi(a2.clone()),
                tpi(a3.clone()),
                tpi(a2.clone()),
            ],
            vec![
                c(0),
                n2.clone(),
                c(0),
                c(0),
                tpi(-a1.clone()),
                tpi(-a4.clone()),
                tpi(&a3 - &a1),
            ],
            vec![
                c(0),
                c(0),
                n2.clone(),
                c(0),
                tpi(a4.clone()),
                tpi(-a1.clone()),
                tpi(&a4 - &a2),
            ],
            vec![
                c(0),
                c(0),
                c(0),
                n2.clone(),
                tpi(-a3.clone()),
                tpi(a2.clone()),
                tpi(-a3.clone()),
            ],
            vec![
                tpi(-a2.clone()),
                tpi(a1.clone()),
                tpi(-a4.clone()),
                tpi(a3.clone()),
                &n2 + &c(2),
                c(0),
                &tpi(-a1.clone()) + &c(2),
            ],
            vec![
                tpi(-a3.clone()),
                tpi(a4.clone()),
                tpi(a1.clone()),
                tpi(-a2.clone()),
                c(0),
                &n2 + &c(2),
                tpi(a4.clone()),
            ],
            vec![
                tpi(-a2.clone()),
                tpi(&a1 - &a3),
                tpi(&a2 - &a4),
                tpi(a3.clone()),
                &tpi(a1.clone()) + &c(2),
                tpi(-a4.clone()),
                &n2 + &c(5),
            ],
        ],
        ExampleId::Two => vec![
            vec![
                n2.clone(),
                c(0),
                c(0),
                c(0),
                tpi(a2.clone()),
                tpi(a3.clone()),
                c(0),
            ],
            vec![
                c(0),
                n2.clone(),
                c(0),
                c(0),
                tpi(-a1.clone()),
                tpi(-a4.clone()),
                tpi(&a3 + &a4),
            ],
            vec![
                c(0),
                c(0),
                n2.clone(),
                c(0),
                tpi(a4.clone()),
                tpi(-a1.clone()),
                tpi(-a2.clone()),
            ],
            vec![
                c(0),
                c(0),
                c(0),
                n2.clone(),
                tpi(-a3.clone()),
                tpi(a2.clone()),
                tpi(-a2.clone()),
            ],
            vec![
                tpi(-a2.clone()),
                tpi(a1.clone()),
                tpi(-a4.clone()),
                tpi(a3.clone()),
                &n2 + &c(2),
                c(0),
                tpi(-a1.clone()),
            ],
            vec![
                tpi(-a3.clone()),
                tpi(a4.clone()),
                tpi(a1.clone()),
                tpi(-a2.clone()),
                c(0),
                &n2 + &c(2),
                &tpi(a4.clone()) + &c(-1),
            ],
            vec![
                c(0),
                tpi(-(&a3 + &a4)),
                tpi(a2.clone()),
                tpi(a2.clone()),
                tpi(a1.clone()),
                &tpi(-a4.clone()) + &c(-1),
                &n2 + &c(4),
            ],
        ],
    };
    Mat::from_rows(rows)
}

/// The displayed pulled-back character coordinates `A_i(s)` for integer
/// starting coordinates `a` (identical for both examples):
/// `A₁ = a₁cos s + a₄sin s`, `A₂ = a₂cos 2s − a₃sin 2s`,
/// `A₃ = a₂sin 2s + a₃cos 2s`, `A₄ = −a₁sin s + a₄cos s`.
pub fn pulled_character_golden(a: &[Rational; 4]) -> [TrigPoly; 4] {
    let sc = |t: TrigPoly, c: &Rational| t.scale_rational(c);
    [
        &sc(cos(1), &a[0]) + &sc(sin(1), &a[3]),
        &sc(cos(2), &a[1]) - &sc(sin(2), &a[2]),
        &sc(sin(2), &a[1]) + &sc(cos(2), &a[2]),
        &sc(cos(1), &a[3]) - &sc(sin(1), &a[0]),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extension::{extend_algebra, extend_derivation};
    use crate::forms::{dstar, d_oneform, is_closed, is_nondegenerate, leibniz_violation, wedge};

    #[test]
    fn base_algebra_is_valid_two_step_strictly_nonsingular() {
        let g = base_algebra();
        assert!(g.validate().is_valid());
        assert_eq!(g.nilpotency_step().unwrap(), 2);
        let series = g.lower_central_series().unwrap();
        assert_eq!(series[0].dim(), 2);
        assert!(series[0].contains(&v6(&[(4, 1)])));
        assert!(series[0].contains(&v6(&[(5, 1)])));
        let z = g.center();
        assert_eq!(z.dim(), 2);
        assert!(g.is_strictly_nonsingular().strictly_nonsingular);
    }

    #[test]
    fn bracket_table_examples() {
        let g1 = extended_algebra(ExampleId::One);
        // [X̂₂, X̂₃] = W
        assert_eq!(g1.basis_bracket(1, 2), v7(&[(6, 1)]));
        // antisymmetry: [X, X] = 0
        let x = v7(&[(0, 3), (2, -2), (4, 1)]);
        assert!(g1.bracket(&x, &x).unwrap().iter().all(|c| c.is_zero()));
        let g2 = extended_algebra(ExampleId::Two);
        // [X̂₄, X̂₂] = Ẑ₂ − W
        assert_eq!(g2.basis_bracket(3, 1), v7(&[(5, 1), (6, -1)]));
    }

    #[test]
    fn omegas_closed_nondegenerate() {
        let g = base_algebra();
        for id in ALL_EXAMPLES {
            let w = omega(id);
            assert!(is_closed(&g, &w), "omega {id} must be closed");
            assert!(is_nondegenerate(&w), "omega {id} must be nondegenerate");
        }
        // a rank-2 wedge is closed but degenerate on the 6-dim algebra
        let w = wedge(&Covector::dual_basis(6, 0), &Covector::dual_basis(6, 1));
        assert!(is_closed(&g, &w));
        assert!(!is_nondegenerate(&w));
        assert_eq!(w.rank(), 2);
    }

    #[test]
    fn extension_reproduces_bracket_tables() {
        let g = base_algebra();
        for id in ALL_EXAMPLES {
            let ext = extend_algebra(&g, &omega(id)).unwrap();
            assert_eq!(ext.extended, extended_algebra(id), "example {id}");
            assert_eq!(ext.central_index, 6);
        }
    }

    #[test]
    fn extended_algebras_three_step_center_one() {
        for id in ALL_EXAMPLES {
            let gh = extended_algebra(id);
            assert!(gh.validate().is_valid());
            assert_eq!(gh.nilpotency_step().unwrap(), 3);
            let z = gh.center();
            assert_eq!(z.dim(), 1);
            assert!(z.contains(&v7(&[(6, 1)])));
        }
    }

    #[test]
    fn extended_algebras_strictly_nonsingular() {
        for id in ALL_EXAMPLES {
            let rep = extended_algebra(id).is_strictly_nonsingular();
            assert!(rep.strictly_nonsingular, "example {id}: {rep:?}");
            assert!(rep.minors_vanish && rep.grid_ok);
        }
    }

    #[test]
    fn strict_nonsingularity_grid_agrees_with_minors_on_bundled() {
        for g in [base_algebra(), extended_algebra(ExampleId::One), extended_algebra(ExampleId::Two)] {
            let rep = g.is_strictly_nonsingular();
            assert_eq!(rep.minors_vanish, rep.grid_ok);
        }
    }

    #[test]
    fn deleted_bracket_breaks_jacobi() {
        // removing [X̂₁, Ẑ₁] = W from the first example's table must produce
        // a Jacobi violation (brute-force scan over all 35 triples)
        let brackets = vec![
            (0, 1, v7(&[(4, 1), (6, 1)])),
            (2, 3, v7(&[(4, 1), (6, 1)])),
            (0, 2, v7(&[(5, 1)])),
            (3, 1, v7(&[(5, 1)])),
            (1, 2, v7(&[(6, 1)])),
            (5, 3, v7(&[(6, 1)])),
        ];
        let broken = LieAlgebra::new(
            7,
            ["X1", "X2", "X3", "X4", "Z1", "Z2", "W"]
                .map(str::to_string)
                .to_vec(),
            &brackets,
            None,
        )
        .unwrap();
        let report = broken.validate();
        assert!(!report.is_valid());
        assert!(!report.jacobi_violations.is_empty());
    }

    #[test]
    fn quotient_recovers_base_algebra() {
        for id in ALL_EXAMPLES {
            let (q, complement) = extended_algebra(id).quotient_algebra().unwrap();
            assert!(q.validate().is_valid());
            let g = base_algebra();
            assert_eq!(q.dim(), g.dim());
            assert_eq!(q.metric(), g.metric());
            for i in 0..6 {
                for j in 0..6 {
                    for k in 0..6 {
                        assert_eq!(q.c(i, j, k), g.c(i, j, k), "({i},{j},{k})");
                    }
                }
            }
            // complement basis is the embedded copy of the base algebra
            assert_eq!(complement.len(), 6);
            for (i, w) in complement.iter().enumerate() {
                assert_eq!(*w, v7(&[(i, 1)]));
            }
        }
        // quotient of the base algebra is the abelian 4-space
        let (q, _) = base_algebra().quotient_algebra().unwrap();
        assert_eq!(q.dim(), 4);
        assert_eq!(q.nilpotency_step().unwrap(), 1);
    }

    #[test]
    fn s_omega_identities() {
        let g = base_algebra();
        let s = s_derivation();
        assert!(leibniz_violation(&g, &s).is_none());

        // first example: S*ω = dζ₂
        let sw1 = dstar(&s, &omega(ExampleId::One));
        let dz2 = d_oneform(&g, &Covector::dual_basis(6, 5));
        assert_eq!(sw1, dz2);

        // second example: S*ω = α₁∧α₂ − 2α₃∧α₄ and A*ω = −S*ω, D*ω = 0
        let w2 = omega(ExampleId::Two);
        let sw2 = dstar(&s, &w2);
        let want = wedge(&Covector::dual_basis(6, 0), &Covector::dual_basis(6, 1)).add(
            &wedge(&Covector::dual_basis(6, 2), &Covector::dual_basis(6, 3))
                .scale(&Rational::int(-2)),
        );
        assert_eq!(sw2, want);
        let a = a_derivation();
        assert!(leibniz_violation(&g, &a).is_none());
        assert_eq!(dstar(&a, &w2), sw2.neg());
        assert!(dstar(&generator(ExampleId::Two), &w2).is_zero());
    }

    #[test]
    fn derivation_extension_matches_displays() {
        let g = base_algebra();
        // first example: S extends with η = ζ₂
        let ext = extend_derivation(&g, &omega(ExampleId::One), &s_derivation())
            .unwrap()
            .expect("S must extend over the first form");
        assert_eq!(ext.eta, Covector::dual_basis(6, 5));
        assert_eq!(ext.mat, extended_generator(ExampleId::One));

        // second example: neither S nor A extends alone, but S + A does with η = 0
        assert!(extend_derivation(&g, &omega(ExampleId::Two), &s_derivation())
            .unwrap()
            .is_none());
        assert!(extend_derivation(&g, &omega(ExampleId::Two), &a_derivation())
            .unwrap()
            .is_none());
        let ext2 = extend_derivation(&g, &omega(ExampleId::Two), &generator(ExampleId::Two))
            .unwrap()
            .expect("S + A must extend over the second form");
        assert!(ext2.eta.is_zero());
        assert_eq!(ext2.mat, extended_generator(ExampleId::Two));
    }

    #[test]
    fn extended_generators_are_derivations() {
        for id in ALL_EXAMPLES {
            let gh = extended_algebra(id);
            assert!(leibniz_violation(&gh, &extended_generator(id)).is_none());
        }
    }
}
