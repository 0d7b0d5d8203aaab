//! Plücker-type commutator relations for p-forms, the classical
//! decomposability relations, the induced orthogonal splitting into simple
//! pieces, and metric n-ary brackets with the generalized Jacobi check.

use nalgebra::DVector;
use serde::{Deserialize, Serialize};

use crate::combin::subsets;
use crate::exterior::{contract_adjoint, form_action, KForm};
use crate::linalg::Subspace;
use crate::rep::{irreducible_split, lie_closure, LieSubalgebra};
use crate::{Error, Result};

/// Result of the commutator-relation check `[L*_zeta T, T] = 0` over all
/// simple contraction tuples.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PlcCheck {
    pub satisfied: bool,
    pub max_residual: f64,
}

/// Check `[L*_zeta T, T] = 0` for every iterated vector contraction by an
/// increasing basis tuple; by linearity this covers all (p-2)-form
/// arguments.
pub fn plc_check(t: &KForm, tol: f64) -> Result<PlcCheck> {
    let p = t.degree();
    if p < 3 {
        return Err(Error::Degree(format!("relations need degree >= 3, got {p}")));
    }
    let n = t.n();
    let scale = t.norm().powi(2).max(1.0);
    let mut worst = 0.0f64;
    for tup in subsets(n, p - 2) {
        let mut alpha = t.clone();
        for &i in tup.iter().rev() {
            alpha = alpha.contract_basis(i);
        }
        if alpha.norm() == 0.0 {
            continue;
        }
        let resid = form_action(&alpha, t)?;
        worst = worst.max(resid.norm() / scale);
    }
    Ok(PlcCheck { satisfied: worst <= tol, max_residual: worst })
}

/// Classical decomposability relations: `L*_zeta T ^ T = 0` for all basis
/// (p-1)-contractions; holds iff T is a single wedge of covectors.
pub fn classical_plucker_check(t: &KForm, tol: f64) -> Result<bool> {
    let p = t.degree();
    if p < 2 {
        return Ok(true);
    }
    let n = t.n();
    let scale = t.norm().powi(2).max(1.0);
    for tup in subsets(n, p - 1) {
        let zeta = KForm::basis(n, &tup);
        let v = contract_adjoint(&zeta, t)?;
        if v.norm() == 0.0 {
            continue;
        }
        let w = v.wedge(t)?;
        if w.norm() > tol * scale {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The closure of all simple-tuple contraction 2-forms of a p-form.
pub fn contraction_algebra(t: &KForm, tol: f64) -> Result<LieSubalgebra> {
    let p = t.degree();
    if p < 3 {
        return Err(Error::Degree("contraction algebra needs degree >= 3".into()));
    }
    let n = t.n();
    let mut gens: Vec<KForm> = Vec::new();
    for tup in subsets(n, p - 2) {
        let mut alpha = t.clone();
        for &i in tup.iter().rev() {
            alpha = alpha.contract_basis(i);
        }
        if alpha.norm() > tol {
            gens.push(alpha);
        }
    }
    if gens.is_empty() {
        return Ok(LieSubalgebra::zero(n));
    }
    lie_closure(&gens, tol)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PlueckerFactor {
    pub dim: usize,
    pub is_volume: bool,
}

/// Splitting report for a form satisfying the commutator relations.
#[derive(Debug, Clone)]
pub struct PlueckerReport {
    pub satisfies_plc: bool,
    pub satisfies_classical: bool,
    pub trivial: Subspace,
    pub factors: Vec<Subspace>,
    pub per_factor: Vec<PlueckerFactor>,
    pub decomposable: bool,
    pub worst_residual: f64,
}

/// Split V under the contraction algebra of a form satisfying the
/// commutator relations; each irreducible factor carries either the full
/// volume form of its block (simple piece) or, in degree 3, a Lie-algebra
/// structure reported by dimension only.
pub fn decompose_plc_form(t: &KForm, seed: u64, tol: f64) -> Result<PlueckerReport> {
    let check = plc_check(t, tol)?;
    if !check.satisfied {
        return Err(Error::Input(format!(
            "form violates the commutator relations (residual {:.3e})",
            check.max_residual
        )));
    }
    let classical = classical_plucker_check(t, tol)?;
    let r_t = contraction_algebra(t, tol)?;
    let splitting = irreducible_split(&r_t, seed, tol)?;
    // the form must vanish on the trivial part
    for v in splitting.trivial.basis_vectors() {
        let c = t.contract_vector(&v)?;
        if c.norm() > 1e-6 * t.norm().max(1.0) {
            return Err(Error::Classify(
                "form has a component along the trivial part".into(),
            ));
        }
    }
    let p = t.degree();
    let mut per_factor = Vec::new();
    for w in &splitting.factors {
        per_factor.push(PlueckerFactor { dim: w.dim(), is_volume: w.dim() == p });
    }
    let decomposable = per_factor.iter().all(|f| f.is_volume) && !per_factor.is_empty();
    Ok(PlueckerReport {
        satisfies_plc: true,
        satisfies_classical: classical,
        trivial: splitting.trivial,
        factors: splitting.factors,
        per_factor,
        decomposable,
        worst_residual: check.max_residual,
    })
}

/// Metric n-ary bracket attached to an (n+1)-form:
/// `<[x_1..x_n], y> = T(x_1, ..., x_n, y)`. Total antisymmetry of T encodes
/// the metric compatibility of the bracket.
#[derive(Debug, Clone)]
pub struct NLieBracket {
    arity: usize,
    dim: usize,
    form: KForm,
}

impl NLieBracket {
    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn form(&self) -> &KForm {
        &self.form
    }

    /// Bracket of arbitrary vectors.
    pub fn bracket(&self, args: &[DVector<f64>]) -> Result<DVector<f64>> {
        if args.len() != self.arity {
            return Err(Error::Input(format!(
                "bracket arity {} called with {} arguments",
                self.arity,
                args.len()
            )));
        }
        let mut c = self.form.clone();
        for x in args {
            c = c.contract_vector(x)?;
        }
        Ok(DVector::from_vec(c.coeffs().to_vec()))
    }
}

/// Wrap an (n+1)-form as an n-ary metric bracket.
pub fn nlie_bracket(t: &KForm) -> Result<NLieBracket> {
    let p = t.degree();
    if p < 3 {
        return Err(Error::Degree("bracket needs a form of degree >= 3".into()));
    }
    let arity = p - 1;
    let dim = t.n();
    if dim < arity {
        return Err(Error::Input("bracket arity exceeds the dimension".into()));
    }
    Ok(NLieBracket { arity, dim, form: t.clone() })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct JacobiCheck {
    pub satisfied: bool,
    pub worst_residual: f64,
}

/// Exhaustive generalized Jacobi check over increasing basis tuples:
/// `[X_1..X_{n-1}, [Y_1..Y_n]] = sum_i [Y_1, .., [X.., Y_i], .., Y_n]`.
pub fn nlie_jacobi_check(b: &NLieBracket, tol: f64) -> Result<JacobiCheck> {
    let n = b.arity;
    let d = b.dim;
    let scale = b.form.norm().powi(2).max(1.0);
    let mut worst = 0.0f64;
    let basis: Vec<DVector<f64>> = (0..d)
        .map(|i| {
            let mut v = DVector::zeros(d);
            v[i] = 1.0;
            v
        })
        .collect();
    for xs in subsets(d, n - 1) {
        let x_args: Vec<DVector<f64>> = xs.iter().map(|&i| basis[i].clone()).collect();
        for ys in subsets(d, n) {
            let y_args: Vec<DVector<f64>> = ys.iter().map(|&i| basis[i].clone()).collect();
            let inner = b.bracket(&y_args)?;
            let mut lhs_args = x_args.clone();
            lhs_args.push(inner);
            let lhs = b.bracket(&lhs_args)?;
            let mut rhs = DVector::zeros(d);
            for i in 0..n {
                let mut args = x_args.clone();
                args.push(y_args[i].clone());
                let moved = b.bracket(&args)?;
                let mut inner_args = y_args.clone();
                inner_args[i] = moved;
                rhs += b.bracket(&inner_args)?;
            }
            worst = worst.max((lhs - rhs).norm() / scale);
        }
    }
    Ok(JacobiCheck { satisfied: worst <= tol, worst_residual: worst })
}

/// CLI-facing summary of all the checks on one form.
#[derive(Debug, Serialize, Deserialize)]
pub struct PlueckerJson {
    pub plc: bool,
    pub classical: bool,
    pub factors: Vec<PlueckerFactor>,
    pub decomposable: bool,
    pub worst_residual: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub jacobi: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub jacobi_residual: Option<f64>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::DEFAULT_TOL;

    #[test]
    fn volume_forms_satisfy_plc() {
        let t = KForm::volume(4);
        let c = plc_check(&t, DEFAULT_TOL).unwrap();
        assert!(c.satisfied);
        assert!(classical_plucker_check(&t, DEFAULT_TOL).unwrap());
    }

    #[test]
    fn sum_of_blocks_fails_classical_but_passes_plc() {
        let t = KForm::basis(8, &[0, 1, 2, 3]).add(&KForm::basis(8, &[4, 5, 6, 7]));
        assert!(plc_check(&t, DEFAULT_TOL).unwrap().satisfied);
        assert!(!classical_plucker_check(&t, DEFAULT_TOL).unwrap());
    }

    #[test]
    fn two_form_alpha_wedge_alpha_not_simple() {
        let t = KForm::basis(4, &[0, 1]).add(&KForm::basis(4, &[2, 3]));
        assert!(!classical_plucker_check(&t, DEFAULT_TOL).unwrap());
        let simple = KForm::basis(4, &[0, 1]);
        assert!(classical_plucker_check(&simple, DEFAULT_TOL).unwrap());
    }

    #[test]
    fn decompose_two_volumes_with_trivial_direction() {
        let t = KForm::basis(9, &[0, 1, 2, 3]).add(&KForm::basis(9, &[4, 5, 6, 7]));
        let r = decompose_plc_form(&t, 0, DEFAULT_TOL).unwrap();
        assert_eq!(r.trivial.dim(), 1);
        assert_eq!(r.factors.len(), 2);
        assert!(r.per_factor.iter().all(|f| f.is_volume));
        assert!(r.decomposable);
    }

    #[test]
    fn decompose_volume_single_factor() {
        let t = KForm::volume(5);
        let r = decompose_plc_form(&t, 0, DEFAULT_TOL).unwrap();
        assert_eq!(r.factors.len(), 1);
        assert!(r.decomposable);
    }

    #[test]
    fn jacobi_of_volume_r4_holds() {
        let b = nlie_bracket(&KForm::volume(4)).unwrap();
        assert_eq!(b.arity(), 3);
        let c = nlie_jacobi_check(&b, DEFAULT_TOL).unwrap();
        assert!(c.satisfied, "residual {}", c.worst_residual);
    }

    #[test]
    fn jacobi_of_volume_r3_is_ordinary_lie() {
        let b = nlie_bracket(&KForm::volume(3)).unwrap();
        assert_eq!(b.arity(), 2);
        assert!(nlie_jacobi_check(&b, DEFAULT_TOL).unwrap().satisfied);
    }

    #[test]
    fn plc_requires_degree_three() {
        assert!(plc_check(&KForm::basis(4, &[0, 1]), DEFAULT_TOL).is_err());
    }
}
