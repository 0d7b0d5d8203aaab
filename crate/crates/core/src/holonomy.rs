//! Holonomy algebras generated by a 3-form: the closure of its contractions,
//! the induced orthogonal splitting, and the per-factor classification.

use serde::{Deserialize, Serialize};

use crate::combin::{binomial, subsets};
use crate::curvature::omega_4form;
use crate::exterior::{KForm, KFormJson};
use crate::linalg::Subspace;
use crate::rep::{irreducible_split, lie_closure, IsotypicSplitting, LieSubalgebra, SplittingJson};
use crate::{Error, Result, DEFAULT_TOL};

/// Labels an irreducible factor of the holonomy splitting.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HolonomyLabel {
    FullSo,
    AdjointCartan,
}

#[derive(Debug, Clone)]
pub struct HolonomyFactor {
    pub subspace: Subspace,
    pub label: HolonomyLabel,
    /// The component of T supported on this factor, in ambient coordinates.
    pub component: KForm,
    pub algebra_dim: usize,
}

#[derive(Debug, Clone)]
pub struct HolonomyReport {
    pub gstar: LieSubalgebra,
    pub splitting: IsotypicSplitting,
    pub factors: Vec<HolonomyFactor>,
    /// Residual of T minus the sum of its factor components.
    pub split_residual: f64,
}

impl HolonomyReport {
    pub fn to_json(&self) -> HolonomyJson {
        HolonomyJson {
            gstar_dim: self.gstar.dim(),
            splitting: self.splitting.to_json(),
            factors: self
                .factors
                .iter()
                .map(|f| HolonomyFactorJson {
                    dim: f.subspace.dim(),
                    label: f.label,
                    algebra_dim: f.algebra_dim,
                    component: (&f.component).into(),
                })
                .collect(),
            split_residual: self.split_residual,
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct HolonomyJson {
    pub gstar_dim: usize,
    pub splitting: SplittingJson,
    pub factors: Vec<HolonomyFactorJson>,
    pub split_residual: f64,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct HolonomyFactorJson {
    pub dim: usize,
    pub label: HolonomyLabel,
    pub algebra_dim: usize,
    pub component: KFormJson,
}

/// The Lie closure of all contraction 2-forms of a 3-form.
pub fn g_star(t: &KForm) -> Result<LieSubalgebra> {
    if t.degree() != 3 {
        return Err(Error::Degree(format!("expected a 3-form, got degree {}", t.degree())));
    }
    let n = t.n();
    let contractions: Vec<KForm> =
        (0..n).map(|i| t.contract_basis(i)).filter(|f| f.norm() > 1e-13).collect();
    if contractions.is_empty() {
        return Ok(LieSubalgebra::zero(n));
    }
    lie_closure(&contractions, DEFAULT_TOL)
}

/// Project a form onto the exterior algebra of a factor subspace, returned
/// in ambient coordinates.
pub fn component_on_factor(t: &KForm, w: &Subspace) -> Result<KForm> {
    let n = t.n();
    if w.ambient_dim() != n {
        return Err(Error::AmbientMismatch(w.ambient_dim(), n));
    }
    let p = t.degree();
    let mut out = KForm::zero(n, p);
    if w.dim() < p {
        return Ok(out);
    }
    let basis = w.basis_vectors();
    // 1-forms dual to the factor's orthonormal basis
    let dual: Vec<KForm> = basis.iter().map(crate::exterior::KForm::from_vector).collect();
    for idx in subsets(w.dim(), p) {
        // T(f_a, f_b, f_c) via iterated contraction
        let mut c = t.clone();
        for &a in &idx {
            c = c.contract_vector(&basis[a])?;
        }
        let value = c.coeffs()[0];
        if value.abs() < 1e-15 {
            continue;
        }
        let mut wedge = dual[idx[0]].clone();
        for &a in &idx[1..] {
            wedge = wedge.wedge(&dual[a])?;
        }
        out = out.add(&wedge.scale(value));
    }
    Ok(out)
}

/// Express a form supported on a factor in the factor's own coordinates.
pub fn component_in_factor_coords(t: &KForm, w: &Subspace) -> Result<KForm> {
    let p = t.degree();
    let basis = w.basis_vectors();
    let mut out = KForm::zero(w.dim(), p);
    for (r, idx) in subsets(w.dim(), p).iter().enumerate() {
        let mut c = t.clone();
        for &a in idx {
            c = c.contract_vector(&basis[a])?;
        }
        out.coeffs_mut()[r] = c.coeffs()[0];
    }
    Ok(out)
}

/// Classify a nonzero 3-form: split V under the closure of its contractions,
/// decompose T along the factors, and label each factor either as the full
/// rotation algebra or as the adjoint case with its invariant generator.
pub fn classify_3form(t: &KForm, seed: u64, tol: f64) -> Result<HolonomyReport> {
    if t.degree() != 3 {
        return Err(Error::Degree(format!("expected a 3-form, got degree {}", t.degree())));
    }
    if t.norm() == 0.0 {
        return Err(Error::Input("cannot classify the zero form".into()));
    }
    let gstar = g_star(t)?;
    let splitting = irreducible_split(&gstar, seed, tol)?;
    let mut factors = Vec::new();
    let mut total = KForm::zero(t.n(), 3);
    for w in &splitting.factors {
        let component = component_on_factor(t, w)?;
        total = total.add(&component);
        let nk = w.dim();
        let local = component_in_factor_coords(&component, w)?;
        let contractions: Vec<KForm> =
            (0..nk).map(|i| local.contract_basis(i)).filter(|f| f.norm() > tol).collect();
        if contractions.is_empty() {
            return Err(Error::Classify(
                "factor carries no component of the form".into(),
            ));
        }
        let span_dim = {
            let rows: Vec<nalgebra::DVector<f64>> = contractions
                .iter()
                .map(|f| nalgebra::DVector::from_vec(f.coeffs().to_vec()))
                .collect();
            crate::linalg::orthonormalize_rows(binomial(nk, 2), &rows, tol).nrows()
        };
        let local_algebra = lie_closure(&contractions, tol)?;
        let label = if local_algebra.dim() == binomial(nk, 2) {
            HolonomyLabel::FullSo
        } else {
            let omega = omega_4form(&local)?;
            let contraction_span_closed = span_dim == local_algebra.dim();
            if local_algebra.dim() == nk
                && omega.norm() <= 1e-7 * local.norm().powi(2).max(1.0)
                && contraction_span_closed
            {
                HolonomyLabel::AdjointCartan
            } else {
                return Err(Error::Classify(format!(
                    "irreducible factor of dim {nk} has algebra dim {} and torsion norm {:.3e}: no admissible label",
                    local_algebra.dim(),
                    omega_4form(&local)?.norm()
                )));
            }
        };
        factors.push(HolonomyFactor {
            subspace: w.clone(),
            label,
            component,
            algebra_dim: local_algebra.dim(),
        });
    }
    let split_residual = t.sub(&total).norm();
    if split_residual > 1e-6 * t.norm() {
        return Err(Error::Classify(format!(
            "form does not split along the invariant factors (residual {split_residual:.3e})"
        )));
    }
    Ok(HolonomyReport { gstar, splitting, factors, split_residual })
}
