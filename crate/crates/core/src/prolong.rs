//! Skew-symmetric prolongation spaces of orthogonal representations, the
//! contraction-projection analysis, characteristic 4-forms with the
//! minimality test, and the structural classification of arbitrary faithful
//! representations by factors.

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::combin::{binomial, subsets};
use crate::curvature::{bianchi_b1, CurvatureElement};
use crate::exact::ExactRep;
use crate::exterior::{alternation_sym2, KForm, KFormJson};
use crate::linalg::{rank_nullspace, Subspace};
use crate::rep::{
    irreducible_split, kernel_ideal, lie_closure, restrict_to_factor, IsotypicSplitting,
    LieSubalgebra,
};
use crate::{Error, Result, DEFAULT_TOL};

/// Structure of a prolongation space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProlongationClass {
    Zero,
    AdjointCartanLine,
    FullLambda3,
    ReducibleComposite,
}

/// Basis and classification of { T in Lambda^p : every iterated vector
/// contraction of T lands in g }.
#[derive(Debug, Clone)]
pub struct ProlongationReport {
    pub p: usize,
    pub dim: usize,
    pub basis: Vec<KForm>,
    pub classification: ProlongationClass,
    pub exact_confirmed: bool,
}

impl ProlongationReport {
    pub fn to_json(&self) -> ProlongationJson {
        ProlongationJson {
            p: self.p,
            dim: self.dim,
            basis: self.basis.iter().map(KFormJson::from).collect(),
            classification: self.classification,
            exact_confirmed: self.exact_confirmed,
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ProlongationJson {
    pub p: usize,
    pub dim: usize,
    pub basis: Vec<KFormJson>,
    pub classification: ProlongationClass,
    pub exact_confirmed: bool,
}

/// Compute the degree-p prolongation of a closed subalgebra. Constraints are
/// assembled from iterated single-vector contractions (one row block per
/// increasing (p-2)-tuple), which span the same conditions as contractions
/// by arbitrary (p-2)-forms. When an exact presentation is supplied the
/// floating dimension is cross-checked against the rational backend.
pub fn skew_prolongation(
    g: &LieSubalgebra,
    p: usize,
    exact: Option<&ExactRep>,
) -> Result<ProlongationReport> {
    if !g.closed_verified() {
        return Err(Error::Input("subalgebra is not verified closed".into()));
    }
    let n = g.n();
    if p < 3 || p > n {
        return Err(Error::Degree(format!("prolongation degree {p} out of range 3..={n}")));
    }
    let tol = DEFAULT_TOL;
    let dom = binomial(n, p);
    let basis_p = subsets(n, p);
    // complement of g inside 2-forms
    let gsub = g.as_subspace(tol);
    let gperp = gsub.complement()?;
    let dim = if gperp.dim() == 0 {
        // everything qualifies
        dom
    } else {
        let tuples = subsets(n, p - 2);
        let mut mat = DMatrix::zeros(tuples.len() * gperp.dim(), dom);
        for (ti, tup) in tuples.iter().enumerate() {
            for (c, bt) in basis_p.iter().enumerate() {
                let mut f = KForm::basis(n, bt);
                for &i in tup.iter().rev() {
                    f = f.contract_basis(i);
                }
                let v = DVector::from_vec(f.coeffs().to_vec());
                for w in 0..gperp.dim() {
                    mat[(ti * gperp.dim() + w, c)] = gperp.basis().row(w).transpose().dot(&v);
                }
            }
        }
        let (rank, _) = rank_nullspace(&mat, tol)?;
        dom - rank
    };
    // recover an orthonormal basis of the space itself
    let basis = prolongation_basis(g, p, tol)?;
    debug_assert_eq!(basis.len(), dim);

    let mut exact_confirmed = false;
    if let Some(ex) = exact {
        let exact_dim = ex.prolongation_dim(p)?;
        if exact_dim != dim {
            return Err(Error::Classify(format!(
                "backend disagreement: floating prolongation dim {dim}, exact {exact_dim}"
            )));
        }
        exact_confirmed = true;
    }

    let classification = classify_prolongation(g, p, &basis, dim, tol)?;
    Ok(ProlongationReport { p, dim, basis, classification, exact_confirmed })
}

fn prolongation_basis(g: &LieSubalgebra, p: usize, tol: f64) -> Result<Vec<KForm>> {
    let n = g.n();
    let dom = binomial(n, p);
    let basis_p = subsets(n, p);
    let gsub = g.as_subspace(tol);
    let gperp = gsub.complement()?;
    if gperp.dim() == 0 {
        return Ok(basis_p.iter().map(|t| KForm::basis(n, t)).collect());
    }
    let tuples = subsets(n, p - 2);
    let mut mat = DMatrix::zeros(tuples.len() * gperp.dim(), dom);
    for (ti, tup) in tuples.iter().enumerate() {
        for (c, bt) in basis_p.iter().enumerate() {
            let mut f = KForm::basis(n, bt);
            for &i in tup.iter().rev() {
                f = f.contract_basis(i);
            }
            let v = DVector::from_vec(f.coeffs().to_vec());
            for w in 0..gperp.dim() {
                mat[(ti * gperp.dim() + w, c)] = gperp.basis().row(w).transpose().dot(&v);
            }
        }
    }
    let (_, kernel) = rank_nullspace(&mat, tol)?;
    Ok((0..kernel.dim())
        .map(|r| KForm::from_coeffs(n, p, kernel.basis().row(r).iter().cloned().collect()).unwrap())
        .collect())
}

fn classify_prolongation(
    g: &LieSubalgebra,
    p: usize,
    basis: &[KForm],
    dim: usize,
    tol: f64,
) -> Result<ProlongationClass> {
    let n = g.n();
    if dim == 0 {
        return Ok(ProlongationClass::Zero);
    }
    if dim == binomial(n, p) {
        return Ok(ProlongationClass::FullLambda3);
    }
    if p == 3 && dim == 1 {
        // structural adjoint test: contractions of the generator close onto g
        let t = &basis[0];
        let contractions: Vec<KForm> = (0..n)
            .map(|i| t.contract_basis(i))
            .filter(|f| f.norm() > tol)
            .collect();
        if !contractions.is_empty() {
            let closure = lie_closure(&contractions, tol)?;
            if closure.dim() == g.dim() && g.dim() == n {
                return Ok(ProlongationClass::AdjointCartanLine);
            }
        }
    }
    Ok(ProlongationClass::ReducibleComposite)
}

/// Kernel/cokernel analysis of the map sending a 3-form to the g-perp parts
/// of its contractions, plus the dimension count that singles out the
/// maximal case.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EpsPerpReport {
    pub kernel_dim: usize,
    pub coker_dim: usize,
    pub is_isomorphism: bool,
    pub dim_gperp: usize,
    pub dim_formula_holds: bool,
}

pub fn eps_perp_analysis(g: &LieSubalgebra, exact: Option<&ExactRep>) -> Result<EpsPerpReport> {
    let n = g.n();
    let tol = DEFAULT_TOL;
    let report = skew_prolongation(g, 3, None)?;
    let kernel_dim = report.dim;
    let dim_gperp = binomial(n, 2) - g.dim();
    let rank = binomial(n, 3) - kernel_dim;
    let coker_dim = n * dim_gperp - rank;
    let is_isomorphism = kernel_dim == 0 && coker_dim == 0;
    let dim_formula_holds = 6 * dim_gperp == (n - 1) * (n - 2);
    if let Some(ex) = exact {
        let (k, c, d) = ex.eps_perp_dims()?;
        if (k, c, d) != (kernel_dim, coker_dim, dim_gperp) {
            return Err(Error::Classify(format!(
                "backend disagreement in contraction analysis: float ({kernel_dim},{coker_dim},{dim_gperp}) vs exact ({k},{c},{d})"
            )));
        }
    }
    let _ = tol;
    Ok(EpsPerpReport { kernel_dim, coker_dim, is_isomorphism, dim_gperp, dim_formula_holds })
}

/// Characteristic 4-form `sum_k x_k ^ x_k` over an orthonormal basis of the
/// subalgebra; invariant under the action.
pub fn characteristic_form(g: &LieSubalgebra) -> Result<KForm> {
    if !g.closed_verified() {
        return Err(Error::Input("subalgebra is not verified closed".into()));
    }
    let n = g.n();
    let m = binomial(n, 2);
    // projector onto g in the 2-form coordinates
    let mut proj = DMatrix::zeros(m, m);
    for b in g.basis() {
        let v = DVector::from_vec(b.coeffs().to_vec());
        proj += &v * v.transpose();
    }
    alternation_sym2(&proj, n)
}

/// Anticommutator of a symmetric operator on V with the skew dual of a
/// 2-form, flattened back to a 2-form: `{C, F}` in the characteristic-form
/// contraction identity.
pub fn casimir_anticommutator(c: &DMatrix<f64>, f: &KForm) -> KForm {
    let skew = crate::exterior::sharp(f).expect("2-form");
    let m = c * skew.matrix() + skew.matrix() * c;
    crate::exterior::flat(
        &crate::exterior::SkewMap::new(m).expect("anticommutator with symmetric is skew"),
    )
}

/// Minimality of the representation: the characteristic form vanishes iff
/// the orthogonal projector onto g is itself a curvature tensor. Both flags
/// are computed and must agree.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MinimalityReport {
    pub minimal: bool,
    pub one_g_in_curvature_space: bool,
    pub charform_norm: f64,
}

pub fn is_minimal(g: &LieSubalgebra, tol: f64) -> Result<MinimalityReport> {
    let t = characteristic_form(g)?;
    let minimal = t.norm() <= tol * (g.dim() as f64).max(1.0);
    let n = g.n();
    let m = binomial(n, 2);
    let mut proj = DMatrix::zeros(m, m);
    for b in g.basis() {
        let v = DVector::from_vec(b.coeffs().to_vec());
        proj += &v * v.transpose();
    }
    let q = CurvatureElement::new(n, proj, tol)?;
    let b1 = bianchi_b1(&q);
    let b1norm: f64 = b1.iter().map(|f| f.norm().powi(2)).sum::<f64>().sqrt();
    let one_g_in = b1norm <= tol * (g.dim() as f64).max(1.0);
    Ok(MinimalityReport { minimal, one_g_in_curvature_space: one_g_in, charform_norm: t.norm() })
}

/// Per-factor structure labels for the global classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FactorLabel {
    FullSo,
    AdjointSimple,
    VanishingProlongation,
}

#[derive(Debug, Clone)]
pub struct FactorReport {
    pub subspace: Subspace,
    pub ideal_dim: usize,
    pub prolongation_dim: usize,
    /// All labels that apply; so(3) factors carry both the full and the
    /// adjoint tag.
    pub labels: Vec<FactorLabel>,
}

/// Global classification of a faithful representation by splitting into
/// irreducible factors and analyzing the ideal acting on each.
#[derive(Debug, Clone)]
pub struct RepresentationClassification {
    pub splitting: IsotypicSplitting,
    pub factors: Vec<FactorReport>,
    pub global_prolongation_dim: usize,
    pub factor_dim_sum: usize,
}

pub fn classify_representation(
    g: &LieSubalgebra,
    seed: u64,
    tol: f64,
) -> Result<RepresentationClassification> {
    let splitting = irreducible_split(g, seed, tol)?;
    let mut factors = Vec::new();
    let mut factor_dim_sum = 0usize;
    for w in &splitting.factors {
        let ideal = kernel_ideal(g, w)?;
        let restricted = restrict_to_factor(&ideal, w, tol)?;
        let nk = w.dim();
        let (pdim, labels) = if restricted.dim() == 0 || nk < 3 {
            (0usize, vec![FactorLabel::VanishingProlongation])
        } else {
            let rep = skew_prolongation(&restricted, 3, None)?;
            let mut labels = Vec::new();
            if restricted.dim() == binomial(nk, 2) {
                labels.push(FactorLabel::FullSo);
            }
            if rep.dim == 1 {
                // adjoint test on the generator
                let t = &rep.basis[0];
                let contractions: Vec<KForm> = (0..nk)
                    .map(|i| t.contract_basis(i))
                    .filter(|f| f.norm() > tol)
                    .collect();
                if restricted.dim() == nk && !contractions.is_empty() {
                    let closure = lie_closure(&contractions, tol)?;
                    let omega = crate::curvature::omega_4form(t)?;
                    if closure.dim() == restricted.dim() && omega.norm() <= 1e-7 {
                        labels.push(FactorLabel::AdjointSimple);
                    }
                }
            }
            if rep.dim == 0 {
                labels.push(FactorLabel::VanishingProlongation);
            }
            if labels.is_empty() {
                return Err(Error::Classify(format!(
                    "factor of dimension {nk} fits no structural label (prolongation dim {})",
                    rep.dim
                )));
            }
            (rep.dim, labels)
        };
        factor_dim_sum += pdim;
        factors.push(FactorReport {
            subspace: w.clone(),
            ideal_dim: restricted.dim(),
            prolongation_dim: pdim,
            labels,
        });
    }
    let global = skew_prolongation(g, 3, None)?;
    Ok(RepresentationClassification {
        splitting,
        factors,
        global_prolongation_dim: global.dim,
        factor_dim_sum,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::{diagonal_embedding, direct_sum};

    fn so_n(n: usize) -> LieSubalgebra {
        let forms: Vec<KForm> = subsets(n, 2).iter().map(|t| KForm::basis(n, t)).collect();
        LieSubalgebra::from_forms(n, &forms, DEFAULT_TOL).unwrap()
    }

    #[test]
    fn so5_prolongation_is_full() {
        let g = so_n(5);
        let r = skew_prolongation(&g, 3, None).unwrap();
        assert_eq!(r.dim, 10);
        assert_eq!(r.classification, ProlongationClass::FullLambda3);
    }

    #[test]
    fn eps_perp_for_so_n_is_not_isomorphism() {
        let g = so_n(5);
        let r = eps_perp_analysis(&g, None).unwrap();
        assert_eq!(r.dim_gperp, 0);
        assert_eq!(r.kernel_dim, 10);
        assert_eq!(r.coker_dim, 0);
        assert!(!r.is_isomorphism);
        assert!(!r.dim_formula_holds);
    }

    #[test]
    fn charform_of_so5_vanishes() {
        let g = so_n(5);
        let t = characteristic_form(&g).unwrap();
        assert!(t.norm() < 1e-12);
        let m = is_minimal(&g, DEFAULT_TOL).unwrap();
        assert!(m.minimal);
        assert!(m.one_g_in_curvature_space);
    }

    #[test]
    fn block_so3_so3_classifies_as_two_full_factors() {
        let g = direct_sum(&so_n(3), &so_n(3), DEFAULT_TOL).unwrap();
        let c = classify_representation(&g, 0, DEFAULT_TOL).unwrap();
        assert_eq!(c.factors.len(), 2);
        for f in &c.factors {
            assert!(f.labels.contains(&FactorLabel::FullSo));
            assert_eq!(f.prolongation_dim, 1);
        }
        // global = blockwise sum
        assert_eq!(c.global_prolongation_dim, 2);
        assert_eq!(c.factor_dim_sum, 2);
    }

    #[test]
    fn diagonal_so3_has_vanishing_prolongation() {
        let g = diagonal_embedding(&so_n(3), DEFAULT_TOL).unwrap();
        let c = classify_representation(&g, 0, DEFAULT_TOL).unwrap();
        assert_eq!(c.factors.len(), 2);
        for f in &c.factors {
            assert_eq!(f.ideal_dim, 0);
            assert_eq!(f.prolongation_dim, 0);
            assert_eq!(f.labels, vec![FactorLabel::VanishingProlongation]);
        }
        assert_eq!(c.global_prolongation_dim, 0);
    }

    #[test]
    fn so3_factor_carries_both_tags() {
        // so(3) = the adjoint representation of the rank-one compact algebra:
        // the classification emits both structural tags
        let g = so_n(3);
        let c = classify_representation(&g, 0, DEFAULT_TOL).unwrap();
        assert_eq!(c.factors.len(), 1);
        assert!(c.factors[0].labels.contains(&FactorLabel::FullSo));
        assert!(c.factors[0].labels.contains(&FactorLabel::AdjointSimple));
    }
}
