//! Algebraic curvature machinery: the Bianchi operator, the Ricci
//! contraction, the curvature-type tensors attached to a 3-form, the space
//! of algebra-valued curvature tensors and Berger algebras.

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::combin::{binomial, lex_rank, pair_rank, subsets};
use crate::exterior::{flat, sharp, KForm};
use crate::linalg::{rank_nullspace, Subspace};
use crate::rep::LieSubalgebra;
use crate::{Error, Result, DEFAULT_TOL};

/// An element of Lambda^2 (x) Lambda^2 stored as the matrix
/// `Q(I, J) = <Q(e_I), e_J>`, with symmetry and first-Bianchi flags computed
/// at construction.
#[derive(Debug, Clone)]
pub struct CurvatureElement {
    n: usize,
    coeffs: DMatrix<f64>,
    symmetric: bool,
    bianchi: bool,
}

impl CurvatureElement {
    pub fn new(n: usize, coeffs: DMatrix<f64>, tol: f64) -> Result<Self> {
        let m = binomial(n, 2);
        if coeffs.nrows() != m || coeffs.ncols() != m {
            return Err(Error::Input(format!("expected {m}x{m} coefficient array")));
        }
        let scale = coeffs.norm().max(1.0);
        let symmetric = (&coeffs - coeffs.transpose()).norm() <= tol * scale;
        let mut q = CurvatureElement { n, coeffs, symmetric, bianchi: false };
        let b = bianchi_b1(&q);
        let bnorm: f64 = b.iter().map(|f| f.norm().powi(2)).sum::<f64>().sqrt();
        q.bianchi = bnorm <= tol * scale;
        Ok(q)
    }

    pub fn zero(n: usize) -> Self {
        let m = binomial(n, 2);
        CurvatureElement { n, coeffs: DMatrix::zeros(m, m), symmetric: true, bianchi: true }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &DMatrix<f64> {
        &self.coeffs
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    pub fn satisfies_bianchi(&self) -> bool {
        self.bianchi
    }

    pub fn norm(&self) -> f64 {
        self.coeffs.norm()
    }

    /// The 2-form Q(X, Y) for arbitrary vectors.
    pub fn evaluate(&self, x: &DVector<f64>, y: &DVector<f64>) -> KForm {
        let n = self.n;
        let mut out = KForm::zero(n, 2);
        for (r, t) in subsets(n, 2).iter().enumerate() {
            let (i, j) = (t[0], t[1]);
            let w = x[i] * y[j] - x[j] * y[i];
            if w == 0.0 {
                continue;
            }
            for (c, v) in self.coeffs.row(r).iter().enumerate() {
                out.coeffs_mut()[c] += w * v;
            }
        }
        out
    }

    /// The 2-form Q(e_i, e_j).
    pub fn evaluate_basis(&self, i: usize, j: usize) -> KForm {
        let n = self.n;
        let r = pair_rank(n, i, j);
        let sign = if i < j { 1.0 } else { -1.0 };
        KForm::from_coeffs(n, 2, self.coeffs.row(r).iter().map(|v| sign * v).collect()).unwrap()
    }

    /// Flattened coefficient vector (row-major), the coordinates used for
    /// subspaces of Lambda^2 (x) Lambda^2.
    pub fn flatten(&self) -> DVector<f64> {
        let m = self.coeffs.nrows();
        let mut v = DVector::zeros(m * m);
        for i in 0..m {
            for j in 0..m {
                v[i * m + j] = self.coeffs[(i, j)];
            }
        }
        v
    }

    pub fn to_json(&self) -> CurvatureJson {
        let n = self.n;
        let pairs = subsets(n, 2);
        let mut entries = Vec::new();
        for (ri, ti) in pairs.iter().enumerate() {
            for (rj, tj) in pairs.iter().enumerate() {
                let c = self.coeffs[(ri, rj)];
                if c != 0.0 {
                    entries.push(CurvatureEntry {
                        i: vec![ti[0] + 1, ti[1] + 1],
                        j: vec![tj[0] + 1, tj[1] + 1],
                        coeff: c,
                    });
                }
            }
        }
        CurvatureJson { n, entries }
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct CurvatureJson {
    pub n: usize,
    pub entries: Vec<CurvatureEntry>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct CurvatureEntry {
    #[serde(rename = "I")]
    pub i: Vec<usize>,
    #[serde(rename = "J")]
    pub j: Vec<usize>,
    pub coeff: f64,
}

/// First Bianchi operator: `(b1 Q)_X = sum_i e_i ^ Q(e_i, X)`, returned as
/// the array of 3-forms over basis X.
pub fn bianchi_b1(q: &CurvatureElement) -> Vec<KForm> {
    let n = q.n;
    let mut out = Vec::with_capacity(n);
    for x in 0..n {
        let mut acc = KForm::zero(n, 3.min(n));
        for i in 0..n {
            if i == x {
                continue;
            }
            let qix = q.evaluate_basis(i, x);
            let ei = KForm::basis(n, &[i]);
            acc = acc.add(&ei.wedge(&qix).unwrap());
        }
        out.push(acc);
    }
    out
}

/// Ricci contraction `Ric(Q)(X, Y) = sum_i <Q(X ^ e_i), Y ^ e_i>` as an n x n
/// bilinear form.
pub fn ricci_contraction(q: &CurvatureElement) -> DMatrix<f64> {
    let n = q.n;
    let mut ric = DMatrix::zeros(n, n);
    for x in 0..n {
        for y in 0..n {
            let mut acc = 0.0;
            for i in 0..n {
                if i == x || i == y {
                    continue;
                }
                let qxi = q.evaluate_basis(x, i);
                let ryi = pair_rank(n, y, i);
                let sign = if y < i { 1.0 } else { -1.0 };
                acc += sign * qxi.coeffs()[ryi];
            }
            ric[(x, y)] = acc;
        }
    }
    ric
}

/// The curvature-type tensor of a 3-form:
/// `R(X,Y) = [T_X, T_Y] + 2 T_{T_X Y}` where `T_X = sharp(X -| T)`.
pub fn rt_tensor(t: &KForm) -> Result<CurvatureElement> {
    if t.degree() != 3 {
        return Err(Error::Degree(format!("expected a 3-form, got degree {}", t.degree())));
    }
    let n = t.n();
    let m = binomial(n, 2);
    let contr: Vec<KForm> = (0..n).map(|i| t.contract_basis(i)).collect();
    let maps: Vec<_> = contr.iter().map(|f| sharp(f).unwrap()).collect();
    let mut coeffs = DMatrix::zeros(m, m);
    for (r, pair) in subsets(n, 2).iter().enumerate() {
        let (i, j) = (pair[0], pair[1]);
        let comm = flat(&maps[i].commutator(&maps[j]));
        let txy = maps[i].matrix().column(j).clone_owned();
        let twist = t.contract_vector(&txy)?;
        let total = comm.add(&twist.scale(2.0));
        for (c, v) in total.coeffs().iter().enumerate() {
            coeffs[(r, c)] = *v;
        }
    }
    CurvatureElement::new(n, coeffs, DEFAULT_TOL)
}

/// The 4-form `(1/2) sum_i (e_i -| T) ^ (e_i -| T)` of a 3-form.
pub fn omega_4form(t: &KForm) -> Result<KForm> {
    if t.degree() != 3 {
        return Err(Error::Degree(format!("expected a 3-form, got degree {}", t.degree())));
    }
    let n = t.n();
    let mut acc = KForm::zero(n, 4.min(n));
    for i in 0..n {
        let c = t.contract_basis(i);
        if c.norm() == 0.0 {
            continue;
        }
        acc = acc.add(&c.wedge(&c)?);
    }
    Ok(acc.scale(0.5))
}

/// Embed a 4-form as a symmetric 2-tensor on Lambda^2:
/// `Q(e_A)_B = <omega, e_A ^ e_B>`.
pub fn sym2_from_4form(omega: &KForm) -> Result<CurvatureElement> {
    if omega.degree() != 4 {
        return Err(Error::Degree("expected a 4-form".into()));
    }
    let n = omega.n();
    let m = binomial(n, 2);
    let pairs = subsets(n, 2);
    let mut coeffs = DMatrix::zeros(m, m);
    for (ra, ta) in pairs.iter().enumerate() {
        for (rb, tb) in pairs.iter().enumerate() {
            if let Some((sign, merged)) = crate::combin::merge_sign(ta, tb) {
                coeffs[(ra, rb)] = sign as f64 * omega.coeffs()[lex_rank(n, &merged)];
            }
        }
    }
    CurvatureElement::new(n, coeffs, DEFAULT_TOL)
}

/// Curvature space report: basis of the space of algebra-valued curvature
/// tensors, as a subspace of flattened Lambda^2 (x) Lambda^2.
#[derive(Debug, Clone)]
pub struct CurvatureSpace {
    pub dim: usize,
    pub basis: Vec<CurvatureElement>,
    pub space: Subspace,
}

/// The space of symmetric Bianchi-flat tensors with values in the
/// subalgebra. Parametrized over S^2(g) (symmetric + g-valued forces the
/// second slot into g too) and cut by the Bianchi constraint.
pub fn curvature_space(g: &LieSubalgebra, tol: f64) -> Result<CurvatureSpace> {
    if !g.closed_verified() {
        return Err(Error::Input("subalgebra is not verified closed".into()));
    }
    let n = g.n();
    let m = binomial(n, 2);
    let s = g.dim();
    if s == 0 {
        return Ok(CurvatureSpace {
            dim: 0,
            basis: Vec::new(),
            space: Subspace::zero(m * m, tol),
        });
    }
    let params: Vec<(usize, usize)> =
        (0..s).flat_map(|k| (k..s).map(move |l| (k, l))).collect();
    // columns: b1 of sym(x_k (x) x_l), rows stacked over (X, Lambda^3)
    let m3 = binomial(n, 3);
    let mut mat = DMatrix::zeros(n * m3, params.len());
    let mut sym_elems: Vec<CurvatureElement> = Vec::with_capacity(params.len());
    for (col, &(k, l)) in params.iter().enumerate() {
        let xk = DVector::from_vec(g.basis()[k].coeffs().to_vec());
        let xl = DVector::from_vec(g.basis()[l].coeffs().to_vec());
        let q = &xk * xl.transpose() + &xl * xk.transpose();
        let elem = CurvatureElement::new(n, q, tol)?;
        let b1 = bianchi_b1(&elem);
        for (x, f) in b1.iter().enumerate() {
            for (r, v) in f.coeffs().iter().enumerate() {
                mat[(x * m3 + r, col)] = *v;
            }
        }
        sym_elems.push(elem);
    }
    let (_, kernel) = rank_nullspace(&mat, tol)?;
    let mut basis = Vec::with_capacity(kernel.dim());
    let mut rows: Vec<DVector<f64>> = Vec::with_capacity(kernel.dim());
    for r in 0..kernel.dim() {
        let v = kernel.basis().row(r);
        let mut q = DMatrix::zeros(m, m);
        for (col, elem) in sym_elems.iter().enumerate() {
            if v[col] != 0.0 {
                q += elem.coeffs() * v[col];
            }
        }
        let elem = CurvatureElement::new(n, q, tol)?;
        rows.push(elem.flatten());
        basis.push(elem);
    }
    let space = Subspace::span(m * m, &rows, tol);
    Ok(CurvatureSpace { dim: basis.len(), basis, space })
}

/// Berger algebra: the span of all evaluations `R(X, Y)` over the curvature
/// space, together with the holonomy-representation flag (equality with g).
#[derive(Debug, Clone)]
pub struct BergerReport {
    pub algebra: LieSubalgebra,
    pub is_holonomy_representation: bool,
}

pub fn berger_algebra(g: &LieSubalgebra, tol: f64) -> Result<BergerReport> {
    let ks = curvature_space(g, tol)?;
    let n = g.n();
    let mut forms: Vec<KForm> = Vec::new();
    for q in &ks.basis {
        for pair in subsets(n, 2) {
            let f = q.evaluate_basis(pair[0], pair[1]);
            if f.norm() > tol {
                forms.push(f);
            }
        }
    }
    let algebra = if forms.is_empty() {
        LieSubalgebra::zero(n)
    } else {
        LieSubalgebra::from_forms(n, &forms, tol)?
    };
    let is_hol = algebra.dim() == g.dim();
    Ok(BergerReport { algebra, is_holonomy_representation: is_hol })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::lie_closure;
    use crate::DEFAULT_TOL;

    fn so_n(n: usize) -> LieSubalgebra {
        let forms: Vec<KForm> = subsets(n, 2).iter().map(|t| KForm::basis(n, t)).collect();
        LieSubalgebra::from_forms(n, &forms, DEFAULT_TOL).unwrap()
    }

    fn rng_form(n: usize, p: usize, seed: &mut u64) -> KForm {
        let mut coeffs = Vec::with_capacity(binomial(n, p));
        for _ in 0..binomial(n, p) {
            *seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            coeffs.push(((*seed >> 33) as f64 / u32::MAX as f64) - 0.5);
        }
        KForm::from_coeffs(n, p, coeffs).unwrap()
    }

    #[test]
    fn constant_curvature_tensor_is_bianchi_flat() {
        let n = 4;
        let m = binomial(n, 2);
        let q = CurvatureElement::new(n, DMatrix::identity(m, m), 1e-9).unwrap();
        assert!(q.is_symmetric());
        assert!(q.satisfies_bianchi());
        let b = bianchi_b1(&q);
        assert!(b.iter().all(|f| f.norm() < 1e-12));
    }

    #[test]
    fn antisymmetric_tensor_fails_bianchi() {
        let n = 4;
        let mut seed = 5u64;
        let a = rng_form(n, 2, &mut seed);
        let b = rng_form(n, 2, &mut seed);
        let va = DVector::from_vec(a.coeffs().to_vec());
        let vb = DVector::from_vec(b.coeffs().to_vec());
        let q = &va * vb.transpose() - &vb * va.transpose();
        let elem = CurvatureElement::new(n, q, 1e-9).unwrap();
        assert!(!elem.is_symmetric());
        assert!(!elem.satisfies_bianchi());
    }

    #[test]
    fn four_form_image_fails_bianchi_proportionally() {
        // the symmetric embedding of a 4-form is Bianchi-violating with
        // norm ratio independent of the sample
        let n = 6;
        let mut seed = 9u64;
        let mut ratios = Vec::new();
        for _ in 0..5 {
            let omega = rng_form(n, 4, &mut seed);
            let q = sym2_from_4form(&omega).unwrap();
            // independent expansion oracle for b1
            let b1 = bianchi_b1(&q);
            let mut oracle_norm2 = 0.0;
            for (x, f) in b1.iter().enumerate() {
                let mut direct = KForm::zero(n, 3);
                for i in 0..n {
                    if i == x {
                        continue;
                    }
                    let qix = q.evaluate_basis(i, x);
                    direct = direct.add(&KForm::basis(n, &[i]).wedge(&qix).unwrap());
                }
                assert!(f.sub(&direct).norm() < 1e-12);
                oracle_norm2 += f.norm().powi(2);
            }
            assert!(oracle_norm2 > 1e-6);
            ratios.push(oracle_norm2 / omega.norm().powi(2));
        }
        for w in ratios.windows(2) {
            assert!((w[0] - w[1]).abs() < 1e-9 * w[0].abs());
        }
    }

    #[test]
    fn ricci_of_identity_is_n_minus_one() {
        let n = 5;
        let m = binomial(n, 2);
        let q = CurvatureElement::new(n, DMatrix::identity(m, m), 1e-9).unwrap();
        let ric = ricci_contraction(&q);
        assert!((ric - DMatrix::identity(n, n) * (n as f64 - 1.0)).norm() < 1e-12);
    }

    #[test]
    fn ricci_of_so3_projector_is_two_g() {
        // the identity of so(3) = Lambda^2 R^3 has Ricci 2g
        let n = 3;
        let m = binomial(n, 2);
        let q = CurvatureElement::new(n, DMatrix::identity(m, m), 1e-9).unwrap();
        let ric = ricci_contraction(&q);
        assert!((ric - DMatrix::identity(n, n) * 2.0).norm() < 1e-12);
        // zero tensor has zero Ricci
        let z = CurvatureElement::zero(4);
        assert!(ricci_contraction(&z).norm() == 0.0);
    }

    #[test]
    fn rt_of_volume_form_r3() {
        // R of the volume form is 3x the identity on 2-forms, so its Ricci
        // is 3(n-1) g = 6 g; equals 3x the full tensor Gram of the
        // contractions (twice their form-inner-product Gram)
        let t = KForm::volume(3);
        let q = rt_tensor(&t).unwrap();
        assert!(q.satisfies_bianchi());
        assert!(q.is_symmetric());
        let ric = ricci_contraction(&q);
        assert!((ric - DMatrix::identity(3, 3) * 6.0).norm() < 1e-12);
        // zero in, zero out
        let z = rt_tensor(&KForm::zero(3, 3)).unwrap();
        assert_eq!(z.norm(), 0.0);
    }

    #[test]
    fn rt_ricci_matches_contraction_gram_randomly() {
        let n = 5;
        let mut seed = 21u64;
        for _ in 0..20 {
            let t = rng_form(n, 3, &mut seed);
            let q = rt_tensor(&t).unwrap();
            assert!(q.satisfies_bianchi());
            let ric = ricci_contraction(&q);
            // 3x the tensor Gram of contractions = 6x the form Gram
            let mut gram = DMatrix::zeros(n, n);
            for x in 0..n {
                for y in 0..n {
                    gram[(x, y)] = 6.0 * t.contract_basis(x).dot(&t.contract_basis(y));
                }
            }
            assert!((ric - gram).norm() < 1e-9);
        }
    }

    #[test]
    fn omega_vanishes_on_simple_forms() {
        let t = KForm::basis(6, &[0, 1, 2]);
        assert!(omega_4form(&t).unwrap().norm() < 1e-14);
    }

    #[test]
    fn omega_identity_against_commutators() {
        // Omega(X,Y) = -[T_X, T_Y] + T_{T_X Y} on random 3-forms
        let n = 6;
        let mut seed = 33u64;
        for _ in 0..10 {
            let t = rng_form(n, 3, &mut seed);
            let omega = omega_4form(&t).unwrap();
            assert!(omega.norm() > 1e-4); // generic forms have torsion
            let maps: Vec<_> = (0..n).map(|i| sharp(&t.contract_basis(i)).unwrap()).collect();
            for x in 0..n {
                for y in 0..n {
                    if x == y {
                        continue;
                    }
                    // Omega(X,Y) = Y -| (X -| Omega)
                    let lhs = omega.contract_basis(x).contract_basis(y);
                    let comm = flat(&maps[x].commutator(&maps[y]));
                    let txy = maps[x].matrix().column(y).clone_owned();
                    let rhs = comm.scale(-1.0).add(&t.contract_vector(&txy).unwrap());
                    assert!(lhs.sub(&rhs).norm() < 1e-9, "residual {}", lhs.sub(&rhs).norm());
                }
            }
        }
    }

    #[test]
    fn curvature_space_dims_so_n() {
        // n^2(n^2-1)/12, asserted rather than hardcoded in the logic
        for n in [3usize, 4] {
            let g = so_n(n);
            let ks = curvature_space(&g, DEFAULT_TOL).unwrap();
            let expect = n * n * (n * n - 1) / 12;
            assert_eq!(ks.dim, expect);
            for q in &ks.basis {
                assert!(q.satisfies_bianchi());
                assert!(q.is_symmetric());
            }
        }
    }

    #[test]
    fn curvature_space_of_abelian_subalgebras() {
        // maximal torus of so(5): the squares of the simple generators are
        // curvature tensors, the mixed term is not; float agrees with the
        // exact backend
        let a = KForm::basis(5, &[0, 1]);
        let b = KForm::basis(5, &[2, 3]);
        let g = lie_closure(&[a.clone(), b.clone()], DEFAULT_TOL).unwrap();
        assert_eq!(g.dim(), 2);
        let ks = curvature_space(&g, DEFAULT_TOL).unwrap();
        let exact = crate::exact::ExactRep::standard(
            5,
            vec![
                exact_skew(5, 0, 1),
                exact_skew(5, 2, 3),
            ],
        );
        assert_eq!(ks.dim, exact.curvature_space_dim());
        assert_eq!(ks.dim, 2);
        // a 1-dim span of a non-simple 2-form has no curvature tensors at all
        let line = lie_closure(&[a.add(&b)], DEFAULT_TOL).unwrap();
        let ks0 = curvature_space(&line, DEFAULT_TOL).unwrap();
        assert_eq!(ks0.dim, 0);
        let rep0 = berger_algebra(&line, DEFAULT_TOL).unwrap();
        assert_eq!(rep0.algebra.dim(), 0);
        assert!(!rep0.is_holonomy_representation);
    }

    fn exact_skew(n: usize, i: usize, j: usize) -> crate::linalg::RationalMap {
        use crate::linalg::{rat_int, RationalMap};
        let mut m = RationalMap::zeros(n, n);
        m[(j, i)] = rat_int(1);
        m[(i, j)] = rat_int(-1);
        m
    }

    #[test]
    fn berger_of_so_n_is_everything() {
        for n in [4usize, 5] {
            let g = so_n(n);
            let rep = berger_algebra(&g, DEFAULT_TOL).unwrap();
            assert_eq!(rep.algebra.dim(), g.dim());
            assert!(rep.is_holonomy_representation);
        }
    }
}
