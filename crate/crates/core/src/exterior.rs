//! Exterior algebra over Euclidean R^n: alternating forms, the wedge product
//! and its metric adjoint, the 2-form / skew-endomorphism dictionary, the
//! commutator action of 2-forms, alternation and trace maps.
//!
//! Conventions. Basis forms `e_I` over increasing index tuples are declared
//! orthonormal, and a p-form's coefficient on `e_I` is its evaluation on
//! `(e_{i1}, ..., e_{ip})`. The sharp isomorphism is fixed by
//! `g(sharp(a) x, y) = a(x, y)`; with these choices `<a,b> = tr(A^T B)/2` on
//! 2-forms and `sharp([a,b]) = [sharp a, sharp b]`.

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::combin::{binomial, lex_rank, merge_sign, remove_sign, subsets};
use crate::{Error, Result};

/// A degree-p alternating form on R^n, coefficients over lexicographically
/// ordered increasing p-tuples.
#[derive(Debug, Clone, PartialEq)]
pub struct KForm {
    n: usize,
    p: usize,
    coeffs: Vec<f64>,
}

impl KForm {
    pub fn zero(n: usize, p: usize) -> Self {
        KForm { n, p, coeffs: vec![0.0; binomial(n, p)] }
    }

    pub fn from_coeffs(n: usize, p: usize, coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.len() != binomial(n, p) {
            return Err(Error::Input(format!(
                "degree-{p} form on R^{n} needs {} coefficients, got {}",
                binomial(n, p),
                coeffs.len()
            )));
        }
        Ok(KForm { n, p, coeffs })
    }

    /// Basis form e_I for a strictly increasing 0-based tuple.
    pub fn basis(n: usize, tuple: &[usize]) -> Self {
        let mut f = KForm::zero(n, tuple.len());
        f.coeffs[lex_rank(n, tuple)] = 1.0;
        f
    }

    /// 1-form dual to a vector.
    pub fn from_vector(v: &DVector<f64>) -> Self {
        KForm { n: v.len(), p: 1, coeffs: v.iter().cloned().collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.p
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn coeffs_mut(&mut self) -> &mut [f64] {
        &mut self.coeffs
    }

    pub fn coeff(&self, tuple: &[usize]) -> f64 {
        self.coeffs[lex_rank(self.n, tuple)]
    }

    pub fn set_coeff(&mut self, tuple: &[usize], value: f64) {
        let r = lex_rank(self.n, tuple);
        self.coeffs[r] = value;
    }

    pub fn norm(&self) -> f64 {
        self.coeffs.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn dot(&self, other: &KForm) -> f64 {
        assert_eq!(self.n, other.n);
        assert_eq!(self.p, other.p);
        self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a * b).sum()
    }

    pub fn scale(&self, c: f64) -> KForm {
        KForm { n: self.n, p: self.p, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn add(&self, other: &KForm) -> KForm {
        assert_eq!((self.n, self.p), (other.n, other.p));
        KForm {
            n: self.n,
            p: self.p,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &KForm) -> KForm {
        self.add(&other.scale(-1.0))
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        self.norm() <= tol
    }

    /// Interior product x -| T by an arbitrary vector.
    pub fn contract_vector(&self, x: &DVector<f64>) -> Result<KForm> {
        if x.len() != self.n {
            return Err(Error::AmbientMismatch(x.len(), self.n));
        }
        if self.p == 0 {
            return Ok(KForm::zero(self.n, 0));
        }
        let mut out = KForm::zero(self.n, self.p - 1);
        let tuples = subsets(self.n, self.p);
        for (r, t) in tuples.iter().enumerate() {
            let c = self.coeffs[r];
            if c == 0.0 {
                continue;
            }
            for (pos, &i) in t.iter().enumerate() {
                let xi = x[i];
                if xi == 0.0 {
                    continue;
                }
                let mut rest = t.clone();
                rest.remove(pos);
                let sign = if pos % 2 == 0 { 1.0 } else { -1.0 };
                out.coeffs[lex_rank(self.n, &rest)] += sign * xi * c;
            }
        }
        Ok(out)
    }

    /// Interior product by the basis vector e_i.
    pub fn contract_basis(&self, i: usize) -> KForm {
        let mut out = KForm::zero(self.n, self.p.saturating_sub(1));
        if self.p == 0 {
            return out;
        }
        for (r, t) in subsets(self.n, self.p).iter().enumerate() {
            let c = self.coeffs[r];
            if c == 0.0 {
                continue;
            }
            if let Some((sign, rest)) = remove_sign(t, i) {
                out.coeffs[lex_rank(self.n, &rest)] += sign as f64 * c;
            }
        }
        out
    }

    /// Exterior product. Degree overflow yields a canonical zero form of
    /// degree n.
    pub fn wedge(&self, other: &KForm) -> Result<KForm> {
        if self.n != other.n {
            return Err(Error::AmbientMismatch(self.n, other.n));
        }
        let n = self.n;
        if self.p + other.p > n {
            return Ok(KForm::zero(n, n));
        }
        let mut out = KForm::zero(n, self.p + other.p);
        let left = subsets(n, self.p);
        let right = subsets(n, other.p);
        for (ra, ta) in left.iter().enumerate() {
            let a = self.coeffs[ra];
            if a == 0.0 {
                continue;
            }
            for (rb, tb) in right.iter().enumerate() {
                let b = other.coeffs[rb];
                if b == 0.0 {
                    continue;
                }
                if let Some((sign, merged)) = merge_sign(ta, tb) {
                    out.coeffs[lex_rank(n, &merged)] += sign as f64 * a * b;
                }
            }
        }
        Ok(out)
    }

    /// The volume form e_{1...n}.
    pub fn volume(n: usize) -> Self {
        let tuple: Vec<usize> = (0..n).collect();
        KForm::basis(n, &tuple)
    }
}

/// Metric adjoint of exterior multiplication: L*_zeta T with
/// `<L*_zeta T, S> = <T, zeta ^ S>`. For degree-1 zeta this is the interior
/// product.
pub fn contract_adjoint(zeta: &KForm, t: &KForm) -> Result<KForm> {
    if zeta.n != t.n {
        return Err(Error::AmbientMismatch(zeta.n, t.n));
    }
    if zeta.p > t.p {
        return Err(Error::Degree(format!(
            "cannot contract degree {} by degree {}",
            t.p, zeta.p
        )));
    }
    let n = t.n;
    let q = zeta.p;
    let mut out = KForm::zero(n, t.p - q);
    let js = subsets(n, q);
    let ss = subsets(n, t.p - q);
    for (rj, tj) in js.iter().enumerate() {
        let z = zeta.coeffs[rj];
        if z == 0.0 {
            continue;
        }
        for (rs, ts) in ss.iter().enumerate() {
            if let Some((sign, merged)) = merge_sign(tj, ts) {
                out.coeffs[rs] += sign as f64 * z * t.coeffs[lex_rank(n, &merged)];
            }
        }
    }
    Ok(out)
}

/// A skew-symmetric endomorphism of R^n; the metric dual of a 2-form.
#[derive(Debug, Clone, PartialEq)]
pub struct SkewMap {
    mat: DMatrix<f64>,
}

impl SkewMap {
    /// Wrap a matrix, skew-symmetrizing to kill rounding asymmetry.
    pub fn new(mat: DMatrix<f64>) -> Result<Self> {
        if mat.nrows() != mat.ncols() {
            return Err(Error::Input("skew map must be square".into()));
        }
        let sym = 0.5 * (&mat + mat.transpose());
        if sym.norm() > 1e-9 * mat.norm().max(1.0) {
            return Err(Error::Input("matrix is not skew-symmetric".into()));
        }
        Ok(SkewMap { mat: 0.5 * (&mat - mat.transpose()) })
    }

    pub fn zero(n: usize) -> Self {
        SkewMap { mat: DMatrix::zeros(n, n) }
    }

    pub fn n(&self) -> usize {
        self.mat.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.mat
    }

    pub fn apply(&self, v: &DVector<f64>) -> DVector<f64> {
        &self.mat * v
    }

    pub fn commutator(&self, other: &SkewMap) -> SkewMap {
        let c = &self.mat * &other.mat - &other.mat * &self.mat;
        SkewMap { mat: 0.5 * (&c - c.transpose()) }
    }
}

/// Skew endomorphism of a 2-form, fixed by `g(sharp(a) x, y) = a(x, y)`.
pub fn sharp(alpha: &KForm) -> Result<SkewMap> {
    if alpha.p != 2 {
        return Err(Error::Degree(format!("sharp needs a 2-form, got degree {}", alpha.p)));
    }
    let n = alpha.n;
    let mut m = DMatrix::zeros(n, n);
    for (r, t) in subsets(n, 2).iter().enumerate() {
        let c = alpha.coeffs[r];
        let (i, j) = (t[0], t[1]);
        // g(F e_i, e_j) = a(e_i, e_j): column i picks up c in row j
        m[(j, i)] += c;
        m[(i, j)] -= c;
    }
    Ok(SkewMap { mat: m })
}

/// 2-form of a skew endomorphism: `flat(F)(e_i, e_j) = g(F e_i, e_j)`.
pub fn flat(f: &SkewMap) -> KForm {
    let n = f.n();
    let mut out = KForm::zero(n, 2);
    for (r, t) in subsets(n, 2).iter().enumerate() {
        out.coeffs[r] = f.mat[(t[1], t[0])];
    }
    out
}

/// Commutator action of a 2-form on a form of any degree:
/// `[a, g] = sum_i (e_i -| a) ^ (e_i -| g)`. On 2-forms this realizes the
/// matrix commutator of the sharp duals.
pub fn form_action(alpha: &KForm, gamma: &KForm) -> Result<KForm> {
    if alpha.p != 2 {
        return Err(Error::Degree(format!(
            "form action needs a 2-form in the first slot, got degree {}",
            alpha.p
        )));
    }
    if alpha.n != gamma.n {
        return Err(Error::AmbientMismatch(alpha.n, gamma.n));
    }
    bullet_unchecked(alpha, gamma)
}

/// `T . phi = sum_i (e_i -| T) ^ (e_i -| phi)` for forms of degree >= 1.
pub fn bullet(t: &KForm, phi: &KForm) -> Result<KForm> {
    if t.n != phi.n {
        return Err(Error::AmbientMismatch(t.n, phi.n));
    }
    if t.p == 0 || phi.p == 0 {
        return Err(Error::Degree("bullet needs both degrees >= 1".into()));
    }
    bullet_unchecked(t, phi)
}

fn bullet_unchecked(t: &KForm, phi: &KForm) -> Result<KForm> {
    let n = t.n;
    let deg = (t.p + phi.p).saturating_sub(2);
    let mut out = KForm::zero(n, deg.min(n));
    if t.p == 0 || phi.p == 0 {
        return Ok(out);
    }
    for i in 0..n {
        let a = t.contract_basis(i);
        if a.norm() == 0.0 {
            continue;
        }
        let b = phi.contract_basis(i);
        out = out.add(&a.wedge(&b)?);
    }
    Ok(out)
}

/// Total alternation of an element of Lambda^1 (x) Lambda^p given as the array
/// of its values on basis vectors: `a(eta) = sum_i e_i ^ eta_i`.
pub fn alternation_rows(eta: &[KForm]) -> Result<KForm> {
    let n = eta.len();
    if n == 0 {
        return Err(Error::Input("empty row array".into()));
    }
    let p = eta[0].p;
    let mut out = KForm::zero(n, (p + 1).min(n));
    for (i, row) in eta.iter().enumerate() {
        if row.n != n || row.p != p {
            return Err(Error::Input("rows must share ambient and degree".into()));
        }
        let ei = KForm::basis(n, &[i]);
        out = out.add(&ei.wedge(row)?);
    }
    Ok(out)
}

/// Total alternation of a symmetric 2-tensor on Lambda^2 into a 4-form: for
/// `S = sum s_k b_k (x) b_k` this is `sum s_k b_k ^ b_k`, computed directly
/// as `sum_{A,B} S_{AB} e_A ^ e_B`.
pub fn alternation_sym2(s: &DMatrix<f64>, n: usize) -> Result<KForm> {
    let m = binomial(n, 2);
    if s.nrows() != m || s.ncols() != m {
        return Err(Error::Input(format!("expected {m}x{m} tensor on 2-forms")));
    }
    let pairs = subsets(n, 2);
    let mut out = KForm::zero(n, 4.min(n));
    if n < 4 {
        return Ok(out);
    }
    for (ra, ta) in pairs.iter().enumerate() {
        for (rb, tb) in pairs.iter().enumerate() {
            let c = s[(ra, rb)];
            if c == 0.0 {
                continue;
            }
            if let Some((sign, merged)) = merge_sign(ta, tb) {
                out.coeffs[lex_rank(n, &merged)] += sign as f64 * c;
            }
        }
    }
    Ok(out)
}

/// Trace map `t(eta) = sum_i e_i -| eta_i` on Lambda^1 (x) Lambda^p arrays.
pub fn trace_map(eta: &[KForm]) -> Result<KForm> {
    let n = eta.len();
    if n == 0 {
        return Err(Error::Input("empty row array".into()));
    }
    let p = eta[0].p;
    if p == 0 {
        return Err(Error::Degree("trace map needs degree >= 1 rows".into()));
    }
    let mut out = KForm::zero(n, p - 1);
    for (i, row) in eta.iter().enumerate() {
        if row.n != n || row.p != p {
            return Err(Error::Input("rows must share ambient and degree".into()));
        }
        out = out.add(&row.contract_basis(i));
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// JSON wire format
// ---------------------------------------------------------------------------

/// Serialized form record: 1-based strictly increasing indices, omitted terms
/// are zero.
#[derive(Debug, Serialize, Deserialize)]
pub struct KFormJson {
    pub n: usize,
    pub p: usize,
    pub terms: Vec<FormTerm>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct FormTerm {
    pub indices: Vec<usize>,
    pub coeff: f64,
}

impl From<&KForm> for KFormJson {
    fn from(f: &KForm) -> Self {
        let mut terms = Vec::new();
        for (r, t) in subsets(f.n, f.p).iter().enumerate() {
            if f.coeffs[r] != 0.0 {
                terms.push(FormTerm {
                    indices: t.iter().map(|&i| i + 1).collect(),
                    coeff: f.coeffs[r],
                });
            }
        }
        KFormJson { n: f.n, p: f.p, terms }
    }
}

impl TryFrom<&KFormJson> for KForm {
    type Error = Error;

    fn try_from(j: &KFormJson) -> Result<KForm> {
        let mut f = KForm::zero(j.n, j.p);
        for (k, term) in j.terms.iter().enumerate() {
            if term.indices.len() != j.p {
                return Err(Error::Input(format!(
                    "term {k}: expected {} indices, got {}",
                    j.p,
                    term.indices.len()
                )));
            }
            let mut prev = 0usize;
            for &i in &term.indices {
                if i == 0 || i > j.n || i <= prev {
                    return Err(Error::Input(format!(
                        "term {k}: indices must be strictly increasing in 1..={}",
                        j.n
                    )));
                }
                prev = i;
            }
            if !term.coeff.is_finite() {
                return Err(Error::Input(format!("term {k}: non-finite coefficient")));
            }
            let tuple: Vec<usize> = term.indices.iter().map(|&i| i - 1).collect();
            let r = lex_rank(j.n, &tuple);
            f.coeffs[r] += term.coeff;
        }
        Ok(f)
    }
}

impl KForm {
    pub fn to_json(&self) -> KFormJson {
        KFormJson::from(self)
    }

    pub fn from_json(j: &KFormJson) -> Result<KForm> {
        KForm::try_from(j)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn e(n: usize, t: &[usize]) -> KForm {
        KForm::basis(n, t)
    }

    #[test]
    fn wedge_basics() {
        let n = 4;
        let w = e(n, &[0]).wedge(&e(n, &[1])).unwrap();
        assert_eq!(w, e(n, &[0, 1]));
        // repeated index kills the product
        let z = e(n, &[0, 1]).wedge(&e(n, &[0, 2])).unwrap();
        assert_eq!(z.norm(), 0.0);
        // (e12 + e34) ^ (e12 + e34) = 2 e1234
        let s = e(n, &[0, 1]).add(&e(n, &[2, 3]));
        let sq = s.wedge(&s).unwrap();
        assert_relative_eq!(sq.coeff(&[0, 1, 2, 3]), 2.0);
        assert_relative_eq!(sq.norm(), 2.0);
    }

    #[test]
    fn wedge_graded_anticommutative() {
        // direct expansion oracle over random forms of degrees (1,2) and (2,3)
        let n = 5;
        let mut rng = 1u64;
        let mut rnd = || {
            rng = rng.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((rng >> 33) as f64 / u32::MAX as f64) - 0.5
        };
        for (p, q) in [(1usize, 2usize), (2, 3), (2, 2)] {
            let a = KForm::from_coeffs(n, p, (0..binomial(n, p)).map(|_| rnd()).collect()).unwrap();
            let b = KForm::from_coeffs(n, q, (0..binomial(n, q)).map(|_| rnd()).collect()).unwrap();
            let ab = a.wedge(&b).unwrap();
            let ba = b.wedge(&a).unwrap();
            let sign = if (p * q) % 2 == 0 { 1.0 } else { -1.0 };
            assert!(ab.sub(&ba.scale(sign)).norm() < 1e-12);
        }
    }

    #[test]
    fn wedge_overflow_is_zero() {
        let n = 3;
        let a = e(n, &[0, 1]);
        let w = a.wedge(&a).unwrap();
        assert_eq!(w.degree(), 3);
        assert_eq!(w.norm(), 0.0);
    }

    #[test]
    fn interior_product() {
        let n = 3;
        let t = e(n, &[0, 1, 2]);
        let c = t.contract_basis(0);
        assert_eq!(c, e(n, &[1, 2]));
        let c2 = t.contract_basis(1);
        assert_eq!(c2, e(n, &[0, 2]).scale(-1.0));
    }

    #[test]
    fn adjoint_contraction_examples() {
        let n = 4;
        let t = e(n, &[0, 1, 2, 3]);
        let z = e(n, &[0, 1]);
        assert_eq!(contract_adjoint(&z, &t).unwrap(), e(n, &[2, 3]));
        // q > p errors
        assert!(contract_adjoint(&t, &z).is_err());
    }

    #[test]
    fn adjointness_random() {
        // <L*_z T, S> = <T, z ^ S> for 200 random triples
        let n = 6;
        let mut rng = 7u64;
        let mut rnd = || {
            rng = rng.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((rng >> 33) as f64 / u32::MAX as f64) - 0.5
        };
        for _ in 0..200 {
            let z = KForm::from_coeffs(n, 2, (0..binomial(n, 2)).map(|_| rnd()).collect()).unwrap();
            let t = KForm::from_coeffs(n, 4, (0..binomial(n, 4)).map(|_| rnd()).collect()).unwrap();
            let s = KForm::from_coeffs(n, 2, (0..binomial(n, 2)).map(|_| rnd()).collect()).unwrap();
            let lhs = contract_adjoint(&z, &t).unwrap().dot(&s);
            let rhs = t.dot(&z.wedge(&s).unwrap());
            assert!((lhs - rhs).abs() < 1e-12);
        }
    }

    #[test]
    fn sharp_flat_roundtrip() {
        let n = 4;
        let a = e(n, &[0, 1]);
        let f = sharp(&a).unwrap();
        // g(F e1, e2) = a(e1, e2) = 1
        assert_relative_eq!(f.matrix()[(1, 0)], 1.0);
        assert_relative_eq!(f.matrix()[(0, 1)], -1.0);
        assert_eq!(flat(&f), a);
        // norm convention: |e12| = 1 and tr(F^T F)/2 = 1
        let tr = (f.matrix().transpose() * f.matrix()).trace();
        assert_relative_eq!(0.5 * tr, 1.0);
        assert_eq!(flat(&SkewMap::zero(n)).norm(), 0.0);
    }

    #[test]
    fn action_is_matrix_commutator() {
        let n = 3;
        let a = e(n, &[0, 1]);
        let b = e(n, &[0, 2]);
        let ab = form_action(&a, &b).unwrap();
        let fa = sharp(&a).unwrap();
        let fb = sharp(&b).unwrap();
        let comm = flat(&fa.commutator(&fb));
        assert!(ab.sub(&comm).norm() < 1e-14);
        assert_eq!(form_action(&a, &a).unwrap().norm(), 0.0);
    }

    #[test]
    fn volume_is_invariant() {
        let n = 5;
        let vol = KForm::volume(n);
        for t in subsets(n, 2) {
            let a = e(n, &t);
            assert!(form_action(&a, &vol).unwrap().norm() < 1e-14);
        }
    }

    #[test]
    fn alternation_examples() {
        // a(e1 (x) e23 + e2 (x) e31 + e3 (x) e12) = 3 e123
        let n = 3;
        let rows = vec![e(n, &[1, 2]), e(n, &[0, 2]).scale(-1.0), e(n, &[0, 1])];
        let a = alternation_rows(&rows).unwrap();
        assert!(a.sub(&e(n, &[0, 1, 2]).scale(3.0)).norm() < 1e-14);
    }

    #[test]
    fn alternation_sym2_rank_one() {
        let n = 5;
        let mut rng = 3u64;
        let mut rnd = || {
            rng = rng.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((rng >> 33) as f64 / u32::MAX as f64) - 0.5
        };
        let alpha = KForm::from_coeffs(n, 2, (0..binomial(n, 2)).map(|_| rnd()).collect()).unwrap();
        let m = binomial(n, 2);
        let v = DVector::from_vec(alpha.coeffs().to_vec());
        let s = DMatrix::from_fn(m, m, |i, j| v[i] * v[j]);
        let a = alternation_sym2(&s, n).unwrap();
        let direct = alpha.wedge(&alpha).unwrap();
        assert!(a.sub(&direct).norm() < 1e-12);
    }

    #[test]
    fn alternation_sym2_degree_overflow() {
        // identity of so(3) on R^3: no 4-forms in dimension 3
        let s = DMatrix::<f64>::identity(3, 3);
        let a = alternation_sym2(&s, 3).unwrap();
        assert_eq!(a.norm(), 0.0);
    }

    #[test]
    fn trace_map_examples() {
        let n = 5;
        // eta_X = X ^ e1: t(eta) = (n-1) e1
        let theta = e(n, &[0]);
        let rows: Vec<KForm> =
            (0..n).map(|i| KForm::basis(n, &[i]).wedge(&theta).unwrap()).collect();
        let t = trace_map(&rows).unwrap();
        assert!(t.sub(&theta.scale((n - 1) as f64)).norm() < 1e-14);
        // eta from a 3-form: t = 0 by antisymmetry
        let mut rng = 11u64;
        let mut rnd = || {
            rng = rng.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((rng >> 33) as f64 / u32::MAX as f64) - 0.5
        };
        let t3 = KForm::from_coeffs(n, 3, (0..binomial(n, 3)).map(|_| rnd()).collect()).unwrap();
        let rows: Vec<KForm> = (0..n).map(|i| t3.contract_basis(i)).collect();
        assert!(trace_map(&rows).unwrap().norm() < 1e-13);
        // zero in, zero out
        let zero_rows: Vec<KForm> = (0..n).map(|_| KForm::zero(n, 2)).collect();
        assert_eq!(trace_map(&zero_rows).unwrap().norm(), 0.0);
    }

    #[test]
    fn bullet_examples() {
        let n = 6;
        // simple form: e123 . e123 = 0
        let t = e(n, &[0, 1, 2]);
        assert!(bullet(&t, &t).unwrap().norm() < 1e-14);
        // blockwise Cartan form of su(2)+su(2): (e123 + e456) . itself = 0
        let tt = e(n, &[0, 1, 2]).add(&e(n, &[3, 4, 5]));
        assert!(bullet(&tt, &tt).unwrap().norm() < 1e-14);
        // symmetry in odd degree
        let mut rng = 13u64;
        let mut rnd = || {
            rng = rng.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((rng >> 33) as f64 / u32::MAX as f64) - 0.5
        };
        let a = KForm::from_coeffs(n, 3, (0..binomial(n, 3)).map(|_| rnd()).collect()).unwrap();
        let b = KForm::from_coeffs(n, 3, (0..binomial(n, 3)).map(|_| rnd()).collect()).unwrap();
        let ab = bullet(&a, &b).unwrap();
        let ba = bullet(&b, &a).unwrap();
        assert!(ab.sub(&ba).norm() < 1e-12);
    }

    #[test]
    fn json_roundtrip() {
        let n = 5;
        let f = e(n, &[0, 2, 4]).scale(2.5).add(&e(n, &[1, 2, 3]).scale(-1.0));
        let j = f.to_json();
        assert_eq!(j.terms.len(), 2);
        assert_eq!(j.terms[0].indices, vec![1, 3, 5]);
        let back = KForm::from_json(&j).unwrap();
        assert!(f.sub(&back).norm() == 0.0);
    }

    #[test]
    fn json_rejects_bad_indices() {
        let j = KFormJson {
            n: 4,
            p: 2,
            terms: vec![FormTerm { indices: vec![2, 2], coeff: 1.0 }],
        };
        assert!(KForm::from_json(&j).is_err());
        let j2 = KFormJson {
            n: 4,
            p: 2,
            terms: vec![FormTerm { indices: vec![0, 1], coeff: 1.0 }],
        };
        assert!(KForm::from_json(&j2).is_err());
    }
}
