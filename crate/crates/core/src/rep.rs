//! Lie subalgebras of so(V): bracket closures, isotypic splittings with an
//! irreducibility certificate, Casimir operators, isotropy algebras,
//! projections and kernel ideals of reducible actions.

use nalgebra::{DMatrix, DVector};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::combin::{binomial, subsets};
use crate::exterior::{flat, form_action, sharp, KForm, KFormJson, SkewMap};
use crate::linalg::{orthonormalize_rows, rank_nullspace, Subspace};
use crate::{Error, Result, DEFAULT_TOL};

/// A Lie subalgebra of so(n) presented by an orthonormal basis of 2-forms
/// (orthonormal in the form inner product).
#[derive(Debug, Clone)]
pub struct LieSubalgebra {
    n: usize,
    basis: Vec<KForm>,
    closed_verified: bool,
    closure_residual: f64,
}

impl LieSubalgebra {
    /// Orthonormalize a spanning set and verify bracket closure.
    pub fn from_forms(n: usize, forms: &[KForm], tol: f64) -> Result<Self> {
        for f in forms {
            if f.n() != n {
                return Err(Error::AmbientMismatch(f.n(), n));
            }
            if f.degree() != 2 {
                return Err(Error::Degree("subalgebra basis must be 2-forms".into()));
            }
        }
        let rows: Vec<DVector<f64>> =
            forms.iter().map(|f| DVector::from_vec(f.coeffs().to_vec())).collect();
        let onb = orthonormalize_rows(binomial(n, 2), &rows, tol);
        let basis: Vec<KForm> = (0..onb.nrows())
            .map(|i| KForm::from_coeffs(n, 2, onb.row(i).iter().cloned().collect()).unwrap())
            .collect();
        let mut alg = LieSubalgebra { n, basis, closed_verified: false, closure_residual: f64::NAN };
        let res = alg.verify_closed()?;
        alg.closed_verified = res <= tol.max(1e-12) * 10.0;
        alg.closure_residual = res;
        Ok(alg)
    }

    pub fn zero(n: usize) -> Self {
        LieSubalgebra { n, basis: Vec::new(), closed_verified: true, closure_residual: 0.0 }
    }

    /// Largest residual of projecting pairwise brackets back into the span.
    pub fn verify_closed(&self) -> Result<f64> {
        let mut worst = 0.0f64;
        for i in 0..self.basis.len() {
            for j in i + 1..self.basis.len() {
                let br = form_action(&self.basis[i], &self.basis[j])?;
                let (_, perp) = self.project_form(&br);
                worst = worst.max(perp.norm());
            }
        }
        Ok(worst)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[KForm] {
        &self.basis
    }

    pub fn closed_verified(&self) -> bool {
        self.closed_verified
    }

    pub fn closure_residual(&self) -> f64 {
        self.closure_residual
    }

    /// The basis as skew endomorphisms.
    pub fn sharp_basis(&self) -> Vec<SkewMap> {
        self.basis.iter().map(|b| sharp(b).expect("basis is 2-forms")).collect()
    }

    /// Orthogonal projection of a 2-form onto the subalgebra and its
    /// complement: F = F_g + F_perp.
    pub fn project_form(&self, f: &KForm) -> (KForm, KForm) {
        let mut fg = KForm::zero(self.n, 2);
        for b in &self.basis {
            fg = fg.add(&b.scale(b.dot(f)));
        }
        let perp = f.sub(&fg);
        (fg, perp)
    }

    /// Whether a 2-form lies in the subalgebra within tol.
    pub fn contains_form(&self, f: &KForm, tol: f64) -> bool {
        let (_, perp) = self.project_form(f);
        perp.norm() <= tol * f.norm().max(1.0)
    }

    /// Span as a subspace of the 2-form coefficient space.
    pub fn as_subspace(&self, tol: f64) -> Subspace {
        let rows: Vec<DVector<f64>> =
            self.basis.iter().map(|f| DVector::from_vec(f.coeffs().to_vec())).collect();
        Subspace::span(binomial(self.n, 2), &rows, tol)
    }

    pub fn to_json(&self) -> LieSubalgebraJson {
        LieSubalgebraJson {
            n: self.n,
            basis: self.basis.iter().map(KFormJson::from).collect(),
        }
    }

    pub fn from_json(j: &LieSubalgebraJson, tol: f64) -> Result<Self> {
        let forms: Vec<KForm> =
            j.basis.iter().map(KForm::try_from).collect::<Result<_>>()?;
        LieSubalgebra::from_forms(j.n, &forms, tol)
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct LieSubalgebraJson {
    pub n: usize,
    pub basis: Vec<KFormJson>,
}

/// Smallest bracket-closed subspace containing the generators. Iteration is
/// capped at dim Lambda^2 rounds; the rank is monotone so the cap is never
/// binding.
pub fn lie_closure(gens: &[KForm], tol: f64) -> Result<LieSubalgebra> {
    if gens.is_empty() {
        return Err(Error::Input("lie_closure needs at least one generator".into()));
    }
    let n = gens[0].n();
    let m2 = binomial(n, 2);
    let mut rows: Vec<DVector<f64>> = Vec::new();
    for g in gens {
        if g.n() != n {
            return Err(Error::AmbientMismatch(g.n(), n));
        }
        if g.degree() != 2 {
            return Err(Error::Degree("generators must be 2-forms".into()));
        }
        rows.push(DVector::from_vec(g.coeffs().to_vec()));
    }
    let mut basis_mat = orthonormalize_rows(m2, &rows, tol);
    for _round in 0..=m2 {
        let dim = basis_mat.nrows();
        let forms: Vec<KForm> = (0..dim)
            .map(|i| KForm::from_coeffs(n, 2, basis_mat.row(i).iter().cloned().collect()).unwrap())
            .collect();
        let mut all: Vec<DVector<f64>> =
            (0..dim).map(|i| basis_mat.row(i).transpose()).collect();
        for i in 0..dim {
            for j in i + 1..dim {
                let br = form_action(&forms[i], &forms[j])?;
                all.push(DVector::from_vec(br.coeffs().to_vec()));
            }
        }
        let next = orthonormalize_rows(m2, &all, tol);
        if next.nrows() == dim {
            break;
        }
        debug_assert!(next.nrows() > dim);
        basis_mat = next;
    }
    let forms: Vec<KForm> = (0..basis_mat.nrows())
        .map(|i| KForm::from_coeffs(n, 2, basis_mat.row(i).iter().cloned().collect()).unwrap())
        .collect();
    LieSubalgebra::from_forms(n, &forms, tol)
}

/// Isotypic decomposition V = V0 + sum V_k into the trivial part and
/// pairwise orthogonal invariant factors, each certified irreducible.
#[derive(Debug, Clone)]
pub struct IsotypicSplitting {
    pub trivial: Subspace,
    pub factors: Vec<Subspace>,
    pub irreducible: Vec<bool>,
}

impl IsotypicSplitting {
    pub fn to_json(&self) -> SplittingJson {
        SplittingJson {
            trivial: subspace_rows(&self.trivial),
            factors: self.factors.iter().map(subspace_rows).collect(),
        }
    }
}

fn subspace_rows(s: &Subspace) -> Vec<Vec<f64>> {
    s.basis_vectors().iter().map(|v| v.iter().cloned().collect()).collect()
}

#[derive(Debug, Serialize, Deserialize)]
pub struct SplittingJson {
    pub trivial: Vec<Vec<f64>>,
    pub factors: Vec<Vec<Vec<f64>>>,
}

/// Restriction of the action matrices to an invariant subspace, in the
/// subspace's own orthonormal coordinates.
fn restrict_action(maps: &[SkewMap], w: &Subspace) -> Vec<DMatrix<f64>> {
    let p = w.basis(); // rows are the basis
    maps.iter().map(|m| p * m.matrix() * p.transpose()).collect()
}

/// Basis of the symmetric commutant of a family of matrices, as symmetric
/// w x w matrices. Solves the linear system [A, X_k] = 0 over the symmetric
/// slice.
fn symmetric_commutant(maps: &[DMatrix<f64>], w: usize, tol: f64) -> Vec<DMatrix<f64>> {
    let sym_pairs: Vec<(usize, usize)> =
        (0..w).flat_map(|i| (i..w).map(move |j| (i, j))).collect();
    let cols = sym_pairs.len();
    let rows = maps.len() * w * w;
    let mut big = DMatrix::zeros(rows, cols);
    for (c, &(i, j)) in sym_pairs.iter().enumerate() {
        // basis symmetric matrix E_ij + E_ji (E_ii once)
        let mut e = DMatrix::zeros(w, w);
        e[(i, j)] = 1.0;
        e[(j, i)] = 1.0;
        for (mi, m) in maps.iter().enumerate() {
            let comm = m * &e - &e * m;
            for a in 0..w {
                for b in 0..w {
                    big[(mi * w * w + a * w + b, c)] = comm[(a, b)];
                }
            }
        }
    }
    let (_, kernel) = rank_nullspace(&big, tol).expect("finite entries");
    (0..kernel.dim())
        .map(|r| {
            let v = kernel.basis().row(r);
            let mut s = DMatrix::zeros(w, w);
            for (c, &(i, j)) in sym_pairs.iter().enumerate() {
                s[(i, j)] = v[c];
                s[(j, i)] = v[c];
            }
            s
        })
        .collect()
}

/// Decompose V under the subalgebra: trivial part, then recursive
/// eigen-splitting of seeded random symmetric commutant elements until every
/// factor's symmetric commutant is scalar.
pub fn irreducible_split(g: &LieSubalgebra, seed: u64, tol: f64) -> Result<IsotypicSplitting> {
    if !g.closed_verified() {
        return Err(Error::Input("subalgebra is not verified closed".into()));
    }
    let n = g.n();
    let maps = g.sharp_basis();
    // trivial part: common kernel of the action
    let mut stacked = DMatrix::zeros(maps.len().max(1) * n, n);
    for (i, m) in maps.iter().enumerate() {
        stacked.view_mut((i * n, 0), (n, n)).copy_from(m.matrix());
    }
    let (_, trivial) = rank_nullspace(&stacked, tol)?;
    let active = trivial.complement()?;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut factors: Vec<Subspace> = Vec::new();
    let mut queue: Vec<Subspace> = if active.dim() > 0 { vec![active] } else { Vec::new() };
    while let Some(w) = queue.pop() {
        let wd = w.dim();
        let restricted = restrict_action(&maps, &w);
        let commutant = symmetric_commutant(&restricted, wd, tol);
        if commutant.len() <= 1 {
            // scalar symmetric commutant: irreducible factor
            factors.push(w);
            continue;
        }
        // random symmetric commutant element, eigen-split
        let mut s = DMatrix::zeros(wd, wd);
        for c in &commutant {
            let coef: f64 = rng.gen_range(-1.0..1.0);
            s += c * coef;
        }
        let clusters = cluster_eigenvectors(&s, true)?;
        if clusters.len() == 1 {
            // the random element was scalar on w; the commutant is bigger,
            // so some basis element must split deterministically
            let mut split_done = false;
            for c in &commutant {
                let mean = c.trace() / wd as f64;
                let dev = c - DMatrix::identity(wd, wd) * mean;
                if dev.norm() > tol * c.norm().max(1.0) {
                    let subs = cluster_eigenvectors(&dev, false)?;
                    if subs.len() > 1 {
                        for rows in subs {
                            queue.push(lift_rows(&rows, &w, n, tol));
                        }
                        split_done = true;
                        break;
                    }
                }
            }
            if !split_done {
                return Err(Error::AmbiguousCluster(
                    "commutant is non-scalar but no splitting element found".into(),
                ));
            }
            continue;
        }
        for rows in clusters {
            queue.push(lift_rows(&rows, &w, n, tol));
        }
    }
    // deterministic ordering: by dimension, then leading coordinate pattern
    factors.sort_by(|a, b| {
        a.dim().cmp(&b.dim()).then_with(|| {
            let fa = leading_signature(a);
            let fb = leading_signature(b);
            fa.partial_cmp(&fb).unwrap_or(std::cmp::Ordering::Equal)
        })
    });
    let irreducible = vec![true; factors.len()];
    Ok(IsotypicSplitting { trivial, factors, irreducible })
}

fn leading_signature(s: &Subspace) -> f64 {
    // first coordinate with significant projection weight
    let p = s.basis();
    for j in 0..s.ambient_dim() {
        let col_norm: f64 = (0..p.nrows()).map(|i| p[(i, j)] * p[(i, j)]).sum();
        if col_norm > 1e-6 {
            return j as f64 + (1.0 - col_norm.min(1.0)) * 0.5;
        }
    }
    s.ambient_dim() as f64
}

/// Eigen-split a symmetric matrix into eigenvalue clusters; each cluster's
/// eigenvector columns are returned as rows. With `strict` set, gaps falling
/// between the merge and split thresholds are reported as ambiguous.
fn cluster_eigenvectors(s: &DMatrix<f64>, strict: bool) -> Result<Vec<Vec<DVector<f64>>>> {
    let wd = s.nrows();
    let (eigenvalues, eigenvectors) = crate::linalg::jacobi_eigen(s);
    let mut order: Vec<usize> = (0..wd).collect();
    order.sort_by(|&a, &b| eigenvalues[a].partial_cmp(&eigenvalues[b]).unwrap());
    let spread = (eigenvalues[order[wd - 1]] - eigenvalues[order[0]]).abs().max(1.0);
    let cluster_gap = 1e-6 * spread;
    let ambiguous_gap = 1e-9 * spread;
    let mut clusters: Vec<Vec<usize>> = vec![vec![order[0]]];
    for k in 1..wd {
        let gap = eigenvalues[order[k]] - eigenvalues[order[k - 1]];
        if gap > cluster_gap {
            clusters.push(vec![order[k]]);
        } else {
            if strict && gap > ambiguous_gap {
                return Err(Error::AmbiguousCluster(format!(
                    "eigenvalue gap {gap:.3e} lies between the merge threshold {ambiguous_gap:.3e} and the split threshold {cluster_gap:.3e}"
                )));
            }
            clusters.last_mut().unwrap().push(order[k]);
        }
    }
    Ok(clusters
        .into_iter()
        .map(|cl| cl.iter().map(|&k| eigenvectors.column(k).clone_owned()).collect())
        .collect())
}

fn lift_rows(rows: &[DVector<f64>], w: &Subspace, n: usize, tol: f64) -> Subspace {
    let ambient_rows: Vec<DVector<f64>> =
        rows.iter().map(|col| w.basis().transpose() * col).collect();
    Subspace::span(n, &ambient_rows, tol)
}

/// Casimir operator on Lambda^k: `C(phi) = -sum_a [x_a, [x_a, phi]]` over the
/// orthonormal basis of the subalgebra. Positive semidefinite and commuting
/// with the action.
pub fn casimir(g: &LieSubalgebra, k: usize) -> Result<DMatrix<f64>> {
    if !g.closed_verified() {
        return Err(Error::Input("subalgebra is not verified closed".into()));
    }
    let n = g.n();
    if k > n {
        return Err(Error::Degree(format!("Casimir degree {k} exceeds ambient {n}")));
    }
    let mk = binomial(n, k);
    let mut c = DMatrix::zeros(mk, mk);
    if k == 0 {
        return Ok(c);
    }
    let tuples = subsets(n, k);
    for x in g.basis() {
        // action matrix D on Lambda^k, then C -= D^2
        let mut d = DMatrix::zeros(mk, mk);
        for (col, t) in tuples.iter().enumerate() {
            let image = form_action(x, &KForm::basis(n, t))?;
            for (row, v) in image.coeffs().iter().enumerate() {
                d[(row, col)] = *v;
            }
        }
        c -= &d * &d;
    }
    Ok(0.5 * (&c + c.transpose()))
}

/// Isotropy algebra of a form: the kernel of `alpha -> [alpha, phi]` on
/// 2-forms. The kernel of an action is closed automatically; closure is
/// still verified on construction.
pub fn isotropy_algebra(phi: &KForm, tol: f64) -> Result<LieSubalgebra> {
    if phi.norm() == 0.0 {
        return Err(Error::Input("isotropy of the zero form".into()));
    }
    let n = phi.n();
    let m2 = binomial(n, 2);
    let pairs = subsets(n, 2);
    let out_dim = binomial(n, phi.degree());
    let mut mat = DMatrix::zeros(out_dim, m2);
    for (col, t) in pairs.iter().enumerate() {
        let img = form_action(&KForm::basis(n, t), phi)?;
        for (row, v) in img.coeffs().iter().enumerate() {
            mat[(row, col)] = *v;
        }
    }
    let (_, kernel) = rank_nullspace(&mat, tol)?;
    let forms: Vec<KForm> = (0..kernel.dim())
        .map(|i| {
            KForm::from_coeffs(n, 2, kernel.basis().row(i).iter().cloned().collect()).unwrap()
        })
        .collect();
    if forms.is_empty() {
        return Ok(LieSubalgebra::zero(n));
    }
    LieSubalgebra::from_forms(n, &forms, tol)
}

/// The ideal of elements acting trivially outside `w`: `{x in g : x u = 0
/// for all u orthogonal to w}`. `w` must be invariant.
pub fn kernel_ideal(g: &LieSubalgebra, w: &Subspace) -> Result<LieSubalgebra> {
    let n = g.n();
    if w.ambient_dim() != n {
        return Err(Error::AmbientMismatch(w.ambient_dim(), n));
    }
    let tol = w.tol().max(DEFAULT_TOL);
    let maps = g.sharp_basis();
    // invariance check
    for m in &maps {
        for v in w.basis_vectors() {
            let img = m.apply(&v);
            let out = &img - w.project_vector(&img)?;
            if out.norm() > tol * img.norm().max(1.0) {
                return Err(Error::Input("subspace is not invariant".into()));
            }
        }
    }
    let comp = w.complement()?;
    if comp.dim() == 0 {
        return Ok(g.clone());
    }
    // x = sum c_a x_a with x(u_j) = 0 for complement basis u_j
    let rows = comp.dim() * n;
    let mut mat = DMatrix::zeros(rows, g.dim());
    for (a, m) in maps.iter().enumerate() {
        for (j, u) in comp.basis_vectors().iter().enumerate() {
            let img = m.apply(u);
            for (i, v) in img.iter().enumerate() {
                mat[(j * n + i, a)] = *v;
            }
        }
    }
    let (_, kernel) = rank_nullspace(&mat, tol)?;
    let forms: Vec<KForm> = (0..kernel.dim())
        .map(|r| {
            let mut f = KForm::zero(n, 2);
            for (a, b) in g.basis().iter().enumerate() {
                f = f.add(&b.scale(kernel.basis()[(r, a)]));
            }
            f
        })
        .collect();
    if forms.is_empty() {
        return Ok(LieSubalgebra::zero(n));
    }
    LieSubalgebra::from_forms(n, &forms, tol)
}

/// Restriction of a subalgebra to an invariant factor, expressed in the
/// factor's own orthonormal coordinates.
pub fn restrict_to_factor(g: &LieSubalgebra, w: &Subspace, tol: f64) -> Result<LieSubalgebra> {
    let maps = restrict_action(&g.sharp_basis(), w);
    let wd = w.dim();
    let forms: Vec<KForm> = maps
        .iter()
        .map(|m| flat(&SkewMap::new(m.clone()).unwrap_or_else(|_| SkewMap::zero(wd))))
        .collect();
    let nonzero: Vec<KForm> = forms.into_iter().filter(|f| f.norm() > tol).collect();
    if nonzero.is_empty() {
        return Ok(LieSubalgebra::zero(wd));
    }
    LieSubalgebra::from_forms(wd, &nonzero, tol)
}

/// Block-diagonal direct sum of two representations.
pub fn direct_sum(a: &LieSubalgebra, b: &LieSubalgebra, tol: f64) -> Result<LieSubalgebra> {
    let n = a.n() + b.n();
    let mut forms = Vec::new();
    for f in a.basis() {
        forms.push(embed_form(f, n, 0));
    }
    for f in b.basis() {
        forms.push(embed_form(f, n, a.n()));
    }
    LieSubalgebra::from_forms(n, &forms, tol)
}

/// Diagonal embedding of a representation into two copies of its space.
pub fn diagonal_embedding(g: &LieSubalgebra, tol: f64) -> Result<LieSubalgebra> {
    let n = 2 * g.n();
    let forms: Vec<KForm> = g
        .basis()
        .iter()
        .map(|f| embed_form(f, n, 0).add(&embed_form(f, n, g.n())))
        .collect();
    LieSubalgebra::from_forms(n, &forms, tol)
}

/// Copy a 2-form into a larger ambient space with an index offset.
pub fn embed_form(f: &KForm, n: usize, offset: usize) -> KForm {
    let mut out = KForm::zero(n, f.degree());
    for (r, t) in subsets(f.n(), f.degree()).iter().enumerate() {
        let c = f.coeffs()[r];
        if c != 0.0 {
            let shifted: Vec<usize> = t.iter().map(|&i| i + offset).collect();
            out.set_coeff(&shifted, c);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn so_n(n: usize) -> LieSubalgebra {
        let forms: Vec<KForm> = subsets(n, 2).iter().map(|t| KForm::basis(n, t)).collect();
        LieSubalgebra::from_forms(n, &forms, DEFAULT_TOL).unwrap()
    }

    #[test]
    fn closure_of_single_form_is_abelian_line() {
        let g = lie_closure(&[KForm::basis(4, &[0, 1])], DEFAULT_TOL).unwrap();
        assert_eq!(g.dim(), 1);
        assert!(g.closed_verified());
    }

    #[test]
    fn closure_generates_so3() {
        // exact elimination oracle: one bracket round already spans so(3)
        let gens = [KForm::basis(3, &[0, 1]), KForm::basis(3, &[0, 2])];
        let g = lie_closure(&gens, DEFAULT_TOL).unwrap();
        assert_eq!(g.dim(), 3);
    }

    #[test]
    fn closure_idempotent_and_contains_generators() {
        let gens = [KForm::basis(5, &[0, 1]), KForm::basis(5, &[2, 3])];
        let g = lie_closure(&gens, DEFAULT_TOL).unwrap();
        let again = lie_closure(g.basis(), DEFAULT_TOL).unwrap();
        assert_eq!(g.dim(), again.dim());
        for f in &gens {
            assert!(g.contains_form(f, 1e-9));
        }
    }

    #[test]
    fn split_so3_on_r3_is_irreducible() {
        let g = so_n(3);
        let s = irreducible_split(&g, 0, DEFAULT_TOL).unwrap();
        assert_eq!(s.trivial.dim(), 0);
        assert_eq!(s.factors.len(), 1);
        assert_eq!(s.factors[0].dim(), 3);
        assert!(s.irreducible[0]);
    }

    #[test]
    fn split_block_so3_so3_with_trivial_plane() {
        // so(3) + so(3) block-acting on R^3 + R^3 + R^2
        let a = so_n(3);
        let b = so_n(3);
        let block = direct_sum(&a, &b, DEFAULT_TOL).unwrap();
        // embed into R^8 leaving the last two coordinates fixed
        let forms: Vec<KForm> = block.basis().iter().map(|f| embed_form(f, 8, 0)).collect();
        let g = LieSubalgebra::from_forms(8, &forms, DEFAULT_TOL).unwrap();
        let s = irreducible_split(&g, 0, DEFAULT_TOL).unwrap();
        assert_eq!(s.trivial.dim(), 2);
        assert_eq!(s.factors.len(), 2);
        assert_eq!(s.factors[0].dim(), 3);
        assert_eq!(s.factors[1].dim(), 3);
    }

    #[test]
    fn casimir_c1_of_so5() {
        let g = so_n(5);
        let c1 = casimir(&g, 1).unwrap();
        // mu = 2 dim g / n = 2*10/5 = 4
        let expect = DMatrix::identity(5, 5) * 4.0;
        assert!((c1 - expect).norm() < 1e-9);
    }

    #[test]
    fn casimir_c2_of_so_n_is_two_n_minus_two() {
        for n in [5usize, 6] {
            let g = so_n(n);
            let c2 = casimir(&g, 2).unwrap();
            let expect = DMatrix::identity(binomial(n, 2), binomial(n, 2)) * (2.0 * (n as f64 - 2.0));
            assert!((c2 - expect).norm() < 1e-9);
        }
    }

    #[test]
    fn casimir_commutes_with_action() {
        let g = so_n(4);
        let c2 = casimir(&g, 2).unwrap();
        for x in g.basis() {
            let mut d = DMatrix::zeros(6, 6);
            for (col, t) in subsets(4, 2).iter().enumerate() {
                let img = form_action(x, &KForm::basis(4, t)).unwrap();
                for (row, v) in img.coeffs().iter().enumerate() {
                    d[(row, col)] = *v;
                }
            }
            assert!((&c2 * &d - &d * &c2).norm() < 1e-9);
        }
    }

    #[test]
    fn isotropy_of_volume_is_so_n() {
        let n = 4;
        let g = isotropy_algebra(&KForm::volume(n), DEFAULT_TOL).unwrap();
        assert_eq!(g.dim(), 6);
    }

    #[test]
    fn isotropy_of_zero_fails() {
        assert!(isotropy_algebra(&KForm::zero(4, 2), DEFAULT_TOL).is_err());
    }

    #[test]
    fn kernel_ideal_examples() {
        let a = so_n(3);
        let block = direct_sum(&a, &a, DEFAULT_TOL).unwrap();
        let e = |i: usize| {
            let mut v = DVector::zeros(6);
            v[i] = 1.0;
            v
        };
        let first = Subspace::span(6, &[e(0), e(1), e(2)], DEFAULT_TOL);
        // elements killing the complement of the first block: the first so(3)
        let ideal = kernel_ideal(&block, &first).unwrap();
        assert_eq!(ideal.dim(), 3);
        for f in ideal.basis() {
            // supported on the first block only
            for t in subsets(6, 2) {
                if t[1] >= 3 {
                    assert!(f.coeff(&t).abs() < 1e-10);
                }
            }
        }
        // whole space: returns everything
        let full = Subspace::full(6, DEFAULT_TOL);
        assert_eq!(kernel_ideal(&block, &full).unwrap().dim(), 6);
        // diagonal action: no element kills either factor
        let diag = diagonal_embedding(&a, DEFAULT_TOL).unwrap();
        assert_eq!(kernel_ideal(&diag, &first).unwrap().dim(), 0);
    }

    #[test]
    fn projection_resolves_identity() {
        let g = so_n(4);
        let f = KForm::basis(4, &[0, 1]).scale(2.0).add(&KForm::basis(4, &[2, 3]));
        let (fg, fperp) = g.project_form(&f);
        assert_relative_eq!(fg.add(&fperp).sub(&f).norm(), 0.0, epsilon = 1e-12);
        assert!(fg.dot(&fperp).abs() < 1e-12);
        // member projects to itself
        let (mg, mp) = g.project_form(&KForm::basis(4, &[1, 2]));
        assert!(mp.norm() < 1e-12);
        assert!(mg.sub(&KForm::basis(4, &[1, 2])).norm() < 1e-12);
    }
}
