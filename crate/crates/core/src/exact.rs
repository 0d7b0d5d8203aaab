//! Exact rational mirror of the floating pipeline.
//!
//! A representation is presented by rational endomorphisms that are
//! skew-symmetric with respect to a rational (not necessarily identity)
//! metric on V; adjoint representations of su(k) need the non-identity case
//! because their invariant metric is not rationally congruent to the
//! standard one. Forms carry covariant coefficients in the chosen
//! coordinates, so contractions and wedges stay metric-free and membership
//! conditions reduce to rational span arithmetic.

use num_traits::Zero;

use crate::combin::{binomial, lex_rank, merge_sign, remove_sign, subsets};
use crate::linalg::{exact_nullspace, exact_rank, ExactSpan, Rat, RationalMap};
use crate::{Error, Result};

/// Alternating form with exact rational coefficients (covariant components
/// in the presentation coordinates).
#[derive(Debug, Clone, PartialEq)]
pub struct ExactForm {
    n: usize,
    p: usize,
    coeffs: Vec<Rat>,
}

impl ExactForm {
    pub fn zero(n: usize, p: usize) -> Self {
        ExactForm { n, p, coeffs: vec![Rat::zero(); binomial(n, p)] }
    }

    pub fn from_coeffs(n: usize, p: usize, coeffs: Vec<Rat>) -> Self {
        assert_eq!(coeffs.len(), binomial(n, p));
        ExactForm { n, p, coeffs }
    }

    pub fn basis(n: usize, tuple: &[usize]) -> Self {
        let mut f = ExactForm::zero(n, tuple.len());
        f.coeffs[lex_rank(n, tuple)] = Rat::from_integer(1.into());
        f
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.p
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeffs_mut(&mut self) -> &mut [Rat] {
        &mut self.coeffs
    }

    pub fn set_coeff(&mut self, tuple: &[usize], v: Rat) {
        let r = lex_rank(self.n, tuple);
        self.coeffs[r] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add_scaled(&mut self, other: &ExactForm, c: &Rat) {
        assert_eq!((self.n, self.p), (other.n, other.p));
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            if !b.is_zero() {
                *a += b * c;
            }
        }
    }

    pub fn contract_basis(&self, i: usize) -> ExactForm {
        let mut out = ExactForm::zero(self.n, self.p.saturating_sub(1));
        if self.p == 0 {
            return out;
        }
        for (r, t) in subsets(self.n, self.p).iter().enumerate() {
            if self.coeffs[r].is_zero() {
                continue;
            }
            if let Some((sign, rest)) = remove_sign(t, i) {
                let term = &self.coeffs[r] * Rat::from_integer(sign.into());
                out.coeffs[lex_rank(self.n, &rest)] += term;
            }
        }
        out
    }

    pub fn contract_vector(&self, x: &[Rat]) -> ExactForm {
        let mut out = ExactForm::zero(self.n, self.p.saturating_sub(1));
        if self.p == 0 {
            return out;
        }
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            let c = self.contract_basis(i);
            out.add_scaled(&c, xi);
        }
        out
    }

    pub fn wedge(&self, other: &ExactForm) -> ExactForm {
        assert_eq!(self.n, other.n);
        let n = self.n;
        if self.p + other.p > n {
            return ExactForm::zero(n, n);
        }
        let mut out = ExactForm::zero(n, self.p + other.p);
        let left = subsets(n, self.p);
        let right = subsets(n, other.p);
        for (ra, ta) in left.iter().enumerate() {
            if self.coeffs[ra].is_zero() {
                continue;
            }
            for (rb, tb) in right.iter().enumerate() {
                if other.coeffs[rb].is_zero() {
                    continue;
                }
                if let Some((sign, merged)) = merge_sign(ta, tb) {
                    let term = &self.coeffs[ra] * &other.coeffs[rb] * Rat::from_integer(sign.into());
                    out.coeffs[lex_rank(n, &merged)] += term;
                }
            }
        }
        out
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.coeffs.iter().map(crate::linalg::rat_to_f64).collect()
    }
}

/// A faithful orthogonal representation presented exactly: rational metric G
/// on V and rational endomorphism generators M with M^T G = -G M.
#[derive(Debug, Clone)]
pub struct ExactRep {
    pub n: usize,
    pub metric: RationalMap,
    pub gens: Vec<RationalMap>,
}

impl ExactRep {
    /// Standard-metric representation from skew rational matrices.
    pub fn standard(n: usize, gens: Vec<RationalMap>) -> Self {
        ExactRep { n, metric: RationalMap::identity(n), gens }
    }

    pub fn metric_is_identity(&self) -> bool {
        self.metric == RationalMap::identity(self.n)
    }

    /// Covariant 2-form of an endomorphism: A = M^T G.
    pub fn lower(&self, m: &RationalMap) -> ExactForm {
        let a = m.transpose().mul(&self.metric);
        let mut f = ExactForm::zero(self.n, 2);
        for (r, t) in subsets(self.n, 2).iter().enumerate() {
            f.coeffs[r] = a[(t[0], t[1])].clone();
        }
        f
    }

    /// Endomorphism of a covariant 2-form: M = -G^{-1} A_hat where A_hat is
    /// the evaluation matrix.
    pub fn raise(&self, f: &ExactForm) -> RationalMap {
        assert_eq!(f.degree(), 2);
        let n = self.n;
        let mut ahat = RationalMap::zeros(n, n);
        for (r, t) in subsets(n, 2).iter().enumerate() {
            ahat[(t[0], t[1])] = f.coeffs[r].clone();
            ahat[(t[1], t[0])] = -f.coeffs[r].clone();
        }
        let ginv = self.metric.inverse().expect("metric invertible");
        let prod = ginv.mul(&ahat);
        let mut m = RationalMap::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = -prod[(i, j)].clone();
            }
        }
        m
    }

    fn metric_inverse(&self) -> RationalMap {
        self.metric.inverse().expect("metric invertible")
    }

    /// Lie closure of the generators; returns the closed list of
    /// endomorphisms (a basis) and its dimension.
    pub fn closure(&self) -> Vec<RationalMap> {
        let n = self.n;
        let mut span = ExactSpan::new(n * n);
        let mut basis: Vec<RationalMap> = Vec::new();
        let mut frontier: Vec<RationalMap> = Vec::new();
        for g in &self.gens {
            if span.insert(&vec_of(g)) {
                basis.push(g.clone());
                frontier.push(g.clone());
            }
        }
        let cap = binomial(n, 2);
        let mut rounds = 0usize;
        while !frontier.is_empty() && basis.len() < cap && rounds <= cap {
            rounds += 1;
            let mut next = Vec::new();
            for f in &frontier {
                for b in basis.clone() {
                    let c = commutator(f, &b);
                    if span.insert(&vec_of(&c)) {
                        basis.push(c.clone());
                        next.push(c);
                    }
                }
            }
            frontier = next;
        }
        basis
    }

    pub fn closure_dim(&self) -> usize {
        self.closure().len()
    }

    /// Annihilator (coordinate-dual) of the span of the lowered generator
    /// 2-forms inside the coefficient space of 2-forms.
    fn g_annihilator(&self, algebra: &[RationalMap]) -> Vec<Vec<Rat>> {
        let m2 = binomial(self.n, 2);
        let rows: Vec<Vec<Rat>> =
            algebra.iter().map(|g| self.lower(g).coeffs().to_vec()).collect();
        if rows.is_empty() {
            // annihilator of the zero space is everything
            return (0..m2)
                .map(|i| {
                    let mut v = vec![Rat::zero(); m2];
                    v[i] = Rat::from_integer(1.into());
                    v
                })
                .collect();
        }
        exact_nullspace(&RationalMap::from_rows(rows))
    }

    /// Dimension of { T in Lambda^p : all (p-2)-fold coordinate contractions
    /// lie in the algebra }, computed as an exact kernel.
    pub fn prolongation_dim(&self, p: usize) -> Result<usize> {
        if p < 3 || p > self.n {
            return Err(Error::Degree(format!("prolongation degree {p} out of range")));
        }
        let algebra = self.closure();
        let dom = binomial(self.n, p);
        let ann = self.g_annihilator(&algebra);
        if ann.is_empty() {
            return Ok(dom);
        }
        let tuples = subsets(self.n, p - 2);
        let basis_p = subsets(self.n, p);
        let mut rows: Vec<Vec<Rat>> = Vec::new();
        for tup in &tuples {
            // column c: coefficients of the iterated contraction of e_c
            let mut cols: Vec<ExactForm> = Vec::with_capacity(dom);
            for bt in &basis_p {
                let mut f = ExactForm::basis(self.n, bt);
                for &i in tup.iter().rev() {
                    f = f.contract_basis(i);
                }
                cols.push(f);
            }
            for w in &ann {
                let mut row = vec![Rat::zero(); dom];
                for (c, f) in cols.iter().enumerate() {
                    let mut acc = Rat::zero();
                    for (a, b) in f.coeffs().iter().zip(w) {
                        if !a.is_zero() && !b.is_zero() {
                            acc += a * b;
                        }
                    }
                    row[c] = acc;
                }
                rows.push(row);
            }
        }
        if rows.is_empty() {
            return Ok(dom);
        }
        let m = RationalMap::from_rows(rows);
        Ok(dom - exact_rank(&m))
    }

    /// Kernel, cokernel and dim g-perp of the projection of contractions
    /// onto the complement of the algebra.
    pub fn eps_perp_dims(&self) -> Result<(usize, usize, usize)> {
        let kernel = self.prolongation_dim(3)?;
        let dim_g = self.closure_dim();
        let dim_gperp = binomial(self.n, 2) - dim_g;
        let rank = binomial(self.n, 3) - kernel;
        let coker = self.n * dim_gperp - rank;
        Ok((kernel, coker, dim_gperp))
    }

    /// Commutator action of a covariant 2-form on a covariant form:
    /// `[a, g] = sum_{ij} Ginv_{ij} (v_i -| a) ^ (v_j -| g)`.
    pub fn form_action(&self, alpha: &ExactForm, gamma: &ExactForm) -> ExactForm {
        let ginv = self.metric_inverse();
        self.form_action_with(&ginv, alpha, gamma)
    }

    fn form_action_with(&self, ginv: &RationalMap, alpha: &ExactForm, gamma: &ExactForm) -> ExactForm {
        let n = self.n;
        let deg = (alpha.degree() + gamma.degree()).saturating_sub(2);
        let mut out = ExactForm::zero(n, deg.min(n));
        let ca: Vec<ExactForm> = (0..n).map(|i| alpha.contract_basis(i)).collect();
        let cg: Vec<ExactForm> = (0..n).map(|j| gamma.contract_basis(j)).collect();
        for i in 0..n {
            if ca[i].is_zero() {
                continue;
            }
            for j in 0..n {
                let w = &ginv[(i, j)];
                if w.is_zero() || cg[j].is_zero() {
                    continue;
                }
                let wedge = ca[i].wedge(&cg[j]);
                out.add_scaled(&wedge, w);
            }
        }
        out
    }

    /// Dimension of the isotropy algebra { a in Lambda^2 : [a, phi] = 0 }.
    pub fn isotropy_dim(&self, phi: &ExactForm) -> usize {
        let n = self.n;
        let m2 = binomial(n, 2);
        let ginv = self.metric_inverse();
        let mut rows: Vec<Vec<Rat>> = Vec::new();
        let cols: Vec<ExactForm> = subsets(n, 2)
            .iter()
            .map(|t| self.form_action_with(&ginv, &ExactForm::basis(n, t), phi))
            .collect();
        let out_len = cols[0].coeffs().len();
        for r in 0..out_len {
            rows.push(cols.iter().map(|c| c.coeffs()[r].clone()).collect());
        }
        m2 - exact_rank(&RationalMap::from_rows(rows))
    }

    /// Basis of the isotropy algebra as endomorphisms.
    pub fn isotropy_endos(&self, phi: &ExactForm) -> Vec<RationalMap> {
        let n = self.n;
        let ginv = self.metric_inverse();
        let cols: Vec<ExactForm> = subsets(n, 2)
            .iter()
            .map(|t| self.form_action_with(&ginv, &ExactForm::basis(n, t), phi))
            .collect();
        let out_len = cols[0].coeffs().len();
        let mut rows: Vec<Vec<Rat>> = Vec::new();
        for r in 0..out_len {
            rows.push(cols.iter().map(|c| c.coeffs()[r].clone()).collect());
        }
        exact_nullspace(&RationalMap::from_rows(rows))
            .into_iter()
            .map(|v| self.raise(&ExactForm::from_coeffs(n, 2, v)))
            .collect()
    }

    /// Dimension of the trivial part (common kernel of the closed algebra).
    pub fn trivial_dim(&self) -> usize {
        let algebra = self.closure();
        if algebra.is_empty() {
            return self.n;
        }
        let mut rows: Vec<Vec<Rat>> = Vec::new();
        for m in &algebra {
            for i in 0..self.n {
                rows.push(m.row(i).to_vec());
            }
        }
        self.n - exact_rank(&RationalMap::from_rows(rows))
    }

    /// Rational basis of the trivial part.
    pub fn trivial_basis(&self) -> Vec<Vec<Rat>> {
        let algebra = self.closure();
        if algebra.is_empty() {
            let id = RationalMap::identity(self.n);
            return (0..self.n).map(|i| id.row(i).to_vec()).collect();
        }
        let mut rows: Vec<Vec<Rat>> = Vec::new();
        for m in &algebra {
            for i in 0..self.n {
                rows.push(m.row(i).to_vec());
            }
        }
        exact_nullspace(&RationalMap::from_rows(rows))
    }

    /// Smallest invariant subspace containing `seed`, as an exact span.
    pub fn cyclic_subspace(&self, seed: &[Rat], algebra: &[RationalMap]) -> ExactSpan {
        let mut span = ExactSpan::new(self.n);
        if seed.iter().all(|x| x.is_zero()) {
            return span;
        }
        span.insert(seed);
        let mut frontier = vec![seed.to_vec()];
        while let Some(v) = frontier.pop() {
            for m in algebra {
                let w = m.mul_vec(&v);
                if span.insert(&w) {
                    frontier.push(w);
                }
            }
        }
        span
    }

    /// Factor dimensions of the isotypic splitting, certified exactly:
    /// minimal cyclic invariant subspaces seeded from the coordinate basis,
    /// kept when they tile the complement of the trivial part. Returns
    /// `None` when the greedy tiling is inconclusive.
    pub fn split_factor_dims(&self) -> Option<Vec<usize>> {
        let algebra = self.closure();
        let v0 = self.trivial_dim();
        // seeds: coordinate vectors projected off the trivial part is not
        // needed; cyclic spans of e_i automatically contain their own orbit
        let mut spans: Vec<ExactSpan> = Vec::new();
        for i in 0..self.n {
            let mut seed = vec![Rat::zero(); self.n];
            seed[i] = Rat::from_integer(1.into());
            // skip seeds that are entirely trivial directions
            let moved = algebra.iter().any(|m| !m.mul_vec(&seed).iter().all(|x| x.is_zero()));
            if !moved {
                continue;
            }
            // grow from the moved part so the trivial component drops out
            let mut span = ExactSpan::new(self.n);
            for m in &algebra {
                let w = m.mul_vec(&seed);
                if !w.iter().all(|x| x.is_zero()) {
                    span.insert(&w);
                }
            }
            let mut frontier: Vec<Vec<Rat>> = span.rows().to_vec();
            while let Some(v) = frontier.pop() {
                for m in &algebra {
                    let w = m.mul_vec(&v);
                    if span.insert(&w) {
                        frontier.push(w);
                    }
                }
            }
            spans.push(span);
        }
        spans.sort_by_key(|s| s.dim());
        let mut chosen: Vec<ExactSpan> = Vec::new();
        let mut covered = 0usize;
        'outer: for s in spans {
            for c in &chosen {
                // disjointness: dim(c + s) == dim c + dim s
                let mut joint = ExactSpan::new(self.n);
                for r in c.rows() {
                    joint.insert(r);
                }
                let mut disjoint = true;
                for r in s.rows() {
                    if !joint.insert(r) {
                        disjoint = false;
                        break;
                    }
                }
                if !disjoint {
                    // overlapping spans are unions of factors; skip
                    continue 'outer;
                }
            }
            covered += s.dim();
            chosen.push(s);
        }
        if covered == self.n - v0 {
            let mut dims: Vec<usize> = chosen.iter().map(|s| s.dim()).collect();
            dims.sort_unstable();
            Some(dims)
        } else {
            None
        }
    }

    /// Bianchi image of a symmetric 2-tensor on the algebra span: rows of the
    /// constraint matrix for the curvature space, one block per unordered
    /// generator pair.
    ///
    /// Curvature elements are parametrized over S^2(algebra); the constraint
    /// is the vanishing of `(b1 Q)_X = sum_{ij} Ginv_{ij} v_i ^ Q(v_j, X)`.
    pub fn curvature_space_dim(&self) -> usize {
        let algebra = self.closure();
        let s = algebra.len();
        if s == 0 {
            return 0;
        }
        let n = self.n;
        let lowered: Vec<ExactForm> = algebra.iter().map(|m| self.lower(m)).collect();
        let params: Vec<(usize, usize)> =
            (0..s).flat_map(|k| (k..s).map(move |l| (k, l))).collect();
        let m3 = binomial(n, 3);
        let mut rows: Vec<Vec<Rat>> = vec![vec![Rat::zero(); params.len()]; n * m3];
        for (col, &(k, l)) in params.iter().enumerate() {
            let b1 = self.b1_of_sym_pair(&lowered[k], &lowered[l]);
            for (x, form) in b1.iter().enumerate() {
                for (r, c) in form.coeffs().iter().enumerate() {
                    rows[x * m3 + r][col] = c.clone();
                }
            }
        }
        params.len() - exact_rank(&RationalMap::from_rows(rows))
    }

    /// Curvature space basis in S^2(algebra) coordinates together with the
    /// algebra basis used, for downstream evaluation.
    pub fn curvature_space_basis(&self) -> (Vec<RationalMap>, Vec<Vec<Rat>>) {
        let algebra = self.closure();
        let s = algebra.len();
        if s == 0 {
            return (algebra, Vec::new());
        }
        let n = self.n;
        let lowered: Vec<ExactForm> = algebra.iter().map(|m| self.lower(m)).collect();
        let params: Vec<(usize, usize)> =
            (0..s).flat_map(|k| (k..s).map(move |l| (k, l))).collect();
        let m3 = binomial(n, 3);
        let mut rows: Vec<Vec<Rat>> = vec![vec![Rat::zero(); params.len()]; n * m3];
        for (col, &(k, l)) in params.iter().enumerate() {
            let b1 = self.b1_of_sym_pair(&lowered[k], &lowered[l]);
            for (x, form) in b1.iter().enumerate() {
                for (r, c) in form.coeffs().iter().enumerate() {
                    rows[x * m3 + r][col] = c.clone();
                }
            }
        }
        let kernel = exact_nullspace(&RationalMap::from_rows(rows));
        (algebra, kernel)
    }

    /// `(b1 Q)_x = sum_j v^j ^ Q(v_j, v_x)` for Q = sym(a (x) b): the frame
    /// factors of the covector slot cancel those of the contraction slot, so
    /// no metric appears.
    fn b1_of_sym_pair(&self, a: &ExactForm, b: &ExactForm) -> Vec<ExactForm> {
        let n = self.n;
        let a_contr: Vec<ExactForm> = (0..n).map(|j| a.contract_basis(j)).collect();
        let b_contr: Vec<ExactForm> = (0..n).map(|j| b.contract_basis(j)).collect();
        let mut out = Vec::with_capacity(n);
        for x in 0..n {
            let mut acc = ExactForm::zero(n, 3.min(n));
            for j in 0..n {
                // a(v_j, v_x) is the x-component of the contraction v_j -| a
                let ajx = a_contr[j].coeffs()[x].clone();
                let bjx = b_contr[j].coeffs()[x].clone();
                if !ajx.is_zero() {
                    let wedge = ExactForm::basis(n, &[j]).wedge(b);
                    acc.add_scaled(&wedge, &ajx);
                }
                if !bjx.is_zero() {
                    let wedge = ExactForm::basis(n, &[j]).wedge(a);
                    acc.add_scaled(&wedge, &bjx);
                }
            }
            out.push(acc);
        }
        out
    }

    /// Exact characteristic 4-form: `sum_{k,l} (Gram^-1)_{kl} y_k ^ y_l`
    /// over the lowered closed algebra basis, where the Gram matrix is the
    /// basis-invariant pairing `-tr(M_k M_l)/2`.
    pub fn charform(&self) -> ExactForm {
        let algebra = self.closure();
        let s = algebra.len();
        let n = self.n;
        if s == 0 {
            return ExactForm::zero(n, 4.min(n));
        }
        let lowered: Vec<ExactForm> = algebra.iter().map(|m| self.lower(m)).collect();
        let mut gram = RationalMap::zeros(s, s);
        for k in 0..s {
            for l in k..s {
                let prod = algebra[k].mul(&algebra[l]);
                let mut tr = Rat::zero();
                for i in 0..n {
                    tr += prod[(i, i)].clone();
                }
                let v = -tr / Rat::from_integer(2.into());
                gram[(k, l)] = v.clone();
                gram[(l, k)] = v;
            }
        }
        let ginv = gram.inverse().expect("algebra Gram invertible");
        let mut acc = ExactForm::zero(n, 4.min(n));
        for k in 0..s {
            for l in 0..s {
                let w = &ginv[(k, l)];
                if !w.is_zero() {
                    let wedge = lowered[k].wedge(&lowered[l]);
                    acc.add_scaled(&wedge, w);
                }
            }
        }
        acc
    }

    /// Sub-representation generated by the iterated coordinate contractions
    /// of a form: the exact mirror of the contraction algebra used by the
    /// holonomy and decomposability classifiers.
    pub fn contraction_subrep(&self, t: &ExactForm) -> ExactRep {
        let n = self.n;
        let p = t.degree();
        let mut gens = Vec::new();
        if p >= 3 {
            for tup in subsets(n, p - 2) {
                let mut f = t.clone();
                for &i in tup.iter().rev() {
                    f = f.contract_basis(i);
                }
                if !f.is_zero() {
                    gens.push(self.raise(&f));
                }
            }
        }
        ExactRep { n, metric: self.metric.clone(), gens }
    }

    /// Dimension of the span of all curvature evaluations Q(v_i, v_j) over a
    /// basis of the curvature space; equals dim algebra exactly when the
    /// representation is its own Berger algebra.
    pub fn berger_dim(&self) -> usize {
        let (algebra, kernel) = self.curvature_space_basis();
        let s = algebra.len();
        if s == 0 || kernel.is_empty() {
            return 0;
        }
        let n = self.n;
        let lowered: Vec<ExactForm> = algebra.iter().map(|m| self.lower(m)).collect();
        let params: Vec<(usize, usize)> =
            (0..s).flat_map(|k| (k..s).map(move |l| (k, l))).collect();
        let m2 = binomial(n, 2);
        let mut span = ExactSpan::new(m2);
        for q in &kernel {
            // evaluation at (v_i, v_j): sum over params of
            // q_kl [A_k(v_i,v_j) A_l + A_l(v_i,v_j) A_k]
            for pair in subsets(n, 2) {
                let mut acc = ExactForm::zero(n, 2);
                for (col, &(k, l)) in params.iter().enumerate() {
                    if q[col].is_zero() {
                        continue;
                    }
                    let akij = lowered[k].coeffs()[lex_rank(n, &pair)].clone();
                    let alij = lowered[l].coeffs()[lex_rank(n, &pair)].clone();
                    if !alij.is_zero() {
                        acc.add_scaled(&lowered[k], &(&q[col] * alij));
                    }
                    if !akij.is_zero() {
                        acc.add_scaled(&lowered[l], &(&q[col] * akij));
                    }
                }
                span.insert(acc.coeffs());
            }
        }
        span.dim()
    }
}

fn vec_of(m: &RationalMap) -> Vec<Rat> {
    let mut v = Vec::with_capacity(m.nrows() * m.ncols());
    for i in 0..m.nrows() {
        v.extend(m.row(i).iter().cloned());
    }
    v
}

pub fn commutator(a: &RationalMap, b: &RationalMap) -> RationalMap {
    let ab = a.mul(b);
    let ba = b.mul(a);
    let n = a.nrows();
    let mut out = RationalMap::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            out[(i, j)] = &ab[(i, j)] - &ba[(i, j)];
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat_int;

    fn skew_basis_so(n: usize) -> Vec<RationalMap> {
        subsets(n, 2)
            .iter()
            .map(|t| {
                let mut m = RationalMap::zeros(n, n);
                m[(t[1], t[0])] = rat_int(1);
                m[(t[0], t[1])] = rat_int(-1);
                m
            })
            .collect()
    }

    #[test]
    fn so3_closure_from_two_generators() {
        let b = skew_basis_so(3);
        let rep = ExactRep::standard(3, vec![b[0].clone(), b[1].clone()]);
        assert_eq!(rep.closure_dim(), 3);
    }

    #[test]
    fn so5_prolongation_is_full() {
        let rep = ExactRep::standard(5, skew_basis_so(5));
        assert_eq!(rep.prolongation_dim(3).unwrap(), 10);
    }

    #[test]
    fn volume_isotropy_is_so_n() {
        let n = 4;
        let rep = ExactRep::standard(n, skew_basis_so(n));
        let vol = ExactForm::basis(n, &[0, 1, 2, 3]);
        assert_eq!(rep.isotropy_dim(&vol), 6);
    }

    #[test]
    fn lower_raise_roundtrip() {
        let rep = ExactRep::standard(4, skew_basis_so(4));
        for g in &rep.gens {
            let f = rep.lower(g);
            let back = rep.raise(&f);
            assert_eq!(&back, g);
        }
    }

    #[test]
    fn curvature_space_so4() {
        let rep = ExactRep::standard(4, skew_basis_so(4));
        // n^2(n^2-1)/12 for n = 4
        assert_eq!(rep.curvature_space_dim(), 20);
    }

    #[test]
    fn trivial_part_of_block_action() {
        // so(3) acting on the first R^3 of R^5
        let mut gens = Vec::new();
        for t in subsets(3, 2) {
            let mut m = RationalMap::zeros(5, 5);
            m[(t[1], t[0])] = rat_int(1);
            m[(t[0], t[1])] = rat_int(-1);
            gens.push(m);
        }
        let rep = ExactRep::standard(5, gens);
        assert_eq!(rep.trivial_dim(), 2);
        assert_eq!(rep.split_factor_dims(), Some(vec![3]));
    }
}
