//! Constructors for the standard orthogonal representations and their model
//! forms, each built in the floating and the exact backend at once and
//! validated structurally (closure residuals, isotropy dimensions) rather
//! than by citing coefficient tables.

use std::collections::BTreeMap;

use nalgebra::DMatrix;
use num_traits::{One, Zero};

use crate::combin::subsets;
use crate::exact::{ExactForm, ExactRep};
use crate::exterior::{flat, KForm, SkewMap};
use crate::linalg::{exact_nullspace, rat_int, Rat, RationalMap};
use crate::rep::LieSubalgebra;
use crate::{Error, Result, DEFAULT_TOL};

/// A named representation with its model forms and exact presentation.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub n: usize,
    pub rep: LieSubalgebra,
    pub model_forms: BTreeMap<String, KForm>,
    pub exact: ExactRep,
    pub exact_forms: BTreeMap<String, ExactForm>,
}

impl CatalogEntry {
    pub fn model_form(&self, which: &str) -> Result<&KForm> {
        self.model_forms
            .get(which)
            .ok_or_else(|| Error::Input(format!("entry {} has no form '{which}'", self.name)))
    }
}

/// Canonical names of the built-in entries, in report order.
pub fn names() -> Vec<&'static str> {
    vec![
        "so3", "so4", "so5", "so6", "u2", "u3", "u5", "su2", "su3", "sp1", "sp2", "sp2sp1",
        "spin7", "g2", "adjoint-su2", "adjoint-su3", "adjoint-so5",
    ]
}

/// Entries whose representation is irreducible (used by the identity suites).
pub fn irreducible_names() -> Vec<&'static str> {
    // sp1 on R^4 = su(2) acting irreducibly; all listed entries are
    // irreducible over R
    names()
}

pub fn build(name: &str) -> Result<CatalogEntry> {
    let canon = canonical_name(name)?;
    let unknown = || Error::UnknownCatalog(canon.clone());
    let param = |rest: &str| rest.parse::<usize>().map_err(|_| unknown());
    match canon.as_str() {
        "spin7" => return build_spin7(),
        "g2" => return build_g2(),
        _ => {}
    }
    if let Some(rest) = canon.strip_prefix("adjoint-su") {
        return build_adjoint_su(param(rest)?);
    }
    if let Some(rest) = canon.strip_prefix("adjoint-so") {
        return build_adjoint_so(param(rest)?);
    }
    if let Some(rest) = canon.strip_prefix("sp") {
        if let Some(m) = rest.strip_suffix("sp1") {
            return build_sp_sp1(param(m)?);
        }
        return build_sp(param(rest)?);
    }
    if let Some(rest) = canon.strip_prefix("su") {
        return build_su(param(rest)?);
    }
    if let Some(rest) = canon.strip_prefix("so") {
        return build_so(param(rest)?);
    }
    if let Some(rest) = canon.strip_prefix("u") {
        return build_u(param(rest)?);
    }
    Err(unknown())
}

/// Normalize user spellings: `so(5)`, `so5`, `sp(2)+sp(1)`, `adjoint-su(3)`.
pub fn canonical_name(name: &str) -> Result<String> {
    let squashed: String = name
        .trim()
        .to_ascii_lowercase()
        .chars()
        .filter(|c| !matches!(c, '(' | ')' | '+' | ' '))
        .collect();
    if squashed.is_empty() {
        return Err(Error::UnknownCatalog(name.to_string()));
    }
    Ok(squashed)
}

fn exact_sharp(n: usize, f: &ExactForm) -> RationalMap {
    let mut m = RationalMap::zeros(n, n);
    for (r, t) in subsets(n, 2).iter().enumerate() {
        let c = &f.coeffs()[r];
        if !c.is_zero() {
            m[(t[1], t[0])] += c.clone();
            m[(t[0], t[1])] -= c.clone();
        }
    }
    m
}

fn entry_from_integer_forms(
    name: &str,
    n: usize,
    forms: Vec<ExactForm>,
    model_exact: BTreeMap<String, ExactForm>,
) -> Result<CatalogEntry> {
    let float_forms: Vec<KForm> = forms
        .iter()
        .map(|f| KForm::from_coeffs(n, 2, f.to_f64()).unwrap())
        .collect();
    let rep = LieSubalgebra::from_forms(n, &float_forms, DEFAULT_TOL)?;
    let gens = forms.iter().map(|f| exact_sharp(n, f)).collect();
    let exact = ExactRep::standard(n, gens);
    let mut model_forms = BTreeMap::new();
    for (k, v) in &model_exact {
        model_forms.insert(
            k.clone(),
            KForm::from_coeffs(n, v.degree().min(n), v.to_f64()).unwrap(),
        );
    }
    Ok(CatalogEntry {
        name: name.to_string(),
        n,
        rep,
        model_forms,
        exact,
        exact_forms: model_exact,
    })
}

fn build_so(n: usize) -> Result<CatalogEntry> {
    if !(2..=12).contains(&n) {
        return Err(Error::Input(format!("so({n}) outside the supported range")));
    }
    let forms: Vec<ExactForm> = subsets(n, 2).iter().map(|t| ExactForm::basis(n, t)).collect();
    entry_from_integer_forms(&format!("so{n}"), n, forms, BTreeMap::new())
}

/// The standard symplectic 2-form `sum_a e_{2a-1} ^ e_{2a}`.
fn omega_form(m: usize) -> ExactForm {
    let n = 2 * m;
    let mut f = ExactForm::zero(n, 2);
    for a in 0..m {
        f.set_coeff(&[2 * a, 2 * a + 1], rat_int(1));
    }
    f
}

fn u_forms(m: usize) -> Vec<ExactForm> {
    let n = 2 * m;
    let mut forms = Vec::new();
    for a in 0..m {
        forms.push(ExactForm::basis(n, &[2 * a, 2 * a + 1]));
    }
    for a in 0..m {
        for b in a + 1..m {
            let mut c = ExactForm::zero(n, 2);
            c.set_coeff(&[2 * a, 2 * b], rat_int(1));
            c.set_coeff(&[2 * a + 1, 2 * b + 1], rat_int(1));
            forms.push(c);
            let mut d = ExactForm::zero(n, 2);
            d.set_coeff(&[2 * a, 2 * b + 1], rat_int(1));
            d.set_coeff(&[2 * a + 1, 2 * b], rat_int(-1));
            forms.push(d);
        }
    }
    forms
}

fn build_u(m: usize) -> Result<CatalogEntry> {
    if !(1..=6).contains(&m) {
        return Err(Error::Input(format!("u({m}) outside the supported range")));
    }
    let mut model = BTreeMap::new();
    model.insert("omega".to_string(), omega_form(m));
    entry_from_integer_forms(&format!("u{m}"), 2 * m, u_forms(m), model)
}

/// Real part of the complex volume form dz_1 ^ ... ^ dz_m.
fn complex_volume_real(m: usize) -> ExactForm {
    let n = 2 * m;
    let mut out = ExactForm::zero(n, m);
    // expand product of (e_{2a} + i e_{2a+1}): real terms pick an even number
    // of imaginary factors
    for mask in 0..(1u32 << m) {
        let ones = mask.count_ones();
        if ones % 2 != 0 {
            continue;
        }
        // sign from i^ones = (-1)^{ones/2}
        let sign = if (ones / 2) % 2 == 0 { 1i64 } else { -1 };
        let tuple: Vec<usize> = (0..m)
            .map(|a| if mask & (1 << a) != 0 { 2 * a + 1 } else { 2 * a })
            .collect();
        out.set_coeff(&tuple, rat_int(sign));
    }
    out
}

fn build_su(m: usize) -> Result<CatalogEntry> {
    if !(2..=6).contains(&m) {
        return Err(Error::Input(format!("su({m}) outside the supported range")));
    }
    let n = 2 * m;
    let mut forms = Vec::new();
    // trace-free diagonal rotations
    for a in 0..m - 1 {
        let mut f = ExactForm::zero(n, 2);
        f.set_coeff(&[2 * a, 2 * a + 1], rat_int(1));
        f.set_coeff(&[2 * (a + 1), 2 * (a + 1) + 1], rat_int(-1));
        forms.push(f);
    }
    for f in u_forms(m) {
        // keep the off-diagonal generators only
        let mut diag = false;
        for a in 0..m {
            if !f.coeffs()[crate::combin::pair_rank(n, 2 * a, 2 * a + 1)].is_zero() {
                diag = true;
            }
        }
        if !diag {
            forms.push(f);
        }
    }
    let mut model = BTreeMap::new();
    model.insert("omega".to_string(), omega_form(m));
    model.insert("complex_volume".to_string(), complex_volume_real(m));
    entry_from_integer_forms(&format!("su{m}"), n, forms, model)
}

/// Blockwise right multiplication by a unit quaternion, in coordinates
/// (1, i, j, k) per block.
fn right_mult(m: usize, which: usize) -> RationalMap {
    let n = 4 * m;
    let mut r = RationalMap::zeros(n, n);
    for q in 0..m {
        let b = 4 * q;
        // columns: images of 1, i, j, k under x -> x * unit
        let table: [[i64; 4]; 4] = match which {
            // R_i: 1->i, i->-1, j->-k, k->j
            0 => [[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]],
            // R_j: 1->j, i->k, j->-1, k->-i
            1 => [[0, 0, -1, 0], [0, 0, 0, -1], [1, 0, 0, 0], [0, 1, 0, 0]],
            // R_k: 1->k, i->-j, j->i, k->-1
            _ => [[0, 0, 0, -1], [0, 0, 1, 0], [0, -1, 0, 0], [1, 0, 0, 0]],
        };
        for (row, line) in table.iter().enumerate() {
            for (col, &v) in line.iter().enumerate() {
                if v != 0 {
                    r[(b + row, b + col)] = rat_int(v);
                }
            }
        }
    }
    r
}

fn sp_forms(m: usize) -> Vec<ExactForm> {
    // kernel of the commutation constraints with two of the right structures
    let n = 4 * m;
    let m2 = crate::combin::binomial(n, 2);
    let ri = right_mult(m, 0);
    let rj = right_mult(m, 1);
    let mut rows: Vec<Vec<Rat>> = vec![vec![Rat::zero(); m2]; 2 * n * n];
    for (col, t) in subsets(n, 2).iter().enumerate() {
        let f = ExactForm::basis(n, t);
        let a = exact_sharp(n, &f);
        for (block, s) in [&ri, &rj].iter().enumerate() {
            let c = crate::exact::commutator(&a, s);
            for i in 0..n {
                for j in 0..n {
                    rows[block * n * n + i * n + j][col] = c[(i, j)].clone();
                }
            }
        }
    }
    exact_nullspace(&RationalMap::from_rows(rows))
        .into_iter()
        .map(|v| ExactForm::from_coeffs(n, 2, v))
        .collect()
}

fn quaternionic_form(m: usize) -> ExactForm {
    let n = 4 * m;
    let dummy = ExactRep::standard(n, Vec::new());
    let mut acc = ExactForm::zero(n, 4);
    for which in 0..3 {
        let r = right_mult(m, which);
        let omega = dummy.lower(&r);
        let sq = omega.wedge(&omega);
        acc.add_scaled(&sq, &Rat::one());
    }
    acc
}

fn build_sp(m: usize) -> Result<CatalogEntry> {
    if !(1..=3).contains(&m) {
        return Err(Error::Input(format!("sp({m}) outside the supported range")));
    }
    let mut model = BTreeMap::new();
    model.insert("quaternionic".to_string(), quaternionic_form(m));
    entry_from_integer_forms(&format!("sp{m}"), 4 * m, sp_forms(m), model)
}

fn build_sp_sp1(m: usize) -> Result<CatalogEntry> {
    if !(1..=3).contains(&m) {
        return Err(Error::Input(format!("sp({m})+sp(1) outside the supported range")));
    }
    let n = 4 * m;
    let dummy = ExactRep::standard(n, Vec::new());
    let mut forms = sp_forms(m);
    for which in 0..3 {
        forms.push(dummy.lower(&right_mult(m, which)));
    }
    let mut model = BTreeMap::new();
    model.insert("quaternionic".to_string(), quaternionic_form(m));
    entry_from_integer_forms(&format!("sp{m}sp1"), n, forms, model)
}

/// Unit-coefficient associative 3-form on R^7 (indices 1-based in comments):
/// e123 + e145 + e167 + e246 - e257 - e347 - e356.
fn associative_form() -> ExactForm {
    let mut f = ExactForm::zero(7, 3);
    for (t, s) in [
        ([0usize, 1, 2], 1i64),
        ([0, 3, 4], 1),
        ([0, 5, 6], 1),
        ([1, 3, 5], 1),
        ([1, 4, 6], -1),
        ([2, 3, 6], -1),
        ([2, 4, 5], -1),
    ] {
        f.set_coeff(&t, rat_int(s));
    }
    f
}

/// Coassociative 4-form, the dual of the associative form.
fn coassociative_form() -> ExactForm {
    let mut f = ExactForm::zero(7, 4);
    for (t, s) in [
        ([3usize, 4, 5, 6], 1i64),
        ([1, 2, 5, 6], 1),
        ([1, 2, 3, 4], 1),
        ([0, 2, 4, 6], 1),
        ([0, 2, 3, 5], -1),
        ([0, 1, 4, 5], -1),
        ([0, 1, 3, 6], -1),
    ] {
        f.set_coeff(&t, rat_int(s));
    }
    f
}

/// Cayley 4-form on R^8: associative ^ e8 + coassociative.
fn cayley_form() -> ExactForm {
    let mut f = ExactForm::zero(8, 4);
    let assoc = associative_form();
    for (r, t) in subsets(7, 3).iter().enumerate() {
        let c = assoc.coeffs()[r].clone();
        if !c.is_zero() {
            let mut idx = t.clone();
            idx.push(7);
            f.set_coeff(&idx, c);
        }
    }
    let co = coassociative_form();
    for (r, t) in subsets(7, 4).iter().enumerate() {
        let c = co.coeffs()[r].clone();
        if !c.is_zero() {
            f.set_coeff(t, c);
        }
    }
    f
}

fn isotropy_entry(
    name: &str,
    n: usize,
    phi: ExactForm,
    form_name: &str,
) -> Result<CatalogEntry> {
    let dummy = ExactRep::standard(n, Vec::new());
    let endos = dummy.isotropy_endos(&phi);
    let forms: Vec<ExactForm> = endos.iter().map(|m| dummy.lower(m)).collect();
    let mut model = BTreeMap::new();
    model.insert(form_name.to_string(), phi);
    entry_from_integer_forms(name, n, forms, model)
}

fn build_spin7() -> Result<CatalogEntry> {
    isotropy_entry("spin7", 8, cayley_form(), "cayley")
}

fn build_g2() -> Result<CatalogEntry> {
    let mut entry = isotropy_entry("g2", 7, associative_form(), "associative")?;
    entry
        .exact_forms
        .insert("coassociative".to_string(), coassociative_form());
    entry.model_forms.insert(
        "coassociative".to_string(),
        KForm::from_coeffs(7, 4, coassociative_form().to_f64()).unwrap(),
    );
    Ok(entry)
}

// ---------------------------------------------------------------------------
// Adjoint representations
// ---------------------------------------------------------------------------

/// Complex matrix with exact Gaussian-rational entries.
#[derive(Debug, Clone)]
struct CMat {
    re: RationalMap,
    im: RationalMap,
}

impl CMat {
    fn zeros(n: usize) -> Self {
        CMat { re: RationalMap::zeros(n, n), im: RationalMap::zeros(n, n) }
    }

    fn mul(&self, other: &Self) -> Self {
        let re = {
            let a = self.re.mul(&other.re);
            let b = self.im.mul(&other.im);
            subtract(&a, &b)
        };
        let im = {
            let a = self.re.mul(&other.im);
            let b = self.im.mul(&other.re);
            add(&a, &b)
        };
        CMat { re, im }
    }

    fn bracket(&self, other: &Self) -> Self {
        let ab = self.mul(other);
        let ba = other.mul(self);
        CMat { re: subtract(&ab.re, &ba.re), im: subtract(&ab.im, &ba.im) }
    }

    /// -Re tr(a b) / 2, the invariant pairing used for adjoint entries.
    fn pairing(&self, other: &Self) -> Rat {
        let prod = self.mul(other);
        let n = prod.re.nrows();
        let mut tr = Rat::zero();
        for i in 0..n {
            tr += prod.re[(i, i)].clone();
        }
        -tr / Rat::from_integer(2.into())
    }
}

fn add(a: &RationalMap, b: &RationalMap) -> RationalMap {
    let mut out = RationalMap::zeros(a.nrows(), a.ncols());
    for i in 0..a.nrows() {
        for j in 0..a.ncols() {
            out[(i, j)] = &a[(i, j)] + &b[(i, j)];
        }
    }
    out
}

fn subtract(a: &RationalMap, b: &RationalMap) -> RationalMap {
    let mut out = RationalMap::zeros(a.nrows(), a.ncols());
    for i in 0..a.nrows() {
        for j in 0..a.ncols() {
            out[(i, j)] = &a[(i, j)] - &b[(i, j)];
        }
    }
    out
}

/// Basis of su(k): i(E_aa - E_{a+1,a+1}), then E_ab - E_ba and
/// i(E_ab + E_ba) for a < b.
fn su_basis(k: usize) -> Vec<CMat> {
    let mut basis = Vec::new();
    for a in 0..k - 1 {
        let mut m = CMat::zeros(k);
        m.im[(a, a)] = rat_int(1);
        m.im[(a + 1, a + 1)] = rat_int(-1);
        basis.push(m);
    }
    for a in 0..k {
        for b in a + 1..k {
            let mut m = CMat::zeros(k);
            m.re[(a, b)] = rat_int(1);
            m.re[(b, a)] = rat_int(-1);
            basis.push(m);
            let mut s = CMat::zeros(k);
            s.im[(a, b)] = rat_int(1);
            s.im[(b, a)] = rat_int(1);
            basis.push(s);
        }
    }
    basis
}

/// Basis of so(k): E_ab - E_ba for a < b (orthonormal in the pairing).
fn so_basis(k: usize) -> Vec<CMat> {
    subsets(k, 2)
        .iter()
        .map(|t| {
            let mut m = CMat::zeros(k);
            m.re[(t[0], t[1])] = rat_int(1);
            m.re[(t[1], t[0])] = rat_int(-1);
            m
        })
        .collect()
}

/// Decompose an anti-Hermitian complex matrix over the su(k) basis above.
fn decompose_su(k: usize, m: &CMat) -> Vec<Rat> {
    let dim = k * k - 1;
    let mut coeffs = vec![Rat::zero(); dim];
    // diagonal imaginary parts: H-coefficients are partial sums
    let mut acc = Rat::zero();
    for a in 0..k - 1 {
        acc += m.im[(a, a)].clone();
        coeffs[a] = acc.clone();
    }
    let mut idx = k - 1;
    for a in 0..k {
        for b in a + 1..k {
            coeffs[idx] = m.re[(a, b)].clone();
            coeffs[idx + 1] = m.im[(a, b)].clone();
            idx += 2;
        }
    }
    coeffs
}

fn decompose_so(k: usize, m: &CMat) -> Vec<Rat> {
    subsets(k, 2).iter().map(|t| m.re[(t[0], t[1])].clone()).collect()
}

fn adjoint_entry(
    name: &str,
    basis: Vec<CMat>,
    decompose: impl Fn(&CMat) -> Vec<Rat>,
) -> Result<CatalogEntry> {
    let dim = basis.len();
    // Gram matrix of the invariant pairing
    let mut gram = RationalMap::zeros(dim, dim);
    for a in 0..dim {
        for b in 0..dim {
            gram[(a, b)] = basis[a].pairing(&basis[b]);
        }
    }
    // exact ad matrices: columns are bracket decompositions
    let mut gens = Vec::with_capacity(dim);
    for a in 0..dim {
        let mut m = RationalMap::zeros(dim, dim);
        for c in 0..dim {
            let br = basis[a].bracket(&basis[c]);
            for (d, coeff) in decompose(&br).into_iter().enumerate() {
                m[(d, c)] = coeff;
            }
        }
        gens.push(m);
    }
    let exact = ExactRep { n: dim, metric: gram.clone(), gens: gens.clone() };
    // exact Cartan form: T(b_a, b_b, b_c) = <[b_a, b_b], b_c>
    let mut cartan = ExactForm::zero(dim, 3.min(dim));
    if dim >= 3 {
        for t in subsets(dim, 3) {
            let br = basis[t[0]].bracket(&basis[t[1]]);
            let v = br.pairing(&basis[t[2]]);
            cartan.set_coeff(&t, v);
        }
    }
    // floating side: orthonormal coordinates v_i = sum_a C_ia b_a with
    // C = L^{-1}, G = L L^T; coordinate vectors transform by xi = C^T eta,
    // so operators conjugate as M_v = L^T M_b L^{-T}
    let gram_f = gram.to_dense();
    let chol = nalgebra::Cholesky::new(gram_f.clone())
        .ok_or_else(|| Error::Input("adjoint pairing is not positive definite".into()))?;
    let l = chol.l();
    let c = l
        .clone()
        .try_inverse()
        .ok_or_else(|| Error::Input("Cholesky factor not invertible".into()))?;
    let lt = l.transpose();
    let ct = c.transpose();
    let gens_f: Vec<DMatrix<f64>> = gens.iter().map(|g| g.to_dense()).collect();
    // ad of the orthonormal basis vectors themselves
    let mut float_forms = Vec::with_capacity(dim);
    let mut ad_v: Vec<DMatrix<f64>> = Vec::with_capacity(dim);
    for i in 0..dim {
        let mut nb = DMatrix::zeros(dim, dim);
        for a in 0..dim {
            let w = c[(i, a)];
            if w != 0.0 {
                nb += &gens_f[a] * w;
            }
        }
        let mv = &lt * nb * &ct;
        debug_assert!((&mv + mv.transpose()).norm() < 1e-8 * mv.norm().max(1.0));
        let skew = 0.5 * (&mv - mv.transpose());
        ad_v.push(skew.clone());
        float_forms.push(flat(&SkewMap::new(skew).unwrap()));
    }
    let rep = LieSubalgebra::from_forms(dim, &float_forms, DEFAULT_TOL)?;
    // floating Cartan form: T(v_i, v_j, v_k) = <[v_i, v_j], v_k> = (ad_v[i])_{kj}
    let mut cartan_float = KForm::zero(dim, 3.min(dim));
    if dim >= 3 {
        for t in subsets(dim, 3) {
            cartan_float.set_coeff(&t, ad_v[t[0]][(t[2], t[1])]);
        }
    }
    let mut model_forms = BTreeMap::new();
    model_forms.insert("cartan".to_string(), cartan_float);
    let mut exact_forms = BTreeMap::new();
    exact_forms.insert("cartan".to_string(), cartan);
    Ok(CatalogEntry { name: name.to_string(), n: dim, rep, model_forms, exact, exact_forms })
}

fn build_adjoint_su(k: usize) -> Result<CatalogEntry> {
    if !(2..=3).contains(&k) {
        return Err(Error::Input(format!("adjoint-su({k}) outside the supported range")));
    }
    adjoint_entry(&format!("adjoint-su{k}"), su_basis(k), |m| decompose_su(k, m))
}

fn build_adjoint_so(k: usize) -> Result<CatalogEntry> {
    if !(3..=5).contains(&k) {
        return Err(Error::Input(format!("adjoint-so({k}) outside the supported range")));
    }
    adjoint_entry(&format!("adjoint-so{k}"), so_basis(k), |m| decompose_so(k, m))
}
