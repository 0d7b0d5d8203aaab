//! The verification matrix: the regression claims the library is built
//! around, one item per numbered criterion, each emitting its integer
//! outputs for cross-backend comparison.

use nalgebra::{DMatrix, DVector};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{Backend, IntegerOutput, ItemResult};
use crate::catalog::{self, CatalogEntry};
use crate::combin::binomial;
use crate::curvature::{
    berger_algebra, bianchi_b1, curvature_space, omega_4form, ricci_contraction, rt_tensor,
};
use crate::exact::ExactForm;
use crate::exterior::{contract_adjoint, flat, sharp, KForm};
use crate::holonomy::{classify_3form, HolonomyLabel};
use crate::linalg::{exact_rank, jacobi_eigen, rank_nullspace, RationalMap};
use crate::pluecker::{
    classical_plucker_check, contraction_algebra, decompose_plc_form, nlie_bracket,
    nlie_jacobi_check, plc_check,
};
use crate::prolong::{
    casimir_anticommutator, characteristic_form, eps_perp_analysis, is_minimal,
    skew_prolongation, ProlongationClass,
};
use crate::rep::casimir;
use crate::Result;

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub backend: Backend,
    pub seed: u64,
    pub tol: f64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { backend: Backend::Both, seed: 0, tol: crate::DEFAULT_TOL }
    }
}

struct Ctx {
    opts: VerifyOptions,
    entries: Vec<CatalogEntry>,
}

impl Ctx {
    fn new(opts: VerifyOptions) -> Result<Self> {
        let entries =
            catalog::names().iter().map(|n| catalog::build(n)).collect::<Result<Vec<_>>>()?;
        Ok(Ctx { opts, entries })
    }

    fn entry(&self, name: &str) -> &CatalogEntry {
        self.entries.iter().find(|e| e.name == name).expect("catalog entry")
    }

    fn with_exact(&self) -> bool {
        !matches!(self.opts.backend, Backend::Float)
    }
}

struct ItemBuilder {
    id: String,
    failures: Vec<String>,
    notes: Vec<String>,
    integers: Vec<IntegerOutput>,
}

impl ItemBuilder {
    fn new(id: &str) -> Self {
        ItemBuilder { id: id.into(), failures: Vec::new(), notes: Vec::new(), integers: Vec::new() }
    }

    fn check(&mut self, what: &str, ok: bool) {
        if !ok {
            self.failures.push(what.to_string());
        }
    }

    fn check_residual(&mut self, what: &str, residual: f64, tol: f64) {
        if !(residual <= tol) {
            self.failures.push(format!("{what}: residual {residual:.3e} > {tol:.1e}"));
        }
    }

    fn int(&mut self, name: &str, float: usize, exact: Option<usize>, expected: Option<usize>) {
        if let Some(want) = expected {
            if float != want {
                self.failures.push(format!("{name}: got {float}, expected {want}"));
            }
        }
        if let Some(ex) = exact {
            if ex != float {
                self.failures.push(format!("{name}: float {float} != exact {ex}"));
            }
        }
        self.integers.push(IntegerOutput {
            name: name.to_string(),
            float: float as i64,
            exact: exact.map(|x| x as i64),
        });
    }

    fn note(&mut self, s: String) {
        self.notes.push(s);
    }

    fn finish(self) -> ItemResult {
        let passed = self.failures.is_empty();
        let detail = if passed {
            if self.notes.is_empty() { "ok".to_string() } else { self.notes.join("; ") }
        } else {
            self.failures.join("; ")
        };
        ItemResult { id: self.id, passed, detail, integers: self.integers }
    }
}

fn rng_form(rng: &mut ChaCha8Rng, n: usize, p: usize) -> KForm {
    let coeffs: Vec<f64> = (0..binomial(n, p)).map(|_| rng.gen_range(-1.0..1.0)).collect();
    KForm::from_coeffs(n, p, coeffs).unwrap()
}

/// Run all criteria; results are ordered by item id regardless of execution
/// order.
pub fn run_all(opts: &VerifyOptions) -> Result<Vec<ItemResult>> {
    let ctx = Ctx::new(*opts)?;
    let mut items = vec![
        item1_prolongation_table(&ctx),
        item2_contraction_isomorphism(&ctx),
        item3_characteristic_forms(&ctx),
        item4_casimir_normalization(&ctx),
        item5_identity_suite(&ctx),
        item6_curvature_spaces(&ctx),
        item7_holonomy_classifier(&ctx),
        item8_pluecker_nlie(&ctx),
        item9_wedge_injectivity(&ctx),
    ];
    items.push(item10_backend_agreement(&ctx, &items));
    items.sort_by(|a, b| {
        let pa: u32 = a.id.split('-').next().unwrap().parse().unwrap_or(99);
        let pb: u32 = b.id.split('-').next().unwrap().parse().unwrap_or(99);
        pa.cmp(&pb)
    });
    Ok(items)
}

fn item1_prolongation_table(ctx: &Ctx) -> ItemResult {
    let mut b = ItemBuilder::new("1-prolongation-table");
    let table: [(&str, usize, usize, ProlongationClass); 9] = [
        ("so5", 3, 10, ProlongationClass::FullLambda3),
        ("u3", 3, 0, ProlongationClass::Zero),
        ("su3", 3, 0, ProlongationClass::Zero),
        ("sp2sp1", 3, 0, ProlongationClass::Zero),
        ("spin7", 3, 0, ProlongationClass::Zero),
        ("g2", 3, 0, ProlongationClass::Zero),
        ("adjoint-su3", 3, 1, ProlongationClass::AdjointCartanLine),
        ("adjoint-so5", 3, 1, ProlongationClass::AdjointCartanLine),
        ("adjoint-su3", 4, 0, ProlongationClass::Zero),
    ];
    for (name, p, want, class) in table {
        let e = ctx.entry(name);
        let exact = if ctx.with_exact() { Some(&e.exact) } else { None };
        match skew_prolongation(&e.rep, p, exact) {
            Ok(rep) => {
                let exact_dim = if rep.exact_confirmed { Some(rep.dim) } else { None };
                b.int(&format!("{name}-p{p}"), rep.dim, exact_dim, Some(want));
                b.check(
                    &format!(
                        "{name}-p{p} classification {:?} (expected {class:?})",
                        rep.classification
                    ),
                    rep.classification == class,
                );
            }
            Err(err) => b.check(&format!("{name}-p{p}: {err}"), false),
        }
    }
    b.finish()
}

fn item2_contraction_isomorphism(ctx: &Ctx) -> ItemResult {
    let mut b = ItemBuilder::new("2-contraction-isomorphism");
    let mut iso_entries = Vec::new();
    for e in &ctx.entries {
        let exact = if ctx.with_exact() { Some(&e.exact) } else { None };
        match eps_perp_analysis(&e.rep, exact) {
            Ok(r) => {
                let exact_dims = if ctx.with_exact() {
                    // eps_perp_analysis already enforced equality
                    Some((r.kernel_dim, r.coker_dim, r.dim_gperp))
                } else {
                    None
                };
                b.int(&format!("{}-kernel", e.name), r.kernel_dim, exact_dims.map(|d| d.0), None);
                b.int(&format!("{}-coker", e.name), r.coker_dim, exact_dims.map(|d| d.1), None);
                b.int(&format!("{}-gperp", e.name), r.dim_gperp, exact_dims.map(|d| d.2), None);
                if r.is_isomorphism && r.dim_formula_holds {
                    iso_entries.push(e.name.clone());
                }
            }
            Err(err) => b.check(&format!("{}: {err}", e.name), false),
        }
    }
    b.check(
        &format!("unique maximal entry should be spin7, got {iso_entries:?}"),
        iso_entries == vec!["spin7".to_string()],
    );
    b.finish()
}

fn item3_characteristic_forms(ctx: &Ctx) -> ItemResult {
    let mut b = ItemBuilder::new("3-characteristic-forms");
    for name in ["so5", "adjoint-su2", "adjoint-su3", "adjoint-so5"] {
        let e = ctx.entry(name);
        match characteristic_form(&e.rep) {
            Ok(t) => b.check_residual(&format!("charform({name}) = 0"), t.norm(), 1e-9),
            Err(err) => b.check(&format!("{name}: {err}"), false),
        }
    }
    // u(3): colinear with omega ^ omega
    {
        let e = ctx.entry("u3");
        let t = characteristic_form(&e.rep).unwrap();
        let omega = e.model_form("omega").unwrap();
        let ww = omega.wedge(omega).unwrap();
        let coef = t.dot(&ww) / ww.dot(&ww);
        let resid = t.sub(&ww.scale(coef)).norm();
        b.check_residual("charform(u3) colinear with omega^omega", resid, 1e-9);
        b.check("charform(u3) nonzero", t.norm() > 1e-6);
    }
    {
        let e = ctx.entry("spin7");
        let t = characteristic_form(&e.rep).unwrap();
        b.check("charform(spin7) nonzero", t.norm() > 1e-6);
    }
    // minimality flag agrees with the curvature-space membership test
    for e in &ctx.entries {
        match is_minimal(&e.rep, ctx.opts.tol) {
            Ok(m) => b.check(
                &format!(
                    "{}: minimal {} vs projector-in-curvature-space {}",
                    e.name, m.minimal, m.one_g_in_curvature_space
                ),
                m.minimal == m.one_g_in_curvature_space,
            ),
            Err(err) => b.check(&format!("{}: {err}", e.name), false),
        }
    }
    b.finish()
}

fn item4_casimir_normalization(ctx: &Ctx) -> ItemResult {
    let mut b = ItemBuilder::new("4-casimir-normalization");
    for e in &ctx.entries {
        let n = e.n;
        let c1 = match casimir(&e.rep, 1) {
            Ok(c) => c,
            Err(err) => {
                b.check(&format!("{}: {err}", e.name), false);
                continue;
            }
        };
        let mu = 2.0 * e.rep.dim() as f64 / n as f64;
        let resid = (&c1 - DMatrix::identity(n, n) * mu).norm();
        b.check_residual(&format!("{}: C1 = (2 dim g / n) id", e.name), resid, 1e-9);
    }
    for name in ["so5", "so6"] {
        let e = ctx.entry(name);
        let m = binomial(e.n, 2);
        let c2 = casimir(&e.rep, 2).unwrap();
        let want = 2.0 * (e.n as f64 - 2.0);
        let resid = (&c2 - DMatrix::identity(m, m) * want).norm();
        b.check_residual(&format!("{name}: C2 = 2(n-2) id"), resid, 1e-9);
    }
    b.finish()
}

fn item5_identity_suite(ctx: &Ctx) -> ItemResult {
    let mut b = ItemBuilder::new("5-identity-suite");
    let trials = 100;
    let tol = 1e-9;

    // adjointness of the contraction, tight tolerance
    {
        let mut rng = ChaCha8Rng::seed_from_u64(ctx.opts.seed.wrapping_add(0x51));
        let n = 6;
        let mut worst = 0.0f64;
        for _ in 0..trials {
            let z = rng_form(&mut rng, n, 2);
            let t = rng_form(&mut rng, n, 4);
            let s = rng_form(&mut rng, n, 2);
            let lhs = contract_adjoint(&z, &t).unwrap().dot(&s);
            let rhs = t.dot(&z.wedge(&s).unwrap());
            worst = worst.max((lhs - rhs).abs());
        }
        b.check_residual("adjointness of contraction", worst, 1e-12);
    }

    // triple-product expansion of the adjoint contraction on wedge pairs
    {
        let mut rng = ChaCha8Rng::seed_from_u64(ctx.opts.seed.wrapping_add(0x52));
        let n = 6;
        let mut worst = 0.0f64;
        for _ in 0..trials {
            let a1 = rng_form(&mut rng, n, 2);
            let a2 = rng_form(&mut rng, n, 2);
            let a3 = rng_form(&mut rng, n, 2);
            let f1 = sharp(&a1).unwrap();
            let f2 = sharp(&a2).unwrap();
            let f3 = sharp(&a3).unwrap();
            let lhs = contract_adjoint(&a1, &a2.wedge(&a3).unwrap()).unwrap();
            let mmat =
                f3.matrix() * f1.matrix() * f2.matrix() + f2.matrix() * f1.matrix() * f3.matrix();
            let mform = flat(&crate::exterior::SkewMap::new(mmat).unwrap());
            let rhs = mform.add(&a3.scale(a1.dot(&a2))).add(&a2.scale(a3.dot(&a1)));
            worst = worst.max(lhs.sub(&rhs).norm());
        }
        b.check_residual("triple-product contraction identity", worst, tol);
    }

    // torsion 4-form evaluation identity and the bullet route
    {
        let mut rng = ChaCha8Rng::seed_from_u64(ctx.opts.seed.wrapping_add(0x53));
        let n = 6;
        let mut worst_loc = 0.0f64;
        let mut worst_bullet = 0.0f64;
        for _ in 0..trials {
            let t = rng_form(&mut rng, n, 3);
            let omega = omega_4form(&t).unwrap();
            let via_bullet = crate::exterior::bullet(&t, &t).unwrap().scale(0.5);
            worst_bullet = worst_bullet.max(omega.sub(&via_bullet).norm());
            let maps: Vec<_> = (0..n).map(|i| sharp(&t.contract_basis(i)).unwrap()).collect();
            for x in 0..n {
                for y in 0..n {
                    if x == y {
                        continue;
                    }
                    let lhs = omega.contract_basis(x).contract_basis(y);
                    let comm = flat(&maps[x].commutator(&maps[y]));
                    let txy = maps[x].matrix().column(y).clone_owned();
                    let rhs = comm.scale(-1.0).add(&t.contract_vector(&txy).unwrap());
                    worst_loc = worst_loc.max(lhs.sub(&rhs).norm());
                }
            }
        }
        b.check_residual("torsion 4-form evaluation identity", worst_loc, tol);
        b.check_residual("torsion 4-form equals half the bullet square", worst_bullet, tol);
    }

    // curvature tensor of a 3-form: Bianchi-flat with Ricci = 3x tensor Gram
    {
        let mut rng = ChaCha8Rng::seed_from_u64(ctx.opts.seed.wrapping_add(0x54));
        let n = 5;
        let mut worst_b1 = 0.0f64;
        let mut worst_ric = 0.0f64;
        for _ in 0..trials {
            let t = rng_form(&mut rng, n, 3);
            let q = rt_tensor(&t).unwrap();
            let b1 = bianchi_b1(&q);
            let b1norm: f64 = b1.iter().map(|f| f.norm().powi(2)).sum::<f64>().sqrt();
            worst_b1 = worst_b1.max(b1norm);
            let ric = ricci_contraction(&q);
            let mut gram = DMatrix::zeros(n, n);
            for x in 0..n {
                for y in 0..n {
                    // full tensor contraction: twice the form inner product
                    gram[(x, y)] = 6.0 * t.contract_basis(x).dot(&t.contract_basis(y));
                }
            }
            worst_ric = worst_ric.max((ric - gram).norm());
        }
        b.check_residual("curvature of a 3-form is Bianchi-flat", worst_b1, tol);
        b.check_residual("Ricci of the 3-form curvature equals 3x tensor Gram", worst_ric, tol);
    }

    // characteristic-form contraction identity per entry, plus the Casimir
    // eigenvalue relations on the kernel of the contraction map
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.opts.seed.wrapping_add(0x55));
    for e in &ctx.entries {
        let n = e.n;
        let m = binomial(n, 2);
        let tg = characteristic_form(&e.rep).unwrap();
        let c1 = casimir(&e.rep, 1).unwrap();
        let c2 = casimir(&e.rep, 2).unwrap();
        let mut worst = 0.0f64;
        for _ in 0..trials {
            let f = rng_form(&mut rng, n, 2);
            let lhs =
                if n >= 4 { contract_adjoint(&f, &tg).unwrap() } else { KForm::zero(n, 2) };
            let (fg, _) = e.rep.project_form(&f);
            let c2f_vec = &c2 * DVector::from_vec(f.coeffs().to_vec());
            let c2f = KForm::from_coeffs(n, 2, c2f_vec.iter().cloned().collect()).unwrap();
            let anti = casimir_anticommutator(&c1, &f);
            let rhs = fg.scale(2.0).add(&c2f).sub(&anti);
            worst = worst.max(lhs.sub(&rhs).norm());
        }
        b.check_residual(&format!("{}: characteristic contraction identity", e.name), worst, tol);

        // kernel of F -> L*_F T^g decomposes into Casimir eigenvectors
        let mu = 2.0 * e.rep.dim() as f64 / n as f64;
        let mut mat = DMatrix::zeros(m, m);
        if n >= 4 {
            for (col, pair) in crate::combin::subsets(n, 2).iter().enumerate() {
                let img = contract_adjoint(&KForm::basis(n, pair), &tg).unwrap();
                for (row, v) in img.coeffs().iter().enumerate() {
                    mat[(row, col)] = *v;
                }
            }
        }
        let (_, kernel) = rank_nullspace(&mat, ctx.opts.tol).unwrap();
        let mut worst_eig = 0.0f64;
        for r in 0..kernel.dim() {
            let f =
                KForm::from_coeffs(n, 2, kernel.basis().row(r).iter().cloned().collect()).unwrap();
            let (a, bperp) = e.rep.project_form(&f);
            let ca = &c2 * DVector::from_vec(a.coeffs().to_vec());
            let ra = (&ca - DVector::from_vec(a.coeffs().to_vec()) * (2.0 * mu - 2.0)).norm();
            let cb = &c2 * DVector::from_vec(bperp.coeffs().to_vec());
            let rb = (&cb - DVector::from_vec(bperp.coeffs().to_vec()) * (2.0 * mu)).norm();
            worst_eig = worst_eig.max(ra).max(rb);
        }
        b.check_residual(
            &format!("{}: Casimir eigenvalue relations on the contraction kernel", e.name),
            worst_eig,
            1e-7,
        );
    }
    b.finish()
}

fn item6_curvature_spaces(ctx: &Ctx) -> ItemResult {
    let mut b = ItemBuilder::new("6-curvature-spaces");
    for (name, nn) in [("so4", 4usize), ("so5", 5usize)] {
        let e = ctx.entry(name);
        let ks = curvature_space(&e.rep, ctx.opts.tol).unwrap();
        let expect = nn * nn * (nn * nn - 1) / 12;
        let exact = if ctx.with_exact() { Some(e.exact.curvature_space_dim()) } else { None };
        b.int(&format!("kspace-{name}"), ks.dim, exact, Some(expect));
    }
    {
        let e = ctx.entry("adjoint-su3");
        let ks = curvature_space(&e.rep, ctx.opts.tol).unwrap();
        let exact = if ctx.with_exact() { Some(e.exact.curvature_space_dim()) } else { None };
        b.int("kspace-adjoint-su3", ks.dim, exact, Some(1));
        if ks.dim == 1 {
            // definite Ricci, normalized to positive trace
            let ric = ricci_contraction(&ks.basis[0]);
            let sign = if ric.trace() >= 0.0 { 1.0 } else { -1.0 };
            let (eigenvalues, _) = jacobi_eigen(&(ric * sign));
            let min = eigenvalues.iter().cloned().fold(f64::INFINITY, f64::min);
            b.check(
                &format!("Ricci of the curvature generator positive definite (min eig {min:.3e})"),
                min > 1e-9,
            );
        }
        let berger = berger_algebra(&e.rep, ctx.opts.tol).unwrap();
        let exact_berger = if ctx.with_exact() { Some(e.exact.berger_dim()) } else { None };
        b.int("berger-adjoint-su3", berger.algebra.dim(), exact_berger, Some(e.rep.dim()));
        b.check("adjoint-su3 is its own Berger algebra", berger.is_holonomy_representation);
    }
    b.finish()
}

fn item7_holonomy_classifier(ctx: &Ctx) -> ItemResult {
    let mut b = ItemBuilder::new("7-holonomy-classifier");
    // adjoint case: the invariant 3-form of su(3)
    {
        let e = ctx.entry("adjoint-su3");
        let t = e.model_form("cartan").unwrap();
        match classify_3form(t, ctx.opts.seed, ctx.opts.tol) {
            Ok(rep) => {
                let exact = if ctx.with_exact() {
                    let sub = e.exact.contraction_subrep(e.exact_forms.get("cartan").unwrap());
                    Some((sub.closure_dim(), sub.trivial_dim()))
                } else {
                    None
                };
                b.int("cartan-su3-gstar-dim", rep.gstar.dim(), exact.map(|x| x.0), Some(8));
                b.int(
                    "cartan-su3-trivial-dim",
                    rep.splitting.trivial.dim(),
                    exact.map(|x| x.1),
                    Some(0),
                );
                b.check(
                    "cartan-su3 classifies as the adjoint case",
                    rep.factors.len() == 1 && rep.factors[0].label == HolonomyLabel::AdjointCartan,
                );
                b.check_residual("cartan-su3 split residual", rep.split_residual, 1e-9);
            }
            Err(err) => b.check(&format!("cartan-su3: {err}"), false),
        }
    }
    // generic rational 3-form on R^5
    {
        let mut t = KForm::zero(5, 3);
        t.set_coeff(&[0, 1, 2], 1.0);
        t.set_coeff(&[0, 3, 4], 2.0);
        t.set_coeff(&[1, 2, 3], -1.0);
        t.set_coeff(&[2, 3, 4], 1.0);
        t.set_coeff(&[0, 1, 4], 1.0);
        match classify_3form(&t, ctx.opts.seed, ctx.opts.tol) {
            Ok(rep) => {
                let exact = if ctx.with_exact() {
                    let mut te = ExactForm::zero(5, 3);
                    te.set_coeff(&[0, 1, 2], crate::linalg::rat_int(1));
                    te.set_coeff(&[0, 3, 4], crate::linalg::rat_int(2));
                    te.set_coeff(&[1, 2, 3], crate::linalg::rat_int(-1));
                    te.set_coeff(&[2, 3, 4], crate::linalg::rat_int(1));
                    te.set_coeff(&[0, 1, 4], crate::linalg::rat_int(1));
                    let dummy = crate::exact::ExactRep::standard(5, Vec::new());
                    Some(dummy.contraction_subrep(&te).closure_dim())
                } else {
                    None
                };
                b.int("generic-r5-gstar-dim", rep.gstar.dim(), exact, Some(10));
                b.check(
                    "generic R^5 form generates the full rotation algebra",
                    rep.factors.len() == 1 && rep.factors[0].label == HolonomyLabel::FullSo,
                );
            }
            Err(err) => b.check(&format!("generic-r5: {err}"), false),
        }
    }
    // two blocks plus a fixed direction
    {
        let t = KForm::basis(7, &[0, 1, 2]).add(&KForm::basis(7, &[3, 4, 5]));
        match classify_3form(&t, ctx.opts.seed, ctx.opts.tol) {
            Ok(rep) => {
                let exact = if ctx.with_exact() {
                    let mut te = ExactForm::zero(7, 3);
                    te.set_coeff(&[0, 1, 2], crate::linalg::rat_int(1));
                    te.set_coeff(&[3, 4, 5], crate::linalg::rat_int(1));
                    let dummy = crate::exact::ExactRep::standard(7, Vec::new());
                    let sub = dummy.contraction_subrep(&te);
                    Some((sub.closure_dim(), sub.trivial_dim(), sub.split_factor_dims()))
                } else {
                    None
                };
                b.int(
                    "blocks-r7-trivial-dim",
                    rep.splitting.trivial.dim(),
                    exact.as_ref().map(|x| x.1),
                    Some(1),
                );
                b.int(
                    "blocks-r7-gstar-dim",
                    rep.gstar.dim(),
                    exact.as_ref().map(|x| x.0),
                    Some(6),
                );
                let mut dims: Vec<usize> = rep.factors.iter().map(|f| f.subspace.dim()).collect();
                dims.sort_unstable();
                b.check(&format!("blocks-r7 factor dims {dims:?}"), dims == vec![3, 3]);
                if let Some((_, _, exact_split)) = &exact {
                    match exact_split {
                        Some(exact_dims) => b.check(
                            &format!("blocks-r7 exact factor dims {exact_dims:?}"),
                            *exact_dims == vec![3, 3],
                        ),
                        None => b.check("blocks-r7 exact splitting inconclusive", false),
                    }
                }
                b.check(
                    "blocks-r7 factors are full rotation algebras",
                    rep.factors.iter().all(|f| f.label == HolonomyLabel::FullSo),
                );
                b.check_residual("blocks-r7 split residual", rep.split_residual, 1e-9);
                for (i, f) in rep.factors.iter().enumerate() {
                    let local =
                        crate::holonomy::component_on_factor(&f.component, &f.subspace).unwrap();
                    b.check_residual(
                        &format!("blocks-r7 component {i} supported on its factor"),
                        f.component.sub(&local).norm(),
                        1e-9,
                    );
                }
            }
            Err(err) => b.check(&format!("blocks-r7: {err}"), false),
        }
    }
    b.finish()
}

fn item8_pluecker_nlie(ctx: &Ctx) -> ItemResult {
    let mut b = ItemBuilder::new("8-pluecker-nlie");
    let tol = ctx.opts.tol;
    // two orthogonal volume blocks in R^8
    {
        let t = KForm::basis(8, &[0, 1, 2, 3]).add(&KForm::basis(8, &[4, 5, 6, 7]));
        let plc = plc_check(&t, tol).unwrap();
        b.check("two-volume form satisfies the commutator relations", plc.satisfied);
        match decompose_plc_form(&t, ctx.opts.seed, tol) {
            Ok(rep) => {
                b.check("two-volume decomposition is decomposable", rep.decomposable);
                let mut dims: Vec<usize> = rep.factors.iter().map(|f| f.dim()).collect();
                dims.sort_unstable();
                b.check(&format!("two-volume factor dims {dims:?}"), dims == vec![4, 4]);
                b.check(
                    "two-volume factors are volume type",
                    rep.per_factor.iter().all(|f| f.is_volume),
                );
                if ctx.with_exact() {
                    let mut te = ExactForm::zero(8, 4);
                    te.set_coeff(&[0, 1, 2, 3], crate::linalg::rat_int(1));
                    te.set_coeff(&[4, 5, 6, 7], crate::linalg::rat_int(1));
                    let dummy = crate::exact::ExactRep::standard(8, Vec::new());
                    let sub = dummy.contraction_subrep(&te);
                    b.int(
                        "two-volume-trivial",
                        rep.trivial.dim(),
                        Some(sub.trivial_dim()),
                        Some(0),
                    );
                    match sub.split_factor_dims() {
                        Some(exact_dims) => b.check(
                            &format!("two-volume exact factor dims {exact_dims:?}"),
                            exact_dims == vec![4, 4],
                        ),
                        None => b.check("two-volume exact splitting inconclusive", false),
                    }
                }
            }
            Err(err) => b.check(&format!("two-volume: {err}"), false),
        }
    }
    // the Cayley form fails both the relations and the bracket identity
    {
        let e = ctx.entry("spin7");
        let cay = e.model_form("cayley").unwrap();
        let plc = plc_check(cay, tol).unwrap();
        b.check(
            &format!("cayley fails the commutator relations (residual {:.3e})", plc.max_residual),
            !plc.satisfied,
        );
        b.check(
            "cayley fails the classical relations",
            !classical_plucker_check(cay, tol).unwrap(),
        );
        let jac = nlie_jacobi_check(&nlie_bracket(cay).unwrap(), tol).unwrap();
        b.check(
            &format!("cayley fails the bracket identity (residual {:.3e})", jac.worst_residual),
            !jac.satisfied,
        );
    }
    // the volume bracket on R^4
    {
        let jac = nlie_jacobi_check(&nlie_bracket(&KForm::volume(4)).unwrap(), tol).unwrap();
        b.check("volume bracket on R^4 satisfies the identity", jac.satisfied);
    }
    // the commutator relations and the bracket identity agree on every form
    {
        let mut rng = ChaCha8Rng::seed_from_u64(ctx.opts.seed.wrapping_add(0x81));
        let mut tested: Vec<(String, KForm)> = vec![
            ("vol4".into(), KForm::volume(4)),
            ("vol3".into(), KForm::volume(3)),
            (
                "two-volumes-r8".into(),
                KForm::basis(8, &[0, 1, 2, 3]).add(&KForm::basis(8, &[4, 5, 6, 7])),
            ),
            ("two-blocks-r6".into(), KForm::basis(6, &[0, 1, 2]).add(&KForm::basis(6, &[3, 4, 5]))),
            ("cayley".into(), ctx.entry("spin7").model_form("cayley").unwrap().clone()),
            ("associative".into(), ctx.entry("g2").model_form("associative").unwrap().clone()),
            (
                "quaternionic".into(),
                ctx.entry("sp2sp1").model_form("quaternionic").unwrap().clone(),
            ),
            ("cartan-su3".into(), ctx.entry("adjoint-su3").model_form("cartan").unwrap().clone()),
            ("cartan-su2".into(), ctx.entry("adjoint-su2").model_form("cartan").unwrap().clone()),
            ("random-r5".into(), rng_form(&mut rng, 5, 3)),
        ];
        for (_, f) in tested.iter_mut() {
            let n = f.norm();
            if n > 0.0 {
                *f = f.scale(1.0 / n);
            }
        }
        for (name, f) in &tested {
            let plc = plc_check(f, tol).unwrap();
            let jac = nlie_jacobi_check(&nlie_bracket(f).unwrap(), tol).unwrap();
            b.check(
                &format!(
                    "{name}: relations {} vs bracket identity {} (residuals {:.2e}/{:.2e})",
                    plc.satisfied, jac.satisfied, plc.max_residual, jac.worst_residual
                ),
                plc.satisfied == jac.satisfied,
            );
            // contraction algebra sits inside the isotropy algebra whenever
            // the relations hold
            if plc.satisfied {
                let r = contraction_algebra(f, tol).unwrap();
                let iso = crate::rep::isotropy_algebra(f, tol).unwrap();
                let inside =
                    iso.as_subspace(tol).contains(&r.as_subspace(tol)).unwrap_or(false);
                b.check(&format!("{name}: contraction algebra inside isotropy"), inside);
            }
        }
    }
    b.finish()
}

fn item9_wedge_injectivity(ctx: &Ctx) -> ItemResult {
    let mut b = ItemBuilder::new("9-wedge-injectivity");
    let e = ctx.entry("u5");
    let n = e.n;
    let tg = characteristic_form(&e.rep).unwrap();
    b.check("charform(u5) nonzero", tg.norm() > 1e-6);
    let m2 = binomial(n, 2);
    let m6 = binomial(n, 6);
    let mut mat = DMatrix::zeros(m6, m2);
    for (col, pair) in crate::combin::subsets(n, 2).iter().enumerate() {
        let img = KForm::basis(n, pair).wedge(&tg).unwrap();
        for (row, v) in img.coeffs().iter().enumerate() {
            mat[(row, col)] = *v;
        }
    }
    let (rank, kernel) = rank_nullspace(&mat, ctx.opts.tol).unwrap();
    let exact_kernel = if ctx.with_exact() {
        let tg_exact = e.exact.charform();
        let mut rows: Vec<Vec<crate::linalg::Rat>> = vec![Vec::with_capacity(m2); m6];
        for pair in crate::combin::subsets(n, 2) {
            let img = ExactForm::basis(n, &pair).wedge(&tg_exact);
            for (row, v) in img.coeffs().iter().enumerate() {
                rows[row].push(v.clone());
            }
        }
        Some(m2 - exact_rank(&RationalMap::from_rows(rows)))
    } else {
        None
    };
    b.int("u5-wedge-kernel", kernel.dim(), exact_kernel, Some(0));
    b.note(format!("wedge map rank {rank} of {m2}"));
    b.finish()
}

fn item10_backend_agreement(ctx: &Ctx, items: &[ItemResult]) -> ItemResult {
    let mut b = ItemBuilder::new("10-backend-agreement");
    if !ctx.with_exact() {
        b.check("exact backend was not run (backend float)", false);
        return b.finish();
    }
    let mut compared = 0usize;
    for item in items {
        for out in &item.integers {
            if let Some(exact) = out.exact {
                compared += 1;
                b.check(
                    &format!("{}::{}: float {} vs exact {exact}", item.id, out.name, out.float),
                    out.float == exact,
                );
            }
        }
    }
    b.check(&format!("at least 20 cross-checked integers (got {compared})"), compared >= 20);
    b.note(format!("{compared} integers agree across backends"));
    b.finish()
}
