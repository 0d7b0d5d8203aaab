//! Command line front end: loads representations and forms from the catalog
//! or JSON files, runs the analyses, and emits human-readable or JSON
//! reports. Exit codes: 0 success, 1 verification failure or ambiguous
//! classification, 2 input error.

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use skewprol::catalog::{self, CatalogEntry};
use skewprol::exact::ExactRep;
use skewprol::exterior::{KForm, KFormJson};
use skewprol::holonomy::classify_3form;
use skewprol::pluecker::{
    classical_plucker_check, decompose_plc_form, nlie_bracket, nlie_jacobi_check, plc_check,
    PlueckerJson,
};
use skewprol::prolong::{
    characteristic_form, classify_representation, eps_perp_analysis, is_minimal,
    skew_prolongation,
};
use skewprol::rep::{casimir, LieSubalgebra, LieSubalgebraJson};
use skewprol::verify::{run_all, Backend, VerifyOptions};
use skewprol::{curvature, Error};

#[derive(Parser)]
#[command(
    name = "skewprol",
    version,
    about = "Prolongation, curvature and invariant-form analyses of orthogonal Lie algebra representations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Rank and residual tolerance.
    #[arg(long, global = true, default_value_t = skewprol::DEFAULT_TOL)]
    tol: f64,
    /// Seed for the randomized splitting certificates.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Backend for dimension computations: float, exact or both.
    #[arg(long, global = true, default_value = "float")]
    backend: String,
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Dimension and basis of the degree-p prolongation of a representation.
    Prolong {
        #[arg(long)]
        rep: String,
        #[arg(long, default_value_t = 3)]
        p: usize,
    },
    /// Dimension of the space of algebra-valued curvature tensors and the
    /// Berger subalgebra.
    Kspace {
        #[arg(long)]
        rep: String,
    },
    /// Split a 3-form's holonomy algebra and label the factors.
    Holonomy {
        #[arg(long)]
        form: String,
    },
    /// Commutator and classical decomposability relations, splitting, and
    /// the n-ary bracket identity.
    Pluecker {
        #[arg(long)]
        form: String,
        /// Force the generalized bracket identity check.
        #[arg(long)]
        nlie: bool,
    },
    /// Characteristic 4-form and the minimality flags.
    Charform {
        #[arg(long)]
        rep: String,
    },
    /// Casimir operator on degree-k forms.
    Casimir {
        #[arg(long)]
        rep: String,
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
    /// Kernel/cokernel analysis of the contraction-projection map.
    Epsperp {
        #[arg(long)]
        rep: String,
    },
    /// Full structural classification of a representation by factors.
    Classify {
        #[arg(long)]
        rep: String,
    },
    /// Run the whole verification matrix.
    Verify,
    /// List or dump catalog entries.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    List,
    Dump { name: String },
}

struct LoadedRep {
    rep: LieSubalgebra,
    exact: Option<ExactRep>,
    source: String,
}

fn load_rep(spec: &str, tol: f64, backend: Backend) -> Result<LoadedRep, Error> {
    if let Some(name) = spec.strip_prefix("catalog:") {
        let entry = catalog::build(name)?;
        return Ok(LoadedRep { rep: entry.rep, exact: Some(entry.exact), source: spec.into() });
    }
    if let Some(path) = spec.strip_prefix("file:") {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Input(format!("cannot read {path}: {e}")))?;
        let value: Value = serde_json::from_str(&text)
            .map_err(|e| Error::Input(format!("{path}: invalid JSON: {e}")))?;
        let rep_value = value.get("rep").cloned().unwrap_or(value);
        let j: LieSubalgebraJson = serde_json::from_value(rep_value)
            .map_err(|e| Error::Input(format!("{path}: not a subalgebra record: {e}")))?;
        let rep = LieSubalgebra::from_json(&j, tol)?;
        if matches!(backend, Backend::Exact | Backend::Both) {
            return Err(Error::Input(
                "exact backend needs a catalog representation; file inputs run float only".into(),
            ));
        }
        return Ok(LoadedRep { rep, exact: None, source: spec.into() });
    }
    Err(Error::Input(format!(
        "representation source '{spec}' must start with catalog: or file:"
    )))
}

fn load_form(spec: &str) -> Result<KForm, Error> {
    if let Some(rest) = spec.strip_prefix("catalog:") {
        let (name, form) = rest.split_once(':').ok_or_else(|| {
            Error::Input(format!("catalog form source '{spec}' must be catalog:<entry>:<form>"))
        })?;
        let entry = catalog::build(name)?;
        return entry.model_form(form).cloned();
    }
    if let Some(path) = spec.strip_prefix("file:") {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Input(format!("cannot read {path}: {e}")))?;
        let j: KFormJson = serde_json::from_str(&text)
            .map_err(|e| Error::Input(format!("{path}: not a form record: {e}")))?;
        return KForm::from_json(&j);
    }
    Err(Error::Input(format!("form source '{spec}' must start with catalog: or file:")))
}

fn entry_json(e: &CatalogEntry) -> Value {
    let forms: serde_json::Map<String, Value> = e
        .model_forms
        .iter()
        .map(|(k, v)| (k.clone(), serde_json::to_value(v.to_json()).unwrap()))
        .collect();
    json!({
        "schema": "1",
        "name": e.name,
        "n": e.n,
        "dim": e.rep.dim(),
        "closure_residual": e.rep.closure_residual(),
        "rep": serde_json::to_value(e.rep.to_json()).unwrap(),
        "model_forms": forms,
    })
}

fn run(cli: Cli) -> Result<i32, Error> {
    let backend: Backend = cli.backend.parse()?;
    if cli.tol <= 0.0 {
        return Err(Error::Input("tolerance must be positive".into()));
    }
    let tol = cli.tol;
    match cli.command {
        Command::Prolong { rep, p } => {
            let loaded = load_rep(&rep, tol, backend)?;
            let exact = match backend {
                Backend::Float => None,
                _ => loaded.exact.as_ref(),
            };
            let report = skew_prolongation(&loaded.rep, p, exact)?;
            if cli.json {
                let mut v = serde_json::to_value(report.to_json()).unwrap();
                v["schema"] = json!("1");
                v["rep"] = json!(loaded.source);
                println!("{}", serde_json::to_string_pretty(&v).unwrap());
            } else {
                println!(
                    "representation: {} (n = {}, dim = {})",
                    loaded.source,
                    loaded.rep.n(),
                    loaded.rep.dim()
                );
                println!("prolongation degree {p}: dim {}", report.dim);
                println!("classification: {:?}", report.classification);
                println!("exact backend agreement: {}", report.exact_confirmed);
            }
            Ok(0)
        }
        Command::Kspace { rep } => {
            let loaded = load_rep(&rep, tol, backend)?;
            let ks = curvature::curvature_space(&loaded.rep, tol)?;
            let berger = curvature::berger_algebra(&loaded.rep, tol)?;
            let exact_dim = match (backend, &loaded.exact) {
                (Backend::Float, _) | (_, None) => None,
                (_, Some(ex)) => Some(ex.curvature_space_dim()),
            };
            if let Some(ed) = exact_dim {
                if ed != ks.dim {
                    return Err(Error::Classify(format!(
                        "backend disagreement: float curvature dim {} vs exact {ed}",
                        ks.dim
                    )));
                }
            }
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "schema": "1",
                        "rep": loaded.source,
                        "curvature_space_dim": ks.dim,
                        "exact_confirmed": exact_dim.is_some(),
                        "berger_dim": berger.algebra.dim(),
                        "is_holonomy_representation": berger.is_holonomy_representation,
                    }))
                    .unwrap()
                );
            } else {
                println!("curvature space dim: {}", ks.dim);
                println!(
                    "Berger subalgebra dim: {} (holonomy representation: {})",
                    berger.algebra.dim(),
                    berger.is_holonomy_representation
                );
            }
            Ok(0)
        }
        Command::Holonomy { form } => {
            let t = load_form(&form)?;
            let report = classify_3form(&t, cli.seed, tol)?;
            if cli.json {
                let mut v = serde_json::to_value(report.to_json()).unwrap();
                v["schema"] = json!("1");
                println!("{}", serde_json::to_string_pretty(&v).unwrap());
            } else {
                println!("holonomy algebra dim: {}", report.gstar.dim());
                println!("trivial part dim: {}", report.splitting.trivial.dim());
                for (i, f) in report.factors.iter().enumerate() {
                    println!(
                        "factor {i}: dim {} label {:?} algebra dim {}",
                        f.subspace.dim(),
                        f.label,
                        f.algebra_dim
                    );
                }
                println!("split residual: {:.3e}", report.split_residual);
            }
            Ok(0)
        }
        Command::Pluecker { form, nlie } => {
            let t = load_form(&form)?;
            let plc = plc_check(&t, tol)?;
            let classical = classical_plucker_check(&t, tol)?;
            let (factors, decomposable) = if plc.satisfied {
                let rep = decompose_plc_form(&t, cli.seed, tol)?;
                (rep.per_factor, rep.decomposable)
            } else {
                (Vec::new(), false)
            };
            let (jacobi, jacobi_residual) = if nlie || t.degree() >= 3 {
                let check = nlie_jacobi_check(&nlie_bracket(&t)?, tol)?;
                (Some(check.satisfied), Some(check.worst_residual))
            } else {
                (None, None)
            };
            let report = PlueckerJson {
                plc: plc.satisfied,
                classical,
                factors,
                decomposable,
                worst_residual: plc.max_residual,
                jacobi,
                jacobi_residual,
            };
            if cli.json {
                let mut v = serde_json::to_value(&report).unwrap();
                v["schema"] = json!("1");
                println!("{}", serde_json::to_string_pretty(&v).unwrap());
            } else {
                println!(
                    "commutator relations: {} (worst residual {:.3e})",
                    report.plc, report.worst_residual
                );
                println!("classical relations (simple form): {}", report.classical);
                if report.plc {
                    println!("factors: {:?}", report.factors);
                    println!("decomposable: {}", report.decomposable);
                }
                if let Some(j) = report.jacobi {
                    println!(
                        "bracket identity (arity {}): {} (worst residual {:.3e})",
                        t.degree() - 1,
                        j,
                        report.jacobi_residual.unwrap()
                    );
                }
            }
            Ok(0)
        }
        Command::Charform { rep } => {
            let loaded = load_rep(&rep, tol, backend)?;
            let t = characteristic_form(&loaded.rep)?;
            let minimal = is_minimal(&loaded.rep, tol)?;
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "schema": "1",
                        "rep": loaded.source,
                        "charform": serde_json::to_value(t.to_json()).unwrap(),
                        "norm": t.norm(),
                        "minimal": minimal.minimal,
                        "projector_is_curvature": minimal.one_g_in_curvature_space,
                    }))
                    .unwrap()
                );
            } else {
                println!("characteristic form norm: {:.6e}", t.norm());
                println!("minimal: {}", minimal.minimal);
                println!("projector is a curvature tensor: {}", minimal.one_g_in_curvature_space);
            }
            Ok(0)
        }
        Command::Casimir { rep, k } => {
            let loaded = load_rep(&rep, tol, backend)?;
            let c = casimir(&loaded.rep, k)?;
            let m = c.nrows();
            let mu = if m > 0 { c.trace() / m as f64 } else { 0.0 };
            let dev = (&c - nalgebra::DMatrix::identity(m, m) * mu).norm();
            let scalar = dev <= tol * c.norm().max(1.0);
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "schema": "1",
                        "rep": loaded.source,
                        "k": k,
                        "dimension": m,
                        "mean_eigenvalue": mu,
                        "is_scalar": scalar,
                        "deviation_from_scalar": dev,
                    }))
                    .unwrap()
                );
            } else {
                println!("Casimir on degree-{k} forms: {m}x{m}");
                println!("mean eigenvalue: {mu:.9}");
                println!("scalar: {scalar} (deviation {dev:.3e})");
            }
            Ok(0)
        }
        Command::Epsperp { rep } => {
            let loaded = load_rep(&rep, tol, backend)?;
            let exact = match backend {
                Backend::Float => None,
                _ => loaded.exact.as_ref(),
            };
            let r = eps_perp_analysis(&loaded.rep, exact)?;
            if cli.json {
                let mut v = serde_json::to_value(&r).unwrap();
                v["schema"] = json!("1");
                v["rep"] = json!(loaded.source);
                println!("{}", serde_json::to_string_pretty(&v).unwrap());
            } else {
                println!("kernel dim: {}", r.kernel_dim);
                println!("cokernel dim: {}", r.coker_dim);
                println!("isomorphism: {}", r.is_isomorphism);
                println!(
                    "dim g-perp: {} (matches (n-1)(n-2)/6: {})",
                    r.dim_gperp, r.dim_formula_holds
                );
            }
            Ok(0)
        }
        Command::Classify { rep } => {
            let loaded = load_rep(&rep, tol, backend)?;
            let c = classify_representation(&loaded.rep, cli.seed, tol)?;
            if cli.json {
                let factors: Vec<Value> = c
                    .factors
                    .iter()
                    .map(|f| {
                        json!({
                            "dim": f.subspace.dim(),
                            "ideal_dim": f.ideal_dim,
                            "prolongation_dim": f.prolongation_dim,
                            "labels": f.labels,
                        })
                    })
                    .collect();
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "schema": "1",
                        "rep": loaded.source,
                        "trivial_dim": c.splitting.trivial.dim(),
                        "factors": factors,
                        "global_prolongation_dim": c.global_prolongation_dim,
                        "factor_prolongation_sum": c.factor_dim_sum,
                    }))
                    .unwrap()
                );
            } else {
                println!("trivial part dim: {}", c.splitting.trivial.dim());
                for (i, f) in c.factors.iter().enumerate() {
                    println!(
                        "factor {i}: dim {} ideal dim {} prolongation dim {} labels {:?}",
                        f.subspace.dim(),
                        f.ideal_dim,
                        f.prolongation_dim,
                        f.labels
                    );
                }
                println!(
                    "global prolongation dim: {} (blockwise sum {})",
                    c.global_prolongation_dim, c.factor_dim_sum
                );
            }
            Ok(0)
        }
        Command::Verify => {
            let opts = VerifyOptions { backend, seed: cli.seed, tol };
            let items = run_all(&opts)?;
            let all_passed = items.iter().all(|i| i.passed);
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "schema": "1",
                        "passed": all_passed,
                        "items": items,
                    }))
                    .unwrap()
                );
            } else {
                for item in &items {
                    let status = if item.passed { "PASS" } else { "FAIL" };
                    println!("[{status}] {}: {}", item.id, item.detail);
                }
                println!("{}", if all_passed { "all items passed" } else { "FAILURES PRESENT" });
            }
            Ok(if all_passed { 0 } else { 1 })
        }
        Command::Catalog { action } => match action {
            CatalogAction::List => {
                if cli.json {
                    let list: Vec<Value> = catalog::names()
                        .iter()
                        .map(|n| {
                            let e = catalog::build(n).unwrap();
                            json!({
                                "name": e.name,
                                "n": e.n,
                                "dim": e.rep.dim(),
                                "model_forms": e.model_forms.keys().collect::<Vec<_>>(),
                            })
                        })
                        .collect();
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&json!({"schema": "1", "entries": list}))
                            .unwrap()
                    );
                } else {
                    for n in catalog::names() {
                        let e = catalog::build(n).unwrap();
                        let forms: Vec<&String> = e.model_forms.keys().collect();
                        println!(
                            "{:<14} n = {:<3} dim = {:<3} forms: {forms:?}",
                            e.name,
                            e.n,
                            e.rep.dim()
                        );
                    }
                }
                Ok(0)
            }
            CatalogAction::Dump { name } => {
                let e = catalog::build(&name)?;
                println!("{}", serde_json::to_string_pretty(&entry_json(&e)).unwrap());
                Ok(0)
            }
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(Error::AmbiguousCluster(msg)) => {
            eprintln!("status: ambiguous");
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(e @ Error::Classify(_)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
