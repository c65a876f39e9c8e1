use clap::{Parser, Subcommand};
use holonomy_lab::analysis::{analyze, AnalyzeOptions};
use holonomy_lab::modelfile::{load_model, parse_rational};
use holonomy_lab::selftest::{builtin_corpus, load_corpus, run_selftest};
use holonomy_lab::CliError;
use num::rational::BigRational;
use std::path::PathBuf;

#[derive(Parser)]
#[command(name = "holonomy-lab", version, about = "Exact holonomy toolkit for contact sub-Riemannian and pseudo-Hermitian structures")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full pipeline on a model file: Reeb, torsion, connections, curvature,
    /// identity suite, holonomy, classification, spinors.
    Analyze {
        path: PathBuf,
        /// Covariant-derivative deepening depth (0 = escalate until stable).
        #[arg(long, default_value_t = 0)]
        depth: usize,
        /// Evaluation point "r1,r2,...", defaults to the model base point.
        #[arg(long)]
        point: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Sub-symmetric quadruples and the model zoo.
    Subsym {
        #[command(subcommand)]
        kind: SubsymKind,
    },
    /// Spinor module: annihilator of a candidate holonomy algebra.
    Spin {
        #[arg(long)]
        m: usize,
        /// one of: u, su, so-lagrangian, so-u1, sp, sp-u1
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        json: bool,
    },
    /// Parallel transport around a coordinate square, and θ-transport.
    Transport {
        path: PathBuf,
        /// Frame-direction plane "a,b" (1-based indices).
        #[arg(long)]
        square: String,
        /// Side length (rational, e.g. "1/10").
        #[arg(long, default_value = "1/10")]
        side: String,
        #[arg(long, default_value_t = 400)]
        steps: usize,
        /// adapted | wagner
        #[arg(long, default_value = "adapted")]
        connection: String,
        /// Also report exp(−∮θ) for the loop.
        #[arg(long)]
        theta: bool,
        #[arg(long)]
        json: bool,
    },
    /// Golden-corpus self test: every identity and theorem check.
    Selftest {
        /// Directory of model JSON files (falls back to the built-in corpus).
        #[arg(long, default_value = "models")]
        models_dir: PathBuf,
        #[arg(long)]
        filter: Option<String>,
        #[arg(long)]
        json: bool,
        /// Test fixture: corrupt one Wagner endomorphism to demonstrate
        /// that the identity ledger catches it.
        #[arg(long, hide = true)]
        inject_sign_bug: bool,
    },
}

#[derive(Subcommand)]
enum SubsymKind {
    /// Heisenberg quadruple H^{2m+1}.
    Heisenberg {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        json: bool,
    },
    /// S¹-bundle over CP^m (the shipped HRSS instance, 𝔤 = su(m+1)).
    CpnSphere {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        json: bool,
    },
    /// The two-parameter torsion family of §-zoo quadruples.
    TorsionFamily {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        json: bool,
    },
    /// Generic S¹-bundle over a product of HRSS factors from a JSON file.
    Hrss {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Render the stored holonomy table rows and diff against the fixture.
    Table1 {
        #[arg(long, default_value_t = 3)]
        m: usize,
        #[arg(long)]
        json: bool,
    },
    /// Killing fingerprint and zoo match of a structure-constant table file.
    Fingerprint {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        json: bool,
    },
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(e.exit_code());
        }
    }
}

fn parse_point(s: &str) -> Result<Vec<BigRational>, CliError> {
    s.split(',').map(|t| parse_rational(t.trim())).collect()
}

fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Analyze { path, depth, point, json } => {
            let model = load_model(&path)?;
            let opts = AnalyzeOptions {
                depth,
                point: point.as_deref().map(parse_point).transpose()?,
            };
            let report = analyze(model, &opts)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report).unwrap());
            } else {
                print_report(&report);
            }
            Ok(0)
        }
        Command::Subsym { kind } => cmd_subsym(kind),
        Command::Spin { m, algebra, json } => cmd_spin(m, &algebra, json),
        Command::Transport { path, square, side, steps, connection, theta, json } => {
            cmd_transport(&path, &square, &side, steps, &connection, theta, json)
        }
        Command::Selftest { models_dir, filter, json, inject_sign_bug } => {
            let corpus = if models_dir.is_dir() {
                load_corpus(&models_dir)?
            } else {
                builtin_corpus()?
            };
            let report = run_selftest(corpus, filter, inject_sign_bug)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report).unwrap());
            } else {
                for c in &report.checks {
                    println!("[{}] {} {}", c.status, c.name, c.detail);
                }
                println!("selftest: {} passed, {} failed", report.passed, report.failed);
            }
            Ok(if report.failed == 0 { 0 } else { 3 })
        }
    }
}

fn print_report(r: &holonomy_lab::report::Report) {
    println!("model: {} (base point {:?})", r.model, r.base_point);
    println!(
        "flags: contact={} codazzi={} pseudo_hermitian={} pseudo_einstein={:?} locally_subsym_candidate={}",
        r.flags.contact_ok, r.flags.codazzi, r.flags.pseudo_hermitian, r.flags.pseudo_einstein, r.flags.locally_subsym_candidate
    );
    for h in &r.holonomy {
        println!(
            "holonomy[{}]: dim {} label {} (depth {}, stabilized {})",
            h.connection, h.dim, h.label, h.depth_used, h.stabilized
        );
    }
    println!("wagner = horizontal: {}", r.wagner_equals_horizontal);
    println!(
        "dichotomy: codazzi={} dims ({}, {}) gap {}",
        r.dichotomy.codazzi, r.dichotomy.dim_horizontal, r.dichotomy.dim_adapted, r.dichotomy.dim_difference
    );
    println!("normalization: <dθ, dθ^{{-1}}> = {}", r.normalization.dtheta_pairing);
    if let Some(jp) = &r.normalization.j_bivector_pairing {
        println!("normalization: <dθ, J> = {jp}");
    }
    if let Some(cr) = &r.cr {
        println!(
            "cr: nijenhuis_zero={} g=dθ(·,J·)={} tw=adapted={} τJ+Jτ=0={} scal={} pseudo_einstein={}",
            cr.nijenhuis_zero, cr.g_matches_dtheta_j, cr.tw_equals_adapted, cr.webster_torsion_anticommutes_j, cr.webster_scalar, cr.pseudo_einstein
        );
    }
    if let Some(sp) = &r.spinor {
        println!(
            "spinors: {} exists={} expected={:?} computed={:?}",
            sp.case, sp.exists, sp.expected_dim, sp.computed_dim
        );
    }
    let mut proved = 0;
    let mut sampled = 0;
    for e in &r.identity_ledger {
        match e.status.as_str() {
            "PROVED" => proved += 1,
            "SAMPLED" => sampled += 1,
            _ => println!("identity {}: {}", e.name, e.status),
        }
    }
    println!("identities: {proved} PROVED, {sampled} SAMPLED, 0 FAILED");
}

fn cmd_subsym(kind: SubsymKind) -> Result<i32, CliError> {
    use subsym::{zoo, ZooKind};
    let print_zoo = |z: &subsym::ZooResult, json: bool| {
        if json {
            println!("{}", serde_json::to_string_pretty(&zoo_json(z)).unwrap());
        } else {
            println!("{}", zoo_text(z));
        }
    };
    match kind {
        SubsymKind::Heisenberg { m, json } => {
            let z = zoo(&ZooKind::Heisenberg { m }).map_err(map_subsym)?;
            print_zoo(&z, json);
            Ok(0)
        }
        SubsymKind::CpnSphere { m, json } => {
            let z = zoo(&ZooKind::CpnSphere { m }).map_err(map_subsym)?;
            print_zoo(&z, json);
            Ok(0)
        }
        SubsymKind::TorsionFamily { m, lambda, mu, json } => {
            let z = zoo(&ZooKind::TorsionFamily {
                m,
                lambda: parse_rational(&lambda)?,
                mu: parse_rational(&mu)?,
            })
            .map_err(map_subsym)?;
            print_zoo(&z, json);
            Ok(0)
        }
        SubsymKind::Hrss { file, json } => {
            let data = read_hrss(&file)?;
            let z = zoo(&ZooKind::HrssCircle(data)).map_err(map_subsym)?;
            print_zoo(&z, json);
            Ok(0)
        }
        SubsymKind::Table1 { m, json } => {
            let fam = |l: i64, mu: i64| ZooKind::TorsionFamily {
                m,
                lambda: BigRational::from_integer(l.into()),
                mu: BigRational::from_integer(mu.into()),
            };
            let kinds = vec![
                ZooKind::Heisenberg { m },
                ZooKind::CpnSphere { m },
                fam(1, 2),
                fam(1, -2),
                fam(2, 1),
                fam(1, 0),
            ];
            let mut results = Vec::new();
            for k in kinds {
                results.push((m, zoo(&k).map_err(map_subsym)?));
            }
            let rows = subsym::table1_report(&results).map_err(map_subsym)?;
            if json {
                let v: Vec<serde_json::Value> = rows
                    .iter()
                    .map(|r| {
                        serde_json::json!({
                            "row": r.row_id,
                            "tau_nonzero": r.tau_nonzero,
                            "space": r.space,
                            "hol_horizontal": format!("{:?}", r.hol_horizontal),
                            "hol_adapted": format!("{:?}", r.hol_adapted),
                            "dims": [r.dims.0, r.dims.1],
                        })
                    })
                    .collect();
                println!("{}", serde_json::to_string_pretty(&v).unwrap());
            } else {
                for r in rows {
                    println!(
                        "{:<22} τ≠0:{:<5} hol(∇)={:?} hol(∇^τ)={:?} dims {:?}",
                        r.row_id, r.tau_nonzero, r.hol_horizontal, r.hol_adapted, r.dims
                    );
                }
            }
            Ok(0)
        }
        SubsymKind::Fingerprint { file, m, json } => {
            let table = read_table(&file)?;
            let fp = liealg::killing_fingerprint(&table);
            let zm = liealg::match_zoo(&fp, m).map_err(|e| CliError::Internal(e.to_string()))?;
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&serde_json::json!({
                        "dim": fp.dim,
                        "signature": [fp.signature.0, fp.signature.1, fp.signature.2],
                        "derived_dims": fp.derived_dims,
                        "center_dim": fp.center_dim,
                        "radical_dim": fp.radical_dim,
                        "semisimple": fp.semisimple,
                        "zoo_match": format!("{zm}"),
                    }))
                    .unwrap()
                );
            } else {
                println!(
                    "dim {} signature {:?} derived {:?} center {} radical {} semisimple {} match {}",
                    fp.dim, fp.signature, fp.derived_dims, fp.center_dim, fp.radical_dim, fp.semisimple, zm
                );
            }
            Ok(0)
        }
    }
}

fn zoo_json(z: &subsym::ZooResult) -> serde_json::Value {
    serde_json::json!({
        "kind": z.kind_name,
        "tau_star_zero": z.tau_star_zero,
        "scal_tau": z.scal_tau.to_string(),
        "hol_horizontal": {"dim": z.hol_horizontal_dim, "label": format!("{:?}", z.hol_horizontal_label)},
        "hol_adapted": {"dim": z.hol_adapted_dim, "label": format!("{:?}", z.hol_adapted_label)},
        "killing_signature": [z.fingerprint.signature.0, z.fingerprint.signature.1, z.fingerprint.signature.2],
        "zoo_match": format!("{}", z.zoo_match),
        "jacobi_residual_zero": z.jacobi_residual_zero,
    })
}

fn zoo_text(z: &subsym::ZooResult) -> String {
    format!(
        "{}\n  τ* = 0: {}\n  scal^τ = {}\n  hol(∇) dim {} [{:?}]   hol(∇^τ) dim {} [{:?}]\n  Killing signature {:?}\n  isomorphism match: {}",
        z.kind_name,
        z.tau_star_zero,
        z.scal_tau,
        z.hol_horizontal_dim,
        z.hol_horizontal_label,
        z.hol_adapted_dim,
        z.hol_adapted_label,
        z.fingerprint.signature,
        z.zoo_match
    )
}

fn map_subsym(e: subsym::SubsymError) -> CliError {
    match e {
        subsym::SubsymError::ParamDomain(s) => CliError::Validation(format!("PARAM_DOMAIN: {s}")),
        subsym::SubsymError::JacobiFail { residual, triple } => {
            CliError::Validation(format!("JACOBI_FAIL at {triple:?} (residual {residual})"))
        }
        subsym::SubsymError::ValidationFail(s) => CliError::TheoremViolation(s),
        subsym::SubsymError::Mismatch(s) => CliError::TheoremViolation(format!("MISMATCH: {s}")),
        other => CliError::Validation(other.to_string()),
    }
}

fn cmd_spin(m: usize, algebra: &str, json: bool) -> Result<i32, CliError> {
    let label = spinrep::EmbedLabel::parse(algebra)
        .ok_or_else(|| CliError::Validation(format!("unknown algebra `{algebra}`")))?;
    let rep = spinrep::SpinRep::build(m).map_err(|e| CliError::Validation(e.to_string()))?;
    let h = spinrep::embed_algebra(label, m).map_err(|e| CliError::Validation(e.to_string()))?;
    let r = spinrep::annihilator(&rep, &h).map_err(|e| CliError::Internal(e.to_string()))?;
    let wd = spinrep::weight_decomposition(&rep).map_err(|e| CliError::Internal(e.to_string()))?;
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&serde_json::json!({
                "m": m,
                "algebra": format!("{label:?}"),
                "algebra_dim": h.len(),
                "annihilator_dim": r.dim,
                "level_dims": r.level_dims,
                "concentrated": r.concentrated,
                "rho_j_spectrum": wd.levels.iter().map(|l| serde_json::json!({
                    "k": l.k,
                    "eigenvalue": format!("{}i", l.eigenvalue_im),
                    "multiplicity": l.multiplicity,
                })).collect::<Vec<_>>(),
            }))
            .unwrap()
        );
    } else {
        println!("Δ_{} = 2^{} = {} dimensional; algebra {label:?} (dim {})", 2 * m, m, rep.dim_delta, h.len());
        println!("annihilator dim {}", r.dim);
        println!("level profile (Λ^k): {:?} concentrated={}", r.level_dims, r.concentrated);
        let spec: Vec<String> = wd
            .levels
            .iter()
            .map(|l| format!("Λ^{}: {}i ×{}", l.k, l.eigenvalue_im, l.multiplicity))
            .collect();
        println!("ρ(J) spectrum: {}", spec.join(", "));
    }
    Ok(0)
}

fn cmd_transport(
    path: &std::path::Path,
    square: &str,
    side: &str,
    steps: usize,
    connection: &str,
    theta: bool,
    json: bool,
) -> Result<i32, CliError> {
    let model = load_model(path)?;
    let geo = contactgeo::Geometry::build(model).map_err(|e| CliError::Validation(e.to_string()))?;
    let (a, b) = square
        .split_once(',')
        .ok_or_else(|| CliError::Parse("--square wants `a,b`".into()))?;
    let a: usize = a.trim().parse().map_err(|_| CliError::Parse("bad frame index".into()))?;
    let b: usize = b.trim().parse().map_err(|_| CliError::Parse("bad frame index".into()))?;
    let d = geo.model.dim_frame();
    if a == 0 || b == 0 || a > d || b > d || a == b {
        return Err(CliError::Validation(format!("square indices must be distinct in 1..={d}")));
    }
    let s = parse_rational(side)?;
    let p = geo.model.base_point.clone();
    let frame_at = |idx: usize| -> Result<Vec<BigRational>, CliError> {
        geo.model.frame[idx]
            .comps
            .iter()
            .map(|c| c.eval(&p).map_err(|e| CliError::Validation(e.to_string())))
            .collect()
    };
    let u = frame_at(a - 1)?;
    let v = frame_at(b - 1)?;
    let path = holonomy::LoopPath::square(&p, &u, &v, &s).map_err(|e| CliError::Validation(e.to_string()))?;
    let conn = match connection {
        "adapted" => &geo.adapted,
        "wagner" => &geo.wagner,
        other => return Err(CliError::Validation(format!("connection must be adapted|wagner, got `{other}`"))),
    };
    let t = holonomy::parallel_transport(&geo, conn, &path, steps)
        .map_err(|e| CliError::Internal(e.to_string()))?;
    let lg = holonomy::log_near_identity(&t);
    let theta_out = if theta {
        Some(holonomy::theta_transport(&geo, &path).map_err(|e| CliError::Internal(e.to_string()))?)
    } else {
        None
    };
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&serde_json::json!({
                "model": geo.model.name,
                "square": [a, b],
                "side": s.to_string(),
                "steps": steps,
                "connection": connection,
                "transport": t,
                "log_transport": lg,
                "theta": theta_out.as_ref().map(|tt| serde_json::json!({
                    "integral": tt.integral,
                    "integral_exact": tt.integral_exact.as_ref().map(|r| r.to_string()),
                    "factor": tt.factor,
                })),
            }))
            .unwrap()
        );
    } else {
        println!("transport around (e_{a}, e_{b}) square of side {s} ({} steps, {connection}):", steps);
        for row in &t {
            println!("  {:?}", row);
        }
        println!("log(transport):");
        for row in &lg {
            println!("  {:?}", row);
        }
        if let Some(tt) = theta_out {
            println!(
                "∮θ = {} (exact: {:?}), exp(−∮θ) = {}",
                tt.integral,
                tt.integral_exact.map(|r| r.to_string()),
                tt.factor
            );
        }
    }
    Ok(0)
}

fn read_table(path: &std::path::Path) -> Result<liealg::LieAlgebraTable, CliError> {
    #[derive(serde::Deserialize)]
    struct TableFile {
        dim: usize,
        constants: Vec<(usize, usize, usize, String)>,
    }
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Parse(format!("cannot read {}: {e}", path.display())))?;
    let doc: TableFile = serde_json::from_str(&text).map_err(|e| CliError::Parse(e.to_string()))?;
    let entries = doc
        .constants
        .iter()
        .map(|(i, j, k, c)| Ok((*i, *j, *k, parse_rational(c)?)))
        .collect::<Result<Vec<_>, CliError>>()?;
    liealg::LieAlgebraTable::from_sparse(doc.dim, &entries, true)
        .map_err(|e| CliError::Validation(e.to_string()))
}

fn read_hrss(path: &std::path::Path) -> Result<subsym::HrssData, CliError> {
    #[derive(serde::Deserialize)]
    struct FactorFile {
        h_dim: usize,
        h_constants: Vec<(usize, usize, usize, String)>,
        rep: Vec<Vec<Vec<String>>>,
        curvature: Vec<Vec<Vec<String>>>,
        j_element: Vec<String>,
        b_weight: String,
    }
    #[derive(serde::Deserialize)]
    struct HrssFile {
        factors: Vec<FactorFile>,
    }
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Parse(format!("cannot read {}: {e}", path.display())))?;
    let doc: HrssFile = serde_json::from_str(&text).map_err(|e| CliError::Parse(e.to_string()))?;
    let mut factors = Vec::new();
    for f in doc.factors {
        let entries = f
            .h_constants
            .iter()
            .map(|(i, j, k, c)| Ok((*i, *j, *k, parse_rational(c)?)))
            .collect::<Result<Vec<_>, CliError>>()?;
        let h_table = liealg::LieAlgebraTable::from_sparse(f.h_dim, &entries, true)
            .map_err(|e| CliError::Validation(e.to_string()))?;
        let rep = f
            .rep
            .iter()
            .map(|rows| {
                let sc: Result<Vec<Vec<numkit::Scalar>>, CliError> = rows
                    .iter()
                    .map(|r| r.iter().map(|s| Ok(numkit::Scalar::Rat(parse_rational(s)?))).collect())
                    .collect();
                numkit::Mat::from_rows(sc?).map_err(|e| CliError::Validation(e.to_string()))
            })
            .collect::<Result<Vec<_>, CliError>>()?;
        let curvature = f
            .curvature
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| v.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>, _>>())
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        let j_element = f.j_element.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>, _>>()?;
        factors.push(subsym::HrssFactor {
            h_table,
            rep,
            curvature,
            j_element,
            b_weight: parse_rational(&f.b_weight)?,
        });
    }
    Ok(subsym::HrssData { factors })
}
