use crate::report::{conventions, Conventions};
use crate::CliError;
use contactgeo::{ContactModel, Geometry, IdentityStatus};
use holonomy::{ConnectionTag, HolMode};
use num::rational::BigRational;
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct CheckLine {
    pub name: String,
    pub status: String,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SelfTestReport {
    pub schema: &'static str,
    pub conventions: Conventions,
    pub models: Vec<String>,
    pub checks: Vec<CheckLine>,
    pub passed: usize,
    pub failed: usize,
}

struct Checks {
    filter: Option<String>,
    lines: Vec<CheckLine>,
}

impl Checks {
    fn push(&mut self, name: String, pass: bool, detail: String) {
        if let Some(f) = &self.filter {
            if !name.contains(f.as_str()) {
                return;
            }
        }
        self.lines.push(CheckLine {
            name,
            status: if pass { "PASS".into() } else { "FAIL".into() },
            detail,
        });
    }
}

/// The golden-corpus self test: identity suites, theorem checks, the zoo
/// table, and the spinor dimensions, one pass/fail line per check.
pub fn run_selftest(
    models: Vec<ContactModel>,
    filter: Option<String>,
    inject_sign_bug: bool,
) -> Result<SelfTestReport, CliError> {
    let mut checks = Checks { filter, lines: Vec::new() };
    let names: Vec<String> = models.iter().map(|m| m.name.clone()).collect();

    for (idx, model) in models.into_iter().enumerate() {
        let name = model.name.clone();
        let base = model.base_point.clone();
        let mut geo = Geometry::build(model).map_err(|e| CliError::Validation(e.to_string()))?;
        if inject_sign_bug && idx == 0 {
            // test fixture: corrupt the Wagner endomorphism by a skew unit;
            // the Wagner identities must then be reported as FAILED
            let n = geo.model.n;
            let d = geo.model.dim_frame();
            let mut s = polycalc::RfMatrix::zeros(d, d, n);
            s.set(0, 1, polycalc::RatFunc::one(n));
            s.set(1, 0, polycalc::RatFunc::one(n).neg());
            let bad = geo.n_wagner.add(&geo.model.g_inv.mul(&s));
            geo.r_wagner = contactgeo::extended_curvature(&geo.model, &geo.r_schouten, &bad);
            geo.n_wagner = bad;
        }

        match contactgeo::identity_suite(&geo) {
            Ok(ledger) => {
                for c in ledger {
                    checks.push(
                        format!("identity/{name}/{}", c.name),
                        c.status != IdentityStatus::Failed,
                        c.detail,
                    );
                }
            }
            Err(e) => checks.push(format!("identity/{name}/suite"), false, e.to_string()),
        }

        let hor = holonomy::stabilized_holonomy(&geo, HolMode::Horizontal, &base);
        let adp = holonomy::stabilized_holonomy(&geo, HolMode::Full(ConnectionTag::Adapted), &base);
        let wag = holonomy::stabilized_holonomy(&geo, HolMode::Full(ConnectionTag::Wagner), &base);
        match (&hor, &adp, &wag) {
            (Ok(h), Ok(a), Ok(w)) => {
                checks.push(
                    format!("wagner-equals-horizontal/{name}"),
                    h.algebra.equals(&w.algebra, 0.0),
                    format!("dims {} vs {}", h.dim, w.dim),
                );
                let codazzi = contactgeo::codazzi_defect(&geo, &base)
                    .map(|r| r.codazzi)
                    .unwrap_or(false);
                let contained = h.algebra.is_subspace_of(&a.algebra, 0.0);
                let gap_ok = !codazzi || a.dim - h.dim <= 1;
                checks.push(
                    format!("dichotomy/{name}"),
                    contained && gap_ok,
                    format!("codazzi={codazzi} dims ({},{})", h.dim, a.dim),
                );
                let skew_ok = {
                    let g0 = geo.model.g.eval(&base).map_err(|e| CliError::Internal(e.to_string()))?;
                    [h, a, w].iter().all(|r| {
                        r.basis.iter().all(|b| {
                            let gb = g0.mul(b).unwrap();
                            gb.add(&gb.transpose()).unwrap().is_zero_exact()
                        })
                    })
                };
                checks.push(format!("algebra-g-skew/{name}"), skew_ok, String::new());
            }
            _ => checks.push(format!("holonomy/{name}"), false, "holonomy generation failed".into()),
        }

        match geo.dtheta_inverse_at(&base) {
            Ok(_) => checks.push(format!("normalization/{name}"), true, "<dθ, dθ^{-1}> = -4m".into()),
            Err(e) => checks.push(format!("normalization/{name}"), false, e.to_string()),
        }
        if let Some(bj) = geo.j_bivector() {
            let ok = (|| -> Option<bool> {
                let w0 = geo.model.w.eval(&base).ok()?;
                let bj0 = bj.eval(&base).ok()?;
                Some(contactgeo::pairing_at(&w0, &bj0) == BigRational::from_integer((2 * geo.model.m as i64).into()))
            })()
            .unwrap_or(false);
            checks.push(format!("j-pairing/{name}"), ok, "<dθ, J> = 2m".into());
        }

        // backend consistency: rational rank of g equals float rank at 1e-9
        let g0 = geo.model.g.eval(&base).map_err(|e| CliError::Internal(e.to_string()))?;
        let (r_exact, _) = g0.rank_nullspace(None).map_err(|e| CliError::Internal(e.to_string()))?;
        let (r_float, _) = g0
            .map_to_f64()
            .rank_nullspace(Some(1e-9))
            .map_err(|e| CliError::Internal(e.to_string()))?;
        checks.push(
            format!("rank-backend-consistency/{name}"),
            r_exact == r_float,
            format!("{r_exact} vs {r_float}"),
        );
    }

    // zoo suite
    zoo_checks(&mut checks);
    spin_checks(&mut checks);

    let passed = checks.lines.iter().filter(|c| c.status == "PASS").count();
    let failed = checks.lines.len() - passed;
    Ok(SelfTestReport {
        schema: crate::modelfile::SCHEMA,
        conventions: conventions(),
        models: names,
        checks: checks.lines,
        passed,
        failed,
    })
}

fn zoo_checks(checks: &mut Checks) {
    use liealg::{ZooLabel, ZooMatch};
    use subsym::{zoo, ZooKind};
    let fam = |l: i64, mu: i64| ZooKind::TorsionFamily {
        m: 3,
        lambda: BigRational::from_integer(l.into()),
        mu: BigRational::from_integer(mu.into()),
    };
    let cases: Vec<(ZooKind, ZooLabel, i64)> = vec![
        (fam(1, 2), ZooLabel::SoMPlus2, 36),
        (fam(1, -2), ZooLabel::So2M, -36),
        (fam(2, 1), ZooLabel::So1MPlus1, 18),
        (fam(1, 1), ZooLabel::EuclideanMotion, 18),
        (fam(1, -1), ZooLabel::PoincareMotion, -18),
        (fam(1, 0), ZooLabel::So1MPlus1, 0),
    ];
    let mut results = Vec::new();
    for (kind, want, scal) in cases {
        let label = match &kind {
            ZooKind::TorsionFamily { lambda, mu, .. } => format!("zoo/torsion(3,{lambda},{mu})"),
            _ => unreachable!(),
        };
        match zoo(&kind) {
            Ok(z) => {
                let ok = z.zoo_match == ZooMatch::Label(want)
                    && z.scal_tau == BigRational::from_integer(scal.into());
                checks.push(label, ok, format!("{} scal={}", z.zoo_match, z.scal_tau));
                results.push((3usize, z));
            }
            Err(e) => checks.push(label, false, e.to_string()),
        }
    }
    match zoo(&ZooKind::Heisenberg { m: 3 }) {
        Ok(z) => {
            let ok = z.zoo_match == ZooMatch::Label(ZooLabel::Heisenberg) && z.tau_star_zero;
            checks.push("zoo/heisenberg(3)".into(), ok, format!("{}", z.zoo_match));
            results.push((3, z));
        }
        Err(e) => checks.push("zoo/heisenberg(3)".into(), false, e.to_string()),
    }
    match zoo(&ZooKind::CpnSphere { m: 3 }) {
        Ok(z) => {
            let ok = (z.hol_horizontal_dim, z.hol_adapted_dim) == (8, 9);
            checks.push("zoo/cpn-sphere(3)".into(), ok, format!("dims ({},{})", z.hol_horizontal_dim, z.hol_adapted_dim));
            results.push((3, z));
        }
        Err(e) => checks.push("zoo/cpn-sphere(3)".into(), false, e.to_string()),
    }
    match subsym::table1_report(&results) {
        Ok(rows) => checks.push("zoo/table1".into(), true, format!("{} rows matched", rows.len())),
        Err(e) => checks.push("zoo/table1".into(), false, e.to_string()),
    }
}

fn spin_checks(checks: &mut Checks) {
    use spinrep::{annihilator, embed_algebra, EmbedLabel, SpinRep};
    let m = 3;
    match SpinRep::build(m) {
        Ok(rep) => {
            for (label, want) in [
                (EmbedLabel::Su, 2usize),
                (EmbedLabel::SoLagrangian, 2),
                (EmbedLabel::U, 0),
                (EmbedLabel::SoPlusU1, 0),
            ] {
                let name = format!("spin/m{m}/{label:?}");
                match embed_algebra(label, m).and_then(|h| annihilator(&rep, &h)) {
                    Ok(r) => checks.push(name, r.dim == want, format!("dim {}", r.dim)),
                    Err(e) => checks.push(name, false, e.to_string()),
                }
            }
            match spinrep::weight_decomposition(&rep) {
                Ok(wd) => {
                    let ok = wd.levels.iter().enumerate().all(|(k, l)| {
                        l.eigenvalue_im == BigRational::from_integer(((m as i64) - 2 * k as i64).into())
                    });
                    checks.push(format!("spin/m{m}/rhoJ-spectrum"), ok, "(m-2k)i".into());
                }
                Err(e) => checks.push(format!("spin/m{m}/rhoJ-spectrum"), false, e.to_string()),
            }
        }
        Err(e) => checks.push(format!("spin/m{m}/build"), false, e.to_string()),
    }
}

/// Load every *.json model in a directory, sorted by file name for
/// deterministic output.
pub fn load_corpus(dir: &std::path::Path) -> Result<Vec<ContactModel>, CliError> {
    let mut paths: Vec<_> = std::fs::read_dir(dir)
        .map_err(|e| CliError::Parse(format!("cannot read {}: {e}", dir.display())))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().map(|x| x == "json").unwrap_or(false))
        .collect();
    paths.sort();
    let mut out = Vec::new();
    for p in paths {
        out.push(crate::modelfile::load_model(&p)?);
    }
    if out.is_empty() {
        return Err(CliError::Validation(format!("no models found in {}", dir.display())));
    }
    Ok(out)
}

/// Built-in corpus used when no models directory is available.
pub fn builtin_corpus() -> Result<Vec<ContactModel>, CliError> {
    contactgeo::fixtures::golden_corpus().map_err(|e| CliError::Validation(e.to_string()))
}
