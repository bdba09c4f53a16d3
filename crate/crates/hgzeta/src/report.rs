//! Pipeline orchestration and report emission.
//!
//! A run takes a [`RunConfig`](crate::config::RunConfig) and a subcommand,
//! executes the requested stages per λ (optionally across a worker pool),
//! and produces a [`Report`] that serializes identically to JSON and to the
//! plain-text rendering.

use crate::chargauss::CharTower;
use crate::config::{Oracle, RunConfig};
use crate::count::{brute_count, delsarte_full_count};
use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::ffield::FqElem;
use crate::intlin::{check_asm2, kernel_reps, smith_normal_form, compute_d_count};
use crate::padic::{unit_root, PadicCtx};
use crate::zetafac::{
    assemble_p, build_pieces, classify_weights, compute_u_terms, p_series_from_counts,
    predicted_count, star_identity_check, GAP_TOL,
};
use rug::Integer;
use serde::Serialize;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

/// Residual bound for the exact star identity in `verify`.
pub const STAR_TOL: f64 = 1e-30;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Subcommand {
    Analyze,
    Count,
    Zeta,
    Unitroot,
    Verify,
}

impl std::str::FromStr for Subcommand {
    type Err = Error;
    fn from_str(s: &str) -> Result<Subcommand> {
        match s {
            "analyze" => Ok(Subcommand::Analyze),
            "count" => Ok(Subcommand::Count),
            "zeta" => Ok(Subcommand::Zeta),
            "unitroot" => Ok(Subcommand::Unitroot),
            "verify" => Ok(Subcommand::Verify),
            other => Err(Error::Config(format!("unknown subcommand {other:?}"))),
        }
    }
}

/// Structural family data independent of λ.
#[derive(Clone, Debug, Serialize)]
pub struct StructureReport {
    pub alpha: Vec<u64>,
    pub alpha_total: u64,
    /// C = α^α ∏ c_i^{α_i} α_i^{−α_i}, as a field encoding.
    pub c_value: u64,
    /// Elementary divisors of A' = A − ones.
    pub divisors: Vec<String>,
    /// Kernel size d = number of spectral pieces.
    pub d: u64,
    /// D = #{J : #J = (n+1)/2, every monomial escapes J}.
    pub big_d: u64,
    /// Kernel representatives s_0..s_{d−1} (present when asm1 holds).
    pub s_table: Option<Vec<Vec<u64>>>,
    pub asm1_pass: bool,
    pub asm1_detail: Option<String>,
    pub asm2_pass: bool,
    pub asm2_failures: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CountRow {
    pub r: u32,
    pub brute: Option<String>,
    pub delsarte: Option<String>,
    pub predicted: Option<String>,
    pub star_residual: Option<f64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct UnitRootReport {
    /// "ordinary" or "supersingular".
    pub status: String,
    /// Residue-polynomial coefficients of the unit root mod p^m.
    pub value: Option<Vec<String>>,
    pub precision: u32,
}

#[derive(Clone, Debug, Serialize)]
pub struct LambdaReport {
    /// Field encoding of λ.
    pub lambda: u64,
    pub admissible: bool,
    pub counts: Vec<CountRow>,
    /// Coefficients of P(T), constant term first.
    pub p_coefficients: Option<Vec<String>>,
    /// (weight, multiplicity) pairs of the reciprocal roots of P.
    pub weights: Option<Vec<(i64, i64)>>,
    pub unit_root: Option<UnitRootReport>,
    pub checks: Vec<String>,
    pub elapsed_ms: u128,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub subcommand: String,
    pub config: RunConfig,
    pub structure: Option<StructureReport>,
    pub lambdas: Vec<LambdaReport>,
    pub elapsed_ms: u128,
}

fn structure_report(spec: &FamilySpec) -> StructureReport {
    let snf = smith_normal_form(&spec.a.minus_ones());
    let asm2 = check_asm2(&spec.a, spec.q());
    let (asm1_pass, asm1_detail, s_table, d) = match kernel_reps(&spec.a, spec.q(), &spec.alpha) {
        Ok(reps) => {
            let d = reps.s.len() as u64;
            (true, None, Some(reps.s), d)
        }
        Err(e) => (false, Some(e.to_string()), None, 0),
    };
    StructureReport {
        alpha: spec.alpha.alphas.clone(),
        alpha_total: spec.alpha.alpha_total,
        c_value: spec.cval.0,
        divisors: snf.divisors.iter().map(|v| v.to_string()).collect(),
        d,
        big_d: compute_d_count(&spec.a),
        s_table,
        asm1_pass,
        asm1_detail,
        asm2_pass: asm2.pass,
        asm2_failures: asm2
            .items
            .iter()
            .filter(|i| !i.pass)
            .map(|i| format!("J={:?} divisors {:?}", i.j_set, i.divisors))
            .collect(),
    }
}

/// Does P (integer coefficients, a_0 = 1) have a p-adic unit reciprocal root?
/// Equivalent to a slope-zero edge of its Newton polygon.
pub fn has_unit_reciprocal_root(coefficients: &[Integer], p: u64) -> bool {
    coefficients
        .iter()
        .skip(1)
        .any(|a| !a.is_divisible_u(p as u32) && a.cmp0() != std::cmp::Ordering::Equal)
}

fn lambda_report(
    spec: &FamilySpec,
    cfg: &RunConfig,
    cmd: Subcommand,
    tower: &CharTower,
    lam: FqElem,
) -> Result<LambdaReport> {
    let start = std::time::Instant::now();
    let mut rep = LambdaReport {
        lambda: lam.0,
        admissible: spec.lambda_admissible(lam),
        counts: Vec::new(),
        p_coefficients: None,
        weights: None,
        unit_root: None,
        checks: Vec::new(),
        elapsed_ms: 0,
    };
    if !rep.admissible {
        rep.checks.push("skipped: λ not admissible (λ = 0 or λ^α = C)".into());
        rep.elapsed_ms = start.elapsed().as_millis();
        return Ok(rep);
    }
    let verify = cmd == Subcommand::Verify;
    let want_counts = matches!(cmd, Subcommand::Count | Subcommand::Verify);
    let want_zeta = matches!(cmd, Subcommand::Zeta | Subcommand::Verify);
    let want_unit = matches!(cmd, Subcommand::Unitroot | Subcommand::Verify);
    let use_brute = cfg.oracles.contains(&Oracle::Brute);
    let use_delsarte = cfg.oracles.contains(&Oracle::Delsarte);
    let use_hgf = cfg.oracles.contains(&Oracle::Hgf);

    let mut brute_totals: Vec<Integer> = Vec::new();
    if want_counts {
        let hgf_data = if use_hgf {
            let tbl1 = tower.level(1)?;
            let pieces = build_pieces(spec, lam, &tbl1)?;
            let u_terms = compute_u_terms(spec, lam, &pieces, &tbl1);
            Some((pieces, u_terms))
        } else {
            None
        };
        for r in 1..=cfg.r_max {
            let mut row = CountRow {
                r,
                brute: None,
                delsarte: None,
                predicted: None,
                star_residual: None,
            };
            let mut values: Vec<(&str, Integer)> = Vec::new();
            if use_brute {
                let c = brute_count(spec, lam, r, cfg.budget)?;
                brute_totals.push(c.total.clone());
                row.brute = Some(c.total.to_string());
                values.push(("brute", c.total));
            }
            if use_delsarte {
                let tbl_r = tower.level(r)?;
                let c = delsarte_full_count(spec, lam, &tbl_r)?;
                row.delsarte = Some(c.total.to_string());
                values.push(("delsarte", c.total));
            }
            if let Some((pieces, u_terms)) = &hgf_data {
                let tbl_r = tower.level(r)?;
                let pred = predicted_count(spec, lam, pieces, u_terms, &tbl_r)?;
                row.predicted = Some(pred.to_string());
                let resid = star_identity_check(spec, lam, pieces, &tbl_r).to_f64();
                row.star_residual = Some(resid);
                values.push(("hgf", pred));
                if verify && resid >= STAR_TOL {
                    return Err(Error::Verification(format!(
                        "star identity residual {resid:e} at λ={}, r={r}",
                        lam.0
                    )));
                }
            }
            if verify {
                for pair in values.windows(2) {
                    if pair[0].1 != pair[1].1 {
                        return Err(Error::Verification(format!(
                            "count mismatch at λ={}, r={r}: {}={} vs {}={}",
                            lam.0, pair[0].0, pair[0].1, pair[1].0, pair[1].1
                        )));
                    }
                }
                rep.checks.push(format!("r={r}: oracles agree"));
            }
            rep.counts.push(row);
        }
    }

    if want_zeta {
        // The recurrence fit may need more levels than r_max; grow the
        // horizon until it stabilizes or the table cap stops us.
        let mut pf = None;
        let mut last: Option<Error> = None;
        for h in cfg.r_max.max(2)..=tower.r_max() {
            match assemble_p(spec, lam, tower, h) {
                Ok(v) => {
                    pf = Some(v);
                    break;
                }
                Err(
                    e @ (Error::DegreeUndetermined(_)
                    | Error::RoundingGap(_, _)
                    | Error::Integrality(_)),
                ) => {
                    // Artifacts of fitting with too few levels; retry deeper.
                    last = Some(e);
                }
                Err(e @ Error::CapExceeded(_, _)) => {
                    last = Some(e);
                    break;
                }
                Err(e) => return Err(e),
            }
        }
        let pf = pf.ok_or_else(|| last.unwrap_or(Error::DegreeUndetermined(0)))?;
        rep.p_coefficients = Some(pf.coefficients.iter().map(|c| c.to_string()).collect());
        rep.weights = Some(classify_weights(&pf.factors, spec.q())?);
        if verify && use_brute && !brute_totals.is_empty() {
            // Exp-series consistency between P(T) and raw counts.
            let series =
                p_series_from_counts(&brute_totals, spec.n, spec.q(), cfg.precision_bits);
            for (k, sk) in series.iter().enumerate() {
                let from_p = pf
                    .coefficients
                    .get(k)
                    .cloned()
                    .unwrap_or_else(Integer::new);
                let got = sk.round_checked(GAP_TOL)?;
                if got != from_p {
                    return Err(Error::Verification(format!(
                        "P(T) coefficient {k} disagrees with counts at λ={}: {got} vs {from_p}",
                        lam.0
                    )));
                }
            }
            rep.checks
                .push(format!("P(T) matches count series through T^{}", series.len() - 1));
        }
    }

    if want_unit {
        let ctx = PadicCtx::new(&spec.field, cfg.padic_precision);
        let value = unit_root(spec, &ctx, lam)?;
        let status = if value.is_some() { "ordinary" } else { "supersingular" };
        if verify {
            if let Some(coeffs) = rep
                .p_coefficients
                .as_ref()
                .map(|v| v.iter().map(|s| s.parse::<Integer>().unwrap()).collect::<Vec<_>>())
            {
                let has_unit = has_unit_reciprocal_root(&coeffs, spec.p);
                if has_unit != value.is_some() {
                    return Err(Error::Verification(format!(
                        "unit-root criterion disagrees with P(T) at λ={}",
                        lam.0
                    )));
                }
                if let Some(g) = &value {
                    // Σ a_i γ^{deg−i} ≡ 0 mod p^m.
                    let d = coeffs.len() - 1;
                    let mut acc = ctx.zero();
                    for (i, a) in coeffs.iter().enumerate() {
                        acc = ctx.add(&acc, &ctx.scale(&ctx.pow(g, (d - i) as u64), a));
                    }
                    if !ctx.is_zero(&acc) {
                        return Err(Error::Verification(format!(
                            "unit root is not a root of reversed P(T) mod p^{} at λ={}",
                            ctx.m, lam.0
                        )));
                    }
                    rep.checks.push("unit root divides reversed P(T)".into());
                }
            }
        }
        rep.unit_root = Some(UnitRootReport {
            status: status.into(),
            value: value.map(|g| g.coeffs.iter().map(|c| c.to_string()).collect()),
            precision: cfg.padic_precision,
        });
    }

    rep.elapsed_ms = start.elapsed().as_millis();
    Ok(rep)
}

/// Execute a subcommand over the configured λ set with `threads` workers.
pub fn run(cfg: &RunConfig, cmd: Subcommand, threads: usize) -> Result<Report> {
    let start = std::time::Instant::now();
    let spec = cfg.family()?;
    let structure = structure_report(&spec);
    let cmd_name = match cmd {
        Subcommand::Analyze => "analyze",
        Subcommand::Count => "count",
        Subcommand::Zeta => "zeta",
        Subcommand::Unitroot => "unitroot",
        Subcommand::Verify => "verify",
    };
    let mut report = Report {
        subcommand: cmd_name.into(),
        config: cfg.clone(),
        structure: Some(structure),
        lambdas: Vec::new(),
        elapsed_ms: 0,
    };
    if cmd == Subcommand::Analyze {
        let s = report.structure.as_ref().unwrap();
        if !s.asm1_pass || !s.asm2_pass {
            report.elapsed_ms = start.elapsed().as_millis();
            // Assumption failures surface as exit 3; the report still
            // carries the verdicts for inspection.
            return Err(Error::AssumptionViolation(format!(
                "asm1 pass: {}, asm2 pass: {} ({})",
                s.asm1_pass,
                s.asm2_pass,
                s.asm1_detail
                    .clone()
                    .unwrap_or_else(|| s.asm2_failures.join("; "))
            )));
        }
        report.elapsed_ms = start.elapsed().as_millis();
        return Ok(report);
    }

    // Extra lazily-built levels beyond r_max give the zeta fit headroom.
    let tower_levels = if matches!(cmd, Subcommand::Zeta | Subcommand::Verify) {
        cfg.r_max.max(8)
    } else {
        cfg.r_max.max(1)
    };
    let tower = CharTower::new(spec.p, spec.f, tower_levels, cfg.precision_bits);
    let lambdas = cfg.lambdas(&spec);
    let workers = threads.max(1).min(lambdas.len().max(1));
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<Result<LambdaReport>>>> =
        Mutex::new((0..lambdas.len()).map(|_| None).collect());
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::SeqCst);
                if i >= lambdas.len() {
                    break;
                }
                let out = lambda_report(&spec, cfg, cmd, &tower, lambdas[i]);
                slots.lock().unwrap()[i] = Some(out);
            });
        }
    });
    for slot in slots.into_inner().unwrap() {
        report.lambdas.push(slot.expect("worker filled every slot")?);
    }
    report.elapsed_ms = start.elapsed().as_millis();
    Ok(report)
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Human-readable rendering carrying the same data as the JSON form.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        use std::fmt::Write;
        let w = &mut out;
        let _ = writeln!(w, "hgzeta {} report", self.subcommand);
        let _ = writeln!(
            w,
            "family: n={} p={} q={} lambda={:?} r_max={}",
            self.config.n, self.config.p, self.config.q, self.config.lambda, self.config.r_max
        );
        if let Some(s) = &self.structure {
            let _ = writeln!(w, "alpha: {:?} (total {})", s.alpha, s.alpha_total);
            let _ = writeln!(w, "C (field encoding): {}", s.c_value);
            let _ = writeln!(w, "elementary divisors of A': [{}]", s.divisors.join(", "));
            let _ = writeln!(w, "d = {}, D = {}", s.d, s.big_d);
            if let Some(tbl) = &s.s_table {
                for (j, s_j) in tbl.iter().enumerate() {
                    let _ = writeln!(w, "  s_{j} = {s_j:?}");
                }
            }
            let _ = writeln!(
                w,
                "assumptions: asm1 {} asm2 {}",
                if s.asm1_pass { "pass" } else { "FAIL" },
                if s.asm2_pass { "pass" } else { "FAIL" }
            );
            if let Some(d) = &s.asm1_detail {
                let _ = writeln!(w, "  asm1: {d}");
            }
            for f in &s.asm2_failures {
                let _ = writeln!(w, "  asm2: {f}");
            }
        }
        for l in &self.lambdas {
            let _ = writeln!(
                w,
                "lambda {} ({}):",
                l.lambda,
                if l.admissible { "admissible" } else { "not admissible" }
            );
            for row in &l.counts {
                let fmt = |o: &Option<String>| o.clone().unwrap_or_else(|| "-".into());
                let _ = writeln!(
                    w,
                    "  r={}: brute={} delsarte={} predicted={} star_residual={}",
                    row.r,
                    fmt(&row.brute),
                    fmt(&row.delsarte),
                    fmt(&row.predicted),
                    row.star_residual
                        .map(|v| format!("{v:.2e}"))
                        .unwrap_or_else(|| "-".into()),
                );
            }
            if let Some(c) = &l.p_coefficients {
                let _ = writeln!(w, "  P(T) coefficients: [{}]", c.join(", "));
            }
            if let Some(ws) = &l.weights {
                let _ = writeln!(w, "  root weights (weight, multiplicity): {ws:?}");
            }
            if let Some(u) = &l.unit_root {
                let _ = writeln!(
                    w,
                    "  unit root: {} {} (mod p^{})",
                    u.status,
                    u.value
                        .as_ref()
                        .map(|v| format!("[{}]", v.join(", ")))
                        .unwrap_or_else(|| "-".into()),
                    u.precision
                );
            }
            for c in &l.checks {
                let _ = writeln!(w, "  check: {c}");
            }
            let _ = writeln!(w, "  elapsed: {} ms", l.elapsed_ms);
        }
        let _ = writeln!(w, "total elapsed: {} ms", self.elapsed_ms);
        out
    }

    /// Write report.json and report.txt under `dir`.
    pub fn write_files(&self, dir: &std::path::Path) -> Result<()> {
        std::fs::create_dir_all(dir)
            .map_err(|e| Error::Config(format!("{}: {e}", dir.display())))?;
        std::fs::write(dir.join("report.json"), self.to_json())
            .map_err(|e| Error::Config(e.to_string()))?;
        std::fs::write(dir.join("report.txt"), self.to_text())
            .map_err(|e| Error::Config(e.to_string()))?;
        Ok(())
    }
}
