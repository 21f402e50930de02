use serde::Serialize;
use serde_json::json;
use transgen_bounds::{e_bound, e_sol_bound, BoundValue};
use transgen_engine::{compare_table62, AsData, CaseStatus, DegreeClass, DegreeExpr, Engine, Verdict};
use transgen_mersenne::enumerate_triples;
use transgen_numth::ws;
use transgen_poset::ChainProduct;
use transgen_sweeps::example62::check_example62;
use transgen_sweeps::induction::{sweep_m2_finite, sweep_section6, TwoBlockMode};
use transgen_sweeps::lemmas::{check_debruijn, check_eq31, check_lemma28, check_wallis, check_width_bound};
use transgen_sweeps::{sweep_appendix_b, ScanPlan, SweepReport, SweepStatus};
use transgen_xreal::{certified_floor, ConstantId, RealExpr};

use crate::render::{stamped, JsonBody, Rendered, Table};
use crate::{CliError, Command, RunConfig, SweepCommand, TableId, WidthArgs};

/// Degrees are shown as `2^k*v` and in decimal.
fn degree(d: u64) -> String {
    format!("{} ({d})", DegreeExpr(d))
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "-".to_owned(), |x| x.to_string())
}

fn single(
    command: &'static str,
    value: &impl Serialize,
    text: String,
    table: Table,
    verified: bool,
) -> Result<Rendered, CliError> {
    Ok(Rendered { command, json: JsonBody::Single(stamped(command, value)?), text, table, verified })
}

fn engine(config: &RunConfig) -> Result<Engine, CliError> {
    let engine = Engine::new()?;
    match &config.as_data {
        None => Ok(engine),
        Some(path) => {
            let data = AsData::from_path(path).map_err(|e| {
                CliError::Usage(format!(
                    "cannot use as(m) data from {}: {e}. Expected a CSV file with header `m,as` and one row per block size in 10..=480",
                    path.display()
                ))
            })?;
            Ok(engine.with_as_data(data))
        }
    }
}

pub fn dispatch(command: &Command, config: &RunConfig) -> Result<Rendered, CliError> {
    match command {
        Command::Ws { n } => {
            let v = ws(*n)?;
            let mut table = Table::new(vec!["n", "ws"]);
            table.push(vec![n.to_string(), v.to_string()]);
            single("ws", &json!({ "n": n, "ws": v.to_string() }), format!("{v}\n"), table, true)
        }
        Command::Ebound { n, p, sol } => ebound(*n, *p, *sol),
        Command::Width(args) => width(args),
        Command::MersenneTriples { m } => {
            let triples = enumerate_triples(*m)?;
            let mut table = Table::new(vec!["e", "r", "t"]);
            for t in &triples {
                table.push(vec![t.e.to_string(), t.r.to_string(), t.t.to_string()]);
            }
            let shown: Vec<String> = triples.iter().map(ToString::to_string).collect();
            let text = format!("2^{m}*3: {}\n", if shown.is_empty() { "none".to_owned() } else { shown.join(" ") });
            single("mersenne-triples", &json!({ "m": m, "triples": triples }), text, table, true)
        }
        Command::Certify { d } => certify(*d, config),
        Command::Table { which } => table(*which, config),
        Command::Sweep(sweep) => self::sweep(sweep, config),
        Command::Example62 { kmax } => {
            let (report, rows) = check_example62(*kmax)?;
            let mut table = Table::new(vec!["k", "degree", "generators", "generic"]);
            for r in &rows {
                table.push(vec![
                    r.k.to_string(),
                    r.degree.to_string(),
                    r.generators.to_string(),
                    r.generic.to_string(),
                ]);
            }
            let text = format!("{}{}", Rendered::table_text(&table), report_line(&report));
            let verified = report.is_verified();
            single("example62", &json!({ "report": report, "rows": rows }), text, table, verified)
        }
    }
}

fn ebound(n: u64, p: u64, sol: bool) -> Result<Rendered, CliError> {
    let (name, value): (&str, BoundValue) = if sol { ("E_sol", e_sol_bound(n, p)?) } else { ("E", e_bound(n, p)?) };
    let mut text = format!("{name}({n},{p}) = {}\n", value.value);
    for step in &value.trace {
        text += &format!("  {step}\n");
    }
    let mut table = Table::new(vec!["n", "p", "bound", "value"]);
    table.push(vec![n.to_string(), p.to_string(), name.to_owned(), value.value.to_string()]);
    single("ebound", &json!({ "n": n, "p": p, "bound": name, "value": value }), text, table, true)
}

fn width(args: &WidthArgs) -> Result<Rendered, CliError> {
    let product = match (&args.chains, args.divisors) {
        (Some(sizes), None) => ChainProduct::new(sizes.iter().copied())?,
        (None, Some(n)) => ChainProduct::from_divisors(n)?,
        _ => return Err(CliError::Usage("give exactly one of --chains or --divisors".into())),
    };
    let rank = product.width_rank();
    let lemma = product.lemma31_bound()?;
    let n = RealExpr::from(product.cardinality() as u64);
    let corollary = certified_floor(&(RealExpr::constant(ConstantId::B) * n.clone() / n.log2().sqrt()))?;
    let oracle = if args.oracle { Some(product.width_oracle()?) } else { None };
    let verified = oracle.map_or(true, |o| u128::from(o) == rank);
    let mut text = format!(
        "chains {:?}, |P| = {}, K = {}\nwidth (largest rank level) = {rank}\nproduct bound (n/2^K) C(K, floor(K/2)) = {lemma}\nfloor(b n / sqrt(log n)) = {corollary}\n",
        product.sizes(),
        product.cardinality(),
        product.big_k()
    );
    if let Some(o) = oracle {
        text += &format!("width by matching = {o}\n");
    }
    let mut table =
        Table::new(vec!["chains", "cardinality", "width_rank", "product_bound", "floor_bound", "width_oracle"]);
    let chains: Vec<String> = product.sizes().iter().map(ToString::to_string).collect();
    table.push(vec![
        chains.join(" "),
        product.cardinality().to_string(),
        rank.to_string(),
        lemma.to_string(),
        corollary.to_string(),
        opt(oracle),
    ]);
    let value = json!({
        "chains": product.sizes(),
        "cardinality": product.cardinality() as u64,
        "width_rank": rank as u64,
        "product_bound": lemma.to_string(),
        "floor_bound": corollary.to_string(),
        "width_oracle": oracle,
    });
    single("width", &value, text, table, verified)
}

fn certify(d: u64, config: &RunConfig) -> Result<Rendered, CliError> {
    let cert = engine(config)?.certify(d)?;
    let verdict = match cert.verdict {
        Verdict::Pass => "pass",
        Verdict::Fail => "fail",
        Verdict::Incomplete => "incomplete",
    };
    let class = match cert.class {
        DegreeClass::TableA1 => "base table".to_owned(),
        DegreeClass::Table61 => "exceptional 2^u*3 or 2^u".to_owned(),
        DegreeClass::TableA3 { f: Some(f) } => format!("exceptional 2^k*5 or 2^k*15, 2-block threshold {f}"),
        DegreeClass::TableA3 { f: None } => "exceptional 2^k*5 or 2^k*15, no 2-block threshold".to_owned(),
        DegreeClass::Generic => "generic".to_owned(),
    };
    let mut text = format!("degree {}: {verdict}, target {}, {class}\n", degree(d), cert.target);
    let mut table = Table::new(vec!["kind", "m", "n", "triple", "f_g", "value", "target", "status"]);
    for (i, c) in cert.cases.iter().enumerate() {
        let status = match c.status {
            CaseStatus::Pass => "pass",
            CaseStatus::Fail => "fail",
            CaseStatus::Skipped => "skipped",
        };
        let triple = c.triple.map(|(e, r, t)| format!("({e},{r},{t})"));
        table.push(vec![
            format!("{:?}", c.kind),
            opt(c.m),
            opt(c.n),
            opt(triple),
            opt(c.f_g),
            opt(c.value),
            c.target.to_string(),
            status.to_owned(),
        ]);
        let worst = if cert.worst == Some(i) { "  <- worst" } else { "" };
        // A skipped case's note already says why it was skipped.
        let shown = match (c.status, c.note.is_empty()) {
            (_, true) => status.to_owned(),
            (CaseStatus::Skipped, false) => c.note.clone(),
            (_, false) => format!("{status} ({})", c.note),
        };
        text += &format!(
            "  {:?} m={} n={} value={} target={} {shown}{worst}\n",
            c.kind,
            opt(c.m),
            opt(c.n),
            opt(c.value),
            c.target
        );
    }
    single("certify", &cert, text, table, cert.verdict == Verdict::Pass)
}

fn table(which: TableId, config: &RunConfig) -> Result<Rendered, CliError> {
    match which {
        TableId::T61 => {
            let engine = engine(config)?;
            let rows = engine.table61();
            let mut table =
                Table::new(vec!["d_expr", "d", "bound", "paper_bound", "delta", "attained_by", "block_size"]);
            for r in rows {
                table.push(vec![
                    r.d_expr.clone(),
                    r.d.to_string(),
                    r.bound.to_string(),
                    r.paper_bound.to_string(),
                    r.delta.to_string(),
                    format!("{:?}", r.attained_by),
                    opt(r.block_size),
                ]);
            }
            let discrepancies: Vec<_> = engine.discrepancies().into_iter().filter(|x| x.table == "6.1").collect();
            let text =
                format!("{}{} rows, {} discrepancies\n", Rendered::table_text(&table), rows.len(), discrepancies.len());
            let verified = discrepancies.is_empty();
            single("table-61", &json!({ "rows": rows, "discrepancies": discrepancies }), text, table, verified)
        }
        TableId::A3 => {
            let engine = engine(config)?;
            let rows = engine.table_a3();
            let mut table = Table::new(vec!["d_expr", "f", "bound", "paper_bound", "delta"]);
            let mut text_table = Table::new(vec!["d_expr", "d", "f", "paper_f", "bound", "paper_bound", "delta"]);
            for r in rows {
                table.push(vec![
                    r.d_expr.clone(),
                    opt(r.f),
                    r.bound.to_string(),
                    r.paper_bound.to_string(),
                    r.delta.to_string(),
                ]);
                text_table.push(vec![
                    r.d_expr.clone(),
                    r.d.to_string(),
                    opt(r.f),
                    opt(r.paper_f),
                    r.bound.to_string(),
                    r.paper_bound.to_string(),
                    r.delta.to_string(),
                ]);
            }
            let discrepancies: Vec<_> = engine.discrepancies().into_iter().filter(|x| x.table == "A.3").collect();
            let mut text = Rendered::table_text(&text_table);
            text += &format!("{} rows, {} discrepancies\n", rows.len(), discrepancies.len());
            for x in &discrepancies {
                text += &format!(
                    "  {} {:?}: computed {} printed {} ({:?})\n",
                    degree(x.d),
                    x.field,
                    opt(x.computed),
                    opt(x.printed),
                    x.direction
                );
            }
            let verified = discrepancies.is_empty();
            single("table-a3", &json!({ "rows": rows, "discrepancies": discrepancies }), text, table, verified)
        }
        TableId::T62 => {
            let rows = compare_table62()?;
            let fmt = |ts: &[(u32, u32, u32)]| {
                ts.iter().map(|(e, r, t)| format!("({e},{r},{t})")).collect::<Vec<_>>().join(" ")
            };
            let mut table = Table::new(vec!["n", "computed", "printed", "set_equal"]);
            for r in &rows {
                table.push(vec![degree(r.n), fmt(&r.computed), fmt(&r.printed), r.set_equal.to_string()]);
            }
            let verified = rows.iter().all(|r| r.set_equal);
            let equal = rows.iter().filter(|r| r.set_equal).count();
            let text = format!("{}{equal} of {} rows equal as sets\n", Rendered::table_text(&table), rows.len());
            single("table-62", &json!({ "rows": rows }), text, table, verified)
        }
    }
}

fn report_line(r: &SweepReport) -> String {
    let status = match r.status {
        SweepStatus::Verified => "verified",
        SweepStatus::Failed => "FAILED",
        SweepStatus::Skipped => "skipped",
    };
    let range = r.verified_range.as_ref().map_or_else(|| "-".to_owned(), |(a, b)| format!("[{a}, {b}]"));
    let mut line = format!(
        "{:<36} {status:<8} from {:<8} {range} points={} failures={}",
        r.case_id,
        opt(r.threshold.clone()),
        r.points,
        r.failures
    );
    if let Some(f) = &r.first_failure {
        line += &format!(" first_failure={f}");
    }
    if let Some(f) = &r.failure_below_threshold {
        line += &format!(" below_threshold_failure={f}");
    }
    if !r.note.is_empty() {
        line += &format!(" [{}]", r.note);
    }
    line + "\n"
}

fn sweep_rendered(reports: Vec<SweepReport>, extra_text: String) -> Result<Rendered, CliError> {
    let mut table = Table::new(vec![
        "case_id",
        "status",
        "threshold",
        "range_lo",
        "range_hi",
        "points",
        "failures",
        "first_failure",
    ]);
    let mut text = String::new();
    let mut lines = Vec::new();
    for r in &reports {
        let (lo, hi) = r.verified_range.clone().unwrap_or_default();
        table.push(vec![
            r.case_id.clone(),
            format!("{:?}", r.status).to_lowercase(),
            opt(r.threshold.clone()),
            lo,
            hi,
            r.points.to_string(),
            r.failures.to_string(),
            opt(r.first_failure.clone()),
        ]);
        text += &report_line(r);
        lines.push(stamped("sweep", r)?);
    }
    text += &extra_text;
    let verified = reports.iter().all(SweepReport::is_verified);
    Ok(Rendered { command: "sweep", json: JsonBody::Lines(lines), text, table, verified })
}

fn sweep(command: &SweepCommand, config: &RunConfig) -> Result<Rendered, CliError> {
    match command {
        SweepCommand::AppendixB { m, window, geometric_max, probe } => {
            let plan =
                ScanPlan { window: *window, geometric_max: *geometric_max, probe_below: *probe, ..ScanPlan::default() };
            let ms: Vec<u64> = if m.is_empty() { (2..=9).collect() } else { m.clone() };
            let mut reports = Vec::new();
            for m in ms {
                reports.extend(sweep_appendix_b(m, &plan)?);
            }
            sweep_rendered(reports, String::new())
        }
        SweepCommand::Lemmas { lemma28_max, eq31_max, wallis_max, debruijn_max, width_max } => {
            let wallis = check_wallis(*wallis_max)?;
            let extra = format!("Wallis product at t = {wallis_max} lies in [{}, {}]\n", wallis.last.0, wallis.last.1);
            let reports = vec![
                check_lemma28(*lemma28_max)?,
                check_eq31(*eq31_max)?,
                wallis.report,
                check_debruijn(*debruijn_max)?,
                check_width_bound(*width_max, 3000)?,
            ];
            sweep_rendered(reports, extra)
        }
        SweepCommand::Section6 => {
            let sweep = sweep_section6(&engine(config)?)?;
            let extra = if sweep.missing.is_empty() {
                String::new()
            } else {
                format!(
                    "{} block sizes in 10..=480 have no as(m) value; supply them with --as-data FILE (CSV header m,as)\n",
                    sweep.missing.len()
                )
            };
            let mut rendered = sweep_rendered(sweep.reports().into_iter().cloned().collect(), extra)?;
            // Block sizes without data are a gap, not a verified result.
            rendered.verified &= sweep.missing.is_empty();
            Ok(rendered)
        }
        SweepCommand::M2Finite { exhaustive } => {
            let mode = if *exhaustive { TwoBlockMode::Exhaustive } else { TwoBlockMode::default() };
            let report = sweep_m2_finite(engine(config)?.store(), mode)?;
            sweep_rendered(vec![report], String::new())
        }
    }
}
