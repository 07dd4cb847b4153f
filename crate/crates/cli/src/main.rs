mod args;

use std::fmt::Write as _;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::Parser;
use qperiod::characters::{character_table, weight_multiplicity};
use qperiod::laurent::qbinom;
use qperiod::pathspace::path_count;
use qperiod::oracles::{lucas_predictor, Freudenthal};
use qperiod::verify::{
    admissible_orders, check_matrix_congruence, check_periodicity_theorem, check_qint_periodicity, commutation_batch,
    congruence_batch, identity_batch, periodicity_batch, qint_batch, BatchConfig, BatchSummary, CheckReport, Outcome,
    PeriodicSetting, DEFAULT_ORDERS,
};
use qperiod::{Field, GramSession, RootSystem, RootVector, Strategy, Weight};

use args::{load_system, parse_height, parse_weight, Cli, Command, Format, VerifyArgs, VerifyKind};

/// Failure class, mapped onto the exit status.
enum Failure {
    Checks,
    Input(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Input(e)
    }
}

impl From<qperiod::Error> for Failure {
    fn from(e: qperiod::Error) -> Self {
        Failure::Input(e.into())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let strategy = match configure_threads(cli.jobs) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    let mut out = String::new();
    let result = run(&cli, strategy, &mut out);
    print!("{out}");
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn configure_threads(jobs: Option<usize>) -> anyhow::Result<Strategy> {
    match jobs {
        Some(0) => bail!("--jobs must be at least 1"),
        Some(1) => Ok(Strategy::Sequential),
        #[cfg(feature = "parallel")]
        Some(n) => {
            rayon::ThreadPoolBuilder::new().num_threads(n).build_global().context("configuring worker threads")?;
            Ok(Strategy::Parallel)
        }
        #[cfg(not(feature = "parallel"))]
        Some(_) => Ok(Strategy::Sequential),
        None => Ok(Strategy::default()),
    }
}

fn field(spec: &str) -> anyhow::Result<Field> {
    Field::parse(spec).with_context(|| format!("field `{spec}`"))
}

/// Rejects a height whose Gram matrix would exceed the path budget.
fn guard_paths(nu: &RootVector, max: u128) -> anyhow::Result<()> {
    let n = path_count(nu);
    if n > max {
        bail!("height {nu} has {n} paths, above --max-paths {max}");
    }
    Ok(())
}

fn run(cli: &Cli, strategy: Strategy, out: &mut String) -> Result<(), Failure> {
    match &cli.command {
        Command::Mult(a) => {
            let rs = load_system(&a.system)?;
            let k = field(&a.field)?;
            let lambda = parse_weight("lambda", &a.lambda, &rs)?;
            let mu = parse_weight("mu", &a.mu, &rs)?;
            if let Some(nu) = rs.root_decompose(&(&lambda - &mu)) {
                guard_paths(&nu, cli.max_paths)?;
            }
            let dim = weight_multiplicity(&k, &rs, &lambda, &mu)?;
            match cli.format {
                Format::Plain => writeln!(out, "{dim}").unwrap(),
                Format::Json => {
                    let doc = serde_json::json!({
                        "system": rs.name(), "field": k.spec(), "lambda": lambda, "mu": mu, "dim": dim,
                    });
                    writeln!(out, "{doc}").unwrap();
                }
                Format::Csv => {
                    let header: Vec<String> = (1..=rs.rank()).map(|i| format!("mu_{i}")).collect();
                    let row: Vec<String> = mu.0.iter().map(i64::to_string).collect();
                    writeln!(out, "{},dim\n{},{dim}", header.join(","), row.join(",")).unwrap();
                }
            }
        }
        Command::Table(a) => {
            let rs = load_system(&a.system)?;
            let k = field(&a.field)?;
            let lambda = parse_weight("lambda", &a.lambda, &rs)?;
            let bound = parse_height("bound", &a.bound, &rs)?;
            guard_paths(&bound, cli.max_paths)?;
            let t = character_table(&k, &rs, &lambda, &bound, strategy)?;
            match cli.format {
                Format::Plain => {
                    writeln!(out, "{} over {}, lambda = {}", t.system, t.field, t.lambda).unwrap();
                    for e in &t.entries {
                        writeln!(out, "{:<16} {}", e.mu.to_string(), e.dim).unwrap();
                    }
                }
                Format::Json => writeln!(out, "{}", t.to_json()).unwrap(),
                Format::Csv => out.push_str(&t.to_csv()),
            }
        }
        Command::Gram(a) => {
            let rs = load_system(&a.system)?;
            let lambda = parse_weight("lambda", &a.lambda, &rs)?;
            let nu = match (&a.height, &a.mu) {
                (Some(h), _) => parse_height("height", h, &rs)?,
                (None, Some(mu)) => {
                    let mu = parse_weight("mu", mu, &rs)?;
                    match rs.root_decompose(&(&lambda - &mu)) {
                        Some(nu) => nu,
                        None => return Err(anyhow::anyhow!("{mu} is not below {lambda}").into()),
                    }
                }
                (None, None) => unreachable!("clap requires --height or --mu"),
            };
            guard_paths(&nu, cli.max_paths)?;
            let m = GramSession::new(&rs, lambda).matrix(&nu, strategy)?;
            match cli.format {
                Format::Plain => {
                    writeln!(out, "{} lambda = {} height = {}", m.system, m.lambda, m.height).unwrap();
                    for (p, row) in m.paths.iter().zip(&m.entries) {
                        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
                        writeln!(out, "{p}: {}", cells.join(" | ")).unwrap();
                    }
                }
                Format::Json => writeln!(out, "{}", m.to_json()).unwrap(),
                Format::Csv => {
                    writeln!(out, "row,col,entry").unwrap();
                    for (i, row) in m.entries.iter().enumerate() {
                        for (j, e) in row.iter().enumerate() {
                            writeln!(out, "\"{}\",\"{}\",{e}", m.paths[i], m.paths[j]).unwrap();
                        }
                    }
                }
            }
        }
        Command::Verify(a) => verify(a, cli.format, strategy, out)?,
        Command::Selftest => selftest(strategy, out)?,
    }
    Ok(())
}

fn systems_for(a: &VerifyArgs, defaults: &[&str]) -> anyhow::Result<Vec<RootSystem>> {
    match &a.system {
        Some(s) => Ok(vec![load_system(s)?]),
        None => defaults.iter().map(|s| load_system(s)).collect(),
    }
}

fn emit(reports: &[CheckReport], summary: &BatchSummary, format: Format, out: &mut String) {
    for r in reports {
        match format {
            Format::Json | Format::Csv => writeln!(out, "{}", r.to_json_line()).unwrap(),
            Format::Plain => {
                let outcome = match r.outcome {
                    Outcome::Pass => "pass",
                    Outcome::Fail => "FAIL",
                    Outcome::HypothesisUnsatisfied => "hypothesis-unsatisfied",
                };
                let mut line = format!("{outcome} {} {}", r.check, serde_json::Value::Object(r.instance.clone()));
                if let Some(w) = &r.witness {
                    line.push_str(&format!(" witness: {w}"));
                }
                if let Some(n) = &r.note {
                    line.push_str(&format!(" note: {n}"));
                }
                writeln!(out, "{line}").unwrap();
            }
        }
    }
    writeln!(out, "{}", summary.to_json_line()).unwrap();
}

fn verify(a: &VerifyArgs, format: Format, strategy: Strategy, out: &mut String) -> Result<(), Failure> {
    let cfg = BatchConfig { samples: a.samples, seed: a.seed, max_height: a.bound, force: a.force, strategy };
    let single = a.lambda.is_some();
    let (name, reports) = match a.kind {
        VerifyKind::Identities => ("qbinom-identity", identity_batch(&cfg)),
        VerifyKind::Commutation => {
            let mut reports = Vec::new();
            for rs in systems_for(a, &["A1", "A2"])? {
                reports.extend(commutation_batch(&rs, 5, 3, &cfg));
            }
            ("commutation", reports)
        }
        VerifyKind::Qint => {
            let orders: Vec<u64> = a.l.map_or_else(|| (1..=8).collect(), |l| vec![l]);
            let mut reports = Vec::new();
            for rs in systems_for(a, &["A1", "B2", "G2"])? {
                if single {
                    let lambda = parse_weight("lambda", a.lambda.as_deref().unwrap(), &rs)?;
                    let gamma = parse_weight("gamma", a.gamma.as_deref().context("--gamma is required with --lambda")?, &rs)?;
                    let l = a.l.context("--l is required with --lambda")?;
                    reports.push(check_qint_periodicity(&rs, &lambda, &gamma, l, a.force));
                } else {
                    reports.extend(qint_batch(&rs, &orders, &cfg));
                }
            }
            ("qint-periodicity", reports)
        }
        VerifyKind::Congruence => {
            let orders: Vec<u64> = a.l.map_or_else(|| DEFAULT_ORDERS.to_vec(), |l| vec![l]);
            let mut reports = Vec::new();
            for rs in systems_for(a, &["A1", "A2", "B2", "G2"])? {
                if single {
                    let lambda = parse_weight("lambda", a.lambda.as_deref().unwrap(), &rs)?;
                    let gamma = parse_weight("gamma", a.gamma.as_deref().context("--gamma is required with --lambda")?, &rs)?;
                    let nu = parse_height("height", a.height.as_deref().context("--height is required with --lambda")?, &rs)?;
                    let l = a.l.context("--l is required with --lambda")?;
                    reports.push(check_matrix_congruence(&rs, &lambda, &gamma, l, &nu, a.force)?);
                } else {
                    reports.extend(congruence_batch(&rs, &orders, &cfg)?);
                }
            }
            ("matrix-congruence", reports)
        }
        VerifyKind::Periodicity => {
            let mut reports = Vec::new();
            for rs in systems_for(a, &["A1", "A2", "B2"])? {
                let settings = match &a.field {
                    Some(spec) => vec![PeriodicSetting::new(field(spec)?, a.l)?],
                    None => {
                        let orders = if a.force { vec![3, 5, 7] } else { admissible_orders(&rs, &[3, 5, 7]) };
                        orders
                            .into_iter()
                            .map(|l| PeriodicSetting::parse(&format!("Q@zeta{l}"), None))
                            .collect::<qperiod::Result<Vec<_>>>()?
                    }
                };
                if settings.is_empty() {
                    continue;
                }
                if single {
                    let s = &settings[0];
                    let lambda = parse_weight("lambda", a.lambda.as_deref().unwrap(), &rs)?;
                    let mu = parse_weight("mu", a.mu.as_deref().context("--mu is required with --lambda")?, &rs)?;
                    let gamma = parse_weight("gamma", a.gamma.as_deref().context("--gamma is required with --lambda")?, &rs)?;
                    reports.push(check_periodicity_theorem(&s.field, s.l, &rs, &lambda, &mu, &gamma, a.force)?);
                } else {
                    reports.extend(periodicity_batch(&rs, &settings, &cfg)?);
                }
            }
            ("periodicity", reports)
        }
    };
    let summary = BatchSummary::of(name, a.seed, &reports);
    emit(&reports, &summary, format, out);
    if summary.fail > 0 {
        return Err(Failure::Checks);
    }
    Ok(())
}

fn selftest(strategy: Strategy, out: &mut String) -> Result<(), Failure> {
    let mut failures = 0;
    let mut report = |name: &str, cases: usize, bad: Option<String>| {
        match bad {
            None => writeln!(out, "selftest {name}: PASS ({cases} cases)").unwrap(),
            Some(why) => {
                failures += 1;
                writeln!(out, "selftest {name}: FAIL {why}").unwrap();
            }
        }
    };

    let q = field("Q@1")?;
    let (mut cases, mut bad) = (0, None);
    for name in ["A1", "A2", "B2", "G2"] {
        let rs = RootSystem::named(name)?;
        let bound = RootVector(vec![3; rs.rank()]);
        for top in 0..=1 {
            let lambda = Weight(vec![top; rs.rank()]);
            let table = character_table(&q, &rs, &lambda, &bound, strategy)?;
            let mut oracle = Freudenthal::new(&rs, &lambda)?;
            for e in &table.entries {
                cases += 1;
                let expect = oracle.at_depth(&e.depth.0) as usize;
                if e.dim != expect && bad.is_none() {
                    bad = Some(format!("{name} {lambda} at {}: {} vs {expect}", e.mu, e.dim));
                }
            }
        }
    }
    report("freudenthal", cases, bad);

    let a1 = RootSystem::named("A1")?;
    let (mut cases, mut bad) = (0, None);
    for p in [2u64, 3, 5] {
        let k = field(&format!("F{p}@1"))?;
        for m in 0..=12i64 {
            let table = character_table(&k, &a1, &Weight(vec![m]), &RootVector(vec![m]), strategy)?;
            for e in &table.entries {
                cases += 1;
                let n = e.depth.0[0];
                let expect = usize::from(lucas_predictor(p, m as u64, n as u64));
                if e.dim != expect && bad.is_none() {
                    bad = Some(format!("p={p} m={m} n={n}: {} vs {expect}", e.dim));
                }
            }
        }
    }
    report("lucas", cases, bad);

    let (mut cases, mut bad) = (0, None);
    for spec in ["Q@zeta3", "Q@zeta4", "F2@zeta3", "F3@zeta4"] {
        let k = field(spec)?;
        for m in -6i64..=6 {
            for n in 0..=6u32 {
                cases += 1;
                let expect = usize::from(!k.specialize(&qbinom(m, n, 1)).is_zero());
                let got = weight_multiplicity(&k, &a1, &Weight(vec![m]), &Weight(vec![m - 2 * i64::from(n)]))?;
                if got != expect && bad.is_none() {
                    bad = Some(format!("{spec} m={m} n={n}: {got} vs {expect}"));
                }
            }
        }
    }
    report("rank-one", cases, bad);

    if failures > 0 {
        return Err(Failure::Checks);
    }
    Ok(())
}
