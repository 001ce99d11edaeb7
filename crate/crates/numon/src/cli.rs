//! Argument parsing and command dispatch for the `numon` binary.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use numon_core::arith::{cem, dem, rs_decompose};
use numon_core::constructions::{sharp_family_large_m, sharp_family_small_delta, verify_sharp, SharpnessReport};
use numon_core::ideals::{
    ek_betti, istar_ideal, koszul_betti, lex_ideal_from_hf, lex_plus_powers, very_compressed_lex, BettiTable,
    GradedIdeal, HilbertFunction, MonomialIdeal,
};
use numon_core::presentation::rho;
use numon_core::sumset::{asymptotic_t, asymptotic_threshold, not_sharp_region};
use numon_core::NumericalMonoid;
use serde_json::{json, Map, Value};

use crate::output::{big_value, join, key_values, Document, Format, Outcome, Table, Timer, SCHEMA_VERSION};
use crate::parse::Span;
use crate::search::{default_kunz_bound, run_search, thread_pool, SearchConfig};
use crate::verify::{self, Target, VerifyOptions};
use crate::Failure;

#[derive(Debug, Parser)]
#[command(name = "numon", version, about = "Invariants, presentations and extremal Betti numbers of numerical monoids")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Multiplicity, Apéry set, Frobenius number, type and minimal relations.
    Invariants {
        /// Generators, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        gens: Vec<u64>,
    },
    /// Upper bounds on relations and type for embedding dimension e+1 and multiplicity m.
    Bounds {
        /// One value or a range `a..b`.
        #[arg(long)]
        e: Span,
        /// One value or a range `a..b`.
        #[arg(long)]
        m: Span,
    },
    /// Build an extremal family member and check it.
    Family {
        #[command(subcommand)]
        which: FamilyCommand,
    },
    /// Generators, Hilbert function and Betti table of a monomial or binomial ideal.
    Ideal(IdealArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Exhaustive search over a box of Kunz coordinates.
    Search(SearchArgs),
}

#[derive(Debug, Subcommand)]
pub enum FamilyCommand {
    /// Multiplicity e + delta with 1 <= delta <= 6.
    Small {
        #[arg(long)]
        e: u64,
        #[arg(long)]
        delta: u64,
    },
    /// Large multiplicity, m >= 2^t.
    Large {
        #[arg(long)]
        e: u64,
        #[arg(long)]
        m: u64,
    },
}

#[derive(Debug, Args)]
#[group(id = "source", required = true, multiple = false)]
pub struct IdealSource {
    /// Very compressed lex ideal of this colength (needs --e).
    #[arg(long, group = "source")]
    pub compressed: Option<u64>,
    /// Lex ideal (or lex-plus-powers with --powers) with this Hilbert function (needs --e).
    #[arg(long, value_delimiter = ',', group = "source")]
    pub hf: Option<Vec<u64>>,
    /// Initial-form ideal of the monoid with these generators.
    #[arg(long, value_delimiter = ',', group = "source")]
    pub istar: Option<Vec<u64>>,
}

#[derive(Debug, Args)]
pub struct IdealArgs {
    /// Number of variables.
    #[arg(long)]
    pub e: Option<usize>,
    #[command(flatten)]
    pub source: IdealSource,
    /// Pure-power degrees d_1 <= ... <= d_c for a lex-plus-powers ideal.
    #[arg(long, value_delimiter = ',', requires = "hf")]
    pub powers: Option<Vec<u32>>,
    /// Use Koszul homology even for stable monomial ideals.
    #[arg(long)]
    pub koszul: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub target: Target,
    #[arg(long)]
    pub e: Option<Span>,
    #[arg(long)]
    pub delta: Option<Span>,
    #[arg(long)]
    pub m_max: Option<u64>,
    /// Width of the multiplicity window past the start value.
    #[arg(long)]
    pub span: Option<u64>,
    /// Colength minus number of variables.
    #[arg(long)]
    pub excess: Option<u64>,
    #[arg(long)]
    pub colength_max: Option<u64>,
    #[arg(long)]
    pub kunz_bound: Option<u64>,
    /// Worker threads; 0 uses all cores.
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long)]
    pub e: u64,
    #[arg(long)]
    pub m: u64,
    /// Largest Kunz coordinate; defaults to 4 up to m = 12, 3 up to 15, else 2.
    #[arg(long)]
    pub kunz_bound: Option<u64>,
    /// Worker threads; 0 uses all cores.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    /// Line-delimited JSON file recording finished work units; resumed when present.
    #[arg(long)]
    pub checkpoint: Option<PathBuf>,
    /// Length of the Kunz prefix defining a work unit.
    #[arg(long, default_value_t = numon_core::search::DEFAULT_UNIT_DEPTH)]
    pub unit_depth: usize,
}

fn inputs(pairs: Vec<(&str, Value)>) -> Map<String, Value> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn outcome(command: &str, inputs: Map<String, Value>, results: Value, timer: Timer, human: String) -> Outcome {
    Outcome {
        document: Document {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            inputs,
            results,
            timings: timer.finish(),
        },
        human,
        table: None,
        ok: true,
    }
}

pub fn run(cli: &Cli) -> Result<Outcome, Failure> {
    match &cli.command {
        Command::Invariants { gens } => invariants(gens),
        Command::Bounds { e, m } => bounds(e, m),
        Command::Family { which } => family(which),
        Command::Ideal(args) => ideal(args),
        Command::Verify(args) => verify_cmd(args),
        Command::Search(args) => search(args),
    }
}

fn invariants(gens: &[u64]) -> Result<Outcome, Failure> {
    let mut timer = Timer::default();
    let g = NumericalMonoid::from_generators(gens).map_err(|e| Failure::Usage(e.to_string()))?;
    let apery = timer.phase("apery", || g.apery_set().elements);
    let pseudo = g.pseudo_frobenius();
    let report = timer.phase("presentation", || rho(&g));
    let betti: Vec<Value> = report
        .betti_elements
        .iter()
        .map(|b| json!({"element": b.value, "components": b.components}))
        .collect();
    let results = json!({
        "generators": g.generators(),
        "multiplicity": g.multiplicity(),
        "edim": g.edim(),
        "apery_set": apery,
        "frobenius": g.frobenius(),
        "gaps_count": g.gaps().len(),
        "pseudo_frobenius": pseudo,
        "type": g.monoid_type(),
        "rho": report.rho,
        "betti_elements": betti,
    });
    let breakdown = report
        .betti_elements
        .iter()
        .map(|b| format!("{} ({} components)", b.value, b.components))
        .collect::<Vec<_>>()
        .join(", ");
    let human = key_values(&[
        ("monoid", g.to_string()),
        ("multiplicity", g.multiplicity().to_string()),
        ("edim", g.edim().to_string()),
        ("apery set", join(&apery)),
        ("frobenius", g.frobenius().map_or("none".into(), |f| f.to_string())),
        ("gaps", g.gaps().len().to_string()),
        ("pseudo-frobenius", join(&pseudo)),
        ("type", g.monoid_type().to_string()),
        ("rho", report.rho.to_string()),
        ("betti elements", breakdown),
    ]);
    Ok(outcome("invariants", inputs(vec![("gens", json!(gens))]), results, timer, human))
}

fn bounds(es: &Span, ms: &Span) -> Result<Outcome, Failure> {
    let mut timer = Timer::default();
    let mut rows = Vec::new();
    let mut table = Table {
        header: ["e", "m", "cem", "dem", "r", "s", "non_sharp_k", "asymptotic_threshold"].map(String::from).to_vec(),
        rows: Vec::new(),
    };
    let mut human = String::new();
    timer.phase("bounds", || -> Result<(), Failure> {
        for e in es.iter() {
            for m in ms.iter() {
                let pair = rs_decompose(e, m).map_err(|err| Failure::Usage(err.to_string()))?;
                let (c, d) = (cem(e, m).expect("checked"), dem(e, m).expect("checked"));
                let k = if e >= 3 { not_sharp_region(e, m) } else { None };
                let threshold = (e >= 3).then(|| asymptotic_threshold(e));
                rows.push(json!({
                    "e": e, "m": m, "cem": big_value(&c), "dem": big_value(&d),
                    "r": pair.r, "s": pair.s,
                    "non_sharp_k": k,
                    "strict": k.is_some(),
                    "asymptotic_t": (e >= 3).then(|| asymptotic_t(e)),
                    "asymptotic_threshold": threshold.as_ref().map(big_value),
                }));
                table.rows.push(vec![
                    e.to_string(),
                    m.to_string(),
                    c.to_string(),
                    d.to_string(),
                    pair.r.to_string(),
                    pair.s.to_string(),
                    k.map_or(String::new(), |k| k.to_string()),
                    threshold.as_ref().map_or(String::new(), |t| t.to_string()),
                ]);
                let verdict = match k {
                    Some(k) => format!("strict (k = {k})"),
                    None => "not decided by the sumset criterion".into(),
                };
                human.push_str(&format!(
                    "e={e} m={m}  cem={c}  dem={d}  (r,s)=({},{})  {verdict}\n",
                    pair.r, pair.s
                ));
            }
        }
        Ok(())
    })?;
    let mut out = outcome(
        "bounds",
        inputs(vec![("e", json!(es.to_string())), ("m", json!(ms.to_string()))]),
        Value::Array(rows),
        timer,
        human,
    );
    out.table = Some(table);
    Ok(out)
}

fn sharpness_json(g: &NumericalMonoid, r: &SharpnessReport) -> Value {
    json!({
        "generators": g.generators(),
        "apery_set": g.apery_set().elements,
        "multiplicity_ok": r.multiplicity_ok,
        "edim_ok": r.edim_ok,
        "unique_apery_factorizations": r.unique_apery_factorizations,
        "rho": r.rho,
        "rho_unique": r.rho_unique,
        "cem": r.cem.as_ref().map(big_value),
        "type": r.monoid_type,
        "dem": r.dem.as_ref().map(big_value),
        "sharp": r.is_sharp(),
        "type_attains_dem": r.type_attains_dem(),
    })
}

fn family(which: &FamilyCommand) -> Result<Outcome, Failure> {
    let mut timer = Timer::default();
    let (name, e, m, built) = match *which {
        FamilyCommand::Small { e, delta } => ("family small", e, e + delta, sharp_family_small_delta(e, delta)),
        FamilyCommand::Large { e, m } => ("family large", e, m, sharp_family_large_m(e, m)),
    };
    let g = built.map_err(|err| Failure::Usage(err.to_string()))?;
    let r = timer.phase("verify", || verify_sharp(&g, e, m));
    let human = key_values(&[
        ("monoid", g.to_string()),
        ("apery set", join(&g.apery_set().elements)),
        ("rho", r.rho.to_string()),
        ("rho (unique factorization)", r.rho_unique.map_or("n/a".into(), |x| x.to_string())),
        ("cem", r.cem.as_ref().map_or("n/a".into(), |c| c.to_string())),
        ("type", r.monoid_type.to_string()),
        ("dem", r.dem.as_ref().map_or("n/a".into(), |d| d.to_string())),
        ("sharp", r.is_sharp().to_string()),
    ]);
    let mut out = outcome(name, inputs(vec![("e", json!(e)), ("m", json!(m))]), sharpness_json(&g, &r), timer, human);
    out.ok = r.is_sharp();
    Ok(out)
}

fn betti_json(t: &BettiTable) -> Value {
    let entries: Vec<Value> = t.entries.iter().map(|(&(i, j), &c)| json!({"i": i, "j": j, "value": c})).collect();
    json!({"totals": t.totals(), "graded": entries})
}

fn betti_human(t: &BettiTable) -> String {
    let mut out = String::new();
    for (&(i, j), &c) in &t.entries {
        out.push_str(&format!("  beta_{{{i},{j}}} = {c}\n"));
    }
    out
}

fn ideal(args: &IdealArgs) -> Result<Outcome, Failure> {
    let mut timer = Timer::default();
    let need_e = || args.e.ok_or_else(|| Failure::Usage("--e is required for this ideal".into()));
    let (label, ideal): (String, GradedIdeal) = if let Some(m) = args.source.compressed {
        let e = need_e()?;
        if e == 0 || m == 0 {
            return Err(Failure::Usage("need e >= 1 and colength >= 1".into()));
        }
        (format!("very compressed lex, colength {m}"), GradedIdeal::from(&very_compressed_lex(e, m)))
    } else if let Some(hf) = &args.source.hf {
        let e = need_e()?;
        let hf = HilbertFunction::new(hf.clone());
        let l: MonomialIdeal = match &args.powers {
            Some(p) => lex_plus_powers(e, p, &hf)?,
            None => lex_ideal_from_hf(e, &hf)?,
        };
        (format!("lex{} with hilbert function {}", if args.powers.is_some() { "-plus-powers" } else { "" }, join(&hf.values)), GradedIdeal::from(&l))
    } else {
        let gens = args.source.istar.as_ref().expect("clap enforces one source");
        let g = NumericalMonoid::from_generators(gens).map_err(|e| Failure::Usage(e.to_string()))?;
        (format!("initial forms of {g}"), timer.phase("istar", || istar_ideal(&g))?)
    };
    let hf = timer.phase("hilbert", || numon_core::ideals::graded_hilbert_function(&ideal))?;
    let monomial = ideal.is_monomial().then(|| MonomialIdeal::new(ideal.nvars(), ideal.monomial_gens().to_vec())).transpose()?;
    let (engine, table) = match monomial.as_ref().filter(|_| !args.koszul).map(ek_betti) {
        Some(Ok(t)) => ("eliahou-kervaire", t),
        _ => ("koszul", timer.phase("koszul", || koszul_betti(&ideal))?),
    };
    let gens: Vec<String> = ideal.monomial_gens().iter().map(|u| u.to_string()).collect();
    let binomials: Vec<String> = ideal.binomial_gens().iter().map(|(u, v)| format!("{u} - {v}")).collect();
    let results = json!({
        "nvars": ideal.nvars(),
        "monomial_generators": gens,
        "binomial_generators": binomials,
        "hilbert_function": hf.values,
        "colength": hf.colength(),
        "engine": engine,
        "betti": betti_json(&table),
    });
    let mut human = key_values(&[
        ("ideal", label.clone()),
        ("variables", ideal.nvars().to_string()),
        ("monomial generators", gens.join(", ")),
        ("binomial generators", binomials.join(", ")),
        ("hilbert function", join(&hf.values)),
        ("colength", hf.colength().to_string()),
        ("engine", engine.to_string()),
        ("total betti", join(&table.totals())),
    ]);
    human.push_str(&betti_human(&table));
    Ok(outcome("ideal", inputs(vec![("ideal", json!(label))]), results, timer, human))
}

fn verify_cmd(args: &VerifyArgs) -> Result<Outcome, Failure> {
    let mut timer = Timer::default();
    let opts = VerifyOptions {
        e: args.e.clone(),
        delta: args.delta.clone(),
        m_max: args.m_max,
        span: args.span,
        excess: args.excess,
        colength_max: args.colength_max,
        kunz_bound: args.kunz_bound,
    };
    let pool = thread_pool(args.jobs)?;
    let report = timer.phase("verify", || pool.install(|| verify::run(args.target, &opts)))?;
    let mut input = vec![("target", json!(args.target.name()))];
    for (k, v) in [
        ("e", args.e.as_ref().map(|s| json!(s.to_string()))),
        ("delta", args.delta.as_ref().map(|s| json!(s.to_string()))),
        ("m_max", args.m_max.map(|x| json!(x))),
        ("span", args.span.map(|x| json!(x))),
        ("excess", args.excess.map(|x| json!(x))),
        ("colength_max", args.colength_max.map(|x| json!(x))),
        ("kunz_bound", args.kunz_bound.map(|x| json!(x))),
    ] {
        if let Some(v) = v {
            input.push((k, v));
        }
    }
    let mut out = outcome("verify", inputs(input), report.to_json(), timer, report.to_human());
    out.ok = report.passed();
    Ok(out)
}

fn search(args: &SearchArgs) -> Result<Outcome, Failure> {
    let mut timer = Timer::default();
    let k = args.kunz_bound.unwrap_or_else(|| default_kunz_bound(args.m));
    let cfg = SearchConfig {
        e: args.e,
        m: args.m,
        kunz_bound: k,
        jobs: args.jobs,
        unit_depth: args.unit_depth,
        checkpoint: args.checkpoint.clone(),
    };
    let run = timer.phase("search", || run_search(&cfg))?;
    let r = &run.result;
    let (c, d) = match (cem(r.e, r.m), dem(r.e, r.m)) {
        (Ok(c), Ok(d)) => (Some(c), Some(d)),
        _ => (None, None),
    };
    let results = json!({
        "e": r.e,
        "m": r.m,
        "kunz_bound": r.kunz_bound,
        "exhausted": r.exhausted,
        "scanned": r.scanned,
        "matching": r.matching,
        "best_rho": r.best_rho,
        "rho_witness": r.rho_witness.as_ref().map(|g| g.generators().to_vec()),
        "best_type": r.best_type,
        "type_witness": r.type_witness.as_ref().map(|g| g.generators().to_vec()),
        "cem": c.as_ref().map(big_value),
        "dem": d.as_ref().map(big_value),
        "units": run.units_total,
        "units_resumed": run.units_resumed,
    });
    let show = |g: &Option<NumericalMonoid>| g.as_ref().map_or("none".into(), |g| g.to_string());
    let human = key_values(&[
        ("e, m", format!("{}, {}", r.e, r.m)),
        ("kunz bound", r.kunz_bound.to_string()),
        ("monoids scanned", r.scanned.to_string()),
        ("with edim e+1", r.matching.to_string()),
        ("best rho (lower bound)", format!("{}  {}", r.best_rho, show(&r.rho_witness))),
        ("best type (lower bound)", format!("{}  {}", r.best_type, show(&r.type_witness))),
        ("cem", c.as_ref().map_or("n/a".into(), |c| c.to_string())),
        ("dem", d.as_ref().map_or("n/a".into(), |d| d.to_string())),
        ("units resumed", format!("{} of {}", run.units_resumed, run.units_total)),
    ]);
    let mut out = outcome(
        "search",
        inputs(vec![("e", json!(args.e)), ("m", json!(args.m)), ("kunz_bound", json!(k))]),
        results,
        timer,
        human,
    );
    out.table = Some(Table {
        header: ["e", "m", "cem", "dem", "best_rho", "best_type"].map(String::from).to_vec(),
        rows: vec![vec![
            r.e.to_string(),
            r.m.to_string(),
            c.map_or(String::new(), |c| c.to_string()),
            d.map_or(String::new(), |d| d.to_string()),
            r.best_rho.to_string(),
            r.best_type.to_string(),
        ]],
    });
    Ok(out)
}

/// Parses `args`, runs the command, prints the result, and returns the exit code.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return if err.use_stderr() { 2 } else { 0 };
        }
    };
    match run(&cli).and_then(|o| o.render(cli.format).map(|s| (o, s))) {
        Ok((o, s)) => {
            print!("{s}");
            o.exit_code()
        }
        Err(f) => {
            eprintln!("{f}");
            f.exit_code()
        }
    }
}
