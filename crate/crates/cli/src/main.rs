mod spec;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use modrep_core::lab::{run_suite, Report, Theorem};
use modrep_core::second::{
    all_minimal_representations, att_report, find_representation, is_second_fast, spec_second,
    Kind,
};
use modrep_core::structure::classify;
use modrep_core::{json, Error, Lattice, Limits, ZModule};
use serde_json::{json, Value};

use spec::{parse_spec, ModuleSpec};

const EXIT_COUNTEREXAMPLE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_RESOURCE: u8 = 3;

#[derive(Parser)]
#[command(name = "modrep", version, about = "Second representations of finite Z-modules")]
struct Cli {
    /// Emit machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Refuse lattices with more submodules than this.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    max_submodules: u128,
    /// Refuse representation searches with more candidates per prime.
    #[arg(long, global = true, default_value_t = 4096)]
    max_candidates: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// All submodules.
    Lattice { spec: String },
    /// Second submodules with their attached primes.
    SpecS { spec: String },
    /// Attached primes.
    Att { spec: String },
    /// Second or secondary representations.
    Rep {
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Every minimal representation instead of one.
        #[arg(long)]
        all_minimal: bool,
        spec: String,
    },
    /// Structural profile (hollow, lifting, supplemented, ...).
    Classify { spec: String },
    /// Check theorems over all modules up to an order.
    Verify {
        #[arg(long)]
        max_order: u64,
        /// A theorem id or `all`.
        #[arg(long, default_value = "all")]
        theorem: String,
        /// Worker threads; defaults to the available parallelism.
        #[arg(long)]
        jobs: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Second,
    Secondary,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Kind {
        match k {
            KindArg::Second => Kind::Second,
            KindArg::Secondary => Kind::Secondary,
        }
    }
}

enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

struct Output {
    text: String,
    json: Value,
    code: u8,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = if cli.json {
                writeln!(stdout, "{}", serde_json::to_string_pretty(&out.json).expect("json"))
            } else {
                write!(stdout, "{}", out.text)
            };
            ExitCode::from(out.code)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::ResourceCap { .. } => EXIT_RESOURCE,
                _ => EXIT_USAGE,
            })
        }
    }
}

fn module(text: &str) -> Result<(ModuleSpec, ZModule), Failure> {
    let spec = parse_spec(text).map_err(|e| {
        Failure::Usage(format!("{e}\n  {text}\n  {}^", " ".repeat(e.position)))
    })?;
    let m = spec.module();
    Ok((spec, m))
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let limits = Limits {
        max_submodules: cli.max_submodules,
        max_candidates: cli.max_candidates,
        ..Limits::default()
    };
    match &cli.command {
        Command::Lattice { spec } => lattice(spec, &limits),
        Command::SpecS { spec } => spec_s(spec, &limits),
        Command::Att { spec } => att(spec, &limits),
        Command::Rep {
            kind,
            all_minimal,
            spec,
        } => rep(spec, (*kind).into(), *all_minimal, &limits),
        Command::Classify { spec } => classify_cmd(spec, &limits),
        Command::Verify {
            max_order,
            theorem,
            jobs,
        } => verify(*max_order, theorem, *jobs, &limits),
    }
}

fn ok(text: String, json: Value) -> Result<Output, Failure> {
    Ok(Output { text, json, code: 0 })
}

fn lattice(text: &str, limits: &Limits) -> Result<Output, Failure> {
    let (_, m) = module(text)?;
    let subs = m.submodules(limits)?;
    let mut out = format!("{m}: {} submodules\n", subs.len());
    for s in &subs {
        out += &format!("  {s}  order {}  ann {}\n", s.order(), s.annihilator());
    }
    ok(
        out,
        json!({ "module": m, "submodules": subs.iter().map(json::submodule).collect::<Vec<_>>() }),
    )
}

fn spec_s(text: &str, limits: &Limits) -> Result<Output, Failure> {
    let (_, m) = module(text)?;
    let seconds = spec_second(&m, limits)?;
    let mut out = format!("{m}: {} second submodules\n", seconds.len());
    let mut items = Vec::new();
    for s in &seconds {
        let p = is_second_fast(s).expect("second submodules have a prime");
        out += &format!("  {s}  prime {}\n", p.generator());
        items.push(json!({ "submodule": json::submodule(s), "prime": json::int(p.generator()) }));
    }
    ok(out, json!({ "module": m, "second": items }))
}

fn primes_text(ps: &[modrep_core::ZPrime]) -> String {
    let items: Vec<String> = ps.iter().map(|p| p.generator().to_string()).collect();
    format!("{{{}}}", items.join(", "))
}

fn att(text: &str, limits: &Limits) -> Result<Output, Failure> {
    let (_, m) = module(text)?;
    let r = att_report(&m, limits)?;
    let representable = find_representation(&m, Kind::Second).is_some();
    let mut out = format!("{m}\n");
    out += &format!("  Att^s      {}\n", primes_text(&r.att_all));
    if representable {
        out += &format!("  att^s      {}\n", primes_text(&r.att_main));
        out += &format!("  Min att^s  {}\n", primes_text(&r.min_main));
        out += &format!("  Max att^s  {}\n", primes_text(&r.max_main));
    } else {
        out += "  not second representable\n";
    }
    out += &format!("  Min Att^s  {}\n", primes_text(&r.min_all));
    out += &format!("  Max Att^s  {}\n", primes_text(&r.max_all));
    let mut v = json::att_report(&r);
    v["module"] = serde_json::to_value(&m).expect("json");
    v["second_representable"] = Value::Bool(representable);
    ok(out, v)
}

fn rep(text: &str, kind: Kind, all: bool, limits: &Limits) -> Result<Output, Failure> {
    let (_, m) = module(text)?;
    let reps = if all {
        all_minimal_representations(&m, kind, limits)?
    } else {
        find_representation(&m, kind).into_iter().collect()
    };
    let mut out = String::new();
    if reps.is_empty() {
        out += &format!("{m}: no {} representation\n", kind.name());
    }
    for (i, r) in reps.iter().enumerate() {
        if all {
            out += &format!("representation {}\n", i + 1);
        }
        out += &format!(
            "{m} = {}\n",
            r.summands.iter().map(ToString::to_string).collect::<Vec<_>>().join(" + ")
        );
        for (k, p) in r.summands.iter().zip(&r.attached) {
            out += &format!("  {k}  order {}  {}-{}\n", k.order(), p.generator(), kind.name());
        }
        out += &format!(
            "  attached primes {}  minimal {}  direct {}\n",
            primes_text(&r.prime_set()),
            r.is_minimal,
            r.is_direct
        );
    }
    ok(
        out,
        json!({
            "module": m,
            "kind": kind.name(),
            "representations": reps.iter().map(json::representation).collect::<Vec<_>>(),
        }),
    )
}

fn classify_cmd(text: &str, limits: &Limits) -> Result<Output, Failure> {
    let (_, m) = module(text)?;
    let lat = Lattice::new(&m, limits)?;
    let p = classify(&lat);
    let v = json::profile(&p);
    let mut out = format!("{m}: {} submodules\n", lat.len());
    for (k, val) in v.as_object().expect("profile is an object") {
        out += &format!("  {k:<22} {val}\n");
    }
    let mut v = v;
    v["module"] = serde_json::to_value(&m).expect("json");
    ok(out, v)
}

fn verify(max_order: u64, theorem: &str, jobs: Option<usize>, limits: &Limits) -> Result<Output, Failure> {
    let ids = if theorem == "all" {
        Theorem::ALL.to_vec()
    } else {
        vec![Theorem::from_id(theorem)?]
    };
    let jobs = jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    if jobs == 0 {
        return Err(Failure::Usage("--jobs must be at least 1".into()));
    }
    let report: Report = run_suite(max_order, &ids, jobs, limits)?;
    let code = if report.failures() > 0 {
        EXIT_COUNTEREXAMPLE
    } else if !report.skipped.is_empty() {
        EXIT_RESOURCE
    } else {
        0
    };
    Ok(Output {
        text: report.to_text(),
        json: serde_json::to_value(&report).expect("json"),
        code,
    })
}
