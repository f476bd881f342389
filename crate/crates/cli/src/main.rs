//! `humplab` — batch CLI over the exact combinatorics library: print
//! sequences (`seq`), check identities (`verify`), and dump path
//! enumerations (`enumerate`).
//!
//! Output is deterministic byte-for-byte for a fixed command (verify reports
//! additionally carry wall-clock fields). Big integers are always printed as
//! decimal strings. Exit codes: 0 success / all identities pass, 1 identity
//! violation, 2 usage or cap error.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use humplab_core::combinat::{catalan, motzkin, Nat};
use humplab_core::formulas::{
    hc_closed, hc_recurrence, hm_closed, hm_recurrence, hs40, sd_closed, sm_closed, sm_recurrence,
};
use humplab_core::partitions::{hook_sum, s11_closed, s21_closed, strip_sum_closed, HookConstraint};
use humplab_core::paths::{enumerate, total_humps, EnumCaps, FamilyKind, PathFamily};
use humplab_core::verify::{check_all_with_caps, registry_with_caps, IdentityReport, RouteClass};

/// Environment override for every enumeration cap; the `--max-enum-n` flag
/// takes precedence over it.
const ENV_MAX_ENUM: &str = "HUMPLAB_MAX_ENUM_N";
/// Cap for direct hook-sum evaluation (`seq S`), which enumerates partitions.
const DEFAULT_HOOK_SUM_CAP: usize = 60;
/// Default upper bound for formula-route verification.
const DEFAULT_VERIFY_FORMULA_HI: usize = 100;
/// Default upper bound for enumeration-route verification; kept small so a
/// bare `humplab verify all` answers in seconds.
const DEFAULT_VERIFY_ENUM_HI: usize = 8;
/// Default number of records for `seq` when `--to` is omitted.
const DEFAULT_SEQ_SPAN: usize = 19;

#[derive(Parser)]
#[command(
    name = "humplab",
    version,
    about = "Exact hump statistics of lattice paths, tableau hook sums, and identity verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a sequence over a range of n, one record per value
    Seq {
        /// Sequence name: HC, HM, SD, SM, HS40, B, catalan, motzkin, or S
        name: String,
        /// Extra parameters; only S takes any (hook rows and width, e.g. S 2 1)
        params: Vec<usize>,
        /// First index (defaults to the smallest the route supports)
        #[arg(long)]
        from: Option<usize>,
        /// Last index, inclusive
        #[arg(long)]
        to: Option<usize>,
        /// Computation route; defaults per sequence (see long help)
        #[arg(long, value_enum)]
        route: Option<Route>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        /// Override all enumeration caps (also: HUMPLAB_MAX_ENUM_N)
        #[arg(long)]
        max_enum_n: Option<usize>,
    },
    /// Check one identity from the registry, or all of them, exactly
    Verify {
        /// Identity id, or "all"
        id: String,
        /// First index (single id only; defaults to the identity's floor)
        #[arg(long)]
        from: Option<usize>,
        /// Last index; with "all" this bounds the formula-route identities
        #[arg(long)]
        to: Option<usize>,
        /// Bound for enumeration-route identities (with "all" only)
        #[arg(long)]
        enum_to: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        /// Override all enumeration caps (also: HUMPLAB_MAX_ENUM_N)
        #[arg(long)]
        max_enum_n: Option<usize>,
    },
    /// List every path of a family, one per record, as a word over U/F/D
    Enumerate {
        /// Path family: dyck, motzkin, super-dyck, super-motzkin, double-dyck
        family: String,
        /// Size parameter of the family
        n: usize,
        /// Also print each path's hump count and the family total
        #[arg(long)]
        with_humps: bool,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        /// Override all enumeration caps (also: HUMPLAB_MAX_ENUM_N)
        #[arg(long)]
        max_enum_n: Option<usize>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Route {
    Closed,
    Rec,
    Enum,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
    Table,
}

enum CliError {
    Usage(String),
    IdentityFailure,
}

fn usage(message: impl Into<String>) -> CliError {
    CliError::Usage(message.into())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
        Err(CliError::IdentityFailure) => ExitCode::from(1),
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Seq { name, params, from, to, route, format, max_enum_n } => {
            cmd_seq(&name, &params, from, to, route, format, max_enum_n)
        }
        Command::Verify { id, from, to, enum_to, format, max_enum_n } => {
            cmd_verify(&id, from, to, enum_to, format, max_enum_n)
        }
        Command::Enumerate { family, n, with_humps, format, max_enum_n } => {
            cmd_enumerate(&family, n, with_humps, format, max_enum_n)
        }
    }
}

/// Flag beats environment beats defaults.
fn resolve_cap_override(flag: Option<usize>) -> Result<Option<usize>, CliError> {
    if flag.is_some() {
        return Ok(flag);
    }
    match std::env::var(ENV_MAX_ENUM) {
        Ok(raw) => raw
            .parse::<usize>()
            .map(Some)
            .map_err(|_| usage(format!("{ENV_MAX_ENUM}={raw:?} is not a nonnegative integer"))),
        Err(_) => Ok(None),
    }
}

fn resolve_caps(flag: Option<usize>) -> Result<EnumCaps, CliError> {
    Ok(match resolve_cap_override(flag)? {
        Some(cap) => EnumCaps::uniform(cap),
        None => EnumCaps::default(),
    })
}

// ---------------------------------------------------------------------------
// seq

struct SeqRoute {
    min_n: usize,
    /// Enumeration-backed routes carry their cap; formula routes are uncapped.
    enum_cap: Option<usize>,
    eval: Box<dyn Fn(usize) -> Result<Nat, String>>,
}

impl SeqRoute {
    fn formula(min_n: usize, eval: impl Fn(usize) -> Nat + 'static) -> Self {
        Self { min_n, enum_cap: None, eval: Box::new(move |n| Ok(eval(n))) }
    }

    fn enumerated(min_n: usize, cap: usize, eval: impl Fn(usize) -> Result<Nat, String> + 'static) -> Self {
        Self { min_n, enum_cap: Some(cap), eval: Box::new(eval) }
    }
}

fn family_count(family: PathFamily) -> Nat {
    Nat::from(enumerate(family).count() as u64)
}

fn seq_route(
    name: &str,
    params: &[usize],
    route: Option<Route>,
    caps: EnumCaps,
    hook_cap: usize,
) -> Result<SeqRoute, CliError> {
    let canonical = name.to_ascii_lowercase();
    if canonical != "s" && !params.is_empty() {
        return Err(usage(format!("sequence {name} takes no parameters")));
    }
    let no_route = |r: Route| {
        usage(format!("sequence {name} has no {:?} route", r).to_ascii_lowercase())
    };
    let humps = move |family: PathFamily| -> Result<Nat, String> {
        total_humps(family, &caps).map_err(|e| e.to_string())
    };
    match canonical.as_str() {
        "hc" => match route.unwrap_or(Route::Closed) {
            Route::Closed => Ok(SeqRoute::formula(1, hc_closed)),
            Route::Rec => Ok(SeqRoute::formula(0, hc_recurrence)),
            Route::Enum => Ok(SeqRoute::enumerated(0, caps.dyck, move |n| {
                humps(PathFamily::dyck(n))
            })),
        },
        "hm" => match route.unwrap_or(Route::Closed) {
            Route::Closed => Ok(SeqRoute::formula(0, hm_closed)),
            Route::Rec => Ok(SeqRoute::formula(0, hm_recurrence)),
            Route::Enum => Ok(SeqRoute::enumerated(0, caps.motzkin, move |n| {
                humps(PathFamily::motzkin(n))
            })),
        },
        "sd" => match route.unwrap_or(Route::Closed) {
            Route::Closed => Ok(SeqRoute::formula(1, sd_closed)),
            Route::Rec => Err(no_route(Route::Rec)),
            Route::Enum => Ok(SeqRoute::enumerated(0, caps.super_dyck, move |n| {
                Ok(family_count(PathFamily::super_dyck(n)))
            })),
        },
        "sm" => match route.unwrap_or(Route::Closed) {
            Route::Closed => Ok(SeqRoute::formula(0, sm_closed)),
            Route::Rec => Ok(SeqRoute::formula(0, sm_recurrence)),
            Route::Enum => Ok(SeqRoute::enumerated(0, caps.super_motzkin, move |n| {
                Ok(family_count(PathFamily::super_motzkin(n)))
            })),
        },
        "hs40" => match route.unwrap_or(Route::Closed) {
            Route::Closed => Ok(SeqRoute::formula(1, hs40)),
            Route::Rec => Err(no_route(Route::Rec)),
            Route::Enum => Ok(SeqRoute::enumerated(1, caps.double_dyck, move |n| {
                humps(PathFamily::double_dyck(n))
            })),
        },
        // B is the halved trinomial sum, identical in value to HM.
        "b" => match route.unwrap_or(Route::Closed) {
            Route::Closed => Ok(SeqRoute::formula(0, hm_closed)),
            other => Err(no_route(other)),
        },
        "catalan" => match route.unwrap_or(Route::Closed) {
            Route::Closed => Ok(SeqRoute::formula(0, catalan)),
            Route::Rec => Err(no_route(Route::Rec)),
            Route::Enum => Ok(SeqRoute::enumerated(0, caps.dyck, move |n| {
                Ok(family_count(PathFamily::dyck(n)))
            })),
        },
        "motzkin" => match route.unwrap_or(Route::Rec) {
            Route::Rec => Ok(SeqRoute::formula(0, motzkin)),
            Route::Closed => Ok(SeqRoute::formula(0, |n| strip_sum_closed(3, n))),
            Route::Enum => Ok(SeqRoute::enumerated(0, caps.motzkin, move |n| {
                Ok(family_count(PathFamily::motzkin(n)))
            })),
        },
        "s" => {
            let [rows, width] = params else {
                return Err(usage(
                    "sequence S needs exactly two parameters, e.g. `seq S 2 1`",
                ));
            };
            let constraint = HookConstraint::new(*rows, *width);
            match route.unwrap_or(Route::Enum) {
                Route::Enum => Ok(SeqRoute::enumerated(0, hook_cap, move |n| {
                    Ok(hook_sum(constraint, n))
                })),
                Route::Closed => match (*rows, *width) {
                    (2..=5, 0) => {
                        let rows = *rows;
                        Ok(SeqRoute::formula(0, move |n| strip_sum_closed(rows, n)))
                    }
                    (1, 1) => Ok(SeqRoute::formula(1, s11_closed)),
                    (2, 1) => Ok(SeqRoute::formula(2, |n| {
                        s21_closed(n).expect("the route floor keeps n in the formula domain")
                    })),
                    _ => Err(usage(format!("no closed form is wired up for S{constraint}"))),
                },
                Route::Rec => Err(no_route(Route::Rec)),
            }
        }
        _ => Err(usage(format!(
            "unknown sequence {name:?}; expected HC, HM, SD, SM, HS40, B, catalan, motzkin, or S"
        ))),
    }
}

fn cmd_seq(
    name: &str,
    params: &[usize],
    from: Option<usize>,
    to: Option<usize>,
    route: Option<Route>,
    format: Format,
    max_enum_n: Option<usize>,
) -> Result<(), CliError> {
    let caps = resolve_caps(max_enum_n)?;
    let hook_cap = resolve_cap_override(max_enum_n)?.unwrap_or(DEFAULT_HOOK_SUM_CAP);
    let seq = seq_route(name, params, route, caps, hook_cap)?;

    let lo = from.unwrap_or(seq.min_n);
    if lo < seq.min_n {
        return Err(usage(format!(
            "this route of {name} starts at n = {}; got --from {lo}",
            seq.min_n
        )));
    }
    let hi = to.unwrap_or_else(|| match seq.enum_cap {
        Some(cap) => cap.min(lo + DEFAULT_SEQ_SPAN),
        None => lo + DEFAULT_SEQ_SPAN,
    });
    if hi < lo {
        return Err(usage(format!("empty range: --from {lo} --to {hi}")));
    }
    if let Some(cap) = seq.enum_cap {
        if hi > cap {
            return Err(usage(format!(
                "--to {hi} exceeds the enumeration cap {cap}; raise it with --max-enum-n"
            )));
        }
    }

    let mut records = Vec::with_capacity(hi - lo + 1);
    for n in lo..=hi {
        records.push((n, (seq.eval)(n).map_err(CliError::Usage)?));
    }

    match format {
        Format::Csv => {
            println!("n,value");
            for (n, value) in &records {
                println!("{n},{value}");
            }
        }
        Format::Json => {
            let array: Vec<_> = records
                .iter()
                .map(|(n, value)| json!({"n": n, "value": value.to_string()}))
                .collect();
            println!("{}", serde_json::Value::Array(array));
        }
        Format::Table => {
            let n_width = records.last().map_or(1, |(n, _)| n.to_string().len()).max(1);
            println!("{:>n_width$}  value", "n");
            for (n, value) in &records {
                println!("{n:>n_width$}  {value}");
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// verify

fn cmd_verify(
    id: &str,
    from: Option<usize>,
    to: Option<usize>,
    enum_to: Option<usize>,
    format: Format,
    max_enum_n: Option<usize>,
) -> Result<(), CliError> {
    let caps = resolve_caps(max_enum_n)?;
    let reports = if id == "all" {
        if from.is_some() {
            return Err(usage("--from is not supported with `verify all`; each identity starts at its own floor"));
        }
        let hi_formula = to.unwrap_or(DEFAULT_VERIFY_FORMULA_HI);
        let hi_enum = enum_to.unwrap_or(DEFAULT_VERIFY_ENUM_HI);
        check_all_with_caps(hi_formula, hi_enum, &caps)
    } else {
        if enum_to.is_some() {
            return Err(usage("--enum-to only applies to `verify all`"));
        }
        let registry = registry_with_caps(&caps);
        let identity = registry.iter().find(|i| i.id() == id).ok_or_else(|| {
            let known: Vec<&str> = registry.iter().map(|i| i.id()).collect();
            usage(format!("unknown identity {id:?}; known ids: {}", known.join(", ")))
        })?;
        let lo = from.unwrap_or(identity.valid_from());
        let default_hi = match identity.class() {
            RouteClass::Formula => identity.max_n().min(DEFAULT_VERIFY_FORMULA_HI),
            RouteClass::Enumeration => identity.max_n().min(DEFAULT_VERIFY_ENUM_HI),
        };
        let hi = to.unwrap_or(default_hi.max(lo));
        vec![identity.check(lo, hi).map_err(|e| usage(e.to_string()))?]
    };

    print_reports(&reports, format);
    if reports.iter().all(IdentityReport::pass) {
        Ok(())
    } else {
        Err(CliError::IdentityFailure)
    }
}

fn print_reports(reports: &[IdentityReport], format: Format) {
    match format {
        Format::Csv => {
            println!("id,lo,hi,pass,failures");
            for r in reports {
                println!("{},{},{},{},{}", r.id, r.lo, r.hi, r.pass(), r.failures.len());
            }
        }
        Format::Json => {
            let array: Vec<_> = reports.iter().map(IdentityReport::to_json).collect();
            println!("{}", serde_json::Value::Array(array));
        }
        Format::Table => {
            let id_width = reports.iter().map(|r| r.id.len()).max().unwrap_or(0);
            for r in reports {
                let verdict = if r.pass() { "PASS" } else { "FAIL" };
                println!(
                    "{verdict}  {:<id_width$}  [{}..{}]  {} failure(s)  ({} ms)",
                    r.id,
                    r.lo,
                    r.hi,
                    r.failures.len(),
                    r.elapsed.as_millis()
                );
                for f in r.failures.iter().take(10) {
                    println!("      n={}: lhs={} rhs={}", f.n, f.lhs, f.rhs);
                }
                if r.failures.len() > 10 {
                    println!("      ... {} more", r.failures.len() - 10);
                }
            }
            let failed = reports.iter().filter(|r| !r.pass()).count();
            if failed == 0 {
                println!("checked {} identities: all pass", reports.len());
            } else {
                println!("checked {} identities: {failed} FAILED", reports.len());
            }
        }
    }
}

// ---------------------------------------------------------------------------
// enumerate

fn cmd_enumerate(
    family: &str,
    n: usize,
    with_humps: bool,
    format: Format,
    max_enum_n: Option<usize>,
) -> Result<(), CliError> {
    let kind: FamilyKind = family.parse().map_err(|_| {
        usage(format!(
            "unknown family {family:?}; expected dyck, motzkin, super-dyck, super-motzkin, or double-dyck"
        ))
    })?;
    let caps = resolve_caps(max_enum_n)?;
    let cap = caps.cap_for(kind);
    if n > cap {
        return Err(usage(format!(
            "n = {n} exceeds the {kind} enumeration cap {cap}; raise it with --max-enum-n"
        )));
    }
    if with_humps && !kind.supports_humps() {
        return Err(usage(format!("humps are not defined for {kind} paths")));
    }

    let family = PathFamily::new(kind, n);
    let mut count: u64 = 0;
    let mut hump_total = Nat::from(0u32);
    let mut json_paths = Vec::new();

    if format == Format::Csv {
        println!("{}", if with_humps { "path,humps" } else { "path" });
    }
    for path in enumerate(family) {
        let humps = if with_humps {
            let h = path.hump_count().expect("hump support was checked above");
            hump_total += h as u64;
            Some(h)
        } else {
            None
        };
        count += 1;
        match format {
            Format::Csv => match humps {
                Some(h) => println!("{path},{h}"),
                None => println!("{path}"),
            },
            Format::Table => match humps {
                Some(h) => println!("{path}  {h}"),
                None => println!("{path}"),
            },
            Format::Json => json_paths.push(match humps {
                Some(h) => json!({"path": path.to_string(), "humps": h}),
                None => json!({"path": path.to_string()}),
            }),
        }
    }

    match format {
        Format::Csv => {
            if with_humps {
                println!("# total_paths={count} total_humps={hump_total}");
            } else {
                println!("# total_paths={count}");
            }
        }
        Format::Table => {
            if with_humps {
                println!("{count} path(s), {hump_total} hump(s)");
            } else {
                println!("{count} path(s)");
            }
        }
        Format::Json => {
            let mut object = json!({
                "family": kind.to_string(),
                "n": n,
                "paths": json_paths,
                "count": count.to_string(),
            });
            if with_humps {
                object["total_humps"] = json!(hump_total.to_string());
            }
            println!("{object}");
        }
    }
    Ok(())
}
