use clap::{Parser, Subcommand, ValueEnum};
use polyolab::characters as ch;
use polyolab::identities::{self as registry, Limits, Report, Summary, VerifyMode};
use polyolab::polyomino::{
    dinv, labelled, labelled_series_coeff, to_aword, to_motzkin, DoublyLabelledPolyomino, LabelledPath,
    LabelledPolyomino, LatticePath, Polyomino, Step,
};
use polyolab::symfunc::{set_degree_cap, Basis};
use polyolab::{macdonald, sl2, BiSymF, Error, SymF};
use serde_json::{json, Value};
use std::process::ExitCode;
use std::time::Instant;

macro_rules! say {
    ($($arg:tt)*) => {{
        use std::io::Write;
        if writeln!(std::io::stdout().lock(), $($arg)*).is_err() {
            std::process::exit(0);
        }
    }};
}

#[derive(Parser)]
#[command(
    name = "polyolab",
    version,
    about = "Parallelogram polyominoes, their characters and the identities around them"
)]
struct Cli {
    /// Worker threads for `verify` (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Largest symmetric-function degree.
    #[arg(long, global = true, default_value_t = 12)]
    degree_cap: usize,
    /// Largest degree for generic Macdonald operators.
    #[arg(long, global = true, default_value_t = 8)]
    generic_cap: usize,
    /// Largest degree for the t=1, t=0 and t=1/q operators.
    #[arg(long, global = true, default_value_t = 10)]
    specialized_cap: usize,
    /// Largest k or n for brute-force enumeration.
    #[arg(long, global = true, default_value_t = 6)]
    brute_cap: usize,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Paths,
    Polyominoes,
    Labelled,
    Doubly,
    Star,
}

#[derive(Clone, Copy, ValueEnum)]
enum Stat {
    Area,
    Dinv,
    Gamma,
    Aword,
    Motzkin,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Paths,
    #[value(name = "L")]
    L,
    #[value(name = "Lq")]
    Lq,
    #[value(name = "L2")]
    L2,
    #[value(name = "L2star")]
    L2star,
    Ribbon,
    Srho,
    Littlewood,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesKind {
    #[value(name = "Pxy")]
    Pxy,
    #[value(name = "labelledGF")]
    LabelledGf,
    Hilbert,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Symbolic,
    Evaluation,
}

#[derive(Subcommand)]
enum Cmd {
    /// List combinatorial objects of width k and height n.
    Enum {
        kind: Kind,
        k: usize,
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Statistic or encoding of a path or polyomino literal.
    Stat { stat: Stat, literal: String },
    /// Frobenius characteristic; parameters are (k, n), (r, n) for srho,
    /// (d, n) for littlewood.
    Frob {
        which: Which,
        a: u32,
        b: u32,
        #[arg(long, default_value = "s")]
        basis: String,
        /// Basis for the second alphabet of L2 and L2star.
        #[arg(long)]
        basis_z: Option<String>,
        /// Area grading where available.
        #[arg(long)]
        graded: bool,
        /// Sum over objects instead of using the closed form.
        #[arg(long)]
        brute: bool,
    },
    /// Check registered identities.
    Verify {
        ids: Vec<String>,
        #[arg(long)]
        all: bool,
        #[arg(long)]
        list: bool,
        #[arg(long)]
        max_k: Option<u32>,
        #[arg(long)]
        max_n: Option<u32>,
        #[arg(long)]
        max_r: Option<u32>,
        #[arg(long)]
        max_d: Option<u32>,
        #[arg(long, value_enum, default_value_t = ModeArg::Symbolic)]
        mode: ModeArg,
        /// Conjecture and observation mismatches also fail the run.
        #[arg(long)]
        strict: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Also write the JSON report to this file.
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// Coefficient tables of generating series.
    Series {
        which: SeriesKind,
        /// Total degree for Pxy and labelledGF, top degree for hilbert.
        #[arg(long, default_value_t = 6)]
        trunc: usize,
        /// Number of columns for hilbert.
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

enum Failure {
    Usage(String),
    Cap(String),
    Verify(String),
    Other(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::DegreeCap { .. } => Failure::Cap(e.to_string()),
            Error::Parse { .. }
            | Error::InvalidSize(_)
            | Error::InvalidObject(_)
            | Error::OutOfDomain(_)
            | Error::Unknown(_) => Failure::Usage(e.to_string()),
            _ => Failure::Other(e.to_string()),
        }
    }
}

type Out = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    set_degree_cap(cli.degree_cap);
    macdonald::set_generic_cap(cli.generic_cap);
    macdonald::set_specialized_cap(cli.specialized_cap);
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let res = match &cli.cmd {
        Cmd::Enum { kind, k, n, format, limit } => cmd_enum(&cli, *kind, *k, *n, *format, *limit),
        Cmd::Stat { stat, literal } => cmd_stat(*stat, literal),
        Cmd::Frob { which, a, b, basis, basis_z, graded, brute } => {
            cmd_frob(&cli, *which, *a, *b, basis, basis_z.as_deref(), *graded, *brute)
        }
        Cmd::Verify { ids, all, list, max_k, max_n, max_r, max_d, mode, strict, format, out } => {
            let lim = Limits { max_k: *max_k, max_n: *max_n, max_r: *max_r, max_d: *max_d };
            let mode = match mode {
                ModeArg::Symbolic => VerifyMode::Symbolic,
                ModeArg::Evaluation => VerifyMode::Evaluation,
            };
            if *list {
                cmd_list()
            } else {
                cmd_verify(ids, *all, &lim, mode, *strict, *format, out.as_deref())
            }
        }
        Cmd::Series { which, trunc, n, format } => cmd_series(*which, *trunc, *n, *format),
    };
    match res {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let (code, msg) = match f {
                Failure::Usage(m) => (2, m),
                Failure::Cap(m) => (3, m),
                Failure::Verify(m) => (4, m),
                Failure::Other(m) => (1, m),
            };
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

fn brute_cap(cli: &Cli, k: usize, n: usize) -> Out {
    let m = k.max(n);
    if m > cli.brute_cap {
        return Err(Failure::Cap(format!("size {k}x{n} exceeds brute-force cap {}", cli.brute_cap)));
    }
    Ok(())
}

fn cmd_enum(cli: &Cli, kind: Kind, k: usize, n: usize, format: Format, limit: Option<usize>) -> Out {
    brute_cap(cli, k, n)?;
    if !matches!(kind, Kind::Paths) && (k == 0 || n == 0) {
        return Err(Failure::Usage(format!("polyominoes need positive width and height, got {k}x{n}")));
    }
    let rows: Vec<(String, u64)> = match kind {
        Kind::Paths => LatticePath::all(k, n).into_iter().map(|p| (p.to_string(), p.area())).collect(),
        Kind::Polyominoes => Polyomino::all(k, n).into_iter().map(|p| (p.to_string(), p.area())).collect(),
        Kind::Labelled => LabelledPolyomino::all(k, n).into_iter().map(|p| (p.to_string(), p.shape().area())).collect(),
        Kind::Doubly | Kind::Star => DoublyLabelledPolyomino::all(k, n, matches!(kind, Kind::Star))
            .into_iter()
            .map(|p| (p.to_string(), p.base().shape().area()))
            .collect(),
    };
    let count = rows.len();
    let shown = &rows[..limit.unwrap_or(count).min(count)];
    match format {
        Format::Text => {
            for (s, _) in shown {
                say!("{s}");
            }
            say!("count={count}");
        }
        Format::Json => {
            let recs: Vec<Value> = shown.iter().map(|(s, a)| json!({"object": s, "area": a})).collect();
            say!("{}", json!({"k": k, "n": n, "records": recs, "count": count}));
        }
    }
    Ok(())
}

fn cmd_stat(stat: Stat, lit: &str) -> Out {
    let bars = lit.matches('|').count();
    let shape = || -> Result<Polyomino, Failure> {
        Ok(match bars {
            1 => lit.parse::<Polyomino>()?,
            2 => lit.parse::<LabelledPolyomino>()?.shape().clone(),
            _ => return Err(Failure::Usage("expected a polyomino literal `upper|lower`".into())),
        })
    };
    let out = match stat {
        Stat::Area if bars == 0 => lit.parse::<LatticePath>()?.area().to_string(),
        Stat::Area if lit.contains("|[") && bars == 1 => lit.parse::<LabelledPath>()?.area().to_string(),
        Stat::Area => shape()?.area().to_string(),
        Stat::Gamma if bars == 0 => {
            let p: LatticePath = lit.parse()?;
            polyolab::Composition::new(p.runs(Step::N))?.to_string()
        }
        Stat::Gamma => shape()?.gamma().to_string(),
        Stat::Dinv => dinv(&shape()?).to_string(),
        Stat::Aword => to_aword(&shape()?).to_string(),
        Stat::Motzkin => to_motzkin(&shape()?).to_string(),
    };
    say!("{out}");
    Ok(())
}

fn basis(s: &str) -> Result<Basis, Failure> {
    Basis::from_symbol(s).ok_or_else(|| Failure::Usage(format!("unknown basis `{s}`; use one of m e h p s f")))
}

#[allow(clippy::too_many_arguments)]
fn cmd_frob(cli: &Cli, which: Which, a: u32, b: u32, by: &str, bz: Option<&str>, graded: bool, brute: bool) -> Out {
    let by = basis(by)?;
    let bz = basis(bz.unwrap_or("s"))?;
    let (ku, nu) = (a as usize, b as usize);
    if brute || matches!(which, Which::Lq | Which::Ribbon) {
        brute_cap(cli, ku, nu)?;
    }
    let degree = match which {
        Which::L2 | Which::L2star => ku.max(nu),
        Which::Srho if brute => (a * b) as usize,
        _ => nu,
    };
    if degree > cli.degree_cap {
        return Err(Failure::Cap(format!("degree {degree} exceeds cap {}", cli.degree_cap)));
    }
    let sym = |f: SymF| -> Out {
        say!("{}", f.to_text(by)?);
        Ok(())
    };
    let bi = |f: BiSymF| -> Out {
        say!("{}", f.to_text(by, bz)?);
        Ok(())
    };
    match which {
        Which::Paths if brute => sym(ch::frob_labelled_paths_brute(ku, nu, graded)?),
        Which::Paths => sym(ch::frob_labelled_paths(a, b, graded)),
        Which::L if brute => sym(ch::frob_l_brute(ku, nu)?),
        Which::L => {
            positive(a, b)?;
            sym(ch::frob_l(a, b))
        }
        Which::Lq => sym(ch::frob_l_q(ku, nu)?),
        Which::L2 if brute => bi(ch::frob_l2_brute(ku, nu, graded)),
        Which::L2 => bi(ch::frob_l2(a, b)?),
        Which::L2star if brute => bi(ch::frob_l2star_brute(ku, nu)),
        Which::L2star => {
            positive(a, b)?;
            bi(ch::frob_l2star(a, b))
        }
        Which::Ribbon => sym(ch::ribbon_frob(ku, nu)?),
        Which::Srho if brute => {
            brute_cap(cli, (a * b) as usize, nu)?;
            sym(ch::s_rho_coefficient(a, b, graded)?)
        }
        Which::Srho if graded => sym(ch::s_rho_graded_rhs(a, b)?),
        Which::Srho => sym(ch::s_rho_closed(a, b)?),
        Which::Littlewood => sym(sl2::littlewood_frob(a, nu)?),
    }
}

fn positive(k: u32, n: u32) -> Out {
    if k == 0 || n == 0 {
        return Err(Failure::Usage(format!("need positive width and height, got {k}x{n}")));
    }
    Ok(())
}

fn cmd_list() -> Out {
    for e in registry::REGISTRY {
        let status = serde_json::to_value(e.status).unwrap_or_default();
        say!("{:<16} {:<12} {}", e.id, status.as_str().unwrap_or(""), e.anchor);
    }
    Ok(())
}

fn cmd_verify(
    ids: &[String],
    all: bool,
    lim: &Limits,
    mode: VerifyMode,
    strict: bool,
    format: Format,
    out: Option<&std::path::Path>,
) -> Out {
    let entries: Vec<&registry::IdentityEntry> = match (ids.is_empty(), all) {
        (false, false) => ids.iter().map(|id| registry::lookup(id)).collect::<Result<_, _>>()?,
        (true, true) => registry::REGISTRY.iter().collect(),
        _ => return Err(Failure::Usage("give identity ids or --all".into())),
    };
    let start = Instant::now();
    let records = registry::run(&entries, lim, mode);
    let summary = Summary::of(&records);
    let report = Report { mode, summary: summary.clone(), time_ms: start.elapsed().as_millis(), records };
    let text = serde_json::to_string_pretty(&report).map_err(|e| Failure::Other(e.to_string()))?;
    if let Some(path) = out {
        std::fs::write(path, &text).map_err(|e| Failure::Other(format!("{}: {e}", path.display())))?;
    }
    match format {
        Format::Json => say!("{text}"),
        Format::Text => {
            for r in &report.records {
                let p = &r.params;
                let fmt = |name: &str, v: Option<u32>| v.map(|v| format!(" {name}={v}")).unwrap_or_default();
                let params = format!("{}{}{}{}", fmt("k", p.k), fmt("n", p.n), fmt("r", p.r), fmt("d", p.d));
                let verdict = match (&r.error, r.equal) {
                    (Some(e), _) => format!("error: {e}"),
                    (None, true) => "equal".into(),
                    (None, false) => "DIFFERENT".into(),
                };
                say!("{}{params} {verdict}", r.id);
            }
            say!(
                "total={} equal={} theorem_failures={} other_failures={} time_ms={}",
                summary.total,
                summary.equal,
                summary.theorem_failures,
                summary.other_failures,
                report.time_ms
            );
        }
    }
    if summary.passes(strict) {
        Ok(())
    } else {
        Err(Failure::Verify(format!(
            "{} theorem and {} other checks failed",
            summary.theorem_failures, summary.other_failures
        )))
    }
}

fn cmd_series(which: SeriesKind, trunc: usize, n: usize, format: Format) -> Out {
    match which {
        SeriesKind::Pxy | SeriesKind::LabelledGf => {
            if trunc > 12 {
                return Err(Failure::Cap(format!("truncation {trunc} exceeds 12")));
            }
            let mut cells = Vec::new();
            for total in 2..=trunc {
                for k in 1..total {
                    let n = total - k;
                    let coeff = match which {
                        SeriesKind::Pxy => ch::area_series(k, n).to_string(),
                        _ => labelled(k as i64, n as i64).to_string(),
                    };
                    cells.push((k, n, coeff));
                }
            }
            match format {
                Format::Text => {
                    for (k, n, c) in &cells {
                        say!("x^{k}*y^{n}: {c}");
                    }
                }
                Format::Json => {
                    let recs: Vec<Value> = cells.iter().map(|(k, n, c)| json!({"k": k, "n": n, "coeff": c})).collect();
                    say!("{}", Value::Array(recs));
                }
            }
            if matches!(which, SeriesKind::LabelledGf) && format == Format::Text {
                let ok =
                    cells.iter().all(|(k, n, c)| *c == labelled_series_coeff(*k as i64, *n as i64 - 1).to_string());
                say!("closed_form_agrees={ok}");
            }
            Ok(())
        }
        SeriesKind::Hilbert => {
            let h = sl2::hilbert(n, trunc)?;
            match format {
                Format::Text => {
                    say!("n={}", h.n);
                    say!("polyomino_counts: {}", h.series_a.join(" "));
                    say!("closed_form: {}", h.series_b.join(" "));
                    let m: Vec<String> = h.mismatches.iter().map(|d| d.to_string()).collect();
                    say!("mismatched_degrees: {}", if m.is_empty() { "none".into() } else { m.join(" ") });
                }
                Format::Json => say!("{}", serde_json::to_string(&h).map_err(|e| Failure::Other(e.to_string()))?),
            }
            Ok(())
        }
    }
}
