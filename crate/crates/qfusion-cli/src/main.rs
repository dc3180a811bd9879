mod cache;
mod compute;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use qfusion::identities::hierarchy_build;
use qfusion::plactic::{
    column_word, format_word, multipartition_to_word, normalize_tableau_logged, parse_word, word_to_multipartition,
    MultiPartition, Tableau,
};
use qfusion::spectral::{smatrix, tmatrix};
use qfusion::suites::run_suite;
use qfusion::{AffineWeight, Error, Partition};
use serde_json::json;

use compute::{diff, fusion_entries, gw_entries, lr_disagreements, Entries, Method};
use output::{Format, TableOutput};

#[derive(Parser, Debug)]
#[command(
    name = "qfusion",
    version,
    about = "Fusion coefficients and Grassmannian Gromov-Witten invariants"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value = "json")]
    format: Format,
    /// Directory for cached tables.
    #[arg(long, global = true, env = "QFUSION_CACHE_DIR")]
    cache_dir: Option<PathBuf>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Rounding tolerance for spectral sums.
    #[arg(long, global = true, default_value_t = 1e-6)]
    tol: f64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// sl(n) level-k fusion coefficients (partitions in the (n-1) x k box).
    Fusion {
        #[arg(long)]
        n: usize,
        /// Level.
        #[arg(long)]
        k: usize,
        /// Left factor, e.g. "2,1" (default: every weight).
        #[arg(long)]
        lhs: Option<Partition>,
        /// Right factor (default: every weight).
        #[arg(long)]
        rhs: Option<Partition>,
        /// "all" runs lattice and spectral and compares them.
        #[arg(long, value_enum, default_value = "lattice")]
        method: Method,
    },
    /// Gromov-Witten invariants of Gr(k, n+k) (partitions in the k x n box).
    Gw {
        #[arg(long)]
        k: usize,
        /// Box width N - k.
        #[arg(long, required_unless_present = "big_n")]
        n: Option<usize>,
        /// Ambient dimension (alternative to --n).
        #[arg(long = "N", id = "big_n")]
        big_n: Option<usize>,
        /// Left factor, e.g. "3,3,2,1" (default: every partition in the box).
        #[arg(long)]
        lhs: Option<Partition>,
        /// Right factor (default: every partition in the box).
        #[arg(long)]
        rhs: Option<Partition>,
        /// "all" runs lattice, spectral and recursion and compares them (plus LR in degree 0).
        #[arg(long, value_enum, default_value = "lattice")]
        method: Method,
    },
    /// Modular S-matrix (and T-matrix) of sl(n) at level k.
    Smatrix {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        k: usize,
    },
    /// Gr(k, N) tables for all k built upwards from the point.
    Hierarchy {
        #[arg(long = "N")]
        big_n: usize,
        /// Only print level k.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Normal form of a tableau under the local plactic relations.
    Normalize {
        /// Rows separated by '/' or newlines, entries by commas.
        #[arg(long)]
        tableau: String,
        /// Alphabet bound: entries lie in 1..n-1 (default: max entry + 1).
        #[arg(long)]
        n: Option<usize>,
        /// Include the rule applications.
        #[arg(long)]
        log: bool,
    },
    /// Deng-Du correspondence between words and aperiodic multipartitions.
    Dengdu {
        #[arg(long)]
        n: usize,
        /// Word such as "a0^2a2a1" or "0,0,2,1".
        #[arg(long, conflicts_with = "multipartition")]
        word: Option<String>,
        /// Components separated by '|', e.g. "4,2,2,2|3,1,1|4,4,2,2".
        #[arg(long)]
        multipartition: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Suite {
    Bethe,
    Smatrix,
    Symmetry,
    Recursion,
    Cauchy,
    Tq,
    Operators,
}

/// Exit codes.
const USAGE: u8 = 1;
const DISAGREE: u8 = 2;
const RESIDUAL: u8 = 3;

fn error_code(e: &Error) -> u8 {
    match e {
        Error::Residual { .. } => RESIDUAL,
        _ => USAGE,
    }
}

type CmdResult = Result<u8, Error>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t.max(1)).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(USAGE);
        }
    }
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(error_code(&e))
        }
    }
}

fn run(cli: &Cli) -> CmdResult {
    match &cli.cmd {
        Cmd::Fusion { n, k, lhs, rhs, method } => cmd_fusion(cli, *n, *k, lhs, rhs, *method),
        Cmd::Gw {
            k,
            n,
            big_n,
            lhs,
            rhs,
            method,
        } => {
            let nn = match (n, big_n) {
                (_, Some(nn)) => *nn,
                (Some(n), None) => n + k,
                (None, None) => unreachable!("clap requires one of --n/--N"),
            };
            if nn < *k {
                return Err(Error::Param(format!("N = {nn} < k = {k}")));
            }
            if let (Some(n), Some(nn)) = (n, big_n) {
                if n + k != *nn {
                    return Err(Error::Param(format!("--n {n} and --N {nn} disagree for k = {k}")));
                }
            }
            cmd_gw(cli, *k, nn, lhs, rhs, *method)
        }
        Cmd::Smatrix { n, k } => cmd_smatrix(cli, *n, *k),
        Cmd::Verify { suite, n, k } => cmd_verify(cli, *suite, *n, *k),
        Cmd::Hierarchy { big_n, k } => cmd_hierarchy(cli, *big_n, *k),
        Cmd::Normalize { tableau, n, log } => cmd_normalize(cli, tableau, *n, *log),
        Cmd::Dengdu {
            n,
            word,
            multipartition,
        } => cmd_dengdu(cli, *n, word.as_deref(), multipartition.as_deref()),
    }
}

fn pairs(basis: &[Partition], lhs: &Option<Partition>, rhs: &Option<Partition>) -> Vec<(Partition, Partition)> {
    let pick = |x: &Option<Partition>| x.as_ref().map_or_else(|| basis.to_vec(), |p| vec![p.clone()]);
    let (ls, rs) = (pick(lhs), pick(rhs));
    ls.iter()
        .flat_map(|a| rs.iter().map(move |b| (a.clone(), b.clone())))
        .collect()
}

/// Run one method with the table cache when the full table is requested.
fn cached(
    cli: &Cli,
    kind: &str,
    method: Method,
    n: usize,
    k: usize,
    full: bool,
    compute: impl FnOnce() -> Result<Entries, Error>,
) -> Result<Entries, Error> {
    let dir = cli.cache_dir.as_ref().filter(|_| full);
    if let Some(dir) = dir {
        if let Some(e) = cache::load(dir, kind, method.name(), n, k) {
            return Ok(e);
        }
    }
    let e = compute()?;
    if let Some(dir) = dir {
        if let Err(err) = cache::store(dir, kind, method.name(), n, k, &e) {
            eprintln!("warning: could not write cache: {err}");
        }
    }
    Ok(e)
}

fn cmd_fusion(
    cli: &Cli,
    n: usize,
    k: usize,
    lhs: &Option<Partition>,
    rhs: &Option<Partition>,
    method: Method,
) -> CmdResult {
    if n < 2 {
        return Err(Error::Param("n must be at least 2".into()));
    }
    let basis = Partition::all_in_box(n - 1, k);
    for p in [lhs, rhs].into_iter().flatten() {
        AffineWeight::from_partition(p, n, k)?;
    }
    let pr = pairs(&basis, lhs, rhs);
    let full = lhs.is_none() && rhs.is_none();
    let methods = match method {
        Method::All => vec![Method::Lattice, Method::Spectral],
        m => vec![m],
    };
    let mut results = Vec::new();
    for m in &methods {
        results.push(cached(cli, "fusion", *m, n, k, full, || {
            fusion_entries(*m, n, k, &pr, cli.tol)
        })?);
    }
    let mismatches: Vec<String> = results.windows(2).flat_map(|w| diff(&w[0], &w[1])).collect();
    let out = TableOutput {
        params: json!({"kind": "fusion", "n": n, "k": k, "lhs": lhs.as_ref().map(|p| p.to_string()), "rhs": rhs.as_ref().map(|p| p.to_string())}),
        method: method.name(),
        agreement: mismatches.is_empty(),
        mismatches,
        entries: results.swap_remove(0),
    };
    out.print(cli.format);
    Ok(if out.agreement { 0 } else { DISAGREE })
}

fn cmd_gw(
    cli: &Cli,
    k: usize,
    nn: usize,
    lhs: &Option<Partition>,
    rhs: &Option<Partition>,
    method: Method,
) -> CmdResult {
    let n = nn - k;
    for p in [lhs, rhs].into_iter().flatten() {
        p.check_box(k, n)?;
    }
    let basis = Partition::all_in_box(k, n);
    let pr = pairs(&basis, lhs, rhs);
    let full = lhs.is_none() && rhs.is_none();
    let methods = match method {
        Method::All => vec![Method::Lattice, Method::Spectral, Method::Recursion],
        m => vec![m],
    };
    let mut results = Vec::new();
    for m in &methods {
        results.push(cached(cli, "gw", *m, n, k, full, || {
            gw_entries(*m, k, nn, &pr, cli.tol)
        })?);
    }
    let mut mismatches: Vec<String> = results.windows(2).flat_map(|w| diff(&w[0], &w[1])).collect();
    if method == Method::All {
        mismatches.extend(lr_disagreements(&results[0], k, nn, &pr));
    }
    let out = TableOutput {
        params: json!({"kind": "gw", "k": k, "n": n, "N": nn, "lhs": lhs.as_ref().map(|p| p.to_string()), "rhs": rhs.as_ref().map(|p| p.to_string())}),
        method: method.name(),
        agreement: mismatches.is_empty(),
        mismatches,
        entries: results.swap_remove(0),
    };
    out.print(cli.format);
    Ok(if out.agreement { 0 } else { DISAGREE })
}

fn cmd_smatrix(cli: &Cli, n: usize, k: usize) -> CmdResult {
    if n + k > compute::SPECTRAL_MAX {
        return Err(Error::Param(format!("n + k <= {} required", compute::SPECTRAL_MAX)));
    }
    let s = smatrix(n, k)?;
    let t = tmatrix(n, k);
    output::print_smatrix(cli.format, n, k, &s, &t);
    Ok(0)
}

fn cmd_verify(cli: &Cli, suite: Suite, n: usize, k: usize) -> CmdResult {
    let name = format!("{suite:?}").to_lowercase();
    let rep = run_suite(&name, n, k, 1e-9)?;
    output::print_suite(cli.format, &rep);
    Ok(if rep.ok() {
        0
    } else if rep.numeric_failure() {
        RESIDUAL
    } else {
        DISAGREE
    })
}

fn cmd_hierarchy(cli: &Cli, nn: usize, only: Option<usize>) -> CmdResult {
    if let Some(k) = only.filter(|&k| k > nn) {
        return Err(Error::Param(format!("k = {k} > N = {nn}")));
    }
    let tabs = hierarchy_build(nn)?;
    let levels: Vec<_> = tabs
        .into_iter()
        .enumerate()
        .filter(|(k, _)| only.map_or(true, |o| o == *k))
        .map(|(_, t)| t)
        .collect();
    for t in &levels {
        let out = TableOutput {
            params: json!({"kind": "gw", "k": t.k, "n": t.n, "N": nn}),
            method: "recursion",
            agreement: true,
            mismatches: vec![],
            entries: t.entries.clone(),
        };
        out.print(cli.format);
    }
    Ok(0)
}

fn cmd_normalize(cli: &Cli, tableau: &str, n: Option<usize>, log: bool) -> CmdResult {
    let t: Tableau = tableau.parse()?;
    let n = n.unwrap_or(t.max_entry() + 1);
    let (d, rules) = normalize_tableau_logged(&t, n)?;
    output::print_normalize(
        cli.format,
        &t,
        &d,
        &format_word(&column_word(&d)),
        log.then_some(&rules[..]),
    );
    Ok(0)
}

fn cmd_dengdu(cli: &Cli, n: usize, word: Option<&str>, mp: Option<&str>) -> CmdResult {
    if n == 0 {
        return Err(Error::Param("n must be positive".into()));
    }
    let (w, pi) = match (word, mp) {
        (Some(w), None) => {
            let w = parse_word(w)?;
            if let Some(x) = w.iter().find(|&&x| x >= n) {
                return Err(Error::Param(format!("letter a{x} outside Z_{n}")));
            }
            let pi = word_to_multipartition(&w, n);
            (w, pi)
        }
        (None, Some(s)) => {
            let pi: MultiPartition = s.parse()?;
            if pi.n() != n {
                return Err(Error::Param(format!("{} components given, n = {n}", pi.n())));
            }
            (multipartition_to_word(&pi)?, pi)
        }
        _ => return Err(Error::Param("give exactly one of --word and --multipartition".into())),
    };
    let standard = multipartition_to_word(&pi)?;
    output::print_dengdu(cli.format, n, &w, &pi, &standard);
    Ok(0)
}
