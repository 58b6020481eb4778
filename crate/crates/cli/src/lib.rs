//! `pandiag` command-line front end.
//!
//! Exit codes: 0 when the answer is yes (verified, orthogonal, found), 1 when
//! well-formed input gets a negative answer, 2 for usage errors and
//! malformed or unsupported input.

pub mod document;

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use anyhow::{bail, ensure, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use pandiag_core::lattice::view_rows;
use pandiag_core::{
    build, check_orthogonal_fast, compose_checked, determinant_mod, enumerate,
    verify_latin_pandiagonal, verify_magic_pandiagonal, verify_orthogonal_brute, Error,
    LatinArray, ParamMatrix, ParamVector, SliceSpec, SymbolPermutation, VerificationReport,
};

use document::{render_rows, ArrayDocument, Format, Kind};

#[derive(Debug, Parser)]
#[command(name = "pandiag", version, about = "Pandiagonal latin and magic arrays")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build the latin array of a parameter vector.
    Generate(GenerateArgs),
    /// Check a document for a pandiagonal property.
    Verify(VerifyArgs),
    /// List feasible parameter vectors.
    Search(SearchArgs),
    /// Test a family of parameter vectors for orthogonality.
    Orthogonal(OrthogonalArgs),
    /// Compose a magic array from an orthogonal family.
    Magic(MagicArgs),
    /// Print a planar section of a document.
    Slice(SliceArgs),
}

#[derive(Debug, Args)]
struct SizeArgs {
    /// Allow sizes above the default caps (d=3: n<=101, d=4: n<=41).
    #[arg(long)]
    force: bool,
}

#[derive(Debug, Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Write here instead of standard output.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct GenerateArgs {
    /// Defaults to the length of --params.
    #[arg(long)]
    dim: Option<usize>,
    #[arg(long)]
    order: u64,
    /// Comma-separated coefficients, e.g. 1,2,7.
    #[arg(long)]
    params: String,
    /// Print only this section, e.g. "k=2", "j=i" or "i=2,j+k=16".
    #[arg(long)]
    slice: Option<String>,
    /// Verify the result; exit 1 if it is not pandiagonal latin.
    #[arg(long)]
    check: bool,
    #[command(flatten)]
    size: SizeArgs,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Expect {
    LatinPandiagonal,
    MagicPandiagonal,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Document to read; standard input if absent or "-".
    input: Option<PathBuf>,
    /// Defaults to the document's kind.
    #[arg(long, value_enum)]
    expect: Option<Expect>,
}

#[derive(Debug, Args)]
struct SearchArgs {
    #[arg(long)]
    dim: usize,
    #[arg(long)]
    order: u64,
    /// Only vectors with first component 1.
    #[arg(long)]
    canonical: bool,
    /// Print at most this many vectors (the count is always complete).
    #[arg(long)]
    limit: Option<usize>,
    #[command(flatten)]
    size: SizeArgs,
}

#[derive(Debug, Args)]
struct OrthogonalArgs {
    #[arg(long)]
    order: u64,
    /// Semicolon-separated vectors, e.g. "1,2;1,3".
    #[arg(long)]
    params_list: String,
    /// Determinant test.
    #[arg(long)]
    fast: bool,
    /// Superpose the arrays and look for repeated tuples.
    #[arg(long)]
    brute: bool,
    #[command(flatten)]
    size: SizeArgs,
}

#[derive(Debug, Args)]
struct MagicArgs {
    #[arg(long)]
    order: u64,
    /// Semicolon-separated vectors, most significant digit first.
    #[arg(long)]
    params_list: String,
    /// Semicolon-separated symbol permutations, one per vector.
    #[arg(long)]
    perms: Option<String>,
    /// Print values 1..=n^d instead of 0..n^d (display only; such output
    /// does not verify).
    #[arg(long)]
    one_based: bool,
    /// Verify the result; exit 1 if it is not pandiagonal magic.
    #[arg(long)]
    check: bool,
    #[command(flatten)]
    size: SizeArgs,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Debug, Args)]
struct SliceArgs {
    /// Document to read; standard input if absent or "-".
    input: Option<PathBuf>,
    /// e.g. "k=2", "j=i", "i=2,j+k=16".
    #[arg(long, default_value = "")]
    spec: String,
    /// Free axis running down the rows.
    #[arg(long)]
    rows: Option<char>,
    /// Free axis running across.
    #[arg(long)]
    cols: Option<char>,
    #[arg(long, value_enum, default_value = "grid")]
    format: Format,
}

/// Whether the command answered yes.
type Answer = bool;

/// Parses `argv` (program name first), runs the command and returns the
/// process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match dispatch(cli.command) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("error: {e:#}");
            2
        }
    }
}

fn dispatch(command: Command) -> Result<Answer> {
    match command {
        Command::Generate(a) => generate(a),
        Command::Verify(a) => verify(a),
        Command::Search(a) => search(a),
        Command::Orthogonal(a) => orthogonal(a),
        Command::Magic(a) => magic(a),
        Command::Slice(a) => slice(a),
    }
}

fn check_size(d: usize, n: u64, size: &SizeArgs) -> Result<()> {
    let cap = match d {
        3 => 101,
        4 => 41,
        _ => return Ok(()),
    };
    ensure!(
        size.force || n <= cap,
        "order {n} exceeds the default cap {cap} for dimension {d}; pass --force to proceed"
    );
    Ok(())
}

fn parse_list(s: &str) -> Result<Vec<u64>> {
    s.split(',')
        .map(|t| t.trim().parse::<u64>().with_context(|| format!("bad number '{}'", t.trim())))
        .collect()
}

fn parse_family(s: &str, order: u64) -> Result<Vec<ParamVector>> {
    s.split(';')
        .map(|v| Ok(ParamVector::new(order, parse_list(v)?)?))
        .collect()
}

fn read_input(path: Option<&Path>) -> Result<String> {
    match path {
        Some(p) if p != Path::new("-") => {
            fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))
        }
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).context("reading standard input")?;
            Ok(s)
        }
    }
}

fn emit(text: &str, output: Option<&Path>) -> Result<()> {
    match output {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
            Ok(())
        }
    }
}

fn print_report(report: &VerificationReport) -> Answer {
    println!("{report}");
    report.passed
}

fn generate(a: GenerateArgs) -> Result<Answer> {
    let v = ParamVector::new(a.order, parse_list(&a.params)?)?;
    if let Some(d) = a.dim {
        ensure!(
            d == v.dimension(),
            "--dim {d} but {} coefficients given",
            v.dimension()
        );
    }
    check_size(v.dimension(), v.order(), &a.size)?;
    let array = build(&v)?;
    let text = match &a.slice {
        Some(spec) => {
            let rows = pandiag_core::slice(&array, &spec.parse()?)?;
            let rows: Vec<Vec<u64>> = rows
                .into_iter()
                .map(|r| r.into_iter().map(u64::from).collect())
                .collect();
            render_rows(&rows, Some(Kind::Latin), a.out.format)?
        }
        None => ArrayDocument::from_latin(&array).render(a.out.format)?,
    };
    emit(&text, a.out.output.as_deref())?;
    if a.check {
        let report = verify_latin_pandiagonal(&array);
        eprintln!("{report}");
        return Ok(report.passed);
    }
    Ok(true)
}

fn verify(a: VerifyArgs) -> Result<Answer> {
    let doc = ArrayDocument::parse(&read_input(a.input.as_deref())?)?;
    let expect = match (a.expect, doc.kind) {
        (Some(e), _) => e,
        (None, Some(Kind::Latin)) => Expect::LatinPandiagonal,
        (None, Some(Kind::Magic)) => Expect::MagicPandiagonal,
        (None, None) => bail!("document has no kind; pass --expect"),
    };
    match expect {
        Expect::LatinPandiagonal => {
            let array = match doc.to_latin() {
                Ok(array) => array,
                Err(e) => {
                    // well-formed grid, but not over the symbols 0..n
                    println!("pandiagonal-latin: FAIL {e:#}");
                    return Ok(false);
                }
            };
            Ok(print_report(&verify_latin_pandiagonal(&array)))
        }
        Expect::MagicPandiagonal => Ok(print_report(&verify_magic_pandiagonal(&doc.to_magic()?))),
    }
}

fn search(a: SearchArgs) -> Result<Answer> {
    check_size(a.dim, a.order, &a.size)?;
    let found = enumerate(a.dim, a.order, a.canonical)?;
    let mut out = io::stdout().lock();
    for v in found.iter().take(a.limit.unwrap_or(usize::MAX)) {
        let alphas: Vec<String> = v.alphas().iter().map(u64::to_string).collect();
        writeln!(out, "{}", alphas.join(","))?;
    }
    writeln!(
        out,
        "{} feasible vector{}",
        found.len(),
        if found.len() == 1 { "" } else { "s" }
    )?;
    Ok(!found.is_empty())
}

fn orthogonal(a: OrthogonalArgs) -> Result<Answer> {
    let family = parse_family(&a.params_list, a.order)?;
    let matrix = ParamMatrix::new(family)?;
    check_size(matrix.dimension(), matrix.order(), &a.size)?;
    let (fast, brute) = match (a.fast, a.brute) {
        (false, false) => (true, true),
        flags => flags,
    };
    let mut answer = true;
    if fast {
        let (det, residue) = determinant_mod(&matrix);
        match check_orthogonal_fast(&matrix) {
            Ok(ok) => {
                println!(
                    "fast: {} (det={det}, det mod {}={})",
                    if ok { "orthogonal" } else { "not orthogonal" },
                    matrix.order(),
                    residue.value()
                );
                answer &= ok;
            }
            Err(e @ Error::NotPandiagonalFamily { .. }) => {
                println!("fast: {e}");
                answer = false;
            }
            Err(e) => return Err(e.into()),
        }
    }
    if brute {
        let arrays: Vec<LatinArray> = matrix.rows().iter().map(build).collect::<Result<_, _>>()?;
        let ok = verify_orthogonal_brute(&arrays)?;
        println!("brute: {}", if ok { "orthogonal" } else { "not orthogonal" });
        answer &= ok;
    }
    Ok(answer)
}

/// `"p;q;.."`, each a comma list giving the image of symbols `0, 1, ..`.
fn parse_perms(s: &str, n: usize) -> Result<Vec<SymbolPermutation>> {
    s.split(';')
        .map(|p| {
            let map = parse_list(p)?
                .into_iter()
                .map(|v| u32::try_from(v).context("permutation entry too large"))
                .collect::<Result<Vec<_>>>()?;
            ensure!(map.len() == n, "permutation of length {} for order {n}", map.len());
            Ok(SymbolPermutation::new(map)?)
        })
        .collect()
}

fn magic(a: MagicArgs) -> Result<Answer> {
    let family = parse_family(&a.params_list, a.order)?;
    let d = family.first().map(ParamVector::dimension).unwrap_or(0);
    check_size(d, a.order, &a.size)?;
    let perms = a
        .perms
        .as_deref()
        .map(|s| parse_perms(s, a.order as usize))
        .transpose()?;
    let m = match compose_checked(&family, perms.as_deref()) {
        Ok(m) => m,
        Err(e @ (Error::NotOrthogonal { .. } | Error::NotPandiagonalFamily { .. })) => {
            eprintln!("{e}");
            return Ok(false);
        }
        Err(e) => return Err(e.into()),
    };
    let mut doc = ArrayDocument::from_magic(&m);
    if a.one_based {
        doc.values.iter_mut().for_each(|v| *v += 1);
    }
    emit(&doc.render(a.out.format)?, a.out.output.as_deref())?;
    if a.check {
        let report = verify_magic_pandiagonal(&m);
        eprintln!("{report}");
        return Ok(report.passed);
    }
    Ok(true)
}

fn axis_index(c: char) -> Result<usize> {
    match c {
        'i' => Ok(0),
        'j' => Ok(1),
        'k' => Ok(2),
        'l' | 'ℓ' => Ok(3),
        _ => bail!("unknown axis '{c}'"),
    }
}

fn slice(a: SliceArgs) -> Result<Answer> {
    let doc = ArrayDocument::parse(&read_input(a.input.as_deref())?)?;
    let shape = doc.shape()?;
    let mut spec: SliceSpec = a.spec.parse()?;
    match (a.rows, a.cols) {
        (Some(r), Some(c)) => spec = spec.with_axes(axis_index(r)?, axis_index(c)?),
        (None, None) => {}
        _ => bail!("--rows and --cols go together"),
    }
    let view = spec.resolve(shape)?;
    let rows = view_rows(shape, &doc.values, &view);
    emit(&render_rows(&rows, doc.kind, a.format)?, None)?;
    Ok(true)
}
