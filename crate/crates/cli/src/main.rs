//! Command-line interface: compute basis polynomials through any of their
//! combinatorial constructions, enumerate filling families, expand
//! polynomials over bases, export crystals, list pipe dreams, and run the
//! named verification suites.
//!
//! Exit codes: 0 on success, 1 on usage errors, 2 when a verification or
//! cross-route check fails.

use clap::{Args, Parser, Subcommand, ValueEnum};
use polybases::composition::{Composition, Partition, WeakComposition};
use polybases::crystal::{
    key_crystal, reduced_factorizations, rfyc, tableau_crystal, ykey_crystal,
    young_schubert_via_rfyc, CrystalGraph,
};
use polybases::exec::ExecMode;
use polybases::expansion::{basis_polynomial, expand, schur_polynomial, BasisId};
use polybases::filling::{enumerate_family, gen_poly, FamilyId, Shape};
use polybases::generators::{
    atom_via_right_keys, key_via_compatible, key_via_right_keys, key_via_row_frank,
    particle_via_flag, yatom_via_left_keys, ykey_via_compatible, ykey_via_left_keys,
    ykey_via_row_frank,
};
use polybases::operators::{
    atom_ops, key_ops, schubert_ops, yatom_ops, ykey_ops, yschubert_ops, OperatorWord,
};
use polybases::permutation::Permutation;
use polybases::pipedream::{pipe_dreams, schubert_pd, young_pipe_dreams, young_schubert_pd};
use polybases::polynomial::{Coeff, Polynomial};
use polybases::verify::{run_check, VerifyOpts, CHECKS};
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "polybases",
    about = "Combinatorial models for polynomial bases: keys, atoms, slides, particles, quasisymmetric families, and Schubert polynomials in both chiralities",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Args)]
struct OutputArgs {
    /// Output format.
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Write to a file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Route {
    Fillings,
    Ops,
    Compat,
    Rkeys,
    Rowfrank,
    Crystal,
    Pipedreams,
    All,
}

impl Route {
    fn name(self) -> &'static str {
        match self {
            Route::Fillings => "fillings",
            Route::Ops => "ops",
            Route::Compat => "compat",
            Route::Rkeys => "rkeys",
            Route::Rowfrank => "rowfrank",
            Route::Crystal => "crystal",
            Route::Pipedreams => "pipedreams",
            Route::All => "all",
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Compute a basis polynomial, optionally cross-checking routes.
    Compute {
        /// Basis: key, ykey, atom, yatom, qkey, yqkey, fslide, yfslide,
        /// mslide, ymslide, particle, yparticle, monomial, schur, F, M,
        /// QS, YQS, schubert, yschubert.
        basis: String,
        /// Index: weak composition `0,3,2`, composition `1,3`, partition
        /// `2,1`, or one-line permutation `31524` for Schubert bases.
        index: String,
        /// Number of variables (defaults to the index length where that
        /// makes sense).
        #[arg(long)]
        n: Option<usize>,
        /// Construction route; `all` compares every route and fails on
        /// disagreement.
        #[arg(long, value_enum)]
        via: Option<Route>,
        /// Permutation given as a comma list (for entries past 9).
        #[arg(long)]
        perm_list: Option<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Enumerate a filling family, or the row-frank word sets W / YW.
    Enumerate {
        /// Family name (KSSF, YKSSF, ASSF, QF, FF, LF, RCT, YCT, ...) or
        /// `W` / `YW` for row-frank words.
        family: String,
        /// Shape: weak composition or composition, comma separated.
        shape: String,
        #[arg(long)]
        n: Option<usize>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Expand a polynomial over a basis by exact linear algebra.
    Expand {
        /// Source basis (same names as `compute`).
        source: String,
        /// Source index.
        index: String,
        /// Target basis.
        target: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        perm_list: Option<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Build tableau crystals, Demazure truncations, or reduced
    /// factorization vertex sets.
    Crystal {
        /// Highest weight partition, e.g. `2,1`.
        #[arg(long, conflicts_with_all = ["demazure", "rf"])]
        lambda: Option<String>,
        /// Weak composition for a Demazure truncation.
        #[arg(long, conflicts_with = "rf")]
        demazure: Option<String>,
        /// Truncation direction.
        #[arg(long, value_enum, default_value = "highest")]
        from: TruncationSide,
        /// Permutation whose reduced factorizations to list.
        #[arg(long)]
        rf: Option<String>,
        /// Number of blocks for `--rf` (defaults to the rightmost descent).
        #[arg(long)]
        blocks: Option<usize>,
        /// Only factorizations satisfying the Young cutoff.
        #[arg(long)]
        cutoff: bool,
        #[arg(long)]
        n: Option<usize>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Enumerate pipe dreams and the resulting Schubert polynomial.
    Pipedreams {
        /// One-line permutation, e.g. `31524`.
        perm: String,
        /// Young pipe dreams instead of standard ones.
        #[arg(long)]
        young: bool,
        #[arg(long)]
        perm_list: Option<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run named verification suites.
    Verify {
        /// Check name; see `--list`.
        check: Option<String>,
        /// Run every registered check.
        #[arg(long)]
        all: bool,
        /// List available checks.
        #[arg(long)]
        list: bool,
        /// Restrict to one variable count.
        #[arg(long)]
        n: Option<usize>,
        /// Cap the index size |a|.
        #[arg(long)]
        max_size: Option<u32>,
        /// Cap the number of variables / parts.
        #[arg(long)]
        max_len: Option<usize>,
        /// Run single-threaded.
        #[arg(long)]
        sequential: bool,
    },
    /// Evaluate a coincidence classifier, optionally against brute force.
    Classify {
        /// One of: yqs-qs, key-ykey, ykey-key, atom-yatom, qk-yqk,
        /// fp-yfp, slide, yslide.
        which: String,
        /// Composition or weak composition index.
        index: String,
        #[arg(long)]
        n: Option<usize>,
        /// Cross-check the predicate by polynomial search.
        #[arg(long)]
        brute: bool,
    },
    /// Apply a divided-difference operator word to a monomial.
    ApplyOp {
        /// Operator word, rightmost acting first: `pihat:2,pihat:1`.
        ops: String,
        /// Exponent vector of the starting monomial, e.g. `0,2,3`.
        monomial: String,
        #[arg(long)]
        n: Option<usize>,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TruncationSide {
    Highest,
    Lowest,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help and version requests are not usage errors
            use clap::error::ErrorKind;
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

type CliResult<T> = Result<T, String>;

fn dispatch(command: Command) -> CliResult<ExitCode> {
    match command {
        Command::Compute {
            basis,
            index,
            n,
            via,
            perm_list,
            output,
        } => compute(&basis, &index, n, via, perm_list.as_deref(), &output),
        Command::Enumerate {
            family,
            shape,
            n,
            output,
        } => enumerate(&family, &shape, n, &output),
        Command::Expand {
            source,
            index,
            target,
            n,
            perm_list,
            output,
        } => expand_cmd(&source, &index, &target, n, perm_list.as_deref(), &output),
        Command::Crystal {
            lambda,
            demazure,
            from,
            rf,
            blocks,
            cutoff,
            n,
            output,
        } => crystal_cmd(lambda, demazure, from, rf, blocks, cutoff, n, &output),
        Command::Pipedreams {
            perm,
            young,
            perm_list,
            output,
        } => pipedreams_cmd(&perm, young, perm_list.as_deref(), &output),
        Command::Verify {
            check,
            all,
            list,
            n,
            max_size,
            max_len,
            sequential,
        } => verify_cmd(check, all, list, n, max_size, max_len, sequential),
        Command::Classify {
            which,
            index,
            n,
            brute,
        } => classify_cmd(&which, &index, n, brute),
        Command::ApplyOp {
            ops,
            monomial,
            n,
            output,
        } => apply_op(&ops, &monomial, n, &output),
    }
}

fn emit(text: String, output: &OutputArgs) -> CliResult<ExitCode> {
    match &output.out {
        None => println!("{text}"),
        Some(path) => {
            let mut f = std::fs::File::create(path).map_err(|e| e.to_string())?;
            writeln!(f, "{text}").map_err(|e| e.to_string())?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_weak(index: &str, n: Option<usize>) -> CliResult<WeakComposition> {
    let a = WeakComposition::parse(index).map_err(|e| e.to_string())?;
    if let Some(n) = n {
        if a.len() != n {
            return Err(format!("index {index} must have length {n}"));
        }
    }
    Ok(a)
}

fn parse_perm(index: &str, perm_list: Option<&str>) -> CliResult<Permutation> {
    let text = perm_list.unwrap_or(index);
    Permutation::parse(text).map_err(|e| e.to_string())
}

/// Computes the polynomial through one named route.
fn route_poly(
    basis: &str,
    index: &str,
    n: Option<usize>,
    route: Route,
    perm_list: Option<&str>,
) -> CliResult<Polynomial> {
    let err_route =
        || -> String { format!("route `{}` is not available for `{basis}`", route.name()) };
    match basis {
        "schubert" => {
            let w = parse_perm(index, perm_list)?;
            match route {
                Route::Pipedreams => Ok(schubert_pd(&w)),
                Route::Ops => Ok(schubert_ops(&w)),
                _ => Err(err_route()),
            }
        }
        "yschubert" => {
            let w = parse_perm(index, perm_list)?;
            match route {
                Route::Pipedreams => Ok(young_schubert_pd(&w)),
                Route::Ops => Ok(yschubert_ops(&w)),
                Route::Crystal => Ok(young_schubert_via_rfyc(&w)),
                _ => Err(err_route()),
            }
        }
        "schur" => {
            let lam = Partition::parse(index).map_err(|e| e.to_string())?;
            let n = n.ok_or("--n is required for schur")?;
            match route {
                Route::Fillings => Ok(schur_polynomial(&lam, n)),
                Route::Crystal => Ok(tableau_crystal(&lam, n).character()),
                _ => Err(err_route()),
            }
        }
        _ => {
            let b = BasisId::parse(basis).map_err(|e| e.to_string())?;
            match b.index_kind() {
                polybases::expansion::IndexKind::Composition => {
                    let c = Composition::parse(index).map_err(|e| e.to_string())?;
                    let n = n.unwrap_or(c.len());
                    match route {
                        Route::Fillings => gen_poly(b.family().unwrap(), &Shape::Comp(c), n)
                            .map_err(|e| e.to_string()),
                        _ => Err(err_route()),
                    }
                }
                polybases::expansion::IndexKind::Partition => unreachable!("handled above"),
                polybases::expansion::IndexKind::WeakComposition => {
                    let a = parse_weak(index, n)?;
                    weak_route_poly(b, &a, route).ok_or_else(err_route)
                }
            }
        }
    }
}

fn weak_route_poly(basis: BasisId, a: &WeakComposition, route: Route) -> Option<Polynomial> {
    let fillings = || basis_polynomial(basis, a.parts(), a.len()).ok();
    match (basis, route) {
        (_, Route::Fillings) => fillings(),
        (BasisId::Key, Route::Ops) => Some(key_ops(a)),
        (BasisId::Key, Route::Compat) => Some(key_via_compatible(a)),
        (BasisId::Key, Route::Rkeys) => key_via_right_keys(a).ok(),
        (BasisId::Key, Route::Rowfrank) => Some(key_via_row_frank(a)),
        (BasisId::Key, Route::Crystal) => Some(key_crystal(a).character()),
        (BasisId::YKey, Route::Ops) => Some(ykey_ops(a)),
        (BasisId::YKey, Route::Compat) => ykey_via_compatible(a).ok(),
        (BasisId::YKey, Route::Rkeys) => ykey_via_left_keys(a).ok(),
        (BasisId::YKey, Route::Rowfrank) => ykey_via_row_frank(a).ok(),
        (BasisId::YKey, Route::Crystal) => Some(ykey_crystal(a).character()),
        (BasisId::Atom, Route::Ops) => Some(atom_ops(a)),
        (BasisId::Atom, Route::Rkeys) => atom_via_right_keys(a).ok(),
        (BasisId::YAtom, Route::Ops) => Some(yatom_ops(a)),
        (BasisId::YAtom, Route::Rkeys) => yatom_via_left_keys(a).ok(),
        (BasisId::Particle, Route::Compat) => Some(particle_via_flag(a)),
        _ => None,
    }
}

fn available_routes(basis: &str) -> Vec<Route> {
    match basis {
        "schubert" => vec![Route::Pipedreams, Route::Ops],
        "yschubert" => vec![Route::Pipedreams, Route::Ops, Route::Crystal],
        "schur" => vec![Route::Fillings, Route::Crystal],
        "key" | "ykey" => vec![
            Route::Fillings,
            Route::Ops,
            Route::Compat,
            Route::Rkeys,
            Route::Rowfrank,
            Route::Crystal,
        ],
        "atom" | "yatom" => vec![Route::Fillings, Route::Ops, Route::Rkeys],
        "particle" => vec![Route::Fillings, Route::Compat],
        _ => vec![Route::Fillings],
    }
}

fn default_route(basis: &str) -> Route {
    match basis {
        "schubert" | "yschubert" => Route::Pipedreams,
        _ => Route::Fillings,
    }
}

fn compute(
    basis: &str,
    index: &str,
    n: Option<usize>,
    via: Option<Route>,
    perm_list: Option<&str>,
    output: &OutputArgs,
) -> CliResult<ExitCode> {
    let via = via.unwrap_or_else(|| default_route(basis));
    if via == Route::All {
        let routes = available_routes(basis);
        let mut results: Vec<(Route, Polynomial)> = Vec::new();
        for route in routes {
            let p = route_poly(basis, index, n, route, perm_list)?;
            results.push((route, p));
        }
        let (first_route, reference) = results[0].clone();
        let mut disagreement = false;
        for (route, p) in &results[1..] {
            if *p != reference {
                disagreement = true;
                eprintln!(
                    "route disagreement for {basis} {index}:\n  {}: {}\n  {}: {}",
                    first_route.name(),
                    reference,
                    route.name(),
                    p
                );
            }
        }
        if disagreement {
            return Ok(ExitCode::from(2));
        }
        let text = match output.format {
            Format::Json => reference.to_json().to_string(),
            _ => format!("{} (agreed across {} routes)", reference, results.len()),
        };
        return emit(text, output);
    }
    let p = route_poly(basis, index, n, via, perm_list)?;
    let text = match output.format {
        Format::Json => p.to_json().to_string(),
        _ => p.to_string(),
    };
    emit(text, output)
}

fn enumerate(
    family: &str,
    shape: &str,
    n: Option<usize>,
    output: &OutputArgs,
) -> CliResult<ExitCode> {
    if family.eq_ignore_ascii_case("W") || family.eq_ignore_ascii_case("YW") {
        return enumerate_row_frank(family, shape, n, output);
    }
    let family = FamilyId::parse(family).map_err(|e| e.to_string())?;
    let (shape, n) = if family.composition_shaped() {
        let c = Composition::parse(shape).map_err(|e| e.to_string())?;
        let n = n.unwrap_or(c.len());
        (Shape::Comp(c), n)
    } else {
        let a = WeakComposition::parse(shape).map_err(|e| e.to_string())?;
        let n = n.unwrap_or(a.len());
        (Shape::Weak(a), n)
    };
    let fillings = enumerate_family(family, &shape, n).map_err(|e| e.to_string())?;
    let text = match output.format {
        Format::Json => {
            let arr: Vec<serde_json::Value> = fillings.iter().map(|f| f.to_json()).collect();
            serde_json::json!({
                "family": family.name(),
                "count": fillings.len(),
                "fillings": arr,
            })
            .to_string()
        }
        _ => {
            let mut s = format!("{} fillings", fillings.len());
            for f in &fillings {
                s.push_str("\n\n");
                s.push_str(&f.to_string());
            }
            s
        }
    };
    emit(text, output)
}

/// The row-frank word sets `W(a)` and `YW(a)`, printed with `|` bars at
/// the row-word boundaries prescribed by the shape.
fn enumerate_row_frank(
    which: &str,
    shape: &str,
    n: Option<usize>,
    output: &OutputArgs,
) -> CliResult<ExitCode> {
    use polybases::generators::{barred_by_shape, row_frank_words, young_row_frank_words};
    let a = parse_weak(shape, n)?;
    let words = if which.eq_ignore_ascii_case("W") {
        row_frank_words(&a)
    } else {
        young_row_frank_words(&a).map_err(|e| e.to_string())?
    };
    let text = match output.format {
        Format::Json => {
            let arr: Vec<serde_json::Value> = words
                .iter()
                .map(|u| serde_json::json!(u.letters()))
                .collect();
            serde_json::json!({
                "set": which.to_uppercase(),
                "shape": a.parts(),
                "count": words.len(),
                "words": arr,
            })
            .to_string()
        }
        _ => {
            let mut s = format!("{} words", words.len());
            for u in &words {
                let barred = barred_by_shape(u, &a).unwrap_or_else(|| u.to_string());
                s.push_str(&format!("\n{barred}"));
            }
            s
        }
    };
    emit(text, output)
}

fn expand_cmd(
    source: &str,
    index: &str,
    target: &str,
    n: Option<usize>,
    perm_list: Option<&str>,
    output: &OutputArgs,
) -> CliResult<ExitCode> {
    let p = route_poly(source, index, n, default_route(source), perm_list)?;
    let target = BasisId::parse(target).map_err(|e| e.to_string())?;
    match expand(&p, target, p.n()) {
        Ok(exp) => {
            let text = match output.format {
                Format::Json => exp.to_json().to_string(),
                _ => {
                    let mut s = exp.to_string();
                    if !exp.is_integral() {
                        s.push_str("\n(non-integral coefficients)");
                    }
                    s
                }
            };
            emit(text, output)
        }
        Err(polybases::Error::NotInSpan) => {
            eprintln!("not in span: {source} {index} has no {target} expansion");
            Ok(ExitCode::from(2))
        }
        Err(e) => Err(e.to_string()),
    }
}

fn crystal_text(g: &CrystalGraph) -> String {
    let mut s = format!("{} vertices, {} edges", g.vertices.len(), g.edges.len());
    s.push_str(&format!("\ncharacter: {}", g.character()));
    for (k, t) in g.vertices.iter().enumerate() {
        s.push_str(&format!("\n\nv{k} (wt {}):\n{t}", t.weight(g.n)));
    }
    for &(from, to, color) in &g.edges {
        s.push_str(&format!("\nf_{color}: v{from} -> v{to}"));
    }
    s
}

fn crystal_json(g: &CrystalGraph) -> serde_json::Value {
    let vertices: Vec<serde_json::Value> = g
        .vertices
        .iter()
        .map(|t| {
            serde_json::json!({
                "rows": t.rows(),
                "weight": t.weight(g.n).parts(),
            })
        })
        .collect();
    let edges: Vec<serde_json::Value> = g
        .edges
        .iter()
        .map(|&(f, t, c)| serde_json::json!({ "from": f, "to": t, "color": c }))
        .collect();
    serde_json::json!({ "n": g.n, "vertices": vertices, "edges": edges })
}

#[allow(clippy::too_many_arguments)]
fn crystal_cmd(
    lambda: Option<String>,
    demazure: Option<String>,
    from: TruncationSide,
    rf: Option<String>,
    blocks: Option<usize>,
    cutoff: bool,
    n: Option<usize>,
    output: &OutputArgs,
) -> CliResult<ExitCode> {
    if let Some(perm) = rf {
        let w = parse_perm(&perm, None)?;
        let blocks = blocks.unwrap_or_else(|| w.descents().last().copied().unwrap_or(0));
        let factorizations = if cutoff {
            rfyc(&w)
        } else {
            reduced_factorizations(&w, blocks)
        };
        let nn = w.size();
        let text = match output.format {
            Format::Json => {
                let arr: Vec<serde_json::Value> = factorizations
                    .iter()
                    .map(|r| {
                        serde_json::json!({
                            "blocks": r.blocks,
                            "weight": r.weight(nn).parts(),
                            "cutoff": r.has_young_cutoff(),
                        })
                    })
                    .collect();
                serde_json::json!({ "count": factorizations.len(), "factorizations": arr })
                    .to_string()
            }
            Format::Dot => {
                let mut s = String::from("digraph rf {\n");
                for (k, r) in factorizations.iter().enumerate() {
                    s.push_str(&format!("  v{k} [label=\"{r}\\nwt {}\"];\n", r.weight(nn)));
                }
                s.push('}');
                s
            }
            Format::Text => {
                let mut s = format!("{} factorizations", factorizations.len());
                for r in &factorizations {
                    s.push_str(&format!("\n{r}  wt {}", r.weight(nn)));
                }
                s
            }
        };
        return emit(text, output);
    }

    let graph = if let Some(index) = demazure {
        let a = parse_weak(&index, n)?;
        match from {
            TruncationSide::Highest => key_crystal(&a),
            TruncationSide::Lowest => ykey_crystal(&a),
        }
    } else if let Some(lam) = lambda {
        let lam = Partition::parse(&lam).map_err(|e| e.to_string())?;
        let n = n.ok_or("--n is required with --lambda")?;
        match from {
            TruncationSide::Highest => tableau_crystal(&lam, n),
            TruncationSide::Lowest => tableau_crystal(&lam, n),
        }
    } else {
        return Err("one of --lambda, --demazure, --rf is required".into());
    };
    let text = match output.format {
        Format::Dot => graph.to_dot(),
        Format::Json => crystal_json(&graph).to_string(),
        Format::Text => crystal_text(&graph),
    };
    emit(text, output)
}

fn pipedreams_cmd(
    perm: &str,
    young: bool,
    perm_list: Option<&str>,
    output: &OutputArgs,
) -> CliResult<ExitCode> {
    let w = parse_perm(perm, perm_list)?;
    let dreams = if young {
        young_pipe_dreams(&w)
    } else {
        pipe_dreams(&w)
    };
    let poly = if young {
        young_schubert_pd(&w)
    } else {
        schubert_pd(&w)
    };
    let text = match output.format {
        Format::Json => {
            let arr: Vec<serde_json::Value> = dreams.iter().map(|d| d.to_json()).collect();
            serde_json::json!({
                "count": dreams.len(),
                "polynomial": poly.to_json(),
                "pipedreams": arr,
            })
            .to_string()
        }
        _ => {
            let mut s = format!("{} pipe dreams\npolynomial: {poly}", dreams.len());
            for d in &dreams {
                s.push_str(&format!("\n\n{d}\nwt {}", d.weight()));
            }
            s
        }
    };
    emit(text, output)
}

fn verify_cmd(
    check: Option<String>,
    all: bool,
    list: bool,
    n: Option<usize>,
    max_size: Option<u32>,
    max_len: Option<usize>,
    sequential: bool,
) -> CliResult<ExitCode> {
    if list {
        for (name, description) in CHECKS {
            println!("{name:<26} {description}");
        }
        return Ok(ExitCode::SUCCESS);
    }
    let names: Vec<&str> = if all {
        CHECKS.iter().map(|(name, _)| *name).collect()
    } else {
        match &check {
            Some(c) => vec![c.as_str()],
            None => return Err("give a check name, --all, or --list".into()),
        }
    };
    let opts = VerifyOpts {
        n,
        max_size,
        max_len,
    };
    let mode = if sequential {
        ExecMode::Sequential
    } else {
        ExecMode::Parallel
    };
    let mut failed = false;
    for name in names {
        let report = run_check(name, &opts, mode).map_err(|e| e.to_string())?;
        println!("{}", report.summary());
        if !report.passed() {
            failed = true;
            let dump = serde_json::json!({
                "check": report.name,
                "counterexamples": report.failures,
            });
            eprintln!("{dump}");
        }
    }
    Ok(if failed {
        ExitCode::from(2)
    } else {
        ExitCode::SUCCESS
    })
}

fn classify_cmd(which: &str, index: &str, n: Option<usize>, brute: bool) -> CliResult<ExitCode> {
    use polybases::classify;
    let weak = |index: &str| parse_weak(index, n);
    let (predicate, family_pair): (bool, Option<(FamilyId, FamilyId)>) = match which {
        "yqs-qs" => {
            let alpha = Composition::parse(index).map_err(|e| e.to_string())?;
            let n = n.unwrap_or(alpha.len());
            let p = classify::yqs_equals_qs(&alpha, n).map_err(|e| e.to_string())?;
            println!("{p}");
            if brute {
                let yqs = gen_poly(FamilyId::Yct, &Shape::Comp(alpha.clone()), n)
                    .map_err(|e| e.to_string())?;
                let found = Composition::all(alpha.size(), n)
                    .into_iter()
                    .any(|beta| gen_poly(FamilyId::Rct, &Shape::Comp(beta), n).unwrap() == yqs);
                if found != p {
                    eprintln!("classifier disagrees with brute-force search ({found})");
                    return Ok(ExitCode::from(2));
                }
                println!("confirmed by brute force");
            }
            return Ok(ExitCode::SUCCESS);
        }
        "key-ykey" => (
            classify::key_is_young_key(&weak(index)?),
            Some((FamilyId::Kssf, FamilyId::Ykssf)),
        ),
        "ykey-key" => (
            classify::young_key_is_key(&weak(index)?),
            Some((FamilyId::Ykssf, FamilyId::Kssf)),
        ),
        "atom-yatom" => (
            classify::atom_equals_young_atom(&weak(index)?),
            Some((FamilyId::Yassf, FamilyId::Assf)),
        ),
        "qk-yqk" => (
            classify::qkey_equals_young_qkey(&weak(index)?),
            Some((FamilyId::Yqf, FamilyId::Qf)),
        ),
        "fp-yfp" => (
            classify::particle_equals_young_particle(&weak(index)?),
            Some((FamilyId::Ylf, FamilyId::Lf)),
        ),
        "slide" => (
            classify::slide_is_quasisymmetric(&weak(index)?),
            Some((FamilyId::Ff, FamilyId::Yff)),
        ),
        "yslide" => (
            classify::young_slide_is_quasisymmetric(&weak(index)?),
            Some((FamilyId::Yff, FamilyId::Ff)),
        ),
        _ => return Err(format!("unknown classifier `{which}`")),
    };
    println!("{predicate}");
    if brute {
        let (source, search) = family_pair.expect("weak classifiers have families");
        let a = weak(index)?;
        let nn = a.len();
        let target = gen_poly(source, &Shape::Weak(a.clone()), nn).map_err(|e| e.to_string())?;
        let found = WeakComposition::all(nn, a.size())
            .into_iter()
            .any(|b| gen_poly(search, &Shape::Weak(b), nn).unwrap() == target);
        if found != predicate {
            eprintln!("classifier disagrees with brute-force search ({found})");
            return Ok(ExitCode::from(2));
        }
        println!("confirmed by brute force");
    }
    Ok(ExitCode::SUCCESS)
}

fn apply_op(
    ops: &str,
    monomial: &str,
    n: Option<usize>,
    output: &OutputArgs,
) -> CliResult<ExitCode> {
    let exp = parse_weak(monomial, n)?;
    let word = OperatorWord::parse(ops).map_err(|e| e.to_string())?;
    let start = Polynomial::monomial(exp.len(), exp.parts(), Coeff::from(1));
    let result = word.apply(&start).map_err(|e| e.to_string())?;
    let text = match output.format {
        Format::Json => result.to_json().to_string(),
        _ => result.to_string(),
    };
    emit(text, output)
}
