//! `homtwist` — construct, twist, and verify Hom-algebras from the command
//! line. Algebra documents are JSON (see the README for the schema) and can
//! be piped between subcommands:
//!
//! ```sh
//! homtwist example sl2 --lambda 2 | homtwist verify --group a3
//! homtwist example abelian --n 3 | homtwist homology --coefficients trivial
//! ```
//!
//! Exit codes: 0 when every check passes, 1 when any check fails, 2 on
//! usage or parse errors.

mod report;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use homtwist::document::{matrix_to_text, AlgebraDocument, AlgebraKind};
use homtwist::families;
use homtwist::homalg::{g_hom_witness, skew_symmetry_witness, SubgroupS3};
use homtwist::homology::{build_ce_complex, hom_module_witness, HomModule};
use homtwist::hybe::{braid_operators, build_b_alpha, check_braid_relations, check_hybe};
use homtwist::witt::{basis, witt_line};
use homtwist::{Error, FinAlgebra, HomAlgebra, LinearSelfMap, Matrix, Rational};

use report::{CheckVerdict, Report};

#[derive(Parser)]
#[command(name = "homtwist", version, about = "Exact Hom-algebra toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a G-Hom-associativity axiom on an algebra document.
    Verify {
        /// Input document path, or `-` for stdin.
        #[arg(long, default_value = "-")]
        algebra: String,
        /// Optional JSON matrix file overriding the document's alpha.
        #[arg(long)]
        alpha: Option<PathBuf>,
        /// Subgroup of Σ₃: e, 12, 13, 23, a3, or s3.
        #[arg(long, value_parser = parse_group)]
        group: SubgroupS3,
        #[arg(long)]
        json: bool,
    },
    /// Deform the document's algebra along its alpha and write the result.
    Twist {
        #[arg(long, default_value = "-")]
        algebra: String,
        /// Output path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Chevalley-Eilenberg homology of a Hom-Lie algebra document.
    Homology {
        #[arg(long, default_value = "-")]
        algebra: String,
        #[arg(long, value_parser = ["adjoint", "trivial"])]
        coefficients: String,
        /// Truncate the complex at this degree (default: dim L).
        #[arg(long)]
        max_degree: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Build the Yang-Baxter operator and check its equations.
    Hybe {
        #[arg(long, default_value = "-")]
        algebra: String,
        /// Also build the braid operators on this many strands.
        #[arg(long)]
        strands: Option<usize>,
        /// Dump operator matrices to a text file.
        #[arg(long)]
        dump: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Emit a builtin example family as an algebra document.
    Example {
        #[command(subcommand)]
        family: Family,
    },
}

#[derive(Args)]
struct EmitArgs {
    /// Output path; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Emit the classical algebra with its map instead of the twisted one.
    #[arg(long)]
    untwisted: bool,
}

#[derive(Subcommand)]
enum Family {
    /// sl(2) with α(h)=h, α(e)=λe, α(f)=λ⁻¹f.
    Sl2 {
        #[arg(long, value_parser = parse_rational)]
        lambda: Rational,
        #[command(flatten)]
        emit: EmitArgs,
    },
    /// sl(n) with diagonal α given by n−1 parameters.
    Sln {
        #[arg(long)]
        n: usize,
        /// Comma-separated nonzero rationals, e.g. `2,3` or `-1/3,5`.
        #[arg(long, value_parser = parse_rational_list)]
        lambdas: std::vec::Vec<Rational>,
        #[command(flatten)]
        emit: EmitArgs,
    },
    /// Heisenberg algebra with α = diag(λ₁, λ₂, λ₁λ₂).
    Heisenberg {
        #[arg(long, value_parser = parse_rational)]
        l1: Rational,
        #[arg(long, value_parser = parse_rational)]
        l2: Rational,
        #[command(flatten)]
        emit: EmitArgs,
    },
    /// Abelian algebra: all products zero.
    Abelian {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        emit: EmitArgs,
    },
    /// Full matrix algebra M_n(ℚ).
    Matrix {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        emit: EmitArgs,
    },
    /// Group algebra of the cyclic group with the power endomorphism g↦gᵏ.
    Cyclic {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        endo_power: usize,
        #[command(flatten)]
        emit: EmitArgs,
    },
    /// Group algebra from a JSON file `{"table": [[...]], "endo": [...]}`.
    Group {
        #[arg(long)]
        table: PathBuf,
        #[command(flatten)]
        emit: EmitArgs,
    },
    /// Truncated polynomial algebra ℚ[x]/(x^d) with x ↦ p(x).
    TruncatedPoly {
        #[arg(long)]
        degree: usize,
        /// Comma-separated coefficients of p, constant term first.
        #[arg(long, value_parser = parse_rational_list)]
        p: std::vec::Vec<Rational>,
        #[command(flatten)]
        emit: EmitArgs,
    },
    /// Shift-twisted line subalgebra of the Witt algebra: window report.
    Witt {
        #[arg(long, value_parser = parse_rational)]
        lambda: Rational,
        #[arg(long, default_value_t = -1)]
        min: i64,
        #[arg(long, default_value_t = 6)]
        max: i64,
        #[arg(long)]
        json: bool,
    },
}

fn parse_group(s: &str) -> Result<SubgroupS3, String> {
    SubgroupS3::parse(s).ok_or_else(|| format!("unknown subgroup {s:?} (use e, 12, 13, 23, a3, s3)"))
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn parse_rational_list(s: &str) -> Result<Vec<Rational>, String> {
    s.split(',').map(|t| parse_rational(t.trim())).collect()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<u8, Error> {
    match command {
        Command::Verify {
            algebra,
            alpha,
            group,
            json,
        } => verify(&algebra, alpha.as_deref(), group, json),
        Command::Twist { algebra, out } => twist(&algebra, out.as_deref()),
        Command::Homology {
            algebra,
            coefficients,
            max_degree,
            json,
        } => homology(&algebra, &coefficients, max_degree, json),
        Command::Hybe {
            algebra,
            strands,
            dump,
            json,
        } => hybe(&algebra, strands, dump.as_deref(), json),
        Command::Example { family } => example(family),
    }
}

fn read_input(path: &str) -> Result<String, Error> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::Document(format!("reading stdin: {e}")))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Error::Document(format!("reading {path}: {e}")))
    }
}

fn write_output(path: Option<&std::path::Path>, text: &str) -> Result<(), Error> {
    match path {
        Some(p) => std::fs::write(p, text)
            .map_err(|e| Error::Document(format!("writing {}: {e}", p.display()))),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

/// Loads a document and pairs it with its self-map (identity when absent).
fn load(path: &str, alpha_file: Option<&std::path::Path>) -> Result<(FinAlgebra, LinearSelfMap), Error> {
    let text = read_input(path)?;
    let (algebra, inline_alpha) = homtwist::document::parse_algebra(&text)?;
    let alpha = match alpha_file {
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| Error::Document(format!("reading {}: {e}", p.display())))?;
            let rows: Vec<Vec<Rational>> = serde_json::from_str(&text)?;
            LinearSelfMap::from_matrix(Matrix::from_rows(rows)?)?
        }
        None => inline_alpha.unwrap_or_else(|| LinearSelfMap::identity(algebra.dim())),
    };
    if alpha.dim() != algebra.dim() {
        return Err(Error::DimensionMismatch(format!(
            "alpha of dimension {} on algebra of dimension {}",
            alpha.dim(),
            algebra.dim()
        )));
    }
    Ok((algebra, alpha))
}

fn finish(mut report: Report, started: Instant, json: bool) -> Result<u8, Error> {
    report.elapsed_ms = started.elapsed().as_millis();
    print!("{}", report.render(json));
    if !json && !report.render(json).ends_with('\n') {
        println!();
    }
    Ok(report.exit_code())
}

fn verify(
    path: &str,
    alpha_file: Option<&std::path::Path>,
    group: SubgroupS3,
    json: bool,
) -> Result<u8, Error> {
    let started = Instant::now();
    let (algebra, alpha) = load(path, alpha_file)?;
    let mut report = Report::new(&format!("verify --group {}", group.name()));

    if group == SubgroupS3::A3 {
        report.checks.push(match skew_symmetry_witness(&algebra) {
            None => CheckVerdict::passed("skew-symmetry", None),
            Some([i, j, k]) => CheckVerdict::failed(
                "skew-symmetry",
                None,
                format!(
                    "c[{0},{1},{2}] ≠ −c[{1},{0},{2}] at ({3},{4},{5})",
                    i, j, k, algebra.labels()[i], algebra.labels()[j], algebra.labels()[k]
                ),
            ),
        });
    }

    report.checks.push(match g_hom_witness(&algebra, &alpha, group)? {
        None => CheckVerdict::passed("g-hom-associativity", Some(group.name())),
        Some(w) => {
            let [i, j, k] = w.triple;
            CheckVerdict::failed(
                "g-hom-associativity",
                Some(group.name()),
                format!(
                    "({}, {}, {}) defect = {}",
                    algebra.labels()[i],
                    algebra.labels()[j],
                    algebra.labels()[k],
                    algebra.format_vector(&w.defect)
                ),
            )
        }
    });

    finish(report, started, json)
}

fn twist(path: &str, out: Option<&std::path::Path>) -> Result<u8, Error> {
    let text = read_input(path)?;
    let doc = AlgebraDocument::parse(&text)?;
    let (algebra, alpha) = doc.into_algebra()?;
    let Some(alpha) = alpha else {
        return Err(Error::Document(
            "twist requires the document to carry an alpha matrix".into(),
        ));
    };
    match HomAlgebra::twist(&algebra, &alpha) {
        Ok(t) => {
            let out_doc = AlgebraDocument::from_algebra(t.algebra(), Some(t.alpha()), doc.kind);
            write_output(out, &out_doc.to_json()?)?;
            Ok(0)
        }
        Err(Error::NotMultiplicative { i, j }) => {
            eprintln!(
                "check failed: alpha is not multiplicative at the basis pair ({}, {})",
                algebra.labels()[i],
                algebra.labels()[j]
            );
            Ok(1)
        }
        Err(e) => Err(e),
    }
}

fn homology(
    path: &str,
    coefficients: &str,
    max_degree: Option<usize>,
    json: bool,
) -> Result<u8, Error> {
    let started = Instant::now();
    let (algebra, alpha) = load(path, None)?;
    let mut report = Report::new(&format!("homology --coefficients {coefficients}"));

    let l = HomAlgebra::unchecked(algebra, alpha)?;
    if !l.is_hom_lie()? {
        report.checks.push(CheckVerdict::failed(
            "hom-lie",
            Some("a3"),
            "the document's bracket and alpha do not form a Hom-Lie algebra".into(),
        ));
        return finish(report, started, json);
    }
    report.checks.push(CheckVerdict::passed("hom-lie", Some("a3")));

    let module = match coefficients {
        "adjoint" => HomModule::adjoint(&l),
        _ => HomModule::trivial(&l),
    };
    match hom_module_witness(&l, &module)? {
        None => report
            .checks
            .push(CheckVerdict::passed("hom-module-axioms", None)),
        Some(w) => {
            report.checks.push(CheckVerdict::failed(
                "hom-module-axioms",
                None,
                w.describe(&module, &l),
            ));
            return finish(report, started, json);
        }
    }

    let degree = max_degree.unwrap_or(l.dim());
    let complex = build_ce_complex(&l, &module, degree)?;
    if complex.verify_d_squared() {
        report.checks.push(CheckVerdict::passed("d-squared-zero", None));
        report.homology = Some(complex.homology()?);
    } else {
        report.checks.push(CheckVerdict::failed(
            "d-squared-zero",
            None,
            "a consecutive boundary product is nonzero".into(),
        ));
    }
    finish(report, started, json)
}

fn hybe(
    path: &str,
    strands: Option<usize>,
    dump: Option<&std::path::Path>,
    json: bool,
) -> Result<u8, Error> {
    let started = Instant::now();
    let (algebra, alpha) = load(path, None)?;
    let mut report = Report::new("hybe");

    let l = HomAlgebra::unchecked(algebra, alpha)?;
    let b = match build_b_alpha(&l) {
        Ok(b) => b,
        Err(Error::NotHomLie(msg)) => {
            report
                .checks
                .push(CheckVerdict::failed("hom-lie", Some("a3"), msg));
            return finish(report, started, json);
        }
        Err(Error::NotMultiplicative { i, j }) => {
            report.checks.push(CheckVerdict::failed(
                "alpha-multiplicativity",
                None,
                format!(
                    "fails at the basis pair ({}, {})",
                    l.algebra().labels()[i],
                    l.algebra().labels()[j]
                ),
            ));
            return finish(report, started, json);
        }
        Err(e) => return Err(e),
    };
    report.checks.push(CheckVerdict::passed("hom-lie", Some("a3")));

    report.checks.push(if check_hybe(&b)? {
        CheckVerdict::passed("hom-yang-baxter", None)
    } else {
        CheckVerdict::failed(
            "hom-yang-baxter",
            None,
            "(α⊗B)(B⊗α)(α⊗B) ≠ (B⊗α)(α⊗B)(B⊗α)".into(),
        )
    });
    report.info.push(format!(
        "B_α on {dim}² = {sq} rows; rank {rank}{inv}",
        dim = b.carrier_dim(),
        sq = b.matrix().rows(),
        rank = b.matrix().rank(),
        inv = if b.is_invertible() {
            " (invertible)"
        } else {
            " (singular)"
        }
    ));

    let mut dump_text = format!("# B_alpha\n{}", matrix_to_text(b.matrix()));
    if let Some(n) = strands {
        let ops = braid_operators(&b, n)?;
        report.checks.push(if check_braid_relations(&ops)? {
            CheckVerdict::passed("braid-relations", None)
        } else {
            CheckVerdict::failed("braid-relations", None, "relations fail exactly".into())
        });
        report
            .info
            .push(format!("{} braid operators on {n} strands", ops.len()));
        for (i, op) in ops.iter().enumerate() {
            dump_text.push_str(&format!("# B_{}\n{}", i + 1, matrix_to_text(op.matrix())));
        }
    }
    if let Some(p) = dump {
        std::fs::write(p, dump_text)
            .map_err(|e| Error::Document(format!("writing {}: {e}", p.display())))?;
    }

    finish(report, started, json)
}

fn example(family: Family) -> Result<u8, Error> {
    match family {
        Family::Sl2 { lambda, emit } => {
            let (a, alpha) = families::sl2(&lambda)?;
            emit_family(a, alpha, AlgebraKind::Lie, emit)
        }
        Family::Sln { n, lambdas, emit } => {
            let (a, alpha) = families::sl_n(n, &lambdas)?;
            emit_family(a, alpha, AlgebraKind::Lie, emit)
        }
        Family::Heisenberg { l1, l2, emit } => {
            let (a, alpha) = families::heisenberg(&l1, &l2)?;
            emit_family(a, alpha, AlgebraKind::Lie, emit)
        }
        Family::Abelian { n, emit } => {
            let a = families::abelian(n);
            let doc = AlgebraDocument::from_algebra(&a, None, Some(AlgebraKind::Lie));
            write_output(emit.out.as_deref(), &doc.to_json()?)?;
            Ok(0)
        }
        Family::Matrix { n, emit } => {
            let a = families::matrix_algebra(n);
            let doc = AlgebraDocument::from_algebra(&a, None, Some(AlgebraKind::Associative));
            write_output(emit.out.as_deref(), &doc.to_json()?)?;
            Ok(0)
        }
        Family::Cyclic {
            order,
            endo_power,
            emit,
        } => {
            let table = families::cyclic_group_table(order);
            let endo = families::cyclic_power_endo(order, endo_power);
            let (a, alpha) = families::group_algebra(&table, &endo)?;
            emit_family(a, alpha, AlgebraKind::Associative, emit)
        }
        Family::Group { table, emit } => {
            let text = std::fs::read_to_string(&table)
                .map_err(|e| Error::Document(format!("reading {}: {e}", table.display())))?;
            #[derive(serde::Deserialize)]
            struct GroupFile {
                table: Vec<Vec<usize>>,
                endo: Vec<usize>,
            }
            let spec: GroupFile = serde_json::from_str(&text)?;
            let (a, alpha) = families::group_algebra(&spec.table, &spec.endo)?;
            emit_family(a, alpha, AlgebraKind::Associative, emit)
        }
        Family::TruncatedPoly { degree, p, emit } => {
            let (a, alpha) = families::truncated_poly(degree, &p)?;
            emit_family(a, alpha, AlgebraKind::Associative, emit)
        }
        Family::Witt {
            lambda,
            min,
            max,
            json,
        } => witt_report(lambda, min, max, json),
    }
}

fn emit_family(
    algebra: FinAlgebra,
    alpha: LinearSelfMap,
    kind: AlgebraKind,
    emit: EmitArgs,
) -> Result<u8, Error> {
    let doc = if emit.untwisted {
        AlgebraDocument::from_algebra(&algebra, Some(&alpha), Some(kind))
    } else {
        let t = HomAlgebra::twist(&algebra, &alpha)?;
        AlgebraDocument::from_algebra(t.algebra(), Some(t.alpha()), Some(kind))
    };
    write_output(emit.out.as_deref(), &doc.to_json()?)?;
    Ok(0)
}

fn witt_report(lambda: Rational, min: i64, max: i64, json: bool) -> Result<u8, Error> {
    if min < -1 {
        return Err(Error::IndexBelowDomain(min));
    }
    if max < min {
        return Err(Error::Document(format!("empty window {min}..{max}")));
    }
    let started = Instant::now();
    let mut report = Report::new(&format!("example witt --lambda {lambda}"));
    let line = witt_line(lambda);

    let mut mult_witness = None;
    for m in min..=max {
        for n in min..=max {
            if !line.multiplicativity_defect(m, n)?.is_empty() {
                mult_witness = Some((m, n));
                break;
            }
        }
    }
    report.checks.push(match mult_witness {
        None => CheckVerdict::passed("alpha-multiplicativity-window", None),
        Some((m, n)) => CheckVerdict::failed(
            "alpha-multiplicativity-window",
            None,
            format!("(L_{m}, L_{n})"),
        ),
    });

    let twisted = line.twisted();
    let mut jacobi_witness = None;
    'outer: for m in min..=max {
        for n in min..=max {
            for p in min..=max {
                let defect = twisted.hom_jacobi_defect(&basis(m), &basis(n), &basis(p))?;
                if !defect.is_empty() {
                    jacobi_witness = Some((m, n, p));
                    break 'outer;
                }
            }
        }
    }
    report.checks.push(match jacobi_witness {
        None => CheckVerdict::passed("hom-jacobi-window", Some("a3")),
        Some((m, n, p)) => CheckVerdict::failed(
            "hom-jacobi-window",
            Some("a3"),
            format!("(L_{m}, L_{n}, L_{p})"),
        ),
    });
    report.info.push(format!(
        "window {min} ≤ n ≤ {max} on the twisted line subalgebra"
    ));

    finish(report, started, json)
}
