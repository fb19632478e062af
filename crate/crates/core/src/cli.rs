//! Command-line front end. Exit status: 0 when every check holds, 1 when
//! some check fails, 2 on input or usage errors.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand};

use crate::algebra::{self, AlgebraSpec, Vector};
use crate::catalog;
use crate::identities::{self, builtin, BuiltinIdentity, IdentityAST, Strategy};
use crate::io::{self, Loaded, Report};
use crate::par;
use crate::parser::{parse_identity, parse_vector, ParseError};

#[derive(Parser, Debug)]
#[command(
    name = "homalg",
    version,
    about = "Exact checks for Hom-algebras given by structure constants"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug)]
struct Output {
    /// Print the report as JSON.
    #[arg(long)]
    json: bool,
    /// Include elapsed times in the report.
    #[arg(long)]
    timings: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check identities on an algebra file.
    Verify {
        file: PathBuf,
        /// Builtin identity to check; repeatable.
        #[arg(long = "identity")]
        identities: Vec<String>,
        /// Identity in surface syntax, e.g. "mu(x,y) = mu(y,x)"; repeatable.
        #[arg(long = "expr")]
        exprs: Vec<String>,
        #[arg(long, default_value = "auto")]
        strategy: Strategy,
        /// Anticommuting pair `X,Y` for the anticommute consequences.
        #[arg(long)]
        pair: Option<String>,
        #[command(flatten)]
        output: Output,
    },
    /// Write the Yau twist by a named map.
    Twist {
        file: PathBuf,
        #[arg(long)]
        map: String,
        #[arg(short, long)]
        output: PathBuf,
        /// Twist even when the map is not an endomorphism.
        #[arg(long)]
        force: bool,
        #[command(flatten)]
        report: Output,
    },
    /// Write the algebra recovered from a Yau twist.
    Untwist {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Write the symmetrized product.
    Polarize {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Write the opposite algebra.
    Opposite {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Check that a named map is an algebra endomorphism.
    CheckEndo {
        file: PathBuf,
        #[arg(long)]
        map: String,
        #[command(flatten)]
        output: Output,
    },
    /// Check that a named map is a morphism from the first algebra to the second.
    CheckMorphism {
        from: PathBuf,
        to: PathBuf,
        #[arg(long)]
        map: String,
        #[command(flatten)]
        output: Output,
    },
    /// Check that an element is a two-sided unit.
    CheckUnit {
        file: PathBuf,
        /// Basis label or linear combination of labels.
        #[arg(long)]
        element: String,
        #[command(flatten)]
        output: Output,
    },
    /// Built-in algebras.
    Catalog {
        #[command(subcommand)]
        command: CatalogCommand,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogCommand {
    List,
    Show {
        key: String,
        /// Print the entry as an algebra file.
        #[arg(long)]
        emit: bool,
        /// Write the algebra file here instead of standard output.
        #[arg(short, long, requires = "emit")]
        output: Option<PathBuf>,
    },
}

/// A user-facing failure; always exit status 2.
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type Outcome = Result<i32, Failure>;

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(Failure(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Verify {
            file,
            identities,
            exprs,
            strategy,
            pair,
            output,
        } => verify(
            &file,
            &identities,
            &exprs,
            strategy,
            pair.as_deref(),
            &output,
            out,
        ),
        Command::Twist {
            file,
            map,
            output,
            force,
            report,
        } => twist(&file, &map, &output, force, &report, out),
        Command::Untwist { file, output } => {
            let l = io::load(&file)?;
            write_derived(algebra::untwist(&l.algebra)?, &l, &output, out)
        }
        Command::Polarize { file, output } => {
            let l = io::load(&file)?;
            write_derived(algebra::polarize(&l.algebra), &l, &output, out)
        }
        Command::Opposite { file, output } => {
            let l = io::load(&file)?;
            write_derived(algebra::opposite(&l.algebra), &l, &output, out)
        }
        Command::CheckEndo { file, map, output } => {
            let l = io::load(&file)?;
            let f = l.map(&map)?;
            let mut report = Report::new(l.algebra.name(), l.algebra.basis());
            report.push(
                format!("endomorphism {map}"),
                "basis",
                algebra::is_endomorphism(&l.algebra, f)?,
            );
            emit(&report, &output, out)
        }
        Command::CheckMorphism {
            from,
            to,
            map,
            output,
        } => {
            let a = io::load(&from)?;
            let b = io::load(&to)?;
            let f = a.map(&map).or_else(|_| b.map(&map))?;
            let subject = format!("{} -> {}", a.algebra.name(), b.algebra.name());
            let mut report = Report::new(subject, a.algebra.basis());
            report.push(
                format!("morphism {map}"),
                "basis",
                algebra::is_morphism(&a.algebra, &b.algebra, f)?,
            );
            emit(&report, &output, out)
        }
        Command::CheckUnit {
            file,
            element,
            output,
        } => {
            let l = io::load(&file)?;
            let u = element_vector(&l.algebra, &element)?;
            let mut report = Report::new(l.algebra.name(), l.algebra.basis());
            report.push(
                format!("unit {element}"),
                "basis",
                algebra::check_unit(&l.algebra, &u)?,
            );
            emit(&report, &output, out)
        }
        Command::Catalog { command } => catalog_command(command, out),
    }
}

fn emit(report: &Report, output: &Output, out: &mut dyn Write) -> Outcome {
    let text = if output.json {
        report.to_json(output.timings)
    } else {
        report.to_text(output.timings)
    };
    out.write_all(text.as_bytes())?;
    Ok(report.exit_code())
}

fn element_vector(a: &AlgebraSpec, text: &str) -> Result<Vector, Failure> {
    let names: Vec<&str> = a.params().iter().map(|p| p.name.as_str()).collect();
    parse_vector(text, &names, a.basis()).map_err(|e| Failure(parse_message(text, &e)))
}

/// Error text with the input and a caret under the reported position.
fn parse_message(input: &str, e: &ParseError) -> String {
    let p = e.position();
    let line = input.lines().nth(p.line - 1).unwrap_or("");
    format!("{e}\n  {line}\n  {}^", " ".repeat(p.column - 1))
}

/// A check to run in `verify`.
struct Planned {
    name: String,
    clauses: Vec<IdentityAST>,
    universal: bool,
}

impl Planned {
    fn from_builtin(b: &BuiltinIdentity) -> Planned {
        Planned {
            name: b.name.to_string(),
            clauses: b.clauses.clone(),
            universal: b.universal,
        }
    }
}

/// Default suite: multilinear identities on basis tuples, then nonlinear
/// ones generically. `hom_jordan` is added for commutative products.
const DEFAULT_SUITE: [&str; 10] = [
    "hom_associative",
    "left_hom_alternative_linearized",
    "right_hom_alternative_linearized",
    "associator_alternating_12",
    "associator_alternating_23",
    "associator_alternating_13",
    "left_hom_alternative",
    "right_hom_alternative",
    "hom_flexible",
    "noncommutative_hom_jordan",
];

fn verify(
    file: &Path,
    names: &[String],
    exprs: &[String],
    strategy: Strategy,
    pair: Option<&str>,
    output: &Output,
    out: &mut dyn Write,
) -> Outcome {
    let loaded = io::load(file)?;
    let mut plan: Vec<Planned> = Vec::new();
    for n in names {
        plan.push(Planned::from_builtin(&builtin(n)?));
    }
    for text in exprs {
        let ast = parse_identity(text)
            .map_err(|e| Failure(format!("--expr: {}", parse_message(text, &e))))?;
        plan.push(Planned {
            name: text.trim().to_string(),
            clauses: vec![ast],
            universal: true,
        });
    }
    let default_suite = plan.is_empty();
    if default_suite {
        for n in DEFAULT_SUITE {
            plan.push(Planned::from_builtin(&builtin(n)?));
        }
    }
    let uses_alpha = plan
        .iter()
        .any(|p| p.clauses.iter().any(|c| c.body.uses_alpha()));
    let mut notes = Vec::new();
    let algebra = if uses_alpha && loaded.algebra.alpha().is_none() {
        notes.push("no map named `alpha`; alpha is taken to be the identity".to_string());
        loaded.algebra.with_identity_alpha()
    } else {
        loaded.algebra.clone()
    };
    let pair = match pair {
        Some(text) => {
            let (x, y) = text
                .split_once(',')
                .ok_or_else(|| Failure("--pair expects X,Y".into()))?;
            Some((
                element_vector(&algebra, x.trim())?,
                element_vector(&algebra, y.trim())?,
            ))
        }
        None => None,
    };
    if plan.iter().any(|p| !p.universal) && pair.is_none() {
        return Err(Failure(
            "anticommute consequences need an anticommuting pair: --pair X,Y".into(),
        ));
    }
    let mut records = run_plan(&algebra, &plan, strategy, pair.as_ref())?;
    let needs_commutative = plan
        .iter()
        .any(|p| builtin(&p.name).is_ok_and(|b| b.requires_commutative));
    if default_suite || needs_commutative {
        let commutative =
            identities::check(&algebra, builtin("commutative")?.ast(), Strategy::Basis)?.holds();
        if default_suite && commutative {
            let jordan = Planned::from_builtin(&builtin("hom_jordan")?);
            records.extend(run_plan(&algebra, &[jordan], strategy, None)?);
        } else if default_suite {
            notes.push("hom_jordan skipped: the product is not commutative".to_string());
        } else if !commutative {
            for p in plan
                .iter()
                .filter(|p| builtin(&p.name).is_ok_and(|b| b.requires_commutative))
            {
                notes.push(format!(
                    "{} assumes a commutative product, which fails here",
                    p.name
                ));
            }
        }
    }
    let mut report = Report::new(algebra.name(), algebra.basis());
    report.records = records;
    report.notes = notes;
    emit(&report, output, out)
}

fn run_plan(
    algebra: &AlgebraSpec,
    plan: &[Planned],
    strategy: Strategy,
    pair: Option<&(Vector, Vector)>,
) -> Result<Vec<io::Record>, Failure> {
    let results = par::map(plan, |p| -> Result<io::Record, identities::IdentityError> {
        let start = Instant::now();
        let mut report: Option<algebra::CheckReport> = None;
        let mut used = Vec::new();
        for clause in &p.clauses {
            let (r, s) = match (p.universal, pair) {
                (false, Some((x, y))) => {
                    let b = BuiltinIdentity {
                        clauses: vec![clause.clone()],
                        ..builtin(&p.name)?
                    };
                    (b.check_anticommuting(algebra, x, y)?, Strategy::Generic)
                }
                _ => (
                    identities::check(algebra, clause, strategy)?,
                    strategy.resolve(clause),
                ),
            };
            if !used.contains(&s) {
                used.push(s);
            }
            report = Some(match report {
                None => r,
                Some(prev) => prev.and(r),
            });
        }
        let strategy = used
            .iter()
            .map(|s| s.as_str())
            .collect::<Vec<_>>()
            .join("+");
        Ok(io::Record {
            check: p.name.clone(),
            strategy,
            report: report.expect("at least one clause"),
            elapsed: Some(start.elapsed()),
        })
    });
    results
        .into_iter()
        .collect::<Result<Vec<_>, _>>()
        .map_err(Failure::from)
}

fn twist(
    file: &Path,
    map: &str,
    output_path: &Path,
    force: bool,
    output: &Output,
    out: &mut dyn Write,
) -> Outcome {
    let loaded = io::load(file)?;
    let f = loaded.map(map)?;
    let endo = algebra::is_endomorphism(&loaded.algebra, f)?;
    let mut report = Report::new(loaded.algebra.name(), loaded.algebra.basis());
    if !endo.holds() && !force {
        report.push(format!("endomorphism {map}"), "basis", endo);
        report
            .notes
            .push("not twisted; use --force to twist anyway".to_string());
        return emit(&report, output, out);
    }
    let twisted = algebra::yau_twist_unchecked(&loaded.algebra, f)?;
    let mut notes = loaded.notes.clone();
    if endo.holds() {
        report.push(format!("endomorphism {map}"), "basis", endo);
    } else {
        let note = format!("twisted with --force: `{map}` is not an endomorphism, the twist theorem does not apply");
        report.notes.push(note.clone());
        notes.push(note);
    }
    let mut maps = loaded.maps.clone();
    maps.remove(io::ALPHA);
    save_to(&twisted, maps, notes, output_path)?;
    report
        .notes
        .push(format!("wrote {}", output_path.display()));
    let text = if output.json {
        report.to_json(output.timings)
    } else {
        report.to_text(output.timings)
    };
    out.write_all(text.as_bytes())?;
    // a forced twist was requested and written, so it counts as success
    Ok(0)
}

fn save_to(
    a: &AlgebraSpec,
    maps: BTreeMap<String, algebra::LinMap>,
    notes: Vec<String>,
    path: &Path,
) -> Result<(), Failure> {
    let loaded = Loaded {
        algebra: a.clone(),
        maps,
        notes,
    };
    io::save(&loaded, path)?;
    Ok(())
}

fn write_derived(a: AlgebraSpec, source: &Loaded, path: &Path, out: &mut dyn Write) -> Outcome {
    let mut maps = source.maps.clone();
    maps.remove(io::ALPHA);
    save_to(&a, maps, source.notes.clone(), path)?;
    writeln!(out, "wrote {} ({})", path.display(), a.name())?;
    Ok(0)
}

fn catalog_command(command: CatalogCommand, out: &mut dyn Write) -> Outcome {
    match command {
        CatalogCommand::List => {
            for key in catalog::list() {
                let e = catalog::get(key)?;
                writeln!(out, "{key:<24} {}", e.provenance)?;
            }
            Ok(0)
        }
        CatalogCommand::Show { key, emit, output } => {
            let e = catalog::get(&key)?;
            if emit {
                let mut loaded = Loaded::new(e.algebra.clone());
                for (n, m) in &e.maps {
                    loaded.maps.insert(n.to_string(), m.clone());
                }
                loaded.notes = e
                    .errata
                    .iter()
                    .map(|x| {
                        format!(
                            "({}, {}): published {}, stored {}; {}",
                            x.at.0, x.at.1, x.published, x.stored, x.reason
                        )
                    })
                    .collect();
                match output {
                    Some(path) => {
                        io::save(&loaded, &path)?;
                        writeln!(out, "wrote {}", path.display())?;
                    }
                    None => out.write_all(io::to_string(&loaded).as_bytes())?,
                }
                return Ok(0);
            }
            write!(out, "{}", describe(&e))?;
            Ok(0)
        }
    }
}

fn describe(e: &catalog::CatalogEntry) -> String {
    let a = &e.algebra;
    let mut s = format!("{}: {}\n", e.key, e.provenance);
    s += &format!("basis: {}\n", a.basis().join(", "));
    if !a.params().is_empty() {
        let ps: Vec<String> = a
            .params()
            .iter()
            .map(|p| {
                if p.nonzero {
                    format!("{} (nonzero)", p.name)
                } else {
                    p.name.clone()
                }
            })
            .collect();
        s += &format!("params: {}\n", ps.join(", "));
    }
    if let Some(u) = a.unit() {
        s += &format!("unit: {}\n", a.basis()[u]);
    }
    s += "products:\n";
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let v = a.product_of_basis(i, j);
            if !v.is_zero() {
                s += &format!(
                    "  ({}, {}) -> {}\n",
                    a.basis()[i],
                    a.basis()[j],
                    v.display_with(a.basis())
                );
            }
        }
    }
    for (name, m) in &e.maps {
        s += &format!("map {name}:\n");
        for j in 0..a.dim() {
            s += &format!(
                "  {} -> {}\n",
                a.basis()[j],
                m.column(j).display_with(a.basis())
            );
        }
    }
    for x in &e.errata {
        s += &format!(
            "erratum ({}, {}): published {}, stored {}; {}\n",
            x.at.0, x.at.1, x.published, x.stored, x.reason
        );
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["homalg"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn catalog_commands() {
        let (code, out, _) = run_capture(&["catalog", "list"]);
        assert_eq!(code, 0);
        assert!(out.contains("octonions_twist_diag"));
        let (code, out, _) = run_capture(&["catalog", "show", "alt4_mu1"]);
        assert_eq!(code, 0);
        assert!(out.contains("(e3, e2) -> -e1"));
        let (code, _, err) = run_capture(&["catalog", "show", "nonsense"]);
        assert_eq!(code, 2);
        assert!(err.contains("nonsense"));
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_capture(&["frobnicate"]).0, 2);
        assert_eq!(run_capture(&["verify"]).0, 2);
        assert_eq!(run_capture(&["--help"]).0, 0);
    }

    #[test]
    fn caret_under_error() {
        let e = parse_identity("mu(x y)").unwrap_err();
        let msg = parse_message("mu(x y)", &e);
        assert!(msg.ends_with("\n  mu(x y)\n       ^"), "{msg}");
    }
}
