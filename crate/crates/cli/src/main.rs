use clap::{Parser, Subcommand, ValueEnum};
use dblcat::dblfunctor::{is_adjoint_equivalence, is_strong, validate_lax_functor};
use dblcat::doublecat::{check_univalent_double, is_strict, DoubleCategory};
use dblcat::examples::{
    finset_skeleton, finset_skeleton_of, kleisli_double_cat, lenses_double_cat, poset_category, spans_double_cat,
    square_double_cat, structured_cospans_double_cat, ExceptionMonad, IdentityMonad, Poset, PowersetMonad,
};
use dblcat::fincat::{validate_category, FinFunctor, MapClass};
use dblcat::json::{parse_document, parse_functor_document, Document, Level};
use dblcat::twosided::validate_twosided;
use dblcat::{validate_double_category, Decision, Error, LawReport};
use serde_json::json;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

#[derive(Parser)]
#[command(name = "dblcat", version, about = "Check finite double categories against their laws")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Largest carrier size an example may use.
    #[arg(long, global = true, env = "DBLCAT_BOUND", default_value_t = 4)]
    bound: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum LevelArg {
    Category,
    Twosided,
    Double,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExampleName {
    Squares,
    Kleisli,
    Spans,
    Cospans,
    Lenses,
}

#[derive(Clone, Copy, ValueEnum)]
enum MonadArg {
    Identity,
    Powerset,
    Exception,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassArg {
    All,
    Injective,
    Surjective,
    MonotoneInjective,
    MonotoneSurjective,
}

#[derive(Subcommand)]
enum Command {
    /// Run the law suite on a document.
    Validate {
        path: PathBuf,
        /// Layer to check; defaults to the deepest layer in the file.
        #[arg(long, value_enum)]
        level: Option<LevelArg>,
    },
    /// Build one of the example double categories.
    Example {
        #[arg(value_enum)]
        name: ExampleName,
        /// Poset carrier: chainN, diamond, subsetsK or divisorsN.
        #[arg(long, conflicts_with = "finset")]
        poset: Option<String>,
        /// Finite sets of sizes 0..=N.
        #[arg(long)]
        finset: Option<usize>,
        /// Which maps between finite sets to include.
        #[arg(long, value_enum)]
        class: Option<ClassArg>,
        #[arg(long, value_enum, default_value_t = MonadArg::Powerset)]
        monad: MonadArg,
        /// Carrier size for kleisli and lenses.
        #[arg(long)]
        size: Option<usize>,
        /// Number of exceptions for the exception monad.
        #[arg(long, default_value_t = 1)]
        exceptions: usize,
        /// Write the tabular document here.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Validate a lax functor and decide whether it is an adjoint equivalence.
    CheckFunctor { path: PathBuf },
    /// Decide univalence of a double category.
    Univalence { path: PathBuf },
    /// Compose horizontal morphisms, or squares with --squares, left to right.
    Compose {
        path: PathBuf,
        #[arg(required = true, num_args = 1..)]
        ids: Vec<usize>,
        #[arg(long)]
        squares: bool,
    },
}

/// Exit status 2: the input could not be used at all.
struct Malformed(String);

impl From<Error> for Malformed {
    fn from(e: Error) -> Self {
        Malformed(e.to_string())
    }
}

type Outcome = Result<bool, Malformed>;

fn read(path: &Path) -> Result<String, Malformed> {
    std::fs::read_to_string(path).map_err(|e| Malformed(format!("{}: {e}", path.display())))
}

fn load_double(path: &Path) -> Result<DoubleCategory, Malformed> {
    let doc = parse_document(&read(path)?).map_err(|e| Malformed(format!("{}: {e}", path.display())))?;
    Ok(doc.double()?)
}

fn print_report(format: Format, level: &str, r: &LawReport) {
    match format {
        Format::Text => print!("{r}"),
        Format::Json => {
            let mut v = r.to_json();
            v["level"] = json!(level);
            println!("{}", serde_json::to_string_pretty(&v).expect("json"));
        }
    }
}

fn validate(format: Format, path: &Path, level: Option<LevelArg>) -> Outcome {
    let doc = parse_document(&read(path)?)?;
    let level = match level {
        Some(LevelArg::Category) => Level::Category,
        Some(LevelArg::Twosided) => Level::Twosided,
        Some(LevelArg::Double) => Level::Double,
        None => doc.level(),
    };
    if level > doc.level() {
        return Err(Malformed(format!("document has no {level:?} layer").to_lowercase()));
    }
    let (name, report) = match level {
        Level::Category => ("category", validate_category(&doc.category()?)),
        Level::Twosided => ("twosided", validate_twosided(&doc.twosided()?)),
        Level::Double => ("double", validate_double_category(&doc.double()?)),
    };
    print_report(format, name, &report);
    Ok(report.is_empty())
}

fn parse_poset(s: &str) -> Result<Poset, Malformed> {
    let num = |prefix: &str| s.strip_prefix(prefix).and_then(|n| n.parse::<usize>().ok());
    if s == "diamond" {
        Ok(Poset::diamond())
    } else if let Some(n) = num("chain") {
        Ok(Poset::chain(n))
    } else if let Some(k) = num("subsets") {
        Ok(Poset::subsets(k))
    } else if let Some(n) = num("divisors").filter(|&n| n > 0) {
        Ok(Poset::divisors(n))
    } else {
        Err(Malformed(format!("unknown poset \"{s}\"; use chainN, diamond, subsetsK or divisorsN")))
    }
}

fn check_bound(size: usize, bound: usize) -> Result<(), Malformed> {
    if size > bound {
        return Err(Error::ObjectOutOfBounds { size, bound }.into());
    }
    Ok(())
}

struct ExampleArgs {
    name: ExampleName,
    poset: Option<String>,
    finset: Option<usize>,
    class: Option<ClassArg>,
    monad: MonadArg,
    size: Option<usize>,
    exceptions: usize,
}

fn build_example(a: &ExampleArgs, bound: usize) -> Result<DoubleCategory, Malformed> {
    let class = |default| match a.class {
        None => default,
        Some(ClassArg::All) => MapClass::ALL,
        Some(ClassArg::Injective) => MapClass::INJECTIVE,
        Some(ClassArg::Surjective) => MapClass::SURJECTIVE,
        Some(ClassArg::MonotoneInjective) => MapClass::MONOTONE_INJECTIVE,
        Some(ClassArg::MonotoneSurjective) => MapClass::MONOTONE_SURJECTIVE,
    };
    let poset = || -> Result<Option<Poset>, Malformed> {
        match &a.poset {
            Some(p) => Ok(Some(parse_poset(p)?)),
            None => Ok(None),
        }
    };
    Ok(match a.name {
        ExampleName::Squares => {
            let p = poset()?.unwrap_or_else(|| Poset::chain(3));
            square_double_cat(poset_category(&p).category())?
        }
        ExampleName::Kleisli => {
            let n = a.size.or(a.finset).unwrap_or(2);
            check_bound(n, bound)?;
            let c = finset_skeleton(n, bound)?;
            match a.monad {
                MonadArg::Identity => kleisli_double_cat(&IdentityMonad, &c)?,
                MonadArg::Powerset => kleisli_double_cat(&PowersetMonad, &c)?,
                MonadArg::Exception => kleisli_double_cat(&ExceptionMonad { exceptions: a.exceptions }, &c)?,
            }
        }
        ExampleName::Spans => match (poset()?, a.finset) {
            (Some(p), _) => spans_double_cat(&poset_category(&p))?,
            (None, n) => spans_double_cat(&finset_skeleton_of(n.unwrap_or(2), class(MapClass::INJECTIVE), bound)?)?,
        },
        ExampleName::Cospans => match (poset()?, a.finset) {
            (Some(p), _) => {
                let c = poset_category(&p);
                structured_cospans_double_cat(&FinFunctor::identity(c.category().clone()), &c)?
            }
            (None, n) => {
                let c = finset_skeleton_of(n.unwrap_or(2), class(MapClass::SURJECTIVE), bound)?;
                structured_cospans_double_cat(&FinFunctor::identity(c.category().clone()), &c)?
            }
        },
        ExampleName::Lenses => {
            let n = a.size.or(a.finset).unwrap_or(2);
            lenses_double_cat(&finset_skeleton(n, bound)?)?
        }
    })
}

fn example(format: Format, a: &ExampleArgs, emit: Option<&Path>, bound: usize) -> Outcome {
    let d = build_example(a, bound)?;
    if let Some(path) = emit {
        std::fs::write(path, Document::from_double(&d).to_json_string())
            .map_err(|e| Malformed(format!("{}: {e}", path.display())))?;
    }
    let summary = json!({
        "objects": d.vertical().object_count(),
        "vertical_morphisms": d.vertical().morphism_count(),
        "horizontal_morphisms": d.hor_count(),
        "squares": d.square_count(),
        "strict": is_strict(&d).holds(),
    });
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&summary).expect("json")),
        Format::Text => {
            println!("objects: {}", summary["objects"]);
            println!("vertical morphisms: {}", summary["vertical_morphisms"]);
            println!("horizontal morphisms: {}", summary["horizontal_morphisms"]);
            println!("squares: {}", summary["squares"]);
            println!("strict: {}", if is_strict(&d).holds() { "yes" } else { "no" });
            if let Some(path) = emit {
                println!("written to {}", path.display());
            }
        }
    }
    Ok(true)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn verdict<W: serde::Serialize + std::fmt::Debug>(format: Format, label: &str, d: &Decision<W>) {
    match (format, d) {
        (Format::Text, Decision::Holds) => println!("{label}: yes"),
        (Format::Text, Decision::Fails(w)) => println!("{label}: no ({w:?})"),
        (Format::Json, _) => println!("{}", json!({ "decision": label, "holds": d.holds(), "witness": d.witness() })),
    }
}

fn check_functor(format: Format, path: &Path) -> Outcome {
    let doc = parse_functor_document(&read(path)?).map_err(|e| Malformed(format!("{}: {e}", path.display())))?;
    let dir = path.parent().unwrap_or(Path::new("."));
    let dom = Arc::new(load_double(&dir.join(&doc.dom))?);
    let cod = if doc.cod == doc.dom { dom.clone() } else { Arc::new(load_double(&dir.join(&doc.cod))?) };
    let f = doc.resolve(dom, cod)?;
    let report = validate_lax_functor(&f);
    if !report.is_empty() {
        print_report(format, "lax functor", &report);
        return Ok(false);
    }
    let strong = is_strong(&f);
    let equivalence = is_adjoint_equivalence(&f);
    match format {
        Format::Text => {
            println!("lax functor: valid");
            println!("strong: {}", yes_no(strong.holds()));
            verdict(format, "adjoint equivalence", &equivalence);
        }
        Format::Json => {
            let v = json!({
                "lax_functor": true,
                "strong": strong,
                "adjoint_equivalence": equivalence,
            });
            println!("{}", serde_json::to_string_pretty(&v).expect("json"));
        }
    }
    Ok(equivalence.holds())
}

fn univalence(format: Format, path: &Path) -> Outcome {
    let d = load_double(path)?;
    let u = check_univalent_double(&d);
    verdict(format, "univalent", &u);
    Ok(u.holds())
}

fn compose(format: Format, path: &Path, ids: &[usize], squares: bool) -> Outcome {
    let d = load_double(path)?;
    let (count, kind) = if squares { (d.square_count(), "square") } else { (d.hor_count(), "horizontal morphism") };
    if let Some(&bad) = ids.iter().find(|&&i| i >= count) {
        return Err(Malformed(format!("no {kind} with id {bad}")));
    }
    let step = |a: usize, b: usize| if squares { d.hcomp_sq(a, b) } else { d.hcomp(a, b) };
    let mut acc = ids[0];
    for &next in &ids[1..] {
        match step(acc, next) {
            Some(r) => acc = r,
            None => {
                let msg = format!("{kind}s {acc} and {next} are not composable");
                match format {
                    Format::Text => println!("NotComposable: {msg}"),
                    Format::Json => println!("{}", json!({ "error": "NotComposable", "detail": msg })),
                }
                return Ok(false);
            }
        }
    }
    let boundary = if squares {
        let s = d.square(acc);
        json!({ "src": s.src, "tgt": s.tgt, "f1": s.f1, "f2": s.f2 })
    } else {
        let (x, y) = d.hor(acc);
        json!({ "x": x, "y": y })
    };
    match format {
        Format::Text if squares => {
            let s = d.square(acc);
            println!("square {acc}: {} -> {} over ({}, {})", s.src, s.tgt, s.f1, s.f2);
        }
        Format::Text => {
            let (x, y) = d.hor(acc);
            println!("horizontal morphism {acc}: {x} -|-> {y}");
        }
        Format::Json => println!("{}", json!({ "result": acc, "boundary": boundary })),
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    let outcome = match cli.command {
        Command::Validate { path, level } => validate(format, &path, level),
        Command::Example { name, poset, finset, class, monad, size, exceptions, emit } => {
            let args = ExampleArgs { name, poset, finset, class, monad, size, exceptions };
            example(format, &args, emit.as_deref(), cli.bound)
        }
        Command::CheckFunctor { path } => check_functor(format, &path),
        Command::Univalence { path } => univalence(format, &path),
        Command::Compose { path, ids, squares } => compose(format, &path, &ids, squares),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Malformed(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
