use std::collections::BTreeSet;
use std::io::Read as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fuzzdir_core::algebra::{direct_product, epimorphic_image, subautomaton_induced, StateMap};
use fuzzdir_core::classify::{classify_with_cap, ClassificationReport};
use fuzzdir_core::directability::{
    build_recognizer_with_cap, d3_decide_by_merging, shortest_directing_word_with_cap, DEFAULT_STATE_CAP,
};
use fuzzdir_core::dot::dfr_to_dot;
use fuzzdir_core::format::{parse_automaton, serialize_ffa};
use fuzzdir_core::generate::{generate, Constraints, GeneratorConfig};
use fuzzdir_core::languages::{check_closure_equations_with_cap, enumerate_directing_words, minimize};
use fuzzdir_core::{fixtures, Degree, Dfr, DirectingKind, Ffa, Symbols};

#[derive(Parser)]
#[command(name = "fuzzdir", version, about = "Directing words of fuzzy finite automata")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether the automaton has a directing word of the given kind.
    Decide {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value_t = Method::Powerset)]
        method: Method,
        /// Exit with status 1 when the automaton is not directable.
        #[arg(long)]
        fail_if_not: bool,
    },
    /// List every directing word up to a length.
    Words {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value_t = 4)]
        max_len: usize,
    },
    /// Print a shortest directing word, or `none`.
    Shortest {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        fail_if_not: bool,
    },
    /// Build the recognizer of the directing words.
    Recognizer {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        minimize: bool,
        /// Print Graphviz DOT instead of a transition table.
        #[arg(long)]
        emit_dot: bool,
    },
    /// Flags, directability and class membership for one or more files.
    Classify {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check the ideal closure laws of the DD languages.
    CheckLaws {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Exit with status 1 when an applicable law fails.
        #[arg(long)]
        fail_if_not: bool,
    },
    /// Direct product of two automata over the same alphabet.
    Product { left: PathBuf, right: PathBuf },
    /// The subautomaton on a closed set of states.
    Restrict {
        file: PathBuf,
        /// Comma-separated state names.
        #[arg(long, value_delimiter = ',', required = true)]
        states: Vec<String>,
    },
    /// The epimorphic image under a state map.
    Image {
        file: PathBuf,
        /// Comma-separated `state=class` pairs; classes become the new states.
        #[arg(long, value_delimiter = ',', required = true)]
        map: Vec<String>,
    },
    /// Generate a seeded random FFA.
    Gen(GenArgs),
    /// List the built-in example automata, or print one.
    Fixtures { name: Option<String> },
}

#[derive(Args)]
struct Target {
    file: PathBuf,
    #[arg(long, value_parser = parse_kind)]
    kind: DirectingKind,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    states: usize,
    #[arg(long)]
    letters: usize,
    /// Comma-separated degrees.
    #[arg(long, value_delimiter = ',', default_value = "0,1/2,1")]
    palette: Vec<Degree>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    complete: bool,
    #[arg(long)]
    normal: bool,
    #[arg(long)]
    crisp: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Powerset,
    Merge,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn parse_kind(text: &str) -> Result<DirectingKind, String> {
    text.parse().map_err(|e: fuzzdir_core::Error| e.to_string())
}

enum Failure {
    /// Bad input, unreadable file or an analysis that could not finish.
    Input(String),
    /// Input errors already printed.
    Reported,
    /// The analysis ran but the answer was negative under `--fail-if-not`.
    Negative,
}

impl From<fuzzdir_core::Error> for Failure {
    fn from(err: fuzzdir_core::Error) -> Self {
        Failure::Input(err.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn state_cap() -> Result<usize, Failure> {
    match std::env::var("FUZZDIR_STATE_CAP") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Input(format!("FUZZDIR_STATE_CAP: `{v}` is not a number"))),
        Err(_) => Ok(DEFAULT_STATE_CAP),
    }
}

/// Reads an automaton file (`-` for stdin) of any kind as an FFA.
fn load(path: &Path) -> Result<Ffa, Failure> {
    let text = if path == Path::new("-") {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::Input(format!("stdin: {e}")))?;
        buf
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?
    };
    parse_automaton(&text)
        .map(|a| a.into_ffa())
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn negative_if(fail_if_not: bool, positive: bool) -> Outcome {
    if fail_if_not && !positive {
        Err(Failure::Negative)
    } else {
        Ok(())
    }
}

fn print_table(r: &Dfr) {
    let letters = r.alphabet();
    println!("states: {}", r.state_count());
    println!("initial: {}", r.state_name(r.initial()));
    let finals: Vec<&str> = r.finals().iter().map(|&s| r.state_name(s)).collect();
    println!("final: {}", finals.join(" "));
    for (s, x, t) in r.dfa().edges() {
        println!("{} -{}-> {}", r.state_name(s), letters.name(x), r.state_name(t));
    }
}

fn decide(target: &Target, method: Method, fail_if_not: bool) -> Outcome {
    let ffa = load(&target.file)?;
    let directable = match method {
        Method::Powerset => {
            let word = shortest_directing_word_with_cap(&ffa, target.kind, state_cap()?)?;
            match &word {
                Some(w) => println!("directable: true; shortest: {}", ffa.render_word(w)),
                None => println!("directable: false"),
            }
            word.is_some()
        }
        Method::Merge => {
            if target.kind != DirectingKind::D3 {
                return Err(Failure::Input(format!(
                    "the merge method decides D3 only, not {}",
                    target.kind
                )));
            }
            let directable = d3_decide_by_merging(&ffa)?;
            println!("directable: {directable}");
            directable
        }
    };
    negative_if(fail_if_not, directable)
}

fn classify_files(files: &[PathBuf], format: Format) -> Outcome {
    let cap = state_cap()?;
    let reports: Vec<Result<ClassificationReport, Failure>> = std::thread::scope(|scope| {
        let handles: Vec<_> = files
            .iter()
            .map(|path| scope.spawn(move || load(path).map(|ffa| classify_with_cap(&ffa, cap))))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("classifier thread panicked"))
            .collect()
    });
    let mut failed = false;
    let mut json = Vec::new();
    for (path, report) in files.iter().zip(reports) {
        let report = match report {
            Ok(r) => r,
            Err(Failure::Input(msg)) => {
                eprintln!("error: {msg}");
                failed = true;
                continue;
            }
            Err(other) => return Err(other),
        };
        match format {
            Format::Json if files.len() == 1 => json.push(serde_json::to_value(&report).expect("serializable")),
            Format::Json => json.push(serde_json::json!({
                "file": path.display().to_string(),
                "report": report,
            })),
            Format::Text => {
                if files.len() > 1 {
                    println!("== {}", path.display());
                }
                print!("{}", report.to_text());
            }
        }
    }
    if format == Format::Json {
        let value = if files.len() == 1 {
            json.pop().unwrap_or(serde_json::Value::Null)
        } else {
            serde_json::Value::Array(json)
        };
        if !value.is_null() {
            println!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
        }
    }
    if failed {
        Err(Failure::Reported)
    } else {
        Ok(())
    }
}

fn check_laws(file: &Path, format: Format, fail_if_not: bool) -> Outcome {
    let ffa = load(file)?;
    let report = check_closure_equations_with_cap(&ffa, state_cap()?)?;
    match format {
        Format::Json => {
            let laws: Vec<_> = report
                .laws
                .iter()
                .map(|l| {
                    serde_json::json!({
                        "law": l.law,
                        "requires_normal": l.requires_normal,
                        "holds": l.holds,
                        "witness": l.witness,
                    })
                })
                .collect();
            let doc = serde_json::json!({ "normal": report.normal, "laws": laws });
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        }
        Format::Text => {
            println!("normal: {}", report.normal);
            for l in &report.laws {
                let verdict = if l.holds { "holds" } else { "fails" };
                let witness = l
                    .witness
                    .as_deref()
                    .map(|w| format!(" (witness {w})"))
                    .unwrap_or_default();
                let note = if l.requires_normal && !report.normal {
                    " [not applicable: automaton is not normal]"
                } else {
                    ""
                };
                println!("{}: {verdict}{witness}{note}", l.law);
            }
        }
    }
    negative_if(fail_if_not, report.violations().is_empty())
}

fn restrict(file: &Path, names: &[String]) -> Outcome {
    let ffa = load(file)?;
    let states = names
        .iter()
        .map(|n| ffa.state(n.trim()))
        .collect::<fuzzdir_core::Result<BTreeSet<usize>>>()?;
    print!("{}", serialize_ffa(&subautomaton_induced(&ffa, &states)?));
    Ok(())
}

fn image(file: &Path, map: &[String]) -> Outcome {
    let ffa = load(file)?;
    let mut pairs = Vec::new();
    let mut classes: Vec<&str> = Vec::new();
    for entry in map {
        let (state, class) = entry
            .split_once('=')
            .ok_or_else(|| Failure::Input(format!("map entry `{entry}` is not state=class")))?;
        let (state, class) = (state.trim(), class.trim());
        if !classes.contains(&class) {
            classes.push(class);
        }
        pairs.push((state, class));
    }
    let targets = Symbols::new(classes.iter().copied())?;
    let state_map = StateMap::from_names(ffa.states(), &targets, &pairs)?;
    print!("{}", serialize_ffa(&epimorphic_image(&ffa, &state_map, targets)?));
    Ok(())
}

fn gen(args: &GenArgs) -> Outcome {
    let config = GeneratorConfig::new(args.states, args.letters, args.palette.clone(), args.seed).with_constraints(
        Constraints {
            complete: args.complete,
            normal: args.normal,
            crisp: args.crisp,
        },
    );
    print!("{}", serialize_ffa(&generate(&config)?));
    Ok(())
}

fn show_fixtures(name: Option<&str>) -> Outcome {
    match name {
        None => {
            for f in fixtures::all() {
                println!("{:<10}{}", f.name, f.description);
            }
        }
        Some(name) => {
            let f = fixtures::get(name).ok_or_else(|| Failure::Input(format!("no fixture named `{name}`")))?;
            print!("{}", serialize_ffa(&f.ffa));
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Decide {
            target,
            method,
            fail_if_not,
        } => decide(&target, method, fail_if_not),
        Command::Words { target, max_len } => {
            let ffa = load(&target.file)?;
            for w in enumerate_directing_words(&ffa, target.kind, max_len) {
                println!("{}", ffa.render_word(&w));
            }
            Ok(())
        }
        Command::Shortest { target, fail_if_not } => {
            let ffa = load(&target.file)?;
            let word = shortest_directing_word_with_cap(&ffa, target.kind, state_cap()?)?;
            println!("{}", word.as_ref().map_or("none".to_string(), |w| ffa.render_word(w)));
            negative_if(fail_if_not, word.is_some())
        }
        Command::Recognizer {
            target,
            minimize: reduce,
            emit_dot,
        } => {
            let ffa = load(&target.file)?;
            let mut r = build_recognizer_with_cap(&ffa, target.kind, state_cap()?)?;
            if reduce {
                r = minimize(&r);
            }
            if emit_dot {
                print!("{}", dfr_to_dot(&r));
            } else {
                print_table(&r);
            }
            Ok(())
        }
        Command::Classify { files, format } => classify_files(&files, format),
        Command::CheckLaws {
            file,
            format,
            fail_if_not,
        } => check_laws(&file, format, fail_if_not),
        Command::Product { left, right } => {
            let product = direct_product(&load(&left)?, &load(&right)?)?;
            print!("{}", serialize_ffa(&product));
            Ok(())
        }
        Command::Restrict { file, states } => restrict(&file, &states),
        Command::Image { file, map } => image(&file, &map),
        Command::Gen(args) => gen(&args),
        Command::Fixtures { name } => show_fixtures(name.as_deref()),
    }
}

fn main() -> ExitCode {
    // clap exits with status 2 on usage errors.
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Negative) => ExitCode::from(1),
        Err(Failure::Reported) => ExitCode::from(2),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
