//! `nlom`: validate, parse, decompose and realise NLML documents.
//!
//! Exit codes: 0 success, 1 a document failed (schema, model or realisation
//! error), 2 an input or output could not be read or written.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write as _};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use nlom_core::batch::map_ordered;
use nlom_core::clause::implied_lines;
use nlom_core::realize::realize_lines;
use nlom_core::{
    decompose, parse_markup, parse_sentence_with, ModelDump, Schema, SentenceAccess,
};

const EXIT_FAILURE: u8 = 1;
const EXIT_IO: u8 = 2;

#[derive(Parser)]
#[command(name = "nlom", version, about = "Read NLML grammar-markup documents")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check documents against the schema and list every issue.
    Validate(Inputs),
    /// Build the sentence model; print its text and description.
    Parse {
        /// Write the model as JSON here. With several inputs this is a
        /// directory receiving `<name>.json` per document.
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
        #[command(flatten)]
        inputs: Inputs,
    },
    /// Print `text<TAB>kind<TAB>relation` per sentence of the decomposition.
    Decompose(Inputs),
    /// Print `kind<TAB>clause text<TAB>implied text` per embedded clause.
    Implied(Inputs),
    /// Print every basic sentence, grid by grid in row-major order.
    Realize {
        /// End statements and orders with a period.
        #[arg(long)]
        punctuate: bool,
        #[command(flatten)]
        inputs: Inputs,
    },
}

#[derive(clap::Args)]
struct Inputs {
    /// NLML files, or directories whose `*.nlml` files are read in name order.
    #[arg(required = true, value_name = "FILES")]
    files: Vec<PathBuf>,
}

/// What one document produced.
#[derive(Default)]
struct Outcome {
    stdout: String,
    stderr: String,
    code: u8,
}

impl Outcome {
    fn fail(code: u8, path: &Path, message: impl std::fmt::Display) -> Self {
        Outcome {
            stderr: format!("{}: {message}\n", path.display()),
            code,
            ..Outcome::default()
        }
    }
}

fn expand(inputs: &[PathBuf]) -> io::Result<Vec<PathBuf>> {
    let mut files = Vec::new();
    for path in inputs {
        if path.is_dir() {
            let mut found: Vec<PathBuf> = fs::read_dir(path)?
                .map(|e| e.map(|e| e.path()))
                .collect::<io::Result<_>>()?;
            found.retain(|p| p.is_file() && p.extension().is_some_and(|e| e == "nlml"));
            found.sort();
            files.extend(found);
        } else {
            files.push(path.clone());
        }
    }
    Ok(files)
}

fn load_schema() -> Result<Schema, String> {
    match std::env::var_os("NLOM_SCHEMA") {
        None => Ok(Schema::builtin().clone()),
        Some(path) => {
            let path = PathBuf::from(path);
            let doc = fs::read_to_string(&path)
                .map_err(|e| format!("{}: cannot read schema: {e}", path.display()))?;
            Schema::from_markdown(&doc).map_err(|e| format!("{}: {e}", path.display()))
        }
    }
}

fn validate(path: &Path, text: &str, schema: &Schema) -> Outcome {
    let root = match parse_markup(text) {
        Ok(root) => root,
        Err(e) => return Outcome::fail(EXIT_FAILURE, path, format_args!("{}: {e}", e.code())),
    };
    let report = schema.validate(&root);
    let mut out = Outcome::default();
    if report.ok {
        writeln!(out.stdout, "{}: ok", path.display()).unwrap();
    } else {
        out.code = EXIT_FAILURE;
        writeln!(out.stdout, "{}: {} issue(s)", path.display(), report.issues.len()).unwrap();
        for issue in &report.issues {
            writeln!(out.stdout, "  {}\t{}\t{}", issue.code, issue.path, issue.message).unwrap();
        }
    }
    out
}

/// Writes `contents` to `target` through a temporary sibling file so that a
/// failed run never leaves a truncated dump behind.
fn write_atomically(target: &Path, contents: &str) -> io::Result<()> {
    let dir = target.parent().filter(|d| !d.as_os_str().is_empty()).unwrap_or(Path::new("."));
    let name = target.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default();
    let tmp = dir.join(format!(".{name}.tmp"));
    fs::write(&tmp, contents)?;
    fs::rename(&tmp, target).inspect_err(|_| {
        let _ = fs::remove_file(&tmp);
    })
}

fn dump_target(json: &Path, path: &Path, many: bool) -> PathBuf {
    if many {
        let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
        json.join(format!("{stem}.json"))
    } else {
        json.to_path_buf()
    }
}

fn run(command: &Command, path: &Path, schema: &Schema, many: bool) -> Outcome {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return Outcome::fail(EXIT_IO, path, e),
    };
    if let Command::Validate(_) = command {
        return validate(path, &text, schema);
    }
    let sentence = match parse_sentence_with(&text, None, schema) {
        Ok(s) => s,
        Err(e) => return Outcome::fail(EXIT_FAILURE, path, format_args!("{}: {e}", e.code())),
    };
    let mut out = Outcome::default();
    match command {
        Command::Validate(_) => unreachable!("handled above"),
        Command::Parse { json, .. } => {
            if let Some(json) = json {
                let dump = ModelDump::new(sentence.clone(), Some(path.display().to_string()));
                let target = dump_target(json, path, many);
                if let Err(e) = write_atomically(&target, &dump.to_json()) {
                    return Outcome::fail(EXIT_IO, &target, e);
                }
            }
            writeln!(out.stdout, "{}", sentence.text()).unwrap();
            writeln!(out.stdout, "{}", sentence.description()).unwrap();
        }
        Command::Decompose(_) => {
            let result = decompose(&sentence);
            for s in &result.sentences {
                writeln!(out.stdout, "{}\t{}\t{}", s.text(), s.kind(), result.relation).unwrap();
            }
        }
        Command::Implied(_) => {
            for line in implied_lines(&sentence) {
                writeln!(out.stdout, "{}\t{}\t{}", line.kind, line.text, line.implied).unwrap();
            }
        }
        Command::Realize { punctuate, .. } => match realize_lines(&sentence, *punctuate) {
            Ok(lines) => {
                for line in lines {
                    writeln!(out.stdout, "{line}").unwrap();
                }
            }
            Err(e) => return Outcome::fail(EXIT_FAILURE, path, format_args!("{}: {e}", e.code())),
        },
    }
    out
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let inputs = match &cli.command {
        Command::Validate(i) | Command::Decompose(i) | Command::Implied(i) => i,
        Command::Parse { inputs, .. } | Command::Realize { inputs, .. } => inputs,
    };
    let files = match expand(&inputs.files) {
        Ok(f) => f,
        Err(e) => {
            eprintln!("nlom: {e}");
            return ExitCode::from(EXIT_IO);
        }
    };
    let schema = match load_schema() {
        Ok(s) => s,
        Err(e) => {
            eprintln!("nlom: {e}");
            return ExitCode::from(EXIT_IO);
        }
    };
    let many = files.len() > 1;
    if let Command::Parse { json: Some(dir), .. } = &cli.command {
        if many {
            if let Err(e) = fs::create_dir_all(dir) {
                eprintln!("{}: {e}", dir.display());
                return ExitCode::from(EXIT_IO);
            }
        }
    }

    let outcomes = map_ordered(&files, |path| run(&cli.command, path, &schema, many));

    let stdout = io::stdout();
    let mut stdout = stdout.lock();
    let mut code = 0;
    for (path, outcome) in files.iter().zip(&outcomes) {
        if many && !outcome.stdout.is_empty() && !matches!(cli.command, Command::Validate(_)) {
            let _ = writeln!(stdout, "# {}", path.display());
        }
        let _ = stdout.write_all(outcome.stdout.as_bytes());
        eprint!("{}", outcome.stderr);
        code = code.max(outcome.code);
    }
    ExitCode::from(code)
}
