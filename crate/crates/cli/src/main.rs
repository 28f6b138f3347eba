//! `superu`: restricted enveloping algebras of Lie superalgebras from the command line.
//!
//! Exit codes: 0 success, 1 invalid input, 2 budget exceeded, 3 invariant violated.

mod commands;
mod document;
mod error;
mod modspec;
mod table;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use superu_core::cohomology::{DEFAULT_BAR_BUDGET, DEFAULT_DEPTH};

use commands::{Command, Options, Oracle};
use document::AlgebraDocument;
use error::{CliError, EXIT_INVALID_INPUT, EXIT_INVARIANT};

#[derive(Parser, Debug)]
#[command(name = "superu", version, about = "Cohomology and support varieties of restricted Lie superalgebras")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,

    /// Resolution depth N (projectives P_0..P_N)
    #[arg(long, global = true, default_value_t = DEFAULT_DEPTH)]
    depth: usize,

    /// Highest cohomological degree for ext and e1page
    #[arg(long, global = true, default_value_t = 3)]
    max_degree: usize,

    /// Which Ext computation to run
    #[arg(long, global = true, value_enum, default_value_t = Oracle::Both)]
    oracle: Oracle,

    /// Work over F_{p^e}
    #[arg(long, global = true, default_value_t = 1, value_name = "E")]
    field_ext: u32,

    /// Largest bar-complex cochain space allowed
    #[arg(long, global = true, default_value_t = DEFAULT_BAR_BUDGET)]
    bar_budget: usize,

    /// Module to work with, e.g. trivial, simple:2, tensor:dual:simple:1:trivial
    #[arg(long, global = true, value_name = "SPEC")]
    module: Option<String>,

    /// Also write {"manifest", "result"} as JSON to this path
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct Input {
    /// Algebra definition (JSON)
    input: PathBuf,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Verify the Lie superalgebra and restriction axioms
    Check(Input),
    /// Build u(g): dimension and Hopf structure checks
    Build(Input),
    /// Filtrations of u(g), graded dimensions and the PBW series
    Gr(Input),
    /// Simple modules and their projective covers
    Simples(Input),
    /// Minimal projective resolution of --module
    Resolve(Input),
    /// dim Ext^n(M, k) from the resolution and the bar complex
    Ext(Input),
    /// Complexity of --module from its minimal resolution
    Complexity(Input),
    /// Carlson modules L_ζ for classes in H^degree(A, k)
    Carlson {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 2)]
        degree: usize,
        /// Coordinates of ζ in the printed basis of H^degree; all basis classes if omitted
        #[arg(long, allow_hyphen_values = true)]
        coords: Option<String>,
    },
    /// Tensor product of Carlson modules for the given classes
    Realize {
        #[command(flatten)]
        input: Input,
        /// DEGREE:c1,c2,.. (repeatable)
        #[arg(long = "class", value_name = "CLASS", allow_hyphen_values = true)]
        classes: Vec<String>,
    },
    /// Support-variety property suite over the standard module battery
    Properties(Input),
    /// E_1 page totals against dim Ext(k, M)
    E1page(Input),
    /// Print a built-in algebra as a JSON definition, e.g. `catalog 'gl(1|1)' --p 3`
    Catalog {
        name: String,
        #[arg(long)]
        p: u32,
    },
}

impl Cmd {
    fn split(self) -> (Command, PathBuf) {
        match self {
            Cmd::Check(i) => (Command::Check, i.input),
            Cmd::Build(i) => (Command::Build, i.input),
            Cmd::Gr(i) => (Command::Gr, i.input),
            Cmd::Simples(i) => (Command::Simples, i.input),
            Cmd::Resolve(i) => (Command::Resolve, i.input),
            Cmd::Ext(i) => (Command::Ext, i.input),
            Cmd::Complexity(i) => (Command::Complexity, i.input),
            Cmd::Carlson { input, degree, coords } => (Command::Carlson { degree, coords }, input.input),
            Cmd::Realize { input, classes } => (Command::Realize { classes }, input.input),
            Cmd::Properties(i) => (Command::Properties, i.input),
            Cmd::E1page(i) => (Command::E1page, i.input),
            Cmd::Catalog { .. } => unreachable!("handled before dispatch"),
        }
    }
}

fn catalog(name: &str, p: u32) -> Result<AlgebraDocument, CliError> {
    let spec = superu_core::liesuper::catalog(name, p)?;
    Ok(AlgebraDocument::from_spec(&spec))
}

fn error_json(e: &CliError) -> Value {
    let kind = match e {
        CliError::Input(_) => "invalid-input",
        CliError::Budget(_) => "budget-exceeded",
        CliError::Invariant { .. } => "invariant-violated",
    };
    json!({ "kind": kind, "exit_code": e.exit_code(), "message": e.to_string() })
}

fn write_json(path: &Path, doc: &Value) -> Result<(), CliError> {
    let mut text = serde_json::to_string_pretty(doc).expect("values serialize");
    text.push('\n');
    std::fs::write(path, text).map_err(|e| CliError::input(format!("cannot write {}: {e}", path.display())))
}

fn execute(cli: Cli) -> i32 {
    let opts = Options {
        depth: cli.depth,
        max_degree: cli.max_degree,
        oracle: cli.oracle,
        field_ext: cli.field_ext,
        bar_budget: cli.bar_budget,
        module: cli.module,
    };
    let json_path = cli.json;
    if let Cmd::Catalog { name, p } = &cli.command {
        return match catalog(name, *p) {
            Ok(doc) => {
                print!("{}", doc.to_json_string());
                0
            }
            Err(e) => {
                eprintln!("superu: {e}");
                e.exit_code()
            }
        };
    }
    let (command, input) = cli.command.split();

    let bytes = std::fs::read(&input);
    let sha = bytes.as_ref().ok().map(|b| commands::sha256_hex(b));
    let manifest = commands::manifest(&command, sha.as_deref(), &opts);

    let outcome = bytes
        .map_err(|e| CliError::input(format!("cannot read {}: {e}", input.display())))
        .and_then(|b| String::from_utf8(b).map_err(|_| CliError::input(format!("{} is not UTF-8", input.display()))))
        .and_then(|text| commands::load_spec(&text))
        .and_then(|spec| commands::run(&command, &spec, &opts));

    let (doc, failure) = match outcome {
        Ok(report) => {
            print!("{}", report.table);
            let mut doc = json!({ "manifest": manifest, "result": report.result });
            if let Some(f) = &report.failure {
                doc["error"] = error_json(f);
            }
            (doc, report.failure)
        }
        Err(e) => (json!({ "manifest": manifest, "error": error_json(&e) }), Some(e)),
    };
    if let Some(path) = &json_path {
        if let Err(e) = write_json(path, &doc) {
            eprintln!("superu: {e}");
            return e.exit_code();
        }
    }
    match failure {
        None => 0,
        Some(e) => {
            eprintln!("superu: {e}");
            e.exit_code()
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID_INPUT } else { 0 };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    std::panic::set_hook(Box::new(|info| {
        let msg = info
            .payload()
            .downcast_ref::<&str>()
            .map(|s| s.to_string())
            .or_else(|| info.payload().downcast_ref::<String>().cloned())
            .unwrap_or_else(|| "unknown panic".into());
        eprintln!("superu: invariant violated (engine assertion): {msg}");
    }));
    let code = std::panic::catch_unwind(|| execute(cli)).unwrap_or(EXIT_INVARIANT);
    ExitCode::from(code as u8)
}
