mod commands;
mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use borel_core::parse::{parse_algebra, parse_poset, AlgebraFile};
use borel_core::pipeline::DEFAULT_TRUNCATION;
use borel_core::qh::DEFAULT_ENUMERATION_CAP;
use borel_core::Error;
use clap::{Parser, Subcommand};
use sha2::{Digest, Sha256};

use commands::Modules;
use report::{Format, Report};

#[derive(Parser)]
#[command(name = "borel", version, about = "Ext algebras, A-infinity structures and exact Borel subalgebras")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Ext dimensions between simples, standard modules or modules from a file.
    Ext {
        file: PathBuf,
        /// `simples`, `standards`, or a path to a module file.
        #[arg(long, default_value = "simples")]
        modules: String,
        #[arg(long, default_value_t = 8)]
        max_degree: usize,
    },
    /// Minimal A-infinity model with its Stasheff residual.
    Ainf {
        file: PathBuf,
        #[arg(long, default_value = "simples")]
        modules: String,
        #[arg(long, default_value_t = DEFAULT_TRUNCATION)]
        max_degree: usize,
        #[arg(long, default_value_t = 4)]
        max_arity: usize,
    },
    /// Rebuild the algebra from the A-infinity Ext algebra of its simples.
    Reconstruct {
        file: PathBuf,
        /// Defaults to the nilpotency index plus one, capped at 8.
        #[arg(long)]
        max_arity: Option<usize>,
    },
    /// Standard modules, essential order and multiplicities.
    Qh { file: PathBuf },
    /// Borel quiver, coring and right algebra.
    Borel { file: PathBuf },
    /// Multiplicities on a poset file.
    CondePoset { file: PathBuf },
    /// Quasi-hereditary structures up to equal standard modules.
    Enumerate {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        cap: usize,
    },
}

struct Failure {
    code: u8,
    msg: String,
}

impl Failure {
    fn from_lib(file: &Path, e: Error) -> Self {
        match e {
            Error::Parse { line, msg } => Failure { code: 2, msg: format!("{}:{line}: {msg}", file.display()) },
            e => Failure { code: 1, msg: format!("{}: {e}", file.display()) },
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure { code: 2, msg: format!("{}: {e}", path.display()) })
}

fn digest(texts: &[&str]) -> String {
    let mut h = Sha256::new();
    for t in texts {
        h.update(t.as_bytes());
    }
    hex::encode(h.finalize())
}

fn load(path: &Path) -> Result<(String, AlgebraFile), Failure> {
    let text = read(path)?;
    let f = parse_algebra(&text).map_err(|e| Failure::from_lib(path, e))?;
    Ok((text, f))
}

/// Reads the module file, if any; errors raised later belong to it.
fn modules(file: &Path, arg: &str) -> Result<(Modules, Option<String>, PathBuf), Failure> {
    match Modules::parse(arg) {
        Modules::File(p) => {
            let p = PathBuf::from(p);
            let text = read(&p)?;
            Ok((Modules::File(arg.to_string()), Some(text), p))
        }
        m => Ok((m, None, file.to_path_buf())),
    }
}

fn run(cli: Cli) -> Result<String, Failure> {
    let report = match cli.command {
        Command::Ext { file, modules: m, max_degree } => {
            let (text, f) = load(&file)?;
            let (which, mtext, blame) = modules(&file, &m)?;
            let mut r = Report::new("ext", digest(&[&text, mtext.as_deref().unwrap_or("")]));
            r.param("modules", &m);
            r.param("max-degree", max_degree);
            commands::ext(&mut r, &f, &which, mtext.as_deref(), max_degree).map_err(|e| Failure::from_lib(&blame, e))?;
            r
        }
        Command::Ainf { file, modules: m, max_degree, max_arity } => {
            let (text, f) = load(&file)?;
            let (which, mtext, blame) = modules(&file, &m)?;
            let mut r = Report::new("ainf", digest(&[&text, mtext.as_deref().unwrap_or("")]));
            r.param("modules", &m);
            r.param("max-degree", max_degree);
            r.param("max-arity", max_arity);
            commands::ainf(&mut r, &f, &which, mtext.as_deref(), max_degree, max_arity)
                .map_err(|e| Failure::from_lib(&blame, e))?;
            r
        }
        Command::Reconstruct { file, max_arity } => {
            let (text, f) = load(&file)?;
            let mut r = Report::new("reconstruct", digest(&[&text]));
            commands::reconstruct(&mut r, &f, max_arity).map_err(|e| Failure::from_lib(&file, e))?;
            r
        }
        Command::Qh { file } => {
            let (text, f) = load(&file)?;
            let mut r = Report::new("qh", digest(&[&text]));
            commands::qh(&mut r, &f).map_err(|e| Failure::from_lib(&file, e))?;
            r
        }
        Command::Borel { file } => {
            let (text, f) = load(&file)?;
            let mut r = Report::new("borel", digest(&[&text]));
            commands::borel(&mut r, &f).map_err(|e| Failure::from_lib(&file, e))?;
            r
        }
        Command::CondePoset { file } => {
            let text = read(&file)?;
            let p = parse_poset(&text).map_err(|e| Failure::from_lib(&file, e))?;
            let mut r = Report::new("conde-poset", digest(&[&text]));
            commands::conde_poset_cmd(&mut r, &p);
            r
        }
        Command::Enumerate { file, cap } => {
            let (text, f) = load(&file)?;
            let mut r = Report::new("enumerate", digest(&[&text]));
            r.param("cap", cap);
            commands::enumerate(&mut r, &f, cap).map_err(|e| Failure::from_lib(&file, e))?;
            r
        }
    };
    Ok(report.render(cli.format))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
