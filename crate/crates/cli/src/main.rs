use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use qthopf::examples::BUNDLES;
use qthopf::format::{parse, parse_over, serialize, HopfFile};
use qthopf::pipeline::{brauer_run, comodule_algebra, galois_checks, resolve_z, standard_zs, transmute_checks, transmuted_file, verify_checks, Loaded};
use qthopf::suite::{fixture_file, generate_fixture, run_suite, Fixtures};
use qthopf::{Field, Report};

#[derive(Parser)]
#[command(name = "qthopf", version, about = "Exact checks for quasitriangular Hopf algebras, braided Galois objects and Azumaya algebras")]
struct Cli {
    /// `rational` or `gf <p>`; a rational file is reduced mod p.
    #[arg(long, global = true, value_parser = parse_field)]
    field: Option<Field>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of stdout (for `transmute`, the
    /// transmuted file).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Machine,
}

#[derive(Subcommand)]
enum Command {
    /// Hopf axioms, R-matrix axioms, Yang-Baxter and every named object.
    Verify { path: PathBuf },
    /// Builds the transmuted braided group and checks it.
    Transmute { path: PathBuf },
    /// Galois checks for a named comodule algebra (`rh` is the transmuted
    /// algebra itself).
    CheckGalois { path: PathBuf, object: String },
    /// Azumaya, H*-Galois, pi(A) and the invariants functor for each z.
    Brauer {
        path: PathBuf,
        algebra: String,
        /// k, rh, rh_rh, lambda1_regular, lambda1:<module>, lambda2:<module>
        /// or a module/yd object; `rh` is always added.
        z: Vec<String>,
    },
    /// The acceptance matrix over the bundled fixtures.
    Suite {
        /// Read `<bundle>.hopf` files from this directory instead.
        #[arg(long)]
        fixtures: Option<PathBuf>,
        /// List every underlying check, not one line per criterion.
        #[arg(long)]
        detailed: bool,
    },
    /// Writes the bundled fixture files with freshly computed expectations.
    Export {
        /// Bundle names; all of them when empty.
        names: Vec<String>,
        #[arg(long, default_value = ".")]
        dir: PathBuf,
    },
}

fn parse_field(s: &str) -> Result<Field, String> {
    let words: Vec<&str> = s.split_whitespace().collect();
    match words.as_slice() {
        ["rational"] => Ok(Field::Rational),
        ["gf", p] => parse_prime(p),
        [w] if w.starts_with("gf") => parse_prime(&w[2..]),
        _ => Err(format!("expected `rational` or `gf <p>`, got {s:?}")),
    }
}

fn parse_prime(p: &str) -> Result<Field, String> {
    let p: u64 = p.parse().map_err(|_| format!("bad prime {p:?}"))?;
    Field::prime(p).map_err(|e| e.to_string())
}

fn load(path: &Path, field: Option<Field>) -> anyhow::Result<HopfFile> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let file = parse(&text).with_context(|| format!("{}", path.display()))?;
    match field {
        Some(f) if f != file.field() => {
            if file.field() != Field::Rational {
                bail!("{} is written over {}, cannot read it over {f}", path.display(), file.field());
            }
            Ok(parse_over(&text, f).with_context(|| format!("{} over {f}", path.display()))?)
        }
        _ => Ok(file),
    }
}

fn emit(cli: &Cli, report: &Report, to_file: bool) -> anyhow::Result<()> {
    let body = match cli.format {
        Format::Text => report.to_text(),
        Format::Machine => report.to_json() + "\n",
    };
    match (&cli.out, to_file) {
        (Some(p), true) => std::fs::write(p, body).with_context(|| format!("writing {}", p.display()))?,
        _ => print!("{body}"),
    }
    Ok(())
}

fn run(cli: &Cli) -> anyhow::Result<bool> {
    let field_name = |f: &HopfFile| f.field().to_string();
    let report = match &cli.command {
        Command::Verify { path } => {
            let file = load(path, cli.field)?;
            let mut r = Report::new("verify", field_name(&file));
            r.extend(verify_checks(&file)?);
            r
        }
        Command::Transmute { path } => {
            let l = Loaded::new(load(path, cli.field)?)?;
            let mut r = Report::new("transmute", l.h().field().to_string());
            r.extend(transmute_checks(&l));
            let text = serialize(&transmuted_file(&l));
            match &cli.out {
                Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display()))?,
                None => eprint!("{text}"),
            }
            emit(cli, &r, false)?;
            return Ok(r.ok());
        }
        Command::CheckGalois { path, object } => {
            let l = Loaded::new(load(path, cli.field)?)?;
            let a = comodule_algebra(&l, object)?;
            let mut r = Report::new("check-galois", l.h().field().to_string());
            r.extend(galois_checks(&l, &a)?);
            r
        }
        Command::Brauer { path, algebra, z } => {
            let l = Loaded::new(load(path, cli.field)?)?;
            let a = l.algebra(algebra)?;
            let zs = if z.is_empty() {
                standard_zs(&l)?
            } else {
                let mut names = z.clone();
                if !names.iter().any(|n| n == "rh") {
                    names.push("rh".into());
                }
                names.iter().map(|n| resolve_z(&l, n)).collect::<qthopf::Result<Vec<_>>>()?
            };
            let mut r = Report::new("brauer", l.h().field().to_string());
            r.extend(brauer_run(&l, &a, &zs)?.all_checks());
            r
        }
        Command::Suite { fixtures, detailed } => {
            let fx = match fixtures {
                Some(dir) => Fixtures::from_dir(dir),
                None => Fixtures::bundled(),
            };
            let run = run_suite(cli.field.unwrap_or(Field::Rational), &fx);
            if *detailed {
                run.detailed_report()
            } else {
                run.report()
            }
        }
        Command::Export { names, dir } => {
            let names: Vec<&str> = if names.is_empty() { BUNDLES.to_vec() } else { names.iter().map(String::as_str).collect() };
            for n in names {
                let path = dir.join(fixture_file(n));
                std::fs::write(&path, generate_fixture(n)?).with_context(|| format!("writing {}", path.display()))?;
                eprintln!("wrote {}", path.display());
            }
            return Ok(true);
        }
    };
    emit(cli, &report, true)?;
    Ok(report.ok())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let outcome = run(&cli);
    eprintln!("elapsed {:.2}s", start.elapsed().as_secs_f64());
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
