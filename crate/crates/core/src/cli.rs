//! The `gcm` command-line driver.
//!
//! Exit codes: 0 on success, 1 on a domain error (`{"error": code}` on
//! stdout, the message on stderr), 2 on usage or input parse errors.

use crate::complex::{
    is_clique_complex, is_matroid, is_shellable, is_shifted, is_tree_complex, SearchLimits, SimplicialComplex,
};
use crate::deform::{deform, DeformMethod};
use crate::error::Error;
use crate::ideal::{stanley_reisner, MonomialIdeal};
use crate::json::{certificate_json, report_json, scarf_json, ComplexFile, IdealFile};
use crate::oracle::{brute_irreducible_decomposition, has_embedded_primes, DecompositionCertificate};
use crate::scarf::{cm_test, extended_scarf_complex, scarf_complex};
use clap::{Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde_json::{json, Value};
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

#[derive(Debug, Parser)]
#[command(name = "gcm", version, about = "Generic Cohen-Macaulay deformations and Scarf complexes")]
struct Cli {
    /// Largest facet count explored by shelling searches.
    #[arg(long, global = true, default_value_t = SearchLimits::default().max_facets)]
    max_facets: usize,
    /// Largest generator count accepted by Scarf computations.
    #[arg(long, global = true, default_value_t = SearchLimits::default().max_generators)]
    max_generators: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Combinatorial properties of a complex.
    Classify { complex: PathBuf },
    /// Deform the Stanley-Reisner ideal of a complex.
    Deform {
        complex: PathBuf,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
    },
    /// Scarf complex of an ideal.
    Scarf {
        ideal: PathBuf,
        /// Adjoin the artinian powers x_i^D.
        #[arg(long)]
        extended: bool,
    },
    /// Irreducible decomposition of an ideal.
    Decompose {
        ideal: PathBuf,
        /// Use the splitting oracle instead of the Scarf route.
        #[arg(long)]
        oracle: bool,
    },
    /// Check an ideal against the Stanley-Reisner ideal of a complex.
    Verify { complex: PathBuf, ideal: PathBuf },
    /// f-vector of a complex.
    Fvector { complex: PathBuf },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Auto,
    Matroid,
    Shifted,
    Tree,
}

impl MethodArg {
    fn method(self) -> Option<DeformMethod> {
        match self {
            MethodArg::Auto => None,
            MethodArg::Matroid => Some(DeformMethod::Matroid),
            MethodArg::Shifted => Some(DeformMethod::Shifted),
            MethodArg::Tree => Some(DeformMethod::Tree),
        }
    }
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn read_complex(path: &Path) -> Result<SimplicialComplex, Failure> {
    Ok(read_json::<ComplexFile>(path)?.build()?)
}

fn read_ideal(path: &Path) -> Result<MonomialIdeal, Failure> {
    Ok(read_json::<IdealFile>(path)?.build()?)
}

/// `null` when a search exceeds its bound.
fn bounded(result: crate::Result<bool>) -> Result<Value, Failure> {
    match result {
        Ok(b) => Ok(json!(b)),
        Err(Error::TooLarge { .. }) => Ok(Value::Null),
        Err(e) => Err(e.into()),
    }
}

fn classify(k: &SimplicialComplex, limits: &SearchLimits) -> Result<Value, Failure> {
    let shellable = if k.is_pure() { bounded(is_shellable(k, limits).map(|o| o.is_some()))? } else { json!(false) };
    Ok(json!({
        "dim": k.dimension(),
        "pure": k.is_pure(),
        "shellable": shellable,
        "matroid": is_matroid(k),
        "shifted": is_shifted(k),
        "clique_complex": is_clique_complex(k),
        "chordal_skeleton": k.one_skeleton().is_chordal(),
        "tree_complex": bounded(is_tree_complex(k, limits).map(|o| o.is_some()))?,
        "f_vector": k.f_vector(),
    }))
}

fn verify(k: &SimplicialComplex, m: &MonomialIdeal, limits: &SearchLimits) -> Result<Value, Failure> {
    if k.n() != m.n() {
        return Err(Error::DimensionMismatch { left: k.n(), right: m.n() }.into());
    }
    let base = stanley_reisner(k);
    let is_generic = m.is_generic();
    let mut cm_criterion = false;
    let mut oracle_agrees = false;
    if !m.is_zero() {
        let brute = brute_irreducible_decomposition(m)?;
        oracle_agrees = brute.verified_equal;
        if is_generic {
            let verdict = cm_test(m, limits)?;
            cm_criterion = verdict.is_cm;
            let scarf = DecompositionCertificate::from_scarf(m, limits)?;
            oracle_agrees &= scarf.components == brute.components && verdict.is_cm != has_embedded_primes(m)?;
        }
    }
    Ok(json!({
        "is_deformation": m.is_deformation_of(&base)?,
        "is_generic": is_generic,
        "radical_matches": m.radical() == base,
        "cm_criterion": cm_criterion,
        "oracle_agrees": oracle_agrees,
    }))
}

fn fvector(k: &SimplicialComplex, limits: &SearchLimits) -> Result<Value, Failure> {
    let f = k.f_vector();
    let mut out = json!({ "f": f });
    if let Ok(Some(_)) = is_tree_complex(k, limits) {
        let formula = SimplicialComplex::tree_f_vector_formula(k.n(), k.rank());
        out["formula_matches"] = json!(formula == f);
        out["formula"] = json!(formula);
    }
    Ok(out)
}

fn execute(cli: &Cli) -> Result<Value, Failure> {
    let limits = SearchLimits { max_facets: cli.max_facets, max_generators: cli.max_generators };
    match &cli.command {
        Command::Classify { complex } => classify(&read_complex(complex)?, &limits),
        Command::Deform { complex, method } => {
            let report = deform(&read_complex(complex)?, method.method(), &limits)?;
            Ok(report_json(&report))
        }
        Command::Scarf { ideal, extended } => {
            let m = read_ideal(ideal)?;
            let s = if *extended { extended_scarf_complex(&m, &limits)? } else { scarf_complex(&m, &limits)? };
            Ok(scarf_json(&s))
        }
        Command::Decompose { ideal, oracle } => {
            let m = read_ideal(ideal)?;
            let cert = if *oracle {
                brute_irreducible_decomposition(&m)?
            } else {
                DecompositionCertificate::from_scarf(&m, &limits)?
            };
            Ok(certificate_json(&cert))
        }
        Command::Verify { complex, ideal } => verify(&read_complex(complex)?, &read_ideal(ideal)?, &limits),
        Command::Fvector { complex } => fvector(&read_complex(complex)?, &limits),
    }
}

/// Runs the CLI on `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                return 2;
            }
            let _ = write!(out, "{rendered}");
            return 0;
        }
    };
    match execute(&cli) {
        Ok(value) => {
            let _ = writeln!(out, "{value}");
            0
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Domain(e)) => {
            let _ = writeln!(out, "{}", json!({ "error": e.code() }));
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}
