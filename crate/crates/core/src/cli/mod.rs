//! Command-line front end.
//!
//! Exit codes: 0 success, 1 a check failed, 2 usage or parse error,
//! 3 inconclusive.

pub mod json;
mod parse;
pub mod report;

pub use parse::parse_poly;

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand};

use crate::criteria::{dedekind_test, monogenicity_check, Conclusion, Verdict};
use crate::cyclotomic::{build_t, cyclotomic_poly, CycloParams};
use crate::error::{Error, Result};
use crate::harness::{self, GridSpec};
use crate::modpoly::{factor_mod_seeded, reduce_mod};
use crate::resdisc::{discriminant, resultant};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "cyclomono",
    version,
    about = "Irreducibility and monogenicity of cyclotomic compositions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the n-th cyclotomic polynomial.
    Cyclotomic { n: u64 },
    /// Print T(x) = Phi_{p^m}(Phi_{2^n}(x)).
    #[command(name = "compose-T")]
    ComposeT {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
    },
    /// Discriminant of a polynomial.
    Disc {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Resultant of two polynomials.
    Resultant {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Factor a polynomial modulo a prime.
    #[command(name = "factor-modp")]
    FactorModp {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        p: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Dedekind's index test at one prime, as JSON.
    Dedekind {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        p: u64,
    },
    /// Full monogenicity certificate.
    Monogenic {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        /// Also write the certificate as JSON to this file.
        #[arg(long, value_name = "FILE")]
        json: Option<std::path::PathBuf>,
    },
    /// Check every T(x) on a parameter grid.
    #[command(name = "verify-theorem")]
    VerifyTheorem {
        #[arg(long, value_delimiter = ',', num_args = 1.., default_values_t = harness::DEFAULT_P_SET)]
        p_set: Vec<u64>,
        #[arg(long, default_value_t = harness::DEFAULT_M_MAX)]
        m_max: u32,
        #[arg(long, default_value_t = harness::DEFAULT_N_MAX)]
        n_max: u32,
        #[arg(long, default_value_t = harness::DEFAULT_DEG_CAP)]
        deg_cap: u64,
        #[arg(long, default_value_t = harness::DEFAULT_ORACLE_CAP)]
        oracle_cap: u64,
        /// Worker threads; 0 picks automatically.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Cyclotomic identity sweeps.
    Identities {
        #[arg(long, default_value_t = 50)]
        n_max: u64,
        #[arg(long, value_delimiter = ',', num_args = 1.., default_values_t = harness::DEFAULT_P_SET)]
        q_set: Vec<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Reducible compositions and the quartic pair.
    #[command(name = "final-remarks")]
    FinalRemarks,
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32> {
    let mut emit = |text: &str| {
        out.write_all(text.as_bytes())
            .map_err(|e| Error::InvalidArgument(format!("write failed: {e}")))
    };
    let code = match command {
        Command::Cyclotomic { n } => {
            if n == 0 {
                return Err(Error::InvalidArgument("n must be positive".into()));
            }
            emit(&format!("{}\n", cyclotomic_poly(n)))?;
            EXIT_OK
        }
        Command::ComposeT { p, m, n } => {
            let params = CycloParams::new(p, m, n)?;
            emit(&format!("{}\n", build_t(params)))?;
            EXIT_OK
        }
        Command::Disc { poly } => {
            emit(&format!("{}\n", discriminant(&parse_poly(&poly)?)?))?;
            EXIT_OK
        }
        Command::Resultant { f, g } => {
            emit(&format!(
                "{}\n",
                resultant(&parse_poly(&f)?, &parse_poly(&g)?)?
            ))?;
            EXIT_OK
        }
        Command::FactorModp { poly, p, seed } => {
            let f = reduce_mod(&parse_poly(&poly)?, p)?;
            let fac = factor_mod_seeded(&f, seed)?;
            emit(&report::render_factorization(&fac, p))?;
            EXIT_OK
        }
        Command::Dedekind { poly, p } => {
            let outcome = dedekind_test(&parse_poly(&poly)?, p)?;
            let j = json::DedekindJson::from(&outcome);
            emit(&format!(
                "{}\n",
                serde_json::to_string_pretty(&j).expect("serializable")
            ))?;
            match outcome.verdict {
                Verdict::Pass => EXIT_OK,
                Verdict::Fail => EXIT_CHECK_FAILED,
            }
        }
        Command::Monogenic { poly, json: path } => {
            let cert = monogenicity_check(&parse_poly(&poly)?)?;
            if let Some(path) = path {
                std::fs::write(&path, json::certificate_to_json(&cert) + "\n")
                    .map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))?;
            }
            emit(&report::render_certificate(&cert))?;
            match cert.conclusion {
                Conclusion::Monogenic => EXIT_OK,
                Conclusion::NotMonogenic => EXIT_CHECK_FAILED,
                Conclusion::Inconclusive => EXIT_INCONCLUSIVE,
            }
        }
        Command::VerifyTheorem {
            p_set,
            m_max,
            n_max,
            deg_cap,
            oracle_cap,
            jobs,
        } => {
            let grid = GridSpec {
                p_set,
                m_max,
                n_max,
                deg_cap,
                oracle_cap,
            };
            let rows = harness::verify_main_theorem(&grid, jobs)?;
            emit(&report::render_theorem_table(&rows))?;
            if rows.iter().all(|r| r.is_clean()) {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            }
        }
        Command::Identities { n_max, q_set, seed } => {
            let rep = harness::verify_cyclo_identities(n_max, &q_set, seed)?;
            emit(&report::render_identity_report(&rep))?;
            if rep.passed() {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            }
        }
        Command::FinalRemarks => {
            let entries = harness::final_remarks_suite()?;
            emit(&report::render_gallery(&entries))?;
            if entries.iter().all(|e| e.passed) {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            }
        }
    };
    Ok(code)
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code. Reports go to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}
