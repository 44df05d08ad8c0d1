//! The four subcommands. Each writes its artifacts into the output
//! directory, wrapping results with the tool version and the config echo.

use std::fs;
use std::path::PathBuf;

use serde::Serialize;
use xbl_core::commuting::commuting_report;
use xbl_core::gram::gram_matrix;
use xbl_core::report::{indexed_csv, to_json_string};
use xbl_core::spectral::spectral_report;
use xbl_core::verify::run_suite;
use xbl_core::{CommutingPair, SuiteConfig};

use crate::config::RunConfig;

pub const TOOL: &str = "xbl";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug)]
pub enum Failure {
    /// Bad input detected after parsing.
    Usage(String),
    /// The verification suite reported failed checks.
    Verification(usize),
    /// Numerical or I/O failure.
    Internal(String),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Verification(_) => 2,
            Failure::Internal(_) => 3,
        }
    }
}

impl From<xbl_core::Error> for Failure {
    fn from(e: xbl_core::Error) -> Self {
        if e.is_usage() {
            Failure::Usage(e.to_string())
        } else {
            Failure::Internal(e.to_string())
        }
    }
}

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    tool: &'static str,
    version: &'static str,
    command: &'a str,
    config: &'a RunConfig,
    result: &'a T,
}

struct Writer<'a> {
    cfg: &'a RunConfig,
    command: &'a str,
    written: Vec<PathBuf>,
}

impl<'a> Writer<'a> {
    fn new(cfg: &'a RunConfig, command: &'a str) -> Result<Self, Failure> {
        fs::create_dir_all(&cfg.out_dir)
            .map_err(|e| Failure::Internal(format!("cannot create {}: {e}", cfg.out_dir.display())))?;
        Ok(Self { cfg, command, written: Vec::new() })
    }

    fn json<T: Serialize>(&mut self, name: &str, result: &T) -> Result<(), Failure> {
        let env = Envelope { tool: TOOL, version: VERSION, command: self.command, config: self.cfg, result };
        let text = to_json_string(&env).map_err(|e| Failure::Internal(e.to_string()))?;
        self.file(name, &text)
    }

    /// CSV files carry the same provenance as a leading `#` comment line.
    fn csv(&mut self, name: &str, body: &str) -> Result<(), Failure> {
        let config = serde_json::to_string(self.cfg).map_err(|e| Failure::Internal(e.to_string()))?;
        self.file(name, &format!("# {TOOL} {VERSION} {} {config}\n{body}", self.command))
    }

    fn file(&mut self, name: &str, text: &str) -> Result<(), Failure> {
        let path = self.cfg.out_dir.join(name);
        fs::write(&path, text).map_err(|e| Failure::Internal(format!("cannot write {}: {e}", path.display())))?;
        self.written.push(path);
        Ok(())
    }

    fn report(&self) {
        for p in &self.written {
            println!("wrote {}", p.display());
        }
    }
}

pub fn run(command: &str, cfg: &RunConfig) -> Result<(), Failure> {
    match command {
        "gram" => gram(cfg),
        "commute" => commute(cfg),
        "spectrum" => spectrum(cfg),
        "verify" => verify(cfg),
        other => Err(Failure::Usage(format!("unknown command {other}"))),
    }
}

fn gram(cfg: &RunConfig) -> Result<(), Failure> {
    let fam = cfg.poly_family()?;
    let m = gram_matrix(&fam, cfg.n, cfg.omega, cfg.tol)?;
    let mut w = Writer::new(cfg, "gram")?;
    w.json("gram.json", &m)?;
    w.csv("gram.csv", &m.to_csv())?;
    w.report();
    Ok(())
}

fn commute(cfg: &RunConfig) -> Result<(), Failure> {
    let fam = cfg.poly_family()?;
    let pair = CommutingPair::new(&fam, cfg.n, cfg.omega, cfg.transcription)?;
    let m = gram_matrix(&fam, cfg.n, cfg.omega, cfg.tol)?;
    let r = commuting_report(&pair, &m)?;
    let mut w = Writer::new(cfg, "commute")?;
    w.json("commuting.json", &r)?;
    println!(
        "cond1 {:.3e}  cond2 {:.3e}  commutator {:.3e}",
        r.cond1_residual, r.cond2_residual, r.commutator_residual
    );
    w.report();
    Ok(())
}

fn spectrum(cfg: &RunConfig) -> Result<(), Failure> {
    let fam = cfg.poly_family()?;
    let pair = CommutingPair::new(&fam, cfg.n, cfg.omega, cfg.transcription)?;
    let m = gram_matrix(&fam, cfg.n, cfg.omega, cfg.tol)?;
    let r = spectral_report(&pair, &m, cfg.eps)?;
    let mut w = Writer::new(cfg, "spectrum")?;
    w.json("spectrum.json", &r)?;
    w.csv("eigs_M.csv", &indexed_csv(&r.eig_m_direct))?;
    w.csv("eigs_That.csv", &indexed_csv(&r.eig_that))?;
    let g = r.gap_counts;
    println!(
        "near one {}  plunge {}  near zero {}  spectrum agreement {:.3e}{}",
        g.near_one,
        g.plunge,
        g.near_zero,
        r.spectrum_agreement,
        if r.degenerate { "  (degenerate)" } else { "" }
    );
    w.report();
    Ok(())
}

fn verify(cfg: &RunConfig) -> Result<(), Failure> {
    let suite = SuiteConfig {
        family: cfg.poly_family()?,
        n: cfg.n,
        omega: cfg.omega,
        tol: cfg.tol,
        eps: cfg.eps,
        seed: cfg.seed,
        transcription: cfg.transcription,
    };
    if !(cfg.eps > 0.0 && cfg.eps < 0.5) {
        return Err(xbl_core::Error::InvalidEps(cfg.eps).into());
    }
    let r = run_suite(&suite)?;
    let mut w = Writer::new(cfg, "verify")?;
    w.json("verify.json", &r)?;
    print!("{}", r.table());
    w.report();
    if r.passed() {
        Ok(())
    } else {
        Err(Failure::Verification(r.failures))
    }
}
