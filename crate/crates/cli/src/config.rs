//! Command-line arguments and the resolved run configuration.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use xbl_core::{PolyFamily, Transcription};

/// Environment variable that takes precedence over `--out`.
pub const OUT_ENV: &str = "XBL_OUT";

#[derive(Debug, Parser)]
#[command(name = "xbl", version, about = "Time-and-band limiting for exceptional Hermite and Laguerre polynomials")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Gram matrix of the time-and-band limiting operator (gram.json, gram.csv)
    Gram(RunArgs),
    /// Commuting banded operator and its residuals (commuting.json)
    Commute(RunArgs),
    /// Spectra of M and of the commuting operator (spectrum.json, eigs_M.csv, eigs_That.csv)
    Spectrum(RunArgs),
    /// Full invariant suite (verify.json); exits 2 if any check fails
    Verify(RunArgs),
}

impl Command {
    pub fn parts(&self) -> (&'static str, &RunArgs) {
        match self {
            Command::Gram(a) => ("gram", a),
            Command::Commute(a) => ("commute", a),
            Command::Spectrum(a) => ("spectrum", a),
            Command::Verify(a) => ("verify", a),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyArg {
    Xhermite,
    Xlaguerre,
}

#[derive(Debug, Clone, Args)]
pub struct RunArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    /// Laguerre parameter, required for xlaguerre only
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: Option<f64>,
    /// Time limit (highest polynomial degree)
    #[arg(long = "N", id = "N", value_name = "INT")]
    pub n: usize,
    /// Band limit
    #[arg(long, allow_negative_numbers = true)]
    pub omega: f64,
    /// Quadrature tolerance
    #[arg(long, default_value_t = 1e-12)]
    pub tol: f64,
    /// Spectral gap threshold
    #[arg(long, default_value_t = 0.01)]
    pub eps: f64,
    /// Output directory (overridden by XBL_OUT)
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
    /// Seed for random sample points
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Use the coefficient tables exactly as printed (fails verification; for testing the checks)
    #[arg(long, hide = true)]
    pub as_printed: bool,
}

/// Validated configuration, echoed into every output file.
#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub family: FamilyArg,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    #[serde(rename = "N")]
    pub n: usize,
    pub omega: f64,
    pub tol: f64,
    pub eps: f64,
    pub out_dir: PathBuf,
    pub seed: u64,
    pub transcription: Transcription,
}

impl RunConfig {
    /// Checks the family/alpha pairing and resolves the output directory.
    pub fn resolve(args: &RunArgs, env_out: Option<PathBuf>) -> Result<Self, String> {
        match (args.family, args.alpha) {
            (FamilyArg::Xlaguerre, None) => return Err("--alpha is required for --family xlaguerre".into()),
            (FamilyArg::Xhermite, Some(_)) => return Err("--alpha only applies to --family xlaguerre".into()),
            _ => {}
        }
        Ok(Self {
            family: args.family,
            alpha: args.alpha,
            n: args.n,
            omega: args.omega,
            tol: args.tol,
            eps: args.eps,
            out_dir: env_out.unwrap_or_else(|| args.out.clone()),
            seed: args.seed,
            transcription: if args.as_printed { Transcription::AsPrinted } else { Transcription::Verified },
        })
    }

    pub fn poly_family(&self) -> xbl_core::Result<PolyFamily> {
        match self.family {
            FamilyArg::Xhermite => Ok(PolyFamily::xhermite()),
            FamilyArg::Xlaguerre => PolyFamily::xlaguerre(self.alpha.unwrap_or(f64::NAN)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Result<Cli, clap::Error> {
        Cli::try_parse_from(std::iter::once("xbl").chain(args.iter().copied()))
    }

    #[test]
    fn parses_full_grammar() {
        let cli = parse(&[
            "gram", "--family", "xlaguerre", "--alpha", "1.3", "--N", "5", "--omega", "-0.5", "--tol", "1e-10",
            "--eps", "0.05", "--out", "/tmp/x", "--seed", "7",
        ])
        .unwrap();
        let (name, a) = cli.command.parts();
        assert_eq!(name, "gram");
        assert_eq!((a.family, a.alpha, a.n, a.omega, a.seed), (FamilyArg::Xlaguerre, Some(1.3), 5, -0.5, 7));
        assert!(!a.as_printed);
    }

    #[test]
    fn defaults() {
        let cli = parse(&["verify", "--family", "xhermite", "--N", "12", "--omega", "0.3"]).unwrap();
        let (_, a) = cli.command.parts();
        assert_eq!((a.tol, a.eps, a.seed), (1e-12, 0.01, 0));
        assert_eq!(a.out, PathBuf::from("."));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse(&["gram", "--family", "xjacobi", "--N", "5", "--omega", "0"]).is_err());
        assert!(parse(&["gram", "--family", "xhermite", "--omega", "0"]).is_err());
        assert!(parse(&["spin", "--family", "xhermite", "--N", "5", "--omega", "0"]).is_err());
    }

    #[test]
    fn alpha_pairing_and_out_override() {
        let cli = parse(&["gram", "--family", "xlaguerre", "--N", "5", "--omega", "0.7"]).unwrap();
        assert!(RunConfig::resolve(cli.command.parts().1, None).is_err());
        let cli = parse(&["gram", "--family", "xhermite", "--alpha", "1", "--N", "5", "--omega", "0.7"]).unwrap();
        assert!(RunConfig::resolve(cli.command.parts().1, None).is_err());
        let cli = parse(&["gram", "--family", "xhermite", "--N", "5", "--omega", "0.7", "--out", "a"]).unwrap();
        let cfg = RunConfig::resolve(cli.command.parts().1, Some("b".into())).unwrap();
        assert_eq!(cfg.out_dir, PathBuf::from("b"));
    }
}
