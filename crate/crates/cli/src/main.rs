use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use splitmat::densities::{jpdf_real_sq, jpdf_sc, r1_complex, r1_real, spacing_pdf};
use splitmat::montecarlo::sample_spectra;
use splitmat::verify::run_suite;
use splitmat::{EnsembleConfig, EnsembleKind, SplitEnsemble, Suite, SuiteConfig};

#[derive(Parser)]
#[command(name = "splitmat", version, about = "Split-Hermitian random matrix ensembles")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Sample spectra and write one CSV row per eigenvalue.
    Sample {
        #[arg(long, value_parser = parse_kind)]
        ensemble: EnsembleKind,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        size: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
        #[arg(long, env = "SPLITMAT_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
        /// Worker threads; output does not depend on it.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        workers: Option<u64>,
    },
    /// Tabulate a closed-form 2×2 density on a grid.
    Table {
        #[arg(long, value_enum)]
        what: What,
        #[arg(long, value_enum)]
        ensemble: Ens,
        /// lo:hi:n (n ≥ 2 points, lo < hi)
        #[arg(long, allow_hyphen_values = true)]
        grid: Grid,
        /// Second axis for 2-D tables; defaults to --grid.
        #[arg(long, allow_hyphen_values = true)]
        grid2: Option<Grid>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run the acceptance suite and write a JSON report.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::Fast)]
        suite: SuiteArg,
        #[arg(long, env = "SPLITMAT_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        mc_samples: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, hide = true, default_value_t = 1.0)]
        tolerance_scale: f64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum What {
    R1Real,
    R1Complex,
    Spacing,
    Jpdf,
}

#[derive(Clone, Copy, ValueEnum)]
enum Ens {
    Gsce,
    Gsqe,
}

impl From<Ens> for SplitEnsemble {
    fn from(e: Ens) -> Self {
        match e {
            Ens::Gsce => SplitEnsemble::Gsce,
            Ens::Gsqe => SplitEnsemble::Gsqe,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Fast,
    Full,
}

fn parse_kind(s: &str) -> Result<EnsembleKind, String> {
    EnsembleKind::from_str(s).map_err(|e| e.to_string())
}

#[derive(Clone, Copy, Debug)]
struct Grid {
    lo: f64,
    hi: f64,
    n: usize,
}

impl Grid {
    fn points(&self) -> Vec<f64> {
        let h = (self.hi - self.lo) / (self.n - 1) as f64;
        (0..self.n).map(|i| if i + 1 == self.n { self.hi } else { self.lo + h * i as f64 }).collect()
    }
}

impl FromStr for Grid {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        let [lo, hi, n] = parts[..] else {
            return Err(format!("expected lo:hi:n, got '{s}'"));
        };
        let lo: f64 = lo.parse().map_err(|_| format!("bad lower bound '{lo}'"))?;
        let hi: f64 = hi.parse().map_err(|_| format!("bad upper bound '{hi}'"))?;
        let n: usize = n.parse().map_err(|_| format!("bad point count '{n}'"))?;
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return Err("grid needs finite lo < hi".into());
        }
        if n < 2 {
            return Err("grid needs at least 2 points".into());
        }
        Ok(Grid { lo, hi, n })
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let res = match cli.cmd {
        Cmd::Sample { ensemble, size, count, seed, out, workers } => {
            cmd_sample(ensemble, size as usize, count as usize, seed, &out, workers)
        }
        Cmd::Table { what, ensemble, grid, grid2, out } => {
            cmd_table(what, ensemble.into(), grid, grid2.unwrap_or(grid), &out)
        }
        Cmd::Verify { suite, seed, mc_samples, out, tolerance_scale } => {
            let suite = match suite {
                SuiteArg::Fast => Suite::Fast,
                SuiteArg::Full => Suite::Full,
            };
            let cfg = SuiteConfig { suite, seed, mc_samples, tolerance_scale };
            cmd_verify(&cfg, out.as_deref())
        }
    };
    match res {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

type CmdResult = Result<ExitCode, Box<dyn std::error::Error>>;

fn create(path: &Path) -> io::Result<BufWriter<File>> {
    File::create(path).map(BufWriter::new)
}

fn cmd_sample(kind: EnsembleKind, n: usize, count: usize, seed: u64, out: &Path, workers: Option<u64>) -> CmdResult {
    let cfg = EnsembleConfig::new(kind, n, count, seed)?;
    let spectra = match workers {
        Some(w) => rayon::ThreadPoolBuilder::new()
            .num_threads(w as usize)
            .build()?
            .install(|| sample_spectra(&cfg))?,
        None => sample_spectra(&cfg)?,
    };
    let mut w = create(out)?;
    writeln!(w, "sample_id,eig_index,re,im,is_real")?;
    for (id, s) in spectra.iter().enumerate() {
        for (k, z) in s.eigenvalues().iter().enumerate() {
            let real = u8::from(z.im == 0.0);
            writeln!(w, "{id},{k},{:.16e},{:.16e},{real}", z.re, z.im)?;
        }
    }
    w.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_table(what: What, ens: SplitEnsemble, grid: Grid, grid2: Grid, out: &Path) -> CmdResult {
    let mut w = create(out)?;
    match what {
        What::R1Real => {
            writeln!(w, "x,density")?;
            for x in grid.points() {
                writeln!(w, "{x:.16e},{:.16e}", r1_real(ens, x))?;
            }
        }
        What::Spacing => {
            if grid.lo < 0.0 {
                eprintln!("error: spacing grid must start at 0 or above");
                return Ok(ExitCode::from(2));
            }
            writeln!(w, "s,density")?;
            for s in grid.points() {
                writeln!(w, "{s:.16e},{:.16e}", spacing_pdf(ens, s)?)?;
            }
        }
        What::R1Complex => {
            // on the real axis the complex branch vanishes linearly
            writeln!(w, "re,im,density")?;
            for x in grid.points() {
                for y in grid2.points() {
                    let d = if y == 0.0 { 0.0 } else { r1_complex(ens, Complex64::new(x, y))? };
                    writeln!(w, "{x:.16e},{y:.16e},{d:.16e}")?;
                }
            }
        }
        What::Jpdf => {
            // both eigenvalues real
            writeln!(w, "l1,l2,density")?;
            for a in grid.points() {
                for b in grid2.points() {
                    let d = match ens {
                        SplitEnsemble::Gsce => jpdf_sc(Complex64::new(a, 0.0), Complex64::new(b, 0.0))?,
                        SplitEnsemble::Gsqe => jpdf_real_sq(a, b),
                    };
                    writeln!(w, "{a:.16e},{b:.16e},{d:.16e}")?;
                }
            }
        }
    }
    w.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(cfg: &SuiteConfig, out: Option<&Path>) -> CmdResult {
    let report = run_suite(cfg)?;
    for c in &report.checks {
        eprintln!(
            "{} [{:>2}] {}: {:.6e} vs {:.6e} (tol {:.3e})",
            if c.pass { "PASS" } else { "FAIL" },
            c.criterion,
            c.name,
            c.observed,
            c.expected,
            c.tol
        );
    }
    let json = serde_json::to_string_pretty(&report)?;
    match out {
        Some(p) => {
            let mut w = create(p)?;
            writeln!(w, "{json}")?;
            w.flush()?;
        }
        None => println!("{json}"),
    }
    Ok(if report.pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
