use std::fmt::Write as _;
use std::time::Instant;

use clap::ValueEnum;

use crate::degree_extract::DegreeOptions;
use crate::edge_extract::EdgeOptions;
use crate::error::{invalid, Error, Result};
use crate::exec::mix;
use crate::graph::Graph;
use crate::hosts::{generate, GraphKind};
use crate::report::{CertStatus, ExtractionReport};

/// Version of the CSV column layout below.
pub const CSV_VERSION: u32 = 1;
pub const CSV_COLUMNS: &str = "n,variable,m,max_degree,method,r,trials,seed,best,edges,min_degree,girth,status,wall_ms";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    /// Best edge count against input edge count.
    F,
    /// Best minimum degree against input maximum degree.
    H,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SweepInput {
    Complete,
    /// `density·n` random edges.
    Gnm,
    /// Maximum degree n over cliques of size `min_deg + 1`.
    CliqueApex,
    /// K_{n,n}.
    CompleteBipartite,
    Star,
}

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub mode: Mode,
    pub input: SweepInput,
    pub points: Vec<usize>,
    pub r: usize,
    pub trials: usize,
    pub seed: u64,
    pub min_deg: usize,
    pub density: usize,
    pub max_rounds: usize,
    pub timing: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepRecord {
    pub n: usize,
    /// m in mode f, Δ in mode h.
    pub variable: usize,
    pub m: usize,
    pub max_degree: usize,
    /// Edges in mode f, minimum degree in mode h.
    pub best: usize,
    pub report: ExtractionReport,
    pub wall_ms: Option<u64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepOutcome {
    pub records: Vec<SweepRecord>,
    /// Least-squares fit of ln(best) = slope·ln(variable) + ln(prefactor).
    pub fit: Option<Fit>,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Fit {
    pub slope: f64,
    pub prefactor: f64,
    pub points: usize,
}

/// `a:b:step`, inclusive of `b` when it lies on the grid.
pub fn parse_range(s: &str) -> Result<Vec<usize>> {
    let nums: Vec<usize> = s
        .split(':')
        .map(|p| p.parse().map_err(|_| invalid(format!("bad range {s:?}, expected a:b:step"))))
        .collect::<Result<_>>()?;
    let [a, b, step] = nums[..] else {
        return Err(invalid(format!("bad range {s:?}, expected a:b:step")));
    };
    if step == 0 || a > b {
        return Err(invalid(format!("range {s:?} is empty or has zero step")));
    }
    Ok((a..=b).step_by(step).collect())
}

pub fn sweep_graph(cfg: &SweepConfig, n: usize) -> Result<Graph> {
    let kind = match cfg.input {
        SweepInput::Complete => GraphKind::Complete(n),
        SweepInput::Gnm => GraphKind::RandomGnm {
            n,
            m: (cfg.density * n).min(n * n.saturating_sub(1) / 2),
            seed: mix(cfg.seed, n as u64),
        },
        SweepInput::CliqueApex => GraphKind::CliqueApex { min_deg: cfg.min_deg, max_deg: n },
        SweepInput::CompleteBipartite => GraphKind::CompleteBipartite(n, n),
        SweepInput::Star => GraphKind::Star(n),
    };
    generate(kind)
}

/// Least-squares slope of ln y against ln x over the points with x, y > 0.
pub fn log_log_fit(xs: &[usize], ys: &[usize]) -> Option<Fit> {
    let pts: Vec<(f64, f64)> = xs
        .iter()
        .zip(ys)
        .filter(|&(&x, &y)| x > 0 && y > 0)
        .map(|(&x, &y)| ((x as f64).ln(), (y as f64).ln()))
        .collect();
    let k = pts.len() as f64;
    if pts.len() < 2 {
        return None;
    }
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    if sxx == 0.0 {
        return None;
    }
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let slope = sxy / sxx;
    Some(Fit { slope, prefactor: (my - slope * mx).exp(), points: pts.len() })
}

pub fn run_sweep(cfg: &SweepConfig) -> Result<SweepOutcome> {
    if cfg.points.len() < 4 {
        return Err(invalid(format!("a sweep needs at least 4 points for slope fitting, got {}", cfg.points.len())));
    }
    let mut records = Vec::with_capacity(cfg.points.len());
    for &n in &cfg.points {
        let g = sweep_graph(cfg, n)?;
        let start = Instant::now();
        let (_, report) = match cfg.mode {
            Mode::F => crate::edge_extract::extract_with(&g, EdgeOptions::new(cfg.r, cfg.trials, cfg.seed))?,
            Mode::H => crate::degree_extract::extract_degree_with(
                &g,
                DegreeOptions { max_rounds: cfg.max_rounds, ..DegreeOptions::new(cfg.r, cfg.trials, cfg.seed) },
            )?,
        };
        let wall_ms = cfg.timing.then(|| start.elapsed().as_millis() as u64);
        if report.certificate.status != CertStatus::Pass {
            return Err(Error::CertificateFailure(format!("sweep point n={n} failed certification")));
        }
        let (variable, best) = match cfg.mode {
            Mode::F => (g.m(), report.output.edges),
            Mode::H => (g.max_degree(), report.output.min_degree),
        };
        records.push(SweepRecord { n, variable, m: g.m(), max_degree: g.max_degree(), best, report, wall_ms });
    }
    let xs: Vec<usize> = records.iter().map(|r| r.variable).collect();
    let ys: Vec<usize> = records.iter().map(|r| r.best).collect();
    Ok(SweepOutcome { fit: log_log_fit(&xs, &ys), records })
}

pub fn to_csv(cfg: &SweepConfig, out: &SweepOutcome) -> String {
    let mut s = String::new();
    let mode = cfg.mode.to_possible_value().unwrap();
    let input = cfg.input.to_possible_value().unwrap();
    writeln!(s, "# girthforge sweep csv v{CSV_VERSION} mode={} input={}", mode.get_name(), input.get_name()).unwrap();
    writeln!(s, "{CSV_COLUMNS}").unwrap();
    for r in &out.records {
        let rep = &r.report;
        let status = match rep.certificate.status {
            CertStatus::Pass => "pass",
            CertStatus::Fail => "fail",
        };
        writeln!(
            s,
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            r.n,
            r.variable,
            r.m,
            r.max_degree,
            rep.method,
            rep.r,
            rep.trials,
            rep.seed,
            r.best,
            rep.output.edges,
            rep.output.min_degree,
            rep.output.girth,
            status,
            r.wall_ms.map(|w| w.to_string()).unwrap_or_default(),
        )
        .unwrap();
    }
    match out.fit {
        Some(f) => writeln!(s, "# fit slope={:.6} prefactor={:.6} points={}", f.slope, f.prefactor, f.points),
        None => writeln!(s, "# fit slope=nan prefactor=nan points=0"),
    }
    .unwrap();
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("20:80:10").unwrap(), vec![20, 30, 40, 50, 60, 70, 80]);
        assert_eq!(parse_range("5:9:3").unwrap(), vec![5, 8]);
        assert!(parse_range("5:9").is_err());
        assert!(parse_range("5:9:0").is_err());
        assert!(parse_range("9:5:1").is_err());
    }

    #[test]
    fn fit_recovers_power_laws() {
        let xs = [10, 20, 40, 80];
        let ys: Vec<usize> = xs.iter().map(|&x| 3 * x * x).collect();
        let f = log_log_fit(&xs, &ys).unwrap();
        assert!((f.slope - 2.0).abs() < 1e-9);
        assert!((f.prefactor - 3.0).abs() < 1e-6);
        assert!(log_log_fit(&[5], &[5]).is_none());
        assert!(log_log_fit(&[5, 5], &[1, 2]).is_none());
    }

    #[test]
    fn too_few_points() {
        let cfg = SweepConfig {
            mode: Mode::F,
            input: SweepInput::Complete,
            points: vec![10],
            r: 2,
            trials: 1,
            seed: 0,
            min_deg: 2,
            density: 4,
            max_rounds: 10,
            timing: false,
        };
        assert!(run_sweep(&cfg).is_err());
    }
}
