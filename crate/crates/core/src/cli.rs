//! Command-line front end of the `fcl-rel` binary.
//!
//! Every subcommand prints one aligned table on stdout and, with `--csv`,
//! writes the same table as CSV. Numbers are printed with six significant
//! digits unless `--precision full` is given; CSV files always carry the
//! shortest representation that parses back to the same `f64`.
//!
//! Exit codes: 0 on success, 2 on usage or validation errors, 1 on I/O
//! errors.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::cost::{cost_configuration, rank_configurations};
use crate::error::{Error, Result};
use crate::failure::THYRISTOR_ACTIVATION;
use crate::markov::{format_diagram, mttf, parse_diagram};
use crate::montecarlo::{simulate_mttf, McConfig};
use crate::scenario::Scenario;
use crate::thermal::{junction_temperature, read_waveform_csv, LossSpec};
use crate::topology::{
    build_diagram, diagram_matches_closed_form, heatsink_condition, region_verdict,
    sensitivity_sweep, temperature_boundary_exact, SweepParameter, ThresholdForm, Topology,
};
use crate::units::Fit;

#[derive(Debug, Parser)]
#[command(
    name = "fcl-rel",
    version,
    about = "Reliability and levelized cost of redundant fault current limiter switches"
)]
struct Cli {
    /// Also write the result table as CSV.
    #[arg(long, global = true, value_name = "PATH")]
    csv: Option<PathBuf>,

    /// Number formatting on stdout.
    #[arg(long, global = true, value_enum, default_value_t = Precision::Six)]
    precision: Precision,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Precision {
    /// Six significant digits.
    Six,
    /// Shortest round-trip representation.
    Full,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// MTTF of one or all configurations, or of a diagram file.
    Mttf {
        #[arg(long, value_name = "FILE", required_unless_present = "diagram")]
        scenario: Option<PathBuf>,
        #[arg(long, value_name = "NAME", conflicts_with = "diagram")]
        topology: Option<Topology>,
        /// State diagram in the text format, rates in FIT.
        #[arg(long, value_name = "FILE", conflicts_with = "scenario")]
        diagram: Option<PathBuf>,
    },
    /// Shunt parallel against standby at the scenario's operating point.
    Compare {
        #[arg(long, value_name = "FILE")]
        scenario: PathBuf,
        #[command(flatten)]
        form: FormFlags,
    },
    /// Junction-temperature region check.
    Region {
        /// Full-load junction temperature, °C.
        #[arg(long, allow_hyphen_values = true)]
        tj: f64,
        /// Half-load junction temperature, °C.
        #[arg(long, allow_hyphen_values = true)]
        tjh: f64,
        /// Activation constant, K.
        #[arg(long, default_value_t = THYRISTOR_ACTIVATION)]
        a: f64,
    },
    /// Average switch loss of a current waveform.
    Losses {
        /// CSV with header `t_s,i_a`.
        #[arg(long, value_name = "FILE")]
        waveform: PathBuf,
        /// Device parameters and thermal stack are taken from here.
        #[arg(long, value_name = "FILE")]
        scenario: Option<PathBuf>,
        #[arg(long)]
        v0: Option<f64>,
        #[arg(long)]
        r_s: Option<f64>,
        #[arg(long)]
        f_sw: Option<f64>,
        #[arg(long)]
        e_on: Option<f64>,
        #[arg(long)]
        e_off: Option<f64>,
    },
    /// Levelized cost per configuration.
    Cost {
        #[arg(long, value_name = "FILE")]
        scenario: PathBuf,
        #[arg(long, value_name = "NAME")]
        topology: Option<Topology>,
        /// Cost all five configurations and sort by levelized cost.
        #[arg(long, conflicts_with = "topology")]
        rank: bool,
    },
    /// Sweep one parameter and report MTTFs and the winner.
    Sweep {
        #[arg(long, value_name = "FILE")]
        scenario: PathBuf,
        #[arg(long)]
        param: SweepParameter,
        #[arg(long, allow_hyphen_values = true)]
        from: f64,
        #[arg(long, allow_hyphen_values = true)]
        to: f64,
        /// Number of grid points, endpoints included.
        #[arg(long)]
        steps: usize,
        #[command(flatten)]
        form: FormFlags,
    },
    /// Analytic MTTF against Monte Carlo simulation.
    McValidate {
        #[arg(long, value_name = "FILE")]
        scenario: PathBuf,
        #[arg(long, value_name = "NAME")]
        topology: Option<Topology>,
        #[arg(long, default_value_t = 1_000_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Print a configuration's state diagram in the text format.
    Diagram {
        #[arg(long, value_name = "FILE")]
        scenario: PathBuf,
        #[arg(long, value_name = "NAME")]
        topology: Option<Topology>,
    },
}

#[derive(Debug, Args)]
struct FormFlags {
    /// Use the full imperfect-coverage threshold (the default).
    #[arg(long = "full-eq24", conflicts_with = "truncated")]
    full: bool,
    /// Use the truncated imperfect-coverage threshold.
    #[arg(long = "truncated")]
    truncated: bool,
}

impl FormFlags {
    fn form(&self) -> ThresholdForm {
        if self.truncated {
            ThresholdForm::Truncated
        } else {
            ThresholdForm::Full
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Cell {
    Num(f64),
    Int(u64),
    Text(String),
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Num(x)
    }
}

impl From<u64> for Cell {
    fn from(x: u64) -> Self {
        Cell::Int(x)
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_owned())
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Text(s)
    }
}

impl Cell {
    fn render(&self, precision: Precision) -> String {
        match (self, precision) {
            (Cell::Num(x), Precision::Six) => format_g(*x, 6),
            (Cell::Num(x), Precision::Full) => format!("{x:?}"),
            (Cell::Int(n), _) => n.to_string(),
            (Cell::Text(s), _) => s.clone(),
        }
    }
}

struct Table {
    headers: Vec<&'static str>,
    rows: Vec<Vec<Cell>>,
}

impl Table {
    fn new(headers: &[&'static str]) -> Self {
        Table {
            headers: headers.to_vec(),
            rows: Vec::new(),
        }
    }

    fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }

    fn print(&self, out: &mut dyn Write, precision: Precision) -> std::io::Result<()> {
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|c| c.render(precision)).collect())
            .collect();
        let widths: Vec<usize> = (0..self.headers.len())
            .map(|k| {
                cells
                    .iter()
                    .map(|r| r[k].len())
                    .chain([self.headers[k].len()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let line = |fields: Vec<&str>| -> String {
            let padded: Vec<String> = fields
                .iter()
                .zip(&widths)
                .map(|(f, w)| format!("{f:<w$}"))
                .collect();
            padded.join("  ").trim_end().to_owned()
        };
        writeln!(out, "{}", line(self.headers.clone()))?;
        for r in &cells {
            writeln!(out, "{}", line(r.iter().map(String::as_str).collect()))?;
        }
        Ok(())
    }

    fn write_csv(&self, path: &Path) -> Result<()> {
        let io = |e: csv::Error| Error::Io(format!("{}: {e}", path.display()));
        let mut w = csv::Writer::from_path(path).map_err(io)?;
        w.write_record(&self.headers).map_err(io)?;
        for r in &self.rows {
            w.write_record(r.iter().map(|c| c.render(Precision::Full)))
                .map_err(io)?;
        }
        w.flush()?;
        Ok(())
    }
}

/// `printf("%.*g")`-style formatting with `digits` significant digits.
pub fn format_g(x: f64, digits: usize) -> String {
    if x == 0.0 {
        return "0".to_owned();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let p = digits.max(1);
    let sci = format!("{:.*e}", p - 1, x);
    let (mantissa, exp) = sci.split_once('e').unwrap_or((&sci, "0"));
    let exp: i32 = exp.parse().unwrap_or(0);
    if exp < -4 || exp >= p as i32 {
        let mantissa = strip_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{mantissa}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (p as i32 - 1 - exp).max(0) as usize;
        strip_zeros(&format!("{x:.decimals$}")).to_owned()
    }
}

fn strip_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Parses `args` (program name first), runs the subcommand and returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    2
                }
            };
        }
    };
    let result = match &cli.command {
        Command::Diagram { scenario, topology } => {
            diagram_text(scenario, *topology).and_then(|(text, table)| {
                write!(out, "{text}")?;
                emit_csv(&cli, &table)
            })
        }
        _ => execute(&cli).and_then(|table| {
            table.print(out, cli.precision)?;
            emit_csv(&cli, &table)
        }),
    };
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Io(_) => 1,
                _ => 2,
            }
        }
    }
}

fn emit_csv(cli: &Cli, table: &Table) -> Result<()> {
    match &cli.csv {
        Some(path) => table.write_csv(path),
        None => Ok(()),
    }
}

// The diagram in the text format, plus its transitions as a table for CSV.
fn diagram_text(scenario: &Path, topology: Option<Topology>) -> Result<(String, Table)> {
    let s = Scenario::load(scenario)?;
    let t = topology
        .or(s.topology()?)
        .ok_or_else(|| Error::MissingKey("topology".to_owned()))?;
    let op = s.operating_point()?;
    let d = build_diagram(t, &op.switch_rates()?, &op.coverage)?;
    let mut table = Table::new(&["from", "to", "rate_fit"]);
    for tr in d.transitions() {
        table.push(vec![
            d.states()[tr.from].id.as_str().into(),
            d.states()[tr.to].id.as_str().into(),
            Fit::from_per_hour(tr.rate).value().into(),
        ]);
    }
    Ok((format_diagram(&d), table))
}

fn topologies(flag: Option<Topology>, s: &Scenario) -> Result<Vec<Topology>> {
    Ok(match flag.or(s.topology()?) {
        Some(t) => vec![t],
        None => Topology::ALL.to_vec(),
    })
}

fn execute(cli: &Cli) -> Result<Table> {
    match &cli.command {
        Command::Mttf {
            scenario,
            topology,
            diagram,
        } => {
            let mut table = Table::new(&["topology", "mttf_h", "mttf_Mh"]);
            if let Some(path) = diagram {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                let m = mttf(&parse_diagram(&text)?)?;
                table.push(vec!["diagram".into(), m.into(), (m / 1e6).into()]);
                return Ok(table);
            }
            let s = Scenario::load(scenario.as_deref().expect("clap requires --scenario"))?;
            let op = s.operating_point()?;
            for t in topologies(*topology, &s)? {
                let m = op.mttf(t)?;
                table.push(vec![t.name().into(), m.into(), (m / 1e6).into()]);
            }
            Ok(table)
        }
        Command::Compare { scenario, form } => {
            let s = Scenario::load(scenario)?;
            let op = s.operating_point()?;
            let form = form.form();
            let (t_j, t_j_half) = op.junction_temperatures();
            let verdict = op.verdict(form)?;
            let heatsink = heatsink_condition(op.p_loss, op.p_loss_half, &op.stack, op.part.a)?;
            let mut table = Table::new(&[
                "t_j_c",
                "t_jh_c",
                "half_over_full",
                "threshold",
                "mttf_sh_p_h",
                "mttf_s_sb_h",
                "winner",
                "heatsink_winner",
            ]);
            table.push(vec![
                t_j.into(),
                t_j_half.into(),
                verdict.evaluated.into(),
                verdict.boundary_value.into(),
                op.mttf(Topology::ShuntParallel)?.into(),
                op.mttf(Topology::SeriesStandby)?.into(),
                verdict.winner.name().into(),
                heatsink.winner.name().into(),
            ]);
            Ok(table)
        }
        Command::Region { tj, tjh, a } => {
            let v = region_verdict(*tj, *tjh, *a)?;
            let mut table = Table::new(&[
                "t_j_c",
                "t_jh_c",
                "boundary_c",
                "exact_boundary_c",
                "winner",
            ]);
            table.push(vec![
                (*tj).into(),
                (*tjh).into(),
                v.boundary_value.into(),
                temperature_boundary_exact(*tjh, *a)?.into(),
                v.winner.name().into(),
            ]);
            Ok(table)
        }
        Command::Losses {
            waveform,
            scenario,
            v0,
            r_s,
            f_sw,
            e_on,
            e_off,
        } => {
            let s = match scenario {
                Some(path) => Scenario::load(path)?,
                None => Scenario::default(),
            };
            let pick = |flag: &Option<f64>, key: &str| flag.or(s.number(key)).unwrap_or(0.0);
            let spec = LossSpec {
                f_sw: pick(f_sw, "f_sw_hz"),
                e_on: pick(e_on, "e_on_j"),
                e_off: pick(e_off, "e_off_j"),
                v_0: pick(v0, "v0_v"),
                r_s: pick(r_s, "r_s_ohm"),
                samples: read_waveform_csv(waveform)?,
            };
            let b = spec.breakdown()?;
            let mut table = Table::new(&["switching_w", "conduction_w", "total_w", "t_j_c"]);
            let t_j = if scenario.is_some() {
                junction_temperature(&s.stack()?, b.total()).into()
            } else {
                "-".into()
            };
            table.push(vec![
                b.switching.into(),
                b.conduction.into(),
                b.total().into(),
                t_j,
            ]);
            Ok(table)
        }
        Command::Cost {
            scenario,
            topology,
            rank,
        } => {
            let s = Scenario::load(scenario)?;
            let op = s.operating_point()?;
            let params = s.cost()?;
            let ranked = if *rank {
                rank_configurations(&op, &params)?
            } else {
                topologies(*topology, &s)?
                    .into_iter()
                    .map(|t| cost_configuration(&op, &params, t))
                    .collect::<Result<Vec<_>>>()?
            };
            let mut table = Table::new(&[
                "topology",
                "c_inst",
                "c_loss",
                "c_repair",
                "c_outage",
                "mttf_h",
                "lc_per_Mh",
            ]);
            for r in ranked {
                let b = r.bill;
                table.push(vec![
                    r.topology.name().into(),
                    b.c_inst.into(),
                    b.c_loss.into(),
                    b.c_repair.into(),
                    b.c_outage.into(),
                    b.mttf_h.into(),
                    b.lc_per_mh.into(),
                ]);
            }
            Ok(table)
        }
        Command::Sweep {
            scenario,
            param,
            from,
            to,
            steps,
            form,
        } => {
            let s = Scenario::load(scenario)?;
            let op = s.operating_point()?;
            let grid = linspace(*from, *to, *steps)?;
            let rows = sensitivity_sweep(&op, *param, &grid, form.form())?;
            let mut table = Table::new(&[
                "param",
                "value",
                "mttf_sh_p_h",
                "mttf_sh_sb_h",
                "mttf_s_p_h",
                "mttf_s_sb_h",
                "winner",
            ]);
            for r in rows {
                let mut row: Vec<Cell> = vec![param.name().into(), r.value.into()];
                row.extend(r.mttf.iter().map(|&m| Cell::from(m)));
                row.push(r.verdict.winner.name().into());
                table.push(row);
            }
            Ok(table)
        }
        Command::McValidate {
            scenario,
            topology,
            trials,
            seed,
        } => {
            let s = Scenario::load(scenario)?;
            let op = s.operating_point()?;
            let rates = op.switch_rates()?;
            let cfg = McConfig::new(*trials, *seed);
            let mut table = Table::new(&[
                "topology",
                "analytic_h",
                "simulated_h",
                "std_error_h",
                "z",
                "censored",
                "trials",
            ]);
            for t in topologies(*topology, &s)? {
                if !diagram_matches_closed_form(t, &op.coverage) {
                    continue;
                }
                let analytic = op.mttf(t)?;
                let r = simulate_mttf(&build_diagram(t, &rates, &op.coverage)?, &cfg)?;
                table.push(vec![
                    t.name().into(),
                    analytic.into(),
                    r.mean_ttf.into(),
                    r.std_error.into(),
                    r.z_score(analytic).into(),
                    r.censored_count.into(),
                    r.trials.into(),
                ]);
            }
            Ok(table)
        }
        Command::Diagram { .. } => unreachable!("diagram output is text"),
    }
}

fn linspace(from: f64, to: f64, steps: usize) -> Result<Vec<f64>> {
    match steps {
        0 => Err(Error::param("steps", 0.0, "must be at least 1")),
        1 => Ok(vec![from]),
        n => Ok((0..n)
            .map(|k| {
                if k == n - 1 {
                    to
                } else {
                    from + (to - from) * k as f64 / (n - 1) as f64
                }
            })
            .collect()),
    }
}
