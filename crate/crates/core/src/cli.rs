//! Command-line front end: `generate`, `lc`, `klc`, `spectrum`, `verify`.
//!
//! Exit status: 0 success, 1 verification mismatch, 2 configuration error,
//! 3 search budget exhausted.

use std::fs::File;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::kerror::{
    klc_exhaustive_with, spectrum, verify_theorem, Method, SearchConfig, SpectrumPoint, TheoremSpec,
    TheoremVariant, DEFAULT_BUDGET,
};
use crate::lincomp::{lc_berlekamp_massey, lc_bivariate, lc_f2_structured, lc_fp_multiplicity, lc_gcd};
use crate::polyring::cyclotomic_factorization_f2;
use crate::quotients::{ClassSet, PrimeParams};
use crate::seqgen::{gen_complement, gen_indicator, gen_legendre, gen_threshold, PeriodicSequence};

pub const EXIT_OK: u8 = 0;
pub const EXIT_MISMATCH: u8 = 1;
pub const EXIT_CONFIG: u8 = 2;
pub const EXIT_BUDGET: u8 = 3;

/// Environment variable overriding the default search budget.
pub const BUDGET_ENV: &str = "PQSEQ_BUDGET";

#[derive(Debug, Clone, Parser)]
#[command(name = "pqseq", version, about = "Linear complexity of polynomial-quotient sequences")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Print one period of a sequence.
    Generate {
        #[command(flatten)]
        common: Common,
    },
    /// Linear complexity of one period.
    Lc {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Engine::Gcd)]
        engine: Engine,
    },
    /// k-error linear complexity by exhaustive search.
    Klc {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Exhaustive error linear complexity spectrum for k = 0..=k-max.
    Spectrum {
        #[command(flatten)]
        common: Common,
        /// Defaults to the weight of the sequence.
        #[arg(long)]
        k_max: Option<usize>,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Compare a theorem's statement with exhaustive search.
    Verify {
        #[arg(long)]
        theorem: String,
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        k_max: Option<usize>,
        #[command(flatten)]
        search: SearchArgs,
    },
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    #[arg(long)]
    pub p: u64,
    #[arg(long, default_value_t = 1)]
    pub w: u64,
    #[arg(long, value_enum, default_value_t = FieldArg::F2)]
    pub field: FieldArg,
    /// Residue list ("1,3"), "threshold", "legendre", or "complement:<list>".
    #[arg(long)]
    pub set: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the result here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct SearchArgs {
    /// Maximum number of error patterns to evaluate.
    #[arg(long)]
    pub budget: Option<u128>,
    /// Evaluate every LC by gcd, even where the three-divisor test applies.
    #[arg(long)]
    pub no_fast_path: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FieldArg {
    F2,
    Fp,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Engine {
    Gcd,
    Bm,
    Structured,
    Multiplicity,
    Bivariate,
}

impl Engine {
    fn name(self) -> &'static str {
        match self {
            Engine::Gcd => "gcd",
            Engine::Bm => "bm",
            Engine::Structured => "structured",
            Engine::Multiplicity => "multiplicity",
            Engine::Bivariate => "bivariate",
        }
    }
}

/// How `--set` selects the sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SetChoice {
    Threshold,
    Legendre,
    Indicator(ClassSet),
    Complement(ClassSet),
}

impl SetChoice {
    pub fn parse(raw: &str, p: u64) -> Result<Self> {
        let raw = raw.trim();
        match raw {
            "threshold" => return Ok(SetChoice::Threshold),
            "legendre" => return Ok(SetChoice::Legendre),
            _ => {}
        }
        if let Some(list) = raw.strip_prefix("complement:") {
            return Ok(SetChoice::Complement(parse_list(list, p)?));
        }
        if raw == "complement" {
            return Err(Error::Parameter("use complement:<list>, e.g. complement:1,2".into()));
        }
        Ok(SetChoice::Indicator(parse_list(raw, p)?))
    }

    /// The class indices this choice stands for.
    pub fn index_set(&self, p: u64) -> ClassSet {
        match self {
            SetChoice::Threshold => ClassSet::threshold(p),
            SetChoice::Legendre => ClassSet::nonresidues(p),
            SetChoice::Indicator(s) | SetChoice::Complement(s) => s.clone(),
        }
    }

    fn sequence(&self, params: &PrimeParams) -> Result<PeriodicSequence> {
        match self {
            SetChoice::Threshold => Ok(gen_threshold(params)),
            SetChoice::Legendre => Ok(gen_legendre(params)),
            SetChoice::Indicator(s) => gen_indicator(params, s),
            SetChoice::Complement(s) => gen_complement(params, s),
        }
    }
}

fn parse_list(list: &str, p: u64) -> Result<ClassSet> {
    let members = list
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<u64>().map_err(|_| Error::Parameter(format!("'{s}' is not a class index"))))
        .collect::<Result<Vec<_>>>()?;
    ClassSet::new(p, members)
}

impl Common {
    fn params(&self) -> Result<PrimeParams> {
        PrimeParams::new(self.p, self.w)
    }

    fn set_choice(&self) -> Result<SetChoice> {
        let raw = self.set.as_deref().ok_or_else(|| Error::Parameter("--set is required".into()))?;
        SetChoice::parse(raw, self.p)
    }

    fn sequence(&self) -> Result<PeriodicSequence> {
        let seq = self.set_choice()?.sequence(&self.params()?)?;
        match self.field {
            FieldArg::F2 => Ok(seq),
            FieldArg::Fp => seq.over(self.p as u32),
        }
    }

    fn field_name(&self) -> &'static str {
        match self.field {
            FieldArg::F2 => "f2",
            FieldArg::Fp => "fp",
        }
    }
}

impl SearchArgs {
    /// Flag, then environment, then the built-in default.
    pub fn config(&self, env: Option<&str>) -> Result<SearchConfig> {
        let budget = match (self.budget, env) {
            (Some(b), _) => b,
            (None, Some(v)) => v
                .trim()
                .parse()
                .map_err(|_| Error::Parameter(format!("{BUDGET_ENV}='{v}' is not a count")))?,
            (None, None) => DEFAULT_BUDGET,
        };
        Ok(SearchConfig { budget, fast_path: !self.no_fast_path })
    }
}

struct Emitted {
    body: String,
    code: u8,
    diagnostic: Option<String>,
}

impl Emitted {
    fn ok(body: String) -> Self {
        Self { body, code: EXIT_OK, diagnostic: None }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Budget { .. } => EXIT_BUDGET,
        _ => EXIT_CONFIG,
    }
}

fn json_text(v: Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("values serialize");
    s.push('\n');
    s
}

fn points_csv(points: &[SpectrumPoint]) -> String {
    let mut s = String::from("k,lc,method\n");
    for pt in points {
        s.push_str(&format!("{},{},{}\n", pt.k, pt.lc, pt.method));
    }
    s
}

fn header(common: &Common, seq: &PeriodicSequence) -> Value {
    json!({
        "p": common.p,
        "w": common.w,
        "field": common.field_name(),
        "sequence": seq.label().to_string(),
        "period": seq.period(),
        "weight": seq.weight(),
    })
}

fn with(mut base: Value, extra: Value) -> Value {
    if let (Value::Object(b), Value::Object(e)) = (&mut base, extra) {
        b.extend(e);
    }
    base
}

fn generate(common: &Common) -> Result<Emitted> {
    let seq = common.sequence()?;
    let body = match common.format {
        Format::Text => {
            let parts: Vec<String> = seq.symbols().iter().map(u32::to_string).collect();
            format!("{}\n", parts.join(","))
        }
        Format::Csv => {
            let mut s = String::from("u,s\n");
            for (u, v) in seq.symbols().iter().enumerate() {
                s.push_str(&format!("{u},{v}\n"));
            }
            s
        }
        Format::Json => json_text(with(header(common, &seq), json!({ "symbols": seq.symbols() }))),
    };
    Ok(Emitted::ok(body))
}

fn lc(common: &Common, engine: Engine) -> Result<Emitted> {
    let seq = common.sequence()?;
    let value = match engine {
        Engine::Gcd => lc_gcd(&seq),
        Engine::Bm => lc_berlekamp_massey(&seq),
        Engine::Structured => lc_f2_structured(&seq, &cyclotomic_factorization_f2(common.p)?)?,
        Engine::Multiplicity => lc_fp_multiplicity(&seq)?,
        Engine::Bivariate => lc_bivariate(&seq)?,
    };
    let body = match common.format {
        Format::Text => format!("{value}\n"),
        Format::Csv => format!("engine,lc\n{},{value}\n", engine.name()),
        Format::Json => json_text(with(header(common, &seq), json!({ "engine": engine.name(), "lc": value }))),
    };
    Ok(Emitted::ok(body))
}

fn klc(common: &Common, k: usize, cfg: &SearchConfig) -> Result<Emitted> {
    let seq = common.sequence()?;
    let value = klc_exhaustive_with(&seq, k, cfg)?;
    let pt = SpectrumPoint { k, lc: value, method: Method::Exhaustive };
    let body = match common.format {
        Format::Text => format!("{value}\n"),
        Format::Csv => points_csv(&[pt]),
        Format::Json => json_text(with(header(common, &seq), json!({ "k": k, "lc": value, "method": pt.method }))),
    };
    Ok(Emitted::ok(body))
}

fn spectrum_cmd(common: &Common, k_max: Option<usize>, cfg: &SearchConfig) -> Result<Emitted> {
    let seq = common.sequence()?;
    let k_max = k_max.unwrap_or(seq.weight());
    let sp = spectrum(&seq, k_max, cfg);
    let body = match common.format {
        Format::Text => sp.points.iter().map(|pt| format!("{} {} {}\n", pt.k, pt.lc, pt.method)).collect(),
        Format::Csv => points_csv(&sp.points),
        Format::Json => json_text(with(
            header(common, &seq),
            json!({ "k_max": k_max, "points": sp.points, "truncated": sp.truncated }),
        )),
    };
    let (code, diagnostic) = match sp.truncated {
        Some(t) => (
            EXIT_BUDGET,
            Some(format!(
                "spectrum truncated before k = {}: needs {} LC evaluations, budget {}",
                t.k, t.required, t.budget
            )),
        ),
        None => (EXIT_OK, None),
    };
    Ok(Emitted { body, code, diagnostic })
}

fn verify(theorem: &str, common: &Common, k_max: Option<usize>, cfg: &SearchConfig) -> Result<Emitted> {
    let variant: TheoremVariant = theorem.parse()?;
    let params = common.params()?;
    let index_set = match (&common.set, variant) {
        (Some(raw), _) => SetChoice::parse(raw, common.p)?.index_set(common.p),
        (None, TheoremVariant::Corollary) => ClassSet::threshold(common.p),
        (None, TheoremVariant::FpUpperLegendre) => ClassSet::nonresidues(common.p),
        (None, _) => return Err(Error::Parameter("--set is required for this theorem".into())),
    };
    let spec = TheoremSpec::new(params, index_set, variant)?;
    let report = verify_theorem(&spec, k_max, cfg)?;
    let body = match common.format {
        Format::Text => {
            let mut s = format!(
                "{} p={} w={} field={} set={}\n",
                report.theorem, report.p, report.w, report.field, report.index_set
            );
            for r in &report.rows {
                let claim = match (r.claim, r.method) {
                    (Some(c), Some(m)) => format!("{c} ({m})"),
                    _ => "-".to_string(),
                };
                s.push_str(&format!(
                    "{} k={} exhaustive={} claim={} {:?}\n",
                    r.sequence, r.k, r.exhaustive, claim, r.status
                ));
            }
            if let Some(same) = report.spectra_identical {
                s.push_str(&format!("spectra identical: {same}\n"));
            }
            s.push_str(if report.passed { "PASSED\n" } else { "FAILED\n" });
            s
        }
        Format::Csv => {
            let mut s = String::from("sequence,k,exhaustive,claim,method,status\n");
            for r in &report.rows {
                let claim = r.claim.map(|c| c.to_string()).unwrap_or_default();
                let method = r.method.map(|m| m.to_string()).unwrap_or_default();
                let status = serde_json::to_value(r.status).expect("status serializes");
                s.push_str(&format!(
                    "{},{},{},{claim},{method},{}\n",
                    r.sequence.replace(',', ";"),
                    r.k,
                    r.exhaustive,
                    status.as_str().unwrap_or_default()
                ));
            }
            s
        }
        Format::Json => json_text(serde_json::to_value(&report).expect("report serializes")),
    };
    let (code, diagnostic) = if report.passed {
        (EXIT_OK, None)
    } else {
        (EXIT_MISMATCH, Some(format!("{} does not match exhaustive search", report.theorem)))
    };
    Ok(Emitted { body, code, diagnostic })
}

fn dispatch(config: &RunConfig, env_budget: Option<&str>) -> Result<(Emitted, Option<PathBuf>)> {
    let (emitted, common) = match &config.command {
        Command::Generate { common } => (generate(common)?, common),
        Command::Lc { common, engine } => (lc(common, *engine)?, common),
        Command::Klc { common, k, search } => (klc(common, *k, &search.config(env_budget)?)?, common),
        Command::Spectrum { common, k_max, search } => {
            (spectrum_cmd(common, *k_max, &search.config(env_budget)?)?, common)
        }
        Command::Verify { theorem, common, k_max, search } => {
            (verify(theorem, common, *k_max, &search.config(env_budget)?)?, common)
        }
    };
    Ok((emitted, common.out.clone()))
}

/// Execute one command, writing the artifact to `out` (or `--out`) and
/// diagnostics to `err`. Returns the exit status.
pub fn run(config: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let env_budget = std::env::var(BUDGET_ENV).ok();
    run_with_env(config, env_budget.as_deref(), out, err)
}

pub fn run_with_env(config: &RunConfig, env_budget: Option<&str>, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    match dispatch(config, env_budget) {
        Ok((emitted, path)) => {
            let written = match path {
                Some(path) => File::create(&path).and_then(|mut f| f.write_all(emitted.body.as_bytes())),
                None => out.write_all(emitted.body.as_bytes()),
            };
            if let Err(e) = written {
                let _ = writeln!(err, "error: cannot write output: {e}");
                return EXIT_CONFIG;
            }
            if let Some(d) = emitted.diagnostic {
                let _ = writeln!(err, "{d}");
            }
            emitted.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

/// Parse `args` (without the program name) and run.
pub fn run_args<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let argv = std::iter::once(std::ffi::OsString::from("pqseq")).chain(args.into_iter().map(Into::into));
    match RunConfig::try_parse_from(argv) {
        Ok(config) => run(&config, out, err),
        Err(e) => {
            let _ = write!(err, "{e}");
            if e.use_stderr() {
                EXIT_CONFIG
            } else {
                EXIT_OK
            }
        }
    }
}
