//! `emotion`: lexicon tooling, analysis, dataset building, training,
//! evaluation and reports.
//!
//! Exit codes: 0 ok, 1 I/O, 2 missing model or lexicon, 3 empty result,
//! 4 invalid data or arguments.

mod commands;
mod exit;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use emotion_core::classifier::Backend;
use emotion_core::config::RunConfig;

use crate::exit::{CliResult, Failure};

#[derive(Parser, Debug)]
#[command(name = "emotion", version, about = "Six-category emotion analysis of short texts")]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,

    #[command(subcommand)]
    command: Command,
}

/// Options shared by every command. Flags win over the config file.
#[derive(Args, Debug, Default)]
pub struct GlobalArgs {
    /// TOML run configuration
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,

    /// Directory with lexicon.tsv, degree_words.tsv, locations.tsv, ...
    /// [default: $EMOTION_DATA_DIR]
    #[arg(long, global = true, value_name = "DIR")]
    data_dir: Option<PathBuf>,

    #[arg(long, global = true, value_name = "FILE")]
    lexicon: Option<PathBuf>,

    /// Tokens scanned to the left of a hit for degree words
    #[arg(long, global = true)]
    degree_window: Option<usize>,

    /// Weight given to the classifier when combining
    #[arg(long, global = true)]
    classifier_weight: Option<f64>,

    #[arg(long, global = true, value_enum)]
    backend: Option<BackendArg>,

    /// RNG seed for the train/test split
    #[arg(long, global = true)]
    seed: Option<u64>,

    #[arg(long, global = true)]
    test_fraction: Option<f64>,

    #[arg(long, global = true)]
    max_depth: Option<usize>,

    #[arg(long, global = true)]
    min_leaf: Option<usize>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum BackendArg {
    Bayes,
    Tree,
}

impl From<BackendArg> for Backend {
    fn from(b: BackendArg) -> Self {
        match b {
            BackendArg::Bayes => Backend::Bayes,
            BackendArg::Tree => Backend::Tree,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, ValueEnum)]
pub enum Format {
    #[default]
    Tsv,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Lexicon tooling
    #[command(subcommand)]
    Lexicon(LexiconCmd),
    /// Analyze texts with the rule-based scorer and a trained model
    Analyze(commands::AnalyzeArgs),
    /// Build labeled training data from a raw corpus
    #[command(subcommand)]
    Dataset(DatasetCmd),
    /// Split, train and save a model, printing the held-out report
    Train(commands::TrainArgs),
    /// Print the held-out evaluation report
    Eval(commands::EvalArgs),
    /// Aggregate reports over a corpus
    #[command(subcommand)]
    Report(ReportCmd),
}

#[derive(Subcommand, Debug)]
enum LexiconCmd {
    /// Propose candidate words by walking a synonym graph from seeds
    Build(commands::LexiconBuildArgs),
    /// Load and check every resource file
    Validate(commands::LexiconValidateArgs),
}

#[derive(Subcommand, Debug)]
enum DatasetCmd {
    /// Ingest, select by seeds, auto-label and write the labeled corpus
    Build(commands::DatasetBuildArgs),
}

#[derive(Subcommand, Debug)]
enum ReportCmd {
    /// Time series of mean emotion percentages, for one author or all
    User(commands::UserReportArgs),
    /// Per-location aggregates with circle radii
    Location(commands::LocationReportArgs),
    /// Rule-based distribution of each document
    Document(commands::DocumentReportArgs),
}

impl GlobalArgs {
    /// Config file (or defaults) with flags applied on top.
    pub fn run_config(&self) -> CliResult<RunConfig> {
        let mut c = match &self.config {
            Some(p) => RunConfig::load(p)?,
            None => RunConfig::default(),
        };
        if let Some(v) = &self.data_dir {
            c.data_dir = Some(v.clone());
        } else if c.data_dir.is_none() {
            c.data_dir = std::env::var_os(commands::DATA_DIR_ENV).map(PathBuf::from);
        }
        if let Some(v) = &self.lexicon {
            c.lexicon = Some(v.clone());
        }
        if let Some(v) = self.degree_window {
            c.degree_window = v;
        }
        if let Some(v) = self.classifier_weight {
            c.classifier_weight = v;
        }
        if let Some(v) = self.backend {
            c.backend = v.into();
        }
        if let Some(v) = self.seed {
            c.seed = v;
        }
        if let Some(v) = self.test_fraction {
            c.test_fraction = v;
        }
        if let Some(v) = self.max_depth {
            c.max_depth = v;
        }
        if let Some(v) = self.min_leaf {
            c.min_leaf = v;
        }
        c.validate()?;
        Ok(c)
    }
}

fn run(cli: Cli) -> CliResult {
    let config = cli.global.run_config()?;
    match cli.command {
        Command::Lexicon(LexiconCmd::Build(a)) => commands::lexicon_build(&config, a),
        Command::Lexicon(LexiconCmd::Validate(a)) => commands::lexicon_validate(&config, a),
        Command::Analyze(a) => commands::analyze(&config, a),
        Command::Dataset(DatasetCmd::Build(a)) => commands::dataset_build(&config, a),
        Command::Train(a) => commands::train(&config, a),
        Command::Eval(a) => commands::eval(&config, a),
        Command::Report(ReportCmd::User(a)) => commands::report_user(&config, a),
        Command::Report(ReportCmd::Location(a)) => commands::report_location(&config, a),
        Command::Report(ReportCmd::Document(a)) => commands::report_document(&config, a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(exit::INVALID)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure { code, error }) => {
            eprintln!("error: {error:#}");
            ExitCode::from(code)
        }
    }
}
