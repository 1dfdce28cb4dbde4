use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Args};
use emotion_core::classifier::{evaluate, load_model, save_model, EvalReport};
use emotion_core::config::RunConfig;
use emotion_core::dataset::{ingest, split, Corpus, LabeledCorpus, SeedWordSet};
use emotion_core::hybrid::analyze as analyze_document;
use emotion_core::lexicon::{build_candidates, parse_seed_pairs, EntryKind, ThesaurusGraph};
use emotion_core::pipeline::{build_dataset, test_examples, train_and_evaluate};
use emotion_core::report::{
    document_report, document_tsv, location_report, location_tsv, time_series, time_series_tsv,
};
use emotion_core::resources::{builtin, SEEDS_FILE};
use emotion_core::stem::stem;
use emotion_core::{Document, Resources};
use serde::Serialize;

use crate::exit::{self, CliResult, Failure};
use crate::Format;

pub const DATA_DIR_ENV: &str = "EMOTION_DATA_DIR";
const DEFAULT_MODEL: &str = "emotion.model";
const THESAURUS_FILE: &str = "thesaurus.tsv";

fn resources(config: &RunConfig) -> CliResult<Resources> {
    if let Some(dir) = &config.data_dir {
        if !dir.is_dir() {
            return Err(Failure::msg(
                exit::MISSING,
                format!("data directory {} does not exist", dir.display()),
            ));
        }
    }
    Ok(config.resources()?)
}

/// An explicit path, else `name` inside the data directory, else `None`.
fn data_file(explicit: Option<&Path>, config: &RunConfig, name: &str) -> Option<PathBuf> {
    if let Some(p) = explicit {
        return Some(p.to_path_buf());
    }
    config
        .data_dir
        .as_ref()
        .map(|d| d.join(name))
        .filter(|p| p.is_file())
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path)
        .map_err(|e| Failure::new(exit::IO, e).context(format!("cannot read {}", path.display())))
}

/// Writes to `out`, or standard output when absent.
fn emit(out: Option<&Path>, text: &str) -> CliResult {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| {
            Failure::new(exit::IO, e).context(format!("cannot write {}", p.display()))
        }),
        None => {
            let mut stdout = io::stdout().lock();
            match stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()) {
                Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(Failure::new(exit::IO, e)),
                _ => Ok(()),
            }
        }
    }
}

fn json_lines<T: Serialize>(rows: impl IntoIterator<Item = T>) -> String {
    let mut out = String::new();
    for row in rows {
        out.push_str(&serde_json::to_string(&row).expect("report rows serialize"));
        out.push('\n');
    }
    out
}

fn seeds(explicit: Option<&Path>, config: &RunConfig, res: &Resources) -> CliResult<SeedWordSet> {
    let explicit = explicit.or(config.seeds.as_deref());
    Ok(match data_file(explicit, config, SEEDS_FILE) {
        Some(p) => SeedWordSet::load(p, &res.lexicon)?,
        None => SeedWordSet::parse(builtin::SEEDS, &res.lexicon)?,
    })
}

fn corpus(explicit: Option<&Path>, config: &RunConfig) -> CliResult<Corpus> {
    let path = explicit.or(config.corpus.as_deref()).ok_or_else(|| {
        Failure::msg(exit::INVALID, "no corpus given (use --corpus or `corpus` in the config)")
    })?;
    Ok(ingest(path)?)
}

fn model_path(explicit: Option<&Path>, config: &RunConfig) -> PathBuf {
    explicit
        .or(config.model.as_deref())
        .map_or_else(|| PathBuf::from(DEFAULT_MODEL), Path::to_path_buf)
}

#[derive(Args, Debug)]
pub struct LexiconBuildArgs {
    /// Synonym graph, `word<TAB>synonym...` per line
    #[arg(long, value_name = "FILE")]
    thesaurus: Option<PathBuf>,

    /// Seed words, `word<TAB>CATEGORY` per line
    #[arg(long, value_name = "FILE")]
    seeds: Option<PathBuf>,

    /// Synonym levels to follow from each seed
    #[arg(long, default_value_t = 2)]
    depth: usize,

    #[arg(long, short, value_name = "FILE")]
    out: Option<PathBuf>,
}

/// Candidate rows `word, category, depth, known`, where `known` names the
/// category the current lexicon already gives the word (or `-`).
pub fn lexicon_build(config: &RunConfig, args: LexiconBuildArgs) -> CliResult {
    let res = resources(config)?;
    let graph = match data_file(args.thesaurus.as_deref(), config, THESAURUS_FILE) {
        Some(p) => ThesaurusGraph::load(p)?,
        None => ThesaurusGraph::parse(builtin::THESAURUS)?,
    };
    let seed_text = match data_file(
        args.seeds.as_deref().or(config.seeds.as_deref()),
        config,
        SEEDS_FILE,
    ) {
        Some(p) => read(&p)?,
        None => builtin::SEEDS.to_string(),
    };
    // emoticon seeds have no synonyms
    let seeds: Vec<_> = parse_seed_pairs(&seed_text)?
        .into_iter()
        .filter(|(w, _)| res.lexicon.lookup(w, EntryKind::Emoticon).is_none())
        .collect();
    let candidates = build_candidates(&graph, &seeds, args.depth)?;
    let mut out = String::from("word\tcategory\tdepth\tknown\n");
    for c in &candidates {
        let known = res
            .lexicon
            .lookup(&stem(&c.word), EntryKind::Word)
            .map_or("-", |e| e.category.name());
        out.push_str(&format!("{}\t{}\t{}\t{}\n", c.word, c.category, c.depth, known));
    }
    emit(args.out.as_deref(), &out)
}

#[derive(Args, Debug)]
pub struct LexiconValidateArgs {
    /// Also check this seed file against the lexicon
    #[arg(long, value_name = "FILE")]
    seeds: Option<PathBuf>,
}

pub fn lexicon_validate(config: &RunConfig, args: LexiconValidateArgs) -> CliResult {
    let res = resources(config)?;
    let seeds = seeds(args.seeds.as_deref(), config, &res)?;
    let out = format!(
        "emotion words\t{}\nemoticons\t{}\ndegree words\t{}\nlocations\t{}\nstop words\t{}\nseeds\t{}\n",
        res.lexicon.count(EntryKind::Word),
        res.lexicon.count(EntryKind::Emoticon),
        res.degree_words.len(),
        res.locations.areas().len(),
        res.stopwords.len(),
        seeds.len(),
    );
    emit(None, &out)
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("source").required(true).args(["text", "input"])))]
pub struct AnalyzeArgs {
    /// Text to analyze; may be repeated
    #[arg(long, short, conflicts_with = "input")]
    text: Vec<String>,

    /// One text per line (or corpus records with --jsonl); `-` reads stdin
    #[arg(long, short, value_name = "FILE")]
    input: Option<PathBuf>,

    /// Read the input as JSON-lines corpus records
    #[arg(long, requires = "input")]
    jsonl: bool,

    #[arg(long, short, value_name = "FILE")]
    model: Option<PathBuf>,

    #[arg(long, short, value_name = "FILE")]
    out: Option<PathBuf>,
}

/// Plain-text input: one document per non-blank line, id = line number.
fn line_documents(text: &str) -> Vec<Document> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(n, l)| Document::new((n + 1).to_string(), l))
        .collect()
}

pub fn analyze(config: &RunConfig, args: AnalyzeArgs) -> CliResult {
    let res = resources(config)?;
    let path = model_path(args.model.as_deref(), config);
    let model = load_model(&path)
        .map_err(|e| Failure::from(e).context(format!("model {}", path.display())))?;

    let documents = match &args.input {
        Some(p) => {
            let text = if p.as_os_str() == "-" {
                let mut s = String::new();
                io::stdin()
                    .read_to_string(&mut s)
                    .map_err(|e| Failure::new(exit::IO, e))?;
                s
            } else {
                read(p)?
            };
            if args.jsonl {
                emotion_core::dataset::parse_records(&text)?
            } else {
                line_documents(&text)
            }
        }
        None => args
            .text
            .iter()
            .enumerate()
            .map(|(i, t)| Document::new((i + 1).to_string(), t.as_str()))
            .collect(),
    };

    let text_config = config.text_config();
    let hybrid = config.hybrid_config();
    let results = documents
        .iter()
        .map(|d| analyze_document(d, &res, &model, &text_config, &hybrid))
        .collect::<Result<Vec<_>, _>>()?;
    emit(args.out.as_deref(), &json_lines(&results))
}

#[derive(Args, Debug)]
pub struct DatasetBuildArgs {
    /// Raw corpus, JSON lines
    #[arg(long, value_name = "FILE")]
    corpus: Option<PathBuf>,

    #[arg(long, value_name = "FILE")]
    seeds: Option<PathBuf>,

    /// Minimum top percentage; a document must exceed it strictly
    #[arg(long)]
    threshold: Option<f64>,

    /// Labeled corpus output
    #[arg(long, short, value_name = "FILE", default_value = "labeled.tsv")]
    out: PathBuf,
}

pub fn dataset_build(config: &RunConfig, args: DatasetBuildArgs) -> CliResult {
    let res = resources(config)?;
    let seeds = seeds(args.seeds.as_deref(), config, &res)?;
    let corpus = corpus(args.corpus.as_deref(), config)?;
    let threshold = args.threshold.unwrap_or(config.purity_threshold);
    let build = build_dataset(&corpus, &seeds, &res, &config.text_config(), threshold)?;
    eprintln!(
        "ingested {} (duplicates dropped {}), seed-selected {}, labeled {}",
        build.ingested,
        build.duplicates_dropped,
        build.selected,
        build.labeled.len()
    );
    if build.labeled.is_empty() {
        return Err(Failure::msg(
            exit::EMPTY,
            "no document passed seed selection and the purity threshold",
        ));
    }
    build.labeled.save(&args.out)?;
    emit(None, &build.report.to_string())
}

#[derive(Args, Debug)]
pub struct TrainArgs {
    /// Labeled corpus from `dataset build`
    #[arg(long, value_name = "FILE")]
    labeled: PathBuf,

    /// Where to write the model
    #[arg(long, short, value_name = "FILE")]
    model: Option<PathBuf>,

    /// Print the report as JSON
    #[arg(long)]
    json: bool,
}

fn print_report(report: &EvalReport, json: bool) -> CliResult {
    if json {
        emit(None, &json_lines([report]))
    } else {
        emit(None, &report.to_string())
    }
}

pub fn train(config: &RunConfig, args: TrainArgs) -> CliResult {
    let res = resources(config)?;
    let labeled = LabeledCorpus::load(&args.labeled)?;
    let trained = train_and_evaluate(
        &labeled,
        &res,
        &config.train_config(),
        config.test_fraction,
        config.seed,
    )?;
    let path = model_path(args.model.as_deref(), config);
    save_model(&trained.model, &path)
        .map_err(|e| Failure::new(exit::IO, e).context(format!("model {}", path.display())))?;
    eprintln!(
        "trained {} on {} documents, tested on {}, saved {}",
        trained.model.backend(),
        trained.train.len(),
        trained.test.len(),
        path.display()
    );
    print_report(&trained.report, args.json)
}

#[derive(Args, Debug)]
pub struct EvalArgs {
    /// Labeled corpus from `dataset build`
    #[arg(long, value_name = "FILE")]
    labeled: PathBuf,

    /// Evaluate this saved model on the test split instead of training one
    #[arg(long, short, value_name = "FILE")]
    model: Option<PathBuf>,

    /// Print the report as JSON
    #[arg(long)]
    json: bool,
}

pub fn eval(config: &RunConfig, args: EvalArgs) -> CliResult {
    let res = resources(config)?;
    let labeled = LabeledCorpus::load(&args.labeled)?;
    let report = match &args.model {
        Some(path) => {
            let model = load_model(path)
                .map_err(|e| Failure::from(e).context(format!("model {}", path.display())))?;
            let (_, test) = split(&labeled, config.test_fraction, config.seed)?;
            evaluate(&model, &test_examples(&model, &test))?
        }
        None => {
            train_and_evaluate(
                &labeled,
                &res,
                &config.train_config(),
                config.test_fraction,
                config.seed,
            )?
            .report
        }
    };
    print_report(&report, args.json)
}

#[derive(Args, Debug)]
pub struct UserReportArgs {
    #[arg(long, value_name = "FILE")]
    corpus: Option<PathBuf>,

    /// Only documents by this author
    #[arg(long)]
    user: Option<String>,

    /// Bucket width in hours
    #[arg(long, default_value_t = 24, value_parser = clap::value_parser!(u32).range(1..))]
    bucket_hours: u32,

    #[arg(long, value_enum, default_value_t)]
    format: Format,

    #[arg(long, short, value_name = "FILE")]
    out: Option<PathBuf>,
}

pub fn report_user(config: &RunConfig, args: UserReportArgs) -> CliResult {
    let res = resources(config)?;
    let mut documents = corpus(args.corpus.as_deref(), config)?.into_documents();
    if let Some(user) = &args.user {
        documents.retain(|d| d.author.as_deref().is_some_and(|a| a.eq_ignore_ascii_case(user)));
        if documents.is_empty() {
            return Err(Failure::msg(exit::EMPTY, format!("no documents by `{user}`")));
        }
    }
    let width = chrono::Duration::hours(i64::from(args.bucket_hours));
    let buckets = time_series(&documents, &res, &config.text_config(), width)?;
    let text = match args.format {
        Format::Tsv => time_series_tsv(&buckets),
        Format::Json => json_lines(&buckets),
    };
    emit(args.out.as_deref(), &text)
}

#[derive(Args, Debug)]
pub struct LocationReportArgs {
    #[arg(long, value_name = "FILE")]
    corpus: Option<PathBuf>,

    #[arg(long, value_enum, default_value_t)]
    format: Format,

    #[arg(long, short, value_name = "FILE")]
    out: Option<PathBuf>,
}

pub fn report_location(config: &RunConfig, args: LocationReportArgs) -> CliResult {
    let res = resources(config)?;
    let documents = corpus(args.corpus.as_deref(), config)?.into_documents();
    let report = location_report(&documents, &res, &config.text_config())?;
    if report.unknown_locations > 0 {
        eprintln!(
            "warning: skipped {} document(s) with unknown locations",
            report.unknown_locations
        );
    }
    let text = match args.format {
        Format::Tsv => location_tsv(&report),
        Format::Json => json_lines(&report.records),
    };
    emit(args.out.as_deref(), &text)
}

#[derive(Args, Debug)]
pub struct DocumentReportArgs {
    #[arg(long, value_name = "FILE")]
    corpus: Option<PathBuf>,

    #[arg(long, value_enum, default_value_t)]
    format: Format,

    #[arg(long, short, value_name = "FILE")]
    out: Option<PathBuf>,
}

pub fn report_document(config: &RunConfig, args: DocumentReportArgs) -> CliResult {
    let res = resources(config)?;
    let documents = corpus(args.corpus.as_deref(), config)?.into_documents();
    if documents.is_empty() {
        return Err(Failure::msg(exit::EMPTY, "corpus is empty"));
    }
    let rows = document_report(&documents, &res, &config.text_config())?;
    let text = match args.format {
        Format::Tsv => document_tsv(&rows),
        Format::Json => json_lines(&rows),
    };
    emit(args.out.as_deref(), &text)
}
