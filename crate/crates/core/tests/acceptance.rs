//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Run with `cargo test -p emotion-core --test acceptance`.

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{self, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use emotion_core::classifier::{
    save_model, train, Backend, ClassifierModel, Featurizer, TrainConfig, TrainingSet,
};
use emotion_core::config::{DEFAULT_SEED, DEFAULT_TEST_FRACTION};
use emotion_core::dataset::{
    auto_label, ingest, select_by_seeds, Corpus, DEFAULT_PURITY_THRESHOLD, SeedWordSet,
};
use emotion_core::hybrid::{analyze, combine, surety, HybridConfig, SuretyInputs};
use emotion_core::lexicon::{EmotionCategory, EntryKind, IntensityCategory, DegreeIntensity};
use emotion_core::pipeline::{build_dataset, train_and_evaluate};
use emotion_core::resources::builtin;
use emotion_core::scoring::{emot_score, per_score, rel_score, score, ScoreVector};
use emotion_core::textpipe::{find_hits, resolve_person, segment, StopWords};
use emotion_core::{Document, Hit, Person, Resources, TextConfig};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Check = (&'static str, fn() -> Outcome, Option<Duration>);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        #[allow(clippy::neg_cmp_op_on_partial_ord)]
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

const CATEGORIES: [EmotionCategory; 6] = EmotionCategory::ALL;
const INTENSITIES: [IntensityCategory; 3] =
    [IntensityCategory::Strong, IntensityCategory::Medium, IntensityCategory::Light];
const DEGREES: [DegreeIntensity; 4] = [
    DegreeIntensity::Absent,
    DegreeIntensity::High,
    DegreeIntensity::Low,
    DegreeIntensity::Negation,
];
const PERSONS: [Person; 3] = [Person::First, Person::Second, Person::Third];

/// Word scores transcribed from the published table, rows STRONG, MEDIUM,
/// LIGHT and columns None, H, L, N.
const WORD_TABLE: [[u64; 4]; 3] = [[6, 8, 6, 2], [4, 6, 6, 4], [2, 6, 4, 4]];
const EMOTICON_TABLE: [(IntensityCategory, u64); 2] =
    [(IntensityCategory::Strong, 80), (IntensityCategory::Medium, 40)];
const PERSON_TABLE: [(Person, u64); 3] = [(Person::First, 10), (Person::Second, 2), (Person::Third, 1)];

fn table_word(i: IntensityCategory, d: DegreeIntensity) -> u64 {
    let row = INTENSITIES.iter().position(|&x| x == i).unwrap();
    let col = DEGREES.iter().position(|&x| x == d).unwrap();
    WORD_TABLE[row][col]
}

fn table_person(p: Person) -> u64 {
    PERSON_TABLE.iter().find(|(q, _)| *q == p).unwrap().1
}

fn sample_corpus_path() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data/sample_corpus.jsonl")
}

fn check_scoring_tables() -> Outcome {
    let mut cases = 0;
    for (r, &i) in INTENSITIES.iter().enumerate() {
        for (c, &d) in DEGREES.iter().enumerate() {
            let got = emot_score(EntryKind::Word, i, d).map_err(|e| e.to_string())?;
            ensure!(got == WORD_TABLE[r][c], "word {i}/{d}: got {got}, table says {}", WORD_TABLE[r][c]);
            cases += 1;
        }
    }
    for (i, want) in EMOTICON_TABLE {
        let got = emot_score(EntryKind::Emoticon, i, DegreeIntensity::Absent).map_err(|e| e.to_string())?;
        ensure!(got == want, "emoticon {i}: got {got}, table says {want}");
        cases += 1;
    }
    ensure!(
        emot_score(EntryKind::Emoticon, IntensityCategory::Light, DegreeIntensity::Absent).is_err(),
        "LIGHT emoticon accepted"
    );
    for (p, want) in PERSON_TABLE {
        let got = per_score(p);
        ensure!(got == want, "person {p}: got {got}, table says {want}");
        cases += 1;
    }
    Ok(format!("{cases} table cells exact"))
}

fn random_hit(rng: &mut ChaCha8Rng) -> Hit {
    let emoticon = rng.gen_bool(0.2);
    let category = CATEGORIES[rng.gen_range(0..6)];
    let (kind, intensity, degree) = if emoticon {
        (EntryKind::Emoticon, INTENSITIES[rng.gen_range(0..2)], DegreeIntensity::Absent)
    } else {
        (EntryKind::Word, INTENSITIES[rng.gen_range(0..3)], DEGREES[rng.gen_range(0..4)])
    };
    Hit {
        lemma: format!("w{}", rng.gen_range(0..50)),
        kind,
        category,
        intensity,
        degree,
        person: PERSONS[rng.gen_range(0..3)],
        sentence_index: rng.gen_range(0..3),
        token_index: rng.gen_range(0..30),
    }
}

/// Brute-force Score: one pass over the hits with the published tables and
/// the negation flips written out by hand.
fn oracle_score(hits: &[Hit]) -> [u64; 6] {
    let mut out = [0u64; 6];
    for h in hits {
        let base = match h.kind {
            EntryKind::Word => table_word(h.intensity, h.degree),
            EntryKind::Emoticon => EMOTICON_TABLE.iter().find(|(i, _)| *i == h.intensity).unwrap().1,
        };
        let target = if h.degree == DegreeIntensity::Negation {
            match h.category {
                EmotionCategory::Happiness => Some(1),
                EmotionCategory::Sadness | EmotionCategory::Anger => Some(0),
                _ => None,
            }
        } else {
            Some(CATEGORIES.iter().position(|&c| c == h.category).unwrap())
        };
        if let Some(t) = target {
            out[t] += base * table_person(h.person);
        }
    }
    out
}

fn check_score_oracle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut scored = 0;
    for n in 0..1000 {
        let len = rng.gen_range(0..=20);
        let hits: Vec<Hit> = (0..len).map(|_| random_hit(&mut rng)).collect();
        let want = oracle_score(&hits);
        let got = score(&hits).map_err(|e| e.to_string())?;
        ensure!(got.0 == want, "list {n}: engine {:?}, oracle {want:?}", got.0);
        let rel = rel_score(&got);
        let total: u64 = want.iter().sum();
        if total > 0 {
            scored += 1;
            let sum: f64 = rel.0.iter().sum();
            ensure!((sum - 100.0).abs() <= 1e-9, "list {n}: RelScore sums to {sum}");
            for (c, &w) in want.iter().enumerate() {
                let direct = w as f64 / total as f64 * 100.0;
                ensure!((rel.0[c] - direct).abs() <= 1e-9, "list {n}: RelScore[{c}] {} vs {direct}", rel.0[c]);
            }
        } else {
            ensure!(rel.0 == [0.0; 6], "list {n}: zero score gave RelScore {:?}", rel.0);
        }
    }
    Ok(format!("1000 lists equal to oracle, {scored} with positive score"))
}

fn check_worked_examples() -> Outcome {
    let res = Resources::builtin();
    let cfg = TextConfig::default();
    let s = |t: &str| score(&find_hits(t, &res, &cfg)).map_err(|e| e.to_string());
    let medium = |d| table_word(IntensityCategory::Medium, d);
    let sad = EmotionCategory::Sadness;
    let happy = EmotionCategory::Happiness;

    // "sad" is MEDIUM sadness in the shipped lexicon
    let first = s("I am sad")?;
    let third = s("He is sad")?;
    ensure!(first[sad] == medium(DegreeIntensity::Absent) * 10, "I am sad: {:?}", first.0);
    ensure!(third[sad] == medium(DegreeIntensity::Absent), "He is sad: {:?}", third.0);
    ensure!(first[sad] > third[sad], "first person not higher");

    // "excited" is MEDIUM happiness; negated, no subject, so first person
    let neg = s("Not at all feeling excited")?;
    ensure!(neg[happy] == 0, "negated HAPPINESS is {}", neg[happy]);
    ensure!(neg[sad] == medium(DegreeIntensity::Negation) * 10, "negated SADNESS is {}", neg[sad]);

    let sentences = segment("Nice to see you", &res.stopwords, &res.pronouns);
    let person = resolve_person(&sentences[0], 0, &res.pronouns);
    ensure!(person == Person::First, "Nice to see you resolved to {person}");
    let hits = find_hits("Nice to see you", &res, &cfg);
    ensure!(
        hits.len() == 1 && hits[0].person == Person::First,
        "Nice to see you hits: {hits:?}"
    );
    Ok(format!(
        "SADNESS {} > {}; negated excited gives H=0 S={}; Nice -> FIRST",
        first[sad], third[sad], neg[sad]
    ))
}

fn check_combine() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for n in 0..1000 {
        let mut s = [0u64; 6];
        for v in &mut s {
            if rng.gen_bool(0.6) {
                *v = rng.gen_range(0..5000);
            }
        }
        if n % 10 == 0 {
            // forced ties and the all-zero case
            s[rng.gen_range(0..6)] = s[rng.gen_range(0..6)];
            if n % 100 == 0 {
                s = [0; 6];
            }
        }
        let lc = CATEGORIES[rng.gen_range(0..6)];
        let score = ScoreVector(s);
        let fin = combine(&score, lc, 0.2);

        let mut mc = 0;
        for i in 1..6 {
            if s[i] > s[mc] {
                mc = i;
            }
        }
        let l = lc.index();
        let direct = s[l] as f64 + 0.2 * s[mc] as f64;
        ensure!(fin.0[l] == direct, "pair {n}: FinalScore[Lc] {} vs {direct}", fin.0[l]);
        ensure!(fin.0[l] >= s[l] as f64, "pair {n}: FinalScore[Lc] decreased");
        let changed = (0..6).filter(|&i| fin.0[i].to_bits() != (s[i] as f64).to_bits()).count();
        ensure!(changed <= 1, "pair {n}: {changed} components changed");
        for i in (0..6).filter(|&i| i != l) {
            ensure!(fin.0[i].to_bits() == (s[i] as f64).to_bits(), "pair {n}: component {i} changed");
        }
    }
    Ok("1000 pairs match direct arithmetic, at most one component changes".into())
}

/// A lexicon word of the given category and intensity that the pipeline
/// will see as a plain token.
fn word_of(res: &Resources, category: EmotionCategory, intensity: IntensityCategory) -> String {
    res.lexicon
        .entries()
        .iter()
        .find(|e| {
            e.kind == EntryKind::Word
                && e.category == category
                && e.intensity == intensity
                && e.surface.chars().all(|c| c.is_ascii_lowercase())
                && !res.stopwords.contains(&e.surface)
                && res.degree_words.get(&e.surface).is_none()
                && res.pronouns.person_of(&e.surface).is_none()
        })
        .map(|e| e.surface.clone())
        .expect("lexicon has such a word")
}

fn check_threshold() -> Outcome {
    let res = Resources::builtin();
    let cfg = TextConfig::default();
    let h = EmotionCategory::Happiness;
    let s = EmotionCategory::Sadness;
    let hs = word_of(&res, h, IntensityCategory::Strong);
    let hl = word_of(&res, h, IntensityCategory::Light);
    let ss = word_of(&res, s, IntensityCategory::Strong);

    // third person: HAPPINESS 6 + 6 + 2 = 14, SADNESS 6, so exactly 70%
    let exact = format!("He is {hs}. He is {hs}. He is {hl}. He is {ss}.");
    // first person HAPPINESS 60 + 60 + 20, third person 2, SADNESS 60: 142/202
    let above = format!("I am {hs}. I am {hs}. I am {hl}. He is {hl}. I am {ss}.");
    let want_above = 142.0 / 202.0 * 100.0;

    let docs = Corpus::from_documents(vec![
        Document::new("exact", exact.clone()),
        Document::new("above", above.clone()),
    ])
    .map_err(|e| e.to_string())?;
    let rel_exact = rel_score(&score(&find_hits(&exact, &res, &cfg)).map_err(|e| e.to_string())?);
    let rel_above = rel_score(&score(&find_hits(&above, &res, &cfg)).map_err(|e| e.to_string())?);
    ensure!(rel_exact.0[0] == 70.0 && rel_exact.0[1] == 30.0, "engineered 70% doc scored {:?}", rel_exact.0);
    ensure!(
        (rel_above.0[0] - want_above).abs() < 1e-9 && rel_above.0[0] > 70.0,
        "engineered 70+e doc scored {:?}",
        rel_above.0
    );
    let labeled = auto_label(&docs, &res, &cfg, 70.0).map_err(|e| e.to_string())?;
    let ids: Vec<&str> = labeled.entries.iter().map(|e| e.document.id.as_str()).collect();
    ensure!(ids == ["above"], "at 70 kept {ids:?}");

    let corpus = ingest(sample_corpus_path()).map_err(|e| e.to_string())?;
    let seeds = SeedWordSet::parse(builtin::SEEDS, &res.lexicon).map_err(|e| e.to_string())?;
    let selected = select_by_seeds(&corpus, &seeds, &res.lexicon);
    let mut kept: Vec<(f64, BTreeMap<String, EmotionCategory>)> = Vec::new();
    for t in [50.0, 60.0, 70.0, 80.0, 90.0] {
        let l = auto_label(&selected, &res, &cfg, t).map_err(|e| e.to_string())?;
        kept.push((t, l.entries.iter().map(|e| (e.document.id.clone(), e.label)).collect()));
    }
    for w in kept.windows(2) {
        let (lo, lo_set) = &w[0];
        let (hi, hi_set) = &w[1];
        for (id, label) in hi_set {
            ensure!(lo_set.get(id) == Some(label), "{id} kept at {hi} but not at {lo} with the same label");
        }
    }
    let sizes: Vec<String> = kept.iter().map(|(t, s)| format!("{t}:{}", s.len())).collect();
    Ok(format!(
        "70% rejected, {want_above:.3}% accepted; nested sets {}",
        sizes.join(" ")
    ))
}

fn check_end_to_end() -> Outcome {
    let res = Resources::builtin();
    let corpus = ingest(sample_corpus_path()).map_err(|e| e.to_string())?;
    let seeds = SeedWordSet::parse(builtin::SEEDS, &res.lexicon).map_err(|e| e.to_string())?;
    let build = build_dataset(&corpus, &seeds, &res, &TextConfig::default(), DEFAULT_PURITY_THRESHOLD)
        .map_err(|e| e.to_string())?;
    let mut parts = vec![format!("{} docs -> {} labeled", build.ingested, build.labeled.len())];
    let mut failed = Vec::new();
    for (backend, floor) in [(Backend::Bayes, 0.85), (Backend::Tree, 0.75)] {
        let run = train_and_evaluate(
            &build.labeled,
            &res,
            &TrainConfig::new(backend),
            DEFAULT_TEST_FRACTION,
            DEFAULT_SEED,
        )
        .map_err(|e| e.to_string())?;
        let r = &run.report;
        parts.push(format!("{backend} {}/{} = {:.1}%", r.correct, r.total, r.accuracy * 100.0));
        if r.accuracy < floor {
            failed.push(format!("{backend} below {:.0}%", floor * 100.0));
        }
    }
    if failed.is_empty() {
        Ok(parts.join("; "))
    } else {
        Err(format!("{} ({})", failed.join(", "), parts.join("; ")))
    }
}

fn toy_featurizer() -> Featurizer {
    Featurizer::new(&StopWords::from_words(["the", "a", "and", "of"]))
}

/// Independent log-space naive Bayes posterior from raw texts.
fn nb_oracle(rows: &[(Vec<String>, usize)], query: &[String]) -> [f64; 6] {
    let vocab: BTreeSet<&String> = rows.iter().flat_map(|(t, _)| t.iter()).collect();
    let v = vocab.len() as f64;
    let n_docs = rows.len() as f64;
    let known: Vec<&String> = query.iter().filter(|w| vocab.contains(w)).collect();
    let mut logp = [None; 6];
    for (c, slot) in logp.iter_mut().enumerate() {
        let docs: Vec<&Vec<String>> = rows.iter().filter(|r| r.1 == c).map(|r| &r.0).collect();
        if docs.is_empty() {
            continue;
        }
        let words: Vec<&String> = docs.iter().flat_map(|d| d.iter()).collect();
        let mut lp = (docs.len() as f64 / n_docs).ln();
        for w in &known {
            let count = words.iter().filter(|x| **x == *w).count() as f64;
            lp += ((count + 1.0) / (words.len() as f64 + v)).ln();
        }
        *slot = Some(lp);
    }
    let max = logp.iter().flatten().fold(f64::NEG_INFINITY, |a, &b| a.max(b));
    let w = logp.map(|l| l.map_or(0.0, |l| (l - max).exp()));
    let z: f64 = w.iter().sum();
    w.map(|x| x / z)
}

fn check_classifier_contracts() -> Outcome {
    let f = toy_featurizer();
    let mut rng = ChaCha8Rng::seed_from_u64(7);

    // naive Bayes against the oracle on small vocabularies
    let mut oracle_cases = 0;
    for fixture in 0..20 {
        let vocab_size = rng.gen_range(2..=20);
        let words: Vec<String> = (0..vocab_size).map(|i| format!("term{i}x")).collect();
        let classes = rng.gen_range(1..=6);
        let rows: Vec<(String, EmotionCategory)> = (0..rng.gen_range(5..40))
            .map(|_| {
                let len = rng.gen_range(1..6);
                let text: Vec<&str> = (0..len).map(|_| words[rng.gen_range(0..vocab_size)].as_str()).collect();
                (text.join(" "), CATEGORIES[rng.gen_range(0..classes)])
            })
            .collect();
        let set = TrainingSet::from_texts(f.clone(), rows.iter().map(|(t, c)| (t.as_str(), *c)));
        let model = train(&set, &TrainConfig::new(Backend::Bayes)).map_err(|e| e.to_string())?;
        let raw: Vec<(Vec<String>, usize)> = rows.iter().map(|(t, c)| (f.terms(t), c.index())).collect();
        for _ in 0..25 {
            let len = rng.gen_range(1..8);
            let query: Vec<String> = (0..len)
                .map(|_| {
                    if rng.gen_bool(0.2) {
                        "unseenword".to_string()
                    } else {
                        words[rng.gen_range(0..vocab_size)].clone()
                    }
                })
                .collect();
            let text = query.join(" ");
            let got = model.predict(&text).distribution;
            let want = nb_oracle(&raw, &f.terms(&text));
            for c in 0..6 {
                ensure!(
                    (got[c] - want[c]).abs() <= 1e-12,
                    "fixture {fixture} `{text}`: class {c} engine {} oracle {}",
                    got[c],
                    want[c]
                );
            }
            oracle_cases += 1;
        }
    }

    // separable toy set
    let happy = ["sun", "beach", "party", "cake", "music"];
    let sad = ["rain", "funeral", "loss", "grey", "alone"];
    let toy: Vec<(String, EmotionCategory)> = (0..10)
        .flat_map(|i| {
            [
                (format!("{} {}", happy[i % 5], happy[(i + 2) % 5]), EmotionCategory::Happiness),
                (format!("{} {}", sad[i % 5], sad[(i + 3) % 5]), EmotionCategory::Sadness),
            ]
        })
        .collect();
    let toy_set = TrainingSet::from_texts(f.clone(), toy.iter().map(|(t, c)| (t.as_str(), *c)));
    let mut models: Vec<ClassifierModel> = Vec::new();
    for backend in [Backend::Bayes, Backend::Tree] {
        let m = train(&toy_set, &TrainConfig::new(backend)).map_err(|e| e.to_string())?;
        let correct = toy.iter().filter(|(t, c)| m.predict(t).labeled_category == *c).count();
        ensure!(correct == toy.len(), "{backend} toy training accuracy {correct}/{}", toy.len());
        models.push(m);
    }

    // fuzzed distributions, on the toy models and on models trained from
    // the bundled corpus vocabulary
    let res = Resources::builtin();
    let corpus = ingest(sample_corpus_path()).map_err(|e| e.to_string())?;
    let seeds = SeedWordSet::parse(builtin::SEEDS, &res.lexicon).map_err(|e| e.to_string())?;
    let build = build_dataset(&corpus, &seeds, &res, &TextConfig::default(), DEFAULT_PURITY_THRESHOLD)
        .map_err(|e| e.to_string())?;
    for backend in [Backend::Bayes, Backend::Tree] {
        let split = train_and_evaluate(&build.labeled, &res, &TrainConfig::new(backend), 0.2, 1)
            .map_err(|e| e.to_string())?;
        models.push(split.model);
    }
    let pool: Vec<String> = models[2].vocabulary.words().iter().take(3000).cloned().collect();
    let junk = ["zzq", "Qwerty", "!!!", ":)", "#tag", "http://x.y", "the", "NOT", "sooo"];
    for n in 0..10_000 {
        let len = rng.gen_range(0..15);
        let text: Vec<&str> = (0..len)
            .map(|_| {
                if rng.gen_bool(0.3) {
                    junk[rng.gen_range(0..junk.len())]
                } else {
                    pool[rng.gen_range(0..pool.len())].as_str()
                }
            })
            .collect();
        let text = text.join(" ");
        let m = &models[n % models.len()];
        let d = m.predict(&text).distribution;
        let sum: f64 = d.iter().sum();
        ensure!((sum - 1.0).abs() <= 1e-9, "input {n} `{text}`: sums to {sum}");
        ensure!(d.iter().all(|&p| p >= 0.0 && p.is_finite()), "input {n}: {d:?}");
    }
    Ok(format!(
        "{oracle_cases} oracle queries within 1e-12; toy set 100% on both; 10000 fuzzed distributions sum to 1"
    ))
}

struct PipelineRun {
    labeled: String,
    models: Vec<Vec<u8>>,
    reports: Vec<String>,
    analysis: String,
}

fn full_run(dir: &Path, tag: &str) -> Result<PipelineRun, String> {
    let res = Resources::builtin();
    let cfg = TextConfig::default();
    let corpus = ingest(sample_corpus_path()).map_err(|e| e.to_string())?;
    let seeds = SeedWordSet::parse(builtin::SEEDS, &res.lexicon).map_err(|e| e.to_string())?;
    let build = build_dataset(&corpus, &seeds, &res, &cfg, DEFAULT_PURITY_THRESHOLD)
        .map_err(|e| e.to_string())?;
    let mut models = Vec::new();
    let mut reports = Vec::new();
    let mut analysis = String::new();
    for backend in [Backend::Bayes, Backend::Tree] {
        let run = train_and_evaluate(
            &build.labeled,
            &res,
            &TrainConfig::new(backend),
            DEFAULT_TEST_FRACTION,
            DEFAULT_SEED,
        )
        .map_err(|e| e.to_string())?;
        let path = dir.join(format!("{tag}-{backend}.model"));
        save_model(&run.model, &path).map_err(|e| e.to_string())?;
        models.push(std::fs::read(&path).map_err(|e| e.to_string())?);
        reports.push(run.report.to_string());
        for doc in corpus.documents().iter().take(300) {
            let r = analyze(doc, &res, &run.model, &cfg, &HybridConfig::default())
                .map_err(|e| e.to_string())?;
            analysis.push_str(&serde_json::to_string(&r).map_err(|e| e.to_string())?);
            analysis.push('\n');
        }
    }
    Ok(PipelineRun {
        labeled: build.labeled.to_tsv(),
        models,
        reports,
        analysis,
    })
}

fn check_determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let a = full_run(dir.path(), "a")?;
    let b = full_run(dir.path(), "b")?;
    ensure!(a.labeled == b.labeled, "labeled corpus differs");
    ensure!(a.models == b.models, "model files differ");
    ensure!(a.reports == b.reports, "evaluation reports differ");
    ensure!(a.analysis == b.analysis, "analysis output differs");
    Ok(format!(
        "labeled {} bytes, models {}+{} bytes, analysis {} bytes identical",
        a.labeled.len(),
        a.models[0].len(),
        a.models[1].len(),
        a.analysis.len()
    ))
}

fn random_inputs(rng: &mut ChaCha8Rng) -> SuretyInputs {
    let max_percent = rng.gen_range(0.0..=100.0);
    SuretyInputs {
        classifier_label_match: rng.gen_bool(0.5),
        max_score: rng.gen_range(0.0..300.0),
        max_percent,
        second_diff: rng.gen_range(0.0..=max_percent),
        hits_count: rng.gen_range(0..30),
    }
}

fn check_surety() -> Outcome {
    let cfg = HybridConfig::default();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut checks = 0;
    for n in 0..20_000 {
        let x = random_inputs(&mut rng);
        for single in [true, false] {
            let base = surety(&x, single, &cfg);
            ensure!((0.0..=6.0).contains(&base), "sample {n}: surety {base} for {x:?}");
            let bumped = [
                SuretyInputs { classifier_label_match: true, ..x },
                SuretyInputs { max_score: x.max_score + rng.gen_range(0.0..100.0), ..x },
                SuretyInputs { max_percent: (x.max_percent + rng.gen_range(0.0..50.0)).min(100.0), ..x },
                SuretyInputs { second_diff: (x.second_diff + rng.gen_range(0.0..50.0)).min(100.0), ..x },
                SuretyInputs { hits_count: x.hits_count + rng.gen_range(0..10), ..x },
            ];
            for (field, y) in bumped.iter().enumerate() {
                let after = surety(y, single, &cfg);
                ensure!((0.0..=6.0).contains(&after), "sample {n}: surety {after} for {y:?}");
                ensure!(after >= base, "sample {n} field {field}: {base} -> {after} ({x:?} -> {y:?})");
                checks += 1;
            }
        }
    }
    Ok(format!("40000 evaluations in [0,6], {checks} single-input increases never lower it"))
}

fn main() -> ExitCode {
    let secs = |n| Some(Duration::from_secs(n));
    let checks: [Check; 9] = [
        ("scoring tables", check_scoring_tables, secs(1)),
        ("score/relscore oracle", check_score_oracle, secs(5)),
        ("worked examples", check_worked_examples, None),
        ("hybrid combination", check_combine, None),
        ("purity threshold", check_threshold, None),
        ("end-to-end accuracy", check_end_to_end, secs(300)),
        ("classifier contracts", check_classifier_contracts, None),
        ("determinism", check_determinism, None),
        ("surety bounds", check_surety, None),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failures = 0;
    for (name, check, budget) in checks {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let took = start.elapsed();
        let outcome = match (outcome, budget) {
            (Ok(_), Some(limit)) if took > limit => Err(format!("took longer than {}", ms(limit))),
            (o, _) => o,
        };
        match outcome {
            Ok(detail) => println!("PASS  {name}: {detail} [{}]", ms(took)),
            Err(why) => {
                failures += 1;
                println!("FAIL  {name}: {why} [{}]", ms(took));
            }
        }
    }
    println!("{} of {} criteria passed", checks.len() - failures, checks.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn ms(d: Duration) -> String {
    format!("{} ms", d.as_millis())
}
