//! Argument parsing and subcommand dispatch for the `blore` binary.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use blore_core::block_reversal::HARD_MAX_BLOCK_LEN;
use blore_core::classifier::Classifier;
use blore_core::palindrome::{
    find_glen_violation_bounded, prefix_property_witness, DEFAULT_ORACLE_BOUND,
};
use blore_core::{
    br_contains, br_count, enumerate_br, is_circularly_rich, is_rich, oracle_all_rich,
    PalindromeIndex, Rational, RichnessWitness, Verdict, WitnessKind, Word,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::error::{exit, Error, Result};
use crate::fixtures::fixture_suite;
use crate::laws::{check_identity_laws, LawConfig};
use crate::report;
use crate::verifier::{count_all_rich_sequence, sweep, SweepBounds, SweepSpec};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "blore", version, about = "Block reversal and rich words")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,

    /// Longest word accepted by block-reversal enumeration.
    #[arg(long, global = true, env = "BLORE_MAX_BLOCK_LEN", default_value_t = 24)]
    pub max_block_len: usize,

    /// Alphabet size; for single-word commands it overrides the size
    /// inferred from the largest letter.
    #[arg(long, global = true)]
    pub alphabet: Option<usize>,

    /// Worker threads (0 uses every core).
    #[arg(long, global = true, default_value_t = 0)]
    pub jobs: usize,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run-length encoding, trace and run sequence.
    Rle { word: String },
    /// Distinct non-empty palindromic factors.
    Pal { word: String },
    /// Richness verdict, with a witness when the word is not rich.
    Rich { word: String },
    /// Fractional power, e.g. `power aba 5/3`.
    Power { word: String, exponent: String },
    /// Circular richness.
    Circ { word: String },
    /// Block reversal set queries.
    Br {
        #[command(subcommand)]
        action: BrAction,
    },
    /// Decide whether every element of BR(w) is rich.
    Classify {
        word: String,
        /// Also run the exhaustive oracle; exit 1 if it disagrees.
        #[arg(long)]
        check: bool,
    },
    /// Exhaustive classifier-versus-oracle sweep, identity laws or fixtures.
    Verify(VerifyArgs),
    /// Per-length counts of words whose block reversal is all rich.
    Sequence(SequenceArgs),
    /// The closed table of binary run-sequence forms.
    DumpForms,
}

#[derive(Debug, Subcommand)]
pub enum BrAction {
    /// Sorted distinct elements.
    Enum {
        word: String,
        /// Mark each element rich or not-rich.
        #[arg(long)]
        annotate: bool,
    },
    /// Number of distinct elements.
    Count { word: String },
    /// Whether `candidate` belongs to BR(word).
    Member { word: String, candidate: String },
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    #[default]
    Sweep,
    Laws,
    Fixtures,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Suite::Sweep)]
    pub suite: Suite,
    #[arg(long, default_value_t = 1)]
    pub min_len: usize,
    #[arg(long, default_value_t = 10)]
    pub max_len: usize,
    /// Raise the sweep bound (binary words up to length 16).
    #[arg(long)]
    pub extended: bool,
    /// Seed for sampled pairs of the concatenation law.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Number of sampled pairs for the concatenation law.
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
}

#[derive(Debug, Args)]
pub struct SequenceArgs {
    #[arg(long, default_value_t = 10)]
    pub max_len: usize,
    #[arg(long)]
    pub extended: bool,
}

impl Cli {
    fn word(&self, text: &str) -> Result<Word> {
        Ok(Word::parse(text, self.alphabet)?)
    }

    fn limits(&self) -> Result<blore_core::Limits> {
        if self.max_block_len > HARD_MAX_BLOCK_LEN {
            return Err(Error::Resource(format!(
                "--max-block-len {} exceeds the hard limit {HARD_MAX_BLOCK_LEN}",
                self.max_block_len
            )));
        }
        Ok(blore_core::Limits::new(self.max_block_len))
    }
}

fn bounds(extended: bool) -> SweepBounds {
    if extended {
        SweepBounds::EXTENDED
    } else {
        SweepBounds::DEFAULT
    }
}

/// Runs the command and writes to `--out` or `stdout`; returns the exit code.
pub fn run(cli: &Cli) -> u8 {
    let result = match &cli.out {
        Some(path) => File::create(path)
            .map_err(Error::from)
            .and_then(|f| execute(cli, &mut BufWriter::new(f))),
        None => execute(cli, &mut io::stdout().lock()),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

/// Runs the command against an arbitrary sink.
pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<u8> {
    let format = cli.format;
    let code = match &cli.command {
        Command::Rle { word } => rle(&cli.word(word)?, format, out)?,
        Command::Pal { word } => pal(&cli.word(word)?, format, out)?,
        Command::Rich { word } => rich(&cli.word(word)?, format, out)?,
        Command::Power { word, exponent } => {
            let k: Rational = exponent.parse()?;
            let v = cli.word(word)?.fractional_power(k)?;
            match format {
                OutputFormat::Json => emit_json(out, &json!({ "power": v.to_plain_string() }))?,
                _ => writeln!(out, "{v}")?,
            }
            exit::OK
        }
        Command::Circ { word } => {
            let v = is_circularly_rich(&cli.word(word)?)?;
            match format {
                OutputFormat::Json => emit_json(out, &json!({ "circularly_rich": v }))?,
                _ => writeln!(out, "circularly_rich={v}")?,
            }
            exit::OK
        }
        Command::Br { action } => br(cli, action, out)?,
        Command::Classify { word, check } => classify(cli, &cli.word(word)?, *check, out)?,
        Command::Verify(args) => verify(cli, args, out)?,
        Command::Sequence(args) => sequence(cli, args, out)?,
        Command::DumpForms => dump_forms(format, out)?,
    };
    out.flush()?;
    Ok(code)
}

fn emit_json<T: Serialize + ?Sized>(out: &mut dyn Write, value: &T) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn no_csv(what: &str) -> Error {
    Error::Input(format!("{what} has no CSV output"))
}

fn rle(w: &Word, format: OutputFormat, out: &mut dyn Write) -> Result<u8> {
    let r = w.rle()?;
    let seq = r.run_sequence();
    match format {
        OutputFormat::Json => emit_json(
            out,
            &json!({
                "rle": r.to_string(),
                "trace": r.trace().to_plain_string(),
                "run_sequence": seq,
                "run_length": r.run_count(),
            }),
        )?,
        OutputFormat::Csv => return Err(no_csv("rle")),
        OutputFormat::Text => {
            let seq: Vec<String> = seq.iter().map(usize::to_string).collect();
            writeln!(out, "{r}")?;
            writeln!(out, "trace: {}", r.trace())?;
            writeln!(out, "run sequence: ({})", seq.join(","))?;
            writeln!(out, "l={}", r.run_count())?;
        }
    }
    Ok(exit::OK)
}

fn pal(w: &Word, format: OutputFormat, out: &mut dyn Write) -> Result<u8> {
    let mut pals = PalindromeIndex::build(w).palindromes();
    pals.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
    let rich = pals.len() == w.len();
    match format {
        OutputFormat::Json => {
            let list: Vec<String> = pals.iter().map(Word::to_plain_string).collect();
            emit_json(
                out,
                &json!({ "palindromes": list, "count": pals.len(), "rich": rich }),
            )?
        }
        OutputFormat::Csv => return Err(no_csv("pal")),
        OutputFormat::Text => {
            for p in &pals {
                writeln!(out, "{p}")?;
            }
            writeln!(out, "P={}", pals.len())?;
            writeln!(out, "rich={rich}")?;
        }
    }
    Ok(exit::OK)
}

fn richness_witness(w: &Word) -> Result<Option<RichnessWitness>> {
    if w.len() <= DEFAULT_ORACLE_BOUND {
        Ok(find_glen_violation_bounded(w, DEFAULT_ORACLE_BOUND)?)
    } else {
        Ok(prefix_property_witness(w))
    }
}

fn rich(w: &Word, format: OutputFormat, out: &mut dyn Write) -> Result<u8> {
    let verdict = is_rich(w);
    let witness = if verdict { None } else { richness_witness(w)? };
    match format {
        OutputFormat::Json => {
            let witness = witness.as_ref().map(|x| {
                json!({
                    "kind": match x.kind {
                        WitnessKind::GlenViolation => "glen",
                        WitnessKind::PrefixNonUnioccurrent => "prefix",
                    },
                    "factor": x.factor.to_plain_string(),
                    "palindrome": x.palindrome.to_plain_string(),
                })
            });
            emit_json(out, &json!({ "rich": verdict, "witness": witness }))?
        }
        OutputFormat::Csv => return Err(no_csv("rich")),
        OutputFormat::Text => {
            writeln!(out, "rich={verdict}")?;
            if let Some(x) = witness {
                match x.kind {
                    WitnessKind::GlenViolation => writeln!(
                        out,
                        "witness: {} is not a palindrome but has {} only as prefix and suffix",
                        x.factor, x.palindrome
                    )?,
                    WitnessKind::PrefixNonUnioccurrent => writeln!(
                        out,
                        "witness: prefix {} has its longest palindromic suffix {} more than once",
                        x.factor, x.palindrome
                    )?,
                }
            }
        }
    }
    Ok(exit::OK)
}

fn br(cli: &Cli, action: &BrAction, out: &mut dyn Write) -> Result<u8> {
    let format = cli.format;
    match action {
        BrAction::Enum { word, annotate } => {
            let set = enumerate_br(&cli.word(word)?, cli.limits()?)?;
            match format {
                OutputFormat::Json => {
                    let rows: Vec<_> = set
                        .iter()
                        .map(|v| json!({ "word": v.to_plain_string(), "rich": is_rich(v) }))
                        .collect();
                    emit_json(
                        out,
                        &json!({ "count": set.distinct_count(), "elements": rows }),
                    )?
                }
                OutputFormat::Csv => {
                    let mut csv = csv::Writer::from_writer(&mut *out);
                    csv.write_record(["word", "rich"])?;
                    for v in set.iter() {
                        csv.write_record([v.to_plain_string(), is_rich(v).to_string()])?;
                    }
                    csv.flush()?;
                }
                OutputFormat::Text => {
                    for v in set.iter() {
                        if *annotate {
                            let tag = if is_rich(v) { "rich" } else { "not-rich" };
                            writeln!(out, "{v}\t{tag}")?;
                        } else {
                            writeln!(out, "{v}")?;
                        }
                    }
                }
            }
        }
        BrAction::Count { word } => {
            let n = br_count(&cli.word(word)?, cli.limits()?)?;
            match format {
                OutputFormat::Json => emit_json(out, &json!({ "count": n }))?,
                _ => writeln!(out, "{n}")?,
            }
        }
        BrAction::Member { word, candidate } => {
            let w = cli.word(word)?;
            let v = cli.word(candidate)?;
            let member = br_contains(&w, &v);
            match format {
                OutputFormat::Json => emit_json(out, &json!({ "member": member }))?,
                _ => writeln!(out, "{member}")?,
            }
        }
    }
    Ok(exit::OK)
}

fn verdict_name(all_rich: bool) -> &'static str {
    if all_rich {
        "AllRich"
    } else {
        "ExistsNonRich"
    }
}

fn classify(cli: &Cli, w: &Word, check: bool, out: &mut dyn Write) -> Result<u8> {
    let verdict: Verdict = Classifier::default().classify(w);
    let oracle = if check {
        Some(oracle_all_rich(w, cli.limits()?)?)
    } else {
        None
    };
    let agrees = oracle
        .as_ref()
        .is_none_or(|o| o.all_rich == verdict.all_rich);
    match cli.format {
        OutputFormat::Json => {
            let oracle = oracle.as_ref().map(|o| {
                json!({
                    "all_rich": o.all_rich,
                    "witness": o.witness.as_ref().map(Word::to_plain_string),
                    "elements_checked": o.elements_checked,
                })
            });
            emit_json(
                out,
                &json!({
                    "word": w.to_plain_string(),
                    "verdict": verdict_name(verdict.all_rich),
                    "rule": verdict.rule.as_str(),
                    "matched_form": verdict.matched_form.map(|f| f.to_string()),
                    "oracle": oracle,
                    "agrees": agrees,
                }),
            )?
        }
        OutputFormat::Csv => return Err(no_csv("classify")),
        OutputFormat::Text => {
            writeln!(out, "{w}")?;
            writeln!(out, "verdict: {}", verdict_name(verdict.all_rich))?;
            writeln!(out, "rule: {}", verdict.rule)?;
            if let Some(form) = verdict.matched_form {
                writeln!(out, "form: {form}")?;
            }
            if let Some(o) = &oracle {
                writeln!(
                    out,
                    "oracle: {} ({} elements checked)",
                    verdict_name(o.all_rich),
                    o.elements_checked
                )?;
                if let Some(v) = &o.witness {
                    writeln!(out, "witness: {v}")?;
                }
                writeln!(out, "agrees: {agrees}")?;
            }
        }
    }
    Ok(if agrees { exit::OK } else { exit::MISMATCH })
}

fn verify(cli: &Cli, args: &VerifyArgs, out: &mut dyn Write) -> Result<u8> {
    match args.suite {
        Suite::Sweep => {
            let spec = SweepSpec {
                alphabet_size: cli.alphabet.unwrap_or(2),
                min_len: args.min_len,
                max_len: args.max_len,
            };
            let r = sweep(spec, bounds(args.extended), cli.jobs)?;
            match cli.format {
                OutputFormat::Json => report::write_sweep_json(out, &r)?,
                OutputFormat::Csv => report::write_counts_csv(out, &r.counts)?,
                OutputFormat::Text => report::write_sweep_text(out, &r)?,
            }
            Ok(if r.is_clean() {
                exit::OK
            } else {
                exit::MISMATCH
            })
        }
        Suite::Laws => {
            let config = LawConfig {
                samples: args.samples,
                seed: args.seed,
                ..LawConfig::default()
            };
            let r = check_identity_laws(config, cli.jobs);
            match cli.format {
                OutputFormat::Json => emit_json(out, &r)?,
                OutputFormat::Csv => return Err(no_csv("verify --suite laws")),
                OutputFormat::Text => report::write_laws_text(out, &r)?,
            }
            Ok(if r.is_clean() {
                exit::OK
            } else {
                exit::MISMATCH
            })
        }
        Suite::Fixtures => {
            let r = fixture_suite();
            match cli.format {
                OutputFormat::Json => emit_json(out, &r)?,
                OutputFormat::Csv => return Err(no_csv("verify --suite fixtures")),
                OutputFormat::Text => report::write_fixtures_text(out, &r)?,
            }
            Ok(if r.all_passed() {
                exit::OK
            } else {
                exit::MISMATCH
            })
        }
    }
}

fn sequence(cli: &Cli, args: &SequenceArgs, out: &mut dyn Write) -> Result<u8> {
    let k = cli.alphabet.unwrap_or(2);
    let r = count_all_rich_sequence(k, args.max_len, bounds(args.extended), cli.jobs)?;
    match cli.format {
        OutputFormat::Json => emit_json(
            out,
            &json!({
                "alphabet_size": k,
                "counts": r.counts,
                "oracle_counts": r.oracle_counts,
            }),
        )?,
        OutputFormat::Csv => report::write_counts_csv(out, &r.counts)?,
        OutputFormat::Text => {
            let counts: Vec<String> = r.all_rich_counts().iter().map(u64::to_string).collect();
            writeln!(out, "{}", counts.join(","))?;
        }
    }
    if !r.is_clean() {
        eprintln!("classifier and oracle counts differ");
        return Ok(exit::MISMATCH);
    }
    Ok(exit::OK)
}

fn dump_forms(format: OutputFormat, out: &mut dyn Write) -> Result<u8> {
    let table = Classifier::default();
    let forms = table.table().forms();
    match format {
        OutputFormat::Json => {
            let rows: Vec<_> = forms
                .iter()
                .map(|f| {
                    json!({
                        "id": f.id.to_string(),
                        "run_length": f.run_count(),
                        "pattern": f.pattern(),
                    })
                })
                .collect();
            emit_json(out, &rows)?
        }
        OutputFormat::Csv => {
            let mut csv = csv::Writer::from_writer(&mut *out);
            csv.write_record(["id", "run_length", "pattern"])?;
            for f in forms {
                csv.write_record([f.id.to_string(), f.run_count().to_string(), f.pattern()])?;
            }
            csv.flush()?;
        }
        OutputFormat::Text => {
            for f in forms {
                writeln!(out, "{:<28} {}", f.id.to_string(), f.pattern())?;
            }
        }
    }
    Ok(exit::OK)
}
