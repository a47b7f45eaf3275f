//! Report serialization: JSON, CSV and plain text.

use std::io::Write;

use crate::error::Result;
use crate::fixtures::FixtureReport;
use crate::laws::LawReport;
use crate::verifier::{LengthCount, SweepReport};

pub fn write_sweep_json(out: &mut dyn Write, report: &SweepReport) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, report)?;
    writeln!(out)?;
    Ok(())
}

pub fn read_sweep_json(text: &str) -> Result<SweepReport> {
    Ok(serde_json::from_str(text)?)
}

/// `length,total_words,all_rich_count`, one row per length.
pub fn write_counts_csv(out: &mut dyn Write, counts: &[LengthCount]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for row in counts {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_counts_csv(text: &str) -> Result<Vec<LengthCount>> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    Ok(r.deserialize().collect::<std::result::Result<_, _>>()?)
}

pub fn write_sweep_text(out: &mut dyn Write, r: &SweepReport) -> Result<()> {
    writeln!(
        out,
        "alphabet {} lengths {}..={}: {} words, {} mismatches, {} ms",
        r.spec.alphabet_size,
        r.spec.min_len,
        r.spec.max_len,
        r.words_checked,
        r.mismatches.len(),
        r.wall_time_ms
    )?;
    writeln!(out, "length  words  all_rich  oracle")?;
    for (c, o) in r.counts.iter().zip(&r.oracle_counts) {
        writeln!(
            out,
            "{:>6}  {:>5}  {:>8}  {:>6}",
            c.length, c.total_words, c.all_rich_count, o.all_rich_count
        )?;
    }
    for m in &r.mismatches {
        writeln!(
            out,
            "MISMATCH {}: classifier {} ({}), oracle {} witness {}",
            m.word,
            m.classifier_all_rich,
            m.rule,
            m.oracle_all_rich,
            m.witness.as_deref().unwrap_or("-")
        )?;
    }
    Ok(())
}

pub fn write_laws_text(out: &mut dyn Write, r: &LawReport) -> Result<()> {
    writeln!(
        out,
        "reversal law: {} words, {} violations",
        r.reversal_words_checked,
        r.reversal_violations.len()
    )?;
    for w in &r.reversal_violations {
        writeln!(out, "  violated by {w}")?;
    }
    writeln!(
        out,
        "concatenation law: {} pairs (seed {}), {} products, {} violations",
        r.pairs_checked,
        r.config.seed,
        r.products_checked,
        r.concatenation_violations.len()
    )?;
    for v in &r.concatenation_violations {
        writeln!(out, "  u={} v={} missing {}", v.u, v.v, v.product)?;
    }
    Ok(())
}

pub fn write_fixtures_text(out: &mut dyn Write, r: &FixtureReport) -> Result<()> {
    for o in &r.outcomes {
        let status = if o.passed { "PASS" } else { "FAIL" };
        writeln!(out, "{status} ({}) {}: {} checks", o.id, o.title, o.cases)?;
        for line in &o.detail {
            writeln!(out, "    {line}")?;
        }
    }
    Ok(())
}
