//! Exhaustive survey of generator quadruples `d_1 < d_2 < d_3 < d_4` in a range.
//!
//! Each minimal quadruple with `gcd = 1` is classified and checked against the
//! exact laws the symmetric not-CI case must satisfy. Any violation aborts the
//! run with [`Error::Defect`] carrying the full instance.
//!
//! Work is split by `d_1`; partitions are evaluated in parallel and merged in
//! order, so output is independent of the worker count.

use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{
    bound_ci, bound_ns4, bound_symmetric_not_ci, exact_threshold_check, maclaurin_chain, ratio,
    verify_intermediate_inequalities, verify_key_identity, SymmetricFunctionData,
};
use crate::error::{Error, Result};
use crate::hilbert::{
    classify_with, expand_binomials, numerator_with, BresinskyForm, SemigroupClass,
};
use crate::semigroup::{apery_set, redundant_generator, AperyTable, GeneratorSet};

pub const DEFAULT_MAX_SPAN: u64 = 200;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurveyConfig {
    pub d_min: u64,
    pub d_max: u64,
    /// Skip (but count) quadruples that are not minimal generating sets.
    pub require_minimal: bool,
    /// Emit every record, not only the symmetric ones.
    pub emit_all: bool,
    /// Worker count; 0 lets the thread pool decide.
    pub jobs: usize,
    pub max_span: u64,
    /// Ignore `max_span`.
    pub force: bool,
}

impl SurveyConfig {
    pub fn new(d_min: u64, d_max: u64) -> Self {
        Self {
            d_min,
            d_max,
            require_minimal: true,
            emit_all: false,
            jobs: 0,
            max_span: DEFAULT_MAX_SPAN,
            force: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.d_min < 2 {
            return Err(Error::ConfigInvalid(format!(
                "min is {}, must be at least 2",
                self.d_min
            )));
        }
        if self.d_min > self.d_max {
            return Err(Error::ConfigInvalid(format!(
                "min {} exceeds max {}",
                self.d_min, self.d_max
            )));
        }
        if !self.force && self.d_max - self.d_min > self.max_span {
            return Err(Error::ConfigInvalid(format!(
                "range width {} exceeds the cap {} (pass force to override)",
                self.d_max - self.d_min,
                self.max_span
            )));
        }
        Ok(())
    }
}

/// One surveyed quadruple.
#[derive(Debug, Clone, PartialEq)]
pub struct SurveyRecord {
    pub generators: [u64; 4],
    pub frobenius: u64,
    pub genus: u64,
    /// `None` for a non-minimal quadruple (only emitted when minimality is not required).
    pub class: Option<SemigroupClass>,
    pub bound_not_ci: f64,
    pub bound_ci: f64,
    pub bound_ns: f64,
    /// `F` over the bound that applies to the class.
    pub tightness: Option<f64>,
    /// Law checks; present only for the symmetric not-CI class.
    pub identity_ok: Option<bool>,
    pub maclaurin_ok: Option<bool>,
    pub threshold_ok: Option<bool>,
    pub intermediate_ok: Option<bool>,
}

impl SurveyRecord {
    pub fn class_tag(&self) -> &'static str {
        self.class.map_or("non_minimal", |c| c.tag())
    }

    /// Numerator degree, for the symmetric not-CI class.
    pub fn c(&self) -> Option<u64> {
        match self.class {
            Some(SemigroupClass::SymmetricNotCi { c, .. }) => Some(c),
            _ => None,
        }
    }

    pub fn is_symmetric_not_ci(&self) -> bool {
        matches!(self.class, Some(SemigroupClass::SymmetricNotCi { .. }))
    }
}

fn defect(g: &GeneratorSet, detail: impl Into<String>) -> Error {
    Error::Defect {
        generators: g.elements().to_vec(),
        detail: detail.into(),
    }
}

fn check_apery(g: &GeneratorSet, table: &AperyTable) -> Result<()> {
    let m = table.modulus();
    let w = table.entries();
    for (r, &wr) in w.iter().enumerate() {
        if wr % m != r as u64 {
            return Err(defect(g, format!("Apéry entry {wr} not congruent to {r}")));
        }
        for &d in g.elements() {
            let prev = ((r as u64 + m - d % m) % m) as usize;
            if wr > w[prev] + d {
                return Err(defect(g, format!("Apéry entry {r} not relaxed along {d}")));
            }
        }
    }
    Ok(())
}

/// Classifies one quadruple and runs every per-instance law check.
pub fn survey_instance(g: &GeneratorSet) -> Result<SurveyRecord> {
    if g.len() != 4 {
        return Err(Error::NotFourGenerators(g.len()));
    }
    let table = apery_set(g)?;
    check_apery(g, &table)?;
    let f = table.frobenius() as u64;
    let genus = table.genus();
    let num = numerator_with(g, &table)?;
    if num.coeff(0) != 1 || num.coefficient_sum() != 0 || num.degree() != f + g.sigma() {
        return Err(defect(g, format!("malformed numerator {num}")));
    }
    if 2 * genus < f + 1 {
        return Err(defect(
            g,
            format!("genus {genus} below (F + 1) / 2 with F = {f}"),
        ));
    }

    let bound_not_ci = bound_symmetric_not_ci(g)?;
    let bound_ci = bound_ci(g)?;
    let bound_ns = bound_ns4(g)?;
    let mut record = SurveyRecord {
        generators: g.elements().try_into().expect("four generators"),
        frobenius: f,
        genus,
        class: None,
        bound_not_ci,
        bound_ci,
        bound_ns,
        tightness: ratio(f, bound_ns),
        identity_ok: None,
        maclaurin_ok: None,
        threshold_ok: None,
        intermediate_ok: None,
    };
    if redundant_generator(g).is_some() {
        return Ok(record);
    }

    let class = classify_with(g, &table, &num)?;
    let symmetric = class.is_symmetric();
    if symmetric != (2 * genus == f + 1) {
        return Err(defect(g, "genus equality disagrees with classification"));
    }
    if symmetric && f.is_multiple_of(2) {
        return Err(defect(g, format!("symmetric with even F = {f}")));
    }
    if symmetric != num.is_antipalindromic() {
        return Err(defect(
            g,
            "numerator antipalindromy disagrees with symmetry",
        ));
    }
    record.class = Some(class);
    match class {
        SemigroupClass::NonSymmetric => {}
        SemigroupClass::SymmetricCi { degrees } => {
            if expand_binomials(&degrees) != num {
                return Err(defect(
                    g,
                    format!("binomials {degrees:?} do not reproduce {num}"),
                ));
            }
            record.tightness = ratio(f, bound_ci);
        }
        SemigroupClass::SymmetricNotCi { a_list, c } => {
            if (BresinskyForm { a_list, c }).expand() != num {
                return Err(defect(
                    g,
                    format!("a-list {a_list:?}, c = {c} do not reproduce {num}"),
                ));
            }
            let data = SymmetricFunctionData::new(a_list)?;
            let identity_ok =
                verify_key_identity(&a_list, c, g.pi()).map_err(|e| defect(g, e.to_string()))?;
            let maclaurin_ok = maclaurin_chain(&data);
            let threshold_ok = exact_threshold_check(c, g.pi())?;
            let intermediate_ok = verify_intermediate_inequalities(&a_list, c, g.pi())?;
            if !(identity_ok && maclaurin_ok && threshold_ok && intermediate_ok) {
                return Err(defect(
                    g,
                    format!(
                        "law violation: F = {f}, c = {c}, a = {a_list:?}, pi = {}, identity {identity_ok}, \
                         maclaurin {maclaurin_ok}, threshold {threshold_ok}, intermediate {intermediate_ok}",
                        g.pi()
                    ),
                ));
            }
            record.tightness = ratio(f, bound_not_ci);
            record.identity_ok = Some(identity_ok);
            record.maclaurin_ok = Some(maclaurin_ok);
            record.threshold_ok = Some(threshold_ok);
            record.intermediate_ok = Some(intermediate_ok);
        }
    }
    Ok(record)
}

/// Aggregate counts and tightness statistics.
#[derive(Debug, Clone, PartialEq, Default, Serialize)]
pub struct SummaryStats {
    /// Quadruples enumerated, including skipped ones.
    pub total: u64,
    pub gcd_not_one: u64,
    pub non_minimal: u64,
    pub non_symmetric: u64,
    pub symmetric_ci: u64,
    pub symmetric_not_ci: u64,
    pub tightness_min: Option<f64>,
    pub tightness_mean: Option<f64>,
    pub tightness_max: Option<f64>,
    /// Symmetric not-CI instance with the largest tightness ratio.
    pub worst: Option<[u64; 4]>,
}

impl SummaryStats {
    fn count(&mut self, class: Option<SemigroupClass>) {
        match class {
            None => self.non_minimal += 1,
            Some(SemigroupClass::NonSymmetric) => self.non_symmetric += 1,
            Some(SemigroupClass::SymmetricCi { .. }) => self.symmetric_ci += 1,
            Some(SemigroupClass::SymmetricNotCi { .. }) => self.symmetric_not_ci += 1,
        }
    }

    fn merge(&mut self, other: &SummaryStats) {
        self.total += other.total;
        self.gcd_not_one += other.gcd_not_one;
        self.non_minimal += other.non_minimal;
        self.non_symmetric += other.non_symmetric;
        self.symmetric_ci += other.symmetric_ci;
        self.symmetric_not_ci += other.symmetric_not_ci;
    }

    fn fill_tightness(&mut self, records: &[SurveyRecord]) {
        let mut worst: Option<(f64, [u64; 4])> = None;
        let mut sum = 0.0;
        let mut n = 0usize;
        let mut min = f64::INFINITY;
        for r in records.iter().filter(|r| r.is_symmetric_not_ci()) {
            let Some(t) = r.tightness else { continue };
            sum += t;
            n += 1;
            min = min.min(t);
            if worst.is_none_or(|(w, _)| t > w) {
                worst = Some((t, r.generators));
            }
        }
        if n > 0 {
            self.tightness_min = Some(min);
            self.tightness_mean = Some(sum / n as f64);
            self.tightness_max = worst.map(|(t, _)| t);
            self.worst = worst.map(|(_, g)| g);
        }
    }

    /// One-line rendering for terminals.
    pub fn summary_line(&self) -> String {
        let fmt = |x: Option<f64>| x.map_or("-".to_string(), |v| format!("{v:.3}"));
        format!(
            "total={} gcd_not_one={} non_minimal={} non_symmetric={} symmetric_ci={} symmetric_not_ci={} \
             tightness_min={} tightness_mean={} tightness_max={}",
            self.total,
            self.gcd_not_one,
            self.non_minimal,
            self.non_symmetric,
            self.symmetric_ci,
            self.symmetric_not_ci,
            fmt(self.tightness_min),
            fmt(self.tightness_mean),
            fmt(self.tightness_max),
        )
    }
}

/// Class counts and tightness statistics over `records`.
pub fn summarize(records: &[SurveyRecord]) -> Result<SummaryStats> {
    if records.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut stats = SummaryStats::default();
    for r in records {
        stats.total += 1;
        stats.count(r.class);
    }
    stats.fill_tightness(records);
    Ok(stats)
}

fn survey_partition(cfg: &SurveyConfig, d1: u64) -> Result<(Vec<SurveyRecord>, SummaryStats)> {
    let mut records = Vec::new();
    let mut stats = SummaryStats::default();
    let hi = cfg.d_max;
    for d2 in d1 + 1..=hi {
        for d3 in d2 + 1..=hi {
            for d4 in d3 + 1..=hi {
                stats.total += 1;
                let g = match GeneratorSet::new(&[d1, d2, d3, d4]) {
                    Ok(g) => g,
                    Err(Error::GcdNotOne(_)) => {
                        stats.gcd_not_one += 1;
                        continue;
                    }
                    Err(e) => return Err(e),
                };
                if cfg.require_minimal && redundant_generator(&g).is_some() {
                    stats.non_minimal += 1;
                    continue;
                }
                let record = survey_instance(&g)?;
                stats.count(record.class);
                if cfg.emit_all || record.class.is_some_and(|c| c.is_symmetric()) {
                    records.push(record);
                }
            }
        }
    }
    Ok((records, stats))
}

/// Runs the survey. Records are ordered by `(d_1, d_2, d_3, d_4)`.
pub fn run_survey(cfg: &SurveyConfig) -> Result<(Vec<SurveyRecord>, SummaryStats)> {
    cfg.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| Error::ConfigInvalid(format!("thread pool: {e}")))?;
    let parts: Vec<_> = pool.install(|| {
        (cfg.d_min..=cfg.d_max)
            .into_par_iter()
            .map(|d1| survey_partition(cfg, d1))
            .collect::<Result<Vec<_>>>()
    })?;
    let mut records = Vec::new();
    let mut stats = SummaryStats::default();
    for (part, part_stats) in parts {
        records.extend(part);
        stats.merge(&part_stats);
    }
    stats.fill_tightness(&records);
    Ok((records, stats))
}

pub const CSV_HEADER: [&str; 13] = [
    "d1",
    "d2",
    "d3",
    "d4",
    "F",
    "genus",
    "class",
    "c",
    "bound_notci",
    "bound_ci",
    "bound_ns",
    "tightness",
    "identity_ok",
];

fn fixed3(x: f64) -> String {
    format!("{x:.3}")
}

pub fn write_csv<W: Write>(records: &[SurveyRecord], out: W) -> std::io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in records {
        let [d1, d2, d3, d4] = r.generators.map(|d| d.to_string());
        w.write_record([
            d1,
            d2,
            d3,
            d4,
            r.frobenius.to_string(),
            r.genus.to_string(),
            r.class_tag().to_string(),
            r.c().map(|c| c.to_string()).unwrap_or_default(),
            fixed3(r.bound_not_ci),
            fixed3(r.bound_ci),
            fixed3(r.bound_ns),
            r.tightness.map(fixed3).unwrap_or_default(),
            r.identity_ok.map(|b| b.to_string()).unwrap_or_default(),
        ])?;
    }
    w.flush()
}

/// JSON view of a record, one object per line in JSONL output.
#[derive(Debug, Serialize)]
pub struct RecordJson {
    pub generators: [u64; 4],
    pub frobenius: u64,
    pub genus: u64,
    pub class: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a_list: Option<[u64; 5]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub relation_degrees: Option<[u64; 3]>,
    pub bound_not_ci: f64,
    pub bound_ci: f64,
    pub bound_ns: f64,
    pub tightness: Option<f64>,
    pub identity_ok: Option<bool>,
    pub maclaurin_ok: Option<bool>,
    pub threshold_ok: Option<bool>,
    pub intermediate_ok: Option<bool>,
}

impl From<&SurveyRecord> for RecordJson {
    fn from(r: &SurveyRecord) -> Self {
        let (a_list, relation_degrees) = match r.class {
            Some(SemigroupClass::SymmetricNotCi { a_list, .. }) => (Some(a_list), None),
            Some(SemigroupClass::SymmetricCi { degrees }) => (None, Some(degrees)),
            _ => (None, None),
        };
        Self {
            generators: r.generators,
            frobenius: r.frobenius,
            genus: r.genus,
            class: r.class_tag(),
            c: r.c(),
            a_list,
            relation_degrees,
            bound_not_ci: r.bound_not_ci,
            bound_ci: r.bound_ci,
            bound_ns: r.bound_ns,
            tightness: r.tightness,
            identity_ok: r.identity_ok,
            maclaurin_ok: r.maclaurin_ok,
            threshold_ok: r.threshold_ok,
            intermediate_ok: r.intermediate_ok,
        }
    }
}

pub fn write_jsonl<W: Write>(records: &[SurveyRecord], mut out: W) -> std::io::Result<()> {
    for r in records {
        serde_json::to_writer(&mut out, &RecordJson::from(r))?;
        out.write_all(b"\n")?;
    }
    out.flush()
}
