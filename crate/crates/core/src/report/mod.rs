//! Batch drivers: censuses over all elements up to a length bound, the
//! comparison harnesses built on them, and their serializations.
//!
//! Work is split over a rayon pool of the configured size. Every task is a
//! pure function of one element, results are collected in enumeration
//! order and then sorted by `(length, word)`, so output bytes do not depend
//! on the number of workers.

pub mod cache;
pub mod svg;

use std::io::Write;
use std::path::PathBuf;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::adlv_flag::{AdlvRecord, FlagFolding, PartialFoldClass};
use crate::adlv_grass::{dim_grass, mv_dim};
use crate::affweyl::{word_string, AffineElt, AffineWeyl};
use crate::levi::{self, LeviDatum};
use crate::rootsys::{CartanType, Coweight, RootSystem, WeylElt};
use crate::{Error, Result};

use cache::{Cache, CacheKey};
use svg::{Cell, Fill, Legend};

/// Version tag of every serialized row and cache entry.
pub const SCHEMA_VERSION: u32 = 1;

/// Column order of census rows, in JSON and CSV alike.
pub const FIELDS: [&str; 11] = [
    "sys",
    "x_word",
    "len",
    "chamber",
    "shrunken",
    "nonempty",
    "dim",
    "reuman_nonempty",
    "reuman_dim",
    "lau_nonempty",
    "nu",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    JsonLines,
    Csv,
    Svg,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Format> {
        match s {
            "json-lines" | "jsonl" | "json" => Ok(Format::JsonLines),
            "csv" => Ok(Format::Csv),
            "svg" => Ok(Format::Svg),
            _ => Err(Error::Config(format!("unknown format `{s}`"))),
        }
    }
}

/// Validated parameters of a run.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub sys: String,
    pub max_len: usize,
    pub nu: Vec<i32>,
    pub jobs: usize,
    pub cache_dir: Option<PathBuf>,
}

impl RunConfig {
    /// `nu` empty means the zero coweight.
    pub fn new(sys: &str, max_len: usize, nu: &[i32], jobs: usize) -> Result<RunConfig> {
        let rs = RootSystem::from_label(sys)?;
        let nu = if nu.is_empty() { vec![0; rs.rank()] } else { nu.to_vec() };
        if nu.len() != rs.rank() {
            return Err(Error::Config(format!(
                "nu has {} coordinates but {} has rank {}",
                nu.len(),
                rs.label(),
                rs.rank()
            )));
        }
        if jobs == 0 {
            return Err(Error::Config("at least one worker is required".into()));
        }
        Ok(RunConfig { sys: rs.label(), max_len, nu, jobs, cache_dir: None })
    }

    pub fn with_cache(mut self, dir: impl Into<PathBuf>) -> RunConfig {
        self.cache_dir = Some(dir.into());
        self
    }

    pub fn nu_coweight(&self) -> Coweight {
        Coweight::new(&self.nu)
    }

    pub fn group(&self) -> Result<AffineWeyl> {
        AffineWeyl::from_label(&self.sys)
    }
}

/// One census line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRow {
    pub sys: String,
    pub x_word: String,
    pub len: usize,
    /// Index of `η_2(x)` in the enumeration of the finite Weyl group.
    pub chamber: usize,
    pub shrunken: bool,
    pub nonempty: bool,
    pub dim: Option<u32>,
    /// Support criterion for `η_2^{-1} η_1 η_2`; `null` unless `ν = 0`.
    #[serde(rename = "reuman_nonempty")]
    pub predicted_nonempty: Option<bool>,
    /// Predicted dimension on shrunken alcoves predicted nonempty.
    #[serde(rename = "reuman_dim")]
    pub predicted_dim: Option<u32>,
    pub lau_nonempty: Option<bool>,
    pub nu: Vec<i32>,
}

impl ReportRow {
    pub fn from_record(sys: &str, rank: usize, rec: &AdlvRecord) -> ReportRow {
        let basic = rec.nu.is_zero();
        ReportRow {
            sys: sys.to_string(),
            x_word: word_string(&rec.word),
            len: rec.len,
            chamber: rec.chamber.index(),
            shrunken: rec.prediction.applicable,
            nonempty: rec.nonempty,
            dim: rec.dim,
            predicted_nonempty: basic.then_some(rec.prediction.nonempty),
            predicted_dim: if basic && rec.prediction.applicable { rec.prediction.dim } else { None },
            lau_nonempty: rec.lau_nonempty,
            nu: rec.nu.coords(rank).to_vec(),
        }
    }

    /// Whether the word consists of affine letters `1..` only.
    pub fn is_finite(&self) -> bool {
        !self.x_word.contains('0')
    }

    fn csv_fields(&self) -> Vec<String> {
        fn opt<T: ToString>(v: Option<T>) -> String {
            v.map(|v| v.to_string()).unwrap_or_default()
        }
        let nu: Vec<String> = self.nu.iter().map(i32::to_string).collect();
        vec![
            self.sys.clone(),
            self.x_word.clone(),
            self.len.to_string(),
            self.chamber.to_string(),
            self.shrunken.to_string(),
            self.nonempty.to_string(),
            opt(self.dim),
            opt(self.predicted_nonempty),
            opt(self.predicted_dim),
            opt(self.lau_nonempty),
            nu.join(","),
        ]
    }
}

/// Tallies over a set of census rows.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub rows: usize,
    pub empty: usize,
    pub nonempty: usize,
    pub shrunken: usize,
    /// Shrunken rows where non-emptiness and dimension match the prediction.
    pub prediction_agree: usize,
    pub prediction_disagree: usize,
    /// Nonempty rows outside `W` and the shrunken chambers failing the
    /// support criterion.
    pub support_violations: usize,
    /// Finite Weyl group elements with empty variety.
    pub finite_empty: usize,
    pub lau_agree: usize,
    pub lau_disagree: usize,
    pub max_len_reached: usize,
}

impl Summary {
    pub fn of(rows: &[ReportRow]) -> Summary {
        rows.iter().fold(Summary::default(), |mut s, r| {
            s.rows += 1;
            if r.nonempty {
                s.nonempty += 1;
            } else {
                s.empty += 1;
            }
            s.shrunken += r.shrunken as usize;
            if let (true, Some(pred)) = (r.shrunken, r.predicted_nonempty) {
                let expected_dim = if pred { r.predicted_dim } else { None };
                if pred == r.nonempty && expected_dim == r.dim {
                    s.prediction_agree += 1;
                } else {
                    s.prediction_disagree += 1;
                }
            }
            if !r.shrunken && !r.is_finite() && r.nonempty && r.predicted_nonempty == Some(false) {
                s.support_violations += 1;
            }
            if r.is_finite() && !r.nonempty && r.nu.iter().all(|&c| c == 0) {
                s.finite_empty += 1;
            }
            match r.lau_nonempty {
                Some(l) if l == r.nonempty => s.lau_agree += 1,
                Some(_) => s.lau_disagree += 1,
                None => {}
            }
            s.max_len_reached = s.max_len_reached.max(r.len);
            s
        })
    }
}

/// Census rows together with the reason the run stopped early, if it did.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Census {
    pub sys: String,
    pub max_len: usize,
    pub nu: Vec<i32>,
    pub rows: Vec<ReportRow>,
    pub truncated: Option<String>,
}

impl Census {
    pub fn summary(&self) -> Summary {
        Summary::of(&self.rows)
    }
}

/// Work counters of one run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RunStats {
    /// Elements whose fold tables were computed.
    pub fold_calls: usize,
    pub cache_hits: usize,
}

fn pool(jobs: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Config(format!("cannot start {jobs} workers: {e}")))
}

fn open_cache(cfg: &RunConfig) -> Result<Option<Cache>> {
    cfg.cache_dir.as_ref().map(Cache::open).transpose()
}

/// Evaluates `task` on every element of length at most `cfg.max_len`,
/// consulting and filling the cache under `(mode, orientation)`.
fn per_element<T, F>(cfg: &RunConfig, mode: &str, orientation: &str, task: F) -> Result<(Keyed<T>, RunStats)>
where
    T: Serialize + for<'de> Deserialize<'de> + Send,
    F: Fn(&AffineWeyl, AffineElt, &[u8]) -> Result<T> + Sync,
{
    let aw = cfg.group()?;
    let cache = open_cache(cfg)?;
    let folds = AtomicUsize::new(0);
    let elements = aw.enumerate(cfg.max_len);
    let results = pool(cfg.jobs)?.install(|| {
        elements
            .par_iter()
            .map(|(x, word)| {
                let text = word_string(word);
                let key = CacheKey::new(&cfg.sys, mode, &text, &cfg.nu, orientation);
                let value = match cache.as_ref().and_then(|c| c.lookup::<T>(&key)) {
                    Some(hit) => Ok(hit),
                    None => {
                        folds.fetch_add(1, Ordering::Relaxed);
                        task(&aw, *x, word).and_then(|v| {
                            if let Some(c) = &cache {
                                c.store(&key, &v)?;
                            }
                            Ok(v)
                        })
                    }
                };
                (word.len(), text, value)
            })
            .collect::<Vec<_>>()
    });
    let stats = RunStats {
        fold_calls: folds.into_inner(),
        cache_hits: cache.as_ref().map_or(0, Cache::hits),
    };
    Ok((results, stats))
}

type Keyed<T> = Vec<(usize, String, Result<T>)>;

/// Sorted rows up to the first failure in sort order.
fn settle<T>(mut results: Keyed<T>) -> (Vec<T>, Option<String>) {
    results.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    let mut rows = Vec::with_capacity(results.len());
    for (_, _, r) in results {
        match r {
            Ok(v) => rows.push(v),
            Err(e) => return (rows, Some(e.to_string())),
        }
    }
    (rows, None)
}

/// Dimension census of `X_x(ε^ν)` over all `x` with `ℓ(x) ≤ L`.
pub fn run_census(cfg: &RunConfig) -> Result<(Census, RunStats)> {
    let nu = cfg.nu_coweight();
    let rank = cfg.nu.len();
    let sys = cfg.sys.clone();
    let (results, stats) = per_element(cfg, "flag", "all", |aw, _, word| {
        AdlvRecord::compute(aw, word, nu).map(|rec| ReportRow::from_record(&sys, rank, &rec))
    })?;
    let (rows, truncated) = settle(results);
    let census = Census { sys: cfg.sys.clone(), max_len: cfg.max_len, nu: cfg.nu.clone(), rows, truncated };
    Ok((census, stats))
}

pub fn write_json_lines<W: Write>(census: &Census, mut out: W) -> Result<()> {
    for row in &census.rows {
        serde_json::to_writer(&mut out, row)?;
        out.write_all(b"\n")?;
    }
    write_truncation_json(&census.truncated, &mut out)
}

fn write_truncation_json<W: Write>(truncated: &Option<String>, mut out: W) -> Result<()> {
    if let Some(reason) = truncated {
        serde_json::to_writer(&mut out, &serde_json::json!({ "truncated": reason }))?;
        out.write_all(b"\n")?;
    }
    out.flush()?;
    Ok(())
}

pub fn write_csv<W: Write>(census: &Census, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(FIELDS)?;
    for row in &census.rows {
        w.write_record(row.csv_fields())?;
    }
    if let Some(reason) = &census.truncated {
        w.write_record(std::iter::once(format!("# truncated: {reason}")).chain((1..FIELDS.len()).map(|_| String::new())))?;
    }
    w.flush()?;
    Ok(())
}

/// Writes serializable rows as JSON lines or CSV with a header taken from
/// the first row's field names.
pub fn write_rows<T: Serialize, W: Write>(rows: &[T], truncated: &Option<String>, format: Format, mut out: W) -> Result<()> {
    match format {
        Format::JsonLines => {
            for row in rows {
                serde_json::to_writer(&mut out, row)?;
                out.write_all(b"\n")?;
            }
            write_truncation_json(truncated, out)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            let mut header_done = false;
            for row in rows {
                let value = serde_json::to_value(row)?;
                let obj = value
                    .as_object()
                    .ok_or_else(|| Error::Config("rows must serialize to objects".into()))?;
                if !header_done {
                    w.write_record(obj.keys())?;
                    header_done = true;
                }
                w.write_record(obj.values().map(csv_cell))?;
            }
            if let Some(reason) = truncated {
                w.write_record([format!("# truncated: {reason}")])?;
            }
            w.flush()?;
            Ok(())
        }
        Format::Svg => Err(Error::Config("this report has no SVG form".into())),
    }
}

fn csv_cell(v: &serde_json::Value) -> String {
    match v {
        serde_json::Value::Null => String::new(),
        serde_json::Value::String(s) => s.clone(),
        serde_json::Value::Array(items) => items.iter().map(csv_cell).collect::<Vec<_>>().join(","),
        other => other.to_string(),
    }
}

/// Census picture: gray nonempty alcoves labelled by dimension, white
/// empty ones, the base alcove black, on the largest disk the census covers.
pub fn render_census(census: &Census) -> Result<String> {
    let aw = AffineWeyl::from_label(&census.sys)?;
    let radius = svg::safe_radius(&aw, census.max_len)?;
    let cells: Vec<Cell> = census
        .rows
        .iter()
        .map(|r| {
            let word = crate::affweyl::parse_word(&r.x_word).expect("census words are digit strings");
            Cell {
                elt: aw.eval_word(&word),
                fill: if r.nonempty { Fill::Nonempty } else { Fill::Empty },
                label: r.dim.map(|d| d.to_string()),
            }
        })
        .collect();
    let nu: Vec<String> = census.nu.iter().map(i32::to_string).collect();
    let title = format!("{}, b = t^({}), length <= {}", census.sys, nu.join(","), census.max_len);
    svg::render_apartment(&aw, &cells, radius, Legend::Census, &title)
}

/// Proven types: `A_2` and `C_2`.
pub fn prediction_proven(sys: &str) -> bool {
    matches!(sys, "A2" | "C2")
}

/// Partial folding shade of each `x` for the chamber `w`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartialFoldRow {
    pub sys: String,
    pub x_word: String,
    pub len: usize,
    pub chamber: usize,
    pub w: usize,
    pub class: PartialFoldClass,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialFoldReport {
    pub sys: String,
    pub max_len: usize,
    pub w: usize,
    pub rows: Vec<PartialFoldRow>,
    pub truncated: Option<String>,
}

pub fn run_partial_folding(cfg: &RunConfig, w: usize) -> Result<(PartialFoldReport, RunStats)> {
    let rs = RootSystem::from_label(&cfg.sys)?;
    if w >= rs.weyl_order() {
        return Err(Error::Config(format!("orientation index {w} out of range 0..{}", rs.weyl_order())));
    }
    let sys = cfg.sys.clone();
    let (results, stats) = per_element(cfg, "partial", &format!("w={w}"), |aw, x, word| {
        let folding = FlagFolding::from_word(aw, word)?;
        Ok(PartialFoldRow {
            sys: sys.clone(),
            x_word: word_string(word),
            len: word.len(),
            chamber: aw.eta2(x).index(),
            w,
            class: folding.partial_fold_class(WeylElt(w as u16)),
        })
    })?;
    let (rows, truncated) = settle(results);
    Ok((PartialFoldReport { sys: cfg.sys.clone(), max_len: cfg.max_len, w, rows, truncated }, stats))
}

pub fn render_partial_folding(report: &PartialFoldReport) -> Result<String> {
    let aw = AffineWeyl::from_label(&report.sys)?;
    let radius = svg::safe_radius(&aw, report.max_len)?;
    let cells: Vec<Cell> = report
        .rows
        .iter()
        .map(|r| Cell {
            elt: aw.eval_word(&crate::affweyl::parse_word(&r.x_word).expect("digit string")),
            fill: Fill::from_class(r.class),
            label: None,
        })
        .collect();
    let title = format!("{}, partial folding toward chamber {}", report.sys, report.w);
    svg::render_apartment(&aw, &cells, radius, Legend::PartialFolding, &title)
}

/// One line of the `b ≠ 1` comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompareRow {
    pub sys: String,
    pub x_word: String,
    pub len: usize,
    pub shrunken: bool,
    pub nu: Vec<i32>,
    pub nonempty_b: bool,
    pub dim_b: Option<u32>,
    pub nonempty_1: bool,
    pub dim_1: Option<u32>,
    pub len_b: usize,
    pub conjecture_match: Option<bool>,
}

/// Agreement of the comparison inside and below the top length band.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompareSummary {
    /// Lowest length of the band `[L - 4, L]`.
    pub band_low: usize,
    pub band_rows: usize,
    pub band_matches: usize,
    pub band_mismatches: usize,
    /// Mismatched words inside the band.
    pub band_mismatch_words: Vec<String>,
    pub below_rows: usize,
    pub below_mismatches: usize,
}

impl CompareSummary {
    /// Counts shrunken rows with at least one nonempty side.
    pub fn of(rows: &[CompareRow], max_len: usize) -> CompareSummary {
        let band_low = max_len.saturating_sub(4);
        rows.iter()
            .filter(|r| r.shrunken)
            .fold(CompareSummary { band_low, ..Default::default() }, |mut s, r| {
                let Some(ok) = r.conjecture_match else { return s };
                if r.len >= band_low {
                    s.band_rows += 1;
                    if ok {
                        s.band_matches += 1;
                    } else {
                        s.band_mismatches += 1;
                        s.band_mismatch_words.push(r.x_word.clone());
                    }
                } else {
                    s.below_rows += 1;
                    s.below_mismatches += (!ok) as usize;
                }
                s
            })
    }
}

pub fn run_compare_b(cfg: &RunConfig) -> Result<(Vec<CompareRow>, Option<String>, RunStats)> {
    let nu = cfg.nu_coweight();
    let sys = cfg.sys.clone();
    let rank = cfg.nu.len();
    let (results, stats) = per_element(cfg, "compare-b", "all", |aw, _, word| {
        let c = FlagFolding::from_word(aw, word)?.compare_b(nu)?;
        Ok(CompareRow {
            sys: sys.clone(),
            x_word: word_string(word),
            len: c.len,
            shrunken: c.shrunken,
            nu: c.nu.coords(rank).to_vec(),
            nonempty_b: c.nonempty_b,
            dim_b: c.dim_b,
            nonempty_1: c.nonempty_1,
            dim_1: c.dim_1,
            len_b: c.len_b,
            conjecture_match: c.conjecture_match,
        })
    })?;
    let (rows, truncated) = settle(results);
    Ok((rows, truncated, stats))
}

/// Dominant coweights with `<2ρ, μ> ≤ bound`, in lexicographic order.
pub fn dominant_up_to(rs: &RootSystem, bound: i64) -> Vec<Coweight> {
    let top = (bound.max(0) / 2) as i32;
    let mut all = vec![Coweight::ZERO];
    for i in 0..rs.rank() {
        all = all
            .into_iter()
            .flat_map(|c| (0..=top).map(move |k| c + k * Coweight::simple_coroot(i)))
            .collect();
    }
    let mut out: Vec<Coweight> = all
        .into_iter()
        .filter(|&c| rs.is_dominant(c) && rs.two_rho_pairing(c) <= bound)
        .collect();
    out.sort();
    out
}

/// `dim X_μ(ε^ν)` together with the Mirković-Vilonen dimension.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrassRow {
    pub sys: String,
    pub mu: Vec<i32>,
    pub nu: Vec<i32>,
    pub nonempty: bool,
    pub dim: Option<u32>,
    pub mv_dim: Option<i64>,
}

/// Rows for every dominant `μ` with `<2ρ, μ> ≤ bound`, and either the given
/// `ν` or every `ν ∈ Σ(μ)`.
pub fn run_grass(sys: &str, bound: i64, nu: Option<Coweight>) -> Result<Vec<GrassRow>> {
    let rs = RootSystem::from_label(sys)?;
    let n = rs.rank();
    let mut rows = Vec::new();
    for mu in dominant_up_to(&rs, bound) {
        let nus: Vec<Coweight> = match nu {
            Some(v) => vec![v],
            None => levi::sigma_mu(&rs, mu)?.into_iter().collect(),
        };
        for v in nus {
            let dim = dim_grass(&rs, mu, v)?;
            rows.push(GrassRow {
                sys: rs.label(),
                mu: mu.coords(n).to_vec(),
                nu: v.coords(n).to_vec(),
                nonempty: dim.is_some(),
                dim,
                mv_dim: mv_dim(&rs, mu, v)?,
            });
        }
    }
    Ok(rows)
}

/// Outcome of the Levi checks for one `(μ, M)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeviCheckRow {
    pub sys: String,
    pub mu: Vec<i32>,
    /// 1-based simple roots of `M`.
    pub levi: Vec<usize>,
    pub sigma_size: usize,
    pub m_max_size: usize,
    /// `p_M` has the same image on `M`-dominant and `M`-maximal elements.
    pub images_ok: bool,
    /// `Σ a_λ dim V^M_λ = dim V^G_μ`.
    pub dimension_ok: bool,
    /// Every `M`-maximal element occurs in the restriction.
    pub max_attained_ok: bool,
    /// `ν ∈ Σ(μ)` with a conjugate central in `M`.
    pub nu_checked: usize,
    /// `ν ∈ Σ(μ)` with no conjugate central in `M`.
    pub nu_skipped: usize,
    /// Checked `ν` where the reduction disagrees with `dim_grass`.
    pub reduction_failures: Vec<Vec<i32>>,
}

impl LeviCheckRow {
    pub fn ok(&self) -> bool {
        self.images_ok && self.dimension_ok && self.max_attained_ok && self.reduction_failures.is_empty()
    }
}

fn levi_check_one(rs: &Arc<RootSystem>, levi: &LeviDatum, mu: Coweight) -> Result<LeviCheckRow> {
    let n = rs.rank();
    let full = LeviDatum::full(Arc::clone(rs));
    let sigma = levi::sigma_mu(rs, mu)?;
    let (_, max) = levi::m_subsets(levi, mu)?;
    let restriction = levi::branching(levi, mu)?;
    let mut checked = 0;
    let mut skipped = 0;
    let mut failures = Vec::new();
    for &nu in &sigma {
        match levi::reduction_translation(levi, mu, nu)? {
            None => skipped += 1,
            Some((_, outcome)) => {
                checked += 1;
                let expected = dim_grass(rs, mu, nu)?;
                let ok = match (&outcome, expected) {
                    (Some(o), Some(d)) => o.consistent() && o.value == num_rational::BigRational::from_integer(d.into()),
                    _ => false,
                };
                if !ok {
                    failures.push(nu.coords(n).to_vec());
                }
            }
        }
    }
    Ok(LeviCheckRow {
        sys: rs.label(),
        mu: mu.coords(n).to_vec(),
        levi: levi.simple().iter().map(|j| j + 1).collect(),
        sigma_size: sigma.len(),
        m_max_size: max.len(),
        images_ok: levi::levi_images_agree(levi, mu)?,
        dimension_ok: restriction.total_dimension(levi) == levi::weyl_dimension(&full, mu),
        max_attained_ok: max.iter().all(|&c| restriction.multiplicity(c) >= 1),
        nu_checked: checked,
        nu_skipped: skipped,
        reduction_failures: failures,
    })
}

/// Levi checks for every dominant `μ` with `<2ρ, μ> ≤ bound` and every
/// standard Levi, in parallel.
pub fn run_levi_check(sys: &str, bound: i64, jobs: usize) -> Result<Vec<LeviCheckRow>> {
    let rs = Arc::new(RootSystem::from_label(sys)?);
    if jobs == 0 {
        return Err(Error::Config("at least one worker is required".into()));
    }
    let levis = levi::standard_levis(&rs);
    let tasks: Vec<(Coweight, usize)> = dominant_up_to(&rs, bound)
        .into_iter()
        .flat_map(|mu| (0..levis.len()).map(move |k| (mu, k)))
        .collect();
    let rows = pool(jobs)?.install(|| {
        tasks
            .par_iter()
            .map(|&(mu, k)| levi_check_one(&rs, &levis[k], mu))
            .collect::<Result<Vec<_>>>()
    })?;
    Ok(rows)
}

/// Whether `sys` is `A_2`, the only type with the power-length criterion.
pub fn lau_supported(sys: &str) -> bool {
    RootSystem::from_label(sys).is_ok_and(|rs| rs.kind() == CartanType::A && rs.rank() == 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_census() {
        let cfg = RunConfig::new("A2", 0, &[], 1).unwrap();
        let (census, stats) = run_census(&cfg).unwrap();
        assert_eq!(census.rows.len(), 1);
        let r = &census.rows[0];
        assert_eq!((r.x_word.as_str(), r.nonempty, r.dim), ("", true, Some(0)));
        assert_eq!(stats.fold_calls, 1);
    }

    #[test]
    fn field_order_is_fixed() {
        let cfg = RunConfig::new("A2", 2, &[], 2).unwrap();
        let (census, _) = run_census(&cfg).unwrap();
        let mut buf = Vec::new();
        write_json_lines(&census, &mut buf).unwrap();
        let first = String::from_utf8(buf).unwrap().lines().next().unwrap().to_string();
        let mut pos = 0;
        for f in FIELDS {
            let at = first[pos..].find(&format!("\"{f}\":")).expect(f) + pos;
            pos = at;
        }
        let mut csv_buf = Vec::new();
        write_csv(&census, &mut csv_buf).unwrap();
        let text = String::from_utf8(csv_buf).unwrap();
        assert_eq!(text.lines().next().unwrap(), FIELDS.join(","));
        assert_eq!(text.lines().count(), census.rows.len() + 1);
    }

    #[test]
    fn bad_configs() {
        assert!(matches!(RunConfig::new("A2", 3, &[1], 1), Err(Error::Config(_))));
        assert!(matches!(RunConfig::new("A2", 3, &[], 0), Err(Error::Config(_))));
        assert!(RunConfig::new("E8", 3, &[], 1).is_err());
    }

    #[test]
    fn summary_is_a_fold() {
        let cfg = RunConfig::new("C2", 6, &[], 3).unwrap();
        let (census, _) = run_census(&cfg).unwrap();
        let s = census.summary();
        let (a, b) = census.rows.split_at(census.rows.len() / 2);
        let (sa, sb) = (Summary::of(a), Summary::of(b));
        assert_eq!(s.rows, sa.rows + sb.rows);
        assert_eq!(s.prediction_agree, sa.prediction_agree + sb.prediction_agree);
        assert_eq!(s.empty + s.nonempty, s.rows);
        assert_eq!(s.prediction_disagree, 0);
        assert_eq!(s.max_len_reached, 6);
    }

    #[test]
    fn dominant_enumeration() {
        let rs = RootSystem::from_label("A2").unwrap();
        let d = dominant_up_to(&rs, 4);
        assert_eq!(d, vec![Coweight::ZERO, Coweight::new(&[1, 1])]);
    }
}
