use std::fs;

use adlv::affweyl::AffineWeyl;
use adlv::report::{self, Census, RunConfig, Summary};

fn json(c: &Census) -> Vec<u8> {
    let mut buf = Vec::new();
    report::write_json_lines(c, &mut buf).unwrap();
    buf
}

/// Poincaré series of the affine Weyl group, `Π (1 - q^{d_i}) / (1 - q)(1 - q^{d_i - 1})`
/// expanded up to `max_len`, from the degrees `d_i` of the finite group.
fn bott_series(degrees: &[usize], max_len: usize) -> Vec<i64> {
    let mut series = vec![0i64; max_len + 1];
    series[0] = 1;
    let mul = |s: &mut Vec<i64>, k: usize, sign: i64| {
        for n in (k..s.len()).rev() {
            s[n] += sign * s[n - k];
        }
    };
    let geometric = |s: &mut Vec<i64>, k: usize| {
        for n in k..s.len() {
            s[n] += s[n - k];
        }
    };
    for &d in degrees {
        mul(&mut series, d, -1);
        geometric(&mut series, 1);
        geometric(&mut series, d - 1);
    }
    series
}

#[test]
fn row_counts_follow_the_growth_series() {
    for (sys, degrees, max_len) in [("A2", vec![2, 3], 14), ("C2", vec![2, 4], 12), ("G2", vec![2, 6], 12), ("A3", vec![2, 3, 4], 8)] {
        let cfg = RunConfig::new(sys, max_len, &[], 2).unwrap();
        let (census, _) = report::run_census(&cfg).unwrap();
        let series = bott_series(&degrees, max_len);
        for (len, &expected) in series.iter().enumerate() {
            let got = census.rows.iter().filter(|r| r.len == len).count();
            assert_eq!(got as i64, expected, "{sys} length {len}");
        }
        let aw = AffineWeyl::from_label(sys).unwrap();
        let growth = aw.growth_series(max_len);
        assert_eq!(growth.iter().map(|&g| g as i64).collect::<Vec<_>>(), series);
    }
}

#[test]
fn rows_are_sorted_by_length_then_word() {
    let cfg = RunConfig::new("G2", 9, &[], 3).unwrap();
    let (census, _) = report::run_census(&cfg).unwrap();
    let keys: Vec<(usize, &str)> = census.rows.iter().map(|r| (r.len, r.x_word.as_str())).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn warm_cache_performs_no_folding() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = RunConfig::new("C2", 9, &[], 3).unwrap().with_cache(dir.path());
    let (cold, cold_stats) = report::run_census(&cfg).unwrap();
    assert_eq!(cold_stats.fold_calls, cold.rows.len());
    let (warm, warm_stats) = report::run_census(&cfg).unwrap();
    assert_eq!(warm_stats.fold_calls, 0);
    assert_eq!(warm_stats.cache_hits, warm.rows.len());
    assert_eq!(json(&cold), json(&warm));
}

#[test]
fn interrupted_run_resumes_with_identical_output() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = RunConfig::new("A2", 10, &[], 2).unwrap().with_cache(dir.path());
    let (full, _) = report::run_census(&cfg).unwrap();
    // Losing every other entry plays the part of a run killed midway.
    let mut entries: Vec<_> = fs::read_dir(dir.path()).unwrap().map(|e| e.unwrap().path()).collect();
    entries.sort();
    let removed = entries.iter().step_by(2).inspect(|p| fs::remove_file(p).unwrap()).count();
    let (resumed, stats) = report::run_census(&cfg).unwrap();
    assert_eq!(stats.fold_calls, removed);
    assert_eq!(json(&full), json(&resumed));
}

#[test]
fn corrupted_entries_are_recomputed() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = RunConfig::new("A2", 5, &[], 1).unwrap().with_cache(dir.path());
    let (first, _) = report::run_census(&cfg).unwrap();
    let victim = fs::read_dir(dir.path()).unwrap().next().unwrap().unwrap().path();
    fs::write(&victim, b"{\"version\":1,\"key\":\"garbage\"}").unwrap();
    let (second, stats) = report::run_census(&cfg).unwrap();
    assert_eq!(stats.fold_calls, 1);
    assert_eq!(json(&first), json(&second));
}

#[test]
fn prediction_mode_on_a2_has_no_disagreements() {
    let cfg = RunConfig::new("A2", 12, &[], 4).unwrap();
    let (census, _) = report::run_census(&cfg).unwrap();
    let s: Summary = census.summary();
    assert_eq!(s.prediction_disagree, 0);
    assert!(s.prediction_agree > 0);
    assert_eq!(s.rows, s.empty + s.nonempty);
}

#[test]
fn g2_spot_rows_are_stable() {
    let a = report::run_census(&RunConfig::new("G2", 16, &[], 1).unwrap()).unwrap().0;
    let b = report::run_census(&RunConfig::new("G2", 16, &[], 4).unwrap()).unwrap().0;
    assert_eq!(a.rows.len(), b.rows.len());
    for k in (0..a.rows.len()).step_by(37) {
        assert_eq!(a.rows[k], b.rows[k]);
    }
}

#[test]
fn svg_renders_for_rank_two_only() {
    let (c, _) = report::run_census(&RunConfig::new("A2", 12, &[], 2).unwrap()).unwrap();
    let svg = report::render_census(&c).unwrap();
    assert!(svg.starts_with("<svg"));
    assert!(svg.matches("<polygon").count() > 1);
    assert_eq!(svg.matches("<circle").count(), 1);
    let (c3, _) = report::run_census(&RunConfig::new("A3", 2, &[], 2).unwrap()).unwrap();
    assert!(report::render_census(&c3).is_err());
}

#[test]
fn csv_nulls_are_empty_cells() {
    let (c, _) = report::run_census(&RunConfig::new("A2", 4, &[1, -1], 1).unwrap()).unwrap();
    let mut buf = Vec::new();
    report::write_csv(&c, &mut buf).unwrap();
    let text = String::from_utf8(buf).unwrap();
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    for rec in reader.records() {
        let rec = rec.unwrap();
        assert_eq!(rec.len(), 11);
        assert_eq!(&rec[7], "");
        assert_eq!(&rec[10], "1,-1");
        if &rec[5] == "false" {
            assert_eq!(&rec[6], "");
        }
    }
}
