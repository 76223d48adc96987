//! Exhaustive checks over whole avoidance classes, and statistic tables.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bijection::{
    gamma, gamma_iterative, gamma_template, theta, theta_corners_template, theta_rsk,
    theta_rsk_template, theta_slide_flip_template,
};
use crate::error::{Error, Result};
use crate::perm::{bar, catalan, enumerate_avoiders_capped, Pattern, Permutation, DEFAULT_N_CAP};
use crate::rsk::{dyck_from_tableaux, rsk_tableaux, template_from_dyck};
use crate::template::{
    build_t_rc_bar, build_t_sigma, diagonal_ls, rc_realize, rcl_corners, realize, template_from_ls,
};

pub const DEFAULT_FAILURE_CAP: usize = 20;

macro_rules! checks {
    ($($variant:ident => $name:literal),* $(,)?) => {
        /// A named property checked over every member of `S_n(321)`.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
        pub enum Check {
            $(#[serde(rename = $name)] $variant,)*
        }

        impl Check {
            pub const ALL: &'static [Check] = &[$(Check::$variant,)*];

            pub fn name(self) -> &'static str {
                match self {
                    $(Check::$variant => $name,)*
                }
            }
        }

        impl FromStr for Check {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self> {
                match s.trim() {
                    $($name => Ok(Check::$variant),)*
                    other => Err(Error::UnknownCheck(other.to_string())),
                }
            }
        }
    };
}

checks! {
    Fact2 => "fact2",
    Fact3RouteAgreement => "fact3-route-agreement",
    Lemma1 => "lemma1",
    Lemma3 => "lemma3",
    Theorem1Route => "theorem1-route",
    Theorem2Route => "theorem2-route",
    Theorem3 => "theorem3",
    BijectivityGamma => "bijectivity-gamma",
    BijectivityTheta => "bijectivity-theta",
    FixedPoints => "fixed-points",
    Excedances => "excedances",
    InverseCommuteGamma => "inverse-commute-gamma",
    InverseCommuteTheta => "inverse-commute-theta",
    CatalanCounts => "catalan-counts",
    RcTemplate => "rc-template",
    BarReflection => "bar-reflection",
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Parses a comma-separated list of check names; `all` selects every check.
pub fn parse_checks(list: &str) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for name in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        if name == "all" {
            out.extend_from_slice(Check::ALL);
        } else {
            out.push(name.parse()?);
        }
    }
    out.sort_by_key(|c| c.name());
    out.dedup();
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub input: String,
    pub expected: String,
    pub actual: String,
}

impl Failure {
    fn new(
        input: impl fmt::Display,
        expected: impl fmt::Display,
        actual: impl fmt::Display,
    ) -> Self {
        Failure {
            input: input.to_string(),
            expected: expected.to_string(),
            actual: actual.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: Check,
    pub n: usize,
    pub cases: usize,
    pub failures: Vec<Failure>,
    /// Total failures found; `failures` holds at most the configured cap.
    pub failure_count: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SuiteConfig {
    pub n_cap: usize,
    pub failure_cap: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            n_cap: DEFAULT_N_CAP,
            failure_cap: DEFAULT_FAILURE_CAP,
        }
    }
}

/// Runs every check for every `n` in `n_min..=n_max`; reports are ordered by check name, then `n`.
pub fn run_suite(
    n_min: usize,
    n_max: usize,
    checks: &[Check],
    config: &SuiteConfig,
) -> Result<Vec<CheckReport>> {
    if n_min == 0 || n_min > config.n_cap {
        return Err(Error::NOutOfRange {
            n: n_min,
            cap: config.n_cap,
        });
    }
    if n_max < n_min || n_max > config.n_cap {
        return Err(Error::NOutOfRange {
            n: n_max,
            cap: config.n_cap,
        });
    }
    let mut checks = checks.to_vec();
    checks.sort_by_key(|c| c.name());
    checks.dedup();

    let mut reports = Vec::new();
    for check in checks {
        for n in n_min..=n_max {
            reports.push(run_check(check, n, config)?);
        }
    }
    Ok(reports)
}

pub fn run_check(check: Check, n: usize, config: &SuiteConfig) -> Result<CheckReport> {
    let start = Instant::now();
    let class: Vec<Permutation> =
        enumerate_avoiders_capped(n, Pattern::P321, config.n_cap)?.collect();
    let mut failures = match check {
        Check::BijectivityGamma => bijectivity(&class, n, config, gamma)?,
        Check::BijectivityTheta => bijectivity(&class, n, config, theta)?,
        Check::CatalanCounts => catalan_counts(&class, n, config)?,
        _ => class.par_iter().filter_map(|s| case(check, s)).collect(),
    };
    let failure_count = failures.len();
    failures.truncate(config.failure_cap);
    Ok(CheckReport {
        check,
        n,
        cases: class.len(),
        failures,
        failure_count,
        elapsed_ms: Some(start.elapsed().as_millis() as u64),
    })
}

fn show<T: fmt::Display>(r: &Result<T>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => format!("error: {e}"),
    }
}

fn show_dbg<T: fmt::Debug>(r: &Result<T>) -> String {
    match r {
        Ok(v) => format!("{v:?}"),
        Err(e) => format!("error: {e}"),
    }
}

fn compare<T: PartialEq + fmt::Display>(
    s: &Permutation,
    expected: Result<T>,
    actual: Result<T>,
) -> Option<Failure> {
    match (&expected, &actual) {
        (Ok(a), Ok(b)) if a == b => None,
        _ => Some(Failure::new(s, show(&expected), show(&actual))),
    }
}

fn compare_dbg<T: PartialEq + fmt::Debug>(
    s: &Permutation,
    expected: Result<T>,
    actual: Result<T>,
) -> Option<Failure> {
    match (&expected, &actual) {
        (Ok(a), Ok(b)) if a == b => None,
        _ => Some(Failure::new(s, show_dbg(&expected), show_dbg(&actual))),
    }
}

fn stats(p: &Permutation) -> (usize, usize) {
    (p.fixed_points(), p.excedances())
}

fn case(check: Check, s: &Permutation) -> Option<Failure> {
    let n = s.n();
    match check {
        Check::Fact2 => compare(s, Ok(s.clone()), build_t_sigma(s).and_then(|t| realize(&t))),
        Check::Fact3RouteAgreement => compare(s, gamma_iterative(s), gamma_template(s)),
        Check::Lemma1 => {
            let from_rows = rsk_tableaux(s).and_then(|pair| {
                let legs: Vec<(usize, usize)> = pair
                    .insertion
                    .row2
                    .iter()
                    .zip(&pair.recording.row2)
                    .map(|(&a, &b)| (bar(n, a), bar(n, b)))
                    .collect();
                template_from_ls(n, &diagonal_ls(&legs))
            });
            let from_path = rsk_tableaux(s)
                .and_then(|pair| dyck_from_tableaux(&pair.insertion, &pair.recording))
                .and_then(|path| template_from_dyck(&path, n));
            compare_dbg(s, from_rows, from_path)
        }
        Check::Lemma3 => {
            let expected = rcl_corners(s).map(|c| {
                let v: Vec<usize> = c.corners.iter().map(|c| c.value).collect();
                let p: Vec<usize> = c.corners.iter().map(|c| c.position).collect();
                (v, p)
            });
            let actual = rsk_tableaux(s).map(|pair| (pair.insertion.row2, pair.recording.row2));
            compare_dbg(s, expected, actual)
        }
        Check::Theorem1Route => compare_dbg(s, theta_rsk_template(s), theta_corners_template(s)),
        Check::Theorem2Route => compare_dbg(s, theta_rsk_template(s), theta_slide_flip_template(s)),
        Check::Theorem3 => compare(s, gamma_iterative(&s.irc()), theta_rsk(s)),
        Check::FixedPoints => {
            let images = gamma(s).and_then(|g| Ok((g.fixed_points(), theta(s)?.fixed_points())));
            compare_dbg(s, Ok((s.fixed_points(), s.fixed_points())), images)
        }
        Check::Excedances => {
            let images = gamma(s).and_then(|g| Ok((g.excedances(), theta(s)?.excedances())));
            compare_dbg(s, Ok((s.excedances(), s.excedances())), images)
        }
        Check::InverseCommuteGamma => {
            compare(s, gamma(s).map(|g| g.inverse()), gamma(&s.inverse()))
        }
        Check::InverseCommuteTheta => {
            compare(s, theta(s).map(|g| g.inverse()), theta(&s.inverse()))
        }
        Check::RcTemplate => compare(
            s,
            Ok(s.clone()),
            build_t_rc_bar(s).and_then(|t| rc_realize(&t)),
        ),
        Check::BarReflection => compare_dbg(
            s,
            build_t_sigma(&s.rc()).map(|t| t.bar()),
            build_t_rc_bar(s),
        ),
        Check::BijectivityGamma | Check::BijectivityTheta | Check::CatalanCounts => {
            unreachable!("whole-class checks are handled separately")
        }
    }
}

/// The image of `S_n(321)` under `f` must be exactly `S_n(132)`, hit once each.
fn bijectivity(
    class: &[Permutation],
    n: usize,
    config: &SuiteConfig,
    f: fn(&Permutation) -> Result<Permutation>,
) -> Result<Vec<Failure>> {
    let targets: HashSet<Permutation> =
        enumerate_avoiders_capped(n, Pattern::P132, config.n_cap)?.collect();
    let images: Vec<Result<Permutation>> = class.par_iter().map(f).collect();
    let mut failures = Vec::new();
    let mut hit = HashSet::new();
    for (s, image) in class.iter().zip(images) {
        match image {
            Err(e) => failures.push(Failure::new(s, "an image", format!("error: {e}"))),
            Ok(img) if !targets.contains(&img) => {
                failures.push(Failure::new(s, "a 132-avoider", img))
            }
            Ok(img) => {
                if !hit.insert(img.clone()) {
                    failures.push(Failure::new(s, "an unused image", img));
                }
            }
        }
    }
    let mut missed: Vec<&Permutation> = targets.iter().filter(|t| !hit.contains(*t)).collect();
    missed.sort();
    for t in missed {
        failures.push(Failure::new("-", t, "never hit"));
    }
    Ok(failures)
}

fn catalan_counts(class: &[Permutation], n: usize, config: &SuiteConfig) -> Result<Vec<Failure>> {
    let expected = catalan(n);
    let n132 = enumerate_avoiders_capped(n, Pattern::P132, config.n_cap)?.count() as u64;
    let mut failures = Vec::new();
    if class.len() as u64 != expected {
        failures.push(Failure::new(format!("|S_{n}(321)|"), expected, class.len()));
    }
    if n132 != expected {
        failures.push(Failure::new(format!("|S_{n}(132)|"), expected, n132));
    }
    Ok(failures)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct StatRow {
    pub fixed_points: usize,
    pub excedances: usize,
    pub count: u64,
}

/// Joint distribution of (fixed points, excedances) over an avoidance class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatTable {
    pub n: usize,
    pub class: Pattern,
    pub rows: Vec<StatRow>,
}

impl StatTable {
    pub fn total(&self) -> u64 {
        self.rows.iter().map(|r| r.count).sum()
    }

    pub fn get(&self, fixed_points: usize, excedances: usize) -> u64 {
        self.rows
            .iter()
            .find(|r| r.fixed_points == fixed_points && r.excedances == excedances)
            .map_or(0, |r| r.count)
    }

    /// Same rows, ignoring which class they came from.
    pub fn same_distribution(&self, other: &StatTable) -> bool {
        self.n == other.n && self.rows == other.rows
    }
}

pub fn stats_table(n: usize, class: Pattern) -> Result<StatTable> {
    stats_table_capped(n, class, DEFAULT_N_CAP)
}

pub fn stats_table_capped(n: usize, class: Pattern, cap: usize) -> Result<StatTable> {
    let mut counts: BTreeMap<(usize, usize), u64> = BTreeMap::new();
    for p in enumerate_avoiders_capped(n, class, cap)? {
        *counts.entry(stats(&p)).or_default() += 1;
    }
    let rows = counts
        .into_iter()
        .map(|((fixed_points, excedances), count)| StatRow {
            fixed_points,
            excedances,
            count,
        })
        .collect();
    Ok(StatTable { n, class, rows })
}

/// One line of `map` / `enumerate` JSON output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapRecord {
    pub n: usize,
    pub sigma: Permutation,
    pub map: String,
    pub image: Permutation,
    pub fixed_points: usize,
    pub excedances: usize,
}

impl MapRecord {
    pub fn new(map: &str, sigma: Permutation, image: Permutation) -> Self {
        let (fixed_points, excedances) = stats(&image);
        MapRecord {
            n: sigma.n(),
            sigma,
            map: map.to_string(),
            image,
            fixed_points,
            excedances,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_names_round_trip() {
        assert_eq!(Check::ALL.len(), 16);
        for &c in Check::ALL {
            assert_eq!(c.name().parse::<Check>().unwrap(), c);
        }
        assert_eq!(
            "nope".parse::<Check>(),
            Err(Error::UnknownCheck("nope".into()))
        );
        assert_eq!(parse_checks("all").unwrap().len(), 16);
        assert_eq!(
            parse_checks("theorem3, fact2,theorem3").unwrap(),
            vec![Check::Fact2, Check::Theorem3]
        );
    }

    #[test]
    fn theta_matches_gamma_irc_through_eight() {
        let reports = run_suite(1, 8, &[Check::Theorem3], &SuiteConfig::default()).unwrap();
        assert_eq!(reports.len(), 8);
        assert!(reports.iter().all(CheckReport::passed));
        assert_eq!(reports.iter().map(|r| r.cases).sum::<usize>(), 2055);
    }

    #[test]
    fn everything_on_n1() {
        let reports = run_suite(1, 1, Check::ALL, &SuiteConfig::default()).unwrap();
        assert_eq!(reports.len(), 16);
        assert!(reports.iter().all(|r| r.passed() && r.cases == 1));
        let names: Vec<&str> = reports.iter().map(|r| r.check.name()).collect();
        let mut sorted = names.clone();
        sorted.sort();
        assert_eq!(names, sorted);
    }

    #[test]
    fn suite_range_errors() {
        let cfg = SuiteConfig::default();
        assert!(run_suite(0, 3, &[Check::Fact2], &cfg).is_err());
        assert!(run_suite(3, 2, &[Check::Fact2], &cfg).is_err());
        assert!(run_suite(1, 11, &[Check::Fact2], &cfg).is_err());
    }

    #[test]
    fn small_stat_tables() {
        let t = stats_table(2, Pattern::P321).unwrap();
        assert_eq!(t.get(2, 0), 1);
        assert_eq!(t.get(0, 1), 1);
        assert_eq!(t.rows.len(), 2);
        // 123:(3,0) 132:(1,1) 213:(1,1) 231:(0,2) 312:(0,1)
        let t = stats_table(3, Pattern::P321).unwrap();
        assert_eq!(t.total(), 5);
        assert_eq!(
            (t.get(3, 0), t.get(1, 1), t.get(0, 2), t.get(0, 1)),
            (1, 2, 1, 1)
        );
    }

    #[test]
    fn bijectivity_catches_the_identity_map() {
        let cfg = SuiteConfig::default();
        let class: Vec<Permutation> = enumerate_avoiders_capped(4, Pattern::P321, 10)
            .unwrap()
            .collect();
        let failures = bijectivity(&class, 4, &cfg, |p| Ok(p.clone())).unwrap();
        // 321-avoiders that contain 132, plus the 132-avoiders containing 321 never hit.
        let contain_132 = class.iter().filter(|p| !p.avoids(Pattern::P132)).count();
        assert_eq!(failures.len(), 2 * contain_132);
        assert!(failures.iter().any(|f| f.actual == "never hit"));
    }
}
