//! Named experiment suites. Each suite returns an [`ExperimentReport`] whose
//! serialized form depends only on the suite, the seed and the library
//! version.

use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use weylret_core::fan::build_fan;
use weylret_core::geometry::{parallel, rat, Rational};
use weylret_core::matroid::{
    bruhat_interval, default_base_point, fano_matroid_s7, has_unique_maximum, is_coxeter_matroid,
    is_flag_matroid, phi_polytope_check, two_element_analysis,
};
use weylret_core::orbit::{fixed_points, geometric_table, sample_rational_point, SampleProfile};
use weylret_core::retraction::{
    algebraic_retract, closest_set, matroid_retract, retraction_table, MatroidStrategy, Method,
};
use weylret_core::{
    GroupDescriptor, RationalMatrix, SignedPermutation, SubsetM, WeylError, WeylType,
};

use crate::io::{fan_json, matrix_json, table_json, window_json, windows_json};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub const SUITES: &[&str] = &[
    "table1",
    "closest-unique",
    "thmB-random",
    "matroid-equiv",
    "gs-s3-exhaustive",
    "gs-random",
    "two-element-s4",
    "fano",
    "fan-figures",
    "counterexamples",
];

#[derive(Debug, thiserror::Error)]
pub enum SuiteError {
    #[error("unknown suite {0:?} (known: {known})", known = SUITES.join(", "))]
    UnknownSuite(String),
    #[error(transparent)]
    Weyl(#[from] WeylError),
}

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub seed: u64,
    /// Random matrices per `n` for the orbit suites.
    pub samples: usize,
    /// Wall-clock budget for the `fano` suite.
    pub budget: Duration,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            seed: 0,
            samples: 100,
            budget: Duration::from_secs(600),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseResult {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub detail: Value,
}

impl CaseResult {
    fn new(name: impl Into<String>, passed: bool, detail: Value) -> Self {
        CaseResult {
            name: name.into(),
            passed,
            detail,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ExperimentReport {
    pub suite: String,
    pub version: &'static str,
    pub seed: u64,
    pub passed: bool,
    pub cases_passed: usize,
    pub cases_total: usize,
    pub cases: Vec<CaseResult>,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub artifacts: Value,
    /// Not serialized by default so that reruns are byte-identical.
    #[serde(skip)]
    pub wall_time: Duration,
}

impl ExperimentReport {
    fn new(suite: &str, opts: &SuiteOptions, cases: Vec<CaseResult>, artifacts: Value) -> Self {
        let cases_passed = cases.iter().filter(|c| c.passed).count();
        ExperimentReport {
            suite: suite.to_owned(),
            version: VERSION,
            seed: opts.seed,
            passed: cases_passed == cases.len(),
            cases_passed,
            cases_total: cases.len(),
            cases,
            artifacts,
            wall_time: Duration::ZERO,
        }
    }

    /// Serialized report; `timing` adds the wall time in milliseconds.
    pub fn to_json(&self, timing: bool) -> Value {
        let mut v = serde_json::to_value(self).expect("reports serialize");
        if timing {
            v["wall_time_ms"] = json!(self.wall_time.as_millis() as u64);
        }
        v
    }

    pub fn failures(&self) -> impl Iterator<Item = &CaseResult> {
        self.cases.iter().filter(|c| !c.passed)
    }
}

pub fn run_suite(name: &str, opts: &SuiteOptions) -> Result<ExperimentReport, SuiteError> {
    let start = Instant::now();
    let mut report = match name {
        "table1" => table1(opts),
        "closest-unique" => closest_unique(opts),
        "thmB-random" => orbit_retraction_random(opts),
        "matroid-equiv" => matroid_equiv(opts),
        "gs-s3-exhaustive" => gs_s3_exhaustive(opts),
        "gs-random" => gs_random(opts),
        "two-element-s4" => two_element_s4(opts),
        "fano" => fano(opts),
        "fan-figures" => orbit_fans(opts),
        "counterexamples" => counterexamples(opts),
        other => return Err(SuiteError::UnknownSuite(other.to_owned())),
    }?;
    report.wall_time = start.elapsed();
    Ok(report)
}

fn sp(w: &[i32]) -> SignedPermutation {
    SignedPermutation::new(w)
}

/// The two 3×3 orbit representatives whose retraction tables are tabulated
/// below.
pub fn table1_matrices() -> [RationalMatrix; 2] {
    [
        RationalMatrix::from_i64_rows(&[&[1, 1, 0], &[1, 0, 1], &[1, 0, 0]]).expect("3×3"),
        RationalMatrix::from_i64_rows(&[&[1, 0, 1], &[0, 1, 0], &[1, 0, 0]]).expect("3×3"),
    ]
}

/// `u ↦ u^g` for the two orbits, in the column order 123, 213, 231, 321,
/// 312, 132.
pub const TABLE1_COLUMNS: [[i32; 3]; 6] = [
    [1, 2, 3],
    [2, 1, 3],
    [2, 3, 1],
    [3, 2, 1],
    [3, 1, 2],
    [1, 3, 2],
];
pub const TABLE1_ROWS: [[[i32; 3]; 6]; 2] = [
    [
        [1, 2, 3],
        [2, 1, 3],
        [2, 1, 3],
        [3, 1, 2],
        [3, 1, 2],
        [1, 3, 2],
    ],
    [
        [1, 2, 3],
        [1, 2, 3],
        [3, 2, 1],
        [3, 2, 1],
        [3, 2, 1],
        [1, 2, 3],
    ],
];

fn table1(opts: &SuiteOptions) -> Result<ExperimentReport, SuiteError> {
    let mut cases = Vec::new();
    let mut artifacts = serde_json::Map::new();
    for (k, (x, row)) in table1_matrices().iter().zip(TABLE1_ROWS.iter()).enumerate() {
        let label = if k == 0 { "Y" } else { "Y'" };
        let geometric = geometric_table(x)?;
        let fp = fixed_points(x)?.points;
        let algebraic = retraction_table(&fp, Method::Algebraic)?;
        for (method, table) in [("geometric", &geometric), ("algebraic", &algebraic)] {
            let matched = TABLE1_COLUMNS
                .iter()
                .zip(row)
                .filter(|(u, e)| table.get(&sp(&u[..])) == Some(&sp(&e[..])))
                .count();
            cases.push(CaseResult::new(
                format!("{label} {method}"),
                matched == 6,
                json!({ "matched": matched, "of": 6 }),
            ));
        }
        artifacts.insert(
            label.to_owned(),
            json!({
                "matrix": matrix_json(x),
                "fixed_points": windows_json(fp.iter()),
                "geometric": table_json(&geometric),
                "algebraic": table_json(&algebraic),
            }),
        );
    }
    Ok(ExperimentReport::new(
        "table1",
        opts,
        cases,
        Value::Object(artifacts),
    ))
}

/// Seed for the `i`-th sample of size `n`, derived from the suite seed.
pub fn sample_seed(seed: u64, n: usize, i: usize) -> u64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((n as u64) << 32) ^ i as u64);
    rng.gen()
}

/// Profiles cycle through several densities so that the fixed-point sets
/// range from single points to all of `S_n`.
pub fn sample_profile(i: usize) -> SampleProfile {
    match i % 5 {
        0 => SampleProfile::Sparse {
            density_percent: 20,
        },
        1 => SampleProfile::Sparse {
            density_percent: 35,
        },
        2 => SampleProfile::Sparse {
            density_percent: 50,
        },
        3 => SampleProfile::Sparse {
            density_percent: 70,
        },
        _ => SampleProfile::Generic,
    }
}

/// One random orbit: its matrix, fixed points and geometric table.
pub struct OrbitSample {
    pub n: usize,
    pub index: usize,
    pub seed: u64,
    pub x: RationalMatrix,
    pub points: SubsetM,
    pub geometric: weylret_core::RetractionTable,
}

pub fn orbit_samples(opts: &SuiteOptions) -> Result<Vec<OrbitSample>, SuiteError> {
    let jobs: Vec<(usize, usize)> = [3, 4, 5]
        .into_iter()
        .flat_map(|n| (0..opts.samples).map(move |i| (n, i)))
        .collect();
    jobs.par_iter()
        .map(|&(n, index)| {
            let seed = sample_seed(opts.seed, n, index);
            let x = sample_rational_point(n, seed, &sample_profile(index))?;
            let points = fixed_points(&x)?.points;
            let geometric = geometric_table(&x)?;
            Ok(OrbitSample {
                n,
                index,
                seed,
                x,
                points,
                geometric,
            })
        })
        .collect()
}

fn sample_name(s: &OrbitSample) -> String {
    format!("n={} #{} seed={}", s.n, s.index, s.seed)
}

fn size_histogram(samples: &[OrbitSample]) -> Value {
    let mut hist = std::collections::BTreeMap::<String, usize>::new();
    for s in samples {
        *hist
            .entry(format!("n={} |Y^T|={:03}", s.n, s.points.len()))
            .or_default() += 1;
    }
    json!(hist)
}

fn orbit_retraction_random(opts: &SuiteOptions) -> Result<ExperimentReport, SuiteError> {
    let samples = orbit_samples(opts)?;
    let cases = samples
        .par_iter()
        .map(|s| {
            let algebraic = retraction_table(&s.points, Method::Algebraic)?;
            let mismatches: Vec<Value> = s
                .geometric
                .iter()
                .filter(|(u, r)| algebraic.get(u) != Some(r))
                .map(|(u, r)| json!({ "u": window_json(u), "geometric": window_json(r), "algebraic": algebraic.get(u).map(window_json) }))
                .collect();
            let detail = if mismatches.is_empty() {
                json!({ "entries": s.geometric.len(), "fixed_points": s.points.len() })
            } else {
                json!({ "matrix": matrix_json(&s.x), "mismatches": mismatches })
            };
            Ok(CaseResult::new(sample_name(s), mismatches.is_empty(), detail))
        })
        .collect::<Result<Vec<_>, WeylError>>()?;
    let artifacts = json!({ "fixed_point_sizes": size_histogram(&samples) });
    Ok(ExperimentReport::new("thmB-random", opts, cases, artifacts))
}

fn closest_unique(opts: &SuiteOptions) -> Result<ExperimentReport, SuiteError> {
    let samples = orbit_samples(opts)?;
    let cases = samples
        .par_iter()
        .map(|s| {
            let mut bad = Vec::new();
            for (u, r) in s.geometric.iter() {
                let (d, argmin) = closest_set(&s.points, u)?;
                if argmin.len() != 1 || argmin[0] != *r {
                    bad.push(json!({ "u": window_json(u), "distance": d, "closest": windows_json(&argmin) }));
                }
            }
            let detail = if bad.is_empty() {
                Value::Null
            } else {
                json!({ "matrix": matrix_json(&s.x), "failures": bad })
            };
            Ok(CaseResult::new(sample_name(s), bad.is_empty(), detail))
        })
        .collect::<Result<Vec<_>, WeylError>>()?;
    Ok(ExperimentReport::new(
        "closest-unique",
        opts,
        cases,
        Value::Null,
    ))
}

fn matroid_equiv(opts: &SuiteOptions) -> Result<ExperimentReport, SuiteError> {
    let samples = orbit_samples(opts)?;
    let cases = samples
        .par_iter()
        .map(|s| {
            let verdict = is_coxeter_matroid(&s.points)?;
            let algebraic = retraction_table(&s.points, Method::Algebraic)?;
            let same = verdict.table.as_ref().is_some_and(|t| t.same_values(&algebraic));
            let passed = verdict.is_matroid && same;
            let detail = match (&verdict.witness, passed) {
                (_, true) => Value::Null,
                (Some((u, minimal)), false) => {
                    json!({ "matrix": matrix_json(&s.x), "u": window_json(u), "minimal": windows_json(minimal) })
                }
                (None, false) => json!({ "matrix": matrix_json(&s.x), "tables_differ": true }),
            };
            Ok(CaseResult::new(sample_name(s), passed, detail))
        })
        .collect::<Result<Vec<_>, WeylError>>()?;
    Ok(ExperimentReport::new(
        "matroid-equiv",
        opts,
        cases,
        Value::Null,
    ))
}

/// The three matroid criteria for one subset.
fn gs_case(m: &SubsetM) -> Result<CaseResult, WeylError> {
    let minimum = is_coxeter_matroid(m)?.is_matroid;
    let maximum = has_unique_maximum(m)?.is_matroid;
    let polytope = phi_polytope_check(m, &default_base_point(m.group()))?.is_phi();
    let name = m
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ");
    Ok(CaseResult::new(
        name,
        minimum == maximum && maximum == polytope,
        json!({ "matroid": minimum, "maximality": maximum, "phi_polytope": polytope }),
    ))
}

fn all_subsets(group: &GroupDescriptor) -> Result<Vec<SubsetM>, WeylError> {
    let els = group.elements()?;
    (1u64..(1 << els.len()))
        .map(|mask| {
            SubsetM::new(
                group,
                els.iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, w)| w.clone()),
            )
        })
        .collect()
}

fn gs_s3_exhaustive(opts: &SuiteOptions) -> Result<ExperimentReport, SuiteError> {
    let subsets = all_subsets(&GroupDescriptor::symmetric(3)?)?;
    let cases = subsets
        .par_iter()
        .map(gs_case)
        .collect::<Result<Vec<_>, _>>()?;
    let matroids = cases.iter().filter(|c| c.detail["matroid"] == true).count();
    Ok(ExperimentReport::new(
        "gs-s3-exhaustive",
        opts,
        cases,
        json!({ "subsets": subsets.len(), "matroids": matroids }),
    ))
}

/// Random subsets of `S₄` (plain, Bruhat intervals and orbit fixed-point
/// sets) and every subset of `BC₂`.
pub fn gs_random_subsets(seed: u64) -> Result<Vec<SubsetM>, WeylError> {
    let s4 = GroupDescriptor::symmetric(4)?;
    let els = s4.elements()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for _ in 0..200 {
        let size = rng.gen_range(1..=8);
        let mut shuffled = els.clone();
        shuffled.shuffle(&mut rng);
        out.push(SubsetM::new(&s4, shuffled.into_iter().take(size))?);
    }
    while out.len() < 230 {
        let v = els.choose(&mut rng).expect("nonempty").clone();
        let w = els.choose(&mut rng).expect("nonempty").clone();
        if s4.bruhat_leq(&v, &w)? {
            out.push(bruhat_interval(&s4, &v, &w)?);
        }
    }
    for i in 0..30 {
        let profile = sample_profile(i);
        let x = sample_rational_point(4, rng.gen(), &profile)?;
        out.push(fixed_points(&x)?.points);
    }
    out.extend(all_subsets(&GroupDescriptor::simple(WeylType::BC, 2)?)?);
    Ok(out)
}

fn gs_random(opts: &SuiteOptions) -> Result<ExperimentReport, SuiteError> {
    let subsets = gs_random_subsets(opts.seed)?;
    let cases = subsets
        .par_iter()
        .map(gs_case)
        .collect::<Result<Vec<_>, _>>()?;
    let count = |ty: WeylType| {
        subsets
            .iter()
            .filter(|m| m.group().factors()[0].ty == ty)
            .count()
    };
    let matroids = cases.iter().filter(|c| c.detail["matroid"] == true).count();
    Ok(ExperimentReport::new(
        "gs-random",
        opts,
        cases,
        json!({ "s4_subsets": count(WeylType::A), "bc2_subsets": count(WeylType::BC), "matroids": matroids }),
    ))
}

fn two_element_s4(opts: &SuiteOptions) -> Result<ExperimentReport, SuiteError> {
    let s4 = GroupDescriptor::symmetric(4)?;
    let els = s4.elements()?;
    let pairs: Vec<(usize, usize)> = (0..els.len())
        .flat_map(|i| (i + 1..els.len()).map(move |j| (i, j)))
        .collect();
    let cases = pairs
        .par_iter()
        .map(|&(i, j)| {
            let m = SubsetM::new(&s4, [els[i].clone(), els[j].clone()])?;
            let r = two_element_analysis(&m)?;
            Ok(CaseResult::new(
                format!("{} {}", els[i], els[j]),
                r.consistent(),
                json!({
                    "unique_closest": r.unique_closest,
                    "coxeter_matroid": r.coxeter_matroid,
                    "flag_matroid": r.flag_matroid,
                    "reflection_difference": r.reflection_difference,
                }),
            ))
        })
        .collect::<Result<Vec<_>, WeylError>>()?;
    let edges = cases
        .iter()
        .filter(|c| c.detail["coxeter_matroid"] == true)
        .count();
    Ok(ExperimentReport::new(
        "two-element-s4",
        opts,
        cases,
        json!({ "pairs": pairs.len(), "matroid_pairs": edges }),
    ))
}

/// Runs the greedy-first matroid check on the Fano subset of `S₇`, giving
/// up when the budget runs out.
fn fano(opts: &SuiteOptions) -> Result<ExperimentReport, SuiteError> {
    let start = Instant::now();
    let m = fano_matroid_s7();
    let group = m.group().clone();
    let mut cases = vec![CaseResult::new(
        "size",
        m.len() == 4032,
        json!({ "elements": m.len() }),
    )];
    let us = group.elements()?;
    let outcomes: Vec<Result<Option<Value>, Option<WeylError>>> = us
        .par_iter()
        .map(|u| {
            if start.elapsed() > opts.budget {
                return Err(None);
            }
            match matroid_retract(&m, u, MatroidStrategy::GreedyFirst) {
                Ok(_) => Ok(None),
                Err(WeylError::NotAMatroidAt { u, minimal }) => Ok(Some(
                    json!({ "u": window_json(&u), "minimal": windows_json(&minimal) }),
                )),
                Err(e) => Err(Some(e)),
            }
        })
        .collect();
    let mut witness = None;
    let mut over_budget = false;
    for o in outcomes {
        match o {
            Ok(None) => {}
            Ok(Some(w)) => {
                witness.get_or_insert(w);
            }
            Err(None) => over_budget = true,
            Err(Some(e)) => return Err(e.into()),
        }
    }
    let detail = match (&witness, over_budget) {
        (Some(w), _) => json!({ "witness": w }),
        (None, true) => json!({ "error": "budget exceeded", "budget_s": opts.budget.as_secs() }),
        (None, false) => json!({ "checked": us.len() }),
    };
    cases.push(CaseResult::new(
        "coxeter matroid (greedy first)",
        witness.is_none() && !over_budget,
        detail,
    ));
    Ok(ExperimentReport::new("fano", opts, cases, Value::Null))
}

fn cone_case(
    name: &str,
    fan: &weylret_core::fan::OrbitFan,
    expected: &[(&[i32], &[&[i32]])],
) -> CaseResult {
    let got: Vec<(SignedPermutation, Vec<SignedPermutation>)> = fan
        .cones()
        .iter()
        .map(|(y, us)| (y.clone(), us.clone()))
        .collect();
    let mut want: Vec<(SignedPermutation, Vec<SignedPermutation>)> = expected
        .iter()
        .map(|(y, us)| {
            let mut us: Vec<_> = us.iter().map(|u| sp(u)).collect();
            us.sort();
            (sp(y), us)
        })
        .collect();
    want.sort();
    CaseResult::new(name, got == want, fan_json(fan))
}

fn orbit_fans(opts: &SuiteOptions) -> Result<ExperimentReport, SuiteError> {
    let s3 = GroupDescriptor::symmetric(3)?;
    let [x, x_prime] = table1_matrices();
    let fan = build_fan(&s3, &geometric_table(&x)?)?;
    let fan_prime = build_fan(&s3, &geometric_table(&x_prime)?)?;
    let generic = build_fan(
        &s3,
        &retraction_table(&SubsetM::full(&s3)?, Method::Algebraic)?,
    )?;
    let mut cases = vec![cone_case(
        "Y cones",
        &fan,
        &[
            (&[1, 2, 3], &[&[1, 2, 3]]),
            (&[2, 1, 3], &[&[2, 1, 3], &[2, 3, 1]]),
            (&[3, 1, 2], &[&[3, 1, 2], &[3, 2, 1]]),
            (&[1, 3, 2], &[&[1, 3, 2]]),
        ],
    )];
    cases.push(CaseResult::new(
        "Y strongly convex",
        fan.strong_convexity_report().values().all(|&b| b) && fan.lineality().is_empty(),
        Value::Null,
    ));
    cases.push(cone_case(
        "Y' cones",
        &fan_prime,
        &[
            (&[1, 2, 3], &[&[1, 2, 3], &[2, 1, 3], &[1, 3, 2]]),
            (&[3, 2, 1], &[&[2, 3, 1], &[3, 2, 1], &[3, 1, 2]]),
        ],
    ));
    cases.push(CaseResult::new(
        "Y' not strongly convex",
        fan_prime.strong_convexity_report().values().all(|&b| !b),
        Value::Null,
    ));
    let axis: Vec<Rational> = [1, -2, 1].into_iter().map(rat).collect();
    let lineality = fan_prime.lineality();
    cases.push(CaseResult::new(
        "Y' lineality",
        lineality.len() == 1 && parallel(&lineality[0], &axis),
        json!({ "rank": lineality.len() }),
    ));
    cases.push(CaseResult::new(
        "generic orbit",
        generic.cones().values().all(|us| us.len() == 1) && generic.lineality().is_empty(),
        Value::Null,
    ));
    for (label, f) in [("Y", &fan), ("Y'", &fan_prime)] {
        let connected = f.connectivity_report().values().all(|&b| b);
        let convex = f.convexity_report()?.values().all(|&b| b);
        cases.push(CaseResult::new(
            format!("{label} cones connected and convex"),
            connected && convex,
            Value::Null,
        ));
    }
    Ok(ExperimentReport::new(
        "fan-figures",
        opts,
        cases,
        Value::Null,
    ))
}

fn counterexamples(opts: &SuiteOptions) -> Result<ExperimentReport, SuiteError> {
    let s3 = GroupDescriptor::symmetric(3)?;
    let s4 = GroupDescriptor::symmetric(4)?;
    let mut cases = Vec::new();

    let m = SubsetM::new(&s3, [sp(&[2, 1, 3]), sp(&[1, 3, 2])])?;
    let (d, closest) = closest_set(&m, &s3.identity())?;
    let minimum = is_coxeter_matroid(&m)?;
    let flag = is_flag_matroid(&m)?;
    cases.push(CaseResult::new(
        "{213,132}",
        d == 1 && closest.len() == 2 && !minimum.is_matroid && !flag.is_matroid,
        json!({
            "distance": d,
            "closest_to_identity": windows_json(&closest),
            "matroid": minimum.is_matroid,
            "flag_matroid": flag.is_matroid,
        }),
    ));

    let m = SubsetM::new(&s4, [sp(&[2, 1, 4, 3]), sp(&[4, 3, 1, 2])])?;
    let u = sp(&[1, 4, 2, 3]);
    let r = algebraic_retract(&m, &u)?;
    let dr = s4.metric(&u, &r)?;
    let (d, closest) = closest_set(&m, &u)?;
    cases.push(CaseResult::new(
        "{2143,4312}",
        r == sp(&[4, 3, 1, 2]) && dr == 3 && d == 2 && closest == vec![sp(&[2, 1, 4, 3])],
        json!({
            "retract": window_json(&r),
            "retract_distance": dr,
            "closest": windows_json(&closest),
            "closest_distance": d,
        }),
    ));

    let m = SubsetM::new(
        &s4,
        [
            sp(&[1, 4, 2, 3]),
            sp(&[1, 4, 3, 2]),
            sp(&[2, 4, 1, 3]),
            sp(&[3, 4, 1, 2]),
        ],
    )?;
    let r = algebraic_retract(&m, &sp(&[2, 3, 1, 4]))?;
    cases.push(CaseResult::new(
        "greedy retraction of 2314",
        r == sp(&[2, 4, 1, 3]),
        json!({ "retract": window_json(&r) }),
    ));
    Ok(ExperimentReport::new(
        "counterexamples",
        opts,
        cases,
        Value::Null,
    ))
}
