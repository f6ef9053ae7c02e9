use gstar::cochar::{predicted_dim, report_from_dim, MultiplicityReport};
use gstar::dims::{dimension, BasisFlavor, DimOptions};
use gstar::eval::{is_identity_homogeneous, is_identity_with_slack};
use gstar::hwv::{family_label, hwv_family, hwv_nonidentity_check, HwvCheck, HwvParams, HwvVariant};
use gstar::identities::identity_basis;
use gstar::partition::{Multipartition, Partition};
use gstar::witness::repeated_odd_obstruction;
use gstar::{AlgebraKind, MultiDegree};
use rayon::prelude::*;
use serde::Serialize;

use crate::cache::DimCache;
use crate::config::RunConfig;
use crate::error::CliResult;
use crate::report::Report;

fn dim_options(cfg: &RunConfig) -> DimOptions {
    DimOptions {
        rank_slack: cfg.rank_slack,
        ..DimOptions::default()
    }
}

fn open_cache(cfg: &RunConfig) -> CliResult<DimCache> {
    match &cfg.cache {
        Some(path) => DimCache::open(path),
        None => Ok(DimCache::in_memory()),
    }
}

/// Fills the cache for every job, computing misses in parallel, then self-tests and saves.
fn resolve_dims(cfg: &RunConfig, cache: &mut DimCache, jobs: &[(AlgebraKind, MultiDegree, BasisFlavor)]) -> CliResult<()> {
    let opts = dim_options(cfg);
    let mut missing: Vec<_> = jobs.iter().copied().filter(|&(k, d, f)| cache.get(k, d, f).is_none()).collect();
    missing.sort();
    missing.dedup();
    let computed: Vec<_> = missing
        .par_iter()
        .map(|&(k, d, f)| dimension(d, k, f, &opts).map(|dim| (k, d, f, dim)))
        .collect::<Result<_, _>>()?;
    for (k, d, f, dim) in computed {
        cache.insert(k, d, f, dim);
    }
    if cfg.cache.is_some() {
        cache.self_test(cfg.seed, &opts)?;
    }
    cache.save()
}

fn degrees(lo: usize, hi: usize) -> Vec<MultiDegree> {
    (lo..=hi).flat_map(MultiDegree::with_total).collect()
}

fn yes(b: bool) -> String {
    b.to_string()
}

#[derive(Debug, Serialize)]
struct VerifyRow {
    algebra: AlgebraKind,
    label: String,
    pass: bool,
}

pub fn verify(cfg: &RunConfig) -> CliResult<Report> {
    let jobs: Vec<_> = cfg
        .algebra
        .kinds()
        .into_iter()
        .flat_map(|k| identity_basis(k).into_iter().map(move |id| (k, id)))
        .collect();
    let rows: Vec<VerifyRow> = jobs
        .par_iter()
        .map(|(k, id)| {
            Ok(VerifyRow {
                algebra: *k,
                label: id.label.clone(),
                pass: is_identity_with_slack(&id.poly, *k, cfg.rank_slack)?,
            })
        })
        .collect::<CliResult<_>>()?;
    let passed = rows.iter().all(|r| r.pass);
    let cells = rows.iter().map(|r| vec![r.algebra.to_string(), r.label.clone(), yes(r.pass)]).collect();
    Report::new("verify", passed, rows, vec!["algebra", "label", "pass"], cells)
}

#[derive(Debug, Serialize)]
struct DimsRow {
    algebra: AlgebraKind,
    n1: usize,
    n2: usize,
    n3: usize,
    n4: usize,
    #[serde(rename = "dimP")]
    dim_p: usize,
    #[serde(rename = "dimGamma")]
    dim_gamma: usize,
    predicted: u64,
    #[serde(rename = "match")]
    matched: bool,
}

pub fn dims(cfg: &RunConfig) -> CliResult<Report> {
    cfg.check_degree_cap()?;
    let mut cache = open_cache(cfg)?;
    let targets: Vec<(AlgebraKind, MultiDegree)> = cfg
        .algebra
        .kinds()
        .into_iter()
        .flat_map(|k| degrees(1, cfg.max).into_iter().map(move |d| (k, d)))
        .collect();
    let jobs: Vec<_> = targets
        .iter()
        .flat_map(|&(k, d)| [(k, d, BasisFlavor::Full), (k, d, BasisFlavor::Proper)])
        .collect();
    resolve_dims(cfg, &mut cache, &jobs)?;
    let rows: Vec<DimsRow> = targets
        .iter()
        .map(|&(k, d)| {
            let dim_p = cache.get(k, d, BasisFlavor::Full).expect("resolved");
            let predicted = predicted_dim(k, d);
            let [n1, n2, n3, n4] = d.0;
            DimsRow {
                algebra: k,
                n1,
                n2,
                n3,
                n4,
                dim_p,
                dim_gamma: cache.get(k, d, BasisFlavor::Proper).expect("resolved"),
                predicted,
                matched: predicted == dim_p as u64,
            }
        })
        .collect();
    let cells = rows
        .iter()
        .map(|r| {
            vec![
                r.algebra.to_string(),
                r.n1.to_string(),
                r.n2.to_string(),
                r.n3.to_string(),
                r.n4.to_string(),
                r.dim_p.to_string(),
                r.dim_gamma.to_string(),
                r.predicted.to_string(),
                yes(r.matched),
            ]
        })
        .collect();
    let columns = vec!["algebra", "n1", "n2", "n3", "n4", "dimP", "dimGamma", "predicted", "match"];
    Report::new("dims", true, rows, columns, cells)
}

#[derive(Debug, Serialize)]
struct CocharRow {
    #[serde(flatten)]
    report: MultiplicityReport,
    interpreted: bool,
}

pub fn cochar(cfg: &RunConfig) -> CliResult<Report> {
    cfg.check_degree_cap()?;
    let mut cache = open_cache(cfg)?;
    let targets: Vec<(AlgebraKind, MultiDegree)> = cfg
        .algebra
        .kinds()
        .into_iter()
        .flat_map(|k| degrees(0, cfg.max).into_iter().map(move |d| (k, d)))
        .collect();
    let jobs: Vec<_> = targets.iter().map(|&(k, d)| (k, d, BasisFlavor::Full)).collect();
    resolve_dims(cfg, &mut cache, &jobs)?;
    let rows: Vec<CocharRow> = targets
        .iter()
        .map(|&(k, d)| {
            let computed = cache.get(k, d, BasisFlavor::Full).expect("resolved") as u64;
            let report = report_from_dim(k, d, computed);
            CocharRow {
                interpreted: report.interpreted(),
                report,
            }
        })
        .collect();
    let passed = rows.iter().all(|r| r.report.matched);
    let cells = rows
        .iter()
        .map(|r| {
            let [n1, n2, n3, n4] = r.report.degree.0;
            vec![
                r.report.algebra.to_string(),
                n1.to_string(),
                n2.to_string(),
                n3.to_string(),
                n4.to_string(),
                r.report.predicted.to_string(),
                r.report.computed.to_string(),
                yes(r.report.matched),
                yes(r.interpreted),
            ]
        })
        .collect();
    let columns = vec!["algebra", "n1", "n2", "n3", "n4", "predicted", "computed", "match", "interpreted"];
    Report::new("cochar", passed, rows, columns, cells)
}

#[derive(Debug, Serialize)]
struct HwvRow {
    algebra: AlgebraKind,
    multipartition: String,
    family: String,
    params: Option<HwvParams>,
    nonzero: bool,
    expected_nonzero: bool,
    normal_form: Option<bool>,
    pass: bool,
}

impl From<HwvCheck> for HwvRow {
    fn from(c: HwvCheck) -> Self {
        HwvRow {
            pass: c.passed(),
            algebra: c.algebra,
            multipartition: c.multipartition.to_string(),
            family: c.family,
            params: Some(c.params),
            nonzero: c.nonzero,
            expected_nonzero: c.expected_nonzero,
            normal_form: c.normal_form,
        }
    }
}

fn shape(a: &[usize], b: &[usize], c: &[usize], d: &[usize]) -> Multipartition {
    Multipartition::new(
        Partition::new(a.to_vec()),
        Partition::new(b.to_vec()),
        Partition::new(c.to_vec()),
        Partition::new(d.to_vec()),
    )
}

/// The `(algebra, shape, params)` grid with `p, q <= 2` and `n3 <= 2`.
fn hwv_grid(kind: AlgebraKind) -> Vec<(Multipartition, HwvParams)> {
    let primary = HwvParams::default();
    let secondary = HwvParams::new(HwvVariant::Secondary, 0, 0, 0);
    let mut grid = Vec::new();
    match kind {
        AlgebraKind::M11E => {
            for p in 1..=2usize {
                let col = vec![1; p];
                let col1 = vec![1; p + 1];
                let prefixes: &[(usize, usize)] = if p == 1 { &[(0, 0), (1, 0), (0, 1), (1, 1)] } else { &[(0, 0)] };
                for &(n1, n3) in prefixes {
                    let (r1, r3) = ([n1], [n3]);
                    grid.push((shape(&r1, &col, &r3, &col), primary));
                    grid.push((shape(&r1, &col, &r3, &col), secondary));
                    grid.push((shape(&r1, &col1, &r3, &col), primary));
                    grid.push((shape(&r1, &col, &r3, &col1), primary));
                }
            }
        }
        AlgebraKind::UT11E => {
            for n1 in 0..=2 {
                for n3 in 0..=2 {
                    grid.push((shape(&[n1], &[], &[n3], &[]), primary));
                    grid.push((shape(&[n1], &[1], &[n3], &[]), primary));
                }
            }
        }
        AlgebraKind::UT3E010 => {
            for p in 0..=2usize {
                for q in 0..=2usize {
                    let n1 = 2 * p + q;
                    let lam1 = [p + q, p];
                    for n3 in 0..=2usize {
                        for (l2, l4) in [(&[1][..], &[][..]), (&[][..], &[1][..])] {
                            for variant in [HwvVariant::Primary, HwvVariant::Secondary] {
                                for i1 in p..=p + q {
                                    grid.push((shape(&lam1, l2, &[n3], l4), HwvParams::new(variant, i1, 0, 0)));
                                }
                            }
                        }
                        for i1 in p..=n1 - p {
                            for i2 in p..=n1 - i1 {
                                for j1 in 0..=n3 {
                                    let params = HwvParams::new(HwvVariant::Primary, i1, i2, j1);
                                    grid.push((shape(&lam1, &[1], &[n3], &[1]), params));
                                }
                            }
                        }
                    }
                }
            }
            for n1 in 0..=2 {
                for n3 in 2..=4 - n1 {
                    for k in 0..=n3 - 2 {
                        grid.push((shape(&[n1], &[], &[n3 - 1, 1], &[]), HwvParams::new(HwvVariant::Primary, k, 0, 0)));
                    }
                }
            }
        }
    }
    grid
}

/// The repeated odd variable in `((p+q,p),(2),(n3),∅)`: the family members are identities and
/// the separating evaluation `c b c · e13` is zero.
fn repeated_odd_rows() -> CliResult<Vec<HwvRow>> {
    let kind = AlgebraKind::UT3E010;
    let mut rows = Vec::new();
    for (p, q, n3) in [(0, 0, 0), (0, 1, 0), (1, 0, 0), (0, 0, 1), (0, 1, 1)] {
        let n1 = 2 * p + q;
        let mp = shape(&[p + q, p], &[2], &[n3], &[]);
        for i1 in p..=n1 - p {
            for i2 in p..=n1 - i1 {
                let params = HwvParams::new(HwvVariant::Primary, i1, i2, 0);
                let f = hwv_family(kind, &mp, &params)?;
                let nonzero = !is_identity_homogeneous(&f, kind)?;
                rows.push(HwvRow {
                    algebra: kind,
                    multipartition: mp.to_string(),
                    family: family_label(kind, &mp, &params)?,
                    params: Some(params),
                    nonzero,
                    expected_nonzero: false,
                    normal_form: None,
                    pass: !nonzero,
                });
            }
        }
    }
    for p in 0..=2usize {
        for mask in 0..(1u32 << p) {
            let ks: Vec<u32> = (0..p).map(|j| 1 + (mask >> j & 1)).collect();
            for tail in 0..=2 {
                let nonzero = !repeated_odd_obstruction(&ks, tail)?.is_zero();
                rows.push(HwvRow {
                    algebra: kind,
                    multipartition: format!("degree ({},2,0,0)", p + tail),
                    family: format!("cbc·e13 with y-indices {ks:?} and tail {tail}"),
                    params: None,
                    nonzero,
                    expected_nonzero: false,
                    normal_form: None,
                    pass: !nonzero,
                });
            }
        }
    }
    Ok(rows)
}

pub fn hwv(cfg: &RunConfig) -> CliResult<Report> {
    let mut rows = Vec::new();
    for kind in cfg.algebra.kinds() {
        let grid = hwv_grid(kind);
        let checked: Vec<HwvRow> = grid
            .par_iter()
            .map(|(mp, params)| hwv_nonidentity_check(kind, mp, params).map(HwvRow::from))
            .collect::<Result<_, _>>()?;
        rows.extend(checked);
        if kind == AlgebraKind::UT3E010 {
            rows.extend(repeated_odd_rows()?);
        }
    }
    let passed = rows.iter().all(|r| r.pass);
    let opt = |b: Option<bool>| b.map_or_else(String::new, yes);
    let cells = rows
        .iter()
        .map(|r| {
            vec![
                r.algebra.to_string(),
                r.multipartition.clone(),
                r.family.clone(),
                yes(r.nonzero),
                yes(r.expected_nonzero),
                opt(r.normal_form),
                yes(r.pass),
            ]
        })
        .collect();
    let columns = vec!["algebra", "multipartition", "family", "nonzero", "expected_nonzero", "normal_form", "pass"];
    Report::new("hwv", passed, rows, columns, cells)
}
