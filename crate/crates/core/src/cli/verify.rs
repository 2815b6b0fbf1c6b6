use super::cover::{ceil_div, run_c4free22, run_greedy, run_t33, run_tt, settle};
use super::instance::{info, Instance};
use super::report::{RunReport, Summary};
use super::{Suite, Usage, VerifyArgs};
use crate::chordal::{find_induced_c4, is_chordal};
use crate::coloring::{coloring_from_intervals, is_tk_coloring, MultiColoring};
use crate::constructions::{
    blow_up, construct_k4_two_paths, construct_k5star, construct_k8_c4free_3col,
    construct_onefourth, construct_partition_coloring, hamilton_paths_for_construction,
    random_c4free_22, random_grown_tk, random_interval_family, random_onefourth_variant,
    random_subtree_family, BlowupSpec, IntervalParams, Side, SubtreeParams,
};
use crate::covers::{
    all_color_orders, exact_max_strong_cover, maximal_cliques, theta, ExactLimits,
};
use crate::error::{Error, Result};
use rayon::prelude::*;
use serde_json::json;
use std::collections::BTreeSet;

/// Corpus parameters for the `verify` suites. Instance `i` uses seed
/// `seed + i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyParams {
    pub n: usize,
    pub t: usize,
    pub k: usize,
    pub samples: usize,
    pub seed: u64,
    pub max_exact: usize,
}

impl Default for VerifyParams {
    fn default() -> Self {
        VerifyParams {
            n: 12,
            t: 3,
            k: 3,
            samples: 100,
            seed: 0,
            max_exact: 40,
        }
    }
}

/// A seeded chordal (t,k)-coloring. By `seed % 4`: interval-derived,
/// subtree-derived, a perturbed one-quarter family when `k = 2` (interval
/// otherwise), and grown vertex by vertex. Anchor and color probabilities
/// vary with the seed. `None` when the rejection budget runs out.
pub fn chordal_tk_instance(
    n: usize,
    t: usize,
    k: usize,
    seed: u64,
) -> Result<Option<(&'static str, Instance)>> {
    let anchor_prob = 0.4 + 0.35 * ((seed / 4) % 8) as f64 / 7.0;
    let drawn = match seed % 4 {
        2 if k == 2 && t >= 2 => {
            return Ok(Some((
                "onefourth-variant",
                Instance::Intervals(random_onefourth_variant(n, t, seed)?),
            )));
        }
        0 | 2 => {
            let p = IntervalParams {
                coord_range: 24,
                max_len: 8,
                anchor_prob,
                require_k: Some(k),
                max_retries: 3000,
            };
            random_interval_family(n, t, seed, &p)
                .map(|g| ("random-intervals", Instance::Intervals(g.family)))
        }
        3 => {
            let color_prob = 0.5 + 0.3 * ((seed / 4) % 8) as f64 / 7.0;
            let col = random_grown_tk(n, t, k, seed, color_prob, 0.1, 200)?;
            return Ok(Some(("random-grown", Instance::Coloring(col))));
        }
        _ => {
            let p = SubtreeParams {
                host_size: 12,
                max_subtree: 6,
                anchor_prob,
                require_k: Some(k),
                max_retries: 3000,
            };
            random_subtree_family(n, t, seed, &p)
                .map(|g| ("random-subtrees", Instance::Subtrees(g.family)))
        }
    };
    match drawn {
        Ok(x) => Ok(Some(x)),
        Err(Error::RetriesExhausted { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Builds one run per seed in parallel and aggregates them, sorted by seed.
fn corpus<F>(command: &str, p: &VerifyParams, one: F) -> Result<RunReport>
where
    F: Fn(u64) -> Result<Option<RunReport>> + Sync,
{
    let seeds: Vec<u64> = (0..p.samples as u64).map(|i| p.seed + i).collect();
    let mut runs: Vec<(u64, Option<RunReport>)> = seeds
        .par_iter()
        .map(|&s| one(s).map(|r| (s, r)))
        .collect::<Result<_>>()?;
    runs.sort_by_key(|(s, _)| *s);
    let mut report = RunReport::new(command);
    let mut summary = Summary::default();
    for (_, run) in runs {
        match run {
            None => summary.skipped += 1,
            Some(r) => {
                summary.total += 1;
                if r.pass {
                    summary.passed += 1;
                } else {
                    summary.failed += 1;
                }
                report.runs.push(r);
            }
        }
    }
    report.check(
        "corpus",
        "every generated instance passes",
        summary.total,
        summary.passed,
        summary.failed == 0,
    );
    report.summary = Some(summary);
    Ok(report)
}

fn start(
    command: &str,
    source: &str,
    inst: &Instance,
    col: &MultiColoring,
    seed: u64,
    k: Option<usize>,
) -> RunReport {
    let mut r = RunReport::new(command);
    let mut i = info(source, inst, col, None, k);
    i.seed = Some(seed);
    r.instance = Some(i);
    r
}

/// Greedy on every color order of chordal (t,k)-colorings.
pub fn verify_lower(p: &VerifyParams) -> Result<RunReport> {
    let orders = all_color_orders(p.t);
    corpus("verify lower", p, |seed| {
        let Some((source, inst)) = chordal_tk_instance(p.n, p.t, p.k, seed)? else {
            return Ok(None);
        };
        let col = inst.coloring()?;
        let mut r = start("greedy", source, &inst, &col, seed, Some(p.k));
        let res = run_greedy(&mut r, &col, inst.intervals(), p.k, &orders);
        settle(&mut r, res)?;
        Ok(Some(r))
    })
}

/// Three-clique covers of chordal (3,3)-colorings, with `theta <= 3` from
/// the exact search up to `n = 10`.
pub fn verify_t33(p: &VerifyParams) -> Result<RunReport> {
    corpus("verify t33", p, |seed| {
        let Some((source, inst)) = chordal_tk_instance(p.n, 3, 3, seed)? else {
            return Ok(None);
        };
        let col = inst.coloring()?;
        let mut r = start("strong_cover_33", source, &inst, &col, seed, Some(3));
        let res = run_t33(&mut r, &col, inst.intervals()).and_then(|()| {
            if col.n() <= p.max_exact.min(10) {
                let th = r.step("theta", || {
                    theta(&col, &ExactLimits::with_max_n(p.max_exact))
                })?;
                let val = th.map(|(v, _)| v);
                r.check("theta", "theta <= 3", 3, val, val.is_some_and(|v| v <= 3));
            }
            Ok(())
        });
        settle(&mut r, res)?;
        Ok(Some(r))
    })
}

/// Covers of chordal (t,t)-colorings by two (even t) or three cliques.
pub fn verify_tt(p: &VerifyParams) -> Result<RunReport> {
    corpus("verify tt", p, |seed| {
        let Some((source, inst)) = chordal_tk_instance(p.n, p.t, p.t, seed)? else {
            return Ok(None);
        };
        let col = inst.coloring()?;
        let mut r = start("strong_cover_tt", source, &inst, &col, seed, Some(p.t));
        let res = run_tt(&mut r, &col, inst.intervals());
        settle(&mut r, res)?;
        Ok(Some(r))
    })
}

/// `4n/5` covers of C4-free 2-colorings.
pub fn verify_c4free22(p: &VerifyParams) -> Result<RunReport> {
    corpus("verify c4free22", p, |seed| {
        let col = match random_c4free_22(p.n, seed, 1000) {
            Ok(g) => g.family,
            Err(Error::RetriesExhausted { .. }) => return Ok(None),
            Err(e) => return Err(e),
        };
        let inst = Instance::Coloring(col.clone());
        let mut r = start(
            "strong_cover_c4free_22",
            "random-c4free",
            &inst,
            &col,
            seed,
            Some(2),
        );
        let res = run_c4free22(&mut r, &col, None);
        settle(&mut r, res)?;
        Ok(Some(r))
    })
}

fn omega(col: &MultiColoring, c: usize) -> Result<usize> {
    let g = col.color_graph(c)?;
    Ok(maximal_cliques(&g, &ExactLimits::default())?
        .iter()
        .map(Vec::len)
        .max()
        .unwrap_or(0))
}

fn bipartite_edges(path: &[Side]) -> Vec<(usize, usize)> {
    path.windows(2)
        .map(|w| match (w[0], w[1]) {
            (Side::A(a), Side::B(b)) | (Side::B(b), Side::A(a)) => (a, b),
            _ => (usize::MAX, usize::MAX),
        })
        .collect()
}

/// Structural checks of every explicit construction.
pub fn verify_constructions(p: &VerifyParams) -> Result<RunReport> {
    let mut r = RunReport::new("verify constructions");
    let limits = ExactLimits::with_max_n(p.max_exact);

    for t in 2..=5 {
        let fam = construct_onefourth(t)?;
        let col = coloring_from_intervals(&fam)?;
        let n = 4 * t - 5;
        r.check(
            format!("onefourth({t}) size"),
            "n = 4t - 5",
            n,
            col.n(),
            col.n() == n,
        );
        let tk = is_tk_coloring(&col, 2)?;
        r.check(
            format!("onefourth({t}) pairwise"),
            "(t, 2)-coloring",
            true,
            tk,
            tk,
        );
        let g1 = col.color_graph(1)?;
        let comps: Vec<usize> = g1.components().iter().map(Vec::len).collect();
        let two_cliques =
            comps == [2 * t - 2, 2 * t - 3] && g1.components().iter().all(|c| g1.is_clique(c));
        r.check(
            format!("onefourth({t}) color 1"),
            "disjoint cliques on 2t - 2 and 2t - 3 vertices",
            [2 * t - 2, 2 * t - 3],
            comps,
            two_cliques,
        );
        let mut seen = BTreeSet::new();
        let mut paths_ok = true;
        for c in 2..=t {
            let g = col.color_graph(c)?;
            paths_ok &=
                g.edge_count() == n - 1 && g.is_connected() && (0..n).all(|v| g.degree(v) <= 2);
            for e in g.edges() {
                paths_ok &= seen.insert(e);
            }
        }
        let cross = (2 * t - 2) * (2 * t - 3);
        paths_ok &= seen.len() == cross;
        r.check(
            format!("onefourth({t}) paths"),
            "colors 2..t are edge-disjoint spanning paths covering [A, B]",
            cross,
            seen.len(),
            paths_ok,
        );
        if n <= p.max_exact {
            let got = r
                .step(&format!("exact onefourth({t})"), || {
                    exact_max_strong_cover(&col, &limits)
                })?
                .covered_count();
            r.check(
                format!("onefourth({t}) max cover"),
                "max strong cover = 3(t - 1)",
                3 * (t - 1),
                got,
                got == 3 * (t - 1),
            );
        }
    }

    for t in 2..=8 {
        let paths = hamilton_paths_for_construction(t)?;
        let mut seen = BTreeSet::new();
        let mut ok = paths.len() == t - 1;
        for path in &paths {
            ok &=
                path.len() == 4 * t - 5 && path.iter().collect::<BTreeSet<_>>().len() == path.len();
            for e in bipartite_edges(path) {
                ok &= e.0 < 2 * t - 2 && e.1 < 2 * t - 3 && seen.insert(e);
            }
        }
        let cross = (2 * t - 2) * (2 * t - 3);
        ok &= seen.len() == cross;
        r.check(
            format!("hamilton paths t = {t}"),
            "t - 1 edge-disjoint Hamilton paths covering [A, B]",
            cross,
            seen.len(),
            ok,
        );
    }

    let k5 = construct_k5star();
    let single = k5.pairs().all(|(u, v)| k5.multiplicity(u, v) == 1);
    let c5 = (1..=2).all(|c| {
        k5.color_graph(c)
            .map(|g| g.is_connected() && (0..5).all(|v| g.degree(v) == 2))
            .unwrap_or(false)
    });
    r.check(
        "k5star",
        "one color per edge, both classes C5",
        true,
        single && c5,
        single && c5,
    );
    let k5_cover = exact_max_strong_cover(&k5, &limits)?.covered_count();
    r.check(
        "k5star max cover",
        "max strong cover = 4",
        4,
        k5_cover,
        k5_cover == 4,
    );
    let b = blow_up(&BlowupSpec {
        base: k5,
        sizes: vec![2; 5],
    })?;
    let b_cover = exact_max_strong_cover(&b, &limits)?.covered_count();
    r.check(
        "k5star blow-up (2,2,2,2,2) max cover",
        "max strong cover = 4n/5",
        8,
        b_cover,
        b_cover == 8,
    );

    let k4 = construct_k4_two_paths();
    let th = theta(&k4, &limits)?.map(|(v, _)| v);
    r.check("k4paths theta", "theta = 2", 2, th, th == Some(2));
    let om = [omega(&k4, 1)?, omega(&k4, 2)?];
    r.check(
        "k4paths omega",
        "omega = 2 per color",
        [2, 2],
        om,
        om == [2, 2],
    );
    let k4b = blow_up(&BlowupSpec {
        base: k4,
        sizes: vec![2; 4],
    })?;
    let om = omega(&k4b, 1)?.max(omega(&k4b, 2)?);
    r.check(
        "k4paths blow-up (2,2,2,2)",
        "largest monochromatic clique = n/2",
        4,
        om,
        om == 4,
    );

    let k8 = construct_k8_c4free_3col();
    let partition = k8.pairs().count() == 28 && k8.pairs().all(|(u, v)| k8.multiplicity(u, v) == 1);
    r.check(
        "k8c4free partition",
        "every edge exactly one color",
        28,
        k8.pairs()
            .filter(|&(u, v)| k8.multiplicity(u, v) == 1)
            .count(),
        partition,
    );
    for c in 1..=3 {
        let g = k8.color_graph(c)?;
        let c4 = find_induced_c4(&g);
        let om = omega(&k8, c)?;
        let chordal = is_chordal(&g).is_chordal();
        r.check(
            format!("k8c4free color {c}"),
            "omega = 2, no induced C4",
            json!({ "omega": 2, "c4": null }),
            json!({ "omega": om, "c4": c4, "chordal": chordal }),
            om == 2 && c4.is_none(),
        );
    }

    for (n, t) in [(6, 3), (9, 3), (7, 3), (5, 5)] {
        let col = coloring_from_intervals(&construct_partition_coloring(n, t)?)?;
        let om = (1..=t)
            .map(|c| omega(&col, c))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .max()
            .unwrap_or(0);
        let bound = ceil_div(n, t) + 1;
        r.check(
            format!("partition({n}, {t})"),
            "largest monochromatic clique <= ceil(n / t) + 1",
            bound,
            om,
            om <= bound,
        );
    }
    Ok(r)
}

/// Dispatches a suite by name.
pub fn run_verify(suite: Suite, p: &VerifyParams) -> Result<RunReport> {
    match suite {
        Suite::Lower => verify_lower(p),
        Suite::T33 => verify_t33(p),
        Suite::Tt => verify_tt(p),
        Suite::C4free22 => verify_c4free22(p),
        Suite::Constructions => verify_constructions(p),
    }
}

pub(super) fn run(a: &VerifyArgs) -> std::result::Result<RunReport, Usage> {
    let d = VerifyParams::default();
    let t = a.t.unwrap_or(match a.suite {
        Suite::C4free22 => 2,
        Suite::Tt => 4,
        _ => d.t,
    });
    let p = VerifyParams {
        n: a.n.unwrap_or(d.n),
        t,
        k: a.k.unwrap_or(t),
        samples: a.samples,
        seed: a.seed,
        max_exact: a.max_exact,
    };
    Ok(run_verify(a.suite, &p)?)
}
