use super::instance::{info, parse_instance, Instance};
use super::report::RunReport;
use super::{read_input, Algorithm, CheckArgs, CoverArgs, Usage};
use crate::chordal::{find_induced_c4, is_chordal, ChordalCertificate};
use crate::coloring::{
    kfold_min_colors, kwise_violation, piercing_points, tk_violation, verify_cover, IntervalFamily,
    MultiColoring, StrongCover,
};
use crate::covers::{
    all_color_orders, counting_chain, exact_max_strong_cover, greedy_bound_holds,
    greedy_strong_cover, strong_cover_33, strong_cover_c4free_22, strong_cover_tt, theta,
    ExactLimits,
};
use crate::error::{Error, Result};
use serde_json::{json, Value};
use std::io::Read;

pub(crate) fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

/// Whether an error is a property of the instance (reported as a failed
/// run) rather than a malformed request.
pub(crate) fn is_instance_failure(e: &Error) -> bool {
    matches!(
        e,
        Error::NotChordal { .. }
            | Error::NotChordalGraph { .. }
            | Error::Precondition { .. }
            | Error::TheoremViolation { .. }
            | Error::SizeLimit { .. }
    )
}

pub(crate) fn error_text(e: &Error) -> String {
    match e {
        Error::TheoremViolation { instance, .. } => format!("{e}; instance: {instance}"),
        Error::Precondition {
            witness: Some(w), ..
        } => format!("{e}; witness: {w:?}"),
        _ => e.to_string(),
    }
}

fn cover_value(
    col: &MultiColoring,
    fam: Option<&IntervalFamily>,
    cov: &StrongCover,
) -> Result<Value> {
    let mut v = json!({
        "cover": cov,
        "covered": cov.covered_count(),
        "cliques": cov.clique_count(),
        "valid": verify_cover(col, cov)?.valid,
    });
    if let Some(f) = fam {
        v["piercing_points"] = serde_json::to_value(piercing_points(f, cov)?)?;
    }
    Ok(v)
}

fn check_valid(
    r: &mut RunReport,
    name: &str,
    col: &MultiColoring,
    cov: &StrongCover,
) -> Result<()> {
    let ok = verify_cover(col, cov)?.valid;
    r.check(
        format!("{name} valid"),
        "each clique monochromatic in its color, colors distinct",
        true,
        ok,
        ok,
    );
    Ok(())
}

/// Greedy on each order with the `(k-1)n/(k+1)` bound and the counting chain.
pub(crate) fn run_greedy(
    r: &mut RunReport,
    col: &MultiColoring,
    fam: Option<&IntervalFamily>,
    k: usize,
    orders: &[Vec<usize>],
) -> Result<()> {
    if k < 2 {
        return Err(Error::invalid("k must be at least 2"));
    }
    if let Some(w) = tk_violation(col, k)? {
        return Err(Error::precondition(
            format!("not a ({}, {k})-coloring", col.t()),
            Some(w),
        ));
    }
    let n = col.n();
    for order in orders {
        let label = format!("greedy {order:?}");
        let (cov, trace) = r.step_with(&label, || -> Result<_> {
            let (cov, trace) = greedy_strong_cover(col, order)?;
            let mut v = cover_value(col, fam, &cov)?;
            v["order"] = json!(order);
            v["uncovered"] = json!(trace.uncovered);
            Ok(((cov, trace), v))
        })?;
        check_valid(r, &label, col, &cov)?;
        let covered = cov.covered_count();
        r.check(
            format!("{label} bound"),
            "covered * (k + 1) >= (k - 1) * n",
            ceil_div((k - 1) * n, k + 1),
            covered,
            greedy_bound_holds(covered, n, k),
        );
        let chain = counting_chain(col, &trace, k)?;
        r.check(
            format!("{label} counting chain"),
            "(k - 1) |T| (|T| - 1) / 2 <= M <= covered (|T| - 1)",
            json!({ "lower": chain.lower, "upper": chain.upper }),
            chain.multiplicity_sum,
            chain.holds,
        );
    }
    Ok(())
}

pub(crate) fn run_exact(
    r: &mut RunReport,
    col: &MultiColoring,
    fam: Option<&IntervalFamily>,
    limits: &ExactLimits,
) -> Result<()> {
    let cov = r.step_with("exact_max_strong_cover", || {
        let cov = exact_max_strong_cover(col, limits)?;
        cover_value(col, fam, &cov).map(|v| (cov, v))
    })?;
    check_valid(r, "exact", col, &cov)?;
    let th = r.step("theta", || theta(col, limits))?;
    let all = th
        .as_ref()
        .is_some_and(|(_, c)| c.covered_count() == col.n());
    r.check(
        "theta cover",
        "theta exists iff the maximum cover is complete",
        cov.covered_count() == col.n(),
        th.is_some() && all,
        (cov.covered_count() == col.n()) == th.is_some(),
    );
    Ok(())
}

pub(crate) fn run_t33(
    r: &mut RunReport,
    col: &MultiColoring,
    fam: Option<&IntervalFamily>,
) -> Result<()> {
    let cov = r.step_with("strong_cover_33", || {
        let cov = strong_cover_33(col)?;
        cover_value(col, fam, &cov).map(|v| (cov, v))
    })?;
    check_valid(r, "strong_cover_33", col, &cov)?;
    r.check(
        "all vertices covered",
        "covered = n",
        col.n(),
        cov.covered_count(),
        cov.covered_count() == col.n(),
    );
    r.check(
        "clique count",
        "cliques <= 3",
        3,
        cov.clique_count(),
        cov.clique_count() <= 3,
    );
    Ok(())
}

pub(crate) fn run_tt(
    r: &mut RunReport,
    col: &MultiColoring,
    fam: Option<&IntervalFamily>,
) -> Result<()> {
    let cov = r.step_with("strong_cover_tt", || {
        let cov = strong_cover_tt(col)?;
        cover_value(col, fam, &cov).map(|v| (cov, v))
    })?;
    check_valid(r, "strong_cover_tt", col, &cov)?;
    let limit = if col.t().is_multiple_of(2) { 2 } else { 3 };
    r.check(
        "all vertices covered",
        "covered = n",
        col.n(),
        cov.covered_count(),
        cov.covered_count() == col.n(),
    );
    r.check(
        "clique count",
        format!("cliques <= {limit} (t = {})", col.t()),
        limit,
        cov.clique_count(),
        cov.clique_count() <= limit,
    );
    Ok(())
}

pub(crate) fn run_c4free22(
    r: &mut RunReport,
    col: &MultiColoring,
    fam: Option<&IntervalFamily>,
) -> Result<()> {
    let cov = r.step_with("strong_cover_c4free_22", || {
        let cov = strong_cover_c4free_22(col)?;
        cover_value(col, fam, &cov).map(|v| (cov, v))
    })?;
    check_valid(r, "strong_cover_c4free_22", col, &cov)?;
    let covered = cov.covered_count();
    r.check(
        "4n/5 bound",
        "5 * covered >= 4 * n",
        ceil_div(4 * col.n(), 5),
        covered,
        5 * covered >= 4 * col.n(),
    );
    Ok(())
}

/// Records `res` on the report: instance failures fail the run, anything
/// else is passed up.
pub(crate) fn settle(r: &mut RunReport, res: Result<()>) -> Result<()> {
    match res {
        Err(e) if is_instance_failure(&e) => {
            r.fail(error_text(&e));
            Ok(())
        }
        other => other,
    }
}

fn load(
    input: Option<&std::path::PathBuf>,
    stdin: &mut dyn Read,
) -> std::result::Result<(String, Instance, Option<Value>, MultiColoring), Usage> {
    let (source, text) = read_input(input, stdin)?;
    let (inst, meta) = parse_instance(&text)?;
    let col = inst.coloring()?;
    Ok((source, inst, meta, col))
}

pub(super) fn check(a: &CheckArgs, stdin: &mut dyn Read) -> std::result::Result<RunReport, Usage> {
    let (source, inst, meta, col) = load(a.input.as_ref(), stdin)?;
    let mut r = RunReport::new("check");
    r.instance = Some(info(&source, &inst, &col, meta.as_ref(), a.tk));
    let everything = !a.chordal && !a.c4free && a.tk.is_none() && a.kfold.is_none();
    if a.chordal || everything {
        for (i, g) in col.color_graphs().iter().enumerate() {
            let cert = r.step(&format!("is_chordal color {}", i + 1), || {
                Ok::<_, Error>(is_chordal(g))
            })?;
            let hole = match cert {
                ChordalCertificate::Hole(h) => Some(h),
                ChordalCertificate::Peo(_) => None,
            };
            let ok = hole.is_none();
            r.check(
                format!("color {} chordal", i + 1),
                "no induced cycle of length >= 4",
                true,
                ok,
                ok,
            )
            .witness = hole.map(|h| json!(h));
        }
    }
    if a.c4free || everything {
        for (i, g) in col.color_graphs().iter().enumerate() {
            let c4 = find_induced_c4(g);
            let ok = c4.is_none();
            r.check(
                format!("color {} C4-free", i + 1),
                "no induced 4-cycle",
                true,
                ok,
                ok,
            )
            .witness = c4.map(|w| json!(w));
        }
    }
    if let Some(k) = a.tk {
        let w = r.step("tk_violation", || tk_violation(&col, k))?;
        let ok = w.is_none();
        r.check(
            format!("({}, {k})-coloring", col.t()),
            format!("every {k} vertices span a monochromatic clique"),
            true,
            ok,
            ok,
        )
        .witness = w.map(|w| json!(w));
        if let Some(f) = inst.intervals() {
            let w = r.step("kwise_violation", || kwise_violation(f, k))?;
            let ok = w.is_none();
            r.check(
                format!("{k}-wise intersecting"),
                format!("every {k} members share a point on some track"),
                true,
                ok,
                ok,
            )
            .witness = w.map(|w| json!(w));
        }
    }
    if let Some(k) = a.kfold {
        let m = r.step("kfold_min_colors", || kfold_min_colors(&col))?;
        r.check("k-fold", "fewest colors on an edge >= K", k, m, m >= k);
    }
    Ok(r)
}

pub(super) fn cover(a: &CoverArgs, stdin: &mut dyn Read) -> std::result::Result<RunReport, Usage> {
    let (source, inst, meta, col) = load(a.input.as_ref(), stdin)?;
    let mut r = RunReport::new(format!("cover {:?}", a.algorithm).to_lowercase());
    r.instance = Some(info(&source, &inst, &col, meta.as_ref(), a.k));
    let fam = inst.intervals();
    let res = match a.algorithm {
        Algorithm::Greedy => {
            let k =
                a.k.ok_or_else(|| Usage("--k is required for greedy".into(), super::EXIT_USAGE))?;
            let orders = if a.all_orders {
                all_color_orders(col.t())
            } else if a.order.is_empty() {
                vec![(1..=col.t()).collect()]
            } else {
                vec![a.order.clone()]
            };
            run_greedy(&mut r, &col, fam, k, &orders)
        }
        Algorithm::Exact => run_exact(&mut r, &col, fam, &ExactLimits::with_max_n(a.max_exact)),
        Algorithm::T33 => run_t33(&mut r, &col, fam),
        Algorithm::Tt => run_tt(&mut r, &col, fam),
        Algorithm::C4free22 => run_c4free22(&mut r, &col, fam),
    };
    settle(&mut r, res)?;
    Ok(r)
}
