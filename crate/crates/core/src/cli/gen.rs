use super::instance::{parse_instance, Instance};
use super::{Construction, GenArgs, Usage, EXIT_FAIL, EXIT_USAGE};
use crate::coloring::MultiColoring;
use crate::constructions::{
    blow_up, blow_up_intervals, construct_k4_two_paths, construct_k5star, construct_k8_c4free_3col,
    construct_onefourth, construct_partition_coloring, random_c4free_22, random_interval_family,
    random_subtree_family, BlowupSpec, IntervalParams, SubtreeParams,
};
use crate::error::Error;
use serde_json::json;

fn need<T: Copy>(v: Option<T>, flag: &str, what: Construction) -> Result<T, Usage> {
    v.ok_or_else(|| Usage(format!("--{flag} is required for {what:?}"), EXIT_USAGE))
}

fn named_base(name: &str) -> Option<MultiColoring> {
    match name {
        "k5star" => Some(construct_k5star()),
        "k4paths" => Some(construct_k4_two_paths()),
        "k8c4free" => Some(construct_k8_c4free_3col()),
        _ => None,
    }
}

fn blowup(a: &GenArgs) -> Result<Instance, Usage> {
    let base_name = a
        .base
        .as_deref()
        .ok_or_else(|| Usage("--base is required for blowup".into(), EXIT_USAGE))?;
    let base = match named_base(base_name) {
        Some(c) => Instance::Coloring(c),
        None => parse_instance(&std::fs::read_to_string(base_name)?)?.0,
    };
    let sizes = a.sizes.clone();
    Ok(match base {
        Instance::Intervals(f) => Instance::Intervals(blow_up_intervals(&f, &sizes)?),
        other => Instance::Coloring(blow_up(&BlowupSpec {
            base: other.coloring()?,
            sizes,
        })?),
    })
}

/// Generated instance JSON.
pub(super) fn run(a: &GenArgs) -> Result<String, Usage> {
    use Construction::*;
    let c = a.construction;
    let seed = || need(a.seed, "seed", c);
    let drawn = match c {
        K5star => Ok((Instance::Coloring(construct_k5star()), json!({}))),
        K4paths => Ok((Instance::Coloring(construct_k4_two_paths()), json!({}))),
        K8c4free => Ok((Instance::Coloring(construct_k8_c4free_3col()), json!({}))),
        Onefourth => {
            let t = need(a.t, "t", c)?;
            Ok((
                Instance::Intervals(construct_onefourth(t)?),
                json!({ "t": t }),
            ))
        }
        Partition => {
            let (n, t) = (need(a.n, "n", c)?, need(a.t, "t", c)?);
            Ok((
                Instance::Intervals(construct_partition_coloring(n, t)?),
                json!({ "n": n, "t": t }),
            ))
        }
        Blowup => Ok((blowup(a)?, json!({ "base": a.base, "sizes": a.sizes }))),
        RandomIntervals => {
            let d = IntervalParams::default();
            let p = IntervalParams {
                coord_range: a.coord_range.unwrap_or(d.coord_range),
                max_len: a.max_len.unwrap_or(d.max_len),
                anchor_prob: a.anchor_prob.unwrap_or(d.anchor_prob),
                require_k: a.k,
                max_retries: a.max_retries,
            };
            let (n, t, s) = (need(a.n, "n", c)?, need(a.t, "t", c)?, seed()?);
            random_interval_family(n, t, s, &p).map(|g| {
                let meta =
                    json!({ "n": n, "t": t, "seed": s, "generator": p, "attempts": g.attempts });
                (Instance::Intervals(g.family), meta)
            })
        }
        RandomSubtrees => {
            let d = SubtreeParams::default();
            let p = SubtreeParams {
                host_size: a.host_size.unwrap_or(d.host_size),
                max_subtree: a.max_subtree.unwrap_or(d.max_subtree),
                anchor_prob: a.anchor_prob.unwrap_or(d.anchor_prob),
                require_k: a.k,
                max_retries: a.max_retries,
            };
            let (n, t, s) = (need(a.n, "n", c)?, need(a.t, "t", c)?, seed()?);
            random_subtree_family(n, t, s, &p).map(|g| {
                let meta =
                    json!({ "n": n, "t": t, "seed": s, "generator": p, "attempts": g.attempts });
                (Instance::Subtrees(g.family), meta)
            })
        }
        RandomC4free => {
            let (n, s) = (need(a.n, "n", c)?, seed()?);
            random_c4free_22(n, s, a.max_retries).map(|g| {
                let meta = json!({ "n": n, "seed": s, "max_retries": a.max_retries, "attempts": g.attempts });
                (Instance::Coloring(g.family), meta)
            })
        }
    };
    match drawn {
        Ok((inst, params)) => {
            let meta = json!({
                "generator": env!("CARGO_PKG_NAME"),
                "version": env!("CARGO_PKG_VERSION"),
                "construction": format!("{c:?}").to_lowercase(),
                "params": params,
            });
            Ok(serde_json::to_string_pretty(&inst.with_meta(meta)).expect("serializes"))
        }
        Err(Error::RetriesExhausted { attempts }) => Err(Usage(
            format!("no draw met the requirements in {attempts} attempts"),
            EXIT_FAIL,
        )),
        Err(e) => Err(e.into()),
    }
}
