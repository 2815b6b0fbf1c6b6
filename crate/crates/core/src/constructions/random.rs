use crate::chordal::{induced_c4_free, is_chordal};
use crate::coloring::{
    coloring_from_intervals, coloring_from_subtrees, is_kwise_intersecting, is_tk_coloring,
    tk_violation, Interval, IntervalFamily, MultiColoring, SubtreeFamily,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IntervalParams {
    /// Endpoints and anchors are drawn from `0..=coord_range`.
    pub coord_range: i64,
    /// Interval lengths are uniform in `0..=max_len`.
    pub max_len: i64,
    /// Probability that a member's interval on a track is forced to cover
    /// that track's anchor point.
    pub anchor_prob: f64,
    /// Resample until the family is k-wise intersecting.
    pub require_k: Option<usize>,
    pub max_retries: usize,
}

impl Default for IntervalParams {
    fn default() -> Self {
        IntervalParams {
            coord_range: 20,
            max_len: 8,
            anchor_prob: 0.0,
            require_k: None,
            max_retries: 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SubtreeParams {
    pub host_size: usize,
    /// Subtree sizes are uniform in `1..=max_subtree`.
    pub max_subtree: usize,
    /// Probability that a member's subtree on a track is grown from that
    /// track's anchor vertex.
    pub anchor_prob: f64,
    /// Resample until the derived coloring is a (t,k)-coloring.
    pub require_k: Option<usize>,
    pub max_retries: usize,
}

impl Default for SubtreeParams {
    fn default() -> Self {
        SubtreeParams {
            host_size: 12,
            max_subtree: 5,
            anchor_prob: 0.0,
            require_k: None,
            max_retries: 1,
        }
    }
}

/// A generated instance with the number of draws it took.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Generated<F> {
    pub family: F,
    pub attempts: usize,
}

fn draw_interval<R: Rng>(rng: &mut R, p: &IntervalParams, anchor: Option<i64>) -> Interval {
    let len = rng.random_range(0..=p.max_len.max(0));
    match anchor {
        Some(a) => {
            let lo = a - rng.random_range(0..=len);
            Interval::new(lo, lo + len)
        }
        None => {
            let lo = rng.random_range(0..=p.coord_range.max(0));
            Interval::new(lo, lo + len)
        }
    }
}

/// Seeded random t-interval family. With `require_k`, draws are repeated
/// (continuing the same random stream) until the family is k-wise
/// intersecting or `max_retries` draws have failed.
pub fn random_interval_family(
    n: usize,
    t: usize,
    seed: u64,
    params: &IntervalParams,
) -> Result<Generated<IntervalFamily>> {
    if n == 0 || t == 0 {
        return Err(Error::invalid("n and t must be positive"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let retries = params.max_retries.max(1);
    for attempt in 1..=retries {
        let anchors: Vec<i64> = (0..t)
            .map(|_| rng.random_range(0..=params.coord_range.max(0)))
            .collect();
        let members: Vec<Vec<Interval>> = (0..n)
            .map(|_| {
                anchors
                    .iter()
                    .map(|&a| {
                        let anchored = rng.random_bool(params.anchor_prob.clamp(0.0, 1.0));
                        draw_interval(&mut rng, params, anchored.then_some(a))
                    })
                    .collect()
            })
            .collect();
        let family = IntervalFamily::new(t, members)?;
        let ok = match params.require_k {
            Some(k) => is_kwise_intersecting(&family, k)?,
            None => true,
        };
        if ok {
            return Ok(Generated {
                family,
                attempts: attempt,
            });
        }
    }
    Err(Error::RetriesExhausted { attempts: retries })
}

fn grow_subtree<R: Rng>(rng: &mut R, host: &Graph, root: usize, size: usize) -> Vec<usize> {
    let mut inside = vec![false; host.n()];
    inside[root] = true;
    let mut sub = vec![root];
    while sub.len() < size {
        let mut frontier: Vec<usize> = sub
            .iter()
            .flat_map(|&v| host.neighbors(v).ones())
            .filter(|&w| !inside[w])
            .collect();
        frontier.sort_unstable();
        frontier.dedup();
        let Some(&w) = frontier.choose(rng) else {
            break;
        };
        inside[w] = true;
        sub.push(w);
    }
    sub.sort_unstable();
    sub
}

/// Seeded random t-subtree family on a uniform-attachment host tree.
pub fn random_subtree_family(
    n: usize,
    t: usize,
    seed: u64,
    params: &SubtreeParams,
) -> Result<Generated<SubtreeFamily>> {
    if n == 0 || t == 0 || params.host_size == 0 {
        return Err(Error::invalid("n, t and host_size must be positive"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let h = params.host_size;
    let retries = params.max_retries.max(1);
    for attempt in 1..=retries {
        let host_edges: Vec<(usize, usize)> = (1..h).map(|v| (rng.random_range(0..v), v)).collect();
        let host = Graph::from_edges(h, &host_edges);
        let anchors: Vec<usize> = (0..t).map(|_| rng.random_range(0..h)).collect();
        let members: Vec<Vec<Vec<usize>>> = (0..n)
            .map(|_| {
                anchors
                    .iter()
                    .map(|&a| {
                        let anchored = rng.random_bool(params.anchor_prob.clamp(0.0, 1.0));
                        let root = if anchored { a } else { rng.random_range(0..h) };
                        let size = rng.random_range(1..=params.max_subtree.max(1));
                        grow_subtree(&mut rng, &host, root, size)
                    })
                    .collect()
            })
            .collect();
        let family = SubtreeFamily::new(host_edges, t, members)?;
        let ok = match params.require_k {
            Some(k) => is_tk_coloring(&coloring_from_subtrees(&family)?, k)?,
            None => true,
        };
        if ok {
            return Ok(Generated {
                family,
                attempts: attempt,
            });
        }
    }
    Err(Error::RetriesExhausted { attempts: retries })
}

/// Seeded random 2-coloring of `K_n` with every edge colored and both color
/// classes induced-C4-free.
///
/// Half of the draws start from a `K5*` blow-up with random class sizes and
/// add outside vertices that are red (or blue) to the whole blow-up; the
/// other half come from pairwise intersecting 2-interval families. Vertex
/// labels are shuffled. Draws failing the C4 test are repeated up to
/// `max_retries` times.
pub fn random_c4free_22(
    n: usize,
    seed: u64,
    max_retries: usize,
) -> Result<Generated<MultiColoring>> {
    if n == 0 {
        return Err(Error::invalid("n must be positive"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let retries = max_retries.max(1);
    for attempt in 1..=retries {
        let col = if n >= 5 && rng.random_bool(0.5) {
            k5star_with_satellites(&mut rng, n)?
        } else {
            let p = IntervalParams {
                coord_range: 2 * n as i64,
                max_len: n as i64,
                anchor_prob: 0.5,
                ..Default::default()
            };
            let fam = random_interval_family(n, 2, rng.random(), &p)?.family;
            coloring_from_intervals(&fam)?
        };
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rng);
        let mut shuffled = MultiColoring::new(n, 2)?;
        for (u, v) in col.pairs() {
            let (a, b) = (perm[u].min(perm[v]), perm[u].max(perm[v]));
            shuffled.set_mask(a, b, col.mask(u, v));
        }
        let covered = shuffled.pairs().all(|(u, v)| shuffled.mask(u, v) != 0);
        if covered && shuffled.color_graphs().iter().all(induced_c4_free) {
            return Ok(Generated {
                family: shuffled,
                attempts: attempt,
            });
        }
    }
    Err(Error::RetriesExhausted { attempts: retries })
}

fn k5star_with_satellites<R: Rng>(rng: &mut R, n: usize) -> Result<MultiColoring> {
    let core = rng.random_range(5..=n);
    let mut sizes = vec![1; 5];
    for _ in 5..core {
        sizes[rng.random_range(0..5)] += 1;
    }
    let base = super::blow_up(&super::BlowupSpec {
        base: super::construct_k5star(),
        sizes,
    })?;
    let mut col = MultiColoring::new(n, 2)?;
    for (u, v) in base.pairs() {
        col.set_mask(u, v, base.mask(u, v));
    }
    // 0b01 = red satellite, 0b10 = blue satellite.
    let side: Vec<u64> = (core..n)
        .map(|_| if rng.random_bool(0.5) { 0b01 } else { 0b10 })
        .collect();
    for w in core..n {
        let s = side[w - core];
        for v in 0..core {
            let extra = if rng.random_bool(0.2) { 0b11 } else { s };
            col.set_mask(v, w, extra);
        }
        for x in core..w {
            let r = side[x - core];
            let mask = if r == s {
                if rng.random_bool(0.3) {
                    0b11
                } else {
                    s
                }
            } else {
                *[0b01, 0b10, 0b11].choose(rng).expect("nonempty")
            };
            col.set_mask(x, w, mask);
        }
    }
    Ok(col)
}

/// Seeded chordal (t,k)-coloring grown one vertex at a time. Each new
/// vertex gets random color sets (each color kept with probability
/// `color_prob`) toward the earlier ones and is redrawn until every color
/// stays chordal and every k-set still spans a monochromatic clique. After
/// `tries` failed draws, or with probability `twin_prob`, it becomes a twin
/// of a random earlier vertex, which always preserves both properties.
pub fn random_grown_tk(
    n: usize,
    t: usize,
    k: usize,
    seed: u64,
    color_prob: f64,
    twin_prob: f64,
    tries: usize,
) -> Result<MultiColoring> {
    if n == 0 || t == 0 || t > crate::coloring::MAX_COLORS || k < 2 {
        return Err(Error::invalid("need n >= 1, 1 <= t <= 64 and k >= 2"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let full = if t == 64 { u64::MAX } else { (1u64 << t) - 1 };
    let mut masks: Vec<Vec<u64>> = vec![Vec::new()];
    let build = |masks: &[Vec<u64>]| -> Result<MultiColoring> {
        let mut col = MultiColoring::new(masks.len(), t)?;
        for (v, row) in masks.iter().enumerate() {
            for (u, &m) in row.iter().enumerate() {
                col.set_mask(u, v, m);
            }
        }
        Ok(col)
    };
    while masks.len() < n {
        let v = masks.len();
        let mut placed = false;
        if !rng.random_bool(twin_prob.clamp(0.0, 1.0)) {
            for _ in 0..tries {
                let row: Vec<u64> = (0..v)
                    .map(|_| loop {
                        let m = (0..t)
                            .filter(|_| rng.random_bool(color_prob))
                            .fold(0u64, |m, c| m | 1 << c);
                        if m != 0 {
                            break m;
                        }
                    })
                    .collect();
                masks.push(row);
                let col = build(&masks)?;
                // Fewer than k vertices must already span a common clique,
                // or twins added later could complete a bad k-set.
                let ok = tk_violation(&col, k.min(v + 1))?.is_none()
                    && col
                        .color_graphs()
                        .iter()
                        .all(|g| is_chordal(g).is_chordal());
                if ok {
                    placed = true;
                    break;
                }
                masks.pop();
            }
        }
        if !placed {
            let w = rng.random_range(0..v);
            let row: Vec<u64> = (0..v)
                .map(|u| match u.cmp(&w) {
                    std::cmp::Ordering::Less => masks[w][u],
                    std::cmp::Ordering::Equal => full,
                    std::cmp::Ordering::Greater => masks[u][w],
                })
                .collect();
            masks.push(row);
        }
    }
    build(&masks)
}

/// Seeded pairwise intersecting t-interval family of size `n` near the
/// one-quarter extremal family: the `t`-track extremal family is blown up
/// (or restricted) to `n` random members, and some intervals are widened.
/// Widening keeps every pair intersecting, so the result is a (t,2)
/// interval family.
pub fn random_onefourth_variant(n: usize, t: usize, seed: u64) -> Result<IntervalFamily> {
    if n == 0 || t < 2 {
        return Err(Error::invalid("need n >= 1 and t >= 2"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let base = super::construct_onefourth(t)?;
    let picks: Vec<usize> = if n >= base.n() {
        let mut sizes = vec![1; base.n()];
        for _ in base.n()..n {
            sizes[rng.random_range(0..base.n())] += 1;
        }
        super::blowup_origin(&sizes)
    } else {
        let mut all: Vec<usize> = (0..base.n()).collect();
        all.shuffle(&mut rng);
        all.truncate(n);
        all.sort_unstable();
        all
    };
    let members = picks
        .into_iter()
        .map(|i| {
            base.members[i]
                .iter()
                .map(|iv| {
                    if rng.random_bool(0.15) {
                        Interval::new(
                            iv.lo - rng.random_range(0..=2),
                            iv.hi + rng.random_range(0..=2),
                        )
                    } else {
                        *iv
                    }
                })
                .collect()
        })
        .collect();
    IntervalFamily::new(t, members)
}
