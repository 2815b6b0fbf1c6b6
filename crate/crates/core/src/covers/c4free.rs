//! Two-colorings with both color classes induced-C4-free: the `K5*`
//! blow-up argument.

use super::{theorem_violation, two_clique_cover_exact, ExactLimits};
use crate::chordal::find_induced_c4;
use crate::coloring::{MultiColoring, StrongCover};
use crate::error::{Error, Result};

/// Position of `u`'s class relative to `v`'s on the 5-cycle of classes.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Link {
    Both,
    RedOnly,
    BlueOnly,
}

fn link(col: &MultiColoring, u: usize, v: usize, red: usize, blue: usize) -> Option<Link> {
    match (col.has_color(u, v, red), col.has_color(u, v, blue)) {
        (true, true) => Some(Link::Both),
        (true, false) => Some(Link::RedOnly),
        (false, true) => Some(Link::BlueOnly),
        (false, false) => None,
    }
}

/// Required link between classes `i` and `j` of a `K5*` blow-up.
fn expected(i: usize, j: usize) -> Link {
    match (j + 5 - i) % 5 {
        0 => Link::Both,
        1 | 4 => Link::RedOnly,
        _ => Link::BlueOnly,
    }
}

/// Orders five vertices along their red 5-cycle if they span a `K5*`:
/// every edge exactly one of red, blue, and red 2-regular. Starts at the
/// smallest vertex and steps to its smaller red neighbor.
fn k5star_order(
    col: &MultiColoring,
    vs: &[usize; 5],
    red: usize,
    blue: usize,
) -> Option<[usize; 5]> {
    for i in 0..5 {
        let mut red_deg = 0;
        for j in 0..5 {
            if i == j {
                continue;
            }
            match link(col, vs[i], vs[j], red, blue) {
                Some(Link::RedOnly) => red_deg += 1,
                Some(Link::BlueOnly) => {}
                _ => return None,
            }
        }
        if red_deg != 2 {
            return None;
        }
    }
    let mut sorted = *vs;
    sorted.sort_unstable();
    let mut order = [sorted[0]; 5];
    for k in 1..5 {
        let prev = if k >= 2 { Some(order[k - 2]) } else { None };
        order[k] = sorted
            .iter()
            .copied()
            .filter(|&w| {
                w != order[k - 1] && Some(w) != prev && col.has_color(order[k - 1], w, red)
            })
            .min()?;
    }
    Some(order)
}

/// Five vertices spanning a `K5*` in colors `red` and `blue`, listed along
/// the red cycle. Scans 5-subsets in lexicographic order.
pub fn find_k5star(col: &MultiColoring, red: usize, blue: usize) -> Result<Option<[usize; 5]>> {
    col.check_color(red)?;
    col.check_color(blue)?;
    let n = col.n();
    let single = |u: usize, v: usize| col.has_color(u, v, red) != col.has_color(u, v, blue);
    for a in 0..n {
        for b in a + 1..n {
            if !single(a, b) {
                continue;
            }
            for c in b + 1..n {
                if !(single(a, c) && single(b, c)) {
                    continue;
                }
                for d in c + 1..n {
                    if ![a, b, c].iter().all(|&x| single(x, d)) {
                        continue;
                    }
                    for e in d + 1..n {
                        if let Some(order) = k5star_order(col, &[a, b, c, d, e], red, blue) {
                            return Ok(Some(order));
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Grows classes `X_0..X_4` around a `K5*` seed: repeatedly scans vertices
/// in increasing order and absorbs any vertex that is a replica of a class
/// (both colors to its own class, red only to the neighboring classes, blue
/// only to the other two) until a full scan absorbs nothing.
pub fn grow_blowup(
    col: &MultiColoring,
    seed: &[usize; 5],
    red: usize,
    blue: usize,
) -> Result<[Vec<usize>; 5]> {
    col.check_color(red)?;
    col.check_color(blue)?;
    for &v in seed {
        col.check_vertex(v)?;
    }
    let order = k5star_order(col, seed, red, blue)
        .ok_or_else(|| Error::precondition("seed does not span a K5*", Some(seed.to_vec())))?;
    // Keep the caller's cycle orientation when it is a valid red cycle.
    let seed_is_cycle =
        (0..5).all(|i| link(col, seed[i], seed[(i + 1) % 5], red, blue) == Some(Link::RedOnly));
    let base = if seed_is_cycle { *seed } else { order };
    let mut classes: [Vec<usize>; 5] = base.map(|v| vec![v]);
    let mut inside = vec![false; col.n()];
    for &v in &base {
        inside[v] = true;
    }
    loop {
        let mut grew = false;
        for (w, seen) in inside.iter_mut().enumerate() {
            if *seen {
                continue;
            }
            let target = (0..5).find(|&i| {
                (0..5).all(|j| {
                    classes[j]
                        .iter()
                        .all(|&x| link(col, w, x, red, blue) == Some(expected(i, j)))
                })
            });
            if let Some(i) = target {
                classes[i].push(w);
                *seen = true;
                grew = true;
            }
        }
        if !grew {
            break;
        }
    }
    for c in &mut classes {
        c.sort_unstable();
    }
    Ok(classes)
}

/// Strong cover of at least `⌈4n/5⌉` vertices of a two-coloring whose color
/// classes are both induced-C4-free and which leaves no edge uncolored.
///
/// Without a `K5*`, two cliques cover everything. Otherwise the `K5*` is
/// grown into a maximal blow-up `X_0..X_4`; every other vertex sends only
/// red (set `R`) or only blue (set `B`) into it. With `X_i` smallest, the
/// red clique `X_{i+2} ∪ X_{i-2} ∪ R` and blue clique `X_{i+1} ∪ X_{i-1} ∪ B`
/// miss only `X_i`.
pub fn strong_cover_c4free_22(col: &MultiColoring) -> Result<StrongCover> {
    if col.t() != 2 {
        return Err(Error::precondition(
            format!("expected 2 colors, got {}", col.t()),
            None,
        ));
    }
    if let Some((u, v)) = col.pairs().find(|&(u, v)| col.mask(u, v) == 0) {
        return Err(Error::precondition("uncolored edge", Some(vec![u, v])));
    }
    for c in 1..=2 {
        if let Some(c4) = find_induced_c4(&col.color_graph(c)?) {
            return Err(Error::precondition(
                format!("color {c} contains an induced C4"),
                Some(c4.to_vec()),
            ));
        }
    }
    let (red, blue) = (1, 2);
    let Some(seed) = find_k5star(col, red, blue)? else {
        return two_clique_cover_exact(col, (red, blue), &ExactLimits::default())?.ok_or_else(
            || {
                theorem_violation(
                    col,
                    "C4-free and K5*-free 2-coloring has no cover by two cliques",
                )
            },
        );
    };
    let x = grow_blowup(col, &seed, red, blue)?;
    let mut in_k = vec![false; col.n()];
    for &v in x.iter().flatten() {
        in_k[v] = true;
    }
    let mut r_set = Vec::new();
    let mut b_set = Vec::new();
    for w in (0..col.n()).filter(|&w| !in_k[w]) {
        let all = |c: usize| x.iter().flatten().all(|&v| col.has_color(w, v, c));
        if all(red) {
            r_set.push(w);
        } else if all(blue) {
            b_set.push(w);
        } else {
            return Err(theorem_violation(
                col,
                format!("vertex {w} has no common color toward the K5* blow-up"),
            ));
        }
    }
    let gr = col.color_graph(red)?;
    let gb = col.color_graph(blue)?;
    if !gr.is_clique(&r_set) || !gb.is_clique(&b_set) {
        return Err(theorem_violation(
            col,
            "outside vertices do not form a red and a blue clique",
        ));
    }
    let i = (0..5).min_by_key(|&i| x[i].len()).expect("five classes");
    let mut red_clique = [x[(i + 2) % 5].clone(), x[(i + 3) % 5].clone(), r_set].concat();
    let mut blue_clique = [x[(i + 1) % 5].clone(), x[(i + 4) % 5].clone(), b_set].concat();
    red_clique.sort_unstable();
    blue_clique.sort_unstable();
    let mut cov = StrongCover::new();
    cov.push(red, red_clique);
    cov.push(blue, blue_clique);
    Ok(cov)
}
