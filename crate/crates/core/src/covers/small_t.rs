//! Covers of chordal (3,3)- and (t,t)-colorings by at most three cliques.

use super::{chordal_peos, theorem_violation, two_clique_cover_exact, ExactLimits};
use crate::chordal::{clique_cutset, Cutset};
use crate::coloring::{tk_violation, MultiColoring, StrongCover};
use crate::error::{Error, Result};

fn require_tk(col: &MultiColoring, k: usize) -> Result<()> {
    if let Some(w) = tk_violation(col, k)? {
        return Err(Error::precondition(
            format!("not a ({}, {k})-coloring", col.t()),
            Some(w),
        ));
    }
    Ok(())
}

fn pair_cover(col: &MultiColoring, a: usize, b: usize) -> Result<StrongCover> {
    two_clique_cover_exact(col, (a, b), &ExactLimits::default())?.ok_or_else(|| {
        theorem_violation(
            col,
            format!("chordal 2-coloring in colors {a}, {b} has no cover by two cliques"),
        )
    })
}

/// Cover of all vertices of a chordal (3,3)-coloring by at most three
/// cliques of distinct colors.
///
/// Let `c1` be the first color having an edge that carries no other color.
/// If there is none, colors 2 and 3 cover every edge and two cliques
/// suffice. Otherwise `c1`'s graph is connected; it is either one clique or
/// splits as `A, Q, B` around a clique cut-set `Q`, and the other two colors
/// cover every edge inside `A ∪ B`.
pub fn strong_cover_33(col: &MultiColoring) -> Result<StrongCover> {
    if col.t() != 3 {
        return Err(Error::precondition(
            format!("expected 3 colors, got {}", col.t()),
            None,
        ));
    }
    if col.n() < 3 {
        return Err(Error::precondition("need at least 3 vertices", None));
    }
    let peos = chordal_peos(col)?;
    require_tk(col, 3)?;

    let c1 = (1..=3).find(|&c| {
        let only = 1u64 << (c - 1);
        col.pairs().any(|(u, v)| col.mask(u, v) == only)
    });
    let Some(c1) = c1 else {
        return pair_cover(col, 2, 3);
    };
    let (c2, c3) = match c1 {
        1 => (2, 3),
        2 => (1, 3),
        _ => (1, 2),
    };
    let (g1, peo1) = &peos[c1 - 1];
    if !g1.is_connected() {
        return pair_cover(col, c2, c3);
    }
    let dec = match clique_cutset(g1, peo1)? {
        Cutset::IsClique => {
            let mut cov = StrongCover::new();
            cov.push(c1, (0..col.n()).collect());
            return Ok(cov);
        }
        Cutset::Decomposition(d) => d,
    };
    let mut rest: Vec<usize> = dec.a.iter().chain(&dec.b).copied().collect();
    rest.sort_unstable();
    let sub = col.restrict(&rest)?.select_colors(&[c2, c3])?;
    let pair = two_clique_cover_exact(&sub, (1, 2), &ExactLimits::default())?.ok_or_else(|| {
        theorem_violation(
            col,
            format!("A ∪ B of the color {c1} cut-set has no cover by colors {c2}, {c3}"),
        )
    })?;
    let mut cov = pair.relabel(&rest, &[c2, c3]);
    cov.push(c1, dec.q);
    cov.sort();
    Ok(cov)
}

/// Cover of all vertices of a chordal (t,t)-coloring by at most two cliques
/// (even `t`) or three cliques (odd `t`).
///
/// Tries color pairs in lexicographic order for one that colors every
/// edge. For odd `t`, falls back to the first color triple that is itself a
/// (3,3)-coloring.
pub fn strong_cover_tt(col: &MultiColoring) -> Result<StrongCover> {
    let t = col.t();
    if t < 2 {
        return Err(Error::precondition("need at least 2 colors", None));
    }
    if col.n() < t {
        return Err(Error::precondition(format!("need n >= t = {t}"), None));
    }
    chordal_peos(col)?;
    require_tk(col, t)?;

    for a in 1..=t {
        for b in a + 1..=t {
            let pair = (1u64 << (a - 1)) | (1u64 << (b - 1));
            if col.pairs().all(|(u, v)| col.mask(u, v) & pair != 0) {
                return pair_cover(col, a, b);
            }
        }
    }
    if t.is_multiple_of(2) {
        return Err(theorem_violation(col, "no color pair covers every edge"));
    }
    for a in 1..=t {
        for b in a + 1..=t {
            for c in b + 1..=t {
                let sub = col.select_colors(&[a, b, c])?;
                if tk_violation(&sub, 3)?.is_none() {
                    let cov = strong_cover_33(&sub)?;
                    let ids: Vec<usize> = (0..col.n()).collect();
                    return Ok(cov.relabel(&ids, &[a, b, c]));
                }
            }
        }
    }
    Err(theorem_violation(
        col,
        "no color triple is a (3,3)-coloring",
    ))
}
