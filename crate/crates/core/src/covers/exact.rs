use super::{from_mask, maximal_cliques, to_mask, ExactLimits};
use crate::coloring::{MultiColoring, StrongCover};
use crate::error::{Error, Result};

fn check_size(col: &MultiColoring, limits: &ExactLimits) -> Result<()> {
    let limit = limits.max_n.min(64);
    if col.n() > limit {
        return Err(Error::SizeLimit {
            size: col.n(),
            limit,
        });
    }
    Ok(())
}

/// Per color, the masks of its maximal cliques in lexicographic order.
fn candidate_masks(col: &MultiColoring, limits: &ExactLimits) -> Result<Vec<Vec<u64>>> {
    (1..=col.t())
        .map(|c| {
            let g = col.color_graph(c)?;
            Ok(maximal_cliques(&g, limits)?
                .iter()
                .map(|q| to_mask(q))
                .collect())
        })
        .collect()
}

fn cover_from_choice(cands: &[Vec<u64>], choice: &[Option<usize>]) -> StrongCover {
    let mut cov = StrongCover::new();
    for (c, pick) in choice.iter().enumerate() {
        if let Some(i) = pick {
            cov.push(c + 1, from_mask(cands[c][*i]));
        }
    }
    cov
}

struct MaxSearch<'a> {
    cands: &'a [Vec<u64>],
    /// Union of all candidates of colors `c..t`.
    suffix_union: Vec<u64>,
    full: u64,
    best: u32,
    best_choice: Vec<Option<usize>>,
    choice: Vec<Option<usize>>,
}

impl MaxSearch<'_> {
    fn run(&mut self, c: usize, covered: u64) {
        let count = covered.count_ones();
        if count > self.best {
            self.best = count;
            self.best_choice.clone_from(&self.choice);
            for slot in &mut self.best_choice[c..] {
                *slot = None;
            }
        }
        if c == self.cands.len() || self.best == self.full.count_ones() {
            return;
        }
        if (covered | self.suffix_union[c]).count_ones() <= self.best {
            return;
        }
        let gain: u32 = self.cands[c..]
            .iter()
            .map(|qs| {
                qs.iter()
                    .map(|q| (q & !covered).count_ones())
                    .max()
                    .unwrap_or(0)
            })
            .sum();
        if count + gain <= self.best {
            return;
        }
        for i in 0..self.cands[c].len() {
            let q = self.cands[c][i];
            if q & !covered == 0 {
                continue;
            }
            self.choice[c] = Some(i);
            self.run(c + 1, covered | q);
        }
        self.choice[c] = None;
        self.run(c + 1, covered);
    }
}

/// A strong cover covering as many vertices as possible.
///
/// Searches, color by color, over each color's maximal cliques plus the
/// empty choice with branch and bound. Among optimal covers the first in
/// search order wins (cliques in lexicographic order, empty choice last).
pub fn exact_max_strong_cover(col: &MultiColoring, limits: &ExactLimits) -> Result<StrongCover> {
    check_size(col, limits)?;
    let cands = candidate_masks(col, limits)?;
    let t = col.t();
    let mut suffix_union = vec![0u64; t + 1];
    for c in (0..t).rev() {
        suffix_union[c] = suffix_union[c + 1] | cands[c].iter().fold(0, |a, &q| a | q);
    }
    let full = if col.n() == 64 {
        u64::MAX
    } else {
        (1u64 << col.n()) - 1
    };
    let mut search = MaxSearch {
        cands: &cands,
        suffix_union,
        full,
        best: 0,
        best_choice: vec![None; t],
        choice: vec![None; t],
    };
    search.run(0, 0);
    Ok(cover_from_choice(&cands, &search.best_choice))
}

struct ThetaSearch<'a> {
    cands: &'a [Vec<u64>],
    suffix_union: Vec<u64>,
    full: u64,
    best: Option<usize>,
    best_choice: Vec<Option<usize>>,
    choice: Vec<Option<usize>>,
}

impl ThetaSearch<'_> {
    fn run(&mut self, c: usize, covered: u64, used: usize) {
        if covered == self.full {
            if self.best.is_none_or(|b| used < b) {
                self.best = Some(used);
                self.best_choice.clone_from(&self.choice);
                for slot in &mut self.best_choice[c..] {
                    *slot = None;
                }
            }
            return;
        }
        if c == self.cands.len() || covered | self.suffix_union[c] != self.full {
            return;
        }
        if self.best.is_some_and(|b| used + 1 >= b) {
            return;
        }
        for i in 0..self.cands[c].len() {
            let q = self.cands[c][i];
            if q & !covered == 0 {
                continue;
            }
            self.choice[c] = Some(i);
            self.run(c + 1, covered | q, used + 1);
        }
        self.choice[c] = None;
        self.run(c + 1, covered, used);
    }
}

/// Minimum number of distinct-color monochromatic cliques covering every
/// vertex, with a cover attaining it; `None` when no strong cover exists.
pub fn theta(col: &MultiColoring, limits: &ExactLimits) -> Result<Option<(usize, StrongCover)>> {
    check_size(col, limits)?;
    let cands = candidate_masks(col, limits)?;
    let t = col.t();
    let mut suffix_union = vec![0u64; t + 1];
    for c in (0..t).rev() {
        suffix_union[c] = suffix_union[c + 1] | cands[c].iter().fold(0, |a, &q| a | q);
    }
    let full = if col.n() == 64 {
        u64::MAX
    } else {
        (1u64 << col.n()) - 1
    };
    let mut search = ThetaSearch {
        cands: &cands,
        suffix_union,
        full,
        best: None,
        best_choice: vec![None; t],
        choice: vec![None; t],
    };
    search.run(0, 0, 0);
    Ok(search
        .best
        .map(|b| (b, cover_from_choice(&cands, &search.best_choice))))
}

/// Two cliques, of colors `colors.0` and `colors.1`, covering every vertex,
/// or `None` if there are none.
///
/// Enough to try each maximal clique `C` of the first color and test
/// whether the rest is a clique of the second.
pub fn two_clique_cover_exact(
    col: &MultiColoring,
    colors: (usize, usize),
    limits: &ExactLimits,
) -> Result<Option<StrongCover>> {
    let (a, b) = colors;
    col.check_color(a)?;
    col.check_color(b)?;
    if a == b {
        return Err(Error::invalid("the two colors must differ"));
    }
    let ga = col.color_graph(a)?;
    let gb = col.color_graph(b)?;
    for q in maximal_cliques(&ga, limits)? {
        let rest: Vec<usize> = (0..col.n())
            .filter(|v| q.binary_search(v).is_err())
            .collect();
        if gb.is_clique(&rest) {
            let mut cov = StrongCover::new();
            cov.push(a, q);
            if !rest.is_empty() {
                cov.push(b, rest);
            }
            cov.sort();
            return Ok(Some(cov));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::verify_cover;
    use crate::constructions::{construct_k4_two_paths, construct_k5star};

    #[test]
    fn k5star_leaves_one_vertex() {
        let col = construct_k5star();
        let lim = ExactLimits::default();
        let cov = exact_max_strong_cover(&col, &lim).unwrap();
        assert_eq!(cov.covered_count(), 4);
        assert!(verify_cover(&col, &cov).unwrap().valid);
        assert_eq!(theta(&col, &lim).unwrap(), None);
        assert_eq!(two_clique_cover_exact(&col, (1, 2), &lim).unwrap(), None);
    }

    #[test]
    fn k4_two_paths() {
        let col = construct_k4_two_paths();
        let lim = ExactLimits::default();
        let (th, cov) = theta(&col, &lim).unwrap().unwrap();
        assert_eq!(th, 2);
        assert_eq!(cov.covered_count(), 4);
        let pair = two_clique_cover_exact(&col, (1, 2), &lim).unwrap().unwrap();
        assert_eq!(pair.assignments, vec![(1, vec![1, 2]), (2, vec![0, 3])]);
    }

    #[test]
    fn all_colors() {
        let col = MultiColoring::all_colors(5, 3).unwrap();
        let lim = ExactLimits::default();
        assert_eq!(
            exact_max_strong_cover(&col, &lim).unwrap().covered_count(),
            5
        );
        assert_eq!(theta(&col, &lim).unwrap().unwrap().0, 1);
        let pair =
            two_clique_cover_exact(&col.select_colors(&[1, 2]).unwrap(), (1, 2), &lim).unwrap();
        assert_eq!(pair.unwrap().clique_count(), 1);
    }

    #[test]
    fn size_limit() {
        let col = MultiColoring::all_colors(12, 2).unwrap();
        assert!(matches!(
            exact_max_strong_cover(&col, &ExactLimits::with_max_n(10)),
            Err(Error::SizeLimit {
                size: 12,
                limit: 10
            })
        ));
        assert!(theta(&col, &ExactLimits::with_max_n(100)).is_ok());
    }
}
