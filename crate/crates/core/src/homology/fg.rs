//! The subcomplex `F(g) ⊆ T(g)` spanned by iterated graded commutators of
//! elements of `g` (each in degree one), with the trivial-coefficient Leibniz
//! differential; for free algebras it splits into finite weight blocks.

use std::collections::HashMap;
use std::hash::Hash;

use num_traits::Zero;
use rayon::prelude::*;

use super::{prepare, ChainComplex, Coefficients, HomologyError, Variance};
use crate::exactla::{restrict_map, LinAlgError, Matrix, Scalar, Subspace};
use crate::freealg::{
    free_leibniz, left_normed, witt_dim, words, FreeError, FreeLeibnizTruncation, Word,
};
use crate::leibcore::LeibnizAlgebra;

/// Largest weight block, in basis vectors of `g^{⊗n}`, that
/// [`conjecture_check`] will build.
pub const CONJECTURE_BLOCK_BUDGET: usize = 4096;

struct Block<L> {
    tuples: Vec<Vec<L>>,
    index: HashMap<Vec<L>, usize>,
}

impl<L: Clone + Eq + Hash> Block<L> {
    fn new(tuples: Vec<Vec<L>>) -> Self {
        let index = tuples
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, t)| (t, i))
            .collect();
        Block { tuples, index }
    }

    fn len(&self) -> usize {
        self.tuples.len()
    }
}

/// Trivial-coefficient Leibniz differential between two blocks:
/// `d(x1..xn) = Σ_{i<j} (-1)^j x1..[xj,xi]..x̂j..xn`.
fn block_differential<L, F>(src: &Block<L>, dst: &Block<L>, bracket: F) -> Matrix
where
    L: Clone + Eq + Hash,
    F: Fn(&L, &L) -> Vec<(L, Scalar)>,
{
    let mut d = Matrix::zeros(dst.len(), src.len());
    for (col, t) in src.tuples.iter().enumerate() {
        for i in 0..t.len() {
            for j in (i + 1)..t.len() {
                let odd = (j + 1) % 2 == 1;
                for (l, c) in bracket(&t[j], &t[i]) {
                    let mut u = t.clone();
                    u[i] = l;
                    u.remove(j);
                    let row = *dst
                        .index
                        .get(&u)
                        .expect("differential preserves the weight block");
                    d.add_to(row, col, &if odd { -c } else { c });
                }
            }
        }
    }
    d
}

/// Span of the left-normed graded commutators of all tuples in the block.
fn commutator_span<L: Ord + Clone + Eq + Hash + Send + Sync>(block: &Block<L>) -> Subspace {
    let vectors: Vec<Vec<Scalar>> = block
        .tuples
        .par_iter()
        .map(|t| {
            let mut v = vec![Scalar::zero(); block.len()];
            for (w, c) in left_normed(t).terms() {
                v[block.index[w]] = c.clone();
            }
            v
        })
        .collect();
    Subspace::span(block.len(), vectors)
}

fn assemble<L, F>(
    blocks: &[Block<L>],
    bracket: F,
    exact_top: i32,
) -> Result<ChainComplex, HomologyError>
where
    L: Ord + Clone + Eq + Hash + Send + Sync,
    F: Fn(&L, &L) -> Vec<(L, Scalar)> + Sync,
{
    let spans: Vec<Subspace> = blocks.par_iter().map(commutator_span).collect();
    let differentials: Vec<Matrix> = (0..blocks.len())
        .into_par_iter()
        .map(|k| {
            if k == 0 {
                return Ok(Matrix::zeros(0, spans[0].dim()));
            }
            let full = block_differential(&blocks[k], &blocks[k - 1], &bracket);
            restrict_map(&full, &spans[k], &spans[k - 1]).map_err(|e| match e {
                LinAlgError::NotInvariant { .. } => HomologyError::NotInvariant {
                    degree: k as i32 + 1,
                },
                other => HomologyError::InvalidInput(other.to_string()),
            })
        })
        .collect::<Result<_, _>>()?;
    let labels = spans
        .iter()
        .enumerate()
        .map(|(k, s)| (0..s.dim()).map(|i| format!("F{}[{i}]", k + 1)).collect())
        .collect();
    ChainComplex::new(Variance::Chain, 1, differentials, labels, exact_top)
}

/// `F(g)` in degrees `1..=n_max + 1` for an arbitrary left Leibniz algebra.
pub fn fg_subcomplex(g: &LeibnizAlgebra, n_max: usize) -> Result<ChainComplex, HomologyError> {
    prepare(g, &Coefficients::Trivial)?;
    if n_max == 0 {
        return Err(HomologyError::InvalidInput(
            "the subcomplex starts in degree one".into(),
        ));
    }
    let n = g.dim();
    let blocks: Vec<Block<usize>> = (1..=n_max + 1)
        .map(|k| {
            Block::new(
                words(n, k)
                    .into_iter()
                    .map(|w| w.into_iter().map(usize::from).collect())
                    .collect(),
            )
        })
        .collect();
    let bracket = |a: &usize, b: &usize| -> Vec<(usize, Scalar)> {
        g.bracket_basis(*a, *b)
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k, c.clone()))
            .collect()
    };
    assemble(&blocks, bracket, n_max as i32)
}

/// Compositions of `total` into `parts` positive parts, lexicographic.
fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = vec![];
    for first in 1..=total.saturating_sub(parts - 1) {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn weight_block(generators: usize, weight: usize, n: usize) -> Vec<Vec<Word>> {
    let mut out = vec![];
    for comp in compositions(weight, n) {
        let mut acc: Vec<Vec<Word>> = vec![vec![]];
        for &len in &comp {
            let ws = words(generators, len);
            acc = acc
                .into_iter()
                .flat_map(|prefix| {
                    ws.iter().map(move |w| {
                        let mut p = prefix.clone();
                        p.push(w.clone());
                        p
                    })
                })
                .collect();
        }
        out.extend(acc);
    }
    out
}

/// Number of basis tuples in the weight-`weight`, degree-`n` block.
pub fn weight_block_size(generators: usize, weight: usize, n: usize) -> usize {
    compositions(weight, n).len() * generators.pow(weight as u32)
}

/// The weight-`weight` block of `F(g)` for `g` free, in degrees
/// `1..=min(n_max + 1, weight)`.
pub fn fg_subcomplex_free(
    f: &FreeLeibnizTruncation,
    n_max: usize,
    weight: usize,
) -> Result<ChainComplex, HomologyError> {
    if weight > f.max_weight() {
        return Err(FreeError::WeightOverflow {
            weight,
            max_weight: f.max_weight(),
        }
        .into());
    }
    if n_max == 0 || n_max > weight {
        return Err(HomologyError::InvalidInput(format!(
            "need 1 <= max degree <= weight, got {n_max} and {weight}"
        )));
    }
    let top = (n_max + 1).min(weight);
    let exact_top = if top == weight { weight } else { n_max };
    let blocks: Vec<Block<Word>> = (1..=top)
        .map(|k| Block::new(weight_block(f.generators(), weight, k)))
        .collect();
    let bracket = |a: &Word, b: &Word| -> Vec<(Word, Scalar)> {
        f.bracket(a, b)
            .expect("brackets inside a weight block stay within the truncation")
            .into_iter()
            .collect()
    };
    assemble(&blocks, bracket, exact_top as i32)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightRow {
    pub weight: usize,
    /// `(degree, dim H_degree)` for degrees `1..=weight`
    pub betti: Vec<(i32, usize)>,
    pub h1: usize,
    pub witt: usize,
    /// degrees `n >= 2` with nonzero homology
    pub nonvanishing: Vec<i32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureReport {
    pub generators: usize,
    pub max_weight: usize,
    pub rows: Vec<WeightRow>,
}

impl ConjectureReport {
    pub fn vanishing(&self) -> bool {
        self.rows.iter().all(|r| r.nonvanishing.is_empty())
    }

    pub fn witt_agrees(&self) -> bool {
        self.rows.iter().all(|r| r.h1 == r.witt)
    }

    pub fn verdict(&self) -> &'static str {
        if !self.vanishing() {
            "FALSIFICATION"
        } else if !self.witt_agrees() {
            "WITT_MISMATCH"
        } else {
            "PASS"
        }
    }
}

/// Homology of every weight block of `F(g)` for `g` free on `d` generators,
/// up to weight `max_weight`.
pub fn conjecture_check(d: usize, max_weight: usize) -> Result<ConjectureReport, HomologyError> {
    if !(1..=3).contains(&d) {
        return Err(HomologyError::InvalidInput(format!(
            "generator count must be 1, 2 or 3, got {d}"
        )));
    }
    if max_weight == 0 {
        return Err(HomologyError::InvalidInput(
            "max weight must be positive".into(),
        ));
    }
    let largest = (1..=max_weight)
        .flat_map(|w| (1..=w).map(move |n| weight_block_size(d, w, n)))
        .max()
        .unwrap_or(0);
    if largest > CONJECTURE_BLOCK_BUDGET {
        return Err(HomologyError::InvalidInput(format!(
            "largest weight block has {largest} basis tuples, above the budget of {CONJECTURE_BLOCK_BUDGET}"
        )));
    }
    let f = free_leibniz(d, max_weight)?;
    let rows: Vec<WeightRow> = (1..=max_weight)
        .into_par_iter()
        .map(|w| {
            let c = fg_subcomplex_free(&f, w, w)?;
            let betti = c.betti_table();
            let h1 = betti.iter().find(|(n, _)| *n == 1).map_or(0, |(_, b)| *b);
            let nonvanishing = betti
                .iter()
                .filter(|(n, b)| *n >= 2 && *b > 0)
                .map(|(n, _)| *n)
                .collect();
            Ok(WeightRow {
                weight: w,
                betti,
                h1,
                witt: witt_dim(d, w),
                nonvanishing,
            })
        })
        .collect::<Result<_, HomologyError>>()?;
    Ok(ConjectureReport {
        generators: d,
        max_weight,
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{a2, r2};
    use crate::leibcore::lie_quotient;

    #[test]
    fn compositions_and_blocks() {
        assert_eq!(compositions(3, 2), vec![vec![1, 2], vec![2, 1]]);
        assert_eq!(weight_block_size(2, 5, 3), 192);
        assert_eq!(weight_block(2, 5, 3).len(), 192);
    }

    #[test]
    fn h1_is_lie_quotient() {
        for g in [a2(), r2(), LeibnizAlgebra::abelian(2)] {
            let c = fg_subcomplex(&g, 2).unwrap();
            assert_eq!(c.dim(1), g.dim());
            assert_eq!(c.betti()[0], lie_quotient(&g).unwrap().dim());
        }
    }

    #[test]
    fn one_generator_weight_two() {
        let f = free_leibniz(1, 2).unwrap();
        let c = fg_subcomplex_free(&f, 2, 2).unwrap();
        assert_eq!(c.dims(), &[1, 1]);
        assert_eq!(c.betti(), vec![0, 0]);
    }

    #[test]
    fn conjecture_small_cases() {
        let r = conjecture_check(1, 6).unwrap();
        assert_eq!(r.verdict(), "PASS");
        assert_eq!(
            r.rows.iter().map(|r| r.h1).collect::<Vec<_>>(),
            vec![1, 0, 0, 0, 0, 0]
        );
        let r = conjecture_check(2, 1).unwrap();
        assert_eq!(r.rows.len(), 1);
        assert_eq!(r.rows[0].h1, 2);
        assert!(conjecture_check(4, 2).is_err());
    }

    #[test]
    fn weight_outside_truncation() {
        let f = free_leibniz(2, 3).unwrap();
        assert!(matches!(
            fg_subcomplex_free(&f, 2, 4),
            Err(HomologyError::Free(FreeError::WeightOverflow { .. }))
        ));
    }
}
