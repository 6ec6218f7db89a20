//! Free Leibniz algebras truncated by weight, and the free graded Lie algebra
//! inside the tensor algebra.
//!
//! The free right Leibniz algebra on `d` generators is the reduced tensor
//! module: the word `v_i1 v_i2 ... v_in` stands for the left-normed bracket
//! `[[..[v_i1, v_i2], ..], v_in]`, and brackets follow
//! `[a, v] = a v` and `[a, b v] = [[a, b], v] - [[a, v], b]`.
//! The left algebra is its opposite.

use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

use num_traits::{One, Zero};
use rand::Rng;
use thiserror::Error;

use crate::exactla::{Scalar, Subspace};
use crate::leibcore::Convention;

pub type Word = Vec<u8>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FreeError {
    #[error("bracket of weight {weight} exceeds the truncation weight {max_weight}")]
    WeightOverflow { weight: usize, max_weight: usize },
    #[error("invalid parameters: {0}")]
    Invalid(String),
}

/// A homogeneous or inhomogeneous element of the tensor algebra over letters
/// of type `L`, each letter in degree one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorElement<L: Ord> {
    terms: BTreeMap<Vec<L>, Scalar>,
}

impl<L: Ord + Clone> Default for TensorElement<L> {
    fn default() -> Self {
        TensorElement {
            terms: BTreeMap::new(),
        }
    }
}

impl<L: Ord + Clone> TensorElement<L> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn letter(l: L) -> Self {
        Self::monomial(vec![l], Scalar::one())
    }

    pub fn monomial(word: Vec<L>, c: Scalar) -> Self {
        let mut t = Self::zero();
        t.add_term(word, c);
        t
    }

    pub fn add_term(&mut self, word: Vec<L>, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(word.clone()).or_insert_with(Scalar::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&word);
        }
    }

    pub fn add_scaled(&mut self, s: &Scalar, other: &Self) {
        for (w, c) in &other.terms {
            self.add_term(w.clone(), s * c);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<L>, &Scalar)> {
        self.terms.iter()
    }

    /// The common length of all monomials, if homogeneous and nonzero.
    pub fn degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(Vec::len);
        let first = it.next()?;
        it.all(|l| l == first).then_some(first)
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let mut w = a.clone();
                w.extend(b.iter().cloned());
                out.add_term(w, x * y);
            }
        }
        out
    }
}

/// `⟦x,y⟧ = xy - (-1)^{|x||y|} yx` for homogeneous `x`, `y`.
pub fn graded_commutator<L: Ord + Clone>(
    x: &TensorElement<L>,
    y: &TensorElement<L>,
) -> TensorElement<L> {
    let (p, q) = match (x.degree(), y.degree()) {
        (Some(p), Some(q)) => (p, q),
        _ => {
            assert!(
                x.is_zero() || y.is_zero() || (x.degree().is_some() && y.degree().is_some()),
                "inhomogeneous input"
            );
            return TensorElement::zero();
        }
    };
    let mut out = x.concat(y);
    let sign = if (p * q) % 2 == 0 {
        -Scalar::one()
    } else {
        Scalar::one()
    };
    out.add_scaled(&sign, &y.concat(x));
    out
}

/// Left-normed commutator `⟦..⟦⟦l1, l2⟧, l3⟧, .., ln⟧` of degree-one letters.
pub fn left_normed<L: Ord + Clone>(letters: &[L]) -> TensorElement<L> {
    let mut acc = TensorElement::letter(letters[0].clone());
    for l in &letters[1..] {
        acc = graded_commutator(&acc, &TensorElement::letter(l.clone()));
    }
    acc
}

pub type WordCombination = BTreeMap<Word, Scalar>;

fn add_into(acc: &mut WordCombination, w: Word, c: Scalar) {
    if c.is_zero() {
        return;
    }
    let e = acc.entry(w.clone()).or_insert_with(Scalar::zero);
    *e += c;
    if e.is_zero() {
        acc.remove(&w);
    }
}

/// Bracket of two words in the free right Leibniz algebra.
pub fn free_right_bracket(a: &[u8], b: &[u8]) -> WordCombination {
    let mut memo = HashMap::new();
    right_bracket_memo(a, b, &mut memo)
}

fn right_bracket_memo(
    a: &[u8],
    b: &[u8],
    memo: &mut HashMap<(Word, Word), WordCombination>,
) -> WordCombination {
    assert!(
        !a.is_empty() && !b.is_empty(),
        "brackets are between nonempty words"
    );
    if let Some(r) = memo.get(&(a.to_vec(), b.to_vec())) {
        return r.clone();
    }
    let mut out = WordCombination::new();
    if b.len() == 1 {
        let mut w = a.to_vec();
        w.push(b[0]);
        out.insert(w, Scalar::one());
    } else {
        let (head, v) = (&b[..b.len() - 1], b[b.len() - 1]);
        // [[a, head], v]
        for (w, c) in right_bracket_memo(a, head, memo) {
            let mut w = w;
            w.push(v);
            add_into(&mut out, w, c);
        }
        // - [[a, v], head]
        let mut av = a.to_vec();
        av.push(v);
        for (w, c) in right_bracket_memo(&av, head, memo) {
            add_into(&mut out, w, -c);
        }
    }
    memo.insert((a.to_vec(), b.to_vec()), out.clone());
    out
}

/// The free Leibniz bracket in the requested convention, with the truncation
/// contract enforced.
pub fn free_leibniz_bracket(
    u: &[u8],
    w: &[u8],
    convention: Convention,
    max_weight: usize,
) -> Result<WordCombination, FreeError> {
    let weight = u.len() + w.len();
    if weight > max_weight {
        return Err(FreeError::WeightOverflow { weight, max_weight });
    }
    Ok(match convention {
        Convention::Right => free_right_bracket(u, w),
        Convention::Left => free_right_bracket(w, u),
    })
}

/// All words of the given length over `d` letters, in lexicographic order.
pub fn words(d: usize, len: usize) -> Vec<Word> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..d as u8).map(move |l| {
                    let mut w2 = w.clone();
                    w2.push(l);
                    w2
                })
            })
            .collect();
    }
    out
}

/// The free left Leibniz algebra on `generators` letters, truncated above
/// `max_weight`. Brackets are memoized on first use.
#[derive(Debug)]
pub struct FreeLeibnizTruncation {
    generators: usize,
    max_weight: usize,
    memo: Mutex<HashMap<(Word, Word), WordCombination>>,
}

impl FreeLeibnizTruncation {
    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn max_weight(&self) -> usize {
        self.max_weight
    }

    /// `d^w` for `w = 1..=max_weight`.
    pub fn weight_dims(&self) -> Vec<usize> {
        (1..=self.max_weight)
            .map(|w| self.generators.pow(w as u32))
            .collect()
    }

    pub fn basis(&self, weight: usize) -> Vec<Word> {
        words(self.generators, weight)
    }

    /// Left-convention bracket `[u, w]`.
    pub fn bracket(&self, u: &[u8], w: &[u8]) -> Result<WordCombination, FreeError> {
        let weight = u.len() + w.len();
        if weight > self.max_weight {
            return Err(FreeError::WeightOverflow {
                weight,
                max_weight: self.max_weight,
            });
        }
        let mut memo = self.memo.lock().expect("bracket memo");
        Ok(right_bracket_memo(w, u, &mut memo))
    }

    /// Residual of the left Leibniz identity on a word triple.
    pub fn leibniz_residual(
        &self,
        x: &[u8],
        y: &[u8],
        z: &[u8],
    ) -> Result<WordCombination, FreeError> {
        let br = |a: &WordCombination, b: &[u8]| -> Result<WordCombination, FreeError> {
            let mut out = WordCombination::new();
            for (w, c) in a {
                for (v, e) in self.bracket(w, b)? {
                    add_into(&mut out, v, c * e);
                }
            }
            Ok(out)
        };
        let rb = |a: &[u8], b: &WordCombination| -> Result<WordCombination, FreeError> {
            let mut out = WordCombination::new();
            for (w, c) in b {
                for (v, e) in self.bracket(a, w)? {
                    add_into(&mut out, v, c * e);
                }
            }
            Ok(out)
        };
        // [[x,y],z] - [x,[y,z]] + [y,[x,z]]
        let mut r = br(&self.bracket(x, y)?, z)?;
        for (w, c) in rb(x, &self.bracket(y, z)?)? {
            add_into(&mut r, w, -c);
        }
        for (w, c) in rb(y, &self.bracket(x, z)?)? {
            add_into(&mut r, w, c);
        }
        Ok(r)
    }

    /// Random word triples of total weight at most `max_weight` that violate
    /// the left Leibniz identity.
    pub fn sample_violations<R: Rng>(
        &self,
        rng: &mut R,
        samples: usize,
    ) -> Vec<(Word, Word, Word)> {
        let mut bad = vec![];
        if self.max_weight < 3 {
            return bad;
        }
        for _ in 0..samples {
            let total = rng.gen_range(3..=self.max_weight);
            let a = rng.gen_range(1..=total - 2);
            let b = rng.gen_range(1..=total - a - 1);
            let c = total - a - b;
            let mut pick = |len: usize| -> Word {
                (0..len)
                    .map(|_| rng.gen_range(0..self.generators) as u8)
                    .collect()
            };
            let (x, y, z) = (pick(a), pick(b), pick(c));
            if !self
                .leibniz_residual(&x, &y, &z)
                .expect("within truncation")
                .is_empty()
            {
                bad.push((x, y, z));
            }
        }
        bad
    }

    /// Span of the polarized squares `[u,v] + [v,u]` of weight exactly `weight`,
    /// in the coordinates of [`Self::basis`].
    pub fn kernel_ideal_at_weight(&self, weight: usize) -> Result<Subspace, FreeError> {
        let basis = self.basis(weight);
        let index: HashMap<&Word, usize> = basis.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let mut vecs = vec![];
        for a in 1..weight {
            for u in words(self.generators, a) {
                for v in words(self.generators, weight - a) {
                    let mut s = self.bracket(&u, &v)?;
                    for (w, c) in self.bracket(&v, &u)? {
                        add_into(&mut s, w, c);
                    }
                    let mut vec = vec![Scalar::zero(); basis.len()];
                    for (w, c) in s {
                        vec[index[&w]] = c;
                    }
                    vecs.push(vec);
                }
            }
        }
        Ok(Subspace::span(basis.len(), vecs))
    }
}

pub fn free_leibniz(
    generators: usize,
    max_weight: usize,
) -> Result<FreeLeibnizTruncation, FreeError> {
    if generators == 0 || max_weight == 0 {
        return Err(FreeError::Invalid(
            "need at least one generator and weight one".into(),
        ));
    }
    if generators > u8::MAX as usize {
        return Err(FreeError::Invalid("too many generators".into()));
    }
    Ok(FreeLeibnizTruncation {
        generators,
        max_weight,
        memo: Mutex::new(HashMap::new()),
    })
}

/// The degree-`n` component of the free graded Lie algebra on `d` odd
/// generators, as a subspace of `V^{⊗n}` with `V^{⊗n}` indexed as in
/// [`words`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedLieComponent {
    pub degree: usize,
    pub subspace: Subspace,
}

pub fn free_graded_lie_component(d: usize, n: usize) -> GradedLieComponent {
    assert!(n >= 1 && d >= 1);
    let basis = words(d, n);
    let index: HashMap<Word, usize> = basis
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, w)| (w, i))
        .collect();
    let vecs = basis.iter().map(|seq| {
        let t = left_normed(seq);
        let mut v = vec![Scalar::zero(); basis.len()];
        for (w, c) in t.terms() {
            v[index[w]] = c.clone();
        }
        v
    });
    GradedLieComponent {
        degree: n,
        subspace: Subspace::span(basis.len(), vecs.collect::<Vec<_>>()),
    }
}

fn mobius(mut n: usize) -> i64 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Dimension of the weight-`w` part of the free Lie algebra on `d`
/// generators, `(1/w) sum_{e | w} mu(e) d^(w/e)`.
pub fn witt_dim(d: usize, w: usize) -> usize {
    assert!(w >= 1);
    let sum: i128 = (1..=w)
        .filter(|e| w % e == 0)
        .map(|e| mobius(e) as i128 * (d as i128).pow((w / e) as u32))
        .sum();
    (sum / w as i128) as usize
}
