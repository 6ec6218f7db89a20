//! PBW normal forms in the universal enveloping algebra of a non-negatively
//! graded DG Lie algebra.
//!
//! Letters are the basis vectors of all degrees, numbered degree by degree so
//! that the numbering is the letter order. A monomial is normal when its
//! letters weakly increase and no odd letter repeats.

use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

use num_traits::{One, Zero};

use super::HomologyError;
use crate::dgla::DGLieAlgebra;
use crate::exactla::{ratio, Scalar};

pub type Monomial = Vec<usize>;
pub type UElement = BTreeMap<Monomial, Scalar>;

/// Which out-of-order position is rewritten first. Both orders reach the same
/// normal form; the choice exists so that confluence can be tested.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ReductionOrder {
    Leftmost,
    Rightmost,
}

#[derive(Debug)]
pub struct PBWAlgebra {
    underlying: DGLieAlgebra,
    degree_of: Vec<i32>,
    local: Vec<usize>,
    offsets: BTreeMap<i32, usize>,
    names: Vec<String>,
    memo: Mutex<HashMap<Monomial, UElement>>,
}

pub(crate) fn add_term(e: &mut UElement, w: Monomial, c: Scalar) {
    if c.is_zero() {
        return;
    }
    let slot = e.entry(w.clone()).or_insert_with(Scalar::zero);
    *slot += c;
    if slot.is_zero() {
        e.remove(&w);
    }
}

fn add_scaled(acc: &mut UElement, s: &Scalar, other: &UElement) {
    for (w, c) in other {
        add_term(acc, w.clone(), s * c);
    }
}

impl PBWAlgebra {
    /// `names` gives one label per letter, degree by degree; pass `None` for
    /// generated labels.
    pub fn new(l: &DGLieAlgebra, names: Option<Vec<String>>) -> Result<Self, HomologyError> {
        let mut degree_of = vec![];
        let mut local = vec![];
        let mut offsets = BTreeMap::new();
        for (&p, &dim) in l.dims() {
            if dim == 0 {
                continue;
            }
            if p < 0 {
                return Err(HomologyError::InvalidInput(format!(
                    "enveloping algebra needs non-negative degrees, found {p}"
                )));
            }
            offsets.insert(p, degree_of.len());
            for i in 0..dim {
                degree_of.push(p);
                local.push(i);
            }
        }
        let names = match names {
            Some(n) if n.len() == degree_of.len() => n,
            Some(n) => {
                return Err(HomologyError::InvalidInput(format!(
                    "{} letter names for {} letters",
                    n.len(),
                    degree_of.len()
                )));
            }
            None => degree_of
                .iter()
                .zip(&local)
                .map(|(p, i)| format!("b{p}_{i}"))
                .collect(),
        };
        Ok(PBWAlgebra {
            underlying: l.clone(),
            degree_of,
            local,
            offsets,
            names,
            memo: Mutex::new(HashMap::new()),
        })
    }

    pub fn underlying(&self) -> &DGLieAlgebra {
        &self.underlying
    }

    pub fn letter_count(&self) -> usize {
        self.degree_of.len()
    }

    pub fn letter(&self, degree: i32, i: usize) -> usize {
        self.offsets[&degree] + i
    }

    pub fn letter_degree(&self, a: usize) -> i32 {
        self.degree_of[a]
    }

    pub fn letters_of_degree(&self, degree: i32) -> std::ops::Range<usize> {
        match self.offsets.get(&degree) {
            Some(&o) => o..o + self.underlying.dim(degree),
            None => 0..0,
        }
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn degree(&self, w: &[usize]) -> i32 {
        w.iter().map(|&a| self.degree_of[a]).sum()
    }

    fn odd(&self, a: usize) -> bool {
        self.degree_of[a].rem_euclid(2) == 1
    }

    pub fn is_normal(&self, w: &[usize]) -> bool {
        w.windows(2)
            .all(|p| p[0] < p[1] || (p[0] == p[1] && !self.odd(p[0])))
    }

    fn violations(&self, w: &[usize]) -> impl DoubleEndedIterator<Item = usize> + '_ {
        let w = w.to_vec();
        (0..w.len().saturating_sub(1))
            .filter(move |&i| w[i] > w[i + 1] || (w[i] == w[i + 1] && self.odd(w[i])))
    }

    /// `⟦a, b⟧` as a combination of letters.
    pub fn letter_bracket(&self, a: usize, b: usize) -> Vec<(usize, Scalar)> {
        let (p, q) = (self.degree_of[a], self.degree_of[b]);
        let v = self
            .underlying
            .bracket_basis(p, self.local[a], q, self.local[b]);
        v.into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (self.letter(p + q, k), c))
            .collect()
    }

    /// One rewriting step at position `i`.
    fn rewrite(&self, w: &[usize], i: usize) -> Vec<(Monomial, Scalar)> {
        let (a, b) = (w[i], w[i + 1]);
        let splice = |mid: &[usize]| -> Monomial {
            let mut out = w[..i].to_vec();
            out.extend_from_slice(mid);
            out.extend_from_slice(&w[i + 2..]);
            out
        };
        let mut out = vec![];
        if a == b {
            let half = ratio(1, 2);
            for (k, c) in self.letter_bracket(a, a) {
                out.push((splice(&[k]), &half * c));
            }
        } else {
            let (p, q) = (self.degree_of[a], self.degree_of[b]);
            let s = if (p * q).rem_euclid(2) == 0 {
                Scalar::one()
            } else {
                -Scalar::one()
            };
            out.push((splice(&[b, a]), s));
            for (k, c) in self.letter_bracket(a, b) {
                out.push((splice(&[k]), c));
            }
        }
        out
    }

    pub fn normal_form(&self, w: &[usize]) -> UElement {
        if let Some(hit) = self.memo.lock().expect("normal form memo").get(w) {
            return hit.clone();
        }
        let out = match self.violations(w).next() {
            None => UElement::from([(w.to_vec(), Scalar::one())]),
            Some(i) => {
                let mut acc = UElement::new();
                for (v, c) in self.rewrite(w, i) {
                    add_scaled(&mut acc, &c, &self.normal_form(&v));
                }
                acc
            }
        };
        self.memo
            .lock()
            .expect("normal form memo")
            .insert(w.to_vec(), out.clone());
        out
    }

    /// Normal form computed without memoization, always rewriting at the
    /// position chosen by `order`.
    pub fn normal_form_with(&self, w: &[usize], order: ReductionOrder) -> UElement {
        let mut pending: Vec<(Monomial, Scalar)> = vec![(w.to_vec(), Scalar::one())];
        let mut out = UElement::new();
        while let Some((v, c)) = pending.pop() {
            let pos = match order {
                ReductionOrder::Leftmost => self.violations(&v).next(),
                ReductionOrder::Rightmost => self.violations(&v).next_back(),
            };
            match pos {
                None => add_term(&mut out, v, c),
                Some(i) => {
                    pending.extend(self.rewrite(&v, i).into_iter().map(|(u, e)| (u, &c * e)))
                }
            }
        }
        out
    }

    pub fn normalize(&self, e: &UElement) -> UElement {
        let mut out = UElement::new();
        for (w, c) in e {
            add_scaled(&mut out, c, &self.normal_form(w));
        }
        out
    }

    pub fn multiply(&self, x: &UElement, y: &UElement) -> UElement {
        let mut out = UElement::new();
        for (u, a) in x {
            for (v, b) in y {
                let mut w = u.clone();
                w.extend_from_slice(v);
                add_scaled(&mut out, &(a * b), &self.normal_form(&w));
            }
        }
        out
    }

    /// The derivation extending the differential, followed by normalization.
    pub fn differential(&self, w: &[usize]) -> UElement {
        let mut out = UElement::new();
        let mut before = 0;
        for (i, &a) in w.iter().enumerate() {
            let p = self.degree_of[a];
            if p > 0 {
                let s = if before % 2 == 0 {
                    Scalar::one()
                } else {
                    -Scalar::one()
                };
                let image = self.underlying.d(
                    p,
                    &crate::exactla::unit(self.underlying.dim(p), self.local[a]),
                );
                for (k, c) in image.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let mut v = w[..i].to_vec();
                    v.push(self.letter(p - 1, k));
                    v.extend_from_slice(&w[i + 1..]);
                    add_scaled(&mut out, &(&s * c), &self.normal_form(&v));
                }
            }
            before += p;
        }
        out
    }

    pub fn format_monomial(&self, w: &[usize]) -> String {
        if w.is_empty() {
            return "1".into();
        }
        let odd: Vec<&str> = w
            .iter()
            .filter(|&&a| self.odd(a))
            .map(|&a| self.name(a))
            .collect();
        let even: Vec<&str> = w
            .iter()
            .filter(|&&a| !self.odd(a))
            .map(|&a| self.name(a))
            .collect();
        let mut parts = vec![];
        if !odd.is_empty() {
            parts.push(odd.join("∧"));
        }
        parts.extend(even.into_iter().map(String::from));
        parts.join("·")
    }
}
