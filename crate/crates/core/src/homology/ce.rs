//! Chevalley-Eilenberg complexes computed inside `U(M(g))`, the classical
//! complexes of a Lie algebra, and the comparison map from the Leibniz complex.

use std::collections::HashMap;

use num_traits::{One, Zero};
use rayon::prelude::*;

use super::pbw::{Monomial, PBWAlgebra};
use super::{
    loday_chain, loday_cochain, prepare, ChainComplex, Coefficients, HomologyError, Variance,
};
use crate::dgla::minimal_envelope;
use crate::exactla::{rank, Matrix, Scalar, Subspace};
use crate::leibcore::{LeibnizAlgebra, LieAlgebra, LieModule};

/// Increasing `k`-subsets of `0..n`, lexicographic.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = vec![];
    go(0, n, k, &mut vec![], &mut out);
    out
}

/// Weakly increasing `k`-tuples over `0..n`, lexicographic.
fn multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = vec![];
    go(0, n, k, &mut vec![], &mut out);
    out
}

/// `U(M(g))` together with its positive normal monomials in each degree.
struct Envelope {
    u: PBWAlgebra,
    bases: Vec<Vec<Monomial>>,
    index: Vec<HashMap<Monomial, usize>>,
    /// `ξ -> m` for each degree-zero letter
    actions: Vec<Matrix>,
}

fn coefficient_actions(
    coeffs: &Coefficients,
    lie_dim: usize,
) -> Result<Vec<Matrix>, HomologyError> {
    match coeffs {
        Coefficients::Trivial => Ok(vec![Matrix::zeros(1, 1); lie_dim]),
        Coefficients::LieModule(m) => Ok((0..lie_dim).map(|a| m.action.left_matrix(a)).collect()),
        Coefficients::Representation(_) => Err(HomologyError::UnsupportedCoefficients(
            "Chevalley-Eilenberg complexes take trivial or Lie-module coefficients".into(),
        )),
    }
}

fn envelope(
    g: &LeibnizAlgebra,
    coeffs: &Coefficients,
    top: usize,
) -> Result<Envelope, HomologyError> {
    let p = prepare(g, coeffs)?;
    let actions = coefficient_actions(coeffs, p.quotient.dim())?;
    let m = minimal_envelope(g)?;
    let mut names: Vec<String> = p.quotient.quotient.basis_names.clone();
    names.extend(g.basis_names.iter().cloned());
    names.extend(
        p.quotient
            .kernel
            .pivots()
            .iter()
            .map(|&i| format!("{}\u{302}", g.basis_names[i])),
    );
    let u = PBWAlgebra::new(&m, Some(names))?;
    let odd: Vec<usize> = u.letters_of_degree(1).collect();
    let even: Vec<usize> = u.letters_of_degree(2).collect();
    let mut bases = vec![];
    for n in 0..=top {
        let mut basis = vec![];
        for q in 0..=n / 2 {
            let p = n - 2 * q;
            if q > 0 && even.is_empty() {
                continue;
            }
            for s in subsets(odd.len(), p) {
                for t in multisets(even.len(), q) {
                    let mut w: Monomial = s.iter().map(|&i| odd[i]).collect();
                    w.extend(t.iter().map(|&i| even[i]));
                    basis.push(w);
                }
            }
        }
        bases.push(basis);
    }
    let index = bases
        .iter()
        .map(|b| b.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect())
        .collect();
    Ok(Envelope {
        u,
        bases,
        index,
        actions,
    })
}

impl Envelope {
    /// Splits a normal monomial into its degree-zero prefix and the rest.
    fn split<'a>(&self, w: &'a [usize]) -> (&'a [usize], &'a [usize]) {
        let k = w
            .iter()
            .take_while(|&&a| self.u.letter_degree(a) == 0)
            .count();
        w.split_at(k)
    }

    /// `m -> m·ξ1·…·ξr` with `m·ξ = -ξ·m`.
    fn right_fold(&self, prefix: &[usize], dm: usize) -> Matrix {
        let mut acc = Matrix::identity(dm);
        for &xi in prefix {
            acc = self.actions[xi].neg().mul(&acc);
        }
        acc
    }

    /// `v -> ξ1·(…(ξr·v))`
    fn left_fold(&self, prefix: &[usize], dm: usize) -> Matrix {
        let mut acc = Matrix::identity(dm);
        for &xi in prefix.iter().rev() {
            acc = self.actions[xi].mul(&acc);
        }
        acc
    }

    fn labels(
        &self,
        coeffs: &Coefficients,
        fmt: impl Fn(&str, &str) -> String,
    ) -> Vec<Vec<String>> {
        let names = coeffs.names();
        self.bases
            .iter()
            .map(|b| {
                b.iter()
                    .flat_map(|w| {
                        names
                            .iter()
                            .map(|m| fmt(&self.u.format_monomial(w), m))
                            .collect::<Vec<_>>()
                    })
                    .collect()
            })
            .collect()
    }
}

pub fn ce_chain(
    g: &LeibnizAlgebra,
    coeffs: &Coefficients,
    n_max: usize,
) -> Result<ChainComplex, HomologyError> {
    let top = n_max + 1;
    let e = envelope(g, coeffs, top)?;
    let dm = coeffs.dim();
    let differentials: Vec<Matrix> = (0..=top)
        .into_par_iter()
        .map(|n| {
            if n == 0 {
                return Matrix::zeros(0, dm);
            }
            let mut d = Matrix::zeros(e.bases[n - 1].len() * dm, e.bases[n].len() * dm);
            for (col, w) in e.bases[n].iter().enumerate() {
                for (v, c) in e.u.differential(w) {
                    let (prefix, rest) = e.split(&v);
                    let row = e.index[n - 1][rest];
                    let fold = e.right_fold(prefix, dm);
                    for k in 0..dm {
                        for r in 0..dm {
                            let f = fold.get(r, k);
                            if !f.is_zero() {
                                d.add_to(row * dm + r, col * dm + k, &(&c * f));
                            }
                        }
                    }
                }
            }
            d
        })
        .collect();
    let labels = e.labels(coeffs, |w, m| format!("{m}⊗{w}"));
    ChainComplex::new(Variance::Chain, 0, differentials, labels, n_max as i32)
}

pub fn ce_cochain(
    g: &LeibnizAlgebra,
    coeffs: &Coefficients,
    n_max: usize,
) -> Result<ChainComplex, HomologyError> {
    let top = n_max + 1;
    let e = envelope(g, coeffs, top)?;
    let dm = coeffs.dim();
    let differentials: Vec<Matrix> = (0..=top)
        .into_par_iter()
        .map(|n| {
            if n == top {
                return Matrix::zeros(0, e.bases[n].len() * dm);
            }
            let mut d = Matrix::zeros(e.bases[n + 1].len() * dm, e.bases[n].len() * dm);
            for (row, w) in e.bases[n + 1].iter().enumerate() {
                for (v, c) in e.u.differential(w) {
                    let (prefix, rest) = e.split(&v);
                    let col = e.index[n][rest];
                    let fold = e.left_fold(prefix, dm);
                    for r in 0..dm {
                        for k in 0..dm {
                            let f = fold.get(r, k);
                            if !f.is_zero() {
                                d.add_to(row * dm + r, col * dm + k, &(&c * f));
                            }
                        }
                    }
                }
            }
            d
        })
        .collect();
    let labels = e.labels(coeffs, |w, m| format!("{w}→{m}"));
    ChainComplex::new(Variance::Cochain, 0, differentials, labels, n_max as i32)
}

/// Sorts `letters` in place and returns the sign of the permutation, or
/// `None` if a letter repeats.
fn wedge_sign(letters: &mut [usize]) -> Option<Scalar> {
    let mut s = Scalar::one();
    for i in 0..letters.len() {
        for j in 0..letters.len() - 1 - i {
            if letters[j] == letters[j + 1] {
                return None;
            }
            if letters[j] > letters[j + 1] {
                letters.swap(j, j + 1);
                s = -s;
            }
        }
    }
    if letters.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some(s)
}

fn alternating(k: usize) -> Scalar {
    if k % 2 == 0 {
        Scalar::one()
    } else {
        -Scalar::one()
    }
}

/// The classical complex `m ⊗ Λh` or `Hom(Λh, m)` with the alternating-sum
/// differential.
pub fn classical_ce(
    h: &LieAlgebra,
    coeffs: &Coefficients,
    n_max: usize,
    variance: Variance,
) -> Result<ChainComplex, HomologyError> {
    if let Some(v) = h.check().first() {
        return Err(HomologyError::InvalidInput(format!(
            "not a Lie algebra: {v}"
        )));
    }
    let n = h.dim();
    let module = match coeffs {
        Coefficients::Trivial => LieModule::trivial(n, 1),
        Coefficients::LieModule(m) => {
            if m.action.dims()[0] != n {
                return Err(HomologyError::InvalidInput(
                    "module is over an algebra of another dimension".into(),
                ));
            }
            if let Some(v) = m.check(h).first() {
                return Err(HomologyError::InvalidInput(format!("not a module: {v}")));
            }
            m.clone()
        }
        Coefficients::Representation(_) => {
            return Err(HomologyError::UnsupportedCoefficients(
                "classical complexes take Lie-module coefficients".into(),
            ))
        }
    };
    let dm = module.dim();
    let top = n_max + 1;
    let bases: Vec<Vec<Vec<usize>>> = (0..=top).map(|k| subsets(n, k)).collect();
    let index: Vec<HashMap<Vec<usize>, usize>> = bases
        .iter()
        .map(|b| b.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect())
        .collect();
    let acts: Vec<Matrix> = (0..n).map(|a| module.action.left_matrix(a)).collect();

    // boundary of one wedge, as (sign, action letter or none, remaining wedge)
    let boundary = |s: &[usize]| -> Vec<(Scalar, Option<usize>, Vec<usize>)> {
        let mut out = vec![];
        for i in 0..s.len() {
            let mut rest = s.to_vec();
            rest.remove(i);
            out.push((alternating(i), Some(s[i]), rest));
        }
        for i in 0..s.len() {
            for j in (i + 1)..s.len() {
                for (l, c) in h.bracket_basis(s[i], s[j]).iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let mut w: Vec<usize> = vec![l];
                    w.extend(
                        s.iter()
                            .enumerate()
                            .filter(|(k, _)| *k != i && *k != j)
                            .map(|(_, &x)| x),
                    );
                    if let Some(sg) = wedge_sign(&mut w) {
                        out.push((alternating(i + j) * sg * c, None, w));
                    }
                }
            }
        }
        out
    };

    let differentials: Vec<Matrix> = (0..=top)
        .into_par_iter()
        .map(|k| match variance {
            Variance::Chain => {
                if k == 0 {
                    return Matrix::zeros(0, dm);
                }
                let mut d = Matrix::zeros(bases[k - 1].len() * dm, bases[k].len() * dm);
                for (col, s) in bases[k].iter().enumerate() {
                    for (sg, act, rest) in boundary(s) {
                        let row = index[k - 1][&rest];
                        let a = match act {
                            Some(x) => acts[x].neg(),
                            None => Matrix::identity(dm),
                        };
                        for kk in 0..dm {
                            for r in 0..dm {
                                let f = a.get(r, kk);
                                if !f.is_zero() {
                                    d.add_to(row * dm + r, col * dm + kk, &(&sg * f));
                                }
                            }
                        }
                    }
                }
                d
            }
            Variance::Cochain => {
                if k == top {
                    return Matrix::zeros(0, bases[k].len() * dm);
                }
                let mut d = Matrix::zeros(bases[k + 1].len() * dm, bases[k].len() * dm);
                for (row, s) in bases[k + 1].iter().enumerate() {
                    for (sg, act, rest) in boundary(s) {
                        let col = index[k][&rest];
                        let a = match act {
                            Some(x) => acts[x].clone(),
                            None => Matrix::identity(dm),
                        };
                        for r in 0..dm {
                            for kk in 0..dm {
                                let f = a.get(r, kk);
                                if !f.is_zero() {
                                    d.add_to(row * dm + r, col * dm + kk, &(&sg * f));
                                }
                            }
                        }
                    }
                }
                d
            }
        })
        .collect();
    let names = match coeffs {
        Coefficients::Trivial => vec!["1".to_string()],
        _ => module.basis_names.clone(),
    };
    let labels = bases
        .iter()
        .map(|b| {
            b.iter()
                .flat_map(|s| {
                    let w = if s.is_empty() {
                        "1".to_string()
                    } else {
                        s.iter()
                            .map(|&i| h.basis_names[i].as_str())
                            .collect::<Vec<_>>()
                            .join("∧")
                    };
                    names
                        .iter()
                        .map(|m| match variance {
                            Variance::Chain => format!("{m}⊗{w}"),
                            Variance::Cochain => format!("{w}→{m}"),
                        })
                        .collect::<Vec<_>>()
                })
                .collect()
        })
        .collect();
    ChainComplex::new(variance, 0, differentials, labels, n_max as i32)
}

/// The map induced on homology in one degree, in a basis of cycle
/// representatives of the source and a basis of the target quotient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedMap {
    pub degree: i32,
    pub source_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
    pub matrix: Matrix,
}

impl InducedMap {
    pub fn injective(&self) -> bool {
        self.rank == self.source_dim
    }

    pub fn surjective(&self) -> bool {
        self.rank == self.target_dim
    }

    pub fn iso(&self) -> bool {
        self.injective() && self.surjective()
    }
}

fn induced_map(f: &Matrix, src: &ChainComplex, dst: &ChainComplex, degree: i32) -> InducedMap {
    let z = src.cycles(degree);
    let b = src.boundaries(degree);
    let amb = z.ambient_dim();
    let mut span: Vec<Vec<Scalar>> = (0..b.dim()).map(|i| b.basis_vector(i)).collect();
    let mut current = b;
    let mut reps = vec![];
    for i in 0..z.dim() {
        let v = z.basis_vector(i);
        if !current.contains(&v) {
            span.push(v.clone());
            reps.push(v);
            current = Subspace::span(amb, span.clone());
        }
    }
    let target_b = dst.boundaries(degree);
    let proj = target_b.quotient_projection();
    let target_z = dst.cycles(degree);
    let quotient = Subspace::span(
        proj.rows(),
        (0..target_z.dim())
            .map(|i| proj.apply(&target_z.basis_vector(i)))
            .collect::<Vec<_>>(),
    );
    let columns: Vec<Vec<Scalar>> = reps
        .iter()
        .map(|r| {
            quotient
                .coordinates(&proj.apply(&f.apply(r)))
                .expect("chain maps send cycles to cycles")
        })
        .collect();
    let matrix = Matrix::from_columns(quotient.dim(), &columns);
    InducedMap {
        degree,
        source_dim: reps.len(),
        target_dim: quotient.dim(),
        rank: rank(&matrix),
        matrix,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeComparison {
    pub degree: i32,
    pub loday_homology: usize,
    pub ce_homology: usize,
    pub loday_cohomology: usize,
    pub ce_cohomology: usize,
    /// `HL_n -> H_n`
    pub homology_map: InducedMap,
    /// `H^n -> HL^n`
    pub cohomology_map: InducedMap,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComparisonReport {
    pub degrees: Vec<DegreeComparison>,
}

impl ComparisonReport {
    /// Named verdicts: isomorphisms in degrees 0 and 1 on both sides,
    /// `HL_2 -> H_2` surjective and `H^2 -> HL^2` injective.
    pub fn verdicts(&self) -> Vec<(String, bool)> {
        let mut out = vec![];
        for d in &self.degrees {
            match d.degree {
                0 | 1 => {
                    out.push((format!("homology_iso_{}", d.degree), d.homology_map.iso()));
                    out.push((
                        format!("cohomology_iso_{}", d.degree),
                        d.cohomology_map.iso(),
                    ));
                }
                2 => {
                    out.push(("homology_surjective_2".into(), d.homology_map.surjective()));
                    out.push((
                        "cohomology_injective_2".into(),
                        d.cohomology_map.injective(),
                    ));
                }
                _ => {}
            }
        }
        out
    }

    pub fn all_pass(&self) -> bool {
        self.verdicts().iter().all(|(_, ok)| *ok)
    }
}

/// Chain map `m ⊗ g^{⊗n} -> m ⊗ U(M(g))_n` sending a tensor to the normal
/// form of the product of its letters, with the induced maps on homology
/// and (through the pullback) on cohomology.
pub fn ce_projection(
    g: &LeibnizAlgebra,
    coeffs: &Coefficients,
    n_max: usize,
) -> Result<(Vec<Matrix>, ComparisonReport), HomologyError> {
    let top = n_max + 1;
    let e = envelope(g, coeffs, top)?;
    let lc = loday_chain(g, coeffs, n_max)?;
    let cc = ce_chain(g, coeffs, n_max)?;
    let lco = loday_cochain(g, coeffs, n_max)?;
    let cco = ce_cochain(g, coeffs, n_max)?;
    let (n, dm) = (g.dim(), coeffs.dim());
    let odd: Vec<usize> = e.u.letters_of_degree(1).collect();

    let mut maps = vec![];
    let mut pullbacks = vec![];
    for k in 0..=top {
        let mut f = Matrix::zeros(e.bases[k].len() * dm, n.pow(k as u32) * dm);
        let mut pb = Matrix::zeros(n.pow(k as u32) * dm, e.bases[k].len() * dm);
        for t in 0..n.pow(k as u32) {
            let word: Monomial = super::decode_tuple(t, n, k)
                .into_iter()
                .map(|i| odd[i])
                .collect();
            for (v, c) in e.u.normal_form(&word) {
                let (prefix, rest) = e.split(&v);
                let u = e.index[k][rest];
                let rf = e.right_fold(prefix, dm);
                let lf = e.left_fold(prefix, dm);
                for a in 0..dm {
                    for b in 0..dm {
                        if !rf.get(a, b).is_zero() {
                            f.add_to(u * dm + a, t * dm + b, &(&c * rf.get(a, b)));
                        }
                        if !lf.get(a, b).is_zero() {
                            pb.add_to(t * dm + a, u * dm + b, &(&c * lf.get(a, b)));
                        }
                    }
                }
            }
        }
        maps.push(f);
        pullbacks.push(pb);
    }

    for k in 1..=top {
        if maps[k - 1].mul(&lc.differential(k as i32)) != cc.differential(k as i32).mul(&maps[k]) {
            return Err(HomologyError::NotAChainMap { degree: k as i32 });
        }
    }
    for k in 0..top {
        if lco.differential(k as i32).mul(&pullbacks[k])
            != pullbacks[k + 1].mul(&cco.differential(k as i32))
        {
            return Err(HomologyError::NotAChainMap { degree: k as i32 });
        }
    }

    let (lb, cb, lcb, ccb) = (lc.betti(), cc.betti(), lco.betti(), cco.betti());
    let degrees = (0..=n_max)
        .into_par_iter()
        .map(|k| {
            let deg = k as i32;
            DegreeComparison {
                degree: deg,
                loday_homology: lb[k],
                ce_homology: cb[k],
                loday_cohomology: lcb[k],
                ce_cohomology: ccb[k],
                homology_map: induced_map(&maps[k], &lc, &cc, deg),
                cohomology_map: induced_map(&pullbacks[k], &cco, &lco, deg),
            }
        })
        .collect();
    Ok((maps, ComparisonReport { degrees }))
}
