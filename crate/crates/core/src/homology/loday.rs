//! Leibniz chain complex `m ⊗ g^{⊗n}` and cochain complex `Hom(g^{⊗n}, m)`.
//!
//! Chains: `d(m⊗x1..xn) = Σ_{i<j} (-1)^j m⊗x1..[xj,xi]..x̂j..xn
//! + Σ_j (-1)^{j+1} ρ_j(m, xj)⊗x1..x̂j..xn`.
//! Cochains: `(df)(x1..xn) = Σ_{i<j} (-1)^j f(x1..[xj,xi]..x̂j..xn)
//! + Σ_j (-1)^{j+1} α_j(xj, f(x1..x̂j..xn))`.
//!
//! Basis vectors are indexed tuple-major: `(tuple, k) -> tuple * dim m + k`.

use num_traits::{One, Zero};
use rayon::prelude::*;

use super::{
    action_matrices, decode_tuple, encode_tuple, prepare, ChainComplex, Coefficients,
    HomologyError, Variance,
};
use crate::exactla::{Matrix, Scalar};
use crate::leibcore::LeibnizAlgebra;

/// Action terms `ρ_j(m, x)` of the chain differential with representation
/// coefficients. All three agree on Lie-module and trivial coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ChainAction {
    /// `-[x, m]` in every slot
    Left,
    /// `[m, x]` in every slot
    Right,
    /// `[m, x1] + [x1, m]` in the first slot, `[m, x]` elsewhere
    Symmetrized,
}

/// Action terms `α_j(x, f)` of the cochain differential with representation
/// coefficients. All three agree on Lie-module and trivial coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CochainAction {
    /// `-[f, x1]` in the first slot, `[x, f]` elsewhere
    Corrected,
    /// `[x, f]` in every slot
    Uncorrected,
    /// `[x1, f] + [f, x1]` in the first slot, `[x, f]` elsewhere
    Symmetrized,
}

fn sign(j: usize) -> Scalar {
    if j % 2 == 0 {
        Scalar::one()
    } else {
        -Scalar::one()
    }
}

fn tuple_label(names: &[String], t: &[usize]) -> String {
    t.iter()
        .map(|&i| names[i].as_str())
        .collect::<Vec<_>>()
        .join("⊗")
}

pub fn loday_chain(
    g: &LeibnizAlgebra,
    coeffs: &Coefficients,
    n_max: usize,
) -> Result<ChainComplex, HomologyError> {
    loday_chain_with(g, coeffs, n_max, ChainAction::Left)
}

pub fn loday_cochain(
    g: &LeibnizAlgebra,
    coeffs: &Coefficients,
    n_max: usize,
) -> Result<ChainComplex, HomologyError> {
    loday_cochain_with(g, coeffs, n_max, CochainAction::Corrected)
}

pub fn loday_chain_with(
    g: &LeibnizAlgebra,
    coeffs: &Coefficients,
    n_max: usize,
    rule: ChainAction,
) -> Result<ChainComplex, HomologyError> {
    let p = prepare(g, coeffs)?;
    let (left, right) = action_matrices(&p, coeffs);
    let neg_left: Vec<Matrix> = left.iter().map(Matrix::neg).collect();
    let (first, rest): (Vec<Matrix>, Vec<Matrix>) = match rule {
        ChainAction::Left => (neg_left.clone(), neg_left),
        ChainAction::Right => (right.clone(), right),
        ChainAction::Symmetrized => (
            left.iter().zip(&right).map(|(l, r)| l.add(r)).collect(),
            right,
        ),
    };
    let (n, dm) = (g.dim(), coeffs.dim());
    let top = n_max + 1;
    let differentials: Vec<Matrix> = (0..=top)
        .into_par_iter()
        .map(|deg| {
            if deg == 0 {
                return Matrix::zeros(0, dm);
            }
            let mut d = Matrix::zeros(n.pow(deg as u32 - 1) * dm, n.pow(deg as u32) * dm);
            for col_t in 0..n.pow(deg as u32) {
                let t = decode_tuple(col_t, n, deg);
                for i in 0..deg {
                    for j in (i + 1)..deg {
                        // 1-indexed j + 1
                        let s = sign(j + 1);
                        for (l, c) in g.bracket_basis(t[j], t[i]).iter().enumerate() {
                            if c.is_zero() {
                                continue;
                            }
                            let mut u = t.clone();
                            u[i] = l;
                            u.remove(j);
                            let row_t = encode_tuple(&u, n);
                            let v = &s * c;
                            for k in 0..dm {
                                d.add_to(row_t * dm + k, col_t * dm + k, &v);
                            }
                        }
                    }
                }
                for j in 0..deg {
                    let a = if j == 0 { &first[t[0]] } else { &rest[t[j]] };
                    let s = sign(j);
                    let mut u = t.clone();
                    u.remove(j);
                    let row_t = encode_tuple(&u, n);
                    for k in 0..dm {
                        for r in 0..dm {
                            let c = a.get(r, k);
                            if !c.is_zero() {
                                d.add_to(row_t * dm + r, col_t * dm + k, &(&s * c));
                            }
                        }
                    }
                }
            }
            d
        })
        .collect();
    let labels = chain_labels(g, coeffs, top, |t, m| format!("{m}⊗{t}"));
    ChainComplex::new(Variance::Chain, 0, differentials, labels, n_max as i32)
}

pub fn loday_cochain_with(
    g: &LeibnizAlgebra,
    coeffs: &Coefficients,
    n_max: usize,
    rule: CochainAction,
) -> Result<ChainComplex, HomologyError> {
    let p = prepare(g, coeffs)?;
    let (left, right) = action_matrices(&p, coeffs);
    let first: Vec<Matrix> = match rule {
        CochainAction::Corrected => right.iter().map(Matrix::neg).collect(),
        CochainAction::Uncorrected => left.clone(),
        CochainAction::Symmetrized => left.iter().zip(&right).map(|(l, r)| l.add(r)).collect(),
    };
    let (n, dm) = (g.dim(), coeffs.dim());
    let top = n_max + 1;
    let differentials: Vec<Matrix> = (0..=top)
        .into_par_iter()
        .map(|deg| {
            if deg == top {
                return Matrix::zeros(0, n.pow(deg as u32) * dm);
            }
            let out = deg + 1;
            let mut d = Matrix::zeros(n.pow(out as u32) * dm, n.pow(deg as u32) * dm);
            for row_t in 0..n.pow(out as u32) {
                let t = decode_tuple(row_t, n, out);
                for i in 0..out {
                    for j in (i + 1)..out {
                        let s = sign(j + 1);
                        for (l, c) in g.bracket_basis(t[j], t[i]).iter().enumerate() {
                            if c.is_zero() {
                                continue;
                            }
                            let mut u = t.clone();
                            u[i] = l;
                            u.remove(j);
                            let col_t = encode_tuple(&u, n);
                            let v = &s * c;
                            for k in 0..dm {
                                d.add_to(row_t * dm + k, col_t * dm + k, &v);
                            }
                        }
                    }
                }
                for j in 0..out {
                    let a = if j == 0 { &first[t[0]] } else { &left[t[j]] };
                    let s = sign(j);
                    let mut u = t.clone();
                    u.remove(j);
                    let col_t = encode_tuple(&u, n);
                    for r in 0..dm {
                        for k in 0..dm {
                            let c = a.get(r, k);
                            if !c.is_zero() {
                                d.add_to(row_t * dm + r, col_t * dm + k, &(&s * c));
                            }
                        }
                    }
                }
            }
            d
        })
        .collect();
    let labels = chain_labels(g, coeffs, top, |t, m| format!("{t}→{m}"));
    ChainComplex::new(Variance::Cochain, 0, differentials, labels, n_max as i32)
}

fn chain_labels(
    g: &LeibnizAlgebra,
    coeffs: &Coefficients,
    top: usize,
    fmt: impl Fn(&str, &str) -> String,
) -> Vec<Vec<String>> {
    let names = coeffs.names();
    let n = g.dim();
    (0..=top)
        .map(|deg| {
            let mut out = Vec::with_capacity(n.pow(deg as u32) * names.len());
            for t in 0..n.pow(deg as u32) {
                let tl = tuple_label(&g.basis_names, &decode_tuple(t, n, deg));
                let tl = if tl.is_empty() { "1".to_string() } else { tl };
                for m in &names {
                    out.push(fmt(&tl, m));
                }
            }
            out
        })
        .collect()
}
