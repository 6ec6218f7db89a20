//! Chain complexes and their builders: Leibniz (Loday) complexes,
//! Chevalley-Eilenberg complexes through the PBW basis of the minimal
//! envelope, the comparison map between them, and the graded Lie subcomplex.

mod ce;
mod fg;
mod loday;
mod pbw;

use rayon::prelude::*;
use thiserror::Error;

use crate::dgla::DglaError;
use crate::exactla::{kernel_basis, rank, Matrix, Subspace};
use crate::freealg::FreeError;
use crate::leibcore::{
    check_leibniz, check_representation, lie_quotient, Convention, LeibnizAlgebra, LeibnizError,
    LieModule, QuotientData, Representation,
};

pub use ce::{
    ce_chain, ce_cochain, ce_projection, classical_ce, ComparisonReport, DegreeComparison,
    InducedMap,
};
pub use fg::{
    conjecture_check, fg_subcomplex, fg_subcomplex_free, ConjectureReport, WeightRow,
    CONJECTURE_BLOCK_BUDGET,
};
pub use loday::{
    loday_chain, loday_chain_with, loday_cochain, loday_cochain_with, ChainAction, CochainAction,
};
pub use pbw::{Monomial, PBWAlgebra, ReductionOrder, UElement};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomologyError {
    #[error("d∘d is nonzero at degree {degree}")]
    DifferentialSquareNonzero { degree: i32 },
    #[error("differential at degree {degree} has shape {rows}x{cols}, expected {expected_rows}x{expected_cols}")]
    Shape {
        degree: i32,
        rows: usize,
        cols: usize,
        expected_rows: usize,
        expected_cols: usize,
    },
    #[error("comparison map does not commute with the differentials at degree {degree}")]
    NotAChainMap { degree: i32 },
    #[error("differential at degree {degree} leaves the subcomplex")]
    NotInvariant { degree: i32 },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("unsupported coefficients: {0}")]
    UnsupportedCoefficients(String),
    #[error(transparent)]
    Leibniz(#[from] LeibnizError),
    #[error(transparent)]
    Dgla(#[from] DglaError),
    #[error(transparent)]
    Free(#[from] FreeError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variance {
    /// `d_n : C_n -> C_{n-1}`
    Chain,
    /// `d^n : C^n -> C^{n+1}`
    Cochain,
}

/// Coefficients of a complex. A Lie module is a module over the maximal Lie
/// quotient, in the basis chosen by [`lie_quotient`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Coefficients {
    Trivial,
    LieModule(LieModule),
    Representation(Representation),
}

impl Coefficients {
    pub fn dim(&self) -> usize {
        match self {
            Coefficients::Trivial => 1,
            Coefficients::LieModule(m) => m.dim(),
            Coefficients::Representation(m) => m.dim(),
        }
    }

    pub fn names(&self) -> Vec<String> {
        match self {
            Coefficients::Trivial => vec!["1".into()],
            Coefficients::LieModule(m) => m.basis_names.clone(),
            Coefficients::Representation(m) => m.basis_names.clone(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Coefficients::Trivial => "trivial",
            Coefficients::LieModule(_) => "lie_module",
            Coefficients::Representation(_) => "representation",
        }
    }
}

/// A finite complex `C_offset, ..., C_top` with every `d∘d = 0` checked on
/// construction. Betti numbers are exact up to `exact_top`; the last degree
/// is only there to supply the incoming differential.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    variance: Variance,
    offset: i32,
    dims: Vec<usize>,
    differentials: Vec<Matrix>,
    labels: Vec<Vec<String>>,
    exact_top: i32,
}

impl ChainComplex {
    /// `differentials[k]` leaves degree `offset + k`: for chains it maps into
    /// degree `offset + k - 1` (so `differentials[0]` has zero rows), for
    /// cochains into `offset + k + 1` (the last one has zero rows).
    pub fn new(
        variance: Variance,
        offset: i32,
        differentials: Vec<Matrix>,
        labels: Vec<Vec<String>>,
        exact_top: i32,
    ) -> Result<Self, HomologyError> {
        let dims: Vec<usize> = differentials.iter().map(Matrix::cols).collect();
        let len = dims.len();
        for (k, d) in differentials.iter().enumerate() {
            let degree = offset + k as i32;
            let expected_rows = match variance {
                Variance::Chain if k == 0 => 0,
                Variance::Chain => dims[k - 1],
                Variance::Cochain if k + 1 == len => 0,
                Variance::Cochain => dims[k + 1],
            };
            if d.rows() != expected_rows {
                return Err(HomologyError::Shape {
                    degree,
                    rows: d.rows(),
                    cols: d.cols(),
                    expected_rows,
                    expected_cols: dims[k],
                });
            }
        }
        if labels.len() != len || labels.iter().zip(&dims).any(|(l, d)| l.len() != *d) {
            return Err(HomologyError::InvalidInput(
                "labels do not match the component dimensions".into(),
            ));
        }
        // d_{n} d_{n+1} for chains, d^{n+1} d^{n} for cochains
        let bad = (1..len).into_par_iter().find_first(|&k| {
            let product = match variance {
                Variance::Chain => differentials[k - 1].mul(&differentials[k]),
                Variance::Cochain => differentials[k].mul(&differentials[k - 1]),
            };
            !product.is_zero()
        });
        if let Some(k) = bad {
            let degree = match variance {
                Variance::Chain => offset + k as i32,
                Variance::Cochain => offset + k as i32 - 1,
            };
            return Err(HomologyError::DifferentialSquareNonzero { degree });
        }
        let top = offset + len as i32 - 1;
        Ok(ChainComplex {
            variance,
            offset,
            dims,
            differentials,
            labels,
            exact_top: exact_top.min(top),
        })
    }

    pub fn variance(&self) -> Variance {
        self.variance
    }

    pub fn offset(&self) -> i32 {
        self.offset
    }

    /// Highest degree built.
    pub fn top(&self) -> i32 {
        self.offset + self.dims.len() as i32 - 1
    }

    /// Highest degree whose homology is determined by the stored data.
    pub fn exact_top(&self) -> i32 {
        self.exact_top
    }

    pub fn degrees(&self) -> std::ops::RangeInclusive<i32> {
        self.offset..=self.top()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, degree: i32) -> usize {
        self.index(degree).map_or(0, |k| self.dims[k])
    }

    pub fn labels(&self, degree: i32) -> &[String] {
        self.index(degree).map_or(&[], |k| &self.labels[k])
    }

    fn index(&self, degree: i32) -> Option<usize> {
        let k = degree - self.offset;
        (k >= 0 && (k as usize) < self.dims.len()).then_some(k as usize)
    }

    /// The differential leaving `degree`; outside the built range it is the
    /// zero map between the appropriate spaces.
    pub fn differential(&self, degree: i32) -> Matrix {
        match self.index(degree) {
            Some(k) => self.differentials[k].clone(),
            None => {
                let target = match self.variance {
                    Variance::Chain => degree - 1,
                    Variance::Cochain => degree + 1,
                };
                Matrix::zeros(self.dim(target), self.dim(degree))
            }
        }
    }

    /// The differential arriving at `degree`.
    pub fn incoming(&self, degree: i32) -> Matrix {
        match self.variance {
            Variance::Chain => self.differential(degree + 1),
            Variance::Cochain => self.differential(degree - 1),
        }
    }

    pub fn differentials(&self) -> &[Matrix] {
        &self.differentials
    }

    /// Homology dimensions for `offset..=exact_top`.
    pub fn betti(&self) -> Vec<usize> {
        let ranks: Vec<usize> = self.differentials.par_iter().map(rank).collect();
        (self.offset..=self.exact_top)
            .map(|n| {
                let k = (n - self.offset) as usize;
                let incoming = match self.variance {
                    Variance::Chain => ranks.get(k + 1).copied().unwrap_or(0),
                    Variance::Cochain => k.checked_sub(1).map_or(0, |j| ranks[j]),
                };
                self.dims[k] - ranks[k] - incoming
            })
            .collect()
    }

    /// `(degree, dimension)` pairs for the exact range.
    pub fn betti_table(&self) -> Vec<(i32, usize)> {
        (self.offset..).zip(self.betti()).collect()
    }

    pub fn cycles(&self, degree: i32) -> Subspace {
        kernel_basis(&self.differential(degree))
    }

    pub fn boundaries(&self, degree: i32) -> Subspace {
        Subspace::image(&self.incoming(degree))
    }

    pub fn negate(&self) -> ChainComplex {
        ChainComplex {
            differentials: self.differentials.iter().map(Matrix::neg).collect(),
            ..self.clone()
        }
    }
}

/// Validated inputs shared by the builders.
pub(crate) struct Prepared {
    pub g: LeibnizAlgebra,
    pub quotient: QuotientData,
}

pub(crate) fn prepare(
    g: &LeibnizAlgebra,
    coeffs: &Coefficients,
) -> Result<Prepared, HomologyError> {
    if g.convention != Convention::Left {
        return Err(HomologyError::Leibniz(LeibnizError::NotLeft));
    }
    let violations = check_leibniz(g);
    if let Some(v) = violations.first() {
        return Err(HomologyError::InvalidInput(format!(
            "not a Leibniz algebra: {v}"
        )));
    }
    let quotient = lie_quotient(g)?;
    match coeffs {
        Coefficients::Trivial => {}
        Coefficients::LieModule(m) => {
            if m.action.dims()[0] != quotient.dim() {
                return Err(HomologyError::InvalidInput(format!(
                    "module is over a {}-dimensional algebra but the Lie quotient has dimension {}",
                    m.action.dims()[0],
                    quotient.dim()
                )));
            }
            if let Some(v) = m.check(&quotient.quotient).first() {
                return Err(HomologyError::InvalidInput(format!(
                    "not a module over the Lie quotient: {v}"
                )));
            }
        }
        Coefficients::Representation(m) => {
            if m.left_action.dims() != [g.dim(), m.dim(), m.dim()]
                || m.right_action.dims() != [m.dim(), g.dim(), m.dim()]
            {
                return Err(HomologyError::InvalidInput(
                    "representation dimensions do not match the algebra".into(),
                ));
            }
            if let Some(v) = check_representation(g, m).first() {
                return Err(HomologyError::InvalidInput(format!(
                    "not a representation: {v}"
                )));
            }
        }
    }
    Ok(Prepared {
        g: g.clone(),
        quotient,
    })
}

/// Left action matrices of the basis of `g` on the coefficients, and the
/// matching right action matrices (`m -> [m, e_i]`).
pub(crate) fn action_matrices(p: &Prepared, coeffs: &Coefficients) -> (Vec<Matrix>, Vec<Matrix>) {
    let n = p.g.dim();
    let d = coeffs.dim();
    match coeffs {
        Coefficients::Trivial => (vec![Matrix::zeros(d, d); n], vec![Matrix::zeros(d, d); n]),
        Coefficients::LieModule(m) => {
            let left: Vec<Matrix> = (0..n)
                .map(|i| lie_action(m, &p.quotient.projection.column(i)))
                .collect();
            let right = left.iter().map(Matrix::neg).collect();
            (left, right)
        }
        Coefficients::Representation(m) => (
            (0..n).map(|i| m.left_matrix(i)).collect(),
            (0..n).map(|i| m.right_matrix(i)).collect(),
        ),
    }
}

/// Matrix of `m -> ξ.m` for `ξ` given in quotient coordinates.
pub(crate) fn lie_action(m: &LieModule, xi: &[crate::Scalar]) -> Matrix {
    let d = m.dim();
    let mut out = Matrix::zeros(d, d);
    for (a, c) in xi.iter().enumerate() {
        if num_traits::Zero::is_zero(c) {
            continue;
        }
        let la = m.action.left_matrix(a);
        for r in 0..d {
            for s in 0..d {
                out.add_to(r, s, &(c * la.get(r, s)));
            }
        }
    }
    out
}

/// Tuples over `base` letters of length `n`, first letter most significant.
pub(crate) fn decode_tuple(mut idx: usize, base: usize, n: usize) -> Vec<usize> {
    let mut t = vec![0; n];
    for slot in t.iter_mut().rev() {
        *slot = idx % base;
        idx /= base;
    }
    t
}

pub(crate) fn encode_tuple(t: &[usize], base: usize) -> usize {
    t.iter().fold(0, |acc, &x| acc * base + x)
}
