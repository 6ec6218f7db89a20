//! Finite-dimensional Leibniz algebras and their representations.
//!
//! Everything downstream works with left Leibniz algebras,
//! `[[x,y],z] = [x,[y,z]] - [y,[x,z]]`. Right-convention input is turned into
//! a left algebra with [`opposite`].

use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::exactla::{add_scaled, is_zero_vec, unit, Matrix, Scalar, Subspace, Tensor3};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Convention {
    Left,
    Right,
}

impl Convention {
    pub fn flip(self) -> Self {
        match self {
            Convention::Left => Convention::Right,
            Convention::Right => Convention::Left,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Convention::Left => "left",
            Convention::Right => "right",
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LeibnizError {
    #[error("bracket does not descend to the quotient by the kernel ideal: {0}")]
    IllDefinedQuotient(String),
    #[error("operation needs a left Leibniz algebra")]
    NotLeft,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
}

/// Which identity a basis tuple violates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rule {
    LeftLeibniz,
    RightLeibniz,
    Antisymmetry,
    Jacobi,
    /// `[[m,x],y] = [m,[x,y]] - [x,[m,y]]`
    RepRightRight,
    /// `[[x,m],y] = [x,[m,y]] - [m,[x,y]]`
    RepLeftRight,
    /// `[[x,y],m] = [x,[y,m]] - [y,[x,m]]`
    RepLeftLeft,
    GradedAntisymmetry,
    GradedJacobi,
    GradedLeibnizRule,
    DifferentialSquare,
    ModuleBracket,
    ModuleLeibnizRule,
    LieModule,
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::LeftLeibniz => "left Leibniz identity",
            Rule::RightLeibniz => "right Leibniz identity",
            Rule::Antisymmetry => "antisymmetry",
            Rule::Jacobi => "Jacobi identity",
            Rule::RepRightRight => "[[m,x],y] = [m,[x,y]] - [x,[m,y]]",
            Rule::RepLeftRight => "[[x,m],y] = [x,[m,y]] - [m,[x,y]]",
            Rule::RepLeftLeft => "[[x,y],m] = [x,[y,m]] - [y,[x,m]]",
            Rule::GradedAntisymmetry => "graded antisymmetry",
            Rule::GradedJacobi => "graded Jacobi identity",
            Rule::GradedLeibnizRule => "graded Leibniz rule",
            Rule::DifferentialSquare => "d o d = 0",
            Rule::ModuleBracket => "module bracket identity",
            Rule::ModuleLeibnizRule => "module Leibniz rule",
            Rule::LieModule => "Lie module identity",
        }
    }
}

/// One failing basis tuple. `degrees` is empty for ungraded checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub rule: Rule,
    pub degrees: Vec<i32>,
    pub indices: Vec<usize>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at {:?}", self.rule.name(), self.indices)?;
        if !self.degrees.is_empty() {
            write!(f, " in degrees {:?}", self.degrees)?;
        }
        Ok(())
    }
}

pub fn default_names(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeibnizAlgebra {
    pub basis_names: Vec<String>,
    /// `[e_i, e_j] = sum_k structure[i][j][k] e_k`
    pub structure: Tensor3,
    pub convention: Convention,
}

impl LeibnizAlgebra {
    pub fn new(basis_names: Vec<String>, structure: Tensor3, convention: Convention) -> Self {
        let n = basis_names.len();
        assert_eq!(structure.dims(), [n, n, n], "structure constants shape");
        LeibnizAlgebra {
            basis_names,
            structure,
            convention,
        }
    }

    pub fn abelian(dim: usize) -> Self {
        Self::new(
            default_names("e", dim),
            Tensor3::zeros(dim, dim, dim),
            Convention::Left,
        )
    }

    /// Builds from `(i, j, [(k, c)])` meaning `[e_i, e_j] += c e_k`.
    pub fn from_brackets(
        names: &[&str],
        convention: Convention,
        brackets: &[(usize, usize, &[(usize, Scalar)])],
    ) -> Self {
        let n = names.len();
        let mut t = Tensor3::zeros(n, n, n);
        for (i, j, terms) in brackets {
            for (k, c) in terms.iter() {
                let v = t.get(*i, *j, *k) + c;
                t.set(*i, *j, *k, v);
            }
        }
        Self::new(names.iter().map(|s| s.to_string()).collect(), t, convention)
    }

    pub fn dim(&self) -> usize {
        self.basis_names.len()
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &[Scalar] {
        self.structure.vec(i, j)
    }

    pub fn bracket(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        self.structure.apply(u, v)
    }

    /// Matrix of left multiplication `y -> [e_i, y]`.
    pub fn left_mult(&self, i: usize) -> Matrix {
        self.structure.left_matrix(i)
    }

    pub fn is_antisymmetric(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            (i..n).all(|j| {
                self.bracket_basis(i, j)
                    .iter()
                    .zip(self.bracket_basis(j, i))
                    .all(|(a, b)| (a + b).is_zero())
            })
        })
    }

    /// Reinterprets as a Lie algebra without checking anything.
    pub fn as_lie(&self) -> LieAlgebra {
        LieAlgebra {
            basis_names: self.basis_names.clone(),
            structure: self.structure.clone(),
        }
    }

    /// Applies the change of basis whose columns (in old coordinates) are the
    /// new basis vectors.
    pub fn change_basis(&self, p: &Matrix) -> LeibnizAlgebra {
        let n = self.dim();
        assert_eq!((p.rows(), p.cols()), (n, n));
        let inv = invert(p).expect("change of basis must be invertible");
        let cols = p.columns();
        let mut t = Tensor3::zeros(n, n, n);
        for i in 0..n {
            for j in 0..n {
                let b = self.bracket(&cols[i], &cols[j]);
                t.set_vec(i, j, &inv.apply(&b));
            }
        }
        LeibnizAlgebra {
            basis_names: default_names("e", n),
            structure: t,
            convention: self.convention,
        }
    }
}

/// Inverse of a square matrix, if it exists.
pub fn invert(p: &Matrix) -> Option<Matrix> {
    let n = p.rows();
    let cols: Vec<Vec<Scalar>> = (0..n)
        .map(|i| {
            let mut v = p.row(i).to_vec();
            v.extend(unit(n, i));
            v
        })
        .collect();
    // row-reduce [p | I]
    let span = Subspace::span(2 * n, cols);
    if span.dim() != n || span.pivots().iter().any(|&c| c >= n) {
        return None;
    }
    let mut inv = Matrix::zeros(n, n);
    for (r, &piv) in span.pivots().iter().enumerate() {
        for c in 0..n {
            inv.set(piv, c, span.basis().get(n + c, r).clone());
        }
    }
    Some(inv)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    pub basis_names: Vec<String>,
    pub structure: Tensor3,
}

impl LieAlgebra {
    pub fn abelian(dim: usize) -> Self {
        LieAlgebra {
            basis_names: default_names("e", dim),
            structure: Tensor3::zeros(dim, dim, dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis_names.len()
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &[Scalar] {
        self.structure.vec(i, j)
    }

    pub fn bracket(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        self.structure.apply(u, v)
    }

    pub fn as_leibniz(&self) -> LeibnizAlgebra {
        LeibnizAlgebra::new(
            self.basis_names.clone(),
            self.structure.clone(),
            Convention::Left,
        )
    }

    /// Antisymmetry and Jacobi on basis elements.
    pub fn check(&self) -> Vec<Violation> {
        let n = self.dim();
        let mut out = vec![];
        for i in 0..n {
            for j in 0..n {
                let s: Vec<Scalar> = self
                    .bracket_basis(i, j)
                    .iter()
                    .zip(self.bracket_basis(j, i))
                    .map(|(a, b)| a + b)
                    .collect();
                if !is_zero_vec(&s) {
                    out.push(Violation {
                        rule: Rule::Antisymmetry,
                        degrees: vec![],
                        indices: vec![i, j],
                    });
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let (ei, ej, ek) = (unit(n, i), unit(n, j), unit(n, k));
                    let mut acc = self.bracket(&ei, self.bracket_basis(j, k));
                    add_scaled(
                        &mut acc,
                        &Scalar::from_integer(1.into()),
                        &self.bracket(&ej, self.bracket_basis(k, i)),
                    );
                    add_scaled(
                        &mut acc,
                        &Scalar::from_integer(1.into()),
                        &self.bracket(&ek, self.bracket_basis(i, j)),
                    );
                    if !is_zero_vec(&acc) {
                        out.push(Violation {
                            rule: Rule::Jacobi,
                            degrees: vec![],
                            indices: vec![i, j, k],
                        });
                    }
                }
            }
        }
        out
    }
}

/// A module over a Lie algebra: `action[a][j][k]` is the coefficient of
/// `f_k` in `e_a . f_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieModule {
    pub basis_names: Vec<String>,
    pub action: Tensor3,
}

impl LieModule {
    pub fn trivial(lie_dim: usize, dim: usize) -> Self {
        LieModule {
            basis_names: default_names("f", dim),
            action: Tensor3::zeros(lie_dim, dim, dim),
        }
    }

    /// `h` acting on itself.
    pub fn adjoint(h: &LieAlgebra) -> Self {
        LieModule {
            basis_names: h.basis_names.clone(),
            action: h.structure.clone(),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis_names.len()
    }

    pub fn act(&self, a: usize, m: &[Scalar]) -> Vec<Scalar> {
        let la = self.action.dims()[0];
        self.action.apply(&unit(la, a), m)
    }

    pub fn act_vec(&self, x: &[Scalar], m: &[Scalar]) -> Vec<Scalar> {
        self.action.apply(x, m)
    }

    /// `[a,b].m = a.(b.m) - b.(a.m)` on basis elements.
    pub fn check(&self, h: &LieAlgebra) -> Vec<Violation> {
        let (n, d) = (h.dim(), self.dim());
        let mut out = vec![];
        if self.action.dims() != [n, d, d] {
            out.push(Violation {
                rule: Rule::LieModule,
                degrees: vec![],
                indices: vec![],
            });
            return out;
        }
        for a in 0..n {
            for b in 0..n {
                for j in 0..d {
                    let m = unit(d, j);
                    let lhs = self.act_vec(h.bracket_basis(a, b), &m);
                    let mut rhs = self.act(a, &self.act(b, &m));
                    add_scaled(
                        &mut rhs,
                        &-Scalar::from_integer(1.into()),
                        &self.act(b, &self.act(a, &m)),
                    );
                    if lhs != rhs {
                        out.push(Violation {
                            rule: Rule::LieModule,
                            degrees: vec![],
                            indices: vec![a, b, j],
                        });
                    }
                }
            }
        }
        out
    }

    pub fn direct_sum(&self, other: &LieModule) -> LieModule {
        let (n, d1, d2) = (self.action.dims()[0], self.dim(), other.dim());
        assert_eq!(n, other.action.dims()[0]);
        let mut t = Tensor3::zeros(n, d1 + d2, d1 + d2);
        for a in 0..n {
            for j in 0..d1 {
                for k in 0..d1 {
                    t.set(a, j, k, self.action.get(a, j, k).clone());
                }
            }
            for j in 0..d2 {
                for k in 0..d2 {
                    t.set(a, d1 + j, d1 + k, other.action.get(a, j, k).clone());
                }
            }
        }
        let mut names = self.basis_names.clone();
        names.extend(other.basis_names.iter().map(|s| format!("{s}'")));
        LieModule {
            basis_names: names,
            action: t,
        }
    }
}

/// A representation of a left Leibniz algebra: `left_action[i][j]` is
/// `[e_i, f_j]`, `right_action[j][i]` is `[f_j, e_i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    pub basis_names: Vec<String>,
    pub left_action: Tensor3,
    pub right_action: Tensor3,
}

impl Representation {
    pub fn trivial(g: &LeibnizAlgebra, dim: usize) -> Self {
        let n = g.dim();
        Representation {
            basis_names: default_names("f", dim),
            left_action: Tensor3::zeros(n, dim, dim),
            right_action: Tensor3::zeros(dim, n, dim),
        }
    }

    pub fn adjoint(g: &LeibnizAlgebra) -> Self {
        Representation {
            basis_names: g.basis_names.clone(),
            left_action: g.structure.clone(),
            right_action: g.structure.clone(),
        }
    }

    /// `[x,m] := x̄.m`, `[m,x] := -x̄.m` for a module over the Lie quotient.
    pub fn lie_lift(q: &QuotientData, m: &LieModule) -> Self {
        let n = q.projection.cols();
        let d = m.dim();
        let mut left = Tensor3::zeros(n, d, d);
        let mut right = Tensor3::zeros(d, n, d);
        for i in 0..n {
            let xbar = q.projection.column(i);
            for j in 0..d {
                let v = m.act_vec(&xbar, &unit(d, j));
                left.set_vec(i, j, &v);
                let neg: Vec<Scalar> = v.iter().map(|x| -x).collect();
                right.set_vec(j, i, &neg);
            }
        }
        Representation {
            basis_names: m.basis_names.clone(),
            left_action: left,
            right_action: right,
        }
    }

    /// Left action by the Lie quotient, zero right action.
    pub fn left_only(q: &QuotientData, m: &LieModule) -> Self {
        let mut r = Self::lie_lift(q, m);
        r.right_action = Tensor3::zeros(m.dim(), q.projection.cols(), m.dim());
        r
    }

    pub fn dim(&self) -> usize {
        self.basis_names.len()
    }

    pub fn left(&self, x: &[Scalar], m: &[Scalar]) -> Vec<Scalar> {
        self.left_action.apply(x, m)
    }

    pub fn right(&self, m: &[Scalar], x: &[Scalar]) -> Vec<Scalar> {
        self.right_action.apply(m, x)
    }

    /// Matrix of `m -> [e_i, m]`.
    pub fn left_matrix(&self, i: usize) -> Matrix {
        self.left_action.left_matrix(i)
    }

    /// Matrix of `m -> [m, e_i]`.
    pub fn right_matrix(&self, i: usize) -> Matrix {
        self.right_action.transpose12().left_matrix(i)
    }

    pub fn change_basis(&self, p: &Matrix) -> Representation {
        let d = self.dim();
        let inv = invert(p).expect("invertible");
        let cols = p.columns();
        let n = self.left_action.dims()[0];
        let mut left = Tensor3::zeros(n, d, d);
        let mut right = Tensor3::zeros(d, n, d);
        for i in 0..n {
            let x = unit(n, i);
            for j in 0..d {
                left.set_vec(i, j, &inv.apply(&self.left(&x, &cols[j])));
                right.set_vec(j, i, &inv.apply(&self.right(&cols[j], &x)));
            }
        }
        Representation {
            basis_names: default_names("f", d),
            left_action: left,
            right_action: right,
        }
    }
}

/// Every basis triple violating the algebra's own Leibniz identity.
pub fn check_leibniz(g: &LeibnizAlgebra) -> Vec<Violation> {
    let n = g.dim();
    let mut out = vec![];
    let one = Scalar::from_integer(1.into());
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (x, y, z) = (unit(n, i), unit(n, j), unit(n, k));
                let residual = match g.convention {
                    Convention::Left => {
                        // [[x,y],z] - [x,[y,z]] + [y,[x,z]]
                        let mut r = g.bracket(g.bracket_basis(i, j), &z);
                        add_scaled(&mut r, &-one.clone(), &g.bracket(&x, g.bracket_basis(j, k)));
                        add_scaled(&mut r, &one, &g.bracket(&y, g.bracket_basis(i, k)));
                        r
                    }
                    Convention::Right => {
                        // [x,[y,z]] - [[x,y],z] + [[x,z],y]
                        let mut r = g.bracket(&x, g.bracket_basis(j, k));
                        add_scaled(&mut r, &-one.clone(), &g.bracket(g.bracket_basis(i, j), &z));
                        add_scaled(&mut r, &one, &g.bracket(g.bracket_basis(i, k), &y));
                        r
                    }
                };
                if !is_zero_vec(&residual) {
                    let rule = match g.convention {
                        Convention::Left => Rule::LeftLeibniz,
                        Convention::Right => Rule::RightLeibniz,
                    };
                    out.push(Violation {
                        rule,
                        degrees: vec![],
                        indices: vec![i, j, k],
                    });
                }
            }
        }
    }
    out
}

pub fn opposite(g: &LeibnizAlgebra) -> LeibnizAlgebra {
    LeibnizAlgebra {
        basis_names: g.basis_names.clone(),
        structure: g.structure.transpose12(),
        convention: g.convention.flip(),
    }
}

/// The kernel ideal, spanned by the polarized squares `[e_i,e_j] + [e_j,e_i]`.
pub fn kernel_ideal(g: &LeibnizAlgebra) -> Subspace {
    let n = g.dim();
    let mut vecs = vec![];
    for i in 0..n {
        for j in i..n {
            let v: Vec<Scalar> = g
                .bracket_basis(i, j)
                .iter()
                .zip(g.bracket_basis(j, i))
                .map(|(a, b)| a + b)
                .collect();
            if !is_zero_vec(&v) {
                vecs.push(v);
            }
        }
    }
    Subspace::span(n, vecs)
}

/// The maximal Lie quotient together with its projection and its left action
/// on `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientData {
    pub quotient: LieAlgebra,
    /// `dim g_Lie x dim g`
    pub projection: Matrix,
    /// `lift[a]` is the basis index of `g` representing quotient basis vector `a`.
    pub lift: Vec<usize>,
    pub kernel: Subspace,
    /// `action_on_g[a][j]` is `ā . e_j = [e_lift(a), e_j]`.
    pub action_on_g: Tensor3,
}

impl QuotientData {
    /// The quotient acting on `g` as a Lie module.
    pub fn g_as_module(&self, g: &LeibnizAlgebra) -> LieModule {
        LieModule {
            basis_names: g.basis_names.clone(),
            action: self.action_on_g.clone(),
        }
    }

    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }
}

pub fn lie_quotient(g: &LeibnizAlgebra) -> Result<QuotientData, LeibnizError> {
    if g.convention != Convention::Left {
        return Err(LeibnizError::NotLeft);
    }
    let n = g.dim();
    let kernel = kernel_ideal(g);
    let projection = kernel.quotient_projection();
    let lift = kernel.complement_coordinates();
    let r = lift.len();

    for a in 0..kernel.dim() {
        let v = kernel.basis_vector(a);
        for j in 0..n {
            let e = unit(n, j);
            if !is_zero_vec(&projection.apply(&g.bracket(&v, &e))) {
                return Err(LeibnizError::IllDefinedQuotient(format!(
                    "[v{a}, {}] is not in the kernel ideal",
                    g.basis_names[j]
                )));
            }
            if !is_zero_vec(&projection.apply(&g.bracket(&e, &v))) {
                return Err(LeibnizError::IllDefinedQuotient(format!(
                    "[{}, v{a}] is not in the kernel ideal",
                    g.basis_names[j]
                )));
            }
        }
    }

    let mut structure = Tensor3::zeros(r, r, r);
    for a in 0..r {
        for b in 0..r {
            structure.set_vec(a, b, &projection.apply(g.bracket_basis(lift[a], lift[b])));
        }
    }
    let mut action = Tensor3::zeros(r, n, n);
    for a in 0..r {
        for j in 0..n {
            action.set_vec(a, j, g.bracket_basis(lift[a], j));
        }
    }
    let names = lift
        .iter()
        .map(|&i| format!("{}~", g.basis_names[i]))
        .collect();
    Ok(QuotientData {
        quotient: LieAlgebra {
            basis_names: names,
            structure,
        },
        projection,
        lift,
        kernel,
        action_on_g: action,
    })
}

pub fn check_representation(g: &LeibnizAlgebra, m: &Representation) -> Vec<Violation> {
    let (n, d) = (g.dim(), m.dim());
    let mut out = vec![];
    let one = Scalar::from_integer(1.into());
    for i in 0..n {
        for j in 0..n {
            let (x, y) = (unit(n, i), unit(n, j));
            let xy = g.bracket_basis(i, j);
            for k in 0..d {
                let f = unit(d, k);
                // [[m,x],y] - [m,[x,y]] + [x,[m,y]]
                let mut r1 = m.right(&m.right(&f, &x), &y);
                add_scaled(&mut r1, &-one.clone(), &m.right(&f, xy));
                add_scaled(&mut r1, &one, &m.left(&x, &m.right(&f, &y)));
                if !is_zero_vec(&r1) {
                    out.push(Violation {
                        rule: Rule::RepRightRight,
                        degrees: vec![],
                        indices: vec![k, i, j],
                    });
                }
                // [[x,m],y] - [x,[m,y]] + [m,[x,y]]
                let mut r2 = m.right(&m.left(&x, &f), &y);
                add_scaled(&mut r2, &-one.clone(), &m.left(&x, &m.right(&f, &y)));
                add_scaled(&mut r2, &one, &m.right(&f, xy));
                if !is_zero_vec(&r2) {
                    out.push(Violation {
                        rule: Rule::RepLeftRight,
                        degrees: vec![],
                        indices: vec![i, k, j],
                    });
                }
                // [[x,y],m] - [x,[y,m]] + [y,[x,m]]
                let mut r3 = m.left(xy, &f);
                add_scaled(&mut r3, &-one.clone(), &m.left(&x, &m.left(&y, &f)));
                add_scaled(&mut r3, &one, &m.left(&y, &m.left(&x, &f)));
                if !is_zero_vec(&r3) {
                    out.push(Violation {
                        rule: Rule::RepLeftLeft,
                        degrees: vec![],
                        indices: vec![i, j, k],
                    });
                }
            }
        }
    }
    out
}

/// `m^anti`, the dimension of `m_symm = m / m^anti`, and the quotient map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Symmetrization {
    pub anti: Subspace,
    pub symm_dim: usize,
    pub projection: Matrix,
}

pub fn symmetrization(m: &Representation) -> Symmetrization {
    let d = m.dim();
    let n = m.left_action.dims()[0];
    let mut vecs = vec![];
    for i in 0..n {
        let x = unit(n, i);
        for k in 0..d {
            let f = unit(d, k);
            let mut v = m.left(&x, &f);
            add_scaled(&mut v, &Scalar::from_integer(1.into()), &m.right(&f, &x));
            if !is_zero_vec(&v) {
                vecs.push(v);
            }
        }
    }
    let anti = Subspace::span(d, vecs);
    let projection = anti.quotient_projection();
    Symmetrization {
        symm_dim: projection.rows(),
        anti,
        projection,
    }
}

/// Swaps the two actions; the result is a representation of `opposite(g)`.
pub fn opposite_representation(m: &Representation) -> Representation {
    Representation {
        basis_names: m.basis_names.clone(),
        left_action: m.right_action.transpose12(),
        right_action: m.left_action.transpose12(),
    }
}
