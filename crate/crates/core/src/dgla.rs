//! Differential graded Lie algebras and DG modules stored degree by degree.
//!
//! Brackets live in one tensor per ordered degree pair `(p, q)`; a missing
//! pair means the bracket vanishes there. The differential has degree `-1`.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exactla::{add_scaled, is_zero_vec, rank, unit, Matrix, Scalar, Subspace, Tensor3};
use crate::leibcore::{
    kernel_ideal, lie_quotient, symmetrization, Convention, LeibnizAlgebra, LeibnizError,
    LieAlgebra, Representation, Rule, Violation,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DglaError {
    #[error("DG Lie algebra is not in the enveloping category: {0}")]
    NotInCategory(String),
    #[error("action is not well defined: {0}")]
    IllDefinedAction(String),
    #[error(transparent)]
    Leibniz(#[from] LeibnizError),
}

/// `(-1)^(p*q)`
pub(crate) fn koszul(p: i32, q: i32) -> Scalar {
    if (p * q).rem_euclid(2) == 0 {
        Scalar::one()
    } else {
        -Scalar::one()
    }
}

pub(crate) fn parity_sign(p: i32) -> Scalar {
    koszul(p, 1)
}

/// A graded vector space with bilinear degree-additive operations, shared by
/// algebras and modules.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
struct Graded {
    dims: BTreeMap<i32, usize>,
    differential: BTreeMap<i32, Matrix>,
}

impl Graded {
    fn dim(&self, p: i32) -> usize {
        self.dims.get(&p).copied().unwrap_or(0)
    }

    fn d(&self, p: i32, v: &[Scalar]) -> Vec<Scalar> {
        match self.differential.get(&p) {
            Some(m) => m.apply(v),
            None => vec![Scalar::zero(); self.dim(p - 1)],
        }
    }

    fn d_matrix(&self, p: i32) -> Matrix {
        self.differential
            .get(&p)
            .cloned()
            .unwrap_or_else(|| Matrix::zeros(self.dim(p - 1), self.dim(p)))
    }

    fn degrees(&self) -> Vec<i32> {
        self.dims
            .iter()
            .filter(|(_, &d)| d > 0)
            .map(|(&p, _)| p)
            .collect()
    }

    fn check_square(&self, out: &mut Vec<Violation>) {
        for p in self.degrees() {
            let dd = self.d_matrix(p - 1).mul(&self.d_matrix(p));
            for j in 0..dd.cols() {
                if !is_zero_vec(&dd.column(j)) {
                    out.push(Violation {
                        rule: Rule::DifferentialSquare,
                        degrees: vec![p],
                        indices: vec![j],
                    });
                }
            }
        }
    }
}

fn bilinear(
    ops: &BTreeMap<(i32, i32), Tensor3>,
    target_dim: usize,
    p: i32,
    u: &[Scalar],
    q: i32,
    v: &[Scalar],
) -> Vec<Scalar> {
    match ops.get(&(p, q)) {
        Some(t) => t.apply(u, v),
        None => vec![Scalar::zero(); target_dim],
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct DGLieAlgebra {
    graded: Graded,
    brackets: BTreeMap<(i32, i32), Tensor3>,
}

impl DGLieAlgebra {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_degree(mut self, p: i32, dim: usize) -> Self {
        self.graded.dims.insert(p, dim);
        self
    }

    /// Installs `d: L_p -> L_(p-1)`.
    pub fn with_differential(mut self, p: i32, m: Matrix) -> Self {
        assert_eq!(
            (m.rows(), m.cols()),
            (self.dim(p - 1), self.dim(p)),
            "differential shape in degree {p}"
        );
        self.graded.differential.insert(p, m);
        self
    }

    /// Installs `⟦-,-⟧: L_p x L_q -> L_(p+q)`.
    pub fn with_bracket(mut self, p: i32, q: i32, t: Tensor3) -> Self {
        assert_eq!(
            t.dims(),
            [self.dim(p), self.dim(q), self.dim(p + q)],
            "bracket shape in degrees ({p},{q})"
        );
        self.brackets.insert((p, q), t);
        self
    }

    /// Installs the `(p, q)` bracket and its mirror `(q, p)` forced by graded
    /// antisymmetry.
    pub fn with_bracket_pair(self, p: i32, q: i32, t: Tensor3) -> Self {
        let mirror = if koszul(p, q).is_one() {
            t.transpose12().neg()
        } else {
            t.transpose12()
        };
        let s = self.with_bracket(p, q, t);
        if p == q {
            s
        } else {
            s.with_bracket(q, p, mirror)
        }
    }

    pub fn dim(&self, p: i32) -> usize {
        self.graded.dim(p)
    }

    pub fn degrees(&self) -> Vec<i32> {
        self.graded.degrees()
    }

    pub fn dims(&self) -> &BTreeMap<i32, usize> {
        &self.graded.dims
    }

    pub fn differential(&self, p: i32) -> Matrix {
        self.graded.d_matrix(p)
    }

    pub fn d(&self, p: i32, v: &[Scalar]) -> Vec<Scalar> {
        self.graded.d(p, v)
    }

    pub fn bracket_tensor(&self, p: i32, q: i32) -> Option<&Tensor3> {
        self.brackets.get(&(p, q))
    }

    pub fn bracket(&self, p: i32, u: &[Scalar], q: i32, v: &[Scalar]) -> Vec<Scalar> {
        bilinear(&self.brackets, self.dim(p + q), p, u, q, v)
    }

    pub fn bracket_basis(&self, p: i32, i: usize, q: i32, j: usize) -> Vec<Scalar> {
        match self.brackets.get(&(p, q)) {
            Some(t) => t.vec(i, j).to_vec(),
            None => vec![Scalar::zero(); self.dim(p + q)],
        }
    }

    pub(crate) fn bracket_pairs(&self) -> impl Iterator<Item = (&(i32, i32), &Tensor3)> {
        self.brackets.iter()
    }

    /// Replaces one bracket tensor; intended for building negative controls.
    pub fn corrupt_bracket(&mut self, p: i32, q: i32, t: Tensor3) {
        self.brackets.insert((p, q), t);
    }

    pub fn corrupt_differential(&mut self, p: i32, m: Matrix) {
        self.graded.differential.insert(p, m);
    }

    /// Homology dimension in every stored degree.
    pub fn homology(&self) -> BTreeMap<i32, usize> {
        self.degrees()
            .into_iter()
            .map(|p| {
                let out = self.differential(p);
                let inc = self.differential(p + 1);
                (p, self.dim(p) - rank(&out) - rank(&inc))
            })
            .collect()
    }
}

/// Itemized violations of graded antisymmetry, graded Jacobi, the graded
/// Leibniz rule and `d∘d = 0`.
pub fn check_dgla(l: &DGLieAlgebra) -> Vec<Violation> {
    let mut out = vec![];
    let degs = l.degrees();
    for &p in &degs {
        for &q in &degs {
            let sign = -koszul(p, q);
            for i in 0..l.dim(p) {
                for j in 0..l.dim(q) {
                    let xy = l.bracket_basis(p, i, q, j);
                    let mut r = l.bracket_basis(q, j, p, i);
                    for x in r.iter_mut() {
                        *x *= &sign;
                    }
                    if xy != r {
                        out.push(Violation {
                            rule: Rule::GradedAntisymmetry,
                            degrees: vec![p, q],
                            indices: vec![i, j],
                        });
                    }
                }
            }
        }
    }
    for &p in &degs {
        for &q in &degs {
            for &s in &degs {
                for i in 0..l.dim(p) {
                    let x = unit(l.dim(p), i);
                    for j in 0..l.dim(q) {
                        let y = unit(l.dim(q), j);
                        for k in 0..l.dim(s) {
                            let z = unit(l.dim(s), k);
                            let mut acc = l.bracket(p, &x, q + s, &l.bracket_basis(q, j, s, k));
                            for v in acc.iter_mut() {
                                *v *= koszul(p, s);
                            }
                            add_scaled(
                                &mut acc,
                                &koszul(q, p),
                                &l.bracket(q, &y, s + p, &l.bracket_basis(s, k, p, i)),
                            );
                            add_scaled(
                                &mut acc,
                                &koszul(s, q),
                                &l.bracket(s, &z, p + q, &l.bracket_basis(p, i, q, j)),
                            );
                            if !is_zero_vec(&acc) {
                                out.push(Violation {
                                    rule: Rule::GradedJacobi,
                                    degrees: vec![p, q, s],
                                    indices: vec![i, j, k],
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    for &p in &degs {
        for &q in &degs {
            for i in 0..l.dim(p) {
                let x = unit(l.dim(p), i);
                let dx = l.d(p, &x);
                for j in 0..l.dim(q) {
                    let y = unit(l.dim(q), j);
                    let lhs = l.d(p + q, &l.bracket_basis(p, i, q, j));
                    let mut rhs = l.bracket(p - 1, &dx, q, &y);
                    add_scaled(
                        &mut rhs,
                        &parity_sign(p),
                        &l.bracket(p, &x, q - 1, &l.d(q, &y)),
                    );
                    if lhs != rhs {
                        out.push(Violation {
                            rule: Rule::GradedLeibnizRule,
                            degrees: vec![p, q],
                            indices: vec![i, j],
                        });
                    }
                }
            }
        }
    }
    l.graded.check_square(&mut out);
    out
}

/// Two copies of `h` in degrees 0 and 1 joined by the identity.
pub fn cone(h: &LieAlgebra) -> DGLieAlgebra {
    let n = h.dim();
    DGLieAlgebra::new()
        .with_degree(0, n)
        .with_degree(1, n)
        .with_differential(1, Matrix::identity(n))
        .with_bracket(0, 0, h.structure.clone())
        .with_bracket_pair(0, 1, h.structure.clone())
}

/// Whether `L` belongs to the category of enveloping DG Lie algebras.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CategoryReport {
    pub d1_surjective: bool,
    pub kernel_matches: bool,
}

impl CategoryReport {
    pub fn is_member(&self) -> bool {
        self.d1_surjective && self.kernel_matches
    }
}

/// The derived bracket `[x,y] := ⟦dx, y⟧` on `L_1`.
pub fn leib(l: &DGLieAlgebra) -> (LeibnizAlgebra, CategoryReport) {
    let n = l.dim(1);
    let d1 = l.differential(1);
    let mut t = Tensor3::zeros(n, n, n);
    for i in 0..n {
        let dx = d1.column(i);
        for j in 0..n {
            t.set_vec(i, j, &l.bracket(0, &dx, 1, &unit(n, j)));
        }
    }
    let g = LeibnizAlgebra::new(
        (0..n).map(|i| format!("e{i}")).collect(),
        t,
        Convention::Left,
    );

    let d1_surjective = rank(&d1) == l.dim(0);
    let ker = crate::exactla::kernel_basis(&d1);
    let d2 = l.differential(2);
    let mut images = vec![];
    for i in 0..n {
        for j in 0..n {
            images.push(d2.apply(&l.bracket_basis(1, i, 1, j)));
        }
    }
    let derived = Subspace::span(n, images);
    let kernel_matches = derived == ker;
    (
        g,
        CategoryReport {
            d1_surjective,
            kernel_matches,
        },
    )
}

/// The three-term algebra `g^ann -> g -> g_Lie`.
pub fn minimal_envelope(g: &LeibnizAlgebra) -> Result<DGLieAlgebra, DglaError> {
    let q = lie_quotient(g)?;
    let ann = &q.kernel;
    let (r0, n, r2) = (q.dim(), g.dim(), ann.dim());

    let mut act01 = Tensor3::zeros(r0, n, n);
    for a in 0..r0 {
        for j in 0..n {
            act01.set_vec(a, j, g.bracket_basis(q.lift[a], j));
        }
    }
    let mut act02 = Tensor3::zeros(r0, r2, r2);
    for a in 0..r0 {
        let x = unit(n, q.lift[a]);
        for k in 0..r2 {
            let v = g.bracket(&x, &ann.basis_vector(k));
            let c = ann.coordinates(&v).ok_or_else(|| {
                DglaError::IllDefinedAction(format!(
                    "action of {} leaves the kernel ideal",
                    q.quotient.basis_names[a]
                ))
            })?;
            act02.set_vec(a, k, &c);
        }
    }
    let mut sym11 = Tensor3::zeros(n, n, r2);
    for i in 0..n {
        for j in 0..n {
            let v: Vec<Scalar> = g
                .bracket_basis(i, j)
                .iter()
                .zip(g.bracket_basis(j, i))
                .map(|(a, b)| a + b)
                .collect();
            sym11.set_vec(
                i,
                j,
                &ann.coordinates(&v)
                    .expect("polarized square lies in the kernel ideal"),
            );
        }
    }

    let mut l = DGLieAlgebra::new()
        .with_degree(0, r0)
        .with_degree(1, n)
        .with_degree(2, r2)
        .with_differential(1, q.projection.clone())
        .with_differential(2, ann.basis().clone())
        .with_bracket(0, 0, q.quotient.structure.clone())
        .with_bracket_pair(0, 1, act01)
        .with_bracket_pair(0, 2, act02);
    if r2 > 0 {
        l = l.with_bracket(1, 1, sym11);
    }
    Ok(l)
}

/// Per-degree matrices of a map between graded objects.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DGLAMorphism {
    pub maps: BTreeMap<i32, Matrix>,
}

impl DGLAMorphism {
    pub fn map(&self, p: i32, v: &[Scalar], target_dim: usize) -> Vec<Scalar> {
        match self.maps.get(&p) {
            Some(m) => m.apply(v),
            None => vec![Scalar::zero(); target_dim],
        }
    }

    /// Failures of `φ d = d φ` and `φ⟦x,y⟧ = ⟦φx,φy⟧` for source degrees with
    /// total degree at most `max_degree`.
    pub fn check(&self, src: &DGLieAlgebra, dst: &DGLieAlgebra, max_degree: i32) -> Vec<Violation> {
        let mut out = vec![];
        let degs: Vec<i32> = src
            .degrees()
            .into_iter()
            .filter(|&p| p <= max_degree)
            .collect();
        for &p in &degs {
            for i in 0..src.dim(p) {
                let x = unit(src.dim(p), i);
                let lhs = self.map(p - 1, &src.d(p, &x), dst.dim(p - 1));
                let rhs = dst.d(p, &self.map(p, &x, dst.dim(p)));
                if lhs != rhs {
                    out.push(Violation {
                        rule: Rule::GradedLeibnizRule,
                        degrees: vec![p],
                        indices: vec![i],
                    });
                }
            }
        }
        for &p in &degs {
            for &q in &degs {
                if p + q > max_degree {
                    continue;
                }
                for i in 0..src.dim(p) {
                    let fx = self.map(p, &unit(src.dim(p), i), dst.dim(p));
                    for j in 0..src.dim(q) {
                        let fy = self.map(q, &unit(src.dim(q), j), dst.dim(q));
                        let lhs = self.map(p + q, &src.bracket_basis(p, i, q, j), dst.dim(p + q));
                        let rhs = dst.bracket(p, &fx, q, &fy);
                        if lhs != rhs {
                            out.push(Violation {
                                rule: Rule::GradedJacobi,
                                degrees: vec![p, q],
                                indices: vec![i, j],
                            });
                        }
                    }
                }
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.maps
            .values()
            .all(|m| m.rows() == m.cols() && *m == Matrix::identity(m.rows()))
    }
}

/// The counit `L -> M(Leib(L))`: identity on `L_1`, induced on `L_0`, `d_2`
/// in degree 2 and zero above. Returns the target envelope as well.
pub fn minimal_counit(l: &DGLieAlgebra) -> Result<(DGLAMorphism, DGLieAlgebra), DglaError> {
    let (g, report) = leib(l);
    if !report.is_member() {
        return Err(DglaError::NotInCategory(format!(
            "d1 surjective: {}, ker d1 = d2[L1,L1]: {}",
            report.d1_surjective, report.kernel_matches
        )));
    }
    let target = minimal_envelope(&g)?;
    let q = lie_quotient(&g)?;
    let n = l.dim(1);
    let d1 = l.differential(1);

    // degree 0: a = d1(x) goes to the class of x
    let mut phi0 = Matrix::zeros(q.dim(), l.dim(0));
    let sols = solve_columns(&d1, l.dim(0));
    for (c, x) in sols.iter().enumerate() {
        let v = q.projection.apply(x);
        for (r, s) in v.into_iter().enumerate() {
            phi0.set(r, c, s);
        }
    }
    let mut phi2 = Matrix::zeros(q.kernel.dim(), l.dim(2));
    let d2 = l.differential(2);
    for c in 0..l.dim(2) {
        let coords = q.kernel.coordinates(&d2.column(c)).ok_or_else(|| {
            DglaError::NotInCategory(format!(
                "d2 of basis vector {c} is outside the kernel ideal"
            ))
        })?;
        for (r, s) in coords.into_iter().enumerate() {
            phi2.set(r, c, s);
        }
    }
    let mut maps = BTreeMap::new();
    maps.insert(0, phi0);
    maps.insert(1, Matrix::identity(n));
    if l.dim(2) > 0 || target.dim(2) > 0 {
        maps.insert(2, phi2);
    }
    Ok((DGLAMorphism { maps }, target))
}

/// For each unit vector `e_c` of the codomain, some `x` with `m x = e_c`.
fn solve_columns(m: &Matrix, codomain: usize) -> Vec<Vec<Scalar>> {
    let n = m.cols();
    // row-reduce [m^T | I] to read off preimages
    let rows: Vec<Vec<Scalar>> = (0..n)
        .map(|j| {
            let mut v = m.column(j);
            v.extend(unit(n, j));
            v
        })
        .collect();
    let span = Subspace::span(codomain + n, rows);
    let mut out = vec![vec![Scalar::zero(); n]; codomain];
    for (r, &piv) in span.pivots().iter().enumerate() {
        if piv < codomain {
            out[piv] = (0..n)
                .map(|j| span.basis().get(codomain + j, r).clone())
                .collect();
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct DGModule {
    graded: Graded,
    action: BTreeMap<(i32, i32), Tensor3>,
}

impl DGModule {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_degree(mut self, p: i32, dim: usize) -> Self {
        self.graded.dims.insert(p, dim);
        self
    }

    pub fn with_differential(mut self, p: i32, m: Matrix) -> Self {
        assert_eq!(
            (m.rows(), m.cols()),
            (self.dim(p - 1), self.dim(p)),
            "module differential shape"
        );
        self.graded.differential.insert(p, m);
        self
    }

    /// `⟦-,-⟧: L_p x M_q -> M_(p+q)`; the first tensor index is in `L`.
    pub fn with_action(mut self, p: i32, q: i32, t: Tensor3) -> Self {
        assert_eq!(
            t.dims()[1..],
            [self.dim(q), self.dim(p + q)],
            "action shape"
        );
        self.action.insert((p, q), t);
        self
    }

    /// `L` acting on itself by its bracket.
    pub fn adjoint(l: &DGLieAlgebra) -> Self {
        let mut m = DGModule::new();
        for (&p, &d) in l.dims() {
            m = m.with_degree(p, d);
        }
        for p in l.degrees() {
            if l.dim(p - 1) > 0 {
                m = m.with_differential(p, l.differential(p));
            }
        }
        for (&(p, q), t) in l.bracket_pairs() {
            m.action.insert((p, q), t.clone());
        }
        m
    }

    pub fn dim(&self, p: i32) -> usize {
        self.graded.dim(p)
    }

    pub fn degrees(&self) -> Vec<i32> {
        self.graded.degrees()
    }

    pub fn differential(&self, p: i32) -> Matrix {
        self.graded.d_matrix(p)
    }

    fn act(&self, p: i32, x: &[Scalar], q: i32, m: &[Scalar]) -> Vec<Scalar> {
        bilinear(&self.action, self.dim(p + q), p, x, q, m)
    }

    pub fn corrupt_action(&mut self, p: i32, q: i32, t: Tensor3) {
        self.action.insert((p, q), t);
    }
}

pub fn check_dg_module(l: &DGLieAlgebra, m: &DGModule) -> Vec<Violation> {
    let mut out = vec![];
    let ldegs = l.degrees();
    let mdegs = m.degrees();
    for &p in &ldegs {
        for &q in &ldegs {
            for &r in &mdegs {
                for i in 0..l.dim(p) {
                    let x = unit(l.dim(p), i);
                    for j in 0..l.dim(q) {
                        let y = unit(l.dim(q), j);
                        let xy = l.bracket_basis(p, i, q, j);
                        for k in 0..m.dim(r) {
                            let f = unit(m.dim(r), k);
                            // ⟦⟦x,y⟧,m⟧ = ⟦x,⟦y,m⟧⟧ − (−1)^{|y||x|}⟦y,⟦x,m⟧⟧
                            let lhs = m.act(p + q, &xy, r, &f);
                            let mut rhs = m.act(p, &x, q + r, &m.act(q, &y, r, &f));
                            add_scaled(
                                &mut rhs,
                                &-koszul(q, p),
                                &m.act(q, &y, p + r, &m.act(p, &x, r, &f)),
                            );
                            if lhs != rhs {
                                out.push(Violation {
                                    rule: Rule::ModuleBracket,
                                    degrees: vec![p, q, r],
                                    indices: vec![i, j, k],
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    for &p in &ldegs {
        for &r in &mdegs {
            for i in 0..l.dim(p) {
                let x = unit(l.dim(p), i);
                let dx = l.d(p, &x);
                for k in 0..m.dim(r) {
                    let f = unit(m.dim(r), k);
                    // d⟦x,m⟧ = ⟦dx,m⟧ + (−1)^{|x|}⟦x,dm⟧
                    let lhs = m.graded.d(p + r, &m.act(p, &x, r, &f));
                    let mut rhs = m.act(p - 1, &dx, r, &f);
                    add_scaled(
                        &mut rhs,
                        &parity_sign(p),
                        &m.act(p, &x, r - 1, &m.graded.d(r, &f)),
                    );
                    if lhs != rhs {
                        out.push(Violation {
                            rule: Rule::ModuleLeibnizRule,
                            degrees: vec![p, r],
                            indices: vec![i, k],
                        });
                    }
                }
            }
        }
    }
    m.graded.check_square(&mut out);
    out
}

/// The three-term module `m^anti -> m -> m_symm` over the minimal envelope,
/// in degrees 1, 0, -1.
pub fn minimal_module(g: &LeibnizAlgebra, m: &Representation) -> Result<DGModule, DglaError> {
    let q = lie_quotient(g)?;
    let ann = kernel_ideal(g);
    let s = symmetrization(m);
    let (n, d, r0) = (g.dim(), m.dim(), q.dim());
    let (da, ds) = (s.anti.dim(), s.symm_dim);
    // section of m -> m_symm: complement unit vectors
    let section: Vec<Vec<Scalar>> = s
        .anti
        .complement_coordinates()
        .into_iter()
        .map(|c| unit(d, c))
        .collect();
    let anti_coords = |v: &[Scalar], what: &str| -> Result<Vec<Scalar>, DglaError> {
        s.anti
            .coordinates(v)
            .ok_or_else(|| DglaError::IllDefinedAction(format!("{what} leaves m^anti")))
    };

    // degree-0 actions
    let mut a00 = Tensor3::zeros(r0, d, d);
    let mut a01 = Tensor3::zeros(r0, da, da);
    let mut a0m = Tensor3::zeros(r0, ds, ds);
    for a in 0..r0 {
        let x = unit(n, q.lift[a]);
        for k in 0..d {
            a00.set_vec(a, k, &m.left(&x, &unit(d, k)));
        }
        for k in 0..da {
            a01.set_vec(
                a,
                k,
                &anti_coords(&m.left(&x, &s.anti.basis_vector(k)), "g_Lie action")?,
            );
        }
        for (k, t) in section.iter().enumerate() {
            a0m.set_vec(a, k, &s.projection.apply(&m.left(&x, t)));
        }
    }
    // well-definedness: the kernel ideal acts trivially on the left, and
    // m^anti is killed by the right action
    for v in 0..ann.dim() {
        let w = ann.basis_vector(v);
        for k in 0..d {
            if !is_zero_vec(&m.left(&w, &unit(d, k))) {
                return Err(DglaError::IllDefinedAction(
                    "kernel ideal acts nontrivially".into(),
                ));
            }
        }
    }
    for k in 0..da {
        let a = s.anti.basis_vector(k);
        for i in 0..n {
            if !is_zero_vec(&m.right(&a, &unit(n, i))) {
                return Err(DglaError::IllDefinedAction(
                    "right action does not vanish on m^anti".into(),
                ));
            }
        }
    }

    // x ⊗ dm -> -[m, x]
    let mut a1m = Tensor3::zeros(n, ds, d);
    // x ⊗ m -> [x,m] + [m,x]
    let mut a10 = Tensor3::zeros(n, d, da);
    for i in 0..n {
        let x = unit(n, i);
        for (k, t) in section.iter().enumerate() {
            let v: Vec<Scalar> = m.right(t, &x).into_iter().map(|c| -c).collect();
            a1m.set_vec(i, k, &v);
        }
        for k in 0..d {
            let f = unit(d, k);
            let mut v = m.left(&x, &f);
            add_scaled(&mut v, &Scalar::one(), &m.right(&f, &x));
            a10.set_vec(i, k, &anti_coords(&v, "symmetric bracket")?);
        }
    }
    // v ⊗ dm -> -[m, v] for v in g^ann
    let mut a2m = Tensor3::zeros(ann.dim(), ds, da);
    for v in 0..ann.dim() {
        let w = ann.basis_vector(v);
        for (k, t) in section.iter().enumerate() {
            let img: Vec<Scalar> = m.right(t, &w).into_iter().map(|c| -c).collect();
            a2m.set_vec(v, k, &anti_coords(&img, "kernel ideal action")?);
        }
    }

    Ok(DGModule::new()
        .with_degree(-1, ds)
        .with_degree(0, d)
        .with_degree(1, da)
        .with_differential(0, s.projection.clone())
        .with_differential(1, s.anti.basis().clone())
        .with_action(0, -1, a0m)
        .with_action(0, 0, a00)
        .with_action(0, 1, a01)
        .with_action(1, -1, a1m)
        .with_action(1, 0, a10)
        .with_action(2, -1, a2m))
}

/// Distinct degrees in which a graded object is nonzero.
pub fn support(dims: &BTreeMap<i32, usize>) -> BTreeSet<i32> {
    dims.iter()
        .filter(|(_, &d)| d > 0)
        .map(|(&p, _)| p)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::scalar;
    use crate::leibcore::{check_leibniz, LieModule};

    fn a2() -> LeibnizAlgebra {
        LeibnizAlgebra::from_brackets(&["x", "y"], Convention::Left, &[(0, 0, &[(1, scalar(1))])])
    }

    fn r2() -> LieAlgebra {
        LeibnizAlgebra::from_brackets(
            &["a", "b"],
            Convention::Left,
            &[(0, 1, &[(1, scalar(1))]), (1, 0, &[(1, scalar(-1))])],
        )
        .as_lie()
    }

    #[test]
    fn lie_algebra_in_degree_zero_is_valid() {
        let h = r2();
        let l = DGLieAlgebra::new()
            .with_degree(0, 2)
            .with_bracket(0, 0, h.structure.clone());
        assert!(check_dgla(&l).is_empty());
    }

    #[test]
    fn cone_examples() {
        let c = cone(&LieAlgebra::abelian(3));
        assert!(check_dgla(&c).is_empty());
        assert_eq!(c.differential(1), Matrix::identity(3));
        let c = cone(&r2());
        assert!(check_dgla(&c).is_empty());
        assert!(c.homology().values().all(|&h| h == 0));
    }

    #[test]
    fn corrupted_cone_is_flagged() {
        let mut c = cone(&r2());
        let mut t = c.bracket_tensor(0, 1).unwrap().clone();
        t.set(0, 0, 0, scalar(1));
        c.corrupt_bracket(0, 1, t);
        let v = check_dgla(&c);
        assert!(v.iter().any(|v| v.rule == Rule::GradedAntisymmetry));
    }

    #[test]
    fn leib_of_cone_is_the_algebra() {
        let (g, rep) = leib(&cone(&r2()));
        assert_eq!(g.structure, r2().structure);
        assert!(rep.is_member());
    }

    #[test]
    fn leib_of_envelope_is_the_algebra() {
        let m = minimal_envelope(&a2()).unwrap();
        assert!(check_dgla(&m).is_empty(), "{:?}", check_dgla(&m));
        let (g, rep) = leib(&m);
        assert_eq!(g.structure, a2().structure);
        assert!(rep.is_member());
    }

    #[test]
    fn non_member_when_d1_not_surjective() {
        let l = DGLieAlgebra::new()
            .with_degree(0, 2)
            .with_degree(1, 1)
            .with_differential(1, Matrix::from_i64(&[&[1], &[0]]));
        assert!(check_dgla(&l).is_empty());
        let (_, rep) = leib(&l);
        assert!(!rep.d1_surjective);
        assert!(matches!(
            minimal_counit(&l),
            Err(DglaError::NotInCategory(_))
        ));
    }

    #[test]
    fn envelope_of_a2() {
        let m = minimal_envelope(&a2()).unwrap();
        assert_eq!((m.dim(0), m.dim(1), m.dim(2)), (1, 2, 1));
        assert_eq!(m.bracket_basis(1, 0, 1, 0), vec![scalar(2)]);
        assert!(m.homology().values().all(|&h| h == 0));
    }

    #[test]
    fn envelope_of_lie_algebra_is_cone() {
        let h = r2();
        let m = minimal_envelope(&h.as_leibniz()).unwrap();
        assert_eq!(m.dim(2), 0);
        assert_eq!(m.differential(1), Matrix::identity(2));
        assert_eq!(m.bracket_tensor(0, 1), cone(&h).bracket_tensor(0, 1));
        assert_eq!(m.bracket_tensor(1, 0), cone(&h).bracket_tensor(1, 0));
    }

    #[test]
    fn counit_examples() {
        let m = minimal_envelope(&a2()).unwrap();
        let (phi, target) = minimal_counit(&m).unwrap();
        assert!(phi.is_identity());
        assert!(phi.check(&m, &target, 2).is_empty());

        let c = cone(&r2());
        let (phi, target) = minimal_counit(&c).unwrap();
        assert!(phi.is_identity());
        assert!(phi.check(&c, &target, 2).is_empty());
    }

    /// A2 with two degree-2 generators u, w, both mapping onto y.
    fn enlarged_a2() -> DGLieAlgebra {
        let mut act = Tensor3::zeros(1, 2, 2);
        act.set(0, 0, 1, scalar(1));
        let mut sq = Tensor3::zeros(2, 2, 2);
        sq.set(0, 0, 0, scalar(2));
        DGLieAlgebra::new()
            .with_degree(0, 1)
            .with_degree(1, 2)
            .with_degree(2, 2)
            .with_differential(1, Matrix::from_i64(&[&[1, 0]]))
            .with_differential(2, Matrix::from_i64(&[&[0, 0], &[1, 1]]))
            .with_bracket_pair(0, 1, act)
            .with_bracket(1, 1, sq)
    }

    #[test]
    fn counit_collapses_enlarged_degree_two() {
        let l = enlarged_a2();
        assert!(check_dgla(&l).is_empty(), "{:?}", check_dgla(&l));
        let (g, rep) = leib(&l);
        assert!(rep.is_member());
        assert!(check_leibniz(&g).is_empty());
        let (phi, target) = minimal_counit(&l).unwrap();
        assert_eq!(phi.maps[&2], Matrix::from_i64(&[&[1, 1]]));
        assert!(phi.check(&l, &target, 2).is_empty());
    }

    #[test]
    fn dg_module_examples() {
        let m = minimal_envelope(&a2()).unwrap();
        assert!(check_dg_module(&m, &DGModule::adjoint(&m)).is_empty());
        let zero = DGModule::new().with_degree(0, 2).with_degree(1, 1);
        assert!(check_dg_module(&m, &zero).is_empty());
    }

    #[test]
    fn minimal_module_examples() {
        let g = a2();
        let env = minimal_envelope(&g).unwrap();
        let t = minimal_module(&g, &Representation::trivial(&g, 2)).unwrap();
        assert_eq!((t.dim(-1), t.dim(0), t.dim(1)), (2, 2, 0));
        assert!(check_dg_module(&env, &t).is_empty());

        let adj = minimal_module(&g, &Representation::adjoint(&g)).unwrap();
        assert_eq!((adj.dim(-1), adj.dim(0), adj.dim(1)), (1, 2, 1));
        assert!(
            check_dg_module(&env, &adj).is_empty(),
            "{:?}",
            check_dg_module(&env, &adj)
        );

        let q = lie_quotient(&g).unwrap();
        let lift = Representation::lie_lift(
            &q,
            &LieModule::adjoint(&q.quotient).direct_sum(&q.g_as_module(&g)),
        );
        let mm = minimal_module(&g, &lift).unwrap();
        assert_eq!(mm.dim(1), 0);
        assert_eq!(mm.dim(-1), lift.dim());
        assert!(check_dg_module(&env, &mm).is_empty());
    }

    #[test]
    fn corrupted_module_is_flagged() {
        let g = a2();
        let env = minimal_envelope(&g).unwrap();
        let mut adj = minimal_module(&g, &Representation::adjoint(&g)).unwrap();
        let mut t = Tensor3::zeros(2, 2, 1);
        t.set(1, 1, 0, scalar(1));
        adj.corrupt_action(1, 0, t);
        assert!(!check_dg_module(&env, &adj).is_empty());
    }
}
