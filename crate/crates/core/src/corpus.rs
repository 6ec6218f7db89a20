//! Named example algebras and random generators of valid algebras and
//! representations, used by tests, benchmarks and the acceptance suite.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::exactla::{ratio, scalar, Matrix, Scalar, Tensor3};
use crate::leibcore::{
    check_leibniz, check_representation, invert, lie_quotient, Convention, LeibnizAlgebra,
    LieAlgebra, LieModule, QuotientData, Representation,
};

/// `[x,x] = y`, every other bracket zero.
pub fn a2() -> LeibnizAlgebra {
    LeibnizAlgebra::from_brackets(&["x", "y"], Convention::Left, &[(0, 0, &[(1, scalar(1))])])
}

/// The nonabelian two-dimensional Lie algebra `[a,b] = b`.
pub fn r2() -> LeibnizAlgebra {
    LeibnizAlgebra::from_brackets(
        &["a", "b"],
        Convention::Left,
        &[(0, 1, &[(1, scalar(1))]), (1, 0, &[(1, scalar(-1))])],
    )
}

pub fn r2_lie() -> LieAlgebra {
    r2().as_lie()
}

/// `h ⊕ V` with `h = span{e}` acting on `V` by `a`, and `[V, g] = 0`.
pub fn hemisemidirect(a: &Matrix) -> LeibnizAlgebra {
    let k = a.rows();
    let n = k + 1;
    let mut t = Tensor3::zeros(n, n, n);
    for j in 0..k {
        for i in 0..k {
            t.set(0, j + 1, i + 1, a.get(i, j).clone());
        }
    }
    let names: Vec<String> = std::iter::once("e".to_string())
        .chain((1..=k).map(|i| format!("v{i}")))
        .collect();
    LeibnizAlgebra::new(names, t, Convention::Left)
}

/// `r2 ⊕ k` where `a` acts on the extra line by `lambda`.
pub fn r2_hemisemidirect(lambda: Scalar) -> LeibnizAlgebra {
    LeibnizAlgebra::from_brackets(
        &["a", "b", "v"],
        Convention::Left,
        &[
            (0, 1, &[(1, scalar(1))]),
            (1, 0, &[(1, scalar(-1))]),
            (0, 2, &[(2, lambda)]),
        ],
    )
}

/// `k ⋉_a k^2` as a Lie algebra.
pub fn semidirect_lie(a: &Matrix) -> LeibnizAlgebra {
    let mut t = Tensor3::zeros(3, 3, 3);
    for j in 0..2 {
        for i in 0..2 {
            t.set(0, j + 1, i + 1, a.get(i, j).clone());
            t.set(j + 1, 0, i + 1, -a.get(i, j));
        }
    }
    LeibnizAlgebra::new(
        vec!["e".into(), "u".into(), "v".into()],
        t,
        Convention::Left,
    )
}

/// `h ⊕ V` with `h` abelian of dimension `a`, `[x,y] = ω(x,y) ∈ V` on `h` and
/// zero elsewhere.
pub fn nilpotent(a: usize, b: usize, omega: &Tensor3) -> LeibnizAlgebra {
    let n = a + b;
    let mut t = Tensor3::zeros(n, n, n);
    for i in 0..a {
        for j in 0..a {
            for k in 0..b {
                t.set(i, j, a + k, omega.get(i, j, k).clone());
            }
        }
    }
    LeibnizAlgebra::new(crate::leibcore::default_names("e", n), t, Convention::Left)
}

/// The fixed corpus: abelian algebras of dimension one to three, A2, r2 and
/// one member of each structured family.
pub fn curated() -> Vec<(String, LeibnizAlgebra)> {
    let mut out: Vec<(String, LeibnizAlgebra)> = (1..=3)
        .map(|d| (format!("abelian{d}"), LeibnizAlgebra::abelian(d)))
        .collect();
    out.push(("A2".into(), a2()));
    out.push(("r2".into(), r2()));
    out.push((
        "hemisemidirect".into(),
        hemisemidirect(&Matrix::from_i64(&[&[1, 1], &[0, 2]])),
    ));
    out.push(("r2_line".into(), r2_hemisemidirect(scalar(2))));
    let mut omega = Tensor3::zeros(2, 2, 1);
    omega.set(0, 0, 0, scalar(1));
    omega.set(0, 1, 0, scalar(1));
    omega.set(1, 1, 0, scalar(-1));
    out.push(("nilpotent3".into(), nilpotent(2, 1, &omega)));
    out.push((
        "semidirect".into(),
        semidirect_lie(&Matrix::from_i64(&[&[1, 0], &[0, -1]])),
    ));
    out
}

fn small<R: Rng>(rng: &mut R) -> Scalar {
    match rng.gen_range(0..10) {
        0 => ratio(rng.gen_range(-3..=3), 2),
        1..=3 => scalar(0),
        _ => scalar(rng.gen_range(-2..=2)),
    }
}

fn random_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize) -> Matrix {
    Matrix::from_rows(
        (0..rows)
            .map(|_| (0..cols).map(|_| small(rng)).collect())
            .collect(),
    )
}

pub fn random_invertible<R: Rng>(rng: &mut R, n: usize) -> Matrix {
    loop {
        let m = Matrix::from_rows(
            (0..n)
                .map(|_| (0..n).map(|_| scalar(rng.gen_range(-2..=2))).collect())
                .collect(),
        );
        if invert(&m).is_some() {
            return m;
        }
    }
}

/// A random valid left Leibniz algebra of dimension `1..=max_dim` (at most 3),
/// drawn from the structured families and then put in a random basis.
pub fn random_algebra<R: Rng>(rng: &mut R, max_dim: usize) -> LeibnizAlgebra {
    assert!((1..=3).contains(&max_dim));
    let n = rng.gen_range(1..=max_dim);
    let g = match (n, rng.gen_range(0..4)) {
        (1, _) => LeibnizAlgebra::abelian(1),
        (2, 0) => r2(),
        (2, 1) => hemisemidirect(&random_matrix(rng, 1, 1)),
        (2, _) => {
            let mut omega = Tensor3::zeros(1, 1, 1);
            omega.set(0, 0, 0, small(rng));
            nilpotent(1, 1, &omega)
        }
        (_, 0) => hemisemidirect(&random_matrix(rng, 2, 2)),
        (_, 1) => r2_hemisemidirect(small(rng)),
        (_, 2) => semidirect_lie(&random_matrix(rng, 2, 2)),
        (_, _) => {
            let (a, b) = *[(2, 1), (1, 2)].choose(rng).expect("nonempty");
            let mut omega = Tensor3::zeros(a, a, b);
            for i in 0..a {
                for j in 0..a {
                    for k in 0..b {
                        omega.set(i, j, k, small(rng));
                    }
                }
            }
            nilpotent(a, b, &omega)
        }
    };
    let g = g.change_basis(&random_invertible(rng, g.dim()));
    debug_assert!(check_leibniz(&g).is_empty());
    g
}

/// A random module over the Lie quotient, in the quotient's basis.
pub fn random_lie_module<R: Rng>(rng: &mut R, g: &LeibnizAlgebra, q: &QuotientData) -> LieModule {
    let pick = |rng: &mut R| -> LieModule {
        match rng.gen_range(0..3) {
            0 => LieModule::trivial(q.dim(), rng.gen_range(1..=2)),
            1 => q.g_as_module(g),
            _ => LieModule::adjoint(&q.quotient),
        }
    };
    let mut m = pick(rng);
    if m.dim() == 0 || (m.dim() < 3 && rng.gen_bool(0.25)) {
        m = m.direct_sum(&LieModule::trivial(q.dim(), 1));
    }
    m
}

/// A random representation: trivial, adjoint, the lift of a Lie-quotient
/// module, or a module acting from the left only, in a random basis.
pub fn random_representation<R: Rng>(rng: &mut R, g: &LeibnizAlgebra) -> Representation {
    let q = lie_quotient(g).expect("valid left Leibniz algebra");
    let m = match rng.gen_range(0..4) {
        0 => Representation::trivial(g, rng.gen_range(1..=2)),
        1 => Representation::adjoint(g),
        2 => Representation::lie_lift(&q, &random_lie_module(rng, g, &q)),
        _ => Representation::left_only(&q, &random_lie_module(rng, g, &q)),
    };
    let m = m.change_basis(&random_invertible(rng, m.dim()));
    debug_assert!(check_representation(g, &m).is_empty());
    m
}
