//! Acceptance suite: one line per criterion. Criteria listed in
//! `UNATTAINABLE` are expected to fail; the run fails if any other criterion
//! fails or if one of those starts passing.

use std::path::PathBuf;
use std::process::{Command, ExitCode, Output};
use std::time::Instant;

use leibniz_cli::formats::parse_algebra;
use leibniz_core::corpus::{a2, curated, r2, random_algebra, random_representation};
use leibniz_core::dgla::{
    check_dg_module, check_dgla, cone, leib, minimal_envelope, minimal_module, DGLieAlgebra,
    DGModule,
};
use leibniz_core::exactla::scalar;
use leibniz_core::freealg::{free_graded_lie_component, witt_dim};
use leibniz_core::homology::{
    ce_chain, ce_cochain, ce_projection, classical_ce, conjecture_check, fg_subcomplex,
    loday_chain, loday_cochain, loday_cochain_with, CochainAction, Coefficients, HomologyError,
    Variance,
};
use leibniz_core::leibcore::{check_leibniz, check_representation, lie_quotient};
use leibniz_core::{Convention, LeibnizAlgebra, Matrix, Representation, Tensor3};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

const UNATTAINABLE: &[usize] = &[5];

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lie_members() -> Vec<(String, LeibnizAlgebra)> {
    curated()
        .into_iter()
        .filter(|(_, g)| g.is_antisymmetric())
        .collect()
}

fn random_of_dim(seed: u64, dim: usize, count: usize) -> Vec<LeibnizAlgebra> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = vec![];
    while out.len() < count {
        let g = random_algebra(&mut rng, 3);
        if g.dim() == dim {
            out.push(g);
        }
    }
    out
}

fn criterion_1() -> Outcome {
    let mut checked = 0;
    for (name, g) in curated() {
        ensure(check_leibniz(&g).is_empty(), || {
            format!("{name} flagged as non-Leibniz")
        })?;
        for m in [Representation::trivial(&g, 2), Representation::adjoint(&g)] {
            ensure(check_representation(&g, &m).is_empty(), || {
                format!("{name}: valid representation flagged")
            })?;
        }
        let env = minimal_envelope(&g).map_err(|e| format!("{name}: {e}"))?;
        ensure(check_dgla(&env).is_empty(), || {
            format!("{name}: minimal envelope flagged")
        })?;
        ensure(
            check_dg_module(&env, &DGModule::adjoint(&env)).is_empty(),
            || format!("{name}: adjoint module flagged"),
        )?;
        let mm =
            minimal_module(&g, &Representation::adjoint(&g)).map_err(|e| format!("{name}: {e}"))?;
        ensure(check_dg_module(&env, &mm).is_empty(), || {
            format!("{name}: minimal module flagged")
        })?;
        if g.is_antisymmetric() {
            ensure(check_dgla(&cone(&g.as_lie())).is_empty(), || {
                format!("{name}: cone flagged")
            })?;
        }
        checked += 1;
    }

    let mut mutations: Vec<(&str, bool)> = vec![];
    let one = LeibnizAlgebra::from_brackets(&["x"], Convention::Left, &[(0, 0, &[(0, scalar(1))])]);
    mutations.push(("[x,x] = x", !check_leibniz(&one).is_empty()));
    let mut bad_r2 = r2();
    bad_r2.structure.set(1, 0, 1, scalar(1));
    mutations.push(("r2 with [b,a] = b", !check_leibniz(&bad_r2).is_empty()));
    let mut bad_a2 = a2();
    bad_a2.structure.set(1, 0, 0, scalar(1));
    mutations.push(("A2 with [y,x] = x", !check_leibniz(&bad_a2).is_empty()));
    let mut bad_semi = curated()
        .into_iter()
        .find(|(n, _)| n == "semidirect")
        .expect("semidirect")
        .1;
    bad_semi.structure.set(1, 2, 0, scalar(1));
    mutations.push((
        "semidirect with [u,v] = e",
        !check_leibniz(&bad_semi).is_empty(),
    ));

    let g = a2();
    let mut rep = Representation::adjoint(&g);
    rep.left_action.set(0, 1, 0, scalar(1));
    mutations.push((
        "A2 adjoint with [x,y] = x on the left",
        !check_representation(&g, &rep).is_empty(),
    ));
    let mut rep = Representation::trivial(&r2(), 1);
    rep.right_action.set(0, 0, 0, scalar(1));
    rep.left_action.set(1, 0, 0, scalar(1));
    mutations.push((
        "r2 trivial with [f,a] = f, [b,f] = f",
        !check_representation(&r2(), &rep).is_empty(),
    ));
    let mut rep = Representation::adjoint(&r2());
    rep.right_action.set(1, 0, 1, scalar(2));
    mutations.push((
        "r2 adjoint with [b,a] doubled on the right",
        !check_representation(&r2(), &rep).is_empty(),
    ));

    let h = r2().as_lie();
    let mut c = cone(&h);
    c.corrupt_differential(1, Matrix::from_i64(&[&[2, 0], &[0, 1]]));
    mutations.push(("cone(r2) with d = diag(2,1)", !check_dgla(&c).is_empty()));
    let mut c = cone(&h);
    let mut t = Tensor3::zeros(2, 2, 2);
    t.set(0, 1, 1, scalar(1));
    c.corrupt_bracket(0, 1, t);
    mutations.push(("cone(r2) with one-sided ⟦a,b'⟧", !check_dgla(&c).is_empty()));
    let mut env = minimal_envelope(&a2()).expect("A2 envelope");
    let mut t = Tensor3::zeros(2, 2, 1);
    t.set(0, 0, 0, scalar(3));
    env.corrupt_bracket(1, 1, t);
    mutations.push(("M(A2) with ⟦x,x⟧ = 3ŷ", !check_dgla(&env).is_empty()));
    let mut env = minimal_envelope(&a2()).expect("A2 envelope");
    env.corrupt_differential(2, Matrix::from_i64(&[&[1], &[1]]));
    mutations.push(("M(A2) with d(ŷ) = x + y", !check_dgla(&env).is_empty()));
    let env = minimal_envelope(&r2()).expect("r2 envelope");
    let mut adj = DGModule::adjoint(&env);
    let mut t = Tensor3::zeros(2, 2, 2);
    t.set(0, 0, 0, scalar(1));
    adj.corrupt_action(0, 1, t);
    mutations.push((
        "adjoint module of M(r2) with a·a' = a'",
        !check_dg_module(&env, &adj).is_empty(),
    ));
    let mut adj = DGModule::adjoint(&env);
    adj.corrupt_action(1, 0, Tensor3::zeros(2, 2, 2));
    mutations.push((
        "adjoint module of M(r2) with zero odd action",
        !check_dg_module(&env, &adj).is_empty(),
    ));

    let missed: Vec<&str> = mutations
        .iter()
        .filter(|(_, hit)| !hit)
        .map(|(n, _)| *n)
        .collect();
    ensure(missed.is_empty(), || {
        format!("undetected mutations: {missed:?}")
    })?;
    Ok(format!(
        "{checked} corpus algebras valid, {}/{} mutations detected",
        mutations.len(),
        mutations.len()
    ))
}

fn criterion_2() -> Outcome {
    let build_all = |g: &LeibnizAlgebra, m: &Representation, n: usize| -> Result<usize, String> {
        let q = lie_quotient(g).map_err(|e| e.to_string())?;
        let lie = Coefficients::LieModule(q.g_as_module(g));
        let rep = Coefficients::Representation(m.clone());
        let mut built = 0;
        for coeffs in [&Coefficients::Trivial, &lie, &rep] {
            loday_chain(g, coeffs, n)
                .map_err(|e| format!("loday_chain ({}): {e}", coeffs.kind()))?;
            loday_cochain(g, coeffs, n)
                .map_err(|e| format!("loday_cochain ({}): {e}", coeffs.kind()))?;
            built += 2;
        }
        for coeffs in [&Coefficients::Trivial, &lie] {
            ce_chain(g, coeffs, n).map_err(|e| format!("ce_chain: {e}"))?;
            ce_cochain(g, coeffs, n).map_err(|e| format!("ce_cochain: {e}"))?;
            classical_ce(&q.quotient, coeffs, n, Variance::Chain)
                .map_err(|e| format!("classical_ce: {e}"))?;
            classical_ce(&q.quotient, coeffs, n, Variance::Cochain)
                .map_err(|e| format!("classical_ce: {e}"))?;
            built += 4;
        }
        fg_subcomplex(g, n).map_err(|e| format!("fg_subcomplex: {e}"))?;
        Ok(built + 1)
    };
    let mut complexes = 0;
    for (name, g) in curated() {
        let n = if g.dim() <= 2 { 4 } else { 3 };
        complexes +=
            build_all(&g, &Representation::adjoint(&g), n).map_err(|e| format!("{name}: {e}"))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let cases = 50;
    for i in 0..cases {
        let g = random_algebra(&mut rng, 3);
        let m = random_representation(&mut rng, &g);
        let n = 1 + i % 4;
        let n = if g.dim() == 3 && m.dim() > 2 {
            n.min(3)
        } else {
            n
        };
        complexes +=
            build_all(&g, &m, n).map_err(|e| format!("random case {i} (dim {}): {e}", g.dim()))?;
    }
    Ok(format!(
        "{complexes} complexes passed d∘d = 0 on the corpus and {cases} random cases"
    ))
}

fn criterion_3() -> Outcome {
    let mut algebras = vec![("A2".to_string(), a2()), ("r2".to_string(), r2())];
    for (i, g) in random_of_dim(33, 3, 3).into_iter().enumerate() {
        algebras.push((format!("random{i}"), g));
    }
    for (name, g) in &algebras {
        let q = lie_quotient(g).map_err(|e| e.to_string())?;
        for coeffs in [
            Coefficients::Trivial,
            Coefficients::LieModule(q.g_as_module(g)),
        ] {
            let ce = ce_chain(g, &coeffs, 3).map_err(|e| e.to_string())?.betti();
            let ce_co = ce_cochain(g, &coeffs, 3)
                .map_err(|e| e.to_string())?
                .betti();
            let cl = classical_ce(&q.quotient, &coeffs, 3, Variance::Chain)
                .map_err(|e| e.to_string())?
                .betti();
            let cl_co = classical_ce(&q.quotient, &coeffs, 3, Variance::Cochain)
                .map_err(|e| e.to_string())?
                .betti();
            ensure(ce[..4] == cl[..4] && ce_co[..4] == cl_co[..4], || {
                format!(
                    "{name} ({}): CE {ce:?}/{ce_co:?} vs classical {cl:?}/{cl_co:?}",
                    coeffs.kind()
                )
            })?;
        }
    }
    let anchor = ce_chain(&a2(), &Coefficients::Trivial, 2)
        .map_err(|e| e.to_string())?
        .betti();
    ensure(anchor[..3] == [1, 1, 0], || {
        format!("A2 trivial CE homology {anchor:?}")
    })?;
    Ok(format!(
        "{} algebras, trivial and Lie-module coefficients, degrees 0..3; A2 → 1, 1, 0",
        algebras.len()
    ))
}

/// Rank over the rationals of a small integer matrix, by fraction-free
/// elimination on `i128`.
fn dense_rank(mut m: Vec<Vec<i128>>) -> usize {
    let mut rank = 0;
    let cols = m.first().map_or(0, Vec::len);
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, p);
        for r in 0..m.len() {
            if r != rank && m[r][c] != 0 {
                let (a, b) = (m[rank][c], m[r][c]);
                for k in 0..cols {
                    m[r][k] = a * m[r][k] - b * m[rank][k];
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Dense trivial-coefficient Leibniz chain differential `C_n -> C_{n-1}` of
/// an integer structure tensor, enumerating tuples directly.
fn dense_differential(bracket: &[Vec<Vec<i128>>], n: usize) -> Vec<Vec<i128>> {
    let d = bracket.len();
    let tuples = |len: usize| -> Vec<Vec<usize>> {
        let mut out = vec![vec![]];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|t| (0..d).map(move |i| [t.clone(), vec![i]].concat()))
                .collect();
        }
        out
    };
    let src = tuples(n);
    let dst = tuples(n - 1);
    let mut m = vec![vec![0i128; src.len()]; dst.len()];
    for (col, t) in src.iter().enumerate() {
        for i in 0..n {
            for j in i + 1..n {
                let sign = if (j + 1) % 2 == 0 { 1 } else { -1 };
                for (k, &c) in bracket[t[j]][t[i]].iter().enumerate() {
                    if c != 0 {
                        let mut u = t.clone();
                        u[i] = k;
                        u.remove(j);
                        let row = dst.iter().position(|v| *v == u).expect("tuple");
                        m[row][col] += sign * c;
                    }
                }
            }
        }
    }
    m
}

fn criterion_4() -> Outcome {
    let a2_bracket = vec![vec![vec![0, 1], vec![0, 0]], vec![vec![0, 0], vec![0, 0]]];
    let ranks: Vec<usize> = (1..=3)
        .map(|n| dense_rank(dense_differential(&a2_bracket, n)))
        .collect();
    let oracle: Vec<usize> = (0..=2usize)
        .map(|n| 2usize.pow(n as u32) - if n == 0 { 0 } else { ranks[n - 1] } - ranks[n])
        .collect();
    ensure(oracle == [1, 1, 1], || {
        format!("dense oracle gives {oracle:?}")
    })?;
    let lib = loday_chain(&a2(), &Coefficients::Trivial, 2)
        .map_err(|e| e.to_string())?
        .betti();
    ensure(lib[..3] == oracle[..], || {
        format!("library gives {lib:?}, oracle {oracle:?}")
    })?;
    for d in 1..=3 {
        let b = loday_chain(&LeibnizAlgebra::abelian(d), &Coefficients::Trivial, 4)
            .map_err(|e| e.to_string())?
            .betti();
        let want: Vec<usize> = (0..=4).map(|n| d.pow(n)).collect();
        ensure(b[..5] == want[..], || format!("abelian{d}: {b:?}"))?;
    }
    for (name, g) in curated() {
        let h = loday_chain(&g, &Coefficients::Trivial, 2)
            .map_err(|e| e.to_string())?
            .betti();
        let c = loday_cochain(&g, &Coefficients::Trivial, 2)
            .map_err(|e| e.to_string())?
            .betti();
        ensure(h[1] == c[1], || {
            format!("{name}: HL_1 = {} but HL^1 = {}", h[1], c[1])
        })?;
    }
    Ok(
        "A2 → 1, 1, 1 matches the dense oracle; abelian d^n for n ≤ 4; HL¹ = HL₁ on the corpus"
            .into(),
    )
}

fn criterion_5() -> Outcome {
    let mut compared = 0;
    let mut algebras = curated();
    algebras.extend(
        random_of_dim(55, 3, 4)
            .into_iter()
            .map(|g| ("random".to_string(), g)),
    );
    for (name, g) in &algebras {
        let q = lie_quotient(g).map_err(|e| e.to_string())?;
        for m in [
            q.g_as_module(g),
            leibniz_core::LieModule::adjoint(&q.quotient),
        ] {
            if m.dim() == 0 {
                continue;
            }
            let lift = Representation::lie_lift(&q, &m);
            let a = loday_cochain(g, &Coefficients::LieModule(m), 3).map_err(|e| e.to_string())?;
            let b = loday_cochain(g, &Coefficients::Representation(lift), 3)
                .map_err(|e| e.to_string())?;
            ensure(a.differentials() == b.differentials(), || {
                format!("{name}: lift and Lie-module cochain matrices differ")
            })?;
            compared += 1;
        }
    }
    let g = a2();
    let adj = Coefficients::Representation(Representation::adjoint(&g));
    let with = loday_cochain_with(&g, &adj, 3, CochainAction::Corrected);
    ensure(with.is_ok(), || {
        format!(
            "corrected cochain of the A2 adjoint rejected: {:?}",
            with.err()
        )
    })?;
    let without = loday_cochain_with(&g, &adj, 3, CochainAction::Uncorrected);
    ensure(
        matches!(
            without,
            Err(HomologyError::DifferentialSquareNonzero { .. })
        ),
        || {
            format!(
            "{compared} lift comparisons equal and the corrected A2 adjoint complex squares to zero, \
             but the negative control does not fire: with the correction removed d∘d = 0 still holds"
        )
        },
    )?;
    Ok(format!(
        "{compared} lift comparisons equal; negative control fires"
    ))
}

fn criterion_6() -> Outcome {
    let mut runs = 0;
    for (name, g) in curated() {
        let q = lie_quotient(&g).map_err(|e| e.to_string())?;
        for coeffs in [
            Coefficients::Trivial,
            Coefficients::LieModule(q.g_as_module(&g)),
        ] {
            let (maps, report) =
                ce_projection(&g, &coeffs, 2).map_err(|e| format!("{name}: {e}"))?;
            for k in 0..2 {
                ensure(
                    maps[k] == Matrix::identity(maps[k].rows()) && maps[k].rows() == maps[k].cols(),
                    || {
                        format!(
                            "{name} ({}): projection in degree {k} is not the identity",
                            coeffs.kind()
                        )
                    },
                )?;
            }
            let failed: Vec<String> = report
                .verdicts()
                .into_iter()
                .filter(|(_, ok)| !ok)
                .map(|(n, _)| n)
                .collect();
            ensure(failed.is_empty(), || {
                format!("{name} ({}): {failed:?}", coeffs.kind())
            })?;
            runs += 1;
        }
    }
    Ok(format!(
        "{runs} projections are chain maps with all degree ≤ 2 verdicts holding"
    ))
}

fn criterion_7() -> Outcome {
    for (d, w, want) in [(1, 6, vec![1, 0, 0, 0, 0, 0]), (2, 5, vec![2, 1, 2, 3, 6])] {
        let r = conjecture_check(d, w).map_err(|e| e.to_string())?;
        let h1: Vec<usize> = r.rows.iter().map(|row| row.h1).collect();
        let witt: Vec<usize> = (1..=w).map(|k| witt_dim(d, k)).collect();
        ensure(r.vanishing(), || {
            format!(
                "d = {d}: nonzero higher homology in {:?}",
                r.rows
                    .iter()
                    .filter(|x| !x.nonvanishing.is_empty())
                    .collect::<Vec<_>>()
            )
        })?;
        ensure(h1 == want && witt == want, || {
            format!("d = {d}: H₁ {h1:?}, witt {witt:?}, expected {want:?}")
        })?;
        ensure(r.verdict() == "PASS", || {
            format!("d = {d}: verdict {}", r.verdict())
        })?;
    }
    Ok("H_n = 0 for n ≥ 2 in every weight block; H₁ = 1,0,0,0,0,0 and 2,1,2,3,6".into())
}

/// Dimensions of the free graded Lie algebra on `d` odd generators, read off
/// `Π_n (1 + t^n)^{a_n} / (1 - t^n)^{a_n}` (odd/even n) `= 1 / (1 - d t)`.
fn generating_function_dims(d: i64, top: usize) -> Vec<i64> {
    let mut dims = vec![];
    let mut series = vec![0i64; top + 1];
    series[0] = 1;
    for n in 1..=top {
        let a = d.pow(n as u32) - series[n];
        dims.push(a);
        for _ in 0..a {
            if n % 2 == 1 {
                for k in (n..=top).rev() {
                    series[k] += series[k - n];
                }
            } else {
                for k in n..=top {
                    series[k] += series[k - n];
                }
            }
        }
    }
    dims
}

fn criterion_8() -> Outcome {
    for (d, want) in [(2usize, vec![2, 3, 2, 3]), (1, vec![1, 1, 0])] {
        let got: Vec<usize> = (1..=want.len())
            .map(|n| free_graded_lie_component(d, n).subspace.dim())
            .collect();
        let oracle: Vec<usize> = generating_function_dims(d as i64, want.len())
            .into_iter()
            .map(|a| a as usize)
            .collect();
        ensure(got == want && oracle == want, || {
            format!("d = {d}: library {got:?}, oracle {oracle:?}, expected {want:?}")
        })?;
    }
    Ok("d = 2 → 2, 3, 2, 3 and d = 1 → 1, 1, 0, matching the generating function".into())
}

fn acyclic(l: &DGLieAlgebra) -> bool {
    l.homology().values().all(|&h| h == 0)
}

fn criterion_9() -> Outcome {
    let mut checked = 0;
    for (name, h) in lie_members() {
        let (back, report) = leib(&cone(&h.as_lie()));
        ensure(back.structure == h.structure && report.is_member(), || {
            format!("{name}: leib(cone(h)) ≠ h")
        })?;
        checked += 1;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for (name, g) in curated() {
        let env = minimal_envelope(&g).map_err(|e| e.to_string())?;
        let (back, _) = leib(&env);
        ensure(back.structure == g.structure, || {
            format!("{name}: leib(M(g)) ≠ g")
        })?;
        ensure(acyclic(&env), || {
            format!("{name}: M(g) has homology {:?}", env.homology())
        })?;
        for m in [
            Representation::trivial(&g, 1),
            Representation::adjoint(&g),
            random_representation(&mut rng, &g),
        ] {
            let mm = minimal_module(&g, &m).map_err(|e| e.to_string())?;
            ensure(check_dg_module(&env, &mm).is_empty(), || {
                format!("{name}: minimal module fails the module axioms")
            })?;
        }
        checked += 1;
    }
    Ok(format!(
        "{checked} functor identities hold, envelopes acyclic, minimal modules valid"
    ))
}

fn leibniz(args: &[&str]) -> Result<Output, String> {
    Command::new(env!("CARGO_BIN_EXE_leibniz"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())
}

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .display()
        .to_string()
}

fn json_report(args: &[&str]) -> Result<Value, String> {
    let mut full = args.to_vec();
    full.extend(["--json", "-", "--quiet"]);
    let out = leibniz(&full)?;
    ensure(out.status.code() == Some(0), || {
        format!("{args:?} exited with {:?}", out.status.code())
    })?;
    let mut v: Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    v.as_object_mut()
        .ok_or("report is not an object")?
        .remove("timing");
    Ok(v)
}

fn criterion_10() -> Outcome {
    let a2_file = fixture("a2.json");
    let first = json_report(&["check", &a2_file])?;
    let echo = first["results"]["algebra"].to_string();
    let reparsed = parse_algebra(&echo).map_err(|e| e.to_string())?.value;
    ensure(reparsed == a2(), || {
        "algebra echo does not reproduce A2".into()
    })?;

    let args = ["homology", "--max-degree", "3", &a2_file];
    let (a, b) = (json_report(&args)?, json_report(&args)?);
    ensure(a.to_string() == b.to_string(), || {
        "two identical runs differ".into()
    })?;
    let betti: Vec<u64> = a["results"]["betti"]
        .as_array()
        .ok_or("no betti table")?
        .iter()
        .filter_map(|r| r["dim"].as_u64())
        .collect();
    ensure(betti == [1, 1, 1, 1], || {
        format!("A2 homology table {betti:?}")
    })?;

    for (args, code) in [
        (vec!["check".to_string(), a2_file.clone()], 0),
        (vec!["check".to_string(), fixture("not_leibniz.json")], 2),
        (vec!["check".to_string(), fixture("missing.json")], 2),
        (
            vec![
                "free-conjecture".into(),
                "--generators".into(),
                "5".into(),
                "--max-weight".into(),
                "2".into(),
            ],
            2,
        ),
    ] {
        let refs: Vec<&str> = args.iter().map(String::as_str).collect();
        let got = leibniz(&refs)?.status.code();
        ensure(got == Some(code), || {
            format!("{args:?} exited with {got:?}, expected {code}")
        })?;
    }

    for (d, w, want) in [
        ("1", "6", vec![1, 0, 0, 0, 0, 0]),
        ("2", "5", vec![2, 1, 2, 3, 6]),
    ] {
        let r = json_report(&["free-conjecture", "--generators", d, "--max-weight", w])?;
        let h1: Vec<u64> = r["results"]["rows"]
            .as_array()
            .ok_or("no rows")?
            .iter()
            .filter_map(|x| x["h1"].as_u64())
            .collect();
        ensure(h1 == want && r["results"]["verdict"] == "PASS", || {
            format!(
                "free-conjecture d = {d}: H₁ {h1:?}, verdict {}",
                r["results"]["verdict"]
            )
        })?;
    }
    Ok("round-trip, determinism and exit codes hold; free-conjecture prints 1,0,0,0,0,0 and 2,1,2,3,6 with PASS".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("axiom suites and mutations", criterion_1),
        ("d∘d = 0 gates", criterion_2),
        ("CE computes the Lie quotient", criterion_3),
        ("Leibniz complexes", criterion_4),
        ("correction term", criterion_5),
        ("comparison in degrees ≤ 2", criterion_6),
        ("free subcomplex vanishing", criterion_7),
        ("free graded Lie dimensions", criterion_8),
        ("functor identities", criterion_9),
        ("command line", criterion_10),
    ];
    let mut unexpected = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let k = i + 1;
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        let expected_red = UNATTAINABLE.contains(&k);
        match &outcome {
            Ok(msg) => println!("criterion {k:>2} {name}: PASS ({secs:.1}s) {msg}"),
            Err(msg) if expected_red => {
                println!("criterion {k:>2} {name}: FAIL, known unattainable ({secs:.1}s) {msg}")
            }
            Err(msg) => println!("criterion {k:>2} {name}: FAIL ({secs:.1}s) {msg}"),
        }
        if outcome.is_ok() == expected_red {
            unexpected += 1;
        }
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{unexpected} criteria deviate from the expected outcome");
        ExitCode::FAILURE
    }
}
