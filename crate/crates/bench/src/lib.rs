//! Inputs shared by the benchmarks.

use leibniz_core::corpus::{curated, random_algebra};
use leibniz_core::homology::{loday_chain, Coefficients};
use leibniz_core::{LeibnizAlgebra, Matrix};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Named algebras of dimension 2 and 3.
pub fn algebras() -> Vec<(String, LeibnizAlgebra)> {
    let mut out: Vec<(String, LeibnizAlgebra)> = curated()
        .into_iter()
        .filter(|(n, _)| ["A2", "r2_line", "nilpotent3"].contains(&n.as_str()))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    while out.len() < 4 {
        let g = random_algebra(&mut rng, 3);
        if g.dim() == 3 {
            out.push(("random3".into(), g));
        }
    }
    out
}

/// The top differential of the trivial Leibniz chain complex of `g`.
pub fn top_differential(g: &LeibnizAlgebra, n_max: usize) -> Matrix {
    let c = loday_chain(g, &Coefficients::Trivial, n_max).expect("valid algebra");
    c.differential(c.top())
}
