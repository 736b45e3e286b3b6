//! Labeled test-function corpora and seeded random knot generation.

use crate::error::{Error, Result};
use crate::funcspace::{ExactFn, Grid, SampledFunction};
use crate::splines::KnotSequence;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn monomial(d: usize) -> ExactFn {
    let mut c = vec![0.0; d + 1];
    c[d] = 1.0;
    ExactFn::Polynomial(c)
}

/// The standard corpus: 1, x, x^2, x^3, |x - 1/2|, sin(pi x), sqrt(x)
/// and a piecewise-linear sawtooth.
pub fn standard_corpus(grid: &Grid) -> Vec<SampledFunction> {
    vec![
        SampledFunction::from_exact("1", ExactFn::constant(1.0), grid.clone()),
        SampledFunction::from_exact("x", monomial(1), grid.clone()),
        SampledFunction::from_exact("x^2", monomial(2), grid.clone()),
        SampledFunction::from_exact("x^3", monomial(3), grid.clone()),
        SampledFunction::from_exact("|x-1/2|", ExactFn::Abs { center: 0.5 }, grid.clone()),
        SampledFunction::from_exact("sin(pi x)", ExactFn::sin_pi(), grid.clone()),
        SampledFunction::from_exact("sqrt(x)", ExactFn::Sqrt, grid.clone()),
        SampledFunction::from_exact("sawtooth", ExactFn::Sawtooth { teeth: 4 }, grid.clone()),
    ]
}

/// Monomials x^d for d = 0 ..= max_degree.
pub fn polynomial_corpus(grid: &Grid, max_degree: usize) -> Vec<SampledFunction> {
    (0..=max_degree)
        .map(|d| SampledFunction::from_exact(format!("x^{d}"), monomial(d), grid.clone()))
        .collect()
}

/// Functions with limited smoothness only.
pub fn rough_corpus(grid: &Grid) -> Vec<SampledFunction> {
    vec![
        SampledFunction::from_exact("|x-1/2|", ExactFn::Abs { center: 0.5 }, grid.clone()),
        SampledFunction::from_exact("sqrt(x)", ExactFn::Sqrt, grid.clone()),
        SampledFunction::from_exact("sawtooth", ExactFn::Sawtooth { teeth: 4 }, grid.clone()),
    ]
}

/// Seeded random knot sequence with `n` interior intervals whose mesh
/// gauge never falls below `min_gauge` (rejection sampling).
pub fn random_knots(degree: usize, n: usize, seed: u64, min_gauge: f64) -> Result<KnotSequence> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be positive".into()));
    }
    if min_gauge <= 0.0 || min_gauge * n as f64 > 1.0 {
        return Err(Error::InvalidInput(format!(
            "min gauge {min_gauge} infeasible for {n} intervals"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..100_000 {
        let mut bp: Vec<f64> = std::iter::once(0.0)
            .chain((0..n - 1).map(|_| rng.gen_range(0.0..1.0)))
            .chain(std::iter::once(1.0))
            .collect();
        bp.sort_by(|a, b| a.partial_cmp(b).unwrap());
        if bp.windows(2).all(|w| w[1] - w[0] >= min_gauge) {
            return KnotSequence::new(degree, &bp);
        }
    }
    Err(Error::Computation(format!(
        "rejection sampling failed to meet min gauge {min_gauge} for {n} intervals"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_sizes_and_labels() {
        let grid = Grid::uniform(257).unwrap();
        let std = standard_corpus(&grid);
        assert_eq!(std.len(), 8);
        assert_eq!(std[0].label(), "1");
        assert_eq!(std[4].label(), "|x-1/2|");
        assert!(std.iter().all(|f| f.exact().is_some()));

        let polys = polynomial_corpus(&grid, 6);
        assert_eq!(polys.len(), 7);
        assert_eq!(polys[6].label(), "x^6");

        assert_eq!(rough_corpus(&grid).len(), 3);
    }

    #[test]
    fn random_knots_respect_min_gauge() {
        for seed in 0..20u64 {
            let seq = random_knots(2, 8, seed, 0.05).unwrap();
            assert!(seq.min_mesh_gauge() >= 0.05, "seed {seed}");
            assert_eq!(seq.interior_count(), 8);
        }
        // Determinism.
        let a = random_knots(3, 6, 42, 0.02).unwrap();
        let b = random_knots(3, 6, 42, 0.02).unwrap();
        assert_eq!(a.breakpoints(), b.breakpoints());
        // Infeasible floor.
        assert!(random_knots(2, 8, 1, 0.2).is_err());
    }
}
