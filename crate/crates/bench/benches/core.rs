//! Benchmarks for the hot paths: B-spline basis evaluation, collocation
//! matrix assembly plus eigendecomposition, modulus of smoothness, and
//! operator application.

use criterion::{black_box, criterion_group, criterion_main, Criterion};
use opbound_core::{
    eigendecompose, make_bernstein, make_schoenberg, modulus_of_smoothness, ExactFn, Grid,
    KnotSequence, PNorm, SampledFunction,
};

fn bspline_eval(c: &mut Criterion) {
    let seq = KnotSequence::uniform(3, 32).unwrap();
    c.bench_function("bspline_eval_all_k3_n32", |b| {
        b.iter(|| {
            let mut acc = 0.0;
            for i in 0..=256 {
                let x = i as f64 / 256.0;
                acc += seq.eval_all_basis(black_box(x)).iter().sum::<f64>();
            }
            acc
        })
    });
}

fn collocation_spectrum(c: &mut Criterion) {
    let op = make_schoenberg(KnotSequence::uniform(3, 32).unwrap()).unwrap();
    c.bench_function("collocation_plus_eigen_k3_n32", |b| {
        b.iter(|| {
            let a = op.collocation_matrix();
            eigendecompose(black_box(&a)).unwrap().gamma
        })
    });
}

fn modulus(c: &mut Criterion) {
    let f = SampledFunction::from_exact(
        "sawtooth",
        ExactFn::Sawtooth { teeth: 4 },
        Grid::default_grid(),
    );
    c.bench_function("modulus_r2_t0.1_inf", |b| {
        b.iter(|| modulus_of_smoothness(black_box(&f), 2, 0.1, PNorm::Infinity).unwrap())
    });
}

fn operator_apply(c: &mut Criterion) {
    let op = make_bernstein(32).unwrap();
    let f = SampledFunction::from_exact("sqrt", ExactFn::Sqrt, Grid::default_grid());
    c.bench_function("bernstein_apply_n32", |b| {
        b.iter(|| op.apply(black_box(&f)).unwrap().1.values()[2048])
    });
}

criterion_group!(benches, bspline_eval, collocation_spectrum, modulus, operator_apply);
criterion_main!(benches);
