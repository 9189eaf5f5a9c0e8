use criterion::{black_box, BatchSize, criterion_group, criterion_main, Criterion};
use ginforge::checks::instances::{random_homogeneous_gens, random_stable};
use ginforge::checks::{counterexample_ideal, intro_ideal, intro_ordering};
use ginforge::distraction::DistractionMatrix;
use ginforge::gin::gin;
use ginforge::groebner::PolyIdeal;
use ginforge::monomial::ek_betti;
use ginforge::polyring::OrderingSpec;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn groebner(c: &mut Criterion) {
    let mut r = ChaCha8Rng::seed_from_u64(3);
    let ord = OrderingSpec::degrevlex(3);
    // fresh generators per iteration, the basis cache would answer repeats
    c.bench_function("reduced_gb random n=3", |b| {
        b.iter_batched(
            || PolyIdeal::new(3, random_homogeneous_gens(&mut r, 3, 3)),
            |i| i.reduced_gb(&ord),
            BatchSize::SmallInput,
        )
    });
}

fn distraction(c: &mut Criterion) {
    let i = intro_ideal();
    let l = DistractionMatrix::classic(4, 6).unwrap();
    c.bench_function("distract intro ideal", |b| b.iter(|| l.distract_ideal(black_box(&i))));
    let d = l.distract_ideal(&i);
    let w = intro_ordering();
    c.bench_function("initial ideal of distraction, W order", |b| {
        b.iter(|| PolyIdeal::new(4, d.gens().to_vec()).initial_ideal(&w))
    });
}

fn generic_initial(c: &mut Criterion) {
    let i = PolyIdeal::from_monomial(&counterexample_ideal());
    let n = counterexample_ideal().num_vars();
    let ord = OrderingSpec::degrevlex(n);
    let mut g = c.benchmark_group("gin");
    g.sample_size(10);
    g.bench_function("counterexample, 3 trials", |b| b.iter(|| gin(&i, &ord, 3, black_box(1)).unwrap()));
    g.finish();
}

fn betti(c: &mut Criterion) {
    let mut r = ChaCha8Rng::seed_from_u64(9);
    let i = random_stable(&mut r, 4, 6);
    c.bench_function("ek_betti stable n=4", |b| b.iter(|| ek_betti(black_box(&i)).unwrap()));
}

criterion_group!(benches, groebner, distraction, generic_initial, betti);
criterion_main!(benches);
