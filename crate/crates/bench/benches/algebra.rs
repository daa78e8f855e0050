use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use groupext::extension::verify_cocycle;
use groupext::iso::are_isomorphic;
use groupext::metacyclic::{enumerate_extensions, metacyclic, MetacyclicParams};
use groupext::presets::{binary_tetrahedral_cocycle, binary_tetrahedral_spec, preset};
use groupext::smallgroups::sl2_f3;
use groupext::timespan::{transform_rhythm, AffineOp, Rational, Rhythm, TimeSpan};
use groupext::torsor::{verify_simply_transitive, Side};

fn enumeration(c: &mut Criterion) {
    c.bench_function("enumerate_extensions(12)", |b| b.iter(|| enumerate_extensions(black_box(12))));
    c.bench_function("enumerate_extensions(16)", |b| b.iter(|| enumerate_extensions(black_box(16))));
}

fn isomorphism(c: &mut Criterion) {
    let sl23 = preset("sl23").unwrap();
    let dic = metacyclic(MetacyclicParams::new(12, 6, 11).unwrap()).unwrap().group;
    let model = sl2_f3();
    c.bench_function("are_isomorphic(SL(2,3), SL(2,3))", |b| {
        b.iter(|| are_isomorphic(black_box(sl23.group()), black_box(&model)))
    });
    c.bench_function("are_isomorphic(SL(2,3), Z3 ⋊ Q8)", |b| {
        b.iter(|| are_isomorphic(black_box(sl23.group()), black_box(&dic)))
    });
}

fn cocycle(c: &mut Criterion) {
    let spec = binary_tetrahedral_spec(binary_tetrahedral_cocycle());
    c.bench_function("verify_cocycle(binary tetrahedral)", |b| b.iter(|| verify_cocycle(black_box(&spec))));
}

fn actions(c: &mut Criterion) {
    let p = preset("d24-of-d12").unwrap();
    let perms: Vec<_> = p.generators.iter().map(|&(_, g)| p.action.permutation(g, Side::Left)).collect();
    c.bench_function("verify_simply_transitive(d24-of-d12)", |b| {
        b.iter(|| verify_simply_transitive(24, black_box(&perms)))
    });
    c.bench_function("check_action_laws(sl23)", |b| {
        let q = preset("sl23").unwrap();
        b.iter(|| q.action.check_action_laws(black_box(Side::Left)))
    });
}

fn rhythms(c: &mut Criterion) {
    let spans = (0..256)
        .map(|i| TimeSpan::new(Rational::new(3 * i, 2), Rational::new(1, 1 + i % 4)).unwrap())
        .collect();
    let r = Rhythm::new(spans).unwrap();
    let g = AffineOp::new(Rational::new(-5, 3), Rational::new(7, 4)).unwrap();
    c.bench_function("transform_rhythm(256 spans)", |b| b.iter(|| transform_rhythm(black_box(&g), black_box(&r))));
}

criterion_group!(benches, enumeration, isomorphism, cocycle, actions, rhythms);
criterion_main!(benches);
