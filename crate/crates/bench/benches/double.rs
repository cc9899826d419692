use criterion::{criterion_group, criterion_main, Criterion};
use tcoalg::constructions::{double, ribbon_extension};
use tcoalg::demos::{constant_kz3_z2, group_algebra, sweedler};
use tcoalg::rep::{braiding_map, regular_module};
use tcoalg::{check_drinfeld_props, validate_rmatrix, validate_tcoalg};

fn constructions(c: &mut Criterion) {
    let sw = sweedler();
    let cst = constant_kz3_z2();
    c.bench_function("double/sweedler", |b| b.iter(|| double(&sw).unwrap()));
    c.bench_function("double/constant", |b| b.iter(|| double(&cst).unwrap()));
    let d = double(&group_algebra(2)).unwrap();
    c.bench_function("ribbon_extension/double_kz2", |b| b.iter(|| ribbon_extension(&d).unwrap()));
}

fn verifiers(c: &mut Criterion) {
    let d = double(&constant_kz3_z2()).unwrap();
    let mut g = c.benchmark_group("verify/double_constant");
    g.sample_size(10);
    g.bench_function("tcoalg", |b| b.iter(|| validate_tcoalg(&d)));
    g.bench_function("rmatrix", |b| b.iter(|| validate_rmatrix(&d)));
    g.bench_function("drinfeld", |b| b.iter(|| check_drinfeld_props(&d)));
    g.finish();
}

fn braiding(c: &mut Criterion) {
    let d = double(&sweedler()).unwrap();
    let m = regular_module(&d, 0);
    c.bench_function("braiding/double_sweedler_regular", |b| b.iter(|| braiding_map(&d, &m, &m)));
}

criterion_group!(benches, constructions, verifiers, braiding);
criterion_main!(benches);
