use criterion::{criterion_group, criterion_main, Criterion};
use polyolab::characters::{frob_l, frob_l_brute};
use polyolab::identities::{check_point, lookup, Params, VerifyMode};
use polyolab::macdonald::nabla_e_pairing;
use polyolab::polyomino::Polyomino;
use polyolab::{Partition, SymF};
use std::hint::black_box;

fn enumeration(c: &mut Criterion) {
    c.bench_function("polyominoes 5x5", |b| b.iter(|| Polyomino::all(black_box(5), 5).len()));
    c.bench_function("frob_l brute 4x4", |b| b.iter(|| frob_l_brute(black_box(4), 4).unwrap()));
    c.bench_function("frob_l closed 6x6", |b| b.iter(|| frob_l(black_box(6), 6)));
}

fn algebra(c: &mut Criterion) {
    let f = SymF::h(&[3, 2, 1]);
    c.bench_function("h321 to schur", |b| b.iter(|| f.to_basis(polyolab::symfunc::Basis::S).unwrap()));
    let la = Partition::from_unsorted(vec![2, 2]);
    c.bench_function("nabla e4 pairing h22", |b| b.iter(|| nabla_e_pairing(black_box(4), &la).unwrap()));
}

fn registry(c: &mut Criterion) {
    let e = lookup("eqFrob").unwrap();
    let p = Params { k: Some(3), n: Some(4), ..Default::default() };
    c.bench_function("verify eqFrob 3x4", |b| b.iter(|| check_point(e, black_box(p), VerifyMode::Symbolic)));
}

criterion_group!(benches, enumeration, algebra, registry);
criterion_main!(benches);
