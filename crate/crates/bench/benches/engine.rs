use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use edgering::betti::{betti_table, candidate_degrees, BettiOptions};
use edgering::binomial::{toric_ideal, TermOrder};
use edgering::homology::{cone, Field, SimplicialComplex};
use edgering::lab::example;
use edgering::walks::enumerate_primitive_walks;

fn graph(id: &str, k: usize) -> edgering::SimpleGraph {
    example(id).unwrap().remove(k).graph
}

fn tables(c: &mut Criterion) {
    let mut group = c.benchmark_group("betti_table");
    group.sample_size(10);
    for (id, k) in [("ex-2.9", 0), ("fig-10", 0), ("ex-2.11", 1), ("ex-2.8", 0)] {
        let g = graph(id, k);
        group.bench_function(format!("{id}/{k}"), |b| b.iter(|| betti_table(black_box(&g), &BettiOptions::default())));
        let no_shortcuts = BettiOptions { shortcuts: false, ..Default::default() };
        group.bench_function(format!("{id}/{k}/no-shortcuts"), |b| b.iter(|| betti_table(black_box(&g), &no_shortcuts)));
    }
    group.finish();
}

fn algebra(c: &mut Criterion) {
    let g = graph("ex-2.8", 0);
    c.bench_function("toric_ideal/ex-2.8", |b| b.iter(|| toric_ideal(black_box(&g))));
    c.bench_function("primitive_walks/ex-2.8", |b| b.iter(|| enumerate_primitive_walks(black_box(&g))));
    let ord = TermOrder::degrevlex(g.edge_count());
    c.bench_function("candidate_degrees/ex-2.8", |b| b.iter(|| candidate_degrees(black_box(&g), &ord)));
}

fn homology(c: &mut Criterion) {
    let d = SimplicialComplex::from_facets([0b000111, 0b011100, 0b110001, 0b101010]);
    let u = cone(0b11 << 6, &d).unwrap().union(&cone(0b1 << 8, &d).unwrap());
    c.bench_function("reduced_homology/two_cones", |b| b.iter(|| black_box(&u).reduced_homology(Field::default())));
}

criterion_group!(benches, tables, algebra, homology);
criterion_main!(benches);
