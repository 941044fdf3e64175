use criterion::{black_box, criterion_group, criterion_main, Criterion};

use tokenaut::distance::{token_path_distance, verify_distance_formula, SortedTuple};
use tokenaut::group::PermGroup;
use tokenaut::perm::Permutation;
use tokenaut::search::{find_automorphism_group, SearchConfig};
use tokenaut::token::TokenGraph;
use tokenaut_bench::{cycle, path, star, tokens, wheel};

fn bench_token_construction(c: &mut Criterion) {
    let mut group = c.benchmark_group("token_construction");
    let p40 = path(40);
    group.bench_function("F2_P40", |b| {
        b.iter(|| TokenGraph::new(black_box(&p40), 2).unwrap())
    });
    let c14 = cycle(14);
    group.bench_function("F4_C14", |b| {
        b.iter(|| TokenGraph::new(black_box(&c14), 4).unwrap())
    });
    group.finish();
}

fn bench_automorphism_search(c: &mut Criterion) {
    let mut group = c.benchmark_group("automorphism_search");
    let cfg = SearchConfig::default();
    let star_tokens = tokens(&star(9), 2);
    group.bench_function("F2_star9", |b| {
        b.iter(|| find_automorphism_group(black_box(star_tokens.graph()), &cfg).unwrap())
    });
    let wheel_tokens = tokens(&wheel(10), 2);
    group.bench_function("F2_W10", |b| {
        b.iter(|| find_automorphism_group(black_box(wheel_tokens.graph()), &cfg).unwrap())
    });
    let path_tokens = tokens(&path(10), 5);
    group.bench_function("F5_P10", |b| {
        b.iter(|| find_automorphism_group(black_box(path_tokens.graph()), &cfg).unwrap())
    });
    group.finish();
}

fn bench_stabilizer_chain(c: &mut Criterion) {
    // symmetric group on 9 points from a transposition and a full cycle
    let gens = vec![
        Permutation::from_cycles(9, &[&[0, 1]]).unwrap(),
        Permutation::from_images((0..9).map(|i| (i + 1) % 9).collect()).unwrap(),
    ];
    c.bench_function("chain_order_S9", |b| {
        b.iter(|| {
            let g = PermGroup::new(9, black_box(gens.clone())).unwrap();
            g.order()
        })
    });
}

fn bench_distances(c: &mut Criterion) {
    let mut group = c.benchmark_group("path_distances");
    let tg = tokens(&path(12), 3);
    let u = SortedTuple::new(&[1, 2, 3], 12).unwrap();
    let v = SortedTuple::new(&[9, 11, 12], 12).unwrap();
    group.bench_function("formula_F3_P12", |b| {
        b.iter(|| token_path_distance(black_box(&u), black_box(&v)).unwrap())
    });
    group.bench_function("all_pairs_oracle_F3_P12", |b| {
        b.iter(|| verify_distance_formula(black_box(&tg)).unwrap())
    });
    group.finish();
}

criterion_group!(
    benches,
    bench_token_construction,
    bench_automorphism_search,
    bench_stabilizer_chain,
    bench_distances
);
criterion_main!(benches);
