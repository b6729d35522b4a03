use arcnerve::complex::{clique_complex, nerve_nk};
use arcnerve::homology::reduced_homology;
use arcnerve::Caps;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn homology(c: &mut Criterion) {
    let caps = Caps::new(14, 12);
    let mut group = c.benchmark_group("reduced_homology");
    group.sample_size(10);
    for (n, k) in [(6, 3), (8, 5), (9, 6), (10, 7)] {
        let nerve = nerve_nk(n, k);
        group.bench_with_input(
            BenchmarkId::new("nerve", format!("{n},{k}")),
            &nerve,
            |b, x| b.iter(|| reduced_homology(x, caps).unwrap()),
        );
    }
    for (n, k) in [(7, 2), (9, 3)] {
        let clique = clique_complex(&nerve_nk(n, k));
        group.bench_with_input(
            BenchmarkId::new("clique", format!("{n},{k}")),
            &clique,
            |b, x| b.iter(|| reduced_homology(x, caps).unwrap()),
        );
    }
    group.finish();
}

criterion_group!(benches, homology);
criterion_main!(benches);
