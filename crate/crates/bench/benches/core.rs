use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use formata::formation::projector;
use formata::head::fprime_ascending;
use formata::CharacterTable;
use formata_bench::{formations, group, uncached, GROUPS};

fn character_tables(c: &mut Criterion) {
    let mut grp = c.benchmark_group("character_table");
    grp.sample_size(10);
    for name in GROUPS {
        grp.bench_with_input(BenchmarkId::from_parameter(name), name, |b, name| {
            b.iter(|| CharacterTable::compute(&uncached(name)).unwrap())
        });
    }
    grp.finish();
}

fn projectors(c: &mut Criterion) {
    let mut grp = c.benchmark_group("projector");
    grp.sample_size(10);
    for name in GROUPS {
        for f in formations() {
            grp.bench_with_input(BenchmarkId::new(f.to_string(), name), name, |b, name| {
                b.iter(|| projector(&uncached(name), &f).unwrap())
            });
        }
    }
    grp.finish();
}

fn head_characters(c: &mut Criterion) {
    let mut grp = c.benchmark_group("fprime_ascending");
    grp.sample_size(10);
    for name in GROUPS {
        let g = group(name);
        for f in formations() {
            grp.bench_with_input(BenchmarkId::new(f.to_string(), name), &g, |b, g| {
                b.iter(|| fprime_ascending(g, &f).unwrap())
            });
        }
    }
    grp.finish();
}

criterion_group!(benches, character_tables, projectors, head_characters);
criterion_main!(benches);
