use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use sh3_core::algebra::Element;
use sh3_core::cyclotomic::CycNum;
use sh3_core::dunkl::{operator_equal, realize, TruncPolySpace};
use sh3_core::par::Exec;
use sh3_core::random::{random_element, rng};
use sh3_core::supertrace::{gram_up_to_degree, GramParams};

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn gram_fill(c: &mut Criterion) {
    let mut group = c.benchmark_group("gram_degree_2");
    group.sample_size(10);
    let params = GramParams::Numeric(CycNum::ONE, CycNum::ONE);
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| gram_up_to_degree(2, &params, exec).unwrap())
        });
    }
    group.finish();
}

fn random_products(c: &mut Criterion) {
    let mut g = rng(11);
    let pairs: Vec<(Element, Element)> =
        (0..256).map(|_| (random_element(&mut g, 6, 3), random_element(&mut g, 6, 3))).collect();
    let mut group = c.benchmark_group("products_degree_6");
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| b.iter(|| exec.map(&pairs, |(x, y)| x.mul(y))));
    }
    group.finish();
}

fn operator_comparison(c: &mut Criterion) {
    let space = TruncPolySpace::new(5);
    let lhs = realize(&Element::x(), 1).commutator(&realize(&Element::yp(), 1));
    let rhs = realize(&Element::unit().scale(&CycNum::from_int(3)), 2);
    let mut group = c.benchmark_group("operator_equal_cap_5");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| assert!(operator_equal(&lhs, &rhs, &space, exec).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(benches, gram_fill, random_products, operator_comparison);
criterion_main!(benches);
