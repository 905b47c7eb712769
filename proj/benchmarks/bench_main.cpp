#include <benchmark/benchmark.h>

#include "berezin/flows.hpp"
#include "berezin/grassmann.hpp"
#include "berezin/rng.hpp"
#include "berezin/schur.hpp"

using namespace berezin;

namespace {

PolyMatrix symbolic_matrix(int n) {
    PolyMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.at(i, j) = MultiPoly::variable("m_" + std::to_string(i + 1) + "_" +
                                             std::to_string(j + 1));
    return m;
}

DirectedMultigraph complete_digraph(int n) {
    DirectedMultigraph g;
    g.n_vertices = n;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            g.add_edge(i, j, MultiPoly::variable(auto_weight_name(i, j, 1)));
    return g;
}

void PolyMul(benchmark::State& state) {
    MultiPoly h = complete_homogeneous(static_cast<int>(state.range(0)), 3);
    for (auto _ : state) {
        MultiPoly p = h * h;
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(PolyMul)->Arg(4)->Arg(6)->Arg(8);

void DetCofactor(benchmark::State& state) {
    PolyMatrix m = symbolic_matrix(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        MultiPoly d = det_cofactor(m);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(DetCofactor)->Arg(3)->Arg(4)->Arg(5);

void DetBareiss(benchmark::State& state) {
    PolyMatrix m = symbolic_matrix(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        MultiPoly d = det_bareiss(m);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(DetBareiss)->Arg(3)->Arg(4)->Arg(5);

void BerezinDet(benchmark::State& state) {
    Rng rng(1);
    int n = static_cast<int>(state.range(0));
    PolyMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = MultiPoly(rng.sample_weight_value());
    for (auto _ : state) {
        MultiPoly d = berezin_det(m);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BerezinDet)->Arg(3)->Arg(4)->Arg(5);

void FlowEnumeration(benchmark::State& state) {
    DirectedMultigraph g = complete_digraph(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto flows = enum_self_avoiding_flows(g, {1, 2}, {2, 3});
        benchmark::DoNotOptimize(flows);
    }
}
BENCHMARK(FlowEnumeration)->Arg(3)->Arg(4)->Arg(5);

void JacobiTrudi(benchmark::State& state) {
    SkewShape shape(Partition({3, 2, 1}));
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        MultiPoly p = jacobi_trudi_h(shape, n);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(JacobiTrudi)->Arg(2)->Arg(3);

void TableauEnumeration(benchmark::State& state) {
    SkewShape shape(Partition({4, 3, 2, 1}));
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto tabs = enum_ssyt(shape, n);
        benchmark::DoNotOptimize(tabs);
    }
}
BENCHMARK(TableauEnumeration)->Arg(4)->Arg(5);

} // namespace

BENCHMARK_MAIN();
