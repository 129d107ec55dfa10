#include "treeshift/classify.hpp"
#include "treeshift/extend.hpp"
#include "treeshift/oracle.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace treeshift;

namespace {

ShiftModel two_arm_star(const Rational& alpha) {
    DirectedTree tree = DirectedTree::from_parent_map(
        {"0", "1,1", "2,1"}, {{"0", "0"}, {"1,1", "0"}, {"2,1", "0"}});
    return ShiftModel(std::move(tree), {{"1,1", alpha}, {"2,1", 1}},
                      {{"1,1", TailModel{CASeq{1, AtomicMeasure::dirac(1, 1)}, 1}},
                       {"2,1", TailModel{CASeq{1, AtomicMeasure{}}, 1}}});
}

ShiftModel wide_isometry(std::size_t breadth) {
    std::vector<VertexId> vertices{"r"};
    std::map<VertexId, VertexId> parent{{"r", "r"}};
    std::map<VertexId, Rational> weights;
    std::map<VertexId, TailModel> tails;
    for (std::size_t i = 0; i < breadth; ++i) {
        VertexId v = "c" + std::to_string(i);
        vertices.push_back(v);
        parent[v] = "r";
        weights[v] = Rational(1, static_cast<unsigned long>(breadth));
        tails[v] = TailModel{CASeq{1, AtomicMeasure{}}, 1};
    }
    return ShiftModel(DirectedTree::from_parent_map(vertices, parent), std::move(weights),
                      std::move(tails));
}

void NormTableHorizon(benchmark::State& state) {
    ShiftModel star = two_arm_star(Rational(2, 5));
    for (auto _ : state) {
        NormTable table(star, static_cast<std::uint64_t>(state.range(0)));
        benchmark::DoNotOptimize(table.at("0", static_cast<std::uint64_t>(state.range(0))));
    }
}
BENCHMARK(NormTableHorizon)->Arg(16)->Arg(64)->Arg(256);

void CheCheck(benchmark::State& state) {
    ShiftModel m = wide_isometry(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        CheResult r = check_che(m, 16);
        benchmark::DoNotOptimize(r.verdict.status);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(CheCheck)->RangeMultiplier(4)->Range(4, 256)->Complexity();

void PowerHyponormalCheck(benchmark::State& state) {
    ShiftModel m = wide_isometry(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        ClassVerdict v = check_power_hyponormal(m, 8, 64);
        benchmark::DoNotOptimize(v.status);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(PowerHyponormalCheck)->RangeMultiplier(4)->Range(4, 64)->Complexity();

void RationalPsd(benchmark::State& state) {
    std::size_t n = static_cast<std::size_t>(state.range(0));
    std::mt19937 rng(12345);
    std::uniform_int_distribution<long> entry(-3, 3);
    std::vector<std::vector<Rational>> basis(n, std::vector<Rational>(n));
    for (auto& row : basis)
        for (auto& x : row)
            x = entry(rng);
    std::vector<std::vector<Rational>> gram(n, std::vector<Rational>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                gram[i][j] += basis[i][k] * basis[j][k];
    for (auto _ : state) {
        PsdResult r = is_positive_semidefinite(gram);
        benchmark::DoNotOptimize(r.psd);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(RationalPsd)->RangeMultiplier(2)->Range(8, 64)->Complexity();

void CheJointConstruction(benchmark::State& state) {
    std::vector<ShiftModel> members;
    for (int j = 0; j < state.range(0); ++j)
        members.push_back(ShiftModel(
            DirectedTree::trivial("r"), {},
            {{"r", TailModel{CASeq{1, AtomicMeasure::dirac(1, Rational(1, 8))}, 1}}}));
    for (auto _ : state) {
        auto cert = che_joint(JointSpec{members, 1});
        benchmark::DoNotOptimize(cert.has_value());
    }
}
BENCHMARK(CheJointConstruction)->Arg(2)->Arg(8)->Arg(32);

void TruncationPowers(benchmark::State& state) {
    ShiftModel star = two_arm_star(Rational(2, 5));
    Truncation tr(star, static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state) {
        for (std::size_t v : tr.safe_sites(4)) {
            auto col = tr.power_column(v, 4);
            benchmark::DoNotOptimize(col.size());
        }
    }
}
BENCHMARK(TruncationPowers)->Arg(12)->Arg(24);

} // namespace

BENCHMARK_MAIN();
