#include <cmath>
#include <random>

#include "augur/instances.hpp"
#include "augur/lp.hpp"
#include "doctest.h"

using namespace augur;

namespace {

// mass entering U from outside-sink components, by definition
double oracle_lhs(const std::vector<Component>& comps, const std::vector<double>& x, unsigned mask,
                  const std::vector<NodeId>& others) {
    auto inside = [&](NodeId t) {
        for (std::size_t i = 0; i < others.size(); ++i)
            if (others[i] == t) return (mask >> i & 1) != 0;
        return false;  // the root
    };
    double lhs = 0;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        if (inside(comps[i].sink)) continue;
        bool any = false;
        for (NodeId t : comps[i].terminals) any = any || inside(t);
        if (any) lhs += x[i];
    }
    return lhs;
}

CaInstance two_terminals() {
    CaInstance inst;
    const NodeId a = inst.add_terminal(), s = inst.add_steiner(), b = inst.add_terminal();
    inst.graph.add_edge(a, s);
    inst.graph.add_edge(s, b);
    return inst;
}

}  // namespace

TEST_SUITE("lp") {

TEST_CASE("zero vector violates the smallest singleton") {
    const auto p = gen_path_family(2);
    const auto comps = enumerate_components(p.instance, 2);
    const auto terms = p.instance.terminals();
    const auto v = separate(comps, std::vector<double>(comps.size(), 0.0), terms, terms[0]);
    REQUIRE(v.has_value());
    CHECK(v->cut == std::vector<NodeId>{terms[1]});
    CHECK(v->lhs == 0.0);
}

TEST_CASE("one spanning component into the root satisfies every cut") {
    const auto p = gen_path_family(2);
    const auto terms = p.instance.terminals();
    const auto comps = enumerate_components(p.instance, 4);
    std::vector<double> x(comps.size(), 0.0);
    bool found = false;
    for (std::size_t i = 0; i < comps.size(); ++i)
        if (comps[i].terminals == terms && comps[i].sink == terms[0]) x[i] = 1, found = true;
    REQUIRE(found);
    CHECK_FALSE(separate(comps, x, terms, terms[0]).has_value());
}

TEST_CASE("separation agrees with cut enumeration") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> frac(0, 0.6);
    for (int trial = 0; trial < 30; ++trial) {
        const auto ti = gen_random_tree_instance(1 + uniform_below(rng, 4), rng());
        const auto terms = ti.instance.terminals();
        if (terms.size() < 2 || terms.size() > 6) continue;
        const auto comps = enumerate_components(ti.instance, 3);
        std::vector<double> x(comps.size());
        for (double& v : x) v = frac(rng);
        const NodeId root = terms[0];
        const std::vector<NodeId> others(terms.begin() + 1, terms.end());
        double best = 1e18;
        for (unsigned mask = 1; mask < (1u << others.size()); ++mask)
            best = std::min(best, oracle_lhs(comps, x, mask, others));
        const auto v = separate(comps, x, terms, root);
        CHECK(v.has_value() == (best < 1 - 1e-7));
        if (v) {
            CHECK(v->lhs < 1 - 1e-7);
            CHECK(cut_value(comps, x, v->cut) == doctest::Approx(v->lhs));
        }
    }
}

TEST_CASE("two terminals, one Steiner node") {
    const auto inst = two_terminals();
    const auto lp = solve_lp(inst, 2);
    CHECK(lp.objective == doctest::Approx(1.0));
    double into_root = 0;
    for (std::size_t i = 0; i < lp.components.size(); ++i)
        if (lp.components[i].sink == lp.root) into_root += lp.x[i];
    CHECK(into_root == doctest::Approx(1.0));
    LpOptions exact;
    exact.arithmetic = LpArithmetic::exact;
    const auto lx = solve_lp(inst, 2, exact);
    REQUIRE(lx.objective_exact.has_value());
    CHECK(*lx.objective_exact == Rational(1));
}

TEST_CASE("LP value below the optimum") {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 15; ++trial) {
        const auto ti = gen_random_tree_instance(1 + uniform_below(rng, 5), rng());
        const int r = static_cast<int>(ti.instance.terminals().size());
        if (r > 8) continue;
        const auto lp = solve_lp(ti.instance, r);
        CHECK(lp.objective <= ti.opt.cost() + 1e-7);
        CHECK_FALSE(separate(lp.components, lp.x, lp.terminals, lp.root).has_value());
        for (std::size_t i = 1; i < lp.objective_trace.size(); ++i)
            CHECK(lp.objective_trace[i] >= lp.objective_trace[i - 1] - 1e-9);
    }
    const auto p = gen_path_family(3);
    for (int k = 2; k <= 3; ++k) {
        const double bound = 1 + 4.0 / std::log2(static_cast<double>(k));
        CHECK(solve_lp(p.instance, k).objective <= bound * p.opt.cost() + 1e-7);
    }
}

TEST_CASE("component sampling frequencies") {
    DcrLp lp;
    lp.components.resize(2);
    std::mt19937_64 rng(99);

    lp.x = {0.0, 0.4};
    for (int i = 0; i < 100; ++i) CHECK(sample_component(lp, rng) == 1);

    auto freq = [&](std::vector<double> x) {
        lp.x = std::move(x);
        int zero = 0;
        for (int i = 0; i < 10000; ++i) zero += sample_component(lp, rng) == 0;
        return zero / 10000.0;
    };
    CHECK(freq({1, 1}) == doctest::Approx(0.5).epsilon(0.06));
    CHECK(freq({0.25, 0.75}) == doctest::Approx(0.25).epsilon(0.12));
    lp.x = {0, 0};
    CHECK_THROWS_AS(sample_component(lp, rng), std::invalid_argument);
}

}
