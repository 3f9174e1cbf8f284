#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lpis/classify.hpp"
#include "lpis/errors.hpp"
#include "lpis/models.hpp"

using namespace lpis;

namespace {

Subalgebra sub(const char* model, const std::string& text)
{
    return Subalgebra::parse(builtin_model(model), text, default_parameters());
}

} // namespace

TEST_CASE("characteristics")
{
    auto c = characteristics(sub("shallow-water", "X1, X4"));
    CHECK(c.n == 3);
    CHECK(c.m == 3);
    CHECK(c.t == 4);
    CHECK(c.sigma == 2);
    CHECK(c.mu == 2);

    c = characteristics(sub("mhd", "X1, X4"));
    CHECK(c.rank_xi == 1);
    CHECK(c.rank_xieta == 2);
    CHECK(c.t == 10);
    CHECK(c.sigma == 3);
    CHECK(c.mu == 7);

    c = characteristics(sub("mhd", "X2, X3, X5, X6, X7"));
    CHECK(c.rank_xi == 2);
    CHECK(c.rank_xieta == 5);
    CHECK(c.t == 7);
    CHECK(c.sigma == 2);
    CHECK(c.mu == 5);
}

TEST_CASE("invariant-solution criterion")
{
    CHECK(admits_invariant_solution(sub("mhd", "X5, X6")));
    CHECK_FALSE(admits_invariant_solution(sub("shallow-water", "X1, X4")));
    for (const auto& g : builtin_model("mhd")->basis()) {
        CHECK(admits_invariant_solution(Subalgebra::parse(builtin_model("mhd"), g.name())));
    }
}

TEST_CASE("PIS types")
{
    auto types = pis_types(sub("shallow-water", "X1, X4"));
    REQUIRE(types.size() == 1);
    CHECK(types[0] == PisType{2, 1, true, false});

    auto reg = regular_type(characteristics(sub("mhd", "X1, X4")));
    REQUIRE(reg);
    CHECK(reg->rho == 3);
    CHECK(reg->delta == 1);

    reg = regular_type(characteristics(sub("mhd", "X2, X3, X5, X6")));
    REQUIRE(reg);
    CHECK(reg->rho == 2);
    CHECK(reg->delta == 2);

    // delta <= 0 is filtered out: one-dimensional subalgebras give no PIS
    CHECK(pis_types(sub("mhd", "X7")).empty());

    // hand-made characteristics: window [2, 3) with delta = 2 - 4 + 2 = 0
    const Characteristics c{3, 2, 1, 1, 4, 2, 2};
    CHECK(pis_types(c).empty());

    types = pis_types(sub("shallow-water", "X1, X4, X10+X12"));
    REQUIRE(types.size() == 2);
    CHECK(types[0] == PisType{1, 1, true, false});
    CHECK(types[1] == PisType{2, 2, false, false});
}

TEST_CASE("two-step condition")
{
    CHECK(two_step_condition(sub("shallow-water", "X1, X4, X10+X12"), sub("shallow-water", "X1, X4")));
    CHECK_FALSE(two_step_condition(sub("mhd", "X2, X3, X5, X6"), sub("mhd", "X2, X5")));
    const auto n = sub("mhd", "X2, X3, X5, X6");
    CHECK(two_step_condition(n, n));
    CHECK_THROWS_AS(two_step_condition(sub("shallow-water", "X1, X4, X10+X12"), sub("shallow-water", "X1")), InputError);
    CHECK_THROWS_AS(two_step_condition(sub("shallow-water", "X1, X4"), sub("shallow-water", "X2")), InputError);
}

TEST_CASE("decomposition witnesses")
{
    auto w = decomposition_witness(sub("shallow-water", "X1, X4, X2"), 2);
    REQUIRE(w.witness);
    CHECK(w.witness->ideal.same_span(sub("shallow-water", "X1, X4")));
    CHECK(w.witness->mu_equal);

    CHECK_FALSE(decomposition_witness(sub("mhd", "X2, X3, X5, X6"), 2).witness);
    CHECK_FALSE(decomposition_witness(sub("mhd", "X2, X3, X7"), 2).witness);
    CHECK_THROWS_AS(decomposition_witness(sub("mhd", "X5, X6"), 2), InputError);
}

TEST_CASE("classification reports")
{
    auto r = classify(sub("mhd", "X7"));
    CHECK(r.verdict == "admits invariant solution (criterion satisfied); no PIS");
    CHECK_FALSE(r.decomposition);

    r = classify(sub("mhd", "X2, X3, X5, X6, X7"));
    REQUIRE(r.regular_type);
    CHECK(*r.regular_type == PisType{2, 3, true, false});
    CHECK(r.verdict == "indecomposable within coeff_bound 2");

    r = classify(sub("shallow-water", "X1, X4, X10+X12"));
    CHECK(r.verdict == "decomposable");
    CHECK(r.decomposable());
}

TEST_CASE("hierarchy")
{
    const std::vector<Subalgebra> list{sub("shallow-water", "X1, X4"), sub("shallow-water", "X1, X4, X2"),
                                       sub("shallow-water", "X1, X4, X10+X12")};
    const auto h = build_hierarchy(list, 2);
    CHECK(h.nodes.size() == 3);
    CHECK(h.edges.size() == 2);
    for (const auto& e : h.edges) {
        CHECK(e.to == 0);
        CHECK(h.nodes[e.to].dimension() < h.nodes[e.from].dimension());
    }
    REQUIRE(h.roots.size() == 1);
    CHECK(h.roots[0] == 0);

    const auto single = build_hierarchy({sub("mhd", "X1, X4")}, 2);
    CHECK(single.nodes.size() == 1);
    CHECK(single.edges.empty());

    CHECK(build_hierarchy({}, 2).nodes.empty());

    const auto five = build_hierarchy(instantiate(fixture_list("mhd.defect1rank2")), 2);
    CHECK(five.edges.empty());
    CHECK(five.roots.size() == 5);

    // a witness not in the list is added as a discovered node
    const auto disc = build_hierarchy({sub("shallow-water", "X1, X4, X2")}, 2);
    REQUIRE(disc.nodes.size() == 2);
    CHECK(disc.discovered[1]);
    CHECK(disc.nodes[1].same_span(sub("shallow-water", "X1, X4")));
    CHECK(disc.edges.size() == 1);
}

TEST_CASE("representation skeletons")
{
    const auto h = sub("shallow-water", "X1, X4");
    const auto s = build_representation(h, 2, find_polynomial_invariants(h));
    CHECK(s.concrete);
    REQUIRE(s.relations.size() == 2);
    CHECK(s.relations[0].text == "v = v(t, y)");
    CHECK(s.relations[1].text == "h = h(t, y)");
    REQUIRE(s.non_invariant.size() == 1);
    CHECK(s.non_invariant[0] == "u = u(t, x, y)");
    CHECK(s.delta == 1);

    const auto m = sub("mhd", "X1, X4");
    const auto sm = build_representation(m, 3, find_polynomial_invariants(m));
    CHECK(sm.relations.size() == 7);
    CHECK(sm.non_invariant.size() == 1);

    // placeholders without a basis; irregular choice counted
    const auto n = sub("mhd", "X2, X3, X5, X6");
    const auto irr = build_representation(n, 3);
    CHECK_FALSE(irr.concrete);
    CHECK(irr.relations.size() == 5);
    CHECK(irr.delta == 3);
    CHECK(irr.unresolved_choices == 5);
    REQUIRE(irr.non_invariant.size() == 3);
    CHECK(irr.non_invariant[0] == "W1 = W1(t, x, y, z), one of u, v, w, H, K, L, p, rho");

    CHECK_THROWS_AS(build_representation(h, 1), InputError);
    CHECK_THROWS_AS(build_representation(h, 3), InputError);
}

TEST_CASE("identities over all fixture subalgebras")
{
    for (const auto& name : fixture_list_names()) {
        for (const auto& s : instantiate(fixture_list(name))) {
            const auto c = characteristics(s);
            CHECK(c.t + c.rank_xieta == c.n + c.m);
            CHECK(admits_invariant_solution(c) == (c.mu == c.m));
            CHECK(c.rank_xi <= c.rank_xieta);
            if (const auto r = regular_type(c)) CHECK(r->delta == c.m - c.mu);
            for (const auto& p : pis_types(c)) {
                CHECK(p.rho >= c.sigma);
                CHECK(p.rho < std::min(c.n, c.t));
                CHECK(p.delta + c.t == c.m + p.rho);
            }
        }
    }
}
