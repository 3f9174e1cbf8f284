#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lpis/errors.hpp"
#include "lpis/models.hpp"
#include "lpis/parser.hpp"
#include "lpis/vfield.hpp"

using namespace lpis;

namespace {

VectorField field_of(const ModelPtr& m, const std::string& name)
{
    return m->generator(*m->generator_index(name));
}

} // namespace

TEST_CASE("apply_field on the shallow-water invariants of {X1, X4}")
{
    const auto sw = builtin_model("shallow-water");
    const auto& vars = sw->variables();
    for (const char* inv : {"t", "y", "v", "h"}) {
        CHECK(apply_field(field_of(sw, "X4"), parse_expr(inv, vars)).is_zero());
        CHECK(apply_field(field_of(sw, "X1"), parse_expr(inv, vars)).is_zero());
    }
    CHECK(apply_field(field_of(sw, "X4"), parse_expr("u", vars)) == parse_expr("1", vars));
    CHECK(apply_field(field_of(sw, "X12"), parse_expr("u", vars)) == parse_expr("x-t*u", vars));
}

TEST_CASE("commutators of L9 match hand computation")
{
    const auto sw = builtin_model("shallow-water");
    // [X10, X12] = [d_t, t^2 d_t + t x d_x + ...] = X13
    VectorField c = commutator(field_of(sw, "X10"), field_of(sw, "X12"));
    CHECK(c == field_of(sw, "X13"));
    // [X4, X10] = -X1
    CHECK(commutator(field_of(sw, "X4"), field_of(sw, "X10")) == field_of(sw, "X1") * Rational(-1));
    // [X1, X4] = 0
    CHECK(commutator(field_of(sw, "X1"), field_of(sw, "X4")).is_zero());
}

TEST_CASE("bracket is antisymmetric and satisfies Jacobi on both fixtures")
{
    for (const char* name : {"shallow-water", "mhd"}) {
        const auto m = builtin_model(name);
        const auto& b = m->basis();
        for (std::size_t i = 0; i < b.size(); ++i) {
            for (std::size_t j = 0; j < b.size(); ++j) {
                CHECK((commutator(b[i], b[j]) + commutator(b[j], b[i])).is_zero());
                for (std::size_t k = j + 1; k < b.size(); ++k) {
                    const VectorField jac = commutator(b[i], commutator(b[j], b[k])) +
                                            commutator(b[j], commutator(b[k], b[i])) +
                                            commutator(b[k], commutator(b[i], b[j]));
                    CHECK(jac.is_zero());
                }
            }
        }
    }
}

TEST_CASE("structure constants reproduce field commutators")
{
    const auto m = builtin_model("mhd");
    const auto& b = m->basis();
    for (std::size_t i = 0; i < b.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            CHECK(m->field(m->structure_constants(i, j)) == commutator(b[i], b[j]));
        }
    }
}

TEST_CASE("model construction validates its input")
{
    using Specs = std::vector<GeneratorSpec>;
    CHECK_THROWS_AS(SymmetryModel::create("dup", {"t"}, {"u"}, Specs{{"A", {{"t", "1"}}, {}}, {"A", {{"t", "t"}}, {}}}),
                    InputError);
    CHECK_THROWS_AS(SymmetryModel::create("dep", {"t"}, {"u"}, Specs{{"A", {{"t", "1"}}, {}}, {"B", {{"t", "2"}}, {}}}),
                    InputError);
    // {d_t, t^2 d_t} is not closed: the bracket 2t d_t is missing
    CHECK_THROWS_AS(SymmetryModel::create("open", {"t"}, {"u"}, Specs{{"A", {{"t", "1"}}, {}}, {"B", {{"t", "t^2"}}, {}}}),
                    InputError);
    CHECK_THROWS_AS(SymmetryModel::create("var", {"t"}, {"u"}, Specs{{"A", {{"q", "1"}}, {}}}), InputError);
    CHECK_THROWS_AS(SymmetryModel::create("clash", {"t"}, {"t"}, Specs{{"A", {{"t", "1"}}, {}}}), InputError);
    const auto sl2 = SymmetryModel::create("sl2", {"t"}, {"u"},
                                           Specs{{"A", {{"t", "1"}}, {}}, {"B", {{"t", "t"}}, {}}, {"C", {{"t", "t^2"}}, {}}});
    CHECK(sl2->dimension() == 3);
}

TEST_CASE("generator specs reproduce the model")
{
    const auto m = builtin_model("sw-prolonged-k");
    const auto again = SymmetryModel::create("copy", m->independent(), m->dependent(), m->generator_specs());
    CHECK(again->generator(0) == m->generator(0));
    CHECK(m->generator(0).to_string().find("D[t]") != std::string::npos);
}
