#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lpis/errors.hpp"
#include "lpis/io.hpp"
#include "lpis/models.hpp"

#include <algorithm>
#include <filesystem>

using namespace lpis;

TEST_CASE("model JSON round trip preserves brackets")
{
    for (const auto& name : builtin_model_names()) {
        const auto m = builtin_model(name);
        const Json doc = model_to_json(*m);
        CHECK(doc["schema_version"] == kSchemaVersion);
        const auto back = model_from_json(doc);
        REQUIRE(back->dimension() == m->dimension());
        for (std::size_t i = 0; i < m->dimension(); ++i) {
            CHECK(back->generator(i) == m->generator(i));
            for (std::size_t j = 0; j < m->dimension(); ++j) {
                CHECK(back->structure_constants(i, j) == m->structure_constants(i, j));
            }
        }
        CHECK(model_to_json(*back).dump() == doc.dump());
    }
}

TEST_CASE("model files on disk")
{
    const auto path = std::filesystem::temp_directory_path() / "lpis_test_io_model.json";
    save_model(*builtin_model("shallow-water"), path.string());
    const auto m = load_model(path.string());
    CHECK(m->dimension() == 9);
    std::filesystem::remove(path);
    CHECK(load_model("mhd")->dimension() == 11);
    CHECK_THROWS_AS(load_model("/nonexistent/model.json"), InputError);
}

TEST_CASE("schema violations are input errors")
{
    Json doc = model_to_json(*builtin_model("shallow-water"));
    auto with = [&](auto mutate) {
        Json d = doc;
        mutate(d);
        return d;
    };
    CHECK_THROWS_AS(model_from_json(Json::array()), InputError);
    CHECK_THROWS_AS(model_from_json(with([](Json& d) { d["schema_version"] = 7; })), InputError);
    CHECK_THROWS_AS(model_from_json(with([](Json& d) { d.erase("schema_version"); })), InputError);
    CHECK_THROWS_AS(model_from_json(with([](Json& d) { d["generators"] = "X1"; })), InputError);
    CHECK_THROWS_AS(model_from_json(with([](Json& d) { d["independent"] = {1, 2}; })), InputError);
    CHECK_THROWS_AS(model_from_json(with([](Json& d) { d["generators"][0].erase("name"); })), InputError);
    CHECK_THROWS_AS(model_from_json(with([](Json& d) { d["generators"][0]["xi"]["x"] = "1+"; })), InputError);
    // dropping X13 breaks closure of [X10, X12]
    CHECK_THROWS_AS(model_from_json(with([](Json& d) { d["generators"].erase(d["generators"].size() - 1); })),
                    InputError);
}

TEST_CASE("subalgebra lists")
{
    const auto lines = parse_subalgebra_lines("# header\nX1, X4\n\n   \nX1, X4, X2\n# tail\n");
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "X1, X4");
    CHECK(lines[1] == "X1, X4, X2");
    CHECK(parse_subalgebra_lines("").empty());
    CHECK(load_subalgebra_list("fixture:sw.reduction_ops").size() == 8);
    CHECK_THROWS_AS(load_subalgebra_list("fixture:none"), InputError);
    CHECK_THROWS_AS(load_subalgebra_list("/nonexistent/list.txt"), InputError);
}

TEST_CASE("reports are deterministic and carry the context")
{
    const auto s = Subalgebra::parse(builtin_model("shallow-water"), "X1, X4", default_parameters());
    const auto a = classification_to_json(classify(s)).dump();
    const auto b = classification_to_json(classify(s)).dump();
    CHECK(a == b);
    CHECK(a.find("\"verdict\"") != std::string::npos);
    const Json ctx = context_to_json({"classify", "shallow-water", default_parameters(), 42});
    CHECK(ctx["schema_version"] == kSchemaVersion);
    CHECK(ctx["version"] == kToolVersion);
    CHECK(ctx["seed"] == 42);
    CHECK(classification_to_text(classify(s)).find("(2,1)") != std::string::npos);

    const auto inv = find_polynomial_invariants(s);
    CHECK(invariants_to_json(inv, 2)["invariants"].size() == 4);
    CHECK(invariants_to_text(inv, 2).find("h") != std::string::npos);
}

TEST_CASE("field table")
{
    const std::vector<sw::FieldPoint> pts{{0, 1, 2, 3, 4, 5}, {1, 1, 1, 1, 1, 1}};
    const auto t = fields_to_table(pts);
    CHECK(t.rfind("t\tx\ty\tu\tv\th\n", 0) == 0);
    CHECK(std::count(t.begin(), t.end(), '\n') == 3);
}
