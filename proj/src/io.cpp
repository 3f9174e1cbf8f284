#include "lpis/io.hpp"

#include "lpis/errors.hpp"
#include "lpis/models.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace lpis {

namespace {

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

std::vector<std::string> string_list(const Json& doc, const char* key)
{
    if (!doc.contains(key) || !doc[key].is_array()) throw InputError(std::string("model file: '") + key + "' must be a list");
    std::vector<std::string> out;
    for (const auto& v : doc[key]) {
        if (!v.is_string()) throw InputError(std::string("model file: entries of '") + key + "' must be strings");
        out.push_back(v.get<std::string>());
    }
    return out;
}

std::map<std::string, std::string> expr_map(const Json& gen, const char* key)
{
    std::map<std::string, std::string> out;
    if (!gen.contains(key)) return out;
    if (!gen[key].is_object()) throw InputError(std::string("model file: generator '") + key + "' must be an object");
    for (const auto& [var, expr] : gen[key].items()) {
        if (!expr.is_string()) throw InputError("model file: coefficient of '" + var + "' must be a string");
        out.emplace(var, expr.get<std::string>());
    }
    return out;
}

std::string fmt(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

} // namespace

Json model_to_json(const SymmetryModel& model)
{
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["name"] = model.name();
    doc["independent"] = model.independent();
    doc["dependent"] = model.dependent();
    Json gens = Json::array();
    for (const auto& g : model.generator_specs()) {
        Json j;
        j["name"] = g.name;
        j["xi"] = Json::object();
        j["eta"] = Json::object();
        // keep variable order rather than alphabetical order
        for (const auto& v : model.independent()) {
            if (auto it = g.xi.find(v); it != g.xi.end()) j["xi"][v] = it->second;
        }
        for (const auto& v : model.dependent()) {
            if (auto it = g.eta.find(v); it != g.eta.end()) j["eta"][v] = it->second;
        }
        gens.push_back(std::move(j));
    }
    doc["generators"] = std::move(gens);
    return doc;
}

ModelPtr model_from_json(const Json& doc)
{
    if (!doc.is_object()) throw InputError("model file: top level must be an object");
    if (!doc.contains("schema_version") || !doc["schema_version"].is_number_integer()) {
        throw InputError("model file: missing integer 'schema_version'");
    }
    if (doc["schema_version"].get<int>() != kSchemaVersion) {
        throw InputError("model file: unsupported schema_version " + std::to_string(doc["schema_version"].get<int>()));
    }
    const std::string name = doc.contains("name") && doc["name"].is_string() ? doc["name"].get<std::string>() : "model";
    auto independent = string_list(doc, "independent");
    auto dependent = string_list(doc, "dependent");
    if (!doc.contains("generators") || !doc["generators"].is_array()) throw InputError("model file: 'generators' must be a list");
    std::vector<GeneratorSpec> specs;
    for (const auto& g : doc["generators"]) {
        if (!g.is_object() || !g.contains("name") || !g["name"].is_string()) {
            throw InputError("model file: every generator needs a string 'name'");
        }
        specs.push_back(GeneratorSpec{g["name"].get<std::string>(), expr_map(g, "xi"), expr_map(g, "eta")});
    }
    return SymmetryModel::create(name, std::move(independent), std::move(dependent), specs);
}

ModelPtr load_model(const std::string& spec)
{
    for (const auto& n : builtin_model_names()) {
        if (n == spec) return builtin_model(spec);
    }
    const std::string text = read_file(spec);
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError("model file '" + spec + "': " + e.what());
    }
    return model_from_json(doc);
}

void save_model(const SymmetryModel& model, const std::string& path)
{
    std::ofstream out(path);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << model_to_json(model).dump(2) << "\n";
}

std::vector<std::string> parse_subalgebra_lines(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        const auto last = line.find_last_not_of(" \t\r");
        out.push_back(line.substr(first, last - first + 1));
    }
    return out;
}

std::vector<std::string> load_subalgebra_list(const std::string& spec)
{
    constexpr std::string_view prefix = "fixture:";
    if (spec.starts_with(prefix)) return fixture_list(spec.substr(prefix.size())).subalgebras;
    return parse_subalgebra_lines(read_file(spec));
}

Json context_to_json(const ReportContext& ctx)
{
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["tool"] = "lpis";
    doc["version"] = kToolVersion;
    doc["command"] = ctx.command;
    doc["model"] = ctx.model;
    Json params = Json::object();
    for (const auto& [k, v] : ctx.parameters) params[k] = to_string(v);
    doc["parameters"] = std::move(params);
    doc["seed"] = ctx.seed;
    return doc;
}

Json characteristics_to_json(const Characteristics& c)
{
    return Json{{"n", c.n}, {"m", c.m}, {"rank_xi", c.rank_xi}, {"rank_xieta", c.rank_xieta},
                {"t", c.t}, {"sigma", c.sigma}, {"mu", c.mu}};
}

namespace {

Json type_to_json(const PisType& p)
{
    return Json{{"rho", p.rho}, {"delta", p.delta}, {"regular", p.regular}, {"boundary", p.boundary}};
}

} // namespace

Json classification_to_json(const ClassificationReport& r)
{
    Json doc;
    doc["subalgebra"] = r.subalgebra;
    doc["dimension"] = r.dimension;
    doc["characteristics"] = characteristics_to_json(r.characteristics);
    doc["invariant_solution_criterion"] = r.admits_invariant;
    Json types = Json::array();
    for (const auto& p : r.pis_types) types.push_back(type_to_json(p));
    doc["pis_types"] = std::move(types);
    doc["regular_type"] = r.regular_type ? type_to_json(*r.regular_type) : Json();
    if (r.decomposition) {
        Json d;
        d["coeff_bound"] = r.decomposition->coeff_bound;
        d["candidates_examined"] = r.decomposition->candidates_examined;
        d["sweep_truncated"] = r.decomposition->truncated;
        if (const auto& w = r.decomposition->witness) {
            d["witness"] = Json{{"ideal", w->ideal.to_string()},
                                {"ideal_characteristics", characteristics_to_json(w->h_characteristics)},
                                {"ideal_fails_invariant_criterion", w->ideal_fails_invariant_criterion},
                                {"two_step_criterion", w->two_step_holds},
                                {"mu_equal", w->mu_equal}};
        } else {
            d["witness"] = Json();
        }
        doc["decomposition"] = std::move(d);
    } else {
        doc["decomposition"] = Json();
    }
    doc["verdict"] = r.verdict;
    doc["notes"] = r.notes;
    return doc;
}

Json hierarchy_to_json(const Hierarchy& h)
{
    Json doc;
    doc["coeff_bound"] = h.coeff_bound;
    Json nodes = Json::array();
    for (std::size_t i = 0; i < h.nodes.size(); ++i) {
        Json n = classification_to_json(h.reports[i]);
        n["id"] = i;
        n["discovered"] = static_cast<bool>(h.discovered[i]);
        n["root"] = std::find(h.roots.begin(), h.roots.end(), i) != h.roots.end();
        nodes.push_back(std::move(n));
    }
    doc["nodes"] = std::move(nodes);
    Json edges = Json::array();
    for (const auto& e : h.edges) edges.push_back(Json{{"from", e.from}, {"to", e.to}});
    doc["edges"] = std::move(edges);
    doc["roots"] = h.roots;
    doc["root_qualifier"] = "indecomposable within coeff_bound " + std::to_string(h.coeff_bound);
    return doc;
}

Json invariants_to_json(const InvariantBasis& b, int max_degree)
{
    Json doc;
    doc["max_degree"] = max_degree;
    doc["expected_total"] = b.expected;
    doc["expected_x_only"] = b.expected_x_only;
    doc["complete"] = b.complete;
    Json list = Json::array();
    for (const auto& i : b.invariants) {
        list.push_back(Json{{"expression", i.expr.to_string()}, {"x_only", i.x_only}, {"rational", i.rational}});
    }
    doc["invariants"] = std::move(list);
    return doc;
}

Json representation_to_json(const RepresentationSkeleton& s)
{
    Json doc;
    doc["rho"] = s.rho;
    doc["delta"] = s.delta;
    doc["lambdas"] = s.lambdas;
    doc["u_invariants"] = s.u_invariants;
    Json rel = Json::array();
    for (const auto& r : s.relations) rel.push_back(r.text);
    doc["relations"] = std::move(rel);
    doc["non_invariant"] = s.non_invariant;
    doc["unresolved_choices"] = s.unresolved_choices;
    doc["concrete"] = s.concrete;
    return doc;
}

Json verification_to_json(const sw::VerificationReport& r)
{
    Json doc;
    doc["preset"] = r.preset;
    doc["preset_note"] = "initial data, parameter ranges and branch are chosen presets, not fixed by the model";
    doc["params"] = Json{{"b0", r.params.b0},         {"m", r.params.m_const},   {"lambda0", r.params.lambda0},
                         {"mu0", r.params.mu0},       {"v0", r.params.v0},       {"step", r.params.step},
                         {"mu_min", r.params.mu_min}, {"mu_max", r.params.mu_max}};
    doc["samples"] = r.samples;
    doc["lambda_range"] = {r.lambda_min, r.lambda_max};
    doc["termination_low"] = r.termination_low;
    doc["termination_high"] = r.termination_high;
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        checks.push_back(Json{{"name", c.name}, {"value", c.value}, {"tolerance", c.tolerance}, {"pass", c.pass}});
    }
    doc["checks"] = std::move(checks);
    doc["pass"] = r.pass;
    return doc;
}

std::string classification_to_text(const ClassificationReport& r)
{
    const auto& c = r.characteristics;
    std::ostringstream out;
    out << "subalgebra " << r.subalgebra << " (dim " << r.dimension << ")\n";
    out << "  n=" << c.n << " m=" << c.m << " rank(xi)=" << c.rank_xi << " rank(xi,eta)=" << c.rank_xieta << "\n";
    out << "  t=" << c.t << " sigma=" << c.sigma << " mu=" << c.mu << "\n";
    out << "  invariant-solution criterion: " << (r.admits_invariant ? "satisfied" : "not satisfied") << "\n";
    out << "  PIS types (rho,delta):";
    if (r.pis_types.empty()) out << " none";
    for (const auto& p : r.pis_types) {
        out << " " << to_string(p) << (p.regular ? " regular" : "") << (p.boundary ? " [delta=m]" : "");
        if (&p != &r.pis_types.back()) out << ",";
    }
    out << "\n";
    if (r.decomposition) {
        if (const auto& w = r.decomposition->witness) {
            out << "  witness ideal " << w->ideal.to_string() << ": t=" << w->h_characteristics.t
                << " sigma=" << w->h_characteristics.sigma << " mu=" << w->h_characteristics.mu << "\n";
        } else {
            out << "  no witness among " << r.decomposition->candidates_examined << " candidate ideals\n";
        }
    }
    out << "  verdict: " << r.verdict << "\n";
    for (const auto& n : r.notes) out << "  note: " << n << "\n";
    return out.str();
}

std::string hierarchy_to_text(const Hierarchy& h)
{
    std::ostringstream out;
    out << "hierarchy: " << h.nodes.size() << " nodes, " << h.edges.size() << " edges (coeff_bound " << h.coeff_bound << ")\n";
    for (std::size_t i = 0; i < h.nodes.size(); ++i) {
        const auto& r = h.reports[i];
        out << "  [" << i << "] " << r.subalgebra;
        if (r.regular_type) out << " regular " << to_string(*r.regular_type);
        out << " - " << r.verdict;
        if (h.discovered[i]) out << " (discovered)";
        out << "\n";
    }
    for (const auto& e : h.edges) {
        out << "  " << h.reports[e.from].subalgebra << " -> " << h.reports[e.to].subalgebra << "\n";
    }
    out << "roots (indecomposable within coeff_bound " << h.coeff_bound << "):";
    if (h.roots.empty()) out << " none";
    for (auto r : h.roots) out << " " << h.reports[r].subalgebra;
    out << "\n";
    return out.str();
}

std::string invariants_to_text(const InvariantBasis& b, int max_degree)
{
    std::ostringstream out;
    out << "invariants (max degree " << max_degree << "): found " << b.invariants.size() << " of t=" << b.expected << " ("
        << b.x_only_count() << " of sigma=" << b.expected_x_only << " in x only)" << (b.complete ? "" : " - incomplete")
        << "\n";
    for (const auto& i : b.invariants) {
        out << "  " << i.expr.to_string() << (i.x_only ? "  [x only]" : "") << (i.rational ? "  [ratio]" : "") << "\n";
    }
    return out.str();
}

std::string representation_to_text(const RepresentationSkeleton& s)
{
    std::ostringstream out;
    out << "representation of type (" << s.rho << "," << s.delta << ")" << (s.concrete ? "" : " with placeholder symbols") << "\n";
    for (const auto& r : s.relations) out << "  " << r.text << "\n";
    for (const auto& n : s.non_invariant) out << "  " << n << "\n";
    if (s.unresolved_choices) out << "  (" << s.unresolved_choices << " alternative resolutions not shown)\n";
    return out.str();
}

std::string verification_to_text(const sw::VerificationReport& r)
{
    std::ostringstream out;
    out << "shallow-water submodel, preset '" << r.preset << "' (chosen initial data)\n";
    out << "  b0=" << r.params.b0 << " m=" << r.params.m_const << " lambda0=" << r.params.lambda0 << " mu0=" << r.params.mu0
        << " step=" << r.params.step << " mu in [" << r.params.mu_min << ", " << r.params.mu_max << "]\n";
    out << "  " << r.samples << " samples, lambda in [" << fmt(r.lambda_min) << ", " << fmt(r.lambda_max) << "]\n";
    if (!r.termination_low.empty()) out << "  low end stopped: " << r.termination_low << "\n";
    if (!r.termination_high.empty()) out << "  high end stopped: " << r.termination_high << "\n";
    for (const auto& c : r.checks) {
        const bool ratio = c.name.ends_with("ratio");
        out << "  " << (c.pass ? "ok   " : "FAIL ") << c.name << " = " << fmt(c.value) << (ratio ? " (target " : " (limit ")
            << fmt(c.tolerance) << ")\n";
    }
    out << (r.pass ? "all checks passed\n" : "some checks failed\n");
    return out.str();
}

std::string fields_to_table(const std::vector<sw::FieldPoint>& fields)
{
    std::ostringstream out;
    out << "t\tx\ty\tu\tv\th\n";
    char buf[256];
    for (const auto& f : fields) {
        std::snprintf(buf, sizeof buf, "%.10g\t%.10g\t%.10g\t%.15g\t%.15g\t%.15g\n", f.t, f.x, f.y, f.u, f.v, f.h);
        out << buf;
    }
    return out.str();
}

} // namespace lpis
