// lpis: classification of partially invariant solutions from the command line.
//
// Exit codes: 0 success, 1 internal error, 2 invalid input, 3 verification
// tolerance violated.

#include "lpis/classify.hpp"
#include "lpis/errors.hpp"
#include "lpis/invariants.hpp"
#include "lpis/io.hpp"
#include "lpis/models.hpp"
#include "lpis/swsubmodel.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace lpis;

namespace {

enum ExitCode { kOk = 0, kInternal = 1, kInput = 2, kTolerance = 3 };

struct Common {
    std::string model;
    std::vector<std::string> params;
    std::uint64_t seed = 42;
    std::string format = "human";
};

Parameters parse_params(const std::vector<std::string>& items)
{
    Parameters out = default_parameters();
    for (const auto& item : items) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) throw InputError("--param expects name=value, got '" + item + "'");
        out[item.substr(0, eq)] = parse_rational(item.substr(eq + 1));
    }
    return out;
}

std::string model_spec(std::string spec)
{
    if (spec.starts_with("builtin:")) spec = spec.substr(8);
    if (spec.empty()) throw InputError("--model is required");
    return spec;
}

void emit(const Common& c, const ReportContext& ctx, const Json& result, const std::string& text)
{
    if (c.format == "machine") {
        Json doc = context_to_json(ctx);
        doc["result"] = result;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

void add_common(CLI::App* cmd, Common& c, bool with_model = true)
{
    if (with_model) cmd->add_option("--model", c.model, "builtin model name or model file path");
    cmd->add_option("--param", c.params, "parameter instantiation name=value (default a=1, alpha=3/5, beta=4/5, sigma=1, tau=1)");
    cmd->add_option("--seed", c.seed, "seed for random-point rank cross-checks")->capture_default_str();
    cmd->add_option("--format", c.format, "human or machine")->check(CLI::IsMember({"human", "machine"}))->capture_default_str();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Lie symmetry classification of partially invariant solutions"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    Common common;
    std::string sub;
    std::string subs_file;
    std::string out_path;
    std::string preset = "default";
    std::string fields_out;
    int coeff_bound = 2;
    int max_degree = 2;

    auto* classify_cmd = app.add_subcommand("classify", "characteristics, PIS types and decomposition verdict");
    add_common(classify_cmd, common);
    classify_cmd->add_option("--sub", sub, "subalgebra, e.g. \"X1, X4\"")->required();
    classify_cmd->add_option("--coeff-bound", coeff_bound, "coefficient bound of the ideal search")->capture_default_str();
    classify_cmd->add_option("--max-degree", max_degree, "degree bound of the invariant search")->capture_default_str();

    auto* hierarchy_cmd = app.add_subcommand("hierarchy", "two-step hierarchy of a list of subalgebras");
    add_common(hierarchy_cmd, common);
    hierarchy_cmd->add_option("--subs-file", subs_file, "file with one subalgebra per line, or fixture:<list>")->required();
    hierarchy_cmd->add_option("--coeff-bound", coeff_bound, "coefficient bound of the ideal search")->capture_default_str();

    auto* invariants_cmd = app.add_subcommand("invariants", "polynomial invariants of a subalgebra");
    add_common(invariants_cmd, common);
    invariants_cmd->add_option("--sub", sub, "subalgebra")->required();
    invariants_cmd->add_option("--max-degree", max_degree, "total degree bound")->capture_default_str();

    auto* verify_cmd = app.add_subcommand("verify-shallow-water", "numeric check of the reduced shallow-water submodel");
    add_common(verify_cmd, common, false);
    verify_cmd->add_option("--preset", preset, "parameter preset")->check(CLI::IsMember(sw::preset_names()))->capture_default_str();
    verify_cmd->add_option("--fields-out", fields_out, "write reconstructed t x y u v h samples to this file");

    auto* export_cmd = app.add_subcommand("export-model", "write a model file");
    add_common(export_cmd, common);
    export_cmd->add_option("--out", out_path, "output path (stdout if omitted)");

    auto* list_cmd = app.add_subcommand("list", "builtin models, fixture lists and presets");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kInput;
    }

    try {
        ReportContext ctx;
        ctx.seed = common.seed;

        if (*list_cmd) {
            std::cout << "models:";
            for (const auto& n : builtin_model_names()) std::cout << " " << n;
            std::cout << "\nfixture lists:";
            for (const auto& n : fixture_list_names()) std::cout << " " << n;
            std::cout << "\npresets:";
            for (const auto& n : sw::preset_names()) std::cout << " " << n;
            std::cout << "\n";
            return kOk;
        }

        if (*verify_cmd) {
            ctx.command = "verify-shallow-water";
            ctx.model = "shallow-water";
            const auto report = sw::verify(sw::preset(preset));
            if (!fields_out.empty()) {
                std::ofstream out(fields_out);
                if (!out) throw InputError("cannot write '" + fields_out + "'");
                out << fields_to_table(report.fields);
            }
            emit(common, ctx, verification_to_json(report), verification_to_text(report));
            return report.pass ? kOk : kTolerance;
        }

        const Parameters params = parse_params(common.params);
        ctx.parameters = params;
        if (coeff_bound < 0) throw InputError("--coeff-bound must be nonnegative");

        if (*hierarchy_cmd) {
            ctx.command = "hierarchy";
            if (common.model.empty() && subs_file.starts_with("fixture:")) {
                common.model = fixture_list(subs_file.substr(8)).model;
            }
            const auto model = load_model(model_spec(common.model));
            ctx.model = model->name();
            std::vector<Subalgebra> subs;
            for (const auto& s : load_subalgebra_list(subs_file)) subs.push_back(Subalgebra::parse(model, s, params));
            const auto h = build_hierarchy(subs, coeff_bound);
            Json result = hierarchy_to_json(h);
            emit(common, ctx, result, hierarchy_to_text(h));
            return kOk;
        }

        const auto model = load_model(model_spec(common.model));
        ctx.model = model->name();

        if (*export_cmd) {
            ctx.command = "export-model";
            const std::string text = model_to_json(*model).dump(2) + "\n";
            if (out_path.empty()) {
                std::cout << text;
            } else {
                save_model(*model, out_path);
            }
            return kOk;
        }

        const Subalgebra s = Subalgebra::parse(model, sub, params);
        InvariantSearchOptions search;
        search.max_degree = max_degree;
        search.seed = common.seed;

        if (*invariants_cmd) {
            ctx.command = "invariants";
            const auto basis = find_polynomial_invariants(s, search);
            Json result = invariants_to_json(basis, max_degree);
            result["subalgebra"] = s.to_string();
            emit(common, ctx, result, "subalgebra " + s.to_string() + "\n" + invariants_to_text(basis, max_degree));
            return kOk;
        }

        if (*classify_cmd) {
            ctx.command = "classify";
            const auto report = classify(s, ClassifyOptions{coeff_bound, true});
            Json result = classification_to_json(report);
            std::string text = classification_to_text(report);
            if (report.regular_type && !report.admits_invariant) {
                const auto basis = find_polynomial_invariants(s, search);
                const auto skeleton = build_representation(s, report.regular_type->rho, basis);
                result["representation"] = representation_to_json(skeleton);
                text += representation_to_text(skeleton);
                if (!basis.complete) {
                    text += "  (invariants incomplete at max degree " + std::to_string(max_degree) +
                            "; raise --max-degree for concrete relations)\n";
                }
            }
            emit(common, ctx, result, text);
            return kOk;
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInput;
    } catch (const NumericError& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return kTolerance;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kInternal;
}
