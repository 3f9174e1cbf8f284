#ifndef LPIS_IO_HPP
#define LPIS_IO_HPP

#include "lpis/classify.hpp"
#include "lpis/invariants.hpp"
#include "lpis/swsubmodel.hpp"
#include "lpis/vfield.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace lpis {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "1.0.0";

using Json = nlohmann::ordered_json;

/// {"schema_version", "name", "independent", "dependent",
///  "generators": [{"name", "xi": {var: expr}, "eta": {var: expr}}]}
Json model_to_json(const SymmetryModel& model);

/// Throws InputError on schema violations and on anything SymmetryModel::create rejects.
ModelPtr model_from_json(const Json& doc);

/// A builtin model name or a path to a model file.
ModelPtr load_model(const std::string& spec);
void save_model(const SymmetryModel& model, const std::string& path);

/// One subalgebra per line; blank lines and lines starting with '#' are skipped.
std::vector<std::string> parse_subalgebra_lines(const std::string& text);

/// "fixture:<list name>" or a path to a file in the parse_subalgebra_lines format.
std::vector<std::string> load_subalgebra_list(const std::string& spec);

/// Common header of every report.
struct ReportContext {
    std::string command;
    std::string model;
    Parameters parameters;
    std::uint64_t seed = 42;
};

Json context_to_json(const ReportContext& ctx);

Json characteristics_to_json(const Characteristics& c);
Json classification_to_json(const ClassificationReport& r);
Json hierarchy_to_json(const Hierarchy& h);
Json invariants_to_json(const InvariantBasis& b, int max_degree);
Json representation_to_json(const RepresentationSkeleton& s);
Json verification_to_json(const sw::VerificationReport& r);

std::string classification_to_text(const ClassificationReport& r);
std::string hierarchy_to_text(const Hierarchy& h);
std::string invariants_to_text(const InvariantBasis& b, int max_degree);
std::string representation_to_text(const RepresentationSkeleton& s);
std::string verification_to_text(const sw::VerificationReport& r);

/// Columns t, x, y, u, v, h separated by tabs with a header line.
std::string fields_to_table(const std::vector<sw::FieldPoint>& fields);

} // namespace lpis

#endif
