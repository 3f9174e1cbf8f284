#ifndef LPIS_MODELS_HPP
#define LPIS_MODELS_HPP

#include "lpis/liealg.hpp"
#include "lpis/vfield.hpp"

#include <string>
#include <vector>

namespace lpis {

/// Default rational instantiation of the symbolic parameters that appear in
/// the fixture subalgebra lists: a = 1, alpha = 3/5, beta = 4/5 (so that
/// alpha^2 + beta^2 = 1), sigma = 1, tau = 1.
Parameters default_parameters();

/// Names accepted by builtin_model.
std::vector<std::string> builtin_model_names();

/// "shallow-water" (L9 of the 2D shallow water equations), "mhd" (L11 of
/// ideal MHD) and "sw-prolonged-k" (the factor operator of X10+X12 acting on
/// t, y, v, h and the auxiliary variable k). Throws InputError for unknown names.
ModelPtr builtin_model(const std::string& name);

/// A named list of subalgebras of one builtin model, written in the
/// subalgebra syntax with symbolic parameters.
struct FixtureList {
    std::string name;
    std::string model;
    std::vector<std::string> subalgebras;
    std::string note;
};

std::vector<std::string> fixture_list_names();
const FixtureList& fixture_list(const std::string& name);

/// Parses every entry of a fixture list against its builtin model.
std::vector<Subalgebra> instantiate(const FixtureList& list, const Parameters& params = default_parameters());

/// Shallow-water reduction operators appended to {X1, X4}: the subalgebra
/// strings "X1, X4, <op>" for each entry of "sw.reduction_ops" (likewise for MHD).
std::vector<std::string> extend_with_operators(const std::string& base, const FixtureList& ops);

} // namespace lpis

#endif
