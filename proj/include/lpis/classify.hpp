#ifndef LPIS_CLASSIFY_HPP
#define LPIS_CLASSIFY_HPP

#include "lpis/invariants.hpp"
#include "lpis/liealg.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lpis {

/// Integer data of a subalgebra H acting on n independent and m dependent variables.
struct Characteristics {
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t rank_xi = 0;
    std::size_t rank_xieta = 0;
    /// Total number of functionally independent invariants, n + m - rank_xieta.
    std::size_t t = 0;
    /// Invariants depending on x only, n - rank_xi.
    std::size_t sigma = 0;
    /// Invariants essentially depending on u, t - sigma.
    std::size_t mu = 0;

    friend bool operator==(const Characteristics&, const Characteristics&) = default;
};

/// Rank rho and defect delta of a partially invariant solution.
struct PisType {
    std::size_t rho = 0;
    std::size_t delta = 0;
    bool regular = false;
    /// delta == m: no invariant relation constrains u at all.
    bool boundary = false;

    friend bool operator==(const PisType&, const PisType&) = default;
};

Characteristics characteristics(const Subalgebra& s);

/// Invariant-solution rank criterion rank(xi) == rank(xi, eta). Necessary only.
bool admits_invariant_solution(const Subalgebra& s);
bool admits_invariant_solution(const Characteristics& c);

/// Every rho with sigma <= rho < min(n, t) and delta = m - t + rho > 0.
std::vector<PisType> pis_types(const Characteristics& c);
std::vector<PisType> pis_types(const Subalgebra& s);

/// The entry with rho == sigma, if it survives the defect filter.
std::optional<PisType> regular_type(const Characteristics& c);

/// Two-step rank identity
///   rank N(xi,eta) - rank N(xi) == rank H(xi,eta) - rank H(xi).
/// Throws InputError unless H is an ideal of N.
bool two_step_condition(const Subalgebra& n, const Subalgebra& h);

struct DecompositionWitness {
    Subalgebra ideal;
    Characteristics n_characteristics;
    Characteristics h_characteristics;
    /// Both always true for a returned witness; kept for reporting.
    bool ideal_fails_invariant_criterion = true;
    bool two_step_holds = true;
    bool mu_equal = true;
};

struct DecompositionSearch {
    std::optional<DecompositionWitness> witness;
    int coeff_bound = 0;
    std::size_t candidates_examined = 0;
    /// The candidate enumeration skipped its bounded sweep.
    bool truncated = false;
};

/// First proper ideal H of N (smallest dimension, then canonical order) that
/// admits no invariant solution and satisfies the two-step identity. Throws
/// InputError if N itself admits an invariant solution.
DecompositionSearch decomposition_witness(const Subalgebra& n, int coeff_bound);

struct ClassifyOptions {
    int coeff_bound = 2;
    bool search_decomposition = true;
};

struct ClassificationReport {
    std::string subalgebra;
    std::size_t dimension = 0;
    Characteristics characteristics;
    bool admits_invariant = false;
    std::vector<PisType> pis_types;
    std::optional<PisType> regular_type;
    /// Present when the subalgebra generates a PIS and the search ran.
    std::optional<DecompositionSearch> decomposition;
    /// "admits invariant solution (criterion satisfied); no PIS" (or
    /// "...; decomposition not searched" when the rank window is nonempty),
    /// "no admissible PIS type", "decomposable" or
    /// "indecomposable within coeff_bound <b>".
    std::string verdict;
    std::vector<std::string> notes;

    bool decomposable() const { return decomposition && decomposition->witness.has_value(); }
};

ClassificationReport classify(const Subalgebra& s, const ClassifyOptions& options = {});

struct HierarchyEdge {
    std::size_t from = 0;
    std::size_t to = 0;

    friend bool operator==(const HierarchyEdge&, const HierarchyEdge&) = default;
};

/// Nodes are the input subalgebras (duplicates by span merged) followed by any
/// witness ideals discovered during classification. Edge N -> H whenever H is
/// a proper ideal of N that admits no invariant solution and satisfies the
/// two-step identity.
struct Hierarchy {
    std::vector<Subalgebra> nodes;
    std::vector<ClassificationReport> reports;
    std::vector<bool> discovered;
    std::vector<HierarchyEdge> edges;
    /// PIS-generating nodes without outgoing edges: indecomposable within bound.
    std::vector<std::size_t> roots;
    int coeff_bound = 0;
};

Hierarchy build_hierarchy(const std::vector<Subalgebra>& subalgebras, int coeff_bound);

struct InvariantRelation {
    /// "v = v(t, y)" or "h*(t^2+1) = Phi2(t, y)".
    std::string text;
    std::string invariant;
};

struct RepresentationSkeleton {
    std::size_t rho = 0;
    std::size_t delta = 0;
    /// sigma invariant independent variables.
    std::vector<std::string> lambdas;
    /// mu invariants essentially depending on u.
    std::vector<std::string> u_invariants;
    /// t - rho relations expressing resolved invariants through the rest.
    std::vector<InvariantRelation> relations;
    /// delta dependent variables left as arbitrary functions of all x, e.g. "u = u(t, x, y)".
    std::vector<std::string> non_invariant;
    /// Alternative choices of resolved invariants not emitted (irregular case).
    std::size_t unresolved_choices = 0;
    /// Built from a found invariant basis rather than placeholder symbols.
    bool concrete = false;
};

/// Throws InputError if rho lies outside the admissible window or the basis
/// contains a non-invariant.
RepresentationSkeleton build_representation(const Subalgebra& s, std::size_t rho,
                                            const std::optional<InvariantBasis>& basis = std::nullopt);

std::string to_string(const PisType& t);

} // namespace lpis

#endif
