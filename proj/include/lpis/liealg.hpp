#ifndef LPIS_LIEALG_HPP
#define LPIS_LIEALG_HPP

#include "lpis/exactlinalg.hpp"
#include "lpis/qlinalg.hpp"
#include "lpis/vfield.hpp"

#include <map>
#include <string>
#include <vector>

namespace lpis {

/// Rational values substituted for symbolic parameters (a, alpha, ...).
using Parameters = std::map<std::string, Rational>;

/// Span over Q of elements of a model's ambient algebra, each given by its
/// coefficient vector in the model basis. Construction verifies linear
/// independence and closure under the bracket.
class Subalgebra {
public:
    Subalgebra(ModelPtr model, std::vector<QVector> spanning);

    /// Parses "X1, X4, X10+X12" or "2*X1-1/3*X4"; parameter names in
    /// coefficients are replaced by their values. Throws InputError.
    static Subalgebra parse(ModelPtr model, const std::string& text, const Parameters& params = {});

    const ModelPtr& model() const noexcept { return model_; }
    std::size_t dimension() const noexcept { return spanning_.size(); }
    const std::vector<QVector>& spanning() const noexcept { return spanning_; }
    const std::vector<VectorField>& fields() const noexcept { return fields_; }
    /// Reduced row echelon basis; identical for equal spans.
    const std::vector<QVector>& canonical_basis() const noexcept { return canonical_; }

    bool contains(const QVector& v) const;
    bool contains(const Subalgebra& o) const;
    bool same_span(const Subalgebra& o) const;

    /// "{X1, X4, X10+X12}".
    std::string to_string() const;

private:
    ModelPtr model_;
    std::vector<QVector> spanning_;
    std::vector<QVector> canonical_;
    std::vector<VectorField> fields_;
};

/// Lexicographic order on canonical bases, dimension first.
bool canonical_less(const Subalgebra& a, const Subalgebra& b);

/// "X10+X12", "2*X1-1/3*X4".
std::string format_combination(const SymmetryModel& model, const QVector& v);

/// Ambient coefficients of [a, b] from the structure constants.
QVector bracket(const SymmetryModel& model, const QVector& a, const QVector& b);

/// True iff every pairwise commutator of the fields lies in their rational span.
bool is_subalgebra(std::span<const VectorField> fields);

/// Same test on ambient coefficient vectors, via the structure constants.
bool is_subalgebra(const SymmetryModel& model, const std::vector<QVector>& spanning);

/// True iff [X, Y] lies in H for every X in N and Y in H. Throws InputError
/// if H is not contained in N or the models differ.
bool is_ideal(const Subalgebra& h, const Subalgebra& n);

/// Smallest ideal of N containing the seed vectors (which must lie in N).
Subalgebra ideal_closure(const std::vector<QVector>& seed, const Subalgebra& n);

/// Smallest subalgebra of the ambient algebra containing the seed vectors.
Subalgebra subalgebra_closure(const ModelPtr& model, const std::vector<QVector>& seed);

/// {X in L : [X, H] in H} for the model's ambient algebra L.
Subalgebra normalizer(const Subalgebra& h);

struct CandidateIdeals {
    std::vector<Subalgebra> ideals;
    /// The bounded single-generator sweep was skipped because it was too large.
    bool truncated = false;
};

/// Proper nonzero ideals of N reachable as ideal closures of (a) subsets of
/// N's spanning list and (b) single integer combinations with coefficients in
/// [-coeff_bound, coeff_bound]. Deduplicated and sorted by canonical_less.
/// Not a complete enumeration of the ideal lattice.
CandidateIdeals enumerate_candidate_ideals(const Subalgebra& n, int coeff_bound);

} // namespace lpis

#endif
