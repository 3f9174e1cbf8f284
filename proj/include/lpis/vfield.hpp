#ifndef LPIS_VFIELD_HPP
#define LPIS_VFIELD_HPP

#include "lpis/expr.hpp"
#include "lpis/qlinalg.hpp"

#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace lpis {

/// First-order operator  sum_i c_i(z) d/dz^i  on the space of all model
/// variables z = (x, u). Components are stored in variable order, so the
/// first n are the xi coefficients and the remaining m the eta coefficients.
class VectorField {
public:
    VectorField(std::string name, VariablesPtr vars);
    VectorField(std::string name, std::vector<Expression> components);

    const std::string& name() const noexcept { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }
    const VariablesPtr& variables() const noexcept { return vars_; }
    const std::vector<Expression>& components() const noexcept { return comps_; }
    const Expression& component(std::size_t i) const { return comps_.at(i); }
    void set_component(std::size_t i, Expression e);

    bool is_zero() const;

    VectorField& operator+=(const VectorField& o);
    VectorField& operator-=(const VectorField& o);
    VectorField& operator*=(const Rational& c);
    friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
    friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
    friend VectorField operator*(VectorField a, const Rational& c) { return a *= c; }
    /// Component-wise equality; names are ignored.
    friend bool operator==(const VectorField& a, const VectorField& b);

    /// Operator form such as "t*D[x]+D[u]".
    std::string to_string() const;

private:
    std::string name_;
    VariablesPtr vars_;
    std::vector<Expression> comps_;
};

/// X(e) = sum_i xi^i de/dx^i + sum_k eta^k de/du^k.
Expression apply_field(const VectorField& x, const Expression& e);

/// Lie bracket [A, B]^i = A(b^i) - B(a^i).
VectorField commutator(const VectorField& a, const VectorField& b);

/// Rational linear combination sum_j c_j fields_j.
VectorField combine(std::span<const VectorField> fields, const QVector& coefficients, std::string name = {});

/// Textual generator description used to build models.
struct GeneratorSpec {
    std::string name;
    std::map<std::string, std::string> xi;
    std::map<std::string, std::string> eta;
};

class SymmetryModel;
using ModelPtr = std::shared_ptr<const SymmetryModel>;

/// Independent and dependent variables plus a basis of the admitted Lie
/// algebra. The basis is verified linearly independent over the rationals
/// and closed under the bracket; the structure constants are cached.
class SymmetryModel {
public:
    static ModelPtr create(std::string name, std::vector<std::string> independent,
                           std::vector<std::string> dependent, const std::vector<GeneratorSpec>& generators);
    static ModelPtr create(std::string name, std::vector<std::string> independent,
                           std::vector<std::string> dependent, std::vector<VectorField> basis);

    const std::string& name() const noexcept { return name_; }
    std::size_t n() const noexcept { return independent_.size(); }
    std::size_t m() const noexcept { return dependent_.size(); }
    std::size_t dimension() const noexcept { return basis_.size(); }
    const std::vector<std::string>& independent() const noexcept { return independent_; }
    const std::vector<std::string>& dependent() const noexcept { return dependent_; }
    const VariablesPtr& variables() const noexcept { return vars_; }
    const std::vector<VectorField>& basis() const noexcept { return basis_; }
    const VectorField& generator(std::size_t i) const { return basis_.at(i); }
    std::optional<std::size_t> generator_index(const std::string& name) const;

    /// Coefficients of [X_i, X_j] in the basis.
    const QVector& structure_constants(std::size_t i, std::size_t j) const { return structure_.at(i * basis_.size() + j); }

    /// Field with the given ambient coefficient vector.
    VectorField field(const QVector& coefficients, std::string name = {}) const;

    /// Coefficients of the generator specs that reproduce this model.
    std::vector<GeneratorSpec> generator_specs() const;

private:
    SymmetryModel() = default;

    std::string name_;
    std::vector<std::string> independent_;
    std::vector<std::string> dependent_;
    VariablesPtr vars_;
    std::vector<VectorField> basis_;
    std::vector<QVector> structure_;
};

} // namespace lpis

#endif
