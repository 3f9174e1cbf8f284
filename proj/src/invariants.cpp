#include "lpis/invariants.hpp"

#include "lpis/errors.hpp"
#include "lpis/exactlinalg.hpp"

#include <algorithm>
#include <numeric>

namespace lpis {

std::size_t InvariantBasis::x_only_count() const
{
    return static_cast<std::size_t>(
        std::count_if(invariants.begin(), invariants.end(), [](const Invariant& i) { return i.x_only; }));
}

std::size_t InvariantBasis::u_dependent_count() const
{
    return invariants.size() - x_only_count();
}

std::vector<Expression> InvariantBasis::expressions() const
{
    std::vector<Expression> out;
    for (const auto& i : invariants) out.push_back(i.expr);
    return out;
}

bool verify_invariant(std::span<const VectorField> fields, const Expression& e)
{
    for (const auto& f : fields) {
        if (!apply_field(f, e).is_zero()) return false;
    }
    return true;
}

bool verify_invariant(const Subalgebra& s, const Expression& e)
{
    return verify_invariant(s.fields(), e);
}

namespace {

ExprMatrix jacobian(std::span<const Expression> exprs, std::span<const std::size_t> wrt)
{
    ExprMatrix j(exprs.front().variables(), exprs.size(), wrt.size());
    for (std::size_t r = 0; r < exprs.size(); ++r) {
        for (std::size_t c = 0; c < wrt.size(); ++c) j(r, c) = differentiate(exprs[r], wrt[c]);
    }
    return j;
}

std::vector<std::size_t> all_indices(std::size_t n)
{
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), 0);
    return v;
}

// Monomials in the given variables with total degree in [min_degree, max_degree],
// ascending by degree and in descending grlex order within one degree.
std::vector<Exponents> monomials(std::size_t nvars, std::span<const std::size_t> over, int min_degree, int max_degree)
{
    std::vector<Exponents> out;
    Exponents e(nvars, 0);
    auto rec = [&](auto&& self, std::size_t pos, int remaining) -> void {
        if (pos == over.size()) {
            const auto d = static_cast<int>(total_degree(e));
            if (d >= min_degree) out.push_back(e);
            return;
        }
        for (int k = remaining; k >= 0; --k) {
            e[over[pos]] = static_cast<std::uint16_t>(k);
            self(self, pos + 1, remaining - k);
        }
        e[over[pos]] = 0;
    };
    rec(rec, 0, max_degree);
    std::stable_sort(out.begin(), out.end(), [](const Exponents& a, const Exponents& b) {
        const auto da = total_degree(a);
        const auto db = total_degree(b);
        if (da != db) return da < db;
        return GrlexGreater{}(a, b);
    });
    return out;
}

// Polynomials P = sum c_j M_j with X(P) = w_X P for every field.
std::vector<Polynomial> weighted_kernel(std::span<const VectorField> fields, const std::vector<Exponents>& monos,
                                        const std::vector<Expression>& weights, const VariablesPtr& vars)
{
    const std::size_t nv = vars->size();
    std::vector<Expression> basis;
    basis.reserve(monos.size());
    for (const auto& m : monos) basis.emplace_back(vars, Polynomial::monomial(m, Rational(1)));

    QMatrix system(0, monos.size());
    std::vector<Expression> column;
    for (std::size_t a = 0; a < fields.size(); ++a) {
        column.clear();
        for (const auto& b : basis) {
            Expression v = apply_field(fields[a], b);
            if (!weights.empty() && !weights[a].is_zero()) v -= weights[a] * b;
            column.push_back(std::move(v));
        }
        const QMatrix part = expression_coordinates(column);
        for (std::size_t r = 0; r < part.rows(); ++r) system.append_row(part.row(r));
    }
    std::vector<Polynomial> out;
    for (const auto& v : nullspace(std::move(system))) {
        Polynomial p(nv);
        for (std::size_t j = 0; j < monos.size(); ++j) {
            if (v[j] != 0) p.add_term(monos[j], v[j]);
        }
        out.push_back(p.monic());
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const Polynomial& a, const Polynomial& b) { return a.total_degree() < b.total_degree(); });
    return out;
}

class IndependentSet {
public:
    IndependentSet(std::size_t nvars, std::uint64_t seed) : wrt_(all_indices(nvars)), points_(seed) {}

    const std::vector<Expression>& items() const { return items_; }

    bool try_add(const Expression& e)
    {
        if (e.is_constant()) return false;
        std::vector<Expression> trial = items_;
        trial.push_back(e);
        const ExprMatrix j = jacobian(trial, wrt_);
        bool independent = false;
        for (int attempt = 0; attempt < 4 && !independent; ++attempt) {
            try {
                independent = sample_rank(j, points_.next(wrt_.size())) == trial.size();
            } catch (const PoleError&) {
            }
        }
        if (!independent) independent = generic_rank(j) == trial.size();
        if (independent) items_.push_back(e);
        return independent;
    }

private:
    std::vector<std::size_t> wrt_;
    SamplePoints points_;
    std::vector<Expression> items_;
};

bool depends_on_any(const Expression& e, std::size_t first, std::size_t last)
{
    for (std::size_t i = first; i < last; ++i) {
        if (e.depends_on(i)) return true;
    }
    return false;
}

} // namespace

std::size_t functional_rank(std::span<const Expression> exprs, std::span<const std::size_t> wrt)
{
    if (exprs.empty() || wrt.empty()) return 0;
    return generic_rank(jacobian(exprs, wrt));
}

std::size_t functional_rank(std::span<const Expression> exprs)
{
    if (exprs.empty()) return 0;
    const auto wrt = all_indices(exprs.front().variables()->size());
    return functional_rank(exprs, wrt);
}

InvariantBasis find_polynomial_invariants(const Subalgebra& s, const InvariantSearchOptions& options)
{
    if (options.max_degree < 1) throw InputError("max_degree must be at least 1");
    const auto& model = *s.model();
    const auto& vars = model.variables();
    const std::size_t nv = vars->size();
    const std::size_t n = model.n();

    InvariantBasis out;
    std::size_t rank_xi = 0;
    std::size_t rank_xieta = 0;
    if (s.dimension() > 0) {
        const auto cm = coefficient_matrices(s.fields(), n);
        rank_xi = generic_rank(cm.xi);
        rank_xieta = generic_rank(cm.xi_eta);
    }
    out.expected = nv - rank_xieta;
    out.expected_x_only = n - rank_xi;

    IndependentSet chosen(nv, options.seed);
    auto add = [&](const Expression& e, bool rational) {
        if (chosen.items().size() >= out.expected) return;
        if (chosen.try_add(e)) out.invariants.push_back(Invariant{e, !depends_on_any(e, n, nv), rational});
    };

    const auto x_vars = all_indices(n);
    const auto all_vars = all_indices(nv);

    // Ratios P/Q of semi-invariants in the listed variables, x-only ones first.
    auto rational_phase = [&](std::span<const std::size_t> over) {
        std::vector<Polynomial> denominators;
        auto push_candidate = [&](const Polynomial& q) {
            if (q.is_constant()) return;
            for (std::size_t v = 0; v < nv; ++v) {
                if (q.contains(v) && std::find(over.begin(), over.end(), v) == over.end()) return;
            }
            const Polynomial m = q.monic();
            if (std::find(denominators.begin(), denominators.end(), m) == denominators.end()) denominators.push_back(m);
        };
        for (const auto& f : s.fields()) {
            for (const auto& c : f.components()) {
                push_candidate(c.numerator());
                push_candidate(c.denominator());
            }
        }
        for (const auto& m : monomials(nv, over, 1, options.max_degree)) push_candidate(Polynomial::monomial(m, Rational(1)));

        const auto candidate_monos = monomials(nv, over, 0, options.max_degree);
        std::vector<Expression> x_only;
        std::vector<Expression> mixed;
        for (const auto& q : denominators) {
            const Expression qe(vars, q);
            std::vector<Expression> weights;
            bool semi = true;
            bool all_zero = true;
            for (const auto& f : s.fields()) {
                Expression w = apply_field(f, qe) / qe;
                if (!w.is_polynomial()) {
                    semi = false;
                    break;
                }
                all_zero = all_zero && w.is_zero();
                weights.push_back(std::move(w));
            }
            if (!semi || all_zero) continue;
            for (const auto& p : weighted_kernel(s.fields(), candidate_monos, weights, vars)) {
                const Expression ratio = Expression(vars, p) / qe;
                if (ratio.is_constant()) continue;
                (depends_on_any(ratio, n, nv) ? mixed : x_only).push_back(ratio);
            }
        }
        for (const auto& e : x_only) {
            if (out.x_only_count() >= out.expected_x_only) break;
            add(e, true);
        }
        for (const auto& e : mixed) add(e, true);
    };

    // x-only invariants first so that the basis comes out in separated form.
    for (const auto& p : weighted_kernel(s.fields(), monomials(nv, x_vars, 1, options.max_degree), {}, vars)) {
        if (out.x_only_count() >= out.expected_x_only) break;
        add(Expression(vars, p), false);
    }
    if (out.x_only_count() < out.expected_x_only && options.rational) rational_phase(x_vars);
    for (const auto& p : weighted_kernel(s.fields(), monomials(nv, all_vars, 1, options.max_degree), {}, vars)) {
        add(Expression(vars, p), false);
    }
    if (chosen.items().size() < out.expected && options.rational) rational_phase(all_vars);

    // x-only entries first, preserving discovery order inside each group.
    std::stable_partition(out.invariants.begin(), out.invariants.end(), [](const Invariant& i) { return i.x_only; });
    out.complete = out.invariants.size() == out.expected;
    return out;
}

} // namespace lpis
