#include "lpis/classify.hpp"

#include "lpis/errors.hpp"
#include "lpis/exactlinalg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace lpis {

Characteristics characteristics(const Subalgebra& s)
{
    const auto& model = *s.model();
    Characteristics c;
    c.n = model.n();
    c.m = model.m();
    if (s.dimension() > 0) {
        const auto cm = coefficient_matrices(s.fields(), c.n);
        c.rank_xi = generic_rank(cm.xi);
        c.rank_xieta = generic_rank(cm.xi_eta);
    }
    c.t = c.n + c.m - c.rank_xieta;
    c.sigma = c.n - c.rank_xi;
    c.mu = c.t - c.sigma;
    return c;
}

bool admits_invariant_solution(const Characteristics& c)
{
    return c.rank_xi == c.rank_xieta;
}

bool admits_invariant_solution(const Subalgebra& s)
{
    return admits_invariant_solution(characteristics(s));
}

std::vector<PisType> pis_types(const Characteristics& c)
{
    std::vector<PisType> out;
    const std::size_t upper = std::min(c.n, c.t);
    for (std::size_t rho = c.sigma; rho < upper; ++rho) {
        // delta = m - t + rho, kept signed until the filter
        const long long delta = static_cast<long long>(c.m) - static_cast<long long>(c.t) + static_cast<long long>(rho);
        if (delta <= 0) continue;
        PisType p;
        p.rho = rho;
        p.delta = static_cast<std::size_t>(delta);
        p.regular = rho == c.sigma;
        p.boundary = p.delta == c.m;
        out.push_back(p);
    }
    return out;
}

std::vector<PisType> pis_types(const Subalgebra& s)
{
    return pis_types(characteristics(s));
}

std::optional<PisType> regular_type(const Characteristics& c)
{
    for (const auto& p : pis_types(c)) {
        if (p.regular) return p;
    }
    return std::nullopt;
}

namespace {

bool rank_differences_equal(const Characteristics& a, const Characteristics& b)
{
    return a.rank_xieta - a.rank_xi == b.rank_xieta - b.rank_xi;
}

} // namespace

bool two_step_condition(const Subalgebra& n, const Subalgebra& h)
{
    if (!is_ideal(h, n)) throw InputError(h.to_string() + " is not an ideal of " + n.to_string());
    return rank_differences_equal(characteristics(n), characteristics(h));
}

DecompositionSearch decomposition_witness(const Subalgebra& n, int coeff_bound)
{
    const Characteristics nc = characteristics(n);
    if (admits_invariant_solution(nc)) {
        throw InputError(n.to_string() + " satisfies the invariant-solution criterion; no decomposition to search");
    }
    DecompositionSearch out;
    out.coeff_bound = coeff_bound;
    const auto candidates = enumerate_candidate_ideals(n, coeff_bound);
    out.truncated = candidates.truncated;
    for (const auto& h : candidates.ideals) {
        if (h.dimension() == 0 || h.dimension() >= n.dimension()) continue;
        ++out.candidates_examined;
        const Characteristics hc = characteristics(h);
        if (admits_invariant_solution(hc)) continue;
        if (!rank_differences_equal(nc, hc)) continue;
        out.witness = DecompositionWitness{h, nc, hc, true, true, nc.mu == hc.mu};
        break;
    }
    return out;
}

ClassificationReport classify(const Subalgebra& s, const ClassifyOptions& options)
{
    ClassificationReport r;
    r.subalgebra = s.to_string();
    r.dimension = s.dimension();
    r.characteristics = characteristics(s);
    r.admits_invariant = admits_invariant_solution(r.characteristics);
    r.pis_types = pis_types(r.characteristics);
    r.regular_type = regular_type(r.characteristics);

    if (r.admits_invariant) {
        r.verdict = r.pis_types.empty() ? "admits invariant solution (criterion satisfied); no PIS"
                                        : "admits invariant solution (criterion satisfied); decomposition not searched";
        r.notes.push_back("rank criterion is necessary only; existence of the invariant solution is not proven");
        return r;
    }
    for (const auto& p : r.pis_types) {
        if (p.boundary) {
            r.notes.push_back("type " + to_string(p) + " has delta = m: no invariant relation constrains the dependent variables");
        }
    }
    if (r.pis_types.empty()) {
        r.verdict = "no admissible PIS type";
        r.notes.push_back("admissible rank window is empty after excluding delta <= 0");
        return r;
    }
    if (!options.search_decomposition) {
        r.verdict = "generates PIS (decomposition not searched)";
        return r;
    }
    r.decomposition = decomposition_witness(s, options.coeff_bound);
    if (r.decomposition->witness) {
        r.verdict = "decomposable";
        r.notes.push_back("two-step criterion satisfied with ideal " + r.decomposition->witness->ideal.to_string() +
                          "; necessary condition only");
    } else {
        r.verdict = "indecomposable within coeff_bound " + std::to_string(options.coeff_bound);
        if (r.decomposition->truncated) r.notes.push_back("bounded ideal sweep skipped: too many combinations");
    }
    return r;
}

Hierarchy build_hierarchy(const std::vector<Subalgebra>& subalgebras, int coeff_bound)
{
    Hierarchy out;
    out.coeff_bound = coeff_bound;
    auto find_node = [&](const Subalgebra& s) -> std::optional<std::size_t> {
        for (std::size_t i = 0; i < out.nodes.size(); ++i) {
            if (out.nodes[i].same_span(s)) return i;
        }
        return std::nullopt;
    };
    for (const auto& s : subalgebras) {
        if (!out.nodes.empty() && out.nodes.front().model() != s.model()) {
            throw InputError("hierarchy subalgebras must share one model");
        }
        if (find_node(s)) continue;
        out.nodes.push_back(s);
        out.discovered.push_back(false);
    }

    const ClassifyOptions options{coeff_bound, true};
    for (std::size_t i = 0; i < out.nodes.size(); ++i) {
        // nodes may grow while iterating: discovered witnesses are classified too
        ClassificationReport r = classify(out.nodes[i], options);
        if (r.decomposable()) {
            const auto& w = *r.decomposition->witness;
            if (!find_node(w.ideal)) {
                out.nodes.push_back(w.ideal);
                out.discovered.push_back(true);
            }
        }
        out.reports.push_back(std::move(r));
    }

    std::vector<Characteristics> chars;
    for (const auto& r : out.reports) chars.push_back(r.characteristics);
    for (std::size_t a = 0; a < out.nodes.size(); ++a) {
        for (std::size_t b = 0; b < out.nodes.size(); ++b) {
            const auto& n = out.nodes[a];
            const auto& h = out.nodes[b];
            if (h.dimension() >= n.dimension() || !n.contains(h)) continue;
            if (admits_invariant_solution(chars[b]) || admits_invariant_solution(chars[a])) continue;
            if (!is_ideal(h, n) || !rank_differences_equal(chars[a], chars[b])) continue;
            out.edges.push_back({a, b});
        }
    }
    for (std::size_t i = 0; i < out.nodes.size(); ++i) {
        const auto& r = out.reports[i];
        if (r.admits_invariant || r.pis_types.empty() || r.decomposable()) continue;
        const bool has_out = std::any_of(out.edges.begin(), out.edges.end(), [&](const HierarchyEdge& e) { return e.from == i; });
        if (!has_out) out.roots.push_back(i);
    }
    return out;
}

namespace {

std::size_t binomial(std::size_t n, std::size_t k)
{
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Lexicographic k-subsets of {0..n-1}; returns false after the last one.
bool next_combination(std::vector<std::size_t>& c, std::size_t n)
{
    const std::size_t k = c.size();
    for (std::size_t i = k; i-- > 0;) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<std::size_t> first_combination(std::size_t k)
{
    std::vector<std::size_t> c(k);
    std::iota(c.begin(), c.end(), 0);
    return c;
}

std::string join(const std::vector<std::string>& parts)
{
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ", ";
        out += parts[i];
    }
    return out;
}

} // namespace

RepresentationSkeleton build_representation(const Subalgebra& s, std::size_t rho, const std::optional<InvariantBasis>& basis)
{
    const Characteristics c = characteristics(s);
    if (rho < c.sigma || rho >= std::min(c.n, c.t)) {
        throw InputError("rank " + std::to_string(rho) + " outside the admissible window [" + std::to_string(c.sigma) + ", " +
                         std::to_string(std::min(c.n, c.t)) + ")");
    }
    const auto& model = *s.model();
    const auto& vars = *model.variables();
    const std::size_t r = c.t - rho;

    RepresentationSkeleton out;
    out.rho = rho;
    out.delta = c.m - r;
    out.unresolved_choices = binomial(c.mu, r) - 1;

    std::vector<std::string> x_names;
    for (std::size_t i = 0; i < c.n; ++i) x_names.push_back(vars.name(i));
    const std::string all_x = join(x_names);

    std::vector<Expression> lambda_exprs;
    std::vector<Expression> u_exprs;
    if (basis) {
        for (const auto& inv : basis->invariants) {
            if (!verify_invariant(s, inv.expr)) throw InputError("not an invariant: " + inv.expr.to_string());
        }
        if (basis->complete && basis->x_only_count() == c.sigma) {
            for (const auto& inv : basis->invariants) (inv.x_only ? lambda_exprs : u_exprs).push_back(inv.expr);
            out.concrete = true;
        }
    }

    std::vector<std::size_t> resolved_inv = first_combination(r);
    std::vector<std::size_t> resolved_u = first_combination(r);
    if (out.concrete) {
        std::vector<std::size_t> u_indices(c.m);
        std::iota(u_indices.begin(), u_indices.end(), c.n);
        bool found = false;
        auto inv_subset = first_combination(r);
        do {
            std::vector<Expression> chosen;
            for (auto k : inv_subset) chosen.push_back(u_exprs[k]);
            auto u_subset = first_combination(r);
            do {
                std::vector<std::size_t> wrt;
                for (auto k : u_subset) wrt.push_back(u_indices[k]);
                if (functional_rank(chosen, wrt) == r) {
                    resolved_inv = inv_subset;
                    resolved_u = u_subset;
                    found = true;
                }
            } while (!found && next_combination(u_subset, c.m));
        } while (!found && next_combination(inv_subset, c.mu));
        if (!found) out.concrete = false;
    }

    for (std::size_t i = 0; i < c.sigma; ++i) {
        out.lambdas.push_back(out.concrete ? lambda_exprs[i].to_string() : "lambda" + std::to_string(i + 1));
    }
    for (std::size_t k = 0; k < c.mu; ++k) {
        out.u_invariants.push_back(out.concrete ? u_exprs[k].to_string() : "I" + std::to_string(k + 1));
    }

    std::vector<std::string> args = out.lambdas;
    for (std::size_t k = 0; k < c.mu; ++k) {
        if (std::find(resolved_inv.begin(), resolved_inv.end(), k) == resolved_inv.end()) args.push_back(out.u_invariants[k]);
    }
    const std::string arg_list = join(args);
    for (std::size_t j = 0; j < r; ++j) {
        const std::size_t k = resolved_inv[j];
        const std::string& inv = out.u_invariants[k];
        std::string rhs = "Phi" + std::to_string(j + 1);
        if (out.concrete) {
            for (std::size_t v = c.n; v < c.n + c.m; ++v) {
                if (u_exprs[k] == Expression::variable(model.variables(), vars.name(v))) rhs = vars.name(v);
            }
        }
        out.relations.push_back({inv + " = " + rhs + "(" + arg_list + ")", inv});
    }
    if (!out.concrete) {
        // which dependent variables stay non-invariant is not known without the invariants
        std::vector<std::string> us;
        for (std::size_t v = 0; v < c.m; ++v) us.push_back(vars.name(c.n + v));
        const std::string pool = join(us);
        for (std::size_t j = 0; j < c.m - r; ++j) {
            const std::string name = "W" + std::to_string(j + 1);
            out.non_invariant.push_back(name + " = " + name + "(" + all_x + "), one of " + pool);
        }
        return out;
    }
    for (std::size_t v = 0; v < c.m; ++v) {
        if (std::find(resolved_u.begin(), resolved_u.end(), v) != resolved_u.end()) continue;
        const std::string& name = vars.name(c.n + v);
        out.non_invariant.push_back(name + " = " + name + "(" + all_x + ")");
    }
    return out;
}

std::string to_string(const PisType& t)
{
    std::ostringstream out;
    out << "(" << t.rho << "," << t.delta << ")";
    return out.str();
}

} // namespace lpis
