#include "nci/ideal.hpp"

#include <algorithm>

namespace nci {

Monomial::Monomial(std::map<Variable, int> exponents) : exps_(std::move(exponents)) {
    for (const auto& [v, e] : exps_) {
        if (v.empty()) throw std::invalid_argument("empty variable name");
        if (e <= 0)
            throw std::invalid_argument("non-positive exponent for variable '" + v + "'");
    }
}

Monomial Monomial::of(std::initializer_list<Variable> vars) {
    std::map<Variable, int> e;
    for (const auto& v : vars) ++e[v];
    return Monomial(std::move(e));
}

bool Monomial::is_squarefree() const {
    return std::all_of(exps_.begin(), exps_.end(),
                       [](const auto& p) { return p.second == 1; });
}

int Monomial::degree() const {
    int d = 0;
    for (const auto& [v, e] : exps_) d += e;
    return d;
}

int Monomial::exponent(const Variable& v) const {
    auto it = exps_.find(v);
    return it == exps_.end() ? 0 : it->second;
}

std::vector<Variable> Monomial::support() const {
    std::vector<Variable> out;
    out.reserve(exps_.size());
    for (const auto& [v, e] : exps_) out.push_back(v);
    return out;
}

bool Monomial::divides(const Monomial& other) const {
    for (const auto& [v, e] : exps_)
        if (other.exponent(v) < e) return false;
    return true;
}

Monomial Monomial::without(const Variable& v) const {
    Monomial out = *this;
    out.exps_.erase(v);
    return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial out = a;
    for (const auto& [v, e] : b.exps_) {
        int& slot = out.exps_[v];
        slot = std::max(slot, e);
    }
    return out;
}

bool Monomial::operator<(const Monomial& other) const {
    int da = degree(), db = other.degree();
    if (da != db) return da < db;
    return exps_ < other.exps_;
}

std::string Monomial::str() const {
    if (exps_.empty()) return "1";
    std::string out;
    for (const auto& [v, e] : exps_) {
        if (!out.empty()) out += '*';
        out += v;
        if (e != 1) out += '^' + std::to_string(e);
    }
    return out;
}

std::vector<Monomial> minimalize(const std::vector<Monomial>& gens) {
    for (const auto& m : gens)
        if (m.is_one())
            throw unit_ideal_error("the monomial 1 generates the unit ideal");
    std::vector<Monomial> sorted(gens.begin(), gens.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<Monomial> kept;
    for (const auto& m : sorted) {
        bool divisible = std::any_of(kept.begin(), kept.end(),
                                     [&](const Monomial& k) { return k.divides(m); });
        if (!divisible) kept.push_back(m);  // kept is degree-sorted, so no later divisor
    }
    return kept;
}

MonomialIdeal::MonomialIdeal(std::vector<Monomial> gens)
    : gens_(minimalize(gens)) {
    for (const auto& m : gens_)
        for (const auto& v : m.support()) universe_.insert(v);
}

MonomialIdeal::MonomialIdeal(std::vector<Monomial> gens, std::set<Variable> universe)
    : gens_(minimalize(gens)), universe_(std::move(universe)) {
    for (const auto& m : gens_)
        for (const auto& v : m.support())
            if (!universe_.count(v))
                throw std::invalid_argument("generator variable '" + v +
                                            "' is outside the universe");
}

bool MonomialIdeal::is_squarefree() const {
    return std::all_of(gens_.begin(), gens_.end(),
                       [](const Monomial& m) { return m.is_squarefree(); });
}

std::vector<Variable> MonomialIdeal::support() const {
    std::set<Variable> s;
    for (const auto& m : gens_)
        for (const auto& v : m.support()) s.insert(v);
    return {s.begin(), s.end()};
}

MonomialIdeal MonomialIdeal::substitute_one(const Variable& x) const {
    if (!universe_.count(x))
        throw std::invalid_argument("unknown variable '" + x + "'");
    std::vector<Monomial> subst;
    subst.reserve(gens_.size());
    for (const auto& m : gens_) {
        Monomial reduced = m.without(x);
        if (reduced.is_one())
            throw unit_ideal_error("setting " + x + " = 1 in generator " + m.str() +
                                   " yields the unit ideal");
        subst.push_back(std::move(reduced));
    }
    std::set<Variable> smaller = universe_;
    smaller.erase(x);
    return MonomialIdeal(std::move(subst), std::move(smaller));
}

bool MonomialIdeal::is_complete_intersection() const {
    std::set<Variable> seen;
    for (const auto& m : gens_)
        for (const auto& v : m.support())
            if (!seen.insert(v).second) return false;
    return true;
}

bool MonomialIdeal::is_nci() const {
    if (!is_squarefree())
        throw std::invalid_argument("is_nci is defined for squarefree ideals only");
    // (1) generated in degree at least two; this also guards the
    // substitutions below against the unit ideal
    for (const auto& m : gens_)
        if (m.degree() < 2) return false;
    if (gens_.empty()) return false;  // the zero ideal is a complete intersection
    // (2) not a complete intersection
    if (is_complete_intersection()) return false;
    // (3) every support substitution is a complete intersection
    for (const auto& x : support())
        if (!substitute_one(x).is_complete_intersection()) return false;
    return true;
}

namespace {

// exact minimum hitting set by branching on the first unhit generator:
// any hitting set must contain one of its variables
struct HittingSetSearch {
    const std::vector<std::vector<int>>& gen_vars;
    std::vector<bool> chosen;
    int best;

    void run(int depth) {
        const std::vector<int>* unhit = nullptr;
        for (const auto& vars : gen_vars) {
            bool hit = std::any_of(vars.begin(), vars.end(),
                                   [&](int v) { return chosen[v]; });
            if (!hit) {
                unhit = &vars;
                break;
            }
        }
        if (!unhit) {
            best = std::min(best, depth);
            return;
        }
        if (depth + 1 >= best) return;
        for (int v : *unhit) {
            chosen[v] = true;
            run(depth + 1);
            chosen[v] = false;
        }
    }
};

}  // namespace

int MonomialIdeal::height() const {
    if (gens_.empty())
        throw std::invalid_argument("height of the zero ideal is undefined here");
    std::vector<Variable> supp = support();
    std::map<Variable, int> index;
    for (std::size_t i = 0; i < supp.size(); ++i) index[supp[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> gen_vars;
    gen_vars.reserve(gens_.size());
    for (const auto& m : gens_) {
        std::vector<int> vars;
        for (const auto& v : m.support()) vars.push_back(index[v]);
        gen_vars.push_back(std::move(vars));
    }
    HittingSetSearch search{gen_vars, std::vector<bool>(supp.size(), false),
                            static_cast<int>(supp.size())};
    search.run(0);
    return search.best;
}

MonomialIdeal edge_ideal(const Graph& g) {
    std::vector<Monomial> gens;
    std::set<Variable> universe(g.vertices().begin(), g.vertices().end());
    for (const auto& [u, v] : g.edges()) gens.push_back(Monomial::of({u, v}));
    for (const auto& v : g.vertices())
        if (g.degree(v) == 0) gens.push_back(Monomial(v));
    return MonomialIdeal(std::move(gens), std::move(universe));
}

Graph graph_of(const MonomialIdeal& ideal) {
    std::vector<Edge> edges;
    for (const auto& m : ideal.generators()) {
        if (!m.is_squarefree())
            throw std::invalid_argument("generator " + m.str() + " is not squarefree");
        auto supp = m.support();
        switch (supp.size()) {
            case 1:
                break;  // singleton vertex, already in the universe
            case 2:
                edges.push_back(make_edge(supp[0], supp[1]));
                break;
            default:
                throw std::invalid_argument("generator " + m.str() +
                                            " has degree > 2; no graph corresponds");
        }
    }
    std::vector<VertexId> verts(ideal.universe().begin(), ideal.universe().end());
    return Graph(std::move(verts), std::move(edges));
}

}  // namespace nci
