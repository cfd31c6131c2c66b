#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "nci/graph.hpp"

namespace nci {

using Variable = std::string;

/// Thrown by operations whose result would be the unit ideal, which is
/// deliberately unrepresentable here.
struct unit_ideal_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A monomial as a map variable -> positive exponent. The empty map is the
/// monomial 1.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(const Variable& v) : exps_{{v, 1}} {}
    explicit Monomial(std::map<Variable, int> exponents);

    static Monomial one() { return Monomial{}; }

    /// Product of the given variables; repeats accumulate exponents.
    static Monomial of(std::initializer_list<Variable> vars);

    const std::map<Variable, int>& exponents() const { return exps_; }

    bool is_one() const { return exps_.empty(); }
    bool is_squarefree() const;
    int degree() const;
    int exponent(const Variable& v) const;

    std::vector<Variable> support() const;

    bool divides(const Monomial& other) const;

    /// This monomial with v's exponent dropped (v set to 1).
    Monomial without(const Variable& v) const;

    friend Monomial lcm(const Monomial& a, const Monomial& b);

    /// Degree order, ties broken variable-by-variable (name, then exponent).
    bool operator<(const Monomial& other) const;
    bool operator==(const Monomial&) const = default;

    /// Renders as '*'-separated factors, e.g. "a*b^2"; "1" for the empty
    /// monomial.
    std::string str() const;

private:
    std::map<Variable, int> exps_;
};

/// Divisibility-minimal members of gens, sorted and deduplicated. Throws
/// unit_ideal_error if any generator is 1.
std::vector<Monomial> minimalize(const std::vector<Monomial>& gens);

/// A monomial ideal presented by its minimal generators over a universe of
/// variables. The constructor minimalizes, so generators always form an
/// antichain under divisibility. The zero ideal (no generators) is allowed;
/// the unit ideal is not.
class MonomialIdeal {
public:
    MonomialIdeal() = default;

    /// Universe defaults to the support. An explicit universe must contain
    /// the support. Throws unit_ideal_error if some generator is 1.
    explicit MonomialIdeal(std::vector<Monomial> gens);
    MonomialIdeal(std::vector<Monomial> gens, std::set<Variable> universe);

    const std::vector<Monomial>& generators() const { return gens_; }
    const std::set<Variable>& universe() const { return universe_; }

    bool is_zero() const { return gens_.empty(); }
    bool is_squarefree() const;

    /// Variables appearing in at least one minimal generator, sorted.
    std::vector<Variable> support() const;

    /// The ideal I(x=1): sets x to 1 in every generator and minimalizes;
    /// the universe shrinks by {x}. Throws unit_ideal_error if a generator
    /// is a pure power of x, std::invalid_argument if x is not in the
    /// universe.
    MonomialIdeal substitute_one(const Variable& x) const;

    /// True iff the minimal generators have pairwise disjoint supports
    /// (they then form a regular sequence). The zero ideal counts as a
    /// complete intersection.
    bool is_complete_intersection() const;

    /// Nearly complete intersection test, per definition: generated in
    /// degree >= 2, not a complete intersection, and I(x=1) is a complete
    /// intersection for every x in the support. Defined for squarefree
    /// ideals only; throws std::invalid_argument otherwise.
    bool is_nci() const;

    /// Minimum cardinality of a variable set meeting every generator's
    /// support (for edge ideals: a minimum vertex cover). Throws on the
    /// zero ideal.
    int height() const;

    bool operator==(const MonomialIdeal&) const = default;

private:
    std::vector<Monomial> gens_;     // sorted antichain
    std::set<Variable> universe_;
};

/// Edge ideal of g: one degree-2 generator per edge and one degree-1
/// generator per isolated vertex; the universe is the vertex set.
MonomialIdeal edge_ideal(const Graph& g);

/// Inverse of edge_ideal for squarefree ideals generated in degrees 1 and 2:
/// vertices are the universe, edges come from the degree-2 generators.
/// Throws std::invalid_argument on a generator of degree >= 3 or a
/// non-squarefree generator.
Graph graph_of(const MonomialIdeal& ideal);

}  // namespace nci
