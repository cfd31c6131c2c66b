#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "nci/ideal.hpp"

namespace nci {

/// Graded Betti numbers of R/I over a field of characteristic zero.
/// entries maps (homological degree i, internal degree j) to a positive
/// rank; zero ranks are omitted. entry (0,0) is always 1.
struct BettiTable {
    std::map<std::pair<int, int>, long long> entries;
    int ideal_height = 0;

    bool operator==(const BettiTable&) const = default;
};

/// One multidegree strand of the Taylor complex specialized at the residue
/// field: basis_sizes[i] counts generator subsets S with |S| = i and
/// lcm(S) equal to the strand multidegree; homology[i] is the rank of the
/// degree-i homology of the strand.
struct TaylorStrand {
    Monomial multidegree;
    std::map<int, long long> basis_sizes;
    std::map<int, long long> homology;
};

/// Betti table of R/I via the Taylor complex specialized at the residue
/// field, with exact rational arithmetic. Requires a nonzero ideal with at
/// most 16 minimal generators; throws std::invalid_argument otherwise.
BettiTable betti_table(const MonomialIdeal& ideal);

/// The strand-by-strand homology underlying betti_table, in a deterministic
/// (multidegree-sorted) order.
std::vector<TaylorStrand> taylor_strands(const MonomialIdeal& ideal);

/// Row sums (beta_0, beta_1, ..., beta_pd).
std::vector<long long> betti_sequence(const BettiTable& table);

long long total_betti(const BettiTable& table);

/// Total-rank bound report for a monomial ideal that is not a complete
/// intersection: total = sum of Betti numbers, bound = 2^c + 2^(c-1) with
/// c the height. Throws std::invalid_argument on complete intersections
/// (the bound does not apply) and on the zero ideal.
struct TotalRankCheck {
    long long total = 0;
    int height = 0;
    long long bound = 0;
    bool meets_bound = false;
    bool equality = false;
};

TotalRankCheck total_rank_check(const MonomialIdeal& ideal);

/// Expanded coefficient lists of the two equality-case generating
/// polynomials: (1+3t+2t^2)(1+t)^(c-2), and for c >= 3 also
/// (1+5t+5t^2+t^3)(1+t)^(c-3). Requires c >= 2.
struct EqualityPolynomials {
    std::vector<long long> first;
    std::optional<std::vector<long long>> second;
};

EqualityPolynomials equality_polynomials(int c);

namespace detail {

/// betti_table with the generators taken in the given order (a permutation
/// of the sorted order). The result is order-independent; exposed so tests
/// can assert that.
BettiTable betti_table_with_order(const MonomialIdeal& ideal,
                                  std::span<const int> order);

/// Exact rank over Q of a sparse integer matrix given as rows of
/// (column, value) pairs.
long long exact_rank(std::vector<std::vector<std::pair<int, long long>>> rows);

}  // namespace detail

}  // namespace nci
