#include "nci/betti.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <future>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include <boost/multiprecision/cpp_int.hpp>

namespace nci {

namespace detail {

using Rat = boost::multiprecision::cpp_rational;

long long exact_rank(std::vector<std::vector<std::pair<int, long long>>> input) {
    // sparse Gaussian elimination over Q; pivot choice prefers short rows,
    // then sparse columns (Markowitz-style), to limit fill
    struct Row {
        std::vector<std::pair<int, Rat>> nz;  // sorted by column
        bool active = true;
    };
    std::vector<Row> rows(input.size());
    int ncols = 0;
    for (std::size_t r = 0; r < input.size(); ++r) {
        auto& nz = rows[r].nz;
        for (auto& [c, v] : input[r]) {
            if (v == 0) continue;
            nz.emplace_back(c, Rat(v));
            ncols = std::max(ncols, c + 1);
        }
        std::sort(nz.begin(), nz.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    input.clear();
    input.shrink_to_fit();

    // column -> candidate row ids; entries may be stale and are re-checked
    std::vector<std::vector<int>> col_rows(ncols);
    std::vector<int> col_count(ncols, 0);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& [c, v] : rows[r].nz) {
            col_rows[c].push_back(static_cast<int>(r));
            ++col_count[c];
        }

    auto coeff_at = [](const Row& row, int col) -> const Rat* {
        auto it = std::lower_bound(
            row.nz.begin(), row.nz.end(), col,
            [](const auto& p, int c) { return p.first < c; });
        if (it == row.nz.end() || it->first != col) return nullptr;
        return &it->second;
    };

    long long rank = 0;
    while (true) {
        // pivot row: shortest active nonempty row
        int best = -1;
        std::size_t best_len = SIZE_MAX;
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (rows[r].active && !rows[r].nz.empty() && rows[r].nz.size() < best_len) {
                best_len = rows[r].nz.size();
                best = static_cast<int>(r);
            }
        if (best < 0) break;

        Row& prow = rows[best];
        int pcol = prow.nz.front().first;
        int pcount = col_count[pcol];
        for (const auto& [c, v] : prow.nz)
            if (col_count[c] < pcount) {
                pcount = col_count[c];
                pcol = c;
            }
        const Rat pval = *coeff_at(prow, pcol);

        auto candidates = col_rows[pcol];  // copy: axpy below appends fill-in
        for (int rid : candidates) {
            Row& row = rows[rid];
            if (!row.active || rid == best) continue;
            const Rat* cv = coeff_at(row, pcol);
            if (!cv) continue;  // stale entry
            Rat factor = *cv / pval;

            std::vector<std::pair<int, Rat>> merged;
            merged.reserve(row.nz.size() + prow.nz.size());
            auto a = row.nz.begin();
            auto b = prow.nz.begin();
            while (a != row.nz.end() || b != prow.nz.end()) {
                if (b == prow.nz.end() || (a != row.nz.end() && a->first < b->first)) {
                    merged.push_back(*a++);
                } else if (a == row.nz.end() || b->first < a->first) {
                    Rat nv = -factor * b->second;
                    if (nv != 0) {
                        merged.emplace_back(b->first, std::move(nv));
                        col_rows[b->first].push_back(rid);
                        ++col_count[b->first];
                    }
                    ++b;
                } else {
                    Rat nv = a->second - factor * b->second;
                    if (nv != 0) merged.emplace_back(a->first, std::move(nv));
                    else --col_count[a->first];
                    ++a;
                    ++b;
                }
            }
            row.nz = std::move(merged);
        }

        prow.active = false;
        for (const auto& [c, v] : prow.nz) --col_count[c];
        prow.nz.clear();
        ++rank;
    }
    return rank;
}

}  // namespace detail

namespace {

using ExpVec = std::vector<int>;

struct StrandData {
    ExpVec lcm;
    std::vector<std::vector<std::uint32_t>> by_size;  // subsets grouped by popcount
};

ExpVec componentwise_max(const ExpVec& a, const ExpVec& b) {
    ExpVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
    return out;
}

// boundary matrix d_i of one strand: rows are images of the size-i basis
// over the size-(i-1) basis, keeping only faces with the same lcm
std::vector<std::vector<std::pair<int, long long>>> strand_boundary(
    const StrandData& strand, int i) {
    const auto& hi = strand.by_size[i];
    const auto& lo = strand.by_size[i - 1];
    std::unordered_map<std::uint32_t, int> lo_index;
    lo_index.reserve(lo.size() * 2);
    for (std::size_t k = 0; k < lo.size(); ++k) lo_index[lo[k]] = static_cast<int>(k);

    std::vector<std::vector<std::pair<int, long long>>> rows;
    rows.reserve(hi.size());
    for (std::uint32_t mask : hi) {
        std::vector<std::pair<int, long long>> row;
        long long sign = 1;
        for (std::uint32_t bits = mask; bits; bits &= bits - 1) {
            std::uint32_t face = mask & ~(bits & -bits);
            auto it = lo_index.find(face);
            if (it != lo_index.end()) row.emplace_back(it->second, sign);
            sign = -sign;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<TaylorStrand> strands_for(const MonomialIdeal& ideal,
                                      std::span<const int> order) {
    const auto& gens = ideal.generators();
    const int g = static_cast<int>(gens.size());
    if (g == 0)
        throw std::invalid_argument("betti_table requires a nonzero ideal");
    if (g > 16)
        throw std::invalid_argument("betti_table supports at most 16 generators");
    if (static_cast<int>(order.size()) != g)
        throw std::invalid_argument("generator order has wrong length");

    std::vector<Variable> vars = ideal.support();
    const int nv = static_cast<int>(vars.size());
    std::vector<ExpVec> exps(g, ExpVec(nv, 0));
    for (int k = 0; k < g; ++k) {
        const Monomial& m = gens[order[k]];
        for (int v = 0; v < nv; ++v) exps[k][v] = m.exponent(vars[v]);
    }

    // lcm of every subset, reusing the subset without its lowest bit
    const std::uint32_t total = 1u << g;
    std::vector<ExpVec> lcms(total);
    lcms[0] = ExpVec(nv, 0);
    for (std::uint32_t s = 1; s < total; ++s) {
        int low = std::countr_zero(s);
        lcms[s] = componentwise_max(lcms[s & (s - 1)], exps[low]);
    }

    std::map<ExpVec, std::vector<std::uint32_t>> grouped;
    for (std::uint32_t s = 0; s < total; ++s) grouped[lcms[s]].push_back(s);

    std::vector<StrandData> strands;
    strands.reserve(grouped.size());
    for (auto& [key, masks] : grouped) {
        StrandData sd;
        sd.lcm = key;
        sd.by_size.assign(g + 1, {});
        for (std::uint32_t m : masks) sd.by_size[std::popcount(m)].push_back(m);
        strands.push_back(std::move(sd));
    }

    // rank tasks (one per nonzero boundary matrix), computed in parallel;
    // results land in preassigned slots so the merge is deterministic
    struct Task {
        std::size_t strand;
        int i;
    };
    std::vector<Task> tasks;
    for (std::size_t s = 0; s < strands.size(); ++s)
        for (int i = 1; i <= g; ++i)
            if (!strands[s].by_size[i].empty() && !strands[s].by_size[i - 1].empty())
                tasks.push_back({s, i});

    std::vector<long long> ranks(tasks.size(), 0);
    auto worker = [&](std::atomic<std::size_t>& next) {
        for (std::size_t t = next.fetch_add(1); t < tasks.size(); t = next.fetch_add(1)) {
            const auto& [s, i] = tasks[t];
            ranks[t] = detail::exact_rank(strand_boundary(strands[s], i));
        }
    };
    unsigned threads = std::min<unsigned>(std::thread::hardware_concurrency(),
                                          static_cast<unsigned>(tasks.size()));
    if (threads > 1) {
        std::atomic<std::size_t> next{0};
        std::vector<std::future<void>> futs;
        for (unsigned w = 0; w < threads; ++w)
            futs.push_back(std::async(std::launch::async, [&] { worker(next); }));
        for (auto& f : futs) f.get();
    } else {
        std::atomic<std::size_t> next{0};
        worker(next);
    }

    std::map<std::pair<std::size_t, int>, long long> rank_of;
    for (std::size_t t = 0; t < tasks.size(); ++t)
        rank_of[{tasks[t].strand, tasks[t].i}] = ranks[t];

    std::vector<TaylorStrand> out;
    out.reserve(strands.size());
    for (std::size_t s = 0; s < strands.size(); ++s) {
        TaylorStrand ts;
        std::map<Variable, int> mexp;
        for (int v = 0; v < nv; ++v)
            if (strands[s].lcm[v] > 0) mexp[vars[v]] = strands[s].lcm[v];
        ts.multidegree = Monomial(std::move(mexp));
        for (int i = 0; i <= g; ++i) {
            auto sz = static_cast<long long>(strands[s].by_size[i].size());
            if (sz == 0) continue;
            ts.basis_sizes[i] = sz;
            auto r = [&](int level) {
                auto it = rank_of.find({s, level});
                return it == rank_of.end() ? 0LL : it->second;
            };
            long long h = sz - r(i) - r(i + 1);
            if (h < 0) throw std::logic_error("negative homology rank");
            if (h > 0) ts.homology[i] = h;
        }
        out.push_back(std::move(ts));
    }
    // grouped is a std::map over exponent vectors, so strand order already
    // is deterministic; re-sort by (total degree, monomial order) for output
    std::stable_sort(out.begin(), out.end(), [](const TaylorStrand& a, const TaylorStrand& b) {
        return a.multidegree < b.multidegree;
    });
    return out;
}

}  // namespace

namespace detail {

BettiTable betti_table_with_order(const MonomialIdeal& ideal,
                                  std::span<const int> order) {
    BettiTable table;
    table.ideal_height = ideal.height();
    for (const auto& strand : strands_for(ideal, order)) {
        int j = strand.multidegree.degree();
        for (const auto& [i, h] : strand.homology) table.entries[{i, j}] += h;
    }
    return table;
}

}  // namespace detail

std::vector<TaylorStrand> taylor_strands(const MonomialIdeal& ideal) {
    std::vector<int> order(ideal.generators().size());
    std::iota(order.begin(), order.end(), 0);
    return strands_for(ideal, order);
}

BettiTable betti_table(const MonomialIdeal& ideal) {
    std::vector<int> order(ideal.generators().size());
    std::iota(order.begin(), order.end(), 0);
    return detail::betti_table_with_order(ideal, order);
}

std::vector<long long> betti_sequence(const BettiTable& table) {
    int pd = 0;
    for (const auto& [ij, r] : table.entries) pd = std::max(pd, ij.first);
    std::vector<long long> seq(pd + 1, 0);
    for (const auto& [ij, r] : table.entries) seq[ij.first] += r;
    return seq;
}

long long total_betti(const BettiTable& table) {
    long long total = 0;
    for (const auto& [ij, r] : table.entries) total += r;
    return total;
}

TotalRankCheck total_rank_check(const MonomialIdeal& ideal) {
    if (ideal.is_zero())
        throw std::invalid_argument("total_rank_check requires a nonzero ideal");
    if (ideal.is_complete_intersection())
        throw std::invalid_argument(
            "total_rank_check does not apply to complete intersections");
    BettiTable table = betti_table(ideal);
    TotalRankCheck check;
    check.total = total_betti(table);
    check.height = table.ideal_height;
    check.bound = (1LL << check.height) + (1LL << (check.height - 1));
    check.meets_bound = check.total >= check.bound;
    check.equality = check.total == check.bound;
    return check;
}

namespace {

std::vector<long long> poly_mul(const std::vector<long long>& a,
                                const std::vector<long long>& b) {
    std::vector<long long> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

std::vector<long long> times_one_plus_t_power(std::vector<long long> p, int k) {
    for (int i = 0; i < k; ++i) p = poly_mul(p, {1, 1});
    return p;
}

}  // namespace

EqualityPolynomials equality_polynomials(int c) {
    if (c < 2)
        throw std::invalid_argument("equality_polynomials requires c >= 2");
    if (c > 60)
        throw std::invalid_argument("equality_polynomials: c too large");
    EqualityPolynomials out;
    out.first = times_one_plus_t_power({1, 3, 2}, c - 2);
    if (c >= 3) out.second = times_one_plus_t_power({1, 5, 5, 1}, c - 3);
    return out;
}

}  // namespace nci
