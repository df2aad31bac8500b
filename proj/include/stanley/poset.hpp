#pragma once

#include <atomic>
#include <cstdint>
#include <limits>
#include <optional>
#include <thread>

#include "stanley/ideal.hpp"

namespace stanley {

/// An exponent vector inside a Box; also the poset elements themselves.
using Cell = std::vector<int>;

/// Componentwise bounding box [0,g_1] x ... x [0,g_n]. For a module J/I the
/// box must dominate every generator exponent of both ideals.
class Box {
public:
    explicit Box(std::vector<int> g) : g_(std::move(g)) {
        if (g_.empty()) throw std::invalid_argument("Box: ambient variable count must be positive");
        for (int v : g_)
            if (v < 1) throw std::invalid_argument("Box: ceilings must be positive");
        strides_.resize(g_.size());
        std::uint64_t s = 1;
        for (std::size_t j = g_.size(); j-- > 0;) {
            strides_[j] = s;
            s *= static_cast<std::uint64_t>(g_[j]) + 1;
        }
        size_ = s;
    }

    /// Componentwise maximum generator exponent of J and I, floored at 1.
    static Box tight(const QuotientModule& M) {
        std::vector<int> g(static_cast<std::size_t>(M.vars()));
        for (int j = 0; j < M.vars(); ++j)
            g[static_cast<std::size_t>(j)] = std::max(
                {1, M.numerator().max_exponent(j), M.denominator().max_exponent(j)});
        return Box(std::move(g));
    }

    int vars() const { return static_cast<int>(g_.size()); }
    const std::vector<int>& ceiling() const { return g_; }
    int ceiling(int j) const { return g_[static_cast<std::size_t>(j)]; }
    std::uint64_t size() const { return size_; }

    bool dominates(const MonomialIdeal& I) const {
        if (I.vars() != vars()) return false;
        for (int j = 0; j < vars(); ++j)
            if (I.max_exponent(j) > g_[static_cast<std::size_t>(j)]) return false;
        return true;
    }

    bool contains(const Cell& c) const {
        if (c.size() != g_.size()) return false;
        for (std::size_t j = 0; j < g_.size(); ++j)
            if (c[j] < 0 || c[j] > g_[j]) return false;
        return true;
    }

    /// Mixed-radix rank; ascending rank order is lex order on cells, which
    /// refines the componentwise partial order.
    std::uint32_t rank(const Cell& c) const {
        std::uint64_t r = 0;
        for (std::size_t j = 0; j < g_.size(); ++j)
            r += static_cast<std::uint64_t>(c[j]) * strides_[j];
        return static_cast<std::uint32_t>(r);
    }

    Cell unrank(std::uint32_t r) const {
        Cell c(g_.size());
        std::uint64_t rest = r;
        for (std::size_t j = 0; j < g_.size(); ++j) {
            c[j] = static_cast<int>(rest / strides_[j]);
            rest %= strides_[j];
        }
        return c;
    }

    friend bool operator==(const Box&, const Box&) = default;

private:
    std::vector<int> g_;
    std::vector<std::uint64_t> strides_;
    std::uint64_t size_ = 0;
};

/// Number of coordinates saturated at the box ceiling; the dimension of the
/// Stanley space an interval topped at d induces. In the squarefree case
/// this is |supp(d)|.
inline int rho(const Cell& d, const Box& box) {
    int count = 0;
    for (int j = 0; j < box.vars(); ++j)
        if (d[static_cast<std::size_t>(j)] == box.ceiling(j)) ++count;
    return count;
}

namespace detail {

/// Visits every cell of [lo, hi] in lex order as (cell, rank). The visitor
/// returns false to stop early; the function reports whether it ran to
/// completion.
template <class F>
bool for_each_region(const Box& box, const Cell& lo, const Cell& hi, F&& f) {
    Cell c = lo;
    const int n = box.vars();
    for (;;) {
        if (!f(static_cast<const Cell&>(c), box.rank(c))) return false;
        int j = n - 1;
        while (j >= 0 && c[static_cast<std::size_t>(j)] == hi[static_cast<std::size_t>(j)]) {
            c[static_cast<std::size_t>(j)] = lo[static_cast<std::size_t>(j)];
            --j;
        }
        if (j < 0) return true;
        ++c[static_cast<std::size_t>(j)];
    }
}

inline bool leq(const Cell& a, const Cell& b) {
    for (std::size_t j = 0; j < a.size(); ++j)
        if (a[j] > b[j]) return false;
    return true;
}

}  // namespace detail

/// Characteristic poset of a module J/I inside a box: the cells c with
/// x^c in J \ I, ordered componentwise. Membership is a flat rank lookup.
class Poset {
public:
    Poset(Box box, std::vector<std::uint8_t> member, std::vector<std::uint32_t> ranks)
        : box_(std::move(box)), member_(std::move(member)), ranks_(std::move(ranks)) {}

    const Box& box() const { return box_; }
    std::size_t size() const { return ranks_.size(); }
    bool empty() const { return ranks_.empty(); }

    /// Poset cells as ranks, ascending (lex order).
    const std::vector<std::uint32_t>& ranks() const { return ranks_; }

    bool member(std::uint32_t rank) const { return member_[rank] != 0; }
    bool member(const Cell& c) const { return box_.contains(c) && member(box_.rank(c)); }

    std::vector<Cell> cells() const {
        std::vector<Cell> out;
        out.reserve(ranks_.size());
        for (std::uint32_t r : ranks_) out.push_back(box_.unrank(r));
        return out;
    }

private:
    Box box_;
    std::vector<std::uint8_t> member_;
    std::vector<std::uint32_t> ranks_;
};

/// Box cells are enumerated exhaustively; keep instances within reason.
inline constexpr std::uint64_t max_poset_box_cells = std::uint64_t{1} << 26;

inline Poset characteristic_poset(const QuotientModule& M, const Box& box) {
    if (box.vars() != M.vars())
        throw std::invalid_argument("characteristic_poset: ambient mismatch");
    if (!box.dominates(M.numerator()) || !box.dominates(M.denominator()))
        throw std::invalid_argument("characteristic_poset: box does not dominate generator exponents");
    if (box.size() > max_poset_box_cells)
        throw std::length_error("characteristic_poset: box too large to enumerate");

    std::vector<std::uint8_t> member(box.size(), 0);
    std::vector<std::uint32_t> ranks;
    Cell zero(static_cast<std::size_t>(box.vars()), 0);
    detail::for_each_region(box, zero, box.ceiling(), [&](const Cell& c, std::uint32_t r) {
        Monomial w{c};
        if (M.numerator().contains(w) && !M.denominator().contains(w)) {
            member[r] = 1;
            ranks.push_back(r);
        }
        return true;
    });
    std::sort(ranks.begin(), ranks.end());
    return Poset(std::move(box), std::move(member), std::move(ranks));
}

inline Poset characteristic_poset(const QuotientModule& M) {
    return characteristic_poset(M, Box::tight(M));
}

/// Componentwise interval [lo, hi] of cells.
struct Interval {
    Cell lo, hi;
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Disjoint intervals covering a characteristic poset exactly.
struct IntervalPartition {
    Box box;
    std::vector<Interval> intervals;
};

/// Exact validity check: intervals lie in the poset, are pairwise disjoint,
/// and cover every poset cell.
inline bool is_valid_partition(const IntervalPartition& P, const Poset& poset) {
    if (!(P.box == poset.box())) return false;
    std::vector<std::uint8_t> covered(poset.box().size(), 0);
    std::size_t total = 0;
    for (const Interval& iv : P.intervals) {
        if (!poset.box().contains(iv.lo) || !poset.box().contains(iv.hi)) return false;
        if (!detail::leq(iv.lo, iv.hi)) return false;
        bool ok = detail::for_each_region(poset.box(), iv.lo, iv.hi,
                                          [&](const Cell&, std::uint32_t r) {
                                              if (!poset.member(r) || covered[r]) return false;
                                              covered[r] = 1;
                                              ++total;
                                              return true;
                                          });
        if (!ok) return false;
    }
    return total == poset.size();
}

struct SearchOptions {
    int threads = 1;
};

namespace detail {

class PartitionSearch {
public:
    PartitionSearch(const Poset& poset, int k)
        : poset_(poset), box_(poset.box()), k_(k), covered_(poset.box().size(), 0) {}

    // Aborts (result discarded) once a lower-indexed root branch has won.
    void watch(const std::atomic<std::size_t>* winner, std::size_t my_index) {
        winner_ = winner;
        my_index_ = my_index;
    }

    bool aborted() const { return aborted_; }
    std::vector<Interval>& intervals() { return intervals_; }

    // Pre-places the interval [lo, hi]; caller guarantees it is clash-free.
    void seed(const Cell& lo, const Cell& hi) {
        for_each_region(box_, lo, hi, [&](const Cell&, std::uint32_t r) {
            covered_[r] = 1;
            return true;
        });
        intervals_.push_back({lo, hi});
    }

    /// Branches on the lex-least uncovered cell e: any interval of a valid
    /// completion that covers e must start at e, since a strictly smaller lo
    /// would already be covered. Candidate tops are tried in decreasing-rho
    /// order with rank as tiebreak.
    bool run(std::size_t scan_from = 0) {
        const auto& cells = poset_.ranks();
        while (scan_from < cells.size() && covered_[cells[scan_from]]) ++scan_from;
        if (scan_from == cells.size()) return true;
        if ((++nodes_ & 0xFFF) == 0 && cancelled()) {
            aborted_ = true;
            return false;
        }

        const Cell e = box_.unrank(cells[scan_from]);
        struct Cand {
            std::uint32_t rank;
            int rho;
        };
        std::vector<Cand> cands;
        for_each_region(box_, e, box_.ceiling(), [&](const Cell& d, std::uint32_t r) {
            if (poset_.member(r) && !covered_[r]) {
                int rd = rho(d, box_);
                if (rd >= k_) cands.push_back({r, rd});
            }
            return true;
        });
        std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
            return a.rho != b.rho ? a.rho > b.rho : a.rank < b.rank;
        });

        std::vector<std::uint32_t> region;
        for (const Cand& cand : cands) {
            const Cell d = box_.unrank(cand.rank);
            region.clear();
            bool clash_free = for_each_region(box_, e, d, [&](const Cell&, std::uint32_t r) {
                if (covered_[r]) return false;
                region.push_back(r);
                return true;
            });
            if (!clash_free) continue;
            for (std::uint32_t r : region) covered_[r] = 1;
            intervals_.push_back({e, d});
            if (run(scan_from)) return true;
            if (aborted_) return false;
            intervals_.pop_back();
            for (std::uint32_t r : region) covered_[r] = 0;
        }
        return false;
    }

private:
    bool cancelled() const { return winner_ && winner_->load(std::memory_order_relaxed) < my_index_; }

    const Poset& poset_;
    const Box& box_;
    int k_;
    std::vector<std::uint8_t> covered_;
    std::vector<Interval> intervals_;
    const std::atomic<std::size_t>* winner_ = nullptr;
    std::size_t my_index_ = std::numeric_limits<std::size_t>::max();
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
};

}  // namespace detail

/// Searches for an interval partition of the poset in which every interval
/// top d has rho(d) >= k. Root branches may run in parallel; the reported
/// partition is always the one the sequential search would return.
inline std::optional<IntervalPartition> find_partition(const Poset& poset, int k,
                                                       const SearchOptions& opts = {}) {
    const Box& box = poset.box();
    if (poset.empty()) return IntervalPartition{box, {}};
    if (k > box.vars()) return std::nullopt;

    if (k >= 1) {
        // A cell with no admissible top at all rules out every partition.
        for (std::uint32_t cr : poset.ranks()) {
            const Cell c = box.unrank(cr);
            bool found = !detail::for_each_region(box, c, box.ceiling(),
                                                  [&](const Cell& d, std::uint32_t r) {
                                                      return !(poset.member(r) && rho(d, box) >= k);
                                                  });
            if (!found) return std::nullopt;
        }
    }

    // Root candidates for the lex-least cell, in the sequential try order.
    const Cell e0 = box.unrank(poset.ranks().front());
    struct Cand {
        std::uint32_t rank;
        int rho;
    };
    std::vector<Cand> roots;
    detail::for_each_region(box, e0, box.ceiling(), [&](const Cell& d, std::uint32_t r) {
        if (poset.member(r)) {
            int rd = rho(d, box);
            if (rd >= k) roots.push_back({r, rd});
        }
        return true;
    });
    std::sort(roots.begin(), roots.end(), [](const Cand& a, const Cand& b) {
        return a.rho != b.rho ? a.rho > b.rho : a.rank < b.rank;
    });
    if (roots.empty()) return std::nullopt;

    const int workers = std::max(1, std::min<int>(opts.threads, static_cast<int>(roots.size())));
    if (workers == 1) {
        detail::PartitionSearch search(poset, k);
        if (!search.run()) return std::nullopt;
        return IntervalPartition{box, std::move(search.intervals())};
    }

    // One task per root candidate; the winner is the least candidate index
    // that succeeds, which is exactly the sequential answer.
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> winner{std::numeric_limits<std::size_t>::max()};
    std::vector<std::vector<Interval>> results(roots.size());
    auto work = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= roots.size()) return;
            if (winner.load() < i) continue;
            detail::PartitionSearch search(poset, k);
            search.watch(&winner, i);
            search.seed(e0, box.unrank(roots[i].rank));
            if (search.run() && !search.aborted()) {
                std::size_t cur = winner.load();
                while (i < cur && !winner.compare_exchange_weak(cur, i)) {
                }
                results[i] = std::move(search.intervals());
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();

    const std::size_t w = winner.load();
    if (w == std::numeric_limits<std::size_t>::max()) return std::nullopt;
    return IntervalPartition{box, std::move(results[w])};
}

/// Reference oracle: exhaustive search trying every (lo, hi) pair of poset
/// cells around the first uncovered cell, validating intervals by brute
/// enumeration. Guarded to posets of at most 20 cells.
inline std::optional<IntervalPartition> enumerate_partitions_naive(const Poset& poset, int k) {
    if (poset.size() > 20)
        throw std::length_error("enumerate_partitions_naive: poset larger than 20 cells");
    const Box& box = poset.box();
    const std::vector<Cell> cells = poset.cells();
    const std::uint32_t m = static_cast<std::uint32_t>(cells.size());
    if (m == 0) return IntervalPartition{box, {}};

    std::vector<Interval> placed;
    std::uint32_t covered = 0;
    auto dfs = [&](auto&& self) -> bool {
        if (covered == (std::uint32_t{1} << m) - 1) return true;
        std::uint32_t c = 0;
        while (covered & (std::uint32_t{1} << c)) ++c;
        for (std::uint32_t lo = 0; lo < m; ++lo) {
            if (!detail::leq(cells[lo], cells[c])) continue;
            for (std::uint32_t hi = 0; hi < m; ++hi) {
                if (!detail::leq(cells[c], cells[hi])) continue;
                if (!detail::leq(cells[lo], cells[hi])) continue;
                if (rho(cells[hi], box) < k) continue;
                std::uint32_t mask = 0;
                bool ok = detail::for_each_region(box, cells[lo], cells[hi],
                                                  [&](const Cell& d, std::uint32_t) {
                                                      auto it = std::find(cells.begin(), cells.end(), d);
                                                      if (it == cells.end()) return false;
                                                      mask |= std::uint32_t{1}
                                                              << (it - cells.begin());
                                                      return true;
                                                  });
                if (!ok || (mask & covered)) continue;
                covered |= mask;
                placed.push_back({cells[lo], cells[hi]});
                if (self(self)) return true;
                placed.pop_back();
                covered &= ~mask;
            }
        }
        return false;
    };
    if (!dfs(dfs)) return std::nullopt;
    return IntervalPartition{box, std::move(placed)};
}

/// Distinguished sdepth of the zero module; compares above every integer.
inline constexpr int sdepth_infinite = std::numeric_limits<int>::max();

struct SdepthOptions {
    std::optional<Box> box;
    int threads = 1;
};

struct SdepthResult {
    int value = 0;
    IntervalPartition witness;
};

/// Exact Stanley depth by binary search on k: a partition witnessing k also
/// witnesses every smaller k, so feasibility is monotone.
inline SdepthResult sdepth_exact_witness(const QuotientModule& M, const SdepthOptions& opts = {}) {
    const Box box = opts.box ? *opts.box : Box::tight(M);
    const Poset poset = characteristic_poset(M, box);
    if (poset.empty()) return {sdepth_infinite, IntervalPartition{box, {}}};

    // k = 0 always holds: singleton intervals.
    IntervalPartition best{box, {}};
    best.intervals.reserve(poset.size());
    for (std::uint32_t r : poset.ranks()) {
        Cell c = box.unrank(r);
        best.intervals.push_back({c, c});
    }

    int lo = 0, hi = box.vars();
    while (lo < hi) {
        const int mid = lo + (hi - lo + 1) / 2;
        auto found = find_partition(poset, mid, {opts.threads});
        if (found) {
            lo = mid;
            best = std::move(*found);
        } else {
            hi = mid - 1;
        }
    }
    return {lo, std::move(best)};
}

inline int sdepth_exact(const QuotientModule& M, const SdepthOptions& opts = {}) {
    return sdepth_exact_witness(M, opts).value;
}

inline int sdepth_exact(const MonomialIdeal& I, const SdepthOptions& opts = {}) {
    return sdepth_exact(QuotientModule(I), opts);
}

}  // namespace stanley
