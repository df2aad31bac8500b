#pragma once

#include <random>

#include "stanley/bounds.hpp"
#include "stanley/decomposition.hpp"

namespace stanley::experiment {

using Rng = std::mt19937_64;

struct Config {
    std::uint64_t seed = 1;
    int iterations = 100;
    int max_n = 4;
    int max_exp = 3;
    int threads = 1;
};

struct SuiteResult {
    std::string name;
    int cases = 0;
    int violations = 0;
    std::vector<std::string> messages;  // first few violations, for diagnosis

    bool ok() const { return violations == 0; }

    void violation(std::string msg) {
        ++violations;
        if (messages.size() < 10) messages.push_back(std::move(msg));
    }
};

inline int uniform(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Monomial random_monomial(Rng& rng, int n, int max_exp, bool allow_unit = false) {
    for (;;) {
        std::vector<int> e(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) e[static_cast<std::size_t>(j)] = uniform(rng, 0, max_exp);
        Monomial m{std::move(e)};
        if (allow_unit || !m.is_unit()) return m;
    }
}

/// Random nonzero proper monomial ideal.
inline MonomialIdeal random_ideal(Rng& rng, int n, int max_exp, int max_gens = 4) {
    const int count = uniform(rng, 1, max_gens);
    std::vector<Monomial> gens;
    gens.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) gens.push_back(random_monomial(rng, n, max_exp));
    return MonomialIdeal(n, std::move(gens));
}

/// Random pair I inside J; I is the zero ideal about a quarter of the time,
/// otherwise generated from multiples of J's generators or an intersection.
inline QuotientModule random_contained_pair(Rng& rng, int n, int max_exp) {
    MonomialIdeal J = uniform(rng, 0, 7) == 0 ? MonomialIdeal::unit_ideal(n)
                                              : random_ideal(rng, n, max_exp);
    const int mode = uniform(rng, 0, 3);
    if (mode == 0) return QuotientModule(std::move(J));
    if (mode == 1) {
        MonomialIdeal I = intersect(J, random_ideal(rng, n, max_exp));
        return QuotientModule(std::move(J), std::move(I));
    }
    std::vector<Monomial> gens;
    for (const Monomial& g : J.gens())
        if (uniform(rng, 0, 1)) gens.push_back(g * random_monomial(rng, n, 1, true));
    return QuotientModule(std::move(J), MonomialIdeal(n, std::move(gens)));
}

/// Random primary ideal supported on a random variable subset: a pure power
/// of each supporting variable plus a few mixed generators below them.
inline MonomialIdeal random_primary(Rng& rng, int n, int max_exp, bool irreducible_only) {
    std::vector<int> support;
    while (support.empty())
        for (int j = 0; j < n; ++j)
            if (uniform(rng, 0, 1)) support.push_back(j);

    std::vector<int> pure(static_cast<std::size_t>(n), 0);
    std::vector<Monomial> gens;
    for (int j : support) {
        pure[static_cast<std::size_t>(j)] = uniform(rng, 1, max_exp);
        gens.push_back(Monomial::variable(n, j, pure[static_cast<std::size_t>(j)]));
    }
    if (!irreducible_only && support.size() >= 2) {
        const int extras = uniform(rng, 0, 2);
        for (int i = 0; i < extras; ++i) {
            std::vector<int> e(static_cast<std::size_t>(n), 0);
            for (int j : support) e[static_cast<std::size_t>(j)] =
                uniform(rng, 0, pure[static_cast<std::size_t>(j)]);
            Monomial m{std::move(e)};
            if (!m.is_unit()) gens.push_back(std::move(m));
        }
    }
    return MonomialIdeal(n, std::move(gens));
}

/// Constructive radical transfer on random pairs: pulls the optimal
/// decomposition of J/I back to radical(J)/radical(I), checks that it
/// verifies, that sdepth never drops, that the exact values obey the same
/// inequality, and the Stanley-Cohen-Macaulay transfer along the way.
inline SuiteResult theorem1_suite(const Config& cfg) {
    Rng rng(cfg.seed);
    SuiteResult out;
    out.name = "theorem1";
    const SdepthOptions opts{std::nullopt, cfg.threads};
    while (out.cases < cfg.iterations) {
        const int n = uniform(rng, 1, cfg.max_n);
        const QuotientModule M = random_contained_pair(rng, n, cfg.max_exp);
        if (M.is_zero_module()) continue;
        ++out.cases;
        const std::string label = M.numerator().str() + " / " + M.denominator().str();

        const SdepthResult sr = sdepth_exact_witness(M, opts);
        const StanleyDecomposition D = decomposition_from_partition(sr.witness, M);
        const int a = std::max({1, M.numerator().max_exponent(), M.denominator().max_exponent()});
        const TransferResult T = radical_transfer(D, a);

        if (!verify_decomposition(T.decomposition))
            out.violation("transfer of " + label + " does not verify");
        if (sdepth_of_decomposition(T.decomposition) < sdepth_of_decomposition(D))
            out.violation("transfer of " + label + " lost sdepth");

        const int rad = sdepth_exact(M.radical_module(), opts);
        if (sr.value > rad)
            out.violation("sdepth(" + label + ") exceeds its radical sdepth");
        if (sdepth_of_decomposition(T.decomposition) > rad)
            out.violation("transferred decomposition of " + label + " beats the radical sdepth");

        const int dq = dim_quotient(M);
        if (sr.value == dq && rad != dq)
            out.violation("Stanley-Cohen-Macaulay transfer failed for " + label);
    }
    return out;
}

/// Adjoining a fresh variable as a generator moves sdepth by 0 or 1.
inline SuiteResult lemma10_suite(const Config& cfg) {
    Rng rng(cfg.seed);
    SuiteResult out;
    out.name = "lemma10";
    const SdepthOptions opts{std::nullopt, cfg.threads};
    for (; out.cases < cfg.iterations; ++out.cases) {
        const int n = uniform(rng, 1, cfg.max_n);
        const MonomialIdeal I = random_ideal(rng, n, cfg.max_exp);
        const int s = sdepth_exact(I, opts);
        const int s_adj = sdepth_exact(adjoin_variable(I), opts);
        const auto [lo, hi] = lemma10_interval(s);
        if (s_adj < lo || s_adj > hi)
            out.violation("sdepth of (" + I.str() + ", x" + std::to_string(n + 1) + ") is " +
                          std::to_string(s_adj) + ", outside [" + std::to_string(lo) + "," +
                          std::to_string(hi) + "]");
    }
    return out;
}

/// The pruned search and the exhaustive reference enumerator agree on the
/// existence of a partition for every feasible k, on posets of <= 20 cells.
inline SuiteResult oracle_suite(const Config& cfg) {
    Rng rng(cfg.seed);
    SuiteResult out;
    out.name = "oracle";
    const int max_n = std::min(cfg.max_n, 4);
    while (out.cases < cfg.iterations) {
        const int n = uniform(rng, 1, max_n);
        const MonomialIdeal I = random_ideal(rng, n, std::min(cfg.max_exp, 2), 3);
        const QuotientModule M{I};
        const Poset poset = characteristic_poset(M);
        if (poset.size() > 20) continue;
        ++out.cases;
        for (int k = 0; k <= n + 1; ++k) {
            const auto fast = find_partition(poset, k, {cfg.threads});
            const auto naive = enumerate_partitions_naive(poset, k);
            if (fast.has_value() != naive.has_value()) {
                out.violation("disagreement on " + I.str() + " at k=" + std::to_string(k));
                continue;
            }
            if (fast && !is_valid_partition(*fast, poset))
                out.violation("invalid partition returned for " + I.str() +
                              " at k=" + std::to_string(k));
            if (naive && !is_valid_partition(*naive, poset))
                out.violation("invalid naive partition for " + I.str() +
                              " at k=" + std::to_string(k));
        }
    }
    return out;
}

/// Every applicable lower bound sits below the exact Stanley depth and every
/// applicable upper bound above it, over random primary pairs. bound_report
/// throws on a violated sandwich, which we count here.
inline SuiteResult sandwich_suite(const Config& cfg, bool squarefree = true) {
    Rng rng(cfg.seed);
    SuiteResult out;
    out.name = squarefree ? "sandwich" : "sandwich_powers";
    const SdepthOptions opts{std::nullopt, cfg.threads};
    for (; out.cases < cfg.iterations; ++out.cases) {
        const int n = uniform(rng, 2, cfg.max_n);
        const int max_exp = squarefree ? 1 : cfg.max_exp;
        const MonomialIdeal Q = random_primary(rng, n, max_exp, squarefree);
        const MonomialIdeal Qp = random_primary(rng, n, max_exp, squarefree);
        try {
            bound_report(Q, Qp, true, opts);
        } catch (const std::logic_error& err) {
            out.violation(Q.str() + " vs " + Qp.str() + ": " + err.what());
        }
    }
    return out;
}

inline std::vector<SuiteResult> run_all(const Config& cfg) {
    Config sandwich_cfg = cfg;
    sandwich_cfg.max_n = std::min(cfg.max_n + 2, 6);
    return {
        theorem1_suite(cfg),
        lemma10_suite(cfg),
        oracle_suite(cfg),
        sandwich_suite(sandwich_cfg, true),
    };
}

}  // namespace stanley::experiment
