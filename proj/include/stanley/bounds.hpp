#pragma once

#include <sstream>

#include "stanley/decomposition.hpp"
#include "stanley/poset.hpp"

namespace stanley {

/// Bound values are integers or halves; comparisons against the (integer)
/// Stanley depth go through floored().
struct Rational {
    int num = 0;
    int den = 1;

    static Rational whole(int v) { return {v, 1}; }
    static Rational half(int numerator) {
        return numerator % 2 == 0 ? Rational{numerator / 2, 1} : Rational{numerator, 2};
    }

    int floored() const { return num >= 0 ? num / den : -((-num + den - 1) / den); }

    std::string str() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }

    friend bool operator==(const Rational&, const Rational&) = default;
};

// --- closed-form bounds, keyed by support shape -----------------------------
//
// Each returns a value only when the hypotheses of the corresponding result
// hold for the given shape; out-of-range shapes yield nullopt rather than an
// extrapolated value. See the bound catalog in the README.

namespace detail {
inline void check_shape(const SupportShape& s) {
    if (!(0 <= s.r && s.r <= s.t && s.t <= s.p && s.p <= s.n))
        throw std::invalid_argument("SupportShape: requires 0 <= r <= t <= p <= n");
}
}  // namespace detail

/// Nested supports (supp Q inside supp Q', which spans everything):
/// sdepth(Q cap Q') <= n - floor(t/2).
inline std::optional<int> ub_nested(const SupportShape& s) {
    detail::check_shape(s);
    if (!(s.r == 0 && s.p == s.n && s.t >= 1)) return std::nullopt;
    return s.n - s.t / 2;
}

/// One variable against the rest: sdepth <= 1 + ceil((n-1)/2).
inline std::optional<int> ub_lemma5(const SupportShape& s) {
    detail::check_shape(s);
    if (!(s.t == 1 && s.r == 1 && s.p == s.n)) return std::nullopt;
    return 1 + s.n / 2;
}

/// Disjoint supports covering everything, t >= 2, n >= 4: sdepth <= (n+2)/2.
inline std::optional<Rational> ub_disjoint(const SupportShape& s) {
    detail::check_shape(s);
    if (!(s.r == s.t && s.p == s.n && s.t >= 2 && s.n >= 4)) return std::nullopt;
    return Rational::half(s.n + 2);
}

/// Overlapping supports covering everything: sdepth <= (n+t-r+2)/2.
inline std::optional<Rational> ub_prop12(const SupportShape& s) {
    detail::check_shape(s);
    if (!(1 < s.r && s.t < s.n && s.p == s.n && s.n >= 4)) return std::nullopt;
    return Rational::half(s.n + s.t - s.r + 2);
}

/// Same setting, bound through either projection:
/// sdepth <= min(n - floor(t/2), n - floor((n-t)/2)).
inline std::optional<int> ub_prop14(const SupportShape& s) {
    detail::check_shape(s);
    if (!(1 < s.r && s.t < s.n && s.p == s.n)) return std::nullopt;
    return std::min(s.n - s.t / 2, s.n - (s.n - s.t) / 2);
}

/// General shape with free variables beyond the union of the supports:
/// sdepth <= min(floor((2n+t-p-r+2)/2), n - floor(t/2), n - floor((p-t)/2)).
inline std::optional<int> ub_thm16(const SupportShape& s) {
    detail::check_shape(s);
    if (!(1 < s.r && s.t < s.p && s.n >= 4)) return std::nullopt;
    return std::min({(2 * s.n + s.t - s.p - s.r + 2) / 2, s.n - s.t / 2, s.n - (s.p - s.t) / 2});
}

/// Lower bound for irreducible ideals with disjoint covering supports:
/// ceil(t/2) + ceil((n-t)/2) <= sdepth.
inline std::optional<int> lb_irreducible_disjoint(const SupportShape& s, bool both_irreducible) {
    detail::check_shape(s);
    if (!(both_irreducible && s.r == s.t && s.p == s.n && s.t >= 1 && s.t < s.n))
        return std::nullopt;
    return (s.t + 1) / 2 + (s.n - s.t + 1) / 2;
}

/// Generator-count lower bound: sdepth(I) >= n - floor(|G(I)|/2).
inline int lb_generators(const MonomialIdeal& I) {
    return I.vars() - static_cast<int>(I.gens().size()) / 2;
}

/// Exact sdepth of a prime generated by t of the n variables:
/// n - t + ceil(t/2) = n - floor(t/2).
inline int formula_prime(int t, int n) {
    if (t < 1 || t > n) throw std::invalid_argument("formula_prime: requires 1 <= t <= n");
    return n - t / 2;
}

/// Exact sdepth of a complete intersection with m generators: n - floor(m/2).
inline int formula_complete_intersection(int m, int n) {
    if (m < 1 || m > n)
        throw std::invalid_argument("formula_complete_intersection: requires 1 <= m <= n");
    return n - m / 2;
}

/// Adjoining one variable to the ideal moves sdepth into [s, s+1].
inline std::pair<int, int> lemma10_interval(int s) { return {s, s + 1}; }

/// Radical upper bound: sdepth(J/I) <= sdepth(radical J / radical I), the
/// right side computed exactly.
inline int ub_radical(const QuotientModule& M, const SdepthOptions& opts = {}) {
    return sdepth_exact(M.radical_module(), {std::nullopt, opts.threads});
}

// --- aggregated report -------------------------------------------------------

enum class BoundKind { lower, upper, exact };

inline const char* to_string(BoundKind k) {
    switch (k) {
        case BoundKind::lower: return "lower";
        case BoundKind::upper: return "upper";
        default: return "exact";
    }
}

struct BoundEntry {
    std::string name;
    BoundKind kind = BoundKind::upper;
    bool applicable = false;
    std::optional<Rational> value;  // set iff applicable
    std::string citation;
};

struct BoundReport {
    SupportShape shape;
    MonomialIdeal intersection;
    std::vector<BoundEntry> entries;  // sorted by name
    std::optional<int> exact;
    std::vector<std::string> notes;

    const BoundEntry* find(const std::string& name) const {
        for (const BoundEntry& e : entries)
            if (e.name == name) return &e;
        return nullptr;
    }

    std::string table() const {
        std::ostringstream os;
        os << "shape: t=" << shape.t << " r=" << shape.r << " p=" << shape.p << " n=" << shape.n
           << "\n";
        os << "intersection: " << intersection.str() << "\n";
        auto row = [&](const std::string& name, const std::string& kind, const std::string& value,
                       const std::string& applicable, const std::string& citation) {
            os << "  ";
            os.width(16);
            os << std::left << name;
            os.width(7);
            os << std::left << kind;
            os.width(8);
            os << std::left << value;
            os.width(5);
            os << std::left << applicable;
            os << citation << "\n";
        };
        row("name", "kind", "value", "appl", "citation");
        for (const BoundEntry& e : entries)
            row(e.name, to_string(e.kind), e.value ? e.value->str() : "-",
                e.applicable ? "yes" : "no", e.citation);
        if (exact)
            os << "exact sdepth: " << *exact << "\n";
        for (const std::string& n : notes) os << "note: " << n << "\n";
        return os.str();
    }
};

/// Evaluates every applicable bound for Q cap Q' and optionally the exact
/// Stanley depth, then asserts the sandwich invariants (a violation means a
/// broken theorem or a broken engine, and throws).
inline BoundReport bound_report(const MonomialIdeal& Q, const MonomialIdeal& Qprime,
                                bool compute_exact, const SdepthOptions& opts = {}) {
    const ShapeResult sr = support_shape(Q, Qprime);
    const SupportShape& s = sr.shape;
    const bool irred = is_irreducible(Q) && is_irreducible(Qprime);
    const MonomialIdeal inter = intersect(Q, Qprime);

    BoundReport report{s, inter, {}, std::nullopt, {}};
    auto add = [&](std::string name, BoundKind kind, std::optional<Rational> value,
                   std::string citation) {
        report.entries.push_back(
            {std::move(name), kind, value.has_value(), value, std::move(citation)});
    };
    auto as_rational = [](std::optional<int> v) -> std::optional<Rational> {
        if (!v) return std::nullopt;
        return Rational::whole(*v);
    };

    add("lemma4", BoundKind::upper, as_rational(ub_nested(s)), "Lemma 4");
    add("lemma5", BoundKind::upper, as_rational(ub_lemma5(s)), "Lemma 5");
    {
        auto l5 = ub_lemma5(s);
        add("remark6", BoundKind::exact,
            irred && l5 ? as_rational(l5) : std::nullopt, "Remark 6");
    }
    add("thm7", BoundKind::upper, ub_disjoint(s), "Theorem 7");
    add("prop12", BoundKind::upper, ub_prop12(s), "Proposition 12");
    add("prop14", BoundKind::upper, as_rational(ub_prop14(s)), "Proposition 14");
    add("thm16", BoundKind::upper, as_rational(ub_thm16(s)), "Theorem 16");

    const bool disjoint_covering = s.r == s.t && s.p == s.n && s.t >= 1 && s.t < s.n;
    add("cor8", BoundKind::exact,
        irred && disjoint_covering && s.n % 2 == 1
            ? std::optional<Rational>(Rational::whole((s.n + 1) / 2))
            : std::nullopt,
        "Corollary 8");
    if (irred && disjoint_covering && s.n % 2 == 0) {
        if (s.t % 2 == 1) {
            add("cor9", BoundKind::exact, Rational::whole(s.n / 2 + 1), "Corollary 9");
        } else {
            add("cor9", BoundKind::upper, Rational::whole(s.n / 2 + 1), "Corollary 9");
            report.notes.push_back("cor9: exact value is " + std::to_string(s.n / 2) + " or " +
                                   std::to_string(s.n / 2 + 1) + " (even t case)");
        }
    } else {
        add("cor9", BoundKind::exact, std::nullopt, "Corollary 9");
    }

    add("lb_irreducible", BoundKind::lower, as_rational(lb_irreducible_disjoint(s, irred)),
        "Corollary 9 proof");
    add("lb_generators", BoundKind::lower, Rational::whole(lb_generators(inter)),
        "generator-count bound");

    if (compute_exact) {
        add("radical", BoundKind::upper,
            Rational::whole(ub_radical(QuotientModule(inter), opts)), "Theorem 1");
        report.exact = sdepth_exact(inter, opts);
        if (const BoundEntry* c9 = report.find("cor9");
            c9 && c9->applicable && c9->kind == BoundKind::upper)
            report.notes.push_back("cor9: exact computation selects " +
                                   std::to_string(*report.exact));
    }

    std::sort(report.entries.begin(), report.entries.end(),
              [](const BoundEntry& a, const BoundEntry& b) { return a.name < b.name; });

    if (report.exact) {
        for (const BoundEntry& e : report.entries) {
            if (!e.applicable) continue;
            const int v = e.value->floored();
            const bool ok = e.kind == BoundKind::upper   ? *report.exact <= v
                            : e.kind == BoundKind::lower ? *report.exact >= v
                                                         : *report.exact == v;
            if (!ok)
                throw std::logic_error("bound_report: entry '" + e.name + "' (" + e.value->str() +
                                       ") violated by exact sdepth " +
                                       std::to_string(*report.exact));
        }
    }
    return report;
}

}  // namespace stanley
