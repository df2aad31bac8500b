#pragma once

#include <optional>
#include <set>
#include <utility>

#include "stanley/monomial.hpp"

namespace stanley {

/// A monomial ideal given by its minimal generating set, kept canonical:
/// generators form a divisibility antichain sorted lexicographically.
/// The empty set is the zero ideal; {1} is the unit ideal S.
class MonomialIdeal {
public:
    /// Builds the ideal generated by `gens`, minimalizing on the way in.
    MonomialIdeal(int n, std::vector<Monomial> gens) : n_(n) {
        if (n < 1) throw std::invalid_argument("MonomialIdeal: ambient variable count must be positive");
        for (const Monomial& g : gens)
            if (g.vars() != n)
                throw std::invalid_argument("MonomialIdeal: generator ambient mismatch");
        gens_ = reduce(std::move(gens));
    }

    static MonomialIdeal zero(int n) { return MonomialIdeal(n, {}); }
    static MonomialIdeal unit_ideal(int n) { return MonomialIdeal(n, {Monomial::unit(n)}); }

    int vars() const { return n_; }
    const std::vector<Monomial>& gens() const { return gens_; }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_[0].is_unit(); }
    bool is_proper() const { return !is_unit(); }

    /// Membership: some minimal generator divides w.
    bool contains(const Monomial& w) const {
        if (w.vars() != n_) throw std::invalid_argument("MonomialIdeal: ambient mismatch");
        return std::any_of(gens_.begin(), gens_.end(),
                           [&](const Monomial& g) { return g.divides(w); });
    }

    bool contains(const MonomialIdeal& other) const {
        if (other.vars() != n_) throw std::invalid_argument("MonomialIdeal: ambient mismatch");
        return std::all_of(other.gens_.begin(), other.gens_.end(),
                           [&](const Monomial& g) { return contains(g); });
    }

    int max_exponent() const {
        int m = 0;
        for (const Monomial& g : gens_) m = std::max(m, g.max_exponent());
        return m;
    }

    int max_exponent(int var) const {
        int m = 0;
        for (const Monomial& g : gens_) m = std::max(m, g.exponent(var));
        return m;
    }

    /// Union of the generator supports, sorted.
    std::vector<int> support() const {
        std::vector<int> s;
        for (int j = 0; j < n_; ++j)
            if (max_exponent(j) > 0) s.push_back(j);
        return s;
    }

    bool is_squarefree() const {
        return std::all_of(gens_.begin(), gens_.end(),
                           [](const Monomial& g) { return g.is_squarefree(); });
    }

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

    std::string str() const {
        if (is_zero()) return "(0)";
        std::string out = "(";
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            if (i) out += ", ";
            out += gens_[i].str();
        }
        return out + ")";
    }

    friend std::ostream& operator<<(std::ostream& os, const MonomialIdeal& I) { return os << I.str(); }

private:
    // Divisibility antichain in canonical (lex) order.
    static std::vector<Monomial> reduce(std::vector<Monomial> gens) {
        std::sort(gens.begin(), gens.end());
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        std::vector<Monomial> out;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            bool minimal = true;
            for (std::size_t j = 0; j < gens.size() && minimal; ++j)
                if (j != i && gens[j].divides(gens[i])) minimal = false;
            if (minimal) out.push_back(gens[i]);
        }
        return out;
    }

    int n_;
    std::vector<Monomial> gens_;
};

/// The divisibility antichain of `gens`; membership semantics unchanged.
inline MonomialIdeal minimalize(int n, std::vector<Monomial> gens) {
    return MonomialIdeal(n, std::move(gens));
}

inline MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
    if (I.vars() != J.vars()) throw std::invalid_argument("intersect: ambient mismatch");
    if (I.is_zero() || J.is_zero()) return MonomialIdeal::zero(I.vars());
    std::vector<Monomial> gens;
    gens.reserve(I.gens().size() * J.gens().size());
    for (const Monomial& a : I.gens())
        for (const Monomial& b : J.gens()) gens.push_back(lcm(a, b));
    return MonomialIdeal(I.vars(), std::move(gens));
}

inline MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J) {
    if (I.vars() != J.vars()) throw std::invalid_argument("sum: ambient mismatch");
    std::vector<Monomial> gens = I.gens();
    gens.insert(gens.end(), J.gens().begin(), J.gens().end());
    return MonomialIdeal(I.vars(), std::move(gens));
}

/// I : v for a monomial v, via (g : v) over the minimal generators.
inline MonomialIdeal colon(const MonomialIdeal& I, const Monomial& v) {
    if (I.vars() != v.vars()) throw std::invalid_argument("colon: ambient mismatch");
    std::vector<Monomial> gens;
    gens.reserve(I.gens().size());
    for (const Monomial& g : I.gens()) gens.push_back(colon(g, v));
    return MonomialIdeal(I.vars(), std::move(gens));
}

struct ColonResult {
    MonomialIdeal ideal;
    /// True when J was the zero ideal: the intersection over G(J) is vacuous
    /// and the result is the unit ideal by convention.
    bool vacuous_intersection = false;
};

/// I : J = intersection of I : v over v in G(J).
inline ColonResult colon_checked(const MonomialIdeal& I, const MonomialIdeal& J) {
    if (I.vars() != J.vars()) throw std::invalid_argument("colon: ambient mismatch");
    if (J.is_zero()) return {MonomialIdeal::unit_ideal(I.vars()), true};
    MonomialIdeal out = MonomialIdeal::unit_ideal(I.vars());
    for (const Monomial& v : J.gens()) out = intersect(out, colon(I, v));
    return {std::move(out), false};
}

inline MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J) {
    return colon_checked(I, J).ideal;
}

/// Radical: generated by the squarefree supports of the minimal generators.
inline MonomialIdeal radical(const MonomialIdeal& I) {
    std::vector<Monomial> gens;
    gens.reserve(I.gens().size());
    for (const Monomial& g : I.gens()) gens.push_back(g.support_monomial());
    return MonomialIdeal(I.vars(), std::move(gens));
}

namespace detail {
inline void require_proper_nonzero(const MonomialIdeal& I, const char* who) {
    if (I.is_zero() || I.is_unit())
        throw std::domain_error(std::string(who) + ": zero or unit ideal");
}
}  // namespace detail

/// True iff every variable supporting the ideal occurs as a pure power
/// among the minimal generators (monomial characterization of primary).
inline bool is_primary(const MonomialIdeal& Q) {
    detail::require_proper_nonzero(Q, "is_primary");
    for (int j : Q.support()) {
        bool pure = std::any_of(Q.gens().begin(), Q.gens().end(), [&](const Monomial& g) {
            return g.exponent(j) > 0 && g.degree() == g.exponent(j);
        });
        if (!pure) return false;
    }
    return true;
}

/// True iff every minimal generator is a pure power of a single variable.
inline bool is_irreducible(const MonomialIdeal& Q) {
    detail::require_proper_nonzero(Q, "is_irreducible");
    return std::all_of(Q.gens().begin(), Q.gens().end(),
                       [](const Monomial& g) { return g.support().size() == 1; });
}

/// The (t, r, p, n) normal form of a pair of primary ideals: with A, B the
/// variable supports of Q, Q', t = |A|, r = |A\B|, p = |A u B|.
struct SupportShape {
    int t = 0, r = 0, p = 0, n = 0;
    friend bool operator==(const SupportShape&, const SupportShape&) = default;
};

struct ShapeResult {
    SupportShape shape;
    /// perm[i] = original variable placed at position i of the renumbered
    /// ring, so that Q sits on the first t slots and Q' on slots r..p-1.
    std::vector<int> perm;
};

inline ShapeResult support_shape(const MonomialIdeal& Q, const MonomialIdeal& Qprime) {
    if (Q.vars() != Qprime.vars()) throw std::invalid_argument("support_shape: ambient mismatch");
    if (!is_primary(Q) || !is_primary(Qprime))
        throw std::domain_error("support_shape: inputs must be primary");
    const int n = Q.vars();
    std::vector<int> a = Q.support(), b = Qprime.support();
    std::set<int> A(a.begin(), a.end()), B(b.begin(), b.end());

    std::vector<int> only_a, both, only_b, rest;
    for (int j = 0; j < n; ++j) {
        bool ina = A.count(j), inb = B.count(j);
        if (ina && inb) both.push_back(j);
        else if (ina) only_a.push_back(j);
        else if (inb) only_b.push_back(j);
        else rest.push_back(j);
    }

    ShapeResult out;
    out.shape.t = static_cast<int>(A.size());
    out.shape.r = static_cast<int>(only_a.size());
    out.shape.p = static_cast<int>(A.size() + only_b.size());
    out.shape.n = n;
    out.perm = std::move(only_a);
    out.perm.insert(out.perm.end(), both.begin(), both.end());
    out.perm.insert(out.perm.end(), only_b.begin(), only_b.end());
    out.perm.insert(out.perm.end(), rest.begin(), rest.end());
    return out;
}

/// Minimal primes of I, each given as the sorted variable set of a minimal
/// transversal of the generator-support hypergraph of the radical.
inline std::vector<std::vector<int>> minimal_primes(const MonomialIdeal& I) {
    detail::require_proper_nonzero(I, "minimal_primes");
    const MonomialIdeal R = radical(I);
    std::vector<std::vector<int>> edges;
    for (const Monomial& g : R.gens()) edges.push_back(g.support());

    std::vector<std::vector<int>> covers;
    std::vector<int> current;
    auto recurse = [&](auto&& self, std::size_t from_edge) -> void {
        std::size_t e = from_edge;
        while (e < edges.size()) {
            bool hit = std::any_of(edges[e].begin(), edges[e].end(), [&](int v) {
                return std::find(current.begin(), current.end(), v) != current.end();
            });
            if (!hit) break;
            ++e;
        }
        if (e == edges.size()) {
            covers.push_back(current);
            std::sort(covers.back().begin(), covers.back().end());
            return;
        }
        for (int v : edges[e]) {
            current.push_back(v);
            self(self, e + 1);
            current.pop_back();
        }
    };
    recurse(recurse, 0);

    std::sort(covers.begin(), covers.end(), [](const auto& x, const auto& y) {
        return x.size() != y.size() ? x.size() < y.size() : x < y;
    });
    covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
    std::vector<std::vector<int>> minimal;
    for (const auto& c : covers) {
        bool has_subset = std::any_of(minimal.begin(), minimal.end(), [&](const auto& m) {
            return std::includes(c.begin(), c.end(), m.begin(), m.end());
        });
        if (!has_subset) minimal.push_back(c);
    }
    return minimal;
}

/// Height = minimum cardinality of a minimal prime.
inline int height(const MonomialIdeal& I) {
    const auto primes = minimal_primes(I);
    std::size_t h = primes.front().size();
    for (const auto& p : primes) h = std::min(h, p.size());
    return static_cast<int>(h);
}

/// An ordered pair (J, I) with I contained in J, representing J/I.
/// I may be the zero ideal, in which case the module is the ideal J itself.
class QuotientModule {
public:
    explicit QuotientModule(MonomialIdeal J)
        : J_(std::move(J)), I_(MonomialIdeal::zero(J_.vars())) {}

    QuotientModule(MonomialIdeal J, MonomialIdeal I) : J_(std::move(J)), I_(std::move(I)) {
        if (J_.vars() != I_.vars()) throw std::invalid_argument("QuotientModule: ambient mismatch");
        if (!J_.contains(I_))
            throw std::invalid_argument("QuotientModule: I is not contained in J");
    }

    const MonomialIdeal& numerator() const { return J_; }
    const MonomialIdeal& denominator() const { return I_; }
    int vars() const { return J_.vars(); }

    bool is_zero_module() const { return I_ == J_; }

    QuotientModule radical_module() const { return QuotientModule(radical(J_), radical(I_)); }

    friend bool operator==(const QuotientModule&, const QuotientModule&) = default;

private:
    MonomialIdeal J_, I_;
};

/// Krull dimension of radical(J)/radical(I), computed as
/// n - height(radical(I) : radical(J)). Boundary conventions: the ideal case
/// I = 0 gives n; a module whose radicals coincide (in particular the zero
/// module) gives -1.
inline int dim_quotient(const QuotientModule& M) {
    const MonomialIdeal Ir = radical(M.denominator());
    const MonomialIdeal Jr = radical(M.numerator());
    if (Ir == Jr) return -1;
    const MonomialIdeal C = colon(Ir, Jr);
    if (C.is_zero()) return M.vars();
    return M.vars() - height(C);
}

/// Contraction of I along the power map sending each variable to its a-th
/// power: { c : x^(a*c) in I }, generated by the rounded-up generators
/// ceil(g/a). Requires a at or above every exponent of G(I), the regime in
/// which the contraction equals the radical.
inline MonomialIdeal contract_power_map(const MonomialIdeal& I, int a) {
    if (a < 1) throw std::invalid_argument("contract_power_map: power must be positive");
    if (a < I.max_exponent())
        throw std::invalid_argument("contract_power_map: power below the maximum exponent of G(I)");
    std::vector<Monomial> gens;
    gens.reserve(I.gens().size());
    for (const Monomial& g : I.gens()) {
        std::vector<int> c(static_cast<std::size_t>(I.vars()));
        for (int j = 0; j < I.vars(); ++j) c[static_cast<std::size_t>(j)] = (g.exponent(j) + a - 1) / a;
        gens.push_back(Monomial(std::move(c)));
    }
    return MonomialIdeal(I.vars(), std::move(gens));
}

/// The same ideal viewed in a larger ambient ring (new variables free).
inline MonomialIdeal extend(const MonomialIdeal& I, int new_n) {
    if (new_n < I.vars()) throw std::invalid_argument("extend: ambient can only grow");
    std::vector<Monomial> gens;
    for (const Monomial& g : I.gens()) {
        std::vector<int> e = g.exponents();
        e.resize(static_cast<std::size_t>(new_n), 0);
        gens.push_back(Monomial(std::move(e)));
    }
    return MonomialIdeal(new_n, std::move(gens));
}

/// (I, x_{n+1}) in the ring with one more variable.
inline MonomialIdeal adjoin_variable(const MonomialIdeal& I) {
    const int m = I.vars() + 1;
    MonomialIdeal out = extend(I, m);
    return sum(out, MonomialIdeal(m, {Monomial::variable(m, m - 1)}));
}

}  // namespace stanley
