#pragma once

#include "stanley/poset.hpp"

namespace stanley {

/// Stanley space uK[Z]: monomial multiples of u in the variables Z only.
/// Its dimension is |Z|.
struct StanleySpace {
    Monomial generator;
    std::vector<int> free_vars;  // sorted variable indices

    /// Degree membership: e matches u exactly off Z and dominates u on Z.
    bool contains_degree(const std::vector<int>& e) const {
        for (int j = 0; j < generator.vars(); ++j) {
            const bool free = std::binary_search(free_vars.begin(), free_vars.end(), j);
            const int u = generator.exponent(j);
            const int x = e[static_cast<std::size_t>(j)];
            if (free ? x < u : x != u) return false;
        }
        return true;
    }

    int dimension() const { return static_cast<int>(free_vars.size()); }

    std::string str() const {
        std::string out = generator.str() + " ; ";
        for (std::size_t i = 0; i < free_vars.size(); ++i) {
            if (i) out += ",";
            out += "x" + std::to_string(free_vars[i] + 1);
        }
        return out;
    }

    friend bool operator==(const StanleySpace&, const StanleySpace&) = default;
};

/// A direct-sum presentation of J/I by Stanley spaces.
struct StanleyDecomposition {
    QuotientModule module;
    std::vector<StanleySpace> spaces;

    std::string str() const {
        std::string out;
        for (const StanleySpace& s : spaces) {
            out += s.str();
            out += '\n';
        }
        return out;
    }
};

/// One space per interval: generator x^lo, free variables at the saturated
/// coordinates of hi. Throws if the partition is not a valid partition of
/// the module's characteristic poset.
inline StanleyDecomposition decomposition_from_partition(const IntervalPartition& P,
                                                         const QuotientModule& M) {
    const Poset poset = characteristic_poset(M, P.box);
    if (!is_valid_partition(P, poset))
        throw std::invalid_argument("decomposition_from_partition: invalid partition");
    StanleyDecomposition D{M, {}};
    D.spaces.reserve(P.intervals.size());
    for (const Interval& iv : P.intervals) {
        std::vector<int> Z;
        for (int j = 0; j < P.box.vars(); ++j)
            if (iv.hi[static_cast<std::size_t>(j)] == P.box.ceiling(j)) Z.push_back(j);
        D.spaces.push_back({Monomial(iv.lo), std::move(Z)});
    }
    return D;
}

struct VerifyResult {
    bool ok = false;
    std::optional<Monomial> witness;  // degree with the wrong multiplicity
    int expected = 0;
    int actual = 0;
    explicit operator bool() const { return ok; }
};

/// Checks the direct-sum property degree by degree over the box with
/// B_j = 1 + max exponent of x_j across both ideals and all generators:
/// membership in each space and in J\I is unchanged by clamping a degree
/// into that box, so box verification implies global correctness.
inline VerifyResult verify_decomposition(const StanleyDecomposition& D) {
    const int n = D.module.vars();
    std::vector<int> B(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        int m = std::max(D.module.numerator().max_exponent(j),
                         D.module.denominator().max_exponent(j));
        for (const StanleySpace& s : D.spaces) m = std::max(m, s.generator.exponent(j));
        B[static_cast<std::size_t>(j)] = m + 1;
    }
    const Box box{B};

    VerifyResult result;
    Cell zero(static_cast<std::size_t>(n), 0);
    bool complete = detail::for_each_region(box, zero, box.ceiling(),
                                            [&](const Cell& e, std::uint32_t) {
        int count = 0;
        for (const StanleySpace& s : D.spaces)
            if (s.contains_degree(e)) ++count;
        const Monomial w{e};
        const int expected =
            (D.module.numerator().contains(w) && !D.module.denominator().contains(w)) ? 1 : 0;
        if (count != expected) {
            result.witness = w;
            result.expected = expected;
            result.actual = count;
            return false;
        }
        return true;
    });
    result.ok = complete;
    return result;
}

/// min |Z_i|; the empty decomposition (zero module) reports sdepth_infinite.
inline int sdepth_of_decomposition(const StanleyDecomposition& D) {
    if (D.spaces.empty()) return sdepth_infinite;
    int m = std::numeric_limits<int>::max();
    for (const StanleySpace& s : D.spaces) m = std::min(m, s.dimension());
    return m;
}

struct TransferResult {
    StanleyDecomposition decomposition;
    /// Spaces whose preimage under the power map is zero. The transferred
    /// decomposition simply omits them.
    std::vector<StanleySpace> discarded;
};

/// Pulls a decomposition of J/I back along the map sending each variable to
/// its power-th power, yielding a decomposition of radical(J)/radical(I).
/// A space uK[Z] survives iff power divides u_j at every bound coordinate
/// j not in Z; the surviving generator has exponents u_j/power off Z and
/// ceil(u_j/power) on Z. Requires power at or above every exponent of
/// G(I), G(J) and the space generators.
inline TransferResult radical_transfer(const StanleyDecomposition& D, int power) {
    if (power < 1) throw std::invalid_argument("radical_transfer: power must be positive");
    int max_exp = std::max(D.module.numerator().max_exponent(),
                           D.module.denominator().max_exponent());
    for (const StanleySpace& s : D.spaces) {
        if (!s.generator.is_unit()) max_exp = std::max(max_exp, s.generator.max_exponent());
    }
    if (power < max_exp)
        throw std::invalid_argument("radical_transfer: power below the maximum occurring exponent");

    const int n = D.module.vars();
    TransferResult out{
        StanleyDecomposition{D.module.radical_module(), {}},
        {},
    };
    for (const StanleySpace& s : D.spaces) {
        bool survives = true;
        std::vector<int> c(static_cast<std::size_t>(n), 0);
        for (int j = 0; j < n && survives; ++j) {
            const int u = s.generator.exponent(j);
            const bool free = std::binary_search(s.free_vars.begin(), s.free_vars.end(), j);
            if (free) {
                c[static_cast<std::size_t>(j)] = (u + power - 1) / power;
            } else if (u % power == 0) {
                c[static_cast<std::size_t>(j)] = u / power;
            } else {
                survives = false;
            }
        }
        if (survives)
            out.decomposition.spaces.push_back({Monomial(std::move(c)), s.free_vars});
        else
            out.discarded.push_back(s);
    }
    return out;
}

}  // namespace stanley
