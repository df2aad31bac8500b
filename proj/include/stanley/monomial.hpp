#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace stanley {

/// A monomial in a fixed ambient ring K[x_1,...,x_n], stored as its exponent
/// vector. Variables are indexed 0..n-1 internally; text I/O uses x1..xn.
/// The all-zero vector is the unit monomial 1.
class Monomial {
public:
    explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
        if (exps_.empty())
            throw std::invalid_argument("Monomial: ambient variable count must be positive");
        for (int e : exps_)
            if (e < 0) throw std::invalid_argument("Monomial: negative exponent");
    }

    static Monomial unit(int n) { return Monomial(std::vector<int>(check_n(n), 0)); }

    static Monomial variable(int n, int var, int power = 1) {
        std::vector<int> e(check_n(n), 0);
        if (var < 0 || var >= n) throw std::invalid_argument("Monomial: variable index out of range");
        if (power < 1) throw std::invalid_argument("Monomial: power must be positive");
        e[var] = power;
        return Monomial(std::move(e));
    }

    int vars() const { return static_cast<int>(exps_.size()); }
    int exponent(int j) const { return exps_[static_cast<std::size_t>(j)]; }
    const std::vector<int>& exponents() const { return exps_; }

    int degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }
    bool is_unit() const { return degree() == 0; }

    bool is_squarefree() const {
        return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e <= 1; });
    }

    std::vector<int> support() const {
        std::vector<int> s;
        for (int j = 0; j < vars(); ++j)
            if (exps_[static_cast<std::size_t>(j)] > 0) s.push_back(j);
        return s;
    }

    /// Squarefree part: product of the variables dividing this monomial.
    Monomial support_monomial() const {
        std::vector<int> e(exps_.size());
        std::transform(exps_.begin(), exps_.end(), e.begin(), [](int x) { return x > 0 ? 1 : 0; });
        return Monomial(std::move(e));
    }

    int max_exponent() const { return *std::max_element(exps_.begin(), exps_.end()); }

    /// Componentwise <=, i.e. this | other in the ambient ring.
    bool divides(const Monomial& other) const {
        match(other);
        for (std::size_t j = 0; j < exps_.size(); ++j)
            if (exps_[j] > other.exps_[j]) return false;
        return true;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        return a.zip(b, [](int x, int y) { return x + y; });
    }
    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        return a.zip(b, [](int x, int y) { return std::max(x, y); });
    }
    friend Monomial gcd(const Monomial& a, const Monomial& b) {
        return a.zip(b, [](int x, int y) { return std::min(x, y); });
    }
    /// a : b = a / gcd(a, b).
    friend Monomial colon(const Monomial& a, const Monomial& b) {
        return a.zip(b, [](int x, int y) { return std::max(x - y, 0); });
    }

    // Lexicographic order on exponent vectors; the canonical generator order.
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

    std::string str() const {
        if (is_unit()) return "1";
        std::string out;
        for (int j = 0; j < vars(); ++j) {
            int e = exps_[static_cast<std::size_t>(j)];
            if (e == 0) continue;
            if (!out.empty()) out += '*';
            out += 'x';
            out += std::to_string(j + 1);
            if (e > 1) {
                out += '^';
                out += std::to_string(e);
            }
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const Monomial& m) { return os << m.str(); }

private:
    static int check_n(int n) {
        if (n < 1) throw std::invalid_argument("Monomial: ambient variable count must be positive");
        return n;
    }

    void match(const Monomial& other) const {
        if (exps_.size() != other.exps_.size())
            throw std::invalid_argument("Monomial: ambient variable count mismatch");
    }

    template <class Op>
    Monomial zip(const Monomial& other, Op op) const {
        match(other);
        std::vector<int> e(exps_.size());
        for (std::size_t j = 0; j < exps_.size(); ++j) e[j] = op(exps_[j], other.exps_[j]);
        return Monomial(std::move(e));
    }

    std::vector<int> exps_;
};

}  // namespace stanley
