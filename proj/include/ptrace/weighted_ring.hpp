#pragma once

#include "ptrace/errors.hpp"

#include <cstdint>
#include <vector>

namespace ptrace {

using Exponents = std::vector<std::int64_t>;

// Polynomial ring C[x_1..x_n] with positive integer variable weights.
struct WeightedRing {
    std::vector<std::int64_t> weights;

    explicit WeightedRing(std::vector<std::int64_t> w) : weights(std::move(w)) {
        if (weights.empty()) throw ValueError("ring needs at least one variable");
        for (auto a : weights)
            if (a < 1) throw ValueError("variable weights must be >= 1");
    }

    std::size_t nvars() const { return weights.size(); }

    std::int64_t weighted_degree(const Exponents& e) const {
        std::int64_t d = 0;
        for (std::size_t i = 0; i < weights.size(); ++i) d += e[i] * weights[i];
        return d;
    }

    bool operator==(const WeightedRing& o) const { return weights == o.weights; }
    bool operator!=(const WeightedRing& o) const { return !(*this == o); }
};

// Canonical monomial order: graded-lex, x_1 > x_2 > ... > x_n.
// a precedes b iff sum(a) < sum(b), or the sums tie and a is
// lexicographically smaller reading exponents left to right.
struct GradedLexLess {
    bool operator()(const Exponents& a, const Exponents& b) const {
        std::int64_t ta = 0, tb = 0;
        for (auto v : a) ta += v;
        for (auto v : b) tb += v;
        if (ta != tb) return ta < tb;
        return a < b;
    }
};

namespace detail {
inline void graded_monomials_rec(const WeightedRing& ring, std::size_t var,
                                 std::int64_t remaining, Exponents& cur,
                                 std::vector<Exponents>& out) {
    if (var + 1 == ring.nvars()) {
        if (remaining % ring.weights[var] == 0) {
            cur[var] = remaining / ring.weights[var];
            out.push_back(cur);
            cur[var] = 0;
        }
        return;
    }
    for (std::int64_t e = 0; e * ring.weights[var] <= remaining; ++e) {
        cur[var] = e;
        graded_monomials_rec(ring, var + 1, remaining - e * ring.weights[var], cur, out);
    }
    cur[var] = 0;
}
} // namespace detail

// All exponent vectors of weighted degree exactly w, sorted in the
// canonical graded-lex order. Negative w yields the empty list.
inline std::vector<Exponents> graded_monomials(const WeightedRing& ring, std::int64_t w) {
    std::vector<Exponents> out;
    if (w < 0) return out;
    Exponents cur(ring.nvars(), 0);
    detail::graded_monomials_rec(ring, 0, w, cur, out);
    std::sort(out.begin(), out.end(), GradedLexLess{});
    return out;
}

} // namespace ptrace
