#pragma once

#include "ptrace/errors.hpp"
#include "ptrace/rational.hpp"
#include "ptrace/weighted_ring.hpp"

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace ptrace {

// Sparse multivariate polynomial over Rational, attached to a
// WeightedRing. Zero coefficients are never stored; the term map is
// kept in canonical graded-lex order so iteration is deterministic.
class Polynomial {
public:
    using TermMap = std::map<Exponents, Rational, GradedLexLess>;

    explicit Polynomial(WeightedRing ring) : ring_(std::move(ring)) {}

    Polynomial(WeightedRing ring, TermMap terms)
        : ring_(std::move(ring)), terms_(std::move(terms)) {
        prune();
    }

    static Polynomial zero(const WeightedRing& ring) { return Polynomial(ring); }

    static Polynomial constant(const WeightedRing& ring, const Rational& c) {
        Polynomial p(ring);
        if (c != 0) p.terms_[Exponents(ring.nvars(), 0)] = c;
        return p;
    }

    static Polynomial monomial(const WeightedRing& ring, const Exponents& e,
                               const Rational& c = 1) {
        if (e.size() != ring.nvars()) throw ValueError("exponent arity mismatch");
        for (auto v : e)
            if (v < 0) throw ValueError("negative exponent");
        Polynomial p(ring);
        if (c != 0) p.terms_[e] = c;
        return p;
    }

    static Polynomial variable(const WeightedRing& ring, std::size_t i) {
        if (i >= ring.nvars()) throw ValueError("variable index out of range");
        Exponents e(ring.nvars(), 0);
        e[i] = 1;
        return monomial(ring, e);
    }

    const WeightedRing& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    // Maximum weighted degree over the support; nullopt for the zero polynomial.
    std::optional<std::int64_t> weighted_degree() const {
        std::optional<std::int64_t> d;
        for (const auto& [e, c] : terms_) {
            auto w = ring_.weighted_degree(e);
            if (!d || w > *d) d = w;
        }
        return d;
    }

    bool is_homogeneous() const {
        std::optional<std::int64_t> d;
        for (const auto& [e, c] : terms_) {
            auto w = ring_.weighted_degree(e);
            if (!d) d = w;
            else if (w != *d) return false;
        }
        return true;
    }

    Polynomial operator-() const {
        Polynomial r(ring_);
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) {
        check_ring(o);
        for (const auto& [e, c] : o.terms_) {
            auto it = terms_.find(e);
            if (it == terms_.end()) {
                terms_.emplace(e, c);
            } else {
                it->second += c;
                if (it->second == 0) terms_.erase(it);
            }
        }
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) { return *this += -o; }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_ring(b);
        Polynomial r(a.ring_);
        Exponents e(a.ring_.nvars());
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                auto it = r.terms_.find(e);
                if (it == r.terms_.end()) {
                    Rational c = ca * cb;
                    if (c != 0) r.terms_.emplace(e, std::move(c));
                } else {
                    it->second += ca * cb;
                    if (it->second == 0) r.terms_.erase(it);
                }
            }
        }
        return r;
    }

    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend Polynomial operator*(const Rational& c, const Polynomial& p) {
        Polynomial r(p.ring_);
        if (c == 0) return r;
        for (const auto& [e, pc] : p.terms_) r.terms_[e] = c * pc;
        return r;
    }

    Polynomial pow(std::int64_t k) const {
        if (k < 0) throw ValueError("negative polynomial power");
        Polynomial r = constant(ring_, 1);
        Polynomial base = *this;
        while (k > 0) {
            if (k & 1) r *= base;
            base = (k >>= 1) ? base * base : base;
        }
        return r;
    }

    // Partial derivative with respect to x_{i+1} (0-based index).
    Polynomial derivative(std::size_t i) const {
        if (i >= ring_.nvars()) throw ValueError("variable index out of range");
        Polynomial r(ring_);
        for (const auto& [e, c] : terms_) {
            if (e[i] == 0) continue;
            Exponents d = e;
            d[i] -= 1;
            r.terms_[d] = c * Rational(e[i]);
        }
        return r;
    }

    bool operator==(const Polynomial& o) const {
        return ring_ == o.ring_ && terms_ == o.terms_;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Coefficient vector against the canonical basis of the weight slice
    // containing this (homogeneous) polynomial.
    std::vector<Rational> coefficients_on(const std::vector<Exponents>& basis) const {
        std::vector<Rational> v(basis.size(), Rational(0));
        for (std::size_t i = 0; i < basis.size(); ++i) v[i] = coeff(basis[i]);
        return v;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        // print leading (highest) term first
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            Rational a = c;
            if (first) {
                if (a < 0) { os << "-"; a = -a; }
            } else {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            first = false;
            bool has_vars = false;
            for (auto v : e) has_vars |= (v != 0);
            if (!has_vars || a != 1) os << rational_to_string(a);
            bool printed = !has_vars || a != 1;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (printed) os << "*";
                os << "x" << (i + 1);
                if (e[i] > 1) os << "^" << e[i];
                printed = true;
            }
        }
        return os.str();
    }

private:
    void check_ring(const Polynomial& o) const {
        if (ring_ != o.ring_) throw ValueError("polynomial ring mismatch");
    }

    void prune() {
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (it->second == 0) it = terms_.erase(it);
            else ++it;
        }
    }

    WeightedRing ring_;
    TermMap terms_;
};

// Determinant of the Jacobian matrix (d p_i / d x_j) of n polynomials
// in n variables, expanded exactly by cofactors along the first column.
inline Polynomial jacobian_det(const std::vector<Polynomial>& polys) {
    if (polys.empty()) throw ValueError("jacobian_det of empty list");
    const WeightedRing& ring = polys[0].ring();
    if (polys.size() != ring.nvars())
        throw ValueError("jacobian_det needs as many polynomials as variables");
    for (const auto& p : polys)
        if (p.ring() != ring) throw ValueError("polynomial ring mismatch");

    std::vector<std::vector<Polynomial>> m;
    m.reserve(polys.size());
    for (const auto& p : polys) {
        std::vector<Polynomial> row;
        row.reserve(ring.nvars());
        for (std::size_t j = 0; j < ring.nvars(); ++j) row.push_back(p.derivative(j));
        m.push_back(std::move(row));
    }

    std::vector<std::size_t> cols(ring.nvars());
    for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;

    struct Rec {
        const std::vector<std::vector<Polynomial>>& m;
        const WeightedRing& ring;
        Polynomial operator()(std::size_t row0, std::vector<std::size_t> cols) const {
            if (cols.size() == 1) return m[row0][cols[0]];
            Polynomial acc = Polynomial::zero(ring);
            for (std::size_t k = 0; k < cols.size(); ++k) {
                const Polynomial& piv = m[row0][cols[k]];
                if (piv.is_zero()) continue;
                std::vector<std::size_t> rest;
                rest.reserve(cols.size() - 1);
                for (std::size_t j = 0; j < cols.size(); ++j)
                    if (j != k) rest.push_back(cols[j]);
                Polynomial sub = (*this)(row0 + 1, std::move(rest));
                if (k % 2 == 0) acc += piv * sub;
                else acc -= piv * sub;
            }
            return acc;
        }
    };
    return Rec{m, ring}(0, cols);
}

} // namespace ptrace
