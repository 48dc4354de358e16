#pragma once

#include "ptrace/errors.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>

namespace ptrace {

// Finitely supported integer-valued function on Z^K; the exponent keys
// may be negative (dual weights are). Used both for dimension tables
// (values >= 0) and as Laurent-polynomial coefficients of a truncated
// series. Zero values are never stored.
template <std::size_t K>
class Laurent {
public:
    using Key = std::array<std::int64_t, K>;
    using Map = std::map<Key, std::int64_t>;

    Laurent() = default;

    static Laurent one() {
        Laurent l;
        l.coeffs_[Key{}] = 1;
        return l;
    }

    static Laurent term(const Key& k, std::int64_t v = 1) {
        Laurent l;
        if (v != 0) l.coeffs_[k] = v;
        return l;
    }

    const Map& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    std::int64_t at(const Key& k) const {
        auto it = coeffs_.find(k);
        return it == coeffs_.end() ? 0 : it->second;
    }

    std::int64_t total() const {
        std::int64_t t = 0;
        for (const auto& [k, v] : coeffs_) t += v;
        return t;
    }

    void add(const Key& k, std::int64_t v) {
        if (v == 0) return;
        auto it = coeffs_.find(k);
        if (it == coeffs_.end()) coeffs_.emplace(k, v);
        else {
            it->second += v;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    Laurent& operator+=(const Laurent& o) {
        for (const auto& [k, v] : o.coeffs_) add(k, v);
        return *this;
    }

    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }

    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent r;
        for (const auto& [ka, va] : a.coeffs_) {
            for (const auto& [kb, vb] : b.coeffs_) {
                Key k;
                for (std::size_t i = 0; i < K; ++i) k[i] = ka[i] + kb[i];
                r.add(k, va * vb);
            }
        }
        return r;
    }

    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

    bool operator==(const Laurent& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Laurent& o) const { return !(*this == o); }

    // Forgets gradings by zeroing the listed exponent positions
    // (specialization of those variables at 1).
    Laurent specialize_ones(const std::array<bool, K>& drop) const {
        Laurent r;
        for (const auto& [k, v] : coeffs_) {
            Key nk = k;
            for (std::size_t i = 0; i < K; ++i)
                if (drop[i]) nk[i] = 0;
            r.add(nk, v);
        }
        return r;
    }

    std::string str(const std::array<std::string, K>& vars) const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, v] : coeffs_) {
            std::int64_t a = v;
            if (first) {
                if (a < 0) { os << "-"; a = -a; }
            } else {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            first = false;
            bool allzero = true;
            for (auto e : k) allzero &= (e == 0);
            if (allzero || a != 1) os << a;
            bool printed = allzero || a != 1;
            for (std::size_t i = 0; i < K; ++i) {
                if (k[i] == 0) continue;
                if (printed) os << "*";
                os << vars[i];
                if (k[i] != 1) os << "^" << k[i];
                printed = true;
            }
        }
        return os.str();
    }

private:
    Map coeffs_;
};

using GradedHilbert = Laurent<1>;
using BigradedHilbert = Laurent<2>;
using TrigradedHilbert = Laurent<3>;

inline GradedHilbert::Key g1(std::int64_t a) { return {a}; }
inline BigradedHilbert::Key g2(std::int64_t a, std::int64_t b) { return {a, b}; }
inline TrigradedHilbert::Key g3(std::int64_t a, std::int64_t b, std::int64_t c) {
    return {a, b, c};
}

// Rescales every exponent in position `pos` by an integer factor.
template <std::size_t K>
Laurent<K> scale_exponents(const Laurent<K>& l, std::size_t pos, std::int64_t factor) {
    Laurent<K> r;
    for (const auto& [k, v] : l.coeffs()) {
        auto nk = k;
        nk[pos] *= factor;
        r.add(nk, v);
    }
    return r;
}

} // namespace ptrace
