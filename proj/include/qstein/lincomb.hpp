#pragma once

#include <map>
#include <utility>

#include "qstein/rational.hpp"

namespace qstein {

// Finitely supported map from a basis-index set to Q(i), the carrier for
// every algebra element in the library.  Zero coefficients are never stored,
// so operator== is canonical-form equality and map order makes all printing
// deterministic.
template <class Index>
class LinComb {
public:
    using index_type = Index;
    using map_type = std::map<Index, GaussianRational>;

    LinComb() = default;

    static LinComb basis(const Index& i, GaussianRational c = GaussianRational(1)) {
        LinComb v;
        v.add(i, c);
        return v;
    }

    void add(const Index& i, const GaussianRational& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(i);
        if (it == terms_.end()) {
            terms_.emplace(i, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    const map_type& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    GaussianRational coeff(const Index& i) const {
        auto it = terms_.find(i);
        return it == terms_.end() ? GaussianRational(0) : it->second;
    }

    LinComb& operator+=(const LinComb& o) {
        for (const auto& [i, c] : o.terms_) add(i, c);
        return *this;
    }
    LinComb& operator-=(const LinComb& o) {
        for (const auto& [i, c] : o.terms_) add(i, -c);
        return *this;
    }

    LinComb scaled(const GaussianRational& s) const {
        LinComb out;
        if (s.is_zero()) return out;
        for (const auto& [i, c] : terms_) out.terms_.emplace(i, s * c);
        return out;
    }

    friend LinComb operator+(LinComb a, const LinComb& b) { a += b; return a; }
    friend LinComb operator-(LinComb a, const LinComb& b) { a -= b; return a; }
    friend LinComb operator*(const GaussianRational& s, const LinComb& v) { return v.scaled(s); }

    friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LinComb& a, const LinComb& b) { return !(a == b); }

private:
    map_type terms_;
};

template <class A, class B>
LinComb<std::pair<A, B>> tensor(const LinComb<A>& a, const LinComb<B>& b) {
    LinComb<std::pair<A, B>> out;
    for (const auto& [i, c] : a.terms())
        for (const auto& [j, d] : b.terms()) out.add({i, j}, c * d);
    return out;
}

}  // namespace qstein
