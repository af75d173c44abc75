#include "qstein/qcomb.hpp"

#include <algorithm>
#include <stdexcept>

namespace qstein {

const GaussianRational QBinomialTable::zero_{};

GaussianRational q_int(long n, const QParam& q) {
    if (n < 0) throw std::invalid_argument("q_int: n must be nonnegative");
    GaussianRational sum(0);
    GaussianRational power(1);
    for (long j = 0; j < n; ++j) {
        sum += power;
        power *= q.value();
    }
    return sum;
}

GaussianRational q_factorial(long n, const QParam& q) {
    if (n < 0) throw std::invalid_argument("q_factorial: n must be nonnegative");
    GaussianRational prod(1);
    for (long j = 1; j <= n; ++j) prod *= q_int(j, q);
    return prod;
}

GaussianRational q_binomial(long n, long k, const QParam& q) {
    if (n < 0) throw std::invalid_argument("q_binomial: n must be nonnegative");
    if (k < 0 || k > n) return GaussianRational(0);
    // One row of q-Pascal at a time, in place from the right.
    std::vector<GaussianRational> row(static_cast<std::size_t>(k) + 1, GaussianRational(0));
    row[0] = GaussianRational(1);
    for (long r = 1; r <= n; ++r) {
        long top = std::min(r, k);
        for (long j = top; j >= 1; --j) {
            // (r j)_q = (r-1 j-1)_q + q^j (r-1 j)_q
            row[static_cast<std::size_t>(j)] =
                row[static_cast<std::size_t>(j - 1)] +
                q.pow(j) * row[static_cast<std::size_t>(j)];
        }
    }
    return row[static_cast<std::size_t>(k)];
}

QBinomialTable::QBinomialTable(long max_n, QParam q) : max_n_(max_n), q_(std::move(q)) {
    if (max_n < 0) throw std::invalid_argument("QBinomialTable: max_n must be nonnegative");
    rows_.resize(static_cast<std::size_t>(max_n) + 1);
    rows_[0] = {GaussianRational(1)};
    for (long n = 1; n <= max_n; ++n) {
        auto& row = rows_[static_cast<std::size_t>(n)];
        const auto& prev = rows_[static_cast<std::size_t>(n - 1)];
        row.resize(static_cast<std::size_t>(n) + 1);
        row[0] = GaussianRational(1);
        row[static_cast<std::size_t>(n)] = GaussianRational(1);
        for (long k = 1; k < n; ++k) {
            row[static_cast<std::size_t>(k)] =
                prev[static_cast<std::size_t>(k - 1)] +
                q_.pow(k) * prev[static_cast<std::size_t>(k)];
        }
    }
}

const GaussianRational& QBinomialTable::at(long n, long k) const {
    if (n < 0 || n > max_n_) throw std::out_of_range("QBinomialTable::at: n out of range");
    if (k < 0 || k > n) return zero_;
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

bool QBinomialTable::symmetry_holds() const {
    for (long n = 0; n <= max_n_; ++n) {
        if (q_factorial(n, q_).is_zero()) continue;
        for (long k = 0; k <= n; ++k) {
            if (at(n, k) != at(n, n - k)) return false;
        }
    }
    return true;
}

bool QBinomialTable::matches_factorial_quotient() const {
    for (long n = 0; n <= max_n_; ++n) {
        for (long k = 0; k <= n; ++k) {
            GaussianRational denom = q_factorial(k, q_) * q_factorial(n - k, q_);
            if (denom.is_zero()) continue;
            if (at(n, k) != q_factorial(n, q_) / denom) return false;
        }
    }
    return true;
}

namespace {

// Word over the two-letter alphabet {x, y}; true = y.
using XYWord = std::vector<bool>;

// Rewrites yx -> q xy until the word is sorted (all x before all y),
// accumulating the scalar.  Terminates since each step removes one
// inversion.
GaussianRational normalize_xy(XYWord& w, const QParam& q) {
    GaussianRational scalar(1);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            if (w[i] && !w[i + 1]) {  // "yx"
                w[i] = false;
                w[i + 1] = true;
                scalar *= q.value();
                changed = true;
                break;
            }
        }
    }
    return scalar;
}

}  // namespace

std::vector<GaussianRational> quantum_binomial_expansion(long n, const QParam& q) {
    if (n < 0) throw std::invalid_argument("quantum_binomial_expansion: n must be nonnegative");
    std::vector<GaussianRational> coeff(static_cast<std::size_t>(n) + 1, GaussianRational(0));
    // Every word of (x+y)^n, normalized independently.
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        XYWord w(static_cast<std::size_t>(n));
        long xs = 0;
        for (long i = 0; i < n; ++i) {
            bool is_y = ((mask >> i) & 1ul) != 0;
            w[static_cast<std::size_t>(i)] = is_y;
            if (!is_y) ++xs;
        }
        coeff[static_cast<std::size_t>(xs)] += normalize_xy(w, q);
    }
    return coeff;
}

bool verify_quantum_binomial(long n, const QParam& q) {
    auto coeff = quantum_binomial_expansion(n, q);
    for (long k = 0; k <= n; ++k) {
        if (coeff[static_cast<std::size_t>(k)] != q_binomial(n, k, q)) return false;
    }
    return true;
}

GaussianRational chu_vandermonde_term(long m, long n, long l, long i, const QParam& q) {
    return q.pow((m - i) * (l - i)) * q_binomial(m, i, q) * q_binomial(n, l - i, q);
}

bool verify_chu_vandermonde(long m, long n, long l, const QParam& q) {
    if (m < 0 || n < 0 || l < 0)
        throw std::invalid_argument("verify_chu_vandermonde: arguments must be nonnegative");
    GaussianRational full(0);
    for (long i = 0; i <= l; ++i) full += chu_vandermonde_term(m, n, l, i, q);
    GaussianRational restricted(0);
    for (long i = std::max(0l, l - n); i <= std::min(l, m); ++i)
        restricted += chu_vandermonde_term(m, n, l, i, q);
    GaussianRational lhs = q_binomial(m + n, l, q);
    return lhs == full && restricted == full;
}

}  // namespace qstein
