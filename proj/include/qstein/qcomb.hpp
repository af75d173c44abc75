#pragma once

#include <vector>

#include "qstein/rational.hpp"

namespace qstein {

// Quantum combinatorics: (n)_q, (n)!_q and the q-binomial coefficients,
// plus verifiers for the quantum binomial and Chu-Vandermonde identities.
//
// q-binomials are computed by the division-free q-Pascal recursion
//   (n k)_q = (n-1 k-1)_q + q^k (n-1 k)_q,
// so roots of unity (where some (j)_q vanish) need no special casing; the
// factorial quotient is only a cross-check where the denominator is nonzero.

// 1 + q + ... + q^{n-1}; empty sum 0 for n = 0.
GaussianRational q_int(long n, const QParam& q);

// (1)_q (2)_q ... (n)_q; empty product 1 for n = 0.
GaussianRational q_factorial(long n, const QParam& q);

// (n k)_q via q-Pascal; 0 for k < 0 or k > n.
GaussianRational q_binomial(long n, long k, const QParam& q);

// Triangular table of (n k)_q for 0 <= k <= n <= max_n.
class QBinomialTable {
public:
    QBinomialTable(long max_n, QParam q);

    long max_n() const { return max_n_; }
    const QParam& q() const { return q_; }

    // 0 outside the triangle.
    const GaussianRational& at(long n, long k) const;

    // entries(n,k) == entries(n,n-k) wherever (n)!_q != 0.
    bool symmetry_holds() const;

    // entries(n,k) equals the factorial quotient wherever the denominator
    // (k)!_q (n-k)!_q is nonzero.
    bool matches_factorial_quotient() const;

private:
    long max_n_;
    QParam q_;
    std::vector<std::vector<GaussianRational>> rows_;
    static const GaussianRational zero_;
};

// Expands (x+y)^n in the free algebra on {x, y} modulo the rewrite rule
// yx -> q xy and compares the normal-form coefficients with (n k)_q.
bool verify_quantum_binomial(long n, const QParam& q);

// Normal-form coefficients of (x+y)^n under yx -> q xy; c[k] multiplies
// x^k y^{n-k}.  Exposed so tests can freeze individual coefficient rows.
std::vector<GaussianRational> quantum_binomial_expansion(long n, const QParam& q);

// Checks (m+n l)_q against both sums of the Chu-Vandermonde identity (the
// restricted range max{0,l-n} <= i <= min{l,m} and the full 0 <= i <= l).
bool verify_chu_vandermonde(long m, long n, long l, const QParam& q);

// Single Chu-Vandermonde term q^{(m-i)(l-i)} (m i)_q (n l-i)_q; the terms
// outside the restricted range vanish identically.
GaussianRational chu_vandermonde_term(long m, long n, long l, long i, const QParam& q);

}  // namespace qstein
