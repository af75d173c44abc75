#pragma once

#include <string>
#include <vector>

#include "qstein/lincomb.hpp"

namespace qstein {

enum class IndexKind { Z, N, Zmod };

// Basis-index domain of an algebra: all integers, nonnegative integers, or
// residues mod m.
struct IndexSet {
    IndexKind kind = IndexKind::Z;
    long modulus = 0;  // only for Zmod

    bool contains(long i) const {
        switch (kind) {
            case IndexKind::Z: return true;
            case IndexKind::N: return i >= 0;
            case IndexKind::Zmod: return i >= 0 && i < modulus;
        }
        return false;
    }

    // Canonical representative (reduces mod m; identity otherwise).
    long canon(long i) const {
        if (kind != IndexKind::Zmod) return i;
        long r = i % modulus;
        return r < 0 ? r + modulus : r;
    }

    friend bool operator==(const IndexSet& a, const IndexSet& b) {
        return a.kind == b.kind && a.modulus == b.modulus;
    }
    friend bool operator!=(const IndexSet& a, const IndexSet& b) { return !(a == b); }
};

// The ten concrete based Hopf algebras, collapsed to eight structure tables:
// the completed algebras O(C), O(C^x), O*(C^x), O*(C) share structure
// constants with their polynomial/current counterparts and are represented
// by finite truncations of the same carrier.
struct AlgebraId {
    enum class Tag {
        FunZ,           // O(Z) = C^Z, pointwise product on 1_n
        ChargesZ,       // O*(Z) = C_Z, convolution on delta^k
        LaurentCx,      // R(C^x) / O(C^x), convolution on z^k
        CurrentsCx,     // R*(C^x) / O*(C^x), pointwise on zeta_k
        PolyC,          // R(C) / O(C), convolution on t^k
        CurrentsC,      // R*(C) / O*(C), convolution on tau^k
        CyclicFun,      // C^G for G = Z_m, pointwise on 1_x
        CyclicCharges,  // C_G for G = Z_m, convolution on delta^x
    };

    Tag tag = Tag::LaurentCx;
    long modulus = 0;  // cyclic algebras only

    IndexSet index_set() const;
    bool pointwise() const;      // diagonal structure constants
    bool windowed_unit() const;  // unit is an infinite sum (FunZ, CurrentsCx)
    bool windowed_coproduct() const;
    std::string name() const;
    std::string basis_symbol() const;  // "1", "d", "z", "zeta", "t", "tau"
    static AlgebraId from_name(const std::string& name);  // throws FlagError

    friend bool operator==(const AlgebraId& a, const AlgebraId& b) {
        return a.tag == b.tag && a.modulus == b.modulus;
    }
    friend bool operator!=(const AlgebraId& a, const AlgebraId& b) { return !(a == b); }
};

AlgebraId fun_z();
AlgebraId charges_z();
AlgebraId laurent_cx();
AlgebraId currents_cx();
AlgebraId poly_c();
AlgebraId currents_c();
AlgebraId cyclic_fun(long m);
AlgebraId cyclic_charges(long m);

// Finitely supported coefficient vector over an index set.  Indices are
// canonicalized (mod m) and validated on insertion.
class GradedElem {
public:
    explicit GradedElem(IndexSet set) : set_(set) {}

    static GradedElem basis(IndexSet set, long index, GaussianRational c = GaussianRational(1));

    void add_term(long index, const GaussianRational& c);

    const IndexSet& index_set() const { return set_; }
    const LinComb<long>& lin() const { return v_; }
    const std::map<long, GaussianRational>& terms() const { return v_.terms(); }
    GaussianRational coeff(long i) const { return v_.coeff(set_.canon(i)); }
    bool is_zero() const { return v_.is_zero(); }

    GradedElem& operator+=(const GradedElem& o);
    GradedElem& operator-=(const GradedElem& o);
    GradedElem scaled(const GaussianRational& s) const;

    friend GradedElem operator+(GradedElem a, const GradedElem& b) { a += b; return a; }
    friend GradedElem operator-(GradedElem a, const GradedElem& b) { a -= b; return a; }
    friend bool operator==(const GradedElem& a, const GradedElem& b) {
        return a.set_ == b.set_ && a.v_ == b.v_;
    }
    friend bool operator!=(const GradedElem& a, const GradedElem& b) { return !(a == b); }

    std::string str(const std::string& symbol = "e") const;

private:
    IndexSet set_;
    LinComb<long> v_;
};

// Element of a tensor square; both legs carry the same index set here since
// every coproduct in the library lands in H (x) H.
class TensorElem {
public:
    explicit TensorElem(IndexSet set) : set_(set) {}

    static TensorElem basis(IndexSet set, long i, long j,
                            GaussianRational c = GaussianRational(1));

    void add_term(long i, long j, const GaussianRational& c);

    const IndexSet& index_set() const { return set_; }
    const LinComb<std::pair<long, long>>& lin() const { return v_; }
    const std::map<std::pair<long, long>, GaussianRational>& terms() const { return v_.terms(); }
    bool is_zero() const { return v_.is_zero(); }

    TensorElem& operator+=(const TensorElem& o);
    TensorElem scaled(const GaussianRational& s) const;

    friend bool operator==(const TensorElem& a, const TensorElem& b) {
        return a.set_ == b.set_ && a.v_ == b.v_;
    }
    friend bool operator!=(const TensorElem& a, const TensorElem& b) { return !(a == b); }

private:
    IndexSet set_;
    LinComb<std::pair<long, long>> v_;
};

// --- structure maps -------------------------------------------------------

GradedElem mul(const AlgebraId& alg, const GradedElem& u, const GradedElem& v);

// For algebras with finitely supported unit the truncation is ignored; for
// FunZ / CurrentsCx the window |n| <= truncation of the infinite sum is
// returned and all unit-law assertions are window-relative.
GradedElem unit(const AlgebraId& alg, long truncation);

// Window applies to the infinite coproduct sums of FunZ / CurrentsCx (the
// first tensor leg runs over |m| <= window); other algebras ignore it.
TensorElem coproduct(const AlgebraId& alg, const GradedElem& u, long window);

GaussianRational counit(const AlgebraId& alg, const GradedElem& u);

GradedElem antipode(const AlgebraId& alg, const GradedElem& u);

// Componentwise product on the tensor square: (a(x)b)(c(x)d) = ac (x) bd.
TensorElem tensor_mul(const AlgebraId& alg, const TensorElem& s, const TensorElem& t);

// --- duality --------------------------------------------------------------

// Dual pairs of based algebras; the first member is the function side.
struct DualPairId {
    AlgebraId fun;
    AlgebraId dual;

    static DualPairId pair_z();                 // (FunZ, ChargesZ), weight 1
    static DualPairId pair_cx();                // (LaurentCx, CurrentsCx), weight 1
    static DualPairId pair_c();                 // (PolyC, CurrentsC), weight n!
    static DualPairId pair_cyclic(long m);      // (CyclicFun, CyclicCharges), weight 1
    static DualPairId for_algebra(const AlgebraId& alg);  // pair containing alg
};

// Weight w_n of the pairing <basis_n, dualbasis_n>: n! for the C pair,
// 1 otherwise.
GaussianRational pair_weight(const DualPairId& p, long n);

// <u, a> = sum_n u_n a_n w_n; throws PairMismatch on wrong index sets.
GaussianRational pair(const DualPairId& p, const GradedElem& u, const GradedElem& a);

// <u1 (x) u2, a1 (x) a2> with the weight applied per leg.
GaussianRational pair_tensor(const DualPairId& p, const TensorElem& u, const TensorElem& a);

// --- grouplike elements ----------------------------------------------------

// kappa(a) = a (x) a, eps(a) = 1 and a sigma(a) = unit (windowed where the
// unit is an infinite sum).
bool grouplike_check(const AlgebraId& alg, const GradedElem& a, long window);

// Basis indices |n| <= window intersected with the algebra's index set.
std::vector<long> basis_window(const AlgebraId& alg, long window);

}  // namespace qstein
