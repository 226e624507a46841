#pragma once

#include "btb/localfield.hpp"

#include <vector>

namespace btb {

// O-lattices in F^n: Smith normal form over the valuation ring and the
// affine coset-solution count with its |det|^{-1} bound.

struct LatticeMatrix {
    Field fld;
    int n = 0;
    std::vector<Elem> a;  // row-major, n*n

    Elem& at(int i, int j) { return a[i * n + j]; }
    const Elem& at(int i, int j) const { return a[i * n + j]; }

    static LatticeMatrix identity(const Field& F, int n, int prec);
    static LatticeMatrix scalar(const Field& F, int n, const Elem& s, int prec);
};

// Row-major literal: rows split by ';', entries by ',' in element syntax.
LatticeMatrix parse_matrix(const Field& F, const std::string& text, int prec);

struct SnfResult {
    LatticeMatrix p;               // row operations, unimodular over O
    LatticeMatrix p_inv;
    LatticeMatrix q;               // column operations, unimodular over O
    LatticeMatrix q_inv;
    std::vector<long long> d;      // elementary-divisor digits, ascending
    long long det_digits() const;  // sum of d
};

LatticeMatrix mat_mul(const LatticeMatrix& a, const LatticeMatrix& b);
std::vector<Elem> mat_vec(const LatticeMatrix& a, const std::vector<Elem>& v);

// P*M*Q = diag(pi^{d_1} u_1, ..., pi^{d_n} u_n) with d ascending. Pivots are
// entries of minimal valuation, ties broken row-major.
SnfResult smith_normal_form(const LatticeMatrix& m);

long long det_valuation_digits(const LatticeMatrix& m);

// #{ l in L/L' : M l + v in L' } with L = O^n and L' the column span of
// `sub`, by exhaustive enumeration of L/L'. Requires M L <= L, M L' <= L',
// v in L, and |L/L'| within `cap`.
long long count_affine_solutions(const LatticeMatrix& m, const std::vector<Elem>& v,
                                 const LatticeMatrix& sub, long long cap = 1000000);

struct LatticeBoundReport {
    long long count = 0;
    long long bound_digits = 0;  // v(det M) in pi-digits
    bool holds = false;          // count <= q^{bound_digits}, exact integers
};

LatticeBoundReport verify_lattice_bound(const LatticeMatrix& m, const std::vector<Elem>& v,
                                        const LatticeMatrix& sub, long long cap = 1000000);

}  // namespace btb
