#pragma once

#include "btb/localfield.hpp"

#include <array>
#include <vector>

namespace btb {

// The rank-1 building of GL_2 over a base field: the (q+1)-regular tree of
// lattice classes. Vertices are canonical homothety-class representatives
// [[p^a, b],[0, 1]] with b a coset of p^a O, stored exactly as b = B / p^k.
// The standard apartment line is the set of diagonal classes (b = 0).
//
// All geometry here is exact: matrices act through rational arithmetic and
// canonical forms are syntactically comparable. This module is the oracle
// the coset-enumeration counts are checked against.

struct TreeVertex {
    long long a = 0;  // pi-exponent of the canonical representative
    long long k = 0;  // b = B / p^k with p not dividing B when k > 0
    long long B = 0;  // 0 <= B < p^{a+k}

    bool operator==(const TreeVertex& o) const { return a == o.a && k == o.k && B == o.B; }
    bool operator<(const TreeVertex& o) const {
        if (a != o.a) return a < o.a;
        if (k != o.k) return k < o.k;
        return B < o.B;
    }
};

using RatMat2 = std::array<Rat, 4>;  // row-major 2x2

struct Tree {
    Field fld;  // base field; q = p

    explicit Tree(const Field& F);

    long long q() const { return fld->p; }
    TreeVertex origin() const { return TreeVertex{0, 0, 0}; }
    TreeVertex line_vertex(long long c) const { return TreeVertex{c, 0, 0}; }
    bool on_line(const TreeVertex& v) const { return v.B == 0 && v.k == 0; }

    // canonical class of the column span of g (columns generate the lattice)
    TreeVertex classify(const RatMat2& g) const;
    RatMat2 basis(const TreeVertex& v) const;

    TreeVertex act(const RatMat2& g, const TreeVertex& v) const;
    // action by a matrix of truncated elements; entries must be certified to
    // `digits` absolute pi-digits or precision_error is raised
    TreeVertex act(const std::array<Elem, 4>& g, const TreeVertex& v, long long digits) const;

    long long distance(const TreeVertex& u, const TreeVertex& v) const;
    std::vector<TreeVertex> neighbors(const TreeVertex& v) const;
    std::vector<TreeVertex> ball(const TreeVertex& center, long long radius,
                                 long long cap = 2000000) const;

    // z is above x (x on the line) if x attains the minimal distance from z
    // to the apartment line; ties count for every minimizer
    bool is_above(const TreeVertex& z, const TreeVertex& x) const;

    // gamma-fixed vertices above x within tree distance max_radius of x
    long long count_fixed_above(const RatMat2& gamma, const TreeVertex& x, long long max_radius,
                                long long cap = 2000000) const;
    // gamma-fixed vertices in the full ball around a center
    long long count_fixed_ball(const RatMat2& gamma, const TreeVertex& center,
                               long long radius, long long cap = 2000000) const;
    // fixed vertices above x at exactly the given depth (cutoff checks)
    long long count_fixed_above_at(const RatMat2& gamma, const TreeVertex& x, long long depth,
                                   long long cap = 2000000) const;

    std::string vertex_str(const TreeVertex& v) const;  // "a;B/p^k"
};

long long vp_rat(const Rat& r, long long p);  // +LLONG_MAX/2 convention for 0

RatMat2 rat_mat2(const Rat& a, const Rat& b, const Rat& c, const Rat& d);
RatMat2 mat2_mul(const RatMat2& x, const RatMat2& y);
RatMat2 mat2_inv(const RatMat2& x);

}  // namespace btb
