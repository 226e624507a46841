#pragma once

#include "btb/common.hpp"

#include <string>
#include <vector>

namespace btb {

// Reduced root systems with exact rational geometry. Apartment points are
// stored by their simple-root values x_j = alpha_j(x), so every root acts as
// an integer linear functional and the W-invariant form is a rational
// quadratic form. No floating point anywhere.

using Pt = std::vector<Rat>;

struct Root {
    std::vector<int> c;  // coefficients over the simple roots

    int height() const {
        int h = 0;
        for (int x : c) h += x;
        return h;
    }
    bool positive() const {
        for (int x : c)
            if (x < 0) return false;
        return true;
    }
    bool operator==(const Root& o) const { return c == o.c; }
    bool operator<(const Root& o) const { return c < o.c; }
};

struct RootSystem {
    std::string name;
    int rank = 0;
    std::vector<std::vector<int>> cartan;   // C[i][j] = <alpha_j, alpha_i^vee>
    std::vector<int> root_norm2;            // (alpha_i, alpha_i), per simple root
    std::vector<Root> positive;             // by height, then lex
    std::vector<int> highest;               // coefficients of the highest root
    std::vector<long long> n_alpha;         // affine period per positive root (default 1)
    int ht_max = 0;                         // height of the highest root
    long long vertex_denominator = 1;       // all vertex coordinates lie in (1/D)Z^n

    Rat eval(const Root& r, const Pt& x) const;
    Pt special_vertex(int i) const;         // a_i with alpha_j(a_i) = delta_ij / c_i
    Pt reflect_simple(int i, const Pt& x) const;
    // reflection in the affine hyperplane { beta(x) = k }
    Pt reflect_affine(const Root& beta, const Rat& k, const Pt& x) const;
    Rat inner(const Root& a, const Root& b) const;  // (a, b) from the Cartan data
};

RootSystem build_root_system(const std::string& name);

int height(const RootSystem& rs, const Root& r);

Rat weyl_form(const RootSystem& rs, const Pt& v, const Pt& w);

// x is a vertex iff the roots alpha with alpha(x) in n_alpha Z span the dual.
bool is_vertex(const RootSystem& rs, const Pt& x);

// All vertices y in x + (closed cone) with alpha_i(y - x) < bound for every
// simple root; x must be a vertex. Exhaustive via the (1/D)-grid.
std::vector<Pt> enumerate_cone_vertices(const RootSystem& rs, const Pt& x, const Rat& bound);

std::string pt_str(const Pt& x);

}  // namespace btb
