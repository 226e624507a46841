#pragma once

#include "btb/localfield.hpp"
#include "btb/rootsys.hpp"

#include <optional>
#include <vector>

namespace btb {

// Per-element invariants of a regular semisimple element: the valuations
// v(alpha(gamma) - 1) over the absolute roots, their sum v(D), the exponent
// lambda with q^lambda = |D|, the singular depth, and the compactness and
// regularity flags.

struct ElementInvariants {
    std::vector<Rat> root_vals;  // one per root of (G, T), finite (else not regular)
    Rat d_val;                   // v(D) = sum of root_vals
    Rat lambda;                  // -v(D)
    Rat sd;                      // max of root_vals
    bool compact = false;             // all eigenvalue valuations zero
    bool compact_mod_center = false;  // all eigenvalue valuations equal
    bool regular = false;
};

// Split torus of GL_n: gamma given by its diagonal entries.
ElementInvariants element_invariants_split(const std::vector<Elem>& diag);

// Elliptic torus inside GL_2: gamma = a + b*gen over a quadratic extension E
// (unramified or tamely ramified); eigenvalues are the two conjugates.
ElementInvariants element_invariants_elliptic(const Elem& a, const Elem& b, const Field& E);

// Squared displacement of the translation action of a split-diagonal torus
// element on the apartment: <nu, nu> with <nu, chi> = -v(chi(t)).
Rat displacement_sq(const std::vector<Rat>& diag_valuations, const RootSystem& rs);

// C * (ht(Phi)*sd + 1)^m * q^{v(D)/2}
QPow character_bound(const ElementInvariants& inv, const RootSystem& rs, const Rat& c,
                     int m, long long q);

struct SimplexCountReport {
    std::vector<long long> counts;  // closed cells inside the box, per r = 1..R
    Rat c_fit;                      // minimal c with count(r) <= c * r^rank
    long long vertices = 0, edges = 0, faces = 0;  // breakdown for the last r
};

// Closed polysimplices of the apartment complex contained in the box
// { |alpha_i(x)| <= r : alpha_i simple }; rank <= 2.
SimplexCountReport simplex_count_ball(const RootSystem& rs, int r_max);

}  // namespace btb
