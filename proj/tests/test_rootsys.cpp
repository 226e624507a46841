#include "btb/rootsys.hpp"

#include <algorithm>
#include <random>

#include "doctest.h"

using namespace btb;

namespace {

Pt rp(std::initializer_list<long long> num, long long den = 1) {
    Pt x;
    for (long long v : num) x.push_back(Rat(Int(v), Int(den)));
    return x;
}

// independent vertex oracle for rank 2: solve every 2x2 system
// { a(y) = k_a, b(y) = k_b } with integer levels in range, keep solutions in
// the half-open box [x, x + bound)^cone and filter by is_vertex
std::vector<Pt> cone_vertices_by_intersection(const RootSystem& rs, const Pt& x,
                                              const Rat& bound) {
    REQUIRE(rs.rank == 2);
    std::set<std::pair<Rat, Rat>> found;
    long long K = 8 * static_cast<long long>(rat_ceil(bound)) + 8;
    for (size_t ia = 0; ia < rs.positive.size(); ++ia)
        for (size_t ib = ia + 1; ib < rs.positive.size(); ++ib) {
            const auto& A = rs.positive[ia].c;
            const auto& B = rs.positive[ib].c;
            long long det = static_cast<long long>(A[0]) * B[1] -
                            static_cast<long long>(A[1]) * B[0];
            if (det == 0) continue;
            for (long long ka = -K; ka <= K; ++ka)
                for (long long kb = -K; kb <= K; ++kb) {
                    // y = M^{-1} (ka, kb)
                    Rat y0 = make_rat(Int(ka * B[1] - kb * A[1]), Int(det));
                    Rat y1 = make_rat(Int(kb * A[0] - ka * B[0]), Int(det));
                    Pt y{y0, y1};
                    bool in_box = true;
                    for (int j = 0; j < 2; ++j) {
                        Rat t = y[j] - x[j];
                        if (t < Rat(0) || t >= bound) in_box = false;
                    }
                    if (in_box && is_vertex(rs, y)) found.insert({y0, y1});
                }
        }
    std::vector<Pt> out;
    for (const auto& pr : found) out.push_back(Pt{pr.first, pr.second});
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("construction facts") {
    auto a2 = build_root_system("A2");
    CHECK(a2.ht_max == 2);
    CHECK(a2.highest == std::vector<int>{1, 1});
    CHECK(a2.positive.size() == 3);

    auto g2 = build_root_system("G2");
    CHECK(g2.ht_max == 5);
    CHECK(g2.highest == std::vector<int>{3, 2});
    CHECK(g2.positive.size() == 6);

    auto b2 = build_root_system("B2");
    CHECK(b2.ht_max == 3);
    CHECK(b2.highest == std::vector<int>{1, 2});

    auto c2 = build_root_system("C2");
    CHECK(c2.highest == std::vector<int>{2, 1});

    auto a3 = build_root_system("A3");
    CHECK(a3.positive.size() == 6);
    CHECK(a3.ht_max == 3);

    auto a1 = build_root_system("A1");
    CHECK(a1.eval(a1.positive[0], a1.special_vertex(0)) == rat(1));

    CHECK_THROWS_AS(build_root_system("E8"), config_error);
}

TEST_CASE("heights") {
    auto a2 = build_root_system("A2");
    for (const auto& r : a2.positive)
        if (r.height() == 1) CHECK(height(a2, r) == 1);
    CHECK(height(a2, Root{{1, 1}}) == 2);

    auto b2 = build_root_system("B2");
    CHECK(height(b2, Root{{1, 2}}) == 3);
    CHECK_THROWS_AS(height(b2, Root{{-1, 0}}), degenerate_error);
}

TEST_CASE("special vertices pair against simple roots") {
    for (const char* name : {"A1", "A2", "A3", "B2", "C2", "G2"}) {
        auto rs = build_root_system(name);
        for (int i = 0; i < rs.rank; ++i) {
            Pt ai = rs.special_vertex(i);
            CHECK(is_vertex(rs, ai));
            for (int j = 0; j < rs.rank; ++j) {
                Root aj;
                aj.c.assign(rs.rank, 0);
                aj.c[j] = 1;
                Rat expect = i == j ? Rat(1, Int(rs.highest[i])) : Rat(0);
                CHECK(rs.eval(aj, ai) == expect);
            }
        }
    }
}

TEST_CASE("weyl form values and invariance") {
    auto a1 = build_root_system("A1");
    CHECK(weyl_form(a1, rp({1}), rp({1})) == rat(1));

    auto a2 = build_root_system("A2");
    Pt w1 = rp({1, 0});  // fundamental coweight: alpha_1 = 1, alpha_2 = 0
    CHECK(weyl_form(a2, w1, w1) == rat(2));

    std::mt19937 rng(4);
    std::uniform_int_distribution<long long> num(-12, 12);
    for (const char* name : {"A2", "A3", "B2", "C2", "G2"}) {
        auto rs = build_root_system(name);
        for (int it = 0; it < 30; ++it) {
            Pt v(rs.rank), w(rs.rank);
            for (int j = 0; j < rs.rank; ++j) {
                v[j] = Rat(Int(num(rng)), 4);
                w[j] = Rat(Int(num(rng)), 4);
            }
            CHECK(weyl_form(rs, v, w) == weyl_form(rs, w, v));
            if (v != Pt(rs.rank, Rat(0))) CHECK(weyl_form(rs, v, v) > Rat(0));
            for (int i = 0; i < rs.rank; ++i) {
                Pt sv = rs.reflect_simple(i, v), sw = rs.reflect_simple(i, w);
                CHECK(weyl_form(rs, sv, sw) == weyl_form(rs, v, w));
            }
        }
    }
}

TEST_CASE("vertex recognition") {
    auto a1 = build_root_system("A1");
    CHECK(is_vertex(a1, rp({0})));
    CHECK_FALSE(is_vertex(a1, rp({1}, 2)));

    auto a2 = build_root_system("A2");
    CHECK(is_vertex(a2, rp({0, 0})));
    CHECK(is_vertex(a2, a2.special_vertex(0)));
    CHECK_FALSE(is_vertex(a2, rp({1, 1}, 3)));  // barycenter of an alcove

    auto b2 = build_root_system("B2");
    CHECK(is_vertex(b2, b2.special_vertex(1)));  // half-integral special point
    CHECK_FALSE(is_vertex(b2, rp({1, 1}, 4)));
}

TEST_CASE("cone vertex enumeration: stated cases") {
    auto a1 = build_root_system("A1");
    CHECK(enumerate_cone_vertices(a1, rp({0}), rat(0)).empty());
    auto v3 = enumerate_cone_vertices(a1, rp({0}), rat(3));
    CHECK(v3.size() == 3);  // alpha(y) in {0, 1, 2}

    auto a2 = build_root_system("A2");
    auto got = enumerate_cone_vertices(a2, rp({0, 0}), rat(2));
    auto oracle = cone_vertices_by_intersection(a2, rp({0, 0}), rat(2));
    CHECK(got == oracle);
}

TEST_CASE("cone vertex enumeration matches the intersection oracle") {
    for (const char* name : {"A2", "B2", "C2", "G2"}) {
        auto rs = build_root_system(name);
        for (int b = 1; b <= 2; ++b) {
            auto got = enumerate_cone_vertices(rs, Pt(rs.rank, Rat(0)), rat(b));
            auto oracle = cone_vertices_by_intersection(rs, Pt(rs.rank, Rat(0)), rat(b));
            CHECK(got == oracle);
            // reported constant c: count <= c * bound^n with c from the run
            CHECK(got.size() <= static_cast<size_t>(64 * b * b));
        }
    }
}

TEST_CASE("cone vertices are closed under the coordinate order") {
    auto a2 = build_root_system("A2");
    auto vs = enumerate_cone_vertices(a2, rp({0, 0}), rat(3));
    for (const auto& y : vs)
        for (const auto& y2 : vs) {
            Pt meet(2);
            for (int j = 0; j < 2; ++j) meet[j] = std::min(y[j], y2[j]);
            if (is_vertex(a2, meet))
                CHECK(std::find(vs.begin(), vs.end(), meet) != vs.end());
        }
}

TEST_CASE("moving along a special direction increases displacement (property)") {
    std::mt19937 rng(66);
    std::uniform_int_distribution<long long> num(0, 10);
    for (const char* name : {"A1", "A2", "A3", "B2", "G2"}) {
        auto rs = build_root_system(name);
        for (int it = 0; it < 25; ++it) {
            Pt x(rs.rank);
            for (int j = 0; j < rs.rank; ++j) x[j] = Rat(Int(num(rng)), 3);  // closed cone
            for (int i = 0; i < rs.rank; ++i) {
                Pt ai = rs.special_vertex(i);
                for (Rat t : {Rat(1, 4), Rat(1, 2), Rat(1), Rat(2)}) {
                    Pt y(x);
                    for (int j = 0; j < rs.rank; ++j) y[j] = x[j] + t * ai[j];
                    CHECK(weyl_form(rs, y, y) > weyl_form(rs, x, x));
                }
            }
        }
    }
}

TEST_CASE("affine reflections fix their hyperplane and preserve the form") {
    auto g2 = build_root_system("G2");
    std::mt19937 rng(8);
    std::uniform_int_distribution<long long> num(-6, 6);
    for (int it = 0; it < 20; ++it) {
        const Root& beta = g2.positive[it % g2.positive.size()];
        Rat k(Int(num(rng)), 1);
        Pt x{Rat(Int(num(rng)), 2), Rat(Int(num(rng)), 2)};
        Pt y = g2.reflect_affine(beta, k, x);
        CHECK(g2.eval(beta, y) == Rat(2) * k - g2.eval(beta, x));
        Pt yy = g2.reflect_affine(beta, k, y);
        CHECK(yy == x);  // involution
    }
}
