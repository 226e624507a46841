#include "btb/rootsys.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace btb {

Rat RootSystem::eval(const Root& r, const Pt& x) const {
    Rat s(0);
    for (int j = 0; j < rank; ++j) s += Rat(Int(r.c[j]), 1) * x[j];
    return s;
}

Pt RootSystem::special_vertex(int i) const {
    Pt a(rank, Rat(0));
    a[i] = Rat(1, Int(highest[i]));
    return a;
}

Pt RootSystem::reflect_simple(int i, const Pt& x) const {
    // alpha_j(s_i x) = x_j - C[i][j] * x_i
    Pt y(x);
    for (int j = 0; j < rank; ++j) y[j] = x[j] - Rat(Int(cartan[i][j]), 1) * x[i];
    return y;
}

Rat RootSystem::inner(const Root& a, const Root& b) const {
    // (alpha_i, alpha_j) = C[i][j] * (alpha_i, alpha_i) / 2, extended bilinearly
    Rat s(0);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            s += Rat(Int(a.c[i]), 1) * Rat(Int(b.c[j]), 1) *
                 Rat(Int(cartan[i][j] * root_norm2[i]), 2);
    return s;
}

Pt RootSystem::reflect_affine(const Root& beta, const Rat& k, const Pt& x) const {
    // s(x)_j = x_j - <alpha_j, beta^vee> (beta(x) - k)
    Rat bx = eval(beta, x) - k;
    Rat bb = inner(beta, beta);
    Pt y(x);
    for (int j = 0; j < rank; ++j) {
        Root aj;
        aj.c.assign(rank, 0);
        aj.c[j] = 1;
        Rat pairing = Rat(2) * inner(aj, beta) / bb;
        y[j] = x[j] - pairing * bx;
    }
    return y;
}

int height(const RootSystem& rs, const Root& r) {
    (void)rs;
    if (!r.positive()) throw degenerate_error("height: negative root");
    return r.height();
}

Rat weyl_form(const RootSystem& rs, const Pt& v, const Pt& w) {
    Rat s(0);
    for (const auto& a : rs.positive) s += rs.eval(a, v) * rs.eval(a, w);
    return s;
}

namespace {

std::vector<std::vector<int>> cartan_for(const std::string& name, int& rank,
                                         std::vector<int>& norm2) {
    if (name == "A1") {
        rank = 1;
        norm2 = {2};
        return {{2}};
    }
    if (name == "A2") {
        rank = 2;
        norm2 = {2, 2};
        return {{2, -1}, {-1, 2}};
    }
    if (name == "A3") {
        rank = 3;
        norm2 = {2, 2, 2};
        return {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
    }
    if (name == "B2") {
        // alpha_1 long, alpha_2 short
        rank = 2;
        norm2 = {4, 2};
        return {{2, -1}, {-2, 2}};
    }
    if (name == "C2") {
        // alpha_1 short, alpha_2 long
        rank = 2;
        norm2 = {2, 4};
        return {{2, -2}, {-1, 2}};
    }
    if (name == "G2") {
        // alpha_1 short, alpha_2 long; highest root 3a_1 + 2a_2
        rank = 2;
        norm2 = {2, 6};
        return {{2, -3}, {-1, 2}};
    }
    throw config_error("build_root_system: unsupported name '" + name + "'");
}

}  // namespace

RootSystem build_root_system(const std::string& name) {
    RootSystem rs;
    rs.name = name;
    rs.cartan = cartan_for(name, rs.rank, rs.root_norm2);
    int n = rs.rank;

    // orbit of the simple roots under the simple reflections
    std::set<std::vector<int>> all;
    std::vector<std::vector<int>> frontier;
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(n, 0);
        e[i] = 1;
        all.insert(e);
        frontier.push_back(e);
    }
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& b : frontier)
            for (int i = 0; i < n; ++i) {
                // s_i(beta) = beta - <beta, alpha_i^vee> alpha_i
                int pair = 0;
                for (int j = 0; j < n; ++j) pair += rs.cartan[i][j] * b[j];
                std::vector<int> r(b);
                r[i] -= pair;
                if (all.insert(r).second) next.push_back(r);
            }
        frontier = std::move(next);
    }
    for (const auto& c : all) {
        Root r{c};
        if (r.positive()) rs.positive.push_back(r);
    }
    std::sort(rs.positive.begin(), rs.positive.end(), [](const Root& a, const Root& b) {
        if (a.height() != b.height()) return a.height() < b.height();
        return a.c < b.c;
    });
    rs.ht_max = rs.positive.back().height();
    rs.highest = rs.positive.back().c;
    for (int i = 0; i < n; ++i)
        if (rs.highest[i] <= 0) throw config_error("build_root_system: reducible system");
    rs.n_alpha.assign(rs.positive.size(), 1);

    // vertex coordinates have denominators dividing every nonzero n x n minor
    // of root functionals (Cramer), so D = lcm of those minors
    long long D = 1;
    int m = static_cast<int>(rs.positive.size());
    std::vector<int> pick(n);
    std::function<void(int, int)> rec = [&](int from, int depth) {
        if (depth == n) {
            std::vector<std::vector<long long>> a(n, std::vector<long long>(n));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) a[i][j] = rs.positive[pick[i]].c[j];
            long long det = 0;
            if (n == 1)
                det = a[0][0];
            else if (n == 2)
                det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
            else
                det = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
                      a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
                      a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
            det = det < 0 ? -det : det;
            if (det != 0) D = std::lcm(D, det);
            return;
        }
        for (int i = from; i < m; ++i) {
            pick[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
    rs.vertex_denominator = D;
    return rs;
}

bool is_vertex(const RootSystem& rs, const Pt& x) {
    if (static_cast<int>(x.size()) != rs.rank) throw config_error("is_vertex: wrong dimension");
    // roots through x, as functional rows; exact rank test
    std::vector<std::vector<Rat>> rows;
    for (size_t k = 0; k < rs.positive.size(); ++k) {
        Rat v = rs.eval(rs.positive[k], x) / Rat(Int(rs.n_alpha[k]), 1);
        if (rat_is_integer(v)) {
            std::vector<Rat> row(rs.rank);
            for (int j = 0; j < rs.rank; ++j) row[j] = Rat(Int(rs.positive[k].c[j]), 1);
            rows.push_back(std::move(row));
        }
    }
    int n = rs.rank, r = 0;
    for (int col = 0; col < n && r < static_cast<int>(rows.size()); ++col) {
        int piv = -1;
        for (int i = r; i < static_cast<int>(rows.size()); ++i)
            if (rows[i][col] != Rat(0)) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[r], rows[piv]);
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
            if (i == r || rows[i][col] == Rat(0)) continue;
            Rat f = rows[i][col] / rows[r][col];
            for (int j = 0; j < n; ++j) rows[i][j] -= f * rows[r][j];
        }
        ++r;
    }
    return r == rs.rank;
}

std::vector<Pt> enumerate_cone_vertices(const RootSystem& rs, const Pt& x, const Rat& bound) {
    if (!is_vertex(rs, x)) throw degenerate_error("enumerate_cone_vertices: x is not a vertex");
    std::vector<Pt> out;
    if (bound <= Rat(0)) return out;
    long long D = rs.vertex_denominator;
    for (size_t k = 0; k < rs.n_alpha.size(); ++k) D = std::lcm(D, rs.n_alpha[k]);
    // grid points x + (k_1/D, ..., k_n/D), 0 <= k_i/D < bound
    long long steps = static_cast<long long>(rat_ceil(bound * Rat(Int(D), 1)));
    std::vector<long long> k(rs.rank, 0);
    for (;;) {
        Pt y(x);
        bool inside = true;
        for (int j = 0; j < rs.rank; ++j) {
            Rat t(Int(k[j]), Int(D));
            if (t >= bound) inside = false;
            y[j] = x[j] + t;
        }
        if (inside && is_vertex(rs, y)) out.push_back(y);
        int pos = 0;
        while (pos < rs.rank && ++k[pos] == steps) {
            k[pos] = 0;
            ++pos;
        }
        if (pos == rs.rank) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string pt_str(const Pt& x) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < x.size(); ++i) {
        if (i) os << ",";
        os << rat_str(x[i]);
    }
    os << ")";
    return os.str();
}

}  // namespace btb
