#include "btb/tree.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <set>

namespace btb {

namespace {
constexpr long long kInfVal = LLONG_MAX / 2;
}

long long vp_rat(const Rat& r, long long p) {
    if (r.numerator() == 0) return kInfVal;
    long long v = 0;
    Int n = r.numerator(), d = r.denominator();
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    while (d % p == 0) {
        d /= p;
        --v;
    }
    return v;
}

RatMat2 rat_mat2(const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
    return RatMat2{a, b, c, d};
}

RatMat2 mat2_mul(const RatMat2& x, const RatMat2& y) {
    return RatMat2{x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
                   x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}

RatMat2 mat2_inv(const RatMat2& x) {
    Rat det = x[0] * x[3] - x[1] * x[2];
    if (det == Rat(0)) throw degenerate_error("mat2_inv: singular");
    return RatMat2{x[3] / det, -x[1] / det, -x[2] / det, x[0] / det};
}

Tree::Tree(const Field& F) : fld(F) {
    if (F->kind != FieldKind::Base) throw config_error("Tree: base fields only");
}

RatMat2 Tree::basis(const TreeVertex& v) const {
    Rat pa = rat_pow(Rat(Int(fld->p), 1), v.a);
    Rat b = make_rat(Int(v.B), ipow(Int(fld->p), v.k));
    return RatMat2{pa, b, Rat(0), Rat(1)};
}

TreeVertex Tree::classify(const RatMat2& g) const {
    long long p = fld->p;
    Rat det = g[0] * g[3] - g[1] * g[2];
    if (det == Rat(0)) throw degenerate_error("classify: singular matrix");
    // column Hermite form over O: clear the second row to (y, 0)
    Rat x1 = g[0], y1 = g[2], x2 = g[1], y2 = g[3];
    if (vp_rat(y1, p) > vp_rat(y2, p)) {
        std::swap(x1, x2);
        std::swap(y1, y2);
    }
    if (y1 != Rat(0)) {
        Rat f = y2 / y1;  // in O by the valuation ordering
        x2 -= f * x1;
        y2 -= f * y1;
    }
    if (x2 == Rat(0) || y1 == Rat(0)) throw degenerate_error("classify: singular matrix");
    // homothety-normalize by y1: [[p^a ~ x2/y1, x1/y1 mod p^a], [0, 1]]
    long long a = vp_rat(x2, p) - vp_rat(y1, p);
    Rat b = x1 / y1;
    long long vb = vp_rat(b, p);
    TreeVertex v;
    v.a = a;
    if (vb >= a) {
        v.k = 0;
        v.B = 0;
        return v;
    }
    v.k = std::max(0LL, -vb);
    Rat scaled = b * rat_pow(Rat(Int(p), 1), v.k);
    Int mod = ipow(Int(p), a + v.k);
    Int num = scaled.numerator(), den = scaled.denominator();
    // den is prime to p; invert it mod p^{a+k}
    Int dinv;
    {
        Int t = den % mod;
        if (t < 0) t += mod;
        Int g0 = mod, x0 = 0, xx = 1, a1 = t;
        while (a1 != 0) {
            Int qq = g0 / a1;
            g0 -= qq * a1;
            std::swap(g0, a1);
            x0 -= qq * xx;
            std::swap(x0, xx);
        }
        dinv = x0 % mod;
        if (dinv < 0) dinv += mod;
    }
    Int Bi = (num % mod) * dinv % mod;
    if (Bi < 0) Bi += mod;
    v.B = static_cast<long long>(Bi);
    if (v.B == 0) v.k = 0;
    return v;
}

TreeVertex Tree::act(const RatMat2& g, const TreeVertex& v) const {
    return classify(mat2_mul(g, basis(v)));
}

TreeVertex Tree::act(const std::array<Elem, 4>& g, const TreeVertex& v, long long digits) const {
    RatMat2 m;
    for (int i = 0; i < 4; ++i)
        m[i] = g[i].is_above() && g[i].above_bound_digits() >= digits
                   ? Rat(0)
                   : g[i].exact_base_rational(digits);
    return act(m, v);
}

long long Tree::distance(const TreeVertex& u, const TreeVertex& v) const {
    RatMat2 rel = mat2_mul(mat2_inv(basis(u)), basis(v));
    long long p = fld->p;
    long long mn = kInfVal;
    for (const auto& e : rel) mn = std::min(mn, vp_rat(e, p));
    Rat det = rel[0] * rel[3] - rel[1] * rel[2];
    return vp_rat(det, p) - 2 * mn;
}

std::vector<TreeVertex> Tree::neighbors(const TreeVertex& v) const {
    long long p = fld->p;
    RatMat2 h = basis(v);
    std::vector<TreeVertex> out;
    out.reserve(p + 1);
    for (long long j = 0; j < p; ++j) {
        RatMat2 n{Rat(1), Rat(0), Rat(Int(j), 1), Rat(Int(p), 1)};
        out.push_back(classify(mat2_mul(h, n)));
    }
    RatMat2 ninf{Rat(Int(p), 1), Rat(0), Rat(0), Rat(1)};
    out.push_back(classify(mat2_mul(h, ninf)));
    return out;
}

std::vector<TreeVertex> Tree::ball(const TreeVertex& center, long long radius,
                                   long long cap) const {
    std::set<TreeVertex> seen{center};
    std::vector<TreeVertex> frontier{center}, out{center};
    for (long long r = 0; r < radius; ++r) {
        std::vector<TreeVertex> next;
        for (const auto& v : frontier)
            for (const auto& w : neighbors(v))
                if (seen.insert(w).second) {
                    next.push_back(w);
                    out.push_back(w);
                    if (static_cast<long long>(out.size()) > cap)
                        throw cap_error("tree ball larger than cap");
                }
        frontier = std::move(next);
    }
    return out;
}

bool Tree::is_above(const TreeVertex& z, const TreeVertex& x) const {
    if (!on_line(x)) throw config_error("is_above: x must lie on the standard line");
    long long dzx = distance(z, x);
    // distance to line vertices grows linearly past the projection, so a
    // window of width 2 dzx + 2 around both certifies the minimum
    long long lo = std::min(x.a, z.a) - dzx - 1;
    long long hi = std::max(x.a, z.a) + dzx + 1;
    long long best = dzx;
    for (long long c = lo; c <= hi; ++c) best = std::min(best, distance(z, line_vertex(c)));
    return dzx == best;
}

long long Tree::count_fixed_above(const RatMat2& gamma, const TreeVertex& x, long long max_radius,
                                  long long cap) const {
    long long count = 0;
    for (const auto& z : ball(x, max_radius, cap))
        if (is_above(z, x) && act(gamma, z) == z) ++count;
    return count;
}

long long Tree::count_fixed_ball(const RatMat2& gamma, const TreeVertex& center,
                                 long long radius, long long cap) const {
    long long count = 0;
    for (const auto& z : ball(center, radius, cap))
        if (act(gamma, z) == z) ++count;
    return count;
}

long long Tree::count_fixed_above_at(const RatMat2& gamma, const TreeVertex& x, long long depth,
                                     long long cap) const {
    long long count = 0;
    for (const auto& z : ball(x, depth, cap)) {
        if (distance(z, x) != depth) continue;
        if (is_above(z, x) && act(gamma, z) == z) ++count;
    }
    return count;
}

std::string Tree::vertex_str(const TreeVertex& v) const {
    std::string s = std::to_string(v.a) + ";";
    if (v.k == 0) return s + std::to_string(v.B);
    return s + std::to_string(v.B) + "/p^" + std::to_string(v.k);
}

}  // namespace btb
