#include "btb/localfield.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace btb {

namespace {

bool is_prime_small(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

long long mod_reduce(long long x, long long m) {
    long long r = x % m;
    return r < 0 ? r + m : r;
}

long long mod_inv_int(long long a, long long m) {
    long long g = m, x = 0, x1 = 1, a1 = mod_reduce(a, m);
    while (a1 != 0) {
        long long qq = g / a1;
        g -= qq * a1;
        std::swap(g, a1);
        x -= qq * x1;
        std::swap(x, x1);
    }
    if (g != 1) throw degenerate_error("mod_inv: not a unit");
    return mod_reduce(x, m);
}

int vp_int(long long n, long long p) {
    assert(n != 0);
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

// ---- polynomial arithmetic over F_p, used for residue-field work ----

using Poly = std::vector<long long>;  // coefficients, low degree first

Poly poly_trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Poly poly_mul_fp(const Poly& a, const Poly& b, long long p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] = mod_reduce(c[i + j] + a[i] * b[j], p);
    return poly_trim(c);
}

// a mod m over F_p (m nonzero)
Poly poly_mod_fp(Poly a, const Poly& m, long long p) {
    a = poly_trim(a);
    Poly mm = poly_trim(m);
    long long lead_inv = mod_inv_int(mm.back(), p);
    while (a.size() >= mm.size() && !a.empty()) {
        long long c = mod_reduce(a.back() * lead_inv, p);
        size_t shift = a.size() - mm.size();
        for (size_t j = 0; j < mm.size(); ++j)
            a[shift + j] = mod_reduce(a[shift + j] - c * mm[j], p);
        a = poly_trim(a);
    }
    return a;
}

// extended gcd over F_p[x]; returns g and u with u*a = g mod m
void poly_egcd_fp(const Poly& a, const Poly& m, long long p, Poly& g, Poly& u) {
    Poly r0 = poly_trim(m), r1 = poly_mod_fp(a, m, p);
    Poly s0 = {}, s1 = {1};
    while (!r1.empty()) {
        // divide r0 by r1
        Poly quo;
        Poly rem = r0;
        long long lead_inv = mod_inv_int(r1.back(), p);
        quo.assign(rem.size() >= r1.size() ? rem.size() - r1.size() + 1 : 0, 0);
        while (rem.size() >= r1.size() && !rem.empty()) {
            long long c = mod_reduce(rem.back() * lead_inv, p);
            size_t shift = rem.size() - r1.size();
            quo[shift] = c;
            for (size_t j = 0; j < r1.size(); ++j)
                rem[shift + j] = mod_reduce(rem[shift + j] - c * r1[j], p);
            rem = poly_trim(rem);
        }
        Poly s2 = s0;  // s2 = s0 - quo*s1
        Poly qs = poly_mul_fp(quo, s1, p);
        s2.resize(std::max(s2.size(), qs.size()), 0);
        for (size_t j = 0; j < qs.size(); ++j) s2[j] = mod_reduce(s2[j] - qs[j], p);
        s2 = poly_trim(s2);
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = s2;
    }
    g = r0;
    u = s0;
}

bool poly_irreducible_fp(const Poly& monic, long long p) {
    // brute trial division by all monic polynomials of degree <= deg/2
    int n = static_cast<int>(monic.size()) - 1;
    if (n <= 0) return false;
    for (int d = 1; 2 * d <= n; ++d) {
        long long total = 1;
        for (int i = 0; i < d; ++i) total *= p;
        for (long long code = 0; code < total; ++code) {
            Poly div(d + 1, 0);
            div[d] = 1;
            long long c = code;
            for (int i = 0; i < d; ++i) {
                div[i] = c % p;
                c /= p;
            }
            if (poly_mod_fp(monic, div, p).empty()) return false;
        }
    }
    return true;
}

int max_coord_digits(long long p) {
    // largest m with p^m <= 2^28, so products of two coordinates plus carries
    // stay within int64
    int m = 0;
    long long v = 1;
    while (v <= (1LL << 28) / p) {
        v *= p;
        ++m;
    }
    return m;
}

}  // namespace

namespace coordring {

std::vector<long long> mul(const FieldDesc& F, const std::vector<long long>& a,
                           const std::vector<long long>& b, long long pk) {
    int f = F.deg;
    if (F.kind == FieldKind::Base) return {mod_reduce(a[0] * (b[0] % pk), pk)};
    if (F.kind == FieldKind::RamifiedQuadratic)
        throw config_error("coordring::mul: unramified basis only");
    std::vector<long long> conv(2 * f - 1, 0);
    for (int i = 0; i < f; ++i)
        for (int j = 0; j < f; ++j) conv[i + j] = mod_reduce(conv[i + j] + a[i] * b[j], pk);
    for (int k = 2 * f - 2; k >= f; --k) {
        long long t = conv[k];
        if (t == 0) continue;
        conv[k] = 0;
        for (int j = 0; j < f; ++j)
            conv[k - f + j] = mod_reduce(conv[k - f + j] - t * F.res_poly[j], pk);
    }
    conv.resize(f);
    return conv;
}

std::vector<long long> inv(const FieldDesc& F, const std::vector<long long>& a, int k) {
    long long p = F.p;
    if (F.kind == FieldKind::Base) {
        long long pk = 1;
        for (int i = 0; i < k; ++i) pk *= p;
        return {mod_inv_int(a[0], pk)};
    }
    // residue-field inverse, then Newton lifting u <- u(2 - a u)
    Poly amod(a.begin(), a.end());
    for (auto& c : amod) c = mod_reduce(c, p);
    Poly modulus = F.res_poly;
    modulus.push_back(1);  // monic
    Poly g, u;
    poly_egcd_fp(amod, modulus, p, g, u);
    if (g.size() != 1) throw degenerate_error("coordring::inv: not a unit");
    long long ginv = mod_inv_int(g[0], p);
    std::vector<long long> x(F.deg, 0);
    for (size_t i = 0; i < u.size() && i < x.size(); ++i) x[i] = mod_reduce(u[i] * ginv, p);
    int cur = 1;
    while (cur < k) {
        cur = std::min(2 * cur, k);
        long long pk2 = 1;
        for (int i = 0; i < cur; ++i) pk2 *= p;
        auto au = mul(F, a, x, pk2);
        std::vector<long long> two_minus(F.deg, 0);
        for (int i = 0; i < F.deg; ++i) two_minus[i] = mod_reduce((i == 0 ? 2 : 0) - au[i], pk2);
        x = mul(F, x, two_minus, pk2);
    }
    return x;
}

}  // namespace coordring

namespace {

// monic polynomial with integer coefficient lifts, evaluated in the
// coordinate ring mod p^k
std::vector<long long> eval_monic(const FieldDesc& F, const std::vector<long long>& y,
                                  long long pk) {
    // g(y) = (((1*y + c_{f-1})*y + c_{f-2})*y + ...)*y + c_0, Horner
    int f = F.deg;
    std::vector<long long> res(f, 0);
    res[0] = 1;
    for (int j = f - 1; j >= 0; --j) {
        res = coordring::mul(F, res, y, pk);
        res[0] = mod_reduce(res[0] + F.res_poly[j], pk);
    }
    return res;
}

std::vector<long long> eval_monic_derivative(const FieldDesc& F, const std::vector<long long>& y,
                                             long long pk) {
    // g'(y) = f*y^{f-1} + sum_{j>=1} j*c_j*y^{j-1}
    int f = F.deg;
    std::vector<long long> res(f, 0), pw(f, 0);
    pw[0] = 1;
    for (int j = 1; j <= f; ++j) {
        long long coef = (j == f) ? f : mod_reduce(static_cast<long long>(j) * F.res_poly[j], pk);
        for (int i = 0; i < f; ++i) res[i] = mod_reduce(res[i] + coef * pw[i], pk);
        if (j < f) pw = coordring::mul(F, pw, y, pk);
    }
    return res;
}

std::vector<long long> frobenius_of_generator(const FieldDesc& F) {
    long long p = F.p;
    int f = F.deg;
    // start from gen^p mod p, Newton-lift the root of the defining polynomial
    std::vector<long long> y(f, 0);
    y[1 % f] = 1;
    {
        std::vector<long long> base = y, acc(f, 0);
        acc[0] = 1;
        long long e = p;
        while (e > 0) {
            if (e & 1) acc = coordring::mul(F, acc, base, p);
            base = coordring::mul(F, base, base, p);
            e >>= 1;
        }
        y = acc;
    }
    int cur = 1;
    int target = (F.max_digits > 0) ? F.max_digits : max_coord_digits(p);
    while (cur < target) {
        cur = std::min(2 * cur, target);
        long long pk = 1;
        for (int i = 0; i < cur; ++i) pk *= p;
        auto gy = eval_monic(F, y, pk);
        auto gpy = eval_monic_derivative(F, y, pk);
        auto ginv = coordring::inv(F, gpy, cur);
        auto corr = coordring::mul(F, gy, ginv, pk);
        for (int i = 0; i < f; ++i) y[i] = mod_reduce(y[i] - corr[i], pk);
    }
    return y;
}

}  // namespace

Field make_field(long long p) { return make_field(p, FieldKind::Base, 1); }

Field make_field(long long p, FieldKind kind, int degree,
                 std::optional<std::vector<long long>> residue_poly, long long ram_unit) {
    if (!is_prime_small(p) || p > 97) throw config_error("make_field: p must be a small prime");
    auto F = std::make_shared<FieldDesc>();
    F->p = p;
    F->kind = kind;
    switch (kind) {
        case FieldKind::Base: {
            F->deg = 1;
            F->e = 1;
            F->f = 1;
            F->q = p;
            F->max_digits = max_coord_digits(p);
            break;
        }
        case FieldKind::Unramified: {
            if (degree < 2 || degree > 4)
                throw config_error("make_field: unramified degree must be 2..4");
            F->deg = degree;
            F->e = 1;
            F->f = degree;
            F->q = 1;
            for (int i = 0; i < degree; ++i) {
                if (F->q > (1LL << 40) / p) throw config_error("make_field: q too large");
                F->q *= p;
            }
            if (residue_poly) {
                if (static_cast<int>(residue_poly->size()) != degree)
                    throw config_error("make_field: residue polynomial must list low-degree "
                                       "coefficients c_0..c_{f-1}");
                F->res_poly = *residue_poly;
                for (auto& c : F->res_poly) c = mod_reduce(c, p);
            } else {
                // first monic irreducible of this degree in lex order
                long long total = 1;
                for (int i = 0; i < degree; ++i) total *= p;
                bool found = false;
                for (long long code = 0; code < total && !found; ++code) {
                    Poly cand(degree + 1, 0);
                    cand[degree] = 1;
                    long long c = code;
                    for (int i = 0; i < degree; ++i) {
                        cand[i] = c % p;
                        c /= p;
                    }
                    if (poly_irreducible_fp(cand, p)) {
                        F->res_poly.assign(cand.begin(), cand.end() - 1);
                        found = true;
                    }
                }
                if (!found) throw config_error("make_field: no irreducible polynomial found");
            }
            {
                Poly check(F->res_poly.begin(), F->res_poly.end());
                check.push_back(1);
                if (!poly_irreducible_fp(check, p))
                    throw config_error("make_field: reducible residue polynomial");
            }
            F->max_digits = max_coord_digits(p);
            F->frob_gen = frobenius_of_generator(*F);
            break;
        }
        case FieldKind::RamifiedQuadratic: {
            if (p == 2) throw config_error("make_field: wild ramification unsupported (p=2)");
            F->deg = 2;
            F->e = 2;
            F->f = 1;
            F->q = p;
            F->ram_unit = mod_reduce(ram_unit, p) == 0 ? 0 : ram_unit;
            if (F->ram_unit == 0) throw config_error("make_field: ram_unit must be a unit");
            F->max_digits = 2 * max_coord_digits(p);
            break;
        }
    }
    return F;
}

// ------------------------------ Elem ------------------------------

namespace {

int basis_val(const FieldDesc& F, int j) {
    return F.kind == FieldKind::RamifiedQuadratic ? j : 0;
}

// digits of certainty of coordinate j at unit precision `prec`
int coord_mod_exp(const FieldDesc& F, int prec, int j) {
    int num = prec - basis_val(F, j);
    if (num <= 0) return 0;
    return (num + F.e - 1) / F.e;
}

long long pk_of(long long p, int k) {
    long long r = 1;
    for (int i = 0; i < k; ++i) r *= p;
    return r;
}

}  // namespace

Elem Elem::above(const Field& F, long long bound_digits) {
    Elem x;
    x.fld_ = F;
    x.above_ = true;
    x.dig_ = bound_digits;
    x.prec_ = 0;
    return x;
}

void Elem::normalize() {
    const FieldDesc& F = *fld_;
    if (prec_ <= 0) {
        *this = above(fld_, dig_);
        return;
    }
    for (int j = 0; j < F.deg; ++j) {
        int m = coord_mod_exp(F, prec_, j);
        coords_[j] = m == 0 ? 0 : mod_reduce(coords_[j], pk_of(F.p, m));
    }
    long long t = -1;
    for (int j = 0; j < F.deg; ++j) {
        if (coords_[j] == 0) continue;
        long long cont = static_cast<long long>(F.e) * vp_int(coords_[j], F.p) + basis_val(F, j);
        if (t < 0 || cont < t) t = cont;
    }
    if (t < 0 || t >= prec_) {
        *this = above(fld_, dig_ + prec_);
        return;
    }
    // strip pi^t from the unit part
    for (long long s = 0; s < t; ++s) {
        if (F.kind == FieldKind::RamifiedQuadratic) {
            long long c0 = coords_[0], c1 = coords_[1];
            int m1_new = coord_mod_exp(F, prec_ - static_cast<int>(s) - 1, 1);
            long long uinv = m1_new == 0 ? 0 : mod_inv_int(F.ram_unit, pk_of(F.p, m1_new));
            coords_[0] = c1;
            coords_[1] = m1_new == 0 ? 0 : mod_reduce((c0 / F.p) * uinv, pk_of(F.p, m1_new));
        } else {
            for (auto& c : coords_) c /= F.p;
        }
    }
    dig_ += t;
    prec_ -= static_cast<int>(t);
    for (int j = 0; j < F.deg; ++j) {
        int m = coord_mod_exp(F, prec_, j);
        coords_[j] = m == 0 ? 0 : mod_reduce(coords_[j], pk_of(F.p, m));
    }
}

Elem Elem::from_coords(const Field& F, long long dig, std::vector<long long> coords, int prec) {
    if (prec < 1) throw precision_error("from_coords: prec must be >= 1");
    if (prec > F->max_digits) prec = F->max_digits;
    if (static_cast<int>(coords.size()) != F->deg)
        throw config_error("from_coords: wrong coordinate count");
    Elem x;
    x.fld_ = F;
    x.above_ = false;
    x.dig_ = dig;
    x.prec_ = prec;
    for (int j = 0; j < F->deg; ++j) {
        int m = coord_mod_exp(*F, prec, j);
        coords[j] = m == 0 ? 0 : mod_reduce(coords[j], pk_of(F->p, m));
    }
    x.coords_ = std::move(coords);
    x.normalize();
    return x;
}

Elem Elem::from_int(const Field& F, long long n, int prec) {
    if (n == 0) return zero(F, prec);
    long long k = 0;
    while (n % F->p == 0) {
        n /= F->p;
        ++k;
    }
    std::vector<long long> c(F->deg, 0);
    c[0] = n;
    return from_coords(F, k * F->e, std::move(c), prec);
}

Elem Elem::from_rat(const Field& F, const Rat& r, int prec) {
    if (r == Rat(0)) return zero(F, prec);
    Int num = r.numerator(), den = r.denominator();
    long long k = 0;
    while (num % F->p == 0) {
        num /= F->p;
        ++k;
    }
    while (den % F->p == 0) {
        den /= F->p;
        --k;
    }
    int m0 = coord_mod_exp(*F, std::min(prec, F->max_digits), 0);
    long long pk = pk_of(F->p, m0);
    long long nn = static_cast<long long>(num % pk);
    long long dd = static_cast<long long>(den % pk);
    std::vector<long long> c(F->deg, 0);
    c[0] = mod_reduce(mod_reduce(nn, pk) * mod_inv_int(dd, pk), pk);
    return from_coords(F, k * F->e, std::move(c), prec);
}

Elem Elem::uniformizer(const Field& F, int prec) {
    if (F->kind == FieldKind::RamifiedQuadratic) {
        std::vector<long long> c(F->deg, 0);
        c[1] = 1;
        return from_coords(F, 0, std::move(c), prec);
    }
    return from_int(F, F->p, prec);
}

Elem Elem::generator(const Field& F, int prec) {
    if (F->kind == FieldKind::Base) throw config_error("generator: base field has none");
    std::vector<long long> c(F->deg, 0);
    c[1] = 1;
    return from_coords(F, 0, std::move(c), prec);
}

long long Elem::above_bound_digits() const {
    if (!above_) throw config_error("above_bound_digits: element has exact valuation");
    return dig_;
}

long long Elem::val_digits() const {
    if (above_) throw precision_error("valuation only bounded below (>= " +
                                      rat_str(Rat(Int(dig_), Int(fld_->e))) + ")");
    return dig_;
}

Rat Elem::valuation() const { return Rat(Int(val_digits()), Int(fld_->e)); }

std::optional<Rat> Elem::valuation_opt() const {
    if (above_) return std::nullopt;
    return Rat(Int(dig_), Int(fld_->e));
}

bool Elem::val_at_least(const Rat& t) const {
    Rat bound(Int(dig_), Int(fld_->e));
    if (above_) {
        if (bound >= t) return true;
        throw precision_error("val_at_least undecidable at this precision");
    }
    return bound >= t;
}

namespace {

std::vector<long long> unit_mul(const FieldDesc& F, const std::vector<long long>& a,
                                const std::vector<long long>& b, int prec) {
    if (F.kind == FieldKind::RamifiedQuadratic) {
        int m0 = coord_mod_exp(F, prec, 0), m1 = coord_mod_exp(F, prec, 1);
        long long pk0 = pk_of(F.p, m0), pk1 = m1 == 0 ? 1 : pk_of(F.p, m1);
        long long c0 = mod_reduce(a[0] * b[0] % pk0 + F.p * F.ram_unit % pk0 * (a[1] * b[1] % pk0),
                                  pk0);
        long long c1 = m1 == 0 ? 0 : mod_reduce(a[0] * b[1] + a[1] * b[0], pk1);
        return {c0, c1};
    }
    return coordring::mul(F, a, b, pk_of(F.p, prec));
}

std::vector<long long> shift_up(const FieldDesc& F, std::vector<long long> c, long long t) {
    // multiply the unit coordinates by pi^t, reducing against a modulus at
    // least as large as every per-coordinate modulus so int64 never overflows
    long long big = pk_of(F.p, coord_mod_exp(F, F.max_digits, 0));
    for (long long s = 0; s < t; ++s) {
        if (F.kind == FieldKind::RamifiedQuadratic) {
            long long c0 = c[0], c1 = c[1];
            c[0] = mod_reduce(F.p * F.ram_unit % big * (c1 % big), big);
            c[1] = mod_reduce(c0, big);
        } else {
            for (auto& x : c) x = mod_reduce(x % big * (F.p % big), big);
        }
    }
    return c;
}

}  // namespace

Elem Elem::operator+(const Elem& o) const {
    if (!(*fld_ == *o.fld_)) throw config_error("add: mixed fields");
    if (above_ && o.above_) return above(fld_, std::min(dig_, o.dig_));
    if (above_ || o.above_) {
        const Elem& fin = above_ ? o : *this;
        long long bound = above_ ? dig_ : o.dig_;
        if (bound <= fin.dig_) return above(fld_, std::min(bound, fin.dig_));
        int prec = static_cast<int>(std::min<long long>(fin.prec_, bound - fin.dig_));
        return from_coords(fld_, fin.dig_, fin.coords_, prec);
    }
    const Elem *lo = this, *hi = &o;
    if (lo->dig_ > hi->dig_) std::swap(lo, hi);
    long long shift = hi->dig_ - lo->dig_;
    if (shift > fld_->max_digits) {
        // the higher term is invisible at the representable precision
        return from_coords(fld_, lo->dig_, lo->coords_, lo->prec_);
    }
    int joint = static_cast<int>(
        std::min<long long>(lo->prec_, shift + hi->prec_));
    auto shifted = shift_up(*fld_, hi->coords_, shift);
    std::vector<long long> sum(fld_->deg);
    for (int j = 0; j < fld_->deg; ++j) sum[j] = lo->coords_[j] + shifted[j];
    return from_coords(fld_, lo->dig_, std::move(sum), joint);
}

Elem Elem::operator-() const {
    if (above_) return *this;
    std::vector<long long> c(coords_);
    for (auto& x : c) x = -x;
    return from_coords(fld_, dig_, std::move(c), prec_);
}

Elem Elem::operator-(const Elem& o) const { return *this + (-o); }

Elem Elem::operator*(const Elem& o) const {
    if (!(*fld_ == *o.fld_)) throw config_error("mul: mixed fields");
    if (above_ || o.above_) return above(fld_, dig_ + o.dig_);
    int prec = std::min(prec_, o.prec_);
    auto c = unit_mul(*fld_, coords_, o.coords_, prec);
    return from_coords(fld_, dig_ + o.dig_, std::move(c), prec);
}

Elem Elem::inv() const {
    if (above_) throw precision_error("inv of an above-precision element");
    const FieldDesc& F = *fld_;
    std::vector<long long> c;
    if (F.kind == FieldKind::RamifiedQuadratic) {
        int m0 = coord_mod_exp(F, prec_, 0), m1 = coord_mod_exp(F, prec_, 1);
        long long pk0 = pk_of(F.p, m0), pk1 = m1 == 0 ? 1 : pk_of(F.p, m1);
        long long nrm = mod_reduce(coords_[0] * coords_[0] % pk0 -
                                       F.p * F.ram_unit % pk0 * (coords_[1] * coords_[1] % pk0),
                                   pk0);
        long long ninv = mod_inv_int(nrm, pk0);
        c = {mod_reduce(coords_[0] * ninv, pk0),
             m1 == 0 ? 0 : mod_reduce(-coords_[1] % pk1 * (ninv % pk1), pk1)};
    } else {
        c = coordring::inv(F, coords_, prec_);
    }
    return from_coords(fld_, -dig_, std::move(c), prec_);
}

bool Elem::same_class(const Elem& o) const {
    if (!(*fld_ == *o.fld_)) return false;
    if (above_ && o.above_) return true;
    if (above_ != o.above_) return false;
    if (dig_ != o.dig_) return false;
    int prec = std::min(prec_, o.prec_);
    for (int j = 0; j < fld_->deg; ++j) {
        int m = coord_mod_exp(*fld_, prec, j);
        if (m == 0) continue;
        long long pk = pk_of(fld_->p, m);
        if (mod_reduce(coords_[j], pk) != mod_reduce(o.coords_[j], pk)) return false;
    }
    return true;
}

Rat Elem::exact_base_rational(long long min_abs_digits) const {
    if (fld_->kind != FieldKind::Base)
        throw config_error("exact_base_rational: base-field elements only");
    if (above_) {
        if (dig_ >= min_abs_digits) return Rat(0);
        throw precision_error("representative not certified deep enough");
    }
    if (dig_ + prec_ < min_abs_digits)
        throw precision_error("representative not certified deep enough");
    Rat unit(Int(coords_[0]), 1);
    return dig_ >= 0 ? unit * Rat(ipow(Int(fld_->p), dig_), 1)
                     : unit / Rat(ipow(Int(fld_->p), -dig_), 1);
}

std::string Elem::str() const {
    std::ostringstream os;
    if (above_) {
        os << "O(pi^" << dig_ << ")";
        return os.str();
    }
    os << "pi^" << dig_ << "*(";
    for (int j = 0; j < fld_->deg; ++j) {
        if (j) os << ",";
        os << coords_[j];
    }
    os << ")+O(pi^" << dig_ + prec_ << ")";
    return os.str();
}

Elem embed(const Elem& x, const Field& E) {
    if (*x.field() == *E) return x;
    if (x.field()->kind != FieldKind::Base || E->p != x.field()->p)
        throw config_error("embed: only base -> extension over the same p");
    if (x.is_above()) return Elem::above(E, x.above_bound_digits() * E->e);
    std::vector<long long> c(E->deg, 0);
    c[0] = x.coords()[0];
    int prec = static_cast<int>(std::min<long long>(
        static_cast<long long>(x.precision()) * E->e, E->max_digits));
    return Elem::from_coords(E, x.val_digits() * E->e, std::move(c), prec);
}

std::vector<Elem> galois_conjugates(const Elem& x) {
    const Field& F = x.field();
    switch (F->kind) {
        case FieldKind::Base:
            return {x};
        case FieldKind::RamifiedQuadratic: {
            if (x.is_above()) return {x, x};
            auto c = x.coords();
            c[1] = -c[1];
            return {x, Elem::from_coords(F, x.val_digits(), std::move(c), x.precision())};
        }
        case FieldKind::Unramified: {
            std::vector<Elem> out;
            out.push_back(x);
            if (x.is_above()) {
                for (int k = 1; k < F->f; ++k) out.push_back(x);
                return out;
            }
            int prec = x.precision();
            long long pk = pk_of(F->p, prec);
            std::vector<long long> gen_image = F->frob_gen;
            for (int k = 1; k < F->f; ++k) {
                // evaluate the coordinate polynomial at sigma^k(gen), Horner
                std::vector<long long> acc(F->deg, 0);
                const auto& cs = x.coords();
                for (int j = F->deg - 1; j >= 0; --j) {
                    acc = coordring::mul(*F, acc, gen_image, pk);
                    acc[0] = mod_reduce(acc[0] + cs[j], pk);
                }
                out.push_back(Elem::from_coords(F, x.val_digits(), std::move(acc), prec));
                if (k + 1 < F->f) {
                    // advance gen_image by one more Frobenius
                    std::vector<long long> nxt(F->deg, 0);
                    for (int j = F->deg - 1; j >= 0; --j) {
                        nxt = coordring::mul(*F, nxt, F->frob_gen, pk);
                        nxt[0] = mod_reduce(nxt[0] + gen_image[j], pk);
                    }
                    gen_image = nxt;
                }
            }
            return out;
        }
    }
    throw config_error("galois_conjugates: unknown field kind");
}

// ------------------------------ parsing ------------------------------

namespace {

struct Parser {
    const std::string& s;
    size_t i = 0;
    const Field& F;
    int prec;

    Parser(const std::string& str, const Field& f, int pr) : s(str), F(f), prec(pr) {}

    void skip() {
        while (i < s.size() && s[i] == ' ') ++i;
    }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }

    Elem parse_expr() {
        Elem acc = eat('-') ? -parse_term() : parse_term();
        for (;;) {
            skip();
            if (eat('+'))
                acc = acc + parse_term();
            else if (eat('-'))
                acc = acc - parse_term();
            else
                return acc;
        }
    }

    Elem parse_term() {
        Elem acc = parse_factor();
        while (eat('*')) acc = acc * parse_factor();
        return acc;
    }

    Elem parse_factor() {
        Elem base = parse_atom();
        if (eat('^')) {
            long long e = parse_uint();
            Elem r = Elem::from_int(F, 1, prec);
            for (long long k = 0; k < e; ++k) r = r * base;
            return r;
        }
        return base;
    }

    long long parse_uint() {
        skip();
        size_t start = i;
        while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) throw config_error("element literal: digit expected in '" + s + "'");
        return std::stoll(s.substr(start, i - start));
    }

    Elem parse_atom() {
        skip();
        if (eat('(')) {
            Elem e = parse_expr();
            if (!eat(')')) throw config_error("element literal: ')' expected");
            return e;
        }
        if (i < s.size() && isdigit(static_cast<unsigned char>(s[i])))
            return Elem::from_int(F, parse_uint(), prec);
        if (s.compare(i, 2, "pi") == 0) {
            i += 2;
            return Elem::uniformizer(F, prec);
        }
        if (i < s.size() && s[i] == 'p') {
            ++i;
            return Elem::from_int(F, F->p, prec);
        }
        if (i < s.size() && s[i] == 'u') {
            ++i;
            return Elem::generator(F, prec);
        }
        throw config_error("element literal: cannot parse '" + s + "' at position " +
                           std::to_string(i));
    }
};

}  // namespace

Elem parse_elem(const Field& F, const std::string& text, int prec) {
    if (text.rfind("v=", 0) == 0) {
        auto semi = text.find(';');
        if (semi == std::string::npos || text.compare(semi + 1, 2, "u=") != 0)
            throw config_error("element literal: expected v=<rational>;u=<c0>,<c1>,...");
        Rat v = parse_rat(text.substr(2, semi - 2));
        Rat digits = v * Rat(Int(F->e), 1);
        if (!rat_is_integer(digits))
            throw config_error("element literal: valuation not in (1/e)Z");
        std::vector<long long> coords;
        std::string rest = text.substr(semi + 3);
        size_t pos = 0;
        while (pos <= rest.size()) {
            auto comma = rest.find(',', pos);
            std::string tok =
                comma == std::string::npos ? rest.substr(pos) : rest.substr(pos, comma - pos);
            if (tok.empty()) throw config_error("element literal: empty coordinate");
            coords.push_back(std::stoll(tok));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (static_cast<int>(coords.size()) > F->deg)
            throw config_error("element literal: too many coordinates");
        coords.resize(F->deg, 0);
        return Elem::from_coords(F, static_cast<long long>(digits.numerator()),
                                 std::move(coords), prec);
    }
    Parser P(text, F, prec);
    Elem e = P.parse_expr();
    P.skip();
    if (P.i != text.size()) throw config_error("element literal: trailing junk in '" + text + "'");
    return e;
}

}  // namespace btb
