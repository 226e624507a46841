#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace btb {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::rational<Int>;

// Error taxonomy shared by all modules. The CLI maps these to exit codes:
// precision/cap -> 2, config -> 3. Bound violations are data, not exceptions.
struct precision_error : std::runtime_error {
    explicit precision_error(const std::string& m) : std::runtime_error("precision-insufficient: " + m) {}
};
struct cap_error : std::runtime_error {
    explicit cap_error(const std::string& m) : std::runtime_error("cap-exceeded: " + m) {}
};
struct degenerate_error : std::runtime_error {
    explicit degenerate_error(const std::string& m) : std::runtime_error("degenerate-input: " + m) {}
};
struct config_error : std::runtime_error {
    explicit config_error(const std::string& m) : std::runtime_error("config: " + m) {}
};

inline Int ipow(Int b, long long e) {
    if (e < 0) throw config_error("ipow: negative exponent");
    Int r = 1;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

// Overflow-checked power in int64; throws cap_error past 2^62.
inline long long llpow_checked(long long b, long long e) {
    long long r = 1;
    for (long long i = 0; i < e; ++i) {
        if (r > (1LL << 62) / b) throw cap_error("integer power overflow");
        r *= b;
    }
    return r;
}

// boost::rational<cpp_int> rejects negative denominators; normalize first.
inline Rat make_rat(Int num, Int den) {
    if (den == 0) throw degenerate_error("make_rat: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rat(num, den);
}

inline Rat rat(long long n, long long d = 1) { return make_rat(Int(n), Int(d)); }

inline bool rat_is_integer(const Rat& r) { return r.denominator() == 1; }

inline Int rat_floor(const Rat& r) {
    Int q = r.numerator() / r.denominator();
    if (r.numerator() < 0 && q * r.denominator() != r.numerator()) --q;
    return q;
}

inline Int rat_ceil(const Rat& r) { return -rat_floor(-r); }

inline Rat rat_pow(const Rat& b, long long e) {
    if (e >= 0) return make_rat(ipow(b.numerator(), e), ipow(b.denominator(), e));
    if (b.numerator() == 0) throw degenerate_error("rat_pow: 0^negative");
    return make_rat(ipow(b.denominator(), -e), ipow(b.numerator(), -e));
}

inline std::string rat_str(const Rat& r) {
    std::string s = r.numerator().str();
    if (r.denominator() != 1) s += "/" + r.denominator().str();
    return s;
}

inline double rat_double(const Rat& r) { return boost::rational_cast<double>(r); }

Rat parse_rat(const std::string& s);

// An exact bound of the form coeff * q^expo with rational coeff > 0 and
// rational expo. Comparisons clear the exponent denominator, never floats.
struct QPow {
    Rat coeff;
    long long q = 0;
    Rat expo;

    // value <= coeff * q^expo, decided exactly.
    bool at_least(const Rat& value) const {
        if (value <= Rat(0)) return true;
        if (coeff <= Rat(0)) return false;
        long long d = static_cast<long long>(expo.denominator());
        Int a = expo.numerator();
        Rat lhs = rat_pow(value, d);
        Rat rhs = rat_pow(coeff, d);
        if (a >= 0)
            rhs *= Rat(ipow(Int(q), static_cast<long long>(a)), 1);
        else
            lhs *= Rat(ipow(Int(q), static_cast<long long>(-a)), 1);
        return lhs <= rhs;
    }

    bool at_least_int(const Int& count) const { return at_least(Rat(count, 1)); }

    // Exact rational value when the exponent is integral.
    Rat value() const {
        if (!rat_is_integer(expo)) throw config_error("QPow::value: fractional exponent");
        long long a = static_cast<long long>(expo.numerator());
        return coeff * (a >= 0 ? Rat(ipow(Int(q), a), 1) : Rat(1, ipow(Int(q), -a)));
    }

    double approx() const;
    std::string str() const;
};

// Exact element of Q(q^(1/d)): sum of c[j] * q^(j/d), j = 0..d-1. Used for
// partial sums with fractional exponents (q^(eps*r), eps a rational).
struct AlgVal {
    long long q = 2;
    int d = 1;
    std::vector<Rat> c;  // size d

    AlgVal() : c(1, Rat(0)) {}
    AlgVal(long long q_, int d_) : q(q_), d(d_), c(d_, Rat(0)) {}

    static AlgVal from_rat(long long q, int d, const Rat& r) {
        AlgVal v(q, d);
        v.c[0] = r;
        return v;
    }

    AlgVal& operator+=(const AlgVal& o) {
        check_compat(o);
        for (int j = 0; j < d; ++j) c[j] += o.c[j];
        return *this;
    }
    AlgVal operator-(const AlgVal& o) const {
        check_compat(o);
        AlgVal r(*this);
        for (int j = 0; j < d; ++j) r.c[j] -= o.c[j];
        return r;
    }

    // multiply by q^(num/d), num any integer
    AlgVal mul_qpow(long long num) const {
        AlgVal r(q, d);
        for (int j = 0; j < d; ++j) {
            long long k = j + num;
            long long fl = (k >= 0) ? k / d : -((-k + d - 1) / d);
            long long rem = k - fl * d;
            Rat scaled = c[j] * (fl >= 0 ? Rat(ipow(Int(q), fl), 1) : Rat(1, ipow(Int(q), -fl)));
            r.c[rem] += scaled;
        }
        return r;
    }

    AlgVal scaled(const Rat& s) const {
        AlgVal r(*this);
        for (auto& x : r.c) x *= s;
        return r;
    }

    bool is_zero() const {
        for (const auto& x : c)
            if (x != Rat(0)) return false;
        return true;
    }

    // Directed rational bounds; |hi - lo| shrinks with `iters` bisection steps
    // bracketing q^(1/d).
    void bounds(Rat& lo, Rat& hi, int iters = 60) const;
    double approx() const;
    std::string str() const;

    // Exact comparisons via directed bounds; throws if the bracket cannot
    // separate (never happens at 60 iterations for desk-scale inputs).
    bool less_than(const AlgVal& o) const;
    bool abs_less_than(const Rat& tol) const;

  private:
    void check_compat(const AlgVal& o) const {
        if (q != o.q || d != o.d) throw config_error("AlgVal: mixed rings");
    }
};

// Work pool size: BT_BOUNDS_THREADS overrides hardware concurrency.
int thread_count();

// Deterministic parallel map: fn(i) for i in [0, n), results kept in index
// order. Falls back to a serial loop for n small or a single worker.
void parallel_for(long long n, const std::function<void(long long)>& fn);

}  // namespace btb
