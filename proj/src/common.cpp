#include "btb/common.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <thread>

namespace btb {

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s), 1);
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw config_error("parse_rat: zero denominator");
        return make_rat(num, den);
    } catch (const std::exception& e) {
        throw config_error("parse_rat: cannot parse '" + s + "'");
    }
}

double QPow::approx() const { return rat_double(coeff) * std::pow(double(q), rat_double(expo)); }

std::string QPow::str() const {
    std::ostringstream os;
    os << rat_str(coeff) << "*" << q << "^(" << rat_str(expo) << ")";
    return os.str();
}

void AlgVal::bounds(Rat& lo, Rat& hi, int iters) const {
    // Bracket s = q^(1/d), then sum terms with directed rounding.
    Rat slo(1), shi(Int(q), 1);
    if (d == 1) {
        slo = shi = Rat(Int(q), 1);
    } else {
        for (int i = 0; i < iters; ++i) {
            Rat mid = (slo + shi) / 2;
            if (rat_pow(mid, d) <= Rat(Int(q), 1))
                slo = mid;
            else
                shi = mid;
        }
    }
    std::vector<Rat> plo(d), phi(d);
    plo[0] = phi[0] = Rat(1);
    for (int j = 1; j < d; ++j) {
        plo[j] = plo[j - 1] * slo;
        phi[j] = phi[j - 1] * shi;
    }
    lo = Rat(0);
    hi = Rat(0);
    for (int j = 0; j < d; ++j) {
        if (c[j] >= Rat(0)) {
            lo += c[j] * plo[j];
            hi += c[j] * phi[j];
        } else {
            lo += c[j] * phi[j];
            hi += c[j] * plo[j];
        }
    }
}

double AlgVal::approx() const {
    double s = std::pow(double(q), 1.0 / d);
    double r = 0, pj = 1;
    for (int j = 0; j < d; ++j, pj *= s) r += rat_double(c[j]) * pj;
    return r;
}

std::string AlgVal::str() const {
    std::ostringstream os;
    bool first = true;
    for (int j = 0; j < d; ++j) {
        if (c[j] == Rat(0)) continue;
        if (!first) os << " + ";
        os << rat_str(c[j]);
        if (j > 0) os << "*" << q << "^(" << j << "/" << d << ")";
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

bool AlgVal::less_than(const AlgVal& o) const {
    AlgVal diff = o - *this;
    if (diff.is_zero()) return false;
    Rat lo, hi;
    diff.bounds(lo, hi);
    if (lo > Rat(0)) return true;
    if (hi < Rat(0)) return false;
    // Bracket too wide only if diff is tiny but nonzero; refine harder.
    diff.bounds(lo, hi, 200);
    if (lo > Rat(0)) return true;
    if (hi < Rat(0)) return false;
    throw precision_error("AlgVal comparison unresolved");
}

bool AlgVal::abs_less_than(const Rat& tol) const {
    Rat lo, hi;
    bounds(lo, hi);
    return lo > -tol && hi < tol;
}

int thread_count() {
    if (const char* env = std::getenv("BT_BOUNDS_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_for(long long n, const std::function<void(long long)>& fn) {
    int workers = thread_count();
    if (workers <= 1 || n < 64) {
        for (long long i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errs(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            try {
                for (long long i = w; i < n; i += workers) fn(i);
            } catch (...) {
                errs[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
}

}  // namespace btb
