#include "btb/lattice.hpp"

#include <algorithm>

namespace btb {

LatticeMatrix LatticeMatrix::identity(const Field& F, int n, int prec) {
    LatticeMatrix m{F, n, {}};
    m.a.reserve(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.a.push_back(i == j ? Elem::from_int(F, 1, prec) : Elem::zero(F, prec));
    return m;
}

LatticeMatrix LatticeMatrix::scalar(const Field& F, int n, const Elem& s, int prec) {
    LatticeMatrix m = identity(F, n, prec);
    for (int i = 0; i < n; ++i) m.at(i, i) = s;
    return m;
}

LatticeMatrix parse_matrix(const Field& F, const std::string& text, int prec) {
    LatticeMatrix m{F, 0, {}};
    std::vector<std::vector<Elem>> rows;
    size_t pos = 0;
    while (pos <= text.size()) {
        auto semi = text.find(';', pos);
        std::string row = semi == std::string::npos ? text.substr(pos) : text.substr(pos, semi - pos);
        std::vector<Elem> entries;
        size_t rp = 0;
        while (rp <= row.size()) {
            auto comma = row.find(',', rp);
            std::string tok =
                comma == std::string::npos ? row.substr(rp) : row.substr(rp, comma - rp);
            entries.push_back(parse_elem(F, tok, prec));
            if (comma == std::string::npos) break;
            rp = comma + 1;
        }
        rows.push_back(std::move(entries));
        if (semi == std::string::npos) break;
        pos = semi + 1;
    }
    m.n = static_cast<int>(rows.size());
    for (auto& r : rows) {
        if (static_cast<int>(r.size()) != m.n) throw config_error("matrix literal: not square");
        for (auto& e : r) m.a.push_back(std::move(e));
    }
    return m;
}

LatticeMatrix mat_mul(const LatticeMatrix& a, const LatticeMatrix& b) {
    if (a.n != b.n) throw config_error("mat_mul: size mismatch");
    int n = a.n;
    LatticeMatrix c{a.fld, n, {}};
    c.a.reserve(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Elem s = a.at(i, 0) * b.at(0, j);
            for (int k = 1; k < n; ++k) s = s + a.at(i, k) * b.at(k, j);
            c.a.push_back(s);
        }
    return c;
}

std::vector<Elem> mat_vec(const LatticeMatrix& a, const std::vector<Elem>& v) {
    int n = a.n;
    if (static_cast<int>(v.size()) != n) throw config_error("mat_vec: size mismatch");
    std::vector<Elem> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) {
        Elem s = a.at(i, 0) * v[0];
        for (int k = 1; k < n; ++k) s = s + a.at(i, k) * v[k];
        out.push_back(s);
    }
    return out;
}

long long SnfResult::det_digits() const {
    long long s = 0;
    for (long long x : d) s += x;
    return s;
}

SnfResult smith_normal_form(const LatticeMatrix& m0) {
    const Field& F = m0.fld;
    int n = m0.n;
    int prec = 1;
    for (const auto& e : m0.a)
        if (!e.is_above()) prec = std::max(prec, e.precision());
    LatticeMatrix m = m0;
    SnfResult r{LatticeMatrix::identity(F, n, prec), LatticeMatrix::identity(F, n, prec),
                LatticeMatrix::identity(F, n, prec), LatticeMatrix::identity(F, n, prec),
                {}};
    auto swap_rows = [](LatticeMatrix& x, int i, int k) {
        for (int j = 0; j < x.n; ++j) std::swap(x.at(i, j), x.at(k, j));
    };
    auto swap_cols = [](LatticeMatrix& x, int j, int k) {
        for (int i = 0; i < x.n; ++i) std::swap(x.at(i, j), x.at(i, k));
    };

    for (int k = 0; k < n; ++k) {
        // minimal-valuation pivot in the remaining block, ties row-major
        long long best = 0;
        int bi = -1, bj = -1;
        for (int i = k; i < n; ++i)
            for (int j = k; j < n; ++j) {
                const Elem& e = m.at(i, j);
                if (e.is_above()) continue;
                if (bi < 0 || e.val_digits() < best) {
                    best = e.val_digits();
                    bi = i;
                    bj = j;
                }
            }
        if (bi < 0)
            throw precision_error("smith_normal_form: block vanishes at working precision");
        for (int i = k; i < n; ++i)
            for (int j = k; j < n; ++j) {
                const Elem& e = m.at(i, j);
                if (e.is_above() && e.above_bound_digits() < best)
                    throw precision_error("smith_normal_form: pivot order uncertified");
            }
        if (bi != k) {
            swap_rows(m, bi, k);
            swap_rows(r.p, bi, k);
            swap_cols(r.p_inv, bi, k);
        }
        if (bj != k) {
            swap_cols(m, bj, k);
            swap_cols(r.q, bj, k);
            swap_rows(r.q_inv, bj, k);
        }
        Elem piv_inv = m.at(k, k).inv();
        for (int i = k + 1; i < n; ++i) {
            if (m.at(i, k).is_above()) continue;
            Elem f = m.at(i, k) * piv_inv;
            for (int j = 0; j < n; ++j) {
                m.at(i, j) = m.at(i, j) - f * m.at(k, j);
                r.p.at(i, j) = r.p.at(i, j) - f * r.p.at(k, j);
            }
            for (int i2 = 0; i2 < n; ++i2)
                r.p_inv.at(i2, k) = r.p_inv.at(i2, k) + f * r.p_inv.at(i2, i);
        }
        for (int j = k + 1; j < n; ++j) {
            if (m.at(k, j).is_above()) continue;
            Elem f = m.at(k, j) * piv_inv;
            for (int i = 0; i < n; ++i) {
                m.at(i, j) = m.at(i, j) - f * m.at(i, k);
                r.q.at(i, j) = r.q.at(i, j) - f * r.q.at(i, k);
            }
            for (int j2 = 0; j2 < n; ++j2)
                r.q_inv.at(k, j2) = r.q_inv.at(k, j2) + f * r.q_inv.at(j, j2);
        }
        r.d.push_back(best);
    }
    for (size_t i = 1; i < r.d.size(); ++i)
        if (r.d[i - 1] > r.d[i])
            throw precision_error("smith_normal_form: divisor chain out of order");
    return r;
}

long long det_valuation_digits(const LatticeMatrix& m) {
    return smith_normal_form(m).det_digits();
}

namespace {

void require_integral(const std::vector<Elem>& es, const char* what) {
    for (const auto& e : es)
        if (!e.val_at_least(Rat(0))) throw config_error(std::string(what) + ": entry not in O");
}

// x in L' <=> P x has component valuations >= d_i
bool in_sublattice(const SnfResult& snf, const std::vector<Elem>& x) {
    auto y = mat_vec(snf.p, x);
    for (size_t i = 0; i < y.size(); ++i) {
        Rat need(Int(snf.d[i]), Int(snf.p.fld->e));
        if (!y[i].val_at_least(need)) return false;
    }
    return true;
}

// residue representatives of O/pi^digits
std::vector<Elem> residues(const Field& F, long long digits, int prec) {
    std::vector<int> mods(F->deg);
    long long total = 1;
    for (int j = 0; j < F->deg; ++j) {
        int bv = F->kind == FieldKind::RamifiedQuadratic ? j : 0;
        long long num = digits - bv;
        long long mj = num <= 0 ? 0 : (num + F->e - 1) / F->e;
        mods[j] = static_cast<int>(mj);
        for (int t = 0; t < mods[j]; ++t) total *= F->p;
    }
    std::vector<Elem> out;
    out.reserve(total);
    std::vector<long long> cur(F->deg, 0);
    for (long long it = 0; it < total; ++it) {
        long long code = it;
        for (int j = 0; j < F->deg; ++j) {
            long long pk = 1;
            for (int t = 0; t < mods[j]; ++t) pk *= F->p;
            cur[j] = pk == 1 ? 0 : code % pk;
            code /= pk == 1 ? 1 : pk;
        }
        out.push_back(Elem::from_coords(F, 0, cur, prec));
    }
    return out;
}

}  // namespace

long long count_affine_solutions(const LatticeMatrix& m, const std::vector<Elem>& v,
                                 const LatticeMatrix& sub, long long cap) {
    const Field& F = m.fld;
    int n = m.n;
    if (sub.n != n || static_cast<int>(v.size()) != n)
        throw config_error("count_affine_solutions: size mismatch");
    require_integral(m.a, "M");
    require_integral(sub.a, "sublattice");
    require_integral(v, "v");

    SnfResult snf = smith_normal_form(sub);
    Int size(1);
    for (long long dk : snf.d) size *= ipow(Int(F->q), dk);
    if (size > cap) throw cap_error("count_affine_solutions: quotient larger than cap");

    // M L' <= L' (hypothesis): check each basis column
    for (int j = 0; j < n; ++j) {
        std::vector<Elem> col;
        for (int i = 0; i < n; ++i) col.push_back(sub.at(i, j));
        if (!in_sublattice(snf, mat_vec(m, col)))
            throw config_error("count_affine_solutions: M does not stabilize L'");
    }

    int prec = 1;
    for (const auto& e : m.a)
        if (!e.is_above()) prec = std::max(prec, e.precision());

    // fast path: base field with a diagonal sublattice, pure residue counting
    bool diag_base = F->kind == FieldKind::Base;
    for (int i = 0; i < n && diag_base; ++i)
        for (int j = 0; j < n && diag_base; ++j)
            if (i != j && !sub.at(i, j).is_above()) diag_base = false;
    if (diag_base) {
        std::vector<long long> d(n), pk(n);
        long long dmax = 0;
        for (int i = 0; i < n; ++i) {
            d[i] = sub.at(i, i).val_digits();
            dmax = std::max(dmax, d[i]);
        }
        long long need = dmax + 1, pbig = 1;
        for (long long t = 0; t < need; ++t) pbig *= F->p;
        std::vector<long long> mm(n * n), vv(n);
        bool reps_ok = true;
        try {
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) {
                    Rat r = m.at(i, j).is_above() && m.at(i, j).above_bound_digits() >= need
                                ? Rat(0)
                                : m.at(i, j).exact_base_rational(need);
                    mm[i * n + j] = static_cast<long long>(((r.numerator() % pbig) + pbig) % pbig);
                }
                Rat r = v[i].is_above() && v[i].above_bound_digits() >= need
                            ? Rat(0)
                            : v[i].exact_base_rational(need);
                vv[i] = static_cast<long long>(((r.numerator() % pbig) + pbig) % pbig);
                pk[i] = 1;
                for (long long t = 0; t < d[i]; ++t) pk[i] *= F->p;
            }
        } catch (const precision_error&) {
            reps_ok = false;
        }
        if (reps_ok) {
            long long total = 1, count = 0;
            for (int i = 0; i < n; ++i) total *= pk[i];
            std::vector<long long> l(n);
            for (long long code = 0; code < total; ++code) {
                long long c = code;
                for (int i = 0; i < n; ++i) {
                    l[i] = pk[i] == 1 ? 0 : c % pk[i];
                    c /= pk[i] == 1 ? 1 : pk[i];
                }
                bool ok = true;
                for (int i = 0; i < n && ok; ++i) {
                    long long s = vv[i];
                    for (int j = 0; j < n; ++j) s = (s + mm[i * n + j] * l[j]) % pbig;
                    if (pk[i] != 1 && s % pk[i] != 0) ok = false;
                }
                if (ok) ++count;
            }
            return count;
        }
    }

    // general path: representatives P^{-1} (t_1, ..., t_n) over digit residues
    std::vector<std::vector<Elem>> digit_reps;
    for (int i = 0; i < n; ++i) digit_reps.push_back(residues(F, snf.d[i], prec));
    long long count = 0;
    std::vector<size_t> idx(n, 0);
    for (;;) {
        std::vector<Elem> t;
        for (int i = 0; i < n; ++i) t.push_back(digit_reps[i][idx[i]]);
        auto rep = mat_vec(snf.p_inv, t);
        auto img = mat_vec(m, rep);
        for (int i = 0; i < n; ++i) img[i] = img[i] + v[i];
        if (in_sublattice(snf, img)) ++count;
        int pos = 0;
        while (pos < n && ++idx[pos] == digit_reps[pos].size()) {
            idx[pos] = 0;
            ++pos;
        }
        if (pos == n) break;
    }
    return count;
}

LatticeBoundReport verify_lattice_bound(const LatticeMatrix& m, const std::vector<Elem>& v,
                                        const LatticeMatrix& sub, long long cap) {
    LatticeBoundReport rep;
    rep.count = count_affine_solutions(m, v, sub, cap);
    rep.bound_digits = det_valuation_digits(m);
    rep.holds = Int(rep.count) <= ipow(Int(m.fld->q), std::max<long long>(rep.bound_digits, 0));
    return rep;
}

}  // namespace btb
