#pragma once

#include "btb/common.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace btb {

// Truncated exact arithmetic in Q_p and its tame extensions.
//
// An element is stored as pi^dig * u where u is a unit of the ring of
// integers known modulo pi^prec (prec "digits" of the uniformizer), or as an
// above-precision marker meaning v(x) >= bound/e. Valuations are normalized
// so v(p) = 1 on the base field, hence take values in (1/e)Z.
//
// Supported extensions: unramified of any degree (power basis in a root of
// an irreducible residue polynomial) and tamely ramified quadratic
// (pi^2 = p * unit, p odd). All values are immutable after construction.

enum class FieldKind { Base, Unramified, RamifiedQuadratic };

struct FieldDesc;
using Field = std::shared_ptr<const FieldDesc>;

struct FieldDesc {
    long long p = 0;
    FieldKind kind = FieldKind::Base;
    int deg = 1;  // extension degree over Q_p
    int e = 1;    // ramification index
    int f = 1;    // residue degree
    long long q = 0;  // residue field order p^f

    // Unramified: generator g satisfies g^f = -(res_poly[0] + ... +
    // res_poly[f-1] g^{f-1}), an irreducible relation mod p.
    std::vector<long long> res_poly;
    // Ramified quadratic: pi^2 = p * ram_unit with ram_unit a unit mod p.
    long long ram_unit = 1;

    int max_digits = 0;  // precision cap keeping coordinate products in int64
    std::vector<long long> frob_gen;  // unramified: sigma(gen) coords at max_digits

    bool operator==(const FieldDesc& o) const {
        return p == o.p && kind == o.kind && deg == o.deg && res_poly == o.res_poly &&
               ram_unit == o.ram_unit;
    }
};

Field make_field(long long p);
Field make_field(long long p, FieldKind kind, int degree = 2,
                 std::optional<std::vector<long long>> residue_poly = std::nullopt,
                 long long ram_unit = 1);

class Elem {
  public:
    Elem() = default;

    static Elem above(const Field& F, long long bound_digits);
    static Elem zero(const Field& F, int prec) { return above(F, prec); }
    static Elem from_int(const Field& F, long long n, int prec);
    static Elem from_rat(const Field& F, const Rat& r, int prec);  // base-field value
    // pi^dig * (coords in the power basis); coords need not be unit-normalized.
    static Elem from_coords(const Field& F, long long dig, std::vector<long long> coords,
                            int prec);
    static Elem uniformizer(const Field& F, int prec);
    static Elem generator(const Field& F, int prec);  // power-basis generator

    const Field& field() const { return fld_; }
    bool is_above() const { return above_; }
    long long above_bound_digits() const;
    long long val_digits() const;  // throws precision_error when above
    Rat valuation() const;         // digits / e
    std::optional<Rat> valuation_opt() const;
    int precision() const { return prec_; }
    const std::vector<long long>& coords() const { return coords_; }

    Elem operator+(const Elem& o) const;
    Elem operator-(const Elem& o) const;
    Elem operator-() const;
    Elem operator*(const Elem& o) const;
    Elem inv() const;

    // Same truncation class at the shared certified precision.
    bool same_class(const Elem& o) const;

    // v(x) >= t certified? (t in valuation units). Throws precision_error when
    // the truncation cannot decide.
    bool val_at_least(const Rat& t) const;

    // Exact rational representative c0 * p^dig of a base-field element. The
    // class must be certified to at least `min_abs_digits` absolute digits.
    Rat exact_base_rational(long long min_abs_digits) const;

    std::string str() const;

  private:
    Field fld_;
    bool above_ = true;
    long long dig_ = 0;  // valuation (or its certified lower bound) in pi-digits
    std::vector<long long> coords_;
    int prec_ = 0;

    void normalize();
    friend Elem embed(const Elem&, const Field&);
    friend std::vector<Elem> galois_conjugates(const Elem&);
};

// Base -> extension embedding (identity if fields match).
Elem embed(const Elem& x, const Field& E);

// All [E:F] conjugates of x (singleton on the base field). Their product is
// Galois-fixed; see norm_map in the measure module.
std::vector<Elem> galois_conjugates(const Elem& x);

// Literal syntax: "v=<rational>;u=<c0>,<c1>,..." or an integer expression in
// p / pi / u, e.g. "1+p^2", "2*p-1", "u*p^3".
Elem parse_elem(const Field& F, const std::string& text, int prec);

// --- fixed-modulus coordinate helpers (shared with make_field internals) ---
// Arithmetic in O_E / p^k for the unramified power basis; used by element
// multiplication and the Frobenius lift.
namespace coordring {
std::vector<long long> mul(const FieldDesc& F, const std::vector<long long>& a,
                           const std::vector<long long>& b, long long pk);
std::vector<long long> inv(const FieldDesc& F, const std::vector<long long>& a, int k);
}  // namespace coordring

}  // namespace btb
