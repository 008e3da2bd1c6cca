#pragma once

#include <algorithm>
#include <boost/container/small_vector.hpp>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>

#include "mutinv/numeric.hpp"

namespace mutinv {

// Exponents are machine-width signed integers; the guard below turns
// overflow into a hard error instead of silent wraparound.
using Exp = std::int32_t;
using ExpVec = boost::container::small_vector<Exp, 6>;

constexpr Exp kMaxExp = Exp(1) << 30;

struct ExpVecHash {
    size_t operator()(const ExpVec& e) const {
        size_t h = 0x9e3779b97f4a7c15ull ^ e.size();
        for (Exp x : e) {
            h ^= static_cast<size_t>(static_cast<std::uint32_t>(x)) + 0x9e3779b97f4a7c15ull +
                 (h << 6) + (h >> 2);
        }
        return h;
    }
};

// Graded lexicographic: higher total degree first, ties broken by the first
// differing exponent. Total degree of a Laurent monomial is the signed sum.
inline int grlex_cmp(const ExpVec& a, const ExpVec& b) {
    std::int64_t da = 0, db = 0;
    for (Exp x : a) da += x;
    for (Exp x : b) db += x;
    if (da != db) return da < db ? -1 : 1;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

struct Term {
    ExpVec exp;
    Int coeff;

    bool operator==(const Term& o) const { return exp == o.exp && coeff == o.coeff; }
};

// Sparse multivariate Laurent polynomial over the integers. Terms are kept
// sorted grlex-descending with no zero coefficients, so equality of the term
// vectors is semantic equality.
class LaurentPoly {
  public:
    explicit LaurentPoly(int nvars) : nvars_(check_nvars(nvars)) {}

    static LaurentPoly zero(int nvars) { return LaurentPoly(nvars); }

    static LaurentPoly constant(int nvars, Int c) {
        LaurentPoly p(nvars);
        if (c != 0) p.terms_.push_back(Term{ExpVec(static_cast<size_t>(nvars), 0), std::move(c)});
        return p;
    }

    // x_i, 0-based
    static LaurentPoly variable(int nvars, int i) {
        if (i < 0 || i >= nvars) throw index_error("LaurentPoly::variable: index out of range");
        ExpVec e(static_cast<size_t>(nvars), 0);
        e[static_cast<size_t>(i)] = 1;
        return monomial(nvars, std::move(e), 1);
    }

    static LaurentPoly monomial(int nvars, ExpVec exp, Int coeff) {
        if (static_cast<int>(exp.size()) != nvars)
            throw shape_error("LaurentPoly::monomial: exponent vector length mismatch");
        LaurentPoly p(nvars);
        if (coeff != 0) p.terms_.push_back(Term{std::move(exp), std::move(coeff)});
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_one() const {
        return terms_.size() == 1 && terms_[0].coeff == 1 &&
               std::all_of(terms_[0].exp.begin(), terms_[0].exp.end(),
                           [](Exp e) { return e == 0; });
    }

    bool operator==(const LaurentPoly& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }

    LaurentPoly operator-() const {
        LaurentPoly r(*this);
        for (Term& t : r.terms_) t.coeff = -t.coeff;
        return r;
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        return merge(a, b, false);
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
        return merge(a, b, true);
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        check_same_nvars(a, b);
        LaurentPoly r(a.nvars_);
        if (a.is_zero() || b.is_zero()) return r;
        if (b.terms_.size() == 1) return mul_monomial(a, b.terms_[0]);
        if (a.terms_.size() == 1) return mul_monomial(b, a.terms_[0]);
        std::unordered_map<ExpVec, Int, ExpVecHash> acc;
        acc.reserve(a.terms_.size() * 2);
        ExpVec e(static_cast<size_t>(a.nvars_), 0);
        for (const Term& ta : a.terms_) {
            for (const Term& tb : b.terms_) {
                for (size_t i = 0; i < e.size(); ++i) e[i] = add_exp(ta.exp[i], tb.exp[i]);
                acc[e] += ta.coeff * tb.coeff;
            }
        }
        r.terms_.reserve(acc.size());
        for (auto& [exp, c] : acc) {
            if (c != 0) r.terms_.push_back(Term{exp, std::move(c)});
        }
        r.sort_terms();
        return r;
    }

    // exponent >= 0
    LaurentPoly pow(unsigned e) const {
        LaurentPoly result = constant(nvars_, 1);
        LaurentPoly base = *this;
        while (e > 0) {
            if (e & 1u) result = result * base;
            e >>= 1u;
            if (e > 0) base = base * base;
        }
        return result;
    }

    // Sum of coefficients, i.e. the value at x = (1, ..., 1).
    Int coeff_sum() const {
        Int s = 0;
        for (const Term& t : terms_) s += t.coeff;
        return s;
    }

    // Exact evaluation at a point with nonzero coordinates.
    Rat eval(std::span<const Rat> point) const {
        if (static_cast<int>(point.size()) != nvars_)
            throw shape_error("LaurentPoly::eval: point arity mismatch");
        Rat s = 0;
        for (const Term& t : terms_) {
            Rat m(t.coeff);
            for (size_t i = 0; i < t.exp.size(); ++i) {
                Exp e = t.exp[i];
                if (e == 0) continue;
                if (point[i] == 0) throw divide_by_zero("LaurentPoly::eval: zero coordinate");
                Rat base = e > 0 ? point[i] : Rat(1) / point[i];
                for (Exp j = 0; j < (e > 0 ? e : -e); ++j) m *= base;
            }
            s += m;
        }
        return s;
    }

    // Componentwise minimum exponent over all terms (zero polynomial -> zeros).
    ExpVec min_exponents() const {
        ExpVec m(static_cast<size_t>(nvars_), 0);
        if (terms_.empty()) return m;
        m = terms_[0].exp;
        for (const Term& t : terms_)
            for (size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], t.exp[i]);
        return m;
    }

    // Multiply by the monomial x^shift.
    LaurentPoly shifted(const ExpVec& shift) const {
        LaurentPoly r(*this);
        for (Term& t : r.terms_)
            for (size_t i = 0; i < shift.size(); ++i) t.exp[i] = add_exp(t.exp[i], shift[i]);
        return r;
    }

    // Strict total order extending equality; used for deterministic
    // deduplication of clusters and variable sets.
    static int compare(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.nvars_ != b.nvars_) return a.nvars_ < b.nvars_ ? -1 : 1;
        size_t n = std::min(a.terms_.size(), b.terms_.size());
        for (size_t i = 0; i < n; ++i) {
            int c = grlex_cmp(a.terms_[i].exp, b.terms_[i].exp);
            if (c != 0) return c;
            if (a.terms_[i].coeff != b.terms_[i].coeff)
                return a.terms_[i].coeff < b.terms_[i].coeff ? -1 : 1;
        }
        if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size() ? -1 : 1;
        return 0;
    }

    bool operator<(const LaurentPoly& o) const { return compare(*this, o) < 0; }

  private:
    static int check_nvars(int nvars) {
        if (nvars <= 0) throw param_error("LaurentPoly: nvars must be positive");
        return nvars;
    }

    static void check_same_nvars(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.nvars_ != b.nvars_) throw shape_error("LaurentPoly: nvars mismatch");
    }

    static Exp add_exp(Exp a, Exp b) {
        std::int64_t s = std::int64_t(a) + std::int64_t(b);
        if (s > kMaxExp || s < -std::int64_t(kMaxExp))
            throw error("LaurentPoly: exponent overflow");
        return static_cast<Exp>(s);
    }

    static LaurentPoly mul_monomial(const LaurentPoly& a, const Term& m) {
        LaurentPoly r(a.nvars_);
        r.terms_.reserve(a.terms_.size());
        for (const Term& t : a.terms_) {
            ExpVec e = t.exp;
            for (size_t i = 0; i < e.size(); ++i) e[i] = add_exp(e[i], m.exp[i]);
            r.terms_.push_back(Term{std::move(e), t.coeff * m.coeff});
        }
        // shifting every exponent by the same vector preserves grlex order
        return r;
    }

    static LaurentPoly merge(const LaurentPoly& a, const LaurentPoly& b, bool subtract) {
        check_same_nvars(a, b);
        LaurentPoly r(a.nvars_);
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        size_t i = 0, j = 0;
        while (i < a.terms_.size() && j < b.terms_.size()) {
            int c = grlex_cmp(a.terms_[i].exp, b.terms_[j].exp);
            if (c > 0) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (c < 0) {
                const Term& t = b.terms_[j++];
                r.terms_.push_back(Term{t.exp, subtract ? -t.coeff : t.coeff});
            } else {
                Int s = subtract ? Int(a.terms_[i].coeff - b.terms_[j].coeff)
                                 : Int(a.terms_[i].coeff + b.terms_[j].coeff);
                if (s != 0) r.terms_.push_back(Term{a.terms_[i].exp, std::move(s)});
                ++i, ++j;
            }
        }
        for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
        for (; j < b.terms_.size(); ++j) {
            const Term& t = b.terms_[j];
            r.terms_.push_back(Term{t.exp, subtract ? -t.coeff : t.coeff});
        }
        return r;
    }

    void sort_terms() {
        std::sort(terms_.begin(), terms_.end(),
                  [](const Term& a, const Term& b) { return grlex_cmp(a.exp, b.exp) > 0; });
    }

    int nvars_;
    std::vector<Term> terms_;
};

// ---------------------------------------------------------------------------
// Exact division in the Laurent ring. Returns R with R * Q == P when such a
// Laurent polynomial (with integer coefficients) exists. Monomials are units
// in the Laurent ring, so both operands are first normalized to ordinary
// polynomials with componentwise minimum exponent zero; divisibility is then
// ordinary polynomial division with respect to the grlex order.
inline std::optional<LaurentPoly> exact_div(const LaurentPoly& P, const LaurentPoly& Q) {
    if (Q.is_zero()) throw divide_by_zero("exact_div: division by zero polynomial");
    if (P.nvars() != Q.nvars()) throw shape_error("exact_div: nvars mismatch");
    if (P.is_zero()) return LaurentPoly::zero(P.nvars());

    ExpVec shift_p = P.min_exponents();
    ExpVec shift_q = Q.min_exponents();
    ExpVec neg_p = shift_p, neg_q = shift_q;
    for (auto& e : neg_p) e = -e;
    for (auto& e : neg_q) e = -e;
    LaurentPoly rem = P.shifted(neg_p);
    LaurentPoly div = Q.shifted(neg_q);

    LaurentPoly quot(P.nvars());
    const Term& lt_div = div.terms().front();
    std::vector<Term> quot_terms;
    while (!rem.is_zero()) {
        const Term& lt = rem.terms().front();
        ExpVec e(lt.exp.size());
        for (size_t i = 0; i < e.size(); ++i) {
            Exp d = lt.exp[i] - lt_div.exp[i];
            if (d < 0) return std::nullopt;
            e[i] = d;
        }
        if (lt.coeff % lt_div.coeff != 0) return std::nullopt;
        LaurentPoly qt = LaurentPoly::monomial(P.nvars(), e, lt.coeff / lt_div.coeff);
        rem = rem - qt * div;
        quot = quot + qt;
    }

    ExpVec delta(shift_p.size());
    for (size_t i = 0; i < delta.size(); ++i) delta[i] = shift_p[i] - shift_q[i];
    return quot.shifted(delta);
}

// ---------------------------------------------------------------------------
// Unreduced fraction of Laurent polynomials; stands in for the ambient field.
// Equality is semantic via cross-multiplication, which avoids multivariate
// gcd entirely.
struct RationalFn {
    LaurentPoly num;
    LaurentPoly den;

    RationalFn(LaurentPoly n, LaurentPoly d) : num(std::move(n)), den(std::move(d)) {
        if (den.is_zero()) throw divide_by_zero("RationalFn: zero denominator");
        if (num.nvars() != den.nvars()) throw shape_error("RationalFn: nvars mismatch");
    }

    static RationalFn from_poly(LaurentPoly p) {
        int nv = p.nvars();
        return RationalFn(std::move(p), LaurentPoly::constant(nv, 1));
    }

    static RationalFn variable(int nvars, int i) {
        return from_poly(LaurentPoly::variable(nvars, i));
    }

    static RationalFn constant(int nvars, Int c) {
        return from_poly(LaurentPoly::constant(nvars, std::move(c)));
    }

    int nvars() const { return num.nvars(); }
    bool is_zero() const { return num.is_zero(); }

    RationalFn reciprocal() const {
        if (num.is_zero()) throw divide_by_zero("RationalFn: reciprocal of zero");
        return RationalFn(den, num);
    }

    friend RationalFn operator+(const RationalFn& a, const RationalFn& b) {
        return RationalFn(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend RationalFn operator-(const RationalFn& a, const RationalFn& b) {
        return RationalFn(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend RationalFn operator*(const RationalFn& a, const RationalFn& b) {
        return RationalFn(a.num * b.num, a.den * b.den);
    }
    friend RationalFn operator/(const RationalFn& a, const RationalFn& b) {
        if (b.num.is_zero()) throw divide_by_zero("RationalFn: division by zero");
        return RationalFn(a.num * b.den, a.den * b.num);
    }

    RationalFn pow(int e) const {
        if (e < 0) return reciprocal().pow(-e);
        RationalFn r = constant(nvars(), 1);
        RationalFn base = *this;
        unsigned u = static_cast<unsigned>(e);
        while (u > 0) {
            if (u & 1u) r = r * base;
            u >>= 1u;
            if (u > 0) base = base * base;
        }
        return r;
    }
};

inline bool fraction_equal(const RationalFn& f, const RationalFn& g) {
    if (f.nvars() != g.nvars()) throw shape_error("fraction_equal: nvars mismatch");
    return f.num * g.den == g.num * f.den;
}

// ---------------------------------------------------------------------------
// Exact composition: substitute one rational-function image per variable.
// Negative exponents substitute the reciprocal fraction. The result shares
// one common polynomial denominator.
inline RationalFn substitute(const LaurentPoly& p, std::span<const RationalFn> images) {
    if (static_cast<int>(images.size()) != p.nvars())
        throw shape_error("substitute: one image required per variable");
    for (const RationalFn& f : images) {
        if (f.den.is_zero()) throw divide_by_zero("substitute: zero image denominator");
    }
    int out_nv = images.empty() ? 1 : images[0].nvars();
    for (const RationalFn& f : images) {
        if (f.nvars() != out_nv) throw shape_error("substitute: image nvars mismatch");
    }
    if (p.is_zero()) {
        return RationalFn(LaurentPoly::zero(out_nv), LaurentPoly::constant(out_nv, 1));
    }

    size_t nv = images.size();
    // pos[i] = largest positive exponent of x_i, neg[i] = largest negative
    std::vector<Exp> pos(nv, 0), neg(nv, 0);
    for (const Term& t : p.terms()) {
        for (size_t i = 0; i < nv; ++i) {
            pos[i] = std::max(pos[i], t.exp[i]);
            neg[i] = std::max(neg[i], static_cast<Exp>(-t.exp[i]));
        }
    }
    for (size_t i = 0; i < nv; ++i) {
        if (neg[i] > 0 && images[i].num.is_zero())
            throw divide_by_zero("substitute: negative exponent of a zero image");
    }

    // Common denominator prod den_i^pos[i] * num_i^neg[i]; each term maps to
    // coeff * prod num_i^(neg[i]+e_i) * den_i^(pos[i]-e_i).
    auto powers = [&](const LaurentPoly& base, Exp up) {
        std::vector<LaurentPoly> ps;
        ps.push_back(LaurentPoly::constant(out_nv, 1));
        for (Exp k = 1; k <= up; ++k) ps.push_back(ps.back() * base);
        return ps;
    };
    std::vector<std::vector<LaurentPoly>> num_pows(nv), den_pows(nv);
    for (size_t i = 0; i < nv; ++i) {
        num_pows[i] = powers(images[i].num, static_cast<Exp>(pos[i] + neg[i]));
        den_pows[i] = powers(images[i].den, static_cast<Exp>(pos[i] + neg[i]));
    }

    LaurentPoly total = LaurentPoly::zero(out_nv);
    for (const Term& t : p.terms()) {
        LaurentPoly m = LaurentPoly::constant(out_nv, t.coeff);
        for (size_t i = 0; i < nv; ++i) {
            m = m * num_pows[i][static_cast<size_t>(neg[i] + t.exp[i])];
            m = m * den_pows[i][static_cast<size_t>(pos[i] - t.exp[i])];
        }
        total = total + m;
    }
    LaurentPoly denom = LaurentPoly::constant(out_nv, 1);
    for (size_t i = 0; i < nv; ++i) {
        denom = denom * den_pows[i][static_cast<size_t>(pos[i])];
        denom = denom * num_pows[i][static_cast<size_t>(neg[i])];
    }
    return RationalFn(std::move(total), std::move(denom));
}

// Compose a full fraction with per-variable images.
inline RationalFn substitute(const RationalFn& f, std::span<const RationalFn> images) {
    return substitute(f.num, images) / substitute(f.den, images);
}

// ---------------------------------------------------------------------------
// v-weighted degree. Returns the common weighted exponent sum if p is
// v-homogeneous, nullopt otherwise; the zero polynomial has no degree.
inline std::optional<Int> weighted_degree(const LaurentPoly& p, std::span<const Int> weights) {
    if (p.is_zero()) throw degree_error("weighted_degree: zero polynomial");
    if (static_cast<int>(weights.size()) != p.nvars())
        throw shape_error("weighted_degree: weight vector length mismatch");
    std::optional<Int> deg;
    for (const Term& t : p.terms()) {
        Int d = 0;
        for (size_t i = 0; i < weights.size(); ++i) d += weights[i] * t.exp[i];
        if (!deg) {
            deg = d;
        } else if (*deg != d) {
            return std::nullopt;
        }
    }
    return deg;
}

// ---------------------------------------------------------------------------
// Textual rendering: terms in grlex-descending order, variables x1..xn,
// negative exponents parenthesized, e.g. "x2^2 + 2*x1*x2^(-1)".
inline std::string to_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const Term& t : p.terms()) {
        Int c = t.coeff;
        if (first) {
            if (c < 0) {
                out += "-";
                c = -c;
            }
            first = false;
        } else {
            out += (c < 0) ? " - " : " + ";
            if (c < 0) c = -c;
        }
        std::string mon;
        for (size_t i = 0; i < t.exp.size(); ++i) {
            Exp e = t.exp[i];
            if (e == 0) continue;
            if (!mon.empty()) mon += "*";
            mon += "x" + std::to_string(i + 1);
            if (e != 1) {
                mon += "^";
                if (e < 0) {
                    mon += "(" + std::to_string(e) + ")";
                } else {
                    mon += std::to_string(e);
                }
            }
        }
        if (mon.empty()) {
            out += c.str();
        } else {
            if (c != 1) out += c.str() + "*";
            out += mon;
        }
    }
    return out;
}

inline std::string to_string(const RationalFn& f) {
    return "(" + to_string(f.num) + ")/(" + to_string(f.den) + ")";
}

}  // namespace mutinv
