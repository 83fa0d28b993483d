#pragma once

// Exact coefficient field for the quotient algebras: rational functions over
// the Gaussian rationals in the central variables
//
//   s  with q = s^2      (so q^(1/2) is a plain monomial)
//   t  with p = t^2
//   h  for hbar
//
// plus any number of user-declared opaque central symbols.  Every exponent is
// an integer; negative exponents are allowed, so Laurent monomials never show
// up in a denominator.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "errors.hpp"

namespace qheis {

using Rational = mpq_class;
using BigInt = mpz_class;

inline constexpr std::string_view var_sqrt_q = "s";
inline constexpr std::string_view var_sqrt_p = "t";
inline constexpr std::string_view var_hbar = "h";

inline bool is_builtin_central(std::string_view name) {
    return name == var_sqrt_q || name == var_sqrt_p || name == var_hbar;
}

// ---------------------------------------------------------------------------
// GaussRational

class GaussRational {
public:
    GaussRational() = default;
    GaussRational(long re) : re_(re), im_(0) {}  // NOLINT: implicit by design of the scalar tower
    GaussRational(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static GaussRational imaginary_unit() { return {Rational(0), Rational(1)}; }

    const Rational& re() const noexcept { return re_; }
    const Rational& im() const noexcept { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    bool is_imaginary() const { return sgn(re_) == 0 && sgn(im_) != 0; }

    GaussRational conj() const { return {re_, -im_}; }
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussRational inverse() const {
        if (is_zero()) throw DivisionByZero("inverse of the Gaussian rational 0");
        Rational n = norm();
        return {Rational(re_ / n), Rational(-im_ / n)};
    }

    GaussRational operator-() const { return {Rational(-re_), Rational(-im_)}; }

    GaussRational& operator+=(const GaussRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussRational& operator-=(const GaussRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussRational& operator*=(const GaussRational& o) {
        Rational r = re_ * o.re_ - im_ * o.im_;
        Rational i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    GaussRational& operator/=(const GaussRational& o) { return *this *= o.inverse(); }

    friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
    friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
    friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
    friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }

    friend bool operator==(const GaussRational& a, const GaussRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    GaussRational pow(int e) const {
        if (e < 0) return inverse().pow(-e);
        GaussRational result(1), base = *this;
        for (unsigned k = static_cast<unsigned>(e); k != 0; k >>= 1) {
            if (k & 1u) result *= base;
            base *= base;
        }
        return result;
    }

    std::string to_string() const {
        if (is_real()) return re_.get_str();
        if (sgn(re_) == 0) return im_.get_str() + "i";
        return "(" + re_.get_str() + (sgn(im_) > 0 ? "+" : "") + im_.get_str() + "i)";
    }

private:
    Rational re_{0};
    Rational im_{0};
};

// ---------------------------------------------------------------------------
// CentralMonomial

class CentralMonomial {
public:
    using Entry = std::pair<std::string, int>;

    CentralMonomial() = default;

    static CentralMonomial var(std::string name, int exponent = 1) {
        CentralMonomial m;
        if (exponent != 0) m.exps_.emplace_back(std::move(name), exponent);
        return m;
    }

    static CentralMonomial from_entries(std::vector<Entry> entries) {
        CentralMonomial m;
        for (auto& [name, e] : entries) m = m * var(name, e);
        return m;
    }

    const std::vector<Entry>& entries() const noexcept { return exps_; }
    bool is_one() const noexcept { return exps_.empty(); }

    int exponent(std::string_view name) const {
        for (const auto& [n, e] : exps_)
            if (n == name) return e;
        return 0;
    }

    int total_degree() const {
        int d = 0;
        for (const auto& entry : exps_) d += entry.second;
        return d;
    }

    CentralMonomial operator*(const CentralMonomial& o) const {
        CentralMonomial r;
        r.exps_.reserve(exps_.size() + o.exps_.size());
        auto a = exps_.begin(), b = o.exps_.begin();
        while (a != exps_.end() || b != o.exps_.end()) {
            if (b == o.exps_.end() || (a != exps_.end() && a->first < b->first)) {
                r.exps_.push_back(*a++);
            } else if (a == exps_.end() || b->first < a->first) {
                r.exps_.push_back(*b++);
            } else {
                int e = a->second + b->second;
                if (e != 0) r.exps_.emplace_back(a->first, e);
                ++a;
                ++b;
            }
        }
        return r;
    }

    CentralMonomial inverse() const { return pow(-1); }

    CentralMonomial pow(int k) const {
        CentralMonomial r;
        if (k == 0) return r;
        r.exps_ = exps_;
        for (auto& entry : r.exps_) entry.second *= k;
        return r;
    }

    CentralMonomial without(std::string_view name) const {
        CentralMonomial r;
        for (const auto& entry : exps_)
            if (entry.first != name) r.exps_.push_back(entry);
        return r;
    }

    auto operator<=>(const CentralMonomial&) const = default;
    bool operator==(const CentralMonomial&) const = default;

private:
    std::vector<Entry> exps_;  // sorted by name, no zero exponents
};

/// Lexicographic monomial order with variables ranked by name (first name is
/// most significant).  Used only to pick leading terms for exact division.
inline std::strong_ordering lex_compare(const CentralMonomial& a, const CentralMonomial& b) {
    const auto& ea = a.entries();
    const auto& eb = b.entries();
    auto ia = ea.begin(), ib = eb.begin();
    while (ia != ea.end() || ib != eb.end()) {
        int xa, xb;
        if (ib == eb.end() || (ia != ea.end() && ia->first < ib->first)) {
            xa = ia->second;
            xb = 0;
            ++ia;
        } else if (ia == ea.end() || ib->first < ia->first) {
            xa = 0;
            xb = ib->second;
            ++ib;
        } else {
            xa = ia->second;
            xb = ib->second;
            ++ia;
            ++ib;
        }
        if (xa != xb) return xa <=> xb;
    }
    return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// CentralPoly: Laurent polynomial in the central variables

class CentralPoly {
public:
    using Terms = std::map<CentralMonomial, GaussRational>;

    CentralPoly() = default;
    CentralPoly(GaussRational c) { add_term(CentralMonomial{}, std::move(c)); }  // NOLINT
    CentralPoly(long c) : CentralPoly(GaussRational(c)) {}                        // NOLINT
    CentralPoly(const CentralMonomial& m, GaussRational c = GaussRational(1)) { add_term(m, std::move(c)); }

    const Terms& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_monomial() const noexcept { return terms_.size() == 1; }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first.is_one() && terms_.begin()->second.is_one();
    }

    void add_term(const CentralMonomial& m, const GaussRational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    CentralPoly operator-() const {
        CentralPoly r = *this;
        for (auto& entry : r.terms_) entry.second = -entry.second;
        return r;
    }

    CentralPoly& operator+=(const CentralPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    CentralPoly& operator-=(const CentralPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend CentralPoly operator+(CentralPoly a, const CentralPoly& b) { return a += b; }
    friend CentralPoly operator-(CentralPoly a, const CentralPoly& b) { return a -= b; }

    friend CentralPoly operator*(const CentralPoly& a, const CentralPoly& b) {
        CentralPoly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }

    CentralPoly scaled(const GaussRational& c, const CentralMonomial& m = {}) const {
        CentralPoly r;
        if (c.is_zero()) return r;
        for (const auto& [mm, cc] : terms_) r.terms_.emplace(mm * m, cc * c);
        return r;
    }

    friend bool operator==(const CentralPoly&, const CentralPoly&) = default;

    std::set<std::string> variables() const {
        std::set<std::string> vs;
        for (const auto& entry : terms_)
            for (const auto& e : entry.first.entries()) vs.insert(e.first);
        return vs;
    }

    /// Per-variable minimum exponent over all terms (absent variables count as 0).
    CentralMonomial min_exponents() const {
        std::map<std::string, int> lo;
        for (const auto& v : variables()) lo[v] = 0;
        for (const auto& entry : terms_)
            for (auto& [v, e] : lo) e = std::min(e, entry.first.exponent(v));
        std::vector<CentralMonomial::Entry> entries(lo.begin(), lo.end());
        return CentralMonomial::from_entries(std::move(entries));
    }

    /// Leading term under lex_compare.
    const Terms::value_type& lex_leading() const {
        auto best = terms_.begin();
        for (auto it = std::next(best); it != terms_.end(); ++it)
            if (lex_compare(it->first, best->first) == std::strong_ordering::greater) best = it;
        return *best;
    }

    CentralPoly pow(unsigned k) const {
        CentralPoly result(1), base = *this;
        for (; k != 0; k >>= 1) {
            if (k & 1u) result = result * base;
            if (k > 1) base = base * base;
        }
        return result;
    }

private:
    Terms terms_;
};

namespace detail {

// Exact quotient n / d, or nullopt when d does not divide n.  `d` must have
// nonnegative exponents; `n` may be Laurent.
inline std::optional<CentralPoly> divide_exact(const CentralPoly& n, const CentralPoly& d) {
    if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (n.is_zero()) return CentralPoly{};
    if (d.is_monomial()) {
        const auto& [m, c] = *d.terms().begin();
        return n.scaled(c.inverse(), m.inverse());
    }
    // Clear negative exponents of n by a monomial shift.
    std::vector<CentralMonomial::Entry> shift_entries;
    CentralMonomial low = n.min_exponents();
    for (const auto& e : low.entries())
        if (e.second < 0) shift_entries.emplace_back(e.first, -e.second);
    CentralMonomial shift = CentralMonomial::from_entries(shift_entries);
    CentralPoly rem = n.scaled(GaussRational(1), shift);
    CentralPoly quot;
    const auto& [dm, dc] = d.lex_leading();
    GaussRational dc_inv = dc.inverse();
    while (!rem.is_zero()) {
        const auto& [rm, rc] = rem.lex_leading();
        CentralMonomial tm = rm * dm.inverse();
        for (const auto& e : tm.entries())
            if (e.second < 0) return std::nullopt;
        GaussRational tc = rc * dc_inv;
        quot.add_term(tm, tc);
        rem -= d.scaled(tc, tm);
    }
    return quot.scaled(GaussRational(1), shift.inverse());
}

// Dense univariate helpers for gcd in one variable.
using Dense = std::vector<GaussRational>;

inline void trim(Dense& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

inline Dense dense_rem(Dense a, const Dense& b) {
    trim(a);
    GaussRational lead_inv = b.back().inverse();
    while (a.size() >= b.size()) {
        GaussRational f = a.back() * lead_inv;
        std::size_t off = a.size() - b.size();
        for (std::size_t k = 0; k < b.size(); ++k) a[off + k] -= f * b[k];
        a.pop_back();
        trim(a);
    }
    return a;
}

inline Dense dense_gcd(Dense a, Dense b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Dense r = dense_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        GaussRational inv = a.back().inverse();
        for (auto& c : a) c *= inv;
    }
    return a;
}

// Polynomial (nonnegative exponents) in a single variable v -> dense vector.
inline Dense to_dense(const CentralPoly& p, const std::string& v) {
    Dense d;
    for (const auto& [m, c] : p.terms()) {
        int e = m.exponent(v);
        if (static_cast<std::size_t>(e) >= d.size()) d.resize(static_cast<std::size_t>(e) + 1);
        d[static_cast<std::size_t>(e)] = c;
    }
    return d;
}

inline CentralPoly from_dense(const Dense& d, const std::string& v) {
    CentralPoly p;
    for (std::size_t e = 0; e < d.size(); ++e) p.add_term(CentralMonomial::var(v, static_cast<int>(e)), d[e]);
    return p;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Coefficient

class Coefficient {
public:
    Coefficient() : num_(), den_(1) {}
    Coefficient(GaussRational c) : num_(std::move(c)), den_(1) {}  // NOLINT
    Coefficient(long c) : Coefficient(GaussRational(c)) {}          // NOLINT
    Coefficient(CentralPoly n) : num_(std::move(n)), den_(1) {}     // NOLINT

    static Coefficient fraction(CentralPoly n, CentralPoly d) {
        if (d.is_zero()) throw DivisionByZero("zero denominator");
        Coefficient c;
        c.num_ = std::move(n);
        c.den_ = std::move(d);
        c.canonicalize();
        return c;
    }

    static Coefficient variable(const std::string& name, int exponent = 1) {
        return Coefficient(CentralPoly(CentralMonomial::var(name, exponent)));
    }
    static Coefficient imaginary_unit() { return Coefficient(GaussRational::imaginary_unit()); }
    /// q^(e/2)
    static Coefficient q_half_power(int e) { return variable(std::string(var_sqrt_q), e); }
    static Coefficient q_power(int e) { return q_half_power(2 * e); }
    /// p^(e/2)
    static Coefficient p_half_power(int e) { return variable(std::string(var_sqrt_p), e); }
    static Coefficient p_power(int e) { return p_half_power(2 * e); }
    static Coefficient hbar_power(int e) { return variable(std::string(var_hbar), e); }

    const CentralPoly& numerator() const noexcept { return num_; }
    const CentralPoly& denominator() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_scalar() const { return den_.is_one() && num_.is_constant(); }

    GaussRational scalar_value() const {
        if (num_.is_zero()) return GaussRational(0);
        return num_.terms().begin()->second;
    }

    std::set<std::string> variables() const {
        auto vs = num_.variables();
        auto dv = den_.variables();
        vs.insert(dv.begin(), dv.end());
        return vs;
    }

    Coefficient operator-() const {
        Coefficient r = *this;
        r.num_ = -r.num_;
        return r;
    }

    Coefficient inverse() const {
        if (is_zero()) throw DivisionByZero("inverse of the zero coefficient");
        return fraction(den_, num_);
    }

    friend Coefficient operator+(const Coefficient& a, const Coefficient& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_ == b.den_) return fraction(a.num_ + b.num_, a.den_);
        if (b.den_.is_one()) return fraction(a.num_ + b.num_ * a.den_, a.den_);
        if (a.den_.is_one()) return fraction(a.num_ * b.den_ + b.num_, b.den_);
        if (auto k = detail::divide_exact(b.den_, a.den_)) return fraction(a.num_ * *k + b.num_, b.den_);
        if (auto k = detail::divide_exact(a.den_, b.den_)) return fraction(a.num_ + b.num_ * *k, a.den_);
        return fraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Coefficient operator-(const Coefficient& a, const Coefficient& b) { return a + (-b); }

    friend Coefficient operator*(const Coefficient& a, const Coefficient& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (a.den_.is_one() && b.den_.is_one()) {
            Coefficient r;
            r.num_ = a.num_ * b.num_;
            return r;
        }
        CentralPoly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
        if (!bd.is_one())
            if (auto k = detail::divide_exact(an, bd)) {
                an = std::move(*k);
                bd = CentralPoly(1);
            }
        if (!ad.is_one())
            if (auto k = detail::divide_exact(bn, ad)) {
                bn = std::move(*k);
                ad = CentralPoly(1);
            }
        return fraction(an * bn, ad * bd);
    }
    friend Coefficient operator/(const Coefficient& a, const Coefficient& b) { return a * b.inverse(); }

    Coefficient& operator+=(const Coefficient& o) { return *this = *this + o; }
    Coefficient& operator-=(const Coefficient& o) { return *this = *this - o; }
    Coefficient& operator*=(const Coefficient& o) { return *this = *this * o; }

    Coefficient pow(int e) const {
        if (e < 0) return inverse().pow(-e);
        return fraction(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
    }

    /// Field equality, decided by cross-multiplication.
    friend bool operator==(const Coefficient& a, const Coefficient& b) {
        if (a.den_ == b.den_) return a.num_ == b.num_;
        return a.num_ * b.den_ == b.num_ * a.den_;
    }

private:
    // Denominator normal form: nonnegative exponents, no monomial content,
    // lex-leading coefficient 1.  Then cancel by exact division or, when the
    // denominator is univariate, by a univariate gcd.
    void canonicalize() {
        if (num_.is_zero()) {
            den_ = CentralPoly(1);
            return;
        }
        CentralMonomial content = den_.min_exponents();
        GaussRational lead = den_.lex_leading().second;
        GaussRational lead_inv = lead.inverse();
        den_ = den_.scaled(lead_inv, content.inverse());
        num_ = num_.scaled(lead_inv, content.inverse());
        if (den_.is_one()) return;
        if (auto q = detail::divide_exact(num_, den_)) {
            num_ = std::move(*q);
            den_ = CentralPoly(1);
            return;
        }
        auto dvars = den_.variables();
        if (dvars.size() == 1) reduce_by_univariate_gcd(*dvars.begin());
    }

    void reduce_by_univariate_gcd(const std::string& v) {
        // gcd(den, num) for den in k[v]: gcd of den with every coefficient of
        // num viewed as a polynomial in the remaining variables.
        CentralMonomial shift = num_.min_exponents();
        CentralPoly n = num_.scaled(GaussRational(1), shift.inverse());
        std::map<CentralMonomial, CentralPoly> groups;
        for (const auto& [m, c] : n.terms())
            groups[m.without(v)].add_term(CentralMonomial::var(v, m.exponent(v)), c);
        detail::Dense g = detail::to_dense(den_, v);
        for (const auto& entry : groups) {
            g = detail::dense_gcd(g, detail::to_dense(entry.second, v));
            if (g.size() <= 1) return;
        }
        CentralPoly gp = detail::from_dense(g, v);
        auto nd = detail::divide_exact(num_, gp);
        auto dd = detail::divide_exact(den_, gp);
        if (!nd || !dd) return;
        num_ = std::move(*nd);
        den_ = std::move(*dd);
        GaussRational lead_inv = den_.lex_leading().second.inverse();
        den_ = den_.scaled(lead_inv);
        num_ = num_.scaled(lead_inv);
    }

    CentralPoly num_;
    CentralPoly den_;
};

// ---------------------------------------------------------------------------
// Operations

enum class ArithOp { add, mul, neg, inv };

inline Coefficient coeff_arith(ArithOp op, const Coefficient& a, const std::optional<Coefficient>& b = std::nullopt) {
    switch (op) {
    case ArithOp::add:
        if (!b) throw ParamError("add needs two operands");
        return a + *b;
    case ArithOp::mul:
        if (!b) throw ParamError("mul needs two operands");
        return a * *b;
    case ArithOp::neg:
        return -a;
    case ArithOp::inv:
        return a.inverse();
    }
    return a;
}

inline bool coeff_eq(const Coefficient& a, const Coefficient& b) { return a == b; }

/// Two-parameter quantum integer as the finite sum  sum_{i<k} q^i p^{-(k-1-i)}.
inline Coefficient qnumber(int k) {
    if (k < 0) throw ParamError("qnumber needs k >= 0, got " + std::to_string(k));
    CentralPoly sum;
    for (int i = 0; i < k; ++i) {
        CentralMonomial m = CentralMonomial::var(std::string(var_sqrt_q), 2 * i) *
                            CentralMonomial::var(std::string(var_sqrt_p), -2 * (k - 1 - i));
        sum.add_term(m, GaussRational(1));
    }
    return Coefficient(sum);
}

/// The closed form (q^k - p^-k) / (q - p^-1).
inline Coefficient qnumber_closed_form(int k) {
    if (k < 0) throw ParamError("qnumber needs k >= 0, got " + std::to_string(k));
    Coefficient num = Coefficient::q_power(k) - Coefficient::p_power(-k);
    Coefficient den = Coefficient::q_power(1) - Coefficient::p_power(-1);
    return num / den;
}

using Point = std::map<std::string, GaussRational>;

namespace detail {

inline GaussRational eval_poly(const CentralPoly& p, const Point& point) {
    GaussRational total(0);
    for (const auto& [m, c] : p.terms()) {
        GaussRational term = c;
        for (const auto& [v, e] : m.entries()) {
            auto it = point.find(v);
            if (it == point.end()) throw UnboundVariable("no value for central variable '" + v + "'");
            if (e < 0 && it->second.is_zero())
                throw PoleAtPoint("variable '" + v + "' is zero but appears with exponent " + std::to_string(e));
            term *= it->second.pow(e);
        }
        total += term;
    }
    return total;
}

} // namespace detail

inline GaussRational coeff_eval(const Coefficient& a, const Point& point) {
    GaussRational n = detail::eval_poly(a.numerator(), point);
    GaussRational d = detail::eval_poly(a.denominator(), point);
    if (d.is_zero()) throw PoleAtPoint("denominator vanishes at the evaluation point");
    return n / d;
}

/// Replace one central variable by a coefficient.  Fails with PoleAtPoint
/// when the substituted denominator vanishes identically.
inline Coefficient coeff_substitute(const Coefficient& a, const std::string& var, const Coefficient& value) {
    auto subst_poly = [&](const CentralPoly& p) {
        Coefficient total;
        for (const auto& [m, c] : p.terms()) {
            int e = m.exponent(var);
            Coefficient term(CentralPoly(m.without(var), c));
            if (e != 0) {
                if (e < 0 && value.is_zero())
                    throw PoleAtPoint("substituting 0 for '" + var + "' hits a negative power");
                term *= value.pow(e);
            }
            total += term;
        }
        return total;
    };
    Coefficient n = subst_poly(a.numerator());
    Coefficient d = subst_poly(a.denominator());
    if (d.is_zero()) throw PoleAtPoint("denominator vanishes after substituting for '" + var + "'");
    return n / d;
}

} // namespace qheis
