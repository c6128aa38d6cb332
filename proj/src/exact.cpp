#include "fracreal/exact.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace fracreal {

// ---------------------------------------------------------------------------
// BigRat
// ---------------------------------------------------------------------------

BigRat::BigRat(long num, long den) {
    if (den == 0) throw MathError("zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

BigRat::BigRat(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

namespace {

mpz_class parse_integer(std::string_view digits) {
    if (digits.empty()) throw ValidationError("malformed number: empty integer");
    for (char c : digits)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ValidationError("malformed number: '" + std::string(digits) + "'");
    return mpz_class(std::string(digits), 10);
}

mpz_class pow10(unsigned e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

BigRat parse_decimal(std::string_view text) {
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    long exponent = 0;
    if (auto epos = text.find_first_of("eE"); epos != std::string_view::npos) {
        std::string_view exp_text = text.substr(epos + 1);
        bool exp_negative = false;
        if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
            exp_negative = exp_text.front() == '-';
            exp_text.remove_prefix(1);
        }
        const mpz_class e = parse_integer(exp_text);
        if (e > 4000) throw ValidationError("malformed number: exponent out of range");
        exponent = e.get_si() * (exp_negative ? -1 : 1);
        text = text.substr(0, epos);
    }
    std::string digits;
    long frac_len = 0;
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        digits = std::string(text.substr(0, dot)) + std::string(text.substr(dot + 1));
        frac_len = static_cast<long>(text.size() - dot - 1);
        if (digits.empty()) throw ValidationError("malformed number: '.'");
    } else {
        digits = std::string(text);
    }
    mpq_class value(parse_integer(digits));
    const long shift = exponent - frac_len;
    if (shift >= 0)
        value *= pow10(static_cast<unsigned>(shift));
    else
        value /= pow10(static_cast<unsigned>(-shift));
    value.canonicalize();
    if (negative) value = -value;
    return BigRat(value);
}

}  // namespace

BigRat BigRat::parse(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw ValidationError("malformed number: empty");
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        const BigRat num = parse_decimal(text.substr(0, slash));
        const BigRat den = parse_decimal(text.substr(slash + 1));
        if (den.is_zero()) throw ValidationError("malformed number: zero denominator");
        return num / den;
    }
    return parse_decimal(text);
}

BigRat BigRat::from_double(double v) {
    if (!std::isfinite(v)) throw ValidationError("cannot convert a non-finite double to a rational");
    return BigRat(mpq_class(v));
}

std::string BigRat::to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

long BigRat::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q.get_si();
}

BigRat& BigRat::operator/=(const BigRat& o) {
    if (o.is_zero()) throw MathError("division by zero");
    value_ /= o.value_;
    return *this;
}

BigRat pow(const BigRat& base, unsigned exponent) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
    return BigRat(mpq_class(num, den));
}

BigRat abs(const BigRat& v) { return v.sign() < 0 ? -v : v; }

// ---------------------------------------------------------------------------
// Symbols and monomials
// ---------------------------------------------------------------------------

namespace {
constexpr std::array<std::string_view, kSymbolCount> kSymbolNames = {
    "lambda", "mu", "alpha", "x", "Kp", "Ki", "Kd", "Kc", "T"};
}

std::string_view symbol_name(Symbol s) { return kSymbolNames[static_cast<std::size_t>(s)]; }

std::optional<Symbol> symbol_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kSymbolCount; ++i)
        if (kSymbolNames[i] == name) return static_cast<Symbol>(i);
    return std::nullopt;
}

unsigned Monomial::degree() const {
    unsigned d = 0;
    for (auto e : exps) d += e;
    return d;
}

bool Monomial::divides(const Monomial& other) const {
    for (std::size_t i = 0; i < kSymbolCount; ++i)
        if (exps[i] > other.exps[i]) return false;
    return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kSymbolCount; ++i) {
        const unsigned e = unsigned{a.exps[i]} + unsigned{b.exps[i]};
        if (e > 255) throw MathError("monomial exponent overflow");
        r.exps[i] = static_cast<std::uint8_t>(e);
    }
    return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kSymbolCount; ++i) r.exps[i] = static_cast<std::uint8_t>(a.exps[i] - b.exps[i]);
    return r;
}

bool operator<(const Monomial& a, const Monomial& b) {
    const unsigned da = a.degree();
    const unsigned db = b.degree();
    if (da != db) return da < db;
    return a.exps < b.exps;
}

// ---------------------------------------------------------------------------
// ParamPoly
// ---------------------------------------------------------------------------

ParamPoly::ParamPoly(const BigRat& c) {
    if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

ParamPoly ParamPoly::var(Symbol s, unsigned power) {
    Monomial m;
    m.exps[static_cast<std::size_t>(s)] = static_cast<std::uint8_t>(power);
    return term(m, BigRat(1));
}

ParamPoly ParamPoly::term(const Monomial& m, const BigRat& c) {
    ParamPoly p;
    p.add_term(m, c);
    return p;
}

void ParamPoly::add_term(const Monomial& m, const BigRat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool ParamPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

BigRat ParamPoly::constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? BigRat(0) : it->second;
}

unsigned ParamPoly::total_degree() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

unsigned ParamPoly::degree_in(Symbol s) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(s));
    return d;
}

std::vector<Symbol> ParamPoly::symbols() const {
    std::vector<Symbol> out;
    for (std::size_t i = 0; i < kSymbolCount; ++i)
        if (contains(static_cast<Symbol>(i))) out.push_back(static_cast<Symbol>(i));
    return out;
}

std::pair<Monomial, BigRat> ParamPoly::leading_term() const {
    if (terms_.empty()) throw MathError("leading term of zero polynomial");
    return *terms_.rbegin();
}

std::vector<ParamPoly> ParamPoly::coefficients_in(Symbol s) const {
    std::vector<ParamPoly> out(degree_in(s) + 1);
    const auto idx = static_cast<std::size_t>(s);
    for (const auto& [m, c] : terms_) {
        Monomial rest = m;
        rest.exps[idx] = 0;
        out[m.exps[idx]].add_term(rest, c);
    }
    return out;
}

ParamPoly ParamPoly::from_coefficients(Symbol s, std::span<const ParamPoly> coeffs) {
    ParamPoly out;
    const auto idx = static_cast<std::size_t>(s);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        for (const auto& [m, c] : coeffs[k].terms_) {
            Monomial shifted = m;
            shifted.exps[idx] = static_cast<std::uint8_t>(shifted.exps[idx] + k);
            out.add_term(shifted, c);
        }
    }
    return out;
}

ParamPoly ParamPoly::substitute(Symbol s, const ParamPoly& value) const {
    const auto coeffs = coefficients_in(s);
    ParamPoly out;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) out = out * value + *it;
    return out;
}

ParamPoly ParamPoly::evaluate(const Assignment& values) const {
    ParamPoly out;
    for (const auto& [m, c] : terms_) {
        Monomial rest = m;
        BigRat coeff = c;
        for (const auto& [sym, v] : values) {
            const auto idx = static_cast<std::size_t>(sym);
            if (rest.exps[idx] == 0) continue;
            coeff *= pow(v, rest.exps[idx]);
            rest.exps[idx] = 0;
        }
        out.add_term(rest, coeff);
    }
    return out;
}

namespace {

std::string monomial_string(const Monomial& m) {
    std::string out;
    for (std::size_t i = 0; i < kSymbolCount; ++i) {
        if (m.exps[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += kSymbolNames[i];
        if (m.exps[i] > 1) out += "^" + std::to_string(m.exps[i]);
    }
    return out;
}

}  // namespace

std::string ParamPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        const BigRat mag = abs(c);
        if (first)
            out += c.sign() < 0 ? "-" : "";
        else
            out += c.sign() < 0 ? " - " : " + ";
        first = false;
        if (m.degree() == 0) {
            out += mag.to_string();
            continue;
        }
        if (mag != BigRat(1)) out += (mag.is_integer() ? mag.to_string() : "(" + mag.to_string() + ")") + "*";
        out += monomial_string(m);
    }
    return out;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& o) { return *this = *this * o; }

ParamPoly& ParamPoly::operator*=(const BigRat& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

ParamPoly operator-(const ParamPoly& a) {
    ParamPoly out = a;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

ParamPoly pow(const ParamPoly& base, unsigned exponent) {
    ParamPoly result(1);
    ParamPoly b = base;
    while (exponent > 0) {
        if (exponent & 1U) result *= b;
        exponent >>= 1U;
        if (exponent > 0) b *= b;
    }
    return result;
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace {

class PolyParser {
public:
    explicit PolyParser(std::string_view text) : text_(text) {}

    ParamPoly parse() {
        ParamPoly p = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw ValidationError("polynomial parse error at offset " + std::to_string(pos_) + ": " + why);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    ParamPoly expr() {
        ParamPoly acc = term();
        while (true) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    ParamPoly term() {
        ParamPoly acc = unary();
        while (true) {
            if (accept('*')) {
                acc *= unary();
            } else if (accept('/')) {
                const ParamPoly d = unary();
                if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
                acc *= BigRat(1) / d.constant_term();
            } else {
                return acc;
            }
        }
    }

    ParamPoly unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    ParamPoly power() {
        ParamPoly base = primary();
        if (accept('^')) {
            skip_space();
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) fail("expected integer exponent");
            return pow(base, static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
        }
        return base;
    }

    ParamPoly primary() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        if (accept('(')) {
            ParamPoly inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            const std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
                ++pos_;
            return ParamPoly(BigRat::parse(text_.substr(start, pos_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            const auto name = text_.substr(start, pos_ - start);
            const auto sym = symbol_from_name(name);
            if (!sym) fail("unknown symbol '" + std::string(name) + "'");
            return ParamPoly::var(*sym);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

ParamPoly ParamPoly::parse(std::string_view text) { return PolyParser(text).parse(); }

// ---------------------------------------------------------------------------
// Division, content, GCD
// ---------------------------------------------------------------------------

ParamPoly divide_exact(const ParamPoly& a, const ParamPoly& b) {
    if (b.is_zero()) throw MathError("division by zero polynomial");
    if (b.is_constant()) {
        ParamPoly q = a;
        q *= BigRat(1) / b.constant_term();
        return q;
    }
    const auto [lead_m, lead_c] = b.leading_term();
    ParamPoly quotient;
    ParamPoly rest = a;
    while (!rest.is_zero()) {
        const auto [rm, rc] = rest.leading_term();
        if (!lead_m.divides(rm)) throw MathError("inexact division");
        const ParamPoly t = ParamPoly::term(rm / lead_m, rc / lead_c);
        quotient += t;
        rest -= t * b;
    }
    return quotient;
}

namespace {

// Positive rational g such that every coefficient / g is an integer and the
// integers share no common factor.
BigRat positive_content(std::span<const ParamPoly> polys) {
    mpz_class num_gcd = 0;
    mpz_class den_lcm = 1;
    for (const auto& p : polys) {
        for (const auto& [m, c] : p.terms()) {
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.raw().get_num_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.raw().get_den_mpz_t());
        }
    }
    if (num_gcd == 0) return BigRat(0);
    return BigRat(mpq_class(num_gcd, den_lcm));
}

}  // namespace

BigRat collective_content(std::span<const ParamPoly> polys) { return positive_content(polys); }

Normalized poly_normalize(const ParamPoly& p) {
    if (p.is_zero()) return {BigRat(0), ParamPoly{}};
    BigRat content = positive_content(std::span(&p, 1));
    ParamPoly primitive = p;
    primitive *= BigRat(1) / content;
    if (primitive.leading_term().second.sign() < 0) {
        content = -content;
        primitive = -primitive;
    }
    return {content, primitive};
}

namespace {

using Dense = std::vector<BigRat>;

void trim(Dense& d) {
    while (!d.empty() && d.back().is_zero()) d.pop_back();
}

Dense dense_mod(Dense a, const Dense& b) {
    const BigRat lead = b.back();
    while (a.size() >= b.size() && !a.empty()) {
        const BigRat factor = a.back() / lead;
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

std::optional<Symbol> univariate_symbol(const ParamPoly& p, bool& ok) {
    const auto syms = p.symbols();
    if (syms.size() > 1) ok = false;
    if (syms.empty()) return std::nullopt;
    return syms.front();
}

}  // namespace

ParamPoly poly_gcd(const ParamPoly& a, const ParamPoly& b) {
    if (a.is_zero() && b.is_zero()) throw MathError("gcd undefined");
    bool ok = true;
    const auto sa = univariate_symbol(a, ok);
    const auto sb = univariate_symbol(b, ok);
    if (!ok || (sa && sb && *sa != *sb))
        throw ValidationError("poly_gcd requires polynomials univariate in a common symbol");
    const Symbol v = sa ? *sa : (sb ? *sb : Symbol::lambda);

    auto to_dense = [v](const ParamPoly& p) {
        Dense d;
        for (const auto& c : p.coefficients_in(v)) d.push_back(c.constant_term());
        trim(d);
        return d;
    };
    Dense x = to_dense(a);
    Dense y = to_dense(b);
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
        Dense r = dense_mod(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    const BigRat lead = x.back();
    std::vector<ParamPoly> coeffs;
    for (const auto& c : x) coeffs.emplace_back(c / lead);
    return ParamPoly::from_coefficients(v, coeffs);
}

namespace {

using PolyVec = std::vector<ParamPoly>;

void trim(PolyVec& d) {
    while (!d.empty() && d.back().is_zero()) d.pop_back();
}

// Pseudo-remainder of a by b as polynomials in the main variable.
PolyVec pseudo_remainder(PolyVec a, const PolyVec& b) {
    const ParamPoly& lead = b.back();
    while (a.size() >= b.size() && !a.empty()) {
        const ParamPoly factor = a.back();
        const std::size_t shift = a.size() - b.size();
        for (auto& c : a) c *= lead;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

PolyVec primitive_in(const PolyVec& p) {
    const ParamPoly content = gcd(std::span<const ParamPoly>(p));
    PolyVec out;
    out.reserve(p.size());
    for (const auto& c : p) out.push_back(divide_exact(c, content));
    return out;
}

}  // namespace

ParamPoly gcd(const ParamPoly& a, const ParamPoly& b) {
    if (a.is_zero()) return b.is_zero() ? ParamPoly{} : poly_normalize(b).primitive;
    if (b.is_zero()) return poly_normalize(a).primitive;
    if (a.is_constant() || b.is_constant()) return ParamPoly(1);

    Symbol v{};
    for (std::size_t i = 0; i < kSymbolCount; ++i) {
        const auto s = static_cast<Symbol>(i);
        if (a.contains(s) || b.contains(s)) {
            v = s;
            break;
        }
    }
    PolyVec ca = a.coefficients_in(v);
    PolyVec cb = b.coefficients_in(v);
    if (ca.size() == 1) {
        cb.push_back(a);
        return gcd(std::span<const ParamPoly>(cb));
    }
    if (cb.size() == 1) {
        ca.push_back(b);
        return gcd(std::span<const ParamPoly>(ca));
    }
    const ParamPoly content_a = gcd(std::span<const ParamPoly>(ca));
    const ParamPoly content_b = gcd(std::span<const ParamPoly>(cb));
    const ParamPoly content = gcd(content_a, content_b);

    PolyVec x = primitive_in(ca);
    PolyVec y = primitive_in(cb);
    if (x.size() < y.size()) std::swap(x, y);
    PolyVec g;
    while (true) {
        PolyVec r = pseudo_remainder(x, y);
        if (r.empty()) {
            g = std::move(y);
            break;
        }
        if (r.size() == 1) {
            g = {ParamPoly(1)};
            break;
        }
        x = std::move(y);
        y = primitive_in(r);
    }
    const ParamPoly primitive_gcd = ParamPoly::from_coefficients(v, primitive_in(g));
    return poly_normalize(content * primitive_gcd).primitive;
}

ParamPoly gcd(std::span<const ParamPoly> polys) {
    ParamPoly g;
    for (const auto& p : polys) {
        if (p.is_zero()) continue;
        g = g.is_zero() ? poly_normalize(p).primitive : gcd(g, p);
        if (g.is_constant()) return ParamPoly(1);
    }
    return g;
}

// ---------------------------------------------------------------------------
// ParamFraction
// ---------------------------------------------------------------------------

ParamFraction::ParamFraction(ParamPoly num) : num_(std::move(num)), den_(1) {}

ParamFraction::ParamFraction(ParamPoly num, ParamPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw MathError("zero denominator");
}

ParamFraction ParamFraction::reduced() const {
    if (num_.is_zero()) return ParamFraction(ParamPoly{}, ParamPoly(1));
    const ParamPoly g = gcd(num_, den_);
    ParamPoly n = divide_exact(num_, g);
    const Normalized d = poly_normalize(divide_exact(den_, g));
    n *= BigRat(1) / d.content;
    return ParamFraction(std::move(n), d.primitive);
}

std::string ParamFraction::to_string() const {
    if (den_ == ParamPoly(1)) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

ParamFraction operator+(const ParamFraction& a, const ParamFraction& b) {
    if (a.den_ == b.den_) return ParamFraction(a.num_ + b.num_, a.den_);
    return ParamFraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

ParamFraction operator-(const ParamFraction& a, const ParamFraction& b) {
    if (a.den_ == b.den_) return ParamFraction(a.num_ - b.num_, a.den_);
    return ParamFraction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

ParamFraction operator*(const ParamFraction& a, const ParamFraction& b) {
    return ParamFraction(a.num_ * b.num_, a.den_ * b.den_);
}

ParamFraction operator/(const ParamFraction& a, const ParamFraction& b) {
    if (b.is_zero()) throw MathError("division by zero fraction");
    return ParamFraction(a.num_ * b.den_, a.den_ * b.num_);
}

}  // namespace fracreal
