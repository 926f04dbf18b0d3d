#include "dioph/poly.hpp"

#include <algorithm>
#include <sstream>

#include "dioph/nt_util.hpp"

namespace dioph {

UniPoly::UniPoly(std::vector<Rat> coeffs, std::string var)
    : c_(std::move(coeffs)), var_(std::move(var)) {
    trim();
}

UniPoly UniPoly::constant(const Rat& c, std::string var) {
    return UniPoly({c}, std::move(var));
}

UniPoly UniPoly::of(std::initializer_list<Rat> coeffs, std::string var) {
    return UniPoly(std::vector<Rat>(coeffs), std::move(var));
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rat& UniPoly::coeff(int i) const {
    static const Rat zero;
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[static_cast<size_t>(i)];
}

const Rat& UniPoly::leading() const {
    if (c_.empty()) throw std::domain_error("UniPoly: leading coefficient of zero polynomial");
    return c_.back();
}

Rat UniPoly::eval(const Rat& x) const {
    Rat acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::derivative() const {
    std::vector<Rat> d;
    for (size_t i = 1; i < c_.size(); ++i) d.push_back(Rat(static_cast<long>(i)) * c_[i]);
    return UniPoly(std::move(d), var_);
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return UniPoly(std::move(c), a.var_);
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly({}, a.var_);
    std::vector<Rat> c(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(c), a.var_);
}

UniPoly operator*(const Rat& s, const UniPoly& a) {
    UniPoly r = a;
    for (auto& c : r.c_) c *= s;
    r.trim();
    return r;
}

Rat UniPoly::content() const {
    if (is_zero()) return Rat(0);
    Int num_gcd = 0;
    Int den_lcm = 1;
    for (const auto& c : c_) {
        if (c.is_zero()) continue;
        num_gcd = dioph::gcd(num_gcd, c.num());
        den_lcm = dioph::lcm(den_lcm, c.den());
    }
    Rat content(num_gcd, den_lcm);
    if (leading().is_negative()) content = -content;
    return content;
}

UniPoly UniPoly::primitive_part() const {
    if (is_zero()) return *this;
    return content().inverse() * *this;
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        // remainder of a by b
        UniPoly r = a;
        while (!r.is_zero() && r.degree() >= b.degree()) {
            Rat q = r.leading() / b.leading();
            int shift = r.degree() - b.degree();
            std::vector<Rat> t(static_cast<size_t>(shift) + 1);
            t[static_cast<size_t>(shift)] = q;
            r = r - UniPoly(std::move(t), r.var()) * b;
        }
        a = b;
        b = r;
    }
    if (a.is_zero()) return a;
    return a.leading().inverse() * a;  // monic
}

bool UniPoly::squarefree() const {
    if (is_zero()) return false;
    if (degree() == 0) return true;
    return UniPoly::gcd(*this, derivative()).degree() == 0;
}

std::string UniPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rat& c = coeff(i);
        if (c.is_zero()) continue;
        if (!first) os << (c.is_negative() ? " - " : " + ");
        else if (c.is_negative()) os << "-";
        Rat a = c.abs();
        if (i == 0 || !(a == Rat(1))) os << a.str();
        if (i > 0) {
            if (!(a == Rat(1))) os << "*";
            os << var_;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

std::vector<Rat> quad_roots(const UniPoly& p) {
    if (p.is_zero()) throw std::domain_error("quad_roots: zero polynomial");
    if (p.degree() > 2) throw std::invalid_argument("quad_roots: degree exceeds 2");
    if (p.degree() == 0) return {};
    if (p.degree() == 1) return {-p.coeff(0) / p.coeff(1)};
    const Rat a = p.coeff(2), b = p.coeff(1), c = p.coeff(0);
    Rat disc = b * b - Rat(4) * a * c;
    auto root = disc.sqrt();
    if (!root) return {};
    Rat two_a = Rat(2) * a;
    return {(-b + *root) / two_a, (-b - *root) / two_a};
}

std::optional<std::pair<UniPoly, UniPoly>> factor_difference(const UniPoly& d) {
    if (d.is_zero()) throw std::domain_error("factor_difference: zero polynomial");
    if (d.degree() > 2) throw std::invalid_argument("factor_difference: degree exceeds 2");
    const std::string& v = d.var();
    if (d.degree() <= 1) {
        // primitive part times content
        return std::make_pair(d.primitive_part(), UniPoly::constant(d.content(), v));
    }
    auto roots = quad_roots(d);
    if (roots.empty()) return std::nullopt;  // no rational line on the quadric
    const Rat& a = d.coeff(2);
    UniPoly f1({-a * roots[0], a}, v);
    UniPoly f2({-roots[1], Rat(1)}, v);
    return std::make_pair(std::move(f1), std::move(f2));
}

ModPoly::ModPoly(std::vector<uint64_t> coeffs, uint64_t p) : c_(std::move(coeffs)), p_(p) {
    if (p_ < 2) throw std::invalid_argument("ModPoly: modulus must be at least 2");
    for (auto& c : c_) c %= p_;
    trim();
}

void ModPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ModPoly ModPoly::reduce(const UniPoly& f, uint64_t p) {
    if (p >= (1ull << 61)) throw std::invalid_argument("ModPoly: prime exceeds 2^61");
    if (!is_prime_u64(p)) throw std::invalid_argument("ModPoly: modulus is not prime");
    std::vector<uint64_t> c;
    c.reserve(static_cast<size_t>(f.degree() + 1));
    for (int i = 0; i <= f.degree(); ++i) {
        const Rat& q = f.coeff(i);
        Int den_mod = q.den() % p;
        if (den_mod == 0) throw std::domain_error("ModPoly: prime divides a coefficient denominator");
        Int num_mod = q.num() % p;
        uint64_t n = mpz_get_ui(Int(num_mod < 0 ? num_mod + p : num_mod).get_mpz_t());
        uint64_t dnm = mpz_get_ui(den_mod.get_mpz_t());
        c.push_back(mulmod(n, invmod(dnm, p), p));
    }
    return ModPoly(std::move(c), p);
}

uint64_t ModPoly::eval(uint64_t x) const {
    uint64_t acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = (mulmod(acc, x, p_) + *it) % p_;
    return acc;
}

ModPoly ModPoly::derivative() const {
    std::vector<uint64_t> d;
    for (size_t i = 1; i < c_.size(); ++i) d.push_back(mulmod(c_[i], i % p_, p_));
    return ModPoly(std::move(d), p_);
}

ModPoly ModPoly::gcd(ModPoly a, ModPoly b) {
    while (!b.is_zero()) {
        // a mod b
        uint64_t p = b.p_;
        uint64_t lead_inv = invmod(b.c_.back(), p);
        std::vector<uint64_t> r = a.c_;
        while (r.size() >= b.c_.size() && !r.empty()) {
            uint64_t q = mulmod(r.back(), lead_inv, p);
            size_t shift = r.size() - b.c_.size();
            for (size_t i = 0; i < b.c_.size(); ++i) {
                uint64_t sub = mulmod(q, b.c_[i], p);
                uint64_t& dst = r[shift + i];
                dst = (dst + p - sub) % p;
            }
            while (!r.empty() && r.back() == 0) r.pop_back();
        }
        a = b;
        b = ModPoly(std::move(r), p);
    }
    return a;
}

bool squarefree_mod_p(const UniPoly& f, uint64_t p) {
    if (!is_prime_u64(p)) throw std::invalid_argument("squarefree_mod_p: modulus is not prime");
    if (p >= (1ull << 61)) throw std::invalid_argument("squarefree_mod_p: prime exceeds 2^61");
    if (f.is_zero()) throw std::domain_error("squarefree_mod_p: zero polynomial");
    ModPoly fb = ModPoly::reduce(f, p);
    if (fb.is_zero()) return false;
    if (fb.degree() == 0) return true;
    ModPoly g = ModPoly::gcd(fb, fb.derivative());
    return g.degree() == 0;
}

MultiPoly::MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

MultiPoly MultiPoly::variable(const std::vector<std::string>& vars, const std::string& name) {
    MultiPoly m(vars);
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end()) throw std::invalid_argument("MultiPoly: unknown variable " + name);
    std::vector<int> e(vars.size(), 0);
    e[static_cast<size_t>(it - vars.begin())] = 1;
    m.add_term(std::move(e), Rat(1));
    return m;
}

MultiPoly MultiPoly::constant(const std::vector<std::string>& vars, const Rat& c) {
    MultiPoly m(vars);
    m.add_term(std::vector<int>(vars.size(), 0), c);
    return m;
}

MultiPoly& MultiPoly::add_term(std::vector<int> exps, const Rat& coeff) {
    if (exps.size() != vars_.size())
        throw std::invalid_argument("MultiPoly: exponent vector length mismatch");
    if (coeff.is_zero()) return *this;
    auto [it, inserted] = terms_.emplace(std::move(exps), coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
}

Rat MultiPoly::eval(const std::map<std::string, Rat>& values) const {
    std::vector<const Rat*> vals(vars_.size(), nullptr);
    for (size_t i = 0; i < vars_.size(); ++i) {
        auto it = values.find(vars_[i]);
        if (it != values.end()) vals[i] = &it->second;
    }
    Rat acc;
    for (const auto& [exps, coeff] : terms_) {
        Rat term = coeff;
        for (size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0) continue;
            if (!vals[i]) throw std::invalid_argument("MultiPoly: missing coordinate " + vars_[i]);
            term *= vals[i]->pow(exps[i]);
        }
        acc += term;
    }
    return acc;
}

MultiPoly MultiPoly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("MultiPoly: negative exponent");
    MultiPoly r = MultiPoly::constant(vars_, Rat(1));
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    if (a.vars_ != b.vars_) throw std::invalid_argument("MultiPoly: variable lists differ");
    MultiPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.vars_ != b.vars_) throw std::invalid_argument("MultiPoly: variable lists differ");
    MultiPoly r(a.vars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            std::vector<int> e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(std::move(e), ca * cb);
        }
    }
    return r;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [exps, coeff] : terms_) {
        if (!first) os << (coeff.is_negative() ? " - " : " + ");
        else if (coeff.is_negative()) os << "-";
        Rat a = coeff.abs();
        bool has_var = std::any_of(exps.begin(), exps.end(), [](int e) { return e != 0; });
        if (!has_var || !(a == Rat(1))) os << a.str();
        bool printed = !has_var || !(a == Rat(1));
        for (size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0) continue;
            if (printed) os << "*";
            os << vars_[i];
            if (exps[i] > 1) os << "^" << exps[i];
            printed = true;
        }
        first = false;
    }
    return os.str();
}

}  // namespace dioph
