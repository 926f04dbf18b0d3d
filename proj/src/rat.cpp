#include "dioph/rat.hpp"

#include <ostream>

namespace dioph {

Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

Rat::Rat(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw std::domain_error("Rat: zero denominator");
    canonicalize();
}

void Rat::canonicalize() {
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    Int g = gcd(num_ < 0 ? Int(-num_) : num_, den_);
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rat Rat::parse(std::string_view s) {
    auto strip = [](std::string_view v) {
        while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
        while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
        return v;
    };
    s = strip(s);
    auto parse_int = [&](std::string_view v) -> Int {
        v = strip(v);
        if (v.empty()) throw std::invalid_argument("Rat::parse: empty integer");
        size_t i = (v[0] == '+' || v[0] == '-') ? 1 : 0;
        if (i == v.size()) throw std::invalid_argument("Rat::parse: sign without digits");
        for (size_t j = i; j < v.size(); ++j)
            if (v[j] < '0' || v[j] > '9')
                throw std::invalid_argument("Rat::parse: invalid character in '" + std::string(v) + "'");
        return Int(std::string(v), 10);
    };
    size_t slash = s.find('/');
    if (slash == std::string_view::npos) return Rat(parse_int(s), Int(1));
    if (s.find('/', slash + 1) != std::string_view::npos)
        throw std::invalid_argument("Rat::parse: multiple '/'");
    return Rat(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

Rat Rat::abs() const {
    Rat r = *this;
    if (r.num_ < 0) r.num_ = -r.num_;
    return r;
}

Rat Rat::inverse() const {
    if (num_ == 0) throw std::domain_error("Rat: inverse of zero");
    Rat r;
    r.num_ = den_;
    r.den_ = num_;
    if (r.den_ < 0) {
        r.num_ = -r.num_;
        r.den_ = -r.den_;
    }
    return r;
}

Rat Rat::pow(long e) const {
    if (e == 0) return Rat(1);
    if (num_ == 0) {
        if (e < 0) throw std::domain_error("Rat: negative power of zero");
        return Rat(0);
    }
    const Rat base = e < 0 ? inverse() : *this;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Rat r;
    mpz_pow_ui(r.num_.get_mpz_t(), base.num_.get_mpz_t(), k);
    mpz_pow_ui(r.den_.get_mpz_t(), base.den_.get_mpz_t(), k);
    return r;  // powers of a canonical fraction stay canonical
}

std::optional<Int> exact_isqrt(const Int& n) {
    if (n < 0) return std::nullopt;
    if (!mpz_perfect_square_p(n.get_mpz_t())) return std::nullopt;
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool Rat::is_square() const {
    return num_ >= 0 && mpz_perfect_square_p(num_.get_mpz_t()) &&
           mpz_perfect_square_p(den_.get_mpz_t());
}

std::optional<Rat> Rat::sqrt() const {
    auto n = exact_isqrt(num_);
    if (!n) return std::nullopt;
    auto d = exact_isqrt(den_);
    if (!d) return std::nullopt;
    Rat r;
    r.num_ = *n;
    r.den_ = *d;
    return r;
}

std::optional<Rat> Rat::cbrt() const {
    auto root = [](const Int& v) -> std::optional<Int> {
        Int a = v < 0 ? Int(-v) : v;
        Int r;
        int exact = mpz_root(r.get_mpz_t(), a.get_mpz_t(), 3);
        if (!exact) return std::nullopt;
        return v < 0 ? Int(-r) : r;
    };
    auto n = root(num_);
    if (!n) return std::nullopt;
    auto d = root(den_);
    if (!d) return std::nullopt;
    Rat r;
    r.num_ = *n;
    r.den_ = *d;
    return r;
}

std::string Rat::str() const {
    std::string s = num_.get_str();
    if (den_ != 1) s += "/" + den_.get_str();
    return s;
}

Rat Rat::operator-() const {
    Rat r = *this;
    r.num_ = -r.num_;
    return r;
}

Rat& Rat::operator+=(const Rat& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    canonicalize();
    return *this;
}

Rat& Rat::operator-=(const Rat& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    canonicalize();
    return *this;
}

Rat& Rat::operator*=(const Rat& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    canonicalize();
    return *this;
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.num_ == 0) throw std::domain_error("Rat: division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    canonicalize();
    return *this;
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.num_ * b.den_, b.num_ * a.den_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace dioph
