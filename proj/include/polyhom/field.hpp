#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace polyhom {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Runtime description of a coefficient field: the rationals or a prime field F_p.
struct FieldSpec {
    enum class Kind { Rationals, Prime };
    Kind kind = Kind::Rationals;
    std::uint64_t p = 0;

    static FieldSpec rationals() { return FieldSpec{Kind::Rationals, 0}; }
    static FieldSpec prime(std::uint64_t p);

    bool operator==(const FieldSpec& o) const { return kind == o.kind && p == o.p; }
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }

    /// Canonical text form: "Q" or "F<p>".
    std::string to_string() const {
        return kind == Kind::Rationals ? std::string("Q") : "F" + std::to_string(p);
    }
    static FieldSpec parse(const std::string& s);
};

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline FieldSpec FieldSpec::prime(std::uint64_t p) {
    if (!is_prime_u64(p)) throw std::invalid_argument("FieldSpec: modulus is not prime");
    if (p >= (std::uint64_t{1} << 31)) throw std::invalid_argument("FieldSpec: modulus too large");
    return FieldSpec{Kind::Prime, p};
}

inline FieldSpec FieldSpec::parse(const std::string& s) {
    if (s == "Q" || s == "q") return rationals();
    if (!s.empty() && (s[0] == 'F' || s[0] == 'f')) {
        try {
            return prime(std::stoull(s.substr(1)));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("FieldSpec: cannot parse \"" + s + "\"");
        }
    }
    throw std::invalid_argument("FieldSpec: cannot parse \"" + s + "\"");
}

/// The field ℚ with elements stored as reduced fractions of big integers.
struct Rationals {
    using Elem = BigRat;

    FieldSpec spec() const { return FieldSpec::rationals(); }

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_int(long long v) const { return Elem(v); }
    Elem from_fraction(const BigInt& num, const BigInt& den) const {
        if (den == 0) throw std::invalid_argument("Rationals: zero denominator");
        return Elem(num, den);
    }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw std::domain_error("Rationals: inverse of zero");
        return 1 / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

    bool is_zero(const Elem& a) const { return a == 0; }
    bool is_one(const Elem& a) const { return a == 1; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    std::string to_string(const Elem& a) const { return a.str(); }
};

/// A prime field F_p with canonical residues in [0, p).
class PrimeField {
public:
    using Elem = std::uint64_t;

    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (!is_prime_u64(p)) throw std::invalid_argument("PrimeField: modulus is not prime");
        if (p >= (std::uint64_t{1} << 31)) throw std::invalid_argument("PrimeField: modulus too large");
    }
    explicit PrimeField(const FieldSpec& fs) : PrimeField(fs.p) {
        if (fs.kind != FieldSpec::Kind::Prime)
            throw std::invalid_argument("PrimeField: spec is not a prime field");
    }

    std::uint64_t modulus() const { return p_; }
    FieldSpec spec() const { return FieldSpec{FieldSpec::Kind::Prime, p_}; }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p_; }
    Elem from_int(long long v) const {
        long long r = v % static_cast<long long>(p_);
        if (r < 0) r += static_cast<long long>(p_);
        return static_cast<Elem>(r);
    }
    Elem from_fraction(const BigInt& num, const BigInt& den) const {
        BigInt pn(p_);
        BigInt n = num % pn, d = den % pn;
        if (n < 0) n += pn;
        if (d < 0) d += pn;
        Elem dn = static_cast<Elem>(d);
        if (dn == 0) throw std::domain_error("PrimeField: denominator divisible by p");
        return mul(static_cast<Elem>(n), inv(dn));
    }

    Elem add(Elem a, Elem b) const { Elem s = a + b; return s >= p_ ? s - p_ : s; }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p_; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem inv(Elem a) const {
        if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
        // extended Euclid on (a, p)
        std::int64_t t = 0, nt = 1;
        std::int64_t r = static_cast<std::int64_t>(p_), nr = static_cast<std::int64_t>(a);
        while (nr != 0) {
            std::int64_t q = r / nr;
            t -= q * nt; std::swap(t, nt);
            r -= q * nr; std::swap(r, nr);
        }
        if (t < 0) t += static_cast<std::int64_t>(p_);
        return static_cast<Elem>(t);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    bool is_zero(Elem a) const { return a == 0; }
    bool is_one(Elem a) const { return a == one(); }
    bool eq(Elem a, Elem b) const { return a == b; }

    std::string to_string(Elem a) const { return std::to_string(a); }

private:
    std::uint64_t p_;
};

/// Calls fn with the field object described by fs (Rationals or PrimeField).
template <typename Fn>
decltype(auto) with_field(const FieldSpec& fs, Fn&& fn) {
    if (fs.kind == FieldSpec::Kind::Rationals) return fn(Rationals{});
    return fn(PrimeField{fs.p});
}

}  // namespace polyhom
