#pragma once

#include <gmpxx.h>

#include <charconv>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

namespace stablepoly {

using Rat = mpq_class;

// Which coefficient field a polynomial lives in. Every identity and minor
// check runs in the rational domain; floating coefficients appear only on
// the root-finding side and when the CLI is fed float-domain input.
enum class Domain { rational, floating };

inline const char* domain_name(Domain d) {
    return d == Domain::rational ? "rational" : "float";
}

inline std::optional<Domain> domain_from_name(const std::string& s) {
    if (s == "rational") return Domain::rational;
    if (s == "float") return Domain::floating;
    return std::nullopt;
}

// mpq_class(num, den) does not canonicalize; always go through here.
inline Rat make_rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline int sign_of(const Rat& q) { return sgn(q); }

inline double to_double(const Rat& q) { return q.get_d(); }

// Accepts "3", "-3", "3/4". Throws on anything else.
Rat rat_from_string(const std::string& s);

// Interchange form: always "num/den", e.g. "3/1".
std::string rat_to_fraction_string(const Rat& q);

// Human form: "3" or "3/4".
std::string rat_to_display_string(const Rat& q);

// Shortest round-trip decimal via to_chars / from_chars.
std::string double_to_string(double x);
double double_from_string(const std::string& s);

// "0.5+0.866i" style, used for verdict witnesses.
std::string complex_to_string(std::complex<double> z);

// Exact complex rational a + bi. Enough arithmetic for evaluating
// polynomials at points of the open upper half plane without rounding.
struct GaussRat {
    Rat re;
    Rat im;

    GaussRat() : re(0), im(0) {}
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }

    GaussRat operator+(const GaussRat& o) const { return {re + o.re, im + o.im}; }
    GaussRat operator-(const GaussRat& o) const { return {re - o.re, im - o.im}; }
    GaussRat operator*(const GaussRat& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussRat& operator+=(const GaussRat& o) {
        re += o.re;
        im += o.im;
        return *this;
    }

    std::complex<double> approx() const { return {re.get_d(), im.get_d()}; }
};

GaussRat gauss_pow(const GaussRat& base, unsigned e);

// Coefficient of a MultiPoly: exact rational or binary float, tagged by the
// owning polynomial's domain. Mixing domains is a hard error, never a cast.
class Coeff {
  public:
    Coeff() : v_(Rat(0)) {}
    explicit Coeff(Rat q) : v_(std::move(q)) {}
    explicit Coeff(double d) : v_(d) {}

    static Coeff zero(Domain d) {
        return d == Domain::rational ? Coeff(Rat(0)) : Coeff(0.0);
    }
    static Coeff one(Domain d) {
        return d == Domain::rational ? Coeff(Rat(1)) : Coeff(1.0);
    }

    Domain domain() const {
        return std::holds_alternative<Rat>(v_) ? Domain::rational : Domain::floating;
    }

    bool is_zero() const {
        if (const Rat* q = std::get_if<Rat>(&v_)) return sgn(*q) == 0;
        return std::get<double>(v_) == 0.0;
    }

    int sign() const {
        if (const Rat* q = std::get_if<Rat>(&v_)) return sgn(*q);
        double d = std::get<double>(v_);
        return d > 0 ? 1 : d < 0 ? -1 : 0;
    }

    const Rat& rat() const {
        const Rat* q = std::get_if<Rat>(&v_);
        if (!q) throw std::invalid_argument("coefficient is not rational");
        return *q;
    }

    double flt() const {
        const double* d = std::get_if<double>(&v_);
        if (!d) throw std::invalid_argument("coefficient is not floating");
        return *d;
    }

    double approx() const {
        if (const Rat* q = std::get_if<Rat>(&v_)) return q->get_d();
        return std::get<double>(v_);
    }

    Coeff operator-() const {
        if (const Rat* q = std::get_if<Rat>(&v_)) return Coeff(Rat(-*q));
        return Coeff(-std::get<double>(v_));
    }

    Coeff& operator+=(const Coeff& o);
    Coeff& operator-=(const Coeff& o);
    Coeff& operator*=(const Coeff& o);
    Coeff& operator/=(const Coeff& o);

    friend Coeff operator+(Coeff a, const Coeff& b) { return a += b; }
    friend Coeff operator-(Coeff a, const Coeff& b) { return a -= b; }
    friend Coeff operator*(Coeff a, const Coeff& b) { return a *= b; }
    friend Coeff operator/(Coeff a, const Coeff& b) { return a /= b; }

    bool operator==(const Coeff& o) const;

    // "n/d" for rationals, shortest decimal for floats.
    std::string to_json_string() const;
    std::string display() const;

  private:
    void require_same_domain(const Coeff& o) const {
        if (domain() != o.domain())
            throw std::invalid_argument("coefficient domain mismatch");
    }

    std::variant<Rat, double> v_;
};

}  // namespace stablepoly
