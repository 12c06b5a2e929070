#include "stablepoly/numeric.hpp"

#include <array>

namespace stablepoly {

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    std::size_t slash = s.find('/');
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    auto check_digits = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    if (!check_digits(num) || !check_digits(den))
        throw std::invalid_argument("malformed rational literal: " + s);
    Rat q;
    if (mpq_set_str(q.get_mpq_t(), (num + "/" + den).c_str(), 10) != 0)
        throw std::invalid_argument("malformed rational literal: " + s);
    if (sgn(Rat(q.get_den())) == 0)
        throw std::invalid_argument("rational with zero denominator: " + s);
    q.canonicalize();
    return q;
}

std::string rat_to_fraction_string(const Rat& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string rat_to_display_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string double_to_string(double x) {
    std::array<char, 64> buf{};
    auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    return std::string(buf.data(), res.ptr);
}

double double_from_string(const std::string& s) {
    double out = 0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto res = std::from_chars(first, last, out);
    if (res.ec != std::errc() || res.ptr != last)
        throw std::invalid_argument("malformed float literal: " + s);
    return out;
}

std::string complex_to_string(std::complex<double> z) {
    std::string out = double_to_string(z.real());
    out += z.imag() < 0 ? "-" : "+";
    out += double_to_string(std::abs(z.imag()));
    out += "i";
    return out;
}

GaussRat gauss_pow(const GaussRat& base, unsigned e) {
    GaussRat acc(Rat(1), Rat(0));
    GaussRat b = base;
    while (e > 0) {
        if (e & 1u) acc = acc * b;
        b = b * b;
        e >>= 1u;
    }
    return acc;
}

Coeff& Coeff::operator+=(const Coeff& o) {
    require_same_domain(o);
    if (Rat* q = std::get_if<Rat>(&v_))
        *q += o.rat();
    else
        std::get<double>(v_) += o.flt();
    return *this;
}

Coeff& Coeff::operator-=(const Coeff& o) {
    require_same_domain(o);
    if (Rat* q = std::get_if<Rat>(&v_))
        *q -= o.rat();
    else
        std::get<double>(v_) -= o.flt();
    return *this;
}

Coeff& Coeff::operator*=(const Coeff& o) {
    require_same_domain(o);
    if (Rat* q = std::get_if<Rat>(&v_))
        *q *= o.rat();
    else
        std::get<double>(v_) *= o.flt();
    return *this;
}

Coeff& Coeff::operator/=(const Coeff& o) {
    require_same_domain(o);
    if (o.is_zero()) throw std::invalid_argument("coefficient division by zero");
    if (Rat* q = std::get_if<Rat>(&v_))
        *q /= o.rat();
    else
        std::get<double>(v_) /= o.flt();
    return *this;
}

bool Coeff::operator==(const Coeff& o) const {
    if (domain() != o.domain()) return false;
    if (const Rat* q = std::get_if<Rat>(&v_)) return *q == o.rat();
    return std::get<double>(v_) == o.flt();
}

std::string Coeff::to_json_string() const {
    if (const Rat* q = std::get_if<Rat>(&v_)) return rat_to_fraction_string(*q);
    return double_to_string(std::get<double>(v_));
}

std::string Coeff::display() const {
    if (const Rat* q = std::get_if<Rat>(&v_)) return rat_to_display_string(*q);
    return double_to_string(std::get<double>(v_));
}

}  // namespace stablepoly
