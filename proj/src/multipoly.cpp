#include "stablepoly/multipoly.hpp"

#include <algorithm>
#include <numeric>

namespace stablepoly {

bool GradedLexLess::operator()(const ExpVec& a, const ExpVec& b) const {
    std::uint64_t da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
    std::uint64_t db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MultiPoly MultiPoly::constant(std::vector<std::string> vars, Coeff c) {
    MultiPoly p(std::move(vars), c.domain());
    if (!c.is_zero()) p.terms_.emplace(ExpVec(p.arity(), 0), std::move(c));
    return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> vars, std::size_t var_index,
                              Domain domain) {
    if (var_index >= vars.size())
        throw std::invalid_argument("variable index out of range");
    MultiPoly p(std::move(vars), domain);
    ExpVec e(p.arity(), 0);
    e[var_index] = 1;
    p.terms_.emplace(std::move(e), Coeff::one(domain));
    return p;
}

MultiPoly MultiPoly::monomial(std::vector<std::string> vars, ExpVec exp, Coeff c) {
    if (exp.size() != vars.size())
        throw std::invalid_argument("exponent vector length mismatch");
    MultiPoly p(std::move(vars), c.domain());
    if (!c.is_zero()) p.terms_.emplace(std::move(exp), std::move(c));
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const ExpVec& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](std::uint32_t x) { return x == 0; });
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    // Leading term of graded lex has the maximal total degree.
    const ExpVec& e = terms_.rbegin()->first;
    return static_cast<int>(std::accumulate(e.begin(), e.end(), std::uint64_t{0}));
}

int MultiPoly::degree_in(std::size_t var_index) const {
    if (var_index >= arity()) throw std::invalid_argument("variable index out of range");
    if (terms_.empty()) return -1;
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var_index]);
    return static_cast<int>(d);
}

std::size_t MultiPoly::var_index(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) throw std::invalid_argument("unknown variable: " + name);
    return static_cast<std::size_t>(it - vars_.begin());
}

void MultiPoly::add_term(const ExpVec& exp, const Coeff& c) {
    if (exp.size() != arity())
        throw std::invalid_argument("exponent vector length mismatch");
    if (c.domain() != domain_)
        throw std::invalid_argument("coefficient domain mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Coeff MultiPoly::coeff(const ExpVec& exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Coeff::zero(domain_) : it->second;
}

MultiPoly MultiPoly::coeff_of(std::size_t var_index, std::uint32_t power) const {
    if (var_index >= arity()) throw std::invalid_argument("variable index out of range");
    MultiPoly out(vars_, domain_);
    for (const auto& [e, c] : terms_) {
        if (e[var_index] != power) continue;
        ExpVec r = e;
        r[var_index] = 0;
        out.terms_.emplace(std::move(r), c);
    }
    return out;
}

MultiPoly MultiPoly::shifted(std::size_t var_index, std::uint32_t power) const {
    if (var_index >= arity()) throw std::invalid_argument("variable index out of range");
    MultiPoly out(vars_, domain_);
    for (const auto& [e, c] : terms_) {
        ExpVec r = e;
        r[var_index] += power;
        out.terms_.emplace(std::move(r), c);
    }
    return out;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out(vars_, domain_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

void MultiPoly::require_same_frame(const MultiPoly& o) const {
    if (vars_ != o.vars_) throw std::invalid_argument("variable frame mismatch");
    if (domain_ != o.domain_) throw std::invalid_argument("coefficient domain mismatch");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    require_same_frame(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    require_same_frame(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.require_same_frame(b);
    MultiPoly out(a.vars_, a.domain_);
    ExpVec e(a.arity());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MultiPoly MultiPoly::scaled(const Coeff& c) const {
    MultiPoly out(vars_, domain_);
    if (c.is_zero()) return out;
    for (const auto& [e, t] : terms_) out.terms_.emplace(e, t * c);
    return out;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    if (vars_ != o.vars_ || domain_ != o.domain_) return false;
    if (terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt) {
        if (it->first != jt->first || !(it->second == jt->second)) return false;
    }
    return true;
}

const std::pair<const ExpVec, Coeff>& MultiPoly::leading_term() const {
    if (terms_.empty()) throw std::invalid_argument("zero polynomial has no leading term");
    return *terms_.rbegin();
}

int MultiPoly::leading_sign_in(std::size_t var_index) const {
    if (terms_.empty()) return 0;
    int d = degree_in(var_index);
    MultiPoly lead = coeff_of(var_index, static_cast<std::uint32_t>(d));
    return lead.leading_term().second.sign();
}

bool MultiPoly::all_coefficients_positive() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.second.sign() > 0; });
}

bool MultiPoly::all_coefficients_same_sign() const {
    if (terms_.empty()) return true;
    int s = terms_.begin()->second.sign();
    return std::all_of(terms_.begin(), terms_.end(),
                       [s](const auto& t) { return t.second.sign() == s; });
}

bool MultiPoly::is_univariate_in(std::size_t var_index) const {
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < e.size(); ++i)
            if (i != var_index && e[i] != 0) return false;
    return true;
}

std::vector<std::size_t> MultiPoly::present_vars() const {
    std::vector<bool> seen(arity(), false);
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) seen[i] = true;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (seen[i]) out.push_back(i);
    return out;
}

std::vector<Coeff> MultiPoly::univariate_coeffs(std::size_t var_index) const {
    if (!is_univariate_in(var_index))
        throw std::invalid_argument("polynomial is not univariate in " + vars_[var_index]);
    if (terms_.empty()) return {};
    std::vector<Coeff> out(static_cast<std::size_t>(degree_in(var_index)) + 1,
                           Coeff::zero(domain_));
    for (const auto& [e, c] : terms_) out[e[var_index]] = c;
    return out;
}

MultiPoly MultiPoly::substituted(std::size_t var_index, const Rat& value) const {
    if (domain_ != Domain::rational)
        throw std::invalid_argument("exact substitution requires the rational domain");
    if (var_index >= arity()) throw std::invalid_argument("variable index out of range");
    MultiPoly out(vars_, domain_);
    for (const auto& [e, c] : terms_) {
        Rat scale(1);
        for (std::uint32_t k = 0; k < e[var_index]; ++k) scale *= value;
        ExpVec r = e;
        r[var_index] = 0;
        out.add_term(r, Coeff(Rat(c.rat() * scale)));
    }
    return out;
}

std::complex<double> MultiPoly::eval_complex(
    const std::vector<std::complex<double>>& point) const {
    if (point.size() != arity()) throw std::invalid_argument("evaluation point length mismatch");
    std::complex<double> acc = 0.0;
    for (const auto& [e, c] : terms_) {
        std::complex<double> t = c.approx();
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::uint32_t k = 0; k < e[i]; ++k) t *= point[i];
        acc += t;
    }
    return acc;
}

Rat MultiPoly::eval_rational(const std::vector<Rat>& point) const {
    if (domain_ != Domain::rational)
        throw std::invalid_argument("exact evaluation requires the rational domain");
    if (point.size() != arity()) throw std::invalid_argument("evaluation point length mismatch");
    Rat acc(0);
    for (const auto& [e, c] : terms_) {
        Rat t = c.rat();
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::uint32_t k = 0; k < e[i]; ++k) t *= point[i];
        acc += t;
    }
    return acc;
}

GaussRat MultiPoly::eval_gauss(const std::vector<GaussRat>& point) const {
    if (domain_ != Domain::rational)
        throw std::invalid_argument("exact evaluation requires the rational domain");
    if (point.size() != arity()) throw std::invalid_argument("evaluation point length mismatch");
    GaussRat acc;
    for (const auto& [e, c] : terms_) {
        GaussRat t(c.rat(), Rat(0));
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) t = t * gauss_pow(point[i], e[i]);
        acc += t;
    }
    return acc;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        int s = c.sign();
        std::string mag = (-c).display();
        if (s > 0) mag = c.display();
        if (first) {
            if (s < 0) out += "-";
            first = false;
        } else {
            out += s < 0 ? " - " : " + ";
        }
        if (mono.empty()) {
            out += mag;
        } else {
            bool unit = (domain_ == Domain::rational)
                            ? (s > 0 ? c.rat() == 1 : c.rat() == -1)
                            : (std::abs(c.approx()) == 1.0);
            if (!unit) out += mag + "*";
            out += mono;
        }
    }
    return out;
}

MultiPoly pow(const MultiPoly& p, unsigned e) {
    MultiPoly acc = MultiPoly::constant(p.vars(), Coeff::one(p.domain()));
    MultiPoly b = p;
    while (e > 0) {
        if (e & 1u) acc = acc * b;
        b = b * b;
        e >>= 1u;
    }
    return acc;
}

MultiPoly add(const MultiPoly& p, const MultiPoly& q) { return p + q; }
MultiPoly mul(const MultiPoly& p, const MultiPoly& q) { return p * q; }

MultiPoly hadamard(const MultiPoly& p, const MultiPoly& q, std::size_t var_index) {
    p.require_same_frame(q);
    int dp = p.degree_in(var_index);
    int dq = q.degree_in(var_index);
    int d = std::min(dp, dq);
    MultiPoly out = MultiPoly::zero(p.vars(), p.domain());
    for (int i = 0; i <= d; ++i) {
        auto u = static_cast<std::uint32_t>(i);
        MultiPoly prod = p.coeff_of(var_index, u) * q.coeff_of(var_index, u);
        out += prod.shifted(var_index, u);
    }
    return out;
}

MultiPoly derivative(const MultiPoly& p, std::size_t var_index, unsigned order) {
    if (var_index >= p.arity()) throw std::invalid_argument("variable index out of range");
    MultiPoly cur = p;
    for (unsigned k = 0; k < order; ++k) {
        MultiPoly next(p.vars(), p.domain());
        for (const auto& [e, c] : cur.terms()) {
            if (e[var_index] == 0) continue;
            ExpVec r = e;
            r[var_index] -= 1;
            Coeff factor = p.domain() == Domain::rational
                               ? Coeff(Rat(static_cast<long>(e[var_index])))
                               : Coeff(static_cast<double>(e[var_index]));
            next.add_term(r, c * factor);
        }
        cur = std::move(next);
    }
    return cur;
}

MultiPoly derivative(const MultiPoly& p, const std::string& var, unsigned order) {
    return derivative(p, p.var_index(var), order);
}

MultiPoly CoefficientSlice::recompose() const {
    MultiPoly acc = MultiPoly::zero(base.vars(), base.domain());
    for (std::size_t i = 0; i < parts.size(); ++i)
        acc += parts[i].shifted(var_index, static_cast<std::uint32_t>(i));
    return acc;
}

CoefficientSlice slice(const MultiPoly& p, std::size_t var_index) {
    if (var_index >= p.arity()) throw std::invalid_argument("variable index out of range");
    CoefficientSlice s;
    s.base = p;
    s.var_index = var_index;
    s.sliced_var = p.vars()[var_index];
    int d = p.is_zero() ? 0 : p.degree_in(var_index);
    for (int i = 0; i <= d; ++i)
        s.parts.push_back(p.coeff_of(var_index, static_cast<std::uint32_t>(i)));
    return s;
}

CoefficientSlice slice(const MultiPoly& p, const std::string& var) {
    return slice(p, p.var_index(var));
}

std::complex<double> evaluate(const MultiPoly& p,
                              const std::vector<std::complex<double>>& point) {
    return p.eval_complex(point);
}

}  // namespace stablepoly
