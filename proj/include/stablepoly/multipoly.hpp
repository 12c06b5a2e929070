#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "stablepoly/numeric.hpp"

namespace stablepoly {

using ExpVec = std::vector<std::uint32_t>;

// Graded lexicographic order on exponent vectors: compare total degree,
// then left-to-right exponents. Canonical term order for serialization,
// monomial counting, and leading-coefficient sign extraction.
struct GradedLexLess {
    bool operator()(const ExpVec& a, const ExpVec& b) const;
};

// Sparse multivariate polynomial over a tagged coefficient domain.
// Invariants: no stored zero coefficients; every exponent vector has
// length == arity; all coefficients share the domain tag.
class MultiPoly {
  public:
    using TermMap = std::map<ExpVec, Coeff, GradedLexLess>;

    MultiPoly() : domain_(Domain::rational) {}
    MultiPoly(std::vector<std::string> vars, Domain domain)
        : vars_(std::move(vars)), domain_(domain) {}

    static MultiPoly zero(std::vector<std::string> vars, Domain domain) {
        return MultiPoly(std::move(vars), domain);
    }
    static MultiPoly constant(std::vector<std::string> vars, Coeff c);
    static MultiPoly constant(std::vector<std::string> vars, const Rat& q) {
        return constant(std::move(vars), Coeff(q));
    }
    // The monomial 1*var_index.
    static MultiPoly variable(std::vector<std::string> vars, std::size_t var_index,
                              Domain domain = Domain::rational);
    static MultiPoly monomial(std::vector<std::string> vars, ExpVec exp, Coeff c);

    std::size_t arity() const { return vars_.size(); }
    const std::vector<std::string>& vars() const { return vars_; }
    Domain domain() const { return domain_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t term_count() const { return terms_.size(); }

    // -1 for the zero polynomial.
    int total_degree() const;
    int degree_in(std::size_t var_index) const;

    std::size_t var_index(const std::string& name) const;  // throws if unknown

    // Accumulates c into the term at exp, pruning zeros.
    void add_term(const ExpVec& exp, const Coeff& c);

    Coeff coeff(const ExpVec& exp) const;  // zero Coeff if absent

    // The polynomial coefficient of var_index^power: matching terms with
    // that exponent slot zeroed. Keeps the full variable frame, so results
    // compose freely with the original.
    MultiPoly coeff_of(std::size_t var_index, std::uint32_t power) const;

    // Multiplies by var_index^power (exponent shift).
    MultiPoly shifted(std::size_t var_index, std::uint32_t power) const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

    MultiPoly scaled(const Coeff& c) const;
    MultiPoly scaled(const Rat& q) const { return scaled(Coeff(q)); }

    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    // Leading (graded-lex greatest) term; polynomial must be nonzero.
    const std::pair<const ExpVec, Coeff>& leading_term() const;

    // Sign of the graded-lex leading coefficient of the coefficient
    // polynomial at the highest power of var_index; 0 for the zero poly.
    int leading_sign_in(std::size_t var_index) const;

    bool all_coefficients_positive() const;
    bool all_coefficients_same_sign() const;

    // True when at most var_index carries nonzero exponents.
    bool is_univariate_in(std::size_t var_index) const;
    // Indices of variables that actually occur.
    std::vector<std::size_t> present_vars() const;

    // Dense coefficient vector c[0..deg] in var_index; requires
    // is_univariate_in(var_index). Zero poly gives {}.
    std::vector<Coeff> univariate_coeffs(std::size_t var_index) const;

    // Exact partial substitution var_index := value (rational domain).
    MultiPoly substituted(std::size_t var_index, const Rat& value) const;

    std::complex<double> eval_complex(const std::vector<std::complex<double>>& point) const;
    Rat eval_rational(const std::vector<Rat>& point) const;
    GaussRat eval_gauss(const std::vector<GaussRat>& point) const;

    // Human-readable, ascending graded-lex: "1 + 6*x + 6*x^2 + x^3".
    std::string to_string() const;

    void require_same_frame(const MultiPoly& o) const;

  private:
    std::vector<std::string> vars_;
    Domain domain_;
    TermMap terms_;
};

MultiPoly pow(const MultiPoly& p, unsigned e);

// Spec-level operation names over the same machinery.
MultiPoly add(const MultiPoly& p, const MultiPoly& q);
MultiPoly mul(const MultiPoly& p, const MultiPoly& q);

// Coefficient-wise product along var_index (a_i * b_i). For genuinely
// univariate inputs this is the classical Hadamard product.
MultiPoly hadamard(const MultiPoly& p, const MultiPoly& q, std::size_t var_index = 0);

MultiPoly derivative(const MultiPoly& p, std::size_t var_index, unsigned order = 1);
MultiPoly derivative(const MultiPoly& p, const std::string& var, unsigned order = 1);

// f written as sum(parts[i] * var^i); parts keep the full variable frame
// with the sliced variable absent, so recomposition is exact.
struct CoefficientSlice {
    MultiPoly base;
    std::size_t var_index;
    std::string sliced_var;
    std::vector<MultiPoly> parts;

    MultiPoly recompose() const;
};

CoefficientSlice slice(const MultiPoly& p, std::size_t var_index);
CoefficientSlice slice(const MultiPoly& p, const std::string& var);

std::complex<double> evaluate(const MultiPoly& p,
                              const std::vector<std::complex<double>>& point);

}  // namespace stablepoly
