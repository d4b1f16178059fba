#ifndef EDGEIDEAL_INDPOLY_HPP
#define EDGEIDEAL_INDPOLY_HPP

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "edgeideal/graph.hpp"

namespace edgeideal {

/// Univariate polynomial with exact 64-bit integer coefficients, lowest
/// degree first, no trailing zeros. Every operation is overflow-checked and
/// throws ErrorCode::Arithmetic rather than wrapping.
class IntPolynomial {
public:
    static constexpr int kZeroDegree = std::numeric_limits<int>::min();

    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<std::int64_t> coefficients);
    static IntPolynomial constant(std::int64_t c) { return IntPolynomial({c}); }
    static IntPolynomial monomial(std::int64_t c, int degree);
    /// (a + b x)^e
    static IntPolynomial linear_power(std::int64_t a, std::int64_t b, int e);

    const std::vector<std::int64_t>& coefficients() const { return c_; }
    std::int64_t coefficient(int k) const {
        return k >= 0 && static_cast<std::size_t>(k) < c_.size() ? c_[k] : 0;
    }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }
    std::int64_t leading() const { return c_.empty() ? 0 : c_.back(); }

    std::int64_t evaluate(std::int64_t x) const;
    IntPolynomial derivative() const;

    /// Exact division by an integer; throws if any coefficient is not divisible.
    IntPolynomial divide_exact(std::int64_t d) const;
    /// Synthetic division by (x - root): quotient, remainder.
    std::pair<IntPolynomial, std::int64_t> divide_by_root(std::int64_t root) const;

    IntPolynomial& operator+=(const IntPolynomial& o);
    IntPolynomial& operator-=(const IntPolynomial& o);
    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(std::int64_t s, const IntPolynomial& p);
    IntPolynomial pow(int e) const;

    /// "c0 + c1*x + c2*x^2", zero terms omitted; "0" for the zero polynomial.
    std::string to_string(char var = 'x') const;
    std::string to_json() const;
    static IntPolynomial from_json(const std::string& text);

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    void normalize();
    std::vector<std::int64_t> c_;
};

/// Deletion–contraction P_G = P_{G-v} + x P_{G-N[v]} on maximum-degree
/// pivots, memoized on the induced vertex mask; edgeless pieces give (1+x)^m.
IntPolynomial independence_polynomial(const Graph& g);

/// Path (n >= 0, P_0 = 1) and cycle (n >= 3) polynomials via the linear recurrences.
IntPolynomial family_poly(Family kind, int n);

/// The closed forms in s = sqrt(1+4x), expanded so only even powers of s
/// remain; the power-of-two normalisation is checked to divide exactly.
IntPolynomial closed_form_poly(Family kind, int n);

/// Largest M with (1+x)^M dividing p. Throws on the zero polynomial.
int multiplicity_at_minus_one(const IntPolynomial& p);

struct AInvariantReport {
    int alpha = 0;  // independence number
    int M = 0;      // multiplicity of -1 as a root of P_G
    int a = 0;      // a-invariant, -M
    int hdeg = 0;   // degree of the h-polynomial, alpha - M
};

/// h(t) = Σ_i g_i t^i (1-t)^{α-i}; the Hilbert series numerator over (1-t)^α.
IntPolynomial h_polynomial(const Graph& g);
IntPolynomial h_polynomial_from(const IntPolynomial& independence, int alpha);

/// alpha, M and a come from the independence polynomial; hdeg is read off
/// h_polynomial separately so that hdeg = alpha - M is a real check.
AInvariantReport a_invariant(const Graph& g);

struct HilbertSuspensionReport {
    int d = 0;                    // α(G) = α(Ĝ)
    IntPolynomial h_base;         // h of G
    IntPolynomial h_suspension;   // h of Ĝ, from its own face counts
    IntPolynomial h_predicted;    // h_G + t(1-t)^{d-1}
    bool identity_holds = false;
    int a_base = 0;
    int a_suspension = 0;
    /// a < 0 ⇒ â = 0; a = 0 ⇒ â ≤ 0; a = 0 and [t^d]h ≠ (-1)^d ⇒ â = 0;
    /// and â equals deg(h_predicted) - d.
    bool a_comparison_holds = false;
};

/// Requires n >= 1, so that α(G) = α(Ĝ).
HilbertSuspensionReport hilbert_full_suspension_check(const Graph& g);

struct MinusOneSequences {
    std::vector<std::int64_t> a;  // a_m = P_{P_m}(-1) from a_m = a_{m-1} - a_{m-2}
    std::vector<std::int64_t> b;  // b_m = P'_{P_m}(-1) from b_m = b_{m-1} + a_{m-2} - b_{m-2}
    std::vector<std::int64_t> a_evaluated;
    std::vector<std::int64_t> b_evaluated;
    bool agree = false;
};

/// Entries m = 0 .. m_max, by recurrence and by direct evaluation.
MinusOneSequences path_minus_one_sequences(int m_max);

}  // namespace edgeideal

#endif
