#include "edgeideal/indpoly.hpp"

#include <nlohmann/json.hpp>

#include <functional>
#include <sstream>
#include <unordered_map>

namespace edgeideal {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) fail(ErrorCode::Arithmetic, "polynomial coefficient overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) fail(ErrorCode::Arithmetic, "polynomial coefficient overflow");
    return r;
}

const IntPolynomial kX = IntPolynomial::monomial(1, 1);

}  // namespace

IntPolynomial::IntPolynomial(std::vector<std::int64_t> coefficients) : c_(std::move(coefficients)) { normalize(); }

IntPolynomial IntPolynomial::monomial(std::int64_t c, int degree) {
    std::vector<std::int64_t> v(static_cast<std::size_t>(degree) + 1, 0);
    v.back() = c;
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::linear_power(std::int64_t a, std::int64_t b, int e) {
    return IntPolynomial({a, b}).pow(e);
}

void IntPolynomial::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::int64_t IntPolynomial::evaluate(std::int64_t x) const {
    std::int64_t acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = checked_add(checked_mul(acc, x), *it);
    return acc;
}

IntPolynomial IntPolynomial::derivative() const {
    std::vector<std::int64_t> out;
    for (std::size_t k = 1; k < c_.size(); ++k) out.push_back(checked_mul(c_[k], static_cast<std::int64_t>(k)));
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::divide_exact(std::int64_t d) const {
    if (d == 0) fail(ErrorCode::Arithmetic, "division by zero");
    std::vector<std::int64_t> out(c_.size());
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] % d != 0)
            fail(ErrorCode::Arithmetic, "inexact division: coefficient " + std::to_string(c_[k]) + " of x^" +
                                            std::to_string(k) + " by " + std::to_string(d));
        out[k] = c_[k] / d;
    }
    return IntPolynomial(std::move(out));
}

std::pair<IntPolynomial, std::int64_t> IntPolynomial::divide_by_root(std::int64_t root) const {
    if (c_.empty()) return {IntPolynomial(), 0};
    std::vector<std::int64_t> q(c_.size() - 1);
    std::int64_t carry = 0;
    for (std::size_t k = c_.size(); k-- > 0;) {
        carry = checked_add(checked_mul(carry, root), c_[k]);
        if (k > 0) q[k - 1] = carry;
    }
    return {IntPolynomial(std::move(q)), carry};
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] = checked_add(c_[k], o.c_[k]);
    normalize();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
    return *this += (-1) * o;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<std::int64_t> out(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] = checked_add(out[i + j], checked_mul(a.c_[i], b.c_[j]));
    return IntPolynomial(std::move(out));
}

IntPolynomial operator*(std::int64_t s, const IntPolynomial& p) {
    std::vector<std::int64_t> out(p.c_.size());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = checked_mul(s, p.c_[k]);
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::pow(int e) const {
    if (e < 0) fail(ErrorCode::InvalidArgument, "negative polynomial power");
    IntPolynomial result = constant(1);
    for (int k = 0; k < e; ++k) result = result * *this;
    return result;
}

std::string IntPolynomial::to_string(char var) const {
    if (c_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        const std::int64_t c = c_[k];
        if (c == 0) continue;
        if (first)
            out << (c < 0 ? "-" : "");
        else
            out << (c < 0 ? " - " : " + ");
        const std::uint64_t mag = c < 0 ? 0 - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
        if (k == 0)
            out << mag;
        else {
            if (mag != 1) out << mag << '*';
            out << var;
            if (k > 1) out << '^' << k;
        }
        first = false;
    }
    return out.str();
}

std::string IntPolynomial::to_json() const {
    return nlohmann::json(c_).dump();
}

IntPolynomial IntPolynomial::from_json(const std::string& text) {
    try {
        return IntPolynomial(nlohmann::json::parse(text).get<std::vector<std::int64_t>>());
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::InvalidArgument, std::string("polynomial json: ") + e.what());
    }
}

IntPolynomial independence_polynomial(const Graph& g) {
    std::unordered_map<Mask, IntPolynomial> memo;
    std::function<IntPolynomial(Mask)> solve = [&](Mask w) -> IntPolynomial {
        if (auto it = memo.find(w); it != memo.end()) return it->second;
        int pivot = -1;
        int best = 0;
        for (Mask b = w; b; b &= b - 1) {
            const int v = std::countr_zero(b);
            const int deg = std::popcount(g.neighborhood(v).bits() & w);
            if (deg > best) {
                best = deg;
                pivot = v;
            }
        }
        IntPolynomial result;
        if (pivot < 0) {
            result = IntPolynomial::linear_power(1, 1, std::popcount(w));
        } else {
            const Mask without = w & ~(Mask{1} << pivot);
            const Mask outside_closed = w & ~g.closed_neighborhood(pivot).bits();
            result = solve(without) + kX * solve(outside_closed);
        }
        memo.emplace(w, result);
        return result;
    };
    return solve(g.vertices().bits());
}

IntPolynomial family_poly(Family kind, int n) {
    if (kind == Family::Path && n < 0) fail(ErrorCode::InvalidArgument, "path polynomial needs n >= 0");
    if (kind == Family::Cycle && n < 3) fail(ErrorCode::InvalidArgument, "cycle polynomial needs n >= 3");
    const int paths_needed = kind == Family::Path ? n : n - 1;
    std::vector<IntPolynomial> path{IntPolynomial::constant(1), IntPolynomial({1, 1})};
    for (int m = 2; m <= paths_needed; ++m) path.push_back(path[m - 1] + kX * path[m - 2]);
    if (kind == Family::Path) return path[n];
    return path[n - 1] + kX * path[n - 3];
}

IntPolynomial closed_form_poly(Family kind, int n) {
    if (kind == Family::Path && n < 0) fail(ErrorCode::InvalidArgument, "path polynomial needs n >= 0");
    if (kind == Family::Cycle && n < 3) fail(ErrorCode::InvalidArgument, "cycle polynomial needs n >= 3");
    if (n > 60) fail(ErrorCode::LimitExceeded, "closed form limited to n <= 60");
    // (1 ± s)^n = E ± s·O with E = Σ C(n,2i) s^{2i}, O = Σ C(n,2i+1) s^{2i}, s^2 = 1 + 4x
    const IntPolynomial s_squared({1, 4});
    IntPolynomial even, odd;
    IntPolynomial power = IntPolynomial::constant(1);
    for (int i = 0; 2 * i <= n; ++i) {
        even += binomial(n, 2 * i) * power;
        if (2 * i + 1 <= n) odd += binomial(n, 2 * i + 1) * power;
        power = power * s_squared;
    }
    if (kind == Family::Cycle) {
        // (1+s)^n + (1-s)^n = 2E, over 2^n
        return (2 * even).divide_exact(std::int64_t{1} << n);
    }
    // ((1+2x+s)(1+s)^n + (s-1-2x)(1-s)^n) / s = 2((1+2x)·O + E), over 2^{n+1}
    const IntPolynomial numerator = 2 * (IntPolynomial({1, 2}) * odd + even);
    return numerator.divide_exact(std::int64_t{1} << (n + 1));
}

int multiplicity_at_minus_one(const IntPolynomial& p) {
    if (p.is_zero()) fail(ErrorCode::InvalidArgument, "multiplicity of a root of the zero polynomial");
    int m = 0;
    IntPolynomial q = p;
    while (true) {
        auto [quotient, remainder] = q.divide_by_root(-1);
        if (remainder != 0) return m;
        q = std::move(quotient);
        ++m;
    }
}

IntPolynomial h_polynomial_from(const IntPolynomial& independence, int alpha) {
    IntPolynomial h;
    for (int i = 0; i <= independence.degree(); ++i) {
        const std::int64_t faces = independence.coefficient(i);  // f_{i-1}
        if (faces == 0) continue;
        h += IntPolynomial::monomial(faces, i) * IntPolynomial::linear_power(1, -1, alpha - i);
    }
    return h;
}

IntPolynomial h_polynomial(const Graph& g) {
    const auto p = independence_polynomial(g);
    return h_polynomial_from(p, p.degree());
}

AInvariantReport a_invariant(const Graph& g) {
    const auto p = independence_polynomial(g);
    AInvariantReport report;
    report.alpha = p.degree();
    report.M = multiplicity_at_minus_one(p);
    report.a = -report.M;
    report.hdeg = h_polynomial_from(p, report.alpha).degree();
    return report;
}

HilbertSuspensionReport hilbert_full_suspension_check(const Graph& g) {
    if (g.order() < 1) fail(ErrorCode::Precondition, "Hilbert suspension check needs a nonempty graph");
    HilbertSuspensionReport r;
    r.d = independence_number(g);
    r.h_base = h_polynomial(g);
    r.h_suspension = h_polynomial(full_suspension(g));
    r.h_predicted = r.h_base + IntPolynomial::monomial(1, 1) * IntPolynomial::linear_power(1, -1, r.d - 1);
    r.identity_holds = r.h_suspension == r.h_predicted;
    r.a_base = r.h_base.degree() - r.d;
    r.a_suspension = r.h_suspension.degree() - r.d;

    bool ok = r.a_suspension == r.h_predicted.degree() - r.d;
    if (r.a_base < 0) ok = ok && r.a_suspension == 0;
    if (r.a_base == 0) {
        ok = ok && r.a_suspension <= 0;
        const std::int64_t sign = r.d % 2 == 0 ? 1 : -1;
        if (r.h_base.coefficient(r.d) != sign) ok = ok && r.a_suspension == 0;
    }
    r.a_comparison_holds = ok;
    return r;
}

MinusOneSequences path_minus_one_sequences(int m_max) {
    if (m_max < 1) fail(ErrorCode::InvalidArgument, "need m_max >= 1");
    MinusOneSequences out;
    out.a = {1, 0};
    out.b = {0, 1};
    for (int m = 2; m <= m_max; ++m) {
        out.a.push_back(out.a[m - 1] - out.a[m - 2]);
        out.b.push_back(out.b[m - 1] + out.a[m - 2] - out.b[m - 2]);
    }
    for (int m = 0; m <= m_max; ++m) {
        const auto p = family_poly(Family::Path, m);
        out.a_evaluated.push_back(p.evaluate(-1));
        out.b_evaluated.push_back(p.derivative().evaluate(-1));
    }
    out.agree = out.a == out.a_evaluated && out.b == out.b_evaluated;
    return out;
}

}  // namespace edgeideal
