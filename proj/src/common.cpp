#include "edgeideal/common.hpp"

#include <limits>

namespace edgeideal {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field Field::prime(std::uint32_t p) {
    if (!is_prime(p)) fail(ErrorCode::InvalidArgument, "field characteristic " + std::to_string(p) + " is not prime");
    if (p >= (1u << 31)) fail(ErrorCode::InvalidArgument, "field characteristic must be below 2^31");
    Field f;
    f.p_ = p;
    return f;
}

std::string Field::name() const {
    return is_rational() ? "q" : "gf:" + std::to_string(p_);
}

Field Field::parse(const std::string& spec) {
    if (spec == "q" || spec == "Q" || spec == "rational") return rational();
    if (spec.rfind("gf:", 0) == 0) {
        const std::string digits = spec.substr(3);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 10)
            fail(ErrorCode::InvalidArgument, "bad field spec '" + spec + "'");
        return prime(static_cast<std::uint32_t>(std::stoull(digits)));
    }
    fail(ErrorCode::InvalidArgument, "bad field spec '" + spec + "' (expected q or gf:P)");
}

std::int64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        // r * (n - k + i) / i stays integral at every step
        std::int64_t next;
        if (__builtin_mul_overflow(r, static_cast<std::int64_t>(n - k + i), &next))
            fail(ErrorCode::Arithmetic, "binomial overflow");
        r = next / i;
    }
    return r;
}

}  // namespace edgeideal
