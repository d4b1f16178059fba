#include "edgeideal/linalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <numeric>
#include <utility>

namespace edgeideal {

namespace mp = boost::multiprecision;

IntMatrix IntMatrix::hconcat(const IntMatrix& other) const {
    if (other.rows_ != rows_ && other.cols_ != 0 && cols_ != 0)
        fail(ErrorCode::InvalidArgument, "hconcat: row counts differ");
    const std::size_t rows = cols_ == 0 ? other.rows_ : rows_;
    IntMatrix out(rows, cols_ + other.cols_);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
        for (std::size_t c = 0; c < other.cols_; ++c) out(r, cols_ + c) = other(r, c);
    }
    return out;
}

namespace {

struct Overflow {};

struct Checked {
    std::int64_t v = 0;
};

inline Checked operator*(Checked a, Checked b) {
    Checked r;
    if (__builtin_mul_overflow(a.v, b.v, &r.v)) throw Overflow{};
    return r;
}
inline Checked operator-(Checked a, Checked b) {
    Checked r;
    if (__builtin_sub_overflow(a.v, b.v, &r.v)) throw Overflow{};
    return r;
}
inline Checked operator/(Checked a, Checked b) { return Checked{a.v / b.v}; }
inline bool is_zero(Checked a) { return a.v == 0; }
inline bool is_zero(const mp::cpp_int& a) { return a.is_zero(); }

template <typename T>
std::size_t bareiss_rank(std::vector<std::vector<T>> a, std::size_t cols) {
    const std::size_t rows = a.size();
    std::size_t r = 0;
    T prev{1};
    if constexpr (std::is_same_v<T, Checked>) prev.v = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && is_zero(a[pivot][c])) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
            a[i][c] = T{};
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

std::size_t rational_rank(const IntMatrix& m) {
    try {
        std::vector<std::vector<Checked>> a(m.rows(), std::vector<Checked>(m.cols()));
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c) a[r][c].v = m(r, c);
        return bareiss_rank(std::move(a), m.cols());
    } catch (const Overflow&) {
        std::vector<std::vector<mp::cpp_int>> a(m.rows(), std::vector<mp::cpp_int>(m.cols()));
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m(r, c);
        return bareiss_rank(std::move(a), m.cols());
    }
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t result = 1;
    base %= p;
    while (exp) {
        if (exp & 1) result = result * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return result;
}

std::uint64_t reduce(std::int64_t v, std::uint64_t p) {
    const std::int64_t r = v % static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
}

// Row-reduces in place to reduced echelon form over GF(p); returns pivot columns.
std::vector<std::size_t> rref_mod_p(std::vector<std::vector<std::uint64_t>>& a, std::size_t cols, std::uint64_t p) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t pivot = r;
        while (pivot < a.size() && a[pivot][c] == 0) ++pivot;
        if (pivot == a.size()) continue;
        std::swap(a[pivot], a[r]);
        const std::uint64_t inv = mod_pow(a[r][c], p - 2, p);
        for (std::size_t j = c; j < cols; ++j) a[r][j] = a[r][j] * inv % p;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c] == 0) continue;
            const std::uint64_t f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] = (a[i][j] + (p - f) * a[r][j]) % p;
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<std::vector<std::uint64_t>> to_mod_p(const IntMatrix& m, std::uint64_t p) {
    std::vector<std::vector<std::uint64_t>> a(m.rows(), std::vector<std::uint64_t>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = reduce(m(r, c), p);
    return a;
}

}  // namespace

std::size_t rank(const IntMatrix& m, Field field) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    if (field.is_rational()) return rational_rank(m);
    auto a = to_mod_p(m, field.characteristic());
    return rref_mod_p(a, m.cols(), field.characteristic()).size();
}

std::vector<std::vector<std::int64_t>> kernel_basis(const IntMatrix& m, Field field) {
    const std::size_t cols = m.cols();
    std::vector<std::vector<std::int64_t>> basis;
    if (cols == 0) return basis;

    if (!field.is_rational()) {
        const std::uint64_t p = field.characteristic();
        auto a = to_mod_p(m, p);
        const auto pivots = rref_mod_p(a, cols, p);
        std::vector<bool> is_pivot(cols, false);
        for (auto c : pivots) is_pivot[c] = true;
        for (std::size_t free = 0; free < cols; ++free) {
            if (is_pivot[free]) continue;
            std::vector<std::int64_t> v(cols, 0);
            v[free] = 1;
            for (std::size_t i = 0; i < pivots.size(); ++i)
                v[pivots[i]] = static_cast<std::int64_t>((p - a[i][free]) % p);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    std::vector<std::vector<mp::cpp_rational>> a(m.rows(), std::vector<mp::cpp_rational>(cols));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < cols; ++c) a[r][c] = m(r, c);
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t pivot = r;
        while (pivot < a.size() && a[pivot][c] == 0) ++pivot;
        if (pivot == a.size()) continue;
        std::swap(a[pivot], a[r]);
        const mp::cpp_rational lead = a[r][c];
        for (std::size_t j = c; j < cols; ++j) a[r][j] /= lead;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c] == 0) continue;
            const mp::cpp_rational f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<mp::cpp_rational> v(cols, 0);
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][free];
        mp::cpp_int denominators = 1;
        for (const auto& x : v) denominators = mp::lcm(denominators, mp::denominator(x));
        std::vector<mp::cpp_int> ints(cols);
        mp::cpp_int g = 0;
        for (std::size_t c = 0; c < cols; ++c) {
            ints[c] = mp::numerator(v[c]) * (denominators / mp::denominator(v[c]));
            g = mp::gcd(g, mp::abs(ints[c]));
        }
        std::vector<std::int64_t> out(cols);
        for (std::size_t c = 0; c < cols; ++c) {
            const mp::cpp_int x = ints[c] / g;
            if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
                fail(ErrorCode::Arithmetic, "kernel vector entry exceeds 64 bits");
            out[c] = static_cast<std::int64_t>(x);
        }
        basis.push_back(std::move(out));
    }
    return basis;
}

}  // namespace edgeideal
