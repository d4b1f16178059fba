#ifndef EDGEIDEAL_COMMON_HPP
#define EDGEIDEAL_COMMON_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace edgeideal {

/// Hard cap on vertex count. Vertex sets are 32-bit masks and every
/// homological computation walks all 2^n subsets, so this stays desk-scale.
inline constexpr int kMaxVertices = 24;

using Mask = std::uint32_t;

enum class ErrorCode {
    InvalidArgument,
    LimitExceeded,
    Precondition,
    Arithmetic,
    Io,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

/// A set of vertex indices (0-based) of some ambient ground set.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(Mask bits) : bits_(bits) {}

    static VertexSet of(std::initializer_list<int> members) {
        VertexSet s;
        for (int v : members) s.insert(v);
        return s;
    }

    /// {0, ..., n-1}
    static constexpr VertexSet full(int n) {
        return VertexSet(n >= 32 ? ~Mask{0} : ((Mask{1} << n) - 1));
    }

    constexpr Mask bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1u; }
    constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }

    void insert(int v) { bits_ |= Mask{1} << v; }
    void erase(int v) { bits_ &= ~(Mask{1} << v); }

    /// Smallest member; undefined on the empty set.
    int first() const { return std::countr_zero(bits_); }

    std::vector<int> members() const {
        std::vector<int> out;
        for (Mask b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
        return out;
    }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
    friend constexpr bool operator==(VertexSet a, VertexSet b) = default;
    friend constexpr auto operator<=>(VertexSet a, VertexSet b) { return a.bits_ <=> b.bits_; }

private:
    Mask bits_ = 0;
};

/// Coefficient field for homology: the rationals, or GF(p) for a prime p.
class Field {
public:
    constexpr Field() = default;

    static constexpr Field rational() { return Field(); }
    static Field prime(std::uint32_t p);

    constexpr bool is_rational() const { return p_ == 0; }
    constexpr std::uint32_t characteristic() const { return p_; }

    /// "q" or "gf:P"
    std::string name() const;
    static Field parse(const std::string& spec);

    friend constexpr bool operator==(Field, Field) = default;

private:
    std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// Resource caps shared by the homology and Morse routines.
struct Limits {
    int max_vertices = kMaxVertices;
    std::size_t max_faces = std::size_t{1} << 16;
};

/// Binomial coefficient with overflow check.
std::int64_t binomial(int n, int k);

}  // namespace edgeideal

#endif
