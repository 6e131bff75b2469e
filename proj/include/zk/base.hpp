#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace zk {

using i64 = std::int64_t;
using u64 = std::uint64_t;

// Exit-code classes: 1 parse/validation, 2 precondition, 3 internal.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InternalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct OverflowError : InternalError {
    using InternalError::InternalError;
};

inline i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
    return r;
}
inline i64 checked_sub(i64 a, i64 b) {
    i64 r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
    return r;
}
inline i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}
inline i64 checked_neg(i64 a) { return checked_sub(0, a); }

// Vertex sets over labels 1..64 as bitmasks.
using VSet = u64;

constexpr int kMaxLabel = 64;

inline VSet vbit(int label) { return u64{1} << (label - 1); }

inline bool vhas(VSet s, int label) { return (s >> (label - 1)) & 1u; }

inline int vcard(VSet s) { return std::popcount(s); }

inline VSet vrange(int m) { return m == 0 ? 0 : (m == 64 ? ~u64{0} : (u64{1} << m) - 1); }

inline std::vector<int> vlist(VSet s) {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(vcard(s)));
    while (s) {
        u64 low = s & (~s + 1);
        out.push_back(std::countr_zero(low) + 1);
        s ^= low;
    }
    return out;
}

inline VSet vset(const std::vector<int>& labels) {
    VSet s = 0;
    for (int v : labels) {
        if (v < 1 || v > kMaxLabel) throw ValidationError("vertex label out of range [1,64]: " + std::to_string(v));
        s |= vbit(v);
    }
    return s;
}

// Lexicographic order on the sorted vertex lists the masks encode.
inline bool lex_less(VSet a, VSet b) {
    while (a && b) {
        u64 la = a & (~a + 1);
        u64 lb = b & (~b + 1);
        if (la != lb) return la < lb;
        a ^= la;
        b ^= lb;
    }
    return b != 0;
}

inline std::string vset_to_string(VSet s) {
    std::string out = "{";
    bool first = true;
    for (int v : vlist(s)) {
        if (!first) out += ",";
        out += std::to_string(v);
        first = false;
    }
    out += "}";
    return out;
}

}  // namespace zk
