#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "fanreg/errors.hpp"

namespace fanreg {

enum class Field { gf2, rationals };

inline const char* to_string(Field f) { return f == Field::gf2 ? "f2" : "q"; }

using IntMatrix = std::vector<std::vector<long long>>;

/// Rank over GF(2) via bitset elimination.
inline int rank_gf2(const IntMatrix& m) {
    const int rows = static_cast<int>(m.size());
    if (rows == 0) return 0;
    const int cols = static_cast<int>(m[0].size());
    if (cols == 0) return 0;
    const int words = (cols + 63) / 64;
    std::vector<std::vector<std::uint64_t>> bits(rows,
                                                 std::vector<std::uint64_t>(words, 0));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (m[i][j] & 1) bits[i][j / 64] |= std::uint64_t(1) << (j % 64);

    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        const int w = c / 64;
        const std::uint64_t mask = std::uint64_t(1) << (c % 64);
        int pivot = -1;
        for (int i = rank; i < rows; ++i)
            if (bits[i][w] & mask) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(bits[rank], bits[pivot]);
        for (int i = rank + 1; i < rows; ++i)
            if (bits[i][w] & mask)
                for (int k = w; k < words; ++k) bits[i][k] ^= bits[rank][k];
        ++rank;
    }
    return rank;
}

namespace detail {

struct bareiss_overflow {};

inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw bareiss_overflow{};
    return r;
}

inline long long checked_sub(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r)) throw bareiss_overflow{};
    return r;
}

/// Fraction-free (Bareiss) elimination over the integers; divisions are
/// exact.  Throws bareiss_overflow if an intermediate minor leaves int64.
inline int rank_bareiss_int64(IntMatrix m) {
    const int rows = static_cast<int>(m.size());
    if (rows == 0) return 0;
    const int cols = static_cast<int>(m[0].size());
    int rank = 0;
    long long prev = 1;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int i = rank; i < rows; ++i)
            if (m[i][c] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (int i = rank + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j)
                m[i][j] = checked_sub(checked_mul(m[i][j], m[rank][c]),
                                      checked_mul(m[i][c], m[rank][j])) /
                          prev;
            m[i][c] = 0;
        }
        prev = m[rank][c];
        ++rank;
    }
    return rank;
}

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, p);
        a = mulmod_u64(a, a, p);
        e >>= 1;
    }
    return r;
}

/// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                            29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                            29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

inline std::uint64_t powmod_inverse(std::uint64_t a, std::uint64_t p) {
    return powmod_u64(a, p - 2, p);
}

inline int rank_mod_p(const IntMatrix& m, std::uint64_t p) {
    const int rows = static_cast<int>(m.size());
    if (rows == 0) return 0;
    const int cols = static_cast<int>(m[0].size());
    std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            long long v = m[i][j] % static_cast<long long>(p);
            if (v < 0) v += static_cast<long long>(p);
            a[i][j] = static_cast<std::uint64_t>(v);
        }
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int i = rank; i < rows; ++i)
            if (a[i][c] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        std::uint64_t inv = powmod_inverse(a[rank][c], p);
        for (int i = rank + 1; i < rows; ++i) {
            if (a[i][c] == 0) continue;
            std::uint64_t factor = mulmod_u64(a[i][c], inv, p);
            for (int j = c; j < cols; ++j) {
                std::uint64_t sub = mulmod_u64(factor, a[rank][j], p);
                a[i][j] = (a[i][j] + p - sub) % p;
            }
        }
        ++rank;
    }
    return rank;
}

inline int bit_length_u128(unsigned __int128 v) {
    int bits = 0;
    while (v) {
        v >>= 1;
        ++bits;
    }
    return bits;
}

/// Exact rational rank via enough primes: the true rank is witnessed by a
/// nonzero minor, all minors are bounded by the Hadamard product of column
/// norms, and primes are accumulated until their product provably exceeds
/// that bound.  The maximum modular rank is then the rational rank.
inline int rank_certified_modular(const IntMatrix& m) {
    const int rows = static_cast<int>(m.size());
    if (rows == 0) return 0;
    const int cols = static_cast<int>(m[0].size());

    long long bound_bits = 2;
    for (int j = 0; j < cols; ++j) {
        unsigned __int128 sq = 0;
        for (int i = 0; i < rows; ++i) {
            unsigned __int128 v =
                m[i][j] < 0 ? static_cast<unsigned __int128>(-(m[i][j] + 1)) + 1
                            : static_cast<unsigned __int128>(m[i][j]);
            sq += v * v;
        }
        if (sq == 0) continue;
        // column norm^2 < 2^bits, so norm < 2^(bits/2 + 1)
        bound_bits += bit_length_u128(sq) / 2 + 1;
    }

    int rank = 0;
    long long bits_covered = 0;
    std::uint64_t candidate = (std::uint64_t(1) << 62) + 1;
    while (bits_covered <= bound_bits) {
        while (!is_prime_u64(candidate)) candidate += 2;
        rank = std::max(rank, rank_mod_p(m, candidate));
        bits_covered += 62;
        candidate += 2;
    }
    return rank;
}

}  // namespace detail

/// Exact rank over the rationals.  Fraction-free elimination on int64 is
/// the normal path; matrices whose minors outgrow int64 fall back to the
/// certified multi-prime method.
inline int rank_rationals(const IntMatrix& m) {
    try {
        return detail::rank_bareiss_int64(m);
    } catch (const detail::bareiss_overflow&) {
        return detail::rank_certified_modular(m);
    }
}

inline int matrix_rank(const IntMatrix& m, Field field) {
    return field == Field::gf2 ? rank_gf2(m) : rank_rationals(m);
}

}  // namespace fanreg
