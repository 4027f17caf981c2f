#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "hookcomm/partition.hpp"

namespace hookcomm {

using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws InvalidInput.
Rational parse_rational(const std::string& text);

/// Canonical decimal form: "p" for integers, "p/q" otherwise.
std::string format_rational(const Rational& value);

/// Dense row-major matrix of exact rationals.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols);
    ExactMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static ExactMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
    static ExactMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const std::vector<Rational>& entries() const noexcept { return data_; }

    bool is_zero() const;
    bool is_integral() const;
    ExactMatrix transpose() const;

    friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Throws InvalidInput on a shape mismatch.
ExactMatrix matmul(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix matpow(const ExactMatrix& m, unsigned exponent);

/// Block-diagonal sum diag(a, b).
ExactMatrix direct_sum(const ExactMatrix& a, const ExactMatrix& b);

/// Exact rank over Q. Each row is scaled to integers and reduced with
/// fraction-free (Bareiss) elimination; an int64 pass is tried first and
/// abandoned for GMP integers on overflow.
std::size_t rank(const ExactMatrix& m);

/// Rank of m reduced modulo a prime p < 2^32. Never exceeds rank(m).
/// Throws BadModulus when p divides a denominator.
std::size_t rank_mod_p(const ExactMatrix& m, std::uint64_t p);

/// Rank sequence of the powers of a nilpotent matrix and its Jordan type.
struct JordanReport {
    std::vector<std::size_t> rank_sequence;  // r_0 = N, r_1, ..., r_q = 0
    Partition jordan_type;
    std::size_t nilpotency_index = 0;

    friend bool operator==(const JordanReport&, const JordanReport&) = default;
};

/// Builds the report from r_0..r_q. Throws InternalError when the rank
/// differences are not a valid nilpotent profile.
JordanReport report_from_ranks(std::vector<std::size_t> ranks);

/// Exact Jordan type via ranks of successive powers. Throws NotNilpotent
/// when the ranks stall above zero.
JordanReport jordan_type_of(const ExactMatrix& m);

/// Same computation over Z/p. The rank profile is pointwise at most the
/// rational one, so the result is dominated by jordan_type_of(m).
JordanReport jordan_type_mod_p(const ExactMatrix& m, std::uint64_t p);

/// Deterministic pseudo-random prime in [2^30, 2^31).
std::uint64_t random_prime_31(std::uint64_t seed);

}  // namespace hookcomm
