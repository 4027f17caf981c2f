#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "hookcomm/exact_matrix.hpp"
#include "hookcomm/partition.hpp"

namespace hookcomm {

/// The hook partition (n, 1^m) with n >= 3 and m >= 1.
class HookType {
public:
    /// Throws OutOfTheoremDomain unless n >= 3 and m >= 1.
    HookType(int n, int m);

    int n() const noexcept { return n_; }
    int m() const noexcept { return m_; }
    int size() const noexcept { return n_ + m_; }

    Partition partition() const;

    friend bool operator==(const HookType&, const HookType&) = default;

private:
    int n_;
    int m_;
};

/// Hooks (n, 1^(N-n)) of total size N with n >= 3 and m >= 1, longest arm first.
std::vector<HookType> hooks_of_size(int total);

/// Coordinates of an element of the nilpotent subalgebra U_B for a hook.
///
/// h has n-1 entries (coefficients of J_n^1 .. J_n^(n-1)), u and d have m
/// entries, and v holds the strictly lower triangle of the m x m block row by
/// row: v[i] has i entries, v[i][j] sits at block position (i, j).
struct UBParams {
    std::vector<Rational> h;
    std::vector<Rational> u;
    std::vector<Rational> d;
    std::vector<std::vector<Rational>> v;

    static UBParams zero(const HookType& hook);

    friend bool operator==(const UBParams&, const UBParams&) = default;
};

/// Number of free coordinates: (n-1) + 2m + m(m-1)/2.
std::size_t ub_dimension(const HookType& hook);

/// Block-diagonal nilpotent matrix with upper-shift Jordan blocks of the
/// given sizes, in the given order (the list need not be sorted).
ExactMatrix jordan_matrix(std::span<const int> block_sizes);
ExactMatrix jordan_matrix(const Partition& p);

/// The U_B element with the given coordinates. Throws InvalidInput when the
/// parameter shapes do not match the hook.
ExactMatrix build_ub(const HookType& hook, const UBParams& params);

/// Throws InvalidInput unless both matrices are square of equal size.
bool commutes(const ExactMatrix& a, const ExactMatrix& b);

/// One free coordinate of a parameterized matrix family: the matrix entries
/// (row, col) that all carry the same coefficient.
struct FreeCoordinate {
    std::vector<std::pair<std::size_t, std::size_t>> positions;

    friend auto operator<=>(const FreeCoordinate&, const FreeCoordinate&) = default;
};

/// Free coordinates of build_ub, in parameter order h, u, d, v (row-major).
std::vector<FreeCoordinate> ub_coordinates(const HookType& hook);

/// Free coordinates of the maximal nilpotent subalgebra of the commutant of
/// jordan_matrix(P) with P sorted nonincreasing.
///
/// Block (i, j) between Jordan blocks of sizes a (rows) and b (cols) is an
/// upper-triangular Toeplitz matrix on its top-right min(a, b) square; the
/// coefficient of the main diagonal of that square is free except between
/// blocks of equal size, where it is allowed only for i > j.
std::vector<FreeCoordinate> nilcommutant_coordinates(const Partition& p);

/// Random element of the nilpotent commutant of jordan_matrix(P): every free
/// coordinate is an independent uniform integer in [-bound, bound].
/// Deterministic in (P, seed, bound).
ExactMatrix nilcommutant_sampler(const Partition& p, std::uint64_t seed, int bound = 10);

}  // namespace hookcomm
