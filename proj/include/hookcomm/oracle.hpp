#pragma once

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "hookcomm/exact_matrix.hpp"
#include "hookcomm/hook_structure.hpp"
#include "hookcomm/partition.hpp"

namespace hookcomm {

/// Finite coordinate grid for exhaustive exploration of U_B.
struct GridSpec {
    std::vector<Rational> values{-1, 0, 1};
    std::uint64_t max_points = 2'000'000;
    /// Visit only one of p, -p when the value set is symmetric; A and -A have
    /// the same Jordan type.
    bool sign_symmetry = true;
    /// 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
};

/// |values|^dim, saturating at UINT64_MAX.
std::uint64_t grid_point_count(const HookType& hook, const GridSpec& grid);

/// Jordan types of build_ub(hook, p) over every grid point p. Throws
/// ResourceLimit when the grid exceeds max_points and InvalidInput when the
/// value set is empty or lacks 0.
std::set<Partition> grid_types(const HookType& hook, const GridSpec& grid = {});

/// Rank sequence of the powers of a small integer matrix (row-major, size
/// n x n), or nullopt when int64 arithmetic would overflow. Ranks are taken
/// modulo 2^61 - 1 and accepted only when the Hadamard bound of the power is
/// below the modulus, which makes them equal to the ranks over Q; otherwise
/// nullopt is returned as well.
std::optional<std::vector<std::size_t>> small_rank_sequence(const std::vector<std::int64_t>& a,
                                                            std::size_t n);

struct OracleReport {
    HookType hook;
    std::vector<Rational> grid;
    std::vector<Partition> attained;
    std::vector<Partition> missing_vs_theorem;
    std::vector<Partition> extra_vs_theorem;

    bool agrees() const { return missing_vs_theorem.empty() && extra_vs_theorem.empty(); }
};

/// Compares grid_types with enumerate_commuting. Partition lists are in
/// descending lexicographic order.
OracleReport oracle_report(const HookType& hook, const GridSpec& grid = {});

enum class RankMode { exact, modular, automatic };

struct GenericEstimate {
    Partition type;
    /// Distinct observed Jordan types with their frequencies, most dominant first.
    std::vector<std::pair<Partition, int>> observed;
    /// Observed types were not totally ordered by dominance.
    bool anomaly = false;
    /// The winning type was recomputed over Q and agreed.
    bool confirmed_exact = false;
};

/// Monte-Carlo estimate of the generic Jordan type D(P) of the nilpotent
/// commutant of jordan_matrix(P): the dominance maximum over `trials`
/// samples of nilcommutant_sampler.
///
/// In modular mode every sample is typed modulo a random 31-bit prime and
/// the winner is recomputed over Q; automatic mode picks modular above
/// size 24.
GenericEstimate sample_generic(const Partition& p, int trials, std::uint64_t seed, int bound = 10,
                               RankMode mode = RankMode::automatic);

}  // namespace hookcomm
