#include "hookcomm/hook_structure.hpp"

#include <numeric>
#include <random>

#include "hookcomm/errors.hpp"

namespace hookcomm {

HookType::HookType(int n, int m) : n_(n), m_(m) {
    if (n < 3 || m < 1)
        throw OutOfTheoremDomain("hook (n,1^m) needs n >= 3 and m >= 1, got n=" +
                                 std::to_string(n) + " m=" + std::to_string(m));
}

Partition HookType::partition() const {
    std::vector<int> parts(static_cast<std::size_t>(m_), 1);
    parts.push_back(n_);
    return Partition::from_values(parts);
}

std::vector<HookType> hooks_of_size(int total) {
    std::vector<HookType> out;
    for (int n = total - 1; n >= 3; --n)
        out.emplace_back(n, total - n);
    return out;
}

UBParams UBParams::zero(const HookType& hook) {
    UBParams p;
    const auto n = static_cast<std::size_t>(hook.n());
    const auto m = static_cast<std::size_t>(hook.m());
    p.h.assign(n - 1, 0);
    p.u.assign(m, 0);
    p.d.assign(m, 0);
    for (std::size_t i = 0; i < m; ++i)
        p.v.emplace_back(i, Rational(0));
    return p;
}

std::size_t ub_dimension(const HookType& hook) {
    const auto n = static_cast<std::size_t>(hook.n());
    const auto m = static_cast<std::size_t>(hook.m());
    return (n - 1) + 2 * m + m * (m - 1) / 2;
}

ExactMatrix jordan_matrix(std::span<const int> block_sizes) {
    int total = 0;
    for (int s : block_sizes) {
        if (s < 1)
            throw InvalidInput("Jordan block sizes must be positive");
        total += s;
    }
    ExactMatrix j(static_cast<std::size_t>(total), static_cast<std::size_t>(total));
    std::size_t offset = 0;
    for (int s : block_sizes) {
        for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(s); ++i)
            j(offset + i, offset + i + 1) = 1;
        offset += static_cast<std::size_t>(s);
    }
    return j;
}

ExactMatrix jordan_matrix(const Partition& p) { return jordan_matrix(p.parts()); }

std::vector<FreeCoordinate> ub_coordinates(const HookType& hook) {
    const auto n = static_cast<std::size_t>(hook.n());
    const auto m = static_cast<std::size_t>(hook.m());
    std::vector<FreeCoordinate> coords;
    // H = sum_i h_i J_n^i: h_i fills the i-th superdiagonal of the top-left block.
    for (std::size_t i = 1; i < n; ++i) {
        FreeCoordinate c;
        for (std::size_t r = 0; r + i < n; ++r)
            c.positions.emplace_back(r, r + i);
        coords.push_back(std::move(c));
    }
    // u: first row of the top-right block.
    for (std::size_t j = 0; j < m; ++j)
        coords.push_back({{{0, n + j}}});
    // d: last column of the bottom-left block.
    for (std::size_t j = 0; j < m; ++j)
        coords.push_back({{{n + j, n - 1}}});
    // V: strictly lower triangle of the bottom-right block.
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < i; ++j)
            coords.push_back({{{n + i, n + j}}});
    return coords;
}

ExactMatrix build_ub(const HookType& hook, const UBParams& params) {
    const auto n = static_cast<std::size_t>(hook.n());
    const auto m = static_cast<std::size_t>(hook.m());
    if (params.h.size() != n - 1 || params.u.size() != m || params.d.size() != m ||
        params.v.size() != m)
        throw InvalidInput("UBParams shape does not match hook " + hook.partition().to_string());
    for (std::size_t i = 0; i < m; ++i)
        if (params.v[i].size() != i)
            throw InvalidInput("UBParams.v row " + std::to_string(i) + " must have " +
                               std::to_string(i) + " entries");

    ExactMatrix a(n + m, n + m);
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t r = 0; r + i < n; ++r)
            a(r, r + i) = params.h[i - 1];
    for (std::size_t j = 0; j < m; ++j) {
        a(0, n + j) = params.u[j];
        a(n + j, n - 1) = params.d[j];
    }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < i; ++j)
            a(n + i, n + j) = params.v[i][j];
    return a;
}

bool commutes(const ExactMatrix& a, const ExactMatrix& b) {
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
        throw InvalidInput("commutes() needs square matrices of equal size");
    return a * b == b * a;
}

std::vector<FreeCoordinate> nilcommutant_coordinates(const Partition& p) {
    const auto& sizes = p.parts();
    std::vector<std::size_t> offsets(sizes.size() + 1, 0);
    for (std::size_t i = 0; i < sizes.size(); ++i)
        offsets[i + 1] = offsets[i] + static_cast<std::size_t>(sizes[i]);

    std::vector<FreeCoordinate> coords;
    for (std::size_t bi = 0; bi < sizes.size(); ++bi)
        for (std::size_t bj = 0; bj < sizes.size(); ++bj) {
            const auto a = static_cast<std::size_t>(sizes[bi]);
            const auto b = static_cast<std::size_t>(sizes[bj]);
            const std::size_t s = std::min(a, b);
            const std::size_t col_shift = b > a ? b - a : 0;
            const bool constant_allowed = a != b || bi > bj;
            for (std::size_t t = constant_allowed ? 0 : 1; t < s; ++t) {
                FreeCoordinate c;
                for (std::size_t r = 0; r + t < s; ++r)
                    c.positions.emplace_back(offsets[bi] + r, offsets[bj] + col_shift + r + t);
                coords.push_back(std::move(c));
            }
        }
    return coords;
}

ExactMatrix nilcommutant_sampler(const Partition& p, std::uint64_t seed, int bound) {
    if (p.empty())
        throw InvalidInput("nilcommutant_sampler needs a nonempty partition");
    if (bound < 1)
        throw InvalidInput("sampling bound must be positive");
    const auto size = static_cast<std::size_t>(p.weight());
    ExactMatrix a(size, size);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> dist(-bound, bound);
    for (const auto& coord : nilcommutant_coordinates(p)) {
        const long value = dist(rng);
        for (auto [r, c] : coord.positions)
            a(r, c) = value;
    }
    return a;
}

}  // namespace hookcomm
