#include "hookcomm/oracle.hpp"

#include <algorithm>
#include <map>
#include <thread>

#include "hookcomm/classifier.hpp"
#include "hookcomm/errors.hpp"

namespace hookcomm {

namespace {

constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61U) - 1;

std::uint64_t mul_mod61(std::uint64_t a, std::uint64_t b) {
    const unsigned __int128 x = static_cast<unsigned __int128>(a) * b;
    std::uint64_t r = (static_cast<std::uint64_t>(x) & kMersenne61) +
                      static_cast<std::uint64_t>(x >> 61U);
    r = (r & kMersenne61) + (r >> 61U);
    return r >= kMersenne61 ? r - kMersenne61 : r;
}

std::uint64_t to_mod61(std::int64_t v) {
    return v >= 0 ? static_cast<std::uint64_t>(v)
                  : kMersenne61 - static_cast<std::uint64_t>(-v);
}

// Rank over Q of a small integer matrix, certified through the Hadamard
// bound: every minor is smaller than the modulus, so none vanishes mod p
// unless it vanishes over Z.
std::optional<std::size_t> certified_rank(const std::vector<std::int64_t>& a, std::size_t n,
                                          std::vector<std::uint64_t>& work) {
    constexpr double kLimit = 0.25 * static_cast<double>(kMersenne61) *
                              static_cast<double>(kMersenne61);
    double bound_sq = 1.0;
    work.clear();
    std::size_t rows = 0;
    for (std::size_t i = 0; i < n; ++i) {
        double norm_sq = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const auto v = static_cast<double>(a[i * n + j]);
            norm_sq += v * v;
        }
        if (norm_sq == 0.0)
            continue;
        bound_sq *= norm_sq;
        if (bound_sq >= kLimit)
            return std::nullopt;
        for (std::size_t j = 0; j < n; ++j)
            work.push_back(to_mod61(a[i * n + j]));
        ++rows;
    }
    auto at = [&](std::size_t r, std::size_t c) -> std::uint64_t& { return work[r * n + c]; };
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && at(piv, col) == 0)
            ++piv;
        if (piv == rows)
            continue;
        if (piv != rank)
            for (std::size_t j = col; j < n; ++j)
                std::swap(at(piv, j), at(rank, j));
        const std::uint64_t p = at(rank, col);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            const std::uint64_t f = at(i, col);
            if (f == 0)
                continue;
            const std::uint64_t neg_f = kMersenne61 - f;
            for (std::size_t j = col + 1; j < n; ++j) {
                std::uint64_t x = mul_mod61(p, at(i, j)) + mul_mod61(neg_f, at(rank, j));
                at(i, j) = x >= kMersenne61 ? x - kMersenne61 : x;
            }
            at(i, col) = 0;
        }
        ++rank;
    }
    return rank;
}

bool multiply_checked(const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& y,
                      std::vector<std::int64_t>& out, std::size_t n) {
    std::fill(out.begin(), out.end(), 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const std::int64_t a = x[i * n + k];
            if (a == 0)
                continue;
            for (std::size_t j = 0; j < n; ++j) {
                std::int64_t t = 0;
                if (__builtin_mul_overflow(a, y[k * n + j], &t) ||
                    __builtin_add_overflow(out[i * n + j], t, &out[i * n + j]))
                    return false;
            }
        }
    return true;
}

}  // namespace

std::optional<std::vector<std::size_t>> small_rank_sequence(const std::vector<std::int64_t>& a,
                                                            std::size_t n) {
    std::vector<std::size_t> ranks{n};
    std::vector<std::int64_t> power = a;
    std::vector<std::int64_t> next(n * n);
    std::vector<std::uint64_t> work;
    work.reserve(n * n);
    for (;;) {
        const bool zero = std::all_of(power.begin(), power.end(), [](auto v) { return v == 0; });
        if (zero) {
            ranks.push_back(0);
            return ranks;
        }
        auto r = certified_rank(power, n, work);
        if (!r)
            return std::nullopt;
        if (*r == ranks.back())
            throw NotNilpotent("rank of powers stalls at " + std::to_string(*r));
        ranks.push_back(*r);
        if (!multiply_checked(power, a, next, n))
            return std::nullopt;
        power.swap(next);
    }
}

std::uint64_t grid_point_count(const HookType& hook, const GridSpec& grid) {
    const std::size_t dim = ub_dimension(hook);
    const std::uint64_t base = grid.values.size();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < dim; ++i) {
        if (base != 0 && total > UINT64_MAX / base)
            return UINT64_MAX;
        total *= base;
    }
    return total;
}

namespace {

struct GridJob {
    const std::vector<FreeCoordinate>* coords;
    const std::vector<std::int64_t>* values;
    std::size_t size;
    bool skip_negated;
    std::uint64_t begin;
    std::uint64_t end;
    std::set<std::vector<std::size_t>> found;
};

std::vector<std::size_t> exact_ranks(const std::vector<std::int64_t>& a, std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = static_cast<long>(a[i * n + j]);
    return jordan_type_of(m).rank_sequence;
}

void run_grid_job(GridJob& job) {
    const auto& coords = *job.coords;
    const auto& values = *job.values;
    const std::size_t dim = coords.size();
    const std::size_t n = job.size;
    const std::uint64_t base = values.size();

    std::vector<std::size_t> digit(dim, 0);
    std::uint64_t rest = job.begin;
    for (std::size_t c = 0; c < dim; ++c) {
        digit[c] = static_cast<std::size_t>(rest % base);
        rest /= base;
    }
    std::vector<std::int64_t> a(n * n, 0);
    auto write = [&](std::size_t c) {
        const std::int64_t v = values[digit[c]];
        for (auto [r, col] : coords[c].positions)
            a[r * n + col] = v;
    };
    for (std::size_t c = 0; c < dim; ++c)
        write(c);

    for (std::uint64_t index = job.begin; index < job.end; ++index) {
        bool visit = true;
        if (job.skip_negated) {
            for (std::size_t c = 0; c < dim; ++c) {
                const std::int64_t v = values[digit[c]];
                if (v != 0) {
                    visit = v > 0;
                    break;
                }
            }
        }
        if (visit) {
            auto ranks = small_rank_sequence(a, n);
            job.found.insert(ranks ? std::move(*ranks) : exact_ranks(a, n));
        }
        for (std::size_t c = 0; c < dim; ++c) {
            if (++digit[c] < base) {
                write(c);
                break;
            }
            digit[c] = 0;
            write(c);
        }
    }
}

}  // namespace

std::set<Partition> grid_types(const HookType& hook, const GridSpec& grid) {
    if (grid.values.empty())
        throw InvalidInput("grid values must be nonempty");
    std::vector<Rational> distinct = grid.values;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (!std::binary_search(distinct.begin(), distinct.end(), Rational(0)))
        throw InvalidInput("grid values must contain 0");

    GridSpec effective = grid;
    effective.values = distinct;
    const std::uint64_t total = grid_point_count(hook, effective);
    if (total > grid.max_points)
        throw ResourceLimit("grid of " + std::to_string(total) + " points for hook " +
                            hook.partition().to_string() + " exceeds max_points " +
                            std::to_string(grid.max_points));

    // Scaling every coordinate by a common nonzero factor leaves Jordan types
    // unchanged, so rational grids are mapped to integers.
    mpz_class scale = 1;
    for (const auto& v : distinct)
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v.get_den_mpz_t());
    std::vector<std::int64_t> values;
    bool symmetric = true;
    for (const auto& v : distinct) {
        const mpz_class scaled = v.get_num() * (scale / v.get_den());
        if (!scaled.fits_slong_p())
            throw InvalidInput("grid value " + format_rational(v) + " is too large");
        values.push_back(scaled.get_si());
    }
    for (auto v : values)
        symmetric = symmetric && std::binary_search(values.begin(), values.end(), -v);

    const auto coords = ub_coordinates(hook);
    unsigned threads = grid.threads != 0 ? grid.threads : std::thread::hardware_concurrency();
    threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(
                                                           std::max<std::uint64_t>(1, total / 4096))));

    std::vector<GridJob> jobs;
    for (unsigned t = 0; t < threads; ++t)
        jobs.push_back({&coords, &values, static_cast<std::size_t>(hook.size()),
                        grid.sign_symmetry && symmetric, total * t / threads,
                        total * (t + 1) / threads, {}});
    if (threads == 1) {
        run_grid_job(jobs.front());
    } else {
        std::vector<std::thread> workers;
        for (auto& job : jobs)
            workers.emplace_back([&job] { run_grid_job(job); });
        for (auto& w : workers)
            w.join();
    }

    std::set<std::vector<std::size_t>> merged;
    for (auto& job : jobs)
        merged.merge(job.found);
    std::set<Partition> out;
    for (const auto& ranks : merged)
        out.insert(report_from_ranks(ranks).jordan_type);
    return out;
}

OracleReport oracle_report(const HookType& hook, const GridSpec& grid) {
    const auto attained = grid_types(hook, grid);
    std::set<Partition> theorem;
    for (auto& entry : enumerate_commuting(hook))
        theorem.insert(entry.partition);

    OracleReport report{hook, grid.values, {}, {}, {}};
    report.attained.assign(attained.rbegin(), attained.rend());
    for (auto it = theorem.rbegin(); it != theorem.rend(); ++it)
        if (!attained.contains(*it))
            report.missing_vs_theorem.push_back(*it);
    for (auto it = attained.rbegin(); it != attained.rend(); ++it)
        if (!theorem.contains(*it))
            report.extra_vs_theorem.push_back(*it);
    return report;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30U)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27U)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31U);
}

struct DominanceChoice {
    Partition winner;
    bool anomaly = false;
};

// The dominance maximum of the observed types. Without one, the most
// frequent type is taken and the greatest type above it wins.
DominanceChoice dominance_maximum(const std::map<Partition, int>& counts) {
    for (const auto& [candidate, _] : counts) {
        bool top = std::all_of(counts.begin(), counts.end(),
                               [&](const auto& kv) { return dominates(candidate, kv.first); });
        if (top)
            return {candidate, false};
    }
    auto frequent = std::max_element(counts.begin(), counts.end(), [](const auto& x, const auto& y) {
        return x.second < y.second;
    });
    std::vector<Partition> above;
    for (const auto& [type, _] : counts)
        if (dominates(type, frequent->first))
            above.push_back(type);
    // Pick a maximal element of the chain above the frequent type, preferring
    // the one dominating most of the others.
    const Partition* best = nullptr;
    int best_score = -1;
    for (const auto& x : above) {
        int score = 0;
        for (const auto& y : above)
            score += dominates(x, y) ? 1 : 0;
        if (score > best_score) {
            best_score = score;
            best = &x;
        }
    }
    return {*best, true};
}

}  // namespace

GenericEstimate sample_generic(const Partition& p, int trials, std::uint64_t seed, int bound,
                               RankMode mode) {
    if (trials < 1)
        throw InvalidInput("sample_generic needs at least one trial");
    if (p.empty())
        throw InvalidInput("sample_generic needs a nonempty partition");
    const bool modular = mode == RankMode::modular ||
                         (mode == RankMode::automatic && p.weight() > 24);
    const std::uint64_t prime = random_prime_31(splitmix64(seed ^ 0x5eedULL));

    std::vector<ExactMatrix> samples;
    std::vector<Partition> types;
    for (int t = 0; t < trials; ++t) {
        samples.push_back(
            nilcommutant_sampler(p, splitmix64(seed + static_cast<std::uint64_t>(t)), bound));
        types.push_back(modular ? jordan_type_mod_p(samples.back(), prime).jordan_type
                                : jordan_type_of(samples.back()).jordan_type);
    }

    auto tally = [&] {
        std::map<Partition, int> counts;
        for (const auto& t : types)
            ++counts[t];
        return counts;
    };
    auto counts = tally();
    auto choice = dominance_maximum(counts);
    bool confirmed = !modular;
    if (modular) {
        const auto winner_index = static_cast<std::size_t>(
            std::find(types.begin(), types.end(), choice.winner) - types.begin());
        const Partition exact = jordan_type_of(samples[winner_index]).jordan_type;
        if (exact == choice.winner) {
            confirmed = true;
        } else {
            // The prime collapsed a rank somewhere; redo every trial over Q.
            for (std::size_t t = 0; t < samples.size(); ++t)
                types[t] = jordan_type_of(samples[t]).jordan_type;
            counts = tally();
            choice = dominance_maximum(counts);
            confirmed = true;
        }
    }

    GenericEstimate estimate;
    estimate.type = choice.winner;
    estimate.anomaly = choice.anomaly;
    estimate.confirmed_exact = confirmed;
    for (auto it = counts.rbegin(); it != counts.rend(); ++it)
        estimate.observed.emplace_back(it->first, it->second);
    return estimate;
}

}  // namespace hookcomm
