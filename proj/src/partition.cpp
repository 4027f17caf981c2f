#include "hookcomm/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "hookcomm/errors.hpp"

namespace hookcomm {

Partition Partition::from_values(std::span<const int> values) {
    Partition p;
    p.parts_.reserve(values.size());
    for (int v : values) {
        if (v < 0)
            throw InvalidInput("partition part must be nonnegative, got " + std::to_string(v));
        if (v > 0)
            p.parts_.push_back(v);
    }
    std::sort(p.parts_.begin(), p.parts_.end(), std::greater<>());
    p.weight_ = std::accumulate(p.parts_.begin(), p.parts_.end(), 0);
    return p;
}

Partition Partition::from_values(std::initializer_list<int> values) {
    return from_values(std::span<const int>(values.begin(), values.size()));
}

Partition Partition::conjugate() const {
    std::vector<int> out(static_cast<std::size_t>(largest()), 0);
    for (int v : parts_)
        for (int i = 0; i < v; ++i)
            ++out[static_cast<std::size_t>(i)];
    return from_values(out);
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '(';
    bool first = true;
    for (std::size_t i = 0; i < parts_.size();) {
        std::size_t j = i;
        while (j < parts_.size() && parts_[j] == parts_[i])
            ++j;
        if (!first)
            os << ',';
        first = false;
        os << parts_[i];
        if (j - i > 1)
            os << '^' << (j - i);
        i = j;
    }
    os << ')';
    return os.str();
}

Partition make_partition(std::span<const int> values) { return Partition::from_values(values); }

Partition make_partition(std::initializer_list<int> values) {
    return Partition::from_values(values);
}

Partition ar(int n, int k) {
    if (n < 1 || k < 1 || k > n)
        throw InvalidInput("ar(n,k) needs 1 <= k <= n, got n=" + std::to_string(n) +
                           " k=" + std::to_string(k));
    const int q = n / k;
    const int r = n % k;
    std::vector<int> parts(static_cast<std::size_t>(k), q);
    std::fill_n(parts.begin(), r, q + 1);
    return Partition::from_values(parts);
}

bool is_almost_rectangular(const Partition& p) { return p.largest() - p.smallest() <= 1; }

bool is_rr(const Partition& p) {
    const auto& v = p.parts();
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i] - v[i + 1] < 2)
            return false;
    return true;
}

bool is_universally_commuting(const Partition& p) { return p.largest() <= 2; }

std::optional<Partition> subtract(const Partition& p, const Partition& s) {
    // Both sides are sorted nonincreasing, so a single merge pass suffices.
    const auto& a = p.parts();
    const auto& b = s.parts();
    std::vector<int> rest;
    rest.reserve(a.size());
    std::size_t j = 0;
    for (int v : a) {
        if (j < b.size() && b[j] == v)
            ++j;
        else if (j < b.size() && b[j] > v)
            return std::nullopt;
        else
            rest.push_back(v);
    }
    if (j != b.size())
        return std::nullopt;
    return Partition::from_values(rest);
}

Partition concat(const Partition& p, const Partition& s) {
    std::vector<int> all = p.parts();
    all.insert(all.end(), s.parts().begin(), s.parts().end());
    return Partition::from_values(all);
}

bool dominates(const Partition& p, const Partition& q) {
    if (p.weight() != q.weight())
        throw InvalidInput("dominance needs equal weights: " + p.to_string() + " vs " +
                           q.to_string());
    int sp = 0;
    int sq = 0;
    const std::size_t len = std::max(p.length(), q.length());
    for (std::size_t i = 0; i < len; ++i) {
        sp += p.part(i);
        sq += q.part(i);
        if (sp < sq)
            return false;
    }
    return true;
}

namespace {

void enumerate_rec(int remaining, int max_part, std::vector<int>& current,
                   std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition::from_values(current));
        return;
    }
    for (int v = std::min(remaining, max_part); v >= 1; --v) {
        current.push_back(v);
        enumerate_rec(remaining - v, v, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n, int bound) {
    if (n < 0)
        throw InvalidInput("cannot enumerate partitions of a negative number");
    if (n > bound)
        throw ResourceLimit("partition enumeration of " + std::to_string(n) +
                            " exceeds bound " + std::to_string(bound));
    std::vector<Partition> out;
    std::vector<int> current;
    enumerate_rec(n, n, current, out);
    return out;
}

}  // namespace hookcomm
