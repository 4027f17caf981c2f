#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hookcomm {

/// An integer partition: positive parts stored in nonincreasing order.
///
/// The empty partition is a legal value of weight 0. Instances are immutable
/// after construction; every constructor normalizes its input.
class Partition {
public:
    Partition() = default;

    /// Sorts the values nonincreasing and drops zeros. Throws InvalidInput on
    /// a negative value.
    static Partition from_values(std::span<const int> values);
    static Partition from_values(std::initializer_list<int> values);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int weight() const noexcept { return weight_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }

    int largest() const { return parts_.empty() ? 0 : parts_.front(); }
    int smallest() const { return parts_.empty() ? 0 : parts_.back(); }

    /// Part i (0-based), or 0 past the end. Lets callers read mu_2 = 0 for a
    /// one-part partition.
    int part(std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

    Partition conjugate() const;

    /// Compact exponent notation, e.g. "(3,1^3)"; "()" for the empty partition.
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

Partition make_partition(std::span<const int> values);
Partition make_partition(std::initializer_list<int> values);

/// Jordan type of the k-th power of one n x n Jordan block: k parts of
/// sizes ceil(n/k) and floor(n/k). Requires 1 <= k <= n.
Partition ar(int n, int k);

bool is_almost_rectangular(const Partition& p);

/// Consecutive parts differ by at least 2.
bool is_rr(const Partition& p);

/// All parts are at most 2, i.e. p = (2^a, 1^b).
bool is_universally_commuting(const Partition& p);

/// Multiset difference p \ s, or nullopt when s is not contained in p.
std::optional<Partition> subtract(const Partition& p, const Partition& s);

/// Multiset union.
Partition concat(const Partition& p, const Partition& s);

/// Dominance order. Throws InvalidInput when the weights differ.
bool dominates(const Partition& p, const Partition& q);

inline constexpr int kDefaultEnumerationBound = 40;

/// All partitions of n in descending lexicographic order. Throws
/// ResourceLimit when n exceeds bound.
std::vector<Partition> enumerate_partitions(int n, int bound = kDefaultEnumerationBound);

}  // namespace hookcomm
