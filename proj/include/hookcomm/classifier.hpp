#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hookcomm/exact_matrix.hpp"
#include "hookcomm/hook_structure.hpp"
#include "hookcomm/partition.hpp"

namespace hookcomm {

enum class CaseTag { a, b, c };

char case_letter(CaseTag tag);
CaseTag parse_case_tag(const std::string& text);

/// One decomposition Q = mu + ar(n', k) certifying that Q commutes with a hook.
///
///   case a: n' = n,     |mu| = m,     1 <= k <= n
///   case b: n' = n - 1, |mu| = m + 1, k <= n - 1 and k * mu_1 >= n - 1
///   case c: n' = n - 2, |mu| = m + 2, k <= n - 2 and either mu = (m + 2)
///           with k * (m + 1) > n - 1, or mu_2 >= 2 with k * mu_2 > n - 1
///
/// delta is the coefficient used by the case-b construction: 0 when
/// k * mu_1 >= n and -1 when k * mu_1 = n - 1. It is empty for cases a, c.
struct CommutationCertificate {
    CaseTag case_tag = CaseTag::a;
    int k = 1;
    Partition mu;
    std::optional<Rational> delta;

    friend bool operator==(const CommutationCertificate&, const CommutationCertificate&) = default;
};

/// Length of the almost rectangular piece for a case: n, n-1 or n-2.
int arm_length(const HookType& hook, CaseTag tag);

/// concat(mu, ar(n', k)).
Partition certified_partition(const HookType& hook, const CommutationCertificate& cert);

/// Checks the side conditions of a certificate against a hook.
bool is_valid_certificate(const HookType& hook, const CommutationCertificate& cert);

/// Every certificate showing that q commutes with the hook; empty when it
/// does not. Throws InvalidInput when |q| != n + m.
std::vector<CommutationCertificate> decide(const HookType& hook, const Partition& q);

/// Overload that validates the hook parameters first (OutOfTheoremDomain).
std::vector<CommutationCertificate> decide(int n, int m, const Partition& q);

inline constexpr int kDefaultCommutingBound = 25;

struct CommutingEntry {
    Partition partition;
    std::vector<CommutationCertificate> certificates;
};

/// All partitions of n + m commuting with the hook, in descending
/// lexicographic order. Throws ResourceLimit when n + m exceeds bound.
std::vector<CommutingEntry> enumerate_commuting(const HookType& hook,
                                                int bound = kDefaultCommutingBound);

/// Partitions of n + m not commuting with the hook, same order.
std::vector<Partition> enumerate_non_commuting(const HookType& hook,
                                               int bound = kDefaultCommutingBound);

struct Witness {
    ExactMatrix matrix;
    CommutationCertificate used;  // differs from the request after a fallback
    bool fallback = false;
    JordanReport report;
};

/// Explicit element of U_B with Jordan type certified_partition(hook, cert).
///
/// A case-c certificate with mu_1 <= 2 has no direct construction; another
/// certificate of case a or b for the same partition is used instead, or
/// WitnessUnavailable is thrown. The result is checked to commute with B, be
/// nilpotent and have the certified type; a failed check throws InternalError.
Witness witness(const HookType& hook, const CommutationCertificate& cert);

/// Generic commuting Jordan type of a hook: (n, m) when n >= m + 2, and
/// (m + 2, n - 2) otherwise.
Partition d_hook(const HookType& hook);

/// Commutation for pairs outside the hook theorem when it is already known:
/// a one-part partition (N) commutes exactly with almost rectangular ones,
/// and (2^a, 1^b) commutes with everything. Hooks with n >= 3, m >= 1 go
/// through decide. Other pairs yield nullopt.
std::optional<bool> known_commutation(const Partition& p, const Partition& q);

}  // namespace hookcomm
