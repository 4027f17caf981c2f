#include "hookcomm/classifier.hpp"

#include <algorithm>

#include "hookcomm/errors.hpp"

namespace hookcomm {

char case_letter(CaseTag tag) {
    switch (tag) {
        case CaseTag::a: return 'a';
        case CaseTag::b: return 'b';
        case CaseTag::c: return 'c';
    }
    return '?';
}

CaseTag parse_case_tag(const std::string& text) {
    if (text == "a")
        return CaseTag::a;
    if (text == "b")
        return CaseTag::b;
    if (text == "c")
        return CaseTag::c;
    throw InvalidInput("unknown case tag \"" + text + "\"");
}

int arm_length(const HookType& hook, CaseTag tag) {
    switch (tag) {
        case CaseTag::a: return hook.n();
        case CaseTag::b: return hook.n() - 1;
        case CaseTag::c: return hook.n() - 2;
    }
    return hook.n();
}

Partition certified_partition(const HookType& hook, const CommutationCertificate& cert) {
    return concat(cert.mu, ar(arm_length(hook, cert.case_tag), cert.k));
}

namespace {

// Side conditions on (k, mu) once the arm length and weight of mu are known
// to match; all comparisons are integer cross-multiplications.
bool side_conditions_hold(const HookType& hook, CaseTag tag, int k, const Partition& mu) {
    const int n = hook.n();
    const int m = hook.m();
    switch (tag) {
        case CaseTag::a:
            return 1 <= k && k <= n;
        case CaseTag::b:
            return 1 <= k && k <= n - 1 && k * mu.part(0) >= n - 1;
        case CaseTag::c:
            if (k < 1 || k > n - 2)
                return false;
            if (mu.length() == 1)
                return k * (m + 1) > n - 1;
            return mu.part(1) >= 2 && k * mu.part(1) > n - 1;
    }
    return false;
}

int mu_weight(const HookType& hook, CaseTag tag) {
    return hook.m() + (hook.n() - arm_length(hook, tag));
}

std::optional<Rational> delta_for(const HookType& hook, CaseTag tag, int k, const Partition& mu) {
    if (tag != CaseTag::b)
        return std::nullopt;
    return Rational(k * mu.part(0) >= hook.n() ? 0 : -1);
}

}  // namespace

bool is_valid_certificate(const HookType& hook, const CommutationCertificate& cert) {
    if (cert.k < 1 || cert.k > arm_length(hook, cert.case_tag))
        return false;
    if (cert.mu.weight() != mu_weight(hook, cert.case_tag))
        return false;
    if (!side_conditions_hold(hook, cert.case_tag, cert.k, cert.mu))
        return false;
    return cert.delta == delta_for(hook, cert.case_tag, cert.k, cert.mu);
}

std::vector<CommutationCertificate> decide(const HookType& hook, const Partition& q) {
    if (q.weight() != hook.size())
        throw InvalidInput("partition " + q.to_string() + " has weight " +
                           std::to_string(q.weight()) + ", expected " +
                           std::to_string(hook.size()));
    std::vector<CommutationCertificate> out;
    for (CaseTag tag : {CaseTag::a, CaseTag::b, CaseTag::c}) {
        const int arm = arm_length(hook, tag);
        for (int k = 1; k <= arm; ++k) {
            auto mu = subtract(q, ar(arm, k));
            if (!mu || !side_conditions_hold(hook, tag, k, *mu))
                continue;
            out.push_back({tag, k, *mu, delta_for(hook, tag, k, *mu)});
        }
    }
    return out;
}

std::vector<CommutationCertificate> decide(int n, int m, const Partition& q) {
    return decide(HookType(n, m), q);
}

std::vector<CommutingEntry> enumerate_commuting(const HookType& hook, int bound) {
    if (hook.size() > bound)
        throw ResourceLimit("hook size " + std::to_string(hook.size()) +
                            " exceeds enumeration bound " + std::to_string(bound));
    std::vector<CommutingEntry> out;
    for (auto& q : enumerate_partitions(hook.size(), std::max(bound, kDefaultEnumerationBound))) {
        auto certs = decide(hook, q);
        if (!certs.empty())
            out.push_back({std::move(q), std::move(certs)});
    }
    return out;
}

std::vector<Partition> enumerate_non_commuting(const HookType& hook, int bound) {
    if (hook.size() > bound)
        throw ResourceLimit("hook size " + std::to_string(hook.size()) +
                            " exceeds enumeration bound " + std::to_string(bound));
    std::vector<Partition> out;
    for (auto& q : enumerate_partitions(hook.size(), std::max(bound, kDefaultEnumerationBound)))
        if (decide(hook, q).empty())
            out.push_back(std::move(q));
    return out;
}

namespace {

// Lower shift blocks J_sizes^T written into the strictly lower V slot.
void set_v_transposed_jordan(UBParams& params, const std::vector<int>& sizes) {
    std::size_t offset = 0;
    for (int s : sizes) {
        for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(s); ++i)
            params.v[offset + i + 1][offset + i] = 1;
        offset += static_cast<std::size_t>(s);
    }
}

void set_h_power(UBParams& params, int k) {
    if (static_cast<std::size_t>(k) <= params.h.size())
        params.h[static_cast<std::size_t>(k - 1)] = 1;
}

ExactMatrix construct(const HookType& hook, const CommutationCertificate& cert) {
    const int m = hook.m();
    const Partition& mu = cert.mu;
    UBParams params = UBParams::zero(hook);
    switch (cert.case_tag) {
        case CaseTag::a:
            set_h_power(params, cert.k);
            set_v_transposed_jordan(params, mu.parts());
            break;
        case CaseTag::b: {
            if (mu.largest() == 1)
                break;  // Q = (1^N): the zero matrix
            std::vector<int> shifted = mu.parts();
            shifted[0] -= 1;
            set_h_power(params, cert.k);
            set_v_transposed_jordan(params, shifted);
            params.d[0] = 1;
            params.u[static_cast<std::size_t>(mu.part(0) - 2)] = *cert.delta;
            break;
        }
        case CaseTag::c: {
            std::vector<int> shifted;
            std::size_t u_index = 0;
            if (mu.length() == 1) {
                shifted = {m};
                u_index = static_cast<std::size_t>(m - 1);
            } else {
                shifted = mu.parts();
                shifted[0] -= 1;
                shifted[1] -= 1;
                u_index = static_cast<std::size_t>(mu.part(0) + mu.part(1) - 3);
            }
            set_h_power(params, cert.k);
            set_v_transposed_jordan(params, shifted);
            params.d[0] = 1;
            params.u[u_index] = 1;
            break;
        }
    }
    return build_ub(hook, params);
}

}  // namespace

Witness witness(const HookType& hook, const CommutationCertificate& cert) {
    if (!is_valid_certificate(hook, cert))
        throw InvalidInput("certificate is not valid for hook " + hook.partition().to_string());
    const Partition target = certified_partition(hook, cert);

    CommutationCertificate used = cert;
    bool fallback = false;
    if (cert.case_tag == CaseTag::c && cert.mu.largest() <= 2) {
        const auto alternatives = decide(hook, target);
        auto it = std::find_if(alternatives.begin(), alternatives.end(),
                               [](const auto& c) { return c.case_tag != CaseTag::c; });
        if (it == alternatives.end())
            throw WitnessUnavailable("no case a/b certificate for " + target.to_string() +
                                     " with hook " + hook.partition().to_string());
        used = *it;
        fallback = true;
    }

    ExactMatrix a = construct(hook, used);
    const ExactMatrix b = jordan_matrix(hook.partition());
    if (!commutes(a, b))
        throw InternalError("witness does not commute with " + hook.partition().to_string());
    JordanReport report;
    try {
        report = jordan_type_of(a);
    } catch (const NotNilpotent&) {
        throw InternalError("witness is not nilpotent");
    }
    if (report.jordan_type != target)
        throw InternalError("witness for " + target.to_string() + " has Jordan type " +
                            report.jordan_type.to_string());
    return {std::move(a), std::move(used), fallback, std::move(report)};
}

Partition d_hook(const HookType& hook) {
    const int n = hook.n();
    const int m = hook.m();
    if (n >= m + 2)
        return make_partition({n, m});
    return make_partition({m + 2, n - 2});
}

namespace {

std::optional<HookType> as_hook(const Partition& p) {
    if (p.length() < 2 || p.largest() < 3)
        return std::nullopt;
    for (std::size_t i = 1; i < p.length(); ++i)
        if (p.part(i) != 1)
            return std::nullopt;
    return HookType(p.largest(), static_cast<int>(p.length()) - 1);
}

}  // namespace

std::optional<bool> known_commutation(const Partition& p, const Partition& q) {
    if (p.weight() != q.weight())
        throw InvalidInput("partitions of different weights never commute: " + p.to_string() +
                           " vs " + q.to_string());
    if (is_universally_commuting(p) || is_universally_commuting(q))
        return true;
    if (p.length() == 1)
        return is_almost_rectangular(q);
    if (q.length() == 1)
        return is_almost_rectangular(p);
    if (auto hook = as_hook(p))
        return !decide(*hook, q).empty();
    if (auto hook = as_hook(q))
        return !decide(*hook, p).empty();
    return std::nullopt;
}

}  // namespace hookcomm
