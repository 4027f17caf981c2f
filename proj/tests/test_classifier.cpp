#include <doctest.h>

#include <map>
#include <set>

#include "hookcomm/classifier.hpp"
#include "hookcomm/errors.hpp"

using namespace hookcomm;

namespace {

Partition P(std::initializer_list<int> parts) { return make_partition(parts); }

std::set<Partition> commuting_set(const HookType& hook) {
    std::set<Partition> out;
    for (const auto& e : enumerate_commuting(hook))
        out.insert(e.partition);
    return out;
}

std::set<Partition> with_case(const HookType& hook, CaseTag tag) {
    std::set<Partition> out;
    for (const auto& e : enumerate_commuting(hook))
        for (const auto& c : e.certificates)
            if (c.case_tag == tag)
                out.insert(e.partition);
    return out;
}

// Builds the commuting set forwards, from every admissible (mu, k), instead
// of peeling almost rectangular pieces off each Q.
std::map<CaseTag, std::set<Partition>> generated_sets(int n, int m) {
    std::map<CaseTag, std::set<Partition>> out;
    for (const auto& mu : enumerate_partitions(m))
        for (int k = 1; k <= n; ++k)
            out[CaseTag::a].insert(concat(mu, ar(n, k)));
    for (const auto& mu : enumerate_partitions(m + 1))
        for (int k = 1; k <= n - 1; ++k)
            if (k * mu.largest() >= n - 1)
                out[CaseTag::b].insert(concat(mu, ar(n - 1, k)));
    for (const auto& mu : enumerate_partitions(m + 2))
        for (int k = 1; k <= n - 2; ++k) {
            const bool one_part = mu.length() == 1 && k * (m + 1) > n - 1;
            const bool two_plus = mu.part(1) >= 2 && k * mu.part(1) > n - 1;
            if (one_part || two_plus)
                out[CaseTag::c].insert(concat(mu, ar(n - 2, k)));
        }
    return out;
}

}  // namespace

TEST_CASE("decide examples") {
    CHECK(decide(HookType(5, 1), P({3, 3})).empty());
    CHECK(decide(HookType(8, 2), P({3, 3, 1, 1, 1, 1})).empty());
    CHECK(decide(HookType(13, 3), P({4, 3, 2, 2, 2, 2, 1})).empty());

    const auto b = decide(HookType(4, 2), P({3, 2, 1}));
    CommutationCertificate want{CaseTag::b, 2, P({3}), Rational(0)};
    CHECK(std::find(b.begin(), b.end(), want) != b.end());

    const auto c = decide(HookType(3, 3), P({5, 1}));
    CommutationCertificate want_c{CaseTag::c, 1, P({5}), std::nullopt};
    REQUIRE(c.size() == 1);
    CHECK(c.front() == want_c);

    // delta is -1 exactly on the boundary k * mu_1 = n - 1.
    const auto boundary = decide(HookType(5, 1), P({2, 2, 2}));
    bool saw_boundary = false;
    for (const auto& cert : boundary)
        if (cert.case_tag == CaseTag::b) {
            REQUIRE(cert.delta.has_value());
            CHECK(*cert.delta == (cert.k * cert.mu.largest() == 4 ? -1 : 0));
            saw_boundary = saw_boundary || *cert.delta == -1;
        }
    CHECK(saw_boundary);
}

TEST_CASE("decide errors") {
    CHECK_THROWS_AS(decide(HookType(5, 1), P({3, 3, 1})), InvalidInput);
    CHECK_THROWS_AS(decide(2, 4, P({3, 3})), OutOfTheoremDomain);
    CHECK_THROWS_AS(decide(6, 0, P({3, 3})), OutOfTheoremDomain);
    CHECK_THROWS_AS(enumerate_commuting(HookType(20, 10)), ResourceLimit);
    CHECK(enumerate_commuting(HookType(20, 10), 30).size() > 0);
}

TEST_CASE("N = 6 commuting sets") {
    // Verified against the exhaustive grid oracle as well (see test_oracle).
    const HookType h51(5, 1), h42(4, 2), h33(3, 3);
    CHECK(commuting_set(h51) == std::set<Partition>{P({5, 1}), P({3, 2, 1}), P({3, 1, 1, 1}),
                                                    P({2, 2, 2}), P({2, 2, 1, 1}),
                                                    P({2, 1, 1, 1, 1}), P({1, 1, 1, 1, 1, 1})});
    CHECK(enumerate_non_commuting(h51) ==
          std::vector<Partition>{P({6}), P({4, 2}), P({4, 1, 1}), P({3, 3})});
    CHECK(enumerate_non_commuting(h42) == std::vector<Partition>{P({6}), P({5, 1})});
    CHECK(enumerate_non_commuting(h33) == std::vector<Partition>{P({6})});

    auto non_universal = [](std::set<Partition> s) {
        std::erase_if(s, [](const Partition& p) { return is_universally_commuting(p); });
        return s;
    };
    CHECK(non_universal(with_case(h51, CaseTag::a)) == std::set{P({5, 1}), P({3, 2, 1})});
    CHECK(non_universal(with_case(h51, CaseTag::b)).empty());
    CHECK(non_universal(with_case(h51, CaseTag::c)) == std::set{P({3, 1, 1, 1})});
    CHECK(non_universal(with_case(h42, CaseTag::a)) == std::set{P({4, 2}), P({4, 1, 1})});
    CHECK(non_universal(with_case(h42, CaseTag::b)) ==
          std::set{P({3, 3}), P({3, 2, 1}), P({3, 1, 1, 1})});
    CHECK(non_universal(with_case(h42, CaseTag::c)) == std::set{P({4, 1, 1})});
    CHECK(non_universal(with_case(h33, CaseTag::a)) ==
          std::set{P({3, 3}), P({3, 2, 1}), P({3, 1, 1, 1})});
    CHECK(non_universal(with_case(h33, CaseTag::b)) ==
          std::set{P({4, 2}), P({4, 1, 1}), P({3, 2, 1}), P({3, 1, 1, 1})});
    CHECK(non_universal(with_case(h33, CaseTag::c)) == std::set{P({5, 1})});
}

TEST_CASE("enumeration order and certificate validity") {
    const auto entries = enumerate_commuting(HookType(6, 4));
    for (std::size_t i = 0; i + 1 < entries.size(); ++i)
        CHECK(entries[i].partition > entries[i + 1].partition);
    for (const auto& e : entries) {
        CHECK_FALSE(e.certificates.empty());
        for (const auto& c : e.certificates) {
            CHECK(is_valid_certificate(HookType(6, 4), c));
            CHECK(certified_partition(HookType(6, 4), c) == e.partition);
        }
    }
}

TEST_CASE("decide matches forward generation") {
    for (int total = 4; total <= 14; ++total)
        for (const auto& hook : hooks_of_size(total)) {
            const auto gen = generated_sets(hook.n(), hook.m());
            for (CaseTag tag : {CaseTag::a, CaseTag::b, CaseTag::c}) {
                const auto got = with_case(hook, tag);
                const auto it = gen.find(tag);
                CHECK(got == (it == gen.end() ? std::set<Partition>{} : it->second));
            }
        }
}

TEST_CASE("invalid certificates are rejected") {
    const HookType hook(5, 2);
    CHECK_FALSE(is_valid_certificate(hook, {CaseTag::a, 6, P({2}), std::nullopt}));
    CHECK_FALSE(is_valid_certificate(hook, {CaseTag::a, 2, P({3}), std::nullopt}));
    CHECK_FALSE(is_valid_certificate(hook, {CaseTag::b, 1, P({2, 1}), Rational(0)}));  // 1*2 < 4
    CHECK(is_valid_certificate(hook, {CaseTag::b, 2, P({2, 1}), Rational(-1)}));
    CHECK_FALSE(is_valid_certificate(hook, {CaseTag::b, 2, P({2, 1}), Rational(0)}));
    CHECK_FALSE(is_valid_certificate(hook, {CaseTag::c, 1, P({4}), std::nullopt}));  // 1*3 > 4 fails
    CHECK(is_valid_certificate(hook, {CaseTag::c, 2, P({4}), std::nullopt}));
    CHECK_FALSE(is_valid_certificate(hook, {CaseTag::c, 2, P({4}), Rational(0)}));
}

TEST_CASE("witness examples") {
    const HookType h42(4, 2);
    const Witness w = witness(h42, {CaseTag::b, 2, P({3}), Rational(0)});
    CHECK_FALSE(w.fallback);
    CHECK(w.report.jordan_type == P({3, 2, 1}));
    CHECK(w.matrix.rows() == 6);
    CHECK(jordan_type_of(w.matrix).jordan_type == P({3, 2, 1}));

    const HookType h33(3, 3);
    const Witness wc = witness(h33, {CaseTag::c, 1, P({5}), std::nullopt});
    CHECK(jordan_type_of(wc.matrix).jordan_type == P({5, 1}));
    CHECK(commutes(wc.matrix, jordan_matrix(h33.partition())));

    for (int n = 3; n <= 6; ++n)
        for (int m = 1; m <= 3; ++m) {
            const HookType hook(n, m);
            std::vector<int> ones(static_cast<std::size_t>(m), 1);
            const Witness self = witness(hook, {CaseTag::a, 1, make_partition(ones), std::nullopt});
            CHECK(self.matrix == jordan_matrix(hook.partition()));
        }

    const Witness zero = witness(HookType(4, 1), {CaseTag::b, 3, P({1, 1}), Rational(-1)});
    CHECK(zero.matrix.is_zero());

    CHECK_THROWS_AS(witness(h42, {CaseTag::a, 9, P({2}), std::nullopt}), InvalidInput);
}

TEST_CASE("witness soundness for every certificate up to weight 12") {
    int checked = 0;
    for (int total = 4; total <= 12; ++total)
        for (const auto& hook : hooks_of_size(total)) {
            const ExactMatrix b = jordan_matrix(hook.partition());
            for (const auto& e : enumerate_commuting(hook))
                for (const auto& cert : e.certificates) {
                    const Witness w = witness(hook, cert);
                    CHECK(commutes(w.matrix, b));
                    const JordanReport r = jordan_type_of(w.matrix);
                    CHECK(r.jordan_type == e.partition);
                    CHECK(certified_partition(hook, w.used) == e.partition);
                    ++checked;
                }
        }
    CHECK(checked > 1000);
}

TEST_CASE("case c fallback census up to weight 14") {
    int direct_c = 0;
    int fallbacks = 0;
    int unavailable = 0;
    for (int total = 4; total <= 14; ++total)
        for (const auto& hook : hooks_of_size(total))
            for (const auto& e : enumerate_commuting(hook))
                for (const auto& cert : e.certificates) {
                    if (cert.case_tag != CaseTag::c)
                        continue;
                    if (cert.mu.largest() > 2) {
                        ++direct_c;
                        continue;
                    }
                    try {
                        const Witness w = witness(hook, cert);
                        CHECK(w.fallback);
                        CHECK(w.used.case_tag != CaseTag::c);
                        ++fallbacks;
                    } catch (const WitnessUnavailable&) {
                        ++unavailable;
                    }
                }
    MESSAGE("case c certificates: " << direct_c << " direct, " << fallbacks
                                    << " via fallback, " << unavailable << " unavailable");
    CHECK(fallbacks > 0);
    CHECK(unavailable == 0);
}

TEST_CASE("boundary identities") {
    int first = 0;
    int second = 0;
    for (int total = 4; total <= 12; ++total)
        for (const auto& hook : hooks_of_size(total)) {
            const int n = hook.n();
            const int m = hook.m();
            for (int k = 1; k <= n - 2; ++k) {
                if (n - 1 == k * (m + 1)) {
                    const Partition lhs = concat(P({m + 2}), ar(n - 2, k));
                    CHECK(lhs == concat(P({m}), ar(n, k)));
                    CHECK_FALSE(decide(hook, lhs).empty());
                    ++first;
                }
                for (const auto& mu : enumerate_partitions(m + 2)) {
                    if (mu.part(1) < 2 || n - 1 != k * mu.part(1))
                        continue;
                    std::vector<int> reduced = mu.parts();
                    reduced[1] -= 1;
                    const Partition lhs = concat(mu, ar(n - 2, k));
                    CHECK(lhs == concat(make_partition(reduced), ar(n - 1, k)));
                    bool has_b = false;
                    for (const auto& c : decide(hook, lhs))
                        has_b = has_b || c.case_tag == CaseTag::b;
                    CHECK(has_b);
                    ++second;
                }
            }
        }
    CHECK(first > 0);
    CHECK(second > 0);
}

TEST_CASE("universal partitions commute with every hook") {
    for (int total = 4; total <= 14; ++total)
        for (const auto& hook : hooks_of_size(total))
            for (const auto& q : enumerate_partitions(total))
                if (is_universally_commuting(q))
                    CHECK_FALSE(decide(hook, q).empty());
}

TEST_CASE("hooks with arm 3 commute exactly when the smallest part is at most 3") {
    for (int m = 1; m <= 8; ++m)
        for (const auto& q : enumerate_partitions(m + 3))
            CHECK(!decide(HookType(3, m), q).empty() == (q.smallest() <= 3));
}

TEST_CASE("commutation between hooks is symmetric") {
    for (int total = 4; total <= 12; ++total) {
        const auto hooks = hooks_of_size(total);
        for (const auto& h1 : hooks)
            for (const auto& h2 : hooks)
                CHECK(decide(h1, h2.partition()).empty() == decide(h2, h1.partition()).empty());
    }
}

TEST_CASE("d_hook") {
    CHECK(d_hook(HookType(5, 1)) == P({5, 1}));
    CHECK(d_hook(HookType(3, 3)) == P({5, 1}));
    CHECK(d_hook(HookType(26, 53)) == P({55, 24}));
    CHECK(d_hook(HookType(8, 2)) == P({8, 2}));
    CHECK(d_hook(HookType(4, 2)) == P({4, 2}));

    for (int total = 4; total <= 12; ++total)
        for (const auto& hook : hooks_of_size(total)) {
            const Partition d = d_hook(hook);
            CHECK(is_rr(d));
            CHECK_FALSE(decide(hook, d).empty());
            for (const auto& q : commuting_set(hook))
                CHECK(dominates(d, q));
        }
}

TEST_CASE("known_commutation") {
    CHECK(known_commutation(P({6}), P({3, 3})) == true);
    CHECK(known_commutation(P({6}), P({4, 2})) == false);
    CHECK(known_commutation(P({4, 2}), P({6})) == false);
    CHECK(known_commutation(P({2, 1, 1, 1, 1}), P({4, 2})) == true);
    CHECK(known_commutation(P({5, 1}), P({3, 3})) == false);
    CHECK(known_commutation(P({3, 3}), P({4, 1, 1})) == true);
    CHECK_FALSE(known_commutation(P({3, 3}), P({4, 2})).has_value());
    CHECK_THROWS_AS(known_commutation(P({3}), P({2})), InvalidInput);

    // Hooks are never almost rectangular, so (N) commutes with none of them.
    for (int total = 4; total <= 10; ++total)
        for (const auto& hook : hooks_of_size(total))
            CHECK(!decide(hook, P({total})).empty() == is_almost_rectangular(hook.partition()));
}

TEST_CASE("case tags") {
    CHECK(case_letter(CaseTag::b) == 'b');
    CHECK(parse_case_tag("c") == CaseTag::c);
    CHECK_THROWS_AS(parse_case_tag("d"), InvalidInput);
    CHECK(arm_length(HookType(7, 2), CaseTag::c) == 5);
}
