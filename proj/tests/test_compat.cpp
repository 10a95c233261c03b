#include <catch2/catch_amalgamated.hpp>

#include "ordwalk/compat.hpp"
#include "ordwalk/condgen.hpp"
#include "support/brute_compat.hpp"

using namespace ordwalk;
using ordwalk_test::brute_force_common_extension;
using ordwalk_test::BruteOptions;

static Ordinal O(const char* s) { return Ordinal::parse(s); }

static Condition cond(std::initializer_list<std::pair<const char*, std::vector<const char*>>> xs) {
    Condition c;
    for (const auto& [d, vals] : xs) {
        c.touch(O(d));
        for (const char* v : vals) c.insert_value(O(d), O(v));
    }
    return c;
}

TEST_CASE("compatibility basics") {
    FundSeqFamily f1(O("w^3"));
    RhoCache cache(f1);
    auto Q = PosetVariant::Q();

    SECTION("disjoint domains and values: the union is the witness") {
        Condition p = cond({{"w", {"4"}}});
        Condition q = cond({{"w*2", {"w+7"}}});
        auto res = compatible(p, q, Q, cache);
        REQUIRE(res.compatible());
        CHECK(extends(*res.witness, p));
        CHECK(extends(*res.witness, q));
        CHECK(validate_condition(*res.witness, Q, cache).valid());
    }

    SECTION("an extension pair is compatible out of the box") {
        Condition p = cond({{"w", {"4", "w*3"}}});
        Condition q = cond({{"w", {"4"}}});
        auto res = compatible(p, q, Q, cache);
        REQUIRE(res.compatible());
        CHECK(*res.witness == p);
    }

    SECTION("shared value above rho yields a verifiable certificate") {
        Condition p = cond({{"w", {"4"}}});
        Condition q = cond({{"w*2", {"4"}}});
        auto res = compatible(p, q, Q, cache);
        REQUIRE(!res.compatible());
        REQUIRE(res.cert.has_value());
        CHECK(res.cert->clause == IncompatCert::Clause::rho_cap);
        CHECK(res.cert->shared_value == O("4"));
        CHECK(res.cert->rho_at_pair.is_zero());
        CHECK(verify_certificate(p, q, *res.cert, Q, cache));
        CHECK(!brute_force_common_extension(p, q, false, cache).has_value());
    }

    SECTION("window clash across the two conditions") {
        Condition p = cond({{"w", {"3"}}});
        Condition q = cond({{"w", {"5"}}});
        auto res = compatible(p, q, Q, cache);
        REQUIRE(!res.compatible());
        CHECK(res.cert->clause == IncompatCert::Clause::window);
        CHECK(verify_certificate(p, q, *res.cert, Q, cache));
    }

    SECTION("forced additions can be the whole story") {
        // shared top value w*2 at both points forces 4 into q's set, where it
        // collides with 6 inside one window
        Condition p = cond({{"w", {"4", "w*2"}}});
        Condition q = cond({{"w*2", {"6", "w*2"}}});
        REQUIRE(validate_condition(p, PosetVariant::Q(), cache).valid());
        REQUIRE(validate_condition(q, PosetVariant::Q(), cache).valid());
        auto res = compatible(p, q, PosetVariant::Q(), cache);
        REQUIRE(!res.compatible());
        CHECK(!res.cert->derivation.empty());
        CHECK(verify_certificate(p, q, *res.cert, PosetVariant::Q(), cache));
        CHECK(!brute_force_common_extension(p, q, false, cache).has_value());
    }

    SECTION("tampered certificates do not verify") {
        Condition p = cond({{"w", {"4"}}});
        Condition q = cond({{"w*2", {"4"}}});
        auto res = compatible(p, q, Q, cache);
        IncompatCert bad = *res.cert;
        bad.shared_value = O("7");
        CHECK(!verify_certificate(p, q, bad, Q, cache));
        IncompatCert bad2 = *res.cert;
        bad2.rho_at_pair = O("9");
        CHECK(!verify_certificate(p, q, bad2, Q, cache));
    }

    SECTION("invalid inputs are rejected") {
        Condition bad = cond({{"w", {"3", "5"}}});
        CHECK_THROWS_AS(compatible(bad, bad, Q, cache), precondition_error);
    }
}

static GenConfig small_gen(const CSeqFamily& fam) {
    GenConfig cfg;
    cfg.domain_pool = enumerate_below(fam.bound(), SweepCaps{2, 1, 100000});
    std::erase_if(cfg.domain_pool, [](const Ordinal& o) { return o.is_zero(); });
    for (std::uint64_t blk = 0; blk < 3; ++blk)
        for (std::uint64_t off = 0; off < 3; ++off)
            cfg.value_pool.push_back(Ordinal::omega() * Ordinal::nat(blk) + Ordinal::nat(off));
    return cfg;
}

TEST_CASE("closure decision agrees with brute force on random pairs") {
    FundSeqFamily f1(O("w^3"));
    RhoCache cache(f1);
    GenConfig cfg = small_gen(f1);
    SplitMix64 rng(20240817);

    for (bool strict : {false, true}) {
        PosetVariant variant = strict ? PosetVariant::P() : PosetVariant::Q();
        std::size_t incompatible = 0;
        for (int t = 0; t < 1500; ++t) {
            Condition p = random_condition(rng, cfg, variant, cache);
            Condition q = random_condition(rng, cfg, variant, cache);
            auto res = compatible(p, q, variant, cache);
            auto brute = brute_force_common_extension(p, q, strict, cache);
            REQUIRE(res.compatible() == brute.has_value());
            if (res.compatible()) {
                CHECK(validate_condition(*res.witness, variant, cache).valid());
                CHECK(extends(*res.witness, p));
                CHECK(extends(*res.witness, q));
            } else {
                ++incompatible;
                CHECK(verify_certificate(p, q, *res.cert, variant, cache));
            }
        }
        CHECK(incompatible > 50); // the sample genuinely exercises both outcomes
    }
}

TEST_CASE("restricted brute force agrees with the unrestricted search") {
    TwoTierFamily f3(O("w^2"));
    RhoCache cache(f3);
    GenConfig cfg;
    cfg.domain_pool = {O("w"),      O("w*2"),     O("w^2"),       O("w^2+w"),
                       O("w^2*2"), O("w^2*2+w"), O("w^3"),       O("w^3+w^2")};
    cfg.value_pool = {O("0"), O("1"), O("2"), O("w"), O("w+1"), O("w*2"), O("w*2+2")};
    cfg.max_dom = 2;
    cfg.max_vals = 2;
    SplitMix64 rng(99);
    BruteOptions unrestricted;
    unrestricted.restrict_to_below_max = false;
    for (int t = 0; t < 300; ++t) {
        Condition p = random_condition(rng, cfg, PosetVariant::Q(), cache);
        Condition q = random_condition(rng, cfg, PosetVariant::Q(), cache);
        auto a = brute_force_common_extension(p, q, false, cache);
        auto b = brute_force_common_extension(p, q, false, cache, unrestricted);
        CHECK(a.has_value() == b.has_value());
    }
}
