#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "helpers.hpp"
#include "sftirr/construction.hpp"
#include "sftirr/measures.hpp"
#include "sftirr/rng.hpp"
#include "sftirr/substitution.hpp"

using namespace sftirr;
using helpers::throws_named;

namespace {

SubstitutionMap gm_map() {
    Sft gm = fixtures::golden_mean();
    return SubstitutionMap::from_word_system(build_word_system(gm));
}

MarkovMeasure gm_parry() {
    Sft gm = fixtures::golden_mean();
    return parry_measure(gm, dominant_eigendata(adjacency_matrix(gm)));
}

Word plant(const Word& background, const Word& pattern, std::size_t at) {
    Word out = background;
    std::copy(pattern.begin(), pattern.end(), out.begin() + at);
    return out;
}

}  // namespace

TEST_CASE("zone_of follows the two factorial rules") {
    for (std::int64_t i = 2; i <= 6; ++i) {
        Zone z = zone_of(i, 11);
        CHECK(z.kind == Zone::Kind::Frozen);
        CHECK(z.k == 1);
    }
    CHECK(zone_of(24, 11).kind == Zone::Kind::Frozen);
    CHECK(zone_of(24, 11).k == 2);
    for (std::int64_t i = 7; i <= 12; ++i) {
        Zone z = zone_of(i, 11);
        CHECK(z.kind == Zone::Kind::SwapEligible);
        CHECK(z.k == 2);
    }
    CHECK(zone_of(0, 11).kind == Zone::Kind::Unzoned);
    CHECK(zone_of(1, 11).kind == Zone::Kind::Unzoned);
    for (std::int64_t i = 13; i <= 23; ++i)
        CHECK(zone_of(i, 11).kind == Zone::Kind::Unzoned);

    // swap zone k = 1 is empty whenever M >= 1
    for (std::int64_t i = 0; i < 24; ++i)
        CHECK(!(zone_of(i, 11).kind == Zone::Kind::SwapEligible &&
                zone_of(i, 11).k == 1));

    CHECK(throws_named("IndexOverflow",
                       [] { zone_of(kFactorials[20], 11); }));
    CHECK(throws_named("IndexOverflow", [] { zone_of(-1, 11); }));
}

TEST_CASE("zone partition is disjoint and swap writes stay clear of frozen") {
    const std::int64_t M = 11;
    for (int k = 1; 2 * k + 1 <= kMaxFactorial; ++k) {
        std::int64_t swap_lo = kFactorials[2 * k - 1] + 1;
        std::int64_t swap_hi = kFactorials[2 * k] - 1 - M;
        std::int64_t frozen_lo = kFactorials[2 * k];
        std::int64_t frozen_hi = kFactorials[2 * k + 1];
        CHECK(swap_hi < frozen_lo);
        if (swap_lo <= swap_hi) {
            // last write of a swap starting at swap_hi
            CHECK(swap_hi + M - 1 <= frozen_lo - 2);
        }
        CHECK(frozen_hi < kFactorials[2 * (k + 1) - 1] + 1);
    }

    // in_frozen_set matches zone_of classification
    for (std::int64_t i = 0; i < 50000; ++i) {
        bool frozen = zone_of(i, M).kind == Zone::Kind::Frozen;
        CHECK(frozen == in_frozen_set(i));
    }
}

TEST_CASE("find_occurrences") {
    SubstitutionMap map = gm_map();
    const Word& xi = map.xi();
    CHECK(find_occurrences(xi, xi) == std::vector<std::size_t>{0});

    // w s w s w has chained occurrences sharing the middle w
    Word chained = word_from_digits("100000010000001000");
    REQUIRE(chained.size() == 18);
    CHECK(find_occurrences(chained, xi) == std::vector<std::size_t>{0, 7});

    Word zeros(64, 0);
    CHECK(find_occurrences(zeros, xi).empty());
    CHECK(find_occurrences(word_from_digits("10"), xi).empty());

    // agreement with a naive quadratic scan on random words
    MarkovMeasure parry = gm_parry();
    for (int trial = 0; trial < 50; ++trial) {
        Word x = sample_path(parry, 2000, sub_seed(404, trial));
        Word pattern(x.begin() + 100, x.begin() + 100 + 5);
        std::vector<std::size_t> naive;
        for (std::size_t i = 0; i + pattern.size() <= x.size(); ++i)
            if (std::equal(pattern.begin(), pattern.end(), x.begin() + i))
                naive.push_back(i);
        CHECK(find_occurrences(x, pattern) == naive);
    }
}

TEST_CASE("apply_L swaps only in swap-eligible zones") {
    SubstitutionMap map = gm_map();
    Word background(30, 0);

    Word with_xi = plant(background, map.xi(), 7);  // SwapEligible(2)
    Word out = map.apply_L(with_xi);
    Word expected = plant(background, map.eta(), 7);
    CHECK(out == expected);

    Word frozen = plant(background, map.xi(), 2);  // Frozen(1)
    CHECK(map.apply_L(frozen) == frozen);

    CHECK(map.apply_L(background) == background);
}

TEST_CASE("apply_involution swaps everywhere") {
    SubstitutionMap map = gm_map();
    CHECK(map.apply_involution(map.xi()) == map.eta());
    CHECK(map.apply_involution(map.eta()) == map.xi());

    Word chained = word_from_digits("100000010000001000");  // w s w s w
    Word swapped = map.apply_involution(chained);
    CHECK(swapped == word_from_digits("100010010001001000"));  // w t w t w
    CHECK(map.apply_involution(swapped) == chained);

    Word zeros(40, 0);
    CHECK(map.apply_involution(zeros) == zeros);
}

TEST_CASE("SubstitutionMap validation") {
    CHECK(throws_named("PatternMismatch", [] {
        SubstitutionMap(word_from_digits("101"), word_from_digits("10"), 1);
    }));
    CHECK(throws_named("PatternMismatch", [] {
        SubstitutionMap(word_from_digits("1010"), word_from_digits("0101"), 1);
    }));
}

TEST_CASE("involution property of L and iota on sampled prefixes") {
    for (const Sft& sft : {fixtures::golden_mean(), fixtures::full2(),
                           fixtures::three_symbol()}) {
        WordSystem ws = build_word_system(sft);
        SubstitutionMap map = SubstitutionMap::from_word_system(ws);
        MarkovMeasure parry =
            parry_measure(sft, dominant_eigendata(adjacency_matrix(sft)));
        for (int trial = 0; trial < 60; ++trial) {
            Word x = sample_path(parry, 10000, sub_seed(31337, trial));
            Word lx = map.apply_L(x);
            CHECK(map.apply_L(lx) == x);
            CHECK(map.apply_involution(map.apply_involution(x)) == x);
        }
    }
}

TEST_CASE("frozen fidelity and deep-swap agreement") {
    SubstitutionMap map = gm_map();
    MarkovMeasure parry = gm_parry();
    const std::int64_t M = map.M();
    for (int trial = 0; trial < 8; ++trial) {
        Word x = sample_path(parry, 45000, sub_seed(515, trial));
        Word lx = map.apply_L(x);
        Word ix = map.apply_involution(x);

        for (int k = 1; k <= 3; ++k)
            for (std::int64_t i = kFactorials[2 * k] - 1;
                 i <= kFactorials[2 * k + 1]; ++i)
                REQUIRE(lx[static_cast<std::size_t>(i)] ==
                        x[static_cast<std::size_t>(i)]);

        for (int k = 2; k <= 4; ++k) {
            std::int64_t lo = kFactorials[2 * k - 1] + M;
            std::int64_t hi = std::min<std::int64_t>(
                kFactorials[2 * k] - 1 - 2 * M,
                static_cast<std::int64_t>(x.size()) - 1);
            for (std::int64_t i = lo; i <= hi; ++i)
                REQUIRE(lx[static_cast<std::size_t>(i)] ==
                        ix[static_cast<std::size_t>(i)]);
        }
    }
}

TEST_CASE("Lipschitz separation bound") {
    Sft gm = fixtures::golden_mean();
    SubstitutionMap map = gm_map();
    MarkovMeasure parry = gm_parry();
    const std::size_t len = 10000;
    const std::size_t M = static_cast<std::size_t>(map.M());
    int checked = 0;
    for (int trial = 0; trial < 300; ++trial) {
        Word x = sample_path(parry, len, sub_seed(777, 2 * trial));
        std::size_t cut = 1 + (sub_seed(777, 2 * trial + 1) % (len - 2));
        Word y(x.begin(), x.begin() + cut);
        Word tail = sample_path(parry, len, sub_seed(778, trial));
        for (std::size_t i = cut; i < len; ++i) {
            Symbol prev = y.back();
            Symbol cand = tail[i];
            if (!gm.edge(prev, cand)) cand = 0;  // 0 follows both symbols
            y.push_back(cand);
        }
        auto sep = separation_index(x, y);
        if (!sep) continue;
        ++checked;
        auto sep_l = separation_index(map.apply_L(x), map.apply_L(y));
        // L is injective (it is an involution), so distinct inputs keep
        // distinct images
        REQUIRE(sep_l.has_value());
        std::size_t lower = *sep >= M ? *sep - M : 0;
        CHECK(*sep_l >= lower);
    }
    CHECK(checked > 200);
}
