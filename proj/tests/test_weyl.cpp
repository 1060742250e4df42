#include <doctest.h>

#include <algorithm>
#include <set>

#include "dlq/weyl.hpp"

using namespace dlq;

namespace {
WeylElt fw(const RootSystem& rs, std::initializer_list<int> word) {
    std::vector<int> v(word);
    return WeylElt::from_word(rs, v);
}

std::vector<WeylElt> whole_group(const RootSystem& rs) {
    return parabolic_elements(rs, SimpleSubset::full(rs.rank()));
}
}  // namespace

TEST_CASE("words, products, inverses") {
    RootSystem a2(CartanDatum::named("A2"));
    CHECK(fw(a2, {0, 1, 0}) == fw(a2, {1, 0, 1}));  // braid relation
    CHECK(fw(a2, {}).length() == 0);
    CHECK(fw(a2, {0, 0}) == WeylElt::identity(a2));

    WeylElt a = fw(a2, {0, 1});
    CHECK(a * a.inverse() == WeylElt::identity(a2));
    CHECK(WeylElt::identity(a2).act(3) == 3);

    RootSystem b2(CartanDatum::named("B2"));
    CHECK(fw(b2, {0, 1}).length() == 2);
    CHECK_THROWS_AS(fw(a2, {0}) * fw(b2, {0}), PreconditionError);
    CHECK_THROWS_AS(fw(a2, {5}), InvalidInput);
}

TEST_CASE("lengths of longest elements") {
    RootSystem b2(CartanDatum::named("B2"));
    CHECK(longest_element(b2, SimpleSubset::full(2)).length() == 4);
    RootSystem a3(CartanDatum::named("A3"));
    CHECK(longest_element(a3, SimpleSubset::full(3)).length() == 6);
    CHECK(longest_element(a3, SimpleSubset{}).is_identity());
    CHECK(longest_element(a3, SimpleSubset::of({0, 1})) == fw(a3, {0, 1, 0}));

    for (const char* name : {"A3", "B3"}) {
        RootSystem rs(CartanDatum::named(name));
        for (unsigned m = 0; m < (1u << rs.rank()); ++m) {
            SimpleSubset I{m};
            CHECK(longest_element(rs, I).length() ==
                  static_cast<int>(rs.parabolic_roots(I).size()) / 2);
        }
    }
}

TEST_CASE("deterministic reduced words") {
    RootSystem a2(CartanDatum::named("A2"));
    CHECK(reduced_word(WeylElt::identity(a2)).empty());
    CHECK(reduced_word(longest_element(a2, SimpleSubset::full(2))) == std::vector<int>{0, 1, 0});

    RootSystem b3(CartanDatum::named("B3"));
    for (const WeylElt& w : whole_group(b3)) {
        std::vector<int> word = reduced_word(w);
        CHECK(static_cast<int>(word.size()) == w.length());
        CHECK(WeylElt::from_word(b3, word) == w);
    }
}

TEST_CASE("length equals inversion count") {
    RootSystem b3(CartanDatum::named("B3"));
    for (const WeylElt& w : whole_group(b3)) {
        int inv = 0;
        for (int r = b3.num_positive(); r < b3.num_roots(); ++r)
            if (!b3.positive(w.act(r))) ++inv;
        CHECK(inv == w.length());
    }
}

TEST_CASE("length subadditivity") {
    for (const char* name : {"A2", "B2"}) {
        RootSystem rs(CartanDatum::named(name));
        auto all = whole_group(rs);
        for (const WeylElt& u : all)
            for (const WeylElt& w : all) {
                int l = (u * w).length();
                CHECK(l <= u.length() + w.length());
                CHECK((l - u.length() - w.length()) % 2 == 0);
                // equality exactly when the concatenated words stay reduced
                std::vector<int> cat = reduced_word(u);
                auto tail = reduced_word(w);
                cat.insert(cat.end(), tail.begin(), tail.end());
                bool concatReduced = WeylElt::from_word(rs, cat).length() ==
                                     static_cast<int>(cat.size());
                CHECK(concatReduced == (l == u.length() + w.length()));
            }
    }
}

TEST_CASE("bruhat order") {
    RootSystem a2(CartanDatum::named("A2"));
    WeylElt s1 = fw(a2, {0}), s1s2 = fw(a2, {0, 1});
    CHECK(bruhat_leq(WeylElt::identity(a2), s1s2));
    CHECK(bruhat_leq(s1, s1s2));
    CHECK_FALSE(bruhat_leq(s1s2, fw(a2, {1})));
}

TEST_CASE("bruhat order matches the subword oracle on every reduced word") {
    // u <= w iff some subsequence of a reduced word of w multiplies to u;
    // checked against every reduced expression of w.
    for (const char* name : {"A3", "B2"}) {
        RootSystem rs(CartanDatum::named(name));
        auto all = whole_group(rs);
        for (const WeylElt& w : all) {
            for (const auto& word : all_reduced_words(w)) {
                std::set<std::vector<std::int16_t>> reachable;
                const std::size_t subsets = 1u << word.size();
                for (std::size_t m = 0; m < subsets; ++m) {
                    std::vector<int> sub;
                    for (std::size_t i = 0; i < word.size(); ++i)
                        if ((m >> i) & 1u) sub.push_back(word[i]);
                    reachable.insert(WeylElt::from_word(rs, sub).perm());
                }
                for (const WeylElt& u : all)
                    CHECK(bruhat_leq(u, w) == (reachable.count(u.perm()) > 0));
            }
        }
    }
}

TEST_CASE("diagram twist") {
    RootSystem split(CartanDatum::named("A3"));
    for (const WeylElt& w : whole_group(split)) CHECK(apply_F(w) == w);

    RootSystem tw(CartanDatum::named("2A3"));
    CHECK(apply_F(WeylElt::simple(tw, 0)) == WeylElt::simple(tw, 2));
    CHECK(apply_F_subset(tw, SimpleSubset::of({0, 1})) == SimpleSubset::of({1, 2}));
    auto all = whole_group(tw);
    for (std::size_t i = 0; i < all.size(); i += 7)
        for (std::size_t j = 0; j < all.size(); j += 5)
            CHECK(apply_F(all[i] * all[j]) == apply_F(all[i]) * apply_F(all[j]));

    // triality has order three
    RootSystem tri(CartanDatum::named("3D4"));
    for (int i = 0; i < 4; ++i) {
        WeylElt s = WeylElt::simple(tri, i);
        CHECK(apply_F(apply_F(apply_F(s))) == s);
        CHECK((apply_F(s) == s) == (i == 2));  // only the central node is fixed
    }
}

TEST_CASE("I-reduced elements") {
    RootSystem b2(CartanDatum::named("B2"));
    for (unsigned m = 0; m < 4; ++m) {
        CHECK(is_I_reduced(WeylElt::identity(b2), SimpleSubset{m}, Side::Left));
        CHECK(is_I_reduced(WeylElt::identity(b2), SimpleSubset{m}, Side::Right));
    }
    CHECK(is_I_reduced(fw(b2, {1, 0, 1}), SimpleSubset::of({0}), Side::Left));
    CHECK_FALSE(is_I_reduced(fw(b2, {0}), SimpleSubset::of({0}), Side::Left));
}

TEST_CASE("normalizes") {
    RootSystem a2(CartanDatum::named("A2"));
    CHECK(normalizes(WeylElt::identity(a2), SimpleSubset::of({1}), false));
    CHECK_FALSE(normalizes(fw(a2, {0}), SimpleSubset::of({1}), false));

    RootSystem b2(CartanDatum::named("B2"));
    CHECK(normalizes(fw(b2, {1, 0, 1}), SimpleSubset::of({0}), true));
}

TEST_CASE("support") {
    RootSystem b2(CartanDatum::named("B2"));
    CHECK(support(fw(b2, {1, 0, 1})) == SimpleSubset::of({0, 1}));
    CHECK(support(WeylElt::identity(b2)).empty());
    CHECK(in_parabolic_subgroup(fw(b2, {0}), SimpleSubset::of({0})));
    CHECK_FALSE(in_parabolic_subgroup(fw(b2, {1, 0}), SimpleSubset::of({0})));
}

TEST_CASE("parabolic subgroup enumeration") {
    RootSystem a3(CartanDatum::named("A3"));
    CHECK(parabolic_elements(a3, SimpleSubset{}).size() == 1);
    CHECK(parabolic_elements(a3, SimpleSubset::of({0, 1})).size() == 6);
    CHECK(whole_group(a3).size() == 24);
    RootSystem b3(CartanDatum::named("B3"));
    CHECK(whole_group(b3).size() == 48);
}

TEST_CASE("all reduced words") {
    RootSystem a3(CartanDatum::named("A3"));
    CHECK(all_reduced_words(longest_element(a3, SimpleSubset::full(3))).size() == 16);
    for (const auto& word : all_reduced_words(fw(a3, {0, 1, 2, 1})))
        CHECK(WeylElt::from_word(a3, word) == fw(a3, {0, 1, 2, 1}));
}
