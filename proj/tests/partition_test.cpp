#include <doctest.h>

#include <algorithm>

#include "liedim/partition.hpp"
#include "test_util.hpp"

using namespace liedim;

namespace {

Partition parts(std::vector<long long> v) { return Partition(std::move(v)); }

} // namespace

TEST_CASE("parse: exponent and list syntaxes agree") {
    CHECK(Partition::parse("5^2 3^2") == parts({5, 5, 3, 3}));
    CHECK(Partition::parse("[2,1,1]") == parts({2, 1, 1}));
    CHECK(Partition::parse("[5, 3, 3]") == Partition::parse("3 5 3"));
    CHECK(Partition::parse("4") == parts({4}));
    CHECK(Partition::parse("2 1^2") == parts({2, 1, 1}));
    CHECK(Partition::parse("  [ 3 , 1 ] ") == parts({3, 1}));
}

TEST_CASE("parse: bound identifiers in brace exponents") {
    Bindings b{{"n", 2}, {"m", 1}};
    CHECK(Partition::parse("2^{2n} 1^{2m}", b) == parts({2, 2, 2, 2, 1, 1}));
    CHECK(Partition::parse("3^{n*m+1}", b) == parts({3, 3, 3}));
    CHECK(Partition::parse("5^{(n-1)*2}", b) == parts({5, 5}));
    // multiplicity zero contributes nothing
    CHECK(Partition::parse("4 2^{m-1}", b) == parts({4}));
}

TEST_CASE("parse: malformed input names the offending token") {
    CHECK_THROWS_AS(Partition::parse(""), parse_error);
    CHECK_THROWS_AS(Partition::parse("   "), parse_error);
    CHECK_THROWS_AS(Partition::parse("0"), parse_error);
    CHECK_THROWS_AS(Partition::parse("[3,0]"), parse_error);
    CHECK_THROWS_AS(Partition::parse("[3,]"), parse_error);
    CHECK_THROWS_AS(Partition::parse("x"), parse_error);
    CHECK_THROWS_AS(Partition::parse("3^"), parse_error);
    CHECK_THROWS_AS(Partition::parse("3^{2q}"), parse_error);
    CHECK_THROWS_AS(Partition::parse("3^{2"), parse_error);
    CHECK_THROWS_AS(Partition::parse("2^{1-2}"), parse_error);
    CHECK_THROWS_AS(Partition::parse("[2,1"), parse_error);
    CHECK_THROWS_AS(Partition::parse("2^0"), parse_error); // empty partition

    try {
        Partition::parse("5 abc");
    } catch (const parse_error& e) {
        CHECK(std::string(e.what()).find("a") != std::string::npos);
    }
}

TEST_CASE("to_string uses exponent form with descending bases") {
    CHECK(parts({5, 5, 3, 3}).to_string() == "5^2 3^2");
    CHECK(parts({6, 6, 2, 2}).to_string() == "6^2 2^2");
    CHECK(parts({2, 1, 1}).to_string() == "2 1^2");
    CHECK(parts({4}).to_string() == "4");
    CHECK(parts({6, 5, 5}).to_string() == "6 5^2");
}

TEST_CASE("transpose examples") {
    CHECK(parts({2, 1, 1}).transpose() == parts({3, 1}));
    CHECK(parts({7}).transpose() == parts({1, 1, 1, 1, 1, 1, 1}));
    // column counts of the (5,5,3,3) diagram, counted by hand
    CHECK(parts({5, 5, 3, 3}).transpose() == parts({4, 4, 4, 2, 2}));
}

TEST_CASE("transpose is an involution preserving the sum") {
    for (long long n = 1; n <= 12; ++n) {
        for (const Partition& p : enumerate_partitions(n, GroupFamily::GeneralLinear)) {
            CHECK(p.transpose().sum() == n);
            CHECK(p.transpose().transpose() == p);
        }
    }
}

TEST_CASE("enumerate: fixed examples") {
    CHECK(enumerate_partitions(4, GroupFamily::Symplectic) ==
          std::vector<Partition>{parts({4}), parts({2, 2}), parts({2, 1, 1}),
                                 parts({1, 1, 1, 1})});
    CHECK(enumerate_partitions(3, GroupFamily::GeneralLinear) ==
          std::vector<Partition>{parts({3}), parts({2, 1}), parts({1, 1, 1})});
    CHECK(enumerate_partitions(2, GroupFamily::OddOrthogonal) ==
          std::vector<Partition>{parts({1, 1})});
    CHECK_THROWS_AS(enumerate_partitions(0, GroupFamily::GeneralLinear), domain_error);
}

TEST_CASE("enumerate: decreasing lexicographic order and validity") {
    for (long long n = 1; n <= 16; ++n) {
        for (GroupFamily family : {GroupFamily::GeneralLinear, GroupFamily::Symplectic,
                                   GroupFamily::OddOrthogonal, GroupFamily::EvenOrthogonal}) {
            auto list = enumerate_partitions(n, family);
            for (std::size_t i = 0; i + 1 < list.size(); ++i)
                CHECK(Partition::lex_greater(list[i], list[i + 1]));
            for (const Partition& p : list) {
                CHECK(p.sum() == n);
                CHECK(family_admits(family, p));
            }
        }
    }
}

TEST_CASE("enumerate: general-linear count matches the recurrence") {
    auto table = partition_count_table(18);
    for (long long n = 1; n <= 18; ++n)
        CHECK(static_cast<long long>(enumerate_partitions(n, GroupFamily::GeneralLinear).size()) ==
              table[static_cast<std::size_t>(n)]);
}

TEST_CASE("family validity rules") {
    CHECK(family_admits(GroupFamily::Symplectic, parts({2, 2})));
    CHECK(family_admits(GroupFamily::Symplectic, parts({3, 3, 1, 1})));
    CHECK_FALSE(family_admits(GroupFamily::Symplectic, parts({3, 1})));
    CHECK(family_admits(GroupFamily::OddOrthogonal, parts({3, 3, 1})));
    CHECK_FALSE(family_admits(GroupFamily::OddOrthogonal, parts({2, 1})));
    CHECK(family_admits(GroupFamily::EvenOrthogonal, parts({2, 2})));
    CHECK_FALSE(family_admits(GroupFamily::EvenOrthogonal, parts({2, 1, 1})));
    CHECK(family_admits(GroupFamily::GeneralLinear, parts({3, 1})));
}

TEST_CASE("dominance: examples") {
    CHECK(dominance_leq(parts({2, 1, 1}), parts({4})));
    CHECK_FALSE(dominance_leq(parts({4}), parts({2, 2})));
    CHECK(dominance_leq(parts({2, 2}), parts({3, 1})));
    CHECK_THROWS_AS(dominance_leq(parts({2, 1}), parts({4})), domain_error);
}

TEST_CASE("dominance is a partial order with (n) maximal and (1^n) minimal") {
    for (long long n = 2; n <= 9; ++n) {
        auto list = enumerate_partitions(n, GroupFamily::GeneralLinear);
        const Partition top = parts({n});
        const Partition bottom = parts(std::vector<long long>(static_cast<std::size_t>(n), 1));
        for (const Partition& p : list) {
            CHECK(dominance_leq(p, p));
            CHECK(dominance_leq(p, top));
            CHECK(dominance_leq(bottom, p));
            if (dominance_leq(p, top) && dominance_leq(top, p))
                CHECK(p == top);
        }
        for (const Partition& p : list)
            for (const Partition& q : list) {
                if (dominance_leq(p, q) && dominance_leq(q, p))
                    CHECK(p == q);
                for (const Partition& r : list)
                    if (dominance_leq(p, q) && dominance_leq(q, r))
                        CHECK(dominance_leq(p, r));
            }
    }
}

TEST_CASE("round trip: to_string then parse") {
    for (long long n = 1; n <= 14; ++n)
        for (const Partition& p : enumerate_partitions(n, GroupFamily::GeneralLinear))
            CHECK(Partition::parse(p.to_string()) == p);
}

TEST_CASE("run and multiplicity helpers") {
    const Partition p = parts({6, 6, 2, 2});
    CHECK(p.all_parts_even());
    CHECK(p.all_multiplicities_even());
    CHECK(p.distinct_part_count() == 2);
    CHECK(p.multiplicity(6) == 2);
    CHECK(p.multiplicity(4) == 0);
    CHECK_FALSE(parts({6, 5, 5}).all_parts_even());
    CHECK_FALSE(parts({6, 5, 5}).all_multiplicities_even());
    CHECK(parts({8, 4, 2, 1, 1}).distinct_part_count() == 4);
    CHECK(parts({2, 1, 1}).odd_part_count() == 2);
}
