#include <doctest.h>

#include "liedim/orbit.hpp"
#include "liedim/root_system.hpp"

using namespace liedim;

namespace {

const GroupDescriptor gl3 = make_group(GroupFamily::GeneralLinear, 3);
const GroupDescriptor gl4 = make_group(GroupFamily::GeneralLinear, 4);
const GroupDescriptor sp4 = make_group(GroupFamily::Symplectic, 4);

Partition parts(std::vector<long long> v) { return Partition(std::move(v)); }

std::vector<GroupFamily> all_families() {
    return {GroupFamily::GeneralLinear, GroupFamily::Symplectic, GroupFamily::OddOrthogonal,
            GroupFamily::EvenOrthogonal};
}

bool family_size_ok(GroupFamily family, long long n) {
    if (family == GroupFamily::Symplectic || family == GroupFamily::EvenOrthogonal)
        return n % 2 == 0;
    if (family == GroupFamily::OddOrthogonal)
        return n % 2 == 1;
    return true;
}

// GK dimension recomputed through the root grading, independent of the
// closed forms.
long long filtration_gk(const GroupDescriptor& g, const Partition& p) {
    auto profile = filtration_profile(g, p);
    return profile.dim_n2 + profile.weight_one_count / 2;
}

} // namespace

TEST_CASE("orbit dimension: fixed values") {
    CHECK(orbit_dimension(sp4, parts({2, 2})) == 6);
    CHECK(orbit_dimension(sp4, parts({2, 1, 1})) == 4);
    CHECK(orbit_dimension(sp4, parts({4})) == 8);
    CHECK(orbit_dimension(gl4, parts({4})) == 12);
    CHECK(orbit_dimension(gl3, parts({2, 1})) == 4);
    CHECK(orbit_dimension(make_group(GroupFamily::Symplectic, 16), parts({5, 5, 3, 3})) == 106);
    CHECK(orbit_dimension(make_group(GroupFamily::Symplectic, 16), parts({6, 6, 2, 2})) == 112);
    CHECK(gk_dimension(make_group(GroupFamily::GeneralLinear, 5), parts({5})) == 10);
    CHECK(gk_dimension(make_group(GroupFamily::Symplectic, 6), parts({6})) == 9);
    CHECK(gk_dimension(make_group(GroupFamily::EvenOrthogonal, 6), parts({5, 1})) == 6);
}

TEST_CASE("zero orbit has dimension zero in every family") {
    for (GroupFamily family : all_families())
        for (long long n = 1; n <= 10; ++n) {
            if (!family_size_ok(family, n))
                continue;
            const auto g = make_group(family, n);
            CHECK(orbit_dimension(g, parts(std::vector<long long>(static_cast<std::size_t>(n), 1))) ==
                  0);
        }
}

TEST_CASE("minimal symplectic orbit (2, 1^{2N-2}) has dimension 2N") {
    for (long long N = 1; N <= 12; ++N) {
        std::vector<long long> v{2};
        v.insert(v.end(), static_cast<std::size_t>(2 * N - 2), 1);
        CHECK(orbit_dimension(make_group(GroupFamily::Symplectic, 2 * N), parts(std::move(v))) ==
              2 * N);
    }
}

TEST_CASE("orbit validation errors") {
    CHECK_THROWS_AS(orbit_dimension(sp4, parts({3, 1})), domain_error);
    CHECK_THROWS_AS(orbit_dimension(sp4, parts({2, 1})), domain_error);
    CHECK_THROWS_AS(orbit_dimension(GroupDescriptor::parse("PGSp(4)"), parts({2, 2})),
                    domain_error);
    CHECK_THROWS_AS(orbit_dimension(make_group(GroupFamily::EvenOrthogonal, 6), parts({6})),
                    domain_error);
}

TEST_CASE("weight multiset and torus exponents") {
    CHECK(weight_multiset(parts({2, 2})) == std::vector<long long>{1, 1, -1, -1});
    CHECK(weight_multiset(parts({2, 1})) == std::vector<long long>{1, 0, -1});
    CHECK(torus_exponents(sp4, parts({2, 2})) == std::vector<long long>{1, 1});
    CHECK(torus_exponents(sp4, parts({4})) == std::vector<long long>{3, 1});
    CHECK(torus_exponents(gl3, parts({2, 1})) == std::vector<long long>{1, 0, -1});
    // odd orthogonal drops the middle zero
    CHECK(torus_exponents(make_group(GroupFamily::OddOrthogonal, 5), parts({2, 2, 1})) ==
          std::vector<long long>{1, 1});
}

TEST_CASE("filtration profile: fixed examples") {
    auto p22 = filtration_profile(sp4, parts({2, 2}));
    CHECK(p22.weight_vector == std::vector<long long>{1, 1});
    CHECK(p22.dim_n1 == 3);
    CHECK(p22.dim_n2 == 3);
    CHECK(p22.weight_one_count == 0);
    CHECK(p22.weight_histogram == std::map<long long, long long>{{0, 1}, {2, 3}});

    auto p211 = filtration_profile(sp4, parts({2, 1, 1}));
    CHECK(p211.dim_n2 == 1);
    CHECK(p211.weight_one_count == 2);
    CHECK(p211.weight_histogram == std::map<long long, long long>{{0, 1}, {1, 2}, {2, 1}});

    auto g21 = filtration_profile(gl3, parts({2, 1}));
    CHECK(g21.dim_n2 == 1);
    CHECK(g21.weight_one_count == 2);
    CHECK(g21.dim_n2 + g21.weight_one_count / 2 == 2);

    CHECK(p22.dim_n(1) == 3);
    CHECK(p22.dim_n(3) == 0);
}

TEST_CASE("fourier-jacobi dimension") {
    CHECK(fourier_jacobi_dim(sp4, parts({2, 1, 1})) == 3);
    CHECK(fourier_jacobi_dim(sp4, parts({2, 2})) == 3);
    CHECK(fourier_jacobi_dim(sp4, parts({1, 1, 1, 1})) == 0);
}

TEST_CASE("oracle equivalence: closed forms match the root grading up to size 14") {
    for (long long n = 1; n <= 14; ++n)
        for (GroupFamily family : all_families()) {
            if (!family_size_ok(family, n))
                continue;
            const auto g = make_group(family, n);
            for (const Partition& p : enumerate_partitions(n, family)) {
                CAPTURE(p.to_string());
                CHECK(gk_dimension(g, p) == filtration_gk(g, p));
            }
        }
}

TEST_CASE("weight-one root count is even for every valid orbit") {
    for (long long n = 1; n <= 12; ++n)
        for (GroupFamily family : all_families()) {
            if (!family_size_ok(family, n))
                continue;
            const auto g = make_group(family, n);
            for (const Partition& p : enumerate_partitions(n, family))
                CHECK(filtration_profile(g, p).weight_one_count % 2 == 0);
        }
}

TEST_CASE("dominance order implies orbit dimension order") {
    for (long long n = 2; n <= 12; ++n)
        for (GroupFamily family : all_families()) {
            if (!family_size_ok(family, n))
                continue;
            const auto g = make_group(family, n);
            auto list = enumerate_partitions(n, family);
            for (const Partition& p : list)
                for (const Partition& q : list)
                    if (dominance_leq(p, q))
                        CHECK(orbit_dimension(g, p) <= orbit_dimension(g, q));
        }
}

TEST_CASE("regular orbit GK dimension equals the positive root count") {
    for (long long n = 1; n <= 12; ++n)
        for (GroupFamily family : all_families()) {
            if (!family_size_ok(family, n))
                continue;
            const auto g = make_group(family, n);
            const Partition top = enumerate_partitions(n, family).front();
            CHECK(gk_dimension(g, top) ==
                  static_cast<long long>(positive_roots(family, n)->positive.size()));
        }
}

TEST_CASE("make_orbit populates dim, gk and odd part count") {
    auto o = make_orbit(sp4, parts({2, 1, 1}));
    CHECK(o.dim == 4);
    CHECK(o.gk == 2);
    CHECK(o.odd_part_count == 2);
}
