#include "liedim/root_system.hpp"

#include <map>
#include <mutex>

#include "liedim/errors.hpp"

namespace liedim {

std::vector<long long> Root::coordinates(std::size_t rank) const {
    std::vector<long long> v(rank, 0);
    v[static_cast<std::size_t>(i)] = ci;
    if (j >= 0)
        v[static_cast<std::size_t>(j)] = cj;
    return v;
}

namespace {

RootSystem build_system(GroupFamily family, long long size) {
    RootSystem rs;
    long long rank = 0;
    switch (family) {
        case GroupFamily::GeneralLinear:
            rs.type = RootType::A;
            rank = size;
            break;
        case GroupFamily::Symplectic:
            if (size % 2 != 0)
                throw domain_error("symplectic size must be even, got " + std::to_string(size));
            rs.type = RootType::C;
            rank = size / 2;
            break;
        case GroupFamily::OddOrthogonal:
            if (size % 2 == 0)
                throw domain_error("odd orthogonal size must be odd, got " + std::to_string(size));
            rs.type = RootType::B;
            rank = size / 2;
            break;
        case GroupFamily::EvenOrthogonal:
            if (size % 2 != 0)
                throw domain_error("even orthogonal size must be even, got " + std::to_string(size));
            rs.type = RootType::D;
            rank = size / 2;
            break;
    }
    rs.rank = rank;

    const int r = static_cast<int>(rank);
    for (int i = 0; i < r; ++i) {
        for (int j = i + 1; j < r; ++j) {
            rs.positive.push_back(Root{i, j, 1, -1});
            if (rs.type != RootType::A)
                rs.positive.push_back(Root{i, j, 1, 1});
        }
    }
    if (rs.type == RootType::B)
        for (int i = 0; i < r; ++i)
            rs.positive.push_back(Root{i, -1, 1, 0});
    if (rs.type == RootType::C)
        for (int i = 0; i < r; ++i)
            rs.positive.push_back(Root{i, -1, 2, 0});
    return rs;
}

} // namespace

std::shared_ptr<const RootSystem> positive_roots(GroupFamily family, long long size) {
    if (size < 1)
        throw domain_error("group size must be positive, got " + std::to_string(size));

    static std::mutex mutex;
    static std::map<std::pair<GroupFamily, long long>, std::shared_ptr<const RootSystem>> cache;

    const auto key = std::make_pair(family, size);
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end())
            return it->second;
    }
    auto built = std::make_shared<const RootSystem>(build_system(family, size));
    std::lock_guard<std::mutex> lock(mutex);
    // Idempotent: a racing builder's result is identical, keep the first.
    auto [it, inserted] = cache.emplace(key, std::move(built));
    return it->second;
}

} // namespace liedim
