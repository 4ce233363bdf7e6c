#include "liedim/group.hpp"

#include <algorithm>
#include <cctype>

#include "liedim/errors.hpp"

namespace liedim {

namespace {

long long base_dimension(GroupFamily family, long long size) {
    switch (family) {
        case GroupFamily::GeneralLinear: return size * size;
        case GroupFamily::Symplectic: return size * (size + 1) / 2;
        case GroupFamily::OddOrthogonal:
        case GroupFamily::EvenOrthogonal: return size * (size - 1) / 2;
    }
    return 0;
}

long long parse_arg(std::string_view text, std::string_view original) {
    if (text.empty())
        throw parse_error("missing size argument in group '" + std::string(original) + "'");
    long long v = 0;
    for (char c : text) {
        if (c < '0' || c > '9')
            throw parse_error("group size must be a positive integer in '" + std::string(original) + "'");
        v = v * 10 + (c - '0');
    }
    if (v < 1)
        throw parse_error("group size must be positive in '" + std::string(original) + "'");
    return v;
}

} // namespace

GroupDescriptor make_group(GroupFamily family, long long size) {
    if (size < 1)
        throw domain_error("group size must be positive, got " + std::to_string(size));
    if (family == GroupFamily::Symplectic && size % 2 != 0)
        throw domain_error("Sp size must be even, got " + std::to_string(size));
    if (family == GroupFamily::OddOrthogonal && size % 2 == 0)
        throw domain_error("odd orthogonal size must be odd, got " + std::to_string(size));
    if (family == GroupFamily::EvenOrthogonal && size % 2 != 0)
        throw domain_error("even orthogonal size must be even, got " + std::to_string(size));
    return GroupDescriptor{family, size, {}};
}

GroupDescriptor GroupDescriptor::parse(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);

    GroupModifiers mods;
    if (s.starts_with("Res2:")) {
        mods.restrict_scalars_degree2 = true;
        s.remove_prefix(5);
    }
    if (s.ends_with("/GL1")) {
        mods.quotient_by_gl1 = true;
        s.remove_suffix(4);
    }

    std::size_t open = s.find('(');
    if (open == std::string_view::npos || s.empty() || s.back() != ')')
        throw parse_error("group must look like NAME(size), got '" + std::string(text) + "'");
    std::string_view name = s.substr(0, open);
    long long arg = parse_arg(s.substr(open + 1, s.size() - open - 2), text);

    GroupFamily family;
    if (name == "GL" || name == "SL" || name == "PGL") {
        family = GroupFamily::GeneralLinear;
        if (name != "GL")
            mods.projective_center = true;
    } else if (name == "Sp" || name == "GSp" || name == "PGSp") {
        family = GroupFamily::Symplectic;
        if (arg % 2 != 0)
            throw parse_error("Sp size must be even in '" + std::string(text) + "'");
        if (name != "Sp")
            mods.similitude = true;
        if (name == "PGSp")
            mods.projective_center = true;
    } else if (name == "SO") {
        family = arg % 2 == 0 ? GroupFamily::EvenOrthogonal : GroupFamily::OddOrthogonal;
    } else {
        throw parse_error("unknown group family '" + std::string(name) + "' in '" + std::string(text) + "'");
    }
    return GroupDescriptor{family, arg, mods};
}

std::string GroupDescriptor::to_string() const {
    std::string name;
    switch (family) {
        case GroupFamily::GeneralLinear:
            name = modifiers.projective_center ? "PGL" : "GL";
            break;
        case GroupFamily::Symplectic:
            if (modifiers.similitude)
                name = modifiers.projective_center ? "PGSp" : "GSp";
            else
                name = "Sp";
            break;
        case GroupFamily::OddOrthogonal:
        case GroupFamily::EvenOrthogonal:
            name = "SO";
            break;
    }
    std::string out;
    if (modifiers.restrict_scalars_degree2)
        out += "Res2:";
    out += name + "(" + std::to_string(size) + ")";
    if (modifiers.quotient_by_gl1)
        out += "/GL1";
    return out;
}

long long group_dimension(const GroupDescriptor& g) {
    make_group(g.family, g.size); // parity validation
    long long dim = base_dimension(g.family, g.size);
    if (g.modifiers.restrict_scalars_degree2)
        dim *= 2;
    if (g.modifiers.similitude)
        dim += 1;
    if (g.modifiers.projective_center)
        dim -= 1;
    if (g.modifiers.quotient_by_gl1)
        dim -= 1;
    if (dim < 0)
        throw domain_error("group " + g.to_string() + " has negative dimension");
    return dim;
}

long long unipotent_radical_dim(const GroupDescriptor& g, const LeviComposition& levi) {
    make_group(g.family, g.size);
    const long long budget = g.rank();

    long long block_sum = 0;
    long long levi_dim = 0;
    for (long long b : levi.gl_blocks) {
        if (b < 1)
            throw domain_error("Levi blocks must be positive, got " + std::to_string(b));
        block_sum += b;
        levi_dim += b * b;
    }
    if (block_sum > budget)
        throw domain_error("Levi composition (sum " + std::to_string(block_sum) +
                           ") exceeds the flag budget " + std::to_string(budget) +
                           " of " + g.to_string());

    if (g.family == GroupFamily::GeneralLinear) {
        long long rest = g.size - block_sum;
        levi_dim += rest * rest;
    } else {
        long long residual_dim = 0;
        if (g.family == GroupFamily::Symplectic) {
            long long r = budget - block_sum;
            residual_dim = 2 * r * r + r;
        } else {
            long long s = g.size - 2 * block_sum;
            residual_dim = s * (s - 1) / 2;
        }
        if (residual_dim > 0 && !levi.keeps_classical_factor)
            throw domain_error("Levi composition of " + g.to_string() +
                               " leaves a residual classical factor; set keeps_classical_factor");
        levi_dim += residual_dim;
    }

    long long diff = base_dimension(g.family, g.size) - levi_dim;
    if (diff < 0 || diff % 2 != 0)
        throw domain_error("inconsistent Levi composition for " + g.to_string());
    long long radical = diff / 2;
    if (g.modifiers.restrict_scalars_degree2)
        radical *= 2;
    return radical;
}

} // namespace liedim
