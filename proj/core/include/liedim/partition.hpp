#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "liedim/errors.hpp"

namespace liedim {

// Values for identifiers that may appear in exponent expressions, e.g.
// parsing "2^{2n} 1^{2m}" with {{"n",2},{"m",1}} yields (2,2,2,2,1,1).
using Bindings = std::map<std::string, long long, std::less<>>;

/* An integer partition in canonical form: a non-empty, weakly decreasing
 * list of positive parts.  Values are immutable after construction. */
class Partition {
public:
    // Canonicalizes (sorts descending).  Throws domain_error on an empty
    // list or a part < 1.
    explicit Partition(std::vector<long long> parts);

    /* Accepted syntaxes:
     *   [a,b,c,...]                 comma-separated positive integers
     *   BASE BASE^EXP BASE^{EXPR}   whitespace-separated factors
     * EXPR is integer arithmetic (+ - * parentheses) over bound
     * identifiers.  Both syntaxes canonicalize to the same value. */
    static Partition parse(std::string_view text, const Bindings& bindings = {});

    const std::vector<long long>& parts() const { return parts_; }
    long long sum() const { return sum_; }
    std::size_t part_count() const { return parts_.size(); }

    // Conjugate partition (column lengths of the Young diagram).
    Partition transpose() const;

    long long odd_part_count() const;
    long long multiplicity(long long value) const;
    std::size_t distinct_part_count() const;
    bool all_parts_even() const;
    bool all_multiplicities_even() const;

    // (value, multiplicity) runs in descending value order.
    std::vector<std::pair<long long, long long>> runs() const;

    // Exponent form with descending bases, e.g. "5^2 3^2", "2 1^2", "4".
    std::string to_string() const;

    bool operator==(const Partition& other) const { return parts_ == other.parts_; }

    // Decreasing lexicographic order on part lists.
    static bool lex_greater(const Partition& a, const Partition& b);

private:
    std::vector<long long> parts_;
    long long sum_ = 0;
};

enum class GroupFamily { GeneralLinear, Symplectic, OddOrthogonal, EvenOrthogonal };

std::string_view family_name(GroupFamily family);

/* Partition validity per family: Symplectic requires every odd part to
 * have even multiplicity; the orthogonal families require every even
 * part to have even multiplicity; GeneralLinear admits everything. */
bool family_admits(GroupFamily family, const Partition& p);

// All family-valid partitions of n in decreasing lexicographic order.
// Throws domain_error for n < 1.
std::vector<Partition> enumerate_partitions(long long n, GroupFamily family);

// Dominance order: true iff every prefix sum of p is <= that of q.
// Throws domain_error when p and q partition different integers.
bool dominance_leq(const Partition& p, const Partition& q);

} // namespace liedim
