#include "liedim/partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

namespace liedim {

namespace {

std::string quoted(std::string_view token) {
    return "'" + std::string(token) + "'";
}

/* Recursive-descent evaluator for brace exponents: integer arithmetic
 * with + - * and parentheses over bound identifiers. */
class ExprParser {
public:
    ExprParser(std::string_view text, const Bindings& bindings)
        : text_(text), bindings_(bindings) {}

    long long parse() {
        long long v = sum();
        skip_ws();
        if (pos_ != text_.size())
            throw parse_error("unexpected token " + quoted(text_.substr(pos_)) + " in exponent expression");
        return v;
    }

private:
    long long sum() {
        long long v = product();
        for (;;) {
            skip_ws();
            if (consume('+')) v += product();
            else if (consume('-')) v -= product();
            else return v;
        }
    }

    long long product() {
        long long v = unary();
        for (;;) {
            skip_ws();
            if (consume('*')) {
                v *= unary();
                continue;
            }
            // juxtaposition, as in "2n" or "2(k+1)"
            if (pos_ < text_.size() &&
                (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
                 text_[pos_] == '(')) {
                v *= primary();
                continue;
            }
            return v;
        }
    }

    long long unary() {
        skip_ws();
        if (consume('-')) return -unary();
        return primary();
    }

    long long primary() {
        skip_ws();
        if (pos_ >= text_.size())
            throw parse_error("exponent expression ends unexpectedly");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            long long v = sum();
            skip_ws();
            if (!consume(')'))
                throw parse_error("missing ')' in exponent expression");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long long v = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                v = v * 10 + (text_[pos_++] - '0');
            return v;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string_view name = text_.substr(start, pos_ - start);
            auto it = bindings_.find(name);
            if (it == bindings_.end())
                throw parse_error("unbound identifier " + quoted(name) + " in exponent expression");
            return it->second;
        }
        throw parse_error("unexpected token " + quoted(text_.substr(pos_, 1)) + " in exponent expression");
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool consume(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string_view text_;
    const Bindings& bindings_;
    std::size_t pos_ = 0;
};

long long parse_uint(std::string_view token) {
    if (token.empty())
        throw parse_error("empty integer token");
    long long v = 0;
    for (char c : token) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw parse_error("expected integer, got " + quoted(token));
        v = v * 10 + (c - '0');
    }
    return v;
}

std::vector<long long> parse_list_syntax(std::string_view body) {
    std::vector<long long> parts;
    std::size_t pos = 0;
    for (;;) {
        std::size_t comma = body.find(',', pos);
        std::string_view token = body.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
        while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front()))) token.remove_prefix(1);
        while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back()))) token.remove_suffix(1);
        if (token.empty())
            throw parse_error("empty entry in partition list");
        long long v = parse_uint(token);
        if (v < 1)
            throw parse_error("partition part must be positive, got " + quoted(token));
        parts.push_back(v);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return parts;
}

std::vector<long long> parse_factor_syntax(std::string_view text, const Bindings& bindings) {
    std::vector<long long> parts;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos >= text.size()) break;
        std::size_t start = pos;
        if (!std::isdigit(static_cast<unsigned char>(text[pos])))
            throw parse_error("expected partition part, got " + quoted(text.substr(pos, 1)));
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        long long base = parse_uint(text.substr(start, pos - start));
        if (base < 1)
            throw parse_error("partition part must be positive, got " + quoted(text.substr(start, pos - start)));
        long long exponent = 1;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            if (pos < text.size() && text[pos] == '{') {
                std::size_t close = text.find('}', pos);
                if (close == std::string_view::npos)
                    throw parse_error("missing '}' in exponent");
                exponent = ExprParser(text.substr(pos + 1, close - pos - 1), bindings).parse();
                pos = close + 1;
            } else {
                std::size_t estart = pos;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                    ++pos;
                if (pos == estart)
                    throw parse_error("missing exponent after '^' in " +
                                      quoted(text.substr(start, pos - start + 1)));
                exponent = parse_uint(text.substr(estart, pos - estart));
            }
            if (exponent < 0)
                throw parse_error("negative exponent in factor " + quoted(text.substr(start, pos - start)));
        }
        for (long long i = 0; i < exponent; ++i)
            parts.push_back(base);
    }
    return parts;
}

} // namespace

Partition::Partition(std::vector<long long> parts) : parts_(std::move(parts)) {
    if (parts_.empty())
        throw domain_error("partition must have at least one part");
    for (long long p : parts_)
        if (p < 1)
            throw domain_error("partition parts must be positive, got " + std::to_string(p));
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    sum_ = std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

Partition Partition::parse(std::string_view text, const Bindings& bindings) {
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos)
        throw parse_error("empty partition input");
    std::size_t last = text.find_last_not_of(" \t\r\n");
    std::string_view body = text.substr(first, last - first + 1);

    std::vector<long long> parts;
    if (body.front() == '[') {
        if (body.back() != ']')
            throw parse_error("missing ']' in partition list");
        parts = parse_list_syntax(body.substr(1, body.size() - 2));
    } else {
        parts = parse_factor_syntax(body, bindings);
    }
    if (parts.empty())
        throw parse_error("partition " + quoted(text) + " has no parts");
    return Partition(std::move(parts));
}

Partition Partition::transpose() const {
    std::vector<long long> columns(static_cast<std::size_t>(parts_.front()), 0);
    for (long long p : parts_)
        for (long long j = 0; j < p; ++j)
            ++columns[static_cast<std::size_t>(j)];
    return Partition(std::move(columns));
}

long long Partition::odd_part_count() const {
    return std::count_if(parts_.begin(), parts_.end(), [](long long p) { return p % 2 != 0; });
}

long long Partition::multiplicity(long long value) const {
    return std::count(parts_.begin(), parts_.end(), value);
}

std::size_t Partition::distinct_part_count() const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i)
        if (i == 0 || parts_[i] != parts_[i - 1])
            ++n;
    return n;
}

bool Partition::all_parts_even() const {
    return std::all_of(parts_.begin(), parts_.end(), [](long long p) { return p % 2 == 0; });
}

bool Partition::all_multiplicities_even() const {
    for (const auto& [value, mult] : runs())
        if (mult % 2 != 0)
            return false;
    return true;
}

std::vector<std::pair<long long, long long>> Partition::runs() const {
    std::vector<std::pair<long long, long long>> out;
    for (long long p : parts_) {
        if (!out.empty() && out.back().first == p)
            ++out.back().second;
        else
            out.emplace_back(p, 1);
    }
    return out;
}

std::string Partition::to_string() const {
    std::string out;
    for (const auto& [value, mult] : runs()) {
        if (!out.empty()) out += ' ';
        out += std::to_string(value);
        if (mult > 1) {
            out += '^';
            out += std::to_string(mult);
        }
    }
    return out;
}

bool Partition::lex_greater(const Partition& a, const Partition& b) {
    return std::lexicographical_compare(b.parts_.begin(), b.parts_.end(),
                                        a.parts_.begin(), a.parts_.end());
}

std::string_view family_name(GroupFamily family) {
    switch (family) {
        case GroupFamily::GeneralLinear: return "general linear";
        case GroupFamily::Symplectic: return "symplectic";
        case GroupFamily::OddOrthogonal: return "odd orthogonal";
        case GroupFamily::EvenOrthogonal: return "even orthogonal";
    }
    return "?";
}

bool family_admits(GroupFamily family, const Partition& p) {
    if (family == GroupFamily::GeneralLinear)
        return true;
    for (const auto& [value, mult] : p.runs()) {
        if (family == GroupFamily::Symplectic) {
            if (value % 2 != 0 && mult % 2 != 0)
                return false;
        } else {
            if (value % 2 == 0 && mult % 2 != 0)
                return false;
        }
    }
    return true;
}

namespace {

// Runs with strictly decreasing values; a run's multiplicity is final when
// placed, so family parity can prune the subtree immediately.
bool run_admissible(GroupFamily family, long long value, long long mult) {
    switch (family) {
        case GroupFamily::GeneralLinear: return true;
        case GroupFamily::Symplectic: return value % 2 == 0 || mult % 2 == 0;
        case GroupFamily::OddOrthogonal:
        case GroupFamily::EvenOrthogonal: return value % 2 != 0 || mult % 2 == 0;
    }
    return false;
}

void enumerate_rec(long long remaining, long long max_value, GroupFamily family,
                   std::vector<long long>& current, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(current));
        return;
    }
    for (long long v = std::min(max_value, remaining); v >= 1; --v) {
        for (long long mult = remaining / v; mult >= 1; --mult) {
            if (!run_admissible(family, v, mult))
                continue;
            current.insert(current.end(), static_cast<std::size_t>(mult), v);
            enumerate_rec(remaining - v * mult, v - 1, family, current, out);
            current.resize(current.size() - static_cast<std::size_t>(mult));
        }
    }
}

} // namespace

std::vector<Partition> enumerate_partitions(long long n, GroupFamily family) {
    if (n < 1)
        throw domain_error("cannot enumerate partitions of " + std::to_string(n));
    std::vector<Partition> out;
    std::vector<long long> current;
    enumerate_rec(n, n, family, current, out);
    return out;
}

bool dominance_leq(const Partition& p, const Partition& q) {
    if (p.sum() != q.sum())
        throw domain_error("dominance order compares partitions of the same integer (got " +
                           std::to_string(p.sum()) + " and " + std::to_string(q.sum()) + ")");
    const auto& a = p.parts();
    const auto& b = q.parts();
    long long pa = 0, pb = 0;
    std::size_t len = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < len; ++i) {
        pa += i < a.size() ? a[i] : 0;
        pb += i < b.size() ? b[i] : 0;
        if (pa > pb)
            return false;
    }
    return true;
}

} // namespace liedim
