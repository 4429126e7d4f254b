#include "rslab/exppair.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

namespace rslab {

namespace {

std::int64_t checked(__int128 v, const char* what) {
    if (v > INT64_MAX || v < INT64_MIN)
        throw std::overflow_error(std::string("rational overflow in ") + what);
    return static_cast<std::int64_t>(v);
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) { n = -n; d = -d; }
    std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    num = n;
    den = d;
}

Rational Rational::operator+(const Rational& o) const {
    __int128 n = (__int128)num * o.den + (__int128)o.num * den;
    __int128 d = (__int128)den * o.den;
    // reduce in 128 bits before the range check
    __int128 a = n < 0 ? -n : n, b = d;
    while (b) { __int128 t = a % b; a = b; b = t; }
    if (a > 1) { n /= a; d /= a; }
    return Rational(checked(n, "+"), checked(d, "+"));
}

Rational Rational::operator-(const Rational& o) const {
    return *this + Rational(-o.num, o.den);
}

Rational Rational::operator*(const Rational& o) const {
    std::int64_t g1 = std::gcd(num < 0 ? -num : num, o.den);
    std::int64_t g2 = std::gcd(o.num < 0 ? -o.num : o.num, den);
    __int128 n = (__int128)(num / g1) * (o.num / g2);
    __int128 d = (__int128)(den / g2) * (o.den / g1);
    return Rational(checked(n, "*"), checked(d, "*"));
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num == 0) throw std::domain_error("rational division by zero");
    return *this * Rational(o.den, o.num);
}

bool Rational::operator<(const Rational& o) const {
    return (__int128)num * o.den < (__int128)o.num * den;
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

bool ExponentPair::valid() const {
    const Rational zero(0, 1), half(1, 2), one(1, 1);
    return zero <= k && k <= half && half <= l && l <= one && k + l <= one;
}

ExponentPair trivial_pair() { return {Rational(0, 1), Rational(1, 1), "(0,1)", false}; }

ExponentPair make_pair(Rational k, Rational l, std::string name, bool conditional) {
    ExponentPair p{k, l, std::move(name), conditional};
    if (!p.valid()) throw std::domain_error("not an exponent pair: (" + k.str() + "," + l.str() + ")");
    return p;
}

ExponentPair apply_A(const ExponentPair& p) {
    Rational d = Rational(2, 1) * p.k + Rational(2, 1);
    ExponentPair q;
    q.k = p.k / d;
    q.l = (p.k + p.l + Rational(1, 1)) / d;
    q.word = p.word + "A";
    q.conditional = p.conditional;
    return q;
}

ExponentPair apply_B(const ExponentPair& p) {
    ExponentPair q;
    q.k = p.l - Rational(1, 2);
    q.l = p.k + Rational(1, 2);
    q.word = p.word + "B";
    q.conditional = p.conditional;
    return q;
}

Rational exponent_objective(const ExponentPair& p) {
    Rational num = Rational(57, 1) + Rational(52, 1) * p.k - Rational(42, 1) * p.l;
    Rational den = Rational(97, 1) + Rational(82, 1) * p.k - Rational(72, 1) * p.l;
    if (!(Rational(0, 1) < den)) throw std::domain_error("degenerate objective denominator");
    return num / den;
}

Rational delta_from_pair(const ExponentPair& p) {
    return Rational(3, 5) - exponent_objective(p);
}

SearchResult search_best_pair(const std::vector<ExponentPair>& bases, int max_depth) {
    if (max_depth < 0 || max_depth > 30)
        throw std::invalid_argument("search depth must be in [0,30]");

    // Dedup by exact value.  BFS level order plus a lexicographically sorted
    // frontier guarantees the first word reaching a value is the shortest,
    // lexicographically smallest one, independent of base-list order for the
    // winning pair (ties across bases fall back to word comparison).
    std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t>, std::string> seen;
    std::vector<ExponentPair> frontier;

    auto key = [](const ExponentPair& p) {
        return std::make_tuple(p.k.num, p.k.den, p.l.num, p.l.den);
    };

    SearchResult best{trivial_pair(), Rational(-1000, 1), 0};
    auto consider = [&](const ExponentPair& p) {
        Rational d = delta_from_pair(p);
        bool better = best.delta < d;
        if (!better && d == best.delta) {
            const std::string& a = p.word;
            const std::string& b = best.best.word;
            better = a.size() < b.size() || (a.size() == b.size() && a < b);
        }
        if (better) { best.best = p; best.delta = d; }
    };

    // Insert each level's candidates in (length, word) order so the word kept
    // for a value never depends on base-list order.
    auto word_less = [](const ExponentPair& a, const ExponentPair& b) {
        return a.word.size() != b.word.size() ? a.word.size() < b.word.size() : a.word < b.word;
    };
    auto insert_level = [&](std::vector<ExponentPair> candidates) {
        std::sort(candidates.begin(), candidates.end(), word_less);
        std::vector<ExponentPair> kept;
        for (auto& c : candidates) {
            if (!seen.emplace(key(c), c.word).second) continue;
            consider(c);
            kept.push_back(std::move(c));
        }
        return kept;
    };

    std::vector<ExponentPair> level = bases;
    for (const auto& b : level)
        if (!b.valid()) throw std::domain_error("invalid base pair " + b.word);
    frontier = insert_level(std::move(level));

    for (int depth = 0; depth < max_depth && !frontier.empty(); ++depth) {
        std::vector<ExponentPair> candidates;
        candidates.reserve(frontier.size() * 2);
        for (const auto& p : frontier) {
            for (ExponentPair c : {apply_A(p), apply_B(p)})
                if (c.valid()) candidates.push_back(std::move(c));
        }
        frontier = insert_level(std::move(candidates));
    }

    best.distinct_pairs = seen.size();
    return best;
}

}  // namespace rslab
