#pragma once

// Exact-rational van der Corput exponent-pair calculus: the A/B processes,
// the error-exponent objective (57+52k-42l)/(97+82k-72l), delta = 3/5 - objective,
// and breadth-first search over {A,B}-words applied to a list of base pairs.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rslab {

// Reduced fraction over int64 with overflow-checked arithmetic.  Pair
// denominators grow at most geometrically in the word length, so 64 bits
// cover every word the search precondition (depth <= 30) allows; any
// overflow throws instead of wrapping.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d);
    static Rational of(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const;
    bool operator<=(const Rational& o) const { return *this < o || *this == o; }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const;
};

struct ExponentPair {
    Rational k;
    Rational l;
    // Derivation word: base pair name, then the processes in application
    // order, e.g. "(0,1):BAAA".  Conditional base pairs (Bourgain) carry a flag.
    std::string word;
    bool conditional = false;

    bool valid() const;   // 0 <= k <= 1/2 <= l <= 1 and k + l <= 1
};

ExponentPair trivial_pair();                       // (0,1)
ExponentPair make_pair(Rational k, Rational l, std::string name, bool conditional = false);

// A-process: (k,l) -> (k/(2k+2), (k+l+1)/(2k+2))
ExponentPair apply_A(const ExponentPair& p);
// B-process: (k,l) -> (l-1/2, k+1/2); an involution
ExponentPair apply_B(const ExponentPair& p);

// (57 + 52k - 42l)/(97 + 82k - 72l); throws std::domain_error if the
// denominator is not positive.
Rational exponent_objective(const ExponentPair& p);

// delta = 3/5 - exponent_objective(p)
Rational delta_from_pair(const ExponentPair& p);

struct SearchResult {
    ExponentPair best;
    Rational delta;
    std::size_t distinct_pairs = 0;   // after value dedup
};

// Enumerates all {A,B}-words of length <= max_depth applied to every base,
// deduplicating by exact pair value; returns the pair maximizing delta with
// ties broken by shortest then lexicographically smallest word.
SearchResult search_best_pair(const std::vector<ExponentPair>& bases, int max_depth);

}  // namespace rslab
