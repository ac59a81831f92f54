#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "nms/errors.hpp"

namespace nms {

// Finite word over {a, b}. `origin` marks the index of the first letter to the
// right of the seed boundary for two-sided words (-1 when unused). The seed
// a|a is Word{"aa", 1}.
struct Word {
    std::string letters;
    std::ptrdiff_t origin = -1;

    Word() = default;
    explicit Word(std::string s, std::ptrdiff_t o = -1) : letters(std::move(s)), origin(o) {}

    std::size_t size() const { return letters.size(); }
    bool operator==(const Word& o) const { return letters == o.letters && origin == o.origin; }
};

// Deterministic rule zeta_{m,i}: a -> a^i b a^{m-i}, b -> a.
struct NmsRule {
    int m;
    int i;

    NmsRule(int m_, int i_);
    std::string image(char c) const;
};

Word apply_nms(const NmsRule& rule, const Word& w);

// Letter-count transfer matrix M_m = [[m,1],[1,0]] applied to (count_a, count_b).
std::pair<long long, long long> letter_counts(const std::string& w);

// Random noble means substitution: each a independently picks zeta_{m,i} with
// probability probs[i], each b maps to a. Letters are visited left to right,
// one PRNG draw per a, so a fixed seed replays the same realisation.
class RandomSubst {
public:
    RandomSubst(int m, std::vector<double> probs, std::uint64_t seed);

    int m() const { return m_; }
    const std::vector<double>& probs() const { return probs_; }
    std::uint64_t seed() const { return seed_; }

    // Index i of the rule drawn for one a (inverse CDF on a 53-bit uniform;
    // portable across standard library implementations).
    int draw();

    Word apply(const Word& w);
    Word iterate(const Word& seed, int k);

    RandomSubst clone_with_seed(std::uint64_t seed) const;

private:
    int m_;
    std::vector<double> probs_;
    std::vector<double> cdf_;
    std::uint64_t seed_;
    std::mt19937_64 rng_;
};

// Probability vector sanity: size m+1, entries >= 0, sum within 1e-12 of 1.
// Degenerate (zero) entries are allowed; they select a deterministic sub-rule.
void validate_probs(int m, const std::vector<double>& probs);

// The set D_{m,ell} of zeta_m-legal words of length ell, independent of the
// probability vector. Computed by window closure: bootstrap from realisations
// of zeta_m^k(b) until they reach length ell, then close the set of
// ell-windows under all local branches. Throws NotConverged if the closure is
// still growing after max_rounds. Practical bound: ell <= 20 for m = 1,
// smaller for larger m (branch count is (m+1)^ell per word).
std::vector<std::string> legal_words(int m, int ell, int max_rounds = 64);

// C_m(ell) = |D_{m,ell}|.
long long complexity(int m, int ell, int max_rounds = 64);

bool is_legal(int m, const std::string& w, int max_rounds = 64);

// All branch images of w under the family m (every choice of rule per a),
// deduplicated. Helper shared by the closure and the exact-word machinery.
std::vector<std::string> branch_images(int m, const std::string& w);

}  // namespace nms
