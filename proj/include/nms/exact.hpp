#pragma once

#include <string>
#include <vector>

#include "nms/errors.hpp"

namespace nms {

// The set G_{m,n} of exact RNMS words: generation-n outputs of the
// concatenation rule, all of the same length l_{m,n}.
struct ExactWordSet {
    int m;
    int n;
    long long length;
    std::vector<std::string> words;  // sorted, deduplicated
};

// l_{m,n}: l_{m,1} = l_{m,2} = 1, l_{m,n} = m*l_{m,n-1} + l_{m,n-2}.
long long exact_length(int m, int n);

// Materialises G_{m,n} by the concatenation rule: for each branch i, the
// (m+1)-fold product with G_{m,n-2} in slot i and G_{m,n-1} elsewhere, then a
// deduplicating union. Throws SizeLimit once more than max_words distinct
// words have been collected (the count reached so far is a lower bound for
// |G_{m,n}|). Enumerable range at the default budget: n <= 8 for m = 1.
ExactWordSet exact_words(int m, int n, std::size_t max_words = 1000000);

// All realisations of the random variable zeta_m^k(b), deduplicated per level.
std::vector<std::string> enumerate_realisations(int m, int k, std::size_t max_words = 1000000);

// Checks G_{m,n} == {realisations of zeta_m^{n-1}(b)} by exhaustive
// enumeration of both sides.
bool process_equality_check(int m, int n, std::size_t max_words = 1000000);

struct EntropyResult {
    int m;
    int truncation;
    double value;       // nats per letter
    double tail_bound;  // certified bound on the truncation error
};

// Topological entropy H_m as the prefactor (lambda-1)/(1-lambda') times the
// series sum_{i>=2} log(m(i-1)+1)/lambda^i. The tail bound majorises
// log(m(i-1)+1) by log(m(T+1)) + (i-T-1)/(T+1) and sums the resulting
// geometric/arithmetico-geometric series in closed form.
EntropyResult entropy_series(int m, int truncation);

// log|G_{m,n}| / l_{m,n}; approaches H_m from below, slowly.
double entropy_empirical(int m, int n, std::size_t max_words = 1000000);

}  // namespace nms
