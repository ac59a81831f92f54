#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "nms/errors.hpp"
#include "nms/subst.hpp"

namespace nms {

// Induced random substitution on the alphabet D_{m,ell} with its expected
// occurrence matrix and Perron-Frobenius data.
//
// Convention: matrix(u, v) = expected number of times the ell-window u is read
// off inside a random image of v, over the windows that start at the positions
// contributed by the image of the first letter of v (rows = u, columns = v).
// For ell = 1 this reproduces M_m = [[m,1],[1,0]] exactly.
struct InducedSystem {
    int m = 1;
    int ell = 1;
    std::vector<double> probs;
    std::vector<std::string> alphabet;         // sorted D_{m,ell}
    std::vector<std::vector<double>> matrix;   // [row u][col v]
    double pf_value = 0.0;
    std::vector<double> pf_right;              // strictly positive, sums to 1

    std::size_t index_of(const std::string& w) const;

private:
    mutable std::unordered_map<std::string, std::size_t> index_;
};

// Builds the expected induced matrix by exhaustive enumeration of the
// (m+1)^{count_a(v)} local branches per alphabet word, then extracts the PF
// eigenpair by power iteration (tolerance 1e-14, capped at 1e5 sweeps).
// With strictly positive probs the matrix is checked for primitivity via
// boolean powers up to the Wielandt bound and a hard error is raised if the
// check fails; degenerate probs skip the check (they restrict to a
// deterministic sub-hull whose extra letters get frequency zero).
InducedSystem build_induced(int m, const std::vector<double>& probs, int ell);

// mu_m(Z_k(w)) = pf_right entry of w; independent of the window position k.
// Throws IllegalWord for words outside D_{m,ell}.
double cylinder_measure(const InducedSystem& sys, const std::string& w);

struct BirkhoffReport {
    std::string word;
    double measure = 0.0;        // cylinder_measure prediction
    double empirical_mean = 0.0;
    double standard_error = 0.0;
    double deviation = 0.0;      // |empirical_mean - measure|
    long long window = 0;
    int trials = 0;
    long long offset = 0;
    bool pass = false;           // deviation < 4 * standard_error
};

// Monte-Carlo surrogate for the ergodic theorem: `trials` independent
// realisations grown from the seed a|a, empirical frequency of `w` over a
// window of `window_len` letters starting `offset` letters right of the
// origin, compared against the cylinder measure.
BirkhoffReport birkhoff_check(const InducedSystem& sys, const std::string& w,
                              long long window_len, int trials,
                              std::uint64_t seed, long long offset = 0);

}  // namespace nms
