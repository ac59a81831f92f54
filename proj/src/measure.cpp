#include "nms/measure.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "nms/ring.hpp"

namespace nms {

std::size_t InducedSystem::index_of(const std::string& w) const {
    if (index_.empty())
        for (std::size_t i = 0; i < alphabet.size(); ++i) index_[alphabet[i]] = i;
    auto it = index_.find(w);
    if (it == index_.end())
        throw IllegalWord("word '" + w + "' is not in D_{" + std::to_string(m) + "," +
                          std::to_string(ell) + "}");
    return it->second;
}

namespace {

bool is_primitive(const std::vector<std::vector<double>>& mat) {
    const std::size_t n = mat.size();
    std::vector<std::vector<bool>> b(n, std::vector<bool>(n)), acc;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b[i][j] = mat[i][j] > 0.0;
    acc = b;
    // Wielandt bound: a primitive matrix has a strictly positive power by
    // exponent (n-1)^2 + 1.
    const std::size_t bound = (n - 1) * (n - 1) + 1;
    for (std::size_t e = 1; e <= bound; ++e) {
        bool all = true;
        for (std::size_t i = 0; i < n && all; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (!acc[i][j]) { all = false; break; }
        if (all) return true;
        std::vector<std::vector<bool>> next(n, std::vector<bool>(n, false));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                if (acc[i][k])
                    for (std::size_t j = 0; j < n; ++j)
                        if (b[k][j]) next[i][j] = true;
        acc = std::move(next);
    }
    return false;
}

std::string matrix_dump(const std::vector<std::vector<double>>& mat) {
    std::ostringstream os;
    for (const auto& row : mat) {
        for (double x : row) os << x << ' ';
        os << '\n';
    }
    return os.str();
}

}  // namespace

InducedSystem build_induced(int m, const std::vector<double>& probs, int ell) {
    if (ell < 1) throw ConfigError("build_induced: ell must be >= 1");
    validate_probs(m, probs);

    InducedSystem sys;
    sys.m = m;
    sys.ell = ell;
    sys.probs = probs;
    sys.alphabet = legal_words(m, ell);
    const std::size_t n = sys.alphabet.size();
    sys.matrix.assign(n, std::vector<double>(n, 0.0));

    std::vector<std::string> letter_images(static_cast<std::size_t>(m) + 1);
    for (int i = 0; i <= m; ++i) letter_images[static_cast<std::size_t>(i)] = NmsRule(m, i).image('a');

    for (std::size_t col = 0; col < n; ++col) {
        const std::string& v = sys.alphabet[col];
        std::vector<std::size_t> a_pos;
        for (std::size_t j = 0; j < v.size(); ++j)
            if (v[j] == 'a') a_pos.push_back(j);

        std::vector<int> choice(a_pos.size(), 0);
        for (;;) {
            double weight = 1.0;
            for (int c : choice) weight *= probs[static_cast<std::size_t>(c)];
            if (weight > 0.0) {
                std::string img;
                std::size_t ai = 0;
                std::size_t first_len = 0;
                for (std::size_t j = 0; j < v.size(); ++j) {
                    if (v[j] == 'b') {
                        img += 'a';
                        if (j == 0) first_len = 1;
                    } else {
                        const std::string& li = letter_images[static_cast<std::size_t>(choice[ai++])];
                        img += li;
                        if (j == 0) first_len = li.size();
                    }
                }
                // windows start at the positions contributed by the image of
                // the first letter of v
                for (std::size_t pos = 0; pos < first_len; ++pos) {
                    std::string u = img.substr(pos, static_cast<std::size_t>(ell));
                    sys.matrix[sys.index_of(u)][col] += weight;
                }
            }
            std::size_t pos = 0;
            while (pos < choice.size() && ++choice[pos] > m) choice[pos++] = 0;
            if (choice.empty() || pos == choice.size()) break;
        }
    }

    bool strictly_positive = std::all_of(probs.begin(), probs.end(), [](double p) { return p > 0.0; });
    if (strictly_positive && !is_primitive(sys.matrix))
        throw std::runtime_error("build_induced: induced matrix is not primitive:\n" +
                                 matrix_dump(sys.matrix));

    // Power iteration for the PF eigenpair.
    std::vector<double> x(n, 1.0 / static_cast<double>(n));
    double value = 0.0;
    const int max_sweeps = 100000;
    int sweep = 0;
    for (; sweep < max_sweeps; ++sweep) {
        std::vector<double> y(n, 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) y[i] += sys.matrix[i][j] * x[j];
        double norm = 0.0;
        for (double t : y) norm += t;
        if (norm <= 0.0) throw std::runtime_error("build_induced: power iteration collapsed");
        for (double& t : y) t /= norm;
        double diff = 0.0;
        for (std::size_t i = 0; i < n; ++i) diff = std::max(diff, std::abs(y[i] - x[i]));
        x = std::move(y);
        value = norm;
        if (diff < 1e-14) break;
    }
    if (sweep == max_sweeps)
        throw NotConverged("build_induced: power iteration did not converge");

    sys.pf_value = value;
    sys.pf_right = std::move(x);
    return sys;
}

double cylinder_measure(const InducedSystem& sys, const std::string& w) {
    return sys.pf_right[sys.index_of(w)];
}

BirkhoffReport birkhoff_check(const InducedSystem& sys, const std::string& w,
                              long long window_len, int trials,
                              std::uint64_t seed, long long offset) {
    if (trials < 2) throw ConfigError("birkhoff_check: need at least 2 trials");
    BirkhoffReport rep;
    rep.word = w;
    rep.measure = cylinder_measure(sys, w);
    rep.window = window_len;
    rep.trials = trials;
    rep.offset = offset;

    const long long ell = static_cast<long long>(w.size());
    std::vector<double> freqs;
    freqs.reserve(static_cast<std::size_t>(trials));
    for (int t = 0; t < trials; ++t) {
        RandomSubst rs(sys.m, sys.probs, seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(t));
        Word word{"aa", 1};  // seed a|a; aa is legal (checked by construction of D_{m,2})
        while (word.origin + offset < 0 ||
               static_cast<long long>(word.letters.size()) - word.origin <
                   offset + window_len + ell)
            word = rs.apply(word);
        const std::string& s = word.letters;
        const long long start = word.origin + offset;
        long long count = 0;
        for (long long j = start; j < start + window_len; ++j)
            if (s.compare(static_cast<std::size_t>(j), w.size(), w) == 0) ++count;
        freqs.push_back(static_cast<double>(count) / static_cast<double>(window_len));
    }

    double mean = 0.0;
    for (double f : freqs) mean += f;
    mean /= static_cast<double>(trials);
    double var = 0.0;
    for (double f : freqs) var += (f - mean) * (f - mean);
    var /= static_cast<double>(trials - 1);
    rep.empirical_mean = mean;
    rep.standard_error = std::sqrt(var / static_cast<double>(trials));
    rep.deviation = std::abs(mean - rep.measure);
    rep.pass = rep.deviation < 4.0 * rep.standard_error;
    return rep;
}

}  // namespace nms
