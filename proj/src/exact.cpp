#include "nms/exact.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "nms/ring.hpp"
#include "nms/subst.hpp"

namespace nms {

long long exact_length(int m, int n) {
    if (m < 1 || n < 1) throw ConfigError("exact_length: need m >= 1, n >= 1");
    long long prev = 1, cur = 1;  // l_{m,1}, l_{m,2}
    for (int j = 3; j <= n; ++j) {
        long long next = m * cur + prev;
        prev = cur;
        cur = next;
    }
    return n == 1 ? prev : cur;
}

ExactWordSet exact_words(int m, int n, std::size_t max_words) {
    if (m < 1 || n < 1) throw ConfigError("exact_words: need m >= 1, n >= 1");

    std::vector<std::string> prev{"b"};  // G_{m,1}
    std::vector<std::string> cur{"a"};   // G_{m,2}
    for (int gen = 3; gen <= n; ++gen) {
        std::unordered_set<std::string> next;
        // slot i holds a factor from G_{m,gen-2}, all other slots from G_{m,gen-1}
        for (int i = 0; i <= m; ++i) {
            std::vector<std::size_t> idx(static_cast<std::size_t>(m) + 1, 0);
            for (;;) {
                std::string w;
                for (int j = 0; j <= m; ++j) {
                    const auto& pool = (j == i) ? prev : cur;
                    w += pool[idx[static_cast<std::size_t>(j)]];
                }
                next.insert(std::move(w));
                if (next.size() > max_words)
                    throw SizeLimit("exact_words: |G_{" + std::to_string(m) + "," +
                                        std::to_string(gen) + "}| exceeds budget; at least " +
                                        std::to_string(next.size()) + " words",
                                    next.size());
                std::size_t pos = 0;
                while (pos <= static_cast<std::size_t>(m)) {
                    const auto& pool = (static_cast<int>(pos) == i) ? prev : cur;
                    if (++idx[pos] < pool.size()) break;
                    idx[pos++] = 0;
                }
                if (pos > static_cast<std::size_t>(m)) break;
            }
        }
        prev = std::move(cur);
        cur.assign(next.begin(), next.end());
    }

    ExactWordSet out;
    out.m = m;
    out.n = n;
    out.length = exact_length(m, n);
    out.words = (n == 1) ? std::move(prev) : std::move(cur);
    std::sort(out.words.begin(), out.words.end());
    return out;
}

std::vector<std::string> enumerate_realisations(int m, int k, std::size_t max_words) {
    if (m < 1 || k < 0) throw ConfigError("enumerate_realisations: need m >= 1, k >= 0");
    std::vector<std::string> cur{"b"};
    for (int j = 0; j < k; ++j) {
        std::unordered_set<std::string> next;
        for (const auto& w : cur) {
            for (auto& img : branch_images(m, w)) next.insert(std::move(img));
            if (next.size() > max_words)
                throw SizeLimit("enumerate_realisations: realisation set exceeds budget", next.size());
        }
        cur.assign(next.begin(), next.end());
    }
    std::sort(cur.begin(), cur.end());
    return cur;
}

bool process_equality_check(int m, int n, std::size_t max_words) {
    if (n < 1) throw ConfigError("process_equality_check: need n >= 1");
    auto lhs = enumerate_realisations(m, n - 1, max_words);
    auto rhs = exact_words(m, n, max_words);
    return lhs == rhs.words;
}

EntropyResult entropy_series(int m, int truncation) {
    if (m < 1 || truncation < 2) throw ConfigError("entropy_series: need m >= 1, truncation >= 2");
    const double lam = lambda(m);
    const double lamc = lambda_conj(m);
    const double pref = (lam - 1.0) / (1.0 - lamc);

    double sum = 0.0;
    double inv_pow = 1.0 / (lam * lam);  // lambda^{-i}, starting at i=2
    for (int i = 2; i <= truncation; ++i) {
        sum += std::log(static_cast<double>(m) * (i - 1) + 1.0) * inv_pow;
        inv_pow /= lam;
    }

    // log(m(i-1)+1) <= log(m i) <= log(m(T+1)) + (i-T-1)/(T+1) for i > T
    const double r = 1.0 / lam;
    const double A = std::log(static_cast<double>(m) * (truncation + 1));
    const double B = 1.0 / (truncation + 1);
    const double rT1 = std::pow(r, truncation + 1);
    const double tail = rT1 * (A / (1.0 - r) + B * r / ((1.0 - r) * (1.0 - r)));

    return {m, truncation, pref * sum, pref * tail};
}

double entropy_empirical(int m, int n, std::size_t max_words) {
    auto g = exact_words(m, n, max_words);
    return std::log(static_cast<double>(g.words.size())) / static_cast<double>(g.length);
}

}  // namespace nms
