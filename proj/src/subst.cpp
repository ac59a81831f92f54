#include "nms/subst.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <unordered_set>

namespace nms {

NmsRule::NmsRule(int m_, int i_) : m(m_), i(i_) {
    if (m < 1) throw ConfigError("NmsRule: m must be >= 1");
    if (i < 0 || i > m) throw ConfigError("NmsRule: need 0 <= i <= m");
}

std::string NmsRule::image(char c) const {
    if (c == 'b') return "a";
    std::string out(static_cast<std::size_t>(m) + 1, 'a');
    out[static_cast<std::size_t>(i)] = 'b';
    return out;
}

Word apply_nms(const NmsRule& rule, const Word& w) {
    Word out;
    out.letters.reserve(w.letters.size() * (static_cast<std::size_t>(rule.m) + 1));
    for (std::size_t j = 0; j < w.letters.size(); ++j) {
        if (w.origin == static_cast<std::ptrdiff_t>(j))
            out.origin = static_cast<std::ptrdiff_t>(out.letters.size());
        out.letters += rule.image(w.letters[j]);
    }
    return out;
}

std::pair<long long, long long> letter_counts(const std::string& w) {
    long long a = 0, b = 0;
    for (char c : w) (c == 'a' ? a : b)++;
    return {a, b};
}

void validate_probs(int m, const std::vector<double>& probs) {
    if (static_cast<int>(probs.size()) != m + 1)
        throw ConfigError("probability vector must have length m+1");
    double sum = 0.0;
    for (double p : probs) {
        if (!(p >= 0.0)) throw ConfigError("probabilities must be nonnegative");
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-12) throw ConfigError("probabilities must sum to 1");
}

RandomSubst::RandomSubst(int m, std::vector<double> probs, std::uint64_t seed)
    : m_(m), probs_(std::move(probs)), seed_(seed), rng_(seed) {
    if (m_ < 1) throw ConfigError("RandomSubst: m must be >= 1");
    validate_probs(m_, probs_);
    cdf_.resize(probs_.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < probs_.size(); ++i) {
        acc += probs_[i];
        cdf_[i] = acc;
    }
    cdf_.back() = 1.0;
}

int RandomSubst::draw() {
    const double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    for (std::size_t i = 0; i + 1 < cdf_.size(); ++i)
        if (u < cdf_[i]) return static_cast<int>(i);
    return m_;
}

Word RandomSubst::apply(const Word& w) {
    Word out;
    out.letters.reserve(w.letters.size() * (static_cast<std::size_t>(m_) + 1));
    for (std::size_t j = 0; j < w.letters.size(); ++j) {
        if (w.origin == static_cast<std::ptrdiff_t>(j))
            out.origin = static_cast<std::ptrdiff_t>(out.letters.size());
        if (w.letters[j] == 'b') {
            out.letters += 'a';
        } else {
            out.letters += NmsRule(m_, draw()).image('a');
        }
    }
    return out;
}

Word RandomSubst::iterate(const Word& seed, int k) {
    if (k < 0) throw ConfigError("iterate: k must be >= 0");
    Word w = seed;
    for (int j = 0; j < k; ++j) w = apply(w);
    return w;
}

RandomSubst RandomSubst::clone_with_seed(std::uint64_t seed) const {
    return RandomSubst(m_, probs_, seed);
}

std::vector<std::string> branch_images(int m, const std::string& w) {
    std::vector<std::size_t> a_pos;
    for (std::size_t j = 0; j < w.size(); ++j)
        if (w[j] == 'a') a_pos.push_back(j);

    std::vector<std::string> letter_images(static_cast<std::size_t>(m) + 1);
    for (int i = 0; i <= m; ++i) letter_images[static_cast<std::size_t>(i)] = NmsRule(m, i).image('a');

    std::vector<int> choice(a_pos.size(), 0);
    std::vector<std::string> out;
    std::unordered_set<std::string> seen;
    for (;;) {
        std::string img;
        std::size_t ai = 0;
        for (char c : w) {
            if (c == 'b') {
                img += 'a';
            } else {
                img += letter_images[static_cast<std::size_t>(choice[ai++])];
            }
        }
        if (seen.insert(img).second) out.push_back(std::move(img));
        // odometer over the (m+1)^{#a} local branches
        std::size_t pos = 0;
        while (pos < choice.size() && ++choice[pos] > m) choice[pos++] = 0;
        if (pos == choice.size()) break;
        if (choice.empty()) break;
    }
    return out;
}

namespace {

void insert_windows(const std::string& img, int ell, std::unordered_set<std::string>& set,
                    std::deque<std::string>& queue) {
    if (static_cast<int>(img.size()) < ell) return;
    for (std::size_t j = 0; j + static_cast<std::size_t>(ell) <= img.size(); ++j) {
        std::string win = img.substr(j, static_cast<std::size_t>(ell));
        if (set.insert(win).second) queue.push_back(std::move(win));
    }
}

}  // namespace

std::vector<std::string> legal_words(int m, int ell, int max_rounds) {
    if (ell < 1) throw ConfigError("legal_words: ell must be >= 1");

    // Bootstrap: iterate the full realisation set of zeta_m^k(b) until the
    // words are at least ell letters long.
    std::vector<std::string> reach{"b"};
    int rounds = 0;
    while (static_cast<int>(reach.front().size()) < ell) {
        if (++rounds > max_rounds)
            throw NotConverged("legal_words: bootstrap did not reach length ell");
        std::unordered_set<std::string> next;
        for (const auto& w : reach)
            for (auto& img : branch_images(m, w)) next.insert(std::move(img));
        reach.assign(next.begin(), next.end());
    }

    std::unordered_set<std::string> set;
    std::deque<std::string> queue;
    for (const auto& w : reach) insert_windows(w, ell, set, queue);

    // Closure: every ell-window of every branch image of a legal ell-word is
    // legal, and every legal ell-word eventually shows up this way.
    rounds = 0;
    while (!queue.empty()) {
        if (++rounds > max_rounds * 100000)
            throw NotConverged("legal_words: closure did not stabilise");
        std::string w = std::move(queue.front());
        queue.pop_front();
        for (const auto& img : branch_images(m, w)) insert_windows(img, ell, set, queue);
    }

    std::vector<std::string> out(set.begin(), set.end());
    std::sort(out.begin(), out.end());
    return out;
}

long long complexity(int m, int ell, int max_rounds) {
    return static_cast<long long>(legal_words(m, ell, max_rounds).size());
}

bool is_legal(int m, const std::string& w, int max_rounds) {
    if (w.empty()) return false;
    auto legal = legal_words(m, static_cast<int>(w.size()), max_rounds);
    return std::binary_search(legal.begin(), legal.end(), w);
}

}  // namespace nms
