// Command-line surface for the random noble means toolkit.
//
// Subcommands: words, legal, entropy, freqs, birkhoff, lift, strip, diffract.
// Every run is deterministic given its full configuration (including the RNG
// seed), and every output carries a provenance header with the config hash.
// Exit codes: 0 success, 2 configuration error, 3 resource-limit error.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nms/config.hpp"
#include "nms/diffraction.hpp"
#include "nms/exact.hpp"
#include "nms/geometry.hpp"
#include "nms/io.hpp"
#include "nms/measure.hpp"
#include "nms/ring.hpp"
#include "nms/subst.hpp"

namespace {

using nms::RunConfig;
using json = nlohmann::json;

struct OutputSink {
    std::ofstream file;
    std::ostream* os = &std::cout;

    explicit OutputSink(const std::string& path) {
        if (!path.empty()) {
            file.open(path);
            if (!file) throw std::runtime_error("cannot open output file: " + path);
            os = &file;
        }
    }
    std::ostream& stream() { return *os; }
};

void add_common_flags(CLI::App* cmd, RunConfig& cfg, std::string& config_path) {
    cmd->add_option("--config", config_path, "JSON config file; flags override its values");
    cmd->add_option("--m", cfg.m, "family parameter m >= 1");
    cmd->add_option("--probs", cfg.probs, "branch probabilities p_0..p_m (default uniform)");
    cmd->add_option("--rng-seed", cfg.seed, "RNG seed");
    cmd->add_option("--out", cfg.out, "output path (default stdout)");
    cmd->add_option("--format", cfg.format, "output format: csv, json or svg");
}

// Re-parse pattern: a config file supplies defaults, command-line flags win.
// CLI11 has already written flag values into cfg by the time the callback
// runs, so load the file into a fresh config and copy over only the fields
// whose flags were not given.
void merge_config_file(const CLI::App* cmd, RunConfig& cfg, const std::string& path) {
    if (path.empty()) return;
    std::ifstream in(path);
    if (!in) throw nms::ConfigError("config: cannot read file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    const RunConfig base = nms::parse_config(buf.str());
    if (cmd->count("--m") == 0) cfg.m = base.m;
    if (cmd->count("--probs") == 0) cfg.probs = base.probs;
    if (cmd->count("--rng-seed") == 0) cfg.seed = base.seed;
    if (cmd->count("--out") == 0) cfg.out = base.out;
    if (cmd->count("--format") == 0) cfg.format = base.format;
}

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed)
        if (cfg.format == f) return;
    throw nms::ConfigError("config: format '" + cfg.format + "' not supported here");
}

void emit_json(OutputSink& sink, const RunConfig& cfg, json payload) {
    payload["provenance"] = nms::io::provenance_json(cfg);
    sink.stream() << payload.dump(2) << '\n';
}

// ---- words ---------------------------------------------------------------

void run_words(const RunConfig& cfg, int gen, int iters, const std::string& seed_word,
               long long max_words) {
    require_format(cfg, {"csv", "json"});
    OutputSink sink(cfg.out);
    if (gen > 0) {
        const auto set = nms::exact_words(cfg.m, gen, max_words);
        if (cfg.format == "json") {
            emit_json(sink, cfg, nms::io::to_json(set, true));
        } else {
            sink.stream() << nms::io::provenance_line(cfg) << "\nword\n";
            for (const auto& w : set.words) sink.stream() << w << '\n';
        }
        return;
    }
    nms::RandomSubst rs(cfg.m, cfg.probs, cfg.seed);
    const nms::Word w = rs.iterate(nms::Word{seed_word}, iters);
    if (cfg.format == "json") {
        emit_json(sink, cfg,
                  json{{"m", cfg.m}, {"iters", iters}, {"seed_word", seed_word},
                       {"length", w.size()}, {"word", w.letters}});
    } else {
        sink.stream() << nms::io::provenance_line(cfg) << "\nword\n" << w.letters << '\n';
    }
}

// ---- legal ---------------------------------------------------------------

void run_legal(const RunConfig& cfg, int ell) {
    require_format(cfg, {"csv", "json"});
    const auto words = nms::legal_words(cfg.m, ell);
    OutputSink sink(cfg.out);
    if (cfg.format == "json") {
        emit_json(sink, cfg,
                  json{{"m", cfg.m}, {"ell", ell}, {"complexity", words.size()},
                       {"words", words}});
    } else {
        sink.stream() << nms::io::provenance_line(cfg) << "\nword\n";
        for (const auto& w : words) sink.stream() << w << '\n';
    }
}

// ---- entropy -------------------------------------------------------------

void run_entropy(const RunConfig& cfg, int m_max, int truncation) {
    require_format(cfg, {"csv", "json"});
    if (m_max < cfg.m) throw nms::ConfigError("entropy: --m-max must be >= --m");
    std::vector<nms::EntropyResult> rows;
    for (int m = cfg.m; m <= m_max; ++m) rows.push_back(nms::entropy_series(m, truncation));
    OutputSink sink(cfg.out);
    if (cfg.format == "json") {
        json arr = json::array();
        for (const auto& r : rows) arr.push_back(nms::io::to_json(r));
        emit_json(sink, cfg, json{{"entropy", arr}});
    } else {
        sink.stream() << nms::io::provenance_line(cfg) << "\nm,value,tail_bound\n";
        sink.stream().precision(15);
        for (const auto& r : rows)
            sink.stream() << r.m << ',' << r.value << ',' << r.tail_bound << '\n';
    }
}

// ---- freqs ---------------------------------------------------------------

void run_freqs(const RunConfig& cfg, int ell) {
    require_format(cfg, {"csv", "json"});
    const auto sys = nms::build_induced(cfg.m, cfg.probs, ell);
    OutputSink sink(cfg.out);
    if (cfg.format == "json") {
        emit_json(sink, cfg, nms::io::to_json(sys));
    } else {
        sink.stream() << nms::io::provenance_line(cfg) << "\nword,measure\n";
        sink.stream().precision(15);
        for (std::size_t j = 0; j < sys.alphabet.size(); ++j)
            sink.stream() << sys.alphabet[j] << ',' << sys.pf_right[j] << '\n';
    }
}

// ---- birkhoff ------------------------------------------------------------

void run_birkhoff(const RunConfig& cfg, const std::string& word, long long window,
                  int trials, long long offset) {
    require_format(cfg, {"csv", "json"});
    const auto sys = nms::build_induced(cfg.m, cfg.probs, static_cast<int>(word.size()));
    const auto rep = nms::birkhoff_check(sys, word, window, trials, cfg.seed, offset);
    OutputSink sink(cfg.out);
    if (cfg.format == "json") {
        emit_json(sink, cfg, nms::io::to_json(rep));
    } else {
        sink.stream() << nms::io::provenance_line(cfg)
                      << "\nword,measure,empirical_mean,standard_error,deviation,pass\n";
        sink.stream().precision(15);
        sink.stream() << rep.word << ',' << rep.measure << ',' << rep.empirical_mean << ','
                      << rep.standard_error << ',' << rep.deviation << ','
                      << (rep.pass ? 1 : 0) << '\n';
    }
}

// ---- lift ----------------------------------------------------------------

void run_lift(const RunConfig& cfg, int iters, int hist_bins) {
    nms::RandomSubst rs(cfg.m, cfg.probs, cfg.seed);
    const auto ps = nms::realize(rs.iterate(nms::Word{"b"}, iters), cfg.m);
    const auto pts = nms::lift(ps);
    OutputSink sink(cfg.out);
    if (hist_bins > 0) {
        const double half = 1.0 - nms::lambda_conj(cfg.m);  // super-window radius
        const auto h = nms::histogram(pts, hist_bins, -half, half);
        if (cfg.format == "svg")
            nms::io::svg_histogram_plot(sink.stream(), h, "internal coordinates by letter");
        else if (cfg.format == "json")
            emit_json(sink, cfg,
                      json{{"lo", h.lo}, {"hi", h.hi}, {"count_a", h.count_a},
                           {"count_b", h.count_b}, {"a_fraction", h.a_fraction()}});
        else
            nms::io::write_histogram_csv(sink.stream(), cfg, h);
        return;
    }
    require_format(cfg, {"csv", "json"});
    if (cfg.format == "json") {
        json arr = json::array();
        for (const auto& pt : pts)
            arr.push_back({{"physical", pt.physical}, {"internal", pt.internal},
                           {"letter", std::string(1, pt.letter)}});
        emit_json(sink, cfg, json{{"points", arr}});
    } else {
        nms::io::write_points_csv(sink.stream(), cfg, pts);
    }
}

// ---- strip ---------------------------------------------------------------

void run_strip(const RunConfig& cfg, int pq_max) {
    const auto ds = nms::strip_export(cfg.m, pq_max);
    OutputSink sink(cfg.out);
    if (cfg.format == "json") {
        json windows = json::array();
        for (const auto& w : ds.windows) windows.push_back(nms::io::to_json(w));
        json lattice = json::array();
        for (const auto& pt : ds.lattice)
            lattice.push_back({{"physical", pt.physical}, {"internal", pt.internal}});
        emit_json(sink, cfg, json{{"m", ds.m}, {"windows", windows}, {"lattice", lattice}});
    } else if (cfg.format == "svg") {
        std::vector<double> x, y;
        for (const auto& pt : ds.lattice) {
            x.push_back(pt.physical);
            y.push_back(pt.internal);
        }
        nms::io::svg_stem_plot(sink.stream(), x, y, "lattice in physical x internal space");
    } else {
        nms::io::write_strip_csv(sink.stream(), cfg, ds);
    }
}

// ---- diffract ------------------------------------------------------------

void run_diffract(const RunConfig& cfg, const std::string& mode, int pq_max, double kmax,
                  int kpoints, int truncation, int iters, int depth) {
    namespace dif = nms::diffraction;
    if (cfg.m != 1)
        throw nms::ConfigError("diffract: implemented for the golden mean family m = 1");
    OutputSink sink(cfg.out);

    if (mode == "pp") {
        const auto ks = dif::fourier_module_points(pq_max, kmax);
        std::vector<double> amps, xs;
        for (const auto& k : ks) {
            amps.push_back(dif::pp_amplitude(k, depth, cfg.probs).amplitude);
            xs.push_back(k.k());
        }
        if (cfg.format == "svg")
            nms::io::svg_stem_plot(sink.stream(), xs, amps, "pure-point amplitudes");
        else if (cfg.format == "json") {
            json arr = json::array();
            for (std::size_t j = 0; j < ks.size(); ++j)
                arr.push_back({{"k", ks[j].k()}, {"p", ks[j].p}, {"q", ks[j].q},
                               {"amplitude", amps[j]}});
            emit_json(sink, cfg, json{{"pp", arr}});
        } else
            nms::io::write_pp_csv(sink.stream(), cfg, ks, amps);
        return;
    }

    if (mode == "ac") {
        std::vector<double> grid;
        for (int j = 0; j < kpoints; ++j)
            grid.push_back(-kmax + 2.0 * kmax * j / (kpoints - 1));
        const auto ac = dif::ac_density(grid, truncation, cfg.probs);
        if (cfg.format == "svg")
            nms::io::svg_polyline_plot(sink.stream(), ac.k, ac.phi,
                                       "absolutely continuous density");
        else if (cfg.format == "json")
            emit_json(sink, cfg, nms::io::to_json(ac));
        else
            nms::io::write_ac_csv(sink.stream(), cfg, ac);
        return;
    }

    if (mode == "spectrum") {
        nms::RandomSubst rs(cfg.m, cfg.probs, cfg.seed);
        const auto ps = nms::realize(rs.iterate(nms::Word{"b"}, iters), cfg.m);
        std::vector<double> grid;
        for (int j = 0; j < kpoints; ++j)
            grid.push_back(-kmax + 2.0 * kmax * j / (kpoints - 1));
        const auto spec = dif::empirical_spectrum(ps, grid);
        if (cfg.format == "svg") {
            std::vector<double> x, y;
            for (const auto& s : spec) {
                x.push_back(s.k);
                y.push_back(s.intensity);
            }
            nms::io::svg_polyline_plot(sink.stream(), x, y, "single-sample spectrum");
        } else if (cfg.format == "json") {
            json arr = json::array();
            for (const auto& s : spec) arr.push_back({{"k", s.k}, {"intensity", s.intensity}});
            emit_json(sink, cfg, json{{"spectrum", arr}});
        } else
            nms::io::write_spectrum_csv(sink.stream(), cfg, spec);
        return;
    }

    throw nms::ConfigError("diffract: --mode must be pp, ac or spectrum");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"random noble means substitutions: words, frequencies, geometry, diffraction"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string config_path;

    // words
    auto* words = app.add_subcommand("words", "exact generations or random realisations");
    add_common_flags(words, cfg, config_path);
    int gen = 0, iters = 0;
    bool exact_flag = false;
    std::string seed_word = "b";
    long long max_words = 1000000;
    words->add_option("--gen", gen, "list the exact word set of generation n");
    words->add_flag("--exact", exact_flag, "alias flag documenting the --gen listing");
    words->add_option("--iters", iters, "iterate the random substitution this many times");
    words->add_option("--seed-word", seed_word, "seed word for --iters (default b)");
    words->add_option("--max-words", max_words, "size budget for --gen listings");

    // legal
    auto* legal = app.add_subcommand("legal", "legal words of a given length");
    add_common_flags(legal, cfg, config_path);
    int ell = 1;
    legal->add_option("--ell", ell, "word length");

    // entropy
    auto* entropy = app.add_subcommand("entropy", "topological entropy table");
    add_common_flags(entropy, cfg, config_path);
    int m_max = 0, truncation = 60;
    entropy->add_option("--m-max", m_max, "largest m (default: just --m)");
    entropy->add_option("--truncation", truncation, "series truncation (default 60)");

    // freqs
    auto* freqs = app.add_subcommand("freqs", "word frequencies of the stationary measure");
    add_common_flags(freqs, cfg, config_path);
    int freqs_ell = 1;
    freqs->add_option("--ell", freqs_ell, "word length");

    // birkhoff
    auto* birkhoff = app.add_subcommand("birkhoff", "ergodic-average spot check");
    add_common_flags(birkhoff, cfg, config_path);
    std::string bword = "a";
    long long bwindow = 100000, boffset = 0;
    int btrials = 20;
    birkhoff->add_option("--word", bword, "cylinder word");
    birkhoff->add_option("--window", bwindow, "window length in letters");
    birkhoff->add_option("--trials", btrials, "independent realisations");
    birkhoff->add_option("--offset", boffset, "window offset from the origin");

    // lift
    auto* liftc = app.add_subcommand("lift", "control points lifted to internal space");
    add_common_flags(liftc, cfg, config_path);
    int lift_iters = 10, hist_bins = 0;
    liftc->add_option("--iters", lift_iters, "substitution iterations on seed b");
    liftc->add_option("--hist-bins", hist_bins, "emit a histogram with this many bins");

    // strip
    auto* strip = app.add_subcommand("strip", "lattice box with the window stack");
    add_common_flags(strip, cfg, config_path);
    int pq_max = 20;
    strip->add_option("--pq-max", pq_max, "coefficient box bound");

    // diffract
    auto* diffract = app.add_subcommand("diffract", "diffraction data (m = 1)");
    add_common_flags(diffract, cfg, config_path);
    std::string mode = "pp";
    int dpq_max = 30, kpoints = 201, dtrunc = 40, diters = 16, depth = 40;
    double kmax = 3.0;
    diffract->add_option("--mode", mode, "pp | ac | spectrum");
    diffract->add_option("--pq-max", dpq_max, "module coefficient bound (pp)");
    diffract->add_option("--kmax", kmax, "k range bound");
    diffract->add_option("--kpoints", kpoints, "grid size (ac, spectrum)");
    diffract->add_option("--truncation", dtrunc, "series truncation (ac)");
    diffract->add_option("--iters", diters, "patch iterations (spectrum)");
    diffract->add_option("--depth", depth, "recursion depth (pp)");
    bool pp_flag = false, ac_flag = false, spectrum_flag = false;
    diffract->add_flag("--pp", pp_flag, "shorthand for --mode pp");
    diffract->add_flag("--ac", ac_flag, "shorthand for --mode ac");
    diffract->add_flag("--spectrum", spectrum_flag, "shorthand for --mode spectrum");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        CLI::App* cmd = app.get_subcommands().front();
        merge_config_file(cmd, cfg, config_path);
        cfg.finalize();
        if (cmd == words) {
            if (gen > 0 && iters > 0)
                throw nms::ConfigError("words: --gen and --iters are mutually exclusive");
            if (exact_flag && gen <= 0)
                throw nms::ConfigError("words: --exact requires --gen");
            run_words(cfg, gen, iters, seed_word, max_words);
        } else if (cmd == legal) {
            run_legal(cfg, ell);
        } else if (cmd == entropy) {
            run_entropy(cfg, m_max > 0 ? m_max : cfg.m, truncation);
        } else if (cmd == freqs) {
            run_freqs(cfg, freqs_ell);
        } else if (cmd == birkhoff) {
            run_birkhoff(cfg, bword, bwindow, btrials, boffset);
        } else if (cmd == liftc) {
            run_lift(cfg, lift_iters, hist_bins);
        } else if (cmd == strip) {
            run_strip(cfg, pq_max);
        } else if (cmd == diffract) {
            if (ac_flag) mode = "ac";
            if (spectrum_flag) mode = "spectrum";
            if (pp_flag) mode = "pp";
            run_diffract(cfg, mode, dpq_max, kmax, kpoints, dtrunc, diters, depth);
        }
    } catch (const nms::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const nms::SizeLimit& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
