#include "nms/io.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace nms::io {

std::string provenance_line(const RunConfig& cfg) {
    std::ostringstream os;
    os << "# config-hash: " << std::hex << config_hash(cfg) << std::dec
       << " config: " << emit_config(cfg);
    return os.str();
}

nlohmann::json provenance_json(const RunConfig& cfg) {
    std::ostringstream os;
    os << std::hex << config_hash(cfg);
    return {{"config", nlohmann::json::parse(emit_config(cfg))}, {"config_hash", os.str()}};
}

nlohmann::json to_json(const ExactWordSet& set, bool include_words) {
    nlohmann::json j{{"m", set.m}, {"n", set.n}, {"length", set.length},
                     {"count", set.words.size()}};
    if (include_words) j["words"] = set.words;
    return j;
}

nlohmann::json to_json(const EntropyResult& r) {
    return {{"m", r.m}, {"truncation", r.truncation}, {"value", r.value},
            {"tail_bound", r.tail_bound}};
}

nlohmann::json to_json(const InducedSystem& sys) {
    return {{"m", sys.m},      {"ell", sys.ell},        {"probs", sys.probs},
            {"alphabet", sys.alphabet}, {"matrix", sys.matrix},
            {"pf_value", sys.pf_value}, {"pf_right", sys.pf_right}};
}

nlohmann::json to_json(const BirkhoffReport& rep) {
    return {{"word", rep.word},
            {"measure", rep.measure},
            {"empirical_mean", rep.empirical_mean},
            {"standard_error", rep.standard_error},
            {"deviation", rep.deviation},
            {"window", rep.window},
            {"trials", rep.trials},
            {"offset", rep.offset},
            {"pass", rep.pass}};
}

nlohmann::json to_json(const Window& w) {
    const char* kind = w.kind == Window::Kind::Super      ? "super"
                       : w.kind == Window::Kind::Generic  ? "generic"
                                                          : "singular";
    return {{"kind", kind},
            {"m", w.m},
            {"i", w.i},
            {"seed", w.seed},
            {"lo", w.lo_value()},
            {"hi", w.hi_value()},
            {"lo_closed", w.lo.closed},
            {"hi_closed", w.hi.closed}};
}

nlohmann::json to_json(const diffraction::AcDensity& ac) {
    return {{"k", ac.k}, {"phi", ac.phi}, {"truncation", ac.truncation},
            {"tail_estimate", ac.tail_estimate}};
}

void write_points_csv(std::ostream& os, const RunConfig& cfg,
                      const std::vector<LiftedPoint>& pts) {
    os << provenance_line(cfg) << "\nphysical,internal,letter\n";
    os << std::setprecision(15);
    for (const auto& pt : pts)
        os << pt.physical << ',' << pt.internal << ',' << pt.letter << '\n';
}

void write_histogram_csv(std::ostream& os, const RunConfig& cfg, const Histogram& h) {
    os << provenance_line(cfg) << "\nbin_lo,bin_hi,count_a,count_b\n";
    os << std::setprecision(15);
    const double step = (h.hi - h.lo) / static_cast<double>(h.count_a.size());
    for (std::size_t j = 0; j < h.count_a.size(); ++j)
        os << h.lo + step * static_cast<double>(j) << ','
           << h.lo + step * static_cast<double>(j + 1) << ',' << h.count_a[j] << ','
           << h.count_b[j] << '\n';
}

void write_strip_csv(std::ostream& os, const RunConfig& cfg, const StripDataset& strip) {
    os << provenance_line(cfg) << "\nphysical,internal\n";
    os << std::setprecision(15);
    for (const auto& pt : strip.lattice) os << pt.physical << ',' << pt.internal << '\n';
}

void write_ac_csv(std::ostream& os, const RunConfig& cfg, const diffraction::AcDensity& ac) {
    os << provenance_line(cfg) << "\nk,phi\n";
    os << std::setprecision(15);
    for (std::size_t j = 0; j < ac.k.size(); ++j) os << ac.k[j] << ',' << ac.phi[j] << '\n';
}

void write_pp_csv(std::ostream& os, const RunConfig& cfg,
                  const std::vector<diffraction::FourierPoint>& ks,
                  const std::vector<double>& amplitudes) {
    os << provenance_line(cfg) << "\nk,amplitude,p,q\n";
    os << std::setprecision(15);
    for (std::size_t j = 0; j < ks.size(); ++j)
        os << ks[j].k() << ',' << amplitudes[j] << ',' << ks[j].p << ',' << ks[j].q << '\n';
}

void write_spectrum_csv(std::ostream& os, const RunConfig& cfg,
                        const std::vector<diffraction::SpectrumSample>& samples) {
    os << provenance_line(cfg) << "\nk,intensity\n";
    os << std::setprecision(15);
    for (const auto& s : samples) os << s.k << ',' << s.intensity << '\n';
}

namespace {

constexpr int kWidth = 900;
constexpr int kHeight = 420;
constexpr int kMargin = 45;

struct Mapper {
    double xmin, xmax, ymin, ymax;

    double X(double x) const {
        return kMargin + (x - xmin) / (xmax - xmin) * (kWidth - 2 * kMargin);
    }
    double Y(double y) const {
        return kHeight - kMargin - (y - ymin) / (ymax - ymin) * (kHeight - 2 * kMargin);
    }
};

Mapper fit(const std::vector<double>& x, const std::vector<double>& y) {
    Mapper m{0, 1, 0, 1};
    if (!x.empty()) {
        m.xmin = *std::min_element(x.begin(), x.end());
        m.xmax = *std::max_element(x.begin(), x.end());
        m.ymin = std::min(0.0, *std::min_element(y.begin(), y.end()));
        m.ymax = *std::max_element(y.begin(), y.end());
    }
    if (m.xmax == m.xmin) m.xmax = m.xmin + 1;
    if (m.ymax == m.ymin) m.ymax = m.ymin + 1;
    return m;
}

void svg_open(std::ostream& os, const Mapper& m, const std::string& title) {
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
       << kHeight << "\">\n"
       << "<text x=\"" << kWidth / 2 << "\" y=\"20\" text-anchor=\"middle\">" << title
       << "</text>\n"
       << "<line x1=\"" << kMargin << "\" y1=\"" << m.Y(0.0) << "\" x2=\"" << kWidth - kMargin
       << "\" y2=\"" << m.Y(0.0) << "\" stroke=\"black\"/>\n"
       << "<line x1=\"" << m.X(m.xmin) << "\" y1=\"" << kMargin << "\" x2=\"" << m.X(m.xmin)
       << "\" y2=\"" << kHeight - kMargin << "\" stroke=\"black\"/>\n";
}

}  // namespace

void svg_stem_plot(std::ostream& os, const std::vector<double>& x,
                   const std::vector<double>& y, const std::string& title) {
    const Mapper m = fit(x, y);
    svg_open(os, m, title);
    for (std::size_t j = 0; j < x.size(); ++j)
        os << "<line x1=\"" << m.X(x[j]) << "\" y1=\"" << m.Y(0.0) << "\" x2=\"" << m.X(x[j])
           << "\" y2=\"" << m.Y(y[j]) << "\" stroke=\"steelblue\"/>\n";
    os << "</svg>\n";
}

void svg_polyline_plot(std::ostream& os, const std::vector<double>& x,
                       const std::vector<double>& y, const std::string& title) {
    const Mapper m = fit(x, y);
    svg_open(os, m, title);
    os << "<polyline fill=\"none\" stroke=\"darkred\" points=\"";
    for (std::size_t j = 0; j < x.size(); ++j) os << m.X(x[j]) << ',' << m.Y(y[j]) << ' ';
    os << "\"/>\n</svg>\n";
}

void svg_histogram_plot(std::ostream& os, const Histogram& h, const std::string& title) {
    std::vector<double> x, ya, yb;
    const double step = (h.hi - h.lo) / static_cast<double>(h.count_a.size());
    for (std::size_t j = 0; j < h.count_a.size(); ++j) {
        x.push_back(h.lo + step * (static_cast<double>(j) + 0.5));
        ya.push_back(static_cast<double>(h.count_a[j]));
        yb.push_back(static_cast<double>(h.count_a[j] + h.count_b[j]));
    }
    const Mapper m = fit(x, yb);
    svg_open(os, m, title);
    for (std::size_t j = 0; j < x.size(); ++j) {
        os << "<line x1=\"" << m.X(x[j]) << "\" y1=\"" << m.Y(0.0) << "\" x2=\"" << m.X(x[j])
           << "\" y2=\"" << m.Y(yb[j]) << "\" stroke=\"goldenrod\"/>\n";
        os << "<line x1=\"" << m.X(x[j]) << "\" y1=\"" << m.Y(0.0) << "\" x2=\"" << m.X(x[j])
           << "\" y2=\"" << m.Y(ya[j]) << "\" stroke=\"darkslategray\"/>\n";
    }
    os << "</svg>\n";
}

}  // namespace nms::io
