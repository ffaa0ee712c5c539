#include "tfespec/tfe.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "numeric.hpp"
#include "tfespec/signal_io.hpp"

namespace tfespec {

double TFEGrid::total() const noexcept { return detail::sum(energy); }

std::vector<double> TFEGrid::frequency_marginal() const {
    std::vector<double> out(freq_bins(), 0.0);
    for (std::size_t t = 0; t < time_bins(); ++t) {
        for (std::size_t f = 0; f < freq_bins(); ++f) out[f] += at(t, f);
    }
    return out;
}

TFEGrid build_tfe(std::span<const IFTrack> tracks, std::size_t time_bins, std::size_t freq_bins,
                  FrequencySpan span) {
    if (time_bins < 1 || freq_bins < 1) throw std::invalid_argument("build_tfe: bin counts must be >= 1");
    if (tracks.empty()) throw std::invalid_argument("build_tfe: no tracks");
    const double fs = tracks.front().sample_rate;
    const std::size_t n = tracks.front().size();
    for (const IFTrack& t : tracks) {
        if (t.sample_rate != fs || t.size() != n || t.energy.size() != n) {
            throw std::invalid_argument("build_tfe: tracks must share sample_rate and length");
        }
    }
    if (n == 0) throw std::invalid_argument("build_tfe: empty tracks");

    const double f_lo = span == FrequencySpan::one_sided ? 0.0 : -fs / 2.0;
    const double f_hi = fs / 2.0;
    const double duration = static_cast<double>(n) / fs;

    TFEGrid grid;
    grid.time_edges.resize(time_bins + 1);
    grid.freq_edges.resize(freq_bins + 1);
    for (std::size_t i = 0; i <= time_bins; ++i) {
        grid.time_edges[i] = duration * static_cast<double>(i) / static_cast<double>(time_bins);
    }
    for (std::size_t i = 0; i <= freq_bins; ++i) {
        grid.freq_edges[i] = f_lo + (f_hi - f_lo) * static_cast<double>(i) / static_cast<double>(freq_bins);
    }
    grid.energy.assign(time_bins * freq_bins, 0.0);

    const double bins_per_hz = static_cast<double>(freq_bins) / (f_hi - f_lo);
    for (const IFTrack& track : tracks) {
        for (std::size_t s = 0; s < n; ++s) {
            const double f = track.frequency_hz[s];
            if (!(f >= f_lo && f <= f_hi)) {
                throw std::invalid_argument("build_tfe: frequency " + std::to_string(f) +
                                            " Hz outside the grid span [" + std::to_string(f_lo) +
                                            ", " + std::to_string(f_hi) + "] Hz");
            }
            const std::size_t tb = s * time_bins / n;
            const auto fb = std::min(static_cast<std::size_t>((f - f_lo) * bins_per_hz), freq_bins - 1);
            grid.energy[tb * freq_bins + fb] += track.energy[s];
        }
    }
    return grid;
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) out.push_back(field);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

double parse_field(const std::string& text, const std::filesystem::path& path, std::size_t line) {
    std::string_view s(text);
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) s.remove_suffix(1);
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
        throw std::runtime_error(path.string() + ": line " + std::to_string(line) +
                                 ": malformed number '" + text + "'");
    }
    return v;
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error(path.string() + ": cannot open for writing");
    return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
    out.flush();
    if (!out) throw std::runtime_error(path.string() + ": write error");
}

}  // namespace

void export_grid_csv(const TFEGrid& grid, const std::filesystem::path& path) {
    std::ofstream out = open_out(path);
    const std::size_t nf = grid.freq_bins();
    out << "time_s\\frequency_hz";
    for (double e : grid.freq_edges) out << ',' << format_double(e);
    out << '\n';
    for (std::size_t t = 0; t < grid.time_bins(); ++t) {
        out << format_double(grid.time_edges[t]);
        for (std::size_t f = 0; f < nf; ++f) out << ',' << format_double(grid.at(t, f));
        out << ",\n";
    }
    out << format_double(grid.time_edges.back());
    for (std::size_t f = 0; f <= nf; ++f) out << ',';
    out << '\n';
    finish(out, path);
}

TFEGrid load_grid_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path.string() + ": cannot open for reading");
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error(path.string() + ": empty grid file");
    TFEGrid grid;
    const auto header = split_fields(line);
    if (header.size() < 3) throw std::runtime_error(path.string() + ": grid header too short");
    for (std::size_t i = 1; i < header.size(); ++i) grid.freq_edges.push_back(parse_field(header[i], path, 1));
    const std::size_t nf = grid.freq_edges.size() - 1;

    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        const auto fields = split_fields(line);
        if (fields.size() != nf + 2) {
            throw std::runtime_error(path.string() + ": line " + std::to_string(line_no) +
                                     ": expected " + std::to_string(nf + 2) + " fields");
        }
        grid.time_edges.push_back(parse_field(fields[0], path, line_no));
        if (fields[1].empty()) break;  // closing edge row
        for (std::size_t f = 1; f <= nf; ++f) grid.energy.push_back(parse_field(fields[f], path, line_no));
    }
    if (grid.time_edges.size() < 2 || grid.energy.size() != grid.time_bins() * nf) {
        throw std::runtime_error(path.string() + ": inconsistent grid dimensions");
    }
    return grid;
}

void export_track_csv(std::span<const IFTrack> tracks, const std::filesystem::path& path) {
    std::ofstream out = open_out(path);
    out << "time_s,frequency_hz,energy\n";
    for (const IFTrack& t : tracks) {
        for (std::size_t n = 0; n < t.size(); ++n) {
            out << format_double(static_cast<double>(n) / t.sample_rate) << ','
                << format_double(t.frequency_hz[n]) << ',' << format_double(t.energy[n]) << '\n';
        }
    }
    finish(out, path);
}

std::vector<TfePoint> load_track_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path.string() + ": cannot open for reading");
    std::string line;
    if (!std::getline(in, line) || line.rfind("time_s,frequency_hz,energy", 0) != 0) {
        throw std::runtime_error(path.string() + ": missing 'time_s,frequency_hz,energy' header");
    }
    std::vector<TfePoint> points;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        const auto fields = split_fields(line);
        if (fields.size() != 3) {
            throw std::runtime_error(path.string() + ": line " + std::to_string(line_no) + ": expected 3 fields");
        }
        points.push_back({parse_field(fields[0], path, line_no), parse_field(fields[1], path, line_no),
                          parse_field(fields[2], path, line_no)});
    }
    return points;
}

}  // namespace tfespec
