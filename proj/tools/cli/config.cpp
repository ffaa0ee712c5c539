#include "config.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

#include "tfespec/signal_io.hpp"

namespace tfespec::cli {

namespace {

using nlohmann::json;

template <class T>
T get_as(const json& j, const char* key) {
    try {
        return j.get<T>();
    } catch (const json::exception&) {
        throw std::invalid_argument(std::string("config: bad value for '") + key + "': " + j.dump());
    }
}

std::size_t get_count(const json& j, const char* key) {
    if (!j.is_number_integer() || j.get<long long>() < 0) {
        throw std::invalid_argument(std::string("config: '") + key + "' must be a non-negative integer");
    }
    return j.get<std::size_t>();
}

std::filesystem::path resolve_path(const std::filesystem::path& p, const std::filesystem::path& base) {
    return p.is_absolute() || base.empty() ? p : base / p;
}

void set_band_plan(ConfigLayer& layer, BandPlanSpec spec) {
    if (layer.band_plan) {
        throw std::invalid_argument("config: give only one of bands, cutoffs_hz, band_plan");
    }
    layer.band_plan = std::move(spec);
}

}  // namespace

ConfigLayer parse_config_json(std::string_view text, const std::filesystem::path& base_dir) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("config: invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw std::invalid_argument("config: top level must be an object");

    ConfigLayer layer;
    for (const auto& [key, value] : doc.items()) {
        const char* k = key.c_str();
        if (key == "fixture") layer.fixture = get_as<std::string>(value, k);
        else if (key == "input") layer.input = resolve_path(get_as<std::string>(value, k), base_dir);
        else if (key == "fs") layer.fs = get_as<double>(value, k);
        else if (key == "duration") layer.duration = get_as<double>(value, k);
        else if (key == "length") layer.length = get_count(value, k);
        else if (key == "seed") layer.seed = get_count(value, k);
        else if (key == "modulation_rate") layer.modulation_rate = get_as<double>(value, k);
        else if (key == "method") layer.method = get_as<std::string>(value, k);
        else if (key == "bands") set_band_plan(layer, BandPlanSpec::uniform(get_count(value, k)));
        else if (key == "cutoffs_hz") set_band_plan(layer, BandPlanSpec::custom(get_as<std::vector<double>>(value, k)));
        else if (key == "band_plan") {
            if (value.is_string()) {
                set_band_plan(layer, load_band_plan(resolve_path(value.get<std::string>(), base_dir)));
            } else {
                set_band_plan(layer, parse_band_plan_json(value.dump()));
            }
        }
        else if (key == "order") layer.order = get_count(value, k);
        else if (key == "scheme") layer.scheme = get_as<std::string>(value, k);
        else if (key == "if") layer.if_mode = get_as<std::string>(value, k);
        else if (key == "out_prefix") layer.out_prefix = get_as<std::string>(value, k);
        else if (key == "time_bins") layer.time_bins = get_count(value, k);
        else if (key == "freq_bins") layer.freq_bins = get_count(value, k);
        else if (key == "ridge_tolerance_hz") layer.ridge_tolerance_hz = get_as<double>(value, k);
        else throw std::invalid_argument("config: unknown key '" + key + "'");
    }
    return layer;
}

ConfigLayer load_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path.string() + ": cannot open config file");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_config_json(buf.str(), path.parent_path());
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(path.string() + ": " + e.what());
    }
}

ConfigLayer merge(ConfigLayer base, const ConfigLayer& overlay) {
    const auto take = [](auto& dst, const auto& src) {
        if (src) dst = src;
    };
    // A file input on top replaces a fixture below it and vice versa.
    if (overlay.fixture) base.input.reset();
    if (overlay.input) base.fixture.reset();
    take(base.fixture, overlay.fixture);
    take(base.input, overlay.input);
    take(base.fs, overlay.fs);
    take(base.duration, overlay.duration);
    take(base.length, overlay.length);
    take(base.seed, overlay.seed);
    take(base.modulation_rate, overlay.modulation_rate);
    take(base.method, overlay.method);
    take(base.band_plan, overlay.band_plan);
    take(base.order, overlay.order);
    take(base.scheme, overlay.scheme);
    take(base.if_mode, overlay.if_mode);
    take(base.out_prefix, overlay.out_prefix);
    take(base.time_bins, overlay.time_bins);
    take(base.freq_bins, overlay.freq_bins);
    take(base.ridge_tolerance_hz, overlay.ridge_tolerance_hz);
    return base;
}

std::string method_name(const std::optional<DecompositionMethod>& method) {
    return method ? std::string(to_string(*method)) : "none";
}

RunConfig resolve(const ConfigLayer& layer) {
    RunConfig cfg;
    if (layer.fixture && layer.input) throw std::invalid_argument("config: give either a fixture or an input file, not both");
    if (!layer.fixture && !layer.input) throw std::invalid_argument("config: no input (use --fixture NAME or --input FILE)");
    cfg.fixture = layer.fixture;
    cfg.input = layer.input;

    if (cfg.input && (layer.duration || layer.length || layer.seed || layer.modulation_rate)) {
        throw std::invalid_argument("config: duration, length, seed and modulation_rate apply only to fixture inputs");
    }
    if (layer.fs && !(*layer.fs > 0.0)) throw std::invalid_argument("config: fs must be positive");
    if (cfg.input) {
        cfg.fs_override = layer.fs;
    } else {
        cfg.fixture_options.sample_rate = layer.fs;
        cfg.fixture_options.duration = layer.duration;
        cfg.fixture_options.length = layer.length;
        if (layer.seed) cfg.fixture_options.seed = *layer.seed;
        if (layer.modulation_rate) cfg.fixture_options.modulation_rate = *layer.modulation_rate;
    }

    const std::string method = layer.method.value_or("none");
    if (method != "none") cfg.method = parse_decomposition_method(method);
    cfg.band_plan = layer.band_plan;
    if (!cfg.method && cfg.band_plan) {
        throw std::invalid_argument("config: method 'none' does not take a band plan (drop --bands/--cutoffs or pick a method)");
    }
    if (cfg.method && !cfg.band_plan) {
        throw std::invalid_argument("config: method '" + method + "' needs a band plan (--bands M or --cutoffs F1,...,fs/2)");
    }

    cfg.order = layer.order.value_or(cfg.order);
    if (layer.scheme) cfg.scheme = parse_diff_scheme(*layer.scheme);
    if (layer.if_mode) cfg.if_mode = parse_if_mode(*layer.if_mode);
    cfg.out_prefix = layer.out_prefix.value_or(cfg.out_prefix);
    if (cfg.out_prefix.empty()) throw std::invalid_argument("config: out_prefix must not be empty");
    cfg.time_bins = layer.time_bins.value_or(cfg.time_bins);
    cfg.freq_bins = layer.freq_bins.value_or(cfg.freq_bins);
    if (cfg.time_bins == 0 || cfg.freq_bins == 0) throw std::invalid_argument("config: grid bins must be >= 1");
    cfg.ridge_tolerance_hz = layer.ridge_tolerance_hz.value_or(cfg.ridge_tolerance_hz);
    if (!(cfg.ridge_tolerance_hz > 0.0)) throw std::invalid_argument("config: ridge_tolerance_hz must be positive");
    return cfg;
}

std::size_t parse_thread_cap(const char* value) {
    if (value == nullptr || *value == '\0') {
        return std::max<std::size_t>(1, std::thread::hardware_concurrency());
    }
    const std::string_view text(value);
    std::size_t n = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
    if (ec != std::errc{} || ptr != text.data() + text.size() || n == 0) {
        throw std::invalid_argument("TFESPEC_THREADS must be a positive integer, got '" + std::string(text) + "'");
    }
    return n;
}

std::size_t thread_cap() { return parse_thread_cap(std::getenv("TFESPEC_THREADS")); }

LoadedInput load_input(const RunConfig& cfg) {
    if (cfg.input) {
        Signal x = load_signal(*cfg.input, cfg.fs_override);
        return {std::move(x), cfg.input->string(), {}};
    }
    Fixture fx = make_fixture(*cfg.fixture, cfg.fixture_options);
    return {std::move(fx.signal), "fixture:" + fx.name, std::move(fx.ridges)};
}

}  // namespace tfespec::cli
