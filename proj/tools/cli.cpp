#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qr/config.hpp"
#include "qr/constants.hpp"
#include "qr/decoherence.hpp"
#include "qr/errors.hpp"
#include "qr/gaussian.hpp"
#include "qr/large_spin.hpp"
#include "qr/parallel.hpp"
#include "qr/particle.hpp"
#include "qr/quantum_ratio.hpp"
#include "qr/report.hpp"
#include "qr/sg_experiment.hpp"
#include "qr/spin.hpp"
#include "qr/talbot.hpp"
#include "qr/tunneling.hpp"
#include "qr/units.hpp"

namespace qr::cli {

namespace {

using nlohmann::ordered_json;
using report::double_repr;

// ---------------------------------------------------------------- utilities

std::string trimmed(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos)
        return {};
    std::size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_list(const std::string& text, char sep = ',') {
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, sep)) {
        item = trimmed(item);
        if (!item.empty())
            out.push_back(item);
    }
    return out;
}

double parse_plain_double(const std::string& text, const char* what) {
    const std::string t = trimmed(text);
    const char* begin = t.c_str();
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0')
        throw config_error(std::string("expected a number for ") + what + ": '" + text + "'");
    return v;
}

long long parse_plain_int(const std::string& text, const char* what) {
    const std::string t = trimmed(text);
    const char* begin = t.c_str();
    char* end = nullptr;
    long long v = std::strtoll(begin, &end, 10);
    if (end == begin || *end != '\0')
        throw config_error(std::string("expected an integer for ") + what + ": '" + text + "'");
    return v;
}

// "pi", "pi/4", "3pi/2", "0.5pi", or a plain radian number
double parse_angle(const std::string& text) {
    const std::string t = trimmed(text);
    if (t.empty())
        throw config_error("empty angle");
    std::size_t p = t.find("pi");
    if (p == std::string::npos)
        return parse_plain_double(t, "angle");
    double factor = 1.0;
    std::string pre = trimmed(t.substr(0, p));
    if (!pre.empty() && pre.back() == '*')
        pre = trimmed(pre.substr(0, pre.size() - 1));
    if (pre == "-")
        factor = -1.0;
    else if (!pre.empty())
        factor = parse_plain_double(pre, "angle");
    double divisor = 1.0;
    std::string post = trimmed(t.substr(p + 2));
    if (!post.empty()) {
        if (post.front() != '/')
            throw config_error("bad angle syntax: '" + text + "'");
        divisor = parse_plain_double(post.substr(1), "angle divisor");
        if (divisor == 0.0)
            throw config_error("angle divisor is zero");
    }
    return factor * std::numbers::pi / divisor;
}

// ------------------------------------------------------------- option slots

struct Ctx {
    Config file;
    Config eff;
    std::uint64_t seed = 12345;
    std::string format = "csv";
    std::string out;
    ExecPolicy policy = ExecPolicy::parallel;
};

// Declares string-backed options on a subcommand and resolves them after
// parsing with the precedence flag > config file > built-in default,
// recording every resolved value into the effective config that gets hashed.
class Args {
public:
    Args(CLI::App* cmd, std::string section) : cmd_(cmd), section_(std::move(section)) {}

    void add(const std::string& flag, const std::string& key, const std::string& def,
             const std::string& help) {
        Slot& s = slots_[key];
        s.def = def;
        s.cli = def;
        std::string h = help;
        if (!def.empty())
            h += " [" + def + "]";
        s.option = cmd_->add_option(flag, s.cli, h);
    }

    void add_flag(const std::string& flag, const std::string& key, const std::string& help) {
        Slot& s = slots_[key];
        s.def = "false";
        s.is_flag = true;
        s.option = cmd_->add_flag(flag, s.flag_value, help);
    }

    std::string str(Ctx& c, const std::string& key) const {
        const Slot& s = slots_.at(key);
        std::string v = s.def;
        if (s.option && s.option->count() > 0)
            v = s.is_flag ? (s.flag_value ? "true" : "false") : s.cli;
        else if (auto f = c.file.find(section_, key))
            v = trimmed(*f);
        c.eff.set(section_, key, v);
        return v;
    }

    double number(Ctx& c, const std::string& key) const {
        return parse_plain_double(str(c, key), key.c_str());
    }

    long long integer(Ctx& c, const std::string& key) const {
        return parse_plain_int(str(c, key), key.c_str());
    }

    bool flag(Ctx& c, const std::string& key) const {
        std::string v = str(c, key);
        return v == "true" || v == "1" || v == "yes" || v == "on";
    }

private:
    struct Slot {
        std::string def;
        std::string cli;
        bool is_flag = false;
        bool flag_value = false;
        CLI::Option* option = nullptr;
    };
    CLI::App* cmd_;
    std::string section_;
    std::map<std::string, Slot> slots_;
};

// ------------------------------------------------------------------- output

report::Provenance provenance(const Ctx& c) {
    report::Provenance p;
    p.config_hash = c.eff.hash();
    p.seed = c.seed;
    return p;
}

void deliver(const Ctx& c, const std::string& text) {
    if (c.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(c.out, std::ios::binary);
    if (!f)
        throw config_error("cannot open output file: " + c.out);
    f << text;
}

std::string render_csv(const Ctx& c, const std::vector<std::string>& cols,
                       const std::vector<std::vector<std::string>>& rows) {
    std::ostringstream os;
    report::write_csv(os, provenance(c), cols, rows);
    return os.str();
}

std::string render_json(const Ctx& c, const char* command, const ordered_json& body) {
    ordered_json j;
    j["command"] = command;
    j["provenance"] = report::provenance_json(provenance(c));
    for (const auto& [k, v] : body.items())
        j[k] = v;
    return j.dump(2) + "\n";
}

ordered_json image_json(const ScreenImage& img) {
    ordered_json j;
    std::vector<double> centers(static_cast<std::size_t>(img.bins()));
    for (int i = 0; i < img.bins(); ++i)
        centers[static_cast<std::size_t>(i)] = img.center(i);
    j["bin_center_m"] = centers;
    j["weight"] = img.weight;
    return j;
}

// ----------------------------------------------------------------- commands

int cmd_qratio(Ctx& c, const Args& a, const Catalog& cat) {
    std::string exp_name = a.str(c, "experiment");
    std::string rq_s = a.str(c, "rq");
    std::string l0_s = a.str(c, "l0");
    std::string part = a.str(c, "particle");
    long long nucleus = a.integer(c, "nucleus");
    Thresholds th;
    th.classical_max = a.number(c, "classical_max");
    th.quantum_min = a.number(c, "quantum_min");

    double rq = 0.0, l0 = 0.0;
    std::string label = "custom";
    std::optional<double> expected;
    const std::vector<ExperimentPreset> experiments = builtin_experiments();
    if (!exp_name.empty()) {
        const auto& e = find_experiment(experiments, exp_name);
        rq = e.r_q;
        l0 = e.l0;
        label = e.name;
        expected = e.expected_log10_q;
        if (!rq_s.empty())
            rq = units::parse_length(rq_s);
        if (!l0_s.empty())
            l0 = units::parse_length(l0_s);
    } else {
        if (rq_s.empty())
            throw config_error("qratio needs --rq or --experiment");
        rq = units::parse_length(rq_s);
        if (!l0_s.empty()) {
            l0 = units::parse_length(l0_s);
        } else if (nucleus > 0) {
            l0 = nucleus_size(static_cast<int>(nucleus));
            label = "A=" + std::to_string(nucleus);
        } else if (!part.empty()) {
            l0 = cat.find(part).size;
            label = part;
        } else {
            throw config_error("qratio needs --l0, --nucleus, or --particle");
        }
    }

    QuantumRatio q(rq, l0);
    Regime reg = classify(q, th);
    std::string log10_s = q.infinite() ? "inf" : double_repr(q.log10_value());

    if (c.format == "csv") {
        std::vector<std::vector<std::string>> rows{{label, double_repr(rq), double_repr(l0),
                                                    q.str(), log10_s, to_string(reg),
                                                    expected ? double_repr(*expected) : ""}};
        deliver(c, render_csv(c, {"label", "r_q_m", "l0_m", "q", "log10_q", "regime",
                                  "expected_log10_q"},
                              rows));
    } else {
        ordered_json b;
        b["label"] = label;
        b["r_q_m"] = rq;
        b["l0_m"] = l0;
        if (q.infinite()) {
            b["q"] = "inf";
            b["log10_q"] = "inf";
        } else {
            b["q"] = q.value();
            b["log10_q"] = q.log10_value();
        }
        b["regime"] = to_string(reg);
        if (expected)
            b["expected_log10_q"] = *expected;
        deliver(c, render_json(c, "qratio", b));
    }
    return 0;
}

int cmd_diffusion(Ctx& c, const Args& a, const Catalog& cat) {
    double size = units::parse_length(a.str(c, "size"));
    auto names = split_list(a.str(c, "particles"));
    std::string time_s = a.str(c, "time");
    std::optional<double> t;
    if (!time_s.empty())
        t = units::parse_time(time_s);
    if (names.empty())
        throw config_error("diffusion needs at least one particle");

    double sigma0 = 0.5 * size;
    std::vector<std::vector<std::string>> rows;
    ordered_json entries = ordered_json::array();
    for (const auto& name : names) {
        const Particle& p = cat.find(name);
        double td = doubling_time(p.mass, sigma0);
        std::vector<std::string> row{p.name, double_repr(p.mass), double_repr(sigma0),
                                     double_repr(td)};
        ordered_json e;
        e["particle"] = p.name;
        e["mass_kg"] = p.mass;
        e["sigma0_m"] = sigma0;
        e["doubling_time_s"] = td;
        if (t) {
            double s = spread_std(p.mass, sigma0, *t);
            row.push_back(double_repr(s));
            e["spread_std_m"] = s;
        }
        rows.push_back(std::move(row));
        entries.push_back(std::move(e));
    }

    if (c.format == "csv") {
        std::vector<std::string> cols{"particle", "mass_kg", "sigma0_m", "doubling_time_s"};
        if (t)
            cols.push_back("spread_std_m");
        deliver(c, render_csv(c, cols, rows));
    } else {
        ordered_json b;
        b["initial_size_m"] = size;
        if (t)
            b["time_s"] = *t;
        b["entries"] = entries;
        deliver(c, render_json(c, "diffusion", b));
    }
    return 0;
}

int cmd_sg(Ctx& c, const Args& a, const Catalog& cat) {
    SGScenario sc;
    sc.particle = cat.find(a.str(c, "particle"));
    sc.speed = units::parse_speed(a.str(c, "speed"));
    sc.sigma0 = units::parse_length(a.str(c, "sigma0"));
    std::string moment_s = a.str(c, "moment");
    if (moment_s == "auto") {
        if (!sc.particle.moment)
            throw config_error("particle '" + sc.particle.name +
                               "' has no magnetic moment; pass --moment");
        sc.moment = *sc.particle.moment;
    } else {
        sc.moment = units::parse_moment(moment_s);
    }
    sc.field.bias = units::parse_field(a.str(c, "bias"));
    sc.field.gradient = units::parse_gradient(a.str(c, "gradient"));
    sc.field.length = units::parse_length(a.str(c, "length"));
    sc.field.transverse_extent = units::parse_length(a.str(c, "extent"));

    SpinHalfState spin;
    spin.theta = parse_angle(a.str(c, "theta"));
    spin.phi = parse_angle(a.str(c, "phi"));
    auto samples = static_cast<std::size_t>(a.integer(c, "samples"));
    int bins = static_cast<int>(a.integer(c, "bins"));

    SGReport rep = run_sg_pure(sc, spin);
    ScreenImage quant = quantum_screen_image(sc, spin, bins);
    OrientationSampler sampler; // isotropic
    ScreenImage classical = classical_sg_ensemble(sc, sampler, samples, c.seed, bins, c.policy);

    double fill = interior_min_over_mean(classical);
    double two_band = window_weight(quant, rep.up.center, 4.0 * rep.up.sigma) +
                      window_weight(quant, rep.down.center, 4.0 * rep.down.sigma);

    if (c.format == "csv") {
        std::vector<std::vector<std::string>> rows;
        for (int i = 0; i < quant.bins(); ++i)
            rows.push_back({"quantum", double_repr(quant.center(i)),
                            double_repr(quant.weight[static_cast<std::size_t>(i)])});
        for (int i = 0; i < classical.bins(); ++i)
            rows.push_back({"classical", double_repr(classical.center(i)),
                            double_repr(classical.weight[static_cast<std::size_t>(i)])});
        deliver(c, render_csv(c, {"image", "bin_center_m", "weight"}, rows));
    } else {
        ordered_json b;
        b["particle"] = sc.particle.name;
        b["speed_m_s"] = sc.speed;
        b["sigma0_m"] = sc.sigma0;
        b["moment_j_t"] = sc.moment;
        b["field"] = {{"bias_t", sc.field.bias},
                      {"gradient_t_m", sc.field.gradient},
                      {"length_m", sc.field.length},
                      {"extent_m", sc.field.transverse_extent}};
        b["theta_rad"] = spin.theta;
        b["transit_time_s"] = rep.transit_time;
        b["separation_m"] = rep.separation;
        b["r_q_separation_m"] = rep.r_q_separation;
        b["r_q_support_m"] = rep.r_q_support;
        if (rep.q_infinite) {
            b["q"] = "inf";
        } else {
            b["q"] = rep.q_value;
        }
        b["regime"] = to_string(rep.regime);
        b["bands"] = {{"up", rep.band_up}, {"down", rep.band_down}};
        b["doubling_time_s"] = rep.doubling_time;
        b["exit_sigma_m"] = rep.up.sigma;
        b["classical_interior_min_over_mean"] = fill;
        b["quantum_two_band_weight"] = two_band;
        b["quantum_image"] = image_json(quant);
        b["classical_image"] = image_json(classical);
        deliver(c, render_json(c, "sg", b));
    }
    return 0;
}

int cmd_spin_spike(Ctx& c, const Args& a) {
    auto n_list = split_list(a.str(c, "n"));
    double theta = parse_angle(a.str(c, "theta"));
    double trim = a.number(c, "trim");
    bool full = a.flag(c, "full");
    if (n_list.empty())
        throw config_error("spin-spike needs at least one N");

    std::vector<std::vector<std::string>> rows;
    ordered_json entries = ordered_json::array();
    for (const auto& n_s : n_list) {
        auto n = static_cast<std::uint64_t>(parse_plain_int(n_s, "N"));
        LargeSpinDistribution dist = large_spin_distribution(n, theta, c.policy);
        double peak = 0.0;
        for (double w : dist.weight)
            peak = std::max(peak, w);
        for (std::uint64_t k = 0; k <= n; ++k) {
            double w = dist.weight[static_cast<std::size_t>(k)];
            if (!full && w < trim * peak)
                continue;
            rows.push_back({std::to_string(n), std::to_string(k),
                            double_repr(static_cast<double>(k) / static_cast<double>(n)),
                            double_repr(w)});
        }
        ordered_json e;
        e["n"] = n;
        if (theta > 0.0 && theta < std::numbers::pi) {
            SpikeAnalysis an = spike_analysis(dist);
            e["mean_x"] = an.mean_x;
            e["std_x"] = an.std_x;
            e["std_x_sqrt_n"] = an.std_x * std::sqrt(static_cast<double>(n));
            e["x0"] = an.x0;
            e["sz_mean"] = an.sz_mean;
            e["tv_gaussian"] = an.tv_gaussian;
        } else {
            e["note"] = "pole: the distribution is a point mass";
        }
        entries.push_back(std::move(e));
    }

    if (c.format == "csv") {
        deliver(c, render_csv(c, {"n", "k", "x", "weight"}, rows));
    } else {
        ordered_json b;
        b["theta_rad"] = theta;
        b["entries"] = entries;
        deliver(c, render_json(c, "spin-spike", b));
    }
    return 0;
}

struct TalbotCommon {
    Particle particle;
    double lambda = 0.0;
    GratingSpec grating;
    GeometrySpec geometry;
    double lt = 0.0;
    double resonance = 0.0;
    int spp = 0;
    int window = 0;
};

TalbotCommon talbot_common(Ctx& c, const Args& a, const Catalog& cat) {
    TalbotCommon t;
    t.particle = cat.find(a.str(c, "particle"));
    double speed = units::parse_speed(a.str(c, "speed"));
    t.lambda = de_broglie_wavelength(t.particle.mass, speed);
    t.grating.period = units::parse_length(a.str(c, "period"));
    t.grating.open_fraction = a.number(c, "open_fraction");
    t.grating.n_slits = static_cast<int>(a.integer(c, "slits"));
    t.lt = talbot_length(t.grating.period, t.lambda);
    t.resonance = a.number(c, "resonance");
    std::string l1_s = a.str(c, "l1");
    std::string l2_s = a.str(c, "l2");
    if (l1_s == "auto" && l2_s == "auto") {
        t.geometry.l1 = t.geometry.l2 = 2.0 * t.resonance * t.lt;
    } else if (l2_s == "auto") {
        t.geometry.l1 = units::parse_length(l1_s);
        t.geometry.l2 = solve_l2(t.geometry.l1, t.lt, t.resonance);
    } else if (l1_s == "auto") {
        t.geometry.l2 = units::parse_length(l2_s);
        t.geometry.l1 = solve_l2(t.geometry.l2, t.lt, t.resonance);
    } else {
        t.geometry.l1 = units::parse_length(l1_s);
        t.geometry.l2 = units::parse_length(l2_s);
    }
    t.spp = static_cast<int>(a.integer(c, "spp"));
    t.window = static_cast<int>(a.integer(c, "window"));
    return t;
}

ordered_json geometry_json(const TalbotCommon& t) {
    ordered_json g;
    g["l1_m"] = t.geometry.l1;
    g["l2_m"] = t.geometry.l2;
    g["m1"] = t.geometry.m1();
    g["m2"] = t.geometry.m2();
    g["l_eff_m"] = t.geometry.l_eff();
    g["l_eff_over_talbot"] = t.geometry.l_eff() / t.lt;
    return g;
}

int cmd_talbot(Ctx& c, const Args& a, const Catalog& cat) {
    TalbotCommon t = talbot_common(c, a, cat);

    if (c.format == "csv") {
        // near-field carpet on a lighter grating
        GratingSpec carpet_grating = t.grating;
        carpet_grating.n_slits = static_cast<int>(a.integer(c, "carpet_slits"));
        int spp = static_cast<int>(a.integer(c, "carpet_spp"));
        int window = static_cast<int>(a.integer(c, "carpet_window"));
        int steps = static_cast<int>(a.integer(c, "carpet_steps"));
        if (steps < 1)
            throw config_error("carpet_steps must be at least 1");
        std::vector<double> distances(static_cast<std::size_t>(steps));
        for (int j = 1; j <= steps; ++j)
            distances[static_cast<std::size_t>(j - 1)] = 2.0 * t.lt * j / steps;
        CarpetResult car =
            talbot_carpet(carpet_grating, t.lambda, distances, spp, window, c.policy);

        std::vector<std::vector<std::string>> rows;
        for (int i = 0; i < car.screen.n; ++i) {
            double x = car.screen.x(i);
            rows.push_back({"0", double_repr(x),
                            grating_open_at(carpet_grating, x) ? "1" : "0"});
        }
        for (std::size_t d = 0; d < car.distance.size(); ++d)
            for (int i = 0; i < car.screen.n; ++i)
                rows.push_back({double_repr(car.distance[d]), double_repr(car.screen.x(i)),
                                double_repr(car.intensity[d][static_cast<std::size_t>(i)])});
        deliver(c, render_csv(c, {"z_m", "x_m", "intensity"}, rows));
        return 0;
    }

    TalbotConfig cfg;
    cfg.grating = t.grating;
    cfg.wavelength = t.lambda;
    cfg.geometry = t.geometry;
    cfg.samples_per_period = t.spp;
    cfg.window_periods = t.window;
    cfg.policy = c.policy;
    SelfImageResult r = self_image_check(cfg);

    ordered_json b;
    b["particle"] = t.particle.name;
    b["wavelength_m"] = t.lambda;
    b["talbot_length_m"] = r.talbot_len;
    b["geometry"] = geometry_json(t);
    ordered_json si;
    si["correlation"] = r.correlation;
    si["best_shift_m"] = r.best_shift;
    si["corr_at_zero"] = r.corr_at_zero;
    si["screen_period_m"] = r.m2 * t.grating.period;
    double k = t.geometry.l_eff() / t.lt;
    if (std::abs(k - std::round(k)) < 1e-9) {
        long long ki = std::llround(k);
        si["expected_shift_m"] = (ki % 2 == 0) ? 0.0 : 0.5 * r.m2 * t.grating.period;
    }
    b["self_image"] = si;
    QuantumRatio q = coherence_quantum_ratio(t.grating, t.particle);
    b["coherence"] = {{"r_q_m", q.r_q()},
                      {"l0_m", q.l_0()},
                      {"q", q.infinite() ? ordered_json("inf") : ordered_json(q.value())},
                      {"regime", to_string(classify(q))}};
    deliver(c, render_json(c, "talbot", b));
    return 0;
}

int cmd_talbot_lau(Ctx& c, const Args& a, const Catalog& cat) {
    TalbotCommon t = talbot_common(c, a, cat);

    TalbotLauConfig cfg;
    cfg.base.grating = t.grating;
    cfg.base.wavelength = t.lambda;
    cfg.base.geometry = t.geometry;
    cfg.base.samples_per_period = t.spp;
    cfg.base.window_periods = t.window;
    cfg.base.policy = c.policy;
    cfg.n_shifts = static_cast<int>(a.integer(c, "shifts"));
    cfg.n_sources = static_cast<int>(a.integer(c, "sources"));
    cfg.mask_open = a.flag(c, "open_mask");

    std::string sp_s = a.str(c, "source_pitch");
    cfg.source_pitch = (sp_s == "auto") ? 0.0 : units::parse_length(sp_s);

    std::string mp_s = a.str(c, "mask_period");
    double duty = a.number(c, "mask_duty");
    if (mp_s != "auto" || duty != 0.5) {
        GratingSpec mask;
        mask.period = (mp_s == "auto") ? t.geometry.m2() * t.grating.period
                                       : units::parse_length(mp_s);
        mask.open_fraction = duty;
        mask.n_slits = t.window;
        cfg.mask = mask;
    }

    TalbotLauResult r = talbot_lau_scan(cfg);

    if (c.format == "csv") {
        std::vector<std::vector<std::string>> rows;
        for (std::size_t i = 0; i < r.shift.size(); ++i)
            rows.push_back({double_repr(r.shift[i]), double_repr(r.transmitted[i])});
        deliver(c, render_csv(c, {"mask_shift_m", "transmitted"}, rows));
    } else {
        ordered_json b;
        b["particle"] = t.particle.name;
        b["wavelength_m"] = t.lambda;
        b["talbot_length_m"] = t.lt;
        b["geometry"] = geometry_json(t);
        b["sources"] = cfg.n_sources;
        b["source_pitch_m"] =
            cfg.source_pitch > 0.0 ? cfg.source_pitch : t.geometry.m1() * t.grating.period;
        b["mask_period_m"] = r.mask_period;
        b["mask_open"] = cfg.mask_open;
        b["pitch_matched"] = r.pitch_matched;
        b["visibility"] = r.visibility;
        deliver(c, render_json(c, "talbot-lau", b));
    }
    return 0;
}

struct BarrierInput {
    bool ratio_mode = false;
    double ratio = 0.0; // barrier top = ratio * scan energy
    double width = 0.0; // total width
    double v0 = 0.0;    // fixed-mode rectangle height, J (single rect only)
    bool single_rect = false;
    std::optional<BarrierSpec> fixed;

    BarrierSpec at(double energy) const {
        if (ratio_mode)
            return BarrierSpec::rectangular(ratio * energy, width);
        return *fixed;
    }
};

// v0 strings like "2E" mean "this multiple of the scan energy"
std::optional<double> energy_ratio(const std::string& text) {
    std::string t = trimmed(text);
    if (t.size() < 2 || (t.back() != 'E'))
        return std::nullopt;
    const char* begin = t.c_str();
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end == begin || trimmed(std::string(end)) != "E")
        return std::nullopt;
    return v;
}

BarrierInput parse_barrier(const std::string& spec, const std::string& v0_s,
                           const std::string& width_s) {
    BarrierInput in;
    std::string v0_str = v0_s;
    std::string width_str = width_s;

    if (!spec.empty()) {
        std::size_t colon = spec.find(':');
        if (colon == std::string::npos)
            throw config_error("barrier spec needs 'rect:...' or 'steps:...'");
        std::string kind = trimmed(spec.substr(0, colon));
        std::string body = spec.substr(colon + 1);
        if (kind == "rect") {
            for (const auto& kv : split_list(body)) {
                std::size_t eq = kv.find('=');
                if (eq == std::string::npos)
                    throw config_error("barrier spec entries look like v0=... or w=...");
                std::string key = trimmed(kv.substr(0, eq));
                std::string val = trimmed(kv.substr(eq + 1));
                if (key == "v0" || key == "V0")
                    v0_str = val;
                else if (key == "w" || key == "width")
                    width_str = val;
                else
                    throw config_error("unknown barrier key '" + key + "'");
            }
        } else if (kind == "steps") {
            std::vector<BarrierSegment> segs;
            for (const auto& seg : split_list(body)) {
                std::size_t at = seg.find('@');
                if (at == std::string::npos)
                    throw config_error("steps entries look like width@height");
                segs.push_back({units::parse_length(trimmed(seg.substr(0, at))),
                                units::parse_energy(trimmed(seg.substr(at + 1)))});
            }
            in.fixed = BarrierSpec::piecewise(segs);
            in.width = in.fixed->support();
            return in;
        } else {
            throw config_error("unknown barrier kind '" + kind + "'");
        }
    }

    in.width = units::parse_length(width_str);
    if (auto r = energy_ratio(v0_str)) {
        in.ratio_mode = true;
        in.ratio = *r;
    } else {
        in.v0 = units::parse_energy(v0_str);
        in.fixed = BarrierSpec::rectangular(in.v0, in.width);
        in.single_rect = true;
    }
    return in;
}

int cmd_tunnel(Ctx& c, const Args& a, const Catalog& cat) {
    const Particle& p = cat.find(a.str(c, "particle"));
    BarrierInput barrier =
        parse_barrier(a.str(c, "barrier"), a.str(c, "v0"), a.str(c, "width"));

    std::string emin_s = a.str(c, "emin");
    std::string emax_s = a.str(c, "emax");
    double emin, emax;
    if (barrier.ratio_mode) {
        emin = (emin_s == "auto") ? 0.05 * electron_volt : units::parse_energy(emin_s);
        emax = (emax_s == "auto") ? 5.0 * electron_volt : units::parse_energy(emax_s);
    } else {
        double top = barrier.fixed->max_height();
        emin = (emin_s == "auto") ? 0.05 * top : units::parse_energy(emin_s);
        emax = (emax_s == "auto") ? 1.5 * top : units::parse_energy(emax_s);
    }
    auto points = static_cast<int>(a.integer(c, "points"));
    if (points < 1 || !(emax > emin))
        throw config_error("tunnel scan needs points >= 1 and emax > emin");

    std::vector<std::vector<std::string>> rows;
    double max_unitarity = 0.0, max_oracle_dev = 0.0;
    for (int i = 0; i < points; ++i) {
        double e = (points == 1)
                       ? emin
                       : emin + (emax - emin) * i / (points - 1);
        BarrierSpec b = barrier.at(e);
        TransmissionResult exact = transfer_matrix_transmission(b, e, p.mass);
        double unit_err = std::abs(exact.transmission + exact.reflection - 1.0);
        max_unitarity = std::max(max_unitarity, unit_err);

        std::string t_wkb_s, exponent_s, ln_ratio_s;
        double top = b.max_height();
        if (e < top) {
            TransmissionResult wkb = wkb_transmission(b, e, p.mass);
            t_wkb_s = double_repr(wkb.transmission);
            exponent_s = double_repr(-0.5 * wkb.log_transmission);
            if (exact.log_transmission != 0.0)
                ln_ratio_s =
                    double_repr(wkb.log_transmission / exact.log_transmission - 1.0);
        }

        std::string closed_s, dev_s;
        if (barrier.single_rect || barrier.ratio_mode) {
            double v0 = barrier.ratio_mode ? barrier.ratio * e : barrier.v0;
            if (v0 != e) {
                double closed = rectangular_transmission(v0, barrier.width, e, p.mass);
                closed_s = double_repr(closed);
                double dev = std::abs(exact.transmission - closed);
                dev_s = double_repr(dev);
                max_oracle_dev = std::max(max_oracle_dev, dev);
            }
        }

        rows.push_back({double_repr(e), double_repr(e / electron_volt),
                        double_repr(exact.transmission), double_repr(exact.reflection),
                        double_repr(unit_err), t_wkb_s, exponent_s, ln_ratio_s, closed_s,
                        dev_s});
    }

    // one full scenario at a representative energy
    std::string energy_s = a.str(c, "energy");
    double e_scn = (energy_s == "auto") ? 0.5 * (emin + emax) : units::parse_energy(energy_s);
    TunnelScenario scn;
    scn.barrier = barrier.at(e_scn);
    scn.energy = e_scn;
    scn.mass = p.mass;
    scn.weight_1 = a.number(c, "weight1");
    scn.weight_2 = 1.0 - scn.weight_1;
    scn.coherence = a.number(c, "coherence");
    std::string spread_s = a.str(c, "momentum_spread");
    if (!spread_s.empty())
        scn.momentum_spread = parse_plain_double(spread_s, "momentum_spread");
    TunnelReport rep = tunnel_scenario(scn);

    if (c.format == "csv") {
        deliver(c, render_csv(c,
                              {"energy_j", "energy_ev", "t_exact", "r_exact",
                               "unitarity_error", "t_wkb", "wkb_exponent", "ln_t_ratio",
                               "t_closed_form", "closed_form_dev"},
                              rows));
    } else {
        ordered_json b;
        b["particle"] = p.name;
        if (barrier.ratio_mode) {
            b["barrier"] = {{"kind", "rect"},
                            {"v0_over_e", barrier.ratio},
                            {"width_m", barrier.width}};
        } else if (barrier.single_rect) {
            b["barrier"] = {{"kind", "rect"},
                            {"v0_j", barrier.v0},
                            {"width_m", barrier.width}};
        } else {
            ordered_json segs = ordered_json::array();
            for (const auto& s : barrier.fixed->segments)
                segs.push_back({{"width_m", s.width}, {"height_j", s.height}});
            b["barrier"] = {{"kind", "steps"}, {"segments", segs}};
        }
        b["scan"] = {{"emin_j", emin},
                     {"emax_j", emax},
                     {"points", points},
                     {"max_unitarity_error", max_unitarity},
                     {"max_closed_form_dev", max_oracle_dev}};
        ordered_json s;
        s["energy_j"] = e_scn;
        s["t_wkb"] = rep.wkb.transmission;
        s["wkb_method"] = rep.wkb.method;
        if (rep.exact) {
            s["t_exact"] = rep.exact->transmission;
            s["r_exact"] = rep.exact->reflection;
        }
        s["transmitted_fraction"] = rep.transmitted_fraction;
        s["coherence_before"] = scn.coherence;
        s["coherence_after"] = rep.coherence_after;
        s["transit_time_s"] = rep.transit_time;
        if (scn.momentum_spread) {
            s["spread_bound_s"] = rep.spread_bound;
            s["spread_negligible"] = rep.spread_negligible;
        }
        b["scenario"] = s;
        deliver(c, render_json(c, "tunnel", b));
    }
    return 0;
}

int cmd_regime(Ctx& c, const Args& a, const Catalog& cat) {
    TimescaleSet ts;
    ts.tau_dec = units::parse_time(a.str(c, "tau_dec"));
    ts.tau_trans = units::parse_time(a.str(c, "tau_transit"));
    ts.tau_diss = units::parse_time(a.str(c, "tau_diss"));
    std::string diff_s = a.str(c, "tau_diff");
    bool diff_derived = (diff_s == "auto");
    if (diff_derived) {
        const Particle& p = cat.find(a.str(c, "particle"));
        double sigma0 = units::parse_length(a.str(c, "sigma0"));
        ts.tau_diff = doubling_time(p.mass, sigma0);
    } else {
        ts.tau_diff = units::parse_time(diff_s);
    }
    double width = units::parse_length(a.str(c, "width"));
    double env_wl = units::parse_length(a.str(c, "env_wavelength"));
    double sep = units::parse_length(a.str(c, "separation"));
    double strictness = a.number(c, "strictness");

    RegimeReport rep = validate_regime(ts, width, env_wl, sep, strictness);

    if (c.format == "csv") {
        std::vector<std::vector<std::string>> rows;
        for (const auto& ch : rep.checks)
            rows.push_back({ch.name, double_repr(ch.lhs), double_repr(ch.rhs),
                            double_repr(ch.margin), ch.pass ? "1" : "0", ch.note});
        deliver(c, render_csv(c, {"check", "lhs", "rhs", "margin", "pass", "note"}, rows));
    } else {
        ordered_json b;
        b["strictness"] = rep.strictness;
        b["timescales_s"] = {{"decoherence", ts.tau_dec},
                             {"transit", ts.tau_trans},
                             {"spreading", ts.tau_diff},
                             {"dissipation", ts.tau_diss}};
        b["tau_diff_derived"] = diff_derived;
        b["lengths_m"] = {{"branch_width", width},
                          {"env_wavelength", env_wl},
                          {"separation", sep}};
        ordered_json checks = ordered_json::array();
        for (const auto& ch : rep.checks) {
            ordered_json cj;
            cj["check"] = ch.name;
            cj["lhs"] = ch.lhs;
            cj["rhs"] = ch.rhs;
            cj["margin"] = ch.margin;
            cj["pass"] = ch.pass;
            if (!ch.note.empty())
                cj["note"] = ch.note;
            checks.push_back(std::move(cj));
        }
        b["checks"] = checks;
        b["all_pass"] = rep.all_pass;
        deliver(c, render_json(c, "regime", b));
    }
    return rep.all_pass ? 0 : 2;
}

int cmd_tables(Ctx& c, const Args& a, const Catalog& cat) {
    namespace fs = std::filesystem;
    std::string dir = c.out.empty() ? "tables" : c.out;
    fs::create_directories(dir);

    double size = units::parse_length(a.str(c, "size"));
    double theta = parse_angle(a.str(c, "theta"));
    auto n_list = split_list(a.str(c, "n"));
    double sigma0 = 0.5 * size;

    auto write_file = [&](const std::string& name, const std::string& text) {
        std::ofstream f(fs::path(dir) / name, std::ios::binary);
        if (!f)
            throw config_error("cannot write " + name + " in " + dir);
        f << text;
    };

    // free-packet doubling times against the catalog reference values
    const std::vector<std::pair<std::string, double>> reference = {
        {"electron", 1e-8}, {"hydrogen", 1.6e-5}, {"C70", 8e-3}, {"stone1g", 1e19}};
    std::vector<std::vector<std::string>> drows;
    for (const auto& [name, ref] : reference) {
        const Particle& p = cat.find(name);
        double td = doubling_time(p.mass, sigma0);
        drows.push_back({p.name, double_repr(p.mass), double_repr(td), double_repr(ref),
                         double_repr(td / ref)});
    }
    write_file("doubling_times.csv",
               render_csv(c, {"particle", "mass_kg", "doubling_time_s", "reference_s",
                              "ratio"},
                          drows));

    // coherent-extent ratios for the preset experiments
    std::vector<std::vector<std::string>> qrows;
    for (const auto& e : builtin_experiments()) {
        QuantumRatio q(e.r_q, e.l0);
        qrows.push_back({e.name, e.particle, double_repr(e.r_q), double_repr(e.l0),
                         q.str(), q.infinite() ? "inf" : double_repr(q.log10_value()),
                         double_repr(e.expected_log10_q), to_string(classify(q))});
    }
    write_file("quantum_ratios.csv",
               render_csv(c, {"experiment", "particle", "r_q_m", "l0_m", "q", "log10_q",
                              "expected_log10_q", "regime"},
                          qrows));

    // spike distributions and their summaries
    ordered_json spikes = ordered_json::array();
    std::vector<std::string> files{"doubling_times.csv", "quantum_ratios.csv"};
    for (const auto& n_s : n_list) {
        auto n = static_cast<std::uint64_t>(parse_plain_int(n_s, "N"));
        LargeSpinDistribution dist = large_spin_distribution(n, theta, c.policy);
        double peak = 0.0;
        for (double w : dist.weight)
            peak = std::max(peak, w);
        std::vector<std::vector<std::string>> srows;
        for (std::uint64_t k = 0; k <= n; ++k) {
            double w = dist.weight[static_cast<std::size_t>(k)];
            if (w < 1e-18 * peak)
                continue;
            srows.push_back({std::to_string(k),
                             double_repr(static_cast<double>(k) / static_cast<double>(n)),
                             double_repr(w)});
        }
        std::string fname = "spike_n" + std::to_string(n) + ".csv";
        write_file(fname, render_csv(c, {"k", "x", "weight"}, srows));
        files.push_back(fname);

        SpikeAnalysis an = spike_analysis(dist);
        ordered_json e;
        e["n"] = n;
        e["mean_x"] = an.mean_x;
        e["std_x_sqrt_n"] = an.std_x * std::sqrt(static_cast<double>(n));
        e["x0"] = an.x0;
        e["sz_mean"] = an.sz_mean;
        e["tv_gaussian"] = an.tv_gaussian;
        spikes.push_back(std::move(e));
    }
    ordered_json summary;
    summary["theta_rad"] = theta;
    summary["entries"] = spikes;
    write_file("spike_summary.json", render_json(c, "tables", summary));
    files.push_back("spike_summary.json");

    ordered_json b;
    b["directory"] = dir;
    b["files"] = files;
    std::cout << render_json(c, "tables", b);
    return 0;
}

} // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"coherent-extent ratios, packet spreading, beam splitting,\n"
                 "near-field interference, tunneling, and decoherence bookkeeping"};
    app.name("qr");
    app.require_subcommand(1);

    std::string config_path, out_path, format = "csv", exec = "parallel";
    std::vector<std::string> overrides;
    std::uint64_t seed = 12345;
    int threads = 0;
    auto* o_config = app.add_option("--config", config_path, "key = value config file");
    auto* o_set = app.add_option("--set", overrides,
                                 "override a config value, section.key=value (repeatable)");
    o_set->type_size(1);
    auto* o_seed = app.add_option("--seed", seed, "RNG seed [12345]");
    auto* o_threads = app.add_option("--threads", threads, "thread cap, 0 = default");
    auto* o_format = app.add_option("--format", format, "output format [csv]");
    o_format->check(CLI::IsMember({"csv", "json"}));
    auto* o_out = app.add_option("--out", out_path, "output file (default stdout)");
    auto* o_exec = app.add_option("--exec", exec, "execution policy [parallel]");
    o_exec->check(CLI::IsMember({"serial", "parallel"}));

    auto* c_qratio = app.add_subcommand("qratio", "coherent extent / body size ratio");
    Args a_qratio(c_qratio, "qratio");
    a_qratio.add("--rq", "rq", "", "coherent extent, e.g. '0.2 mm'");
    a_qratio.add("--l0", "l0", "", "body size, e.g. '1.44 angstrom'");
    a_qratio.add("--particle", "particle", "", "catalog particle supplying the size");
    a_qratio.add("--nucleus", "nucleus", "0", "mass number A: size = A^(1/3) * 1 fm");
    a_qratio.add("--experiment", "experiment", "", "preset experiment name");
    a_qratio.add("--quantum-min", "quantum_min", "10", "Q at or above: quantum");
    a_qratio.add("--classical-max", "classical_max", "1", "Q at or below: classical");

    auto* c_diff = app.add_subcommand("diffusion", "free-packet doubling times");
    Args a_diff(c_diff, "diffusion");
    a_diff.add("--size", "size", "1 um", "initial packet size (2 sigma)");
    a_diff.add("--particles", "particles", "electron,hydrogen,C70,stone1g",
               "comma list of catalog names");
    a_diff.add("--time", "time", "", "optional flight time for a spread column");

    auto* c_sg = app.add_subcommand("sg", "beam-splitting magnet with screen images");
    Args a_sg(c_sg, "sg");
    a_sg.add("--particle", "particle", "Ag", "catalog particle");
    a_sg.add("--speed", "speed", "600 m/s", "beam speed");
    a_sg.add("--sigma0", "sigma0", "10 um", "initial transverse position std");
    a_sg.add("--moment", "moment", "auto", "magnetic moment ('auto' = catalog)");
    a_sg.add("--bias", "bias", "1 T", "longitudinal bias field");
    a_sg.add("--gradient", "gradient", "1136.5 T/m", "field gradient");
    a_sg.add("--length", "length", "3.5 cm", "magnet length");
    a_sg.add("--extent", "extent", "40 um", "transverse beam reach");
    a_sg.add("--theta", "theta", "pi/2", "spin tilt angle");
    a_sg.add("--phi", "phi", "0", "spin azimuth");
    a_sg.add("--samples", "samples", "100000", "classical ensemble size");
    a_sg.add("--bins", "bins", "201", "screen histogram bins");

    auto* c_spike = app.add_subcommand("spin-spike", "collective-spin weight spike");
    Args a_spike(c_spike, "spin-spike");
    a_spike.add("--N", "n", "1000", "comma list of constituent counts");
    a_spike.add("--theta", "theta", "pi/4", "tilt angle");
    a_spike.add("--trim", "trim", "1e-18", "drop weights below trim * peak");
    a_spike.add_flag("--full", "full", "emit every k");

    auto add_talbot_common = [](Args& a) {
        a.add("--particle", "particle", "Na", "catalog particle");
        a.add("--speed", "speed", "1000 m/s", "beam speed");
        a.add("--period", "period", "200 nm", "grating period");
        a.add("--open-fraction", "open_fraction", "0.5", "slit open fraction");
        a.add("--slits", "slits", "100", "grating slit count");
        a.add("--spp", "spp", "128", "screen samples per period");
        a.add("--window", "window", "80", "analysis window, periods");
        a.add("--resonance", "resonance", "2", "target effective distance, revival lengths");
        a.add("--l1", "l1", "auto", "source-to-grating distance");
        a.add("--l2", "l2", "auto", "grating-to-screen distance");
    };

    auto* c_talbot = app.add_subcommand("talbot", "near-field self-imaging");
    Args a_talbot(c_talbot, "talbot");
    add_talbot_common(a_talbot);
    a_talbot.add("--carpet-slits", "carpet_slits", "20", "carpet grating slits (csv mode)");
    a_talbot.add("--carpet-spp", "carpet_spp", "256", "carpet samples per period");
    a_talbot.add("--carpet-window", "carpet_window", "8", "carpet window, periods");
    a_talbot.add("--carpet-steps", "carpet_steps", "16", "carpet depth steps");

    auto* c_tl = app.add_subcommand("talbot-lau", "three-grating fringe scan");
    Args a_tl(c_tl, "talbot-lau");
    add_talbot_common(a_tl);
    a_tl.add("--sources", "sources", "21", "incoherent source count");
    a_tl.add("--source-pitch", "source_pitch", "auto", "'auto' = m1 * period");
    a_tl.add("--mask-period", "mask_period", "auto", "'auto' = m2 * period");
    a_tl.add("--mask-duty", "mask_duty", "0.5", "mask open fraction");
    a_tl.add("--shifts", "shifts", "33", "mask positions across one period");
    a_tl.add_flag("--open-mask", "open_mask", "fully open analyzer (visibility 0)");

    auto* c_tunnel = app.add_subcommand("tunnel", "barrier transmission scan");
    Args a_tunnel(c_tunnel, "tunnel");
    a_tunnel.add("--particle", "particle", "electron", "catalog particle");
    a_tunnel.add("--barrier", "barrier", "",
                 "'rect:v0=1 eV,w=1 nm' or 'steps:1 nm@1 eV,...'; v0 like '2E' tracks the scan energy");
    a_tunnel.add("--v0", "v0", "1 eV", "rectangle height");
    a_tunnel.add("--width", "width", "1 nm", "rectangle width");
    a_tunnel.add("--emin", "emin", "auto", "scan start energy");
    a_tunnel.add("--emax", "emax", "auto", "scan end energy");
    a_tunnel.add("--points", "points", "100", "scan points");
    a_tunnel.add("--energy", "energy", "auto", "scenario energy (default scan midpoint)");
    a_tunnel.add("--weight1", "weight1", "0.5", "first branch weight");
    a_tunnel.add("--coherence", "coherence", "0.5", "branch coherence magnitude");
    a_tunnel.add("--momentum-spread", "momentum_spread", "", "kg m/s, optional");

    auto* c_regime = app.add_subcommand("regime", "mixed-state validity checks");
    Args a_regime(c_regime, "regime");
    a_regime.add("--tau-dec", "tau_dec", "1e-13 s", "decoherence time");
    a_regime.add("--tau-transit", "tau_transit", "1e-4 s", "apparatus transit time");
    a_regime.add("--tau-diff", "tau_diff", "auto",
                 "spreading time ('auto' derives from --particle/--sigma0)");
    a_regime.add("--tau-diss", "tau_diss", "1 s", "dissipation time");
    a_regime.add("--particle", "particle", "Ag", "particle for the derived spreading time");
    a_regime.add("--sigma0", "sigma0", "10 um", "packet std for the derived spreading time");
    a_regime.add("--width", "width", "10 nm", "branch width");
    a_regime.add("--env-wavelength", "env_wavelength", "1 um", "environment wavelength");
    a_regime.add("--separation", "separation", "0.2 mm", "branch separation");
    a_regime.add("--strictness", "strictness", "10", "factor standing in for 'much less'");

    auto* c_tables = app.add_subcommand("tables", "write the reference table suite");
    Args a_tables(c_tables, "tables");
    a_tables.add("--size", "size", "1 um", "packet size for the doubling-time table");
    a_tables.add("--theta", "theta", "pi/4", "spike tilt angle");
    a_tables.add("--N", "n", "1000,100000", "spike constituent counts");

    for (auto* sub : app.get_subcommands({}))
        sub->fallthrough();

    try {
        app.parse(argc, argv);

        Ctx ctx;
        if (o_config->count() > 0)
            ctx.file = Config::load(config_path);
        for (const auto& ov : overrides)
            ctx.file.apply_override(ov);

        if (o_seed->count() == 0) {
            if (auto s = ctx.file.find("global", "seed"))
                seed = static_cast<std::uint64_t>(parse_plain_int(*s, "seed"));
        }
        ctx.seed = seed;
        ctx.eff.set("global", "seed", std::to_string(seed));

        if (o_format->count() == 0) {
            if (auto f = ctx.file.find("global", "format")) {
                format = trimmed(*f);
                if (format != "csv" && format != "json")
                    throw config_error("global.format must be csv or json");
            }
        }
        ctx.format = format;

        if (o_out->count() == 0) {
            if (auto f = ctx.file.find("global", "out"))
                out_path = trimmed(*f);
        }
        ctx.out = out_path;

        if (o_threads->count() == 0) {
            if (auto f = ctx.file.find("global", "threads"))
                threads = static_cast<int>(parse_plain_int(*f, "threads"));
        }
        if (threads > 0)
            parallel::set_threads(threads);

        if (o_exec->count() == 0) {
            if (auto f = ctx.file.find("global", "exec"))
                exec = trimmed(*f);
        }
        if (exec == "serial")
            ctx.policy = ExecPolicy::serial;
        else if (exec == "parallel")
            ctx.policy = ExecPolicy::parallel;
        else
            throw config_error("global.exec must be serial or parallel");

        Catalog cat = Catalog::builtin();

        if (c_qratio->parsed())
            return cmd_qratio(ctx, a_qratio, cat);
        if (c_diff->parsed())
            return cmd_diffusion(ctx, a_diff, cat);
        if (c_sg->parsed())
            return cmd_sg(ctx, a_sg, cat);
        if (c_spike->parsed())
            return cmd_spin_spike(ctx, a_spike);
        if (c_talbot->parsed())
            return cmd_talbot(ctx, a_talbot, cat);
        if (c_tl->parsed())
            return cmd_talbot_lau(ctx, a_tl, cat);
        if (c_tunnel->parsed())
            return cmd_tunnel(ctx, a_tunnel, cat);
        if (c_regime->parsed())
            return cmd_regime(ctx, a_regime, cat);
        if (c_tables->parsed())
            return cmd_tables(ctx, a_tables, cat);
        throw config_error("no command selected");
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 1;
    } catch (const regime_error& e) {
        std::cerr << "regime error: " << e.what() << "\n";
        return 2;
    } catch (const integration_error& e) {
        std::cerr << "integration error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace qr::cli
