#include "qbs/run.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "qbs/greens.hpp"
#include "qbs/regression.hpp"
#include "qbs/resonance.hpp"
#include "qbs/timeline.hpp"

namespace qbs::cli {

namespace {

using nlohmann::json;

class config_error : public error {
public:
    explicit config_error(const std::string& msg) : error(msg) {}
};

std::string fmt17(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v,
                                   std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

void atomic_write(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return;
    }
    const std::string tmp = path + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw config_error("output path not writable: " + path);
        os << content;
        if (!os.good()) throw config_error("write failed: " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw config_error("rename failed: " + path);
}

std::string model_name(ModelKind m) {
    switch (m) {
        case ModelKind::DeltaField: return "delta-field";
        case ModelKind::LeakySphere: return "leaky-sphere";
        case ModelKind::TwinBarrier: return "twin-barrier";
    }
    return "?";
}

json units_block(double mass) {
    return json{{"hbar", 1.0}, {"mass", mass}, {"two_m", 2.0 * mass}};
}

struct Models {
    models::DeltaWellInField delta;
    models::LeakySphericalWell leaky;
    models::TwinBarrier twin;
};

Models build_models(const RunConfig& c) {
    if (!(c.a > 0.0) || !(c.V0a2 > 0.0) || !(c.w_over_a > 0.0) || !(c.mass > 0.0))
        throw config_error("invalid parameters: need a, V0a2, w, mass > 0");
    if (!(c.eb < 0.0)) throw config_error("invalid parameters: eb must be < 0");
    if (!(c.f_frac > 0.0)) throw config_error("invalid parameters: f-frac must be > 0");
    Models m;
    const double V0 = c.V0a2 / (c.a * c.a);
    const double b = c.a * (1.0 + c.w_over_a);
    m.leaky = {V0, c.a, b, c.mass};
    m.twin = {V0, c.a, b, c.parity, c.mass};
    const double lambda = std::sqrt(-2.0 * c.eb / c.mass);
    const double fcr = models::delta_critical_force(c.eb, c.mass);
    m.delta = {lambda, c.f_frac * fcr, c.mass};
    return m;
}

json parameters_block(const RunConfig& c, const Models& m) {
    json p{{"a", c.a}, {"V0a2", c.V0a2}, {"V0", m.leaky.V0}, {"w_over_a", c.w_over_a}};
    if (c.model == ModelKind::DeltaField) {
        p = json{{"eb", c.eb},
                 {"lambda", m.delta.lambda},
                 {"f_frac", c.f_frac},
                 {"F", m.delta.F},
                 {"F_cr", models::delta_critical_force(c.eb, c.mass)}};
    }
    if (c.model == ModelKind::TwinBarrier)
        p["parity"] = (c.parity == models::Parity::Even) ? "even" : "odd";
    return p;
}

std::vector<models::EnergyRoot> stationary_roots(const RunConfig& c, const Models& m) {
    switch (c.model) {
        case ModelKind::DeltaField: return {models::delta_root(m.delta)};
        case ModelKind::LeakySphere: return models::root_scan(m.leaky);
        case ModelKind::TwinBarrier: return models::root_scan(m.twin);
    }
    return {};
}

std::vector<double> make_grid(const GridSpec& g) {
    std::vector<double> xs(static_cast<size_t>(g.n));
    const double step = (g.n > 1) ? (g.hi - g.lo) / (g.n - 1) : 0.0;
    for (int i = 0; i < g.n; ++i) xs[static_cast<size_t>(i)] = g.lo + step * i;
    return xs;
}

GridSpec default_grid(const RunConfig& c, const Models& m) {
    GridSpec g;
    g.set = true;
    switch (c.command) {
        case Command::Waveform:
        case Command::Greens:
            if (c.model == ModelKind::DeltaField) {
                const double scale = 1.0 / (m.delta.m * m.delta.lambda);
                g.n = 601;
                g.lo = -5.0 * scale;
                g.hi = 10.0 * scale;
            } else {
                g.n = 601;
                g.lo = 0.0;
                g.hi = 3.0 * m.leaky.b;
            }
            break;
        case Command::Timeline:
            g.n = 401;
            g.lo = (c.model == ModelKind::DeltaField) ? -10.0 : 0.05;
            g.hi = 20.0;
            break;
        case Command::Scan:
            if (c.model == ModelKind::DeltaField) {
                g.n = 19;
                g.lo = 0.05;
                g.hi = 0.95;
            } else {
                g.n = 15;
                g.lo = 0.30;
                g.hi = 1.00;
            }
            break;
        default:
            g.n = 2;
            g.lo = 0.0;
            g.hi = 1.0;
            break;
    }
    return g;
}

Format effective_format(const RunConfig& c) {
    const bool json_natural = c.command == Command::Solve ||
                              c.command == Command::Critical ||
                              c.command == Command::Resonances;
    if (!c.format) return json_natural ? Format::Json : Format::Csv;
    if (*c.format == Format::Json && !json_natural)
        throw config_error("format=json is only available for solve/critical/resonances");
    return *c.format;
}

// ---- commands ---------------------------------------------------------------

std::string cmd_solve(const RunConfig& c, const Models& m, Format fmt) {
    const auto roots = stationary_roots(c, m);
    if (fmt == Format::Csv) {
        std::ostringstream os;
        os << "index,E,residual,bracket_lo,bracket_hi,iterations\n";
        for (const auto& r : roots)
            os << r.index << "," << fmt17(r.E) << "," << fmt17(r.residual) << ","
               << fmt17(r.bracket_lo) << "," << fmt17(r.bracket_hi) << ","
               << r.iterations << "\n";
        return os.str();
    }
    json j{{"model", model_name(c.model)},
           {"parameters", parameters_block(c, m)},
           {"units", units_block(c.mass)}};
    j["roots"] = json::array();
    for (const auto& r : roots)
        j["roots"].push_back(json{{"E", r.E},
                                  {"residual", r.residual},
                                  {"bracket", {r.bracket_lo, r.bracket_hi}},
                                  {"index", r.index},
                                  {"iterations", r.iterations}});
    return j.dump(2) + "\n";
}

std::string cmd_waveform(const RunConfig& c, const Models& m) {
    const auto roots = stationary_roots(c, m);
    if (roots.empty()) throw convergence_error("waveform: no stationary quasibound root");
    const GridSpec g = c.grid.set ? c.grid : default_grid(c, m);
    const auto xs = make_grid(g);
    Waveform w;
    switch (c.model) {
        case ModelKind::DeltaField: w = models::delta_waveform(roots[0], m.delta, xs); break;
        case ModelKind::LeakySphere: w = models::model_waveform(roots[0], m.leaky, xs); break;
        case ModelKind::TwinBarrier: w = models::model_waveform(roots[0], m.twin, xs); break;
    }
    const models::ModelVariant pot =
        (c.model == ModelKind::DeltaField)
            ? models::ModelVariant(m.delta)
            : (c.model == ModelKind::LeakySphere ? models::ModelVariant(m.leaky)
                                                 : models::ModelVariant(m.twin));
    std::ostringstream os;
    os << "x,psi,envelope,potential\n";
    for (size_t i = 0; i < w.samples.size(); ++i) {
        const double x = w.samples[i].x;
        os << fmt17(x) << "," << fmt17(w.samples[i].psi) << ","
           << fmt17(w.envelope_samples[i].psi) << "," << fmt17(models::potential(pot, x))
           << "\n";
    }
    return os.str();
}

std::string cmd_scan(const RunConfig& c, const Models& m) {
    const GridSpec g = c.grid.set ? c.grid : default_grid(c, m);
    const auto ps = make_grid(g);
    std::vector<std::vector<double>> rows;
    size_t max_roots = 0;
    for (double p : ps) {
        RunConfig cc = c;
        if (c.model == ModelKind::DeltaField)
            cc.f_frac = p;
        else
            cc.w_over_a = p;
        const Models mm = build_models(cc);
        std::vector<double> es;
        try {
            for (const auto& r : stationary_roots(cc, mm)) es.push_back(r.E);
        } catch (const convergence_error&) {
            // no root at this parameter (e.g. beyond the critical force)
        }
        max_roots = std::max(max_roots, es.size());
        rows.push_back(std::move(es));
    }
    std::ostringstream os;
    os << "parameter";
    for (size_t i = 1; i <= std::max<size_t>(max_roots, 1); ++i) os << ",E_" << i;
    os << "\n";
    for (size_t r = 0; r < rows.size(); ++r) {
        os << fmt17(ps[r]);
        for (size_t i = 0; i < std::max<size_t>(max_roots, 1); ++i) {
            os << ",";
            if (i < rows[r].size()) os << fmt17(rows[r][i]);
        }
        os << "\n";
    }
    return os.str();
}

std::string cmd_critical(const RunConfig& c, const Models& m, Format fmt) {
    models::CutoffWidths w;
    if (c.model == ModelKind::LeakySphere ||
        (c.model == ModelKind::TwinBarrier && c.parity == models::Parity::Odd)) {
        w = models::leaky_cutoff(m.leaky.V0, m.leaky.a, m.leaky.m);
    } else if (c.model == ModelKind::TwinBarrier) {
        w = models::twin_cutoff(m.twin.V0, m.twin.a, m.twin.m);
    } else {
        throw config_error("critical: defined for leaky-sphere and twin-barrier models");
    }
    if (fmt == Format::Csv) {
        std::ostringstream os;
        os << "estimate,actual\n"
           << fmt17(w.estimate_w / c.a) << "," << fmt17(w.actual_w / c.a) << "\n";
        return os.str();
    }
    json j{{"model", model_name(c.model)},
           {"parameters", parameters_block(c, m)},
           {"units", units_block(c.mass)},
           {"estimate", w.estimate_w / c.a},
           {"actual", w.actual_w / c.a},
           {"units_of", "a"}};
    return j.dump(2) + "\n";
}

std::string cmd_resonances(const RunConfig& c, const Models& m, Format fmt) {
    if (c.model == ModelKind::DeltaField)
        throw config_error("resonances: defined for leaky-sphere and twin-barrier models");
    const models::Parity parity =
        (c.model == ModelKind::LeakySphere) ? models::Parity::Odd : c.parity;
    std::vector<resonance::ComplexPole> poles;
    if (c.model == ModelKind::LeakySphere)
        poles = resonance::resonance_scan(m.leaky, parity, m.leaky.V0);
    else
        poles = resonance::resonance_scan(m.twin, m.twin.V0);
    RunConfig cs = c;
    const auto stat = stationary_roots(cs, m);
    if (fmt == Format::Csv) {
        std::ostringstream os;
        os << "parity,E_r,E_i,residual,stationary_E\n";
        for (size_t i = 0; i < poles.size(); ++i) {
            os << (poles[i].parity == models::Parity::Even ? "even" : "odd") << ","
               << fmt17(poles[i].E_r) << "," << fmt17(poles[i].E_i) << ","
               << fmt17(poles[i].residual) << ",";
            if (i < stat.size()) os << fmt17(stat[i].E);
            os << "\n";
        }
        return os.str();
    }
    json j{{"model", model_name(c.model)},
           {"parameters", parameters_block(c, m)},
           {"units", units_block(c.mass)}};
    j["poles"] = json::array();
    for (const auto& p : poles)
        j["poles"].push_back(json{{"E_r", p.E_r},
                                  {"E_i", p.E_i},
                                  {"residual", p.residual},
                                  {"parity", p.parity == models::Parity::Even ? "even" : "odd"}});
    j["stationary"] = json::array();
    for (const auto& r : stat) j["stationary"].push_back(r.E);
    // Side-by-side comparison: i-th pole against i-th stationary root (the
    // two families need not pair up one to one).
    j["comparison"] = json::array();
    for (size_t i = 0; i < poles.size(); ++i) {
        json row{{"E_r", poles[i].E_r}, {"E_i", poles[i].E_i}};
        if (i < stat.size())
            row["stationary_E"] = stat[i].E;
        else
            row["stationary_E"] = nullptr;
        j["comparison"].push_back(row);
    }
    return j.dump(2) + "\n";
}

std::string cmd_timeline(const RunConfig& c, const Models& m) {
    const GridSpec g = c.grid.set ? c.grid : default_grid(c, m);
    const auto xs = make_grid(g);
    std::ostringstream os;
    os << "x,re_xi,im_xi\n";
    for (double x : xs) {
        std::complex<double> v;
        switch (c.model) {
            case ModelKind::DeltaField:
                v = timeline::xi_uniform(c.tau, x, m.delta.F, c.mass);
                break;
            case ModelKind::LeakySphere:
                v = timeline::xi_spherical(c.l, c.tau, x, c.mass);
                break;
            case ModelKind::TwinBarrier:
                v = timeline::xi_free(c.parity == models::Parity::Even
                                          ? timeline::Parity::Even
                                          : timeline::Parity::Odd,
                                      c.tau, x, c.mass);
                break;
        }
        os << fmt17(x) << "," << fmt17(v.real()) << "," << fmt17(v.imag()) << "\n";
    }
    return os.str();
}

std::string cmd_greens(const RunConfig& c, const Models& m) {
    const GridSpec g = c.grid.set ? c.grid : default_grid(c, m);
    const auto xs = make_grid(g);
    double E;
    if (c.energy) {
        E = *c.energy;
    } else {
        const auto roots = stationary_roots(c, m);
        if (roots.empty()) throw convergence_error("greens: no stationary root to set the default energy");
        E = roots[0].E;
    }
    const double src = c.source ? *c.source
                                : (c.model == ModelKind::DeltaField ? 0.0 : 0.5 * c.a);
    std::ostringstream os;
    os << "x,value\n";
    for (double x : xs) {
        double v;
        switch (c.model) {
            case ModelKind::DeltaField:
                v = greens::green_uniform(E, x, src, m.delta.F, c.mass);
                break;
            case ModelKind::LeakySphere:
                v = greens::green_swave(E, x, src, c.mass);
                break;
            case ModelKind::TwinBarrier:
                v = greens::green_free(c.parity == models::Parity::Even
                                           ? greens::Parity::Even
                                           : greens::Parity::Odd,
                                       E, x, src, c.mass);
                break;
            default:
                throw config_error("greens: unknown model");
        }
        os << fmt17(x) << "," << fmt17(v) << "\n";
    }
    return os.str();
}

std::string cmd_regression(const RunConfig& c) {
    const auto results = regression::regression_suite(c.tol_scale);
    std::ostringstream os;
    regression::print_report(os, results);
    return os.str();
}

} // namespace

void apply_config_file(RunConfig& config, const std::string& path) {
    std::ifstream is(path);
    if (!is) throw error("config file not readable: " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        // trim
        const auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        const auto e = line.find_last_not_of(" \t\r");
        line = line.substr(b, e - b + 1);
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw error("config: expected key=value at line " + std::to_string(lineno));
        const std::string key = line.substr(0, eq);
        const std::string val = line.substr(eq + 1);
        auto as_double = [&]() { return std::stod(val); };
        if (key == "model") {
            if (val == "delta-field") config.model = ModelKind::DeltaField;
            else if (val == "leaky-sphere") config.model = ModelKind::LeakySphere;
            else if (val == "twin-barrier") config.model = ModelKind::TwinBarrier;
            else throw error("config: unknown model '" + val + "'");
        } else if (key == "V0a2") config.V0a2 = as_double();
        else if (key == "w") config.w_over_a = as_double();
        else if (key == "a") config.a = as_double();
        else if (key == "f-frac") config.f_frac = as_double();
        else if (key == "eb") config.eb = as_double();
        else if (key == "mass") config.mass = as_double();
        else if (key == "tau") config.tau = as_double();
        else if (key == "l") config.l = static_cast<int>(as_double());
        else if (key == "energy") config.energy = as_double();
        else if (key == "source") config.source = as_double();
        else if (key == "out") config.out = val;
        else if (key == "parity") {
            if (val == "even") config.parity = models::Parity::Even;
            else if (val == "odd") config.parity = models::Parity::Odd;
            else throw error("config: parity must be even|odd");
        } else if (key == "format") {
            if (val == "csv") config.format = Format::Csv;
            else if (val == "json") config.format = Format::Json;
            else throw error("config: format must be csv|json");
        } else if (key == "grid") {
            GridSpec g;
            if (std::sscanf(val.c_str(), "%d,%lf,%lf", &g.n, &g.lo, &g.hi) != 3)
                throw error("config: grid must be N,min,max");
            g.set = true;
            config.grid = g;
        } else {
            throw error("config: unknown key '" + key + "'");
        }
    }
}

int run(const RunConfig& config) {
    try {
        if (config.grid.set && (config.grid.n < 2 || !(config.grid.lo < config.grid.hi)))
            throw config_error("grid: need N >= 2 and min < max");
        if (config.command == Command::Regression) {
            const std::string report = cmd_regression(config);
            atomic_write(config.out, report);
            return report.find("FAIL") == std::string::npos ? kExitOk : 1;
        }
        const Models m = build_models(config);
        const Format fmt = effective_format(config);
        std::string artifact;
        switch (config.command) {
            case Command::Solve: artifact = cmd_solve(config, m, fmt); break;
            case Command::Waveform: artifact = cmd_waveform(config, m); break;
            case Command::Scan: artifact = cmd_scan(config, m); break;
            case Command::Critical: artifact = cmd_critical(config, m, fmt); break;
            case Command::Resonances: artifact = cmd_resonances(config, m, fmt); break;
            case Command::Timeline: artifact = cmd_timeline(config, m); break;
            case Command::Greens: artifact = cmd_greens(config, m); break;
            case Command::Regression: break;
        }
        atomic_write(config.out, artifact);
        return kExitOk;
    } catch (const config_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadConfig;
    } catch (const qbs::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
}

} // namespace qbs::cli
