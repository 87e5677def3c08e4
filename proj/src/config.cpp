#include "spp/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "spp/errors.hpp"

namespace spp {

namespace {

constexpr struct {
    Quantity id;
    const char* name;
} kQuantities[] = {
    {Quantity::chi, "chi"},
    {Quantity::eps_s, "eps_s"},
    {Quantity::R, "R"},
    {Quantity::T_el, "T_el"},
    {Quantity::G, "G"},
    {Quantity::L, "L"},
    {Quantity::delta_m, "delta_m"},
    {Quantity::delta_s, "delta_s"},
    {Quantity::k_lr, "k_lr"},
    {Quantity::k_sr, "k_sr"},
    {Quantity::k_lr_root, "k_lr_root"},
    {Quantity::k_sr_root, "k_sr_root"},
    {Quantity::l_lr, "l_lr"},
    {Quantity::l_sr, "l_sr"},
    {Quantity::vg_lr, "vg_lr"},
    {Quantity::vg_sr, "vg_sr"},
    {Quantity::tau_lr, "tau_lr"},
    {Quantity::tau_sr, "tau_sr"},
    {Quantity::im_k_lr_over_k0, "im_k_lr_over_k0"},
    {Quantity::im_k_sr_over_k0, "im_k_sr_over_k0"},
};

constexpr struct {
    SweepVar var;
    const char* name;
} kSweepVars[] = {
    {SweepVar::delta_p, "delta_p"},
    {SweepVar::omega_b, "omega_b"},
    {SweepVar::theta_p, "theta_p"},
    {SweepVar::q, "q"},
};

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

double parse_number(const std::string& text, int line) {
    const std::string t = trim(text);
    char* end = nullptr;
    const double v = std::strtod(t.c_str(), &end);
    if (t.empty() || end != t.c_str() + t.size())
        throw parse_error("expected a number, got '" + t + "'", line);
    return v;
}

int parse_int(const std::string& text, int line) {
    const double v = parse_number(text, line);
    const int i = static_cast<int>(v);
    if (static_cast<double>(i) != v)
        throw parse_error("expected an integer, got '" + trim(text) + "'",
                          line);
    return i;
}

bool parse_bool(const std::string& text, int line) {
    const std::string t = trim(text);
    if (t == "true" || t == "1") return true;
    if (t == "false" || t == "0") return false;
    throw parse_error("expected true/false, got '" + t + "'", line);
}

} // namespace

const char* quantity_name(Quantity id) {
    for (const auto& q : kQuantities)
        if (q.id == id) return q.name;
    return "?";
}

const char* sweep_var_name(SweepVar var) {
    for (const auto& v : kSweepVars)
        if (v.var == var) return v.name;
    return "?";
}

cplx parse_complex(const std::string& text) {
    const std::string t = trim(text);
    if (t.empty()) throw validation_error("empty complex literal");

    auto to_double = [](const std::string& s) {
        char* end = nullptr;
        const double v = std::strtod(s.c_str(), &end);
        if (s.empty() || end != s.c_str() + s.size())
            throw validation_error("bad complex literal component '" + s + "'");
        return v;
    };

    if (t.back() != 'i') return {to_double(t), 0.0};

    // Split at the last +/- that is not an exponent sign and not leading.
    std::string body = t.substr(0, t.size() - 1);
    std::size_t split = std::string::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        if ((body[i] == '+' || body[i] == '-') &&
            body[i - 1] != 'e' && body[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    auto imag_part = [&](std::string s) {
        if (s.empty() || s == "+") return 1.0;
        if (s == "-") return -1.0;
        return to_double(s);
    };
    if (split == std::string::npos) return {0.0, imag_part(body)};
    return {to_double(body.substr(0, split)), imag_part(body.substr(split))};
}

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string format_complex(cplx z) {
    if (z.imag() == 0.0) return format_double(z.real());
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
    return buf;
}

void RunConfig::validate() const {
    qw.validate();
    stack.validate();
    if (theta_p < -90.0 || theta_p > 90.0)
        throw validation_error("theta_p outside [-90, 90] degrees");
    if (axes.size() > 2)
        throw validation_error("at most two nested sweeps are supported");
    for (const auto& ax : axes) {
        if (ax.count < 2)
            throw validation_error("sweep count must be >= 2");
        if (ax.start == ax.stop)
            throw validation_error("sweep start and stop must differ");
    }
    if (axes.size() == 2 && axes[0].var == axes[1].var)
        throw validation_error("nested sweeps must use distinct variables");
}

RunConfig parse_config(const std::string& text) {
    RunConfig cfg;
    cfg.qw = QwConfig{};
    cfg.stack = OpticalStack{};

    // section -> key -> (value, line)
    std::map<std::string, std::map<std::string, std::pair<std::string, int>>>
        seen;

    std::istringstream in(text);
    std::string line, section;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        const std::string t = trim(line);
        if (t.empty()) continue;
        if (t.front() == '[') {
            if (t.back() != ']')
                throw parse_error("unterminated section header", line_no);
            section = trim(t.substr(1, t.size() - 2));
            if (section != "qw" && section != "stack" && section != "sweep" &&
                section != "sweep2" && section != "outputs")
                throw validation_error("unknown section [" + section +
                                       "] (line " + std::to_string(line_no) +
                                       ")");
            continue;
        }
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw parse_error("expected key = value", line_no);
        if (section.empty())
            throw parse_error("key outside of any section", line_no);
        const std::string key = trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));
        if (key.empty()) throw parse_error("empty key", line_no);
        auto [it, inserted] = seen[section].emplace(key,
                                                    std::make_pair(value,
                                                                   line_no));
        if (!inserted)
            throw parse_error("duplicate key '" + key + "' in [" + section +
                                  "]",
                              line_no);
    }

    auto reject_unknown = [](const std::string& section_name,
                             const std::map<std::string,
                                            std::pair<std::string, int>>& kv,
                             std::initializer_list<const char*> known) {
        for (const auto& [key, v] : kv) {
            bool ok = false;
            for (const char* k : known)
                if (key == k) ok = true;
            if (!ok)
                throw validation_error("unknown key '" + key + "' in [" +
                                       section_name + "] (line " +
                                       std::to_string(v.second) + ")");
        }
    };

    if (auto it = seen.find("qw"); it != seen.end()) {
        const auto& kv = it->second;
        reject_unknown("qw", kv,
                       {"omega_p", "omega_c", "omega_b", "omega_s", "delta_p",
                        "delta_c", "delta_b", "gamma_2", "gamma_3l",
                        "gamma_3d", "gamma_4l", "gamma_4d", "alpha",
                        "pole_eps"});
        auto num = [&](const char* key, double& field) {
            if (auto k = kv.find(key); k != kv.end())
                field = parse_number(k->second.first, k->second.second);
        };
        num("omega_p", cfg.qw.omega_p);
        num("omega_c", cfg.qw.omega_c);
        num("omega_b", cfg.qw.omega_b);
        num("omega_s", cfg.qw.omega_s);
        num("delta_p", cfg.qw.delta_p);
        num("delta_c", cfg.qw.delta_c);
        num("delta_b", cfg.qw.delta_b);
        num("gamma_2", cfg.qw.gamma_2);
        num("gamma_3l", cfg.qw.gamma_3l);
        num("gamma_3d", cfg.qw.gamma_3d);
        num("gamma_4l", cfg.qw.gamma_4l);
        num("gamma_4d", cfg.qw.gamma_4d);
        num("alpha", cfg.qw.alpha);
        num("pole_eps", cfg.qw.pole_eps);
    }

    if (auto it = seen.find("stack"); it != seen.end()) {
        const auto& kv = it->second;
        reject_unknown("stack", kv,
                       {"eps_t", "eps_m", "q", "lambda0", "n_t", "theta_p"});
        if (auto k = kv.find("eps_t"); k != kv.end())
            cfg.stack.eps_t = parse_complex(k->second.first);
        if (auto k = kv.find("eps_m"); k != kv.end())
            cfg.stack.eps_m = parse_complex(k->second.first);
        if (auto k = kv.find("q"); k != kv.end())
            cfg.stack.q = parse_number(k->second.first, k->second.second);
        if (auto k = kv.find("lambda0"); k != kv.end())
            cfg.stack.lambda0 =
                parse_number(k->second.first, k->second.second);
        if (auto k = kv.find("n_t"); k != kv.end())
            cfg.stack.n_t = parse_number(k->second.first, k->second.second);
        if (auto k = kv.find("theta_p"); k != kv.end())
            cfg.theta_p = parse_number(k->second.first, k->second.second);
    }

    auto parse_axis = [&](const std::string& section_name) -> SweepAxis {
        const auto& kv = seen.at(section_name);
        reject_unknown(section_name, kv,
                       {"variable", "start", "stop", "count"});
        for (const char* key : {"variable", "start", "stop", "count"})
            if (!kv.count(key))
                throw validation_error("missing key '" + std::string(key) +
                                       "' in [" + section_name + "]");
        SweepAxis ax{};
        const std::string var = trim(kv.at("variable").first);
        bool known = false;
        for (const auto& v : kSweepVars)
            if (var == v.name) {
                ax.var = v.var;
                known = true;
            }
        if (!known)
            throw validation_error("unknown sweep variable '" + var + "'");
        ax.start = parse_number(kv.at("start").first, kv.at("start").second);
        ax.stop = parse_number(kv.at("stop").first, kv.at("stop").second);
        ax.count = parse_int(kv.at("count").first, kv.at("count").second);
        return ax;
    };

    if (!seen.count("sweep")) {
        if (seen.count("sweep2"))
            throw validation_error("[sweep2] requires a [sweep] section");
        throw validation_error("missing [sweep] section");
    }
    cfg.axes.push_back(parse_axis("sweep"));
    if (seen.count("sweep2")) cfg.axes.push_back(parse_axis("sweep2"));

    if (!seen.count("outputs"))
        throw validation_error("missing [outputs] section");
    {
        const auto& kv = seen.at("outputs");
        reject_unknown("outputs", kv, {"quantities", "out", "plot"});
        if (!kv.count("quantities"))
            throw validation_error("missing key 'quantities' in [outputs]");
        std::stringstream list(kv.at("quantities").first);
        std::string item;
        while (std::getline(list, item, ',')) {
            const std::string name = trim(item);
            if (name.empty()) continue;
            if (name == "vg") {
                cfg.outputs.push_back(Quantity::vg_lr);
                cfg.outputs.push_back(Quantity::vg_sr);
                continue;
            }
            if (name == "tau") {
                cfg.outputs.push_back(Quantity::tau_lr);
                cfg.outputs.push_back(Quantity::tau_sr);
                continue;
            }
            bool known = false;
            for (const auto& q : kQuantities)
                if (name == q.name) {
                    cfg.outputs.push_back(q.id);
                    known = true;
                }
            if (!known)
                throw validation_error("unknown output quantity '" + name +
                                       "'");
        }
        if (cfg.outputs.empty())
            throw validation_error("outputs: quantities list is empty");
        if (auto k = kv.find("out"); k != kv.end())
            cfg.out_path = k->second.first;
        if (auto k = kv.find("plot"); k != kv.end())
            cfg.plot = parse_bool(k->second.first, k->second.second);
    }

    cfg.validate();
    return cfg;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string serialize_config(const RunConfig& cfg) {
    std::ostringstream out;
    out << "[qw]\n";
    out << "omega_p = " << format_double(cfg.qw.omega_p) << "\n";
    out << "omega_c = " << format_double(cfg.qw.omega_c) << "\n";
    out << "omega_b = " << format_double(cfg.qw.omega_b) << "\n";
    out << "omega_s = " << format_double(cfg.qw.omega_s) << "\n";
    out << "delta_p = " << format_double(cfg.qw.delta_p) << "\n";
    out << "delta_c = " << format_double(cfg.qw.delta_c) << "\n";
    out << "delta_b = " << format_double(cfg.qw.delta_b) << "\n";
    out << "gamma_2 = " << format_double(cfg.qw.gamma_2) << "\n";
    out << "gamma_3l = " << format_double(cfg.qw.gamma_3l) << "\n";
    out << "gamma_3d = " << format_double(cfg.qw.gamma_3d) << "\n";
    out << "gamma_4l = " << format_double(cfg.qw.gamma_4l) << "\n";
    out << "gamma_4d = " << format_double(cfg.qw.gamma_4d) << "\n";
    out << "alpha = " << format_double(cfg.qw.alpha) << "\n";
    out << "pole_eps = " << format_double(cfg.qw.pole_eps) << "\n";
    out << "\n[stack]\n";
    out << "eps_t = " << format_complex(cfg.stack.eps_t) << "\n";
    out << "eps_m = " << format_complex(cfg.stack.eps_m) << "\n";
    out << "q = " << format_double(cfg.stack.q) << "\n";
    out << "lambda0 = " << format_double(cfg.stack.lambda0) << "\n";
    out << "n_t = " << format_double(cfg.stack.n_t) << "\n";
    out << "theta_p = " << format_double(cfg.theta_p) << "\n";
    const char* names[] = {"sweep", "sweep2"};
    for (std::size_t i = 0; i < cfg.axes.size(); ++i) {
        out << "\n[" << names[i] << "]\n";
        out << "variable = " << sweep_var_name(cfg.axes[i].var) << "\n";
        out << "start = " << format_double(cfg.axes[i].start) << "\n";
        out << "stop = " << format_double(cfg.axes[i].stop) << "\n";
        out << "count = " << cfg.axes[i].count << "\n";
    }
    out << "\n[outputs]\n";
    out << "quantities = ";
    for (std::size_t i = 0; i < cfg.outputs.size(); ++i) {
        if (i) out << ", ";
        out << quantity_name(cfg.outputs[i]);
    }
    out << "\n";
    if (!cfg.out_path.empty()) out << "out = " << cfg.out_path << "\n";
    out << "plot = " << (cfg.plot ? "true" : "false") << "\n";
    return out.str();
}

} // namespace spp
