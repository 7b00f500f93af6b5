#include "cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "lvgame/analytic.hpp"
#include "lvgame/equilibria.hpp"
#include "lvgame/errors.hpp"
#include "lvgame/market_data.hpp"
#include "lvgame/serialize.hpp"
#include "lvgame/stability.hpp"
#include "lvgame/text.hpp"

namespace lvgame::cli {

namespace fs = std::filesystem;
using nlohmann::json;

Settings load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::IoError, "cannot open config " + path);
    boost::property_tree::ptree tree;
    try {
        boost::property_tree::ini_parser::read_ini(in, tree);
    } catch (const boost::property_tree::ini_parser_error& e) {
        throw Error(ErrorKind::InvalidConfig, path + ":" + std::to_string(e.line()) + ": " + e.message());
    }
    Settings s;
    for (const auto& [section, body] : tree) {
        if (body.empty()) throw Error(ErrorKind::InvalidConfig, "key '" + section + "' outside any section");
        for (const auto& [key, value] : body) s[section][key] = value.get_value<std::string>();
    }
    return s;
}

namespace {

const std::string* lookup(const Settings& s, const std::string& section, const std::string& key) {
    const auto sec = s.find(section);
    if (sec == s.end()) return nullptr;
    const auto it = sec->second.find(key);
    return it == sec->second.end() ? nullptr : &it->second;
}

double number(const Settings& s, const std::string& section, const std::string& key, std::optional<double> fallback = {}) {
    const auto* raw = lookup(s, section, key);
    if (raw == nullptr) {
        if (fallback) return *fallback;
        throw Error(ErrorKind::InvalidConfig, "missing " + section + "." + key);
    }
    const auto v = parse_double(*raw);
    if (!v) throw Error(ErrorKind::InvalidConfig, section + "." + key + ": not a number: '" + *raw + "'");
    return *v;
}

Interaction mode_of(const std::string& text) {
    if (text == "competitive") return Interaction::competitive;
    if (text == "cooperative") return Interaction::cooperative;
    throw Error(ErrorKind::InvalidConfig, "mode must be competitive or cooperative, got '" + text + "'");
}

std::vector<double> list_or_broadcast(const Settings& s, const std::string& key, std::size_t n, double fallback) {
    const auto* raw = lookup(s, "model", key);
    if (raw == nullptr) return std::vector<double>(n, fallback);
    auto v = parse_list(*raw, "model." + key);
    if (v.size() == 1 && n > 1) v.assign(n, v.front());
    return v;
}

NPlayerParams nplayer_from(const Settings& s) {
    NPlayerParams p;
    p.mode = mode_of(lookup(s, "model", "mode") ? *lookup(s, "model", "mode") : "competitive");

    std::vector<std::vector<double>> rows;
    if (const auto* c = lookup(s, "model", "C")) {
        std::stringstream ss(*c);
        std::string row;
        while (std::getline(ss, row, ';')) rows.push_back(parse_list(row, "model.C"));
    }

    std::size_t n = 0;
    if (lookup(s, "model", "n")) {
        const double nv = number(s, "model", "n");
        if (!(nv >= 1.0 && nv == std::floor(nv))) throw Error(ErrorKind::InvalidConfig, "model.n must be a positive integer");
        n = static_cast<std::size_t>(nv);
    } else if (!rows.empty()) {
        n = rows.size();
    } else {
        for (const char* key : {"rho", "K"}) {
            if (const auto* raw = lookup(s, "model", key)) n = std::max(n, parse_list(*raw, key).size());
        }
    }
    if (n == 0) throw Error(ErrorKind::InvalidConfig, "nplayer model needs n, C, or a rho/K list");

    p.rho = list_or_broadcast(s, "rho", n, 1.0);
    p.K = list_or_broadcast(s, "K", n, 1.0);
    p.C = Matrix(n);
    if (!rows.empty()) {
        if (rows.size() != n) throw Error(ErrorKind::DimensionMismatch, "model.C needs " + std::to_string(n) + " rows");
        for (std::size_t i = 0; i < n; ++i) {
            if (rows[i].size() != n) {
                throw Error(ErrorKind::DimensionMismatch, "model.C row " + std::to_string(i + 1) + " needs " + std::to_string(n) + " entries");
            }
            for (std::size_t j = 0; j < n; ++j) p.C(i, j) = rows[i][j];
        }
    } else {
        const double c = number(s, "model", "c", 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) p.C(i, j) = c;
    }
    return p;
}

}  // namespace

std::vector<double> parse_list(const std::string& text, const std::string& what) {
    std::vector<double> out;
    for (const auto& row : split_csv(text)) {
        for (auto f : row.fields) {
            const auto v = parse_double(f);
            if (!v) throw Error(ErrorKind::InvalidConfig, what + ": not a number: '" + std::string(f) + "'");
            out.push_back(*v);
        }
    }
    if (out.empty()) throw Error(ErrorKind::InvalidConfig, what + ": empty list");
    return out;
}

ModelSpec model_from_settings(const Settings& s) {
    const auto* raw = lookup(s, "model", "variant");
    if (raw == nullptr) throw Error(ErrorKind::InvalidConfig, "missing model.variant (or --model)");
    std::string variant = *raw;
    std::replace(variant.begin(), variant.end(), '-', '_');

    if (variant == "logistic") return LogisticParams{number(s, "model", "rho"), number(s, "model", "K")};
    if (variant == "competitive" || variant == "cooperative" || variant == "nondim") {
        NondimParams p;
        p.a12 = number(s, "model", "a12");
        p.a21 = number(s, "model", "a21");
        p.rho = number(s, "model", "rho", 1.0);
        p.mode = variant == "nondim" ? mode_of(lookup(s, "model", "mode") ? *lookup(s, "model", "mode") : "competitive")
                                     : mode_of(variant);
        return p;
    }
    if (variant == "competitive2" || variant == "cooperative2") {
        TwoPlayerParams p;
        p.rho1 = number(s, "model", "rho1");
        p.rho2 = number(s, "model", "rho2");
        p.K1 = number(s, "model", "K1");
        p.K2 = number(s, "model", "K2");
        p.c1 = number(s, "model", "c1");
        p.c2 = number(s, "model", "c2");
        p.mode = variant == "competitive2" ? Interaction::competitive : Interaction::cooperative;
        return p;
    }
    if (variant == "predator_prey") {
        return PredatorPreyParams{number(s, "model", "delta"), number(s, "model", "epsilon"), number(s, "model", "alpha"),
                                  number(s, "model", "beta")};
    }
    if (variant == "nplayer") return nplayer_from(s);
    throw Error(ErrorKind::InvalidConfig, "unknown model variant '" + *raw + "'");
}

IntegrationConfig integration_from_settings(const Settings& s) {
    IntegrationConfig c;
    c.t_end = number(s, "integration", "t_end", c.t_end);
    c.step = number(s, "integration", "step", c.step);
    c.blowup_threshold = number(s, "integration", "blowup_threshold", c.blowup_threshold);
    c.jitter = number(s, "integration", "jitter", c.jitter);
    const double seed = number(s, "integration", "seed", 0.0);
    if (!(seed >= 0.0 && seed == std::floor(seed))) throw Error(ErrorKind::InvalidConfig, "integration.seed must be a non-negative integer");
    c.seed = static_cast<std::uint64_t>(seed);
    validate_config(c);
    return c;
}

PremiumMapping mapping_from_settings(const Settings& s) {
    PremiumMapping m;
    m.base = number(s, "mapping", "base", m.base);
    m.scale = number(s, "mapping", "scale", m.scale);
    m.claim_base = number(s, "mapping", "claim_base", m.claim_base);
    m.claim_scale = number(s, "mapping", "claim_scale", m.claim_scale);
    if (const auto* w = lookup(s, "mapping", "weights")) m.exposure_weights = parse_list(*w, "mapping.weights");
    return m;
}

namespace {

/// Options that land in a Settings section; flags override config values.
class SettingsBinder {
public:
    void bind(CLI::App* app, const std::string& flag, const std::string& section, const std::string& key,
              const std::string& help) {
        app->add_option_function<std::string>(
            flag, [this, section, key](const std::string& v) { flags_[section][key] = v; }, help);
    }

    void bind_config(CLI::App* app) { app->add_option("--config", config_path_, "INI file with [model], [integration], [mapping] sections"); }

    Settings resolve() const {
        Settings merged;
        if (!config_path_.empty()) merged = load_config(config_path_);
        for (const auto& [section, keys] : flags_)
            for (const auto& [k, v] : keys) merged[section][k] = v;
        return merged;
    }

private:
    std::string config_path_;
    Settings flags_;
};

void bind_model_flags(CLI::App* app, SettingsBinder& b) {
    b.bind_config(app);
    b.bind(app, "--model", "model", "variant",
           "logistic | competitive | cooperative | nondim | competitive2 | cooperative2 | predator-prey | nplayer");
    b.bind(app, "--mode", "model", "mode", "competitive | cooperative (nondim, nplayer)");
    b.bind(app, "--rho", "model", "rho", "growth rate (logistic), rate ratio rho2/rho1 (nondim), list for nplayer");
    b.bind(app, "--K", "model", "K", "carrying capacity (logistic); list for nplayer");
    b.bind(app, "--a12", "model", "a12", "nondimensional pressure of player 2 on player 1");
    b.bind(app, "--a21", "model", "a21", "nondimensional pressure of player 1 on player 2");
    for (const char* k : {"rho1", "rho2", "K1", "K2", "c1", "c2"}) {
        b.bind(app, std::string("--") + k, "model", k, std::string("two-player parameter ") + k);
    }
    b.bind(app, "--delta", "model", "delta", "policyholder risk growth rate");
    b.bind(app, "--epsilon", "model", "epsilon", "risk-return interdependence");
    b.bind(app, "--alpha", "model", "alpha", "return-risk interdependence");
    b.bind(app, "--beta", "model", "beta", "insurer return decay rate");
    b.bind(app, "--n", "model", "n", "player count (nplayer)");
    b.bind(app, "--C", "model", "C", "interaction matrix rows 'c11,c12;c21,c22' (nplayer)");
    b.bind(app, "--c", "model", "c", "uniform off-diagonal interaction (nplayer)");
}

void bind_integration_flags(CLI::App* app, SettingsBinder& b) {
    b.bind(app, "--t-end", "integration", "t_end", "final time (default 100)");
    b.bind(app, "--step", "integration", "step", "fixed RK4 step (default 1e-3)");
    b.bind(app, "--blowup", "integration", "blowup_threshold", "state-norm bound that flags divergence (default 1e9)");
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
    } else {
        write_file(path, text);
    }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::vector<EquilibriumPoint> candidate_points(const Model& model) {
    if (model.kind() == ModelKind::nplayer) {
        EquilibriumPoint origin;
        origin.coords = State(model.dimension(), 0.0);
        origin.kind = PointKind::origin;
        const auto check = verify_fixed_point(model, origin.coords);
        origin.residual = check.residual;
        origin.is_true_fixed_point = check.is_fixed_point;
        return {origin, interior_equilibrium_nplayer(model)};
    }
    return enumerate_equilibria(model);
}

std::optional<RegimeCase> regime_of(const Model& model) {
    if (const auto* p = model.get_if<NondimParams>()) return regime_case(*p);
    if (const auto* p = model.get_if<TwoPlayerParams>()) return regime_case(nondimensionalize(*p).params);
    return std::nullopt;
}

std::string attractor_label(const AttractorResult& a) {
    switch (a.kind) {
        case AttractorKind::attractor: return "attractor";
        case AttractorKind::divergent: return "divergent";
        case AttractorKind::undecided: return "undecided";
    }
    return "undecided";
}

AxisRange parse_axis(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ':')) parts.push_back(part);
    if (parts.size() != 3) throw Error(ErrorKind::InvalidConfig, "axis must be lo:hi:count, got '" + text + "'");
    const auto lo = parse_double(parts[0]);
    const auto hi = parse_double(parts[1]);
    const auto count = parse_double(parts[2]);
    if (!lo || !hi || !count || *count < 1.0 || *count != std::floor(*count)) {
        throw Error(ErrorKind::InvalidConfig, "axis must be lo:hi:count, got '" + text + "'");
    }
    return {*lo, *hi, static_cast<std::size_t>(*count)};
}

std::string three_digit(std::size_t i) {
    std::ostringstream os;
    os << std::setw(3) << std::setfill('0') << i;
    return os.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Lotka-Volterra insurance games: equilibria, stability, simulation and market regressions", "lvgame"};
    app.require_subcommand(1);
    app.fallthrough(false);

    // equilibria
    SettingsBinder eq_b;
    std::string eq_out;
    double eq_tol = kDefaultResidualTol;
    auto* eq = app.add_subcommand("equilibria", "Enumerate steady points and classify their stability (JSON)");
    bind_model_flags(eq, eq_b);
    eq->add_option("--tol", eq_tol, "residual tolerance for a genuine fixed point")->capture_default_str();
    eq->add_option("-o,--output", eq_out, "output file (default stdout)");

    // simulate
    SettingsBinder sim_b;
    std::string sim_initial, sim_out;
    int sim_digits = 6;
    auto* sim = app.add_subcommand("simulate", "Integrate one trajectory with fixed-step RK4 (CSV t,x1,...,xn)");
    bind_model_flags(sim, sim_b);
    bind_integration_flags(sim, sim_b);
    sim->add_option("--initial", sim_initial, "initial state, comma separated")->required();
    sim->add_option("--digits", sim_digits, "significant digits in CSV output")->capture_default_str();
    sim->add_option("-o,--output", sim_out, "output file (default stdout)");

    // portrait
    SettingsBinder por_b;
    std::vector<std::string> por_axes;
    std::string por_points, por_dir;
    double por_tol = 1e-3;
    unsigned por_threads = 0;
    int por_digits = 6;
    auto* por = app.add_subcommand("portrait", "Integrate a grid of initial conditions; one CSV per trajectory plus index.json");
    bind_model_flags(por, por_b);
    bind_integration_flags(por, por_b);
    por->add_option("--axis", por_axes, "lattice axis lo:hi:count, one per state dimension (repeat)");
    por->add_option("--points", por_points, "explicit initial conditions 'x1,y1;x2,y2'");
    por->add_option("--output-dir", por_dir, "directory for trajectory CSVs and index.json")->required();
    por->add_option("--tol", por_tol, "attractor detection tolerance")->capture_default_str();
    por->add_option("--threads", por_threads, "worker threads (0 = hardware concurrency)")->capture_default_str();
    por->add_option("--digits", por_digits, "significant digits in CSV output")->capture_default_str();
    por_b.bind(por, "--seed", "integration", "seed", "seed for initial-condition jitter (required with --jitter)");
    por_b.bind(por, "--jitter", "integration", "jitter", "uniform jitter amplitude applied to grid points (default 0)");

    // regime
    std::string reg_mode = "competitive";
    double reg_a12 = 0.0, reg_a21 = 0.0;
    auto* reg = app.add_subcommand("regime", "Print the parameter-regime case (A, B, C, D or Boundary)");
    reg->add_option("--mode", reg_mode, "competitive | cooperative")->capture_default_str();
    reg->add_option("--a12", reg_a12, "nondimensional pressure of player 2 on player 1")->required();
    reg->add_option("--a21", reg_a21, "nondimensional pressure of player 1 on player 2")->required();

    // game
    SettingsBinder game_b;
    std::string game_market, game_table, game_out;
    auto* game = app.add_subcommand("game", "n-player Nash premium report, optionally compared with market premiums (JSON)");
    bind_model_flags(game, game_b);
    game_b.bind(game, "--base", "mapping", "base", "premium at zero share (default 0)");
    game_b.bind(game, "--scale", "mapping", "scale", "premium per unit share (default 300)");
    game_b.bind(game, "--claim-base", "mapping", "claim_base", "claim exposure at zero share (default 0)");
    game_b.bind(game, "--claim-scale", "mapping", "claim_scale", "claim exposure per unit share (default 10000)");
    game_b.bind(game, "--weights", "mapping", "weights", "per-player exposure weights, comma separated");
    game->add_option("--market", game_market, "CSV player,market_premium[,claim_exposure]");
    game->add_option("--table", game_table,
                     "CSV player,nash_premium,nash_claim_exposure,market_premium,market_claim_exposure (skips the model)");
    game->add_option("-o,--output", game_out, "output file (default stdout)");

    // regress
    std::string rg_in, rg_out, rg_plot;
    auto* rg = app.add_subcommand("regress", "OLS premium/claim trends over calendar years (JSON)");
    rg->add_option("--input", rg_in, "CSV year,net_written_premium,net_claims_incurred")->required();
    rg->add_option("-o,--output", rg_out, "report file (default stdout)");
    rg->add_option("--plot-csv", rg_plot, "also write year,premium,claim for plotting");

    // analytic
    std::string an_curve, an_out;
    double an_N0 = 1.0, an_K = 1.0, an_rho = 1.0, an_amp = 1.0, an_rate = 1.0, an_limit = 1.0, an_t_end = 10.0;
    std::size_t an_samples = 101;
    int an_digits = 6;
    auto* an = app.add_subcommand("analytic", "Sample closed-form curves (CSV t,value) or the A/e threshold");
    an->add_option("--curve", an_curve, "logistic | risk | return | threshold")
        ->required()
        ->check(CLI::IsMember({"logistic", "risk", "return", "threshold"}));
    an->add_option("--N0", an_N0, "logistic initial value")->capture_default_str();
    an->add_option("--K", an_K, "logistic threshold")->capture_default_str();
    an->add_option("--rho", an_rho, "logistic rate")->capture_default_str();
    an->add_option("--amplitude", an_amp, "A (risk) or B (return)")->capture_default_str();
    an->add_option("--rate", an_rate, "delta (risk) or alpha (return)")->capture_default_str();
    an->add_option("--limit", an_limit, "asymptote A for the threshold")->capture_default_str();
    an->add_option("--t-end", an_t_end, "last sample time")->capture_default_str();
    an->add_option("--samples", an_samples, "number of samples (>= 2)")->capture_default_str();
    an->add_option("--digits", an_digits, "significant digits")->capture_default_str();
    an->add_option("-o,--output", an_out, "output file (default stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n";
        err << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
        return kExitValidation;
    }

    try {
        if (*eq) {
            const auto model = validate(model_from_settings(eq_b.resolve()));
            std::vector<StabilityReport> reports;
            for (const auto& p : candidate_points(model)) {
                EquilibriumPoint q = p;
                const auto check = verify_fixed_point(model, q.coords, eq_tol);
                q.is_true_fixed_point = check.is_fixed_point;
                reports.push_back(analyze_point(model, q));
            }
            emit(dump(equilibria_document(model, reports, regime_of(model))), eq_out, out);
        } else if (*sim) {
            const auto settings = sim_b.resolve();
            const auto model = validate(model_from_settings(settings));
            const auto traj = integrate(model, parse_list(sim_initial, "--initial"), integration_from_settings(settings));
            emit(trajectory_csv(traj, sim_digits), sim_out, out);
            if (traj.status != TrajectoryStatus::completed) {
                err << "trajectory stopped at t=" << format_number(traj.stop_time, 10) << ": " << to_string(traj.status) << "\n";
            }
        } else if (*por) {
            const auto settings = por_b.resolve();
            const auto model = validate(model_from_settings(settings));
            const auto config = integration_from_settings(settings);
            if (config.jitter > 0.0 && !lookup(settings, "integration", "seed")) {
                throw Error(ErrorKind::InvalidConfig, "--jitter requires an explicit --seed");
            }
            PortraitGrid grid;
            if (!por_points.empty()) {
                std::stringstream ss(por_points);
                std::string pt;
                while (std::getline(ss, pt, ';')) grid.explicit_points.push_back(parse_list(pt, "--points"));
            }
            for (const auto& a : por_axes) grid.axes.push_back(parse_axis(a));
            if (grid.explicit_points.empty() && grid.axes.size() != model.dimension()) {
                throw Error(ErrorKind::InvalidConfig, "give one --axis per state dimension or use --points");
            }
            const auto trajs = phase_portrait(model, grid, config, por_threads);

            std::vector<EquilibriumPoint> candidates;
            for (const auto& p : candidate_points(model)) {
                if (p.is_true_fixed_point) candidates.push_back(p);
            }
            std::error_code ec;
            fs::create_directories(por_dir, ec);
            if (ec) throw Error(ErrorKind::IoError, "cannot create " + por_dir + ": " + ec.message());

            json index = json::array();
            for (std::size_t i = 0; i < trajs.size(); ++i) {
                const auto name = "trajectory_" + three_digit(i) + ".csv";
                write_file(fs::path(por_dir) / name, trajectory_csv(trajs[i], por_digits));
                const auto att = detect_attractor(trajs[i], candidates, por_tol);
                json entry{{"file", name},
                           {"initial", trajs[i].states.front()},
                           {"status", to_string(trajs[i].status)},
                           {"stop_time", trajs[i].stop_time},
                           {"attractor_kind", attractor_label(att)},
                           {"attractor", nullptr}};
                if (att.kind == AttractorKind::attractor) entry["attractor"] = candidates[att.index].coords;
                index.push_back(std::move(entry));
            }
            json doc{{"model", to_string(model.kind())}, {"tol", por_tol}, {"trajectories", std::move(index)}};
            write_file(fs::path(por_dir) / "index.json", dump(doc));
        } else if (*reg) {
            NondimParams p{reg_a12, reg_a21, 1.0, mode_of(reg_mode)};
            validate(p);
            out << to_string(regime_case(p)) << "\n";
        } else if (*game) {
            GameResult result;
            if (!game_table.empty()) {
                result = parse_premium_table(read_file(game_table)).result;
            } else {
                const auto settings = game_b.resolve();
                const auto model = validate(model_from_settings(settings));
                result = nash_premiums(model, mapping_from_settings(settings));
                if (!game_market.empty()) {
                    const auto market = parse_market_premiums(read_file(game_market));
                    result = compare_to_market(std::move(result), market.premiums);
                }
            }
            std::optional<ExposureAssociation> assoc;
            if (result.players() >= 2) assoc = exposure_premium_association(result);
            emit(dump(to_json(result, assoc)), game_out, out);
        } else if (*rg) {
            const auto series = load_series(rg_in);
            emit(dump(to_json(premium_claim_report(series))), rg_out, out);
            if (!rg_plot.empty()) write_file(rg_plot, plot_csv(series));
        } else if (*an) {
            std::string text;
            if (an_curve == "threshold") {
                const double k = analytic::threshold_constant(an_limit);
                text = "limit,threshold\n" + format_number(an_limit, an_digits) + "," + format_number(k, an_digits) + "\n" +
                       "# threshold = limit / e: decision guideline for the maximum risk / minimum return level\n";
            } else {
                if (an_samples < 2) throw Error(ErrorKind::InvalidConfig, "--samples >= 2");
                if (!(an_t_end > 0.0)) throw Error(ErrorKind::InvalidConfig, "--t-end > 0");
                text = "t,value\n";
                for (std::size_t k = 0; k < an_samples; ++k) {
                    const double t = an_t_end * static_cast<double>(k) / static_cast<double>(an_samples - 1);
                    double v = 0.0;
                    if (an_curve == "logistic") {
                        v = analytic::logistic_solution(an_N0, an_K, an_rho, t);
                    } else if (an_curve == "risk") {
                        v = analytic::zero_interaction_risk({an_amp, an_rate, analytic::CurveSign::growth}, t);
                    } else {
                        v = analytic::zero_interaction_return({an_amp, an_rate, analytic::CurveSign::decay}, t);
                    }
                    text += format_number(t, std::max(an_digits, 10)) + "," + format_number(v, an_digits) + "\n";
                }
            }
            emit(text, an_out, out);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.is_validation() ? kExitValidation : kExitIo;
    }
    return kExitOk;
}

}  // namespace lvgame::cli
