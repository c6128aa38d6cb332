// fracreal: realize fractional-order controllers as rational transfer
// functions, synthesize ladders, and sweep frequency responses.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fracreal/baselines.hpp"
#include "fracreal/controllers.hpp"
#include "fracreal/freqresp.hpp"
#include "fracreal/ladder.hpp"
#include "fracreal/tfdoc.hpp"

using namespace fracreal;
using nlohmann::ordered_json;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitMath = 3;

struct ControllerArgs {
    std::string controller;
    std::map<std::string, std::string> params;
    std::string action = "integrator";
    std::string range = "low";
    std::size_t order = 4;
};

void add_controller_options(CLI::App* cmd, ControllerArgs& a, bool with_params) {
    cmd->add_option("--controller", a.controller, "controller family")
        ->required()
        ->check(CLI::IsMember({"diffint", "fopid", "fopd", "leadlag"}));
    cmd->add_option("--action", a.action, "differintegrator action")
        ->check(CLI::IsMember({"integrator", "differentiator"}));
    cmd->add_option("--range", a.range, "generating-function range")->check(CLI::IsMember({"low", "high"}));
    cmd->add_option("--order", a.order, "realization order n ([n/n] approximant)");
    if (!with_params) return;
    for (const char* name : {"lambda", "mu", "alpha", "x", "kp", "ki", "kd", "kc", "T"}) {
        a.params[name];
        cmd->add_option(std::string("--") + name, a.params[name], std::string("parameter ") + name);
    }
}

BigRat param(const ControllerArgs& a, const std::string& name, const char* fallback = nullptr) {
    const std::string& text = a.params.at(name);
    if (text.empty()) {
        if (fallback) return BigRat::parse(fallback);
        throw ValidationError("--" + name + " is required for controller " + a.controller);
    }
    return BigRat::parse(text);
}

Range parse_range(const std::string& r) { return r == "high" ? Range::high : Range::low; }
Action parse_action(const std::string& a) { return a == "differentiator" ? Action::differentiator : Action::integrator; }

ControllerSpec build_spec(const ControllerArgs& a) {
    if (a.controller == "diffint")
        return Differintegrator{param(a, "lambda"), parse_action(a.action), parse_range(a.range), param(a, "T", "1")};
    if (a.controller == "fopid")
        return Fopid{param(a, "kp"), param(a, "ki"), param(a, "kd"), param(a, "lambda"), param(a, "mu")};
    if (a.controller == "fopd") return FopdBracket{param(a, "kp"), param(a, "kd"), param(a, "mu")};
    return LeadLag{param(a, "kc"), param(a, "lambda"), param(a, "x"), param(a, "alpha")};
}

ordered_json spec_meta(const ControllerArgs& a, bool symbolic) {
    ordered_json m = ordered_json::object();
    m["family"] = a.controller;
    if (!symbolic) {
        ordered_json p = ordered_json::object();
        for (const auto& [k, v] : a.params)
            if (!v.empty()) p[k] = BigRat::parse(v).to_string();
        m["parameters"] = p;
    }
    m["order"] = a.order;
    if (a.controller == "diffint" || a.controller == "fopid") m["range"] = a.range;
    if (a.controller == "diffint") m["action"] = a.action;
    return m;
}

template <typename C>
void add_tf_flags(ordered_json& meta, const TransferFunction<C>& tf) {
    if (tf.pade_defect) meta["pade_defect"] = tf.pade_defect;
    if (tf.beyond_validation) meta["beyond_validation"] = true;
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot open output file '" + path + "'");
    out << text;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot read file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string csv_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

ordered_json band_json(const std::optional<Band>& b) {
    if (!b) return nullptr;
    return ordered_json{{"lo", b->lo}, {"hi", b->hi}};
}

// ---------------------------------------------------------------------------

struct RealizeArgs {
    ControllerArgs c;
    std::string out = "-";
    bool as_float = false;
    bool no_meta = false;
};

void run_realize(const RealizeArgs& a) {
    const ControllerSpec spec = build_spec(a.c);
    const RatTf tf = realize(spec, parse_range(a.c.range), a.c.order);
    ordered_json meta = spec_meta(a.c, false);
    add_tf_flags(meta, tf);
    const TfDocument doc = to_document(tf, meta, EmitOptions{a.as_float, !a.no_meta});
    write_output(a.out, emit(doc, !a.no_meta));
}

struct SymbolicArgs {
    ControllerArgs c;
    std::string format = "json";
    std::string out = "-";
    bool no_meta = false;
};

std::string symbolic_text(const SymTf& tf, const ordered_json& meta, bool with_meta) {
    std::ostringstream os;
    if (with_meta) os << "# " << meta.dump() << "\n";
    auto side = [&os](const char* name, const SymPoly& p) {
        os << name << ":\n";
        for (std::size_t k = p.coeffs().size(); k-- > 0;)
            if (!p.coeffs()[k].is_zero()) os << "  s^" << k << ": " << p.coeffs()[k] << "\n";
    };
    side("num", tf.num);
    side("den", tf.den);
    if (tf.gain) os << "gain: " << tf.gain->label << "\n";
    return os.str();
}

void run_symbolic(const SymbolicArgs& a) {
    const Range range = parse_range(a.c.range);
    if (a.c.order < 1) throw ValidationError("realization order must be at least 1");
    SymTf tf;
    if (a.c.controller == "diffint")
        tf = symbolic_differintegrator(range, a.c.order, parse_action(a.c.action));
    else if (a.c.controller == "fopid")
        tf = symbolic_fopid(range, a.c.order);
    else if (a.c.controller == "fopd")
        tf = symbolic_fopd_bracket(a.c.order);
    else
        tf = symbolic_leadlag(a.c.order);
    ordered_json meta = spec_meta(a.c, true);
    add_tf_flags(meta, tf);
    if (a.format == "text")
        write_output(a.out, symbolic_text(tf, meta, !a.no_meta));
    else
        write_output(a.out, emit(to_document(tf, meta), !a.no_meta));
}

struct LadderArgs {
    std::string tf;
    std::string out = "-";
    std::string netlist;
    std::string name = "ladder";
    double nic_resistance = 1e3;
    double opamp_gain = 1e6;
    bool no_meta = false;
};

void run_ladder(const LadderArgs& a) {
    const TfDocument doc = parse_document(read_file(a.tf));
    const RatTf tf = to_rational_tf(doc);
    const LadderNetwork net = synthesize_ladder(tf);
    const auto parts = map_elements(net);
    ordered_json j = ordered_json::object();
    if (!a.no_meta) j["meta"] = ordered_json{{"source", a.tf}};
    if (doc.gain) j["gain"] = doc.gain->label;
    const ordered_json body = ladder_to_json(net, parts);
    for (const auto& [k, v] : body.items()) j[k] = v;
    write_output(a.out, j.dump(2) + "\n");
    if (!a.netlist.empty())
        write_output(a.netlist, export_netlist(parts, a.name, NetlistOptions{a.nic_resistance, a.opamp_gain}));
}

struct SweepArgs {
    double fmin = 1e-3;
    double fmax = 1e3;
    std::size_t ppd = kDefaultPointsPerDecade;
    std::string unit = "hz";
};

void add_sweep_options(CLI::App* cmd, SweepArgs& s) {
    cmd->add_option("--fmin", s.fmin, "lowest frequency")->check(CLI::PositiveNumber);
    cmd->add_option("--fmax", s.fmax, "highest frequency")->check(CLI::PositiveNumber);
    cmd->add_option("--points-per-decade", s.ppd, "grid density")->check(CLI::PositiveNumber);
    cmd->add_option("--unit", s.unit, "frequency unit")->check(CLI::IsMember({"hz", "rad"}));
}

FrequencyGrid grid_of(const SweepArgs& s) {
    return log_grid(s.fmin, s.fmax, s.unit == "rad" ? FrequencyUnit::rad : FrequencyUnit::hz, s.ppd);
}

struct BodeArgs {
    std::string tf;
    SweepArgs sweep;
    std::string out = "-";
    bool no_meta = false;
};

void run_bode(const BodeArgs& a) {
    const RatTf tf = to_rational_tf(parse_document(read_file(a.tf)));
    const FrequencyGrid grid = grid_of(a.sweep);
    const BodeSweep sw = bode(tf, grid);
    std::ostringstream os;
    if (!a.no_meta) os << "# " << ordered_json{{"source", a.tf}, {"points", sw.size()}}.dump() << "\n";
    os << "freq_" << to_string(grid.unit) << ",mag_db,phase_deg\n";
    for (std::size_t i = 0; i < sw.size(); ++i)
        os << csv_number(sw.freqs[i]) << "," << csv_number(sw.mag_db[i]) << "," << csv_number(sw.phase_deg[i]) << "\n";
    write_output(a.out, os.str());
}

struct CompareArgs {
    std::string lambda;
    std::size_t order = 4;
    std::vector<std::string> methods{"cfe-low", "cfe-high", "oustaloup", "mod-oustaloup", "carlson"};
    SweepArgs sweep;
    double band_lo = 0;
    double band_hi = 0;
    double tol = 5.0;
    std::size_t recursions = 3;
    std::size_t iterations = 3;
    std::string action = "integrator";
    std::string T = "1";
    std::string out = "-";
    std::string report;
    bool no_meta = false;
};

void run_compare(const CompareArgs& a) {
    const BigRat lambda = BigRat::parse(a.lambda);
    const Action action = parse_action(a.action);
    const bool integrator = action == Action::integrator;
    const FrequencyGrid grid = grid_of(a.sweep);
    const Band band{a.band_lo > 0 ? a.band_lo : grid.values.front(), a.band_hi > 0 ? a.band_hi : grid.values.back()};

    BaselineConfig cfg;
    cfg.lambda = lambda.to_double();
    cfg.wb = to_rad_per_s(grid.values.front(), grid.unit);
    cfg.wh = to_rad_per_s(grid.values.back(), grid.unit);
    cfg.n = a.recursions;
    cfg.integrator = integrator;

    struct Column {
        std::string name;
        RatTf tf;
    };
    std::vector<Column> columns;
    for (const auto& m : a.methods) {
        if (m == "cfe-low")
            columns.push_back({m, realize_differintegrator({lambda, action, Range::low, BigRat(1)}, a.order)});
        else if (m == "cfe-high")
            columns.push_back(
                {m, realize_differintegrator({lambda, action, Range::high, BigRat::parse(a.T)}, a.order)});
        else if (m == "oustaloup")
            columns.push_back({m, oustaloup(cfg)});
        else if (m == "mod-oustaloup")
            columns.push_back({m, modified_oustaloup(cfg)});
        else if (m == "carlson")
            columns.push_back({m, carlson(lambda, a.iterations, integrator)});
        else
            throw ValidationError("unknown method '" + m + "'");
    }

    const BodeSweep ideal = ideal_response(Differintegrator{lambda, action, Range::low, BigRat(1)}, grid);
    std::vector<BodeSweep> sweeps;
    for (const auto& c : columns) sweeps.push_back(bode(c.tf, grid));

    std::ostringstream csv;
    if (!a.no_meta)
        csv << "# " << ordered_json{{"lambda", lambda.to_string()}, {"action", a.action}, {"order", a.order}}.dump()
            << "\n";
    csv << "freq_" << to_string(grid.unit) << ",ideal_mag_db,ideal_phase_deg";
    for (const auto& c : columns) csv << "," << c.name << "_mag_db," << c.name << "_phase_deg";
    csv << "\n";
    for (std::size_t i = 0; i < grid.values.size(); ++i) {
        csv << csv_number(grid.values[i]) << "," << csv_number(ideal.mag_db[i]) << ","
            << csv_number(ideal.phase_deg[i]);
        for (const auto& s : sweeps) csv << "," << csv_number(s.mag_db[i]) << "," << csv_number(s.phase_deg[i]);
        csv << "\n";
    }
    write_output(a.out, csv.str());

    ordered_json rep = ordered_json::object();
    rep["unit"] = to_string(grid.unit);
    rep["band"] = band_json(band);
    rep["phase_tolerance_deg"] = a.tol;
    ordered_json methods = ordered_json::object();
    for (std::size_t k = 0; k < columns.size(); ++k) {
        const FitReport r = fit_report(sweeps[k], ideal, band, a.tol);
        ordered_json m = ordered_json::object();
        m["tf_order"] = std::max(columns[k].tf.num.degree(), columns[k].tf.den.degree());
        m["points"] = r.points;
        m["max_phase_error_deg"] = r.max_phase_error_deg;
        m["mean_phase_error_deg"] = r.mean_phase_error_deg;
        m["max_mag_error_db"] = r.max_mag_error_db;
        m["mean_mag_error_db"] = r.mean_mag_error_db;
        m["constant_phase_band"] = band_json(r.constant_phase);
        methods[columns[k].name] = m;
    }
    rep["methods"] = methods;
    const std::string text = rep.dump(2) + "\n";
    if (a.report.empty())
        std::cerr << text;
    else
        write_output(a.report, text);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rational realization of fractional-order controllers"};
    app.require_subcommand(1);

    RealizeArgs realize_args;
    auto* realize_cmd = app.add_subcommand("realize", "numeric rational realization as a TF document");
    add_controller_options(realize_cmd, realize_args.c, true);
    realize_cmd->add_option("--out", realize_args.out, "output file (default stdout)");
    realize_cmd->add_flag("--float", realize_args.as_float, "decimal coefficients (15 significant digits)");
    realize_cmd->add_flag("--no-meta", realize_args.no_meta, "omit provenance metadata");

    SymbolicArgs symbolic_args;
    auto* symbolic_cmd = app.add_subcommand("symbolic", "realization with every parameter symbolic");
    add_controller_options(symbolic_cmd, symbolic_args.c, false);
    symbolic_cmd->add_option("--format", symbolic_args.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    symbolic_cmd->add_option("--out", symbolic_args.out, "output file (default stdout)");
    symbolic_cmd->add_flag("--no-meta", symbolic_args.no_meta, "omit provenance metadata");

    LadderArgs ladder_args;
    auto* ladder_cmd = app.add_subcommand("ladder", "domino-ladder synthesis of a TF document");
    ladder_cmd->add_option("--tf", ladder_args.tf, "TF document")->required();
    ladder_cmd->add_option("--out", ladder_args.out, "ladder JSON file (default stdout)");
    ladder_cmd->add_option("--netlist", ladder_args.netlist, "also write a SPICE netlist");
    ladder_cmd->add_option("--name", ladder_args.name, "netlist title");
    ladder_cmd->add_option("--nic-resistance", ladder_args.nic_resistance, "NIC resistor value (ohms)")
        ->check(CLI::PositiveNumber);
    ladder_cmd->add_option("--opamp-gain", ladder_args.opamp_gain, "op-amp open-loop gain")
        ->check(CLI::PositiveNumber);
    ladder_cmd->add_flag("--no-meta", ladder_args.no_meta, "omit provenance metadata");

    BodeArgs bode_args;
    auto* bode_cmd = app.add_subcommand("bode", "frequency response of a TF document as CSV");
    bode_cmd->add_option("--tf", bode_args.tf, "TF document")->required();
    add_sweep_options(bode_cmd, bode_args.sweep);
    bode_cmd->add_option("--out", bode_args.out, "CSV file (default stdout)");
    bode_cmd->add_flag("--no-meta", bode_args.no_meta, "omit the metadata comment line");

    CompareArgs compare_args;
    auto* compare_cmd = app.add_subcommand("compare", "compare realization methods against the ideal response");
    compare_cmd->add_option("--lambda", compare_args.lambda, "fractional order")->required();
    compare_cmd->add_option("--order", compare_args.order, "CFE realization order");
    compare_cmd->add_option("--methods", compare_args.methods, "comma-separated method list")
        ->delimiter(',')
        ->check(CLI::IsMember({"cfe-low", "cfe-high", "oustaloup", "mod-oustaloup", "carlson"}));
    add_sweep_options(compare_cmd, compare_args.sweep);
    compare_cmd->add_option("--band-lo", compare_args.band_lo, "fit band lower edge (default fmin)");
    compare_cmd->add_option("--band-hi", compare_args.band_hi, "fit band upper edge (default fmax)");
    compare_cmd->add_option("--tol", compare_args.tol, "phase tolerance in degrees")->check(CLI::PositiveNumber);
    compare_cmd->add_option("--recursions", compare_args.recursions, "Oustaloup recursion depth N");
    compare_cmd->add_option("--iterations", compare_args.iterations, "Carlson iterations");
    compare_cmd->add_option("--action", compare_args.action, "integrator or differentiator")
        ->check(CLI::IsMember({"integrator", "differentiator"}));
    compare_cmd->add_option("--T", compare_args.T, "time constant of the high-range realization");
    compare_cmd->add_option("--out", compare_args.out, "CSV file (default stdout)");
    compare_cmd->add_option("--report", compare_args.report, "fit report JSON file (default stderr)");
    compare_cmd->add_flag("--no-meta", compare_args.no_meta, "omit the metadata comment line");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitValidation;
    }

    try {
        if (*realize_cmd) run_realize(realize_args);
        if (*symbolic_cmd) run_symbolic(symbolic_args);
        if (*ladder_cmd) run_ladder(ladder_args);
        if (*bode_cmd) run_bode(bode_args);
        if (*compare_cmd) run_compare(compare_args);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const MathError& e) {
        std::cerr << "math error: " << e.what() << "\n";
        return kExitMath;
    }
    return 0;
}
