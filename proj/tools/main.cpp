// Command-line front end for the framed-sheaf toolkit.
//
// Exit codes: 0 = success / all checks passed, 1 = usage or input error,
// 2 = a mathematical check failed.
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fsq/acceptance.hpp"
#include "fsq/heart.hpp"
#include "fsq/json_io.hpp"
#include "fsq/sampler.hpp"

using namespace fsq;
using fsq::io::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitMath = 2;

struct Options {
    std::string input;
    std::string output = "text";
    int window = -1;  // -1 = library default
    std::uint64_t seed = SeededSampler::kDefaultSeed;
    long samples = 20;
};

void add_common(CLI::App* cmd, Options& opt, bool with_input = true) {
    if (with_input) cmd->add_option("--input", opt.input, "input JSON file");
    cmd->add_option("--output", opt.output, "output format: json|text")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--window", opt.window, "monomial window override");
    cmd->add_option("--seed", opt.seed, "sampler seed");
    cmd->add_option("--samples", opt.samples, "sample count for randomized commands");
}

// every report carries the mathematical statement it certifies
void emit(const json& report, const Options& opt, const std::vector<std::string>& summary) {
    if (opt.output == "json") {
        std::cout << report.dump(2) << "\n";
    } else {
        for (const auto& line : summary) std::cout << line << "\n";
    }
}

json require_input(const Options& opt) {
    if (opt.input.empty()) throw std::invalid_argument("--input is required");
    return io::load_json_file(opt.input);
}

std::vector<long> parse_long_list(const std::string& s) {
    std::vector<long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stol(item));
        } catch (const std::exception&) {
            throw std::invalid_argument("not an integer list: " + s);
        }
    }
    return out;
}

NumericalClass class_from_flags(const std::string& surface_name, const std::string& coords) {
    SurfaceTag surface = surface_from_string(surface_name);
    std::vector<long> v = parse_long_list(coords);
    std::size_t picard = surface_info(surface).picard_rank;
    if (v.size() != picard + 2)
        throw std::invalid_argument("--class needs rank, " + std::to_string(picard) +
                                    " c1 coordinate(s), chi");
    return NumericalClass{surface, v[0],
                          divisor(surface, std::vector<long>(v.begin() + 1, v.end() - 1)),
                          v.back()};
}

CurveModel curve_from_name(const std::string& name) {
    if (name == "linf") return line_at_infinity();
    if (name == "diag") return diagonal_curve();
    throw std::invalid_argument("unknown curve: " + name + " (expected linf or diag)");
}

// presets plus optional quiver payload in the input object
std::pair<Quiver, RelationSet> quiver_from(const json& j, const std::string& preset) {
    if (!preset.empty()) {
        if (preset == "P2") return preset_p2();
        if (preset == "P1xP1") return preset_p1xp1();
        throw std::invalid_argument("unknown preset: " + preset);
    }
    if (j.contains("quiver")) return io::quiver_from_json(j.at("quiver"));
    return io::quiver_from_json(j);
}

std::vector<std::pair<Scalar, Scalar>> points_from_json(const json& j) {
    const json& list = j.contains("points") ? j.at("points") : j;
    std::vector<std::pair<Scalar, Scalar>> points;
    for (const auto& p : list) {
        if (!p.is_array() || p.size() != 2)
            throw std::invalid_argument("each point must be a [x, y] pair");
        points.push_back({io::scalar_from_json(p[0]), io::scalar_from_json(p[1])});
    }
    return points;
}

json h_to_json(const std::map<int, long>& h) {
    json out = json::object();
    for (const auto& [n, v] : h) out[std::to_string(n)] = v;
    return out;
}

std::string dims_to_string(const DimVector& d) {
    std::string s = "(";
    for (std::size_t i = 0; i < d.size(); ++i)
        s += (i ? "," : "") + std::to_string(d[i]);
    return s + ")";
}

std::optional<int> window_opt(const Options& opt) {
    if (opt.window < 0) return std::nullopt;
    return opt.window;
}

// --- command handlers ----------------------------------------------------

int cmd_dimvec(const Options& opt, const std::string& surface_name, const std::string& coords) {
    NumericalClass v = coords.empty() ? io::class_from_json(require_input(opt))
                                      : class_from_flags(surface_name, coords);
    DimVector d = dimension_vector(v.surface, v);
    json report{{"anchor", "d_i = -chi(E_i, v) by Hirzebruch-Riemann-Roch"},
                {"class", io::class_to_json(v)},
                {"dims", d}};
    emit(report, opt, {"dimension vector " + dims_to_string(d)});
    return kExitOk;
}

int cmd_quiver_check(const Options& opt, const std::string& preset) {
    json j = require_input(opt);
    auto [q, rels] = quiver_from(j, preset);
    Representation rep = io::rep_from_json(j.at("rep"));
    auto check = check_relations(q, rels, rep);
    json report{{"anchor", "every relation sum of path matrix products is zero"},
                {"ok", check.ok},
                {"violated", check.violated}};
    emit(report, opt,
         {check.ok ? "relations hold" : "violated relations: " +
                                            std::to_string(check.violated.size())});
    return check.ok ? kExitOk : kExitMath;
}

int cmd_quiver_hom(const Options& opt, const std::string& preset, bool iso) {
    json j = require_input(opt);
    auto [q, rels] = quiver_from(j, preset);
    Representation rep1 = io::rep_from_json(j.at("rep1"));
    Representation rep2 = io::rep_from_json(j.at("rep2"));
    if (iso) {
        bool isomorphic = is_isomorphic(q, rep1, rep2, static_cast<unsigned>(opt.seed));
        json report{{"anchor", "isomorphism = invertible intertwiner at every vertex"},
                    {"isomorphic", isomorphic}};
        emit(report, opt, {isomorphic ? "isomorphic" : "not isomorphic"});
        return isomorphic ? kExitOk : kExitMath;
    }
    auto hom = hom_space(q, rep1, rep2);
    json basis = json::array();
    for (const auto& vec : hom.basis) {
        json blocks = json::array();
        for (const auto& m : vec) blocks.push_back(io::matrix_to_json(m));
        basis.push_back(std::move(blocks));
    }
    json report{{"anchor", "intertwiners solve phi_dst M_a = M_a phi_src for all arrows"},
                {"dim", hom.dim},
                {"basis", std::move(basis)}};
    emit(report, opt, {"hom space dimension " + std::to_string(hom.dim)});
    return kExitOk;
}

int cmd_quiver_euler(const Options& opt, const std::string& preset) {
    json j = require_input(opt);
    auto [q, rels] = quiver_from(j, preset);
    DimVector d = j.at("d").get<DimVector>();
    DimVector e = j.at("e").get<DimVector>();
    long value = euler_form(q, rels, d, e);
    json report{
        {"anchor", "<d,e> = sum_i d_i e_i - sum_{a:i->j} d_i e_j + sum_{rel:i->j} d_i e_j"},
        {"value", value}};
    emit(report, opt, {"euler form " + std::to_string(value)});
    return kExitOk;
}

int cmd_quiver_paths(const Options& opt, const std::string& preset, int from, int to) {
    json j = opt.input.empty() ? json::object() : io::load_json_file(opt.input);
    auto [q, rels] = quiver_from(j, preset);
    long dim = path_space_dim(q, rels, from, to);
    json report{{"anchor", "dimension of paths modulo the relation ideal"},
                {"from", from},
                {"to", to},
                {"dim", dim}};
    emit(report, opt, {"path space dimension " + std::to_string(dim)});
    return kExitOk;
}

int cmd_adhm_check(const Options& opt) {
    AdhmDatum d = io::adhm_from_json(require_input(opt));
    bool ok = check_equation(d);
    json report{{"anchor", "[B1,B2] + i j = 0"},
                {"ok", ok},
                {"residual", io::matrix_to_json(adhm_residual(d))}};
    emit(report, opt, {ok ? "equation holds" : "equation fails"});
    return ok ? kExitOk : kExitMath;
}

int cmd_adhm_stable(const Options& opt) {
    AdhmDatum d = io::adhm_from_json(require_input(opt));
    bool stable = is_stable(d), costable = is_costable(d);
    json report{{"anchor", "stable: no proper (B1,B2)-invariant subspace contains im(i)"},
                {"stable", stable},
                {"costable", costable}};
    emit(report, opt,
         {std::string(stable ? "stable" : "not stable") + ", " +
          (costable ? "costable" : "not costable")});
    return stable ? kExitOk : kExitMath;
}

int cmd_adhm_monad(const Options& opt) {
    AdhmDatum d = io::adhm_from_json(require_input(opt));
    auto monad = monad_from_adhm(d);  // throws runtime_error when the equation fails
    json report{{"anchor",
                 "beta alpha = x2^2([B1,B2] + i j); monad O(-1)^k -> O^(2k+r) -> O(1)^k"},
                {"complex", io::complex_to_json(monad)}};
    emit(report, opt,
         {"monad with middle term of rank " + std::to_string(monad.terms[1].size())});
    return kExitOk;
}

int cmd_adhm_fixed_points(const Options& opt, long k, long r) {
    auto fixed = torus_fixed_points(static_cast<std::size_t>(k), static_cast<std::size_t>(r));
    json data = json::array();
    for (const auto& d : fixed) data.push_back(io::adhm_to_json(d));
    json report{{"anchor", "one stable solution per partition of k (shift operators)"},
                {"count", fixed.size()},
                {"data", std::move(data)}};
    emit(report, opt, {std::to_string(fixed.size()) + " fixed points for k=" +
                       std::to_string(k)});
    return kExitOk;
}

int cmd_adhm_from_points(const Options& opt) {
    auto points = points_from_json(require_input(opt));
    AdhmDatum d = adhm_from_points(points);
    json report{{"anchor", "B1,B2 diagonal at the configured coordinates, i = ones, j = 0"},
                {"datum", io::adhm_to_json(d)},
                {"stable", is_stable(d)}};
    emit(report, opt, {"datum with k=" + std::to_string(d.k) +
                       (is_stable(d) ? " (stable)" : " (not stable)")});
    return kExitOk;
}

int cmd_adhm_tangent(const Options& opt) {
    AdhmDatum d = io::adhm_from_json(require_input(opt));
    auto t = tangent_report(d);
    json report{{"anchor", "dim T = (2k^2 + 2kr - rank dmu) - (k^2 - dim stab)"},
                {"rank_dmu", t.rank_dmu},
                {"stabilizer_dim", t.stabilizer_dim},
                {"tangent_dim", t.tangent_dim}};
    emit(report, opt, {"tangent dimension " + std::to_string(t.tangent_dim)});
    return kExitOk;
}

int cmd_coh_hyper(const Options& opt) {
    auto c = io::complex_from_json(require_input(opt));
    auto rep = hypercohomology(c, window_opt(opt));
    json report{{"anchor", "truncated Cech over the toric cover; alternating sum equals chi"},
                {"h", h_to_json(rep.h)},
                {"euler", rep.euler},
                {"window_stable", rep.window_stable},
                {"window_used", rep.window_used}};
    std::string line = "euler " + std::to_string(rep.euler) + ", h =";
    for (const auto& [n, v] : rep.h)
        line += " h^" + std::to_string(n) + "=" + std::to_string(v);
    if (rep.h.empty()) line += " 0";
    emit(report, opt, {line});
    return kExitOk;
}

int cmd_coh_line_bundle(const Options& opt, const std::string& space_name,
                        const std::string& twist_str) {
    Space space = space_from_string(space_name);
    std::vector<long> coords = parse_long_list(twist_str);
    Twist twist(coords.begin(), coords.end());
    auto h = line_bundle_cohomology(space, twist);
    json report{{"anchor", "closed-form cohomology of the line bundle O(D)"},
                {"h", h},
                {"chi", chi_line_bundle(space, twist)}};
    std::string line = "h =";
    for (std::size_t n = 0; n < h.size(); ++n)
        line += " h^" + std::to_string(n) + "=" + std::to_string(h[n]);
    emit(report, opt, {line});
    return kExitOk;
}

int cmd_coh_restrict(const Options& opt, const std::string& curve_name) {
    auto c = io::complex_from_json(require_input(opt));
    auto restricted = restrict_to_curve(c, curve_from_name(curve_name));
    json report{{"anchor", "substitute the parametrization; O(D) restricts to O(D.C0)"},
                {"complex", io::complex_to_json(restricted)}};
    emit(report, opt, {"restricted complex on " + to_string(restricted.space)});
    return kExitOk;
}

int cmd_coh_splitting(const Options& opt, const std::string& curve_name) {
    auto c = io::complex_from_json(require_input(opt));
    if (c.space != Space::P1) c = restrict_to_curve(c, curve_from_name(curve_name));
    auto degrees = splitting_type(c);
    json report{{"anchor", "E restricted to P1 splits as a sum of O(a_i)"},
                {"degrees", degrees}};
    std::string line = "splitting type (";
    for (std::size_t i = 0; i < degrees.size(); ++i)
        line += (i ? "," : "") + std::to_string(degrees[i]);
    emit(report, opt, {line + ")"});
    return kExitOk;
}

int cmd_heart_battery(const Options& opt, const std::string& surface_name) {
    auto c = io::complex_from_json(require_input(opt));
    SurfaceTag surface = surface_from_string(surface_name);
    auto rep = vanishing_battery(c, surface);
    json entries = json::array();
    for (const auto& e : rep.entries)
        entries.push_back(json{{"label", e.label}, {"h0", e.h0}, {"h2", e.h2}});
    json report{{"anchor", "h^0 and h^2 of E tensor E_i^dual vanish for every member"},
                {"entries", std::move(entries)},
                {"pass", rep.pass}};
    emit(report, opt, {rep.pass ? "battery passed" : "battery FAILED"});
    return rep.pass ? kExitOk : kExitMath;
}

int cmd_heart_trivial(const Options& opt, const std::string& curve_name) {
    auto c = io::complex_from_json(require_input(opt));
    auto result = triviality_on_curve(c, curve_from_name(curve_name));
    json report{{"anchor", "trivial iff deg(E|_C0) = 0 and h^0(E|_C0(-1)) = 0"},
                {"trivial", result.trivial},
                {"rank", result.rank},
                {"restricted_degree", result.restricted_degree},
                {"h0_negative_twist", result.h0_negative_twist}};
    if (result.framing) report["framing"] = io::matrix_to_json(result.framing->matrix);
    emit(report, opt,
         {result.trivial ? "restriction is trivial of rank " + std::to_string(result.rank)
                         : "restriction is NOT trivial"});
    return result.trivial ? kExitOk : kExitMath;
}

int cmd_heart_rep(const Options& opt) {
    auto c = io::complex_from_json(require_input(opt));
    auto rep = rep_from_monad(c);
    json report{{"anchor", "a_m, b_m = coefficients of x_{m-1} in alpha, beta"},
                {"rep", io::rep_to_json(rep)}};
    emit(report, opt, {"representation with dims " + dims_to_string(rep.dims)});
    return kExitOk;
}

int cmd_heart_monad(const Options& opt) {
    auto rep = io::rep_from_json(require_input(opt));
    auto monad = monad_from_rep(rep);
    json report{{"anchor", "alpha = sum a_m x_{m-1}, beta = sum b_m x_{m-1}"},
                {"complex", io::complex_to_json(monad)}};
    emit(report, opt, {"monad rebuilt from the representation"});
    return kExitOk;
}

int cmd_demo_hilbert(const Options& opt) {
    auto points = points_from_json(require_input(opt));
    auto report = hilbert_demo(points, opt.seed);
    json j{{"anchor", "ideal sheaf of a point configuration: datum -> monad -> framability"},
           {"k", report.k},
           {"equation_ok", report.equation_ok},
           {"stable", report.stable},
           {"fiber_profile_ok", report.fiber_profile_ok},
           {"triviality_ok", report.triviality_ok},
           {"battery_pass", report.battery_pass},
           {"relations_ok", report.relations_ok},
           {"roundtrip_ok", report.roundtrip_ok},
           {"pass", report.pass}};
    emit(j, opt,
         {std::string(report.pass ? "demo passed" : "demo FAILED") +
          " (k=" + std::to_string(report.k) + ")"});
    return report.pass ? kExitOk : kExitMath;
}

int cmd_suite_acceptance(const Options& opt) {
    auto results = run_acceptance();
    bool all_pass = true;
    json list = json::array();
    std::vector<std::string> lines;
    for (const auto& r : results) {
        all_pass = all_pass && r.pass;
        list.push_back(json{{"id", r.id},
                            {"name", r.name},
                            {"pass", r.pass},
                            {"detail", r.detail},
                            {"seconds", r.seconds}});
        char buf[256];
        std::snprintf(buf, sizeof(buf), "[%s] %2d %-38s %7.2fs  %s",
                      r.pass ? "pass" : "FAIL", r.id, r.name.c_str(), r.seconds,
                      r.detail.c_str());
        lines.push_back(buf);
    }
    lines.push_back(all_pass ? "acceptance: all criteria passed" : "acceptance: FAILURES");
    json report{{"anchor", "aggregate of the twelve acceptance criteria"},
                {"criteria", std::move(list)},
                {"pass", all_pass}};
    emit(report, opt, lines);
    return all_pass ? kExitOk : kExitMath;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit for framed sheaves, monads and quiver data"};
    app.require_subcommand(1);

    Options opt;
    int code = kExitOk;
    auto set = [&](auto fn) { return [&, fn] { code = fn(); }; };

    std::string surface_name = "P2", class_coords, preset, curve_name = "linf";
    std::string space_name = "P2", twist_str = "0";
    long fp_k = 1, fp_r = 1;
    int path_from = 0, path_to = 2;

    auto* dimvec = app.add_subcommand("dimvec", "dimension vector of a numerical class");
    add_common(dimvec, opt);
    dimvec->add_option("--surface", surface_name, "P2 or P1xP1");
    dimvec->add_option("--class", class_coords, "rank, c1 coords, chi (comma separated)");
    dimvec->callback(set([&] { return cmd_dimvec(opt, surface_name, class_coords); }));

    auto* quiver = app.add_subcommand("quiver", "bound quiver computations");
    quiver->require_subcommand(1);
    auto add_quiver_sub = [&](const char* name, const char* desc) {
        auto* sub = quiver->add_subcommand(name, desc);
        add_common(sub, opt);
        sub->add_option("--preset", preset, "use a preset quiver: P2 or P1xP1");
        return sub;
    };
    add_quiver_sub("check-relations", "verify a representation against the relations")
        ->callback(set([&] { return cmd_quiver_check(opt, preset); }));
    add_quiver_sub("hom", "intertwiner space between two representations")
        ->callback(set([&] { return cmd_quiver_hom(opt, preset, false); }));
    add_quiver_sub("iso", "test two representations for isomorphism")
        ->callback(set([&] { return cmd_quiver_hom(opt, preset, true); }));
    add_quiver_sub("euler", "Euler form of two dimension vectors")
        ->callback(set([&] { return cmd_quiver_euler(opt, preset); }));
    auto* paths = add_quiver_sub("paths", "path space dimension modulo relations");
    paths->add_option("--from", path_from, "source vertex");
    paths->add_option("--to", path_to, "target vertex");
    paths->callback(set([&] { return cmd_quiver_paths(opt, preset, path_from, path_to); }));

    auto* adhm = app.add_subcommand("adhm", "linear data for framed sheaves on P2");
    adhm->require_subcommand(1);
    auto add_adhm_sub = [&](const char* name, const char* desc) {
        auto* sub = adhm->add_subcommand(name, desc);
        add_common(sub, opt);
        return sub;
    };
    add_adhm_sub("check", "verify the quadratic equation")
        ->callback(set([&] { return cmd_adhm_check(opt); }));
    add_adhm_sub("stable", "test stability and costability")
        ->callback(set([&] { return cmd_adhm_stable(opt); }));
    add_adhm_sub("monad", "build the associated monad")
        ->callback(set([&] { return cmd_adhm_monad(opt); }));
    auto* fp = add_adhm_sub("fixed-points", "torus fixed data for rank 1");
    fp->add_option("--k", fp_k, "second Chern class");
    fp->add_option("--r", fp_r, "rank (must be 1)");
    fp->callback(set([&] { return cmd_adhm_fixed_points(opt, fp_k, fp_r); }));
    add_adhm_sub("from-points", "datum of a point configuration")
        ->callback(set([&] { return cmd_adhm_from_points(opt); }));
    add_adhm_sub("tangent", "tangent space dimension at a stable solution")
        ->callback(set([&] { return cmd_adhm_tangent(opt); }));

    auto* coh = app.add_subcommand("cohomology", "hypercohomology engine");
    coh->require_subcommand(1);
    auto* hyper = coh->add_subcommand("hyper", "hypercohomology of a complex");
    add_common(hyper, opt);
    hyper->callback(set([&] { return cmd_coh_hyper(opt); }));
    auto* lb = coh->add_subcommand("line-bundle", "closed-form line bundle cohomology");
    add_common(lb, opt, false);
    lb->add_option("--space", space_name, "P1, P2 or P1xP1");
    lb->add_option("--twist", twist_str, "twist coordinates (comma separated)");
    lb->callback(set([&] { return cmd_coh_line_bundle(opt, space_name, twist_str); }));
    auto* restr = coh->add_subcommand("restrict", "restrict a complex to a framing curve");
    add_common(restr, opt);
    restr->add_option("--curve", curve_name, "linf or diag");
    restr->callback(set([&] { return cmd_coh_restrict(opt, curve_name); }));
    auto* split = coh->add_subcommand("splitting", "splitting type on the framing curve");
    add_common(split, opt);
    split->add_option("--curve", curve_name, "linf or diag");
    split->callback(set([&] { return cmd_coh_splitting(opt, curve_name); }));

    auto* heart = app.add_subcommand("heart", "framability and heart membership");
    heart->require_subcommand(1);
    auto* battery = heart->add_subcommand("battery", "vanishing battery");
    add_common(battery, opt);
    battery->add_option("--surface", surface_name, "P2 or P1xP1");
    battery->callback(set([&] { return cmd_heart_battery(opt, surface_name); }));
    auto* trivial = heart->add_subcommand("trivial", "triviality on the framing curve");
    add_common(trivial, opt);
    trivial->add_option("--curve", curve_name, "linf or diag");
    trivial->callback(set([&] { return cmd_heart_trivial(opt, curve_name); }));
    auto* hrep = heart->add_subcommand("rep", "extract the quiver representation");
    add_common(hrep, opt);
    hrep->callback(set([&] { return cmd_heart_rep(opt); }));
    auto* hmonad = heart->add_subcommand("monad", "rebuild the monad from a representation");
    add_common(hmonad, opt);
    hmonad->callback(set([&] { return cmd_heart_monad(opt); }));

    auto* demo = app.add_subcommand("demo", "end-to-end demonstrations");
    demo->require_subcommand(1);
    auto* hilbert = demo->add_subcommand("hilbert", "point configurations on the plane");
    add_common(hilbert, opt);
    hilbert->add_option("--points", opt.input, "points JSON file (alias for --input)");
    hilbert->callback(set([&] { return cmd_demo_hilbert(opt); }));

    auto* suite = app.add_subcommand("suite", "test batteries");
    suite->require_subcommand(1);
    auto* acc = suite->add_subcommand("acceptance", "run the acceptance criteria");
    add_common(acc, opt, false);
    acc->callback(set([&] { return cmd_suite_acceptance(opt); }));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::runtime_error& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return kExitMath;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return code;
}
