#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hd/boole.hpp"
#include "hd/coding.hpp"
#include "hd/curves.hpp"
#include "hd/decode.hpp"
#include "hd/errors.hpp"
#include "hd/map.hpp"
#include "hd/orbit.hpp"
#include "hd/verify.hpp"

namespace {

using hd::rat;
using json = nlohmann::ordered_json;

// 0 ok / 1 check failure / 2 parse / 3 resource / 4 not found
constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitResource = 3;
constexpr int kExitNotFound = 4;

hd::rpoint parse_point(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw hd::parse_error("point must be \"x,y\" with rational or decimal parts");
    return {hd::parse_rat(text.substr(0, comma)), hd::parse_rat(text.substr(comma + 1))};
}

std::vector<long long> parse_int_list(const std::string& text) {
    std::vector<long long> out;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) return;
        out.push_back(std::stoll(cur));
        cur.clear();
    };
    for (char ch : text) {
        if (ch == ',' || ch == ' ')
            flush();
        else
            cur.push_back(ch);
    }
    flush();
    return out;
}

std::size_t env_bits_default() {
    if (const char* s = std::getenv("HD_MAX_BITS")) return std::strtoull(s, nullptr, 10);
    return 1'000'000;
}

int env_depth_default() {
    if (const char* s = std::getenv("HD_MAX_DEPTH")) return std::atoi(s);
    return 64;
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"') q += "\"\"";
        q += ch;
    }
    return q + "\"";
}

json point_json(const hd::rpoint& p) {
    return {{"x", hd::to_string(p.x)}, {"y", hd::to_string(p.y)}};
}

json word_json(const hd::coordinate_word& w) {
    json entries = json::array();
    for (long long e : w.entries) entries.push_back(e);
    return {{"entries", std::move(entries)},
            {"status", w.finite() ? "finite" : "truncated"}};
}

json sequence_json(const hd::symbol_sequence& s) {
    auto status = [](hd::side_status st) {
        return st == hd::side_status::terminated ? "terminated" : "truncated";
    };
    return {{"past", s.past},
            {"future", s.future},
            {"past_status", status(s.past_status)},
            {"future_status", status(s.future_status)},
            {"display", hd::to_string(s)}};
}

const char* fwd_name(hd::fwd_termination t) {
    switch (t) {
        case hd::fwd_termination::alive: return "alive";
        case hd::fwd_termination::hit_y_zero: return "hit_y_zero";
        default: return "truncated";
    }
}

const char* bwd_name(hd::bwd_termination t) {
    switch (t) {
        case hd::bwd_termination::alive: return "alive";
        case hd::bwd_termination::hit_anti_diagonal: return "hit_anti_diagonal";
        default: return "truncated";
    }
}

struct orbit_args {
    std::string point;
    int fwd = 8, bwd = 0;
    std::string format = "json";
    std::string mode = "exact";
    double eps = 1e-12;
    std::size_t max_bits = env_bits_default();
    int max_depth = env_depth_default();
};

int run_orbit(const orbit_args& a) {
    hd::rpoint p = parse_point(a.point);
    if (a.mode == "float") {
        hd::dpoint q{hd::to_double(p.x), hd::to_double(p.y)};
        std::vector<std::pair<int, hd::dpoint>> pts;
        std::string fterm = "alive", bterm = "alive";
        int ftime = a.fwd, btime = -a.bwd;
        hd::dpoint cur = q;
        std::vector<std::pair<int, hd::dpoint>> back;
        for (int k = 0; k < a.bwd; ++k) {
            try {
                cur = hd::apply_f_inv(cur, a.eps);
            } catch (const hd::discontinuity_error&) {
                bterm = "hit_anti_diagonal";
                btime = -k;
                break;
            }
            back.emplace_back(-(k + 1), cur);
        }
        for (auto it = back.rbegin(); it != back.rend(); ++it) pts.push_back(*it);
        pts.emplace_back(0, q);
        cur = q;
        for (int k = 0; k < a.fwd; ++k) {
            try {
                cur = hd::apply_f(cur, a.eps);
            } catch (const hd::discontinuity_error&) {
                fterm = "hit_y_zero";
                ftime = k;
                break;
            }
            pts.emplace_back(k + 1, cur);
        }
        if (a.format == "csv") {
            std::cout << "t,x,y\n";
            for (const auto& [t, pt] : pts)
                std::cout << t << "," << hd::format_double(pt.x) << ","
                          << hd::format_double(pt.y) << "\n";
            return kExitOk;
        }
        json j{{"schema_version", 1}, {"report", "orbit"}, {"mode", "float"}};
        json arr = json::array();
        for (const auto& [t, pt] : pts)
            arr.push_back({{"t", t}, {"x", pt.x}, {"y", pt.y}});
        j["points"] = std::move(arr);
        j["forward"] = {{"termination", fterm}, {"time", ftime}};
        j["backward"] = {{"termination", bterm}, {"time", btime}};
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }

    hd::exact_limits lim{a.max_bits, a.max_depth};
    hd::orbit_record rec = hd::orbit(p, a.fwd, a.bwd, lim);
    if (a.format == "csv") {
        std::cout << "t,x,y\n";
        for (int t = rec.min_time(); t <= rec.max_time(); ++t) {
            const hd::rpoint& pt = rec.at_time(t);
            std::cout << t << "," << csv_quote(hd::to_string(pt.x)) << ","
                      << csv_quote(hd::to_string(pt.y)) << "\n";
        }
        return kExitOk;
    }
    json j{{"schema_version", 1}, {"report", "orbit"}, {"mode", "exact"}};
    json arr = json::array();
    for (int t = rec.min_time(); t <= rec.max_time(); ++t) {
        json e = point_json(rec.at_time(t));
        e["t"] = t;
        arr.push_back({{"t", t},
                       {"x", hd::to_string(rec.at_time(t).x)},
                       {"y", hd::to_string(rec.at_time(t).y)}});
    }
    j["points"] = std::move(arr);
    j["forward"] = {{"termination", fwd_name(rec.fwd)}, {"time", rec.fwd_event_time}};
    j["backward"] = {{"termination", bwd_name(rec.bwd)}, {"time", rec.bwd_event_time}};
    std::cout << j.dump(2) << "\n";
    return kExitOk;
}

struct code_args {
    std::string point;
    int window = 8;
    bool mirror = false;
    std::string format = "json";
    std::size_t max_bits = env_bits_default();
};

int run_code(const code_args& a) {
    hd::rpoint p = parse_point(a.point);
    if (a.mirror) p = hd::mirror(p);
    hd::exact_limits lim{a.max_bits, 256};
    hd::point_coding pc = hd::code_point(p, a.window, lim);
    if (a.format == "csv") {
        std::cout << "t,s_i,s_j\n";
        for (int t = -a.window; t <= a.window + 1; ++t) {
            auto sym = [&](const hd::symbol_sequence& s) -> std::string {
                if (t >= 0) {
                    std::size_t k = static_cast<std::size_t>(t);
                    return k < s.future.size() ? std::to_string(s.future[k]) : "";
                }
                std::size_t k = static_cast<std::size_t>(-t - 1);
                return k < s.past.size() ? std::to_string(s.past[k]) : "";
            };
            std::string si = sym(pc.hi), sj = sym(pc.hj);
            if (si.empty() && sj.empty()) continue;
            std::cout << t << "," << si << "," << sj << "\n";
        }
        return kExitOk;
    }
    json j{{"schema_version", 1}, {"report", "coding"}};
    j["point"] = point_json(p);
    j["window"] = a.window;
    j["i_word"] = word_json(pc.wi);
    j["j_word"] = word_json(pc.wj);
    j["h_i"] = sequence_json(pc.hi);
    j["h_j"] = sequence_json(pc.hj);
    std::cout << j.dump(2) << "\n";
    return kExitOk;
}

struct curves_args {
    std::string family = "R";
    int level = 1;
    int samples = 100;
    std::string format = "csv";
    double gap = 0.25;
    int max_points = 4000;
    int max_level = 10;
};

int run_curves(const curves_args& a) {
    if (a.level < 1 || a.level > a.max_level)
        throw hd::resource_error("level outside configured range", 0);
    hd::curve_family fam = a.family == "L" ? hd::curve_family::image_of_anti_diagonal
                                           : hd::curve_family::preimage_of_y_zero;
    hd::curves_config cfg;
    hd::discontinuity_set ds = hd::discontinuity_params(a.level, cfg);
    std::vector<hd::curve_branch> brs = hd::branches(fam, a.level, ds, cfg);
    if (a.format == "csv") {
        std::cout << "family,level,branch,side,t,x,y\n";
        for (std::size_t bi = 0; bi < brs.size(); ++bi) {
            auto pts = hd::sample_branch(brs[bi], a.samples, a.gap, a.max_points, cfg);
            for (const auto& pp : pts)
                std::cout << a.family << "," << a.level << "," << bi << "," << brs[bi].side
                          << "," << hd::format_double(pp.t) << "," << hd::format_double(pp.x)
                          << "," << hd::format_double(pp.y) << "\n";
        }
        return kExitOk;
    }
    json j{{"schema_version", 1}, {"report", "curves"}};
    j["family"] = a.family;
    j["level"] = a.level;
    json branches_json = json::array();
    for (std::size_t bi = 0; bi < brs.size(); ++bi) {
        const auto& b = brs[bi];
        json bj;
        bj["branch"] = bi;
        bj["side"] = b.side;
        bj["param_interval"] = {
            b.left ? json(hd::to_string(b.left->hi)) : json("-inf"),
            b.right ? json(hd::to_string(b.right->lo)) : json("inf")};
        json pts = json::array();
        for (const auto& pp : hd::sample_branch(b, a.samples, a.gap, a.max_points, cfg))
            pts.push_back({pp.t, pp.x, pp.y});
        bj["points"] = std::move(pts);
        branches_json.push_back(std::move(bj));
    }
    j["branches"] = std::move(branches_json);
    std::cout << j.dump(2) << "\n";
    return kExitOk;
}

struct verify_args {
    hd::verify_options opt;
    std::string out;
};

int run_verify_cmd(const verify_args& a) {
    hd::verify_result res = hd::run_verify(a.opt);
    std::string text = res.to_json(a.opt);
    if (!a.out.empty()) {
        std::ofstream f(a.out);
        f << text;
    }
    std::cout << text;
    return res.passed ? kExitOk : kExitCheckFailed;
}

struct decode_args {
    std::string iword, jword, box;
    std::string icycle, jcycle;
    std::string tol = "1/100";
    int max_refinements = 12;
    std::size_t max_bits = env_bits_default();
};

int run_decode(const decode_args& a) {
    hd::exact_limits lim{a.max_bits, 256};
    std::vector<std::string> parts;
    {
        std::string cur;
        for (char ch : a.box) {
            if (ch == ',') {
                parts.push_back(cur);
                cur.clear();
            } else {
                cur.push_back(ch);
            }
        }
        parts.push_back(cur);
    }
    if (parts.size() != 4) throw hd::parse_error("box must be x0,x1,y0,y1");
    hd::cylinder_query q;
    q.x0 = hd::parse_rat(parts[0]);
    q.x1 = hd::parse_rat(parts[1]);
    q.y0 = hd::parse_rat(parts[2]);
    q.y1 = hd::parse_rat(parts[3]);
    q.tolerance = hd::parse_rat(a.tol);
    q.max_refinements = a.max_refinements;

    if (!a.icycle.empty() || !a.jcycle.empty()) {
        std::vector<long long> ic = parse_int_list(a.icycle), jc = parse_int_list(a.jcycle);
        hd::periodic_candidate r = hd::periodic_search(ic, jc, q, lim);
        json j{{"schema_version", 1}, {"report", "periodic"}};
        j["found"] = r.found;
        j["period"] = r.period;
        j["note"] = r.note;
        if (r.found) {
            j["point"] = {{"x", r.point.x}, {"y", r.point.y}};
            if (r.exact_point) j["exact_point"] = point_json(*r.exact_point);
            j["residual"] = r.residual;
            j["jacobian_det"] = r.jac_det;
            j["complex_multipliers"] = r.complex_multipliers;
            if (!r.complex_multipliers) {
                j["lambda"] = r.lambda;
                j["lambda_inv"] = r.lambda_inv;
            }
            j["hyperbolic"] = r.hyperbolic;
        }
        std::cout << j.dump(2) << "\n";
        return r.found ? kExitOk : kExitNotFound;
    }

    q.i_prefix = parse_int_list(a.iword);
    q.j_prefix = parse_int_list(a.jword);
    hd::locate_result r = hd::cylinder_locate(q, lim);
    json j{{"schema_version", 1}, {"report", "decode"}};
    j["found"] = r.found;
    j["refinements"] = r.refinements;
    j["survivors"] = r.survivors;
    if (r.found) {
        j["point"] = point_json(r.point);
        j["cell_size"] = hd::to_string(r.cell_size);
        bool ok = hd::prefixes_match(r.point, q.i_prefix, q.j_prefix, lim);
        j["recode_verified"] = ok;
    } else {
        json cells = json::array();
        for (const auto& cb : r.sample_cells)
            cells.push_back({hd::to_string(cb.x0), hd::to_string(cb.x1), hd::to_string(cb.y0),
                             hd::to_string(cb.y1)});
        j["surviving_cells"] = std::move(cells);
    }
    std::cout << j.dump(2) << "\n";
    return r.found ? kExitOk : kExitNotFound;
}

struct boole_args {
    std::string x;
    int depth = 12;
    std::string prefix;
    std::string tol = "1/1000000000";
    int samples = 100;
    std::uint64_t seed = 42;
    std::size_t max_bits = env_bits_default();
};

int run_boole_code(const boole_args& a) {
    hd::exact_limits lim{a.max_bits, 256};
    rat x = hd::parse_rat(a.x);
    hd::coordinate_word w = hd::b_word(x, a.depth, lim);
    hd::symbol_sequence seq = hd::h_B(x, a.depth, lim);
    json j{{"schema_version", 1}, {"report", "boole-coding"}};
    j["x"] = hd::to_string(x);
    j["depth"] = a.depth;
    j["word"] = word_json(w);
    j["symbols"] = seq.future;
    j["future_status"] =
        seq.future_status == hd::side_status::terminated ? "terminated" : "truncated";
    std::cout << j.dump(2) << "\n";
    return kExitOk;
}

int run_boole_decode(const boole_args& a) {
    hd::exact_limits lim{a.max_bits, 256};
    std::vector<long long> prefix = parse_int_list(a.prefix);
    hd::interval iv = hd::decode_B(prefix, hd::parse_rat(a.tol), lim);
    json j{{"schema_version", 1}, {"report", "boole-decode"}};
    j["prefix"] = prefix;
    j["interval"] = {hd::to_string(iv.lo), hd::to_string(iv.hi)};
    j["width"] = hd::to_double(iv.width());
    std::cout << j.dump(2) << "\n";
    return kExitOk;
}

int run_boole_measure(const boole_args& a) {
    hd::det_rng rng(a.seed);
    double max_err = 0;
    for (int i = 0; i < a.samples; ++i) {
        double y = static_cast<double>(rng.uniform(-50'000'000, 50'000'000)) / 1e6;
        hd::measure_report m = hd::measure_preservation_check(y, 1e-12);
        max_err = std::max(max_err, m.error);
        if (!m.pass) {
            json j{{"schema_version", 1}, {"report", "boole-measure"}, {"pass", false},
                   {"failed_at", y}, {"error", m.error}};
            std::cout << j.dump(2) << "\n";
            return kExitCheckFailed;
        }
    }
    json j{{"schema_version", 1}, {"report", "boole-measure"}, {"pass", true},
           {"samples", a.samples}, {"max_error", max_err}};
    std::cout << j.dump(2) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Henon-Devaney map toolkit: exact orbits, symbolic coding, exceptional "
                 "curves, decoding, and the Boole map"};
    app.require_subcommand(1);

    orbit_args oa;
    auto* orbit_cmd = app.add_subcommand("orbit", "iterate the map from a point");
    orbit_cmd->add_option("--point", oa.point, "start point \"x,y\" (rational or decimal)")
        ->required();
    orbit_cmd->add_option("--fwd", oa.fwd, "forward steps");
    orbit_cmd->add_option("--bwd", oa.bwd, "backward steps");
    orbit_cmd->add_option("--format", oa.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    orbit_cmd->add_option("--mode", oa.mode, "exact|float")
        ->check(CLI::IsMember({"exact", "float"}));
    orbit_cmd->add_option("--eps", oa.eps, "float-mode discontinuity guard");
    orbit_cmd->add_option("--max-bits", oa.max_bits, "exact-mode bit budget");
    orbit_cmd->add_option("--max-depth", oa.max_depth, "exact-mode depth cap");

    code_args ca;
    auto* code_cmd = app.add_subcommand("code", "coordinate words and symbol sequences");
    code_cmd->add_option("--point", ca.point, "point \"x,y\"")->required();
    code_cmd->add_option("--window", ca.window, "symbols per side");
    code_cmd->add_flag("--mirror", ca.mirror, "code the mirrored point -p");
    code_cmd->add_option("--format", ca.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    code_cmd->add_option("--max-bits", ca.max_bits, "bit budget");

    curves_args cva;
    auto* curves_cmd = app.add_subcommand("curves", "sample exceptional curve families");
    curves_cmd->add_option("--family", cva.family, "R (pre-images of {y=0}) or L (images of {y=-x})")
        ->check(CLI::IsMember({"R", "L"}));
    curves_cmd->add_option("--level", cva.level, "iteration depth n")->required();
    curves_cmd->add_option("--samples", cva.samples, "base samples per branch");
    curves_cmd->add_option("--format", cva.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    curves_cmd->add_option("--gap", cva.gap, "refine while neighbours are farther than this");
    curves_cmd->add_option("--max-points", cva.max_points, "sample cap per branch");
    curves_cmd->add_option("--max-level", cva.max_level, "largest admissible level");

    verify_args va;
    auto* verify_cmd = app.add_subcommand("verify", "run the verification suites");
    verify_cmd->add_option("--suite", va.opt.suite, "all|core|curves|coding|boole|decode")
        ->check(CLI::IsMember({"all", "core", "curves", "coding", "boole", "decode"}));
    verify_cmd->add_option("--seed", va.opt.seed, "deterministic seed");
    verify_cmd->add_option("--points", va.opt.points, "commutation sweep size");
    verify_cmd->add_option("--depth", va.opt.depth, "commutation orbit depth");
    verify_cmd->add_option("--samples", va.opt.samples, "curve samples per branch");
    verify_cmd->add_option("--level", va.opt.curve_level, "curve check depth");
    verify_cmd->add_option("--max-bits", va.opt.max_bits, "bit budget for sweeps");
    verify_cmd->add_option("--out", va.out, "also write the report to a file");

    decode_args da;
    auto* decode_cmd = app.add_subcommand("decode", "locate plane points from word prefixes");
    decode_cmd->add_option("--iword", da.iword, "i-word prefix, e.g. \"2,-1\"");
    decode_cmd->add_option("--jword", da.jword, "j-word prefix");
    decode_cmd->add_option("--box", da.box, "search box x0,x1,y0,y1")->required();
    decode_cmd->add_option("--icycle", da.icycle, "periodic i-cycle (enables periodic search)");
    decode_cmd->add_option("--jcycle", da.jcycle, "periodic j-cycle");
    decode_cmd->add_option("--tol", da.tol, "target cell size");
    decode_cmd->add_option("--max-refinements", da.max_refinements, "quadtree depth cap");
    decode_cmd->add_option("--max-bits", da.max_bits, "bit budget");

    boole_args ba;
    auto* boole_cmd = app.add_subcommand("boole", "the one-dimensional Boole map");
    boole_cmd->require_subcommand(1);
    auto* bc = boole_cmd->add_subcommand("code", "word and symbols of a point");
    bc->add_option("--x", ba.x, "rational or decimal point")->required();
    bc->add_option("--depth", ba.depth, "orbit scan depth");
    bc->add_option("--max-bits", ba.max_bits, "bit budget");
    auto* bd = boole_cmd->add_subcommand("decode", "bracket a word-prefix cylinder");
    bd->add_option("--prefix", ba.prefix, "word prefix, e.g. \"2,-1\"")->required();
    bd->add_option("--tol", ba.tol, "endpoint slack");
    bd->add_option("--max-bits", ba.max_bits, "bit budget");
    auto* bm = boole_cmd->add_subcommand("check-measure", "pre-image derivative sums");
    bm->add_option("--samples", ba.samples, "number of heights");
    bm->add_option("--seed", ba.seed, "deterministic seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParse;
    }

    try {
        if (*orbit_cmd) return run_orbit(oa);
        if (*code_cmd) return run_code(ca);
        if (*curves_cmd) return run_curves(cva);
        if (*verify_cmd) return run_verify_cmd(va);
        if (*decode_cmd) return run_decode(da);
        if (*boole_cmd) {
            if (*bc) return run_boole_code(ba);
            if (*bd) return run_boole_decode(ba);
            if (*bm) return run_boole_measure(ba);
        }
    } catch (const hd::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const hd::resource_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const hd::discontinuity_error& e) {
        std::cerr << "discontinuity: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitOk;
}
