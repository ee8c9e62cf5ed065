// twistkit: command-line front end for the integral-point toolkit.
//
// Subcommands: points, cosets, scan, heights, pell, simpell, quartic,
// bounds, audit, verify-paper.  Output is JSON lines by default, CSV with
// --format csv.  Big integers are serialized as decimal strings.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "twistkit/acceptance.hpp"
#include "twistkit/constants_audit.hpp"
#include "twistkit/divpoly.hpp"
#include "twistkit/heights.hpp"
#include "twistkit/pell.hpp"
#include "twistkit/point_search.hpp"
#include "twistkit/simpell.hpp"
#include "twistkit/sphere_bounds.hpp"

using json = nlohmann::json;
using namespace twistkit;

namespace {

struct Output {
    std::unique_ptr<std::ofstream> file;
    std::ostream* os = &std::cout;
    bool csv = false;

    int open(const std::string& path, const std::string& format) {
        csv = format == "csv";
        if (!path.empty()) {
            file = std::make_unique<std::ofstream>(path);
            if (!file->good()) {
                std::cerr << "cannot open output file: " << path << "\n";
                return 3;
            }
            os = file.get();
        }
        return 0;
    }
    std::ostream& out() { return *os; }
};

BigInt parse_bigint(const std::string& s) {
    try {
        return BigInt(s);
    } catch (const std::invalid_argument&) {
        throw domain_error("not an integer: " + s);
    }
}

BigRat parse_rational(const std::string& s) {
    try {
        BigRat q(s);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw domain_error("not a rational: " + s);
    }
}

json triple_json(const SquareClassTriple& t) {
    return json::array({t.c1.get_str(), t.c2.get_str(), t.c3.get_str()});
}

json record_json(const IntegralPointRecord& r) {
    return json{{"d", r.d.get_str()},
                {"x", r.x.get_str()},
                {"y", r.y.get_str()},
                {"coset", triple_json(r.coset_key)},
                {"size_class", r.large ? "large" : "small"}};
}

json member_json(const IntegralPointRecord& r) {
    return json{{"x", r.x.get_str()}, {"y", r.y.get_str()}};
}

json height_json(const HeightReport& r) {
    json env = json::object();
    for (const auto& [k, v] : r.envelope_verdicts) env[k] = v;
    return json{{"weil", r.weil},
                {"canonical", r.canonical},
                {"error_radius", r.error_radius},
                {"envelopes", env}};
}

BigInt default_xmax(const BigInt& d, double exponent = 2.02) {
    const double v = std::ceil(std::exp(exponent * log_big(d)));
    BigInt out;
    mpz_set_d(out.get_mpz_t(), v);
    return std::max(out, d);
}

int resolve_jobs_flag(int jobs) {
    if (jobs > 0) return jobs;
    if (const char* env = std::getenv("TWISTKIT_JOBS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 0;  // library default: hardware parallelism
}

// ---- subcommand drivers ----------------------------------------------------

int run_points(const std::string& d_str, const std::string& xmax_str, double eps, Output& out) {
    const BigInt d = parse_bigint(d_str);
    const BigInt xmax = xmax_str.empty() ? default_xmax(d) : parse_bigint(xmax_str);
    auto recs = enumerate_integral_points(d, xmax, eps);
    if (out.csv) {
        out.out() << "d,x,y,c1,c2,c3,size_class\n";
        for (const auto& r : recs)
            out.out() << r.d << "," << r.x << "," << r.y << "," << r.coset_key.c1 << ","
                      << r.coset_key.c2 << "," << r.coset_key.c3 << ","
                      << (r.large ? "large" : "small") << "\n";
    } else {
        for (const auto& r : recs) out.out() << record_json(r).dump() << "\n";
    }
    return 0;
}

int run_cosets(const std::string& d_str, const std::string& xmax_str, Output& out) {
    const BigInt d = parse_bigint(d_str);
    const BigInt xmax = xmax_str.empty() ? default_xmax(d) : parse_bigint(xmax_str);
    auto reports = classify_cosets(enumerate_integral_points(d, xmax));
    if (out.csv) {
        out.out() << "d,rep_x,rep_y,pair_count,negative_pair_count,exceptional,exceeds_torsion_"
                     "allowance,members\n";
        for (const auto& g : reports) {
            out.out() << d << "," << g.representative.x << "," << g.representative.y << ","
                      << g.pair_count << "," << g.negative_pair_count << ","
                      << (g.exceptional ? 1 : 0) << "," << (g.exceeds_torsion_allowance ? 1 : 0)
                      << ",";
            for (size_t i = 0; i < g.members.size(); ++i)
                out.out() << (i ? ";" : "") << g.members[i].x << ":" << g.members[i].y;
            out.out() << "\n";
        }
    } else {
        for (const auto& g : reports) {
            json members = json::array();
            for (const auto& m : g.members) members.push_back(member_json(m));
            out.out() << json{{"d", d.get_str()},
                              {"representative", member_json(g.representative)},
                              {"coset", triple_json(g.representative.coset_key)},
                              {"members", members},
                              {"pair_count", g.pair_count},
                              {"negative_pair_count", g.negative_pair_count},
                              {"exceptional", g.exceptional},
                              {"exceeds_torsion_allowance", g.exceeds_torsion_allowance}}
                             .dump()
                      << "\n";
        }
    }
    return 0;
}

int run_scan(const std::string& from_str, const std::string& to_str, bool positive,
             double exponent, int jobs, Output& out) {
    ScanOptions opt;
    opt.negative_only = !positive;
    opt.positive_exponent = exponent;
    opt.jobs = resolve_jobs_flag(jobs);
    ScanReport rep = scan_family(parse_bigint(from_str), parse_bigint(to_str), opt);
    if (out.csv) {
        out.out() << "d,pairs,cosets,exceptional\n";
        for (const auto& r : rep.per_d)
            out.out() << r.d << "," << r.pairs << "," << r.cosets << ","
                      << (r.exceptional ? 1 : 0) << "\n";
    } else {
        for (const auto& r : rep.per_d) {
            json members = json::array();
            for (const auto& m : r.exceptional_members) members.push_back(member_json(m));
            out.out() << json{{"d", r.d.get_str()},
                              {"pairs", r.pairs},
                              {"cosets", r.cosets},
                              {"exceptional", r.exceptional},
                              {"exceptional_members", members}}
                             .dump()
                      << "\n";
        }
        json ex = json::array();
        for (const auto& d : rep.exceptional_ds) ex.push_back(d.get_str());
        out.out() << json{{"summary", true},
                          {"from", rep.d_from.get_str()},
                          {"to", rep.d_to.get_str()},
                          {"negative_only", rep.negative_only},
                          {"exceptional_ds", ex}}
                         .dump()
                  << "\n";
    }
    return 0;
}

int run_heights(const std::string& d_str, const std::string& x_str, const std::string& y_str,
                bool enumerate, const std::string& xmax_str, double tol, Output& out) {
    const BigInt d = parse_bigint(d_str);
    Curve c(d);
    std::vector<CurvePoint> points;
    if (enumerate) {
        const BigInt xmax = xmax_str.empty() ? default_xmax(d) : parse_bigint(xmax_str);
        for (const auto& r : enumerate_integral_points(d, xmax))
            if (r.y > 0) points.push_back(r.point());
    } else {
        if (x_str.empty()) throw domain_error("heights: need --x or --enumerate");
        const BigRat x = parse_rational(x_str);
        BigRat y;
        if (!y_str.empty()) {
            y = parse_rational(y_str);
        } else {
            const BigRat y2 = c.rhs(x);
            if (y2 < 0) throw domain_error("heights: x is not on the curve");
            BigInt ry, rn;
            if (!is_perfect_square(num(y2), rn) || !is_perfect_square(den(y2), ry))
                throw domain_error("heights: no rational point at this x (give --y)");
            y = make_rat(rn, ry);
        }
        points.emplace_back(c, x, y);
    }
    if (out.csv) out.out() << "d,x,y,weil,canonical,error_radius,all_envelopes_pass\n";
    for (const auto& p : points) {
        HeightReport r = p.is_torsion() ? canonical_height(p, tol) : height_gap_report(p, tol);
        if (out.csv) {
            out.out() << d << "," << p.x() << "," << p.y() << "," << r.weil << "," << r.canonical
                      << "," << r.error_radius << "," << (r.all_pass() ? 1 : 0) << "\n";
        } else {
            json j = height_json(r);
            j["d"] = d.get_str();
            j["x"] = BigRat(p.x()).get_str();
            j["y"] = BigRat(p.y()).get_str();
            out.out() << j.dump() << "\n";
        }
    }
    return 0;
}

int run_pell(const std::string& d_str, bool audit, const std::string& xmax_str, Output& out) {
    const BigInt d = parse_bigint(d_str);
    json j{{"d", d.get_str()}};
    if (!is_perfect_square(d) && d > 1) {
        PellFundamental f = pell_fundamental(d);
        j["fundamental"] = {{"v", f.v.get_str()}, {"u", f.u.get_str()}};
    }
    if (auto sol = solve_double_pell(d)) {
        j["double_pell"] = {{"s", sol->s.get_str()},
                            {"u", sol->u.get_str()},
                            {"v", sol->v.get_str()}};
    } else {
        j["double_pell"] = nullptr;
    }
    if (auto p = ptors_extra(d)) {
        j["extra_point"] = {{"x", num(p->x()).get_str()}, {"y", num(p->y()).get_str()}};
    } else {
        j["extra_point"] = nullptr;
    }
    int exit_code = 0;
    if (audit) {
        const BigInt xmax = xmax_str.empty() ? BigInt(1000000) : parse_bigint(xmax_str);
        TorsionCosetAudit a = torsion_coset_audit(d, xmax);
        j["audit"] = {{"x_max", a.x_max.get_str()}, {"ok", a.ok}, {"violations", a.violations}};
        if (!a.ok) exit_code = 1;
    }
    if (out.csv) {
        const bool has_fund = j.contains("fundamental") && !j["fundamental"].is_null();
        out.out() << "d,v,u,s,extra_x,extra_y,audit_ok\n";
        out.out() << d << "," << (has_fund ? j["fundamental"]["v"].get<std::string>() : "") << ","
                  << (has_fund ? j["fundamental"]["u"].get<std::string>() : "") << ","
                  << (j["double_pell"].is_null() ? "" : j["double_pell"]["s"].get<std::string>())
                  << ","
                  << (j["extra_point"].is_null() ? "" : j["extra_point"]["x"].get<std::string>())
                  << ","
                  << (j["extra_point"].is_null() ? "" : j["extra_point"]["y"].get<std::string>())
                  << "," << (audit ? (exit_code == 0 ? "1" : "0") : "") << "\n";
    } else {
        out.out() << j.dump() << "\n";
    }
    return exit_code;
}

int run_simpell(const std::string& a, const std::string& b, const std::string& c,
                const std::string& d, const std::string& limit, int rank, Output& out) {
    SimPellInstance inst(parse_bigint(a), parse_bigint(b), parse_bigint(c), parse_bigint(d));
    auto sols = brute_count(inst, parse_bigint(limit));
    json jsols = json::array(), jlifts = json::array();
    bool shared = true;
    std::vector<CurvePoint> lifts;
    for (const auto& s : sols) {
        jsols.push_back({{"X", s.x.get_str()}, {"Y", s.y.get_str()}, {"Z", s.z.get_str()}});
        CurvePoint p = curve_lift(inst, s);
        jlifts.push_back({{"x", num(p.x()).get_str()}, {"y", num(p.y()).get_str()}});
        lifts.push_back(p);
    }
    for (size_t i = 1; i < lifts.size(); ++i) shared = shared && same_coset(lifts[0], lifts[i]);
    json j{{"a", inst.a.get_str()},
           {"b", inst.b.get_str()},
           {"c", inst.c.get_str()},
           {"d", inst.d.get_str()},
           {"curve_d", inst.curve_d().get_str()},
           {"solutions", jsols},
           {"lifts", jlifts},
           {"lifts_share_coset", shared}};
    j["count_bound"] = rank >= 0 ? solution_bound(inst, rank) : solution_bound(inst);
    if (out.csv) {
        out.out() << "a,b,c,d,X,Y,Z,lift_x,lift_y\n";
        for (size_t i = 0; i < sols.size(); ++i)
            out.out() << inst.a << "," << inst.b << "," << inst.c << "," << inst.d << ","
                      << sols[i].x << "," << sols[i].y << "," << sols[i].z << ","
                      << num(lifts[i].x()) << "," << num(lifts[i].y()) << "\n";
    } else {
        out.out() << j.dump() << "\n";
    }
    return shared ? 0 : 1;
}

int run_quartic(const std::string& a, const std::string& b, const std::string& c,
                const std::string& x, const std::string& y, Output& out) {
    auto reds = quartic_reduce(parse_bigint(a), parse_bigint(b), parse_bigint(c), parse_bigint(x),
                               parse_bigint(y));
    for (const auto& r : reds) {
        json j{{"g", r.g.get_str()},
               {"lhs_minus", r.lhs_minus.get_str()},
               {"lhs_plus", r.lhs_plus.get_str()},
               {"B1", r.b1.get_str()},
               {"Y1", r.y1.get_str()},
               {"B2", r.b2.get_str()},
               {"Y2", r.y2.get_str()},
               {"b_multiplier", r.b_multiplier}};
        if (r.induced) {
            j["induced_instance"] = {{"a", r.induced->a.get_str()},
                                     {"b", r.induced->b.get_str()},
                                     {"c", r.induced->c.get_str()},
                                     {"d", r.induced->d.get_str()}};
        } else {
            j["induced_instance"] = nullptr;
        }
        if (out.csv) {
            out.out() << "g,lhs_minus,lhs_plus,B1,Y1,B2,Y2,b_multiplier\n"
                      << r.g << "," << r.lhs_minus << "," << r.lhs_plus << "," << r.b1 << ","
                      << r.y1 << "," << r.b2 << "," << r.y2 << "," << r.b_multiplier << "\n";
        } else {
            out.out() << j.dump() << "\n";
        }
    }
    return 0;
}

json bound_json(const BoundResult& b) {
    json params = json::object();
    for (const auto& [k, v] : b.params) params[k] = v;
    return json{{"method", bound_method_name(b.method)},
                {"log_bound", b.log_bound},
                {"params", params}};
}

int run_bounds(int r, double theta, double eps, double base_eps, const std::string& method,
               Output& out) {
    if (base_eps >= 0) {
        if (out.csv)
            out.out() << "eps,kl_asymptotic_base\n"
                      << base_eps << "," << kl_asymptotic_base(base_eps) << "\n";
        else
            out.out() << json{{"eps", base_eps},
                              {"kl_asymptotic_base", kl_asymptotic_base(base_eps)}}
                             .dump()
                      << "\n";
        return 0;
    }
    if (eps >= 0) {
        if (r <= 0) throw domain_error("bounds: --r required with --eps");
        SmallPointBound b = small_point_count_bound(r, eps);
        if (out.csv) {
            out.out() << "r,eps,theta,log_target,best_method,best_log_bound\n"
                      << r << "," << eps << "," << b.theta << "," << b.log_target << ","
                      << bound_method_name(b.best.method) << "," << b.best.log_bound << "\n";
            return 0;
        }
        json per = json::object();
        for (const auto& [k, v] : b.per_method) per[k] = v;
        out.out() << json{{"r", r},
                          {"eps", eps},
                          {"theta", b.theta},
                          {"log_target", b.log_target},
                          {"best", bound_json(b.best)},
                          {"per_method", per}}
                         .dump()
                  << "\n";
        return 0;
    }
    if (r <= 0 || theta <= 0) throw domain_error("bounds: need --r and --theta (or --eps)");
    std::vector<BoundResult> results;
    if (method == "kl" || method == "all") results.push_back(kl_bound(r, theta));
    if (method == "rankin" || method == "all") results.push_back(rankin_bounds(r, theta));
    if (method == "shannon" || method == "all") results.push_back(shannon_bound(r, theta));
    if (out.csv) out.out() << "method,log_bound\n";
    for (const auto& b : results) {
        if (out.csv)
            out.out() << bound_method_name(b.method) << "," << b.log_bound << "\n";
        else
            out.out() << bound_json(b).dump() << "\n";
    }
    return 0;
}

int run_audit(Output& out) {
    auto items = run_default_audit();
    bool all_ok = true;
    if (out.csv) out.out() << "name,computed,threshold,relation,verdict,certified\n";
    for (const auto& it : items) {
        all_ok = all_ok && it.verdict;
        if (out.csv) {
            out.out() << it.name << "," << it.computed << "," << it.threshold << ","
                      << rel_name(it.relation) << "," << (it.verdict ? 1 : 0) << ","
                      << (it.certified ? 1 : 0) << "\n";
        } else {
            json inputs = json::object();
            for (const auto& [k, v] : it.inputs) inputs[k] = v;
            out.out() << json{{"name", it.name},
                              {"computed", it.computed},
                              {"threshold", it.threshold},
                              {"relation", rel_name(it.relation)},
                              {"verdict", it.verdict},
                              {"certified", it.certified},
                              {"inputs", inputs}}
                             .dump()
                      << "\n";
        }
    }
    return all_ok ? 0 : 1;
}

int run_verify(bool quick, int jobs, int criterion, Output& out) {
    VerifyOptions opt;
    opt.quick = quick;
    opt.jobs = resolve_jobs_flag(jobs);
    std::vector<CriterionResult> results;
    if (criterion > 0) {
        results.push_back(run_criterion(criterion, opt));
    } else {
        for (int id = 1; id <= 9; ++id) {
            results.push_back(run_criterion(id, opt));
            const auto& r = results.back();
            std::cerr << "[criterion " << r.id << "] " << (r.pass ? "PASS" : "FAIL") << ": "
                      << r.name << " (" << r.details << ")\n";
        }
    }
    bool all_ok = true;
    if (out.csv) out.out() << "criterion,pass,name\n";
    for (const auto& r : results) {
        all_ok = all_ok && r.pass;
        if (out.csv)
            out.out() << r.id << "," << (r.pass ? 1 : 0) << "," << r.name << "\n";
        else
            out.out() << json{{"criterion", r.id},
                              {"name", r.name},
                              {"pass", r.pass},
                              {"details", r.details}}
                             .dump()
                      << "\n";
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"twistkit: integral points, Pell systems and bound audits for y^2 = x^3 - D^2 x"};
    app.require_subcommand(1);
    app.fallthrough();  // global --format/--out may follow the subcommand

    std::string out_path, format = "json";
    app.add_option("--out", out_path, "write output to a file instead of stdout");
    app.add_option("--format", format, "output format: json (lines) or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    auto* points = app.add_subcommand("points", "enumerate integral points on one curve");
    std::string p_d, p_xmax;
    double p_eps = kSizeClassEps;
    points->add_option("--d", p_d, "curve parameter D (squarefree positive)")->required();
    points->add_option("--xmax", p_xmax, "positive search ceiling (default ceil(D^2.02))");
    points->add_option("--eps", p_eps, "small/large split exponent parameter");

    auto* cosets = app.add_subcommand("cosets", "group integral points by descent coset");
    std::string c_d, c_xmax;
    cosets->add_option("--d", c_d, "curve parameter D")->required();
    cosets->add_option("--xmax", c_xmax, "positive search ceiling (default ceil(D^2.02))");

    auto* scan = app.add_subcommand("scan", "scan a family of curves");
    std::string s_from, s_to;
    bool s_positive = false;
    double s_exponent = 2.02;
    int s_jobs = 0;
    scan->add_option("--from", s_from, "first D")->required();
    scan->add_option("--to", s_to, "last D")->required();
    scan->add_flag("--positive", s_positive, "also scan the positive range up to D^exponent");
    scan->add_option("--exponent", s_exponent, "positive-range exponent (with --positive)");
    scan->add_option("--jobs", s_jobs, "worker count (default: hardware)");

    auto* heights = app.add_subcommand("heights", "Weil/canonical heights and envelope checks");
    std::string h_d, h_x, h_y, h_xmax;
    bool h_enum = false;
    double h_tol = kDefaultHeightTol;
    heights->add_option("--d", h_d, "curve parameter D")->required();
    heights->add_option("--x", h_x, "x-coordinate (integer or num/den)");
    heights->add_option("--y", h_y, "y-coordinate (optional; derived when omitted)");
    heights->add_flag("--enumerate", h_enum, "report every enumerated non-torsion point");
    heights->add_option("--xmax", h_xmax, "ceiling for --enumerate");
    heights->add_option("--tol", h_tol, "canonical height error tolerance");

    auto* pell = app.add_subcommand("pell", "Pell solver and torsion-coset classification");
    std::string pe_d, pe_xmax;
    bool pe_audit = false;
    pell->add_option("--d", pe_d, "curve parameter D")->required();
    pell->add_flag("--audit", pe_audit, "audit torsion cosets against enumeration");
    pell->add_option("--xmax", pe_xmax, "audit enumeration ceiling (default 10^6)");

    auto* simpell = app.add_subcommand("simpell", "simultaneous Pell system");
    std::string sp_a, sp_b, sp_c, sp_d, sp_limit = "10000";
    int sp_rank = -1;
    simpell->add_option("--a", sp_a)->required();
    simpell->add_option("--b", sp_b)->required();
    simpell->add_option("--c", sp_c)->required();
    simpell->add_option("--d", sp_d)->required();
    simpell->add_option("--limit", sp_limit, "search limit for X, Y, Z");
    simpell->add_option("--rank", sp_rank, "use the rank form of the count bound");

    auto* quartic = app.add_subcommand("quartic", "reduce A^2 X^4 - B Y^2 = C^2");
    std::string q_a, q_b, q_c, q_x, q_y;
    quartic->add_option("--A", q_a)->required();
    quartic->add_option("--B", q_b)->required();
    quartic->add_option("--C", q_c)->required();
    quartic->add_option("--X", q_x)->required();
    quartic->add_option("--Y", q_y)->required();

    auto* bounds = app.add_subcommand("bounds", "spherical-code bound evaluators");
    int b_r = 0;
    double b_theta = -1, b_eps = -1, b_base_eps = -1;
    std::string b_method = "all";
    bounds->add_option("--r", b_r, "dimension (or coset rank with --eps)");
    bounds->add_option("--theta", b_theta, "minimum angle in radians");
    bounds->add_option("--eps", b_eps, "small-point pipeline epsilon");
    bounds->add_option("--base-eps", b_base_eps, "report the asymptotic base at this epsilon");
    bounds->add_option("--method", b_method, "kl, rankin, shannon or all")
        ->check(CLI::IsMember({"kl", "rankin", "shannon", "all"}));

    app.add_subcommand("audit", "run the explicit-constant audit");

    auto* verify = app.add_subcommand("verify-paper", "run the full acceptance suite");
    bool v_quick = false;
    int v_jobs = 0, v_criterion = 0;
    verify->add_flag("--quick", v_quick, "smoke configuration (reduced sweeps)");
    verify->add_option("--jobs", v_jobs, "worker count");
    verify->add_option("--criterion", v_criterion, "run a single criterion (1..9)")
        ->check(CLI::Range(1, 9));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;  // --help is a success; anything else is usage
    }

    Output out;
    if (int rc = out.open(out_path, format)) return rc;

    try {
        if (points->parsed()) return run_points(p_d, p_xmax, p_eps, out);
        if (cosets->parsed()) return run_cosets(c_d, c_xmax, out);
        if (scan->parsed()) return run_scan(s_from, s_to, s_positive, s_exponent, s_jobs, out);
        if (heights->parsed()) return run_heights(h_d, h_x, h_y, h_enum, h_xmax, h_tol, out);
        if (pell->parsed()) return run_pell(pe_d, pe_audit, pe_xmax, out);
        if (simpell->parsed()) return run_simpell(sp_a, sp_b, sp_c, sp_d, sp_limit, sp_rank, out);
        if (quartic->parsed()) return run_quartic(q_a, q_b, q_c, q_x, q_y, out);
        if (bounds->parsed()) return run_bounds(b_r, b_theta, b_eps, b_base_eps, b_method, out);
        if (app.get_subcommand("audit")->parsed()) return run_audit(out);
        if (verify->parsed()) return run_verify(v_quick, v_jobs, v_criterion, out);
    } catch (const domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const invariant_error& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    } catch (const numeric_error& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 1;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
