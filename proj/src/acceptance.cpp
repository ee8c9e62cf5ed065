#include "twistkit/acceptance.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "twistkit/constants_audit.hpp"
#include "twistkit/divpoly.hpp"
#include "twistkit/heights.hpp"
#include "twistkit/pell.hpp"
#include "twistkit/point_search.hpp"
#include "twistkit/simpell.hpp"
#include "twistkit/sphere_bounds.hpp"

namespace twistkit {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

unsigned resolve_jobs(int jobs) {
    if (jobs > 0) return static_cast<unsigned>(jobs);
    return std::max(1u, std::thread::hardware_concurrency());
}

template <typename Fn>
void parallel_indices(size_t n, unsigned jobs, Fn&& fn) {
    jobs = std::min<size_t>(jobs, n == 0 ? 1 : n);
    if (jobs <= 1) {
        for (size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    auto worker = [&] {
        while (true) {
            const size_t i = next.fetch_add(1);
            if (i >= n) break;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

std::vector<std::uint64_t> squarefree_up_to(std::uint64_t hi) {
    std::vector<bool> sf(hi + 1, true);
    for (std::uint64_t p = 2; p * p <= hi; ++p)
        for (std::uint64_t m = p * p; m <= hi; m += p * p) sf[m] = false;
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 1; d <= hi; ++d)
        if (sf[d]) out.push_back(d);
    return out;
}

// Shared D-sweep corpus: full enumeration of each squarefree curve up to a
// common ceiling, reused by the torsion-coset and height criteria.
struct Sweep {
    std::uint64_t d_max = 0;
    BigInt x_max;
    std::vector<std::uint64_t> ds;
    std::vector<std::vector<IntegralPointRecord>> records;  // per ds index
};

const Sweep& get_sweep(const VerifyOptions& opt) {
    static std::map<bool, Sweep> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(opt.quick);
    if (it != cache.end()) return it->second;

    Sweep s;
    s.d_max = opt.quick ? 300 : 2000;
    s.x_max = opt.quick ? BigInt(100000) : BigInt(10000000);
    s.ds = squarefree_up_to(s.d_max);
    s.records.resize(s.ds.size());
    parallel_indices(s.ds.size(), resolve_jobs(opt.jobs), [&](size_t i) {
        s.records[i] = enumerate_integral_points(BigInt(s.ds[i]), s.x_max);
    });
    return cache.emplace(opt.quick, std::move(s)).first->second;
}

CriterionResult criterion_d6_cosets(const VerifyOptions&) {
    CriterionResult res{1, "curve 6 coset listing", false, ""};
    const auto t0 = Clock::now();
    auto reports = classify_cosets(enumerate_integral_points(BigInt(6), BigInt(1000000)));
    const double dt = seconds_since(t0);

    // expected: representative x -> list of (x, y)
    const std::vector<std::vector<std::pair<long, long>>> expected = {
        {{-6, 0}}, {{-3, 9}}, {{-2, 8}}, {{0, 0}}, {{6, 0}, {294, 5040}}, {{12, 36}}, {{18, 72}}};
    bool ok = reports.size() == expected.size();
    if (ok) {
        for (size_t i = 0; i < expected.size(); ++i) {
            const auto& got = reports[i].members;
            ok = ok && got.size() == expected[i].size();
            if (!ok) break;
            for (size_t j = 0; j < got.size(); ++j)
                ok = ok && got[j].x == expected[i][j].first && got[j].y == expected[i][j].second;
        }
    }
    ok = ok && dt < 1.0;
    res.pass = ok;
    std::ostringstream os;
    os << reports.size() << " cosets in " << dt << " s";
    res.details = os.str();
    return res;
}

CriterionResult criterion_exceptional_scan(const VerifyOptions& opt) {
    CriterionResult res{2, "negative-range family scan", false, ""};
    const std::uint64_t hi = opt.quick ? 2000 : 8000;
    const auto t0 = Clock::now();
    ScanOptions sopt;
    sopt.jobs = opt.jobs;
    ScanReport report = scan_family(BigInt(1), BigInt(hi), sopt);
    const double dt = seconds_since(t0);

    std::vector<BigInt> expected = {BigInt(1254)};
    if (!opt.quick) expected.push_back(BigInt(7585));
    bool ok = report.exceptional_ds == expected;

    // exact coordinate sets of the two exceptional cosets
    auto members_of = [&](std::uint64_t d) {
        for (const auto& rec : report.per_d)
            if (rec.d == d) return rec.exceptional_members;
        return std::vector<IntegralPointRecord>{};
    };
    auto check_members = [&](std::uint64_t d, std::vector<std::pair<long, long>> want) {
        auto got = members_of(d);
        if (got.size() != want.size()) return false;
        for (size_t i = 0; i < got.size(); ++i)
            if (got[i].x != want[i].first || got[i].y != want[i].second) return false;
        return true;
    };
    ok = ok && check_members(1254, {{-1058, 21896}, {-98, 12376}});
    if (!opt.quick) ok = ok && check_members(7585, {{-7056, 233772}, {-5184, 398664}});
    ok = ok && dt < 600.0;

    // the same assertion over the whole range the negative-x classification
    // was verified on
    double full_dt = 0.0;
    if (!opt.quick) {
        const auto t1 = Clock::now();
        ScanReport full = scan_family(BigInt(1), BigInt(97352), sopt);
        full_dt = seconds_since(t1);
        ok = ok && full.exceptional_ds == std::vector<BigInt>{BigInt(1254), BigInt(7585)};
    }

    res.pass = ok;
    std::ostringstream os;
    os << report.per_d.size() << " curves to " << hi << " in " << dt << " s; exceptional = {";
    for (const auto& d : report.exceptional_ds) os << d << " ";
    os << "}";
    if (!opt.quick) os << "; full range to 97352 re-confirms in " << full_dt << " s";
    res.details = os.str();
    return res;
}

CriterionResult criterion_pell_coset(const VerifyOptions& opt) {
    CriterionResult res{3, "Pell route vs enumeration in the (D,0) coset", false, ""};
    const Sweep& sweep = get_sweep(opt);
    const BigInt coset_xmax = opt.quick ? BigInt(1000000) : BigInt(100000000);

    std::atomic<int> failures{0};
    std::atomic<int> with_pair{0};
    std::vector<std::string> notes(sweep.ds.size());
    parallel_indices(sweep.ds.size(), resolve_jobs(opt.jobs), [&](size_t i) {
        const BigInt d(sweep.ds[i]);
        auto coset = enumerate_pell_coset(d, coset_xmax);
        std::vector<BigInt> pair_xs;
        for (const auto& rec : coset)
            if (rec.y > 0) pair_xs.push_back(rec.x);
        auto predicted = ptors_extra(d);

        bool ok = pair_xs.size() <= 1;
        if (predicted && num(predicted->x()) <= coset_xmax) {
            ok = ok && pair_xs.size() == 1 && pair_xs[0] == num(predicted->x());
        } else {
            ok = ok && pair_xs.empty();
        }
        if (!pair_xs.empty()) with_pair.fetch_add(1);

        // cross-check against the general enumeration on its overlap, and
        // the other torsion cosets while the records are at hand
        const Curve c(d);
        const SquareClassTriple id{1, 1, 1};
        const auto zero_t = descent_triple(CurvePoint(c, BigRat(0), BigRat(0)));
        const auto negd_t = descent_triple(CurvePoint(c, BigRat(-d), BigRat(0)));
        const auto posd_t = descent_triple(CurvePoint(c, BigRat(d), BigRat(0)));
        for (const auto& rec : sweep.records[i]) {
            if (rec.y == 0) continue;
            if (rec.coset_key == id || rec.coset_key == zero_t || rec.coset_key == negd_t)
                ok = false;
            if (rec.coset_key == posd_t) {
                ok = ok && !pair_xs.empty() && rec.x == pair_xs[0];
            }
        }
        if (!ok) {
            failures.fetch_add(1);
            notes[i] = "D=" + d.get_str();
        }
        if (sweep.ds[i] == 6 && (pair_xs.empty() || pair_xs[0] != 294)) failures.fetch_add(1);
    });

    res.pass = failures.load() == 0;
    std::ostringstream os;
    os << sweep.ds.size() << " curves, " << with_pair.load() << " with an extra pair";
    for (const auto& n : notes)
        if (!n.empty()) os << " FAIL:" << n;
    res.details = os.str();
    return res;
}

CriterionResult criterion_simpell(const VerifyOptions& opt) {
    CriterionResult res{4, "simultaneous Pell lift coherence", false, ""};
    const long cap = opt.quick ? 100 : 300;
    const BigInt limit = opt.quick ? BigInt(1000) : BigInt(10000);

    long instances = 0, solutions = 0;
    bool ok = true;
    for (long a = 1; a <= cap && ok; ++a)
        for (long b = 1; a * b <= cap && ok; ++b)
            for (long c = 1; a * b * c <= cap && ok; ++c)
                for (long d = 1; a * b * c * d <= cap && ok; ++d) {
                    if (std::gcd(a, b) != 1 || std::gcd(a, c) != 1 || std::gcd(a, d) != 1 ||
                        std::gcd(b, c) != 1 || std::gcd(b, d) != 1 || std::gcd(c, d) != 1)
                        continue;
                    SimPellInstance inst{BigInt(a), BigInt(b), BigInt(c), BigInt(d)};
                    ++instances;
                    auto sols = brute_count(inst, limit);
                    if (sols.empty()) continue;
                    std::vector<CurvePoint> lifts;
                    for (const auto& s : sols) {
                        try {
                            lifts.push_back(curve_lift(inst, s));  // verifies everything
                        } catch (const std::exception&) {
                            ok = false;
                        }
                    }
                    solutions += static_cast<long>(sols.size());
                    for (size_t i = 1; i < lifts.size() && ok; ++i)
                        ok = same_coset(lifts[0], lifts[i]);
                    ok = ok && static_cast<double>(sols.size()) <= solution_bound(inst);
                }

    // the worked example
    SimPellInstance inst(BigInt(2), BigInt(1), BigInt(3), BigInt(1));
    auto sols = brute_count(inst, limit);
    ok = ok && sols.size() == 1 && sols[0].x == 5 && sols[0].y == 7 && sols[0].z == 4;
    if (ok) {
        CurvePoint p = curve_lift(inst, sols[0]);
        ok = p.x() == 294 && p.y() == 5040 && p.curve().d == 6;
    }

    res.pass = ok;
    std::ostringstream os;
    os << instances << " instances, " << solutions << " solutions lifted";
    res.details = os.str();
    return res;
}

CriterionResult criterion_heights(const VerifyOptions& opt) {
    CriterionResult res{5, "height envelopes on every enumerated point", false, ""};
    const Sweep& sweep = get_sweep(opt);
    std::atomic<long> checked{0};
    std::atomic<long> failures{0};
    parallel_indices(sweep.ds.size(), resolve_jobs(opt.jobs), [&](size_t i) {
        for (const auto& rec : sweep.records[i]) {
            if (rec.y == 0) continue;
            HeightReport hr = height_gap_report(rec.point(), 1e-9);
            checked.fetch_add(1);
            if (!hr.all_pass()) failures.fetch_add(1);
        }
    });
    res.pass = failures.load() == 0 && checked.load() > 0;
    std::ostringstream os;
    os << checked.load() << " non-torsion points checked, " << failures.load() << " failures";
    res.details = os.str();
    return res;
}

CriterionResult criterion_divpoly(const VerifyOptions& opt) {
    CriterionResult res{6, "division polynomial multiple oracle", false, ""};
    const Sweep& sweep = get_sweep(opt);  // shared corpus; built once per run
    const auto t0 = Clock::now();
    const int n_points = opt.quick ? 24 : 100;
    const long m_max = opt.quick ? 8 : 12;

    // deterministic pseudo-random sample: k G + T with k in [1, 6]
    std::mt19937 rng(20260809);
    const std::vector<std::uint64_t> ds = {5, 6, 14, 1254};
    std::map<std::uint64_t, CurvePoint> gens;
    for (auto d : ds) {
        Curve c((BigInt(d)));
        if (d == 5) gens.emplace(d, CurvePoint(c, BigRat(-4), BigRat(6)));
        if (d == 6) gens.emplace(d, CurvePoint(c, BigRat(-3), BigRat(9)));
        if (d == 14) gens.emplace(d, CurvePoint(c, BigRat(18), BigRat(48)));
        if (d == 1254) gens.emplace(d, CurvePoint(c, BigRat(-98), BigRat(12376)));
    }

    bool ok = true;
    int built = 0;
    long checked = 0;
    while (built < n_points && ok) {
        const std::uint64_t d = ds[rng() % ds.size()];
        const CurvePoint& g = gens.at(d);
        const int k = 1 + static_cast<int>(rng() % 6);
        const auto tors = torsion_points(g.curve());
        CurvePoint p = add(scalar_mul(k, g), tors[rng() % 4]);
        if (rng() % 2) p = negate(p);
        if (p.is_torsion()) continue;
        ++built;
        for (long m = 2; m <= m_max; ++m) {
            CurvePoint mp = scalar_mul(m, p);
            if (mp.is_infinity()) continue;
            if (x_of_multiple(m, p) != mp.x()) ok = false;
            ++checked;
        }
    }

    // size sandwich on integral points with x > D
    auto sandwich = [&](const CurvePoint& p) {
        const BigInt twod = 2 * p.curve().d;
        for (long m = 2; m <= 9; ++m) {
            CurvePoint mp = scalar_mul(m, p);
            if (mp.is_infinity()) continue;
            BigRat xm = x_of_multiple(m, p);
            BigInt vm;
            if (!is_perfect_square(den(xm), vm)) return false;
            BigRat psi = psi_value(m, p).value;
            if (den(psi) != 1) return false;
            BigInt a = abs(num(psi));
            if (vm > a) return false;
            BigInt lhs = a * a;
            lhs = lhs * lhs;
            BigInt v4 = vm * vm;
            v4 = v4 * v4;
            BigInt pw;
            mpz_pow_ui(pw.get_mpz_t(), twod.get_mpz_t(), static_cast<unsigned long>(3 * m * m));
            if (lhs > v4 * pw) return false;
        }
        return true;
    };
    ok = ok && sandwich(CurvePoint(Curve(BigInt(6)), BigRat(294), BigRat(5040)));
    ok = ok && sandwich(CurvePoint(Curve(BigInt(5)), BigRat(45), BigRat(300)));
    ok = ok && sandwich(CurvePoint(Curve(BigInt(14)), BigRat(18), BigRat(48)));

    // and on every enumerated point with x > D on the small curves
    int sandwiched = 3;
    for (size_t i = 0; i < sweep.ds.size() && sweep.ds[i] <= 60; ++i) {
        for (const auto& rec : sweep.records[i]) {
            if (rec.y == 0 || rec.x <= rec.d) continue;
            ok = ok && sandwich(rec.point());
            ++sandwiched;
        }
    }

    const double dt = seconds_since(t0);
    ok = ok && dt < 120.0;
    res.pass = ok;
    std::ostringstream os;
    os << built << " points, " << checked << " multiple checks, " << sandwiched
       << " size sandwiches in " << dt << " s";
    res.details = os.str();
    return res;
}

CriterionResult criterion_constants(const VerifyOptions&) {
    CriterionResult res{7, "explicit constant chain", false, ""};
    auto items = run_default_audit();
    bool ok = !items.empty();
    int certified = 0;
    for (const auto& it : items) {
        ok = ok && it.verdict;
        if (it.certified) ++certified;
    }

    const double roth = roth_exponent(0.000137, 0.0000684);
    const double kap = kappa_threshold(4.0, 276.1, 0.861);
    ok = ok && std::fabs(roth - 7.5165) < 7.5165e-3;
    ok = ok && std::fabs(kap - 7.5156) < 7.5156e-3;
    ok = ok && std::fabs(std::pow(6.516, 3) - 276.66) < 0.28;

    const double sl = std::sqrt(0.000137);
    const double g = (1.0 - sl) * (1.0 - sl) * (1.0 - 0.0000684) - 16.0 * 0.0000684;
    const double rhs = (1.0 + 9.0 / 0.00153) * 276.1 / ((1.0 / (0.861 * 0.861) - 1.0) * g);
    ok = ok && std::fabs(rhs - 4.77e6) < 0.05e6;

    LargePointBudget b = large_point_budget(0.00153, 0.000137, 0.0000684, 7.516, 276.1, 0.861);
    ok = ok && b.t == 3 && b.s == 14 && 2 * b.s <= 28 && b.budget == 30;
    ok = ok && certified >= 6;

    res.pass = ok;
    std::ostringstream os;
    os << "exponent " << roth << " > 7.516 > threshold " << kap << "; chain (t,s,budget)=("
       << b.t << "," << b.s << "," << b.budget << "); " << certified << " exact certificates";
    res.details = os.str();
    return res;
}

CriterionResult criterion_sphere(const VerifyOptions&) {
    CriterionResult res{8, "sphere-packing bound pipeline", false, ""};
    const auto t0 = Clock::now();
    bool ok = true;

    const double base0 = kl_asymptotic_base(0.0);
    ok = ok && std::fabs(base0 - 1.8870) < 1.887e-3;
    for (int i = 0; i < 1000; ++i) {
        const double eps = i * (1.0 / 650.0) / 1000.0;
        ok = ok && kl_asymptotic_base(eps) < 1.89;
    }

    const double eps = 0.00153;
    for (int r : {10, 100, 1999, 2000, 3000, 10000}) {
        SmallPointBound b = small_point_count_bound(r, eps);
        ok = ok && b.best.log_bound <= b.log_target + 1e-6;
        const double rs =
            std::min(b.per_method.at("rankin_cap"), b.per_method.at("shannon"));
        if (r < 2000) ok = ok && rs <= b.log_target + 1e-6;
        if (r >= 2000) ok = ok && b.per_method.at("kl") <= b.log_target + 1e-6;
    }
    const double dt = seconds_since(t0);
    ok = ok && dt < 60.0;

    res.pass = ok;
    std::ostringstream os;
    os << "base(0) = " << base0 << "; all bound/target comparisons hold in " << dt << " s";
    res.details = os.str();
    return res;
}

CriterionResult criterion_substitutes(const VerifyOptions& opt) {
    CriterionResult res{9, "evaluator substitutes for the asymptotic statements", false, ""};
    bool ok = true;

    // count-bound evaluators: finite, monotone, with the rank-0 anchors
    double prev = -1;
    for (int r = 0; r <= 10; ++r) {
        CosetCountBound b = coset_count_bound(r);
        ok = ok && std::isfinite(b.per_coset) && b.per_coset > prev;
        ok = ok && std::fabs(b.total - std::exp2(2.0 + r) * b.per_coset) < 1e-6 * b.total;
        prev = b.per_coset;
    }
    ok = ok && std::fabs(coset_count_bound(0).per_coset - 31.0) < 1e-9;
    SimPellInstance inst(BigInt(2), BigInt(1), BigInt(3), BigInt(1));
    ok = ok && std::isfinite(solution_bound(inst)) && solution_bound(inst, 0) == 16.0;

    // no small-D counterexample to the exact coset claims
    ScanOptions sopt;
    sopt.jobs = opt.jobs;
    ScanReport scan = scan_family(BigInt(1), BigInt(200), sopt);
    ok = ok && scan.exceptional_ds.empty();
    for (std::uint64_t d : {1ULL, 2ULL, 5ULL, 6ULL, 34ULL}) {
        ok = ok && torsion_coset_audit(BigInt(d), BigInt(100000)).ok;
    }

    res.pass = ok;
    res.details = "count-bound evaluators exercised; small-D scans match the exact claims";
    return res;
}

}  // namespace

CriterionResult run_criterion(int id, const VerifyOptions& opt) {
    switch (id) {
        case 1: return criterion_d6_cosets(opt);
        case 2: return criterion_exceptional_scan(opt);
        case 3: return criterion_pell_coset(opt);
        case 4: return criterion_simpell(opt);
        case 5: return criterion_heights(opt);
        case 6: return criterion_divpoly(opt);
        case 7: return criterion_constants(opt);
        case 8: return criterion_sphere(opt);
        case 9: return criterion_substitutes(opt);
        default: throw domain_error("run_criterion: id must be 1..9");
    }
}

std::vector<CriterionResult> run_all_criteria(const VerifyOptions& opt) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= 9; ++id) out.push_back(run_criterion(id, opt));
    return out;
}

}  // namespace twistkit
