#include "twistkit/point_search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <map>
#include <thread>

namespace twistkit {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

bool size_class_large(const BigInt& d, const BigInt& x, double eps) {
    if (x <= d) return false;
    return log_big(x) > 2.0 * (1.0 + eps) * log_big(d);
}

IntegralPointRecord make_record(const Curve& c, BigInt x, BigInt y, double eps) {
    CurvePoint p(c, BigRat(x), BigRat(y));  // validates y^2 = x^3 - D^2 x
    IntegralPointRecord rec;
    rec.d = c.d;
    rec.x = std::move(x);
    rec.y = std::move(y);
    rec.coset_key = descent_triple(p);
    rec.large = size_class_large(c.d, rec.x, eps);
    return rec;
}

// Negative branch: x = -a for a = D down to 0, value a (D-a)(D+a).
void scan_negative(const Curve& c, double eps, std::vector<IntegralPointRecord>& out) {
    if (mpz_fits_ulong_p(c.d.get_mpz_t()) && c.d < 2500000) {
        const u64 d = mpz_get_ui(c.d.get_mpz_t());
        for (u64 a = d;; --a) {
            const u64 v = a * (d - a) * (d + a);
            u64 root = 0;
            if (is_perfect_square_u64(v, root))
                out.push_back(make_record(c, -BigInt(a), BigInt(root), eps));
            if (a == 0) break;
        }
        return;
    }
    for (BigInt a = c.d; a >= 0; --a) {
        BigInt v = a * (c.d - a) * (c.d + a);
        BigInt root;
        if (is_perfect_square(v, root)) out.push_back(make_record(c, BigInt(-a), root, eps));
    }
}

// Positive branch with incremental value and residue tracking:
//   v(x) = x^3 - D^2 x,  v' = v + diff,  diff' = diff + ddiff,  ddiff' += 6.
void scan_positive_u128(const Curve& c, u64 d, u64 x_max, double eps,
                        std::vector<IntegralPointRecord>& out) {
    u128 v = 0;  // at x = d
    u128 diff = static_cast<u128>(2) * d * d + 3 * d + 1;
    u128 ddiff = static_cast<u128>(6) * d + 6;

    struct ModTrack {
        std::uint32_t m, r, dr, ddr;
        void init(u128 diff0, u128 ddiff0, std::uint32_t mod) {
            m = mod;
            r = 0;
            dr = static_cast<std::uint32_t>(diff0 % mod);
            ddr = static_cast<std::uint32_t>(ddiff0 % mod);
        }
        void step() {
            r += dr;
            if (r >= m) r -= m;
            dr += ddr;
            if (dr >= m) dr -= m;
            ddr += 6;
            if (ddr >= m) ddr -= m;
        }
    };
    ModTrack t63, t65, t11;
    t63.init(diff, ddiff, 63);
    t65.init(diff, ddiff, 65);
    t11.init(diff, ddiff, 11);

    static constexpr auto sq_table = [] {
        struct Tables {
            bool q64[64] = {}, q63[63] = {}, q65[65] = {}, q11[11] = {};
        } t;
        for (int i = 0; i < 64; ++i) t.q64[(i * i) % 64] = true;
        for (int i = 0; i < 63; ++i) t.q63[(i * i) % 63] = true;
        for (int i = 0; i < 65; ++i) t.q65[(i * i) % 65] = true;
        for (int i = 0; i < 11; ++i) t.q11[(i * i) % 11] = true;
        return t;
    }();

    for (u64 x = d; x <= x_max; ++x) {
        if (sq_table.q64[static_cast<u64>(v) & 63] && sq_table.q63[t63.r] &&
            sq_table.q65[t65.r] && sq_table.q11[t11.r]) {
            u64 root = 0;
            if (is_perfect_square_u128(v, root))
                out.push_back(make_record(c, BigInt(x), BigInt(root), eps));
        }
        v += diff;
        diff += ddiff;
        ddiff += 6;
        t63.step();
        t65.step();
        t11.step();
    }
}

void scan_positive_mpz(const Curve& c, const BigInt& x_max, double eps,
                       std::vector<IntegralPointRecord>& out) {
    const BigInt d2 = c.d * c.d;
    for (BigInt x = c.d; x <= x_max; ++x) {
        BigInt v = x * x * x - d2 * x;
        BigInt root;
        if (is_perfect_square(v, root)) out.push_back(make_record(c, x, root, eps));
    }
}

}  // namespace

std::vector<IntegralPointRecord> enumerate_integral_points(const BigInt& d, const BigInt& x_max,
                                                           double eps) {
    Curve c(d);
    require_squarefree(c, "enumerate_integral_points");
    if (x_max < d) throw domain_error("enumerate_integral_points: x_max must be >= D");
    if (!(eps >= 0.0) || eps >= 1.0)
        throw domain_error("enumerate_integral_points: eps must lie in [0, 1)");
    std::vector<IntegralPointRecord> out;
    scan_negative(c, eps, out);
    // u128 holds x^3 for x up to ~4e12
    if (mpz_fits_ulong_p(x_max.get_mpz_t()) &&
        x_max < BigInt("4000000000000")) {
        scan_positive_u128(c, mpz_get_ui(d.get_mpz_t()), mpz_get_ui(x_max.get_mpz_t()), eps, out);
    } else {
        scan_positive_mpz(c, x_max, eps, out);
    }
    return out;
}

std::vector<IntegralPointRecord> enumerate_pell_coset(const BigInt& d, const BigInt& x_max) {
    Curve c(d);
    require_squarefree(c, "enumerate_pell_coset");
    // An integral point with the descent image of (D, 0) has x-class D, so
    // x = D t^2; membership still requires the full triple to match.
    const SquareClassTriple key = descent_triple(CurvePoint(c, BigRat(d), BigRat(0)));
    std::vector<IntegralPointRecord> out;
    for (BigInt t = 1; d * t * t <= x_max; ++t) {
        BigInt x = d * t * t;
        BigInt v = x * x * x - d * d * x;
        BigInt root;
        if (!is_perfect_square(v, root)) continue;
        IntegralPointRecord rec = make_record(c, x, root, kSizeClassEps);
        if (rec.coset_key == key) out.push_back(std::move(rec));
    }
    return out;
}

std::vector<CosetReport> classify_cosets(const std::vector<IntegralPointRecord>& records) {
    std::vector<CosetReport> out;
    if (records.empty()) return out;
    const BigInt& d = records.front().d;
    for (const auto& r : records)
        if (r.d != d) throw domain_error("classify_cosets: records from multiple curves");

    std::map<SquareClassTriple, CosetReport> groups;
    for (const auto& r : records) {
        auto& g = groups[r.coset_key];
        g.members.push_back(r);
        if (r.y > 0) {
            ++g.pair_count;
            if (r.x < 0) ++g.negative_pair_count;
        }
    }

    Curve c(d);
    const SquareClassTriple id{1, 1, 1};
    const auto zero_t = descent_triple(CurvePoint(c, BigRat(0), BigRat(0)));
    const auto negd_t = descent_triple(CurvePoint(c, BigRat(-d), BigRat(0)));
    const auto posd_t = descent_triple(CurvePoint(c, BigRat(d), BigRat(0)));

    for (auto& [key, g] : groups) {
        std::sort(g.members.begin(), g.members.end(),
                  [](const IntegralPointRecord& a, const IntegralPointRecord& b) {
                      return a.x < b.x;
                  });
        g.representative = *std::min_element(
            g.members.begin(), g.members.end(),
            [](const IntegralPointRecord& a, const IntegralPointRecord& b) {
                const int cmp = mpz_cmpabs(a.x.get_mpz_t(), b.x.get_mpz_t());
                if (cmp != 0) return cmp < 0;
                return a.x < b.x;
            });
        // a non-torsion coset anchored strictly inside (-D, 0) should hold at
        // most one pair; more is the exceptional pattern
        g.exceptional = g.representative.x > -d && g.representative.x < 0 && g.pair_count > 1;
        if (key == id) {
            g.exceeds_torsion_allowance = !g.members.empty();
        } else if (key == zero_t || key == negd_t) {
            g.exceeds_torsion_allowance = g.pair_count > 0;
        } else if (key == posd_t) {
            g.exceeds_torsion_allowance = g.pair_count > 1;
        }
        out.push_back(std::move(g));
    }

    std::sort(out.begin(), out.end(), [](const CosetReport& a, const CosetReport& b) {
        return a.representative.x < b.representative.x;
    });
    return out;
}

namespace {

// Squarefree flags for the block [lo, hi].
std::vector<bool> squarefree_block(u64 lo, u64 hi) {
    std::vector<bool> sf(hi - lo + 1, true);
    for (u64 p = 2; p * p <= hi; ++p) {
        const u64 p2 = p * p;
        for (u64 m = ((lo + p2 - 1) / p2) * p2; m <= hi; m += p2) sf[m - lo] = false;
    }
    if (lo == 0) sf[0] = false;
    return sf;
}

ScanRecord scan_one(u64 d, const ScanOptions& opt) {
    Curve c((BigInt(d)));
    std::vector<IntegralPointRecord> recs;
    scan_negative(c, kSizeClassEps, recs);
    if (!opt.negative_only) {
        const u64 x_max =
            static_cast<u64>(std::ceil(std::pow(static_cast<double>(d), opt.positive_exponent)));
        scan_positive_u128(c, d, std::max(x_max, d), kSizeClassEps, recs);
    }
    ScanRecord out;
    out.d = d;
    for (const auto& g : classify_cosets(recs)) {
        if (g.pair_count > 0) ++out.cosets;
        out.pairs += g.pair_count;
        if (g.exceptional) {
            out.exceptional = true;
            for (const auto& m : g.members)
                if (m.y > 0) out.exceptional_members.push_back(m);
        }
    }
    return out;
}

}  // namespace

ScanReport scan_family(const BigInt& d_from, const BigInt& d_to, const ScanOptions& opt) {
    ScanReport report;
    report.d_from = d_from;
    report.d_to = d_to;
    report.negative_only = opt.negative_only;
    if (d_from > d_to) return report;
    if (d_from < 1) throw domain_error("scan_family: D range must be positive");
    if (!mpz_fits_ulong_p(d_to.get_mpz_t()) || d_to >= BigInt(2500000))
        throw domain_error("scan_family: range too large for the fast scan path");

    const u64 lo = mpz_get_ui(d_from.get_mpz_t());
    const u64 hi = mpz_get_ui(d_to.get_mpz_t());
    const auto sf = squarefree_block(lo, hi);

    std::vector<u64> ds;
    for (u64 d = lo; d <= hi; ++d)
        if (sf[d - lo]) ds.push_back(d);

    unsigned jobs = opt.jobs > 0 ? static_cast<unsigned>(opt.jobs)
                                 : std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min<unsigned>(jobs, std::max<size_t>(ds.size(), 1));

    std::vector<ScanRecord> records(ds.size());
    if (jobs <= 1) {
        for (size_t i = 0; i < ds.size(); ++i) records[i] = scan_one(ds[i], opt);
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&] {
            while (true) {
                const size_t i = next.fetch_add(1);
                if (i >= ds.size()) break;
                records[i] = scan_one(ds[i], opt);
            }
        };
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    report.per_d = std::move(records);
    for (const auto& r : report.per_d)
        if (r.exceptional) report.exceptional_ds.push_back(r.d);
    return report;
}

CosetCountBound coset_count_bound(int rank) {
    if (rank < 0) throw domain_error("coset_count_bound: rank must be >= 0");
    const double r = rank;
    const double per = 30.0 + std::exp((r + 19.0 * std::cbrt(r)) * std::log(1.89));
    return {per, std::exp2(2.0 + r) * per};
}

}  // namespace twistkit
