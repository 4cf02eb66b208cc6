// Acceptance gate: one line per criterion, pass or fail, nonzero exit on any
// failure.  Each criterion is checked exactly (GMP integers/rationals), with
// its runtime budget enforced.
#include <chrono>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "seaweed/pipeline.hpp"
#include "seaweed/sweep.hpp"

using namespace seaweed;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int k, const std::string& name, bool ok, const std::string& detail) {
    std::cout << "criterion " << k << " (" << name << "): " << (ok ? "pass" : "FAIL");
    if (!detail.empty()) std::cout << "  [" << detail << "]";
    std::cout << "\n";
    if (!ok) ++failures;
}

double secs(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

RunConfig golden_config() {
    RunConfig cfg;
    cfg.n = 8;
    cfg.jplus = {{1, 8}};
    cfg.jminus = {{1, 2}, {3, 6}, {7, 8}};
    cfg.explicit_marks = {{true, 2, 7}, {true, 4, 5}, {false, 3, 6}, {false, 7, 8}};
    return cfg;
}

RunConfig degenerate_config() {
    RunConfig cfg;
    cfg.n = 4;
    cfg.jplus = {{1, 2}, {3, 4}};
    cfg.jminus = {{1, 1}, {2, 3}, {4, 4}};
    cfg.fixed_chain = {3, 1, 4, 2};
    return cfg;
}

// restriction to q_Lambda*: drop the K entries
IMat restrict_matrix(const IMat& m, const DoublePartition& dp) {
    int n = dp.n;
    IMat out(n, std::vector<Int>(n, 0));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j || m[i - 1][j - 1] == 0) continue;
            if (classify(dp, Root(i, j)).inR) out[i - 1][j - 1] = m[i - 1][j - 1];
        }
    return out;
}

void criterion1() {
    auto t0 = Clock::now();
    std::string detail;
    bool ok = true;
    try {
        RunResult res = run(golden_config());
        std::vector<Root> S{Root(6, 4), Root(2, 6), Root(2, 1), Root(1, 8), Root(5, 3),
                            Root(3, 7)};
        std::sort(S.begin(), S.end());
        if (res.pair.S != S) { ok = false; detail = "eta mismatch"; }
        std::vector<Root> piStar{Root(5, 3), Root(3, 7), Root(7, 2), Root(2, 6),
                                 Root(6, 4), Root(4, 1), Root(1, 8)};
        if (res.assembly.piStar != piStar) { ok = false; detail += " Pi* mismatch"; }
        std::set<Root> yWant(S.begin(), S.end());
        yWant.insert(Root(4, 1));
        yWant.insert(Root(7, 2));
        if (std::set<Root>(res.liftData.yRoots.begin(), res.liftData.yRoots.end()) != yWant) {
            ok = false; detail += " y mismatch";
        }
        if (!regular_nilpotent(res.liftData.y)) { ok = false; detail += " not regular"; }
        if (res.liftData.eta != roots_to_matrix(res.pair.S, 8)) {
            ok = false; detail += " restriction mismatch";
        }
        std::vector<int> w{5, 3, 7, 2, 6, 4, 1, 8};
        if (res.assembly.w.perm != w) { ok = false; detail += " w mismatch"; }
        if (word_to_permutation({1, 2, 4, 6, 1, 3, 5, 2, 4, 6, 1, 3, 5, 6}, 8) != w) {
            ok = false; detail += " documented word mismatch";
        }
    } catch (const std::exception& e) {
        ok = false; detail = e.what();
    }
    double dt = secs(t0);
    if (dt >= 1.0) { ok = false; detail += " too slow"; }
    report(1, "golden sl_8 instance", ok, detail.empty() ? "" : detail);
}

void criterion2() {
    auto t0 = Clock::now();
    std::string detail;
    bool ok = true;
    try {
        RunResult res = run(degenerate_config());
        if (!res.pair.S.empty()) { ok = false; detail = "S not empty"; }
        std::vector<Root> piStar{Root(3, 1), Root(1, 4), Root(4, 2)};
        if (res.assembly.piStar != piStar) { ok = false; detail += " Pi* mismatch"; }
        for (const auto& g : res.assembly.piStar)
            if (!classify(res.dp, g).inK) { ok = false; detail += " root outside K"; }
        if (res.assembly.w.perm != std::vector<int>{3, 1, 4, 2}) {
            ok = false; detail += " w mismatch";
        }
        if (word_to_permutation({2, 3, 1}, 4) != res.assembly.w.perm) {
            ok = false; detail += " documented word mismatch";
        }
    } catch (const std::exception& e) {
        ok = false; detail = e.what();
    }
    double dt = secs(t0);
    if (dt >= 1.0) { ok = false; detail += " too slow"; }
    report(2, "commutative truncation sl_4", ok, detail.empty() ? "" : detail);
}

std::vector<SweepRow> sweep_rows;  // shared by criteria 3 and 4
double sweep_seconds = 0;

void criterion3() {
    auto t0 = Clock::now();
    sweep_rows = sweep(8, 20250825, 5);
    sweep_seconds = secs(t0);
    int bad = 0;
    std::string first;
    for (const auto& r : sweep_rows)
        if (!r.ok) {
            if (bad == 0) first = r.jplus + "/" + r.jminus + ": " + r.error;
            ++bad;
        }
    long expected = 0;
    for (int n = 2; n <= 8; ++n) {
        long c = 1;
        for (int k = 1; k < n; ++k) c *= 3;
        expected += c - 1;
    }
    bool ok = bad == 0 && static_cast<long>(sweep_rows.size()) == expected &&
              sweep_seconds < 300.0;
    std::string detail = std::to_string(sweep_rows.size()) + " instances, " +
                         std::to_string(bad) + " falsified, " +
                         std::to_string(sweep_seconds) + " s";
    if (!first.empty()) detail += "; first: " + first;
    report(3, "exhaustive sweep n=2..8", ok, detail);
}

void criterion4() {
    int certified = 0, total = 0;
    for (const auto& r : sweep_rows) {
        if (!r.ok) continue;
        ++total;
        if (r.certified) ++certified;
    }
    // run() throws a falsifier whenever a certified instance has a stabilizer
    // dimension differing from the truncated index, so criterion 3's clean rows
    // already carry the regularity check; here the rate is enforced
    bool ok = total > 0 && certified * 20 >= total * 19 && sweep_seconds < 300.0;
    std::string detail = std::to_string(certified) + "/" + std::to_string(total) +
                         " certified (rest indeterminate)";
    report(4, "truncation and regularity certificates", ok, detail);
}

void criterion5() {
    auto t0 = Clock::now();
    std::string detail;
    bool ok = true;
    try {
        for (int n = 2; n <= 12 && ok; ++n)
            for (int p = 1; p < n && ok; ++p) {
                if (std::gcd(p, n) != 1) continue;
                DoublePartition dp = index_one_partition(n, p);
                if (halfint_meanders(build_extended(dp)).size() != 1) {
                    ok = false;
                    detail = "meander count != 1 at n=" + std::to_string(n) +
                             ",p=" + std::to_string(p);
                    break;
                }
                IndexOneData d = index_one(n, p);
                IMat etaM = roots_to_matrix(d.S, n);
                if (d.regular_for_all_shifts) {
                    for (const Int& c : {Int(0), Int(1), Int(-1), Int(2)}) {
                        IMat yc = shifted_matrix(d, c);
                        IMat want = etaM;
                        want[d.exceptional.i - 1][d.exceptional.j - 1] += c;
                        if (!regular_nilpotent(yc) || restrict_matrix(yc, dp) != want) {
                            ok = false;
                            detail = "family check failed at n=" + std::to_string(n) +
                                     ",p=" + std::to_string(p);
                            break;
                        }
                    }
                } else {
                    // aligned edge (p = 1 or n - 1): the family without the
                    // artificial arc is regular iff c != 0
                    for (const Int& c : {Int(0), Int(1), Int(-1), Int(2)}) {
                        IMat yc = etaM;
                        yc[d.exceptional.i - 1][d.exceptional.j - 1] += c;
                        if (regular_nilpotent(yc) != (c != 0)) {
                            ok = false;
                            detail = "aligned family shape wrong at n=" + std::to_string(n) +
                                     ",p=" + std::to_string(p);
                            break;
                        }
                    }
                    // plus the isolated artificial lift over eta itself
                    if (ok && (!regular_nilpotent(d.y) || restrict_matrix(d.y, dp) != etaM)) {
                        ok = false;
                        detail = "isolated lift failed at n=" + std::to_string(n);
                    }
                }
            }
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    double dt = secs(t0);
    if (dt >= 10.0) { ok = false; detail += " too slow"; }
    report(5, "index-one suite n<=12", ok, detail);
}

void criterion6() {
    auto t0 = Clock::now();
    std::string detail;
    bool ok = true;
    std::mt19937_64 rng(6181);
    std::uniform_int_distribution<long> coeff(-50, 50);
    try {
        for (int n = 2; n <= 8 && ok; ++n)
            for (int p = 1; p < n && ok; ++p) {
                if (std::gcd(p, n) != 1) continue;
                DoublePartition dp = index_one_partition(n, p);
                IndexOneData d = index_one(n, p);
                IMat etaM = roots_to_matrix(d.S, n);
                for (int trial = 0; trial < 20; ++trial) {
                    Int c = coeff(rng);
                    IMat point = etaM;  // the section point eta + c x_exc
                    point[d.exceptional.i - 1][d.exceptional.j - 1] += c;
                    IMat lift;
                    if (d.regular_for_all_shifts) lift = shifted_matrix(d, c);
                    else if (c != 0) lift = point;  // the family lift is the point itself
                    else lift = d.y;                // isolated artificial lift
                    if (!regular_nilpotent(lift) || restrict_matrix(lift, dp) != point) {
                        ok = false;
                        detail = "lift failed at n=" + std::to_string(n) + ",p=" +
                                 std::to_string(p) + ",c=" + c.get_str();
                        break;
                    }
                }
            }
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    double dt = secs(t0);
    if (dt >= 10.0) { ok = false; detail += " too slow"; }
    report(6, "random section points n<=8", ok, detail);
}

// replay the verification on mutated data; true iff some falsifier fires
bool detects_sign_mutation(const RunConfig& cfg, std::mt19937_64& rng) {
    RunResult res = run(cfg);
    if (res.edges.empty()) return true;  // nothing to mutate on this path
    std::uniform_int_distribution<std::size_t> pickE(0, res.edges.size() - 1);
    std::size_t k = pickE(rng);
    Edge E = res.edges[k];
    std::uniform_int_distribution<std::size_t> pickT(0, E.eps.size() - 1);
    E.eps[pickT(rng)] *= -1;
    std::vector<Edge> edges = res.edges;
    edges[k] = E;
    try {
        falsify_interval_laws(res.dp, edges, res.fullyFixed);
        adapted_pair(edges, res.fullyFixed, res.dp);
        StraightenPolicy spol;
        spol.mark_below_at = cfg.mark_below_at;
        std::vector<EdgeStar> stars;
        for (const auto& e : edges) {
            TurningData td = analyze_edge(e, res.dp, spol);
            StraightenedEdge se = straighten(e, td, res.dp);
            EdgeValue ev = edge_value(se, e, td, res.dp);
            EdgeStar star;
            star.chain = se.chain;
            star.value = ev.value;
            for (int i = 1; i < e.e(); ++i) {
                star.sRoots.push_back(e.s_root(i));
                star.piStar.push_back(se.piStar[i]);
            }
            stars.push_back(std::move(star));
        }
        AssemblePolicy apol;
        apol.fixed_chain = cfg.fixed_chain;
        Assembly as = assemble(stars, res.fullyFixed, res.dp, apol);
        AdaptedPairData ap = adapted_pair(edges, res.fullyFixed, res.dp);
        lift(ap.S, as, res.dp);
    } catch (const falsifier&) {
        return true;
    }
    return false;
}

bool detects_added_mutation(const RunConfig& cfg, std::mt19937_64& rng) {
    RunResult res = run(cfg);
    if (res.assembly.added.empty()) return true;
    std::uniform_int_distribution<std::size_t> pickA(0, res.assembly.added.size() - 1);
    Root victim = res.assembly.added[pickA(rng)];
    std::uniform_int_distribution<int> pt(1, res.dp.n);
    Root corrupt = victim;
    while (corrupt == victim || corrupt == -victim) {
        int a = pt(rng), b = pt(rng);
        if (a == b) continue;
        corrupt = Root(a, b);
    }
    std::vector<Root> piStar = res.assembly.piStar;
    for (auto& g : piStar)
        if (g == victim) g = corrupt;
    try {
        for (const auto& g : piStar)
            if (g == corrupt && !classify(res.dp, g).inK)
                throw falsifier("joining root outside K");
        PointChain chain = simple_system_to_chain(piStar, res.dp.n);
        Assembly as;
        as.chain = chain;
        as.piStar = piStar;
        as.w = reduced_word(chain);
        lift(res.pair.S, as, res.dp);
    } catch (const falsifier&) {
        return true;
    } catch (const invalid_input&) {
        return true;  // the mutated set is no longer a simple system at all
    }
    return false;
}

void criterion7() {
    std::string detail;
    bool ok = true;
    std::mt19937_64 rng(7777);
    int detected = 0, total = 0;
    for (const RunConfig& cfg : {golden_config(), degenerate_config()}) {
        for (int m = 0; m < 10; ++m) {
            ++total;
            bool hit = (m % 2 == 0) ? detects_sign_mutation(cfg, rng)
                                    : detects_added_mutation(cfg, rng);
            if (hit) ++detected;
        }
    }
    ok = detected == total;
    detail = std::to_string(detected) + "/" + std::to_string(total) + " detected";
    report(7, "mutation falsification", ok, detail);
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    std::cout << (failures == 0 ? "all criteria pass" :
                  std::to_string(failures) + " criteria FAILED") << "\n";
    return failures == 0 ? 0 : 1;
}
