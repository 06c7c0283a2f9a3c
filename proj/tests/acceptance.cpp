// Acceptance gate: one PASS/FAIL line per criterion, exit code = number of
// failed criteria. --max-n selects the catalog depth (default 13); the run
// with --max-n 14 additionally covers the n=14 halves of criteria 1 and 6.
#include <algorithm>
#include <array>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "spheretri/census.hpp"
#include "spheretri/cli.hpp"
#include "spheretri/connectivity.hpp"
#include "spheretri/generate.hpp"
#include "spheretri/planar_code.hpp"
#include "spheretri/verify.hpp"

using namespace spheretri;

namespace {

int failures = 0;

void criterion(int idx, const std::string& label, bool ok,
               const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << idx << ": "
              << label;
    if (!detail.empty()) std::cout << " [" << detail << "]";
    std::cout << std::endl;
    if (!ok) ++failures;
}

void guarded(int idx, const std::string& label,
             const std::function<std::pair<bool, std::string>()>& body) {
    try {
        const auto [ok, detail] = body();
        criterion(idx, label, ok, detail);
    } catch (const std::exception& e) {
        criterion(idx, label, false, std::string("exception: ") + e.what());
    }
}

} // namespace

int main(int argc, char** argv) {
    int max_n = 13;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--max-n") == 0 && i + 1 < argc)
            max_n = std::atoi(argv[++i]);
    if (max_n < 11 || max_n > 14) {
        std::cerr << "usage: acceptance [--max-n N] with 11 <= N <= 14\n";
        return 2;
    }

    GenLimits limits;
    limits.max_n = std::max(limits.max_n, max_n);
    std::cout << "building the catalog up to n=" << max_n << " ..."
              << std::endl;
    const Catalog cat = build_catalog(max_n, limits);

    guarded(1, "minimum 4-cycle counts match the established table", [&] {
        const VerificationReport r = verify_theorem1(cat, max_n);
        std::string detail = "4 <= n <= " + std::to_string(max_n);
        if (!r.pass) detail += "; " + r.note;
        return std::pair(r.pass, detail);
    });

    guarded(2, "catalog sizes and flip-closure cross-generation agree", [&] {
        bool ok = true;
        const std::array<std::size_t, 4> expected{1, 1, 2, 5};
        for (int n = 4; n <= 7; ++n)
            if (cat.at(n).size() != expected[static_cast<std::size_t>(n - 4)])
                ok = false;
        const VerificationReport r =
            verify_generation_oracle(cat, max_n, limits);
        return std::pair(ok && r.pass, r.pass ? "" : r.note);
    });

    guarded(3, "per-level minima and the non-minimal n=6 value", [&] {
        const std::map<int, std::int64_t> expected{
            {6, 15}, {7, 20}, {8, 23}, {9, 24}, {10, 26}, {11, 29}, {13, 34}};
        bool ok = true;
        std::string detail;
        for (const auto& [n, g] : expected) {
            if (n > max_n) continue;
            if (min_c4(cat, n).g_value != g) {
                ok = false;
                detail += "wrong minimum at n=" + std::to_string(n) + "; ";
            }
        }
        std::multiset<std::int64_t> six;
        for (const Triangulation& t : cat.at(6)) six.insert(count_4cycles(t));
        if (six != std::multiset<std::int64_t>{15, 16}) {
            ok = false;
            detail += "n=6 values are not {15, 16}; ";
        }
        return std::pair(ok, detail);
    });

    guarded(4, "degree lemmas hold on every class", [&] {
        bool ok = true;
        std::string detail;
        for (int which : {1, 2, 3}) {
            const VerificationReport r = verify_lemma(cat, which, max_n);
            if (!r.pass) {
                ok = false;
                detail += r.claim_id + " failed; ";
            }
        }
        return std::pair(ok, detail);
    });

    guarded(5, "degree-profile identities at n=9, 10, 11", [&] {
        bool ok = true;
        std::string detail;
        for (int n : {9, 10, 11}) {
            const VerificationReport r = verify_degree_identities(cat, n);
            if (!r.pass) {
                ok = false;
                detail += r.claim_id + " failed; ";
            }
        }
        return std::pair(ok, detail);
    });

    guarded(6, "5-connected classes appear exactly at n=12 and n=14", [&] {
        bool ok = true;
        std::string detail;
        for (int n = 5; n <= max_n; ++n) {
            std::vector<const Triangulation*> fives;
            for (const Triangulation& t : cat.at(n)) {
                if (t.min_degree() < 5) continue; // connectivity <= min degree
                if (vertex_connectivity(t) == 5) fives.push_back(&t);
            }
            const bool expect_some = n == 12 || n == 14;
            if (expect_some == fives.empty()) {
                ok = false;
                detail += "unexpected count at n=" + std::to_string(n) + "; ";
            }
            for (const Triangulation* t : fives) {
                const CycleCensus c = census(*t);
                if (c.c4 != 3 * n - 6 || c.c4_separating != 0) {
                    ok = false;
                    detail += "bad 5-connected census at n=" +
                              std::to_string(n) + "; ";
                }
            }
        }
        detail += max_n >= 14 ? "full range 5..14"
                              : "n=14 existence needs --max-n 14";
        return std::pair(ok, detail);
    });

    guarded(7, "cycle formulas agree with the subset-scan oracle", [&] {
        const VerificationReport r = verify_counting_oracle(cat, max_n);
        return std::pair(r.pass, r.note);
    });

    guarded(8, "4-cycle structure: diamonds, cuts, degree-3 incidence", [&] {
        bool ok = true;
        std::string detail;
        for (int n = 5; n <= max_n && ok; ++n) {
            for (const Triangulation& t : cat.at(n)) {
                const AdjacencyMasks masks(t);
                const auto cycles = four_cycles(t);
                std::vector<FourCycle> diamonds;
                diamonds.reserve(static_cast<std::size_t>(t.edge_count()));
                for (int u = 0; u < n; ++u)
                    for (int v : t.rotation(u))
                        if (u < v) diamonds.push_back(*edge_diamond(t, u, v));
                std::sort(diamonds.begin(), diamonds.end());
                if (std::adjacent_find(diamonds.begin(), diamonds.end()) !=
                    diamonds.end()) {
                    ok = false;
                    detail = "non-injective diamonds at n=" + std::to_string(n);
                    break;
                }
                if (static_cast<std::int64_t>(cycles.size()) < 3 * n - 6) {
                    ok = false;
                    detail = "c4 < 3n-6 at n=" + std::to_string(n);
                    break;
                }
                for (const FourCycle& c : cycles) {
                    if (std::binary_search(diamonds.begin(), diamonds.end(),
                                           c))
                        continue;
                    if (!is_vertex_cut(t, masks, c.vertices)) {
                        ok = false;
                        detail = "non-diamond non-separating 4-cycle at n=" +
                                 std::to_string(n);
                        break;
                    }
                }
                for (int v = 0; v < n && ok; ++v) {
                    if (t.degree(v) != 3) continue;
                    const auto through = std::count_if(
                        cycles.begin(), cycles.end(),
                        [v](const FourCycle& c) { return c.contains(v); });
                    if (through < 6) {
                        ok = false;
                        detail = "degree-3 vertex on < 6 cycles at n=" +
                                 std::to_string(n);
                    }
                }
                if (!ok) break;
            }
        }
        if (ok) detail = "every class, 5 <= n <= " + std::to_string(max_n);
        return std::pair(ok, detail);
    });

    guarded(9, "planar_code round trip and fixture conversion", [&] {
        bool ok = true;
        std::string detail;
        for (int n = 4; n <= std::min(10, max_n) && ok; ++n)
            for (const Triangulation& t : cat.at(n)) {
                const std::string rec = encode_planar_record(t);
                if (decode_planar_record(rec).rotation_lists() !=
                    t.rotation_lists()) {
                    ok = false;
                    detail = "record round trip failed at n=" +
                             std::to_string(n);
                    break;
                }
            }
        const auto& level10 = cat.at(std::min(10, max_n));
        const std::string file = encode_planar_code(level10, true);
        const auto back = decode_planar_code(file);
        if (back.size() != level10.size() ||
            encode_planar_code(back, true) != file) {
            ok = false;
            detail += "whole-file round trip failed; ";
        }
        std::ostringstream out, err;
        const int code = run_cli({"convert", "-i",
                                  std::string(SPHERETRI_FIXTURE_DIR) +
                                      "/n7_five_classes.plc",
                                  "--to", "planar_code"},
                                 out, err);
        if (code != 0) {
            ok = false;
            detail += "convert exited with " + std::to_string(code) + "; ";
        } else {
            std::set<CanonicalCode> got;
            for (const Triangulation& g : decode_planar_code(out.str()))
                got.insert(canonical_code(g));
            std::set<CanonicalCode> want;
            for (const Triangulation& t : cat.at(7))
                want.insert(CanonicalCode{encode_planar_record(t)});
            if (got != want || got.size() != 5) {
                ok = false;
                detail += "fixture classes do not match the n=7 level; ";
            }
        }
        return std::pair(ok, detail);
    });

    guarded(10, "JSON output is byte-identical across worker counts", [&] {
        const auto run_json = [](const char* threads) {
            std::ostringstream out, err;
            const int code = run_cli(
                {"--threads", threads, "min-c4", "-n", "11", "--json"}, out,
                err);
            return std::pair(code, out.str());
        };
        const auto [code1, text1] = run_json("1");
        const auto [code2, text2] = run_json("4");
        const bool ok =
            code1 == 0 && code2 == 0 && !text1.empty() && text1 == text2;
        return std::pair(ok, std::string("min-c4 -n 11 --json, threads 1 vs 4"));
    });

    std::cout << (10 - failures) << " of 10 criteria passed" << std::endl;
    return failures;
}
