// Acceptance suite: every identity the library is contracted to verify, one
// line per criterion, exact equality everywhere, each timed against its
// budget.  Exit status is the number of failed criteria.
#include "ice/verifier.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace ice;

namespace {

struct Criterion {
    int id;
    std::string title;
    double budget_seconds; // 0 = untimed
    std::function<bool(std::string&)> run;
};

bool all_reports_pass(const std::vector<CheckReport>& reports, std::string& detail)
{
    for (const auto& r : reports)
        if (!r.pass) {
            detail = r.check_name + " " + r.params.dump() +
                     (r.witness ? " witness=" + r.witness->dump() : "");
            return false;
        }
    return true;
}

} // namespace

int main()
{
    std::vector<Criterion> criteria;

    criteria.push_back({1, "Yang-Baxter equation, 64 external cases, symbolic", 1.0,
                        [](std::string& d) {
                            return all_reports_pass(
                                {check_yang_baxter(CoeffMode::GenericA, Strategy::Symbolic)}, d);
                        }});

    criteria.push_back({2, "Laurent structure of Z, n = 1..5", 60.0, [](std::string& d) {
                            std::vector<CheckReport> rs;
                            for (int n = 1; n <= 4; ++n)
                                rs.push_back(check_half_width(n, CoeffMode::GenericA));
                            rs.push_back(check_half_width(5, CoeffMode::Omega6));
                            return all_reports_pass(rs, d);
                        }});

    criteria.push_back({3, "partial symmetry of Z, n = 2, 3, generic a", 10.0,
                        [](std::string& d) {
                            return all_reports_pass(
                                {check_partial_symmetry(2), check_partial_symmetry(3)}, d);
                        }});

    criteria.push_back({4, "specialization recursion, n = 2, 3, 4", 60.0, [](std::string& d) {
                            std::vector<CheckReport> rs;
                            for (int n = 2; n <= 4; ++n)
                                rs.push_back(check_specialization_dwbc(n));
                            return all_reports_pass(rs, d);
                        }});

    criteria.push_back({5, "full symmetry of Z at omega6, n <= 5", 300.0, [](std::string& d) {
                            std::vector<CheckReport> rs;
                            for (int n = 1; n <= 3; ++n)
                                rs.push_back(check_theorem_main(n, Strategy::Symbolic));
                            rs.push_back(check_theorem_main(4, Strategy::Random));
                            rs.push_back(check_theorem_main(5, Strategy::Random));
                            return all_reports_pass(rs, d);
                        }});

    criteria.push_back(
        {6, "counting consistency: states vs monotone-triangle oracle, weight collapse", 120.0,
         [](std::string& d) {
             const long long expect[] = {1, 2, 7, 42, 429, 7436};
             for (int n = 1; n <= 6; ++n) {
                 IceGraph g = build_dwbc(n, detail::x_vars(n), detail::y_vars(n),
                                         calibration().convention);
                 long long count = 0;
                 for_each_state(g, [&](const IceState&) { ++count; });
                 if (count != expect[n - 1] || Int(count) != asm_count_oracle(n)) {
                     d = "state count mismatch at n = " + std::to_string(n);
                     return false;
                 }
             }
             return all_reports_pass({check_homogeneous_counts()}, d);
         }});

    criteria.push_back({7, "half-turn Laurent structure (split half-widths and parities)", 60.0,
                        [](std::string& d) {
                            return all_reports_pass(
                                {check_half_width_ht(1), check_half_width_ht(2)}, d);
                        }});

    criteria.push_back({8, "loop and exchange identities, widths 1 and 2", 30.0,
                        [](std::string& d) {
                            return all_reports_pass({check_loop_identity(),
                                                     check_exchange_loop(1),
                                                     check_exchange_loop(2)},
                                                    d);
                        }});

    criteria.push_back({9, "pseudo-symmetry, orders 2 and 4, both pairings", 60.0,
                        [](std::string& d) {
                            return all_reports_pass({check_pseudo_sym(1), check_pseudo_sym(2)},
                                                    d);
                        }});

    criteria.push_back({10, "half-turn specializations, all four equations, N = 1, 2", 120.0,
                        [](std::string& d) {
                            return all_reports_pass(
                                {check_specialization_ht(1), check_specialization_ht(2)}, d);
                        }});

    criteria.push_back({11, "half-turn symmetry at omega6 (orders 3, 5 and 2, 4)", 300.0,
                        [](std::string& d) {
                            return all_reports_pass(
                                {check_theorem_ht(1, false, Strategy::Symbolic),
                                 check_theorem_ht(2, false, Strategy::Random),
                                 check_theorem_ht(1, true, Strategy::Symbolic),
                                 check_theorem_ht(2, true, Strategy::Random)},
                                d);
                        }});

    criteria.push_back({12, "calibration determinism: exactly one convention", 0.0,
                        [](std::string& d) {
                            auto r = check_calibration();
                            if (!r.pass) {
                                d = r.params.dump();
                                return false;
                            }
                            std::fprintf(stderr, "    pinned: %s\n", r.params.dump().c_str());
                            return true;
                        }});

    criteria.push_back({13, "oracle equivalence: transfer matrix vs enumeration, HT counts",
                        180.0, [](std::string& d) {
                            return all_reports_pass({check_oracle_equivalence()}, d);
                        }});

    int failures = 0;
    for (auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_budget = c.budget_seconds == 0.0 || secs < c.budget_seconds;
        bool pass = ok && in_budget;
        if (!pass)
            ++failures;
        if (c.budget_seconds > 0)
            std::printf("%s  criterion %2d: %s  [%.2fs < %.0fs]\n", pass ? "PASS" : "FAIL", c.id,
                        c.title.c_str(), secs, c.budget_seconds);
        else
            std::printf("%s  criterion %2d: %s  [%.2fs]\n", pass ? "PASS" : "FAIL", c.id,
                        c.title.c_str(), secs);
        if (!ok && !detail.empty())
            std::printf("      %s\n", detail.c_str());
        else if (ok && !in_budget)
            std::printf("      over budget\n");
        std::fflush(stdout);
    }
    if (failures == 0)
        std::printf("all %zu acceptance criteria pass\n", criteria.size());
    else
        std::printf("%d acceptance criteria FAILED\n", failures);
    return failures;
}
