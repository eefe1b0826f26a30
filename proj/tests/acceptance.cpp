// Acceptance suite: one pass/fail line per criterion. Exit code is the
// number of failed criteria. `--slow` runs only the Monte Carlo check.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "meixner/verify.hpp"

using namespace meixner;

namespace {

struct Criterion {
    std::string name;
    bool pass;
    std::string detail;
    double seconds;
};

template <typename F>
Criterion timed(const std::string& name, F&& body) {
    auto start = std::chrono::steady_clock::now();
    auto [pass, detail] = body();
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return {name, pass, detail, secs};
}

std::pair<bool, std::string> from_row(const ReportRow& r) {
    return {r.pass, r.actual};
}

std::pair<bool, std::string> from_rows(const std::vector<ReportRow>& rows) {
    bool pass = true;
    std::string detail;
    for (const auto& r : rows) {
        pass = pass && r.pass;
        if (!detail.empty()) detail += "; ";
        detail += r.id + ": " + r.actual;
    }
    return {pass, detail};
}

}  // namespace

int main(int argc, char** argv) {
    bool slow_only = (argc > 1 && std::string(argv[1]) == "--slow");
    std::vector<Criterion> results;
    std::uint64_t seed = 20240801;

    if (slow_only) {
        results.push_back(timed("criterion-11 monte-carlo-transform-S (optional)", [&] {
            return from_row(check_monte_carlo(seed));
        }));
    } else {
        {
            std::mt19937_64 rng(seed);
            results.push_back(timed("criterion-01 exact-normal-ordering", [&] {
                return from_row(check_normal_order_closed_form(rng));
            }));
        }
        {
            std::mt19937_64 rng(seed + 1);
            results.push_back(timed("criterion-02 vn-u-relation", [&] {
                return from_row(check_vn_u_relation(rng));
            }));
        }
        results.push_back(timed("criterion-03 orthogonality", [&] {
            return from_row(check_orthogonality());
        }));
        results.push_back(timed("criterion-04 moment-oracle", [&] {
            return from_row(check_moment_oracle());
        }));
        results.push_back(timed("criterion-05 fock-measure", [&] {
            return from_rows({check_fock_moments(), check_fock_density_dual_path()});
        }));
        results.push_back(timed("criterion-06 mellin-convolution", [&] {
            return from_row(check_mellin());
        }));
        {
            std::mt19937_64 rng(seed + 2);
            results.push_back(timed("criterion-07 coherent-dual-path", [&] {
                return from_rows({check_coherent_dual_path(), check_annihilator_eigen(rng)});
            }));
        }
        {
            std::mt19937_64 rng(seed + 3);
            results.push_back(timed("criterion-08 transform-coherence", [&] {
                return from_rows({check_composition(rng), check_curly_s_integral(),
                                  check_rho_vs_transform_s()});
            }));
        }
        {
            std::mt19937_64 rng(seed + 4);
            results.push_back(timed("criterion-09 v-integral-formulas", [&] {
                return from_row(check_v_integral(rng));
            }));
        }
        {
            std::mt19937_64 rng(seed + 5);
            results.push_back(timed("criterion-10 expansion-closed-forms", [&] {
                return from_rows({check_expansion_closed_forms(), check_conversion_vs_solve(rng)});
            }));
        }
    }

    int failed = 0;
    for (const auto& c : results) {
        failed += c.pass ? 0 : 1;
        std::printf("%s %s (%.2f s): %s\n", c.pass ? "PASS" : "FAIL", c.name.c_str(), c.seconds,
                    c.detail.c_str());
    }
    std::printf("%zu/%zu criteria passed\n", results.size() - failed, results.size());
    return failed;
}
