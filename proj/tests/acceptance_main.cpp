/*
   Copyright 2026 The elimcert authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Acceptance suite: runs the documented end-to-end criteria and prints one
// PASS/FAIL line per criterion. Exit status 0 iff everything passed.

#include <chrono>
#include <iostream>
#include <sstream>
#include <vector>

#include "cli_app.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace elimcert;
using testutil::qp;

namespace {

struct Criterion {
    int id;
    std::string label;
    bool pass = true;
    std::ostringstream notes;
    double ms = 0.0;
};

void expect(Criterion& c, bool ok, const std::string& what) {
    if (!ok) {
        c.pass = false;
        c.notes << "    failed: " << what << "\n";
    }
}

struct SuiteInstance {
    std::vector<MPoly<Rational>> gens;
    int q = 0;
    std::uint64_t seed = 0;
};

struct SuiteRun {
    SuiteInstance instance;
    PipelineMode mode;
    Certificate<Rational> cert;
    VerifyReport report;
};

// Deterministic random systems with n <= 4, s <= 4, deg <= 3 over Q and
// nonempty varieties. The shape schedule intentionally hits the boundary
// combinations (n = 4, s = 4, d = 3).
std::vector<SuiteInstance> make_suite(std::size_t count) {
    const std::vector<std::array<int, 3>> shapes = {
        {2, 2, 2}, {2, 2, 3}, {3, 2, 2}, {3, 3, 2}, {2, 3, 3}, {3, 2, 3},
        {4, 2, 2}, {3, 3, 3}, {4, 3, 2}, {2, 4, 3}, {4, 4, 2}, {4, 2, 3},
        {4, 4, 3}, {3, 4, 3},
    };
    std::mt19937_64 rng(0xE11A);
    const FieldDesc q = FieldDesc::rationals();
    std::vector<SuiteInstance> suite;
    std::size_t shape_idx = 0;
    while (suite.size() < count) {
        const auto [n, s, d] = shapes[shape_idx % shapes.size()];
        ++shape_idx;
        SuiteInstance inst;
        for (int i = 0; i < s; ++i)
            inst.gens.push_back(
                testutil::random_poly<Rational>(rng, q, n, d, 3, TermOrder::grevlex(), /*allow_constant=*/false));
        try {
            const int dim_q = dimension(inst.gens).q;
            if (dim_q < 0)
                continue; // empty variety: outside this suite
            inst.q = dim_q;
        } catch (const Error&) {
            continue;
        }
        inst.seed = 1000 + suite.size();
        suite.push_back(std::move(inst));
    }
    return suite;
}

double run_criterion(Criterion& c, const std::function<void(Criterion&)>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.pass = false;
        c.notes << "    exception: " << e.what() << "\n";
    }
    c.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return c.ms;
}

} // namespace

int main() {
    std::vector<Criterion> criteria;
    std::vector<SuiteRun> suite_runs; // shared by criteria 3, 4 and 6

    // 1. sharpness: two generic conics attain deg phi = 4 = d_s * d_1
    {
        Criterion c{1, "sharpness: two conics reach deg phi = 4 = bound, certificate verifies, < 1 s"};
        run_criterion(c, [&](Criterion& cr) {
            const std::vector<MPoly<Rational>> conics{qp("x1^2+x2^2-1", 2), qp("x1^2-x2", 2)};
            auto cert = eliminate_with_bound(conics, 0, PipelineMode::GenericCoords);
            expect(cr, cert.bound == 4, "bound is d_s*d_1 = 4");
            expect(cr, *cert.phi.total_degree() == 4, "deg phi = 4 exactly");
            auto rep = verify_certificate(cert, conics);
            expect(cr, rep.verdict, "certificate verifies");
            // the minimal degree in the elimination ideal is itself 4, so the
            // bound is attained, not just met
            auto minelt = min_degree_element(elimination_ideal(conics, 1));
            expect(cr, minelt && minelt->second == 4, "elimination ideal has minimal degree 4");
        });
        expect(c, c.ms < 1000.0, "runtime under 1 s");
        criteria.push_back(std::move(c));
    }

    // 2. twisted cubic: bound 6 honored, oracle minimum 2
    {
        Criterion c{2, "twisted cubic: phi in k[x1,x2], deg phi <= 6 = 2*3, oracle min degree 2, < 1 s"};
        run_criterion(c, [&](Criterion& cr) {
            const std::vector<MPoly<Rational>> cubic{qp("x2-x1^2", 3), qp("x3-x1^3", 3)};
            auto cert = eliminate_with_bound(cubic, 0, PipelineMode::GenericCoords);
            expect(cr, cert.bound == 6, "bound is 2*3 = 6");
            expect(cr, cert.phi.supported_within(2), "phi lives in k[x1,x2]");
            expect(cr, *cert.phi.total_degree() <= 6, "deg phi <= 6");
            expect(cr, verify_certificate(cert, cubic).verdict, "membership identity exact");
            // oracle: lex basis of the ideal, minimal degree among the
            // elements free of x3
            auto lexgb = buchberger(cubic, TermOrder::lex(), false);
            long mindeg = -1;
            for (const auto& b : lexgb.basis)
                if (b.supported_within(2) && (mindeg_check: true))
                    ;
            (void)mindeg;
        });
        criteria.push_back(std::move(c));
    }

    std::cout << "placeholder\n";
    return 1;
}
