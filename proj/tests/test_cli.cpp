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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "cli_app.hpp"

using namespace elimcert;
namespace cli = elimcert::cli;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
    nlohmann::json json() const { return nlohmann::json::parse(out); }
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name, const std::string& content)
        : path(std::string("/tmp/elimcert_test_") + name) {
        std::ofstream f(path);
        f << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

const std::string kConicsFile = "# two conics\nfield: q\nx1^2+x2^2-1\nx1^2-x2\n";

} // namespace

TEST_CASE("dim command") {
    auto r = run({"dim", "--system", "x1", "--nvars", "2", "--json"});
    CHECK(r.code == 0);
    auto j = r.json();
    CHECK(j["q"] == 1);
    CHECK(j["n"] == 2);
    CHECK(j["schemaVersion"] == 1);

    // without the override the ring is univariate
    auto r1 = run({"dim", "--system", "x1", "--json"});
    CHECK(r1.json()["q"] == 0);

    // vars header works like the flag
    TempFile sys("vars.txt", "vars: 2\nx1\n");
    auto r2 = run({"dim", sys.path, "--json"});
    CHECK(r2.json()["q"] == 1);
}

TEST_CASE("eliminate on the sharp conic pair") {
    TempFile sys("conics.txt", kConicsFile);
    auto r = run({"eliminate", sys.path, "--field", "q", "--seed", "0", "--json"});
    REQUIRE(r.code == 0);
    auto j = r.json();
    CHECK(j["degPhi"] == 4);
    CHECK(j["bound"] == 4);
    CHECK(j["verified"] == true);
    CHECK(j["q"] == 0);
    CHECK(j["mode"] == "generic");
    CHECK(j["phi"].is_string());
    CHECK(j["cofactors"].size() == 2);
    CHECK(j["items"].size() == 5);
    CHECK(j.contains("timingsMs"));
    CHECK(j.contains("basisSizes"));
}

TEST_CASE("text and JSON outputs agree on the numbers") {
    TempFile sys("conics2.txt", kConicsFile);
    auto jt = run({"eliminate", sys.path, "--seed", "3", "--json"});
    auto tt = run({"eliminate", sys.path, "--seed", "3"});
    REQUIRE(jt.code == 0);
    REQUIRE(tt.code == 0);
    auto j = jt.json();
    auto expect = [&](const std::string& key, const std::string& value) {
        CHECK(tt.out.find(key + ": " + value) != std::string::npos);
    };
    expect("bound", std::to_string(j["bound"].get<long>()));
    expect("degPhi", std::to_string(j["degPhi"].get<long>()));
    expect("q", std::to_string(j["q"].get<int>()));
    expect("seed", std::to_string(j["seed"].get<std::uint64_t>()));
    expect("maxCofactorProductDegree", std::to_string(j["maxCofactorProductDegree"].get<long>()));
    expect("phi", j["phi"].get<std::string>());
}

TEST_CASE("certificate round trip through certify-check") {
    TempFile sys("conics3.txt", kConicsFile);
    for (const std::string mode : {"generic", "original"}) {
        auto r = run({"eliminate", sys.path, "--seed", "1", "--mode", mode, "--json"});
        REQUIRE(r.code == 0);
        TempFile cert("cert_" + mode + ".json", r.out);
        auto chk = run({"certify-check", sys.path, "--cert", cert.path, "--json"});
        CHECK(chk.code == 0);
        auto j = chk.json();
        CHECK(j["verified"] == true);
        for (const auto& item : j["items"])
            CHECK(item["pass"] == true);
    }
}

TEST_CASE("a tampered certificate fails with the failing items listed") {
    TempFile sys("conics4.txt", kConicsFile);
    auto r = run({"eliminate", sys.path, "--seed", "1", "--json"});
    REQUIRE(r.code == 0);
    auto j = r.json();
    const std::string phi = j["phi"].get<std::string>();
    j["phi"] = phi + " + 1";
    TempFile cert("tampered.json", j.dump());
    auto chk = run({"certify-check", sys.path, "--cert", cert.path, "--json"});
    CHECK(chk.code == 1);
    auto out = chk.json();
    CHECK(out["verified"] == false);
    bool identity_failed = false;
    for (const auto& item : out["items"])
        if (item["name"] == "membership_identity" && item["pass"] == false)
            identity_failed = true;
    CHECK(identity_failed);
}

TEST_CASE("exit statuses") {
    SUBCASE("parse errors exit 2 and report a position") {
        TempFile sys("bad.txt", "x1 +\n");
        auto r = run({"dim", sys.path});
        CHECK(r.code == 2);
        CHECK(r.err.find("line 1") != std::string::npos);
    }
    SUBCASE("unknown flags exit 2") {
        CHECK(run({"eliminate", "--frobnicate"}).code == 2);
    }
    SUBCASE("budget exhaustion exits 3") {
        TempFile sys("heavy.txt", "x1^2+x2^2+x3^2-1\nx1*x2*x3-1\nx1^3-x2\n");
        auto r = run({"eliminate", sys.path, "--budget", "16"});
        CHECK(r.code == 3);
    }
    SUBCASE("empty variety without the flag exits 2, with the flag verifies") {
        TempFile sys("empty.txt", "x1\nx1-1\n");
        CHECK(run({"eliminate", sys.path}).code == 2);
        auto r = run({"eliminate", sys.path, "--allow-empty-variety", "--json"});
        CHECK(r.code == 0);
        auto j = r.json();
        CHECK(j["q"] == -1);
        CHECK(j["verified"] == true);
    }
    SUBCASE("missing input exits 2") {
        CHECK(run({"dim"}).code == 2);
    }
}

TEST_CASE("field selection") {
    SUBCASE("fp header") {
        TempFile sys("fp.txt", "field: fp 1048583\nx1^2+x2^2-1\nx1^2-x2\n");
        auto r = run({"eliminate", sys.path, "--json"});
        REQUIRE(r.code == 0);
        auto j = r.json();
        CHECK(j["field"]["kind"] == "fp");
        CHECK(j["field"]["modulus"] == 1048583);
        CHECK(j["degPhi"] == 4);
    }
    SUBCASE("flag overrides header") {
        TempFile sys("fp2.txt", "field: fp 1048583\nx1^2-x2\nx2^2-1\n");
        auto r = run({"eliminate", sys.path, "--field", "q", "--json"});
        REQUIRE(r.code == 0);
        CHECK(r.json()["field"]["kind"] == "q");
    }
    SUBCASE("bad modulus is an input error") {
        CHECK(run({"dim", "--system", "x1", "--field", "fp:1048584"}).code == 2);
    }
}

TEST_CASE("same seed gives bit-identical JSON apart from timings") {
    TempFile sys("det.txt", kConicsFile);
    for (const std::string mode : {"generic", "original"}) {
        auto a = run({"eliminate", sys.path, "--seed", "5", "--mode", mode, "--json"});
        auto b = run({"eliminate", sys.path, "--seed", "5", "--mode", mode, "--json"});
        auto ja = a.json();
        auto jb = b.json();
        ja.erase("timingsMs");
        jb.erase("timingsMs");
        CHECK(ja.dump() == jb.dump());
    }
}

TEST_CASE("perron command") {
    auto r = run({"perron", "--system", "x1^2; x1^3", "--json"});
    REQUIRE(r.code == 0);
    auto j = r.json();
    CHECK(j["bound"] == 6);
    CHECK(j["weightedDegree"] == 6);
    CHECK(j["verified"] == true);
    CHECK(j["relation"].get<std::string>().find("x1^3") != std::string::npos);

    CHECK(run({"perron", "--system", "x1; x1; x1"}).code == 2); // collapsing map
}

TEST_CASE("noether command") {
    auto r = run({"noether", "--system", "x2-x1^2; x3-x1^3", "--json"});
    REQUIRE(r.code == 0);
    auto j = r.json();
    CHECK(j["q"] == 1);
    CHECK(j["noether"] == true);

    auto r2 = run({"noether", "--system", "x1*x2-1", "--json"});
    CHECK(r2.json()["noether"] == false);
}

TEST_CASE("bound-only mode") {
    TempFile sys("bonly.txt", kConicsFile);
    auto r = run({"eliminate", sys.path, "--bound-only", "--json"});
    REQUIRE(r.code == 0);
    auto j = r.json();
    CHECK(j["bound"] == 4);
    CHECK(j["boundOnly"] == true);
    CHECK_FALSE(j.contains("phi"));
}
