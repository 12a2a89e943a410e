/*
   Copyright 2026 The jetsplit authors

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

#include <cstdio>
#include <string>

#include <catch_amalgamated.hpp>
#include <json.hpp>

using json = nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(JETSPLIT_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

} // namespace

TEST_CASE("transition subcommand") {
    auto r = run_cli("transition --n 3 --k 1 --char 0 --side left");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("1*t^3") != std::string::npos);
    CHECK(r.out.find("3*t^2") != std::string::npos);
    CHECK(r.out.find("-1*t^1") != std::string::npos);

    auto j = run_cli("transition --n 3 --k 1 --char 0 --format json");
    CHECK(j.exit_code == 0);
    json parsed = json::parse(j.out);
    CHECK(parsed["rank"] == 2);
    CHECK(parsed["matrix"][0][0] == "1*t^3");
    CHECK(parsed["params"]["characteristic"] == 0);

    auto u = run_cli("transition --n 1 --k 2 --untwisted --char 0");
    CHECK(u.exit_code == 0);
    CHECK(u.out.find("1*t^-4") != std::string::npos);
}

TEST_CASE("split subcommand") {
    auto r = run_cli("split --n 4 --k 1 --char 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("O(4)+O(2)") != std::string::npos);

    auto j = run_cli("split --n 5 --k 2 --char 0 --format json");
    CHECK(j.exit_code == 0);
    json parsed = json::parse(j.out);
    CHECK(parsed["degrees"] == json::array({3, 3, 3}));
    CHECK(parsed["multiplicities"] == json::array({json::array({3, 3})}));
    CHECK(parsed["certificate_verified"] == true);
    CHECK(parsed["oracle_checked"] == true);
    CHECK(parsed["ms"].is_number());
}

TEST_CASE("solve subcommand") {
    auto r = run_cli("solve --n 2 --k 1 --r 1 --char 0 --format json");
    CHECK(r.exit_code == 0);
    json parsed = json::parse(r.out);
    CHECK(parsed["status"] == "unique");
    CHECK(parsed["x"] == json::array({"1", "2"}));
    CHECK(parsed["c_row"] == json::array({"1", "0"}));

    auto f = run_cli("solve --n 4 --k 1 --r 1 --char 2 --format json");
    CHECK(f.exit_code == 0);
    json pf = json::parse(f.out);
    CHECK(pf["status"] == "unique");
    CHECK(pf["x"] == json::array({"1", "0"}));
}

TEST_CASE("table subcommand") {
    auto r = run_cli("table --k 1 --n-min 2 --n-max 4 --chars 0 2 "
                     "--format json");
    CHECK(r.exit_code == 0);
    json parsed = json::parse(r.out);
    REQUIRE(parsed["cells"].size() == 6);
    // characteristic 2 at n = 4: left and right agree, both O(4)+O(2)
    bool found = false;
    for (const auto& cell : parsed["cells"]) {
        if (cell["n"] == 4 && cell["characteristic"] == 2) {
            found = true;
            CHECK(cell["left"] == "O(4)+O(2)");
            CHECK(cell["differ"] == false);
        }
        if (cell["n"] == 4 && cell["characteristic"] == 0) {
            CHECK(cell["left"] == "O(3)+O(3)");
            CHECK(cell["right"] == "O(4)+O(2)");
            CHECK(cell["differ"] == true);
        }
    }
    CHECK(found);
    // char 0 differs at n = 2, 3, 4; char 2 only at n = 3
    CHECK(parsed["left_right_differ"].size() == 4);
}

TEST_CASE("verify subcommand") {
    auto r = run_cli("verify --suite lemmas");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
    CHECK(r.out.find("all checks passed") != std::string::npos);

    auto t = run_cli("verify --suite transition");
    CHECK(t.exit_code == 0);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("split --n 4 --k 2 --char 2 --side right").exit_code == 2);
    CHECK(run_cli("transition --n 2 --k 5 --char 0").exit_code == 2);
    CHECK(run_cli("split --n 3 --k 1 --char 6").exit_code == 2);
    CHECK(run_cli("bogus-subcommand").exit_code == 2);
    CHECK(run_cli("split --n 3").exit_code == 2);
}
