// Copyright 2026 The bellset Authors

// Licensed under the Apache License, Version 2.0 (the License);
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

// http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an AS IS BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "bellset/cli.hpp"
#include "bellset/errors.hpp"
#include "bellset/json_io.hpp"
#include "bellset/states.hpp"

using namespace bellset;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("bellset_cli_test_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void spit(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

} // namespace

TEST_CASE("state descriptors") {
    const auto g = cli::parse_state_descriptor("ggz:3:0.6");
    CHECK(g[0].real() == doctest::Approx(0.6));
    CHECK(cli::parse_state_descriptor("bisep:2:0.6").qubits() == 3);
    const double r = std::sqrt(0.5);
    const auto c = cli::parse_state_descriptor("canon:0.7071067811865476:0:0:0:0.7071067811865476:0");
    CHECK(c[7].real() == doctest::Approx(r));
    CHECK_THROWS_AS(cli::parse_state_descriptor("ggz:3"), Error);
    CHECK_THROWS_AS(cli::parse_state_descriptor("wat:1"), Error);
    try {
        cli::parse_state_descriptor("canon:0.5:0.5:0.5:0.5:0.6:0");
        FAIL("accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotNormalized);
    }
}

TEST_CASE("JSON state round trip") {
    const auto s = canonical_state(sample_canonical(3, ZeroMask{}));
    const auto back = io::state_from_json(io::state_to_json(s));
    for (std::size_t i = 0; i < 8; ++i) CHECK(back[i] == s[i]);
    CHECK_THROWS_AS(io::state_from_json(json{{"n", 1}}), Error);
    CHECK_THROWS_AS(io::format_number(std::nan("")), Error);
    CHECK(io::format_number(0.1) == "0.1");
}

TEST_CASE("classify command") {
    auto r = run_cli({"classify", "ggz:3:0.7071"});
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["label"] == "genuine");
    for (int i = 1; i <= 6; ++i) CHECK(j["profile"]["ineq" + std::to_string(i)].get<double>() == doctest::Approx(2.828).epsilon(1e-3));

    r = run_cli({"classify", "bisep:1:0.7071"});
    j = json::parse(r.out);
    CHECK(j["label"] == "biseparable");
    CHECK(j["lone"] == 1);

    r = run_cli({"classify", "ggz:3:1.0"});
    CHECK(json::parse(r.out)["label"] == "separable");

    CHECK(run_cli({"classify", "ggz:3:abc"}).code == 2);
    CHECK(run_cli({"classify"}).code == 2);
    CHECK(run_cli({"classify", "ggz:3:1.5"}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({"classify", "ggz:3:0.5", "--bogus"}).code == 2);
}

TEST_CASE("state files") {
    const auto dir = scratch("files");
    spit(dir / "good.json", io::state_to_json(ggz(3, 1.0)).dump());
    spit(dir / "loose.json", R"({"n": 3, "amplitudes": [[1,0],[1,0],[0,0],[0,0],[0,0],[0,0],[0,0],[0,0]]})");
    spit(dir / "broken.json", "{not json");
    spit(dir / "two.json", io::state_to_json(ggz(2, 0.6)).dump());
    CHECK(run_cli({"classify", "file:" + (dir / "good.json").string()}).code == 0);
    CHECK(run_cli({"classify", "file:" + (dir / "loose.json").string()}).code == 3);
    CHECK(run_cli({"classify", "file:" + (dir / "broken.json").string()}).code == 2);
    CHECK(run_cli({"classify", "file:" + (dir / "missing.json").string()}).code == 2);
    CHECK(run_cli({"classify", "file:" + (dir / "two.json").string()}).code == 2);
}

TEST_CASE("config files and flag precedence") {
    const auto dir = scratch("config");
    spit(dir / "run.ini", "points = 5\nout = " + (dir / "from_config").generic_string() + "\n");
    auto r = run_cli({"sweep", "--config", (dir / "run.ini").string()});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["points"] == 5);
    CHECK(fs::exists(dir / "from_config" / "sweep.csv"));

    r = run_cli({"sweep", "--config", (dir / "run.ini").string(), "--points", "7"});
    CHECK(json::parse(r.out)["points"] == 7);

    spit(dir / "bad.ini", "points = 5\nflavour = mint\n");
    CHECK(run_cli({"sweep", "--config", (dir / "bad.ini").string()}).code == 2);
}

TEST_CASE("sweep output is byte-identical across runs and worker counts") {
    const auto a = scratch("sweep_a"), b = scratch("sweep_b");
    REQUIRE(run_cli({"sweep", "--points", "20", "--out", a.string()}).code == 0);
    REQUIRE(run_cli({"sweep", "--points", "20", "--out", b.string(), "--workers", "3"}).code == 0);
    const auto text = slurp(a / "sweep.csv");
    CHECK(text == slurp(b / "sweep.csv"));
    std::istringstream lines(text);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "alpha_sq,entropy,violation,closed_form");
    int rows = 0;
    while (std::getline(lines, line)) ++rows;
    CHECK(rows == 20);
}

TEST_CASE("campaign writes stage files and a manifest deterministically") {
    const auto a = scratch("camp_a"), b = scratch("camp_b");
    const std::vector<std::string> base{"campaign", "--states", "30", "--class-states", "20", "--masks", "none,l1l2"};
    auto args = base;
    args.insert(args.end(), {"--out", a.string()});
    const auto ra = run_cli(args);
    REQUIRE((ra.code == 0 || ra.code == 4));
    args = base;
    args.insert(args.end(), {"--out", b.string(), "--workers", "2"});
    const auto rb = run_cli(args);
    CHECK(rb.code == ra.code);

    CHECK(fs::exists(a / "filter_stage_1.csv"));
    CHECK(fs::exists(a / "class_l1l2" / "filter_stage_1.csv"));
    for (const auto& entry : fs::recursive_directory_iterator(a)) {
        if (!entry.is_regular_file()) continue;
        const auto rel = fs::relative(entry.path(), a);
        CHECK(slurp(entry.path()) == slurp(b / rel));
    }
    const auto manifest = json::parse(slurp(a / "manifest.json"));
    REQUIRE(manifest["campaigns"].size() == 2);
    const auto& main = manifest["campaigns"][0];
    CHECK(main["mask"] == "none");
    CHECK(main["n_states"] == 30);
    CHECK(main["stages"][0]["tested"] == 30);
    CHECK(manifest["campaigns"][1]["directory"] == "class_l1l2");
    CHECK(slurp(a / "filter_stage_1.csv").rfind("state_index,seed,value,violated\n", 0) == 0);

    CHECK(run_cli({"campaign", "--masks", "l2l4", "--out", a.string()}).code == 2);
}

TEST_CASE("nqubit and bound-check commands") {
    const auto dir = scratch("misc");
    auto r = run_cli({"nqubit", "--n", "4", "--alphas", "0.5,1.0", "--out", dir.string()});
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["family_size"] == 4);
    CHECK(j["max_abs_deviation"].get<double>() < 1e-4);
    CHECK(fs::exists(dir / "nqubit_n4.csv"));
    CHECK(run_cli({"nqubit", "--n", "12"}).code == 2);

    r = run_cli({"bound-check", "--samples", "10"});
    REQUIRE(r.code == 0);
    j = json::parse(r.out);
    CHECK(j["max_identity_deviation"].get<double>() < 1e-10);
    CHECK(j["max_spectral_radius"].get<double>() <= 2 * std::sqrt(2.0) + 1e-9);
}

TEST_CASE("help exits cleanly") {
    const auto r = run_cli({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("--scale-full") != std::string::npos);
}
