#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

using nlohmann::json;

namespace {

struct CmdResult {
    int status;
    std::string out;
};

CmdResult run_cli(const std::string& args) {
    const std::string cmd = std::string(BSENT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof(buf), pipe)) out.append(buf, n);
    const int raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_CASE("fock JSON output") {
    const CmdResult r = run_cli("fock 1 1");
    REQUIRE(r.status == 0);
    const json j = json::parse(r.out);
    CHECK(j["n1"] == 1);
    CHECK(j["n2"] == 1);
    CHECK(j["reflectance"] == doctest::Approx(0.5));
    CHECK(j["phi"] == doctest::Approx(0.0));
    CHECK(j["entropy_nats"].get<double>() == doctest::Approx(std::log(2.0)).epsilon(1e-12));
    REQUIRE(j["amplitudes"].size() == 3);
    for (const auto& a : j["amplitudes"]) {
        const double mag = std::hypot(a["re"].get<double>(), a["im"].get<double>());
        if (a["N1"] == 1) {
            CHECK(mag < 1e-12);
        } else {
            CHECK(mag == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
        }
    }
}

TEST_CASE("fock CSV output carries headers and a units row") {
    const CmdResult r = run_cli("--format csv fock 0 2");
    REQUIRE(r.status == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 5);
    CHECK(lines[0] == "n1,n2,N1,N2,amp_re,amp_im,entropy_nats");
    CHECK(lines[1] == "-,-,-,-,-,-,nats");
    CHECK(lines[2].rfind("0,2,0,2,", 0) == 0);
}

TEST_CASE("--bits reports entropy in bits") {
    const CmdResult r = run_cli("--bits fock 0 1");
    REQUIRE(r.status == 0);
    const json j = json::parse(r.out);
    CHECK(j["entropy_bits"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("figure2 CSV is deterministic and well formed") {
    const CmdResult a = run_cli("figure2 --total 4 --steps 11");
    const CmdResult b = run_cli("figure2 --total 4 --steps 11");
    REQUIRE(a.status == 0);
    CHECK(a.out == b.out);

    const auto lines = lines_of(a.out);
    REQUIRE(lines.size() == 2 + 3 * 11);  // header + units + (N/2 + 1) * steps rows
    CHECK(lines[0] == "k,R,entropy_nats");
    CHECK(lines[1] == "-,-,nats");
    CHECK(lines[2] == "0,0,0");  // R = 0 leaves |0,4> unsplit
}

TEST_CASE("figure3 CSV grid dimensions") {
    const CmdResult r = run_cli("figure3 --s1 0.3 --steps 5 --s2-max 0.6 --phi-pi 0.5");
    REQUIRE(r.status == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 2 + 5 * 5);
    CHECK(lines[0] == "s2,R,entropy_nats");
    CHECK(lines[1] == "-,-,nats");
}

TEST_CASE("--phi-pi matches --phi in radians") {
    const CmdResult a = run_cli("squeezed --s1 0.5 --s2 0.5 --phi-pi 0.5");
    const CmdResult b = run_cli("squeezed --s1 0.5 --s2 0.5 --phi 1.5707963267948966");
    REQUIRE(a.status == 0);
    REQUIRE(b.status == 0);
    const json ja = json::parse(a.out), jb = json::parse(b.out);
    CHECK(std::abs(ja["entropy_nats"].get<double>() - jb["entropy_nats"].get<double>()) < 1e-12);
    CHECK(std::abs(ja["phi"].get<double>() - jb["phi"].get<double>()) < 1e-15);
}

TEST_CASE("squeezed reports the effective two-mode squeezing when defined") {
    const CmdResult r = run_cli("squeezed --s1 0.4 --s2 0.4 --phi-pi 0.5");
    REQUIRE(r.status == 0);
    const json j = json::parse(r.out);
    REQUIRE(j.contains("effective_two_mode_squeezing"));
    CHECK(j["effective_two_mode_squeezing"]["abs"].get<double>() == doctest::Approx(0.4));

    // Not decomposable away from R = 1/2; the field is omitted.
    const CmdResult r2 = run_cli("squeezed --s1 0.4 --s2 0.4 --reflectance 0.3 --phi-pi 0.5");
    REQUIRE(r2.status == 0);
    CHECK(!json::parse(r2.out).contains("effective_two_mode_squeezing"));
}

TEST_CASE("gaussian verdicts") {
    const CmdResult ent = run_cli("gaussian --preset sq-thermal-pair --nbar 0.25 --s 0.5");
    REQUIRE(ent.status == 0);
    const json je = json::parse(ent.out);
    CHECK(je["decision"] == "entangled");
    CHECK(je["ppt_min_symplectic"].get<double>() < 1.0);

    const CmdResult sep = run_cli("gaussian --preset sq-thermal-pair --nbar 1 --s 0.2");
    REQUIRE(sep.status == 0);
    CHECK(json::parse(sep.out)["decision"] == "separable");

    const CmdResult csv = run_cli("--format csv gaussian --preset sq-vacuum+thermal --nbar 0.2 --s 0.5");
    REQUIRE(csv.status == 0);
    const auto lines = lines_of(csv.out);
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == "preset,nbar,s,R,phi,decision,duan_lhs,duan_rhs,ppt_min_symplectic");
    CHECK(lines[2].find("entangled") != std::string::npos);
}

TEST_CASE("--output writes the same bytes to a file") {
    const std::string path = "cli_test_output.csv";
    const CmdResult direct = run_cli("figure2 --total 2 --steps 6");
    const CmdResult filed = run_cli("--output " + path + " figure2 --total 2 --steps 6");
    REQUIRE(direct.status == 0);
    REQUIRE(filed.status == 0);
    CHECK(filed.out.empty());
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream buffer;
    buffer << in.rdbuf();
    CHECK(buffer.str() == direct.out);
    std::remove(path.c_str());
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("nonsense").status == 2);
    CHECK(run_cli("fock 1").status == 2);
    CHECK(run_cli("fock -1 2").status == 2);
    CHECK(run_cli("fock 30 30").status == 2);  // n1 + n2 > 40
    CHECK(run_cli("fock 1 1 --reflectance 1.5").status == 2);
    CHECK(run_cli("gaussian --preset bogus").status == 2);
    CHECK(run_cli("squeezed --phi 0.1 --phi-pi 0.5").status == 2);
    CHECK(run_cli("--output /nonexistent-dir/x.csv figure2 --total 2 --steps 3").status == 2);
}

TEST_CASE("help exits cleanly") {
    CHECK(run_cli("--help").status == 0);
    CHECK(run_cli("fock --help").status == 0);
}
