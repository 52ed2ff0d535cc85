#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int exit_code = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(CSECS_CLI_PATH) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("threshold subcommand") {
    const auto r = run("threshold");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("curve,t,alpha_star,residual\nEECS,,0.56534603181", 0) == 0);
}

TEST_CASE("point subcommand with defaults for r_b") {
    const auto r = run("point --alpha-re 1 --m 1 --n 1 --r-a 0.7071067811865476 --format json");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    const auto& header = j["header"];
    std::size_t c_col = 0, rb_col = 0;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == "c") c_col = i;
        if (header[i] == "r_b") rb_col = i;
    }
    CHECK(j["rows"][0][c_col].get<double>() == doctest::Approx(0.99853582158343).epsilon(1e-12));
    CHECK(j["rows"][0][rb_col].get<double>() == 0.7071067811865476);
}

TEST_CASE("sweep subcommand writes files") {
    const auto path = std::filesystem::temp_directory_path() / "csecs_cli_sweep.csv";
    const auto r = run("sweep --quantity fidelity --m 1 --n 1 --grid alpha_re=0.1:1:4 --grid r=0.05:0.5:2 --out " +
                       path.string());
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream content;
    content << in.rdbuf();
    std::size_t lines = 0;
    for (char ch : content.str()) lines += ch == '\n';
    CHECK(lines == 9);
    std::filesystem::remove(path);
}

TEST_CASE("exit codes") {
    CHECK(run("").exit_code == 2);
    CHECK(run("point --r-a 1.5").exit_code == 2);
    CHECK(run("point --parity sideways").exit_code == 2);
    CHECK(run("sweep --grid r=0:1:3 --grid t=0:1:3").exit_code == 2);
    CHECK(run("sweep --grid bogus=0:1:3").exit_code == 2);
    CHECK(run("figure Fig9").exit_code == 2);
    CHECK(run("verify --tolerance 0").exit_code == 2);
    CHECK(run("point --alpha-re 0 --m 0 --n 0 --parity odd").exit_code == 4);
    CHECK(run("point --alpha-re 0 --m 1 --n 0 --r-a 0").exit_code == 4);
}

TEST_CASE("figure output is deterministic") {
    const auto a = run("figure Fig6");
    const auto b = run("figure Fig6");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.rfind("alpha,r,f11,f00,diff\n", 0) == 0);
}
