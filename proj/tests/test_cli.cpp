#include <array>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(CLI_BINARY) + " " + args + " 2>&1";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int rc = pclose(pipe);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ls(line);
    while (std::getline(ls, field, ',')) fields.push_back(field);
    rows.push_back(std::move(fields));
  }
  return rows;
}

}  // namespace

TEST_CASE("spectrum table for the hyperbolic potential") {
  auto r = run_cli("spectrum --potential scarf2 --a 10 --b 5");
  CHECK(r.status == 0);
  auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 11);  // header + 10 levels
  CHECK(rows[0] == std::vector<std::string>{"n", "epsilon", "e"});
  CHECK(rows[1] == std::vector<std::string>{"0", "-100", "0"});
  CHECK(rows[10] == std::vector<std::string>{"9", "-1", "99"});
}

TEST_CASE("spectrum table for the trigonometric potential") {
  auto r = run_cli("spectrum --potential scarf1 --a 10 --b 5 --n-max 3");
  CHECK(r.status == 0);
  auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 5);
  CHECK(rows[1][1] == "100");
  CHECK(rows[2][1] == "121");
  CHECK(rows[3][1] == "144");
  CHECK(rows[4][1] == "169");
}

TEST_CASE("oracle columns stay within tolerance") {
  auto r = run_cli("spectrum --potential scarf2 --a 3 --b 0 --oracle");
  CHECK(r.status == 0);
  auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 4);
  REQUIRE(rows[0].size() == 5);
  for (size_t i = 1; i < rows.size(); ++i) CHECK(std::stod(rows[i][4]) < 1e-3);
}

TEST_CASE("exact polynomial coefficients") {
  auto r = run_cli("poly --p 21/2 --q -10 --n 2");
  CHECK(r.status == 0);
  CHECK(r.out.find("degree_deficient=false") != std::string::npos);
  auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[1] == std::vector<std::string>{"0", "83"});
  CHECK(rows[2] == std::vector<std::string>{"1", "360"});
  CHECK(rows[3] == std::vector<std::string>{"2", "306"});

  auto frac = run_cli("poly --p 5/2 --q 1/3 --n 1");
  auto frows = parse_csv(frac.out);
  CHECK(frows[1] == std::vector<std::string>{"0", "1/3"});
  CHECK(frows[2] == std::vector<std::string>{"1", "-3"});

  auto collapsed = run_cli("poly --p 3/2 --q 0 --n 2");
  CHECK(collapsed.out.find("degree_deficient=true") != std::string::npos);
}

TEST_CASE("wavefunction node counts") {
  for (int n : {0, 1, 3}) {
    auto r = run_cli("wavefunction --a 10 --b 5 --n " + std::to_string(n) +
                     " --zmin -8 --zmax 8 --points 2001");
    CHECK(r.status == 0);
    auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 2002);
    int changes = 0;
    double prev = 0;
    for (size_t i = 1; i < rows.size(); ++i) {
      double v = std::stod(rows[i][1]);
      if (std::abs(v) < 1e-13) continue;
      if (prev != 0 && std::signbit(prev) != std::signbit(v)) ++changes;
      prev = v;
    }
    CHECK(changes == n);
  }
}

TEST_CASE("gram output marks divergent entries") {
  auto r = run_cli("gram --p 3/2 --q 0 --max-n 1");
  CHECK(r.status == 0);
  auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 4);
  CHECK(std::stod(rows[1][2]) == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(rows[3][2] == "divergent");
  CHECK(rows[3][3] == "false");
}

TEST_CASE("angular header carries the discrete-series labels") {
  auto r = run_cli("angular --l 1 --m 1 --points 10");
  CHECK(r.status == 0);
  CHECK(r.out.find("j=1.5") != std::string::npos);
  CHECK(r.out.find("mprime=2.5") != std::string::npos);

  auto r2 = run_cli("angular --l 2 --m 1 --points 10");
  CHECK(r2.out.find("j=1.5") != std::string::npos);
  CHECK(r2.out.find("mprime=6.5") != std::string::npos);

  auto lim = run_cli("angular --l 2 --m 1 --legendre-limit --points 10");
  CHECK(lim.status == 0);
  CHECK(lim.out.find("b=0") != std::string::npos);
}

TEST_CASE("classification report") {
  auto r = run_cli("classify --a 1 --b 0 --c 1 --d -3 --e 2");
  CHECK(r.status == 0);
  CHECK(r.out.find("family,Romanovski") != std::string::npos);
  CHECK(r.out.find("p,5/2") != std::string::npos);

  auto bessel = run_cli("classify --a 1 --b 0 --c 0 --d 5 --e 2");
  CHECK(bessel.out.find("family,Bessel") != std::string::npos);
}

TEST_CASE("json output parses and mirrors the csv content") {
  auto r = run_cli("spectrum --potential scarf2 --a 10 --b 5 --format json");
  CHECK(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["params"]["potential"] == "scarf2");
  REQUIRE(j["rows"].size() == 10);
  CHECK(j["rows"][0][1] == "-100");
  CHECK(j["columns"].size() == 3);
}

TEST_CASE("byte-identical output across runs") {
  const std::string cmds[] = {
      "spectrum --potential scarf2 --a 10 --b 5 --oracle --N 800",
      "gram --p 21/2 --q -10 --max-n 4",
      "wavefunction --a 5 --b 2 --n 2 --points 101",
      "angular --l 1 --m 1 --points 50",
  };
  for (const auto& c : cmds) {
    auto first = run_cli(c);
    auto second = run_cli(c);
    CHECK(first.status == 0);
    CHECK(first.out == second.out);
  }
}

TEST_CASE("invalid parameters exit with code 2 and a one-line reason") {
  for (const std::string bad : {
           "spectrum --a 0 --b 1",
           "spectrum --potential scarf1 --a 10 --b 5 --oracle",
           "poly --p -1 --q 0 --n 2",
           "poly --p x --q 0 --n 2",
           "wavefunction --a 3 --b 0 --n 3",
           "angular --l 2 --m 0",
           "spectrum",
       }) {
    auto r = run_cli(bad);
    CHECK(r.status == 2);
    CHECK(r.out.find("error") != std::string::npos);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') <= 2);
  }
}
