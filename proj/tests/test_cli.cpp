#include <doctest.h>

#include "parteq/quasipoly.hpp"
#include "support/oracles.hpp"

#include <json.hpp>

#include <cstdio>
#include <sys/wait.h>

using namespace parteq;
using json = nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(PARTEQ_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Rat rat(const json& s) {
  Rat q(s.get<std::string>());
  q.canonicalize();
  return q;
}

}  // namespace

TEST_CASE("count") {
  auto r = run("count --set 1,2,3,4 --upto 60 --json");
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  auto table = oracle::knapsack({1, 2, 3, 4}, 60);
  REQUIRE(j.size() == 61);
  for (std::size_t n = 0; n <= 60; ++n) CHECK(Int(j[n].get<std::string>()) == table[n]);

  auto csv = run("count --set 1,2,3 --upto 3 --csv");
  CHECK(csv.code == 0);
  CHECK(csv.out == "n,value\n0,1\n1,1\n2,2\n3,3\n");

  // values past 64 bits come out as exact decimal strings
  auto big = json::parse(run("count --set 1 --upto 2 --json").out);
  CHECK(big == json::array({"1", "1", "1"}));
  auto wide = json::parse(run("count --set 1,2,3,4,5,6,7,8,9,10 --upto 3000 --json").out);
  CHECK(Int(wide.back().get<std::string>()) == oracle::knapsack({1, 2, 3, 4, 5, 6, 7, 8, 9, 10}, 3000)[3000]);
}

TEST_CASE("decompose") {
  auto r = run("decompose --set 1,2,3");
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["modulus"] == 6);
  auto dec = decompose(PartSet{1, 2, 3});
  REQUIRE(j["pieces"].size() == 6);
  for (std::size_t i = 0; i < 6; ++i) {
    std::vector<Rat> c;
    for (const auto& s : j["pieces"][i]) c.push_back(rat(s));
    CHECK(RatPoly(c) == dec.pieces[i]);
  }
  CHECK(j["pieces"][3] == json::array({"3/1", "6/1", "3/1"}));

  // at modulus 6 only the odd residues of P_4 are polynomial; (n+1)(3n^2+6n+2)/2 at residue 1
  auto m6 = json::parse(run("decompose --set 1,2,3,4 --modulus 6").out);
  CHECK(m6["modulus"] == 6);
  CHECK(m6["pieces"][0].is_null());
  CHECK(m6["pieces"][1] == json::array({"1/1", "4/1", "9/2", "3/2"}));
  CHECK(json::parse(run("decompose --set 1,2,3 --modulus 12").out)["pieces"].size() == 12);
  CHECK(run("decompose --set 1,2,3 --modulus 0").code == 64);
}

TEST_CASE("pell and conic") {
  auto p = run("pell --d 2 --take 3");
  CHECK(p.code == 0);
  CHECK(p.out == "3 2\n17 12\n99 70\n");
  CHECK(run("pell --d 4 --take 1").code == 64);

  auto c = run("conic --p 6,9,0 --q 10,12,0 --take 3 --json");
  REQUIRE(c.code == 0);
  auto j = json::parse(c.out);
  REQUIRE(j["solutions"].size() == 3);
  CHECK(j["solutions"][1]["m"] == "2928");
  CHECK(j["solutions"][1]["n"] == "2268");
  CHECK(j["solutions"][2]["m"] == "11252256");
  CHECK(j["solutions"][2]["n"] == "8715960");
  CHECK(run("conic --p 6,x,0 --q 10,12,0").code == 64);
}

TEST_CASE("solve") {
  auto r = run("solve --a 1,2,3 --b 1,2,3,4,5 --xmax 20000 --ymax 1000 --json");
  CHECK(r.code == 2);  // only bounded search was run
  auto j = json::parse(r.out);
  CHECK(j["certificates"].size() == 16);
  for (const auto& c : j["certificates"]) {
    CHECK(c["kind"] == "point");
    CHECK(c["verified"] == true);
    CHECK(c.contains("equation"));
    CHECK(c.contains("transcript"));
  }
  CHECK(j["certificates"].back()["payload"]["x"] == "10093");
  CHECK(j["certificates"].back()["payload"]["y"] == "388");

  auto fam = json::parse(run("solve --a 1,2,3 --b 1,2,3,4 --families --json").out);
  std::size_t families = 0;
  for (const auto& c : fam["certificates"])
    if (c["kind"] == "poly_family") {
      ++families;
      CHECK(c["payload"].contains("x_of"));
      CHECK(c["payload"]["x_of"][0].get<std::string>().find('/') != std::string::npos);
    }
  CHECK(families == 4);

  CHECK(run("solve --a 1,2,3 --b 1,2,3,4 --xmax 10").code == 64);
  CHECK(run("solve --a 1,2,0 --b 1,2").code == 64);
}

TEST_CASE("hunt-squares") {
  auto csv = run("hunt-squares --k 5 --max-part 12 --csv --threads 1");
  REQUIRE(csv.code == 0);
  CHECK(csv.out.rfind("parts,L,i,root-coefficients\n", 0) == 0);
  CHECK(csv.out.find("\n1 4 5 10 12,60,12,") != std::string::npos);
  // byte-identical output whatever the worker count
  CHECK(run("hunt-squares --k 5 --max-part 12 --csv --threads 3").out == csv.out);

  auto j = json::parse(run("hunt-squares --k 5 --max-part 15 --json").out);
  CHECK(j["counts"]["rational"] == 141);
  CHECK(j["counts"]["integral"] == 131);
  CHECK(j["counts"]["split"] == 113);

  auto lin = json::parse(run("hunt-squares --linear --k 6 --max-part 10 --bound 100 --json").out);
  CHECK(!lin["records"].empty());
}

TEST_CASE("verify-paper, registry, sweep") {
  auto v = run("verify-paper C2 --quiet");
  CHECK(v.code == 0);
  CHECK(v.out.rfind("PASS", 0) == 0);
  auto sec = run("verify-paper §6 --quiet");
  CHECK(sec.code == 0);
  CHECK(sec.out.find("C10") != std::string::npos);
  CHECK(sec.out.find("C15") != std::string::npos);
  CHECK(run("verify-paper nonexistent-tag").code == 64);
  CHECK(run("verify-paper sec9").code == 64);

  auto reg = run("registry --pattern 'specb_*' --json");
  CHECK(reg.code == 0);
  CHECK(json::parse(reg.out).size() == 4);
  CHECK(run("registry --pattern nothing_here").code == 64);

  CHECK(run("sweep --max-part 6").code == 64);
  CHECK(run("").code == 64);
  CHECK(run("frobnicate").code == 64);
}
