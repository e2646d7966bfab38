#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "basicfn/cli.hpp"

using namespace basicfn;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "basicfn");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("ctable formats") {
  const auto j = run({"ctable", "--preset", "gl2", "--max-det", "2", "--format", "json"});
  REQUIRE(j.code == 0);
  const auto doc = Json::parse(j.out);
  CHECK(doc["schema_version"] == 1);
  CHECK(doc["kind"] == "ctable");
  std::vector<std::vector<int>> mus;
  for (const auto& row : doc["rows"]) mus.push_back(row["mu"].get<std::vector<int>>());
  CHECK(mus == std::vector<std::vector<int>>{{0, 0}, {0, 1}, {0, 2}, {1, 1}});
  CHECK(doc["rows"][3]["c_of_qinv"] == "q");
  CHECK(doc["rows"][3]["c_at_1"] == 1);
  CHECK(doc["rows"][3]["det"] == 2);

  const auto t = run({"ctable", "--preset", "gl2", "--max-det", "2"});
  CHECK(t.out.find("mu=(1,1) det=2 c=q\n") != std::string::npos);

  const auto c = run({"ctable", "--preset", "gsp4", "--max-det", "2", "--format", "csv"});
  CHECK(c.out.rfind("mu,det,c_of_qinv,c_at_1\n", 0) == 0);
  CHECK(c.out.find("\"(-1,-2,2)\",2,q^3+q,2") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({"ctable", "--preset", "gl2", "--max-det", "-1"}).code == 2);
  CHECK(run({"ctable", "--max-det", "1"}).code == 2);
  CHECK(run({"ctable", "--preset", "gl2", "--datum-file", "x.json", "--max-det", "1"}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"ctable", "--preset", "gl2", "--max-det", "1", "--format", "xml"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("computation errors exit 3 with the error name") {
  const auto r = run({"kostka", "--preset", "gl2", "--lambda", "2,0", "--mu", "1,1"});
  CHECK(r.code == 3);
  CHECK(r.err.find("NotAntiDominant") != std::string::npos);
  const auto s = run({"series", "--preset", "gl2", "--max-det", "1", "--qf", "2"});
  CHECK(s.code == 3);
  CHECK(s.err.find("IrrationalHalfPower") != std::string::npos);
  CHECK(run({"datum", "--preset", "gl12"}).code == 3);
}

TEST_CASE("kostka and partition commands") {
  const auto k = run({"kostka", "--preset", "gl3", "--lambda", "-1,0,1", "--mu", "0,0,0", "--format", "json"});
  REQUIRE(k.code == 0);
  CHECK(Json::parse(k.out)["rows"][0]["value"] == "q^2+q");
  const auto p = run({"kostka", "--preset", "gl3", "--partition", "--nu", "1,0,-1"});
  CHECK(p.out.find("P=q^2+q") != std::string::npos);
  const auto b = run({"kostka", "--preset", "gsp4", "--psi", "basic", "--lambda", "0,0,0", "--mu", "-1,-2,2",
                      "--format", "json"});
  // m^mu_{0,Psi} = q^det * c_mu(q^-1)
  CHECK(Json::parse(b.out)["rows"][0]["value"] == "q^5+q^3");
}

TEST_CASE("symdec, layers, series, datum") {
  const auto s = run({"symdec", "--preset", "gsp4", "--k", "2"});
  CHECK(s.out.find("mult=1 dim=10") != std::string::npos);
  const auto l = run({"count-layers", "--preset", "gsp4", "--max-k", "6", "--format", "json"});
  const auto lj = Json::parse(l.out);
  std::vector<int> counts;
  for (const auto& row : lj["rows"]) counts.push_back(row["count"].get<int>());
  CHECK(counts == std::vector<int>{1, 1, 3, 3, 6, 6, 10});
  const auto v = run({"series", "--preset", "gl2", "--max-det", "1", "--qf", "9", "--s", "1", "--format", "json"});
  CHECK(Json::parse(v.out)["rows"][1]["value"] == "1/27");
  const auto d = run({"datum", "--preset", "gsp4", "--format", "json"});
  const auto dj = Json::parse(d.out);
  CHECK(dj["weyl_order"] == 8);
  CHECK(dj["positive_roots"].size() == 4);
}

TEST_CASE("datum files") {
  const auto path = std::filesystem::temp_directory_path() / "basicfn_test_datum.json";
  {
    std::ofstream f(path);
    f << R"({"rank":2,"simple_roots":[[1,-1]],"simple_coroots":[[1,-1]],"det_grading":[1,1],"label":"mygl2",)"
      << R"("rep":{"weights":[[1,0],[0,1]]}})";
  }
  const auto a = run({"ctable", "--datum-file", path.string(), "--max-det", "2"});
  const auto b = run({"ctable", "--preset", "gl2", "--max-det", "2"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto h = run({"ctable", "--datum-file", path.string(), "--highest", "0,1", "--max-det", "2"});
  CHECK(h.out == b.out);
  {
    std::ofstream f(path);
    f << R"({"rank":1,"simple_roots":[[3]],"simple_coroots":[[1]],"det_grading":[0],"rep":{"weights":[[0]]}})";
  }
  const auto bad = run({"datum", "--datum-file", path.string()});
  CHECK(bad.code == 3);
  CHECK(bad.err.find("CartanViolation") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("verify commands") {
  const auto c = run({"verify", "crosscheck", "--preset", "gsp4", "--max-det", "3", "--format", "json"});
  CHECK(c.code == 0);
  const auto cj = Json::parse(c.out);
  CHECK(cj["ok"] == true);
  CHECK(cj["checks"].size() > 0);
  CHECK(run({"verify", "gl", "--n", "3", "--max-det", "4"}).code == 0);
  CHECK(run({"verify", "gsp4", "--max-det", "6"}).code == 0);
  const auto l = run({"verify", "lfactor", "--preset", "gsp4", "--qf", "25", "--seed", "7", "--max-k", "3",
                      "--format", "json"});
  CHECK(l.code == 0);
  const auto lj = Json::parse(l.out);
  CHECK(lj["seed"] == 7);
  CHECK(lj["checks"].size() == 4);
  CHECK(lj["checks"][0]["equal"] == true);
}

TEST_CASE("a failing verification exits 1 with the first counterexample") {
  // Sym^2 of the standard representation has det 2 weights; the identity
  // does not apply to it.
  const auto path = std::filesystem::temp_directory_path() / "basicfn_test_sym2.json";
  {
    std::ofstream f(path);
    f << R"({"rank":2,"simple_roots":[[1,-1]],"simple_coroots":[[1,-1]],"det_grading":[1,1],)"
      << R"("allow_nonunit_det":true,"rep":{"highest_weight":[0,2]}})";
  }
  const auto r = run({"verify", "lfactor", "--datum-file", path.string(), "--qf", "9", "--max-k", "2"});
  CHECK(r.code == 1);
  CHECK(r.err.find("degree=1") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("ngo command") {
  const auto r = run({"ngo", "--type", "C2", "--xi", "0,-1", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["isomorphic"] == true);
  CHECK(j["compared_with"] == "gsp4");
}

TEST_CASE("output is identical across thread counts and files") {
  const auto a = run({"ctable", "--preset", "gsp4", "--max-det", "5", "--threads", "1", "--format", "json"});
  const auto b = run({"ctable", "--preset", "gsp4", "--max-det", "5", "--threads", "8", "--format", "json"});
  CHECK(a.out == b.out);
  const auto path = std::filesystem::temp_directory_path() / "basicfn_test_out.json";
  const auto c = run({"ctable", "--preset", "gsp4", "--max-det", "5", "--format", "json", "--output", path.string()});
  CHECK(c.out.empty());
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str() == a.out);
  std::filesystem::remove(path);
}

TEST_CASE("empty tables still print a CSV header") {
  const auto r = run({"symdec", "--preset", "gl2", "--k", "0", "--format", "csv"});
  CHECK(r.out.rfind("lambda,mult,dim\n", 0) == 0);
  Report e;
  e.columns = {"a", "b"};
  std::ostringstream os;
  emit_report(e, Format::Csv, os);
  CHECK(os.str() == "a,b\n");
  CHECK(csv_escape("a,\"b\"") == "\"a,\"\"b\"\"\"");
}
