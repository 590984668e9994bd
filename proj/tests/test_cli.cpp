#include <doctest.h>

#include "cli.hpp"

using namespace aarf;
using aarf::cli::json;

TEST_CASE("payloads carry the worked-example values") {
  json ap = cli::apery_payload({14, 17, 20, 21, 23, 26}, 14);
  CHECK(ap.at("elements") ==
        json::array({0, 17, 20, 21, 23, 26, 38, 41, 43, 44, 46, 47, 64, 67}));

  json pf = cli::pf_payload({10, 19, 28, 37, 35});
  CHECK(pf.at("pseudo_frobenius") == json::array({81}));
  CHECK(pf.at("symmetric") == true);

  AAPresentation wne(11, 2, 4, 21);
  json st = cli::structure_payload(wne);
  CHECK(st.at("u") == 5);
  CHECK(st.at("v") == 3);
  CHECK(st.at("w") == 1);
  CHECK(st.at("z") == 4);
  CHECK(st.at("lambda") == 1);
  CHECK(st.at("mu") == 4);
  CHECK(st.at("nu") == 5);
  CHECK(st.at("W").at("empty") == false);

  AAPresentation big(14, 3, 4, 21);
  json rf = cli::rf_payload(big, 50, "count", std::nullopt);
  CHECK(rf.at("count") == 720);

  json closed = cli::rf_payload(big, 50, "closed", std::nullopt);
  CHECK(closed.at("matrices").size() == 1);
  CHECK(closed.at("matrices")[0].at("rows")[0] == json::array({-1, 1, 0, 0, 1, 1}));

  json ideal = cli::ideal_payload({2, 3});
  CHECK(ideal.at("mu") == 1);
  CHECK(ideal.at("ideal_generators")[0].at("plus") == json::array({3, 0}));
  CHECK(ideal.at("ideal_generators")[0].at("minus") == json::array({0, 2}));
  CHECK(ideal.at("ideal_generators")[0].at("degree") == 6);

  AAPresentation sym(10, 9, 3, 35);
  json verify = cli::verify_payload(sym);
  CHECK(verify.at("holds") == true);
  CHECK(verify.at("mu") == 6);
}

TEST_CASE("command result envelope round-trips") {
  json result = cli::command_result("pf", json{{"gens", "2,3"}}, cli::pf_payload({2, 3}));
  CHECK(result.at("status") == "ok");
  json reparsed = json::parse(result.dump());
  CHECK(reparsed == result);

  json err = cli::error_result("apery", json{{"gens", "2,4"}}, "gcd is not 1", 2);
  CHECK(err.at("status") == "error");
  CHECK(err.at("error").at("code") == 2);
  CHECK(json::parse(err.dump()) == err);
}

TEST_CASE("monomial and table rendering") {
  CHECK(cli::monomial({3, 0}) == "x0^3");
  CHECK(cli::monomial({0, 2, 1}) == "x1^2 x2");
  CHECK(cli::monomial({0, 0}) == "1");

  json result = cli::command_result("pf", json{{"gens", "2,3"}}, cli::pf_payload({2, 3}));
  std::string table = cli::render_table(result);
  CHECK(table.find("PF(H) = 1") != std::string::npos);
  CHECK(table.find("symmetric = yes") != std::string::npos);

  std::string err_table = cli::render_table(
      cli::error_result("apery", json{{"gens", "2,4"}}, "gcd of the generators is not 1", 2));
  CHECK(err_table.find("error 2") != std::string::npos);
}

TEST_CASE("exit codes through the full command line") {
  auto run = [](std::vector<const char*> argv) {
    argv.insert(argv.begin(), "aarf");
    return cli::run(static_cast<int>(argv.size()), argv.data());
  };
  CHECK(run({"apery", "--gens", "2,3", "--mod", "2", "--format", "json", "--out",
             "/dev/null"}) == 0);
  CHECK(run({"apery", "--gens", "2,4", "--mod", "2", "--out", "/dev/null"}) == 2);
  CHECK(run({"pf", "--gens", "10,19,28,37,35", "--out", "/dev/null"}) == 0);
  CHECK(run({"rf", "--m0", "14", "--d", "3", "--p", "4", "--n", "21", "--f", "50", "--mode",
             "count", "--out", "/dev/null"}) == 0);
  CHECK(run({"rf", "--m0", "14", "--d", "3", "--p", "4", "--n", "21", "--f", "51", "--mode",
             "count", "--out", "/dev/null"}) == 2);
  CHECK(run({"verify", "--m0", "10", "--d", "9", "--p", "3", "--n", "35", "--format", "json",
             "--out", "/dev/null"}) == 0);
  CHECK(run({"nonsense"}) == 2);
}
