#include <doctest.h>

#include "taumatch/report.hpp"

#include "support/corpus.hpp"

using namespace taumatch;

namespace {

std::vector<BijectionReport> corpus_reports() {
  std::vector<BijectionReport> out;
  for (const auto& e : corpus::all()) {
    std::vector<VerifiedPair> pairs;
    for (const auto& p : e.pairs)
      if (verify_support_pair(p).status == PairStatus::SupportTauTilting) pairs.push_back(require_support_tau_tilting(p));
    for (const auto& l : pairs)
      for (const auto& r : pairs) {
        BijectionOptions options;
        options.enumerate_all = true;
        out.push_back(build_report(l, r, options));
        options.drop = {Condition::C};
        out.push_back(build_report(l, r, options));
      }
  }
  return out;
}

}  // namespace

TEST_CASE("formatting helpers") {
  CHECK(format_dims({1, 1, 0}) == "(1, 1, 0)");
  CHECK(format_dims({}) == "()");
  CHECK(format_set({0, 2}) == "{1, 3}");
  CHECK(format_set({}) == "{}");
}

TEST_CASE("matrix JSON round trip") {
  const Matrix m = Matrix::from_rows({{Scalar(1, 2), Scalar(-3)}, {Scalar(0), Scalar(7, 5)}}, 2);
  const auto j = matrix_to_json(m);
  CHECK(j["entries"][0][0] == "1/2");
  CHECK(matrix_from_json(nlohmann::json::parse(j.dump())) == m);
  CHECK(matrix_from_json(nlohmann::json::parse(matrix_to_json(Matrix(0, 3)).dump())) == Matrix(0, 3));
}

TEST_CASE("bijection reports survive a JSON round trip") {
  const auto reports = corpus_reports();
  CHECK(reports.size() > 10);
  for (const auto& r : reports) {
    const std::string text = to_json(r).dump(2);
    const BijectionReport back = bijection_report_from_json(nlohmann::json::parse(text));
    CHECK(back == r);
    CHECK(to_json(back).dump(2) == text);
  }
}

TEST_CASE("report JSON layout") {
  const WorkspaceSpec ws = corpus::load("two_arrows.json");
  BijectionOptions options;
  options.enumerate_all = true;
  const auto j = to_json(build_report(*ws.find_pair("left"), *ws.find_pair("right"), options));
  CHECK(j["schema"] == kReportSchema);
  CHECK(j["kind"] == "bijection");
  CHECK(j["F"] == nlohmann::json::parse("[[1,2,3],[3],[1,2]]"));
  CHECK(j["matching"]["cycles"] == "(1 2 3)");
  CHECK(j["left"]["summands"][2]["role"] == "P");
  CHECK(j["hall"]["ok"] == true);
  CHECK_FALSE(j["all_matchings"]["truncated"].get<bool>());
  std::vector<std::string> keys;
  for (const auto& item : j.items()) keys.push_back(item.key());
  CHECK(keys.front() == "schema");
}

TEST_CASE("rendering is deterministic") {
  const WorkspaceSpec a = corpus::load("two_cycle.json");
  const WorkspaceSpec b = corpus::load("two_cycle.json");
  const auto ra = build_report(*a.find_pair("left"), *a.find_pair("right"), {});
  const auto rb = build_report(*b.find_pair("left"), *b.find_pair("right"), {});
  CHECK(to_json(ra).dump() == to_json(rb).dump());
  CHECK(render_text(ra) == render_text(rb));
  CHECK(render_text(ra).find("Matching s = (1 2)") != std::string::npos);
}

TEST_CASE("pair verification JSON") {
  const WorkspaceSpec ws = corpus::load("two_arrows.json");
  SupportPair bad = *ws.find_pair("left");
  bad.t_summands.push_back(bad.t_summands.front());
  const auto j = pair_verification_to_json(bad, verify_support_pair(bad));
  CHECK(j["status"] == "failed");
  CHECK(j["failed_check"] == "not basic");
  const auto good = pair_verification_to_json(*ws.find_pair("left"), verify_support_pair(*ws.find_pair("left")));
  CHECK(good["summand_count"] == 3);
  CHECK(render_text(*ws.find_pair("left"), verify_support_pair(*ws.find_pair("left"))).find("left") !=
        std::string::npos);
}
