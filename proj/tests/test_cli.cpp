#include "ivp/cli.hpp"

#include <doctest.h>
#include <json.hpp>

using ivp::cli::CommandRequest;
using ivp::cli::run;
using nlohmann::json;

namespace {

CommandRequest req(std::string sub, std::map<std::string, std::string> flags, std::vector<std::string> pos = {},
                   bool as_json = false) {
  CommandRequest r;
  r.subcommand = std::move(sub);
  r.flags = std::move(flags);
  r.positionals = std::move(pos);
  r.json = as_json;
  return r;
}

json run_json(CommandRequest r) {
  r.json = true;
  const auto res = run(r);
  REQUIRE(res.exit_code == 0);
  return json::parse(res.output);
}

json verify_stdin(const json& doc) {
  CommandRequest r = req("verify", {{"stdin", "true"}});
  r.stdin_text = doc.dump();
  return run_json(r);
}

}  // namespace

TEST_CASE("vorder text and json") {
  auto res = run(req("vorder", {{"set", "0,1,2,4"}, {"p", "2"}, {"n", "3"}}));
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("points: 0,1,2,4") != std::string::npos);
  CHECK(res.output.find("w: 0,0,1,3") != std::string::npos);
  const json j = run_json(req("vorder", {{"set", "0,1,2,4"}, {"p", "2"}, {"n", "3"}}));
  CHECK(j["w"] == json::array({0, 0, 1, 3}));
}

TEST_CASE("exit codes") {
  CHECK(run(req("classify", {{"p", "2"}, {"seq", "1,3"}})).exit_code == 2);
  CHECK(run(req("classify", {{"p", "4"}, {"seq", "1,3,5"}})).exit_code == 1);
  CHECK(run(req("vorder", {{"set", "0,1"}, {"p", "2"}, {"n", "1"}, {"bogus", "1"}})).exit_code == 2);
  CHECK(run(req("nosuch", {})).exit_code == 2);
  CHECK(run(req("member", {{"poly", "X+"}, {"set", "Z"}, {"p", "2"}})).exit_code == 2);
  CHECK(run(req("bezout4", {}, {"2", "4", "6", "8"})).exit_code == 1);
  const auto res = run(req("bezout4", {}, {"2", "4", "6", "8"}, true));
  CHECK(json::parse(res.output)["error"]["kind"] == "domain");
}

TEST_CASE("bezout4 echoes identities") {
  auto res = run(req("bezout4", {}, {"2", "3", "4", "5"}));
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("= 1: true") != std::string::npos);
  CHECK(res.output.find("alpha*delta = beta*gamma: true") != std::string::npos);
  const json j = run_json(req("bezout4", {}, {"6", "10", "15", "0"}));
  CHECK(j["linearIdentity"] == true);
  CHECK(verify_stdin(j)["ok"] == true);
}

TEST_CASE("unknown verdicts exit zero") {
  const json j = run_json(req("ideal", {{"ideal", "comp:p=2,x=1,N=1"}, {"poly", "X(X-1)/2"}}, {"member"}));
  CHECK(j["verdict"] == "unknown");
  CHECK(j["reason"] == "insufficient-precision");
  const json k = run_json(req("ideal", {{"ideal", "max:p=2,a=3"}, {"poly", "X*(X-1)/2"}}, {"member"}));
  CHECK(k["verdict"] == "no");
}

TEST_CASE("every subcommand answers") {
  const std::vector<CommandRequest> all = {
      req("basis", {{"set", "Z"}, {"p", "2"}, {"k", "2"}}),
      req("expand", {{"poly", "X^2"}, {"set", "Z"}, {"p", "2"}}),
      req("member", {{"poly", "X^2+X"}, {"set", "Z"}, {"p", "2"}, {"target", "m"}}),
      req("residues", {{"poly", "X(X-1)/2"}, {"p", "2"}}),
      req("classify", {{"p", "2"}, {"seq", "1,3,7,15"}}),
      req("pseudolimit", {{"p", "2"}, {"seq", "1,3,7,15"}, {"x", "-1"}}),
      req("imageclass", {{"p", "2"}, {"seq", "1,3,7,15"}, {"poly", "X^2"}}),
      req("representative", {{"ideal", "max:p=2,a=2"}, {"poly", "X(X-1)/2"}}),
      req("frisch", {{"poly", "X"}, {"p", "2"}}),
      req("snf", {{"matrix", "2,4;6,8"}}),
      req("content", {{"entries", "2;X^2+X"}}),
      req("ucs", {{"B", "2,X;X+1,3"}}),
      req("tracenorm", {{"B", "1,0;0,1"}, {"C", "1,0;0,0"}, {"comb", "1,0,0,0"}}),
      req("tracenorm", {{"B", "1,2;3,4"}, {"C", "1,1;1,1"}}),
      req("idem", {{"matrix", "1,0;0,0"}}),
      req("example", {}, {"verify"}),
      req("example", {{"max-deg", "1"}, {"max-height", "1"}, {"budget", "100"}}, {"search"}),
  };
  for (const auto& r : all) {
    INFO(r.subcommand);
    const auto text = run(r);
    CHECK(text.exit_code == 0);
    CHECK_FALSE(text.output.empty());
    const json j = run_json(r);
    CHECK(j.contains("kind"));
  }
  CHECK(ivp::cli::commands().size() == 19);
}

TEST_CASE("JSON results re-verify through verify --stdin") {
  const json content = run_json(req("content", {{"entries", "2;X^2+X"}}));
  CHECK(content["verdict"] == "non-unit");
  json v = verify_stdin(content);
  CHECK(v["ok"] == true);
  CHECK(v["verdict"] == content["verdict"]);

  const json unit = run_json(req("content", {{"entries", "2;X;X+1;3"}}));
  CHECK(unit["verdict"] == "unit");
  CHECK(verify_stdin(unit)["ok"] == true);

  const json ex = run_json(req("example", {}, {"verify"}));
  CHECK(ex["valid"] == true);
  v = verify_stdin(ex);
  CHECK(v["ok"] == true);
  CHECK(v["checks"] == ex["checks"]);

  const json snf = run_json(req("snf", {{"matrix", "2,4,4;-6,6,12;10,-4,-16"}}));
  CHECK(verify_stdin(snf)["ok"] == true);

  json forged = unit;
  forged["certificate"]["c"] = "2";
  CHECK(verify_stdin(forged)["ok"] == false);
}

TEST_CASE("verify rejects bad input") {
  CommandRequest r = req("verify", {{"stdin", "true"}});
  r.stdin_text = "{not json";
  CHECK(run(r).exit_code == 2);
  r.stdin_text = R"({"kind": "mystery"})";
  CHECK(run(r).exit_code == 2);
}
