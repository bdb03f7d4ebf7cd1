#include <sstream>

#include "doctest.h"
#include "uctk/cli.hpp"
#include "uctk/text.hpp"

using namespace uctk;

namespace {

cli::Report run_line(const std::string& line) { return cli::run(text::tokenize(line), cli::Options{}); }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("tokenizer") {
    CHECK(text::tokenize("seed {(0) (0 0)} (0 0)") == std::vector<std::string>{"seed", "{(0) (0 0)}", "(0 0)"});
    CHECK(text::tokenize("analyze \"u1*2\" {(0)}") == std::vector<std::string>{"analyze", "u1*2", "{(0)}"});
    CHECK(text::tokenize("validate <() -> ({}, (0))>").size() == 2);
  }

  TEST_CASE("queries") {
    const cli::Report s = run_line("seed {(0) (0 0)} ()");
    CHECK(s.status == cli::Ok);
    CHECK(s.body["seed"] == "u3");
    CHECK(run_line("order-type {(0)}").body["order_type"] == "w+1");
    CHECK(run_line("analyze \"u1*2\" {(0)}").body["uniform_cofinality"] == "u1");
  }

  TEST_CASE("error codes and exit status") {
    const cli::Report a = run_line("seed {(0)}");
    CHECK(a.status == cli::UsageError);
    CHECK(a.body["code"] == "ArityError");
    CHECK(run_line("seed {(0) (0 x)} ()").body["code"] == "SyntaxError");
    CHECK_THROWS(text::tokenize("seed {(0) (0 0} ()"));
    CHECK(run_line("frobnicate").body["code"] == "UnknownCommand");
    const cli::Report v = run_line("validate {(1)}");
    CHECK(v.status == cli::Rejected);
    CHECK(v.body["code"] == "ClosureViolation");
    CHECK(run_line("regular {(0) (1)}").status == cli::Rejected);
  }

  TEST_CASE("rendering") {
    const cli::Report s = run_line("seed {(0) (0 0)} ()");
    CHECK(cli::render(s, cli::Options{}) == "command=seed input=\"{(0) (0 0)} ()\" status=ok seed=u3");
    cli::Options st;
    st.format = cli::Format::Structured;
    const std::string want = "{\"command\":\"seed\",\"input\":\"{(0) (0 0)} ()\",\"status\":\"ok\",\"seed\":\"u3\"}";
    CHECK(cli::render(s, st) == want);
  }

  TEST_CASE("batch is deterministic and ordered") {
    const std::string file = "# comment\norder-type {(0)}\n\ncfl u2+u1*2\nseed {(0)}\n";
    std::ostringstream a, b;
    std::istringstream ia(file), ib(file);
    CHECK(cli::run_batch(ia, cli::Options{}, a) == cli::UsageError);
    cli::run_batch(ib, cli::Options{}, b);
    CHECK(a.str() == b.str());
    CHECK(a.str().rfind("line=2 command=order-type", 0) == 0);
    CHECK(a.str().find("line=4 command=cfl") != std::string::npos);
  }
}
