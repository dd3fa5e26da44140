#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int code;
  std::string out;
};

std::string shell_quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

Run cli(const std::string& args) {
  const std::string cmd = shell_quote(CUBICFIELDS_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = ::pclose(pipe);
  return {WEXITSTATUS(status), out};
}

const std::string kOffline = "--offline --cache-dir /nonexistent-cubicfields-cache";

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("scp zeros as json") {
    const Run r = cli("roots scp --h -1 --digits 40 --json");
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::ordered_json::parse(r.out);
    CHECK(doc["kind"] == "roots.scp");
    CHECK(doc["digits"] == 40);
    CHECK(doc["inputs"]["h"] == "-1");
    REQUIRE(doc["zeros"].size() == 3);
    CHECK(doc["zeros"][0].get<std::string>().rfind("1.2469796037174670610500097680084796212645", 0) == 0);
    CHECK(doc["zeros"][1].get<std::string>().rfind("-0.4450418679126288085778051289935895189327", 0) == 0);
    CHECK(doc["zeros"][2].get<std::string>().rfind("-1.8019377358048382524722046390148901023318", 0) == 0);
    // exactly 40 decimals
    const std::string z0 = doc["zeros"][0];
    CHECK(z0.size() - z0.find('.') - 1 == 40);
    std::vector<std::string> keys;
    for (const auto& item : doc.items()) keys.push_back(item.key());
    CHECK(keys == std::vector<std::string>{"kind", "inputs", "digits", "zeros", "residual"});
  }

  TEST_CASE("json output is byte-stable and round-trips") {
    for (const std::string& args : std::vector<std::string>
         {"roots rcp --h 1/6 --s '3*sqrt(2)' --explain --json", "periods 13 --json --digits 30", "deltas 7 --json",
          "identity named pi_cbrt --json", "seq a198636 --terms 12 --json", "shanks-primes --limit 500 --json",
          "minpoly --h 2 --json", "identity gauss --h -1 --json --digits 30", "oeis-check A198636 --json " + kOffline}) {
      const Run a = cli(args);
      const Run b = cli(args);
      CHECK_MESSAGE(a.code == 0, args);
      CHECK_MESSAGE(a.out == b.out, args);
      CHECK(nlohmann::ordered_json::parse(a.out).dump(2) + "\n" == a.out);
    }
  }

  TEST_CASE("sequence and verify commands") {
    CHECK(cli("seq a198636 --terms 7").out == "3 5 13 38 117 370 1186\n");
    CHECK(cli("seq a198636 --terms 3 --bfile").out == "0 3\n1 5\n2 13\n");
    CHECK(cli("seq walks --n 6 --terms 5").out == "6 0 10 0 26\n");
    CHECK(cli("shanks-primes --limit 139").out == "7 13 19 37 79 97 139\n");
    CHECK(cli("minpoly --h -1").out == "x^3 + x^2 - 2*x - 1\n");
    CHECK(cli("verify '2*cos(2*pi/7) == (1/3)*(-1+2*sqrt(7)*cos((1/3)*arctan(3*sqrt(3))))' --digits 50").code == 0);
    CHECK(cli("verify 'pi == 22/7' --digits 4").code == 1);
  }

  TEST_CASE("oeis-check offline against the bundled fixtures") {
    CHECK(cli("oeis-check A198636 --terms 30 " + kOffline).code == 0);
    CHECK(cli("oeis-check A005471 --limit 100000 " + kOffline).code == 0);
    CHECK(cli("oeis-check Axx " + kOffline).code == 2);
    CHECK(cli("oeis-check A000045 " + kOffline).code == 2);
  }

  TEST_CASE("exit codes") {
    CHECK(cli("").code == 2);
    CHECK(cli("roots").code == 2);
    CHECK(cli("roots scp").code == 2);
    CHECK(cli("verify 'cos('").code == 2);
    CHECK(cli("identity named nope").code == 2);
    CHECK(cli("verify 'sqrt(-1) == 0'").code == 3);
    CHECK(cli("roots rcp --h 1 --s 0").code == 3);
    CHECK(cli("roots cubic 1 0 1 1").code == 3);
    CHECK(cli("periods 15").code == 3);
    CHECK(cli("identity named cos2pi7").code == 0);
    CHECK(cli("--help").code == 0);
  }
}
