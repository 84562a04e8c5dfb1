#include <doctest.h>

#include <filesystem>

#include "loopkit/certificate.hpp"
#include "loopkit/enumerate.hpp"
#include "loopkit/error.hpp"
#include "loopkit/io.hpp"
#include "loopkit/reduct.hpp"
#include "oracles.hpp"

using namespace loopkit;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::InternalInvariantViolation;
}

bool check_named(const VerificationReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return c.ok;
  FAIL("missing check " << name);
  return false;
}

}  // namespace

TEST_CASE("loop text parses with comments and round trips") {
  const CayleyTable t = parse_loop_text("# comment\nloop 3\n0 1 2\n1 2 0  \n2 0 1\n");
  CHECK(t == oracle::cyclic(3));
  CHECK(parse_loop_text(serialize_loop(t)) == t);
  for (const auto& l : enumerate_loops(5, LoopFilter::All, true))
    CHECK(parse_loop_text(serialize_loop(l.table())) == l.table());
}

TEST_CASE("loop text errors") {
  CHECK(code_of([] { parse_loop_text("loop 2\n0 1\n"); }) == Errc::ParseError);
  CHECK(code_of([] { parse_loop_text("loop 2\n0 1\n1 x\n"); }) == Errc::ParseError);
  CHECK(code_of([] { parse_loop_text("lop 2\n0 1\n1 0\n"); }) == Errc::ParseError);
  CHECK(code_of([] { parse_loop_text("loop 2\n0 1\n1 2\n"); }) == Errc::ParseError);
  CHECK(code_of([] { read_loop_file("/nonexistent/file.loop"); }) == Errc::ParseError);
}

TEST_CASE("element lists") {
  CHECK(parse_element_list("0,3", 6) == std::vector<Elem>{0, 3});
  CHECK(code_of([] { parse_element_list("0,9", 6); }) == Errc::ParseError);
  CHECK(code_of([] { parse_element_list("0,,1", 6); }) == Errc::ParseError);
}

TEST_CASE("every fixture is a valid loop") {
  std::size_t count = 0;
  for (const auto& entry : std::filesystem::directory_iterator(LOOPKIT_FIXTURES_DIR)) {
    if (entry.path().extension() != ".loop") continue;
    const FiniteLoop l = read_loop_file(entry.path());
    CHECK(oracle::is_loop(l.table()));
    ++count;
  }
  CHECK(count >= 8);
}

TEST_CASE("certificates round trip through JSON and verify") {
  for (const auto& l : enumerate_loops(6, LoopFilter::NilpotentNonassociative, true)) {
    const CertificateDocument doc = document_from(build_reduct(l));
    const std::string text = serialize_certificate(doc);
    CHECK(text.back() == '\n');
    const CertificateDocument back = parse_certificate(text);
    CHECK(serialize_certificate(back) == text);
    const VerificationReport r = verify_certificate(back, l.table());
    CHECK(r.ok());
    CHECK(r.checks.size() == 11);
  }
}

TEST_CASE("verifier rejects tampered certificates") {
  const FiniteLoop l = enumerate_loops(6, LoopFilter::NilpotentNonassociative, true).front();
  const CertificateDocument good = document_from(build_reduct(l));

  SUBCASE("corrupted star entry") {
    CertificateDocument bad = good;
    bad.final_star.at(1, 1) = bad.final_star(1, 2);
    const VerificationReport r = verify_certificate(bad, l.table());
    CHECK_FALSE(r.ok());
    CHECK_FALSE(check_named(r, "final star is a loop"));
  }
  SUBCASE("root redirected to a variable") {
    CertificateDocument bad = good;
    bad.root = TermDag::kX;
    const VerificationReport r = verify_certificate(bad, l.table());
    CHECK_FALSE(r.ok());
    CHECK_FALSE(check_named(r, "term evaluates to the final star"));
  }
  SUBCASE("wrong input") {
    const VerificationReport r = verify_certificate(good, oracle::cyclic(6));
    CHECK_FALSE(r.ok());
  }
  SUBCASE("series that is not central") {
    CertificateDocument bad = good;
    bad.series[1] = {0, 1, 2};
    CHECK_FALSE(verify_certificate(bad, l.table()).ok());
  }
}

TEST_CASE("malformed certificate JSON") {
  CHECK(code_of([] { parse_certificate("{"); }) == Errc::ParseError);
  CHECK(code_of([] { parse_certificate("{\"order\": 3}"); }) == Errc::ParseError);
}
