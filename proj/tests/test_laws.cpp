#include <catch_amalgamated.hpp>

#include "specker/laws.hpp"

using namespace specker;

TEST_CASE("full sweep on a reduced universe") {
  for (const auto& r : laws::run_all({2, 3, 7})) {
    INFO(r.name << ": " << (r.messages.empty() ? std::string() : r.messages.front()));
    CHECK(r.checked > 0);
    CHECK(r.pass());
  }
}

TEST_CASE("law results record failures") {
  laws::LawResult r("probe");
  r.check(true, "never");
  r.check(false, "first");
  r.check(false, "second");
  CHECK(r.checked == 3);
  CHECK(r.failures == 2);
  CHECK(r.messages.size() == 2);
  CHECK_FALSE(r.pass());
}

TEST_CASE("brute-force membership search") {
  using omega::ECSeq;
  const std::vector<ECSeq> gens{ECSeq({2}, 0), ECSeq({0, 3}, 0)};
  const auto found = laws::membership_by_search(ECSeq({4, -3}, 0), gens, 5);
  REQUIRE(found);
  CHECK(omega::combination(gens, *found) == ECSeq({4, -3}, 0));
  CHECK_FALSE(laws::membership_by_search(ECSeq({1}, 0), gens, 5));
}

TEST_CASE("closed-form hyperarchimedean index") {
  const SpeckerGroup g(new_space({"a", "b"}, {1, 1}));
  CHECK(laws::hyperarch_closed_form(GroupElement(g, {1, 0}), GroupElement(g, {3, 2})) == 3);
  CHECK(laws::hyperarch_closed_form(GroupElement(g, {2, 3}), GroupElement(g, {3, 2})) == 2);
  CHECK(laws::hyperarch_closed_form(GroupElement(g, {0, 0}), GroupElement(g, {3, 2})) == 0);
}
