#include "doctest.h"
#include "support.hpp"

using namespace pcr;
using namespace pcr::test;

TEST_CASE("validation accepts a normalized bba and merges equivalent keys") {
  auto m = shafer({"A", "B"});
  Bba b = bba(m, {{"A", 0.3}, {"A&(A|B)", 0.2}, {"A|B", 0.5}});
  CHECK(b.masses().size() == 2);
  CHECK(b.mass(el(*m, "A")) == doctest::Approx(0.5));
}

TEST_CASE("validation errors carry their kind and value") {
  auto m = shafer({"A", "B"});
  try {
    bba(m, {{"A", 0.6}, {"B", 0.6}});
    FAIL("expected NotNormalized");
  } catch (const BbaError& e) {
    CHECK(e.kind() == BbaError::Kind::NotNormalized);
    CHECK(e.value() == doctest::Approx(1.2));
    CHECK(std::string(e.what()).find("NotNormalized") != std::string::npos);
  }
  try {
    bba(m, {{"A", 1.2}, {"B", -0.2}});
    FAIL("expected NegativeMass");
  } catch (const BbaError& e) {
    CHECK(e.kind() == BbaError::Kind::NegativeMass);
  }
  try {
    bba(m, {{"A", 0.5}, {"A&B", 0.5}});
    FAIL("expected MassOnEmpty");
  } catch (const BbaError& e) {
    CHECK(e.kind() == BbaError::Kind::MassOnEmpty);
  }
  CHECK_THROWS_AS(bba(m, {{"A", 0.5}, {"∅", 0.5}}), BbaError);
}

TEST_CASE("open world admits mass on the empty set") {
  auto m = std::make_shared<Model>(frame_of({"A", "B"}), Model::Kind::Shafer, std::vector<Element>{},
                                   Model::World::Open);
  Bba b = bba(m, {{"A", 0.5}, {"∅", 0.5}});
  CHECK(b.mass(Element::void_set()) == doctest::Approx(0.5));
}

TEST_CASE("float dust is pruned but the sum tolerance still applies") {
  auto m = shafer({"A", "B"});
  Bba b = bba(m, {{"A", 1.0 - 1e-13}, {"B", 1e-13}});
  CHECK(b.masses().size() == 1);
  CHECK_THROWS_AS(bba(m, {{"A", 1.0 - 1e-8}}), BbaError);
}

TEST_CASE("free model elements") {
  auto m = free_model({"A", "B"});
  Bba b = bba(m, {{"A&B", 0.4}, {"A", 0.6}});
  CHECK(b.mass(el(*m, "A&B")) == doctest::Approx(0.4));
}

TEST_CASE("column sums") {
  auto m = shafer({"A", "B"});
  auto mm = matrix(m, {{{"A", 0.7}, {"B", 0.1}, {"A|B", 0.2}}, {{"A", 0.5}, {"B", 0.4}, {"A|B", 0.1}}});
  CHECK(column_sum(mm, el(*m, "A")) == doctest::Approx(1.2));
  CHECK(column_sum(mm, el(*m, "B")) == doctest::Approx(0.5));
  auto mv = matrix(m, {{{"A", 0.7}, {"B", 0.1}, {"A|B", 0.2}},
                       {{"A", 0.5}, {"B", 0.4}, {"A|B", 0.1}},
                       {{"A|B", 1.0}}});
  CHECK(column_sum(mv, el(*m, "A|B")) == doctest::Approx(1.3));
  CHECK(column_sum(mv, el(*m, "A&B")) == 0.0);
}

TEST_CASE("conflict ledger of Zadeh's example") {
  auto m = shafer({"A", "B", "C"});
  auto mm = matrix(m, {{{"A", 0.9}, {"C", 0.1}}, {{"B", 0.9}, {"C", 0.1}}});
  auto ledger = conflict_ledger(mm);
  CHECK(ledger.total == doctest::Approx(0.99));
  CHECK(ledger.partial.size() == 3);
  CHECK(ledger.partial.at(el(*m, "A&B")) == doctest::Approx(0.81));
  CHECK(ledger.partial.at(el(*m, "A&C")) == doctest::Approx(0.09));
  CHECK(ledger.partial.at(el(*m, "B&C")) == doctest::Approx(0.09));
  CHECK(ledger.involved.count(el(*m, "A")));
  CHECK(ledger.involved.count(el(*m, "C")));
  double sum = 0;
  for (const auto& t : ledger.terms) sum += t.product;
  CHECK(sum == doctest::Approx(0.99));
}

TEST_CASE("conflict ledger of a Bayesian triple") {
  auto m = shafer({"A", "B", "C"});
  auto mm = matrix(m, {{{"A", 0.6}, {"B", 0.3}, {"C", 0.1}}, {{"A", 0.4}, {"B", 0.4}, {"C", 0.2}}});
  auto ledger = conflict_ledger(mm);
  CHECK(ledger.total == doctest::Approx(0.62));
  CHECK(ledger.partial.at(el(*m, "A&B")) == doctest::Approx(0.36));
  CHECK(ledger.partial.at(el(*m, "A&C")) == doctest::Approx(0.16));
  CHECK(ledger.partial.at(el(*m, "B&C")) == doctest::Approx(0.10));
}

TEST_CASE("involvement excludes the total ignorance") {
  auto m = shafer({"A", "B"});
  std::vector<Element> d{el(*m, "A"), el(*m, "B"), el(*m, "A|B")};
  std::sort(d.begin(), d.end());
  auto inv = involved_factors(d, *m);
  CHECK(inv.size() == 2);
  CHECK(std::find(inv.begin(), inv.end(), el(*m, "A|B")) == inv.end());
}

TEST_CASE("involvement keeps both members of a nested pair") {
  // C ∩ (A ∪ B): neither contains the other, both take part.
  auto m = shafer({"A", "B", "C"});
  std::vector<Element> d{el(*m, "C"), el(*m, "A|B")};
  std::sort(d.begin(), d.end());
  CHECK(involved_factors(d, *m).size() == 2);
}

TEST_CASE("exact conversion of short decimals") {
  CHECK(from_double<Rational>(0.1) == ratio(1, 10));
  CHECK(from_double<Rational>(0.123456) == ratio(123456, 1000000));
  CHECK_FALSE(is_short_decimal(1.0 / 3.0));
  auto m = shafer({"A", "B"});
  auto mm = matrix(m, {{{"A", 0.7}, {"B", 0.3}}});
  CHECK(short_decimal(mm));
  auto q = exact(mm);
  CHECK(q.column_sum(el(*m, "A")) == ratio(7, 10));
}
