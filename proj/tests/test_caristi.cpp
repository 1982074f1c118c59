#include "gmetric/caristi.hpp"
#include "gmetric/explorer.hpp"

#include "doctest.h"
#include "oracle.hpp"

using namespace gmetric;

namespace {

using Labels = std::vector<std::string>;

std::map<std::string, Rational> ten_x() { return {{"1", 10}, {"2", 20}, {"3", 30}, {"4", 40}}; }
std::map<std::string, std::string> to_one() { return {{"1", "1"}, {"2", "1"}, {"3", "1"}, {"4", "4"}}; }

CaristiInstance ex(std::string_view name, CaristiVariant v) {
  return CaristiInstance::make(builtin_space(name), to_one(), ten_x(), v);
}

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return Errc::UsageError;
}

}  // namespace

TEST_CASE("weak condition holds everywhere on the first worked example") {
  const auto rep = condition_report(ex("ex4-1", CaristiVariant::MWeak));
  REQUIRE(rep.size() == 4);
  for (const auto& e : rep) CHECK(e.holds);
  CHECK(rep[1].lhs == 10);
  CHECK(rep[1].rhs == 11);
}

TEST_CASE("strong condition fails at 4 on the first example and holds on the second") {
  const auto ex1 = condition_report(ex("ex4-1", CaristiVariant::MStrong));
  CHECK_FALSE(ex1[3].holds);
  CHECK(ex1[3].lhs == 3);
  CHECK(ex1[3].rhs == 0);
  // The fixed point 1 also fails: m(1,1) = 1 > 0.
  CHECK_FALSE(ex1[0].holds);
  CHECK(ex1[1].holds);
  CHECK(ex1[2].holds);

  const auto ex2 = condition_report(ex("ex4-2", CaristiVariant::MStrong));
  for (const auto& e : ex2) CHECK(e.holds);
  CHECK(ex2[1].lhs == 10);
  CHECK(ex2[1].rhs == 10);
}

TEST_CASE("dominated sets and their infima") {
  const auto inst = ex("ex4-2", CaristiVariant::MWeak);
  const auto s2 = dominated_set(inst, "2");
  CHECK(s2.base == "2");
  CHECK(s2.members == Labels{"1", "2"});
  CHECK(s2.alpha == 10);
  const auto s1 = dominated_set(inst, "1");
  CHECK(s1.members == Labels{"1"});
  CHECK(s1.alpha == 10);
  CHECK(alpha(inst, "2") == 10);
  CHECK(alpha(ex("ex4-1", CaristiVariant::MWeak), "3") == 10);
  // The strong variant walks the same M-form sets.
  CHECK(dominated_set(ex("ex4-2", CaristiVariant::MStrong), "2").members == Labels{"1", "2"});
  CHECK(code_of([&] { (void)dominated_set(inst, "5"); }) == Errc::UnknownLabel);
}

TEST_CASE("iteration from every start of both worked examples reaches 1") {
  for (const char* name : {"ex4-1", "ex4-2"}) {
    const auto inst = ex(name, CaristiVariant::MWeak);
    for (const auto& start : inst.space().points()) {
      const auto trace = caristi_iterate(inst, start, sufficient_steps(inst));
      CAPTURE(name);
      CAPTURE(start);
      CHECK(trace.terminated == Termination::FixedPoint);
      CHECK(trace.points.back() == "1");
      CHECK(trace.points == (start == "1" ? Labels{"1"} : Labels{start, "1"}));
      CHECK(trace.phi_limit == 10);
      CHECK(trace.alpha_values.size() == trace.points.size());
    }
  }
  const auto trace = caristi_iterate(ex("ex4-2", CaristiVariant::MStrong), "2", 5);
  CHECK(trace.points == Labels{"2", "1"});
  CHECK(trace.phi_values == std::vector<Rational>{20, 10});
}

TEST_CASE("iteration without a fixed point on the walk") {
  // phi constant, T swaps: every S(x) is {x}, the walk stalls at a non-fixed point.
  const auto s = FiniteSpace::validate({"a", "b"}, std::vector<std::vector<std::string>>{{"0", "1"}, {"1", "0"}});
  const auto inst = CaristiInstance::make(s, std::vector<PointId>{1, 0}, std::vector<Rational>{0, 0}, CaristiVariant::MWeak);
  const auto trace = caristi_iterate(inst, "a", 3);
  CHECK(trace.terminated == Termination::StabilizedNonFixed);
  CHECK(trace.points == Labels{"a"});
}

TEST_CASE("step budget is reported") {
  // Discrete metric with phi(x) = x.
  std::vector<std::vector<Rational>> t(4, std::vector<Rational>(4, Rational(1)));
  for (std::size_t i = 0; i < 4; ++i) t[i][i] = 0;
  const auto s = oracle::space(t);
  // S(4) = {1,2,3,4}; the minimiser jumps to 1 at once.
  const auto jump = CaristiInstance::make(s, std::vector<PointId>{0, 0, 1, 2}, std::vector<Rational>{1, 2, 3, 4},
                                          CaristiVariant::MWeak);
  CHECK(caristi_iterate(jump, "4", 5).points == Labels{"4", "1"});
  const auto cut = caristi_iterate(jump, "4", 1);
  CHECK(cut.terminated == Termination::StepBudget);
  CHECK(cut.points == Labels{"4", "1"});
  CHECK_THROWS_AS(caristi_iterate(jump, "4", 0), Error);
}

TEST_CASE("fixed points") {
  CHECK(fixed_points(ex("ex4-1", CaristiVariant::MWeak)) == Labels{"1", "4"});
  CHECK(fixed_points(ex("ex4-2", CaristiVariant::MStrong)) == Labels{"1", "4"});
  const auto s = builtin_space("ex4-1");
  std::map<std::string, std::string> id;
  for (const auto& p : s.points()) id[p] = p;
  CHECK(fixed_points(CaristiInstance::make(builtin_space("ex4-1"), id, ten_x(), CaristiVariant::MWeak)) ==
        Labels{"1", "2", "3", "4"});
}

TEST_CASE("theorem checks on the worked examples") {
  const auto t1 = theorem_check(ex("ex4-1", CaristiVariant::MWeak));
  CHECK(t1.hypothesis_holds);
  CHECK(t1.conclusion_holds);
  CHECK_FALSE(t1.strong_extra);
  CHECK(t1.topology_discrete);
  CHECK(t1.hypotheses_fully_verified);

  const auto t2 = theorem_check(ex("ex4-2", CaristiVariant::MStrong));
  CHECK(t2.hypothesis_holds);
  CHECK(t2.conclusion_holds);
  REQUIRE(t2.strong_extra);
  CHECK(*t2.strong_extra);
  CHECK(t2.reachable_fixed_points == Labels{"1"});

  const auto single = FiniteSpace::validate({"x"}, std::vector<std::vector<std::string>>{{"2"}});
  const auto t3 = theorem_check(CaristiInstance::make(single, {{"x", "x"}}, {{"x", 0}}, CaristiVariant::MWeak));
  CHECK(t3.hypothesis_holds);
  CHECK(t3.conclusion_holds);

  // Strong variant on a space without zero self-distances fails its hypothesis.
  CHECK_FALSE(theorem_check(ex("ex4-1", CaristiVariant::MStrong)).hypothesis_holds);
}

TEST_CASE("instance construction errors") {
  const auto s = builtin_space("ex4-1");
  CHECK(code_of([&] { CaristiInstance::make(s, {{"1", "1"}}, ten_x(), CaristiVariant::MWeak); }) == Errc::NonTotalMap);
  CHECK(code_of([&] {
          auto t = to_one();
          t["2"] = "9";
          CaristiInstance::make(s, t, ten_x(), CaristiVariant::MWeak);
        }) == Errc::UnknownLabel);
  CHECK(code_of([&] {
          auto phi = ten_x();
          phi["3"] = -1;
          CaristiInstance::make(s, to_one(), phi, CaristiVariant::MWeak);
        }) == Errc::NegativePotential);
  CHECK(code_of([&] { CaristiInstance::make(s, to_one(), ten_x(), CaristiVariant::PWeak); }) ==
        Errc::VariantSpaceMismatch);
  CHECK(code_of([&] { CaristiInstance::make(builtin_space("three-point"), {{"1", "1"}, {"2", "1"}, {"3", "1"}},
                                            {{"1", 0}, {"2", 0}, {"3", 0}}, CaristiVariant::MWeak); }) ==
        Errc::NotMMetric);
  CHECK(code_of([&] { (void)ex("ex4-1", CaristiVariant::MWeak).with_variant(CaristiVariant::PStrong); }) ==
        Errc::VariantSpaceMismatch);
}

TEST_CASE("partial variants on the max restriction") {
  // p = max on {1,2,3}; T sends everything to 1, phi(x) = 3x.
  const auto s = builtin_space("max-123");
  const auto inst = CaristiInstance::make(s, std::vector<PointId>{0, 0, 0}, std::vector<Rational>{3, 6, 9},
                                          CaristiVariant::PWeak);
  for (const auto& e : condition_report(inst)) CHECK(e.holds);
  // x = 2: p(2,1) = 2 <= p(2,2) + 6 - 3 = 5.
  CHECK(condition_report(inst)[1].rhs == 5);
  CHECK(caristi_iterate(inst, "3", 4).points == Labels{"3", "1"});
  const auto strong = inst.with_variant(CaristiVariant::PStrong);
  CHECK(condition_report(strong)[0].holds == false);  // p(1,1) = 1 > 0
}

TEST_CASE("Ekeland certificate on the second worked example") {
  const auto c = ekeland_point(builtin_space("ex4-2"), ten_x());
  CHECK(c.point_z == "1");
  CHECK(c.strict);
  CHECK_FALSE(c.witness);
  REQUIRE(c.margins.size() == 3);
  CHECK(c.margins[0] == std::pair<std::string, Rational>{"2", 20});
  CHECK(c.margins[1] == std::pair<std::string, Rational>{"3", 27});
  CHECK(c.margins[2] == std::pair<std::string, Rational>{"4", 38});
}

TEST_CASE("Ekeland certificate edge cases") {
  const auto single = FiniteSpace::validate({"x"}, std::vector<std::vector<std::string>>{{"4"}});
  const auto c1 = ekeland_point(single, std::vector<Rational>{7});
  CHECK(c1.strict);
  CHECK(c1.margins.empty());

  const auto two = FiniteSpace::validate({"a", "b"}, std::vector<std::vector<std::string>>{{"0", "0"}, {"0", "1"}});
  const auto c2 = ekeland_point(two, std::vector<Rational>{0, 0});
  CHECK_FALSE(c2.strict);
  REQUIRE(c2.witness);
  REQUIRE(c2.margins.size() == 1);
  CHECK(c2.margins[0].second == 0);
  CHECK_FALSE(oracle::strict_point_exists(oracle::raw(two), {0, 0}));
}

TEST_CASE("Ekeland search agrees with the margin oracle on random M-metric spaces") {
  oracle::TableGen gen(31337);
  int checked = 0;
  for (int i = 0; i < 5000 && checked < 300; ++i) {
    const auto t = gen.table(gen.size(1, 4), 4);
    if (!oracle::is_m_metric(t)) continue;
    ++checked;
    std::vector<Rational> phi(t.size());
    for (auto& v : phi) v = gen.value(0, 4);
    const auto c = ekeland_point(oracle::space(t), phi);
    CHECK(c.strict == oracle::strict_point_exists(t, phi));
    const std::size_t z = std::stoul(c.point_z) - 1;
    for (const auto& [x, m] : c.margins) CHECK(m == oracle::ekeland_margin(t, phi, z, std::stoul(x) - 1));
  }
  CHECK(checked == 300);
}
