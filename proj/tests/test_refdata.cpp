#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <tuple>

#include "kgsolve/error.hpp"
#include "kgsolve/hulthen.hpp"
#include "kgsolve/nu_core.hpp"
#include "kgsolve/refdata.hpp"
#include "kgsolve/verify.hpp"

using namespace kgsolve;
using namespace kgsolve::refdata;

namespace {

const ReferenceRow& find_row(const std::vector<ReferenceRow>& rows, ConfigKey key) {
  const auto it = std::find_if(rows.begin(), rows.end(), [&](const auto& r) { return r.key == key; });
  REQUIRE(it != rows.end());
  return *it;
}

}  // namespace

TEST_CASE("table contents") {
  const auto one = load_table(TableId::I, Source::ours);
  std::set<double> couplings;
  for (const auto& r : one) {
    CHECK(r.key.V0 == r.key.S0);
    CHECK(r.key.m0 == 1.0);
    CHECK(r.key.m1 == 0.0);
    couplings.insert(r.key.V0);
  }
  CHECK(couplings == std::set<double>{1, 2, 3, 6});

  const auto& dash = find_row(one, {1, 0, 2, 2, 2, 2});
  CHECK_FALSE(dash.e_a);
  CHECK_FALSE(dash.e_p);

  const auto two = load_table(TableId::II);
  std::vector<ReferenceRow> first;
  std::copy_if(two.begin(), two.end(), std::back_inserter(first), [](const auto& r) {
    return r.key.m1 == 0.1 && r.key.m0 == 5 && r.key.V0 == 1 && r.key.S0 == 1;
  });
  CHECK(first.size() == 9);
  CHECK(two.front().key == first.front().key);
}

TEST_CASE("configuration keys are unique per table and source") {
  for (auto id : {TableId::I, TableId::II}) {
    std::set<std::tuple<double, double, double, double, int, int, int>> seen;
    for (const auto& r : load_table(id)) {
      const auto key = std::make_tuple(r.key.m0, r.key.m1, r.key.V0, r.key.S0, r.key.n, r.key.l,
                                       static_cast<int>(r.source));
      CHECK_MESSAGE(seen.insert(key).second, "duplicate key in table " << to_string(id));
    }
  }
}

TEST_CASE("serialization round trip is lossless") {
  for (auto id : {TableId::I, TableId::II}) {
    const auto rows = load_table(id);
    const std::string text = serialize_table_csv(rows);
    const auto back = parse_table_csv(text, id);
    REQUIRE(back.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      CHECK(back[i].key == rows[i].key);
      CHECK(back[i].source == rows[i].source);
      CHECK(back[i].note == rows[i].note);
      for (auto member : {&ReferenceRow::e_a, &ReferenceRow::e_p}) {
        REQUIRE((back[i].*member).has_value() == (rows[i].*member).has_value());
        if (rows[i].*member) CHECK((back[i].*member)->text() == (rows[i].*member)->text());
      }
    }
    CHECK(serialize_table_csv(back) == text);
  }
}

TEST_CASE("printed values keep their digits") {
  const auto v = PrintedValue::parse("-0.2149410");
  CHECK(v.decimals == 7);
  CHECK(v.text() == "-0.2149410");
  CHECK(PrintedValue::parse("4.613920").text() == "4.613920");
  CHECK_THROWS_AS(PrintedValue::parse("abc"), Error);
}

TEST_CASE("malformed csv") {
  CHECK_THROWS_AS(parse_table_csv("m0,m1\n1,2\n", TableId::I), Error);
  CHECK_THROWS_AS(parse_table_csv("m0,m1,V0,S0,n,l,e_a,e_p,source,note\n1,0,1,1,x,0,,,ours,\n",
                                  TableId::I),
                  Error);
  CHECK(parse_source("ref33") == Source::ref33_34);
  CHECK(parse_table_id("2") == TableId::II);
  CHECK_THROWS_AS(parse_table_id("III"), Error);
}

TEST_CASE("reference columns agree with our column") {
  const auto rows = load_table(TableId::I);
  for (const auto& r : rows) {
    if (r.source == Source::ours) continue;
    const auto& ours = find_row(load_table(TableId::I, Source::ours), r.key);
    for (auto member : {&ReferenceRow::e_a, &ReferenceRow::e_p}) {
      if (!(r.*member) || !(ours.*member)) continue;
      const double gap = std::abs((r.*member)->value - (ours.*member)->value);
      if (!r.note.empty()) {
        MESSAGE("noted row " << r.note << " gap " << gap);
        continue;
      }
      CHECK(gap <= 1e-6 + 1e-12);
    }
  }
}

TEST_CASE("compare") {
  const auto one = load_table(TableId::I, Source::ours);
  const ConfigKey first{1, 0, 1, 1, 1, 0};
  const auto& row = find_row(one, first);
  const auto rec = compare(first, hulthen::energy_levels(first.params(), first.qn()), row, 1e-6);
  CHECK(rec.pass);
  CHECK(*rec.diff_a < 1e-12);

  const ConfigKey dash{1, 0, 1, 1, 1, 1};
  const auto both_absent = compare(dash, std::nullopt, find_row(one, dash), 1e-6);
  CHECK(both_absent.pass);
  CHECK(both_absent.absence_agree);

  const auto spurious = compare(dash, hulthen::energy_levels(first.params(), first.qn()),
                                find_row(one, dash), 1e-6);
  CHECK_FALSE(spurious.pass);
  CHECK_FALSE(spurious.absence_agree);

  CHECK_THROWS_AS(compare(dash, std::nullopt, row, 1e-6), Error);

  const auto two = load_table(TableId::II);
  const ConfigKey typo{5, 0.1, -1, 1, 3, 0};
  const auto& typo_row = find_row(two, typo);
  REQUIRE(typo_row.suspected_typo() == Column::e_p);
  const auto t = compare(typo, hulthen::energy_levels(typo.params(), typo.qn()), typo_row, 1e-5);
  CHECK_FALSE(t.pass);
  REQUIRE(t.symmetric);
  CHECK(std::abs(*t.symmetric - 4.613290) < 5e-6);
  CHECK(t.annotation.find("charge-conjugate") != std::string::npos);

  const ConfigKey typo2{5, 0.1, -1, 1, 3, 3};
  const auto t2 = compare(typo2, hulthen::energy_levels(typo2.params(), typo2.qn()),
                          find_row(two, typo2), 1e-5);
  REQUIRE(t2.symmetric);
  CHECK(std::abs(*t2.symmetric + 4.484330) < 5e-6);
}

TEST_CASE("dash entries have negative discriminant") {
  for (const auto& r : load_table(TableId::I, Source::ours)) {
    if (r.e_a) continue;
    const auto q = hulthen::quantization_quadratic(r.key.params(), r.key.qn());
    CHECK(q.B * q.B - 4 * q.A * q.C < 0.0);
  }
}

TEST_CASE("tabulated roots satisfy the solvability conditions") {
  const auto states = verify::tabulated_states(false);
  CHECK(states.size() > 80);
  for (const auto& st : states) {
    if (!st.valid) continue;
    const auto np = hulthen::build_nu_problem(st.energy, st.params, st.qn);
    CHECK(std::abs(nu::quantization_residual(np, st.qn.n)) < 1e-8);
    CHECK(nu::tau_slope(np) < 0.0);
  }
}
