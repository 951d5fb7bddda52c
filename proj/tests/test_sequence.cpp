#include <sstream>

#include "doctest.h"
#include "kkb/sequence.hpp"
#include "support.hpp"

using kkb::BoundVariant;
using kkb::Classification;
using kkb::ErrorCode;

namespace {

kkb::SweepRecord row(int n, double bound, double ratio) {
  kkb::SweepRecord r;
  r.n = n;
  r.bound_value = bound;
  r.nontrivial_info = bound < 1.0;
  r.ratio_perfect = ratio;
  return r;
}

}  // namespace

TEST_CASE("connectivity sweep") {
  const auto records = kkb::sweep({"connectivity", 3, 5, 0}, BoundVariant::bell(), 2);
  REQUIRE(records.size() == 3);
  CHECK(records[0].n == 3);
  CHECK(records[0].min_count == 3u);
  CHECK(records[1].min_count == 16u);
  CHECK(records[2].min_count == 125u);
  CHECK(records[0].dim_unrestricted == 2);
  CHECK_FALSE(records[2].dim_unrestricted.has_value());
  CHECK_FALSE(records[2].errors.empty());
  REQUIRE(records[0].sigma_empty_at.size() == 3);
  CHECK(records[0].sigma_empty_at[0] == true);
  CHECK(records[0].sigma_empty_at[1] == false);

  const auto nc = kkb::necessary_conditions_report(records, BoundVariant::bell());
  CHECK(nc.min_count_strictly_increasing);
  CHECK(nc.contradictions.empty());
  CHECK(kkb::information_classification(records).kind == Classification::Kind::never_nontrivial);
}

TEST_CASE("sweep edge cases") {
  CHECK(kkb::sweep({"triangle", 5, 3, 0}, BoundVariant::bell(), 1).empty());
  CHECK_ERROR_CODE(kkb::sweep({"nope", 3, 4, 0}, BoundVariant::bell(), 1), ErrorCode::InvalidArgument);
  CHECK_ERROR_CODE(kkb::sweep({"triangle", 3, 4, 0}, BoundVariant::bell(), -1), ErrorCode::InvalidArgument);
  const auto rows = kkb::sweep({"connectivity", 2, 3, 0}, BoundVariant::bell(), 0);
  REQUIRE(rows.size() == 2);
  CHECK_FALSE(rows[0].errors.empty());
  CHECK_FALSE(rows[0].q.has_value());
  CHECK(rows[1].q.has_value());
}

TEST_CASE("principal sweep is never nontrivial") {
  const auto records = kkb::sweep({"principal", 1, 6, 0}, BoundVariant::bell(), 1);
  CHECK(kkb::information_classification(records).kind == Classification::Kind::never_nontrivial);
}

TEST_CASE("classification on synthetic rows") {
  const std::vector<kkb::SweepRecord> perfect = {row(1, 2.0, 0.5), row(2, 0.9, 0.4), row(3, 0.8, 0.3),
                                                 row(4, 0.7, 0.2)};
  const auto c = kkb::information_classification(perfect);
  CHECK(c.kind == Classification::Kind::perfect_trend);
  CHECK(c.from_n == 2);

  const std::vector<kkb::SweepRecord> flat = {row(1, 2.0, 0.5), row(2, 0.9, 0.4), row(3, 0.8, 0.4),
                                              row(4, 0.7, 0.4)};
  CHECK(kkb::information_classification(flat).kind == Classification::Kind::nontrivial_from_n);

  const std::vector<kkb::SweepRecord> mixed = {row(1, 0.5, 0.5), row(2, 1.5, 0.4), row(3, 1.2, 0.3)};
  CHECK(kkb::information_classification(mixed).kind == Classification::Kind::inconclusive);

  CHECK_ERROR_CODE(kkb::information_classification(std::vector<kkb::SweepRecord>(perfect.begin(), perfect.begin() + 2)),
                   ErrorCode::TooFewRecords);
  CHECK_ERROR_CODE(kkb::necessary_conditions_report(std::vector<kkb::SweepRecord>{}, BoundVariant::bell()),
                   ErrorCode::EmptyInput);
}

TEST_CASE("csv layout") {
  const auto records = kkb::sweep({"singletons", 2, 3, 0}, BoundVariant::bell(), 1);
  const auto csv = kkb::sweep_csv(records, 1);
  std::istringstream in(csv);
  std::string header;
  std::getline(in, header);
  CHECK(header == "n,min_count,ell0,ell,dim_u,dim_f,q,p_c,bound,width,nontrivial,ratio,sigma_empty_t0,sigma_empty_t1");
  std::string first;
  std::getline(in, first);
  CHECK(first.rfind("2,2,1,2,2,2,0.25", 0) == 0);
  CHECK(csv == kkb::sweep_csv(kkb::sweep({"singletons", 2, 3, 0}, BoundVariant::bell(), 1), 1));
}
