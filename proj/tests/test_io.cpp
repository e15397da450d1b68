#include <gtest/gtest.h>

#include "conres/io.hpp"

using conres::GradedDims;
using conres::View;
namespace io = conres::io;

namespace {

const conres::Resolution& shared() {
  static const conres::Resolution r;
  return r;
}

}  // namespace

TEST(PolyJson, RoundTripAndOrder) {
  const auto p = GradedDims::from_terms({{5, 2}, {-1, 1}, {3, -4}});
  const auto j = io::poly_to_json(p);
  EXPECT_EQ(j.dump(), "[[-1,1],[3,-4],[5,2]]");
  EXPECT_EQ(io::poly_from_json<conres::TVariable>(j), p);
  EXPECT_EQ(io::poly_to_csv(p), "exponent,coefficient\n-1,1\n3,-4\n5,2\n");
}

TEST(TableJson, SchemaFields) {
  const auto doc = io::make_document(shared().spectral_table(4), View::homological);
  const auto j = io::table_to_json(doc);
  EXPECT_EQ(j.at("n"), 4);
  EXPECT_EQ(j.at("view"), "hom");
  bool found = false;
  for (const auto& c : j.at("cells")) {
    if (c.at("p") == 2 && c.at("q") == 5) {
      found = true;
      EXPECT_EQ(c.at("rank"), 3);
      EXPECT_EQ(c.at("blocks").at("3"), 2);
      EXPECT_EQ(c.at("blocks").at("2,2"), 1);
    }
  }
  EXPECT_TRUE(found);
}

TEST(TableJson, RoundTrip) {
  for (int n = 2; n <= 6; ++n)
    for (View v : {View::homological, View::cohomological}) {
      const auto doc = io::make_document(shared().spectral_table(n), v);
      EXPECT_EQ(io::table_from_json(nlohmann::json::parse(io::table_to_json(doc).dump())), doc);
    }
}

TEST(TableCsv, SameCellsAsJson) {
  for (int n = 2; n <= 6; ++n)
    for (View v : {View::homological, View::cohomological})
      for (bool total : {false, true}) {
        const auto doc = io::make_document(shared().spectral_table(n), v);
        EXPECT_EQ(io::table_from_csv(io::table_to_csv(doc, total), n, v, total), io::table_from_json(io::table_to_json(doc)));
      }
}

TEST(TableCsv, HeaderAndRows) {
  const auto doc = io::make_document(shared().spectral_table(3), View::homological);
  EXPECT_EQ(io::table_to_csv(doc), "p,q,block,rank\n1,1,\"2\",1\n1,3,\"2\",1\n1,5,\"2\",1\n2,2,\"3\",1\n2,4,\"3\",1\n");
  EXPECT_THROW(io::table_from_csv("p,q,block,rank\n1,2,3\n", 3, View::homological), conres::DomainError);
}

TEST(TableMarkdown, SplitsColumnsByBlock) {
  const auto md = io::table_to_markdown(io::make_document(shared().spectral_table(4), View::homological));
  EXPECT_NE(md.find("| 5 |  | 2 + 1 | "), std::string::npos) << md;
  EXPECT_NE(md.find("p = 2: (3) + (2,2)"), std::string::npos) << md;
}

TEST(Views, Names) {
  EXPECT_EQ(io::parse_view(io::view_name(View::cohomological)), View::cohomological);
  EXPECT_THROW(io::parse_view("both"), conres::DomainError);
}

TEST(VerifyJson, Shape) {
  const auto j = io::verify_to_json(shared().verify(3));
  EXPECT_TRUE(j.at("ok").get<bool>());
  EXPECT_EQ(j.at("checks").size(), 5u);
  EXPECT_EQ(j.at("checks").at(0).at("status"), "passed");
}
