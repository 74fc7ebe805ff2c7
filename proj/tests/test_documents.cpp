#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "tqft/catalog.hpp"
#include "tqft/documents.hpp"

using namespace tqft;

namespace {

std::string read_data(const std::string& rel) {
  std::ifstream in(std::string(TQFT_DATA_DIR) + "/" + rel);
  EXPECT_TRUE(in) << rel;
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string field_of(const std::string& text) {
  try {
    parse_algebra_document(text);
  } catch (const ParseError& e) {
    return e.field();
  }
  return "";
}

const char* kZ2 = R"({
  "name": "Z2", "dim": 2, "basis": ["1", "x"],
  "mult": [[[1, 0], [0, 1]], [[0, 1], [1, 0]]],
  "unit": [1, 0], "counit": [1, 0]
})";

std::string replace(std::string s, const std::string& from, const std::string& to) {
  s.replace(s.find(from), from.size(), to);
  return s;
}

}  // namespace

TEST(AlgebraDocument, ParsesInlineDocument) {
  const AlgebraDocument doc = parse_algebra_document(kZ2);
  EXPECT_EQ(doc.algebra, catalog::z2_group_algebra());
  EXPECT_FALSE(doc.comult_given);
  EXPECT_FALSE(doc.extended);
}

TEST(AlgebraDocument, RationalStrings) {
  const AlgebraDocument doc = parse_algebra_document(replace(kZ2, R"("counit": [1, 0])", R"("counit": ["1", "1/2"])"));
  EXPECT_EQ(doc.algebra.counit()(0, 1), Rational(mpz_class(1), mpz_class(2)));
  EXPECT_EQ(field_of(replace(kZ2, R"("counit": [1, 0])", R"("counit": [1, "1/0"])")), "counit[1]");
  EXPECT_EQ(field_of(replace(kZ2, R"("counit": [1, 0])", R"("counit": [1, "1/-2"])")), "counit[1]");
  EXPECT_EQ(field_of(replace(kZ2, R"("counit": [1, 0])", R"("counit": [1, 0.5])")), "counit[1]");
}

TEST(AlgebraDocument, ErrorsNameTheField) {
  EXPECT_EQ(field_of(replace(kZ2, R"(, "counit": [1, 0])", "")), "counit");
  EXPECT_EQ(field_of(replace(kZ2, R"("name": "Z2", )", "")), "name");
  EXPECT_EQ(field_of(replace(kZ2, R"("dim": 2)", R"("dim": 0)")), "dim");
  EXPECT_EQ(field_of(replace(kZ2, R"("unit": [1, 0])", R"("unit": [1])")), "unit");
  EXPECT_EQ(field_of(replace(kZ2, R"([[0, 1], [1, 0]]],)", R"([[0, 1], [1]]],)")), "mult[1][1]");
  EXPECT_EQ(field_of(replace(kZ2, R"("basis": ["1", "x"])", R"("basis": ["1", "1"])")), "basis");
  EXPECT_EQ(field_of("{not json"), "json");
  EXPECT_EQ(field_of(replace(kZ2, "\n}", R"(, "extended": {"theta": [0, 0]}})")), "extended.phi");
  EXPECT_EQ(field_of(replace(kZ2, "\n}", R"(, "comult": [[[1, 0], [0, 1]]]})")), "comult");
  try {
    parse_algebra_document(replace(kZ2, R"(, "counit": [1, 0])", ""));
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("counit"), std::string::npos);
  }
}

TEST(AlgebraDocument, ExplicitComultIsKept) {
  const AlgebraDocument doc = parse_algebra_document(read_data("algebras/D.json"));
  EXPECT_TRUE(doc.comult_given);
  EXPECT_EQ(doc.algebra, catalog::dual_numbers());
}

TEST(AlgebraDocument, DataFilesMatchCatalog) {
  EXPECT_EQ(parse_algebra_document(read_data("algebras/K.json")).algebra, catalog::ground_field());
  EXPECT_EQ(parse_algebra_document(read_data("algebras/Z2.json")).algebra, catalog::z2_group_algebra());
  EXPECT_EQ(parse_algebra_document(read_data("algebras/KxK.json")).algebra, catalog::split_algebra());

  const std::vector<std::pair<std::string, ExtendedFrobeniusAlgebra>> ext = {
      {"algebras/K_theta_plus.json", catalog::ground_field_extended(1)},
      {"algebras/K_theta_minus.json", catalog::ground_field_extended(-1)},
      {"algebras/Z2_ext.json", catalog::z2_extended()},
      {"algebras/KxK_ext.json", catalog::split_extended()},
  };
  for (const auto& [file, expected] : ext) {
    const AlgebraDocument doc = parse_algebra_document(read_data(file));
    ASSERT_TRUE(doc.extended) << file;
    EXPECT_EQ(doc.extended->base(), expected.base()) << file;
    EXPECT_EQ(doc.extended->involution(), expected.involution()) << file;
    EXPECT_EQ(doc.extended->point(), expected.point()) << file;
  }
}

TEST(AlgebraDocument, RoundTripPreservesStructure) {
  std::vector<FrobeniusAlgebra> algebras = catalog::battery();
  for (const auto& a : catalog::battery())
    for (const auto& b : catalog::battery()) algebras.push_back(tensor(a, b));
  // Non-integer and large entries go through the string form.
  const FrobeniusAlgebra z = catalog::z2_group_algebra();
  algebras.emplace_back("Z2q", z.basis(), z.mult(), z.unit(),
                        Matrix::row({Rational(mpz_class(3), mpz_class(7)), Rational(mpz_class("123456789012345678901234567890"), 1)}));
  for (const auto& a : algebras) {
    const std::string text = write_algebra_document(a);
    const AlgebraDocument back = parse_algebra_document(text);
    EXPECT_EQ(back.algebra, a) << text;
    EXPECT_TRUE(back.comult_given);
    EXPECT_EQ(write_algebra_document(back.algebra), text);
  }
  for (const auto& e : catalog::extended_battery()) {
    const AlgebraDocument back = parse_algebra_document(write_algebra_document(e.base(), &e));
    ASSERT_TRUE(back.extended);
    EXPECT_EQ(back.extended->involution(), e.involution());
    EXPECT_EQ(back.extended->point(), e.point());
  }
}

TEST(AlgebraDocument, WriterLayout) {
  const std::string text = write_algebra_document(catalog::dual_numbers());
  EXPECT_EQ(text, read_data("algebras/D.json"));
}

TEST(MorphismDocument, ParseAndRoundTrip) {
  const MorphismDocument doc = parse_morphism_document(read_data("morphisms/Z2_phi.json"));
  EXPECT_EQ(doc.source, "Z2");
  EXPECT_EQ(doc.target, "Z2");
  EXPECT_EQ(doc.map, (Matrix{{1, 0}, {0, -1}}));
  const MorphismDocument back = parse_morphism_document(write_morphism_document(doc));
  EXPECT_EQ(back.map, doc.map);
  EXPECT_EQ(back.source, doc.source);
  EXPECT_THROW(parse_morphism_document(R"({"source": "Z2", "map": [[1]]})"), ParseError);
  EXPECT_THROW(parse_morphism_document(R"({"source": "A", "target": "B", "map": [[1, 2], [3]]})"), ParseError);
}

TEST(PhiDocument, AcceptsEitherKey) {
  EXPECT_EQ(parse_phi_document(R"({"phi": [[1, 0], [0, -1]]})"), (Matrix{{1, 0}, {0, -1}}));
  EXPECT_EQ(parse_phi_document(read_data("morphisms/Z2_phi.json")), (Matrix{{1, 0}, {0, -1}}));
  EXPECT_THROW(parse_phi_document(R"({"psi": [[1]]})"), ParseError);
}
