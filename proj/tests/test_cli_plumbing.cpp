#include <gtest/gtest.h>

#include <complex>

#include "energized/json_io.hpp"
#include "energized/parse.hpp"
#include "energized/presets.hpp"
#include "energized/svg.hpp"

using namespace energized;
using C = std::complex<double>;

TEST(ScalarLiterals, AllForms) {
  EXPECT_EQ(parse_scalar<double>("1.5"), 1.5);
  EXPECT_EQ(parse_scalar<double>(" -2 "), -2.0);
  EXPECT_EQ(parse_scalar<C>("2+3i"), C(2, 3));
  EXPECT_EQ(parse_scalar<C>("-i"), C(0, -1));
  EXPECT_EQ(parse_scalar<C>("4"), C(4, 0));
  EXPECT_EQ(parse_scalar<Quaternion>("1+2i+3j+4k"), Quaternion(1, 2, 3, 4));
  EXPECT_EQ(parse_scalar<Quaternion>("k - 0.5"), Quaternion(-0.5, 0, 0, 1));
  EXPECT_EQ(parse_scalar<Octonion>("o(1,2,3,4,5,6,7,8)"), Octonion(std::array<double, 8>{1, 2, 3, 4, 5, 6, 7, 8}));
  EXPECT_EQ(parse_scalar<Octonion>("2j"), Octonion(Quaternion(0, 0, 2, 0), Quaternion()));
  EXPECT_EQ(parse_scalar<GaussianRational>("q(3/4+1/4i)"), GaussianRational(mpq_class(3, 4), mpq_class(1, 4)));
  EXPECT_EQ(parse_scalar<GaussianRational>("-2/6i"), GaussianRational(0, mpq_class(-1, 3)));
  EXPECT_EQ(parse_scalar<GaussianRational>("5"), GaussianRational(5));
}

TEST(ScalarLiterals, Errors) {
  EXPECT_THROW(parse_scalar<double>("2+3i"), ParseError);
  EXPECT_THROW(parse_scalar<C>("1+j"), ParseError);
  EXPECT_THROW(parse_scalar<double>(""), ParseError);
  EXPECT_THROW(parse_scalar<double>("1x"), ParseError);
  EXPECT_THROW(parse_scalar<C>("1+2i+3i"), ParseError);
  EXPECT_THROW(parse_scalar<Octonion>("o(1,2,3)"), ParseError);
  EXPECT_THROW(parse_scalar<GaussianRational>("0.5"), ParseError);
  EXPECT_THROW(parse_scalar<GaussianRational>("1/0"), ParseError);
}

TEST(ScalarLiterals, RuntimeKind) {
  EXPECT_EQ(kind_of(parse_scalar("1+i", ScalarKind::Quaternion)), ScalarKind::Quaternion);
  EXPECT_EQ(std::get<GaussianRational>(parse_scalar("1/2", ScalarKind::GaussianRational)), GaussianRational(mpq_class(1, 2)));
  EXPECT_EQ(parse_kind("H"), ScalarKind::Quaternion);
  EXPECT_THROW(parse_kind("p-adic"), ParseError);
}

TEST(SetSystems, BraceAndJson) {
  const auto a = parse_sets("{{1,2},{2,3}}");
  const auto b = parse_sets("[[1, 2], [2, 3]]");
  EXPECT_EQ(a.sets, b.sets);
  EXPECT_TRUE(a.labels.empty());
  EXPECT_EQ(parse_set_system("{{1,2,3}}", true).size(), 7u);
  EXPECT_EQ(parse_set_system("{{1,2,3}}", false).size(), 1u);
}

TEST(SetSystems, NamedLabels) {
  const auto p = parse_sets(R"([["a","b"],["b","c"]])");
  EXPECT_EQ(p.labels, (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(p.sets, (std::vector<Simplex>{{1, 2}, {2, 3}}));
}

TEST(SetSystems, Errors) {
  EXPECT_THROW(parse_sets("1,2"), ParseError);
  EXPECT_THROW(parse_sets("{{1,2},{}}"), ParseError);
  EXPECT_THROW(parse_sets("{{1,{2}}}"), ParseError);
  EXPECT_THROW(parse_set_system("{}"), ParseError);
}

TEST(Presets, Parsing) {
  EXPECT_EQ(parse_preset("omega").kind, FieldPreset::Kind::Omega);
  EXPECT_EQ(parse_preset("roots:7").param, 7u);
  EXPECT_EQ(parse_preset("roots").param, 0u);
  const auto r = parse_preset("random:42:quaternion");
  EXPECT_EQ(r.param, 42u);
  EXPECT_EQ(r.scalar_kind, ScalarKind::Quaternion);
  EXPECT_EQ(parse_preset("list:1,2+i,3").values.size(), 3u);
  EXPECT_THROW(parse_preset("roots:0"), ParseError);
  EXPECT_THROW(parse_preset("random:x"), ParseError);
  EXPECT_THROW(parse_preset("gauss"), ParseError);
}

TEST(Presets, Fields) {
  const auto k2 = generate({{1, 2}});
  EXPECT_EQ(make_field<double>("ones", k2), (EnergyFunction<double>{1, 1, 1}));
  EXPECT_EQ(make_field<C>("roots", k2).size(), 3u);
  EXPECT_EQ(make_field<double>("list:2,4,-1", k2), (EnergyFunction<double>{2, 4, -1}));
  EXPECT_EQ(make_field<Quaternion>("random:7", k2), make_field<Quaternion>("random:7:H", k2));
  EXPECT_THROW(make_field<double>("roots:3", k2), Error);
  EXPECT_THROW(make_field<C>("roots:4", k2), Error);
  EXPECT_THROW(make_field<double>("list:1,2", k2), Error);
  EXPECT_THROW(make_field<double>("random:7:complex", k2), Error);
}

TEST(Json, ScalarEncodings) {
  EXPECT_EQ(to_json(1.5).dump(), "1.5");
  EXPECT_EQ(to_json(C(1, -2)).dump(), "[1.0,-2.0]");
  EXPECT_EQ(to_json(Quaternion(1, 2, 3, 4)).dump(), "[1.0,2.0,3.0,4.0]");
  EXPECT_EQ(to_json(Octonion()).size(), 8u);
  EXPECT_EQ(to_json(GaussianRational(mpq_class(1, 3), mpq_class(-2))).dump(), "\"1/3-2i\"");
  EXPECT_EQ(to_json(mpz_class("123456789012345678901234567890")).dump(), "\"123456789012345678901234567890\"");
  EXPECT_EQ(to_json(Matrix<double>::identity(2)).dump(), "[[1.0,0.0],[0.0,1.0]]");
  EXPECT_EQ(to_json(generate({{1, 2}})).dump(), "[[1],[2],[1,2]]");
}

TEST(Json, KaehlerReport) {
  const auto j = to_json(kaehler_report(generate({{1, 2}})));
  EXPECT_EQ(j["det"], "9");
  EXPECT_EQ(j["rank"], 3);
  EXPECT_EQ(j["factorization_text"], "3^2");
}

TEST(Output, PhaseCsvAndSvgShape) {
  const auto k2 = generate({{1, 2}});
  TrackOptions opt;
  opt.steps = 20;
  const auto path = track_wheel(k2, make_field<C>("roots", k2), 2, opt);
  const auto csv = phase_csv(path);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "t,re1,im1,re2,im2,re3,im3");
  EXPECT_EQ(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')), path.samples.size() + 1);
  const auto svg = phase_svg(path);
  EXPECT_NE(svg.find("<svg"), std::string::npos);
  EXPECT_NE(svg.find("wheel 3"), std::string::npos);
  std::size_t polylines = 0;
  for (auto p = svg.find("<polyline"); p != std::string::npos; p = svg.find("<polyline", p + 1)) ++polylines;
  EXPECT_EQ(polylines, 3u);
  const auto heat = heatmap_svg(kaehler_form(k2));
  std::size_t rects = 0;
  for (auto p = heat.find("<rect"); p != std::string::npos; p = heat.find("<rect", p + 1)) ++rects;
  EXPECT_EQ(rects, 1u + 9u);
}
