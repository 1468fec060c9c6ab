/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The vnnlib Authors
 */

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "corpus.hpp"
#include "vnnlib/assignment.hpp"
#include "vnnlib/mini/theory.hpp"
#include "vnnlib/real/theory.hpp"
#include "vnnlib/syntax.hpp"
#include "vnnlib/typer.hpp"

namespace vnnlib {
namespace {

using mini::MiniModel;
using mini::MiniTheory;

const MiniTheory kMini;

Query load(const std::string& file) { return parseQuery(corpus::read(file)); }

template <class F>
TypeErrorCode codeOf(F f) {
  try {
    f();
  } catch (const TypeError& e) {
    return e.code();
  }
  ADD_FAILURE() << "no TypeError raised";
  return TypeErrorCode::DuplicateName;
}

std::shared_ptr<const MiniModel> model(const std::string& file) { return MiniModel::load(corpus::directory() / file); }

const std::string kFig7Header =
    "(vnnlib-version <2.0>)\n(declare-network myNetwork (declare-input X float32 [1,10]) "
    "(declare-output Y float32 [1,2]))\n";

TEST(BuildContext, TwoIndependentNetworks) {
  Query q = load("teacher_student.vnnlib");
  TypingContext ctx = buildContext(q.networks, kMini);
  EXPECT_EQ(ctx.size(), 2u);
  for (const auto& n : ctx.networks()) EXPECT_FALSE(n.equiv.has_value());
  EXPECT_EQ(ctx.variable("SX")->elementType, "float16");
  EXPECT_EQ(ctx.variable("TY")->role, TypingContext::Role::Output);
}

TEST(BuildContext, EmptyListKeepsContext) {
  TypingContext base = buildContext(load("single_network.vnnlib").networks, kMini);
  TypingContext same = buildContext({}, kMini, base);
  EXPECT_EQ(same.size(), 1u);
  EXPECT_NE(same.find("myNetwork"), nullptr);
}

TEST(BuildContext, DuplicateNames) {
  EXPECT_EQ(codeOf([] { typeQuery(load("negative/duplicate_name.vnnlib"), kMini); }), TypeErrorCode::DuplicateName);
  // Variables are unique across networks.
  Query q = parseQuery("(vnnlib-version <2.0>)\n(declare-network f (declare-input X float32 [1]) "
                       "(declare-output Y float32 [1]))\n(declare-network g (declare-input X float32 [1]) "
                       "(declare-output Z float32 [1]))");
  EXPECT_EQ(codeOf([&] { typeQuery(q, kMini); }), TypeErrorCode::DuplicateName);
}

TEST(BuildContext, UnknownElementType) {
  EXPECT_EQ(codeOf([] { typeQuery(load("single_network_real.vnnlib"), kMini); }), TypeErrorCode::UnknownElementType);
  EXPECT_EQ(codeOf([] { typeQuery(load("single_network.vnnlib"), real::wrapTheory(kMini)); }),
            TypeErrorCode::UnknownElementType);
}

TEST(CheckEquiv, EqualTo) { EXPECT_NO_THROW(typeQuery(load("equal_to.vnnlib"), kMini)); }

TEST(CheckEquiv, IsomorphicIgnoresElementTypes) {
  EXPECT_NO_THROW(typeQuery(load("isomorphic_to.vnnlib"), kMini));
  EXPECT_NO_THROW(typeQuery(load("isomorphic_to_float16.vnnlib"), kMini));
}

TEST(CheckEquiv, Rejections) {
  EXPECT_EQ(codeOf([] { typeQuery(load("negative/equiv_chain.vnnlib"), kMini); }), TypeErrorCode::EquivChain);
  EXPECT_EQ(codeOf([] { typeQuery(load("negative/unknown_network.vnnlib"), kMini); }), TypeErrorCode::UnknownNetwork);
  EXPECT_EQ(codeOf([] { typeQuery(load("negative/shape_mismatch.vnnlib"), kMini); }), TypeErrorCode::ShapeMismatch);
  EXPECT_EQ(codeOf([] { typeQuery(load("negative/element_type_mismatch.vnnlib"), kMini); }),
            TypeErrorCode::ElementTypeMismatch);
}

TEST(CheckEquiv, InputCountMismatchIsShapeMismatch) {
  Query q = parseQuery("(vnnlib-version <2.0>)\n(declare-network f (declare-input A float32 [1]) "
                       "(declare-output B float32 [1]))\n(declare-network g (isomorphic-to f) "
                       "(declare-input C float32 [1]) (declare-input E float32 [1]) (declare-output D float32 [1]))");
  EXPECT_EQ(codeOf([&] { typeQuery(q, kMini); }), TypeErrorCode::ShapeMismatch);
}

TEST(CheckEquiv, SharedHiddenNamesMustAgreeUnderEqualTo) {
  auto text = [](const char* hiddenType, const char* equiv) {
    return std::string("(vnnlib-version <2.0>)\n(declare-network f (declare-input A float32 [1,2]) "
                       "(declare-hidden H float32 [1,2] \"h\") (declare-output B float32 [1,2]))\n"
                       "(declare-network g (") +
           equiv + " f) (declare-input C float32 [1,2]) (declare-hidden H2 " + hiddenType +
           " [1,2] \"h\") (declare-output D float32 [1,2]))";
  };
  EXPECT_NO_THROW(typeQuery(parseQuery(text("float32", "equal-to")), kMini));
  EXPECT_EQ(codeOf([&] { typeQuery(parseQuery(text("float16", "equal-to")), kMini); }),
            TypeErrorCode::ElementTypeMismatch);
  EXPECT_NO_THROW(typeQuery(parseQuery(text("float16", "isomorphic-to")), kMini));
}

TEST(TypeArith, VariableAndNegation) {
  Query q = parseQuery(kFig7Header + "(assert (<= X[0,2] (- X[0,0])))");
  TypingContext ctx = typeQuery(q, kMini);
  EXPECT_EQ(*typeArith(ctx, q.asserts[0].expr.lhs(), kMini), "float32");
  EXPECT_EQ(*typeArith(ctx, q.asserts[0].expr.rhs(), kMini), "float32");
  EXPECT_FALSE(typeArith(ctx, ArithExpr::constant("1.0"), kMini).has_value());
}

TEST(TypeArith, IndexErrors) {
  EXPECT_EQ(codeOf([] { typeQuery(load("negative/index_out_of_bounds.vnnlib"), kMini); }),
            TypeErrorCode::IndexOutOfBounds);
  EXPECT_EQ(codeOf([] { typeQuery(load("negative/rank_mismatch.vnnlib"), kMini); }), TypeErrorCode::RankMismatch);
  EXPECT_EQ(codeOf([] { typeQuery(parseQuery(kFig7Header + "(assert (<= X 1.0))"), kMini); }),
            TypeErrorCode::RankMismatch);
}

TEST(TypeArith, IndexlessRankZero) {
  Query q = parseQuery("(vnnlib-version <2.0>)\n(declare-network f (declare-input k int32 []) "
                       "(declare-output Y int32 [1]))\n(assert (<= k 1))");
  EXPECT_NO_THROW(typeQuery(q, kMini));
}

TEST(TypeBool, Examples) {
  EXPECT_NO_THROW(typeQuery(load("single_network.vnnlib"), kMini));
  EXPECT_EQ(codeOf([] { typeQuery(load("negative/untypable_comparison.vnnlib"), kMini); }),
            TypeErrorCode::UntypableComparison);
  EXPECT_EQ(codeOf([] { typeQuery(load("negative/mixed_types.vnnlib"), kMini); }), TypeErrorCode::MixedTypes);
  EXPECT_EQ(codeOf([] { typeQuery(load("negative/bad_constant.vnnlib"), kMini); }), TypeErrorCode::BadConstant);
  EXPECT_EQ(codeOf([] { typeQuery(load("negative/unknown_variable.vnnlib"), kMini); }), TypeErrorCode::UnknownVariable);
}

TEST(TypeBool, JointTypingUsesEitherSide) {
  // The constant on the left is typed by the variable on the right.
  EXPECT_NO_THROW(typeQuery(parseQuery(kFig7Header + "(assert (<= 0.5 Y[0,1]))"), kMini));
  Query ints = parseQuery("(vnnlib-version <2.0>)\n(declare-network c (declare-input N int32 [1]) "
                          "(declare-output M int32 [1]))\n(assert (<= 1.5 N[0]))");
  EXPECT_EQ(codeOf([&] { typeQuery(ints, kMini); }), TypeErrorCode::BadConstant);
}

TEST(TypeQuery, RealTheory) { EXPECT_NO_THROW(typeQuery(load("single_network_real.vnnlib"), real::wrapTheory(kMini))); }

TEST(TypeQuery, FirstErrorInSourceOrderWins) {
  Query q = parseQuery(kFig7Header + "(assert (<= X[0,10] 1.0))\n(assert (<= W[0] 1.0))");
  EXPECT_EQ(codeOf([&] { typeQuery(q, kMini); }), TypeErrorCode::IndexOutOfBounds);
  Query swapped = parseQuery(kFig7Header + "(assert (<= W[0] 1.0))\n(assert (<= X[0,10] 1.0))");
  EXPECT_EQ(codeOf([&] { typeQuery(swapped, kMini); }), TypeErrorCode::UnknownVariable);
}

TEST(TypeError, SpanPointsAtOffendingNode) {
  std::string text = kFig7Header + "(assert (<= X[0,10] 1.0))";
  try {
    typeQuery(parseQuery(text), kMini);
    FAIL();
  } catch (const TypeError& e) {
    EXPECT_EQ(text.substr(e.span().begin, e.span().end - e.span().begin), "X[0,10]");
    EXPECT_EQ(e.span().line, 3u);
  }
}

TEST(CheckModels, Accepts) {
  Query q = load("single_network.vnnlib");
  EXPECT_NO_THROW(checkModels(q, ModelMap<MiniTheory>{{"myNetwork", model("simple_net.nn.json")}}, kMini));
  Query eq = load("equal_to.vnnlib");
  auto shared = model("simple_net.nn.json");
  EXPECT_NO_THROW(checkModels(eq, ModelMap<MiniTheory>{{"f", shared}, {"f-copy", model("simple_net.nn.json")}}, kMini));
}

TEST(CheckModels, Rejections) {
  Query single_network = load("single_network.vnnlib");
  EXPECT_EQ(codeOf([&] { checkModels(single_network, ModelMap<MiniTheory>{}, kMini); }), TypeErrorCode::UnknownNetwork);
  EXPECT_EQ(codeOf([&] {
              checkModels(single_network, ModelMap<MiniTheory>{{"myNetwork", model("simple_net_3out.nn.json")}}, kMini);
            }),
            TypeErrorCode::ModelTypeMismatch);
  EXPECT_EQ(codeOf([&] {
              checkModels(single_network,
                          ModelMap<MiniTheory>{{"myNetwork", model("simple_net.nn.json")},
                                               {"extra", model("simple_net.nn.json")}},
                          kMini);
            }),
            TypeErrorCode::UnknownNetwork);
  Query equal_to = load("equal_to.vnnlib");
  EXPECT_EQ(codeOf([&] {
              checkModels(equal_to,
                          ModelMap<MiniTheory>{{"f", model("simple_net.nn.json")},
                                               {"f-copy", model("simple_net_copy.nn.json")}},
                          kMini);
            }),
            TypeErrorCode::ModelNotEqual);
  Query isomorphic_to = load("isomorphic_to.vnnlib");
  EXPECT_EQ(codeOf([&] {
              checkModels(isomorphic_to,
                          ModelMap<MiniTheory>{{"f", model("simple_net.nn.json")}, {"g", model("mlp_relu.nn.json")}},
                          kMini);
            }),
            TypeErrorCode::ModelNotIsomorphic);
  Query hidden = load("hidden.vnnlib");
  EXPECT_NO_THROW(checkModels(hidden, ModelMap<MiniTheory>{{"f", model("hidden_net.nn.json")}}, kMini));
  EXPECT_EQ(codeOf([&] { checkModels(hidden, ModelMap<MiniTheory>{{"f", model("hidden_missing.nn.json")}}, kMini); }),
            TypeErrorCode::HiddenNodeMissing);
}

TEST(CheckModels, RealTheoryIgnoresModelElementTypes) {
  auto real = real::wrapTheory(kMini);
  using R = decltype(real);
  Query q = load("single_network_real.vnnlib");
  EXPECT_NO_THROW(checkModels(q, ModelMap<R>{{"myNetwork", model("simple_net.nn.json")}}, real));
  EXPECT_EQ(codeOf([&] { checkModels(q, ModelMap<R>{{"myNetwork", model("simple_net_3out.nn.json")}}, real); }),
            TypeErrorCode::ModelTypeMismatch);
}

TEST(CheckAssignment, Examples) {
  Query q = load("single_network.vnnlib");
  auto ok = parseAssignment(corpus::read("ok.json"), kMini);
  EXPECT_NO_THROW(checkAssignment(q, ok, kMini));
  EXPECT_EQ(codeOf([&] { checkAssignment(q, AssignmentMap<MiniTheory>{}, kMini); }), TypeErrorCode::AssignmentMissing);
  auto wide = parseAssignment(corpus::read("ok_float64.json"), kMini);
  EXPECT_EQ(codeOf([&] { checkAssignment(q, wide, kMini); }), TypeErrorCode::AssignmentTypeMismatch);
  auto extra = ok;
  extra.emplace("Q", extra.at("X"));
  EXPECT_EQ(codeOf([&] { checkAssignment(q, extra, kMini); }), TypeErrorCode::UnknownVariable);
}

TEST(TypeErrorCodes, NamesAreDistinct) {
  std::set<std::string> names;
  for (std::size_t i = 0; i < kTypeErrorCodeCount; ++i) names.insert(std::string(codeName(static_cast<TypeErrorCode>(i))));
  EXPECT_EQ(names.size(), kTypeErrorCodeCount);
}

// Properties over the whole corpus.

std::vector<std::string> corpusQueries() {
  return {"single_network.vnnlib", "multi_io.vnnlib", "teacher_student.vnnlib", "equal_to.vnnlib", "isomorphic_to.vnnlib", "isomorphic_to_float16.vnnlib",
          "hidden.vnnlib", "hidden_mnist.vnnlib", "productions.vnnlib", "divergence.vnnlib",
          "negative/bad_constant.vnnlib", "negative/duplicate_name.vnnlib", "negative/element_type_mismatch.vnnlib",
          "negative/equiv_chain.vnnlib", "negative/index_out_of_bounds.vnnlib", "negative/mixed_types.vnnlib",
          "negative/rank_mismatch.vnnlib", "negative/shape_mismatch.vnnlib", "negative/unknown_network.vnnlib",
          "negative/unknown_variable.vnnlib", "negative/untypable_comparison.vnnlib"};
}

std::string outcome(const Query& q) {
  try {
    typeQuery(q, kMini);
    return "ok";
  } catch (const TypeError& e) {
    return std::string(codeName(e.code()));
  }
}

TEST(TyperProperty, Deterministic) {
  for (const auto& file : corpusQueries()) {
    Query q = load(file);
    EXPECT_EQ(outcome(q), outcome(q)) << file;
  }
}

TEST(TyperProperty, AcceptanceIndependentOfAssertionOrder) {
  std::mt19937_64 rng(12);
  for (const auto& file : corpusQueries()) {
    Query q = load(file);
    bool accepted = outcome(q) == "ok";
    for (int i = 0; i < 5; ++i) {
      std::shuffle(q.asserts.begin(), q.asserts.end(), rng);
      EXPECT_EQ(outcome(q) == "ok", accepted) << file;
    }
  }
}

TEST(TyperProperty, AcceptedContextsHaveNoEquivChains) {
  for (const auto& file : corpusQueries()) {
    Query q = load(file);
    if (outcome(q) != "ok") continue;
    TypingContext ctx = typeQuery(q, kMini);
    for (const auto& n : ctx.networks()) {
      if (n.equiv) {
        EXPECT_FALSE(ctx.find(n.equiv->target)->equiv.has_value()) << file;
      }
    }
  }
}

}  // namespace
}  // namespace vnnlib
