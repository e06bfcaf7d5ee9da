// Copyright 2026 The mlbalance Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mlbalance/evaluation.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "mlbalance/error.h"
#include "oracles.h"
#include "properties.h"

namespace mlbalance {
namespace {

PredictionSet one(std::vector<double> scores, Labelset z) {
  const std::size_t k = scores.size();
  return PredictionSet(k, std::move(scores), {std::move(z)});
}

// Y = {A, C}, Z = {A, B}, scores (0.9, 0.8, 0.3).
const std::vector<Labelset> kTruth{Labelset(3, {0, 2})};
const PredictionSet kPred = one({0.9, 0.8, 0.3}, Labelset(3, {0, 1}));

TEST(EvaluationTest, HandExamples) {
  EXPECT_EQ(hamming_loss(kTruth, kPred), 2.0 / 3.0);
  EXPECT_EQ(precision(kTruth, kPred), 0.5);
  EXPECT_EQ(recall(kTruth, kPred), 0.5);
  EXPECT_EQ(f_measure(kTruth, kPred), 0.5);
  EXPECT_EQ(ranking_loss(kTruth, kPred), 0.5);
  EXPECT_EQ(micro_auc(kTruth, kPred), 0.5);
}

TEST(EvaluationTest, PerfectAndComplement) {
  const PredictionSet perfect = one({0.9, 0.1, 0.8}, Labelset(3, {0, 2}));
  EXPECT_EQ(hamming_loss(kTruth, perfect), 0.0);
  EXPECT_EQ(f_measure(kTruth, perfect), 1.0);
  EXPECT_EQ(ranking_loss(kTruth, perfect), 0.0);
  EXPECT_EQ(micro_auc(kTruth, perfect), 1.0);

  const PredictionSet inverted = one({0.1, 0.9, 0.2}, Labelset(3, {1}));
  EXPECT_EQ(hamming_loss(kTruth, inverted), 1.0);
  EXPECT_EQ(f_measure(kTruth, inverted), 0.0);
  EXPECT_EQ(ranking_loss(kTruth, inverted), 1.0);
}

TEST(EvaluationTest, EmptyPredictionsCountZero) {
  const PredictionSet none = one({0.1, 0.1, 0.1}, Labelset(3));
  const ExampleBasedScores s = example_based_scores(kTruth, none);
  EXPECT_EQ(s.precision, 0.0);
  EXPECT_EQ(s.empty_predictions, 1u);
  EXPECT_EQ(s.f_measure, 0.0);
}

TEST(EvaluationTest, EqualScoresGiveAucOne) {
  EXPECT_EQ(micro_auc(kTruth, one({0.5, 0.5, 0.5}, Labelset(3))), 1.0);
}

TEST(EvaluationTest, ShapeChecks) {
  const std::vector<Labelset> two{Labelset(3), Labelset(3)};
  EXPECT_THROW(hamming_loss(two, kPred), InvalidParameterError);
  EXPECT_THROW(PredictionSet(3, {0.1}, {Labelset(3)}), InvalidParameterError);
}

TEST(EvaluationTest, OracleAndRangeProperty) {
  std::mt19937_64 gen(51);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + gen() % 10;
    const std::size_t k = 1 + gen() % 5;
    std::vector<Labelset> truth;
    std::vector<Labelset> z;
    std::vector<double> scores;
    for (std::size_t i = 0; i < n; ++i) {
      Labelset y(k);
      Labelset p(k);
      for (std::size_t l = 0; l < k; ++l) {
        if (gen() % 2) y.set(l);
        const double s = static_cast<double>(gen() % 5) / 4.0;
        scores.push_back(s);
        if (s > 0.5) p.set(l);
      }
      truth.push_back(y);
      z.push_back(p);
    }
    const PredictionSet pred(k, scores, z);
    const auto failures = testing::check_ranking_metrics(truth, pred);
    ASSERT_TRUE(failures.empty()) << testing::join(failures);

    // Strictly monotone score transforms keep the rank metrics.
    std::vector<double> warped;
    for (double s : scores) warped.push_back(std::exp(3.0 * s) - 7.0);
    const PredictionSet pred2(k, warped, z);
    EXPECT_EQ(ranking_loss(truth, pred), ranking_loss(truth, pred2));
    EXPECT_EQ(micro_auc(truth, pred), micro_auc(truth, pred2));
  }
}

TEST(EvaluationTest, SeparatedScoresAgree) {
  std::mt19937_64 gen(52);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + gen() % 6;
    const std::size_t k = 2 + gen() % 4;
    std::vector<Labelset> truth;
    std::vector<double> scores;
    for (std::size_t i = 0; i < n; ++i) {
      Labelset y(k);
      for (std::size_t l = 0; l < k; ++l) {
        const bool on = gen() % 2;
        if (on) y.set(l);
        scores.push_back(on ? 0.6 + 0.1 * (gen() % 4) : 0.1 * (gen() % 5));
      }
      truth.push_back(y);
    }
    const PredictionSet pred(k, scores, truth);
    EXPECT_EQ(micro_auc(truth, pred), 1.0);
    EXPECT_EQ(ranking_loss(truth, pred), 0.0);
  }
}

}  // namespace
}  // namespace mlbalance
