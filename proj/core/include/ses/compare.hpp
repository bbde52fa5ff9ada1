#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ses/metrics.hpp"
#include "ses/model.hpp"

namespace ses {

struct SchemeSummary {
  Scheme scheme = Scheme::Udpipe;
  std::size_t unique_labels = 0;
  std::size_t train_tokens = 0;
  std::size_t label_failures = 0;  // train + test
  EvalReport baseline;
  std::size_t fallback_count = 0;
  std::size_t decode_failures = 0;
  OovReport oov;
};

struct PairwiseTest {
  Scheme a = Scheme::Udpipe;
  Scheme b = Scheme::Ixapipes;
  McNemarResult word;
  McNemarResult sentence;
};

struct ComparisonReport {
  std::vector<SchemeSummary> schemes;  // udpipe, ixapipes, morpheus
  std::vector<PairwiseTest> pairwise;  // each unordered pair once
};

/// Labels both corpora under every scheme, trains the baseline on `train`,
/// evaluates it on `test` and runs McNemar between every pair of schemes.
ComparisonReport compare_schemes(const Corpus& train, const Corpus& test,
                                 double alpha = 0.05);

nlohmann::json to_json(const ComparisonReport& report);

}  // namespace ses
