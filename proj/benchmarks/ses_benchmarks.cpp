#include <string>
#include <utility>
#include <vector>

#include <benchmark/benchmark.h>

#include "ses/alignment.hpp"
#include "ses/schemes.hpp"
#include "ses/unicode.hpp"

namespace {

const std::vector<std::pair<std::string, std::string>>& sample_pairs() {
  static const std::vector<std::pair<std::string, std::string>> pairs = {
      {"cats", "cat"},           {"did", "do"},
      {"Wolak", "Wolak"},        {"You", "you"},
      {"folklorearen", "folklore"}, {"Warszawie", "Warszawa"},
      {"went", "go"},            {"unhappiest", "unhappy"},
      {"книгами", "книга"},      {"evlerinden", "ev"},
      {"İstanbul'da", "İstanbul"}, {"ESTÁBAMOS", "estar"},
  };
  return pairs;
}

void BM_Encode(benchmark::State& state) {
  const auto scheme = static_cast<ses::Scheme>(state.range(0));
  for (auto _ : state) {
    for (const auto& [form, lemma] : sample_pairs()) {
      benchmark::DoNotOptimize(ses::encode(scheme, form, lemma));
    }
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(sample_pairs().size()));
  state.SetLabel(std::string(ses::scheme_name(scheme)));
}

void BM_Decode(benchmark::State& state) {
  const auto scheme = static_cast<ses::Scheme>(state.range(0));
  std::vector<std::pair<std::string, ses::SesLabel>> labeled;
  for (const auto& [form, lemma] : sample_pairs()) {
    labeled.emplace_back(form, ses::encode(scheme, form, lemma));
  }
  for (auto _ : state) {
    for (const auto& [form, label] : labeled) benchmark::DoNotOptimize(ses::decode(form, label));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(labeled.size()));
  state.SetLabel(std::string(ses::scheme_name(scheme)));
}

void BM_LevenshteinAlign(benchmark::State& state) {
  const std::u32string a(static_cast<std::size_t>(state.range(0)), U'a');
  std::u32string b = a;
  for (std::size_t i = 0; i < b.size(); i += 3) b[i] = U'b';
  for (auto _ : state) benchmark::DoNotOptimize(ses::levenshtein_align(a, b));
}

void BM_LongestCommonSubstring(benchmark::State& state) {
  const auto a = ses::unicode::decode("unbelievablenesses");
  const auto b = ses::unicode::decode("believableness");
  for (auto _ : state) benchmark::DoNotOptimize(ses::longest_common_substring(a, b));
}

}  // namespace

BENCHMARK(BM_Encode)->DenseRange(0, 2);
BENCHMARK(BM_Decode)->DenseRange(0, 2);
BENCHMARK(BM_LevenshteinAlign)->RangeMultiplier(2)->Range(4, 32);
BENCHMARK(BM_LongestCommonSubstring);
BENCHMARK_MAIN();
