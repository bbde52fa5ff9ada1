#include "ses/corpus_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "ses/error.hpp"
#include "ses/schemes.hpp"
#include "support/fuzz.hpp"

namespace ses {
namespace {

const std::filesystem::path kData = SES_TEST_DATA_DIR;

Corpus parse(const std::string& text) {
  std::istringstream in(text);
  return parse_conllu(in, "test");
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(ParseConllu, MinimalFile) {
  const Corpus c = parse("1\tcats\tcat\tNOUN\t_\t_\t_\t_\t_\t_\n2\tsleep\tsleep\tVERB\t_\t_\t_\t_\t_\t_\n\n");
  ASSERT_EQ(c.sentences.size(), 1u);
  EXPECT_EQ(token_count(c), 2u);
  EXPECT_EQ(c.sentences[0].tokens[0].form, "cats");
  EXPECT_EQ(c.sentences[0].tokens[0].lemma, "cat");
  EXPECT_EQ(c.sentences[0].tokens[1].upos, "VERB");
  EXPECT_EQ(c.sentences[0].tokens[1].index, 2u);
}

TEST(ParseConllu, SkipsRangesAndEmptyNodes) {
  const Corpus c = parse(
      "# text = del coche\n"
      "1-2\tdel\t_\t_\t_\t_\t_\t_\t_\t_\n"
      "1\tde\tde\tADP\t_\t_\t_\t_\t_\t_\n"
      "2\tel\tel\tDET\t_\t_\t_\t_\t_\t_\n"
      "2.1\tvio\tver\tVERB\t_\t_\t_\t_\t_\t_\n"
      "3\tcoche\tcoche\tNOUN\t_\t_\t_\t_\t_\t_\n");
  ASSERT_EQ(c.sentences.size(), 1u);
  EXPECT_EQ(token_count(c), 3u);
  EXPECT_EQ(c.sentences[0].comments, std::vector<std::string>{"# text = del coche"});
}

TEST(ParseConllu, UnderscoreLemmaIsAbsent) {
  const Corpus c = parse("1\tfoo\t_\t_\t_\t_\t_\t_\t_\t_\n");
  EXPECT_FALSE(c.sentences[0].tokens[0].lemma.has_value());
  EXPECT_TRUE(c.sentences[0].tokens[0].upos.empty());
}

TEST(ParseConllu, ShortRowIsFormatErrorWithLineNumber) {
  try {
    parse("# c\n1\ta\ta\tX\t_\t_\t_\t_\t_\t_\n2\tb\tb\tX\t_\t_\t_\t_\n");
    FAIL() << "no error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::FormatError);
    EXPECT_NE(std::string(e.what()).find("test:3"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse("x\ta\ta\tX\t_\t_\t_\t_\t_\t_\n"), Error);
  EXPECT_THROW(parse("2\ta\ta\tX\t_\t_\t_\t_\t_\t_\n"), Error);
}

TEST(ParseConllu, CrlfAndMissingTrailingBlank) {
  const Corpus c = parse("1\ta\tb\tX\t_\t_\t_\t_\t_\t_\r\n\r\n1\tc\td\tX\t_\t_\t_\t_\t_\t_");
  ASSERT_EQ(c.sentences.size(), 2u);
  EXPECT_EQ(c.sentences[0].tokens[0].lemma, "b");
  EXPECT_EQ(c.sentences[1].tokens[0].lemma, "d");
}

TEST(ParseConllu, WriteThenParseIsIdentity) {
  for (const char* name : {"en_sample-train.conllu", "es_sample-train.conllu", "table2.conllu"}) {
    const Corpus c = read_conllu(kData / name);
    std::ostringstream out;
    write_conllu(c, out);
    std::istringstream in(out.str());
    EXPECT_EQ(parse_conllu(in, c.source_name), c) << name;
  }
}

TEST(AdjustPropn, Examples) {
  Corpus c = parse(
      "1\tMadrid\tmadrid\tPROPN\t_\t_\t_\t_\t_\t_\n"
      "2\tSevilla\tSevilla\tPROPN\t_\t_\t_\t_\t_\t_\n"
      "3\tcasa\tcasa\tNOUN\t_\t_\t_\t_\t_\t_\n"
      "4\tÉcija\técija\tPROPN\t_\t_\t_\t_\t_\t_\n"
      "5\tX\t_\tPROPN\t_\t_\t_\t_\t_\t_\n");
  const Corpus adjusted = adjust_propn_lemmas(c);
  EXPECT_EQ(adjusted.sentences[0].tokens[0].lemma, "Madrid");
  EXPECT_EQ(adjusted.sentences[0].tokens[1].lemma, "Sevilla");
  EXPECT_EQ(adjusted.sentences[0].tokens[2].lemma, "casa");
  EXPECT_EQ(adjusted.sentences[0].tokens[3].lemma, "Écija");
  EXPECT_FALSE(adjusted.sentences[0].tokens[4].lemma.has_value());
  EXPECT_EQ(adjust_propn_lemmas(adjusted), adjusted);
}

TEST(LabelCorpus, TablePairsMatchFixtures) {
  const Corpus c = read_conllu(kData / "table2.conllu");
  for (Scheme s : kAllSchemes) {
    const LabelingResult r = label_corpus(c, s);
    EXPECT_TRUE(r.failures.empty());
    EXPECT_EQ(r.labeled.token_count(), 5u);
    std::ostringstream out;
    write_labeled(r.labeled, out);
    EXPECT_EQ(out.str(), slurp(kData / ("table2." + std::string(scheme_name(s)) + ".tsv")));
  }
}

TEST(LabelCorpus, EmptyAndMissingLemmas) {
  const LabelingResult empty = label_corpus(Corpus{}, Scheme::Udpipe);
  EXPECT_EQ(empty.labeled.token_count(), 0u);
  EXPECT_TRUE(empty.failures.empty());

  const Corpus c = parse("1\tfoo\t_\tX\t_\t_\t_\t_\t_\t_\n2\tcats\tcat\tNOUN\t_\t_\t_\t_\t_\t_\n");
  EXPECT_EQ(label_corpus(c, Scheme::Udpipe).labeled.token_count(), 1u);
  try {
    label_corpus(c, Scheme::Udpipe, true);
    FAIL() << "no error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MissingLemma);
  }
}

TEST(LabelCorpus, UnrepresentableLemmaIsAFailureNotAnAbort) {
  const Corpus c = parse("1\tab\ta|b\tX\t_\t_\t_\t_\t_\t_\n2\tcats\tcat\tNOUN\t_\t_\t_\t_\t_\t_\n");
  const LabelingResult r = label_corpus(c, Scheme::Morpheus);
  ASSERT_EQ(r.failures.size(), 1u);
  EXPECT_EQ(r.failures[0].sentence_index, 0u);
  EXPECT_EQ(r.failures[0].token_index, 1u);
  EXPECT_EQ(r.labeled.token_count(), 1u);
  const auto j = failures_to_json(r.failures);
  ASSERT_TRUE(j.is_array());
  EXPECT_EQ(j[0]["token_index"], 1);
  EXPECT_TRUE(j[0]["reason"].get<std::string>().starts_with("Unrepresentable"));
}

TEST(LabelCorpus, SampleCorporaHaveNoFailures) {
  for (const char* name : {"en_sample-train.conllu", "es_sample-train.conllu",
                           "en_sample-test.conllu", "es_sample-test.conllu"}) {
    const Corpus c = adjust_propn_lemmas(read_conllu(kData / name));
    for (Scheme s : kAllSchemes) {
      EXPECT_TRUE(label_corpus(c, s).failures.empty()) << name << " " << scheme_name(s);
    }
  }
}

TEST(LabeledTsv, SingleToken) {
  LabeledCorpus lc;
  lc.scheme = Scheme::Ixapipes;
  lc.sentences.push_back({{"cats", "cat", SesLabel{Scheme::Ixapipes, "D0s"}}});
  std::ostringstream out;
  write_labeled(lc, out);
  EXPECT_EQ(out.str(), "cats\tcat\tD0s\n\n");
}

TEST(LabeledTsv, WriteParseRoundtrip) {
  testing::PairFuzzer fuzz(11);
  for (Scheme s : kAllSchemes) {
    Corpus c;
    for (int k = 0; k < 20; ++k) {
      Sentence sentence;
      for (int t = 0; t < 1 + k % 7; ++t) {
        auto [form, lemma] = fuzz.next();
        sentence.tokens.push_back({form, lemma, "X", sentence.tokens.size() + 1});
      }
      c.sentences.push_back(sentence);
    }
    const LabeledCorpus lc = label_corpus(c, s).labeled;
    std::ostringstream out;
    write_labeled(lc, out);
    std::istringstream in(out.str());
    EXPECT_EQ(parse_labeled(in), lc) << scheme_name(s);
  }
}

TEST(LabeledTsv, MalformedLines) {
  std::istringstream two_columns("cats\tcat\n");
  EXPECT_THROW(parse_labeled(two_columns), Error);
  std::istringstream unknown("cats\tcat\t?x\n");
  EXPECT_THROW(parse_labeled(unknown), Error);
}

TEST(LemmaTsv, RoundtripAndDetection) {
  const Corpus c = read_conllu(kData / "table2.conllu");
  std::ostringstream out;
  write_lemma_tsv(c, out);
  EXPECT_EQ(out.str(), "cats\tcat\nbirds\tbird\ndid\tdo\nWolak\tWolak\nYou\tyou\n\n");
  std::istringstream in(out.str());
  const Corpus back = parse_lemma_tsv(in);
  ASSERT_EQ(back.sentences.size(), 1u);
  EXPECT_EQ(back.sentences[0].tokens[2].lemma, "do");

  const Corpus detected = read_lemmas(kData / "table2.conllu");
  EXPECT_EQ(detected.sentences[0].tokens[3].upos, "PROPN");
}

TEST(ReadConllu, MissingFile) {
  try {
    read_conllu(kData / "does-not-exist.conllu");
    FAIL() << "no error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IoError);
  }
}

}  // namespace
}  // namespace ses
