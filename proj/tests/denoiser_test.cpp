#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "keydenoise/corpus.hpp"
#include "keydenoise/denoiser.hpp"
#include "support/fixtures.hpp"
#include "support/synthetic.hpp"

using namespace keydenoise;

namespace {

// One sentence of `words` tokens, `complex` of which have three syllables.
std::string sentence_with(std::size_t words, std::size_t complex) {
  std::string s;
  for (std::size_t i = 0; i < words; ++i) {
    if (i > 0) s += ' ';
    s += i < complex ? "agriculture" : "cat";
  }
  s[0] = static_cast<char>(std::toupper(s[0]));
  return s + ".";
}

Document ten_sentence_document() {
  std::string text;
  for (std::size_t i = 0; i < 10; ++i) text += sentence_with(3 + i % 4, i % 3) + " ";
  return make_document("ten", text);
}

}  // namespace

TEST(FogScore, Examples) {
  EXPECT_DOUBLE_EQ(fog_score(make_document("a", sentence_with(10, 2)).sentences.at(0)), 12.0);
  EXPECT_DOUBLE_EQ(fog_score(make_document("b", sentence_with(1, 0)).sentences.at(0)), 0.4);
  EXPECT_DOUBLE_EQ(fog_score(make_document("c", sentence_with(25, 5)).sentences.at(0)), 18.0);
}

TEST(FogScore, EmptySentenceIsAnError) {
  Sentence s;
  EXPECT_THROW(fog_score(s), Error);
}

TEST(FogScore, InvariantUnderTokenReordering) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const std::string text = testsupport::random_text(rng, 40, 40);
    const Document d = make_document("d", text);
    for (const auto& s : d.sentences) {
      Sentence shuffled = s;
      std::shuffle(shuffled.tokens.begin(), shuffled.tokens.end(), rng);
      EXPECT_DOUBLE_EQ(fog_score(s), fog_score(shuffled));
      EXPECT_GE(fog_score(s), 0.0);
      EXPECT_TRUE(std::isfinite(fog_score(s)));
    }
  }
}

TEST(Denoise, TenSentencesAtSeventyAndThirtyPercent) {
  const Document d = ten_sentence_document();
  ASSERT_EQ(d.sentences.size(), 10u);
  const auto p7 = denoise(d, 0.7);
  EXPECT_EQ(p7.denoised.size(), 7u);
  EXPECT_EQ(p7.noise.size(), 3u);
  const auto p3 = denoise(d, 0.3);
  EXPECT_EQ(p3.denoised.size(), 3u);
  EXPECT_EQ(p3.noise.size(), 7u);
}

TEST(Denoise, ThresholdOneIsIdentity) {
  const std::string text = "Alpha beta gamma. Delta epsilon! Zeta eta theta iota?";
  const Document d = make_document("d", text);
  const auto p = denoise(d, 1.0);
  EXPECT_TRUE(p.noise.empty());
  EXPECT_EQ(p.denoised.size(), d.sentences.size());
  EXPECT_EQ(join_sentences(d, p.denoised), text);
}

TEST(Denoise, Errors) {
  const Document d = ten_sentence_document();
  for (double t : {0.0, -0.1, 1.0000001, 2.0, std::nan("")}) {
    try {
      denoise(d, t);
      ADD_FAILURE() << "threshold " << t << " accepted";
    } catch (const Error& e) {
      EXPECT_STREQ(e.what(), "invalid threshold");
    }
  }
  try {
    denoise(make_document("e", ""), 0.5);
    ADD_FAILURE() << "empty document accepted";
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "empty document");
  }
}

TEST(Denoise, KeepsHardestSentencesInDocumentOrder) {
  // fog: 0.4*(3+0)=1.2, 0.4*(4+50)=21.6, 0.4*(2+0)=0.8, 0.4*(5+40)=18
  const std::string text = sentence_with(3, 0) + " " + sentence_with(4, 2) + " " + sentence_with(2, 0) + " " +
                           sentence_with(5, 2);
  const Document d = make_document("d", text);
  const auto p = denoise(d, 0.5);
  EXPECT_EQ(p.denoised, (std::vector<std::size_t>{1, 3}));
  EXPECT_EQ(p.noise, (std::vector<std::size_t>{0, 2}));
}

TEST(Denoise, TiesPreferEarlierSentences) {
  const std::string text = "Cat sat. Dog ran. Pig hid. Hen ate.";
  const Document d = make_document("d", text);
  EXPECT_EQ(denoise(d, 0.5).denoised, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(denoise(d, 0.25).denoised, (std::vector<std::size_t>{0}));
}

TEST(Denoise, CountIsCeilingOfThresholdTimesSentences) {
  EXPECT_EQ(denoised_count(0.7, 10), 7u);
  EXPECT_EQ(denoised_count(0.3, 10), 3u);
  EXPECT_EQ(denoised_count(0.1, 3), 1u);
  EXPECT_EQ(denoised_count(0.5, 3), 2u);
  EXPECT_EQ(denoised_count(0.01, 1), 1u);
  EXPECT_EQ(denoised_count(0.9, 30), 27u);
  EXPECT_EQ(denoised_count(1.0, 7), 7u);
  for (std::size_t s = 1; s <= 200; ++s) {
    for (int k = 1; k <= 10; ++k) {
      const double t = k / 10.0;
      // integer oracle: ceil(k*s/10)
      const std::size_t expected = (static_cast<std::size_t>(k) * s + 9) / 10;
      EXPECT_EQ(denoised_count(t, s), expected) << t << " x " << s;
    }
  }
}

TEST(Denoise, FuzzedPartitionProperties) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    const Document d = make_document("f", testsupport::random_text(rng, 200));
    if (d.sentences.empty()) continue;
    std::vector<std::size_t> previous;
    for (int k = 1; k <= 10; ++k) {
      const double t = k / 10.0;
      const auto p = denoise(d, t);
      std::set<std::size_t> all(p.denoised.begin(), p.denoised.end());
      for (auto n : p.noise) EXPECT_TRUE(all.insert(n).second) << "overlap";
      EXPECT_EQ(all.size(), d.sentences.size());
      EXPECT_TRUE(std::is_sorted(p.denoised.begin(), p.denoised.end()));
      EXPECT_TRUE(std::is_sorted(p.noise.begin(), p.noise.end()));
      EXPECT_EQ(p.denoised.size(), (static_cast<std::size_t>(k) * d.sentences.size() + 9) / 10);
      EXPECT_TRUE(std::includes(p.denoised.begin(), p.denoised.end(), previous.begin(), previous.end()));
      // every kept sentence scores at least as high as every dropped one
      double min_kept = 1e300;
      double max_dropped = -1;
      for (auto s : p.denoised) min_kept = std::min(min_kept, fog_score(d.sentences[s]));
      for (auto s : p.noise) max_dropped = std::max(max_dropped, fog_score(d.sentences[s]));
      EXPECT_GE(min_kept, max_dropped);
      previous = p.denoised;
    }
  }
}

TEST(Denoise, SplitDocumentParts) {
  const Document d = ten_sentence_document();
  const auto p = denoise(d, 0.7);
  const auto parts = split_document(d, p);
  EXPECT_EQ(parts.denoised.id, "ten.denoised");
  EXPECT_EQ(parts.noise.id, "ten.noise");
  EXPECT_EQ(parts.denoised.sentences.size(), 7u);
  EXPECT_EQ(parts.noise.sentences.size(), 3u);
  EXPECT_EQ(parts.denoised.word_count + parts.noise.word_count, d.word_count);
  EXPECT_EQ(parts.denoised.text, join_sentences(d, p.denoised));
}

TEST(DenoiseCorpus, TwoDocumentsAtHalf) {
  std::vector<Document> corpus = {ten_sentence_document(), ten_sentence_document()};
  corpus[1].id = "other";
  const auto r = denoise_corpus(corpus, 0.5);
  ASSERT_EQ(r.partitions.size(), 2u);
  for (const auto& p : r.partitions) EXPECT_EQ(p.denoised.size(), 5u);
  EXPECT_EQ(r.summary.input_words, 2 * corpus[0].word_count);
  EXPECT_EQ(r.summary.denoised_words + r.summary.noise_words, r.summary.input_words);
}

TEST(DenoiseCorpus, EmptyCorpus) {
  const auto r = denoise_corpus({}, 0.7);
  EXPECT_TRUE(r.partitions.empty());
  EXPECT_EQ(r.summary.input_words, 0u);
  EXPECT_EQ(r.summary.denoised_words, 0u);
  EXPECT_EQ(r.summary.noise_words, 0u);
}

TEST(DenoiseCorpus, ErrorNamesTheDocument) {
  std::vector<Document> corpus = {ten_sentence_document(), make_document("blank", "  ")};
  try {
    denoise_corpus(corpus, 0.7);
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "document blank: empty document");
  }
}

TEST(DenoiseCorpus, WordTotalsMatchEmittedFiles) {
  testsupport::SyntheticCorpusOptions o;
  o.documents = 100;
  o.seed = 99;
  const auto docs = testsupport::to_documents(testsupport::synthetic_corpus(o));
  const auto r = denoise_corpus(docs, 0.7);
  testsupport::ScratchDir dir("denoise_sum");
  for (std::size_t i = 0; i < docs.size(); ++i) {
    write_file(dir / (docs[i].id + ".denoised.txt"), join_sentences(docs[i], r.partitions[i].denoised));
  }
  // independent count: whitespace-separated words that contain a letter or digit
  std::size_t file_words = 0;
  for (const auto& d : docs) {
    std::istringstream in(testsupport::slurp(dir / (d.id + ".denoised.txt")));
    std::string w;
    while (in >> w) {
      file_words += std::any_of(w.begin(), w.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)); });
    }
  }
  EXPECT_EQ(file_words, r.summary.denoised_words);
  EXPECT_GT(file_words, 0u);
}
