// Evaluation: gold matching, precision/recall/F, inter-indexer agreement,
// error rates, the fold-paired t-test, k-fold cross-validation over
// trained-model x test-set pairings, and the denoising-threshold sweep.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <future>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "json.hpp"

#include "keydenoise/candidates.hpp"
#include "keydenoise/denoiser.hpp"
#include "keydenoise/error.hpp"
#include "keydenoise/model.hpp"
#include "keydenoise/textkit.hpp"
#include "keydenoise/vocab.hpp"

namespace keydenoise {

// ---------------------------------------------------------------------------
// Set comparison measures

/// Counts from comparing two keyphrase sets. Indexer 1 is the system and
/// indexer 2 the gold standard. instance_count is the number of classified
/// candidate instances behind the comparison (the error-rate denominator).
struct MatchResult {
  std::size_t M = 0;
  std::size_t N = 0;
  std::size_t O = 0;
  std::size_t FP = 0;
  std::size_t FN = 0;
  std::size_t instance_count = 0;
};

inline MatchResult match_normalized_sets(const std::set<std::string>& extracted, const std::set<std::string>& gold) {
  MatchResult m;
  m.M = extracted.size();
  m.N = gold.size();
  for (const auto& e : extracted) {
    if (gold.count(e)) ++m.O;
  }
  m.FP = m.M - m.O;
  m.FN = m.N - m.O;
  return m;
}

/// Stem-level set match: both lists are normalized and deduplicated.
inline MatchResult match_keyphrases(const std::vector<std::string>& extracted, const std::vector<std::string>& gold) {
  std::set<std::string> e;
  std::set<std::string> g;
  for (const auto& s : extracted) {
    if (auto n = normalize_phrase(s); !n.empty()) e.insert(std::move(n));
  }
  for (const auto& s : gold) {
    if (auto n = normalize_phrase(s); !n.empty()) g.insert(std::move(n));
  }
  return match_normalized_sets(e, g);
}

struct PrecisionRecallF {
  double precision = 0;  // percent
  double recall = 0;     // percent
  double fscore = 0;     // percent
};

inline double harmonic_f(double p, double r) { return p + r > 0 ? 2.0 * p * r / (p + r) : 0.0; }

inline PrecisionRecallF precision_recall_f(const MatchResult& m) {
  PrecisionRecallF out;
  out.precision = m.M == 0 ? 0.0 : 100.0 * static_cast<double>(m.O) / static_cast<double>(m.M);
  out.recall = m.N == 0 ? 0.0 : 100.0 * static_cast<double>(m.O) / static_cast<double>(m.N);
  out.fscore = harmonic_f(out.precision, out.recall);
  return out;
}

struct Agreement {
  double hooper = 0;
  double rolling = 0;
  double cosine = 0;
};

/// Hooper O/(M+N-O), Rolling 2O/(M+N), cosine O/sqrt(MN); 0 on a zero denominator.
inline Agreement agreement_scores(const MatchResult& m) {
  const double M = static_cast<double>(m.M);
  const double N = static_cast<double>(m.N);
  const double O = static_cast<double>(m.O);
  Agreement a;
  a.hooper = (M + N - O) > 0 ? O / (M + N - O) : 0.0;
  a.rolling = (M + N) > 0 ? 2.0 * O / (M + N) : 0.0;
  a.cosine = (M * N) > 0 ? O / std::sqrt(M * N) : 0.0;
  return a;
}

/// (FP + FN) over the number of candidate instances classified.
inline double error_rate(const MatchResult& m) {
  if (m.instance_count == 0) throw Error("error rate needs at least one instance");
  return static_cast<double>(m.FP + m.FN) / static_cast<double>(m.instance_count);
}

// ---------------------------------------------------------------------------
// Paired t-test over folds

/// Two-sided critical value of Student's t, 9 degrees of freedom, alpha 0.05.
inline constexpr double kTCritical05 = 2.262;
/// One-sided critical value, 9 degrees of freedom, alpha 0.02: the
/// directional "lower error than the benchmark" reading.
inline constexpr double kTCritical02OneSided = 2.398;
inline constexpr std::size_t kPairedFolds = 10;

struct TTestResult {
  double t = 0;  // +-infinity when degenerate with a nonzero mean difference
  bool significant_05 = false;
  bool significant_02 = false;
  bool degenerate = false;  // zero variance of the differences
};

inline TTestResult t_significance(double t) {
  TTestResult r;
  r.t = t;
  r.significant_05 = std::fabs(t) > kTCritical05;
  r.significant_02 = std::fabs(t) > kTCritical02OneSided;
  return r;
}

/// d_i = a_i - b_i; t = mean(d) / (s_d / sqrt(n)) with the n-1 sample
/// standard deviation.
inline TTestResult paired_t_test(std::span<const double> a, std::span<const double> b) {
  if (a.size() != kPairedFolds || b.size() != kPairedFolds) {
    throw Error("paired t-test needs two vectors of length 10");
  }
  const double n = static_cast<double>(kPairedFolds);
  std::array<double, kPairedFolds> d{};
  double sum = 0;
  for (std::size_t i = 0; i < kPairedFolds; ++i) {
    d[i] = a[i] - b[i];
    sum += d[i];
  }
  const double mean = sum / n;
  double ss = 0;
  for (double x : d) ss += (x - mean) * (x - mean);
  const double sd = std::sqrt(ss / (n - 1.0));
  if (sd == 0.0) {
    TTestResult r;
    r.degenerate = true;
    if (mean != 0.0) {
      r.t = mean > 0 ? std::numeric_limits<double>::infinity() : -std::numeric_limits<double>::infinity();
      r.significant_05 = r.significant_02 = true;
    }
    return r;
  }
  return t_significance(mean / (sd / std::sqrt(n)));
}

// ---------------------------------------------------------------------------
// Folds

namespace detail {

// Uniform integer in [0, bound) from a 64-bit Mersenne Twister, by
// rejection; identical on every standard library.
inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    const std::uint64_t x = rng();
    if (x < limit) return x % bound;
  }
}

}  // namespace detail

/// Seeded random split of document ids into k disjoint folds whose sizes
/// differ by at most one. Ids within each fold are sorted.
inline std::vector<std::vector<std::string>> make_folds(std::vector<std::string> ids, std::size_t k,
                                                        std::uint64_t seed) {
  if (k == 0) throw Error("fold count must be positive");
  if (ids.size() < k) throw Error("corpus has fewer documents than folds");
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) throw Error("duplicate document id in corpus");
  std::mt19937_64 rng(seed);
  for (std::size_t i = ids.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(detail::bounded(rng, i));
    std::swap(ids[i - 1], ids[j]);
  }
  std::vector<std::vector<std::string>> folds(k);
  const std::size_t base = ids.size() / k;
  const std::size_t extra = ids.size() % k;
  std::size_t pos = 0;
  for (std::size_t f = 0; f < k; ++f) {
    const std::size_t size = base + (f < extra ? 1 : 0);
    folds[f].assign(ids.begin() + static_cast<std::ptrdiff_t>(pos),
                    ids.begin() + static_cast<std::ptrdiff_t>(pos + size));
    std::sort(folds[f].begin(), folds[f].end());
    pos += size;
  }
  return folds;
}

inline std::vector<std::vector<std::string>> make_folds(const std::vector<Document>& corpus, std::size_t k,
                                                        std::uint64_t seed) {
  std::vector<std::string> ids;
  ids.reserve(corpus.size());
  for (const auto& d : corpus) ids.push_back(d.id);
  return make_folds(std::move(ids), k, seed);
}

// ---------------------------------------------------------------------------
// Pairings

enum class TextVariant { kFull, kDenoised, kNoise };

inline std::string_view variant_name(TextVariant v) {
  switch (v) {
    case TextVariant::kFull: return "Full";
    case TextVariant::kDenoised: return "Denoised";
    case TextVariant::kNoise: return "Noise";
  }
  return "";
}

inline TextVariant parse_variant(std::string_view s) {
  const std::string l = casefold(s);
  if (l == "full") return TextVariant::kFull;
  if (l == "denoised") return TextVariant::kDenoised;
  if (l == "noise") return TextVariant::kNoise;
  throw Error("unknown text variant: " + std::string(s));
}

/// Trained-model text x test-set text, written "<Model>-<Test>".
struct Pairing {
  TextVariant model = TextVariant::kFull;
  TextVariant test = TextVariant::kFull;

  std::string name() const { return std::string(variant_name(model)) + "-" + std::string(variant_name(test)); }
  auto operator<=>(const Pairing&) const = default;
};

inline Pairing parse_pairing(std::string_view s) {
  const auto dash = s.find('-');
  if (dash == std::string_view::npos) throw Error("pairing must look like Model-Test: " + std::string(s));
  Pairing p{parse_variant(s.substr(0, dash)), parse_variant(s.substr(dash + 1))};
  if (p.model == TextVariant::kNoise) throw Error("models are trained on full or denoised text only");
  return p;
}

inline const Pairing kBenchmark{TextVariant::kFull, TextVariant::kFull};

/// Benchmark plus the three denoised rows of the results table.
inline std::vector<Pairing> default_cv_pairings() {
  return {kBenchmark,
          {TextVariant::kDenoised, TextVariant::kDenoised},
          {TextVariant::kDenoised, TextVariant::kFull},
          {TextVariant::kFull, TextVariant::kDenoised}};
}

inline std::vector<Pairing> all_pairings() {
  return {kBenchmark,
          {TextVariant::kDenoised, TextVariant::kDenoised},
          {TextVariant::kDenoised, TextVariant::kFull},
          {TextVariant::kFull, TextVariant::kDenoised},
          {TextVariant::kFull, TextVariant::kNoise},
          {TextVariant::kDenoised, TextVariant::kNoise}};
}

// ---------------------------------------------------------------------------
// Cross-validation

struct CrossValidationConfig {
  double threshold = 0.7;
  std::size_t k_extract = 8;
  std::size_t folds = kPairedFolds;
  std::uint64_t seed = 1;
  std::vector<Pairing> pairings = default_cv_pairings();
  ModelConfig model;     // phrase bounds, vocabulary mode and feature mask
  std::size_t workers = 0;  // 0: hardware concurrency
};

struct FoldResult {
  std::size_t fold_index = 0;
  Pairing pairing;
  double precision = 0;
  double recall = 0;
  double fscore = 0;
  double hooper = 0;
  double rolling = 0;
  double cosine = 0;
  double error_rate = 0;
  std::size_t false_positives = 0;
  std::size_t false_negatives = 0;
  std::size_t instances = 0;
  std::size_t documents = 0;
};

struct PairingSummary {
  Pairing pairing;
  double precision = 0;
  double recall = 0;
  double fscore = 0;
  double hooper = 0;
  double rolling = 0;
  double cosine = 0;
  double mean_error_rate = 0;
  std::vector<double> error_rates;  // one per fold
  TTestResult versus_benchmark;     // t = paired_t_test(benchmark errors, pairing errors)
};

struct EvaluationReport {
  double threshold = 0;
  std::size_t k_extract = 0;
  std::size_t folds = 0;
  std::uint64_t seed = 0;
  std::vector<FoldResult> fold_results;  // pairing-major, fold-minor
  std::vector<PairingSummary> summaries;

  const PairingSummary& summary(const Pairing& p) const {
    for (const auto& s : summaries) {
      if (s.pairing == p) return s;
    }
    throw Error("pairing not in report: " + p.name());
  }
};

namespace detail {

struct PreparedDocument {
  const Document* full = nullptr;
  Document denoised;
  Document noise;
  std::set<std::string> gold;

  const Document& variant(TextVariant v) const {
    switch (v) {
      case TextVariant::kFull: return *full;
      case TextVariant::kDenoised: return denoised;
      case TextVariant::kNoise: return noise;
    }
    return *full;
  }
};

inline std::vector<PreparedDocument> prepare(const std::vector<Document>& corpus, double threshold) {
  std::vector<PreparedDocument> out;
  out.reserve(corpus.size());
  for (const auto& d : corpus) {
    PreparedDocument p;
    p.full = &d;
    try {
      auto parts = split_document(d, denoise(d, threshold));
      p.denoised = std::move(parts.denoised);
      p.noise = std::move(parts.noise);
      p.gold = normalized_gold(d);
    } catch (const Error& e) {
      throw Error("document " + d.id + ": " + e.what());
    }
    out.push_back(std::move(p));
  }
  return out;
}

inline std::vector<FoldResult> run_fold(std::size_t fold, const std::vector<PreparedDocument>& docs,
                                        const std::set<std::string>& test_ids, const Vocabulary* vocabulary,
                                        const CrossValidationConfig& config, const std::vector<Pairing>& pairings) {
  std::set<TextVariant> model_variants;
  std::set<TextVariant> test_variants;
  for (const auto& p : pairings) {
    model_variants.insert(p.model);
    test_variants.insert(p.test);
  }

  std::map<TextVariant, TrainedModel> models;
  for (auto v : model_variants) {
    std::vector<Document> training;
    for (const auto& d : docs) {
      if (!test_ids.count(d.full->id)) training.push_back(d.variant(v));
    }
    ModelConfig mc = config.model;
    mc.text_variant = casefold(variant_name(v));
    mc.threshold = v == TextVariant::kFull ? 1.0 : config.threshold;
    try {
      models.emplace(v, train(training, vocabulary, mc));
    } catch (const Error& e) {
      throw Error("fold " + std::to_string(fold) + ": " + e.what());
    }
  }

  std::vector<const PreparedDocument*> tests;
  for (const auto& d : docs) {
    if (test_ids.count(d.full->id)) tests.push_back(&d);
  }

  std::map<TextVariant, std::vector<CandidateSet>> candidate_sets;
  for (auto v : test_variants) {
    for (const auto* d : tests) {
      candidate_sets[v].push_back(generate_candidates(d->variant(v), config.model.candidate_options(), vocabulary));
    }
  }

  std::vector<FoldResult> results;
  for (const auto& p : pairings) {
    const TrainedModel& model = models.at(p.model);
    FoldResult r;
    r.fold_index = fold;
    r.pairing = p;
    r.documents = tests.size();
    double p_sum = 0, r_sum = 0, h_sum = 0, ro_sum = 0, c_sum = 0;
    for (std::size_t i = 0; i < tests.size(); ++i) {
      const CandidateSet& set = candidate_sets.at(p.test)[i];
      auto ranked = rank_candidate_set(model, set, vocabulary);
      if (ranked.size() > config.k_extract) ranked.resize(config.k_extract);
      std::set<std::string> extracted;
      for (const auto& k : ranked) extracted.insert(sorted_key(k.normalized_form));
      MatchResult m = match_normalized_sets(extracted, tests[i]->gold);
      const auto prf = precision_recall_f(m);
      const auto agr = agreement_scores(m);
      p_sum += prf.precision;
      r_sum += prf.recall;
      h_sum += agr.hooper;
      ro_sum += agr.rolling;
      c_sum += agr.cosine;
      r.false_positives += m.FP;
      r.false_negatives += m.FN;
      r.instances += set.candidates.size();
    }
    const double n = static_cast<double>(tests.size());
    r.precision = p_sum / n;
    r.recall = r_sum / n;
    r.fscore = harmonic_f(r.precision, r.recall);
    r.hooper = h_sum / n;
    r.rolling = ro_sum / n;
    r.cosine = c_sum / n;
    MatchResult totals;
    totals.FP = r.false_positives;
    totals.FN = r.false_negatives;
    totals.instance_count = r.instances;
    if (r.instances == 0) {
      throw Error("fold " + std::to_string(fold) + ", " + p.name() + ": no candidate instances in the test set");
    }
    r.error_rate = error_rate(totals);
    results.push_back(r);
  }
  return results;
}

}  // namespace detail

/// k-fold cross-validation. For each fold, full-text and denoised-text
/// models are trained on the other folds and applied to the held-out
/// documents' full, denoised and noise texts. Full-Full is always evaluated
/// because every pairing is t-tested against it.
inline EvaluationReport cross_validate(const std::vector<Document>& corpus, const Vocabulary* vocabulary,
                                       const CrossValidationConfig& config) {
  check_threshold(config.threshold);
  if (config.k_extract < 1) throw Error("k must be at least 1");
  if (config.pairings.empty()) throw Error("no pairings requested");

  std::vector<Pairing> pairings = config.pairings;
  if (std::find(pairings.begin(), pairings.end(), kBenchmark) == pairings.end()) {
    pairings.insert(pairings.begin(), kBenchmark);
  }
  {
    std::set<Pairing> seen;
    for (const auto& p : pairings) {
      if (!seen.insert(p).second) throw Error("duplicate pairing: " + p.name());
      if (p.model == TextVariant::kNoise) throw Error("models are trained on full or denoised text only");
    }
  }

  const auto docs = detail::prepare(corpus, config.threshold);
  const auto folds = make_folds(corpus, config.folds, config.seed);

  std::vector<std::vector<FoldResult>> per_fold(folds.size());
  std::size_t workers = config.workers != 0 ? config.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, folds.size());
  for (std::size_t start = 0; start < folds.size(); start += workers) {
    std::vector<std::future<std::vector<FoldResult>>> jobs;
    for (std::size_t f = start; f < std::min(folds.size(), start + workers); ++f) {
      std::set<std::string> test_ids(folds[f].begin(), folds[f].end());
      jobs.push_back(std::async(std::launch::async, [&, f, test_ids = std::move(test_ids)] {
        return detail::run_fold(f, docs, test_ids, vocabulary, config, pairings);
      }));
    }
    for (std::size_t j = 0; j < jobs.size(); ++j) per_fold[start + j] = jobs[j].get();
  }

  EvaluationReport report;
  report.threshold = config.threshold;
  report.k_extract = config.k_extract;
  report.folds = folds.size();
  report.seed = config.seed;
  for (std::size_t p = 0; p < pairings.size(); ++p) {
    PairingSummary s;
    s.pairing = pairings[p];
    for (std::size_t f = 0; f < folds.size(); ++f) {
      const FoldResult& r = per_fold[f][p];
      report.fold_results.push_back(r);
      s.precision += r.precision;
      s.recall += r.recall;
      s.fscore += r.fscore;
      s.hooper += r.hooper;
      s.rolling += r.rolling;
      s.cosine += r.cosine;
      s.mean_error_rate += r.error_rate;
      s.error_rates.push_back(r.error_rate);
    }
    const double n = static_cast<double>(folds.size());
    s.precision /= n;
    s.recall /= n;
    s.fscore /= n;
    s.hooper /= n;
    s.rolling /= n;
    s.cosine /= n;
    s.mean_error_rate /= n;
    report.summaries.push_back(std::move(s));
  }
  const auto& bench = report.summary(kBenchmark).error_rates;
  for (auto& s : report.summaries) {
    if (bench.size() == kPairedFolds) s.versus_benchmark = paired_t_test(bench, s.error_rates);
  }
  return report;
}

// ---------------------------------------------------------------------------
// Threshold sweep

inline std::vector<double> default_sweep_thresholds() { return {0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}; }

struct SweepResult {
  std::vector<EvaluationReport> reports;  // one per threshold, ascending input order
  std::map<Pairing, double> argmin_threshold;

  /// Mean error rate of a pairing at each threshold.
  std::vector<double> curve(const Pairing& p) const {
    std::vector<double> out;
    for (const auto& r : reports) out.push_back(r.summary(p).mean_error_rate);
    return out;
  }
};

/// Global minimum of a curve; the smallest threshold wins ties.
inline double argmin_threshold(const std::vector<double>& thresholds, const std::vector<double>& errors) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < errors.size(); ++i) {
    if (errors[i] < errors[best]) best = i;
  }
  return thresholds.at(best);
}

inline SweepResult threshold_sweep(const std::vector<Document>& corpus, const Vocabulary* vocabulary,
                                   const std::vector<double>& thresholds, CrossValidationConfig config) {
  if (thresholds.empty()) throw Error("no thresholds given");
  for (double t : thresholds) check_threshold(t);
  SweepResult out;
  std::vector<double> ts;
  for (double t : thresholds) {
    config.threshold = t;
    out.reports.push_back(cross_validate(corpus, vocabulary, config));
    ts.push_back(t);
  }
  for (const auto& s : out.reports.front().summaries) {
    out.argmin_threshold[s.pairing] = argmin_threshold(ts, out.curve(s.pairing));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Report files

inline std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline constexpr std::string_view kReportCsvHeader =
    "threshold,pairing,fold,precision,recall,fscore,hooper,rolling,cosine,error_rate,"
    "false_positives,false_negatives,instances,documents";

inline void append_csv_rows(std::string& out, const EvaluationReport& report) {
  for (const auto& r : report.fold_results) {
    out += format_double(report.threshold) + "," + r.pairing.name() + "," + std::to_string(r.fold_index) + "," +
           format_double(r.precision) + "," + format_double(r.recall) + "," + format_double(r.fscore) + "," +
           format_double(r.hooper) + "," + format_double(r.rolling) + "," + format_double(r.cosine) + "," +
           format_double(r.error_rate) + "," + std::to_string(r.false_positives) + "," +
           std::to_string(r.false_negatives) + "," + std::to_string(r.instances) + "," +
           std::to_string(r.documents) + "\n";
  }
}

/// One row per threshold x pairing x fold.
inline std::string report_csv(const EvaluationReport& report) {
  std::string out(kReportCsvHeader);
  out += "\n";
  append_csv_rows(out, report);
  return out;
}

inline nlohmann::json t_value_json(double t) {
  if (std::isinf(t)) return t > 0 ? "inf" : "-inf";
  return t;
}

inline nlohmann::json report_json(const EvaluationReport& report) {
  using nlohmann::json;
  json pairings = json::array();
  for (const auto& s : report.summaries) {
    pairings.push_back({{"pairing", s.pairing.name()},
                        {"trained_model", variant_name(s.pairing.model)},
                        {"test_set", variant_name(s.pairing.test)},
                        {"precision", s.precision},
                        {"recall", s.recall},
                        {"fscore", s.fscore},
                        {"hooper", s.hooper},
                        {"rolling", s.rolling},
                        {"cosine", s.cosine},
                        {"mean_error_rate", s.mean_error_rate},
                        {"error_rates", s.error_rates},
                        {"t_value", t_value_json(s.versus_benchmark.t)},
                        {"significant_05", s.versus_benchmark.significant_05},
                        {"significant_02", s.versus_benchmark.significant_02},
                        {"degenerate", s.versus_benchmark.degenerate}});
  }
  return {{"threshold", report.threshold}, {"k", report.k_extract},   {"folds", report.folds},
          {"seed", report.seed},           {"benchmark", kBenchmark.name()}, {"pairings", pairings}};
}

inline std::string sweep_csv(const SweepResult& sweep) {
  std::string out(kReportCsvHeader);
  out += "\n";
  for (const auto& r : sweep.reports) append_csv_rows(out, r);
  return out;
}

/// Plot data: mean error rate and F-score per threshold x pairing.
inline std::string sweep_curve_csv(const SweepResult& sweep) {
  std::string out = "threshold,pairing,mean_error_rate,fscore\n";
  for (const auto& r : sweep.reports) {
    for (const auto& s : r.summaries) {
      out += format_double(r.threshold) + "," + s.pairing.name() + "," + format_double(s.mean_error_rate) + "," +
             format_double(s.fscore) + "\n";
    }
  }
  return out;
}

inline nlohmann::json sweep_json(const SweepResult& sweep) {
  using nlohmann::json;
  json thresholds = json::array();
  for (const auto& r : sweep.reports) thresholds.push_back(r.threshold);
  json argmin = json::object();
  json curves = json::object();
  for (const auto& [p, t] : sweep.argmin_threshold) {
    argmin[p.name()] = t;
    curves[p.name()] = sweep.curve(p);
  }
  return {{"thresholds", thresholds}, {"argmin_threshold", argmin}, {"mean_error_rate", curves}};
}

}  // namespace keydenoise
