// keydenoise: denoise, train, extract, cv and sweep over a corpus directory.
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "keydenoise/cli.hpp"

namespace {

struct Flag {
  const char* key;
  const char* help;
};

constexpr Flag kFlags[] = {
    {"corpus", "corpus directory of <id>.txt and <id>.key files"},
    {"vocab", "controlled vocabulary TSV (omit for free-text indexing)"},
    {"stopwords", "stopword list, one word per line (default: built-in)"},
    {"threshold", "denoising threshold in (0,1] (default 0.7)"},
    {"k", "keyphrases per document, or a preset: fao780=8, cern290=7, nlm500=15 (default 8)"},
    {"min-len", "minimum phrase length in words (default 1)"},
    {"max-len", "maximum phrase length in words (default 5)"},
    {"seed", "random seed for fold assignment (default 1)"},
    {"text-variant", "full | denoised | noise (default full)"},
    {"pairings", "comma-separated Model-Test pairings, e.g. Full-Full,Denoised-Full"},
    {"thresholds", "comma-separated sweep thresholds (default 0.3,...,0.9)"},
    {"out", "output directory (default .)"},
    {"model", "model file (default <out>/model.kdm)"},
    {"workers", "parallel folds (default: hardware threads)"},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Keyphrase indexing with readability-based text denoising"};
  app.require_subcommand(1);

  using Command = int (*)(const keydenoise::RunConfig&, std::ostream&, std::ostream&);
  const std::vector<std::pair<std::string, std::pair<std::string, Command>>> commands = {
      {"denoise", {"split each document into denoised and noise text", keydenoise::cmd_denoise}},
      {"train", {"train a keyphrase model", keydenoise::cmd_train}},
      {"extract", {"extract top-k keyphrases with a trained model", keydenoise::cmd_extract}},
      {"cv", {"10-fold cross-validation over model/test pairings", keydenoise::cmd_cv}},
      {"sweep", {"cross-validate across denoising thresholds", keydenoise::cmd_sweep}},
  };

  std::map<std::string, std::map<std::string, CLI::Option*>> options;
  std::map<std::string, std::map<std::string, std::string>> raw;
  std::map<std::string, std::string> config_file;
  std::map<std::string, CLI::Option*> free_text_flag;
  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, info] : commands) {
    CLI::App* sub = app.add_subcommand(name, info.first);
    subs[name] = sub;
    for (const auto& f : kFlags) {
      options[name][f.key] = sub->add_option(std::string("--") + f.key, raw[name][f.key], f.help);
    }
    free_text_flag[name] = sub->add_flag("--free-text", "with --vocab, keep candidates that match no term");
    sub->add_option("--config", config_file[name], "key=value file; flags override it");
  }

  std::string command_name;
  try {
    app.parse(argc, argv);
    for (const auto& [name, sub] : subs) {
      if (sub->parsed()) command_name = name;
    }

    keydenoise::RunConfig config;
    if (!config_file[command_name].empty()) {
      for (const auto& [key, value] : keydenoise::parse_config_text(keydenoise::read_file(config_file[command_name]))) {
        keydenoise::apply_option(config, key, value);
      }
    }
    for (const auto& [key, opt] : options[command_name]) {
      if (opt->count() > 0) keydenoise::apply_option(config, key, raw[command_name][key]);
    }
    if (free_text_flag[command_name]->count() > 0) keydenoise::apply_option(config, "free-text", "true");

    for (const auto& [name, info] : commands) {
      if (name == command_name) return info.second(config, std::cout, std::cerr);
    }
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << nlohmann::json{{"error", e.what()}, {"command", command_name}}.dump() << "\n";
    return 1;
  }
  return 1;
}
