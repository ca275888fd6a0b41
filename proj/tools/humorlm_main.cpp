// humorlm_main.cpp
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Command line driver. Commands: train, score, compare, rank, eval.
// Result rows go to standard output as stable TAB-separated lines;
// diagnostics go to standard error.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "humorlm/arpa.hpp"
#include "humorlm/backoff_model.hpp"
#include "humorlm/corpus_io.hpp"
#include "humorlm/counts.hpp"
#include "humorlm/discounts.hpp"
#include "humorlm/errors.hpp"
#include "humorlm/experiment.hpp"
#include "humorlm/ranking.hpp"
#include "humorlm/tokenizer.hpp"
#include "humorlm/vocabulary.hpp"

namespace {

using namespace humorlm;

std::string format_value(double value) {
  if (value == 0.0) value = 0.0;  // normalize -0
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.6f", value);
  return buffer;
}

Polarity to_polarity(const std::string& name) {
  return name == "news" ? Polarity::kLowerIsFunnier
                        : Polarity::kHigherIsFunnier;
}

struct TrainArgs {
  std::string corpus;
  std::string model;
  std::size_t order = 3;
  std::uint64_t min_count = 1;
  std::size_t threads = 1;
};

int cmd_train(const TrainArgs& args) {
  const auto sentences = ingest_plaintext_file(args.corpus);
  const Vocabulary vocab = build_vocabulary(sentences, args.min_count);
  std::cerr << "read " << sentences.size() << " sentences, vocabulary size "
            << vocab.size() << "\n";

  const CountTable counts =
      count_ngrams(sentences, vocab, args.order, args.threads);
  const Discounts discounts = Discounts::estimate(counts);
  const BackoffModel model = train(counts, discounts, vocab, args.order);
  write_arpa(model, std::filesystem::path(args.model));

  std::cout << "vocab\t" << vocab.size() << "\n";
  for (std::size_t k = 1; k <= args.order; ++k)
    std::cout << "ngram " << k << "\t" << model.entries(k).size() << "\n";
  for (std::size_t k = 1; k <= args.order; ++k) {
    const OrderDiscounts& d = discounts.at(k);
    std::cout << "discounts " << k << "\t" << format_value(d.d1) << "\t"
              << format_value(d.d2) << "\t" << format_value(d.d3plus) << "\n";
  }
  std::cerr << "wrote " << args.model << "\n";
  return 0;
}

struct ScoreArgs {
  std::string model;
  std::string polarity = "funny";
  bool per_token = false;
  std::string input = "-";
};

int with_input(const std::string& path, const std::function<int(std::istream&)>& body) {
  if (path == "-") return body(std::cin);
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open input file: " << path << "\n";
    return 1;
  }
  return body(in);
}

int cmd_score(const ScoreArgs& args) {
  const BackoffModel model = read_arpa(std::filesystem::path(args.model));
  const Polarity polarity = to_polarity(args.polarity);
  return with_input(args.input, [&](std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      TweetRecord record;
      record.text = line;
      const ScoredTweet scored =
          score_tweet(model, polarity, args.per_token, record);
      std::cout << format_value(scored.score) << '\t'
                << format_value(scored.log10_prob) << '\t'
                << scored.token_count << '\n';
    }
    return 0;
  });
}

// compare reads pair lines: id1<TAB>text1<TAB>id2<TAB>text2, and prints the
// winning id per line.
int cmd_compare(const ScoreArgs& args) {
  const BackoffModel model = read_arpa(std::filesystem::path(args.model));
  const Polarity polarity = to_polarity(args.polarity);
  return with_input(args.input, [&](std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      std::vector<std::string> fields;
      std::istringstream split(line);
      std::string field;
      while (std::getline(split, field, '\t')) fields.push_back(field);
      if (fields.size() != 4)
        throw MalformedRecord("expected id1\\ttext1\\tid2\\ttext2", lineno);
      TweetRecord a{fields[0], fields[1], std::nullopt};
      TweetRecord b{fields[2], fields[3], std::nullopt};
      const std::string winner =
          compare_pair(score_tweet(model, polarity, args.per_token, a),
                       score_tweet(model, polarity, args.per_token, b));
      std::cout << winner << '\n';
    }
    return 0;
  });
}

struct RankArgs {
  std::string model;
  std::string polarity = "funny";
  bool per_token = false;
  std::string tsv;
};

int cmd_rank(const RankArgs& args) {
  const BackoffModel model = read_arpa(std::filesystem::path(args.model));
  const Polarity polarity = to_polarity(args.polarity);
  const HashtagSet set = ingest_tweet_tsv_file(args.tsv);
  if (set.tweets.empty()) throw EmptySet("no tweets in " + args.tsv);

  std::vector<ScoredTweet> scored;
  scored.reserve(set.tweets.size());
  for (const TweetRecord& tweet : set.tweets)
    scored.push_back(score_tweet(model, polarity, args.per_token, tweet));
  const SemiRanking ranking = semi_rank(scored);

  std::size_t rank = 1;
  std::cout << rank++ << "\ttop1\t" << ranking.top1 << "\n";
  for (const std::string& id : ranking.next9)
    std::cout << rank++ << "\tnext9\t" << id << "\n";
  for (const std::string& id : ranking.rest)
    std::cout << rank++ << "\trest\t" << id << "\n";

  if (set.fully_labeled()) {
    std::cout << "distance\t" << format_value(eval_subtask_b(set, ranking))
              << "\n";
  }
  return 0;
}

struct EvalArgs {
  std::vector<std::string> models;
  std::vector<std::string> polarities;
  bool per_token = false;
  std::string report;
  std::string data_dir;
  std::size_t threads = 1;
};

std::filesystem::path numbered_report_path(const std::filesystem::path& base,
                                           std::size_t index,
                                           std::size_t total) {
  if (total <= 1) return base;
  std::filesystem::path numbered = base;
  numbered.replace_extension();
  numbered += "." + std::to_string(index + 1);
  numbered += base.extension();
  return numbered;
}

int cmd_eval(const EvalArgs& args) {
  std::vector<std::string> polarities = args.polarities;
  if (polarities.empty()) polarities.assign(args.models.size(), "funny");
  if (polarities.size() == 1 && args.models.size() > 1)
    polarities.assign(args.models.size(), polarities[0]);
  if (polarities.size() != args.models.size()) {
    std::cerr << "error: need one --polarity per --model (or a single one "
                 "for all)\n";
    return 1;
  }

  int status = 0;
  for (std::size_t i = 0; i < args.models.size(); ++i) {
    try {
      const BackoffModel model =
          read_arpa(std::filesystem::path(args.models[i]));
      const ExperimentResult result =
          run_experiment(model, to_polarity(polarities[i]), args.per_token,
                         args.data_dir, args.threads);
      for (const std::string& warning : result.warnings)
        std::cerr << "warning: " << warning << "\n";
      if (!args.report.empty()) {
        const auto path = numbered_report_path(args.report, i,
                                               args.models.size());
        write_report(result.report, path);
        std::cerr << "wrote " << path.string() << "\n";
      }
      std::cout << args.models[i] << '\t' << polarities[i] << '\t'
                << format_value(result.report.accuracy_a) << '\t'
                << format_value(result.report.distance_b) << '\n';
    } catch (const Error& e) {
      std::cerr << "error: " << args.models[i] << ": " << e.what() << "\n";
      status = 1;
    }
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Backoff ngram language models for humor ranking"};
  app.require_subcommand(1);

  TrainArgs train_args;
  CLI::App* train_cmd =
      app.add_subcommand("train", "Train an ARPA model from plaintext");
  train_cmd->add_option("corpus", train_args.corpus, "Corpus file, one sentence per line")
      ->required();
  train_cmd->add_option("--model", train_args.model, "Output ARPA path")
      ->required();
  train_cmd->add_option("--order", train_args.order, "Ngram order")
      ->check(CLI::Range(1, 5));
  train_cmd->add_option("--min-count", train_args.min_count,
                        "Minimum token frequency kept in the vocabulary")
      ->check(CLI::PositiveNumber);
  train_cmd->add_option("--threads", train_args.threads, "Worker threads")
      ->check(CLI::Range(1, 64));

  ScoreArgs score_args;
  CLI::App* score_cmd =
      app.add_subcommand("score", "Score lines of text under a model");
  score_cmd->add_option("--model", score_args.model, "ARPA model path")
      ->required();
  score_cmd->add_option("--polarity", score_args.polarity,
                        "funny (higher is funnier) or news (lower is funnier)")
      ->check(CLI::IsMember({"funny", "news"}));
  score_cmd->add_flag("--per-token", score_args.per_token,
                      "Normalize the score by token count");
  score_cmd->add_option("input", score_args.input, "Input file, '-' = stdin");

  ScoreArgs compare_args;
  CLI::App* compare_cmd = app.add_subcommand(
      "compare", "Pick the funnier side of tab-separated tweet pairs");
  compare_cmd->add_option("--model", compare_args.model, "ARPA model path")
      ->required();
  compare_cmd->add_option("--polarity", compare_args.polarity,
                          "funny or news")
      ->check(CLI::IsMember({"funny", "news"}));
  compare_cmd->add_flag("--per-token", compare_args.per_token,
                        "Normalize scores by token count");
  compare_cmd->add_option("input", compare_args.input,
                          "Pair file, '-' = stdin");

  RankArgs rank_args;
  CLI::App* rank_cmd =
      app.add_subcommand("rank", "Semi-rank one hashtag's tweet TSV");
  rank_cmd->add_option("--model", rank_args.model, "ARPA model path")
      ->required();
  rank_cmd->add_option("--polarity", rank_args.polarity, "funny or news")
      ->check(CLI::IsMember({"funny", "news"}));
  rank_cmd->add_flag("--per-token", rank_args.per_token,
                     "Normalize scores by token count");
  rank_cmd->add_option("tsv", rank_args.tsv, "Hashtag TSV file")->required();

  EvalArgs eval_args;
  CLI::App* eval_cmd = app.add_subcommand(
      "eval", "Evaluate models over a directory of labeled hashtag TSVs");
  eval_cmd->add_option("--model", eval_args.models, "ARPA model path (repeatable)")
      ->required();
  eval_cmd->add_option("--polarity", eval_args.polarities,
                       "funny or news, one per model or one for all")
      ->check(CLI::IsMember({"funny", "news"}));
  eval_cmd->add_flag("--per-token", eval_args.per_token,
                     "Normalize scores by token count");
  eval_cmd->add_option("--report", eval_args.report, "EvalReport output path");
  eval_cmd->add_option("--threads", eval_args.threads, "Worker threads")
      ->check(CLI::Range(1, 64));
  eval_cmd->add_option("data_dir", eval_args.data_dir,
                       "Directory of <hashtag>.tsv files")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (train_cmd->parsed()) return cmd_train(train_args);
    if (score_cmd->parsed()) return cmd_score(score_args);
    if (compare_cmd->parsed()) return cmd_compare(compare_args);
    if (rank_cmd->parsed()) return cmd_rank(rank_args);
    if (eval_cmd->parsed()) return cmd_eval(eval_args);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
