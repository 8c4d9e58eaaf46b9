// Copyright 2026 The kpx Authors.
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

// kpx: opinionated keyphrase extraction from comment corpora.
//
//   kpx run --input comments.jsonl --out-dir out/
//   kpx preprocess | annotate | chunk | score   (one stage, JSONL out)

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <sstream>

#include "kpx/error.hpp"
#include "kpx/pipeline.hpp"
#include "kpx/text.hpp"

namespace {

using json = nlohmann::ordered_json;
using kpx::ConfigError;
using kpx::IoError;

constexpr int kExitIo = 1;
constexpr int kExitConfig = 2;

struct Options {
  kpx::RunConfig run;
  std::string input;  // empty or "-" reads standard input
  std::string format = "jsonl";
  std::string report_format = "csv";
  std::string internal_stopwords;
  bool no_merge = false;
  bool no_dedup = false;
  bool plain = false;
  bool preprocess_first = false;
  std::vector<std::string> steps;
};

void add_data_options(CLI::App* cmd, Options& o) {
  auto& d = o.run.data;
  cmd->add_option("--contractions", d.contractions, "Contraction table (CSV)")->group("Data files");
  cmd->add_option("--slang", d.slang, "Slang table (CSV)")->group("Data files");
  cmd->add_option("--tagger-lexicon", d.tagger_lexicon, "POS lexicon (TSV)")->group("Data files");
  cmd->add_option("--abbreviations", d.abbreviations, "Abbreviation list")->group("Data files");
  cmd->add_option("--lemma-exceptions", d.lemma_exceptions, "Lemma exceptions (TSV)")
      ->group("Data files");
  cmd->add_option("--stopwords", d.stopwords, "Whole-phrase stopwords")->group("Data files");
  cmd->add_option("--boundary-stopwords", d.boundary_stopwords,
                  "Words that may not start or end a keyphrase")
      ->group("Data files");
  cmd->add_option("--internal-stopwords", o.internal_stopwords,
                  "Words removed from inside keyphrases (default: none)")
      ->group("Data files");
  cmd->add_option("--lexicon", d.sentiment_lexicon, "Sentiment lexicon (TSV)")->group("Data files");
  cmd->add_option("--english-words", d.english_words, "English word list for language detection")
      ->group("Data files");
}

void add_extraction_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--grammar", o.run.grammar, "Chunk grammar over POS tags")
      ->default_str(std::string(kpx::kDefaultGrammar));
  cmd->add_option("--max-len", o.run.max_len, "Maximum keyphrase length in tokens")
      ->capture_default_str();
  cmd->add_option("--neutral-band", o.run.neutral_band, "Scores within +-band are neutral")
      ->capture_default_str();
  cmd->add_flag("--no-merge-adjacent-chunks", o.no_merge,
                "Start a new candidate at every chunk instead of merging adjacent chunks");
}

// Reads all lines of the named file, or standard input for "" and "-".
class LineSource {
 public:
  explicit LineSource(const std::string& path) {
    if (path.empty() || path == "-") {
      in_ = &std::cin;
    } else {
      file_ = std::make_unique<std::ifstream>(path, std::ios::binary);
      if (!*file_) throw IoError("cannot open input file: " + path);
      in_ = file_.get();
    }
  }

  bool next(std::string& line) {
    if (!std::getline(*in_, line)) return false;
    ++line_no_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    line = kpx::text::sanitize_utf8(line);
    return true;
  }

  std::size_t line_no() const { return line_no_; }

 private:
  std::unique_ptr<std::ifstream> file_;
  std::istream* in_ = nullptr;
  std::size_t line_no_ = 0;
};

// A JSON object line with a string "text" field, or the raw line.
std::pair<std::string, std::string> read_record(const std::string& line, std::size_t line_no) {
  if (!line.empty() && line.front() == '{') {
    const json j = json::parse(line, nullptr, false);
    if (j.is_object() && j.contains("text") && j["text"].is_string()) {
      std::string id = j.contains("id") && j["id"].is_string() ? j["id"].get<std::string>()
                                                              : std::to_string(line_no);
      return {id, j["text"].get<std::string>()};
    }
  }
  return {std::to_string(line_no), line};
}

kpx::Preprocessor load_preprocessor(const kpx::DataPaths& d) {
  return kpx::Preprocessor(kpx::ExpansionTable::load(d.contractions, "contraction"),
                           kpx::ExpansionTable::load(d.slang, "slang"));
}

kpx::Annotator load_annotator(const kpx::DataPaths& d) {
  return kpx::Annotator(kpx::load_word_list(d.abbreviations),
                        kpx::PosTagger(kpx::TaggerLexicon::load(d.tagger_lexicon)),
                        kpx::Lemmatizer(kpx::LemmaTable::load(d.lemma_exceptions)));
}

json tokens_json(const std::vector<kpx::TaggedToken>& sentence) {
  json arr = json::array();
  for (const auto& t : sentence)
    arr.push_back({{"surface", t.surface}, {"lemma", t.lemma}, {"tag", std::string(kpx::to_string(t.tag))}});
  return arr;
}

int cmd_preprocess(const Options& o) {
  const auto pre = load_preprocessor(o.run.data);
  const auto& names = kpx::Preprocessor::step_names();
  std::vector<std::size_t> selected;
  for (const auto& name : o.steps) {
    const auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw ConfigError("unknown preprocessing step: " + name);
    selected.push_back(static_cast<std::size_t>(it - names.begin()));
  }
  LineSource src(o.input);
  std::string line;
  while (src.next(line)) {
    auto [id, body] = read_record(line, src.line_no());
    kpx::CleanDocument doc;
    if (selected.empty()) {
      doc = pre.clean(id, body);
    } else {
      doc.id = id;
      doc.text = body;
      for (std::size_t i : selected) {
        std::string next = pre.apply_step(i, doc.text);
        if (next != doc.text) doc.steps_applied.push_back(names[i]);
        doc.text = std::move(next);
      }
    }
    if (o.plain) {
      std::cout << doc.text << '\n';
    } else {
      std::cout << json{{"id", doc.id}, {"text", doc.text}, {"steps_applied", doc.steps_applied}}.dump()
                << '\n';
    }
  }
  return 0;
}

int cmd_annotate(const Options& o) {
  const auto annotator = load_annotator(o.run.data);
  std::optional<kpx::Preprocessor> pre;
  if (o.preprocess_first) pre.emplace(load_preprocessor(o.run.data));
  LineSource src(o.input);
  std::string line;
  while (src.next(line)) {
    auto [id, body] = read_record(line, src.line_no());
    if (pre) body = (*pre)(body);
    const auto sentences = annotator.annotate(body);
    for (std::size_t s = 0; s < sentences.size(); ++s) {
      std::cout << json{{"id", id}, {"sentence_index", s}, {"tokens", tokens_json(sentences[s])}}.dump()
                << '\n';
    }
  }
  return 0;
}

// Annotate output, or whitespace-separated word/TAG pairs lemmatized here.
std::vector<kpx::TaggedToken> parse_tagged_line(const std::string& line, std::size_t line_no,
                                                const kpx::Lemmatizer& lemmatizer) {
  std::vector<kpx::TaggedToken> out;
  const auto fail = [&](const std::string& msg) {
    throw ConfigError("input line " + std::to_string(line_no) + ": " + msg);
  };
  if (!line.empty() && line.front() == '{') {
    const json j = json::parse(line, nullptr, false);
    if (!j.is_object() || !j.contains("tokens") || !j["tokens"].is_array())
      fail("expected an object with a \"tokens\" array");
    for (const auto& t : j["tokens"]) {
      if (!t.is_object() || !t.contains("surface") || !t.contains("tag")) fail("bad token object");
      const auto tag = kpx::parse_pos_tag(t["tag"].get<std::string>());
      if (!tag) fail("unknown tag " + t["tag"].get<std::string>());
      const std::string surface = t["surface"].get<std::string>();
      const std::string lemma = t.contains("lemma") ? t["lemma"].get<std::string>()
                                                    : lemmatizer.lemma(surface, *tag);
      out.push_back({surface, lemma, *tag, 0, out.size()});
    }
    return out;
  }
  for (std::string_view item : kpx::text::split_whitespace(line)) {
    const auto slash = item.rfind('/');
    if (slash == std::string_view::npos || slash == 0 || slash + 1 == item.size())
      fail("expected word/TAG, got \"" + std::string(item) + "\"");
    const std::string word(item.substr(0, slash));
    const auto tag = kpx::parse_pos_tag(item.substr(slash + 1));
    if (!tag) fail("unknown tag " + std::string(item.substr(slash + 1)));
    out.push_back({word, lemmatizer.lemma(word, *tag), *tag, 0, out.size()});
  }
  return out;
}

int cmd_chunk(const Options& o) {
  const auto grammar = kpx::CompiledGrammar::compile(o.run.grammar);
  const kpx::Lemmatizer lemmatizer(kpx::LemmaTable::load(o.run.data.lemma_exceptions));
  LineSource src(o.input);
  std::string line;
  while (src.next(line)) {
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    const auto sentence = parse_tagged_line(line, src.line_no(), lemmatizer);
    const auto chunks = kpx::find_chunks(sentence, grammar);
    const auto iob = kpx::to_iob(sentence, chunks);
    json triples = json::array();
    for (const auto& t : iob)
      triples.push_back({t.lemma, std::string(kpx::to_string(t.tag)), std::string(kpx::to_string(t.label))});
    json spans = json::array();
    for (const auto& c : chunks) spans.push_back({c.start, c.end});
    json candidates = json::array();
    for (const auto& lemmas : kpx::assemble_keyphrases(iob, !o.no_merge))
      candidates.push_back(kpx::text::join(lemmas, " "));
    std::cout << json{{"iob", triples}, {"chunks", spans}, {"candidates", candidates}}.dump() << '\n';
  }
  return 0;
}

int cmd_score(const Options& o) {
  const auto lexicon = kpx::SentimentLexicon::load(o.run.data.sentiment_lexicon);
  kpx::FilterConfig filter;
  filter.neutral_band = o.run.neutral_band;
  filter.validate();
  LineSource src(o.input);
  std::string line;
  while (src.next(line)) {
    auto [id, body] = read_record(line, src.line_no());
    const double score = kpx::round_score(kpx::sentiment_score(body, lexicon));
    const auto polarity = kpx::classify_polarity(score, filter);
    if (o.plain) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.4f", score);
      std::cout << buf << ' ' << kpx::to_string(polarity) << '\n';
    } else {
      std::cout << json{{"text", body}, {"score", score}, {"polarity", std::string(kpx::to_string(polarity))}}
                       .dump()
                << '\n';
    }
  }
  return 0;
}

int cmd_run(Options& o) {
  auto& cfg = o.run;
  if (o.input.empty()) throw ConfigError("--input is required");
  cfg.input = o.input;
  cfg.format = kpx::parse_corpus_format(o.format);
  cfg.report_format = kpx::parse_report_format(o.report_format);
  cfg.merge_adjacent_chunks = !o.no_merge;
  cfg.dedup = !o.no_dedup;
  if (!o.internal_stopwords.empty()) cfg.data.internal_stopwords = o.internal_stopwords;
  const auto summary = kpx::run_pipeline(cfg, &std::cerr);
  std::cerr << "kpx: " << summary.read << " comments read, " << summary.english
            << " processed, " << summary.refine.emitted << " keyphrases emitted -> "
            << cfg.out_dir.string() << '\n';
  return 0;
}

// Splices the entries of `run --config FILE` in front of the other run
// arguments; with take-last options the command line then wins.
std::vector<std::string> expand_config(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  if (args.empty() || args.front() != "run") return args;
  const auto run_it = args.begin();
  std::optional<std::string> path;
  for (auto it = run_it + 1; it != args.end(); ++it) {
    if (*it == "--config" && it + 1 != args.end()) path = *(it + 1);
    if (it->rfind("--config=", 0) == 0) path = it->substr(9);
  }
  if (!path) return args;
  std::ifstream in(*path);
  if (!in) throw ConfigError("cannot open config file: " + *path);
  std::vector<std::string> injected;
  for (const auto& item : CLI::ConfigINI().from_config(in)) {
    if (!item.parents.empty() && !(item.parents.size() == 1 && item.parents[0] == "run"))
      throw ConfigError(*path + ": unexpected section for key " + item.name);
    if (item.name == "config") continue;
    const std::string flag = "--" + item.name;
    if (item.inputs.size() == 1 && (item.inputs[0] == "true" || item.inputs[0] == "false")) {
      if (item.inputs[0] == "true") injected.push_back(flag);
      continue;
    }
    for (const auto& v : item.inputs) {
      injected.push_back(flag);
      injected.push_back(v);
    }
  }
  args.insert(run_it + 1, injected.begin(), injected.end());
  return args;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Opinionated keyphrase extraction from social-media comment corpora", "kpx"};
  app.require_subcommand(1);
  Options o;

  auto* pre = app.add_subcommand("preprocess", "Normalize text lines (plain or JSONL with \"text\")");
  pre->add_option("input", o.input, "Input file (default: standard input)");
  pre->add_flag("--plain", o.plain, "Print only the normalized text");
  pre->add_option("--steps", o.steps, "Apply only these steps, in the given order, once")
      ->delimiter(',');
  add_data_options(pre, o);

  auto* ann = app.add_subcommand("annotate", "Split, tokenize, tag and lemmatize text lines");
  ann->add_option("input", o.input, "Input file (default: standard input)");
  ann->add_flag("--preprocess", o.preprocess_first, "Normalize each line first");
  add_data_options(ann, o);

  auto* chk = app.add_subcommand("chunk", "Chunk tagged sentences (annotate JSONL or word/TAG lines)");
  chk->add_option("input", o.input, "Input file (default: standard input)");
  chk->add_option("--grammar", o.run.grammar, "Chunk grammar over POS tags")
      ->default_str(std::string(kpx::kDefaultGrammar));
  chk->add_flag("--no-merge-adjacent-chunks", o.no_merge,
                "Start a new candidate at every chunk instead of merging adjacent chunks");
  add_data_options(chk, o);

  auto* scr = app.add_subcommand("score", "Sentiment-score phrase lines");
  scr->add_option("input", o.input, "Input file (default: standard input)");
  scr->add_option("--neutral-band", o.run.neutral_band, "Scores within +-band are neutral")
      ->capture_default_str();
  scr->add_flag("--plain", o.plain, "Print \"score polarity\" only");
  add_data_options(scr, o);

  auto* run = app.add_subcommand("run", "Run the full pipeline over a corpus");
  run->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  std::string config_path;
  run->add_option("--config", config_path,
                  "Flat key=value file of run flags; command-line flags take precedence");
  run->add_option("--input", o.input, "Corpus file")->required();
  run->add_option("--format", o.format, "Corpus format: jsonl or csv")->capture_default_str();
  run->add_option("--out-dir", o.run.out_dir, "Output directory")->capture_default_str();
  run->add_option("--report-format", o.report_format, "Stats report format: csv or json")
      ->capture_default_str();
  add_extraction_options(run, o);
  run->add_option("--sample-fraction", o.run.corpus.sample_fraction, "Fraction of comments kept")
      ->capture_default_str();
  run->add_option("--seed", o.run.corpus.sample_seed, "Sampling seed")->capture_default_str();
  run->add_option("--english-threshold", o.run.corpus.english_threshold,
                  "Minimum English word coverage")
      ->capture_default_str();
  run->add_flag("--no-dedup", o.no_dedup, "Keep duplicate comments");
  run->add_option("--jobs", o.run.jobs, "Worker threads")->capture_default_str();
  add_data_options(run, o);

  try {
    auto args = expand_config(argc, argv);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const ConfigError& e) {
    std::cerr << "kpx: configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfig;
  }

  try {
    if (*pre) return cmd_preprocess(o);
    if (*ann) return cmd_annotate(o);
    if (*chk) return cmd_chunk(o);
    if (*scr) return cmd_score(o);
    return cmd_run(o);
  } catch (const ConfigError& e) {
    std::cerr << "kpx: configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const IoError& e) {
    std::cerr << "kpx: I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "kpx: error: " << e.what() << '\n';
    return kExitIo;
  }
}
