// sner: command-line front end for the Sindhi named-entity tagger.
//
//   sner tag [FILE...] [--format inline|tabular|jsonl] [--store PATH]
//   sner eval --gold PATH [--json]
//   sner query --store PATH [--label L] [--surface S] [--rule R]
//   sner gazetteer list|check|add ...
//
// Exit codes: 0 success, 1 domain error, 2 usage error. Errors go to stderr
// with an `error:<code>:` prefix.

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "sner/config.h"
#include "sner/corpus.h"
#include "sner/error.h"
#include "sner/eval.h"
#include "sner/gazetteer.h"
#include "sner/pipeline.h"
#include "sner/render.h"

namespace {

using sner::Error;
using sner::ErrorCode;

struct Options {
  std::string config;
  std::vector<std::string> disabled_rules;

  // tag
  std::vector<std::string> inputs;
  std::string format = "inline";
  std::string store;
  bool per_line = false;
  int jobs = 1;

  // eval
  std::string gold;
  bool json = false;

  // query
  std::string label;
  std::string surface;
  std::string rule;

  // gazetteer add
  std::string file;
  std::string category;
};

std::vector<std::string> LabelNames() {
  std::vector<std::string> names;
  for (size_t l = 0; l < sner::kNumLabels; ++l) {
    names.emplace_back(sner::LabelName(static_cast<sner::TagLabel>(l)));
  }
  return names;
}

std::vector<std::string> RuleNames() {
  std::vector<std::string> names;
  for (size_t r = 0; r < sner::kNumRules; ++r) {
    names.emplace_back(sner::RuleName(static_cast<sner::RuleId>(r)));
  }
  return names;
}

sner::EngineConfig ResolveConfig(const Options& opts) {
  std::filesystem::path path;
  if (!opts.config.empty()) {
    path = opts.config;
  } else if (const char* env = std::getenv("NER_CONFIG"); env && *env) {
    path = env;
  } else {
    path = sner::DefaultConfigPath();
  }
  sner::EngineConfig config = sner::EngineConfig::Load(path);
  for (const std::string& name : opts.disabled_rules) {
    config.Enable(*sner::ParseRule(name), false);
  }
  return config;
}

std::vector<std::filesystem::path> GazetteerSources(
    const sner::EngineConfig& config) {
  std::vector<std::filesystem::path> sources = config.gazetteers;
  sources.push_back(config.suffixes);
  sources.push_back(config.stopwords);
  return sources;
}

std::string ReadAll(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

std::string ReadInput(const std::string& name) {
  std::string text;
  if (name == "-") {
    text = ReadAll(std::cin);
  } else {
    std::ifstream in(name, std::ios::binary);
    if (!in) throw Error(ErrorCode::kIOFailure, "cannot read " + name);
    text = ReadAll(in);
  }
  if (!sner::IsValidUtf8(text)) {
    throw Error(ErrorCode::kInvalidInput, name + " is not valid UTF-8");
  }
  return text;
}

std::vector<std::string> SplitDocuments(const std::string& text,
                                        bool per_line) {
  if (!per_line) return {text};
  std::vector<std::string> docs;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    docs.push_back(line);
  }
  return docs;
}

int RunTag(const Options& opts) {
  const sner::OutputFormat format = sner::ParseFormat(opts.format);
  const sner::Engine engine = sner::Engine::Build(ResolveConfig(opts));

  std::vector<std::string> inputs = opts.inputs;
  if (inputs.empty()) inputs.push_back("-");

  std::vector<std::string> docs;
  for (const std::string& input : inputs) {
    for (std::string& d : SplitDocuments(ReadInput(input), opts.per_line)) {
      docs.push_back(std::move(d));
    }
  }

  // Tag in parallel; results are emitted in input order.
  std::vector<sner::TaggedDocument> tagged(docs.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < docs.size(); i = next++) {
      tagged[i] = engine.Tag(docs[i]);
    }
  };
  const size_t jobs = std::max<size_t>(
      1, std::min<size_t>(static_cast<size_t>(opts.jobs), docs.size()));
  std::vector<std::thread> threads;
  for (size_t j = 1; j < jobs; ++j) threads.emplace_back(worker);
  worker();
  for (std::thread& t : threads) t.join();

  std::optional<sner::CorpusStore> store;
  if (!opts.store.empty()) store = sner::CorpusStore::Open(opts.store);

  for (size_t i = 0; i < tagged.size(); ++i) {
    std::string out = sner::Render(tagged[i], format);
    if (format == sner::OutputFormat::kInline &&
        (opts.per_line ||
         (i + 1 < tagged.size() && (out.empty() || out.back() != '\n')))) {
      out += '\n';
    }
    if (format == sner::OutputFormat::kTabular && i + 1 < tagged.size()) {
      out += '\n';
    }
    std::cout << out;
    if (store) {
      std::cerr << "stored record " << store->Append(tagged[i]) << "\n";
    }
  }
  std::cout.flush();
  return 0;
}

int RunEval(const Options& opts) {
  const sner::GoldCorpus gold = sner::LoadGold(opts.gold);
  const sner::Engine engine = sner::Engine::Build(ResolveConfig(opts));
  const sner::EvalReport report = sner::Evaluate(engine, gold);
  if (opts.json) {
    std::cout << sner::ReportToJson(report).dump(2) << "\n";
  } else {
    std::cout << sner::FormatReport(report);
  }
  return 0;
}

int RunQuery(const Options& opts) {
  const sner::CorpusStore store = sner::CorpusStore::OpenExisting(opts.store);
  sner::QueryFilter filter;
  if (!opts.label.empty()) filter.label = sner::ParseLabel(opts.label);
  if (!opts.surface.empty()) filter.surface = opts.surface;
  if (!opts.rule.empty()) filter.rule = sner::ParseRule(opts.rule);
  for (const sner::QueryHit& hit : store.Query(filter)) {
    std::cout << hit.record << '\t' << sner::LabelName(hit.span.label) << '\t'
              << hit.span.surface << '\t' << sner::RuleName(hit.span.rule)
              << '\n';
  }
  return 0;
}

int RunGazetteerList(const Options& opts) {
  const sner::EngineConfig config = ResolveConfig(opts);
  const sner::Gazetteer gazetteer =
      sner::Gazetteer::Load(GazetteerSources(config), config.specials);
  const sner::CategoryCounts counts = gazetteer.Stats();
  for (size_t c = 0; c < sner::kNumCategories; ++c) {
    std::cout << sner::CategoryName(static_cast<sner::Category>(c)) << '\t'
              << counts[c] << '\n';
  }
  std::cout << "total\t" << gazetteer.size() << '\n';
  return 0;
}

int RunGazetteerCheck(const Options& opts) {
  const sner::EngineConfig config = ResolveConfig(opts);
  const auto diagnostics =
      sner::Gazetteer::Validate(GazetteerSources(config), config.specials);
  for (const sner::Diagnostic& d : diagnostics) {
    std::cerr << "error:" << sner::ErrorCodeName(d.code) << ": " << d.source
              << ": " << d.message << '\n';
  }
  if (!diagnostics.empty()) return 1;
  std::cout << "OK\n";
  return 0;
}

int RunGazetteerAdd(const Options& opts) {
  const sner::EngineConfig config = ResolveConfig(opts);
  auto category = sner::ParseCategory(opts.category);
  if (!category) {
    throw Error(ErrorCode::kUnknownCategory,
                "unknown category '" + opts.category + "'");
  }

  std::vector<std::filesystem::path> sources = GazetteerSources(config);
  const std::filesystem::path target = opts.file;
  bool listed = false;
  for (const auto& s : sources) {
    std::error_code ec;
    if (std::filesystem::equivalent(s, target, ec)) listed = true;
  }
  if (!listed && std::filesystem::exists(target)) sources.push_back(target);

  // Replay every configured entry so that the new one is checked against
  // all of them.
  sner::Gazetteer::Builder builder(config.specials);
  for (const auto& path : sources) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw Error(ErrorCode::kMissingDataFile,
                  "cannot open gazetteer file " + path.string());
    }
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (auto d = builder.AddLine(line, path.string() + ":" +
                                             std::to_string(line_no))) {
        throw Error(d->code, d->ToString());
      }
    }
  }
  if (auto d = builder.Add(opts.surface, *category, "<new entry>")) {
    throw Error(d->code, d->ToString());
  }

  bool needs_newline = false;
  if (std::ifstream existing{target, std::ios::binary | std::ios::ate}) {
    const auto size = static_cast<std::streamoff>(existing.tellg());
    if (size > 0) {
      existing.seekg(size - 1);
      needs_newline = existing.get() != '\n';
    }
  }
  std::ofstream out(target, std::ios::binary | std::ios::app);
  if (!out) {
    throw Error(ErrorCode::kIOFailure, "cannot write " + target.string());
  }
  if (needs_newline) out << '\n';
  out << sner::NormalizeWhitespace(opts.surface) << '\t' << opts.category
      << '\n';
  if (!out.flush()) {
    throw Error(ErrorCode::kIOFailure, "cannot write " + target.string());
  }
  std::cout << "added\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options opts;
  CLI::App app{"Rule-based named-entity tagger for Sindhi text"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--config", opts.config,
                 "Engine config file (default: $NER_CONFIG, then the shipped "
                 "default.conf)");
  app.add_option("--disable-rule", opts.disabled_rules, "Turn a rule off")
      ->check(CLI::IsMember(RuleNames()));

  CLI::App* tag = app.add_subcommand("tag", "Tag text files or stdin");
  tag->add_option("inputs", opts.inputs, "Input files ('-' for stdin)");
  tag->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"inline", "tabular", "jsonl"}));
  tag->add_option("--store", opts.store, "Append tagged documents to a store");
  tag->add_flag("--per-line", opts.per_line, "Treat each line as a document");
  tag->add_option("--jobs", opts.jobs, "Worker threads")
      ->check(CLI::PositiveNumber);

  CLI::App* eval = app.add_subcommand("eval", "Evaluate against a gold corpus");
  eval->add_option("--gold", opts.gold, "Gold TSV file")->required();
  eval->add_flag("--json", opts.json, "Print the report as JSON");

  CLI::App* query = app.add_subcommand("query", "Search a tagged store");
  query->add_option("--store", opts.store, "Store file")->required();
  query->add_option("--label", opts.label, "Entity label")
      ->check(CLI::IsMember(LabelNames()));
  query->add_option("--surface", opts.surface, "Surface substring");
  query->add_option("--rule", opts.rule, "Producing rule")
      ->check(CLI::IsMember(RuleNames()));

  CLI::App* gaz = app.add_subcommand("gazetteer", "Inspect or extend gazetteers");
  gaz->require_subcommand(1);
  CLI::App* gaz_list = gaz->add_subcommand("list", "Per-category counts");
  CLI::App* gaz_check = gaz->add_subcommand("check", "Validate every file");
  CLI::App* gaz_add = gaz->add_subcommand("add", "Append an entry");
  gaz_add->add_option("--file", opts.file, "Target TSV file")->required();
  gaz_add->add_option("--surface", opts.surface, "Entry surface")->required();
  gaz_add->add_option("--category", opts.category, "Entry category")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error:Usage: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (tag->parsed()) return RunTag(opts);
    if (eval->parsed()) return RunEval(opts);
    if (query->parsed()) return RunQuery(opts);
    if (gaz_list->parsed()) return RunGazetteerList(opts);
    if (gaz_check->parsed()) return RunGazetteerCheck(opts);
    if (gaz_add->parsed()) return RunGazetteerAdd(opts);
  } catch (const Error& e) {
    std::cerr << "error:" << sner::ErrorCodeName(e.code()) << ": " << e.what()
              << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error:Internal: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
