// Copyright 2026 The t2t Authors
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

#include "cli.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "t2t/corruption.h"
#include "t2t/embedding.h"
#include "t2t/error.h"
#include "t2t/metrics.h"
#include "t2t/model_config.h"
#include "t2t/rng.h"
#include "t2t/summarization.h"
#include "t2t/tasks.h"
#include "t2t/text.h"
#include "t2t/tokenizer.h"
#include "t2t/transfer.h"
#include "t2t/tuning.h"
#include "t2t/vocab.h"

namespace t2t::cli {

namespace {

using nlohmann::json;

// Format/shape problems in user data; reported with exit code 2.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::uint64_t seed = 0;
  bool quiet = false;
  bool json_lines = false;
};

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  const Globals& globals;

  void warn(const std::string& message) const {
    if (!globals.quiet) err << "warning: " << message << '\n';
  }
};

std::string dump(const json& j) {
  return j.dump(-1, ' ', false, json::error_handler_t::replace);
}

json with_schema(std::string_view command, json body) {
  json j = {{"schema", "t2t." + std::string(command) + "/1"}};
  j.update(body);
  return j;
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  return lines;
}

json parse_json_line(const std::string& line, std::size_t line_no) {
  try {
    return json::parse(line);
  } catch (const json::exception& e) {
    throw DataError("line " + std::to_string(line_no) + ": " + e.what());
  }
}

TokenIds ids_from_json(const json& j, std::size_t line_no) {
  if (!j.is_array()) {
    throw DataError("line " + std::to_string(line_no) + ": ids must be an array");
  }
  TokenIds ids;
  for (const json& v : j) {
    if (!v.is_number_integer()) {
      throw DataError("line " + std::to_string(line_no) + ": non-integer id");
    }
    ids.push_back(v.get<TokenId>());
  }
  return ids;
}

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ec == std::errc() ? ptr : buf);
}

json rouge_json(const RougeScore& s) {
  auto pr = [](const PrecisionRecall& x) {
    return json{{"precision", x.precision},
                {"recall", x.recall},
                {"fmeasure", x.fmeasure}};
  };
  return json{{"rouge1", pr(s.rouge1)},
              {"rouge2", pr(s.rouge2)},
              {"rougeL", pr(s.rougeL)},
              {"mean_f", s.mean_f()}};
}

// One row in the layout of the per-task ROUGE tables: percentages with one
// decimal.
std::string rouge_tsv_row(const std::string& label, const RougeScore& s) {
  auto pct = [](double v) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(1);
    os << 100.0 * v;
    return os.str();
  };
  return label + '\t' + pct(s.rouge1.fmeasure) + '\t' +
         pct(s.rouge2.fmeasure) + '\t' + pct(s.rougeL.fmeasure) + '\t' +
         pct(s.mean_f()) + '\n';
}

constexpr std::string_view kRougeTsvHeader =
    "Model\tROUGE-1\tROUGE-2\tROUGE-L\tROUGE\n";

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot open " + path);
  out << text;
}

SummaryKind parse_kind(const json& j) {
  if (!j.is_string()) return SummaryKind::kUnknown;
  const auto s = j.get<std::string>();
  if (s == "extract" || s == "EXTRACT") return SummaryKind::kExtract;
  if (s == "abstract" || s == "ABSTRACT") return SummaryKind::kAbstract;
  return SummaryKind::kUnknown;
}

std::vector<SummaryGroup> read_groups(const std::string& path) {
  std::vector<SummaryGroup> groups;
  std::size_t line_no = 0;
  for (const std::string& line : read_lines(path)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const json j = parse_json_line(line, line_no);
    try {
      SummaryGroup g;
      const json& id = j.at("id");
      g.source_id = id.is_string() ? id.get<std::string>() : id.dump();
      g.source_text = j.at("source").get<std::string>();
      for (const json& r : j.at("references")) {
        Reference ref;
        ref.text = r.at("text").get<std::string>();
        if (r.contains("annotator") && r["annotator"].is_string()) {
          ref.annotator = r["annotator"].get<std::string>();
        }
        if (r.contains("ratio") && r["ratio"].is_string()) {
          ref.ratio = r["ratio"].get<std::string>();
        }
        if (r.contains("kind")) ref.kind = parse_kind(r["kind"]);
        g.references.push_back(std::move(ref));
      }
      if (g.references.empty() || g.source_text.empty()) {
        throw DataError("line " + std::to_string(line_no) +
                        ": group needs a source and at least one reference");
      }
      groups.push_back(std::move(g));
    } catch (const json::exception& e) {
      throw DataError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return groups;
}

// --- tok ------------------------------------------------------------------

void run_tok_encode(const Io& io, const std::string& vocab_path, bool pieces) {
  const Vocab vocab = load_vocab(vocab_path);
  std::string line;
  while (std::getline(io.in, line)) {
    const Segmentation seg = tokenize(vocab, line);
    if (io.globals.json_lines) {
      json j;
      if (pieces) {
        j["pieces"] = seg.pieces;
      } else {
        j["ids"] = seg.ids;
      }
      io.out << dump(j) << '\n';
      continue;
    }
    for (std::size_t i = 0; i < seg.ids.size(); ++i) {
      if (i > 0) io.out << ' ';
      if (pieces) {
        io.out << seg.pieces[i];
      } else {
        io.out << seg.ids[i];
      }
    }
    io.out << '\n';
  }
}

void run_tok_decode(const Io& io, const std::string& vocab_path) {
  const Vocab vocab = load_vocab(vocab_path);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(io.in, line)) {
    ++line_no;
    TokenIds ids;
    const std::string_view t = trim(line);
    if (!t.empty() && t.front() == '{') {
      ids = ids_from_json(parse_json_line(line, line_no).at("ids"), line_no);
    } else {
      std::istringstream is(line);
      TokenId id;
      while (is >> id) ids.push_back(id);
      if (!is.eof()) {
        throw DataError("line " + std::to_string(line_no) + ": bad id list");
      }
    }
    const std::string text = decode(vocab, ids);
    if (io.globals.json_lines) {
      io.out << dump(json{{"text", text}}) << '\n';
    } else {
      io.out << text << '\n';
    }
  }
}

// --- transfer -------------------------------------------------------------

struct TransferArgs {
  std::string src_vocab, src_emb, tgt_vocab, out, report;
};

void run_transfer(const Io& io, const TransferArgs& a) {
  const Vocab src = load_vocab(a.src_vocab);
  const EmbeddingMatrix src_emb = read_matrix(a.src_emb);
  const Vocab tgt = load_vocab(a.tgt_vocab);
  const TransferResult result = transfer_embeddings(src, src_emb, tgt);
  write_matrix(result.embeddings, a.out);

  const TransferReport& r = result.report;
  json summary = {{"copied", r.copied},
                  {"averaged", r.averaged},
                  {"fallback", r.fallback},
                  {"rows", result.embeddings.rows()},
                  {"cols", result.embeddings.cols()}};
  if (!a.report.empty()) {
    json pieces = json::array();
    for (std::size_t i = 0; i < tgt.size(); ++i) {
      pieces.push_back({{"id", i},
                        {"piece", tgt.piece(static_cast<TokenId>(i))},
                        {"provenance", provenance_name(r.provenance[i])},
                        {"sources", r.source_ids[i]}});
    }
    json full = with_schema("transfer-report", summary);
    full["pieces"] = std::move(pieces);
    write_text_file(a.report, full.dump(1, ' ', false,
                                        json::error_handler_t::replace) +
                                  "\n");
  }
  io.out << dump(with_schema("transfer", summary)) << '\n';
}

// --- corrupt --------------------------------------------------------------

void run_corrupt(const Io& io, const std::string& vocab_path,
                 CorruptionConfig cfg) {
  cfg.seed = io.globals.seed;
  cfg.validate();
  const Vocab vocab = load_vocab(vocab_path);
  std::string line;
  std::size_t line_no = 0;
  std::uint64_t doc = 0;
  while (std::getline(io.in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const json j = parse_json_line(line, line_no);
    if (!j.contains("ids")) {
      throw DataError("line " + std::to_string(line_no) + ": missing \"ids\"");
    }
    const TokenIds ids = ids_from_json(j["ids"], line_no);
    Rng rng(derive_seed(cfg.seed, doc++));
    try {
      const DenoisingPair pair = corrupt(cfg, vocab, ids, rng);
      io.out << dump(json{{"input", pair.input}, {"target", pair.target}})
             << '\n';
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kTooShort) throw;
      io.warn("line " + std::to_string(line_no) + " skipped: " + e.what());
    }
  }
}

// --- tasks ----------------------------------------------------------------

json spec_json(const TaskSpec& s) {
  json j = {{"name", s.name},
            {"prefix1", s.prefix1},
            {"prefix2", s.prefix2 ? json(*s.prefix2) : json(nullptr)},
            {"labels", s.labels ? json(*s.labels) : json(nullptr)},
            {"direction_token",
             s.direction_token ? json(*s.direction_token) : json(nullptr)}};
  return j;
}

void run_tasks_dump(const Io& io, const std::string& format) {
  if (format == "tsv") {
    io.out << render_spec_table(klej_specs());
    return;
  }
  json specs = json::array();
  for (const TaskSpec& s : task_registry()) specs.push_back(spec_json(s));
  io.out << dump(with_schema("tasks", {{"specs", specs}})) << '\n';
}

void run_tasks_format(const Io& io, const std::string& task,
                      bool decoder_only) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(io.in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const json j = parse_json_line(line, line_no);
    try {
      const std::string name =
          task.empty() ? j.at("task").get<std::string>() : task;
      TaskSpec spec = find_task(name);
      if (decoder_only) spec = with_style(spec, ArchitectureStyle::kDecoderOnly);
      std::optional<std::string> text2;
      if (j.contains("text2") && !j["text2"].is_null()) {
        text2 = j["text2"].get<std::string>();
      }
      const FormattedExample ex =
          format_example(spec, j.at("text1").get<std::string>(), text2,
                         j.at("target").get<std::string>());
      io.out << dump(json{{"source", ex.source}, {"target", ex.target}})
             << '\n';
    } catch (const json::exception& e) {
      throw DataError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
}

void run_tasks_max_len(const Io& io, const std::string& task,
                       const std::string& vocab_path) {
  const Vocab vocab = load_vocab(vocab_path);
  const TaskSpec& spec = find_task(task);
  io.out << dump(with_schema("tasks", {{"task", spec.name},
                                       {"max_target_length",
                                        max_target_length(spec, vocab)}}))
         << '\n';
}

void run_tasks_decode_label(const Io& io, const std::string& task) {
  const TaskSpec& spec = find_task(task);
  std::string line;
  while (std::getline(io.in, line)) {
    const auto label = decode_label(spec, line);
    io.out << dump(json{{"generated", line},
                        {"label", label ? json(*label) : json(nullptr)}})
           << '\n';
  }
}

// --- evaluate -------------------------------------------------------------

struct EvaluateArgs {
  std::string metric;
  std::string preds;
  std::string refs;
  std::string multi_ref;
  std::string positive;
  double epsilon = 0.0;
  bool per_example = false;
};

std::vector<std::vector<std::string>> read_multi_refs(const std::string& path) {
  std::vector<std::vector<std::string>> out;
  std::size_t line_no = 0;
  for (const std::string& line : read_lines(path)) {
    ++line_no;
    const json j = parse_json_line(line, line_no);
    try {
      const json& refs = j.is_array() ? j : j.at("references");
      out.push_back(refs.get<std::vector<std::string>>());
    } catch (const json::exception& e) {
      throw DataError("line " + std::to_string(line_no) + ": " + e.what());
    }
    if (out.back().empty()) {
      throw DataError("line " + std::to_string(line_no) + ": no references");
    }
  }
  return out;
}

void run_evaluate(const Io& io, const EvaluateArgs& a) {
  const std::vector<std::string> preds = read_lines(a.preds);
  std::vector<std::vector<std::string>> refs;
  if (!a.multi_ref.empty()) {
    refs = read_multi_refs(a.multi_ref);
  } else if (!a.refs.empty()) {
    for (std::string& r : read_lines(a.refs)) refs.push_back({std::move(r)});
  } else {
    throw CLI::RequiredError("--refs or --multi-ref");
  }
  if (preds.size() != refs.size()) {
    throw Error(ErrorCode::kArityError,
                std::to_string(preds.size()) + " predictions vs " +
                    std::to_string(refs.size()) + " references");
  }
  if (preds.empty()) throw Error(ErrorCode::kUndefinedMetric, "no examples");

  auto first_refs = [&] {
    std::vector<std::string> out;
    for (const auto& r : refs) {
      if (r.size() != 1) {
        throw DataError(a.metric + " takes exactly one reference per line");
      }
      out.push_back(r.front());
    }
    return out;
  };

  json report = {{"metric", a.metric}, {"n", preds.size()}};
  if (a.metric == "rouge") {
    RougeAccumulator acc;
    json per = json::array();
    double sum = 0.0;
    for (std::size_t i = 0; i < preds.size(); ++i) {
      const RougeScore s = rouge_multi(preds[i], refs[i]);
      acc.add(s);
      sum += s.mean_f();
      per.push_back(s.mean_f());
    }
    report["aggregate"] = sum / static_cast<double>(preds.size());
    report["rouge"] = rouge_json(acc.mean());
    if (a.per_example) report["per_example"] = per;
  } else if (a.metric == "bleu") {
    const BleuResult b = bleu_multi(preds, refs, {4, a.epsilon});
    report["aggregate"] = b.score;
    report["precisions"] = b.precisions;
    report["brevity_penalty"] = b.brevity_penalty;
    report["candidate_length"] = b.candidate_length;
    report["reference_length"] = b.reference_length;
  } else if (a.metric == "accuracy") {
    const auto golds = first_refs();
    report["aggregate"] = exact_match_accuracy(preds, golds);
    if (a.per_example) {
      json per = json::array();
      for (std::size_t i = 0; i < preds.size(); ++i) {
        per.push_back(labels_match(preds[i], golds[i]) ? 1.0 : 0.0);
      }
      report["per_example"] = per;
    }
  } else if (a.metric == "f1") {
    if (a.positive.empty()) throw CLI::RequiredError("--positive");
    report["aggregate"] = f1_binary(preds, first_refs(), a.positive);
    report["positive"] = a.positive;
  } else if (a.metric == "ar") {
    report["aggregate"] = ar_score(preds, first_refs());
  }
  io.out << dump(with_schema("evaluate", report)) << '\n';
}

// --- summ -----------------------------------------------------------------

void run_summ_baseline(const Io& io, const std::string& input, std::size_t n,
                       double avg_target_len, const std::string& tsv) {
  const auto groups = read_groups(input);
  if (groups.empty()) throw DataError("no groups in " + input);
  const double target_len =
      avg_target_len > 0.0 ? avg_target_len : average_target_length(groups);
  const BaselineResult lead = evaluate_lead(groups, n);
  const BaselineResult adaptive = evaluate_adaptive_lead(groups, target_len);
  if (!tsv.empty()) {
    write_text_file(tsv, std::string(kRougeTsvHeader) +
                             rouge_tsv_row("lead n=" + std::to_string(n),
                                           lead.mean) +
                             rouge_tsv_row("lead adaptive", adaptive.mean));
  }
  io.out << dump(with_schema(
                "summ-baseline",
                {{"groups", groups.size()},
                 {"pairs", lead.pairs},
                 {"avg_target_len", target_len},
                 {"lead", {{"n", n}, {"rouge", rouge_json(lead.mean)}}},
                 {"adaptive", {{"rouge", rouge_json(adaptive.mean)}}}}))
         << '\n';
}

void run_summ_upperbound(const Io& io, const std::string& input,
                         bool same_ratio, const std::string& tsv) {
  const auto groups = read_groups(input);
  const UpperBound ub = human_upper_bound(groups, same_ratio);
  if (ub.skipped_groups > 0) {
    io.warn(std::to_string(ub.skipped_groups) +
            " group(s) with fewer than two references skipped");
  }
  if (!tsv.empty()) {
    write_text_file(tsv, std::string(kRougeTsvHeader) +
                             rouge_tsv_row("human upper bound", ub.mean));
  }
  io.out << dump(with_schema("summ-upperbound",
                             {{"groups", groups.size()},
                              {"skipped_groups", ub.skipped_groups},
                              {"pairs", ub.pairs},
                              {"same_ratio", same_ratio},
                              {"rouge", rouge_json(ub.mean)}}))
         << '\n';
}

void run_summ_stats(const Io& io, const std::string& input,
                    const std::string& vocab_path, std::size_t limit,
                    const std::string& tsv) {
  const auto groups = read_groups(input);
  const DatasetStats stats = dataset_stats(groups);
  json abstractedness = json::object();
  for (const auto& [n, v] : stats.abstractedness) {
    abstractedness[std::to_string(n) + "-grams"] = v;
  }
  json report = {{"groups", groups.size()},
                 {"avg_source_len", stats.avg_source_len},
                 {"avg_target_len", stats.avg_target_len},
                 {"compression_ratio", stats.compression_ratio},
                 {"abstractedness", abstractedness}};
  if (!vocab_path.empty()) {
    const Vocab vocab = load_vocab(vocab_path);
    report["trimming"] = {{"limit", limit},
                          {"coverage", trimming_coverage(groups, vocab, limit)}};
  }
  if (!tsv.empty()) {
    std::ostringstream os;
    os << "Statistic\tValue\n";
    os << "Source\t" << format_double(stats.avg_source_len) << '\n';
    os << "Target\t" << format_double(stats.avg_target_len) << '\n';
    os << "Compression ratio\t" << format_double(stats.compression_ratio)
       << '\n';
    for (const auto& [n, v] : stats.abstractedness) {
      os << n << "-grams\t" << format_double(v) << '\n';
    }
    write_text_file(tsv, os.str());
  }
  io.out << dump(with_schema("summ-stats", report)) << '\n';
}

// --- params ---------------------------------------------------------------

ArchConfig config_from_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  json j;
  try {
    in >> j;
    ArchConfig c;
    c.num_layers = j.at("num_layers").get<std::uint64_t>();
    c.num_heads = j.at("num_heads").get<std::uint64_t>();
    c.d_model = j.at("d_model").get<std::uint64_t>();
    c.d_ff = j.at("d_ff").get<std::uint64_t>();
    c.d_kv = j.at("d_kv").get<std::uint64_t>();
    c.vocab_size = j.at("vocab_size").get<std::uint64_t>();
    c.relative_attention_buckets =
        j.value("relative_attention_buckets", std::uint64_t{32});
    c.tied_lm_head = j.value("tied_lm_head", false);
    c.gated_ffn = j.value("gated_ffn", true);
    return c;
  } catch (const json::exception& e) {
    throw DataError(path + ": " + e.what());
  }
}

void run_params(const Io& io, const std::string& family, std::uint64_t vocab,
                const std::string& config_path) {
  const ArchConfig c = config_path.empty() ? family_config(family, vocab)
                                           : config_from_json(config_path);
  json terms = json::array();
  for (const ParamTerm& t : param_breakdown(c)) {
    terms.push_back({{"name", t.name}, {"count", t.count}});
  }
  json config = {{"num_layers", c.num_layers},
                 {"num_heads", c.num_heads},
                 {"d_model", c.d_model},
                 {"d_ff", c.d_ff},
                 {"d_kv", c.d_kv},
                 {"vocab_size", c.vocab_size},
                 {"relative_attention_buckets", c.relative_attention_buckets},
                 {"tied_lm_head", c.tied_lm_head},
                 {"gated_ffn", c.gated_ffn}};
  json report = {{"config", config}, {"terms", terms}, {"total", param_count(c)}};
  if (config_path.empty()) report["family"] = family;
  io.out << dump(with_schema("params", report)) << '\n';
}

// --- lrsearch -------------------------------------------------------------

double run_score_command(const std::string& command_template, double value) {
  const std::string lr = format_double(value);
  std::string command = command_template;
  for (std::size_t pos = command.find("{lr}"); pos != std::string::npos;
       pos = command.find("{lr}", pos + lr.size())) {
    command.replace(pos, 4, lr);
  }
  ::setenv("T2T_LR", lr.c_str(), 1);
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(::popen(command.c_str(), "r"),
                                             ::pclose);
  if (!pipe) throw DataError("cannot run: " + command);
  std::string output;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof(buf), pipe.get())) {
    output.append(buf, n);
  }
  const int status = ::pclose(pipe.release());
  if (status != 0) {
    throw DataError("command exited with status " + std::to_string(status) +
                    ": " + command);
  }
  std::istringstream is(output);
  std::string line;
  std::string last;
  while (std::getline(is, line)) {
    if (!trim(line).empty()) last = std::string(trim(line));
  }
  double score = 0.0;
  const auto [ptr, ec] =
      std::from_chars(last.data(), last.data() + last.size(), score);
  if (last.empty() || ec != std::errc() || ptr != last.data() + last.size()) {
    throw DataError("command printed no score: " + command);
  }
  return score;
}

void run_lrsearch(const Io& io, GeometricSearchConfig cfg,
                  const std::string& command) {
  cfg.objective = [&](double v) { return run_score_command(command, v); };
  const SearchResult r = geometric_search(cfg);
  json probes = json::array();
  for (const Probe& p : r.probes) {
    probes.push_back({{"step", p.step}, {"value", p.value}, {"score", p.score}});
  }
  io.out << dump(with_schema("lrsearch", {{"best_value", r.best_value},
                                          {"best_score", r.best_score},
                                          {"converged", r.converged},
                                          {"windows", r.windows},
                                          {"probes", probes}}))
         << '\n';
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::istream& in,
             std::ostream& out, std::ostream& err) {
  CLI::App app{"Text-to-text data preparation and evaluation toolkit", "t2t"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals globals;
  app.add_option("--seed", globals.seed, "Seed for every random choice")
      ->capture_default_str();
  app.add_flag("--quiet", globals.quiet, "Suppress warnings on stderr");
  app.add_flag("--json", globals.json_lines,
               "Line-oriented commands emit JSON objects instead of text");

  std::function<void()> action;
  const Io io{in, out, err, globals};

  // tok
  auto* tok = app.add_subcommand("tok", "Unigram tokenization");
  tok->require_subcommand(1);
  std::string tok_vocab;
  bool want_ids = false;
  bool want_pieces = false;
  auto* tok_encode = tok->add_subcommand("encode", "Encode stdin lines");
  tok_encode->add_option("--vocab", tok_vocab, "Vocabulary TSV")
      ->required()
      ->check(CLI::ExistingFile);
  auto* ids_flag = tok_encode->add_flag("--ids", want_ids, "Print ids (default)");
  tok_encode->add_flag("--pieces", want_pieces, "Print pieces")
      ->excludes(ids_flag);
  tok_encode->callback([&] {
    action = [&] { run_tok_encode(io, tok_vocab, want_pieces); };
  });
  auto* tok_decode = tok->add_subcommand("decode", "Decode stdin id lines");
  tok_decode->add_option("--vocab", tok_vocab, "Vocabulary TSV")
      ->required()
      ->check(CLI::ExistingFile);
  tok_decode->callback([&] { action = [&] { run_tok_decode(io, tok_vocab); }; });

  // transfer
  TransferArgs targs;
  auto* transfer = app.add_subcommand("transfer", "Transfer embeddings");
  transfer->add_option("--src-vocab", targs.src_vocab)->required()->check(CLI::ExistingFile);
  transfer->add_option("--src-emb", targs.src_emb)->required()->check(CLI::ExistingFile);
  transfer->add_option("--tgt-vocab", targs.tgt_vocab)->required()->check(CLI::ExistingFile);
  transfer->add_option("--out", targs.out)->required();
  transfer->add_option("--report", targs.report, "Per-piece provenance JSON");
  transfer->callback([&] { action = [&] { run_transfer(io, targs); }; });

  // corrupt
  std::string corrupt_vocab;
  CorruptionConfig ccfg;
  auto* corrupt_cmd = app.add_subcommand("corrupt", "Span corruption on JSONL ids");
  corrupt_cmd->add_option("--vocab", corrupt_vocab)->required()->check(CLI::ExistingFile);
  corrupt_cmd->add_option("--rate", ccfg.corruption_rate)->capture_default_str();
  corrupt_cmd->add_option("--mean-span", ccfg.mean_span_length)->capture_default_str();
  corrupt_cmd->callback([&] {
    action = [&] { run_corrupt(io, corrupt_vocab, ccfg); };
  });

  // tasks
  auto* tasks = app.add_subcommand("tasks", "Task prompts and labels");
  tasks->require_subcommand(1);
  std::string dump_format = "json";
  std::string task_name;
  std::string task_vocab;
  bool decoder_only = false;
  auto* dump_specs = tasks->add_subcommand("dump-specs", "Print the task registry");
  dump_specs->add_option("--format", dump_format)
      ->check(CLI::IsMember({"json", "tsv"}))
      ->capture_default_str();
  dump_specs->callback([&] { action = [&] { run_tasks_dump(io, dump_format); }; });
  auto* format_cmd = tasks->add_subcommand("format", "Format JSONL task records");
  format_cmd->add_option("--task", task_name, "Overrides the record's task");
  format_cmd->add_flag("--decoder-only", decoder_only, "Append [SEP]");
  format_cmd->callback([&] {
    action = [&] { run_tasks_format(io, task_name, decoder_only); };
  });
  auto* max_len = tasks->add_subcommand("max-target-len", "Longest label in tokens");
  max_len->add_option("--task", task_name)->required();
  max_len->add_option("--vocab", task_vocab)->required()->check(CLI::ExistingFile);
  max_len->callback([&] {
    action = [&] { run_tasks_max_len(io, task_name, task_vocab); };
  });
  auto* decode_cmd = tasks->add_subcommand("decode-label", "Exact-match stdin lines");
  decode_cmd->add_option("--task", task_name)->required();
  decode_cmd->callback([&] {
    action = [&] { run_tasks_decode_label(io, task_name); };
  });

  // evaluate
  EvaluateArgs eargs;
  auto* evaluate = app.add_subcommand("evaluate", "Score predictions");
  evaluate->add_option("--metric", eargs.metric)
      ->required()
      ->check(CLI::IsMember({"rouge", "bleu", "accuracy", "f1", "ar"}));
  evaluate->add_option("--preds", eargs.preds)->required()->check(CLI::ExistingFile);
  evaluate->add_option("--refs", eargs.refs)->check(CLI::ExistingFile);
  evaluate->add_option("--multi-ref", eargs.multi_ref, "JSONL reference lists")
      ->check(CLI::ExistingFile);
  evaluate->add_option("--positive", eargs.positive, "Positive label for f1");
  evaluate->add_option("--smooth", eargs.epsilon, "BLEU epsilon smoothing");
  evaluate->add_flag("--per-example", eargs.per_example);
  evaluate->callback([&] { action = [&] { run_evaluate(io, eargs); }; });

  // summ
  auto* summ = app.add_subcommand("summ", "Summarization baselines and statistics");
  summ->require_subcommand(1);
  std::string groups_path;
  std::string tsv_path;
  std::size_t lead_n = 3;
  double avg_target = 0.0;
  bool same_ratio = false;
  std::string stats_vocab;
  std::size_t limit = 1024;
  auto* baseline = summ->add_subcommand("baseline", "Lead-n and adaptive lead");
  baseline->add_option("--input", groups_path)->required()->check(CLI::ExistingFile);
  baseline->add_option("--n", lead_n)->capture_default_str()->check(CLI::PositiveNumber);
  baseline->add_option("--avg-target-len", avg_target,
                       "Defaults to the mean reference length");
  baseline->add_option("--tsv", tsv_path);
  baseline->callback([&] {
    action = [&] {
      run_summ_baseline(io, groups_path, lead_n, avg_target, tsv_path);
    };
  });
  auto* upper = summ->add_subcommand("upperbound", "Human agreement ROUGE");
  upper->add_option("--input", groups_path)->required()->check(CLI::ExistingFile);
  upper->add_flag("--same-ratio", same_ratio);
  upper->add_option("--tsv", tsv_path);
  upper->callback([&] {
    action = [&] { run_summ_upperbound(io, groups_path, same_ratio, tsv_path); };
  });
  auto* stats = summ->add_subcommand("stats", "Dataset statistics");
  stats->add_option("--input", groups_path)->required()->check(CLI::ExistingFile);
  stats->add_option("--vocab", stats_vocab, "Enables trimming coverage")
      ->check(CLI::ExistingFile);
  stats->add_option("--limit", limit)->capture_default_str()->check(CLI::PositiveNumber);
  stats->add_option("--tsv", tsv_path);
  stats->callback([&] {
    action = [&] {
      run_summ_stats(io, groups_path, stats_vocab, limit, tsv_path);
    };
  });

  // params
  std::string family = "small";
  std::uint64_t vocab_size = kMonolingualVocabSize;
  std::string config_path;
  auto* params = app.add_subcommand("params", "Parameter count breakdown");
  params->add_option("--family", family)
      ->check(CLI::IsMember({"small", "base", "large"}))
      ->capture_default_str();
  params->add_option("--vocab", vocab_size)->capture_default_str();
  params->add_option("--config", config_path, "ArchConfig JSON")
      ->check(CLI::ExistingFile);
  params->callback([&] {
    action = [&] { run_params(io, family, vocab_size, config_path); };
  });

  // lrsearch
  GeometricSearchConfig scfg;
  std::string score_cmd;
  auto* lrsearch = app.add_subcommand("lrsearch", "Geometric learning-rate search");
  lrsearch->add_option("--start", scfg.start)->capture_default_str();
  lrsearch->add_option("--factor", scfg.factor)->capture_default_str();
  lrsearch->add_option("--max-probes", scfg.max_probes)->capture_default_str();
  lrsearch->add_option("--cmd", score_cmd,
                       "Shell command printing a score; {lr} and $T2T_LR "
                       "hold the candidate")
      ->required();
  lrsearch->callback([&] {
    action = [&] { run_lrsearch(io, scfg, score_cmd); };
  });

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (action) action();
    return kExitOk;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const DataError& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
}

}  // namespace t2t::cli
