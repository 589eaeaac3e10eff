/*
 * Copyright 2026 The Orality Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "orality/chat_client.hpp"
#include "orality/error.hpp"
#include "orality/lexicons.hpp"
#include "orality/report.hpp"
#include "orality/session.hpp"
#include "orality/table.hpp"
#include "orality/text.hpp"
#include "orality/transcript.hpp"

namespace fs = std::filesystem;

namespace orality::cli {

namespace {

enum class FileKind { conllu, plain, jsonl, speaker_lines };

std::optional<FileKind> file_kind(const fs::path& path) {
  const std::string ext = text::to_lower(path.extension().string());
  if (ext == ".conllu") return FileKind::conllu;
  if (ext == ".txt") return FileKind::plain;
  if (ext == ".jsonl") return FileKind::jsonl;
  if (ext == ".transcript") return FileKind::speaker_lines;
  return std::nullopt;
}

bool is_transcript(FileKind kind) {
  return kind == FileKind::jsonl || kind == FileKind::speaker_lines;
}

FileKind require_kind(const fs::path& path) {
  auto kind = file_kind(path);
  if (!kind) {
    throw InputError(path.string() +
                     ": unsupported extension (want .conllu, .txt, .jsonl, .transcript)");
  }
  return *kind;
}

Transcript load_transcript(const fs::path& path, FileKind kind,
                           const SpeakerRoles& roles) {
  const TranscriptFormat format = kind == FileKind::jsonl
                                      ? TranscriptFormat::jsonl
                                      : TranscriptFormat::speaker_lines;
  try {
    return read_transcript(text::read_file(path), format, roles);
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

Document transcript_document(const Transcript& t, std::string id) {
  std::vector<std::string> parts;
  parts.reserve(t.turns.size());
  for (const Turn& turn : t.turns) parts.push_back(turn.content);
  return read_plain(text::join(parts, "\n\n"), std::move(id));
}

Document load_with_roles(const fs::path& path, const SpeakerRoles& roles) {
  const FileKind kind = require_kind(path);
  const std::string id = path.stem().string();
  if (is_transcript(kind)) {
    return transcript_document(load_transcript(path, kind, roles), id);
  }
  const std::string bytes = text::read_file(path);
  try {
    return kind == FileKind::conllu ? read_conllu(bytes, id) : read_plain(bytes, id);
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

std::vector<fs::path> expand_inputs(const std::vector<std::string>& inputs) {
  std::vector<fs::path> files;
  for (const std::string& in : inputs) {
    fs::path p(in);
    if (fs::is_directory(p)) {
      std::vector<fs::path> found;
      for (const auto& entry : fs::directory_iterator(p)) {
        if (entry.is_regular_file() && file_kind(entry.path())) {
          found.push_back(entry.path());
        }
      }
      if (found.empty()) throw InputError(in + ": no supported documents");
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else if (fs::is_regular_file(p)) {
      files.push_back(p);
    } else {
      throw InputError(in + ": no such file or directory");
    }
  }
  return files;
}

void write_output(const std::string& path, const std::string& bytes,
                  std::ostream& out) {
  if (path.empty() || path == "-") {
    out << bytes;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write " + path);
  f << bytes;
  if (!f) throw InputError("write failed: " + path);
}

TableFormat resolve_format(const std::string& name, const std::string& out_path) {
  if (!name.empty()) {
    auto f = parse_table_format(name);
    if (!f) throw InputError("unknown format " + name);
    return *f;
  }
  const std::string ext = text::to_lower(fs::path(out_path).extension().string());
  return ext == ".md" ? TableFormat::markdown : TableFormat::csv;
}

// Reports every absent metric; true if any were found.
bool report_absences(std::span<const MetricsReport> reports, std::ostream& err) {
  bool any = false;
  for (const MetricsReport& r : reports) {
    for (Metric m : all_metrics()) {
      if (!r.value(m)) {
        err << r.id << ": " << metric_name(m) << " absent: " << r.absent_reason(m)
            << "\n";
        any = true;
      }
    }
  }
  return any;
}

struct CommonOptions {
  std::string lexicons = ORALITY_DEFAULT_LEXICON_DIR;
  std::string out;
  std::string format;
  std::uint64_t seed = 42;
  bool strict = false;
  bool deictic_core = false;
  bool serial = false;

  void attach(CLI::App& cmd) {
    cmd.add_option("--lexicons", lexicons, "Lexicon directory")->capture_default_str();
    cmd.add_option("-o,--out", out, "Output file (default stdout)");
    cmd.add_option("--format", format, "csv or markdown (default from --out)");
    cmd.add_option("--seed", seed, "voc-D sampling seed")->capture_default_str();
    cmd.add_flag("--strict", strict, "Exit 2 when any metric is absent");
    cmd.add_flag("--deictic-core", deictic_core,
                 "Person, space and time deictics only");
    cmd.add_flag("--serial", serial, "Use the serial reference kernels");
  }

  LexiconSet load_lexicons(std::ostream& err) const {
    LexiconSet set = load_lexicon_set(lexicons, {.deictic_core_only = deictic_core});
    for (const std::string& w : lexicon_set_warnings(set)) err << "warning: " << w << "\n";
    return set;
  }

  AnalysisOptions analysis() const {
    AnalysisOptions o;
    o.vocd.rng_seed = seed;
    o.exec = serial ? Execution::serial : Execution::parallel;
    return o;
  }

  Execution corpus_exec() const {
    return serial ? Execution::serial : Execution::parallel;
  }
};

struct AnalyzeCommand {
  CommonOptions common;
  std::vector<std::string> inputs;
  std::vector<std::string> gm_speakers;
  std::vector<std::string> player_speakers;

  void attach(CLI::App& app) {
    CLI::App* cmd = app.add_subcommand("analyze", "Per-document metrics table");
    cmd->add_option("files", inputs, "Documents or directories")->required();
    common.attach(*cmd);
    cmd->add_option("--gm-speakers", gm_speakers, "Speakers with the GM role")
        ->delimiter(',');
    cmd->add_option("--player-speakers", player_speakers,
                    "Speakers with the player role")
        ->delimiter(',');
  }

  int run(std::ostream& out, std::ostream& err) const {
    const LexiconSet lexicons = common.load_lexicons(err);
    const SpeakerRoles roles(gm_speakers, player_speakers);
    std::vector<Document> docs;
    for (const fs::path& p : expand_inputs(inputs)) docs.push_back(load_with_roles(p, roles));
    const std::vector<MetricsReport> reports =
        analyze_corpus(docs, lexicons, common.analysis(), common.corpus_exec());
    write_output(common.out,
                 render_table(document_table(reports),
                              resolve_format(common.format, common.out)),
                 out);
    if (common.strict && report_absences(reports, err)) return kExitStrict;
    return kExitOk;
  }
};

struct CompareCommand {
  CommonOptions common;
  std::vector<std::string> corpora;
  bool split = false;
  bool correlate = false;
  bool ignore_unknown = false;
  bool population_sd = false;
  bool include_sd = false;
  std::vector<std::string> gm_speakers;
  std::vector<std::string> player_speakers;

  void attach(CLI::App& app) {
    CLI::App* cmd = app.add_subcommand("compare", "Corpus comparison table");
    cmd->add_option("corpora", corpora, "One directory per corpus")->required();
    common.attach(*cmd);
    cmd->add_flag("--split-roles", split, "Add GM-only and player-only rows");
    cmd->add_option("--gm-speakers", gm_speakers, "Speakers with the GM role")
        ->delimiter(',');
    cmd->add_option("--player-speakers", player_speakers,
                    "Speakers with the player role")
        ->delimiter(',');
    cmd->add_flag("--ignore-unknown", ignore_unknown,
                  "Drop turns whose speaker has no role");
    cmd->add_flag("--correlate", correlate, "Pairwise connective correlations");
    cmd->add_flag("--population-sd", population_sd,
                  "Population rather than sample spread for cohesion");
    cmd->add_flag("--include-sd", include_sd, "Add per-metric sd rows");
  }

  NamedCorpus load_corpus(const fs::path& dir, const LexiconSet& lexicons,
                          const SpeakerRoles& roles) const {
    if (!fs::is_directory(dir)) throw InputError(dir.string() + ": not a directory");
    NamedCorpus corpus;
    corpus.name = dir.filename().empty() ? dir.parent_path().filename().string()
                                         : dir.filename().string();
    std::vector<Document> docs, gm_docs, pc_docs;
    const SplitOptions split_options{.ignore_unknown = ignore_unknown};
    for (const fs::path& p : expand_inputs({dir.string()})) {
      const FileKind kind = require_kind(p);
      const std::string id = p.stem().string();
      if (is_transcript(kind)) {
        const Transcript t = load_transcript(p, kind, roles);
        docs.push_back(transcript_document(t, id));
        if (split) {
          RoleSplit s;
          try {
            s = split_roles(t, split_options);
          } catch (const InputError& e) {
            throw InputError(p.string() + ": " + e.what());
          }
          s.gm.id = id + "-DM";
          s.pc.id = id + "-PC";
          gm_docs.push_back(std::move(s.gm));
          pc_docs.push_back(std::move(s.pc));
        }
        continue;
      }
      Document doc = load_with_roles(p, roles);
      if (split) {
        if (kind != FileKind::conllu) {
          throw InputError(p.string() + ": plain text has no speakers to split");
        }
        RoleSplit s;
        try {
          s = split_document_by_speaker(doc, roles, split_options);
        } catch (const InputError& e) {
          throw InputError(p.string() + ": " + e.what());
        }
        gm_docs.push_back(std::move(s.gm));
        pc_docs.push_back(std::move(s.pc));
      }
      docs.push_back(std::move(doc));
    }
    const AnalysisOptions options = common.analysis();
    corpus.reports = analyze_corpus(docs, lexicons, options, common.corpus_exec());
    if (split) {
      corpus.gm_reports = analyze_corpus(gm_docs, lexicons, options, common.corpus_exec());
      corpus.pc_reports = analyze_corpus(pc_docs, lexicons, options, common.corpus_exec());
    }
    return corpus;
  }

  int run(std::ostream& out, std::ostream& err) const {
    const LexiconSet lexicons = common.load_lexicons(err);
    const SpeakerRoles roles(gm_speakers, player_speakers);
    std::vector<NamedCorpus> named;
    for (const std::string& dir : corpora) {
      named.push_back(load_corpus(fs::path(dir), lexicons, roles));
    }
    CompareOptions options;
    options.correlate = correlate;
    options.norm = population_sd ? StdNormalization::population : StdNormalization::sample;
    const ComparisonReport report = compare(named, options);
    for (const CorpusSummary& c : report.corpora) {
      if (!c.cohesion_note.empty()) err << c.name << ": " << c.cohesion_note << "\n";
    }
    write_output(common.out,
                 render_table(report, resolve_format(common.format, common.out),
                              include_sd),
                 out);
    if (common.strict) {
      bool absent = false;
      for (const NamedCorpus& c : named) {
        absent |= report_absences(c.reports, err);
        if (c.gm_reports) absent |= report_absences(*c.gm_reports, err);
        if (c.pc_reports) absent |= report_absences(*c.pc_reports, err);
      }
      for (const CorpusSummary& c : report.corpora) absent |= !c.cohesion.has_value();
      if (absent) return kExitStrict;
    }
    return kExitOk;
  }
};

struct GenerateCommand {
  std::string config;
  std::string out;
  std::string render;
  bool stateless = false;

  void attach(CLI::App& app) {
    CLI::App* cmd = app.add_subcommand("generate", "Run one simulated session");
    cmd->add_option("--config", config, "Session config (JSON)")->required();
    cmd->add_option("-o,--out", out, "Transcript output (.jsonl)")->required();
    cmd->add_option("--render", render,
                    "Also write a speaker-lines rendering to this file");
    cmd->add_flag("--stateless", stateless,
                  "Agents see only the latest assembled input");
  }

  int run(std::ostream& out_stream, std::ostream& err) const {
    SessionConfig cfg = load_session_config(config);
    if (stateless) cfg.stateless = true;
    validate_config(cfg);
    std::string api_key;
    if (const char* v = std::getenv(cfg.api_key_env.c_str())) api_key = v;
    if (api_key.empty()) err << "warning: " << cfg.api_key_env << " is not set\n";

    auto transport = std::make_shared<HttpChatTransport>(cfg.endpoint, api_key);
    ChatClient client(transport, cfg.retry);
    JsonlTranscriptWriter writer(out);
    const SessionResult result = run_session(cfg, client, &writer);
    if (!render.empty()) {
      write_output(render,
                   render_transcript(result.transcript, TranscriptFormat::speaker_lines),
                   out_stream);
    }
    err << "session stopped: " << to_string(result.stop);
    if (!result.detail.empty()) err << " (" << result.detail << ")";
    err << "; " << result.transcript.turns.size() << " turns\n";
    return kExitOk;
  }
};

struct LexiconsCommand {
  std::string dir;
  bool deictic_core = false;

  void attach(CLI::App& app) {
    CLI::App* cmd = app.add_subcommand("lexicons", "Lexicon utilities");
    cmd->require_subcommand(1);
    CLI::App* check = cmd->add_subcommand("check", "Validate a lexicon directory");
    check->add_option("dir", dir, "Lexicon directory")->required();
    check->add_flag("--deictic-core", deictic_core,
                    "Person, space and time deictics only");
  }

  int run(std::ostream& out, std::ostream& err) const {
    const LexiconSet set = load_lexicon_set(dir, {.deictic_core_only = deictic_core});
    for (const Lexicon* l :
         {&set.band1, &set.band2, &set.academic, &set.deictics, &set.articles,
          &set.attributive_adjectives, &set.emphatic_particles, &set.first_person}) {
      out << l->name() << "\t" << to_string(l->category()) << "\t" << l->size() << "\n";
    }
    out << "concreteness\t" << set.concreteness.size() << "\n";
    for (ConnectiveClass c : kConnectiveClasses) {
      for (Polarity p : kPolarities) {
        out << "connectives/" << to_string(c) << "_" << to_string(p) << "\t"
            << set.connectives.entries(c, p).size() << "\n";
      }
    }
    for (const std::string& w : lexicon_set_warnings(set)) err << "warning: " << w << "\n";
    out << "ok\n";
    return kExitOk;
  }
};

}  // namespace

Document load_document(const fs::path& path) { return load_with_roles(path, {}); }

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Register metrics for role-play transcripts and reference corpora",
               "orality"};
  app.require_subcommand(1);
  AnalyzeCommand analyze;
  CompareCommand cmp;
  GenerateCommand generate;
  LexiconsCommand lexicons;
  analyze.attach(app);
  cmp.attach(app);
  generate.attach(app);
  lexicons.attach(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitInput;
  }

  try {
    if (app.got_subcommand("analyze")) return analyze.run(out, err);
    if (app.got_subcommand("compare")) return cmp.run(out, err);
    if (app.got_subcommand("generate")) return generate.run(out, err);
    return lexicons.run(out, err);
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitStrict;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace orality::cli
