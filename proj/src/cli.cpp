// Copyright 2026 The ordbelief Authors
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

#include "ordbelief/cli.hpp"

#include <algorithm>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ordbelief/combine.hpp"
#include "ordbelief/decision.hpp"
#include "ordbelief/document.hpp"
#include "ordbelief/metric.hpp"

namespace ordbelief::cli {

namespace {

using nlohmann::json;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { Text, Csv, Json };

Format parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  throw UsageError("unknown --format '" + s + "' (expected text, csv or json)");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

MassFunction load_mass(const std::string& path, bool renormalize) {
  const auto text = read_file(path);
  try {
    return parse_mass_document(text, {renormalize});
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

std::vector<MassFunction> load_masses(const std::vector<std::string>& paths, bool renormalize) {
  std::vector<MassFunction> out;
  out.reserve(paths.size());
  for (const auto& p : paths) out.push_back(load_mass(p, renormalize));
  return out;
}

// Plain table rendered as aligned text or CSV.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void write(std::ostream& out, Format format) const {
    if (format == Format::Csv) {
      for (const auto* row : all()) {
        for (std::size_t c = 0; c < row->size(); ++c) out << (c ? "," : "") << (*row)[c];
        out << '\n';
      }
      return;
    }
    std::vector<std::size_t> width(header.size(), 0);
    for (const auto* row : all())
      for (std::size_t c = 0; c < row->size(); ++c) width[c] = std::max(width[c], (*row)[c].size());
    for (const auto* row : all()) {
      std::string line;
      for (std::size_t c = 0; c < row->size(); ++c) {
        line += (*row)[c];
        if (c + 1 < row->size()) line += std::string(width[c] - (*row)[c].size() + 2, ' ');
      }
      out << line << '\n';
    }
  }

 private:
  std::vector<const std::vector<std::string>*> all() const {
    std::vector<const std::vector<std::string>*> v{&header};
    for (const auto& r : rows) v.push_back(&r);
    return v;
  }
};

// Flags shared by every subcommand that builds a matrix or a mixed rule.
struct MetricFlags {
  std::string kind = "ordered";
  std::string dmode = "avg";
  double alpha = 0.0;
  double gamma = 1.0;
  bool allow_wide_gamma = false;

  void attach(CLI::App* app, bool with_kind) {
    if (with_kind)
      app->add_option("--kind", kind, "Dissimilarity matrix: plain, ordered or fuzzy")
          ->capture_default_str();
    app->add_option("--dmode", dmode, "Element distance: min, max or avg")->capture_default_str();
    app->add_option("--alpha", alpha, "Membership height outside an element, in [0,1]")
        ->capture_default_str();
    app->add_option("--gamma", gamma, "Membership decay rate, in [0,1]")->capture_default_str();
    app->add_flag("--allow-wide-gamma", allow_wide_gamma,
                  "Accept gamma > 1 (output is marked non-conformant)");
  }

  ElementDistanceMode mode() const {
    const auto m = parse_distance_mode(dmode);
    if (!m) throw UsageError("unknown --dmode '" + dmode + "' (expected min, max or avg)");
    return *m;
  }

  FuzzyParams fuzzy() const { return FuzzyParams::create(alpha, gamma, mode(), allow_wide_gamma); }

  MatrixKind matrix_kind() const {
    if (kind == "plain") return MatrixKind::plain();
    if (kind == "ordered") return MatrixKind::ordered(mode());
    if (kind == "fuzzy") return MatrixKind::fuzzy_modified(fuzzy());
    throw UsageError("unknown --kind '" + kind + "' (expected plain, ordered or fuzzy)");
  }

  bool conformant() const { return gamma <= 1.0; }
};

std::vector<OrderedElement> parse_candidates(const std::string& spec, const OrderedFrame& frame) {
  if (spec == "singletons") {
    std::vector<OrderedElement> out;
    for (Ordinal i = 1; i <= frame.size(); ++i) out.push_back(OrderedElement::singleton(i));
    return out;
  }
  if (spec == "all") {
    auto out = enumerate_ops(frame);
    out.erase(out.begin());
    return out;
  }
  std::vector<OrderedElement> out;
  for (const auto& tok : split(spec, ',')) {
    const auto x = parse_element(tok, frame.size());
    if (x.is_empty()) throw Error(ErrorCode::EmptyElement, "the empty set is not a candidate");
    out.push_back(x);
  }
  return out;
}

OrderedFrame frame_from_flags(std::size_t n, const std::string& labels) {
  if (!labels.empty()) return OrderedFrame(split(labels, ','));
  if (n == 0) throw UsageError("give --n or --labels");
  return OrderedFrame::with_size(n);
}

void write_mass(std::ostream& out, const MassFunction& m, Format format, bool conformant) {
  if (format == Format::Json) {
    out << emit_mass_document(m, conformant);
    return;
  }
  Table t{{"element", "mass"}, {}};
  for (const auto& [x, v] : m.focals()) t.rows.push_back({to_string(x), format_number(v)});
  t.write(out, format);
}

// --- subcommands ----------------------------------------------------------

struct CombineCmd {
  std::string rule = "conj";
  MetricFlags metric;

  void run(const std::vector<MassFunction>& masses, std::ostream& out, Format format) const {
    const auto kind = parse_rule_kind(rule);
    if (!kind) throw UsageError("unknown --rule '" + rule + "'");
    Rule r{*kind, std::nullopt};
    if (*kind == Rule::Kind::Mixed) r.delta = DeltaPolicy::fuzzy_jaccard(metric.fuzzy());
    const auto fused = combine(r, masses);
    write_mass(out, fused, format, *kind != Rule::Kind::Mixed || metric.conformant());
  }
};

void run_distance(const MetricFlags& flags, const std::vector<MassFunction>& masses,
                  std::ostream& out, Format format) {
  if (masses.size() != 2) throw UsageError("distance takes exactly two mass documents");
  const auto matrix = shared_matrix(masses[0].frame(), flags.matrix_kind());
  const double d = belief_distance(masses[0], masses[1], *matrix);
  switch (format) {
    case Format::Text: out << format_number(d) << '\n'; break;
    case Format::Csv: out << "distance\n" << format_number(d) << '\n'; break;
    case Format::Json:
      out << json{{"kind", describe(matrix->kind())}, {"distance", round12(d)}}.dump(2) << '\n';
      break;
  }
}

void run_matrix(const MetricFlags& flags, const OrderedFrame& frame, std::ostream& out,
                Format format) {
  const auto matrix = build_matrix(frame, flags.matrix_kind());
  const auto elems = enumerate_ops(frame);
  if (format == Format::Json) {
    json names = json::array();
    json rows = json::array();
    for (std::size_t i = 0; i < elems.size(); ++i) {
      names.push_back(to_string(elems[i]));
      json row = json::array();
      for (std::size_t j = 0; j < elems.size(); ++j) row.push_back(round12(matrix.at(i, j)));
      rows.push_back(std::move(row));
    }
    out << json{{"kind", describe(matrix.kind())}, {"elements", names}, {"entries", rows}}.dump(2)
        << '\n';
    return;
  }
  Table t;
  t.header.push_back("");
  for (auto e : elems) t.header.push_back(to_string(e));
  for (std::size_t i = 0; i < elems.size(); ++i) {
    std::vector<std::string> row{to_string(elems[i])};
    for (std::size_t j = 0; j < elems.size(); ++j) row.push_back(format_number(matrix.at(i, j)));
    t.rows.push_back(std::move(row));
  }
  t.write(out, format);
}

void run_decide(const std::string& criterion, const std::string& candidates,
                const MetricFlags& flags, const MassFunction& m, std::ostream& out,
                Format format) {
  std::optional<PointwiseCriterion> pointwise;
  if (criterion == "bel") pointwise = PointwiseCriterion::Bel;
  else if (criterion == "pl") pointwise = PointwiseCriterion::Pl;
  else if (criterion == "betp") pointwise = PointwiseCriterion::BetP;
  else if (criterion != "dist")
    throw UsageError("unknown --criterion '" + criterion + "' (expected bel, pl, betp or dist)");

  std::string choice;
  Table t{{"element", pointwise ? std::string(to_string(*pointwise)) : "distance"}, {}};
  if (pointwise) {
    const auto d = decide_pointwise(m, *pointwise);
    choice = to_string(OrderedElement::singleton(d.choice));
    for (Ordinal i = 1; i <= d.scores.size(); ++i)
      t.rows.push_back({to_string(OrderedElement::singleton(i)), format_number(d.scores[i - 1])});
  } else {
    const auto cands = parse_candidates(candidates, m.frame());
    const auto matrix = shared_matrix(m.frame(), flags.matrix_kind());
    const auto d = decide_distance(m, cands, *matrix);
    choice = to_string(d.choice);
    for (std::size_t k = 0; k < cands.size(); ++k)
      t.rows.push_back({to_string(cands[k]), format_number(d.distances[k])});
  }

  if (format == Format::Json) {
    json scores = json::array();
    for (const auto& r : t.rows)
      scores.push_back(json{{"element", r[0]}, {"score", round12(std::stod(r[1]))}});
    out << json{{"criterion", criterion}, {"choice", choice}, {"scores", scores}}.dump(2) << '\n';
    return;
  }
  if (format == Format::Text) out << "choice: " << choice << '\n';
  if (format == Format::Csv) {
    t.header.push_back("chosen");
    for (auto& r : t.rows) r.push_back(r[0] == choice ? "1" : "0");
  }
  t.write(out, format);
}

void run_conflict(const MetricFlags& flags, const std::vector<std::string>& paths,
                  const std::vector<MassFunction>& masses, std::ostream& out, Format format) {
  if (masses.size() < 2) throw UsageError("conflict takes at least two mass documents");
  const auto matrix = shared_matrix(masses[0].frame(), flags.matrix_kind());
  Table t{{"first", "second", "inclusion", "distance", "conflict"}, {}};
  json pairs = json::array();
  for (std::size_t i = 0; i < masses.size(); ++i) {
    for (std::size_t j = i + 1; j < masses.size(); ++j) {
      const double inc = inclusion_degree(masses[i], masses[j]);
      const double dist = belief_distance(masses[i], masses[j], *matrix);
      const double conf = conflict(masses[i], masses[j], *matrix);
      t.rows.push_back({paths[i], paths[j], format_number(inc), format_number(dist),
                        format_number(conf)});
      pairs.push_back(json{{"first", paths[i]}, {"second", paths[j]}, {"inclusion", round12(inc)},
                           {"distance", round12(dist)}, {"conflict", round12(conf)}});
    }
  }
  const double mean = conflict_multi(masses, *matrix);
  switch (format) {
    case Format::Json:
      out << json{{"kind", describe(matrix->kind())}, {"pairs", pairs}, {"mean", round12(mean)}}
                 .dump(2)
          << '\n';
      break;
    case Format::Csv:
      t.write(out, format);
      break;
    case Format::Text:
      t.write(out, format);
      out << "mean conflict: " << format_number(mean) << '\n';
      break;
  }
}

void run_transform(const MassFunction& m, std::ostream& out, Format format) {
  const auto elems = enumerate_ops(m.frame());
  const bool has_betp = 1.0 - m.empty_mass() > kNormTolerance;
  Table t{{"element", "bel", "pl", "betp"}, {}};
  json rows = json::array();
  for (auto x : elems) {
    if (x.is_empty()) continue;
    const double b = bel(m, x);
    const double p = pl(m, x);
    std::optional<double> bp;
    if (x.is_singleton() && has_betp) bp = betp(m, x.lo());
    t.rows.push_back({to_string(x), format_number(b), format_number(p),
                      bp ? format_number(*bp) : std::string()});
    json row{{"element", to_string(x)}, {"bel", round12(b)}, {"pl", round12(p)}};
    if (bp) row["betp"] = round12(*bp);
    rows.push_back(std::move(row));
  }
  if (format == Format::Json)
    out << json{{"rows", rows}}.dump(2) << '\n';
  else
    t.write(out, format);
}

// One categorical (optionally discounted) mass per respondent, fused.
void run_likert(const std::string& counts_text, const std::string& labels, const std::string& rule,
                double discount, const MetricFlags& flags, std::ostream& out, Format format) {
  std::vector<std::size_t> counts;
  for (const auto& tok : split(counts_text, ',')) {
    std::size_t pos = 0;
    long long c = -1;
    try {
      c = std::stoll(tok, &pos);
    } catch (const std::exception&) {
    }
    if (c < 0 || pos != tok.size()) throw UsageError("bad count '" + tok + "' in --counts");
    counts.push_back(static_cast<std::size_t>(c));
  }
  if (counts.empty()) throw UsageError("--counts is empty");
  const auto frame = frame_from_flags(counts.size(), labels);
  if (frame.size() != counts.size())
    throw UsageError("--labels and --counts have different lengths");
  if (!(discount >= 0.0 && discount <= 1.0)) throw UsageError("--discount must lie in [0, 1]");

  std::vector<MassFunction> sources;
  for (Ordinal i = 1; i <= counts.size(); ++i) {
    if (counts[i - 1] == 0) continue;
    const FocalMass entries[] = {{OrderedElement::singleton(i), 1.0 - discount},
                                 {OrderedElement::whole(frame), discount}};
    const auto m = MassFunction::make(frame, entries);
    for (std::size_t k = 0; k < counts[i - 1]; ++k) sources.push_back(m);
  }
  if (sources.empty()) throw UsageError("no responses in --counts");

  const CombineCmd cmd{rule, flags};
  if (sources.size() == 1) {
    write_mass(out, sources.front(), format, true);
    return;
  }
  cmd.run(sources, out, format);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Belief functions on ordered frames of discernment", "ordbelief"};
  app.require_subcommand(1);
  std::string format_text;
  bool renormalize = false;

  std::vector<std::string> files;
  MetricFlags metric;
  CombineCmd combine_cmd;
  std::size_t n = 0;
  std::string labels;
  std::string criterion = "betp";
  std::string candidates = "singletons";
  std::string counts;
  double discount = 0.0;

  // Each subcommand has its own default format, applied after parsing.
  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format_text, "Output format: text, csv or json");
  };

  auto* combine_app = app.add_subcommand("combine", "Fuse mass documents with a combination rule");
  combine_app->add_option("--rule", combine_cmd.rule, "conj, dempster, yager, odisj, odp, avg, mixed")
      ->capture_default_str();
  combine_app->add_flag("--renormalize", renormalize, "Rescale input masses to sum to 1");
  combine_app->add_option("files", files, "Mass documents")->required();
  combine_cmd.metric.attach(combine_app, false);

  auto* distance_app = app.add_subcommand("distance", "Distance between two mass documents");
  distance_app->add_flag("--renormalize", renormalize, "Rescale input masses to sum to 1");
  distance_app->add_option("files", files, "Two mass documents")->required();
  metric.attach(distance_app, true);

  auto* matrix_app = app.add_subcommand("matrix", "Print a dissimilarity matrix as CSV");
  matrix_app->add_option("--n", n, "Number of ordered states");
  matrix_app->add_option("--labels", labels, "Comma-separated state labels");
  metric.attach(matrix_app, true);

  auto* decide_app = app.add_subcommand("decide", "Decide on a mass document");
  decide_app->add_option("--criterion", criterion, "bel, pl, betp or dist")->capture_default_str();
  decide_app->add_option("--candidates", candidates, "singletons, all, or a list like w1,w2..w3")
      ->capture_default_str();
  decide_app->add_flag("--renormalize", renormalize, "Rescale input masses to sum to 1");
  decide_app->add_option("file", files, "Mass document")->required()->expected(1);
  metric.attach(decide_app, true);

  auto* conflict_app = app.add_subcommand("conflict", "Pairwise and mean conflict");
  conflict_app->add_flag("--renormalize", renormalize, "Rescale input masses to sum to 1");
  conflict_app->add_option("files", files, "Mass documents")->required();
  metric.attach(conflict_app, true);

  auto* transform_app = app.add_subcommand("transform", "bel, pl and BetP tables");
  transform_app->add_flag("--renormalize", renormalize, "Rescale input masses to sum to 1");
  transform_app->add_option("file", files, "Mass document")->required()->expected(1);

  auto* likert_app = app.add_subcommand("likert", "Fuse counted Likert answers to one question");
  likert_app->add_option("--counts", counts, "Respondents per level, e.g. 3,0,2,1,0")->required();
  likert_app->add_option("--labels", labels, "Comma-separated level labels");
  likert_app->add_option("--rule", combine_cmd.rule, "Combination rule")->capture_default_str();
  likert_app->add_option("--discount", discount, "Mass moved to the whole scale per answer")
      ->capture_default_str();
  combine_cmd.metric.attach(likert_app, false);

  for (auto* sub : {combine_app, distance_app, matrix_app, decide_app, conflict_app, transform_app,
                    likert_app})
    add_format(sub);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    const auto fmt = [&](const char* fallback) {
      return parse_format(format_text.empty() ? fallback : format_text);
    };
    if (combine_app->parsed()) {
      const auto masses = load_masses(files, renormalize);
      if (masses.size() < 2 && combine_cmd.rule != "avg")
        throw UsageError("combine takes at least two mass documents");
      combine_cmd.run(masses, out, fmt("json"));
    } else if (distance_app->parsed()) {
      run_distance(metric, load_masses(files, renormalize), out, fmt("text"));
    } else if (matrix_app->parsed()) {
      run_matrix(metric, frame_from_flags(n, labels), out, fmt("csv"));
    } else if (decide_app->parsed()) {
      run_decide(criterion, candidates, metric, load_mass(files.at(0), renormalize), out,
                 fmt("text"));
    } else if (conflict_app->parsed()) {
      run_conflict(metric, files, load_masses(files, renormalize), out, fmt("text"));
    } else if (transform_app->parsed()) {
      run_transform(load_mass(files.at(0), renormalize), out, fmt("text"));
    } else if (likert_app->parsed()) {
      run_likert(counts, labels, combine_cmd.rule, discount, combine_cmd.metric, out, fmt("json"));
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return exit_code(e.code());
  }
  return kExitOk;
}

}  // namespace ordbelief::cli
