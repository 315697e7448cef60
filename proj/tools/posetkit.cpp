#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "poset/census.hpp"
#include "poset/core.hpp"
#include "poset/io.hpp"
#include "poset/maps.hpp"
#include "poset/realizability.hpp"
#include "poset/surgery.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;

struct Options {
  std::string command;

  std::string file;
  std::string codomain_file;
  std::string map_file;
  std::string out_path;
  std::string map_out_path;

  std::string mode = "local";
  std::string which;
  std::string property;
  std::vector<std::string> nodes;
  std::string node;
  std::size_t count = 1;
  std::vector<std::string> along;
  bool have_along = false;

  bool json = false;
  bool explain = false;
  bool strict_covers = false;

  std::size_t max_n = 5;
  std::uint64_t seed = 42;
  std::size_t jobs = 1;
  std::size_t trials = 1000;
  std::string verify;
};

poset::Poset load_poset(const std::string& path, bool strict_covers) {
  return poset::parse_poset(poset::read_file(path), strict_covers);
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text))
    throw poset::Error(poset::errc::precondition_failed, "cannot write '" + path + "'");
}

std::string emit_pairs(const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::string text = "map v1\n";
  for (const auto& [from, to] : pairs) text += "pair: " + from + " " + to + "\n";
  return text;
}

std::vector<std::pair<std::string, std::string>> map_as_pairs(const poset::PosetMap& f) {
  std::vector<std::pair<std::string, std::string>> pairs;
  for (poset::NodeId v : f.dom.sort_by_label(f.dom.nodes()))
    pairs.emplace_back(f.dom.label(v), f.cod.label(f.assign[v.value]));
  return pairs;
}

std::string pair_comments(const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::string text;
  for (const auto& [from, to] : pairs) text += "# pair: " + from + " " + to + "\n";
  return text;
}

std::string render_report(const poset::RealizabilityReport& report, const std::string& mode) {
  std::string text = mode + " check: " + (report.verdict ? "PASS" : "FAIL") + "\n";
  for (const poset::Violation& v : report.violations) {
    text += "  ";
    text += poset::kind_name(v.kind);
    text += ":";
    for (const std::string& node : v.nodes) text += " " + node;
    text += " heights=";
    for (std::size_t i = 0; i < v.heights.size(); ++i)
      text += (i ? "," : "") + std::to_string(v.heights[i]);
    text += "\n";
  }
  return text;
}

int cmd_check(const Options& opt) {
  poset::Poset p = load_poset(opt.file, opt.strict_covers);
  poset::RealizabilityReport report =
      opt.mode == "local" ? poset::check_local_ufd(p) : poset::check_nonlocal_ufd(p);
  write_output(opt.out_path,
               opt.json ? poset::report_to_json(report) : render_report(report, opt.mode));
  return report.verdict ? kExitOk : kExitCheckFailed;
}

int cmd_glue(const Options& opt) {
  poset::Poset p = load_poset(opt.file, opt.strict_covers);
  std::vector<poset::NodeId> c;
  for (const std::string& label : opt.nodes) c.push_back(p.node_or_throw(label));
  poset::GluingResult res = poset::glue(p, c);
  write_output(opt.out_path, poset::emit_poset(res.quotient));
  if (!opt.map_out_path.empty())
    write_output(opt.map_out_path, emit_pairs(map_as_pairs(res.map)));
  return kExitOk;
}

int cmd_retract(const Options& opt) {
  poset::Poset p = load_poset(opt.file, opt.strict_covers);
  write_output(opt.out_path, poset::emit_poset(poset::retract(p, p.node_or_throw(opt.node))));
  return kExitOk;
}

int cmd_split(const Options& opt) {
  poset::Poset p = load_poset(opt.file, opt.strict_covers);
  poset::GluingResult res = poset::split(p, p.node_or_throw(opt.node));
  write_output(opt.out_path, poset::emit_poset(res.map.dom));
  if (!opt.map_out_path.empty())
    write_output(opt.map_out_path, emit_pairs(map_as_pairs(res.map)));
  return kExitOk;
}

int cmd_attach(const Options& opt) {
  poset::Poset p = load_poset(opt.file, opt.strict_covers);
  write_output(opt.out_path,
               poset::emit_poset(poset::attach_below(p, p.node_or_throw(opt.node), opt.count)));
  return kExitOk;
}

int cmd_reduce(const Options& opt) {
  poset::Poset p = load_poset(opt.file, opt.strict_covers);
  poset::ReductionSequence seq = poset::reduce_to_point(p);

  std::string text;
  const std::size_t count = seq.posets.size();
  for (std::size_t d = 0; d < count; ++d) {
    const std::size_t at = count - 1 - d;
    if (d == 0) {
      text += "# start\n";
    } else {
      const poset::ReductionStep& step = seq.steps[at];
      switch (step.kind) {
        case poset::ReductionStep::Kind::split:
          text += "# split at " + step.node + ":";
          break;
        case poset::ReductionStep::Kind::retract:
          text += "# retract at " + step.node + " removed:";
          break;
        case poset::ReductionStep::Kind::identity:
          text += "# identity";
          break;
      }
      for (const std::string& label : step.detail) text += " " + label;
      text += "\n";
    }
    text += poset::emit_poset(seq.posets[at]);
    if (d + 1 < count) text += "\n";
  }
  write_output(opt.out_path, text);
  return kExitOk;
}

int cmd_construct(const Options& opt) {
  poset::Poset p = load_poset(opt.file, opt.strict_covers);
  poset::Poset result;
  std::vector<std::pair<std::string, std::string>> pairs;
  if (opt.which == "extension") {
    poset::ExtensionResult ext = poset::extension_poset(p);
    result = std::move(ext.extension);
    pairs = std::move(ext.pairing);
  } else {
    poset::Augmentation aug = opt.which == "add-top"      ? poset::add_top(p)
                              : opt.which == "add-bottom" ? poset::add_bottom(p)
                                                          : poset::dim_plus_one(p);
    result = std::move(aug.result);
    pairs = map_as_pairs(aug.inclusion);
  }
  write_output(opt.out_path, poset::emit_poset(result) + pair_comments(pairs));
  if (!opt.map_out_path.empty()) write_output(opt.map_out_path, emit_pairs(pairs));
  return kExitOk;
}

int cmd_map_check(const Options& opt) {
  poset::PosetMap f;
  try {
    poset::Poset dom = load_poset(opt.file, opt.strict_covers);
    poset::Poset cod = load_poset(opt.codomain_file, opt.strict_covers);
    auto pairs = poset::parse_map(poset::read_file(opt.map_file));
    f = poset::make_map(std::move(dom), std::move(cod), pairs);
  } catch (const poset::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }

  poset::MapProperty property = poset::MapProperty::map;
  if (opt.property == "embedding") property = poset::MapProperty::embedding;
  if (opt.property == "saturated") property = poset::MapProperty::saturated;
  if (opt.property == "dim") property = poset::MapProperty::dimension;
  if (opt.property == "coheight") property = poset::MapProperty::coheight;

  std::optional<std::string> violation;
  if (opt.have_along) {
    std::vector<poset::NodeId> along;
    for (const std::string& label : opt.along) along.push_back(f.cod.node_or_throw(label));
    violation = poset::find_map_violation(f, property, &along);
  } else {
    violation = poset::find_map_violation(f, property);
  }

  if (!violation) {
    write_output(opt.out_path, opt.property + ": PASS\n");
    return kExitOk;
  }
  std::string text = opt.property + ": FAIL\n";
  if (opt.explain) text += "  " + *violation + "\n";
  write_output(opt.out_path, text);
  return kExitCheckFailed;
}

int cmd_render(const Options& opt) {
  poset::Poset p = load_poset(opt.file, opt.strict_covers);
  write_output(opt.out_path, poset::render_dot(p));
  return kExitOk;
}

int cmd_census(const Options& opt) {
  const std::vector<poset::CensusRow> rows = poset::classify(opt.max_n, opt.jobs);
  std::string text = opt.json ? poset::rows_to_json(rows) : poset::render_table(rows);

  std::size_t violations = 0;
  if (opt.verify == "reduce" || opt.verify == "all") {
    poset::ReductionCheck check = poset::verify_reduction_theorem(opt.max_n, opt.jobs);
    violations += check.failures;
    text += check.render();
  }
  if (opt.verify == "lemmas" || opt.verify == "all") {
    poset::LemmaCheck check =
        poset::verify_surgery_lemmas(opt.max_n, opt.trials, opt.seed, opt.jobs);
    violations += check.total_violations();
    text += check.render();
  }
  write_output(opt.out_path, text);
  return violations == 0 ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"finite poset toolkit: checks, surgery, constructions, census"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* cmd, bool takes_file) {
    if (takes_file)
      cmd->add_option("file", opt.file, "input poset file")->required()->check(CLI::ExistingFile);
    cmd->add_flag("--strict-covers", opt.strict_covers, "require rel lines to be cover pairs");
    cmd->add_option("-o", opt.out_path, "write output to a file instead of standard output");
  };

  CLI::App* check = app.add_subcommand("check", "realizability conditions on a poset");
  add_common(check, true);
  check->add_option("--mode", opt.mode, "local or nonlocal")
      ->check(CLI::IsMember({"local", "nonlocal"}));
  check->add_flag("--json", opt.json, "emit the JSON report");

  CLI::App* glue = app.add_subcommand("glue", "glue a complete subset to one node");
  add_common(glue, true);
  glue->add_option("--nodes", opt.nodes, "labels of the subset to glue")
      ->required()
      ->delimiter(',');
  glue->add_option("--map-out", opt.map_out_path, "write the gluing map to a file");

  CLI::App* retract = app.add_subcommand("retract", "retract at a simple node");
  add_common(retract, true);
  retract->add_option("--node", opt.node, "simple node label")->required();

  CLI::App* split = app.add_subcommand("split", "split a branching minimal node");
  add_common(split, true);
  split->add_option("--node", opt.node, "minimal node label")->required();
  split->add_option("--map-out", opt.map_out_path, "write the gluing map to a file");

  CLI::App* attach = app.add_subcommand("attach", "attach fresh nodes below a minimal node");
  add_common(attach, true);
  attach->add_option("--node", opt.node, "minimal node label")->required();
  attach->add_option("--count", opt.count, "how many nodes to attach")
      ->check(CLI::PositiveNumber);

  CLI::App* reduce = app.add_subcommand("reduce", "reduce a unique-maximum poset to a point");
  add_common(reduce, true);

  CLI::App* construct = app.add_subcommand("construct", "augmentation constructions");
  add_common(construct, true);
  construct->add_option("which", opt.which, "add-top, add-bottom, dim-plus-one, or extension")
      ->required()
      ->check(CLI::IsMember({"add-top", "add-bottom", "dim-plus-one", "extension"}));
  construct->add_option("--map-out", opt.map_out_path, "write the inclusion or pairing map");

  CLI::App* map_check = app.add_subcommand("map-check", "check a map between two posets");
  map_check->add_option("domain", opt.file, "domain poset file")
      ->required()
      ->check(CLI::ExistingFile);
  map_check->add_option("codomain", opt.codomain_file, "codomain poset file")
      ->required()
      ->check(CLI::ExistingFile);
  map_check->add_option("map", opt.map_file, "map file")->required()->check(CLI::ExistingFile);
  map_check->add_option("--property", opt.property, "map, embedding, saturated, dim, coheight")
      ->required()
      ->check(CLI::IsMember({"map", "embedding", "saturated", "dim", "coheight"}));
  map_check->add_option("--along", opt.along, "codomain labels for the coheight check")
      ->delimiter(',');
  map_check->add_flag("--explain", opt.explain, "print the first violating pair");
  map_check->add_flag("--strict-covers", opt.strict_covers,
                      "require rel lines to be cover pairs");
  map_check->add_option("-o", opt.out_path, "write output to a file");

  CLI::App* render = app.add_subcommand("render", "emit the Hasse diagram as DOT");
  add_common(render, true);

  CLI::App* census = app.add_subcommand("census", "enumerate classes and verify theorems");
  census->add_option("--max-n", opt.max_n, "largest node count");
  census->add_option("--seed", opt.seed, "seed for random cases");
  census->add_option("--jobs", opt.jobs, "worker threads")->check(CLI::PositiveNumber);
  census->add_option("--trials", opt.trials, "random cases for the lemma check");
  census->add_option("--verify", opt.verify, "reduce, lemmas, or all")
      ->check(CLI::IsMember({"reduce", "lemmas", "all"}));
  census->add_flag("--json", opt.json, "emit the table as JSON");
  census->add_option("-o", opt.out_path, "write output to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  const CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  if (map_check->parsed()) opt.have_along = map_check->count("--along") > 0;

  try {
    if (name == "check") return cmd_check(opt);
    if (name == "glue") return cmd_glue(opt);
    if (name == "retract") return cmd_retract(opt);
    if (name == "split") return cmd_split(opt);
    if (name == "attach") return cmd_attach(opt);
    if (name == "reduce") return cmd_reduce(opt);
    if (name == "construct") return cmd_construct(opt);
    if (name == "map-check") return cmd_map_check(opt);
    if (name == "render") return cmd_render(opt);
    if (name == "census") return cmd_census(opt);
  } catch (const poset::Error& e) {
    std::cerr << "error: (" << poset::errc_name(e.code()) << ") " << e.what() << "\n";
    return e.code() == poset::errc::parse_error ? kExitParse : kExitUsage;
  }
  return kExitUsage;
}
