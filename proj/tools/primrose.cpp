// Command line front end.
//
// Exit codes: 0 success, 1 at least one evaluated law failed, 2 input or
// usage error, 3 a counterexample search found no witness within bounds.
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "primrose/errors.hpp"
#include "primrose/infosys.hpp"
#include "primrose/instance_io.hpp"
#include "primrose/laws.hpp"
#include "primrose/models.hpp"
#include "primrose/random_instance.hpp"
#include "primrose/render.hpp"
#include "primrose/scan.hpp"
#include "primrose/search.hpp"

namespace {

using namespace primrose;

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) {
      out.push_back(text.substr(start));
      return out;
    }
    out.push_back(text.substr(start, comma - start));
    start = comma + 1;
  }
}

std::vector<NeighborhoodKind> parse_kind_list(const std::string& text) {
  std::vector<NeighborhoodKind> out;
  for (const std::string& item : split_commas(text)) out.push_back(parse_kind(item));
  if (out.empty()) throw ParseError("empty kind list");
  return out;
}

std::vector<ModelId> parse_model_list(const std::string& text) {
  std::vector<ModelId> out;
  for (const std::string& item : split_commas(text)) out.push_back(parse_model(item));
  if (out.empty()) throw ParseError("empty model list");
  return out;
}

Subset subset_from_csv(const Universe& uni, const std::string& text) {
  return uni.subset(split_commas(text));
}

int exit_for_reports(const std::vector<LawReport>& reports) {
  for (const LawReport& r : reports) {
    if (r.verdict == Verdict::Fails) return 1;
  }
  return 0;
}

// ---- approx ----------------------------------------------------------------

struct ApproxArgs {
  std::string instance_path;
  std::string model;
  std::string kind = "a";
  std::string set;
  std::string format = "json";
};

int run_approx(const ApproxArgs& args) {
  Instance inst = load_instance(args.instance_path);
  ModelId model = parse_model(args.model);
  NeighborhoodKind kind = parse_kind(args.kind);
  Format format = parse_format(args.format);
  Subset v = subset_from_csv(inst.universe(), args.set);
  const Primal* primal = inst.primal ? &*inst.primal : nullptr;
  ApproxResult result = approximate(inst.relation, kind, model, primal, v);
  std::cout << render_approx(result, inst.universe(), format);
  return 0;
}

// ---- scan ------------------------------------------------------------------

struct ScanArgs {
  std::string instance_path;
  std::string kind = "a";
  std::string models;  // empty: all five when a primal is present, else yao
  bool include_empty = false;
  std::string reference_path;
  std::string format = "json";
};

int run_scan(const ScanArgs& args) {
  Instance inst = load_instance(args.instance_path);
  NeighborhoodKind kind = parse_kind(args.kind);
  Format format = parse_format(args.format);
  std::vector<ModelId> models;
  if (args.models.empty()) {
    if (inst.primal) {
      models.assign(std::begin(kAllModels), std::end(kAllModels));
    } else {
      models = {ModelId::Yao};
    }
  } else {
    models = parse_model_list(args.models);
  }
  std::optional<ReferenceTable> reference;
  if (!args.reference_path.empty()) reference = load_reference_table(args.reference_path);
  const Primal* primal = inst.primal ? &*inst.primal : nullptr;
  ScanTable table = scan_table(inst.relation, primal, kind, models, args.include_empty,
                               reference ? &*reference : nullptr);
  std::cout << render_scan(table, inst.universe(), format);
  return 0;
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
  std::string instance_path;
  std::size_t random_count = 0;
  std::size_t max_size = 4;
  std::uint64_t seed = 0;
  std::string laws;
  bool include_non_properties = false;
  std::string kinds = "a,b,i,u";
  std::string format = "json";
};

int run_verify(const VerifyArgs& args) {
  if (args.instance_path.empty() == (args.random_count == 0)) {
    throw ParseError("verify needs exactly one of: an instance file, or --random N");
  }
  Format format = parse_format(args.format);
  std::vector<NeighborhoodKind> kinds = parse_kind_list(args.kinds);
  std::vector<std::string> ids;
  if (!args.laws.empty()) {
    ids = split_commas(args.laws);
  } else if (args.include_non_properties) {
    ids = all_law_ids();
  } else {
    ids = law_ids(LawKind::Derivable);
  }

  auto check_one = [&](const Instance& inst) {
    if (!inst.primal) {
      throw StructuralError("law checking requires an instance with a primal");
    }
    return check_laws(inst.relation, *inst.primal, ids, kinds);
  };

  if (!args.instance_path.empty()) {
    Instance inst = load_instance(args.instance_path);
    std::vector<LawReport> reports = check_one(inst);
    std::cout << render_law_reports(reports, inst.universe(), format);
    return exit_for_reports(reports);
  }

  auto suite = random_instance_suite(args.random_count, args.max_size, args.seed);
  int exit_code = 0;
  nlohmann::ordered_json jinstances = nlohmann::ordered_json::array();
  std::string text;
  for (const RandomInstance& r : suite) {
    std::string name = "random size=" + std::to_string(r.draws.size) +
                       " seed=" + std::to_string(r.draws.seed);
    std::vector<LawReport> reports = check_one(r.instance);
    if (exit_for_reports(reports) != 0) exit_code = 1;
    if (format == Format::Json) {
      nlohmann::ordered_json j;
      j["name"] = name;
      j["laws"] = law_reports_json(reports, r.instance.universe());
      jinstances.push_back(j);
    } else if (format == Format::Tsv) {
      text += "# instance: " + name + "\n";
      text += render_law_reports(reports, r.instance.universe(), format);
    } else {
      text += "## " + name + "\n\n";
      text += render_law_reports(reports, r.instance.universe(), format) + "\n";
    }
  }
  if (format == Format::Json) {
    nlohmann::ordered_json out;
    out["instances"] = jinstances;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << text;
  }
  return exit_code;
}

// ---- search ----------------------------------------------------------------

struct SearchArgs {
  std::string target;
  std::size_t max_size = 4;
  std::uint64_t max_instances = 50'000'000;
  std::uint64_t seed = 0;
  std::string format = "json";
};

int run_search(const SearchArgs& args) {
  Format format = parse_format(args.format);
  SearchBounds bounds;
  bounds.max_universe_size = args.max_size;
  bounds.max_instances = args.max_instances;
  bounds.seed = args.seed;
  CounterexampleReport report = search_counterexample(args.target, bounds);
  std::cout << render_search(report, format);
  return report.witness ? 0 : 3;
}

// ---- infosys ---------------------------------------------------------------

struct InfosysArgs {
  std::string csv_path;
  std::string primal_path;
  std::string target;
  bool target_given = false;
  std::string models = "yao";
  std::string kind = "a";
  std::string format = "json";
};

int run_infosys(const InfosysArgs& args) {
  InfoSystem table = load_infosystem(args.csv_path);
  NeighborhoodKind kind = parse_kind(args.kind);
  Format format = parse_format(args.format);
  std::vector<ModelId> models = parse_model_list(args.models);

  std::optional<Primal> primal;
  if (!args.primal_path.empty()) {
    Instance pinst = load_instance(args.primal_path);
    if (!pinst.primal) {
      throw StructuralError(args.primal_path + ": file declares no primal");
    }
    if (!(pinst.universe() == table.objects)) {
      throw StructuralError("primal file universe does not match the table's objects");
    }
    primal = *pinst.primal;
  }

  Subset target = Subset::empty(table.objects.size());
  if (args.target_given) {
    target = subset_from_csv(table.objects, args.target);
  } else if (table.decision) {
    target = *table.decision;
  } else {
    throw ParseError("the table has no Decision column; pass --target");
  }

  DecisionReport report =
      analyze_decision(table, target, primal ? &*primal : nullptr, models, kind);
  std::cout << render_decision(report, table, format);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-universe rough approximation engine"};
  app.require_subcommand(1);

  ApproxArgs approx_args;
  CLI::App* approx = app.add_subcommand("approx", "approximate one subset under one model");
  approx->add_option("instance", approx_args.instance_path, "instance file")->required();
  approx->add_option("--model", approx_args.model, "yao, n1, n2, n3 or n4")->required();
  approx->add_option("--kind", approx_args.kind, "neighborhood kind: a, b, i or u");
  approx->add_option("--set", approx_args.set, "target subset, comma-separated labels")
      ->required();
  approx->add_option("--format", approx_args.format, "json, tsv or md");

  ScanArgs scan_args;
  CLI::App* scan = app.add_subcommand("scan", "approximate every subset of the universe");
  scan->add_option("instance", scan_args.instance_path, "instance file")->required();
  scan->add_option("--kind", scan_args.kind, "neighborhood kind: a, b, i or u");
  scan->add_option("--models", scan_args.models,
                   "comma-separated models (default: all five with a primal, else yao)");
  scan->add_flag("--include-empty", scan_args.include_empty, "also scan the empty set");
  scan->add_option("--reference", scan_args.reference_path,
                   "reference table (JSON) to compare against");
  scan->add_option("--format", scan_args.format, "json, tsv or md");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "evaluate the law catalog on instances");
  verify->add_option("instance", verify_args.instance_path, "instance file");
  verify->add_option("--random", verify_args.random_count, "verify N seeded random instances");
  verify->add_option("--size", verify_args.max_size, "maximum random universe size");
  verify->add_option("--seed", verify_args.seed, "base seed for random instances");
  verify->add_option("--laws", verify_args.laws, "comma-separated law ids (overrides defaults)");
  verify->add_flag("--include-non-properties", verify_args.include_non_properties,
                   "also evaluate the non-property laws");
  verify->add_option("--kinds", verify_args.kinds, "comma-separated neighborhood kinds");
  verify->add_option("--format", verify_args.format, "json, tsv or md");

  SearchArgs search_args;
  CLI::App* search = app.add_subcommand("search", "search for a counterexample to a claim");
  search->add_option("--target", search_args.target, "target id")->required();
  search->add_option("--max-size", search_args.max_size, "largest universe size to try");
  search->add_option("--max-instances", search_args.max_instances,
                     "stop after this many (relation, primal) pairs");
  search->add_option("--seed", search_args.seed, "recorded in the report; search is systematic");
  search->add_option("--format", search_args.format, "json, tsv or md");

  InfosysArgs infosys_args;
  CLI::App* infosys = app.add_subcommand("infosys", "analyze a marked-value table");
  infosys->add_option("table", infosys_args.csv_path, "CSV table")->required();
  infosys->add_option("--primal", infosys_args.primal_path,
                      "instance file supplying a primal over the objects");
  CLI::Option* target_opt =
      infosys->add_option("--target", infosys_args.target,
                          "target objects, comma-separated (default: the Decision column)");
  infosys->add_option("--models", infosys_args.models, "comma-separated models");
  infosys->add_option("--kind", infosys_args.kind, "neighborhood kind: a, b, i or u");
  infosys->add_option("--format", infosys_args.format, "json, tsv or md");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  infosys_args.target_given = target_opt->count() > 0;

  try {
    if (approx->parsed()) return run_approx(approx_args);
    if (scan->parsed()) return run_scan(scan_args);
    if (verify->parsed()) return run_verify(verify_args);
    if (search->parsed()) return run_search(search_args);
    if (infosys->parsed()) return run_infosys(infosys_args);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
