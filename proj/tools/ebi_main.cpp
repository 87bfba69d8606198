#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ebi/constructions.hpp"
#include "ebi/dot.hpp"
#include "ebi/io.hpp"
#include "ebi/report.hpp"
#include "ebi/search.hpp"

namespace {

// Writes the payload to --out (resolved against EBI_OUT_DIR when relative)
// or to stdout, always with exactly one trailing newline.
void emit(const std::string& text, const std::string& out_path) {
  std::string payload = text;
  if (payload.empty() || payload.back() != '\n') payload += '\n';
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::filesystem::path path(out_path);
  if (const char* dir = std::getenv("EBI_OUT_DIR"); dir && *dir &&
                                                    path.is_relative()) {
    path = std::filesystem::path(dir) / path;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw ebi::malformed_input_error("cannot open output file " +
                                     path.string());
  }
  file << payload;
}

// Reads a whole labeling file; "-" selects stdin.
std::string slurp(const std::string& source) {
  if (source == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin),
                       std::istreambuf_iterator<char>());
  }
  std::ifstream file(source, std::ios::binary);
  if (!file) {
    throw ebi::malformed_input_error("cannot read input file " + source);
  }
  return std::string(std::istreambuf_iterator<char>(file),
                     std::istreambuf_iterator<char>());
}

ebi::Family family_from_name(const std::string& name) {
  if (name == "two-diff") return ebi::Family::two_diff;
  if (name == "general") return ebi::Family::general;
  throw ebi::parameter_error("unknown family '" + name +
                             "'; use two-diff or general");
}

struct OracleArgs {
  int p = 0;
  int q = 0;
  std::string symmetry = "off";
  int chunks = 1;
  std::uint64_t budget = 0;
  std::string out;
};

struct ConstructArgs {
  std::string family;
  int n = 0;
  int a = -1;
  int c = -1;
  std::string variant = "max";
  bool variant_given = false;
  std::string out;
};

struct ScheduleArgs {
  std::string family;
  int n = 0;
  int a = -1;
  std::string out;
};

struct VerifyArgs {
  int n_max = 0;
  bool oracle = false;
  std::string format = "json";
  std::string out;
};

struct SearchArgs {
  int p = 0;
  int q = 0;
  int target = 0;
  std::uint64_t budget = 0;
  std::uint64_t seed = 0;
  std::string out;
};

int run_oracle(const OracleArgs& args) {
  ebi::SearchOptions opts;
  opts.use_symmetry = args.symmetry == "on";
  opts.worker_chunks = args.chunks;
  opts.budget = args.budget;
  try {
    const ebi::EbiResult result =
        ebi::ebi_exhaustive(ebi::Shape{args.p, args.q}, opts);
    emit(ebi::ebi_result_to_json(result), args.out);
  } catch (const ebi::resource_limit_error& e) {
    if (e.partial()) emit(ebi::ebi_result_to_json(*e.partial()), args.out);
    throw;
  }
  return 0;
}

int run_construct(const ConstructArgs& args) {
  const ebi::Family family = family_from_name(args.family);
  ebi::Labeling lab = [&]() {
    if (family == ebi::Family::two_diff) {
      if (args.a >= 0 || args.c >= 0) {
        throw ebi::parameter_error(
            "--a and --c belong to the general family");
      }
      if (args.variant == "max") return ebi::build_two_diff_max(args.n);
      if (args.variant == "base") return ebi::build_two_diff_base(args.n);
      throw ebi::parameter_error("unknown variant '" + args.variant +
                                 "'; use max or base");
    }
    if (args.variant_given) {
      throw ebi::parameter_error("--variant belongs to the two-diff family");
    }
    if (args.a < 0 || args.c < 0) {
      throw ebi::parameter_error("the general family needs --a and --c");
    }
    return ebi::build_general(args.n, args.a, args.c);
  }();
  emit(ebi::serialize_labeling(lab), args.out);
  return 0;
}

int run_schedule(const ScheduleArgs& args) {
  const ebi::Family family = family_from_name(args.family);
  ebi::Labeling base = [&]() {
    if (family == ebi::Family::two_diff) {
      if (args.a >= 0) {
        throw ebi::parameter_error("--a belongs to the general family");
      }
      return ebi::build_two_diff_base(args.n);
    }
    if (args.a < 0) {
      throw ebi::parameter_error("the general family needs --a");
    }
    return ebi::build_general(args.n, args.a, 2 * args.a + 1);
  }();
  const ebi::Schedule schedule =
      family == ebi::Family::two_diff
          ? ebi::schedule_two_diff(args.n)
          : ebi::schedule_general(args.n, args.a);

  // Walks the whole schedule; any broken step or checkpoint throws here.
  const auto records = ebi::apply_schedule(base, schedule);
  (void)records;

  nlohmann::ordered_json j;
  j["family"] = args.family;
  j["n"] = args.n;
  if (family == ebi::Family::general) j["a"] = args.a;
  j["base_index"] = ebi::evaluate(base).index;
  j["step_count"] = schedule.steps.size();
  j["checkpoints"] = nlohmann::ordered_json::array();
  for (const ebi::Checkpoint& cp : schedule.checkpoints) {
    nlohmann::ordered_json c;
    c["prefix"] = cp.prefix;
    c["index"] = cp.expected_index;
    j["checkpoints"].push_back(std::move(c));
  }
  emit(j.dump(), args.out);
  return 0;
}

int run_verify(const VerifyArgs& args) {
  const ebi::VerificationReport report =
      ebi::verify_theorems(args.n_max, args.oracle);
  emit(args.format == "csv" ? ebi::report_to_csv(report)
                            : ebi::report_to_json(report),
       args.out);
  return report.all_passed() ? 0 : 1;
}

int run_search(const SearchArgs& args) {
  ebi::SearchOptions opts;
  opts.budget = args.budget;
  opts.seed = args.seed;
  const ebi::LocalSearchResult result =
      ebi::local_search(ebi::Shape{args.p, args.q}, args.target, opts);
  nlohmann::ordered_json j;
  j["found"] = result.found;
  j["target"] = result.target;
  j["examined"] = result.examined;
  if (result.labeling) {
    j["labeling"] = ebi::serialize_labeling(*result.labeling);
  } else {
    j["labeling"] = nullptr;
  }
  emit(j.dump(), args.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"edge-balanced index sets of complete bipartite graphs"};
  app.require_subcommand(1);

  OracleArgs oracle_args;
  CLI::App* oracle = app.add_subcommand(
      "oracle", "enumerate every balanced labeling of K_{p,q}");
  oracle->add_option("p", oracle_args.p, "size of part A")->required();
  oracle->add_option("q", oracle_args.q, "size of part B")->required();
  oracle->add_option("--symmetry", oracle_args.symmetry,
                     "fold away part permutations (on|off)")
      ->check(CLI::IsMember({"on", "off"}));
  oracle->add_option("--chunks", oracle_args.chunks,
                     "worker count over enumeration shards");
  oracle->add_option("--budget", oracle_args.budget,
                     "cap on examined labelings (0 = none)");
  oracle->add_option("--out", oracle_args.out, "write the result here");

  ConstructArgs construct_args;
  CLI::App* construct =
      app.add_subcommand("construct", "build a closed-form labeling");
  construct->add_option("--family", construct_args.family, "two-diff|general")
      ->required();
  construct->add_option("--n", construct_args.n, "larger part size")
      ->required();
  construct->add_option("--a", construct_args.a, "gap parameter");
  construct->add_option("--c", construct_args.c, "heavy column count");
  construct->add_option("--variant", construct_args.variant,
                        "two-diff layout (max|base)");
  construct->add_option("--out", construct_args.out, "write the result here");

  ScheduleArgs schedule_args;
  CLI::App* schedule = app.add_subcommand(
      "schedule", "emit and validate the index-walking swap schedule");
  schedule->add_option("--family", schedule_args.family, "two-diff|general")
      ->required();
  schedule->add_option("--n", schedule_args.n, "larger part size")->required();
  schedule->add_option("--a", schedule_args.a, "gap parameter");
  schedule->add_option("--out", schedule_args.out, "write the result here");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand(
      "verify", "check constructed index sets against the claimed ones");
  verify->add_option("--n-max", verify_args.n_max, "largest odd n to cover")
      ->required();
  verify->add_flag("--oracle", verify_args.oracle,
                   "cross-check small shapes exhaustively");
  verify->add_option("--format", verify_args.format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
  verify->add_option("--out", verify_args.out, "write the report here");

  std::string fixture_variant;
  std::string fixture_out;
  CLI::App* fixture =
      app.add_subcommand("fixture", "print a worked K_{3,5} labeling");
  fixture->add_option("variant", fixture_variant, "a|b")->required();
  fixture->add_option("--out", fixture_out, "write the labeling here");

  std::string eval_source;
  std::string eval_out;
  CLI::App* eval =
      app.add_subcommand("eval", "evaluate a labeling file (- for stdin)");
  eval->add_option("file", eval_source, "labeling file or -")->required();
  eval->add_option("--out", eval_out, "write the evaluation here");

  std::string export_source;
  std::string export_out;
  CLI::App* exporter =
      app.add_subcommand("export", "render a labeling file as Graphviz DOT");
  exporter->add_option("--dot", export_source, "labeling file or -")
      ->required();
  exporter->add_option("--out", export_out, "write the DOT text here");

  SearchArgs search_args;
  CLI::App* search = app.add_subcommand(
      "search", "randomized hill climb toward a target index");
  search->add_option("--p", search_args.p, "size of part A")->required();
  search->add_option("--q", search_args.q, "size of part B")->required();
  search->add_option("--target", search_args.target, "index to reach")
      ->required();
  search->add_option("--budget", search_args.budget, "move budget")
      ->required();
  search->add_option("--seed", search_args.seed, "generator seed")->required();
  search->add_option("--out", search_args.out, "write the result here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  construct_args.variant_given = construct->count("--variant") > 0;

  try {
    if (oracle->parsed()) return run_oracle(oracle_args);
    if (construct->parsed()) return run_construct(construct_args);
    if (schedule->parsed()) return run_schedule(schedule_args);
    if (verify->parsed()) return run_verify(verify_args);
    if (fixture->parsed()) {
      if (fixture_variant.size() != 1) {
        throw ebi::parameter_error("unknown fixture variant '" +
                                   fixture_variant + "'; use 'a' or 'b'");
      }
      emit(ebi::serialize_labeling(ebi::fixture_k35(fixture_variant[0])),
           fixture_out);
      return 0;
    }
    if (eval->parsed()) {
      const ebi::Labeling lab = ebi::parse_labeling(slurp(eval_source));
      emit(ebi::evaluation_to_json(ebi::evaluate(lab)), eval_out);
      return 0;
    }
    if (exporter->parsed()) {
      const ebi::Labeling lab = ebi::parse_labeling(slurp(export_source));
      emit(ebi::export_dot(lab), export_out);
      return 0;
    }
    if (search->parsed()) return run_search(search_args);
  } catch (const ebi::resource_limit_error& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const ebi::schedule_error& e) {
    std::cerr << "schedule mismatch: " << e.what() << "\n";
    return 1;
  } catch (const ebi::internal_error& e) {
    std::cerr << "construction check failed: " << e.what() << "\n";
    return 1;
  } catch (const ebi::budget_error& e) {
    std::cerr << "construction check failed: " << e.what() << "\n";
    return 1;
  } catch (const ebi::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
