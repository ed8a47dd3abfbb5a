// Batch front-end: load a semigroup table or a subshift spec, run the
// requested analysis, print one deterministic JSON (or DOT) report.
// Exit codes: 0 clean, 1 property violations, 2 input errors.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "ihull/hull.hpp"
#include "ihull/report.hpp"
#include "ihull/semigroup.hpp"
#include "ihull/subshift.hpp"
#include "ihull/verify.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ihull::Error(ihull::ErrorKind::InvalidDocument,
                              "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

bool looks_like_subshift(const std::string& text) {
  auto doc = nlohmann::json::parse(text);
  return doc.is_object() && doc.contains("alphabet");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"inverse hulls of finite semigroups with zero"};
  app.require_subcommand(1);

  std::string input;
  std::string emit = "json";
  std::string space = "all";
  std::string emit_semigroup;
  std::size_t depth = 1;
  std::size_t lambda_bound = 3;
  std::uint64_t seed = 1;

  CLI::App* c_classify = app.add_subcommand("classify", "table properties");
  c_classify->add_option("input", input)->required();

  CLI::App* c_hull = app.add_subcommand("hull", "inverse hull");
  c_hull->add_option("input", input)->required();
  c_hull->add_option("--emit", emit)->check(CLI::IsMember({"json", "dot"}));

  CLI::App* c_strings = app.add_subcommand("strings", "strings and star action");
  c_strings->add_option("input", input)->required();

  CLI::App* c_spectrum = app.add_subcommand("spectrum", "character spectrum");
  c_spectrum->add_option("input", input)->required();

  CLI::App* c_germs = app.add_subcommand("germs", "germ groupoid");
  c_germs->add_option("input", input)->required();
  c_germs->add_option("--space", space)
      ->check(CLI::IsMember({"all", "ultra", "max"}));

  CLI::App* c_subshift = app.add_subcommand("subshift", "language semigroup");
  c_subshift->add_option("input", input)->required();
  c_subshift->add_option("--depth", depth)->check(CLI::PositiveNumber);
  c_subshift->add_option("--emit-semigroup", emit_semigroup);

  CLI::App* c_verify = app.add_subcommand("verify", "full invariant suite");
  c_verify->add_option("input", input)->required();
  c_verify->add_option("--lambda-bound", lambda_bound);
  c_verify->add_option("--seed", seed);

  CLI11_PARSE(app, argc, argv);

  try {
    std::string text = slurp(input);
    std::string digest = ihull::input_digest(text);

    if (c_classify->parsed()) {
      std::cout << ihull::classify_report(ihull::load_semigroup(text), digest);
      return 0;
    }
    if (c_hull->parsed()) {
      ihull::Semigroup sg = ihull::load_semigroup(text);
      if (emit == "dot") {
        std::cout << ihull::hasse_export(sg, ihull::build_hull(sg));
        return 0;
      }
      std::cout << ihull::hull_report(sg, digest);
      return 0;
    }
    if (c_strings->parsed()) {
      std::cout << ihull::strings_report(ihull::load_semigroup(text), digest);
      return 0;
    }
    if (c_spectrum->parsed()) {
      std::cout << ihull::spectrum_report(ihull::load_semigroup(text), digest);
      return 0;
    }
    if (c_germs->parsed()) {
      bool violations = false;
      std::cout << ihull::germs_report(ihull::load_semigroup(text), digest,
                                       space, &violations);
      return violations ? 1 : 0;
    }
    if (c_subshift->parsed()) {
      ihull::SubshiftSpec spec = ihull::parse_subshift(text);
      if (!c_subshift->count("--depth") && spec.depth > 0) depth = spec.depth;
      std::cout << ihull::subshift_report(spec, depth, digest);
      if (!emit_semigroup.empty()) {
        std::ofstream out(emit_semigroup, std::ios::binary);
        if (!out) {
          std::cerr << "error: cannot write " << emit_semigroup << "\n";
          return 2;
        }
        out << ihull::semigroup_document(
            ihull::language_semigroup(spec, depth));
      }
      return 0;
    }
    if (c_verify->parsed()) {
      ihull::VerifyOptions opts;
      opts.lambda_bound = lambda_bound;
      opts.seed = seed;
      ihull::VerifyReport rep;
      if (looks_like_subshift(text)) {
        ihull::SubshiftSpec spec = ihull::parse_subshift(text);
        rep = ihull::verify_subshift(spec, spec.depth, opts);
      } else {
        rep = ihull::verify_semigroup(ihull::load_semigroup(text), opts);
      }
      std::cout << ihull::verify_report_json(rep, digest);
      return rep.ok() ? 0 : 1;
    }
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ihull::Error& e) {
    std::cerr << "error: " << ihull::to_string(e.kind()) << ": " << e.what()
              << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
