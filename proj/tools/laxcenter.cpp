#include "laxcenter/commands.hpp"
#include "laxcenter/errors.hpp"
#include "laxcenter/io.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace laxcenter;

namespace {

std::string command_line(int argc, char** argv) {
  std::string s = "laxcenter";
  for (int i = 1; i < argc; ++i) s += std::string(" ") + argv[i];
  return s;
}

int emit(const Report& r, bool as_json) {
  std::cout << (as_json ? render_json(r) : render_text(r));
  return r.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Centers, centralizers and the lax center functors"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable report");

  std::string example;
  auto* ex = app.add_subcommand("example", "run a worked example")->alias("run_example");
  ex->add_option("name", example, "intro, matrix or dkr")->required();
  ex->add_flag("--json", as_json, "machine-readable report");

  std::vector<std::string> hom_paths;
  std::string target = "morita";
  SuiteOptions opts;
  std::size_t corpus_triples = 0;
  auto* ver = app.add_subcommand("verify", "check lax unity and associativity")->alias("verify_suite");
  ver->add_option("homs", hom_paths, "hom files forming a composable chain");
  ver->add_option("--target", target, "morita or cospan")
      ->check(CLI::IsMember({"morita", "cospan"}))
      ->capture_default_str();
  ver->add_option("--word-len", opts.sampling.word_len, "word length bound")->capture_default_str();
  ver->add_option("--samples", opts.sampling.samples, "sampled words per check")->capture_default_str();
  ver->add_option("--seed", opts.sampling.seed, "sampling seed")->capture_default_str();
  ver->add_option("--corpus", corpus_triples, "check this many seeded triples of the built-in corpus");
  ver->add_flag("--json", as_json, "machine-readable report");

  std::string ring_path;
  auto* cen = app.add_subcommand("center", "center of a ring file");
  cen->add_option("ring", ring_path, "ring file")->required();
  cen->add_flag("--json", as_json, "machine-readable report");

  std::string hom_path;
  auto* czr = app.add_subcommand("centralizer", "centralizer of a hom file");
  czr->add_option("hom", hom_path, "hom file")->required();
  czr->add_flag("--json", as_json, "machine-readable report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  const std::string cmd = command_line(argc, argv);
  try {
    if (*ex) return emit(run_example(example), as_json);
    if (*ver) {
      opts.target = target == "cospan" ? SuiteTarget::cospan : SuiteTarget::morita;
      if (corpus_triples > 0) {
        if (!hom_paths.empty()) throw InputError("--corpus takes no hom files");
        return emit(verify_corpus(corpus_triples, opts, cmd), as_json);
      }
      std::vector<RingHom> homs;
      for (const auto& p : hom_paths) homs.push_back(load_hom_file(p));
      return emit(verify_chain(homs, opts, cmd), as_json);
    }
    if (*cen) return emit(describe_center(load_ring_file(ring_path), cmd), as_json);
    if (*czr) return emit(describe_centralizer(load_hom_file(hom_path), cmd), as_json);
  } catch (const AxiomError& e) {
    std::cerr << "invalid input: axiom '" << e.axiom() << "' fails";
    if (!e.witness().empty()) {
      std::cerr << " at (";
      for (std::size_t i = 0; i < e.witness().size(); ++i)
        std::cerr << (i ? "," : "") << e.witness()[i];
      std::cerr << ")";
    }
    std::cerr << ": " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
