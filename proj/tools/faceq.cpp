// Command line front end: scheme analysis reports, gallery generation,
// deformation pipelines, DOT export of the order > 2 subgraph, and fuzz
// campaigns over random schemes.
//
// Exit codes: 0 success; 2 usage, parse, or validation error; 3 internal
// invariant violation (a computed result failed its own consistency check).

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "faceq/gallery.hpp"
#include "faceq/io.hpp"
#include "faceq/report.hpp"

namespace {

using ojson = nlohmann::ordered_json;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text;
  else
    faceq::write_file(out_path, text);
}

std::string csv_quote(const std::string& s) {
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += "\"\"";
    else if (c == '\n') q += ' ';
    else q += c;
  }
  q += '"';
  return q;
}

struct GenOptions {
  std::string kind;
  int q = 5, p = 2, n = 3;
  std::string base = "octahedron";
  std::uint64_t seed = 0;
  std::string out;
};

faceq::FacePairingScheme make_scheme(const GenOptions& o) {
  if (o.kind == "lens") return faceq::gen_lens(o.q, o.p);
  if (o.kind == "trivial-sphere") return faceq::gen_trivial_sphere(o.n);
  if (o.kind == "quaternion")
    return faceq::gen_platonic_space(faceq::PlatonicKind::quaternion);
  if (o.kind == "poincare")
    return faceq::gen_platonic_space(faceq::PlatonicKind::poincare);
  if (o.kind == "random") {
    auto base = faceq::base_solid_from_name(o.base);
    if (!base) throw faceq::ParseError("unknown base solid: " + o.base);
    return faceq::gen_random(*base, o.seed);
  }
  throw faceq::ParseError("unknown generator kind: " + o.kind);
}

struct FuzzOptions {
  std::string base = "octahedron";
  int count = 100;
  std::uint64_t seed = 0;
  std::string out_dir = "fuzz-out";
};

void run_fuzz(const FuzzOptions& o) {
  auto base = faceq::base_solid_from_name(o.base);
  if (!base) throw faceq::ParseError("unknown base solid: " + o.base);
  std::filesystem::create_directories(o.out_dir);

  std::ostringstream csv;
  csv << "seed,analyzed,manifold,chi,degree,flat,surface,circuit,"
         "viol_manifold_chi,viol_flat_surface,viol_circuit,error\n";
  std::map<int, int> chi_hist;
  int analyzed = 0, errors = 0, manifold_count = 0;
  std::vector<std::uint64_t> viol_chi, viol_surface, viol_circuit;
  std::vector<std::string> viol_files;

  for (int i = 0; i < o.count; ++i) {
    const std::uint64_t seed = o.seed + static_cast<std::uint64_t>(i);
    faceq::FacePairingScheme s = faceq::gen_random(*base, seed);
    try {
      faceq::Analysis a = faceq::analyze(s);
      const bool surface_ok =
          a.surface.kind == faceq::SurfaceKind::disk ||
          a.surface.kind == faceq::SurfaceKind::projective_plane;
      const bool v_chi = a.manifold.is_manifold && a.chi != 1;
      const bool v_surface =
          a.actions.flat && a.manifold.is_manifold && !surface_ok;
      const bool v_circuit =
          a.actions.degree > 2 && a.manifold.is_manifold && !a.circuit;
      ++analyzed;
      if (a.manifold.is_manifold) ++manifold_count;
      ++chi_hist[a.chi];
      if (v_chi) viol_chi.push_back(seed);
      if (v_surface) viol_surface.push_back(seed);
      if (v_circuit) viol_circuit.push_back(seed);
      if (v_chi || v_surface || v_circuit) {
        const std::string name = "violation-" + std::to_string(seed) + ".json";
        faceq::write_file(o.out_dir + "/" + name, faceq::serialize_scheme(s));
        viol_files.push_back(name);
      }
      csv << seed << ",yes," << (a.manifold.is_manifold ? "yes" : "no") << ","
          << a.chi << "," << a.actions.degree << ","
          << (a.actions.flat ? "yes" : "no") << ","
          << faceq::surface_kind_name(a.surface.kind) << ","
          << (a.circuit ? "yes" : "no") << "," << (v_chi ? "yes" : "no")
          << "," << (v_surface ? "yes" : "no") << ","
          << (v_circuit ? "yes" : "no") << ",\n";
    } catch (const std::exception& e) {
      ++errors;
      csv << seed << ",no,,,,,,,,,," << csv_quote(e.what()) << "\n";
    }
  }

  ojson summary;
  summary["tool"] = ojson{{"name", faceq::kToolName},
                          {"version", faceq::kToolVersion}};
  summary["base"] = o.base;
  summary["count"] = o.count;
  summary["seed0"] = o.seed;
  summary["analyzed"] = analyzed;
  summary["errors"] = errors;
  summary["manifold_count"] = manifold_count;
  ojson hist;
  for (const auto& [chi, n] : chi_hist) hist[std::to_string(chi)] = n;
  summary["chi_histogram"] = hist;
  ojson viols;
  viols["manifold_chi"] =
      ojson{{"count", viol_chi.size()}, {"seeds", viol_chi}};
  viols["flat_surface"] =
      ojson{{"count", viol_surface.size()}, {"seeds", viol_surface}};
  viols["circuit"] =
      ojson{{"count", viol_circuit.size()}, {"seeds", viol_circuit}};
  summary["violations"] = viols;
  summary["violation_files"] = viol_files;
  const std::string summary_bytes = summary.dump(2) + "\n";

  faceq::write_file(o.out_dir + "/results.csv", csv.str());
  faceq::write_file(o.out_dir + "/summary.json", summary_bytes);
  std::cout << summary_bytes;
}

}  // namespace

int main(int argc, char** argv) {
  // Accepted for reproducibility scripting; every code path is already
  // single-threaded and deterministic, so the flag changes nothing.
  (void)std::getenv("FQ_DETERMINISTIC");

  CLI::App app{"face-pairing scheme analyzer"};
  app.require_subcommand(1);

  auto* analyze_cmd = app.add_subcommand(
      "analyze", "Validate a scheme file and write the full analysis report");
  std::string an_path, an_out, an_format = "json";
  analyze_cmd->add_option("path", an_path, "scheme file (JSON)")->required();
  analyze_cmd->add_option("--out", an_out, "write report here (default stdout)");
  analyze_cmd->add_option("--format", an_format, "report format")
      ->check(CLI::IsMember({"json", "text"}));
  analyze_cmd->callback([&] {
    faceq::Analysis a = faceq::analyze(faceq::load_scheme_file(an_path));
    emit(an_format == "text" ? faceq::render_text(a) : faceq::render_json(a),
         an_out);
  });

  auto* gen_cmd =
      app.add_subcommand("gen", "Generate a gallery scheme and print it");
  GenOptions gen;
  gen_cmd->add_option("kind", gen.kind, "generator")
      ->required()
      ->check(CLI::IsMember(
          {"lens", "trivial-sphere", "quaternion", "poincare", "random"}));
  gen_cmd->add_option("--q", gen.q, "lens parameter q (q > p >= 1, coprime)");
  gen_cmd->add_option("--p", gen.p, "lens parameter p");
  gen_cmd->add_option("--n", gen.n, "trivial-sphere face size");
  gen_cmd->add_option("--base", gen.base,
                      "random base solid: tetrahedron | cube | octahedron | "
                      "dodecahedron");
  gen_cmd->add_option("--seed", gen.seed, "random seed");
  gen_cmd->add_option("--out", gen.out, "write scheme here (default stdout)");
  gen_cmd->callback(
      [&] { emit(faceq::serialize_scheme(make_scheme(gen)), gen.out); });

  auto* contract_cmd = app.add_subcommand(
      "contract",
      "Analyze a scheme, run a contraction pipeline on its quotient, and "
      "report the induced presentation");
  std::string co_path, co_out, co_format = "json", co_strategy = "gamma-tree";
  std::vector<int> co_edges;
  contract_cmd->add_option("path", co_path, "scheme file (JSON)")->required();
  contract_cmd->add_option("--strategy", co_strategy, "contraction strategy")
      ->check(CLI::IsMember({"gamma-tree"}));
  contract_cmd
      ->add_option("--edges", co_edges,
                   "contract these edges one at a time instead; each id "
                   "refers to the complex left by the previous step")
      ->delimiter(',');
  contract_cmd->add_option("--out", co_out,
                           "write report here (default stdout)");
  contract_cmd->add_option("--format", co_format, "report format")
      ->check(CLI::IsMember({"json", "text"}));
  contract_cmd->callback([&] {
    faceq::Analysis a = faceq::analyze(faceq::load_scheme_file(co_path));
    faceq::DeformationOutcome d =
        contract_cmd->count("--edges") ? faceq::contract_edge_list(a, co_edges)
                                       : faceq::contract_gamma_tree(a);
    emit(co_format == "text" ? faceq::render_text(a, &d)
                             : faceq::render_json(a, &d),
         co_out);
  });

  auto* gamma_cmd = app.add_subcommand(
      "gamma", "Export the order > 2 subgraph of the quotient as DOT");
  std::string ga_path, ga_out;
  gamma_cmd->add_option("path", ga_path, "scheme file (JSON)")->required();
  gamma_cmd->add_option("--out", ga_out, "write DOT here (default stdout)");
  gamma_cmd->callback([&] {
    emit(faceq::gamma_dot(
             faceq::build_quotient(faceq::load_scheme_file(ga_path))),
         ga_out);
  });

  auto* fuzz_cmd = app.add_subcommand(
      "fuzz",
      "Generate and analyze a run of random schemes, tallying property "
      "violations");
  FuzzOptions fuzz;
  fuzz_cmd->add_option("--base", fuzz.base, "base solid")
      ->check(CLI::IsMember(
          {"tetrahedron", "cube", "octahedron", "dodecahedron"}));
  fuzz_cmd->add_option("--count", fuzz.count, "number of seeds")
      ->check(CLI::Range(1, std::numeric_limits<int>::max()));
  fuzz_cmd->add_option("--seed", fuzz.seed, "first seed");
  fuzz_cmd->add_option("--out", fuzz.out_dir,
                       "output directory (default fuzz-out)");
  fuzz_cmd->callback([&] { run_fuzz(fuzz); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const faceq::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const faceq::InvariantError& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
