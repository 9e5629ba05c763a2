// k3fib: classify the elliptic fibrations of the Y2 surface by the lattice
// method and verify the catalog of Weierstrass models against it.
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "k3fib/report.hpp"

using namespace k3fib;

namespace {

int run(int argc, char** argv) {
  CLI::App app{"elliptic fibrations of the Y2 K3 surface: lattice classification "
               "and Weierstrass verification"};
  app.require_subcommand(1);
  int jobs = 1;
  app.add_option("--jobs", jobs, "worker threads (default 1)")->capture_default_str();

  // lattice info
  auto* lat = app.add_subcommand("lattice", "lattice utilities");
  auto* lat_info = lat->add_subcommand("info", "describe a lattice JSON document");
  std::string lat_file;
  lat_info->add_option("file", lat_file, "JSON document {label, gram, ambient?}")->required();

  // niemeier
  auto* nie = app.add_subcommand("niemeier", "the 24 Niemeier lattices");
  auto* nie_list = nie->add_subcommand("list", "emit the classification table");
  auto* nie_val = nie->add_subcommand("validate", "realize and validate the glue data");
  bool json_out = false, md_out = false;
  for (auto* c : {nie_list}) {
    c->add_flag("--json", json_out, "JSON output");
    c->add_flag("--markdown", md_out, "markdown output");
  }

  // nishiyama
  auto* nis = app.add_subcommand("nishiyama", "primitive embeddings and frames");
  auto* nis_enum = nis->add_subcommand("enumerate", "the 30 fibrations");
  nis_enum->add_flag("--json", json_out, "JSON output");
  nis_enum->add_flag("--markdown", md_out, "markdown output");
  auto* nis_frame = nis->add_subcommand("frame", "frame of one embedding");
  std::string host_id;
  int spec_index = 0;
  bool dump = false;
  nis_frame->add_option("host", host_id, "host lattice id, e.g. E8+D16")->required();
  nis_frame->add_option("index", spec_index, "embedding index for the host")->required();
  nis_frame->add_flag("--dump", dump, "emit Gram matrices and glue analysis");

  // elliptic
  auto* ell = app.add_subcommand("elliptic", "Weierstrass model analysis");
  auto* ell_an = ell->add_subcommand("analyze", "fibers of a catalog entry or file");
  std::string target;
  ell_an->add_option("target", target, "catalog id/letter or catalog JSON file")->required();
  ell_an->add_flag("--json", json_out, "JSON output");
  auto* ell_h = ell->add_subcommand("height", "height of a catalog point");
  std::string h_id;
  int point_index = 0;
  ell_h->add_option("id", h_id, "catalog id or letter")->required();
  ell_h->add_option("--point", point_index, "point index (default 0)")->capture_default_str();

  // verify
  auto* ver = app.add_subcommand("verify", "cross-check catalog entries");
  std::string ver_target = "all";
  ver->add_option("target", ver_target, "'all' or a catalog id/letter")->required();
  ver->add_flag("--json", json_out, "JSON output");
  ver->add_flag("--markdown", md_out, "markdown output");

  CLI11_PARSE(app, argc, argv);

  if (*lat_info) {
    std::ifstream in(lat_file);
    if (!in) {
      std::cerr << "cannot open " << lat_file << "\n";
      return 2;
    }
    std::stringstream ss;
    ss << in.rdbuf();
    Lattice L = lattice_from_json(ss.str());
    std::cout << "label: " << L.label << "\nrank: " << L.rank
              << "\ndet: " << L.determinant().get_str() << "\neven: " << (L.is_even() ? "yes" : "no")
              << "\n";
    if (L.determinant() != 0) {
      DiscriminantGroup g = discriminant_group(L);
      std::cout << "discriminant group: ";
      if (g.invariant_factors.empty()) std::cout << "(0)";
      for (size_t i = 0; i < g.invariant_factors.size(); ++i)
        std::cout << (i ? " x " : "") << "Z/" << g.invariant_factors[i].get_str();
      std::cout << "\n";
    }
    return 0;
  }

  if (*nie_list) {
    std::cout << (json_out ? niemeier_json() : niemeier_markdown());
    return 0;
  }
  if (*nie_val) {
    int bad = 0;
    for (const auto& n : all_niemeier()) {
      if (!n.has_explicit_glue) continue;
      auto fails = validate_niemeier(n, jobs);
      if (fails.empty()) {
        std::cout << "ok   " << n.id << "\n";
      } else {
        ++bad;
        for (const auto& f : fails) std::cout << "FAIL " << n.id << ": " << f << "\n";
      }
    }
    return bad ? 1 : 0;
  }

  if (*nis_enum) {
    auto rows = enumerate_all(jobs);
    std::cout << (json_out ? table1_json(rows) : table1_markdown(rows));
    return 0;
  }
  if (*nis_frame) {
    const NiemeierLattice& host = niemeier_by_id(host_id);
    auto specs = candidate_embeddings(host);
    if (spec_index < 0 || spec_index >= (int)specs.size()) {
      std::cerr << host_id << " has " << specs.size() << " embeddings\n";
      return 2;
    }
    Frame f = compute_frame(specs[spec_index]);
    std::cout << "embedding: " << f.spec.describe() << "\n";
    std::cout << "rank W = " << f.W.rank << ", det W = " << det(f.W.gram).get_str()
              << ", det N = " << det(f.N.gram).get_str() << "\n";
    std::cout << "W/N: ";
    if (f.wn_quotient.empty()) std::cout << "(0)";
    for (size_t i = 0; i < f.wn_quotient.size(); ++i)
      std::cout << (i ? " x " : "") << "Z/" << f.wn_quotient[i].get_str();
    std::cout << "\nfibers: ";
    for (auto t : f.W_root.types()) std::cout << t.str() << " ";
    std::cout << "\nrank MW = " << f.mw_rank << ", torsion: ";
    if (f.torsion.empty()) std::cout << "(0)";
    for (size_t i = 0; i < f.torsion.size(); ++i)
      std::cout << (i ? " x " : "") << "Z/" << f.torsion[i].get_str();
    std::cout << "\n";
    if (dump) {
      Lattice W = f.W;
      W.label = host.id + " frame";
      std::cout << "gram W:\n" << lattice_to_json(W) << "\n";
      Lattice N = f.N;
      N.label = host.id + " N";
      std::cout << "gram N:\n" << lattice_to_json(N) << "\n";
    }
    return 0;
  }

  if (*ell_an) {
    std::vector<CatalogEntry> entries = load_catalog();
    const CatalogEntry* e = find_entry(entries, target);
    std::vector<CatalogEntry> file_entries;
    if (!e) {
      std::ifstream probe(target);
      if (!probe) {
        std::cerr << "no catalog entry or file named " << target << "\n";
        return 2;
      }
      file_entries = load_catalog_file(target);
      if (file_entries.empty()) {
        std::cerr << "no entries in " << target << "\n";
        return 2;
      }
    }
    const auto& list = e ? std::vector<CatalogEntry>{*e} : file_entries;
    for (const auto& entry : list) {
      SurfaceAnalysis S = analyze_surface(entry.model);
      std::cout << (json_out ? analysis_json(entry, S) : analysis_text(entry, S));
    }
    return 0;
  }
  if (*ell_h) {
    std::vector<CatalogEntry> entries = load_catalog();
    const CatalogEntry* e = find_entry(entries, h_id);
    if (!e) {
      std::cerr << "no catalog entry " << h_id << "\n";
      return 2;
    }
    if (point_index < 0 || point_index >= (int)e->points.size()) {
      std::cerr << "entry " << h_id << " has " << e->points.size() << " points\n";
      return 2;
    }
    SurfaceAnalysis S = analyze_surface(e->model);
    const SectionPoint& P = e->points[point_index].point;
    std::cout << "x = " << P.x.str(e->parameter) << "\ny = " << P.y.str(e->parameter) << "\n";
    std::cout << "height = " << rat_str(height(S, P)) << "\n";
    auto ord = torsion_order(e->model, P);
    std::cout << "torsion order = " << (ord ? std::to_string(*ord) : "none (non-torsion)") << "\n";
    return 0;
  }

  if (*ver) {
    std::vector<CatalogEntry> entries = load_catalog();
    if (ver_target != "all") {
      const CatalogEntry* e = find_entry(entries, ver_target);
      if (!e) {
        std::cerr << "no catalog entry " << ver_target << "\n";
        return 2;
      }
      entries = {*e};
    }
    FullReport rep = verify_catalog(entries, jobs);
    if (json_out) std::cout << report_json(rep);
    else std::cout << report_markdown(rep);
    return rep.failures == 0 ? 0 : 1;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
