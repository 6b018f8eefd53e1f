#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tdim/conformality.hpp"
#include "tdim/cvr.hpp"
#include "tdim/error.hpp"
#include "tdim/formulas.hpp"
#include "tdim/fuzz.hpp"
#include "tdim/mesh_io.hpp"
#include "tdim/report.hpp"

using namespace tdim;
using nlohmann::json;

namespace {

enum Exit { kAgree = 0, kMismatch = 1, kInputError = 2 };

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(out);
  if (!f) throw Error(Errc::InvalidArgument, "cannot write " + out);
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

const TMesh& flat(const AnyMesh& m) {
  if (const auto* h = std::get_if<HMesh>(&m)) return h->mesh();
  return std::get<TMesh>(m);
}

bool is_invalid_mesh(Errc c) {
  return c == Errc::NotRegular || c == Errc::Overlap || c == Errc::Dangling || c == Errc::DegenerateCell;
}

int cmd_validate(const std::string& path, const std::string& format, const std::string& out) {
  json j = load_json(path);
  try {
    AnyMesh mesh = any_mesh_from_json(j);
    const TMesh& t = flat(mesh);
    Census c = t.census();
    if (format == "json") {
      json r = {{"valid", true}, {"census", census_to_json(c)}};
      if (const auto* h = std::get_if<HMesh>(&mesh)) {
        r["levels"] = h->lev();
        r["n_ge_2"] = check_N_ge_2(*h);
      }
      emit(r.dump(2), out);
    } else {
      std::ostringstream os;
      os << "valid: " << c.cells << " cells, " << c.vertices << " vertices (" << c.boundary_vertices << " boundary, "
         << c.tjunctions << " T-junctions, " << c.crossings << " crossings)\n"
         << "l-edges: " << c.boundary_ledges << " boundary, " << c.crosscuts << " cross-cuts, " << c.rays << " rays, "
         << c.tledges << " T l-edges\n";
      if (const auto* h = std::get_if<HMesh>(&mesh))
        os << "levels: " << h->lev() << ", N>=2: " << (check_N_ge_2(*h) ? "yes" : "no") << '\n';
      emit(os.str(), out);
    }
    return kAgree;
  } catch (const Error& e) {
    if (!is_invalid_mesh(e.code())) throw;
    if (format == "json")
      emit(json{{"valid", false}, {"error", errc_name(e.code())}, {"message", e.what()}}.dump(2), out);
    else
      emit(std::string("invalid: ") + e.what(), out);
    return kMismatch;
  }
}

int cmd_dim(const std::string& path, const SpaceSpec& space, const ReportOptions& opt, const std::string& format,
            const std::string& out) {
  DimReport r = compute_report(load_mesh(path), space, opt);
  emit(format == "json" ? report_to_json(r).dump(2) : report_to_text(r), out);
  return r.agree ? kAgree : kMismatch;
}

int cmd_fuzz(const FuzzConfig& cfg, const std::string& format, const std::string& out) {
  FuzzSummary s = run_fuzz(cfg);
  if (format == "json") {
    emit(fuzz_to_json(cfg, s).dump(2), out);
  } else {
    std::ostringstream os;
    for (const auto& c : s.cases) {
      os << "case " << c.index << " seed " << c.seed << " cells " << c.report.census.cells << ':';
      for (const auto& res : c.report.results)
        os << ' ' << to_string(res.method) << '=' << (res.applicable ? std::to_string(res.value) : "n/a");
      os << (c.report.agree ? "" : "  MISMATCH") << '\n';
    }
    os << "classes:";
    for (const auto& [k, v] : s.classes) os << ' ' << to_string(k) << '=' << v;
    os << "\nmismatches: " << s.mismatches << " of " << s.cases.size() << '\n';
    emit(os.str(), out);
  }
  return s.mismatches == 0 ? kAgree : kMismatch;
}

int cmd_cvr(const std::string& path, const std::string& format, const std::string& out) {
  HMesh mesh = hmesh_from_json(load_json(path));
  CvrGraph g = build_cvr(mesh);
  json r = {{"graph", cvr_to_json(g)}, {"n_ge_2", g.n_ge_2}};
  bool ok = true;
  if (g.connected) {
    BoundaryCheck b = check_boundary_identity(g);
    r["boundary_identity"] = {{"V2", b.two}, {"V3", b.three}, {"turning_degrees", b.turning_degrees}, {"holds", b.holds}};
    ok = b.holds;
  } else {
    r["boundary_identity"] = nullptr;
  }
  if (g.n_ge_2) {
    CvrEquivalence e = check_cvr_equivalence(mesh);
    r["equivalence"] = {{"dim_mesh_cubic_hbc", e.dim_mesh}, {"dim_graph_linear_hbc", e.dim_graph}, {"equal", e.equal}};
    ok = ok && e.equal;
  }
  if (format == "json") {
    emit(r.dump(2), out);
  } else {
    std::ostringstream os;
    os << "crossing vertices: " << g.points.size() << ", edges: " << g.edges.size()
       << ", connected: " << (g.connected ? "yes" : "no") << "\ntypes:";
    for (const auto& [k, v] : r["graph"]["type_counts"].items()) os << ' ' << k << '=' << v;
    os << '\n';
    if (!r["boundary_identity"].is_null())
      os << "V2 = V3 + 4: " << (r["boundary_identity"]["holds"].get<bool>() ? "holds" : "fails") << '\n';
    if (r.contains("equivalence"))
      os << "dim S-bar3(T) = " << r["equivalence"]["dim_mesh_cubic_hbc"] << ", dim S-bar1(G) = "
         << r["equivalence"]["dim_graph_linear_hbc"] << '\n';
    emit(os.str(), out);
  }
  return ok ? kAgree : kMismatch;
}

int cmd_extend(const std::string& path, const SpaceSpec& space, const std::string& step, const std::string& out) {
  AnyMesh mesh = load_mesh(path);
  std::optional<Rational> h;
  if (!step.empty()) h = parse_rational(step);
  emit(mesh_to_json(extend_mesh(flat(mesh), space.m, space.n, h).result).dump(), out);
  return kAgree;
}

int cmd_matrix(const std::string& path, int degree, bool hbc, const std::string& out) {
  const AnyMesh mesh = load_mesh(path);
  const TMesh& t = flat(mesh);
  LEdgeSet set = hbc ? LEdgeSet::all(t) : LEdgeSet::tledges(t);
  emit(conformality_matrix(set, degree).to_csv(), out);
  return kAgree;
}

int cmd_flatten(const std::string& path, const std::string& out) {
  emit(mesh_to_json(flat(load_mesh(path))).dump(), out);
  return kAgree;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dimensions of spline spaces over T-meshes and hierarchical T-meshes"};
  app.require_subcommand(1);
  std::string path, format = "text", out, space_text = "3", methods = "formula,cofactor,oracle", division = "2x2";
  std::string step, basis = "corner";
  bool hbc = false, require_n2 = false;
  int sample_set = 0, degree = 3;
  FuzzConfig fuzz;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--out", out, "write to a file instead of stdout");
  };

  auto* validate = app.add_subcommand("validate", "check a mesh and print its census");
  validate->add_option("mesh", path)->required();
  add_common(validate);

  auto* dim = app.add_subcommand("dim", "compute a dimension by several methods and compare");
  dim->add_option("mesh", path)->required();
  dim->add_option("--space", space_text, "d or m,n,alpha,beta");
  dim->add_flag("--hbc", hbc, "homogeneous boundary conditions");
  dim->add_option("--method", methods, "comma list of formula,cofactor,oracle");
  dim->add_option("--basis", basis, "oracle local basis")->check(CLI::IsMember({"corner", "centered"}));
  dim->add_option("--sample-set", sample_set, "oracle sample points")->check(CLI::Range(0, 1));
  add_common(dim);

  auto* fz = app.add_subcommand("fuzz", "random hierarchical meshes, all methods compared");
  fz->add_option("--seed", fuzz.seed);
  fz->add_option("--count", fuzz.count);
  fz->add_option("--space", space_text, "d or m,n,alpha,beta");
  fz->add_flag("--hbc", hbc, "homogeneous boundary conditions");
  fz->add_option("--method", methods, "comma list of formula,cofactor,oracle");
  fz->add_option("--division", division)->check(CLI::IsMember({"2x2", "3x3"}));
  fz->add_option("--max-level", fuzz.max_level);
  fz->add_option("--level0", fuzz.max_level0, "maximum level-0 cells per direction");
  fz->add_flag("--require-n2", require_n2, "only refinements where new l-edges cross two parent cells");
  add_common(fz);

  auto* cvr = app.add_subcommand("cvr", "crossing-vertex graph checks for a hierarchical mesh");
  cvr->add_option("mesh", path)->required();
  add_common(cvr);

  auto* ext = app.add_subcommand("extend", "write the extended mesh");
  ext->add_option("mesh", path)->required();
  ext->add_option("--space", space_text, "d or m,n,alpha,beta");
  ext->add_option("--step", step, "copy spacing as p/q");
  ext->add_option("--out", out);

  auto* mat = app.add_subcommand("matrix", "dump the conformality matrix as CSV");
  mat->add_option("mesh", path)->required();
  mat->add_option("--degree", degree);
  mat->add_flag("--hbc", hbc, "use every l-edge");
  mat->add_option("--out", out);

  auto* fl = app.add_subcommand("flatten", "write the finest mesh of a hierarchical mesh");
  fl->add_option("mesh", path)->required();
  fl->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*validate) return cmd_validate(path, format, out);
    SpaceSpec space = SpaceSpec::parse(space_text, hbc);
    ReportOptions ropt;
    ropt.methods = parse_methods(methods);
    ropt.oracle.basis = basis == "centered" ? OracleOptions::Basis::Centered : OracleOptions::Basis::Corner;
    ropt.oracle.sample_set = sample_set;
    if (*dim) return cmd_dim(path, space, ropt, format, out);
    if (*fz) {
      fuzz.space = space;
      fuzz.division = parse_division(division);
      fuzz.require_n2 = require_n2;
      fuzz.report = ropt;
      return cmd_fuzz(fuzz, format, out);
    }
    if (*cvr) return cmd_cvr(path, format, out);
    if (*ext) return cmd_extend(path, space, step, out);
    if (*mat) return cmd_matrix(path, degree, hbc, out);
    if (*fl) return cmd_flatten(path, out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return is_invalid_mesh(e.code()) ? kMismatch : kInputError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed input: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
