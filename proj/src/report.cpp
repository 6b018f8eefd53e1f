#include "tdim/report.hpp"

#include <sstream>

#include "tdim/conformality.hpp"
#include "tdim/error.hpp"

namespace tdim {

SpaceSpec SpaceSpec::parse(const std::string& text, bool hbc) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(Errc::ParseError, "bad space '" + text + "'");
    }
  }
  SpaceSpec s;
  s.hbc = hbc;
  if (parts.size() == 1) {
    s.m = s.n = parts[0];
    s.alpha = s.beta = parts[0] - 1;
  } else if (parts.size() == 4) {
    s.m = parts[0];
    s.n = parts[1];
    s.alpha = parts[2];
    s.beta = parts[3];
  } else {
    throw Error(Errc::ParseError, "space must be 'd' or 'm,n,alpha,beta'");
  }
  if (s.m < 1 || s.n < 1) throw Error(Errc::InvalidArgument, "degrees must be positive");
  return s;
}

std::string SpaceSpec::str() const {
  std::ostringstream os;
  os << (hbc ? "S-bar(" : "S(") << m << ',' << n << ',' << alpha << ',' << beta << ')';
  return os.str();
}

const char* to_string(Method m) {
  switch (m) {
    case Method::Formula: return "formula";
    case Method::Cofactor: return "cofactor";
    case Method::Oracle: return "oracle";
  }
  return "?";
}

std::vector<Method> parse_methods(const std::string& text) {
  std::vector<Method> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "formula")
      out.push_back(Method::Formula);
    else if (item == "cofactor")
      out.push_back(Method::Cofactor);
    else if (item == "oracle")
      out.push_back(Method::Oracle);
    else
      throw Error(Errc::ParseError, "unknown method '" + item + "'");
  }
  if (out.empty()) throw Error(Errc::ParseError, "no methods given");
  return out;
}

namespace {

const TMesh& flat(const AnyMesh& mesh) {
  if (const auto* h = std::get_if<HMesh>(&mesh)) return h->mesh();
  return std::get<TMesh>(mesh);
}

MethodResult not_applicable(Method m, std::string why) { return {m, false, 0, std::move(why)}; }

MethodResult run(Method method, const AnyMesh& mesh, const SpaceSpec& s, const ReportOptions& opt) {
  const TMesh& t = flat(mesh);
  const HMesh* h = std::get_if<HMesh>(&mesh);
  try {
    switch (method) {
      case Method::Formula: {
        if (!h) return not_applicable(method, "mesh has no level structure");
        if (!s.equal_degree() || s.m < 2 || s.m > 3) return not_applicable(method, "no closed form for " + s.str());
        int v = dim_formula(*h, s.m, s.hbc);
        std::string name = s.m == 2 ? "dim_s2" : h->division() == Division{3, 3} ? "dim_s3_3x3" : "dim_s3";
        return {method, true, v, s.hbc ? name + "_hbc" : name};
      }
      case Method::Cofactor: {
        if (!s.equal_degree()) return not_applicable(method, "cofactor rank needs S(d,d,d-1,d-1)");
        if (s.hbc) return {method, true, dim_W_hbc(t, s.m), "dim_W_hbc"};
        return {method, true, dim_spline_cofactor(t, s.m), "dim_spline_cofactor"};
      }
      case Method::Oracle: {
        int v = s.hbc ? dim_oracle_hbc(t, s.m, s.n, s.alpha, s.beta, opt.oracle)
                      : dim_oracle(t, s.m, s.n, s.alpha, s.beta, opt.oracle);
        return {method, true, v, s.hbc ? "dim_oracle_hbc" : "dim_oracle"};
      }
    }
  } catch (const Error& e) {
    if (e.code() == Errc::NotRegular || e.code() == Errc::ParseError) throw;
    return not_applicable(method, e.what());
  }
  return not_applicable(method, "unknown method");
}

}  // namespace

DimReport compute_report(const AnyMesh& mesh, const SpaceSpec& space, const ReportOptions& options) {
  DimReport r;
  r.space = space;
  r.census = flat(mesh).census();
  if (const HMesh* h = std::get_if<HMesh>(&mesh)) {
    r.division = h->division();
    if (space.equal_degree() && (space.m == 2 || space.m == 3) && !(space.m == 2 && h->division() == Division{3, 3})) {
      r.components = space.hbc ? classify_components(h->structure(), h->division(), space.m)
                               : classify_components(extend_levels(h->structure(), space.m, space.m), h->division(), space.m);
    }
  }
  for (Method m : options.methods) r.results.push_back(run(m, mesh, space, options));
  const MethodResult* first = nullptr;
  for (const auto& res : r.results) {
    if (!res.applicable) continue;
    if (first && first->value != res.value) r.agree = false;
    if (!first) first = &res;
  }
  return r;
}

nlohmann::json census_to_json(const Census& c) {
  return {{"vertices", c.vertices},        {"boundary_vertices", c.boundary_vertices},
          {"t_junctions", c.tjunctions},   {"crossings", c.crossings},
          {"edges", c.edges},              {"cells", c.cells},
          {"boundary_ledges", c.boundary_ledges}, {"cross_cuts", c.crosscuts},
          {"rays", c.rays},                {"t_ledges", c.tledges},
          {"interior_ledges", c.interior_ledges()}};
}

nlohmann::json report_to_json(const DimReport& r) {
  using nlohmann::json;
  json methods = json::object();
  for (const auto& res : r.results) {
    if (res.applicable)
      methods[to_string(res.method)] = {{"value", res.value}, {"routine", res.detail}};
    else
      methods[to_string(res.method)] = {{"value", nullptr}, {"reason", res.detail}};
  }
  json classes = json::object();
  for (const auto& c : r.components) {
    std::string key = to_string(c.cls);
    classes[key] = classes.value(key, 0) + 1;
  }
  json out = {{"space", r.space.str()},
              {"census", census_to_json(r.census)},
              {"methods", methods},
              {"agree", r.agree}};
  if (r.division) {
    out["division"] = to_string(*r.division);
    out["component_classes"] = classes;
  }
  return out;
}

std::string report_to_text(const DimReport& r) {
  std::ostringstream os;
  os << r.space.str();
  if (r.division) os << "  division " << to_string(*r.division);
  os << "\n  V+=" << r.census.crossings << " Vb=" << r.census.boundary_vertices << " E=" << r.census.interior_ledges()
     << " cells=" << r.census.cells << '\n';
  for (const auto& res : r.results) {
    os << "  " << to_string(res.method) << ": ";
    if (res.applicable)
      os << res.value << " (" << res.detail << ")\n";
    else
      os << "n/a (" << res.detail << ")\n";
  }
  os << "  " << (r.agree ? "agree" : "MISMATCH") << '\n';
  return os.str();
}

}  // namespace tdim
