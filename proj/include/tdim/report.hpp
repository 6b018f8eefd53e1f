#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tdim/formulas.hpp"
#include "tdim/mesh_io.hpp"
#include "tdim/oracle.hpp"

namespace tdim {

// S(m, n, alpha, beta), optionally with homogeneous boundary conditions.
struct SpaceSpec {
  int m = 3, n = 3, alpha = 2, beta = 2;
  bool hbc = false;

  // "d" (meaning d,d,d-1,d-1) or "m,n,alpha,beta".
  static SpaceSpec parse(const std::string& text, bool hbc = false);
  bool equal_degree() const { return m == n && alpha == m - 1 && beta == n - 1; }
  std::string str() const;
};

enum class Method { Formula, Cofactor, Oracle };
const char* to_string(Method m);
std::vector<Method> parse_methods(const std::string& text);  // comma separated

struct MethodResult {
  Method method = Method::Oracle;
  bool applicable = false;
  int value = 0;
  std::string detail;  // routine name, or the reason it does not apply
};

struct DimReport {
  SpaceSpec space;
  std::optional<Division> division;
  Census census;
  std::vector<MethodResult> results;
  std::vector<ComponentCount> components;  // special-component classes behind the formula
  bool agree = true;
};

struct ReportOptions {
  std::vector<Method> methods{Method::Formula, Method::Cofactor, Method::Oracle};
  OracleOptions oracle;
};

DimReport compute_report(const AnyMesh& mesh, const SpaceSpec& space, const ReportOptions& options = {});
nlohmann::json report_to_json(const DimReport& report);
std::string report_to_text(const DimReport& report);

nlohmann::json census_to_json(const Census& c);

}  // namespace tdim
