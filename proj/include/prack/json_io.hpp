#pragma once
// JSON schemas for every object the CLI reads or writes.  Row-major nested
// arrays of element indices throughout; loading runs the same exhaustive
// validation as the in-memory constructors.

#include "prack/brace.hpp"
#include "prack/operators.hpp"
#include "prack/pbrace.hpp"
#include "prack/pshelf.hpp"
#include "prack/reflection.hpp"
#include "prack/solution.hpp"
#include "prack/twist.hpp"

#include <string>

namespace prack {

struct Report;

std::string brace_to_json(const SkewBrace& b);
SkewBrace brace_from_json_file(const std::string& path);

std::string param_set_to_json(const ParamSet& y);
ParamSet param_set_from_json_file(const std::string& path,
                                  const Carrier& carrier);

std::string shelf_to_json(const Shelf& s);
Shelf shelf_from_json_file(const std::string& path);

std::string p_shelf_to_json(const PShelf& p);
std::string p_shelf_to_json_line(const PShelf& p);  // compact, for streams
PShelf p_shelf_from_json_file(const std::string& path);
// Raw tables for `verify`, no validation beyond shape.
struct PShelfData {
  Carrier carrier;
  ParamSet params;
  std::vector<elem> table;
};
PShelfData p_shelf_data_from_json_file(const std::string& path);

std::string solution_to_json(const ParamSolution& s);
ParamSolution solution_from_json_file(const std::string& path);
struct SolutionData {
  Carrier carrier;
  ParamSet params;
  std::vector<elem> sigma, tau;
};
SolutionData solution_data_from_json_file(const std::string& path);

std::string sigma_to_json(const SigmaFamily& s);
SigmaFamily sigma_from_json_file(const std::string& path);

std::string reflection_to_json(const ReflectionFamily& k);
std::string reflection_to_json_line(const ReflectionFamily& k);
ReflectionFamily reflection_from_json_file(const std::string& path,
                                           const Carrier& carrier,
                                           const ParamSet& params);
struct ReflectionData {
  std::vector<elem> kappa;
};
ReflectionData reflection_data_from_json_file(const std::string& path);

std::string eta_to_json(const EtaFamily& e);
EtaFamily eta_from_json_file(const std::string& path);

std::string p_brace_to_json(const PBraceTable& t);
PBraceTable p_brace_from_json_file(const std::string& path);

std::string bundle_to_json(const MagmaBundle& b);
MagmaBundle bundle_from_json_file(const std::string& path);

std::string report_to_json(const Report& r);
std::string dressed_to_json(const DressedReflection& d);

void write_text_file(const std::string& path, const std::string& text);

}  // namespace prack
