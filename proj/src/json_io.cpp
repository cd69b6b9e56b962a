#include "prack/json_io.hpp"

#include <filesystem>
#include <fstream>

#include "json.hpp"

namespace prack {

using nlohmann::json;

namespace {

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw validation_error("InputError", "cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw validation_error("InputError",
                           "JSON parse failure in " + path + ": " + e.what());
  }
  return j;
}

std::vector<elem> flat2(const json& j, const char* what) {
  if (!j.is_array() || j.empty() || !j[0].is_array())
    throw validation_error("InputError", std::string(what) + ": expected 2d array");
  std::vector<elem> out;
  const size_t cols = j[0].size();
  for (const auto& row : j) {
    if (row.size() != cols)
      throw validation_error("InputError", std::string(what) + ": ragged rows");
    for (const auto& v : row) out.push_back(v.get<elem>());
  }
  return out;
}

json nest2(const std::vector<elem>& t, long long rows, long long cols) {
  json out = json::array();
  for (long long r = 0; r < rows; ++r) {
    json row = json::array();
    for (long long c = 0; c < cols; ++c) row.push_back(t[r * cols + c]);
    out.push_back(row);
  }
  return out;
}

// [i][j][a][b] nesting for m*m*n*n flat tables
json nest4(const std::vector<elem>& t, long long m, long long n) {
  json out = json::array();
  for (long long i = 0; i < m; ++i) {
    json ji = json::array();
    for (long long j = 0; j < m; ++j) {
      json ja = json::array();
      for (long long a = 0; a < n; ++a) {
        json jb = json::array();
        for (long long b = 0; b < n; ++b)
          jb.push_back(t[((i * m + j) * n + a) * n + b]);
        ja.push_back(jb);
      }
      ji.push_back(ja);
    }
    out.push_back(ji);
  }
  return out;
}

std::vector<elem> flat4(const json& j, long long& m, long long& n,
                        const char* what) {
  if (!j.is_array() || j.empty())
    throw validation_error("InputError", std::string(what) + ": expected 4d array");
  m = (long long)j.size();
  std::vector<elem> out;
  n = -1;
  for (const auto& ji : j) {
    if ((long long)ji.size() != m)
      throw validation_error("InputError",
                             std::string(what) + ": first two axes must match");
    for (const auto& ja : ji) {
      if (n < 0) n = (long long)ja.size();
      if ((long long)ja.size() != n)
        throw validation_error("InputError", std::string(what) + ": ragged");
      for (const auto& jb : ja) {
        if ((long long)jb.size() != n)
          throw validation_error("InputError", std::string(what) + ": ragged");
        for (const auto& v : jb) out.push_back(v.get<elem>());
      }
    }
  }
  return out;
}

json params_to_json_obj(const ParamSet& y) {
  json out;
  out["members"] = y.members;
  out["mu"] = y.mu;
  return out;
}

ParamSet params_from_json_obj(const json& j, const Carrier& carrier) {
  if (!j.contains("members"))
    throw validation_error("InputError", "params: missing members");
  std::vector<elem> members = j.at("members").get<std::vector<elem>>();
  if (j.contains("mu"))
    return param_set_explicit(carrier, members,
                              j.at("mu").get<std::vector<int>>());
  return param_set_identity(carrier, members);
}

Carrier carrier_from_labels(const json& j, int fallback_size) {
  if (j.contains("labels"))
    return Carrier((int)j.at("labels").size(),
                   j.at("labels").get<std::vector<std::string>>());
  return Carrier(fallback_size);
}

GroupTable group_from_json_obj(const json& jop, const Carrier& carrier) {
  return group_from_table(carrier, flat2(jop, "group table"));
}

}  // namespace

std::string brace_to_json(const SkewBrace& b) {
  json out;
  out["labels"] = b.add.carrier.labels;
  out["add"] = nest2(b.add.table, b.size(), b.size());
  out["mul"] = nest2(b.mul.table, b.size(), b.size());
  return out.dump(1);
}

SkewBrace brace_from_json_file(const std::string& path) {
  json j = load_json(path);
  if (!j.contains("add") || !j.contains("mul"))
    throw validation_error("InputError", "brace file needs add and mul tables");
  std::vector<elem> add = flat2(j.at("add"), "add");
  int n = (int)j.at("add").size();
  Carrier carrier = carrier_from_labels(j, n);
  return skew_brace_new(group_from_table(carrier, std::move(add)),
                        group_from_table(carrier, flat2(j.at("mul"), "mul")));
}

std::string param_set_to_json(const ParamSet& y) {
  return params_to_json_obj(y).dump(1);
}

ParamSet param_set_from_json_file(const std::string& path,
                                  const Carrier& carrier) {
  return params_from_json_obj(load_json(path), carrier);
}

std::string shelf_to_json(const Shelf& s) {
  json out;
  out["op"] = nest2(s.table, s.size(), s.size());
  return out.dump(1);
}

Shelf shelf_from_json_file(const std::string& path) {
  json j = load_json(path);
  if (!j.contains("op"))
    throw validation_error("InputError", "shelf file needs an op table");
  std::vector<elem> op = flat2(j.at("op"), "op");
  int n = (int)j.at("op").size();
  return shelf_from_table(carrier_from_labels(j, n), std::move(op));
}

std::string p_shelf_to_json(const PShelf& p) {
  json out;
  out["labels"] = p.carrier.labels;
  out["params"] = params_to_json_obj(p.params);
  out["op"] = nest4(p.table, p.pcount(), p.size());
  return out.dump(1);
}

std::string p_shelf_to_json_line(const PShelf& p) {
  json out;
  out["labels"] = p.carrier.labels;
  out["params"] = params_to_json_obj(p.params);
  out["op"] = nest4(p.table, p.pcount(), p.size());
  out["rack"] = p.rack;
  return out.dump();
}

PShelfData p_shelf_data_from_json_file(const std::string& path) {
  json j = load_json(path);
  if (!j.contains("op") || !j.contains("params"))
    throw validation_error("InputError", "p-shelf file needs params and op");
  PShelfData d;
  long long m, n;
  d.table = flat4(j.at("op"), m, n, "op");
  d.carrier = carrier_from_labels(j, (int)n);
  d.params = params_from_json_obj(j.at("params"), d.carrier);
  if (d.params.count() != (int)m)
    throw validation_error("InputError", "params/op parameter count mismatch");
  return d;
}

PShelf p_shelf_from_json_file(const std::string& path) {
  PShelfData d = p_shelf_data_from_json_file(path);
  return p_shelf_verify(d.carrier, d.params, d.table);
}

std::string solution_to_json(const ParamSolution& s) {
  json out;
  out["labels"] = s.carrier.labels;
  out["params"] = params_to_json_obj(s.params);
  out["sigma"] = nest4(s.sigma, s.pcount(), s.size());
  out["tau"] = nest4(s.tau, s.pcount(), s.size());
  out["flags"] = {{"left_nondegenerate", s.flags.left_nondegenerate},
                  {"nondegenerate", s.flags.nondegenerate},
                  {"invertible", s.flags.invertible},
                  {"reversible", s.flags.reversible}};
  return out.dump(1);
}

SolutionData solution_data_from_json_file(const std::string& path) {
  json j = load_json(path);
  if (!j.contains("sigma") || !j.contains("tau") || !j.contains("params"))
    throw validation_error("InputError",
                           "solution file needs params, sigma and tau");
  SolutionData d;
  long long m, n, m2, n2;
  d.sigma = flat4(j.at("sigma"), m, n, "sigma");
  d.tau = flat4(j.at("tau"), m2, n2, "tau");
  if (m != m2 || n != n2)
    throw validation_error("InputError", "sigma/tau shape mismatch");
  d.carrier = carrier_from_labels(j, (int)n);
  d.params = params_from_json_obj(j.at("params"), d.carrier);
  if (d.params.count() != (int)m)
    throw validation_error("InputError", "params/table parameter count mismatch");
  return d;
}

ParamSolution solution_from_json_file(const std::string& path) {
  SolutionData d = solution_data_from_json_file(path);
  return make_solution(d.carrier, d.params, d.sigma, d.tau);
}

std::string sigma_to_json(const SigmaFamily& s) {
  json out;
  out["labels"] = s.carrier.labels;
  out["params"] = params_to_json_obj(s.params);
  out["sigma"] = nest4(s.sigma, s.pcount(), s.size());
  return out.dump(1);
}

SigmaFamily sigma_from_json_file(const std::string& path) {
  json j = load_json(path);
  if (!j.contains("sigma") || !j.contains("params"))
    throw validation_error("InputError", "sigma file needs params and sigma");
  long long m, n;
  std::vector<elem> sigma = flat4(j.at("sigma"), m, n, "sigma");
  Carrier carrier = carrier_from_labels(j, (int)n);
  ParamSet params = params_from_json_obj(j.at("params"), carrier);
  if (params.count() != (int)m)
    throw validation_error("InputError", "params/table parameter count mismatch");
  return sigma_family(carrier, params, std::move(sigma));
}

std::string reflection_to_json(const ReflectionFamily& k) {
  json out;
  out["labels"] = k.carrier.labels;
  out["params"] = params_to_json_obj(k.params);
  out["kappa"] = nest2(k.kappa, k.pcount(), k.size());
  return out.dump(1);
}

std::string reflection_to_json_line(const ReflectionFamily& k) {
  json out;
  out["kappa"] = nest2(k.kappa, k.pcount(), k.size());
  return out.dump();
}

ReflectionData reflection_data_from_json_file(const std::string& path) {
  json j = load_json(path);
  if (!j.contains("kappa"))
    throw validation_error("InputError", "reflection file needs a kappa table");
  ReflectionData d;
  d.kappa = flat2(j.at("kappa"), "kappa");
  return d;
}

ReflectionFamily reflection_from_json_file(const std::string& path,
                                           const Carrier& carrier,
                                           const ParamSet& params) {
  ReflectionData d = reflection_data_from_json_file(path);
  return reflection_family(carrier, params, std::move(d.kappa));
}

std::string eta_to_json(const EtaFamily& e) {
  json out;
  out["labels"] = e.circ.carrier.labels;
  out["circ"] = nest2(e.circ.table, e.size(), e.size());
  out["params"] = params_to_json_obj(e.py.set);
  out["eta"] = nest4(e.eta, e.pcount(), e.size());
  return out.dump(1);
}

EtaFamily eta_from_json_file(const std::string& path) {
  json j = load_json(path);
  if (!j.contains("circ") || !j.contains("eta") || !j.contains("params"))
    throw validation_error("InputError", "eta file needs circ, params and eta");
  long long m, n;
  std::vector<elem> eta = flat4(j.at("eta"), m, n, "eta");
  Carrier carrier = carrier_from_labels(j, (int)n);
  GroupTable circ = group_from_json_obj(j.at("circ"), carrier);
  json jp = j.at("params");
  std::vector<elem> members = jp.at("members").get<std::vector<elem>>();
  ParamGroup py = param_group(circ, members);
  if (py.count() != (int)m)
    throw validation_error("InputError", "params/table parameter count mismatch");
  return eta_family(std::move(circ), std::move(py), std::move(eta));
}

std::string p_brace_to_json(const PBraceTable& t) {
  json out;
  out["labels"] = t.circ.carrier.labels;
  out["circ"] = nest2(t.circ.table, t.size(), t.size());
  out["params"] = params_to_json_obj(t.py.set);
  out["plus"] = nest4(t.plus, t.pcount(), t.size());
  return out.dump(1);
}

PBraceTable p_brace_from_json_file(const std::string& path) {
  json j = load_json(path);
  if (!j.contains("circ") || !j.contains("plus") || !j.contains("params"))
    throw validation_error("InputError",
                           "p-brace file needs circ, params and plus");
  long long m, n;
  std::vector<elem> plus = flat4(j.at("plus"), m, n, "plus");
  Carrier carrier = carrier_from_labels(j, (int)n);
  GroupTable circ = group_from_json_obj(j.at("circ"), carrier);
  std::vector<elem> members =
      j.at("params").at("members").get<std::vector<elem>>();
  ParamGroup py = param_group(circ, members);
  if (py.count() != (int)m)
    throw validation_error("InputError", "params/table parameter count mismatch");
  return make_p_brace_table(std::move(circ), std::move(py), std::move(plus));
}

namespace {

// A bundle component is either inline JSON or a string path relative to the
// bundle file, holding the bare array.
json resolve_component(const json& j, const std::string& key,
                       const std::string& bundle_path) {
  if (!j.contains(key))
    throw validation_error("InputError", "bundle misses component: " + key);
  const json& v = j.at(key);
  if (v.is_string()) {
    std::filesystem::path base =
        std::filesystem::path(bundle_path).parent_path();
    return load_json((base / v.get<std::string>()).string());
  }
  return v;
}

std::vector<elem> flat5(const json& j, long long m, long long n,
                        const char* what) {
  std::vector<elem> out;
  out.reserve(m * m * m * n * n);
  if ((long long)j.size() != m)
    throw validation_error("InputError", std::string(what) + ": bad shape");
  for (const auto& ji : j)
    for (const auto& jj : ji)
      for (const auto& jk : jj)
        for (const auto& jc : jk)
          for (const auto& v : jc) out.push_back(v.get<elem>());
  if ((long long)out.size() != m * m * m * n * n)
    throw validation_error("InputError", std::string(what) + ": bad shape");
  return out;
}

json nest5(const std::vector<elem>& t, long long m, long long n) {
  json out = json::array();
  long long idx = 0;
  for (long long i = 0; i < m; ++i) {
    json ji = json::array();
    for (long long j = 0; j < m; ++j) {
      json jj = json::array();
      for (long long k = 0; k < m; ++k) {
        json jc = json::array();
        for (long long c = 0; c < n; ++c) {
          json jx = json::array();
          for (long long x = 0; x < n; ++x) jx.push_back(t[idx++]);
          jc.push_back(jx);
        }
        jj.push_back(jc);
      }
      ji.push_back(jj);
    }
    out.push_back(ji);
  }
  return out;
}

}  // namespace

std::string bundle_to_json(const MagmaBundle& b) {
  json out;
  out["params"] = params_to_json_obj(b.params);
  out["bullet"] = nest4(b.bullet, b.pcount(), b.size());
  out["tau"] = nest4(b.tau, b.pcount(), b.size());
  out["g"] = nest5(b.g, b.pcount(), b.size());
  out["ghat"] = nest5(b.ghat, b.pcount(), b.size());
  out["kappa"] = nest2(b.reflection.kappa, b.pcount(), b.size());
  return out.dump(1);
}

MagmaBundle bundle_from_json_file(const std::string& path) {
  json j = load_json(path);
  MagmaBundle b;
  long long m, n, m2, n2;
  b.bullet = flat4(resolve_component(j, "bullet", path), m, n, "bullet");
  b.tau = flat4(resolve_component(j, "tau", path), m2, n2, "tau");
  if (m != m2 || n != n2)
    throw validation_error("InputError", "bullet/tau shape mismatch");
  b.carrier = carrier_from_labels(j, (int)n);
  b.params = params_from_json_obj(j.at("params"), b.carrier);
  if (b.params.count() != (int)m)
    throw validation_error("InputError", "params/table parameter count mismatch");
  b.g = flat5(resolve_component(j, "g", path), m, n, "g");
  b.ghat = flat5(resolve_component(j, "ghat", path), m, n, "ghat");
  b.reflection = reflection_family(
      b.carrier, b.params, flat2(resolve_component(j, "kappa", path), "kappa"));
  return b;
}

std::string report_to_json(const Report& r) {
  json out;
  out["subject"] = r.subject;
  out["pass"] = r.pass();
  json conds = json::array();
  for (const auto& c : r.conditions) {
    json jc;
    jc["law"] = c.law;
    jc["pass"] = c.pass;
    if (!c.witness.empty()) jc["witness"] = c.witness;
    if (!c.note.empty()) jc["note"] = c.note;
    conds.push_back(jc);
  }
  out["conditions"] = conds;
  return out.dump(1);
}

std::string dressed_to_json(const DressedReflection& d) {
  json out;
  out["sites"] = d.sites;
  out["spectators"] = d.spectators;
  out["spectator_params"] = d.spectator_params;
  out["site1"] = d.site1;  // flat m*n, site-1 component per parameter
  return out.dump(1);
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out)
    throw validation_error("InputError", "cannot write file: " + path);
  out << text << "\n";
}

}  // namespace prack
