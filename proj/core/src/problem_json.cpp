// Copyright 2026 The AGPPA Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "agppa/problem_json.hpp"

#include <fstream>

#include "agppa/errors.hpp"

namespace agppa {
namespace {

using nlohmann::json;

json matrix_to_json(const SparseMatrix& a) {
  json triplets = json::array();
  for (const Triplet& t : a.Triplets()) triplets.push_back({t.row, t.col, t.value});
  return {{"rows", a.rows()}, {"triplets", std::move(triplets)}};
}

SparseMatrix matrix_from_json(const json& j, int cols, const char* what) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("triplets")) {
    throw InputError(std::string(what) + ": expected {\"rows\", \"triplets\"}");
  }
  const int rows = j.at("rows").get<int>();
  std::vector<Triplet> t;
  for (const json& e : j.at("triplets")) {
    if (!e.is_array() || e.size() != 3) {
      throw InputError(std::string(what) + ": triplets must be [row, col, value]");
    }
    t.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<double>()});
  }
  try {
    return SparseMatrix(rows, cols, t);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

json problem_to_json(const LpProblem& p) {
  return {{"format", "agppa-lp"},       {"version", kProblemJsonVersion},
          {"n", p.n()},                 {"n_b", p.n_b()},
          {"c", p.c()},                 {"A_I", matrix_to_json(p.a_ineq())},
          {"b_I", p.b_ineq()},          {"A_E", matrix_to_json(p.a_eq())},
          {"b_E", p.b_eq()}};
}

LpProblem problem_from_json(const json& j) {
  try {
    if (j.value("format", "") != "agppa-lp") throw InputError("not an agppa-lp document");
    if (j.value("version", 0) != kProblemJsonVersion) {
      throw InputError("unsupported agppa-lp version");
    }
    const int n = j.at("n").get<int>();
    auto c = j.at("c").get<std::vector<double>>();
    if (static_cast<int>(c.size()) != n) throw InputError("length of c differs from n");
    const json empty = {{"rows", 0}, {"triplets", json::array()}};
    SparseMatrix a_ineq = matrix_from_json(j.value("A_I", empty), n, "A_I");
    SparseMatrix a_eq = matrix_from_json(j.value("A_E", empty), n, "A_E");
    auto b_ineq = j.value("b_I", std::vector<double>{});
    auto b_eq = j.value("b_E", std::vector<double>{});
    return LpProblem(std::move(c), std::move(a_ineq), std::move(b_ineq), std::move(a_eq),
                     std::move(b_eq), j.at("n_b").get<int>());
  } catch (const json::exception& e) {
    throw InputError(std::string("problem JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("problem JSON: ") + e.what());
  }
}

json point_to_json(const PrimalDualPoint& z) { return {{"x", z.x}, {"lambda", z.lambda}}; }

PrimalDualPoint point_from_json(const json& j) {
  try {
    return {j.at("x").get<std::vector<double>>(), j.at("lambda").get<std::vector<double>>()};
  } catch (const json::exception& e) {
    throw InputError(std::string("point JSON: ") + e.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("'" + path + "': " + e.what());
  }
}

}  // namespace agppa
