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

#include "agppa/mps.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

namespace agppa {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Bound magnitudes at or above this are read as infinite.
constexpr double kInfiniteBound = 1e30;

enum class Section { kNone, kName, kRows, kColumns, kRhs, kRanges, kBounds, kObjSense, kEnd };

struct Fields {
  std::string type;
  std::string name1;
  std::string name2;
  std::string value1;
  std::string name3;
  std::string value2;
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string fixed_field(std::string_view line, std::size_t begin, std::size_t end) {
  if (begin >= line.size()) return {};
  return std::string(trim(line.substr(begin, std::min(end, line.size()) - begin)));
}

Fields fixed_fields(std::string_view line) {
  return {fixed_field(line, 1, 3),   fixed_field(line, 4, 12),  fixed_field(line, 14, 22),
          fixed_field(line, 24, 36), fixed_field(line, 39, 47), fixed_field(line, 49, 61)};
}

class Parser {
 public:
  explicit Parser(MpsFormat format) : format_(format) {}

  MpsModel run(std::string_view text);

 private:
  [[noreturn]] void fail(MpsErrorKind kind, const std::string& detail) const {
    throw MpsParseError(kind, line_no_, detail);
  }

  double number(const std::string& s) const;
  int row_index(const std::string& name) const;
  int column_index(const std::string& name) const;

  void header(std::string_view line);
  void data(std::string_view line);
  void rows_line(const Fields& f);
  void columns_line(const Fields& f);
  void rhs_line(const Fields& f);
  void bounds_line(const Fields& f);
  void add_coefficient(int col, const std::string& row, const std::string& value);
  void add_rhs(const std::string& row, const std::string& value);

  Fields free_fields(const std::vector<std::string>& t) const;
  MpsModel build() const;

  MpsFormat format_;
  int line_no_ = 0;
  Section section_ = Section::kNone;

  std::string name_;
  std::string objective_row_;
  std::set<std::string> ignored_rows_;
  std::vector<std::string> row_names_;
  std::vector<char> row_sense_;
  std::unordered_map<std::string, int> row_lookup_;

  std::vector<std::string> col_names_;
  std::unordered_map<std::string, int> col_lookup_;
  std::vector<double> cost_;
  std::map<std::pair<int, int>, double> entries_;  // (row, col) -> value
  std::set<int> cost_set_;

  std::vector<double> rhs_;
  std::set<int> rhs_set_;
  bool objective_rhs_set_ = false;
  double objective_offset_ = 0.0;

  std::vector<double> lower_;
  std::vector<double> upper_;
  std::vector<bool> lower_given_;
  std::set<std::pair<std::string, int>> bound_set_;
};

double Parser::number(const std::string& s) const {
  if (s.empty()) fail(MpsErrorKind::kMalformedLine, "missing numeric field");
  double v = 0.0;
  const char* begin = s.data();
  const char* end = s.data() + s.size();
  if (*begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc() || ptr != end || std::isnan(v)) {
    fail(MpsErrorKind::kBadNumber, "cannot read number '" + s + "'");
  }
  return v;
}

int Parser::row_index(const std::string& name) const {
  const auto it = row_lookup_.find(name);
  if (it == row_lookup_.end()) fail(MpsErrorKind::kUnknownRow, "unknown row '" + name + "'");
  return it->second;
}

int Parser::column_index(const std::string& name) const {
  const auto it = col_lookup_.find(name);
  if (it == col_lookup_.end()) {
    fail(MpsErrorKind::kUnknownColumn, "unknown column '" + name + "'");
  }
  return it->second;
}

Fields Parser::free_fields(const std::vector<std::string>& t) const {
  Fields f;
  switch (section_) {
    case Section::kRows:
      if (t.size() != 2) fail(MpsErrorKind::kMalformedLine, "ROWS line needs 2 fields");
      f.type = t[0];
      f.name1 = t[1];
      break;
    case Section::kColumns:
      if (t.size() != 3 && t.size() != 5) {
        fail(MpsErrorKind::kMalformedLine, "COLUMNS line needs 3 or 5 fields");
      }
      f.name1 = t[0];
      f.name2 = t[1];
      f.value1 = t[2];
      if (t.size() == 5) {
        f.name3 = t[3];
        f.value2 = t[4];
      }
      break;
    case Section::kRhs:
    case Section::kRanges: {
      // The set name is optional in free format.
      std::size_t k = t.size() % 2 == 1 ? 1 : 0;
      if (t.size() < 2 || t.size() > 5) {
        fail(MpsErrorKind::kMalformedLine, "RHS line needs 2 to 5 fields");
      }
      if (k == 1) f.name1 = t[0];
      f.name2 = t[k];
      f.value1 = t[k + 1];
      if (t.size() - k == 4) {
        f.name3 = t[k + 2];
        f.value2 = t[k + 3];
      }
      break;
    }
    case Section::kBounds: {
      if (t.empty()) fail(MpsErrorKind::kMalformedLine, "empty BOUNDS line");
      f.type = t[0];
      const bool valued = f.type != "FR" && f.type != "MI" && f.type != "PL" && f.type != "BV";
      const std::size_t with_set = valued ? 4 : 3;
      if (t.size() == with_set) {
        f.name1 = t[1];
        f.name2 = t[2];
        if (valued) f.value1 = t[3];
      } else if (t.size() == with_set - 1) {
        f.name2 = t[1];
        if (valued) f.value1 = t[2];
      } else {
        fail(MpsErrorKind::kMalformedLine, "BOUNDS line has " + std::to_string(t.size()) +
                                               " fields");
      }
      break;
    }
    default:
      break;
  }
  return f;
}

void Parser::header(std::string_view line) {
  const std::vector<std::string> t = tokenize(line);
  const std::string& key = t[0];
  if (key == "NAME") {
    section_ = Section::kName;
    name_ = t.size() > 1 ? std::string(trim(line.substr(4))) : std::string();
  } else if (key == "ROWS") {
    section_ = Section::kRows;
  } else if (key == "COLUMNS") {
    section_ = Section::kColumns;
  } else if (key == "RHS") {
    section_ = Section::kRhs;
  } else if (key == "RANGES") {
    fail(MpsErrorKind::kUnsupported, "RANGES section is not supported");
  } else if (key == "BOUNDS") {
    section_ = Section::kBounds;
  } else if (key == "OBJSENSE") {
    section_ = Section::kObjSense;
    if (t.size() > 1 && t[1] != "MIN" && t[1] != "MINIMIZE") {
      fail(MpsErrorKind::kUnsupported, "only minimization is supported");
    }
  } else if (key == "ENDATA") {
    section_ = Section::kEnd;
  } else {
    fail(MpsErrorKind::kMalformedSection, "unknown section '" + key + "'");
  }
}

void Parser::rows_line(const Fields& f) {
  if (f.type.size() != 1 || std::string("NLGE").find(f.type[0]) == std::string::npos) {
    fail(MpsErrorKind::kMalformedLine, "unknown row type '" + f.type + "'");
  }
  if (f.name1.empty()) fail(MpsErrorKind::kMalformedLine, "missing row name");
  if (row_lookup_.count(f.name1) || f.name1 == objective_row_ || ignored_rows_.count(f.name1)) {
    fail(MpsErrorKind::kDuplicateName, "duplicate row '" + f.name1 + "'");
  }
  if (f.type == "N") {
    if (objective_row_.empty()) {
      objective_row_ = f.name1;
    } else {
      ignored_rows_.insert(f.name1);
    }
    return;
  }
  row_lookup_[f.name1] = static_cast<int>(row_names_.size());
  row_names_.push_back(f.name1);
  row_sense_.push_back(f.type[0]);
}

void Parser::add_coefficient(int col, const std::string& row, const std::string& value) {
  const double v = number(value);
  if (row == objective_row_) {
    if (!cost_set_.insert(col).second) {
      fail(MpsErrorKind::kDuplicateEntry, "duplicate objective entry for '" + col_names_[col] + "'");
    }
    cost_[col] = v;
    return;
  }
  if (ignored_rows_.count(row)) return;
  const int r = row_index(row);
  if (!entries_.emplace(std::make_pair(r, col), v).second) {
    fail(MpsErrorKind::kDuplicateEntry,
         "duplicate entry (" + row + ", " + col_names_[col] + ")");
  }
}

void Parser::columns_line(const Fields& f) {
  if (f.name2 == "'MARKER'" || f.value1 == "'MARKER'" || f.name3 == "'MARKER'") {
    fail(MpsErrorKind::kUnsupported, "integer markers are not supported");
  }
  if (f.name1.empty() || f.name2.empty()) fail(MpsErrorKind::kMalformedLine, "missing name");
  auto it = col_lookup_.find(f.name1);
  int col = 0;
  if (it == col_lookup_.end()) {
    col = static_cast<int>(col_names_.size());
    col_lookup_[f.name1] = col;
    col_names_.push_back(f.name1);
    cost_.push_back(0.0);
  } else {
    col = it->second;
  }
  add_coefficient(col, f.name2, f.value1);
  if (!f.name3.empty()) add_coefficient(col, f.name3, f.value2);
}

void Parser::add_rhs(const std::string& row, const std::string& value) {
  const double v = number(value);
  if (row == objective_row_) {
    if (objective_rhs_set_) fail(MpsErrorKind::kDuplicateEntry, "duplicate objective RHS");
    objective_rhs_set_ = true;
    objective_offset_ = -v;
    return;
  }
  if (ignored_rows_.count(row)) return;
  const int r = row_index(row);
  if (!rhs_set_.insert(r).second) {
    fail(MpsErrorKind::kDuplicateEntry, "duplicate RHS for row '" + row + "'");
  }
  rhs_[r] = v;
}

void Parser::rhs_line(const Fields& f) {
  if (rhs_.size() != row_names_.size()) rhs_.assign(row_names_.size(), 0.0);
  if (f.name2.empty()) fail(MpsErrorKind::kMalformedLine, "missing row name");
  add_rhs(f.name2, f.value1);
  if (!f.name3.empty()) add_rhs(f.name3, f.value2);
}

void Parser::bounds_line(const Fields& f) {
  const int col = column_index(f.name2);
  if (!bound_set_.insert({f.type, col}).second) {
    fail(MpsErrorKind::kDuplicateEntry, f.type + " bound repeated for '" + f.name2 + "'");
  }
  auto finite = [](double v) {
    if (v >= kInfiniteBound) return kInf;
    if (v <= -kInfiniteBound) return -kInf;
    return v;
  };
  const std::string& type = f.type;
  if (type == "UP") {
    upper_[col] = finite(number(f.value1));
    if (upper_[col] < 0.0 && !lower_given_[col]) lower_[col] = -kInf;
  } else if (type == "LO") {
    lower_[col] = finite(number(f.value1));
    lower_given_[col] = true;
  } else if (type == "FX") {
    lower_[col] = upper_[col] = number(f.value1);
    lower_given_[col] = true;
  } else if (type == "FR") {
    lower_[col] = -kInf;
    upper_[col] = kInf;
    lower_given_[col] = true;
  } else if (type == "MI") {
    lower_[col] = -kInf;
    lower_given_[col] = true;
  } else if (type == "PL") {
    upper_[col] = kInf;
  } else if (type == "BV" || type == "LI" || type == "UI" || type == "SC") {
    fail(MpsErrorKind::kUnsupported, "integer bound type " + type + " is not supported");
  } else {
    fail(MpsErrorKind::kMalformedLine, "unknown bound type '" + type + "'");
  }
}

void Parser::data(std::string_view line) {
  Fields f;
  if (format_ == MpsFormat::kFixed) {
    f = fixed_fields(line);
  } else {
    f = free_fields(tokenize(line));
  }
  switch (section_) {
    case Section::kRows:
      rows_line(f);
      break;
    case Section::kColumns:
      columns_line(f);
      break;
    case Section::kRhs:
      rhs_line(f);
      break;
    case Section::kBounds:
      if (lower_.size() != col_names_.size()) {
        lower_.assign(col_names_.size(), 0.0);
        upper_.assign(col_names_.size(), kInf);
        lower_given_.assign(col_names_.size(), false);
      }
      bounds_line(f);
      break;
    case Section::kObjSense: {
      const std::string sense(trim(line));
      if (sense != "MIN" && sense != "MINIMIZE") {
        fail(MpsErrorKind::kUnsupported, "only minimization is supported");
      }
      break;
    }
    case Section::kName:
    case Section::kRanges:
    case Section::kNone:
    case Section::kEnd:
      fail(MpsErrorKind::kMalformedSection, "data line outside a data section");
  }
}

MpsModel Parser::run(std::string_view text) {
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no_;
    if (trim(line).empty() || line[0] == '*') continue;
    if (section_ == Section::kEnd) {
      fail(MpsErrorKind::kMalformedSection, "content after ENDATA");
    }
    if (line[0] != ' ' && line[0] != '\t') {
      header(line);
    } else {
      data(line);
    }
  }
  line_no_ = 0;
  if (col_names_.empty()) fail(MpsErrorKind::kNoColumns, "no columns");
  if (objective_row_.empty()) fail(MpsErrorKind::kNoObjective, "no objective row");
  return build();
}

MpsModel Parser::build() const {
  const int n_orig = static_cast<int>(col_names_.size());
  std::vector<double> lower = lower_;
  std::vector<double> upper = upper_;
  if (lower.empty()) {
    lower.assign(n_orig, 0.0);
    upper.assign(n_orig, kInf);
  }
  std::vector<double> rhs = rhs_;
  if (rhs.empty()) rhs.assign(row_names_.size(), 0.0);

  MpsModel model;
  model.name = name_;
  VariableMap& vm = model.variables;
  vm.names = col_names_;
  vm.index.assign(n_orig, -1);
  vm.sign.assign(n_orig, 1.0);
  vm.shift.assign(n_orig, 0.0);

  std::vector<bool> constrained(n_orig, true);
  for (int j = 0; j < n_orig; ++j) {
    if (std::isfinite(lower[j])) {
      vm.shift[j] = lower[j];
    } else if (std::isfinite(upper[j])) {
      vm.shift[j] = upper[j];
      vm.sign[j] = -1.0;
    } else {
      constrained[j] = false;
    }
  }
  int next = 0;
  for (int j = 0; j < n_orig; ++j) {
    if (constrained[j]) vm.index[j] = next++;
  }
  const int n_b = next;
  for (int j = 0; j < n_orig; ++j) {
    if (!constrained[j]) vm.index[j] = next++;
  }

  std::vector<double> c(n_orig, 0.0);
  double offset = objective_offset_;
  for (int j = 0; j < n_orig; ++j) {
    c[vm.index[j]] = vm.sign[j] * cost_[j];
    if (vm.shift[j] != 0.0) offset += cost_[j] * vm.shift[j];
  }

  // Row numbering inside A_I and A_E.
  const int n_rows = static_cast<int>(row_names_.size());
  std::vector<int> target(n_rows);
  int m_ineq = 0;
  int m_eq = 0;
  for (int r = 0; r < n_rows; ++r) target[r] = row_sense_[r] == 'E' ? m_eq++ : m_ineq++;

  std::vector<Triplet> ineq;
  std::vector<Triplet> eq;
  for (const auto& [key, value] : entries_) {
    const auto [r, j] = key;
    if (vm.shift[j] != 0.0) rhs[r] -= value * vm.shift[j];
    const double v = vm.sign[j] * value;
    switch (row_sense_[r]) {
      case 'E':
        eq.push_back({target[r], vm.index[j], v});
        break;
      case 'G':
        ineq.push_back({target[r], vm.index[j], -v});
        break;
      default:
        ineq.push_back({target[r], vm.index[j], v});
    }
  }
  std::vector<double> b_ineq(m_ineq);
  std::vector<double> b_eq(m_eq);
  for (int r = 0; r < n_rows; ++r) {
    switch (row_sense_[r]) {
      case 'E':
        b_eq[target[r]] = rhs[r];
        break;
      case 'G':
        b_ineq[target[r]] = -rhs[r];
        break;
      default:
        b_ineq[target[r]] = rhs[r];
    }
  }
  for (int j = 0; j < n_orig; ++j) {
    if (constrained[j] && std::isfinite(lower[j]) && std::isfinite(upper[j])) {
      ineq.push_back({m_ineq, vm.index[j], 1.0});
      b_ineq.push_back(upper[j] - lower[j]);
      ++m_ineq;
    }
  }

  model.problem = LpProblem(std::move(c), SparseMatrix(m_ineq, n_orig, ineq), std::move(b_ineq),
                            SparseMatrix(m_eq, n_orig, eq), std::move(b_eq), n_b);
  model.objective_offset = offset;
  return model;
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string_view to_string(MpsErrorKind kind) {
  switch (kind) {
    case MpsErrorKind::kMalformedSection:
      return "malformed section";
    case MpsErrorKind::kMalformedLine:
      return "malformed line";
    case MpsErrorKind::kBadNumber:
      return "bad number";
    case MpsErrorKind::kUnknownRow:
      return "unknown row";
    case MpsErrorKind::kUnknownColumn:
      return "unknown column";
    case MpsErrorKind::kDuplicateEntry:
      return "duplicate entry";
    case MpsErrorKind::kDuplicateName:
      return "duplicate name";
    case MpsErrorKind::kNoObjective:
      return "no objective";
    case MpsErrorKind::kNoColumns:
      return "no columns";
    case MpsErrorKind::kUnsupported:
      return "unsupported";
  }
  return "?";
}

MpsParseError::MpsParseError(MpsErrorKind kind, int line, const std::string& detail)
    : InputError(line > 0 ? "MPS line " + std::to_string(line) + ": " + detail
                          : "MPS: " + detail),
      kind_(kind),
      line_(line) {}

std::vector<double> VariableMap::to_original(const std::vector<double>& x) const {
  std::vector<double> out(index.size());
  for (std::size_t j = 0; j < index.size(); ++j) out[j] = shift[j] + sign[j] * x[index[j]];
  return out;
}

MpsModel mps_parse(std::string_view text, MpsFormat format) { return Parser(format).run(text); }

MpsModel mps_read_file(const std::string& path, MpsFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return mps_parse(ss.str(), format);
}

std::string mps_write(const LpProblem& p, std::string_view name) {
  std::ostringstream out;
  out << "NAME " << name << "\n";
  out << "ROWS\n N obj\n";
  for (int i = 0; i < p.m_ineq(); ++i) out << " L i" << i << "\n";
  for (int i = 0; i < p.m_eq(); ++i) out << " E e" << i << "\n";
  auto row_name = [&](int r) {
    return r < p.m_ineq() ? "i" + std::to_string(r) : "e" + std::to_string(r - p.m_ineq());
  };
  out << "COLUMNS\n";
  for (int j = 0; j < p.n(); ++j) {
    const auto col = p.a().column(j);
    const std::string var = "x" + std::to_string(j);
    if (p.c()[j] != 0.0 || col.indices.empty()) {
      out << " " << var << " obj " << format_double(p.c()[j]) << "\n";
    }
    for (std::size_t k = 0; k < col.indices.size(); ++k) {
      out << " " << var << " " << row_name(col.indices[k]) << " " << format_double(col.values[k])
          << "\n";
    }
  }
  out << "RHS\n";
  for (int r = 0; r < p.m(); ++r) {
    if (p.b()[r] != 0.0) out << " rhs " << row_name(r) << " " << format_double(p.b()[r]) << "\n";
  }
  out << "BOUNDS\n";
  for (int j = p.n_b(); j < p.n(); ++j) out << " FR bnd x" << j << "\n";
  out << "ENDATA\n";
  return out.str();
}

}  // namespace agppa
