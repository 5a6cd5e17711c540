// Copyright 2026 The lnn-route Authors
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

// Reader and writer for the RevLib `.real` circuit format.
//
// Supported gate lines: `t<k> l1 ... lk` (k-1 positive controls, last line is
// the target) and `f2 a b` (SWAP). Negative controls, Fredkin gates on more
// than two lines and every other mnemonic are rejected.

#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lnn/circuit.hpp"
#include "lnn/errors.hpp"

namespace lnn {

class ParseError : public Error {
 public:
  ParseError(std::size_t line_number, std::string message, std::string offending_token = {})
      : Error(format(line_number, message, offending_token)),
        line_number_(line_number),
        message_(std::move(message)),
        token_(std::move(offending_token)) {}

  std::size_t line_number() const { return line_number_; }
  const std::string& message() const { return message_; }
  const std::string& offending_token() const { return token_; }

 private:
  static std::string format(std::size_t line, const std::string& msg, const std::string& tok) {
    std::string out = "line " + std::to_string(line) + ": " + msg;
    if (!tok.empty()) out += " ('" + tok + "')";
    return out;
  }

  std::size_t line_number_;
  std::string message_;
  std::string token_;
};

struct RealHeader {
  std::string version;
  std::size_t numvars = 0;
  std::vector<std::string> variables;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  std::string constants;  // one of '0', '1', '-' per line
  std::string garbage;    // one of '1', '-' per line
  /// Values found in `# ... gates: N, quantum costs: M` comments, if any.
  std::optional<std::size_t> annotated_gates;
  std::optional<Cost> annotated_cost;
};

struct RealDocument {
  RealHeader header;
  Circuit circuit;
};

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::optional<std::size_t> parse_count(std::string_view s) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
  return v;
}

inline void scan_annotation(std::string_view comment, RealHeader& header) {
  static const std::regex cost_re(R"(quantum\s+costs?\s*:\s*(\d+))", std::regex::icase);
  static const std::regex gates_re(R"(gates\s*:\s*(\d+))", std::regex::icase);
  const std::string text(comment);
  std::smatch m;
  if (!header.annotated_cost && std::regex_search(text, m, cost_re)) {
    header.annotated_cost = std::stoll(m[1].str());
  }
  if (!header.annotated_gates && std::regex_search(text, m, gates_re)) {
    header.annotated_gates = std::stoull(m[1].str());
  }
}

}  // namespace detail

inline RealDocument parse_real_document(std::string_view text) {
  enum class Stage { Header, Body, Done };
  Stage stage = Stage::Header;
  RealHeader header;
  bool have_numvars = false;
  std::unordered_map<std::string, Line> index;
  std::vector<Gate> gates;
  std::size_t line_no = 0;

  auto need_numvars = [&](std::string_view directive) {
    if (!have_numvars) {
      throw ParseError(line_no, "missing .numvars before " + std::string(directive),
                       std::string(directive));
    }
  };
  auto check_count = [&](std::string_view directive, std::size_t got) {
    if (got != header.numvars) {
      throw ParseError(line_no,
                       std::string(directive) + " lists " + std::to_string(got) +
                           " entries, expected " + std::to_string(header.numvars),
                       std::string(directive));
    }
  };
  auto per_line_chars = [&](std::string_view directive,
                            const std::vector<std::string_view>& toks,
                            std::string_view allowed) {
    need_numvars(directive);
    std::string s;
    for (std::size_t i = 1; i < toks.size(); ++i) s += toks[i];
    check_count(directive, s.size());
    for (char ch : s) {
      if (allowed.find(ch) == std::string_view::npos) {
        throw ParseError(line_no, "invalid character in " + std::string(directive),
                         std::string(1, ch));
      }
    }
    return s;
  };

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view raw = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    if (auto hash = raw.find('#'); hash != std::string_view::npos) {
      detail::scan_annotation(raw.substr(hash), header);
      raw = raw.substr(0, hash);
    }
    const auto toks = detail::split_ws(raw);
    if (toks.empty()) {
      if (eol == text.size()) break;
      continue;
    }
    const std::string_view head = toks[0];

    if (stage == Stage::Done) {
      throw ParseError(line_no, "content after .end", std::string(head));
    }

    if (head.front() == '.') {
      if (head == ".version") {
        header.version = toks.size() > 1 ? std::string(toks[1]) : std::string();
      } else if (head == ".numvars") {
        auto n = toks.size() == 2 ? detail::parse_count(toks[1]) : std::nullopt;
        if (!n || *n == 0) {
          throw ParseError(line_no, ".numvars needs a positive integer",
                           toks.size() > 1 ? std::string(toks[1]) : std::string(head));
        }
        header.numvars = *n;
        have_numvars = true;
      } else if (head == ".variables") {
        need_numvars(head);
        check_count(head, toks.size() - 1);
        header.variables.clear();
        index.clear();
        for (std::size_t i = 1; i < toks.size(); ++i) {
          std::string name(toks[i]);
          if (!index.emplace(name, static_cast<Line>(i - 1)).second) {
            throw ParseError(line_no, "duplicate variable", name);
          }
          header.variables.push_back(std::move(name));
        }
      } else if (head == ".inputs" || head == ".outputs") {
        need_numvars(head);
        check_count(head, toks.size() - 1);
        auto& dst = head == ".inputs" ? header.inputs : header.outputs;
        dst.assign(toks.begin() + 1, toks.end());
      } else if (head == ".constants") {
        header.constants = per_line_chars(head, toks, "01-");
      } else if (head == ".garbage") {
        header.garbage = per_line_chars(head, toks, "1-");
      } else if (head == ".begin") {
        need_numvars(head);
        if (header.variables.empty()) throw ParseError(line_no, "missing .variables", ".begin");
        if (stage != Stage::Header) throw ParseError(line_no, "repeated .begin", ".begin");
        stage = Stage::Body;
      } else if (head == ".end") {
        if (stage != Stage::Body) throw ParseError(line_no, ".end without .begin", ".end");
        stage = Stage::Done;
      } else {
        throw ParseError(line_no, "unknown directive", std::string(head));
      }
      continue;
    }

    // Gate line.
    if (stage != Stage::Body) throw ParseError(line_no, "gate before .begin", std::string(head));
    const char family = head.front();
    auto arity = detail::parse_count(head.substr(1));
    if ((family != 't' && family != 'f') || !arity || *arity == 0) {
      throw ParseError(line_no, "unknown gate mnemonic", std::string(head));
    }
    if (family == 'f' && *arity != 2) {
      throw ParseError(line_no, "Fredkin gates on more than two lines are not supported",
                       std::string(head));
    }
    if (toks.size() - 1 != *arity) {
      throw ParseError(line_no,
                       "gate " + std::string(head) + " expects " + std::to_string(*arity) +
                           " lines, got " + std::to_string(toks.size() - 1),
                       std::string(head));
    }
    std::vector<Line> operands;
    for (std::size_t i = 1; i < toks.size(); ++i) {
      const std::string name(toks[i]);
      if (name.front() == '-') throw ParseError(line_no, "negative controls are not supported", name);
      auto it = index.find(name);
      if (it == index.end()) throw ParseError(line_no, "undeclared variable", name);
      if (std::find(operands.begin(), operands.end(), it->second) != operands.end()) {
        throw ParseError(line_no, "line used twice in one gate", name);
      }
      operands.push_back(it->second);
    }
    if (family == 'f') {
      gates.push_back(Gate::swap(operands[0], operands[1]));
    } else {
      const Line target = operands.back();
      operands.pop_back();
      gates.push_back(Gate::controlled_not(std::move(operands), target));
    }
  }

  if (!have_numvars) throw ParseError(std::max<std::size_t>(line_no, 1), "missing .numvars");
  if (stage == Stage::Header) throw ParseError(std::max<std::size_t>(line_no, 1), "missing .begin");
  if (stage == Stage::Body) throw ParseError(std::max<std::size_t>(line_no, 1), "missing .end");

  if (header.constants.empty()) header.constants.assign(header.numvars, '-');
  if (header.garbage.empty()) header.garbage.assign(header.numvars, '-');

  std::vector<LineInfo> lines(header.numvars);
  for (std::size_t i = 0; i < header.numvars; ++i) {
    lines[i].name = header.variables[i];
    if (header.constants[i] != '-') lines[i].constant_input = header.constants[i] == '1';
    lines[i].garbage_output = header.garbage[i] == '1';
  }
  return RealDocument{std::move(header), Circuit(std::move(lines), std::move(gates))};
}

inline Circuit parse_real(std::string_view text) { return parse_real_document(text).circuit; }

inline std::string write_real(const Circuit& c) {
  for (const auto& l : c.lines()) {
    const bool bad = l.name.front() == '-' || l.name.front() == '.' ||
                     std::any_of(l.name.begin(), l.name.end(), [](unsigned char ch) {
                       return std::isspace(ch) || ch == '#';
                     });
    if (bad) throw Error("line name '" + l.name + "' cannot be written to a .real file");
  }
  std::ostringstream os;
  auto names = [&](std::ostream& out) {
    for (const auto& l : c.lines()) out << ' ' << l.name;
    out << '\n';
  };
  os << ".version 1.0\n.numvars " << c.num_lines() << "\n.variables";
  names(os);
  os << ".inputs";
  names(os);
  os << ".outputs";
  names(os);
  os << ".constants ";
  for (const auto& l : c.lines()) os << (l.constant_input ? (*l.constant_input ? '1' : '0') : '-');
  os << "\n.garbage ";
  for (const auto& l : c.lines()) os << (l.garbage_output ? '1' : '-');
  os << "\n.begin\n";
  for (const auto& g : c.gates()) {
    if (g.kind() == GateKind::Swap) {
      os << "f2 " << c.lines()[g.controls()[0]].name << ' ' << c.lines()[g.target()].name;
    } else {
      os << 't' << g.num_controls() + 1;
      for (Line l : g.controls()) os << ' ' << c.lines()[l].name;
      os << ' ' << c.lines()[g.target()].name;
    }
    os << '\n';
  }
  os << ".end\n";
  return os.str();
}

inline RealDocument read_real_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_real_document(buf.str());
}

}  // namespace lnn
