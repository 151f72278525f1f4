// Copyright 2026 The tnload Authors
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

#include <cctype>
#include <cstdlib>
#include <numbers>
#include <optional>
#include <string>

#include "tnload/errors.hpp"
#include "tnload/simulate.hpp"

namespace tnload {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

class ExprParser {
 public:
  ExprParser(std::string_view text, std::size_t line) : s_(text), line_(line) {}

  double parse() {
    const double v = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected characters in angle");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, line_);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
      ++pos_;
    }
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  double sum() {
    double v = product();
    for (;;) {
      if (eat('+')) {
        v += product();
      } else if (eat('-')) {
        v -= product();
      } else {
        return v;
      }
    }
  }

  double product() {
    double v = unary();
    for (;;) {
      if (eat('*')) {
        v *= unary();
      } else if (eat('/')) {
        v /= unary();
      } else {
        return v;
      }
    }
  }

  double unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return atom();
  }

  double atom() {
    skip();
    if (eat('(')) {
      const double v = sum();
      if (!eat(')')) fail("missing ')' in angle");
      return v;
    }
    if (s_.substr(pos_, 2) == "pi") {
      pos_ += 2;
      return std::numbers::pi;
    }
    const std::string rest(s_.substr(pos_));
    char* end = nullptr;
    const double v = std::strtod(rest.c_str(), &end);
    if (end == rest.c_str()) fail("expected a number in angle");
    pos_ += static_cast<std::size_t>(end - rest.c_str());
    return v;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t line_;
};

struct Operand {
  std::string reg;
  std::size_t index;
};

Operand parse_operand(std::string_view text, std::size_t line) {
  text = trim(text);
  const auto open = text.find('[');
  const auto close = text.find(']');
  if (open == std::string_view::npos || close != text.size() - 1 || open == 0) {
    throw ParseError("expected an operand like q[0]", line);
  }
  const std::string digits(text.substr(open + 1, close - open - 1));
  if (digits.empty() ||
      digits.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError("invalid qubit index", line);
  }
  return {std::string(trim(text.substr(0, open))), std::stoul(digits)};
}

bool starts_with_word(std::string_view s, std::string_view word) {
  if (s.substr(0, word.size()) != word) return false;
  return s.size() == word.size() ||
         !std::isalnum(static_cast<unsigned char>(s[word.size()]));
}

}  // namespace

NativeProgram parse_qasm(std::string_view text) {
  NativeProgram program;
  std::optional<std::string> reg;
  std::size_t line_no = 0;
  std::size_t start = 0;
  bool saw_header = false;

  auto qubit = [&](std::string_view operand, std::size_t line) {
    const Operand op = parse_operand(operand, line);
    if (!reg) throw ParseError("gate before qreg declaration", line);
    if (op.reg != *reg) throw ParseError("unknown register " + op.reg, line);
    if (op.index >= program.num_qubits) {
      throw ParseError("qubit index out of range", line);
    }
    return op.index;
  };

  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;

    const auto comment = line.find("//");
    if (comment != std::string_view::npos) {
      const std::string_view note = trim(line.substr(comment + 2));
      try {
        if (note.substr(0, 5) == "norm=") {
          program.stored_norm = std::stod(std::string(note.substr(5)));
        } else if (note.substr(0, 16) == "original_length=") {
          program.original_length = std::stoul(std::string(note.substr(16)));
        }
      } catch (const std::logic_error&) {
        throw ParseError("malformed metadata comment", line_no);
      }
      line = line.substr(0, comment);
    }

    std::size_t pos = 0;
    while (pos < line.size()) {
      auto semi = line.find(';', pos);
      if (semi == std::string_view::npos) {
        if (!trim(line.substr(pos)).empty()) {
          throw ParseError("statement without ';'", line_no);
        }
        break;
      }
      const std::string_view stmt = trim(line.substr(pos, semi - pos));
      pos = semi + 1;
      if (stmt.empty()) continue;

      if (starts_with_word(stmt, "OPENQASM")) {
        if (trim(stmt.substr(8)) != "2.0") {
          throw ParseError("only OPENQASM 2.0 is supported", line_no);
        }
        saw_header = true;
      } else if (starts_with_word(stmt, "include")) {
        continue;
      } else if (starts_with_word(stmt, "qreg")) {
        if (reg) throw ParseError("only one qreg is supported", line_no);
        const Operand op = parse_operand(stmt.substr(4), line_no);
        if (op.index == 0 || op.index >= 8 * sizeof(std::size_t)) {
          throw ParseError("invalid register size", line_no);
        }
        reg = op.reg;
        program.num_qubits = op.index;
      } else if (starts_with_word(stmt, "barrier")) {
        continue;
      } else if (starts_with_word(stmt, "cx")) {
        const std::string_view args = stmt.substr(2);
        const auto comma = args.find(',');
        if (comma == std::string_view::npos) {
          throw ParseError("cx needs two operands", line_no);
        }
        NativeGate g;
        g.kind = NativeKind::CX;
        g.control = qubit(args.substr(0, comma), line_no);
        g.target = qubit(args.substr(comma + 1), line_no);
        if (g.control == g.target) {
          throw ParseError("cx control equals target", line_no);
        }
        program.gates.push_back(g);
      } else if (stmt.substr(0, 2) == "ry" || stmt.substr(0, 2) == "rz") {
        const std::string_view rest = trim(stmt.substr(2));
        if (rest.empty() || rest.front() != '(') {
          throw ParseError("rotation needs an angle", line_no);
        }
        int depth = 0;
        std::size_t close = std::string_view::npos;
        for (std::size_t i = 0; i < rest.size(); ++i) {
          if (rest[i] == '(') ++depth;
          if (rest[i] == ')' && --depth == 0) {
            close = i;
            break;
          }
        }
        if (close == std::string_view::npos) {
          throw ParseError("unbalanced parentheses", line_no);
        }
        NativeGate g;
        g.kind = stmt[1] == 'y' ? NativeKind::RY : NativeKind::RZ;
        g.angle = ExprParser(rest.substr(1, close - 1), line_no).parse();
        g.target = qubit(rest.substr(close + 1), line_no);
        program.gates.push_back(g);
      } else {
        throw ParseError("unsupported statement '" + std::string(stmt) + "'",
                         line_no);
      }
    }
  }
  if (!saw_header) throw ParseError("missing OPENQASM header", 1);
  if (!reg) throw ParseError("missing qreg declaration", line_no);
  return program;
}

}  // namespace tnload
