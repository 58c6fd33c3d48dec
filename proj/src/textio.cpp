#include "cliffavg/textio.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace cliffavg {

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::invalid_argument("parse error at position " + std::to_string(position) + ": " + what),
      position_(position) {}

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class ExpressionParser {
public:
  ExpressionParser(const Signature& sig, std::string_view text) : sig_(sig), text_(text), result_(sig) {}

  Multivector run() {
    skip_ws();
    if (at_end()) fail("empty expression");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    term(negative);
    for (;;) {
      skip_ws();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
      negative = peek() == '-';
      ++pos_;
      term(negative);
    }
    return result_;
  }

private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }
  [[noreturn]] void fail_at(const std::string& what, std::size_t at) const { throw ParseError(what, at); }

  void term(bool negative) {
    skip_ws();
    if (at_end()) fail("expected a term");
    Rational coeff(1);
    MultiIndex blade_index;
    if (is_digit(peek())) {
      coeff = coefficient();
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
        if (at_end() || peek() != 'e') fail("expected a blade after '*'");
        blade_index = blade();
      } else if (!at_end() && peek() == 'e') {
        blade_index = blade();
      }
    } else if (peek() == 'e') {
      blade_index = blade();
    } else {
      fail("expected a coefficient or a blade");
    }
    result_.add(blade_index, negative ? -coeff : coeff);
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (!at_end() && is_digit(peek())) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Rational coefficient() {
    const std::string num = digits();
    if (!at_end() && peek() == '/') {
      ++pos_;
      const std::size_t den_pos = pos_;
      const std::string den = digits();
      if (den.empty()) fail("expected a denominator");
      if (std::all_of(den.begin(), den.end(), [](char c) { return c == '0'; })) {
        fail_at("zero denominator", den_pos);
      }
      return Rational(mpz_class(num), mpz_class(den));
    }
    return Rational(mpz_class(num), mpz_class(1));
  }

  MultiIndex blade() {
    ++pos_;  // 'e'
    std::vector<std::pair<long, std::size_t>> idx;
    if (!at_end() && is_digit(peek())) {
      if (sig_.dim() > 9) fail("use the braced form e{..} when n > 9");
      while (!at_end() && is_digit(peek())) {
        idx.emplace_back(peek() - '0', pos_);
        ++pos_;
      }
    } else if (!at_end() && peek() == '{') {
      ++pos_;
      for (;;) {
        skip_ws();
        const std::size_t at = pos_;
        const std::string d = digits();
        if (d.empty()) fail("expected an index");
        if (d.size() > 3) fail_at("index out of range", at);
        idx.emplace_back(std::stol(d), at);
        skip_ws();
        if (at_end()) fail("unterminated '{'");
        if (peek() == '}') {
          ++pos_;
          break;
        }
        if (peek() != ',') fail("expected ',' or '}'");
        ++pos_;
      }
    }
    std::uint32_t mask = 0;
    long previous = 0;
    for (const auto& [a, at] : idx) {
      if (a < 1 || a > sig_.dim()) fail_at("index " + std::to_string(a) + " out of range for n = " +
                                               std::to_string(sig_.dim()), at);
      if (a <= previous) fail_at("indices must be strictly increasing", at);
      previous = a;
      mask |= std::uint32_t{1} << (a - 1);
    }
    return MultiIndex(mask);
  }

  const Signature& sig_;
  std::string_view text_;
  std::size_t pos_ = 0;
  Multivector result_;
};

using ordered_json = nlohmann::ordered_json;

ordered_json order_json(const std::vector<MultiIndex>& order, int n) {
  ordered_json out = ordered_json::array();
  for (MultiIndex a : order) out.push_back(index_to_string(a, n));
  return out;
}

}  // namespace

Multivector parse_multivector(const Signature& sig, std::string_view text) {
  return ExpressionParser(sig, text).run();
}

std::string format_multivector(const Multivector& u) {
  std::string out;
  for (MultiIndex a : enumerate_indices(u.dim())) {
    const Rational& c = u.coeff(a);
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    const Rational magnitude = abs(c);
    const bool unit = magnitude == Rational(1);
    std::string term;
    if (a.empty()) {
      term = unit ? "e" : magnitude.to_string();
    } else {
      term = unit ? blade_to_string(a, u.dim()) : magnitude.to_string() + " " + blade_to_string(a, u.dim());
    }
    if (out.empty()) {
      out = (negative ? "-" : "") + term;
    } else {
      out += (negative ? " - " : " + ") + term;
    }
  }
  return out.empty() ? "0" : out;
}

std::string index_to_string(MultiIndex a, int n) {
  if (a.empty()) return "-";
  std::string out;
  const std::vector<int> idx = a.indices();
  if (n <= 9) {
    for (int i : idx) out += static_cast<char>('0' + i);
    return out;
  }
  out = "{";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(idx[i]);
  }
  return out + "}";
}

std::string blade_to_string(MultiIndex a, int n) { return a.empty() ? "e" : "e" + index_to_string(a, n); }

MultiIndex parse_multi_index(std::string_view text, int n) {
  if (text == "-") return MultiIndex{};
  if (text.empty()) throw ParseError("empty multi-index", 0);
  // Reuse the blade grammar: "13" reads like "e13".
  const std::string as_blade = text.front() == 'e' ? std::string(text) : "e" + std::string(text);
  const std::size_t shift = text.front() == 'e' ? 0 : 1;
  const Signature sig(n, 0, Signature::kHardMaxDim);
  Multivector u(sig);
  try {
    u = parse_multivector(sig, as_blade);
  } catch (const ParseError& e) {
    throw ParseError(std::string(e.what()).substr(std::string(e.what()).find(": ") + 2),
                     e.position() >= shift ? e.position() - shift : 0);
  }
  const std::vector<MultiIndex> support = u.support();
  if (support.size() != 1 || u.coeff(support.front()) != Rational(1)) {
    throw ParseError("not a multi-index: '" + std::string(text) + "'", 0);
  }
  return support.front();
}

std::string to_json(const CommutationTable& table) {
  ordered_json j;
  j["n"] = table.n;
  j["order"] = order_json(table.order, table.n);
  j["rows"] = table.rows;
  return j.dump();
}

std::string to_json(const SignMatrix& matrix) {
  ordered_json j;
  j["n"] = matrix.n;
  j["order"] = order_json(matrix.order, matrix.n);
  ordered_json rows = ordered_json::array();
  for (Eigen::Index i = 0; i < matrix.entries.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index k = 0; k < matrix.entries.cols(); ++k) row.push_back(matrix.entries(i, k));
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j.dump();
}

std::string kind_name(SolutionKind kind) {
  switch (kind) {
    case SolutionKind::Unique:
      return "unique";
    case SolutionKind::Coset:
      return "coset";
    case SolutionKind::Inconsistent:
      return "inconsistent";
  }
  return "inconsistent";
}

std::string freedom_name(const Freedom& freedom, int n) {
  switch (freedom.kind) {
    case FreedomKind::None:
      return "none";
    case FreedomKind::Center:
      return "center";
    case FreedomKind::Commutant:
      return "commutant-of-" + index_to_string(freedom.anchor, n);
    case FreedomKind::Anticommutant:
      return "anticommutant-of-" + index_to_string(freedom.anchor, n);
  }
  return "none";
}

std::string to_json(const Solution& solution) {
  ordered_json j;
  j["kind"] = kind_name(solution.kind);
  const int n = solution.particular ? solution.particular->dim()
                                    : (solution.residuals.empty() ? 0 : solution.residuals.front().second.dim());
  if (solution.particular) {
    j["particular"] = format_multivector(*solution.particular);
  } else {
    j["particular"] = nullptr;
  }
  j["freedom"] = freedom_name(solution.freedom, n);
  ordered_json residuals = ordered_json::object();
  for (const auto& [a, r] : solution.residuals) residuals[index_to_string(a, n)] = format_multivector(r);
  j["residuals"] = std::move(residuals);
  return j.dump();
}

std::string to_text(const CommutationTable& table) {
  std::vector<std::string> labels;
  for (MultiIndex a : table.order) labels.push_back(blade_to_string(a, table.n));
  std::size_t width = 0;
  for (const auto& l : labels) width = std::max(width, l.size());
  width = std::max(width, std::string("n=" + std::to_string(table.n)).size());

  auto pad = [width](const std::string& s) { return s + std::string(width - s.size(), ' '); };
  std::ostringstream os;
  os << pad("n=" + std::to_string(table.n));
  for (const auto& l : labels) os << ' ' << pad(l);
  os << '\n';
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    os << pad(labels[i]);
    for (int v : table.rows[i]) os << ' ' << pad(v > 0 ? "+" : "-");
    os << '\n';
  }
  std::string out = os.str();
  // Trailing padding is noise in diffs.
  std::string trimmed;
  std::istringstream lines(out);
  for (std::string line; std::getline(lines, line);) {
    line.erase(line.find_last_not_of(' ') + 1);
    trimmed += line + '\n';
  }
  return trimmed;
}

std::string to_text(const SignMatrix& matrix) {
  std::ostringstream os;
  for (Eigen::Index i = 0; i < matrix.entries.rows(); ++i) {
    for (Eigen::Index k = 0; k < matrix.entries.cols(); ++k) {
      if (k) os << ' ';
      os << (matrix.entries(i, k) > 0 ? " 1" : "-1");
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace cliffavg
