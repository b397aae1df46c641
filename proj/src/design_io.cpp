#include "fracfac/design_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace fracfac {

namespace {

struct Token {
  std::string_view text;
  int column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

int parse_int(const Token& tok, int line_no) {
  int value = 0;
  const auto* first = tok.text.data();
  const auto* last = first + tok.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(line_no, tok.column, "expected an integer, got '" + std::string(tok.text) + "'");
  }
  return value;
}

}  // namespace

ParseError::ParseError(int line, int column, const std::string& message)
    : Error(ErrorKind::Parse,
            "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

RegularDesign parse_design(std::string_view text) {
  std::vector<std::pair<int, std::string_view>> lines;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = text.find('\n', pos);
    const auto line = text.substr(pos, end == std::string_view::npos ? text.size() - pos : end - pos);
    ++line_no;
    lines.emplace_back(line_no, line);
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }

  auto header = tokenize(lines.front().second);
  if (header.size() != 2 || header[0].text != "fracfac" || header[1].text != "v1") {
    throw ParseError(1, header.empty() ? 1 : header[0].column, "expected header 'fracfac v1'");
  }

  int k = -1;
  int n = -1;
  std::vector<BitVec> columns;
  bool have_cols = false;
  int last_line = 1;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto [num, line] = lines[li];
    last_line = num;
    auto toks = tokenize(line);
    if (toks.empty() || toks.front().text.front() == '#') continue;
    const auto& key = toks.front();
    if (k < 0) {
      if (key.text != "k" || toks.size() != 2) throw ParseError(num, key.column, "expected 'k <int>'");
      k = parse_int(toks[1], num);
      if (k < 1 || k > gf2::kMaxWidth) throw ParseError(num, toks[1].column, "k must lie in [1, 32]");
    } else if (n < 0) {
      if (key.text != "n" || toks.size() != 2) throw ParseError(num, key.column, "expected 'n <int>'");
      n = parse_int(toks[1], num);
      if (n < 1) throw ParseError(num, toks[1].column, "n must be positive");
    } else if (!have_cols) {
      if (key.text != "cols") throw ParseError(num, key.column, "expected 'cols ...'");
      if (static_cast<int>(toks.size()) - 1 != n) {
        throw ParseError(num, key.column, "expected " + std::to_string(n) + " columns, found " +
                                              std::to_string(toks.size() - 1));
      }
      for (std::size_t t = 1; t < toks.size(); ++t) {
        const auto& tok = toks[t];
        if (static_cast<int>(tok.text.size()) != k) {
          throw ParseError(num, tok.column, "column '" + std::string(tok.text) + "' has width " +
                                                std::to_string(tok.text.size()) + ", expected " +
                                                std::to_string(k));
        }
        for (std::size_t c = 0; c < tok.text.size(); ++c) {
          if (tok.text[c] != '0' && tok.text[c] != '1') {
            throw ParseError(num, tok.column + static_cast<int>(c), "column characters must be 0 or 1");
          }
        }
        columns.push_back(BitVec::from_string(tok.text));
      }
      have_cols = true;
    } else {
      throw ParseError(num, key.column, "unexpected content after 'cols'");
    }
  }
  if (!have_cols) {
    throw ParseError(last_line, 1, k < 0 ? "missing 'k' line" : n < 0 ? "missing 'n' line"
                                                                       : "missing 'cols' line");
  }
  return RegularDesign::from_columns(k, std::move(columns));
}

RegularDesign read_design_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_design(ss.str());
}

std::string serialize_design(const RegularDesign& d) {
  std::string out = "fracfac v1\nk " + std::to_string(d.k()) + "\nn " +
                    std::to_string(d.factors()) + "\ncols";
  for (const auto& c : d.columns()) {
    out += ' ';
    out += c.to_string();
  }
  out += '\n';
  return out;
}

void write_design_file(const RegularDesign& d, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Parse, "cannot write '" + path + "'");
  out << serialize_design(d);
}

}  // namespace fracfac
