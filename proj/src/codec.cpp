#include "rdd/codec.hpp"

#include <cctype>
#include <istream>

namespace rdd {

namespace {

constexpr char kHeader[] = ">>graph6<<";
constexpr int kBias = 63;

bool is_graph6_byte(unsigned char c) { return c >= 63 && c <= 126; }

}  // namespace

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 0x3F) + kBias));
  }
  int acc = 0;
  int filled = 0;
  const auto rows = g.rows();
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | static_cast<int>(contains(rows[static_cast<std::size_t>(i)], j));
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.substr(0, sizeof(kHeader) - 1) == kHeader) pos = sizeof(kHeader) - 1;
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);

  if (pos >= text.size()) throw ParseError("graph6: missing size header", pos);
  auto byte_at = [&](std::size_t i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (!is_graph6_byte(c)) throw ParseError("graph6: invalid byte", i);
    return static_cast<int>(c) - kBias;
  };

  long n = byte_at(pos);
  ++pos;
  if (n == 63) {
    if (pos + 3 > text.size()) throw ParseError("graph6: truncated size header", text.size());
    if (static_cast<unsigned char>(text[pos]) == 126) throw ParseError("graph6: order exceeds maximum", pos);
    n = 0;
    for (int k = 0; k < 3; ++k) n = (n << 6) | byte_at(pos++);
  }
  if (n > kMaxVertices) throw ParseError("graph6: order " + std::to_string(n) + " exceeds maximum", 0);

  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1 < 0 ? 0 : n - 1) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (text.size() < pos + body) throw ParseError("graph6: truncated body", text.size());
  if (text.size() > pos + body) throw ParseError("graph6: trailing bytes", pos + body);

  GraphBuilder b(static_cast<int>(n));
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const std::size_t at = pos + k / 6;
      if ((byte_at(at) >> (5 - static_cast<int>(k % 6))) & 1) b.connect(i, j);
    }
  }
  if (bits % 6 != 0) {
    const std::size_t last = pos + body - 1;
    const int pad = 6 - static_cast<int>(bits % 6);
    if ((byte_at(last) & ((1 << pad) - 1)) != 0) throw ParseError("graph6: nonzero padding bits", last);
  }
  return b.build();
}

void read_graph6_stream(std::istream& in, const std::function<void(const Graph&, std::size_t)>& fn) {
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    Graph g;
    try {
      g = parse_graph6(line);
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(number) + ": " + e.what(), e.position());
    }
    fn(g, number);
  }
}

namespace {

class EdgeListLexer {
 public:
  explicit EdgeListLexer(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  std::size_t position() const { return pos_; }

  long number() {
    skip_space();
    const std::size_t start = pos_;
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000) throw ParseError("edge list: number too large", start);
      ++pos_;
    }
    if (pos_ == start) throw ParseError("edge list: expected a vertex index", start);
    return value;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      throw ParseError(std::string("edge list: expected '") + c + "'", pos_);
    }
    ++pos_;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

EdgeListResult parse_edge_list(std::string_view text) {
  EdgeListLexer lex(text);
  const std::size_t n_pos = (lex.skip_space(), lex.position());
  const long n = lex.number();
  if (n > kMaxVertices) throw ParseError("edge list: order " + std::to_string(n) + " exceeds maximum", n_pos);
  lex.expect(';');

  EdgeListResult result;
  GraphBuilder b(static_cast<int>(n));
  bool first = true;
  while (!lex.at_end()) {
    if (!first) lex.expect(',');
    first = false;
    const std::size_t token = (lex.skip_space(), lex.position());
    const long u = lex.number();
    lex.expect('-');
    const long v = lex.number();
    if (u >= n || v >= n) throw ParseError("edge list: vertex index out of range", token);
    if (u == v) throw ParseError("edge list: loop", token);
    if (!b.connect(static_cast<int>(u), static_cast<int>(v))) {
      result.warnings.push_back("duplicate edge " + std::to_string(u) + "-" + std::to_string(v) + " at offset " +
                                std::to_string(token));
    }
  }
  result.graph = b.build();
  return result;
}

std::string write_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + ";";
  bool first = true;
  for (const Edge& e : g.edges()) {
    out += first ? " " : ", ";
    out += to_string(e);
    first = false;
  }
  return out;
}

}  // namespace rdd
