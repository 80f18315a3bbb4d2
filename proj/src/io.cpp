#include "extres/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "extres/errors.hpp"

namespace extres {

namespace {

// Hand-rolled scanner; positions are reported 1-based.
class Cursor {
public:
  explicit Cursor(std::string_view text) : text_(text) {}

  bool done() {
    skip_blank();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_blank();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool accept_word(std::string_view w) {
    skip_blank();
    if (text_.substr(pos_, w.size()) != w) return false;
    pos_ += w.size();
    return true;
  }
  long long integer() {
    skip_blank();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string_view digits = text_.substr(start, pos_ - start);
    if (digits.empty() || digits == "-" || digits == "+") {
      pos_ = start;
      fail("expected an integer");
    }
    if (digits.size() > 12) fail_at(start, "integer out of range");
    return std::stoll(std::string(digits));
  }
  std::size_t position() const { return pos_; }

  [[noreturn]] void fail(const std::string& what) { fail_at(pos_, what); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& what) const {
    std::size_t line = 1, column = 1;
    for (std::size_t k = 0; k < at && k < text_.size(); ++k) {
      if (text_[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(what, line, column);
  }

private:
  void skip_blank() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

Monomial read_monomial(Cursor& in, Ambient ambient) {
  std::size_t start = in.position();
  std::vector<int> idx;
  if (in.accept('[')) {
    if (!in.accept(']')) {
      do {
        std::size_t at = in.position();
        long long k = in.integer();
        if (k < 1 || k > ambient.n()) in.fail_at(at, "index " + std::to_string(k) + " outside 1.." + std::to_string(ambient.n()));
        idx.push_back(static_cast<int>(k));
      } while (in.accept(','));
      in.expect(']');
    }
  } else if (in.peek() == 'e') {
    do {
      in.expect('e');
      std::size_t at = in.position();
      long long k = in.integer();
      if (k < 1 || k > ambient.n()) in.fail_at(at, "index " + std::to_string(k) + " outside 1.." + std::to_string(ambient.n()));
      idx.push_back(static_cast<int>(k));
    } while (in.accept('*'));
  } else if (in.peek() == '1') {
    std::size_t at = in.position();
    if (in.integer() != 1) in.fail_at(at, "expected a monomial");
  } else {
    in.fail("expected a monomial such as [1,3] or e1*e3");
  }
  std::vector<int> sorted = idx;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    in.fail_at(start, "repeated index in a monomial (e_k ∧ e_k = 0)");
  }
  return Monomial(ambient, make_index_set(std::span<const int>(sorted)));
}

std::vector<Monomial> read_generators(Cursor& in, Ambient ambient) {
  std::vector<Monomial> out;
  char c = in.peek();
  if (c != '[' && c != 'e' && c != '1') return out;
  do {
    out.push_back(read_monomial(in, ambient));
  } while (in.accept(','));
  return out;
}

Ambient read_ambient(Cursor& in, long long n, std::size_t at) {
  if (n < 1 || n > 63) in.fail_at(at, "n must lie in 1..63");
  return Ambient(static_cast<int>(n));
}

std::string pad_left(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

nlohmann::json bigint_json(const BigInt& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

nlohmann::json element_json(const Element& e) {
  auto terms = nlohmann::json::array();
  for (const auto& [mu, c] : e.terms()) terms.push_back({c.get_str(), indices_of(mu)});
  return terms;
}

std::string symbol_label(const FreeComplex& complex, int i, std::size_t k) {
  if (i == 0) return "1";
  const auto& f = complex.symbols(i)[k];
  return "f(" + f.a.to_string() + ";" + std::to_string(f.generator + 1) + ")";
}

}  // namespace

std::vector<int> parse_int_list(std::string_view text) {
  Cursor in(text);
  std::vector<int> out;
  do {
    std::size_t at = in.position();
    long long v = in.integer();
    if (v < -1000000 || v > 1000000) in.fail_at(at, "value out of range");
    out.push_back(static_cast<int>(v));
  } while (in.accept(','));
  if (!in.done()) in.fail("unexpected trailing input");
  return out;
}

Monomial parse_monomial(Ambient ambient, std::string_view text) {
  Cursor in(text);
  Monomial m = read_monomial(in, ambient);
  if (!in.done()) in.fail("unexpected trailing input");
  return m;
}

std::vector<Monomial> parse_generators(Ambient ambient, std::string_view text) {
  Cursor in(text);
  auto gens = read_generators(in, ambient);
  if (!in.done()) in.fail("unexpected input in generator list");
  return gens;
}

MonomialIdeal parse_ideal_text(std::string_view text) {
  Cursor in(text);
  if (!in.accept_word("n")) in.fail("expected 'n='");
  in.expect('=');
  std::size_t at = in.position();
  Ambient amb = read_ambient(in, in.integer(), at);
  in.expect(';');
  if (!in.accept_word("gens")) in.fail("expected 'gens='");
  in.expect('=');
  auto gens = read_generators(in, amb);
  in.accept(';');
  if (!in.done()) in.fail("unexpected input after the generator list");
  return minimalize(amb, gens);
}

MonomialIdeal parse_ideal_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    Cursor(text).fail_at(e.byte > 0 ? e.byte - 1 : 0, "malformed JSON");
  }
  auto bad = [&](const std::string& what) -> void { throw ParseError(what, 1, 1); };
  if (!doc.is_object()) bad("ideal JSON must be an object");
  if (!doc.contains("n") || !doc["n"].is_number_integer()) bad("ideal JSON needs an integer \"n\"");
  long long n = doc["n"].get<long long>();
  if (n < 1 || n > 63) bad("n must lie in 1..63");
  Ambient amb(static_cast<int>(n));
  if (!doc.contains("gens") || !doc["gens"].is_array()) bad("ideal JSON needs an array \"gens\"");
  std::vector<Monomial> gens;
  for (const auto& g : doc["gens"]) {
    if (!g.is_array()) bad("each generator must be an array of indices");
    std::vector<int> idx;
    for (const auto& k : g) {
      if (!k.is_number_integer()) bad("indices must be integers");
      long long v = k.get<long long>();
      if (v < 1 || v > n) bad("index " + std::to_string(v) + " outside 1.." + std::to_string(n));
      idx.push_back(static_cast<int>(v));
    }
    std::sort(idx.begin(), idx.end());
    if (std::adjacent_find(idx.begin(), idx.end()) != idx.end()) bad("repeated index in a monomial");
    gens.emplace_back(amb, make_index_set(std::span<const int>(idx)));
  }
  return minimalize(amb, gens);
}

MonomialIdeal parse_ideal(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_ideal_json(text);
  return parse_ideal_text(text);
}

nlohmann::json ideal_to_json(const MonomialIdeal& ideal) {
  auto gens = nlohmann::json::array();
  for (const auto& g : ideal.generators()) gens.push_back(indices_of(g.support()));
  return {{"n", ideal.ambient().n()}, {"gens", gens}};
}

std::string ideal_to_text(const MonomialIdeal& ideal) {
  std::ostringstream os;
  os << "n=" << ideal.ambient().n() << "; gens=";
  bool first = true;
  for (const auto& g : ideal.generators()) {
    if (!first) os << ',';
    first = false;
    os << '[';
    auto idx = indices_of(g.support());
    for (std::size_t k = 0; k < idx.size(); ++k) os << (k ? "," : "") << idx[k];
    os << ']';
  }
  return os.str();
}

std::string betti_to_text(const BettiTable& table) {
  int cols = table.i_max() + 1;
  auto rows = table.rows();
  std::vector<std::string> labels{"", "total:"};
  for (int r : rows) labels.push_back(std::to_string(r) + ":");
  std::vector<std::vector<std::string>> cells(labels.size(), std::vector<std::string>(static_cast<std::size_t>(cols)));
  for (int i = 0; i < cols; ++i) {
    auto c = static_cast<std::size_t>(i);
    cells[0][c] = std::to_string(i);
    cells[1][c] = table.total(i).get_str();
    for (std::size_t r = 0; r < rows.size(); ++r) {
      BigInt v = table.at_row(i, rows[r]);
      cells[r + 2][c] = v == 0 ? "." : v.get_str();
    }
  }
  std::size_t label_width = 0;
  for (const auto& l : labels) label_width = std::max(label_width, l.size());
  std::vector<std::size_t> width(static_cast<std::size_t>(cols), 0);
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream os;
  for (std::size_t r = 0; r < cells.size(); ++r) {
    std::string line = pad_left(labels[r], label_width);
    for (std::size_t c = 0; c < cells[r].size(); ++c) line += " " + pad_left(cells[r][c], width[c]);
    os << line << '\n';
  }
  return os.str();
}

nlohmann::json betti_to_json(const BettiTable& table) {
  auto entries = nlohmann::json::array();
  for (const auto& [key, v] : table.entries()) {
    entries.push_back({{"i", key.first}, {"j", key.second}, {"beta", bigint_json(v)}});
  }
  auto totals = nlohmann::json::array();
  for (const auto& t : table.totals()) totals.push_back(bigint_json(t));
  return {{"schema", 1}, {"i_max", table.i_max()}, {"entries", entries}, {"totals", totals}};
}

nlohmann::json complex_to_json(const FreeComplex& complex) {
  nlohmann::json doc{{"schema", 1}, {"field", complex.field().name()}, {"ideal", ideal_to_json(complex.lq().ideal())}};
  auto order = nlohmann::json::array();
  for (const auto& g : complex.lq().order()) order.push_back(indices_of(g.support()));
  doc["order"] = order;
  auto label = [&](int i, std::size_t k) -> nlohmann::json {
    if (i == 0) return {{"a", nlohmann::json::array()}, {"generator", nullptr}, {"degree", 0}};
    const auto& f = complex.symbols(i)[k];
    return {{"a", f.a.exponents()}, {"generator", f.generator + 1}, {"degree", f.degree}};
  };
  auto diffs = nlohmann::json::array();
  for (int i = 1; i <= complex.i_max(); ++i) {
    nlohmann::json d{{"i", i}};
    auto rows = nlohmann::json::array();
    for (std::size_t b = 0; b < complex.rank(i - 1); ++b) rows.push_back(label(i - 1, b));
    auto cols = nlohmann::json::array();
    for (std::size_t k = 0; k < complex.rank(i); ++k) cols.push_back(label(i, k));
    auto entries = nlohmann::json::array();
    for (std::size_t k = 0; k < complex.rank(i); ++k) {
      for (const auto& [b, e] : complex.image(i, k)) {
        entries.push_back({{"row", b}, {"col", k}, {"terms", element_json(e)}});
      }
    }
    d["rows"] = rows;
    d["cols"] = cols;
    d["entries"] = entries;
    diffs.push_back(d);
  }
  doc["differentials"] = diffs;
  return doc;
}

std::string complex_to_text(const FreeComplex& complex) {
  std::ostringstream os;
  os << "field " << complex.field().name() << "\norder";
  for (const auto& g : complex.lq().order()) os << ' ' << g.to_string();
  os << '\n';
  for (int i = 1; i <= complex.i_max(); ++i) {
    os << "d_" << i << ": F_" << i << " (rank " << complex.rank(i) << ") -> F_" << i - 1 << " (rank "
       << complex.rank(i - 1) << ")\n";
    std::size_t width = 0;
    for (std::size_t k = 0; k < complex.rank(i); ++k) width = std::max(width, symbol_label(complex, i, k).size());
    for (std::size_t k = 0; k < complex.rank(i); ++k) {
      std::string lhs = symbol_label(complex, i, k);
      os << "  " << lhs << std::string(width - lhs.size(), ' ') << " |-> ";
      bool first = true;
      for (const auto& [b, e] : complex.image(i, k)) {
        std::string coeff = e.to_string();
        if (!first) os << " + ";
        first = false;
        os << '(' << coeff << ")*" << symbol_label(complex, i - 1, b);
      }
      if (first) os << '0';
      os << '\n';
    }
  }
  return os.str();
}

nlohmann::json verify_report_to_json(const VerifyReport& report) {
  auto blocks = nlohmann::json::array();
  for (const auto& b : report.blocks) {
    blocks.push_back({{"i", b.homological}, {"degree", b.degree}, {"dimension", b.dimension}, {"homology", b.homology}});
  }
  return {{"schema", 1},
          {"d_squared_zero", report.d_squared_zero},
          {"minimal", report.minimal},
          {"homogeneous", report.homogeneous},
          {"exact", report.exact},
          {"resolves_quotient", report.resolves_quotient},
          {"ok", report.ok()},
          {"failures", report.failures},
          {"blocks", blocks}};
}

}  // namespace extres
