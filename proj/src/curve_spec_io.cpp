#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "ffzeta/curves.hpp"

namespace ffzeta {

namespace {

// A value is an integer, a bare word, or a (possibly nested) list.
struct Value {
  enum class Kind { Integer, Word, List } kind = Kind::Integer;
  std::int64_t integer = 0;
  std::string word;
  std::vector<Value> items;
  SpecLocation where;
};

class LineParser {
 public:
  LineParser(const std::string& text, std::size_t line) : s_(text), line_(line) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size() || s_[pos_] == '#';
  }
  SpecLocation here() const { return {line_, pos_ + 1}; }

  [[noreturn]] void fail(const std::string& msg) const { throw SpecParseError(here(), msg); }

  std::string key() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("expected a key");
    return s_.substr(start, pos_ - start);
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Value value() {
    skip_ws();
    Value v;
    v.where = here();
    if (pos_ >= s_.size()) fail("expected a value");
    const char c = s_[pos_];
    if (c == '[') {
      ++pos_;
      v.kind = Value::Kind::List;
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == ']') {
        ++pos_;
        return v;
      }
      while (true) {
        v.items.push_back(value());
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == ',') {
          ++pos_;
          continue;
        }
        if (pos_ < s_.size() && s_[pos_] == ']') {
          ++pos_;
          break;
        }
        fail("expected ',' or ']'");
      }
      return v;
    }
    if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      if (c == '-' || c == '+') ++pos_;
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("malformed integer");
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      try {
        v.integer = std::stoll(s_.substr(start, pos_ - start));
      } catch (const std::out_of_range&) {
        throw SpecParseError(v.where, "integer out of range");
      }
      v.kind = Value::Kind::Integer;
      return v;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      v.kind = Value::Kind::Word;
      v.word = s_.substr(start, pos_ - start);
      return v;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

 private:
  const std::string& s_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

std::int64_t as_integer(const Value& v, const char* what) {
  if (v.kind != Value::Kind::Integer) throw SpecParseError(v.where, std::string(what) + " must be an integer");
  return v.integer;
}

FieldElement as_element(const Value& v, const FiniteField& k) {
  if (v.kind == Value::Kind::Integer) return k.from_int(v.integer);
  if (v.kind == Value::Kind::List) {
    std::vector<std::int64_t> c;
    for (const auto& item : v.items) c.push_back(as_integer(item, "field element coefficient"));
    if (c.size() > k.degree()) throw SpecParseError(v.where, "field element has more than r coefficients");
    return k.element(c);
  }
  throw SpecParseError(v.where, "expected an integer or a coefficient list");
}

}  // namespace

CurveSpec parse_curve_spec(std::istream& in, FieldLimits limits) {
  std::map<std::string, Value> entries;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    LineParser lp(line, lineno);
    if (lp.at_end()) continue;
    const SpecLocation key_at = lp.here();
    const std::string key = lp.key();
    if (key != "p" && key != "r" && key != "model" && key != "coefficients") {
      throw SpecParseError(key_at, "unknown key '" + key + "'");
    }
    if (entries.count(key)) throw SpecParseError(key_at, "duplicate key '" + key + "'");
    lp.expect('=');
    Value v = lp.value();
    if (!lp.at_end()) lp.fail("trailing characters after value");
    entries.emplace(key, std::move(v));
  }
  const SpecLocation eof{lineno + 1, 1};
  auto need = [&](const char* key) -> const Value& {
    auto it = entries.find(key);
    if (it == entries.end()) throw SpecParseError(eof, std::string("missing key '") + key + "'");
    return it->second;
  };

  const Value& pv = need("p");
  const std::int64_t p = as_integer(pv, "p");
  std::int64_t r = 1;
  if (auto it = entries.find("r"); it != entries.end()) r = as_integer(it->second, "r");
  if (p < 2) throw SpecParseError(pv.where, "p must be a prime");
  if (r < 1) throw SpecParseError(entries.at("r").where, "r must be at least 1");

  FiniteField k = [&] {
    try {
      return FiniteField::make(static_cast<std::uint64_t>(p), static_cast<unsigned>(r), limits);
    } catch (const Error& e) {
      throw SpecParseError(pv.where, e.what());
    }
  }();

  const Value& mv = need("model");
  if (mv.kind != Value::Kind::Word) throw SpecParseError(mv.where, "model must be a word");

  std::vector<FieldElement> coeffs;
  if (auto it = entries.find("coefficients"); it != entries.end()) {
    const Value& cv = it->second;
    if (cv.kind != Value::Kind::List) throw SpecParseError(cv.where, "coefficients must be a list");
    for (const auto& item : cv.items) coeffs.push_back(as_element(item, k));
  }

  try {
    if (mv.word == "projective_line") {
      if (!coeffs.empty()) throw SpecParseError(mv.where, "projective_line takes no coefficients");
      return CurveSpec::projective_line(k);
    }
    if (mv.word == "elliptic") {
      if (coeffs.size() != 2) throw SpecParseError(need("coefficients").where, "elliptic needs coefficients [a, b]");
      return CurveSpec(k, EllipticWeierstrass{coeffs[0], coeffs[1]});
    }
    if (mv.word == "hyperelliptic") {
      return CurveSpec(k, Hyperelliptic{coeffs});
    }
  } catch (const SpecParseError&) {
    throw;
  } catch (const Error& e) {
    throw SpecParseError(mv.where, e.what());
  }
  throw SpecParseError(mv.where, "unknown model '" + mv.word + "' (projective_line, elliptic, hyperelliptic)");
}

CurveSpec parse_curve_spec(const std::string& text, FieldLimits limits) {
  std::istringstream in(text);
  return parse_curve_spec(in, limits);
}

CurveSpec load_curve_spec(const std::string& path, FieldLimits limits) {
  std::ifstream in(path);
  if (!in) throw SpecParseError({0, 0}, "cannot open '" + path + "'");
  return parse_curve_spec(in, limits);
}

}  // namespace ffzeta
