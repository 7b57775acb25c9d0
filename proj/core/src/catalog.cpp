#include "entatlas/catalog.hpp"

#include <cctype>
#include <set>
#include <sstream>

#include "entatlas/errors.hpp"

namespace entatlas {

namespace detail {
extern const std::string_view kEmbeddedCatalog;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string index_str(const MultiIndex& m) {
  std::string s;
  for (int v : m) s += std::to_string(v);
  return s;
}

// Cursor over one entry's right-hand side.
class TermParser {
 public:
  TermParser(std::string_view text, const std::string& entry) : s_(text), entry_(entry) {}

  std::vector<TransvectionTerm> parse() {
    std::vector<TransvectionTerm> terms;
    skip_space();
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      Rational coef(1);
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) ++pos_;
        coef = Rational::parse(s_.substr(start, pos_ - start));
        skip_space();
      }
      expect('(');
      CovariantId lhs = id_until(',');
      expect(',');
      CovariantId rhs = id_until(')');
      expect(')');
      expect('^');
      MultiIndex idx{};
      for (auto& v : idx) {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("index needs four digits");
        v = s_[pos_++] - '0';
      }
      if (std::isdigit(static_cast<unsigned char>(peek()))) fail("index needs four digits");
      terms.push_back({sign < 0 ? -coef : coef, lhs, rhs, idx});
      skip_space();
    }
    if (terms.empty()) fail("no terms");
    return terms;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip_space();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
    skip_space();
  }
  CovariantId id_until(char stop) {
    std::size_t end = s_.find(stop, pos_);
    if (end == std::string_view::npos) fail(std::string("missing '") + stop + "'");
    std::string_view token = trim(s_.substr(pos_, end - pos_));
    pos_ = end;
    try {
      return CovariantId::parse(token);
    } catch (const InputError& e) {
      fail(e.what());
    }
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw CatalogError("catalog entry " + entry_ + ": " + what + " at column " + std::to_string(pos_));
  }

  std::string_view s_;
  std::string entry_;
  std::size_t pos_ = 0;
};

}  // namespace

CovariantId CovariantId::parse(std::string_view text) {
  std::string_view s = trim(text);
  auto bad = [&] { return InputError("malformed covariant id '" + std::string(text) + "'"); };
  if (s.empty() || std::string_view("ABCDEFGHIJKL").find(s[0]) == std::string_view::npos) throw bad();
  CovariantId id;
  id.letter = s[0];
  s.remove_prefix(1);
  if (id.letter == 'A' && (s.empty() || s == "_1111" || s == "1111")) return id;
  if (!s.empty() && s[0] == '_') s.remove_prefix(1);
  if (s.size() < 4) throw bad();
  for (int k = 0; k < 4; ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[static_cast<std::size_t>(k)]))) throw bad();
    id.multidegree[static_cast<std::size_t>(k)] = s[static_cast<std::size_t>(k)] - '0';
  }
  s.remove_prefix(4);
  if (!s.empty()) {
    if (s.size() != 2 || s[0] != '^' || s[1] < '1' || s[1] > '3') throw bad();
    id.variant = s[1] - '0';
  }
  return id;
}

std::string CovariantId::str() const {
  if (*this == kGroundForm) return "A";
  std::string s(1, letter);
  s += "_" + index_str(multidegree);
  if (variant) s += "^" + std::to_string(variant);
  return s;
}

Catalog Catalog::parse(std::string_view text) {
  Catalog cat;
  cat.entries_.push_back(CovariantDef{kGroundForm, 1, {}, {}});
  cat.index_[kGroundForm] = 0;

  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::string_view l = trim(line);
    if (l.empty() || l[0] == '#') continue;
    if (l.rfind("catalog-version", 0) == 0) {
      cat.version_ = std::stoi(std::string(trim(l.substr(15))));
      continue;
    }
    std::string_view note;
    if (auto bar = l.find('|'); bar != std::string_view::npos) {
      note = trim(l.substr(bar + 1));
      l = trim(l.substr(0, bar));
    }
    auto eq = l.find('=');
    if (eq == std::string_view::npos) throw CatalogError("catalog line without '=': " + line);
    std::string name(trim(l.substr(0, eq)));
    CovariantDef def;
    try {
      def.id = CovariantId::parse(name);
    } catch (const InputError& e) {
      throw CatalogError(std::string("catalog: ") + e.what());
    }
    if (cat.index_.count(def.id)) throw CatalogError("catalog entry " + name + ": duplicate id");
    def.terms = TermParser(l.substr(eq + 1), name).parse();
    def.correction = std::string(note);

    def.degree = -1;
    for (const auto& t : def.terms) {
      for (const CovariantId* ref : {&t.lhs, &t.rhs})
        if (!cat.index_.count(*ref))
          throw CatalogError("catalog entry " + name + ": reference " + ref->str() + " is not defined earlier");
      const auto& l_def = cat.entries_[cat.index_.at(t.lhs)];
      const auto& r_def = cat.entries_[cat.index_.at(t.rhs)];
      int deg = l_def.degree + r_def.degree;
      if (def.degree >= 0 && deg != def.degree)
        throw CatalogError("catalog entry " + name + ": terms of different degree");
      def.degree = deg;
      for (std::size_t k = 0; k < 4; ++k) {
        int dl = t.lhs.multidegree[k], dr = t.rhs.multidegree[k];
        if (t.index[k] > dl || t.index[k] > dr)
          throw CatalogError("catalog entry " + name + ": index " + index_str(t.index) + " exceeds a degree of " +
                             t.lhs.str() + " or " + t.rhs.str());
        if (dl + dr - 2 * t.index[k] != def.id.multidegree[k])
          throw CatalogError("catalog entry " + name + ": degree law fails for (" + t.lhs.str() + "," +
                             t.rhs.str() + ")^" + index_str(t.index));
      }
    }
    cat.index_[def.id] = cat.entries_.size();
    cat.entries_.push_back(std::move(def));
  }
  return cat;
}

const Catalog& Catalog::builtin() {
  static const Catalog cat = parse(detail::kEmbeddedCatalog);
  return cat;
}

std::string_view Catalog::builtin_text() { return detail::kEmbeddedCatalog; }

std::optional<std::size_t> Catalog::index_of(const CovariantId& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Catalog::require(const CovariantId& id) const {
  auto i = index_of(id);
  if (!i) throw InputError("unknown covariant " + id.str());
  return *i;
}

std::vector<CovariantId> Catalog::ids() const {
  std::vector<CovariantId> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.id);
  return out;
}

std::map<int, std::size_t> Catalog::census() const {
  std::map<int, std::size_t> out;
  for (const auto& e : entries_) ++out[e.degree];
  return out;
}

std::vector<CovariantId> Catalog::dependency_chain(const CovariantId& id) const {
  std::set<std::size_t> seen;
  std::vector<std::size_t> stack{require(id)};
  while (!stack.empty()) {
    std::size_t i = stack.back();
    stack.pop_back();
    if (!seen.insert(i).second) continue;
    for (const auto& t : entries_[i].terms) {
      stack.push_back(index_.at(t.lhs));
      stack.push_back(index_.at(t.rhs));
    }
  }
  std::vector<CovariantId> out;
  for (std::size_t i : seen) out.push_back(entries_[i].id);
  return out;
}

std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace entatlas
