#include "pcinv/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>

namespace pcinv {

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == '#') break;
    if (c == ' ' || c == '\t' || c == '\r') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

std::optional<long long> to_int(const std::string& s) {
  if (s.empty()) return std::nullopt;
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (...) {
    return std::nullopt;
  }
  if (pos != s.size()) return std::nullopt;
  return v;
}

struct Pending {
  std::string name;
  int line = 0;
  int n = -1;
  std::vector<std::string> names;
  std::map<int, Word> pow;
  std::map<std::pair<int, int>, Word> comm;
};

class Parser {
 public:
  Parser(std::string_view text, std::string source) : text_(text), src_(std::move(source)) {}

  Catalog run() {
    std::istringstream in{std::string(text_)};
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
      ++lineno;
      auto tok = tokenize(raw);
      if (tok.empty()) continue;
      line(tok, lineno);
    }
    if (cur_) fail(cur_->line, "group '" + cur_->name + "' is missing 'end'");
    return std::move(cat_);
  }

 private:
  [[noreturn]] void fail(int line, const std::string& msg) const { throw ParseError(src_, line, msg); }

  int gen_index(const std::string& t, int line) const {
    auto v = to_int(t);
    if (!v || *v < 1 || *v > cur_->n) fail(line, "invalid generator index '" + t + "'");
    return static_cast<int>(*v) - 1;
  }

  Word word(const std::vector<std::string>& tok, std::size_t from, int line, int above) const {
    Word w;
    for (std::size_t i = from; i < tok.size(); ++i) {
      const std::string& t = tok[i];
      auto caret = t.find('^');
      int g = gen_index(t.substr(0, caret), line);
      int e = 1;
      if (caret != std::string::npos) {
        auto v = to_int(t.substr(caret + 1));
        if (!v) fail(line, "invalid exponent in '" + t + "'");
        e = static_cast<int>(*v);
      }
      if (g <= above)
        fail(line, "generator " + std::to_string(g + 1) + " is not above generator " + std::to_string(above + 1));
      w.push_back({g, e});
    }
    return w;
  }

  void need_group(int line, const std::string& kw) const {
    if (!cur_) fail(line, "'" + kw + "' outside a group block");
    if (cur_->n < 0 && kw != "ngens") fail(line, "'" + kw + "' before 'ngens'");
  }

  void line(const std::vector<std::string>& tok, int lineno) {
    const std::string& kw = tok[0];
    if (kw == "group") {
      if (cur_) fail(lineno, "nested 'group'; previous block has no 'end'");
      if (tok.size() != 2) fail(lineno, "expected 'group <name>'");
      if (cat_.contains(tok[1])) fail(lineno, "duplicate group '" + tok[1] + "'");
      cur_.emplace();
      cur_->name = tok[1];
      cur_->line = lineno;
    } else if (kw == "ngens") {
      need_group(lineno, kw);
      if (cur_->n >= 0) fail(lineno, "repeated 'ngens'");
      auto v = tok.size() == 2 ? to_int(tok[1]) : std::nullopt;
      if (!v || *v < 0 || *v > kMaxGenerators) fail(lineno, "invalid generator count");
      cur_->n = static_cast<int>(*v);
    } else if (kw == "names") {
      need_group(lineno, kw);
      if (static_cast<int>(tok.size()) - 1 != cur_->n) fail(lineno, "expected one name per generator");
      cur_->names.assign(tok.begin() + 1, tok.end());
      for (const auto& nm : cur_->names)
        if (to_int(nm) || nm.find_first_of("*^") != std::string::npos) fail(lineno, "invalid generator name '" + nm + "'");
    } else if (kw == "pow") {
      need_group(lineno, kw);
      if (tok.size() < 3 || tok[2] != "=") fail(lineno, "expected 'pow <i> = <word>'");
      int i = gen_index(tok[1], lineno);
      if (cur_->pow.count(i)) fail(lineno, "repeated power relation for generator " + tok[1]);
      cur_->pow[i] = word(tok, 3, lineno, i);
    } else if (kw == "comm") {
      need_group(lineno, kw);
      if (tok.size() < 4 || tok[3] != "=") fail(lineno, "expected 'comm <i> <j> = <word>'");
      int i = gen_index(tok[1], lineno);
      int j = gen_index(tok[2], lineno);
      if (i >= j) fail(lineno, "commutator relations need i < j");
      if (cur_->comm.count({i, j})) fail(lineno, "repeated commutator relation");
      cur_->comm[{i, j}] = word(tok, 4, lineno, j);
    } else if (kw == "end") {
      need_group(lineno, kw);
      if (tok.size() != 1) fail(lineno, "unexpected text after 'end'");
      finish(lineno);
    } else {
      fail(lineno, "unknown keyword '" + kw + "'");
    }
  }

  void finish(int lineno) {
    PcRelations rel;
    rel.n = cur_->n;
    rel.pow.assign(static_cast<std::size_t>(rel.n), {});
    for (auto& [i, w] : cur_->pow) rel.pow[static_cast<std::size_t>(i)] = w;
    rel.comm = cur_->comm;
    try {
      cat_.add(std::make_shared<const PcGroup>(PcGroup::from_relations(cur_->name, rel, cur_->names)));
    } catch (const std::exception& e) {
      fail(lineno, std::string("group '") + cur_->name + "' rejected: " + e.what());
    }
    cur_.reset();
  }

  std::string_view text_;
  std::string src_;
  Catalog cat_;
  std::optional<Pending> cur_;
};

std::string word_text(Element e) {
  std::string s;
  for (int i : PcGroup::support(e)) {
    if (!s.empty()) s += ' ';
    s += std::to_string(i + 1);
  }
  return s;
}

}  // namespace

void Catalog::add(PcGroupPtr g) {
  const std::string& n = g->name();
  if (!groups_.count(n)) order_.push_back(n);
  groups_[n] = std::move(g);
}

const PcGroupPtr& Catalog::get(const std::string& name) const {
  auto it = groups_.find(name);
  if (it == groups_.end()) throw UnknownGroup(name);
  return it->second;
}

void Catalog::merge(const Catalog& other) {
  for (const auto& n : other.names()) add(other.get(n));
}

Catalog parse_catalog(std::string_view text, const std::string& source) { return Parser(text, source).run(); }

Catalog load_catalog_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open catalog file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_catalog(ss.str(), path);
}

std::string serialize(const PcGroup& g) {
  std::ostringstream out;
  out << "group " << g.name() << "\n";
  out << "ngens " << g.ngens() << "\n";
  bool default_names = true;
  for (int i = 0; i < g.ngens(); ++i)
    if (g.gen_names()[static_cast<std::size_t>(i)] != "x" + std::to_string(i + 1)) default_names = false;
  if (!default_names && g.ngens() > 0) {
    out << "names";
    for (const auto& n : g.gen_names()) out << ' ' << n;
    out << "\n";
  }
  for (int i = 0; i < g.ngens(); ++i) {
    Element p = g.power_relation(i);
    if (p.bits) out << "pow " << i + 1 << " = " << word_text(p) << "\n";
  }
  for (int i = 0; i < g.ngens(); ++i)
    for (int j = i + 1; j < g.ngens(); ++j) {
      Element c = g.comm_relation(i, j);
      if (c.bits) out << "comm " << i + 1 << ' ' << j + 1 << " = " << word_text(c) << "\n";
    }
  out << "end\n";
  return out.str();
}

const Catalog& shipped_catalog() {
  static const Catalog c = parse_catalog(shipped_catalog_text(), "shipped catalog");
  return c;
}

Element parse_element(const PcGroup& g, std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' '; }), s.end());
  if (s.empty()) throw std::invalid_argument("empty element");
  if (s == "1") return g.identity();
  Word w;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    auto star = s.find('*', pos);
    std::string f = s.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
    auto caret = f.find('^');
    std::string nm = f.substr(0, caret);
    int e = 1;
    if (caret != std::string::npos) {
      auto v = to_int(f.substr(caret + 1));
      if (!v) throw std::invalid_argument("invalid exponent in '" + f + "'");
      e = static_cast<int>(*v);
    }
    const auto& names = g.gen_names();
    auto it = std::find(names.begin(), names.end(), nm);
    if (it == names.end()) throw std::invalid_argument("unknown generator '" + nm + "' in " + g.name());
    w.push_back({static_cast<int>(it - names.begin()), e});
    if (star == std::string::npos) break;
    pos = star + 1;
  }
  return g.collect(w);
}

const std::vector<TowerSpec>& shipped_towers() {
  static const std::vector<TowerSpec> t = {
      {"SG256_8129", "SG128_1376", {"x1", "x2", "x3", "x4", "x5", "x6", "x7", "x5"}, "x5*x8"},
      {"SG256_8177", "SG128_1377", {"x1", "x2", "x3", "x4", "x5", "x6", "x7", "x7"}, "x7*x8"},
  };
  return t;
}

const TowerSpec* find_tower(const std::string& name) {
  for (const auto& t : shipped_towers())
    if (t.cover == name || t.base == name) return &t;
  return nullptr;
}

}  // namespace pcinv
