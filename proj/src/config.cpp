#include "ghecke/config.hpp"

#include <cctype>
#include <set>

namespace ghecke {

ConfigError::ConfigError(const std::string& file, std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error(file + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

class Parser {
 public:
  Parser(const std::string& text, std::string file) : s_(text), file_(std::move(file)) {}

  ConfigDocument document() {
    ConfigDocument doc;
    doc.file = file_;
    skip();
    while (pos_ < s_.size()) {
      ConfigValue::Entry e;
      e.line = line_;
      e.column = col_;
      e.key = identifier();
      skip();
      if (peek() != '{') fail("expected '{' after block name '" + e.key + "'");
      e.value = value();
      doc.blocks.push_back(std::move(e));
      skip();
    }
    return doc;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ConfigError(file_, line_, col_, msg); }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  void advance() {
    if (s_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip() {
    while (pos_ < s_.size()) {
      if (std::isspace(static_cast<unsigned char>(s_[pos_]))) {
        advance();
      } else if (s_[pos_] == '#') {
        while (pos_ < s_.size() && s_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-'; }

  std::string identifier() {
    if (!std::isalpha(static_cast<unsigned char>(peek())) && peek() != '_') fail("expected an identifier");
    std::string out;
    while (ident_char(peek())) {
      out += peek();
      advance();
    }
    return out;
  }

  ConfigValue value() {
    skip();
    ConfigValue v;
    v.line = line_;
    v.column = col_;
    const char c = peek();
    if (c == '{') {
      advance();
      v.kind = ConfigValue::Kind::Block;
      v.entries = std::make_shared<std::vector<ConfigValue::Entry>>();
      skip();
      while (peek() != '}') {
        if (pos_ >= s_.size()) fail("unterminated block");
        ConfigValue::Entry e;
        e.line = line_;
        e.column = col_;
        e.key = identifier();
        skip();
        if (peek() != '=') fail("expected '=' after key '" + e.key + "'");
        advance();
        e.value = value();
        v.entries->push_back(std::move(e));
        skip();
        if (peek() == ',') {
          advance();
          skip();
        }
      }
      advance();
    } else if (c == '[') {
      advance();
      v.kind = ConfigValue::Kind::List;
      skip();
      while (peek() != ']') {
        if (pos_ >= s_.size()) fail("unterminated list");
        v.items.push_back(value());
        skip();
        if (peek() == ',') {
          advance();
          skip();
        } else if (peek() != ']') {
          fail("expected ',' or ']' in list");
        }
      }
      advance();
    } else if (c == '"') {
      advance();
      v.kind = ConfigValue::Kind::String;
      while (peek() != '"') {
        if (pos_ >= s_.size() || peek() == '\n') fail("unterminated string");
        v.text += peek();
        advance();
      }
      advance();
    } else if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
      v.kind = ConfigValue::Kind::Number;
      while (peek() == '-' || peek() == '+' || peek() == '/' || std::isdigit(static_cast<unsigned char>(peek()))) {
        v.text += peek();
        advance();
      }
      try {
        v.number = parse_rational(v.text);
      } catch (const std::exception&) {
        throw ConfigError(file_, v.line, v.column, "malformed number '" + v.text + "'");
      }
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      v.kind = ConfigValue::Kind::Word;
      v.text = identifier();
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
    return v;
  }

  const std::string& s_;
  std::string file_;
  std::size_t pos_ = 0, line_ = 1, col_ = 1;
};

// Typed accessors that report the position of the offending value.
struct Reader {
  std::string file;

  [[noreturn]] void fail(const ConfigValue& v, const std::string& msg) const {
    throw ConfigError(file, v.line, v.column, msg);
  }
  [[noreturn]] void fail(const ConfigValue::Entry& e, const std::string& msg) const {
    throw ConfigError(file, e.line, e.column, msg);
  }

  const std::vector<ConfigValue::Entry>& block(const ConfigValue& v, const std::string& what) const {
    if (v.kind != ConfigValue::Kind::Block) fail(v, what + " must be a { ... } block");
    return *v.entries;
  }

  std::string string(const ConfigValue& v, const std::string& what) const {
    if (v.kind != ConfigValue::Kind::String && v.kind != ConfigValue::Kind::Word) fail(v, what + " must be a string");
    return v.text;
  }

  Rational rational(const ConfigValue& v, const std::string& what) const {
    if (v.kind != ConfigValue::Kind::Number) fail(v, what + " must be a rational number");
    return v.number;
  }

  std::size_t natural(const ConfigValue& v, const std::string& what) const {
    Rational q = rational(v, what);
    if (q.get_den() != 1 || sgn(q) < 0 || !q.get_num().fits_ulong_p()) fail(v, what + " must be a non-negative integer");
    return q.get_num().get_ui();
  }

  bool boolean(const ConfigValue& v, const std::string& what) const {
    if (v.kind == ConfigValue::Kind::Word && (v.text == "true" || v.text == "false")) return v.text == "true";
    fail(v, what + " must be true or false");
  }

  std::vector<Rational> rationals(const ConfigValue& v, const std::string& what) const {
    if (v.kind != ConfigValue::Kind::List) fail(v, what + " must be a list");
    std::vector<Rational> out;
    for (const auto& x : v.items) out.push_back(rational(x, what + " entry"));
    return out;
  }

  std::vector<std::size_t> indices(const ConfigValue& v, const std::string& what, std::size_t limit) const {
    if (v.kind != ConfigValue::Kind::List) fail(v, what + " must be a list");
    std::vector<std::size_t> out;
    for (const auto& x : v.items) {
      std::size_t i = natural(x, what + " entry");
      if (i == 0 || i > limit) fail(x, what + " entry " + std::to_string(i) + " outside 1.." + std::to_string(limit));
      out.push_back(i - 1);
    }
    return out;
  }

  RMatrix matrix(const ConfigValue& v, const std::string& what) const {
    if (v.kind != ConfigValue::Kind::List) fail(v, what + " must be a list of rows");
    std::vector<std::vector<Rational>> rows;
    for (const auto& r : v.items) {
      rows.push_back(rationals(r, what + " row"));
      if (rows.back().size() != rows.front().size()) fail(r, what + " rows have different lengths");
    }
    return RMatrix::from_rows(rows);
  }
};

std::size_t indexed_key(const std::string& key, const std::string& prefix) {
  if (key.size() <= prefix.size() || key.compare(0, prefix.size(), prefix) != 0) return 0;
  std::size_t i = 0;
  for (std::size_t p = prefix.size(); p < key.size(); ++p) {
    if (!std::isdigit(static_cast<unsigned char>(key[p]))) return 0;
    i = i * 10 + static_cast<std::size_t>(key[p] - '0');
  }
  return i;
}

const std::set<std::string> kCommands = {"datum", "group", "molien", "hh-findim", "hc-findim", "crossed-census",
                                         "hp", "induce", "irr0", "verify-basis"};

}  // namespace

ConfigDocument parse_document(const std::string& text, const std::string& file) {
  return Parser(text, file).document();
}

RunConfig parse_config(const std::string& text, const std::string& file) {
  ConfigDocument doc = parse_document(text, file);
  Reader rd{file};
  RunConfig cfg;
  std::set<std::string> seen;
  struct Pending {
    const ConfigValue::Entry* k = nullptr;
    const ConfigValue::Entry* gamma = nullptr;
    const ConfigValue::Entry* induce = nullptr;
  } pending;

  for (const auto& b : doc.blocks) {
    if (!seen.insert(b.key).second) rd.fail(b, "duplicate block '" + b.key + "'");
    const auto& entries = rd.block(b.value, b.key);
    if (b.key == "datum") {
      for (const auto& e : entries) {
        if (e.key == "type") cfg.type = rd.string(e.value, "datum.type");
        else if (e.key == "ambient") cfg.ambient = rd.natural(e.value, "datum.ambient");
        else if (e.key == "gram") cfg.gram = rd.matrix(e.value, "datum.gram");
        else if (e.key == "k") pending.k = &e;
        else rd.fail(e, "unknown key 'datum." + e.key + "'");
      }
    } else if (b.key == "gamma") {
      pending.gamma = &b;
    } else if (b.key == "run") {
      for (const auto& e : entries) {
        if (e.key == "command") {
          cfg.command = rd.string(e.value, "run.command");
          if (!kCommands.count(cfg.command)) rd.fail(e.value, "unknown command '" + cfg.command + "'");
        } else if (e.key == "truncation") cfg.truncation = rd.natural(e.value, "run.truncation");
        else if (e.key == "max_dim") cfg.max_dim = rd.natural(e.value, "run.max_dim");
        else if (e.key == "chain_bound") cfg.chain_bound = rd.natural(e.value, "run.chain_bound");
        else if (e.key == "n_max") cfg.n_max = rd.natural(e.value, "run.n_max");
        else if (e.key == "catalog") cfg.catalog = rd.string(e.value, "run.catalog");
        else rd.fail(e, "unknown key 'run." + e.key + "'");
      }
    } else if (b.key == "findim") {
      for (const auto& e : entries) {
        if (e.key == "kind") {
          cfg.findim.kind = rd.string(e.value, "findim.kind");
          if (cfg.findim.kind != "field" && cfg.findim.kind != "matrix" && cfg.findim.kind != "group")
            rd.fail(e.value, "findim.kind must be field, matrix or group");
        } else if (e.key == "n") cfg.findim.n = rd.natural(e.value, "findim.n");
        else if (e.key == "group") cfg.findim.group = rd.string(e.value, "findim.group");
        else rd.fail(e, "unknown key 'findim." + e.key + "'");
      }
    } else if (b.key == "induce") {
      pending.induce = &b;
    } else if (b.key == "molien") {
      for (const auto& e : entries) {
        if (e.key == "class") {
          std::size_t c = rd.natural(e.value, "molien.class");
          if (c == 0) rd.fail(e.value, "molien.class is 1-based");
          cfg.molien.class_index = c - 1;
        } else if (e.key == "form_degree") cfg.molien.form_degree = rd.natural(e.value, "molien.form_degree");
        else rd.fail(e, "unknown key 'molien." + e.key + "'");
      }
    } else {
      rd.fail(b, "unknown block '" + b.key + "'");
    }
  }

  RootDatum d;
  try {
    d = cfg.datum();
  } catch (const std::invalid_argument& ex) {
    const ConfigValue::Entry* where = nullptr;
    for (const auto& b : doc.blocks)
      if (b.key == "datum") where = &b;
    throw ConfigError(file, where ? where->line : 1, where ? where->column : 1, ex.what());
  }
  const std::size_t r = d.rank(), n = d.ambient_dim();

  if (pending.k) {
    const ConfigValue& v = pending.k->value;
    if (v.kind == ConfigValue::Kind::Number) {
      cfg.k = std::vector<Rational>(r, v.number);
    } else {
      std::vector<std::optional<Rational>> ks(r);
      for (const auto& e : rd.block(v, "datum.k")) {
        std::size_t i = indexed_key(e.key, "alpha");
        if (i == 0 || i > r) rd.fail(e, "unknown parameter '" + e.key + "' (expected alpha1..alpha" + std::to_string(r) + ")");
        ks[i - 1] = rd.rational(e.value, "datum.k." + e.key);
      }
      std::vector<Rational> out;
      for (std::size_t i = 0; i < r; ++i) {
        if (!ks[i]) rd.fail(v, "missing parameter alpha" + std::to_string(i + 1));
        out.push_back(*ks[i]);
      }
      cfg.k = out;
    }
  }

  if (pending.gamma) {
    std::map<std::size_t, DiagramAutomorphism> gens;
    for (const auto& e : *pending.gamma->value.entries) {
      std::size_t i = indexed_key(e.key, "g");
      if (i == 0) rd.fail(e, "gamma generators are named g1, g2, ...");
      DiagramAutomorphism g;
      bool has_perm = false, has_matrix = false;
      for (const auto& f : rd.block(e.value, "gamma." + e.key)) {
        if (f.key == "perm") {
          g.perm = rd.indices(f.value, "gamma." + e.key + ".perm", r);
          if (g.perm.size() != r) rd.fail(f.value, "perm must list " + std::to_string(r) + " images");
          has_perm = true;
        } else if (f.key == "matrix") {
          g.matrix = rd.matrix(f.value, "gamma." + e.key + ".matrix");
          if (g.matrix.rows() != n || g.matrix.cols() != n)
            rd.fail(f.value, "matrix must be " + std::to_string(n) + "x" + std::to_string(n));
          has_matrix = true;
        } else {
          rd.fail(f, "unknown key 'gamma." + e.key + "." + f.key + "'");
        }
      }
      if (!has_perm || !has_matrix) rd.fail(e, "gamma." + e.key + " needs perm and matrix");
      try {
        validate_automorphism(d, g);
      } catch (const std::invalid_argument& ex) {
        rd.fail(e, ex.what());
      }
      if (!gens.emplace(i, std::move(g)).second) rd.fail(e, "duplicate generator " + e.key);
    }
    std::size_t expect = 1;
    for (auto& [i, g] : gens) {
      if (i != expect++) rd.fail(*pending.gamma, "gamma generators must be numbered consecutively from g1");
      cfg.gamma.push_back(std::move(g));
    }
  }

  if (pending.induce) {
    for (const auto& e : *pending.induce->value.entries) {
      if (e.key == "P") {
        cfg.induce.subset = rd.indices(e.value, "induce.P", r);
        std::sort(cfg.induce.subset.begin(), cfg.induce.subset.end());
      } else if (e.key == "delta") cfg.induce.delta = rd.string(e.value, "induce.delta");
      else if (e.key == "lambda_re" || e.key == "lambda_im") {
        auto v = rd.rationals(e.value, "induce." + e.key);
        if (v.size() != n) rd.fail(e.value, "induce." + e.key + " must have " + std::to_string(n) + " entries");
        (e.key == "lambda_re" ? cfg.induce.lambda_re : cfg.induce.lambda_im) = std::move(v);
      } else if (e.key == "extended") cfg.induce.extended = rd.boolean(e.value, "induce.extended");
      else rd.fail(e, "unknown key 'induce." + e.key + "'");
    }
  }
  if (cfg.induce.lambda_re.empty()) cfg.induce.lambda_re.assign(n, Rational(0));
  if (cfg.induce.lambda_im.empty()) cfg.induce.lambda_im.assign(n, Rational(0));
  return cfg;
}

RootDatum RunConfig::datum() const {
  std::size_t dim = ambient;
  if (dim == 0) {
    // Rank of the label alone: build in a generous ambient space, then rebuild at that rank.
    constexpr std::size_t kProbe = 64;
    dim = RootDatum::build(type, kProbe).rank();
  }
  RootDatum base = RootDatum::build(type, dim);
  if (!gram) return base;
  return RootDatum::from_gram(type, *gram, base.rank());
}

GroupPtr RunConfig::group() const { return ExtendedWeylGroup::enumerate(datum(), gamma, max_dim); }

AlgebraPtr RunConfig::algebra() const {
  if (!k) throw std::invalid_argument("this command needs parameters: set datum.k or --k-override");
  return HeckeAlgebra::create(group(), ParameterMap{*k});
}

std::vector<Rational> parse_parameter_list(const std::string& text, std::size_t rank) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    out.push_back(parse_rational(text.substr(start, end - start)));
    start = end + 1;
  }
  if (out.size() == 1) return std::vector<Rational>(rank, out.front());
  if (out.size() != rank)
    throw std::invalid_argument("parameter list has " + std::to_string(out.size()) + " values, expected " +
                                std::to_string(rank));
  return out;
}

std::vector<CatalogEntry> parse_catalog(const std::string& text, const AlgebraPtr& alg, const std::string& file) {
  ConfigDocument doc = parse_document(text, file);
  Reader rd{file};
  const std::size_t r = alg->datum().rank();
  std::vector<CatalogEntry> out;
  for (const auto& b : doc.blocks) {
    if (b.key != "entry") rd.fail(b, "catalog files contain only 'entry' blocks");
    const auto& entries = rd.block(b.value, "entry");
    std::optional<std::vector<std::size_t>> subset;
    std::optional<std::size_t> dim;
    std::string note;
    std::map<std::size_t, std::pair<const ConfigValue*, RMatrix>> refl, coords;
    for (const auto& e : entries) {
      if (e.key == "P") subset = rd.indices(e.value, "entry.P", r);
      else if (e.key == "dim") dim = rd.natural(e.value, "entry.dim");
      else if (e.key == "note") note = rd.string(e.value, "entry.note");
      else if (std::size_t i = indexed_key(e.key, "s"); i > 0) refl[i] = {&e.value, rd.matrix(e.value, e.key)};
      else if (std::size_t j = indexed_key(e.key, "x"); j > 0) coords[j] = {&e.value, rd.matrix(e.value, e.key)};
      else rd.fail(e, "unknown key 'entry." + e.key + "'");
    }
    if (!subset || !dim) rd.fail(b, "entry needs P and dim");
    std::vector<std::size_t> P = *subset;
    std::sort(P.begin(), P.end());
    if (std::adjacent_find(P.begin(), P.end()) != P.end()) rd.fail(b, "entry.P has repeated roots");
    std::vector<CMatrix> s(P.size()), x(P.size());
    for (std::size_t a = 1; a <= P.size(); ++a) {
      auto is = refl.find(a), ix = coords.find(a);
      if (is == refl.end() || ix == coords.end())
        rd.fail(b, "entry needs s" + std::to_string(a) + " and x" + std::to_string(a));
      for (const auto* m : {&is->second, &ix->second})
        if (m->second.rows() != *dim || m->second.cols() != *dim)
          rd.fail(*m->first, "generator matrices must be " + std::to_string(*dim) + "x" + std::to_string(*dim));
      s[a - 1] = complexify(is->second.second);
      x[a - 1] = complexify(ix->second.second);
    }
    if (refl.size() != P.size() || coords.size() != P.size()) rd.fail(b, "entry has generators outside P");
    try {
      FinModule delta = make_module(levi_algebra(*alg, P), std::move(s), {}, std::move(x), note.empty() ? "user" : note);
      out.push_back(CatalogEntry{P, std::move(delta), note});
    } catch (const std::exception& ex) {
      rd.fail(b, ex.what());
    }
  }
  return out;
}

}  // namespace ghecke
