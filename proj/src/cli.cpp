#include "ghecke/cli.hpp"

#include "ghecke/crossed.hpp"
#include "ghecke/molien.hpp"

#include <json.hpp>
#include <openssl/evp.h>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace ghecke {

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 digest failed");
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return os.str();
}

namespace {

Json jnum(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Json jvec(const CVector& v) {
  Json a = Json::array();
  for (const auto& z : v) a.push_back(to_string(z));
  return a;
}

Json jvec(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(to_string(q));
  return a;
}

template <class T>
Json jmat(const Matrix<T>& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    a.push_back(row);
  }
  return a;
}

Json jseries(const PoincareSeries& s) {
  Json j;
  j["truncation"] = s.truncation;
  Json c = Json::array();
  for (const auto& x : s.coefficients) c.push_back(jnum(x));
  j["coefficients"] = c;
  if (s.witness) j["rational_function"] = {{"numerator", to_string(s.witness->numerator)},
                                         {"denominator", to_string(s.witness->denominator)}};
  else j["rational_function"] = nullptr;
  return j;
}

Json jsubset(const std::vector<std::size_t>& s) {
  Json a = Json::array();
  for (auto i : s) a.push_back(i + 1);
  return a;
}

std::string csv(const CMatrix& m, const std::vector<std::string>& rows, const std::vector<std::string>& cols) {
  std::string out = "module";
  for (const auto& c : cols) out += "," + c;
  out += "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += "\"" + rows[i] + "\"";
    for (std::size_t j = 0; j < m.cols(); ++j) out += "," + to_string(m(i, j));
    out += "\n";
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

PermutationGroup named_group(const std::string& name) {
  if (name.size() >= 2 && (name[0] == 'S' || name[0] == 'Z')) {
    std::size_t n = std::stoul(name.substr(1));
    return name[0] == 'S' ? PermutationGroup::symmetric(n) : PermutationGroup::cyclic(n);
  }
  throw std::invalid_argument("unknown group '" + name + "' (expected S<n> or Z<n>)");
}

FinDimAlgebra findim_algebra(const FinDimSpec& s, Json& desc) {
  desc["kind"] = s.kind;
  if (s.kind == "field") return FinDimAlgebra::field();
  if (s.kind == "matrix") {
    desc["n"] = s.n;
    return FinDimAlgebra::matrix_algebra(s.n);
  }
  desc["group"] = s.group;
  return FinDimAlgebra::group_algebra(named_group(s.group));
}

Json class_table(const ExtendedWeylGroup& g) {
  Json cls = Json::array();
  for (const auto& c : g.classes())
    cls.push_back({{"representative", g.label(c.representative)},
                   {"size", c.members.size()},
                   {"centralizer_order", c.centralizer.size()},
                   {"fixed_dim", c.fixed_dim()}});
  return cls;
}

struct Outcome {
  Json report;
  int exit = kExitOk;
  std::optional<std::string> csv;
  std::string summary;
};

Json module_summary(const FinModule& m) {
  Json j;
  j["tag"] = m.tag;
  j["dim"] = m.dim;
  try {
    CentralCharacter cc = central_character(m);
    Json orbit = Json::array();
    for (const auto& p : cc.orbit) orbit.push_back(jvec(p));
    j["central_character"] = orbit;
    j["real_central_character"] = cc.real;
  } catch (const std::runtime_error& ex) {
    j["central_character"] = ex.what();
  }
  j["tempered"] = is_tempered(m);
  j["restriction_character"] = jvec(restriction_character(m));
  return j;
}

FinModule find_delta(const AlgebraPtr& alg, const InduceSpec& spec, const std::vector<CatalogEntry>& catalog) {
  for (auto& m : one_dim_modules(levi_algebra(*alg, spec.subset)))
    if (m.tag == spec.delta) return m;
  for (const auto& e : catalog)
    if (e.subset == spec.subset && e.note == spec.delta) return e.delta;
  throw std::invalid_argument("no module '" + spec.delta + "' for the Levi algebra of P");
}

Outcome execute(const std::string& command, const RunConfig& cfg, const std::string& catalog_text,
                const std::string& catalog_name) {
  Outcome o;
  Json& r = o.report;
  r["schema"] = kReportSchema;
  r["command"] = command;
  auto datum_json = [&](const RootDatum& d) {
    return Json{{"type", d.label()}, {"rank", d.rank()}, {"ambient_dim", d.ambient_dim()}};
  };
  auto load_catalog = [&](const AlgebraPtr& alg) {
    return catalog_text.empty() ? std::vector<CatalogEntry>{} : parse_catalog(catalog_text, alg, catalog_name);
  };

  if (command == "datum") {
    RootDatum d = cfg.datum();
    r["datum"] = datum_json(d);
    r["gram"] = jmat(d.gram());
    r["cartan"] = jmat(d.cartan());
    r["positive_roots"] = d.positive_root_count();
    r["crystallographic"] = d.crystallographic();
    r["description"] = d.describe();
    o.summary = d.label() + ": rank " + std::to_string(d.rank()) + ", " + std::to_string(d.roots().size()) + " roots";
  } else if (command == "group") {
    GroupPtr g = cfg.group();
    r["datum"] = datum_json(g->datum());
    r["order"] = g->size();
    r["weyl_order"] = g->weyl_order();
    r["gamma_order"] = g->gamma_elements().size();
    r["classes"] = class_table(*g);
    o.summary = "|W'| = " + std::to_string(g->size()) + ", " + std::to_string(g->classes().size()) + " classes";
  } else if (command == "molien") {
    GroupPtr g = cfg.group();
    r["datum"] = datum_json(g->datum());
    r["form_degree"] = cfg.molien.form_degree;
    std::vector<RMatrix> action;
    std::size_t dim = g->datum().ambient_dim();
    if (cfg.molien.class_index) {
      if (*cfg.molien.class_index >= g->classes().size()) throw std::invalid_argument("molien.class out of range");
      const auto& c = g->classes()[*cfg.molien.class_index];
      r["class"] = g->label(c.representative);
      for (auto h : c.centralizer) action.push_back(restrict_operator((*g)[h].matrix, c.fixed_basis));
      dim = c.fixed_dim();
    } else {
      r["class"] = nullptr;
      for (const auto& e : g->elements()) action.push_back(e.matrix);
    }
    auto s = molien_forms(action, dim, cfg.molien.form_degree, cfg.truncation);
    r["series"] = jseries(s);
    o.summary = "molien series through degree " + std::to_string(cfg.truncation);
  } else if (command == "hh-findim" || command == "hc-findim") {
    Json desc;
    FinDimAlgebra a = findim_algebra(cfg.findim, desc);
    desc["dim"] = a.dim();
    r["algebra"] = desc;
    r["n_max"] = cfg.n_max;
    r["chain_bound"] = cfg.chain_bound;
    std::vector<std::size_t> dims = command == "hh-findim" ? hochschild_homology(a, cfg.n_max, cfg.chain_bound)
                                                           : cyclic_homology(a, cfg.n_max, cfg.chain_bound);
    r["dimensions"] = dims;
    auto check = verify_mixed_complex(a, std::min<std::size_t>(cfg.n_max, 2), cfg.chain_bound);
    r["identities"] = {{"bb", check.bb_zero}, {"bB+Bb", check.anticommute}, {"BB", check.BB_zero}};
    if (!check.ok()) o.exit = kExitFalsified;
    std::string list;
    for (auto x : dims) list += (list.empty() ? "" : ",") + std::to_string(x);
    o.summary = std::string(command == "hh-findim" ? "HH" : "HC") + " = (" + list + ")";
  } else if (command == "crossed-census") {
    GroupPtr g = cfg.group();
    r["datum"] = datum_json(g->datum());
    HomologyCensus c = crossed_product_census(*g, cfg.n_max, cfg.truncation);
    r["truncation"] = c.truncation;
    r["n_max"] = c.n_max;
    Json classes = Json::array();
    bool euler = true;
    for (const auto& e : c.classes) {
      Json forms = Json::array();
      for (const auto& s : e.forms) forms.push_back(jseries(s));
      classes.push_back({{"representative", g->label(e.representative)},
                         {"size", e.class_size},
                         {"fixed_dim", e.fixed_dim},
                         {"euler_check", e.euler_check},
                         {"forms", forms}});
      euler = euler && e.euler_check;
    }
    r["classes"] = classes;
    Json totals = Json::array();
    for (const auto& t : c.hh_totals) {
      Json row = Json::array();
      for (const auto& x : t) row.push_back(jnum(x));
      totals.push_back(row);
    }
    r["hh_totals"] = totals;
    r["vanishing_above_rank"] = c.vanishing_above_rank;
    r["hp"] = {{"hp0", c.hp0}, {"hp1", c.hp1}};
    if (!c.vanishing_above_rank || !euler || c.hp0 != g->classes().size()) o.exit = kExitFalsified;
    o.summary = "HP = (" + std::to_string(c.hp0) + ", " + std::to_string(c.hp1) + ")";
  } else if (command == "hp") {
    AlgebraPtr alg = cfg.algebra();
    auto hp = hp_census_hecke(*alg);
    r["datum"] = datum_json(alg->datum());
    r["k"] = jvec(hp.parameters.values);
    r["hp0"] = hp.hp0;
    r["hp1"] = hp.hp1;
    o.summary = "HP = (" + std::to_string(hp.hp0) + ", " + std::to_string(hp.hp1) + ")";
  } else if (command == "induce") {
    AlgebraPtr alg = cfg.algebra();
    auto catalog = load_catalog(alg);
    InductionDatum xi{cfg.induce.subset, find_delta(alg, cfg.induce, catalog),
                      make_complex(cfg.induce.lambda_re, cfg.induce.lambda_im)};
    FinModule v = induce(alg, xi, cfg.induce.extended);
    r["datum"] = datum_json(alg->datum());
    r["k"] = jvec(alg->parameters().values);
    r["P"] = jsubset(xi.subset);
    r["lambda"] = jvec(xi.lambda);
    r["extended"] = cfg.induce.extended;
    r["module"] = module_summary(v);
    r["irreducible"] = is_irreducible(v);
    try {
      Json parts = Json::array();
      for (const auto& p : decompose(v)) {
        Json s = module_summary(p.module);
        s["multiplicity"] = p.multiplicity;
        parts.push_back(s);
      }
      r["decomposition"] = parts;
    } catch (const FieldExtensionRequired& ex) {
      r["decomposition"] = {{"field_extension_required", to_string(ex.minimal_polynomial())}};
    }
    o.summary = v.tag + ": dim " + std::to_string(v.dim);
  } else if (command == "irr0" || command == "verify-basis") {
    AlgebraPtr alg = cfg.algebra();
    auto catalog = load_catalog(alg);
    const ExtendedWeylGroup& G = alg->group();
    r["datum"] = datum_json(alg->datum());
    r["k"] = jvec(alg->parameters().values);
    BasisReport b = verify_basis_theorem(alg, catalog);
    Json entries = Json::array();
    std::vector<std::string> row_labels;
    for (const auto& e : b.census.entries) {
      Json j = module_summary(e.module);
      j["P"] = jsubset(e.subset);
      j["delta"] = e.delta_tag;
      j["cc_norm_squared"] = to_string(e.cc_norm);
      entries.push_back(j);
      row_labels.push_back(e.module.tag);
    }
    r["warnings"] = b.census.warnings;
    r["association_classes"] = b.census.association_classes.size();
    r["irr0"] = entries;
    if (command == "verify-basis") {
      std::vector<std::string> col_labels;
      for (const auto& c : G.classes()) col_labels.push_back(G.label(c.representative));
      r["classes"] = col_labels;
      r["irr0_count"] = b.irr0_count;
      r["class_count"] = b.class_count;
      r["hp"] = {{"hp0", b.hp0}, {"hp1", b.hp1}};
      r["trace_matrix"] = jmat(b.trace_matrix);
      r["rank"] = b.rank;
      r["pass"] = b.pass;
      o.csv = csv(b.trace_matrix, row_labels, col_labels);
      if (!b.pass) o.exit = kExitFalsified;
      o.summary = std::string(b.pass ? "pass" : "FALSIFIED") + ": #Irr0 = " + std::to_string(b.irr0_count) +
                  ", #classes = " + std::to_string(b.class_count) + ", rank = " + std::to_string(b.rank);
    } else {
      o.summary = std::to_string(b.irr0_count) + " modules in Irr0";
    }
  } else {
    throw std::invalid_argument("unknown command '" + command + "'");
  }
  return o;
}

}  // namespace

int run(const CliOptions& options, std::ostream& out, std::ostream& err) {
  try {
    std::string config_text;
    RunConfig cfg;
    if (options.config_path) {
      config_text = read_file(*options.config_path);
      cfg = parse_config(config_text, *options.config_path);
    }
    std::string command = options.command.empty() ? cfg.command : options.command;
    if (command.empty()) throw std::invalid_argument("no command given (argument or run.command)");
    if (options.truncation) cfg.truncation = *options.truncation;
    if (options.max_dim) cfg.max_dim = *options.max_dim;
    if (options.k_override) cfg.k = parse_parameter_list(*options.k_override, cfg.datum().rank());

    std::string catalog_text, catalog_name;
    if (options.catalog_path) {
      catalog_name = *options.catalog_path;
    } else if (cfg.catalog) {
      fs::path p = *cfg.catalog;
      if (p.is_relative() && options.config_path) p = fs::path(*options.config_path).parent_path() / p;
      catalog_name = p.string();
    }
    if (!catalog_name.empty()) catalog_text = read_file(catalog_name);

    std::ostringstream key;
    key << kReportSchema << '\n' << command << '\n' << config_text << '\n'
        << "truncation=" << cfg.truncation << ";max_dim=" << cfg.max_dim << ";k=";
    if (cfg.k)
      for (const auto& q : *cfg.k) key << to_string(q) << ',';
    key << '\n' << catalog_text;
    const std::string digest = sha256_hex(key.str());

    fs::path out_dir = options.out_dir;
    fs::create_directories(options.use_cache ? out_dir / "cache" : out_dir);
    const fs::path cache_file = out_dir / "cache" / (digest + ".json");

    Outcome o;
    if (options.use_cache && fs::exists(cache_file)) {
      Json cached = Json::parse(read_file(cache_file.string()));
      o.report = cached.at("report");
      o.exit = cached.at("exit").get<int>();
      if (!cached.at("csv").is_null()) o.csv = cached.at("csv").get<std::string>();
      o.summary = cached.at("summary").get<std::string>();
      err << "cache hit " << digest << "\n";
    } else {
      o = execute(command, cfg, catalog_text, catalog_name);
      if (options.use_cache) {
        Json cached;
        cached["exit"] = o.exit;
        cached["summary"] = o.summary;
        cached["csv"] = o.csv ? Json(*o.csv) : Json(nullptr);
        cached["report"] = o.report;
        write_file(cache_file, cached.dump(2) + "\n");
        err << "cache miss " << digest << "\n";
      }
    }
    write_file(out_dir / (command + ".json"), o.report.dump(2) + "\n");
    if (o.csv) write_file(out_dir / (command + ".csv"), *o.csv);
    out << o.summary << "\n";
    return o.exit;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitError;
  }
}

}  // namespace ghecke
