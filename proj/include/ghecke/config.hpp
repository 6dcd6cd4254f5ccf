#pragma once

#include "ghecke/census.hpp"
#include "ghecke/findim.hpp"
#include "ghecke/hecke.hpp"

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ghecke {

/// Parse or validation failure with a source position (1-based line and column).
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& file, std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

/// Generic value of the block grammar: string, number, bare word, list or key/value block.
struct ConfigValue {
  struct Entry;
  enum class Kind { String, Number, Word, List, Block };

  Kind kind = Kind::Word;
  std::string text;  // String, Word, and the literal of Number
  Rational number;
  std::vector<ConfigValue> items;                  // List
  std::shared_ptr<std::vector<Entry>> entries;     // Block
  std::size_t line = 0, column = 0;
};

struct ConfigValue::Entry {
  std::string key;
  ConfigValue value;
  std::size_t line = 0, column = 0;
};

/// Top-level document: a sequence of named blocks.
struct ConfigDocument {
  std::string file;
  std::vector<ConfigValue::Entry> blocks;
};

ConfigDocument parse_document(const std::string& text, const std::string& file = "<config>");

struct FinDimSpec {
  std::string kind = "field";  // field | matrix | group
  std::size_t n = 1;           // matrix size
  std::string group = "S2";    // S<n> or Z<n>
};

struct InduceSpec {
  std::vector<std::size_t> subset;  // 0-based
  std::string delta = "triv";
  std::vector<Rational> lambda_re, lambda_im;
  bool extended = true;
};

struct MolienSpec {
  std::optional<std::size_t> class_index;  // 0-based; all classes when empty
  std::size_t form_degree = 0;
};

struct RunConfig {
  std::string type = "A1";
  std::size_t ambient = 0;  // 0: rank of the type
  std::optional<RMatrix> gram;
  std::optional<std::vector<Rational>> k;
  std::vector<DiagramAutomorphism> gamma;
  std::string command;
  std::size_t truncation = 16;
  std::size_t max_dim = ExtendedWeylGroup::kDefaultBound;
  std::size_t chain_bound = kDefaultChainBound;
  std::size_t n_max = 2;
  std::optional<std::string> catalog;
  FinDimSpec findim;
  InduceSpec induce;
  MolienSpec molien;

  RootDatum datum() const;
  GroupPtr group() const;
  /// Throws std::invalid_argument when no parameters were configured.
  AlgebraPtr algebra() const;
};

RunConfig parse_config(const std::string& text, const std::string& file = "<config>");

/// Parses "1,3/2,1" (one value per simple root) or a single constant value.
std::vector<Rational> parse_parameter_list(const std::string& text, std::size_t rank);

/// Catalog blocks: entry { P=[1,2], dim=2, note="...", s1=[[..]], .., x1=[[..]], .. } with indices
/// relative to P: s_a and x_a refer to the a-th simple root of P.
std::vector<CatalogEntry> parse_catalog(const std::string& text, const AlgebraPtr& alg,
                                        const std::string& file = "<catalog>");

}  // namespace ghecke
