#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pcinv/pcgroup.hpp"

namespace pcinv {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string source, int line, const std::string& msg)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + msg), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class UnknownGroup : public std::out_of_range {
 public:
  explicit UnknownGroup(const std::string& name) : std::out_of_range("unknown group '" + name + "'") {}
};

class Catalog {
 public:
  void add(PcGroupPtr g);
  const PcGroupPtr& get(const std::string& name) const;
  bool contains(const std::string& name) const { return groups_.count(name) > 0; }
  const std::vector<std::string>& names() const { return order_; }
  // Entries of `other` replace same-named entries here.
  void merge(const Catalog& other);

 private:
  std::map<std::string, PcGroupPtr> groups_;
  std::vector<std::string> order_;
};

Catalog parse_catalog(std::string_view text, const std::string& source = "<input>");
Catalog load_catalog_file(const std::string& path);
std::string serialize(const PcGroup& g);

std::string_view shipped_catalog_text();
const Catalog& shipped_catalog();

// Parses "x5*x8", "x1^-1*x2" or "1" using the group's generator names.
Element parse_element(const PcGroup& g, std::string_view text);

// Surjection from a shipped cover stage onto the stage below it, with the
// kernel generator sigma.
struct TowerSpec {
  std::string cover;
  std::string base;
  std::vector<std::string> images;
  std::string sigma;
};

const std::vector<TowerSpec>& shipped_towers();
// Tower whose cover or base has this name, if any.
const TowerSpec* find_tower(const std::string& name);

}  // namespace pcinv
