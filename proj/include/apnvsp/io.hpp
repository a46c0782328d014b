#pragma once

// LUT text format and the built-in function catalog.
//
//   # comment lines start with '#'
//   n m
//   F(0) F(1) ... F(2^n - 1)     (decimal or 0x-prefixed hex, any whitespace)
//
// Canonical output is decimal with 16 entries per line.

#include <cstdint>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "apnvsp/errors.hpp"
#include "apnvsp/field.hpp"
#include "apnvsp/vbf.hpp"

namespace apnvsp {

namespace detail {

inline std::uint64_t parse_number(const std::string& tok) {
  std::size_t used = 0;
  std::uint64_t v = 0;
  try {
    if (tok.size() > 2 && tok[0] == '0' && (tok[1] == 'x' || tok[1] == 'X')) {
      v = std::stoull(tok.substr(2), &used, 16);
      used += 2;
    } else {
      if (tok.empty() || tok[0] == '-' || tok[0] == '+') throw InputError("bad number");
      v = std::stoull(tok, &used, 10);
    }
  } catch (const std::exception&) {
    throw InputError("malformed number '" + tok + "'");
  }
  if (used != tok.size()) throw InputError("malformed number '" + tok + "'");
  return v;
}

}  // namespace detail

inline Vbf parse_lut(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  bool have_header = false;
  unsigned n = 0;
  unsigned m = 0;
  std::vector<Mask> table;
  std::uint64_t expected = 0;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::string tok;
    if (!have_header) {
      std::vector<std::string> parts;
      while (ls >> tok) parts.push_back(tok);
      if (parts.size() != 2) throw InputError("header must be 'n m'");
      const auto hn = detail::parse_number(parts[0]);
      const auto hm = detail::parse_number(parts[1]);
      if (hn == 0 || hn > kMaxWidth || hm == 0 || hm > kMaxWidth) throw InputError("header widths must be in [1, 16]");
      n = static_cast<unsigned>(hn);
      m = static_cast<unsigned>(hm);
      expected = std::uint64_t{1} << n;
      table.reserve(expected);
      have_header = true;
      continue;
    }
    while (ls >> tok) {
      const auto v = detail::parse_number(tok);
      if (v > full_mask(m)) throw InputError("entry " + tok + " does not fit in " + std::to_string(m) + " bits");
      if (table.size() == expected) throw InputError("more than 2^n entries");
      table.push_back(static_cast<Mask>(v));
    }
  }
  if (!have_header) throw InputError("missing 'n m' header");
  if (table.size() != expected) {
    throw InputError("expected " + std::to_string(expected) + " entries, got " + std::to_string(table.size()));
  }
  return Vbf(n, m, std::move(table));
}

inline std::string serialize_lut(const Vbf& f) {
  std::ostringstream os;
  os << f.n() << ' ' << f.m() << '\n';
  const auto t = f.table();
  for (std::size_t x = 0; x < t.size(); ++x) {
    os << t[x];
    os << ((x % 16 == 15 || x + 1 == t.size()) ? '\n' : ' ');
  }
  return os.str();
}

inline Vbf read_lut_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_lut(ss.str());
}

struct CatalogEntry {
  std::string name;          // cube, gold_k or kasami_k
  unsigned n = 0;
  std::uint32_t modulus = 0;
  std::uint64_t exponent = 0;
  bool apn_condition = false;  // gcd(k, n) = 1
  Vbf f;
};

/// Monomials over GF(2^n) with the default modulus: cube = gold_1 = x^3,
/// gold_k = x^(2^k + 1), kasami_k = x^(2^(2k) - 2^k + 1).
inline CatalogEntry catalog(const std::string& name, unsigned n) {
  check_width(n);
  unsigned k = 1;
  bool kasami = false;
  if (name == "cube") {
    k = 1;
  } else if (name.rfind("gold_", 0) == 0 || name.rfind("kasami_", 0) == 0) {
    kasami = name[0] == 'k';
    const auto v = detail::parse_number(name.substr(name.find('_') + 1));
    if (v == 0 || v >= n) throw InputError("catalog parameter must be in [1, n-1]");
    k = static_cast<unsigned>(v);
  } else {
    throw InputError("unknown catalog function '" + name + "' (cube, gold_k, kasami_k)");
  }
  const std::uint64_t e = kasami ? (std::uint64_t{1} << (2 * k)) - (std::uint64_t{1} << k) + 1
                                 : (std::uint64_t{1} << k) + 1;
  const FieldSpec spec(n);
  return {name, n, spec.modulus(), e, std::gcd(k, n) == 1, monomial_vbf(spec, e)};
}

/// "catalog:<name>:<n>"
inline CatalogEntry parse_catalog_spec(const std::string& spec) {
  const auto first = spec.find(':');
  const auto second = spec.find(':', first + 1);
  if (spec.rfind("catalog:", 0) != 0 || second == std::string::npos) {
    throw InputError("catalog spec must look like catalog:<name>:<n>");
  }
  const auto n = detail::parse_number(spec.substr(second + 1));
  if (n == 0 || n > kMaxWidth) throw InputError("catalog width must be in [1, 16]");
  return catalog(spec.substr(first + 1, second - first - 1), static_cast<unsigned>(n));
}

}  // namespace apnvsp
