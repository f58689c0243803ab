// Algebra description files.
//
//   # comment                    ignored, as are blank lines
//   field Q | F<p>               required, first directive
//   vars x,y,z                   required, before any polynomial
//   z-var z                      optional distinguished variable
//   gen <weight> <poly>          one per generator
//   adjoin <m> <k> <poly>        h with h^k in I_(k m); pairs G with G (.) O[h W^m]
//   expect <key> <value>         recorded expectations (tau, tau_R, tau_R_relative)
#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "reestau/parse.hpp"
#include "reestau/rees.hpp"

namespace reestau {

struct Adjoin {
  Poly h;
  std::uint32_t weight;
  std::uint32_t power;
};

struct AlgFile {
  std::string name;
  RingPtr ring;
  ReesAlgebra algebra{nullptr};
  std::vector<Adjoin> adjoins;
  std::map<std::string, std::string> expect;
};

namespace detail {

inline std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  return out;
}

inline std::uint32_t parse_positive(const std::string& s, const std::string& what) {
  if (s.empty() || s.size() > 9 || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(c); }))
    throw Error(what + " must be a positive integer, got '" + s + "'");
  auto v = static_cast<std::uint32_t>(std::stoul(s));
  if (v == 0) throw Error(what + " must be positive");
  return v;
}

inline FieldSpec parse_field(const std::string& s) {
  if (s == "Q") return FieldSpec::rationals();
  if (s.size() > 1 && s[0] == 'F') return FieldSpec::prime(parse_positive(s.substr(1), "characteristic"));
  throw Error("unknown field '" + s + "' (expected Q or F<p>)");
}

}  // namespace detail

inline AlgFile parse_alg_text(std::string_view text, std::string name = "<input>") {
  AlgFile out;
  out.name = std::move(name);
  std::optional<FieldSpec> field;
  std::vector<std::string> vars;
  std::optional<std::string> zvar;
  struct Pending {
    std::size_t line;
    std::string kind;
    std::uint32_t a, b;
    std::string poly;
  };
  std::vector<Pending> pending;

  std::size_t lineno = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  auto fail = [&](const std::string& msg) -> ParseError {
    return ParseError(out.name + ":" + std::to_string(lineno) + ": " + msg, lineno);
  };
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = detail::trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    std::size_t sp = line.find_first_of(" \t");
    std::string key = line.substr(0, sp);
    std::string rest = sp == std::string::npos ? "" : detail::trim(line.substr(sp));
    try {
      if (key == "field") {
        if (field) throw Error("duplicate field line");
        field = detail::parse_field(rest);
      } else if (key == "vars") {
        if (!vars.empty()) throw Error("duplicate vars line");
        vars = detail::split(rest, ',');
        if (vars.size() == 1 && vars[0].empty()) throw Error("vars line lists no variables");
      } else if (key == "z-var") {
        if (zvar) throw Error("duplicate z-var line");
        zvar = rest;
      } else if (key == "gen" || key == "adjoin") {
        std::istringstream ws(rest);
        std::string w, k;
        ws >> w;
        if (key == "adjoin") ws >> k;
        std::string poly;
        std::getline(ws, poly);
        Pending p{lineno, key, detail::parse_positive(w, "weight"), 1, detail::trim(poly)};
        if (key == "adjoin") p.b = detail::parse_positive(k, "power");
        if (p.poly.empty()) throw Error("missing polynomial");
        pending.push_back(std::move(p));
      } else if (key == "expect") {
        auto parts = detail::split(rest, ' ');
        if (parts.size() != 2) throw Error("expect needs a key and a value");
        out.expect[parts[0]] = parts[1];
      } else {
        throw Error("unknown directive '" + key + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw fail(e.what());
    }
  }
  lineno = 0;
  if (!field) throw fail("missing 'field' line");
  if (vars.empty()) throw fail("missing 'vars' line");
  try {
    out.ring = make_ring(*field, vars, zvar);
  } catch (const Error& e) {
    throw fail(e.what());
  }
  out.algebra = ReesAlgebra(out.ring);
  for (const auto& p : pending) {
    lineno = p.line;
    Poly f(out.ring);
    try {
      f = parse_poly(p.poly, out.ring);
    } catch (const Error& e) {
      throw fail(e.what());
    }
    if (p.kind == "gen") out.algebra.add(f, p.a);
    else out.adjoins.push_back({f, p.a, p.b});
  }
  return out;
}

inline AlgFile load_alg_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_alg_text(buf.str(), path.filename().string());
}

// Every *.alg file under `dir`, sorted by file name.
inline std::vector<AlgFile> load_suite(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw Error("not a directory: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".alg") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<AlgFile> out;
  for (const auto& f : files) out.push_back(load_alg_file(f));
  return out;
}

}  // namespace reestau
