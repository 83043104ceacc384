#include "strathom/io.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace strathom::io {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::istringstream in(s);
  std::vector<int> out;
  int v;
  while (in >> v) out.push_back(v);
  if (!in.eof()) throw ParseError("expected integers in '" + s + "'");
  return out;
}

long long parse_int(const std::string& s) {
  try {
    size_t pos = 0;
    const long long v = std::stoll(trim(s), &pos);
    if (pos != trim(s).size()) throw ParseError("trailing junk in '" + s + "'");
    return v;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("expected an integer in '" + s + "'");
  }
}

}  // namespace

std::string emit_complex(const StratifiedComplex& x) {
  std::ostringstream out;
  out << "strathom-complex v1\n";
  out << "n=" << x.n() << "\n";
  out << "vertices=" << x.vertex_count() << "\n";
  out << "maximal=";
  const auto& maximal = x.maximal_simplices();
  for (size_t i = 0; i < maximal.size(); ++i) {
    if (i) out << "; ";
    const auto& v = maximal[i].vertices();
    for (size_t k = 0; k < v.size(); ++k) out << (k ? " " : "") << v[k];
  }
  out << "\n";
  out << "strata=";
  // Top stratum first, the rest by (dimension, id).
  std::vector<Stratum> rest;
  for (size_t s = 0; s < x.strata().size(); ++s)
    if (static_cast<int>(s) != x.top_stratum()) rest.push_back(x.strata()[s]);
  std::sort(rest.begin(), rest.end(), [](const Stratum& a, const Stratum& b) {
    return std::tie(a.complex_dim, a.id) < std::tie(b.complex_dim, b.id);
  });
  out << x.strata()[x.top_stratum()].id << " "
      << x.strata()[x.top_stratum()].complex_dim;
  for (const auto& s : rest) out << "; " << s.id << " " << s.complex_dim;
  out << "\n";
  const auto assignment = x.singular_assignment();
  if (!assignment.empty()) {
    out << "assign=";
    bool first = true;
    for (const auto& [simplex, id] : assignment) {
      if (!first) out << "; ";
      first = false;
      const auto& v = simplex.vertices();
      for (size_t k = 0; k < v.size(); ++k) out << (k ? " " : "") << v[k];
      out << " -> " << id;
    }
    out << "\n";
  }
  return out.str();
}

StratifiedComplex parse_complex(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || trim(line) != "strathom-complex v1")
    throw ParseError("missing 'strathom-complex v1' header");

  std::map<std::string, std::string> fields;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError("expected key=value, got '" + line + "'");
    const std::string key = trim(line.substr(0, eq));
    if (fields.count(key)) throw ParseError("duplicate field '" + key + "'");
    fields[key] = trim(line.substr(eq + 1));
  }
  for (const char* required : {"n", "vertices", "maximal", "strata"})
    if (!fields.count(required))
      throw ParseError(std::string("missing field '") + required + "'");

  const int n = static_cast<int>(parse_int(fields["n"]));
  const int vertices = static_cast<int>(parse_int(fields["vertices"]));

  std::vector<Simplex> maximal;
  for (const auto& chunk : split(fields["maximal"], ';')) {
    const auto ids = parse_int_list(trim(chunk));
    if (ids.empty()) throw ParseError("empty maximal simplex");
    try {
      maximal.emplace_back(ids);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }

  std::vector<Stratum> strata;
  for (const auto& chunk : split(fields["strata"], ';')) {
    std::istringstream part(trim(chunk));
    Stratum s;
    if (!(part >> s.id >> s.complex_dim))
      throw ParseError("bad stratum '" + chunk + "'");
    strata.push_back(s);
  }

  std::map<Simplex, std::string> assignment;
  if (fields.count("assign")) {
    for (const auto& chunk : split(fields["assign"], ';')) {
      const std::string entry = trim(chunk);
      const auto arrow = entry.find("->");
      if (arrow == std::string::npos)
        throw ParseError("bad assignment '" + entry + "'");
      const auto ids = parse_int_list(trim(entry.substr(0, arrow)));
      const std::string id = trim(entry.substr(arrow + 2));
      if (ids.empty() || id.empty())
        throw ParseError("bad assignment '" + entry + "'");
      try {
        assignment[Simplex(ids)] = id;
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
      }
    }
  }

  try {
    return StratifiedComplex(vertices, std::move(maximal), n,
                             std::move(strata), std::move(assignment));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string emit_cocycle(const Cocycle& w) {
  std::ostringstream out;
  out << "strathom-cocycle v1\n";
  for (const auto& [e, v] : w.entries())
    out << "edge " << e.first << " " << e.second << " " << v << "\n";
  return out.str();
}

Cocycle parse_cocycle(const std::string& text, const StratifiedComplex& x) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || trim(line) != "strathom-cocycle v1")
    throw ParseError("missing 'strathom-cocycle v1' header");
  Cocycle w;
  std::set<std::pair<int, int>> seen;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    std::istringstream part(line);
    std::string tag;
    int a, b;
    long long v;
    if (!(part >> tag >> a >> b >> v) || tag != "edge")
      throw ParseError("bad cocycle line '" + line + "'");
    std::string extra;
    if (part >> extra) throw ParseError("trailing junk in '" + line + "'");
    const auto key = std::minmax(a, b);
    if (!seen.insert({key.first, key.second}).second)
      throw ParseError("duplicate edge " + std::to_string(a) + " " +
                       std::to_string(b));
    if (!x.has_simplex(Simplex({a, b})))
      throw ParseError("cocycle edge " + std::to_string(a) + " " +
                       std::to_string(b) + " is not an edge of the complex");
    w.set(a, b, v);
  }
  require_valid_cocycle(x, w);
  return w;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

std::string content_hash(const std::string& bytes) {
  uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

namespace {

json torsion_to_json(const std::vector<BigInt>& torsion) {
  json out = json::array();
  for (const auto& t : torsion) {
    if (fits_int64(t))
      out.push_back(t.get_si());
    else
      out.push_back(to_string(t));
  }
  return out;
}

json torsion_to_json(const std::vector<LaurentPoly>& torsion) {
  json out = json::array();
  for (const auto& t : torsion) out.push_back(t.to_string());
  return out;
}

template <typename R>
json report_to_json(const ChainHomologyReport<R>& report) {
  json out = json::object();
  for (size_t i = 0; i < report.groups.size(); ++i)
    out[std::to_string(i)] = {{"rank", report.groups[i].rank},
                              {"torsion", torsion_to_json(report.groups[i].torsion)}};
  return out;
}

}  // namespace

json to_json(const ValidationReport& report) {
  json out = json::object();
  for (const auto& [name, check] : report.items()) {
    json item = {{"ok", check->ok}};
    if (!check->ok) {
      item["detail"] = check->detail;
      if (check->witness) item["witness"] = check->witness->to_string();
    }
    out[name] = item;
  }
  out["ok"] = report.ok();
  if (!report.ok()) out["first_failure"] = report.first_failure();
  return out;
}

json to_json(const HomologyReport& report) { return report_to_json(report); }
json to_json(const TwistedReport& report) { return report_to_json(report); }

json to_json(const EulerReport& report) {
  return {{"ichi", report.ichi},
          {"chi", report.chi},
          {"n", report.n},
          {"signed_ih", report.signed_ih},
          {"signed_lci", report.signed_lci}};
}

json to_json(const WitnessReport& report) {
  json out;
  out["n"] = report.n;
  out["twisted_ih_ranks"] = report.ih_ranks;
  out["twisted_h_ranks"] = report.h_ranks;
  out["ichi"] = report.ichi;
  out["chi"] = report.chi;
  out["ih"] = {{"applicable", report.ih_applicable},
               {"offending_degrees", report.ih_offending},
               {"witness", report.ih_witness},
               {"identity_ok", report.ih_identity_ok}};
  out["h"] = {{"applicable", report.h_applicable},
              {"offending_degrees", report.h_offending},
              {"witness", report.h_witness},
              {"identity_ok", report.h_identity_ok}};
  return out;
}

json to_json(const CrosscheckResult& result) {
  json out = {{"ok", result.ok}};
  if (!result.ok) {
    out["degree"] = result.degree;
    out["row"] = result.row;
    out["col"] = result.col;
    out["detail"] = result.detail;
  }
  return out;
}

json to_json(const CocycleCheck& check) {
  json out = {{"valid", check.valid}, {"surjective", check.surjective}};
  if (check.violation) out["violation"] = check.violation->to_string();
  json values = json::array();
  for (const auto& v : check.cycle_values) {
    if (fits_int64(v))
      values.push_back(v.get_si());
    else
      values.push_back(to_string(v));
  }
  out["cycle_values"] = values;
  return out;
}

std::vector<std::string> emit_catalog_entry(const catalog::Entry& entry,
                                            const std::string& directory) {
  std::filesystem::create_directories(directory);
  std::vector<std::string> written;
  const std::string complex_path = directory + "/" + entry.name + ".v1";
  write_file(complex_path, emit_complex(entry.complex));
  written.push_back(complex_path);
  for (const auto& [name, w] : entry.cocycles) {
    const std::string path =
        directory + "/" + entry.name + "." + name + ".cocycle.v1";
    write_file(path, emit_cocycle(w));
    written.push_back(path);
  }
  return written;
}

}  // namespace strathom::io
