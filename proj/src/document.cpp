#include "etcc/document.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "etcc/error.hpp"

namespace etcc {

namespace {

using nlohmann::json;

json report_json(const VerificationReport& r) {
  json levels = json::object();
  for (int i = 1; i <= 5; ++i) {
    const auto level = static_cast<Level>(i);
    const LevelResult& lr = r.at(level);
    json witnesses = json::array();
    for (const Witness& w : lr.witnesses) witnesses.push_back({{"cells", w.cells}, {"reason", w.reason}});
    levels[std::string(level_key(level))] = {{"outcome", std::string(to_string(lr.outcome))},
                                             {"violations", lr.violations},
                                             {"witnesses", witnesses},
                                             {"note", lr.note}};
  }
  return {{"summary", r.summary}, {"coloring_summary", r.coloring_summary}, {"levels", levels}};
}

Outcome parse_outcome(const std::string& text) {
  for (Outcome o : {Outcome::pass, Outcome::fail, Outcome::not_applicable}) {
    if (text == to_string(o)) return o;
  }
  throw Error(Errc::ParseError, "unknown outcome '" + text + "'");
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(Errc::ParseError, std::string("missing field '") + key + "'");
  return j.at(key);
}

long long integer(const json& j, const char* what) {
  if (!j.is_number_integer()) throw Error(Errc::ParseError, std::string(what) + " must be an integer");
  return j.get<long long>();
}

std::vector<CellId> id_list(const json& j, const char* what) {
  if (!j.is_array()) throw Error(Errc::ParseError, std::string(what) + " must be an array");
  std::vector<CellId> out;
  for (const json& e : j) {
    const long long v = integer(e, what);
    if (v < 0) throw Error(Errc::ParseError, std::string(what) + " must be non-negative");
    out.push_back(static_cast<CellId>(v));
  }
  return out;
}

VerificationReport parse_report(const json& j) {
  VerificationReport r;
  r.summary = static_cast<int>(integer(field(j, "summary"), "summary"));
  r.coloring_summary = static_cast<int>(integer(field(j, "coloring_summary"), "coloring_summary"));
  const json& levels = field(j, "levels");
  for (int i = 1; i <= 5; ++i) {
    const json& lj = field(levels, std::string(level_key(static_cast<Level>(i))).c_str());
    LevelResult& lr = r.levels[i - 1];
    lr.outcome = parse_outcome(field(lj, "outcome").get<std::string>());
    lr.violations = static_cast<std::size_t>(integer(field(lj, "violations"), "violations"));
    lr.note = field(lj, "note").get<std::string>();
    for (const json& w : field(lj, "witnesses")) {
      lr.witnesses.push_back({id_list(field(w, "cells"), "witness cells"), field(w, "reason").get<std::string>()});
    }
  }
  return r;
}

}  // namespace

ComplexDocument document_for(const TilingSpec& spec) {
  ComplexDocument doc;
  doc.spec = spec.to_string();
  doc.torus = spec.lattice.to_string();
  doc.complex = gen_family(spec);
  return doc;
}

std::string to_json(const ComplexDocument& doc) {
  json j;
  j["version"] = doc.version;
  if (doc.spec) j["spec"] = *doc.spec;
  if (doc.torus) j["torus"] = *doc.torus;
  json cells = json::array();
  for (const Cell& c : doc.complex.cells()) {
    std::vector<CellId> vertices = c.vertices;
    cells.push_back({{"id", c.id}, {"rank", c.rank}, {"vertices", vertices}});
  }
  j["cells"] = cells;
  if (doc.colors) {
    j["k"] = doc.colors->k;
    j["colors"] = doc.colors->colors;
  }
  if (doc.report) j["report"] = report_json(*doc.report);
  if (doc.unsat) j["unsat"] = *doc.unsat;
  return j.dump(2) + "\n";
}

ComplexDocument parse_document(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, std::string("invalid JSON: ") + e.what());
  }
  ComplexDocument doc;
  try {
    doc.version = static_cast<int>(integer(field(j, "version"), "version"));
    if (doc.version != kDocumentVersion) {
      throw Error(Errc::ParseError, "unsupported document version " + std::to_string(doc.version));
    }
    if (j.contains("spec")) doc.spec = j.at("spec").get<std::string>();
    if (j.contains("torus")) doc.torus = j.at("torus").get<std::string>();
    std::vector<Cell> cells;
    for (const json& c : field(j, "cells")) {
      Cell cell;
      cell.id = static_cast<CellId>(integer(field(c, "id"), "cell id"));
      cell.rank = static_cast<int>(integer(field(c, "rank"), "cell rank"));
      cell.vertices = id_list(field(c, "vertices"), "cell vertices");
      cells.push_back(std::move(cell));
    }
    try {
      doc.complex = build_complex(std::move(cells));
    } catch (const Error& e) {
      throw Error(Errc::ParseError, std::string("cells do not form a complex: ") + e.what());
    }
    if (j.contains("colors")) {
      ColorAssignment c;
      c.k = static_cast<int>(integer(field(j, "k"), "k"));
      for (const json& v : j.at("colors")) c.colors.push_back(static_cast<Color>(integer(v, "color")));
      if (c.colors.size() != doc.complex.size()) {
        throw Error(Errc::ParseError, "colors cover " + std::to_string(c.colors.size()) + " cells, document has " +
                                          std::to_string(doc.complex.size()));
      }
      doc.colors = std::move(c);
    }
    if (j.contains("report")) doc.report = parse_report(j.at("report"));
    if (j.contains("unsat")) doc.unsat = j.at("unsat").get<std::string>();
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, std::string("malformed document: ") + e.what());
  }
  if (doc.spec) {
    try {
      const CellComplex planned = gen_family(TilingSpec::parse(*doc.spec));
      if (planned == doc.complex && planned.embedding()) doc.complex = doc.complex.with_embedding(*planned.embedding());
    } catch (const Error&) {
      // no drawing coordinates then
    }
  }
  return doc;
}

ComplexDocument read_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::IoError, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_document(buffer.str());
}

void write_text(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::IoError, "cannot write '" + path + "'");
  out << text;
  if (!out) throw Error(Errc::IoError, "write to '" + path + "' failed");
}

}  // namespace etcc
