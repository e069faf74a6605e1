// Command-line front end: generate, color, verify, search, probe and export
// complex documents. Documents are read from --in (default stdin) and
// written to --out (default stdout).
//
// Exit status: 0 when the requested level (or search) succeeds, 1 when it
// fails, 2 on usage and input errors.

#include <cstdlib>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "etcc/document.hpp"
#include "etcc/error.hpp"
#include "etcc/render.hpp"
#include "etcc/search.hpp"

namespace {

using namespace etcc;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

std::size_t search_bound() {
  const char* env = std::getenv("ETCC_SEARCH_BOUND");
  if (!env || !*env) return kDefaultSearchBound;
  try {
    return static_cast<std::size_t>(std::stoull(env));
  } catch (const std::exception&) {
    throw Error(Errc::ParseError, std::string("ETCC_SEARCH_BOUND must be a cell count, got '") + env + "'");
  }
}

ComplexDocument load(const std::string& path) {
  if (path != "-") return read_document(path);
  std::string text{std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  return parse_document(text);
}

void emit(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
  } else {
    write_text(path, text);
  }
}

std::optional<Derivation> derivation_of(const ComplexDocument& doc) {
  if (!doc.spec) return std::nullopt;
  Derivation d = derive(TilingSpec::parse(*doc.spec));
  if (!(d.result == doc.complex)) throw Error(Errc::ParseError, "document cells do not match its spec");
  return d;
}

// Level L passes when L1 passes (L = axioms) or when every level from L2 up
// to L is not failing.
bool level_passes(const VerificationReport& r, Level level) {
  if (level == Level::axioms) return r.levels[0].ok();
  return r.coloring_summary >= static_cast<int>(level);
}

struct Options {
  std::string in = "-";
  std::string out = "-";
  std::string spec;
  std::string scheme;
  std::string preset;
  std::string level = "setcc";
  std::string mode = "first";
  std::string fix;
  std::string format = "json";
  int k = -1;
  std::size_t count_limit = 1000000;
  unsigned threads = 1;
};

int cmd_generate(const Options& o) {
  emit(o.out, to_json(document_for(TilingSpec::parse(o.spec))));
  return kOk;
}

int cmd_color(const Options& o) {
  ComplexDocument doc = load(o.in);
  const std::optional<Derivation> d = derivation_of(doc);
  if (!d) throw Error(Errc::UnknownScheme, "coloring schemes need a document generated from a spec");
  if (!o.preset.empty()) {
    doc.colors = color_snub_choice(*d, snub_preset(o.preset).choice);
  } else {
    const Scheme scheme = o.scheme.empty() ? default_scheme(d->spec.family) : parse_scheme(o.scheme);
    doc.colors = color_derivation(*d, scheme);
  }
  doc.report.reset();
  doc.unsat.reset();
  emit(o.out, to_json(doc));
  return kOk;
}

int cmd_verify(const Options& o) {
  ComplexDocument doc = load(o.in);
  if (!doc.colors) throw Error(Errc::ParseError, "document has no coloring to verify");
  const Level level = parse_level(o.level);
  doc.report = verify(doc.complex, *doc.colors);
  emit(o.out, to_json(doc));
  std::cerr << "summary L" << doc.report->summary << ", coloring summary L" << doc.report->coloring_summary << "\n";
  return level_passes(*doc.report, level) ? kOk : kFailed;
}

int cmd_search(const Options& o) {
  ComplexDocument doc = load(o.in);
  SearchOptions so;
  so.level = parse_level(o.level);
  so.mode = parse_search_mode(o.mode);
  so.count_limit = o.count_limit;
  so.threads = o.threads;
  so.max_cells = search_bound();
  if (o.k >= 0) {
    so.k = o.k;
  } else if (doc.spec) {
    so.k = family_k(TilingSpec::parse(*doc.spec).family);
  } else if (doc.colors) {
    so.k = doc.colors->k;
  }
  if (!o.fix.empty()) {
    const ComplexDocument fixed = read_document(o.fix);
    if (!fixed.colors) throw Error(Errc::ParseError, "fix file has no colors");
    if (!(fixed.complex == doc.complex)) throw Error(Errc::ParseError, "fix file describes a different complex");
    so.fixed.assign(doc.complex.size(), std::nullopt);
    for (CellId id = 0; id < doc.complex.size(); ++id) {
      if ((*fixed.colors)[id] >= 0) so.fixed[id] = (*fixed.colors)[id];
    }
  }
  const SearchResult r = solve(doc.complex, so);
  std::cerr << "search: " << r.nodes << " nodes, " << r.count << (so.mode == SearchMode::count ? " solutions" : " found")
            << "\n";
  if (so.mode == SearchMode::count) {
    emit(o.out, std::to_string(r.count) + "\n");
    return r.satisfiable() ? kOk : kFailed;
  }
  doc.report.reset();
  if (r.solution) {
    doc.colors = r.solution;
    doc.unsat.reset();
  } else if (!r.satisfiable()) {
    doc.colors.reset();
    doc.unsat = "no coloring at level " + std::string(to_string(so.level)) + " with k = " + std::to_string(so.k);
  }
  emit(o.out, to_json(doc));
  return r.satisfiable() ? kOk : kFailed;
}

int cmd_probe(const Options& o) {
  const ComplexDocument doc = load(o.in);
  int k = o.k;
  if (k < 0) k = doc.spec ? family_k(TilingSpec::parse(*doc.spec).family) : 6;
  const ConjectureProbe p = probe_conjecture(doc.complex, k, search_bound(), o.threads);
  std::ostringstream out;
  out << "k=" << k << " etc_like_exists=" << (p.etc_like_exists ? "true" : "false")
      << " etcc_exists=" << (p.etcc_exists ? "true" : "false") << "\n";
  emit(o.out, out.str());
  return kOk;
}

int cmd_export(const Options& o) {
  const ComplexDocument doc = load(o.in);
  if (o.format == "json") {
    emit(o.out, to_json(doc));
  } else if (o.format == "dot") {
    emit(o.out, to_dot(doc));
  } else if (o.format == "svg") {
    emit(o.out, to_svg(doc));
  } else {
    throw Error(Errc::ParseError, "unknown export format '" + o.format + "'");
  }
  return kOk;
}

int exit_code(const Error& e) {
  switch (e.code()) {
    case Errc::ParseError:
    case Errc::IoError:
    case Errc::UnknownFamily:
    case Errc::UnknownScheme:
    case Errc::SizeBound:
    case Errc::InconsistentFixed:
      return kUsage;
    default:
      return kFailed;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Efficient total colorings of toroidal cell complexes"};
  app.require_subcommand(1);
  Options o;

  auto add_io = [&](CLI::App* sub, bool input) {
    if (input) sub->add_option("--in", o.in, "input document (- for stdin)");
    sub->add_option("--out", o.out, "output path (- for stdout)");
  };

  CLI::App* generate = app.add_subcommand("generate", "build the complex for a tiling spec");
  generate->add_option("--spec", o.spec, "family[@u=a,b;v=c,d][;chirality=anti|main]")->required();
  add_io(generate, false);

  CLI::App* color = app.add_subcommand("color", "color a generated complex");
  color->add_option("--scheme", o.scheme, "closed_form, dual, line, carved or search (default: the family's)");
  color->add_option("--preset", o.preset, "cr3_3_4_3_4 square colors: a_a, a_b, b_a or b_b");
  add_io(color, true);

  CLI::App* verify_cmd = app.add_subcommand("verify", "attach a verification report");
  verify_cmd->add_option("--level", o.level, "level that decides the exit status");
  add_io(verify_cmd, true);

  CLI::App* search = app.add_subcommand("search", "search for a coloring");
  search->add_option("--level", o.level, "proper_total, etc, etcc or setcc");
  search->add_option("--mode", o.mode, "first, exists or count");
  search->add_option("--fix", o.fix, "document whose non-negative colors are kept fixed");
  search->add_option("--k", o.k, "largest color number (default: the family's)");
  search->add_option("--count-limit", o.count_limit, "count mode stops here");
  search->add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
  add_io(search, true);

  CLI::App* probe = app.add_subcommand("probe", "decide ETC-like and ETCC existence");
  probe->add_option("--k", o.k, "largest color number");
  probe->add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
  add_io(probe, true);

  CLI::App* export_cmd = app.add_subcommand("export", "write json, dot or svg");
  export_cmd->add_option("--format", o.format, "json, dot or svg");
  add_io(export_cmd, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*generate) return cmd_generate(o);
    if (*color) return cmd_color(o);
    if (*verify_cmd) return cmd_verify(o);
    if (*search) return cmd_search(o);
    if (*probe) return cmd_probe(o);
    if (*export_cmd) return cmd_export(o);
  } catch (const Error& e) {
    std::cerr << "etcc: " << e.what() << "\n";
    return exit_code(e);
  }
  return kUsage;
}
