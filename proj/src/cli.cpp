#include "infgon/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include "infgon/errors.hpp"
#include "infgon/family_io.hpp"
#include "infgon/oracle.hpp"
#include "infgon/render.hpp"
#include "infgon/report.hpp"
#include "infgon/service.hpp"

namespace infgon::cli {

namespace {

using report::Json;
using report::to_json;

struct UsageError : Error {
  using Error::Error;
};

std::pair<Int, Int> two_ints(const std::string& text, char sep, const char* what) {
  auto cut = text.find(sep, text.empty() || text[0] != '-' ? 0 : 1);
  auto num = [&](std::string_view s) {
    Int v = 0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || end != s.data() + s.size())
      throw UsageError(std::string(what) + " must look like A" + sep + "B, got '" + text + "'");
    return v;
  };
  if (cut == std::string::npos)
    throw UsageError(std::string(what) + " must look like A" + sep + "B, got '" + text + "'");
  std::string_view sv(text);
  return {num(sv.substr(0, cut)), num(sv.substr(cut + 1))};
}

Window window_arg(const std::string& text) {
  auto [lo, hi] = two_ints(text, ':', "--window");
  if (lo > hi) throw UsageError("--window needs LO <= HI");
  return {lo, hi};
}

Arc arc_arg(const std::string& text, const char* what) {
  auto [m, n] = two_ints(text, ',', what);
  Arc a{m, n};
  if (!a.valid()) throw UsageError(std::string(what) + " " + to_string(a) + " violates m <= n-2");
  return a;
}

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

std::string join(const std::set<Int>& s) {
  if (s.empty()) return "none";
  std::string out;
  for (Int v : s) out += (out.empty() ? "" : " ") + std::to_string(v);
  return out;
}

struct Options {
  bool json = false;
  std::string file;
  std::string window;
  std::string arc;
  std::string x, y;
  std::string output;
  bool dot = false;
  Int vertices = oracle::kDefaultVertexLimit;
  std::string host = "127.0.0.1";
  int port = 8080;
};

int cmd_validate(const Options& o, std::ostream& out) {
  const auto doc = parse_document(read_text(o.file));
  try {
    const ArcFamily f = to_family(doc);
    if (o.json)
      out << report::dump({{"valid", true}, {"document", serialize_family(f)}, {"family", to_json(f)}});
    else
      out << "valid: " << f.orbits.size() << " orbits, " << f.removed.size() << " removals\n";
    return kOk;
  } catch (const ParseError& e) {
    if (o.json)
      out << report::dump({{"valid", false}, {"line", e.line}, {"error", e.message}});
    else
      out << "invalid: " << e.what() << "\n";
    return kVerdictFailed;
  }
}

int cmd_classify(const Options& o, std::ostream& out) {
  const auto c = classify(parse_family(read_text(o.file)));
  if (o.json) {
    out << report::dump(to_json(c));
  } else {
    out << (c.locally_finite ? "locally finite" : "not locally finite") << "\n"
        << "left fountains: " << join(c.left_fountains) << "\n"
        << "right fountains: " << join(c.right_fountains) << "\n"
        << "fountains: " << join(c.fountains) << "\n";
  }
  return kOk;
}

int cmd_maximal(const Options& o, std::ostream& out) {
  const ArcFamily f = parse_family(read_text(o.file));
  if (!o.window.empty()) {
    const auto v = is_window_maximal(f, window_arg(o.window));
    if (o.json) out << report::dump(to_json(v));
    else out << describe(v) << "\n";
    return std::holds_alternative<Maximal>(v) ? kOk : kVerdictFailed;
  }
  const auto c = certify_global_maximal(f);
  if (o.json) out << report::dump(to_json(c));
  else out << describe(c) << "\n";
  return std::holds_alternative<Certified>(c) ? kOk : kVerdictFailed;
}

int cmd_ff(const Options& o, std::ostream& out) {
  const ArcFamily f = parse_family(read_text(o.file));
  const auto cert = certify_global_maximal(f);
  if (!std::holds_alternative<Certified>(cert)) {
    if (o.json) out << report::dump({{"certificate", to_json(cert)}, {"ff", nullptr}});
    else out << "not certified maximal: " << describe(cert) << "\n";
    return kVerdictFailed;
  }
  const auto v = functorially_finite(f);
  if (o.json) {
    out << report::dump({{"certificate", to_json(cert)}, {"ff", to_json(v)}});
  } else {
    out << (v.functorially_finite ? "functorially finite" : "not functorially finite") << " ("
        << to_string(v.reason);
    if (v.left_fountain) out << ", left fountain " << *v.left_fountain;
    if (v.right_fountain) out << ", right fountain " << *v.right_fountain;
    out << ")\n";
  }
  return v.functorially_finite ? kOk : kVerdictFailed;
}

int cmd_hom(const Options& o, std::ostream& out) {
  const Ind x = to_ind(arc_arg(o.x, "--x"));
  const Ind y = to_ind(arc_arg(o.y, "--y"));
  if (o.json)
    out << report::dump({{"x", to_json(x)},
                         {"y", to_json(y)},
                         {"forward", hom_dim(x, y)},
                         {"backward", hom_dim(y, x)},
                         {"kind", to_string(morphism_kind(x, y))}});
  else
    out << hom_dim(x, y) << "\n";
  return kOk;
}

int cmd_mutate(const Options& o, std::ostream& out, std::ostream& err) {
  const ArcFamily f = parse_family(read_text(o.file));
  const Arc a = arc_arg(o.arc, "--arc");
  Arc star;
  try {
    star = exchange_arc(f, a);
  } catch (const NotMemberError& e) {
    err << "infgon: " << e.what() << "\n";
    return kVerdictFailed;
  } catch (const NotMutableError& e) {
    err << "infgon: " << e.what() << "\n";
    return kVerdictFailed;
  }
  const ArcFamily g = mutate(f, a);
  const std::string doc = serialize_family(g);
  if (!o.output.empty()) write_text(o.output, doc);

  if (o.json) {
    out << report::dump({{"arc", to_json(a)},
                         {"exchange", to_json(star)},
                         {"sides", to_json(exchange_sides(f, a))},
                         {"family", doc}});
  } else if (o.output.empty()) {
    out << doc;
  } else {
    out << to_string(a) << " -> " << to_string(star) << ", written to " << o.output << "\n";
  }
  return kOk;
}

int cmd_quiver(const Options& o, std::ostream& out) {
  const Quiver q = cluster_quiver(parse_family(read_text(o.file)), window_arg(o.window));
  if (o.json) {
    out << report::dump(to_json(q));
  } else if (o.dot) {
    out << to_dot(q);
  } else {
    out << q.vertices().size() << " vertices, " << q.arrow_count() << " arrows\n";
    for (const auto& [e, m] : q.arrows()) {
      out << "  " << to_string(e.first) << " -> " << to_string(e.second);
      if (m > 1) out << " x" << m;
      out << "\n";
    }
  }
  return kOk;
}

int cmd_render(const Options& o, std::ostream& out) {
  const std::string svg = render_svg(parse_family(read_text(o.file)), window_arg(o.window));
  if (o.output.empty()) {
    out << svg;
  } else {
    write_text(o.output, svg);
    if (o.json) out << report::dump({{"output", o.output}, {"bytes", svg.size()}});
    else out << "wrote " << o.output << "\n";
  }
  return kOk;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  const Int limit = oracle::vertex_limit();
  if (o.vertices < 4 || o.vertices > limit)
    throw UsageError("--vertices must be in [4, " + std::to_string(limit) +
                     "] (INFGON_ORACLE_LIMIT)");
  const auto r = oracle::run_suite(o.vertices);
  if (o.json) {
    Json checks = Json::array();
    for (const auto& c : r.checks)
      checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    out << report::dump(
        {{"vertices", r.vertices}, {"counts", r.counts}, {"checks", checks}, {"passed", r.passed()}});
  } else {
    oracle::print(out, r);
  }
  return r.passed() ? kOk : kVerdictFailed;
}

int cmd_serve(const Options& o, std::ostream& out) {
  out << "serving " << service::endpoints().size() << " endpoints on http://" << o.host << ':'
      << o.port << "\n"
      << std::flush;
  if (!service::serve(o.host, o.port)) throw UsageError("cannot listen on port " + std::to_string(o.port));
  return kOk;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact combinatorics of triangulations of the infinity-gon", "infgon"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Machine-readable output");

  auto file = [&](CLI::App* sub) {
    sub->add_option("FILE", o.file, "Family document ('-' for stdin)")->required();
  };

  auto* validate = app.add_subcommand("validate", "Parse and validate a family document");
  file(validate);
  auto* classify_cmd = app.add_subcommand("classify", "Local finiteness and fountains");
  file(classify_cmd);
  auto* maximal = app.add_subcommand("maximal", "Window or global maximality");
  file(maximal);
  maximal->add_option("--window", o.window, "LO:HI");
  auto* ff = app.add_subcommand("ff", "Functorial finiteness of a maximal family");
  file(ff);
  auto* hom = app.add_subcommand("hom", "dim Hom(x, y)");
  hom->add_option("--x", o.x, "M,N")->required();
  hom->add_option("--y", o.y, "P,Q")->required();
  auto* mutate_cmd = app.add_subcommand("mutate", "Flip one arc");
  file(mutate_cmd);
  mutate_cmd->add_option("--arc", o.arc, "M,N")->required();
  mutate_cmd->add_option("-o,--output", o.output, "Write the new document here");
  auto* quiver = app.add_subcommand("quiver", "Cluster quiver on a window");
  file(quiver);
  quiver->add_option("--window", o.window, "LO:HI")->required();
  quiver->add_flag("--dot", o.dot, "Graphviz output");
  auto* render = app.add_subcommand("render", "SVG arc diagram");
  file(render);
  render->add_option("--window", o.window, "LO:HI")->required();
  render->add_option("-o,--output", o.output, "OUT.svg");
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force window suite");
  oracle_cmd->add_option("--vertices", o.vertices, "Largest polygon size");
  auto* serve = app.add_subcommand("serve", "HTTP service");
  serve->add_option("--port", o.port, "Port");
  serve->add_option("--host", o.host, "Bind address");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*validate) return cmd_validate(o, out);
    if (*classify_cmd) return cmd_classify(o, out);
    if (*maximal) return cmd_maximal(o, out);
    if (*ff) return cmd_ff(o, out);
    if (*hom) return cmd_hom(o, out);
    if (*mutate_cmd) return cmd_mutate(o, out, err);
    if (*quiver) return cmd_quiver(o, out);
    if (*render) return cmd_render(o, out);
    if (*oracle_cmd) return cmd_oracle(o, out);
    if (*serve) return cmd_serve(o, out);
  } catch (const ParseError& e) {
    const std::string name = o.file == "-" ? "<stdin>" : o.file;
    err << "infgon: " << (name.empty() ? std::string() : name + ": ") << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "infgon: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "infgon: " << e.what() << "\n";
    return kVerdictFailed;
  } catch (const std::exception& e) {
    err << "infgon: " << e.what() << "\n";
    return kVerdictFailed;
  }
  return kUsage;
}

}  // namespace infgon::cli
